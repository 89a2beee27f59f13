//! Independent oracles for the acceptance run. None of them call into the
//! library except to build inputs.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Rank over F2 of a list of rows given as dense bit vectors.
pub fn rank(rows: &[Vec<bool>]) -> usize {
    let mut rows: Vec<Vec<bool>> = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        r += 1;
    }
    r
}

/// The braces word for `θ₀` and sizes `(p, 1)`: `p+1, 1, p+1, 2, …, p, p+1`.
pub fn braces_word(p: usize) -> Vec<usize> {
    let top = p + 1;
    let mut w = vec![top];
    for k in 1..=p {
        w.push(k);
        w.push(top);
    }
    w
}

/// The word of the `E¹_{pq}` table for `θ₁` and sizes `(p, q)`, with the
/// labels of the second interval numbered `p+1..=p+q`.
///
/// Block 0 is `(1₂ | 1₁,1₂ | … | (p−1)₁,1₂ | p₁)`, block 1 is
/// `(1₂,p₁ | 2₂,p₁ | … | q₂,p₁)`.
pub fn e1_word(p: usize, q: usize) -> Vec<usize> {
    let second = |k: usize| p + k;
    let mut rows: Vec<Vec<usize>> = vec![vec![second(1)]];
    for k in 1..p {
        rows.push(vec![k, second(1)]);
    }
    rows.push(vec![p]);
    for k in 1..=q {
        rows.push(vec![second(k), p]);
    }
    rows.concat()
}

/// `binom(n, k) mod 2` from Pascal's triangle.
pub fn binomial_mod2(n: usize, k: usize) -> bool {
    let mut row = vec![true];
    for _ in 0..n {
        let mut next = vec![true; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] ^ row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(false)
}

/// Cobar construction on the normalized chains of `Δⁿ/sk₁Δⁿ` with the
/// Alexander-Whitney diagonal. Non-degenerate simplices besides the base
/// point are the vertex subsets of size at least 3; a face with two
/// vertices is a degenerate edge, a face with one is the base point.
pub struct Cobar {
    cells: Vec<Vec<usize>>,
}

type CobarWord = Vec<usize>;

impl Cobar {
    pub fn simplex_mod_one_skeleton(n: usize) -> Self {
        let mut cells: Vec<Vec<usize>> = (0u32..1 << (n + 1))
            .filter(|m| m.count_ones() >= 3)
            .map(|m| (0..=n).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        cells.sort_by_key(|c| (c.len(), c.clone()));
        Cobar { cells }
    }

    fn index(&self, cell: &[usize]) -> Option<usize> {
        self.cells.iter().position(|c| c == cell)
    }

    /// Desuspended degree of a cell: its dimension minus one.
    fn weight(&self, i: usize) -> usize {
        self.cells[i].len() - 2
    }

    fn words(&self, degree: usize) -> Vec<CobarWord> {
        if degree == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.cells.len() {
            let w = self.weight(i);
            if w <= degree {
                for mut rest in self.words(degree - w) {
                    rest.insert(0, i);
                    out.push(rest);
                }
            }
        }
        out
    }

    /// Internal boundary plus reduced diagonal, applied letter by letter.
    fn differential(&self, word: &CobarWord) -> BTreeMap<CobarWord, bool> {
        let mut out: BTreeMap<CobarWord, bool> = BTreeMap::new();
        let mut toggle = |w: CobarWord| {
            let e = out.entry(w).or_insert(false);
            *e = !*e;
        };
        for (j, &x) in word.iter().enumerate() {
            let cell = &self.cells[x];
            for drop in 0..cell.len() {
                let mut face = cell.clone();
                face.remove(drop);
                if let Some(f) = self.index(&face) {
                    let mut w = word.clone();
                    w[j] = f;
                    toggle(w);
                }
            }
            for split in 2..cell.len() - 2 {
                let (a, b) = (self.index(&cell[..=split]), self.index(&cell[split..]));
                if let (Some(a), Some(b)) = (a, b) {
                    let mut w = word[..j].to_vec();
                    w.extend([a, b]);
                    w.extend_from_slice(&word[j + 1..]);
                    toggle(w);
                }
            }
        }
        out.retain(|_, v| *v);
        out
    }

    fn matrix(&self, from: usize) -> (usize, usize, Vec<Vec<bool>>) {
        let src = self.words(from);
        let dst = if from == 0 {
            Vec::new()
        } else {
            self.words(from - 1)
        };
        let pos: BTreeMap<&CobarWord, usize> =
            dst.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let rows = src
            .iter()
            .map(|w| {
                let mut row = vec![false; dst.len()];
                for t in self.differential(w).into_keys() {
                    row[pos[&t]] = true;
                }
                row
            })
            .collect();
        (src.len(), dst.len(), rows)
    }

    /// `d² = 0` on words of the given degree.
    pub fn square_zero(&self, degree: usize) -> bool {
        self.words(degree).iter().all(|w| {
            let mut acc: BTreeMap<CobarWord, bool> = BTreeMap::new();
            for t in self.differential(w).into_keys() {
                for s in self.differential(&t).into_keys() {
                    let e = acc.entry(s).or_insert(false);
                    *e = !*e;
                }
            }
            acc.values().all(|v| !v)
        })
    }

    /// Homology dimensions in degrees `0..=max`.
    pub fn homology(&self, max: usize) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=max + 1).map(|n| rank(&self.matrix(n).2)).collect();
        (0..=max)
            .map(|n| self.words(n).len() - ranks[n] - ranks[n + 1])
            .collect()
    }
}

/// A graded commutative algebra over F2 with a monomial basis: basis
/// element `i` has degree `degrees[i]`, element 0 is the unit, and products
/// of basis elements are basis elements or zero.
pub struct MonomialAlgebra {
    pub degrees: Vec<usize>,
    pub mul: fn(usize, usize) -> Option<usize>,
}

impl MonomialAlgebra {
    /// `F2[x]/(x^height)` with `x` in degree `deg`.
    pub fn truncated(deg: usize, height: usize) -> Self {
        fn mul3(a: usize, b: usize) -> Option<usize> {
            (a + b < 3).then_some(a + b)
        }
        assert_eq!(height, 3, "only x^3 = 0 is wired up");
        MonomialAlgebra {
            degrees: (0..height).map(|i| i * deg).collect(),
            mul: mul3,
        }
    }
}

/// Dimensions of `Tor^A_{s,t}(F2, F2)` for `s ≤ max_s`, `t ≤ max_t`, read
/// off a minimal free resolution built degree by degree.
pub fn tor_dims(
    alg: &MonomialAlgebra,
    max_s: usize,
    max_t: usize,
) -> BTreeMap<(usize, usize), usize> {
    let nb = alg.degrees.len();
    // gens[s] lists the internal degrees of the generators of F_s; images[s]
    // holds d(g) for each of them as a set of (generator of F_{s-1}, basis).
    let mut gens: Vec<Vec<usize>> = vec![vec![0]];
    let mut images: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![Vec::new()]];
    let basis_of = |gens: &[usize], t: usize| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, &g) in gens.iter().enumerate() {
            for a in 0..nb {
                if g + alg.degrees[a] == t {
                    out.push((j, a));
                }
            }
        }
        out
    };
    let apply = |images: &[Vec<(usize, usize)>], (j, a): (usize, usize)| -> Vec<(usize, usize)> {
        let mut out: BTreeMap<(usize, usize), bool> = BTreeMap::new();
        for &(k, b) in &images[j] {
            if let Some(c) = (alg.mul)(b, a) {
                let e = out.entry((k, c)).or_insert(false);
                *e = !*e;
            }
        }
        out.into_iter()
            .filter(|(_, v)| *v)
            .map(|(k, _)| k)
            .collect()
    };
    let to_row = |terms: &[(usize, usize)], basis: &[(usize, usize)]| -> Vec<bool> {
        let mut row = vec![false; basis.len()];
        for t in terms {
            let i = basis.iter().position(|b| b == t).expect("term in basis");
            row[i] ^= true;
        }
        row
    };
    for s in 1..=max_s {
        let mut new_gens: Vec<usize> = Vec::new();
        let mut new_images: Vec<Vec<(usize, usize)>> = Vec::new();
        for t in 0..=max_t {
            // Kernel of d_{s-1} (or of the augmentation when s = 1) in degree t.
            let source = basis_of(&gens[s - 1], t);
            if source.is_empty() {
                continue;
            }
            let kernel: Vec<Vec<bool>> = if s == 1 {
                source
                    .iter()
                    .map(|&(_, a)| {
                        let mut v = vec![false; source.len()];
                        v[source.iter().position(|&x| x == (0, a)).unwrap()] = alg.degrees[a] > 0;
                        v
                    })
                    .filter(|v| v.iter().any(|&b| b))
                    .collect()
            } else {
                let target = basis_of(&gens[s - 2], t);
                let rows: Vec<Vec<bool>> = source
                    .iter()
                    .map(|&b| to_row(&apply(&images[s - 1], b), &target))
                    .collect();
                null_space(&rows)
            };
            // Image of the generators of F_s found so far.
            let mut span: Vec<Vec<bool>> = basis_of(&new_gens, t)
                .into_iter()
                .map(|b| to_row(&apply(&new_images, b), &source))
                .collect();
            for k in kernel {
                let before = rank(&span);
                span.push(k.clone());
                if rank(&span) > before {
                    new_gens.push(t);
                    new_images.push(
                        source
                            .iter()
                            .zip(&k)
                            .filter(|(_, &b)| b)
                            .map(|(x, _)| *x)
                            .collect(),
                    );
                }
            }
        }
        gens.push(new_gens);
        images.push(new_images);
    }
    let mut out = BTreeMap::new();
    for (s, g) in gens.iter().enumerate() {
        for &t in g {
            *out.entry((s, t)).or_insert(0) += 1;
        }
    }
    out
}

/// Left null space of a matrix given by rows: combinations of rows that sum
/// to zero, as coefficient vectors.
pub fn null_space(rows: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    // Augment each row with the identity and reduce on the left part.
    let mut aug: Vec<Vec<bool>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| j == i));
            v
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..n).find(|&i| aug[i][c]) else {
            continue;
        };
        aug.swap(r, p);
        let pivot = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != r && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        r += 1;
    }
    aug[r..].iter().map(|row| row[cols..].to_vec()).collect()
}
