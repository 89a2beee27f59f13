//! The reduced bar construction of a surjection-operad algebra, with the
//! action of the Barratt–Eccles operad through admissible surjections.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::{Arc, RwLock};

use itertools::Itertools;

use crate::algebras::{Gen, SurjAlgebra};
use crate::barratt_eccles::PermSimplex;
use crate::error::{Error, Result};
use crate::f2chain::{ComplexSlice, FormalSum, Grade, Homology};
use crate::surjection::Surjection;

/// A tensor word `Σa₁ ⊗ … ⊗ Σa_n` of augmentation-ideal basis elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct BarWord(pub Vec<Gen>);

impl BarWord {
    pub fn empty() -> Self {
        BarWord(Vec::new())
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All splittings into `n` consecutive, possibly empty, blocks.
    pub fn deconcat(&self, n: usize) -> Vec<Vec<BarWord>> {
        if n == 0 {
            return if self.is_empty() {
                vec![Vec::new()]
            } else {
                Vec::new()
            };
        }
        let len = self.len();
        (0..=len)
            .combinations_with_replacement(n - 1)
            .map(|inner| {
                std::iter::once(0)
                    .chain(inner)
                    .chain(std::iter::once(len))
                    .tuple_windows()
                    .map(|(a, b)| BarWord(self.0[a..b].to_vec()))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for BarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join("|"))
    }
}

/// A label `k_s`: the `k`-th letter of the `s`-th input word, both 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntervalLabel {
    pub k: usize,
    pub s: usize,
}

impl fmt::Display for IntervalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.k, self.s)
    }
}

/// An admissible table: rows of labels, each tagged with its block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleTable {
    pub rows: Vec<Vec<IntervalLabel>>,
    pub blocks: Vec<usize>,
}

impl AdmissibleTable {
    /// The surjection obtained by linearizing labels interval by interval.
    pub fn surjection(&self, sizes: &[usize]) -> Surjection {
        let offsets: Vec<usize> = sizes
            .iter()
            .scan(0, |acc, &n| {
                let o = *acc;
                *acc += n;
                Some(o)
            })
            .collect();
        let word: Vec<u8> = self
            .rows
            .iter()
            .flatten()
            .map(|l| (offsets[l.s - 1] + l.k) as u8)
            .collect();
        Surjection::try_from_word(word, sizes.iter().sum::<usize>() as u8)
            .expect("admissible tables flatten to non-degenerate surjections")
    }
}

impl fmt::Display for AdmissibleTable {
    /// Rows separated by ` | `, with ` || ` where a new block starts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(if self.blocks[i] > self.blocks[i - 1] {
                    " || "
                } else {
                    " | "
                })?;
            }
            write!(f, "{}", row.iter().join(","))?;
        }
        Ok(())
    }
}

struct Search<'a> {
    w: &'a PermSimplex,
    sizes: &'a [usize],
    /// `pos[i][s]`: rank of interval `s` (0-based) in level `i`.
    pos: Vec<Vec<usize>>,
    out: Vec<AdmissibleTable>,
}

struct State {
    rows: Vec<Vec<IntervalLabel>>,
    blocks: Vec<usize>,
    last: Option<IntervalLabel>,
    opens: Vec<IntervalLabel>,
    next: Vec<usize>,
    block: usize,
}

impl Search<'_> {
    fn ordered(&self, level: usize, opens: &[IntervalLabel]) -> Vec<IntervalLabel> {
        let mut v = opens.to_vec();
        v.sort_by_key(|l| self.pos[level][l.s - 1]);
        v
    }

    fn exhausted(&self, next: &[usize]) -> bool {
        next.iter().zip(self.sizes).all(|(a, b)| a == b)
    }

    /// Pushes `row` as non-final (last entry stays open) and as final (all
    /// closed) when allowed, recursing on each.
    fn place(
        &mut self,
        st: &mut State,
        row: Vec<IntervalLabel>,
        closes: &[IntervalLabel],
        block: usize,
        may_finish: bool,
    ) {
        if st.last == Some(row[0]) {
            return;
        }
        let saved_opens = st.opens.clone();
        let saved_last = st.last;
        let saved_block = st.block;
        st.rows.push(row.clone());
        st.blocks.push(block);
        st.block = block;
        st.last = row.last().copied();
        // Non-final: interior entries close, the last stays open.
        st.opens.retain(|o| !closes.contains(o));
        st.opens.push(*row.last().expect("rows are nonempty"));
        self.recurse(st);
        if may_finish {
            st.opens.clear();
            self.recurse(st);
        }
        st.opens = saved_opens;
        st.last = saved_last;
        st.block = saved_block;
        st.rows.pop();
        st.blocks.pop();
    }

    fn recurse(&mut self, st: &mut State) {
        let d = self.w.degree();
        let r = self.sizes.len();
        if self.exhausted(&st.next) && st.opens.is_empty() {
            if st.block == d {
                self.out.push(AdmissibleTable {
                    rows: st.rows.clone(),
                    blocks: st.blocks.clone(),
                });
            }
            return;
        }
        let i = st.block;
        let op = self.ordered(i, &st.opens);
        for s in 1..=r {
            if st.next[s - 1] == self.sizes[s - 1] || st.opens.iter().any(|o| o.s == s) {
                continue;
            }
            // The new label must precede every open label in level i.
            if op
                .first()
                .is_some_and(|o| self.pos[i][s - 1] > self.pos[i][o.s - 1])
            {
                continue;
            }
            let head = IntervalLabel {
                k: st.next[s - 1] + 1,
                s,
            };
            st.next[s - 1] += 1;
            let done = self.exhausted(&st.next);
            for l in 0..=op.len() {
                let mut row = vec![head];
                row.extend_from_slice(&op[..l]);
                let closes = &op[..l];
                self.place(st, row, closes, i, done && l == op.len());
            }
            st.next[s - 1] -= 1;
        }
        if i < d && !st.opens.is_empty() {
            let op = self.ordered(i + 1, &st.opens);
            let done = self.exhausted(&st.next);
            for l in 1..=op.len() {
                let row = op[..l].to_vec();
                self.place(st, row, &op[..l], i + 1, done && l == op.len());
            }
        }
    }
}

/// Admissible tables for `w` and input sizes, as a set. The search applies
/// the row grammar directly; when `w` restricted to the nonempty intervals
/// is degenerate there are none.
pub fn admissible_tables(w: &PermSimplex, sizes: &[usize]) -> Result<Vec<AdmissibleTable>> {
    if sizes.len() != w.arity() {
        return Err(Error::ArityMismatch {
            expected: w.arity(),
            found: sizes.len(),
        });
    }
    if sizes.iter().all(|&n| n == 0) {
        return Ok(Vec::new());
    }
    if sizes.iter().sum::<usize>() + w.degree() > u8::MAX as usize / 2 {
        return Err(Error::InvalidInput("input words are too long".into()));
    }
    let keep: Vec<bool> = sizes.iter().map(|&n| n > 0).collect();
    if w.restrict(&keep).is_none() {
        return Ok(Vec::new());
    }
    let pos = w.levels().iter().map(|p| p.positions()).collect();
    let mut search = Search {
        w,
        sizes,
        pos,
        out: Vec::new(),
    };
    let mut st = State {
        rows: Vec::new(),
        blocks: Vec::new(),
        last: None,
        opens: Vec::new(),
        next: vec![0; sizes.len()],
        block: 0,
    };
    search.recurse(&mut st);
    Ok(search.out)
}

/// The admissible surjections over the label set, linearized interval by
/// interval, in increasing order.
pub fn admissible_surjections(w: &PermSimplex, sizes: &[usize]) -> Result<Vec<Surjection>> {
    let mut v: Vec<Surjection> = admissible_tables(w, sizes)?
        .iter()
        .map(|t| t.surjection(sizes))
        .collect();
    v.sort();
    v.dedup();
    Ok(v)
}

type AdmissibleCache = HashMap<(PermSimplex, Vec<usize>), Arc<Vec<Surjection>>>;
type ApplyCache = HashMap<(Surjection, Vec<Gen>), FormalSum<Gen>>;

/// The bar construction of a connected algebra. Cloning shares the memo
/// tables.
#[derive(Clone)]
pub struct Bar {
    alg: Arc<dyn SurjAlgebra>,
    admissible: Arc<RwLock<AdmissibleCache>>,
    applied: Arc<RwLock<ApplyCache>>,
}

impl Bar {
    pub fn new(alg: Arc<dyn SurjAlgebra>) -> Result<Self> {
        alg.check_connected()?;
        Ok(Bar {
            alg,
            admissible: Arc::default(),
            applied: Arc::default(),
        })
    }

    pub fn algebra(&self) -> &dyn SurjAlgebra {
        &*self.alg
    }

    /// Augmentation-ideal basis, the possible letters.
    pub fn letters(&self) -> Vec<Gen> {
        self.alg
            .basis()
            .iter()
            .filter(|g| self.alg.is_augmentation_ideal(g))
            .cloned()
            .collect()
    }

    /// Builds a word, checking that every letter is a non-unit basis element.
    pub fn word(&self, names: &[&str]) -> Result<BarWord> {
        names
            .iter()
            .map(|n| {
                let g = self
                    .alg
                    .generator(n)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown generator `{n}`")))?;
                if !self.alg.is_augmentation_ideal(g) {
                    return Err(Error::InvalidInput(format!(
                        "`{n}` is the unit, not a bar letter"
                    )));
                }
                Ok(g.clone())
            })
            .collect::<Result<Vec<_>>>()
            .map(BarWord)
    }

    /// Parses `[a|b|c]` or `[]`.
    pub fn parse_word(&self, s: &str) -> Result<BarWord> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a bracketed word, got `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(BarWord::empty());
        }
        let names: Vec<&str> = inner.split('|').map(str::trim).collect();
        self.word(&names).map_err(|e| match e {
            Error::InvalidInput(m) => Error::Parse(m),
            e => e,
        })
    }

    pub fn grade(&self, c: &BarWord) -> Grade {
        Grade(c.0.iter().map(|g| self.alg.grade(g).value() + 1).sum())
    }

    fn project(&self, x: FormalSum<Gen>) -> FormalSum<Gen> {
        x.into_keys()
            .filter(|g| self.alg.is_augmentation_ideal(g))
            .collect()
    }

    fn apply_cached(&self, u: &Surjection, letters: &[Gen]) -> Result<FormalSum<Gen>> {
        let key = (u.clone(), letters.to_vec());
        if let Some(v) = self.applied.read().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let v = self.project(self.alg.apply(u, letters)?);
        self.applied
            .write()
            .expect("cache lock")
            .insert(key, v.clone());
        Ok(v)
    }

    fn admissible_cached(&self, w: &PermSimplex, sizes: &[usize]) -> Result<Arc<Vec<Surjection>>> {
        let key = (w.clone(), sizes.to_vec());
        if let Some(v) = self.admissible.read().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let v = Arc::new(admissible_surjections(w, sizes)?);
        self.admissible
            .write()
            .expect("cache lock")
            .insert(key, v.clone());
        Ok(v)
    }

    /// `a ⌣₀ b`, projected to the augmentation ideal.
    pub fn product(&self, a: &Gen, b: &Gen) -> Result<FormalSum<Gen>> {
        self.apply_cached(&Surjection::identity(2), &[a.clone(), b.clone()])
    }

    /// Internal differential on each letter plus products of adjacent letters.
    pub fn differential(&self, c: &BarWord) -> Result<FormalSum<BarWord>> {
        let mut out = FormalSum::zero();
        for (i, a) in c.0.iter().enumerate() {
            for b in self.alg.differential(a).into_keys() {
                if self.alg.is_augmentation_ideal(&b) {
                    let mut v = c.0.clone();
                    v[i] = b;
                    out.toggle(BarWord(v));
                }
            }
        }
        for i in 0..c.len().saturating_sub(1) {
            for m in self.product(&c.0[i], &c.0[i + 1])?.into_keys() {
                let mut v = c.0[..i].to_vec();
                v.push(m);
                v.extend_from_slice(&c.0[i + 2..]);
                out.toggle(BarWord(v));
            }
        }
        Ok(out)
    }

    pub fn differential_of_sum(&self, x: &FormalSum<BarWord>) -> Result<FormalSum<BarWord>> {
        x.try_map_linear(|c| self.differential(c))
    }

    /// `w̃(c₁, …, c_r)`: the sum over admissible surjections of their action
    /// on all letters, fed in label order.
    pub fn tilde_op(&self, w: &PermSimplex, words: &[BarWord]) -> Result<FormalSum<Gen>> {
        let sizes: Vec<usize> = words.iter().map(BarWord::len).collect();
        let letters: Vec<Gen> = words.iter().flat_map(|c| c.0.iter().cloned()).collect();
        let mut out = FormalSum::zero();
        for u in self.admissible_cached(w, &sizes)?.iter() {
            out += self.apply_cached(u, &letters)?;
        }
        Ok(out)
    }

    /// The operation of `w` on bar words: the counit term plus, for each
    /// `n`, the tensor products of tilde operations over the `n`-fold
    /// diagonal of `w` and deconcatenations of the inputs.
    pub fn full_op(&self, w: &PermSimplex, words: &[BarWord]) -> Result<FormalSum<BarWord>> {
        if words.len() != w.arity() {
            return Err(Error::ArityMismatch {
                expected: w.arity(),
                found: words.len(),
            });
        }
        let total: usize = words.iter().map(BarWord::len).sum();
        if total == 0 {
            return Ok(if w.degree() == 0 {
                FormalSum::single(BarWord::empty())
            } else {
                FormalSum::zero()
            });
        }
        let mut out = FormalSum::zero();
        for n in 1..=total {
            let splits: Vec<Vec<Vec<BarWord>>> = words.iter().map(|c| c.deconcat(n)).collect();
            for pieces in w.iterated_diagonal(n) {
                for parts in splits.iter().map(|s| s.iter()).multi_cartesian_product() {
                    // Factor j sees the j-th block of every input.
                    if (0..n).any(|j| parts.iter().all(|p| p[j].is_empty())) {
                        continue;
                    }
                    let mut terms: Vec<Vec<Gen>> = vec![Vec::new()];
                    for (j, piece) in pieces.iter().enumerate() {
                        let inputs: Vec<BarWord> = parts.iter().map(|p| p[j].clone()).collect();
                        let factor = self.tilde_op(piece, &inputs)?;
                        if factor.is_zero() {
                            terms.clear();
                            break;
                        }
                        terms = terms
                            .into_iter()
                            .flat_map(|t| {
                                factor.iter().map(move |g| {
                                    let mut t = t.clone();
                                    t.push(g.clone());
                                    t
                                })
                            })
                            .collect();
                    }
                    for t in terms {
                        out.toggle(BarWord(t));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multilinear extension of [`Bar::full_op`].
    pub fn full_op_sums(
        &self,
        w: &FormalSum<PermSimplex>,
        words: &[FormalSum<BarWord>],
    ) -> Result<FormalSum<BarWord>> {
        let mut out = FormalSum::zero();
        for x in w.iter() {
            let lists: Vec<Vec<BarWord>> =
                words.iter().map(|s| s.iter().cloned().collect()).collect();
            for inputs in lists
                .into_iter()
                .map(Vec::into_iter)
                .multi_cartesian_product()
            {
                out += self.full_op(x, &inputs)?;
            }
        }
        Ok(out)
    }

    /// `c₁ ⌣_d c₂`.
    pub fn cup(&self, d: usize, c1: &BarWord, c2: &BarWord) -> Result<FormalSum<BarWord>> {
        self.full_op(&PermSimplex::theta(d), &[c1.clone(), c2.clone()])
    }

    /// Every word of the given homological grade. Requires every letter to
    /// have cohomological degree at least 2, so that each grade is finite.
    pub fn words_of_grade(&self, g: Grade) -> Result<Vec<BarWord>> {
        let letters = self.letters();
        let weights: Vec<i64> = letters
            .iter()
            .map(|a| self.alg.grade(a).value() + 1)
            .collect();
        if let Some(a) = letters
            .iter()
            .zip(&weights)
            .find(|(_, w)| **w >= 0)
            .map(|(a, _)| a)
        {
            return Err(Error::UnboundedSlice(format!(
                "letter `{a}` has cohomological degree {}, so grades contain infinitely many words; \
                 use the word-length grading",
                self.alg.grade(a).cohomological()
            )));
        }
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            letters: &[Gen],
            weights: &[i64],
            left: i64,
            cur: &mut Vec<Gen>,
            out: &mut Vec<BarWord>,
        ) {
            if left == 0 {
                out.push(BarWord(cur.clone()));
            }
            for (a, &w) in letters.iter().zip(weights) {
                if w >= left {
                    cur.push(a.clone());
                    rec(letters, weights, left - w, cur, out);
                    cur.pop();
                }
            }
        }
        rec(&letters, &weights, g.value(), &mut cur, &mut out);
        out.sort();
        Ok(out)
    }

    /// The bar complex on the given homological grades.
    pub fn complex_slice(&self, grades: RangeInclusive<Grade>) -> Result<ComplexSlice<BarWord>> {
        let mut basis = BTreeMap::new();
        for v in grades.start().value()..=grades.end().value() {
            basis.insert(
                Grade(v),
                if v > 0 {
                    Vec::new()
                } else {
                    self.words_of_grade(Grade(v))?
                },
            );
        }
        let bar = self.clone();
        let slice = ComplexSlice::new(basis, move |c| {
            bar.differential(c)
                .expect("letters of a slice are valid inputs")
        });
        Ok(slice)
    }

    /// The bar complex graded by word length, available when the internal
    /// differential vanishes (then only products change the length). The
    /// grade of a word is its length.
    pub fn length_slice(&self, max_len: usize) -> Result<ComplexSlice<BarWord>> {
        let letters = self.letters();
        if let Some(a) = letters.iter().find(|a| !self.alg.differential(a).is_zero()) {
            return Err(Error::InvalidInput(format!(
                "the length grading needs a zero internal differential, but d({a}) ≠ 0"
            )));
        }
        let mut basis = BTreeMap::new();
        basis.insert(Grade(-1), Vec::new());
        for len in 0..=max_len {
            let words: Vec<BarWord> = if len == 0 {
                vec![BarWord::empty()]
            } else {
                (0..len)
                    .map(|_| letters.iter().cloned())
                    .multi_cartesian_product()
                    .map(BarWord)
                    .collect()
            };
            basis.insert(Grade(len as i64), words);
        }
        let bar = self.clone();
        Ok(ComplexSlice::new(basis, move |c| {
            bar.differential(c)
                .expect("letters of a slice are valid inputs")
        }))
    }

    /// Homology dimensions of the bar complex in cohomological degrees
    /// `0..=max`, all reliable.
    pub fn homology(&self, max: usize) -> Result<Homology> {
        let lo = -(max as i64);
        let slice = self.complex_slice(Grade(lo - 1)..=Grade(1))?;
        let mut h = slice.homology_dims(Grade(lo)..=Grade(1))?;
        h.dims.remove(&Grade(1));
        h.unreliable.remove(&Grade(1));
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{CochainAlgebra, CommutativeAlgebra, SimplicialSet};

    fn w(s: &str) -> PermSimplex {
        s.parse().unwrap()
    }

    fn words(v: &[&str]) -> Vec<Surjection> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn braces_family() {
        for p in 1..=4usize {
            let top = (p + 1) as u8;
            let mut word = vec![top];
            for k in 1..=p as u8 {
                word.push(k);
                word.push(top);
            }
            let expected = Surjection::try_from_word(word, top).unwrap();
            assert_eq!(
                admissible_surjections(&PermSimplex::theta(0), &[p, 1]).unwrap(),
                vec![expected]
            );
        }
        assert_eq!(
            admissible_surjections(&w("1 2"), &[2, 1]).unwrap(),
            words(&["3,1,3,2,3"])
        );
    }

    #[test]
    fn small_sizes() {
        let t1 = PermSimplex::theta(1);
        assert_eq!(
            admissible_surjections(&t1, &[1, 1]).unwrap(),
            words(&["2,1,2,1"])
        );
        assert_eq!(
            admissible_surjections(&t1, &[2, 1]).unwrap(),
            words(&["3,1,3,2,3,2"])
        );
        assert_eq!(
            admissible_surjections(&PermSimplex::theta(0), &[1, 0]).unwrap(),
            words(&["1"])
        );
        assert_eq!(
            admissible_surjections(&PermSimplex::theta(0), &[1, 1]).unwrap(),
            words(&["2,1,2"])
        );
        assert!(admissible_surjections(&PermSimplex::theta(0), &[0, 0])
            .unwrap()
            .is_empty());
        assert!(admissible_surjections(&t1, &[1, 0]).unwrap().is_empty());
        assert!(admissible_surjections(&t1, &[1]).is_err());
    }

    #[test]
    fn degree_law() {
        for d in 0..=3 {
            for p in 0..=3 {
                for q in 0..=3 {
                    for x in [
                        PermSimplex::theta(d),
                        PermSimplex::theta(d)
                            .permute(&crate::perm::Permutation::tau())
                            .unwrap(),
                    ] {
                        for u in admissible_surjections(&x, &[p, q]).unwrap() {
                            assert_eq!(u.degree(), p + q + d - 1, "{x} {p} {q} {u}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_rows_close_everything() {
        for t in admissible_tables(&PermSimplex::theta(2), &[2, 2]).unwrap() {
            assert_eq!(*t.blocks.last().unwrap(), 2);
            assert!(t.blocks.windows(2).all(|b| b[0] <= b[1]));
        }
    }

    fn exterior_bar() -> Bar {
        Bar::new(Arc::new(CommutativeAlgebra::exterior(1))).unwrap()
    }

    #[test]
    fn deconcatenation() {
        let bar = exterior_bar();
        let a = bar.word(&["x"]).unwrap();
        assert_eq!(
            a.deconcat(2),
            vec![
                vec![BarWord::empty(), a.clone()],
                vec![a.clone(), BarWord::empty()]
            ]
        );
        assert_eq!(
            BarWord::empty().deconcat(2),
            vec![vec![BarWord::empty(), BarWord::empty()]]
        );
        assert_eq!(bar.word(&["x", "x"]).unwrap().deconcat(2).len(), 3);
        assert_eq!(a.to_string(), "[x]");
        assert_eq!(BarWord::empty().to_string(), "[]");
        assert_eq!(
            bar.parse_word("[x|x]").unwrap(),
            bar.word(&["x", "x"]).unwrap()
        );
        assert!(bar.parse_word("[1]").is_err());
    }

    #[test]
    fn commutative_products_are_shuffles() {
        let alg = CommutativeAlgebra::new(
            &[("1", 0), ("a", 2), ("b", 3), ("ab", 5)],
            "1",
            &[
                ("a", "a", &[]),
                ("a", "b", &["ab"]),
                ("b", "b", &[]),
                ("a", "ab", &[]),
                ("b", "ab", &[]),
                ("ab", "ab", &[]),
            ],
        )
        .unwrap();
        let bar = Bar::new(Arc::new(alg)).unwrap();
        let a = bar.word(&["a"]).unwrap();
        let b = bar.word(&["b"]).unwrap();
        let expected: FormalSum<BarWord> = [
            bar.word(&["a", "b"]).unwrap(),
            bar.word(&["b", "a"]).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(bar.cup(0, &a, &b).unwrap(), expected);
        assert!(bar.cup(1, &a, &b).unwrap().is_zero());
        assert_eq!(
            bar.tilde_op(&PermSimplex::theta(0), &[a.clone(), BarWord::empty()])
                .unwrap()
                .len(),
            1
        );
        assert!(bar
            .tilde_op(&PermSimplex::theta(0), &[a.clone(), b.clone()])
            .unwrap()
            .is_zero());
        assert_eq!(
            bar.cup(0, &BarWord::empty(), &BarWord::empty()).unwrap(),
            FormalSum::single(BarWord::empty())
        );
        assert_eq!(
            bar.differential(&bar.word(&["a", "b"]).unwrap()).unwrap(),
            FormalSum::single(bar.word(&["ab"]).unwrap())
        );
        assert!(bar.differential(&a).unwrap().is_zero());
    }

    #[test]
    fn truncated_polynomial_square_cancels() {
        let bar = Bar::new(Arc::new(CommutativeAlgebra::truncated_polynomial(2, 3))).unwrap();
        let x = bar.word(&["x"]).unwrap();
        assert!(bar.cup(0, &x, &x).unwrap().is_zero());
        assert_eq!(
            bar.differential(&bar.word(&["x", "x"]).unwrap()).unwrap(),
            FormalSum::single(bar.word(&["x2"]).unwrap())
        );
    }

    #[test]
    fn cochain_product_adds_cup_one() {
        let bar = Bar::new(Arc::new(CochainAlgebra::new(
            SimplicialSet::simplex_mod_one_skeleton(4).unwrap(),
        )))
        .unwrap();
        let a = bar.word(&["t012"]).unwrap();
        let b = bar.word(&["t123"]).unwrap();
        let cup1 = bar
            .algebra()
            .apply(&"2,1,2".parse().unwrap(), &[a.0[0].clone(), b.0[0].clone()])
            .unwrap();
        let mut expected: FormalSum<BarWord> = [
            bar.word(&["t012", "t123"]).unwrap(),
            bar.word(&["t123", "t012"]).unwrap(),
        ]
        .into_iter()
        .collect();
        for g in cup1.into_keys() {
            expected.toggle(BarWord(vec![g]));
        }
        assert_eq!(bar.cup(0, &a, &b).unwrap(), expected);
    }

    #[test]
    fn sphere_slices() {
        let bar = Bar::new(Arc::new(CochainAlgebra::new(
            SimplicialSet::sphere(2).unwrap(),
        )))
        .unwrap();
        for n in 0..=5 {
            let ws = bar.words_of_grade(Grade(-(n as i64))).unwrap();
            assert_eq!(ws.len(), 1);
            assert_eq!(ws[0].len(), n);
            assert!(bar.differential(&ws[0]).unwrap().is_zero());
        }
        let h = bar.homology(5).unwrap();
        for n in 0..=5 {
            assert_eq!(h.cohomological(n), Some(1));
        }
        assert!(h.unreliable.is_empty());
    }

    #[test]
    fn exterior_needs_length_grading() {
        let bar = exterior_bar();
        assert!(matches!(
            bar.complex_slice(Grade(-1)..=Grade(0)),
            Err(Error::UnboundedSlice(_))
        ));
        let slice = bar.length_slice(6).unwrap();
        for len in 0..=6 {
            assert_eq!(slice.basis_at(Grade(len)).unwrap().len(), 1);
        }
        assert!(slice.square_zero_check(Grade(0)..=Grade(6)).unwrap());
    }

    #[test]
    fn disconnected_algebras_are_rejected() {
        let unreduced = CochainAlgebra::new(SimplicialSet::from_facets(&[vec![0, 1]]).unwrap());
        assert!(matches!(
            Bar::new(Arc::new(unreduced)),
            Err(Error::Disconnected(_))
        ));
        let degree_zero = CommutativeAlgebra::truncated_polynomial(0, 2);
        assert!(Bar::new(Arc::new(degree_zero)).is_err());
        // Empty augmentation ideal: only the empty word.
        let trivial = CommutativeAlgebra::truncated_polynomial(2, 1);
        let bar = Bar::new(Arc::new(trivial)).unwrap();
        assert_eq!(
            bar.words_of_grade(Grade(0)).unwrap(),
            vec![BarWord::empty()]
        );
        assert!(bar.words_of_grade(Grade(-3)).unwrap().is_empty());
    }
}
