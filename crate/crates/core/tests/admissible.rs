//! Cross-checks the admissible-surjection search against a direct reading of
//! the admissibility conditions, applied to every candidate word.

use einfty::bar::admissible_surjections;
use einfty::barratt_eccles::PermSimplex;
use einfty::perm::Permutation;
use einfty::surjection::Surjection;

/// Label `(k, s)` of value `v` under the interval-by-interval numbering.
fn label(sizes: &[usize], v: usize) -> (usize, usize) {
    let mut v = v;
    for (s, &n) in sizes.iter().enumerate() {
        if v <= n {
            return (v, s + 1);
        }
        v -= n;
    }
    unreachable!("value out of range")
}

/// Rows of the table arrangement: a row ends at every non-final occurrence.
fn rows(word: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for (i, &v) in word.iter().enumerate() {
        out.last_mut().unwrap().push(v);
        if word[i + 1..].contains(&v) {
            out.push(Vec::new());
        }
    }
    if out.last().is_some_and(Vec::is_empty) {
        out.pop();
    }
    out
}

/// Decides admissibility of `word` (values `1..=Σ sizes`) for `w`.
fn is_admissible(word: &[usize], w: &[Vec<usize>], sizes: &[usize]) -> bool {
    let d = w.len() - 1;
    let lab = |v: usize| label(sizes, v);
    // Weakly increasing per interval.
    for s in 1..=sizes.len() {
        let ks: Vec<usize> = word
            .iter()
            .map(|&v| lab(v))
            .filter(|l| l.1 == s)
            .map(|l| l.0)
            .collect();
        if ks.windows(2).any(|p| p[0] > p[1]) {
            return false;
        }
    }
    let table = rows(word);
    let mut seen: Vec<usize> = Vec::new();
    let mut block = 0usize;
    let mut consumed = 0usize;
    for (j, row) in table.iter().enumerate() {
        let head_is_first = !seen.contains(&row[0]);
        if !head_is_first {
            if j == 0 {
                return false;
            }
            block += 1;
            if block > d {
                return false;
            }
        } else if j == 0 && block != 0 {
            return false;
        }
        // Open values: seen above and occurring again from this row on.
        let rest = &word[consumed..];
        let mut open: Vec<usize> = seen.iter().copied().filter(|v| rest.contains(v)).collect();
        open.sort_by_key(|&v| w[block].iter().position(|&x| x == lab(v).1).unwrap());
        let open_intervals: Vec<usize> = open.iter().map(|&v| lab(v).1).collect();
        if open_intervals
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len()
            != open.len()
        {
            return false;
        }
        let tail: &[usize] = if head_is_first {
            let head = row[0];
            if let Some(&first) = open.first() {
                let ph = w[block].iter().position(|&x| x == lab(head).1).unwrap();
                let pf = w[block].iter().position(|&x| x == lab(first).1).unwrap();
                if ph >= pf {
                    return false;
                }
            }
            &row[1..]
        } else {
            if row.is_empty() {
                return false;
            }
            &row[..]
        };
        if tail.len() > open.len() || tail != &open[..tail.len()] {
            return false;
        }
        seen.extend(
            row.iter()
                .copied()
                .filter(|v| !seen.contains(v))
                .collect::<Vec<_>>(),
        );
        consumed += row.len();
    }
    block == d
}

/// All non-degenerate surjective words over `1..=n` of the given length.
fn candidates(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            if (1..=n).all(|v| cur.contains(&v)) {
                out.push(cur.clone());
            }
            return;
        }
        for v in 1..=n {
            if cur.last() != Some(&v) {
                cur.push(v);
                rec(n, len, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, len, &mut cur, &mut out);
    out
}

fn restricted_degenerate(w: &[Vec<usize>], sizes: &[usize]) -> bool {
    let live: Vec<Vec<usize>> = w
        .iter()
        .map(|lv| lv.iter().copied().filter(|&s| sizes[s - 1] > 0).collect())
        .collect();
    live.windows(2).any(|p| p[0] == p[1])
}

fn check(w: &PermSimplex, sizes: &[usize]) {
    let levels: Vec<Vec<usize>> = w
        .levels()
        .iter()
        .map(|p| p.images().iter().map(|&x| x as usize).collect())
        .collect();
    let n: usize = sizes.iter().sum();
    let d = w.degree();
    let mut expected: Vec<Vec<usize>> = Vec::new();
    if n > 0 && !restricted_degenerate(&levels, sizes) {
        // Any admissible word has length at most 2n + d - 1; search one
        // beyond so the degree bound is tested rather than assumed.
        for len in n..=2 * n + d {
            for c in candidates(n, len) {
                if is_admissible(&c, &levels, sizes) {
                    assert_eq!(len, 2 * n + d - 1, "degree law fails for {c:?}");
                    expected.push(c);
                }
            }
        }
    }
    expected.sort();
    let got: Vec<Vec<usize>> = admissible_surjections(w, sizes)
        .unwrap()
        .iter()
        .map(|u: &Surjection| u.word().iter().map(|&x| x as usize).collect())
        .collect();
    let mut got_sorted = got.clone();
    got_sorted.sort();
    assert_eq!(got_sorted, expected, "w = {w}, sizes = {sizes:?}");
}

#[test]
fn search_matches_direct_check_in_arity_two() {
    for d in 0..=2 {
        for w in PermSimplex::all(2, d) {
            for p in 0..=2 {
                for q in 0..=2 {
                    if p + q <= 4 {
                        check(&w, &[p, q]);
                    }
                }
            }
        }
    }
    check(&PermSimplex::theta(1), &[3, 1]);
    check(&PermSimplex::theta(1), &[1, 3]);
}

#[test]
fn search_matches_direct_check_in_arity_three() {
    for d in 0..=1 {
        for w in PermSimplex::all(3, d) {
            for sizes in [[1, 1, 1], [2, 1, 0], [0, 1, 2], [1, 0, 1], [2, 1, 1]] {
                check(&w, &sizes);
            }
        }
    }
}

#[test]
fn equivariance_swaps_intervals() {
    // Relabeling the simplex by τ and swapping the inputs gives the same
    // tables with intervals exchanged.
    for d in 0..=2 {
        for w in PermSimplex::all(2, d) {
            let tw = w.permute(&Permutation::tau()).unwrap();
            for (p, q) in [(1, 2), (2, 1), (2, 2)] {
                let a = admissible_surjections(&w, &[p, q]).unwrap();
                let b = admissible_surjections(&tw, &[q, p]).unwrap();
                let swap = |v: u8| {
                    if (v as usize) <= p {
                        v + q as u8
                    } else {
                        v - p as u8
                    }
                };
                let mut a: Vec<Vec<u8>> = a
                    .iter()
                    .map(|u| u.word().iter().map(|&v| swap(v)).collect())
                    .collect();
                let mut b: Vec<Vec<u8>> = b.iter().map(|u| u.word().to_vec()).collect();
                a.sort();
                b.sort();
                assert_eq!(a, b, "{w} with sizes ({p}, {q})");
            }
        }
    }
}
