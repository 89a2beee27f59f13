//! Table reduction, the operad morphism from Barratt–Eccles to surjections.

use itertools::Itertools;

use crate::barratt_eccles::PermSimplex;
use crate::f2chain::FormalSum;
use crate::surjection::Surjection;

/// Compositions of `total` into `parts` positive integers.
fn compositions(total: usize, parts: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..total).combinations(parts - 1).map(move |cuts| {
        std::iter::once(0)
            .chain(cuts)
            .chain(std::iter::once(total))
            .tuple_windows()
            .map(|(a, b)| b - a)
            .collect()
    })
}

/// Builds the table word for one composition, or `None` if a row runs out
/// of open values.
fn table_word(w: &PermSimplex, sizes: &[usize]) -> Option<Vec<u8>> {
    let r = w.arity();
    let d = w.degree();
    let mut closed = vec![false; r + 1];
    let mut word = Vec::with_capacity(r + d);
    for (i, &len) in sizes.iter().enumerate() {
        let avail = w
            .level(i)
            .images()
            .iter()
            .copied()
            .filter(|&x| !closed[x as usize]);
        if i < d {
            let row: Vec<u8> = avail.take(len).collect();
            if row.len() < len {
                return None;
            }
            for &x in &row[..row.len() - 1] {
                closed[x as usize] = true;
            }
            word.extend(row);
        } else {
            word.extend(avail);
        }
    }
    Some(word)
}

/// `TR(w)`: a sum of surjections of the same arity and degree as `w`.
pub fn tr(w: &PermSimplex) -> FormalSum<Surjection> {
    let r = w.arity();
    let d = w.degree();
    compositions(r + d, d + 1)
        .filter_map(|sizes| table_word(w, &sizes))
        .filter_map(|word| Surjection::try_from_word(word, r as u8))
        .collect()
}

pub fn tr_sum(x: &FormalSum<PermSimplex>) -> FormalSum<Surjection> {
    x.map_linear(tr)
}
