//! The surjection operad: non-degenerate surjections `{1..r+d} → {1..r}`
//! written as value words, with the face-deletion differential, the table
//! arrangement, operadic composition and the symmetric action.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::f2chain::FormalSum;
use crate::perm::Permutation;

/// Basis element of the arity-`r`, degree-`d` component: a word of length
/// `r + d` that hits every value in `1..=r` and never repeats a value in two
/// adjacent positions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Surjection {
    word: Vec<u8>,
    arity: u8,
}

fn is_nondegenerate(word: &[u8]) -> bool {
    word.windows(2).all(|p| p[0] != p[1])
}

fn is_onto(word: &[u8], arity: u8) -> bool {
    let mut seen = vec![false; arity as usize];
    for &x in word {
        seen[x as usize - 1] = true;
    }
    seen.into_iter().all(|s| s)
}

/// Builds a basis element from a value word. Degenerate words (two equal
/// adjacent entries) are legitimately zero and give `Ok(None)`; words that
/// skip a value, or contain 0, are malformed.
pub fn make_surjection(word: &[usize]) -> Result<Option<Surjection>> {
    if word.is_empty() {
        return Err(Error::InvalidInput("empty surjection word".into()));
    }
    if word.iter().any(|&x| x == 0 || x > u8::MAX as usize) {
        return Err(Error::InvalidInput(format!(
            "surjection values must lie in 1..=255: {}",
            word.iter().join(",")
        )));
    }
    let word: Vec<u8> = word.iter().map(|&x| x as u8).collect();
    let arity = *word.iter().max().unwrap();
    if !is_onto(&word, arity) {
        return Err(Error::InvalidInput(format!(
            "{} is not onto 1..{arity}",
            word.iter().join(",")
        )));
    }
    Ok(is_nondegenerate(&word).then_some(Surjection { word, arity }))
}

/// The table arrangement of a surjection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Table {
    pub rows: Vec<Vec<u8>>,
    /// 1-based positions of the caesuras in the original word.
    pub caesuras: Vec<usize>,
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows.iter().map(|r| r.iter().join(",")).join(" ; ");
        write!(f, "{rows}")
    }
}

impl Surjection {
    /// Trusted constructor for words already known to be valid.
    pub(crate) fn from_word_unchecked(word: Vec<u8>, arity: u8) -> Self {
        debug_assert!(is_nondegenerate(&word) && is_onto(&word, arity));
        Surjection { word, arity }
    }

    /// Like [`make_surjection`] for words in `u8`, returning `None` for
    /// degenerate or non-surjective words.
    pub fn try_from_word(word: Vec<u8>, arity: u8) -> Option<Self> {
        (!word.is_empty()
            && word.iter().all(|&x| x >= 1 && x <= arity)
            && is_nondegenerate(&word)
            && is_onto(&word, arity))
        .then_some(Surjection { word, arity })
    }

    pub fn identity(arity: usize) -> Self {
        Surjection {
            word: (1..=arity as u8).collect(),
            arity: arity as u8,
        }
    }

    /// The alternating arity-2 word `1,2,1,2,…` of length `d + 2`.
    pub fn theta(d: usize) -> Self {
        Surjection {
            word: (0..d + 2).map(|i| if i % 2 == 0 { 1 } else { 2 }).collect(),
            arity: 2,
        }
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        Surjection {
            word: p.images().to_vec(),
            arity: p.arity() as u8,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn degree(&self) -> usize {
        self.word.len() - self.arity as usize
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Sum of the single-entry deletions that stay surjective and
    /// non-degenerate.
    pub fn differential(&self) -> FormalSum<Surjection> {
        (0..self.word.len())
            .filter_map(|i| {
                let mut w = self.word.clone();
                w.remove(i);
                Surjection::try_from_word(w, self.arity)
            })
            .collect()
    }

    /// Caesuras are the entries that are not the last occurrence of their
    /// value; each non-final row ends at one.
    pub fn table(&self) -> Table {
        let mut last = vec![0; self.arity as usize + 1];
        for (i, &x) in self.word.iter().enumerate() {
            last[x as usize] = i;
        }
        let mut rows = vec![Vec::new()];
        let mut caesuras = Vec::new();
        for (i, &x) in self.word.iter().enumerate() {
            rows.last_mut().unwrap().push(x);
            if last[x as usize] != i {
                caesuras.push(i + 1);
                rows.push(Vec::new());
            }
        }
        Table { rows, caesuras }
    }

    /// Operadic composition `self ∘_k other`.
    ///
    /// With `t` occurrences of `k` in `self`, each cut sequence
    /// `1 = c₀ ≤ c₁ ≤ … ≤ c_t = |other|` splits `other` into `t` overlapping
    /// pieces; piece `i` replaces the `i`-th occurrence of `k`.
    pub fn compose(&self, k: usize, other: &Surjection) -> Result<FormalSum<Surjection>> {
        if k == 0 || k > self.arity() {
            return Err(Error::SlotOutOfRange {
                slot: k,
                arity: self.arity(),
            });
        }
        let k8 = k as u8;
        let s = other.arity;
        let arity = self.arity + s - 1;
        let t = self.word.iter().filter(|&&x| x == k8).count();
        let len = other.word.len();
        let mut out = FormalSum::zero();
        for inner in (0..len).combinations_with_replacement(t - 1) {
            let cuts: Vec<usize> = std::iter::once(0)
                .chain(inner)
                .chain(std::iter::once(len - 1))
                .collect();
            let mut word = Vec::with_capacity(self.word.len() + len - 1);
            let mut piece = 0;
            for &x in &self.word {
                if x == k8 {
                    let (a, b) = (cuts[piece], cuts[piece + 1]);
                    word.extend(other.word[a..=b].iter().map(|&y| y + k8 - 1));
                    piece += 1;
                } else if x > k8 {
                    word.push(x + s - 1);
                } else {
                    word.push(x);
                }
            }
            if is_nondegenerate(&word) {
                out.toggle(Surjection::from_word_unchecked(word, arity));
            }
        }
        Ok(out)
    }

    /// Relabels values by `σ`. The result is never degenerate.
    pub fn permute(&self, sigma: &Permutation) -> Result<Surjection> {
        if sigma.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: sigma.arity(),
            });
        }
        Ok(Surjection {
            word: self.word.iter().map(|&x| sigma.apply(x)).collect(),
            arity: self.arity,
        })
    }

    /// Every basis element of the given arity and degree, in lexicographic
    /// order.
    pub fn all(arity: usize, degree: usize) -> Vec<Surjection> {
        fn rec(
            arity: u8,
            len: usize,
            word: &mut Vec<u8>,
            seen: &mut [u32],
            out: &mut Vec<Surjection>,
        ) {
            if word.len() == len {
                out.push(Surjection::from_word_unchecked(word.clone(), arity));
                return;
            }
            let missing = seen.iter().filter(|&&c| c == 0).count();
            for x in 1..=arity {
                if word.last() == Some(&x) {
                    continue;
                }
                let still_missing = missing - usize::from(seen[x as usize - 1] == 0);
                if still_missing > len - word.len() - 1 {
                    continue;
                }
                seen[x as usize - 1] += 1;
                word.push(x);
                rec(arity, len, word, seen, out);
                word.pop();
                seen[x as usize - 1] -= 1;
            }
        }
        let mut out = Vec::new();
        if arity == 0 || (arity == 1 && degree > 0) {
            return out;
        }
        rec(
            arity as u8,
            arity + degree,
            &mut Vec::new(),
            &mut vec![0; arity],
            &mut out,
        );
        out
    }
}

/// Linear extension of `compose` in both arguments.
pub fn compose_sums(
    u: &FormalSum<Surjection>,
    k: usize,
    v: &FormalSum<Surjection>,
) -> Result<FormalSum<Surjection>> {
    let mut out = FormalSum::zero();
    for a in u.iter() {
        for b in v.iter() {
            out += a.compose(k, b)?;
        }
    }
    Ok(out)
}

pub fn differential_of_sum(u: &FormalSum<Surjection>) -> FormalSum<Surjection> {
    u.map_linear(Surjection::differential)
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word.iter().join(","))
    }
}

impl FromStr for Surjection {
    type Err = Error;

    /// Parses `1,2,1`. A degenerate word is rejected here since it does not
    /// name a basis element; use [`make_surjection`] to normalize it to zero.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad surjection entry `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        match make_surjection(&values) {
            Ok(Some(u)) => Ok(u),
            Ok(None) => Err(Error::Parse(format!("`{s}` is degenerate"))),
            Err(e) => Err(Error::Parse(e.to_string())),
        }
    }
}

/// Parses a ` + `-joined sum of surjections, `0` for zero.
pub fn parse_sum(s: &str) -> Result<FormalSum<Surjection>> {
    let s = s.trim();
    if s == "0" {
        return Ok(FormalSum::zero());
    }
    s.split('+').map(|t| t.trim().parse()).collect()
}
