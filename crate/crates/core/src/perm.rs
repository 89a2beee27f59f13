//! Permutations of `{1..r}` in one-line notation.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::Error;

/// A permutation written as its sequence of images `(w(1), …, w(r))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self, Error> {
        let r = images.len();
        if r == 0 {
            return Err(Error::InvalidInput("empty permutation".into()));
        }
        let mut seen = vec![false; r];
        for &x in &images {
            let i = x as usize;
            if i == 0 || i > r || seen[i - 1] {
                return Err(Error::InvalidInput(format!(
                    "{} is not a permutation of 1..{r}",
                    images.iter().join(" ")
                )));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(r: usize) -> Self {
        Permutation((1..=r as u8).collect())
    }

    /// The transposition of `{1, 2}`.
    pub fn tau() -> Self {
        Permutation(vec![2, 1])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn then_after(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    /// Block substitution: the value `k` is replaced by the block
    /// `k, …, k+s-1` ordered as `other`, and values above `k` are shifted by
    /// `s - 1`. This is the operad composition of the associative operad read
    /// on one-line words.
    pub fn substitute(&self, k: usize, other: &Permutation) -> Self {
        let s = other.arity() as u8;
        let k = k as u8;
        let mut out = Vec::with_capacity(self.arity() + other.arity() - 1);
        for &x in &self.0 {
            if x == k {
                out.extend(other.0.iter().map(|&y| y + k - 1));
            } else if x > k {
                out.push(x + s - 1);
            } else {
                out.push(x);
            }
        }
        Permutation(out)
    }

    /// Position of each value in the one-line word (0-based), i.e. the rank
    /// of value `v` in the linear order the word defines.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            pos[x as usize - 1] = i;
        }
        pos
    }

    /// The subsequence of values in `keep` (a subset of `1..=r`), renumbered
    /// monotonically to `1..=|keep|`.
    pub fn restrict(&self, keep: &[bool]) -> Self {
        let mut rank = vec![0u8; self.0.len()];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                next += 1;
                rank[v] = next;
            }
        }
        Permutation(
            self.0
                .iter()
                .filter(|&&x| keep[x as usize - 1])
                .map(|&x| rank[x as usize - 1])
                .collect(),
        )
    }

    /// All permutations of `{1..r}` in lexicographic order.
    pub fn all(r: usize) -> Vec<Permutation> {
        (1..=r as u8).permutations(r).map(Permutation).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts images separated by spaces or commas.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u8>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(images).map_err(|e| Error::Parse(e.to_string()))
    }
}
