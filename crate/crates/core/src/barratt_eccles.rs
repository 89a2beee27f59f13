//! The Barratt–Eccles operad: normalized simplices of permutations.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::f2chain::FormalSum;
use crate::perm::Permutation;

/// A non-degenerate simplex `(w₀, …, w_d)` of permutations of `{1..r}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PermSimplex {
    levels: Vec<Permutation>,
}

fn is_nondegenerate(levels: &[Permutation]) -> bool {
    levels.windows(2).all(|p| p[0] != p[1])
}

impl PermSimplex {
    /// `Ok(None)` when two adjacent levels coincide (the simplex is zero).
    pub fn new(levels: Vec<Permutation>) -> Result<Option<PermSimplex>> {
        let Some(first) = levels.first() else {
            return Err(Error::InvalidInput(
                "a simplex needs at least one level".into(),
            ));
        };
        let r = first.arity();
        if let Some(bad) = levels.iter().find(|p| p.arity() != r) {
            return Err(Error::ArityMismatch {
                expected: r,
                found: bad.arity(),
            });
        }
        Ok(is_nondegenerate(&levels).then_some(PermSimplex { levels }))
    }

    fn from_levels(levels: Vec<Permutation>) -> Option<PermSimplex> {
        is_nondegenerate(&levels).then_some(PermSimplex { levels })
    }

    pub fn vertex(p: Permutation) -> Self {
        PermSimplex { levels: vec![p] }
    }

    pub fn identity(r: usize) -> Self {
        Self::vertex(Permutation::identity(r))
    }

    /// The alternating simplex `(id, τ, id, τ, …)` with `d + 1` levels.
    pub fn theta(d: usize) -> Self {
        let (id, tau) = (Permutation::identity(2), Permutation::tau());
        PermSimplex {
            levels: (0..=d)
                .map(|i| if i % 2 == 0 { id.clone() } else { tau.clone() })
                .collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.levels[0].arity()
    }

    pub fn degree(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[Permutation] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &Permutation {
        &self.levels[i]
    }

    /// Contiguous face `(w_a, …, w_b)`; never degenerate.
    pub fn segment(&self, a: usize, b: usize) -> PermSimplex {
        PermSimplex {
            levels: self.levels[a..=b].to_vec(),
        }
    }

    pub fn differential(&self) -> FormalSum<PermSimplex> {
        if self.levels.len() == 1 {
            return FormalSum::zero();
        }
        (0..self.levels.len())
            .filter_map(|i| {
                let mut levels = self.levels.clone();
                levels.remove(i);
                Self::from_levels(levels)
            })
            .collect()
    }

    /// Alexander–Whitney diagonal `Σ (w₀…w_i) ⊗ (w_i…w_d)`.
    pub fn diagonal(&self) -> FormalSum<(PermSimplex, PermSimplex)> {
        let d = self.degree();
        (0..=d)
            .map(|i| (self.segment(0, i), self.segment(i, d)))
            .collect()
    }

    /// Iterated diagonal into `n` factors: all `0 = i₀ ≤ i₁ ≤ … ≤ i_n = d`,
    /// factor `j` being `(w_{i_{j-1}}, …, w_{i_j})`. For `n = 0` the result is
    /// the counit: a single empty tuple for vertices, nothing otherwise.
    pub fn iterated_diagonal(&self, n: usize) -> Vec<Vec<PermSimplex>> {
        let d = self.degree();
        if n == 0 {
            return if d == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        (0..=d)
            .combinations_with_replacement(n - 1)
            .map(|inner| {
                let cuts: Vec<usize> = std::iter::once(0)
                    .chain(inner)
                    .chain(std::iter::once(d))
                    .collect();
                cuts.windows(2).map(|c| self.segment(c[0], c[1])).collect()
            })
            .collect()
    }

    /// Operadic composition `self ∘_k other`: the Eilenberg–Zilber shuffle
    /// sum of levelwise block substitutions along monotone lattice paths.
    pub fn compose(&self, k: usize, other: &PermSimplex) -> Result<FormalSum<PermSimplex>> {
        if k == 0 || k > self.arity() {
            return Err(Error::SlotOutOfRange {
                slot: k,
                arity: self.arity(),
            });
        }
        let (p, q) = (self.degree(), other.degree());
        let mut out = FormalSum::zero();
        for x_steps in (0..p + q).combinations(p) {
            let (mut i, mut j) = (0, 0);
            let mut levels = Vec::with_capacity(p + q + 1);
            levels.push(self.levels[0].substitute(k, &other.levels[0]));
            let mut steps = x_steps.into_iter().peekable();
            for t in 0..p + q {
                if steps.peek() == Some(&t) {
                    steps.next();
                    i += 1;
                } else {
                    j += 1;
                }
                levels.push(self.levels[i].substitute(k, &other.levels[j]));
            }
            if let Some(s) = Self::from_levels(levels) {
                out.toggle(s);
            }
        }
        Ok(out)
    }

    /// Levelwise left translation `σ·w_i`.
    pub fn permute(&self, sigma: &Permutation) -> Result<PermSimplex> {
        if sigma.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: sigma.arity(),
            });
        }
        Ok(PermSimplex {
            levels: self.levels.iter().map(|w| sigma.then_after(w)).collect(),
        })
    }

    /// Restriction to the values marked in `keep`; `None` when the restricted
    /// simplex is degenerate.
    pub fn restrict(&self, keep: &[bool]) -> Option<PermSimplex> {
        Self::from_levels(self.levels.iter().map(|w| w.restrict(keep)).collect())
    }

    /// Every non-degenerate simplex of the given arity and degree.
    pub fn all(arity: usize, degree: usize) -> Vec<PermSimplex> {
        let perms = Permutation::all(arity);
        let mut out = Vec::new();
        let mut levels = Vec::with_capacity(degree + 1);
        fn rec(
            perms: &[Permutation],
            len: usize,
            levels: &mut Vec<Permutation>,
            out: &mut Vec<PermSimplex>,
        ) {
            if levels.len() == len {
                out.push(PermSimplex {
                    levels: levels.clone(),
                });
                return;
            }
            for p in perms {
                if levels.last() == Some(p) {
                    continue;
                }
                levels.push(p.clone());
                rec(perms, len, levels, out);
                levels.pop();
            }
        }
        rec(&perms, degree + 1, &mut levels, &mut out);
        out
    }
}

pub fn differential_of_sum(x: &FormalSum<PermSimplex>) -> FormalSum<PermSimplex> {
    x.map_linear(PermSimplex::differential)
}

pub fn compose_sums(
    x: &FormalSum<PermSimplex>,
    k: usize,
    y: &FormalSum<PermSimplex>,
) -> Result<FormalSum<PermSimplex>> {
    let mut out = FormalSum::zero();
    for a in x.iter() {
        for b in y.iter() {
            out += a.compose(k, b)?;
        }
    }
    Ok(out)
}

impl fmt::Display for PermSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.levels.iter().join(" | "))
    }
}

impl FromStr for PermSimplex {
    type Err = Error;

    /// Parses `1 2 | 2 1`. Degenerate input is a parse error.
    fn from_str(s: &str) -> Result<Self> {
        let levels = s
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<Permutation>>>()?;
        match PermSimplex::new(levels) {
            Ok(Some(w)) => Ok(w),
            Ok(None) => Err(Error::Parse(format!("`{s}` is degenerate"))),
            Err(e) => Err(Error::Parse(e.to_string())),
        }
    }
}

/// Display wrapper for a pair of simplices in a tensor product.
pub struct TensorPair<'a>(pub &'a (PermSimplex, PermSimplex));

impl fmt::Display for TensorPair<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) (x) ({})", self.0 .0, self.0 .1)
    }
}
