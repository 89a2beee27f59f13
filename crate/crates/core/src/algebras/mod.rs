//! Algebras over the surjection operad.
//!
//! Two instances are provided: commutative algebras, on which the operad acts
//! through its augmentation, and normalized cochains of finite simplicial sets
//! with the interval-cut action.

mod cochains;
mod commutative;
mod simplicial;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

pub use cochains::CochainAlgebra;
pub use commutative::CommutativeAlgebra;
pub use simplicial::{Face, SimplexId, SimplicialSet};

use crate::error::{Error, Result};
use crate::f2chain::{ComplexSlice, FormalSum, Grade};
use crate::surjection::Surjection;

/// A basis element of a finite algebra. Ordered by name, so sums print in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    name: Arc<str>,
    index: u32,
}

impl Gen {
    pub(crate) fn new(name: &str, index: usize) -> Self {
        Gen {
            name: name.into(),
            index: index as u32,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Position in the owning algebra's basis.
    pub fn index(&self) -> usize {
        self.index as usize
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A finite-dimensional algebra over the surjection operad, presented on a
/// homogeneous basis.
pub trait SurjAlgebra: Send + Sync {
    fn basis(&self) -> &[Gen];

    /// Homological grade: a cochain of dimension `n` has grade `-n`.
    fn grade(&self, g: &Gen) -> Grade;

    /// The unit, when it is a basis element. The augmentation ideal is then
    /// spanned by the other basis elements.
    fn unit(&self) -> Option<&Gen>;

    fn differential(&self, g: &Gen) -> FormalSum<Gen>;

    /// Evaluates the operation `u` on basis inputs, one per value of `u`.
    fn apply(&self, u: &Surjection, inputs: &[Gen]) -> Result<FormalSum<Gen>>;

    fn generator(&self, name: &str) -> Option<&Gen> {
        self.basis().iter().find(|g| g.name() == name)
    }

    fn is_augmentation_ideal(&self, g: &Gen) -> bool {
        self.unit() != Some(g)
    }

    /// Unit present in cohomological degree 0 and every other basis element
    /// in cohomological degree at least 1.
    fn check_connected(&self) -> Result<()> {
        let Some(unit) = self.unit() else {
            return Err(Error::Disconnected(
                "the unit is not a basis element".into(),
            ));
        };
        if self.grade(unit) != Grade(0) {
            return Err(Error::Disconnected(format!(
                "unit `{unit}` is not in degree 0"
            )));
        }
        match self
            .basis()
            .iter()
            .find(|g| self.is_augmentation_ideal(g) && self.grade(g).cohomological() < 1)
        {
            Some(g) => Err(Error::Disconnected(format!(
                "`{g}` lies in the augmentation ideal in cohomological degree {}",
                self.grade(g).cohomological()
            ))),
            None => Ok(()),
        }
    }

    /// Multilinear extension of [`SurjAlgebra::apply`] to sums.
    fn apply_sums(&self, u: &Surjection, inputs: &[FormalSum<Gen>]) -> Result<FormalSum<Gen>> {
        let mut out = FormalSum::zero();
        let mut chosen = Vec::with_capacity(inputs.len());
        fn rec<A: SurjAlgebra + ?Sized>(
            alg: &A,
            u: &Surjection,
            inputs: &[FormalSum<Gen>],
            chosen: &mut Vec<Gen>,
            out: &mut FormalSum<Gen>,
        ) -> Result<()> {
            if chosen.len() == inputs.len() {
                *out += alg.apply(u, chosen)?;
                return Ok(());
            }
            for g in inputs[chosen.len()].iter() {
                chosen.push(g.clone());
                rec(alg, u, inputs, chosen, out)?;
                chosen.pop();
            }
            Ok(())
        }
        rec(self, u, inputs, &mut chosen, &mut out)?;
        Ok(out)
    }

    fn differential_of_sum(&self, x: &FormalSum<Gen>) -> FormalSum<Gen> {
        x.map_linear(|g| self.differential(g))
    }

    /// The whole algebra as a chain complex.
    fn complex_slice(&self) -> ComplexSlice<Gen>
    where
        Self: Sized + Clone + 'static,
    {
        let mut basis: BTreeMap<Grade, Vec<Gen>> = BTreeMap::new();
        for g in self.basis() {
            basis.entry(self.grade(g)).or_default().push(g.clone());
        }
        let lo = basis.keys().next().copied().unwrap_or(Grade(0));
        let hi = basis.keys().last().copied().unwrap_or(Grade(0));
        for v in lo.value() - 1..=hi.value() + 1 {
            basis.entry(Grade(v)).or_default();
        }
        let alg = self.clone();
        ComplexSlice::new(basis, move |g| alg.differential(g))
    }
}

/// Validates arity and input membership, shared by the instances.
pub(crate) fn check_inputs(basis: &[Gen], u: &Surjection, inputs: &[Gen]) -> Result<()> {
    if u.arity() != inputs.len() {
        return Err(Error::ArityMismatch {
            expected: u.arity(),
            found: inputs.len(),
        });
    }
    for g in inputs {
        if basis.get(g.index()) != Some(g) {
            return Err(Error::InvalidInput(format!(
                "`{g}` is not a basis element of this algebra"
            )));
        }
    }
    Ok(())
}

/// Either instance, as loaded from a file.
#[derive(Clone, Debug)]
pub enum LoadedAlgebra {
    Commutative(CommutativeAlgebra),
    Cochains(CochainAlgebra),
}

impl LoadedAlgebra {
    /// Files ending in `.sset` are simplicial sets; anything else is read as
    /// a commutative algebra.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        if path.extension().is_some_and(|e| e == "sset") {
            Ok(LoadedAlgebra::Cochains(CochainAlgebra::new(text.parse()?)))
        } else {
            Ok(LoadedAlgebra::Commutative(text.parse()?))
        }
    }

    pub fn as_dyn(&self) -> &dyn SurjAlgebra {
        match self {
            LoadedAlgebra::Commutative(a) => a,
            LoadedAlgebra::Cochains(a) => a,
        }
    }
}

/// Parses a `+`-separated list of generator names, or `0`.
pub fn parse_element(alg: &dyn SurjAlgebra, s: &str) -> Result<FormalSum<Gen>> {
    let s = s.trim();
    if s == "0" {
        return Ok(FormalSum::zero());
    }
    s.split('+')
        .map(|t| {
            let t = t.trim();
            alg.generator(t)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("unknown generator `{t}`")))
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().collect())
}
