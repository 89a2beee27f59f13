//! Normalized cochains of a finite simplicial set with the interval-cut
//! action of the surjection operad.

use std::sync::Arc;

use rayon::prelude::*;

use super::{check_inputs, Gen, SimplexId, SimplicialSet, SurjAlgebra};
use crate::error::{Error, Result};
use crate::f2chain::{FormalSum, Grade};
use crate::surjection::Surjection;

/// The basis element dual to simplex `i` is the generator with index `i`.
#[derive(Clone, Debug)]
pub struct CochainAlgebra {
    set: Arc<SimplicialSet>,
    basis: Vec<Gen>,
    coboundary: Vec<FormalSum<Gen>>,
    by_dim: Vec<Vec<SimplexId>>,
}

impl CochainAlgebra {
    pub fn new(set: SimplicialSet) -> Self {
        let basis: Vec<Gen> = set.ids().map(|i| Gen::new(set.name(i), i)).collect();
        let mut coboundary = vec![FormalSum::zero(); set.len()];
        let top = set.ids().map(|i| set.dim(i)).max().unwrap_or(0);
        let mut by_dim = vec![Vec::new(); top + 1];
        for s in set.ids() {
            by_dim[set.dim(s)].push(s);
            for i in 0..set.faces_len(s) {
                let f = set.face(s, i);
                if !f.is_degenerate() {
                    coboundary[f.simplex].toggle(basis[s].clone());
                }
            }
        }
        CochainAlgebra {
            set: Arc::new(set),
            basis,
            coboundary,
            by_dim,
        }
    }

    pub fn simplicial_set(&self) -> &SimplicialSet {
        &self.set
    }

    /// Coefficient of `u(x₁, …, x_r)` on the simplex `sigma`: the number of
    /// interval cuts of `sigma` whose faces pair to 1 with every input, mod 2.
    pub fn interval_cut_coefficient(
        &self,
        u: &Surjection,
        inputs: &[Gen],
        sigma: SimplexId,
    ) -> bool {
        let word = u.word();
        let n = self.set.dim(sigma);
        let len = word.len();
        let degs: Vec<usize> = inputs.iter().map(|g| self.set.dim(g.index())).collect();
        // Position of the last occurrence of each value.
        let mut last = vec![0; u.arity() + 1];
        for (j, &v) in word.iter().enumerate() {
            last[v as usize] = j;
        }
        let mut verts: Vec<Vec<usize>> = degs.iter().map(|&d| Vec::with_capacity(d + 1)).collect();
        let mut count = 0usize;
        self.cut(
            word, &last, &degs, inputs, sigma, n, 0, 0, len, &mut verts, &mut count,
        );
        count % 2 == 1
    }

    /// Places the interval for word position `j`, starting at vertex `start`.
    #[allow(clippy::too_many_arguments)]
    fn cut(
        &self,
        word: &[u8],
        last: &[usize],
        degs: &[usize],
        inputs: &[Gen],
        sigma: SimplexId,
        n: usize,
        j: usize,
        start: usize,
        len: usize,
        verts: &mut Vec<Vec<usize>>,
        count: &mut usize,
    ) {
        if j == len {
            *count += 1;
            return;
        }
        let k = word[j] as usize - 1;
        let ends = if j + 1 == len { n..=n } else { start..=n };
        for end in ends {
            let list = &verts[k];
            // A repeated vertex makes the face degenerate; too many vertices
            // cannot match the input's dimension.
            if list.last() == Some(&start) || list.len() + (end - start + 1) > degs[k] + 1 {
                break;
            }
            let before = list.len();
            verts[k].extend(start..=end);
            let ok = if last[k + 1] == j {
                verts[k].len() == degs[k] + 1 && {
                    let f = self.set.face_by_vertices(sigma, &verts[k]);
                    !f.is_degenerate() && f.simplex == inputs[k].index()
                }
            } else {
                true
            };
            if ok {
                self.cut(
                    word,
                    last,
                    degs,
                    inputs,
                    sigma,
                    n,
                    j + 1,
                    end,
                    len,
                    verts,
                    count,
                );
            }
            verts[k].truncate(before);
        }
    }
}

impl SimplicialSet {
    pub(crate) fn faces_len(&self, id: SimplexId) -> usize {
        if self.dim(id) == 0 {
            0
        } else {
            self.dim(id) + 1
        }
    }
}

impl SurjAlgebra for CochainAlgebra {
    fn basis(&self) -> &[Gen] {
        &self.basis
    }

    fn grade(&self, g: &Gen) -> Grade {
        Grade::from_cohomological(self.set.dim(g.index()) as i64)
    }

    fn unit(&self) -> Option<&Gen> {
        match self.by_dim.first() {
            Some(v) if v.len() == 1 => Some(&self.basis[v[0]]),
            _ => None,
        }
    }

    fn differential(&self, g: &Gen) -> FormalSum<Gen> {
        self.coboundary[g.index()].clone()
    }

    fn apply(&self, u: &Surjection, inputs: &[Gen]) -> Result<FormalSum<Gen>> {
        check_inputs(&self.basis, u, inputs)?;
        let total: usize = inputs.iter().map(|g| self.set.dim(g.index())).sum();
        let Some(n) = total.checked_sub(u.degree()) else {
            return Ok(FormalSum::zero());
        };
        let Some(targets) = self.by_dim.get(n) else {
            return Ok(FormalSum::zero());
        };
        let hits = |&s: &SimplexId| self.interval_cut_coefficient(u, inputs, s);
        let chosen: Vec<SimplexId> = if targets.len() > 64 {
            targets.par_iter().copied().filter(|s| hits(s)).collect()
        } else {
            targets.iter().copied().filter(|s| hits(s)).collect()
        };
        Ok(chosen.into_iter().map(|s| self.basis[s].clone()).collect())
    }
}

impl CochainAlgebra {
    /// Evaluates a cochain (sum of dual basis elements) on a simplex.
    pub fn evaluate(&self, cochain: &FormalSum<Gen>, sigma: SimplexId) -> bool {
        cochain.contains(&self.basis[sigma])
    }

    pub fn cochain_by_names(&self, names: &[&str]) -> Result<FormalSum<Gen>> {
        names
            .iter()
            .map(|n| {
                self.set
                    .id(n)
                    .map(|i| self.basis[i].clone())
                    .ok_or_else(|| Error::InvalidInput(format!("unknown simplex `{n}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().collect())
    }
}
