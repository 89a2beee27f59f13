//! Finite simplicial sets given by face tables on their non-degenerate
//! simplices.
//!
//! A simplex of the form `s_{j₁}…s_{j_k} τ` is stored as `τ` together with
//! its vertex map `η: [n] → [dim τ]`, a monotone surjection. Degeneracy words
//! are printed in the descending normal form.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

pub type SimplexId = usize;

/// A possibly degenerate simplex: the non-degenerate simplex `simplex` pulled
/// back along the vertex map `eta`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Face {
    pub simplex: SimplexId,
    pub eta: Vec<usize>,
}

impl Face {
    pub fn is_degenerate(&self) -> bool {
        self.eta.windows(2).any(|p| p[0] == p[1])
    }

    /// Indices of the degeneracy word in descending normal form.
    pub fn degeneracies(&self) -> Vec<usize> {
        (0..self.eta.len().saturating_sub(1))
            .rev()
            .filter(|&x| self.eta[x] == self.eta[x + 1])
            .collect()
    }
}

#[derive(Clone, Debug)]
struct Simplex {
    name: String,
    dim: usize,
    faces: Vec<Face>,
}

#[derive(Clone, Debug)]
pub struct SimplicialSet {
    simplices: Vec<Simplex>,
    by_name: HashMap<String, SimplexId>,
    reduced: bool,
}

fn is_degeneracy_token(t: &str) -> bool {
    let mut rest = t;
    if rest.is_empty() {
        return false;
    }
    while !rest.is_empty() {
        let Some(r) = rest.strip_prefix('s') else {
            return false;
        };
        let digits = r.len() - r.trim_start_matches(|c: char| c.is_ascii_digit()).len();
        if digits == 0 {
            return false;
        }
        rest = &r[digits..];
    }
    true
}

fn degeneracy_indices(t: &str) -> Vec<usize> {
    t.split('s')
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().expect("checked by is_degeneracy_token"))
        .collect()
}

/// The vertex map of `s_{j₁}…s_{j_k}` applied to a simplex of dimension `m`.
fn eta_from_word(word: &[usize], m: usize) -> Result<Vec<usize>> {
    let mut eta: Vec<usize> = (0..=m).collect();
    // s_{j₁}(…(s_{j_k} τ)) has vertex map σ^{j_k} ∘ … ∘ σ^{j₁}; build it by
    // precomposing with the codegeneracies innermost first.
    for &j in word.iter().rev() {
        if j >= eta.len() {
            return Err(Error::InvalidSimplicialSet(format!(
                "degeneracy s{j} applied to a simplex of dimension {}",
                eta.len() - 1
            )));
        }
        let mut next = Vec::with_capacity(eta.len() + 1);
        for x in 0..=eta.len() {
            let y = if x <= j { x } else { x - 1 };
            next.push(eta[y]);
        }
        eta = next;
    }
    Ok(eta)
}

impl SimplicialSet {
    /// Builds from `(name, dim, faces)` where each face is
    /// `(degeneracy word, name of a non-degenerate simplex)`. Simplices must
    /// be listed after their faces. Face identities are checked.
    pub fn new(
        simplices: &[(&str, usize, Vec<(Vec<usize>, &str)>)],
        reduced: bool,
    ) -> Result<Self> {
        let mut set = SimplicialSet {
            simplices: Vec::new(),
            by_name: HashMap::new(),
            reduced,
        };
        for (name, dim, faces) in simplices {
            set.push(name, *dim, faces)?;
        }
        set.validate()?;
        Ok(set)
    }

    fn push(&mut self, name: &str, dim: usize, faces: &[(Vec<usize>, &str)]) -> Result<()> {
        let err = |msg: String| Error::InvalidSimplicialSet(format!("simplex `{name}`: {msg}"));
        if name.is_empty() || is_degeneracy_token(name) || name == "0" || name.contains(['+', '|'])
        {
            return Err(err("unusable name".into()));
        }
        if self.by_name.contains_key(name) {
            return Err(err("declared twice".into()));
        }
        let expected = if dim == 0 { 0 } else { dim + 1 };
        if faces.len() != expected {
            return Err(err(format!(
                "expected {expected} faces, found {}",
                faces.len()
            )));
        }
        let mut parsed = Vec::with_capacity(faces.len());
        for (word, target) in faces {
            let &id = self
                .by_name
                .get(*target)
                .ok_or_else(|| err(format!("unknown face `{target}`")))?;
            let m = self.simplices[id].dim;
            if m + word.len() != dim - 1 {
                return Err(err(format!(
                    "face {} {target} has dimension {}, expected {}",
                    word.iter().map(|j| format!("s{j}")).join(""),
                    m + word.len(),
                    dim - 1
                )));
            }
            parsed.push(Face {
                simplex: id,
                eta: eta_from_word(word, m).map_err(|e| err(e.to_string()))?,
            });
        }
        self.by_name.insert(name.to_string(), self.simplices.len());
        self.simplices.push(Simplex {
            name: name.to_string(),
            dim,
            faces: parsed,
        });
        Ok(())
    }

    /// Checks `d_i d_j = d_{j-1} d_i` for `i < j` and the reduced flag.
    fn validate(&self) -> Result<()> {
        if self.reduced && self.simplices.iter().filter(|s| s.dim == 0).count() != 1 {
            return Err(Error::InvalidSimplicialSet(
                "a reduced simplicial set needs exactly one vertex".into(),
            ));
        }
        for (id, s) in self.simplices.iter().enumerate() {
            let n = s.dim;
            if n < 2 {
                continue;
            }
            for j in 0..=n {
                for i in 0..j {
                    let lhs = self.restrict(&s.faces[j], &coface_map(n - 2, i));
                    let rhs = self.restrict(&s.faces[i], &coface_map(n - 2, j - 1));
                    if lhs != rhs {
                        return Err(Error::InvalidSimplicialSet(format!(
                            "d{i} d{j} != d{} d{i} on `{}`",
                            j - 1,
                            self.simplices[id].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Simplicial complex with the given facets (vertex lists); every subset
    /// becomes a simplex named by its vertex labels.
    pub fn from_facets(facets: &[Vec<usize>]) -> Result<Self> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in facets {
            let f: Vec<usize> = f.iter().copied().sorted().dedup().collect();
            for k in 1..=f.len() {
                all.extend(f.iter().copied().combinations(k));
            }
        }
        let wide = all.iter().flatten().any(|&v| v >= 10);
        let name = |s: &[usize]| {
            if wide {
                s.iter().join(".")
            } else {
                s.iter().join("")
            }
        };
        let mut by_dim: Vec<&Vec<usize>> = all.iter().collect();
        by_dim.sort_by_key(|s| (s.len(), (*s).clone()));
        let names: Vec<String> = by_dim.iter().map(|s| format!("v{}", name(s))).collect();
        let specs: Vec<(&str, usize, Vec<(Vec<usize>, &str)>)> = by_dim
            .iter()
            .zip(&names)
            .map(|(s, nm)| {
                let faces = if s.len() == 1 {
                    Vec::new()
                } else {
                    (0..s.len())
                        .map(|i| {
                            let f: Vec<usize> = s
                                .iter()
                                .enumerate()
                                .filter(|&(j, _)| j != i)
                                .map(|(_, &v)| v)
                                .collect();
                            let pos = by_dim
                                .iter()
                                .position(|t| **t == f)
                                .expect("subset present");
                            (Vec::new(), names[pos].as_str())
                        })
                        .collect()
                };
                (nm.as_str(), s.len() - 1, faces)
            })
            .collect();
        SimplicialSet::new(&specs, false)
    }

    /// `Δⁿ/∂Δⁿ`: one vertex `v` and one `n`-simplex `s` whose faces all
    /// collapse to the vertex.
    pub fn sphere(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSimplicialSet(
                "the 0-sphere is not reduced".into(),
            ));
        }
        let word: Vec<usize> = (0..n - 1).rev().collect();
        let faces = vec![(word, "v"); n + 1];
        SimplicialSet::new(&[("v", 0, Vec::new()), ("s", n, faces)], true)
    }

    /// `Δⁿ` modulo its 1-skeleton: one vertex and a simplex for each vertex
    /// subset of size at least 3, named by its vertices.
    pub fn simplex_mod_one_skeleton(n: usize) -> Result<Self> {
        let mut specs: Vec<(String, usize, Vec<(Vec<usize>, String)>)> =
            vec![("v".into(), 0, Vec::new())];
        for k in 2..=n {
            for c in (0..=n).combinations(k + 1) {
                let faces = (0..=k)
                    .map(|i| {
                        if k == 2 {
                            (vec![0], "v".to_string())
                        } else {
                            let f: String = c
                                .iter()
                                .enumerate()
                                .filter(|&(j, _)| j != i)
                                .map(|(_, v)| format!("{v}"))
                                .collect();
                            (Vec::new(), format!("t{f}"))
                        }
                    })
                    .collect();
                specs.push((format!("t{}", c.iter().join("")), k, faces));
            }
        }
        let borrowed: Vec<(&str, usize, Vec<(Vec<usize>, &str)>)> = specs
            .iter()
            .map(|(n, d, f)| {
                (
                    n.as_str(),
                    *d,
                    f.iter().map(|(w, t)| (w.clone(), t.as_str())).collect(),
                )
            })
            .collect();
        SimplicialSet::new(&borrowed, true)
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn dim(&self, id: SimplexId) -> usize {
        self.simplices[id].dim
    }

    pub fn name(&self, id: SimplexId) -> &str {
        &self.simplices[id].name
    }

    pub fn id(&self, name: &str) -> Option<SimplexId> {
        self.by_name.get(name).copied()
    }

    pub fn ids(&self) -> impl Iterator<Item = SimplexId> {
        0..self.simplices.len()
    }

    /// The face `d_i` of a non-degenerate simplex.
    pub fn face(&self, id: SimplexId, i: usize) -> &Face {
        &self.simplices[id].faces[i]
    }

    /// Pulls a (possibly degenerate) simplex back along `phi: [m] → [n]`
    /// and normalizes.
    pub fn restrict(&self, x: &Face, phi: &[usize]) -> Face {
        let mut simplex = x.simplex;
        let mut psi: Vec<usize> = phi.iter().map(|&p| x.eta[p]).collect();
        loop {
            let dim = self.simplices[simplex].dim;
            let mut hit = vec![false; dim + 1];
            for &v in &psi {
                hit[v] = true;
            }
            let Some(i) = hit.iter().rposition(|h| !h) else {
                return Face { simplex, eta: psi };
            };
            let f = &self.simplices[simplex].faces[i];
            psi = psi
                .iter()
                .map(|&v| f.eta[if v > i { v - 1 } else { v }])
                .collect();
            simplex = f.simplex;
        }
    }

    /// The face of `id` spanned by the given vertices (non-decreasing).
    pub fn face_by_vertices(&self, id: SimplexId, vertices: &[usize]) -> Face {
        let dim = self.simplices[id].dim;
        let whole = Face {
            simplex: id,
            eta: (0..=dim).collect(),
        };
        self.restrict(&whole, vertices)
    }

    /// Renders a face as `s1s0 name`, or just the name when non-degenerate.
    pub fn display_face(&self, f: &Face) -> String {
        let word = f.degeneracies();
        let name = self.name(f.simplex);
        if word.is_empty() {
            name.to_string()
        } else {
            format!("{} {name}", word.iter().map(|j| format!("s{j}")).join(""))
        }
    }
}

/// The coface `δ^i: [m] → [m + 1]` skipping `i`, as a vertex list.
fn coface_map(m: usize, i: usize) -> Vec<usize> {
    (0..=m + 1).filter(|&v| v != i).collect()
}

impl fmt::Display for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reduced {
            writeln!(f, "reduced")?;
        }
        for s in &self.simplices {
            writeln!(f, "simplex {} dim {}", s.name, s.dim)?;
            if !s.faces.is_empty() {
                writeln!(
                    f,
                    "faces {}",
                    s.faces.iter().map(|x| self.display_face(x)).join(" ")
                )?;
            }
        }
        Ok(())
    }
}

impl FromStr for SimplicialSet {
    type Err = Error;

    /// Line format: `simplex name dim n` followed, for `n > 0`, by
    /// `faces f₀ … f_n`, each face a name optionally preceded by a degeneracy
    /// word such as `s1s0` or `s1 s0`. A `reduced` line asserts a single
    /// vertex. `#` starts a comment.
    fn from_str(text: &str) -> Result<Self> {
        let mut reduced = false;
        let mut specs: Vec<(String, usize, Vec<(Vec<usize>, String)>)> = Vec::new();
        let mut pending: Option<usize> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["reduced"] => reduced = true,
                ["simplex", name, "dim", n] => {
                    if let Some(p) = pending {
                        return Err(perr(format!(
                            "simplex `{}` is missing its faces",
                            specs[p].0
                        )));
                    }
                    let n: usize = n
                        .parse()
                        .map_err(|_| perr(format!("bad dimension `{n}`")))?;
                    if n > 0 {
                        pending = Some(specs.len());
                    }
                    specs.push((name.to_string(), n, Vec::new()));
                }
                ["faces", rest @ ..] => {
                    let p = pending
                        .take()
                        .ok_or_else(|| perr("`faces` without a preceding simplex".into()))?;
                    let mut word = Vec::new();
                    for t in rest {
                        if is_degeneracy_token(t) {
                            word.extend(degeneracy_indices(t));
                        } else {
                            specs[p].2.push((std::mem::take(&mut word), t.to_string()));
                        }
                    }
                    if !word.is_empty() {
                        return Err(perr("degeneracy word without a simplex".into()));
                    }
                }
                _ => return Err(perr(format!("cannot read `{line}`"))),
            }
        }
        if let Some(p) = pending {
            return Err(Error::Parse(format!(
                "simplex `{}` is missing its faces",
                specs[p].0
            )));
        }
        let borrowed: Vec<(&str, usize, Vec<(Vec<usize>, &str)>)> = specs
            .iter()
            .map(|(n, d, f)| {
                (
                    n.as_str(),
                    *d,
                    f.iter().map(|(w, t)| (w.clone(), t.as_str())).collect(),
                )
            })
            .collect();
        SimplicialSet::new(&borrowed, reduced)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_words_round_trip() {
        assert!(is_degeneracy_token("s1s0"));
        assert!(is_degeneracy_token("s12"));
        assert!(!is_degeneracy_token("s"));
        assert!(!is_degeneracy_token("sx"));
        assert_eq!(eta_from_word(&[1, 0], 0).unwrap(), vec![0, 0, 0]);
        assert_eq!(eta_from_word(&[0], 1).unwrap(), vec![0, 0, 1]);
        assert_eq!(eta_from_word(&[1], 1).unwrap(), vec![0, 1, 1]);
        // s0 s0 = s1 s0 in normal form.
        let a = Face {
            simplex: 0,
            eta: eta_from_word(&[0, 0], 0).unwrap(),
        };
        assert_eq!(a.degeneracies(), vec![1, 0]);
        let b = Face {
            simplex: 0,
            eta: eta_from_word(&[2, 0], 1).unwrap(),
        };
        assert_eq!(b.degeneracies(), vec![2, 0]);
        assert!(eta_from_word(&[3], 1).is_err());
    }

    #[test]
    fn sphere_faces_collapse() {
        let x = SimplicialSet::sphere(2).unwrap();
        let s = x.id("s").unwrap();
        assert_eq!(
            x.face_by_vertices(s, &[0, 1, 2]),
            Face {
                simplex: s,
                eta: vec![0, 1, 2]
            }
        );
        let edge = x.face_by_vertices(s, &[0, 1]);
        assert_eq!(x.name(edge.simplex), "v");
        assert_eq!(x.display_face(&edge), "s0 v");
        assert_eq!(x.display_face(&x.face_by_vertices(s, &[2])), "v");
        assert!(SimplicialSet::sphere(4).is_ok());
    }

    #[test]
    fn standard_simplex_faces() {
        let x = SimplicialSet::from_facets(&[vec![0, 1, 2]]).unwrap();
        let t = x.id("v012").unwrap();
        let f = x.face_by_vertices(t, &[0, 2]);
        assert_eq!(x.name(f.simplex), "v02");
        assert_eq!(f, x.face(t, 1).clone());
        let deg = x.face_by_vertices(t, &[1, 1, 2]);
        assert_eq!(x.name(deg.simplex), "v12");
        assert_eq!(deg.degeneracies(), vec![0]);
        assert_eq!(x.len(), 7);
    }

    #[test]
    fn parses_and_checks_files() {
        let text = "reduced\nsimplex v dim 0\nsimplex s dim 2\nfaces s0 v s0 v s0 v\n";
        let x: SimplicialSet = text.parse().unwrap();
        assert_eq!(x.to_string(), text);
        // A wrong face dimension.
        assert!("simplex v dim 0\nsimplex s dim 2\nfaces v v v\n"
            .parse::<SimplicialSet>()
            .is_err());
        // Face identities fail: d0 d1 e ≠ d0 d0 e on two distinct vertices.
        let bad = "simplex a dim 0\nsimplex b dim 0\nsimplex e dim 1\nfaces a b\n\
                   simplex f dim 1\nfaces a b\nsimplex g dim 1\nfaces b a\n\
                   simplex t dim 2\nfaces e f g\n";
        assert!(matches!(
            bad.parse::<SimplicialSet>(),
            Err(Error::InvalidSimplicialSet(_))
        ));
        assert!("reduced\nsimplex a dim 0\nsimplex b dim 0\n"
            .parse::<SimplicialSet>()
            .is_err());
        assert!(matches!(
            "simplex s0 dim 0\n".parse::<SimplicialSet>(),
            Err(Error::InvalidSimplicialSet(_))
        ));
        assert!(matches!(
            "nonsense\n".parse::<SimplicialSet>(),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn quotient_model_is_consistent() {
        let x = SimplicialSet::simplex_mod_one_skeleton(4).unwrap();
        assert_eq!(x.len(), 1 + 10 + 5 + 1);
        let t = x.id("t01234").unwrap();
        let f = x.face_by_vertices(t, &[0, 2, 4]);
        assert_eq!(x.name(f.simplex), "t024");
        assert!(!f.is_degenerate());
        assert!(x.face_by_vertices(t, &[1, 3]).is_degenerate());
    }
}
