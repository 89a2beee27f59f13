//! Invariant sweeps over the operads, table reduction and the bar
//! construction. Each check reports its case count and the first
//! counterexample found.

use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebras::{CochainAlgebra, CommutativeAlgebra, SimplicialSet, SurjAlgebra};
use crate::bar::{Bar, BarWord};
use crate::barratt_eccles::{self, PermSimplex};
use crate::error::Result;
use crate::f2chain::FormalSum;
use crate::perm::Permutation;
use crate::surjection::{self, Surjection};
use crate::table_reduction::{tr, tr_sum};

#[derive(Clone, Debug)]
pub struct Report {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.name, self.cases)
        } else {
            write!(
                f,
                "FAIL {} ({} of {} cases failed; first: {})",
                self.name,
                self.failures,
                self.cases,
                self.first_failure.as_deref().unwrap_or("?")
            )
        }
    }
}

/// Runs `check` on every case in parallel. A case fails by returning a
/// description of the counterexample.
pub fn sweep<T, F>(name: &str, cases: Vec<T>, check: F) -> Report
where
    T: Send + Sync,
    F: Fn(&T) -> std::result::Result<(), String> + Send + Sync,
{
    let failures: Vec<(usize, String)> = cases
        .par_iter()
        .enumerate()
        .filter_map(|(i, c)| check(c).err().map(|e| (i, e)))
        .collect();
    Report {
        name: name.to_string(),
        cases: cases.len(),
        failures: failures.len(),
        first_failure: failures.into_iter().min_by_key(|(i, _)| *i).map(|(_, e)| e),
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(
    lhs: T,
    rhs: T,
    what: impl FnOnce() -> String,
) -> std::result::Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {lhs:?} != {rhs:?}", what()))
    }
}

fn ok_or_string<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// The permutation `σ ∘_k ρ`: `σ` with its value `k` blown up to a block
/// on which `ρ` acts.
pub fn block_permutation(sigma: &Permutation, k: usize, rho: &Permutation) -> Permutation {
    let s = rho.arity();
    let sk = sigma.apply(k as u8) as usize;
    let lift = |x: usize| if x > sk { x + s - 1 } else { x };
    let images: Vec<u8> = (1..=sigma.arity() + s - 1)
        .map(|i| {
            if i < k {
                lift(sigma.apply(i as u8) as usize)
            } else if i < k + s {
                sk + rho.apply((i - k + 1) as u8) as usize - 1
            } else {
                lift(sigma.apply((i - s + 1) as u8) as usize)
            }
        })
        .map(|x| x as u8)
        .collect();
    Permutation::new(images).expect("block permutation is a permutation")
}

fn all_surjections(max_arity: usize, max_len: usize) -> Vec<Surjection> {
    (1..=max_arity)
        .flat_map(|r| (0..=max_len.saturating_sub(r)).flat_map(move |d| Surjection::all(r, d)))
        .collect()
}

fn all_simplices(max_arity: usize, max_degree: usize) -> Vec<PermSimplex> {
    (1..=max_arity)
        .flat_map(|r| (0..=max_degree).flat_map(move |d| PermSimplex::all(r, d)))
        .collect()
}

/// Triples `(x, k, y)` with `arity(x) + arity(y) - 1 ≤ max_arity` and
/// `deg x + deg y ≤ max_degree`, both arities at least 2 unless stated.
fn pairs<T: Clone>(
    all: &[T],
    arity: impl Fn(&T) -> usize,
    degree: impl Fn(&T) -> usize,
    max_arity: usize,
    max_degree: usize,
) -> Vec<(T, usize, T)> {
    let mut out = Vec::new();
    for x in all {
        for y in all {
            if arity(x) + arity(y) - 1 <= max_arity && degree(x) + degree(y) <= max_degree {
                for k in 1..=arity(x) {
                    out.push((x.clone(), k, y.clone()));
                }
            }
        }
    }
    out
}

fn triples<T: Clone>(
    all: &[T],
    arity: impl Fn(&T) -> usize,
    degree: impl Fn(&T) -> usize,
    max_arity: usize,
    max_degree: usize,
) -> Vec<(T, T, T)> {
    let mut out = Vec::new();
    for x in all.iter().filter(|x| arity(x) >= 2) {
        for y in all.iter().filter(|y| arity(y) >= 2) {
            for z in all.iter().filter(|z| arity(z) >= 2) {
                if arity(x) + arity(y) + arity(z) - 2 <= max_arity
                    && degree(x) + degree(y) + degree(z) <= max_degree
                {
                    out.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
    }
    out
}

/// Square-zero, chain rule, associativity and equivariance for both operads,
/// plus the properties of the Alexander–Whitney diagonal.
pub fn operads() -> Vec<Report> {
    let mut reports = Vec::new();
    let surj = all_surjections(4, 8);
    reports.push(sweep(
        "surjection d^2 = 0 (r <= 4, length <= 8)",
        surj,
        |u| {
            let dd = surjection::differential_of_sum(&u.differential());
            expect_eq(dd.is_zero(), true, || format!("d^2 {u}"))
        },
    ));
    let be = all_simplices(3, 4);
    reports.push(sweep("Barratt-Eccles d^2 = 0 (r <= 3, d <= 4)", be, |w| {
        let dd = barratt_eccles::differential_of_sum(&w.differential());
        expect_eq(dd.is_zero(), true, || format!("d^2 {w}"))
    }));

    let small = all_surjections(3, 6);
    let surj_pairs = pairs(&small, Surjection::arity, Surjection::degree, 5, 3)
        .into_iter()
        .filter(|(x, _, y)| x.arity() <= 3 && y.arity() <= 3)
        .collect();
    reports.push(sweep(
        "surjection chain rule (arities <= 3, degree <= 3)",
        surj_pairs,
        |(u, k, v)| {
            let lhs = surjection::differential_of_sum(&ok_or_string(u.compose(*k, v))?);
            let mut rhs = ok_or_string(surjection::compose_sums(
                &u.differential(),
                *k,
                &FormalSum::single(v.clone()),
            ))?;
            rhs += ok_or_string(surjection::compose_sums(
                &FormalSum::single(u.clone()),
                *k,
                &v.differential(),
            ))?;
            expect_eq(lhs, rhs, || format!("d({u} o_{k} {v})"))
        },
    ));

    let surj_small = all_surjections(3, 5);
    let surj_triples = triples(&surj_small, Surjection::arity, Surjection::degree, 5, 2);
    reports.push(sweep(
        "surjection associativity (arity <= 5, degree <= 2)",
        surj_triples,
        |(u, v, w)| surj_associativity(u, v, w),
    ));
    let surj_equi = pairs(&surj_small, Surjection::arity, Surjection::degree, 4, 2);
    reports.push(sweep("surjection equivariance", surj_equi, |(u, k, v)| {
        for sigma in Permutation::all(u.arity()) {
            for rho in Permutation::all(v.arity()) {
                let lhs = ok_or_string(ok_or_string(u.permute(&sigma))?.compose(
                    sigma.apply(*k as u8) as usize,
                    &ok_or_string(v.permute(&rho))?,
                ))?;
                let block = block_permutation(&sigma, *k, &rho);
                let rhs = ok_or_string(u.compose(*k, v))?
                    .try_map_linear(|t| t.permute(&block).map(FormalSum::single))
                    .map_err(|e| e.to_string())?;
                expect_eq(lhs, rhs, || format!("{sigma}.{u} o {rho}.{v} at {k}"))?;
            }
        }
        Ok(())
    }));

    let be_small = all_simplices(3, 2);
    let be_pairs = pairs(&be_small, PermSimplex::arity, PermSimplex::degree, 4, 2);
    reports.push(sweep(
        "Barratt-Eccles chain rule (arity <= 4, degree <= 2)",
        be_pairs.clone(),
        |(x, k, y)| {
            let lhs = barratt_eccles::differential_of_sum(&ok_or_string(x.compose(*k, y))?);
            let mut rhs = ok_or_string(barratt_eccles::compose_sums(
                &x.differential(),
                *k,
                &FormalSum::single(y.clone()),
            ))?;
            rhs += ok_or_string(barratt_eccles::compose_sums(
                &FormalSum::single(x.clone()),
                *k,
                &y.differential(),
            ))?;
            expect_eq(lhs, rhs, || format!("d({x} o_{k} {y})"))
        },
    ));
    reports.push(sweep(
        "Barratt-Eccles equivariance",
        be_pairs,
        |(x, k, y)| {
            for sigma in Permutation::all(x.arity()) {
                for rho in Permutation::all(y.arity()) {
                    let lhs = ok_or_string(ok_or_string(x.permute(&sigma))?.compose(
                        sigma.apply(*k as u8) as usize,
                        &ok_or_string(y.permute(&rho))?,
                    ))?;
                    let block = block_permutation(&sigma, *k, &rho);
                    let rhs = ok_or_string(x.compose(*k, y))?
                        .try_map_linear(|t| t.permute(&block).map(FormalSum::single))
                        .map_err(|e| e.to_string())?;
                    expect_eq(lhs, rhs, || format!("{sigma}.({x}) o {rho}.({y}) at {k}"))?;
                }
            }
            Ok(())
        },
    ));
    let be_triples = triples(&be_small, PermSimplex::arity, PermSimplex::degree, 4, 2);
    reports.push(sweep(
        "Barratt-Eccles associativity (arity <= 4, degree <= 2)",
        be_triples,
        |(x, y, z)| be_associativity(x, y, z),
    ));

    let diag_cases = all_simplices(3, 3);
    reports.push(sweep(
        "diagonal coassociative, chain map, counital (r <= 3, d <= 3)",
        diag_cases,
        diagonal_laws,
    ));
    reports
}

fn surj_associativity(
    u: &Surjection,
    v: &Surjection,
    w: &Surjection,
) -> std::result::Result<(), String> {
    let one = |x: &Surjection| FormalSum::single(x.clone());
    let (r, s) = (u.arity(), v.arity());
    for k in 1..=r {
        // Sequential: w plugged into v, then into u.
        for j in 1..=s {
            let lhs = ok_or_string(surjection::compose_sums(
                &ok_or_string(u.compose(k, v))?,
                k + j - 1,
                &one(w),
            ))?;
            let rhs = ok_or_string(surjection::compose_sums(
                &one(u),
                k,
                &ok_or_string(v.compose(j, w))?,
            ))?;
            expect_eq(lhs, rhs, || format!("({u} o_{k} {v}) o_{} {w}", k + j - 1))?;
        }
        // Parallel: v and w in distinct slots k < l of u.
        for l in k + 1..=r {
            let lhs = ok_or_string(surjection::compose_sums(
                &ok_or_string(u.compose(l, w))?,
                k,
                &one(v),
            ))?;
            let rhs = ok_or_string(surjection::compose_sums(
                &ok_or_string(u.compose(k, v))?,
                l + s - 1,
                &one(w),
            ))?;
            expect_eq(lhs, rhs, || format!("{u} with {v} at {k} and {w} at {l}"))?;
        }
    }
    Ok(())
}

fn be_associativity(
    x: &PermSimplex,
    y: &PermSimplex,
    z: &PermSimplex,
) -> std::result::Result<(), String> {
    let one = |a: &PermSimplex| FormalSum::single(a.clone());
    let (r, s) = (x.arity(), y.arity());
    for k in 1..=r {
        for j in 1..=s {
            let lhs = ok_or_string(barratt_eccles::compose_sums(
                &ok_or_string(x.compose(k, y))?,
                k + j - 1,
                &one(z),
            ))?;
            let rhs = ok_or_string(barratt_eccles::compose_sums(
                &one(x),
                k,
                &ok_or_string(y.compose(j, z))?,
            ))?;
            expect_eq(lhs, rhs, || {
                format!("({x}) o_{k} ({y}) o_{} ({z})", k + j - 1)
            })?;
        }
        for l in k + 1..=r {
            let lhs = ok_or_string(barratt_eccles::compose_sums(
                &ok_or_string(x.compose(l, z))?,
                k,
                &one(y),
            ))?;
            let rhs = ok_or_string(barratt_eccles::compose_sums(
                &ok_or_string(x.compose(k, y))?,
                l + s - 1,
                &one(z),
            ))?;
            expect_eq(lhs, rhs, || {
                format!("({x}) with ({y}) at {k} and ({z}) at {l}")
            })?;
        }
    }
    Ok(())
}

fn diagonal_laws(w: &PermSimplex) -> std::result::Result<(), String> {
    let diag = w.diagonal();
    let mut left: FormalSum<(PermSimplex, PermSimplex, PermSimplex)> = FormalSum::zero();
    let mut right = FormalSum::zero();
    for (a, b) in diag.iter() {
        for (a1, a2) in a.diagonal().iter() {
            left.toggle((a1.clone(), a2.clone(), b.clone()));
        }
        for (b1, b2) in b.diagonal().iter() {
            right.toggle((a.clone(), b1.clone(), b2.clone()));
        }
    }
    expect_eq(&left, &right, || format!("coassociativity on {w}"))?;

    let lhs = w.differential().map_linear(PermSimplex::diagonal);
    let mut rhs = FormalSum::zero();
    for (a, b) in diag.iter() {
        for da in a.differential().iter() {
            rhs.toggle((da.clone(), b.clone()));
        }
        for db in b.differential().iter() {
            rhs.toggle((a.clone(), db.clone()));
        }
    }
    expect_eq(lhs, rhs, || format!("diagonal chain map on {w}"))?;

    // Counit: keep terms whose other factor is a vertex.
    let left_counit: FormalSum<PermSimplex> = diag
        .iter()
        .filter(|(_, b)| b.degree() == 0)
        .map(|(a, _)| a.clone())
        .collect();
    let right_counit: FormalSum<PermSimplex> = diag
        .iter()
        .filter(|(a, _)| a.degree() == 0)
        .map(|(_, b)| b.clone())
        .collect();
    expect_eq(&left_counit, &FormalSum::single(w.clone()), || {
        format!("left counit on {w}")
    })?;
    expect_eq(&right_counit, &FormalSum::single(w.clone()), || {
        format!("right counit on {w}")
    })
}

/// Chain map, equivariance, morphism property and values on `θ_d`.
pub fn table_reduction(samples: usize, seed: u64) -> Vec<Report> {
    let mut reports = Vec::new();
    let mut cases = all_simplices(3, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let perms4 = Permutation::all(4);
    for _ in 0..samples {
        let d = rng.gen_range(0..=2);
        let mut levels: Vec<Permutation> = Vec::new();
        while levels.len() <= d {
            let p = perms4.choose(&mut rng).expect("nonempty").clone();
            if levels.last() != Some(&p) {
                levels.push(p);
            }
        }
        cases.push(
            PermSimplex::new(levels)
                .expect("same arity")
                .expect("non-degenerate"),
        );
    }
    reports.push(sweep(
        "TR chain map and equivariance (r <= 3, d <= 3; sampled r = 4, d <= 2)",
        cases,
        |w| {
            let x = tr(w);
            expect_eq(
                surjection::differential_of_sum(&x),
                tr_sum(&w.differential()),
                || format!("d tr({w})"),
            )?;
            for x_deg in x.iter() {
                if x_deg.degree() != w.degree() {
                    return Err(format!("tr({w}) contains {x_deg} of the wrong degree"));
                }
            }
            for sigma in Permutation::all(w.arity()) {
                let lhs = tr(&ok_or_string(w.permute(&sigma))?);
                let rhs = x
                    .try_map_linear(|u| u.permute(&sigma).map(FormalSum::single))
                    .map_err(|e| e.to_string())?;
                expect_eq(lhs, rhs, || format!("tr({sigma}.({w}))"))?;
            }
            Ok(())
        },
    ));
    reports.push(sweep(
        "TR(theta_d) is the alternating word (d <= 5)",
        (0..=5).collect(),
        |&d| {
            expect_eq(
                tr(&PermSimplex::theta(d)),
                FormalSum::single(Surjection::theta(d)),
                || format!("tr(theta_{d})"),
            )
        },
    ));
    let small = all_simplices(3, 2);
    let compositions = pairs(&small, PermSimplex::arity, PermSimplex::degree, 4, 2);
    reports.push(sweep(
        "TR operad morphism (arity <= 4, degree <= 2)",
        compositions,
        |(x, k, y)| {
            let lhs = tr_sum(&ok_or_string(x.compose(*k, y))?);
            let rhs = ok_or_string(surjection::compose_sums(&tr(x), *k, &tr(y)))?;
            expect_eq(lhs, rhs, || format!("tr(({x}) o_{k} ({y}))"))
        },
    ));
    reports
}

/// The algebras the bar suites run over, with display names.
pub fn standard_algebras() -> Vec<(String, Bar)> {
    let mk = |a: Arc<dyn SurjAlgebra>| Bar::new(a).expect("standard algebras are connected");
    vec![
        (
            "truncated polynomials x^3 = 0".to_string(),
            mk(Arc::new(CommutativeAlgebra::truncated_polynomial(2, 3))),
        ),
        (
            "cochains on the 2-sphere".to_string(),
            mk(Arc::new(CochainAlgebra::new(
                SimplicialSet::sphere(2).expect("valid model"),
            ))),
        ),
        (
            "cochains on the 3-simplex mod its 1-skeleton".to_string(),
            mk(Arc::new(CochainAlgebra::new(
                SimplicialSet::simplex_mod_one_skeleton(3).expect("valid model"),
            ))),
        ),
    ]
}

/// `θ_d` or `τ·θ_d`.
pub fn arity_two_simplex(d: usize, twisted: bool) -> PermSimplex {
    let t = PermSimplex::theta(d);
    if twisted {
        t.permute(&Permutation::tau()).expect("arity 2")
    } else {
        t
    }
}

/// A random pair of words with at most `max_total` letters in all.
pub fn random_words<R: Rng>(
    bar: &Bar,
    rng: &mut R,
    max_total: usize,
    parts: usize,
) -> Vec<BarWord> {
    let letters = bar.letters();
    let total = rng.gen_range(0..=max_total);
    let mut lens = vec![0; parts];
    for _ in 0..total {
        lens[rng.gen_range(0..parts)] += 1;
    }
    lens.into_iter()
        .map(|n| {
            BarWord(
                (0..n)
                    .map(|_| letters.choose(rng).expect("nonempty ideal").clone())
                    .collect(),
            )
        })
        .collect()
}

#[derive(Clone, Debug)]
struct BarCase {
    w: PermSimplex,
    words: Vec<BarWord>,
}

fn bar_cases(bar: &Bar, trials: usize, seed: u64, max_total: usize) -> Vec<BarCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| BarCase {
            w: arity_two_simplex(rng.gen_range(0..=3), rng.gen_bool(0.5)),
            words: random_words(bar, &mut rng, max_total, 2),
        })
        .collect()
}

fn show(words: &[BarWord]) -> String {
    words.iter().join(", ")
}

/// The chain-map property of the operation of `w` on the bar construction.
pub fn check_chain_map(
    bar: &Bar,
    w: &PermSimplex,
    words: &[BarWord],
) -> std::result::Result<(), String> {
    let lhs = ok_or_string(bar.differential_of_sum(&ok_or_string(bar.full_op(w, words))?))?;
    let mut rhs = ok_or_string(bar.full_op_sums(
        &w.differential(),
        &words.iter().cloned().map(FormalSum::single).collect_vec(),
    ))?;
    for i in 0..words.len() {
        let mut inputs: Vec<FormalSum<BarWord>> =
            words.iter().cloned().map(FormalSum::single).collect();
        inputs[i] = ok_or_string(bar.differential(&words[i]))?;
        rhs += ok_or_string(bar.full_op_sums(&FormalSum::single(w.clone()), &inputs))?;
    }
    expect_eq(lhs, rhs, || {
        format!("chain map for ({w}) on {}", show(words))
    })
}

/// `c₁⌣_{d-1}c₂ + c₂⌣_{d-1}c₁ = D(c₁⌣_d c₂) + D(c₁)⌣_d c₂ + c₁⌣_d D(c₂)`.
pub fn check_cup_boundary(
    bar: &Bar,
    d: usize,
    c1: &BarWord,
    c2: &BarWord,
) -> std::result::Result<(), String> {
    let cup_sums = |k: usize, a: &FormalSum<BarWord>, b: &FormalSum<BarWord>| {
        ok_or_string(bar.full_op_sums(
            &FormalSum::single(PermSimplex::theta(k)),
            &[a.clone(), b.clone()],
        ))
    };
    let lhs = ok_or_string(bar.cup(d - 1, c1, c2))? + ok_or_string(bar.cup(d - 1, c2, c1))?;
    let mut rhs = ok_or_string(bar.differential_of_sum(&ok_or_string(bar.cup(d, c1, c2))?))?;
    rhs += cup_sums(
        d,
        &ok_or_string(bar.differential(c1))?,
        &FormalSum::single(c2.clone()),
    )?;
    rhs += cup_sums(
        d,
        &FormalSum::single(c1.clone()),
        &ok_or_string(bar.differential(c2))?,
    )?;
    expect_eq(lhs, rhs, || {
        format!("boundary relation for cup_{d} on {c1}, {c2}")
    })
}

/// Chain-map property and the boundary relation of the cup-i products.
pub fn bar(trials: usize, seed: u64) -> Vec<Report> {
    let mut reports = Vec::new();
    for (name, bar) in standard_algebras() {
        let cases = bar_cases(&bar, trials, seed, 4);
        reports.push(sweep(
            &format!("bar chain map over {name}"),
            cases.clone(),
            |c| check_chain_map(&bar, &c.w, &c.words),
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let kad: Vec<(usize, BarCase)> = cases
            .into_iter()
            .map(|c| (rng.gen_range(1..=3), c))
            .collect();
        reports.push(sweep(
            &format!("cup-i boundary relation over {name}"),
            kad,
            |(d, c)| check_cup_boundary(&bar, *d, &c.words[0], &c.words[1]),
        ));
    }
    reports
}

/// Compatibility of the operations with deconcatenation.
pub fn check_hopf(
    bar: &Bar,
    w: &PermSimplex,
    words: &[BarWord],
) -> std::result::Result<(), String> {
    let mut lhs: FormalSum<(BarWord, BarWord)> = FormalSum::zero();
    for c in ok_or_string(bar.full_op(w, words))?.iter() {
        for split in c.deconcat(2) {
            let [a, b]: [BarWord; 2] = split.try_into().expect("two parts");
            lhs.toggle((a, b));
        }
    }
    let mut rhs = FormalSum::zero();
    let splits: Vec<Vec<Vec<BarWord>>> = words.iter().map(|c| c.deconcat(2)).collect();
    for (w1, w2) in w.diagonal().iter() {
        for parts in splits.iter().map(|s| s.iter()).multi_cartesian_product() {
            let first: Vec<BarWord> = parts.iter().map(|p| p[0].clone()).collect();
            let second: Vec<BarWord> = parts.iter().map(|p| p[1].clone()).collect();
            let x = ok_or_string(bar.full_op(w1, &first))?;
            if x.is_zero() {
                continue;
            }
            let y = ok_or_string(bar.full_op(w2, &second))?;
            for a in x.iter() {
                for b in y.iter() {
                    rhs.toggle((a.clone(), b.clone()));
                }
            }
        }
    }
    expect_eq(lhs, rhs, || {
        format!("Hopf compatibility for ({w}) on {}", show(words))
    })
}

pub fn check_cup0_associative(
    bar: &Bar,
    a: &BarWord,
    b: &BarWord,
    c: &BarWord,
) -> std::result::Result<(), String> {
    let theta = FormalSum::single(PermSimplex::theta(0));
    let one = |x: &BarWord| FormalSum::single(x.clone());
    let lhs = ok_or_string(bar.full_op_sums(&theta, &[ok_or_string(bar.cup(0, a, b))?, one(c)]))?;
    let rhs = ok_or_string(bar.full_op_sums(&theta, &[one(a), ok_or_string(bar.cup(0, b, c))?]))?;
    expect_eq(lhs, rhs, || {
        format!("associativity of cup_0 on {a}, {b}, {c}")
    })
}

/// `θ₀ ∘₁ θ₀ = id₃` acts as both nested products.
pub fn check_coherence(
    bar: &Bar,
    a: &BarWord,
    b: &BarWord,
    c: &BarWord,
) -> std::result::Result<(), String> {
    let theta = PermSimplex::theta(0);
    let composite = ok_or_string(theta.compose(1, &theta))?;
    let direct = ok_or_string(bar.full_op_sums(
        &composite,
        &[
            FormalSum::single(a.clone()),
            FormalSum::single(b.clone()),
            FormalSum::single(c.clone()),
        ],
    ))?;
    let nested = ok_or_string(bar.full_op_sums(
        &FormalSum::single(theta.clone()),
        &[
            ok_or_string(bar.cup(0, a, b))?,
            FormalSum::single(c.clone()),
        ],
    ))?;
    expect_eq(direct, nested, || {
        format!("operad coherence on {a}, {b}, {c}")
    })
}

pub fn check_equivariance(
    bar: &Bar,
    w: &PermSimplex,
    c1: &BarWord,
    c2: &BarWord,
) -> std::result::Result<(), String> {
    let lhs = ok_or_string(bar.full_op(
        &ok_or_string(w.permute(&Permutation::tau()))?,
        &[c1.clone(), c2.clone()],
    ))?;
    let rhs = ok_or_string(bar.full_op(w, &[c2.clone(), c1.clone()]))?;
    expect_eq(lhs, rhs, || format!("equivariance for ({w}) on {c1}, {c2}"))
}

/// The shuffle product of two words.
pub fn shuffle(a: &BarWord, b: &BarWord) -> FormalSum<BarWord> {
    let n = a.len() + b.len();
    (0..n)
        .combinations(a.len())
        .map(|slots| {
            let (mut i, mut j) = (0, 0);
            BarWord(
                (0..n)
                    .map(|t| {
                        if slots.contains(&t) {
                            i += 1;
                            a.0[i - 1].clone()
                        } else {
                            j += 1;
                            b.0[j - 1].clone()
                        }
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Hopf compatibility, strict associativity of `⌣₀`, operad coherence,
/// equivariance, and the shuffle product for commutative algebras.
pub fn hopf(trials: usize, seed: u64) -> Vec<Report> {
    let mut reports = Vec::new();
    for (name, bar) in standard_algebras() {
        let cases = bar_cases(&bar, trials, seed, 4);
        reports.push(sweep(
            &format!("Hopf compatibility over {name}"),
            cases.clone(),
            |c| check_hopf(&bar, &c.w, &c.words),
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        let triples: Vec<Vec<BarWord>> = (0..trials)
            .map(|_| {
                (0..3)
                    .map(|_| random_words(&bar, &mut rng, 3, 1).pop().expect("one word"))
                    .collect()
            })
            .collect();
        reports.push(sweep(
            &format!("cup_0 associativity over {name}"),
            triples.clone(),
            |t| check_cup0_associative(&bar, &t[0], &t[1], &t[2]),
        ));
        let coherence: Vec<Vec<BarWord>> = triples
            .into_iter()
            .map(|t| {
                t.into_iter()
                    .map(|c| BarWord(c.0.into_iter().take(2).collect()))
                    .collect()
            })
            .collect();
        reports.push(sweep(
            &format!("operad coherence over {name}"),
            coherence,
            |t| check_coherence(&bar, &t[0], &t[1], &t[2]),
        ));
        let equi: Vec<BarCase> = cases.into_iter().filter(|c| c.w.degree() <= 2).collect();
        reports.push(sweep(&format!("equivariance over {name}"), equi, |c| {
            check_equivariance(&bar, &c.w, &c.words[0], &c.words[1])
        }));
    }
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
    .expect("valid algebra");
    let bar = Bar::new(Arc::new(alg)).expect("connected");
    let letters = bar.letters();
    let words: Vec<BarWord> = (0..=3)
        .flat_map(|n| {
            (0..n)
                .map(|_| letters.iter().cloned())
                .multi_cartesian_product()
                .map(BarWord)
                .collect_vec()
        })
        .chain(std::iter::once(BarWord::empty()))
        .unique()
        .collect();
    let pairs: Vec<(BarWord, BarWord)> = words
        .iter()
        .cartesian_product(&words)
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect();
    reports.push(sweep(
        "cup_0 is the shuffle product for a commutative algebra",
        pairs,
        |(a, b)| {
            expect_eq(ok_or_string(bar.cup(0, a, b))?, shuffle(a, b), || {
                format!("{a} * {b}")
            })
        },
    ));
    reports
}

pub fn all(trials: usize, seed: u64) -> Vec<Report> {
    let mut r = operads();
    r.extend(table_reduction(trials, seed));
    r.extend(bar(trials, seed));
    r.extend(hopf(trials, seed));
    r
}
