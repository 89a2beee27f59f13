//! Graded commutative algebras, acted on through the augmentation of the
//! surjection operad: degree-zero surjections multiply, the rest vanish.

use std::collections::HashMap;
use std::str::FromStr;

use super::{check_inputs, Gen, SurjAlgebra};
use crate::error::{Error, Result};
use crate::f2chain::{FormalSum, Grade};
use crate::surjection::Surjection;

#[derive(Clone, Debug)]
pub struct CommutativeAlgebra {
    basis: Vec<Gen>,
    grades: Vec<Grade>,
    unit: usize,
    /// `products[i][j]` is the product of basis elements `i` and `j`.
    products: Vec<Vec<FormalSum<Gen>>>,
    differential: Vec<FormalSum<Gen>>,
}

impl CommutativeAlgebra {
    /// Builds and checks an algebra. `products` lists each unordered pair of
    /// non-unit elements once (either order); unit products are implied.
    pub fn new(
        basis: &[(&str, i64)],
        unit: &str,
        products: &[(&str, &str, &[&str])],
    ) -> Result<Self> {
        let mut b = Builder::new();
        for &(name, deg) in basis {
            b.basis(name, deg)?;
        }
        b.unit(unit)?;
        for &(x, y, z) in products {
            b.mul(x, y, z)?;
        }
        b.finish()
    }

    /// `F2[x]/(x^height)` with `x` in cohomological degree `deg`. Basis names
    /// are `1`, `x`, `x2`, `x3`, …
    pub fn truncated_polynomial(deg: i64, height: usize) -> Self {
        let name = |i: usize| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x{i}"),
        };
        let basis: Vec<Gen> = (0..height).map(|i| Gen::new(&name(i), i)).collect();
        let grades = (0..height)
            .map(|i| Grade::from_cohomological(deg * i as i64))
            .collect();
        let products = (0..height)
            .map(|i| {
                (0..height)
                    .map(|j| {
                        if i + j < height {
                            FormalSum::single(basis[i + j].clone())
                        } else {
                            FormalSum::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        CommutativeAlgebra {
            differential: vec![FormalSum::zero(); height],
            basis,
            grades,
            unit: 0,
            products,
        }
    }

    /// The exterior algebra on one generator of cohomological degree `deg`.
    pub fn exterior(deg: i64) -> Self {
        Self::truncated_polynomial(deg, 2)
    }

    /// Installs an internal differential, given on basis names. Checks that
    /// it has degree +1 cohomologically, squares to zero, kills the unit and
    /// is a derivation.
    pub fn with_differential(mut self, diff: &[(&str, &[&str])]) -> Result<Self> {
        let mut table = vec![FormalSum::zero(); self.basis.len()];
        for &(x, ys) in diff {
            let i = self.index(x)?;
            for y in ys {
                let j = self.index(y)?;
                if self.grades[j].value() != self.grades[i].value() - 1 {
                    return Err(Error::InvalidAlgebra(format!(
                        "d({x}) contains `{y}` of the wrong degree"
                    )));
                }
                table[i].toggle(self.basis[j].clone());
            }
        }
        self.differential = table;
        if !self.differential[self.unit].is_zero() {
            return Err(Error::InvalidAlgebra("the unit must be a cycle".into()));
        }
        for g in &self.basis {
            if !self.differential_of_sum(&self.differential(g)).is_zero() {
                return Err(Error::InvalidAlgebra(format!("d(d({g})) is not zero")));
            }
            for h in &self.basis {
                let lhs = self.differential_of_sum(&self.products[g.index()][h.index()]);
                let mut rhs = self.mul_sums(&self.differential(g), &FormalSum::single(h.clone()));
                rhs += self.mul_sums(&FormalSum::single(g.clone()), &self.differential(h));
                if lhs != rhs {
                    return Err(Error::InvalidAlgebra(format!(
                        "the differential is not a derivation on {g}·{h}"
                    )));
                }
            }
        }
        Ok(self)
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|g| g.name() == name)
            .ok_or_else(|| Error::InvalidAlgebra(format!("unknown basis element `{name}`")))
    }

    pub fn mul(&self, a: &Gen, b: &Gen) -> &FormalSum<Gen> {
        &self.products[a.index()][b.index()]
    }

    pub fn mul_sums(&self, a: &FormalSum<Gen>, b: &FormalSum<Gen>) -> FormalSum<Gen> {
        let mut out = FormalSum::zero();
        for x in a.iter() {
            for y in b.iter() {
                out += self.mul(x, y).clone();
            }
        }
        out
    }
}

impl SurjAlgebra for CommutativeAlgebra {
    fn basis(&self) -> &[Gen] {
        &self.basis
    }

    fn grade(&self, g: &Gen) -> Grade {
        self.grades[g.index()]
    }

    fn unit(&self) -> Option<&Gen> {
        Some(&self.basis[self.unit])
    }

    fn differential(&self, g: &Gen) -> FormalSum<Gen> {
        self.differential[g.index()].clone()
    }

    fn apply(&self, u: &Surjection, inputs: &[Gen]) -> Result<FormalSum<Gen>> {
        check_inputs(&self.basis, u, inputs)?;
        if u.degree() > 0 {
            return Ok(FormalSum::zero());
        }
        let mut acc = FormalSum::single(self.basis[self.unit].clone());
        for g in inputs {
            acc = self.mul_sums(&acc, &FormalSum::single(g.clone()));
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

struct Builder {
    names: HashMap<String, usize>,
    basis: Vec<Gen>,
    grades: Vec<Grade>,
    unit: Option<usize>,
    table: HashMap<(usize, usize), FormalSum<Gen>>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            names: HashMap::new(),
            basis: Vec::new(),
            grades: Vec::new(),
            unit: None,
            table: HashMap::new(),
        }
    }

    fn basis(&mut self, name: &str, cohomological: i64) -> Result<()> {
        if name.is_empty() || name == "0" || name.contains(['+', '|', '[', ']', '=']) {
            return Err(Error::InvalidAlgebra(format!(
                "`{name}` is not a usable basis name"
            )));
        }
        if self
            .names
            .insert(name.to_string(), self.basis.len())
            .is_some()
        {
            return Err(Error::InvalidAlgebra(format!(
                "basis element `{name}` declared twice"
            )));
        }
        self.basis.push(Gen::new(name, self.basis.len()));
        self.grades.push(Grade::from_cohomological(cohomological));
        Ok(())
    }

    fn lookup(&self, name: &str) -> Result<usize> {
        self.names
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidAlgebra(format!("unknown basis element `{name}`")))
    }

    fn unit(&mut self, name: &str) -> Result<()> {
        if self.unit.is_some() {
            return Err(Error::InvalidAlgebra("unit declared twice".into()));
        }
        self.unit = Some(self.lookup(name)?);
        Ok(())
    }

    fn mul(&mut self, x: &str, y: &str, terms: &[&str]) -> Result<()> {
        let (i, j) = (self.lookup(x)?, self.lookup(y)?);
        let mut value = FormalSum::zero();
        for t in terms {
            value.toggle(self.basis[self.lookup(t)?].clone());
        }
        for key in [(i, j), (j, i)] {
            if let Some(old) = self.table.get(&key) {
                if *old != value {
                    return Err(Error::InvalidAlgebra(format!(
                        "conflicting products given for {x}·{y}"
                    )));
                }
            }
            self.table.insert(key, value.clone());
        }
        Ok(())
    }

    fn finish(self) -> Result<CommutativeAlgebra> {
        let unit = self
            .unit
            .ok_or_else(|| Error::InvalidAlgebra("no unit declared".into()))?;
        if self.grades[unit] != Grade(0) {
            return Err(Error::InvalidAlgebra("the unit must have degree 0".into()));
        }
        let n = self.basis.len();
        let mut products = vec![vec![FormalSum::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let given = self.table.get(&(i, j));
                products[i][j] = if i == unit || j == unit {
                    let other =
                        FormalSum::single(self.basis[if i == unit { j } else { i }].clone());
                    if given.is_some_and(|g| *g != other) {
                        return Err(Error::InvalidAlgebra(format!(
                            "product with the unit `{}` is not neutral",
                            self.basis[unit]
                        )));
                    }
                    other
                } else {
                    given.cloned().ok_or_else(|| {
                        Error::InvalidAlgebra(format!(
                            "product {}·{} is not specified",
                            self.basis[i], self.basis[j]
                        ))
                    })?
                };
                let expected = self.grades[i] + self.grades[j];
                if let Some(bad) = products[i][j]
                    .iter()
                    .find(|g| self.grades[g.index()] != expected)
                {
                    return Err(Error::InvalidAlgebra(format!(
                        "{}·{} = {bad} is not homogeneous",
                        self.basis[i], self.basis[j]
                    )));
                }
            }
        }
        let alg = CommutativeAlgebra {
            differential: vec![FormalSum::zero(); n],
            basis: self.basis,
            grades: self.grades,
            unit,
            products,
        };
        for a in &alg.basis {
            for b in &alg.basis {
                for c in &alg.basis {
                    let ab_c = alg.mul_sums(alg.mul(a, b), &FormalSum::single(c.clone()));
                    let a_bc = alg.mul_sums(&FormalSum::single(a.clone()), alg.mul(b, c));
                    if ab_c != a_bc {
                        return Err(Error::InvalidAlgebra(format!(
                            "multiplication is not associative on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(alg)
    }
}

impl FromStr for CommutativeAlgebra {
    type Err = Error;

    /// Line format: `basis name:deg …`, `unit name`, `mul a b = c | 0`, with
    /// `#` comments. A product may also be a `+`-joined sum.
    fn from_str(text: &str) -> Result<Self> {
        let mut b = Builder::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let mut words = line.split_whitespace();
            match words.next() {
                Some("basis") => {
                    for item in words {
                        let (name, deg) = item.split_once(':').ok_or_else(|| {
                            parse_err(&format!("expected name:degree, got `{item}`"))
                        })?;
                        let deg: i64 = deg
                            .parse()
                            .map_err(|_| parse_err(&format!("bad degree `{deg}`")))?;
                        b.basis(name, deg)?;
                    }
                }
                Some("unit") => {
                    let name = words.next().ok_or_else(|| parse_err("missing unit name"))?;
                    b.unit(name)?;
                }
                Some("mul") => {
                    let rest: Vec<&str> = words.collect();
                    let [x, y, "=", value @ ..] = rest.as_slice() else {
                        return Err(parse_err("expected `mul a b = c`"));
                    };
                    let value: Vec<&str> = match value {
                        ["0"] => Vec::new(),
                        [] => return Err(parse_err("missing product value")),
                        v => v.iter().copied().filter(|t| *t != "+").collect(),
                    };
                    b.mul(x, y, &value)?;
                }
                Some(other) => return Err(parse_err(&format!("unknown directive `{other}`"))),
                None => {}
            }
        }
        b.finish()
    }
}
