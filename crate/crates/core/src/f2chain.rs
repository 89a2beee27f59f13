//! Formal sums over the two-element field, graded complexes given by finite
//! basis slices, and homology ranks by Gaussian elimination.
//!
//! Everything here works in characteristic 2: a sum is a set of basis keys,
//! adding a key that is already present removes it, and no signs ever appear.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, RangeInclusive};
use std::sync::Arc;

use thiserror::Error;

/// A single homological grade. Cohomological degree `n` is stored as `-n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Grade(pub i64);

impl Grade {
    pub fn from_cohomological(degree: i64) -> Self {
        Grade(-degree)
    }

    pub fn cohomological(self) -> i64 {
        -self.0
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

impl Add for Grade {
    type Output = Grade;
    fn add(self, rhs: Grade) -> Grade {
        Grade(self.0 + rhs.0)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite sum of basis keys with coefficients in F2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalSum<K: Ord> {
    keys: BTreeSet<K>,
}

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        FormalSum {
            keys: BTreeSet::new(),
        }
    }
}

impl<K: Ord> FormalSum<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K) -> Self {
        let mut keys = BTreeSet::new();
        keys.insert(key);
        FormalSum { keys }
    }

    /// Adds one copy of `key`, cancelling it if already present.
    pub fn toggle(&mut self, key: K) {
        if !self.keys.remove(&key) {
            self.keys.insert(key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn contains(&self, key: &K) -> bool {
        self.keys.contains(key)
    }

    /// Keys in canonical (sorted) order.
    pub fn iter(&self) -> impl Iterator<Item = &K> + '_ {
        self.keys.iter()
    }

    pub fn into_keys(self) -> impl Iterator<Item = K> {
        self.keys.into_iter()
    }

    /// Extends a map on basis keys linearly.
    pub fn map_linear<L: Ord, F>(&self, mut f: F) -> FormalSum<L>
    where
        F: FnMut(&K) -> FormalSum<L>,
    {
        let mut out = FormalSum::zero();
        for k in &self.keys {
            out += f(k);
        }
        out
    }

    /// Like [`map_linear`](Self::map_linear) for maps that can fail.
    pub fn try_map_linear<L: Ord, E, F>(&self, mut f: F) -> Result<FormalSum<L>, E>
    where
        F: FnMut(&K) -> Result<FormalSum<L>, E>,
    {
        let mut out = FormalSum::zero();
        for k in &self.keys {
            out += f(k)?;
        }
        Ok(out)
    }
}

impl<K: Ord> FromIterator<K> for FormalSum<K> {
    /// Collects with characteristic-2 cancellation: keys seen an even number
    /// of times vanish.
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut out = FormalSum::zero();
        for k in iter {
            out.toggle(k);
        }
        out
    }
}

impl<K: Ord> Extend<K> for FormalSum<K> {
    fn extend<I: IntoIterator<Item = K>>(&mut self, iter: I) {
        for k in iter {
            self.toggle(k);
        }
    }
}

impl<K: Ord> AddAssign for FormalSum<K> {
    fn add_assign(&mut self, rhs: Self) {
        for k in rhs.keys {
            self.toggle(k);
        }
    }
}

impl<K: Ord + Clone> AddAssign<&FormalSum<K>> for FormalSum<K> {
    fn add_assign(&mut self, rhs: &FormalSum<K>) {
        for k in &rhs.keys {
            self.toggle(k.clone());
        }
    }
}

impl<K: Ord> Add for FormalSum<K> {
    type Output = FormalSum<K>;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

/// Symmetric difference of the two key sets.
pub fn add<K: Ord + Clone>(a: &FormalSum<K>, b: &FormalSum<K>) -> FormalSum<K> {
    let mut out = a.clone();
    out += b;
    out
}

impl<K: Ord + fmt::Display> fmt::Display for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.keys.is_empty() {
            return write!(f, "0");
        }
        for (i, k) in self.keys.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.keys.iter()).finish()
    }
}

/// Dense matrix over F2, one bit-packed row per vector.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    cols: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        BitMatrix {
            cols,
            words: cols.div_ceil(64).max(1),
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// Appends a row given by the column indices of its nonzero entries.
    /// Repeated indices cancel.
    pub fn push_row<I: IntoIterator<Item = usize>>(&mut self, ones: I) {
        let mut row = vec![0u64; self.words];
        for c in ones {
            assert!(c < self.cols, "column {c} out of range {}", self.cols);
            row[c / 64] ^= 1 << (c % 64);
        }
        self.rows.push(row);
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row][col / 64] >> (col % 64) & 1 == 1
    }

    /// Row-reduces in place and returns the pivot column of each nonzero row.
    fn eliminate(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let (w, bit) = (col / 64, 1u64 << (col % 64));
            let Some(p) = (rank..self.rows.len()).find(|&r| self.rows[r][w] & bit != 0) else {
                continue;
            };
            self.rows.swap(rank, p);
            let pivot = self.rows[rank].clone();
            for r in 0..self.rows.len() {
                if r != rank && self.rows[r][w] & bit != 0 {
                    for (x, y) in self.rows[r][w..].iter_mut().zip(&pivot[w..]) {
                        *x ^= *y;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows.len() {
                break;
            }
        }
        self.rows.truncate(rank);
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().len()
    }

    /// Basis of the null space `{x : x · row = 0 for every row}`, each vector
    /// given by its set of nonzero coordinates.
    pub fn kernel_basis(&self) -> Vec<Vec<usize>> {
        let mut m = self.clone();
        let pivots = m.eliminate();
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![free];
            for (r, &p) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    v.push(p);
                }
            }
            v.sort_unstable();
            basis.push(v);
        }
        basis
    }

    /// Whether the vector with the given support lies in the row span.
    pub fn row_span_contains(&self, support: &[usize]) -> bool {
        let before = self.rank();
        let mut m = self.clone();
        m.push_row(support.iter().copied());
        m.rank() == before
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("incomplete slice: no basis declared at grade {0}")]
    IncompleteSlice(Grade),
    #[error("differential of a grade-{grade} element has a term outside the declared basis of grade {}", grade.0 - 1)]
    NotHomogeneous { grade: Grade },
}

type DiffFn<K> = dyn Fn(&K) -> FormalSum<K> + Send + Sync;

/// A finite window of a chain complex: an ordered basis in each declared
/// grade and a differential of degree -1 on basis keys.
#[derive(Clone)]
pub struct ComplexSlice<K: Ord> {
    basis: BTreeMap<Grade, Vec<K>>,
    diff: Arc<DiffFn<K>>,
}

/// Homology dimensions over a range of grades.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub dims: BTreeMap<Grade, usize>,
    /// Grades whose incoming boundaries were truncated; their values are upper
    /// bounds only.
    pub unreliable: BTreeSet<Grade>,
}

impl Homology {
    pub fn dim(&self, g: Grade) -> Option<usize> {
        self.dims.get(&g).copied()
    }

    /// Dimension at a cohomological degree.
    pub fn cohomological(&self, degree: i64) -> Option<usize> {
        self.dim(Grade::from_cohomological(degree))
    }
}

fn grades_of(range: &RangeInclusive<Grade>) -> impl Iterator<Item = Grade> {
    (range.start().0..=range.end().0).map(Grade)
}

impl<K: Ord + Clone + Hash + Send + Sync> ComplexSlice<K> {
    pub fn new<F>(basis: BTreeMap<Grade, Vec<K>>, diff: F) -> Self
    where
        F: Fn(&K) -> FormalSum<K> + Send + Sync + 'static,
    {
        ComplexSlice {
            basis,
            diff: Arc::new(diff),
        }
    }

    pub fn grades(&self) -> impl Iterator<Item = Grade> + '_ {
        self.basis.keys().copied()
    }

    pub fn basis_at(&self, g: Grade) -> Option<&[K]> {
        self.basis.get(&g).map(Vec::as_slice)
    }

    pub fn differential(&self, key: &K) -> FormalSum<K> {
        (self.diff)(key)
    }

    /// Declared basis size per grade.
    pub fn dims(&self) -> BTreeMap<Grade, usize> {
        self.basis.iter().map(|(g, b)| (*g, b.len())).collect()
    }

    fn is_empty(&self) -> bool {
        self.basis.values().all(Vec::is_empty)
    }

    /// True iff the differential squares to zero on every basis key in the
    /// range. Also verifies that the differential lands in the declared basis
    /// one grade below whenever that grade is declared.
    pub fn square_zero_check(&self, grades: RangeInclusive<Grade>) -> Result<bool, ChainError> {
        if self.is_empty() {
            return Ok(true);
        }
        for g in grades_of(&grades) {
            let keys = self.basis.get(&g).ok_or(ChainError::IncompleteSlice(g))?;
            let below: Option<BTreeSet<&K>> =
                self.basis.get(&Grade(g.0 - 1)).map(|b| b.iter().collect());
            for k in keys {
                let dk = self.differential(k);
                if let Some(below) = &below {
                    if dk.iter().any(|t| !below.contains(t)) {
                        return Err(ChainError::NotHomogeneous { grade: g });
                    }
                }
                if !dk.map_linear(|t| self.differential(t)).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Matrix of the differential out of grade `g`: one row per basis key,
    /// columns indexed by the keys appearing in the image.
    fn boundary_rows(&self, g: Grade) -> Option<BitMatrix> {
        let keys = self.basis.get(&g)?;
        let images: Vec<FormalSum<K>> = keys.iter().map(|k| self.differential(k)).collect();
        let mut index: HashMap<&K, usize> = HashMap::new();
        for img in &images {
            for t in img.iter() {
                let n = index.len();
                index.entry(t).or_insert(n);
            }
        }
        let mut m = BitMatrix::new(index.len());
        for img in &images {
            m.push_row(img.iter().map(|t| index[t]));
        }
        Some(m)
    }

    /// `dim ker - dim im` at every grade of the range. The top grade of the
    /// range ignores incoming boundaries from outside the range and is flagged
    /// unreliable; so is any grade whose grade above is not declared.
    pub fn homology_dims(&self, grades: RangeInclusive<Grade>) -> Result<Homology, ChainError> {
        let mut dims = BTreeMap::new();
        let mut unreliable = BTreeSet::new();
        let top = *grades.end();
        for g in grades_of(&grades) {
            let keys = self.basis.get(&g).ok_or(ChainError::IncompleteSlice(g))?;
            let out_rank = self.boundary_rows(g).map_or(0, |m| m.rank());
            let kernel = keys.len() - out_rank;
            let above = Grade(g.0 + 1);
            let in_rank = if g == top || !self.basis.contains_key(&above) {
                unreliable.insert(g);
                0
            } else {
                self.boundary_rows(above).map_or(0, |m| m.rank())
            };
            dims.insert(g, kernel - in_rank);
        }
        Ok(Homology { dims, unreliable })
    }

    pub fn is_cycle(&self, chain: &FormalSum<K>) -> bool {
        chain.map_linear(|k| self.differential(k)).is_zero()
    }

    /// Whether `chain`, assumed homogeneous of grade `g`, is a boundary of
    /// something in grade `g + 1`.
    pub fn is_boundary(&self, g: Grade, chain: &FormalSum<K>) -> Result<bool, ChainError> {
        let above = Grade(g.0 + 1);
        let sources = self
            .basis
            .get(&above)
            .ok_or(ChainError::IncompleteSlice(above))?;
        let images: Vec<FormalSum<K>> = sources.iter().map(|k| self.differential(k)).collect();
        let mut index: HashMap<&K, usize> = HashMap::new();
        for t in images.iter().flat_map(|i| i.iter()).chain(chain.iter()) {
            let n = index.len();
            index.entry(t).or_insert(n);
        }
        let mut m = BitMatrix::new(index.len());
        for img in &images {
            m.push_row(img.iter().map(|t| index[t]));
        }
        let support: Vec<usize> = chain.iter().map(|t| index[t]).collect();
        Ok(m.row_span_contains(&support))
    }

    /// Basis of the cycles in grade `g`.
    pub fn cycles(&self, g: Grade) -> Result<Vec<FormalSum<K>>, ChainError> {
        let keys = self.basis.get(&g).ok_or(ChainError::IncompleteSlice(g))?;
        let images: Vec<FormalSum<K>> = keys.iter().map(|k| self.differential(k)).collect();
        let mut index: HashMap<&K, usize> = HashMap::new();
        for t in images.iter().flat_map(|i| i.iter()) {
            let n = index.len();
            index.entry(t).or_insert(n);
        }
        // Transpose: rows are image coordinates, columns are source keys.
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); index.len()];
        for (j, img) in images.iter().enumerate() {
            for t in img.iter() {
                rows[index[t]].push(j);
            }
        }
        let mut m = BitMatrix::new(keys.len());
        for r in rows {
            m.push_row(r);
        }
        Ok(m.kernel_basis()
            .into_iter()
            .map(|v| v.into_iter().map(|j| keys[j].clone()).collect())
            .collect())
    }
}
