//! Dense exact linear algebra over ℚ / ℚ(ζₙ).
//!
//! Elimination runs on sparse rows kept in reduced row echelon form, which is
//! cheap for the structure-constant systems this crate builds (mostly zeros)
//! and still fine for small dense matrices. Determinants of rational matrices
//! use fraction-free Bareiss elimination on an integer rescaling.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

type SparseRow = Vec<(usize, Scalar)>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// First index where two vectors differ, with the difference.
pub fn first_difference(a: &[Scalar], b: &[Scalar]) -> Option<(usize, Scalar)> {
    a.iter()
        .zip(b)
        .enumerate()
        .find(|(_, (x, y))| x != y)
        .map(|(i, (x, y))| (i, x - y))
}

fn to_sparse(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

fn sparse_get(row: &SparseRow, col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|i| &row[i].1)
}

/// row - c * other, both sorted by column.
fn sparse_axpy(row: &SparseRow, c: &Scalar, other: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_left = j >= other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_right = i >= row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_left {
            out.push(row[i].clone());
            i += 1;
        } else if take_right {
            out.push((other[j].0, -(c * &other[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(c * &other[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub(crate) fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .filter_map(|(c, v)| self.pivot_row[*c].map(|r| (r, v.clone())))
            .collect();
        for (r, v) in hits {
            row = sparse_axpy(&row, &v, &self.rows[r]);
        }
        row
    }

    /// Adds a row; returns its pivot column when it was independent.
    fn insert(&mut self, row: SparseRow) -> Option<usize> {
        let mut r = self.reduce(row);
        let (pivot, lead) = r.first().cloned()?;
        if !lead.is_one() {
            let inv = lead.inv().expect("nonzero pivot");
            for (_, v) in r.iter_mut() {
                *v = &*v * &inv;
            }
        }
        for existing in self.rows.iter_mut() {
            if let Some(c) = sparse_get(existing, pivot).cloned() {
                *existing = sparse_axpy(existing, &c, &r);
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(r);
        Some(pivot)
    }

    pub(crate) fn insert_dense(&mut self, v: &[Scalar]) -> Option<usize> {
        self.insert(to_sparse(v))
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows sorted by pivot column, as (pivot, dense row).
    fn sorted(&self) -> Vec<(usize, Vector)> {
        let mut out: Vec<(usize, Vector)> = self
            .rows
            .iter()
            .map(|r| {
                let mut d = zero_vector(self.ncols);
                for (c, v) in r {
                    d[*c] = v.clone();
                }
                (r[0].0, d)
            })
            .collect();
        out.sort_by_key(|(p, _)| *p);
        out
    }

    fn kernel_over(&self, nvars: usize) -> Subspace {
        let mut basis = Vec::new();
        for f in 0..nvars {
            if self.pivot_row[f].is_some() {
                continue;
            }
            let mut v = zero_vector(nvars);
            v[f] = Scalar::one();
            for r in &self.rows {
                let p = r[0].0;
                if p < nvars {
                    if let Some(c) = sparse_get(r, f) {
                        v[p] = -c;
                    }
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(nvars, basis)
    }
}

/// A linear system A·x = b assembled equation by equation.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    unknowns: usize,
    echelon: Echelon,
}

/// Solution set of a consistent linear system.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub particular: Vector,
    pub kernel: Subspace,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem {
            unknowns,
            echelon: Echelon::new(unknowns + 1),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn add_equation(&mut self, coeffs: &[Scalar], rhs: Scalar) {
        debug_assert_eq!(coeffs.len(), self.unknowns);
        let mut row = to_sparse(coeffs);
        if !rhs.is_zero() {
            row.push((self.unknowns, rhs));
        }
        self.echelon.insert(row);
    }

    /// Adds an equation given as (unknown index, coefficient) pairs; repeated
    /// indices are summed.
    pub fn add_sparse_equation(&mut self, coeffs: Vec<(usize, Scalar)>, rhs: Scalar) {
        let mut row = coeffs;
        row.sort_by_key(|(c, _)| *c);
        let mut merged: SparseRow = Vec::with_capacity(row.len() + 1);
        for (c, v) in row {
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += &v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        if !rhs.is_zero() {
            merged.push((self.unknowns, rhs));
        }
        self.echelon.insert(merged);
    }

    pub fn is_consistent(&self) -> bool {
        self.echelon.pivot_row[self.unknowns].is_none()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Solution space of the homogeneous system, ignoring right-hand sides.
    pub fn kernel(&self) -> Subspace {
        self.echelon.kernel_over(self.unknowns)
    }

    pub fn solve(&self) -> Result<Solution> {
        if !self.is_consistent() {
            return Err(Error::NoSolution);
        }
        let mut particular = zero_vector(self.unknowns);
        for r in &self.echelon.rows {
            if let Some(b) = sparse_get(r, self.unknowns) {
                particular[r[0].0] = b.clone();
            }
        }
        Ok(Solution {
            particular,
            kernel: self.kernel(),
        })
    }
}

/// A linear subspace of kⁿ, stored as its unique reduced echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient", &self.ambient)
            .field("basis", &self.basis)
            .finish()
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: vec![],
            pivots: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_vectors(ambient, (0..ambient).map(|i| unit_vector(ambient, i)))
    }

    pub fn from_vectors<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            debug_assert_eq!(v.len(), ambient);
            e.insert_dense(&v);
        }
        let (pivots, basis) = e.sorted().into_iter().unzip();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Σ coeffs[i]·basis[i].
    pub fn combination(&self, coeffs: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.ambient);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            axpy(&mut out, c, b);
        }
        out
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.combination(&coords) == v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_vectors(
            self.ambient,
            self.basis.iter().chain(other.basis.iter()).cloned(),
        )
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // Σ a_i u_i - Σ b_j w_j = 0
        let (p, q) = (self.dim(), other.dim());
        let mut sys = LinearSystem::new(p + q);
        for row in 0..self.ambient {
            let mut coeffs = Vec::new();
            for (i, u) in self.basis.iter().enumerate() {
                if !u[row].is_zero() {
                    coeffs.push((i, u[row].clone()));
                }
            }
            for (j, w) in other.basis.iter().enumerate() {
                if !w[row].is_zero() {
                    coeffs.push((p + j, -&w[row]));
                }
            }
            sys.add_sparse_equation(coeffs, Scalar::zero());
        }
        let k = sys.kernel();
        Subspace::from_vectors(
            self.ambient,
            k.basis().iter().map(|v| self.combination(&v[..p])),
        )
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::from_vectors(m.rows(), self.basis.iter().map(|b| m.apply(b)))
    }
}

/// Dense row-major matrix of scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose j-th column is `columns[j]`.
    pub fn from_columns(nrows: usize, columns: &[Vector]) -> Self {
        Matrix::from_fn(nrows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&x| Scalar::int(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = zero_vector(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).unwrap_or_else(|e| panic!("{}", e))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add_vectors(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub_vectors(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scale_vector(c, &self.data),
        }
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut acc = Scalar::zero();
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        acc
    }

    /// (M⊗N)(eᵢ⊗fⱼ) = Meᵢ⊗Nfⱼ with eᵢ⊗fⱼ at index i·dim(N)+j.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * r2, self.cols * c2, |r, c| {
            let a = self.get(r / r2, c / c2);
            if a.is_zero() {
                return Scalar::zero();
            }
            a * other.get(r % r2, c % c2)
        })
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for r in 0..self.rows {
            e.insert_dense(self.row(r));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn kernel(&self) -> Subspace {
        self.echelon().kernel_over(self.cols)
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::from_vectors(self.rows, self.columns())
    }

    pub fn solve(&self, b: &[Scalar]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let mut sys = LinearSystem::new(self.cols);
        for r in 0..self.rows {
            sys.add_equation(self.row(r), b[r].clone());
        }
        sys.solve()
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut e = Echelon::new(2 * n);
        for r in 0..n {
            let mut row = to_sparse(self.row(r));
            row.push((n + r, Scalar::one()));
            e.insert(row);
        }
        let sorted = e.sorted();
        if sorted.len() < n || sorted.iter().enumerate().any(|(i, (p, _))| *p != i) {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| sorted[r].1[n + c].clone()))
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.data.iter().all(|x| x.as_rational().is_some()) {
            self.bareiss_determinant()
        } else {
            self.elimination_determinant()
        }
    }

    fn bareiss_determinant(&self) -> Scalar {
        let n = self.rows;
        if n == 0 {
            return Scalar::one();
        }
        // scale each row to integers: det(M) = det(D·M) / det(D)
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|r| {
                let row: Vec<&BigRational> = self
                    .row(r)
                    .iter()
                    .map(|x| x.as_rational().expect("rational entry"))
                    .collect();
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scale *= &l;
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Scalar::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = &sign * &a[n - 1][n - 1];
        Scalar::Rational(BigRational::new(det, scale))
    }

    fn elimination_determinant(&self) -> Scalar {
        let n = self.rows;
        let mut a: Vec<Vector> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut det = Scalar::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Scalar::zero();
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det = &det * &a[k][k];
            let inv = a[k][k].inv().expect("nonzero pivot");
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] * &inv;
                for j in k..n {
                    let v = &f * &a[k][j];
                    a[i][j] -= &v;
                }
            }
        }
        det
    }
}


#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, rows * cols)
            .prop_map(move |v| Matrix::from_i64(rows, cols, &v))
    }

    proptest! {
        #[test]
        fn solve_reproduces_rhs(a in matrix(3, 4), x in proptest::collection::vec(-4i64..=4, 4)) {
            let x: Vector = x.into_iter().map(Scalar::int).collect();
            let b = a.apply(&x);
            let sol = a.solve(&b).unwrap();
            prop_assert_eq!(a.apply(&sol.particular), b);
            for k in sol.kernel.basis() {
                prop_assert!(is_zero_vector(&a.apply(k)));
            }
        }

        #[test]
        fn rank_nullity(a in matrix(4, 5)) {
            prop_assert_eq!(a.rank() + a.kernel().dim(), 5);
        }

        #[test]
        fn echelon_idempotent(a in matrix(3, 4)) {
            let s1 = Subspace::from_vectors(4, (0..3).map(|r| a.row(r).to_vec()));
            let s2 = Subspace::from_vectors(4, s1.basis().to_vec());
            prop_assert_eq!(s1, s2);
        }

        #[test]
        fn kronecker_trace(a in matrix(3, 3), b in matrix(3, 3)) {
            prop_assert_eq!(a.kronecker(&b).trace(), a.trace() * b.trace());
        }

        #[test]
        fn inverse_or_singular(a in matrix(3, 3)) {
            match a.invert() {
                Ok(inv) => {
                    prop_assert!(a.mul(&inv).is_identity());
                    prop_assert!(!a.determinant().is_zero());
                }
                Err(_) => prop_assert!(a.determinant().is_zero()),
            }
        }
    }
}
