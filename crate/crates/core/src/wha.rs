//! Weak Hopf algebras as structure constants.
//!
//! Elements of H are coefficient vectors in the fixed basis `e_0..e_{n-1}`;
//! functionals are coefficient covectors in the dual basis. Tensors in H⊗H
//! use the index `i*n + j` for `e_i⊗e_j`, and H⊗H⊗H uses `(i*n + j)*n + k`.

use std::collections::BTreeMap;
use std::fmt;

use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::linalg::{
    dot, unit_vector, zero_vector, LinearSystem, Matrix,
    Subspace, Vector,
};
use crate::scalar::{FieldSpec, Scalar};

/// Sparse vector: sorted, duplicate-free, nonzero (index, coefficient) pairs.
pub type Sparse = Vec<(usize, Scalar)>;

/// Elements of H and of H⊗H are plain coefficient vectors.
pub type Element = Vector;
/// Functionals are coefficient covectors in the dual basis.
pub type Functional = Vector;

/// Accumulator for sparse sums.
#[derive(Clone, Debug, Default)]
pub(crate) struct Acc(BTreeMap<usize, Scalar>);

impl Acc {
    pub(crate) fn new() -> Self {
        Acc(BTreeMap::new())
    }

    pub(crate) fn add(&mut self, idx: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&idx) {
            Some(v) => *v += &c,
            None => {
                self.0.insert(idx, c);
            }
        }
    }

    pub(crate) fn into_sparse(self) -> Sparse {
        self.0.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }
}

pub(crate) fn canonical_sparse(entries: Vec<(usize, Scalar)>) -> Sparse {
    let mut acc = Acc::new();
    for (i, c) in entries {
        acc.add(i, c);
    }
    acc.into_sparse()
}

pub(crate) fn sparse_from_dense(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub(crate) fn dense_from_sparse(n: usize, s: &[(usize, Scalar)]) -> Vector {
    let mut v = zero_vector(n);
    for (i, c) in s {
        v[*i] = c.clone();
    }
    v
}

fn add_scaled_sparse(acc: &mut [Scalar], c: &Scalar, s: &[(usize, Scalar)]) {
    if c.is_zero() {
        return;
    }
    for (i, v) in s {
        acc[*i] += &(c * v);
    }
}

#[derive(Clone, Default)]
struct Cache {
    counit_products: OnceCell<Matrix>,
    eps_t: OnceCell<Matrix>,
    eps_s: OnceCell<Matrix>,
    antipode_inverse: OnceCell<std::result::Result<Matrix, Error>>,
}

/// A finite-dimensional weak Hopf algebra (or weak bialgebra, while the
/// antipode is absent) given by structure constants.
#[derive(Clone)]
pub struct WeakHopfAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    mult: Vec<Sparse>,
    unit: Vector,
    comult: Vec<Sparse>,
    counit: Vector,
    antipode: Option<Matrix>,
    cache: Cache,
}

impl PartialEq for WeakHopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.labels == other.labels
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl fmt::Debug for WeakHopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeakHopfAlgebra")
            .field("field", &self.field)
            .field("dim", &self.dim())
            .field("labels", &self.labels)
            .field("has_antipode", &self.antipode.is_some())
            .finish()
    }
}

/// The counital subalgebras of H.
#[derive(Clone, Debug, PartialEq)]
pub struct CounitalSubalgebras {
    pub ht: Subspace,
    pub hs: Subspace,
    pub ht_cap_hs: Subspace,
    pub hmin: Subspace,
    pub z_cap_hs: Subspace,
    pub z_cap_ht: Subspace,
}

/// Data recovered from the restriction of ε to the target base.
#[derive(Clone, Debug, PartialEq)]
pub struct MinimalData {
    /// H_t, playing the role of B.
    pub b: Subspace,
    /// H_t ∩ H_s, playing the role of A.
    pub a: Subspace,
    /// g ∈ H_t with ε(b) = Tr_reg(g⁻¹b) on H_t.
    pub g: Element,
    pub g_inv: Element,
}

impl WeakHopfAlgebra {
    /// Assembles an algebra from raw structure constants.
    ///
    /// `mult[i*n + j]` is `e_i e_j`; `comult[i]` is `Δ(e_i)` indexed by `j*n + k`.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        mult: Vec<Vec<(usize, Scalar)>>,
        unit: Vector,
        comult: Vec<Vec<(usize, Scalar)>>,
        counit: Vector,
        antipode: Option<Matrix>,
    ) -> Result<Self> {
        let n = labels.len();
        let bad = |what: &str| Err(Error::DimensionMismatch(what.to_string()));
        if mult.len() != n * n {
            return bad("multiplication table must have dim² entries");
        }
        if comult.len() != n {
            return bad("comultiplication table must have dim entries");
        }
        if unit.len() != n || counit.len() != n {
            return bad("unit and counit must have length dim");
        }
        if let Some(s) = &antipode {
            if s.rows() != n || s.cols() != n {
                return bad("antipode must be dim × dim");
            }
        }
        if mult.iter().flatten().any(|(k, _)| *k >= n) {
            return bad("multiplication index out of range");
        }
        if comult.iter().flatten().any(|(k, _)| *k >= n * n) {
            return bad("comultiplication index out of range");
        }
        let field = field.canonical();
        let scalars_ok = mult
            .iter()
            .chain(comult.iter())
            .flatten()
            .map(|(_, c)| c)
            .chain(unit.iter())
            .chain(counit.iter())
            .all(|c| field.contains(c));
        if !scalars_ok {
            return Err(Error::FieldMismatch(format!(
                "structure constants do not lie in {}",
                field
            )));
        }
        Ok(WeakHopfAlgebra {
            field,
            labels,
            mult: mult.into_iter().map(canonical_sparse).collect(),
            unit,
            comult: comult.into_iter().map(canonical_sparse).collect(),
            counit,
            antipode,
            cache: Cache::default(),
        })
    }

    /// Builds the tables from closures on basis indices.
    pub fn from_fns(
        field: FieldSpec,
        labels: Vec<String>,
        mul: impl Fn(usize, usize) -> Vec<(usize, Scalar)>,
        unit: Vector,
        comul: impl Fn(usize) -> Vec<(usize, Scalar)>,
        counit: Vector,
        antipode: Option<Matrix>,
    ) -> Result<Self> {
        let n = labels.len();
        let mult = (0..n * n).map(|ij| mul(ij / n, ij % n)).collect();
        let comult = (0..n).map(comul).collect();
        WeakHopfAlgebra::new(field, labels, mult, unit, comult, counit, antipode)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult_table(&self) -> &[Sparse] {
        &self.mult
    }

    pub fn comult_table(&self) -> &[Sparse] {
        &self.comult
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i * self.dim() + j]
    }

    /// `Δ(e_i)` as (j*n + k, coefficient) pairs.
    pub fn comul_basis(&self, i: usize) -> &Sparse {
        &self.comult[i]
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn antipode(&self) -> Result<&Matrix> {
        self.antipode.as_ref().ok_or(Error::MissingAntipode)
    }

    pub fn with_antipode(&self, s: Matrix) -> Result<Self> {
        let n = self.dim();
        if s.rows() != n || s.cols() != n {
            return Err(Error::DimensionMismatch("antipode must be dim × dim".into()));
        }
        let mut out = self.clone();
        out.antipode = Some(s);
        out.cache.antipode_inverse = OnceCell::new();
        Ok(out)
    }

    pub fn without_antipode(&self) -> Self {
        let mut out = self.clone();
        out.antipode = None;
        out.cache.antipode_inverse = OnceCell::new();
        out
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch("label count".into()));
        }
        let mut out = self.clone();
        out.labels = labels;
        Ok(out)
    }

    /// Replaces the counit (used to build corrupted inputs in tests and demos).
    pub fn with_counit(&self, counit: Vector) -> Result<Self> {
        if counit.len() != self.dim() {
            return Err(Error::DimensionMismatch("counit length".into()));
        }
        let mut out = self.clone();
        out.counit = counit;
        out.cache = Cache::default();
        Ok(out)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        unit_vector(self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        zero_vector(self.dim())
    }

    /// Parses a label into a basis index.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    // ---- algebra ----------------------------------------------------------

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                add_scaled_sparse(&mut out, &(x * y), &self.mult[i * n + j]);
            }
        }
        out
    }

    pub fn mul3(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Element {
        self.mul(&self.mul(a, b), c)
    }

    /// Matrix of h ↦ a·h.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(a, &unit_vector(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Matrix of h ↦ h·a.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&unit_vector(n, j), a)).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn invert_element(&self, a: &[Scalar]) -> Result<Element> {
        match self.left_mult_matrix(a).solve(&self.unit) {
            Ok(sol) if sol.kernel.dim() == 0 => Ok(sol.particular),
            _ => Err(Error::NotInvertible),
        }
    }

    pub fn is_invertible(&self, a: &[Scalar]) -> bool {
        self.invert_element(a).is_ok()
    }

    /// ab − ba.
    pub fn commutator(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        crate::linalg::sub_vectors(&self.mul(a, b), &self.mul(b, a))
    }

    /// Z(H).
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut sys = LinearSystem::new(n);
        for i in 0..n {
            // Σ_m z_m (e_m e_i − e_i e_m) = 0, componentwise
            let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
            for m in 0..n {
                for (r, c) in &self.mult[m * n + i] {
                    rows[*r].push((m, c.clone()));
                }
                for (r, c) in &self.mult[i * n + m] {
                    rows[*r].push((m, -c));
                }
            }
            for row in rows {
                if !row.is_empty() {
                    sys.add_sparse_equation(row, Scalar::zero());
                }
            }
        }
        sys.kernel()
    }

    /// Whether a subspace is closed under multiplication.
    pub fn is_closed_under_mult(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|a| s.basis().iter().all(|b| s.contains(&self.mul(a, b))))
    }

    /// The span of all products x·y with x ∈ `left`, y ∈ `right`.
    pub fn product_span(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut products = Vec::new();
        for a in left.basis() {
            for b in right.basis() {
                products.push(self.mul(a, b));
            }
        }
        Subspace::from_vectors(self.dim(), products)
    }

    // ---- coalgebra --------------------------------------------------------

    pub fn comul(&self, a: &[Scalar]) -> Element {
        let n = self.dim();
        let mut out = zero_vector(n * n);
        for (i, x) in a.iter().enumerate() {
            add_scaled_sparse(&mut out, x, &self.comult[i]);
        }
        out
    }

    pub fn eps(&self, a: &[Scalar]) -> Scalar {
        dot(&self.counit, a)
    }

    /// Δ(1).
    pub fn delta_one(&self) -> Element {
        self.comul(&self.unit)
    }

    /// (Δ⊗id)Δ(h) as a sparse tensor in H⊗H⊗H.
    pub fn comul2(&self, a: &[Scalar]) -> Sparse {
        let n = self.dim();
        let mut acc = Acc::new();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (jk, c) in &self.comult[i] {
                let (j, k) = (jk / n, jk % n);
                let xc = x * c;
                for (ab, d) in &self.comult[j] {
                    acc.add(ab * n + k, &xc * d);
                }
            }
        }
        acc.into_sparse()
    }

    /// (id⊗Δ)Δ(h) as a sparse tensor in H⊗H⊗H.
    pub fn comul2_right(&self, a: &[Scalar]) -> Sparse {
        let n = self.dim();
        let mut acc = Acc::new();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (jk, c) in &self.comult[i] {
                let (j, k) = (jk / n, jk % n);
                let xc = x * c;
                for (ab, d) in &self.comult[k] {
                    acc.add(j * n * n + ab, &xc * d);
                }
            }
        }
        acc.into_sparse()
    }

    /// Product in H^{⊗k} of two sparse tensors.
    pub fn tensor_mul_sparse(&self, k: usize, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Sparse {
        let n = self.dim();
        let digits = |mut idx: usize| {
            let mut d = vec![0; k];
            for slot in (0..k).rev() {
                d[slot] = idx % n;
                idx /= n;
            }
            d
        };
        let mut acc = Acc::new();
        for (ix, cx) in x {
            let dx = digits(*ix);
            for (iy, cy) in y {
                let dy = digits(*iy);
                // expand the product of the k factor products
                let mut partial: Vec<(usize, Scalar)> = vec![(0, cx * cy)];
                for slot in 0..k {
                    let prod = &self.mult[dx[slot] * n + dy[slot]];
                    if prod.is_empty() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (idx, c) in &partial {
                        for (m, v) in prod {
                            next.push((idx * n + m, c * v));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    acc.add(idx, c);
                }
            }
        }
        acc.into_sparse()
    }

    /// Product in H⊗H of dense tensors.
    pub fn tensor_mul(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        let n = self.dim();
        let s = self.tensor_mul_sparse(2, &sparse_from_dense(x), &sparse_from_dense(y));
        dense_from_sparse(n * n, &s)
    }

    /// a⊗b as a dense tensor.
    pub fn tensor(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        let n = self.dim();
        let mut out = zero_vector(n * n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i * n + j] = x * y;
                }
            }
        }
        out
    }

    /// Applies linear maps legwise: (A⊗B)t.
    pub fn tensor_map(&self, a: &Matrix, b: &Matrix, t: &[Scalar]) -> Element {
        let n = self.dim();
        let mut out = zero_vector(n * n);
        for (idx, c) in t.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (idx / n, idx % n);
            for r in 0..n {
                let x = a.get(r, i);
                if x.is_zero() {
                    continue;
                }
                let cx = c * x;
                for s in 0..n {
                    let y = b.get(s, j);
                    if !y.is_zero() {
                        out[r * n + s] += &(&cx * y);
                    }
                }
            }
        }
        out
    }

    /// m(t) for a tensor t ∈ H⊗H.
    pub fn multiply_legs(&self, t: &[Scalar]) -> Element {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (idx, c) in t.iter().enumerate() {
            add_scaled_sparse(&mut out, c, &self.mult[idx]);
        }
        out
    }

    /// Flips the legs of a tensor in H⊗H.
    pub fn flip(&self, t: &[Scalar]) -> Element {
        let n = self.dim();
        let mut out = zero_vector(n * n);
        for (idx, c) in t.iter().enumerate() {
            out[(idx % n) * n + idx / n] = c.clone();
        }
        out
    }

    // ---- counital maps ----------------------------------------------------

    /// E[a][b] = ε(e_a e_b).
    pub fn counit_products(&self) -> &Matrix {
        self.cache.counit_products.get_or_init(|| {
            let n = self.dim();
            Matrix::from_fn(n, n, |a, b| {
                let mut acc = Scalar::zero();
                for (k, c) in &self.mult[a * n + b] {
                    acc += &(c * &self.counit[*k]);
                }
                acc
            })
        })
    }

    /// ε_t(h) = ε(1₍₁₎h)1₍₂₎.
    pub fn eps_t_matrix(&self) -> &Matrix {
        self.cache.eps_t.get_or_init(|| {
            let n = self.dim();
            let e = self.counit_products();
            let d = self.delta_one();
            let mut m = Matrix::zeros(n, n);
            for (ab, c) in d.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, b) = (ab / n, ab % n);
                for i in 0..n {
                    let w = e.get(a, i);
                    if !w.is_zero() {
                        let v = m.get(b, i) + &(c * w);
                        m.set(b, i, v);
                    }
                }
            }
            m
        })
    }

    /// ε_s(h) = 1₍₁₎ε(h1₍₂₎).
    pub fn eps_s_matrix(&self) -> &Matrix {
        self.cache.eps_s.get_or_init(|| {
            let n = self.dim();
            let e = self.counit_products();
            let d = self.delta_one();
            let mut m = Matrix::zeros(n, n);
            for (ab, c) in d.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, b) = (ab / n, ab % n);
                for i in 0..n {
                    let w = e.get(i, b);
                    if !w.is_zero() {
                        let v = m.get(a, i) + &(c * w);
                        m.set(a, i, v);
                    }
                }
            }
            m
        })
    }

    pub fn eps_t(&self, h: &[Scalar]) -> Element {
        self.eps_t_matrix().apply(h)
    }

    pub fn eps_s(&self, h: &[Scalar]) -> Element {
        self.eps_s_matrix().apply(h)
    }

    pub fn target_base(&self) -> Subspace {
        self.eps_t_matrix().column_space()
    }

    pub fn source_base(&self) -> Subspace {
        self.eps_s_matrix().column_space()
    }

    pub fn counital_subalgebras(&self) -> CounitalSubalgebras {
        let ht = self.target_base();
        let hs = self.source_base();
        let z = self.center();
        CounitalSubalgebras {
            ht_cap_hs: ht.intersect(&hs),
            hmin: self.product_span(&ht, &hs),
            z_cap_hs: z.intersect(&hs),
            z_cap_ht: z.intersect(&ht),
            ht,
            hs,
        }
    }

    /// Whether Δ(1) = 1⊗1, i.e. H is an honest bialgebra.
    pub fn is_hopf(&self) -> bool {
        self.delta_one() == self.tensor(&self.unit, &self.unit)
    }

    // ---- antipode ---------------------------------------------------------

    pub fn apply_s(&self, a: &[Scalar]) -> Result<Element> {
        Ok(self.antipode()?.apply(a))
    }

    pub fn antipode_inverse(&self) -> Result<&Matrix> {
        let s = self.antipode()?;
        self.cache
            .antipode_inverse
            .get_or_init(|| s.invert().map_err(|_| Error::NoAntipodeInverse))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn apply_s_inverse(&self, a: &[Scalar]) -> Result<Element> {
        Ok(self.antipode_inverse()?.apply(a))
    }

    /// Whether S² restricts to the identity on H_min.
    pub fn is_regular(&self) -> Result<bool> {
        let s = self.antipode()?;
        let s2 = s.mul(s);
        let hmin = self.product_span(&self.target_base(), &self.source_base());
        Ok(hmin.basis().iter().all(|b| s2.apply(b) == *b))
    }

    // ---- duality ----------------------------------------------------------

    /// ⟨φ, h⟩.
    pub fn pair(&self, phi: &[Scalar], h: &[Scalar]) -> Scalar {
        dot(phi, h)
    }

    /// The product of H*: ⟨φψ, h⟩ = ⟨φ, h₍₁₎⟩⟨ψ, h₍₂₎⟩.
    pub fn convolve(&self, phi: &[Scalar], psi: &[Scalar]) -> Functional {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (jk, c) in &self.comult[i] {
                    let (j, k) = (jk / n, jk % n);
                    if !phi[j].is_zero() && !psi[k].is_zero() {
                        acc += &(c * &(&phi[j] * &psi[k]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Matrix of ψ ↦ γψ in H*.
    pub fn convolution_matrix(&self, gamma: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.convolve(gamma, &unit_vector(n, j)))
            .collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn dual_inverse(&self, gamma: &[Scalar]) -> Result<Functional> {
        match self.convolution_matrix(gamma).solve(&self.counit) {
            Ok(sol) if sol.kernel.dim() == 0 => Ok(sol.particular),
            _ => Err(Error::NotInvertible),
        }
    }

    /// φ ⇀ h = h₍₁₎⟨φ, h₍₂₎⟩.
    pub fn lact(&self, phi: &[Scalar], h: &[Scalar]) -> Element {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (jk, c) in self.comul(h).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = &phi[jk % n];
            if !w.is_zero() {
                out[jk / n] += &(c * w);
            }
        }
        out
    }

    /// h ↼ φ = ⟨φ, h₍₁₎⟩h₍₂₎.
    pub fn ract(&self, h: &[Scalar], phi: &[Scalar]) -> Element {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (jk, c) in self.comul(h).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = &phi[jk / n];
            if !w.is_zero() {
                out[jk % n] += &(c * w);
            }
        }
        out
    }

    /// h ⇀ φ, with ⟨h ⇀ φ, g⟩ = ⟨φ, gh⟩.
    pub fn lact_dual(&self, h: &[Scalar], phi: &[Scalar]) -> Functional {
        let n = self.dim();
        (0..n)
            .map(|g| dot(phi, &self.mul(&unit_vector(n, g), h)))
            .collect()
    }

    /// φ ↼ h, with ⟨φ ↼ h, g⟩ = ⟨φ, hg⟩.
    pub fn ract_dual(&self, phi: &[Scalar], h: &[Scalar]) -> Functional {
        let n = self.dim();
        (0..n)
            .map(|g| dot(phi, &self.mul(h, &unit_vector(n, g))))
            .collect()
    }

    /// The dual weak Hopf algebra H* in the dual basis.
    ///
    /// Labels gain a trailing `*`; a label already ending in `*` loses it, so
    /// dualizing twice returns the original structure exactly.
    pub fn dualize(&self) -> WeakHopfAlgebra {
        let n = self.dim();
        let mut mult: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
        for (k, entries) in self.comult.iter().enumerate() {
            for (ij, c) in entries {
                mult[*ij].push((k, c.clone()));
            }
        }
        let mut comult: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        for (ij, entries) in self.mult.iter().enumerate() {
            for (k, c) in entries {
                comult[*k].push((ij, c.clone()));
            }
        }
        let labels = self
            .labels
            .iter()
            .map(|l| match l.strip_suffix('*') {
                Some(base) => base.to_string(),
                None => format!("{}*", l),
            })
            .collect();
        WeakHopfAlgebra::new(
            self.field,
            labels,
            mult,
            self.counit.clone(),
            comult,
            self.unit.clone(),
            self.antipode.as_ref().map(Matrix::transpose),
        )
        .expect("dual of a well-formed algebra is well-formed")
    }

    /// Tensor product H⊗K with basis e_i⊗f_j at index i·dim K + j.
    pub fn tensor_product(&self, other: &WeakHopfAlgebra) -> Result<WeakHopfAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        let (n, m) = (self.dim(), other.dim());
        let dim = n * m;
        let labels: Vec<String> = (0..dim)
            .map(|x| {
                let (a, b) = (&self.labels[x / m], &other.labels[x % m]);
                if a == "1" {
                    b.clone()
                } else if b == "1" {
                    a.clone()
                } else {
                    format!("{}⊗{}", a, b)
                }
            })
            .collect();
        let labels = dedupe_labels(labels, &self.labels, &other.labels, m);
        let mul = |x: usize, y: usize| {
            let mut out = Vec::new();
            for (p, c) in self.mul_basis(x / m, y / m) {
                for (q, d) in other.mul_basis(x % m, y % m) {
                    out.push((p * m + q, c * d));
                }
            }
            out
        };
        let comul = |x: usize| {
            let mut out = Vec::new();
            for (ab, c) in self.comul_basis(x / m) {
                let (a, b) = (ab / n, ab % n);
                for (pq, d) in other.comul_basis(x % m) {
                    let (p, q) = (pq / m, pq % m);
                    out.push(((a * m + p) * dim + b * m + q, c * d));
                }
            }
            out
        };
        let kron = |u: &[Scalar], v: &[Scalar]| -> Vector {
            (0..dim).map(|x| &u[x / m] * &v[x % m]).collect()
        };
        let antipode = match (&self.antipode, &other.antipode) {
            (Some(s), Some(t)) => Some(s.kronecker(t)),
            _ => None,
        };
        WeakHopfAlgebra::from_fns(
            self.field,
            labels,
            mul,
            kron(&self.unit, &other.unit),
            comul,
            kron(&self.counit, &other.counit),
            antipode,
        )
    }

    // ---- minimal data -----------------------------------------------------

    /// Regular trace of left multiplication by `b` on a subalgebra.
    pub fn regular_trace_on(&self, sub: &Subspace, b: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, t) in sub.basis().iter().enumerate() {
            let coords = sub
                .coordinates(&self.mul(b, t))
                .expect("subalgebra closed under multiplication");
            acc += &coords[i];
        }
        acc
    }

    /// Recovers g ∈ H_t with ε(b) = Tr_reg(g⁻¹b) for all b ∈ H_t.
    pub fn minimal_data(&self) -> Result<MinimalData> {
        let ht = self.target_base();
        let hs = self.source_base();
        let basis = ht.basis();
        let d = basis.len();
        // x = Σ c_i t_i with Tr_reg(x t_j) = ε(t_j)
        let mut sys = LinearSystem::new(d);
        for tj in basis {
            let coeffs: Vec<Scalar> = basis
                .iter()
                .map(|ti| self.regular_trace_on(&ht, &self.mul(ti, tj)))
                .collect();
            sys.add_equation(&coeffs, self.eps(tj));
        }
        let sol = sys
            .solve()
            .map_err(|_| Error::Degenerate("no solution for g⁻¹".into()))?;
        if sol.kernel.dim() > 0 {
            return Err(Error::Degenerate(
                "regular trace form on H_t is degenerate".into(),
            ));
        }
        let g_inv = ht.combination(&sol.particular);
        let g = self
            .invert_element(&g_inv)
            .map_err(|_| Error::Degenerate("g⁻¹ is not invertible".into()))?;
        Ok(MinimalData {
            a: ht.intersect(&hs),
            b: ht,
            g,
            g_inv,
        })
    }
}

fn dedupe_labels(labels: Vec<String>, left: &[String], right: &[String], m: usize) -> Vec<String> {
    let mut seen = std::collections::HashSet::new();
    if labels.iter().all(|l| seen.insert(l.clone())) {
        return labels;
    }
    (0..labels.len())
        .map(|x| format!("{}⊗{}", left[x / m], right[x % m]))
        .collect()
}

impl WeakHopfAlgebra {
    /// The same structure constants viewed over a larger cyclotomic field.
    pub fn over(&self, field: FieldSpec) -> Result<WeakHopfAlgebra> {
        let field = field.canonical();
        let ok = match (self.field, field) {
            (FieldSpec::Rational, _) => true,
            (a, b) => a == b,
        };
        if !ok {
            return Err(Error::FieldMismatch(format!("{} into {}", self.field, field)));
        }
        let mut out = self.clone();
        out.field = field;
        Ok(out)
    }
}
