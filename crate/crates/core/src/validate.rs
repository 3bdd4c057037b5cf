//! Axiom verification and the antipode solver.
//!
//! Every check runs over all basis tuples; a failure records the first
//! offending tuple together with the component and value of the residual.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, LinearSystem, Matrix, Vector};
use crate::scalar::Scalar;
use crate::wha::{dense_from_sparse, Acc, Sparse, WeakHopfAlgebra};

/// First failing tuple of an axiom check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub component: usize,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

pub(crate) fn diff_dense(lhs: &[Scalar], rhs: &[Scalar], indices: &[usize]) -> Option<Witness> {
    lhs.iter()
        .zip(rhs)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(k, (a, b))| Witness {
            indices: indices.to_vec(),
            component: k,
            residual: (a - b).to_string(),
        })
}

fn diff_sparse(lhs: &Sparse, rhs: &Sparse, indices: &[usize]) -> Option<Witness> {
    if lhs == rhs {
        return None;
    }
    let mut acc = Acc::new();
    for (i, c) in lhs {
        acc.add(*i, c.clone());
    }
    for (i, c) in rhs {
        acc.add(*i, -c);
    }
    let (component, r) = acc.into_sparse().into_iter().next()?;
    Some(Witness {
        indices: indices.to_vec(),
        component,
        residual: r.to_string(),
    })
}

pub(crate) struct Checker {
    axiom: &'static str,
    witness: Option<Witness>,
}

impl Checker {
    pub(crate) fn new(axiom: &'static str) -> Self {
        Checker {
            axiom,
            witness: None,
        }
    }

    pub(crate) fn record(&mut self, w: Option<Witness>) {
        if self.witness.is_none() {
            self.witness = w;
        }
    }

    pub(crate) fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub(crate) fn finish(self) -> AxiomCheck {
        AxiomCheck {
            axiom: self.axiom,
            passed: self.witness.is_none(),
            witness: self.witness,
        }
    }
}

fn check_associativity(h: &WeakHopfAlgebra) -> AxiomCheck {
    let n = h.dim();
    let mut c = Checker::new("associativity");
    'outer: for i in 0..n {
        for j in 0..n {
            let ij = dense_from_sparse(n, h.mul_basis(i, j));
            for k in 0..n {
                let lhs = h.mul(&ij, &h.basis_element(k));
                let jk = dense_from_sparse(n, h.mul_basis(j, k));
                let rhs = h.mul(&h.basis_element(i), &jk);
                c.record(diff_dense(&lhs, &rhs, &[i, j, k]));
                if c.failed() {
                    break 'outer;
                }
            }
        }
    }
    c.finish()
}

fn check_unit(h: &WeakHopfAlgebra) -> AxiomCheck {
    let mut c = Checker::new("unit");
    for i in 0..h.dim() {
        let e = h.basis_element(i);
        c.record(diff_dense(&h.mul(h.unit(), &e), &e, &[i]));
        c.record(diff_dense(&h.mul(&e, h.unit()), &e, &[i]));
    }
    c.finish()
}

fn check_coassociativity(h: &WeakHopfAlgebra) -> AxiomCheck {
    let mut c = Checker::new("coassociativity");
    for i in 0..h.dim() {
        let e = h.basis_element(i);
        c.record(diff_sparse(&h.comul2(&e), &h.comul2_right(&e), &[i]));
        if c.failed() {
            break;
        }
    }
    c.finish()
}

fn check_counit(h: &WeakHopfAlgebra) -> AxiomCheck {
    let n = h.dim();
    let mut c = Checker::new("counit");
    for i in 0..n {
        let mut left = zero_vector(n);
        let mut right = zero_vector(n);
        for (jk, v) in h.comul_basis(i) {
            let (j, k) = (jk / n, jk % n);
            left[k] += &(v * &h.counit()[j]);
            right[j] += &(v * &h.counit()[k]);
        }
        let e = h.basis_element(i);
        c.record(diff_dense(&left, &e, &[i]));
        c.record(diff_dense(&right, &e, &[i]));
    }
    c.finish()
}

fn check_multiplicativity(h: &WeakHopfAlgebra) -> AxiomCheck {
    let n = h.dim();
    let mut c = Checker::new("comultiplication_multiplicative");
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = h.comul(&dense_from_sparse(n, h.mul_basis(i, j)));
            let rhs = h.tensor_mul_sparse(2, h.comul_basis(i), h.comul_basis(j));
            c.record(diff_dense(&lhs, &dense_from_sparse(n * n, &rhs), &[i, j]));
            if c.failed() {
                break 'outer;
            }
        }
    }
    c.finish()
}

/// Δ(1)⊗1 and 1⊗Δ(1) as sparse triple tensors.
fn delta_one_legs(h: &WeakHopfAlgebra) -> (Sparse, Sparse) {
    let n = h.dim();
    let d = h.delta_one();
    let mut left = Acc::new();
    let mut right = Acc::new();
    for (ab, c) in d.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (u, v) in h.unit().iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            left.add(ab * n + u, c * v);
            right.add(u * n * n + ab, c * v);
        }
    }
    (left.into_sparse(), right.into_sparse())
}

fn check_weak_unit(h: &WeakHopfAlgebra) -> AxiomCheck {
    let mut c = Checker::new("weak_unit");
    let lhs = h.comul2(h.unit());
    let (d1, d2) = delta_one_legs(h);
    c.record(diff_sparse(&lhs, &h.tensor_mul_sparse(3, &d1, &d2), &[0]));
    c.record(diff_sparse(&lhs, &h.tensor_mul_sparse(3, &d2, &d1), &[1]));
    c.finish()
}

fn check_weak_counit(h: &WeakHopfAlgebra) -> AxiomCheck {
    let n = h.dim();
    let e = h.counit_products();
    let mut c = Checker::new("weak_counit");
    for g in 0..n {
        // L[f][k] = ε(e_f e_g e_k)
        let mut lhs = Matrix::zeros(n, n);
        let mut r1 = Matrix::zeros(n, n);
        let mut r2 = Matrix::zeros(n, n);
        for f in 0..n {
            let fg = dense_from_sparse(n, h.mul_basis(f, g));
            for k in 0..n {
                let mut acc = Scalar::zero();
                for (m, v) in fg.iter().enumerate() {
                    if !v.is_zero() {
                        acc += &(v * e.get(m, k));
                    }
                }
                lhs.set(f, k, acc);
            }
        }
        for (ab, v) in h.comul_basis(g) {
            let (a, b) = (ab / n, ab % n);
            for f in 0..n {
                let x = e.get(f, a);
                let y = e.get(f, b);
                for k in 0..n {
                    if !x.is_zero() {
                        let w = e.get(b, k);
                        if !w.is_zero() {
                            let cur = r1.get(f, k) + &(v * &(x * w));
                            r1.set(f, k, cur);
                        }
                    }
                    if !y.is_zero() {
                        let w = e.get(a, k);
                        if !w.is_zero() {
                            let cur = r2.get(f, k) + &(v * &(y * w));
                            r2.set(f, k, cur);
                        }
                    }
                }
            }
        }
        for (rhs, form) in [(&r1, 0usize), (&r2, 1usize)] {
            for f in 0..n {
                c.record(diff_dense(lhs.row(f), rhs.row(f), &[f, g]).map(|w| Witness {
                    indices: vec![f, g, w.component],
                    component: form,
                    residual: w.residual,
                }));
            }
        }
        if c.failed() {
            break;
        }
    }
    c.finish()
}

/// Checks of the algebra, coalgebra and weak bialgebra axioms.
pub fn validate_weak_bialgebra(h: &WeakHopfAlgebra) -> ValidationReport {
    ValidationReport {
        checks: vec![
            check_associativity(h),
            check_unit(h),
            check_coassociativity(h),
            check_counit(h),
            check_multiplicativity(h),
            check_weak_unit(h),
            check_weak_counit(h),
        ],
    }
}

/// The three antipode axioms for a candidate S.
pub fn check_antipode(h: &WeakHopfAlgebra, s: &Matrix) -> Vec<AxiomCheck> {
    let n = h.dim();
    let et = h.eps_t_matrix();
    let es = h.eps_s_matrix();
    let mut target = Checker::new("antipode_target");
    let mut source = Checker::new("antipode_source");
    let mut sandwich = Checker::new("antipode_sandwich");
    let s_cols: Vec<Vector> = (0..n).map(|k| s.column(k)).collect();
    for i in 0..n {
        let mut lhs_t = zero_vector(n);
        let mut lhs_s = zero_vector(n);
        for (jk, c) in h.comul_basis(i) {
            let (j, k) = (jk / n, jk % n);
            let a = h.mul(&h.basis_element(j), &s_cols[k]);
            let b = h.mul(&s_cols[j], &h.basis_element(k));
            crate::linalg::axpy(&mut lhs_t, c, &a);
            crate::linalg::axpy(&mut lhs_s, c, &b);
        }
        target.record(diff_dense(&lhs_t, &et.column(i), &[i]));
        source.record(diff_dense(&lhs_s, &es.column(i), &[i]));

        let mut lhs = zero_vector(n);
        for (abc, v) in h.comul2(&h.basis_element(i)) {
            let (a, b, c) = (abc / (n * n), (abc / n) % n, abc % n);
            let t = h.mul3(&s_cols[a], &h.basis_element(b), &s_cols[c]);
            crate::linalg::axpy(&mut lhs, &v, &t);
        }
        sandwich.record(diff_dense(&lhs, &s_cols[i], &[i]));
    }
    vec![target.finish(), source.finish(), sandwich.finish()]
}

/// Full validation: weak bialgebra axioms plus the antipode axioms when an
/// antipode is present.
pub fn validate(h: &WeakHopfAlgebra) -> ValidationReport {
    let mut report = validate_weak_bialgebra(h);
    if let Ok(s) = h.antipode() {
        report.checks.extend(check_antipode(h, s));
    }
    report
}

/// Solves for the antipode.
///
/// The two convolution identities m(id⊗S)Δ = ε_t and m(S⊗id)Δ = ε_s are
/// linear in S; together with S(h) = S(h₍₁₎)ε_t(h₍₂₎), which is the sandwich
/// axiom rewritten using the first identity, they cut out exactly the set of
/// antipodes. The sandwich axiom is then re-checked in its cubic form.
pub fn solve_antipode(h: &WeakHopfAlgebra) -> Result<Matrix> {
    let n = h.dim();
    let var = |m: usize, k: usize| m * n + k; // S(e_k) = Σ_m S[m,k] e_m
    let et = h.eps_t_matrix();
    let es = h.eps_s_matrix();
    let mut sys = LinearSystem::new(n * n);
    for i in 0..n {
        let mut rows_t: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        let mut rows_s: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        let mut rows_u: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        for m in 0..n {
            rows_u[m].push((var(m, i), Scalar::one()));
        }
        for (jk, c) in h.comul_basis(i) {
            let (j, k) = (jk / n, jk % n);
            for m in 0..n {
                // e_j S(e_k)
                for (r, v) in h.mul_basis(j, m) {
                    rows_t[*r].push((var(m, k), c * v));
                }
                // S(e_j) e_k
                for (r, v) in h.mul_basis(m, k) {
                    rows_s[*r].push((var(m, j), c * v));
                }
            }
            // − S(e_j) ε_t(e_k)
            let tk = et.column(k);
            for (p, w) in tk.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                let cw = c * w;
                for m in 0..n {
                    for (r, v) in h.mul_basis(m, p) {
                        rows_u[*r].push((var(m, j), -(&cw * v)));
                    }
                }
            }
        }
        for r in 0..n {
            sys.add_sparse_equation(std::mem::take(&mut rows_t[r]), et.get(r, i).clone());
            sys.add_sparse_equation(std::mem::take(&mut rows_s[r]), es.get(r, i).clone());
            sys.add_sparse_equation(std::mem::take(&mut rows_u[r]), Scalar::zero());
        }
    }
    let sol = sys.solve().map_err(|_| Error::NoAntipode)?;
    if sol.kernel.dim() > 0 {
        return Err(Error::NotUnique(sol.kernel.dim()));
    }
    let s = Matrix::from_fn(n, n, |m, k| sol.particular[var(m, k)].clone());
    let checks = check_antipode(h, &s);
    if let Some(w) = checks[2].witness.as_ref() {
        return Err(Error::Axiom26Failure(w.indices[0]));
    }
    Ok(s)
}

/// Returns `h` with a solved antipode attached (or its given one verified).
pub fn complete(h: &WeakHopfAlgebra) -> Result<WeakHopfAlgebra> {
    if let Ok(s) = h.antipode() {
        let checks = check_antipode(h, s);
        if let Some(bad) = checks.iter().find(|c| !c.passed) {
            return Err(Error::AxiomFailure(format!(
                "given antipode fails {}",
                bad.axiom
            )));
        }
        return Ok(h.clone());
    }
    let s = solve_antipode(h)?;
    h.with_antipode(s)
}

/// Whether S is an algebra and coalgebra anti-homomorphism, checked on basis pairs.
pub fn antipode_is_anti_morphism(h: &WeakHopfAlgebra) -> Result<bool> {
    let n = h.dim();
    let s = h.antipode()?;
    let s_cols: Vec<Vector> = (0..n).map(|k| s.column(k)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = s.apply(&dense_from_sparse(n, h.mul_basis(i, j)));
            if lhs != h.mul(&s_cols[j], &s_cols[i]) {
                return Ok(false);
            }
        }
        let lhs = h.comul(&s_cols[i]);
        let rhs = h.flip(&h.tensor_map(s, s, &h.comul(&h.basis_element(i))));
        if lhs != rhs {
            return Ok(false);
        }
    }
    if s.apply(h.unit()) != *h.unit() || s.transpose().apply(h.counit()) != *h.counit() {
        return Ok(false);
    }
    Ok(true)
}
