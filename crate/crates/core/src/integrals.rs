//! Integrals: the left and right integral spaces, non-degeneracy, dual
//! pairs, the Maschke test and the integral formulas for S and for traces.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{axpy, unit_vector, zero_vector, LinearSystem, Matrix, Subspace, Vector};
use crate::scalar::Scalar;
use crate::search::{search_span, Search};
use crate::validate::{diff_dense, AxiomCheck, Checker};
use crate::wha::{Element, Functional, WeakHopfAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A non-degenerate left integral ℓ of H with its dual left integral λ of H*.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualPair {
    pub ell: Element,
    pub lambda: Functional,
}

/// Left integrals {ℓ : hℓ = ε_t(h)ℓ} or right integrals {r : rh = rε_s(h)}.
pub fn integral_space(h: &WeakHopfAlgebra, side: Side) -> Subspace {
    let n = h.dim();
    let mut sys = LinearSystem::new(n);
    for i in 0..n {
        let e = h.basis_element(i);
        let m = match side {
            Side::Left => h.left_mult_matrix(&e).sub(&h.left_mult_matrix(&h.eps_t(&e))),
            Side::Right => h.right_mult_matrix(&e).sub(&h.right_mult_matrix(&h.eps_s(&e))),
        };
        for r in 0..n {
            sys.add_equation(m.row(r), Scalar::zero());
        }
    }
    sys.kernel()
}

/// Integral space of H*, as functionals on H.
pub fn dual_integral_space(h: &WeakHopfAlgebra, side: Side) -> Subspace {
    integral_space(&h.dualize(), side)
}

/// Matrix of φ ↦ φ⇀ℓ; entry (a, b) is the coefficient of e_a⊗e_b in Δ(ℓ).
pub fn arrow_matrix(h: &WeakHopfAlgebra, ell: &[Scalar]) -> Matrix {
    let n = h.dim();
    let d = h.comul(ell);
    Matrix::from_fn(n, n, |a, b| d[a * n + b].clone())
}

pub fn is_nondegenerate(h: &WeakHopfAlgebra, ell: &[Scalar]) -> bool {
    arrow_matrix(h, ell).rank() == h.dim()
}

/// A non-degenerate left integral, found by the deterministic height search.
///
/// The determinant of φ ↦ φ⇀ℓ has degree at most rank(arrow_matrix(b_i)) in
/// the coordinate of the basis integral b_i, so an exhausted search is a proof
/// that every left integral is degenerate.
pub fn find_nondegenerate_integral(h: &WeakHopfAlgebra) -> Result<Element> {
    let space = integral_space(h, Side::Left);
    let ht = h.target_base().dim();
    if space.dim() != ht {
        return Err(Error::NotFrobenius(format!(
            "dim of left integrals is {} but dim H_t is {}",
            space.dim(),
            ht
        )));
    }
    let degrees: Vec<usize> = space.basis().iter().map(|b| arrow_matrix(h, b).rank()).collect();
    match search_span(&space, Some(&degrees), |ell| is_nondegenerate(h, ell)) {
        Search::Found { element, .. } => Ok(element),
        Search::NoneExists => Err(Error::NotFrobenius(
            "every left integral is degenerate".into(),
        )),
        Search::Undecided { height } => Err(Error::Undecidable(format!(
            "no non-degenerate left integral up to height {}",
            height
        ))),
    }
}

/// A non-degenerate integral that is both left and right, if one exists.
pub fn find_two_sided_nondegenerate_integral(h: &WeakHopfAlgebra) -> Result<Option<Element>> {
    let space = integral_space(h, Side::Left).intersect(&integral_space(h, Side::Right));
    if space.dim() == 0 {
        return Ok(None);
    }
    let degrees: Vec<usize> = space.basis().iter().map(|b| arrow_matrix(h, b).rank()).collect();
    match search_span(&space, Some(&degrees), |ell| is_nondegenerate(h, ell)) {
        Search::Found { element, .. } => Ok(Some(element)),
        Search::NoneExists => Ok(None),
        Search::Undecided { height } => Err(Error::Undecidable(format!(
            "no non-degenerate two-sided integral up to height {}",
            height
        ))),
    }
}

/// The unique λ with λ⇀ℓ = 1, checked to satisfy ℓ⇀λ = ε and λ ∈ ∫^l of H*.
pub fn dual_integral(h: &WeakHopfAlgebra, ell: &[Scalar]) -> Result<DualPair> {
    let sol = arrow_matrix(h, ell)
        .solve(h.unit())
        .map_err(|_| Error::Inconsistent("λ⇀ℓ = 1 has no solution".into()))?;
    if sol.kernel.dim() > 0 {
        return Err(Error::Inconsistent("λ⇀ℓ = 1 has many solutions".into()));
    }
    let lambda = sol.particular;
    if h.lact_dual(ell, &lambda) != *h.counit() {
        return Err(Error::Inconsistent("ℓ⇀λ differs from ε".into()));
    }
    if !dual_integral_space(h, Side::Left).contains(&lambda) {
        return Err(Error::Inconsistent("λ is not a left integral of H*".into()));
    }
    Ok(DualPair {
        ell: ell.to_vec(),
        lambda,
    })
}

pub fn dual_pair(h: &WeakHopfAlgebra) -> Result<DualPair> {
    let ell = find_nondegenerate_integral(h)?;
    dual_integral(h, &ell)
}

/// A left integral with ε_t(ℓ) = 1, if one exists.
pub fn normalized_integral(h: &WeakHopfAlgebra) -> Option<Element> {
    let space = integral_space(h, Side::Left);
    let n = h.dim();
    let images: Vec<Vector> = space.basis().iter().map(|b| h.eps_t(b)).collect();
    let mut sys = LinearSystem::new(space.dim());
    for r in 0..n {
        let row: Vec<Scalar> = images.iter().map(|v| v[r].clone()).collect();
        sys.add_equation(&row, h.unit()[r].clone());
    }
    sys.solve().ok().map(|s| space.combination(&s.particular))
}

/// Maschke: H is semisimple iff a normalized left integral exists.
pub fn is_semisimple(h: &WeakHopfAlgebra) -> bool {
    normalized_integral(h).is_some()
}

/// Gram matrix of the trace form (a, b) ↦ Tr(L_a L_b) of the regular representation.
pub fn trace_form(h: &WeakHopfAlgebra) -> Matrix {
    let n = h.dim();
    let tau: Vec<Scalar> = (0..n)
        .map(|k| h.left_mult_matrix(&h.basis_element(k)).trace())
        .collect();
    Matrix::from_fn(n, n, |i, j| {
        let mut acc = Scalar::zero();
        for (k, c) in h.mul_basis(i, j) {
            acc += &(c * &tau[*k]);
        }
        acc
    })
}

/// In characteristic 0, semisimple iff the trace form is non-degenerate.
pub fn trace_form_semisimple(h: &WeakHopfAlgebra) -> bool {
    trace_form(h).rank() == h.dim()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvarianceReport {
    pub left: AxiomCheck,
    pub right: AxiomCheck,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.left.passed && self.right.passed
    }
}

/// Invariance of a left integral λ of H*:
/// g₍₁₎⟨λ, hg₍₂₎⟩ = S(h₍₁₎)⟨λ, h₍₂₎g⟩, and of the right integral ρ:
/// ⟨ρ, g₍₁₎h⟩g₍₂₎ = ⟨ρ, gh₍₁₎⟩S(h₍₂₎). ρ defaults to S(λ) = λ∘S.
pub fn invariance_check(
    h: &WeakHopfAlgebra,
    lambda: &[Scalar],
    rho: Option<&[Scalar]>,
) -> Result<InvarianceReport> {
    let n = h.dim();
    let s = h.antipode()?;
    let rho: Vector = match rho {
        Some(r) => r.to_vec(),
        None => s.transpose().apply(lambda),
    };
    // Λ[a][b] = λ(e_a e_b), R[a][b] = ρ(e_a e_b)
    let prod_form = |f: &[Scalar]| {
        Matrix::from_fn(n, n, |a, b| {
            let mut acc = Scalar::zero();
            for (k, c) in h.mul_basis(a, b) {
                acc += &(c * &f[*k]);
            }
            acc
        })
    };
    let lf = prod_form(lambda);
    let rf = prod_form(&rho);
    let s_cols: Vec<Vector> = (0..n).map(|k| s.column(k)).collect();
    let mut left = Checker::new("left_invariance");
    let mut right = Checker::new("right_invariance");
    for g in 0..n {
        for x in 0..n {
            let mut l_lhs = zero_vector(n);
            let mut r_lhs = zero_vector(n);
            for (jk, c) in h.comul_basis(g) {
                let (j, k) = (jk / n, jk % n);
                l_lhs[j] += &(c * lf.get(x, k));
                r_lhs[k] += &(c * rf.get(j, x));
            }
            let mut l_rhs = zero_vector(n);
            let mut r_rhs = zero_vector(n);
            for (jk, c) in h.comul_basis(x) {
                let (j, k) = (jk / n, jk % n);
                axpy(&mut l_rhs, &(c * lf.get(k, g)), &s_cols[j]);
                axpy(&mut r_rhs, &(c * rf.get(g, j)), &s_cols[k]);
            }
            left.record(diff_dense(&l_lhs, &l_rhs, &[g, x]));
            right.record(diff_dense(&r_lhs, &r_rhs, &[g, x]));
        }
    }
    Ok(InvarianceReport {
        left: left.finish(),
        right: right.finish(),
    })
}

/// The map φ ↦ (ℓ↼φ)⇀λ on H*, as a matrix in the dual basis.
pub fn antipode_from_integrals(h: &WeakHopfAlgebra, pair: &DualPair) -> Matrix {
    let n = h.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|i| {
            let x = h.ract(&pair.ell, &unit_vector(n, i));
            h.lact_dual(&x, &pair.lambda)
        })
        .collect();
    Matrix::from_columns(n, &cols)
}

/// Checks the integral formula for the antipode against Sᵀ.
pub fn check_antipode_from_integrals(h: &WeakHopfAlgebra, pair: &DualPair) -> Result<Matrix> {
    let m = antipode_from_integrals(h, pair);
    if m != h.antipode()?.transpose() {
        return Err(Error::Mismatch(
            "(ℓ↼φ)⇀λ differs from the transpose of S".into(),
        ));
    }
    Ok(m)
}

/// Tr(T) = ⟨λ, T(S⁻¹(ℓ₍₁₎))·ℓ₍₂₎⟩.
pub fn trace_via_integrals(h: &WeakHopfAlgebra, pair: &DualPair, t: &Matrix) -> Result<Scalar> {
    let n = h.dim();
    let s_inv = h.antipode_inverse()?;
    let mut acc = Scalar::zero();
    for (jk, c) in h.comul(&pair.ell).iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (j, k) = (jk / n, jk % n);
        let x = t.apply(&s_inv.column(j));
        let y = h.mul(&x, &unit_vector(n, k));
        acc += &(c * &h.pair(&pair.lambda, &y));
    }
    Ok(acc)
}
