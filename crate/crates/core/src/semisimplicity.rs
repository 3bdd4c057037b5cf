//! Trace theory for the square of the antipode, idempotent splitting of
//! commutative subalgebras, connectedness and the semisimplicity criteria
//! that follow from a nonvanishing trace.
//!
//! Semisimplicity itself is always decided by Maschke's criterion (with the
//! trace-form oracle as a cross-check). The trace criteria are evaluated
//! separately and reported as implications that must hold.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integrals::{dual_pair, is_semisimple, trace_form_semisimple, DualPair};
use crate::linalg::{LinearSystem, Matrix, Subspace, Vector};
use crate::scalar::{divisors, FieldSpec, Scalar};
use crate::wha::{Element, WeakHopfAlgebra};

/// Largest numerator and denominator tried when searching roots outside ℚ.
const ROOT_TRIAL_BOUND: i64 = 12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceS2 {
    pub direct: Scalar,
    pub formula: Scalar,
}

/// Tr(S²) directly and as ⟨ε_s(λ), ε_s(ℓ)⟩, with ε_s(λ) taken in H*.
pub fn trace_s2(h: &WeakHopfAlgebra, pair: &DualPair) -> Result<TraceS2> {
    let s = h.antipode()?;
    let direct = s.mul(s).trace();
    let eps_s_lambda = h.dualize().eps_s(&pair.lambda);
    let formula = h.pair(&eps_s_lambda, &h.eps_s(&pair.ell));
    Ok(TraceS2 { direct, formula })
}

// ---- polynomials --------------------------------------------------------

/// Coefficients from the constant term upwards.
type Poly = Vec<Scalar>;

fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    p.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
}

/// p / (t − r), assuming r is a root.
fn deflate(p: &[Scalar], r: &Scalar) -> Poly {
    let d = p.len() - 1;
    let mut q = vec![Scalar::zero(); d];
    let mut carry = Scalar::zero();
    for k in (1..=d).rev() {
        carry = &p[k] + &(&carry * r);
        q[k - 1] = carry.clone();
    }
    q
}

/// Rational roots via the rational root theorem, for rational coefficients.
fn rational_root_candidates(p: &[Scalar]) -> Option<Vec<Scalar>> {
    let rats: Vec<&BigRational> = p.iter().map(|c| c.as_rational()).collect::<Option<_>>()?;
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (*r * &lcm).to_integer()).collect();
    let low = ints.iter().position(|c| !c.is_zero())?;
    let lead = ints.last()?;
    let mut out = Vec::new();
    if low > 0 {
        out.push(Scalar::zero());
    }
    for num in divisors(&ints[low]) {
        for den in divisors(lead) {
            let r = BigRational::new(num.clone(), den);
            out.push(Scalar::from(r.clone()));
            out.push(Scalar::from(-r));
        }
    }
    Some(out)
}

/// Roots of unity of the field times small rationals.
fn field_root_candidates(field: FieldSpec) -> Vec<Scalar> {
    let n = field.order();
    let roots = if n % 2 == 0 { n } else { 2 * n };
    let mut out = vec![Scalar::zero()];
    for k in 0..roots {
        let z = field
            .root_of_unity(roots, k as i64)
            .expect("the field contains its own roots of unity");
        for a in 1..=ROOT_TRIAL_BOUND {
            for b in 1..=ROOT_TRIAL_BOUND {
                if a.gcd(&b) == 1 {
                    out.push(&z * &Scalar::ratio(a, b));
                }
            }
        }
    }
    out
}

/// All roots of `p` in the field, with multiplicity; NonSplit if some
/// factor has no root among the candidates.
fn split_roots(p: &[Scalar], field: FieldSpec) -> Result<Vec<Scalar>> {
    let mut rest: Poly = p.to_vec();
    let mut roots = Vec::new();
    let mut pools = Vec::new();
    if let Some(c) = rational_root_candidates(p) {
        pools.push(c);
    }
    if field != FieldSpec::Rational {
        pools.push(field_root_candidates(field));
    }
    for pool in &pools {
        let mut progress = true;
        while progress && rest.len() > 1 {
            progress = false;
            for r in pool {
                if eval(&rest, r).is_zero() {
                    rest = deflate(&rest, r);
                    roots.push(r.clone());
                    progress = true;
                    break;
                }
            }
        }
    }
    if rest.len() > 1 {
        return Err(Error::NonSplit(format!(
            "a factor of degree {} has no root in {}",
            rest.len() - 1,
            field
        )));
    }
    Ok(roots)
}

// ---- idempotents --------------------------------------------------------

/// Minimal polynomial of `x` inside the algebra with unit `e`, monic.
fn minimal_polynomial(h: &WeakHopfAlgebra, e: &[Scalar], x: &[Scalar]) -> Poly {
    let mut powers: Vec<Vector> = vec![e.to_vec()];
    loop {
        let next = h.mul(powers.last().unwrap(), x);
        let m = Matrix::from_columns(h.dim(), &powers);
        if let Ok(sol) = m.solve(&next) {
            let mut p: Poly = sol.particular.iter().map(|c| -c).collect();
            p.push(Scalar::one());
            return p;
        }
        powers.push(next);
    }
}

/// The complete set of primitive idempotents of a commutative semisimple
/// subalgebra `a` containing 1, in a deterministic order.
pub fn primitive_idempotents(h: &WeakHopfAlgebra, a: &Subspace) -> Result<Vec<Element>> {
    if !a.contains(h.unit()) || !h.is_closed_under_mult(a) {
        return Err(Error::PreconditionUnmet(
            "not a unital subalgebra".into(),
        ));
    }
    for x in a.basis() {
        for y in a.basis() {
            if h.mul(x, y) != h.mul(y, x) {
                return Err(Error::PreconditionUnmet("subalgebra is not commutative".into()));
            }
        }
    }
    let mut pending = vec![h.unit().clone()];
    let mut done = Vec::new();
    'outer: while let Some(e) = pending.pop() {
        for b in a.basis() {
            let x = h.mul(&e, b);
            let m = minimal_polynomial(h, &e, &x);
            if m.len() == 2 {
                continue;
            }
            let roots = split_roots(&m, h.field())?;
            for (i, r) in roots.iter().enumerate() {
                if roots[..i].contains(r) {
                    return Err(Error::PreconditionUnmet(
                        "subalgebra is not semisimple (repeated eigenvalue)".into(),
                    ));
                }
            }
            // Lagrange idempotents, pushed in reverse so the first root is handled first
            for (i, r) in roots.iter().enumerate().rev() {
                let mut p = e.clone();
                for (j, s) in roots.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let factor: Vector = x
                        .iter()
                        .zip(&e)
                        .map(|(xi, ei)| &(xi - &(s * ei)) / &(r - s))
                        .collect();
                    p = h.mul(&p, &factor);
                }
                pending.push(p);
            }
            continue 'outer;
        }
        done.push(e);
    }
    done.sort_by_key(|p| p.iter().position(|c| !c.is_zero()));
    Ok(done)
}

/// Center of a subalgebra, as a subspace of H.
pub fn subalgebra_center(h: &WeakHopfAlgebra, a: &Subspace) -> Subspace {
    let k = a.dim();
    let n = h.dim();
    let mut sys = LinearSystem::new(k);
    for b in a.basis() {
        let cols: Vec<Vector> = a.basis().iter().map(|x| h.commutator(x, b)).collect();
        for r in 0..n {
            let row: Vec<Scalar> = cols.iter().map(|c| c[r].clone()).collect();
            sys.add_equation(&row, Scalar::zero());
        }
    }
    let ker = sys.kernel();
    Subspace::from_vectors(n, ker.basis().iter().map(|c| a.combination(c)))
}

// ---- compressed traces ----------------------------------------------------

/// Trace of x ↦ left·T(x)·right on the subspace `sub` (which it must preserve).
fn compressed_trace(
    h: &WeakHopfAlgebra,
    sub: &Subspace,
    t: &Matrix,
    left: Option<&[Scalar]>,
    right: Option<&[Scalar]>,
) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for (i, b) in sub.basis().iter().enumerate() {
        let mut y = t.apply(b);
        if let Some(l) = left {
            y = h.mul(l, &y);
        }
        if let Some(r) = right {
            y = h.mul(&y, r);
        }
        let c = sub
            .coordinates(&y)
            .ok_or_else(|| Error::Mismatch("compressed map leaves the subspace".into()))?;
        acc += &c[i];
    }
    Ok(acc)
}

fn left_ideal(h: &WeakHopfAlgebra, p: &[Scalar]) -> Subspace {
    h.left_mult_matrix(p).column_space()
}

fn right_ideal(h: &WeakHopfAlgebra, p: &[Scalar]) -> Subspace {
    h.right_mult_matrix(p).column_space()
}

/// Tr(S²|pH).
pub fn trace_s2_on_left_ideal(h: &WeakHopfAlgebra, p: &[Scalar]) -> Result<Scalar> {
    let s = h.antipode()?;
    compressed_trace(h, &left_ideal(h, p), &s.mul(s), Some(p), None)
}

/// Tr(S²|pHp).
pub fn trace_s2_on_corner(h: &WeakHopfAlgebra, p: &[Scalar]) -> Result<Scalar> {
    let s = h.antipode()?;
    let corner = left_ideal(h, p).intersect(&right_ideal(h, p));
    compressed_trace(h, &corner, &s.mul(s), Some(p), Some(p))
}

/// Tr(S²|Hπ) for an idempotent π, i.e. the trace on the left ideal generated
/// from the right.
pub fn trace_s2_on_right_ideal(h: &WeakHopfAlgebra, pi: &[Scalar]) -> Result<Scalar> {
    let s = h.antipode()?;
    compressed_trace(h, &right_ideal(h, pi), &s.mul(s), None, Some(pi))
}

/// Renders an element as a combination of basis labels.
pub fn element_label(h: &WeakHopfAlgebra, v: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if c.is_one() {
            out.push_str(&h.labels()[i]);
        } else {
            out.push_str(&format!("({})·{}", c, h.labels()[i]));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// ---- connectedness --------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Connectedness {
    pub connected: bool,
    pub biconnected: bool,
}

pub fn connectedness(h: &WeakHopfAlgebra) -> Connectedness {
    let connected = h.counital_subalgebras().z_cap_hs.dim() == 1;
    let dual_connected = h.dualize().counital_subalgebras().z_cap_hs.dim() == 1;
    Connectedness {
        connected,
        biconnected: connected && dual_connected,
    }
}

// ---- report ---------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Block {
    pub idempotent: String,
    pub trace: Scalar,
}

/// Per-idempotent traces; `None` when the relevant subalgebra does not
/// split over the field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockTraces {
    /// Tr(S²|pH), p primitive in Z(H)∩H_s.
    pub left_ideals: Option<Vec<Block>>,
    /// Tr(S²|H*π), π primitive in H_s*∩H_t*.
    pub dual_ideals: Option<Vec<Block>>,
    /// Tr(S²|pHp), p primitive in the center of H_min.
    pub corners: Option<Vec<Block>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Implication {
    pub name: &'static str,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Implication {
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceReport {
    pub tr_s2_direct: Scalar,
    /// Absent when H has no non-degenerate integral.
    pub tr_s2_formula: Option<Scalar>,
    pub blocks: BlockTraces,
    pub connected: bool,
    pub biconnected: bool,
    pub semisimple: bool,
    pub cosemisimple: bool,
    pub semisimple_by_trace_form: bool,
    pub cosemisimple_by_trace_form: bool,
    pub implications: Vec<Implication>,
}

impl TraceReport {
    /// Formula equals the direct trace, Maschke agrees with the oracle on
    /// both sides and every implication holds.
    pub fn passed(&self) -> bool {
        self.tr_s2_formula.as_ref().is_none_or(|f| *f == self.tr_s2_direct)
            && self.semisimple == self.semisimple_by_trace_form
            && self.cosemisimple == self.cosemisimple_by_trace_form
            && self.implications.iter().all(Implication::holds)
    }
}

fn blocks_with(
    h: &WeakHopfAlgebra,
    sub: &Subspace,
    trace: impl Fn(&[Scalar]) -> Result<Scalar>,
) -> Result<Option<Vec<Block>>> {
    let idems = match primitive_idempotents(h, sub) {
        Ok(v) => v,
        Err(Error::NonSplit(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut out = Vec::with_capacity(idems.len());
    for p in idems {
        out.push(Block {
            idempotent: element_label(h, &p),
            trace: trace(&p)?,
        });
    }
    Ok(Some(out))
}

fn all_nonzero(blocks: &Option<Vec<Block>>) -> bool {
    blocks
        .as_ref()
        .is_some_and(|b| b.iter().all(|x| !x.trace.is_zero()))
}

/// Evaluates every trace criterion together with the decisions it should imply.
pub fn semisimplicity_report(h: &WeakHopfAlgebra) -> Result<TraceReport> {
    let s = h.antipode()?;
    let dual = h.dualize();
    let tr_s2_direct = s.mul(s).trace();
    let tr_s2_formula = match dual_pair(h) {
        Ok(pair) => Some(trace_s2(h, &pair)?.formula),
        Err(Error::NotFrobenius(_)) | Err(Error::Undecidable(_)) => None,
        Err(e) => return Err(e),
    };
    let subs = h.counital_subalgebras();
    let dual_subs = dual.counital_subalgebras();
    let left_ideals = blocks_with(h, &subs.z_cap_hs, |p| trace_s2_on_left_ideal(h, p))?;
    let dual_ideals = blocks_with(&dual, &dual_subs.ht_cap_hs, |p| {
        trace_s2_on_right_ideal(&dual, p)
    })?;
    let corners = blocks_with(h, &subalgebra_center(h, &subs.hmin), |p| {
        trace_s2_on_corner(h, p)
    })?;

    let conn = connectedness(h);
    let semisimple = is_semisimple(h);
    let cosemisimple = is_semisimple(&dual);
    let regular = h.is_regular()?;
    let dual_regular = dual.is_regular()?;
    let nonzero_trace = !tr_s2_direct.is_zero();
    let implications = vec![
        Implication {
            name: "left_ideal_traces_imply_semisimple",
            hypothesis: regular && all_nonzero(&left_ideals),
            conclusion: semisimple,
        },
        Implication {
            name: "dual_ideal_traces_imply_semisimple",
            hypothesis: regular && all_nonzero(&dual_ideals),
            conclusion: semisimple,
        },
        Implication {
            name: "connected_trace_implies_semisimple",
            hypothesis: regular && conn.connected && nonzero_trace,
            conclusion: semisimple,
        },
        Implication {
            name: "biconnected_trace_implies_both",
            hypothesis: regular && conn.biconnected && nonzero_trace,
            conclusion: semisimple && cosemisimple,
        },
        Implication {
            name: "semisimple_implies_corner_traces",
            hypothesis: semisimple && dual_regular && corners.is_some(),
            conclusion: all_nonzero(&corners),
        },
        Implication {
            name: "coinciding_bases_imply_cosemisimple",
            hypothesis: semisimple && subs.ht == subs.hs,
            conclusion: cosemisimple,
        },
    ];
    Ok(TraceReport {
        tr_s2_direct,
        tr_s2_formula,
        blocks: BlockTraces {
            left_ideals,
            dual_ideals,
            corners,
        },
        connected: conn.connected,
        biconnected: conn.biconnected,
        semisimple,
        cosemisimple,
        semisimple_by_trace_form: trace_form_semisimple(h),
        cosemisimple_by_trace_form: trace_form_semisimple(&dual),
        implications,
    })
}

// ---- coinciding bases -------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoincidingBasesReport {
    pub dual_semisimple: bool,
    /// ε_t(λ), computed in H*, lies in Z(H*)∩H_s*.
    pub eps_t_lambda_central_source: bool,
    pub eps_t_lambda_invertible: bool,
    /// (Tr(S²|pHp), ⟨ε_t(λ), pε_s(pℓ)⟩) for p primitive in H_s.
    pub corner_traces: Vec<(Scalar, Scalar)>,
}

impl CoincidingBasesReport {
    pub fn passed(&self) -> bool {
        self.dual_semisimple
            && self.eps_t_lambda_central_source
            && self.eps_t_lambda_invertible
            && self
                .corner_traces
                .iter()
                .all(|(a, b)| a == b && !a.is_zero())
    }
}

/// For semisimple H with H_t = H_s: H* is semisimple, and the intermediate
/// claims about ε_t(λ) hold.
pub fn coinciding_bases_theorem_check(h: &WeakHopfAlgebra) -> Result<CoincidingBasesReport> {
    let subs = h.counital_subalgebras();
    if subs.ht != subs.hs {
        return Err(Error::PreconditionUnmet("H_t ≠ H_s".into()));
    }
    if !is_semisimple(h) {
        return Err(Error::PreconditionUnmet("H is not semisimple".into()));
    }
    let pair = dual_pair(h)?;
    let dual = h.dualize();
    let eps_t_lambda = dual.eps_t(&pair.lambda);
    let dual_subs = dual.counital_subalgebras();
    let mut corner_traces = Vec::new();
    for p in primitive_idempotents(h, &subs.hs)? {
        let direct = trace_s2_on_corner(h, &p)?;
        let pl = h.mul(&p, &pair.ell);
        let formula = h.pair(&eps_t_lambda, &h.mul(&p, &h.eps_s(&pl)));
        corner_traces.push((direct, formula));
    }
    Ok(CoincidingBasesReport {
        dual_semisimple: is_semisimple(&dual),
        eps_t_lambda_central_source: dual_subs.z_cap_hs.contains(&eps_t_lambda),
        eps_t_lambda_invertible: dual.is_invertible(&eps_t_lambda),
        corner_traces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn z2() -> WeakHopfAlgebra {
        group_algebra(&FiniteGroup::cyclic(2), FieldSpec::Rational)
    }

    #[test]
    fn idempotents_of_z2_center() {
        let h = z2();
        let idems = primitive_idempotents(&h, &h.center()).unwrap();
        let half = Scalar::ratio(1, 2);
        assert_eq!(
            idems,
            vec![vec![half.clone(), half.clone()], vec![half.clone(), -half]]
        );
    }

    #[test]
    fn idempotents_of_diagonal_matrix_units() {
        let h = matrix_wha(2);
        let diag = Subspace::from_vectors(4, vec![h.basis_element(0), h.basis_element(3)]);
        let idems = primitive_idempotents(&h, &diag).unwrap();
        assert_eq!(idems, vec![h.basis_element(0), h.basis_element(3)]);
    }

    #[test]
    fn z3_center_splits_only_over_cyclotomic() {
        let q = group_algebra(&FiniteGroup::cyclic(3), FieldSpec::Rational);
        assert!(matches!(
            primitive_idempotents(&q, &q.center()),
            Err(Error::NonSplit(_))
        ));
        let k = FieldSpec::cyclotomic(3).unwrap();
        let h = group_algebra(&FiniteGroup::cyclic(3), k);
        let idems = primitive_idempotents(&h, &h.center()).unwrap();
        assert_eq!(idems.len(), 3);
        let third = Scalar::ratio(1, 3);
        for p in &idems {
            assert_eq!(h.mul(p, p), *p);
            // (1/3)Σ χ(a⁻¹)a has coefficient 1/3 at the identity
            assert_eq!(p[0], third);
        }
        let total = idems
            .iter()
            .fold(h.zero(), |acc, p| crate::linalg::add_vectors(&acc, p));
        assert_eq!(total, *h.unit());
    }

    #[test]
    fn trace_formula_matches_direct() {
        for h in [z2(), matrix_wha(2), sweedler()] {
            let pair = dual_pair(&h).unwrap();
            let t = trace_s2(&h, &pair).unwrap();
            assert_eq!(t.direct, t.formula);
        }
        let t = trace_s2(&z2(), &dual_pair(&z2()).unwrap()).unwrap();
        assert_eq!(t.direct, Scalar::int(2));
    }

    #[test]
    fn connectedness_examples() {
        assert!(connectedness(&z2()).biconnected);
        assert!(connectedness(&matrix_wha(2)).connected);
        let z = Groupoid::from_group(&FiniteGroup::cyclic(2));
        let u = groupoid_algebra(&Groupoid::disjoint_union(&z, &z), FieldSpec::Rational);
        assert!(!connectedness(&u).connected);
    }

    #[test]
    fn report_on_pair_groupoid() {
        let r = semisimplicity_report(&matrix_wha(2)).unwrap();
        assert!(r.passed(), "{:?}", r);
        assert_eq!(r.tr_s2_direct, Scalar::int(4));
        assert!(r.semisimple && r.cosemisimple);
    }

    #[test]
    fn sweedler_is_a_negative_control() {
        let r = semisimplicity_report(&sweedler()).unwrap();
        assert!(r.passed());
        assert!(!r.semisimple);
        assert_eq!(r.tr_s2_direct, Scalar::zero());
    }

    #[test]
    fn coinciding_bases() {
        let r = coinciding_bases_theorem_check(&matrix_wha(2)).unwrap();
        assert!(r.passed(), "{:?}", r);
        assert!(matches!(
            coinciding_bases_theorem_check(&sweedler()),
            Err(Error::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn roots_with_multiplicity_are_refused() {
        let p = vec![Scalar::int(1), Scalar::int(-2), Scalar::int(1)];
        assert_eq!(split_roots(&p, FieldSpec::Rational).unwrap().len(), 2);
        let q = vec![Scalar::int(1), Scalar::zero(), Scalar::int(1)];
        assert!(matches!(split_roots(&q, FieldSpec::Rational), Err(Error::NonSplit(_))));
    }
}
