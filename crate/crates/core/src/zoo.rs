//! The bundled examples and a batch pipeline over them.

use serde::Serialize;

use crate::constructors::*;
use crate::error::Result;
use crate::grouplikes::{
    distinguished_pair, is_trivial_automorphism, lambda_ell_relations, radford_check,
    self_intertwiners, Triviality,
};
use crate::integrals::{
    check_antipode_from_integrals, dual_pair, find_two_sided_nondegenerate_integral, integral_space,
    invariance_check, Side,
};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::semisimplicity::{semisimplicity_report, trace_s2};
use crate::twisting::{regularize, DynamicalTwistData};
use crate::validate::validate;
use crate::wha::WeakHopfAlgebra;

#[derive(Clone, Debug)]
pub struct Member {
    pub name: &'static str,
    pub algebra: WeakHopfAlgebra,
}

fn member(name: &'static str, algebra: WeakHopfAlgebra) -> Member {
    Member { name, algebra }
}

pub fn group_z2() -> WeakHopfAlgebra {
    group_algebra(&FiniteGroup::cyclic(2), FieldSpec::Rational)
}

pub fn group_z3() -> WeakHopfAlgebra {
    let k = FieldSpec::cyclotomic(3).expect("order 3 is valid");
    group_algebra(&FiniteGroup::cyclic(3), k)
}

pub fn group_s3() -> WeakHopfAlgebra {
    group_algebra(&FiniteGroup::symmetric(3), FieldSpec::Rational)
}

pub fn groupoid_z2_z2() -> WeakHopfAlgebra {
    let z2 = Groupoid::from_group(&FiniteGroup::cyclic(2));
    groupoid_algebra(&Groupoid::disjoint_union(&z2, &z2), FieldSpec::Rational)
}

/// H_min(ℚ⊕ℚ, ℚ1, 1).
pub fn min_q_q() -> WeakHopfAlgebra {
    minimal_wha(&SemisimplePresentation::trivial(vec![1, 1]))
        .expect("valid presentation")
        .algebra
}

/// H_min(M₂, ℚ1, 1).
pub fn min_m2() -> WeakHopfAlgebra {
    minimal_wha(&SemisimplePresentation::trivial(vec![2]))
        .expect("valid presentation")
        .algebra
}

/// H_min(M₂, ℚ1, diag(3, −1)).
pub fn min_m2_g() -> WeakHopfAlgebra {
    let g = Matrix::diagonal(&[Scalar::int(3), Scalar::int(-1)]);
    minimal_wha(&SemisimplePresentation::trivial(vec![2]).with_g(vec![g]))
        .expect("valid presentation")
        .algebra
}

/// M₂ ⊗ ℚ[ℤ/2], the host of the ℤ/2 dynamical twist.
pub fn dyn_host_z2() -> WeakHopfAlgebra {
    matrix_wha(2)
        .tensor_product(&group_z2())
        .expect("same field")
}

/// U = k[ℤ/n] over the smallest cyclotomic field with the n-th roots of
/// unity, A = all of ℤ/n and J ≡ 1⊗1.
pub fn cyclic_dynamical_data(n: usize) -> Result<DynamicalTwistData> {
    let field = FieldSpec::cyclotomic(n as u32)?;
    let u = group_algebra(&FiniteGroup::cyclic(n), field);
    let group = (0..n).map(|i| u.basis_element(i)).collect();
    Ok(DynamicalTwistData::trivial(u, group))
}

/// The ℤ/2 data with the constant sign bicharacter J = 1⊗1 − 2P₁⊗P₁.
pub fn sign_bicharacter_data() -> DynamicalTwistData {
    let d = cyclic_dynamical_data(2).expect("ℚ suffices");
    let u = &d.u;
    let half = Scalar::ratio(1, 2);
    let p1 = vec![half.clone(), -half];
    let pp = u.tensor(&p1, &p1);
    let j: Vec<Scalar> = u
        .tensor(u.unit(), u.unit())
        .iter()
        .zip(&pp)
        .map(|(a, b)| a - &(&Scalar::int(2) * b))
        .collect();
    DynamicalTwistData {
        j: vec![j.clone(), j],
        ..d
    }
}

/// Every zoo member, in a fixed order.
pub fn members() -> Vec<Member> {
    let base = vec![
        member("group_z2", group_z2()),
        member("group_z3", group_z3()),
        member("group_s3", group_s3()),
        member("pair2", matrix_wha(2)),
        member("pair3", matrix_wha(3)),
    ];
    let duals = [
        "group_z2*",
        "group_z3*",
        "group_s3*",
        "pair2*",
        "pair3*",
    ];
    let mut out = base.clone();
    for (m, name) in base.iter().zip(duals) {
        out.push(member(name, m.algebra.dualize()));
    }
    out.push(member("groupoid_z2_z2", groupoid_z2_z2()));
    out.push(member("min_q_q", min_q_q()));
    out.push(member("min_m2", min_m2()));
    out.push(member("min_m2_g", min_m2_g()));
    out.push(member("dyn_host_z2", dyn_host_z2()));
    out
}

/// Inputs that are expected to fail some check.
pub fn negative_controls() -> Vec<Member> {
    vec![
        member("sweedler", sweedler()),
        member("idempotent_monoid", idempotent_monoid_bialgebra()),
    ]
}

pub fn find(name: &str) -> Option<WeakHopfAlgebra> {
    members()
        .into_iter()
        .chain(negative_controls())
        .find(|m| m.name == name)
        .map(|m| m.algebra)
}

/// One line of the batch report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZooRow {
    pub name: String,
    pub dim: usize,
    pub field: String,
    pub axioms: bool,
    pub dual_involution: bool,
    pub integral_dims: (usize, usize),
    pub ht_dim: usize,
    pub dual_pair: bool,
    pub invariance: bool,
    pub antipode_from_integrals: bool,
    pub regularized: bool,
    pub radford: bool,
    pub lambda_ell_relations: bool,
    /// Whether S⁴ is conjugation by a trivial group-like; only asked when a
    /// two-sided non-degenerate integral exists.
    pub s4_trivial: Option<bool>,
    pub tr_s2: Option<Scalar>,
    pub tr_s2_formula_agrees: bool,
    pub semisimple: bool,
    pub cosemisimple: bool,
    pub trace_report: bool,
    pub self_intertwiners: usize,
    pub z_cap_hs: usize,
    pub dual_ht_cap_hs: usize,
    pub error: Option<String>,
}

impl ZooRow {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.axioms
            && self.dual_involution
            && self.integral_dims.0 == self.ht_dim
            && self.integral_dims.1 == self.ht_dim
            && self.dual_pair
            && self.invariance
            && self.antipode_from_integrals
            && self.radford
            && self.lambda_ell_relations
            && self.tr_s2_formula_agrees
            && self.trace_report
            && self.s4_trivial != Some(false)
            && self.self_intertwiners == self.z_cap_hs
            && self.self_intertwiners == self.dual_ht_cap_hs
    }
}

fn fill(row: &mut ZooRow, h: &WeakHopfAlgebra) -> Result<()> {
    let pair = dual_pair(h)?;
    row.dual_pair = h.lact(&pair.lambda, &pair.ell) == *h.unit()
        && h.lact_dual(&pair.ell, &pair.lambda) == *h.counit();
    row.invariance = invariance_check(h, &pair.lambda, None)?.passed();
    row.antipode_from_integrals = check_antipode_from_integrals(h, &pair).is_ok();
    let t = trace_s2(h, &pair)?;
    row.tr_s2_formula_agrees = t.direct == t.formula;
    row.tr_s2 = Some(t.direct);

    let reg = regularize(h)?;
    row.regularized = reg.algebra != *h;
    let rpair = dual_pair(&reg.algebra)?;
    let dp = distinguished_pair(&reg.algebra, &rpair)?;
    row.radford = radford_check(&reg.algebra, &dp)?.passed;
    row.lambda_ell_relations = lambda_ell_relations(&reg.algebra, &dp)?
        .iter()
        .all(|c| c.passed);
    if find_two_sided_nondegenerate_integral(&reg.algebra)?.is_some() {
        let s = reg.algebra.antipode()?;
        let s4 = s.mul(s).mul(&s.mul(s));
        row.s4_trivial = match is_trivial_automorphism(&reg.algebra, &s4)? {
            Triviality::Yes { .. } => Some(true),
            Triviality::No => Some(false),
            Triviality::Undecided { reason } => return Err(crate::error::Error::Undecidable(reason)),
        };
    }

    let report = semisimplicity_report(h)?;
    row.semisimple = report.semisimple;
    row.cosemisimple = report.cosemisimple;
    row.trace_report = report.passed();
    row.self_intertwiners = self_intertwiners(h, h.counit())?.dim();
    Ok(())
}

/// Runs the full pipeline on one algebra; failures are recorded, not raised.
pub fn check_member(name: &str, h: &WeakHopfAlgebra) -> ZooRow {
    let mut row = ZooRow {
        name: name.to_string(),
        dim: h.dim(),
        field: h.field().to_string(),
        axioms: validate(h).passed(),
        dual_involution: h.dualize().dualize() == *h,
        integral_dims: (
            integral_space(h, Side::Left).dim(),
            integral_space(h, Side::Right).dim(),
        ),
        ht_dim: h.target_base().dim(),
        dual_pair: false,
        invariance: false,
        antipode_from_integrals: false,
        regularized: false,
        radford: false,
        lambda_ell_relations: false,
        s4_trivial: None,
        tr_s2: None,
        tr_s2_formula_agrees: false,
        semisimple: false,
        cosemisimple: false,
        trace_report: false,
        self_intertwiners: 0,
        z_cap_hs: h.counital_subalgebras().z_cap_hs.dim(),
        dual_ht_cap_hs: h.dualize().counital_subalgebras().ht_cap_hs.dim(),
        error: None,
    };
    if row.axioms {
        if let Err(e) = fill(&mut row, h) {
            row.error = Some(format!("{}: {}", e.kind(), e));
        }
    } else {
        row.error = Some("axiom check failed".into());
    }
    row
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZooReport {
    pub rows: Vec<ZooRow>,
    pub passed: bool,
}

/// Runs every member; `mutate` corrupts the counit of the named member first.
pub fn run_all(mutate: Option<&str>) -> ZooReport {
    let rows: Vec<ZooRow> = members()
        .into_iter()
        .map(|m| {
            let h = if Some(m.name) == mutate {
                corrupt_counit(&m.algebra)
            } else {
                m.algebra
            };
            check_member(m.name, &h)
        })
        .collect();
    let passed = rows.iter().all(ZooRow::passed);
    ZooReport { rows, passed }
}

/// Doubles the counit on the first basis element.
pub fn corrupt_counit(h: &WeakHopfAlgebra) -> WeakHopfAlgebra {
    let mut counit = h.counit().clone();
    counit[0] = &counit[0] * &Scalar::int(2) + Scalar::one();
    h.with_counit(counit).expect("same length")
}

impl ZooReport {
    /// Fixed-width text table.
    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<16} {:>4} {:<10} {:<6} {:<8} {:<8} {:<6} {:<8} {}\n",
            "member", "dim", "field", "axioms", "integral", "radford", "tr S²", "ss/coss", "status"
        ));
        for r in &self.rows {
            let tr = r.tr_s2.as_ref().map(|t| t.to_string()).unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "{:<16} {:>4} {:<10} {:<6} {:<8} {:<8} {:<6} {:<8} {}\n",
                r.name,
                r.dim,
                r.field,
                r.axioms,
                r.dual_pair && r.invariance && r.antipode_from_integrals,
                r.radford && r.lambda_ell_relations,
                tr,
                format!("{}/{}", r.semisimple as u8, r.cosemisimple as u8),
                if r.passed() { "PASS" } else { "FAIL" }
            ));
            if let Some(e) = &r.error {
                out.push_str(&format!("  error: {}\n", e));
            }
        }
        out.push_str(if self.passed { "all members pass\n" } else { "some members fail\n" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn member_names_are_unique() {
        let names: Vec<_> = members().iter().map(|m| m.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
    }

    #[test]
    fn small_members_pass() {
        for name in ["group_z2", "pair2", "min_m2_g"] {
            let row = check_member(name, &find(name).unwrap());
            assert!(row.passed(), "{:?}", row);
        }
    }

    #[test]
    fn mutation_is_detected() {
        let h = corrupt_counit(&group_z2());
        let row = check_member("group_z2", &h);
        assert!(!row.axioms);
        assert!(!row.passed());
    }
}
