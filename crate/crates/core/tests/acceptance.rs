//! Acceptance criteria 1-10, one PASS/FAIL line each, exact arithmetic.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use common::Naive;
use whopf::constructors::*;
use whopf::grouplikes::*;
use whopf::integrals::*;
use whopf::scalar::{FieldSpec, Scalar};
use whopf::semisimplicity::*;
use whopf::twisting::*;
use whopf::validate::validate;
use whopf::wha::WeakHopfAlgebra;
use whopf::zoo;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(ctx: &str) -> impl FnOnce(E) -> String + '_ {
    move |e| format!("{}: {}", ctx, e)
}

fn criterion_1() -> Check {
    for m in zoo::members() {
        ensure(validate(&m.algebra).passed(), || format!("{}: validator", m.name))?;
        Naive::new(&m.algebra)
            .axioms()
            .map_err(|e| format!("{}: oracle: {}", m.name, e))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    for m in zoo::members() {
        let h = &m.algebra;
        let d = h.dualize();
        ensure(d.dualize() == *h, || format!("{}: dualize is not an involution", m.name))?;
        // transposed structure constants
        let (a, b) = (Naive::new(h), Naive::new(&d));
        let n = a.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    ensure(b.mult[i][j][k] == a.comult[k][i][j], || format!("{}: dual product", m.name))?;
                    ensure(b.comult[k][i][j] == a.mult[i][j][k], || format!("{}: dual coproduct", m.name))?;
                }
            }
        }
        ensure(b.unit == a.counit && b.counit == a.unit, || format!("{}: dual unit/counit", m.name))?;
        let (sa, sb) = (a.s.unwrap(), b.s.unwrap());
        for r in 0..n {
            for c in 0..n {
                ensure(sb[c][r] == sa[r][c], || format!("{}: dual antipode", m.name))?;
            }
        }
    }
    let z2 = Groupoid::from_group(&FiniteGroup::cyclic(2));
    let groupoids = [
        Groupoid::pair(2),
        Groupoid::pair(3),
        Groupoid::disjoint_union(&z2, &z2),
        Groupoid::from_group(&FiniteGroup::symmetric(3)),
    ];
    for g in &groupoids {
        let f = function_algebra(g, FieldSpec::Rational);
        let d = groupoid_algebra(g, FieldSpec::Rational).dualize();
        ensure(f == d, || format!("function algebra differs from the dual on {:?}", g.labels()))?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    for m in zoo::members() {
        let h = &m.algebra;
        let name = m.name;
        let ht = h.target_base().dim();
        ensure(integral_space(h, Side::Left).dim() == ht, || format!("{}: dim ∫^l ≠ dim H_t", name))?;
        let pair = dual_pair(h).map_err(err(name))?;
        let o = Naive::new(h);
        let n = o.n;
        for x in 0..n {
            let ex = o.e(x);
            ensure(o.mul(&ex, &pair.ell) == o.mul(&o.eps_t(&ex), &pair.ell), || {
                format!("{}: ℓ is not a left integral", name)
            })?;
        }
        let d = o.comul(&pair.ell);
        let mut lact = common::V::new();
        for a in 0..n {
            let mut c = Scalar::zero();
            for b in 0..n {
                c = c + &d[a][b] * &pair.lambda[b];
            }
            lact.push(c);
        }
        ensure(lact == o.unit, || format!("{}: λ⇀ℓ ≠ 1", name))?;
        for g in 0..n {
            let v = o.mul(&o.e(g), &pair.ell);
            let mut c = Scalar::zero();
            for k in 0..n {
                c = c + &pair.lambda[k] * &v[k];
            }
            ensure(c == o.counit[g], || format!("{}: ℓ⇀λ ≠ ε", name))?;
        }
        let dual = Naive::new(&h.dualize());
        for x in 0..n {
            let ex = dual.e(x);
            ensure(dual.mul(&ex, &pair.lambda) == dual.mul(&dual.eps_t(&ex), &pair.lambda), || {
                format!("{}: λ is not a left integral of H*", name)
            })?;
        }
        let inv = invariance_check(h, &pair.lambda, None).map_err(err(name))?;
        ensure(inv.passed(), || format!("{}: invariance residual", name))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    for m in zoo::members() {
        let h = &m.algebra;
        let name = m.name;
        let pair = dual_pair(h).map_err(err(name))?;
        check_antipode_from_integrals(h, &pair).map_err(err(name))?;
        // ⟨(ℓ↼e^i)⇀λ, e_g⟩ = λ(g·(ℓ↼e^i)) must be the e_i coefficient of S(e_g)
        let o = Naive::new(h);
        let n = o.n;
        let d = o.comul(&pair.ell);
        for i in 0..n {
            let x: common::V = (0..n).map(|b| d[i][b].clone()).collect();
            for g in 0..n {
                let v = o.mul(&o.e(g), &x);
                let mut c = Scalar::zero();
                for k in 0..n {
                    c = c + &pair.lambda[k] * &v[k];
                }
                ensure(c == o.s(&o.e(g))[i], || format!("{}: integral antipode at ({}, {})", name, i, g))?;
            }
        }
        let reg = regularize(h).map_err(err(name))?.algebra;
        let rp = dual_pair(&reg).map_err(err(name))?;
        let dp = distinguished_pair(&reg, &rp).map_err(err(name))?;
        for c in lambda_ell_relations(&reg, &dp).map_err(err(name))? {
            ensure(c.passed, || format!("{}: {} has a residual", name, c.axiom))?;
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    let mut cross_checked = 0;
    for m in zoo::members() {
        let name = m.name;
        let reg = regularize(&m.algebra).map_err(err(name))?.algebra;
        let pair = dual_pair(&reg).map_err(err(name))?;
        let dp = distinguished_pair(&reg, &pair).map_err(err(name))?;
        ensure(radford_check(&reg, &dp).map_err(err(name))?.passed, || format!("{}: S⁴ residual", name))?;
        if find_two_sided_nondegenerate_integral(&reg).map_err(err(name))?.is_none() {
            continue;
        }
        let s = reg.antipode().unwrap();
        let s4 = s.mul(s).mul(&s.mul(s));
        let (u, y) = match is_trivial_automorphism(&reg, &s4).map_err(err(name))? {
            Triviality::Yes { u, y } => (u, y),
            other => return Err(format!("{}: S⁴ is not trivial: {:?}", name, other)),
        };
        let o = Naive::new(&reg);
        ensure(o.is_grouplike(&u), || format!("{}: conjugator is not group-like", name))?;
        ensure(o.mul(&u, &y) == o.s(&y), || format!("{}: u ≠ S(y)y⁻¹", name))?;
        for i in 0..o.n {
            let e = o.e(i);
            let s4e = o.s(&o.s(&o.s(&o.s(&e))));
            ensure(o.mul(&s4e, &u) == o.mul(&u, &e), || format!("{}: S⁴ ≠ Ad_u at {}", name, i))?;
        }
        cross_checked += 1;
    }
    ensure(cross_checked > 0, || "no member has a two-sided non-degenerate integral".into())
}

fn dyn_twisted(d: &DynamicalTwistData) -> Result<WeakHopfAlgebra, String> {
    let dt = dynamical_theta(d).map_err(err("dynamical twist"))?;
    twist(&dt.host, &dt.twist).map_err(err("dynamical twist"))
}

fn criterion_6() -> Check {
    for m in zoo::members() {
        let h = &m.algebra;
        let pair = dual_pair(h).map_err(err(m.name))?;
        let t = trace_s2(h, &pair).map_err(err(m.name))?;
        let oracle = Naive::new(h).trace_s2();
        ensure(t.direct == oracle && t.formula == oracle, || {
            format!("{}: direct {} formula {} oracle {}", m.name, t.direct, t.formula, oracle)
        })?;
    }
    let expect = |h: &WeakHopfAlgebra, v: i64, what: &str| -> Check {
        let pair = dual_pair(h).map_err(err(what))?;
        let t = trace_s2(h, &pair).map_err(err(what))?;
        let oracle = Naive::new(h).trace_s2();
        ensure(t.formula == Scalar::int(v) && oracle == Scalar::int(v), || {
            format!("{}: Tr(S²) = {} (oracle {}), expected {}", what, t.formula, oracle, v)
        })
    };
    expect(&zoo::group_z2(), 2, "ℚ[ℤ/2]")?;
    expect(&matrix_wha(2), 4, "pair groupoid")?;
    let h = dyn_twisted(&zoo::cyclic_dynamical_data(2).map_err(err("data"))?)?;
    expect(&h, 8, "dynamical twist")
}

fn criterion_7() -> Check {
    let mut cases: Vec<(String, WeakHopfAlgebra)> =
        zoo::members().into_iter().map(|m| (m.name.to_string(), m.algebra)).collect();
    cases.push(("sweedler".into(), sweedler()));
    let mut non_semisimple = 0;
    for (name, h) in &cases {
        let oracle = Naive::new(h).trace_form_rank() == h.dim();
        let maschke = is_semisimple(h);
        ensure(maschke == oracle && trace_form_semisimple(h) == oracle, || {
            format!("{}: Maschke {} trace form {}", name, maschke, oracle)
        })?;
        if !oracle {
            non_semisimple += 1;
        }
    }
    ensure(non_semisimple >= 1, || "no non-semisimple control".into())?;
    let mut non_vacuous = 0;
    for m in zoo::members() {
        let r = semisimplicity_report(&m.algebra).map_err(err(m.name))?;
        for imp in &r.implications {
            ensure(imp.holds(), || format!("{}: {} fails", m.name, imp.name))?;
            if imp.hypothesis {
                non_vacuous += 1;
            }
        }
        ensure(r.passed(), || format!("{}: trace report", m.name))?;
        match coinciding_bases_theorem_check(&m.algebra) {
            Ok(c) => ensure(c.passed(), || format!("{}: coinciding bases", m.name))?,
            Err(whopf::error::Error::PreconditionUnmet(_)) => {}
            Err(e) => return Err(format!("{}: {}", m.name, e)),
        }
    }
    ensure(non_vacuous > 0, || "every implication was vacuous".into())
}

fn criterion_8() -> Check {
    let d = zoo::cyclic_dynamical_data(2).map_err(err("data"))?;
    let r = dynamical_cosemisimplicity_check(&d).map_err(err("report"))?;
    ensure(r.passed(), || format!("report fails: {:?}", r))?;
    ensure(r.dim == 8 && r.biconnected, || "not a biconnected dim-8 algebra".into())?;
    ensure(r.source_base_dim == 2 && r.target_base_dim == 2, || "bases are not of dim |A|".into())?;
    let h = dyn_twisted(&d)?;
    let o = Naive::new(&h);
    o.axioms().map_err(err("oracle"))?;
    ensure(o.trace_s2() == Scalar::int(8), || "oracle Tr(S_Θ²) ≠ 8".into())?;
    // dual semisimplicity, by Maschke in the library and by the trace form here
    ensure(r.dual_semisimple_by_maschke && r.dual_semisimple_by_trace, || "dual routes".into())?;
    let dual = Naive::new(&h.dualize());
    ensure(dual.trace_form_rank() == 8, || "oracle: dual trace form degenerate".into())?;
    let other = dyn_twisted(&zoo::sign_bicharacter_data())?;
    ensure(same_bases(&h, &other), || "bases depend on J".into())
}

fn criterion_9() -> Check {
    let h = matrix_wha(2);
    let o = Naive::new(&h);
    let swap = o.add(&o.e(h.index_of("m12").unwrap()), &o.e(h.index_of("m21").unwrap()));
    ensure(o.is_grouplike(&swap) && is_grouplike(&h, &swap), || "swap is not group-like".into())?;
    ensure(is_trivial_grouplike(&h, &swap).map_err(err("swap"))?.is_none(), || "swap is trivial".into())?;
    let one = h.unit().clone();
    for (g, k) in [(&swap, &swap), (&one, &swap), (&swap, &one)] {
        let dim = check_shift(&h, g, k).map_err(err("shift"))?;
        ensure(dim > 0, || "empty L_g".into())?;
    }

    let mut tested = 0;
    for (name, mh) in [
        ("min_q_q", zoo::min_q_q()),
        ("min_m2", zoo::min_m2()),
        ("min_m2_g", zoo::min_m2_g()),
    ] {
        for h in [mh.clone(), regularize(&mh).map_err(err(name))?.algebra] {
            let o = Naive::new(&h);
            let mut candidates = vec![h.unit().clone()];
            if let Ok(pair) = dual_pair(&h) {
                if let Ok(dp) = distinguished_pair(&h, &pair) {
                    candidates.push(dp.a.clone());
                    candidates.push(h.invert_element(&dp.a).map_err(err(name))?);
                    let d = h.dualize();
                    ensure(is_trivial_grouplike(&d, &dp.alpha).map_err(err(name))?.is_some(), || {
                        format!("{}: α is not trivial", name)
                    })?;
                }
            }
            // S(y)y⁻¹ for invertible y ∈ H_s; group-like only when S²(y) = y
            for y in h.source_base().basis() {
                let shifted = o.add(y, &h.unit().clone());
                if let Ok(inv) = h.invert_element(&shifted) {
                    candidates.push(o.mul(&o.s(&shifted), &inv));
                }
            }
            for g in candidates.iter().filter(|g| o.is_grouplike(g)) {
                let y = is_trivial_grouplike(&h, g)
                    .map_err(err(name))?
                    .ok_or_else(|| format!("{}: non-trivial group-like {:?}", name, g))?;
                ensure(o.mul(g, &y) == o.s(&y), || format!("{}: g ≠ S(y)y⁻¹", name))?;
                tested += 1;
            }
        }
    }
    ensure(tested > 6, || "too few group-likes tested".into())?;

    for row in zoo::run_all(None).rows {
        ensure(
            row.self_intertwiners == row.z_cap_hs && row.z_cap_hs == row.dual_ht_cap_hs,
            || format!("{}: {} / {} / {}", row.name, row.self_intertwiners, row.z_cap_hs, row.dual_ht_cap_hs),
        )?;
    }
    Ok(())
}

fn criterion_10() -> Check {
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_whopf"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("{:?} exited with {:?}", args, out.status.code())
        })?;
        Ok(out.stdout)
    };
    for args in [&["zoo", "--run-all"][..], &["zoo", "--run-all", "--json"][..]] {
        let a = run(args)?;
        let b = run(args)?;
        ensure(!a.is_empty() && a == b, || format!("{:?}: outputs differ", args))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("axiom suite on every zoo member", criterion_1),
        ("duality is an involution; functions = dual of groupoid", criterion_2),
        ("integrals, dual pair and invariance", criterion_3),
        ("antipode from integrals and the four λ-ℓ relations", criterion_4),
        ("S⁴ identity and trivial S⁴", criterion_5),
        ("Tr(S²) formula against the direct trace", criterion_6),
        ("semisimplicity decisions and sufficient criteria", criterion_7),
        ("dynamical twist of ℚ[ℤ/2]", criterion_8),
        ("group-likes, intertwiners and shifted integrals", criterion_9),
        ("deterministic zoo report", criterion_10),
    ];
    let mut failed = 0;
    for (i, (label, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {}", msg))
        });
        match result {
            Ok(()) => println!("PASS {:>2} {}", i + 1, label),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {}: {}", i + 1, label, e);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
