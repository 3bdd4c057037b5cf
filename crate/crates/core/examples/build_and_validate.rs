//! Build algebras from the constructors and run the axiom checker.

use whopf::constructors::*;
use whopf::scalar::FieldSpec;
use whopf::validate::validate;
use whopf::zoo;

fn main() {
    let algebras = [
        ("ℚ[S₃]", group_algebra(&FiniteGroup::symmetric(3), FieldSpec::Rational)),
        ("pair groupoid on 3 objects", matrix_wha(3)),
        ("H_min(M₂, ℚ1, diag(3,−1))", zoo::min_m2_g()),
        ("Sweedler", sweedler()),
    ];
    for (name, h) in &algebras {
        let r = validate(h);
        println!("{:<28} dim {:>2}  {} checks, passed: {}", name, h.dim(), r.checks.len(), r.passed());
    }

    let broken = zoo::corrupt_counit(&matrix_wha(2));
    for f in validate(&broken).failures() {
        println!("corrupted counit fails {} at {:?}", f.axiom, f.witness);
    }
}
