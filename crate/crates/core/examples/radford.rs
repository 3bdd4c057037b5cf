//! Regularize a non-regular minimal algebra and verify the S⁴ identity.

use whopf::grouplikes::*;
use whopf::integrals::dual_pair;
use whopf::semisimplicity::element_label;
use whopf::twisting::{deform_q, regularize};
use whopf::zoo;

fn main() {
    let h = zoo::min_m2_g();
    println!("regular before: {}", h.is_regular().unwrap());
    let reg = regularize(&h).unwrap();
    println!("q = {}", element_label(&h, &reg.q));
    println!("regular after: {}", reg.algebra.is_regular().unwrap());

    let dp = distinguished_pair(&reg.algebra, &dual_pair(&reg.algebra).unwrap()).unwrap();
    println!("a = {}", element_label(&reg.algebra, &dp.a));
    println!("S⁴ identity: {}", radford_check(&reg.algebra, &dp).unwrap().passed);
    for c in lambda_ell_relations(&reg.algebra, &dp).unwrap() {
        println!("  {}: {}", c.axiom, c.passed);
    }

    let back = deform_q(&reg.algebra, &reg.algebra.invert_element(&reg.q).unwrap()).unwrap();
    println!("deforming back recovers H: {}", back == h);
}
