//! Dynamical twists of M_n⊗k[ℤ/n] and the resulting cosemisimple algebras.

use whopf::twisting::*;
use whopf::zoo;

fn main() {
    for n in [2, 3] {
        let d = zoo::cyclic_dynamical_data(n).unwrap();
        let chars = check_dynamical_data(&d).unwrap();
        let r = dynamical_cosemisimplicity_check(&d).unwrap();
        println!("ℤ/{}: {} characters, dim {}, bases ({}, {}), Tr(S²) = {}, biconnected {}, passed {}",
            n, chars.order(), r.dim, r.source_base_dim, r.target_base_dim,
            r.tr_s2_direct, r.biconnected, r.passed());
    }

    let a = zoo::cyclic_dynamical_data(2).unwrap();
    let b = zoo::sign_bicharacter_data();
    let twisted = |d: &DynamicalTwistData| {
        let dt = dynamical_theta(d).unwrap();
        twist(&dt.host, &dt.twist).unwrap()
    };
    println!("bases independent of J: {}", same_bases(&twisted(&a), &twisted(&b)));
}
