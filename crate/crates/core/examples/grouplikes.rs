//! Group-like elements, triviality and shifted integral spaces.

use whopf::constructors::*;
use whopf::grouplikes::*;
use whopf::scalar::Scalar;

fn main() {
    let h = matrix_wha(2);
    let mut swap = h.zero();
    swap[h.index_of("m12").unwrap()] = Scalar::one();
    swap[h.index_of("m21").unwrap()] = Scalar::one();
    println!("swap group-like: {}", is_grouplike(&h, &swap));
    println!("swap trivial: {}", is_trivial_grouplike(&h, &swap).unwrap().is_some());
    println!("dim L_swap = dim L_1 = {}", check_shift(&h, &swap, &swap).unwrap());

    let z = h.counital_subalgebras().z_cap_hs.dim();
    println!("self-intertwiners {} = dim Z(H)∩H_s {}", self_intertwiners(&h, h.counit()).unwrap().dim(), z);

    let s = h.antipode().unwrap();
    let s4 = s.mul(s).mul(&s.mul(s));
    println!("S⁴ trivial: {:?}", matches!(is_trivial_automorphism(&h, &s4).unwrap(), Triviality::Yes { .. }));
}
