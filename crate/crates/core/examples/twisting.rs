//! Twisting by Θ and deforming by q ∈ H_t.

use whopf::constructors::*;
use whopf::twisting::*;

fn main() {
    let h = matrix_wha(2);
    let t = Twist::trivial(&h);
    check_twist(&h, &t).unwrap();
    let full = twist_full(&h, &t).unwrap();
    println!("trivial twist leaves H unchanged: {}", full.algebra == h);

    let mut bad = t.clone();
    bad.theta[0] = &bad.theta[0] + &whopf::scalar::Scalar::one();
    println!("perturbed Θ: {}", check_twist(&h, &bad).unwrap_err());

    println!("deform by 1: {}", deform_q(&h, h.unit()).unwrap() == h);
}
