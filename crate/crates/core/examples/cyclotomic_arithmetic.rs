//! Exact arithmetic in ℚ and ℚ(ζ₃).

use whopf::scalar::{FieldSpec, Scalar};

fn main() {
    let k: FieldSpec = "Q(zeta_3)".parse().unwrap();
    let z = k.generator();
    println!("field {} of degree {}", k, k.degree());
    println!("ζ² = {}", z.pow(2));
    println!("ζ⁻¹ = {}", z.inv().unwrap());
    println!("(1 + ζ)(1 + ζ²) = {}", (Scalar::one() + &z) * (Scalar::one() + z.pow(2)));

    let x = Scalar::parse("1/3-1/3*z", k).unwrap();
    println!("x = {}, x⁻¹ = {}", x, x.inv().unwrap());
    println!("primitive 6th root in ℚ(ζ₃): {}", k.root_of_unity(6, 1).unwrap());
}
