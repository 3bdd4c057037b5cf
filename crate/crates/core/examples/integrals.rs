//! Integral spaces, a non-degenerate dual pair and the antipode it determines.

use whopf::constructors::*;
use whopf::integrals::*;
use whopf::semisimplicity::element_label;

fn main() {
    let h = matrix_wha(2);
    println!("dim ∫^l = {}, dim ∫^r = {}, dim H_t = {}",
        integral_space(&h, Side::Left).dim(),
        integral_space(&h, Side::Right).dim(),
        h.target_base().dim());
    let pair = dual_pair(&h).unwrap();
    println!("ℓ = {}", element_label(&h, &pair.ell));
    println!("λ = {}", element_label(&h.dualize(), &pair.lambda));
    println!("invariance: {}", invariance_check(&h, &pair.lambda, None).unwrap().passed());
    println!("antipode from integrals matches: {}", check_antipode_from_integrals(&h, &pair).is_ok());
    println!("semisimple (Maschke): {}", is_semisimple(&h));

    match find_nondegenerate_integral(&idempotent_monoid_bialgebra()) {
        Ok(_) => println!("monoid: unexpectedly Frobenius"),
        Err(e) => println!("monoid: {}", e),
    }
}
