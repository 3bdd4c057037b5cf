//! Tr(S²) and the semisimplicity criteria built on it.

use whopf::constructors::*;
use whopf::integrals::dual_pair;
use whopf::semisimplicity::*;
use whopf::zoo;

fn main() {
    for m in zoo::members().into_iter().chain(zoo::negative_controls().into_iter().take(1)) {
        let h = &m.algebra;
        let t = trace_s2(h, &dual_pair(h).unwrap()).unwrap();
        let c = connectedness(h);
        println!("{:<16} Tr(S²) = {:<5} formula = {:<5} connected {:<5} biconnected {}",
            m.name, t.direct, t.formula, c.connected, c.biconnected);
    }

    let r = semisimplicity_report(&matrix_wha(2)).unwrap();
    for imp in &r.implications {
        println!("{:<42} hypothesis {:<5} conclusion {}", imp.name, imp.hypothesis, imp.conclusion);
    }
    let cb = coinciding_bases_theorem_check(&zoo::group_s3()).unwrap();
    println!("coinciding bases on ℚ[S₃]: {}", cb.passed());
}
