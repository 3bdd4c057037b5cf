//! The dual algebra and the function algebra of a groupoid.

use whopf::constructors::*;
use whopf::scalar::FieldSpec;

fn main() {
    let g = Groupoid::pair(2);
    let h = groupoid_algebra(&g, FieldSpec::Rational);
    let d = h.dualize();
    println!("labels of H:  {:?}", h.labels());
    println!("labels of H*: {:?}", d.labels());
    println!("H** = H: {}", d.dualize() == h);
    println!("k^G = (kG)*: {}", function_algebra(&g, FieldSpec::Rational) == d);

    let subs = d.counital_subalgebras();
    println!("H*: dim H_t = {}, dim H_s = {}, dim H_min = {}", subs.ht.dim(), subs.hs.dim(), subs.hmin.dim());
}
