//! Exact kernels, solutions and subspace intersections.

use whopf::linalg::{LinearSystem, Matrix, Subspace};
use whopf::scalar::Scalar;

fn main() {
    let m = Matrix::from_i64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
    println!("rank {} det {}", m.rank(), m.determinant());
    let k = m.kernel();
    println!("kernel basis {:?}", k.basis());

    let mut sys = LinearSystem::new(2);
    sys.add_equation(&[Scalar::int(3), Scalar::int(1)], Scalar::int(1));
    sys.add_equation(&[Scalar::int(1), Scalar::int(-1)], Scalar::ratio(1, 2));
    println!("solution {:?}", sys.solve().unwrap().particular);

    let e = |v: &[i64]| v.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>();
    let a = Subspace::from_vectors(3, [e(&[1, 0, 0]), e(&[0, 1, 0])]);
    let b = Subspace::from_vectors(3, [e(&[1, 1, 1]), e(&[0, 1, 0])]);
    println!("dim A∩B = {}, dim A+B = {}", a.intersect(&b).dim(), a.sum(&b).dim());
}
