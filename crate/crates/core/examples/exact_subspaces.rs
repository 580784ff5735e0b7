//! Exact linear algebra over ℚ(i): echelon forms, kernels, canonical
//! subspaces, sums, intersections and quotients.

use secdef::linalg::{Matrix, Quotient, Scalar, Subspace};

fn main() -> secdef::Result<()> {
    let m = Matrix::from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 1]]);
    let e = m.rref();
    println!("rank {} pivots {:?}", m.rank(), e.pivots);
    println!("rref {:?}", e.matrix);

    let ker = Subspace::kernel(&m);
    println!("kernel dim {}: {:?}", ker.dim(), ker.basis_vectors());

    // canonical bases make equal subspaces compare equal
    let a = Subspace::span(4, &[vec![Scalar::one(), Scalar::i(), Scalar::zero(), Scalar::zero()]]);
    let b = Subspace::span(4, &[vec![Scalar::from_gaussian(0, 2), Scalar::from_int(-2), Scalar::zero(), Scalar::zero()]]);
    println!("span(1, i) == span(2i, -2): {}", a == b);

    let sum = ker.sum(&a)?;
    let meet = ker.intersection(&Subspace::row_space(&m))?;
    println!("dim(ker + a) = {}, dim(ker ∩ rows) = {}", sum.dim(), meet.dim());
    println!("annihilator of ker has dim {}", ker.annihilator().dim());

    let q = Quotient::of_ambient(&ker)?;
    let v = vec![Scalar::from_ratio(1, 3), Scalar::i(), Scalar::one(), Scalar::zero()];
    println!("ℚ(i)^4 / ker has dim {}; coords of v: {:?}", q.dim(), q.coords(&v));

    let sq = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
    println!("inverse {:?}", sq.inverse());
    Ok(())
}
