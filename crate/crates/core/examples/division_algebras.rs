//! The four complexified normed division algebras and the Hermitian 3×3
//! Jordan algebras built from them.

use secdef::algebra::{herm_rank, severi_chart, AlgebraElement, AlgebraTag, HermMatrix};
use secdef::linalg::{random_vector, Scalar, Stream};

fn main() -> secdef::Result<()> {
    let mut st = Stream::new(3);
    for tag in AlgebraTag::ALL {
        let x = AlgebraElement::new(tag, random_vector(tag.dim(), 5, &mut st))?;
        let y = AlgebraElement::new(tag, random_vector(tag.dim(), 5, &mut st))?;
        let xy = x.mul(&y)?;
        // N(xy) = N(x)·N(y) in every composition algebra
        let multiplicative = xy.norm() == &x.norm() * &y.norm();
        // x·x̄ = N(x)
        let conj = x.mul(&x.conj())? == AlgebraElement::scalar(tag, x.norm());
        let assoc = {
            let z = AlgebraElement::new(tag, random_vector(tag.dim(), 5, &mut st))?;
            xy.mul(&z)? == x.mul(&y.mul(&z)?)?
        };
        println!("{tag}: dim {}, N multiplicative {multiplicative}, x·x̄ = N(x) {conj}, associative {assoc}", tag.dim());
    }

    // points of the Severi variety are rank-one Hermitian matrices
    let tag = AlgebraTag::O;
    let u1 = AlgebraElement::new(tag, random_vector(8, 5, &mut st))?;
    let u2 = AlgebraElement::new(tag, random_vector(8, 5, &mut st))?;
    let p = severi_chart(&u1, &u2)?;
    println!("severi_chart over O: rank {}, det {}", herm_rank(&p), p.det());
    let id = HermMatrix::identity(tag);
    println!("identity: trace {}, det {}", id.trace(), id.det());
    let diag = HermMatrix::diagonal(tag, [Scalar::one(), Scalar::from_int(2), Scalar::zero()]);
    println!("diag(1,2,0): rank {}, I∘X trace {}", diag.rank(), id.jordan(&diag)?.trace());
    Ok(())
}
