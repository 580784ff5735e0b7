//! Truncated multivariate power series, stored as [`Poly`] values whose
//! terms above a stated order are dropped after every operation.

use crate::error::{Error, Result};
use crate::linalg::Scalar;

use super::poly::{compose_many, Poly};

/// `1/p` to the given order. The constant term of `p` must be nonzero.
pub fn reciprocal(p: &Poly, order: u32) -> Result<Poly> {
    let c = p.constant_term();
    if c.is_zero() {
        return Err(Error::Invalid("series with zero constant term has no reciprocal".into()));
    }
    let n = p.nvars();
    let c_inv = c.inv();
    // 1/(c + h) = c⁻¹ Σ (−h/c)ᵏ; h has no constant term so k ≤ order suffices.
    let t = p.sub(&Poly::constant(n, c)).scale(&-&c_inv);
    let mut term = Poly::constant(n, Scalar::one());
    let mut acc = term.clone();
    for _ in 0..order {
        term = term.mul_trunc(&t, order);
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    Ok(acc.scale(&c_inv))
}

/// Composition `f ∘ g` truncated at `order`. Every `g` must have zero
/// constant term for the truncation to be exact.
pub fn compose(f: &[Poly], g: &[Poly], order: u32) -> Vec<Poly> {
    debug_assert!(g.iter().all(|s| s.constant_term().is_zero()));
    compose_many(f, g, Some(order)).into_iter().map(|p| p.truncate(order)).collect()
}

/// Inverse of a near-identity map `y = x + φ(x)` with `φ` of order ≥ 2,
/// as `ψ` with `ψ(y) + φ(ψ(y)) = y` modulo terms above `order`.
///
/// Iterates `ψ ← y − φ(ψ)`; each step fixes one more degree.
pub fn invert_near_identity(map: &[Poly], order: u32) -> Result<Vec<Poly>> {
    let n = map.len();
    let ids: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
    let phi: Vec<Poly> = map.iter().zip(&ids).map(|(m, x)| m.sub(x)).collect();
    if let Some(i) = phi.iter().position(|p| p.min_degree().is_some_and(|d| d < 2)) {
        return Err(Error::Invalid(format!("component {i} is not identity to first order")));
    }
    let mut psi = ids.clone();
    for _ in 1..order {
        let corr = compose(&phi, &psi, order);
        psi = ids.iter().zip(&corr).map(|(x, c)| x.sub(c)).collect();
    }
    Ok(psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn reciprocal_of_one_minus_x() {
        let p = Poly::constant(1, Scalar::one()).sub(&x(1, 0));
        let r = reciprocal(&p, 4).unwrap();
        for k in 0..=4 {
            assert!(r.coeff(&[k]).is_one());
        }
        assert_eq!(r.degree(), Some(4));
        assert_eq!(r.mul_trunc(&p, 4), Poly::constant(1, Scalar::one()));
        assert!(reciprocal(&x(1, 0), 3).is_err());
    }

    #[test]
    fn inverts_near_identity_maps() {
        // y₁ = x₁ + x₂², y₂ = x₂ + x₁x₂ + x₁³
        let m = vec![
            x(2, 0).add(&x(2, 1).mul(&x(2, 1))),
            x(2, 1).add(&x(2, 0).mul(&x(2, 1))).add(&x(2, 0).mul(&x(2, 0)).mul(&x(2, 0))),
        ];
        for order in [3, 4] {
            let psi = invert_near_identity(&m, order).unwrap();
            let back = compose(&m, &psi, order);
            assert_eq!(back, vec![x(2, 0), x(2, 1)]);
            let fwd = compose(&psi, &m, order);
            assert_eq!(fwd, vec![x(2, 0), x(2, 1)]);
        }
    }

    #[test]
    fn rejects_maps_without_identity_linear_part() {
        let m = vec![x(1, 0).scale(&Scalar::from_int(2))];
        assert!(invert_near_identity(&m, 3).is_err());
    }
}
