//! 3×3 Hermitian matrices over a complexified division algebra, the cubic
//! determinant and the rank stratification.

use crate::error::{Error, Result};
use crate::linalg::Scalar;

use super::division::{AlgebraElement, AlgebraTag};

/// ```text
///     ⎡ r₁  ū₁  ū₂ ⎤
/// x = ⎢ u₁  r₂  ū₃ ⎥
///     ⎣ u₂  u₃  r₃ ⎦
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermMatrix {
    pub r: [Scalar; 3],
    pub u: [AlgebraElement; 3],
}

type Entries = [[AlgebraElement; 3]; 3];

impl HermMatrix {
    pub fn new(r: [Scalar; 3], u: [AlgebraElement; 3]) -> Result<Self> {
        let tag = u[0].tag();
        for e in &u[1..] {
            if e.tag() != tag {
                return Err(Error::TagMismatch(tag.name(), e.tag().name()));
            }
        }
        Ok(HermMatrix { r, u })
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        HermMatrix {
            r: [Scalar::zero(), Scalar::zero(), Scalar::zero()],
            u: [AlgebraElement::zero(tag), AlgebraElement::zero(tag), AlgebraElement::zero(tag)],
        }
    }

    pub fn identity(tag: AlgebraTag) -> Self {
        HermMatrix::diagonal(tag, [Scalar::one(), Scalar::one(), Scalar::one()])
    }

    pub fn diagonal(tag: AlgebraTag, r: [Scalar; 3]) -> Self {
        HermMatrix {
            r,
            u: [AlgebraElement::zero(tag), AlgebraElement::zero(tag), AlgebraElement::zero(tag)],
        }
    }

    pub fn tag(&self) -> AlgebraTag {
        self.u[0].tag()
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(Scalar::is_zero) && self.u.iter().all(AlgebraElement::is_zero)
    }

    /// Full matrix of algebra entries in the layout above.
    pub fn entries(&self) -> Entries {
        let t = self.tag();
        let s = |x: &Scalar| AlgebraElement::scalar(t, x.clone());
        let [u1, u2, u3] = &self.u;
        [
            [s(&self.r[0]), u1.conj(), u2.conj()],
            [u1.clone(), s(&self.r[1]), u3.conj()],
            [u2.clone(), u3.clone(), s(&self.r[2])],
        ]
    }

    /// Reads a Hermitian matrix back from its entries (lower triangle and
    /// diagonal scalar parts).
    fn from_entries(e: &Entries) -> HermMatrix {
        HermMatrix {
            r: [e[0][0].real_part().clone(), e[1][1].real_part().clone(), e[2][2].real_part().clone()],
            u: [e[1][0].clone(), e[2][0].clone(), e[2][1].clone()],
        }
    }

    pub fn trace(&self) -> Scalar {
        &(&self.r[0] + &self.r[1]) + &self.r[2]
    }

    /// Jordan product `x∘y = ½(xy + yx)`.
    pub fn jordan(&self, other: &HermMatrix) -> Result<HermMatrix> {
        let a = self.entries();
        let b = other.entries();
        let ab = mat_mul(&a, &b)?;
        let ba = mat_mul(&b, &a)?;
        let half = Scalar::from_ratio(1, 2);
        let mut sum = ab;
        for i in 0..3 {
            for j in 0..3 {
                sum[i][j] = sum[i][j].add(&ba[i][j])?.scale(&half);
            }
        }
        debug_assert!((0..3).all(|i| sum[i][i].is_scalar()));
        Ok(HermMatrix::from_entries(&sum))
    }

    /// `det(x) = ⅙(tr(x)³ + 2·tr(x³) − 3·tr(x)·tr(x²))` with Jordan powers.
    pub fn det(&self) -> Scalar {
        let x2 = self.jordan(self).expect("same tag");
        let x3 = self.jordan(&x2).expect("same tag");
        let t = self.trace();
        let t2 = x2.trace();
        let t3 = x3.trace();
        let six = Scalar::from_int(6);
        let v = &(&(&t * &t) * &t) + &(&Scalar::from_int(2) * &t3);
        let v = &v - &(&(&Scalar::from_int(3) * &t) * &t2);
        &v / &six
    }

    /// The 2×2-minor conditions: the three diagonal ones `rᵢrⱼ = N(u_k)`
    /// and the three mixed ones `r₁u₃ = u₂ū₁`, `r₂u₂ = u₃u₁`, `r₃u₁ = ū₃u₂`.
    pub fn minors_vanish(&self) -> bool {
        let [r1, r2, r3] = &self.r;
        let [u1, u2, u3] = &self.u;
        let diag = (r2 * r3) == u3.norm() && (r1 * r3) == u2.norm() && (r1 * r2) == u1.norm();
        if !diag {
            return false;
        }
        let m1 = u3.scale(r1) == u2.mul(&u1.conj()).expect("same tag");
        let m2 = u2.scale(r2) == u3.mul(u1).expect("same tag");
        let m3 = u1.scale(r3) == u3.conj().mul(u2).expect("same tag");
        m1 && m2 && m3
    }

    pub fn rank(&self) -> usize {
        if self.is_zero() {
            0
        } else if self.minors_vanish() {
            1
        } else if !self.det().is_zero() {
            3
        } else {
            2
        }
    }
}

fn mat_mul(a: &Entries, b: &Entries) -> Result<Entries> {
    let tag = a[0][0].tag();
    let mut out: Entries = std::array::from_fn(|_| std::array::from_fn(|_| AlgebraElement::zero(tag)));
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = AlgebraElement::zero(tag);
            for k in 0..3 {
                acc = acc.add(&a[i][k].mul(&b[k][j])?)?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

pub fn herm_det(x: &HermMatrix) -> Scalar {
    x.det()
}

pub fn herm_rank(x: &HermMatrix) -> usize {
    x.rank()
}

/// Rank-one completion `w·w̄ᵀ` of `w = (1, u₁, u₂)`: `r₁ = 1`, `r₂ = N(u₁)`,
/// `r₃ = N(u₂)`, `u₃ = u₂ū₁`. Exactly quadratic in `(u₁, u₂)`.
pub fn severi_chart(u1: &AlgebraElement, u2: &AlgebraElement) -> Result<HermMatrix> {
    if u1.tag() != u2.tag() {
        return Err(Error::TagMismatch(u1.tag().name(), u2.tag().name()));
    }
    let u3 = u2.mul(&u1.conj())?;
    HermMatrix::new([Scalar::one(), u1.norm(), u2.norm()], [u1.clone(), u2.clone(), u3])
}
