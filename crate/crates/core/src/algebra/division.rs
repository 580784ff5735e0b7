//! Complexified real division algebras ℝ, ℂ, ℍ, 𝕆 (each tensored with ℂ).
//!
//! Elements are coefficient vectors over the basis `1, J₁, …, J_{d−1}` with
//! coefficients in ℚ(i). The imaginary unit of the coefficient field is
//! unrelated to the `J`s, so e.g. the complexified ℂ is ℂ⊕ℂ, not ℂ.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraTag {
    R,
    C,
    H,
    O,
}

impl AlgebraTag {
    pub const ALL: [AlgebraTag; 4] = [AlgebraTag::R, AlgebraTag::C, AlgebraTag::H, AlgebraTag::O];

    pub fn dim(self) -> usize {
        match self {
            AlgebraTag::R => 1,
            AlgebraTag::C => 2,
            AlgebraTag::H => 4,
            AlgebraTag::O => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraTag::R => "R",
            AlgebraTag::C => "C",
            AlgebraTag::H => "H",
            AlgebraTag::O => "O",
        }
    }

    pub fn parse(s: &str) -> Result<AlgebraTag> {
        match s.trim().to_ascii_uppercase().as_str() {
            "R" => Ok(AlgebraTag::R),
            "C" => Ok(AlgebraTag::C),
            "H" => Ok(AlgebraTag::H),
            "O" => Ok(AlgebraTag::O),
            other => Err(Error::Invalid(format!("unknown algebra tag {other:?}"))),
        }
    }

    /// Product of basis elements: `e_i · e_j = sign · e_k`.
    pub fn basis_product(self, i: usize, j: usize) -> (i8, usize) {
        let d = self.dim();
        assert!(i < d && j < d, "basis index out of range");
        let lines: &[(usize, usize, usize)] = match self {
            AlgebraTag::R | AlgebraTag::C => &[],
            AlgebraTag::H => &[(1, 2, 3)],
            AlgebraTag::O => octonion_lines(),
        };
        let (s, k) = raw_product(lines, i, j);
        (s as i8, k)
    }

    /// Nonzero structure constants `(i, j, sign, k)` with `e_i e_j = sign e_k`.
    pub fn structure_constants(self) -> Vec<(usize, usize, i8, usize)> {
        let d = self.dim();
        let mut out = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let (s, k) = self.basis_product(i, j);
                out.push((i, j, s, k));
            }
        }
        out
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Oriented lines pinned by the required products
/// `J₁J₂ = J₃`, `J₁J₇ = J₄`, `J₄J₂ = −J₆`.
const FIXED_LINES: [(usize, usize, usize); 3] = [(1, 2, 3), (1, 7, 4), (2, 4, 6)];
/// Remaining lines of the Fano plane, in ascending order; each may be
/// reversed.
const FREE_LINES: [(usize, usize, usize); 4] = [(1, 5, 6), (2, 5, 7), (3, 4, 5), (3, 6, 7)];

fn octonion_lines() -> &'static [(usize, usize, usize)] {
    static LINES: OnceLock<Vec<(usize, usize, usize)>> = OnceLock::new();
    LINES.get_or_init(|| {
        (0u32..16)
            .map(orientation)
            .find(|lines| table_is_composition(lines))
            .expect("some orientation of the Fano plane yields the octonions")
    })
}

/// The candidate whose free-line reversal flags read as the binary digits
/// of `bits` (first free line = most significant), so iterating `bits`
/// upwards enumerates candidates lexicographically.
fn orientation(bits: u32) -> Vec<(usize, usize, usize)> {
    let mut lines = FIXED_LINES.to_vec();
    for (k, &(a, b, c)) in FREE_LINES.iter().enumerate() {
        let reversed = bits >> (3 - k) & 1 == 1;
        lines.push(if reversed { (a, c, b) } else { (a, b, c) });
    }
    lines
}

fn raw_product(lines: &[(usize, usize, usize)], i: usize, j: usize) -> (i64, usize) {
    if i == 0 {
        return (1, j);
    }
    if j == 0 {
        return (1, i);
    }
    if i == j {
        return (-1, 0);
    }
    for &(a, b, c) in lines {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            if (i, j) == (x, y) {
                return (1, z);
            }
            if (i, j) == (y, x) {
                return (-1, z);
            }
        }
    }
    unreachable!("incomplete multiplication table: {i} {j}")
}

type Vec8 = [i64; 8];

fn mul8(lines: &[(usize, usize, usize)], x: &Vec8, y: &Vec8) -> Vec8 {
    let mut out = [0; 8];
    for i in 0..8 {
        for j in 0..8 {
            if x[i] != 0 && y[j] != 0 {
                let (s, k) = raw_product(lines, i, j);
                out[k] += s * x[i] * y[j];
            }
        }
    }
    out
}

fn e8(i: usize) -> Vec8 {
    let mut v = [0; 8];
    v[i] = 1;
    v
}

fn add8(a: &Vec8, b: &Vec8) -> Vec8 {
    std::array::from_fn(|k| a[k] + b[k])
}

fn inner8(a: &Vec8, b: &Vec8) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exhaustive check on basis elements of the polarized alternative laws
/// (the associator is alternating) and of the polarized norm
/// multiplicativity `⟨ab, cd⟩ + ⟨ad, cb⟩ = 2⟨a, c⟩⟨b, d⟩`. By multilinearity
/// these imply the identities for all elements.
fn table_is_composition(lines: &[(usize, usize, usize)]) -> bool {
    let assoc = |a: usize, b: usize, c: usize| -> Vec8 {
        let l = mul8(lines, &mul8(lines, &e8(a), &e8(b)), &e8(c));
        let r = mul8(lines, &e8(a), &mul8(lines, &e8(b), &e8(c)));
        std::array::from_fn(|k| l[k] - r[k])
    };
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                let abc = assoc(a, b, c);
                if add8(&abc, &assoc(b, a, c)) != [0; 8] || add8(&abc, &assoc(a, c, b)) != [0; 8] {
                    return false;
                }
            }
        }
    }
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                for d in 0..8 {
                    let lhs = inner8(&mul8(lines, &e8(a), &e8(b)), &mul8(lines, &e8(c), &e8(d)))
                        + inner8(&mul8(lines, &e8(a), &e8(d)), &mul8(lines, &e8(c), &e8(b)));
                    let rhs = 2 * i64::from(a == c) * i64::from(b == d);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AlgebraElement {
    tag: AlgebraTag,
    coeffs: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn new(tag: AlgebraTag, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != tag.dim() {
            return Err(Error::Invalid(format!(
                "{} coefficients given for algebra {tag} of dimension {}",
                coeffs.len(),
                tag.dim()
            )));
        }
        Ok(AlgebraElement { tag, coeffs })
    }

    pub fn from_ints(tag: AlgebraTag, coeffs: &[i64]) -> Result<Self> {
        AlgebraElement::new(tag, coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        AlgebraElement { tag, coeffs: vec![Scalar::zero(); tag.dim()] }
    }

    pub fn scalar(tag: AlgebraTag, s: Scalar) -> Self {
        let mut e = AlgebraElement::zero(tag);
        e.coeffs[0] = s;
        e
    }

    pub fn one(tag: AlgebraTag) -> Self {
        AlgebraElement::scalar(tag, Scalar::one())
    }

    /// Basis element `J_i` (`J_0 = 1`).
    pub fn unit(tag: AlgebraTag, i: usize) -> Self {
        let mut e = AlgebraElement::zero(tag);
        e.coeffs[i] = Scalar::one();
        e
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// The `1`-component.
    pub fn real_part(&self) -> &Scalar {
        &self.coeffs[0]
    }

    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Scalar::is_zero)
    }

    fn check(&self, other: &AlgebraElement) -> Result<()> {
        if self.tag != other.tag {
            return Err(Error::TagMismatch(self.tag.name(), other.tag.name()));
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        Ok(AlgebraElement {
            tag: self.tag,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        Ok(AlgebraElement {
            tag: self.tag,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        AlgebraElement { tag: self.tag, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        let d = self.tag.dim();
        let mut out = vec![Scalar::zero(); d];
        for i in 0..d {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let (s, k) = self.tag.basis_product(i, j);
                let p = &self.coeffs[i] * &other.coeffs[j];
                if s > 0 {
                    out[k] += &p;
                } else {
                    out[k] -= &p;
                }
            }
        }
        Ok(AlgebraElement { tag: self.tag, coeffs: out })
    }

    /// Algebra conjugation: fixes `1`, negates every `J`.
    pub fn conj(&self) -> AlgebraElement {
        let mut coeffs = self.coeffs.clone();
        for c in coeffs.iter_mut().skip(1) {
            *c = -&*c;
        }
        AlgebraElement { tag: self.tag, coeffs }
    }

    /// `x·conj(x)`, which is a multiple of `1`; returned as that scalar.
    pub fn norm(&self) -> Scalar {
        self.coeffs.iter().map(|c| c * c).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{random_vector, Stream};

    fn random_element(tag: AlgebraTag, s: &mut Stream) -> AlgebraElement {
        AlgebraElement::new(tag, random_vector(tag.dim(), 6, s)).unwrap()
    }

    #[test]
    fn quoted_octonion_products() {
        let j = |i| AlgebraElement::unit(AlgebraTag::O, i);
        assert_eq!(j(1).mul(&j(2)).unwrap(), j(3));
        assert_eq!(j(2).mul(&j(1)).unwrap(), j(3).scale(&Scalar::from_int(-1)));
        assert_eq!(j(2).mul(&j(3)).unwrap(), j(1));
        assert_eq!(j(1).mul(&j(7)).unwrap(), j(4));
        assert_eq!(j(4).mul(&j(2)).unwrap(), j(6).scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn octonion_table_is_lexicographically_first_valid() {
        let valid: Vec<u32> = (0..16).filter(|&b| table_is_composition(&orientation(b))).collect();
        assert_eq!(valid.first(), Some(&1));
        assert_eq!(octonion_lines(), orientation(1).as_slice());
        assert_eq!(octonion_lines()[6], (3, 7, 6));
    }

    #[test]
    fn quaternion_standard() {
        let j = |i| AlgebraElement::unit(AlgebraTag::H, i);
        assert_eq!(j(1).mul(&j(2)).unwrap(), j(3));
        assert_eq!(j(3).mul(&j(1)).unwrap(), j(2));
    }

    #[test]
    fn unit_law_and_conjugation() {
        let mut s = Stream::new(2);
        for tag in AlgebraTag::ALL {
            let x = random_element(tag, &mut s);
            assert_eq!(AlgebraElement::one(tag).mul(&x).unwrap(), x);
            assert_eq!(x.mul(&AlgebraElement::one(tag)).unwrap(), x);
            assert_eq!(x.conj().conj(), x);
            assert_eq!(AlgebraElement::one(tag).conj(), AlgebraElement::one(tag));
        }
        let j1 = AlgebraElement::unit(AlgebraTag::C, 1);
        assert_eq!(j1.conj(), j1.scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn tag_mismatch_is_an_error() {
        let a = AlgebraElement::one(AlgebraTag::H);
        let b = AlgebraElement::one(AlgebraTag::O);
        assert!(matches!(a.mul(&b), Err(Error::TagMismatch("H", "O"))));
    }

    #[test]
    fn composition_algebra_identities() {
        let mut s = Stream::new(9);
        for tag in AlgebraTag::ALL {
            for _ in 0..20 {
                let x = random_element(tag, &mut s);
                let y = random_element(tag, &mut s);
                let xy = x.mul(&y).unwrap();
                assert_eq!(xy.conj(), y.conj().mul(&x.conj()).unwrap());
                assert_eq!(xy.norm(), &x.norm() * &y.norm());
                let xxc = x.mul(&x.conj()).unwrap();
                assert!(xxc.is_scalar());
                assert_eq!(xxc.real_part(), &x.norm());
                // alternativity
                assert_eq!(x.mul(&x.mul(&y).unwrap()).unwrap(), x.mul(&x).unwrap().mul(&y).unwrap());
                assert_eq!(y.mul(&x).unwrap().mul(&x).unwrap(), y.mul(&x.mul(&x).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn octonions_are_not_associative() {
        let j = |i| AlgebraElement::unit(AlgebraTag::O, i);
        let l = j(1).mul(&j(2)).unwrap().mul(&j(5)).unwrap();
        let r = j(1).mul(&j(2).mul(&j(5)).unwrap()).unwrap();
        assert_ne!(l, r);
    }
}
