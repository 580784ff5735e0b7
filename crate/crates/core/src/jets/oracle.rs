//! Jacobian-rank oracles: dimensions of joins, tangential varieties and
//! Gauss-map fibers computed directly from a parametrization, independent
//! of any second fundamental form.

use crate::certify::Certifier;
use crate::error::{Error, Result};
use crate::linalg::{random_vector, span_sum, Matrix, Scalar, Stream, Subspace};

use super::poly::{jacobian, Poly, PolyMap};

/// Lift of a map with its first and second partial derivatives.
#[derive(Clone, Debug)]
pub struct LiftData {
    pub lift: Vec<Poly>,
    /// `d1[j][i] = ∂ⱼ Lᵢ`.
    pub d1: Vec<Vec<Poly>>,
    domain_dim: usize,
}

impl LiftData {
    pub fn new(f: &PolyMap) -> Self {
        let lift = f.lift();
        let d = f.domain_dim();
        let d1 = (0..d).map(|j| lift.iter().map(|p| p.derivative(j)).collect()).collect();
        LiftData { lift, d1, domain_dim: d }
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn ambient_len(&self) -> usize {
        self.lift.len()
    }

    pub fn value(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.lift.iter().map(|p| p.eval(u)).collect()
    }

    pub fn partial(&self, j: usize, u: &[Scalar]) -> Vec<Scalar> {
        self.d1[j].iter().map(|p| p.eval(u)).collect()
    }

    /// Columns `L(u), ∂₁L(u), …, ∂_dL(u)`; they span the embedded tangent
    /// space at a smooth point.
    pub fn cone_tangent_columns(&self, u: &[Scalar]) -> Vec<Vec<Scalar>> {
        let mut cols = vec![self.value(u)];
        cols.extend((0..self.domain_dim).map(|j| self.partial(j, u)));
        cols
    }

    pub fn cone_tangent(&self, u: &[Scalar]) -> Subspace {
        Subspace::span(self.ambient_len(), &self.cone_tangent_columns(u))
    }

    /// `rank[L | J_L] − 1` at `u`.
    pub fn dimension_at(&self, u: &[Scalar]) -> usize {
        self.cone_tangent(u).dim().saturating_sub(1)
    }

    /// Largest [`LiftData::dimension_at`] over a few random points. Only a
    /// lower bound in principle; used to tell special points from generic
    /// ones.
    pub fn generic_dimension(&self, stream: &Stream) -> usize {
        let mut s = stream.clone();
        (0..3).map(|_| self.dimension_at(&random_vector(self.domain_dim, 97, &mut s))).max().unwrap_or(0)
    }
}

/// `dim X` as a certified Jacobian rank.
pub fn dimension(f: &PolyMap, stream: &Stream, cert: &Certifier) -> Result<usize> {
    join_dimension(f, 1, stream, cert)
}

/// Projective dimension of the `k`-th secant variety: the rank of the
/// Jacobian of `(u₁…u_k, s₁…s_k) ↦ Σ sᵢ L(uᵢ)` minus one.
pub fn join_dimension(f: &PolyMap, k: usize, stream: &Stream, cert: &Certifier) -> Result<usize> {
    if k == 0 {
        return Err(Error::Invalid("join order must be at least 1".into()));
    }
    let data = LiftData::new(f);
    let d = f.domain_dim();
    cert.value(&format!("join/{k}"), stream, |st, b| {
        let mut cols = Vec::new();
        for _ in 0..k {
            let u = random_vector(d, b, st);
            let s = Scalar::from_int(st.nonzero_int_in(b));
            cols.push(data.value(&u));
            cols.extend((0..d).map(|j| data.partial(j, &u).iter().map(|x| x * &s).collect()));
        }
        Ok(Matrix::from_columns(&cols, data.ambient_len()).rank().saturating_sub(1))
    })
}

/// Embeds a polynomial in `d` variables into `2d` variables (the first `d`).
fn widen(p: &Poly, d: usize) -> Poly {
    let subs: Vec<Poly> = (0..d).map(|i| Poly::var(2 * d, i)).collect();
    p.compose(&subs, None)
}

/// `(u, t) ↦ L(u) + Σ t_α ∂_α L(u)`, the union of embedded tangent spaces.
/// Affine maps stay affine; homogeneous maps stay homogeneous of the same
/// degree.
pub fn tangent_parametrization(f: &PolyMap) -> PolyMap {
    let d = f.domain_dim();
    let comps: Vec<Poly> = f
        .components()
        .iter()
        .map(|p| {
            let mut acc = widen(p, d);
            for a in 0..d {
                acc = acc.add(&widen(&p.derivative(a), d).mul(&Poly::var(2 * d, d + a)));
            }
            acc
        })
        .collect();
    PolyMap::new(2 * d, f.codomain_dim(), f.is_projective(), comps).expect("shape preserved")
}

/// Projective dimension of the tangential variety of the smooth locus.
pub fn tangent_join_dimension(f: &PolyMap, stream: &Stream, cert: &Certifier) -> Result<usize> {
    dimension(&tangent_parametrization(f), &stream.derive_named("tangent"), cert)
}

/// Generic fiber dimension of the Gauss map of the image of `f`.
///
/// The differential of `u ↦ T̂(u) = span(L, ∂L)` in direction `∂ᵢ` is the
/// map `T̂ → V/T̂` sending `∂ⱼL ↦ ∂ᵢ∂ⱼL`; it is read through a basis `ℓ` of
/// the normal functionals as the row `(ℓ·∂ᵢ∂ⱼL)_{j,ℓ}`. The fiber dimension
/// is `dim X` minus the rank of these rows.
pub fn gauss_fiber_dimension(f: &PolyMap, stream: &Stream, cert: &Certifier) -> Result<usize> {
    let data = LiftData::new(f);
    let d = f.domain_dim();
    let d2: Vec<Vec<Vec<Poly>>> = (0..d)
        .map(|i| (0..d).map(|j| data.d1[j].iter().map(|p| p.derivative(i)).collect()).collect())
        .collect();
    let (dim, rank) = cert.value("gauss_fiber", stream, |st, b| {
        let u = random_vector(d, b, st);
        let tangent = data.cone_tangent(&u);
        let normals = tangent.annihilator().basis_vectors();
        let rows: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                let mut row = Vec::with_capacity(d * normals.len());
                for j in 0..d {
                    let h: Vec<Scalar> = d2[i][j].iter().map(|p| p.eval(&u)).collect();
                    row.extend(normals.iter().map(|l| crate::linalg::dot(l, &h)));
                }
                row
            })
            .collect();
        let width = d * normals.len();
        Ok((tangent.dim().saturating_sub(1), Matrix::from_rows(rows, width).rank()))
    })?;
    Ok(dim - rank)
}

/// Composes `f` with a random linear projection to `ℙ^target_dim`.
///
/// Affine maps keep their affine form: the projection fixes the constant
/// coordinate of the lift. A draw is rejected when the projection is not of
/// full rank or lowers the dimension of the image; after `attempts`
/// rejections the call fails.
pub fn linear_project(f: &PolyMap, target_dim: usize, stream: &mut Stream) -> Result<PolyMap> {
    const ATTEMPTS: usize = 16;
    const BOUND: i64 = 8;
    let m = f.codomain_dim();
    if target_dim >= m {
        return Err(Error::Invalid(format!("target dimension {target_dim} is not below {m}")));
    }
    let lift = f.lift();
    let data = LiftData::new(f);
    let probe = stream.derive_named("project/probe");
    let dim = data.generic_dimension(&probe);
    for _ in 0..ATTEMPTS {
        let mut rows: Vec<Vec<Scalar>> = (0..=target_dim).map(|_| random_vector(m + 1, BOUND, stream)).collect();
        if !f.is_projective() {
            rows[0] = crate::linalg::unit_vector(m + 1, 0);
        }
        let r = Matrix::from_rows(rows, m + 1);
        if r.rank() < target_dim + 1 {
            continue;
        }
        let projected: Vec<Poly> = (0..=target_dim)
            .map(|i| {
                let mut acc = Poly::zero(f.domain_dim());
                for (j, p) in lift.iter().enumerate() {
                    if !r[(i, j)].is_zero() {
                        acc = acc.add(&p.scale(&r[(i, j)]));
                    }
                }
                acc
            })
            .collect();
        let g = if f.is_projective() {
            PolyMap::new(f.domain_dim(), target_dim, true, projected)?
        } else {
            PolyMap::new(f.domain_dim(), target_dim, false, projected[1..].to_vec())?
        };
        if LiftData::new(&g).generic_dimension(&probe) == dim {
            return Ok(g);
        }
    }
    Err(Error::DegenerateProjection(ATTEMPTS))
}

/// The join map `(u₁…u_k, s₁…s_k) ↦ Σ sᵢ L(uᵢ)` as explicit polynomials in
/// `k·d + k` variables.
pub fn join_map(f: &PolyMap, k: usize) -> Vec<Poly> {
    let d = f.domain_dim();
    let nv = k * d + k;
    let lift = f.lift();
    let mut out = vec![Poly::zero(nv); lift.len()];
    for i in 0..k {
        let subs: Vec<Poly> = (0..d).map(|j| Poly::var(nv, i * d + j)).collect();
        let s = Poly::var(nv, k * d + i);
        for (o, p) in out.iter_mut().zip(&lift) {
            *o = o.add(&p.compose(&subs, None).mul(&s));
        }
    }
    out
}

/// One Terracini comparison: the rank of the symbolic Jacobian of the join
/// map at `(x, y, s)` against `dim(T̂_x + T̂_y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TerraciniSample {
    pub jacobian_rank: usize,
    pub span_dim: usize,
}

pub fn terracini_check(f: &PolyMap, pairs: usize, bound: i64, stream: &mut Stream) -> Vec<TerraciniSample> {
    let d = f.domain_dim();
    let jm = join_map(f, 2);
    let data = LiftData::new(f);
    (0..pairs)
        .map(|_| {
            let x = random_vector(d, bound, stream);
            let y = random_vector(d, bound, stream);
            let s = [Scalar::from_int(stream.nonzero_int_in(bound)), Scalar::from_int(stream.nonzero_int_in(bound))];
            let point: Vec<Scalar> = x.iter().chain(&y).chain(&s).cloned().collect();
            let jacobian_rank = jacobian(&jm, &point).rank();
            let span = span_sum(&[data.cone_tangent(&x), data.cone_tangent(&y)]).expect("same ambient");
            TerraciniSample { jacobian_rank, span_dim: span.dim() }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Poly {
        Poly::monomial(e.to_vec(), Scalar::one())
    }

    fn twisted_cubic() -> PolyMap {
        PolyMap::new(1, 3, false, vec![mono(&[1]), mono(&[2]), mono(&[3])]).unwrap()
    }

    fn quadric_surface() -> PolyMap {
        PolyMap::new(2, 3, false, vec![mono(&[1, 0]), mono(&[0, 1]), mono(&[1, 1])]).unwrap()
    }

    fn linear_plane() -> PolyMap {
        let v = |i| Poly::var(3, i);
        let comps = vec![v(0), v(1), v(2), v(0).add(&v(1)), v(1).sub(&v(2)), v(0).add(&v(2))];
        PolyMap::new(3, 5, true, comps).unwrap()
    }

    fn c() -> Certifier {
        Certifier::default()
    }

    #[test]
    fn join_dimensions() {
        let s = Stream::new(0);
        assert_eq!(join_dimension(&twisted_cubic(), 1, &s, &c()).unwrap(), 1);
        assert_eq!(join_dimension(&twisted_cubic(), 2, &s, &c()).unwrap(), 3);
        assert_eq!(dimension(&linear_plane(), &s, &c()).unwrap(), 2);
        assert!(join_dimension(&twisted_cubic(), 0, &s, &c()).is_err());
    }

    #[test]
    fn tangent_join_dimensions() {
        let s = Stream::new(1);
        assert_eq!(tangent_join_dimension(&quadric_surface(), &s, &c()).unwrap(), 3);
        assert_eq!(tangent_join_dimension(&linear_plane(), &s, &c()).unwrap(), 2);
        assert_eq!(tangent_join_dimension(&twisted_cubic(), &s, &c()).unwrap(), 2);
        let tp = tangent_parametrization(&linear_plane());
        assert!(tp.is_projective());
        assert_eq!(tp.domain_dim(), 6);
    }

    #[test]
    fn gauss_fibers() {
        let s = Stream::new(2);
        assert_eq!(gauss_fiber_dimension(&quadric_surface(), &s, &c()).unwrap(), 0);
        assert_eq!(gauss_fiber_dimension(&twisted_cubic(), &s, &c()).unwrap(), 0);
        // The tangent surface of the twisted cubic is developable: its Gauss
        // map is constant along the rulings.
        let tau = tangent_parametrization(&twisted_cubic());
        assert_eq!(gauss_fiber_dimension(&tau, &s, &c()).unwrap(), 1);
        // A linear space has a constant Gauss map.
        assert_eq!(gauss_fiber_dimension(&linear_plane(), &s, &c()).unwrap(), 2);
    }

    #[test]
    fn projection_bookkeeping() {
        // rational normal quartic in ℙ⁴ projected to ℙ³
        let quartic =
            PolyMap::new(1, 4, false, vec![mono(&[1]), mono(&[2]), mono(&[3]), mono(&[4])]).unwrap();
        let mut st = Stream::new(3);
        let g = linear_project(&quartic, 3, &mut st).unwrap();
        assert_eq!((g.domain_dim(), g.codomain_dim(), g.lift().len()), (1, 3, 4));
        assert!(!g.is_projective());
        assert_eq!(join_dimension(&g, 2, &Stream::new(0), &c()).unwrap(), 3);
        let h = linear_project(&linear_plane(), 3, &mut st).unwrap();
        assert!(h.is_projective());
        assert_eq!(dimension(&h, &Stream::new(0), &c()).unwrap(), 2);
        assert!(linear_project(&quartic, 4, &mut st).is_err());
    }

    #[test]
    fn terracini_agrees() {
        let mut st = Stream::new(4);
        for f in [twisted_cubic(), quadric_surface(), linear_plane()] {
            for sample in terracini_check(&f, 5, 20, &mut st) {
                assert_eq!(sample.jacobian_rank, sample.span_dim);
            }
        }
    }
}
