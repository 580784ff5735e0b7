//! Structure of tangentially defective systems of quadrics: the image `Z`
//! of `ii`, its vertex, Gauss fibers, the Clifford action on
//! `T/singloc(Ann(v))` and the rank and codimension bounds.

use serde::{Deserialize, Serialize};

use crate::certify::Certifier;
use crate::error::{Error, Result};
use crate::jets::{gauss_fiber_dimension, tangent_parametrization, Poly, PolyMap};
use crate::linalg::{random_vector, Matrix, Quotient, Scalar, Stream, Subspace, SubspaceRecord};
use crate::quadric::{singular_locus, QuadricSystem, RankProfile};

/// `V̂_Z`: the intersection of `II_v(T)` over generic `v`, grown one sample
/// at a time until three consecutive samples leave it unchanged.
pub fn vertex(s: &QuadricSystem, stream: &Stream, cert: &Certifier) -> Result<Subspace> {
    const MAX_SAMPLES: usize = 64;
    cert.value("vertex", stream, |st, b| {
        let mut acc = Subspace::full(s.a());
        let mut unchanged = 0;
        for _ in 0..MAX_SAMPLES {
            let v = random_vector(s.n(), b, st);
            let next = acc.intersection(&s.image_at(&v))?;
            unchanged = if next == acc { unchanged + 1 } else { 0 };
            acc = next;
            if unchanged == 3 {
                break;
            }
        }
        Ok(acc)
    })
}

/// `II*(V̂_Z^⊥)`, the smallest subsystem with the same tangential defect.
pub fn minimal_subsystem(vertex: &Subspace) -> Subspace {
    vertex.annihilator()
}

/// `singloc(Ann(v))`.
pub fn singloc_ann(s: &QuadricSystem, v: &[Scalar]) -> Subspace {
    singular_locus(&s.quadrics_of(&s.annihilator(v)), s.n())
}

/// `F̂_v = II_v(singloc(Ann(v)))`.
pub fn gauss_fiber(s: &QuadricSystem, v: &[Scalar]) -> Subspace {
    singloc_ann(s, v).image(&s.contraction(v))
}

/// `II(w₁, w₂)` reduced modulo `II_v(T)`.
pub fn ii_second_fundamental_form(s: &QuadricSystem, v: &[Scalar], w1: &[Scalar], w2: &[Scalar]) -> Vec<Scalar> {
    s.image_at(v).reduce(&s.bilinear(w1, w2))
}

/// `{v} ⊕ ker II_v`.
pub fn v_plus_kernel(s: &QuadricSystem, v: &[Scalar]) -> Subspace {
    let mut vs = vec![v.to_vec()];
    vs.extend(s.kernel_at(v).basis_vectors());
    Subspace::span(s.n(), &vs)
}

/// The quotients `T/S` and `II_v(T)/F̂_v` with `S = singloc(Ann(v))`,
/// and the matrix of `II_v` between them.
pub struct CliffordFrame {
    pub singloc: Subspace,
    pub fiber: Subspace,
    pub tangent_quotient: Quotient,
    pub normal_quotient: Quotient,
    pub image: Subspace,
    m_v_inv: Matrix,
}

impl CliffordFrame {
    pub fn new(s: &QuadricSystem, v: &[Scalar]) -> Result<CliffordFrame> {
        let singloc = singloc_ann(s, v);
        let image = s.image_at(v);
        let fiber = singloc.image(&s.contraction(v));
        let tangent_quotient = Quotient::of_ambient(&singloc)?;
        let normal_quotient = Quotient::new(&image, &fiber)?;
        if tangent_quotient.dim() != normal_quotient.dim() {
            return Err(Error::NotWellDefined(format!(
                "T/S has dimension {} but II_v(T)/F̂_v has dimension {}",
                tangent_quotient.dim(),
                normal_quotient.dim()
            )));
        }
        let mut frame = CliffordFrame {
            singloc,
            fiber,
            tangent_quotient,
            normal_quotient,
            image,
            m_v_inv: Matrix::zeros(0, 0),
        };
        let m_v = frame.induced(s, v)?;
        frame.m_v_inv = m_v.inverse().ok_or_else(|| Error::NotWellDefined("II_v is not invertible on T/S".into()))?;
        Ok(frame)
    }

    pub fn module_dim(&self) -> usize {
        self.tangent_quotient.dim()
    }

    /// Matrix of `x ↦ II(w, x)` from `T/S` to `II_v(T)/F̂_v`, after checking
    /// that `II(w, T) ⊆ II_v(T)` and `II(w, S) ⊆ F̂_v`.
    fn induced(&self, s: &QuadricSystem, w: &[Scalar]) -> Result<Matrix> {
        for x in self.singloc.basis_vectors() {
            if !self.fiber.contains(&s.bilinear(w, &x)) {
                return Err(Error::NotWellDefined("II_w(S) is not contained in F̂_v".into()));
            }
        }
        let cols = self
            .tangent_quotient
            .representatives()
            .iter()
            .map(|x| {
                self.normal_quotient
                    .coords(&s.bilinear(w, x))
                    .ok_or_else(|| Error::NotWellDefined("II_w(T) is not contained in II_v(T)".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(&cols, self.module_dim()))
    }

    /// `φ_w = (II_v)⁻¹ ∘ II_w` on `T/S`, in the coordinates of the quotient
    /// representatives.
    pub fn action(&self, s: &QuadricSystem, w: &[Scalar]) -> Result<Matrix> {
        Ok(self.m_v_inv.mul(&self.induced(s, w)?))
    }
}

/// `φ_w` at `v`; see [`CliffordFrame::action`].
pub fn clifford_action(s: &QuadricSystem, v: &[Scalar], w: &[Scalar]) -> Result<Matrix> {
    CliffordFrame::new(s, v)?.action(s, w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordVerdict {
    /// The anticommutation relation holds on all kernel pairs for `sign`.
    pub relation_holds: bool,
    pub sign: i8,
    pub module_dim: usize,
    pub kernel_dim: usize,
    /// Whether the pairs involving `v` satisfy the relation with the same
    /// sign.
    pub v_pairs_hold: bool,
}

fn hypersurface_case(s: &QuadricSystem, profile: &RankProfile) -> Result<()> {
    if s.a() == 0 || profile.a0 + 1 != s.a() {
        return Err(Error::NotApplicable(format!(
            "Z is not a hypersurface (a₀ = {}, a = {})",
            profile.a0,
            s.a()
        )));
    }
    Ok(())
}

/// `Q_v`: the common restriction of the minimal-subsystem quadrics to
/// `{v} ⊕ ker II_v`, normalized by `Q_v(v, v) = 1`. Returned as a Gram
/// matrix on the basis `[v, kernel basis…]`.
pub fn q_v(s: &QuadricSystem, v: &[Scalar], minimal: &Subspace) -> Result<Matrix> {
    let mut basis = vec![v.to_vec()];
    basis.extend(s.kernel_at(v).basis_vectors());
    let b = Matrix::from_columns(&basis, s.n());
    let restricted: Vec<Matrix> =
        s.quadrics_of(minimal).iter().map(|q| b.transpose().mul(q).mul(&b)).filter(|m| !m.is_zero()).collect();
    let Some(first) = restricted.first() else {
        return Err(Error::NotProportional);
    };
    let (pi, pj) = (0..first.rows())
        .flat_map(|i| (0..first.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !first[(i, j)].is_zero())
        .expect("nonzero matrix");
    for m in &restricted[1..] {
        let ratio = &m[(pi, pj)] / &first[(pi, pj)];
        if *m != first.scale(&ratio) {
            return Err(Error::NotProportional);
        }
    }
    let vv = first[(0, 0)].clone();
    if vv.is_zero() {
        return Err(Error::NotProportional);
    }
    Ok(first.scale(&vv.inv()))
}

/// Verifies `φ_{w₁}φ_{w₂} + φ_{w₂}φ_{w₁} + 2s·Q_v(w₁, w₂)·Id = 0` on all pairs
/// of kernel basis vectors for one sign `s`.
pub fn clifford_relation_check(
    s: &QuadricSystem,
    v: &[Scalar],
    profile: &RankProfile,
    vertex: &Subspace,
) -> Result<CliffordVerdict> {
    hypersurface_case(s, profile)?;
    let frame = CliffordFrame::new(s, v)?;
    if frame.fiber.dim() != vertex.dim() + 1 {
        return Err(Error::NotApplicable(format!(
            "dim F̂_v = {} but vertex dimension is {}",
            frame.fiber.dim(),
            vertex.dim()
        )));
    }
    let q = q_v(s, v, &minimal_subsystem(vertex))?;
    let kernel = s.kernel_at(v).basis_vectors();
    let mut phis = vec![frame.action(s, v)?];
    for k in &kernel {
        phis.push(frame.action(s, k)?);
    }
    let m = frame.module_dim();
    let id = Matrix::identity(m);
    let holds = |i: usize, j: usize, sign: &Scalar| {
        let anti = phis[i].mul(&phis[j]).add(&phis[j].mul(&phis[i]));
        let c = &(&Scalar::from_int(2) * sign) * &q[(i, j)];
        anti.add(&id.scale(&c)).is_zero()
    };
    let kernel_pairs: Vec<(usize, usize)> =
        (1..phis.len()).flat_map(|i| (i..phis.len()).map(move |j| (i, j))).collect();
    let sign = [1i8, -1]
        .into_iter()
        .find(|&sg| kernel_pairs.iter().all(|&(i, j)| holds(i, j, &Scalar::from_int(sg.into()))))
        .ok_or(Error::RelationFailure)?;
    let sg = Scalar::from_int(sign.into());
    let v_pairs_hold = (0..phis.len()).all(|j| holds(0, j, &sg));
    Ok(CliffordVerdict { relation_holds: true, sign, module_dim: m, kernel_dim: kernel.len(), v_pairs_hold })
}

/// `P_v(φ_w x, y) + P_v(x, φ_w y) = 0` for all `w` in a basis of
/// `ker II_v`, with `P_v` the generator of a one-dimensional `Ann(v)`.
pub fn so_membership_check(s: &QuadricSystem, v: &[Scalar], profile: &RankProfile) -> Result<bool> {
    hypersurface_case(s, profile)?;
    let ann = s.annihilator(v);
    if ann.dim() != 1 {
        return Err(Error::NotApplicable(format!("Ann(v) has dimension {}", ann.dim())));
    }
    let p = &s.quadrics_of(&ann)[0];
    let frame = CliffordFrame::new(s, v)?;
    let reps = frame.tangent_quotient.representatives();
    let m = reps.len();
    let mut gram = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            gram[(i, j)] = p.bilinear(&reps[i], &reps[j]);
        }
    }
    for w in s.kernel_at(v).basis_vectors() {
        let phi = frame.action(s, &w)?;
        if !phi.transpose().mul(&gram).add(&gram.mul(&phi)).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn bound_preconditions(profile: &RankProfile, a: usize, sigma_degenerate: bool) -> Result<()> {
    if !sigma_degenerate {
        return Err(Error::NotApplicable("secant variety is not degenerate".into()));
    }
    if a == 0 || profile.a0 + 1 != a {
        return Err(Error::NotApplicable("secant variety is not a hypersurface".into()));
    }
    Ok(())
}

/// `r ≥ n − a + 2`.
pub fn rank_restriction_check(profile: &RankProfile, n: usize, a: usize, sigma_degenerate: bool) -> Result<bool> {
    bound_preconditions(profile, a, sigma_degenerate)?;
    Ok(profile.r + a >= n + 2)
}

/// `a ≥ n/2 + 2 + ½·dim F_v`, evaluated as `2a ≥ n + 4 + dim F_v`.
pub fn zak_bound_check(
    profile: &RankProfile,
    n: usize,
    a: usize,
    fiber_dim: isize,
    sigma_degenerate: bool,
) -> Result<bool> {
    bound_preconditions(profile, a, sigma_degenerate)?;
    Ok(2 * a as isize >= n as isize + 4 + fiber_dim)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauGaussBound {
    pub fiber: usize,
    pub delta_tau: usize,
    /// `τ` is degenerate and `II ≠ 0`, so the lower bounds apply.
    pub bounds_apply: bool,
    /// `fiber ≥ δ_τ + 1`.
    pub meets_delta_plus_one: bool,
    /// `fiber ≥ δ_τ + 2`.
    pub meets_delta_plus_two: bool,
}

/// Gauss-map fiber of the tangential variety against `δ_τ + 1` and
/// `δ_τ + 2`. Requires `τ` to be a proper subvariety, `a₀ < a`; the fiber
/// is reported even where the bounds do not apply.
pub fn tau_gauss_bound_check(
    f: &PolyMap,
    n: usize,
    a: usize,
    profile: &RankProfile,
    stream: &Stream,
    cert: &Certifier,
) -> Result<TauGaussBound> {
    if profile.a0 >= a {
        return Err(Error::NotApplicable("tangential variety fills the ambient space".into()));
    }
    let delta_tau = n - profile.a0;
    let fiber = gauss_fiber_dimension(&tangent_parametrization(f), &stream.derive_named("tau_gauss"), cert)?;
    Ok(TauGaussBound {
        fiber,
        delta_tau,
        bounds_apply: profile.a0 >= 1 && profile.a0 < n.min(a),
        meets_delta_plus_one: fiber > delta_tau,
        meets_delta_plus_two: fiber >= delta_tau + 2,
    })
}

/// Exact structural identities at one vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureChecks {
    /// `{v} ∪ ker II_v ⊆ singloc(Ann(v))`.
    pub kernel_in_singloc: bool,
    /// `Ann(v) = II*(II_v(T)^⊥)`.
    pub annihilator_duality: bool,
    /// Kernel of the differential of `w ↦ II(w, w)` at `v` is `ker II_v`.
    pub differential_kernel: bool,
    /// `II(S, S) ⊆ F̂_v`.
    pub singloc_maps_into_fiber: bool,
    /// `dim F̂_v = dim S − dim ker II_v`.
    pub fiber_dimension_identity: bool,
    /// The singular locus of `II mod II_v(T)` equals `S` modulo `{v} ⊕ ker II_v`.
    pub induced_singloc: bool,
}

impl StructureChecks {
    pub fn all(&self) -> bool {
        self.kernel_in_singloc
            && self.annihilator_duality
            && self.differential_kernel
            && self.singloc_maps_into_fiber
            && self.fiber_dimension_identity
            && self.induced_singloc
    }
}

/// The map `w ↦ II(w, w)` as explicit quadratic polynomials.
fn ii_polynomials(s: &QuadricSystem) -> Vec<Poly> {
    let n = s.n();
    s.quadrics()
        .iter()
        .map(|q| {
            let mut p = Poly::zero(n);
            for i in 0..n {
                for j in 0..n {
                    let mut e = vec![0; n];
                    e[i] += 1;
                    e[j] += 1;
                    p.add_term(e, q[(i, j)].clone());
                }
            }
            p
        })
        .collect()
}

/// `{w : II(w, x) ∈ II_v(T) for all x}`, solved in coordinates of
/// `N / II_v(T)`.
fn induced_singular_locus(s: &QuadricSystem, v: &[Scalar]) -> Result<Subspace> {
    let n = s.n();
    let quotient = Quotient::of_ambient(&s.image_at(v))?;
    let mut rows = Vec::new();
    for j in 0..n {
        let ej = crate::linalg::unit_vector(n, j);
        // column w ↦ class of II(w, e_j)
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|i| quotient.coords(&s.bilinear(&crate::linalg::unit_vector(n, i), &ej)).expect("ambient quotient"))
            .collect();
        let block = Matrix::from_columns(&cols, quotient.dim());
        rows.extend(block.row_vecs());
    }
    Ok(Subspace::kernel(&Matrix::from_rows(rows, n)))
}

pub fn structure_checks(s: &QuadricSystem, v: &[Scalar]) -> Result<StructureChecks> {
    let singloc = singloc_ann(s, v);
    let kernel = s.kernel_at(v);
    let k = v_plus_kernel(s, v);
    let fiber = gauss_fiber(s, v);

    let jac = crate::jets::poly::jacobian(&ii_polynomials(s), v);
    let differential_kernel = jac == s.contraction(v).scale(&Scalar::from_int(2)) && Subspace::kernel(&jac) == kernel;

    let sl = singloc.basis_vectors();
    let singloc_maps_into_fiber =
        sl.iter().all(|w1| sl.iter().all(|w2| fiber.contains(&s.bilinear(w1, w2))));

    let induced = induced_singular_locus(s, v)?;
    Ok(StructureChecks {
        kernel_in_singloc: singloc.contains_subspace(&k),
        annihilator_duality: s.annihilator(v) == s.annihilator_via_image(v),
        differential_kernel,
        singloc_maps_into_fiber,
        fiber_dimension_identity: fiber.dim() + kernel.dim() == singloc.dim(),
        induced_singloc: induced.sum(&k)? == singloc.sum(&k)?,
    })
}

/// [`clifford_relation_check`] with mathematical failures folded into a
/// verdict with `relation_holds = false`; `None` when not applicable.
pub fn clifford_verdict(
    s: &QuadricSystem,
    v: &[Scalar],
    profile: &RankProfile,
    vertex: &Subspace,
) -> Result<Option<CliffordVerdict>> {
    match clifford_relation_check(s, v, profile, vertex) {
        Ok(c) => Ok(Some(c)),
        Err(Error::NotApplicable(_)) => Ok(None),
        Err(Error::RelationFailure | Error::NotProportional | Error::NotWellDefined(_)) => Ok(Some(CliffordVerdict {
            relation_holds: false,
            sign: 0,
            module_dim: s.n() - profile.dim_singloc,
            kernel_dim: profile.dim_ker,
            v_pairs_hold: false,
        })),
        Err(e) => Err(e),
    }
}

/// Assembled defect invariants of a system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    pub profile: RankProfile,
    /// Affine dimension of `V̂_Z`.
    pub vertex_dim: usize,
    /// Projective dimension of `F_v`; `−1` when `F̂_v = 0`.
    pub fiber_dim: isize,
    pub minimal_subsystem: SubspaceRecord,
    pub clifford_verdict: Option<CliffordVerdict>,
    pub so_membership: Option<bool>,
    pub rank_restriction_ok: Option<bool>,
    pub zak_bound_ok: Option<bool>,
}

/// `Ok(Some(x))` on success, `Ok(None)` when a precondition is not met.
pub fn applicable<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::NotApplicable(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Runs the defect pipeline at a certified-generic vector. Mathematical
/// failures of the Clifford relation appear as `relation_holds = false`.
pub fn defect_report(
    s: &QuadricSystem,
    profile: &RankProfile,
    sigma_degenerate: bool,
    stream: &Stream,
    cert: &Certifier,
) -> Result<DefectReport> {
    let vtx = vertex(s, stream, cert)?;
    let mut st = stream.derive_named("defect/generic");
    let v = s.generic_vector(profile, profile.bound, 32, &mut st)?;
    let fiber_dim = gauss_fiber(s, &v).dim() as isize - 1;
    let clifford_verdict = clifford_verdict(s, &v, profile, &vtx)?;
    let so_membership = match so_membership_check(s, &v, profile) {
        Err(Error::NotWellDefined(_)) => Some(false),
        r => applicable(r)?,
    };
    Ok(DefectReport {
        profile: *profile,
        vertex_dim: vtx.dim(),
        fiber_dim,
        minimal_subsystem: SubspaceRecord::from(&minimal_subsystem(&vtx)),
        clifford_verdict,
        so_membership,
        rank_restriction_ok: applicable(rank_restriction_check(profile, s.n(), s.a(), sigma_degenerate))?,
        zak_bound_ok: applicable(zak_bound_check(profile, s.n(), s.a(), fiber_dim, sigma_degenerate))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_vector;

    fn sym(n: usize, entries: &[(usize, usize, i64)]) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for &(i, j, c) in entries {
            m[(i, j)] = Scalar::from_int(c);
            m[(j, i)] = Scalar::from_int(c);
        }
        m
    }

    /// ℙ²×ℙ² at a point: q^{ij} = xᵢyⱼ.
    fn segre_square() -> QuadricSystem {
        let qs = (0..2).flat_map(|i| (0..2).map(move |j| sym(4, &[(i, 2 + j, 1)]))).collect();
        QuadricSystem::new(4, qs).unwrap()
    }

    #[test]
    fn vertex_examples() {
        let c = Certifier::default();
        let st = Stream::new(0);
        // {x₁x₃, x₂x₃}: Z is a line, its own vertex
        let lines = QuadricSystem::new(3, vec![sym(3, &[(0, 2, 1)]), sym(3, &[(1, 2, 1)])]).unwrap();
        let vl = vertex(&lines, &st, &c).unwrap();
        assert!(vl.is_full());
        assert!(minimal_subsystem(&vl).is_zero());
        let single = QuadricSystem::new(2, vec![sym(2, &[(0, 1, 1)])]).unwrap();
        assert!(vertex(&single, &st, &c).unwrap().is_full());
        let seg = segre_square();
        let vs = vertex(&seg, &st, &c).unwrap();
        assert!(vs.is_zero());
        assert!(minimal_subsystem(&vs).is_full());
    }

    #[test]
    fn minimal_subsystem_drops_unused_summand() {
        // Segre square on x₀…x₃ plus x₄² in a fresh variable
        let mut qs: Vec<Matrix> = segre_square()
            .quadrics()
            .iter()
            .map(|q| {
                let mut m = Matrix::zeros(5, 5);
                for i in 0..4 {
                    for j in 0..4 {
                        m[(i, j)] = q[(i, j)].clone();
                    }
                }
                m
            })
            .collect();
        qs.push(sym(5, &[(4, 4, 1)]));
        let s = QuadricSystem::new(5, qs).unwrap();
        let vtx = vertex(&s, &Stream::new(1), &Certifier::default()).unwrap();
        let minimal = minimal_subsystem(&vtx);
        assert_eq!(minimal, Subspace::span(5, &(0..4).map(|i| crate::linalg::unit_vector(5, i)).collect::<Vec<_>>()));
    }

    #[test]
    fn segre_square_clifford_and_bounds() {
        let s = segre_square();
        let c = Certifier::default();
        let st = Stream::new(2);
        let p = s.certified_profile(&st, &c).unwrap();
        let v = int_vector(&[1, 2, -1, 3]);
        assert!(p.same_invariants(&s.profile_at(&v, 5, 16, &mut Stream::new(0))));
        let fiber = gauss_fiber(&s, &v);
        assert_eq!(fiber.dim(), 1);
        assert!(fiber.contains(&s.apply_ii(&v)));
        let phi_v = clifford_action(&s, &v, &v).unwrap();
        assert_eq!(phi_v, Matrix::identity(2));
        let zero = clifford_action(&s, &v, &int_vector(&[0, 0, 0, 0])).unwrap();
        assert!(zero.is_zero());
        let vtx = vertex(&s, &st, &c).unwrap();
        let verdict = clifford_relation_check(&s, &v, &p, &vtx).unwrap();
        assert!(verdict.relation_holds);
        assert_eq!((verdict.module_dim, verdict.kernel_dim), (2, 1));
        assert!(so_membership_check(&s, &v, &p).unwrap());
        assert!(rank_restriction_check(&p, 4, 4, true).unwrap());
        assert!(zak_bound_check(&p, 4, 4, 0, true).unwrap());
        assert!(matches!(rank_restriction_check(&p, 4, 4, false), Err(Error::NotApplicable(_))));
        assert!(structure_checks(&s, &v).unwrap().all());
    }

    #[test]
    fn second_form_of_ii_vanishes_along_v() {
        let s = segre_square();
        let v = int_vector(&[1, 2, -1, 3]);
        let w = int_vector(&[0, 5, 1, 1]);
        assert!(ii_second_fundamental_form(&s, &v, &v, &w).iter().all(Scalar::is_zero));
    }

    #[test]
    fn non_hypersurface_cases_are_not_applicable() {
        // a₀ = a for a single nondegenerate quadric
        let single = QuadricSystem::new(2, vec![sym(2, &[(0, 1, 1)])]).unwrap();
        let p = single.certified_profile(&Stream::new(0), &Certifier::default()).unwrap();
        let v = int_vector(&[1, 1]);
        let vtx = Subspace::full(1);
        assert!(matches!(clifford_relation_check(&single, &v, &p, &vtx), Err(Error::NotApplicable(_))));
        assert!(matches!(so_membership_check(&single, &v, &p), Err(Error::NotApplicable(_))));
    }
}
