//! Systems of quadrics `II ∈ S²T*⊗N`: contraction maps, annihilators,
//! singular loci, rank profiles and the dimension formulas for the
//! tangential and secant varieties.

use serde::{Deserialize, Serialize};

use crate::certify::Certifier;
use crate::error::{Error, Result};
use crate::linalg::{random_vector, span_sum, Matrix, Scalar, Stream, Subspace};

/// `a` symmetric `n × n` matrices `q^μ`, one per basis vector of `N*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricSystem {
    n: usize,
    quadrics: Vec<Matrix>,
}

/// Discrete invariants of a system at a generic tangent vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankProfile {
    /// `dim II_v(T)`.
    pub a0: usize,
    /// Maximal rank of a quadric in `Ann(v)`.
    pub r: usize,
    pub dim_ker: usize,
    pub dim_ann: usize,
    pub dim_singloc: usize,
    pub certified: bool,
    /// Sampling bound at which the invariants were observed.
    pub bound: i64,
}

impl RankProfile {
    fn key(&self) -> (usize, usize, usize, usize, usize) {
        (self.a0, self.r, self.dim_ker, self.dim_ann, self.dim_singloc)
    }

    /// Equality of the invariants, ignoring certification flag and bound.
    pub fn same_invariants(&self, other: &RankProfile) -> bool {
        self.key() == other.key()
    }
}

impl QuadricSystem {
    pub fn new(n: usize, quadrics: Vec<Matrix>) -> Result<Self> {
        for (i, q) in quadrics.iter().enumerate() {
            if q.rows() != n || q.cols() != n {
                return Err(Error::Invalid(format!("quadric {i} is {}×{}, expected {n}×{n}", q.rows(), q.cols())));
            }
            if !q.is_symmetric() {
                return Err(Error::Invalid(format!("quadric {i} is not symmetric")));
            }
        }
        Ok(QuadricSystem { n, quadrics })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> usize {
        self.quadrics.len()
    }

    pub fn quadrics(&self) -> &[Matrix] {
        &self.quadrics
    }

    /// Whether `II*: N* → S²T*` is injective, i.e. the quadrics are
    /// linearly independent.
    pub fn is_injective(&self) -> bool {
        let rows: Vec<Vec<Scalar>> = self.quadrics.iter().map(|q| q.entries().to_vec()).collect();
        Matrix::from_rows(rows, self.n * self.n).rank() == self.a()
    }

    /// `II(v, v)`.
    pub fn apply_ii(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.bilinear(v, v)
    }

    /// `II(w₁, w₂)`.
    pub fn bilinear(&self, w1: &[Scalar], w2: &[Scalar]) -> Vec<Scalar> {
        self.quadrics.iter().map(|q| q.bilinear(w1, w2)).collect()
    }

    /// The `a × n` matrix of `w ↦ II(v, w)`.
    pub fn contraction(&self, v: &[Scalar]) -> Matrix {
        assert_eq!(v.len(), self.n, "tangent vector has wrong length");
        let rows = self.quadrics.iter().map(|q| q.vec_mul(v)).collect();
        Matrix::from_rows(rows, self.n)
    }

    /// `II_v(T) ⊆ N`.
    pub fn image_at(&self, v: &[Scalar]) -> Subspace {
        Subspace::column_space(&self.contraction(v))
    }

    /// `ker II_v ⊆ T`.
    pub fn kernel_at(&self, v: &[Scalar]) -> Subspace {
        Subspace::kernel(&self.contraction(v))
    }

    /// `Ann(v) = {c ∈ N* : Σ c_μ q^μ v = 0}`, solved directly.
    pub fn annihilator(&self, v: &[Scalar]) -> Subspace {
        Subspace::kernel(&self.contraction(v).transpose())
    }

    /// `Ann(v)` computed as the annihilator of `II_v(T)`.
    pub fn annihilator_via_image(&self, v: &[Scalar]) -> Subspace {
        self.image_at(v).annihilator()
    }

    /// `Σ c_μ q^μ`.
    pub fn combination(&self, c: &[Scalar]) -> Matrix {
        assert_eq!(c.len(), self.a());
        let mut m = Matrix::zeros(self.n, self.n);
        for (ci, q) in c.iter().zip(&self.quadrics) {
            if !ci.is_zero() {
                m = m.add(&q.scale(ci));
            }
        }
        m
    }

    /// One quadric per basis vector of a subspace of `N*`.
    pub fn quadrics_of(&self, sub: &Subspace) -> Vec<Matrix> {
        sub.basis_vectors().iter().map(|c| self.combination(c)).collect()
    }

    /// Restriction to the coefficient subspace `sub ⊆ N*`, as a system with
    /// `dim sub` quadrics.
    pub fn subsystem(&self, sub: &Subspace) -> QuadricSystem {
        QuadricSystem { n: self.n, quadrics: self.quadrics_of(sub) }
    }

    /// Invariants at one vector. `r` is the maximum rank over the basis of
    /// `Ann(v)` and `combos` random combinations of it.
    pub fn profile_at(&self, v: &[Scalar], combos: usize, bound: i64, stream: &mut Stream) -> RankProfile {
        let a0 = self.contraction(v).rank();
        let ann = self.annihilator(v);
        let ann_quadrics = self.quadrics_of(&ann);
        let r = max_rank(&ann_quadrics, combos, bound, stream);
        RankProfile {
            a0,
            r,
            dim_ker: self.n - a0,
            dim_ann: ann.dim(),
            dim_singloc: singular_locus(&ann_quadrics, self.n).dim(),
            certified: false,
            bound,
        }
    }

    /// Certified invariants at a generic vector. A certification failure is
    /// reported through `certified = false` with the largest values observed.
    pub fn rank_profile(&self, stream: &Stream, cert: &Certifier) -> RankProfile {
        if let Ok(p) = self.certified_profile(stream, cert) {
            return p;
        }
        // Ranks are lower semicontinuous; the largest sample is the best estimate.
        let mut s = stream.derive_named("rank_profile/fallback");
        let bound = cert.bound.saturating_mul(1 << cert.escalations.min(20));
        (0..cert.trials)
            .map(|_| {
                let v = random_vector(self.n, bound, &mut s);
                self.profile_at(&v, cert.trials, bound, &mut s)
            })
            .max_by_key(|p| (p.a0, p.r))
            .expect("trials ≥ 1")
    }

    /// [`QuadricSystem::rank_profile`] that fails with
    /// [`Error::Certification`] instead of returning an uncertified profile.
    pub fn certified_profile(&self, stream: &Stream, cert: &Certifier) -> Result<RankProfile> {
        let c = cert.run(
            "rank_profile",
            stream,
            |s, b| {
                let v = random_vector(self.n, b, s);
                Ok(self.profile_at(&v, cert.trials, b, s))
            },
            RankProfile::key,
        )?;
        Ok(RankProfile { certified: true, bound: c.bound, ..c.witnesses[0] })
    }

    /// A vector whose invariants match the certified profile. Up to `attempts`
    /// draws at the given bound.
    pub fn generic_vector(
        &self,
        profile: &RankProfile,
        bound: i64,
        attempts: usize,
        stream: &mut Stream,
    ) -> Result<Vec<Scalar>> {
        let mut seen = Vec::new();
        for _ in 0..attempts {
            let v = random_vector(self.n, bound, stream);
            let p = self.profile_at(&v, 5, bound, stream);
            if p.same_invariants(profile) {
                return Ok(v);
            }
            seen.push(format!("{:?}", p.key()));
        }
        Err(Error::Certification { what: "generic vector".into(), observed: seen, rounds: 1, bound })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&QuadricSystemRecord::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<QuadricSystem> {
        let rec: QuadricSystemRecord = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        QuadricSystem::try_from(rec)
    }
}

fn max_rank(quadrics: &[Matrix], combos: usize, bound: i64, stream: &mut Stream) -> usize {
    let mut best = quadrics.iter().map(Matrix::rank).max().unwrap_or(0);
    if quadrics.len() < 2 {
        return best;
    }
    let n = quadrics[0].rows();
    for _ in 0..combos {
        let c = random_vector(quadrics.len(), bound, stream);
        let mut m = Matrix::zeros(n, n);
        for (ci, q) in c.iter().zip(quadrics) {
            m = m.add(&q.scale(ci));
        }
        best = best.max(m.rank());
    }
    best
}

/// Common kernel of the quadrics: the simultaneous singular locus of the
/// linear system they span. An empty list gives the whole space.
pub fn singular_locus(quadrics: &[Matrix], n: usize) -> Subspace {
    if quadrics.is_empty() {
        return Subspace::full(n);
    }
    let stacked = quadrics.iter().skip(1).fold(quadrics[0].clone(), |acc, q| acc.vstack(q));
    Subspace::kernel(&stacked)
}

/// `dim τ = n + a₀`.
pub fn tangential_dimension(s: &QuadricSystem, profile: &RankProfile) -> usize {
    s.n() + profile.a0
}

/// `dim τ < min(2n, n + a)`.
pub fn is_tangentially_degenerate(s: &QuadricSystem, profile: &RankProfile) -> bool {
    profile.dim_ker > s.n().saturating_sub(s.a())
}

/// `n + a₀`, plus one when the refined cubic form at `v` is nonzero.
pub fn secant_dimension(s: &QuadricSystem, profile: &RankProfile, third_form_nonzero: bool) -> usize {
    s.n() + profile.a0 + usize::from(third_form_nonzero)
}

/// Secant dimension from the span of several contraction images, with the
/// superadditivity bound `n + (k−1)·a₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HigherSecant {
    pub k: usize,
    pub value: usize,
    pub bound: usize,
    pub within_bound: bool,
}

/// `n + dim(II_{v₁}(T) + … + II_{v_{k−1}}(T))` at certified-generic
/// vectors.
pub fn higher_secant_dimension(
    s: &QuadricSystem,
    k: usize,
    profile: &RankProfile,
    stream: &Stream,
    cert: &Certifier,
) -> Result<HigherSecant> {
    if k < 2 {
        return Err(Error::Invalid("higher secant order must be at least 2".into()));
    }
    let span = cert.value(&format!("higher_secant/{k}"), stream, |st, b| {
        let images: Vec<Subspace> = (0..k - 1)
            .map(|_| random_vector(s.n(), b, st))
            .map(|v| s.image_at(&v))
            .collect();
        Ok(span_sum(&images)?.dim())
    })?;
    let value = s.n() + span;
    let bound = s.n() + (k - 1) * profile.a0;
    Ok(HigherSecant { k, value, bound, within_bound: value <= bound })
}

/// JSON shape of a [`QuadricSystem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadricSystemRecord {
    pub kind: String,
    pub n: usize,
    pub a: usize,
    pub quadrics: Vec<Vec<Vec<Scalar>>>,
}

impl From<&QuadricSystem> for QuadricSystemRecord {
    fn from(s: &QuadricSystem) -> Self {
        QuadricSystemRecord {
            kind: "quadric_system".into(),
            n: s.n,
            a: s.a(),
            quadrics: s.quadrics.iter().map(Matrix::row_vecs).collect(),
        }
    }
}

impl TryFrom<QuadricSystemRecord> for QuadricSystem {
    type Error = Error;

    fn try_from(r: QuadricSystemRecord) -> Result<QuadricSystem> {
        if r.kind != "quadric_system" {
            return Err(Error::Parse(format!("expected kind \"quadric_system\", found \"{}\"", r.kind)));
        }
        if r.quadrics.len() != r.a {
            return Err(Error::DimensionMismatch { expected: r.a, found: r.quadrics.len() });
        }
        let mut qs = Vec::with_capacity(r.a);
        for (i, rows) in r.quadrics.into_iter().enumerate() {
            if rows.len() != r.n || rows.iter().any(|row| row.len() != r.n) {
                return Err(Error::Invalid(format!("quadric {i} is not {}×{}", r.n, r.n)));
            }
            qs.push(Matrix::from_rows(rows, r.n));
        }
        QuadricSystem::new(r.n, qs)
    }
}
