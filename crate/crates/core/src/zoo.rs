//! Explicit charts of the classical examples: Segre and Veronese varieties,
//! the four Severi varieties, Grassmannians of planes, cones over curves,
//! determinantal varieties and linear spaces.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraTag;
use crate::error::{Error, Result};
use crate::certify::Certifier;
use crate::jets::{
    chart_at, gauss_fiber_dimension, join_dimension, second_fundamental_form, tangent_join_dimension,
    tangent_parametrization, Poly, PolyMap,
};
use crate::linalg::{Scalar, Stream};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZooEntry {
    pub name: String,
    pub map: PolyMap,
    /// Dimension of the variety.
    pub n: usize,
    /// Dimension of the ambient projective space.
    pub ambient: usize,
    pub notes: String,
    /// Default chart point, small integers.
    pub base_point: Vec<Scalar>,
}

impl ZooEntry {
    pub fn a(&self) -> usize {
        self.ambient - self.n
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `ℙ^{k−1} × ℙ^{r−1} ⊂ ℙ^{kr−1}`.
    Segre { k: usize, r: usize },
    /// `v_d(ℙ^m)`.
    Veronese { d: u32, m: usize },
    /// `v_d` of another entry.
    VeroneseOf { entry: Box<ZooEntry>, d: u32 },
    /// Rank-one Hermitian 3×3 matrices over a complexified division algebra.
    Severi(AlgebraTag),
    /// `G(2, m)` in its Plücker embedding.
    Grassmannian { m: usize },
    /// Cone over a curve entry. With a vertex, the cone lies in the curve's
    /// own ambient space (the vertex must have zero first lift coordinate
    /// for affine curves); without one, the vertex is a new coordinate point.
    Cone { curve: Box<ZooEntry>, vertex: Option<Vec<Scalar>> },
    /// Matrices `AB` with `A` of size `k×l` and `B` of size `l×r`.
    RankVariety { k: usize, r: usize, l: usize },
    /// A linear `ℙⁿ ⊂ ℙᵐ`.
    Linear { n: usize, m: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Segre { k, r } => write!(f, "segre_{k}_{r}"),
            Family::Veronese { d, m } => write!(f, "veronese_{d}_{m}"),
            Family::VeroneseOf { entry, d } => write!(f, "veronese_{d}_of_{}", entry.name),
            Family::Severi(t) => write!(f, "severi_{t}"),
            Family::Grassmannian { m } => write!(f, "grassmannian_2_{m}"),
            Family::Cone { curve, vertex: Some(_) } => write!(f, "cone_{}", curve.name),
            Family::Cone { curve, vertex: None } => write!(f, "cone_{}_free", curve.name),
            Family::RankVariety { k, r, l } => write!(f, "rank_{k}_{r}_{l}"),
            Family::Linear { n, m } => write!(f, "linear_{n}_{m}"),
        }
    }
}

fn var(nvars: usize, i: usize) -> Poly {
    Poly::var(nvars, i)
}

fn one(nvars: usize) -> Poly {
    Poly::constant(nvars, Scalar::one())
}

/// Small integers cycling through `1, −1, 2, −2, 3`.
pub fn default_point(d: usize) -> Vec<Scalar> {
    const PATTERN: [i64; 5] = [1, -1, 2, -2, 3];
    (0..d).map(|i| Scalar::from_int(PATTERN[i % PATTERN.len()])).collect()
}

/// All exponent vectors of total degree exactly `deg` in `nvars` variables,
/// in lexicographically decreasing order.
fn exponents_of_degree(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in exponents_of_degree(nvars - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn affine(name: String, d: usize, comps: Vec<Poly>, n: usize, notes: &str, base: Vec<Scalar>) -> Result<ZooEntry> {
    let ambient = comps.len();
    Ok(ZooEntry { name, map: PolyMap::new(d, ambient, false, comps)?, n, ambient, notes: notes.into(), base_point: base })
}

pub fn build(family: &Family) -> Result<ZooEntry> {
    let name = family.to_string();
    match family {
        Family::Segre { k, r } => {
            let (k, r) = (*k, *r);
            if k < 2 || r < 2 {
                return Err(Error::Invalid("segre factors must have k, r ≥ 2".into()));
            }
            let d = k + r - 2;
            let w = |i: usize| if i == 0 { one(d) } else { var(d, i - 1) };
            let z = |j: usize| if j == 0 { one(d) } else { var(d, k - 1 + j - 1) };
            let comps = (0..k)
                .flat_map(|i| (0..r).map(move |j| (i, j)))
                .filter(|&(i, j)| (i, j) != (0, 0))
                .map(|(i, j)| w(i).mul(&z(j)))
                .collect();
            affine(name, d, comps, d, "rank-one k×r matrices", default_point(d))
        }
        Family::Veronese { d, m } => {
            if *d < 1 || *m < 1 {
                return Err(Error::Invalid("veronese needs d ≥ 1 and m ≥ 1".into()));
            }
            let comps = (1..=*d)
                .flat_map(|deg| exponents_of_degree(*m, deg))
                .map(|e| Poly::monomial(e, Scalar::one()))
                .collect();
            affine(name, *m, comps, *m, "all monomials of degree at most d", default_point(*m))
        }
        Family::VeroneseOf { entry, d } => {
            if *d < 1 {
                return Err(Error::Invalid("veronese degree must be at least 1".into()));
            }
            let lift = entry.map.lift();
            let dd = entry.map.domain_dim();
            let mut comps: Vec<Poly> = exponents_of_degree(lift.len(), *d)
                .into_iter()
                .map(|e| {
                    e.iter().zip(&lift).fold(one(dd), |acc, (&k, p)| (0..k).fold(acc, |a, _| a.mul(p)))
                })
                .collect();
            let projective = entry.map.is_projective();
            if !projective {
                // The first monomial is L₀^d = 1.
                comps.remove(0);
            }
            let ambient = if projective { comps.len() - 1 } else { comps.len() };
            Ok(ZooEntry {
                name,
                map: PolyMap::new(dd, ambient, projective, comps)?,
                n: entry.n,
                ambient,
                notes: format!("degree-{d} re-embedding of {}", entry.name),
                base_point: entry.base_point.clone(),
            })
        }
        Family::Severi(tag) => {
            let m = tag.dim();
            let d = 2 * m;
            let u1 = |i: usize| var(d, i);
            let u2 = |i: usize| var(d, m + i);
            let conj_sign = |i: usize| if i == 0 { Scalar::one() } else { -Scalar::one() };
            let mut comps: Vec<Poly> = (0..d).map(|i| var(d, i)).collect();
            let norm = |f: &dyn Fn(usize) -> Poly| (0..m).fold(Poly::zero(d), |acc, i| acc.add(&f(i).mul(&f(i))));
            comps.push(norm(&u1));
            comps.push(norm(&u2));
            // u₃ = u₂ · ū₁
            let mut u3 = vec![Poly::zero(d); m];
            for i in 0..m {
                for j in 0..m {
                    let (s, k) = tag.basis_product(i, j);
                    let c = &conj_sign(j) * &Scalar::from_int(i64::from(s));
                    u3[k] = u3[k].add(&u2(i).mul(&u1(j)).scale(&c));
                }
            }
            comps.extend(u3);
            affine(
                name,
                d,
                comps,
                d,
                "rank-one Hermitian 3×3 matrices; coordinates (u₁, u₂, r₂, r₃, u₃) with r₁ = 1",
                vec![Scalar::zero(); d],
            )
        }
        Family::Grassmannian { m } => {
            let m = *m;
            if m < 4 {
                return Err(Error::Invalid("grassmannian(2, m) needs m ≥ 4".into()));
            }
            let d = 2 * (m - 2);
            // rows [1 0 a₀ a₁ …], [0 1 b₀ b₁ …]
            let col = |c: usize| -> (Poly, Poly) {
                match c {
                    0 => (one(d), Poly::zero(d)),
                    1 => (Poly::zero(d), one(d)),
                    _ => (var(d, c - 2), var(d, m - 2 + c - 2)),
                }
            };
            let mut comps = Vec::new();
            for i in 0..m {
                for j in i + 1..m {
                    if (i, j) == (0, 1) {
                        continue;
                    }
                    let (a, b) = col(i);
                    let (c, e) = col(j);
                    comps.push(a.mul(&e).sub(&b.mul(&c)));
                }
            }
            affine(name, d, comps, d, "Plücker coordinates of the row space of [I₂ | A]", default_point(d))
        }
        Family::Cone { curve, vertex } => {
            if curve.n != 1 {
                return Err(Error::Invalid(format!("cone base {} is not a curve", curve.name)));
            }
            if curve.map.is_projective() {
                return Err(Error::Invalid("cone base must be an affine chart".into()));
            }
            let d0 = curve.map.domain_dim();
            let d = d0 + 1;
            let w = var(d, d0);
            let widen: Vec<Poly> = (0..d0).map(|i| var(d, i)).collect();
            let base: Vec<Poly> = curve.map.components().iter().map(|p| p.compose(&widen, None)).collect();
            let comps = match vertex {
                None => {
                    let mut c = base;
                    c.push(w);
                    c
                }
                Some(p) => {
                    if p.len() != curve.ambient + 1 {
                        return Err(Error::DimensionMismatch { expected: curve.ambient + 1, found: p.len() });
                    }
                    if !p[0].is_zero() {
                        return Err(Error::Invalid("vertex must lie at infinity of the affine chart".into()));
                    }
                    base.iter().zip(&p[1..]).map(|(b, c)| b.add(&w.scale(c))).collect()
                }
            };
            let mut bp = curve.base_point.clone();
            bp.push(Scalar::from_int(2));
            affine(name, d, comps, 2, "cone over a curve with a point vertex", bp)
        }
        Family::RankVariety { k, r, l } => {
            let (k, r, l) = (*k, *r, *l);
            if l == 0 || l >= k.min(r) {
                return Err(Error::Invalid("rank variety needs 0 < l < min(k, r)".into()));
            }
            let d = l * (k + r);
            let a = |i: usize, s: usize| var(d, i * l + s);
            let b = |s: usize, j: usize| var(d, k * l + s * r + j);
            let comps = (0..k)
                .flat_map(|i| (0..r).map(move |j| (i, j)))
                .map(|(i, j)| (0..l).fold(Poly::zero(d), |acc, s| acc.add(&a(i, s).mul(&b(s, j)))))
                .collect();
            let ambient = k * r - 1;
            Ok(ZooEntry {
                name,
                map: PolyMap::new(d, ambient, true, comps)?,
                n: l * (k + r - l) - 1,
                ambient,
                notes: "matrices of rank at most l, as products of k×l and l×r blocks".into(),
                // (i² mod 7) − 3 gives blocks of full rank l for the catalog sizes
                base_point: (0..d).map(|i| Scalar::from_int(((i * i) % 7) as i64 - 3)).collect(),
            })
        }
        Family::Linear { n, m } => {
            let (n, m) = (*n, *m);
            if n == 0 || n >= m {
                return Err(Error::Invalid("linear space needs 0 < n < m".into()));
            }
            let comps = (0..m)
                .map(|i| if i < n { var(n, i) } else { var(n, i % n).add(&var(n, (i + 1) % n)) })
                .collect();
            affine(name, n, comps, n, "linear subspace", default_point(n))
        }
    }
}

pub fn twisted_cubic() -> ZooEntry {
    build(&Family::Veronese { d: 3, m: 1 }).expect("valid parameters")
}

pub fn rational_normal_curve(d: u32) -> Result<ZooEntry> {
    build(&Family::Veronese { d, m: 1 })
}

/// The cone over the rational normal quartic in ℙ⁴ with vertex the
/// coordinate point `e₂`, which is not on the curve.
pub fn quartic_cone() -> ZooEntry {
    let curve = rational_normal_curve(4).expect("valid parameters");
    let vertex = crate::linalg::unit_vector(5, 2);
    build(&Family::Cone { curve: Box::new(curve), vertex: Some(vertex) }).expect("valid parameters")
}

/// The conic `t ↦ (t, t²)` re-embedded by quadrics.
pub fn conic_reembedding() -> ZooEntry {
    let conic = rational_normal_curve(2).expect("valid parameters");
    build(&Family::VeroneseOf { entry: Box::new(conic), d: 2 }).expect("valid parameters")
}

/// Named entries used across examples and tests.
pub fn catalog() -> Vec<ZooEntry> {
    let mut out: Vec<ZooEntry> = [
        Family::Segre { k: 2, r: 2 },
        Family::Segre { k: 3, r: 3 },
        Family::Veronese { d: 3, m: 1 },
        Family::Veronese { d: 2, m: 2 },
        Family::Veronese { d: 3, m: 2 },
        Family::Severi(AlgebraTag::R),
        Family::Severi(AlgebraTag::C),
        Family::Severi(AlgebraTag::H),
        Family::Severi(AlgebraTag::O),
        Family::Grassmannian { m: 6 },
        Family::Grassmannian { m: 7 },
        Family::RankVariety { k: 5, r: 5, l: 2 },
        Family::Linear { n: 2, m: 5 },
    ]
    .iter()
    .map(|f| build(f).expect("catalog parameters are valid"))
    .collect();
    out.push(quartic_cone());
    out.push(conic_reembedding());
    out
}

pub fn by_name(name: &str) -> Result<ZooEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Invalid(format!("unknown zoo entry {name}")))
}

/// Reference invariants of an entry, computed once by
/// [`compute_expected`] and stored under `golden/`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub name: String,
    pub n: usize,
    pub ambient: usize,
    pub dim_tau: usize,
    pub dim_sigma: usize,
    pub sigma3: Option<usize>,
    pub a0: usize,
    pub r: usize,
    pub tau_gauss_fiber: Option<usize>,
}

const GOLDEN: &[(&str, &str)] = &[
    ("segre_2_2", include_str!("../golden/segre_2_2.json")),
    ("segre_3_3", include_str!("../golden/segre_3_3.json")),
    ("veronese_3_1", include_str!("../golden/veronese_3_1.json")),
    ("veronese_2_2", include_str!("../golden/veronese_2_2.json")),
    ("veronese_3_2", include_str!("../golden/veronese_3_2.json")),
    ("severi_R", include_str!("../golden/severi_R.json")),
    ("severi_C", include_str!("../golden/severi_C.json")),
    ("severi_H", include_str!("../golden/severi_H.json")),
    ("severi_O", include_str!("../golden/severi_O.json")),
    ("grassmannian_2_6", include_str!("../golden/grassmannian_2_6.json")),
    ("grassmannian_2_7", include_str!("../golden/grassmannian_2_7.json")),
    ("rank_5_5_2", include_str!("../golden/rank_5_5_2.json")),
    ("linear_2_5", include_str!("../golden/linear_2_5.json")),
    ("cone_veronese_4_1", include_str!("../golden/cone_veronese_4_1.json")),
    ("veronese_2_of_veronese_2_1", include_str!("../golden/veronese_2_of_veronese_2_1.json")),
];

/// Computes [`Expected`] for an entry: dimensions from the Jacobian-rank
/// oracles, `a₀` and `r` from the chart at the base point.
pub fn compute_expected(entry: &ZooEntry, stream: &Stream, cert: &Certifier) -> Result<Expected> {
    let f = &entry.map;
    let chart = chart_at(f, &entry.base_point, 3)?;
    let s = second_fundamental_form(&chart);
    let profile = s.certified_profile(&stream.derive_named("profile"), cert)?;
    let tau_gauss_fiber = if profile.a0 < s.a() {
        Some(gauss_fiber_dimension(&tangent_parametrization(f), &stream.derive_named("tau_gauss"), cert)?)
    } else {
        None
    };
    Ok(Expected {
        name: entry.name.clone(),
        n: entry.n,
        ambient: entry.ambient,
        dim_tau: tangent_join_dimension(f, stream, cert)?,
        dim_sigma: join_dimension(f, 2, stream, cert)?,
        sigma3: Some(join_dimension(f, 3, stream, cert)?),
        a0: profile.a0,
        r: profile.r,
        tau_gauss_fiber,
    })
}

/// Golden invariants of a catalog entry, if recorded.
pub fn expected(entry: &ZooEntry) -> Option<Expected> {
    GOLDEN
        .iter()
        .find(|(n, _)| *n == entry.name)
        .map(|(_, s)| serde_json::from_str(s).expect("golden files are valid"))
}
