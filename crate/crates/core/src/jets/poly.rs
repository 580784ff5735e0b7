//! Sparse multivariate polynomials over ℚ(i) and polynomial maps.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

pub type Exps = Vec<u32>;

/// Sparse polynomial; terms with zero coefficient are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exps, Scalar>,
}

fn exps_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, Scalar::one())
    }

    pub fn monomial(exps: Exps, c: Scalar) -> Self {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// Sums the given terms; every exponent vector must have length `nvars`.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exps, Scalar)>) -> Result<Self> {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exps: Exps, c: Scalar) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&vec![0; self.nvars])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| exps_degree(e)).max()
    }

    /// Lowest degree of a term; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| exps_degree(e)).min()
    }

    /// The common degree of all terms, if there is one. The zero polynomial
    /// is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        (self.min_degree() == Some(d)).then_some(d)
    }

    pub fn homogeneous_part(&self, deg: u32) -> Poly {
        self.filter(|e| exps_degree(e) == deg)
    }

    /// Drops every term of degree above `order`.
    pub fn truncate(&self, order: u32) -> Poly {
        self.filter(|e| exps_degree(e) <= order)
    }

    fn filter(&self, keep: impl Fn(&Exps) -> bool) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_bounded(other, u32::MAX)
    }

    /// Product with every term of degree above `order` discarded.
    pub fn mul_trunc(&self, other: &Poly, order: u32) -> Poly {
        self.mul_bounded(other, order)
    }

    fn mul_bounded(&self, other: &Poly, order: u32) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            let d1 = exps_degree(e1);
            if d1 > order {
                continue;
            }
            for (e2, c2) in &other.terms {
                if d1 + exps_degree(e2) > order {
                    continue;
                }
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong length");
        let mut cache: Vec<Vec<Scalar>> = point.iter().map(|x| vec![Scalar::one(), x.clone()]).collect();
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                while powers.len() <= k as usize {
                    let next = &powers[powers.len() - 1] * &point[i];
                    powers.push(next);
                }
                t = &t * &powers[k as usize];
            }
            acc += t;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * &Scalar::from_int(i64::from(e[i])));
        }
        out
    }

    /// Substitutes `subs[i]` for variable `i`, discarding terms of degree
    /// above `order` when given. Monomials of the substitutions are built
    /// incrementally and shared between terms.
    pub fn compose(&self, subs: &[Poly], order: Option<u32>) -> Poly {
        compose_many(std::slice::from_ref(self), subs, order).pop().expect("one input")
    }

    /// `p(u0 + x)` as a polynomial in `x`.
    pub fn shift(&self, u0: &[Scalar]) -> Poly {
        let n = self.nvars;
        let subs: Vec<Poly> =
            (0..n).map(|i| Poly::var(n, i).add(&Poly::constant(n, u0[i].clone()))).collect();
        self.compose(&subs, None)
    }

    /// Homogeneous polynomial of degree `deg` in `n` variables read as a
    /// symmetric tensor: the coefficient of `∏ x_{iₖ}` divided by the
    /// number of orderings of its indices.
    pub fn symmetric_coefficient(&self, indices: &[usize]) -> Scalar {
        let mut e = vec![0u32; self.nvars];
        for &i in indices {
            e[i] += 1;
        }
        let orderings = multinomial(&e);
        &self.coeff(&e) / &Scalar::from_int(orderings)
    }
}

fn multinomial(e: &[u32]) -> i64 {
    let fact = |k: u32| (1..=i64::from(k)).product::<i64>();
    let total: u32 = e.iter().sum();
    e.iter().fold(fact(total), |acc, &k| acc / fact(k))
}

/// [`Poly::compose`] over several polynomials sharing one substitution.
pub fn compose_many(polys: &[Poly], subs: &[Poly], order: Option<u32>) -> Vec<Poly> {
    let Some(first) = subs.first() else {
        // No variables: every polynomial is its constant.
        return polys.iter().map(|p| Poly::constant(0, p.constant_term())).collect();
    };
    let m = first.nvars;
    let order = order.unwrap_or(u32::MAX);
    let mut memo: HashMap<Exps, Poly> = HashMap::new();
    memo.insert(vec![0; subs.len()], Poly::constant(m, Scalar::one()));
    let mut out = Vec::with_capacity(polys.len());
    for p in polys {
        assert_eq!(p.nvars, subs.len(), "substitution count must equal variable count");
        let mut acc = Poly::zero(m);
        for (e, c) in &p.terms {
            let mono = monomial_of(e, subs, order, &mut memo);
            acc = acc.add(&mono.scale(c));
        }
        out.push(acc);
    }
    out
}

fn monomial_of(e: &Exps, subs: &[Poly], order: u32, memo: &mut HashMap<Exps, Poly>) -> Poly {
    if let Some(p) = memo.get(e) {
        return p.clone();
    }
    let i = e.iter().position(|&k| k > 0).expect("constant monomial is memoized");
    let mut smaller = e.clone();
    smaller[i] -= 1;
    let base = monomial_of(&smaller, subs, order, memo);
    let p = base.mul_bounded(&subs[i], order);
    memo.insert(e.clone(), p.clone());
    p
}

/// Polynomial parametrization of a variety chart.
///
/// With `projective` set, the components are homogeneous of one degree and
/// are the homogeneous coordinates (`codomain_dim + 1` of them). Otherwise
/// they are `codomain_dim` affine coordinates and the lift prepends a
/// constant 1. In both cases `codomain_dim` is the dimension of the ambient
/// projective space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMap {
    domain_dim: usize,
    codomain_dim: usize,
    projective: bool,
    components: Vec<Poly>,
}

impl PolyMap {
    pub fn new(domain_dim: usize, codomain_dim: usize, projective: bool, components: Vec<Poly>) -> Result<Self> {
        let expected = if projective { codomain_dim + 1 } else { codomain_dim };
        if components.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: components.len() });
        }
        if let Some(bad) = components.iter().find(|p| p.nvars != domain_dim) {
            return Err(Error::DimensionMismatch { expected: domain_dim, found: bad.nvars });
        }
        if projective {
            let mut degree = None;
            for (i, p) in components.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let d = p.homogeneous_degree().ok_or_else(|| {
                    Error::Invalid(format!("component {i} of a projective map is not homogeneous"))
                })?;
                if *degree.get_or_insert(d) != d {
                    return Err(Error::Invalid(format!(
                        "component {i} has degree {d}, expected {}",
                        degree.unwrap()
                    )));
                }
            }
        }
        Ok(PolyMap { domain_dim, codomain_dim, projective, components })
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    /// Homogeneous coordinates `L(u)`, always `codomain_dim + 1` entries.
    pub fn lift(&self) -> Vec<Poly> {
        if self.projective {
            self.components.clone()
        } else {
            let mut l = vec![Poly::constant(self.domain_dim, Scalar::one())];
            l.extend(self.components.iter().cloned());
            l
        }
    }

    pub fn eval(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.components.iter().map(|p| p.eval(u)).collect()
    }

    pub fn eval_lift(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.lift().iter().map(|p| p.eval(u)).collect()
    }

    /// Jacobian of the lift at `u`, `(codomain_dim + 1) × domain_dim`.
    pub fn lift_jacobian(&self, u: &[Scalar]) -> Matrix {
        jacobian(&self.lift(), u)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyMapRecord::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<PolyMap> {
        let rec: PolyMapRecord = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        PolyMap::try_from(rec)
    }
}

/// Jacobian matrix of a list of polynomials at a point.
pub fn jacobian(polys: &[Poly], u: &[Scalar]) -> Matrix {
    let d = u.len();
    let mut m = Matrix::zeros(polys.len(), d);
    for (i, p) in polys.iter().enumerate() {
        for j in 0..d {
            m[(i, j)] = p.derivative(j).eval(u);
        }
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exps: Exps,
    pub coeff: Scalar,
}

/// JSON shape of a [`PolyMap`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyMapRecord {
    pub kind: String,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub projective: bool,
    pub components: Vec<Vec<TermRecord>>,
}

impl From<&PolyMap> for PolyMapRecord {
    fn from(f: &PolyMap) -> Self {
        PolyMapRecord {
            kind: "poly_map".into(),
            domain_dim: f.domain_dim,
            codomain_dim: f.codomain_dim,
            projective: f.projective,
            components: f
                .components
                .iter()
                .map(|p| p.terms().map(|(e, c)| TermRecord { exps: e.clone(), coeff: c.clone() }).collect())
                .collect(),
        }
    }
}

impl TryFrom<PolyMapRecord> for PolyMap {
    type Error = Error;

    fn try_from(r: PolyMapRecord) -> Result<PolyMap> {
        if r.kind != "poly_map" {
            return Err(Error::Parse(format!("expected kind \"poly_map\", found \"{}\"", r.kind)));
        }
        let comps = r
            .components
            .into_iter()
            .map(|terms| Poly::from_terms(r.domain_dim, terms.into_iter().map(|t| (t.exps, t.coeff))))
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(r.domain_dim, r.codomain_dim, r.projective, comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{random_vector, Stream};
    use proptest::prelude::*;

    fn p(nvars: usize, terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), Scalar::from_int(*c)))).unwrap()
    }

    #[test]
    fn arithmetic_and_evaluation() {
        // (x + y)² = x² + 2xy + y²
        let s = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let sq = s.mul(&s);
        assert_eq!(sq, p(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));
        assert_eq!(sq.eval(&[2.into(), 3.into()]), Scalar::from_int(25));
        assert_eq!(sq.homogeneous_degree(), Some(2));
        assert!(sq.sub(&sq).is_zero());
        assert_eq!(sq.mul_trunc(&s, 2), Poly::zero(2));
    }

    #[test]
    fn derivative_and_shift() {
        let f = p(1, &[(&[3], 1)]);
        assert_eq!(f.derivative(0), p(1, &[(&[2], 3)]));
        // (1 + x)³
        assert_eq!(f.shift(&[1.into()]), p(1, &[(&[0], 1), (&[1], 3), (&[2], 3), (&[3], 1)]));
    }

    #[test]
    fn symmetric_coefficients() {
        let q = p(2, &[(&[2, 0], 3), (&[1, 1], 4)]);
        assert_eq!(q.symmetric_coefficient(&[0, 0]), Scalar::from_int(3));
        assert_eq!(q.symmetric_coefficient(&[0, 1]), Scalar::from_int(2));
        let c = p(2, &[(&[2, 1], 6)]);
        assert_eq!(c.symmetric_coefficient(&[0, 1, 0]), Scalar::from_int(2));
    }

    #[test]
    fn projective_maps_must_be_homogeneous() {
        let bad = vec![p(2, &[(&[1, 0], 1)]), p(2, &[(&[2, 0], 1)])];
        assert!(PolyMap::new(2, 1, true, bad).is_err());
        let wrong_count = vec![p(2, &[(&[1, 0], 1)])];
        assert!(matches!(
            PolyMap::new(2, 1, true, wrong_count),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let f = PolyMap::new(1, 2, false, vec![p(1, &[(&[1], 1)]), p(1, &[(&[2], 1)])]).unwrap();
        let s = f.to_json();
        assert!(s.starts_with(r#"{"kind":"poly_map","domain_dim":1,"codomain_dim":2,"projective":false"#));
        assert_eq!(PolyMap::from_json(&s).unwrap(), f);
        assert!(matches!(PolyMap::from_json("{"), Err(Error::Parse(_))));
        let short = r#"{"kind":"poly_map","domain_dim":2,"codomain_dim":1,"projective":false,
            "components":[[{"exps":[1],"coeff":{"re":"1","im":"0"}}]]}"#;
        assert!(PolyMap::from_json(short).is_err());
    }

    #[test]
    fn lift_prepends_one_for_affine_maps() {
        let f = PolyMap::new(1, 1, false, vec![p(1, &[(&[2], 1)])]).unwrap();
        assert_eq!(f.eval_lift(&[3.into()]), vec![Scalar::one(), Scalar::from_int(9)]);
        let j = f.lift_jacobian(&[3.into()]);
        assert!(j[(0, 0)].is_zero());
        assert_eq!(j[(1, 0)], Scalar::from_int(6));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(((0u32..3, 0u32..3), -5i64..=5), 0..6).prop_map(|ts| {
            Poly::from_terms(2, ts.into_iter().map(|((a, b), c)| (vec![a, b], Scalar::from_int(c)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn composition_commutes_with_evaluation(f in arb_poly(), g in arb_poly(), h in arb_poly(),
                                                seed in 0u64..1000) {
            let mut s = Stream::new(seed);
            let x = random_vector(2, 7, &mut s);
            let composed = f.compose(&[g.clone(), h.clone()], None);
            prop_assert_eq!(composed.eval(&x), f.eval(&[g.eval(&x), h.eval(&x)]));
        }

        #[test]
        fn product_rule(f in arb_poly(), g in arb_poly()) {
            let lhs = f.mul(&g).derivative(0);
            let rhs = f.derivative(0).mul(&g).add(&f.mul(&g.derivative(0)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
