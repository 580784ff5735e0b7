//! Adapted local graphs of a parametrized variety and the fundamental forms
//! read from their Taylor coefficients.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Stream, Subspace};
use crate::quadric::QuadricSystem;

use super::oracle::LiftData;
use super::poly::{compose_many, Poly, PolyMap};
use super::series;

/// Local graph `x^μ = q^μ(x, x) + c3^μ(x, x, x) + c4^μ(…)` of a variety at
/// a point, in target coordinates where the tangent space is spanned by the
/// first `n` axes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetChart {
    pub base_point: Vec<Scalar>,
    /// Homogeneous coordinate the affine chart divides by.
    pub chart_index: usize,
    /// Domain coordinates kept free; the others are frozen at the base point.
    pub free_coords: Vec<usize>,
    /// Target change `y = P·(g(u) − g(u₀))` on the affine chart.
    pub target_change: Matrix,
    /// Embedded tangent directions in affine chart coordinates.
    pub tangent_frame: Subspace,
    /// Coordinate complement used as the normal space.
    pub normal_frame: Subspace,
    /// Symmetric `n × n` matrices, `q^μ(y, y)` being the quadratic part.
    pub q: Vec<Matrix>,
    /// Cubic part of each normal coordinate, homogeneous in `n` variables.
    pub c3: Vec<Poly>,
    pub c4: Option<Vec<Poly>>,
    pub order: u32,
}

impl JetChart {
    pub fn n(&self) -> usize {
        self.free_coords.len()
    }

    pub fn a(&self) -> usize {
        self.q.len()
    }

    /// Truncated graph of each normal coordinate.
    pub fn graph(&self) -> Vec<Poly> {
        let n = self.n();
        (0..self.a())
            .map(|mu| {
                let mut g = Poly::zero(n);
                for i in 0..n {
                    for j in 0..n {
                        let mut e = vec![0; n];
                        e[i] += 1;
                        e[j] += 1;
                        g.add_term(e, self.q[mu][(i, j)].clone());
                    }
                }
                g = g.add(&self.c3[mu]);
                if let Some(c4) = &self.c4 {
                    g = g.add(&c4[mu]);
                }
                g
            })
            .collect()
    }

    pub fn third_order_vanishes(&self) -> bool {
        self.c3.iter().all(Poly::is_zero)
    }

    pub fn fourth_order_vanishes(&self) -> bool {
        self.c4.as_ref().is_none_or(|c| c.iter().all(Poly::is_zero))
    }
}

/// Chart coordinate: a nonvanishing coordinate of largest height.
fn choose_chart_index(p: &[Scalar]) -> Option<usize> {
    p.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .max_by(|(i, x), (j, y)| x.height().cmp(&y.height()).then(j.cmp(i)))
        .map(|(i, _)| i)
}

/// Affine chart `Lᵢ/L_{j₀} − value at u₀`, `i ≠ j₀`, as series in `u − u₀`.
fn centered_chart(lift: &[Poly], u0: &[Scalar], j0: usize, order: u32) -> Result<Vec<Poly>> {
    let shifted: Vec<Poly> = lift.iter().map(|p| p.shift(u0)).collect();
    let denom = series::reciprocal(&shifted[j0], order)?;
    Ok(shifted
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j0)
        .map(|(_, p)| {
            let g = p.mul_trunc(&denom, order);
            g.sub(&Poly::constant(g.nvars(), g.constant_term()))
        })
        .collect())
}

fn restrict(polys: &[Poly], free: &[usize], d: usize) -> Vec<Poly> {
    let n = free.len();
    let mut subs = vec![Poly::zero(n); d];
    for (t, &k) in free.iter().enumerate() {
        subs[k] = Poly::var(n, t);
    }
    compose_many(polys, &subs, None)
}

fn linear_part(polys: &[Poly], nvars: usize) -> Matrix {
    let mut m = Matrix::zeros(polys.len(), nvars);
    for (i, p) in polys.iter().enumerate() {
        for k in 0..nvars {
            let mut e = vec![0; nvars];
            e[k] = 1;
            m[(i, k)] = p.coeff(&e);
        }
    }
    m
}

fn apply_matrix(m: &Matrix, polys: &[Poly]) -> Vec<Poly> {
    let nvars = polys.first().map_or(0, Poly::nvars);
    (0..m.rows())
        .map(|i| {
            let mut acc = Poly::zero(nvars);
            for (j, p) in polys.iter().enumerate() {
                let c = &m[(i, j)];
                if !c.is_zero() {
                    acc = acc.add(&p.scale(c));
                }
            }
            acc
        })
        .collect()
}

/// Adapted graph of the image of `f` near `f(u0)`, to `order` 3 or 4.
///
/// Domain directions that the differential does not see are frozen, so
/// homogeneous parametrizations and redundant parameter blocks are accepted;
/// the point is rejected only when the differential rank drops below its
/// generic value.
pub fn chart_at(f: &PolyMap, u0: &[Scalar], order: u32) -> Result<JetChart> {
    if !(3..=4).contains(&order) {
        return Err(Error::Invalid(format!("jet order must be 3 or 4, got {order}")));
    }
    let d = f.domain_dim();
    if u0.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: u0.len() });
    }
    let lift = f.lift();
    let p: Vec<Scalar> = lift.iter().map(|c| c.eval(u0)).collect();
    let j0 = if f.is_projective() { choose_chart_index(&p).ok_or(Error::VanishingPoint)? } else { 0 };

    let g = centered_chart(&lift, u0, j0, order)?;
    let full_linear = linear_part(&g, d);
    let free = full_linear.rref().pivots;
    let n = free.len();
    let generic = LiftData::new(f).generic_dimension(&Stream::new(0).derive_named("chart_at"));
    if n < generic {
        return Err(Error::NonImmersive { rank: n, generic });
    }

    let gs = restrict(&g, &free, d);
    let lin = full_linear.select_columns(&free);
    let tangent_frame = Subspace::column_space(&lin);
    let comp = tangent_frame.complement_indices();
    let m = g.len();
    let mut cols: Vec<Vec<Scalar>> = (0..n).map(|k| lin.column(k)).collect();
    cols.extend(comp.iter().map(|&c| crate::linalg::unit_vector(m, c)));
    let normal_frame = Subspace::span(m, &cols[n..]);
    let target_change = Matrix::from_columns(&cols, m).inverse().expect("tangent columns plus complement form a basis");

    let y = apply_matrix(&target_change, &gs);
    let (y_t, y_n) = y.split_at(n);
    let psi = series::invert_near_identity(y_t, order)?;
    let z = series::compose(y_n, &psi, order);

    let q = z
        .iter()
        .map(|zm| {
            let quad = zm.homogeneous_part(2);
            let mut qm = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    qm[(i, j)] = quad.symmetric_coefficient(&[i, j]);
                }
            }
            qm
        })
        .collect();
    let c3 = z.iter().map(|zm| zm.homogeneous_part(3)).collect();
    let c4 = (order >= 4).then(|| z.iter().map(|zm| zm.homogeneous_part(4)).collect());

    Ok(JetChart {
        base_point: u0.to_vec(),
        chart_index: j0,
        free_coords: free,
        target_change,
        tangent_frame,
        normal_frame,
        q,
        c3,
        c4,
        order,
    })
}

/// Recomputes the adapted coordinates of `f` from the recorded chart data
/// and checks that the graph, composed with the tangent coordinates, gives
/// back the normal coordinates modulo terms above the chart order.
pub fn round_trip(f: &PolyMap, chart: &JetChart) -> Result<bool> {
    let g = centered_chart(&f.lift(), &chart.base_point, chart.chart_index, chart.order)?;
    let gs = restrict(&g, &chart.free_coords, f.domain_dim());
    let y = apply_matrix(&chart.target_change, &gs);
    let (y_t, y_n) = y.split_at(chart.n());
    let back = series::compose(&chart.graph(), y_t, chart.order);
    Ok(back.iter().zip(y_n).all(|(b, yn)| *b == yn.truncate(chart.order)))
}

pub fn second_fundamental_form(chart: &JetChart) -> QuadricSystem {
    QuadricSystem::new(chart.n(), chart.q.clone()).expect("chart quadrics are symmetric")
}

/// Class of `c3(v, v, v)` in `N / II_v(T)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThirdFormClass {
    pub residue: Vec<Scalar>,
    pub is_zero: bool,
}

pub fn refined_third_form_cube(chart: &JetChart, v: &[Scalar]) -> ThirdFormClass {
    let cube: Vec<Scalar> = chart.c3.iter().map(|c| c.eval(v)).collect();
    let image = second_fundamental_form(chart).image_at(v);
    let residue = image.reduce(&cube);
    let is_zero = residue.iter().all(Scalar::is_zero);
    ThirdFormClass { residue, is_zero }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int_vector, random_vector};

    fn mono(e: &[u32]) -> Poly {
        Poly::monomial(e.to_vec(), Scalar::one())
    }

    fn twisted_cubic() -> PolyMap {
        PolyMap::new(1, 3, false, vec![mono(&[1]), mono(&[2]), mono(&[3])]).unwrap()
    }

    fn veronese_plane() -> PolyMap {
        let c = [[1, 0], [0, 1], [2, 0], [1, 1], [0, 2]].map(|e| mono(&e)).to_vec();
        PolyMap::new(2, 5, false, c).unwrap()
    }

    #[test]
    fn linear_embedding_has_flat_graph() {
        // ℙ² → ℙ⁵, [s:t:u] ↦ [s:t:u:s+t:t−u:s+u]
        let v = |i| Poly::var(3, i);
        let comps = vec![v(0), v(1), v(2), v(0).add(&v(1)), v(1).sub(&v(2)), v(0).add(&v(2))];
        let f = PolyMap::new(3, 5, true, comps).unwrap();
        let j = chart_at(&f, &int_vector(&[2, -1, 3]), 3).unwrap();
        assert_eq!((j.n(), j.a()), (2, 3));
        assert!(j.q.iter().all(Matrix::is_zero));
        assert!(j.third_order_vanishes());
        assert!(round_trip(&f, &j).unwrap());
    }

    #[test]
    fn veronese_quadrics_span_all_forms() {
        let f = veronese_plane();
        let j = chart_at(&f, &int_vector(&[2, -3]), 3).unwrap();
        let flat: Vec<Vec<Scalar>> = j.q.iter().map(|m| m.entries().to_vec()).collect();
        assert_eq!(Matrix::from_rows(flat, 4).rank(), 3);
        assert!(round_trip(&f, &j).unwrap());
    }

    #[test]
    fn twisted_cubic_has_nonzero_third_form() {
        let f = twisted_cubic();
        let j = chart_at(&f, &int_vector(&[1]), 4).unwrap();
        assert_eq!((j.n(), j.a()), (1, 2));
        let s = second_fundamental_form(&j);
        assert_eq!(s.a(), 2);
        assert!(!refined_third_form_cube(&j, &int_vector(&[1])).is_zero);
        assert!(round_trip(&f, &j).unwrap());
    }

    #[test]
    fn quadric_surface_third_form_class_vanishes() {
        // (x, y) ↦ (x, y, xy)
        let f = PolyMap::new(2, 3, false, vec![mono(&[1, 0]), mono(&[0, 1]), mono(&[1, 1])]).unwrap();
        let j = chart_at(&f, &int_vector(&[3, -2]), 3).unwrap();
        let s = second_fundamental_form(&j);
        assert_eq!(s.quadrics()[0].rank(), 2);
        let mut st = Stream::new(5);
        for _ in 0..5 {
            let v = random_vector(2, 9, &mut st);
            assert!(refined_third_form_cube(&j, &v).is_zero);
        }
    }

    #[test]
    fn rejects_special_points_and_bad_orders() {
        // t ↦ (t², t³) is singular at 0
        let cusp = PolyMap::new(1, 2, false, vec![mono(&[2]), mono(&[3])]).unwrap();
        assert!(matches!(chart_at(&cusp, &int_vector(&[0]), 3), Err(Error::NonImmersive { rank: 0, generic: 1 })));
        assert!(chart_at(&cusp, &int_vector(&[1]), 3).is_ok());
        assert!(chart_at(&cusp, &int_vector(&[1]), 2).is_err());
        let homog = PolyMap::new(2, 1, true, vec![mono(&[1, 0]), mono(&[0, 1])]).unwrap();
        assert!(matches!(chart_at(&homog, &int_vector(&[0, 0]), 3), Err(Error::VanishingPoint)));
    }
}
