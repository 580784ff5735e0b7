//! Polynomial parametrizations, truncated series, adapted jet charts and
//! the Jacobian-rank oracles that cross-check them.

pub mod chart;
pub mod oracle;
pub mod poly;
pub mod series;

pub use chart::{chart_at, refined_third_form_cube, round_trip, second_fundamental_form, JetChart, ThirdFormClass};
pub use oracle::{
    dimension, gauss_fiber_dimension, join_dimension, linear_project, tangent_join_dimension,
    tangent_parametrization, terracini_check, LiftData, TerraciniSample,
};
pub use poly::{Poly, PolyMap, PolyMapRecord};
