//! Jacobian-rank oracles: dimensions of secant and tangent varieties from
//! random points, and the Terracini comparison behind them.

use secdef::certify::Certifier;
use secdef::jets::{dimension, gauss_fiber_dimension, join_dimension, tangent_join_dimension, terracini_check};
use secdef::linalg::Stream;
use secdef::zoo;

fn main() -> secdef::Result<()> {
    let cert = Certifier::default();
    let root = Stream::new(0);
    println!("{:<24} {:>3} {:>4} {:>3} {:>3} {:>3} {:>6}", "variety", "n", "amb", "τ", "σ", "σ₃", "fiber");
    for name in ["veronese_2_2", "segre_3_3", "severi_C", "grassmannian_2_6", "linear_2_5"] {
        let e = zoo::by_name(name)?;
        let st = root.derive_named(name);
        let n = dimension(&e.map, &st, &cert)?;
        let tau = tangent_join_dimension(&e.map, &st, &cert)?;
        let sigma = join_dimension(&e.map, 2, &st, &cert)?;
        let sigma3 = join_dimension(&e.map, 3, &st, &cert)?;
        let fiber = gauss_fiber_dimension(&e.map, &st, &cert)?;
        println!("{:<24} {:>3} {:>4} {:>3} {:>3} {:>3} {:>6}", name, n, e.ambient, tau, sigma, sigma3, fiber);
    }

    // Terracini: the join map's Jacobian rank equals dim(T̂_x + T̂_y)
    let e = zoo::by_name("segre_3_3")?;
    for s in terracini_check(&e.map, 3, 16, &mut root.derive_named("terracini")) {
        println!("segre_3_3: Jacobian rank {} vs span {}", s.jacobian_rank, s.span_dim);
    }
    Ok(())
}
