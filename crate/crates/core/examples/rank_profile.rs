//! Rank profiles of quadric systems: generic rank of the contraction map,
//! its kernel, annihilator and the singular locus of the annihilating
//! subsystem, certified by repeated random sampling.

use secdef::certify::Certifier;
use secdef::jets::{chart_at, second_fundamental_form};
use secdef::linalg::Stream;
use secdef::quadric::{secant_dimension, tangential_dimension, QuadricSystem};
use secdef::zoo;

fn main() -> secdef::Result<()> {
    let cert = Certifier::default();
    let fixture = include_str!("../tests/fixtures/diagonal_6.json");
    let diagonal = QuadricSystem::from_json(fixture)?;
    show("diagonal_6", &diagonal, &cert)?;
    for name in ["segre_3_3", "severi_H", "veronese_3_2"] {
        let e = zoo::by_name(name)?;
        let s = second_fundamental_form(&chart_at(&e.map, &e.base_point, 3)?);
        show(name, &s, &cert)?;
    }
    Ok(())
}

fn show(name: &str, s: &QuadricSystem, cert: &Certifier) -> secdef::Result<()> {
    let p = s.certified_profile(&Stream::new(1), cert)?;
    println!(
        "{name:<14} n={:<2} a={:<2} a0={:<2} r={:<2} ker={:<2} ann={:<2} singloc={:<2} bound={:<3} dim τ={} dim σ≤{}",
        s.n(),
        s.a(),
        p.a0,
        p.r,
        p.dim_ker,
        p.dim_ann,
        p.dim_singloc,
        p.bound,
        tangential_dimension(s, &p),
        secant_dimension(s, &p, true),
    );
    Ok(())
}
