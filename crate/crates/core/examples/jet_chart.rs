//! Local charts: the graph of a parametrized variety over its tangent
//! space, truncated to a given order, and its second fundamental form.

use secdef::jets::{chart_at, round_trip, second_fundamental_form, Poly};
use secdef::zoo::{self, Family};

fn main() -> secdef::Result<()> {
    for family in [Family::Veronese { d: 3, m: 1 }, Family::Veronese { d: 2, m: 2 }, Family::Segre { k: 2, r: 3 }] {
        let e = zoo::build(&family)?;
        let chart = chart_at(&e.map, &e.base_point, 3)?;
        println!("{} at {:?}: n = {}, a = {}", e.name, e.base_point, chart.n(), chart.a());
        for (mu, y) in chart.graph().iter().enumerate() {
            println!("  y_{} = {}", chart.n() + mu, show(y));
        }
        println!("  third order vanishes: {}", chart.third_order_vanishes());
        println!("  chart reproduces the map: {}", round_trip(&e.map, &chart)?);
        let ii = second_fundamental_form(&chart);
        println!("  |II| = {} quadrics in {} variables", ii.a(), ii.n());
    }
    Ok(())
}

fn show(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = p
        .terms()
        .map(|(e, c)| {
            let mono: String = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("y{i}") } else { format!("y{i}^{k}") })
                .collect::<Vec<_>>()
                .join("·");
            format!("({c})·{mono}")
        })
        .collect();
    terms.join(" + ")
}
