//! End-to-end analysis of a catalog variety, rendered as text and JSON.
//!
//! `cargo run --example analyze_report -- segre_3_3`

use secdef::report::{self, AnalyzeOptions, Format, Input, Status};
use secdef::zoo;

fn main() -> secdef::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "severi_C".into());
    let e = zoo::by_name(&name)?;
    let input = Input::Map(e.map);
    let r = report::analyze(&input, &name, &AnalyzeOptions::default())?;
    print!("{}", report::render(&r, Format::Text));
    let failed: Vec<_> = r.verdicts.iter().filter(|v| v.status == Status::Fail).map(|v| v.name.as_str()).collect();
    println!("failed: {failed:?}");
    let json = report::render(&r, Format::Json);
    assert_eq!(report::parse_report(&json)?, r);
    println!("JSON report: {} bytes, round-trips", json.len());
    Ok(())
}
