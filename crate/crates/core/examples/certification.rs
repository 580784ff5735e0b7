//! Certification under an adversarial sampling bound: with integers drawn
//! from {−1, 0, 1}, rank samples of the diagonal system disagree, and only
//! enlarging the bound resolves it.

use secdef::certify::Certifier;
use secdef::linalg::Stream;
use secdef::quadric::QuadricSystem;

fn main() -> secdef::Result<()> {
    let s = QuadricSystem::from_json(include_str!("../tests/fixtures/diagonal_6.json"))?;
    let st = Stream::new(0);
    for (trials, escalations) in [(5, 0), (50, 0), (5, 6)] {
        let cert = Certifier::new(trials, 1, escalations)?;
        match s.certified_profile(&st, &cert) {
            Ok(p) => println!("trials {trials:>2}, escalations {escalations}: certified a0 = {} at bound {}", p.a0, p.bound),
            Err(e) => println!("trials {trials:>2}, escalations {escalations}: {e}"),
        }
    }
    Ok(())
}
