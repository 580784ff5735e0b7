//! The variety catalog with its reference invariants.

use secdef::zoo;

fn main() {
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    println!("{:<30} {:>3} {:>4} {:>3} {:>3} {:>3} {:>3} {:>3} {:>6}", "entry", "n", "amb", "τ", "σ", "σ₃", "a0", "r", "fiber");
    for e in zoo::catalog() {
        let Some(x) = zoo::expected(&e) else { continue };
        println!(
            "{:<30} {:>3} {:>4} {:>3} {:>3} {:>3} {:>3} {:>3} {:>6}",
            e.name,
            x.n,
            x.ambient,
            x.dim_tau,
            x.dim_sigma,
            opt(x.sigma3),
            x.a0,
            x.r,
            opt(x.tau_gauss_fiber)
        );
    }
}
