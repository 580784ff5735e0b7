//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the table is always printed; exits nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;

use secdef::algebra::AlgebraTag;
use secdef::certify::Certifier;
use secdef::defect;
use secdef::jets::{chart_at, join_dimension, second_fundamental_form};
use secdef::linalg::Stream;
use secdef::quadric::higher_secant_dimension;
use secdef::report::{self, analyze_map, AnalysisReport, AnalyzeOptions, Format, Status};
use secdef::zoo::{self, Family, ZooEntry};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn severi(tag: AlgebraTag) -> ZooEntry {
    zoo::build(&Family::Severi(tag)).unwrap()
}

fn report_at_base(e: &ZooEntry, ks: Vec<usize>) -> Result<AnalysisReport, String> {
    let opts = AnalyzeOptions { point: Some(e.base_point.clone()), ks, ..AnalyzeOptions::default() };
    analyze_map(&e.map, &e.name, &opts).map_err(|err| format!("{}: {err}", e.name))
}

fn severi_table() -> Outcome {
    // (tag, n, a, dim τ = dim σ, a₀, r)
    let table = [
        (AlgebraTag::R, 2, 3, 4, 2, 1),
        (AlgebraTag::C, 4, 4, 7, 3, 2),
        (AlgebraTag::H, 8, 6, 13, 5, 4),
        (AlgebraTag::O, 16, 10, 25, 9, 8),
    ];
    let mut cells = Vec::new();
    for (tag, n, a, dim, a0, r) in table {
        let rep = report_at_base(&severi(tag), vec![2])?;
        let d = &rep.dims;
        let p = &rep.profile;
        ensure!(p.certified, "severi {tag}: profile not certified");
        ensure!(
            (d.n, d.a, d.dim_tau, d.dim_sigma, p.a0, p.r) == (n, a, dim, dim, a0, r),
            "severi {tag}: formula path gives {:?}",
            (d.n, d.a, d.dim_tau, d.dim_sigma, p.a0, p.r)
        );
        for q in ["n", "dim_tau", "dim_sigma"] {
            let c = rep.cross_checks.iter().find(|c| c.quantity == q).unwrap();
            ensure!(c.agrees() == Some(true), "severi {tag}: {q} formula {} oracle {:?}", c.formula, c.oracle);
        }
        ensure!(p.r + a == n + 2, "severi {tag}: rank restriction not sharp");
        let df = rep.defect.as_ref().unwrap();
        ensure!(df.fiber_dim == 0, "severi {tag}: dim F_v = {}", df.fiber_dim);
        ensure!(2 * a == n + 4, "severi {tag}: Zak bound not sharp");
        ensure!(df.rank_restriction_ok == Some(true), "severi {tag}: rank restriction verdict {:?}", df.rank_restriction_ok);
        ensure!(df.zak_bound_ok == Some(true), "severi {tag}: Zak verdict {:?}", df.zak_bound_ok);
        cells.push(format!("{tag}:({n},{a},{dim},{a0},{r})"));
    }
    Ok(cells.join(" "))
}

/// Dimension of an irreducible module of the real Clifford algebra of a
/// negative-definite form on `ℝᵏ`.
fn clifford_module_dim(k: usize) -> usize {
    [1, 2, 4, 4, 8, 8, 8, 8, 16][k]
}

fn clifford_structure() -> Outcome {
    let cert = Certifier::default();
    let mut cells = Vec::new();
    for (tag, module, kernel) in [(AlgebraTag::C, 2, 1), (AlgebraTag::H, 4, 3), (AlgebraTag::O, 8, 7)] {
        let e = severi(tag);
        let s = second_fundamental_form(&chart_at(&e.map, &e.base_point, 3).map_err(|x| x.to_string())?);
        let st = Stream::new(11);
        let p = s.certified_profile(&st.derive_named("profile"), &cert).map_err(|x| x.to_string())?;
        let vtx = defect::vertex(&s, &st.derive_named("vertex"), &cert).map_err(|x| x.to_string())?;
        let v = s.generic_vector(&p, p.bound, 32, &mut st.derive_named("v")).map_err(|x| x.to_string())?;
        let c = defect::clifford_relation_check(&s, &v, &p, &vtx).map_err(|x| format!("severi {tag}: {x}"))?;
        ensure!(c.relation_holds, "severi {tag}: relation fails");
        ensure!((c.module_dim, c.kernel_dim) == (module, kernel), "severi {tag}: dims {:?}", (c.module_dim, c.kernel_dim));
        ensure!(c.module_dim == clifford_module_dim(c.kernel_dim), "severi {tag}: module dim is not irreducible");
        let so = defect::so_membership_check(&s, &v, &p).map_err(|x| x.to_string())?;
        ensure!(so, "severi {tag}: φ_w not skew for P_v");
        cells.push(format!("{tag}: Cl({}) on dim {} sign {:+}", c.kernel_dim, c.module_dim, c.sign));
    }
    Ok(cells.join("; "))
}

fn gauss_fiber_bounds() -> Outcome {
    let cert = Certifier::default();
    let st = Stream::new(3);
    let mut cells = Vec::new();
    let bound = |e: &ZooEntry| -> Result<defect::TauGaussBound, String> {
        let s = second_fundamental_form(&chart_at(&e.map, &e.base_point, 3).map_err(|x| x.to_string())?);
        let p = s.certified_profile(&st, &cert).map_err(|x| x.to_string())?;
        defect::tau_gauss_bound_check(&e.map, s.n(), s.a(), &p, &st, &cert).map_err(|x| format!("{}: {x}", e.name))
    };
    for tag in AlgebraTag::ALL {
        let t = bound(&severi(tag))?;
        ensure!(t.fiber == t.delta_tau + 2, "severi {tag}: fiber {} δ_τ {}", t.fiber, t.delta_tau);
        cells.push(format!("{tag} {}={}+2", t.fiber, t.delta_tau));
    }
    let cone = bound(&zoo::quartic_cone())?;
    ensure!(
        (cone.fiber, cone.delta_tau, cone.meets_delta_plus_one, cone.meets_delta_plus_two) == (2, 1, true, false),
        "cone: {cone:?}"
    );
    cells.push(format!("cone {}={}+1", cone.fiber, cone.delta_tau));
    let g27 = bound(&zoo::build(&Family::Grassmannian { m: 7 }).unwrap())?;
    ensure!(g27.delta_tau == 3 && g27.fiber >= 5, "G(2,7): {g27:?}");
    cells.push(format!("G(2,7) fiber {} (δ_τ+2 = 5)", g27.fiber));
    Ok(cells.join(", "))
}

fn secant_nondegeneracy() -> Outcome {
    let cert = Certifier::default();
    let mut cells = Vec::new();
    let entries = [
        (zoo::build(&Family::Veronese { d: 3, m: 1 }).unwrap(), 3),
        (zoo::build(&Family::Veronese { d: 3, m: 2 }).unwrap(), 5),
        (zoo::conic_reembedding(), 3),
    ];
    for (e, want) in entries {
        let oracle = join_dimension(&e.map, 2, &Stream::new(4), &cert).map_err(|x| x.to_string())?;
        ensure!(oracle == want && want == (2 * e.n + 1).min(e.ambient), "{}: oracle {oracle}", e.name);
        let rep = report_at_base(&e, vec![2])?;
        ensure!(rep.dims.third_form_nonzero == Some(true), "{}: refined third form vanishes", e.name);
        ensure!(rep.dims.dim_sigma == e.n + rep.profile.a0 + 1, "{}: formula {}", e.name, rep.dims.dim_sigma);
        cells.push(format!("{} σ={oracle}", e.name));
    }
    Ok(cells.join(", "))
}

fn superadditivity() -> Outcome {
    let cert = Certifier::default();
    let mut cells = Vec::new();
    for (e, sigma3) in [(zoo::build(&Family::Segre { k: 3, r: 3 }).unwrap(), 8), (severi(AlgebraTag::O), 26)] {
        let s = second_fundamental_form(&chart_at(&e.map, &e.base_point, 3).map_err(|x| x.to_string())?);
        let st = Stream::new(5);
        let p = s.certified_profile(&st, &cert).map_err(|x| x.to_string())?;
        let mut vals = Vec::new();
        for k in [2, 3] {
            let h = higher_secant_dimension(&s, k, &p, &st, &cert).map_err(|x| x.to_string())?;
            let oracle = join_dimension(&e.map, k, &st, &cert).map_err(|x| x.to_string())?;
            ensure!(h.value == oracle, "{} σ_{k}: formula {} oracle {oracle}", e.name, h.value);
            ensure!(h.within_bound, "{} σ_{k}: {} exceeds {}", e.name, h.value, h.bound);
            vals.push(oracle);
        }
        ensure!(vals[1] == sigma3, "{}: σ₃ = {}", e.name, vals[1]);
        cells.push(format!("{} σ₂={} σ₃={}", e.name, vals[0], vals[1]));
    }
    Ok(cells.join(", "))
}

fn property_suites() -> Outcome {
    let cert = Certifier::default();
    let mut defective = 0;
    let mut vectors = 0;
    for e in zoo::catalog() {
        let chart = chart_at(&e.map, &e.base_point, 3).map_err(|x| x.to_string())?;
        ensure!(secdef::jets::round_trip(&e.map, &chart).map_err(|x| x.to_string())?, "{}: chart round trip", e.name);
        for t in secdef::jets::terracini_check(&e.map, 2, 16, &mut Stream::new(6)) {
            ensure!(t.jacobian_rank == t.span_dim, "{}: Terracini {t:?}", e.name);
        }
        let s = second_fundamental_form(&chart);
        let st = Stream::new(7);
        let p = s.certified_profile(&st, &cert).map_err(|x| x.to_string())?;
        if !secdef::quadric::is_tangentially_degenerate(&s, &p) {
            continue;
        }
        defective += 1;
        let mut vs = st.derive_named("vectors");
        for _ in 0..3 {
            let v = s.generic_vector(&p, p.bound, 32, &mut vs).map_err(|x| x.to_string())?;
            let c = defect::structure_checks(&s, &v).map_err(|x| x.to_string())?;
            ensure!(c.all(), "{}: {c:?}", e.name);
            vectors += 1;
        }
    }
    Ok(format!("{defective} defective entries, {vectors} generic vectors, all entries round-trip and pass Terracini"))
}

fn determinism_and_robustness() -> Outcome {
    let e = severi(AlgebraTag::R);
    let opts = AnalyzeOptions { seed: 42, ..AnalyzeOptions::default() };
    let a = report::render(&analyze_map(&e.map, "severi_R", &opts).map_err(|x| x.to_string())?, Format::Json);
    let b = report::render(&analyze_map(&e.map, "severi_R", &opts).map_err(|x| x.to_string())?, Format::Json);
    ensure!(a == b, "reports differ under a fixed seed");
    let back = report::render(&report::parse_report(&a).map_err(|x| x.to_string())?, Format::Json);
    ensure!(a == back, "JSON round trip is not byte-identical");

    let bin = env!("CARGO_BIN_EXE_secdef");
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/diagonal_6.json");
    let run = |extra: &[&str]| {
        Command::new(bin)
            .args(["analyze", "--input", fixture, "--bound", "1"])
            .args(extra)
            .output()
            .map(|o| o.status.code())
            .map_err(|x| x.to_string())
    };
    let failing = run(&["--escalations", "0"])?;
    ensure!(failing == Some(2), "low-bound run exited {failing:?}");
    let cured = run(&["--escalations", "6"])?;
    ensure!(cured == Some(0), "escalated run exited {cured:?}");
    let rep = report::parse_report(&a).map_err(|x| x.to_string())?;
    ensure!(rep.verdicts.iter().all(|v| v.status != Status::Fail), "severi R has failing verdicts");
    Ok("identical bytes; bound 1 exits 2, cured by 6 escalations".into())
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 7] = [
        ("Severi table", severi_table),
        ("Clifford structure", clifford_structure),
        ("Gauss-fiber bounds", gauss_fiber_bounds),
        ("secant nondegeneracy", secant_nondegeneracy),
        ("superadditivity", superadditivity),
        ("property suites", property_suites),
        ("determinism and robustness", determinism_and_robustness),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
