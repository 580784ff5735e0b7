//! Recomputes the reference invariants of every catalog entry with the
//! Jacobian-rank oracles and the chart pipeline, and writes them under
//! `golden/`. With `--check`, compares instead of writing.

use std::path::PathBuf;

use secdef::certify::Certifier;
use secdef::linalg::Stream;
use secdef::zoo;

fn main() -> secdef::Result<()> {
    let check = std::env::args().any(|a| a == "--check");
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden");
    let mut stale = 0;
    for entry in zoo::catalog() {
        let started = std::time::Instant::now();
        let x = zoo::compute_expected(&entry, &Stream::new(0), &Certifier::default())?;
        let text = serde_json::to_string_pretty(&x).expect("serializable") + "\n";
        let path = dir.join(format!("{}.json", entry.name));
        if check {
            if std::fs::read_to_string(&path)? != text {
                println!("stale  {}", entry.name);
                stale += 1;
            }
        } else {
            std::fs::write(&path, &text)?;
        }
        println!("{:<28} {:?} ({:.1?})", entry.name, x, started.elapsed());
    }
    if stale > 0 {
        std::process::exit(1);
    }
    Ok(())
}
