//! Runs both lattice arguments on every index-3 candidate.
use alv::classify::{all_candidates, exclude_by_lattice};

fn main() -> alv::Result<()> {
    for (ty, idx) in all_candidates() {
        if idx != 3 {
            continue;
        }
        let t = std::time::Instant::now();
        let rep = exclude_by_lattice(&ty)?;
        println!("{rep}");
        println!("  ({} ms)\n", t.elapsed().as_millis());
    }
    Ok(())
}
