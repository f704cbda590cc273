//! Search for rank-20 Picard lattices containing a given rank-19 root lattice.
//!
//! ```text
//! cargo run --release --example picard_search -- D13+A6 3
//! ```

use std::time::Instant;

use alv::dynkin::DynkinType;
use alv::exact::fmt_combination;
use alv::lattice::{ade_lattice, picard_extension_search_with, SearchOptions};

fn main() -> alv::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ty: DynkinType = args.first().map(String::as_str).unwrap_or("D16+A3").parse()?;
    let target: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let nikulin = !args.iter().any(|a| a == "--no-parity");

    let delta = ade_lattice(&ty);
    let start = Instant::now();
    let out = picard_extension_search_with(&delta, target, &SearchOptions { hsq_bound: 200, nikulin })?;
    for b in &out.branches {
        for n in &b.notes {
            println!("{n}");
        }
    }
    println!("{} extension(s) in {:.2?}", out.extensions.len(), start.elapsed());
    for e in &out.extensions {
        let mut labels = delta.labels().to_vec();
        labels.push("H".into());
        println!(
            "  H^2 = {}, n = {}, e = {}",
            e.h_square,
            e.n,
            fmt_combination(&e.extension_vector, &labels)
        );
    }
    Ok(())
}
