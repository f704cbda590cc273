//! The 24-curve configurations and the seven divisors drawn inside them.
use alv::classify::verify_construction;
use alv::dynkin::{construction_divisor, shioda_inose_configuration};

fn main() -> alv::Result<()> {
    for order in [3, 2] {
        let c = shioda_inose_configuration(order)?;
        println!(
            "order {order}: {} curves, {} edges, {} fixed curves",
            c.graph.len(),
            c.graph.edges().len(),
            c.fixed.len()
        );
    }
    println!();
    for case in 1..=7 {
        let d = construction_divisor(case)?;
        let rep = verify_construction(case)?;
        println!("case {case}: {} -> {}", d.claimed, rep.verdict);
        for chain in &d.chains {
            println!("    {}", chain.join(" - "));
        }
    }
    Ok(())
}
