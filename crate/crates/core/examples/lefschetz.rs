//! Fixed-point terms of an order-6 automorphism and the eigenvalue
//! multiplicities they force.
use alv::classify::lefschetz_report;
use alv::lefschetz::{feasible_order6_profiles, solve_multiplicities};

fn main() -> alv::Result<()> {
    println!("{}", lefschetz_report());
    println!("  c  p  q | alpha beta gamma delta");
    for p in feasible_order6_profiles() {
        let m = solve_multiplicities(p)?;
        println!("{:3}{:3}{:3} | {:5}{:5}{:6}{:6}", p.c, p.p, p.q, m.alpha, m.beta, m.gamma, m.delta);
    }
    Ok(())
}
