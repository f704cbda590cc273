//! The full pipeline, one line per case and a table of the survivors.
use alv::classify::main_theorem;

fn main() {
    let t = std::time::Instant::now();
    match main_theorem() {
        Ok(out) => {
            for r in &out.reports {
                println!("{:<12} {}", r.verdict.to_string(), r.id);
            }
            println!("\n{:<8} {:>5} {:>5} {:>4}", "type", "index", "H^2", "n");
            for e in &out.survivors {
                println!("{:<8} {:>5} {:>5} {:>4}", e.ty.to_string(), e.index, e.h_square, e.n);
            }
        }
        Err(fail) => {
            println!("{}", fail.failing);
            std::process::exit(1);
        }
    }
    println!("\n{:.2?}", t.elapsed());
}
