//! The canonical-index case analysis: which indices occur and which
//! divisor types each allows.

use alv::classify::{classify_index2, classify_index3, exclude_index4, exclude_index6};
use alv::lefschetz::candidate_indices;

fn main() {
    println!("candidate indices for a rank-2 transcendental lattice: {:?}\n", candidate_indices(2));
    for rep in [classify_index2(), classify_index3(), exclude_index4(), exclude_index6()] {
        println!("{rep}");
    }
}
