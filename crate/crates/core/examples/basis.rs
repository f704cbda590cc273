//! Uniqueness data for a surviving type: H^2, glue, and an explicit Z-basis
//! of the rank-20 lattice.
use alv::classify::uniqueness_data;

fn main() -> alv::Result<()> {
    let ty = std::env::args().nth(1).unwrap_or_else(|| "D16+A3".into()).parse()?;
    let (data, rep) = uniqueness_data(&ty)?;
    println!("{rep}");
    println!("{}", serde_json::to_string_pretty(&data).expect("serializable"));
    Ok(())
}
