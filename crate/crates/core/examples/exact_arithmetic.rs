//! Smith form, determinants and the field Q(sqrt(-3)).
use alv::exact::{rat, smith_normal_form, IntMatrix, QuadExt};

fn main() -> alv::Result<()> {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let s = smith_normal_form(&m);
    println!("det = {}", m.det()?);
    println!("invariant factors = {:?}", s.diagonal().iter().map(|d| d.to_string()).collect::<Vec<_>>());
    assert_eq!(&(&s.u * &m) * &s.v, s.d);

    let z = QuadExt::zeta6();
    println!("zeta6 = {z}, zeta6^6 = {}", z.pow(6));
    let one_minus = QuadExt::one() - z.clone();
    println!("1 - zeta6 = {one_minus}, norm {}", one_minus.norm());
    let t = (QuadExt::from_int(3) - QuadExt::sqrt_m3()) * rat(1, 6);
    println!("(3 - sqrt(-3))/6 = {t}, inverse {}", t.inv().expect("nonzero"));
    Ok(())
}
