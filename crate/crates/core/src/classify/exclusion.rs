use num_integer::{Integer, Roots};
use num_traits::ToPrimitive;

use super::report::CaseReport;
use crate::dynkin::DynkinType;
use crate::error::Result;
use crate::exact::{fmt_combination, is_even_integer, rat, Rational};
use crate::lattice::{ade_lattice, nikulin_on_vector, picard_extension_search_with, Lattice, SearchOptions};

/// Discriminant of the Picard lattice of the discriminant-3 singular K3.
pub const TARGET_DISC: u64 = 3;

/// Outcome of the component-wise congruence argument for one index `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchVerdict {
    Refuted(String),
    Survives(String),
    Inconclusive(String),
}

impl BranchVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, BranchVerdict::Refuted(_))
    }

    fn text(&self) -> &str {
        match self {
            BranchVerdict::Refuted(s) | BranchVerdict::Survives(s) | BranchVerdict::Inconclusive(s) => s,
        }
    }
}

/// The argument for a primitive divisor: with `Pic = Delta + Z h`,
/// `H = n h + sum_i (component part)`, every component part has
/// denominator dividing its discriminant `d_i`, so `n | lcm(d_i)` and
/// `H^2 = t n^2 / disc` must be even. Pairing `H` with each component part
/// then gives `H^2 = 0` modulo `gcd(2 n^2, t_i^2 lcm(2, n / gcd(n, t_i)))`,
/// `t_i = n / gcd(n, d_i)`.
pub fn primitive_congruence(ty: &DynkinType, target: u64) -> Vec<(u64, u64, BranchVerdict)> {
    let disc = ty.discriminant();
    let exps: Vec<u64> = ty.components.iter().map(|&c| DynkinType::new(vec![c]).discriminant()).collect();
    let lcm = exps.iter().fold(1u64, |a, &b| a.lcm(&b));
    let mut out = vec![];
    for n in (1..=lcm).filter(|n| lcm % n == 0) {
        let num = target * n * n;
        if !num.is_multiple_of(disc) || !(num / disc).is_multiple_of(2) {
            continue;
        }
        let h = num / disc;
        let mut modulus = 2 * n * n;
        for &e in &exps {
            let t = n / n.gcd(&e);
            modulus = modulus.gcd(&(t * t * 2u64.lcm(&(n / n.gcd(&t)))));
        }
        let v = if h.is_multiple_of(modulus) {
            BranchVerdict::Survives(format!("n = {n}, H^2 = {h}: H^2 = 0 mod {modulus} holds"))
        } else {
            BranchVerdict::Refuted(format!("n = {n}, H^2 = {h}, but H^2 = 0 mod {modulus} is forced"))
        };
        out.push((n, h, v));
    }
    out
}

/// All half-integral classes `1/2 sum alpha_i G_i` (alpha in {0,1}, not all 0)
/// in the dual of each component, combined across components.
fn half_classes(ty: &DynkinType) -> Vec<Vec<Rational>> {
    let mut per: Vec<Vec<Vec<u8>>> = vec![];
    for &c in &ty.components {
        let l = ade_lattice(&DynkinType::new(vec![c]));
        let n = c.rank;
        let mut sols = vec![];
        for mask in 0u32..(1 << n) {
            let a: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
            let ok = (0..n).all(|i| {
                let s: i64 = (0..n).map(|j| l.gram()[(i, j)].to_i64().unwrap() * a[j] as i64).sum();
                s % 2 == 0
            });
            if ok {
                sols.push(a);
            }
        }
        per.push(sols);
    }
    let mut acc: Vec<Vec<u8>> = vec![vec![]];
    for sols in per {
        acc = acc
            .iter()
            .flat_map(|a| sols.iter().map(move |s| [a.clone(), s.clone()].concat()))
            .collect();
    }
    acc.into_iter()
        .filter(|a| a.contains(&1))
        .map(|a| a.iter().map(|&x| rat(x as i64, 2)).collect())
        .collect()
}

/// The second route: the index `k = [Delta-bar : Delta]` with `k^2 | disc`,
/// refuted branch by branch without enumerating glue groups.
pub fn congruence_route(ty: &DynkinType, target: u64, rep: &mut CaseReport) -> Vec<(u64, BranchVerdict)> {
    let delta = ade_lattice(ty);
    let disc = ty.discriminant();
    let mut out = vec![];
    for k in (1..=disc.sqrt()).filter(|k| disc.is_multiple_of(k * k)) {
        let d_bar = disc / (k * k);
        if d_bar == 1 {
            let v = if target % 2 == 1 {
                BranchVerdict::Refuted(format!("index {k}: discriminant 1, so H^2 = {target}, which is odd"))
            } else {
                BranchVerdict::Inconclusive(format!("index {k}: discriminant 1, H^2 = {target}"))
            };
            out.push((k, v));
            continue;
        }
        match k {
            1 => {
                let branches = primitive_congruence(ty, target);
                if branches.is_empty() {
                    out.push((1, BranchVerdict::Refuted(format!(
                        "index 1: no n dividing lcm of the component discriminants with H^2 = {target} n^2/{disc} even"
                    ))));
                }
                for (_, _, v) in branches {
                    let v = match v {
                        BranchVerdict::Refuted(s) => BranchVerdict::Refuted(format!("index 1: {s}")),
                        BranchVerdict::Survives(s) => BranchVerdict::Survives(format!("index 1: {s}")),
                        other => other,
                    };
                    out.push((1, v));
                }
            }
            2 => {
                let mut any = false;
                for v in half_classes(ty) {
                    let norm = delta.norm(&v);
                    let label = fmt_combination(&v, delta.labels());
                    if !is_even_integer(&norm) {
                        rep.note(format!("index 2: {label} has square {norm}, not even"));
                        continue;
                    }
                    let nk = nikulin_on_vector(&delta, &v);
                    rep.note(format!("index 2: {label}: parity test {nk}"));
                    if !nk.is_fail() {
                        any = true;
                        out.push((2, BranchVerdict::Survives(format!("index 2: {label} passes the parity test"))));
                    }
                }
                if !any {
                    out.push((2, BranchVerdict::Refuted(
                        "index 2: every even half-integral class fails the parity test".into(),
                    )));
                }
            }
            _ => out.push((k, BranchVerdict::Inconclusive(format!("index {k}: not handled by this route")))),
        }
    }
    out
}

/// Is there an even lattice of discriminant 3 and signature (1, 19)
/// containing the root lattice of `ty` with rank-one orthogonal complement?
/// Confirmed iff no such lattice exists (the type is excluded).
pub fn exclude_by_lattice(ty: &DynkinType) -> Result<CaseReport> {
    exclude_by_lattice_with(ty, &SearchOptions::default())
}

pub fn exclude_by_lattice_with(ty: &DynkinType, opts: &SearchOptions) -> Result<CaseReport> {
    let mut rep = CaseReport::new(format!("lattice-exclude {ty}"), "lattice exclusion");
    let delta: Lattice = ade_lattice(ty);
    rep.value("type", ty.to_string());
    rep.value("rank", ty.rank());
    rep.value("discriminant", ty.discriminant());
    rep.value("hsq_bound", opts.hsq_bound);
    rep.check("rank 19", ty.rank() == 19);

    let out = picard_extension_search_with(&delta, TARGET_DISC, opts)?;
    rep.note(format!("overlattice search: {} even overlattice(s)", out.branches.len()));
    for b in &out.branches {
        for n in &b.notes {
            rep.note(n.clone());
        }
    }
    let hs: Vec<u64> = out.extensions.iter().map(|e| e.h_square).collect();
    rep.value("extensions", out.extensions.len());
    let excluded_a = out.extensions.is_empty();

    rep.note("congruence route:");
    let route_b = congruence_route(ty, TARGET_DISC, &mut rep);
    for (_, v) in &route_b {
        rep.note(format!("  {}", v.text()));
    }
    let excluded_b = route_b.iter().all(|(_, v)| v.is_refuted());
    let agree = excluded_a == excluded_b || (!excluded_a && route_b.iter().any(|(_, v)| !v.is_refuted()));
    rep.check(
        format!("overlattice search and congruence route agree (search: {}, congruences: {})",
            if excluded_a { "excluded" } else { "survives" },
            if excluded_b { "excluded" } else { "not excluded" }),
        agree,
    );
    rep.value("excluded", excluded_a);
    if !excluded_a {
        let mut h = hs.clone();
        h.dedup();
        rep.value("h_squares", h);
    }
    rep.check("no Picard lattice exists", excluded_a);
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d10_a9_primitive_branch() {
        let t: DynkinType = "D10+A9".parse().unwrap();
        let b = primitive_congruence(&t, 3);
        assert_eq!(b.len(), 1);
        assert_eq!((b[0].0, b[0].1), (20, 30));
        assert!(b[0].2.is_refuted());
        assert!(b[0].2.text().contains("mod 20"));
    }

    #[test]
    fn d13_a6_survives_congruence() {
        let t: DynkinType = "D13+A6".parse().unwrap();
        let b = primitive_congruence(&t, 3);
        assert_eq!((b[0].0, b[0].1), (28, 84));
        assert!(!b[0].2.is_refuted());
    }
}
