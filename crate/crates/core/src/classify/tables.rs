use std::collections::BTreeSet;

use serde_json::json;

use super::report::CaseReport;
use crate::dynkin::{admissible_labelings, count_profile, Component, DynkinType, Family, FixedProfile};
use crate::error::Result;
use crate::exact::{rat, QuadExt};
use crate::lefschetz::{
    candidate_indices, feasible_order6_profiles, holomorphic_lefschetz_number, lefschetz_system, local_term_curve,
    local_term_p, local_term_q, solve_multiplicities, step_one_solutions, CohomologyMultiplicities,
};

/// Possible canonical indices: orders acting faithfully on a rank-2
/// transcendental lattice.
pub fn indices_report() -> CaseReport {
    let mut rep = CaseReport::new("indices", "possible canonical indices");
    let idx = candidate_indices(2);
    rep.value("rank_transcendental", 2);
    rep.value("indices", &idx);
    rep.check(format!("phi(I) <= 2 exactly for I in {idx:?}"), idx == [2, 3, 4, 6]);
    rep.finish()
}

/// Local fixed-point terms of an order-6 automorphism, the count of fixed
/// points forced by the holomorphic formula, and the eigenvalue
/// multiplicities forced by the topological one.
pub fn lefschetz_report() -> CaseReport {
    let mut rep = CaseReport::new("lefschetz", "fixed loci of an order-6 automorphism");
    let base = QuadExt::new(rat(3, 1), rat(-1, 1));
    let terms = [
        ("a(P), weights (2,5)", local_term_p(), base.clone() * rat(1, 6)),
        ("a(Q), weights (3,4)", local_term_q(), base.clone() * rat(1, 12)),
        ("b(C), fixed (-2)-curve", local_term_curve(), base.clone() * rat(-1, 2)),
        ("1 + zeta6^-1", holomorphic_lefschetz_number(), base.clone() * rat(1, 2)),
    ];
    for (name, got, want) in &terms {
        rep.value(name, got.to_string());
        rep.check(format!("{name} = {got}"), got == want);
    }
    let mut forced = true;
    for c in 0..=10u64 {
        forced &= step_one_solutions(c, 10 + 1) == vec![c + 1];
    }
    rep.check("for 0 <= c <= 10 the holomorphic formula with 2l points of each kind forces l = c + 1", forced);

    let profiles = feasible_order6_profiles();
    rep.value("feasible_profiles", profiles.len());
    let mut rows = vec![];
    let mut closed = true;
    for pr in &profiles {
        let (c, p, q) = (pr.c as i64, pr.p as i64, pr.q as i64);
        let m = match solve_multiplicities(*pr) {
            Ok(m) => m,
            Err(e) => {
                rep.check(format!("(c,p,q) = ({c},{p},{q}): system solvable ({e})"), false);
                continue;
            }
        };
        let want = CohomologyMultiplicities {
            alpha: 5 * c + 2 * p + q + 6,
            beta: -c + 2 * p - q + 4,
            gamma: -c - p + q + 3,
            delta: -c - p - q + 2,
        };
        closed &= m == want;
        let sys = lefschetz_system(*pr);
        rows.push(json!({"c": c, "p": p, "q": q, "alpha": m.alpha, "beta": m.beta, "gamma": m.gamma, "delta": m.delta,
            "system": sys.iter().map(|(k, r)| format!("{k:?} = {r}")).collect::<Vec<_>>()}));
    }
    rep.value("multiplicities", rows);
    rep.check(
        format!("{} feasible (c,p,q); alpha = 5c+2p+q+6, beta = -c+2p-q+4, gamma = -c-p+q+3, delta = -c-p-q+2", profiles.len()),
        closed && profiles.len() == 10,
    );
    rep.finish()
}

/// Closed-form fixed profiles of one component, `None` if it has no
/// admissible labeling for `order`.
pub fn closed_form_profiles(c: Component, order: u32) -> Option<Vec<FixedProfile>> {
    let fp = |n, m| FixedProfile { n_curves: n, n_isolated: m };
    let r = c.rank;
    match (order, c.family) {
        (2, Family::A) if r % 2 == 1 => Some(vec![fp(r.div_ceil(2), 0)]),
        (3, Family::A) => Some(vec![match r % 3 {
            0 => fp(r / 3, r / 3 + 1),
            2 => fp((r + 1) / 3, (r + 1) / 3),
            _ => fp(r.div_ceil(3), r.div_ceil(3) - 1),
        }]),
        (3, Family::D) if r % 3 == 1 => Some(vec![fp((r - 1) / 3, (r - 1) / 3 + 2)]),
        (3, Family::D) if r.is_multiple_of(3) => Some(vec![fp(r / 3, r / 3 + 1)]),
        _ => None,
    }
}

/// Admissible f/s labelings of each component of `ty` and their fixed
/// profiles, compared with the closed-form table.
pub fn labelings_report(order: u32, ty: &DynkinType) -> Result<CaseReport> {
    let mut rep = CaseReport::new(format!("labelings order {order} {ty}"), "f/s labelings of chains and forks");
    let mut rows = vec![];
    let mut seen = BTreeSet::new();
    for &c in &ty.components {
        if !seen.insert(c) {
            continue;
        }
        let g = DynkinType::new(vec![c]).graph();
        let labs = admissible_labelings(&g, order)?;
        let profiles: BTreeSet<FixedProfile> =
            labs.iter().map(|l| count_profile(&g, l, order)).collect::<Result<_>>()?;
        let profiles: Vec<FixedProfile> = profiles.into_iter().collect();
        let table = closed_form_profiles(c, order).unwrap_or_default();
        let strings: Vec<String> = labs.iter().map(|l| l.to_string()).collect();
        rep.check(
            format!(
                "{c}: {} labeling(s), profiles (N, M) {}; table {}",
                labs.len(),
                fmt_profiles(&profiles),
                if table.is_empty() { "none".into() } else { fmt_profiles(&table) }
            ),
            profiles == table,
        );
        rows.push(json!({"component": c.to_string(), "labelings": strings, "profiles": profiles}));
    }
    rep.value("order", order);
    rep.value("components", rows);
    Ok(rep.finish())
}

fn fmt_profiles(p: &[FixedProfile]) -> String {
    if p.is_empty() {
        return "none".into();
    }
    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_confirm() {
        assert!(indices_report().is_confirmed());
        assert!(lefschetz_report().is_confirmed());
        let a4: DynkinType = "A4".parse().unwrap();
        let r = labelings_report(3, &a4).unwrap();
        assert!(r.is_confirmed());
        assert!(r.transcript[0].text.contains("(2, 1)"));
    }
}
