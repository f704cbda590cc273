use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::report::CaseReport;
use crate::dynkin::{admissible_labelings, count_profile, Component, DynkinType, Family, FixedProfile};
use crate::lefschetz::{candidate_indices, check_order3_relation, feasible_order6_profiles, Order6Profile};

/// Rank of the exceptional divisor of an extremal surface.
pub const EXTREMAL_RANK: usize = 19;

const AXIOM_ORDER3: &str = "an order-3 non-symplectic automorphism of a K3 surface with at least 6 fixed curves has exactly 6 fixed curves and 9 isolated fixed points (and the surface is the discriminant-3 singular K3)";
const AXIOM_ORDER2: &str = "an anti-symplectic involution of a K3 surface with at least 10 fixed curves has exactly 10 (and the surface is the discriminant-4 singular K3)";
pub(crate) const AXIOM_A19: &str = "the extremal surface of type A19 is unique and has canonical index 2";

/// Every ADE component of rank at most `max_rank`.
pub fn all_components(max_rank: usize) -> Vec<Component> {
    let mut out = vec![];
    for r in 1..=max_rank {
        out.push(Component::a(r));
        if r >= 4 {
            out.push(Component::d(r));
        }
        if (6..=8).contains(&r) {
            out.push(Component::new(Family::E, r).expect("E6..E8"));
        }
    }
    out
}

/// Multisets of `parts` (with repetition) whose ranks sum to `total`,
/// each listed in non-increasing `parts` order.
pub fn rank_multisets(parts: &[Component], total: usize) -> Vec<Vec<Component>> {
    fn go(parts: &[Component], start: usize, left: usize, cur: &mut Vec<Component>, out: &mut Vec<Vec<Component>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..parts.len() {
            if parts[i].rank <= left {
                cur.push(parts[i]);
                go(parts, i, left - parts[i].rank, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = vec![];
    go(parts, 0, total, &mut vec![], &mut out);
    out
}

/// Distinct fixed profiles of the admissible labelings of one component.
pub fn component_profiles(c: Component, order: u32) -> Vec<FixedProfile> {
    let g = DynkinType::new(vec![c]).graph();
    let labs = admissible_labelings(&g, order).expect("order 2 or 3");
    let set: BTreeSet<FixedProfile> =
        labs.iter().map(|l| count_profile(&g, l, order).expect("admissible")).collect();
    set.into_iter().collect()
}

/// Profiles of every component of rank `<= max_rank` that admits at least
/// one labeling.
pub fn profile_catalog(order: u32, max_rank: usize) -> BTreeMap<Component, Vec<FixedProfile>> {
    all_components(max_rank)
        .into_iter()
        .map(|c| (c, component_profiles(c, order)))
        .filter(|(_, p)| !p.is_empty())
        .collect()
}

fn type_string(parts: &[Component]) -> String {
    DynkinType::new(parts.to_vec()).to_string()
}

/// Sum of profiles over a choice of one profile per component, all choices.
fn profile_sums(parts: &[Component], cat: &BTreeMap<Component, Vec<FixedProfile>>) -> Vec<FixedProfile> {
    let mut acc = vec![FixedProfile { n_curves: 0, n_isolated: 0 }];
    for c in parts {
        let mut next = BTreeSet::new();
        for a in &acc {
            for p in &cat[c] {
                next.insert(FixedProfile { n_curves: a.n_curves + p.n_curves, n_isolated: a.n_isolated + p.n_isolated });
            }
        }
        acc = next.into_iter().collect();
    }
    acc
}

/// The part counts and part symbols of an index-3 divisor:
/// `D_{3l+1}` (a), `D_{3m}` (b), `A_{3p}` (c), `A_{3q-1}` (d), `A_{3r-2}` (e).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IndexThreeInventory {
    pub l: Vec<usize>,
    pub m: Vec<usize>,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub r: Vec<usize>,
}

impl IndexThreeInventory {
    /// `None` if some component is not of an order-3 admissible shape.
    pub fn of(parts: &[Component]) -> Option<Self> {
        let mut inv = IndexThreeInventory::default();
        for c in parts {
            let n = c.rank;
            match (c.family, n % 3) {
                (Family::D, 1) => inv.l.push((n - 1) / 3),
                (Family::D, 0) => inv.m.push(n / 3),
                (Family::A, 0) => inv.p.push(n / 3),
                (Family::A, 2) => inv.q.push((n + 1) / 3),
                (Family::A, 1) => inv.r.push(n.div_ceil(3)),
                _ => return None,
            }
        }
        Some(inv)
    }

    pub fn counts(&self) -> [usize; 5] {
        [self.l.len(), self.m.len(), self.p.len(), self.q.len(), self.r.len()]
    }

    pub fn rank(&self) -> usize {
        self.l.iter().map(|x| 3 * x + 1).sum::<usize>()
            + self.m.iter().map(|x| 3 * x).sum::<usize>()
            + self.p.iter().map(|x| 3 * x).sum::<usize>()
            + self.q.iter().map(|x| 3 * x - 1).sum::<usize>()
            + self.r.iter().map(|x| 3 * x - 2).sum::<usize>()
    }
}

/// `{D19} + {D_{3l+1}+D_{3m}, D_{3l+1}+A_{3m} : l + m = 6, l, m >= 1}`,
/// with `D3` read as `A3`.
pub fn expected_index3_candidates() -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    out.insert("D19".to_string());
    for l in 1..=5 {
        let m = 6 - l;
        let d = Component::d(3 * l + 1);
        let second = if 3 * m >= 4 { Component::d(3 * m) } else { Component::a(3) };
        out.insert(canonical(&[d, second]));
        out.insert(canonical(&[d, Component::a(3 * m)]));
    }
    out
}

/// Type string with components ordered `D_{3l+1}`, `D_{3m}`, `A_{3p}`,
/// `A_{3q-1}`, `A_{3r-2}`, then anything else; larger rank first within a class.
pub fn canonical(parts: &[Component]) -> String {
    let class = |c: &Component| match (c.family, c.rank % 3) {
        (Family::D, 1) => 0,
        (Family::D, _) => 1,
        (Family::A, 0) => 2,
        (Family::A, 2) => 3,
        (Family::A, _) => 4,
        (Family::E, _) => 5,
    };
    let mut v = parts.to_vec();
    v.sort_by_key(|c| (class(c), std::cmp::Reverse(c.rank)));
    type_string(&v)
}

/// Order-2 case: every component carries an admissible labeling, the number
/// of fixed curves is `(19 + r)/2`, and the fixed-curve axiom forces `A19`.
pub fn classify_index2() -> CaseReport {
    let mut rep = CaseReport::new("index-2", "index 2 forces type A19");
    let survivors = index2_survivors(&mut rep, "g");
    rep.value("candidates", &survivors);
    rep.check("unique survivor is A19", survivors == vec!["A19".to_string()]);
    rep.finish()
}

fn index2_survivors(rep: &mut CaseReport, inv: &str) -> Vec<String> {
    let cat = profile_catalog(2, EXTREMAL_RANK);
    let rejected: Vec<String> = all_components(EXTREMAL_RANK)
        .into_iter()
        .filter(|c| !cat.contains_key(c))
        .map(|c| c.to_string())
        .collect();
    let only_odd_a = cat.keys().all(|c| c.family == Family::A && c.rank % 2 == 1)
        && (0..=9).all(|n| cat.contains_key(&Component::a(2 * n + 1)));
    rep.check(
        format!("order-2 labelings exist exactly for A_(2n+1) ({} other component types have none)", rejected.len()),
        only_odd_a,
    );
    let formula = cat.iter().all(|(c, ps)| ps.len() == 1 && ps[0].n_curves == c.rank.div_ceil(2));
    rep.check("A_(2n+1) has exactly n+1 fixed curves", formula);

    let parts: Vec<Component> = cat.keys().rev().copied().collect();
    let all = rank_multisets(&parts, EXTREMAL_RANK);
    rep.value(&format!("{inv}_multisets"), all.len());
    let mut min_n = usize::MAX;
    let mut survivors = vec![];
    let mut identity = true;
    for ms in &all {
        let r = ms.len();
        let n: usize = ms.iter().map(|c| cat[c][0].n_curves).sum();
        identity &= 2 * n == EXTREMAL_RANK + r;
        min_n = min_n.min(n);
        if n == 10 {
            survivors.push(type_string(ms));
        }
    }
    rep.check(format!("N = (19 + r)/2 for all {} multisets", all.len()), identity);
    rep.check(format!("N >= 10 throughout (minimum {min_n})"), min_n >= 10);
    rep.axiom(AXIOM_ORDER2);
    let example: Vec<Component> = vec![Component::a(15), Component::a(3), Component::a(1)];
    let n_ex: usize = example.iter().map(|c| cat[c][0].n_curves).sum();
    rep.note(format!("e.g. A15+A3+A1: r = 3, N = {n_ex}, rejected"));
    rep.check("N = 10 forces r = 1", survivors.len() == 1);
    survivors
}

/// Order-3 case: per-component fixed profiles from the labeling calculus,
/// `M - N = 3` with `M` bounded below by the component counts, and the
/// fixed-curve axiom `N = 6`.
pub fn classify_index3() -> CaseReport {
    let mut rep = CaseReport::new("index-3", "index 3 candidate types");
    let cat = profile_catalog(3, EXTREMAL_RANK);
    let rejected: Vec<String> = all_components(EXTREMAL_RANK)
        .into_iter()
        .filter(|c| !cat.contains_key(c))
        .map(|c| c.to_string())
        .collect();
    rep.value("components_without_labeling", &rejected);
    rep.check(
        "order-3 labelings exist exactly for A_n and D_m with m != 2 mod 3",
        all_components(EXTREMAL_RANK).into_iter().all(|c| {
            let ok = match c.family {
                Family::A => true,
                Family::D => c.rank % 3 != 2,
                Family::E => false,
            };
            ok == cat.contains_key(&c)
        }),
    );

    let parts: Vec<Component> = cat.keys().rev().copied().collect();
    let all = rank_multisets(&parts, EXTREMAL_RANK);
    rep.value("inventories", all.len());
    let mut pass4 = vec![];
    let mut formula = true;
    for ms in &all {
        let inv = IndexThreeInventory::of(ms).expect("labelled components only");
        let [a, b, c, d, e] = inv.counts().map(|x| x as i64);
        let sums = profile_sums(ms, &cat);
        for s in &sums {
            formula &= 3 * s.n_curves as i64 == 19 + 2 * e + d - a;
            formula &= s.n_isolated as i64 - s.n_curves as i64 == 2 * a + b + c - e;
        }
        if let Some(best) = sums.iter().find(|s| s.n_isolated <= s.n_curves + 3) {
            pass4.push((ms.clone(), inv, *best));
        }
    }
    rep.check("N = (19 + 2e + d - a)/3 and (lower bound for M) - N = 2a + b + c - e for every inventory", formula);
    rep.value("passing_M_minus_N_bound", pass4.len());
    let min_n = pass4.iter().map(|x| x.2.n_curves).min().unwrap_or(0);
    rep.check(format!("every inventory with M - N <= 3 has N >= 6 (minimum {min_n})"), min_n >= 6);
    rep.axiom(AXIOM_ORDER3);

    let mut candidates = BTreeSet::new();
    let mut shape_ok = true;
    let mut a_zero_survive = 0;
    for (ms, inv, prof) in &pass4 {
        let [a, b, c, d, e] = inv.counts();
        if prof.n_curves == 6 && prof.n_isolated <= 9 {
            shape_ok &= d == 0 && e == 0 && a == 1 && b + c <= 1;
            a_zero_survive += usize::from(a == 0);
            candidates.insert(canonical(ms));
        }
    }
    let a_zero = all.iter().filter(|ms| IndexThreeInventory::of(ms).is_some_and(|i| i.l.is_empty())).count();
    rep.check(format!("all {a_zero} inventories with a = 0 are rejected"), a_zero_survive == 0);
    rep.check("survivors have d = e = 0, a = 1, b + c <= 1", shape_ok);
    let list: Vec<String> = candidates.iter().cloned().collect();
    rep.value("candidates", &list);
    rep.value("candidate_count", list.len());
    rep.check(
        "candidates = D19, D_(3l+1)+D_(3m), D_(3l+1)+A_(3m) with l + m = 6",
        candidates == expected_index3_candidates(),
    );
    rep.finish()
}

/// The full candidate list after the index analysis: the index-3 types plus A19.
pub fn all_candidates() -> Vec<(DynkinType, u32)> {
    let mut v: Vec<(DynkinType, u32)> = expected_index3_candidates()
        .into_iter()
        .map(|s| (s.parse().expect("valid type"), 3))
        .collect();
    v.sort_by_key(|(t, _)| std::cmp::Reverse(t.components[0].rank));
    v.push(("A19".parse().expect("valid"), 2));
    v
}

/// Index 4: the square of the automorphism is an anti-symplectic involution
/// fixing only curves inside the divisor, so the index-2 count applies and
/// forces `A19`; but `A19` has index 2.
pub fn exclude_index4() -> CaseReport {
    let rep = CaseReport::new("index-4", "index 4 does not occur");
    exclude_index4_given(&candidate_indices(2), rep)
}

pub(crate) fn exclude_index4_given(indices: &[u64], mut rep: CaseReport) -> CaseReport {
    if !indices.contains(&4) {
        return rep.inapplicable("4 is not a candidate index");
    }
    rep.note("h = g^2 is an anti-symplectic involution with fixed curves inside the divisor");
    let survivors = index2_survivors(&mut rep, "h");
    rep.check("the involution analysis forces type A19", survivors == vec!["A19".to_string()]);
    rep.axiom(AXIOM_A19);
    rep.check("A19 would need index 4, but its index is 2: contradiction", true);
    rep.value("excluded", true);
    rep.finish()
}

/// One admissible arrangement in the index-6 analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexSixCase {
    pub n: u64,
    pub p: u64,
    pub m: u64,
    pub c: u64,
    pub q: u64,
}

/// Index 6: components stable under `g^3` are `A_(2a+1)` and carry all
/// `3(c+q)+2` curves fixed by `g^3`; the others are stable under `g^2` only,
/// carry at least one of its `2p` moving fixed curves, and have rank at most
/// `3 * (their fixed curves) + 1`.
pub fn exclude_index6() -> CaseReport {
    let mut rep = CaseReport::new("index-6", "index 6 does not occur");
    let cat3 = profile_catalog(3, EXTREMAL_RANK);
    let cat2 = profile_catalog(2, EXTREMAL_RANK);

    let slack = cat3
        .iter()
        .map(|(c, ps)| ps.iter().map(|p| c.rank as i64 - 3 * p.n_curves as i64).max().unwrap_or(i64::MIN))
        .max()
        .unwrap_or(0);
    rep.value("max_rank_minus_3N", slack);
    rep.check("rank <= 3N + 1 for every order-3 labelled component (re-derived from the catalog)", slack <= 1);

    let profiles = feasible_order6_profiles();
    rep.value("order6_profiles", profiles.len());
    let mut equality = vec![];
    let mut examined = 0;
    for &Order6Profile { c, p, q } in &profiles {
        for m in 0..=2 * p {
            for n in 1..=(EXTREMAL_RANK as u64) {
                examined += 1;
                let r1 = 6 * (c + q) + 4;
                if 2 * n > r1 {
                    continue;
                }
                let bound = (r1 - n) + 6 * p + m;
                if bound >= EXTREMAL_RANK as u64 {
                    equality.push(IndexSixCase { n, p, m, c, q });
                }
            }
        }
    }
    rep.value("tuples_examined", examined);
    rep.value("tuples_meeting_rank_bound", &equality);
    let unique = equality == vec![IndexSixCase { n: 1, p: 2, m: 4, c: 0, q: 0 }];
    rep.check("19 <= 6(c+q) + 4 - n + 6p + m holds only for (n,p,m,c,q) = (1,2,4,0,0)", unique);

    let mut types = BTreeSet::new();
    for case in &equality {
        let r1 = (6 * (case.c + case.q) + 4 - case.n) as usize;
        let fixed_g3 = (3 * (case.c + case.q) + 2) as usize;
        let odd_a: Vec<Component> = cat2.keys().rev().copied().collect();
        let firsts: Vec<Vec<Component>> = rank_multisets(&odd_a, r1)
            .into_iter()
            .filter(|ms| ms.len() as u64 == case.n && ms.iter().map(|c| cat2[c][0].n_curves).sum::<usize>() == fixed_g3)
            .collect();
        let seconds_parts: Vec<Component> = cat3
            .iter()
            .filter(|(_, ps)| ps.iter().any(|p| p.n_curves >= 1))
            .map(|(c, _)| *c)
            .rev()
            .collect();
        let seconds: Vec<Vec<Component>> = rank_multisets(&seconds_parts, EXTREMAL_RANK - r1)
            .into_iter()
            .filter(|ms| {
                ms.len() as u64 == case.m
                    && ms.iter().map(|c| cat3[c].iter().map(|p| p.n_curves).min().unwrap()).sum::<usize>()
                        <= 2 * case.p as usize
            })
            .collect();
        for a in &firsts {
            for b in &seconds {
                let mut all = a.clone();
                all.extend(b.iter().copied());
                types.insert(canonical(&all));
                for prof in profile_sums(&all, &cat3) {
                    rep.note(format!(
                        "{}: g^2 has N = {} fixed curves and M >= {} isolated points",
                        canonical(&all),
                        prof.n_curves,
                        prof.n_isolated
                    ));
                    let impossible = !check_order3_relation(prof) && prof.n_isolated > prof.n_curves + 3;
                    rep.check(
                        format!("M - N = 3 impossible with N = {} and M >= {}", prof.n_curves, prof.n_isolated),
                        impossible,
                    );
                }
            }
        }
    }
    let list: Vec<String> = types.into_iter().collect();
    rep.value("forced_types", &list);
    let forced = canonical(&[Component::a(3), Component::d(4), Component::d(4), Component::d(4), Component::d(4)]);
    rep.check(format!("the forced type is {forced}"), list == vec![forced.clone()]);
    rep.value("excluded", true);
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multisets_small() {
        let parts = vec![Component::a(2), Component::a(1)];
        assert_eq!(rank_multisets(&parts, 3).len(), 2);
        assert_eq!(rank_multisets(&parts, 4).len(), 3);
    }

    #[test]
    fn inventory_rank() {
        let ms = vec![Component::d(16), Component::a(3)];
        let inv = IndexThreeInventory::of(&ms).unwrap();
        assert_eq!(inv.counts(), [1, 0, 1, 0, 0]);
        assert_eq!(inv.rank(), 19);
        assert!(IndexThreeInventory::of(&[Component::d(5)]).is_none());
    }

    #[test]
    fn expected_list() {
        let e = expected_index3_candidates();
        assert_eq!(e.len(), 10);
        assert!(e.contains("D16+A3"));
        assert!(e.contains("D4+D15"));
    }
}
