use std::collections::BTreeSet;

use super::construction::verify_construction;
use super::enumerate::{all_candidates, classify_index2, classify_index3, exclude_index4, exclude_index6};
use super::exclusion::exclude_by_lattice_with;
use super::report::CaseReport;
use super::tables::{indices_report, lefschetz_report};
use super::uniqueness::{uniqueness_data_with, ExtremalType, SURVIVORS};
use crate::dynkin::DynkinType;
use crate::error::Error;
use crate::lattice::SearchOptions;

/// Types removed by the lattice argument.
pub const LATTICE_EXCLUDED: [&str; 4] = ["D13+D6", "D10+D9", "D4+D15", "D10+A9"];

/// Every case report in pipeline order, plus the surviving types.
#[derive(Clone, Debug)]
pub struct TheoremOutcome {
    pub survivors: Vec<ExtremalType>,
    pub reports: Vec<CaseReport>,
}

/// The first case that did not come out confirmed, and everything before it.
#[derive(Clone, Debug)]
pub struct TheoremFailure {
    pub failing: CaseReport,
    pub reports: Vec<CaseReport>,
}

impl std::fmt::Display for TheoremFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "case {} is {}", self.failing.id, self.failing.verdict)
    }
}

impl std::error::Error for TheoremFailure {}

struct Pipeline {
    reports: Vec<CaseReport>,
}

impl Pipeline {
    fn push(&mut self, r: CaseReport) -> Result<(), Box<TheoremFailure>> {
        if r.is_confirmed() {
            self.reports.push(r);
            Ok(())
        } else {
            Err(Box::new(TheoremFailure { failing: r, reports: std::mem::take(&mut self.reports) }))
        }
    }

    fn errored(&mut self, id: String, e: Error) -> Box<TheoremFailure> {
        let mut r = CaseReport::new(id, "pipeline error");
        r.check(e.to_string(), false);
        Box::new(TheoremFailure { failing: r.finish(), reports: std::mem::take(&mut self.reports) })
    }
}

/// Runs the whole classification with the default search bound.
pub fn main_theorem() -> Result<TheoremOutcome, Box<TheoremFailure>> {
    main_theorem_with(&SearchOptions::default())
}

/// Indices, trace tables, the per-index case analyses, lattice exclusions,
/// uniqueness data and constructions, stopping at the first failed case.
pub fn main_theorem_with(opts: &SearchOptions) -> Result<TheoremOutcome, Box<TheoremFailure>> {
    let mut p = Pipeline { reports: vec![] };
    p.push(indices_report())?;
    p.push(lefschetz_report())?;
    p.push(classify_index2())?;
    p.push(classify_index3())?;
    p.push(exclude_index4())?;
    p.push(exclude_index6())?;

    let mut agg = CaseReport::new("lattice-exclusion", "lattice exclusion of the index-3 candidates");
    let mut remaining = vec![];
    let mut excluded = vec![];
    let mut excluded_reports = vec![];
    for (ty, index) in all_candidates() {
        if index != 3 {
            remaining.push((ty, index));
            continue;
        }
        let r = exclude_by_lattice_with(&ty, opts).map_err(|e| p.errored(format!("lattice-exclude {ty}"), e))?;
        let agree = r.transcript.iter().find(|s| s.text.starts_with("overlattice search and congruence route agree"));
        agg.check(format!("{ty}: search and congruences agree"), agree.is_some_and(|s| s.passed));
        if r.is_confirmed() {
            agg.note(format!("{ty}: excluded"));
            excluded.push(ty.to_string());
            excluded_reports.push(r);
        } else {
            let hs = r.values.get("h_squares").map(|v| v.to_string()).unwrap_or_default();
            agg.note(format!("{ty}: Picard lattice found, H^2 in {hs}"));
            remaining.push((ty, index));
        }
    }
    let want: BTreeSet<String> = LATTICE_EXCLUDED.iter().map(|s| s.to_string()).collect();
    let got: BTreeSet<String> = excluded.iter().cloned().collect();
    agg.value("excluded", &excluded);
    agg.check(format!("excluded set is {{{}}}", LATTICE_EXCLUDED.join(", ")), got == want);
    for r in excluded_reports {
        p.push(r)?;
    }
    p.push(agg.finish())?;

    let mut survivors = vec![];
    for (ty, _) in &remaining {
        let (e, r) = uniqueness_data_with(ty, opts).map_err(|e| p.errored(format!("basis {ty}"), e))?;
        p.push(r)?;
        survivors.push(e);
    }
    for case in 1..=7 {
        let r = verify_construction(case).map_err(|e| p.errored(format!("verify-config {case}"), e))?;
        p.push(r)?;
    }

    let mut fin = CaseReport::new("main-theorem", "exactly seven extremal types");
    let got: BTreeSet<(String, u32)> = survivors.iter().map(|e| (e.ty.to_string(), e.index)).collect();
    let want: BTreeSet<(String, u32)> = SURVIVORS.iter().map(|&(t, i)| (t.to_string(), i)).collect();
    let list: Vec<String> = survivors.iter().map(|e| format!("{} (index {}, H^2 = {})", e.ty, e.index, e.h_square)).collect();
    fin.value("survivors", &list);
    fin.check(format!("{} survivors", survivors.len()), survivors.len() == 7);
    fin.check("survivors and indices match the expected list", got == want);
    let constructed: BTreeSet<String> = p
        .reports
        .iter()
        .filter(|r| r.id.starts_with("verify-config"))
        .filter_map(|r| r.values.get("type").and_then(|v| v.as_str()).map(canonical_name))
        .collect();
    let surv_names: BTreeSet<String> = survivors.iter().map(|e| canonical_name(&e.ty.to_string())).collect();
    fin.check("every survivor is realised by a construction", constructed == surv_names);
    p.push(fin.finish())?;
    Ok(TheoremOutcome { survivors, reports: p.reports })
}

fn canonical_name(s: &str) -> String {
    s.parse::<DynkinType>().map(|t| {
        let mut c = t.components.clone();
        c.sort();
        c.reverse();
        DynkinType::new(c).to_string()
    }).unwrap_or_else(|_| s.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_types() {
        let out = main_theorem().unwrap();
        assert_eq!(out.survivors.len(), 7);
        assert!(out.survivors.iter().all(|e| e.ty.to_string() != "D10+A9"));
        let a19 = out.survivors.iter().find(|e| e.ty.to_string() == "A19").unwrap();
        assert_eq!(a19.index, 2);
    }
}
