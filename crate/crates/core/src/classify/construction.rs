use serde_json::json;

use super::report::CaseReport;
use crate::dynkin::{
    check_labeling, construction_divisor, count_profile, shioda_inose_configuration, FsLabeling, Tag,
};
use crate::error::Result;

/// Checks divisor `case` (1..=7) inside its curve configuration: the induced
/// Dynkin type, rank 19, every fixed curve in the support and every
/// component touching the fixed locus.
pub fn verify_construction(case: usize) -> Result<CaseReport> {
    let d = construction_divisor(case)?;
    let conf = shioda_inose_configuration(d.surface)?;
    let g = &conf.graph;
    let mut rep = CaseReport::new(format!("verify-config {case}"), "explicit divisors in the curve configurations");
    rep.value("case", case);
    rep.value("surface_order", d.surface);
    rep.value("claimed", d.claimed.to_string());

    let mut verts = vec![];
    for name in d.curves() {
        verts.push(g.vertex(name)?);
    }
    let mut sorted = verts.clone();
    sorted.sort_unstable();
    sorted.dedup();
    rep.check(format!("{} distinct curves", sorted.len()), sorted.len() == verts.len());
    rep.check("rank 19", verts.len() == 19);

    let induced = g.induced(&verts);
    let ty = induced.dynkin_type();
    let found = ty.as_ref().map(|t| t.to_string()).unwrap_or_else(|| "not ADE".into());
    rep.value("type", &found);
    rep.check(
        format!("induced subgraph has type {found}, claimed {}", d.claimed),
        ty.as_ref().is_some_and(|t| t.same_multiset(&d.claimed)),
    );
    rep.note(format!("all {} curves of the configuration are stable", g.len()));

    let missing: Vec<&str> = conf.fixed.iter().filter(|v| !verts.contains(v)).map(|&v| g.name(v)).collect();
    rep.check(
        format!("all {} fixed curves lie in the support{}", conf.fixed.len(), if missing.is_empty() { String::new() } else { format!(" (missing {missing:?})") }),
        missing.is_empty(),
    );

    let mut comps = vec![];
    let mut all_touch = true;
    for comp in induced.components() {
        let names: Vec<String> = comp.iter().map(|&i| induced.name(i).to_string()).collect();
        let ambient: Vec<usize> = comp.iter().map(|&i| verts[i]).collect();
        let fixed: Vec<&str> = ambient.iter().filter(|&&v| conf.is_fixed(v)).map(|&v| g.name(v)).collect();
        let touches = ambient.iter().any(|&v| conf.meets_fixed_locus(v));
        all_touch &= touches;
        let ctype = induced.component_type(&comp).map(|c| c.to_string()).unwrap_or_else(|| "?".into());
        rep.note(format!("component {ctype}: fixed curves {fixed:?}"));
        comps.push(json!({"type": ctype, "curves": names, "fixed": fixed}));
    }
    rep.value("components", comps);
    rep.check("every component meets the fixed locus", all_touch);

    let inside: Vec<String> = conf
        .unverified_edges
        .iter()
        .filter(|(a, b)| verts.contains(a) && verts.contains(b))
        .map(|&(a, b)| format!("{}-{}", g.name(a), g.name(b)))
        .collect();
    if !conf.unverified_edges.is_empty() {
        rep.note(format!(
            "{} configuration edges off the divisor are not pinned down; {} inside the support",
            conf.unverified_edges.len(),
            inside.len()
        ));
        rep.check("no unconfirmed edge is used by the divisor", inside.is_empty());
    }

    let lab = FsLabeling {
        tags: verts.iter().map(|&v| if conf.is_fixed(v) { Tag::F } else { Tag::S }).collect(),
    };
    let admissible = check_labeling(&induced, &lab, d.surface);
    rep.check(
        format!("the induced f/s labeling obeys the order-{} rules{}", d.surface, match &admissible {
            Ok(()) => String::new(),
            Err(e) => format!(" ({e})"),
        }),
        admissible.is_ok(),
    );
    if admissible.is_ok() {
        let p = count_profile(&induced, &lab, d.surface)?;
        rep.value("fixed_profile_on_divisor", p);
    }
    Ok(rep.finish())
}

/// All seven constructions.
pub fn verify_all_constructions() -> Result<Vec<CaseReport>> {
    (1..=7).map(verify_construction).collect()
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_constructions() {
        for case in 1..=7 {
            let r = verify_construction(case).unwrap();
            assert!(r.is_confirmed(), "{r}");
        }
        assert!(verify_construction(8).is_err());
    }

    #[test]
    fn d7_a12_components() {
        let r = verify_construction(4).unwrap();
        let comps = r.values["components"].as_array().unwrap();
        let with_g1: Vec<&str> = comps
            .iter()
            .filter(|c| c["fixed"].as_array().unwrap().iter().any(|f| f == "G1"))
            .map(|c| c["type"].as_str().unwrap())
            .collect();
        assert_eq!(with_g1, vec!["A12"]);
    }
}
