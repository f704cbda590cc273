use std::fmt;

use serde::Serialize;

use super::CurveGraph;
use crate::error::{Error, Result};

/// Fixed (`F`) or stable-but-not-fixed (`S`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Tag {
    F,
    S,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FsLabeling {
    pub tags: Vec<Tag>,
}

impl FsLabeling {
    pub fn fixed(&self) -> impl Iterator<Item = usize> + '_ {
        self.tags.iter().enumerate().filter(|(_, t)| **t == Tag::F).map(|(i, _)| i)
    }
}

impl fmt::Display for FsLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self
            .tags
            .iter()
            .map(|t| match t {
                Tag::F => "f",
                Tag::S => "s",
            })
            .collect();
        write!(f, "{}", s.join("-"))
    }
}

/// Number of fixed curves `N` and isolated fixed points `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FixedProfile {
    pub n_curves: usize,
    pub n_isolated: usize,
}

impl fmt::Display for FixedProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n_curves, self.n_isolated)
    }
}

fn supported(order: u32) -> Result<()> {
    if order == 2 || order == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedOrder(order))
    }
}

/// Checks the local rules on the assigned part of a partial labeling.
///
/// Order 2: adjacent curves carry exactly one `f`; an `s` curve has exactly
/// two neighbours, both `f` (its two fixed points each lie on a fixed curve).
/// Order 3: no adjacent `f`; every chain `u - v - w` has exactly one `f`;
/// every `s` curve meets an `f` curve.
fn violation(g: &CurveGraph, tags: &[Option<Tag>], order: u32) -> Option<String> {
    let name = |v: usize| g.name(v).to_string();
    for v in 0..g.len() {
        let Some(tv) = tags[v] else { continue };
        let nbrs: Vec<usize> = g.neighbours(v).collect();
        let complete = nbrs.iter().all(|&w| tags[w].is_some());
        for &w in &nbrs {
            if w < v {
                continue;
            }
            if let Some(tw) = tags[w] {
                if tv == Tag::F && tw == Tag::F {
                    return Some(format!("fixed curves {} and {} meet", name(v), name(w)));
                }
                if order == 2 && tv == Tag::S && tw == Tag::S {
                    return Some(format!("adjacent {} and {} are both non-fixed", name(v), name(w)));
                }
            }
        }
        if order == 3 {
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if let (Some(ta), Some(tb)) = (tags[a], tags[b]) {
                        let fixed = [ta, tv, tb].iter().filter(|t| **t == Tag::F).count();
                        if fixed != 1 {
                            return Some(format!(
                                "chain {}-{}-{} has {fixed} fixed curves",
                                name(a),
                                name(v),
                                name(b)
                            ));
                        }
                    }
                }
            }
        }
        if tv == Tag::S && complete {
            let f_nbrs = nbrs.iter().filter(|&&w| tags[w] == Some(Tag::F)).count();
            if order == 2 && (nbrs.len() != 2 || f_nbrs != 2) {
                return Some(format!("{} does not meet exactly two fixed curves", name(v)));
            }
            if order == 3 && f_nbrs == 0 {
                return Some(format!("{} meets no fixed curve", name(v)));
            }
        }
    }
    None
}

/// `Ok(())` if `lab` satisfies the local rules, else the first broken rule.
pub fn check_labeling(g: &CurveGraph, lab: &FsLabeling, order: u32) -> Result<()> {
    supported(order)?;
    if lab.tags.len() != g.len() {
        return Err(Error::DimensionMismatch { expected: g.len(), found: lab.tags.len() });
    }
    let tags: Vec<Option<Tag>> = lab.tags.iter().copied().map(Some).collect();
    match violation(g, &tags, order) {
        None => Ok(()),
        Some(why) => Err(Error::InadmissibleLabeling(why)),
    }
}

/// Every labeling of `g` obeying the local rules for an automorphism of
/// order 2 or 3, in lexicographic order with `f < s`.
pub fn admissible_labelings(g: &CurveGraph, order: u32) -> Result<Vec<FsLabeling>> {
    supported(order)?;
    let mut out = Vec::new();
    let mut tags = vec![None; g.len()];
    search(g, order, 0, &mut tags, &mut out);
    Ok(out)
}

fn search(g: &CurveGraph, order: u32, v: usize, tags: &mut Vec<Option<Tag>>, out: &mut Vec<FsLabeling>) {
    if v == g.len() {
        out.push(FsLabeling { tags: tags.iter().map(|t| t.expect("assigned")).collect() });
        return;
    }
    for t in [Tag::F, Tag::S] {
        tags[v] = Some(t);
        if violation(g, tags, order).is_none() {
            search(g, order, v + 1, tags, out);
        }
    }
    tags[v] = None;
}

/// `N` = fixed curves; for order 3, `M` = isolated fixed points: each `s`
/// curve carries two fixed points, those on an `f` curve are not isolated,
/// and a point shared by two `s` curves is counted once.
pub fn count_profile(g: &CurveGraph, lab: &FsLabeling, order: u32) -> Result<FixedProfile> {
    check_labeling(g, lab, order)?;
    let n_curves = lab.fixed().count();
    if order == 2 {
        return Ok(FixedProfile { n_curves, n_isolated: 0 });
    }
    let mut on_s = 0usize;
    let mut s_s = 0usize;
    for v in 0..g.len() {
        if lab.tags[v] != Tag::S {
            continue;
        }
        let f_nbrs = g.neighbours(v).filter(|&w| lab.tags[w] == Tag::F).count();
        on_s += 2 - f_nbrs;
        s_s += g.neighbours(v).filter(|&w| w > v && lab.tags[w] == Tag::S).count();
    }
    Ok(FixedProfile { n_curves, n_isolated: on_s - s_s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;

    fn labs(s: &str, order: u32) -> Vec<String> {
        let g = s.parse::<DynkinType>().unwrap().graph();
        admissible_labelings(&g, order).unwrap().iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn order_two_chains() {
        assert_eq!(labs("A3", 2), vec!["f-s-f"]);
        assert!(labs("A4", 2).is_empty());
        assert_eq!(labs("A1", 2), vec!["f"]);
        assert!(labs("D5", 2).is_empty());
    }

    #[test]
    fn order_three_small_cases() {
        assert_eq!(labs("A1", 3), vec!["f"]);
        assert_eq!(labs("A2", 3), vec!["f-s", "s-f"]);
        assert_eq!(labs("A3", 3), vec!["s-f-s"]);
        assert_eq!(labs("A4", 3), vec!["f-s-s-f"]);
        assert!(labs("D5", 3).is_empty());
        assert!(labs("E6", 3).is_empty());
    }

    #[test]
    fn profile_of_d_types() {
        let g = "D7".parse::<DynkinType>().unwrap().graph();
        let l = &admissible_labelings(&g, 3).unwrap()[0];
        assert_eq!(count_profile(&g, l, 3).unwrap(), FixedProfile { n_curves: 2, n_isolated: 4 });
    }

    #[test]
    fn rejects_bad_input() {
        let g = "A2".parse::<DynkinType>().unwrap().graph();
        let bad = FsLabeling { tags: vec![Tag::F, Tag::F] };
        assert!(matches!(count_profile(&g, &bad, 3), Err(Error::InadmissibleLabeling(_))));
        assert!(matches!(admissible_labelings(&g, 5), Err(Error::UnsupportedOrder(5))));
    }
}
