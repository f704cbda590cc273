use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::Lattice;
use crate::dynkin::CurveGraph;
use crate::exact::{is_integer, Rational};

/// Outcome of the parity test for a sum of curves divisible by two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NikulinVerdict {
    /// Disjoint curves, count in {0, 8, 16}.
    Pass { count: usize },
    /// Disjoint curves, any other count.
    Fail { count: usize },
    /// Two of the curves meet, so the test says nothing.
    Inapplicable { meeting: (String, String) },
}

impl NikulinVerdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, NikulinVerdict::Fail { .. })
    }
}

impl fmt::Display for NikulinVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NikulinVerdict::Pass { count } => write!(f, "pass ({count} disjoint curves)"),
            NikulinVerdict::Fail { count } => write!(f, "fail ({count} disjoint curves, not 0/8/16)"),
            NikulinVerdict::Inapplicable { meeting: (a, b) } => {
                write!(f, "inapplicable ({a} meets {b})")
            }
        }
    }
}

/// A set of pairwise disjoint (-2)-curves whose sum is divisible by 2 must
/// have 0, 8 or 16 members.
pub fn nikulin_filter(curves: &[usize], graph: &CurveGraph) -> NikulinVerdict {
    for (i, &a) in curves.iter().enumerate() {
        for &b in &curves[i + 1..] {
            if graph.has_edge(a, b) {
                return NikulinVerdict::Inapplicable {
                    meeting: (graph.name(a).to_string(), graph.name(b).to_string()),
                };
            }
        }
    }
    verdict(curves.len())
}

/// The same test on the support of the non-integral coordinates of `v`
/// (a half-integral class), with disjointness read from the Gram matrix.
pub fn nikulin_on_vector(l: &Lattice, v: &[Rational]) -> NikulinVerdict {
    let support: Vec<usize> = (0..v.len()).filter(|&i| !is_integer(&v[i])).collect();
    for (i, &a) in support.iter().enumerate() {
        for &b in &support[i + 1..] {
            if !l.gram()[(a, b)].is_zero() {
                return NikulinVerdict::Inapplicable {
                    meeting: (l.labels()[a].clone(), l.labels()[b].clone()),
                };
            }
        }
    }
    verdict(support.len())
}

fn verdict(count: usize) -> NikulinVerdict {
    if matches!(count, 0 | 8 | 16) {
        NikulinVerdict::Pass { count }
    } else {
        NikulinVerdict::Fail { count }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;

    #[test]
    fn examples() {
        let a3 = "A3".parse::<DynkinType>().unwrap().graph();
        assert_eq!(nikulin_filter(&[0, 2], &a3), NikulinVerdict::Fail { count: 2 });
        assert_eq!(nikulin_filter(&[], &a3), NikulinVerdict::Pass { count: 0 });
        assert!(matches!(nikulin_filter(&[0, 1], &a3), NikulinVerdict::Inapplicable { .. }));
    }
}
