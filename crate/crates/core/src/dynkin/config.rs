use super::{CurveGraph, DynkinType};
use crate::error::{Error, Result};

/// The 24 curves of a Shioda-Inose surface with the action of its
/// distinguished automorphism.
#[derive(Clone, Debug)]
pub struct Configuration {
    /// 3 for the discriminant-3 surface, 2 for the discriminant-4 one.
    pub order: u32,
    pub graph: CurveGraph,
    /// Pointwise fixed curves (every one of the 24 curves is stable).
    pub fixed: Vec<usize>,
    /// Isolated fixed points, each given by the two curves through it.
    pub fixed_points: Vec<(usize, usize)>,
    /// Edges not pinned down by the listed chains.
    pub unverified_edges: Vec<(usize, usize)>,
}

impl Configuration {
    pub fn is_fixed(&self, v: usize) -> bool {
        self.fixed.contains(&v)
    }

    /// True if curve `v` is fixed or passes through an isolated fixed point.
    pub fn meets_fixed_locus(&self, v: usize) -> bool {
        self.is_fixed(v) || self.fixed_points.iter().any(|&(a, b)| a == v || b == v)
    }
}

fn e(i: usize, j: usize) -> String {
    format!("E{i}{j}")
}

fn ep(i: usize, j: usize) -> String {
    format!("E{i}{j}'")
}

/// Curve configuration for `which` = 3 or 2.
pub fn shioda_inose_configuration(which: u32) -> Result<Configuration> {
    match which {
        3 => Ok(order_three()),
        2 => Ok(order_two()),
        other => Err(Error::UnsupportedOrder(other)),
    }
}

fn order_three() -> Configuration {
    let mut g = CurveGraph::new();
    for k in 1..=3 {
        g.add_vertex(&format!("F{k}"));
    }
    for k in 1..=3 {
        g.add_vertex(&format!("G{k}"));
    }
    for i in 1..=3 {
        for j in 1..=3 {
            g.add_vertex(&e(i, j));
            g.add_vertex(&ep(i, j));
        }
    }
    for i in 1..=3 {
        for j in 1..=3 {
            g.add_edge_named(&e(i, j), &ep(i, j));
            g.add_edge_named(&format!("G{j}"), &e(i, j));
            g.add_edge_named(&format!("F{i}"), &ep(i, j));
        }
    }
    let fixed = (0..6).collect();
    let mut fixed_points = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            let a = g.vertex(&e(i, j)).expect("present");
            let b = g.vertex(&ep(i, j)).expect("present");
            fixed_points.push((a, b));
        }
    }
    Configuration { order: 3, graph: g, fixed, fixed_points, unverified_edges: vec![] }
}

fn order_two() -> Configuration {
    let mut g = CurveGraph::new();
    for k in 1..=3 {
        g.add_vertex(&format!("F{k}"));
    }
    for k in 1..=3 {
        g.add_vertex(&format!("G{k}"));
    }
    for i in [1, 3] {
        for j in [1, 3] {
            g.add_vertex(&format!("H{i}{j}"));
        }
    }
    for i in [1, 3] {
        for j in [1, 3] {
            g.add_vertex(&ep(i, j));
            g.add_vertex(&e(i, j));
        }
    }
    for name in ["E12", "E22", "E32", "E21'", "E22'", "E23'"] {
        g.add_vertex(name);
    }
    // A3 chains E'_ij - H_ij - E_ij
    for i in [1, 3] {
        for j in [1, 3] {
            let h = format!("H{i}{j}");
            g.add_edge_named(&ep(i, j), &h);
            g.add_edge_named(&h, &e(i, j));
        }
    }
    // consecutive curves of the A19 chain
    let chain = ConstructionDivisor::get(7).expect("7 exists").chains.concat();
    for w in chain.windows(2) {
        g.add_edge_named(w[0], w[1]);
    }
    let unverified_pairs = [
        ("F1", "E12"),
        ("F3", "E32"),
        ("F2", "E22"),
        ("F2", "E23'"),
        ("G1", "E31"),
        ("G3", "E23'"),
        ("G2", "E12"),
        ("G2", "E32"),
        ("G2", "E22"),
    ];
    let mut unverified_edges = Vec::new();
    for (a, b) in unverified_pairs {
        g.add_edge_named(a, b);
        let (x, y) = (g.vertex(a).expect("present"), g.vertex(b).expect("present"));
        unverified_edges.push((x.min(y), x.max(y)));
    }
    unverified_edges.sort_unstable();
    let fixed = (0..10).collect();
    Configuration { order: 2, graph: g, fixed, fixed_points: vec![], unverified_edges }
}

/// One of the seven explicit divisors, as its connected chains of curves.
#[derive(Clone, Debug)]
pub struct ConstructionDivisor {
    pub case: usize,
    /// 3 or 2: which configuration it lives on.
    pub surface: u32,
    pub chains: Vec<Vec<&'static str>>,
    pub claimed: DynkinType,
}

impl ConstructionDivisor {
    fn get(case: usize) -> Result<Self> {
        let (surface, chains, claimed): (u32, Vec<Vec<&'static str>>, &str) = match case {
            1 => (3, vec![vec![
                "E11", "E21", "G1", "E31", "E31'", "F3", "E33'", "E33", "G3", "E23", "E23'", "F2",
                "E22'", "E22", "G2", "E12", "E12'", "F1", "E13'",
            ]], "D19"),
            2 => (3, vec![
                vec![
                    "E11'", "E12'", "F1", "E13'", "E13", "G3", "E23", "E23'", "F2", "E22'", "E22",
                    "G2", "E32", "E32'", "F3", "E33'",
                ],
                vec!["E21", "G1", "E31"],
            ], "D16+A3"),
            3 => (3, vec![
                vec![
                    "E12'", "E13'", "F1", "E11'", "E11", "G1", "E21", "E21'", "F2", "E22'", "E22",
                    "G2", "E32",
                ],
                vec!["E31'", "F3", "E33'", "E33", "G3", "E23"],
            ], "D13+A6"),
            4 => (3, vec![
                vec!["E11'", "E12'", "F1", "E13'", "E13", "G3", "E23"],
                vec![
                    "E33'", "F3", "E32'", "E32", "G2", "E22", "E22'", "F2", "E21'", "E21", "G1",
                    "E31",
                ],
            ], "D7+A12"),
            5 => (3, vec![
                vec!["E11'", "E12'", "F1", "E13'", "E13", "G3", "E23"],
                vec![
                    "E33'", "E32'", "F3", "E31'", "E31", "G1", "E21", "E21'", "F2", "E22'", "E22",
                    "G2",
                ],
            ], "D7+D12"),
            6 => (3, vec![
                vec!["E11'", "E12'", "E13'", "F1"],
                vec![
                    "E33", "G3", "E23", "E23'", "F2", "E22'", "E22", "G2", "E32", "E32'", "F3",
                    "E31'", "E31", "G1", "E21",
                ],
            ], "D4+A15"),
            7 => (2, vec![vec![
                "H31", "E31'", "F3", "E33'", "H33", "E33", "G3", "E13", "H13", "E13'", "F1",
                "E11'", "H11", "E11", "G1", "E21'", "F2", "E22'", "G2",
            ]], "A19"),
            other => return Err(Error::NoSuchConstruction(other)),
        };
        Ok(ConstructionDivisor { case, surface, chains, claimed: claimed.parse()? })
    }

    pub fn curves(&self) -> Vec<&'static str> {
        self.chains.concat()
    }
}

/// Divisor number `case` (1..=7) of the explicit constructions.
pub fn construction_divisor(case: usize) -> Result<ConstructionDivisor> {
    ConstructionDivisor::get(case)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let s3 = shioda_inose_configuration(3).unwrap();
        assert_eq!(s3.graph.len(), 24);
        assert_eq!(s3.fixed.len(), 6);
        assert_eq!(s3.graph.edges().len(), 27);
        let s2 = shioda_inose_configuration(2).unwrap();
        assert_eq!(s2.graph.len(), 24);
        assert_eq!(s2.fixed.len(), 10);
        assert_eq!(s2.graph.edges().len(), 28);
        assert_eq!(s2.unverified_edges.len(), 9);
    }

    #[test]
    fn fixed_curves_are_disjoint() {
        for which in [2, 3] {
            let c = shioda_inose_configuration(which).unwrap();
            for &a in &c.fixed {
                for &b in &c.fixed {
                    assert!(!c.graph.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn deleting_a_divisor_leaves_five_curves() {
        let c = shioda_inose_configuration(3).unwrap();
        let d = construction_divisor(1).unwrap();
        let left = c.graph.names().iter().filter(|n| !d.curves().contains(&n.as_str())).count();
        assert_eq!(left, 5);
    }
}
