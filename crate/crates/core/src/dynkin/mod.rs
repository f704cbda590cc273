//! Dynkin diagrams and (-2)-curve incidence graphs.
//!
//! A [`DynkinType`] is a multiset of ADE components written like `D16+A3`.
//! [`CurveGraph`] is the incidence graph of a set of smooth rational curves;
//! its automorphisms and the fixed/stable labelings of curves under an
//! automorphism of order 2 or 3 live in the submodules.

mod automorphism;
mod config;
mod graph;
mod labeling;

pub use automorphism::graph_automorphisms;
pub use config::{
    construction_divisor, shioda_inose_configuration, Configuration, ConstructionDivisor,
};
pub use graph::CurveGraph;
pub use labeling::{
    admissible_labelings, check_labeling, count_profile, FixedProfile, FsLabeling, Tag,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

/// One connected ADE diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Component { family, rank })
        } else {
            Err(Error::InvalidComponent(format!("{family:?}{rank}")))
        }
    }

    pub fn a(rank: usize) -> Self {
        Component::new(Family::A, rank).expect("valid A rank")
    }

    pub fn d(rank: usize) -> Self {
        Component::new(Family::D, rank).expect("valid D rank")
    }

    /// |det| of the Gram matrix.
    pub fn discriminant(&self) -> u64 {
        match self.family {
            Family::A => self.rank as u64 + 1,
            Family::D => 4,
            Family::E => 9 - self.rank as u64,
        }
    }

    /// Edges in the fixed numbering: A is a path, D has its fork at the high
    /// end (`C_{n-2}` meets `C_{n-1}` and `C_n`), E has `C_n` on `C_3`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|i| (i - 1, i)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((2, n - 1));
                e
            }
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for Component {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Component::new(family, rank)
    }
}

/// Ordered list of ADE components; equality via [`DynkinType::same_multiset`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinType {
    pub components: Vec<Component>,
}

/// Letters used to name the curves of successive components.
const LETTERS: [&str; 12] = ["C", "E", "K", "L", "M", "N", "P", "Q", "R", "T", "U", "V"];

impl DynkinType {
    pub fn new(components: Vec<Component>) -> Self {
        DynkinType { components }
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn discriminant(&self) -> u64 {
        self.components.iter().map(|c| c.discriminant()).product()
    }

    /// Components sorted into a canonical order (for multiset comparison).
    pub fn sorted(&self) -> Vec<Component> {
        let mut v = self.components.clone();
        v.sort();
        v
    }

    pub fn same_multiset(&self, other: &DynkinType) -> bool {
        self.sorted() == other.sorted()
    }

    /// Curve names `C1..`, `E1..`, `K1..` per component.
    pub fn labels(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.rank());
        for (k, c) in self.components.iter().enumerate() {
            let letter = LETTERS.get(k).map(|s| s.to_string()).unwrap_or_else(|| format!("X{k}_"));
            out.extend((1..=c.rank).map(|i| format!("{letter}{i}")));
        }
        out
    }

    /// Offset of the first curve of component `k`.
    pub fn offset(&self, k: usize) -> usize {
        self.components[..k].iter().map(|c| c.rank).sum()
    }

    pub fn graph(&self) -> CurveGraph {
        let mut g = CurveGraph::new();
        for name in self.labels() {
            g.add_vertex(&name);
        }
        for (k, c) in self.components.iter().enumerate() {
            let off = self.offset(k);
            for (a, b) in c.edges() {
                g.add_edge(off + a, off + b);
            }
        }
        g
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::ParseType(s.to_string()));
        }
        let components = s.split('+').map(str::parse).collect::<Result<Vec<_>>>()?;
        Ok(DynkinType { components })
    }
}
