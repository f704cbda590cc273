use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Component, DynkinType, Family};
use crate::error::{Error, Result};
use crate::exact::IntMatrix;

/// Simple graph on named (-2)-curves; an edge means intersection number 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl CurveGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex, or returns the existing index for `name`.
    pub fn add_vertex(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        self.adj.push(BTreeSet::new());
        i
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "loops are not allowed");
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn add_edge_named(&mut self, a: &str, b: &str) {
        let (i, j) = (self.add_vertex(a), self.add_vertex(b));
        self.add_edge(i, j);
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![];
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `vertices`, keeping their order and names.
    pub fn induced(&self, vertices: &[usize]) -> CurveGraph {
        let mut g = CurveGraph::new();
        for &v in vertices {
            g.add_vertex(&self.names[v]);
        }
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn induced_named(&self, names: &[&str]) -> Result<CurveGraph> {
        let idx = names.iter().map(|n| self.vertex(n)).collect::<Result<Vec<_>>>()?;
        Ok(self.induced(&idx))
    }

    /// ADE type of the connected vertex set `comp`, if it is one.
    pub fn component_type(&self, comp: &[usize]) -> Option<Component> {
        let n = comp.len();
        let inside: BTreeSet<usize> = comp.iter().copied().collect();
        let deg = |v: usize| self.neighbours(v).filter(|w| inside.contains(w)).count();
        let edge_count: usize = comp.iter().map(|&v| deg(v)).sum::<usize>() / 2;
        if n == 0 || edge_count != n - 1 {
            return None;
        }
        let branch: Vec<usize> = comp.iter().copied().filter(|&v| deg(v) >= 3).collect();
        match branch.as_slice() {
            [] => Some(Component { family: Family::A, rank: n }),
            [c] if deg(*c) == 3 => {
                let mut arms: Vec<usize> = self
                    .neighbours(*c)
                    .filter(|w| inside.contains(w))
                    .map(|w| {
                        // walk away from the centre
                        let (mut prev, mut cur, mut len) = (*c, w, 1);
                        loop {
                            let next: Vec<usize> = self
                                .neighbours(cur)
                                .filter(|x| inside.contains(x) && *x != prev)
                                .collect();
                            match next.as_slice() {
                                [x] => {
                                    prev = cur;
                                    cur = *x;
                                    len += 1;
                                }
                                _ => break len,
                            }
                        }
                    })
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => Some(Component { family: Family::D, rank: n }),
                    [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(Component { family: Family::E, rank: n }),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// Dynkin type of the whole graph, components in order of first vertex.
    pub fn dynkin_type(&self) -> Option<DynkinType> {
        let comps = self
            .components()
            .iter()
            .map(|c| self.component_type(c))
            .collect::<Option<Vec<_>>>()?;
        Some(DynkinType::new(comps))
    }

    /// Intersection matrix: -2 on the diagonal, 1 on edges.
    pub fn gram(&self) -> IntMatrix {
        let n = self.len();
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = (-2).into();
            for j in self.neighbours(i) {
                m[(i, j)] = 1.into();
            }
        }
        m
    }

    /// Graph of a Gram matrix with entries in {0, 1} off the diagonal.
    pub fn from_gram(labels: &[String], gram: &IntMatrix) -> Result<CurveGraph> {
        let mut g = CurveGraph::new();
        for l in labels {
            g.add_vertex(l);
        }
        for i in 0..gram.rows() {
            for j in i + 1..gram.cols() {
                let e = &gram[(i, j)];
                if *e == 1.into() {
                    g.add_edge(i, j);
                } else if *e != 0.into() {
                    return Err(Error::GraphFormat {
                        line: 0,
                        reason: format!("entry ({i},{j}) is {e}, not an incidence"),
                    });
                }
            }
        }
        Ok(g)
    }

    /// Plain-text form: isolated vertices on their own line, then one edge per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.len() {
            if self.degree(v) == 0 {
                out.push_str(&self.names[v]);
                out.push('\n');
            }
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("{} {}\n", self.names[a], self.names[b]));
        }
        out
    }

    /// Inverse of [`CurveGraph::to_text`]; `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<CurveGraph> {
        let mut g = CurveGraph::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                [] => {}
                [v] => {
                    g.add_vertex(v);
                }
                [a, b] if a != b => g.add_edge_named(a, b),
                _ => {
                    return Err(Error::GraphFormat {
                        line: no + 1,
                        reason: format!("expected `name` or `name name`, got `{line}`"),
                    })
                }
            }
        }
        Ok(g)
    }
}
