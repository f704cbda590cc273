use std::collections::VecDeque;

use super::CurveGraph;

/// All automorphisms of `g` as permutations `p` with `v -> p[v]`,
/// sorted lexicographically (identity first).
pub fn graph_automorphisms(g: &CurveGraph) -> Vec<Vec<usize>> {
    let n = g.len();
    // BFS order so that every vertex after a component root has an earlier neighbour
    let mut order = Vec::with_capacity(n);
    let mut anchor = vec![None; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    anchor[w] = Some(v);
                    q.push_back(w);
                }
            }
        }
    }

    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, &order, &anchor, 0, &mut image, &mut used, &mut out);
    out.sort();
    out
}

fn extend(
    g: &CurveGraph,
    order: &[usize],
    anchor: &[Option<usize>],
    depth: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if depth == order.len() {
        out.push(image.clone());
        return;
    }
    let v = order[depth];
    let candidates: Vec<usize> = match anchor[v] {
        Some(a) => g.neighbours(image[a]).collect(),
        None => (0..g.len()).collect(),
    };
    for w in candidates {
        if used[w] || g.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == g.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        extend(g, order, anchor, depth + 1, image, used, out);
        used[w] = false;
        image[v] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;

    fn count(s: &str) -> usize {
        graph_automorphisms(&s.parse::<DynkinType>().unwrap().graph()).len()
    }

    #[test]
    fn known_group_orders() {
        assert_eq!(count("A1"), 1);
        assert_eq!(count("A3"), 2);
        assert_eq!(count("D4"), 6);
        assert_eq!(count("D5"), 2);
        assert_eq!(count("E6"), 2);
        assert_eq!(count("E8"), 1);
        assert_eq!(count("A2+A2"), 8);
        assert_eq!(count("D16+A3"), 4);
    }

    #[test]
    fn identity_comes_first() {
        let g = "D4".parse::<DynkinType>().unwrap().graph();
        assert_eq!(graph_automorphisms(&g)[0], vec![0, 1, 2, 3]);
    }
}
