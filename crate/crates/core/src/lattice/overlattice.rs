use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{DiscriminantGroup, Embedded, Lattice};
use crate::error::Result;
use crate::exact::{fmt_combination, frac, Rational};

/// Rational combination of basis vectors that lies in the dual lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlueVector {
    pub coords: Vec<Rational>,
}

impl GlueVector {
    pub fn render(&self, labels: &[String]) -> String {
        fmt_combination(&self.coords, labels)
    }

    /// Coordinates permuted by a basis permutation `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> GlueVector {
        let mut out = vec![Rational::zero(); self.coords.len()];
        for (i, x) in self.coords.iter().enumerate() {
            out[perm[i]] = x.clone();
        }
        GlueVector { coords: out }
    }
}

/// Even overlattice `L + <glue>` of an even lattice `L`.
#[derive(Clone, Debug)]
pub struct Overlattice {
    /// `[overlattice : L]`.
    pub index: u64,
    /// Elements of the isotropic subgroup (indices into the discriminant group).
    pub members: Vec<usize>,
    /// Minimal generating glue vectors.
    pub glue: Vec<GlueVector>,
    /// Hermite Z-basis and Gram matrix.
    pub span: Embedded,
}

impl Overlattice {
    pub fn discriminant(&self) -> BigInt {
        self.span.lattice.discriminant().expect("overlattice of a nondegenerate lattice")
    }

    pub fn member_vectors<'a>(&'a self, a: &'a DiscriminantGroup) -> impl Iterator<Item = &'a [Rational]> + 'a {
        self.members.iter().map(move |&m| a.vector(m))
    }

    /// `H^perp / H` as coset representatives.
    pub fn quotient(&self, a: &DiscriminantGroup) -> Vec<QuotientElement> {
        let members: HashSet<usize> = self.members.iter().copied().collect();
        let mut seen = vec![false; a.len()];
        let mut out = Vec::new();
        for y in 0..a.len() {
            if seen[y] || !self.members.iter().all(|&h| a.b(y, h).is_zero()) {
                continue;
            }
            let coset: Vec<usize> = self.members.iter().map(|&h| a.add(y, h)).collect();
            for &c in &coset {
                seen[c] = true;
            }
            let rep = *coset.iter().min_by(|&&u, &&v| a.vector(u).cmp(a.vector(v))).expect("nonempty");
            let mut order = 1;
            let mut acc = rep;
            while !members.contains(&acc) {
                acc = a.add(acc, rep);
                order += 1;
            }
            out.push(QuotientElement { rep, order, q: a.q(rep).clone(), vector: a.vector(rep).to_vec() });
        }
        out
    }
}

/// Element of the discriminant group of an overlattice.
#[derive(Clone, Debug)]
pub struct QuotientElement {
    pub rep: usize,
    pub order: u64,
    pub q: Rational,
    pub vector: Vec<Rational>,
}

/// All isotropic subgroups of `a` (q vanishes mod 2 on every element), each
/// as a sorted member list, sorted by size then by member vectors.
pub fn isotropic_subgroups(a: &DiscriminantGroup) -> Vec<Vec<usize>> {
    let isotropic: Vec<usize> = (0..a.len()).filter(|&x| a.q(x).is_zero()).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![vec![0usize]];
    found.insert(vec![0]);
    while let Some(h) = frontier.pop() {
        let inside: HashSet<usize> = h.iter().copied().collect();
        for &x in &isotropic {
            if inside.contains(&x) || !h.iter().all(|&m| a.b(x, m).is_zero()) {
                continue;
            }
            let mut bigger: BTreeSet<usize> = BTreeSet::new();
            let mut mult = 0usize;
            loop {
                for &m in &h {
                    bigger.insert(a.add(m, mult));
                }
                mult = a.add(mult, x);
                if mult == 0 {
                    break;
                }
            }
            let bigger: Vec<usize> = bigger.into_iter().collect();
            if found.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    let mut all: Vec<Vec<usize>> = found.into_iter().collect();
    all.sort_by(|x, y| {
        x.len().cmp(&y.len()).then_with(|| {
            let vx: Vec<&[Rational]> = x.iter().map(|&i| a.vector(i)).collect();
            let vy: Vec<&[Rational]> = y.iter().map(|&i| a.vector(i)).collect();
            vx.cmp(&vy)
        })
    });
    all
}

/// Greedy minimal generating set of a subgroup, scanning members in order.
fn generators(a: &DiscriminantGroup, members: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span: BTreeSet<usize> = BTreeSet::from([0]);
    let mut sorted: Vec<usize> = members.to_vec();
    // prefer high order elements so cyclic groups get one generator
    sorted.sort_by(|&x, &y| a.order_of(y).cmp(&a.order_of(x)).then(a.vector(x).cmp(a.vector(y))));
    for x in sorted {
        if span.contains(&x) {
            continue;
        }
        gens.push(x);
        let old: Vec<usize> = span.iter().copied().collect();
        let mut mult = x;
        while mult != 0 {
            for &m in &old {
                span.insert(a.add(m, mult));
            }
            mult = a.add(mult, x);
        }
    }
    gens
}

/// Overlattice for one isotropic subgroup.
pub(crate) fn build_overlattice(a: &DiscriminantGroup, members: Vec<usize>) -> Result<Overlattice> {
    let l: &Lattice = a.lattice();
    let n = l.rank();
    let gens = generators(a, &members);
    let glue: Vec<GlueVector> = gens.iter().map(|&g| GlueVector { coords: a.vector(g).to_vec() }).collect();
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| Rational::from_integer(BigInt::from((i == j) as i64))).collect())
        .collect();
    rows.extend(glue.iter().map(|g| g.coords.clone()));
    let span = l.span(&rows, "e")?;
    Ok(Overlattice { index: members.len() as u64, members, glue, span })
}

/// Every even overlattice of the even lattice `l`, trivial one first.
pub fn enumerate_overlattices(l: &Lattice) -> Result<Vec<Overlattice>> {
    let a = DiscriminantGroup::new(l)?;
    enumerate_in(&a)
}

pub(crate) fn enumerate_in(a: &DiscriminantGroup) -> Result<Vec<Overlattice>> {
    isotropic_subgroups(a).into_iter().map(|h| build_overlattice(a, h)).collect()
}

/// `frac` of every coordinate.
pub(crate) fn reduce(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(frac).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;
    use crate::exact::is_even_integer;
    use crate::lattice::ade_lattice;

    fn lat(s: &str) -> Lattice {
        ade_lattice(&s.parse::<DynkinType>().unwrap())
    }

    #[test]
    fn a1_has_only_the_trivial_overlattice() {
        let ov = enumerate_overlattices(&lat("A1")).unwrap();
        assert_eq!(ov.len(), 1);
        assert_eq!(ov[0].index, 1);
    }

    #[test]
    fn d8_contains_e8() {
        // D8 has three order-2 classes; two spinor ones are isotropic
        let ov = enumerate_overlattices(&lat("D8")).unwrap();
        let unimodular: Vec<_> = ov.iter().filter(|o| o.discriminant() == BigInt::from(1)).collect();
        assert_eq!(unimodular.len(), 2);
        for o in unimodular {
            assert!(o.span.lattice.is_even());
        }
    }

    #[test]
    fn index_identity_and_evenness() {
        for s in ["A3+A3+A1", "D4+A3", "A7", "D6+A1+A1"] {
            let l = lat(s);
            let d = l.discriminant().unwrap();
            for o in enumerate_overlattices(&l).unwrap() {
                assert!(o.span.lattice.is_even(), "{s}");
                assert_eq!(BigInt::from(o.index * o.index) * o.discriminant(), d, "{s}");
                for g in &o.glue {
                    assert!(l.in_dual(&g.coords));
                    assert!(is_even_integer(&l.norm(&g.coords)));
                }
            }
        }
    }

    #[test]
    fn quotient_of_trivial_is_whole_group() {
        let l = lat("A3");
        let a = DiscriminantGroup::new(&l).unwrap();
        let ov = enumerate_in(&a).unwrap();
        let q = ov[0].quotient(&a);
        assert_eq!(q.len(), 4);
        assert_eq!(q.iter().filter(|e| e.order == 4).count(), 2);
    }
}
