use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Lattice;
use crate::error::{Error, Result};
use crate::exact::{frac, rat, rat_int, rat_mod, smith_normal_form, Rational};

/// Finite quadratic module `L*/L` of an even lattice, fully enumerated.
///
/// Elements are indexed in mixed radix over the invariant factors; each
/// carries its representative in `[0,1)^n` (ambient coordinates) and its
/// quadratic value `q` in `[0,2)`.
#[derive(Clone, Debug)]
pub struct DiscriminantGroup {
    pub invariant_factors: Vec<u64>,
    /// Generator `i` is column `i` of the right SNF transform divided by `d_i`.
    pub generators: Vec<Vec<Rational>>,
    lattice: Lattice,
    vectors: Vec<Vec<Rational>>,
    q: Vec<Rational>,
    lookup: HashMap<Vec<Rational>, usize>,
}

impl DiscriminantGroup {
    pub fn new(l: &Lattice) -> Result<Self> {
        if l.discriminant()?.is_zero() {
            return Err(Error::Degenerate);
        }
        let snf = smith_normal_form(l.gram());
        let n = l.rank();
        let mut invariant_factors = Vec::new();
        let mut generators = Vec::new();
        for (i, d) in snf.diagonal().iter().enumerate() {
            let d = d.abs();
            if d > 1.into() {
                let du = d.to_u64().expect("small discriminant");
                invariant_factors.push(du);
                generators.push((0..n).map(|r| rat_int(&snf.v[(r, i)]) / rat_int(&d)).collect());
            }
        }
        let order: u64 = invariant_factors.iter().product();
        let mut vectors = Vec::with_capacity(order as usize);
        let mut q = Vec::with_capacity(order as usize);
        let mut lookup = HashMap::new();
        let two = rat(2, 1);
        for idx in 0..order {
            let coords = digits(idx, &invariant_factors);
            let mut v = vec![Rational::zero(); n];
            for (k, g) in coords.iter().zip(&generators) {
                if *k == 0 {
                    continue;
                }
                for (vi, gi) in v.iter_mut().zip(g) {
                    *vi += gi * rat(*k as i64, 1);
                }
            }
            let v: Vec<Rational> = v.iter().map(frac).collect();
            q.push(rat_mod(&l.norm(&v), &two));
            lookup.insert(v.clone(), idx as usize);
            vectors.push(v);
        }
        Ok(DiscriminantGroup { invariant_factors, generators, lattice: l.clone(), vectors, q, lookup })
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.invariant_factors.iter().fold(1, |a, b| a.lcm(b))
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Element count (same as [`DiscriminantGroup::order`]).
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Representative in `[0,1)^n`.
    pub fn vector(&self, i: usize) -> &[Rational] {
        &self.vectors[i]
    }

    pub fn coords(&self, i: usize) -> Vec<u64> {
        digits(i as u64, &self.invariant_factors)
    }

    /// Quadratic form value in `[0, 2)`.
    pub fn q(&self, i: usize) -> &Rational {
        &self.q[i]
    }

    /// Bilinear form value in `[0, 1)`.
    pub fn b(&self, i: usize, j: usize) -> Rational {
        let s = self.add(i, j);
        frac(&((&self.q[s] - &self.q[i] - &self.q[j]) / rat(2, 1)))
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        let (a, b) = (self.coords(i), self.coords(j));
        let c: Vec<u64> = a.iter().zip(&b).zip(&self.invariant_factors).map(|((x, y), d)| (x + y) % d).collect();
        undigits(&c, &self.invariant_factors) as usize
    }

    pub fn neg(&self, i: usize) -> usize {
        let c: Vec<u64> = self.coords(i).iter().zip(&self.invariant_factors).map(|(x, d)| (d - x) % d).collect();
        undigits(&c, &self.invariant_factors) as usize
    }

    pub fn multiple(&self, i: usize, k: u64) -> usize {
        let c: Vec<u64> = self.coords(i).iter().zip(&self.invariant_factors).map(|(x, d)| (x * k) % d).collect();
        undigits(&c, &self.invariant_factors) as usize
    }

    pub fn order_of(&self, i: usize) -> u64 {
        self.coords(i).iter().zip(&self.invariant_factors).fold(1, |acc, (x, d)| acc.lcm(&(d / x.gcd(d))))
    }

    /// Index of the class of a dual vector, or `None` if `v` is not in `L*`.
    pub fn index_of(&self, v: &[Rational]) -> Option<usize> {
        if !self.lattice.in_dual(v) {
            return None;
        }
        let key: Vec<Rational> = v.iter().map(frac).collect();
        self.lookup.get(&key).copied()
    }

    /// `q` on the chosen generators.
    pub fn generator_q(&self) -> Vec<Rational> {
        (0..self.invariant_factors.len())
            .map(|k| {
                let mut c = vec![0u64; self.invariant_factors.len()];
                c[k] = 1;
                self.q[undigits(&c, &self.invariant_factors) as usize].clone()
            })
            .collect()
    }
}

fn digits(mut idx: u64, radix: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(radix.len());
    for r in radix {
        out.push(idx % r);
        idx /= r;
    }
    out
}

fn undigits(c: &[u64], radix: &[u64]) -> u64 {
    let mut idx = 0;
    for (x, r) in c.iter().zip(radix).rev() {
        idx = idx * r + x;
    }
    idx
}
