//! Integral lattices with labelled bases.
//!
//! Everything is stored in the coordinates of a fixed ambient basis (usually
//! the curves `C_i`, `E_j` of a Dynkin diagram), so glue vectors print the
//! way one writes them by hand.

mod discriminant_group;
mod nikulin;
mod overlattice;
mod picard;

pub use discriminant_group::DiscriminantGroup;
pub use nikulin::{nikulin_filter, nikulin_on_vector, NikulinVerdict};
pub use overlattice::{enumerate_overlattices, GlueVector, Overlattice, QuotientElement};
pub use picard::{
    picard_extension_search, picard_extension_search_with, BranchReport, PicardExtension,
    SearchOptions, SearchOutcome,
};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::dynkin::{CurveGraph, DynkinType};
use crate::error::{Error, Result};
use crate::exact::{
    common_denominator, hermite_row_basis, integer_kernel, is_integer, rat_int, rational_signature,
    IntMatrix, Rational, Signature,
};

/// Integral symmetric bilinear form on `Z^n` with named basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    labels: Vec<String>,
    gram: IntMatrix,
}

impl Lattice {
    pub fn new(labels: Vec<String>, gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NonSquare { rows: gram.rows(), cols: gram.cols() });
        }
        if labels.len() != gram.rows() {
            return Err(Error::DimensionMismatch { expected: gram.rows(), found: labels.len() });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Lattice { labels, gram })
    }

    /// Rank-one lattice `<value>`.
    pub fn rank_one(label: &str, value: i64) -> Self {
        Lattice { labels: vec![label.to_string()], gram: IntMatrix::from_rows(&[[value]]) }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownCurve(label.to_string()))
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (&self.gram[(i, i)] % BigInt::from(2)).is_zero())
    }

    /// `|det(gram)|`; errors on a degenerate form.
    pub fn discriminant(&self) -> Result<BigInt> {
        let d = self.gram.det()?;
        if d.is_zero() {
            Err(Error::Degenerate)
        } else {
            Ok(d.abs())
        }
    }

    pub fn signature(&self) -> Signature {
        rational_signature(&self.rational_gram()).expect("gram is square and symmetric")
    }

    pub fn rational_gram(&self) -> Vec<Vec<Rational>> {
        self.gram.to_rows().iter().map(|r| r.iter().map(rat_int).collect()).collect()
    }

    /// `x^T G y` for rational coordinate vectors.
    pub fn pair(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for i in 0..self.rank() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank() {
                if y[j].is_zero() || self.gram[(i, j)].is_zero() {
                    continue;
                }
                s += &x[i] * &y[j] * rat_int(&self.gram[(i, j)]);
            }
        }
        s
    }

    pub fn norm(&self, x: &[Rational]) -> Rational {
        self.pair(x, x)
    }

    /// True if `x` pairs integrally with every basis vector.
    pub fn in_dual(&self, x: &[Rational]) -> bool {
        (0..self.rank()).all(|i| {
            let s: Rational = (0..self.rank()).map(|j| &x[j] * rat_int(&self.gram[(i, j)])).sum();
            is_integer(&s)
        })
    }

    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Lattice { labels, gram: self.gram.direct_sum(&other.gram) }
    }

    /// Lattice spanned by rational vectors in these coordinates, with a
    /// Hermite basis and its Gram matrix (which must come out integral).
    pub fn span(&self, generators: &[Vec<Rational>], prefix: &str) -> Result<Embedded> {
        let basis = rational_hermite_basis(generators, self.rank());
        Embedded::new(self.clone(), basis, prefix)
    }

    /// Curve graph of the Gram matrix.
    pub fn graph(&self) -> Result<CurveGraph> {
        CurveGraph::from_gram(&self.labels, &self.gram)
    }
}

/// Block-diagonal negative-definite ADE lattice with curve labels `C1.., E1.., ..`.
pub fn ade_lattice(t: &DynkinType) -> Lattice {
    let g = t.graph();
    Lattice { labels: t.labels(), gram: g.gram() }
}

/// `|det|` of the Gram matrix.
pub fn discriminant(l: &Lattice) -> Result<BigInt> {
    l.discriminant()
}

/// Orthogonal complement of the sublattice spanned by basis vectors `sub`.
pub fn orthogonal_complement(ambient: &Lattice, sub: &[usize]) -> Result<Lattice> {
    let vectors: Vec<Vec<BigInt>> = sub
        .iter()
        .map(|&i| (0..ambient.rank()).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    orthogonal_complement_of(ambient, &vectors)
}

/// Orthogonal complement of the span of integral vectors.
pub fn orthogonal_complement_of(ambient: &Lattice, vectors: &[Vec<BigInt>]) -> Result<Lattice> {
    let n = ambient.rank();
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
    }
    let span = IntMatrix::from_big_rows(vectors.to_vec(), n);
    let sub_gram = &(&span * ambient.gram()) * &span.transpose();
    if vectors.is_empty() {
        return Ok(ambient.clone());
    }
    if sub_gram.det()?.is_zero() {
        return Err(Error::Degenerate);
    }
    let rows = &span * ambient.gram();
    let k = integer_kernel(&rows);
    let gram = &(&k.transpose() * ambient.gram()) * &k;
    let labels = (1..=k.cols()).map(|i| format!("h{i}")).collect();
    Lattice::new(labels, gram)
}

/// Z-basis (Hermite form) of the span of rational row vectors of length `n`.
pub fn rational_hermite_basis(generators: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let all: Vec<Rational> = generators.iter().flatten().cloned().collect();
    let den = common_denominator(&all);
    let rows: Vec<Vec<BigInt>> = generators
        .iter()
        .map(|g| g.iter().map(|x| (x * rat_int(&den)).to_integer()).collect())
        .collect();
    let h = hermite_row_basis(&IntMatrix::from_big_rows(rows, n));
    h.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| Rational::new(x, den.clone())).collect())
        .collect()
}

/// A lattice given by a rational basis inside an ambient lattice's
/// coordinate space.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub ambient: Lattice,
    pub basis: Vec<Vec<Rational>>,
    pub lattice: Lattice,
}

impl Embedded {
    pub fn new(ambient: Lattice, basis: Vec<Vec<Rational>>, prefix: &str) -> Result<Self> {
        let k = basis.len();
        let mut gram = IntMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                let v = ambient.pair(&basis[i], &basis[j]);
                if !is_integer(&v) {
                    return Err(Error::NonIntegral(format!(
                        "pairing of basis vectors {} and {} is {v}",
                        i + 1,
                        j + 1
                    )));
                }
                gram[(i, j)] = v.to_integer();
            }
        }
        let labels = (1..=k).map(|i| format!("{prefix}{i}")).collect();
        Ok(Embedded { ambient, basis, lattice: Lattice::new(labels, gram)? })
    }

    /// Integer coordinates of `v` in the basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<BigInt>> {
        let k = self.basis.len();
        let n = self.ambient.rank();
        // solve basis^T c = v over Q, then test integrality
        let den = common_denominator(&self.basis.iter().flatten().cloned().collect::<Vec<_>>());
        let mut m = IntMatrix::zeros(n, k);
        for (j, b) in self.basis.iter().enumerate() {
            for (i, x) in b.iter().enumerate() {
                m[(i, j)] = (x * rat_int(&den)).to_integer();
            }
        }
        let rhs: Vec<Rational> = v.iter().map(|x| x * rat_int(&den)).collect();
        match crate::exact::solve_exact(&m, &rhs).ok()? {
            crate::exact::Solution::Unique(c) if c.iter().all(is_integer) => {
                Some(c.iter().map(|x| x.to_integer()).collect())
            }
            _ => None,
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }
}
