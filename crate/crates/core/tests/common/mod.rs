#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashSet};
use std::path::PathBuf;

use alv::dynkin::{admissible_labelings, count_profile, Component, CurveGraph, DynkinType, Family};
use alv::exact::{rat, smith_normal_form, solve_exact, IntMatrix, QuadExt, Rational, Solution};
use alv::lattice::{enumerate_overlattices, DiscriminantGroup, Lattice};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

pub fn catalog_components() -> Vec<Component> {
    let mut v: Vec<Component> = (1..=19).map(Component::a).collect();
    v.extend((4..=19).map(Component::d));
    v
}

/// Catalog text produced by the library: one line per component listing
/// every admissible labeling and its `(N, M)`.
pub fn library_catalog(order: u32) -> String {
    let mut out = String::new();
    for c in catalog_components() {
        let g = DynkinType::new(vec![c]).graph();
        let labs = admissible_labelings(&g, order).unwrap();
        let cells: Vec<String> = labs
            .iter()
            .map(|l| {
                let p = count_profile(&g, l, order).unwrap();
                format!("{l} {}", p)
            })
            .collect();
        out.push_str(&line(c, &cells));
    }
    out
}

fn line(c: Component, cells: &[String]) -> String {
    if cells.is_empty() {
        format!("{c}: -\n")
    } else {
        format!("{c}: {}\n", cells.join("; "))
    }
}

/// Same catalog by exhausting all `2^n` taggings of an explicitly built
/// chain or fork. Vertex order: chain `1..n`, fork legs `n-1` and `n` on `n-2`.
pub fn oracle_catalog(order: u32) -> String {
    let mut out = String::new();
    for c in catalog_components() {
        let n = c.rank;
        let mut adj = vec![vec![]; n];
        let mut join = |a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        let is_d = c.family == Family::D;
        let chain_end = if is_d { n - 1 } else { n };
        for i in 1..chain_end {
            join(i - 1, i);
        }
        if is_d {
            join(n - 3, n - 1);
        }
        let mut cells = vec![];
        for mask in 0u32..(1 << n) {
            // bit set = fixed
            let f = |v: usize| mask >> v & 1 == 1;
            if let Some((nc, m)) = oracle_profile(&adj, &f, order) {
                let word: Vec<&str> = (0..n).map(|v| if f(v) { "f" } else { "s" }).collect();
                cells.push((word.join("-"), nc, m));
            }
        }
        // library order: lexicographic with f before s
        cells.sort_by(|x, y| x.0.cmp(&y.0));
        let cells: Vec<String> = cells.into_iter().map(|(w, nc, m)| format!("{w} ({nc}, {m})")).collect();
        out.push_str(&line(c, &cells));
    }
    out
}

fn oracle_profile(adj: &[Vec<usize>], f: &dyn Fn(usize) -> bool, order: u32) -> Option<(usize, usize)> {
    let n = adj.len();
    let mut fixed_points = BTreeSet::new();
    for v in 0..n {
        if f(v) && adj[v].iter().any(|&w| f(w)) {
            return None;
        }
        if order == 2 {
            if !f(v) && adj[v].iter().any(|&w| !f(w)) {
                return None;
            }
            if !f(v) && (adj[v].len() != 2 || adj[v].iter().any(|&w| !f(w))) {
                return None;
            }
        } else {
            for (i, &a) in adj[v].iter().enumerate() {
                for &b in &adj[v][i + 1..] {
                    if [a, v, b].iter().filter(|&&x| f(x)).count() != 1 {
                        return None;
                    }
                }
            }
            if !f(v) {
                let fn_ = adj[v].iter().filter(|&&w| f(w)).count();
                if fn_ == 0 {
                    return None;
                }
                // the two fixed points of a stable curve: meeting points with
                // fixed neighbours, the rest are isolated (named by the pair of
                // curves through them, or by a private tag)
                let mut free = 2 - fn_;
                for &w in &adj[v] {
                    if !f(w) && free > 0 {
                        fixed_points.insert((v.min(w), v.max(w)));
                        free -= 1;
                    }
                }
                for k in 0..free {
                    fixed_points.insert((v, n + k));
                }
            }
        }
    }
    let nc = (0..n).filter(|&v| f(v)).count();
    Some((nc, if order == 2 { 0 } else { fixed_points.len() }))
}

/// Every multiset of ADE components of total rank `<= max`.
pub fn small_ade_types(max: usize) -> Vec<DynkinType> {
    let mut parts: Vec<Component> = (1..=max).map(Component::a).collect();
    parts.extend((4..=max).map(Component::d));
    parts.extend((6..=max.min(8)).map(|r| Component::new(Family::E, r).unwrap()));
    let mut out = vec![];
    fn go(parts: &[Component], start: usize, left: usize, cur: &mut Vec<Component>, out: &mut Vec<DynkinType>) {
        if !cur.is_empty() {
            out.push(DynkinType::new(cur.clone()));
        }
        for i in start..parts.len() {
            if parts[i].rank <= left {
                cur.push(parts[i]);
                go(parts, i, left - parts[i].rank, cur, out);
                cur.pop();
            }
        }
    }
    go(&parts, 0, max, &mut vec![], &mut out);
    out
}

type QVec = Vec<Rational>;

fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

fn inverse(g: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = g.len();
    let mut a: Vec<Vec<Rational>> = g
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(col, p);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let k = a[r][col].clone();
                let row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(row) {
                    *x = &*x - &k * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Sets of reduced glue vectors of all even overlattices, by brute force:
/// the discriminant group is the closure of the columns of `G^-1` mod 1,
/// and subgroups are all subsets of isotropic elements closed under `+`
/// and pairing integrally.
pub fn oracle_overlattices(l: &Lattice) -> BTreeSet<BTreeSet<QVec>> {
    let g = l.rational_gram();
    let n = g.len();
    let gi = inverse(&g);
    let gens: Vec<QVec> = (0..n).map(|j| (0..n).map(|i| frac(&gi[i][j])).collect()).collect();
    let add = |x: &QVec, y: &QVec| -> QVec { x.iter().zip(y).map(|(a, b)| frac(&(a + b))).collect() };
    let pair = |x: &QVec, y: &QVec| -> Rational {
        let mut s = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                s += &x[i] * &y[j] * &g[i][j];
            }
        }
        s
    };
    let zero: QVec = vec![Rational::zero(); n];
    let mut group: HashSet<QVec> = HashSet::from([zero.clone()]);
    let mut frontier = vec![zero.clone()];
    while let Some(x) = frontier.pop() {
        for gv in &gens {
            let y = add(&x, gv);
            if group.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    let two = rat(2, 1);
    let iso: Vec<QVec> = {
        let mut v: Vec<QVec> = group
            .into_iter()
            .filter(|x| *x != zero && {
                let q = pair(x, x) / &two;
                q.is_integer()
            })
            .collect();
        v.sort();
        v
    };
    assert!(iso.len() <= 20, "too many isotropic elements for brute force");
    // bit i = iso[i]; sums leaving the isotropic set or landing on 0 are marked
    let k = iso.len();
    let pos = |v: &QVec| iso.iter().position(|w| w == v);
    let mut sum_bit = vec![vec![0u32; k]; k];
    let mut ok = vec![vec![true; k]; k];
    for i in 0..k {
        for j in 0..k {
            let y = add(&iso[i], &iso[j]);
            ok[i][j] = pair(&iso[i], &iso[j]).is_integer();
            sum_bit[i][j] = match pos(&y) {
                Some(p) => 1 << p,
                None if y == zero => 0,
                None => u32::MAX,
            };
        }
    }
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << k) {
        let members: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = members.iter().all(|&i| {
            members.iter().all(|&j| ok[i][j] && sum_bit[i][j] != u32::MAX && sum_bit[i][j] & !mask == 0)
        });
        if closed {
            let mut s: BTreeSet<QVec> = members.iter().map(|&i| iso[i].clone()).collect();
            s.insert(zero.clone());
            out.insert(s);
        }
    }
    out
}

pub fn library_overlattices(l: &Lattice) -> BTreeSet<BTreeSet<QVec>> {
    let a = DiscriminantGroup::new(l).unwrap();
    enumerate_overlattices(l)
        .unwrap()
        .iter()
        .map(|o| o.member_vectors(&a).map(|v| v.iter().map(frac).collect()).collect())
        .collect()
}

pub fn small_matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |d| {
            let rows: Vec<Vec<i64>> = d.chunks(c).map(|x| x.to_vec()).collect();
            IntMatrix::from_rows(&rows)
        })
    })
}

pub fn square_system(max_dim: usize) -> impl Strategy<Value = (IntMatrix, Vec<Rational>)> {
    (1..=max_dim).prop_flat_map(|n| {
        (proptest::collection::vec(-9i64..=9, n * n), proptest::collection::vec((-20i64..=20, 1i64..=6), n)).prop_map(
            move |(d, x)| {
                let rows: Vec<Vec<i64>> = d.chunks(n).map(|r| r.to_vec()).collect();
                (IntMatrix::from_rows(&rows), x.into_iter().map(|(p, q)| rat(p, q)).collect())
            },
        )
    })
}

pub fn check_snf(m: &IntMatrix) -> Result<(), TestCaseError> {
    let s = smith_normal_form(m);
    prop_assert_eq!(&(&s.u * m) * &s.v, s.d.clone());
    prop_assert_eq!(s.u.det().unwrap().abs(), BigInt::one());
    prop_assert_eq!(s.v.det().unwrap().abs(), BigInt::one());
    let d = s.diagonal();
    for w in d.windows(2) {
        if !w[0].is_zero() {
            prop_assert!((&w[1] % &w[0]).is_zero(), "{} does not divide {}", w[0], w[1]);
        } else {
            prop_assert!(w[1].is_zero());
        }
    }
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j {
                prop_assert!(s.d[(i, j)].is_zero());
            }
        }
    }
    if m.is_square() {
        let prod = s.u.det().unwrap() * m.det().unwrap() * s.v.det().unwrap();
        prop_assert_eq!(prod, s.d.det().unwrap());
    }
    Ok(())
}

pub fn check_solve(m: &IntMatrix, x: &[Rational]) -> Result<(), TestCaseError> {
    let n = m.rows();
    let b: Vec<Rational> = (0..n)
        .map(|i| (0..n).map(|j| Rational::from_integer(m[(i, j)].clone()) * &x[j]).sum())
        .collect();
    let sol = solve_exact(m, &b).unwrap();
    let y = match &sol {
        Solution::Unique(y) => {
            prop_assert!(!m.det().unwrap().is_zero());
            prop_assert_eq!(y.as_slice(), x);
            y.clone()
        }
        Solution::Underdetermined { particular, .. } => {
            prop_assert!(m.det().unwrap().is_zero());
            particular.clone()
        }
    };
    for i in 0..n {
        let s: Rational = (0..n).map(|j| Rational::from_integer(m[(i, j)].clone()) * &y[j]).sum();
        prop_assert_eq!(&s, &b[i]);
    }
    Ok(())
}

pub fn quad() -> impl Strategy<Value = QuadExt> {
    (-30i64..=30, 1i64..=7, -30i64..=30, 1i64..=7).prop_map(|(a, b, c, d)| QuadExt::new(rat(a, b), rat(c, d)))
}

pub fn check_quad(x: &QuadExt, y: &QuadExt, z: &QuadExt) -> Result<(), TestCaseError> {
    let r3 = QuadExt::sqrt_m3();
    prop_assert_eq!(&r3 * &r3, QuadExt::from_int(-3));
    prop_assert_eq!(x + y, y + x);
    prop_assert_eq!(x * y, y * x);
    prop_assert_eq!(&(x + y) + z, x + &(y + z));
    prop_assert_eq!(&(x * y) * z, x * &(y * z));
    prop_assert_eq!(x * &(y + z), &(x * y) + &(x * z));
    prop_assert_eq!((x * y).conj(), &x.conj() * &y.conj());
    prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
    prop_assert_eq!(&(x - y) + y, x.clone());
    if !x.is_zero() {
        let inv = x.inv().unwrap();
        prop_assert_eq!(x * &inv, QuadExt::one());
        prop_assert_eq!(&(y / x) * x, y.clone());
    } else {
        prop_assert!(x.inv().is_none());
    }
    Ok(())
}

/// Runs the three arithmetic suites for `cases` cases each; first failure wins.
pub fn run_arithmetic_suites(cases: u32) -> Result<(), String> {
    let cfg = || Config { cases, failure_persistence: None, ..Config::default() };
    let mut r = TestRunner::new(cfg());
    r.run(&small_matrix(5), |m| check_snf(&m)).map_err(|e| format!("snf: {e}"))?;
    let mut r = TestRunner::new(cfg());
    r.run(&square_system(5), |(m, x)| check_solve(&m, &x)).map_err(|e| format!("solve: {e}"))?;
    let mut r = TestRunner::new(cfg());
    r.run(&(quad(), quad(), quad()), |(x, y, z)| check_quad(&x, &y, &z)).map_err(|e| format!("quadext: {e}"))?;
    Ok(())
}

/// Library and brute force agree on every ADE lattice of rank `<= max`.
pub fn overlattice_cross_check(max: usize) -> Result<usize, String> {
    let types = small_ade_types(max);
    for t in &types {
        let l = alv::lattice::ade_lattice(t);
        if library_overlattices(&l) != oracle_overlattices(&l) {
            return Err(format!("overlattices of {t} disagree"));
        }
    }
    Ok(types.len())
}

pub fn graph_of(s: &str) -> CurveGraph {
    s.parse::<DynkinType>().unwrap().graph()
}
