//! Fixed-point bookkeeping for non-symplectic automorphisms: which orders
//! can act on a lattice of given rank, the holomorphic Lefschetz number of an
//! order-6 automorphism evaluated in Q(sqrt(-3)), and the eigenvalue
//! multiplicities forced by the topological Lefschetz formula.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::dynkin::FixedProfile;
use crate::error::Result;
use crate::exact::{rat, solve_exact, IntMatrix, QuadExt, Rational, Solution};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let (mut n, mut out, mut p) = (n, n, 2);
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Orders `I >= 2` of a primitive root of unity that can act faithfully on a
/// transcendental lattice of rank `rank_transcendental`: `phi(I) <= rank`.
pub fn candidate_indices(rank_transcendental: u64) -> Vec<u64> {
    // phi(n) >= sqrt(n/2), so n <= 2 r^2 suffices
    let top = 2 * rank_transcendental * rank_transcendental + 2;
    (2..=top).filter(|&i| euler_phi(i) <= rank_transcendental).collect()
}

fn one_minus(z: &QuadExt) -> QuadExt {
    &QuadExt::one() - z
}

/// `1 / ((1 - zeta6^2)(1 - zeta6^5))`: isolated point with weights (2, 5).
pub fn local_term_p() -> QuadExt {
    let z = QuadExt::zeta6();
    (one_minus(&z.pow(2)) * one_minus(&z.pow(5))).inv().expect("nonzero")
}

/// `1 / ((1 - zeta6^3)(1 - zeta6^4))`: isolated point with weights (3, 4).
pub fn local_term_q() -> QuadExt {
    let z = QuadExt::zeta6();
    (one_minus(&z.pow(3)) * one_minus(&z.pow(4))).inv().expect("nonzero")
}

/// Contribution of a fixed smooth rational curve of self-intersection -2
/// with normal weight zeta6: `(1 - g)/(1 - z) - z C^2 / (1 - z)^2`.
pub fn local_term_curve() -> QuadExt {
    let z = QuadExt::zeta6();
    let d = one_minus(&z);
    let first = d.inv().expect("nonzero");
    let second = &z / &(&d * &d);
    first - second * rat(-2, 1)
}

/// `sum_i (-1)^i tr(tau^* | H^i(O))` for `tau^* omega = zeta6 omega`: `1 + zeta6^{-1}`.
pub fn holomorphic_lefschetz_number() -> QuadExt {
    QuadExt::one() + QuadExt::zeta6().inv().expect("nonzero")
}

/// `n_p a(P) + n_q a(Q) + n_c b(C)`.
pub fn holomorphic_lefschetz_order6(n_p: u64, n_q: u64, n_c: u64) -> QuadExt {
    local_term_p() * rat(n_p as i64, 1)
        + local_term_q() * rat(n_q as i64, 1)
        + local_term_curve() * rat(n_c as i64, 1)
}

/// Fixed-locus shape parameters of an order-6 automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Order6Profile {
    pub c: u64,
    pub p: u64,
    pub q: u64,
}

/// Multiplicities of the eigenvalues `1, -1, zeta3 (and conj), zeta6 (and conj)`
/// on `H^2`; the `zeta6` eigenspace has dimension `1 + delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CohomologyMultiplicities {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
}

impl CohomologyMultiplicities {
    pub fn is_nonnegative(&self) -> bool {
        self.alpha >= 0 && self.beta >= 0 && self.gamma >= 0 && self.delta >= 0
    }
}

/// Topological Euler number of the fixed locus of `tau^j`, `j = 1, 2, 3`.
/// Points count 1, rational curves 2.
pub fn fixed_locus_euler(profile: Order6Profile, j: u32) -> i64 {
    let Order6Profile { c, p, q } = profile;
    let (c, p, q) = (c as i64, p as i64, q as i64);
    let l = c + 1;
    match j {
        // 2l points P, 2l points Q, c curves C
        1 => 2 * l + 2 * l + 2 * c,
        // 2l points P, 2(p+1) points P', curves C, D (l of them), F (2p)
        2 => 2 * l + 2 * (p + 1) + 2 * (c + l + 2 * p),
        // curves C, E (2l), G (3q)
        3 => 2 * (c + 2 * l + 3 * q),
        _ => panic!("j must be 1, 2 or 3"),
    }
}

/// Row `(coefficients of alpha, beta, gamma, delta; constant)` of
/// `tr((tau^*)^j | H^2)`, read off the eigenvalues.
fn trace_row(j: u32) -> ([Rational; 4], Rational) {
    let re2 = |z: QuadExt| -> Rational {
        let w = z.pow(j as i64);
        &w.a + &w.conj().a
    };
    let m1 = if j.is_multiple_of(2) { rat(1, 1) } else { rat(-1, 1) };
    let z3 = re2(QuadExt::zeta3());
    let z6 = re2(QuadExt::zeta6());
    ([rat(1, 1), m1, z3, z6.clone()], z6)
}

/// The linear system in `(alpha, beta, gamma, delta)`: the dimension count
/// and the topological Lefschetz formula for `tau, tau^2, tau^3`.
/// Each row is `(coefficients, right-hand side)`.
pub fn lefschetz_system(profile: Order6Profile) -> Vec<([i64; 4], i64)> {
    let mut rows = vec![([1, 1, 2, 2], 20)];
    for j in 1..=3 {
        let (coef, constant) = trace_row(j);
        // chi(T^{tau^j}) = 1 + tr|H^2 + 1
        let rhs = rat(fixed_locus_euler(profile, j) - 2, 1) - constant;
        let ints: Vec<i64> = coef.iter().map(|x| x.to_integer().to_i64().expect("small")).collect();
        rows.push(([ints[0], ints[1], ints[2], ints[3]], rhs.to_integer().to_i64().expect("small")));
    }
    rows
}

/// Solve [`lefschetz_system`] exactly.
pub fn solve_multiplicities(profile: Order6Profile) -> Result<CohomologyMultiplicities> {
    let rows = lefschetz_system(profile);
    let m = IntMatrix::from_rows(&rows.iter().map(|(c, _)| c.to_vec()).collect::<Vec<_>>());
    let rhs: Vec<Rational> = rows.iter().map(|(_, r)| rat(*r, 1)).collect();
    let x = match solve_exact(&m, &rhs)? {
        Solution::Unique(x) => x,
        Solution::Underdetermined { .. } => return Err(crate::Error::Degenerate),
    };
    let get = |i: usize| -> i64 {
        assert!(x[i].is_integer(), "non-integral multiplicity");
        x[i].to_integer().to_i64().expect("small")
    };
    Ok(CohomologyMultiplicities { alpha: get(0), beta: get(1), gamma: get(2), delta: get(3) })
}

/// Profiles whose multiplicities are all nonnegative, scanning `c, p, q <= bound`.
pub fn feasible_order6_profiles_within(bound: u64) -> Result<Vec<Order6Profile>> {
    let mut out = vec![];
    for c in 0..=bound {
        for p in 0..=bound {
            for q in 0..=bound {
                let pr = Order6Profile { c, p, q };
                if solve_multiplicities(pr)?.is_nonnegative() {
                    out.push(pr);
                }
            }
        }
    }
    Ok(out)
}

/// All feasible profiles. `delta = 2 - c - p - q` is read off the solved
/// system, so a bound of 3 on each parameter already covers every case.
pub fn feasible_order6_profiles() -> Vec<Order6Profile> {
    feasible_order6_profiles_within(3).expect("system is regular")
}

/// For an order-3 non-symplectic automorphism: `M - N = 3`.
pub fn check_order3_relation(profile: FixedProfile) -> bool {
    profile.n_isolated as i64 - profile.n_curves as i64 == 3
}

/// Values of `l` in `0..=bound` for which `(2l, 2l, c)` reproduces the
/// holomorphic Lefschetz number.
pub fn step_one_solutions(c: u64, bound: u64) -> Vec<u64> {
    let target = holomorphic_lefschetz_number();
    (0..=bound).filter(|&l| holomorphic_lefschetz_order6(2 * l, 2 * l, c) == target).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half_3_minus_s() -> QuadExt {
        // (3 - sqrt(-3))/2
        QuadExt::new(rat(3, 2), rat(-1, 2))
    }

    #[test]
    fn local_terms() {
        let base = half_3_minus_s();
        assert_eq!(local_term_p(), base.clone() * rat(1, 3));
        assert_eq!(local_term_q(), base.clone() * rat(1, 6));
        assert_eq!(local_term_curve(), -base.clone());
        assert_eq!(holomorphic_lefschetz_number(), base);
    }

    #[test]
    fn indices() {
        assert_eq!(candidate_indices(2), vec![2, 3, 4, 6]);
        assert_eq!(candidate_indices(1), vec![2]);
        assert_eq!(candidate_indices(4), vec![2, 3, 4, 5, 6, 8, 10, 12]);
    }

    #[test]
    fn step_one() {
        for c in 0..=10 {
            assert_eq!(step_one_solutions(c, 10 + 1), vec![c + 1]);
        }
        assert_eq!(holomorphic_lefschetz_order6(6, 6, 2), half_3_minus_s());
        assert!(holomorphic_lefschetz_order6(0, 0, 0).is_zero());
    }

    #[test]
    fn system_matches_stated_equations() {
        for pr in feasible_order6_profiles() {
            let (c, p, q) = (pr.c as i64, pr.p as i64, pr.q as i64);
            let rows = lefschetz_system(pr);
            assert_eq!(rows[1], ([1, -1, -1, 1], 6 * c + 1));
            assert_eq!(rows[2], ([1, 1, -1, -1], 6 * c + 6 * p + 5));
            assert_eq!(rows[3], ([1, -1, 2, -2], 6 * c + 6 * q + 4));
        }
    }

    #[test]
    fn closed_form() {
        let f = feasible_order6_profiles();
        assert_eq!(f.len(), 10);
        for pr in f {
            let (c, p, q) = (pr.c as i64, pr.p as i64, pr.q as i64);
            let m = solve_multiplicities(pr).unwrap();
            assert_eq!(
                m,
                CohomologyMultiplicities {
                    alpha: 5 * c + 2 * p + q + 6,
                    beta: -c + 2 * p - q + 4,
                    gamma: -c - p + q + 3,
                    delta: -c - p - q + 2,
                }
            );
            assert_eq!(4 * (c + 1) + 2 * c, 2 + m.alpha - m.beta - m.gamma + m.delta + 1);
        }
        assert!(!solve_multiplicities(Order6Profile { c: 3, p: 0, q: 0 }).unwrap().is_nonnegative());
    }

    #[test]
    fn order3_relation() {
        let fp = |n, m| FixedProfile { n_curves: n, n_isolated: m };
        assert!(check_order3_relation(fp(6, 9)));
        assert!(!check_order3_relation(fp(5, 14)));
        assert!(check_order3_relation(fp(0, 3)));
    }
}
