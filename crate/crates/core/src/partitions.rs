//! Integer partitions, Young-diagram cell statistics, orders, horizontal
//! strips and the q-series numerical factors.
//!
//! Parts are stored 0-indexed; formulas below follow the usual 1-based cell
//! coordinates (i, j) with 1 <= j <= lambda_i, so for the cell in (0-based)
//! row r, column c: arm = lambda_r - c - 1, leg = lambda'_c - r - 1,
//! coarm = c, coleg = r. Cell iteration is row-major.

use crate::scalars::{big, one_minus_qt, MultiPoly, RatFun, Var};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

/// Arm, leg, co-arm and co-leg of a single cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub arm: u32,
    pub leg: u32,
    pub coarm: u32,
    pub coleg: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Partition {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive"
        );
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&p| p == i).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut parts = vec![0u32; cols];
        for (j, p) in parts.iter_mut().enumerate() {
            *p = self.0.iter().filter(|&&x| x > j as u32).count() as u32;
        }
        Partition(parts)
    }

    /// n(lambda) = sum_i lambda_i (i-1) = sum of co-legs.
    pub fn n_stat(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| p as u64 * i as u64)
            .sum()
    }

    /// Row-major iteration over cells as (row, col), 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
    }

    pub fn cell_stats(&self, row: usize, col: usize) -> CellStats {
        let conj = self.conjugate();
        CellStats {
            arm: self.0[row] - col as u32 - 1,
            leg: conj.0[col] - row as u32 - 1,
            coarm: col as u32,
            coleg: row as u32,
        }
    }

    /// Dominance order; false when sizes differ.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return false;
            }
        }
        true
    }

    /// Young-diagram containment: self contained in `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (0..self.0.len()).all(|i| self.0[i] <= other.part(i))
    }

    /// All partitions of `n`, reverse-lexicographic (largest part first).
    pub fn enumerate(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(n: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(current.clone()));
                return;
            }
            let top = max.min(n);
            for p in (1..=top).rev() {
                current.push(p);
                rec(n - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of size at most `n`.
    pub fn enumerate_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::enumerate).collect()
    }

    /// All xi containing lambda with xi/lambda a horizontal strip of size k.
    pub fn horizontal_strips(&self, k: u32) -> Vec<Partition> {
        // Column condition: lambda'_i <= xi'_i <= lambda'_i + 1, i.e. in each
        // row, xi_i ranges between lambda_i and lambda_{i-1}.
        let rows = self.0.len() + 1;
        let mut out = Vec::new();
        let mut xi = vec![0u32; rows];
        fn rec(
            lam: &Partition,
            row: usize,
            rows: usize,
            remaining: u32,
            xi: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if row == rows {
                if remaining == 0 {
                    let parts: Vec<u32> = xi.iter().copied().filter(|&p| p > 0).collect();
                    out.push(Partition(parts));
                }
                return;
            }
            let lo = lam.part(row);
            let hi = if row == 0 {
                lam.part(0) + remaining
            } else {
                lam.part(row - 1).min(lam.part(row) + remaining)
            };
            for v in lo..=hi {
                let add = v - lam.part(row);
                if add > remaining {
                    break;
                }
                // keep weakly decreasing against the previous chosen row
                if row > 0 && v > xi[row - 1] {
                    continue;
                }
                xi[row] = v;
                rec(lam, row + 1, rows, remaining - add, xi, out);
            }
            xi[row] = 0;
        }
        rec(self, 0, rows, k, &mut xi, &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// z_lambda = prod_i m_i! i^{m_i}.
    pub fn z_classical(&self) -> BigRational {
        let mut z = BigRational::from_integer(1.into());
        let maxp = self.part(0);
        for i in 1..=maxp {
            let m = self.multiplicity(i) as u64;
            for f in 1..=m {
                z *= big(f as i64);
            }
            for _ in 0..m {
                z *= big(i as i64);
            }
        }
        z
    }

    /// z_lambda(q,t) = z_lambda prod_i (1-q^{lambda_i})/(1-t^{lambda_i}).
    pub fn z_qt(&self) -> RatFun {
        let mut f = RatFun::from_rational(self.z_classical());
        for &p in &self.0 {
            let n = one_minus_qt(p, 0);
            let d = one_minus_qt(0, p);
            f = &f * &RatFun::new(n, d);
        }
        f
    }

    /// The (q,t)-norm of the integral Macdonald polynomial:
    /// prod over cells of (1 - q^{a+1} t^l)(1 - q^a t^{l+1}).
    pub fn j_norm(&self) -> RatFun {
        let mut p = MultiPoly::one();
        for (r, c) in self.cells() {
            let s = self.cell_stats(r, c);
            p = &p * &one_minus_qt(s.arm + 1, s.leg);
            p = &p * &one_minus_qt(s.arm, s.leg + 1);
        }
        RatFun::from_poly(p)
    }

    /// prod q^{coarm} summed exponent = n(lambda'), prod t^{coleg} = n(lambda).
    pub fn n_stat_conj(&self) -> u64 {
        self.conjugate().n_stat()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Union of the multisets of parts.
pub fn union(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition(parts)
}

/// [m]_q = 1 + q + ... + q^{m-1}.
pub fn q_number(m: u32) -> MultiPoly {
    q_number_in(m, Var::q())
}

pub fn q_number_in(m: u32, var: Var) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for e in 0..m {
        p = &p + &MultiPoly::var_pow(var, e);
    }
    p
}

/// [m]_q! .
pub fn q_factorial(m: u32) -> MultiPoly {
    let mut p = MultiPoly::one();
    for k in 1..=m {
        p = &p * &q_number(k);
    }
    p
}

/// q-multinomial [m; k_1,...,k_l]_q, asserted to be a polynomial.
pub fn q_multinomial(m: u32, parts: &[u32]) -> MultiPoly {
    assert_eq!(parts.iter().sum::<u32>(), m, "parts must sum to m");
    let mut den = MultiPoly::one();
    for &k in parts {
        den = &den * &q_factorial(k);
    }
    RatFun::new(q_factorial(m), den)
        .as_polynomial()
        .expect("q-multinomial is a polynomial")
}

/// Pochhammer (a; q)_m = (1-a)(1-qa)...(1-q^{m-1}a).
pub fn pochhammer(a: &RatFun, m: u32) -> RatFun {
    let mut f = RatFun::one();
    for k in 0..m {
        let qk = RatFun::from_poly(MultiPoly::var_pow(Var::q(), k));
        f = &f * &(&RatFun::one() - &(&qk * a));
    }
    f
}

/// t-deformed hook product H_lambda(t) = prod [a + l + 1]_t.
pub fn hook_t(lambda: &Partition) -> MultiPoly {
    let mut p = MultiPoly::one();
    for (r, c) in lambda.cells() {
        let s = lambda.cell_stats(r, c);
        p = &p * &q_number_in(s.arm + s.leg + 1, Var::t());
    }
    p
}

/// The exponent f(n1, n2, k) = (M-m)(M+m-k) + m(m-1) - (k-M)(k-M-1)
/// with M = max(n1,n2), m = min(n1,n2).
pub fn f_exponent(n1: u32, n2: u32, k: u32) -> i64 {
    let big_m = n1.max(n2) as i64;
    let small_m = n1.min(n2) as i64;
    let k = k as i64;
    (big_m - small_m) * (big_m + small_m - k) + small_m * (small_m - 1)
        - (k - big_m) * (k - big_m - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(Partition::enumerate(0), vec![Partition::empty()]);
        assert_eq!(
            Partition::enumerate(3),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(Partition::enumerate(5).len(), 7);
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p(&[4]).n_stat(), 0);
        assert_eq!(p(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(p(&[3, 1]).n_stat(), 1);
    }

    #[test]
    fn dominance_and_conjugate() {
        assert!(p(&[1, 1, 1]).dominance_leq(&p(&[3])));
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])));
        assert!(!p(&[3, 1]).dominance_leq(&p(&[2, 2])));
        assert!(!p(&[2]).dominance_leq(&p(&[3])));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..=10 {
            for lam in Partition::enumerate(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn horizontal_strip_examples() {
        assert_eq!(p(&[1]).horizontal_strips(1), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(p(&[2, 1]).horizontal_strips(0), vec![p(&[2, 1])]);
        let hs = p(&[2]).horizontal_strips(2);
        assert_eq!(hs, vec![p(&[2, 2]), p(&[3, 1]), p(&[4])]);
    }

    #[test]
    fn horizontal_strips_match_brute_force() {
        for n in 0..=6 {
            for lam in Partition::enumerate(n) {
                for k in 0..=(9 - n).min(4) {
                    let mut expect: Vec<Partition> = Partition::enumerate(n + k)
                        .into_iter()
                        .filter(|xi| {
                            if !lam.contained_in(xi) {
                                return false;
                            }
                            let lc = lam.conjugate();
                            let xc = xi.conjugate();
                            (0..xc.len()).all(|i| xc.part(i) <= lc.part(i) + 1)
                        })
                        .collect();
                    expect.sort();
                    assert_eq!(lam.horizontal_strips(k), expect, "lam={lam} k={k}");
                }
            }
        }
    }

    #[test]
    fn z_factors() {
        assert_eq!(p(&[2, 1]).z_classical(), big(2));
        let z1 = p(&[1]).z_qt();
        assert_eq!(z1, RatFun::new(one_minus_qt(1, 0), one_minus_qt(0, 1)));
        let z2 = p(&[2]).z_qt();
        let expect = &RatFun::from_int(2)
            * &RatFun::new(one_minus_qt(2, 0), one_minus_qt(0, 2));
        assert_eq!(z2, expect);
    }

    #[test]
    fn j_norm_examples() {
        let j1 = p(&[1]).j_norm();
        let expect = RatFun::from_poly(&one_minus_qt(1, 0) * &one_minus_qt(0, 1));
        assert_eq!(j1, expect);
        let j2 = p(&[2]).j_norm();
        let expect = RatFun::from_poly(
            &(&one_minus_qt(2, 0) * &one_minus_qt(1, 1))
                * &(&one_minus_qt(1, 0) * &one_minus_qt(0, 1)),
        );
        assert_eq!(j2, expect);
        assert!(Partition::empty().j_norm().is_one());
    }

    #[test]
    fn q_series() {
        let expect = &(&MultiPoly::one() + &MultiPoly::var(Var::q()))
            + &MultiPoly::var_pow(Var::q(), 2);
        assert_eq!(q_number(3), expect);
        let tvar = RatFun::var(Var::t());
        let poch = pochhammer(&tvar, 2);
        let expect = RatFun::from_poly(&one_minus_qt(0, 1) * &one_minus_qt(1, 1));
        assert_eq!(poch, expect);
        let h = hook_t(&p(&[2]));
        assert_eq!(h, &MultiPoly::one() + &MultiPoly::var(Var::t()));
    }

    #[test]
    fn f_exponent_diagonal() {
        for n in 0..8 {
            assert_eq!(f_exponent(n, n, n), (n as i64) * (n as i64 - 1));
        }
        assert_eq!(f_exponent(2, 1, 2), 1 * 1 + 0 - 0);
    }

    #[test]
    fn q_multinomial_is_positive_polynomial() {
        for m in 0..=6u32 {
            for lam in Partition::enumerate(m) {
                let poly = q_multinomial(m, lam.parts());
                for (_, c) in poly.terms() {
                    assert!(*c > BigRational::zero());
                    assert!(c.denom().is_one(), "integer coefficients");
                }
            }
        }
    }

    #[test]
    fn n_stat_conjugate_minimum() {
        // n(lambda') - 2 n(lambda) >= -m(m-1), equality iff lambda = [1^m]
        for m in 1..=8u32 {
            for lam in Partition::enumerate(m) {
                let v = lam.n_stat_conj() as i64 - 2 * lam.n_stat() as i64;
                let bound = -((m as i64) * (m as i64 - 1));
                assert!(v >= bound, "{lam}");
                let column = lam.len() == m as usize;
                assert_eq!(v == bound, column, "{lam}");
            }
        }
    }
}
