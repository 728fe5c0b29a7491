//! Sparse multivariate polynomials over arbitrary-precision rationals.

use super::vars::Var;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector indexed by the session variable order, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        let mut exps = vec![0; v.0 as usize + 1];
        exps[v.0 as usize] = e;
        Monomial(exps)
    }

    pub fn from_exps(mut exps: Vec<u32>) -> Monomial {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0.get(v.0 as usize).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let mut exps = vec![0u32; n];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exp(Var(i as u32)) + other.exp(Var(i as u32));
        }
        Monomial::from_exps(exps)
    }

    /// Componentwise quotient, `None` if any exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut exps = self.0.clone();
        for (i, &e) in other.0.iter().enumerate() {
            if exps[i] < e {
                return None;
            }
            exps[i] -= e;
        }
        Some(Monomial::from_exps(exps))
    }

    /// Raises every exponent by the factor `k` (plethystic power substitution).
    pub fn adams(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| Var(i as u32))
    }
}

// Graded lexicographic order over the session variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            let a = self.exp(Var(i as u32));
            let b = other.exp(Var(i as u32));
            match a.cmp(&b) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: map from monomial to nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> MultiPoly {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn from_int(n: i64) -> MultiPoly {
        MultiPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::monomial(Monomial::var(v, 1), BigRational::one())
    }

    pub fn var_pow(v: Var, e: u32) -> MultiPoly {
        MultiPoly::monomial(Monomial::var(v, e), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> MultiPoly {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_one())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert_add(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut seen = std::collections::BTreeSet::new();
        for m in self.terms.keys() {
            seen.extend(m.vars());
        }
        seen.into_iter().collect()
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        if m.is_one() {
            return self.clone();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Content: positive gcd of the coefficients (as a rational), 0 for the zero polynomial.
    pub fn content(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// Sign of the leading coefficient under the monomial order; 0 for zero.
    pub fn leading_sign(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some((_, c)) => {
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    /// Exact multivariate division: returns `c` with `self = b * c`, or `None`.
    pub fn exact_div(&self, b: &MultiPoly) -> Option<MultiPoly> {
        assert!(!b.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = b.as_constant() {
            return Some(self.scale(&(BigRational::one() / c)));
        }
        let (bm, bc) = b.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(bm)?;
            let qc = rc / bc;
            let term = MultiPoly::monomial(qm, qc);
            rem = &rem - &(&term * b);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Substitutes every variable by its k-th power.
    pub fn adams(&self, k: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.adams(k), c.clone()))
                .collect(),
        }
    }

    /// Specializes one variable to a rational value.
    pub fn eval_var(&self, v: Var, value: &BigRational) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut exps: Vec<u32> = (0..m.0.len() as u32).map(|i| m.exp(Var(i))).collect();
            if (v.0 as usize) < exps.len() {
                exps[v.0 as usize] = 0;
            }
            let mut coef = c.clone();
            for _ in 0..e {
                coef *= value;
            }
            out.insert_add(Monomial::from_exps(exps), coef);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Ord for MultiPoly {
    fn cmp(&self, other: &MultiPoly) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &MultiPoly) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        if self.is_zero() || other.is_zero() {
            return out;
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let abs = c.abs();
            let show_coef = !abs.is_one() || m.is_one();
            if show_coef {
                write!(f, "{}", abs)?;
            }
            let mut needs_star = show_coef;
            for v in m.vars() {
                if needs_star {
                    write!(f, "*")?;
                }
                needs_star = true;
                let e = m.exp(v);
                if e == 1 {
                    write!(f, "{}", v.name())?;
                } else {
                    write!(f, "{}^{}", v.name(), e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
