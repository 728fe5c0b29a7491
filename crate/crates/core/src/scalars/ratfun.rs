//! The fraction field of `MultiPoly`: exact arithmetic, substitution,
//! polynomiality certificates and limit-taking.
//!
//! There is no general multivariate gcd here. Instead the denominator is
//! kept permanently in factored form: whenever a polynomial enters a
//! denominator it is split against a tracked factor family (single
//! variables, `1 - q^a t^b`, and the mixed binomials produced by the
//! delta-operator eigenvalues), and anything left over stays as an opaque
//! factor block. Cancellation is trial exact division of the numerator by
//! the stored factors, so whatever was multiplied in can always divide back
//! out. Equality is decided by cross-multiplication, so an uncancelled
//! common factor can never change a result.

use super::multipoly::{Monomial, MultiPoly};
use super::vars::Var;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("substituted denominator vanishes identically")]
    DenominatorVanishes,
    #[error("pole at the limit point")]
    PoleAtPoint,
}

/// Element of the fraction field. Each stored denominator factor is
/// non-constant with content 1 and positive leading coefficient; the map
/// holds multiplicities.
#[derive(Clone)]
pub struct RatFun {
    num: MultiPoly,
    den: BTreeMap<MultiPoly, u32>,
}

impl RatFun {
    pub fn zero() -> RatFun {
        RatFun { num: MultiPoly::zero(), den: BTreeMap::new() }
    }

    pub fn one() -> RatFun {
        RatFun { num: MultiPoly::one(), den: BTreeMap::new() }
    }

    pub fn from_int(n: i64) -> RatFun {
        RatFun { num: MultiPoly::from_int(n), den: BTreeMap::new() }
    }

    pub fn from_rational(c: BigRational) -> RatFun {
        RatFun { num: MultiPoly::constant(c), den: BTreeMap::new() }
    }

    pub fn var(v: Var) -> RatFun {
        RatFun { num: MultiPoly::var(v), den: BTreeMap::new() }
    }

    pub fn from_poly(p: MultiPoly) -> RatFun {
        RatFun { num: p, den: BTreeMap::new() }
    }

    pub fn new(num: MultiPoly, den: MultiPoly) -> RatFun {
        assert!(!den.is_zero(), "zero denominator");
        let (c, factors) = split_factors(den);
        let inv = BigRational::one() / c;
        let mut f = RatFun { num: num.scale(&inv), den: factors };
        f.cancel();
        f
    }

    fn from_parts(num: MultiPoly, den: BTreeMap<MultiPoly, u32>) -> RatFun {
        let mut f = RatFun { num, den };
        f.cancel();
        f
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    /// The denominator multiplied out.
    pub fn den(&self) -> MultiPoly {
        let mut p = MultiPoly::one();
        for (f, m) in &self.den {
            p = &p * &f.pow(*m);
        }
        p
    }

    pub fn den_factors(&self) -> impl Iterator<Item = (&MultiPoly, u32)> {
        self.den.iter().map(|(f, m)| (f, *m))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        if self.den.is_empty() {
            return self.num.is_one();
        }
        self.num == self.den()
    }

    pub fn inverse(&self) -> Result<RatFun, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (c, factors) = split_factors(self.num.clone());
        let inv = BigRational::one() / c;
        Ok(RatFun::from_parts(self.den().scale(&inv), factors))
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.den.is_empty() {
            return None;
        }
        self.num.as_constant()
    }

    /// Cancel stored denominator factors against the numerator.
    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let factors: Vec<MultiPoly> = self.den.keys().cloned().collect();
        for f in factors {
            while self.den.get(&f).copied().unwrap_or(0) > 0 {
                if !may_divide(&self.num, &f) {
                    break;
                }
                match self.num.exact_div(&f) {
                    Some(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&f).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&f);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    pub fn pow(&self, e: i64) -> RatFun {
        let mut acc = RatFun::one();
        let base = if e >= 0 {
            self.clone()
        } else {
            self.inverse().expect("negative power of zero")
        };
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Simultaneous substitution of variables by rational functions.
    pub fn substitute(&self, map: &HashMap<Var, RatFun>) -> Result<RatFun, ScalarError> {
        let mut out = poly_substitute(&self.num, map);
        for (f, m) in &self.den {
            let sub = poly_substitute(f, map);
            if sub.is_zero() {
                return Err(ScalarError::DenominatorVanishes);
            }
            out = &out / &sub.pow(*m as i64);
        }
        Ok(out)
    }

    /// Raises every variable to its k-th power (plethystic power substitution).
    pub fn adams(&self, k: u32) -> RatFun {
        // adams preserves content, leading sign and non-constancy, so the
        // factor form stays canonical
        let den = self.den.iter().map(|(f, m)| (f.adams(k), *m)).collect();
        RatFun { num: self.num.adams(k), den }
    }

    /// Full polynomiality certificate: succeeds iff the denominator divides
    /// the numerator exactly.
    pub fn as_polynomial(&self) -> Option<MultiPoly> {
        let mut p = self.num.clone();
        for (f, m) in &self.den {
            for _ in 0..*m {
                p = p.exact_div(f)?;
            }
        }
        Some(p)
    }

    /// Polynomiality in a subset of variables, with rational-function
    /// coefficients in the rest. Returns the coefficient of each monomial in
    /// `vars`, or `None` when the value is not polynomial in them.
    pub fn as_polynomial_in(&self, vars: &[Var]) -> Option<Vec<(Monomial, RatFun)>> {
        // Factors free of `vars` move to the coefficient side untouched.
        let mut den_v = MultiPoly::one();
        let mut coeff_scale = RatFun::one();
        for (f, m) in &self.den {
            if vars.iter().any(|v| f.contains_var(*v)) {
                den_v = &den_v * &f.pow(*m);
            } else {
                coeff_scale.den.entry(f.clone()).and_modify(|x| *x += *m).or_insert(*m);
            }
        }
        let split = |p: &MultiPoly| -> Vec<(Monomial, MultiPoly)> {
            let mut out: HashMap<Monomial, MultiPoly> = HashMap::new();
            for (m, c) in p.terms() {
                let width = m.vars().map(|v| v.0 as usize + 1).max().unwrap_or(0);
                let mut ve = vec![0u32; width];
                let mut rest = vec![0u32; width];
                for i in 0..width {
                    let e = m.exp(Var(i as u32));
                    if vars.contains(&Var(i as u32)) {
                        ve[i] = e;
                    } else {
                        rest[i] = e;
                    }
                }
                let vm = Monomial::from_exps(ve);
                let rm = Monomial::from_exps(rest);
                let entry = out.entry(vm).or_insert_with(MultiPoly::zero);
                *entry = &*entry + &MultiPoly::monomial(rm, c.clone());
            }
            let mut v: Vec<_> = out.into_iter().filter(|(_, p)| !p.is_zero()).collect();
            v.sort_by(|a, b| a.0.cmp(&b.0));
            v
        };
        // Division in k(rest)[vars]: single divisor, so a zero remainder is
        // equivalent to divisibility.
        let num_t = split(&self.num);
        let den_t = split(&den_v);
        let (lead_m, lead_c) = den_t.last().expect("nonzero denominator");
        let lead = RatFun::from_poly(lead_c.clone());
        let mut rem: Vec<(Monomial, RatFun)> = num_t
            .into_iter()
            .map(|(m, p)| (m, RatFun::from_poly(p)))
            .collect();
        let mut quot: Vec<(Monomial, RatFun)> = Vec::new();
        while let Some((rm, rc)) = rem.pop() {
            if rc.is_zero() {
                continue;
            }
            let qm = rm.div(lead_m)?;
            let qc = &rc / &lead;
            // The leading den term reproduces exactly the popped term; skip it.
            for (dm, dc) in &den_t[..den_t.len() - 1] {
                let m = qm.mul(dm);
                let sub = &qc * &RatFun::from_poly(dc.clone());
                merge_term(&mut rem, m, -&sub);
            }
            quot.push((qm, qc));
        }
        quot.sort_by(|a, b| a.0.cmp(&b.0));
        Some(
            quot.into_iter()
                .map(|(m, c)| (m, &c * &coeff_scale))
                .collect(),
        )
    }

    /// Repeatedly cancels `(var - point)` from numerator and denominator, then
    /// evaluates `var = point`.
    pub fn limit_cancel(&self, var: Var, point: &BigRational) -> Result<RatFun, ScalarError> {
        let factor = &MultiPoly::var(var) - &MultiPoly::constant(point.clone());
        let mut num = self.num.clone();
        let mut den = self.den();
        loop {
            let nv = num.eval_var(var, point);
            let dv = den.eval_var(var, point);
            if nv.is_zero() && dv.is_zero() && !num.is_zero() {
                num = num.exact_div(&factor).expect("vanishing implies divisibility");
                den = den.exact_div(&factor).expect("vanishing implies divisibility");
            } else if dv.is_zero() {
                return Err(ScalarError::PoleAtPoint);
            } else {
                return Ok(&RatFun::from_poly(nv) / &RatFun::from_poly(dv));
            }
        }
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        let den_deg: u32 = self.den.iter().map(|(f, m)| f.degree_in(v) * m).sum();
        self.num.degree_in(v).max(den_deg)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.keys().any(|f| f.contains_var(v))
    }
}

fn merge_term(terms: &mut Vec<(Monomial, RatFun)>, m: Monomial, c: RatFun) {
    if c.is_zero() {
        return;
    }
    match terms.binary_search_by(|(tm, _)| tm.cmp(&m)) {
        Ok(i) => {
            let s = &terms[i].1 + &c;
            if s.is_zero() {
                terms.remove(i);
            } else {
                terms[i].1 = s;
            }
        }
        Err(i) => terms.insert(i, (m, c)),
    }
}

pub fn poly_substitute(p: &MultiPoly, map: &HashMap<Var, RatFun>) -> RatFun {
    if let Some(f) = monomial_substitute(p, map) {
        return f;
    }
    let mut powers: HashMap<(Var, u32), RatFun> = HashMap::new();
    let mut pow = |v: Var, e: u32, map: &HashMap<Var, RatFun>| -> RatFun {
        if let Some(f) = powers.get(&(v, e)) {
            return f.clone();
        }
        let base = map.get(&v).cloned().unwrap_or_else(|| RatFun::var(v));
        let f = base.pow(e as i64);
        powers.insert((v, e), f.clone());
        f
    };
    let mut acc = RatFun::zero();
    for (m, c) in p.terms() {
        let mut term = RatFun::from_rational(c.clone());
        for v in m.vars() {
            term = &term * &pow(v, m.exp(v), map);
        }
        acc = &acc + &term;
    }
    acc
}

/// Fast path for substitutions whose images are all monomials times a
/// constant (e.g. `t -> 1/t` or `q -> q^2 t`): exponent arithmetic on the
/// terms directly, avoiding term-by-term rational-function accumulation.
fn monomial_substitute(p: &MultiPoly, map: &HashMap<Var, RatFun>) -> Option<RatFun> {
    // image of each mapped variable as (coefficient, signed exponent vector)
    let mut images: HashMap<Var, (BigRational, Vec<i64>)> = HashMap::new();
    for (v, f) in map {
        if f.num.num_terms() != 1 {
            return None;
        }
        let (nm, nc) = f.num.leading().unwrap();
        let mut exps: Vec<i64> = Vec::new();
        let bump = |m: &Monomial, sign: i64, exps: &mut Vec<i64>| {
            for w in m.vars() {
                let i = w.0 as usize;
                if exps.len() <= i {
                    exps.resize(i + 1, 0);
                }
                exps[i] += sign * m.exp(w) as i64;
            }
        };
        bump(nm, 1, &mut exps);
        for (g, mult) in &f.den {
            if g.num_terms() != 1 {
                return None;
            }
            let (gm, gc) = g.leading().unwrap();
            if !gc.is_one() {
                return None;
            }
            for _ in 0..*mult {
                bump(gm, -1, &mut exps);
            }
        }
        images.insert(*v, (nc.clone(), exps));
    }
    let mut acc: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut coef = c.clone();
        let mut exps: Vec<i64> = Vec::new();
        for v in m.vars() {
            let e = m.exp(v);
            let i = v.0 as usize;
            match images.get(&v) {
                Some((ic, ie)) => {
                    for _ in 0..e {
                        coef *= ic;
                    }
                    if exps.len() < ie.len() {
                        exps.resize(ie.len(), 0);
                    }
                    for (j, d) in ie.iter().enumerate() {
                        exps[j] += e as i64 * d;
                    }
                }
                None => {
                    if exps.len() <= i {
                        exps.resize(i + 1, 0);
                    }
                    exps[i] += e as i64;
                }
            }
        }
        let entry = acc.entry(exps).or_insert_with(|| BigRational::from_integer(0.into()));
        *entry += coef;
    }
    // clear the common monomial denominator
    let width = acc.keys().map(|e| e.len()).max().unwrap_or(0);
    let mut shift = vec![0i64; width];
    for e in acc.keys() {
        for (i, s) in shift.iter_mut().enumerate() {
            let x = e.get(i).copied().unwrap_or(0);
            if x < *s {
                *s = x;
            }
        }
    }
    let mut num = MultiPoly::zero();
    for (e, c) in acc {
        let exps: Vec<u32> = (0..width)
            .map(|i| (e.get(i).copied().unwrap_or(0) - shift[i]) as u32)
            .collect();
        num = &num + &MultiPoly::monomial(Monomial::from_exps(exps), c);
    }
    let den_exps: Vec<u32> = shift.iter().map(|s| (-s) as u32).collect();
    let den = MultiPoly::monomial(Monomial::from_exps(den_exps), BigRational::one());
    Some(RatFun::new(num, den))
}

const FACTOR_EXP_CAP: u32 = 24;

/// Split a polynomial into tracked factors plus an opaque remainder block.
/// Returns the constant (content and sign) pulled out, with every returned
/// factor content-1, positive-leading and non-constant.
fn split_factors(p: MultiPoly) -> (BigRational, BTreeMap<MultiPoly, u32>) {
    assert!(!p.is_zero(), "cannot factor zero");
    let mut c = p.content();
    if p.leading_sign() < 0 {
        c = -c;
    }
    let mut rest = p.scale(&(BigRational::one() / &c));
    let mut factors: BTreeMap<MultiPoly, u32> = BTreeMap::new();
    if rest.is_one() {
        return (c, factors);
    }
    let push = |f: MultiPoly, factors: &mut BTreeMap<MultiPoly, u32>| {
        *factors.entry(f).or_insert(0) += 1;
    };
    // single variables first
    for v in rest.vars() {
        let k = rest.min_degree_in(v);
        if k > 0 {
            let var = MultiPoly::var(v);
            for _ in 0..k {
                rest = rest.exact_div(&var).unwrap();
                push(var.clone(), &mut factors);
            }
        }
    }
    // 1 - q^a t^b, by ascending total exponent for the finest split
    let q = Var::q();
    let t = Var::t();
    let dq = rest.degree_in(q).min(FACTOR_EXP_CAP);
    let dt = rest.degree_in(t).min(FACTOR_EXP_CAP);
    let mut candidates: Vec<(u32, MultiPoly)> = Vec::new();
    for a in 0..=dq {
        for b in 0..=dt {
            if a + b == 0 {
                continue;
            }
            candidates.push((a + b, one_minus_qt(a, b)));
        }
    }
    // w t^b - q^a and w - q^a t^b for every other variable present
    for v in rest.vars() {
        if v == q || v == t {
            continue;
        }
        for a in 0..=dq {
            for b in 0..=dt {
                let qa = MultiPoly::var_pow(q, a);
                let tb = MultiPoly::var_pow(t, b);
                candidates.push((a + b + 1, &(&MultiPoly::var(v) * &tb) - &qa));
                if a + b > 0 {
                    candidates.push((a + b + 1, &MultiPoly::var(v) - &(&qa * &tb)));
                }
            }
        }
    }
    candidates.sort_by(|x, y| x.0.cmp(&y.0));
    for (_, f) in candidates {
        loop {
            if rest.is_constant() {
                break;
            }
            if !may_divide(&rest, &f) {
                break;
            }
            match rest.exact_div(&f) {
                Some(nr) => {
                    rest = nr;
                    // keep factors canonical: positive leading coefficient
                    let f_canon = if f.leading_sign() < 0 {
                        c = -c;
                        -&f
                    } else {
                        f.clone()
                    };
                    push(f_canon, &mut factors);
                }
                None => break,
            }
        }
    }
    if let Some(r) = rest.as_constant() {
        c *= r;
    } else {
        let mut rc = rest.content();
        if rest.leading_sign() < 0 {
            rc = -rc;
        }
        if !rc.is_one() {
            c *= &rc;
            rest = rest.scale(&(BigRational::one() / rc));
        }
        push(rest, &mut factors);
    }
    (c, factors)
}

// Divisibility pre-filter: Kronecker substitution maps both polynomials to
// dense univariate images modulo a prime. The substitution is injective on
// the numerator's monomials, so a failed image division proves
// non-divisibility; exact division only runs when the filter passes. False
// negatives (prime hitting a denominator or leading coefficient) merely skip
// a cancellation, which equality by cross-multiplication tolerates.
const KRON_PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % KRON_PRIME as u128) as u64
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64) -> Option<u64> {
    if a % KRON_PRIME == 0 {
        return None;
    }
    Some(powmod(a, KRON_PRIME - 2))
}

fn coeff_mod(c: &BigRational) -> Option<u64> {
    let p = BigInt::from(KRON_PRIME);
    let n = ((c.numer() % &p) + &p) % &p;
    let d = ((c.denom() % &p) + &p) % &p;
    let n: u64 = n.try_into().ok()?;
    let d: u64 = d.try_into().ok()?;
    Some(mulmod(n, invmod(d)?))
}

const KRON_SIZE_CAP: usize = 1 << 22;

fn kron_image(p: &MultiPoly, strides: &[usize], len: usize) -> Option<Vec<u64>> {
    let mut out = vec![0u64; len];
    for (m, c) in p.terms() {
        let mut idx = 0usize;
        for v in m.vars() {
            idx += m.exp(v) as usize * strides[v.0 as usize];
        }
        let cm = coeff_mod(c)?;
        out[idx] = (out[idx] + cm) % KRON_PRIME;
    }
    Some(out)
}

/// `false` means `f` certainly does not divide `num`; `true` means it might.
fn may_divide(num: &MultiPoly, f: &MultiPoly) -> bool {
    if num.is_zero() {
        return true;
    }
    if f.total_degree() > num.total_degree() {
        return false;
    }
    let nvars = num
        .terms()
        .chain(f.terms())
        .flat_map(|(m, _)| m.vars())
        .map(|v| v.0 as usize + 1)
        .max()
        .unwrap_or(0);
    let mut strides = vec![0usize; nvars];
    let mut len = 1usize;
    for i in 0..nvars {
        let v = Var(i as u32);
        let dn = num.degree_in(v) as usize;
        if f.degree_in(v) as usize > dn {
            return false;
        }
        strides[i] = len;
        len = match len.checked_mul(dn + 1) {
            Some(l) if l <= KRON_SIZE_CAP => l,
            _ => return true, // image too large, skip the filter
        };
    }
    let (mut n, fi) = match (kron_image(num, &strides, len), kron_image(f, &strides, len)) {
        (Some(n), Some(f)) => (n, f),
        _ => return true,
    };
    let flead = match fi.iter().rposition(|&c| c != 0) {
        Some(i) => i,
        None => return true, // f vanished mod p; cannot conclude
    };
    let finv = match invmod(fi[flead]) {
        Some(x) => x,
        None => return true,
    };
    let fterms: Vec<(usize, u64)> = fi
        .iter()
        .enumerate()
        .filter(|&(i, &c)| c != 0 && i != flead)
        .map(|(i, &c)| (i, c))
        .collect();
    // sparse-divisor synthetic division from the top
    for i in (0..n.len()).rev() {
        if n[i] == 0 {
            continue;
        }
        if i < flead {
            return false; // nonzero remainder
        }
        let q = mulmod(n[i], finv);
        let off = i - flead;
        n[i] = 0;
        for &(j, c) in &fterms {
            let k = off + j;
            let sub = mulmod(q, c);
            n[k] = (n[k] + KRON_PRIME - sub) % KRON_PRIME;
        }
    }
    true
}

impl PartialEq for RatFun {
    /// Cross-multiplied equality; independent of representation.
    fn eq(&self, other: &RatFun) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den() == &other.num * &self.den()
    }
}

impl Eq for RatFun {}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, other: &RatFun) -> RatFun {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFun::from_parts(&self.num + &other.num, self.den.clone());
        }
        // least common multiple of the factored denominators
        let mut lcm = self.den.clone();
        for (f, m) in &other.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let extend = |own: &BTreeMap<MultiPoly, u32>, num: &MultiPoly| -> MultiPoly {
            let mut p = num.clone();
            for (f, m) in &lcm {
                let have = own.get(f).copied().unwrap_or(0);
                for _ in have..*m {
                    p = &p * f;
                }
            }
            p
        };
        let num = &extend(&self.den, &self.num) + &extend(&other.den, &other.num);
        RatFun::from_parts(num, lcm)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, other: &RatFun) -> RatFun {
        self + &(-other)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, other: &RatFun) -> RatFun {
        if self.is_zero() || other.is_zero() {
            return RatFun::zero();
        }
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += *m;
        }
        RatFun::from_parts(&self.num * &other.num, den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, other: &RatFun) -> RatFun {
        assert!(!other.is_zero(), "division by zero rational function");
        if self.is_zero() {
            return RatFun::zero();
        }
        self * &other.inverse().unwrap()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den())
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `1 - q^a t^b` as a polynomial.
pub fn one_minus_qt(a: u32, b: u32) -> MultiPoly {
    let m = &MultiPoly::var_pow(Var::q(), a) * &MultiPoly::var_pow(Var::t(), b);
    &MultiPoly::one() - &m
}

/// `q^a t^b` as a rational function; either exponent may be negative.
pub fn qt_monomial(a: i64, b: i64) -> RatFun {
    let pos = |v: Var, e: i64| -> RatFun {
        if e >= 0 {
            RatFun::from_poly(MultiPoly::var_pow(v, e as u32))
        } else {
            RatFun::new(MultiPoly::one(), MultiPoly::var_pow(v, (-e) as u32))
        }
    };
    &pos(Var::q(), a) * &pos(Var::t(), b)
}

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
