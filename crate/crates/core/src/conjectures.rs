//! The (alpha, gamma) reparametrization, the c/h coefficient families,
//! symmetric-group characters, executable checks for the proven statements
//! of the theory, and the positivity-conjecture sweeps.
//!
//! All sweep values are computed in the exact (q, t) arithmetic first; the
//! reparametrization q = 1 + gamma alpha, t = 1 + gamma (and then alpha =
//! 1 + b when a conjecture is stated over b) is substituted once at the
//! boundary, which keeps denominators inside the tracked factor family.

use crate::characters::{
    qt_to_alpha_gamma_map, structure_g, theta_norm_eval, theta_norm_poly,
    GNormalization,
};
use crate::macdonald::{macdonald_j, super_nabla_pair, Side, CACHE_SCHEMA};
use crate::partitions::{f_exponent, hook_t, pochhammer, q_number, Partition};
use crate::scalars::{big, one_minus_qt, qt_monomial, MultiPoly, RatFun, Var};
use crate::symfunc::{basis_element, Alphabet, Basis, SymFun};
use num_rational::BigRational;
use num_traits::Zero;
use once_cell::sync::Lazy;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConjError {
    /// A proven positivity statement failed; this signals a bug, never a finding.
    #[error("positivity violation in a proven statement: {0}")]
    PositivityViolation(String),
}

/// Irreducible symmetric-group character chi^lambda(mu) via recursive
/// border-strip removal on the beta-set (first-column hook lengths).
pub fn mn_char(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "character needs |lambda| = |mu|");
    let len = lambda.len().max(1);
    // strictly decreasing beta-set beta_i = lambda_i + (len - 1 - i)
    let beta: Vec<u32> = (0..len)
        .map(|i| lambda.part(i) + (len - 1 - i) as u32)
        .collect();
    mn_rec(&beta, mu.parts())
}

fn mn_rec(beta: &[u32], mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let r = mu[0];
    let rest = &mu[1..];
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // height = number of beta entries strictly between b-r and b
        let height = beta
            .iter()
            .filter(|&&c| c > b - r && c < b)
            .count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<u32> = beta.to_vec();
        next[i] = b - r;
        next.sort_unstable_by(|x, y| y.cmp(x));
        total += sign * mn_rec(&next, rest);
    }
    total
}

// --- reparametrization helpers -------------------------------------------------

/// Substitute q = 1 + gamma alpha, t = 1 + gamma.
pub fn to_alpha_gamma(f: &RatFun) -> RatFun {
    f.substitute(&qt_to_alpha_gamma_map())
        .expect("the (alpha,gamma) reparametrization never hits a pole")
}

/// Substitute alpha = 1 + b.
pub fn alpha_to_b(f: &RatFun) -> RatFun {
    let mut map = HashMap::new();
    map.insert(Var::alpha(), &RatFun::one() + &RatFun::var(Var::b()));
    f.substitute(&map)
        .expect("the b reparametrization never hits a pole")
}

/// The limit gamma -> 0, cancelling shared gamma factors first.
pub fn gamma_zero(f: &RatFun) -> RatFun {
    f.limit_cancel(Var::gamma(), &BigRational::zero())
        .expect("gamma -> 0 limit exists on the Jack slice")
}

/// alpha = (1-q)/(1-t) as an element of Q(q,t).
pub fn alpha_qt() -> RatFun {
    RatFun::new(one_minus_qt(1, 0), one_minus_qt(0, 1))
}

fn z_rat(p: &Partition) -> RatFun {
    RatFun::from_rational(p.z_classical())
}

fn part_json(p: &Partition) -> Value {
    json!(p.parts())
}

// --- certificates ---------------------------------------------------------------

/// Serialized verdict of one identity/conjecture instance.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub check: String,
    pub inputs: Value,
    /// The normalized quantity in the conjecture's target variables;
    /// zero for pure equality checks.
    pub value: RatFun,
    pub is_polynomial: bool,
    pub integer_coeffs: bool,
    pub nonneg_coeffs: bool,
    pub passed: bool,
    pub runtime_ms: u64,
    pub config: Value,
}

/// (is_polynomial, integer_coeffs, nonneg_coeffs) of a rational function.
pub fn poly_flags(f: &RatFun) -> (bool, bool, bool) {
    match f.as_polynomial() {
        None => (false, false, false),
        Some(p) => {
            let mut int = true;
            let mut nonneg = true;
            for (_, c) in p.terms() {
                if !c.is_integer() {
                    int = false;
                }
                if c < &BigRational::zero() {
                    nonneg = false;
                }
            }
            (true, int, nonneg)
        }
    }
}

impl Certificate {
    /// Certificate for a "non-negative integer polynomial" claim.
    pub fn positivity(
        check: &str,
        inputs: Value,
        value: RatFun,
        config: Value,
        started: Instant,
    ) -> Certificate {
        let (is_polynomial, integer_coeffs, nonneg_coeffs) = poly_flags(&value);
        Certificate {
            check: check.to_string(),
            inputs,
            value,
            is_polynomial,
            integer_coeffs,
            nonneg_coeffs,
            passed: is_polynomial && integer_coeffs && nonneg_coeffs,
            runtime_ms: started.elapsed().as_millis() as u64,
            config,
        }
    }

    /// Certificate for an "integer polynomial" claim (sign unconstrained).
    pub fn integrality(
        check: &str,
        inputs: Value,
        value: RatFun,
        config: Value,
        started: Instant,
    ) -> Certificate {
        let mut c = Certificate::positivity(check, inputs, value, config, started);
        c.passed = c.is_polynomial && c.integer_coeffs;
        c
    }

    /// Certificate for an exact-equality check of a proven statement.
    pub fn equality(check: &str, inputs: Value, ok: bool, started: Instant) -> Certificate {
        Certificate {
            check: check.to_string(),
            inputs,
            value: RatFun::zero(),
            is_polynomial: ok,
            integer_coeffs: ok,
            nonneg_coeffs: ok,
            passed: ok,
            runtime_ms: started.elapsed().as_millis() as u64,
            config: Value::Null,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "inputs": self.inputs,
            "value": crate::scalars::json::ratfun_to_json(&self.value),
            "flags": {
                "is_polynomial": self.is_polynomial,
                "integer_coeffs": self.integer_coeffs,
                "nonneg_coeffs": self.nonneg_coeffs,
            },
            "passed": self.passed,
            "runtime_ms": self.runtime_ms,
            "cache_schema": CACHE_SCHEMA,
            "config": self.config,
        })
    }
}

// --- the normalized integral form and the c/h coefficients ----------------------

/// The renormalized integral form: J_lambda/(1-t)^{|lambda|} at q = 1+gamma
/// alpha, t = 1+gamma. Its monomial-basis coefficients are asserted to be
/// polynomials in alpha and gamma with non-negative integer coefficients.
pub fn jfrak(lam: &Partition) -> Result<SymFun, ConjError> {
    let m = lam.size() as i64;
    let scale = RatFun::new(MultiPoly::one(), one_minus_qt(0, 1)).pow(m);
    let f = macdonald_j(lam)
        .scale(&scale)
        .map_coeffs(|c| to_alpha_gamma(c));
    for (mu, c) in f.convert(Basis::M) {
        let (poly, int, nonneg) = poly_flags(&c);
        if !(poly && int && nonneg) {
            return Err(ConjError::PositivityViolation(format!(
                "monomial coefficient m_{mu} of the normalized form of {lam} is {c}"
            )));
        }
    }
    Ok(f)
}

type TripleKey = (Partition, Partition, Partition);
type TripleLayer = BTreeMap<TripleKey, RatFun>;

/// c and h coefficient tables for one size, in the (alpha, gamma) variables.
#[derive(Clone, Debug)]
pub struct GJTable {
    pub m: u32,
    pub c: BTreeMap<TripleKey, RatFun>,
    pub h: BTreeMap<TripleKey, RatFun>,
}

/// Layers 0..=m of the u-graded triple-tensor series
/// sum_lambda u^{|lambda|} w(lambda) f_lambda[X] f_lambda[Y] f_lambda[Z]
/// with f expanded in the power-sum basis.
fn triple_series(
    m: u32,
    weight: impl Fn(&Partition) -> RatFun,
    expand: impl Fn(&Partition) -> Vec<(Partition, RatFun)>,
) -> Vec<TripleLayer> {
    let mut series: Vec<TripleLayer> = Vec::with_capacity(m as usize + 1);
    for d in 0..=m {
        let mut layer = TripleLayer::new();
        if d == 0 {
            layer.insert(
                (Partition::empty(), Partition::empty(), Partition::empty()),
                RatFun::one(),
            );
        } else {
            for lam in Partition::enumerate(d) {
                let w = weight(&lam);
                let a = expand(&lam);
                for (pi, ap) in &a {
                    let wp = &w * ap;
                    for (mu, am) in &a {
                        let wpm = &wp * am;
                        for (nu, an) in &a {
                            let term = &wpm * an;
                            let key = (pi.clone(), mu.clone(), nu.clone());
                            match layer.entry(key) {
                                std::collections::btree_map::Entry::Vacant(e) => {
                                    e.insert(term);
                                }
                                std::collections::btree_map::Entry::Occupied(mut e) => {
                                    *e.get_mut() = e.get() + &term;
                                }
                            }
                        }
                    }
                }
            }
        }
        series.push(layer);
    }
    series
}

fn triple_add_scaled(acc: &mut [TripleLayer], other: &[TripleLayer], scale: &RatFun) {
    for (a, o) in acc.iter_mut().zip(other) {
        for (key, v) in o {
            let term = scale * v;
            match a.entry(key.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(term);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = e.get() + &term;
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
    }
}

fn triple_mul(a: &[TripleLayer], b: &[TripleLayer]) -> Vec<TripleLayer> {
    let top = a.len() - 1;
    let mut out: Vec<TripleLayer> = vec![TripleLayer::new(); top + 1];
    for (da, la) in a.iter().enumerate() {
        for (db, lb) in b.iter().enumerate() {
            if da + db > top {
                break;
            }
            let layer = &mut out[da + db];
            for ((p1, m1, n1), v1) in la {
                for ((p2, m2, n2), v2) in lb {
                    let key = (
                        crate::partitions::union(p1, p2),
                        crate::partitions::union(m1, m2),
                        crate::partitions::union(n1, n2),
                    );
                    let term = v1 * v2;
                    match layer.entry(key) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(term);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() = e.get() + &term;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Formal logarithm of a triple-tensor series with constant layer 1,
/// truncated at the top grade.
fn triple_log(f: &[TripleLayer]) -> Vec<TripleLayer> {
    let top = f.len() - 1;
    let mut g = f.to_vec();
    g[0].clear(); // g = f - 1
    let mut acc: Vec<TripleLayer> = vec![TripleLayer::new(); top + 1];
    let mut power = g.clone();
    for k in 1..=top {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let scale = RatFun::from_rational(big(sign) / big(k as i64));
        triple_add_scaled(&mut acc, &power, &scale);
        if k < top {
            power = triple_mul(&power, &g);
        }
    }
    acc
}

static GJ_CACHE: Lazy<RwLock<HashMap<u32, Arc<GJTable>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// The c and h tables of size m. The defining series is computed in (q,t):
/// per lambda the weight collapses to t^{-2n(lambda)} q^{n(lambda')} /
/// ((1-t)^{|lambda|} j_lambda), because the (1-t)-powers of the three
/// normalized forms partly cancel against gamma^{-2|lambda|} in the norm.
pub fn gj_table(m: u32) -> Arc<GJTable> {
    assert!(m >= 1, "tables are defined for m >= 1");
    if let Some(t) = GJ_CACHE.read().unwrap().get(&m) {
        return t.clone();
    }
    let weight = |lam: &Partition| {
        let d = lam.size() as i64;
        let mono = qt_monomial(lam.n_stat_conj() as i64, -2 * (lam.n_stat() as i64));
        let den = &RatFun::from_poly(one_minus_qt(0, 1)).pow(d) * &lam.j_norm();
        &mono / &den
    };
    let expand = |lam: &Partition| {
        macdonald_j(lam)
            .terms()
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect::<Vec<_>>()
    };
    let series = triple_series(m, weight, expand);
    let mut c = BTreeMap::new();
    for (key, v) in &series[m as usize] {
        let z = key.0.z_qt();
        c.insert(key.clone(), to_alpha_gamma(&(v * &z)));
    }
    let log = triple_log(&series);
    let norm = &alpha_qt() * &RatFun::from_poly(q_number(m));
    let mut h = BTreeMap::new();
    for (key, v) in &log[m as usize] {
        h.insert(key.clone(), to_alpha_gamma(&(v * &norm)));
    }
    let table = Arc::new(GJTable { m, c, h });
    GJ_CACHE
        .write()
        .unwrap()
        .entry(m)
        .or_insert(table)
        .clone()
}

/// c^pi_{mu,nu}(alpha,gamma); zero when absent from the table.
pub fn gj_c(pi: &Partition, mu: &Partition, nu: &Partition) -> RatFun {
    let t = gj_table(pi.size());
    t.c.get(&(pi.clone(), mu.clone(), nu.clone()))
        .cloned()
        .unwrap_or_else(RatFun::zero)
}

/// h^pi_{mu,nu}(alpha,gamma); zero when absent from the table.
pub fn gj_h(pi: &Partition, mu: &Partition, nu: &Partition) -> RatFun {
    let t = gj_table(pi.size());
    t.h.get(&(pi.clone(), mu.clone(), nu.clone()))
        .cloned()
        .unwrap_or_else(RatFun::zero)
}

// --- independent Jack oracle ----------------------------------------------------

/// The alpha-deformed power-sum scalar product <p_mu, p_nu>_alpha
/// = delta z_mu alpha^{l(mu)}.
pub fn jack_scalar(f: &SymFun, g: &SymFun) -> RatFun {
    let mut s = RatFun::zero();
    for (mu, a) in f.terms() {
        let b = g.coeff(mu);
        if b.is_zero() {
            continue;
        }
        let z = &z_rat(mu) * &RatFun::var(Var::alpha()).pow(mu.len() as i64);
        s = &s + &(&(a * &b) * &z);
    }
    s
}

static JACK_CACHE: Lazy<RwLock<HashMap<Partition, Arc<SymFun>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Integral-form Jack polynomial J^{(alpha)}_lambda, built by Gram-Schmidt
/// over <,>_alpha independently of the Macdonald machinery, normalized by
/// the hook product: [m_lambda] J_lambda = prod (alpha a(s) + l(s) + 1).
pub fn jack_j(lam: &Partition) -> Arc<SymFun> {
    if let Some(f) = JACK_CACHE.read().unwrap().get(lam) {
        return f.clone();
    }
    let d = lam.size();
    // Gram-Schmidt in a dominance-compatible order
    let mut pending: Vec<Partition> = Partition::enumerate(d);
    let mut done: Vec<(Partition, SymFun, RatFun)> = Vec::new();
    while !pending.is_empty() {
        let idx = pending
            .iter()
            .position(|cand| {
                pending
                    .iter()
                    .all(|other| other == cand || !other.dominance_leq(cand))
            })
            .expect("dominance order has a minimal element");
        let cand = pending.remove(idx);
        let mut f = basis_element(Basis::M, &cand, d);
        for (_, p, norm) in &done {
            let c = &jack_scalar(&f, p) / norm;
            if !c.is_zero() {
                f = &f - &p.scale(&c);
            }
        }
        let norm = jack_scalar(&f, &f);
        done.push((cand, f, norm));
    }
    let mut table = JACK_CACHE.write().unwrap();
    for (cand, p, _) in done {
        let mut hook = RatFun::one();
        for (r, c) in cand.cells() {
            let s = cand.cell_stats(r, c);
            let factor = &(&RatFun::var(Var::alpha()) * &RatFun::from_int(s.arm as i64))
                + &RatFun::from_int(s.leg as i64 + 1);
            hook = &hook * &factor;
        }
        table.entry(cand).or_insert_with(|| Arc::new(p.scale(&hook)));
    }
    table[lam].clone()
}

/// <J_lambda, J_lambda>_alpha.
pub fn jack_jnorm(lam: &Partition) -> RatFun {
    let j = jack_j(lam);
    jack_scalar(&j, &j)
}

/// Jack c and h tables of size m (coefficients in alpha), from the classical
/// defining series with weight 1/j_lambda and normalizations z_pi alpha^{l(pi)}
/// and alpha m.
pub struct JackTable {
    pub m: u32,
    pub c: BTreeMap<TripleKey, RatFun>,
    pub h: BTreeMap<TripleKey, RatFun>,
}

pub fn jack_table(m: u32) -> JackTable {
    assert!(m >= 1);
    let weight = |lam: &Partition| &RatFun::one() / &jack_jnorm(lam);
    let expand = |lam: &Partition| {
        jack_j(lam)
            .terms()
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect::<Vec<_>>()
    };
    let series = triple_series(m, weight, expand);
    let mut c = BTreeMap::new();
    for (key, v) in &series[m as usize] {
        let z = &z_rat(&key.0) * &RatFun::var(Var::alpha()).pow(key.0.len() as i64);
        c.insert(key.clone(), v * &z);
    }
    let log = triple_log(&series);
    let norm = &RatFun::var(Var::alpha()) * &RatFun::from_int(m as i64);
    let mut h = BTreeMap::new();
    for (key, v) in &log[m as usize] {
        h.insert(key.clone(), v * &norm);
    }
    JackTable { m, c, h }
}

/// Jack character theta^{(alpha)}_mu(lambda)
/// = [p_mu] (p_1^perp)^{|lambda|-|mu|} J^{(alpha)}_lambda / (|lambda|-|mu|)!.
pub fn jack_theta(mu: &Partition, lam: &Partition) -> RatFun {
    if mu.size() > lam.size() {
        return RatFun::zero();
    }
    let r = lam.size() - mu.size();
    let ones = Partition::new(vec![1; r as usize]);
    let lowered = SymFun::p(ones, r).perp(&jack_j(lam));
    let mut fact = big(1);
    for k in 2..=r as i64 {
        fact *= big(k);
    }
    &lowered.coeff(mu) / &RatFun::from_rational(fact)
}

// --- executable checks of the proven statements ----------------------------------

/// Marginal sums: sum_nu c^pi_{mu,nu} equals
/// (1-t)^{-m} q^{binom(m,2)} (q;q)_m p_mu[(1-t)/(1-q)] / z_mu for every pi,
/// and z_mu times the sum is a non-negative integer polynomial in alpha, gamma.
pub fn check_marginal(m: u32) -> Certificate {
    let started = Instant::now();
    gj_table(m); // warm the shared table before the row sums
    let parts = Partition::enumerate(m);
    let qq = pochhammer(&RatFun::var(Var::q()), m);
    let prefactor = &(&RatFun::new(MultiPoly::one(), one_minus_qt(0, 1).pow(m))
        * &qt_monomial((m as i64) * (m as i64 - 1) / 2, 0))
        * &qq;
    let mut ok = true;
    for mu in &parts {
        let mut plet = RatFun::one();
        for &part in mu.parts() {
            plet = &plet * &RatFun::new(one_minus_qt(0, part), one_minus_qt(part, 0));
        }
        let closed = to_alpha_gamma(&(&(&prefactor * &plet) / &z_rat(mu)));
        for pi in &parts {
            let mut sum = RatFun::zero();
            for nu in &parts {
                sum = &sum + &gj_c(pi, mu, nu);
            }
            if sum != closed {
                ok = false;
            }
            let corollary = &sum * &z_rat(mu);
            let (p, i, n) = poly_flags(&corollary);
            if !(p && i && n) {
                ok = false;
            }
        }
    }
    Certificate::equality("marginal-sums", json!({ "m": m }), ok, started)
}

/// The alpha = 1 specialization: c^pi_{mu,nu}(1, gamma) equals the character
/// sum (1/(z_mu z_nu)) sum_lambda t^{n(lambda')-2n(lambda)} H_lambda(t)
/// chi(pi) chi(mu) chi(nu) at t = 1+gamma, and (1+gamma)^{m(m-1)} z_mu z_nu
/// c(1, gamma) has integer coefficients.
pub fn check_alpha1(m: u32) -> Certificate {
    let started = Instant::now();
    let parts = Partition::enumerate(m);
    let mut alpha_one = HashMap::new();
    alpha_one.insert(Var::alpha(), RatFun::one());
    let mut t_sub = HashMap::new();
    t_sub.insert(Var::t(), &RatFun::one() + &RatFun::var(Var::gamma()));
    let shift =
        (&RatFun::one() + &RatFun::var(Var::gamma())).pow((m as i64) * (m as i64 - 1));
    let mut ok = true;
    for pi in &parts {
        for mu in &parts {
            for nu in &parts {
                let c1 = match gj_c(pi, mu, nu).substitute(&alpha_one) {
                    Ok(v) => v,
                    Err(_) => gj_c(pi, mu, nu)
                        .limit_cancel(Var::alpha(), &big(1))
                        .expect("alpha -> 1 limit exists"),
                };
                let mut charsum = RatFun::zero();
                for lam in &parts {
                    let e = lam.n_stat_conj() as i64 - 2 * (lam.n_stat() as i64);
                    let chi = mn_char(lam, pi) * mn_char(lam, mu) * mn_char(lam, nu);
                    if chi == 0 {
                        continue;
                    }
                    let term = &(&qt_monomial(0, e) * &RatFun::from_poly(hook_t(lam)))
                        * &RatFun::from_int(chi);
                    charsum = &charsum + &term;
                }
                charsum = &charsum / &(&z_rat(mu) * &z_rat(nu));
                let charsum = charsum
                    .substitute(&t_sub)
                    .expect("t = 1+gamma substitution is polynomial");
                if c1 != charsum {
                    ok = false;
                }
                // corollary: (1+gamma)^{m(m-1)} z_mu z_nu c(1,gamma) is an
                // integer polynomial
                let corollary = &(&c1 * &shift) * &(&z_rat(mu) * &z_rat(nu));
                let (p, i, _) = poly_flags(&corollary);
                if !(p && i) {
                    ok = false;
                }
            }
        }
    }
    Certificate::equality("alpha-one-characters", json!({ "m": m }), ok, started)
}

/// The super-nabla connection: the (p_mu[X], p_nu[Y]) coefficients of
/// gamma^{-m} nabla nabla_Y p_pi, reparametrized, equal c^pi_{mu,nu}.
pub fn check_supernabla(pi: &Partition) -> Certificate {
    let started = Instant::now();
    let m = pi.size();
    let pairs = super_nabla_pair(pi);
    let parts = Partition::enumerate(m);
    let mut ok = true;
    for mu in &parts {
        for nu in &parts {
            let lhs = pairs
                .get(&(mu.clone(), nu.clone()))
                .map(|v| to_alpha_gamma(v))
                .unwrap_or_else(RatFun::zero);
            if lhs != gj_c(pi, mu, nu) {
                ok = false;
            }
        }
    }
    Certificate::equality("supernabla-c", json!({ "pi": part_json(pi) }), ok, started)
}

/// The equal-size slice of the character structure coefficients reproduces c.
pub fn check_g_equals_c(m: u32) -> Certificate {
    let started = Instant::now();
    let parts = Partition::enumerate(m);
    let mut ok = true;
    for mu in &parts {
        for nu in &parts {
            let g = structure_g(mu, nu, GNormalization::ThetaAlphaGamma);
            for pi in &parts {
                let lhs = g
                    .get(pi)
                    .map(to_alpha_gamma)
                    .unwrap_or_else(RatFun::zero);
                if lhs != gj_c(pi, mu, nu) {
                    ok = false;
                }
            }
        }
    }
    Certificate::equality("g-equals-c", json!({ "m": m }), ok, started)
}

/// Support bounds for the structure coefficients:
/// g^pi_{mu,nu} = 0 unless max(|mu|,|nu|) <= |pi| <= |mu|+|nu|.
pub fn check_g_bounds(mu: &Partition, nu: &Partition) -> Certificate {
    let started = Instant::now();
    let g = structure_g(mu, nu, GNormalization::ThetaTilde);
    let lo = mu.size().max(nu.size());
    let hi = mu.size() + nu.size();
    let ok = g.keys().all(|pi| pi.size() >= lo && pi.size() <= hi);
    Certificate::equality(
        "g-bounds",
        json!({ "mu": part_json(mu), "nu": part_json(nu) }),
        ok,
        started,
    )
}

/// The gamma = 0 slice reproduces the Jack story end-to-end against the
/// independent Gram-Schmidt oracle: the normalized forms, the c and h
/// tables, and the characters.
pub fn check_jack_limit(m: u32) -> Certificate {
    let started = Instant::now();
    let mut ok = true;
    let mut gamma0 = HashMap::new();
    gamma0.insert(Var::gamma(), RatFun::zero());
    // normalized integral forms
    for lam in Partition::enumerate(m) {
        let f = match jfrak(&lam) {
            Ok(f) => f,
            Err(_) => {
                ok = false;
                continue;
            }
        };
        let jack = jack_j(&lam);
        for (mu, c) in f.terms() {
            let limit = c
                .substitute(&gamma0)
                .unwrap_or_else(|_| gamma_zero(c));
            if limit != jack.coeff(mu) {
                ok = false;
            }
        }
    }
    // c and h tables
    let table = gj_table(m);
    let jack = jack_table(m);
    let parts = Partition::enumerate(m);
    for pi in &parts {
        for mu in &parts {
            for nu in &parts {
                let key = (pi.clone(), mu.clone(), nu.clone());
                let c0 = table.c.get(&key).map(gamma_zero).unwrap_or_else(RatFun::zero);
                let cj = jack.c.get(&key).cloned().unwrap_or_else(RatFun::zero);
                if c0 != cj {
                    ok = false;
                }
                let h0 = table.h.get(&key).map(gamma_zero).unwrap_or_else(RatFun::zero);
                let hj = jack.h.get(&key).cloned().unwrap_or_else(RatFun::zero);
                if h0 != hj {
                    ok = false;
                }
            }
        }
    }
    // characters
    for lam in Partition::enumerate(m) {
        for d in 1..=m {
            for mu in Partition::enumerate(d) {
                let theta = gamma_zero(&to_alpha_gamma(&theta_norm_eval(&mu, &lam)));
                if theta != jack_theta(&mu, &lam) {
                    ok = false;
                }
            }
        }
    }
    Certificate::equality("jack-limit", json!({ "m": m }), ok, started)
}

// --- conjecture sweeps ------------------------------------------------------------

/// Binding for the q' variable of the Gamma-positivity conjecture; the source
/// statement names q' without defining it, so the binding is configuration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QPrimeBinding {
    /// q' = q - 1 (equals gamma*alpha under the reparametrization); default.
    QMinusOne,
    /// q' = q.
    Q,
    /// q' = alpha.
    Alpha,
}

impl QPrimeBinding {
    pub fn name(self) -> &'static str {
        match self {
            QPrimeBinding::QMinusOne => "q-1",
            QPrimeBinding::Q => "q",
            QPrimeBinding::Alpha => "alpha",
        }
    }

    pub fn from_name(s: &str) -> Option<QPrimeBinding> {
        match s {
            "q-1" => Some(QPrimeBinding::QMinusOne),
            "q" => Some(QPrimeBinding::Q),
            "alpha" => Some(QPrimeBinding::Alpha),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub qprime: QPrimeBinding,
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> SweepConfig {
        SweepConfig {
            qprime: QPrimeBinding::QMinusOne,
            jobs: 1,
        }
    }
}

impl SweepConfig {
    fn to_json(&self, id: SweepId) -> Value {
        match id {
            SweepId::GammaPositivity => json!({ "qprime": self.qprime.name() }),
            _ => json!({}),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SweepId {
    /// <JJ,J> positivity in (alpha, gamma).
    Stanley,
    /// Generalized Matchings-Jack: (1+gamma)^{n(n-1)} z_mu z_nu c in (b, gamma).
    Matchings,
    /// Generalized b-conjecture: (1+gamma)^{n(n-1)} z_pi z_mu z_nu h in (b, gamma).
    BConjecture,
    /// Lassalle-Macdonald character positivity in (b, gamma, -alpha s_i).
    Lassalle,
    /// Structure coefficients: (1+gamma)^{f} z_mu z_nu g in (b, gamma).
    Structure,
    /// Gamma-operator positivity in (-v, q', gamma).
    GammaPositivity,
}

impl SweepId {
    pub fn name(self) -> &'static str {
        match self {
            SweepId::Stanley => "stanley",
            SweepId::Matchings => "matchings",
            SweepId::BConjecture => "b",
            SweepId::Lassalle => "lassalle",
            SweepId::Structure => "structure",
            SweepId::GammaPositivity => "gamma",
        }
    }

    pub fn from_name(s: &str) -> Option<SweepId> {
        match s {
            "stanley" => Some(SweepId::Stanley),
            "matchings" => Some(SweepId::Matchings),
            "b" => Some(SweepId::BConjecture),
            "lassalle" => Some(SweepId::Lassalle),
            "structure" => Some(SweepId::Structure),
            "gamma" => Some(SweepId::GammaPositivity),
            _ => None,
        }
    }

    pub fn all() -> [SweepId; 6] {
        [
            SweepId::Stanley,
            SweepId::Matchings,
            SweepId::BConjecture,
            SweepId::Lassalle,
            SweepId::Structure,
            SweepId::GammaPositivity,
        ]
    }
}

/// Aggregate result of one sweep.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub conjecture: String,
    pub range: Value,
    pub config: Value,
    pub certificates: Vec<Certificate>,
}

impl SweepReport {
    pub fn passed(&self) -> usize {
        self.certificates.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.certificates.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "conjecture": self.conjecture,
            "range": self.range,
            "passed": self.passed(),
            "failed": self.failed(),
            "config": self.config,
            "certificates": self.certificates.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Run one conjecture sweep. `n` is the size bound with per-conjecture
/// semantics (see the SweepId variants); `k` is the number of evaluation
/// variables for Lassalle and ignored elsewhere.
pub fn sweep(id: SweepId, n: u32, k: usize, config: &SweepConfig) -> SweepReport {
    let range = match id {
        SweepId::Stanley => json!({ "nu_size": n }),
        SweepId::Matchings | SweepId::BConjecture => json!({ "n": n }),
        SweepId::Lassalle => json!({ "max_mu": n, "k": k }),
        SweepId::Structure => json!({ "max_mu": n, "max_nu": n }),
        SweepId::GammaPositivity => json!({ "max_nu": n }),
    };
    let jobs = config.jobs.max(1);
    let certificates = match id {
        SweepId::Stanley => run_parallel(stanley_instances(n), jobs, stanley_certificate),
        SweepId::Matchings => {
            gj_table(n); // fill the shared cache once, outside the workers
            run_parallel(triple_instances(n), jobs, matchings_certificate)
        }
        SweepId::BConjecture => {
            gj_table(n);
            run_parallel(triple_instances(n), jobs, b_certificate)
        }
        SweepId::Lassalle => {
            let insts: Vec<(Partition, usize)> = (1..=n)
                .flat_map(|d| Partition::enumerate(d))
                .map(|mu| (mu, k))
                .collect();
            run_parallel(insts, jobs, |(mu, k)| lassalle_certificate(mu, *k))
        }
        SweepId::Structure => {
            let insts: Vec<(Partition, Partition)> = (1..=n)
                .flat_map(|a| Partition::enumerate(a))
                .flat_map(|mu| {
                    (1..=n)
                        .flat_map(|b| Partition::enumerate(b))
                        .map(move |nu| (mu.clone(), nu))
                        .collect::<Vec<_>>()
                })
                .collect();
            let per_pair: Vec<Vec<Certificate>> =
                run_parallel(insts, jobs, |(mu, nu)| structure_certificates(mu, nu));
            per_pair.into_iter().flatten().collect()
        }
        SweepId::GammaPositivity => {
            let insts: Vec<(Partition, Partition)> = (0..=n)
                .flat_map(|b| Partition::enumerate(b))
                .flat_map(|nu| {
                    (0..=nu.size())
                        .flat_map(|a| Partition::enumerate(a))
                        .map(move |mu| (mu, nu.clone()))
                        .collect::<Vec<_>>()
                })
                .filter(|(mu, nu)| !(mu.is_empty() && nu.is_empty()))
                .collect();
            let binding = config.qprime;
            run_parallel(insts, jobs, move |(mu, nu)| {
                gamma_certificate(mu, nu, binding)
            })
        }
    };
    SweepReport {
        conjecture: id.name().to_string(),
        range,
        config: config.to_json(id),
        certificates,
    }
}

fn run_parallel<I, O, F>(instances: Vec<I>, jobs: usize, f: F) -> Vec<O>
where
    I: Send + Sync,
    O: Send,
    F: Fn(&I) -> O + Sync,
{
    if jobs <= 1 {
        instances.iter().map(|i| f(i)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| instances.par_iter().map(|i| f(i)).collect())
    }
}

fn stanley_instances(n: u32) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for nu in Partition::enumerate(n) {
        for a in 0..=n {
            for lam in Partition::enumerate(a) {
                for mu in Partition::enumerate(n - a) {
                    out.push((lam.clone(), mu, nu.clone()));
                }
            }
        }
    }
    out
}

fn triple_instances(n: u32) -> Vec<(Partition, Partition, Partition)> {
    let parts = Partition::enumerate(n);
    let mut out = Vec::new();
    for pi in &parts {
        for mu in &parts {
            for nu in &parts {
                out.push((pi.clone(), mu.clone(), nu.clone()));
            }
        }
    }
    out
}

fn stanley_certificate(inst: &(Partition, Partition, Partition)) -> Certificate {
    let started = Instant::now();
    let (lam, mu, nu) = inst;
    let n = nu.size() as i64;
    let product = &macdonald_j(lam).with_degree(nu.size()) * &macdonald_j(mu).with_degree(nu.size());
    let pairing = product.qt_scalar(&macdonald_j(nu));
    let scale = RatFun::new(MultiPoly::one(), one_minus_qt(0, 1).pow(2 * n as u32));
    let value = to_alpha_gamma(&(&pairing * &scale));
    Certificate::positivity(
        "stanley",
        json!({ "lambda": part_json(lam), "mu": part_json(mu), "nu": part_json(nu) }),
        value,
        json!({}),
        started,
    )
}

fn matchings_certificate(inst: &(Partition, Partition, Partition)) -> Certificate {
    let started = Instant::now();
    let (pi, mu, nu) = inst;
    let n = pi.size() as i64;
    let shift = (&RatFun::one() + &RatFun::var(Var::gamma())).pow(n * (n - 1));
    let value = &(&gj_c(pi, mu, nu) * &shift) * &(&z_rat(mu) * &z_rat(nu));
    Certificate::positivity(
        "matchings",
        json!({ "pi": part_json(pi), "mu": part_json(mu), "nu": part_json(nu) }),
        alpha_to_b(&value),
        json!({}),
        started,
    )
}

fn b_certificate(inst: &(Partition, Partition, Partition)) -> Certificate {
    let started = Instant::now();
    let (pi, mu, nu) = inst;
    let n = pi.size() as i64;
    let shift = (&RatFun::one() + &RatFun::var(Var::gamma())).pow(n * (n - 1));
    let value = &(&gj_h(pi, mu, nu) * &shift)
        * &(&(&z_rat(pi) * &z_rat(mu)) * &z_rat(nu));
    Certificate::positivity(
        "b",
        json!({ "pi": part_json(pi), "mu": part_json(mu), "nu": part_json(nu) }),
        alpha_to_b(&value),
        json!({}),
        started,
    )
}

fn lassalle_certificate(mu: &Partition, k: usize) -> Certificate {
    let started = Instant::now();
    let theta = theta_norm_poly(mu, k).as_ratfun();
    // prefactor (-1)^{|mu|} t^{(k-1)|mu|} z_mu(q,t) carried to (alpha,gamma)
    let sign = if mu.size() % 2 == 0 { 1 } else { -1 };
    let tpow = qt_monomial(0, (k as i64 - 1) * mu.size() as i64);
    let prefactor = to_alpha_gamma(&(&(&RatFun::from_int(sign) * &tpow) * &mu.z_qt()));
    let value = &prefactor * &theta;
    // variables w_i := -alpha s_i, realized by s_i -> -s_i/alpha, then alpha = 1+b
    let mut map = HashMap::new();
    let neg_inv_alpha = &RatFun::from_int(-1) / &RatFun::var(Var::alpha());
    for i in 1..=k {
        map.insert(Var::s(i), &neg_inv_alpha * &RatFun::var(Var::s(i)));
    }
    let value = value
        .substitute(&map)
        .expect("alpha is invertible in the function field");
    Certificate::positivity(
        "lassalle",
        json!({ "mu": part_json(mu), "k": k }),
        alpha_to_b(&value),
        json!({}),
        started,
    )
}

fn structure_certificates(mu: &Partition, nu: &Partition) -> Vec<Certificate> {
    let started = Instant::now();
    let g = structure_g(mu, nu, GNormalization::ThetaAlphaGamma);
    let lo = mu.size().max(nu.size());
    let hi = mu.size() + nu.size();
    let mut out = Vec::new();
    // support outside the proven bounds is an automatic failure
    let bounds_ok = g.keys().all(|pi| pi.size() >= lo && pi.size() <= hi);
    if !bounds_ok {
        out.push(Certificate::equality(
            "structure-bounds",
            json!({ "mu": part_json(mu), "nu": part_json(nu) }),
            false,
            started,
        ));
    }
    let zz = &z_rat(mu) * &z_rat(nu);
    for (pi, coef) in &g {
        let inst = Instant::now();
        let f = f_exponent(mu.size(), nu.size(), pi.size());
        let shift = (&RatFun::one() + &RatFun::var(Var::gamma())).pow(f);
        let value = &(&to_alpha_gamma(coef) * &shift) * &zz;
        out.push(Certificate::positivity(
            "structure",
            json!({ "mu": part_json(mu), "nu": part_json(nu), "pi": part_json(pi) }),
            alpha_to_b(&value),
            json!({}),
            inst,
        ));
    }
    out
}

fn gamma_certificate(mu: &Partition, nu: &Partition, binding: QPrimeBinding) -> Certificate {
    let started = Instant::now();
    let n = (nu.size() - mu.size()) as usize;
    let d = nu.size();
    let twist = Alphabet::x_times(RatFun::new(one_minus_qt(0, 1), one_minus_qt(1, 0)));
    let f = SymFun::p(mu.clone(), d).pleth(&twist);
    let graded = crate::macdonald::gamma(&f, &RatFun::var(Var::v(1)), &RatFun::one(), Side::Integral)
        .expect("symbolic v avoids singular eigenvalues");
    let layer = graded.coeff(n);
    let untwist = Alphabet::x_times(RatFun::new(one_minus_qt(1, 0), one_minus_qt(0, 1)));
    let target = SymFun::p(nu.clone(), d).pleth(&untwist);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let pairing = layer.hall_scalar(&target);
    let value = &(&RatFun::from_int(sign) * &qt_monomial(0, mu.size() as i64)) * &pairing;
    // target variables: v1 stands for -v, qprime per the binding, gamma
    let mut map = HashMap::new();
    map.insert(Var::v(1), -&RatFun::var(Var::v(1)));
    let qp = RatFun::var(Var::qprime());
    let gamma = RatFun::var(Var::gamma());
    match binding {
        QPrimeBinding::QMinusOne => {
            map.insert(Var::q(), &RatFun::one() + &qp);
        }
        QPrimeBinding::Q => {
            map.insert(Var::q(), qp);
        }
        QPrimeBinding::Alpha => {
            map.insert(Var::q(), &RatFun::one() + &(&gamma * &qp));
        }
    }
    map.insert(Var::t(), &RatFun::one() + &gamma);
    let value = value
        .substitute(&map)
        .expect("the binding substitution never hits a pole");
    Certificate::positivity(
        "gamma",
        json!({ "mu": part_json(mu), "nu": part_json(nu) }),
        value,
        json!({ "qprime": binding.name() }),
        started,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn small_character_values() {
        assert_eq!(mn_char(&p(&[1, 1]), &p(&[2])), -1);
        assert_eq!(mn_char(&p(&[2]), &p(&[2])), 1);
        assert_eq!(mn_char(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(mn_char(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(mn_char(&p(&[2, 1]), &p(&[2, 1])), 0);
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=8u32 {
            for mu in Partition::enumerate(n) {
                assert_eq!(mn_char(&p(&[n]), &mu), 1);
                let sign = if (n as usize - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_char(&Partition::new(vec![1; n as usize]), &mu), sign);
            }
        }
    }

    #[test]
    fn first_orthogonality() {
        // sum_mu chi^lam(mu) chi^rho(mu) / z_mu = delta_{lam,rho}
        for n in 1..=6u32 {
            let parts = Partition::enumerate(n);
            for lam in &parts {
                for rho in &parts {
                    let mut s = BigRational::zero();
                    for mu in &parts {
                        let prod = big(mn_char(lam, mu)) * big(mn_char(rho, mu));
                        s += prod / mu.z_classical();
                    }
                    let expect = if lam == rho { big(1) } else { big(0) };
                    assert_eq!(s, expect, "lam={lam} rho={rho}");
                }
            }
        }
    }

    #[test]
    fn jfrak_spot_values() {
        // normalized form of the single box is p_1
        let f = jfrak(&p(&[1])).unwrap();
        assert_eq!(f, SymFun::p(p(&[1]), 1).map_coeffs(|c| c.clone()));
        // normalized form of the row of two: (1+q)/2 p_1^2 + alpha(1+t)/2 p_2
        // with q = 1+gamma alpha, t = 1+gamma
        let f = jfrak(&p(&[2])).unwrap();
        let q = &RatFun::one() + &(&RatFun::var(Var::gamma()) * &RatFun::var(Var::alpha()));
        let t = &RatFun::one() + &RatFun::var(Var::gamma());
        let half = RatFun::from_rational(BigRational::new(1.into(), 2.into()));
        let c11 = &(&RatFun::one() + &q) * &half;
        let c2 = &(&RatFun::var(Var::alpha()) * &(&RatFun::one() + &t)) * &half;
        assert_eq!(f.coeff(&p(&[1, 1])), c11);
        assert_eq!(f.coeff(&p(&[2])), c2);
    }

    #[test]
    fn gj_spot_values() {
        assert_eq!(gj_c(&p(&[1]), &p(&[1]), &p(&[1])), RatFun::one());
        assert_eq!(gj_h(&p(&[1]), &p(&[1]), &p(&[1])), RatFun::one());
        // the defining series is symmetric in the (mu, nu) slots
        let t = gj_table(3);
        for ((pi, mu, nu), v) in &t.c {
            assert_eq!(
                v,
                &t.c[&(pi.clone(), nu.clone(), mu.clone())],
                "pi={pi} mu={mu} nu={nu}"
            );
        }
    }

    #[test]
    fn jack_oracle_basics() {
        // J_[2] = p_1^2 + alpha p_2 = (1+alpha) m_2 + 2 m_11
        let j2 = jack_j(&p(&[2]));
        assert_eq!(j2.coeff(&p(&[1, 1])), RatFun::one());
        assert_eq!(j2.coeff(&p(&[2])), RatFun::var(Var::alpha()));
        // J_[1,1] = p_1^2 - p_2
        let j11 = jack_j(&p(&[1, 1]));
        assert_eq!(j11.coeff(&p(&[1, 1])), RatFun::one());
        assert_eq!(j11.coeff(&p(&[2])), RatFun::from_int(-1));
        // orthogonality at degree 3
        for lam in Partition::enumerate(3) {
            for rho in Partition::enumerate(3) {
                if lam != rho {
                    let s = jack_scalar(&jack_j(&lam), &jack_j(&rho));
                    assert!(s.is_zero(), "lam={lam} rho={rho}");
                }
            }
        }
    }

    #[test]
    fn jack_limit_small() {
        for m in 1..=3 {
            assert!(check_jack_limit(m).passed, "m={m}");
        }
    }

    #[test]
    fn marginal_and_alpha1_small() {
        for m in 1..=3 {
            assert!(check_marginal(m).passed, "marginal m={m}");
            assert!(check_alpha1(m).passed, "alpha1 m={m}");
        }
    }

    #[test]
    fn supernabla_small() {
        for m in 1..=3u32 {
            for pi in Partition::enumerate(m) {
                assert!(check_supernabla(&pi).passed, "pi={pi}");
            }
        }
    }

    #[test]
    fn g_equals_c_small() {
        for m in 1..=3 {
            assert!(check_g_equals_c(m).passed, "m={m}");
        }
    }

    #[test]
    fn stanley_spot_value() {
        let c = stanley_certificate(&(p(&[1]), p(&[1]), p(&[2])));
        let a = RatFun::var(Var::alpha());
        let g = RatFun::var(Var::gamma());
        let expect = &(&RatFun::from_int(2) * &a.pow(2)) + &(&g * &a.pow(3));
        assert_eq!(c.value, expect);
        assert!(c.passed);
    }

    #[test]
    fn lassalle_spot_value() {
        // mu = [1], k = 2 normalizes to (1+gamma) s_1 + s_2 in the w variables
        let c = lassalle_certificate(&p(&[1]), 2);
        let g = RatFun::var(Var::gamma());
        let expect = &(&(&RatFun::one() + &g) * &RatFun::var(Var::s(1))) + &RatFun::var(Var::s(2));
        assert_eq!(c.value, expect);
        assert!(c.passed);
    }

    #[test]
    fn small_sweeps_pass() {
        let cfg = SweepConfig::default();
        for n in 1..=3 {
            let r = sweep(SweepId::Matchings, n, 0, &cfg);
            assert!(r.all_passed(), "matchings n={n}");
            let r = sweep(SweepId::BConjecture, n, 0, &cfg);
            assert!(r.all_passed(), "b n={n}");
            let r = sweep(SweepId::Stanley, n, 0, &cfg);
            assert!(r.all_passed(), "stanley n={n}");
        }
        let r = sweep(SweepId::Lassalle, 2, 2, &cfg);
        assert!(r.all_passed(), "lassalle");
        let r = sweep(SweepId::Structure, 2, 0, &cfg);
        assert!(r.all_passed(), "structure");
        let r = sweep(SweepId::GammaPositivity, 2, 0, &cfg);
        assert!(r.all_passed(), "gamma");
    }

    #[test]
    fn matchings_sweep_instance_count() {
        let cfg = SweepConfig::default();
        let r = sweep(SweepId::Matchings, 3, 0, &cfg);
        assert_eq!(r.certificates.len(), 27); // p(3)^3
    }

    #[test]
    fn sweep_parallel_agrees_with_serial() {
        let serial = sweep(SweepId::Matchings, 3, 0, &SweepConfig::default());
        let parallel = sweep(
            SweepId::Matchings,
            3,
            0,
            &SweepConfig {
                jobs: 4,
                ..SweepConfig::default()
            },
        );
        assert_eq!(serial.certificates.len(), parallel.certificates.len());
        for (a, b) in serial.certificates.iter().zip(&parallel.certificates) {
            assert_eq!(a.inputs, b.inputs);
            assert_eq!(a.value, b.value);
            assert_eq!(a.passed, b.passed);
        }
    }
}
