//! The shifted-symmetric layer: the isomorphism f -> f*, shifted Macdonald
//! polynomials J*, Macdonald characters theta-tilde, and their structure
//! coefficients.
//!
//! Two routes are implemented and cross-checked: `star` builds the shifted
//! polynomial from the Gamma chain with symbolic v_i (the semantic source of
//! truth), while `char_eval`/`star_eval` evaluate directly on Young diagrams
//! through the nabla/Pieri pairing formula (the fast path).

use crate::macdonald::{gamma_raw, macdonald_j, mult_pexp, nabla, Side};
use crate::partitions::Partition;
use crate::scalars::json::{ratfun_from_json, ratfun_to_json};
use crate::scalars::{one_minus_qt, qt_monomial, Monomial, MultiPoly, RatFun, Var};
use crate::symfunc::{h_n, Alphabet, SymFun};
use once_cell::sync::Lazy;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

/// Polynomial in a fixed list of variables (v_1..v_k, or s_1..s_k for the
/// (alpha,gamma)-normalized characters) with coefficients free of them.
#[derive(Clone, PartialEq)]
pub struct ShiftedPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Monomial, RatFun>,
}

impl ShiftedPoly {
    pub fn zero(vars: Vec<Var>) -> ShiftedPoly {
        ShiftedPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: RatFun, vars: Vec<Var>) -> ShiftedPoly {
        let mut f = ShiftedPoly::zero(vars);
        f.insert_add(Monomial::one(), c);
        f
    }

    /// Split a rational function into monomials in `vars`; fails when it is
    /// not polynomial in them.
    pub fn from_ratfun(f: &RatFun, vars: &[Var]) -> Option<ShiftedPoly> {
        let layers = f.as_polynomial_in(vars)?;
        let mut out = ShiftedPoly::zero(vars.to_vec());
        for (mono, coef) in layers {
            out.insert_add(mono, coef);
        }
        Some(out)
    }

    pub fn k(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFun)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert_add(&mut self, m: Monomial, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Total degree in the shifted variables.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// The homogeneous component of top degree.
    pub fn top_part(&self) -> ShiftedPoly {
        let d = self.degree();
        let mut out = ShiftedPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.insert_add(m.clone(), c.clone());
            }
        }
        out
    }

    /// Collapse back to a single rational function.
    pub fn as_ratfun(&self) -> RatFun {
        let mut s = RatFun::zero();
        for (m, c) in &self.terms {
            let mono = RatFun::from_poly(MultiPoly::monomial(m.clone(), crate::scalars::big(1)));
            s = &s + &(c * &mono);
        }
        s
    }

    /// Substitute the i-th variable by vals[i] (length must be k).
    pub fn eval(&self, vals: &[RatFun]) -> RatFun {
        assert_eq!(vals.len(), self.vars.len(), "one value per variable");
        let mut s = RatFun::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (var, val) in self.vars.iter().zip(vals) {
                let e = m.exp(*var);
                if e > 0 {
                    term = &term * &val.pow(e as i64);
                }
            }
            s = &s + &term;
        }
        s
    }

    /// Evaluation on a Young diagram: v_i = q^{lambda_i}, padded with 1's.
    pub fn eval_partition(&self, lam: &Partition) -> RatFun {
        assert!(
            lam.len() <= self.k(),
            "need at least l(lambda) variables to evaluate at lambda"
        );
        let vals: Vec<RatFun> = (0..self.k())
            .map(|i| qt_monomial(lam.part(i) as i64, 0))
            .collect();
        self.eval(&vals)
    }

    /// Shifted symmetry in the chain variables: invariance under every
    /// adjacent swap of the shifted alphabet v_1, t^{-1}v_2, t^{-2}v_3, ...
    pub fn is_shifted_symmetric(&self) -> bool {
        let whole = self.as_ratfun();
        let tinv = RatFun::new(MultiPoly::one(), MultiPoly::var(Var::t()));
        let tvar = RatFun::var(Var::t());
        for i in 0..self.k().saturating_sub(1) {
            let mut map = HashMap::new();
            map.insert(self.vars[i], &tinv * &RatFun::var(self.vars[i + 1]));
            map.insert(self.vars[i + 1], &tvar * &RatFun::var(self.vars[i]));
            let swapped = whole.substitute(&map).expect("t is invertible");
            if swapped != whole {
                return false;
            }
        }
        true
    }

    /// Set the last variable to 1, dropping to a (k-1)-variable member.
    pub fn restrict_last(&self) -> ShiftedPoly {
        assert!(!self.vars.is_empty(), "nothing to restrict");
        let last = *self.vars.last().unwrap();
        let rest = self.vars[..self.vars.len() - 1].to_vec();
        let mut out = ShiftedPoly::zero(rest);
        for (m, c) in &self.terms {
            let mut exps: Vec<u32> = Vec::new();
            for var in &out.vars {
                let e = m.exp(*var);
                while exps.len() <= var.0 as usize {
                    exps.push(0);
                }
                exps[var.0 as usize] = e;
            }
            debug_assert!(m
                .vars()
                .all(|v| v == last || out.vars.contains(&v)));
            out.insert_add(Monomial::from_exps(exps), c.clone());
        }
        out
    }
}

impl fmt::Debug for ShiftedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ShiftedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for var in &self.vars {
                let e = m.exp(*var);
                if e == 1 {
                    write!(f, "*{}", var.name())?;
                } else if e > 1 {
                    write!(f, "*{}^{}", var.name(), e)?;
                }
            }
        }
        Ok(())
    }
}

// --- the isomorphism f -> f* --------------------------------------------------

/// f*(v_1..v_k) as a shifted polynomial, from the Gamma chain
/// Gamma(1,v_1) Gamma(t^{-1},v_2) ... Gamma(t^{1-k},v_k) . 1 paired against f.
pub fn star(f: &SymFun, k: usize) -> ShiftedPoly {
    let d = f.top_degree();
    let mut g = SymFun::one(d);
    for i in (1..=k).rev() {
        let v = RatFun::var(Var::v(i));
        let uscale = qt_monomial(0, -((i - 1) as i64));
        g = gamma_raw(&g, &v, &uscale, Side::Integral)
            .expect("symbolic v never hits a singular eigenvalue");
    }
    let mut map = HashMap::new();
    map.insert(Var::u(), RatFun::one());
    let s = f
        .qt_scalar(&g)
        .substitute(&map)
        .expect("setting u=1 cannot create a pole");
    let vars: Vec<Var> = (1..=k).map(Var::v).collect();
    ShiftedPoly::from_ratfun(&s, &vars).expect("star image must be polynomial in v")
}

/// f*(lambda) evaluated directly: <P_{1/(1-q)} nabla f, t^{-n(lambda)} J_lambda>.
pub fn star_eval(f: &SymFun, lam: &Partition) -> RatFun {
    let d = lam.size().max(f.top_degree());
    let g = nabla(&f.with_degree(d), Side::Integral).expect("nabla is total");
    let z = RatFun::new(MultiPoly::one(), one_minus_qt(1, 0));
    let g = mult_pexp(&g, &z);
    let target = macdonald_j(lam)
        .with_degree(d)
        .scale(&qt_monomial(0, -(lam.n_stat() as i64)));
    g.qt_scalar(&target)
}

// --- Macdonald characters -----------------------------------------------------

static CHAR_TABLE: Lazy<RwLock<HashMap<(Partition, Partition), RatFun>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// theta-tilde_mu(lambda), cached. For |mu| <= |lambda| this is
/// <p_mu, nabla h^perp_{|lambda|-|mu|}[X/(1-t)] . t^{-n(lambda)} J_lambda>_{q,t},
/// otherwise 0. One cache miss fills the whole row {theta-tilde_sigma(lambda)
/// : sigma of size |mu|}, since the nabla application is shared.
pub fn char_eval(mu: &Partition, lam: &Partition) -> RatFun {
    if mu.size() > lam.size() {
        return RatFun::zero();
    }
    let key = (mu.clone(), lam.clone());
    if let Some(v) = CHAR_TABLE.read().unwrap().get(&key) {
        return v.clone();
    }
    let m = lam.size() - mu.size();
    let twist = Alphabet::x_times(RatFun::new(MultiPoly::one(), one_minus_qt(0, 1)));
    let hk = h_n(m, m).pleth(&twist);
    let g = hk.perp(&macdonald_j(lam));
    let g = nabla(&g.with_degree(mu.size()), Side::Integral).expect("nabla is total");
    let scale = qt_monomial(0, -(lam.n_stat() as i64));
    let mut table = CHAR_TABLE.write().unwrap();
    for sigma in Partition::enumerate(mu.size()) {
        let val = &(&g.coeff(&sigma) * &sigma.z_qt()) * &scale;
        table.entry((sigma, lam.clone())).or_insert(val);
    }
    table[&key].clone()
}

/// theta-tilde_mu as a k-variable shifted polynomial (= star of p_mu).
pub fn theta_tilde(mu: &Partition, k: usize) -> ShiftedPoly {
    star(&SymFun::p(mu.clone(), mu.size()), k)
}

/// gamma = t - 1 as an element of Q(q,t).
pub fn gamma_qt() -> RatFun {
    RatFun::from_poly(&MultiPoly::var(Var::t()) - &MultiPoly::one())
}

/// theta^{(alpha,gamma)}_mu(lambda) = theta-tilde_mu(lambda) / (gamma^{|mu|} z_mu(q,t)),
/// kept in the (q,t) variables.
pub fn theta_norm_eval(mu: &Partition, lam: &Partition) -> RatFun {
    let denom = &gamma_qt().pow(mu.size() as i64) * &mu.z_qt();
    &char_eval(mu, lam) / &denom
}

/// theta^{(alpha,gamma)}_mu(s_1..s_k) as a polynomial in the s variables,
/// coefficients in (alpha, gamma): substitute v_i = 1 + alpha gamma s_i into
/// theta-tilde and divide by gamma^{|mu|} z_mu(q,t).
pub fn theta_norm_poly(mu: &Partition, k: usize) -> ShiftedPoly {
    let tt = theta_tilde(mu, k).as_ratfun();
    let mut map = qt_to_alpha_gamma_map();
    let ag = &RatFun::var(Var::alpha()) * &RatFun::var(Var::gamma());
    for i in 1..=k {
        map.insert(
            Var::v(i),
            &RatFun::one() + &(&ag * &RatFun::var(Var::s(i))),
        );
    }
    let num = tt.substitute(&map).expect("reparametrization has no pole");
    let denom = &RatFun::var(Var::gamma()).pow(mu.size() as i64)
        * &mu
            .z_qt()
            .substitute(&qt_to_alpha_gamma_map())
            .expect("z_qt survives the reparametrization");
    let vars: Vec<Var> = (1..=k).map(Var::s).collect();
    ShiftedPoly::from_ratfun(&(&num / &denom), &vars)
        .expect("normalized character is polynomial in s")
}

/// The substitution q = 1 + gamma alpha, t = 1 + gamma.
pub fn qt_to_alpha_gamma_map() -> HashMap<Var, RatFun> {
    let gamma = RatFun::var(Var::gamma());
    let mut map = HashMap::new();
    map.insert(
        Var::q(),
        &RatFun::one() + &(&gamma * &RatFun::var(Var::alpha())),
    );
    map.insert(Var::t(), &RatFun::one() + &gamma);
    map
}

// --- shifted Macdonald polynomials J* -----------------------------------------

/// J*_mu as a shifted polynomial in k variables.
pub fn jstar(mu: &Partition, k: usize) -> ShiftedPoly {
    star(&macdonald_j(mu), k)
}

/// J*_mu(lambda) by the evaluation route.
pub fn jstar_eval(mu: &Partition, lam: &Partition) -> RatFun {
    star_eval(&macdonald_j(mu), lam)
}

/// The normalization value (-1)^{|mu|} q^{n(mu')} t^{-2n(mu)} j_mu required
/// of J*_mu(mu), built from the closed product formula.
pub fn jstar_normalization(mu: &Partition) -> RatFun {
    let sign = if mu.size() % 2 == 0 { 1 } else { -1 };
    let mono = qt_monomial(mu.n_stat_conj() as i64, -2 * (mu.n_stat() as i64));
    &(&RatFun::from_int(sign) * &mono) * &mu.j_norm()
}

/// Outcome of the three defining checks of a shifted Macdonald polynomial.
#[derive(Clone, Debug)]
pub struct JStarChecks {
    pub mu: Partition,
    pub normalization_ok: bool,
    pub vanishing_ok: bool,
    pub top_part_ok: bool,
}

impl JStarChecks {
    pub fn all_ok(&self) -> bool {
        self.normalization_ok && self.vanishing_ok && self.top_part_ok
    }
}

/// Evaluate f as a symmetric polynomial of the finite alphabet `vals`
/// (p_r maps to the sum of r-th powers).
pub fn eval_finite(f: &SymFun, vals: &[RatFun]) -> RatFun {
    let mut s = RatFun::zero();
    for (mu, c) in f.terms() {
        let mut term = c.clone();
        for &part in mu.parts() {
            let mut power_sum = RatFun::zero();
            for v in vals {
                power_sum = &power_sum + &v.pow(part as i64);
            }
            term = &term * &power_sum;
        }
        s = &s + &term;
    }
    s
}

/// Check normalization, vanishing and top-part against the interpolation
/// characterization, with the vanishing tested on all lambda of size at most
/// |mu|+1 not containing mu.
pub fn jstar_checks(mu: &Partition, k: usize) -> JStarChecks {
    let k = k.max(mu.len()).max(1);
    let jst = jstar(mu, k);
    let normalization_ok = jst.eval_partition(mu) == jstar_normalization(mu);
    let mut vanishing_ok = true;
    for n in 0..=mu.size() + 1 {
        for lam in Partition::enumerate(n) {
            if !mu.contained_in(&lam) && lam.len() <= k {
                if !jst.eval_partition(&lam).is_zero() {
                    vanishing_ok = false;
                }
            }
        }
    }
    // top homogeneous part must be J_mu(v_1, t^{-1} v_2, ..., t^{1-k} v_k)
    let shifted_vals: Vec<RatFun> = (1..=k)
        .map(|i| &qt_monomial(0, 1 - i as i64) * &RatFun::var(Var::v(i)))
        .collect();
    let expect = eval_finite(&macdonald_j(mu), &shifted_vals);
    let top_part_ok = jst.top_part().as_ratfun() == expect;
    JStarChecks {
        mu: mu.clone(),
        normalization_ok,
        vanishing_ok,
        top_part_ok,
    }
}

// --- structure coefficients ---------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GNormalization {
    /// Structure coefficients of theta-tilde.
    ThetaTilde,
    /// Structure coefficients of theta^{(alpha,gamma)}, still expressed in (q,t).
    ThetaAlphaGamma,
}

static BLOCK_INVERSE: Lazy<RwLock<HashMap<u32, std::sync::Arc<Vec<Vec<RatFun>>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Cached inverse of the evaluation matrix M[lambda][pi] = theta-tilde_pi(lambda)
/// over size-d partitions; rows of the result are indexed by pi.
fn block_inverse(d: u32) -> std::sync::Arc<Vec<Vec<RatFun>>> {
    if let Some(inv) = BLOCK_INVERSE.read().unwrap().get(&d) {
        return inv.clone();
    }
    let parts = Partition::enumerate(d);
    let n = parts.len();
    let mut a: Vec<Vec<RatFun>> = parts
        .iter()
        .map(|lam| parts.iter().map(|pi| char_eval(pi, lam)).collect())
        .collect();
    let mut inv: Vec<Vec<RatFun>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RatFun::one() } else { RatFun::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("evaluation matrix is singular: character cache is corrupt");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pv = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &pv;
            inv[col][j] = &inv[col][j] / &pv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let x = &a[col][j] * &f;
                    a[r][j] = &a[r][j] - &x;
                    let y = &inv[col][j] * &f;
                    inv[r][j] = &inv[r][j] - &y;
                }
            }
        }
    }
    let inv = std::sync::Arc::new(inv);
    BLOCK_INVERSE
        .write()
        .unwrap()
        .entry(d)
        .or_insert(inv)
        .clone()
}

/// Structure coefficients: theta_mu theta_nu = sum_pi g^pi theta_pi, solved
/// from evaluations on all |lambda| <= |mu|+|nu| by exploiting the size-block
/// triangularity (theta_pi(lambda) = 0 for |lambda| < |pi|).
pub fn structure_g(
    mu: &Partition,
    nu: &Partition,
    norm: GNormalization,
) -> BTreeMap<Partition, RatFun> {
    let bound = mu.size() + nu.size();
    let mut g: BTreeMap<Partition, RatFun> = BTreeMap::new();
    for d in 0..=bound {
        let pis = Partition::enumerate(d);
        let lams = Partition::enumerate(d);
        // rhs(lambda) = theta_mu(lambda) theta_nu(lambda) - known smaller terms
        let mut rhs: Vec<RatFun> = Vec::new();
        for lam in &lams {
            let mut r = &char_eval(mu, lam) * &char_eval(nu, lam);
            for (pi, coef) in &g {
                let theta = char_eval(pi, lam);
                if !theta.is_zero() {
                    r = &r - &(coef * &theta);
                }
            }
            rhs.push(r);
        }
        let inv = block_inverse(d);
        for (i, pi) in pis.into_iter().enumerate() {
            let mut coef = RatFun::zero();
            for (j, r) in rhs.iter().enumerate() {
                if !r.is_zero() && !inv[i][j].is_zero() {
                    coef = &coef + &(&inv[i][j] * r);
                }
            }
            if !coef.is_zero() {
                g.insert(pi, coef);
            }
        }
    }
    match norm {
        GNormalization::ThetaTilde => g,
        GNormalization::ThetaAlphaGamma => {
            let gamma = gamma_qt();
            let base = &mu.z_qt() * &nu.z_qt();
            let shift = (mu.size() + nu.size()) as i64;
            g.into_iter()
                .map(|(pi, c)| {
                    let factor = &(&gamma.pow(pi.size() as i64 - shift) * &pi.z_qt()) / &base;
                    let c = &c * &factor;
                    (pi, c)
                })
                .filter(|(_, c)| !c.is_zero())
                .collect()
        }
    }
}

/// Exact Gaussian elimination over the rational-function field.
///
/// Panics on a singular system: every matrix solved here is proved
/// invertible, so singularity indicates a cache bug.
pub fn solve_exact(mut a: Vec<Vec<RatFun>>, mut b: Vec<RatFun>) -> Vec<RatFun> {
    let n = b.len();
    assert!(a.iter().all(|row| row.len() == n), "square system required");
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("system is singular: character cache is corrupt");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let pv = a[col][col].clone();
        for j in col..n {
            a[col][j] = &a[col][j] / &pv;
        }
        b[col] = &b[col] / &pv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..n {
                    let x = &a[col][j] * &f;
                    a[r][j] = &a[r][j] - &x;
                }
                let y = &b[col] * &f;
                b[r] = &b[r] - &y;
            }
        }
    }
    b
}

/// Invertibility of the evaluation matrix (theta-tilde_pi(lambda)) over all
/// |pi|, |lambda| <= d; this is the basis property of the characters and the
/// computational content of the uniqueness lemma.
pub fn char_matrix_invertible(d: u32) -> bool {
    let parts = Partition::enumerate_up_to(d);
    let n = parts.len();
    let mut m: Vec<Vec<RatFun>> = parts
        .iter()
        .map(|lam| parts.iter().map(|pi| char_eval(pi, lam)).collect())
        .collect();
    // plain elimination; singular iff some column has no pivot
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => return false,
        };
        m.swap(col, pivot);
        let pv = m[col][col].clone();
        for j in col..n {
            m[col][j] = &m[col][j] / &pv;
        }
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..n {
                    let x = &m[col][j] * &f;
                    m[r][j] = &m[r][j] - &x;
                }
            }
        }
    }
    true
}

// --- JSON -----------------------------------------------------------------

pub fn shifted_to_json(f: &ShiftedPoly) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(m, c)| {
            let vexp: Vec<u32> = f.vars().iter().map(|v| m.exp(*v)).collect();
            json!({
                "vexp": vexp,
                "coef": ratfun_to_json(c),
            })
        })
        .collect();
    json!({
        "k": f.k(),
        "vars": f.vars().iter().map(|v| v.name()).collect::<Vec<_>>(),
        "terms": terms,
    })
}

pub fn shifted_from_json(v: &Value) -> Option<ShiftedPoly> {
    let vars: Vec<Var> = v
        .get("vars")?
        .as_array()?
        .iter()
        .map(|x| x.as_str().map(Var::named))
        .collect::<Option<_>>()?;
    let mut out = ShiftedPoly::zero(vars.clone());
    for term in v.get("terms")?.as_array()? {
        let vexp: Vec<u32> = term
            .get("vexp")?
            .as_array()?
            .iter()
            .map(|x| x.as_u64().map(|n| n as u32))
            .collect::<Option<_>>()?;
        if vexp.len() != vars.len() {
            return None;
        }
        let mut mono = Monomial::one();
        for (var, e) in vars.iter().zip(vexp) {
            mono = mono.mul(&Monomial::var(*var, e));
        }
        let coef = ratfun_from_json(term.get("coef")?)?;
        out.insert_add(mono, coef);
    }
    Some(out)
}
