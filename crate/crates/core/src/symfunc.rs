//! The algebra of symmetric functions over the rational-function field,
//! held internally in the power-sum basis, truncated at an explicit degree.
//!
//! Everything else — plethysm, the two scalar products, adjoints of
//! multiplication, and the m/h/e/s basis views — is expressed through the
//! p-basis, where all of these operations are diagonal or multiplicative.

use crate::conjectures::mn_char;
use crate::partitions::{union, Partition};
use crate::scalars::json::{ratfun_from_json, ratfun_to_json};
use crate::scalars::{big, RatFun};
use num_rational::BigRational;
use num_traits::Zero;
use once_cell::sync::Lazy;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

/// Symmetric function as a p-basis coefficient table, graded and truncated.
///
/// All terms have |mu| <= degree; products drop the part of the result
/// above the truncation degree, which is the intended semantics: every
/// identity here is checked per homogeneous degree.
#[derive(Clone)]
pub struct SymFun {
    degree: u32,
    terms: BTreeMap<Partition, RatFun>,
}

/// A plethystic alphabet E, described by the images p_k[E].
///
/// `Scalar(Z)` is an expression without the main alphabet: p_k[E] is Z with
/// every variable raised to the k-th power. `XLinear` covers every alphabet
/// of the form c*X + Z: p_k[E] = c(k-th powers)*p_k + Z(k-th powers), which
/// is all this crate needs (X, -X, uX, X(1-q)/(1-t), X+Z, ...).
#[derive(Clone)]
pub enum Alphabet {
    Scalar(RatFun),
    XLinear { scale: RatFun, shift: RatFun },
}

impl Alphabet {
    pub fn x() -> Alphabet {
        Alphabet::XLinear {
            scale: RatFun::one(),
            shift: RatFun::zero(),
        }
    }

    /// The alphabet c*X.
    pub fn x_times(scale: RatFun) -> Alphabet {
        Alphabet::XLinear {
            scale,
            shift: RatFun::zero(),
        }
    }

    /// The alphabet X + Z with Z free of X.
    pub fn x_plus(shift: RatFun) -> Alphabet {
        Alphabet::XLinear {
            scale: RatFun::one(),
            shift,
        }
    }

    pub fn minus_x() -> Alphabet {
        Alphabet::x_times(RatFun::from_int(-1))
    }

    pub fn scalar(z: RatFun) -> Alphabet {
        Alphabet::Scalar(z)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    P,
    M,
    H,
    E,
    S,
}

impl Basis {
    pub fn letter(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::M => "m",
            Basis::H => "h",
            Basis::E => "e",
            Basis::S => "s",
        }
    }

    pub fn from_letter(s: &str) -> Option<Basis> {
        Some(match s {
            "p" => Basis::P,
            "m" => Basis::M,
            "h" => Basis::H,
            "e" => Basis::E,
            "s" => Basis::S,
            _ => return None,
        })
    }
}

impl SymFun {
    pub fn zero(degree: u32) -> SymFun {
        SymFun {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: u32) -> SymFun {
        SymFun::constant(RatFun::one(), degree)
    }

    pub fn constant(c: RatFun, degree: u32) -> SymFun {
        let mut f = SymFun::zero(degree);
        f.insert_add(Partition::empty(), c);
        f
    }

    /// The power sum p_mu.
    pub fn p(mu: Partition, degree: u32) -> SymFun {
        assert!(mu.size() <= degree, "p_mu exceeds truncation degree");
        let mut f = SymFun::zero(degree);
        f.insert_add(mu, RatFun::one());
        f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFun)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> RatFun {
        self.terms.get(mu).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn insert_add(&mut self, mu: Partition, c: RatFun) {
        if c.is_zero() || mu.size() > self.degree {
            return;
        }
        let entry = self.terms.entry(mu);
        match entry {
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

    /// Re-truncate (or extend the formal degree bound of) this function.
    pub fn with_degree(&self, degree: u32) -> SymFun {
        let mut f = SymFun::zero(degree);
        for (mu, c) in &self.terms {
            f.insert_add(mu.clone(), c.clone());
        }
        f
    }

    /// The homogeneous component of degree d.
    pub fn homogeneous(&self, d: u32) -> SymFun {
        let mut f = SymFun::zero(self.degree);
        for (mu, c) in &self.terms {
            if mu.size() == d {
                f.insert_add(mu.clone(), c.clone());
            }
        }
        f
    }

    /// Largest degree with a nonzero term.
    pub fn top_degree(&self) -> u32 {
        self.terms.keys().map(|mu| mu.size()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &RatFun) -> SymFun {
        let mut f = SymFun::zero(self.degree);
        for (mu, a) in &self.terms {
            f.insert_add(mu.clone(), a * c);
        }
        f
    }

    pub fn map_coeffs(&self, g: impl Fn(&RatFun) -> RatFun) -> SymFun {
        let mut f = SymFun::zero(self.degree);
        for (mu, a) in &self.terms {
            f.insert_add(mu.clone(), g(a));
        }
        f
    }

    /// The involution omega: p_k -> (-1)^{k-1} p_k.
    pub fn omega(&self) -> SymFun {
        let mut f = SymFun::zero(self.degree);
        for (mu, a) in &self.terms {
            let sign = (mu.size() as usize + mu.len()) % 2;
            let c = if sign == 0 { a.clone() } else { -a };
            f.insert_add(mu.clone(), c);
        }
        f
    }

    /// Plethystic substitution f[E].
    pub fn pleth(&self, e: &Alphabet) -> SymFun {
        let mut out = SymFun::zero(self.degree);
        match e {
            Alphabet::Scalar(z) => {
                for (mu, c) in &self.terms {
                    let mut v = c.clone();
                    for &part in mu.parts() {
                        v = &v * &z.adams(part);
                    }
                    out.insert_add(Partition::empty(), v);
                }
            }
            Alphabet::XLinear { scale, shift } => {
                for (mu, c) in &self.terms {
                    // expand prod_i (scale_k p_k + shift_k) over the parts
                    let mut partial: Vec<(Vec<u32>, RatFun)> =
                        vec![(Vec::new(), c.clone())];
                    for &k in mu.parts() {
                        let sc = scale.adams(k);
                        let sh = shift.adams(k);
                        let mut next = Vec::with_capacity(partial.len() * 2);
                        for (kept, v) in partial {
                            if !sc.is_zero() {
                                let mut kk = kept.clone();
                                kk.push(k);
                                next.push((kk, &v * &sc));
                            }
                            if !sh.is_zero() {
                                next.push((kept, &v * &sh));
                            }
                        }
                        partial = next;
                    }
                    for (kept, v) in partial {
                        let mut parts = kept;
                        parts.sort_unstable_by(|a, b| b.cmp(a));
                        out.insert_add(Partition::new(parts), v);
                    }
                }
            }
        }
        out
    }

    /// Hall pairing <p_mu, p_nu> = delta z_mu.
    pub fn hall_scalar(&self, other: &SymFun) -> RatFun {
        let mut s = RatFun::zero();
        for (mu, a) in &self.terms {
            let b = other.coeff(mu);
            if !b.is_zero() {
                s = &s + &(&(a * &b) * &RatFun::from_rational(mu.z_classical()));
            }
        }
        s
    }

    /// (q,t)-pairing <p_mu, p_nu> = delta z_mu prod (1-q^{mu_i})/(1-t^{mu_i}).
    pub fn qt_scalar(&self, other: &SymFun) -> RatFun {
        let mut s = RatFun::zero();
        for (mu, a) in &self.terms {
            let b = other.coeff(mu);
            if !b.is_zero() {
                s = &s + &(&(a * &b) * &mu.z_qt());
            }
        }
        s
    }

    /// Hall adjoint of multiplication: self^perp applied to g.
    pub fn perp(&self, g: &SymFun) -> SymFun {
        let mut out = SymFun::zero(g.degree);
        for (mu, c) in &self.terms {
            let mut cur = g.scale(c);
            for &k in mu.parts() {
                cur = p_perp(k, &cur);
            }
            for (lam, v) in cur.terms {
                out.insert_add(lam, v);
            }
        }
        out
    }

    /// (q,t)-adjoint of multiplication: p_k^perp picks up (1-q^k)/(1-t^k).
    pub fn perp_qt(&self, g: &SymFun) -> SymFun {
        let twist = Alphabet::x_times(RatFun::new(
            crate::scalars::one_minus_qt(1, 0),
            crate::scalars::one_minus_qt(0, 1),
        ));
        self.pleth(&twist).perp(g)
    }

    /// p-basis coefficients viewed in another basis.
    pub fn convert(&self, basis: Basis) -> BTreeMap<Partition, RatFun> {
        match basis {
            Basis::P => self.terms.clone(),
            Basis::S => {
                let mut out = BTreeMap::new();
                for d in 0..=self.top_degree() {
                    let fd = self.homogeneous(d);
                    if fd.is_zero() {
                        continue;
                    }
                    for lam in Partition::enumerate(d) {
                        // <f, s_lam> = sum_mu f_mu chi^lam(mu)
                        let mut c = RatFun::zero();
                        for (mu, a) in &fd.terms {
                            let chi = mn_char(&lam, mu);
                            if chi != 0 {
                                c = &c + &(a * &RatFun::from_int(chi));
                            }
                        }
                        if !c.is_zero() {
                            out.insert(lam, c);
                        }
                    }
                }
                out
            }
            Basis::M => {
                let mut out: BTreeMap<Partition, RatFun> = BTreeMap::new();
                for (mu, a) in &self.terms {
                    let tables = degree_tables(mu.size());
                    let mi = tables.index[mu];
                    for (li, lam) in tables.parts.iter().enumerate() {
                        let entry = &tables.p_in_m[mi][li];
                        if !entry.is_zero() {
                            let add = a * &RatFun::from_rational(entry.clone());
                            merge(&mut out, lam.clone(), add);
                        }
                    }
                }
                out
            }
            Basis::H => {
                // h is Hall-dual to m: coefficient of h_lam is <f, m_lam>
                let mut out = BTreeMap::new();
                for d in 0..=self.top_degree() {
                    let fd = self.homogeneous(d);
                    if fd.is_zero() {
                        continue;
                    }
                    let tables = degree_tables(d);
                    for (li, lam) in tables.parts.iter().enumerate() {
                        let mut m_lam = SymFun::zero(d);
                        for (mi, mu) in tables.parts.iter().enumerate() {
                            let entry = &tables.m_in_p[li][mi];
                            if !entry.is_zero() {
                                m_lam.insert_add(
                                    mu.clone(),
                                    RatFun::from_rational(entry.clone()),
                                );
                            }
                        }
                        let c = fd.hall_scalar(&m_lam);
                        if !c.is_zero() {
                            out.insert(lam.clone(), c);
                        }
                    }
                }
                out
            }
            Basis::E => self.omega().convert(Basis::H),
        }
    }

    /// Build a symmetric function from coefficients in a given basis.
    pub fn inject(
        basis: Basis,
        coeffs: &BTreeMap<Partition, RatFun>,
        degree: u32,
    ) -> SymFun {
        let mut out = SymFun::zero(degree);
        for (lam, c) in coeffs {
            let f = basis_element(basis, lam, degree).scale(c);
            for (mu, v) in f.terms {
                out.insert_add(mu, v);
            }
        }
        out
    }

    /// Substitute a value (or expression) for a scalar variable in every
    /// coefficient.
    pub fn substitute_scalars(
        &self,
        map: &HashMap<crate::scalars::Var, RatFun>,
    ) -> Result<SymFun, crate::scalars::ScalarError> {
        let mut out = SymFun::zero(self.degree);
        for (mu, c) in &self.terms {
            out.insert_add(mu.clone(), c.substitute(map)?);
        }
        Ok(out)
    }
}

fn merge(map: &mut BTreeMap<Partition, RatFun>, key: Partition, add: RatFun) {
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            if !add.is_zero() {
                e.insert(add);
            }
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &add;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// p_k^perp = k d/dp_k in the p-basis.
fn p_perp(k: u32, g: &SymFun) -> SymFun {
    let mut out = SymFun::zero(g.degree());
    for (lam, c) in g.terms() {
        let m = lam.multiplicity(k);
        if m == 0 {
            continue;
        }
        let mut parts: Vec<u32> = lam.parts().to_vec();
        let pos = parts.iter().position(|&p| p == k).unwrap();
        parts.remove(pos);
        out.insert_add(
            Partition::new(parts),
            &c.clone() * &RatFun::from_int((k as i64) * (m as i64)),
        );
    }
    out
}

/// The single basis element expanded in p.
pub fn basis_element(basis: Basis, lam: &Partition, degree: u32) -> SymFun {
    assert!(lam.size() <= degree);
    match basis {
        Basis::P => SymFun::p(lam.clone(), degree),
        Basis::H => {
            let mut f = SymFun::one(degree);
            for &n in lam.parts() {
                f = &f * &h_n(n, degree);
            }
            f
        }
        Basis::E => {
            let mut f = SymFun::one(degree);
            for &n in lam.parts() {
                f = &f * &h_n(n, degree).omega();
            }
            f
        }
        Basis::S => {
            let d = lam.size();
            let mut f = SymFun::zero(degree);
            for mu in Partition::enumerate(d) {
                let chi = mn_char(lam, &mu);
                if chi != 0 {
                    f.insert_add(
                        mu.clone(),
                        RatFun::from_rational(big(chi) / mu.z_classical()),
                    );
                }
            }
            f
        }
        Basis::M => {
            let tables = degree_tables(lam.size());
            let li = tables.index[lam];
            let mut f = SymFun::zero(degree);
            for (mi, mu) in tables.parts.iter().enumerate() {
                let entry = &tables.m_in_p[li][mi];
                if !entry.is_zero() {
                    f.insert_add(mu.clone(), RatFun::from_rational(entry.clone()));
                }
            }
            f
        }
    }
}

/// Complete homogeneous h_n = sum_{mu |- n} p_mu / z_mu.
pub fn h_n(n: u32, degree: u32) -> SymFun {
    let mut f = SymFun::zero(degree);
    for mu in Partition::enumerate(n) {
        let z = mu.z_classical();
        f.insert_add(mu, RatFun::from_rational(big(1) / z));
    }
    f
}

pub fn e_n(n: u32, degree: u32) -> SymFun {
    h_n(n, degree).omega()
}

/// Exp[Z X] truncated at `degree`: sum over mu of p_mu[Z] p_mu / z_mu.
pub fn exp_kernel(z: &RatFun, degree: u32) -> SymFun {
    let mut f = SymFun::zero(degree);
    for mu in Partition::enumerate_up_to(degree) {
        let mut c = RatFun::from_rational(big(1) / mu.z_classical());
        for &k in mu.parts() {
            c = &c * &z.adams(k);
        }
        f.insert_add(mu, c);
    }
    f
}

impl std::ops::Add for &SymFun {
    type Output = SymFun;
    fn add(self, other: &SymFun) -> SymFun {
        let mut f = SymFun::zero(self.degree.min(other.degree));
        for (mu, c) in &self.terms {
            f.insert_add(mu.clone(), c.clone());
        }
        for (mu, c) in &other.terms {
            f.insert_add(mu.clone(), c.clone());
        }
        f
    }
}

impl std::ops::Sub for &SymFun {
    type Output = SymFun;
    fn sub(self, other: &SymFun) -> SymFun {
        let mut f = SymFun::zero(self.degree.min(other.degree));
        for (mu, c) in &self.terms {
            f.insert_add(mu.clone(), c.clone());
        }
        for (mu, c) in &other.terms {
            f.insert_add(mu.clone(), -c);
        }
        f
    }
}

impl std::ops::Neg for &SymFun {
    type Output = SymFun;
    fn neg(self) -> SymFun {
        self.map_coeffs(|c| -c)
    }
}

impl std::ops::Mul for &SymFun {
    type Output = SymFun;
    fn mul(self, other: &SymFun) -> SymFun {
        let mut f = SymFun::zero(self.degree.min(other.degree));
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                if mu.size() + nu.size() <= f.degree {
                    f.insert_add(union(mu, nu), a * b);
                }
            }
        }
        f
    }
}

impl PartialEq for SymFun {
    fn eq(&self, other: &SymFun) -> bool {
        // zero coefficients are never stored, so supports must agree
        self.terms == other.terms
    }
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mu, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*p{mu}")?;
        }
        Ok(())
    }
}

// --- per-degree basis transition tables -----------------------------------

struct DegreeTables {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// row mu: p_mu = sum_lam p_in_m[mu][lam] m_lam
    p_in_m: Vec<Vec<BigRational>>,
    /// row lam: m_lam = sum_mu m_in_p[lam][mu] p_mu
    m_in_p: Vec<Vec<BigRational>>,
}

static TABLES: Lazy<RwLock<HashMap<u32, Arc<DegreeTables>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn degree_tables(d: u32) -> Arc<DegreeTables> {
    if let Some(t) = TABLES.read().unwrap().get(&d) {
        return t.clone();
    }
    let t = Arc::new(build_degree_tables(d));
    TABLES.write().unwrap().entry(d).or_insert(t).clone()
}

fn build_degree_tables(d: u32) -> DegreeTables {
    let parts = Partition::enumerate(d);
    let n = parts.len();
    let index: HashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut p_in_m = vec![vec![BigRational::zero(); n]; n];
    for (mi, mu) in parts.iter().enumerate() {
        // multiply out p_{mu_1} ... p_{mu_l} in the m-basis
        let mut cur: BTreeMap<Partition, BigRational> = BTreeMap::new();
        cur.insert(Partition::empty(), big(1));
        for &r in mu.parts() {
            let mut next: BTreeMap<Partition, BigRational> = BTreeMap::new();
            for (lam, c) in &cur {
                for (target, mult) in m_mul_p(lam, r) {
                    *next.entry(target).or_insert_with(BigRational::zero) +=
                        c * big(mult);
                }
            }
            cur = next;
        }
        for (lam, c) in cur {
            p_in_m[mi][index[&lam]] = c;
        }
    }
    let m_in_p = invert(&p_in_m);
    DegreeTables {
        parts,
        index,
        p_in_m,
        m_in_p,
    }
}

/// m_lam * p_r in the m-basis: add r to one distinct part value, or append
/// a new part r; the coefficient is the multiplicity of the enlarged part
/// in the result.
fn m_mul_p(lam: &Partition, r: u32) -> Vec<(Partition, i64)> {
    let mut out = Vec::new();
    let mut values: Vec<u32> = lam.parts().to_vec();
    values.dedup();
    for &v in &values {
        let mut parts: Vec<u32> = lam.parts().to_vec();
        let pos = parts.iter().position(|&p| p == v).unwrap();
        parts[pos] = v + r;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let target = Partition::new(parts);
        let mult = target.multiplicity(v + r) as i64;
        out.push((target, mult));
    }
    let mut parts: Vec<u32> = lam.parts().to_vec();
    parts.push(r);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let target = Partition::new(parts);
    let mult = target.multiplicity(r) as i64;
    out.push((target, mult));
    out
}

fn invert(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut inv = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = big(1);
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("transition matrix is invertible");
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let pv = m[col][col].clone();
        for j in 0..n {
            m[col][j] /= &pv;
            inv[col][j] /= &pv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    let x = &m[col][j] * &f;
                    m[r][j] -= x;
                    let y = &inv[col][j] * &f;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

// --- JSON ------------------------------------------------------------------

pub fn symfun_to_json(f: &SymFun, basis: Basis) -> Value {
    let coeffs = f.convert(basis);
    let terms: Vec<Value> = coeffs
        .iter()
        .map(|(mu, c)| {
            json!({
                "mu": mu.parts(),
                "coef": ratfun_to_json(c),
            })
        })
        .collect();
    json!({
        "basis": basis.letter(),
        "degree": f.degree(),
        "terms": terms,
    })
}

pub fn symfun_from_json(v: &Value) -> Option<SymFun> {
    let basis = Basis::from_letter(v.get("basis")?.as_str()?)?;
    let degree = v.get("degree")?.as_u64()? as u32;
    let mut coeffs = BTreeMap::new();
    for term in v.get("terms")?.as_array()? {
        let mu: Vec<u32> = term
            .get("mu")?
            .as_array()?
            .iter()
            .map(|x| x.as_u64().map(|n| n as u32))
            .collect::<Option<_>>()?;
        let coef = ratfun_from_json(term.get("coef")?)?;
        coeffs.insert(Partition::new(mu), coef);
    }
    Some(SymFun::inject(basis, &coeffs, degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{one_minus_qt, Var};

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn qt_ratio(a: u32, b: u32) -> RatFun {
        RatFun::new(one_minus_qt(a, 0), one_minus_qt(0, b))
    }

    #[test]
    fn pleth_qt_twist() {
        // p_2[X(1-q)/(1-t)] = (1-q^2)/(1-t^2) p_2
        let f = SymFun::p(pt(&[2]), 4);
        let twist = Alphabet::x_times(qt_ratio(1, 1));
        let expect = SymFun::p(pt(&[2]), 4).scale(&qt_ratio(2, 2));
        assert_eq!(f.pleth(&twist), expect);
    }

    #[test]
    fn pleth_minus_x_and_identity() {
        for mu in Partition::enumerate_up_to(4) {
            let f = SymFun::p(mu.clone(), 4);
            let sign = if mu.len() % 2 == 0 { 1 } else { -1 };
            assert_eq!(f.pleth(&Alphabet::minus_x()), f.scale(&RatFun::from_int(sign)));
            assert_eq!(f.pleth(&Alphabet::x()), f);
        }
    }

    #[test]
    fn pleth_translation_at_zero_is_identity() {
        let f = &(&SymFun::p(pt(&[2, 1]), 4) * &SymFun::constant(RatFun::var(Var::q()), 4))
            + &SymFun::p(pt(&[1, 1]), 4);
        assert_eq!(f.pleth(&Alphabet::x_plus(RatFun::zero())), f);
    }

    #[test]
    fn scalar_products() {
        let p2 = SymFun::p(pt(&[2]), 4);
        let p11 = SymFun::p(pt(&[1, 1]), 4);
        let p1sq = &SymFun::p(pt(&[1]), 4) * &SymFun::p(pt(&[1]), 4);
        assert_eq!(p2.hall_scalar(&p2), RatFun::from_int(2));
        assert_eq!(p2.hall_scalar(&p11), RatFun::zero());
        assert_eq!(p2.qt_scalar(&p11), RatFun::zero());
        // <p_1^2, p_1^2>_{q,t} = 2 ((1-q)/(1-t))^2
        let a = qt_ratio(1, 1);
        let expect = &RatFun::from_int(2) * &(&a * &a);
        assert_eq!(p1sq.qt_scalar(&p1sq), expect);
    }

    #[test]
    fn qt_scalar_is_twisted_hall() {
        let twist = Alphabet::x_times(qt_ratio(1, 1));
        for mu in Partition::enumerate_up_to(4) {
            for nu in Partition::enumerate_up_to(4) {
                let f = SymFun::p(mu.clone(), 4);
                let g = SymFun::p(nu.clone(), 4);
                assert_eq!(f.qt_scalar(&g), f.hall_scalar(&g.pleth(&twist)));
            }
        }
    }

    #[test]
    fn perp_examples() {
        let p1 = SymFun::p(pt(&[1]), 4);
        let p2 = SymFun::p(pt(&[2]), 4);
        let p1sq = &p1 * &p1;
        assert_eq!(p1.perp(&p1sq), p1.scale(&RatFun::from_int(2)));
        assert_eq!(p2.perp(&p2), SymFun::constant(RatFun::from_int(2), 4));
        let h1 = h_n(1, 4);
        assert!(h1.perp(&p2).is_zero());
    }

    #[test]
    fn hall_adjunction() {
        // <p_mu f, g> = <f, p_mu^perp g> over all p-basis triples, deg <= 4
        let all = Partition::enumerate_up_to(4);
        for mu in &all {
            for lam in &all {
                for nu in &all {
                    if mu.size() + lam.size() > 4 {
                        continue;
                    }
                    let f = SymFun::p(lam.clone(), 4);
                    let g = SymFun::p(nu.clone(), 4);
                    let pmu = SymFun::p(mu.clone(), 4);
                    let lhs = (&pmu * &f).hall_scalar(&g);
                    let rhs = f.hall_scalar(&pmu.perp(&g));
                    assert_eq!(lhs, rhs, "mu={mu} lam={lam} nu={nu}");
                }
            }
        }
    }

    #[test]
    fn qt_adjunction() {
        for mu in Partition::enumerate_up_to(3) {
            for lam in Partition::enumerate_up_to(3) {
                for nu in Partition::enumerate_up_to(3) {
                    let f = SymFun::p(lam.clone(), 6);
                    let g = SymFun::p(nu.clone(), 6);
                    let pmu = SymFun::p(mu.clone(), 6);
                    let lhs = (&pmu * &f).qt_scalar(&g);
                    let rhs = f.qt_scalar(&pmu.perp_qt(&g));
                    assert_eq!(lhs, rhs, "mu={mu} lam={lam} nu={nu}");
                }
            }
        }
    }

    #[test]
    fn basis_conversion_examples() {
        // p_1^2 = m_2 + 2 m_11
        let p1 = SymFun::p(pt(&[1]), 4);
        let p1sq = &p1 * &p1;
        let m = p1sq.convert(Basis::M);
        assert_eq!(m[&pt(&[2])], RatFun::from_int(1));
        assert_eq!(m[&pt(&[1, 1])], RatFun::from_int(2));
        assert_eq!(m.len(), 2);
        // h_2 = (p_1^2 + p_2)/2
        let h2 = h_n(2, 4);
        let half = RatFun::from_rational(big(1) / big(2));
        assert_eq!(h2.coeff(&pt(&[1, 1])), half);
        assert_eq!(h2.coeff(&pt(&[2])), half);
        // s_11 = (p_1^2 - p_2)/2
        let s11 = basis_element(Basis::S, &pt(&[1, 1]), 4);
        assert_eq!(s11.coeff(&pt(&[1, 1])), half);
        assert_eq!(s11.coeff(&pt(&[2])), -&half);
    }

    #[test]
    fn basis_round_trips() {
        for basis in [Basis::M, Basis::H, Basis::E, Basis::S] {
            for mu in Partition::enumerate_up_to(6) {
                let f = SymFun::p(mu.clone(), 6);
                let view = f.convert(basis);
                let back = SymFun::inject(basis, &view, 6);
                assert_eq!(back, f, "basis={basis:?} mu={mu}");
            }
        }
    }

    #[test]
    fn exp_kernel_examples() {
        assert_eq!(exp_kernel(&RatFun::zero(), 3), SymFun::one(3));
        // D=1, Z=u/(1-q): 1 + u/(1-q) p_1
        let z = RatFun::new(
            crate::scalars::MultiPoly::var(Var::u()),
            one_minus_qt(1, 0),
        );
        let got = exp_kernel(&z, 1);
        let expect = &SymFun::one(1) + &SymFun::p(pt(&[1]), 1).scale(&z);
        assert_eq!(got, expect);
        // degree-2 component of Exp[X] is h_2
        let exp_x = exp_kernel(&RatFun::one(), 3);
        assert_eq!(exp_x.homogeneous(2), h_n(2, 3).with_degree(3).homogeneous(2));
    }

    #[test]
    fn exp_kernel_is_multiplicative() {
        // Exp[(Z+Z')X] = Exp[ZX] Exp[Z'X]
        let z1 = RatFun::var(Var::u());
        let z2 = RatFun::var(Var::z());
        let lhs = exp_kernel(&(&z1 + &z2), 4);
        let rhs = &exp_kernel(&z1, 4) * &exp_kernel(&z2, 4);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_is_involution_and_swaps_h_e() {
        for mu in Partition::enumerate_up_to(5) {
            let f = SymFun::p(mu.clone(), 5);
            assert_eq!(f.omega().omega(), f);
        }
        for n in 1..=5 {
            assert_eq!(h_n(n, 5).omega(), e_n(n, 5));
        }
    }

    #[test]
    fn json_round_trip() {
        let f = &h_n(2, 4).scale(&RatFun::var(Var::q())) + &SymFun::p(pt(&[1, 1]), 4);
        for basis in [Basis::P, Basis::M, Basis::S, Basis::H, Basis::E] {
            let v = symfun_to_json(&f, basis);
            let back = symfun_from_json(&v).unwrap();
            assert_eq!(back, f, "basis={basis:?}");
        }
    }
}
