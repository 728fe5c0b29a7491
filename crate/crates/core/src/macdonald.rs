//! Macdonald polynomials (P, J and the modified H-tilde), the diagonal
//! nabla/delta operators on both the integral and modified sides, the
//! Gamma operator, the creation formulas, and the phi conjugation that
//! moves statements between the two sides.

use crate::partitions::{pochhammer, Partition};
use crate::scalars::json::{ratfun_from_json, ratfun_to_json};
use crate::scalars::{one_minus_qt, qt_monomial, MultiPoly, RatFun, Var};
use crate::symfunc::{
    basis_element, exp_kernel, h_n, symfun_from_json, symfun_to_json, Alphabet, Basis, SymFun,
};
use once_cell::sync::Lazy;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, RwLock};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MacError {
    #[error("singular eigenvalue: {op} is not invertible at {lam}")]
    SingularEigenvalue { op: String, lam: String },
    #[error("creation chain mismatch for {0}")]
    MismatchCertificate(String),
}

/// Which family of Macdonald polynomials an operator is diagonal on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// Integral forms J with eigenvalues in q^{a'} t^{-l'}.
    Integral,
    /// Modified forms H-tilde with eigenvalues in q^{a'} t^{l'}.
    Modified,
}

pub const CACHE_SCHEMA: u32 = 1;

/// All Macdonald data for one degree.
pub struct DegreeCache {
    pub degree: u32,
    pub parts: Vec<Partition>,
    p: HashMap<Partition, SymFun>,
    j: HashMap<Partition, SymFun>,
    h: HashMap<Partition, SymFun>,
    /// <J, J>_{q,t} computed by pairing, not by the product formula.
    norm: HashMap<Partition, RatFun>,
}

static CACHE: Lazy<RwLock<HashMap<u32, Arc<DegreeCache>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

pub fn cache_dir() -> PathBuf {
    std::env::var_os("MACLAB_CACHE")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("./cache"))
}

pub fn mac_cache(degree: u32) -> Arc<DegreeCache> {
    if let Some(c) = CACHE.read().unwrap().get(&degree) {
        return c.clone();
    }
    let built = load_degree(degree).unwrap_or_else(|| {
        let c = compute_degree(degree);
        save_degree(&c);
        c
    });
    let arc = Arc::new(built);
    CACHE
        .write()
        .unwrap()
        .entry(degree)
        .or_insert(arc)
        .clone()
}

/// Degrees currently present in the on-disk cache.
pub fn cached_degrees() -> Vec<u32> {
    let mut out = Vec::new();
    if let Ok(rd) = std::fs::read_dir(cache_dir()) {
        for entry in rd.flatten() {
            let name = entry.file_name();
            let name = name.to_string_lossy();
            if let Some(num) = name
                .strip_prefix("degree-")
                .and_then(|s| s.strip_suffix(".json"))
            {
                if let Ok(d) = num.parse() {
                    out.push(d);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn clear_disk_cache() -> std::io::Result<()> {
    let dir = cache_dir();
    if dir.exists() {
        for d in cached_degrees() {
            std::fs::remove_file(dir.join(format!("degree-{d}.json")))?;
        }
    }
    Ok(())
}

fn compute_degree(degree: u32) -> DegreeCache {
    let parts = Partition::enumerate(degree);
    let mut p = HashMap::new();
    let mut j = HashMap::new();
    let mut h = HashMap::new();
    let mut norm = HashMap::new();
    // Gram-Schmidt in increasing order (reverse of enumerate()), which is a
    // linear extension of dominance; this keeps P monomial-triangular. The
    // projection coefficient onto an already-orthogonal P_mu can pair against
    // m_lambda instead of the partial vector, and since f = m_lambda + lower
    // orthogonal terms, <f,f> = <f,m_lambda>; both pairings stay cheap.
    let mut done: Vec<(SymFun, RatFun)> = Vec::new();
    for lam in parts.iter().rev() {
        let m = basis_element(Basis::M, lam, degree);
        let mut f = m.clone();
        for (pmu, nmu) in &done {
            let c = &m.qt_scalar(pmu) / nmu;
            if !c.is_zero() {
                f = &f - &pmu.scale(&c);
            }
        }
        let n = f.qt_scalar(&m);
        let mut corr = MultiPoly::one();
        for (r, c) in lam.cells() {
            let s = lam.cell_stats(r, c);
            corr = &corr * &one_minus_qt(s.arm, s.leg + 1);
        }
        let corr = RatFun::from_poly(corr);
        let jfun = f.scale(&corr);
        // <J,J> = corr^2 <f,f> by bilinearity
        let jn = &(&corr * &corr) * &n;
        let hfun = phi(&jfun).scale(&qt_monomial(0, lam.n_stat() as i64));
        p.insert(lam.clone(), f.clone());
        j.insert(lam.clone(), jfun);
        h.insert(lam.clone(), hfun);
        norm.insert(lam.clone(), jn);
        done.push((f, n));
    }
    DegreeCache {
        degree,
        parts,
        p,
        j,
        h,
        norm,
    }
}

fn load_degree(degree: u32) -> Option<DegreeCache> {
    let path = cache_dir().join(format!("degree-{degree}.json"));
    let text = std::fs::read_to_string(path).ok()?;
    let v: Value = serde_json::from_str(&text).ok()?;
    if v.get("schema")?.as_u64()? != CACHE_SCHEMA as u64 {
        return None;
    }
    if v.get("degree")?.as_u64()? != degree as u64 {
        return None;
    }
    let parts = Partition::enumerate(degree);
    let mut p = HashMap::new();
    let mut j = HashMap::new();
    let mut h = HashMap::new();
    let mut norm = HashMap::new();
    let entries = v.get("entries")?.as_array()?;
    if entries.len() != parts.len() {
        return None;
    }
    for entry in entries {
        let lam: Vec<u32> = entry
            .get("lambda")?
            .as_array()?
            .iter()
            .map(|x| x.as_u64().map(|n| n as u32))
            .collect::<Option<_>>()?;
        let lam = Partition::new(lam);
        let jfun = symfun_from_json(entry.get("j")?)?;
        let n = ratfun_from_json(entry.get("norm")?)?;
        // P and H-tilde are cheap to rebuild from J
        let mut corr = MultiPoly::one();
        for (r, c) in lam.cells() {
            let s = lam.cell_stats(r, c);
            corr = &corr * &one_minus_qt(s.arm, s.leg + 1);
        }
        let pfun = jfun.scale(&RatFun::new(MultiPoly::one(), corr));
        let hfun = phi(&jfun).scale(&qt_monomial(0, lam.n_stat() as i64));
        p.insert(lam.clone(), pfun);
        h.insert(lam.clone(), hfun);
        norm.insert(lam.clone(), n);
        j.insert(lam, jfun);
    }
    Some(DegreeCache {
        degree,
        parts,
        p,
        j,
        h,
        norm,
    })
}

fn save_degree(c: &DegreeCache) {
    let dir = cache_dir();
    if std::fs::create_dir_all(&dir).is_err() {
        return;
    }
    let entries: Vec<Value> = c
        .parts
        .iter()
        .map(|lam| {
            json!({
                "lambda": lam.parts(),
                "j": symfun_to_json(&c.j[lam], Basis::P),
                "norm": ratfun_to_json(&c.norm[lam]),
            })
        })
        .collect();
    let v = json!({
        "schema": CACHE_SCHEMA,
        "degree": c.degree,
        "entries": entries,
    });
    let path = dir.join(format!("degree-{}.json", c.degree));
    let _ = std::fs::write(path, serde_json::to_string(&v).unwrap());
}

pub fn macdonald_p(lam: &Partition) -> SymFun {
    mac_cache(lam.size()).p[lam].clone()
}

pub fn macdonald_j(lam: &Partition) -> SymFun {
    mac_cache(lam.size()).j[lam].clone()
}

pub fn modified_h(lam: &Partition) -> SymFun {
    mac_cache(lam.size()).h[lam].clone()
}

/// The pairing-computed norm <J_lam, J_lam>_{q,t}; the closed product
/// formula is kept as an independent check, never used here.
pub fn j_norm_computed(lam: &Partition) -> RatFun {
    mac_cache(lam.size()).norm[lam].clone()
}

// --- phi conjugation --------------------------------------------------------

/// Substitute t -> 1/t in every coefficient.
pub fn conj_t(f: &SymFun) -> SymFun {
    let mut map = HashMap::new();
    map.insert(
        Var::t(),
        RatFun::new(MultiPoly::one(), MultiPoly::var(Var::t())),
    );
    f.substitute_scalars(&map)
        .expect("t -> 1/t has no poles on rational functions of t")
}

/// phi: sum d_mu(q,t) p_mu  |->  sum d_mu(q,1/t) p_mu[X/(1-1/t)].
pub fn phi(f: &SymFun) -> SymFun {
    let scale = RatFun::new(
        MultiPoly::var(Var::t()),
        &MultiPoly::var(Var::t()) - &MultiPoly::one(),
    );
    conj_t(f).pleth(&Alphabet::x_times(scale))
}

/// phi^{-1}: sum d_mu(q,t) p_mu  |->  sum d_mu(q,1/t) p_mu[X(1-t)].
pub fn phi_inv(f: &SymFun) -> SymFun {
    let scale = RatFun::from_poly(one_minus_qt(0, 1));
    conj_t(f).pleth(&Alphabet::x_times(scale))
}

// --- basis expansions -------------------------------------------------------

/// Expand f in the integral Macdonald basis via orthogonality.
pub fn expand_j(f: &SymFun) -> BTreeMap<Partition, RatFun> {
    let mut out = BTreeMap::new();
    for d in 0..=f.top_degree() {
        let fd = f.homogeneous(d);
        if fd.is_zero() {
            continue;
        }
        let cache = mac_cache(d);
        for lam in &cache.parts {
            let c = &fd.qt_scalar(&cache.j[lam]) / &cache.norm[lam];
            if !c.is_zero() {
                out.insert(lam.clone(), c);
            }
        }
    }
    out
}

pub fn from_j(coeffs: &BTreeMap<Partition, RatFun>, degree: u32) -> SymFun {
    let mut f = SymFun::zero(degree);
    for (lam, c) in coeffs {
        f = &f + &macdonald_j(lam).with_degree(degree).scale(c);
    }
    f
}

/// Expand f in the modified basis, routed through phi:
/// f = sum c_lam H-tilde_lam  iff  phi^{-1}(f) = sum c_lam(t->1/t) t^{-n} J_lam.
pub fn expand_h(f: &SymFun) -> BTreeMap<Partition, RatFun> {
    let a = expand_j(&phi_inv(f));
    let mut map = HashMap::new();
    map.insert(
        Var::t(),
        RatFun::new(MultiPoly::one(), MultiPoly::var(Var::t())),
    );
    a.into_iter()
        .map(|(lam, c)| {
            let n = lam.n_stat() as i64;
            let c = &c.substitute(&map).unwrap() * &qt_monomial(0, -n);
            (lam, c)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

pub fn from_h(coeffs: &BTreeMap<Partition, RatFun>, degree: u32) -> SymFun {
    let mut f = SymFun::zero(degree);
    for (lam, c) in coeffs {
        f = &f + &modified_h(lam).with_degree(degree).scale(c);
    }
    f
}

// --- diagonal operators -----------------------------------------------------

pub fn nabla_eig(lam: &Partition, side: Side) -> RatFun {
    let sign = if lam.size() % 2 == 0 { 1 } else { -1 };
    let nc = lam.conjugate().n_stat() as i64;
    let n = lam.n_stat() as i64;
    let tpow = match side {
        Side::Integral => -n,
        Side::Modified => n,
    };
    &RatFun::from_int(sign) * &qt_monomial(nc, tpow)
}

pub fn delta_eig(lam: &Partition, v: &RatFun, side: Side) -> RatFun {
    let mut e = RatFun::one();
    for (r, c) in lam.cells() {
        let s = lam.cell_stats(r, c);
        let lpow = match side {
            Side::Integral => -(s.coleg as i64),
            Side::Modified => s.coleg as i64,
        };
        let factor = &RatFun::one() - &(v * &qt_monomial(s.coarm as i64, lpow));
        e = &e * &factor;
    }
    e
}

fn apply_diagonal(
    f: &SymFun,
    side: Side,
    op: &str,
    eig: impl Fn(&Partition) -> RatFun,
    invert: bool,
) -> Result<SymFun, MacError> {
    let coeffs = match side {
        Side::Integral => expand_j(f),
        Side::Modified => expand_h(f),
    };
    let mut scaled = BTreeMap::new();
    for (lam, c) in coeffs {
        let e = eig(&lam);
        let c = if invert {
            if e.is_zero() {
                return Err(MacError::SingularEigenvalue {
                    op: op.to_string(),
                    lam: lam.to_string(),
                });
            }
            &c / &e
        } else {
            &c * &e
        };
        scaled.insert(lam, c);
    }
    Ok(match side {
        Side::Integral => from_j(&scaled, f.degree()),
        Side::Modified => from_h(&scaled, f.degree()),
    })
}

pub fn nabla(f: &SymFun, side: Side) -> Result<SymFun, MacError> {
    apply_diagonal(f, side, "nabla", |lam| nabla_eig(lam, side), false)
}

pub fn nabla_inv(f: &SymFun, side: Side) -> Result<SymFun, MacError> {
    apply_diagonal(f, side, "nabla^{-1}", |lam| nabla_eig(lam, side), true)
}

pub fn delta_v(f: &SymFun, v: &RatFun, side: Side) -> Result<SymFun, MacError> {
    apply_diagonal(f, side, "delta_v", |lam| delta_eig(lam, v, side), false)
}

pub fn delta_v_inv(f: &SymFun, v: &RatFun, side: Side) -> Result<SymFun, MacError> {
    apply_diagonal(f, side, "delta_v^{-1}", |lam| delta_eig(lam, v, side), true)
}

// --- plethystic multiplication and translation ------------------------------

/// P_Z f = Exp[ZX] f, truncated at the degree of f.
pub fn mult_pexp(f: &SymFun, z: &RatFun) -> SymFun {
    &exp_kernel(z, f.degree()) * f
}

/// T_Z f = f[X + Z].
pub fn translate(f: &SymFun, z: &RatFun) -> SymFun {
    f.pleth(&Alphabet::x_plus(z.clone()))
}

// --- the Gamma operator -----------------------------------------------------

/// A u-graded operator value: by_u[k] is the coefficient of u^k.
#[derive(Clone, Debug)]
pub struct UGraded {
    pub by_u: Vec<SymFun>,
}

impl UGraded {
    pub fn coeff(&self, k: usize) -> SymFun {
        self.by_u
            .get(k)
            .cloned()
            .unwrap_or_else(|| SymFun::zero(0))
    }
}

/// Gamma(uscale*u, v) f, with u left inside the coefficients.
///
/// Integral side: Delta_{1/v} P_{uv(1-t)/(1-q)} Delta_{1/v}^{-1};
/// modified side: Delta_{1/v} P_{uv/(1-q)} Delta_{1/v}^{-1}.
pub fn gamma_raw(
    f: &SymFun,
    v: &RatFun,
    uscale: &RatFun,
    side: Side,
) -> Result<SymFun, MacError> {
    let vinv = v
        .inverse()
        .map_err(|_| MacError::SingularEigenvalue {
            op: "delta_{1/v}".to_string(),
            lam: "v=0".to_string(),
        })?;
    let g = delta_v_inv(f, &vinv, side)?;
    let u = RatFun::var(Var::u());
    let z = match side {
        Side::Integral => {
            let ratio = RatFun::new(one_minus_qt(0, 1), one_minus_qt(1, 0));
            &(&(uscale * &u) * v) * &ratio
        }
        Side::Modified => {
            let inv = RatFun::new(MultiPoly::one(), one_minus_qt(1, 0));
            &(&(uscale * &u) * v) * &inv
        }
    };
    let g = mult_pexp(&g, &z);
    let g = delta_v(&g, &vinv, side)?;
    if let Some(vvar) = single_var(v) {
        assert_v_polynomial(&g, vvar, side);
    }
    Ok(g)
}

/// Gamma as a u-graded operator value.
pub fn gamma(
    f: &SymFun,
    v: &RatFun,
    uscale: &RatFun,
    side: Side,
) -> Result<UGraded, MacError> {
    Ok(u_grade(&gamma_raw(f, v, uscale, side)?))
}

/// Split a symmetric function whose coefficients are polynomial in u into
/// its u-homogeneous layers.
pub fn u_grade(f: &SymFun) -> UGraded {
    let u = Var::u();
    let mut by_u: Vec<SymFun> = Vec::new();
    for (mu, c) in f.terms() {
        let layers = c
            .as_polynomial_in(&[u])
            .expect("coefficients must be polynomial in u");
        for (mono, coef) in layers {
            let k = mono.exp(u) as usize;
            while by_u.len() <= k {
                by_u.push(SymFun::zero(f.degree()));
            }
            by_u[k].insert_add(mu.clone(), coef);
        }
    }
    UGraded { by_u }
}

fn single_var(v: &RatFun) -> Option<Var> {
    if !v.den().is_one() {
        return None;
    }
    let mut terms = v.num().terms();
    let (mono, c) = terms.next()?;
    if terms.next().is_some() || !c.is_integer() || c != &crate::scalars::big(1) {
        return None;
    }
    let mut vars = mono.vars();
    let var = vars.next()?;
    if vars.next().is_some() || mono.exp(var) != 1 {
        return None;
    }
    Some(var)
}

/// Every Macdonald-basis coefficient of a Gamma image must be polynomial in
/// the symbolic v parameter; a failure here is a bug detector.
fn assert_v_polynomial(g: &SymFun, vvar: Var, side: Side) {
    let coeffs = match side {
        Side::Integral => expand_j(g),
        Side::Modified => expand_h(g),
    };
    for (lam, c) in coeffs {
        assert!(
            c.as_polynomial_in(&[vvar]).is_some(),
            "Gamma image not polynomial in v at {lam}: {c}"
        );
    }
}

/// The creation operator Gamma+_m = [u^m] nabla^{-1} Gamma(u, q^m) nabla.
pub fn gamma_plus(m: u32, f: &SymFun, side: Side) -> Result<SymFun, MacError> {
    let v = qt_monomial(m as i64, 0);
    let g = gamma_raw(&nabla(f, side)?, &v, &RatFun::one(), side)?;
    let graded = u_grade(&g);
    if graded.by_u.len() <= m as usize {
        return Ok(SymFun::zero(f.degree()));
    }
    nabla_inv(&graded.by_u[m as usize], side)
}

// --- creation chains --------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CreationVariant {
    Thm1Integral,
    Thm2Integral,
    Thm1Modified,
    Thm2Modified,
}

impl CreationVariant {
    pub fn name(self) -> &'static str {
        match self {
            CreationVariant::Thm1Integral => "thm1-integral",
            CreationVariant::Thm2Integral => "thm2-integral",
            CreationVariant::Thm1Modified => "thm1-modified",
            CreationVariant::Thm2Modified => "thm2-modified",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CreationCertificate {
    pub lambda: Partition,
    pub variant: CreationVariant,
    pub lhs: SymFun,
    pub rhs: SymFun,
    pub equal: bool,
}

/// Evaluate both sides of the chosen creation theorem independently.
///
/// thm1 variants: Gamma+_{lam_1} ... Gamma+_{lam_k} . 1 versus the
/// Gram-Schmidt J_lam (integral) or H-tilde_lam (modified).
/// thm2 variants: the full Gamma(u,.) chain versus the closed nabla/translate
/// expression; u stays formal and equality is per u-degree.
pub fn creation_chain(
    lam: &Partition,
    variant: CreationVariant,
) -> Result<CreationCertificate, MacError> {
    let degree = lam.size();
    let side = match variant {
        CreationVariant::Thm1Integral | CreationVariant::Thm2Integral => Side::Integral,
        CreationVariant::Thm1Modified | CreationVariant::Thm2Modified => Side::Modified,
    };
    let lhs;
    let rhs;
    match variant {
        CreationVariant::Thm1Integral | CreationVariant::Thm1Modified => {
            let mut f = SymFun::one(degree);
            for &m in lam.parts().iter().rev() {
                f = gamma_plus(m, &f, side)?;
            }
            lhs = f;
            rhs = match side {
                Side::Integral => macdonald_j(lam),
                // The u-extractions in the modified chain each carry a
                // t^{(i-1) lam_i} scalar relative to the t-shifted chain of
                // the thm2 identity, so the product of plain Gamma+ operators
                // creates t^{-n(lam)} H-tilde_lam.
                Side::Modified => {
                    modified_h(lam).scale(&qt_monomial(0, -(lam.n_stat() as i64)))
                }
            };
        }
        CreationVariant::Thm2Integral | CreationVariant::Thm2Modified => {
            // chain Gamma(u, q^{lam_1}) Gamma(t^{-+1} u, q^{lam_2}) ... . 1
            let mut f = SymFun::one(degree);
            for (i, &m) in lam.parts().iter().enumerate().rev() {
                let tstep = match side {
                    Side::Integral => qt_monomial(0, -(i as i64)),
                    Side::Modified => qt_monomial(0, i as i64),
                };
                f = gamma_raw(&f, &qt_monomial(m as i64, 0), &tstep, side)?;
            }
            lhs = f;
            let u = RatFun::var(Var::u());
            rhs = match side {
                Side::Integral => {
                    // t^{-n(lam)} nabla T_{1/(u(1-t))} J_lam[uX]
                    let jf = macdonald_j(lam).pleth(&Alphabet::x_times(u.clone()));
                    let z = RatFun::new(
                        MultiPoly::one(),
                        &MultiPoly::var(Var::u()) * &one_minus_qt(0, 1),
                    );
                    let g = translate(&jf, &z);
                    nabla(&g, side)?.scale(&qt_monomial(0, -(lam.n_stat() as i64)))
                }
                Side::Modified => {
                    // nabla H-tilde_lam[uX + 1]
                    let hf = modified_h(lam).pleth(&Alphabet::XLinear {
                        scale: u.clone(),
                        shift: RatFun::one(),
                    });
                    nabla(&hf, side)?
                }
            };
        }
    }
    let equal = lhs == rhs;
    Ok(CreationCertificate {
        lambda: lam.clone(),
        variant,
        lhs,
        rhs,
        equal,
    })
}

// --- B and D statistics, super nabla ----------------------------------------

/// M = (1-q)(1-t).
pub fn m_qt() -> RatFun {
    RatFun::from_poly(&one_minus_qt(1, 0) * &one_minus_qt(0, 1))
}

/// B_lambda = sum_i t^{i-1} (1-q^{lambda_i})/(1-q).
pub fn b_stat(lam: &Partition) -> RatFun {
    let mut b = RatFun::zero();
    for (i, &part) in lam.parts().iter().enumerate() {
        let term = &qt_monomial(0, i as i64)
            * &RatFun::new(one_minus_qt(part, 0), one_minus_qt(1, 0));
        b = &b + &term;
    }
    b
}

/// D_lambda = M B_lambda - 1.
pub fn d_stat(lam: &Partition) -> RatFun {
    &(&m_qt() * &b_stat(lam)) - &RatFun::one()
}

/// The two-alphabet pairing table of (t-1)^{-m} nabla nabla_Y p_pi[X]:
/// entry (mu, nu) is the coefficient of p_mu[X] p_nu[Y].
pub fn super_nabla_pair(pi: &Partition) -> BTreeMap<(Partition, Partition), RatFun> {
    let m = pi.size();
    let a = expand_j(&SymFun::p(pi.clone(), m));
    let gamma_inv = RatFun::new(
        MultiPoly::one(),
        &MultiPoly::var(Var::t()) - &MultiPoly::one(),
    )
    .pow(m as i64);
    let mut out: BTreeMap<(Partition, Partition), RatFun> = BTreeMap::new();
    for (lam, c) in a {
        let w = &(&c * &nabla_eig(&lam, Side::Integral))
            * &qt_monomial(0, -(lam.n_stat() as i64));
        let w = &w * &gamma_inv;
        let j = macdonald_j(&lam);
        for (mu, cx) in j.terms() {
            for (nu, cy) in j.terms() {
                let add = &(&w * cx) * cy;
                let key = (mu.clone(), nu.clone());
                match out.entry(key) {
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
        }
    }
    out
}

// --- identity checks ----------------------------------------------------------
//
// Each check returns true when the identity holds exactly; they are shared by
// the test suite and the `verify` CLI verb.

/// J_lambda is upper-triangular in the monomial basis under dominance order,
/// with a nonzero leading coefficient at m_lambda.
pub fn check_triangularity(lam: &Partition) -> bool {
    let j = macdonald_j(lam);
    let m = j.convert(Basis::M);
    if m.get(lam).map_or(true, RatFun::is_zero) {
        return false;
    }
    m.iter()
        .all(|(mu, c)| c.is_zero() || mu.dominance_leq(lam))
}

/// <J_lambda, J_rho>_{q,t} = delta * the closed hook product.
pub fn check_orthogonality(lam: &Partition, rho: &Partition) -> bool {
    let s = macdonald_j(lam).qt_scalar(&macdonald_j(rho));
    if lam == rho {
        s == lam.j_norm()
    } else {
        s.is_zero()
    }
}

/// J_[m] = (q;q)_m h_m[X(1-t)/(1-q)].
pub fn check_row_formula(m: u32) -> bool {
    let row = if m == 0 {
        Partition::empty()
    } else {
        Partition::new(vec![m])
    };
    let qvar = RatFun::var(Var::q());
    let scale = RatFun::new(one_minus_qt(0, 1), one_minus_qt(1, 0));
    let rhs = h_n(m, m)
        .pleth(&Alphabet::x_times(scale))
        .scale(&pochhammer(&qvar, m));
    macdonald_j(&row) == rhs
}

/// J_lambda[(1-v)/(1-t)] = prod over cells (t^{coleg} - v q^{coarm}).
pub fn check_pleth_spec(lam: &Partition) -> bool {
    let v = RatFun::var(Var::v(1));
    let z = &(&RatFun::one() - &v) / &RatFun::from_poly(one_minus_qt(0, 1));
    let f = macdonald_j(lam).pleth(&Alphabet::scalar(z));
    let lhs = f.coeff(&Partition::empty());
    if f != SymFun::constant(lhs.clone(), lam.size()) {
        return false;
    }
    let mut rhs = RatFun::one();
    for (r, c) in lam.cells() {
        let s = lam.cell_stats(r, c);
        let term = &qt_monomial(0, s.coleg as i64)
            - &(&v * &qt_monomial(s.coarm as i64, 0));
        rhs = &rhs * &term;
    }
    lhs == rhs
}

/// J_lambda[1] = (t;q)_m for a single row of size m, and 0 for two or more rows.
pub fn check_j_at_one(lam: &Partition) -> bool {
    let f = macdonald_j(lam).pleth(&Alphabet::scalar(RatFun::one()));
    let val = f.coeff(&Partition::empty());
    if f != SymFun::constant(val.clone(), lam.size()) {
        return false;
    }
    if lam.parts().len() >= 2 {
        val.is_zero()
    } else {
        let tvar = RatFun::var(Var::t());
        val == pochhammer(&tvar, lam.size())
    }
}

/// Cauchy kernel in degree m: sum_{lam |- m} J_lam (x) J_lam / j_lam equals
/// sum_{mu |- m} p_mu (x) p_mu / z_mu(q,t), compared in p (x) p coordinates.
pub fn check_cauchy(m: u32) -> bool {
    let mut lhs: BTreeMap<(Partition, Partition), RatFun> = BTreeMap::new();
    for lam in Partition::enumerate(m) {
        let j = macdonald_j(&lam);
        let inv = &RatFun::one() / &lam.j_norm();
        for (mu, cx) in j.terms() {
            for (nu, cy) in j.terms() {
                let add = &(cx * cy) * &inv;
                let e = lhs.entry((mu.clone(), nu.clone())).or_insert_with(RatFun::zero);
                *e = &*e + &add;
            }
        }
    }
    lhs.retain(|_, c| !c.is_zero());
    let mut rhs: BTreeMap<(Partition, Partition), RatFun> = BTreeMap::new();
    for mu in Partition::enumerate(m) {
        let inv = &RatFun::one() / &mu.z_qt();
        rhs.insert((mu.clone(), mu), inv);
    }
    lhs == rhs
}

/// The product h_k[X(1-t)/(1-q)] J_lambda (integral side) or h_k[X/(1-q)]
/// H-tilde_lambda (modified side) is supported exactly on the horizontal
/// strips of size k over lambda.
pub fn check_pieri_support(lam: &Partition, k: u32, side: Side) -> bool {
    let deg = lam.size() + k;
    let (base, hk) = match side {
        Side::Integral => {
            let scale = RatFun::new(one_minus_qt(0, 1), one_minus_qt(1, 0));
            (
                macdonald_j(lam).with_degree(deg),
                h_n(k, deg).pleth(&Alphabet::x_times(scale)),
            )
        }
        Side::Modified => {
            let scale = RatFun::new(MultiPoly::one(), one_minus_qt(1, 0));
            (
                modified_h(lam).with_degree(deg),
                h_n(k, deg).pleth(&Alphabet::x_times(scale)),
            )
        }
    };
    let prod = &hk * &base;
    let support: BTreeSet<Partition> = match side {
        Side::Integral => expand_j(&prod).into_keys().collect(),
        Side::Modified => expand_h(&prod).into_keys().collect(),
    };
    let strips: BTreeSet<Partition> = lam.horizontal_strips(k).into_iter().collect();
    support == strips
}

/// The five-term relation, tested on H-tilde_lambda truncated at `cap`:
/// nabla P_{u/M} nabla^{-1} P_{uv/M} = Delta_{1/v} P_{uv/M} Delta_{1/v}^{-1}.
pub fn check_five_term(lam: &Partition, cap: u32) -> bool {
    let f = modified_h(lam).with_degree(cap);
    let u = RatFun::var(Var::u());
    let v = RatFun::var(Var::v(1));
    let vinv = v.inverse().expect("v is a unit");
    let m = m_qt();
    let uv_m = &(&u * &v) / &m;
    let u_m = &u / &m;
    let side = Side::Modified;

    let lhs = mult_pexp(&f, &uv_m);
    let lhs = nabla_inv(&lhs, side).expect("nabla^{-1}");
    let lhs = mult_pexp(&lhs, &u_m);
    let lhs = nabla(&lhs, side).expect("nabla");

    let rhs = delta_v_inv(&f, &vinv, side).expect("delta^{-1}");
    let rhs = mult_pexp(&rhs, &uv_m);
    let rhs = delta_v(&rhs, &vinv, side).expect("delta");

    lhs == rhs
}

/// The reproducing-kernel identity
/// nabla P_{-u/M} T_{1/u} H-tilde_lambda[uX] = Exp[-u X D_lambda / M].
pub fn check_tesler(lam: &Partition) -> bool {
    let cap = lam.size();
    let u = RatFun::var(Var::u());
    let uinv = u.inverse().expect("u is a unit");
    let m = m_qt();
    let f = modified_h(lam).pleth(&Alphabet::x_times(u.clone()));
    let f = translate(&f, &uinv);
    let f = mult_pexp(&f, &(&(-&u) / &m));
    let lhs = nabla(&f, Side::Modified).expect("nabla");
    let z = &(&(-&u) * &d_stat(lam)) / &m;
    let rhs = exp_kernel(&z, cap);
    lhs == rhs
}

/// Gamma(u, v) on the modified side equals
/// nabla P_{u/M} nabla^{-1} P_{uv/(1-q)} nabla P_{-tu/M} nabla^{-1}.
pub fn check_gamma_rewrite(lam: &Partition, cap: u32) -> bool {
    let f = modified_h(lam).with_degree(cap);
    let u = RatFun::var(Var::u());
    let v = RatFun::var(Var::v(1));
    let m = m_qt();
    let side = Side::Modified;

    let lhs = gamma_raw(&f, &v, &RatFun::one(), side).expect("gamma");

    let tu_m = &(&RatFun::from_poly(MultiPoly::var(Var::t())) * &u) / &m;
    let uv_q = &(&u * &v) / &RatFun::from_poly(one_minus_qt(1, 0));
    let rhs = nabla_inv(&f, side).expect("nabla^{-1}");
    let rhs = mult_pexp(&rhs, &(-&tu_m));
    let rhs = nabla(&rhs, side).expect("nabla");
    let rhs = mult_pexp(&rhs, &uv_q);
    let rhs = nabla_inv(&rhs, side).expect("nabla^{-1}");
    let rhs = mult_pexp(&rhs, &(&u / &m));
    let rhs = nabla(&rhs, side).expect("nabla");

    lhs == rhs
}

/// phi^{-1} P_{u t^i/(1-q)} phi = P_{t^{-i}(1-t)u/(1-q)}  and
/// phi^{-1} T_Z phi = T_{Z/(1-t)}, tested on the given input.
pub fn check_phi_conjugation(f: &SymFun, i: i64) -> bool {
    let u = RatFun::var(Var::u());
    let one_q = RatFun::from_poly(one_minus_qt(1, 0));
    let one_t = RatFun::from_poly(one_minus_qt(0, 1));

    let z_in = &(&u * &qt_monomial(0, i)) / &one_q;
    let z_out = &(&(&u * &qt_monomial(0, -i)) * &one_t) / &one_q;
    let lhs = phi_inv(&mult_pexp(&phi(f), &z_in));
    let rhs = mult_pexp(f, &z_out);
    if lhs != rhs {
        return false;
    }

    let z = RatFun::var(Var::z());
    let lhs = phi_inv(&translate(&phi(f), &z));
    let rhs = translate(f, &(&z / &one_t));
    lhs == rhs
}

/// A deterministic family of inhomogeneous power-sum combinations of top
/// degree `deg`, used as generic operator inputs.
pub fn sample_inputs(deg: u32) -> Vec<SymFun> {
    let mut out = Vec::new();
    for (k, lam) in Partition::enumerate_up_to(deg).into_iter().enumerate() {
        let c = &RatFun::from_int(k as i64 + 1) + &qt_monomial(1, -1);
        let mut f = SymFun::p(lam, deg).scale(&c);
        f = &f + &SymFun::one(deg);
        out.push(f);
    }
    out
}

/// Run every operator and basis identity up to `max_size`, returning
/// (label, passed) pairs. Sizes follow the per-identity budgets: basis facts
/// up to max_size, Cauchy up to max_size - 1, operator relations up to
/// min(max_size, 4).
pub fn identity_suite(max_size: u32) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let op_cap = max_size.min(4);

    let mut tri = true;
    let mut orth = true;
    let mut pleth = true;
    let mut at_one = true;
    for n in 0..=max_size {
        let parts = Partition::enumerate(n);
        for lam in &parts {
            tri &= check_triangularity(lam);
            pleth &= check_pleth_spec(lam);
            at_one &= check_j_at_one(lam);
            for rho in &parts {
                orth &= check_orthogonality(lam, rho);
            }
        }
    }
    out.push(("triangularity".to_string(), tri));
    out.push(("orthogonality".to_string(), orth));
    out.push((
        "row-formula".to_string(),
        (0..=max_size).all(check_row_formula),
    ));
    out.push(("plethystic-specialization".to_string(), pleth));
    out.push(("evaluation-at-one".to_string(), at_one));
    out.push((
        "cauchy".to_string(),
        (0..=max_size.saturating_sub(1)).all(check_cauchy),
    ));

    let mut pieri = true;
    for n in 0..=max_size.saturating_sub(1) {
        for lam in Partition::enumerate(n) {
            for k in 1..=(max_size - n) {
                pieri &= check_pieri_support(&lam, k, Side::Integral);
                pieri &= check_pieri_support(&lam, k, Side::Modified);
            }
        }
    }
    out.push(("pieri-support".to_string(), pieri));

    let mut five = true;
    let mut tesler = true;
    let mut rewrite = true;
    for n in 0..=op_cap {
        let cap = (n + 2).min(5);
        for lam in Partition::enumerate(n) {
            five &= check_five_term(&lam, cap);
            tesler &= check_tesler(&lam);
            rewrite &= check_gamma_rewrite(&lam, cap);
        }
    }
    out.push(("five-term".to_string(), five));
    out.push(("tesler".to_string(), tesler));
    out.push(("gamma-rewrite".to_string(), rewrite));

    let mut phi_ok = true;
    for f in sample_inputs(op_cap) {
        for i in -2..=2 {
            phi_ok &= check_phi_conjugation(&f, i);
        }
    }
    out.push(("phi-conjugation".to_string(), phi_ok));

    let mut creation = true;
    for n in 0..=max_size.min(5) {
        for lam in Partition::enumerate(n) {
            for variant in [
                CreationVariant::Thm1Integral,
                CreationVariant::Thm2Integral,
                CreationVariant::Thm1Modified,
                CreationVariant::Thm2Modified,
            ] {
                creation &= creation_chain(&lam, variant)
                    .map(|c| c.equal)
                    .unwrap_or(false);
            }
        }
    }
    out.push(("creation-chains".to_string(), creation));

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::big;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn tmp_cache() -> tempdir::Guard {
        tempdir::set()
    }

    mod tempdir {
        use std::sync::{Mutex, MutexGuard, OnceLock};

        static LOCK: OnceLock<Mutex<()>> = OnceLock::new();

        pub struct Guard(#[allow(dead_code)] MutexGuard<'static, ()>);

        // Tests touching the disk cache share one temp dir and serialize.
        pub fn set() -> Guard {
            let guard = LOCK
                .get_or_init(|| Mutex::new(()))
                .lock()
                .unwrap_or_else(|e| e.into_inner());
            let dir = std::env::temp_dir().join("maclab-test-cache");
            std::env::set_var("MACLAB_CACHE", &dir);
            Guard(guard)
        }
    }

    #[test]
    fn j_small_examples() {
        let _g = tmp_cache();
        // J_[1] = (1-t) p_1
        let j1 = macdonald_j(&pt(&[1]));
        let expect = SymFun::p(pt(&[1]), 1).scale(&RatFun::from_poly(one_minus_qt(0, 1)));
        assert_eq!(j1, expect);
        // J_[2] = (1-t)(1-qt) m_2 + (1+q)(1-t)^2 m_11
        let j2 = macdonald_j(&pt(&[2]));
        let m = j2.convert(Basis::M);
        let c2 = RatFun::from_poly(&one_minus_qt(0, 1) * &one_minus_qt(1, 1));
        let one_plus_q = &MultiPoly::one() + &MultiPoly::var(Var::q());
        let c11 = RatFun::from_poly(&one_plus_q * &one_minus_qt(0, 1).pow(2));
        assert_eq!(m[&pt(&[2])], c2);
        assert_eq!(m[&pt(&[1, 1])], c11);
        // computed norm matches the product formula independently
        assert_eq!(j_norm_computed(&pt(&[2])), pt(&[2]).j_norm());
    }

    #[test]
    fn modified_h_small_examples() {
        let _g = tmp_cache();
        assert_eq!(modified_h(&pt(&[1])), SymFun::p(pt(&[1]), 1));
        let h2 = modified_h(&pt(&[2]));
        let half = RatFun::from_rational(big(1) / big(2));
        let q = RatFun::var(Var::q());
        assert_eq!(h2.coeff(&pt(&[1, 1])), &half * &(&RatFun::one() + &q));
        assert_eq!(h2.coeff(&pt(&[2])), &half * &(&RatFun::one() - &q));
        // cross-check: H-tilde_[2] = s_2 + q s_11
        let s = h2.convert(Basis::S);
        assert_eq!(s[&pt(&[2])], RatFun::one());
        assert_eq!(s[&pt(&[1, 1])], q);
    }

    #[test]
    fn phi_inverse_pair() {
        let f = &SymFun::p(pt(&[2, 1]), 4).scale(&RatFun::var(Var::t()))
            + &SymFun::p(pt(&[1, 1]), 4).scale(&RatFun::new(
                MultiPoly::one(),
                one_minus_qt(0, 1),
            ));
        assert_eq!(phi_inv(&phi(&f)), f);
        assert_eq!(phi(&phi_inv(&f)), f);
    }

    #[test]
    fn nabla_and_delta_eigenvalues() {
        let _g = tmp_cache();
        // nabla J_[2] = q J_[2]
        assert_eq!(nabla_eig(&pt(&[2]), Side::Integral), RatFun::var(Var::q()));
        let j2 = macdonald_j(&pt(&[2]));
        assert_eq!(
            nabla(&j2, Side::Integral).unwrap(),
            j2.scale(&RatFun::var(Var::q()))
        );
        // Delta_v J_[1,1] = (1-v)(1-v/t) J_[1,1]
        let v = RatFun::var(Var::z());
        let expect = &(&RatFun::one() - &v)
            * &(&RatFun::one() - &(&v * &qt_monomial(0, -1)));
        assert_eq!(delta_eig(&pt(&[1, 1]), &v, Side::Integral), expect);
        // nabla(1) = 1
        let one = SymFun::one(0);
        assert_eq!(nabla(&one, Side::Integral).unwrap(), one);
        assert_eq!(nabla(&one, Side::Modified).unwrap(), one);
        // inverses really invert
        let f = SymFun::p(pt(&[2, 1]), 3);
        for side in [Side::Integral, Side::Modified] {
            assert_eq!(nabla_inv(&nabla(&f, side).unwrap(), side).unwrap(), f);
            assert_eq!(
                delta_v_inv(&delta_v(&f, &v, side).unwrap(), &v, side).unwrap(),
                f
            );
        }
    }

    #[test]
    fn pexp_and_translate() {
        let p1 = SymFun::p(pt(&[1]), 3);
        let z = RatFun::var(Var::z());
        // T_Z p_1 = p_1 + Z
        assert_eq!(
            translate(&p1, &z),
            &p1 + &SymFun::constant(z.clone(), 3)
        );
        // P_0 f = f
        let f = SymFun::p(pt(&[2, 1]), 3);
        assert_eq!(mult_pexp(&f, &RatFun::zero()), f);
        // P_{Z+Z'} = P_Z P_{Z'}
        let z2 = RatFun::var(Var::u());
        assert_eq!(
            mult_pexp(&f, &(&z + &z2)),
            mult_pexp(&mult_pexp(&f, &z), &z2)
        );
    }

    #[test]
    fn gamma_constant_term_and_creation_operator() {
        let _g = tmp_cache();
        // [u^0] Gamma(u,v) . 1 = 1
        let v = RatFun::var(Var::v(1));
        for side in [Side::Integral, Side::Modified] {
            let g = gamma(&SymFun::one(2), &v, &RatFun::one(), side).unwrap();
            assert_eq!(g.coeff(0), SymFun::one(2));
        }
        // Gamma+_1 . 1 = J_[1] on the integral side, H-tilde_[1] modified
        let one = SymFun::one(1);
        assert_eq!(
            gamma_plus(1, &one, Side::Integral).unwrap(),
            macdonald_j(&pt(&[1]))
        );
        assert_eq!(
            gamma_plus(1, &one, Side::Modified).unwrap(),
            modified_h(&pt(&[1]))
        );
        // Gamma+_0 . 1 = 1
        assert_eq!(gamma_plus(0, &SymFun::one(0), Side::Integral).unwrap(), SymFun::one(0));
    }

    #[test]
    fn stability_vanishing() {
        let _g = tmp_cache();
        // lambda_1 <= s and k > s kill [u^k] Gamma(u, q^s) on the modified side
        for (s, lam) in [(1u32, pt(&[1])), (1, pt(&[1, 1])), (2, pt(&[2, 1]))] {
            let h = modified_h(&lam).with_degree(lam.size() + s + 1);
            let g = gamma(&h, &qt_monomial(s as i64, 0), &RatFun::one(), Side::Modified)
                .unwrap();
            for k in (s + 1) as usize..g.by_u.len() {
                assert!(g.by_u[k].is_zero(), "s={s} lam={lam} k={k}");
            }
        }
    }

    #[test]
    fn creation_chains_small() {
        let _g = tmp_cache();
        for variant in [
            CreationVariant::Thm1Integral,
            CreationVariant::Thm2Integral,
            CreationVariant::Thm1Modified,
            CreationVariant::Thm2Modified,
        ] {
            for lam in [Partition::empty(), pt(&[1]), pt(&[2, 1])] {
                let cert = creation_chain(&lam, variant).unwrap();
                assert!(cert.equal, "variant={variant:?} lam={lam}");
            }
        }
    }

    #[test]
    fn super_nabla_single_box() {
        let _g = tmp_cache();
        let table = super_nabla_pair(&pt(&[1]));
        assert_eq!(table.len(), 1);
        assert_eq!(table[&(pt(&[1]), pt(&[1]))], RatFun::one());
    }

    #[test]
    fn b_and_d_statistics() {
        // B_lambda agrees with the cell sum
        for lam in Partition::enumerate_up_to(5) {
            let mut cell_sum = RatFun::zero();
            for (r, c) in lam.cells() {
                let s = lam.cell_stats(r, c);
                cell_sum = &cell_sum + &qt_monomial(s.coarm as i64, s.coleg as i64);
            }
            assert_eq!(b_stat(&lam), cell_sum, "{lam}");
        }
        assert_eq!(d_stat(&Partition::empty()), -&RatFun::one());
    }

    #[test]
    fn disk_cache_round_trip() {
        let _g = tmp_cache();
        let before = macdonald_j(&pt(&[2, 1]));
        let norm = j_norm_computed(&pt(&[2, 1]));
        CACHE.write().unwrap().remove(&3);
        let loaded = load_degree(3).expect("degree 3 saved on first computation");
        assert_eq!(loaded.j[&pt(&[2, 1])], before);
        assert_eq!(loaded.norm[&pt(&[2, 1])], norm);
    }
}
