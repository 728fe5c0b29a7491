//! Canonical JSON encoding of polynomials and rational functions.
//!
//! polynomial: `[{"exp": {"q": 2, "t": 1}, "coef": "3/2"}, ...]` with terms in
//! monomial order; ratfun: `{"num": poly, "den": poly}`. This encoding is the
//! unit of every certificate.

use super::multipoly::{Monomial, MultiPoly};
use super::ratfun::RatFun;
use super::vars::Var;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};
use std::str::FromStr;

pub fn poly_to_json(p: &MultiPoly) -> Value {
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let mut exp = Map::new();
        for v in m.vars() {
            exp.insert(v.name(), json!(m.exp(v)));
        }
        let coef = if c.denom().is_one() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        };
        terms.push(json!({"exp": Value::Object(exp), "coef": coef}));
    }
    Value::Array(terms)
}

pub fn poly_from_json(v: &Value) -> Option<MultiPoly> {
    let arr = v.as_array()?;
    let mut p = MultiPoly::zero();
    for term in arr {
        let exp = term.get("exp")?.as_object()?;
        let mut mono = Monomial::one();
        for (name, e) in exp {
            mono = mono.mul(&Monomial::var(Var::named(name), e.as_u64()? as u32));
        }
        let coef_str = term.get("coef")?.as_str()?;
        let coef = parse_rational(coef_str)?;
        p = &p + &MultiPoly::monomial(mono, coef);
    }
    Some(p)
}

pub fn ratfun_to_json(f: &RatFun) -> Value {
    json!({"num": poly_to_json(f.num()), "den": poly_to_json(&f.den())})
}

pub fn ratfun_from_json(v: &Value) -> Option<RatFun> {
    let num = poly_from_json(v.get("num")?)?;
    let den = poly_from_json(v.get("den")?)?;
    if den.is_zero() {
        return None;
    }
    Some(RatFun::new(num, den))
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => Some(BigRational::new(
            BigInt::from_str(n).ok()?,
            BigInt::from_str(d).ok()?,
        )),
        None => Some(BigRational::from_integer(BigInt::from_str(s).ok()?)),
    }
}
