//! Exact arithmetic: rationals, sparse multivariate polynomials and their
//! fraction field. All values are immutable after construction and all
//! operations are pure.

pub mod json;
pub mod multipoly;
pub mod ratfun;
pub mod vars;

pub use multipoly::{Monomial, MultiPoly};
pub use ratfun::{big, one_minus_qt, poly_substitute, qt_monomial, RatFun, ScalarError};
pub use vars::Var;

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;
    use proptest::prelude::*;

    fn q() -> MultiPoly {
        MultiPoly::var(Var::q())
    }
    fn t() -> MultiPoly {
        MultiPoly::var(Var::t())
    }
    fn one() -> MultiPoly {
        MultiPoly::one()
    }

    #[test]
    fn exact_div_examples() {
        // (q^2 - 1) / (q - 1) = q + 1
        let a = &q().pow(2) - &one();
        let b = &q() - &one();
        assert_eq!(a.exact_div(&b).unwrap(), &q() + &one());
        // (q t) / q = t
        let qt = &q() * &t();
        assert_eq!(qt.exact_div(&q()).unwrap(), t());
        // (1-q^2)(1-qt) not divisible by (1-t)
        let a = &(&one() - &q().pow(2)) * &(&one() - &(&q() * &t()));
        assert!(a.exact_div(&(&one() - &t())).is_none());
    }

    #[test]
    fn ratfun_arith_examples() {
        let f = RatFun::new(&one() - &q(), &one() - &t());
        let g = RatFun::new(&one() - &t(), &one() - &q());
        assert!((&f * &g).is_one());

        let a = RatFun::new(one(), &one() - &t());
        let b = RatFun::new(one(), &one() - &q());
        let s = &a + &b;
        let expect = RatFun::new(
            &(&MultiPoly::from_int(2) - &q()) - &t(),
            &(&one() - &t()) * &(&one() - &q()),
        );
        assert_eq!(s, expect);

        let x = RatFun::new(&one() - &q().pow(2), &one() - &t().pow(2));
        let y = RatFun::new(&one() - &q(), &one() - &t());
        let r = &x / &y;
        assert_eq!(r, RatFun::new(&one() + &q(), &one() + &t()));
    }

    #[test]
    fn substitute_alpha_gamma() {
        // (1-q)/(1-t) at q = 1 + gamma*alpha, t = 1 + gamma  ->  alpha
        let f = RatFun::new(&one() - &q(), &one() - &t());
        let mut map = std::collections::HashMap::new();
        let ga = &MultiPoly::var(Var::gamma()) * &MultiPoly::var(Var::alpha());
        map.insert(Var::q(), RatFun::from_poly(&one() + &ga));
        map.insert(
            Var::t(),
            RatFun::from_poly(&one() + &MultiPoly::var(Var::gamma())),
        );
        let r = f.substitute(&map).unwrap();
        assert_eq!(r, RatFun::var(Var::alpha()));

        // identity substitution
        let idq = RatFun::var(Var::q())
            .substitute(&std::collections::HashMap::new())
            .unwrap();
        assert_eq!(idq, RatFun::var(Var::q()));

        // pole
        let p = RatFun::new(one(), &one() - &t());
        let mut pm = std::collections::HashMap::new();
        pm.insert(Var::t(), RatFun::one());
        assert_eq!(p.substitute(&pm), Err(ScalarError::DenominatorVanishes));
    }

    #[test]
    fn as_polynomial_examples() {
        let f = RatFun::new(&one() - &q().pow(3), &one() - &q());
        let p = f.as_polynomial().unwrap();
        assert_eq!(p, &(&one() + &q()) + &q().pow(2));

        let v = Var::v(1);
        let g = RatFun::from_poly(&one() - &(&MultiPoly::var(v) * &q()));
        assert!(g.as_polynomial().is_some());

        let h = RatFun::new(one(), &one() - &MultiPoly::var(v));
        assert!(h.as_polynomial().is_none());
        assert!(h.as_polynomial_in(&[v]).is_none());

        // v/(1-t) is polynomial in v with coefficient 1/(1-t)
        let k = RatFun::new(MultiPoly::var(v), &one() - &t());
        let terms = k.as_polynomial_in(&[v]).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].1, RatFun::new(one(), &one() - &t()));
    }

    #[test]
    fn limit_cancel_examples() {
        // (1-t^2)/(1-t) -> 2 as t -> 1
        let f = RatFun::new(&one() - &t().pow(2), &one() - &t());
        assert_eq!(
            f.limit_cancel(Var::t(), &big(1)).unwrap(),
            RatFun::from_int(2)
        );
        let g = RatFun::new(one(), &one() - &t());
        assert_eq!(
            g.limit_cancel(Var::t(), &big(1)),
            Err(ScalarError::PoleAtPoint)
        );
        // gamma -> 0 of (1-q)/(1-t) under the (alpha,gamma) parametrization
        let f = RatFun::new(&one() - &q(), &one() - &t());
        let mut map = std::collections::HashMap::new();
        let ga = &MultiPoly::var(Var::gamma()) * &MultiPoly::var(Var::alpha());
        map.insert(Var::q(), RatFun::from_poly(&one() + &ga));
        map.insert(
            Var::t(),
            RatFun::from_poly(&one() + &MultiPoly::var(Var::gamma())),
        );
        let sub = f.substitute(&map).unwrap();
        let lim = sub.limit_cancel(Var::gamma(), &big(0)).unwrap();
        assert_eq!(lim, RatFun::var(Var::alpha()));
    }

    #[test]
    fn json_round_trip() {
        let f = RatFun::new(&one() - &q().pow(2), &(&one() - &t()) * &(&one() - &q()));
        let j = json::ratfun_to_json(&f);
        let g = json::ratfun_from_json(&j).unwrap();
        assert_eq!(f, g);
    }

    fn small_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3), -4i64..5), 0..5).prop_map(|terms| {
            let mut p = MultiPoly::zero();
            for ((a, b), c) in terms {
                let m = Monomial::var(Var::q(), a).mul(&Monomial::var(Var::t(), b));
                p = &p + &MultiPoly::monomial(m, big(c));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn div_after_mul_recovers(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn add_sub_cancels(a in small_poly(), b in small_poly(), d1 in small_poly(), d2 in small_poly()) {
            prop_assume!(!d1.is_zero() && !d2.is_zero());
            let x = RatFun::new(a, d1);
            let y = RatFun::new(b, d2);
            let z = &(&x + &y) - &y;
            prop_assert_eq!(z, x);
        }

        #[test]
        fn substitution_is_a_homomorphism(a in small_poly(), b in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            let x = RatFun::new(a, d.clone());
            let y = RatFun::new(b, d);
            let mut map = std::collections::HashMap::new();
            let ga = &MultiPoly::var(Var::gamma()) * &MultiPoly::var(Var::alpha());
            map.insert(Var::q(), RatFun::from_poly(&MultiPoly::one() + &ga));
            map.insert(Var::t(), RatFun::from_poly(&MultiPoly::one() + &MultiPoly::var(Var::gamma())));
            let lhs_mul = (&x * &y).substitute(&map);
            let rhs_mul = x.substitute(&map).and_then(|xs| y.substitute(&map).map(|ys| &xs * &ys));
            if let (Ok(l), Ok(r)) = (lhs_mul, rhs_mul) {
                prop_assert_eq!(l, r);
            }
            let lhs_add = (&x + &y).substitute(&map);
            let rhs_add = x.substitute(&map).and_then(|xs| y.substitute(&map).map(|ys| &xs + &ys));
            if let (Ok(l), Ok(r)) = (lhs_add, rhs_add) {
                prop_assert_eq!(l, r);
            }
        }

        #[test]
        fn as_polynomial_consistent(a in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            let f = RatFun::new(a, d);
            if let Some(p) = f.as_polynomial() {
                prop_assert_eq!(&p * &f.den(), f.num().clone());
            }
        }
    }

    #[test]
    fn display_is_one() {
        assert!(MultiPoly::one().is_one());
        assert!(RatFun::one().is_one());
        assert!(!RatFun::zero().is_one());
        assert_eq!(RatFun::one(), RatFun::from_rational(BigRational::one()));
    }
}
