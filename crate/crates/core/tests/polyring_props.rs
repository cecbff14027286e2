use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use whitehead::polyring::{bindings, cst, ratfunc_eq, resultant, var, LaurentPoly, Monomial, RatFunc, Var};

const VARS: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::M];

fn poly(max_terms: usize, lo: i32, hi: i32) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, prop::array::uniform4(lo..=hi)), 0..=max_terms).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(c, e)| {
            let pairs: Vec<(Var, i32)> = VARS.iter().copied().zip(e).collect();
            (Monomial::from_pairs(&pairs), c)
        }))
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    poly(8, -2, 3)
}

fn point() -> BTreeMap<Var, Complex64> {
    bindings(&[
        (Var::X, Complex64::new(0.7, 0.3)),
        (Var::Y, Complex64::new(-1.1, 0.4)),
        (Var::Z, Complex64::new(0.5, -0.9)),
        (Var::M, Complex64::new(1.3, 0.2)),
    ])
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-10 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn substitute_is_a_homomorphism(a in poly(5, -1, 2), b in poly(5, -1, 2), c in poly(5, -1, 2)) {
        let sigma = bindings(&[
            (Var::X, RatFunc::new(var(Var::Y) + cst(1), var(Var::Z) - cst(2)).unwrap()),
            (Var::M, RatFunc::from(var(Var::Y) * var(Var::Z) - var(Var::L))),
        ]);
        let lhs = (&(&a * &b) + &c).substitute(&sigma).unwrap();
        let sa = a.substitute(&sigma).unwrap();
        let sb = b.substitute(&sigma).unwrap();
        let sc = c.substitute(&sigma).unwrap();
        let rhs = &(&sa * &sb) + &sc;
        prop_assert!(ratfunc_eq(&lhs, &rhs));
    }

    #[test]
    fn evaluation_matches_substitution_by_constants(a in laurent(), vals in prop::array::uniform4(prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]))) {
        let consts: Vec<(Var, RatFunc)> = VARS.iter().copied().zip(vals).map(|(v, c)| (v, RatFunc::from(cst(c)))).collect();
        let substituted = a.substitute(&bindings(&consts)).unwrap();
        let pt: Vec<(Var, Complex64)> = VARS.iter().copied().zip(vals).map(|(v, c)| (v, Complex64::new(c as f64, 0.0))).collect();
        let direct = a.eval_at(&pt).unwrap();
        let via = substituted.eval_complex(&BTreeMap::new()).unwrap();
        prop_assert!(close(direct, via), "{} vs {}", direct, via);
    }

    #[test]
    fn evaluation_is_multiplicative(a in laurent(), b in laurent()) {
        let pt = point();
        let ab = (&a * &b).eval_complex(&pt).unwrap();
        let prod = a.eval_complex(&pt).unwrap() * b.eval_complex(&pt).unwrap();
        prop_assert!(close(ab, prod));
    }

    #[test]
    fn resultant_vanishes_at_common_root(
        p in poly(5, 0, 3),
        r in poly(5, 0, 3),
        x0 in -2i64..=2,
        z0 in -2i64..=2,
    ) {
        // shift constants so that z0 is a common root at x = x0
        let at = |q: &LaurentPoly| {
            let v = q.eval_at(&[(Var::X, Complex64::new(x0 as f64, 0.0)), (Var::Y, Complex64::new(1.0, 0.0)),
                                (Var::Z, Complex64::new(z0 as f64, 0.0)), (Var::M, Complex64::new(1.0, 0.0))]).unwrap();
            cst(v.re.round() as i64)
        };
        let p = &(&p - &at(&p)) + &(var(Var::Z) - cst(z0));
        let r = &(&r - &at(&r)) + &(var(Var::Z) - cst(z0)).pow(2);
        prop_assume!(p.degree_in(Var::Z).unwrap_or(0) > 0 || r.degree_in(Var::Z).unwrap_or(0) > 0);
        let res = resultant(&p, &r, Var::Z).unwrap();
        let pt = [(Var::X, Complex64::new(x0 as f64, 0.0)), (Var::Y, Complex64::new(1.0, 0.0)), (Var::M, Complex64::new(1.0, 0.0))];
        let scale: f64 = res.terms().map(|(_, c)| c.to_f64().unwrap().abs()).sum::<f64>().max(1.0);
        prop_assert!(res.eval_at(&pt).unwrap().norm() / scale < 1e-8);
    }

    #[test]
    fn primitive_part_is_idempotent(a in laurent()) {
        prop_assume!(!a.is_zero());
        let p = a.primitive_part().unwrap();
        prop_assert_eq!(p.primitive_part().unwrap(), p.clone());
        prop_assert_eq!(p.content(), 1.into());
    }

    #[test]
    fn json_roundtrip(a in laurent()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_division_recovers_factor(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }
}
