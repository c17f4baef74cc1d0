use num_traits::{One, Zero};
use proptest::prelude::*;

use rhp_core::families::{
    construct, gegenbauer_explicit, hermite, rhp_explicit, route_poly, routes, FamilyId,
    FamilyKind, MomentSequence, Normalization,
};
use rhp_core::identities::{
    check_derivative, check_hermite_addition, check_nagel, check_rhp_addition, check_scaling,
};
use rhp_core::numeric::{factorial, int, pochhammer, powu, rat, ParamN, Rational};
use rhp_core::turan::{moment_hankel_determinant, wilks_expectation};

/// Nonzero rationals with small numerator and denominator.
fn big_n() -> impl Strategy<Value = ParamN> {
    (-24i64..=24, 1i64..=6)
        .prop_filter("nonzero", |(p, _)| *p != 0)
        .prop_map(|(p, q)| ParamN::new(rat(p, q)).unwrap())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

fn has_pole(n: usize, b: &ParamN) -> bool {
    pochhammer(&(b.value() * int(2)), n).is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn members_have_parity_of_degree(n in 0usize..10, b in big_n()) {
        prop_assert!(hermite(n).has_parity(n));
        prop_assert!(gegenbauer_explicit(n, &b).has_parity(n));
        if let Ok(p) = rhp_explicit(n, &b) {
            prop_assert!(p.has_parity(n));
        }
    }

    #[test]
    fn hermite_leading_coefficient(n in 0usize..14) {
        let h = hermite(n);
        prop_assert_eq!(h.degree(), Some(n));
        prop_assert_eq!(h.leading(), powu(&int(2), n as u64));
    }

    #[test]
    fn gegenbauer_leading_coefficient(n in 0usize..10, b in big_n()) {
        let c = gegenbauer_explicit(n, &b);
        let want = powu(&int(2), n as u64) * pochhammer(b.value(), n) / factorial(n);
        prop_assert_eq!(c.coeff(n), want.clone());
        prop_assert!(c.degree().unwrap_or(0) <= n);
        if !want.is_zero() {
            prop_assert_eq!(c.degree(), Some(n));
        }
    }

    #[test]
    fn normalized_rhp_is_monic(n in 0usize..9, b in big_n()) {
        prop_assume!(!has_pole(n, &b));
        let p = construct(&FamilyId::rhp(n, b, Normalization::PaperNormalized)).unwrap();
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert!(p.leading().is_one());
    }

    #[test]
    fn normalized_gegenbauer_is_one_at_one(n in 0usize..9, b in big_n()) {
        // n!/(2N)_n · C_n^N(1) = 1
        prop_assume!(!has_pole(n, &b));
        let p = construct(&FamilyId::gegenbauer(n, b, Normalization::PaperNormalized)).unwrap();
        prop_assert!(p.eval(&int(1)).is_one());
    }

    #[test]
    fn routes_agree(n in 0usize..7, b in big_n()) {
        for kind in [FamilyKind::Hermite, FamilyKind::Gegenbauer, FamilyKind::Rhp] {
            let param = (kind != FamilyKind::Hermite).then_some(&b);
            let built: Vec<_> = routes(kind)
                .iter()
                .filter_map(|&r| route_poly(kind, n, param, r).ok())
                .collect();
            for p in &built[1..] {
                prop_assert_eq!(p, &built[0]);
            }
        }
    }

    #[test]
    fn identities_never_fail(n in 0usize..7, b in big_n(), c in small_rational()) {
        for r in [
            check_nagel(n, &b),
            check_rhp_addition(n, &b),
            check_derivative(FamilyKind::Rhp, n, Some(&b)),
            check_derivative(FamilyKind::Gegenbauer, n, Some(&b)),
            check_scaling(FamilyKind::Hermite, n, None, &c),
            check_scaling(FamilyKind::Gegenbauer, n, Some(&b), &c),
        ] {
            prop_assert!(!r.failed(), "{} {:?}: {}", r.name, r.params, r.notes);
        }
    }

    #[test]
    fn hermite_addition_for_any_weights(
        n in 0usize..5,
        a in proptest::collection::vec(small_rational(), 1..=3),
    ) {
        prop_assume!(a.iter().any(|x| !x.is_zero()));
        let r = check_hermite_addition(n, &a);
        prop_assert!(r.passed, "{:?}: {}", r.params, r.notes);
    }

    #[test]
    fn wilks_matches_moment_hankel(n in 0usize..3, b in big_n(), shape in small_rational()) {
        let mut laws = vec![MomentSequence::GaussianHalf, MomentSequence::GammaShape(shape)];
        if !(b.value() + rat(1, 2)).is_zero() && b.value() > &int(-2) {
            laws.push(MomentSequence::StudentR(b.value().clone()));
        }
        for law in laws {
            let (Ok(w), Ok(h)) = (wilks_expectation(n, &law), moment_hankel_determinant(n, &law))
            else {
                continue;
            };
            prop_assert_eq!(&w.plain, &h);
            let sign = if (n * (n + 1) / 2) % 2 == 0 { int(1) } else { int(-1) };
            prop_assert_eq!(w.signed, sign * h);
        }
    }
}

#[test]
fn point_mass_hankel_is_singular() {
    let law = MomentSequence::PointMass(rat(3, 2));
    assert_eq!(moment_hankel_determinant(0, &law).unwrap(), int(1));
    for n in 1..=3 {
        assert!(moment_hankel_determinant(n, &law).unwrap().is_zero());
        assert!(wilks_expectation(n, &law).unwrap().plain.is_zero());
    }
}
