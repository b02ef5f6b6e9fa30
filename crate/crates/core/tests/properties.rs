use binform_core::covariants::generic_form;
use binform_core::evectants::evectant_sequence;
use binform_core::forms::{gordan_series, transvectant, Form, Pair};
use binform_core::linalg::{sylvester_resultant, wronskian};
use binform_core::ring::{Monomial, Poly, Rational, Var};
use proptest::prelude::*;

const VARS: [Var; 4] = [Var::X1, Var::X2, Var::Q0, Var::Q1];

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::array::uniform4(0u32..3), rational()), 0..5).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(e, c)| {
            let pairs: Vec<(Var, u32)> = VARS.iter().copied().zip(e).collect();
            (Monomial::from_pairs(&pairs), c)
        }))
    })
}

fn form(order: u32) -> impl Strategy<Value = Form> {
    prop::collection::vec(-4i64..=4, order as usize + 1)
        .prop_map(|c| Form::from_coeffs(c.into_iter().map(Poly::int).collect(), Pair::X).unwrap())
}

fn sized_form(max: u32) -> impl Strategy<Value = Form> {
    (0..=max).prop_flat_map(form)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn derivatives_commute(a in poly()) {
        let xy = a.derivative(Var::X1, 1).derivative(Var::Q0, 2);
        let yx = a.derivative(Var::Q0, 2).derivative(Var::X1, 1);
        prop_assert_eq!(xy, yx);
    }

    #[test]
    fn leibniz_rule(a in poly(), b in poly()) {
        let lhs = (&a * &b).derivative(Var::X2, 1);
        let rhs = &(&a.derivative(Var::X2, 1) * &b) + &(&a * &b.derivative(Var::X2, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), s in poly()) {
        let bind = [(Var::Q0, s)];
        prop_assert_eq!((&a * &b).substitute(&bind), &a.substitute(&bind) * &b.substitute(&bind));
        prop_assert_eq!((&a + &b).substitute(&bind), &a.substitute(&bind) + &b.substitute(&bind));
    }

    #[test]
    fn proportional_recovers_scalars(a in poly(), c in rational()) {
        prop_assume!(!a.is_zero() && !c.is_zero());
        prop_assert_eq!(a.scale(&c).proportional(&a), Some(c));
    }

    #[test]
    fn exact_division_inverts_products(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn transvectant_is_bilinear(a in form(4), a2 in form(4), b in form(3), r in 0u32..=3, c in rational()) {
        let lhs = transvectant(&a.add(&a2.scale(&c)), &b, r);
        let rhs = transvectant(&a, &b, r).add(&transvectant(&a2, &b, r).scale(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transvectant_symmetry_and_grading(a in sized_form(5), b in sized_form(5), r in 0u32..=5) {
        let ab = transvectant(&a, &b, r);
        let ba = transvectant(&b, &a, r);
        let sign = if r % 2 == 1 { Rational::from_int(-1) } else { Rational::ONE };
        prop_assert_eq!(ab.clone(), ba.scale(&sign));
        if r <= a.order().min(b.order()) {
            prop_assert_eq!(ab.order(), a.order() + b.order() - 2 * r);
        } else {
            prop_assert!(ab.is_zero());
        }
    }

    #[test]
    fn odd_self_transvectants_vanish(a in sized_form(6), k in 0u32..=3) {
        prop_assert!(transvectant(&a, &a, 2 * k + 1).is_zero());
    }

    #[test]
    fn gordan_series_reconstructs(a in sized_form(4), b in sized_form(4)) {
        // gordan_series asserts the reconstruction internally
        let series = gordan_series(&a, &b);
        prop_assert_eq!(series.len() as u32, a.order().min(b.order()) + 1);
    }

    #[test]
    fn wronskian_alternating_and_orthogonal(fs in prop::collection::vec(form(3), 3)) {
        let w = wronskian(&fs).unwrap();
        let swapped = wronskian(&[fs[1].clone(), fs[0].clone(), fs[2].clone()]).unwrap();
        prop_assert_eq!(swapped, w.neg());
        for f in &fs {
            prop_assert!(transvectant(&w, f, 3).is_zero());
        }
    }

    #[test]
    fn resultant_swap_sign(a in form(2), b in form(3), c in form(3)) {
        // Res(A,B) = (-1)^(mn) Res(B,A)
        prop_assert_eq!(sylvester_resultant(&a, &b).unwrap(), sylvester_resultant(&b, &a).unwrap());
        prop_assert_eq!(sylvester_resultant(&b, &c).unwrap(), -&sylvester_resultant(&c, &b).unwrap());
    }

    #[test]
    fn euler_reconstruction_for_compound_transvectants(d in 3u32..=5, r1 in 0u32..=5, r2 in 0u32..=5) {
        let f = generic_form(d);
        prop_assume!(r1 <= d);
        let phi = f.transvect(&f, r1);
        prop_assume!(!phi.is_zero() && r2 <= phi.order().min(d));
        let psi = phi.transvect(&f, r2);
        prop_assume!(!psi.is_zero());
        let seq = evectant_sequence(&psi).unwrap();
        prop_assert!(seq.is_consistent());
    }
}
