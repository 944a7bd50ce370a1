use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use ordinal_lab::digits::{code_of, decode_digits, encode_digits};
use ordinal_lab::hierarchy::{fund_seq_at, hierarchy_eval, meshes, step_down, Budget, EvalOutcome, StepDown};
use ordinal_lab::oracle::{fgh_small, SmallOrdinal};
use ordinal_lab::ordinal::{add, compare, mul_nat, omega_stack, Kind, Ordinal, Term};
use ordinal_lab::ramsey::{find_bad_coloring, find_witness, is_homogeneous, is_large, BadColoring, Coloring};
use ordinal_lab::slow::{cantor_pair, cantor_unpair};
use ordinal_lab::{parse, render, SuccessorBase};

fn ordinal() -> impl Strategy<Value = Ordinal> {
    let leaf = (0u32..4).prop_map(Ordinal::from);
    leaf.prop_recursive(3, 24, 3, |inner| {
        prop::collection::vec((inner, 1u32..6), 0..4).prop_map(|parts| {
            let mut parts: Vec<(Ordinal, u32)> = parts;
            parts.sort_by(|a, b| compare(&b.0, &a.0));
            parts.dedup_by(|a, b| a.0 == b.0);
            let terms = parts
                .into_iter()
                .map(|(exponent, c)| Term {
                    exponent,
                    coefficient: c.into(),
                })
                .collect();
            Ordinal::from_terms(terms).unwrap()
        })
    })
}

fn coloring(max_n: usize, max_ground: usize, max_k: usize) -> impl Strategy<Value = Coloring> {
    (1..=max_n, 0..=max_ground, 1..=max_k).prop_flat_map(|(n, ground, k)| {
        let len = ordinal_lab::ramsey::binomial(ground, n);
        prop::collection::vec(0..k as u8, len).prop_map(move |colors| Coloring::new(n, ground, k, colors).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn order_is_total_and_consistent(a in ordinal(), b in ordinal()) {
        prop_assert_eq!(compare(&a, &b), compare(&b, &a).reverse());
        prop_assert_eq!(compare(&a, &b) == std::cmp::Ordering::Equal, a == b);
    }

    #[test]
    fn addition_is_associative(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
    }

    #[test]
    fn addition_is_monotone_on_the_right(a in ordinal(), b in ordinal(), c in ordinal()) {
        if b < c {
            prop_assert!(add(&a, &b) < add(&a, &c));
        }
        prop_assert!(add(&a, &b) >= a);
    }

    #[test]
    fn scaling_is_repeated_addition(a in ordinal(), k in 0u32..6) {
        let mut sum = Ordinal::zero();
        for _ in 0..k {
            sum = add(&sum, &a);
        }
        prop_assert_eq!(mul_nat(&a, &BigUint::from(k)), sum);
    }

    #[test]
    fn text_round_trips(a in ordinal()) {
        prop_assert_eq!(parse(&render(&a)).unwrap(), a);
    }

    #[test]
    fn digits_round_trip(a in ordinal()) {
        let d = encode_digits(&a);
        prop_assert_eq!(decode_digits(&d).unwrap(), a);
    }

    #[test]
    fn code_bound_holds(a in ordinal(), n in 0usize..5) {
        let lhs = code_of(&omega_stack(n, &a));
        let rhs = num_traits::pow(BigUint::from(4u32), 3 * n + 1) * (code_of(&a) + 1u32);
        prop_assert!(lhs <= rhs, "w_{}^({}) violates the bound", n, a);
    }

    #[test]
    fn fundamental_sequences_descend(a in ordinal(), n in 0u64..8) {
        let f = fund_seq_at(&a, n);
        prop_assert!(f.validate().is_ok());
        match a.kind() {
            Kind::Zero => prop_assert!(f.is_zero()),
            Kind::Successor => prop_assert_eq!(f.successor(), a),
            Kind::Limit => {
                prop_assert!(f < a);
                prop_assert!(f < fund_seq_at(&a, n + 1));
            }
        }
    }

    #[test]
    fn meshing_commutes_with_fundamental_sequences(b in ordinal(), a in ordinal(), n in 0u64..6) {
        if a.kind() == Kind::Limit && meshes(&b, &a) {
            prop_assert_eq!(fund_seq_at(&add(&b, &a), n), add(&b, &fund_seq_at(&a, n)));
        }
    }

    #[test]
    fn step_down_paths_verify(a in ordinal(), n in 0u64..3) {
        let nb = BigUint::from(n);
        if let StepDown::Path(p) = step_down(&a, &nb, &Ordinal::zero(), 5_000) {
            prop_assert!(p.verify());
            prop_assert!(p.ordinals.windows(2).all(|w| w[1] < w[0]));
        }
    }

    #[test]
    fn pairing_round_trips(x in any::<u128>(), y in any::<u128>()) {
        let (x, y) = (BigUint::from(x), BigUint::from(y));
        prop_assert_eq!(cantor_unpair(&cantor_pair(&x, &y)), (x, y));
    }

    #[test]
    fn budgets_never_lie(w in 0u64..3, u in 0u64..4, x in 0u128..8, bits in 1u64..140, steps in 1u64..2000) {
        let alpha = SmallOrdinal::new(w, u);
        if let Some(want) = fgh_small(alpha, x) {
            let a = parse(&alpha.text()).unwrap();
            let got = hierarchy_eval(&SuccessorBase, &a, &BigUint::one(), &BigUint::from(x), Budget::new(bits, steps));
            let want = BigUint::from(want);
            match got {
                EvalOutcome::Value(v) => prop_assert_eq!(v, want),
                EvalOutcome::Exceeded { lower_bound } => prop_assert!(lower_bound <= want),
                EvalOutcome::StepLimit => {}
            }
        }
    }

    #[test]
    fn witnesses_are_large_and_homogeneous(c in coloring(3, 7, 3), m in 0usize..5) {
        if let Some(y) = find_witness(&c, m) {
            prop_assert!(is_large(&y));
            prop_assert!(is_homogeneous(&c, &y));
            prop_assert!(y.len() >= m.max(1));
        }
    }

    #[test]
    fn counterexamples_have_no_witness(k in 1usize..4, m in 0usize..5, n in 1usize..3, ground in 0usize..7) {
        let report = find_bad_coloring(k, m, n, ground, 1_000_000).unwrap();
        if let BadColoring::Found { coloring } = report.result {
            prop_assert!(find_witness(&coloring, m).is_none());
        }
    }

    #[test]
    fn search_is_deterministic(k in 1usize..4, m in 0usize..5, n in 1usize..3, ground in 0usize..7) {
        let a = find_bad_coloring(k, m, n, ground, 1_000_000).unwrap();
        let b = find_bad_coloring(k, m, n, ground, 1_000_000).unwrap();
        prop_assert_eq!(a, b);
    }
}
