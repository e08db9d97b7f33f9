use eulerian_forge::algebra::{BigInt, BinomRat, Poly};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-99i64..=99, 0..=13).prop_map(|c| Poly::from_i64s(&c))
}

fn binom_rat() -> impl Strategy<Value = BinomRat> {
    (prop::collection::vec(-99i64..=99, 0..=7), 0u32..=8)
        .prop_map(|(c, p)| BinomRat::new(Poly::from_i64s(&c), p))
}

proptest! {
    #[test]
    fn mul_is_commutative_and_associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mul_distributes_over_add(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn mul_degree_adds(a in poly(), b in poly()) {
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn series_of_derivative_is_termwise_derivative(r in binom_rat(), len in 0usize..=15) {
        let direct = r.derivative().series(len);
        let termwise: Vec<BigInt> = r
            .series(len + 1)
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * i)
            .collect();
        prop_assert_eq!(direct, termwise);
    }

    #[test]
    fn canonicalization_is_idempotent(c in prop::collection::vec(-99i64..=99, 0..=7), p in 0u32..=8, extra in 0u32..=4) {
        // deliberately pad with (1 - t) factors
        let padded = &Poly::from_i64s(&c) * &Poly::one_minus_t_pow(extra);
        let once = BinomRat::new(padded, p + extra);
        let twice = BinomRat::new(once.num().clone(), once.pow());
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once, BinomRat::new(Poly::from_i64s(&c), p));
    }

    #[test]
    fn field_equality_agrees_with_cross_multiplication(a in binom_rat(), b in binom_rat()) {
        prop_assert_eq!(a == b, a.cross_eq(&b));
        prop_assert!(a.cross_eq(&a.mul_one_minus_t_pow(2).mul_one_minus_t_pow(-2)));
    }

    #[test]
    fn series_of_product_is_cauchy_product(a in binom_rat(), b in binom_rat()) {
        let len = 10;
        let sa = a.series(len);
        let sb = b.series(len);
        let cauchy: Vec<BigInt> = (0..len)
            .map(|l| (0..=l).map(|i| &sa[i] * &sb[l - i]).sum())
            .collect();
        prop_assert_eq!(a.mul(&b).series(len), cauchy);
    }
}
