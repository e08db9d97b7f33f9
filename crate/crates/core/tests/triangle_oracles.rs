use eulerian_forge::oracle::{self, StirlingWord};
use eulerian_forge::triangle::{self, value_explicit};
use eulerian_forge::{BigInt, EulerianTriangle};
use proptest::prelude::*;

#[test]
fn explicit_formula_matches_recurrence() {
    for m in 1..=4 {
        let t = EulerianTriangle::build(m, 8).unwrap();
        for n in 1..=8 {
            for k in 0..n {
                assert_eq!(value_explicit(m, n, k), t.get(n, k as i64), "m={m} n={n} k={k}");
            }
        }
    }
}

#[test]
fn closed_forms_match_columns_and_sums() {
    for m in 1..=5 {
        let t = EulerianTriangle::build(m, 10).unwrap();
        for n in 1..=10 {
            let row = t.row(n).unwrap();
            assert_eq!(row.iter().sum::<BigInt>(), triangle::row_sum_closed(m, n));
            assert_eq!(row[n - 1], triangle::last_entry_closed(m, n));
            assert_eq!(row[0], BigInt::from(1));
            if n >= 2 {
                assert_eq!(row[1], triangle::k1_closed(m, n));
            }
            assert!(row.iter().all(|v| *v >= BigInt::from(1)));
        }
    }
}

#[test]
fn first_order_rows_are_palindromic() {
    let t = EulerianTriangle::build(1, 10).unwrap();
    for row in t.rows() {
        assert!(row.iter().eq(row.iter().rev()));
    }
}

#[test]
fn first_order_row_sums_are_factorials() {
    let mut fact = BigInt::from(1);
    for n in 1..=12usize {
        fact *= n;
        assert_eq!(triangle::row_sum_closed(1, n), fact);
    }
}

#[test]
fn order_lift_holds() {
    for m in 2..=5 {
        for n in 1..=8 {
            assert_eq!(triangle::order_lift_check(m, n), Ok(true), "m={m} n={n}");
        }
    }
}

#[test]
fn enumeration_matches_recurrence() {
    for (m, n_top) in [(1, 6), (2, 5), (3, 4), (4, 3)] {
        let t = EulerianTriangle::build(m, n_top).unwrap();
        for n in 1..=n_top {
            let counts = oracle::enumerate_triangle(m, n).unwrap();
            assert_eq!(counts.as_slice(), t.row(n).unwrap(), "m={m} n={n}");
            let words = oracle::stirling_words(m, n).unwrap();
            assert_eq!(BigInt::from(words.len()), triangle::row_sum_closed(m, n));
        }
    }
}

#[test]
fn printed_listing_is_classified() {
    let listing: [(&[&str], usize); 3] = [
        (&["112233"], 0),
        (&["113322", "113223", "221133", "211233", "223311", "223113", "331122", "311223"], 1),
        (&["332211", "322311", "311322", "332112", "322113", "321123"], 2),
    ];
    let all: Vec<Vec<u32>> = oracle::stirling_words(2, 3)
        .unwrap()
        .into_iter()
        .map(|w| w.letters().to_vec())
        .collect();
    assert_eq!(all.len(), 15);
    for (words, descents) in listing {
        for w in words {
            let word = StirlingWord::from_digits(2, 3, w).unwrap();
            assert!(word.is_valid(), "{w}");
            assert_eq!(word.descent_count(), descents, "{w}");
            assert!(all.contains(&word.letters().to_vec()), "{w}");
        }
    }
}

#[test]
fn order_lift_combinatorial_example() {
    // words of Q_4 with one descent, and Q_6 words with one descent
    let q4: Vec<String> = oracle::stirling_words(2, 2)
        .unwrap()
        .iter()
        .filter(|w| w.descent_count() == 1)
        .map(|w| w.letters().iter().map(|d| char::from_digit(*d, 10).unwrap()).collect())
        .collect();
    assert_eq!(q4, ["2112", "2211"]);
    let q6: Vec<String> = oracle::stirling_words(3, 2)
        .unwrap()
        .iter()
        .filter(|w| w.descent_count() == 1)
        .map(|w| w.letters().iter().map(|d| char::from_digit(*d, 10).unwrap()).collect())
        .collect();
    assert_eq!(q6, ["211122", "221112", "222111"]);
}

proptest! {
    #[test]
    fn validity_matches_literal_triple_condition(letters in Just(vec![1u32, 1, 2, 2, 3, 3]).prop_shuffle()) {
        let w = StirlingWord::new(2, 3, letters.clone()).unwrap();
        let literal = (0..6).all(|u| (u + 1..6).all(|v| (v + 1..6).all(|x| {
            letters[u] != letters[x] || letters[u] >= letters[v]
        })));
        prop_assert_eq!(w.is_valid(), literal);
    }

    #[test]
    fn explicit_is_zero_out_of_range(m in 1u32..=6, n in 1usize..=8, extra in 0usize..=5) {
        prop_assert_eq!(value_explicit(m, n, n + extra), BigInt::from(0));
    }
}
