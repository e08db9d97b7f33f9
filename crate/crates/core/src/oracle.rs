//! Brute-force ground truth: enumerate m-Stirling permutations and count descents.
//!
//! A word over `{1^m, 2^m, ..., n^m}` is an m-Stirling permutation when every letter
//! sitting strictly between two equal letters `a` is at most `a`. Descents are interior
//! positions `j` with `w[j] > w[j + 1]`; the final position never counts.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::Error;

/// Largest multinomial `(mn)! / (m!)^n` that [`enumerate_triangle`] will walk.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

/// A word with each of `1..=n` appearing exactly `m` times.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StirlingWord {
    order: u32,
    n: usize,
    letters: Vec<u32>,
}

impl StirlingWord {
    /// Checks the multiset content only; use [`StirlingWord::is_valid`] for the
    /// between-occurrences condition.
    pub fn new(order: u32, n: usize, letters: Vec<u32>) -> Result<Self, Error> {
        let mut counts = vec![0u32; n];
        for &a in &letters {
            match (a as usize).checked_sub(1).and_then(|i| counts.get_mut(i)) {
                Some(c) => *c += 1,
                None => return Err(Error::WrongMultiset { m: order, n }),
            }
        }
        if order == 0 || counts.iter().any(|&c| c != order) {
            return Err(Error::WrongMultiset { m: order, n });
        }
        Ok(StirlingWord { order, n, letters })
    }

    /// Parses a word of single digits such as `"113223"`.
    pub fn from_digits(order: u32, n: usize, digits: &str) -> Result<Self, Error> {
        let letters = digits
            .chars()
            .map(|c| c.to_digit(10).ok_or(Error::WrongMultiset { m: order, n }))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(order, n, letters)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn is_valid(&self) -> bool {
        is_stirling(&self.letters, self.n)
    }

    pub fn descent_count(&self) -> usize {
        descents(&self.letters)
    }
}

// For each letter a, everything between its first and last occurrence must be <= a.
// Checking the outermost pair covers every pair u < w with equal letters.
fn is_stirling(word: &[u32], n: usize) -> bool {
    let mut first = vec![usize::MAX; n + 1];
    let mut last = vec![0usize; n + 1];
    for (pos, &a) in word.iter().enumerate() {
        let a = a as usize;
        if first[a] == usize::MAX {
            first[a] = pos;
        }
        last[a] = pos;
    }
    (1..=n).all(|a| {
        first[a] == usize::MAX || word[first[a]..=last[a]].iter().all(|&b| b as usize <= a)
    })
}

fn descents(word: &[u32]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Rearranges `word` into its lexicographic successor; `false` once it is the last one.
fn next_permutation(word: &mut [u32]) -> bool {
    let Some(i) = word.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = word
        .iter()
        .rposition(|&x| x > word[i])
        .expect("a larger element exists right of the pivot");
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

/// `(mn)! / (m!)^n`, the number of distinct rearrangements of the multiset.
pub fn multiset_permutation_count(order: u32, n: usize) -> BigInt {
    let m = u64::from(order);
    let mut acc = BigInt::from(1u32);
    let mut placed = 0u64;
    // multiply in C(placed + m, m) for each new letter
    for _ in 0..n {
        for i in 1..=m {
            acc *= placed + i;
            acc /= i;
        }
        placed += m;
    }
    acc
}

fn guard(order: u32, n: usize) -> Result<(), Error> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if n == 0 {
        return Err(Error::ZeroRows);
    }
    let count = multiset_permutation_count(order, n);
    match count.to_u64() {
        Some(c) if c <= ENUMERATION_LIMIT => Ok(()),
        _ => Err(Error::EnumerationTooLarge {
            m: order,
            n,
            count: count.to_u128().unwrap_or(u128::MAX),
            limit: ENUMERATION_LIMIT,
        }),
    }
}

/// Visits every m-Stirling permutation of order `n` in lexicographic order.
pub fn for_each_stirling_word(
    order: u32,
    n: usize,
    mut visit: impl FnMut(&[u32]),
) -> Result<(), Error> {
    guard(order, n)?;
    let mut word: Vec<u32> = (1..=n as u32)
        .flat_map(|a| core::iter::repeat_n(a, order as usize))
        .collect();
    loop {
        if is_stirling(&word, n) {
            visit(&word);
        }
        if !next_permutation(&mut word) {
            return Ok(());
        }
    }
}

/// All m-Stirling permutations of order `n`, lexicographically sorted.
pub fn stirling_words(order: u32, n: usize) -> Result<Vec<StirlingWord>, Error> {
    let mut out = Vec::new();
    for_each_stirling_word(order, n, |w| {
        out.push(StirlingWord {
            order,
            n,
            letters: w.to_vec(),
        })
    })?;
    Ok(out)
}

/// Row `n` of the order-`m` triangle by exhaustive enumeration: entry `k` counts the
/// m-Stirling permutations with `k` descents.
pub fn enumerate_triangle(order: u32, n: usize) -> Result<Vec<BigInt>, Error> {
    let mut counts = vec![0u64; n];
    for_each_stirling_word(order, n, |w| counts[descents(w)] += 1)?;
    Ok(counts.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(m: u32, n: usize, s: &str) -> StirlingWord {
        StirlingWord::from_digits(m, n, s).unwrap()
    }

    #[test]
    fn validity() {
        assert!(word(2, 3, "113223").is_valid());
        assert!(word(2, 2, "2112").is_valid());
        assert!(!word(2, 2, "1212").is_valid());
        assert!(word(3, 4, "111222333444").is_valid());
        assert!(!word(2, 3, "131322").is_valid());
    }

    #[test]
    fn wrong_content_is_rejected() {
        assert!(StirlingWord::from_digits(2, 3, "11223").is_err());
        assert!(StirlingWord::from_digits(2, 3, "112234").is_err());
        assert!(StirlingWord::from_digits(2, 3, "111233").is_err());
        assert!(StirlingWord::from_digits(2, 3, "11a233").is_err());
    }

    #[test]
    fn descent_examples() {
        assert_eq!(word(2, 3, "112233").descent_count(), 0);
        assert_eq!(word(2, 3, "332211").descent_count(), 2);
        assert_eq!(word(2, 3, "221133").descent_count(), 1);
    }

    #[test]
    fn small_rows() {
        let ints = |v: &[u64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(enumerate_triangle(2, 3).unwrap(), ints(&[1, 8, 6]));
        for m in 1..=5 {
            assert_eq!(enumerate_triangle(m, 1).unwrap(), ints(&[1]));
        }
        assert_eq!(enumerate_triangle(3, 3).unwrap(), ints(&[1, 12, 15]));
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multiset_permutation_count(3, 3), BigInt::from(1680));
        assert_eq!(multiset_permutation_count(1, 6), BigInt::from(720));
        assert_eq!(multiset_permutation_count(2, 5), BigInt::from(113_400));
    }

    #[test]
    fn guard_refuses_large_instances() {
        assert!(matches!(
            enumerate_triangle(3, 5),
            Err(Error::EnumerationTooLarge { count: 168_168_000, .. })
        ));
        assert_eq!(enumerate_triangle(0, 2), Err(Error::ZeroOrder));
    }

    #[test]
    fn lexicographic_successor_visits_each_arrangement_once() {
        let mut w = [1, 1, 2, 2];
        let mut seen = 1;
        while next_permutation(&mut w) {
            seen += 1;
        }
        assert_eq!(seen, 6);
        assert_eq!(w, [2, 2, 1, 1]);
    }
}
