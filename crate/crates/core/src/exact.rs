//! Scalar layer: exact rationals and integer combinatorial functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(value: i64) -> Integer {
    Integer::from(value)
}

pub fn rat(value: i64) -> Rational {
    Rational::from_integer(Integer::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(Integer::from(numer), Integer::from(denom))
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// Generalized binomial coefficient `r (r-1) ... (r-k+1) / k!` for any
/// integer `r`. Negative tops give the signed values used when Jacobi
/// parameters are negative; `binom_general(r, 0) = 1`.
pub fn binom_general(r: i64, k: u64) -> Integer {
    if r >= 0 && (k as i128) > r as i128 {
        return Integer::zero();
    }
    // Multiplicative formula keeps every prefix an integer:
    // prod_{i<j} (r-i) / j! = binom(r, j).
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= Integer::from(r) - Integer::from(i);
        acc /= Integer::from(i + 1);
    }
    acc
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// `(-1)^k` as an integer.
pub fn sign(k: u64) -> Integer {
    if k.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}

pub fn pow_rational(base: &Rational, exp: u64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Parses `"p/q"` or `"p"` into a rational. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: Integer = num.parse().ok()?;
    let den: Integer = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binom_general(5, 2), int(10));
        assert_eq!(binom_general(-1, 3), int(-1));
        assert_eq!(binom_general(4, 7), int(0));
        assert_eq!(binom_general(-7, 0), int(1));
        assert_eq!(binom_general(-5, 1), int(-5));
        assert_eq!(binom_general(-4, 2), int(10));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(2), 3), rat(24));
        assert_eq!(pochhammer(&ratio(1, 2), 2), ratio(3, 4));
        assert_eq!(pochhammer(&rat(5), 0), rat(1));
        // (alpha+1)_n is the product (alpha+1)(alpha+2)...(alpha+n)
        assert_eq!(pochhammer(&rat(3), 2), rat(3 * 4));
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse_rational("-4"), Some(rat(-4)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("0.5"), None);
        assert_eq!(ratio(2, -4), ratio(-1, 2));
    }

    proptest! {
        #[test]
        fn pascal_rule(r in -30i64..30, k in 1u64..12) {
            prop_assert_eq!(
                binom_general(r, k),
                binom_general(r - 1, k) + binom_general(r - 1, k - 1)
            );
        }

        #[test]
        fn negation_rule(r in 0i64..20, k in 0u64..10) {
            // binom(-r-1, k) = (-1)^k binom(r+k, k)
            prop_assert_eq!(binom_general(-r - 1, k), sign(k) * binom_general(r + k as i64, k));
        }
    }
}
