//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, rat, Rational};

/// A polynomial stored as its coefficient sequence, index `k` holding the
/// coefficient of `x^k`.
///
/// The highest stored coefficient is never zero; the zero polynomial has
/// no coefficients at all, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Substitutes another polynomial for `x`.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `p(a x + b)`, expanded.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        self.compose(&Self::new(vec![b.clone(), a.clone()]))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    /// The antiderivative vanishing at 0, i.e. `x -> int_0^x p(t) dt`.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / rat(k as i64 + 1)),
        );
        Self::new(coeffs)
    }

    /// Exact value of `int_lo^hi p(x) dx`.
    pub fn integrate(&self, lo: &Rational, hi: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(hi) - anti.eval(lo)
    }

    /// Exact quotient by `x`; fails unless the constant term is zero.
    pub fn div_by_x(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c) if !c.is_zero() => Err(Error::NonzeroConstantTerm),
            Some(_) => Ok(Self::new(self.coeffs[1..].to_vec())),
        }
    }

    /// `(x-1)^n p(x/(x-1))` as a polynomial of degree at most `n`.
    ///
    /// Computed by Horner's rule on the homogeneous pair `(x, x-1)`:
    /// `sum_k p_k x^k (x-1)^(n-k)`.
    pub fn cayley(&self, n: usize) -> Result<Self> {
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if deg > n {
            return Err(Error::DegreeTooLarge {
                degree: deg,
                bound: n,
            });
        }
        let x = Self::x();
        let x_minus_one = Self::from_ints(&[-1, 1]);
        // acc_k = sum_{i >= k} p_i x^(i-k) (x-1)^(deg-i)
        let mut acc = Self::constant(self.coeffs[deg].clone());
        let mut y_power = Self::one();
        for k in (0..deg).rev() {
            y_power = &y_power * &x_minus_one;
            acc = &(&acc * &x) + &y_power.scale(&self.coeffs[k]);
        }
        Ok(&acc * &x_minus_one.pow(n - deg))
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Renders in descending powers with explicit signs, e.g.
/// `3x^2 - 12x + 10`. Non-integer coefficients are parenthesised:
/// `(1/2)x^2 - (3/2)x`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = magnitude.is_one();
            if k == 0 || !unit {
                if magnitude.is_integer() {
                    write!(f, "{}", magnitude.numer())?;
                } else {
                    write!(f, "({}/{})", magnitude.numer(), magnitude.denom())?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Parses the format produced by [`Display`](fmt::Display).
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        // Split into signed terms; '-' inside "(p/q)" never occurs because
        // magnitudes are rendered unsigned.
        let mut terms = Vec::new();
        let mut current = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);

        let mut acc = Self::zero();
        for term in terms {
            let (negative, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            let (coeff_text, power) = match body.find('x') {
                None => (body, 0usize),
                Some(pos) => {
                    let rest = &body[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|p| p.parse().ok())
                            .ok_or_else(|| Error::Parse(format!("bad exponent in `{body}`")))?
                    };
                    (&body[..pos], power)
                }
            };
            let coeff_text = coeff_text
                .strip_prefix('(')
                .and_then(|c| c.strip_suffix(')'))
                .unwrap_or(coeff_text);
            let mut coeff = if coeff_text.is_empty() {
                if power == 0 {
                    return Err(Error::Parse(format!("empty term in `{text}`")));
                }
                Rational::one()
            } else {
                parse_rational(coeff_text)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient `{coeff_text}`")))?
            };
            if negative {
                coeff = -coeff;
            }
            acc = &acc + &Self::monomial(coeff, power);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[-1, 2]).eval(&rat(2)), rat(3));
        assert_eq!(Polynomial::zero().eval(&rat(7)), rat(0));
        // Legendre P_2 = (3x^2 - 1)/2 at 3
        let legendre2 = Polynomial::new(vec![ratio(-1, 2), rat(0), ratio(3, 2)]);
        assert_eq!(legendre2.eval(&rat(3)), rat(13));
    }

    #[test]
    fn affine_composition() {
        assert_eq!(
            p(&[0, 0, 1]).compose_affine(&rat(2), &rat(-1)),
            p(&[1, -4, 4])
        );
        assert_eq!(p(&[0, 1]).compose_affine(&rat(1), &rat(0)), p(&[0, 1]));
        assert_eq!(p(&[0, 1]).compose_affine(&rat(2), &rat(-1)), p(&[-1, 2]));
    }

    #[test]
    fn calculus() {
        assert_eq!(p(&[-1, 2]).antiderivative(), p(&[0, -1, 1]));
        assert_eq!(p(&[0, -1, 1]).derivative(), p(&[-1, 2]));
        assert_eq!(Polynomial::zero().antiderivative(), Polynomial::zero());
        assert_eq!(p(&[0, 1]).integrate(&rat(0), &rat(1)), ratio(1, 2));
        assert_eq!(p(&[1]).integrate(&rat(-1), &rat(1)), rat(2));
        // shifted Legendre 1 and 2 are orthogonal on [0, 1]
        let product = &p(&[-1, 2]) * &p(&[1, -6, 6]);
        assert_eq!(product.integrate(&rat(0), &rat(1)), rat(0));
    }

    #[test]
    fn division_by_x() {
        assert_eq!(p(&[0, -1, 1]).div_by_x().unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[0, 3, -9, 6]).div_by_x().unwrap(), p(&[3, -9, 6]));
        assert_eq!(p(&[1, 0, 1]).div_by_x(), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn cayley_substitution() {
        assert_eq!(p(&[0, 1]).cayley(1).unwrap(), p(&[0, 1]));
        assert_eq!(p(&[-1, 2]).cayley(1).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[0, -3, 6]).cayley(2).unwrap(), p(&[0, 3, 3]));
        assert_eq!(
            p(&[0, 0, 1]).cayley(1),
            Err(Error::DegreeTooLarge {
                degree: 2,
                bound: 1
            })
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[10, -12, 3]).to_string(), "3x^2 - 12x + 10");
        assert_eq!(p(&[5, -4]).to_string(), "-4x + 5");
        assert_eq!(p(&[0, 0, 0, 0, 0, 0, 1]).to_string(), "x^6");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let half = Polynomial::new(vec![ratio(-1, 2), rat(0), ratio(3, 2)]);
        assert_eq!(half.to_string(), "(3/2)x^2 - (1/2)");
        assert_eq!(
            "-x^3 + x - 1".parse::<Polynomial>().unwrap(),
            p(&[-1, 1, 0, -1])
        );
        assert!("x^".parse::<Polynomial>().is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..9).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_rational(), 0..8).prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn integration_is_linear_and_additive(
            f in arb_poly(), g in arb_poly(),
            a in arb_rational(), b in arb_rational(), c in arb_rational(),
        ) {
            prop_assert_eq!(
                (&f + &g).integrate(&a, &b),
                f.integrate(&a, &b) + g.integrate(&a, &b)
            );
            prop_assert_eq!(f.integrate(&a, &b) + f.integrate(&b, &c), f.integrate(&a, &c));
        }

        #[test]
        fn derivative_inverts_antiderivative(f in arb_poly()) {
            let anti = f.antiderivative();
            prop_assert_eq!(anti.derivative(), f);
            prop_assert_eq!(anti.eval(&rat(0)), rat(0));
        }

        #[test]
        fn shift_round_trip(f in arb_poly()) {
            let shifted = f.compose_affine(&rat(1), &rat(1));
            prop_assert_eq!(shifted.compose_affine(&rat(1), &rat(-1)), f);
        }

        #[test]
        fn cayley_matches_pointwise_substitution(f in arb_poly(), extra in 0usize..3) {
            let n = f.degree().unwrap_or(0) + extra;
            let sub = f.cayley(n).unwrap();
            prop_assert!(sub.degree().is_none_or(|d| d <= n));
            // n + 1 sample points away from the pole at x = 1
            for i in 0..=(n as i64 + 1) {
                let x0 = ratio(2 * i + 3, 2);
                let y = &x0 - rat(1);
                let expected = crate::exact::pow_rational(&y, n as u64) * f.eval(&(&x0 / &y));
                prop_assert_eq!(sub.eval(&x0), expected);
            }
        }

        #[test]
        fn render_parse_round_trip(f in arb_poly()) {
            let text = f.to_string();
            prop_assert_eq!(text.parse::<Polynomial>().unwrap(), f);
        }

        #[test]
        fn ring_laws(f in arb_poly(), g in arb_poly(), h in arb_poly(), x0 in arb_rational()) {
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!((&f * &g).eval(&x0), f.eval(&x0) * g.eval(&x0));
            prop_assert_eq!(&(&f - &g) + &g, f);
        }
    }
}
