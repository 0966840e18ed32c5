//! Constructors for the polynomial families, each from its explicit sum.
//!
//! Jacobi parameters are integers of either sign; binomials with negative
//! tops are the generalized ones from [`binom_general`], so for negative
//! parameters the degree may drop below `n`.
//!
//! Where a family has two independent formulas both are exposed (for
//! example [`shifted_legendre`] and [`shifted_legendre_direct`]) so that
//! their agreement can be checked.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{binom_general, factorial, rat, ratio, sign, Integer, Rational};
use crate::paths::{schroder_weighted, WeightTriple};
use crate::poly::Polynomial;

fn from_integer_coeffs(coeffs: impl IntoIterator<Item = Integer>) -> Polynomial {
    Polynomial::new(coeffs.into_iter().map(Rational::from_integer).collect())
}

/// `sum_j C(n+a+b+j, j) C(n+a, n-j) y^j`: the Jacobi sum written in the
/// variable `y = (x-1)/2`.
fn jacobi_in_half_shift(n: usize, alpha: i64, beta: i64) -> Polynomial {
    let n_i = n as i64;
    from_integer_coeffs((0..=n).map(|j| {
        binom_general(n_i + alpha + beta + j as i64, j as u64)
            * binom_general(n_i + alpha, (n - j) as u64)
    }))
}

/// Jacobi polynomial `P_n^(alpha,beta)(x) = sum_j C(n+a+b+j, j) C(n+a, n-j)
/// ((x-1)/2)^j`, valid for all integer parameters.
pub fn jacobi(n: usize, alpha: i64, beta: i64) -> Polynomial {
    jacobi_in_half_shift(n, alpha, beta).compose_affine(&ratio(1, 2), &ratio(-1, 2))
}

/// `P_n^(alpha,beta)(2x - 1)`.
pub fn shifted_jacobi(n: usize, alpha: i64, beta: i64) -> Polynomial {
    jacobi(n, alpha, beta).compose_affine(&rat(2), &rat(-1))
}

/// Romanovski-Jacobi polynomial `R_n^(alpha,beta)(x) = P_n^(alpha,beta)(2x + 1)`,
/// extended to every `n`.
pub fn romanovski(n: usize, alpha: i64, beta: i64) -> Polynomial {
    jacobi(n, alpha, beta).compose_affine(&rat(2), &rat(1))
}

/// Romanovski-Jacobi polynomial from its own sum
/// `sum_j C(n+a+b+j, j) C(n+a, n-j) x^j`.
pub fn romanovski_direct(n: usize, alpha: i64, beta: i64) -> Polynomial {
    jacobi_in_half_shift(n, alpha, beta)
}

/// `R_n^(0,-beta)(x) = sum_j C(beta-1-n, j) C(n, j) (-x)^j`.
pub fn romanovski_zero_neg(n: usize, beta: i64) -> Polynomial {
    let n_i = n as i64;
    from_integer_coeffs((0..=n).map(|j| {
        sign(j as u64) * binom_general(beta - 1 - n_i, j as u64) * binom_general(n_i, j as u64)
    }))
}

pub fn legendre(n: usize) -> Polynomial {
    jacobi(n, 0, 0)
}

/// `P_n(2x - 1)` via composition.
pub fn shifted_legendre(n: usize) -> Polynomial {
    legendre(n).compose_affine(&rat(2), &rat(-1))
}

/// `sum_k (-1)^(n-k) C(n,k) C(n+k,k) x^k`.
pub fn shifted_legendre_direct(n: usize) -> Polynomial {
    let n_i = n as i64;
    from_integer_coeffs((0..=n).map(|k| {
        sign((n - k) as u64)
            * binom_general(n_i, k as u64)
            * binom_general(n_i + k as i64, k as u64)
    }))
}

/// `sum_k (-1)^(n-k) C(n+k, n-k) C(2k, k) x^k`.
pub fn shifted_legendre_central(n: usize) -> Polynomial {
    let n_i = n as i64;
    from_integer_coeffs((0..=n).map(|k| {
        sign((n - k) as u64)
            * binom_general(n_i + k as i64, (n - k) as u64)
            * binom_general(2 * k as i64, k as u64)
    }))
}

/// Rook polynomial of the full `n x n` board:
/// `l_n(x) = sum_k (-1)^k C(n,k)^2 k! x^(n-k)`.
pub fn laguerre(n: usize) -> Polynomial {
    laguerre_gen(n, 0)
}

/// Rook polynomial of the `(n+beta) x n` board:
/// `sum_k (-1)^k C(n+beta,k) C(n,k) k! x^(n-k)`.
pub fn laguerre_gen(n: usize, beta: usize) -> Polynomial {
    let mut coeffs = vec![Integer::from(0); n + 1];
    for k in 0..=n {
        coeffs[n - k] = sign(k as u64)
            * binom_general((n + beta) as i64, k as u64)
            * binom_general(n as i64, k as u64)
            * factorial(k as u64);
    }
    from_integer_coeffs(coeffs)
}

/// `(x-1)^alpha P~_n^(alpha,beta)(x)` from the single sum
/// `sum_k (-1)^(n+alpha-k) C(n+alpha, k) C(n+beta+k, n) x^k`.
pub fn sj_product_expansion(n: usize, alpha: usize, beta: i64) -> Polynomial {
    let top = n + alpha;
    from_integer_coeffs((0..=top).map(|k| {
        sign((top - k) as u64)
            * binom_general(top as i64, k as u64)
            * binom_general(n as i64 + beta + k as i64, n as u64)
    }))
}

/// Schröder polynomial `S_n(x)`: total weight of Schröder paths to
/// `(n, n)` with east 1, north `x`, northeast `-1`.
pub fn schroder_poly(n: usize) -> Polynomial {
    schroder_weighted(n, &WeightTriple::jacobi_model())
}

/// `S_n(x) = sum_j (-1)^(n-j) / (j+1) C(2j, j) C(n+j, n-j) x^j`.
pub fn schroder_closed(n: usize) -> Polynomial {
    let n_i = n as i64;
    Polynomial::new(
        (0..=n)
            .map(|j| {
                let c = sign((n - j) as u64)
                    * binom_general(2 * j as i64, j as u64)
                    * binom_general(n_i + j as i64, (n - j) as u64);
                Rational::new(c, Integer::from(j + 1))
            })
            .collect(),
    )
}

/// `S_n(x) = 1/(n+1) sum_j (-1)^(n-j) C(n+1, j+1) C(n+j, n) x^j`.
pub fn schroder_closed_catalan_free(n: usize) -> Polynomial {
    let n_i = n as i64;
    from_integer_coeffs((0..=n).map(|j| {
        sign((n - j) as u64)
            * binom_general(n_i + 1, j as u64 + 1)
            * binom_general(n_i + j as i64, n as u64)
    }))
    .scale(&ratio(1, n_i + 1))
}

/// `S_n(x) = (x-1) / ((n+1) x) * P~_n^(1,-1)(x)` for `n >= 1`.
pub fn schroder_via_jacobi(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidIndex {
            index: 0,
            reason: "the Jacobi form of S_n needs n >= 1",
        });
    }
    let product = &Polynomial::from_ints(&[-1, 1]) * &shifted_jacobi(n, 1, -1);
    Ok(product.div_by_x()?.scale(&ratio(1, n as i64 + 1)))
}

/// Narayana polynomial `N_n(x) = sum_{k=1}^n (1/n) C(n, k-1) C(n, k) x^k`.
pub fn narayana(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidIndex {
            index: 0,
            reason: "Narayana polynomials are indexed from 1",
        });
    }
    let n_i = n as i64;
    let mut coeffs = vec![Rational::from_integer(Integer::from(0))];
    for k in 1..=n {
        let c = binom_general(n_i, k as u64 - 1) * binom_general(n_i, k as u64);
        coeffs.push(Rational::new(c, Integer::from(n)));
    }
    Ok(Polynomial::new(coeffs))
}

/// Monic Legendre polynomial `2^n P_n / C(2n, n)`.
pub fn legendre_monic(n: usize) -> Polynomial {
    let scale = Rational::new(
        Integer::from(2).pow(n as u32),
        binom_general(2 * n as i64, n as u64),
    );
    legendre(n).scale(&scale)
}

/// `q_n = 2^n (2n-1)!! P_n / C(2n, n)`, the integer-coefficient multiple of
/// the monic Legendre polynomial.
pub fn legendre_integral(n: usize) -> Polynomial {
    let double_factorial = (1..=n as u64).fold(Integer::one(), |acc, k| acc * (2 * k - 1));
    legendre_monic(n).scale(&Rational::from_integer(double_factorial))
}

/// Monic `p_n = (1 / C(2n, n)) ((x-1)/x) P~_n^(1,-1)(x)` for `n >= 1`;
/// `p_0 = 1`.
pub fn schroder_monic(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::one();
    }
    let product = &Polynomial::from_ints(&[-1, 1]) * &shifted_jacobi(n, 1, -1);
    product
        .div_by_x()
        .expect("(x-1) P~_n^(1,-1) vanishes at 0 for n >= 1")
        .scale(&Rational::new(
            Integer::one(),
            binom_general(2 * n as i64, n as u64),
        ))
}
