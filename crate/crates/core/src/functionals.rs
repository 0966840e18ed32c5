//! Moment functionals, Gram and Hankel matrices, exact determinants and
//! Favard coefficient fitting.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, rat, Integer, Rational};
use crate::par;
use crate::poly::Polynomial;

/// A linear functional on polynomials given by its moments
/// `L(x^0), ..., L(x^max_degree)`.
///
/// Applying it to a polynomial of larger degree is an error; the
/// functional is never extrapolated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentFunctional {
    moments: Vec<Rational>,
}

impl MomentFunctional {
    pub fn new(moments: Vec<Rational>) -> Self {
        assert!(!moments.is_empty(), "a moment functional needs L(1)");
        Self { moments }
    }

    pub fn max_degree(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moment(&self, k: usize) -> Result<&Rational> {
        self.moments.get(k).ok_or(Error::DegreeOutOfRange {
            degree: k,
            max_degree: self.max_degree(),
        })
    }

    pub fn moments(&self) -> &[Rational] {
        &self.moments
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Rational> {
        if let Some(degree) = p.degree().filter(|&d| d > self.max_degree()) {
            return Err(Error::DegreeOutOfRange {
                degree,
                max_degree: self.max_degree(),
            });
        }
        Ok(p.coeffs()
            .iter()
            .zip(&self.moments)
            .map(|(c, m)| c * m)
            .sum())
    }

    /// `(f, g) -> L(f g)`.
    pub fn inner(&self, f: &Polynomial, g: &Polynomial) -> Result<Rational> {
        self.apply(&(f * g))
    }

    /// The same functional with one more moment appended.
    pub fn extended(&self, next_moment: Rational) -> Self {
        let mut moments = self.moments.clone();
        moments.push(next_moment);
        Self { moments }
    }
}

/// `L(x^k) = k!`, i.e. integration against `e^(-x)` on `[0, inf)`.
pub fn functional_factorial(max_degree: usize) -> MomentFunctional {
    MomentFunctional::new(
        (0..=max_degree as u64)
            .map(|k| Rational::from_integer(factorial(k)))
            .collect(),
    )
}

/// `L_beta(x^k) = k! (beta-2-k)! / (beta-1)!` for `0 <= k <= beta-2`: the
/// moments of `(1+x)^(-beta)` on `[0, inf)`.
pub fn functional_lbeta(beta: usize) -> Result<MomentFunctional> {
    if beta < 2 {
        return Err(Error::InvalidParameter(format!(
            "L_beta needs beta >= 2, got {beta}"
        )));
    }
    let denom = factorial(beta as u64 - 1);
    Ok(MomentFunctional::new(
        (0..=beta - 2)
            .map(|k| {
                Rational::new(
                    factorial(k as u64) * factorial((beta - 2 - k) as u64),
                    denom.clone(),
                )
            })
            .collect(),
    ))
}

/// `int_0^1 f g (1-x)^alpha x^beta dx`, exactly.
pub fn inner_weighted(f: &Polynomial, g: &Polynomial, alpha: usize, beta: usize) -> Rational {
    let weight = &Polynomial::from_ints(&[1, -1]).pow(alpha) * &Polynomial::x().pow(beta);
    (&(f * g) * &weight).integrate(&rat(0), &rat(1))
}

/// Dense square matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalMatrix {
    size: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        Self { size, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let size = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == size),
            "matrix must be square"
        );
        Self {
            size,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.size + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// First off-diagonal nonzero entry in row-major order.
    pub fn first_off_diagonal(&self) -> Option<(usize, usize, &Rational)> {
        (0..self.size)
            .flat_map(|i| (0..self.size).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && !self.get(i, j).is_zero())
            .map(|(i, j)| (i, j, self.get(i, j)))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.size).map(|i| self.get(i, i).clone()).collect()
    }

    /// Top-left `k x k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        Self::from_fn(k, |i, j| self.get(i, j).clone())
    }

    /// Determinants of the leading `1x1, ..., nxn` blocks.
    pub fn leading_principal_minors(&self) -> Vec<Rational> {
        (1..=self.size)
            .map(|k| det_exact(&self.leading_block(k)))
            .collect()
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators, so
/// the elimination itself only performs exact integer divisions.
pub fn det_exact(matrix: &RationalMatrix) -> Rational {
    let n = matrix.size();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = Integer::one();
    let mut a: Vec<Vec<Integer>> = (0..n)
        .map(|i| {
            let lcm = (0..n).fold(Integer::one(), |acc, j| acc.lcm(matrix.get(i, j).denom()));
            scale *= &lcm;
            (0..n)
                .map(|j| {
                    let e = matrix.get(i, j);
                    e.numer() * (&lcm / e.denom())
                })
                .collect()
        })
        .collect();

    let mut negate = false;
    let mut prev_pivot = Integer::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = value / &prev_pivot;
            }
        }
        prev_pivot = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let det = if negate { -det } else { det };
    Rational::new(det, scale)
}

/// `G[i][j] = inner(family[i], family[j])`. Entries are computed
/// independently (on the rayon pool when `parallel` is set).
pub fn gram_matrix<F>(family: &[Polynomial], inner: F, parallel: bool) -> Result<RationalMatrix>
where
    F: Fn(&Polynomial, &Polynomial) -> Result<Rational> + Sync + Send,
{
    let size = family.len();
    let pairs: Vec<(usize, usize)> = (0..size)
        .flat_map(|i| (i..size).map(move |j| (i, j)))
        .collect();
    let values = par::map(&pairs, parallel, |&(i, j)| inner(&family[i], &family[j]));
    let mut entries = vec![Rational::zero(); size * size];
    for (&(i, j), value) in pairs.iter().zip(values) {
        let value = value?;
        entries[j * size + i] = value.clone();
        entries[i * size + j] = value;
    }
    Ok(RationalMatrix { size, entries })
}

fn check_odd_beta(beta: usize) -> Result<()> {
    if beta < 3 || beta.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "M_beta needs an odd beta >= 3, got {beta}"
        )));
    }
    Ok(())
}

/// Hankel matrix `(L_beta(x^(i+j)))` of size `(beta+1)/2`, with the one
/// moment `L_beta(x^(beta-1))` that `L_beta` leaves undefined set to `t`.
pub fn hankel_mbeta(beta: usize, t: &Rational) -> Result<RationalMatrix> {
    check_odd_beta(beta)?;
    let extended = functional_lbeta(beta)?.extended(t.clone());
    let size = beta.div_ceil(2);
    Ok(RationalMatrix::from_fn(size, |i, j| {
        extended.moments()[i + j].clone()
    }))
}

/// The threshold `t*` with `det M_beta(t) > 0` exactly when `t > t*`.
///
/// `det M_beta(t)` is affine in `t` (the corner entry appears once in the
/// cofactor expansion along the last column) with slope equal to the
/// leading principal minor of size `(beta-1)/2`. That minor must be
/// positive; otherwise [`Error::NonpositiveCofactor`] is returned.
pub fn lbeta_extension_threshold(beta: usize) -> Result<Rational> {
    let at_zero = hankel_mbeta(beta, &Rational::zero())?;
    let slope = det_exact(&at_zero.leading_block(at_zero.size() - 1));
    if !slope.is_positive() {
        return Err(Error::NonpositiveCofactor(format!(
            "beta = {beta}, minor = {slope}"
        )));
    }
    Ok(-det_exact(&at_zero) / slope)
}

/// The Favard coefficients of a monic family: for every `n >= 1`, the
/// unique `(c_n, lambda_n)` with
/// `p_n = (x - c_n) p_(n-1) - lambda_n p_(n-2)` and `p_(-1) = 0`.
///
/// `lambda_1` is unconstrained and reported as 0. The recurrence is
/// checked as a full polynomial identity.
pub fn favard_fit(family: &[Polynomial]) -> Result<Vec<(Rational, Rational)>> {
    for (n, p) in family.iter().enumerate() {
        if p.degree() != Some(n) || !p.is_monic() {
            return Err(Error::NotMonic(n));
        }
    }
    let x = Polynomial::x();
    let mut out = Vec::with_capacity(family.len().saturating_sub(1));
    for n in 1..family.len() {
        let prev = &family[n - 1];
        // x p_(n-1) - p_n = c_n p_(n-1) + lambda_n p_(n-2)
        let residual = &(&x * prev) - &family[n];
        let c = residual.coeff(n - 1);
        let residual = &residual - &prev.scale(&c);
        let lambda = if n >= 2 {
            let l = residual.coeff(n - 2);
            let rest = &residual - &family[n - 2].scale(&l);
            if !rest.is_zero() {
                return Err(Error::NotInRecurrence(n));
            }
            l
        } else {
            if !residual.is_zero() {
                return Err(Error::NotInRecurrence(n));
            }
            Rational::zero()
        };
        out.push((c, lambda));
    }
    Ok(out)
}

/// Rebuilds `p_0 = 1, p_1, ..., p_len` from Favard coefficients.
pub fn favard_reconstruct(coeffs: &[(Rational, Rational)]) -> Vec<Polynomial> {
    let mut family = vec![Polynomial::one()];
    for (n, (c, lambda)) in coeffs.iter().enumerate() {
        let prev = &family[n];
        let shifted = prev * &Polynomial::new(vec![-c.clone(), Rational::one()]);
        let next = if n >= 1 {
            &shifted - &family[n - 1].scale(lambda)
        } else {
            shifted
        };
        family.push(next);
    }
    family
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::orthopoly::{laguerre, legendre_monic, romanovski, shifted_legendre};
    use proptest::prelude::*;

    #[test]
    fn factorial_functional() {
        let l = functional_factorial(6);
        assert_eq!(l.apply(&(&laguerre(1) * &laguerre(2))).unwrap(), rat(0));
        assert_eq!(l.apply(&Polynomial::one()).unwrap(), rat(1));
        assert_eq!(l.apply(&laguerre(2).pow(2)).unwrap(), rat(4));
        assert_eq!(
            l.apply(&Polynomial::x().pow(7)),
            Err(Error::DegreeOutOfRange {
                degree: 7,
                max_degree: 6
            })
        );
    }

    #[test]
    fn lbeta_moments() {
        let l6 = functional_lbeta(6).unwrap();
        assert_eq!(l6.moments()[0], ratio(1, 5));
        assert_eq!(l6.moments()[1], ratio(1, 20));
        assert_eq!(l6.max_degree(), 4);
        assert_eq!(functional_lbeta(3).unwrap().moments()[1], ratio(1, 2));
        assert!(functional_lbeta(1).is_err());
    }

    #[test]
    fn weighted_inner_products() {
        assert_eq!(
            inner_weighted(&shifted_legendre(1), &shifted_legendre(2), 0, 0),
            rat(0)
        );
        assert_eq!(
            inner_weighted(&Polynomial::one(), &Polynomial::one(), 0, 0),
            rat(1)
        );
        // x^(m+beta) P~_1^(0,1) with m = 0, beta = 1 as f = 1, weight x
        let sj = Polynomial::from_ints(&[-2, 3]);
        assert_eq!(inner_weighted(&Polynomial::one(), &sj, 0, 1), rat(0));
    }

    #[test]
    fn gram_matrices() {
        let family: Vec<_> = (0..3).map(shifted_legendre).collect();
        let g = gram_matrix(&family, |f, g| Ok(inner_weighted(f, g, 0, 0)), true).unwrap();
        assert!(g.is_diagonal());
        assert_eq!(g.diagonal(), [rat(1), ratio(1, 3), ratio(1, 5)]);

        let l6 = functional_lbeta(6).unwrap();
        let r: Vec<_> = (0..3).map(|n| romanovski(n, 0, -6)).collect();
        let g = gram_matrix(&r, |f, g| l6.inner(f, g), false).unwrap();
        assert!(g.is_diagonal());

        let empty = gram_matrix(&[], |_, _| Ok(rat(0)), false).unwrap();
        assert_eq!(empty.size(), 0);

        let too_high = gram_matrix(&[Polynomial::x().pow(3)], |f, g| l6.inner(f, g), false);
        assert!(matches!(too_high, Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn hankel_and_threshold() {
        let m = hankel_mbeta(3, &ratio(1, 3)).unwrap();
        assert_eq!(m.get(0, 0), &ratio(1, 2));
        assert_eq!(m.get(0, 1), &ratio(1, 2));
        assert_eq!(m.get(1, 1), &ratio(1, 3));
        assert_eq!(det_exact(&hankel_mbeta(3, &ratio(1, 2)).unwrap()), rat(0));
        assert_eq!(
            det_exact(&hankel_mbeta(3, &ratio(3, 2)).unwrap()),
            ratio(1, 2)
        );
        assert_eq!(lbeta_extension_threshold(3).unwrap(), ratio(1, 2));
        assert!(hankel_mbeta(4, &rat(1)).is_err());
    }

    /// Determinant of `M_5(t)` expanded by hand as an affine function of `t`:
    /// with moments a0..a3 and corner t,
    /// `det = t (a0 a2 - a1^2) + det M_5(0)`.
    #[test]
    fn threshold_for_beta_five_by_cofactor_oracle() {
        let a: Vec<Rational> = functional_lbeta(5).unwrap().moments().to_vec();
        let (a0, a1, a2, a3) = (&a[0], &a[1], &a[2], &a[3]);
        let slope = a0 * a2 - a1 * a1;
        // 3x3 Hankel [[a0,a1,a2],[a1,a2,a3],[a2,a3,0]] by the rule of Sarrus
        let constant =
            a0 * (a2 * rat(0) - a3 * a3) - a1 * (a1 * rat(0) - a3 * a2) + a2 * (a1 * a3 - a2 * a2);
        let oracle = -constant / &slope;
        assert_eq!(oracle, ratio(11, 12));
        assert_eq!(lbeta_extension_threshold(5).unwrap(), oracle);
        for beta in [3, 5, 7] {
            let t = lbeta_extension_threshold(beta).unwrap() + rat(1);
            assert!(det_exact(&hankel_mbeta(beta, &t).unwrap()).is_positive());
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(det_exact(&RationalMatrix::identity(3)), rat(1));
        let half = ratio(1, 2);
        let singular = RationalMatrix::from_rows(vec![
            vec![half.clone(), half.clone()],
            vec![half.clone(), half],
        ]);
        assert_eq!(det_exact(&singular), rat(0));
        // needs a row swap
        let swap = RationalMatrix::from_rows(vec![
            vec![rat(0), rat(2), rat(1)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), ratio(1, 3)],
        ]);
        assert_eq!(det_exact(&swap), ratio(-2, 3));
    }

    #[test]
    fn favard_examples() {
        let legendre: Vec<_> = (0..=4).map(legendre_monic).collect();
        let coeffs = favard_fit(&legendre).unwrap();
        assert_eq!(coeffs[1], (rat(0), ratio(1, 3)));
        assert_eq!(coeffs[0], (rat(0), rat(0)));

        let coeffs = favard_fit(&[Polynomial::one(), Polynomial::x()]).unwrap();
        assert_eq!(coeffs, [(rat(0), rat(0))]);

        let broken = [
            Polynomial::one(),
            Polynomial::x(),
            Polynomial::x().pow(2),
            &Polynomial::x().pow(3) + &Polynomial::one(),
        ];
        assert_eq!(favard_fit(&broken), Err(Error::NotInRecurrence(3)));
        assert_eq!(
            favard_fit(&[Polynomial::one(), Polynomial::from_ints(&[0, 2])]),
            Err(Error::NotMonic(1))
        );
    }

    /// Laplace expansion along the first row, as an independent check on
    /// the elimination.
    fn det_laplace(m: &RationalMatrix) -> Rational {
        let n = m.size();
        if n == 0 {
            return rat(1);
        }
        (0..n)
            .map(|j| {
                let minor = RationalMatrix::from_fn(n - 1, |r, c| {
                    m.get(r + 1, if c < j { c } else { c + 1 }).clone()
                });
                let term = m.get(0, j) * det_laplace(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    proptest! {
        #[test]
        fn bareiss_matches_laplace(
            size in 0usize..5,
            raw in prop::collection::vec((-6i64..7, 1i64..4), 16),
        ) {
            let m = RationalMatrix::from_fn(size, |i, j| {
                let (a, b) = raw[i * 4 + j];
                ratio(a, b)
            });
            prop_assert_eq!(det_exact(&m), det_laplace(&m));
        }

        #[test]
        fn favard_round_trip(
            raw in prop::collection::vec((-5i64..6, 1i64..4, -5i64..6, 1i64..4), 1..7),
        ) {
            let coeffs: Vec<(Rational, Rational)> = raw
                .iter()
                .enumerate()
                .map(|(n, &(c, cd, l, ld))| {
                    (ratio(c, cd), if n == 0 { rat(0) } else { ratio(l, ld) })
                })
                .collect();
            let family = favard_reconstruct(&coeffs);
            prop_assert_eq!(favard_fit(&family).unwrap(), coeffs);
        }
    }
}
