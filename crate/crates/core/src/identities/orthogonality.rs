use num_traits::{Signed, Zero};

use super::{expect, expect_eq, Case, Ctx, IdentityCheck, Mismatch, Outcome};
use crate::exact::{binom_general, factorial, rat, ratio, sign, Integer, Rational};
use crate::functionals::{
    favard_fit, functional_factorial, functional_lbeta, gram_matrix, hankel_mbeta, inner_weighted,
    lbeta_extension_threshold, MomentFunctional, RationalMatrix,
};
use crate::paths::valid_pair_signed_sum;
use crate::poly::Polynomial;

/// Diagonal with a positive diagonal, or the first offending entry.
fn expect_orthogonal(gram: &RationalMatrix) -> Outcome {
    if let Some((i, j, v)) = gram.first_off_diagonal() {
        return Err(Mismatch::new(format!("G[{i}][{j}] = {v}"), "0"));
    }
    for (i, d) in gram.diagonal().iter().enumerate() {
        expect(
            d.is_positive(),
            format!("G[{i}][{i}] = {d}"),
            "a positive value",
        )?;
    }
    Ok(())
}

fn x_pow(k: usize) -> Polynomial {
    Polynomial::monomial(rat(1), k)
}

fn fact(k: usize) -> Rational {
    Rational::from(factorial(k as u64))
}

pub(super) const ORTH_0BETA: IdentityCheck = IdentityCheck {
    id: "orth-0beta",
    description: "shifted Jacobi (0, beta) polynomials against lower powers",
    statement: "int_0^1 x^{m+b} Pt_n^{(0,b)}(x) dx = 0, m < n",
    grid: |ctx| {
        let mut cases = Vec::new();
        for beta in 0..=4 {
            for n in 1..=ctx.n_max(6) {
                for m in 0..n {
                    cases.push(
                        Case::new("moment")
                            .with("beta", beta)
                            .with("n", n as i64)
                            .with("m", m as i64),
                    );
                }
            }
        }
        cases
    },
    verify: |ctx, case| {
        let (beta, n, m) = (case.index("beta"), case.index("n"), case.index("m"));
        let p = ctx.shifted_jacobi(n, 0, beta as i64);
        expect_eq(&inner_weighted(&x_pow(m), &p, 0, beta), &Rational::zero())
    },
    notes: None,
};

pub(super) const ORTH_FULL: IdentityCheck = IdentityCheck {
    id: "orth-full",
    description: "Gram matrices of shifted Jacobi polynomials under (1-x)^a x^b on [0, 1]",
    statement: "int_0^1 Pt_m^{(a,b)} Pt_n^{(a,b)} (1-x)^a x^b dx = 0 for m != n, > 0 for m = n",
    grid: |_| {
        let mut cases = Vec::new();
        for alpha in 0..=3 {
            for beta in 0..=3 {
                cases.push(Case::new("gram").with("alpha", alpha).with("beta", beta));
            }
        }
        cases
    },
    verify: |ctx, case| {
        let (alpha, beta) = (case.index("alpha"), case.index("beta"));
        let family: Vec<Polynomial> = (0..=ctx.n_max(6))
            .map(|n| ctx.shifted_jacobi(n, alpha as i64, beta as i64))
            .collect();
        let gram = gram_matrix(
            &family,
            |f, g| Ok(inner_weighted(f, g, alpha, beta)),
            ctx.config().parallel,
        )?;
        expect_orthogonal(&gram)
    },
    notes: None,
};

/// `sum_k (-1)^k C(n+b,k) C(n,k) k! (n+m+b-k)!`.
pub(crate) fn pl_factorial_sum(n: usize, m: usize, beta: usize) -> Integer {
    (0..=n)
        .map(|k| {
            sign(k as u64)
                * binom_general((n + beta) as i64, k as u64)
                * binom_general(n as i64, k as u64)
                * factorial(k as u64)
                * factorial((n + m + beta - k) as u64)
        })
        .sum()
}

fn pl_integral_side(ctx: &Ctx, n: usize, m: usize, beta: usize) -> Rational {
    let p = ctx.shifted_jacobi(n, 0, beta as i64);
    fact(n + m + beta + 1) * inner_weighted(&x_pow(m), &p, 0, beta)
}

pub(super) const EPL: IdentityCheck = IdentityCheck {
    id: "epl",
    description:
        "moments of shifted Jacobi (0, beta) polynomials as signed factorial sums and valid pairs",
    statement:
        "(n+m+b+1)! int_0^1 x^{m+b} Pt_n^{(0,b)} dx = sum_k (-1)^k C(n+b,k) C(n,k) k! (n+m+b-k)!",
    grid: |ctx| {
        let mut cases = Vec::new();
        for n in 0..=ctx.n_max(5) {
            for m in 0..=5 {
                for beta in 0..=5 {
                    cases.push(
                        Case::new("moment")
                            .with("n", n as i64)
                            .with("m", m as i64)
                            .with("beta", beta),
                    );
                }
            }
        }
        cases
    },
    verify: |ctx, case| {
        let (n, m, beta) = (case.index("n"), case.index("m"), case.index("beta"));
        let lhs = pl_integral_side(ctx, n, m, beta);
        let rhs = Rational::from(pl_factorial_sum(n, m, beta));
        expect_eq(&lhs, &rhs)?;
        if m < n {
            expect_eq(&lhs, &Rational::zero())?;
        }
        let config = ctx.config();
        if n + m + beta < config.pair_oracle_max.min(config.caps.pair_elements) {
            let pairs = Rational::from(valid_pair_signed_sum(n, m, beta, &config.caps)?);
            expect_eq(&pairs, &rhs)?;
        }
        Ok(())
    },
    notes: None,
};

pub(super) const LAGUERRE_ORTH: IdentityCheck = IdentityCheck {
    id: "laguerre-orth",
    description: "rook polynomials under the factorial functional and the link to shifted Jacobi moments",
    statement: "L(l_m l_n) = 0 and L(x^b l_m^(b) l_n^(b)) = 0 for m != n; (n+m+b+1)! int_0^1 x^{m+b} Pt_n^{(0,b)} = L(x^{m+b} l_n^(b))",
    grid: |ctx| {
        let top = ctx.n_max(6);
        let mut cases = Vec::new();
        for n in 0..=top {
            for m in 0..=top {
                if m != n {
                    cases.push(Case::new("rook").with("n", n as i64).with("m", m as i64));
                }
            }
        }
        for beta in 0..=5 {
            for n in 0..=top {
                for m in 0..=top {
                    if m != n {
                        cases.push(
                            Case::new("rook-weighted")
                                .with("beta", beta)
                                .with("n", n as i64)
                                .with("m", m as i64),
                        );
                    }
                }
            }
        }
        for n in 0..=ctx.n_max(5) {
            for m in 0..=5 {
                cases.push(Case::new("moment").with("n", n as i64).with("m", m as i64));
            }
        }
        for n in 0..=ctx.n_max(5) {
            for m in 0..=5 {
                for beta in 0..=5 {
                    cases.push(
                        Case::new("moment-weighted")
                            .with("n", n as i64)
                            .with("m", m as i64)
                            .with("beta", beta),
                    );
                }
            }
        }
        cases
    },
    verify: |ctx, case| {
        let l = functional_factorial(40);
        let (n, m) = (case.index("n"), case.index("m"));
        match case.label {
            "rook" => {
                let value = l.inner(&ctx.laguerre(m), &ctx.laguerre(n))?;
                expect_eq(&value, &Rational::zero())
            }
            "rook-weighted" => {
                let beta = case.index("beta");
                let product = &ctx.laguerre_gen(m, beta) * &ctx.laguerre_gen(n, beta);
                expect_eq(&l.apply(&product.shift_up(beta))?, &Rational::zero())
            }
            "moment" => {
                let lhs = pl_integral_side(ctx, n, m, 0);
                expect_eq(&lhs, &l.apply(&ctx.laguerre(n).shift_up(m))?)
            }
            _ => {
                let beta = case.index("beta");
                let lhs = pl_integral_side(ctx, n, m, beta);
                expect_eq(&lhs, &l.apply(&ctx.laguerre_gen(n, beta).shift_up(m + beta))?)
            }
        }
    },
    notes: Some(|ctx| {
        let l = functional_factorial(40);
        let mut notes = Vec::new();
        let mut squares = true;
        for n in 0..=ctx.n_max(6) {
            let p = ctx.laguerre(n);
            let diag = l.inner(&p, &p).unwrap_or_else(|_| rat(-1));
            let f = fact(n);
            notes.push(format!(
                "L(l_{n}^2) = {diag}; n! = {f}, (n!)^2 = {}",
                &f * &f
            ));
            squares &= diag == &f * &f;
        }
        notes.push(if squares {
            "diagonal is (n!)^2, not the delta_{m,n} n! normalization".to_string()
        } else {
            "diagonal differs from (n!)^2".to_string()
        });
        notes
    }),
};

fn romanovski_family(ctx: &Ctx, beta: i64, top: usize) -> Vec<Polynomial> {
    (0..=top).map(|n| ctx.romanovski(n, 0, -beta)).collect()
}

fn lbeta_gram(ctx: &Ctx, functional: &MomentFunctional, family: &[Polynomial]) -> Outcome {
    let gram = gram_matrix(family, |f, g| functional.inner(f, g), ctx.config().parallel)?;
    expect_orthogonal(&gram)
}

pub(super) const ROMANOVSKI_ORTH: IdentityCheck = IdentityCheck {
    id: "romanovski-orth",
    description: "Romanovski-Jacobi (0, -beta) polynomials under L_beta, and the odd-beta extension",
    statement: "L_b(R_m R_n) = 0 for m != n <= (b-2)/2; for odd b, R_{(b-1)/2} joins the basis once det M_b(t) > 0",
    grid: |_| {
        let mut cases: Vec<Case> = (3..=12)
            .map(|beta| Case::new("askey-romanovski").with("beta", beta))
            .collect();
        cases.extend(
            (3..=11)
                .step_by(2)
                .map(|beta| Case::new("odd-extension").with("beta", beta)),
        );
        cases
    },
    verify: |ctx, case| {
        let beta = case.index("beta");
        let functional = functional_lbeta(beta)?;
        match case.label {
            "askey-romanovski" => {
                let top = ctx.n_max((beta - 2) / 2);
                lbeta_gram(ctx, &functional, &romanovski_family(ctx, beta as i64, top))
            }
            _ => {
                let threshold = lbeta_extension_threshold(beta)?;
                let t = &threshold + rat(1);
                let below = det_of_hankel(beta, &threshold)?;
                expect_eq(&below, &Rational::zero())
                    .map_err(|e| Mismatch::new(format!("det M(t*) = {}", e.lhs), e.rhs))?;
                for (k, minor) in hankel_mbeta(beta, &t)?
                    .leading_principal_minors()
                    .iter()
                    .enumerate()
                {
                    expect(
                        minor.is_positive(),
                        format!("minor {} of M(t*+1) = {minor}", k + 1),
                        "a positive value",
                    )?;
                }
                let top = (beta - 1) / 2;
                if top > ctx.n_max(top) {
                    return Ok(());
                }
                let extended = functional.extended(t);
                lbeta_gram(ctx, &extended, &romanovski_family(ctx, beta as i64, top))
            }
        }
    },
    notes: Some(|_| {
        (3..=11)
            .step_by(2)
            .map(|beta| match lbeta_extension_threshold(beta) {
                Ok(t) => format!("beta = {beta}: t* = {t}"),
                Err(e) => format!("beta = {beta}: {e}"),
            })
            .collect()
    }),
};

fn det_of_hankel(beta: usize, t: &Rational) -> crate::Result<Rational> {
    Ok(crate::functionals::det_exact(&hankel_mbeta(beta, t)?))
}

pub(super) const BORTH2: IdentityCheck = IdentityCheck {
    id: "borth2",
    description: "binomial sums behind L_beta orthogonality of Romanovski-Jacobi polynomials",
    statement: "sum_j (-1)^j C(n,j) C(m+j,m) C(b-2-m-j, n-m-1) = 0, m < n <= (b-2)/2",
    grid: |ctx| {
        let mut cases = Vec::new();
        for label in ["functional", "factorial-sum", "binomial-sum"] {
            for beta in 4..=14 {
                for n in 1..=ctx.n_max((beta - 2) / 2) {
                    for m in 0..n {
                        cases.push(
                            Case::new(label)
                                .with("beta", beta as i64)
                                .with("n", n as i64)
                                .with("m", m as i64),
                        );
                    }
                }
            }
        }
        cases
    },
    verify: |ctx, case| {
        let (beta, n, m) = (case.int("beta"), case.index("n"), case.index("m"));
        let value = match case.label {
            "functional" => {
                let l = functional_lbeta(beta as usize)?;
                l.apply(&ctx.romanovski(n, 0, -beta).shift_up(m))?
            }
            "factorial-sum" => Rational::from(
                (0..=n)
                    .map(|j| {
                        sign(j as u64)
                            * binom_general(beta - 1 - n as i64, j as u64)
                            * binom_general(n as i64, j as u64)
                            * factorial((m + j) as u64)
                            * factorial((beta as usize - 2 - m - j) as u64)
                    })
                    .sum::<Integer>(),
            ),
            _ => Rational::from(
                (0..=n)
                    .map(|j| {
                        sign(j as u64)
                            * binom_general(n as i64, j as u64)
                            * binom_general((m + j) as i64, m as u64)
                            * binom_general(beta - 2 - (m + j) as i64, (n - m - 1) as u64)
                    })
                    .sum::<Integer>(),
            ),
        };
        expect_eq(&value, &Rational::zero())
    },
    notes: None,
};

pub(super) const FAVARD_LEGENDRE: IdentityCheck = IdentityCheck {
    id: "favard-legendre",
    description: "three-term recursion of monic Legendre polynomials",
    statement:
        "p_n = x p_{n-1} - (n-1)^2/((2n-1)(2n-3)) p_{n-2}; q_n = (2n-1) x q_{n-1} - (n-1)^2 q_{n-2}",
    grid: |ctx| {
        let mut cases: Vec<Case> = (1..=ctx.n_max(12))
            .map(|n| Case::new("favard").with("n", n as i64))
            .collect();
        cases.extend((0..=ctx.n_max(12)).map(|n| Case::new("integral").with("n", n as i64)));
        cases
    },
    verify: |ctx, case| {
        let n = case.index("n");
        let monic = |k: usize| {
            let p = ctx.legendre(k);
            let lead = p.leading_coeff();
            if lead.is_zero() {
                p
            } else {
                p.scale(&lead.recip())
            }
        };
        match case.label {
            "favard" => {
                let family: Vec<Polynomial> = (0..=n).map(monic).collect();
                let fitted = favard_fit(&family)?;
                let got = fitted[n - 1].clone();
                let ni = n as i64;
                let lambda = if n == 1 {
                    Rational::zero()
                } else {
                    ratio((ni - 1) * (ni - 1), (2 * ni - 1) * (2 * ni - 3))
                };
                expect_eq(&got.0, &Rational::zero())?;
                expect_eq(&got.1, &lambda)
            }
            _ => {
                let q = |k: usize| {
                    let double_factorial =
                        (1..=k as i64).fold(rat(1), |acc, i| acc * rat(2 * i - 1));
                    monic(k).scale(&double_factorial)
                };
                let qn = q(n);
                expect(qn.has_integer_coeffs(), &qn, "integer coefficients")?;
                if n >= 2 {
                    let ni = n as i64;
                    let rhs = &q(n - 1).shift_up(1).scale(&rat(2 * ni - 1))
                        - &q(n - 2).scale(&rat((ni - 1) * (ni - 1)));
                    expect_eq(&qn, &rhs)?;
                }
                Ok(())
            }
        }
    },
    notes: None,
};

/// `p_n = (1/C(2n,n)) ((x-1)/x) Pt_n^{(1,-1)}` for `n >= 1`, `p_0 = 1`.
fn schroder_monic(ctx: &Ctx, n: usize) -> crate::Result<Polynomial> {
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let product = &Polynomial::from_ints(&[-1, 1]) * &ctx.shifted_jacobi(n, 1, -1);
    let central = Rational::from(binom_general(2 * n as i64, n as u64));
    Ok(product.div_by_x()?.scale(&central.recip()))
}

pub(super) const FAVARD_SCHRODER: IdentityCheck = IdentityCheck {
    id: "favard-schroder",
    description: "three-term recursion of the monic Schroder family",
    statement: "p_n = (x - 1/2) p_{n-1} - n(n-2)/(4(2n-1)(2n-3)) p_{n-2}, n >= 2",
    grid: |ctx| {
        (2..=ctx.n_max(10))
            .map(|n| Case::new("favard").with("n", n as i64))
            .collect()
    },
    verify: |ctx, case| {
        let n = case.index("n");
        let family = (0..=n)
            .map(|k| schroder_monic(ctx, k))
            .collect::<crate::Result<Vec<_>>>()?;
        let (c, lambda) = favard_fit(&family)?[n - 1].clone();
        let ni = n as i64;
        expect_eq(&c, &ratio(1, 2))?;
        expect_eq(
            &lambda,
            &ratio(ni * (ni - 2), 4 * (2 * ni - 1) * (2 * ni - 3)),
        )
    },
    notes: Some(|ctx| {
        let mut notes =
            vec!["the recursion is checked on the grid; no proof accompanies it".to_string()];
        let family: crate::Result<Vec<Polynomial>> =
            (0..=2).map(|k| schroder_monic(ctx, k)).collect();
        if let Ok(fit) = family.and_then(|f| favard_fit(&f)) {
            notes.push(format!("c_1 = {}, lambda_2 = {}", fit[0].0, fit[1].1));
            if fit[1].1.is_zero() {
                notes.push(
                    "lambda_2 = 0: the family is not orthogonal for any moment functional"
                        .to_string(),
                );
            }
        }
        notes
    }),
};
