use num_traits::Zero;

use super::{expect, expect_eq, Case, Ctx, IdentityCheck};
use crate::exact::{binom_general, pochhammer, rat, sign, Rational};
use crate::orthopoly::{
    romanovski_direct, romanovski_zero_neg, shifted_legendre_central, shifted_legendre_direct,
};
use crate::poly::Polynomial;

fn xm1() -> Polynomial {
    Polynomial::from_ints(&[-1, 1])
}

fn reflect(p: &Polynomial) -> Polynomial {
    p.compose_affine(&rat(-1), &Rational::zero())
}

fn shift_one(p: &Polynomial) -> Polynomial {
    p.compose_affine(&rat(1), &rat(1))
}

fn signed(p: &Polynomial, n: usize) -> Polynomial {
    p.scale(&Rational::from(sign(n as u64)))
}

pub(super) const SJ_EXPANSION: IdentityCheck = IdentityCheck {
    id: "sj-expansion",
    description: "single-sum expansion of (x-1)^a times a shifted Jacobi polynomial",
    statement: "(x-1)^a Pt_n^{(a,b)}(x) = sum_k (-1)^{n+a-k} C(n+a,k) C(n+b+k,n) x^k",
    grid: |ctx| {
        let mut cases = Vec::new();
        for n in 0..=ctx.n_max(8) {
            for alpha in 0..=4 {
                for beta in -4..=4 {
                    cases.push(
                        Case::new("expansion")
                            .with("n", n as i64)
                            .with("alpha", alpha)
                            .with("beta", beta),
                    );
                }
            }
        }
        cases
    },
    verify: |ctx, case| {
        let (n, alpha, beta) = (case.index("n"), case.index("alpha"), case.int("beta"));
        let lhs = &xm1().pow(alpha) * &ctx.shifted_jacobi(n, alpha as i64, beta);
        expect_eq(&lhs, &ctx.sj_product(n, alpha, beta))
    },
    notes: None,
};

pub(super) const DUAL_ROUTES: IdentityCheck = IdentityCheck {
    id: "dual-routes",
    description: "families built by composition agree with their direct sums",
    statement: "Pt_n = sum_k (-1)^{n-k} C(n,k) C(n+k,k) x^k = sum_k (-1)^{n-k} C(n+k,n-k) C(2k,k) x^k; R_n = sum_j C(n+a+b+j,j) C(n+a,n-j) x^j",
    grid: |ctx| {
        let top = ctx.n_max(12);
        let mut cases: Vec<Case> = (0..=top)
            .map(|n| Case::new("shifted-legendre").with("n", n as i64))
            .collect();
        for n in 0..=top {
            for alpha in -3..=3 {
                for beta in -3..=3 {
                    cases.push(
                        Case::new("romanovski")
                            .with("n", n as i64)
                            .with("alpha", alpha)
                            .with("beta", beta),
                    );
                }
            }
        }
        for n in 0..=top {
            for beta in 1..=12 {
                cases.push(
                    Case::new("romanovski-negative-beta")
                        .with("n", n as i64)
                        .with("beta", beta),
                );
            }
        }
        cases
    },
    verify: |ctx, case| {
        let n = case.index("n");
        match case.label {
            "shifted-legendre" => {
                let p = ctx.shifted_legendre(n);
                expect_eq(&p, &shifted_legendre_direct(n))?;
                expect_eq(&p, &shifted_legendre_central(n))
            }
            "romanovski" => {
                let (alpha, beta) = (case.int("alpha"), case.int("beta"));
                expect_eq(&ctx.romanovski(n, alpha, beta), &romanovski_direct(n, alpha, beta))
            }
            _ => {
                let beta = case.int("beta");
                expect_eq(&ctx.romanovski(n, 0, -beta), &romanovski_zero_neg(n, beta))
            }
        }
    },
    notes: None,
};

pub(super) const SWAP_RULES: IdentityCheck = IdentityCheck {
    id: "swap-rules",
    description: "parameter swap under reflection for Jacobi, shifted Jacobi and shifted Legendre",
    statement: "(-1)^n P_n^{(a,b)}(-x) = P_n^{(b,a)}(x); (-1)^n Pt_n^{(a,b)}(-x) = Pt_n^{(b,a)}(x+1); (-1)^n Pt_n(-x) = Pt_n(x+1)",
    grid: |ctx| {
        let mut cases = Vec::new();
        for label in ["jacobi", "shifted-jacobi"] {
            for n in 0..=ctx.n_max(8) {
                for alpha in -3..=3 {
                    for beta in -3..=3 {
                        cases.push(
                            Case::new(label)
                                .with("n", n as i64)
                                .with("alpha", alpha)
                                .with("beta", beta),
                        );
                    }
                }
            }
        }
        for n in 0..=ctx.n_max(12) {
            cases.push(Case::new("shifted-legendre").with("n", n as i64));
        }
        for n in 0..=ctx.n_max(12) {
            cases.push(Case::new("legendre").with("n", n as i64));
        }
        cases
    },
    verify: |ctx, case| {
        let n = case.index("n");
        match case.label {
            "jacobi" => {
                let (a, b) = (case.int("alpha"), case.int("beta"));
                expect_eq(&signed(&reflect(&ctx.jacobi(n, a, b)), n), &ctx.jacobi(n, b, a))
            }
            "shifted-jacobi" => {
                let (a, b) = (case.int("alpha"), case.int("beta"));
                expect_eq(
                    &signed(&reflect(&ctx.shifted_jacobi(n, a, b)), n),
                    &shift_one(&ctx.shifted_jacobi(n, b, a)),
                )
            }
            "shifted-legendre" => {
                let p = ctx.shifted_legendre(n);
                expect_eq(&signed(&reflect(&p), n), &shift_one(&p))
            }
            _ => {
                let p = ctx.legendre(n);
                expect_eq(&signed(&reflect(&p), n), &p)
            }
        }
    },
    notes: None,
};

pub(super) const ABDEC: IdentityCheck = IdentityCheck {
    id: "abdec",
    description: "(x-1)^a Pt_n^{(a,b)} decomposed over the (0, c) family",
    statement: "(x-1)^a Pt_n^{(a,b)}(x) = sum_i (-1)^i C(a,i) x^{a-i} Pt_n^{(0,a+b-i)}(x)",
    grid: |ctx| {
        let mut cases = Vec::new();
        for n in 0..=ctx.n_max(6) {
            for alpha in 0..=4 {
                for beta in 0..=3 {
                    cases.push(
                        Case::new("decomposition")
                            .with("n", n as i64)
                            .with("alpha", alpha)
                            .with("beta", beta),
                    );
                }
            }
        }
        cases
    },
    verify: |ctx, case| {
        let (n, alpha, beta) = (case.index("n"), case.index("alpha"), case.int("beta"));
        let lhs = &xm1().pow(alpha) * &ctx.shifted_jacobi(n, alpha as i64, beta);
        let mut rhs = Polynomial::zero();
        for i in 0..=alpha {
            let c = Rational::from(sign(i as u64) * binom_general(alpha as i64, i as u64));
            let term = ctx
                .shifted_jacobi(n, 0, alpha as i64 + beta - i as i64)
                .shift_up(alpha - i)
                .scale(&c);
            rhs = &rhs + &term;
        }
        expect_eq(&lhs, &rhs)
    },
    notes: None,
};

pub(super) const BNEG: IdentityCheck = IdentityCheck {
    id: "bneg",
    description: "shifted Jacobi polynomials with negative beta factor through x^beta",
    statement: "Pt_n^{(0,-b)}(x) = x^b Pt_{n-b}^{(0,b)}(x), n >= b",
    grid: |ctx| {
        let mut cases = Vec::new();
        for beta in 0..=6 {
            for n in beta..=ctx.n_max(10) {
                cases.push(
                    Case::new("factor")
                        .with("beta", beta as i64)
                        .with("n", n as i64),
                );
            }
        }
        cases
    },
    verify: |ctx, case| {
        let (beta, n) = (case.index("beta"), case.index("n"));
        let rhs = ctx.shifted_jacobi(n - beta, 0, beta as i64).shift_up(beta);
        expect_eq(&ctx.shifted_jacobi(n, 0, -(beta as i64)), &rhs)
    },
    notes: None,
};

pub(super) const BNEG_SYMMETRY: IdentityCheck = IdentityCheck {
    id: "bneg-symmetry",
    description: "index symmetry n <-> beta-1-n for negative beta",
    statement: "R_n^{(0,-b)} = R_{b-1-n}^{(0,-b)}, 0 <= n < b",
    grid: |ctx| {
        let mut cases = Vec::new();
        for beta in 1..=12 {
            for n in 0..(beta as usize).min(ctx.n_max(12) + 1) {
                cases.push(Case::new("symmetry").with("beta", beta).with("n", n as i64));
            }
        }
        cases
    },
    verify: |ctx, case| {
        let (beta, n) = (case.int("beta"), case.index("n"));
        let mirror = beta as usize - 1 - n;
        expect_eq(
            &ctx.romanovski(n, 0, -beta),
            &ctx.romanovski(mirror, 0, -beta),
        )?;
        expect_eq(&ctx.jacobi(n, 0, -beta), &ctx.jacobi(mirror, 0, -beta))?;
        expect_eq(
            &ctx.shifted_jacobi(n, 0, -beta),
            &ctx.shifted_jacobi(mirror, 0, -beta),
        )
    },
    notes: None,
};

/// `Pt_n^{(0,-6)}` for `n = 0..=6`.
pub const TABLE_ONE: [&str; 7] = [
    "1",
    "-4x + 5",
    "3x^2 - 12x + 10",
    "3x^2 - 12x + 10",
    "-4x + 5",
    "1",
    "x^6",
];

pub(super) const BNEG_TABLE1: IdentityCheck = IdentityCheck {
    id: "bneg-table1",
    description: "the shifted Jacobi polynomials with parameters (0, -6)",
    statement: "Pt_n^{(0,-6)}, n = 0..6",
    grid: |ctx| {
        (0..=ctx.n_max(6))
            .map(|n| Case::new("row").with("n", n as i64))
            .collect()
    },
    verify: |ctx, case| {
        let n = case.index("n");
        let row: Polynomial = TABLE_ONE[n].parse()?;
        expect_eq(&ctx.shifted_jacobi(n, 0, -6), &row)
    },
    notes: None,
};

fn iterated_antiderivative(p: &Polynomial, times: usize) -> Polynomial {
    (0..times).fold(p.clone(), |acc, _| acc.antiderivative())
}

pub(super) const ANTIDERIV: IdentityCheck = IdentityCheck {
    id: "antideriv",
    description: "antiderivatives of shifted Legendre polynomials",
    statement: "x S_n(x) = int_0^x Pt_n; a-fold int_0^x Pt_n = (x-1)^a Pt_n^{(a,-a)}(x) / (n+1)_a for n >= a; a-fold int_0^x Pt_n = sum_j (-1)^{n-j} C(n,j) C(n+j,n) x^{j+a} / (j+1)_a",
    grid: |ctx| {
        let mut cases: Vec<Case> = (0..=ctx.n_max(10))
            .map(|n| Case::new("schroder").with("n", n as i64))
            .collect();
        for n in 1..=ctx.n_max(8) {
            for alpha in 1..=n.min(4) {
                cases.push(Case::new("jacobi").with("n", n as i64).with("alpha", alpha as i64));
            }
        }
        for n in 0..=ctx.n_max(3) {
            for alpha in n + 1..=4 {
                cases.push(
                    Case::new("jacobi-derivative")
                        .with("n", n as i64)
                        .with("alpha", alpha as i64),
                );
            }
        }
        for n in 0..=ctx.n_max(8) {
            for alpha in 1..=4 {
                cases.push(Case::new("expansion").with("n", n as i64).with("alpha", alpha));
            }
        }
        cases
    },
    verify: |ctx, case| {
        let n = case.index("n");
        let p = ctx.shifted_legendre(n);
        match case.label {
            "schroder" => expect_eq(&ctx.schroder(n).shift_up(1), &p.antiderivative()),
            "jacobi" => {
                let alpha = case.index("alpha");
                expect_eq(&iterated_antiderivative(&p, alpha), &jacobi_antiderivative(ctx, n, alpha))
            }
            "jacobi-derivative" => {
                let alpha = case.index("alpha");
                let rhs = jacobi_antiderivative(ctx, n, alpha);
                let derived = (0..alpha).fold(rhs, |acc, _| acc.derivative());
                expect_eq(&derived, &p)
            }
            _ => {
                let alpha = case.index("alpha");
                let mut rhs = Polynomial::zero();
                for j in 0..=n {
                    let c = Rational::from(
                        sign((n - j) as u64)
                            * binom_general(n as i64, j as u64)
                            * binom_general((n + j) as i64, n as u64),
                    ) / pochhammer(&rat(j as i64 + 1), alpha as u64);
                    rhs = &rhs + &Polynomial::monomial(c, j + alpha);
                }
                expect_eq(&iterated_antiderivative(&p, alpha), &rhs)
            }
        }
    },
    notes: Some(|ctx| {
        let mut notes = Vec::new();
        for n in 0..=ctx.n_max(3) {
            for alpha in n + 1..=4 {
                let gap = &jacobi_antiderivative(ctx, n, alpha)
                    - &iterated_antiderivative(&ctx.shifted_legendre(n), alpha);
                notes.push(format!(
                    "n = {n}, alpha = {alpha}: (x-1)^a Pt_n^(a,-a)/(n+1)_a exceeds the a-fold antiderivative by {gap}"
                ));
            }
        }
        notes
    }),
};

/// `(x-1)^a Pt_n^{(a,-a)}(x) / (n+1)_a`.
pub(crate) fn jacobi_antiderivative(ctx: &Ctx, n: usize, alpha: usize) -> Polynomial {
    (&xm1().pow(alpha) * &ctx.shifted_jacobi(n, alpha as i64, -(alpha as i64)))
        .scale(&pochhammer(&rat(n as i64 + 1), alpha as u64).recip())
}

pub(super) const NARAYANA: IdentityCheck = IdentityCheck {
    id: "narayana",
    description:
        "Narayana polynomials from shifted Legendre antiderivatives and shifted Jacobi polynomials",
    statement:
        "N_n(x) = (x-1)^{n+1} int_0^{x/(x-1)} Pt_n; (n+1) N_n(x) = (x-1)^n Pt_n^{(1,-1)}(x/(x-1))",
    grid: |ctx| {
        let mut cases = Vec::new();
        for label in ["integral", "jacobi"] {
            for n in 1..=ctx.n_max(10) {
                cases.push(Case::new(label).with("n", n as i64));
            }
        }
        cases
    },
    verify: |ctx, case| {
        let n = case.index("n");
        let narayana = ctx.narayana(n)?;
        expect(
            narayana.has_integer_coeffs(),
            &narayana,
            "integer coefficients",
        )?;
        match case.label {
            "integral" => {
                let rhs = ctx.shifted_legendre(n).antiderivative().cayley(n + 1)?;
                expect_eq(&narayana, &rhs)
            }
            _ => {
                let rhs = ctx.shifted_jacobi(n, 1, -1).cayley(n)?;
                expect_eq(&narayana.scale(&rat(n as i64 + 1)), &rhs)
            }
        }
    },
    notes: None,
};
