use num_traits::Zero;

use super::lattice::symbolic_v;
use super::{expect_eq, rpow, sweep_uw, Case, IdentityCheck};
use crate::exact::{rat, ratio, Rational};
use crate::orthopoly::{schroder_closed, schroder_closed_catalan_free, schroder_via_jacobi};
use crate::paths::{enumeration_weight, schroder_enumerate, schroder_weighted, WeightTriple};
use crate::poly::Polynomial;

pub(super) const SCHRODER: IdentityCheck = IdentityCheck {
    id: "schroder",
    description: "Schroder numbers and polynomials by paths, closed forms and shifted Jacobi polynomials",
    statement: "s_n^{u,v,w} = (-w)^n S_n(-uv/w); (n+1) uv s_n^{u,v,w} = (-w)^n (uv+w) Pt_n^{(1,-1)}(-uv/w); s_n = 2/(n+1) P_n^{(-1,1)}(3)",
    grid: |ctx| {
        let mut cases = Vec::new();
        let mut push = |label, lo: usize, hi: usize| {
            for n in lo..=ctx.n_max(hi) {
                cases.push(Case::new(label).with("n", n as i64));
            }
        };
        push("enumeration", 0, 6);
        push("closed", 0, 10);
        push("jacobi-at-3", 1, 10);
        push("weighted", 0, 8);
        push("weighted-jacobi", 2, 8);
        push("weighted-jacobi-swap", 1, 8);
        cases
    },
    verify: |ctx, case| {
        let n = case.index("n");
        match case.label {
            "enumeration" => {
                let paths = schroder_enumerate(n, &ctx.config().caps)?;
                let model = WeightTriple::jacobi_model();
                expect_eq(&enumeration_weight(&paths, &model), &ctx.schroder(n))?;
                let count = schroder_weighted(n, &WeightTriple::ones()).coeff(0);
                expect_eq(&rat(paths.len() as i64), &count)
            }
            "closed" => {
                let s = ctx.schroder(n);
                expect_eq(&s, &schroder_closed(n))?;
                expect_eq(&s, &schroder_closed_catalan_free(n))?;
                if n >= 1 {
                    expect_eq(&s, &schroder_via_jacobi(n)?)?;
                }
                Ok(())
            }
            "jacobi-at-3" => {
                let count = schroder_weighted(n, &WeightTriple::ones()).coeff(0);
                let rhs = ctx.jacobi(n, -1, 1).eval(&rat(3)) * ratio(2, n as i64 + 1);
                expect_eq(&count, &rhs)
            }
            "weighted" => {
                let s = ctx.schroder(n);
                sweep_uw(2 * n, |u, w| {
                    let lhs = schroder_weighted(n, &symbolic_v(u, w));
                    let rhs = s
                        .compose_affine(&(-(u / w)), &Rational::zero())
                        .scale(&rpow(&-w, n as i64));
                    expect_eq(&lhs, &rhs)
                })
            }
            "weighted-jacobi" => {
                let p = ctx.shifted_jacobi(n, 1, -1);
                sweep_uw(2 * n + 1, |u, w| {
                    let uv = Polynomial::monomial(u.clone(), 1);
                    let lhs = (&uv * &schroder_weighted(n, &symbolic_v(u, w)))
                        .scale(&rat(n as i64 + 1));
                    let rhs = (&(&uv + &Polynomial::constant(w.clone()))
                        * &p.compose_affine(&(-(u / w)), &Rational::zero()))
                        .scale(&rpow(&-w, n as i64));
                    expect_eq(&lhs, &rhs)
                })
            }
            _ => {
                let p = ctx.shifted_jacobi(n, -1, 1);
                sweep_uw(2 * n + 1, |u, w| {
                    let uv = Polynomial::monomial(u.clone(), 1);
                    let lhs = (&uv * &schroder_weighted(n, &symbolic_v(u, w)))
                        .scale(&rat(n as i64 + 1));
                    let rhs = (&(&uv + &Polynomial::constant(w.clone()))
                        * &p.compose_affine(&(u / w), &rat(1)))
                        .scale(&rpow(w, n as i64));
                    expect_eq(&lhs, &rhs)
                })
            }
        }
    },
    notes: None,
};
