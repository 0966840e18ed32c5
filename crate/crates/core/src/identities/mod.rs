//! Registry of named identity checks and the runner that sweeps them over
//! parameter grids.
//!
//! Every check owns a grid of [`Case`]s, generated in lexicographic order,
//! and a verifier comparing two sides exactly. Running a check evaluates
//! its cases (in parallel when configured) and reports the first failing
//! case in grid order, so results are deterministic regardless of
//! scheduling.
//!
//! Identities in auxiliary weights `(u, v, w)` are checked with `v`
//! symbolic (the sides are compared as polynomials in `x = v`) and with
//! `u` and `w` ranging over `1..=m+n+1`, a grid that strictly exceeds the
//! degree of either side in those variables, so grid agreement proves the
//! identity.

mod jacobi;
mod lattice;
mod orthogonality;
mod schroder;

use std::fmt;
use std::time::Instant;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::orthopoly;
use crate::par;
use crate::paths::EnumerationCaps;
use crate::poly::Polynomial;

/// Runner configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Upper bound applied to the polynomial index `n` of every grid.
    pub max_n: Option<usize>,
    pub caps: EnumerationCaps,
    /// Largest `n + m + beta + 1` for which the factorial valid-pair
    /// enumeration is run inside the suite.
    pub pair_oracle_max: usize,
    pub parallel: bool,
    /// Perturbs one family member; used to check that the harness detects
    /// corrupted inputs.
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_n: None,
            caps: EnumerationCaps::default(),
            pair_oracle_max: 8,
            parallel: cfg!(feature = "parallel"),
            fault: None,
        }
    }
}

/// Polynomial families that can be targeted by a [`Fault`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Jacobi,
    ShiftedJacobi,
    Romanovski,
    Legendre,
    ShiftedLegendre,
    Laguerre,
    LaguerreGen,
    SjProduct,
    Schroder,
    Narayana,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Jacobi,
        Family::ShiftedJacobi,
        Family::Romanovski,
        Family::Legendre,
        Family::ShiftedLegendre,
        Family::Laguerre,
        Family::LaguerreGen,
        Family::SjProduct,
        Family::Schroder,
        Family::Narayana,
    ];
}

/// Adds 1 to the coefficient of `x^coefficient` in member `n` of `family`
/// (for every parameter value).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fault {
    pub family: Family,
    pub n: usize,
    pub coefficient: usize,
}

/// Family constructors as seen by the verifiers, with the configured fault
/// applied.
pub struct Ctx<'a> {
    config: &'a SuiteConfig,
}

impl<'a> Ctx<'a> {
    pub fn new(config: &'a SuiteConfig) -> Self {
        Self { config }
    }

    pub fn config(&self) -> &SuiteConfig {
        self.config
    }

    /// `default` capped by the configured `max_n`.
    pub fn n_max(&self, default: usize) -> usize {
        self.config.max_n.map_or(default, |cap| cap.min(default))
    }

    fn perturb(&self, family: Family, n: usize, p: Polynomial) -> Polynomial {
        match self.config.fault {
            Some(f) if f.family == family && f.n == n => {
                &p + &Polynomial::monomial(rat(1), f.coefficient)
            }
            _ => p,
        }
    }

    pub fn jacobi(&self, n: usize, alpha: i64, beta: i64) -> Polynomial {
        self.perturb(Family::Jacobi, n, orthopoly::jacobi(n, alpha, beta))
    }

    pub fn shifted_jacobi(&self, n: usize, alpha: i64, beta: i64) -> Polynomial {
        self.perturb(
            Family::ShiftedJacobi,
            n,
            orthopoly::shifted_jacobi(n, alpha, beta),
        )
    }

    pub fn romanovski(&self, n: usize, alpha: i64, beta: i64) -> Polynomial {
        self.perturb(Family::Romanovski, n, orthopoly::romanovski(n, alpha, beta))
    }

    pub fn legendre(&self, n: usize) -> Polynomial {
        self.perturb(Family::Legendre, n, orthopoly::legendre(n))
    }

    pub fn shifted_legendre(&self, n: usize) -> Polynomial {
        self.perturb(Family::ShiftedLegendre, n, orthopoly::shifted_legendre(n))
    }

    pub fn laguerre(&self, n: usize) -> Polynomial {
        self.perturb(Family::Laguerre, n, orthopoly::laguerre(n))
    }

    pub fn laguerre_gen(&self, n: usize, beta: usize) -> Polynomial {
        self.perturb(Family::LaguerreGen, n, orthopoly::laguerre_gen(n, beta))
    }

    pub fn sj_product(&self, n: usize, alpha: usize, beta: i64) -> Polynomial {
        self.perturb(
            Family::SjProduct,
            n,
            orthopoly::sj_product_expansion(n, alpha, beta),
        )
    }

    pub fn schroder(&self, n: usize) -> Polynomial {
        self.perturb(Family::Schroder, n, orthopoly::schroder_poly(n))
    }

    pub fn narayana(&self, n: usize) -> Result<Polynomial> {
        Ok(self.perturb(Family::Narayana, n, orthopoly::narayana(n)?))
    }
}

/// One grid point: a label naming which part of the identity is checked,
/// plus named parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub label: &'static str,
    pub params: Vec<(&'static str, Rational)>,
}

impl Case {
    pub fn new(label: &'static str) -> Self {
        Self {
            label,
            params: Vec::new(),
        }
    }

    pub fn with(mut self, name: &'static str, value: i64) -> Self {
        self.params.push((name, rat(value)));
        self
    }

    fn value(&self, name: &str) -> &Rational {
        self.params
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| v)
            .unwrap_or_else(|| panic!("case `{}` has no parameter `{name}`", self.label))
    }

    pub fn int(&self, name: &str) -> i64 {
        i64::try_from(self.value(name).to_integer()).expect("grid parameters are small")
    }

    pub fn index(&self, name: &str) -> usize {
        usize::try_from(self.int(name)).expect("index parameters are nonnegative")
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { ": " } else { ", " })?;
        }
        Ok(())
    }
}

/// Why a case failed: the two sides as rendered text, plus any inner grid
/// coordinates (such as weight points) the verifier swept itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub lhs: String,
    pub rhs: String,
    pub at: Vec<(&'static str, Rational)>,
}

impl Mismatch {
    pub fn new(lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Self {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            at: Vec::new(),
        }
    }

    fn error(err: Error) -> Self {
        Self::new(format!("error: {err}"), "a value")
    }

    fn at(mut self, coords: &[(&'static str, Rational)]) -> Self {
        self.at.extend_from_slice(coords);
        self
    }
}

impl From<Error> for Mismatch {
    fn from(err: Error) -> Self {
        Self::error(err)
    }
}

pub type Outcome = std::result::Result<(), Mismatch>;

pub(crate) fn expect_eq<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Mismatch::new(lhs, rhs))
    }
}

pub(crate) fn expect(condition: bool, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Outcome {
    if condition {
        Ok(())
    } else {
        Err(Mismatch::new(lhs, rhs))
    }
}

/// A named, parameterized identity.
pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    /// The identity in symbols.
    pub statement: &'static str,
    grid: fn(&Ctx) -> Vec<Case>,
    verify: fn(&Ctx, &Case) -> Outcome,
    notes: Option<fn(&Ctx) -> Vec<String>>,
}

impl IdentityCheck {
    /// The grid in evaluation order.
    pub fn cases(&self, ctx: &Ctx) -> Vec<Case> {
        (self.grid)(ctx)
    }

    pub fn check_case(&self, ctx: &Ctx, case: &Case) -> Outcome {
        (self.verify)(ctx, case)
    }

    pub fn notes(&self, ctx: &Ctx) -> Vec<String> {
        self.notes.map(|f| f(ctx)).unwrap_or_default()
    }
}

impl fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// The first failing grid point of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub case: String,
    #[serde(serialize_with = "ordered_params")]
    pub params: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

fn ordered_params<S: Serializer>(
    params: &[(String, String)],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut map = serializer.serialize_map(Some(params.len()))?;
    for (k, v) in params {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.case)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { ": " } else { ", " })?;
        }
        write!(f, "; lhs = {}, rhs = {}", self.lhs, self.rhs)
    }
}

/// Outcome of running one identity over its grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub status: Status,
    /// Cases evaluated: the whole grid on success, up to and including the
    /// first failure otherwise.
    pub cases_run: usize,
    pub counterexample: Option<Counterexample>,
    pub millis: u64,
    /// Observations recorded alongside the verdict (values that are
    /// reported rather than asserted).
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

static REGISTRY: &[IdentityCheck] = &[
    lattice::WD_CLOSED_VS_DP_VS_ENUM,
    lattice::WCD_LEGENDRE,
    lattice::WCD_LEGENDRE_SWAP,
    lattice::WD_JACOBI,
    lattice::WD_JACOBI_SWAP,
    lattice::DP,
    lattice::DP1,
    lattice::LLP,
    lattice::MODIFIED_DELANNOY,
    lattice::MOTZKIN_MOMENTS,
    lattice::CDREC,
    jacobi::SJ_EXPANSION,
    jacobi::DUAL_ROUTES,
    jacobi::SWAP_RULES,
    jacobi::ABDEC,
    jacobi::BNEG,
    jacobi::BNEG_SYMMETRY,
    jacobi::BNEG_TABLE1,
    jacobi::ANTIDERIV,
    jacobi::NARAYANA,
    orthogonality::ORTH_0BETA,
    orthogonality::ORTH_FULL,
    orthogonality::EPL,
    orthogonality::LAGUERRE_ORTH,
    orthogonality::ROMANOVSKI_ORTH,
    orthogonality::BORTH2,
    orthogonality::FAVARD_LEGENDRE,
    orthogonality::FAVARD_SCHRODER,
    schroder::SCHRODER,
];

/// All registered checks.
pub fn registry() -> &'static [IdentityCheck] {
    REGISTRY
}

pub fn find(id: &str) -> Result<&'static IdentityCheck> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Runs one check over its whole grid.
pub fn run_check(check: &IdentityCheck, config: &SuiteConfig) -> IdentityReport {
    let ctx = Ctx::new(config);
    let start = Instant::now();
    let cases = check.cases(&ctx);
    let failure = par::find_first(&cases, config.parallel, |case| {
        check.check_case(&ctx, case).err()
    });
    let (status, cases_run, counterexample) = match failure {
        None => (Status::Pass, cases.len(), None),
        Some((index, mismatch)) => {
            let case = &cases[index];
            let params = case
                .params
                .iter()
                .chain(&mismatch.at)
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect();
            (
                Status::Fail,
                index + 1,
                Some(Counterexample {
                    case: case.label.to_string(),
                    params,
                    lhs: mismatch.lhs,
                    rhs: mismatch.rhs,
                }),
            )
        }
    };
    let notes = check.notes(&ctx);
    IdentityReport {
        id: check.id.to_string(),
        status,
        cases_run,
        counterexample,
        millis: start.elapsed().as_millis() as u64,
        notes,
    }
}

/// Runs the check registered under `id`.
pub fn run_identity(id: &str, config: &SuiteConfig) -> Result<IdentityReport> {
    Ok(run_check(find(id)?, config))
}

/// Runs every registered check; reports are sorted by id.
pub fn run_all(config: &SuiteConfig) -> Vec<IdentityReport> {
    let mut reports = par::map(REGISTRY, config.parallel, |check| run_check(check, config));
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

/// Runs checks in registry order and stops at the first failing one.
pub fn run_until_failure(config: &SuiteConfig) -> Option<IdentityReport> {
    REGISTRY
        .iter()
        .map(|check| run_check(check, config))
        .find(|report| !report.passed())
}

// Helpers shared by the check modules.

/// Weight grid `1..=bound+1` for one auxiliary variable whose degree is at
/// most `bound`.
pub(crate) fn weight_points(bound: usize) -> Vec<Rational> {
    (1..=bound as i64 + 1).map(rat).collect()
}

/// `base^exp` for a possibly negative exponent; `base` must be nonzero
/// when `exp < 0`.
pub(crate) fn rpow(base: &Rational, exp: i64) -> Rational {
    let p = crate::exact::pow_rational(base, exp.unsigned_abs());
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// Sweeps `(u, w)` over the square weight grid, stopping at the first
/// point where `check` fails.
pub(crate) fn sweep_uw(
    bound: usize,
    mut check: impl FnMut(&Rational, &Rational) -> Outcome,
) -> Outcome {
    let points = weight_points(bound);
    for u in &points {
        for w in &points {
            check(u, w).map_err(|m| m.at(&[("u", u.clone()), ("w", w.clone())]))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_grids_nonempty() {
        let config = SuiteConfig::default();
        let ctx = Ctx::new(&config);
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
        for check in registry() {
            assert!(
                !check.cases(&ctx).is_empty(),
                "{} has an empty grid",
                check.id
            );
        }
    }

    #[test]
    fn unknown_identity() {
        assert_eq!(
            run_identity("nonexistent", &SuiteConfig::default()),
            Err(Error::UnknownIdentity("nonexistent".into()))
        );
    }

    #[test]
    fn table_one_has_seven_cases() {
        let report = run_identity("bneg-table1", &SuiteConfig::default()).unwrap();
        assert!(report.passed());
        assert_eq!(report.cases_run, 7);
    }

    #[test]
    fn fault_reports_first_failing_case() {
        let config = SuiteConfig {
            fault: Some(Fault {
                family: Family::Jacobi,
                n: 2,
                coefficient: 0,
            }),
            ..SuiteConfig::default()
        };
        let report = run_identity("dp1", &config).unwrap();
        assert_eq!(report.status, Status::Fail);
        let ce = report.counterexample.unwrap();
        // grid order is n then alpha, alpha starting at -n
        assert_eq!(ce.params[0], ("n".to_string(), "2".to_string()));
        assert_eq!(ce.params[1], ("alpha".to_string(), "-2".to_string()));
    }

    #[test]
    fn negative_powers() {
        assert_eq!(rpow(&rat(2), -3), crate::exact::ratio(1, 8));
        assert_eq!(rpow(&rat(3), 2), rat(9));
    }
}
