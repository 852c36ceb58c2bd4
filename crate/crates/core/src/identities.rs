//! The identity catalog and its verification harness.
//!
//! Every identity is checked the same way: the left-hand side is computed
//! from the recurrence oracle only, the right-hand side from the closed form
//! only (period-3 tables, powers of two, `ρ` and the quartic constant), and
//! the two are compared exactly. Nothing on the right-hand side touches
//! [`crate::sequences::term`], so a bug in one path cannot hide in the other.
//!
//! Identities over the fixed Jacobsthal / Jacobsthal-Lucas sequences
//! (`E*`, `*_J`) ignore the caller's parameters and always run on the seeds
//! `(0, 1, 1)` and `(2, 1, 5)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{int, pow2, render, Rational};
use crate::closed_forms::{decomposed_term, jacobsthal_closed, jacobsthal_lucas_closed};
use crate::error::{domain, Error, Result};
use crate::sequences::{companions, PeriodicTriple, SequenceParams, Terms};
use crate::sums::prefix_sum_closed;

/// Number of failing instances a [`Report`] keeps verbatim.
pub const MAX_REPORTED_FAILURES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `3J(n) + j(n) = 2^(n+1)`
    E4,
    /// `j(n) - 3J(n) = 2 j(n-3)`, `n >= 3`
    E5,
    /// `J(n+2) - 4J(n) = -2` if `n ≡ 1`, else `1`
    Ec5,
    /// `j(n) - 4J(n) = 2, -3, 1` by `n mod 3`
    E6,
    /// `j(n+1) + j(n) = 3J(n+2)`
    E7,
    /// `j(n) - J(n+2) = 1, -1, 0` by `n mod 3`
    E8,
    /// `j(n-3)² + 3J(n)j(n) = 4^n`, `n >= 3`
    E9,
    /// `Σ_{k<=n} J(k) = J(n+1)`, less 1 when `n ≡ 0`
    E10,
    /// `j(n)² - 9J(n)² = 2^(n+2) j(n-3)`, `n >= 3`
    E12,
    CatalanJ,
    CassiniJ,
    GelinCesaroJ,
    CatalanGen,
    CassiniGen,
    GelinCesaroGen,
    GelinCesaroCases,
}

impl IdentityId {
    pub const ALL: [IdentityId; 16] = [
        IdentityId::E4,
        IdentityId::E5,
        IdentityId::Ec5,
        IdentityId::E6,
        IdentityId::E7,
        IdentityId::E8,
        IdentityId::E9,
        IdentityId::E10,
        IdentityId::E12,
        IdentityId::CatalanJ,
        IdentityId::CassiniJ,
        IdentityId::GelinCesaroJ,
        IdentityId::CatalanGen,
        IdentityId::CassiniGen,
        IdentityId::GelinCesaroGen,
        IdentityId::GelinCesaroCases,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::E4 => "e4",
            IdentityId::E5 => "e5",
            IdentityId::Ec5 => "ec5",
            IdentityId::E6 => "e6",
            IdentityId::E7 => "e7",
            IdentityId::E8 => "e8",
            IdentityId::E9 => "e9",
            IdentityId::E10 => "e10",
            IdentityId::E12 => "e12",
            IdentityId::CatalanJ => "catalan-j",
            IdentityId::CassiniJ => "cassini-j",
            IdentityId::GelinCesaroJ => "gelin-cesaro-j",
            IdentityId::CatalanGen => "catalan-gen",
            IdentityId::CassiniGen => "cassini-gen",
            IdentityId::GelinCesaroGen => "gelin-cesaro-gen",
            IdentityId::GelinCesaroCases => "gelin-cesaro-cases",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::E4 => "3J(n) + j(n) = 2^(n+1)",
            IdentityId::E5 => "j(n) - 3J(n) = 2j(n-3)",
            IdentityId::Ec5 => "J(n+2) - 4J(n) = -2 if n=1 (mod 3), else 1",
            IdentityId::E6 => "j(n) - 4J(n) = 2, -3, 1 by n mod 3",
            IdentityId::E7 => "j(n+1) + j(n) = 3J(n+2)",
            IdentityId::E8 => "j(n) - J(n+2) = 1, -1, 0 by n mod 3",
            IdentityId::E9 => "j(n-3)^2 + 3J(n)j(n) = 4^n",
            IdentityId::E10 => "sum J(0..=n) = J(n+1), minus 1 when n=0 (mod 3)",
            IdentityId::E12 => "j(n)^2 - 9J(n)^2 = 2^(n+2) j(n-3)",
            IdentityId::CatalanJ => "Catalan identity for J(n)",
            IdentityId::CassiniJ => "Cassini identity for J(n) (Catalan at r = 1)",
            IdentityId::GelinCesaroJ => "Gelin-Cesaro identity for J(n), residue-case form in W(n)",
            IdentityId::CatalanGen => "Catalan identity for generalized seeds",
            IdentityId::CassiniGen => "Cassini identity for generalized seeds (Catalan at r = 1)",
            IdentityId::GelinCesaroGen => "Gelin-Cesaro identity for generalized seeds, W(n) form",
            IdentityId::GelinCesaroCases => {
                "Gelin-Cesaro identity for generalized seeds, residue constants A, B, C and T(n)"
            }
        }
    }

    /// Smallest legal `n`.
    pub fn min_n(self) -> i64 {
        match self {
            IdentityId::E5 | IdentityId::E9 | IdentityId::E12 => 3,
            IdentityId::GelinCesaroJ | IdentityId::GelinCesaroGen | IdentityId::GelinCesaroCases => 2,
            IdentityId::CassiniJ | IdentityId::CassiniGen => 1,
            _ => 0,
        }
    }

    /// Whether the identity takes a free shift `r` (with `0 <= r <= n`).
    pub fn uses_r(self) -> bool {
        matches!(self, IdentityId::CatalanJ | IdentityId::CatalanGen)
    }

    /// Whether the identity is stated only for the fixed Jacobsthal seeds.
    pub fn fixed_params(self) -> bool {
        !matches!(
            self,
            IdentityId::CatalanGen
                | IdentityId::CassiniGen
                | IdentityId::GelinCesaroGen
                | IdentityId::GelinCesaroCases
        )
    }

    pub fn valid_names() -> String {
        Self::ALL.iter().map(|id| id.name()).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        Self::ALL
            .iter()
            .copied()
            .find(|id| id.name() == wanted)
            .ok_or_else(|| Error::UnknownIdentity { name: s.to_string(), valid: Self::valid_names() })
    }
}

/// Outcome of one identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: IdentityId,
    /// Seeds actually used (the fixed Jacobsthal seeds for `E*` and `*_J`).
    pub params: SequenceParams,
    pub n: i64,
    pub r: Option<i64>,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
    /// Named intermediate values of the right-hand side.
    pub witness: BTreeMap<String, Rational>,
}

/// Which printed form of the generalized Gelin-Cesàro identity to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GelinCesaroMode {
    /// Bracket in `W(n+1)`, `W(n+2)`.
    General,
    /// Residue-split constants `A, B, C` and `T(n)`.
    Cases,
}

fn oracle(params: &SequenceParams, upto: i64) -> Vec<Rational> {
    Terms::new(params).take(upto as usize + 1).collect()
}

fn validate(id: IdentityId, n: i64, r: Option<i64>) -> Result<Option<i64>> {
    if n < id.min_n() {
        return Err(domain(format!("{id} requires n >= {}, got n = {n}", id.min_n())));
    }
    match (id, r) {
        (IdentityId::CatalanJ | IdentityId::CatalanGen, None) => {
            Err(domain(format!("{id} requires a shift r")))
        }
        (IdentityId::CatalanJ | IdentityId::CatalanGen, Some(r)) if r < 0 || r > n => {
            Err(domain(format!("{id} requires 0 <= r <= n, got n = {n}, r = {r}")))
        }
        (IdentityId::CassiniJ | IdentityId::CassiniGen, Some(r)) if r != 1 => {
            Err(domain(format!("{id} is the r = 1 case, got r = {r}")))
        }
        (IdentityId::CassiniJ | IdentityId::CassiniGen, _) => Ok(Some(1)),
        (_, Some(r)) if !id.uses_r() => Err(domain(format!("{id} takes no shift r, got r = {r}"))),
        (_, r) => Ok(r),
    }
}

/// Catalan right-hand side for general seeds:
///
/// ```text
/// (1/49)·{ 2^n ρ (2^r V(n-r) - 2V(n) + 2^(-r) V(n+r)) + 7·q·U(r)² }
/// ```
///
/// with `q = 4a² + 3b² + c² - 2ac - 3bc`.
pub fn catalan_rhs(params: &SequenceParams, n: i64, r: i64) -> Result<Rational> {
    if r < 0 || r > n {
        return Err(domain(format!("Catalan requires 0 <= r <= n, got n = {n}, r = {r}")));
    }
    let c = companions(params);
    let v = &c.v_gen;
    let bracket = pow2(r) * v.at(n - r) - int(2) * v.at(n) + pow2(-r) * v.at(n + r);
    let u = c.u.at(r);
    Ok((pow2(n) * params.rho() * bracket + int(7) * params.quartic() * u * u) / int(49))
}

/// Catalan right-hand side on the fixed `(2, -3, 1)` table:
/// `(1/49)·{ 2^(n+1) (2^r V(n-r) - 2V(n) + 2^(-r) V(n+r)) + 7·U(r)² }`.
pub fn catalan_rhs_jacobsthal(n: i64, r: i64) -> Result<Rational> {
    if r < 0 || r > n {
        return Err(domain(format!("Catalan requires 0 <= r <= n, got n = {n}, r = {r}")));
    }
    let v = PeriodicTriple::from_ints(2, -3, 1);
    let u = PeriodicTriple::from_ints(0, 1, -1);
    let bracket = pow2(r) * v.at(n - r) - int(2) * v.at(n) + pow2(-r) * v.at(n + r);
    Ok((pow2(n + 1) * bracket + int(7) * u.at(r) * u.at(r)) / int(49))
}

/// Residue-split constants `A, B, C` (by `n mod 3`) of the generalized
/// Gelin-Cesàro identity.
pub fn gelin_cesaro_constant(params: &SequenceParams, n: i64) -> Rational {
    let (a, b, c) = (params.a(), params.b(), params.c());
    match n.rem_euclid(3) {
        0 => -c - int(10) * b + int(24) * a,
        1 => int(-11) * c + int(23) * b - int(2) * a,
        _ => int(12) * c - int(13) * b - int(22) * a,
    }
}

/// `T(n)` from its residue table.
pub fn gelin_cesaro_product(params: &SequenceParams, n: i64) -> Rational {
    let (a, b, c) = (params.a(), params.b(), params.c());
    let f1 = int(2) * c - b - int(6) * a;
    let f2 = c - int(4) * b + int(4) * a;
    let f0 = int(-3) * c + int(5) * b + int(2) * a;
    match n.rem_euclid(3) {
        0 => f1 * f2,
        1 => f2 * f0,
        _ => f0 * f1,
    }
}

/// Gelin-Cesàro right-hand side for general seeds:
///
/// ```text
/// (1/7)·{ J(n)²(2q + 2^(n-2) ρ K) - (1/7)(q² + 2^(n-2) ρ q K - 3·2^(2n-3) ρ² P) }
/// ```
///
/// where `K = 3W(n+2) - 2W(n+1)` and `P = W(n+1)W(n+2)` in
/// [`GelinCesaroMode::General`], or `K ∈ {A, B, C}` and `P = T(n)` in
/// [`GelinCesaroMode::Cases`]. `J(n)` is taken from the period-3 closed form.
pub fn gelin_cesaro_rhs(params: &SequenceParams, n: i64, mode: GelinCesaroMode) -> Result<Rational> {
    if n < 2 {
        return Err(domain(format!("Gelin-Cesaro requires n >= 2, got n = {n}")));
    }
    let (k, p) = match mode {
        GelinCesaroMode::General => {
            let w = companions(params).w_gen;
            (int(3) * w.at(n + 2) - int(2) * w.at(n + 1), w.at(n + 1) * w.at(n + 2))
        }
        GelinCesaroMode::Cases => (gelin_cesaro_constant(params, n), gelin_cesaro_product(params, n)),
    };
    let jn = decomposed_term(params, n as u64);
    let (q, rho) = (params.quartic(), params.rho());
    let scaled = pow2(n - 2) * rho * &k;
    let first = &jn * &jn * (int(2) * q + &scaled);
    let second = q * q + &scaled * q - int(3) * pow2(2 * n - 3) * rho * rho * p;
    Ok((first - second / int(7)) / int(7))
}

/// Gelin-Cesàro right-hand side for the Jacobsthal numbers, residue-case
/// form: `(1/7)·{ J(n)²(2 + k·2^(n-1)) - (1/7)(1 + k·2^(n-1) + l·2^(2n-1)) }`
/// with `(k, l) = (-11, 9), (12, 18), (-1, -6)` for `n ≡ 0, 1, 2`.
pub fn gelin_cesaro_rhs_jacobsthal(n: i64) -> Result<Rational> {
    if n < 2 {
        return Err(domain(format!("Gelin-Cesaro requires n >= 2, got n = {n}")));
    }
    let (k, l) = match n.rem_euclid(3) {
        0 => (-11, 9),
        1 => (12, 18),
        _ => (-1, -6),
    };
    let jn = jacobsthal_closed(n as u64);
    let half = pow2(n - 1);
    let first = &jn * &jn * (int(2) + int(k) * &half);
    let second = int(1) + int(k) * half + int(l) * pow2(2 * n - 1);
    Ok((first - second / int(7)) / int(7))
}

/// Checks one identity instance.
///
/// `r` is required by the Catalan identities, optional (and must be 1) for
/// Cassini, and rejected by everything else.
pub fn check(id: IdentityId, params: &SequenceParams, n: i64, r: Option<i64>) -> Result<CheckResult> {
    let r = validate(id, n, r)?;
    let params = if id.fixed_params() { SequenceParams::jacobsthal() } else { params.clone() };
    let mut witness = BTreeMap::new();
    let nu = n as usize;
    let nn = n as u64;

    let (lhs, rhs) = match id {
        IdentityId::E4
        | IdentityId::E5
        | IdentityId::Ec5
        | IdentityId::E6
        | IdentityId::E7
        | IdentityId::E8
        | IdentityId::E9
        | IdentityId::E10
        | IdentityId::E12 => {
            let jac = oracle(&SequenceParams::jacobsthal(), n + 2);
            let luc = oracle(&SequenceParams::jacobsthal_lucas(), n + 2);
            witness.insert("J(n)".into(), jacobsthal_closed(nn));
            witness.insert("j(n)".into(), jacobsthal_lucas_closed(nn));
            match id {
                IdentityId::E4 => (int(3) * &jac[nu] + &luc[nu], pow2(n + 1)),
                IdentityId::E5 => {
                    let back = jacobsthal_lucas_closed(nn - 3);
                    witness.insert("j(n-3)".into(), back.clone());
                    (&luc[nu] - int(3) * &jac[nu], int(2) * back)
                }
                IdentityId::Ec5 => {
                    let rhs = if n.rem_euclid(3) == 1 { int(-2) } else { int(1) };
                    (&jac[nu + 2] - int(4) * &jac[nu], rhs)
                }
                IdentityId::E6 => {
                    let v = PeriodicTriple::from_ints(2, -3, 1);
                    (&luc[nu] - int(4) * &jac[nu], v.at(n).clone())
                }
                IdentityId::E7 => {
                    (&luc[nu + 1] + &luc[nu], int(3) * jacobsthal_closed(nn + 2))
                }
                IdentityId::E8 => {
                    let table = PeriodicTriple::from_ints(1, -1, 0);
                    (&luc[nu] - &jac[nu + 2], table.at(n).clone())
                }
                IdentityId::E9 => {
                    let back = &luc[nu - 3];
                    (back * back + int(3) * &jac[nu] * &luc[nu], pow2(2 * n))
                }
                IdentityId::E10 => (jac[..=nu].iter().sum(), prefix_sum_closed(nn)),
                IdentityId::E12 => {
                    let back = jacobsthal_lucas_closed(nn - 3);
                    witness.insert("j(n-3)".into(), back.clone());
                    (
                        &luc[nu] * &luc[nu] - int(9) * &jac[nu] * &jac[nu],
                        pow2(n + 2) * back,
                    )
                }
                _ => unreachable!(),
            }
        }
        IdentityId::CatalanJ | IdentityId::CassiniJ | IdentityId::CatalanGen | IdentityId::CassiniGen => {
            let r = r.expect("validated");
            let seq = oracle(&params, n + r);
            let (ru, lo) = (r as usize, (n - r) as usize);
            let lhs = &seq[nu] * &seq[nu] - &seq[lo] * &seq[nu + ru];
            let c = companions(&params);
            witness.insert("V(n-r)".into(), c.v_gen.at(n - r).clone());
            witness.insert("V(n)".into(), c.v_gen.at(n).clone());
            witness.insert("V(n+r)".into(), c.v_gen.at(n + r).clone());
            witness.insert("U(r)".into(), c.u.at(r).clone());
            let rhs = if matches!(id, IdentityId::CatalanJ | IdentityId::CassiniJ) {
                catalan_rhs_jacobsthal(n, r)?
            } else {
                catalan_rhs(&params, n, r)?
            };
            (lhs, rhs)
        }
        IdentityId::GelinCesaroJ | IdentityId::GelinCesaroGen | IdentityId::GelinCesaroCases => {
            let seq = oracle(&params, n + 2);
            let j4 = {
                let sq = &seq[nu] * &seq[nu];
                &sq * &sq
            };
            let lhs = j4 - &seq[nu - 2] * &seq[nu - 1] * &seq[nu + 1] * &seq[nu + 2];
            let w = companions(&params).w_gen;
            witness.insert("W(n+1)".into(), w.at(n + 1).clone());
            witness.insert("W(n+2)".into(), w.at(n + 2).clone());
            let rhs = match id {
                IdentityId::GelinCesaroJ => gelin_cesaro_rhs_jacobsthal(n)?,
                IdentityId::GelinCesaroGen => gelin_cesaro_rhs(&params, n, GelinCesaroMode::General)?,
                _ => {
                    witness.insert("K(n)".into(), gelin_cesaro_constant(&params, n));
                    witness.insert("T(n)".into(), gelin_cesaro_product(&params, n));
                    gelin_cesaro_rhs(&params, n, GelinCesaroMode::Cases)?
                }
            };
            (lhs, rhs)
        }
    };

    Ok(CheckResult { id, params, n, r, equal: lhs == rhs, lhs, rhs, witness })
}

/// Result of sweeping one identity over a grid of `(n, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub identity: IdentityId,
    pub params: SequenceParams,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// The first [`MAX_REPORTED_FAILURES`] failing instances, in `(n, r)` order.
    pub failures: Vec<CheckResult>,
}

impl Report {
    /// Tallies `results`, keeping the first [`MAX_REPORTED_FAILURES`] failures.
    pub fn from_results(identity: IdentityId, params: SequenceParams, results: Vec<CheckResult>) -> Self {
        let total = results.len();
        let mut failed = 0;
        let mut failures = Vec::new();
        for c in results.into_iter().filter(|c| !c.equal) {
            failed += 1;
            if failures.len() < MAX_REPORTED_FAILURES {
                failures.push(c);
            }
        }
        Report { identity, params, total, passed: total - failed, failed, failures }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report is always serializable")
    }
}

#[derive(Serialize)]
struct FailureJson {
    n: i64,
    r: Option<i64>,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    identity: &'a str,
    params: [String; 3],
    total: usize,
    passed: usize,
    failed: usize,
    failures: Vec<FailureJson>,
}

impl Serialize for Report {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let [a, b, c] = self.params.seeds();
        ReportJson {
            identity: self.identity.name(),
            params: [render(a), render(b), render(c)],
            total: self.total,
            passed: self.passed,
            failed: self.failed,
            failures: self
                .failures
                .iter()
                .map(|f| FailureJson { n: f.n, r: f.r, lhs: render(&f.lhs), rhs: render(&f.rhs) })
                .collect(),
        }
        .serialize(serializer)
    }
}

/// Legal `(n, r)` grid for `id` up to the given bounds, ordered by `(n, r)`.
fn grid(id: IdentityId, n_max: i64, r_max: Option<i64>) -> Vec<(i64, Option<i64>)> {
    let ns = id.min_n()..=n_max;
    if id.uses_r() {
        let r_cap = r_max.unwrap_or(n_max);
        ns.flat_map(|n| (0..=n.min(r_cap)).map(move |r| (n, Some(r)))).collect()
    } else {
        ns.map(|n| (n, None)).collect()
    }
}

/// Runs [`check`] over every legal `n <= n_max` (and `r <= min(n, r_max)`
/// for the Catalan identities). Instances are evaluated in parallel; the
/// report is ordered by `(n, r)` regardless.
pub fn verify_range(
    id: IdentityId,
    params: &SequenceParams,
    n_max: i64,
    r_max: Option<i64>,
) -> Result<Report> {
    if n_max < id.min_n() {
        return Err(domain(format!("{id} requires n_max >= {}, got {n_max}", id.min_n())));
    }
    if let Some(r) = r_max {
        if !id.uses_r() {
            return Err(domain(format!("{id} takes no shift r")));
        }
        if r < 0 {
            return Err(domain(format!("r_max must be >= 0, got {r}")));
        }
    }
    let results = grid(id, n_max, r_max)
        .into_par_iter()
        .map(|(n, r)| check(id, params, n, r))
        .collect::<Result<Vec<_>>>()?;
    let shown_params = if id.fixed_params() { SequenceParams::jacobsthal() } else { params.clone() };
    Ok(Report::from_results(id, shown_params, results))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::range;
    use proptest::prelude::*;

    fn jac() -> SequenceParams {
        SequenceParams::jacobsthal()
    }

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!("CATALAN_GEN".parse::<IdentityId>().unwrap(), IdentityId::CatalanGen);
        let err = "nosuch".parse::<IdentityId>().unwrap_err();
        assert!(err.to_string().contains("gelin-cesaro-cases"));
    }

    #[test]
    fn e4_instance() {
        let c = check(IdentityId::E4, &jac(), 5, None).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(64), int(64)));
        assert!(c.equal);
    }

    #[test]
    fn e9_and_e12_instances() {
        let e9 = check(IdentityId::E9, &jac(), 3, None).unwrap();
        assert_eq!(e9.lhs, int(64));
        assert!(e9.equal);
        let e12 = check(IdentityId::E12, &jac(), 3, None).unwrap();
        assert_eq!((e12.lhs.clone(), e12.rhs.clone()), (int(64), int(64)));
    }

    #[test]
    fn catalan_j_instance() {
        let c = check(IdentityId::CatalanJ, &jac(), 4, Some(2)).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(7), int(7)));
        assert_eq!(c.witness["U(r)"], int(-1));
    }

    #[test]
    fn catalan_gen_examples() {
        let p = SequenceParams::from_ints(1, 2, 3);
        assert_eq!(catalan_rhs(&p, 3, 1).unwrap(), int(7));
        assert_eq!(check(IdentityId::CatalanGen, &p, 3, Some(1)).unwrap().lhs, int(7));
        assert_eq!(catalan_rhs(&jac(), 4, 2).unwrap(), int(7));
        for n in 0..10 {
            assert_eq!(catalan_rhs(&SequenceParams::from_ints(-4, 7, 3), n, 0).unwrap(), int(0));
        }
    }

    #[test]
    fn gelin_cesaro_instances() {
        let c = check(IdentityId::GelinCesaroJ, &jac(), 2, None).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(1), int(1)));
        let c = check(IdentityId::GelinCesaroCases, &jac(), 3, None).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(-29), int(-29)));
        assert_eq!(gelin_cesaro_constant(&jac(), 3), int(-11));
        assert_eq!(gelin_cesaro_constant(&jac(), 4), int(12));
        assert_eq!(gelin_cesaro_rhs(&jac(), 2, GelinCesaroMode::General).unwrap(), int(1));
        let p = SequenceParams::from_ints(1, 2, 3);
        let seq = range(&p, 0, 6).unwrap();
        let lhs = seq[4].clone().pow(4) - &seq[2] * &seq[3] * &seq[5] * &seq[6];
        assert_eq!(gelin_cesaro_rhs(&p, 4, GelinCesaroMode::General).unwrap(), lhs);
        assert_eq!(gelin_cesaro_rhs(&p, 4, GelinCesaroMode::Cases).unwrap(), lhs);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(check(IdentityId::E5, &jac(), 2, None), Err(Error::Domain(_))));
        assert!(matches!(check(IdentityId::E9, &jac(), 2, None), Err(Error::Domain(_))));
        assert!(matches!(check(IdentityId::GelinCesaroGen, &jac(), 1, None), Err(Error::Domain(_))));
        assert!(matches!(check(IdentityId::CatalanGen, &jac(), 3, Some(4)), Err(Error::Domain(_))));
        assert!(matches!(check(IdentityId::CatalanGen, &jac(), 3, None), Err(Error::Domain(_))));
        assert!(matches!(check(IdentityId::CassiniJ, &jac(), 3, Some(2)), Err(Error::Domain(_))));
        assert!(matches!(check(IdentityId::E4, &jac(), -1, None), Err(Error::Domain(_))));
        assert!(matches!(check(IdentityId::E4, &jac(), 3, Some(1)), Err(Error::Domain(_))));
        assert!(matches!(catalan_rhs(&jac(), 2, 3), Err(Error::Domain(_))));
        assert!(matches!(gelin_cesaro_rhs(&jac(), 1, GelinCesaroMode::Cases), Err(Error::Domain(_))));
        let msg = check(IdentityId::E12, &jac(), 0, None).unwrap_err().to_string();
        assert!(msg.contains("n >= 3"), "{msg}");
    }

    #[test]
    fn fixed_identities_ignore_params() {
        let odd = SequenceParams::from_ints(9, 9, 9);
        let c = check(IdentityId::E7, &odd, 10, None).unwrap();
        assert!(c.equal);
        assert_eq!(c.params, jac());
    }

    #[test]
    fn sweep_counts() {
        let e7 = verify_range(IdentityId::E7, &jac(), 50, None).unwrap();
        assert_eq!((e7.total, e7.failed), (51, 0));
        let e6 = verify_range(IdentityId::E6, &jac(), 30, None).unwrap();
        assert_eq!((e6.total, e6.failed), (31, 0));
        let cat = verify_range(IdentityId::CatalanGen, &SequenceParams::from_ints(5, -1, 2), 20, Some(20)).unwrap();
        assert_eq!((cat.total, cat.failed), (231, 0));
        let capped = verify_range(IdentityId::CatalanGen, &jac(), 10, Some(2)).unwrap();
        assert_eq!(capped.total, 1 + 2 + 3 * 9);
        assert!(matches!(verify_range(IdentityId::E5, &jac(), 2, None), Err(Error::Domain(_))));
        assert!(matches!(verify_range(IdentityId::E4, &jac(), 5, Some(2)), Err(Error::Domain(_))));
    }

    #[test]
    fn report_keeps_bounded_failures() {
        let results: Vec<CheckResult> = (0..40)
            .map(|n| CheckResult {
                id: IdentityId::E4,
                params: jac(),
                n,
                r: None,
                lhs: int(n),
                rhs: int(if n % 2 == 0 { n } else { n + 1 }),
                equal: n % 2 == 0,
                witness: BTreeMap::new(),
            })
            .collect();
        let report = Report::from_results(IdentityId::E4, jac(), results);
        assert_eq!((report.total, report.passed, report.failed), (40, 20, 20));
        assert_eq!(report.failures.len(), MAX_REPORTED_FAILURES);
        assert_eq!(report.failures[0].n, 1);
        let json = report.to_json();
        assert_eq!(json["failures"].as_array().unwrap().len(), MAX_REPORTED_FAILURES);
        assert_eq!(json["failures"][0], serde_json::json!({"n": 1, "r": null, "lhs": "1", "rhs": "2"}));
    }

    #[test]
    fn report_json_shape() {
        let p = SequenceParams::new(crate::arith::rat_normalize(1, 2).unwrap(), int(-3), int(4));
        let report = verify_range(IdentityId::CassiniGen, &p, 5, None).unwrap();
        let json = report.to_json();
        assert_eq!(json["identity"], "cassini-gen");
        assert_eq!(json["params"], serde_json::json!(["1/2", "-3", "4"]));
        assert_eq!(json["total"], 5);
        assert_eq!(json["passed"], 5);
        assert_eq!(json["failures"], serde_json::json!([]));
    }

    fn rat() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=20).prop_map(|(p, d)| crate::arith::rat_normalize(p, d).unwrap())
    }

    proptest! {
        #[test]
        fn general_catalan_specializes(n in 0i64..50, r in 0i64..50) {
            prop_assume!(r <= n);
            prop_assert_eq!(catalan_rhs(&jac(), n, r).unwrap(), catalan_rhs_jacobsthal(n, r).unwrap());
        }

        #[test]
        fn jacobsthal_gelin_cesaro_is_general_form(n in 2i64..80) {
            prop_assert_eq!(
                gelin_cesaro_rhs_jacobsthal(n).unwrap(),
                gelin_cesaro_rhs(&jac(), n, GelinCesaroMode::General).unwrap()
            );
        }

        #[test]
        fn gelin_cesaro_modes_agree((a, b, c) in (rat(), rat(), rat()), n in 2i64..60) {
            let p = SequenceParams::new(a, b, c);
            prop_assert_eq!(
                gelin_cesaro_rhs(&p, n, GelinCesaroMode::General).unwrap(),
                gelin_cesaro_rhs(&p, n, GelinCesaroMode::Cases).unwrap()
            );
        }

        #[test]
        fn catalan_sound_for_random_params((a, b, c) in (rat(), rat(), rat()), n in 0i64..40, r in 0i64..40) {
            prop_assume!(r <= n);
            let p = SequenceParams::new(a, b, c);
            prop_assert!(check(IdentityId::CatalanGen, &p, n, Some(r)).unwrap().equal);
        }

        #[test]
        fn e8_table_is_shifted_u(n in 0i64..500) {
            let u = companions(&jac()).u;
            let table = PeriodicTriple::from_ints(1, -1, 0);
            prop_assert_eq!(table.at(n), u.at(n + 1));
        }
    }
}
