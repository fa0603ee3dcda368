//! Identity checks: every product formula is pitted against exact counts,
//! and the condensation recurrences, base-case factorizations, and ratio
//! identities are verified instance by instance over configurable grids.
//! All comparisons are exact; there is no tolerance anywhere.

use crate::builder::{
    fern_cored_hexagon, fern_envelope, hexagon, placement_kind, semihexagon, BuildError, FernSpec,
    PlacementKind,
};
use crate::counting::{count_tilings_with, CountError, EngineCaps, EngineKind};
use crate::formulas::{fern_cored_count, fern_ratio, macmahon_count, semihex_count, FormulaError};
use crate::geometry::TriRegion;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, thiserror::Error)]
pub enum CheckError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// Outcome of one identity instance. `pass` holds exactly when `lhs == rhs`
/// as exact numbers.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub identity: &'static str,
    pub params: serde_json::Value,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub engine: EngineKind,
    pub elapsed: Duration,
}

impl Serialize for VerificationReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            identity: &'a str,
            params: &'a serde_json::Value,
            lhs: &'a str,
            rhs: &'a str,
            pass: bool,
            ms: u128,
        }
        Doc {
            identity: self.identity,
            params: &self.params,
            lhs: &self.lhs,
            rhs: &self.rhs,
            pass: self.pass,
            ms: self.elapsed.as_millis(),
        }
        .serialize(serializer)
    }
}

fn report(
    identity: &'static str,
    params: serde_json::Value,
    lhs: String,
    rhs: String,
    engine: EngineKind,
    start: Instant,
) -> VerificationReport {
    let pass = lhs == rhs;
    VerificationReport {
        identity,
        params,
        lhs,
        rhs,
        pass,
        engine,
        elapsed: start.elapsed(),
    }
}

fn count(region: &TriRegion, engine: EngineKind, caps: &EngineCaps) -> Result<BigUint, CheckError> {
    Ok(count_tilings_with(region, engine, caps)?)
}

/// Hexagon count against the boxed-plane-partition product.
pub fn check_macmahon(
    a: u32,
    b: u32,
    c: u32,
    engine: EngineKind,
    caps: &EngineCaps,
) -> Result<VerificationReport, CheckError> {
    let start = Instant::now();
    let lhs = count(&hexagon([a, b, c, a, b, c])?, engine, caps)?;
    let rhs = macmahon_count(a, b, c);
    Ok(report(
        "macmahon",
        serde_json::json!({ "a": a, "b": b, "c": c }),
        lhs.to_string(),
        rhs.to_string(),
        engine,
        start,
    ))
}

/// Semihexagon count against the dent-position product.
pub fn check_semihex(
    blocks: &[u32],
    engine: EngineKind,
    caps: &EngineCaps,
) -> Result<VerificationReport, CheckError> {
    let start = Instant::now();
    let lhs = count(&semihexagon(blocks)?, engine, caps)?;
    let rhs = semihex_count(blocks);
    Ok(report(
        "semihex",
        serde_json::json!({ "blocks": blocks }),
        lhs.to_string(),
        rhs.to_string(),
        engine,
        start,
    ))
}

/// The main product formula: exact count of the fern-cored hexagon against
/// the assembled closed form.
pub fn check_count_vs_formula(
    x: u32,
    y: u32,
    z: u32,
    spec: &FernSpec,
    engine: EngineKind,
    caps: &EngineCaps,
) -> Result<VerificationReport, CheckError> {
    let start = Instant::now();
    let region = fern_cored_hexagon(x, y, z, spec)?;
    let lhs = count(&region, engine, caps)?;
    let rhs = fern_cored_count(x, y, z, spec)?;
    Ok(report(
        "theorem21",
        serde_json::json!({ "x": x, "y": y, "z": z, "lobes": spec.lobes() }),
        lhs.to_string(),
        rhs.to_string(),
        engine,
        start,
    ))
}

/// The six-count condensation recurrence for the parity class of
/// `(x, y, z)`; the reversed-lobe middle term is selected by the lobe-count
/// parity where the class demands it.
pub fn check_condensation(
    x: u32,
    y: u32,
    z: u32,
    spec: &FernSpec,
    engine: EngineKind,
    caps: &EngineCaps,
) -> Result<VerificationReport, CheckError> {
    if x < 1 || y < 1 || z < 1 {
        return Err(CheckError::PreconditionViolated(format!(
            "condensation needs x, y, z >= 1, got ({x},{y},{z})"
        )));
    }
    let start = Instant::now();
    let fwd = spec.clone();
    let rev = spec.reversed();
    let even = spec.lobe_count() % 2 == 0;
    // Each row: (left1, left2, right1, right2, right3, right4) as
    // ((x, y, z), lobes). The identity is l1*l2 = r1*r2 + r3*r4.
    type Term = ((u32, u32, u32), FernSpec);
    let t = |p: (u32, u32, u32), s: &FernSpec| -> Term { (p, s.clone()) };
    let terms: [Term; 6] = match placement_kind(x, y, z) {
        PlacementKind::Center => [
            t((x, y, z), &fwd),
            t((x, y - 1, z - 1), &fwd),
            t((x, y - 1, z), &fwd),
            t((x, y, z - 1), &fwd),
            t((x - 1, y, z), &fwd),
            t((x + 1, y - 1, z - 1), &fwd),
        ],
        PlacementKind::West => [
            t((x, y, z), &fwd),
            t((x, y - 1, z - 1), &fwd),
            t((x, y, z - 1), &fwd),
            t((x, y - 1, z), &fwd),
            t((x + 1, y - 1, z - 1), &fwd),
            t((x - 1, y, z), &fwd),
        ],
        PlacementKind::SouthWest => [
            t((x, y, z), &fwd),
            t((x - 1, y - 1, z), &fwd),
            t((x, y - 1, z), &fwd),
            if even {
                t((x - 1, y, z), &rev)
            } else {
                t((x - 1, z, y), &rev)
            },
            t((x, y, z - 1), &fwd),
            t((x - 1, y - 1, z + 1), &fwd),
        ],
        PlacementKind::NorthWest => [
            t((x, y, z), &fwd),
            t((x - 1, y, z - 1), &fwd),
            t((x, y, z - 1), &fwd),
            if even {
                t((x - 1, y, z), &rev)
            } else {
                t((x - 1, z, y), &rev)
            },
            t((x, y - 1, z), &fwd),
            t((x - 1, y + 1, z - 1), &fwd),
        ],
    };
    let mut counts = Vec::with_capacity(6);
    for ((tx, ty, tz), s) in &terms {
        let region = fern_cored_hexagon(*tx, *ty, *tz, s)?;
        counts.push(count(&region, engine, caps)?);
    }
    let lhs = &counts[0] * &counts[1];
    let rhs = &counts[2] * &counts[3] + &counts[4] * &counts[5];
    Ok(report(
        "kuo",
        serde_json::json!({ "x": x, "y": y, "z": z, "lobes": spec.lobes() }),
        lhs.to_string(),
        rhs.to_string(),
        engine,
        start,
    ))
}

/// Base-case factorization at `z = 0` with `x`, `y` even: the fern-cored
/// hexagon splits along the fern line into two internally tiled
/// semihexagons.
pub fn check_base_case(
    x: u32,
    y: u32,
    spec: &FernSpec,
    engine: EngineKind,
    caps: &EngineCaps,
) -> Result<VerificationReport, CheckError> {
    if x % 2 != 0 || y % 2 != 0 {
        return Err(CheckError::PreconditionViolated(format!(
            "base case needs even x and y, got ({x},{y})"
        )));
    }
    let start = Instant::now();
    let region = fern_cored_hexagon(x, y, 0, spec)?;
    let lhs = count(&region, engine, caps)?;
    let padded = spec.padded_even();
    let lobes = padded.lobes();
    let k = lobes.len();
    let mut upper = vec![y / 2, x / 2];
    upper.extend_from_slice(&lobes[..k - 1]);
    let mut lower = lobes[1..].to_vec();
    lower.extend_from_slice(&[x / 2, y / 2]);
    let rhs =
        count(&semihexagon(&upper)?, engine, caps)? * count(&semihexagon(&lower)?, engine, caps)?;
    Ok(report(
        "base-case",
        serde_json::json!({ "x": x, "y": y, "lobes": spec.lobes() }),
        lhs.to_string(),
        rhs.to_string(),
        engine,
        start,
    ))
}

/// The fern-ratio shift identity for `x = y (mod 2)`, `z` of opposite
/// parity, and an even lobe count: lowering `y` on the original lobes and
/// `x` on the reversed lobes multiplies to the same value as lowering
/// neither and both.
///
/// The even lobe count is essential: with an odd count the two sides really
/// do differ (the scalar two-term identity makes up the difference in the
/// recurrence verification there), e.g. 6 against 16/3 at `(2,2,1)` with
/// lobes `(1,1,1)`.
pub fn check_g_identity(
    x: u32,
    y: u32,
    z: u32,
    spec: &FernSpec,
) -> Result<VerificationReport, CheckError> {
    if x % 2 != y % 2 || z % 2 == x % 2 {
        return Err(CheckError::PreconditionViolated(format!(
            "needs x = y (mod 2) and z of opposite parity, got ({x},{y},{z})"
        )));
    }
    if x < 1 || y < 1 {
        return Err(CheckError::PreconditionViolated(format!(
            "needs x, y >= 1, got ({x},{y})"
        )));
    }
    if spec.lobe_count() % 2 != 0 {
        return Err(CheckError::PreconditionViolated(format!(
            "needs an even lobe count, got {}",
            spec.lobe_count()
        )));
    }
    let start = Instant::now();
    let rev = spec.reversed();
    let lhs = fern_ratio(x, y - 1, z, spec) * fern_ratio(x - 1, y, z, &rev);
    let rhs = fern_ratio(x, y, z, spec) * fern_ratio(x - 1, y - 1, z, spec);
    Ok(report(
        "g-identity",
        serde_json::json!({ "x": x, "y": y, "z": z, "lobes": spec.lobes() }),
        lhs.to_string(),
        rhs.to_string(),
        EngineKind::Auto,
        start,
    ))
}

/// The scalar two-term identity behind the odd-lobe recurrence step:
/// `1 = (x+y+z)/d + (2o+2e-1)/d` with `d = x+y+z+2o+2e-1`. Vacuous exactly
/// when `d = 0`, i.e. `x+y+z+2(o+e) = 1`, which is reported as an error.
pub fn check_scalar_identity(
    x: u32,
    y: u32,
    z: u32,
    o: u32,
    e: u32,
) -> Result<VerificationReport, CheckError> {
    let d = i64::from(x) + i64::from(y) + i64::from(z) + 2 * i64::from(o) + 2 * i64::from(e) - 1;
    if d == 0 {
        return Err(CheckError::DivisionByZero(format!(
            "x+y+z+2o+2e = 1 at ({x},{y},{z},{o},{e})"
        )));
    }
    let start = Instant::now();
    let frac = |n: i64| BigRational::new(n.into(), d.into());
    let lhs = BigRational::one();
    let rhs = frac(i64::from(x) + i64::from(y) + i64::from(z))
        + frac(2 * i64::from(o) + 2 * i64::from(e) - 1);
    Ok(report(
        "scalar-identity",
        serde_json::json!({ "x": x, "y": y, "z": z, "o": o, "e": e }),
        lhs.to_string(),
        rhs.to_string(),
        EngineKind::Auto,
        start,
    ))
}

/// Count of the fern envelope against the product of its two semihexagon
/// factors.
pub fn check_envelope(
    spec: &FernSpec,
    engine: EngineKind,
    caps: &EngineCaps,
) -> Result<VerificationReport, CheckError> {
    let start = Instant::now();
    let lhs = count(&fern_envelope(spec), engine, caps)?;
    let rhs = envelope_count(spec);
    Ok(report(
        "remark4",
        serde_json::json!({ "lobes": spec.lobes() }),
        lhs.to_string(),
        rhs.to_string(),
        engine,
        start,
    ))
}

/// The two semihexagon factors of the envelope count, under the same
/// odd-lobe padding convention as the fern ratio.
pub fn envelope_count(spec: &FernSpec) -> BigUint {
    let lobes = spec.lobes();
    let k = lobes.len();
    let first = if k % 2 == 0 {
        semihex_count(&lobes[..k - 1])
    } else {
        semihex_count(lobes)
    };
    first * semihex_count(&lobes[1..])
}

/// Constancy of the fern ratio at `(x, y, y)` across a grid, and equality
/// with the envelope product.
pub fn check_ratio_constancy(
    spec: &FernSpec,
    max_xy: u32,
) -> Result<VerificationReport, CheckError> {
    let start = Instant::now();
    let expected = BigRational::from_integer(envelope_count(spec).into());
    let mut all_equal = true;
    for x in 0..=max_xy {
        for y in 0..=max_xy {
            if fern_ratio(x, y, y, spec) != expected {
                all_equal = false;
            }
        }
    }
    let lhs = if all_equal {
        expected.to_string()
    } else {
        "non-constant".to_string()
    };
    Ok(report(
        "remark5",
        serde_json::json!({ "lobes": spec.lobes(), "max_xy": max_xy }),
        lhs,
        expected.to_string(),
        EngineKind::Auto,
        start,
    ))
}

/// Named verification suites, matching the command-line tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteKind {
    Macmahon,
    Semihex,
    Theorem21,
    Kuo,
    BaseCase,
    GIdentity,
    Remark4,
    Remark5,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 8] = [
        SuiteKind::Macmahon,
        SuiteKind::Semihex,
        SuiteKind::Theorem21,
        SuiteKind::Kuo,
        SuiteKind::BaseCase,
        SuiteKind::GIdentity,
        SuiteKind::Remark4,
        SuiteKind::Remark5,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::Macmahon => "macmahon",
            SuiteKind::Semihex => "semihex",
            SuiteKind::Theorem21 => "theorem21",
            SuiteKind::Kuo => "kuo",
            SuiteKind::BaseCase => "base-case",
            SuiteKind::GIdentity => "g-identity",
            SuiteKind::Remark4 => "remark4",
            SuiteKind::Remark5 => "remark5",
        }
    }

    pub fn from_name(name: &str) -> Option<SuiteKind> {
        SuiteKind::ALL.into_iter().find(|s| s.name() == name)
    }
}

/// Grid bounds and execution settings for [`run_suite`].
#[derive(Debug, Clone)]
pub struct GridConfig {
    pub max_xyz: u32,
    pub max_lobe: u32,
    pub max_k: usize,
    pub caps: EngineCaps,
    pub engine: EngineKind,
    /// Worker threads; 0 uses the global thread pool.
    pub jobs: usize,
    pub suites: Vec<SuiteKind>,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            max_xyz: 2,
            max_lobe: 2,
            max_k: 3,
            caps: EngineCaps::default(),
            engine: EngineKind::FrontierDp,
            jobs: 0,
            suites: SuiteKind::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

/// All lobe lists with `1..=max_k` lobes and entries `0..=max_lobe`.
pub fn enumerate_ferns(max_k: usize, max_lobe: u32) -> Vec<FernSpec> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(current: &mut Vec<u32>, max_k: usize, max_lobe: u32, out: &mut Vec<FernSpec>) {
        if !current.is_empty() {
            out.push(FernSpec::new(current.clone()).expect("nonempty"));
        }
        if current.len() == max_k {
            return;
        }
        for a in 0..=max_lobe {
            current.push(a);
            rec(current, max_k, max_lobe, out);
            current.pop();
        }
    }
    rec(&mut current, max_k, max_lobe, &mut out);
    out.sort_by_key(|f| (f.lobe_count(), f.lobes().to_vec()));
    out
}

enum Instance {
    Macmahon(u32, u32, u32),
    Semihex(Vec<u32>),
    CountVsFormula(u32, u32, u32, FernSpec),
    Condensation(u32, u32, u32, FernSpec),
    BaseCase(u32, u32, FernSpec),
    GIdentity(u32, u32, u32, FernSpec),
    Scalar(u32, u32, u32, u32, u32),
    Envelope(FernSpec),
    RatioConstancy(FernSpec, u32),
}

fn enumerate_instances(cfg: &GridConfig) -> Vec<Instance> {
    let ferns = enumerate_ferns(cfg.max_k, cfg.max_lobe);
    let n = cfg.max_xyz;
    let mut out = Vec::new();
    for suite in &cfg.suites {
        match suite {
            SuiteKind::Macmahon => {
                for a in 0..=n {
                    for b in 0..=n {
                        for c in 0..=n {
                            out.push(Instance::Macmahon(a, b, c));
                        }
                    }
                }
            }
            SuiteKind::Semihex => {
                for blocks in enumerate_ferns(cfg.max_k, cfg.max_lobe) {
                    out.push(Instance::Semihex(blocks.lobes().to_vec()));
                }
            }
            SuiteKind::Theorem21 => {
                for x in 0..=n {
                    for y in 0..=n {
                        for z in 0..=n {
                            for spec in &ferns {
                                out.push(Instance::CountVsFormula(x, y, z, spec.clone()));
                            }
                        }
                    }
                }
            }
            SuiteKind::Kuo => {
                for x in 1..=n.max(1) {
                    for y in 1..=n.max(1) {
                        for z in 1..=n.max(1) {
                            for spec in &ferns {
                                out.push(Instance::Condensation(x, y, z, spec.clone()));
                            }
                        }
                    }
                }
            }
            SuiteKind::BaseCase => {
                for x in (0..=n).step_by(2) {
                    for y in (0..=n).step_by(2) {
                        for spec in &ferns {
                            out.push(Instance::BaseCase(x, y, spec.clone()));
                        }
                    }
                }
            }
            SuiteKind::GIdentity => {
                for x in 1..=n.max(1) {
                    for y in 1..=n.max(1) {
                        for z in 0..=n {
                            if x % 2 != y % 2 || z % 2 == x % 2 {
                                continue;
                            }
                            for spec in &ferns {
                                if spec.lobe_count() % 2 == 0 {
                                    out.push(Instance::GIdentity(x, y, z, spec.clone()));
                                }
                                let (o, e) = (spec.up_sum(), spec.down_sum());
                                if u64::from(x + y + z) + 2 * u64::from(o + e) != 1 {
                                    out.push(Instance::Scalar(x, y, z, o, e));
                                }
                            }
                        }
                    }
                }
            }
            SuiteKind::Remark4 => {
                for spec in &ferns {
                    out.push(Instance::Envelope(spec.clone()));
                }
            }
            SuiteKind::Remark5 => {
                for spec in &ferns {
                    out.push(Instance::RatioConstancy(spec.clone(), n));
                }
            }
        }
    }
    out
}

fn run_instance(
    instance: &Instance,
    engine: EngineKind,
    caps: &EngineCaps,
) -> Result<VerificationReport, CheckError> {
    match instance {
        Instance::Macmahon(a, b, c) => check_macmahon(*a, *b, *c, engine, caps),
        Instance::Semihex(blocks) => check_semihex(blocks, engine, caps),
        Instance::CountVsFormula(x, y, z, spec) => {
            check_count_vs_formula(*x, *y, *z, spec, engine, caps)
        }
        Instance::Condensation(x, y, z, spec) => check_condensation(*x, *y, *z, spec, engine, caps),
        Instance::BaseCase(x, y, spec) => check_base_case(*x, *y, spec, engine, caps),
        Instance::GIdentity(x, y, z, spec) => check_g_identity(*x, *y, *z, spec),
        Instance::Scalar(x, y, z, o, e) => check_scalar_identity(*x, *y, *z, *o, *e),
        Instance::Envelope(spec) => check_envelope(spec, engine, caps),
        Instance::RatioConstancy(spec, max_xy) => check_ratio_constancy(spec, *max_xy),
    }
}

/// Run every configured suite over its grid. Instances whose fern does not
/// fit its hexagon are skipped (the construction is undefined there), any
/// other error surfaces as a failed report, and reports keep a deterministic
/// order regardless of parallelism.
pub fn run_suite(cfg: &GridConfig) -> SuiteOutcome {
    let instances = enumerate_instances(cfg);
    let run_all = || -> Vec<Option<VerificationReport>> {
        instances
            .par_iter()
            .map(|inst| match run_instance(inst, cfg.engine, &cfg.caps) {
                Ok(report) => Some(report),
                Err(CheckError::Build(BuildError::FernDoesNotFit { .. })) => None,
                Err(err) => Some(VerificationReport {
                    identity: "error",
                    params: serde_json::Value::Null,
                    lhs: format!("error: {err}"),
                    rhs: String::new(),
                    pass: false,
                    engine: cfg.engine,
                    elapsed: Duration::ZERO,
                }),
            })
            .collect()
    };
    let results = if cfg.jobs == 0 {
        run_all()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("thread pool")
            .install(run_all)
    };
    let mut summary = Summary {
        total: results.len(),
        ..Summary::default()
    };
    let mut reports = Vec::new();
    for result in results {
        match result {
            None => summary.skipped += 1,
            Some(r) => {
                if r.pass {
                    summary.passed += 1;
                } else {
                    summary.failed += 1;
                }
                reports.push(r);
            }
        }
    }
    SuiteOutcome { reports, summary }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fern(lobes: &[u32]) -> FernSpec {
        FernSpec::new(lobes.to_vec()).unwrap()
    }

    fn caps() -> EngineCaps {
        EngineCaps::default()
    }

    #[test]
    fn theorem_check_at_envelope_scale() {
        let r = check_count_vs_formula(0, 0, 0, &fern(&[1, 1, 1]), EngineKind::FrontierDp, &caps())
            .unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "2");
    }

    #[test]
    fn theorem_check_all_zero_fern() {
        let r = check_count_vs_formula(2, 1, 2, &fern(&[0, 0]), EngineKind::FrontierDp, &caps())
            .unwrap();
        assert!(r.pass);
    }

    #[test]
    fn condensation_small_instances() {
        for (x, y, z, lobes) in [
            (2u32, 2u32, 2u32, &[1u32, 1][..]),
            (2, 2, 1, &[1, 1, 1]),
            (1, 2, 2, &[1]),
            (2, 1, 2, &[1, 2]),
            (1, 1, 2, &[2, 1, 1]),
        ] {
            let r =
                check_condensation(x, y, z, &fern(lobes), EngineKind::FrontierDp, &caps()).unwrap();
            assert!(r.pass, "({x},{y},{z}) {lobes:?}: {} vs {}", r.lhs, r.rhs);
        }
    }

    #[test]
    fn condensation_needs_positive_parameters() {
        assert!(matches!(
            check_condensation(0, 2, 2, &fern(&[1]), EngineKind::FrontierDp, &caps()),
            Err(CheckError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn base_case_small_instances() {
        for (x, y, lobes) in [
            (2u32, 2u32, &[1u32, 1][..]),
            (2, 2, &[0, 0]),
            (4, 2, &[1, 1, 2, 1]),
            (2, 4, &[1, 2, 1]),
        ] {
            let r = check_base_case(x, y, &fern(lobes), EngineKind::FrontierDp, &caps()).unwrap();
            assert!(r.pass, "({x},{y}) {lobes:?}: {} vs {}", r.lhs, r.rhs);
        }
        assert!(matches!(
            check_base_case(1, 2, &fern(&[1]), EngineKind::FrontierDp, &caps()),
            Err(CheckError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn g_identity_instances() {
        for (x, y, z, lobes) in [
            (2u32, 2u32, 1u32, &[1u32, 2][..]),
            (2, 2, 1, &[1, 1, 1, 1]),
            (1, 3, 2, &[2, 1]),
            (3, 1, 0, &[1, 2, 1, 2]),
            (2, 4, 3, &[2, 0, 1, 1]),
        ] {
            let r = check_g_identity(x, y, z, &fern(lobes)).unwrap();
            assert!(r.pass, "({x},{y},{z}) {lobes:?}: {} vs {}", r.lhs, r.rhs);
        }
        // Parity of the parameters and of the lobe count are both enforced.
        assert!(matches!(
            check_g_identity(1, 2, 1, &fern(&[1, 1])),
            Err(CheckError::PreconditionViolated(_))
        ));
        assert!(matches!(
            check_g_identity(2, 2, 1, &fern(&[1, 1, 1])),
            Err(CheckError::PreconditionViolated(_))
        ));
        // With an odd lobe count the two sides genuinely differ.
        let spec = fern(&[1, 1, 1]);
        let lhs = fern_ratio(2, 1, 1, &spec) * fern_ratio(1, 2, 1, &spec.reversed());
        let rhs = fern_ratio(2, 2, 1, &spec) * fern_ratio(1, 1, 1, &spec);
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn scalar_identity_degenerate_set() {
        assert!(check_scalar_identity(1, 1, 1, 1, 1).unwrap().pass);
        // All-zero point: denominator is -1, identity still exact.
        assert!(check_scalar_identity(0, 0, 0, 0, 0).unwrap().pass);
        assert!(matches!(
            check_scalar_identity(1, 0, 0, 0, 0),
            Err(CheckError::DivisionByZero(_))
        ));
        assert!(matches!(
            check_scalar_identity(0, 0, 1, 0, 0),
            Err(CheckError::DivisionByZero(_))
        ));
    }

    #[test]
    fn envelope_checks() {
        for lobes in [&[1u32, 1, 1][..], &[2, 1][..], &[1, 2, 1, 2][..], &[3][..]] {
            let r = check_envelope(&fern(lobes), EngineKind::FrontierDp, &caps()).unwrap();
            assert!(r.pass, "{lobes:?}: {} vs {}", r.lhs, r.rhs);
        }
        let two_lobe = check_envelope(&fern(&[2, 3]), EngineKind::FrontierDp, &caps()).unwrap();
        assert_eq!(two_lobe.lhs, "1");
    }

    #[test]
    fn ratio_constancy() {
        for lobes in [&[1u32, 1, 1][..], &[2][..], &[1, 2][..]] {
            let r = check_ratio_constancy(&fern(lobes), 3).unwrap();
            assert!(r.pass, "{lobes:?}");
        }
        let r = check_ratio_constancy(&fern(&[1, 1, 1]), 3).unwrap();
        assert_eq!(r.lhs, "2");
    }

    #[test]
    fn tiny_suite_runs_clean() {
        let cfg = GridConfig {
            max_xyz: 1,
            max_lobe: 1,
            max_k: 2,
            ..GridConfig::default()
        };
        let outcome = run_suite(&cfg);
        assert_eq!(outcome.summary.failed, 0);
        assert!(outcome.summary.passed > 0);
        assert_eq!(
            outcome.summary.passed + outcome.summary.skipped,
            outcome.summary.total
        );
        // Deterministic: a second run yields the identical report list.
        let again = run_suite(&cfg);
        let key = |o: &SuiteOutcome| -> Vec<(String, String, String, bool)> {
            o.reports
                .iter()
                .map(|r| (r.identity.to_string(), r.lhs.clone(), r.rhs.clone(), r.pass))
                .collect()
        };
        assert_eq!(key(&outcome), key(&again));
    }

    #[test]
    fn fern_enumeration_counts() {
        assert_eq!(enumerate_ferns(1, 2).len(), 3);
        assert_eq!(enumerate_ferns(2, 2).len(), 12);
        assert_eq!(enumerate_ferns(4, 2).len(), 120);
    }
}
