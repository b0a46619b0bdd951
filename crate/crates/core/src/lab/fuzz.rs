//! Seeded random factored curves and the campaign that checks the bounds on them.
//!
//! Trial `t` of a campaign with seed `s` draws from a ChaCha8 stream seeded by
//! [`trial_seed`]`(s, t)`, so any trial replays on its own and trials can run
//! in any order or in parallel.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::bounds::BoundSet;
use super::curve::{irreducibility_status, FactoredCurve, IrreducibilityStatus};
use super::lemmas::{structural_lemma_checks, LemmaReport};
use crate::error::{Error, Result};
use crate::local::{intersection_multiplicity, milnor_number};
use crate::oracle::{local_quotient_dimension, milnor_oracle};
use crate::poly::{rat, BiPoly};

const RESAMPLE_BUDGET: usize = 10_000;
/// Products above this degree skip the oracle Milnor check (only pairs and
/// factors are compared).
const ORACLE_PRODUCT_DEGREE: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_factors: usize,
    pub max_degree: u32,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    /// The first this many trials are also compared against the oracle.
    pub oracle_subsample: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            trials: 100,
            max_factors: 4,
            max_degree: 3,
            coeff_bound: 9,
            oracle_subsample: 0,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidConfig(m.to_string()));
        if self.max_factors == 0 {
            return bad("max_factors must be at least 1");
        }
        if self.max_degree == 0 {
            return bad("max_degree must be at least 1");
        }
        if self.coeff_bound <= 0 {
            return bad("coefficient range {0} cannot produce nonconstant factors");
        }
        Ok(())
    }
}

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the substream used by trial `index`.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    mix(mix(seed) ^ index)
}

pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(seed, index))
}

fn coefficient<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    if rng.random_bool(0.5) {
        0
    } else {
        rng.random_range(-bound..=bound)
    }
}

/// Homogeneous form of degree `k` with random coefficients, possibly zero.
fn random_form<R: Rng>(rng: &mut R, k: u32, bound: i64) -> BiPoly {
    let mut terms = Vec::new();
    for i in (0..=k).rev() {
        terms.push((i, k - i, coefficient(rng, bound)));
    }
    BiPoly::from_int_terms(&terms)
}

/// A factor through the origin of degree in `1..=max_degree`, not shown
/// reducible.
pub fn random_factor<R: Rng>(rng: &mut R, max_degree: u32, bound: i64) -> Result<BiPoly> {
    for _ in 0..RESAMPLE_BUDGET {
        let k = rng.random_range(1..=max_degree);
        let mut f = BiPoly::zero();
        for j in 1..=k {
            f = f + random_form(rng, j, bound);
        }
        if f.total_degree() != Some(k) || irreducibility_status(&f).is_reducible() {
            continue;
        }
        return Ok(f);
    }
    Err(Error::ResampleBudget(RESAMPLE_BUDGET))
}

/// Draw statistics for one curve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DrawStats {
    /// Factor lists rejected for a shared or repeated component.
    pub non_isolated: usize,
}

/// Between 1 and `max_factors` pairwise coprime factors through the origin
/// whose product has an isolated singularity.
pub fn random_factored_curve<R: Rng>(rng: &mut R, cfg: &FuzzConfig) -> Result<FactoredCurve> {
    random_factored_curve_with_stats(rng, cfg).map(|(c, _)| c)
}

fn random_factored_curve_with_stats<R: Rng>(
    rng: &mut R,
    cfg: &FuzzConfig,
) -> Result<(FactoredCurve, DrawStats)> {
    cfg.validate()?;
    let mut stats = DrawStats::default();
    for _ in 0..RESAMPLE_BUDGET {
        let m = rng.random_range(1..=cfg.max_factors);
        let factors = (0..m)
            .map(|_| random_factor(rng, cfg.max_degree, cfg.coeff_bound))
            .collect::<Result<Vec<_>>>()?;
        match FactoredCurve::new(factors) {
            // Squarefree coprime factors give a reduced curve, so the
            // singularity is isolated.
            Ok(c) => return Ok((c, stats)),
            Err(Error::CommonComponent { .. } | Error::RepeatedComponent { .. }) => {
                stats.non_isolated += 1;
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::ResampleBudget(RESAMPLE_BUDGET))
}

/// A singular cubic with one tangent, not shown reducible, and a
/// nondegenerate conic through the origin. Half of the conics are tangent to
/// the cubic.
pub fn random_lemma41_pair<R: Rng>(rng: &mut R, bound: i64) -> Result<(BiPoly, BiPoly)> {
    let nonzero = |rng: &mut R| loop {
        let c = rng.random_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    };
    let mut found = None;
    for _ in 0..RESAMPLE_BUDGET {
        let l = BiPoly::from_int_terms(&[(1, 0, coefficient(rng, bound)), (0, 1, nonzero(rng))]);
        let l = if rng.random_bool(0.5) {
            l
        } else {
            l.substitute_linear(&rat(0), &rat(1), &rat(1), &rat(0))
        };
        let c3 = random_form(rng, 3, bound);
        if c3.is_zero() || l.divides(&c3) {
            continue;
        }
        let f = l.pow(2) + c3;
        if !irreducibility_status(&f).is_reducible() {
            found = Some((f, l));
            break;
        }
    }
    let (cubic, l) = found.ok_or(Error::ResampleBudget(RESAMPLE_BUDGET))?;
    for _ in 0..RESAMPLE_BUDGET {
        let linear = if rng.random_bool(0.5) {
            l.scale(&rat(nonzero(rng)))
        } else {
            random_form(rng, 1, bound)
        };
        let g = linear + random_form(rng, 2, bound);
        if g.total_degree() == Some(2)
            && irreducibility_status(&g) == IrreducibilityStatus::VerifiedConic
        {
            return Ok((cubic, g));
        }
    }
    Err(Error::ResampleBudget(RESAMPLE_BUDGET))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub trial: usize,
    /// Replays the trial through [`trial_rng`]-style seeding.
    pub trial_seed: u64,
    pub property: String,
    pub detail: String,
    pub factors: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Skips {
    /// Factor lists rejected while drawing because the product was not isolated.
    pub non_isolated: usize,
    /// Homogeneous curves, for which the non-homogeneous bound is not checked.
    pub homogeneous: usize,
    /// Oracle comparisons abandoned at the truncation cap.
    pub oracle_cap: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub config: Option<FuzzConfig>,
    pub trials_run: usize,
    /// Number of times each property was evaluated.
    pub checks: BTreeMap<String, usize>,
    pub violation_counts: BTreeMap<String, usize>,
    /// Sorted by trial index.
    pub violations: Vec<Violation>,
    pub skips: Skips,
}

impl FuzzSummary {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(mut self, other: FuzzSummary) -> FuzzSummary {
        self.trials_run += other.trials_run;
        for (k, v) in other.checks {
            *self.checks.entry(k).or_default() += v;
        }
        for (k, v) in other.violation_counts {
            *self.violation_counts.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
        self.skips.non_isolated += other.skips.non_isolated;
        self.skips.homogeneous += other.skips.homogeneous;
        self.skips.oracle_cap += other.skips.oracle_cap;
        self
    }
}

struct Trial<'a> {
    index: usize,
    seed: u64,
    curve: &'a FactoredCurve,
    out: FuzzSummary,
}

impl Trial<'_> {
    fn check(&mut self, property: &str, holds: bool, detail: impl FnOnce() -> String) {
        *self.out.checks.entry(property.to_string()).or_default() += 1;
        if !holds {
            *self
                .out
                .violation_counts
                .entry(property.to_string())
                .or_default() += 1;
            self.out.violations.push(Violation {
                trial: self.index,
                trial_seed: self.seed,
                property: property.to_string(),
                detail: detail(),
                factors: self.curve.factors().iter().map(|f| f.to_string()).collect(),
            });
        }
    }

    fn check_opt(&mut self, property: &str, holds: Option<bool>, detail: impl FnOnce() -> String) {
        if let Some(h) = holds {
            self.check(property, h, detail);
        }
    }

    fn error(&mut self, e: Error) {
        self.check("evaluation", false, || e.to_string());
    }
}

fn run_trial(cfg: &FuzzConfig, index: usize) -> FuzzSummary {
    let seed = trial_seed(cfg.seed, index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (curve, stats) = match random_factored_curve_with_stats(&mut rng, cfg) {
        Ok(c) => c,
        Err(e) => {
            let mut out = FuzzSummary {
                trials_run: 1,
                ..Default::default()
            };
            out.violations.push(Violation {
                trial: index,
                trial_seed: seed,
                property: "generation".into(),
                detail: e.to_string(),
                factors: Vec::new(),
            });
            *out.violation_counts.entry("generation".into()).or_default() += 1;
            return out;
        }
    };
    let mut t = Trial {
        index,
        seed,
        curve: &curve,
        out: FuzzSummary {
            trials_run: 1,
            skips: Skips {
                non_isolated: stats.non_isolated,
                ..Default::default()
            },
            ..Default::default()
        },
    };
    match structural_lemma_checks(&curve) {
        Ok(r) => check_report(&mut t, &r),
        Err(e) => t.error(e),
    }
    if index < cfg.oracle_subsample {
        if let Err(e) = check_oracle(&mut t) {
            match e {
                Error::OracleCap { .. } => t.out.skips.oracle_cap += 1,
                e => t.error(e),
            }
        }
    }
    t.out
}

fn check_report(t: &mut Trial<'_>, r: &LemmaReport) {
    let inv = &r.invariants;
    let (d, ord, mu) = (inv.degree, inv.order, inv.milnor);
    let b = BoundSet::new(d, ord, Some(inv.components));
    t.check("lemma21", r.lemma21.holds, || {
        format!("lhs {} != rhs {}", r.lemma21.lhs, r.lemma21.rhs)
    });
    t.check("bezout", mu <= b.bezout, || {
        format!("mu {mu} > {}", b.bezout)
    });
    if ord < d {
        t.check("thm11", mu <= b.thm11, || format!("mu {mu} > {}", b.thm11));
    } else {
        t.out.skips.homogeneous += 1;
    }
    if ord == 2 {
        t.check("gz", mu <= b.gz, || format!("mu {mu} > {}", b.gz));
    }
    for (i, h) in r.lemma22.iter().enumerate() {
        t.check_opt("lemma22", *h, || {
            format!("factor {i}: mu {} too large", inv.factor_milnor[i])
        });
    }
    t.check_opt("lemma24", r.lemma24_holds, || {
        format!(
            "mu {mu} > {} with {} transverse pairs",
            r.lemma24_bound,
            r.lambda.len()
        )
    });
    t.check_opt("lemma25", r.lemma25_holds, || {
        format!("mu {mu} > {}", r.lemma25_bound)
    });
    t.check_opt("lemma25_equality", r.lemma25_equality_consistent, || {
        format!("equality case mismatch at mu {mu}")
    });
    t.check("lemma27", r.lemma27_holds, || {
        format!("{} > {}", r.lemma27_count, r.lemma27_bound)
    });
    t.check_opt("lemma28", r.lemma28.holds, || {
        format!("{} tangents > {}", r.lemma28.tangent_count, r.lemma28.bound)
    });
    t.check_opt("lemma42", r.lemma42.holds, || format!("{:?}", r.lemma42));
    if let Some(c) = &r.thm14 {
        t.check("thm14", c.passes(), || format!("{c:?}"));
    }
}

fn check_oracle(t: &mut Trial<'_>) -> Result<()> {
    let f = t.curve.factors();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let a = intersection_multiplicity(&f[i], &f[j])?;
            let b = local_quotient_dimension(&f[i], &f[j])?;
            t.check("oracle_i0", a == b, || {
                format!("factors {i},{j}: {a} vs {b}")
            });
        }
        let a = milnor_number(&f[i])?;
        let b = milnor_oracle(&f[i])?;
        t.check("oracle_mu", a == b, || format!("factor {i}: {a} vs {b}"));
    }
    if t.curve.degree() <= ORACLE_PRODUCT_DEGREE {
        let p = t.curve.product();
        let a = milnor_number(&p)?;
        let b = milnor_oracle(&p)?;
        t.check("oracle_mu", a == b, || format!("product: {a} vs {b}"));
    }
    Ok(())
}

/// Runs `cfg.trials` trials in parallel. The summary does not depend on the
/// thread count.
pub fn fuzz_campaign(cfg: &FuzzConfig) -> Result<FuzzSummary> {
    cfg.validate()?;
    let mut summary = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, i))
        .reduce(FuzzSummary::default, FuzzSummary::merge);
    summary.violations.sort();
    summary.config = Some(cfg.clone());
    Ok(summary)
}
