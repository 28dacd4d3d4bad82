//! Seeded counterexample search around the hypothesis boundary.
//!
//! Sampling is deterministic per (seed, sample index), so the index space
//! can be split across any number of workers with bit-identical results.
//! A candidate violation must survive an independent compensated-summation
//! recheck before it is emitted; violations of claims that are proved
//! unconditionally are surfaced as contradictions instead of findings.

use serde::Serialize;

use crate::cyclic::{cater_c, cater_c_lower, cater_c_upper};
use crate::error::{Contradiction, Error};
use crate::rearrangement::{lower_margin_compensated, upper_margin_compensated};
use crate::sample::{sorted_log_uniform, stream, SplitMix64};
use crate::sum::KahanSum;
use crate::tolerance::Tolerance;
use crate::tuple::{PositiveTuple, MAX_ELEMENT, MIN_ELEMENT};

/// Constraint region the tuples are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// Sorted tuples with the hypothesis flag false.
    HypothesisFail,
    /// Sorted tuples with the hypothesis flag true.
    HypothesisHold,
    /// Sorted tuples with no flag constraint.
    Unconstrained,
}

impl Region {
    pub fn parse(text: &str) -> Result<Self, Error> {
        match text {
            "hypothesis-fail" => Ok(Region::HypothesisFail),
            "hypothesis-hold" => Ok(Region::HypothesisHold),
            "unconstrained" => Ok(Region::Unconstrained),
            other => Err(Error::config(format!(
                "unknown region '{other}' (use hypothesis-fail, hypothesis-hold, unconstrained)"
            ))),
        }
    }
}

/// Inequality whose violation is being hunted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// C >= C_lower, proved under the hypothesis flag.
    ViolateLower,
    /// C <= C_upper, proved for every sorted tuple.
    ViolateUpper,
    /// C > 1 + (n-2) min cyclic term, proved for every positive tuple.
    ViolateCater,
}

impl Target {
    pub fn parse(text: &str) -> Result<Self, Error> {
        match text {
            "lower" => Ok(Target::ViolateLower),
            "upper" => Ok(Target::ViolateUpper),
            "cater2" | "cater" => Ok(Target::ViolateCater),
            other => Err(Error::config(format!(
                "unknown target '{other}' (use lower, upper, cater2)"
            ))),
        }
    }
}

/// Sampling plan over a constraint region.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchConfig {
    pub n: usize,
    pub region: Region,
    pub samples: u64,
    pub seed: u64,
    pub value_range: (f64, f64),
    pub target: Target,
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.n < 2 {
            return Err(Error::config(format!("n must be at least 2, got {}", self.n)));
        }
        if self.samples < 1 {
            return Err(Error::config("sample count must be at least 1"));
        }
        let (lo, hi) = self.value_range;
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::config(format!(
                "value range must satisfy lo < hi, got ({lo}, {hi})"
            )));
        }
        if !(lo >= MIN_ELEMENT && hi <= MAX_ELEMENT) {
            return Err(Error::config(format!(
                "value range ({lo:e}, {hi:e}) outside the construction guardrails [{MIN_ELEMENT:e}, {MAX_ELEMENT:e}]"
            )));
        }
        Ok(())
    }
}

/// A verified violation: both the plain margin and the compensated recheck
/// margin are below the negative band.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchFinding {
    pub tuple: Vec<f64>,
    pub margin: f64,
    pub recheck_margin: f64,
    pub hypothesis_h: bool,
    pub seed: u64,
    pub sample_index: u64,
}

/// Outcome of a search run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub config: SearchConfig,
    pub findings: Vec<SearchFinding>,
    pub samples_evaluated: u64,
    pub hypothesis_true_count: u64,
    /// Candidates whose recheck margin did not confirm the violation.
    pub rejected_by_recheck: u64,
}

/// Attempts per sample before the region is declared unreachable.
const RESAMPLE_BUDGET: usize = 10_000;

fn draw_tuple(
    cfg: &SearchConfig,
    rng: &mut SplitMix64,
    sample_index: u64,
) -> Result<PositiveTuple, Error> {
    let (lo, hi) = cfg.value_range;
    match cfg.region {
        Region::Unconstrained => PositiveTuple::new(sorted_log_uniform(rng, cfg.n, lo, hi)),
        Region::HypothesisHold => {
            for _ in 0..RESAMPLE_BUDGET {
                let t = PositiveTuple::new(sorted_log_uniform(rng, cfg.n, lo, hi))?;
                if t.hypothesis_h() {
                    return Ok(t);
                }
            }
            Err(Error::config(format!(
                "hypothesis-hold region unreachable in range ({lo}, {hi}) after {RESAMPLE_BUDGET} draws (sample {sample_index})"
            )))
        }
        Region::HypothesisFail => {
            // Directly parameterize the failing constraint: pick the top
            // element above 1 when the range allows, put the bottom element
            // below e^(-1/an) so a1^an < e^-1, fill the interior uniformly.
            for _ in 0..RESAMPLE_BUDGET {
                let an = if hi > 1.0 {
                    rng.uniform(1.0f64.max(lo), hi)
                } else {
                    rng.log_uniform(lo, hi)
                };
                let threshold = (-1.0 / an).exp();
                if threshold <= lo {
                    continue;
                }
                let a1 = rng.log_uniform(lo, threshold.min(hi));
                if a1 > an {
                    continue;
                }
                let mut values = Vec::with_capacity(cfg.n);
                values.push(a1);
                for _ in 0..cfg.n.saturating_sub(2) {
                    values.push(rng.uniform(a1, an));
                }
                values.push(an);
                values.sort_by(|a, b| a.partial_cmp(b).expect("finite samples"));
                let t = PositiveTuple::new(values)?;
                if !t.hypothesis_h() {
                    return Ok(t);
                }
            }
            Err(Error::config(format!(
                "hypothesis-fail region unreachable in range ({lo}, {hi}) after {RESAMPLE_BUDGET} draws (sample {sample_index})"
            )))
        }
    }
}

struct MarginEval {
    lhs: f64,
    rhs: f64,
    margin: f64,
}

/// Plain margin of the target inequality (nonnegative means it holds),
/// with the two compared values kept for band scaling.
fn plain_margin(target: Target, a: &PositiveTuple) -> Result<MarginEval, Error> {
    Ok(match target {
        Target::ViolateLower => {
            let (lhs, rhs) = (cater_c(a)?, cater_c_lower(a)?);
            MarginEval {
                lhs,
                rhs,
                margin: lhs - rhs,
            }
        }
        Target::ViolateUpper => {
            let (lhs, rhs) = (cater_c_upper(a)?, cater_c(a)?);
            MarginEval {
                lhs,
                rhs,
                margin: lhs - rhs,
            }
        }
        Target::ViolateCater => {
            let v = a.values();
            let n = v.len();
            let mut min_term = f64::INFINITY;
            let mut acc = KahanSum::new();
            for i in 0..n {
                let term = v[i].powf(v[(i + 1) % n]);
                min_term = min_term.min(term);
                acc.add(term);
            }
            let lhs = acc.value();
            let rhs = 1.0 + (n as f64 - 2.0) * min_term;
            MarginEval {
                lhs,
                rhs,
                margin: lhs - rhs,
            }
        }
    })
}

/// Independent recheck of the margin: one compensated pass over the signed
/// terms instead of a difference of separately accumulated sums.
fn recheck_margin(target: Target, a: &PositiveTuple) -> f64 {
    match target {
        Target::ViolateLower => lower_margin_compensated(a),
        Target::ViolateUpper => upper_margin_compensated(a),
        Target::ViolateCater => {
            let v = a.values();
            let n = v.len();
            let mut min_term = f64::INFINITY;
            let mut acc = KahanSum::new();
            acc.add(-1.0);
            for i in 0..n {
                let term = v[i].powf(v[(i + 1) % n]);
                min_term = min_term.min(term);
                acc.add(term);
            }
            acc.add(-(n as f64 - 2.0) * min_term);
            acc.value()
        }
    }
}

/// True when a verified violation would falsify a proved statement rather
/// than probe an unproved region.
fn falsifies_theorem(target: Target, hypothesis_h: bool) -> bool {
    match target {
        Target::ViolateLower => hypothesis_h,
        Target::ViolateUpper | Target::ViolateCater => true,
    }
}

type RangeOutcome = Result<(Vec<SearchFinding>, u64, u64), Error>;

fn search_range(cfg: &SearchConfig, tol: Tolerance, first: u64, last: u64) -> RangeOutcome {
    let mut findings = Vec::new();
    let mut hypothesis_true = 0u64;
    let mut rejected = 0u64;
    for idx in first..last {
        let mut rng = stream(cfg.seed, idx);
        let tuple = draw_tuple(cfg, &mut rng, idx)?;
        if tuple.hypothesis_h() {
            hypothesis_true += 1;
        }
        let eval = plain_margin(cfg.target, &tuple)?;
        let margin = eval.margin;
        let band = tol.band(eval.lhs, eval.rhs);
        if margin >= -band {
            continue;
        }
        let recheck = recheck_margin(cfg.target, &tuple);
        if recheck >= -band {
            rejected += 1;
            continue;
        }
        if falsifies_theorem(cfg.target, tuple.hypothesis_h()) {
            return Err(Error::Contradiction(Box::new(Contradiction {
                context: format!(
                    "search verified a violation of a proved claim ({:?} in {:?} region)",
                    cfg.target, cfg.region
                ),
                tuple: tuple.values().to_vec(),
                perm: None,
                lhs: margin,
                rhs: 0.0,
                margin,
                seed: Some(cfg.seed),
                sample_index: Some(idx),
            })));
        }
        findings.push(SearchFinding {
            tuple: tuple.values().to_vec(),
            margin,
            recheck_margin: recheck,
            hypothesis_h: tuple.hypothesis_h(),
            seed: cfg.seed,
            sample_index: idx,
        });
    }
    Ok((findings, hypothesis_true, rejected))
}

/// Worker count: `CATERLAB_WORKERS` when set and valid, otherwise the
/// machine parallelism.
pub fn worker_count() -> usize {
    if let Ok(text) = std::env::var("CATERLAB_WORKERS") {
        match text.trim().parse::<usize>() {
            Ok(w) if w >= 1 => return w,
            _ => eprintln!("caterlab: ignoring invalid CATERLAB_WORKERS='{text}'"),
        }
    }
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
}

/// Run the search with an explicit worker count. Results are identical for
/// every worker count: sample streams depend only on (seed, index) and the
/// per-range outputs are concatenated in index order.
pub fn counterexample_search_with_workers(
    cfg: &SearchConfig,
    tol: Tolerance,
    workers: usize,
) -> Result<SearchOutcome, Error> {
    cfg.validate()?;
    let workers = workers.clamp(1, 64).min(cfg.samples.max(1) as usize);
    let chunk = cfg.samples.div_ceil(workers as u64);
    let mut parts: Vec<RangeOutcome> = Vec::new();
    if workers == 1 {
        parts.push(search_range(cfg, tol, 0, cfg.samples));
    } else {
        parts = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for w in 0..workers as u64 {
                let first = w * chunk;
                let last = ((w + 1) * chunk).min(cfg.samples);
                if first >= last {
                    continue;
                }
                handles.push(scope.spawn(move || search_range(cfg, tol, first, last)));
            }
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        });
    }
    let mut findings = Vec::new();
    let mut hypothesis_true_count = 0u64;
    let mut rejected_by_recheck = 0u64;
    let mut first_error: Option<Error> = None;
    for part in parts {
        match part {
            Ok((f, h, r)) => {
                findings.extend(f);
                hypothesis_true_count += h;
                rejected_by_recheck += r;
            }
            Err(e) => {
                // Keep the error from the lowest sample range for
                // reproducibility across worker counts.
                if first_error.is_none() {
                    first_error = Some(e);
                }
            }
        }
    }
    if let Some(e) = first_error {
        return Err(e);
    }
    findings.sort_by_key(|f| f.sample_index);
    Ok(SearchOutcome {
        config: *cfg,
        findings,
        samples_evaluated: cfg.samples,
        hypothesis_true_count,
        rejected_by_recheck,
    })
}

/// Run the search with the configured worker count.
pub fn counterexample_search(cfg: &SearchConfig, tol: Tolerance) -> Result<SearchOutcome, Error> {
    counterexample_search_with_workers(cfg, tol, worker_count())
}

/// Region statistics helper used by reports: fraction of sampled tuples
/// with the hypothesis flag set.
pub fn hypothesis_fraction(outcome: &SearchOutcome) -> f64 {
    outcome.hypothesis_true_count as f64 / outcome.samples_evaluated.max(1) as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuple::euler_inv;

    fn config(target: Target, region: Region, n: usize, samples: u64, seed: u64) -> SearchConfig {
        SearchConfig {
            n,
            region,
            samples,
            seed,
            value_range: (1e-3, 2.0),
            target,
        }
    }

    #[test]
    fn validation_rejects_bad_configs() {
        let mut cfg = config(Target::ViolateLower, Region::Unconstrained, 3, 10, 1);
        cfg.n = 1;
        assert!(cfg.validate().is_err());
        let mut cfg = config(Target::ViolateLower, Region::Unconstrained, 3, 10, 1);
        cfg.samples = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = config(Target::ViolateLower, Region::Unconstrained, 3, 10, 1);
        cfg.value_range = (2.0, 1.0);
        assert!(cfg.validate().is_err());
        cfg.value_range = (0.0, 1.0);
        assert!(cfg.validate().is_err());
        cfg.value_range = (1.0, 2e6);
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn hypothesis_fail_region_finds_lower_violations() {
        let cfg = config(Target::ViolateLower, Region::HypothesisFail, 3, 2_000, 7);
        let out = counterexample_search_with_workers(&cfg, Tolerance::default(), 1).unwrap();
        assert!(!out.findings.is_empty());
        for f in &out.findings {
            assert!(!f.hypothesis_h);
            assert!(f.margin < -1e-12 && f.recheck_margin < -1e-12);
            assert_eq!(f.seed, 7);
        }
        assert_eq!(out.hypothesis_true_count, 0);
    }

    #[test]
    fn unconditional_targets_yield_no_findings() {
        for target in [Target::ViolateUpper, Target::ViolateCater] {
            let cfg = config(target, Region::Unconstrained, 4, 20_000, 11);
            let out = counterexample_search_with_workers(&cfg, Tolerance::default(), 2).unwrap();
            assert!(out.findings.is_empty(), "{target:?}");
        }
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let cfg = config(Target::ViolateLower, Region::HypothesisFail, 3, 3_000, 42);
        let tol = Tolerance::default();
        let a = counterexample_search_with_workers(&cfg, tol, 1).unwrap();
        let b = counterexample_search_with_workers(&cfg, tol, 3).unwrap();
        let c = counterexample_search_with_workers(&cfg, tol, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        let json_a = serde_json::to_string(&a).unwrap();
        let json_b = serde_json::to_string(&b).unwrap();
        assert_eq!(json_a, json_b);
    }

    #[test]
    fn unreachable_fail_region_is_a_config_error() {
        // Every element at least 1 forces a1^an >= 1 > e^-1.
        let cfg = SearchConfig {
            n: 3,
            region: Region::HypothesisFail,
            samples: 5,
            seed: 1,
            value_range: (1.0, 2.0),
            target: Target::ViolateLower,
        };
        assert!(matches!(
            counterexample_search_with_workers(&cfg, Tolerance::default(), 1),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn hypothesis_hold_region_sets_flag_on_every_sample() {
        let cfg = SearchConfig {
            n: 4,
            region: Region::HypothesisHold,
            samples: 500,
            seed: 3,
            value_range: (euler_inv(), 10.0),
            target: Target::ViolateLower,
        };
        let out = counterexample_search_with_workers(&cfg, Tolerance::default(), 2).unwrap();
        assert_eq!(out.hypothesis_true_count, 500);
        assert!(out.findings.is_empty());
        assert_eq!(hypothesis_fraction(&out), 1.0);
    }
}
