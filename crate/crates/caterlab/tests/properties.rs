//! Module-invariant batteries that are not already covered by the
//! acceptance criteria: the permutation sandwich, the universal n/2 lower
//! bound, swap-inequality sampling, range guardrails at scale, witness
//! tuples across lengths, the sampled-mean comparison against the upper
//! Riemann sum, and large zero-finding searches for the unconditional
//! claims.

use caterlab::explorer::{
    counterexample_search_with_workers, integral_mean, riemann_mean, sampled_tuple,
    witness_tuple, FunctionSpec, Region, SearchConfig, Target,
};
use caterlab::perm::{for_each_permutation, Permutation};
use caterlab::sample::{hypothesis_tuple, random_permutation, sorted_log_uniform, stream};
use caterlab::sum::KahanSum;
use caterlab::tuple::euler_inv;
use caterlab::{
    brute_force_scan, cater_c, cater_c_lower, cater_c_upper, perm_functional,
    swap_inequality_check, verify_chain, PositiveTuple, Tolerance, Verdict,
};

/// Every permutation functional value sits between the lower and upper
/// comparators on hypothesis tuples: exhaustively for n <= 7, by sampled
/// permutations for 8 <= n <= 12.
#[test]
fn permutation_sandwich() {
    let tol = Tolerance::default();
    for n in 2..=7usize {
        for idx in 0..40u64 {
            let mut rng = stream(0xA1 ^ (n as u64) << 24, idx);
            let a = hypothesis_tuple(&mut rng, n, euler_inv(), 10.0, 10_000).unwrap();
            let lower = cater_c_lower(&a).unwrap();
            let upper = cater_c_upper(&a).unwrap();
            let mut violations = 0u64;
            for_each_permutation(n, |p| {
                let f = perm_functional(&a, p).unwrap();
                if f < lower - tol.band(f, lower) || f > upper + tol.band(f, upper) {
                    violations += 1;
                }
            });
            assert_eq!(violations, 0, "n={n}, tuple {idx}");
        }
    }
    for n in 8..=12usize {
        let mut rng = stream(0xA2, n as u64);
        let a = hypothesis_tuple(&mut rng, n, euler_inv(), 10.0, 10_000).unwrap();
        let lower = cater_c_lower(&a).unwrap();
        let upper = cater_c_upper(&a).unwrap();
        for _ in 0..10_000u64 {
            let p = random_permutation(&mut rng, n);
            let f = perm_functional(&a, &p).unwrap();
            assert!(f >= lower - tol.band(f, lower), "n={n}");
            assert!(f <= upper + tol.band(f, upper), "n={n}");
        }
    }
}

/// The lower comparator exceeds n/2 on every positive tuple, sorted or not.
#[test]
fn lower_comparator_exceeds_half_n() {
    for n in 2..=10usize {
        let mut worst = f64::INFINITY;
        for idx in 0..100_000u64 {
            let mut rng = stream(0xA3 ^ (n as u64) << 16, idx);
            let values: Vec<f64> = (0..n).map(|_| rng.log_uniform(1e-3, 10.0)).collect();
            let a = PositiveTuple::new(values).unwrap();
            let v = cater_c_lower(&a).unwrap();
            worst = worst.min(v - n as f64 / 2.0);
            assert!(v > n as f64 / 2.0, "n={n}: C_lower = {v}");
        }
        assert!(worst > 0.0, "n={n}: worst excess {worst}");
    }
}

/// All evaluators stay finite and positive on [1e-6, 1e2]^n up to n = 64.
#[test]
fn finite_outputs_on_moderate_ranges() {
    for idx in 0..10_000u64 {
        let mut rng = stream(0xA4, idx);
        let n = 2 + rng.below(63) as usize;
        let values: Vec<f64> = (0..n).map(|_| rng.log_uniform(1e-6, 1e2)).collect();
        let a = PositiveTuple::new(values).unwrap();
        let p = random_permutation(&mut rng, n);
        for v in [
            cater_c(&a).unwrap(),
            cater_c_upper(&a).unwrap(),
            cater_c_lower(&a).unwrap(),
            perm_functional(&a, &p).unwrap(),
        ] {
            assert!(v.is_finite() && v > 0.0);
        }
    }
}

/// The pairwise swap inequality never reports a violation on the
/// hypothesis region.
#[test]
fn swap_inequality_never_violated() {
    let tol = Tolerance::default();
    let mut checked = 0u64;
    for idx in 0..100_000u64 {
        let mut rng = stream(0xA5, idx);
        let n = 2 + rng.below(9) as usize;
        let a = hypothesis_tuple(&mut rng, n, euler_inv(), 10.0, 10_000).unwrap();
        let j = random_permutation(&mut rng, n);
        // Random position pair; orient so the preconditions hold.
        let i = 1 + rng.below(n as u64 - 1) as usize;
        let k = i + 1 + rng.below((n - i) as u64) as usize;
        let (i, k) = if j.image(i - 1) < j.image(k - 1) {
            (i, k)
        } else {
            continue;
        };
        let r = swap_inequality_check(&a, i, k, &j, tol).unwrap();
        assert_ne!(r.verdict, Verdict::Violated, "tuple {:?}", a.values());
        checked += 1;
    }
    assert!(checked > 40_000, "enough oriented configurations sampled");
}

/// Exhaustive scans on constant tuples count all permutations and collapse
/// the extremes.
#[test]
fn scans_on_constant_tuples() {
    let tol = Tolerance::default();
    let mut factorial = 1u64;
    for n in 2..=7usize {
        factorial *= n as u64;
        let a = PositiveTuple::constant(n, 0.8).unwrap();
        let scan = brute_force_scan(&a, 8, tol).unwrap();
        assert_eq!(scan.count, factorial);
        assert_eq!(scan.min_value, scan.max_value);
    }
}

/// Witness tuples pass the lower chain comparison for every n up to 64.
#[test]
fn witness_tuples_across_lengths() {
    let tol = Tolerance::default();
    for n in 2..=64usize {
        let t = witness_tuple(n).unwrap();
        assert!(t.hypothesis_h(), "n={n}");
        let chain = verify_chain(&t, tol).unwrap();
        assert!(chain.lower.holds_or_equality(), "n={n}");
        assert!(chain.upper.holds_or_equality(), "n={n}");
    }
}

/// The sampled cyclic mean never exceeds the upper-comparator Riemann sum:
/// the chain inequality applied to the sampled tuple at every n.
#[test]
fn sampled_mean_below_upper_riemann_sum() {
    let tol = Tolerance::default();
    let specs = [
        FunctionSpec::constant(2.0).unwrap(),
        FunctionSpec::affine(1.0, 1.0).unwrap(),
        FunctionSpec::power(0.5, 0.5, 2.0).unwrap(),
        FunctionSpec::exp_scaled(0.8, 0.5).unwrap(),
    ];
    for f in &specs {
        for n in [10usize, 100, 1000, 10_000] {
            let mean = riemann_mean(f, n).unwrap();
            let tuple = sampled_tuple(f, n).unwrap();
            let mut acc = KahanSum::new();
            for &v in tuple.values() {
                acc.add(v.powf(v));
            }
            let upper_sum = acc.value() / n as f64;
            assert!(
                mean <= upper_sum + tol.band(mean, upper_sum),
                "{} at n={n}: {mean} > {upper_sum}",
                f.label()
            );
        }
    }
}

/// Large seeded searches for the two unconditional claims emit nothing.
/// A single finding would surface as a contradiction error instead.
#[test]
fn unconditional_claims_survive_large_searches() {
    let tol = Tolerance::default();
    for (target, seed) in [(Target::ViolateUpper, 0xA6u64), (Target::ViolateCater, 0xA7)] {
        let cfg = SearchConfig {
            n: 4,
            region: Region::Unconstrained,
            samples: 1_000_000,
            seed,
            value_range: (1e-3, 10.0),
            target,
        };
        let outcome = counterexample_search_with_workers(&cfg, tol, 2).unwrap();
        assert!(outcome.findings.is_empty(), "{target:?}");
        assert_eq!(outcome.samples_evaluated, 1_000_000);
    }
}

/// The quadrature error estimate is honest: tightening the tolerance moves
/// the value by no more than the looser estimate allows.
#[test]
fn integral_estimates_are_consistent() {
    for f in [
        FunctionSpec::affine(1.0, 1.0).unwrap(),
        FunctionSpec::power(0.5, 0.5, 2.0).unwrap(),
        FunctionSpec::exp_scaled(0.8, 0.5).unwrap(),
    ] {
        let loose = integral_mean(&f, 1e-8).unwrap();
        let tight = integral_mean(&f, 1e-10).unwrap();
        assert!(
            (loose.value - tight.value).abs() <= 2e-8,
            "{}",
            f.label()
        );
    }
}

/// Rotating a tuple permutes the cyclic terms without changing their
/// multiset, so the cyclic sum agrees to near machine precision.
#[test]
fn rotation_invariance_at_scale() {
    let tol = Tolerance::new(0.0, 1e-14);
    for idx in 0..2_000u64 {
        let mut rng = stream(0xA8, idx);
        let n = 2 + rng.below(15) as usize;
        let a = PositiveTuple::new(sorted_log_uniform(&mut rng, n, 1e-3, 1e2)).unwrap();
        let c = cater_c(&a).unwrap();
        let shift = 1 + rng.below(n as u64 - 1) as usize;
        let cr = cater_c(&a.rotated(shift)).unwrap();
        assert!((c - cr).abs() <= tol.band(c, cr));
    }
}

/// Reversal pairing really is the identity on pairs: the scan, the chain
/// verdicts, and the direct evaluators agree on n = 2.
#[test]
fn pairs_collapse_lower_to_c() {
    let tol = Tolerance::default();
    for idx in 0..2_000u64 {
        let mut rng = stream(0xA9, idx);
        let a = PositiveTuple::new(sorted_log_uniform(&mut rng, 2, 1e-3, 10.0)).unwrap();
        assert_eq!(cater_c(&a).unwrap(), cater_c_lower(&a).unwrap());
        let chain = verify_chain(&a, tol).unwrap();
        assert_eq!(chain.lower.verdict, Verdict::Equality);
        let scan = brute_force_scan(&a, 8, tol);
        match scan {
            Ok(s) => assert_eq!(s.count, 2),
            Err(e) => panic!("pair scan failed: {e}"),
        }
        let _ = Permutation::reversed(2);
    }
}
