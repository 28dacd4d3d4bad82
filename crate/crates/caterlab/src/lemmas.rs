//! Scalar auxiliary functions and lemma-level inequalities behind the upper
//! chain comparison, the dimension-step identity tying the n and n+1 cases
//! together, and the delta-approximants of the lower-comparator infima.

use serde::Serialize;

use crate::cyclic::{cater_c, cater_c_upper};
use crate::error::Error;
use crate::report::EvalReport;
use crate::sum::KahanSum;
use crate::tolerance::Tolerance;
use crate::tuple::{euler_inv, PositiveTuple};

/// The scalar log gap (y - x) ln x + ln y - ln x, positive on the open
/// triangle 0 < x < y < 1. Vanishes identically on the diagonal y = x.
pub fn log_gap(x: f64, y: f64) -> Result<f64, Error> {
    if !(x > 0.0 && x.is_finite()) || !(y > 0.0 && y.is_finite()) {
        return Err(Error::domain(format!(
            "log gap needs positive finite inputs, got ({x}, {y})"
        )));
    }
    Ok((y - x) * x.ln() + (y.ln() - x.ln()))
}

/// Positivity check for the log gap on 0 < x < y < 1, strict.
pub fn log_gap_check(x: f64, y: f64, tol: Tolerance) -> Result<EvalReport, Error> {
    if !(x > 0.0 && x < y && y < 1.0) {
        return Err(Error::domain(format!(
            "log gap positivity is claimed on 0 < x < y < 1, got ({x}, {y})"
        )));
    }
    let gap = log_gap(x, y)?;
    Ok(EvalReport::with_margin(
        "log_gap",
        gap,
        0.0,
        gap,
        tol,
        &[x, y],
    ))
}

/// A point of the region where the extension defect is claimed nonnegative:
/// (x, y, z) with 0 < x, z and max{x, z} <= y. In the dimension step the
/// roles are x = a_1, y = the new maximum a_(n+1), z = the old maximum a_n.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OmegaPoint {
    x: f64,
    y: f64,
    z: f64,
}

impl OmegaPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, Error> {
        for (name, v) in [("x", x), ("y", y), ("z", z)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain(format!(
                    "{name} = {v} must be positive and finite"
                )));
            }
        }
        if x.max(z) > y {
            return Err(Error::domain(format!(
                "({x}, {y}, {z}) violates max(x, z) <= y"
            )));
        }
        Ok(OmegaPoint { x, y, z })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }
}

/// The extension defect y^y + z^x - (z^y + y^x): the amount by which the
/// gap C - C_upper drops when a new maximum y is appended after z.
///
/// Evaluated in the grouped form (y^y - z^y) + (z^x - y^x) so it vanishes
/// exactly when y = z or y = x.
pub fn omega_defect(p: &OmegaPoint) -> f64 {
    let (x, y, z) = (p.x, p.y, p.z);
    (y.powf(y) - z.powf(y)) + (z.powf(x) - y.powf(x))
}

/// Sub-regions of the defect's claimed domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DefectRegion {
    /// y >= 1 (equality iff y = z or y = x).
    YAtLeastOne,
    /// 0 < x <= z <= y < 1 (equality iff y = z).
    InsideUnitInterval,
}

/// Nonnegativity report for the extension defect with its region tag and
/// the predicted equality condition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DefectReport {
    pub report: EvalReport,
    pub region: DefectRegion,
    pub expected_equality: bool,
}

/// Check the defect is nonnegative on the union of the two proved regions.
/// Points of the domain outside that union are rejected: nothing is claimed
/// there.
pub fn omega_defect_check(p: &OmegaPoint, tol: Tolerance) -> Result<DefectReport, Error> {
    let (x, y, z) = (p.x, p.y, p.z);
    let region = if y >= 1.0 {
        DefectRegion::YAtLeastOne
    } else if x <= z {
        DefectRegion::InsideUnitInterval
    } else {
        return Err(Error::domain(format!(
            "({x}, {y}, {z}) lies outside the claimed regions: y < 1 and z < x (nonnegativity is not claimed there)"
        )));
    };
    let expected_equality = match region {
        DefectRegion::YAtLeastOne => y == z || y == x,
        DefectRegion::InsideUnitInterval => y == z,
    };
    let defect = omega_defect(p);
    let lhs = y.powf(y) + z.powf(x);
    let rhs = z.powf(y) + y.powf(x);
    Ok(DefectReport {
        report: EvalReport::with_margin("omega_defect", lhs, rhs, defect, tol, &[x, y, z]),
        region,
        expected_equality,
    })
}

/// Pair checks for two positive reals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwoVarReport {
    /// a^a + b^b >= a^b + b^a, equality iff a = b.
    pub upper: EvalReport,
    /// a^b + b^a > 1, strict.
    pub unit_lower_bound: EvalReport,
}

/// Check the two-variable upper comparison and the unit lower bound.
pub fn two_var_check(a: f64, b: f64, tol: Tolerance) -> Result<TwoVarReport, Error> {
    for (name, v) in [("a", a), ("b", b)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::domain(format!(
                "{name} = {v} must be positive and finite"
            )));
        }
    }
    let straight = a.powf(a) + b.powf(b);
    let crossed = a.powf(b) + b.powf(a);
    let margin = (a.powf(a) - a.powf(b)) + (b.powf(b) - b.powf(a));
    let upper = EvalReport::with_margin("two_var_upper", straight, crossed, margin, tol, &[a, b]);
    let unit_lower_bound = EvalReport::geq("two_var_unit", crossed, 1.0, tol, &[a, b]);
    Ok(TwoVarReport {
        upper,
        unit_lower_bound,
    })
}

/// The 1980 lower bound: C > 1 + (n - 2) min of the n cyclic terms,
/// unconditional on positive tuples (sortedness not required).
pub fn cater_inequality_check(a: &PositiveTuple, tol: Tolerance) -> Result<EvalReport, Error> {
    let n = a.len();
    let v = a.values();
    let mut min_term = f64::INFINITY;
    let mut acc = KahanSum::new();
    for i in 0..n {
        let term = v[i].powf(v[(i + 1) % n]);
        if !term.is_finite() {
            return Err(Error::non_finite(format!(
                "cyclic term {} overflowed on tuple {:?}",
                i + 1,
                v
            )));
        }
        min_term = min_term.min(term);
        acc.add(term);
    }
    let c = acc.value();
    let rhs = 1.0 + (n as f64 - 2.0) * min_term;
    Ok(EvalReport::geq("cater_inequality", c, rhs, tol, v))
}

/// The dimension-step identity: for a sorted tuple of length n+1,
///
///   C(a_1..a_(n+1)) - C_upper(a_1..a_(n+1))
///     = [C(a_1..a_n) - C_upper(a_1..a_n)] - defect(a_1, a_(n+1), a_n).
///
/// Exact in real arithmetic; only summation order contributes noise, so the
/// identity band applies.
pub fn induction_identity_check(a: &PositiveTuple, tol: Tolerance) -> Result<EvalReport, Error> {
    let n_plus_1 = a.len();
    if n_plus_1 < 3 {
        return Err(Error::domain(
            "identity check needs a tuple of length at least 3",
        ));
    }
    if !a.sorted_ascending() {
        return Err(Error::domain("identity check requires a sorted tuple"));
    }
    let v = a.values();
    let prefix = PositiveTuple::new(v[..n_plus_1 - 1].to_vec())?;
    let lhs = cater_c(a)? - cater_c_upper(a)?;
    let p = OmegaPoint::new(v[0], v[n_plus_1 - 1], v[n_plus_1 - 2])?;
    let rhs = (cater_c(&prefix)? - cater_c_upper(&prefix)?) - omega_defect(&p);
    Ok(EvalReport::with_margin(
        "induction_identity",
        lhs,
        rhs,
        lhs - rhs,
        tol,
        v,
    ))
}

/// Parity of the tuple length in the infimum construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// Lower-comparator value of the delta-approximant tuple:
/// even, n = 2m: (delta x m, 1 x m), approaching m from above;
/// odd, n = 2m+1: (delta x m, e^-1, 1 x m), approaching m + e^(-e^(-1)).
pub fn infimum_approximant(m: usize, parity: Parity, delta: f64) -> Result<f64, Error> {
    if m < 1 {
        return Err(Error::domain("infimum construction needs m >= 1"));
    }
    if !(delta > 0.0 && delta <= 0.1) {
        return Err(Error::domain(format!(
            "delta = {delta} outside the accepted range (0, 0.1]"
        )));
    }
    let mut values = vec![delta; m];
    if parity == Parity::Odd {
        values.push(euler_inv());
    }
    values.extend(std::iter::repeat_n(1.0, m));
    let tuple = PositiveTuple::new(values)?;
    crate::cyclic::cater_c_lower(&tuple)
}

/// Limit approached by [`infimum_approximant`] as delta tends to zero.
pub fn infimum_limit(m: usize, parity: Parity) -> f64 {
    match parity {
        Parity::Even => m as f64,
        Parity::Odd => m as f64 + (-euler_inv()).exp(),
    }
}

/// Number of sample points one battery evaluates, with its outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatteryResult {
    pub name: String,
    pub samples: u64,
    pub violations: u64,
    pub equality_mismatches: u64,
    pub worst_margin: f64,
}

/// Results of the lemma property batteries, one entry per claim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaBatteries {
    pub seed: u64,
    pub samples_per_battery: u64,
    pub batteries: Vec<BatteryResult>,
}

impl LemmaBatteries {
    pub fn all_clean(&self) -> bool {
        self.batteries
            .iter()
            .all(|b| b.violations == 0 && b.equality_mismatches == 0)
    }
}

/// Run the sampled lemma batteries: log-gap positivity, defect
/// nonnegativity on both regions (with equality spot checks), the pair
/// checks, the 1980 lower bound on unsorted tuples, and the dimension-step
/// identity. Seeded and deterministic.
pub fn run_batteries(samples: u64, seed: u64, tol: Tolerance) -> Result<LemmaBatteries, Error> {
    use crate::report::Verdict;
    use crate::sample::stream;

    let mut batteries = Vec::new();

    // Log gap on 0 < x < y < 1.
    {
        let mut worst = f64::INFINITY;
        let mut violations = 0u64;
        for idx in 0..samples {
            let mut rng = stream(seed ^ 0x11, idx);
            let (mut x, mut y) = (rng.next_f64(), rng.next_f64());
            if x > y {
                std::mem::swap(&mut x, &mut y);
            }
            if x <= 0.0 || x == y || y >= 1.0 {
                continue;
            }
            let r = log_gap_check(x, y, tol)?;
            worst = worst.min(r.margin);
            if r.verdict == Verdict::Violated {
                violations += 1;
            }
        }
        batteries.push(BatteryResult {
            name: "log_gap_positive".into(),
            samples,
            violations,
            equality_mismatches: 0,
            worst_margin: worst,
        });
    }

    // Defect on the y >= 1 region, with equality spot checks on y = z and
    // y = x.
    {
        let mut worst = f64::INFINITY;
        let mut violations = 0u64;
        let mut equality_mismatches = 0u64;
        for idx in 0..samples {
            let mut rng = stream(seed ^ 0x22, idx);
            let y = rng.uniform(1.0, 10.0);
            let x = rng.uniform(0.0, y).max(f64::MIN_POSITIVE);
            let z = rng.uniform(0.0, y).max(f64::MIN_POSITIVE);
            let p = OmegaPoint::new(x, y, z)?;
            let r = omega_defect_check(&p, tol)?;
            worst = worst.min(r.report.margin);
            if r.report.verdict == Verdict::Violated {
                violations += 1;
            }
            // Equality manifolds, every 16th sample.
            if idx % 16 == 0 {
                let on_diag = omega_defect_check(&OmegaPoint::new(x, y, y)?, tol)?;
                let on_x = omega_defect_check(&OmegaPoint::new(y, y, z)?, tol)?;
                if !on_diag.expected_equality
                    || on_diag.report.verdict != Verdict::Equality
                    || !on_x.expected_equality
                    || on_x.report.verdict != Verdict::Equality
                {
                    equality_mismatches += 1;
                }
            }
        }
        batteries.push(BatteryResult {
            name: "defect_y_at_least_one".into(),
            samples,
            violations,
            equality_mismatches,
            worst_margin: worst,
        });
    }

    // Defect on 0 < x <= z <= y < 1: three sorted uniforms.
    {
        let mut worst = f64::INFINITY;
        let mut violations = 0u64;
        let mut equality_mismatches = 0u64;
        for idx in 0..samples {
            let mut rng = stream(seed ^ 0x33, idx);
            let mut coords = [rng.next_f64(), rng.next_f64(), rng.next_f64()];
            coords.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let [x, z, y] = coords;
            if x <= 0.0 || y >= 1.0 {
                continue;
            }
            let p = OmegaPoint::new(x, y, z)?;
            let r = omega_defect_check(&p, tol)?;
            worst = worst.min(r.report.margin);
            if r.report.verdict == Verdict::Violated {
                violations += 1;
            }
            if idx % 16 == 0 {
                let on_diag = omega_defect_check(&OmegaPoint::new(x, y, y)?, tol)?;
                if !on_diag.expected_equality || on_diag.report.verdict != Verdict::Equality {
                    equality_mismatches += 1;
                }
            }
        }
        batteries.push(BatteryResult {
            name: "defect_inside_unit_interval".into(),
            samples,
            violations,
            equality_mismatches,
            worst_margin: worst,
        });
    }

    // Pair checks on log-uniform pairs, plus diagonal equality.
    {
        let mut worst = f64::INFINITY;
        let mut violations = 0u64;
        let mut equality_mismatches = 0u64;
        for idx in 0..samples {
            let mut rng = stream(seed ^ 0x44, idx);
            let a = rng.log_uniform(1e-3, 10.0);
            let b = rng.log_uniform(1e-3, 10.0);
            let r = two_var_check(a, b, tol)?;
            worst = worst.min(r.upper.margin.min(r.unit_lower_bound.margin));
            if r.upper.verdict == Verdict::Violated
                || r.unit_lower_bound.verdict == Verdict::Violated
            {
                violations += 1;
            }
            // Off the diagonal the upper margin must be strictly positive.
            if (a - b).abs() >= 1e-6 && r.upper.margin <= 0.0 {
                violations += 1;
            }
            if idx % 16 == 0 {
                let diag = two_var_check(a, a, tol)?;
                if diag.upper.verdict != Verdict::Equality || diag.upper.margin != 0.0 {
                    equality_mismatches += 1;
                }
            }
        }
        batteries.push(BatteryResult {
            name: "two_var".into(),
            samples,
            violations,
            equality_mismatches,
            worst_margin: worst,
        });
    }

    // 1980 lower bound on unsorted tuples, n in 2..=10.
    {
        let mut worst = f64::INFINITY;
        let mut violations = 0u64;
        for idx in 0..samples {
            let mut rng = stream(seed ^ 0x55, idx);
            let n = 2 + rng.below(9) as usize;
            let values: Vec<f64> = (0..n).map(|_| rng.log_uniform(1e-3, 10.0)).collect();
            let a = PositiveTuple::new(values)?;
            let r = cater_inequality_check(&a, tol)?;
            worst = worst.min(r.margin);
            if r.verdict == Verdict::Violated {
                violations += 1;
            }
        }
        batteries.push(BatteryResult {
            name: "cater_lower_bound".into(),
            samples,
            violations,
            equality_mismatches: 0,
            worst_margin: worst,
        });
    }

    // Dimension-step identity on sorted tuples, length 3..=20.
    {
        let identity_samples = (samples / 10).max(1);
        let identity_tol = Tolerance::identity();
        let mut worst = f64::INFINITY;
        let mut violations = 0u64;
        for idx in 0..identity_samples {
            let mut rng = stream(seed ^ 0x66, idx);
            let n_plus_1 = 3 + rng.below(18) as usize;
            let a = PositiveTuple::new(crate::sample::sorted_log_uniform(
                &mut rng, n_plus_1, 0.1, 2.5,
            ))?;
            let r = induction_identity_check(&a, identity_tol)?;
            worst = worst.min(-r.margin.abs());
            if r.verdict != Verdict::Equality {
                violations += 1;
            }
        }
        batteries.push(BatteryResult {
            name: "dimension_step_identity".into(),
            samples: identity_samples,
            violations,
            equality_mismatches: 0,
            worst_margin: worst,
        });
    }

    Ok(LemmaBatteries {
        seed,
        samples_per_battery: samples,
        batteries,
    })
}
