//! Exact-definition evaluation of the tuple-level cyclic functions:
//! cyclic indexing, cyclic summation, the cyclic power sum C, its upper and
//! lower comparators, and the permutation functional F.
//!
//! All powers are binary64 (`f64::powf`, i.e. exp(y ln x) over the guarded
//! domain) and all sums are compensated, so results are within an ulp of the
//! exact sum of the computed terms.

use crate::error::Error;
use crate::perm::Permutation;
use crate::sum::KahanSum;
use crate::tuple::PositiveTuple;

/// The unique i in 1..=n with k = i (mod n). k may be any integer.
pub fn cyc_index(k: i64, n: usize) -> Result<usize, Error> {
    if n < 2 {
        return Err(Error::domain(format!("cyclic index needs n >= 2, got {n}")));
    }
    // rem_euclid keeps the whole i64 range safe, including i64::MIN.
    let r = k.rem_euclid(n as i64) as usize;
    Ok(if r == 0 { n } else { r })
}

/// Cyclic summation of an m-ary kernel over all n cyclically consecutive
/// windows of the tuple, wrapping with [`cyc_index`].
pub fn cyclic_sum<F>(kernel: F, a: &PositiveTuple, m: usize) -> Result<f64, Error>
where
    F: Fn(&[f64]) -> f64,
{
    let n = a.len();
    if m < 2 || m > n {
        return Err(Error::domain(format!(
            "cyclic window width m={m} outside [2, n={n}]"
        )));
    }
    let values = a.values();
    let mut window = vec![0.0f64; m];
    let mut acc = KahanSum::new();
    for i in 0..n {
        for (d, slot) in window.iter_mut().enumerate() {
            *slot = values[(i + d) % n];
        }
        acc.add(kernel(&window));
    }
    Ok(acc.value())
}

fn require_finite(op: &str, value: f64, a: &PositiveTuple) -> Result<f64, Error> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::non_finite(format!(
            "{op} overflowed on tuple {:?}",
            a.values()
        )))
    }
}

/// The cyclic power sum: sum of a_i^(a_(i+1)) with wraparound a_(n+1) = a_1.
pub fn cater_c(a: &PositiveTuple) -> Result<f64, Error> {
    let value = cyclic_sum(|w| w[0].powf(w[1]), a, 2)?;
    require_finite("C", value, a)
}

/// The upper comparator: sum of a_i^(a_i).
pub fn cater_c_upper(a: &PositiveTuple) -> Result<f64, Error> {
    let mut acc = KahanSum::new();
    for &v in a.values() {
        acc.add(v.powf(v));
    }
    require_finite("C_upper", acc.value(), a)
}

/// The lower comparator: sum of a_i^(a_(n+1-i)), the reversed pairing.
pub fn cater_c_lower(a: &PositiveTuple) -> Result<f64, Error> {
    let values = a.values();
    let n = values.len();
    let mut acc = KahanSum::new();
    for i in 0..n {
        acc.add(values[i].powf(values[n - 1 - i]));
    }
    require_finite("C_lower", acc.value(), a)
}

/// The permutation functional: sum of a_i^(a_(j_i)) for an exponent
/// assignment j. Identity reduces it to the upper comparator, the reversing
/// permutation to the lower one, and the cyclic shift to C itself.
pub fn perm_functional(a: &PositiveTuple, j: &Permutation) -> Result<f64, Error> {
    let n = a.len();
    if j.len() != n {
        return Err(Error::domain(format!(
            "permutation length {} does not match tuple length {n}",
            j.len()
        )));
    }
    let values = a.values();
    let mut acc = KahanSum::new();
    for i in 0..n {
        acc.add(values[i].powf(values[j.image(i)]));
    }
    require_finite("F", acc.value(), a)
}
