//! Ordered tuples of strictly positive reals, the common input of every
//! cyclic evaluator. Construction enforces the open-domain and range
//! guardrails and caches the sortedness and hypothesis flags.

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Smallest accepted element. The domain is open at zero; infima are only
/// approached through explicit delta sequences.
pub const MIN_ELEMENT: f64 = 1e-300;

/// Largest accepted element, keeping exp/ln compositions in safe range.
pub const MAX_ELEMENT: f64 = 1e6;

/// e^-1, the threshold in the hypothesis `a1^an >= e^-1`.
pub fn euler_inv() -> f64 {
    (-1.0f64).exp()
}

/// List of strictly positive reals, length >= 2, with cached flags.
///
/// `sorted_ascending` is true iff the values are nondecreasing;
/// `hypothesis_h` additionally requires `a1^an >= e^-1`, the sufficient
/// condition under which the lower chain inequality is proved.
#[derive(Debug, Clone, PartialEq)]
pub struct PositiveTuple {
    values: Vec<f64>,
    sorted_ascending: bool,
    hypothesis_h: bool,
}

impl PositiveTuple {
    pub fn new(values: Vec<f64>) -> Result<Self, Error> {
        if values.len() < 2 {
            return Err(Error::domain(format!(
                "tuple length must be at least 2, got {}",
                values.len()
            )));
        }
        for (i, v) in values.iter().enumerate() {
            if !(*v >= MIN_ELEMENT && *v <= MAX_ELEMENT) {
                return Err(Error::domain(format!(
                    "element {} = {v:e} outside the accepted range [{MIN_ELEMENT:e}, {MAX_ELEMENT:e}]",
                    i + 1
                )));
            }
        }
        let sorted_ascending = values.windows(2).all(|w| w[0] <= w[1]);
        let hypothesis_h =
            sorted_ascending && values[0].powf(values[values.len() - 1]) >= euler_inv();
        Ok(PositiveTuple {
            values,
            sorted_ascending,
            hypothesis_h,
        })
    }

    /// Constant tuple (t, ..., t) with n entries.
    pub fn constant(n: usize, t: f64) -> Result<Self, Error> {
        Self::new(vec![t; n])
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sorted_ascending(&self) -> bool {
        self.sorted_ascending
    }

    pub fn hypothesis_h(&self) -> bool {
        self.hypothesis_h
    }

    /// Tuple rotated left by `shift` positions (same multiset of values).
    pub fn rotated(&self, shift: usize) -> Self {
        let n = self.values.len();
        let mut values = Vec::with_capacity(n);
        for i in 0..n {
            values.push(self.values[(i + shift) % n]);
        }
        Self::new(values).expect("rotation preserves validity")
    }
}

impl Serialize for PositiveTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}
