//! Permutations of {1, ..., n} used as exponent assignments.
//!
//! Reports and documentation use one-based images to match the usual
//! statement of the rearrangement argument; storage is zero-based.

use serde::{Serialize, Serializer};

use crate::error::Error;

/// A bijection of {1, ..., n}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>, // zero-based images
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// The reversing permutation n, n-1, ..., 1.
    pub fn reversed(n: usize) -> Self {
        Permutation {
            map: (0..n).rev().collect(),
        }
    }

    /// Build from one-based images, validating bijectivity.
    pub fn from_one_based(images: &[usize]) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &j in images {
            if j < 1 || j > n {
                return Err(Error::domain(format!(
                    "permutation image {j} outside 1..={n}"
                )));
            }
            if seen[j - 1] {
                return Err(Error::domain(format!("permutation image {j} repeated")));
            }
            seen[j - 1] = true;
            map.push(j - 1);
        }
        Ok(Permutation { map })
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.map.iter().map(|j| j + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Zero-based image of zero-based position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn swap_positions(&mut self, i: usize, k: usize) {
        self.map.swap(i, k);
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_reversed(&self) -> bool {
        let n = self.map.len();
        self.map.iter().enumerate().all(|(i, &j)| j == n - 1 - i)
    }

    /// Position (zero-based) currently holding the zero-based image `value`.
    pub fn position_of(&self, value: usize) -> usize {
        self.map
            .iter()
            .position(|&j| j == value)
            .expect("value present in a bijection")
    }

    /// Advance to the lexicographic successor in place. Returns false (and
    /// leaves the permutation unchanged) when this is already the last one.
    pub fn next_lexicographic(&mut self) -> bool {
        let m = &mut self.map;
        let n = m.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && m[i - 1] >= m[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut k = n - 1;
        while m[k] <= m[i - 1] {
            k -= 1;
        }
        m.swap(i - 1, k);
        m[i..].reverse();
        true
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.one_based().serialize(serializer)
    }
}

/// Visit every permutation of {1, ..., n} in lexicographic order,
/// starting from the identity. Streaming, no factorial-sized allocation.
pub fn for_each_permutation<F: FnMut(&Permutation)>(n: usize, mut f: F) {
    let mut p = Permutation::identity(n);
    loop {
        f(&p);
        if !p.next_lexicographic() {
            break;
        }
    }
}
