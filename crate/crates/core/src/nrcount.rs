//! Image counting for link-value tuples with fixed evaluation points.
//!
//! Fix r evaluation points y_1..y_r in [1, X]. As the free tuple x ranges
//! over [1, X]^(k-r), the link polynomial built from x is evaluated at each
//! y_j, giving a tuple of r integers. `nr_count` reports how many distinct
//! tuples arise; the growth exponent of that image is capped by
//! [`nr_bound_exponent`].

use alloc::vec::Vec;

use core::fmt;

use num_bigint::BigInt;

use crate::budget::Budget;
use crate::exponents::theta;
use crate::symfunc::{elementary_symmetric, link_eval, IntTuple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NrError {
    ZeroXMax,
    /// Requires 2d < k.
    ShiftTooLarge { k: usize, d: usize },
    /// Requires 1 <= r <= k - d so the free tuple has at least d entries.
    SplitOutOfRange { r: usize, k: usize, d: usize },
    /// Evaluation points live in [1, x_max].
    PointOutOfRange { value: u64, x_max: u64 },
    /// Evaluation points must be distinct unless repeats are allowed
    /// explicitly.
    RepeatedPoint { value: u64 },
    /// Enumerating X^(k-r) free tuples exceeds the completion budget.
    CompletionBudgetExceeded { required: u128, allowed: u128 },
}

impl fmt::Display for NrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NrError::ZeroXMax => write!(f, "the range bound X must be at least 1"),
            NrError::ShiftTooLarge { k, d } => write!(f, "need 2d < k, got k={k} d={d}"),
            NrError::SplitOutOfRange { r, k, d } => {
                write!(f, "need 1 <= r <= k - d, got r={r} k={k} d={d}")
            }
            NrError::PointOutOfRange { value, x_max } => {
                write!(f, "evaluation point {value} outside [1, {x_max}]")
            }
            NrError::RepeatedPoint { value } => {
                write!(f, "evaluation point {value} repeats")
            }
            NrError::CompletionBudgetExceeded { required, allowed } => {
                write!(f, "image enumeration needs {required} free tuples, budget allows {allowed}")
            }
        }
    }
}

impl core::error::Error for NrError {}

/// One image-counting instance: system size, shift, fixed evaluation
/// points and range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NrInstance {
    k: usize,
    d: usize,
    y_fixed: Vec<u64>,
    x_max: u64,
}

impl NrInstance {
    /// Validates shapes and requires the evaluation points to be distinct.
    pub fn new(k: usize, d: usize, y_fixed: Vec<u64>, x_max: u64) -> Result<Self, NrError> {
        let inst = Self::with_repeats_allowed(k, d, y_fixed, x_max)?;
        for (i, &v) in inst.y_fixed.iter().enumerate() {
            if inst.y_fixed[..i].contains(&v) {
                return Err(NrError::RepeatedPoint { value: v });
            }
        }
        Ok(inst)
    }

    /// Same shape checks but repeated evaluation points are accepted
    /// (repeats only collapse coordinates of the image tuples).
    pub fn with_repeats_allowed(
        k: usize,
        d: usize,
        y_fixed: Vec<u64>,
        x_max: u64,
    ) -> Result<Self, NrError> {
        if x_max == 0 {
            return Err(NrError::ZeroXMax);
        }
        if 2 * d >= k {
            return Err(NrError::ShiftTooLarge { k, d });
        }
        let r = y_fixed.len();
        if r == 0 || r + d > k {
            return Err(NrError::SplitOutOfRange { r, k, d });
        }
        for &v in &y_fixed {
            if v == 0 || v > x_max {
                return Err(NrError::PointOutOfRange { value: v, x_max });
            }
        }
        Ok(NrInstance { k, d, y_fixed, x_max })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> usize {
        self.y_fixed.len()
    }

    pub fn y_fixed(&self) -> &[u64] {
        &self.y_fixed
    }

    pub fn x_max(&self) -> u64 {
        self.x_max
    }

    /// Free-tuple length k - r.
    pub fn free_len(&self) -> usize {
        self.k - self.r()
    }
}

/// Number of distinct link-value tuples over all free tuples in
/// [1, X]^(k-r). Exact, via full enumeration; refuses to start when the
/// enumeration exceeds the completion budget.
pub fn nr_count(inst: &NrInstance, budget: &Budget) -> Result<u64, NrError> {
    let free = inst.free_len();
    let required = (inst.x_max as u128)
        .checked_pow(free as u32)
        .unwrap_or(u128::MAX);
    if required > budget.max_completions {
        return Err(NrError::CompletionBudgetExceeded {
            required,
            allowed: budget.max_completions,
        });
    }

    let points: Vec<BigInt> = inst.y_fixed.iter().map(|&y| BigInt::from(y)).collect();
    let mut image: alloc::collections::BTreeSet<Vec<BigInt>> = alloc::collections::BTreeSet::new();
    let mut tuple = alloc::vec![1u64; free];
    loop {
        let x = IntTuple::new(tuple.clone()).expect("nonempty positive tuple");
        let sigma = elementary_symmetric(&x, inst.d).expect("d <= free length");
        let links: Vec<BigInt> = points
            .iter()
            .map(|w| link_eval(&sigma, inst.d, w).expect("table order d"))
            .collect();
        image.insert(links);

        let mut pos = 0;
        loop {
            if pos == free {
                break;
            }
            if tuple[pos] < inst.x_max {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = 1;
            pos += 1;
        }
        if pos == free {
            break;
        }
    }
    Ok(image.len() as u64)
}

/// Growth-exponent cap for the image size: the partial sum
/// theta(d, r) = sum over l=1..r of max(d - l + 1, 0), which is
/// simultaneously at most r*d and at most d(d+1)/2.
pub fn nr_bound_exponent(d: u64, r: u64) -> u64 {
    theta(d, r)
}
