//! Exact rational exponent formulas bounding the nondiagonal solution count.
//!
//! For a system of k pairs of variables with omission shift d, the governing
//! exponent is gamma(k, d) = min over 2 <= r <= k of r + k/r + theta(d, r),
//! where theta(d, r) = sum_{l=1..r} max(d - l + 1, 0). The refined variant
//! replaces k/r by omega(k, r) = psi_r(k) / k^(r-1) with
//! psi_r(k) = sum_{i=1..k-1} i^(r-1). All values are exact rationals;
//! square-root bounds are checked by comparing squares, never by floats.

use alloc::vec::Vec;

use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExponentError {
    KTooSmall { k: u64, min: u64 },
    RTooSmall { r: u64, min: u64 },
    /// The omission shift must satisfy 2d < k.
    ShiftTooLarge { k: u64, d: u64 },
}

impl fmt::Display for ExponentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentError::KTooSmall { k, min } => write!(f, "k = {k} too small; need k >= {min}"),
            ExponentError::RTooSmall { r, min } => write!(f, "r = {r} too small; need r >= {min}"),
            ExponentError::ShiftTooLarge { k, d } => {
                write!(f, "shift d = {d} too large for k = {k}: need 2d < k")
            }
        }
    }
}

impl core::error::Error for ExponentError {}

/// theta(d, r) = sum_{l=1..r} max(d - l + 1, 0); the shift surcharge paid by
/// using r sides.
pub fn theta(d: u64, r: u64) -> u64 {
    (1..=r).map(|l| (d + 1).saturating_sub(l)).sum()
}

/// psi_r(k) = sum_{i=1..k-1} i^(r-1). Requires r >= 1.
pub fn psi(k: u64, r: u64) -> Result<BigUint, ExponentError> {
    if r < 1 {
        return Err(ExponentError::RTooSmall { r, min: 1 });
    }
    let mut acc = BigUint::zero();
    for i in 1..k {
        acc += BigUint::from(i).pow((r - 1) as u32);
    }
    Ok(acc)
}

/// omega(k, r) = psi_r(k) / k^(r-1), the refinement of k/r. Requires
/// k >= 2 and r >= 2.
pub fn omega(k: u64, r: u64) -> Result<BigRational, ExponentError> {
    if k < 2 {
        return Err(ExponentError::KTooSmall { k, min: 2 });
    }
    if r < 2 {
        return Err(ExponentError::RTooSmall { r, min: 2 });
    }
    let num = BigInt::from(psi(k, r)?);
    let den = BigInt::from(k).pow((r - 1) as u32);
    Ok(BigRational::new(num, den))
}

/// A minimized exponent value together with the r attaining it (ties broken
/// toward the smaller r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaValue {
    pub value: BigRational,
    pub argmin_r: u64,
}

fn minimize<F>(k: u64, d: u64, term: F) -> Result<GammaValue, ExponentError>
where
    F: Fn(u64) -> Result<BigRational, ExponentError>,
{
    if k < 3 {
        return Err(ExponentError::KTooSmall { k, min: 3 });
    }
    if 2 * d >= k {
        return Err(ExponentError::ShiftTooLarge { k, d });
    }
    let mut best: Option<GammaValue> = None;
    for r in 2..=k {
        let value = BigRational::from(BigInt::from(r))
            + term(r)?
            + BigRational::from(BigInt::from(theta(d, r)));
        match &best {
            Some(b) if value >= b.value => {}
            _ => best = Some(GammaValue { value, argmin_r: r }),
        }
    }
    Ok(best.expect("k >= 3 gives a nonempty range"))
}

/// gamma(k, d) = min_{2<=r<=k} (r + k/r + theta(d, r)).
pub fn gamma(k: u64, d: u64) -> Result<GammaValue, ExponentError> {
    minimize(k, d, |r| Ok(BigRational::new(BigInt::from(k), BigInt::from(r))))
}

/// gamma_refined(k, d) = min_{2<=r<=k} (r + omega(k, r) + theta(d, r)).
/// Never exceeds gamma(k, d) since omega(k, r) < k/r.
pub fn gamma_refined(k: u64, d: u64) -> Result<GammaValue, ExponentError> {
    minimize(k, d, |r| omega(k, r))
}

/// Whether q <= sqrt(n), decided exactly: true when q <= 0, otherwise by
/// comparing q^2 <= n.
fn le_sqrt(q: &BigRational, n: &BigInt) -> bool {
    if !q.is_positive() {
        return true;
    }
    q.numer() * q.numer() <= n * q.denom() * q.denom()
}

/// One conditional bound: the hypothesis on (k, d), and whether the claimed
/// inequality holds. The conclusion is evaluated unconditionally so reports
/// can show near-misses; `holds` is the implication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundCheck {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

/// The four conditional bounds reported for each (k, d).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    /// d <= sqrt(k) implies gamma <= sqrt(4k+1) + d(d+1)/2.
    pub small_shift_sqrt: BoundCheck,
    /// d >= 1 and k >= 4d+3 imply gamma <= k - 1/2.
    pub below_k_minus_half: BoundCheck,
    /// d >= 1 and k >= 4d+2 imply gamma_refined <= k - 1/2.
    pub refined_below_k_minus_half: BoundCheck,
    /// 1 <= d <= k/4 implies gamma <= sqrt(4k(d+1) + (d+1)^2).
    pub moderate_shift_sqrt: BoundCheck,
}

/// Evaluates all four conditional bounds exactly.
pub fn bound_report(k: u64, d: u64) -> Result<BoundReport, ExponentError> {
    let g = gamma(k, d)?.value;
    let g_refined = gamma_refined(k, d)?.value;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let k_minus_half = BigRational::from(BigInt::from(k)) - &half;

    let small_shift_sqrt = BoundCheck {
        hypothesis: d * d <= k,
        // gamma - d(d+1)/2 <= sqrt(4k+1)
        conclusion: le_sqrt(
            &(&g - BigRational::new(BigInt::from(d * (d + 1)), BigInt::from(2))),
            &BigInt::from(4 * k + 1),
        ),
    };
    let below_k_minus_half = BoundCheck {
        hypothesis: d >= 1 && k >= 4 * d + 3,
        conclusion: g <= k_minus_half,
    };
    let refined_below_k_minus_half = BoundCheck {
        hypothesis: d >= 1 && k >= 4 * d + 2,
        conclusion: g_refined <= k_minus_half,
    };
    let moderate_shift_sqrt = BoundCheck {
        hypothesis: d >= 1 && 4 * d <= k,
        conclusion: le_sqrt(&g, &BigInt::from(4 * k * (d + 1) + (d + 1) * (d + 1))),
    };

    Ok(BoundReport {
        small_shift_sqrt,
        below_k_minus_half,
        refined_below_k_minus_half,
        moderate_shift_sqrt,
    })
}

/// Everything the exponents command reports for one (k, d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentReport {
    pub k: u64,
    pub d: u64,
    pub gamma: GammaValue,
    pub gamma_refined: GammaValue,
    /// (r, theta(d, r)) for r = 1..=k.
    pub theta_by_r: Vec<(u64, u64)>,
    /// (r, omega(k, r)) for r = 2..=k.
    pub omega_by_r: Vec<(u64, BigRational)>,
    pub bounds: BoundReport,
}

pub fn exponent_report(k: u64, d: u64) -> Result<ExponentReport, ExponentError> {
    let gamma_v = gamma(k, d)?;
    let refined_v = gamma_refined(k, d)?;
    let theta_by_r = (1..=k).map(|r| (r, theta(d, r))).collect();
    let omega_by_r = (2..=k)
        .map(|r| omega(k, r).map(|w| (r, w)))
        .collect::<Result<Vec<_>, _>>()?;
    let bounds = bound_report(k, d)?;
    Ok(ExponentReport { k, d, gamma: gamma_v, gamma_refined: refined_v, theta_by_r, omega_by_r, bounds })
}
