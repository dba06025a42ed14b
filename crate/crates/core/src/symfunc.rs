//! Power sums, elementary symmetric functions, the link polynomial, and the
//! identity suite satisfied by nondiagonal witnesses.
//!
//! A witness is a pair of positive integer tuples (x, y) of equal length k
//! that agree on every power sum s_j = sum z_i^j for 1 <= j <= k except the
//! single omitted degree k - d, where they differ by the offset h. For such
//! pairs a family of exact algebraic relations holds (difference-polynomial
//! factorization, root-product links, cross-product consistency); this
//! module evaluates each relation exactly and reports it.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors from tuple construction, table construction and witness checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymfuncError {
    /// Tuples of length zero are rejected everywhere.
    EmptyTuple,
    /// Tuple entries must be >= 1.
    NonPositiveEntry { index: usize },
    /// Asked for more elementary symmetric functions than the tuple has
    /// entries (sigma_n vanishes identically past n = len, so the request
    /// is treated as a domain error rather than silently returning zeros).
    OrderTooLarge { order: usize, len: usize },
    /// A sigma table must start with sigma_0 = 1.
    BadSigmaHead,
    /// Power-sum vector too short for the requested order.
    PowerSumsTooShort { needed: usize, got: usize },
    /// The power sums are not realizable over the integers: some recovered
    /// sigma_n came out non-integral.
    NotIntegral { order: usize },
    /// Witness sides must have equal length.
    LengthMismatch { x_len: usize, y_len: usize },
    /// The omission shift d must satisfy 2d < k.
    ShiftTooLarge { k: usize, d: usize },
    /// The pair does not satisfy the defining power-sum system: the given
    /// degree has mismatched sums (or the omitted degree mismatches h).
    SystemViolated { degree: usize },
    /// The two sides are permutations of each other; diagonal pairs carry
    /// no nondiagonal identity content and are reported distinctly.
    DiagonalWitness,
    /// Divided-difference reduction needs stored degree >= 1.
    ConstantPoly,
    /// A coefficient exceeds the declared cap * scale^(degree - position).
    CapExceeded { index: usize },
    /// The reduction point must lie in [1, scale].
    EvalPointOutOfRange { value: u64, scale: u64 },
    /// Scale and cap must be positive.
    BadPolyBounds,
}

impl fmt::Display for SymfuncError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymfuncError::EmptyTuple => write!(f, "tuple must be nonempty"),
            SymfuncError::NonPositiveEntry { index } => {
                write!(f, "tuple entry at position {index} must be >= 1")
            }
            SymfuncError::OrderTooLarge { order, len } => {
                write!(f, "order {order} exceeds tuple length {len}")
            }
            SymfuncError::BadSigmaHead => write!(f, "sigma table must start with 1"),
            SymfuncError::PowerSumsTooShort { needed, got } => {
                write!(f, "need {needed} power sums, got {got}")
            }
            SymfuncError::NotIntegral { order } => {
                write!(f, "sigma_{order} is not an integer; power sums not realizable")
            }
            SymfuncError::LengthMismatch { x_len, y_len } => {
                write!(f, "tuple lengths differ: {x_len} vs {y_len}")
            }
            SymfuncError::ShiftTooLarge { k, d } => {
                write!(f, "shift d={d} too large for k={k}: need 2d < k")
            }
            SymfuncError::SystemViolated { degree } => {
                write!(f, "power sums at degree {degree} do not satisfy the system")
            }
            SymfuncError::DiagonalWitness => write!(f, "sides are permutations of each other"),
            SymfuncError::ConstantPoly => {
                write!(f, "divided-difference reduction needs degree >= 1")
            }
            SymfuncError::CapExceeded { index } => {
                write!(f, "coefficient {index} exceeds its cap")
            }
            SymfuncError::EvalPointOutOfRange { value, scale } => {
                write!(f, "evaluation point {value} outside [1, {scale}]")
            }
            SymfuncError::BadPolyBounds => write!(f, "scale and cap must be positive"),
        }
    }
}

impl core::error::Error for SymfuncError {}

// ---- Tuples ----

/// A nonempty tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntTuple(Vec<u64>);

impl IntTuple {
    pub fn new(values: Vec<u64>) -> Result<Self, SymfuncError> {
        if values.is_empty() {
            return Err(SymfuncError::EmptyTuple);
        }
        for (index, &v) in values.iter().enumerate() {
            if v == 0 {
                return Err(SymfuncError::NonPositiveEntry { index });
            }
        }
        Ok(IntTuple(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn max_value(&self) -> u64 {
        *self.0.iter().max().expect("nonempty")
    }

    /// Multiset equality.
    pub fn is_permutation_of(&self, other: &IntTuple) -> bool {
        if self.0.len() != other.0.len() {
            return false;
        }
        let mut a = self.0.clone();
        let mut b = other.0.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

/// s_1..s_jmax for the tuple, each an exact big integer.
pub fn power_sums(z: &IntTuple, jmax: usize) -> Vec<BigInt> {
    let mut sums = vec![BigInt::zero(); jmax];
    for &v in z.values() {
        let vb = BigInt::from(v);
        let mut p = BigInt::one();
        for s in sums.iter_mut() {
            p *= &vb;
            *s += &p;
        }
    }
    sums
}

// ---- Elementary symmetric functions ----

/// sigma_0..sigma_n of some tuple, with sigma_0 = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTable(Vec<BigInt>);

impl SigmaTable {
    /// Wraps an explicit table; the head entry must be 1.
    pub fn from_values(values: Vec<BigInt>) -> Result<Self, SymfuncError> {
        match values.first() {
            Some(head) if head.is_one() => Ok(SigmaTable(values)),
            _ => Err(SymfuncError::BadSigmaHead),
        }
    }

    /// Largest order stored.
    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, m: usize) -> &BigInt {
        &self.0[m]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.0
    }
}

/// sigma_0..sigma_n by the product recurrence over (1 + z_i t).
pub fn elementary_symmetric(z: &IntTuple, n: usize) -> Result<SigmaTable, SymfuncError> {
    if n > z.len() {
        return Err(SymfuncError::OrderTooLarge { order: n, len: z.len() });
    }
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for &v in z.values() {
        let vb = BigInt::from(v);
        for m in (1..=n).rev() {
            let add = &e[m - 1] * &vb;
            e[m] += add;
        }
    }
    Ok(SigmaTable(e))
}

// Sum over all multisets {m_1, ..., m_part} with sum i*m_i = remaining of
// prod (-s_i)^(m_i) / (i^(m_i) m_i!), accumulated exactly. `term` carries
// the factor built so far; adding one more copy of part i multiplies by
// (-s_i) / (i * m).
fn partition_terms(s: &[BigInt], part: usize, remaining: usize, term: &BigRational, acc: &mut BigRational) {
    if remaining == 0 {
        *acc += term;
        return;
    }
    if part == 0 {
        return;
    }
    partition_terms(s, part - 1, remaining, term, acc);
    let neg_s = BigRational::from(-s[part - 1].clone());
    let mut t = term.clone();
    let mut m = 1usize;
    while part * m <= remaining {
        t = t * &neg_s / BigRational::from(BigInt::from(part * m));
        partition_terms(s, part - 1, remaining - part * m, &t, acc);
        m += 1;
    }
}

/// Recovers sigma_0..sigma_n from power sums s_1..s_n by the exact
/// partition-sum expansion, accumulating each sigma_t as a rational partial
/// sum and insisting the result is an integer.
pub fn sigma_from_power_sums(s: &[BigInt], n: usize) -> Result<SigmaTable, SymfuncError> {
    if s.len() < n {
        return Err(SymfuncError::PowerSumsTooShort { needed: n, got: s.len() });
    }
    let mut table = Vec::with_capacity(n + 1);
    table.push(BigInt::one());
    for t in 1..=n {
        let mut acc = BigRational::zero();
        partition_terms(s, t, t, &BigRational::one(), &mut acc);
        if t % 2 == 1 {
            acc = -acc;
        }
        if !acc.is_integer() {
            return Err(SymfuncError::NotIntegral { order: t });
        }
        table.push(acc.to_integer());
    }
    Ok(SigmaTable(table))
}

/// Fast path for the same recovery via the triangular recurrence
/// t * sigma_t = sum_{i=1..t} (-1)^(i-1) sigma_(t-i) s_i, with the division
/// by t checked exact at every step. Must agree with
/// [`sigma_from_power_sums`] wherever both succeed.
pub fn sigma_from_power_sums_newton(s: &[BigInt], n: usize) -> Result<SigmaTable, SymfuncError> {
    if s.len() < n {
        return Err(SymfuncError::PowerSumsTooShort { needed: n, got: s.len() });
    }
    let mut e: Vec<BigInt> = Vec::with_capacity(n + 1);
    e.push(BigInt::one());
    for t in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1..=t {
            let term = &e[t - i] * &s[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, rem) = acc.div_rem(&BigInt::from(t));
        if !rem.is_zero() {
            return Err(SymfuncError::NotIntegral { order: t });
        }
        e.push(q);
    }
    Ok(SigmaTable(e))
}

// ---- Link polynomial ----

/// Evaluates the degree-d link polynomial of a sigma table at w:
/// (-1)^(d-1) * sum_{m=0..d} sigma_m * (-w)^(d-m).
///
/// The table must extend to order d. For d = 0 the value is identically -1.
pub fn link_eval(sigma: &SigmaTable, d: usize, w: &BigInt) -> Result<BigInt, SymfuncError> {
    if sigma.order() < d {
        return Err(SymfuncError::OrderTooLarge { order: d, len: sigma.order() });
    }
    let neg_w = -w;
    let mut acc = sigma.get(0).clone();
    for m in 1..=d {
        acc = acc * &neg_w + sigma.get(m);
    }
    if d.is_multiple_of(2) {
        acc = -acc;
    }
    Ok(acc)
}

// ---- Witnesses ----

/// A nondiagonal-solution candidate: equal-length positive tuples x, y with
/// the omission shift d and offset h claimed to satisfy
/// s_j(x) = s_j(y) for j != k - d and s_(k-d)(x) = s_(k-d)(y) + h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub x: IntTuple,
    pub y: IntTuple,
    pub h: BigInt,
    pub k: usize,
    pub d: usize,
}

impl Witness {
    /// Shape checks only (lengths equal, 2d < k); whether the power-sum
    /// system actually holds is examined by [`verify_witness`].
    pub fn new(x: IntTuple, y: IntTuple, d: usize, h: BigInt) -> Result<Self, SymfuncError> {
        if x.len() != y.len() {
            return Err(SymfuncError::LengthMismatch { x_len: x.len(), y_len: y.len() });
        }
        let k = x.len();
        if 2 * d >= k {
            return Err(SymfuncError::ShiftTooLarge { k, d });
        }
        Ok(Witness { x, y, h, k, d })
    }

    /// The omitted degree k - d.
    pub fn omitted_degree(&self) -> usize {
        self.k - self.d
    }

    /// Largest entry on either side; the tightest range bound the witness
    /// fits in.
    pub fn range_bound(&self) -> u64 {
        self.x.max_value().max(self.y.max_value())
    }
}

/// The identity relations checked on every witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// Elementary symmetric functions agree at orders 1..(k-d-1).
    SigmaPrefix,
    /// Cleared-denominator coefficient identity: (k-d) times the difference
    /// of the two monic root polynomials equals h times the link polynomial.
    DifferencePolynomial,
    /// (k-d) * prod_i (y_j - x_i) = link(y; y_j) * h for every j.
    RootProductLink,
    /// Link values computed from x-side and y-side sigma tables coincide.
    LinkAgreement,
    /// link(x; y_t) * prod_i (y_s - x_i) = link(x; y_s) * prod_i (y_t - x_i)
    /// for all s < t.
    CrossProducts,
    /// h and every link value are nonzero.
    NonVanishing,
}

impl Relation {
    /// Stable snake_case name for reports.
    pub fn name(&self) -> &'static str {
        match self {
            Relation::SigmaPrefix => "sigma_prefix",
            Relation::DifferencePolynomial => "difference_polynomial",
            Relation::RootProductLink => "root_product_link",
            Relation::LinkAgreement => "link_agreement",
            Relation::CrossProducts => "cross_products",
            Relation::NonVanishing => "nonvanishing",
        }
    }

    pub const ALL: [Relation; 6] = [
        Relation::SigmaPrefix,
        Relation::DifferencePolynomial,
        Relation::RootProductLink,
        Relation::LinkAgreement,
        Relation::CrossProducts,
        Relation::NonVanishing,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: Relation,
    pub passed: bool,
    /// Set only on failure: which index or coefficient broke.
    pub detail: Option<String>,
}

/// Advisory magnitude check on the link values: 1 <= |link(y; y_j)| and
/// |link(y; y_j)| <= (d+1) * C(k, floor(d/2)) * X^d with X the witness range
/// bound. The cap is a fixed reporting constant, not a proven bound; real
/// witnesses with d >= 1 can exceed it, so it never fails verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapCheck {
    pub within: bool,
    pub bound: BigInt,
    pub max_abs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub checks: Vec<RelationCheck>,
    pub cap: CapCheck,
}

impl VerifyOutcome {
    /// All required relations hold (the advisory cap is not counted).
    pub fn all_required_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Required relations and the advisory cap all hold.
    pub fn all_pass_with_cap(&self) -> bool {
        self.all_required_pass() && self.cap.within
    }

    pub fn failed(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Coefficients of prod_i (t - z_i) in descending powers: entry n is the
/// coefficient of t^(k-n), i.e. (-1)^n sigma_n.
fn monic_root_poly(sigma: &SigmaTable) -> Vec<BigInt> {
    sigma
        .values()
        .iter()
        .enumerate()
        .map(|(n, s)| if n % 2 == 0 { s.clone() } else { -s })
        .collect()
}

/// Runs the full identity suite on a witness.
///
/// Precondition failures are errors, not check results: a pair whose power
/// sums do not satisfy the system at all yields `SystemViolated`, and a
/// diagonal pair (permutations) yields `DiagonalWitness`. For genuine
/// nondiagonal witnesses every required relation holds unconditionally; a
/// failed check therefore indicates a defect in this library, which is
/// exactly why each is evaluated independently and exactly.
pub fn verify_witness(w: &Witness) -> Result<VerifyOutcome, SymfuncError> {
    let k = w.k;
    let d = w.d;
    let omitted = k - d;

    // system precondition
    let sx = power_sums(&w.x, k);
    let sy = power_sums(&w.y, k);
    for j in 1..=k {
        if j == omitted {
            if &sx[j - 1] - &sy[j - 1] != w.h {
                return Err(SymfuncError::SystemViolated { degree: j });
            }
        } else if sx[j - 1] != sy[j - 1] {
            return Err(SymfuncError::SystemViolated { degree: j });
        }
    }
    if w.x.is_permutation_of(&w.y) {
        return Err(SymfuncError::DiagonalWitness);
    }

    let sigma_x = elementary_symmetric(&w.x, k)?;
    let sigma_y = elementary_symmetric(&w.y, k)?;
    let kd = BigInt::from(omitted);
    let y_vals: Vec<BigInt> = w.y.values().iter().map(|&v| BigInt::from(v)).collect();

    let link_x: Vec<BigInt> = y_vals
        .iter()
        .map(|yj| link_eval(&sigma_x, d, yj))
        .collect::<Result<_, _>>()?;
    let link_y: Vec<BigInt> = y_vals
        .iter()
        .map(|yj| link_eval(&sigma_y, d, yj))
        .collect::<Result<_, _>>()?;

    // prod_i (y_j - x_i) for each j
    let root_products: Vec<BigInt> = y_vals
        .iter()
        .map(|yj| {
            let mut p = BigInt::one();
            for &xi in w.x.values() {
                p *= yj - BigInt::from(xi);
            }
            p
        })
        .collect();

    let mut checks = Vec::with_capacity(Relation::ALL.len());

    // sigma_n(x) = sigma_n(y) for 1 <= n < k - d
    {
        let mut fail = None;
        for n in 1..omitted {
            if sigma_x.get(n) != sigma_y.get(n) {
                fail = Some(alloc::format!("sigma_{n} differs"));
                break;
            }
        }
        checks.push(RelationCheck {
            relation: Relation::SigmaPrefix,
            passed: fail.is_none(),
            detail: fail,
        });
    }

    // coefficient identity: for every power t^p,
    //   (k-d) * (coeff_p(prod(t-x)) - coeff_p(prod(t-y)))
    //     = h * (-1)^(d-p+1) * sigma_(d-p)(y)   for p <= d, else 0
    {
        let px = monic_root_poly(&sigma_x);
        let py = monic_root_poly(&sigma_y);
        let mut fail = None;
        for p in (0..=k).rev() {
            let n = k - p;
            let lhs = (&px[n] - &py[n]) * &kd;
            let rhs = if p <= d {
                let m = d - p;
                let signed =
                    if m.is_multiple_of(2) { -sigma_y.get(m) } else { sigma_y.get(m).clone() };
                signed * &w.h
            } else {
                BigInt::zero()
            };
            if lhs != rhs {
                fail = Some(alloc::format!("coefficient of t^{p} differs"));
                break;
            }
        }
        checks.push(RelationCheck {
            relation: Relation::DifferencePolynomial,
            passed: fail.is_none(),
            detail: fail,
        });
    }

    // (k-d) * prod_i (y_j - x_i) = link(y; y_j) * h
    {
        let mut fail = None;
        for j in 0..k {
            if &root_products[j] * &kd != &link_y[j] * &w.h {
                fail = Some(alloc::format!("side j={j}"));
                break;
            }
        }
        checks.push(RelationCheck {
            relation: Relation::RootProductLink,
            passed: fail.is_none(),
            detail: fail,
        });
    }

    // link agreement between the x-side and y-side tables
    {
        let mut fail = None;
        for j in 0..k {
            if link_x[j] != link_y[j] {
                fail = Some(alloc::format!("side j={j}"));
                break;
            }
        }
        checks.push(RelationCheck {
            relation: Relation::LinkAgreement,
            passed: fail.is_none(),
            detail: fail,
        });
    }

    // cross products
    {
        let mut fail = None;
        'outer: for s in 0..k {
            for t in (s + 1)..k {
                if &link_x[t] * &root_products[s] != &link_x[s] * &root_products[t] {
                    fail = Some(alloc::format!("pair ({s},{t})"));
                    break 'outer;
                }
            }
        }
        checks.push(RelationCheck {
            relation: Relation::CrossProducts,
            passed: fail.is_none(),
            detail: fail,
        });
    }

    // nonvanishing
    {
        let mut fail = None;
        if w.h.is_zero() {
            fail = Some(String::from("h = 0"));
        } else if let Some(j) = (0..k).find(|&j| link_x[j].is_zero() || link_y[j].is_zero()) {
            fail = Some(alloc::format!("link vanishes at side j={j}"));
        }
        checks.push(RelationCheck {
            relation: Relation::NonVanishing,
            passed: fail.is_none(),
            detail: fail,
        });
    }

    // advisory magnitude cap
    let x_bound = BigInt::from(w.range_bound());
    let bound = BigInt::from(d as u64 + 1)
        * binomial(BigInt::from(k), BigInt::from(d / 2))
        * x_bound.pow(d as u32);
    let max_abs = link_y.iter().map(|v| v.abs()).max().unwrap_or_else(BigInt::zero);
    let within = link_y.iter().all(|v| {
        let a = v.abs();
        !a.is_zero() && a <= bound
    });

    Ok(VerifyOutcome { checks, cap: CapCheck { within, bound, max_abs } })
}

// ---- Capped polynomials and divided differences ----

/// A polynomial with integer coefficients a_0..a_D declared against a range
/// scale X and cap C: |a_l| <= C * X^(D-l) must hold for every stored
/// coefficient. Trailing zero coefficients are kept (the stored degree is a
/// declaration, not the exact degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedPoly {
    coeffs: Vec<BigInt>,
    scale: u64,
    cap: BigRational,
}

impl BoundedPoly {
    pub fn new(coeffs: Vec<BigInt>, scale: u64, cap: BigRational) -> Result<Self, SymfuncError> {
        if coeffs.is_empty() {
            return Err(SymfuncError::EmptyTuple);
        }
        if scale == 0 || cap <= BigRational::zero() {
            return Err(SymfuncError::BadPolyBounds);
        }
        let degree = coeffs.len() - 1;
        let scale_big = BigInt::from(scale);
        for (index, a) in coeffs.iter().enumerate() {
            // |a| <= cap * scale^(degree - index), compared exactly:
            // |a| * denom(cap) <= numer(cap) * scale^(degree - index)
            let lhs = a.abs() * cap.denom();
            let rhs = cap.numer() * scale_big.pow((degree - index) as u32);
            if lhs > rhs {
                return Err(SymfuncError::CapExceeded { index });
            }
        }
        Ok(BoundedPoly { coeffs, scale, cap })
    }

    /// Coefficients a_0..a_D (a_l multiplies t^l).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn cap(&self) -> &BigRational {
        &self.cap
    }

    /// Declared degree D (stored length minus one).
    pub fn stored_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * t + a;
        }
        acc
    }
}

/// Divided-difference reduction at a point y_r in [1, X]: returns the
/// polynomial with coefficients b_l = sum_{j>l} a_j * y_r^(j-l-1), the exact
/// quotient (f(y_r) - f(t)) / (y_r - t). The declared degree drops by one
/// and the cap grows to C * D.
pub fn divided_difference_reduce(f: &BoundedPoly, y_r: u64) -> Result<BoundedPoly, SymfuncError> {
    let degree = f.stored_degree();
    if degree == 0 {
        return Err(SymfuncError::ConstantPoly);
    }
    if y_r == 0 || y_r > f.scale {
        return Err(SymfuncError::EvalPointOutOfRange { value: y_r, scale: f.scale });
    }
    let point = BigInt::from(y_r);
    // b_(D-1) = a_D, then b_l = a_(l+1) + y_r * b_(l+1)
    let mut b = vec![BigInt::zero(); degree];
    b[degree - 1] = f.coeffs[degree].clone();
    for l in (0..degree - 1).rev() {
        b[l] = &f.coeffs[l + 1] + &point * &b[l + 1];
    }
    let cap = &f.cap * BigRational::from(BigInt::from(degree as u64));
    BoundedPoly::new(b, f.scale, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn tuple(v: &[u64]) -> IntTuple {
        IntTuple::new(v.to_vec()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn power_sums_basic() {
        assert_eq!(power_sums(&tuple(&[1, 2, 3]), 3), vec![big(6), big(14), big(36)]);
        assert_eq!(power_sums(&tuple(&[5]), 2), vec![big(5), big(25)]);
        assert_eq!(power_sums(&tuple(&[2, 2]), 0), Vec::<BigInt>::new());
    }

    #[test]
    fn tuple_rejects_bad_input() {
        assert_eq!(IntTuple::new(vec![]), Err(SymfuncError::EmptyTuple));
        assert_eq!(IntTuple::new(vec![1, 0, 2]), Err(SymfuncError::NonPositiveEntry { index: 1 }));
    }

    #[test]
    fn elementary_symmetric_basic() {
        let e = elementary_symmetric(&tuple(&[1, 2, 3]), 3).unwrap();
        assert_eq!(e.values(), &[big(1), big(6), big(11), big(6)]);
        let e = elementary_symmetric(&tuple(&[1, 1, 1]), 3).unwrap();
        assert_eq!(e.values(), &[big(1), big(3), big(3), big(1)]);
        let e = elementary_symmetric(&tuple(&[7, 4]), 0).unwrap();
        assert_eq!(e.values(), &[big(1)]);
        assert_eq!(
            elementary_symmetric(&tuple(&[1, 2]), 3),
            Err(SymfuncError::OrderTooLarge { order: 3, len: 2 })
        );
    }

    #[test]
    fn sigma_recovery_matches_direct_computation() {
        let z = tuple(&[1, 2, 3]);
        let s = power_sums(&z, 3);
        let rec = sigma_from_power_sums(&s, 3).unwrap();
        assert_eq!(rec, elementary_symmetric(&z, 3).unwrap());

        let z = tuple(&[4, 4, 9, 1, 12]);
        let s = power_sums(&z, 5);
        let rec = sigma_from_power_sums(&s, 5).unwrap();
        assert_eq!(rec, elementary_symmetric(&z, 5).unwrap());
    }

    #[test]
    fn sigma_recovery_both_routes_agree() {
        let z = tuple(&[3, 7, 7, 11]);
        let s = power_sums(&z, 4);
        assert_eq!(
            sigma_from_power_sums(&s, 4).unwrap(),
            sigma_from_power_sums_newton(&s, 4).unwrap()
        );
    }

    #[test]
    fn sigma_recovery_rejects_unrealizable() {
        // s_1 = 1, s_2 = 2 would need sigma_2 = (1 - 2) / 2
        let s = vec![big(1), big(2)];
        assert_eq!(sigma_from_power_sums(&s, 2), Err(SymfuncError::NotIntegral { order: 2 }));
        assert_eq!(
            sigma_from_power_sums_newton(&s, 2),
            Err(SymfuncError::NotIntegral { order: 2 })
        );
        assert_eq!(
            sigma_from_power_sums(&s, 3),
            Err(SymfuncError::PowerSumsTooShort { needed: 3, got: 2 })
        );
    }

    #[test]
    fn link_eval_examples() {
        // d = 0 is identically -1
        let e = elementary_symmetric(&tuple(&[9, 2, 4]), 0).unwrap();
        assert_eq!(link_eval(&e, 0, &big(123)).unwrap(), big(-1));

        // d = 1: sigma_1 - w
        let e = SigmaTable::from_values(vec![big(1), big(12)]).unwrap();
        assert_eq!(link_eval(&e, 1, &big(2)).unwrap(), big(10));

        // d = 2: -(w^2 - sigma_1 w + sigma_2)
        let e = SigmaTable::from_values(vec![big(1), big(6), big(11)]).unwrap();
        assert_eq!(link_eval(&e, 2, &big(1)).unwrap(), big(-6));

        assert_eq!(
            link_eval(&e, 3, &big(1)),
            Err(SymfuncError::OrderTooLarge { order: 3, len: 2 })
        );
    }

    fn witness(x: &[u64], y: &[u64], d: usize, h: i64) -> Witness {
        Witness::new(tuple(x), tuple(y), d, big(h)).unwrap()
    }

    #[test]
    fn verify_accepts_classic_pair() {
        let w = witness(&[1, 5, 6], &[2, 3, 7], 0, -36);
        let out = verify_witness(&w).unwrap();
        assert!(out.all_required_pass(), "failed: {:?}", out.failed().collect::<Vec<_>>());
        assert!(out.cap.within);
        assert_eq!(out.cap.bound, big(1));
        assert_eq!(out.cap.max_abs, big(1));
    }

    #[test]
    fn verify_accepts_shifted_pairs() {
        // first nondiagonal solutions with one omitted inner degree
        let w = witness(&[1, 5, 5], &[2, 3, 6], 1, 2);
        let out = verify_witness(&w).unwrap();
        assert!(out.all_required_pass(), "failed: {:?}", out.failed().collect::<Vec<_>>());
        assert!(out.cap.within);

        let w = witness(&[2, 7, 11, 15], &[3, 5, 13, 14], 1, -36);
        let out = verify_witness(&w).unwrap();
        assert!(out.all_required_pass(), "failed: {:?}", out.failed().collect::<Vec<_>>());
        // the advisory cap is genuinely exceeded here: max |link| = 32 > 30
        assert!(!out.cap.within);
        assert_eq!(out.cap.bound, big(30));
        assert_eq!(out.cap.max_abs, big(32));
    }

    #[test]
    fn verify_rejects_diagonal() {
        let w = witness(&[2, 3, 7], &[7, 3, 2], 0, 0);
        assert_eq!(verify_witness(&w), Err(SymfuncError::DiagonalWitness));
    }

    #[test]
    fn verify_rejects_non_solution() {
        let w = witness(&[1, 1, 1], &[1, 1, 2], 0, 0);
        assert_eq!(verify_witness(&w), Err(SymfuncError::SystemViolated { degree: 1 }));
        // right h at the omitted degree but mismatched elsewhere
        let w = witness(&[1, 1, 1], &[1, 1, 2], 0, -5);
        assert_eq!(verify_witness(&w), Err(SymfuncError::SystemViolated { degree: 1 }));
    }

    #[test]
    fn witness_shape_checks() {
        assert_eq!(
            Witness::new(tuple(&[1, 2]), tuple(&[1, 2, 3]), 0, big(0)),
            Err(SymfuncError::LengthMismatch { x_len: 2, y_len: 3 })
        );
        assert_eq!(
            Witness::new(tuple(&[1, 2, 3, 4]), tuple(&[1, 2, 3, 4]), 2, big(0)),
            Err(SymfuncError::ShiftTooLarge { k: 4, d: 2 })
        );
    }

    fn capped(coeffs: &[i64], scale: u64, cap: i64) -> BoundedPoly {
        let c: Vec<BigInt> = coeffs.iter().map(|&v| big(v)).collect();
        BoundedPoly::new(c, scale, BigRational::from(big(cap))).unwrap()
    }

    #[test]
    fn divided_difference_examples() {
        // t^2 at y_r = 3 reduces to 3 + t
        let f = capped(&[0, 0, 1], 10, 1);
        let g = divided_difference_reduce(&f, 3).unwrap();
        assert_eq!(g.coeffs(), &[big(3), big(1)]);
        assert_eq!(g.cap(), &BigRational::from(big(2)));

        // linear a_1 t reduces to the constant a_1
        let f = capped(&[0, 7], 10, 7);
        let g = divided_difference_reduce(&f, 4).unwrap();
        assert_eq!(g.coeffs(), &[big(7)]);

        // stored degree 2 with constant content reduces to zero coefficients
        let f = capped(&[5, 0, 0], 10, 1);
        let g = divided_difference_reduce(&f, 2).unwrap();
        assert_eq!(g.coeffs(), &[big(0), big(0)]);

        let f = capped(&[5], 10, 5);
        assert_eq!(divided_difference_reduce(&f, 2), Err(SymfuncError::ConstantPoly));

        let f = capped(&[0, 1], 10, 1);
        assert_eq!(
            divided_difference_reduce(&f, 11),
            Err(SymfuncError::EvalPointOutOfRange { value: 11, scale: 10 })
        );
    }

    #[test]
    fn divided_difference_is_exact_quotient() {
        let f = capped(&[3, -2, 0, 1], 10, 1);
        let y_r = 7u64;
        let g = divided_difference_reduce(&f, y_r).unwrap();
        let fy = f.eval(&big(y_r as i64));
        for t in 1..=10i64 {
            let lhs = f.eval(&big(t));
            let rhs = &fy - (big(y_r as i64) - big(t)) * g.eval(&big(t));
            assert_eq!(lhs, rhs, "t = {t}");
        }
    }

    #[test]
    fn bounded_poly_enforces_cap() {
        // degree 2, scale 4, cap 1: |a_0| <= 16, |a_1| <= 4, |a_2| <= 1
        assert!(BoundedPoly::new(vec![big(16), big(-4), big(1)], 4, BigRational::from(big(1))).is_ok());
        assert_eq!(
            BoundedPoly::new(vec![big(17), big(0), big(1)], 4, BigRational::from(big(1))),
            Err(SymfuncError::CapExceeded { index: 0 })
        );
        assert_eq!(
            BoundedPoly::new(vec![], 4, BigRational::from(big(1))),
            Err(SymfuncError::EmptyTuple)
        );
        assert_eq!(
            BoundedPoly::new(vec![big(1)], 0, BigRational::from(big(1))),
            Err(SymfuncError::BadPolyBounds)
        );
    }
}
