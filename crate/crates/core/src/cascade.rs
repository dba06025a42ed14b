//! Gcd-cascade decomposition of product-balanced matrices.
//!
//! A product matrix has k+1 rows and r columns of nonzero integers whose
//! column products all agree; rows 1..k are bounded by the range X. The
//! cascade walks all (k+1)^r index vectors in base-(k+1) rank order and
//! peels off one positive gcd per vector; the absolute value of every
//! matrix entry is then the product of the extracted values over the
//! entries' fiber, which `reconstruct_verify` checks cell by cell together
//! with the pigeonhole consequence (min over columns of the unique-minimum
//! fiber product, raised to the r-th power, stays below X^k).

use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::symfunc::{elementary_symmetric, link_eval, Witness};

/// Enumerating (k+1)^r index vectors is refused past this many entries.
const MAX_TABLE_ENTRIES: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CascadeError {
    EmptyMatrix,
    RaggedRow { row: usize },
    /// Every entry must be nonzero.
    ZeroEntry { row: usize, col: usize },
    /// Column products disagree.
    Unbalanced { col: usize },
    /// Rows 1..k must stay within the declared range bound.
    EntryAboveBound { row: usize, col: usize },
    /// Index-vector coordinates live in [0, k].
    CoordOutOfRange { position: usize, value: u32, k: u32 },
    EmptyIndex,
    /// Rank outside [0, (k+1)^r).
    RankOutOfRange,
    /// Successor of the all-k vector.
    RangeExhausted,
    /// (k+1)^r too large to materialize.
    TableTooLarge { entries: u128 },
    /// The cascade hit a non-divisible quotient; the decomposition claim
    /// fails at this index and column.
    InexactDivision { rank: u128, index: Vec<u32>, col: usize },
    /// Table and matrix shapes disagree.
    ShapeMismatch,
    /// Extracted values must be positive and signs must be +-1.
    BadTable,
    /// Witness-backed matrices need r distinct values on the y side.
    NotEnoughDistinctValues { have: usize, need: usize },
    /// Matrix rows built from a witness would contain x_i - y_j = 0.
    SharedValue { x_index: usize, y_value: u64 },
}

impl fmt::Display for CascadeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CascadeError::EmptyMatrix => write!(f, "matrix must have rows and columns"),
            CascadeError::RaggedRow { row } => write!(f, "row {row} has the wrong width"),
            CascadeError::ZeroEntry { row, col } => write!(f, "entry ({row},{col}) is zero"),
            CascadeError::Unbalanced { col } => {
                write!(f, "column {col} product differs from column 0")
            }
            CascadeError::EntryAboveBound { row, col } => {
                write!(f, "entry ({row},{col}) exceeds the range bound")
            }
            CascadeError::CoordOutOfRange { position, value, k } => {
                write!(f, "coordinate {value} at position {position} outside [0, {k}]")
            }
            CascadeError::EmptyIndex => write!(f, "index vector must be nonempty"),
            CascadeError::RankOutOfRange => write!(f, "rank outside the index range"),
            CascadeError::RangeExhausted => write!(f, "no successor: index range exhausted"),
            CascadeError::TableTooLarge { entries } => {
                write!(f, "index table with {entries} entries exceeds the materialization cap")
            }
            CascadeError::InexactDivision { rank, index, col } => {
                write!(f, "inexact division at rank {rank} (index {index:?}), column {col}")
            }
            CascadeError::ShapeMismatch => write!(f, "table and matrix shapes disagree"),
            CascadeError::BadTable => write!(f, "table entries must be positive with signs +-1"),
            CascadeError::NotEnoughDistinctValues { have, need } => {
                write!(f, "need {need} distinct values, found {have}")
            }
            CascadeError::SharedValue { x_index, y_value } => {
                write!(f, "x entry {x_index} equals y value {y_value}; matrix entry would vanish")
            }
        }
    }
}

impl core::error::Error for CascadeError {}

// ---- Index vectors ----

/// A vector of r coordinates in [0, k], ordered by its base-(k+1) rank with
/// the first coordinate least significant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexVector(Vec<u32>);

impl IndexVector {
    pub fn new(coords: Vec<u32>, k: u32) -> Result<Self, CascadeError> {
        if coords.is_empty() {
            return Err(CascadeError::EmptyIndex);
        }
        for (position, &value) in coords.iter().enumerate() {
            if value > k {
                return Err(CascadeError::CoordOutOfRange { position, value, k });
            }
        }
        Ok(IndexVector(coords))
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position in the base-(k+1) order: sum of coord_m * (k+1)^(m-1).
    pub fn rank(&self, k: u32) -> u128 {
        let base = (k + 1) as u128;
        let mut acc = 0u128;
        for &c in self.0.iter().rev() {
            acc = acc * base + c as u128;
        }
        acc
    }

    /// Inverse of [`IndexVector::rank`] for r coordinates.
    pub fn from_rank(rank: u128, k: u32, r: usize) -> Result<Self, CascadeError> {
        if r == 0 {
            return Err(CascadeError::EmptyIndex);
        }
        let base = (k + 1) as u128;
        let total = table_entries(k, r)?;
        if rank >= total {
            return Err(CascadeError::RankOutOfRange);
        }
        let mut n = rank;
        let mut coords = Vec::with_capacity(r);
        for _ in 0..r {
            coords.push((n % base) as u32);
            n /= base;
        }
        Ok(IndexVector(coords))
    }

    /// The next vector in rank order; errors once all coordinates are k.
    pub fn successor(&self, k: u32) -> Result<IndexVector, CascadeError> {
        for (position, &value) in self.0.iter().enumerate() {
            if value > k {
                return Err(CascadeError::CoordOutOfRange { position, value, k });
            }
        }
        let mut coords = self.0.clone();
        for c in coords.iter_mut() {
            if *c < k {
                *c += 1;
                return Ok(IndexVector(coords));
            }
            *c = 0;
        }
        Err(CascadeError::RangeExhausted)
    }
}

fn table_entries(k: u32, r: usize) -> Result<u128, CascadeError> {
    let base = (k + 1) as u128;
    let mut total = 1u128;
    for _ in 0..r {
        total = total
            .checked_mul(base)
            .filter(|&t| t <= MAX_TABLE_ENTRIES)
            .ok_or(CascadeError::TableTooLarge { entries: u128::MAX })?;
    }
    Ok(total)
}

// ---- Product matrices ----

/// k+1 rows by r columns of nonzero integers with equal column products;
/// rows 1..k bounded by `x_bound` in absolute value. Row 0 is the
/// unbounded head row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductMatrix {
    entries: Vec<Vec<BigInt>>,
    x_bound: u64,
}

impl ProductMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>, x_bound: u64) -> Result<Self, CascadeError> {
        if entries.is_empty() || entries[0].is_empty() {
            return Err(CascadeError::EmptyMatrix);
        }
        let r = entries[0].len();
        for (row, e) in entries.iter().enumerate() {
            if e.len() != r {
                return Err(CascadeError::RaggedRow { row });
            }
        }
        let bound = BigInt::from(x_bound);
        for (row, e) in entries.iter().enumerate() {
            for (col, v) in e.iter().enumerate() {
                if v.is_zero() {
                    return Err(CascadeError::ZeroEntry { row, col });
                }
                if row >= 1 && v.abs() > bound {
                    return Err(CascadeError::EntryAboveBound { row, col });
                }
            }
        }
        let col_product = |col: usize| -> BigInt {
            entries.iter().map(|row| &row[col]).product()
        };
        let first = col_product(0);
        for col in 1..r {
            if col_product(col) != first {
                return Err(CascadeError::Unbalanced { col });
            }
        }
        Ok(ProductMatrix { entries, x_bound })
    }

    /// Row count minus one.
    pub fn k(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn r(&self) -> usize {
        self.entries[0].len()
    }

    pub fn x_bound(&self) -> u64 {
        self.x_bound
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row][col]
    }

    /// Largest |entry| in the head row (observed, reported alongside
    /// decompositions since no a-priori cap is assumed for row 0).
    pub fn head_row_max_abs(&self) -> BigUint {
        self.entries[0]
            .iter()
            .map(|v| v.abs().to_biguint().expect("abs is nonnegative"))
            .max()
            .expect("row 0 nonempty")
    }
}

/// Builds the product matrix attached to a witness: rows 1..k hold
/// x_i - y_j over the first r distinct y values, and the head row holds the
/// complementary products of the link values, so column products balance
/// exactly for genuine witnesses.
pub fn matrix_from_witness(w: &Witness, r: usize) -> Result<ProductMatrix, CascadeError> {
    let mut chosen: Vec<u64> = Vec::with_capacity(r);
    for &v in w.y.values() {
        if !chosen.contains(&v) {
            chosen.push(v);
            if chosen.len() == r {
                break;
            }
        }
    }
    if chosen.len() < r || r == 0 {
        return Err(CascadeError::NotEnoughDistinctValues { have: chosen.len(), need: r });
    }
    for (x_index, &xv) in w.x.values().iter().enumerate() {
        if chosen.contains(&xv) {
            return Err(CascadeError::SharedValue { x_index, y_value: xv });
        }
    }

    let sigma_x = elementary_symmetric(&w.x, w.d).map_err(|_| CascadeError::ShapeMismatch)?;
    let links: Vec<BigInt> = chosen
        .iter()
        .map(|&yj| link_eval(&sigma_x, w.d, &BigInt::from(yj)).expect("table order d"))
        .collect();

    // head row: product of all link values except the column's own
    let head: Vec<BigInt> = (0..r)
        .map(|j| {
            links
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != j)
                .map(|(_, v)| v)
                .product()
        })
        .collect();

    let mut entries = Vec::with_capacity(w.k + 1);
    entries.push(head);
    for &xi in w.x.values() {
        entries.push(
            chosen
                .iter()
                .map(|&yj| BigInt::from(xi) - BigInt::from(yj))
                .collect(),
        );
    }
    ProductMatrix::new(entries, w.range_bound())
}

// ---- Extraction ----

/// The cascade output: one positive value per index vector (stored in rank
/// order) and the sign of every matrix cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompTable {
    k: u32,
    r: usize,
    alpha: Vec<BigUint>,
    signs: Vec<Vec<i8>>,
}

impl DecompTable {
    pub fn new(k: u32, r: usize, alpha: Vec<BigUint>, signs: Vec<Vec<i8>>) -> Result<Self, CascadeError> {
        let total = table_entries(k, r)?;
        if alpha.len() as u128 != total || alpha.iter().any(|a| a.is_zero()) {
            return Err(CascadeError::BadTable);
        }
        if signs.len() != k as usize + 1
            || signs.iter().any(|row| row.len() != r || row.iter().any(|&s| s != 1 && s != -1))
        {
            return Err(CascadeError::BadTable);
        }
        Ok(DecompTable { k, r, alpha, signs })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Extracted values in rank order.
    pub fn alpha(&self) -> &[BigUint] {
        &self.alpha
    }

    pub fn alpha_at(&self, i: &IndexVector) -> &BigUint {
        &self.alpha[i.rank(self.k) as usize]
    }

    pub fn signs(&self) -> &[Vec<i8>] {
        &self.signs
    }
}

/// Runs the gcd cascade over all index vectors in rank order.
///
/// At vector i the candidate from column m is entry(i_m, m) divided by the
/// product of already-extracted values sharing coordinate m = i_m; the
/// extracted value is the positive gcd of the candidates across columns.
/// Any non-exact division aborts with a structured diagnostic.
pub fn cascade_extract(m: &ProductMatrix) -> Result<DecompTable, CascadeError> {
    let k = m.k() as u32;
    let r = m.r();
    let total = table_entries(k, r)? as usize;

    // running fiber products: bucket[col][value] = prod of alpha over
    // processed vectors whose col-th coordinate equals value
    let mut bucket = vec![vec![BigUint::one(); k as usize + 1]; r];
    let mut alpha = Vec::with_capacity(total);
    let mut coords = vec![0u32; r];

    for rank in 0..total {
        let mut g = BigUint::zero();
        for col in 0..r {
            let row = coords[col] as usize;
            let beta = BigInt::from(bucket[col][row].clone());
            let (q, rem) = m.entry(row, col).div_rem(&beta);
            if !rem.is_zero() {
                return Err(CascadeError::InexactDivision {
                    rank: rank as u128,
                    index: coords.clone(),
                    col,
                });
            }
            let q_abs = q.abs().to_biguint().expect("abs");
            g = g.gcd(&q_abs);
        }
        for col in 0..r {
            bucket[col][coords[col] as usize] *= &g;
        }
        alpha.push(g);

        // advance coords in rank order (first coordinate fastest)
        for c in coords.iter_mut() {
            if *c < k {
                *c += 1;
                break;
            }
            *c = 0;
        }
    }

    let signs = (0..=k as usize)
        .map(|row| {
            (0..r)
                .map(|col| if m.entry(row, col).is_negative() { -1i8 } else { 1 })
                .collect()
        })
        .collect();

    DecompTable::new(k, r, alpha, signs)
}

// ---- Reconstruction and pigeonhole ----

/// Outcome of checking a table against its matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionReport {
    /// Every |entry(l, m)| equals the fiber product over {i : i_m = l}.
    pub matched: bool,
    /// First failing cell (row, col) if any.
    pub first_mismatch: Option<(usize, usize)>,
    /// Per column p: product of alpha over vectors with all coordinates
    /// positive and coordinate p the unique strict minimum.
    pub unique_min_products: Vec<BigUint>,
    pub min_product: BigUint,
    /// (min_product)^r <= x_bound^k, compared exactly.
    pub pigeonhole_ok: bool,
    /// Observed largest |entry| of the head row.
    pub head_row_max_abs: BigUint,
}

/// Checks the multiplicative reconstruction cell by cell and evaluates the
/// pigeonhole consequence.
pub fn reconstruct_verify(t: &DecompTable, m: &ProductMatrix) -> Result<ReconstructionReport, CascadeError> {
    let k = m.k() as u32;
    let r = m.r();
    if t.k() != k || t.r() != r {
        return Err(CascadeError::ShapeMismatch);
    }
    let total = table_entries(k, r)? as usize;

    let mut fiber = vec![vec![BigUint::one(); k as usize + 1]; r];
    let mut unique_min_products = vec![BigUint::one(); r];
    let mut coords = vec![0u32; r];
    for rank in 0..total {
        let a = &t.alpha()[rank];
        for col in 0..r {
            fiber[col][coords[col] as usize] *= a;
        }
        if coords.iter().all(|&c| c > 0) {
            for p in 0..r {
                let cp = coords[p];
                if (0..r).all(|l| l == p || coords[l] > cp) {
                    unique_min_products[p] *= a;
                }
            }
        }
        for c in coords.iter_mut() {
            if *c < k {
                *c += 1;
                break;
            }
            *c = 0;
        }
    }

    let mut first_mismatch = None;
    'rows: for row in 0..=k as usize {
        for (col, fiber_col) in fiber.iter().enumerate() {
            let expect = BigInt::from(fiber_col[row].clone());
            if m.entry(row, col).abs() != expect {
                first_mismatch = Some((row, col));
                break 'rows;
            }
        }
    }

    let min_product = unique_min_products.iter().min().cloned().expect("r >= 1");
    let pigeonhole_ok =
        min_product.pow(r as u32) <= BigUint::from(m.x_bound()).pow(m.k() as u32);

    Ok(ReconstructionReport {
        matched: first_mismatch.is_none(),
        first_mismatch,
        unique_min_products,
        min_product,
        pigeonhole_ok,
        head_row_max_abs: m.head_row_max_abs(),
    })
}

// ---- Index-set cardinalities ----

/// Enumerated and closed-form sizes of the positive orthant of index
/// vectors and of its unique-strict-minimum subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCardinalities {
    pub positive_enumerated: BigUint,
    pub unique_min_enumerated: BigUint,
    /// k^r.
    pub positive_closed: BigUint,
    /// r * psi_r(k) with psi_r(k) = sum_{i=1..k-1} i^(r-1).
    pub unique_min_closed: BigUint,
    pub psi: BigUint,
}

impl IndexCardinalities {
    pub fn consistent(&self) -> bool {
        self.positive_enumerated == self.positive_closed
            && self.unique_min_enumerated == self.unique_min_closed
    }
}

/// Enumerates all (k+1)^r index vectors and counts the positive orthant and
/// the unique-strict-minimum subset, alongside their closed forms.
pub fn index_set_cardinalities(k: u32, r: usize) -> Result<IndexCardinalities, CascadeError> {
    let total = table_entries(k, r)? as usize;
    let mut positive = 0u128;
    let mut unique_min = 0u128;
    let mut coords = vec![0u32; r];
    for _ in 0..total {
        if coords.iter().all(|&c| c > 0) {
            positive += 1;
            for p in 0..r {
                let cp = coords[p];
                if (0..r).all(|l| l == p || coords[l] > cp) {
                    unique_min += 1;
                    break;
                }
            }
        }
        for c in coords.iter_mut() {
            if *c < k {
                *c += 1;
                break;
            }
            *c = 0;
        }
    }
    let psi = crate::exponents::psi(k as u64, r as u64).map_err(|_| CascadeError::EmptyIndex)?;
    Ok(IndexCardinalities {
        positive_enumerated: BigUint::from(positive),
        unique_min_enumerated: BigUint::from(unique_min),
        positive_closed: BigUint::from(k).pow(r as u32),
        unique_min_closed: BigUint::from(r) * &psi,
        psi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn matrix(rows: &[&[i64]], x_bound: u64) -> ProductMatrix {
        let entries = rows
            .iter()
            .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        ProductMatrix::new(entries, x_bound).unwrap()
    }

    #[test]
    fn rank_bijection() {
        let i = IndexVector::new(vec![2, 1], 2).unwrap();
        assert_eq!(i.rank(2), 5);
        assert_eq!(IndexVector::from_rank(5, 2, 2).unwrap(), i);
        assert_eq!(i.successor(2).unwrap().coords(), &[0, 2]);

        let zero = IndexVector::new(vec![0, 0, 0], 3).unwrap();
        assert_eq!(zero.rank(3), 0);
        assert_eq!(zero.successor(3).unwrap().coords(), &[1, 0, 0]);

        let top = IndexVector::new(vec![2, 2], 2).unwrap();
        assert_eq!(top.successor(2), Err(CascadeError::RangeExhausted));

        assert_eq!(IndexVector::from_rank(9, 2, 2), Err(CascadeError::RankOutOfRange));
        assert_eq!(
            IndexVector::new(vec![3, 0], 2),
            Err(CascadeError::CoordOutOfRange { position: 0, value: 3, k: 2 })
        );

        // round trip over a full range
        for rank in 0..27u128 {
            let v = IndexVector::from_rank(rank, 2, 3).unwrap();
            assert_eq!(v.rank(2), rank);
        }
    }

    #[test]
    fn worked_extraction() {
        let m = matrix(&[&[6, 10], &[5, 3]], 5);
        let t = cascade_extract(&m).unwrap();
        let a: Vec<u64> = t.alpha().iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(a, vec![2, 5, 3, 1]);
        let rep = reconstruct_verify(&t, &m).unwrap();
        assert!(rep.matched && rep.pigeonhole_ok);
    }

    #[test]
    fn matrix_validation() {
        assert_eq!(
            ProductMatrix::new(vec![vec![BigInt::from(1)], vec![BigInt::from(0)]], 3),
            Err(CascadeError::ZeroEntry { row: 1, col: 0 })
        );
        assert_eq!(
            ProductMatrix::new(
                vec![vec![BigInt::from(2), BigInt::from(3)], vec![BigInt::from(3), BigInt::from(3)]],
                3
            ),
            Err(CascadeError::Unbalanced { col: 1 })
        );
        assert_eq!(
            ProductMatrix::new(
                vec![vec![BigInt::from(12), BigInt::from(12)], vec![BigInt::from(4), BigInt::from(4)]],
                3
            ),
            Err(CascadeError::EntryAboveBound { row: 1, col: 0 })
        );
    }

    #[test]
    fn extraction_handles_signs() {
        // flip a full row: balance is preserved, signs are recorded
        let m = matrix(&[&[6, 10], &[-5, -3]], 5);
        let t = cascade_extract(&m).unwrap();
        assert_eq!(t.signs()[0], vec![1, 1]);
        assert_eq!(t.signs()[1], vec![-1, -1]);
        let rep = reconstruct_verify(&t, &m).unwrap();
        assert!(rep.matched);
    }

    #[test]
    fn cardinalities_examples() {
        let c = index_set_cardinalities(3, 2).unwrap();
        assert_eq!(c.positive_enumerated, BigUint::from(9u32));
        assert_eq!(c.unique_min_enumerated, BigUint::from(6u32));
        assert_eq!(c.psi, BigUint::from(3u32));
        assert!(c.consistent());

        let c = index_set_cardinalities(2, 2).unwrap();
        assert_eq!(c.positive_enumerated, BigUint::from(4u32));
        assert_eq!(c.unique_min_enumerated, BigUint::from(2u32));
        assert_eq!(c.psi, BigUint::from(1u32));
        assert!(c.consistent());
    }

    #[test]
    fn witness_matrix_balances() {
        use crate::symfunc::IntTuple;
        let w = Witness::new(
            IntTuple::new(vec![1, 5, 6]).unwrap(),
            IntTuple::new(vec![2, 3, 7]).unwrap(),
            0,
            BigInt::from(-36),
        )
        .unwrap();
        let m = matrix_from_witness(&w, 2).unwrap();
        assert_eq!(m.k(), 3);
        assert_eq!(m.r(), 2);
        // head row entries are the complementary link products: here -1 each
        assert_eq!(m.entry(0, 0), &BigInt::from(-1));
        assert_eq!(m.entry(0, 1), &BigInt::from(-1));
        let t = cascade_extract(&m).unwrap();
        let rep = reconstruct_verify(&t, &m).unwrap();
        assert!(rep.matched && rep.pigeonhole_ok);

        assert_eq!(
            matrix_from_witness(&w, 4),
            Err(CascadeError::NotEnoughDistinctValues { have: 3, need: 4 })
        );
    }
}
