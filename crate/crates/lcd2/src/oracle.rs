//! Brute-force computation of LCD[n,k].
//!
//! Three independent search routes validate the closed formula and each
//! other:
//!
//! - [`profile`] sweeps the O(n³) space of column censuses (a complete
//!   permutation-equivalence invariant for k = 2);
//! - [`exhaustive`] walks every k-dimensional subspace of GF(2)ⁿ exactly
//!   once via its canonical RREF generator matrix;
//! - [`pairs`] rescans k = 2 directly over unordered pairs of independent
//!   words.
//!
//! All three are deterministic, including the reported witness and the
//! result under any worker count.

use std::thread;

use crate::code::{LinearCode, MAX_ENUM_DIMENSION};
use crate::error::{Error, Result};
use crate::gf2::{BitWord, Gf2Matrix};
use crate::Method;

/// Default ceiling on how many RREF generator matrices [`exhaustive`] will
/// enumerate. Sized so that k = 2 up to n = 16 and k = 3 up to n = 12 fit
/// (roughly 7.2e8 and 4.1e8 matrices respectively).
pub const DEFAULT_MAX_MATRICES: u128 = 1 << 30;

/// Tuning for [`exhaustive`]: the enumeration budget and worker count.
///
/// Results are identical for every worker count; workers only change how
/// the scan space is partitioned.
#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Refuse searches that would enumerate more matrices than this.
    pub max_matrices: u128,
    /// Number of scan threads; 0 and 1 both mean single-threaded.
    pub workers: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_matrices: DEFAULT_MAX_MATRICES,
            workers: 1,
        }
    }
}

/// Column census of a 2-row generator matrix: how many columns equal
/// (1,0), (0,1), (1,1), and (0,0).
///
/// Two [n,2] generator matrices are column-permutation equivalent exactly
/// when their censuses agree, so this is the normal form the fast oracle
/// scans. Validity requires both rows nonzero and distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightProfile {
    first_only: usize,
    second_only: usize,
    both: usize,
    neither: usize,
}

impl WeightProfile {
    /// Validates the census: each row nonzero, rows distinct.
    pub fn new(
        first_only: usize,
        second_only: usize,
        both: usize,
        neither: usize,
    ) -> Result<Self> {
        if first_only + both == 0 {
            return Err(Error::Domain("first row would be zero".into()));
        }
        if second_only + both == 0 {
            return Err(Error::Domain("second row would be zero".into()));
        }
        if first_only + second_only == 0 {
            return Err(Error::Domain("rows would be equal".into()));
        }
        Ok(Self {
            first_only,
            second_only,
            both,
            neither,
        })
    }

    /// Count of columns equal to (1,0).
    #[must_use]
    pub const fn first_only(&self) -> usize {
        self.first_only
    }

    /// Count of columns equal to (0,1).
    #[must_use]
    pub const fn second_only(&self) -> usize {
        self.second_only
    }

    /// Count of columns equal to (1,1).
    #[must_use]
    pub const fn both(&self) -> usize {
        self.both
    }

    /// Count of zero columns.
    #[must_use]
    pub const fn neither(&self) -> usize {
        self.neither
    }

    /// Code length represented by this census.
    #[must_use]
    pub const fn n(&self) -> usize {
        self.first_only + self.second_only + self.both + self.neither
    }

    /// Minimum distance of the censused code:
    /// min over the three nonzero codewords u, v, u+v, whose weights are
    /// read straight off the census.
    #[must_use]
    pub const fn distance(&self) -> usize {
        let u = self.first_only + self.both;
        let v = self.second_only + self.both;
        let sum = self.first_only + self.second_only;
        min3(u, v, sum)
    }

    /// LCD test on the census: det(G·Gᵀ) over GF(2) reduces to the parity
    /// of (first_only+both)·(second_only+both) + both, which must be odd.
    #[must_use]
    pub const fn is_lcd(&self) -> bool {
        let u = self.first_only + self.both;
        let v = self.second_only + self.both;
        (u * v + self.both) % 2 == 1
    }

    /// Materializes the census as a generator matrix, emitting the (1,0)
    /// columns first, then (0,1), (1,1), and (0,0) columns.
    #[must_use]
    pub fn to_code(&self) -> LinearCode {
        let n = self.n();
        let mut top = BitWord::zeros(n);
        let mut bottom = BitWord::zeros(n);
        let mut col = 0;
        for _ in 0..self.first_only {
            top.set(col, true);
            col += 1;
        }
        for _ in 0..self.second_only {
            bottom.set(col, true);
            col += 1;
        }
        for _ in 0..self.both {
            top.set(col, true);
            bottom.set(col, true);
            col += 1;
        }
        let generator = Gf2Matrix::from_rows(vec![top, bottom]).expect("equal lengths");
        LinearCode::new(generator).expect("a valid census spans a rank-2 code")
    }
}

const fn min3(a: usize, b: usize, c: usize) -> usize {
    let m = if a < b { a } else { b };
    if m < c {
        m
    } else {
        c
    }
}

/// The optimal generator found by a search, in whichever normal form the
/// route used.
#[derive(Debug, Clone)]
pub enum Witness {
    Profile(WeightProfile),
    Matrix(Gf2Matrix),
}

/// One oracle answer: the best minimal distance over all [n,k] LCD codes,
/// with a deterministic witness.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub witness: Witness,
    pub method: Method,
}

impl OracleResult {
    /// Materializes the witness as a code.
    pub fn witness_code(&self) -> Result<LinearCode> {
        match &self.witness {
            Witness::Profile(p) => Ok(p.to_code()),
            Witness::Matrix(m) => LinearCode::new(m.clone()),
        }
    }
}

/// Maximizes the minimal distance over all column censuses of length n that
/// pass the LCD test. O(n³) candidate censuses.
///
/// The witness is the first optimum in ascending lexicographic
/// (first_only, second_only, both) scan order. `Ok(None)` means the scan
/// finished without meeting any LCD census, which does not happen for
/// n ≥ 2 but is reported rather than assumed.
pub fn profile(n: usize) -> Result<Option<OracleResult>> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "no [n,2] code exists for n = {n}; need n >= 2"
        )));
    }
    let mut best: Option<(usize, WeightProfile)> = None;
    for first_only in 0..=n {
        for second_only in 0..=(n - first_only) {
            for both in 0..=(n - first_only - second_only) {
                let neither = n - first_only - second_only - both;
                let Ok(census) = WeightProfile::new(first_only, second_only, both, neither)
                else {
                    continue;
                };
                if !census.is_lcd() {
                    continue;
                }
                let d = census.distance();
                if best.is_none_or(|(best_d, _)| d > best_d) {
                    best = Some((d, census));
                }
            }
        }
    }
    Ok(best.map(|(d, census)| OracleResult {
        n,
        k: 2,
        d,
        witness: Witness::Profile(census),
        method: Method::Profile,
    }))
}

/// Third, fully independent route for k = 2: scan unordered pairs of
/// distinct nonzero words of length n and keep the best LCD pair.
///
/// Each 2-dimensional code is met three times (once per basis pair), which
/// cannot change the maximum. Guarded at n ≤ 16 (about 2^(2n−1) visits).
pub fn pairs(n: usize) -> Result<Option<usize>> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "no [n,2] code exists for n = {n}; need n >= 2"
        )));
    }
    if n > 16 {
        return Err(Error::Infeasible(format!(
            "pair scan visits ~2^{} pairs; refusing n > 16",
            2 * n - 1
        )));
    }
    let limit = 1u32 << n;
    let mut best = 0usize;
    for u in 1..limit {
        for v in (u + 1)..limit {
            let d = min3(
                u.count_ones() as usize,
                v.count_ones() as usize,
                (u ^ v).count_ones() as usize,
            );
            if d <= best {
                continue;
            }
            let gram_det = (u.count_ones() & v.count_ones() & 1) ^ ((u & v).count_ones() & 1);
            if gram_det == 1 {
                best = d;
            }
        }
    }
    Ok((best > 0).then_some(best))
}

/// Number of k-dimensional subspaces of GF(2)ⁿ (the Gaussian binomial
/// coefficient), saturating at `u128::MAX`.
#[must_use]
pub fn gaussian_binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    // Symmetric; the smaller side keeps intermediates smaller.
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        let exp = n - k + i;
        if exp >= 127 {
            return u128::MAX;
        }
        let numerator = (1u128 << exp) - 1;
        let denominator = (1u128 << i) - 1;
        // Each prefix is itself a Gaussian binomial, so division is exact.
        match acc.checked_mul(numerator) {
            Some(product) => acc = product / denominator,
            None => return u128::MAX,
        }
    }
    acc
}

/// Visits the canonical RREF generator matrix of every k-dimensional
/// subspace of GF(2)ⁿ exactly once and returns how many were visited.
///
/// Order: pivot-column sets in ascending combinatorial order; within a
/// pivot set, the free entries (numbered row-major) spell an integer that
/// ascends from 0. The matrix reference passed to the visitor is a scratch
/// value that changes between calls.
pub fn for_each_rref<F: FnMut(&Gf2Matrix)>(n: usize, k: usize, mut visit: F) -> Result<u128> {
    check_subspace_params(n, k)?;
    let mut total: u128 = 0;
    for pivots in PivotSets::new(n, k) {
        total += u128::from(scan_pivot_set(n, &pivots, &mut |_, m| visit(m))?);
    }
    Ok(total)
}

fn check_subspace_params(n: usize, k: usize) -> Result<()> {
    if k == 0 || n < k {
        return Err(Error::Domain(format!(
            "subspace enumeration needs n >= k >= 1, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Ascending-order iterator over k-subsets of {0, …, n−1}.
struct PivotSets {
    n: usize,
    next: Option<Vec<usize>>,
}

impl PivotSets {
    fn new(n: usize, k: usize) -> Self {
        let first = (k <= n).then(|| (0..k).collect());
        Self { n, next: first }
    }
}

impl Iterator for PivotSets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let k = current.len();
        let mut succ = current.clone();
        // Rightmost position that can still advance.
        let bump = (0..k).rev().find(|&i| succ[i] < self.n - k + i);
        if let Some(i) = bump {
            succ[i] += 1;
            for j in i + 1..k {
                succ[j] = succ[j - 1] + 1;
            }
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Free entry positions of an RREF matrix with the given pivot columns:
/// row-major over non-pivot columns to the right of each row's pivot.
fn free_positions(n: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut free = Vec::new();
    for (row, &p) in pivots.iter().enumerate() {
        for col in p + 1..n {
            if !is_pivot[col] {
                free.push((row, col));
            }
        }
    }
    free
}

/// Enumerates every RREF matrix with the given pivot columns, calling
/// `visit(free_bits, matrix)` for each. Returns the number visited.
///
/// Consecutive free-bit integers differ in a low run of bits, so each step
/// toggles only those matrix entries.
fn scan_pivot_set(
    n: usize,
    pivots: &[usize],
    visit: &mut impl FnMut(u64, &Gf2Matrix),
) -> Result<u64> {
    let k = pivots.len();
    let free = free_positions(n, pivots);
    if free.len() >= 63 {
        return Err(Error::Infeasible(format!(
            "pivot set has {} free entries; 2^{} matrices is out of reach",
            free.len(),
            free.len()
        )));
    }
    let mut matrix = Gf2Matrix::zeros(k, n);
    for (row, &p) in pivots.iter().enumerate() {
        matrix.set(row, p, true);
    }
    let total = 1u64 << free.len();
    visit(0, &matrix);
    for f in 1..total {
        for position in free.iter().take(f.trailing_zeros() as usize + 1) {
            matrix.flip(position.0, position.1);
        }
        visit(f, &matrix);
    }
    Ok(total)
}

/// Minimum weight of the span of up to [`MAX_ENUM_DIMENSION`] rows, by the
/// same Gray-code walk as `LinearCode::min_distance` but reusing a scratch
/// codeword.
fn span_min_weight(rows: &[BitWord], scratch: &mut BitWord) -> usize {
    scratch.clear_all();
    let mut best = usize::MAX;
    for message in 1u64..(1u64 << rows.len()) {
        scratch.xor_assign(&rows[message.trailing_zeros() as usize]);
        best = best.min(scratch.weight());
    }
    best
}

/// Massey test without allocation: Gram parities packed into u32 rows,
/// then elimination. Requires k ≤ 24 (enforced by the caller's guard).
fn is_lcd_rows(rows: &[BitWord], gram: &mut Vec<u32>) -> bool {
    let k = rows.len();
    gram.clear();
    gram.resize(k, 0);
    for i in 0..k {
        for j in i..k {
            if rows[i].dot(&rows[j]).expect("equal lengths") {
                gram[i] |= 1 << j;
                gram[j] |= 1 << i;
            }
        }
    }
    for col in 0..k {
        let Some(pivot) = (col..k).find(|&r| gram[r] >> col & 1 == 1) else {
            return false;
        };
        gram.swap(col, pivot);
        for r in col + 1..k {
            if gram[r] >> col & 1 == 1 {
                gram[r] ^= gram[col];
            }
        }
    }
    true
}

/// A candidate optimum during the exhaustive scan, ordered by distance
/// first and enumeration position (pivot-set index, free bits) second.
struct Candidate {
    d: usize,
    set_index: usize,
    free_bits: u64,
    matrix: Gf2Matrix,
}

impl Candidate {
    fn better_of(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
        match (a, b) {
            (None, b) => b,
            (a, None) => a,
            (Some(a), Some(b)) => {
                let b_wins = b.d > a.d
                    || (b.d == a.d && (b.set_index, b.free_bits) < (a.set_index, a.free_bits));
                Some(if b_wins { b } else { a })
            }
        }
    }
}

/// Scans a contiguous run of pivot sets, returning its best LCD candidate.
fn scan_range(
    n: usize,
    sets: &[Vec<usize>],
    first_index: usize,
    best: &mut Option<Candidate>,
) -> Result<()> {
    let mut scratch = BitWord::zeros(n);
    let mut gram = Vec::new();
    for (offset, pivots) in sets.iter().enumerate() {
        let set_index = first_index + offset;
        scan_pivot_set(n, pivots, &mut |free_bits, matrix| {
            let rows = matrix.rows();
            if !is_lcd_rows(rows, &mut gram) {
                return;
            }
            let d = span_min_weight(rows, &mut scratch);
            if best.as_ref().is_none_or(|b| d > b.d) {
                *best = Some(Candidate {
                    d,
                    set_index,
                    free_bits,
                    matrix: matrix.clone(),
                });
            }
        })?;
    }
    Ok(())
}

/// Exhaustive oracle for any k: enumerates every [n,k] code once (via RREF
/// canonical generators), keeps those passing the LCD test, and maximizes
/// the minimal distance.
///
/// The witness is the first optimum in enumeration order, independent of
/// `config.workers`. Refuses searches whose matrix count exceeds
/// `config.max_matrices`, and k > [`MAX_ENUM_DIMENSION`] outright.
pub fn exhaustive(n: usize, k: usize, config: &OracleConfig) -> Result<Option<OracleResult>> {
    check_subspace_params(n, k)?;
    if k > MAX_ENUM_DIMENSION {
        return Err(Error::Infeasible(format!(
            "distance evaluation enumerates 2^{k} - 1 codewords per code; refusing k > {MAX_ENUM_DIMENSION}"
        )));
    }
    let total = gaussian_binomial(n, k);
    if total > config.max_matrices {
        return Err(Error::Infeasible(format!(
            "[{n},{k}] has {total} subspaces, over the budget of {}",
            config.max_matrices
        )));
    }

    let sets: Vec<Vec<usize>> = PivotSets::new(n, k).collect();
    let workers = config.workers.clamp(1, sets.len());

    let best = if workers == 1 {
        let mut best = None;
        scan_range(n, &sets, 0, &mut best)?;
        best
    } else {
        let chunk_len = sets.len().div_ceil(workers);
        let mut partials: Vec<Result<Option<Candidate>>> = Vec::new();
        thread::scope(|scope| {
            let handles: Vec<_> = sets
                .chunks(chunk_len)
                .enumerate()
                .map(|(chunk_index, chunk)| {
                    scope.spawn(move || {
                        let mut best = None;
                        scan_range(n, chunk, chunk_index * chunk_len, &mut best)?;
                        Ok(best)
                    })
                })
                .collect();
            for handle in handles {
                partials.push(handle.join().expect("scan worker panicked"));
            }
        });
        let mut best = None;
        for partial in partials {
            best = Candidate::better_of(best, partial?);
        }
        best
    };

    Ok(best.map(|candidate| OracleResult {
        n,
        k,
        d: candidate.d,
        witness: Witness::Matrix(candidate.matrix),
        method: Method::Exhaustive,
    }))
}
