//! Code-level semantics: minimum distance, the LCD test, standard form,
//! and the equivalence moves (row transforms, column permutations) that
//! preserve a code's parameters.

use crate::error::{Error, Result};
use crate::gf2::{BitWord, Gf2Matrix};

/// Enumerating minimum distance visits 2^k − 1 codewords; beyond this
/// dimension the walk is refused.
pub const MAX_ENUM_DIMENSION: usize = 24;

/// A binary [n,k] linear code, held as a full-rank generator matrix.
///
/// Construction rejects rank-deficient generators: every value of this type
/// is a true [n,k] code with 1 ≤ k ≤ n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: Gf2Matrix,
}

impl LinearCode {
    /// Wraps a generator matrix, verifying it has full row rank.
    pub fn new(generator: Gf2Matrix) -> Result<Self> {
        let (k, n) = (generator.row_count(), generator.col_count());
        if k == 0 || n == 0 {
            return Err(Error::DegenerateCode(
                "a code needs at least one generator row and one position".into(),
            ));
        }
        if k > n {
            return Err(Error::DegenerateCode(format!(
                "dimension {k} exceeds length {n}"
            )));
        }
        let rank = generator.rank();
        if rank != k {
            return Err(Error::DegenerateCode(format!(
                "generator has rank {rank}, expected {k}"
            )));
        }
        Ok(Self { generator })
    }

    /// Wraps a generator known to be full rank (checked in debug builds).
    fn new_unchecked(generator: Gf2Matrix) -> Self {
        debug_assert_eq!(generator.rank(), generator.row_count());
        Self { generator }
    }

    #[must_use]
    pub fn generator(&self) -> &Gf2Matrix {
        &self.generator
    }

    /// Code length n.
    #[must_use]
    pub fn length(&self) -> usize {
        self.generator.col_count()
    }

    /// Code dimension k.
    #[must_use]
    pub fn dimension(&self) -> usize {
        self.generator.row_count()
    }

    /// Minimum Hamming weight over the 2^k − 1 nonzero codewords.
    ///
    /// Messages are walked in Gray-code order so each step XORs a single
    /// generator row into the running codeword. Refused for k >
    /// [`MAX_ENUM_DIMENSION`].
    pub fn min_distance(&self) -> Result<usize> {
        let k = self.dimension();
        if k > MAX_ENUM_DIMENSION {
            return Err(Error::Infeasible(format!(
                "minimum distance enumerates 2^{k} - 1 codewords; refusing k > {MAX_ENUM_DIMENSION}"
            )));
        }
        let mut codeword = BitWord::zeros(self.length());
        let mut best = usize::MAX;
        for message in 1u64..(1u64 << k) {
            // Stepping Gray codes: message i flips bit tz(i) of g(i-1).
            let row = message.trailing_zeros() as usize;
            codeword.xor_assign(self.generator.row(row));
            best = best.min(codeword.weight());
        }
        debug_assert!(best >= 1 && best <= self.length() - k + 1, "Singleton bound");
        Ok(best)
    }

    /// Massey's criterion: the code is LCD iff det(G·Gᵀ) = 1.
    ///
    /// Infallible here because construction already guaranteed a full-rank
    /// square Gram matrix input.
    #[must_use]
    pub fn is_lcd(&self) -> bool {
        self.generator
            .gram()
            .det()
            .expect("gram matrix is square")
    }

    /// Brings the generator to standard form [I_k | A] and reports the
    /// column permutation that was applied.
    ///
    /// Row operations are preferred (they do not change the code); a column
    /// is swapped only when no remaining row has a pivot in place, and then
    /// with the smallest usable column index. A code whose generator can be
    /// standardized by row operations alone therefore reports the identity
    /// permutation.
    #[must_use]
    pub fn standard_form(&self) -> (Self, ColumnPermutation) {
        let (k, n) = (self.dimension(), self.length());
        let mut g = self.generator.clone();
        // origin_of[j] = index of the input column currently at position j
        let mut origin_of: Vec<usize> = (0..n).collect();

        for i in 0..k {
            if (i..k).all(|r| !g.get(r, i)) {
                let c = (i + 1..n)
                    .find(|&c| (i..k).any(|r| g.get(r, c)))
                    .expect("full-rank generator always has a usable column");
                g.swap_columns(i, c);
                origin_of.swap(i, c);
            }
            let pivot = (i..k).find(|&r| g.get(r, i)).expect("pivot exists");
            g.swap_rows(i, pivot);
            for r in 0..k {
                if r != i && g.get(r, i) {
                    g.xor_row_into(r, i);
                }
            }
        }

        let mut mapping = vec![0; n];
        for (position, &origin) in origin_of.iter().enumerate() {
            mapping[origin] = position;
        }
        let permutation = ColumnPermutation::new(mapping).expect("swaps preserve bijection");
        (Self::new_unchecked(g), permutation)
    }

    /// Applies a column permutation, producing a permutation-equivalent code.
    pub fn permute_columns(&self, permutation: &ColumnPermutation) -> Result<Self> {
        let n = self.length();
        if permutation.len() != n {
            return Err(Error::Dimension(format!(
                "permutation acts on {} columns, code has {n}",
                permutation.len()
            )));
        }
        let rows = self
            .generator
            .rows()
            .iter()
            .map(|row| permutation.apply(row))
            .collect();
        Ok(Self::new_unchecked(
            Gf2Matrix::from_rows(rows).expect("rows keep their length"),
        ))
    }

    /// Replaces the generator G by M·G for an invertible k-by-k matrix M.
    /// The row space — hence the code — is unchanged.
    pub fn row_transform(&self, m: &Gf2Matrix) -> Result<Self> {
        let k = self.dimension();
        if m.row_count() != k || m.col_count() != k {
            return Err(Error::Dimension(format!(
                "row transform must be {k}x{k}, got {}x{}",
                m.row_count(),
                m.col_count()
            )));
        }
        if !m.det().expect("square by the check above") {
            return Err(Error::InvalidTransform(
                "row transform matrix is singular".into(),
            ));
        }
        Ok(Self::new_unchecked(
            m.mul(&self.generator).expect("dimensions agree"),
        ))
    }
}

/// Minimum distance of the [n,2] code spanned by two independent words:
/// min(wt(u), wt(v), wt(u+v)).
///
/// Rejects dependent inputs (a zero word, or u = v) because they span a
/// code of dimension below 2.
pub fn k2_distance(u: &BitWord, v: &BitWord) -> Result<usize> {
    let sum = u.xor(v)?;
    if u.is_zero() || v.is_zero() || sum.is_zero() {
        return Err(Error::DegenerateCode(
            "words must be nonzero and distinct to span an [n,2] code".into(),
        ));
    }
    Ok(u.weight().min(v.weight()).min(sum.weight()))
}

/// A bijection on column positions {0, …, n−1}.
///
/// `mapping[i]` is the destination of source column `i`: applying the
/// permutation moves the bit at position `i` to position `mapping[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnPermutation {
    mapping: Vec<usize>,
}

impl ColumnPermutation {
    /// Validates that `mapping` is a permutation of 0..n.
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &target in &mapping {
            if target >= n || seen[target] {
                return Err(Error::Domain(format!(
                    "mapping is not a permutation of 0..{n}"
                )));
            }
            seen[target] = true;
        }
        Ok(Self { mapping })
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        Self {
            mapping: (0..n).collect(),
        }
    }

    /// The transposition of positions `a` and `b`.
    ///
    /// # Panics
    /// Panics if `a` or `b` is out of range.
    #[must_use]
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.mapping.swap(a, b);
        p
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &t)| i == t)
    }

    #[must_use]
    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        let mut mapping = vec![0; self.mapping.len()];
        for (source, &target) in self.mapping.iter().enumerate() {
            mapping[target] = source;
        }
        Self { mapping }
    }

    /// Permutes the positions of a word.
    ///
    /// # Panics
    /// Panics if the word length differs from the permutation's.
    #[must_use]
    pub fn apply(&self, word: &BitWord) -> BitWord {
        assert_eq!(word.len(), self.mapping.len(), "length mismatch");
        let mut out = BitWord::zeros(word.len());
        for i in word.iter_ones() {
            out.set(self.mapping[i], true);
        }
        out
    }
}
