//! Closed form for LCD[n,2].
//!
//! Every n ≥ 2 decomposes uniquely as n = 6r + s with s ∈ {3,…,8} (r = −1
//! occurs only for n = 2), and then
//!
//! ```text
//! LCD[6r+s, 2] = 4r + ⌊s/6⌋·(1 + (s mod 6)) + 2
//! ```
//!
//! which unfolds to the six cases 4r+2, 4r+2, 4r+2, 4r+3, 4r+4, 4r+5 for
//! s = 3, 4, 5, 6, 7, 8.

use crate::error::{Error, Result};

/// The unique decomposition n = 6r + s with s ∈ {3,…,8}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NDecomposition {
    /// Repetition count; −1 only for n = 2.
    pub r: i64,
    /// Remainder, always in {3,…,8}.
    pub s: u8,
}

impl NDecomposition {
    /// The length this decomposition describes.
    #[must_use]
    pub fn n(&self) -> u64 {
        (6 * self.r + i64::from(self.s)) as u64
    }
}

/// Decomposes n ≥ 2 as 6r + s with s ∈ {3,…,8}.
pub fn decompose(n: u64) -> Result<NDecomposition> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "no [n,2] code exists for n = {n}; need n >= 2"
        )));
    }
    if n == 2 {
        return Ok(NDecomposition { r: -1, s: 8 });
    }
    let r = (n - 3) / 6;
    let s = (n - 6 * r) as u8;
    debug_assert!((3..=8).contains(&s));
    Ok(NDecomposition { r: r as i64, s })
}

/// Evaluates LCD[n,2] = 4r + ⌊s/6⌋·(1 + (s mod 6)) + 2 on `decompose(n)`.
pub fn lcd_n2(n: u64) -> Result<u64> {
    let NDecomposition { r, s } = decompose(n)?;
    let s = i64::from(s);
    let value = 4 * r + (s / 6) * (1 + s % 6) + 2;
    debug_assert!(value >= 1);
    Ok(value as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(2).unwrap(), NDecomposition { r: -1, s: 8 });
        assert_eq!(decompose(7).unwrap(), NDecomposition { r: 0, s: 7 });
        assert_eq!(decompose(100).unwrap(), NDecomposition { r: 16, s: 4 });
        assert!(matches!(decompose(1), Err(Error::Domain(_))));
        assert!(matches!(decompose(0), Err(Error::Domain(_))));
    }

    #[test]
    fn decomposition_is_consistent() {
        for n in 2..=500 {
            let d = decompose(n).unwrap();
            assert_eq!(d.n(), n);
            assert!((3..=8).contains(&d.s));
            assert!(d.r >= -1);
            assert_eq!(d.r == -1, n == 2);
        }
    }

    #[test]
    fn known_small_values() {
        assert_eq!(lcd_n2(2).unwrap(), 1);
        assert_eq!(lcd_n2(3).unwrap(), 2);
        assert_eq!(lcd_n2(4).unwrap(), 2);
        assert_eq!(lcd_n2(5).unwrap(), 2);
        assert_eq!(lcd_n2(6).unwrap(), 3);
        assert_eq!(lcd_n2(7).unwrap(), 4);
        assert_eq!(lcd_n2(9).unwrap(), 6);
        assert_eq!(lcd_n2(100).unwrap(), 66);
    }

    #[test]
    fn matches_case_table_up_to_200() {
        for n in 3..=200 {
            let NDecomposition { r, s } = decompose(n).unwrap();
            let expected = match s {
                3 | 4 | 5 => 4 * r + 2,
                6 => 4 * r + 3,
                7 => 4 * r + 4,
                8 => 4 * r + 5,
                _ => unreachable!(),
            };
            assert_eq!(lcd_n2(n).unwrap(), expected as u64, "n={n}");
        }
    }

    #[test]
    fn monotone_unit_steps() {
        for n in 2..200 {
            let step = lcd_n2(n + 1).unwrap() as i64 - lcd_n2(n).unwrap() as i64;
            assert!(step == 0 || step == 1, "n={n} step={step}");
        }
    }

    #[test]
    fn growth_rate_two_thirds() {
        for n in 2..=200 {
            let d = lcd_n2(n).unwrap() as f64;
            assert!((d - 2.0 * n as f64 / 3.0).abs() <= 2.0, "n={n}");
        }
    }
}
