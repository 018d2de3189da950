//! Optimal LCD [n,2] generator matrices.
//!
//! Two families cover every length: interleaved I₂ blocks followed by
//! all-ones columns. Family A uses 2r+1 blocks and 2r+s−2 ones columns for
//! s ∈ {3,4,5}; family B uses 2r+3 blocks and 2r+s−6 ones columns for
//! s ∈ {6,7,8}. Both reach the value of [`formula::lcd_n2`].

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::formula::{self, NDecomposition};
use crate::gf2::{BitWord, Gf2Matrix};

/// `blocks` copies of I₂ side by side, then `tail` all-ones columns.
fn interleaved_blocks_with_ones(blocks: u64, tail: u64) -> LinearCode {
    let n = (2 * blocks + tail) as usize;
    let mut top = BitWord::zeros(n);
    let mut bottom = BitWord::zeros(n);
    for i in 0..blocks as usize {
        top.set(2 * i, true);
        bottom.set(2 * i + 1, true);
    }
    for j in (2 * blocks as usize)..n {
        top.set(j, true);
        bottom.set(j, true);
    }
    let generator = Gf2Matrix::from_rows(vec![top, bottom]).expect("equal row lengths");
    LinearCode::new(generator).expect("rows are nonzero and distinct")
}

/// The [6r+s, 2] code with 2r+1 I₂ blocks and 2r+s−2 ones columns,
/// for s ∈ {3,4,5}. It is LCD with minimum distance 4r+2.
pub fn family_a(r: u64, s: u64) -> Result<LinearCode> {
    if !(3..=5).contains(&s) {
        return Err(Error::Domain(format!(
            "family A needs s in {{3,4,5}}, got {s}"
        )));
    }
    Ok(interleaved_blocks_with_ones(2 * r + 1, 2 * r + s - 2))
}

/// The [6r+s, 2] code with 2r+3 I₂ blocks and 2r+s−6 ones columns,
/// for s ∈ {6,7,8}. It is LCD with minimum distance 4r+s−3.
pub fn family_b(r: u64, s: u64) -> Result<LinearCode> {
    if !(6..=8).contains(&s) {
        return Err(Error::Domain(format!(
            "family B needs s in {{6,7,8}}, got {s}"
        )));
    }
    Ok(interleaved_blocks_with_ones(2 * r + 3, 2 * r + s - 6))
}

/// An optimal LCD [n,2] code: its minimum distance equals
/// [`formula::lcd_n2`]`(n)`.
///
/// Dispatches on the 6r+s decomposition; n = 2 gets the identity matrix.
pub fn optimal(n: u64) -> Result<LinearCode> {
    if n == 2 {
        return Ok(LinearCode::new(Gf2Matrix::identity(2)).expect("identity is full rank"));
    }
    let NDecomposition { r, s } = formula::decompose(n)?;
    let r = r as u64;
    if s <= 5 {
        family_a(r, u64::from(s))
    } else {
        family_b(r, u64::from(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::lcd_n2;

    #[test]
    fn family_a_smallest_members() {
        let c = family_a(0, 3).unwrap();
        assert_eq!(
            c.generator(),
            &Gf2Matrix::from_entries(&[&[1, 0, 1], &[0, 1, 1]])
        );
        assert_eq!(c.min_distance().unwrap(), 2);
        assert!(c.is_lcd());

        let c = family_a(0, 5).unwrap();
        assert_eq!(
            c.generator(),
            &Gf2Matrix::from_entries(&[&[1, 0, 1, 1, 1], &[0, 1, 1, 1, 1]])
        );
        assert_eq!(c.min_distance().unwrap(), 2);
        assert!(c.is_lcd());

        let c = family_a(1, 3).unwrap();
        assert_eq!(c.length(), 9);
        assert_eq!(c.min_distance().unwrap(), 6);
        assert!(c.is_lcd());
    }

    #[test]
    fn family_b_smallest_members() {
        let c = family_b(0, 6).unwrap();
        assert_eq!(
            c.generator(),
            &Gf2Matrix::from_entries(&[&[1, 0, 1, 0, 1, 0], &[0, 1, 0, 1, 0, 1]])
        );
        assert_eq!(c.min_distance().unwrap(), 3);
        assert!(c.is_lcd());

        let c = family_b(0, 7).unwrap();
        assert_eq!(c.length(), 7);
        assert_eq!(c.min_distance().unwrap(), 4);
        assert!(c.is_lcd());

        let c = family_b(0, 8).unwrap();
        assert_eq!(c.length(), 8);
        assert_eq!(c.min_distance().unwrap(), 5);
        assert!(c.is_lcd());
    }

    #[test]
    fn family_domain_errors() {
        assert!(matches!(family_a(0, 6), Err(Error::Domain(_))));
        assert!(matches!(family_a(2, 0), Err(Error::Domain(_))));
        assert!(matches!(family_b(0, 5), Err(Error::Domain(_))));
        assert!(matches!(family_b(1, 9), Err(Error::Domain(_))));
    }

    #[test]
    fn optimal_examples() {
        let c = optimal(2).unwrap();
        assert_eq!(c.generator(), &Gf2Matrix::identity(2));
        assert_eq!(c.min_distance().unwrap(), 1);
        assert!(c.is_lcd());

        let c = optimal(6).unwrap();
        assert_eq!(c.min_distance().unwrap(), 3);

        let c = optimal(100).unwrap();
        assert_eq!(c.length(), 100);
        assert_eq!(c.min_distance().unwrap(), 66);
        assert!(c.is_lcd());

        assert!(matches!(optimal(1), Err(Error::Domain(_))));
    }

    #[test]
    fn optimal_meets_formula_for_all_small_lengths() {
        for n in 2..=80 {
            let c = optimal(n).unwrap();
            assert_eq!(c.length() as u64, n);
            assert_eq!(c.dimension(), 2);
            assert!(c.is_lcd(), "n={n}");
            assert_eq!(
                c.min_distance().unwrap() as u64,
                lcd_n2(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn row_weights_match_family_bookkeeping() {
        for r in 0..=6u64 {
            for s in 3..=5u64 {
                let c = family_a(r, s).unwrap();
                let top = c.generator().row(0);
                let bottom = c.generator().row(1);
                assert_eq!(top.weight() as u64, 4 * r + s - 1);
                assert_eq!(bottom.weight() as u64, 4 * r + s - 1);
                assert_eq!(top.xor(bottom).unwrap().weight() as u64, 4 * r + 2);
            }
            for s in 6..=8u64 {
                let c = family_b(r, s).unwrap();
                let top = c.generator().row(0);
                let bottom = c.generator().row(1);
                assert_eq!(top.weight() as u64, 4 * r + s - 3);
                assert_eq!(bottom.weight() as u64, 4 * r + s - 3);
                assert_eq!(top.xor(bottom).unwrap().weight() as u64, 4 * r + 6);
            }
        }
    }
}
