//! Largest minimal distance of binary LCD [n,2] codes.
//!
//! A binary linear code C is LCD (linear complementary dual) when
//! C ∩ C⊥ = {0}; by Massey's criterion that happens exactly when the Gram
//! matrix G·Gᵀ of a generator matrix G is nonsingular. LCD[n,k] denotes the
//! largest d for which a binary [n,k,d] LCD code exists.
//!
//! For k = 2 this crate computes LCD[n,2] three independent ways:
//!
//! - [`formula`] — the closed form `LCD[6r+s,2] = 4r + ⌊s/6⌋·(1 + s mod 6) + 2`
//!   for s ∈ {3,…,8} (with r = −1 covering n = 2);
//! - [`construct`] — explicit optimal generator matrices built from
//!   interleaved identity blocks followed by all-ones columns;
//! - [`oracle`] — brute-force searches: an O(n³) sweep over column-census
//!   profiles, an exhaustive walk of canonical RREF generator matrices for
//!   any k, and an independent scan over pairs of words.
//!
//! Underneath sit [`gf2`], bit-packed GF(2) linear algebra, and [`code`],
//! code-level semantics (minimum distance, the LCD test, standard form).
//! [`io`] provides the matrix text format, table records, and the result
//! cache used by the `lcd2` command-line tool.

pub mod code;
pub mod construct;
mod error;
pub mod formula;
pub mod gf2;
pub mod io;
pub mod oracle;

pub use error::{Error, Result};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// How a table value was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Profile,
    Exhaustive,
    Pairs,
    Construction,
}

impl Method {
    #[must_use]
    pub const fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Profile => "profile",
            Method::Exhaustive => "exhaustive",
            Method::Pairs => "pairs",
            Method::Construction => "construction",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(Method::Formula),
            "profile" => Ok(Method::Profile),
            "exhaustive" => Ok(Method::Exhaustive),
            "pairs" => Ok(Method::Pairs),
            "construction" => Ok(Method::Construction),
            other => Err(Error::Domain(format!("unknown method '{other}'"))),
        }
    }
}
