use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LaurentPoly;

/// The four coefficient families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    P,
    Q,
    G,
    H,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::P, Family::Q, Family::G, Family::H];

    pub fn letter(self) -> char {
        match self {
            Family::P => 'P',
            Family::Q => 'Q',
            Family::G => 'G',
            Family::H => 'H',
        }
    }

    /// Smallest row/column index of the family's forward matrix.
    pub fn first_index(self) -> i64 {
        match self {
            Family::P => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(Family::P),
            "Q" | "q" => Ok(Family::Q),
            "G" | "g" => Ok(Family::G),
            "H" | "h" => Ok(Family::H),
            _ => Err(format!("unknown family {s:?} (expected P, Q, G or H)")),
        }
    }
}

/// How a coefficient polynomial was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Route {
    #[serde(rename = "det")]
    Det,
    #[serde(rename = "invert")]
    Invert,
    #[serde(rename = "lgv-brute")]
    LgvBrute,
    #[serde(rename = "lgv-det")]
    LgvDet,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Det => "det",
            Route::Invert => "invert",
            Route::LgvBrute => "lgv-brute",
            Route::LgvDet => "lgv-det",
        }
    }
}

/// Which variable a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variable {
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "q_half")]
    QHalf,
}

/// A computed named polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffRecord {
    pub family: Family,
    pub m: u32,
    pub k: u32,
    pub route: Route,
    pub variable: Variable,
    pub poly: LaurentPoly,
}
