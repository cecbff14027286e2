use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Number of symbols in the fixed alphabet.
pub const NVARS: usize = 11;

/// A variable from the fixed alphabet. The declaration order is the
/// lexicographic order used for monomial comparison and printing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    X,
    Y,
    Z,
    V,
    U,
    S1,
    S2,
    M,
    L,
    T,
    Q,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::X,
        Var::Y,
        Var::Z,
        Var::V,
        Var::U,
        Var::S1,
        Var::S2,
        Var::M,
        Var::L,
        Var::T,
        Var::Q,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::V => "v",
            Var::U => "u",
            Var::S1 => "s1",
            Var::S2 => "s2",
            Var::M => "M",
            Var::L => "L",
            Var::T => "t",
            Var::Q => "q",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Json(format!("unknown variable `{s}`")))
    }
}
