use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    pub fn swap_ab(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::AInv => Letter::BInv,
            Letter::B => Letter::A,
            Letter::BInv => Letter::AInv,
        }
    }

    /// `x^{+1}` or `x^{-1}` for a generator `x`.
    pub fn from_sign(is_a: bool, positive: bool) -> Letter {
        match (is_a, positive) {
            (true, true) => Letter::A,
            (true, false) => Letter::AInv,
            (false, true) => Letter::B,
            (false, false) => Letter::BInv,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::A => "a",
            Letter::AInv => "A",
            Letter::B => "b",
            Letter::BInv => "B",
        })
    }
}

/// A word in the meridians `a`, `b`. Printed with capitals for inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord(pub Vec<Letter>);

impl GroupWord {
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'A' => Ok(Letter::AInv),
                'b' => Ok(Letter::B),
                'B' => Ok(Letter::BInv),
                _ => Err(Error::InvalidArgument(format!("bad letter `{c}` in word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(GroupWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        GroupWord(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn repeat(&self, n: usize) -> GroupWord {
        GroupWord(self.0.repeat(n))
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn swap_ab(&self) -> GroupWord {
        GroupWord(self.0.iter().map(|l| l.swap_ab()).collect())
    }

    pub fn reversed(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().copied().collect())
    }

    /// Free reduction: cancel adjacent inverse pairs.
    pub fn reduce(&self) -> GroupWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord(out)
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Exponent sums `(a, b)`.
    pub fn exponent_sums(&self) -> (i64, i64) {
        self.0.iter().fold((0, 0), |(a, b), l| match l {
            Letter::A => (a + 1, b),
            Letter::AInv => (a - 1, b),
            Letter::B => (a, b + 1),
            Letter::BInv => (a, b - 1),
        })
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A two-bridge link: the twisted Whitehead link `W_k`, or `b(2p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinkSpec {
    TwistedWhitehead { k: u32 },
    TwoBridge { two_p: i64, q: i64 },
}

impl LinkSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            LinkSpec::TwistedWhitehead { .. } => Ok(()),
            LinkSpec::TwoBridge { two_p, q } => {
                if two_p <= 0 || two_p % 2 != 0 {
                    return Err(Error::InvalidLink(format!("2p = {two_p} must be even and positive")));
                }
                if q % 2 == 0 {
                    return Err(Error::InvalidLink(format!("q = {q} must be odd")));
                }
                if !(two_p > q.abs() && q.abs() >= 1) {
                    return Err(Error::InvalidLink(format!("need 2p > |q| >= 1, got ({two_p}, {q})")));
                }
                if two_p.gcd(&q) != 1 {
                    return Err(Error::InvalidLink(format!("gcd({two_p}, {q}) != 1")));
                }
                Ok(())
            }
        }
    }

    /// Schubert normal form; `W_k` is `b(4k+4, 2k+1)`.
    pub fn to_two_bridge(&self) -> (i64, i64) {
        match *self {
            LinkSpec::TwistedWhitehead { k } => (4 * k as i64 + 4, 2 * k as i64 + 1),
            LinkSpec::TwoBridge { two_p, q } => (two_p, q),
        }
    }

    /// Parse `"2p,q"`.
    pub fn parse_two_bridge(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [p, q] = parts.as_slice() else {
            return Err(Error::InvalidArgument(format!("expected `2p,q`, got `{s}`")));
        };
        let parse = |t: &str| {
            t.parse::<i64>()
                .map_err(|e| Error::InvalidArgument(format!("`{t}`: {e}")))
        };
        let spec = LinkSpec::TwoBridge { two_p: parse(p)?, q: parse(q)? };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for LinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkSpec::TwistedWhitehead { k } => write!(f, "W_{k}"),
            LinkSpec::TwoBridge { two_p, q } => write!(f, "b({two_p},{q})"),
        }
    }
}

/// The relator word `w` of `<a, b | aw = wa>`, kept in block form when the
/// link is a twisted Whitehead link so powers can use the Chebyshev
/// shortcut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relator {
    /// `c^n · middle · d^n` with `c = bab⁻¹a⁻¹`, `d = a⁻¹b⁻¹ab`.
    Blocks { n: u32, middle: GroupWord },
    Plain(GroupWord),
}

impl Relator {
    pub fn c() -> GroupWord {
        GroupWord(vec![Letter::B, Letter::A, Letter::BInv, Letter::AInv])
    }

    pub fn d() -> GroupWord {
        GroupWord(vec![Letter::AInv, Letter::BInv, Letter::A, Letter::B])
    }

    /// The flattened, unreduced word.
    pub fn word(&self) -> GroupWord {
        match self {
            Relator::Blocks { n, middle } => Self::c()
                .repeat(*n as usize)
                .concat(middle)
                .concat(&Self::d().repeat(*n as usize)),
            Relator::Plain(w) => w.clone(),
        }
    }
}

/// Signs `ε_i = (-1)^{⌊iq/2p⌋}` for `1 <= i <= 2p-1`.
pub fn epsilon_sequence(two_p: i64, q: i64) -> Vec<bool> {
    (1..two_p).map(|i| (i * q).div_euclid(two_p) % 2 == 0).collect()
}

pub fn build_relator(spec: &LinkSpec) -> Result<Relator> {
    spec.validate()?;
    match *spec {
        LinkSpec::TwistedWhitehead { k } => {
            let (n, middle) = if k % 2 == 1 {
                ((k + 1) / 2, GroupWord(vec![Letter::A]))
            } else {
                (k / 2, GroupWord(vec![Letter::B, Letter::A, Letter::B]))
            };
            Ok(Relator::Blocks { n, middle })
        }
        LinkSpec::TwoBridge { two_p, q } => {
            let word = epsilon_sequence(two_p, q)
                .into_iter()
                .enumerate()
                .map(|(i, positive)| Letter::from_sign(i % 2 == 1, positive))
                .collect();
            Ok(Relator::Plain(GroupWord(word)))
        }
    }
}

/// The relator `w` for `spec`, unreduced.
pub fn build_word(spec: &LinkSpec) -> Result<GroupWord> {
    Ok(build_relator(spec)?.word())
}
