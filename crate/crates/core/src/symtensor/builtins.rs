//! Named combinations shipped with the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::expr::{Expr, FormalSum};
use super::fefile::FeFile;
use crate::{Error, Result};

pub const H_SOURCE: &str = include_str!("../../data/H.fe");
pub const F_Y13_SOURCE: &str = include_str!("../../data/F_y13.fe");
pub const G_SOURCE: &str = include_str!("../../data/G.fe");
pub const SUB1_SOURCE: &str = include_str!("../../data/sub1.fe");
pub const SUB2_SOURCE: &str = include_str!("../../data/sub2.fe");
pub const SUB3_SOURCE: &str = include_str!("../../data/sub3.fe");
pub const THREE_TERM_SOURCE: &str = include_str!("../../data/threeterm.fe");
pub const CONTROL_SOURCE: &str = include_str!("../../data/control.fe");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Bivariate 11-term combination.
    H,
    /// `F(x, y) = H(x, y) + H(y, x)`, annihilated by `D̃_4`.
    F,
    /// 21-term combination annihilated by `D̃_3`.
    G,
    Sub1,
    Sub2,
    Sub3,
    ThreeTerm,
}

impl Builtin {
    pub const ALL: [Builtin; 7] =
        [Builtin::H, Builtin::F, Builtin::G, Builtin::Sub1, Builtin::Sub2, Builtin::Sub3, Builtin::ThreeTerm];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::H => "H",
            Builtin::F => "F",
            Builtin::G => "G",
            Builtin::Sub1 => "SUB1",
            Builtin::Sub2 => "SUB2",
            Builtin::Sub3 => "SUB3",
            Builtin::ThreeTerm => "THREE_TERM",
        }
    }

    /// Weight of the single-valued polylogarithm annihilating the combination.
    pub fn order(self) -> u32 {
        match self {
            Builtin::H | Builtin::F => 4,
            _ => 3,
        }
    }

    fn source(self) -> &'static str {
        match self {
            Builtin::H | Builtin::F => H_SOURCE,
            Builtin::G => G_SOURCE,
            Builtin::Sub1 => SUB1_SOURCE,
            Builtin::Sub2 => SUB2_SOURCE,
            Builtin::Sub3 => SUB3_SOURCE,
            Builtin::ThreeTerm => THREE_TERM_SOURCE,
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown combination '{s}'")))
    }
}

/// The combination with all variables free (`x`, and `y` for `H` and `F`).
pub fn builtin_unspecialized(which: Builtin) -> FormalSum {
    let file = FeFile::parse(which.source()).expect("bundled file parses");
    match which {
        Builtin::F => {
            let swap: BTreeMap<String, Expr> =
                [("x".to_string(), Expr::var("y")), ("y".to_string(), Expr::var("x"))].into();
            let mut sum = file.sum.clone();
            sum.extend(file.sum.substitute(&swap).expect("swap is not degenerate"));
            sum
        }
        _ => file.sum,
    }
}

/// The combination with `subst` applied; exactly one variable may remain.
pub fn builtin(which: Builtin, subst: &BTreeMap<String, Expr>) -> Result<FormalSum> {
    let sum = builtin_unspecialized(which).substitute(subst)?;
    let free = sum.variables();
    if free.len() != 1 {
        return Err(Error::InvalidArgument(format!(
            "{which} with this substitution has free variables {free:?}; exactly one is required"
        )));
    }
    Ok(sum)
}
