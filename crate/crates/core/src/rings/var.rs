use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The fixed variable alphabet shared by every coefficient ring.
///
/// The declaration order is the variable order used inside exponent vectors
/// and in the canonical text form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    Q1,
    Q2,
    Q3,
    S,
    Alpha,
    V,
    Z,
    Lambda,
    SigmaPlus,
    SigmaMinus,
    Delta,
    H,
}

impl Var {
    pub const ALL: [Var; 12] = [
        Var::Q1,
        Var::Q2,
        Var::Q3,
        Var::S,
        Var::Alpha,
        Var::V,
        Var::Z,
        Var::Lambda,
        Var::SigmaPlus,
        Var::SigmaMinus,
        Var::Delta,
        Var::H,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q1 => "q1",
            Var::Q2 => "q2",
            Var::Q3 => "q3",
            Var::S => "s",
            Var::Alpha => "a",
            Var::V => "v",
            Var::Z => "z",
            Var::Lambda => "lam",
            Var::SigmaPlus => "sp",
            Var::SigmaMinus => "sm",
            Var::Delta => "d",
            Var::H => "h",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown variable `{s}`"))
    }
}
