//! `basic:…` / `sheffer:…` family specifications as typed on the command line.

use std::fmt;
use std::str::FromStr;

use fiboper_core::{Family, Rational};

use crate::CliError;

/// A parsed family argument, e.g. `basic:abel:3/2` or `sheffer:bernoulli`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
}

/// Parses `p/q` or an integer. Decimal points are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| CliError::Usage(format!("malformed rational `{s}` (use p/q)")))
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family }
    }

    /// `basic:abel`, without the parameter.
    pub fn name(&self) -> &'static str {
        match self.family {
            Family::Derivative => "basic:delta",
            Family::ForwardDifference => "basic:forward",
            Family::BackwardDifference => "basic:backward",
            Family::Abel(_) => "basic:abel",
            Family::Laguerre => "basic:laguerre",
            Family::Hermite(_) => "sheffer:hermite",
            Family::LaguerreAlpha(_) => "sheffer:laguerre",
            Family::Bernoulli => "sheffer:bernoulli",
        }
    }

    pub fn param(&self) -> Option<String> {
        self.family.params().first().map(ToString::to_string)
    }

    /// Letter used for the n-th member in plain and LaTeX output.
    pub fn symbol(&self) -> &'static str {
        match self.family {
            Family::Abel(_) => "A",
            Family::Laguerre | Family::LaguerreAlpha(_) => "L",
            Family::Hermite(_) => "H",
            Family::Bernoulli => "B",
            _ => "q",
        }
    }
}

impl FromStr for FamilySpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.splitn(3, ':').collect();
        let unknown = || CliError::Usage(format!("unknown family `{s}`"));
        let family = match parts.as_slice() {
            ["basic", "delta"] => Family::Derivative,
            ["basic", "forward"] => Family::ForwardDifference,
            ["basic", "backward"] => Family::BackwardDifference,
            ["basic", "abel", a] => Family::Abel(parse_rational(a)?),
            ["basic", "laguerre"] => Family::Laguerre,
            ["sheffer", "hermite", a] => Family::Hermite(parse_rational(a)?),
            ["sheffer", "laguerre", alpha] => Family::LaguerreAlpha(parse_rational(alpha)?),
            ["sheffer", "bernoulli"] => Family::Bernoulli,
            _ => return Err(unknown()),
        };
        Ok(FamilySpec { family })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some(p) => write!(f, "{}:{p}", self.name()),
            None => f.write_str(self.name()),
        }
    }
}
