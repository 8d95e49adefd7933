//! Reference tables for ψ = F, transcribed exactly as published (misprints
//! included), plus the ledger of entries known to be misprinted.

use fiboper_core::poly::{int, ratio};
use fiboper_core::{Family, Polynomial, Rational};
use num_traits::One;

/// A published coefficient `value · a^a_power`. Only the Abel table uses
/// a nonzero power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coef {
    pub value: &'static str,
    pub a_power: u32,
}

impl Coef {
    const fn plain(value: &'static str) -> Self {
        Coef { value, a_power: 0 }
    }

    pub fn at(&self, a: &Rational) -> Rational {
        let v: Rational = self.value.parse().expect("transcribed rational");
        let mut pow = Rational::one();
        for _ in 0..self.a_power {
            pow *= a;
        }
        v * pow
    }

    /// Human form, e.g. `-905` or `-4a`.
    pub fn label(&self) -> String {
        match (self.a_power, self.value) {
            (0, v) => v.to_string(),
            (p, v) => {
                let mono = if p == 1 { "a".to_string() } else { format!("a^{p}") };
                match v {
                    "1" => mono,
                    "-1" => format!("-{mono}"),
                    _ => format!("{v}{mono}"),
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Table {
    LaguerreBasic,
    LaguerreAlpha1,
    Bernoulli,
    ForwardDifference,
    BackwardDifference,
    Abel,
}

impl Table {
    pub const ALL: [Table; 6] = [
        Table::LaguerreBasic,
        Table::LaguerreAlpha1,
        Table::Bernoulli,
        Table::ForwardDifference,
        Table::BackwardDifference,
        Table::Abel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Table::LaguerreBasic => "laguerre(alpha=-1)",
            Table::LaguerreAlpha1 => "laguerre(alpha=1)",
            Table::Bernoulli => "bernoulli",
            Table::ForwardDifference => "forward_difference",
            Table::BackwardDifference => "backward_difference",
            Table::Abel => "abel",
        }
    }

    pub fn family(self, a: &Rational) -> Family {
        match self {
            Table::LaguerreBasic => Family::Laguerre,
            Table::LaguerreAlpha1 => Family::LaguerreAlpha(int(1)),
            Table::Bernoulli => Family::Bernoulli,
            Table::ForwardDifference => Family::ForwardDifference,
            Table::BackwardDifference => Family::BackwardDifference,
            Table::Abel => Family::Abel(a.clone()),
        }
    }

    /// Whether entries depend on the Abel parameter.
    pub fn symbolic(self) -> bool {
        self == Table::Abel
    }

    /// Ascending coefficients of the published rows `0..=max_n`.
    pub fn rows(self) -> Vec<Vec<Coef>> {
        let plain = |rows: &[&[&'static str]]| -> Vec<Vec<Coef>> {
            rows.iter().map(|r| r.iter().map(|v| Coef::plain(v)).collect()).collect()
        };
        match self {
            Table::LaguerreBasic => plain(LAGUERRE_BASIC),
            Table::LaguerreAlpha1 => plain(LAGUERRE_ALPHA1),
            Table::Bernoulli => plain(BERNOULLI),
            Table::ForwardDifference => plain(FORWARD),
            Table::BackwardDifference => plain(BACKWARD),
            Table::Abel => ABEL
                .iter()
                .map(|r| r.iter().map(|&(value, a_power)| Coef { value, a_power }).collect())
                .collect(),
        }
    }

    /// Published row `n` evaluated at `a`.
    pub fn polynomial(self, n: usize, a: &Rational) -> Polynomial {
        let row = &self.rows()[n];
        Polynomial::new(row.iter().map(|c| c.at(a)).collect())
    }
}

const LAGUERRE_BASIC: &[&[&str]] = &[
    &["1"],
    &["0", "-1"],
    &["0", "-1", "1"],
    &["0", "-2", "4", "-1"],
    &["0", "-6", "18", "-9", "1"],
    &["0", "-30", "1280", "-905", "20", "-1"],
    &["0", "-240", "1200", "-1200", "400", "-40", "1"],
    &["0", "-3120", "18720", "-23400", "10400", "-1560", "78", "-1"],
    &["0", "-65520", "458640", "-687960", "382200", "-76440", "5733", "-147", "1"],
];

const LAGUERRE_ALPHA1: &[&[&str]] = &[
    &["1"],
    &["2", "-1"],
    &["3", "-3", "1"],
    &["8", "-12", "8", "-1"],
    &["30", "-60", "60", "-15", "1"],
    &["240", "-450", "600", "-225", "30", "-1"],
    &["1680", "-5040", "8400", "-4200", "840", "-56", "1"],
];

const BERNOULLI: &[&[&str]] = &[
    &["1"],
    &["1", "1"],
    &["1/2", "1", "1"],
    &["1/3", "1", "2", "1"],
    &["1/5", "1", "3", "3", "1"],
    &["1/8", "1", "5", "15/2", "5", "1"],
    &["1/13", "1", "8", "20", "20", "8", "1"],
    &["1/21", "1", "13", "52", "260/3", "52", "13", "1"],
    &["1/36", "1", "21", "273/2", "364", "364", "273/2", "21", "1"],
    &["1/55", "1", "34", "357", "1547", "12376/5", "1547", "357", "34", "1"],
];

// decimals 112.5 and 156.5 in the source are written as fractions
const FORWARD: &[&[&str]] = &[
    &["1"],
    &["0", "1"],
    &["0", "-1", "1"],
    &["0", "3", "-4", "1"],
    &["0", "-16", "24", "-9", "1"],
    &["0", "313/2", "-250", "225/2", "-20", "1"],
    &["0", "-2605", "4324", "-2160", "480", "-40", "1"],
];

const BACKWARD: &[&[&str]] = &[
    &["1"],
    &["0", "1"],
    &["0", "1", "1"],
    &["0", "3", "4", "1"],
    &["0", "16", "24", "9", "1"],
    &["0", "313/2", "250", "225/2", "20", "1"],
    &["0", "2605", "4324", "2160", "480", "40", "1"],
];

const ABEL: &[&[(&str, u32)]] = &[
    &[("1", 0)],
    &[("0", 0), ("1", 0)],
    &[("0", 0), ("1", 1), ("1", 0)],
    &[("0", 0), ("2", 2), ("-4", 1), ("1", 0)],
    &[("0", 0), ("-3", 3), ("18", 2), ("-9", 1), ("1", 0)],
];

/// One misprinted coefficient: published value and the value both
/// independent routes produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    pub table: Table,
    pub n: usize,
    pub power: usize,
    pub printed: Coef,
    pub derived: Coef,
}

pub const ERRATA: &[Erratum] = &[
    Erratum {
        table: Table::LaguerreBasic,
        n: 5,
        power: 3,
        printed: Coef::plain("-905"),
        derived: Coef::plain("-90"),
    },
    Erratum {
        table: Table::LaguerreBasic,
        n: 5,
        power: 2,
        printed: Coef::plain("1280"),
        derived: Coef::plain("120"),
    },
    Erratum {
        table: Table::Bernoulli,
        n: 8,
        power: 0,
        printed: Coef::plain("1/36"),
        derived: Coef::plain("1/34"),
    },
    Erratum {
        table: Table::Abel,
        n: 2,
        power: 1,
        printed: Coef { value: "1", a_power: 1 },
        derived: Coef { value: "-1", a_power: 1 },
    },
    Erratum {
        table: Table::LaguerreAlpha1,
        n: 5,
        power: 0,
        printed: Coef::plain("240"),
        derived: Coef::plain("180"),
    },
];

/// Ledger entry for one coefficient, if any.
pub fn erratum(table: Table, n: usize, power: usize) -> Option<&'static Erratum> {
    ERRATA.iter().find(|e| e.table == table && e.n == n && e.power == power)
}

/// Abel parameters the symbolic table is checked at.
pub fn abel_points() -> Vec<Rational> {
    vec![int(1), int(-2), ratio(3, 2)]
}
