//! Output formats. Everything here is a pure function of its input so the
//! binary's stdout is byte-for-byte reproducible.

use std::fmt::Write as _;
use std::str::FromStr;

use fiboper_core::{Polynomial, Rational};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::family::FamilySpec;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Latex,
    #[default]
    Plain,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            "plain" => Ok(Format::Plain),
            _ => Err(CliError::Usage(format!("unknown format `{s}` (json|latex|plain)"))),
        }
    }
}

/// `1/3`, `-2`, `0`.
pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

pub fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

/// Descending-order LaTeX, e.g. `x^{3} + 2x^{2} + x + \frac{1}{3}`.
pub fn poly_latex(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign = match (out.is_empty(), c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        out.push_str(sign);
        let mag = c.abs();
        let mono = match n {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{{{n}}}"),
        };
        if n > 0 && mag.is_one() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{}{mono}", rational_latex(&mag));
        }
    }
    out
}

/// One polynomial of a table as it appears in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: String,
    pub param: Option<String>,
    pub n: usize,
    pub coeffs: Vec<String>,
    pub order: String,
}

impl TableRow {
    pub fn new(spec: &FamilySpec, n: usize, p: &Polynomial) -> Self {
        TableRow {
            family: spec.name().to_string(),
            param: spec.param(),
            n,
            coeffs: p.coeffs().iter().map(rational_str).collect(),
            order: "ascending".into(),
        }
    }

    pub fn polynomial(&self) -> Result<Polynomial, CliError> {
        if self.order != "ascending" {
            return Err(CliError::Usage(format!("unsupported order `{}`", self.order)));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<Rational>()
                    .map_err(|_| CliError::Usage(format!("malformed coefficient `{c}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

pub fn parse_table_json(s: &str) -> Result<Vec<TableRow>, CliError> {
    serde_json::from_str(s).map_err(|e| CliError::Usage(format!("bad table json: {e}")))
}

pub fn table(spec: &FamilySpec, polys: &[Polynomial], format: Format) -> String {
    let sym = spec.symbol();
    match format {
        Format::Json => {
            let rows: Vec<TableRow> =
                polys.iter().enumerate().map(|(n, p)| TableRow::new(spec, n, p)).collect();
            json(&rows)
        }
        Format::Plain => polys
            .iter()
            .enumerate()
            .map(|(n, p)| format!("{sym}_{n} = {p}\n"))
            .collect(),
        Format::Latex => {
            let mut out = String::from("\\begin{align*}\n");
            for (n, p) in polys.iter().enumerate() {
                let end = if n + 1 < polys.len() { " \\\\" } else { "" };
                let _ = writeln!(out, "{sym}_{{{n}}}(x) &= {}{end}", poly_latex(p));
            }
            out.push_str("\\end{align*}\n");
            out
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn matrix_plain(m: &[Vec<Rational>]) -> String {
    let cells: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(rational_str).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| {
            let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            line.join(" ") + "\n"
        })
        .collect()
}

pub fn matrix_latex(m: &[Vec<Rational>]) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    for (i, r) in m.iter().enumerate() {
        let line: Vec<String> = r.iter().map(rational_latex).collect();
        let end = if i + 1 < m.len() { " \\\\" } else { "" };
        let _ = writeln!(out, "{}{end}", line.join(" & "));
    }
    out.push_str("\\end{pmatrix}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fiboper_core::poly::ratio;

    #[test]
    fn latex_polynomials() {
        let p = Polynomial::new(vec![ratio(1, 3), ratio(1, 1), ratio(2, 1), ratio(1, 1)]);
        assert_eq!(poly_latex(&p), "x^{3} + 2x^{2} + x + \\frac{1}{3}");
        let q = Polynomial::new(vec![ratio(0, 1), ratio(-313, 2), ratio(0, 1), ratio(-1, 1)]);
        assert_eq!(poly_latex(&q), "-x^{3} - \\frac{313}{2}x");
        assert_eq!(poly_latex(&Polynomial::zero()), "0");
    }

    #[test]
    fn row_round_trip() {
        let spec: FamilySpec = "sheffer:bernoulli".parse().unwrap();
        let p = Polynomial::new(vec![ratio(1, 3), ratio(1, 1), ratio(2, 1), ratio(1, 1)]);
        let row = TableRow::new(&spec, 3, &p);
        assert_eq!(row.coeffs, ["1/3", "1", "2", "1"]);
        let back = parse_table_json(&json(&vec![row])).unwrap();
        assert_eq!(back[0].polynomial().unwrap(), p);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert_eq!("xml".parse::<Format>().unwrap_err().exit_code(), 2);
    }
}
