//! Recomputes every transcribed coefficient along two independent routes and
//! classifies it against the errata ledger.

use std::fmt::Write as _;

use fiboper_core::families::{
    basic_sequence, basic_via_lagrange, closed_form, LagrangeVariant,
};
use fiboper_core::{Polynomial, PsiSequence, Rational};
use serde::Serialize;

use crate::render::{json, rational_latex, rational_str, Format};
use crate::transcription::{abel_points, erratum, Erratum, Table, ERRATA};
use crate::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "ERRATA_CONFIRMED")]
    ErrataConfirmed,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::ErrataConfirmed => "ERRATA_CONFIRMED",
            Status::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefDiff {
    pub power: usize,
    pub printed: Rational,
    pub derived: Rational,
    pub ledger: Option<&'static Erratum>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyEntry {
    pub table: Table,
    pub a: Option<Rational>,
    pub n: usize,
    pub status: Status,
    pub routes: [&'static str; 2],
    pub printed: Polynomial,
    pub derived: Polynomial,
    /// Only set when the two routes disagree.
    pub other_route: Option<Polynomial>,
    pub diffs: Vec<CoefDiff>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
    /// Ledger entries no table row confirmed.
    pub stale: Vec<&'static Erratum>,
}

impl VerifyReport {
    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn ok(&self) -> bool {
        self.count(Status::Mismatch) == 0 && self.stale.is_empty()
    }

    pub fn find(&self, table: Table, n: usize) -> impl Iterator<Item = &VerifyEntry> {
        self.entries.iter().filter(move |e| e.table == table && e.n == n)
    }
}

type Routes = ([&'static str; 2], Vec<Polynomial>, Vec<Polynomial>);

fn routes(table: Table, a: &Rational, max_n: usize) -> CliResult<Routes> {
    let f = PsiSequence::fibonacci();
    let family = table.family(a);
    let scheme = family.scheme(&f, max_n + 1)?;
    Ok(match table {
        Table::LaguerreBasic | Table::LaguerreAlpha1 | Table::Bernoulli => {
            let form = family.closed_form().expect("family has a closed form");
            let first = if table == Table::LaguerreBasic {
                basic_sequence(&scheme, max_n)?.polys().to_vec()
            } else {
                family.sequence(&f, max_n)?.polys().to_vec()
            };
            let name = if table == Table::LaguerreBasic { "rodrigues" } else { "sheffer_operator" };
            let second = (0..=max_n).map(|n| closed_form(&f, &form, n)).collect();
            ([name, "closed_form"], first, second)
        }
        _ => {
            let first = basic_sequence(&scheme, max_n)?.polys().to_vec();
            let second = basic_via_lagrange(&scheme, max_n, LagrangeVariant::Xhat)?.polys().to_vec();
            (["rodrigues", "lagrange_xhat"], first, second)
        }
    })
}

fn classify(table: Table, a: &Rational, n: usize, printed: &Polynomial, derived: &Polynomial) -> (Status, Vec<CoefDiff>) {
    let top = printed.coeffs().len().max(derived.coeffs().len());
    let diffs: Vec<CoefDiff> = (0..top)
        .filter(|&k| printed.coeff(k) != derived.coeff(k))
        .map(|power| CoefDiff {
            power,
            printed: printed.coeff(power),
            derived: derived.coeff(power),
            ledger: erratum(table, n, power),
        })
        .collect();
    if diffs.is_empty() {
        return (Status::Match, diffs);
    }
    let explained = diffs.iter().all(|d| {
        d.ledger
            .is_some_and(|e| e.printed.at(a) == d.printed && e.derived.at(a) == d.derived)
    });
    let status = if explained { Status::ErrataConfirmed } else { Status::Mismatch };
    (status, diffs)
}

pub fn run() -> CliResult<VerifyReport> {
    let mut entries = Vec::new();
    for table in Table::ALL {
        let rows = table.rows();
        let max_n = rows.len() - 1;
        let points = if table.symbolic() { abel_points() } else { vec![Rational::from_integer(1.into())] };
        for a in points {
            let (names, first, second) = routes(table, &a, max_n)?;
            for n in 0..=max_n {
                let printed = table.polynomial(n, &a);
                let derived = first[n].clone();
                let (mut status, diffs) = classify(table, &a, n, &printed, &derived);
                let other_route = (second[n] != derived).then(|| second[n].clone());
                if other_route.is_some() {
                    status = Status::Mismatch;
                }
                entries.push(VerifyEntry {
                    table,
                    a: table.symbolic().then(|| a.clone()),
                    n,
                    status,
                    routes: names,
                    printed,
                    derived,
                    other_route,
                    diffs,
                });
            }
        }
    }
    let stale = ERRATA
        .iter()
        .filter(|e| {
            !entries.iter().any(|v| {
                v.status == Status::ErrataConfirmed
                    && v.table == e.table
                    && v.n == e.n
                    && v.diffs.iter().any(|d| d.power == e.power)
            })
        })
        .collect();
    Ok(VerifyReport { entries, stale })
}

fn entry_label(e: &VerifyEntry) -> String {
    match &e.a {
        Some(a) => format!("{} a={a} n={}", e.table.name(), e.n),
        None => format!("{} n={}", e.table.name(), e.n),
    }
}

fn diff_text(d: &CoefDiff) -> String {
    match d.ledger {
        Some(l) if l.printed.a_power > 0 => format!(
            "x^{}: printed {}, derived {}",
            d.power,
            l.printed.label(),
            l.derived.label()
        ),
        _ => format!("x^{}: printed {}, derived {}", d.power, d.printed, d.derived),
    }
}

#[derive(Serialize)]
struct JsonDiff {
    power: usize,
    printed: String,
    derived: String,
    in_ledger: bool,
}

#[derive(Serialize)]
struct JsonEntry {
    table: &'static str,
    a: Option<String>,
    n: usize,
    status: Status,
    routes: [&'static str; 2],
    derived: Vec<String>,
    printed: Vec<String>,
    other_route: Option<Vec<String>>,
    diffs: Vec<JsonDiff>,
}

#[derive(Serialize)]
struct JsonStale {
    table: &'static str,
    n: usize,
    power: usize,
    printed: String,
    derived: String,
}

#[derive(Serialize)]
struct JsonSummary {
    r#match: usize,
    errata_confirmed: usize,
    mismatch: usize,
    stale_errata: usize,
}

#[derive(Serialize)]
struct JsonReport {
    entries: Vec<JsonEntry>,
    stale_errata: Vec<JsonStale>,
    summary: JsonSummary,
}

fn coeff_strs(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(rational_str).collect()
}

fn summary_line(r: &VerifyReport) -> String {
    format!(
        "summary: {} MATCH, {} ERRATA_CONFIRMED, {} MISMATCH, {} stale errata",
        r.count(Status::Match),
        r.count(Status::ErrataConfirmed),
        r.count(Status::Mismatch),
        r.stale.len()
    )
}

pub fn render(r: &VerifyReport, format: Format) -> String {
    match format {
        Format::Plain => {
            let mut out = String::new();
            for e in &r.entries {
                let _ = write!(out, "{} {}", entry_label(e), e.status.name());
                if !e.diffs.is_empty() {
                    let d: Vec<String> = e.diffs.iter().map(diff_text).collect();
                    let _ = write!(out, " {}", d.join("; "));
                }
                if let Some(o) = &e.other_route {
                    let _ = write!(out, " ({} gives {}, {} gives {o})", e.routes[0], e.derived, e.routes[1]);
                }
                out.push('\n');
            }
            for s in &r.stale {
                let _ = writeln!(
                    out,
                    "stale erratum: {} n={} x^{}: printed {}, ledger says {}",
                    s.table.name(),
                    s.n,
                    s.power,
                    s.printed.label(),
                    s.derived.label()
                );
            }
            out + &summary_line(r) + "\n"
        }
        Format::Json => json(&JsonReport {
            entries: r
                .entries
                .iter()
                .map(|e| JsonEntry {
                    table: e.table.name(),
                    a: e.a.as_ref().map(rational_str),
                    n: e.n,
                    status: e.status,
                    routes: e.routes,
                    derived: coeff_strs(&e.derived),
                    printed: coeff_strs(&e.printed),
                    other_route: e.other_route.as_ref().map(coeff_strs),
                    diffs: e
                        .diffs
                        .iter()
                        .map(|d| JsonDiff {
                            power: d.power,
                            printed: rational_str(&d.printed),
                            derived: rational_str(&d.derived),
                            in_ledger: d.ledger.is_some(),
                        })
                        .collect(),
                })
                .collect(),
            stale_errata: r
                .stale
                .iter()
                .map(|s| JsonStale {
                    table: s.table.name(),
                    n: s.n,
                    power: s.power,
                    printed: s.printed.label(),
                    derived: s.derived.label(),
                })
                .collect(),
            summary: JsonSummary {
                r#match: r.count(Status::Match),
                errata_confirmed: r.count(Status::ErrataConfirmed),
                mismatch: r.count(Status::Mismatch),
                stale_errata: r.stale.len(),
            },
        }),
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{llll}\n");
            out.push_str("table & $n$ & status & coefficient \\\\\n\\hline\n");
            for e in &r.entries {
                let table = match &e.a {
                    Some(a) => format!("{} ($a={}$)", e.table.name(), rational_latex(a)),
                    None => e.table.name().to_string(),
                };
                let diffs: Vec<String> = e
                    .diffs
                    .iter()
                    .map(|d| {
                        format!(
                            "$x^{{{}}}$: {} $\\to$ {}",
                            d.power,
                            rational_latex(&d.printed),
                            rational_latex(&d.derived)
                        )
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "{} & {} & {} & {} \\\\",
                    table.replace('_', "\\_"),
                    e.n,
                    e.status.name().replace('_', "\\_"),
                    diffs.join(", ")
                );
            }
            out.push_str("\\end{tabular}\n");
            out + "% " + &summary_line(r) + "\n"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fiboper_core::poly::int;

    #[test]
    fn classification() {
        let a = int(1);
        let p = Polynomial::from_ints(&[0, 1, 1]);
        assert_eq!(classify(Table::ForwardDifference, &a, 2, &p, &p).0, Status::Match);
        let q = Polynomial::from_ints(&[0, 2, 1]);
        assert_eq!(classify(Table::ForwardDifference, &a, 2, &p, &q).0, Status::Mismatch);
        // ledgered position but wrong derived value
        let printed = Table::LaguerreBasic.polynomial(5, &a);
        let mut c = printed.coeffs().to_vec();
        c[3] = int(-91);
        let (status, diffs) = classify(Table::LaguerreBasic, &a, 5, &printed, &Polynomial::new(c));
        assert_eq!(status, Status::Mismatch);
        assert!(diffs[0].ledger.is_some());
    }
}
