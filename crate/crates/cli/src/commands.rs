//! Subcommand bodies. Each returns the text for stdout; errors carry their
//! exit code.

use std::fmt::Write as _;

use fiboper_core::families::sheffer_sequence;
use fiboper_core::spectral::{gram as gram_matrix, leading_minors, spectral_report, ComparisonStatus};
use fiboper_core::{Error, PsiSequence, Rational, ShefferScheme};
use num_traits::Zero;
use serde::Serialize;

use crate::family::FamilySpec;
use crate::render::{self, json, rational_latex, rational_str, Format};
use crate::{verify, CliError, CliResult};

pub const DEFAULT_MAX_N: usize = 16;

#[derive(Debug, Clone)]
pub struct Options {
    pub format: Format,
    pub psi: PsiSequence,
    pub trunc: Option<usize>,
    pub max_n: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { format: Format::Plain, psi: PsiSequence::fibonacci(), trunc: None, max_n: DEFAULT_MAX_N }
    }
}

impl Options {
    /// Checks `n` against the limit and picks a truncation covering degree `needed`.
    fn trunc_for(&self, n: usize, needed: usize) -> CliResult<usize> {
        if n > self.max_n {
            return Err(CliError::Usage(format!("N = {n} exceeds the maximum {}", self.max_n)));
        }
        match self.trunc {
            Some(t) if t < needed => Err(CliError::Usage(format!(
                "--trunc {t} is too small for N = {n} (need at least {needed})"
            ))),
            Some(t) => Ok(t),
            None => Ok(needed),
        }
    }

    fn scheme(&self, spec: &FamilySpec, n: usize, needed: usize) -> CliResult<ShefferScheme> {
        let trunc = self.trunc_for(n, needed)?;
        Ok(spec.family.scheme(&self.psi, trunc)?)
    }
}

pub fn table(spec: &FamilySpec, n: usize, opts: &Options) -> CliResult<String> {
    let scheme = opts.scheme(spec, n, n + 1)?;
    let polys = sheffer_sequence(&scheme, n)?;
    Ok(render::table(spec, polys.polys(), opts.format))
}

pub fn verify(opts: &Options) -> CliResult<String> {
    let report = verify::run()?;
    let text = verify::render(&report, opts.format);
    if report.ok() {
        Ok(text)
    } else {
        // the report still goes to stdout; main prints it before exiting 1
        Err(CliError::Failure(text))
    }
}

#[derive(Serialize)]
struct FibJson {
    psi: &'static str,
    n: usize,
    k: Option<usize>,
    quantity: &'static str,
    value: String,
}

pub fn fib(n: usize, k: Option<usize>, factorial: bool, opts: &Options) -> CliResult<String> {
    let psi = &opts.psi;
    let (quantity, value, latex) = match (k, factorial) {
        (Some(_), true) => {
            return Err(CliError::Usage("--factorial takes no k".into()));
        }
        (Some(k), false) => ("binomial", psi.fibonomial(n, k), format!("\\binom{{{n}}}{{{k}}}_F")),
        (None, true) => ("factorial", psi.factorial(n), format!("F_{{{n}}}!")),
        (None, false) => ("value", psi.value(n), format!("F_{{{n}}}")),
    };
    Ok(match opts.format {
        Format::Plain => format!("{value}\n"),
        Format::Latex => format!("{latex} = {value}\n"),
        Format::Json => json(&FibJson { psi: psi.kind().name(), n, k, quantity, value: value.to_string() }),
    })
}

fn is_diagonal(m: &[Vec<Rational>]) -> bool {
    m.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(k, v)| i == k || v.is_zero()))
}

#[derive(Serialize)]
struct GramJson {
    family: &'static str,
    param: Option<String>,
    n: usize,
    matrix: Vec<Vec<String>>,
    diagonal: bool,
    leading_minors: Vec<String>,
}

pub fn gram(spec: &FamilySpec, n: usize, opts: &Options) -> CliResult<String> {
    let scheme = opts.scheme(spec, n, n + 1)?;
    let m = gram_matrix(&scheme, n)?;
    let minors = leading_minors(&m);
    let strs = |v: &[Rational]| v.iter().map(rational_str).collect::<Vec<_>>();
    Ok(match opts.format {
        Format::Json => json(&GramJson {
            family: spec.name(),
            param: spec.param(),
            n,
            matrix: m.iter().map(|r| strs(r)).collect(),
            diagonal: is_diagonal(&m),
            leading_minors: strs(&minors),
        }),
        Format::Plain => {
            let mut out = render::matrix_plain(&m);
            if is_diagonal(&m) {
                let d: Vec<String> = m.iter().enumerate().map(|(i, r)| rational_str(&r[i])).collect();
                let _ = writeln!(out, "diag({})", d.join(","));
            }
            let _ = writeln!(out, "leading minors: {}", strs(&minors).join(" "));
            out
        }
        Format::Latex => {
            let mut out = render::matrix_latex(&m);
            let l: Vec<String> = minors.iter().map(rational_latex).collect();
            let _ = writeln!(out, "% leading minors: {}", l.join(", "));
            out
        }
    })
}

#[derive(Serialize)]
struct SpectralRow {
    k: usize,
    u: Option<String>,
    v: Option<String>,
    formula_u: Option<String>,
    formula_v: Option<String>,
    u_status: &'static str,
    v_status: &'static str,
}

#[derive(Serialize)]
struct SpectralJson {
    family: &'static str,
    param: Option<String>,
    n: usize,
    coeffs: Vec<SpectralRow>,
    all_match: bool,
}

pub fn spectral(spec: &FamilySpec, n: usize, opts: &Options) -> CliResult<String> {
    let scheme = opts.scheme(spec, n, n + 1)?;
    let report = spectral_report(&scheme, n)?;
    if let Err(e) = &report.solver {
        return Err(match e {
            Error::InconsistentAnsatz { .. } => CliError::Failure(e.to_string()),
            other => CliError::Core(other.clone()),
        });
    }
    let opt = |r: &Option<Rational>| r.as_ref().map(rational_str);
    let rows: Vec<SpectralRow> = report
        .entries()
        .into_iter()
        .map(|e| SpectralRow {
            k: e.k,
            u: opt(&e.solver_u),
            v: opt(&e.solver_v),
            formula_u: opt(&e.formula_u),
            formula_v: opt(&e.formula_v),
            u_status: e.u_status.name(),
            v_status: e.v_status.name(),
        })
        .collect();
    let all_match = report.all_match();
    Ok(match opts.format {
        Format::Json => json(&SpectralJson { family: spec.name(), param: spec.param(), n, coeffs: rows, all_match }),
        Format::Plain => {
            let mut out = String::new();
            let dash = || "-".to_string();
            for r in &rows {
                let _ = writeln!(
                    out,
                    "k={} u={} v={} formula_u={} formula_v={} {}/{}",
                    r.k,
                    r.u.clone().unwrap_or_else(dash),
                    r.v.clone().unwrap_or_else(dash),
                    r.formula_u.clone().unwrap_or_else(dash),
                    r.formula_v.clone().unwrap_or_else(dash),
                    r.u_status,
                    r.v_status
                );
            }
            let _ = writeln!(out, "all_match: {all_match}");
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{rrrl}\n$k$ & $u_k$ & $v_k$ & formulas \\\\\n\\hline\n");
            for e in report.entries() {
                let show = |r: &Option<Rational>| r.as_ref().map(rational_latex).unwrap_or_else(|| "--".into());
                let ok = e.u_status == ComparisonStatus::Match && e.v_status == ComparisonStatus::Match;
                let _ = writeln!(
                    out,
                    "{} & ${}$ & ${}$ & {} \\\\",
                    e.k,
                    show(&e.solver_u),
                    show(&e.solver_v),
                    if ok { "agree" } else { "differ" }
                );
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    })
}
