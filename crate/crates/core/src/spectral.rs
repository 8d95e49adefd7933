//! Umbral operator, natural inner product and the number operator `A_F`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{basic_sequence, sheffer_sequence, PolySequence, ShefferScheme};
use crate::opalg::OperatorSeries;
use crate::poly::{int, Degree, Polynomial, Rational};

/// `W: s_n ↦ x^n`, extended linearly. Solves the triangular system from the
/// top degree down.
pub fn umbral_w(f: &Polynomial, basis: &PolySequence) -> Result<Polynomial> {
    let deg = match f.degree() {
        Degree::NegInfinity => return Ok(Polynomial::zero()),
        Degree::Finite(d) => d,
    };
    if deg > basis.max_degree() {
        return Err(Error::Truncation {
            needed: deg,
            available: basis.max_degree(),
        });
    }
    let mut rest = f.clone();
    let mut out = vec![Rational::zero(); deg + 1];
    for d in (0..=deg).rev() {
        let c = rest.coeff(d);
        if c.is_zero() {
            continue;
        }
        let sd = &basis[d];
        let lead = sd.leading_coeff().expect("basis polynomials are nonzero");
        let w = c / lead;
        rest = &rest - &sd.scale(&w);
        out[d] = w;
    }
    debug_assert!(rest.is_zero());
    Ok(Polynomial::new(out))
}

/// `(f, g)_F = [(Wf)(Q) S g]_{x=0}` over a fixed Sheffer basis.
#[derive(Debug, Clone)]
pub struct InnerProduct {
    basis: PolySequence,
    /// `q^j` for `j = 0..=max_degree`
    q_powers: Vec<OperatorSeries>,
}

impl InnerProduct {
    /// Prepares the form for polynomials of degree at most `n`.
    pub fn new(scheme: &ShefferScheme, n: usize) -> Result<Self> {
        let basis = sheffer_sequence(scheme, n)?;
        let q = scheme.q();
        let mut q_powers = Vec::with_capacity(n + 1);
        q_powers.push(OperatorSeries::identity(q.seq(), q.trunc()));
        for j in 1..=n {
            let next = q_powers[j - 1].mul(q);
            q_powers.push(next);
        }
        Ok(InnerProduct { basis, q_powers })
    }

    pub fn basis(&self) -> &PolySequence {
        &self.basis
    }

    pub fn eval(&self, f: &Polynomial, g: &Polynomial) -> Result<Rational> {
        let scheme = self.basis.scheme();
        let w = umbral_w(f, &self.basis)?;
        let sg = scheme.s().apply(g)?;
        let mut acc = Rational::zero();
        for (j, wj) in w.coeffs().iter().enumerate() {
            if wj.is_zero() {
                continue;
            }
            acc += wj * self.q_powers[j].apply(&sg)?.constant_term();
        }
        Ok(acc)
    }
}

/// One-shot inner product; builds the basis up to `deg f`.
pub fn inner_product(f: &Polynomial, g: &Polynomial, scheme: &ShefferScheme) -> Result<Rational> {
    let n = f.degree().finite().unwrap_or(0);
    InnerProduct::new(scheme, n)?.eval(f, g)
}

/// `G[i][k] = (s_i, s_k)_F` for `i, k <= n`.
pub fn gram(scheme: &ShefferScheme, n: usize) -> Result<Vec<Vec<Rational>>> {
    let ip = InnerProduct::new(scheme, n)?;
    let s = ip.basis().polys();
    s.iter()
        .map(|si| s.iter().map(|sk| ip.eval(si, sk)).collect())
        .collect()
}

/// Determinant by exact Gaussian elimination.
pub fn determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational>> = matrix.iter().map(|r| r[..n].to_vec()).collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let pivot_row = m[col].clone();
            for (cell, v) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                *cell -= &factor * v;
            }
        }
    }
    det
}

/// Determinants of the leading `k×k` blocks, `k = 1..=n`.
pub fn leading_minors(matrix: &[Vec<Rational>]) -> Vec<Rational> {
    (1..=matrix.len())
        .map(|k| {
            let block: Vec<Vec<Rational>> = matrix[..k].iter().map(|r| r[..k].to_vec()).collect();
            determinant(&block)
        })
        .collect()
}

/// Coefficients of `A_F = Σ_{k>=1} (u_k + v_k x̂_F)/ψ_{k-1}! Q^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralCoeffs {
    u: Vec<Rational>,
    v: Vec<Rational>,
    scheme: ShefferScheme,
}

impl SpectralCoeffs {
    pub fn new(u: Vec<Rational>, v: Vec<Rational>, scheme: ShefferScheme) -> Self {
        assert_eq!(u.len(), v.len());
        SpectralCoeffs { u, v, scheme }
    }

    /// Highest `k` with known coefficients.
    pub fn order(&self) -> usize {
        self.u.len()
    }

    /// `u_k` for `k >= 1`.
    pub fn u(&self, k: usize) -> Option<&Rational> {
        k.checked_sub(1).and_then(|i| self.u.get(i))
    }

    pub fn v(&self, k: usize) -> Option<&Rational> {
        k.checked_sub(1).and_then(|i| self.v.get(i))
    }

    pub fn u_all(&self) -> &[Rational] {
        &self.u
    }

    pub fn v_all(&self) -> &[Rational] {
        &self.v
    }

    pub fn scheme(&self) -> &ShefferScheme {
        &self.scheme
    }

    /// Applies the assembled `A_F`; needs `deg p <= order`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let deg = match p.degree() {
            Degree::NegInfinity => return Ok(Polynomial::zero()),
            Degree::Finite(d) => d,
        };
        if deg > self.order() {
            return Err(Error::Truncation {
                needed: deg,
                available: self.order(),
            });
        }
        let seq = self.scheme.seq();
        let q = self.scheme.q();
        let mut acc = Polynomial::zero();
        let mut w = p.clone();
        for k in 1..=deg {
            w = q.apply(&w)?;
            let scale = seq.factorial_q(k - 1).recip();
            let term = &w.scale(&self.u[k - 1]) + &w.xhat(seq).scale(&self.v[k - 1]);
            acc = &acc + &term.scale(&scale);
        }
        Ok(acc)
    }
}

/// Solves `A_F s_n = n s_n` for `(u_n, v_n)`, `n = 1..=order`.
///
/// With `Q^k s_n = (ψ_n!/ψ_{n-k}!) s_{n-k}`, the unknowns `u_n, v_n` enter the
/// `n`-th equation only through the `k = n` term `ψ_n s_0 (u_n + v_n x)`, so
/// they are read off the `x^0` and `x^1` coefficients of the residual; every
/// higher coefficient must then vanish.
pub fn number_operator(scheme: &ShefferScheme, order: usize) -> Result<SpectralCoeffs> {
    let seq = scheme.seq();
    let s = sheffer_sequence(scheme, order)?;
    let c0 = s[0].constant_term();
    let mut u: Vec<Rational> = Vec::with_capacity(order);
    let mut v: Vec<Rational> = Vec::with_capacity(order);
    for n in 1..=order {
        let mut residual = s[n].scale(&int(n as i64));
        for k in 1..n {
            let factor = seq.falling_factorial_q(n, k) / seq.factorial_q(k - 1);
            let sk = &s[n - k];
            let term = &sk.scale(&u[k - 1]) + &sk.xhat(seq).scale(&v[k - 1]);
            residual = &residual - &term.scale(&factor);
        }
        let denom = seq.value_q(n) * &c0;
        let un = residual.coeff(0) / &denom;
        let vn = residual.coeff(1) / &denom;
        let fitted = Polynomial::new(vec![&un * &denom, &vn * &denom]);
        let left = &residual - &fitted;
        if !left.is_zero() {
            return Err(Error::InconsistentAnsatz {
                scheme: scheme.label().to_string(),
                n,
                residual: left.to_string(),
            });
        }
        u.push(un);
        v.push(vn);
    }
    Ok(SpectralCoeffs::new(u, v, scheme.clone()))
}

/// Whether both sides of one `(u_k, v_k)` comparison agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComparisonStatus {
    Match,
    Mismatch,
    NotComputed,
}

impl ComparisonStatus {
    pub fn name(self) -> &'static str {
        match self {
            ComparisonStatus::Match => "match",
            ComparisonStatus::Mismatch => "mismatch",
            ComparisonStatus::NotComputed => "not_computed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonEntry {
    pub k: usize,
    pub solver_u: Option<Rational>,
    pub solver_v: Option<Rational>,
    pub formula_u: Option<Rational>,
    pub formula_v: Option<Rational>,
    pub u_status: ComparisonStatus,
    pub v_status: ComparisonStatus,
}

/// Eigen-solved coefficients next to the closed formulas
/// `u_k = -[(S'S^{-1}) x̂_F^{-1} q_k]_{x=0}` and `v_k = [d/dx q_k]_{x=0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralReport {
    pub label: String,
    pub order: usize,
    pub solver: std::result::Result<SpectralCoeffs, Error>,
    pub formula_u: Vec<Rational>,
    pub formula_v: Vec<Rational>,
}

fn compare(a: Option<&Rational>, b: Option<&Rational>) -> ComparisonStatus {
    match (a, b) {
        (Some(a), Some(b)) if a == b => ComparisonStatus::Match,
        (Some(_), Some(_)) => ComparisonStatus::Mismatch,
        _ => ComparisonStatus::NotComputed,
    }
}

impl SpectralReport {
    /// Comparison row for `k`; rows past the computed order are `NotComputed`.
    pub fn entry(&self, k: usize) -> ComparisonEntry {
        let solver = self.solver.as_ref().ok();
        let solver_u = solver.and_then(|c| c.u(k)).cloned();
        let solver_v = solver.and_then(|c| c.v(k)).cloned();
        let idx = k.checked_sub(1);
        let formula_u = idx.and_then(|i| self.formula_u.get(i)).cloned();
        let formula_v = idx.and_then(|i| self.formula_v.get(i)).cloned();
        ComparisonEntry {
            k,
            u_status: compare(solver_u.as_ref(), formula_u.as_ref()),
            v_status: compare(solver_v.as_ref(), formula_v.as_ref()),
            solver_u,
            solver_v,
            formula_u,
            formula_v,
        }
    }

    pub fn entries(&self) -> Vec<ComparisonEntry> {
        (1..=self.order).map(|k| self.entry(k)).collect()
    }

    pub fn all_match(&self) -> bool {
        self.entries()
            .iter()
            .all(|e| e.u_status == ComparisonStatus::Match && e.v_status == ComparisonStatus::Match)
    }
}

/// Evaluates the closed coefficient formulas and compares them with
/// [`number_operator`]. Never fails on a disagreement; it is reported.
pub fn spectral_report(scheme: &ShefferScheme, order: usize) -> Result<SpectralReport> {
    let seq = scheme.seq();
    let basic = basic_sequence(scheme, order)?;
    let s = scheme.s();
    let log_deriv = s.pincherle().mul(&s.invert()?);
    let zero = Rational::zero();
    let mut formula_u = Vec::with_capacity(order);
    let mut formula_v = Vec::with_capacity(order);
    for k in 1..=order {
        let qk = &basic[k];
        let inner = qk.xhat_inv(seq)?;
        formula_u.push(-log_deriv.apply(&inner)?.constant_term());
        formula_v.push(qk.d_dx().eval(&zero));
    }
    Ok(SpectralReport {
        label: scheme.label().to_string(),
        order,
        solver: number_operator(scheme, order),
        formula_u,
        formula_v,
    })
}

/// Checks `A s_n = n s_n` for `n <= order` by applying the assembled operator,
/// and `(A s_n, s_k) = (s_n, A s_k)` for `n, k <= order`.
pub fn eigencheck(coeffs: &SpectralCoeffs, order: usize) -> Result<bool> {
    let ip = InnerProduct::new(coeffs.scheme(), order)?;
    let s = ip.basis().polys();
    let images = s.iter().map(|sn| coeffs.apply(sn)).collect::<Result<Vec<_>>>()?;
    for (n, (sn, image)) in s.iter().zip(&images).enumerate() {
        if *image != sn.scale(&int(n as i64)) {
            return Ok(false);
        }
    }
    for (n, an) in images.iter().enumerate() {
        for (k, ak) in images.iter().enumerate() {
            if ip.eval(an, &s[k])? != ip.eval(&s[n], ak)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
