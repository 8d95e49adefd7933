//! Basic and Sheffer F-polynomial sequences.
//!
//! A [`ShefferScheme`] pairs a delta indicator `q` with an invertible
//! indicator `s`. Its basic sequence depends only on `q`; the Sheffer
//! sequence is `s_n = S^{-1} q_n`. Several independent constructions are
//! provided so they can be checked against each other:
//!
//! - basic: the Rodrigues recurrence (default) and three Lagrange-type
//!   formulas ([`basic_via_lagrange`]), plus transfer from another basic
//!   sequence ([`transfer`]);
//! - Sheffer: `S^{-1}` applied to the basic sequence ([`sheffer_sequence`])
//!   and the `x̂_F - S'/S` recurrence ([`sheffer_via_recurrence`]);
//! - closed coefficient formulas for the named families ([`closed_form`]).

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::opalg::{translate, DeltaSeries, NamedOperator, OperatorSeries};
use crate::poly::{int, Polynomial, Rational};
use crate::seqcore::{binomial, binomial_q, PsiSequence};

/// The named families of the calculus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// `{x^n}`, basic for `∂_F`.
    Derivative,
    /// Basic for `Δ_F`.
    ForwardDifference,
    /// Basic for `∇_F`.
    BackwardDifference,
    /// Basic for the Abel operator with parameter `a`.
    Abel(Rational),
    /// Basic for the Laguerre operator (Laguerre polynomials of order -1).
    Laguerre,
    /// Sheffer for `∂_F` relative to `exp_F{a t²/2}`.
    Hermite(Rational),
    /// Sheffer for the Laguerre operator relative to `(1 - t)^{-α-1}`.
    LaguerreAlpha(Rational),
    /// Sheffer for `∂_F` relative to `((exp_F{t} - 1)/t)^{-1}`.
    Bernoulli,
}

impl Family {
    pub fn kind(&self) -> SequenceKind {
        match self {
            Family::Hermite(_) | Family::LaguerreAlpha(_) | Family::Bernoulli => SequenceKind::Sheffer,
            _ => SequenceKind::Basic,
        }
    }

    pub fn delta(&self) -> NamedOperator {
        match self {
            Family::Derivative | Family::Hermite(_) | Family::Bernoulli => NamedOperator::Derivative,
            Family::ForwardDifference => NamedOperator::ForwardDifference,
            Family::BackwardDifference => NamedOperator::BackwardDifference,
            Family::Abel(a) => NamedOperator::Abel(a.clone()),
            Family::Laguerre | Family::LaguerreAlpha(_) => NamedOperator::Laguerre,
        }
    }

    /// The invertible operator `S`; `None` for basic families.
    pub fn invertible(&self) -> Option<NamedOperator> {
        match self {
            Family::Hermite(a) => Some(NamedOperator::HermiteS(a.clone())),
            Family::LaguerreAlpha(alpha) => Some(NamedOperator::LaguerreS(alpha.clone())),
            Family::Bernoulli => Some(NamedOperator::BernoulliS),
            _ => None,
        }
    }

    pub fn params(&self) -> Vec<Rational> {
        match self {
            Family::Abel(a) | Family::Hermite(a) | Family::LaguerreAlpha(a) => vec![a.clone()],
            _ => Vec::new(),
        }
    }

    pub fn closed_form(&self) -> Option<ClosedForm> {
        match self {
            Family::Laguerre => Some(ClosedForm::LaguerreBasic),
            Family::Hermite(a) => Some(ClosedForm::Hermite(a.clone())),
            Family::LaguerreAlpha(alpha) => Some(ClosedForm::LaguerreAlpha(alpha.clone())),
            Family::Bernoulli => Some(ClosedForm::Bernoulli),
            _ => None,
        }
    }

    pub fn scheme(&self, seq: &PsiSequence, trunc: usize) -> Result<ShefferScheme> {
        let q = DeltaSeries::new(self.delta().build(seq, trunc)?)?;
        let s = match self.invertible() {
            Some(op) => op.build(seq, trunc)?,
            None => OperatorSeries::identity(seq, trunc),
        };
        ShefferScheme::new(q, s, self.to_string(), self.params())
    }

    /// The family's sequence up to degree `n`, built by the default route.
    pub fn sequence(&self, seq: &PsiSequence, n: usize) -> Result<PolySequence> {
        let scheme = self.scheme(seq, n + 1)?;
        match self.kind() {
            SequenceKind::Basic => basic_sequence(&scheme, n),
            SequenceKind::Sheffer => sheffer_sequence(&scheme, n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Derivative => f.write_str("derivative"),
            Family::ForwardDifference => f.write_str("forward_difference"),
            Family::BackwardDifference => f.write_str("backward_difference"),
            Family::Abel(a) => write!(f, "abel(a={a})"),
            Family::Laguerre => f.write_str("laguerre"),
            Family::Hermite(a) => write!(f, "hermite(a={a})"),
            Family::LaguerreAlpha(alpha) => write!(f, "laguerre_alpha(alpha={alpha})"),
            Family::Bernoulli => f.write_str("bernoulli"),
        }
    }
}

/// A delta operator `Q` together with an invertible `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShefferScheme {
    q: DeltaSeries,
    s: OperatorSeries,
    label: String,
    params: Vec<Rational>,
}

impl ShefferScheme {
    pub fn new(
        q: DeltaSeries,
        s: OperatorSeries,
        label: impl Into<String>,
        params: Vec<Rational>,
    ) -> Result<Self> {
        if !s.is_invertible() {
            return Err(Error::NotInvertible);
        }
        Ok(ShefferScheme {
            q,
            s,
            label: label.into(),
            params,
        })
    }

    /// The scheme `(q, I)`.
    pub fn basic(q: DeltaSeries, label: impl Into<String>) -> Self {
        let s = OperatorSeries::identity(q.seq(), q.trunc());
        ShefferScheme {
            q,
            s,
            label: label.into(),
            params: Vec::new(),
        }
    }

    pub fn q(&self) -> &DeltaSeries {
        &self.q
    }

    pub fn s(&self) -> &OperatorSeries {
        &self.s
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    pub fn seq(&self) -> &PsiSequence {
        self.q.seq()
    }

    pub fn trunc(&self) -> usize {
        self.q.trunc().min(self.s.trunc())
    }

    pub fn is_basic(&self) -> bool {
        self.s.is_identity()
    }

    /// The same delta operator with `S = I`.
    pub fn basic_part(&self) -> ShefferScheme {
        ShefferScheme {
            q: self.q.clone(),
            s: OperatorSeries::identity(self.seq(), self.q.trunc()),
            label: self.label.clone(),
            params: self.params.clone(),
        }
    }

    fn require_trunc(&self, needed: usize) -> Result<()> {
        if self.trunc() < needed {
            return Err(Error::Truncation {
                needed,
                available: self.trunc(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Basic,
    Sheffer,
}

/// `polys[n]` has degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySequence {
    polys: Vec<Polynomial>,
    scheme: ShefferScheme,
    kind: SequenceKind,
}

impl PolySequence {
    pub fn new(polys: Vec<Polynomial>, scheme: ShefferScheme, kind: SequenceKind) -> Self {
        PolySequence {
            polys,
            scheme,
            kind,
        }
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> Option<&Polynomial> {
        self.polys.get(n)
    }

    /// Highest degree present.
    pub fn max_degree(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn scheme(&self) -> &ShefferScheme {
        &self.scheme
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn iter(&self) -> impl Iterator<Item = &Polynomial> {
        self.polys.iter()
    }

    /// Checks `deg p_n = n`, `Q p_n = ψ_n p_{n-1}` and the normalisation
    /// (`p_0 = 1`, `p_n(0) = 0` for basic; `p_0` a nonzero constant for Sheffer).
    pub fn check_axioms(&self) -> Result<()> {
        let seq = self.scheme.seq();
        let fail = |msg: String| Err(Error::IdentityFailed(format!("{}: {msg}", self.scheme.label)));
        for (n, p) in self.polys.iter().enumerate() {
            if p.degree().finite() != Some(n) {
                return fail(format!("deg p_{n} = {}", p.degree()));
            }
            let image = self.scheme.q.apply(p)?;
            let expected = match n {
                0 => Polynomial::zero(),
                _ => self.polys[n - 1].scale(&seq.value_q(n)),
            };
            if image != expected {
                return fail(format!("Q p_{n} = {image}, expected {expected}"));
            }
        }
        match self.kind {
            SequenceKind::Basic => {
                if self.polys[0] != Polynomial::one() {
                    return fail(format!("p_0 = {}", self.polys[0]));
                }
                if let Some(n) = (1..self.polys.len()).find(|&n| !self.polys[n].constant_term().is_zero()) {
                    return fail(format!("p_{n}(0) = {}", self.polys[n].constant_term()));
                }
            }
            SequenceKind::Sheffer => {
                // degree check above already forces a nonzero constant p_0
            }
        }
        Ok(())
    }
}

impl std::ops::Index<usize> for PolySequence {
    type Output = Polynomial;
    fn index(&self, n: usize) -> &Polynomial {
        &self.polys[n]
    }
}

/// Basic sequence of `scheme.q` by the Rodrigues recurrence
/// `q_n = (ψ_n/n) x̂_F (Q')^{-1} q_{n-1}`.
pub fn basic_sequence(scheme: &ShefferScheme, n: usize) -> Result<PolySequence> {
    let q = scheme.q();
    if q.trunc() < n {
        return Err(Error::Truncation {
            needed: n,
            available: q.trunc(),
        });
    }
    let seq = scheme.seq();
    let qp_inv = q.pincherle().invert()?;
    let mut polys = Vec::with_capacity(n + 1);
    polys.push(Polynomial::one());
    for k in 1..=n {
        let w = qp_inv.apply(&polys[k - 1])?;
        let c = seq.value_q(k) / int(k as i64);
        polys.push(w.xhat(seq).scale(&c));
    }
    Ok(PolySequence::new(polys, scheme.basic_part(), SequenceKind::Basic))
}

/// The four closed routes to a basic sequence, with `Q = ∂_F P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LagrangeVariant {
    /// `q_n = Q' P^{-n-1} x^n`
    Pincherle = 1,
    /// `q_n = P^{-n} x^n - (ψ_n/n) (P^{-n})' x^{n-1}`
    Difference = 2,
    /// `q_n = (ψ_n/n) x̂_F P^{-n} x^{n-1}`
    Xhat = 3,
    /// `q_n = (ψ_n/n) x̂_F (Q')^{-1} q_{n-1}`
    Rodrigues = 4,
}

impl LagrangeVariant {
    pub const ALL: [LagrangeVariant; 4] = [
        LagrangeVariant::Pincherle,
        LagrangeVariant::Difference,
        LagrangeVariant::Xhat,
        LagrangeVariant::Rodrigues,
    ];
}

/// Basic sequence by one of the Lagrange/Rodrigues formulas.
///
/// Variants 1 and 2 need `trunc(q) >= n + 1` because `P = q/t` loses an order.
pub fn basic_via_lagrange(
    scheme: &ShefferScheme,
    n: usize,
    variant: LagrangeVariant,
) -> Result<PolySequence> {
    if variant == LagrangeVariant::Rodrigues {
        return basic_sequence(scheme, n);
    }
    let seq = scheme.seq();
    let q = scheme.q();
    let p = q.factor();
    let needed = match variant {
        LagrangeVariant::Xhat => n.max(1) - 1,
        _ => n,
    };
    if p.trunc() < needed {
        return Err(Error::Truncation {
            needed: needed + 1,
            available: q.trunc(),
        });
    }
    let p_inv = p.invert()?;
    let qp = q.pincherle();
    let mut polys = Vec::with_capacity(n + 1);
    polys.push(Polynomial::one());
    for k in 1..=n {
        let xk = Polynomial::monomial(Rational::one(), k);
        let xk1 = Polynomial::monomial(Rational::one(), k - 1);
        let c = seq.value_q(k) / int(k as i64);
        let p_neg_k = p_inv.pow(k as u32);
        let qk = match variant {
            LagrangeVariant::Pincherle => qp.mul(&p_neg_k.mul(&p_inv)).apply(&xk)?,
            LagrangeVariant::Difference => {
                let first = p_neg_k.apply(&xk)?;
                let second = p_neg_k.pincherle().apply(&xk1)?;
                &first - &second.scale(&c)
            }
            LagrangeVariant::Xhat => p_neg_k.apply(&xk1)?.xhat(seq).scale(&c),
            LagrangeVariant::Rodrigues => unreachable!(),
        };
        polys.push(qk);
    }
    Ok(PolySequence::new(polys, scheme.basic_part(), SequenceKind::Basic))
}

/// The two connection formulas between basic sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransferFormula {
    /// `q_n = Q' (R')^{-1} S^{-n-1} P^{n+1} r_n`
    Pincherle,
    /// `q_n = x̂_F (P S^{-1})^n x̂_F^{-1} r_n`, `n > 0`
    Xhat,
}

/// Carries the basic sequence `{r_n}` of `R = ∂_F P` to the basic sequence
/// of `Q = ∂_F S` (the delta operator of `to`).
pub fn transfer(from: &PolySequence, to: &ShefferScheme, formula: TransferFormula) -> Result<PolySequence> {
    if from.kind() != SequenceKind::Basic {
        return Err(Error::domain("transfer needs a basic source sequence"));
    }
    let seq = to.seq();
    let r = from.scheme().q();
    let q = to.q();
    let p = r.factor();
    let s = q.factor();
    let n_max = from.max_degree();
    let avail = p.trunc().min(s.trunc());
    if avail < n_max {
        return Err(Error::Truncation {
            needed: n_max + 1,
            available: avail + 1,
        });
    }
    let s_inv = s.invert()?;
    let mut polys = Vec::with_capacity(n_max + 1);
    match formula {
        TransferFormula::Pincherle => {
            let lead = q.pincherle().mul(&r.pincherle().invert()?);
            for (n, rn) in from.iter().enumerate() {
                let op = lead
                    .mul(&s_inv.pow(n as u32 + 1))
                    .mul(&p.pow(n as u32 + 1));
                polys.push(op.apply(rn)?);
            }
        }
        TransferFormula::Xhat => {
            let ratio = p.mul(&s_inv);
            polys.push(Polynomial::one());
            for (n, rn) in from.iter().enumerate().skip(1) {
                let inner = rn.xhat_inv(seq)?;
                polys.push(ratio.pow(n as u32).apply(&inner)?.xhat(seq));
            }
        }
    }
    Ok(PolySequence::new(polys, to.basic_part(), SequenceKind::Basic))
}

/// `s_n = S^{-1} q_n`.
pub fn sheffer_sequence(scheme: &ShefferScheme, n: usize) -> Result<PolySequence> {
    scheme.require_trunc(n)?;
    let basic = basic_sequence(scheme, n)?;
    let s_inv = scheme.s().invert()?;
    let polys = basic
        .iter()
        .map(|qn| s_inv.apply(qn))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolySequence::new(polys, scheme.clone(), SequenceKind::Sheffer))
}

/// `s_{n+1} = (ψ_{n+1}/(n+1)) [x̂_F - S'/S] (Q')^{-1} s_n`, seeded with `s_0 = S^{-1} 1`.
pub fn sheffer_via_recurrence(scheme: &ShefferScheme, n: usize) -> Result<PolySequence> {
    scheme.require_trunc(n)?;
    let seq = scheme.seq();
    let s = scheme.s();
    let s_inv = s.invert()?;
    let log_deriv = s.pincherle().mul(&s_inv);
    let qp_inv = scheme.q().pincherle().invert()?;
    let mut polys = Vec::with_capacity(n + 1);
    polys.push(s_inv.apply(&Polynomial::one())?);
    for k in 0..n {
        let w = qp_inv.apply(&polys[k])?;
        let step = &w.xhat(seq) - &log_deriv.apply(&w)?;
        let c = seq.value_q(k + 1) / int(k as i64 + 1);
        polys.push(step.scale(&c));
    }
    Ok(PolySequence::new(polys, scheme.clone(), SequenceKind::Sheffer))
}

/// Families with an explicit coefficient formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    LaguerreBasic,
    Hermite(Rational),
    LaguerreAlpha(Rational),
    Bernoulli,
}

/// Evaluates the explicit coefficient formula of a family; independent of
/// the operator machinery.
///
/// The Hermite formula `Σ_k (-a)^k/(2^k ψ_k!) n^{(2k)}_ψ x^{n-2k}` is
/// `exp_F{-a ∂_F²/2} x^n`. Because `exp_F{u}^{-1} ≠ exp_F{-u}` once `ψ_2! ≠ 2`,
/// it coincides with `S^{-1} x^n` for `S = exp_F{a ∂_F²/2}` only for `n <= 3`.
pub fn closed_form(seq: &PsiSequence, form: &ClosedForm, n: usize) -> Polynomial {
    match form {
        ClosedForm::LaguerreBasic => {
            if n == 0 {
                return Polynomial::one();
            }
            let lead = seq.value_q(n) / int(n as i64);
            let mut coeffs = vec![Rational::zero(); n + 1];
            for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                let c = sign
                    * Rational::from_integer(binomial(n, k))
                    * seq.falling_factorial_q(n - 1, n - k)
                    * int(k as i64)
                    / seq.value_q(k);
                *slot = &lead * c;
            }
            Polynomial::new(coeffs)
        }
        ClosedForm::Hermite(a) => {
            let mut coeffs = vec![Rational::zero(); n + 1];
            let minus_half_a = -a / int(2);
            let mut pow = Rational::one();
            for k in 0..=n / 2 {
                coeffs[n - 2 * k] = &pow / seq.factorial_q(k) * seq.falling_factorial_q(n, 2 * k);
                pow *= &minus_half_a;
            }
            Polynomial::new(coeffs)
        }
        ClosedForm::LaguerreAlpha(alpha) => {
            if *alpha == int(-1) {
                return closed_form(seq, &ClosedForm::LaguerreBasic, n);
            }
            let top = alpha + int(n as i64);
            let coeffs = (0..=n)
                .map(|k| {
                    let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                    sign * seq.factorial_q(n) / seq.factorial_q(k) * binomial_q(&top, n - k)
                })
                .collect();
            Polynomial::new(coeffs)
        }
        ClosedForm::Bernoulli => {
            let mut coeffs = vec![Rational::zero(); n + 1];
            for k in 0..=n {
                coeffs[n - k] = seq.fibonomial_q(n, k) / seq.value_q(k + 1);
            }
            Polynomial::new(coeffs)
        }
    }
}

/// First expansion coefficients `a_n = [T q_n]_{x=0}`, so that
/// `T = Σ a_n/ψ_n! Q^n`.
pub fn first_expansion(t: &OperatorSeries, basis: &PolySequence) -> Result<Vec<Rational>> {
    if basis.kind() != SequenceKind::Basic {
        return Err(Error::domain("first expansion needs a basic sequence"));
    }
    basis
        .iter()
        .map(|qn| Ok(t.apply(qn)?.constant_term()))
        .collect()
}

/// `Σ_n a_n/ψ_n! q^n`, truncated at `min(trunc q, len a - 1)`.
pub fn expansion_series(coeffs: &[Rational], q: &DeltaSeries) -> OperatorSeries {
    let seq = q.seq();
    let order = q.trunc().min(coeffs.len().saturating_sub(1));
    let q = q.truncate(order);
    let mut acc = OperatorSeries::zero(seq, order);
    let mut power = OperatorSeries::identity(seq, order);
    for (n, a) in coeffs.iter().enumerate().take(order + 1) {
        acc = &acc + &power.scale(&(a / seq.factorial_q(n)));
        power = power.mul(&q);
    }
    acc
}

/// Rebuilds `S^{-1} = Σ s_k(0)/ψ_k! Q^k` from the Sheffer sequence and
/// checks it against the directly inverted indicator.
pub fn sheffer_zero_expansion(scheme: &ShefferScheme, n: usize) -> Result<OperatorSeries> {
    let sheffer = sheffer_sequence(scheme, n)?;
    let at_zero: Vec<Rational> = sheffer.iter().map(Polynomial::constant_term).collect();
    let rebuilt = expansion_series(&at_zero, scheme.q());
    let direct = scheme.s().invert()?.truncate(rebuilt.trunc());
    if rebuilt != direct {
        return Err(Error::IdentityFailed(format!(
            "{}: Σ s_k(0)/ψ_k! Q^k = {:?}, S^-1 = {:?}",
            scheme.label(),
            rebuilt.coeffs(),
            direct.coeffs()
        )));
    }
    Ok(rebuilt)
}

/// `Σ_k binom(n,k)_ψ a_k(x) b_{n-k}(y)` with `b` evaluated at `y`.
fn binomial_sum(seq: &PsiSequence, n: usize, a: &[Polynomial], b: &[Polynomial], y: &Rational) -> Polynomial {
    (0..=n).fold(Polynomial::zero(), |acc, k| {
        let scalar = seq.fibonomial_q(n, k) * b[n - k].eval(y);
        &acc + &a[k].scale(&scalar)
    })
}

/// `p_n(x +_F y) = Σ_k binom(n,k)_F p_k(x) p_{n-k}(y)` for every `n` in the sequence.
pub fn check_binomial_type(seqn: &PolySequence, y: &Rational) -> bool {
    let seq = seqn.scheme().seq();
    let p = seqn.polys();
    (0..p.len()).all(|n| translate(seq, &p[n], y) == binomial_sum(seq, n, p, p, y))
}

/// The Sheffer binomial identity `s_n(x +_F y) = Σ binom(n,k)_F s_k(x) q_{n-k}(y)`
/// and its `y = 0` corollary `s_n(x) = Σ binom(n,k)_F s_k(0) q_{n-k}(x)`.
pub fn check_sheffer_binomial(sheffer: &PolySequence, y: &Rational) -> Result<bool> {
    let scheme = sheffer.scheme();
    let seq = scheme.seq();
    let basic = basic_sequence(scheme, sheffer.max_degree())?;
    let s = sheffer.polys();
    let q = basic.polys();
    let theorem = (0..s.len()).all(|n| translate(seq, &s[n], y) == binomial_sum(seq, n, s, q, y));
    let corollary = (0..s.len()).all(|n| {
        let rhs = (0..=n).fold(Polynomial::zero(), |acc, k| {
            let scalar = seq.fibonomial_q(n, k) * s[k].constant_term();
            &acc + &q[n - k].scale(&scalar)
        });
        s[n] == rhs
    });
    Ok(theorem && corollary)
}

/// Compares `Σ_k p_k(x) z^k/ψ_k!` with `s(q^{-1}(z))^{-1} exp_F{x q^{-1}(z)}`
/// coefficient by coefficient up to `z^order`.
pub fn gf_check(scheme: &ShefferScheme, order: usize) -> Result<bool> {
    scheme.require_trunc(order)?;
    let seq = scheme.seq();
    let family = if scheme.is_basic() {
        basic_sequence(scheme, order)?
    } else {
        sheffer_sequence(scheme, order)?
    };
    let q = DeltaSeries::new(scheme.q().truncate(order))?;
    let r = q.comp_inverse();
    let weight = scheme.s().truncate(order).compose(&r)?.invert()?;
    // coefficient of x^m z^k on the right is [z^k] r^m/ψ_m! · weight
    let mut table = vec![vec![Rational::zero(); order + 1]; order + 1];
    let mut power = OperatorSeries::identity(seq, order);
    for m in 0..=order {
        let term = power.scale(&seq.factorial_q(m).recip()).mul(&weight);
        for (k, row) in table.iter_mut().enumerate() {
            row[m] = term.coeff(k).clone();
        }
        power = power.mul(&r);
    }
    Ok(table.into_iter().enumerate().all(|(k, row)| {
        Polynomial::new(row) == family[k].scale(&seq.factorial_q(k).recip())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn fib() -> PsiSequence {
        PsiSequence::fibonacci()
    }

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn derivative_basis_is_monomials() {
        let s = Family::Derivative.sequence(&fib(), 5).unwrap();
        for n in 0..=5 {
            assert_eq!(s[n], Polynomial::monomial(int(1), n));
        }
    }

    #[test]
    fn rodrigues_examples() {
        let f = fib();
        let fwd = Family::ForwardDifference.sequence(&f, 3).unwrap();
        assert_eq!(fwd[3], poly(&[0, 3, -4, 1]));
        let bwd = Family::BackwardDifference.sequence(&f, 4).unwrap();
        assert_eq!(bwd[4], poly(&[0, 16, 24, 9, 1]));
    }

    #[test]
    fn lagrange_variant_examples() {
        let f = fib();
        let d = Family::Derivative.scheme(&f, 6).unwrap();
        let s = basic_via_lagrange(&d, 5, LagrangeVariant::Xhat).unwrap();
        assert!(s.iter().enumerate().all(|(n, p)| *p == Polynomial::monomial(int(1), n)));

        let lag = Family::Laguerre.scheme(&f, 5).unwrap();
        let l = basic_via_lagrange(&lag, 4, LagrangeVariant::Xhat).unwrap();
        assert_eq!(l[4], poly(&[0, -6, 18, -9, 1]));

        let abel = Family::Abel(int(1)).scheme(&f, 7).unwrap();
        let v1 = basic_via_lagrange(&abel, 6, LagrangeVariant::Pincherle).unwrap();
        let v4 = basic_via_lagrange(&abel, 6, LagrangeVariant::Rodrigues).unwrap();
        assert_eq!(v1, v4);
    }

    #[test]
    fn lagrange_needs_spare_order() {
        let f = fib();
        let abel = Family::Abel(int(1)).scheme(&f, 4).unwrap();
        assert!(matches!(
            basic_via_lagrange(&abel, 4, LagrangeVariant::Pincherle),
            Err(Error::Truncation { .. })
        ));
        assert!(basic_via_lagrange(&abel, 4, LagrangeVariant::Xhat).is_ok());
    }

    #[test]
    fn transfer_examples() {
        let f = fib();
        let from = Family::Derivative.sequence(&f, 3).unwrap();
        let to = Family::ForwardDifference.scheme(&f, 4).unwrap();
        let t = transfer(&from, &to, TransferFormula::Xhat).unwrap();
        assert_eq!(t[3], poly(&[0, 3, -4, 1]));

        let lag = Family::Laguerre.scheme(&f, 6).unwrap();
        let l = basic_sequence(&lag, 5).unwrap();
        for formula in [TransferFormula::Pincherle, TransferFormula::Xhat] {
            assert_eq!(transfer(&l, &lag, formula).unwrap().polys(), l.polys());
        }

        let nabla = Family::BackwardDifference.scheme(&f, 6).unwrap();
        let abel = Family::Abel(int(1)).scheme(&f, 6).unwrap();
        let r = basic_sequence(&nabla, 5).unwrap();
        let a = transfer(&r, &abel, TransferFormula::Pincherle).unwrap();
        let b = transfer(&r, &abel, TransferFormula::Xhat).unwrap();
        assert_eq!(a.polys(), b.polys());
        assert_eq!(a.polys(), basic_sequence(&abel, 5).unwrap().polys());
    }

    #[test]
    fn sheffer_examples() {
        let f = fib();
        let a = ratio(3, 4);
        let h = Family::Hermite(a.clone()).sequence(&f, 2).unwrap();
        assert_eq!(h[2], Polynomial::new(vec![-&a / int(2), int(0), int(1)]));
        let b = Family::Bernoulli.sequence(&f, 3).unwrap();
        assert_eq!(b[3], Polynomial::new(vec![ratio(1, 3), int(1), int(2), int(1)]));
        let l = Family::LaguerreAlpha(int(1)).sequence(&f, 2).unwrap();
        assert_eq!(l[2], poly(&[3, -3, 1]));
    }

    #[test]
    fn recurrence_examples() {
        let f = fib();
        let h = Family::Hermite(int(1)).scheme(&f, 3).unwrap();
        let s = sheffer_via_recurrence(&h, 2).unwrap();
        assert_eq!(s[1], Polynomial::x());
        assert_eq!(s[2], Polynomial::new(vec![ratio(-1, 2), int(0), int(1)]));

        let d = Family::Derivative.scheme(&f, 6).unwrap();
        let s = sheffer_via_recurrence(&d, 6).unwrap();
        assert!(s.iter().enumerate().all(|(n, p)| *p == Polynomial::monomial(int(1), n)));

        let b = Family::Bernoulli.scheme(&f, 10).unwrap();
        assert_eq!(
            sheffer_via_recurrence(&b, 9).unwrap(),
            sheffer_sequence(&b, 9).unwrap()
        );
    }

    #[test]
    fn closed_form_examples() {
        let f = fib();
        assert_eq!(
            closed_form(&f, &ClosedForm::LaguerreBasic, 5),
            poly(&[0, -30, 120, -90, 20, -1])
        );
        assert_eq!(
            closed_form(&f, &ClosedForm::Bernoulli, 4),
            Polynomial::new(vec![ratio(1, 5), int(1), int(3), int(3), int(1)])
        );
        assert_eq!(
            closed_form(&f, &ClosedForm::LaguerreAlpha(int(1)), 3),
            poly(&[8, -12, 8, -1])
        );
        assert_eq!(
            closed_form(&f, &ClosedForm::LaguerreAlpha(int(-1)), 4),
            closed_form(&f, &ClosedForm::LaguerreBasic, 4)
        );
    }

    #[test]
    fn hermite_closed_form_agrees_only_below_four() {
        let f = fib();
        let a = int(1);
        let op = Family::Hermite(a.clone()).sequence(&f, 4).unwrap();
        for n in 0..=3 {
            assert_eq!(closed_form(&f, &ClosedForm::Hermite(a.clone()), n), op[n]);
        }
        // S^{-1} = 1 - t²/2 + 0·t⁴ + ..., whereas exp_F{-t²/2} has t⁴ coefficient 1/4
        assert_eq!(op[4], poly(&[0, 0, -3, 0, 1]));
        assert_eq!(
            closed_form(&f, &ClosedForm::Hermite(a), 4),
            Polynomial::new(vec![ratio(3, 2), int(0), int(-3), int(0), int(1)])
        );
    }

    #[test]
    fn first_expansion_examples() {
        let f = fib();
        let fwd = Family::ForwardDifference.scheme(&f, 6).unwrap();
        let basis = basic_sequence(&fwd, 6).unwrap();
        let a = first_expansion(fwd.q(), &basis).unwrap();
        assert_eq!(a, vec![int(0), int(1), int(0), int(0), int(0), int(0), int(0)]);

        let d = Family::Derivative.scheme(&f, 6).unwrap();
        let mono = basic_sequence(&d, 6).unwrap();
        let y = ratio(-2, 3);
        let a = first_expansion(&crate::opalg::translation(&f, &y, 6), &mono).unwrap();
        let mut yk = int(1);
        for an in a {
            assert_eq!(an, yk);
            yk *= &y;
        }

        let a = first_expansion(&OperatorSeries::identity(&f, 6), &basis).unwrap();
        assert_eq!(a[0], int(1));
        assert!(a[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn first_expansion_reconstructs() {
        let f = fib();
        let abel = Family::Abel(ratio(3, 2)).scheme(&f, 7).unwrap();
        let basis = basic_sequence(&abel, 7).unwrap();
        let t = NamedOperator::BernoulliS.build(&f, 7).unwrap();
        let a = first_expansion(&t, &basis).unwrap();
        assert_eq!(expansion_series(&a, abel.q()), t);
    }

    #[test]
    fn zero_expansion_examples() {
        let f = fib();
        let b = Family::Bernoulli.scheme(&f, 8).unwrap();
        let rebuilt = sheffer_zero_expansion(&b, 8).unwrap();
        let sheffer = sheffer_sequence(&b, 8).unwrap();
        for k in 0..=8 {
            assert_eq!(sheffer[k].constant_term(), f.value_q(k + 1).recip());
        }
        assert_eq!(rebuilt, b.s().invert().unwrap());

        let d = Family::Derivative.scheme(&f, 5).unwrap();
        assert!(sheffer_zero_expansion(&d, 5).unwrap().is_identity());

        let h = Family::Hermite(int(2)).scheme(&f, 8).unwrap();
        let rebuilt = sheffer_zero_expansion(&h, 8).unwrap();
        assert!(rebuilt.coeffs().iter().skip(1).step_by(2).all(Zero::is_zero));
    }

    #[test]
    fn binomial_type_examples() {
        let f = fib();
        let mono = Family::Derivative.sequence(&f, 6).unwrap();
        assert!(check_binomial_type(&mono, &int(1)));
        let fwd = Family::ForwardDifference.sequence(&f, 6).unwrap();
        assert!(check_binomial_type(&fwd, &ratio(2, 3)));
        let shifted = PolySequence::new(
            (0..=4)
                .map(|n| &Polynomial::monomial(int(1), n) + &Polynomial::one())
                .collect(),
            mono.scheme().clone(),
            SequenceKind::Basic,
        );
        assert!(!check_binomial_type(&shifted, &int(1)));
    }

    #[test]
    fn sheffer_binomial_examples() {
        let f = fib();
        let b = Family::Bernoulli.sequence(&f, 6).unwrap();
        assert!(check_sheffer_binomial(&b, &int(1)).unwrap());
        assert!(check_sheffer_binomial(&b, &int(0)).unwrap());
        let h = Family::Hermite(int(2)).sequence(&f, 6).unwrap();
        assert!(check_sheffer_binomial(&h, &int(-1)).unwrap());
    }

    #[test]
    fn gf_examples() {
        let f = fib();
        for family in [Family::Derivative, Family::Abel(int(1)), Family::Bernoulli] {
            let scheme = family.scheme(&f, 6).unwrap();
            assert!(gf_check(&scheme, 6).unwrap(), "{family}");
        }
    }

    #[test]
    fn axioms_reject_broken_sequences() {
        let f = fib();
        let mut s = Family::ForwardDifference.sequence(&f, 4).unwrap();
        assert!(s.check_axioms().is_ok());
        s.polys[3] = &s.polys[3] + &Polynomial::x();
        assert!(matches!(s.check_axioms(), Err(Error::IdentityFailed(_))));
    }
}
