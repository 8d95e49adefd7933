//! The algebra of `∂_F`-shift-invariant operators.
//!
//! An operator `T = Σ_k c_k ∂_F^k` is stored by its indicator
//! `f(t) = Σ_k c_k t^k`, truncated at some order. Plain power-series
//! coefficients are stored (not the divided form `a_k = c_k ψ_k!`), so the
//! fibonomial convolution of indicators is literally the Cauchy product.
//! The divided view is available through [`OperatorSeries::divided`].
//!
//! Coefficients past `trunc` are unknown, not zero. Binary operations keep
//! the smaller truncation, and applying a series to a polynomial demands
//! `trunc >= deg p`, which makes every polynomial result exact because
//! `∂_F` is locally nilpotent.

use std::ops::{Add, Deref, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{int, Degree, Polynomial, Rational};
use crate::seqcore::PsiSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorSeries {
    coeffs: Vec<Rational>,
    seq: PsiSequence,
}

impl OperatorSeries {
    /// Series with the given coefficients; `trunc = coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty.
    pub fn new(seq: &PsiSequence, coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "an operator series needs at least one coefficient");
        OperatorSeries {
            coeffs,
            seq: seq.clone(),
        }
    }

    /// Builds from the divided coefficients `a_k`, i.e. `Σ a_k t^k / ψ_k!`.
    pub fn from_divided(seq: &PsiSequence, divided: &[Rational]) -> Self {
        let coeffs = divided
            .iter()
            .enumerate()
            .map(|(k, a)| a / seq.factorial_q(k))
            .collect();
        Self::new(seq, coeffs)
    }

    /// Pads `coeffs` with zeros up to `trunc`; the tail is known to be zero.
    pub fn from_poly_coeffs(seq: &PsiSequence, coeffs: &[Rational], trunc: usize) -> Self {
        let mut c: Vec<Rational> = coeffs.iter().take(trunc + 1).cloned().collect();
        c.resize(trunc + 1, Rational::zero());
        Self::new(seq, c)
    }

    pub fn zero(seq: &PsiSequence, trunc: usize) -> Self {
        Self::new(seq, vec![Rational::zero(); trunc + 1])
    }

    pub fn identity(seq: &PsiSequence, trunc: usize) -> Self {
        Self::monomial(seq, 0, Rational::one(), trunc)
    }

    pub fn constant(seq: &PsiSequence, c: Rational, trunc: usize) -> Self {
        Self::monomial(seq, 0, c, trunc)
    }

    /// The indicator `t` of `∂_F` itself.
    pub fn derivative(seq: &PsiSequence, trunc: usize) -> Self {
        Self::monomial(seq, 1, Rational::one(), trunc)
    }

    /// `c·t^k`; zero if `k > trunc`.
    pub fn monomial(seq: &PsiSequence, k: usize, c: Rational, trunc: usize) -> Self {
        let mut s = Self::zero(seq, trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn seq(&self) -> &PsiSequence {
        &self.seq
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`. Panics past the truncation order.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Divided form `a_k = c_k · ψ_k!`.
    pub fn divided(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * self.seq.factorial_q(k))
            .collect()
    }

    /// Drops everything above `order`. Panics if `order > trunc`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.trunc(), "cannot extend a truncated series");
        Self::new(&self.seq, self.coeffs[..=order].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `T1 ≠ 0`.
    pub fn is_invertible(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// `f(0) = 0` and `f'(0) ≠ 0`.
    pub fn is_delta(&self) -> bool {
        self.coeffs[0].is_zero() && self.coeffs.get(1).is_some_and(|c| !c.is_zero())
    }

    fn check_seq(&self, other: &Self) {
        assert!(
            self.seq == other.seq,
            "mixing operator series over different psi sequences ({:?} vs {:?})",
            self.seq.kind(),
            other.seq.kind()
        );
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.seq, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product in the algebra: the Cauchy product of indicators.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_seq(other);
        let n = self.trunc().min(other.trunc());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(&self.seq, out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.trunc();
        let inv0 = a0.recip();
        let mut r = Vec::with_capacity(n + 1);
        r.push(inv0.clone());
        for k in 1..=n {
            let s = (1..=k).fold(Rational::zero(), |acc, i| acc + &self.coeffs[i] * &r[k - i]);
            r.push(-s * &inv0);
        }
        Ok(Self::new(&self.seq, r))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(&self.seq, self.trunc());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents go through [`invert`](Self::invert).
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.invert()?.pow(e.unsigned_abs() as u32))
        }
    }

    /// `f^β` for rational `β`, defined when the constant term is 1.
    pub fn pow_rational(&self, beta: &Rational) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::domain(format!(
                "rational power needs constant term 1, found {}",
                self.coeffs[0]
            )));
        }
        if beta.is_integer() {
            let e: i64 = beta.to_integer().try_into().map_err(|_| {
                Error::domain(format!("exponent {beta} out of range"))
            })?;
            return self.powi(e);
        }
        // f' a = β a' f, solved order by order.
        let n = self.trunc();
        let beta1 = beta + Rational::one();
        let mut f = Vec::with_capacity(n + 1);
        f.push(Rational::one());
        for k in 1..=n {
            let kq = int(k as i64);
            let s = (1..=k).fold(Rational::zero(), |acc, i| {
                acc + (&beta1 * int(i as i64) - &kq) * &self.coeffs[i] * &f[k - i]
            });
            f.push(s / kq);
        }
        Ok(Self::new(&self.seq, f))
    }

    /// Graves–Pincherle derivative: the termwise derivative of the indicator.
    pub fn pincherle(&self) -> Self {
        if self.trunc() == 0 {
            return Self::zero(&self.seq, 0);
        }
        Self::new(
            &self.seq,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// `f(t)/t` for `f(0) = 0`; the `P` in `Q = ∂_F P`. Loses one order.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::nonzero_constant("shift_down", &self.coeffs[0]));
        }
        if self.trunc() == 0 {
            return Err(Error::Truncation {
                needed: 1,
                available: 0,
            });
        }
        Ok(Self::new(&self.seq, self.coeffs[1..].to_vec()))
    }

    /// `t·f(t)`; gains one known order.
    pub fn shift_up(&self) -> Self {
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(Rational::zero());
        c.extend(self.coeffs.iter().cloned());
        Self::new(&self.seq, c)
    }

    /// `f(g(t))` by Horner's scheme; `g` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_seq(inner);
        if !inner.coeffs[0].is_zero() {
            return Err(Error::nonzero_constant("compose (inner series)", &inner.coeffs[0]));
        }
        let n = self.trunc().min(inner.trunc());
        let g = inner.truncate(n);
        let mut acc = Self::constant(&self.seq, self.coeffs[n].clone(), n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `exp_F(u) = Σ_m u^m / ψ_m!`; `u` must have zero constant term.
    pub fn exp_f(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::nonzero_constant("exp_f", &self.coeffs[0]));
        }
        let n = self.trunc();
        let mut acc = Self::identity(&self.seq, n);
        let mut power = Self::identity(&self.seq, n);
        for m in 1..=n {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            acc = &acc + &power.scale(&self.seq.factorial_q(m).recip());
        }
        Ok(acc)
    }

    /// `Σ_k c_k ∂_F^k p`, exact when `trunc >= deg p`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let deg = match p.degree() {
            Degree::NegInfinity => return Ok(Polynomial::zero()),
            Degree::Finite(d) => d,
        };
        if self.trunc() < deg {
            return Err(Error::Truncation {
                needed: deg,
                available: self.trunc(),
            });
        }
        // ∂_F^k x^n = (ψ_n!/ψ_{n-k}!) x^{n-k}
        let pc = p.coeffs();
        let out = (0..=deg)
            .map(|j| {
                (j..=deg).fold(Rational::zero(), |acc, n| {
                    let c = &self.coeffs[n - j];
                    if c.is_zero() || pc[n].is_zero() {
                        acc
                    } else {
                        acc + c * &pc[n] * self.seq.falling_factorial_q(n, n - j)
                    }
                })
            })
            .collect();
        Ok(Polynomial::new(out))
    }
}

impl Add for &OperatorSeries {
    type Output = OperatorSeries;
    fn add(self, rhs: &OperatorSeries) -> OperatorSeries {
        self.check_seq(rhs);
        let n = self.trunc().min(rhs.trunc());
        OperatorSeries::new(
            &self.seq,
            (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        )
    }
}

impl Sub for &OperatorSeries {
    type Output = OperatorSeries;
    fn sub(self, rhs: &OperatorSeries) -> OperatorSeries {
        self.check_seq(rhs);
        let n = self.trunc().min(rhs.trunc());
        OperatorSeries::new(
            &self.seq,
            (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        )
    }
}

impl Mul for &OperatorSeries {
    type Output = OperatorSeries;
    fn mul(self, rhs: &OperatorSeries) -> OperatorSeries {
        OperatorSeries::mul(self, rhs)
    }
}

impl Neg for &OperatorSeries {
    type Output = OperatorSeries;
    fn neg(self) -> OperatorSeries {
        OperatorSeries::new(&self.seq, self.coeffs.iter().map(|c| -c).collect())
    }
}

/// The translation operator `E^y(∂_F) = exp_F{y ∂_F}` as a series.
pub fn translation(seq: &PsiSequence, y: &Rational, trunc: usize) -> OperatorSeries {
    let mut yk = Rational::one();
    let mut coeffs = Vec::with_capacity(trunc + 1);
    for k in 0..=trunc {
        coeffs.push(&yk / seq.factorial_q(k));
        yk *= y;
    }
    OperatorSeries::new(seq, coeffs)
}

/// `p(x +_F y) = E^y(∂_F) p(x)`. This is not evaluation at `x + y`.
pub fn translate(seq: &PsiSequence, p: &Polynomial, y: &Rational) -> Polynomial {
    let deg = p.degree().finite().unwrap_or(0);
    translation(seq, y, deg)
        .apply(p)
        .expect("translation series is built to the polynomial's degree")
}

/// An operator series satisfying the delta criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSeries(OperatorSeries);

impl DeltaSeries {
    pub fn new(series: OperatorSeries) -> Result<Self> {
        if series.is_delta() {
            Ok(DeltaSeries(series))
        } else {
            Err(Error::domain(format!(
                "not a delta series: constant term {}, linear term {}",
                series.coeffs[0],
                series
                    .coeffs
                    .get(1)
                    .map(ToString::to_string)
                    .unwrap_or_else(|| "unknown".into())
            )))
        }
    }

    pub fn as_series(&self) -> &OperatorSeries {
        &self.0
    }

    pub fn into_series(self) -> OperatorSeries {
        self.0
    }

    /// `P` with `Q = ∂_F P`; always invertible.
    pub fn factor(&self) -> OperatorSeries {
        self.0.shift_down().expect("delta series has zero constant term and trunc >= 1")
    }

    /// Formal compositional inverse `r` with `q(r(t)) = t` to `trunc`,
    /// by Lagrange inversion: `[t^k] r = (1/k) [t^{k-1}] (t/q(t))^k`.
    pub fn comp_inverse(&self) -> DeltaSeries {
        let n = self.0.trunc();
        let seq = self.0.seq();
        let phi = self
            .factor()
            .invert()
            .expect("delta series has nonzero linear term");
        let mut coeffs = vec![Rational::zero(); n + 1];
        let mut power = OperatorSeries::identity(seq, phi.trunc());
        for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
            power = power.mul(&phi);
            *slot = power.coeff(k - 1) / int(k as i64);
        }
        DeltaSeries(OperatorSeries::new(seq, coeffs))
    }
}

impl Deref for DeltaSeries {
    type Target = OperatorSeries;
    fn deref(&self) -> &OperatorSeries {
        &self.0
    }
}

impl TryFrom<OperatorSeries> for DeltaSeries {
    type Error = Error;
    fn try_from(s: OperatorSeries) -> Result<Self> {
        DeltaSeries::new(s)
    }
}

/// The operators used throughout the examples of the calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedOperator {
    /// `∂_F`, indicator `t`.
    Derivative,
    /// `Δ_F = E^1 - I`.
    ForwardDifference,
    /// `∇_F = I - E^{-1}`.
    BackwardDifference,
    /// `∂_F E^a`, indicator `Σ a^k t^{k+1}/ψ_k!`.
    Abel(Rational),
    /// `∂_F/(∂_F - I)`, indicator `t/(t-1) = -Σ t^{k+1}`.
    Laguerre,
    /// `E^y`.
    Translation(Rational),
    /// `exp_F{a t²/2}`.
    HermiteS(Rational),
    /// `(1 - t)^{-α-1}`.
    LaguerreS(Rational),
    /// `((exp_F{t} - 1)/t)^{-1}`.
    BernoulliS,
}

impl NamedOperator {
    pub fn build(&self, seq: &PsiSequence, trunc: usize) -> Result<OperatorSeries> {
        let t = OperatorSeries::derivative(seq, trunc);
        let one = OperatorSeries::identity(seq, trunc);
        Ok(match self {
            NamedOperator::Derivative => t,
            NamedOperator::ForwardDifference => &translation(seq, &int(1), trunc) - &one,
            NamedOperator::BackwardDifference => &one - &translation(seq, &int(-1), trunc),
            NamedOperator::Abel(a) => translation(seq, a, trunc).shift_up().truncate(trunc),
            NamedOperator::Laguerre => t.mul(&(&t - &one).invert()?),
            NamedOperator::Translation(y) => translation(seq, y, trunc),
            NamedOperator::HermiteS(a) => {
                let half_a = a / int(2);
                OperatorSeries::monomial(seq, 2, half_a, trunc).exp_f()?
            }
            NamedOperator::LaguerreS(alpha) => {
                let one_minus_t = &one - &t;
                let e = -(alpha + Rational::one());
                one_minus_t.pow_rational(&e)?
            }
            NamedOperator::BernoulliS => {
                let diff = &translation(seq, &int(1), trunc + 1)
                    - &OperatorSeries::identity(seq, trunc + 1);
                diff.shift_down()?.invert()?
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn fib() -> PsiSequence {
        PsiSequence::fibonacci()
    }

    fn series(coeffs: &[Rational]) -> OperatorSeries {
        OperatorSeries::new(&fib(), coeffs.to_vec())
    }

    fn ints(c: &[i64]) -> OperatorSeries {
        series(&c.iter().map(|&v| int(v)).collect::<Vec<_>>())
    }

    #[test]
    fn apply_examples() {
        let f = fib();
        let x3 = Polynomial::monomial(int(1), 3);
        assert_eq!(OperatorSeries::identity(&f, 5).apply(&x3).unwrap(), x3);
        let x4 = Polynomial::monomial(int(1), 4);
        assert_eq!(
            OperatorSeries::derivative(&f, 4).apply(&x4).unwrap(),
            Polynomial::monomial(int(3), 3)
        );
        let x2 = Polynomial::monomial(int(1), 2);
        assert_eq!(
            translation(&f, &int(1), 2).apply(&x2).unwrap(),
            Polynomial::from_ints(&[1, 1, 1])
        );
    }

    #[test]
    fn apply_demands_enough_terms() {
        let f = fib();
        let x4 = Polynomial::monomial(int(1), 4);
        assert_eq!(
            OperatorSeries::identity(&f, 3).apply(&x4),
            Err(Error::Truncation {
                needed: 4,
                available: 3
            })
        );
    }

    #[test]
    fn mul_examples() {
        let f = fib();
        let t = OperatorSeries::derivative(&f, 6);
        assert_eq!(t.mul(&t), OperatorSeries::monomial(&f, 2, int(1), 6));
        // divided form: c_2 = binom(2,1)_F · 1 · 1 = 1
        assert_eq!(t.mul(&t).divided()[2], int(1));
        let u = ints(&[3, 1, 4, 1, 5]);
        assert_eq!(u.mul(&OperatorSeries::identity(&f, 4)), u);
        let geom = ints(&[1, 1, 1, 1, 1, 1]);
        let one_minus_t = ints(&[1, -1, 0, 0, 0, 0]);
        assert!(one_minus_t.mul(&geom).is_identity());
    }

    #[test]
    fn mul_keeps_smaller_truncation() {
        let a = ints(&[1, 1, 1, 1]);
        let b = ints(&[1, 2]);
        assert_eq!(a.mul(&b).trunc(), 1);
    }

    #[test]
    fn invert_examples() {
        let f = fib();
        assert!(OperatorSeries::identity(&f, 5).invert().unwrap().is_identity());
        assert_eq!(
            ints(&[1, -1, 0, 0, 0]).invert().unwrap(),
            ints(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            OperatorSeries::derivative(&f, 4).invert(),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn pincherle_examples() {
        let f = fib();
        let t = OperatorSeries::derivative(&f, 6);
        assert!(t.pincherle().is_identity());
        for n in 1..=6u32 {
            let d = t.pow(n).pincherle();
            assert_eq!(d, OperatorSeries::monomial(&f, n as usize - 1, int(n as i64), 5));
        }
        assert!(OperatorSeries::constant(&f, int(7), 4).pincherle().is_zero());
        assert_eq!(t.pincherle().trunc(), 5);
    }

    #[test]
    fn comp_inverse_examples() {
        let f = fib();
        let t = DeltaSeries::new(OperatorSeries::derivative(&f, 6)).unwrap();
        assert_eq!(t.comp_inverse(), t);
        let q = DeltaSeries::new(ints(&[0, 1, 1, 0, 0, 0])).unwrap();
        assert_eq!(q.comp_inverse().coeffs(), ints(&[0, 1, -1, 2, -5, 14]).coeffs());
        let abel = DeltaSeries::new(NamedOperator::Abel(int(1)).build(&f, 8).unwrap()).unwrap();
        let back = abel.compose(&abel.comp_inverse()).unwrap();
        assert_eq!(back, OperatorSeries::derivative(&f, 8));
    }

    #[test]
    fn compose_examples() {
        let f = fib();
        let g = ints(&[2, 7, 1, 8, 2]);
        assert_eq!(g.compose(&OperatorSeries::derivative(&f, 4)).unwrap(), g);
        let one_plus_t = ints(&[1, 1, 0, 0, 0]);
        let t2 = ints(&[0, 0, 1, 0, 0]);
        assert_eq!(one_plus_t.compose(&t2).unwrap(), ints(&[1, 0, 1, 0, 0]));
        assert!(matches!(g.compose(&g), Err(Error::Domain(_))));
    }

    #[test]
    fn compose_exp_with_comp_inverse() {
        // Oracle: expand exp_F(r) = Σ_m r^m/F_m! by explicit powers.
        let f = fib();
        let q = DeltaSeries::new(ints(&[0, 1, 1, 0, 0, 0, 0])).unwrap();
        let r = q.comp_inverse();
        let expf = translation(&f, &int(1), 6);
        let lhs = expf.compose(&r).unwrap();
        let mut rhs = OperatorSeries::zero(&f, 6);
        for m in 0..=6u32 {
            rhs = &rhs + &r.pow(m).scale(&f.factorial_q(m as usize).recip());
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_f_examples() {
        let f = fib();
        assert!(OperatorSeries::zero(&f, 5).exp_f().unwrap().is_identity());
        let y = ratio(2, 3);
        let e = OperatorSeries::monomial(&f, 1, y.clone(), 4).exp_f().unwrap();
        let facts = [1, 1, 1, 2, 6];
        for (k, c) in e.coeffs().iter().enumerate() {
            let mut yk = Rational::one();
            for _ in 0..k {
                yk *= &y;
            }
            assert_eq!(*c, yk / int(facts[k]));
        }
        let a = int(3);
        let h = NamedOperator::HermiteS(a.clone()).build(&f, 6).unwrap();
        let half = &a / int(2);
        assert_eq!(
            h.coeffs(),
            &[
                int(1),
                int(0),
                half.clone(),
                int(0),
                &half * &half,
                int(0),
                &half * &half * &half / int(2)
            ]
        );
        assert!(matches!(ints(&[1, 1]).exp_f(), Err(Error::Domain(_))));
    }

    #[test]
    fn translate_examples() {
        let f = fib();
        let y = ratio(5, 7);
        let x2 = Polynomial::monomial(int(1), 2);
        let expected = Polynomial::new(vec![&y * &y, y.clone(), int(1)]);
        assert_eq!(translate(&f, &x2, &y), expected);
        let p = Polynomial::from_ints(&[4, 0, -3, 2]);
        assert_eq!(translate(&f, &p, &int(0)), p);
        assert_eq!(translate(&f, &Polynomial::x(), &int(1)), Polynomial::from_ints(&[1, 1]));
    }

    #[test]
    fn delta_criterion() {
        let f = fib();
        assert!(OperatorSeries::derivative(&f, 4).is_delta());
        let fwd = NamedOperator::ForwardDifference.build(&f, 4).unwrap();
        assert!(fwd.is_delta());
        assert_eq!(fwd.coeffs(), &[int(0), int(1), int(1), ratio(1, 2), ratio(1, 6)]);
        assert!(!translation(&f, &int(1), 4).is_delta());
        assert!(translation(&f, &int(1), 4).is_invertible());
    }

    #[test]
    fn laguerre_sign_convention() {
        let f = fib();
        let l = NamedOperator::Laguerre.build(&f, 3).unwrap();
        assert_eq!(l, ints(&[0, -1, -1, -1]));
    }

    #[test]
    fn bernoulli_inverse_indicator() {
        let f = fib();
        let b = NamedOperator::BernoulliS.build(&f, 3).unwrap();
        assert_eq!(b.trunc(), 3);
        assert_eq!(
            b.invert().unwrap().coeffs(),
            &[int(1), int(1), ratio(1, 2), ratio(1, 6)]
        );
    }

    #[test]
    fn laguerre_s_powers() {
        let f = fib();
        // α = 1: (1-t)^{-2} = Σ (k+1) t^k
        let s = NamedOperator::LaguerreS(int(1)).build(&f, 4).unwrap();
        assert_eq!(s, ints(&[1, 2, 3, 4, 5]));
        // α = -1: identity
        assert!(NamedOperator::LaguerreS(int(-1)).build(&f, 4).unwrap().is_identity());
        // α = -1/2: (1-t)^{-1/2}, squared gives (1-t)^{-1}
        let h = NamedOperator::LaguerreS(ratio(-1, 2)).build(&f, 6).unwrap();
        assert_eq!(h.mul(&h), ints(&[1, 1, 1, 1, 1, 1, 1]));
    }
}
