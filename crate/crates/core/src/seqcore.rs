//! ψ-sequences, F-factorials and fibonomial coefficients.
//!
//! Every value is an exact [`BigInt`]. The memo tables behind a
//! [`PsiSequence`] grow on demand and are shared by all clones of the
//! sequence (and by every sequence of the same kind), guarded by a
//! read-write lock so concurrent readers never observe a half-extended
//! table.

use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Rational;

/// Which coefficient sequence drives the calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiKind {
    /// `F_0 = 0, F_1 = 1, F_{n+2} = F_{n+1} + F_n`.
    Fibonacci,
    /// `ψ_n = n`; reduces everything to the classical finite operator calculus.
    Natural,
}

impl PsiKind {
    pub fn name(self) -> &'static str {
        match self {
            PsiKind::Fibonacci => "fibonacci",
            PsiKind::Natural => "natural",
        }
    }
}

impl fmt::Display for PsiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for PsiKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fibonacci" | "fib" | "f" => Ok(PsiKind::Fibonacci),
            "natural" | "nat" | "n" => Ok(PsiKind::Natural),
            other => Err(format!("unknown psi sequence `{other}`")),
        }
    }
}

#[derive(Debug)]
struct Memo {
    /// `values[n] = ψ_n`
    values: Vec<BigInt>,
    /// `factorials[n] = ψ_n!`
    factorials: Vec<BigInt>,
}

/// A handle on a memoized ψ-sequence. Cloning is cheap.
#[derive(Clone)]
pub struct PsiSequence {
    kind: PsiKind,
    memo: Arc<RwLock<Memo>>,
}

fn shared_memo(kind: PsiKind) -> Arc<RwLock<Memo>> {
    static FIB: OnceLock<Arc<RwLock<Memo>>> = OnceLock::new();
    static NAT: OnceLock<Arc<RwLock<Memo>>> = OnceLock::new();
    let cell = match kind {
        PsiKind::Fibonacci => &FIB,
        PsiKind::Natural => &NAT,
    };
    cell.get_or_init(|| {
        Arc::new(RwLock::new(Memo {
            values: vec![BigInt::zero(), BigInt::one()],
            factorials: vec![BigInt::one(), BigInt::one()],
        }))
    })
    .clone()
}

impl PsiSequence {
    pub fn new(kind: PsiKind) -> Self {
        PsiSequence {
            kind,
            memo: shared_memo(kind),
        }
    }

    pub fn fibonacci() -> Self {
        Self::new(PsiKind::Fibonacci)
    }

    pub fn natural() -> Self {
        Self::new(PsiKind::Natural)
    }

    pub fn kind(&self) -> PsiKind {
        self.kind
    }

    fn ensure(&self, n: usize) {
        {
            let memo = self.memo.read().expect("psi memo poisoned");
            if memo.values.len() > n {
                return;
            }
        }
        let mut memo = self.memo.write().expect("psi memo poisoned");
        while memo.values.len() <= n {
            let m = memo.values.len();
            let next = match self.kind {
                PsiKind::Fibonacci => &memo.values[m - 1] + &memo.values[m - 2],
                PsiKind::Natural => BigInt::from(m),
            };
            let fact = &memo.factorials[m - 1] * &next;
            memo.values.push(next);
            memo.factorials.push(fact);
        }
    }

    /// `ψ_n`.
    pub fn value(&self, n: usize) -> BigInt {
        self.ensure(n);
        self.memo.read().expect("psi memo poisoned").values[n].clone()
    }

    /// `ψ_n! = ψ_n ψ_{n-1} ⋯ ψ_1`, with `ψ_0! = 1`.
    pub fn factorial(&self, n: usize) -> BigInt {
        self.ensure(n);
        self.memo.read().expect("psi memo poisoned").factorials[n].clone()
    }

    /// `ψ_n ψ_{n-1} ⋯ ψ_{n-k+1}`; zero once the product reaches `ψ_0`.
    pub fn falling_factorial(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.ensure(n);
        let memo = self.memo.read().expect("psi memo poisoned");
        memo.values[n - k + 1..=n]
            .iter()
            .fold(BigInt::one(), |acc, v| acc * v)
    }

    /// The fibonomial coefficient `binom(n, k)_ψ`, zero for `k > n`.
    ///
    /// Computed as `falling_factorial(n, k) / factorial(k)`; the division is
    /// checked to be exact.
    pub fn fibonomial(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        let (q, r) = self.falling_factorial(n, k).div_rem(&self.factorial(k));
        assert!(
            r.is_zero(),
            "inexact fibonomial division at n = {n}, k = {k} ({} sequence)",
            self.kind
        );
        q
    }

    pub fn value_q(&self, n: usize) -> Rational {
        Rational::from_integer(self.value(n))
    }

    pub fn factorial_q(&self, n: usize) -> Rational {
        Rational::from_integer(self.factorial(n))
    }

    pub fn fibonomial_q(&self, n: usize, k: usize) -> Rational {
        Rational::from_integer(self.fibonomial(n, k))
    }

    /// `ψ_n! / ψ_{n-k}!` as a rational (zero for `k > n`).
    pub fn falling_factorial_q(&self, n: usize, k: usize) -> Rational {
        Rational::from_integer(self.falling_factorial(n, k))
    }
}

impl PartialEq for PsiSequence {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for PsiSequence {}

impl Default for PsiSequence {
    fn default() -> Self {
        Self::fibonacci()
    }
}

impl fmt::Debug for PsiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("PsiSequence").field(&self.kind).finish()
    }
}

/// Ordinary binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Generalized binomial `C(a, k) = a(a-1)⋯(a-k+1)/k!` for rational `a`.
pub fn binomial_q(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= a - Rational::from_integer(BigInt::from(i));
        acc /= Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}
