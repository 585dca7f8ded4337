//! Integer services for the ring ℤ_n: factorization, totients, divisors and
//! the family classification that selects a closed form.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_N: u64 = 1_000_000_000_000;
const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization `n = Π p_i^{k_i}` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// φ(n) from the product formula.
    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, k)| (p - 1) * p.pow(k - 1))
            .product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(p, k)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if k == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{k}")?;
            }
        }
        Ok(())
    }
}

/// The family of `n` that owns a closed-form polynomial.
///
/// Overlapping shapes resolve in the order
/// `EmptyGraph > PrimeSquared > TwoP > PQ > PSquaredQ > PQR > PrimePower* > General`,
/// so `p^2` is never `PrimePowerEven(1)` and `2q` is never `PQ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyClass {
    EmptyGraph,
    PrimeSquared {
        p: u64,
    },
    TwoP {
        p: u64,
    },
    /// `p < q`.
    PQ {
        p: u64,
        q: u64,
    },
    /// `n = p^2 q` with `p ≠ q`, in either order of magnitude.
    PSquaredQ {
        p: u64,
        q: u64,
    },
    /// `p < q < r`.
    PQR {
        p: u64,
        q: u64,
        r: u64,
    },
    /// `n = p^{2m}`, `m ≥ 2`.
    PrimePowerEven {
        p: u64,
        m: u32,
    },
    /// `n = p^{2m+1}`, `m ≥ 1`.
    PrimePowerOdd {
        p: u64,
        m: u32,
    },
    General,
}

impl FamilyClass {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyClass::EmptyGraph => "EmptyGraph",
            FamilyClass::PrimeSquared { .. } => "PrimeSquared",
            FamilyClass::TwoP { .. } => "TwoP",
            FamilyClass::PQ { .. } => "PQ",
            FamilyClass::PSquaredQ { .. } => "PSquaredQ",
            FamilyClass::PQR { .. } => "PQR",
            FamilyClass::PrimePowerEven { .. } => "PrimePowerEven",
            FamilyClass::PrimePowerOdd { .. } => "PrimePowerOdd",
            FamilyClass::General => "General",
        }
    }

    pub fn has_closed_form(&self) -> bool {
        !matches!(self, FamilyClass::EmptyGraph | FamilyClass::General)
    }
}

impl fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyClass::PrimePowerEven { m, .. } | FamilyClass::PrimePowerOdd { m, .. } => {
                write!(f, "{}(m={m})", self.tag())
            }
            _ => f.write_str(self.tag()),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if !(2..=MAX_N).contains(&n) {
        return Err(Error::Range {
            what: "n",
            value: n,
            range: "2..=10^12",
        });
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut k = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                k += 1;
            }
            factors.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        // With n ≤ 10^12 and every factor below 10^6 removed, the cofactor is prime.
        debug_assert!(is_prime(rest));
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// Euler's totient; `euler_phi(1) == 1` and `euler_phi(0) == 0`.
pub fn euler_phi(n: u64) -> u64 {
    match n {
        0 => 0,
        1 => 1,
        _ => factorize(n)
            .map(|f| f.phi())
            .unwrap_or_else(|_| phi_slow(n)),
    }
}

fn phi_slow(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// All divisors of `n` in ascending order.
pub fn divisors(f: &Factorization) -> Vec<u64> {
    let mut divs = vec![1u64];
    for &(p, k) in &f.factors {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..k {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Divisors `d` with `1 < d < n`, ascending. Empty iff `n` is prime.
pub fn proper_divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut divs = divisors(&f);
    divs.retain(|&d| d != 1 && d != n);
    Ok(divs)
}

pub fn classify_family(f: &Factorization) -> FamilyClass {
    match *f.factors() {
        [(_, 1)] => FamilyClass::EmptyGraph,
        [(p, 2)] => FamilyClass::PrimeSquared { p },
        [(2, 1), (p, 1)] => FamilyClass::TwoP { p },
        [(p, 1), (q, 1)] => FamilyClass::PQ { p, q },
        [(p, 2), (q, 1)] | [(q, 1), (p, 2)] => FamilyClass::PSquaredQ { p, q },
        [(p, 1), (q, 1), (r, 1)] => FamilyClass::PQR { p, q, r },
        [(p, k)] if k % 2 == 0 => FamilyClass::PrimePowerEven { p, m: k / 2 },
        [(p, k)] => FamilyClass::PrimePowerOdd { p, m: (k - 1) / 2 },
        _ => FamilyClass::General,
    }
}
