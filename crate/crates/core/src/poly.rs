//! Dense polynomials with arbitrary-precision nonnegative coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// `Σ a_k x^k` stored densely by exponent, trailing zeros trimmed.
///
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DomPolynomial {
    coeffs: Vec<BigUint>,
}

impl DomPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Sums repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigUint>,
    {
        let mut coeffs: Vec<BigUint> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigUint::zero());
            }
            coeffs[e] += c.into();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn monomial(exp: usize, coeff: impl Into<BigUint>) -> Self {
        Self::from_terms([(exp, coeff)])
    }

    /// `a_0, …, a_b` including internal zeros.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> BigUint {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `p(1)`, the total number of counted sets.
    pub fn eval_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn to_signed(&self) -> Vec<BigInt> {
        self.coeffs.iter().cloned().map(BigInt::from).collect()
    }

    /// Sparse difference `self − other`.
    pub fn difference(&self, other: &DomPolynomial) -> SignedPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let terms = (0..len)
            .map(|e| {
                (
                    e,
                    BigInt::from(self.coeff(e)) - BigInt::from(other.coeff(e)),
                )
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        SignedPolynomial { terms }
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    exp: usize,
    coeff: &dyn fmt::Display,
    unit: bool,
) -> fmt::Result {
    match (exp, unit) {
        (0, _) => write!(f, "{coeff}"),
        (1, true) => f.write_str("x"),
        (1, false) => write!(f, "{coeff}x"),
        (_, true) => write!(f, "x^{exp}"),
        (_, false) => write!(f, "{coeff}x^{exp}"),
    }
}

/// Sparse text, ascending exponents: `x^10 + 4x^21 + x^28`.
impl fmt::Display for DomPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_term(f, e, c, c.is_one())?;
        }
        Ok(())
    }
}

/// Sparse polynomial with signed integer coefficients; used for audit differences.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedPolynomial {
    terms: BTreeMap<usize, BigInt>,
}

impl SignedPolynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn monomial(exp: usize, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }
}

/// Every term carries its sign: `+x^18`, `-2x^5 + x^7`, or `0`.
impl fmt::Display for SignedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { '-' } else { '+' };
            match (i, sign) {
                (0, _) => write!(f, "{sign}")?,
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            write_term(f, e, &mag, mag.is_one())?;
        }
        Ok(())
    }
}
