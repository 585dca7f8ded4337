//! Univariate polynomials over ℤ for exact real-root counting.
//!
//! Coefficients are ascending by exponent; the zero polynomial is empty.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> &BigInt {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn div_scalar(&self, d: &BigInt) -> IntPoly {
        IntPoly(self.0.iter().map(|c| c / d).collect())
    }

    /// Content removed and leading coefficient made positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Pseudo-remainder `lc(b)^{δ} · self mod b` with `δ = deg self − deg b + 1`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return IntPoly::default();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.lead();
        let mut r = self.0.clone();
        let mut steps = da - db + 1;
        while let Some(dr) = r.len().checked_sub(1).filter(|&d| d >= db) {
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= lb;
            }
            for (i, bc) in b.0.iter().enumerate() {
                r[dr - db + i] -= &lr * bc;
            }
            steps -= 1;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        // Steps skipped because the degree dropped by more than one.
        let scale = num_traits::pow(lb.clone(), steps);
        IntPoly::new(r.into_iter().map(|c| c * &scale).collect())
    }

    /// Exact quotient over ℤ; panics if `b` does not divide `self`.
    pub fn exact_div(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("division by zero polynomial");
        let Some(da) = self.degree().filter(|&d| d >= db) else {
            assert!(self.is_zero(), "inexact polynomial division");
            return IntPoly::default();
        };
        let lb = b.lead();
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let (qk, rem) = r[k + db].div_rem(lb);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (i, bc) in b.0.iter().enumerate() {
                r[k + i] -= &qk * bc;
            }
            q[k] = qk;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        IntPoly::new(q)
    }
}

/// Primitive gcd by the subresultant pseudo-remainder sequence.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.primitive(), b.primitive())
    } else {
        (b.primitive(), a.primitive())
    };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(&b);
        match r.degree() {
            None => return b.primitive(),
            Some(0) => return IntPoly::new(vec![BigInt::one()]),
            Some(_) => {}
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.div_scalar(&divisor);
        g = a.lead().clone();
        h = if delta == 0 {
            h
        } else {
            // h ← g^δ / h^{δ−1}, exact in the subresultant sequence
            num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1)
        };
    }
}

/// Squarefree part `pp(p) / gcd(p, p')`; same distinct roots, all simple.
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    let prim = p.primitive();
    let g = gcd(&prim, &prim.derivative());
    prim.exact_div(&g).primitive()
}

/// Sturm chain `p, p', −rem, …` with every remainder scaled by a positive
/// factor (pseudo-division by `|lc|` powers, then content removal), which
/// leaves all sign patterns intact.
pub fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let d = p.derivative();
    let c = d.content();
    let mut chain = vec![p.clone(), if d.is_zero() { d } else { d.div_scalar(&c) }];
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.is_zero() {
            chain.pop();
            break;
        }
        let mut r = a.pseudo_rem(b);
        let delta = a.degree().unwrap() - b.degree().unwrap() + 1;
        let flips = b.lead().sign() == Sign::Minus && delta % 2 == 1;
        // want −(positive multiple of rem(a, b))
        if !flips {
            r = IntPoly(r.0.into_iter().map(|c| -c).collect());
        }
        if r.is_zero() {
            break;
        }
        let c = r.content();
        chain.push(r.div_scalar(&c));
    }
    chain
}

pub fn sign_variations(chain: &[IntPoly], x: &BigInt) -> usize {
    let signs: Vec<Sign> = chain
        .iter()
        .map(|q| q.eval(x).sign())
        .filter(|&s| s != Sign::NoSign)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `1 + ⌈max |a_i| / |a_n|⌉`, strictly larger than every root modulus.
pub fn cauchy_bound(p: &IntPoly) -> BigInt {
    let lead = p.lead().abs();
    let max = p.0.iter().map(|c| c.abs()).max().unwrap_or_default();
    BigInt::one() + max.div_ceil(&lead)
}

/// Distinct real roots of a nonzero polynomial, counted with a Sturm chain on
/// its squarefree part.
pub fn count_distinct_real_roots(p: &IntPoly) -> usize {
    let sqf = squarefree_part(p);
    if sqf.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(&sqf);
    let b = cauchy_bound(&sqf);
    sign_variations(&chain, &-b.clone()) - sign_variations(&chain, &b)
}
