//! Zeros of a [`DomPolynomial`]: simultaneous Aberth–Ehrlich iteration for
//! the numeric picture, and an exact Sturm count of distinct real zeros.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::{count_distinct_real_roots, squarefree_part, IntPoly};
use crate::poly::DomPolynomial;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 1000;
/// Real parts closer than this sort by imaginary part.
const SORT_QUANTUM: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericRoot {
    pub re: f64,
    pub im: f64,
    /// `|q(z)| / max |q_i|` on the origin-deflated polynomial `q`.
    pub residual: f64,
}

impl NumericRoot {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericRoots {
    pub degree: usize,
    pub origin_multiplicity: usize,
    /// Nonzero roots sorted by (real, imaginary).
    pub roots: Vec<NumericRoot>,
    pub converged: bool,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RealRootCount {
    pub distinct_real: usize,
    pub distinct_nonreal: usize,
    pub squarefree_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootsReport {
    pub degree: usize,
    pub origin_multiplicity: usize,
    pub numeric_roots: Vec<NumericRoot>,
    pub converged: bool,
    pub iterations: usize,
    pub distinct_real_exact: usize,
    pub distinct_nonreal_exact: usize,
    pub squarefree_degree: usize,
}

fn check_degree(p: &DomPolynomial) -> Result<usize> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::Range {
            what: "polynomial degree",
            value: 0,
            range: ">= 1",
        }),
        Some(d) => Ok(d),
    }
}

/// Value and derivative by Horner.
fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::zero();
    let mut dv = Complex64::zero();
    for &a in c.iter().rev() {
        dv = dv * z + v;
        v = v * z + a;
    }
    (v, dv)
}

fn residual(c: &[f64], scale: f64, z: Complex64) -> f64 {
    horner(c, z).0.norm() / scale
}

/// All zeros of `p` numerically; the origin factor is removed exactly first.
pub fn find_roots(p: &DomPolynomial, tol: f64, max_iter: usize) -> Result<NumericRoots> {
    let degree = check_degree(p)?;
    let origin = p.low_degree().expect("nonzero");
    let c: Vec<f64> = p.coeffs()[origin..]
        .iter()
        .map(|a| a.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    let scale = c.iter().fold(0.0f64, |m, &a| m.max(a.abs()));
    let (mut z, converged, iterations) = aberth(&c, tol, max_iter);
    z.sort_by(|a, b| {
        let ka = ((a.re / SORT_QUANTUM).round(), a.im);
        let kb = ((b.re / SORT_QUANTUM).round(), b.im);
        ka.partial_cmp(&kb).unwrap_or(std::cmp::Ordering::Equal)
    });
    let roots = z
        .into_iter()
        .map(|z| NumericRoot {
            re: z.re,
            im: z.im,
            residual: residual(&c, scale, z),
        })
        .collect();
    Ok(NumericRoots {
        degree,
        origin_multiplicity: origin,
        roots,
        converged,
        iterations,
    })
}

/// Aberth–Ehrlich with in-place (Gauss–Seidel) updates.
///
/// Starting points lie on the circle of the Cauchy radius, rotated off the
/// real axis so conjugate roots are approached from distinct seeds.
fn aberth(c: &[f64], tol: f64, max_iter: usize) -> (Vec<Complex64>, bool, usize) {
    let d = c.len() - 1;
    if d == 0 {
        return (Vec::new(), true, 0);
    }
    let lead = c[d].abs();
    let radius = 1.0 + c[..d].iter().fold(0.0f64, |m, &a| m.max(a.abs() / lead));
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = std::f64::consts::TAU * (k as f64 + 0.25) / d as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    for iter in 1..=max_iter {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let (v, dv) = horner(c, z[k]);
            if v.is_zero() {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < tol {
            return (z, true, iter);
        }
    }
    (z, false, max_iter)
}

pub fn count_real_roots_exact(p: &DomPolynomial) -> Result<RealRootCount> {
    check_degree(p)?;
    let ip = IntPoly::new(p.to_signed());
    let squarefree_degree = squarefree_part(&ip).degree().unwrap_or(0);
    let distinct_real = count_distinct_real_roots(&ip);
    Ok(RealRootCount {
        distinct_real,
        distinct_nonreal: squarefree_degree - distinct_real,
        squarefree_degree,
    })
}

pub fn roots_report(p: &DomPolynomial, tol: f64, max_iter: usize) -> Result<RootsReport> {
    let numeric = find_roots(p, tol, max_iter)?;
    let exact = count_real_roots_exact(p)?;
    Ok(RootsReport {
        degree: numeric.degree,
        origin_multiplicity: numeric.origin_multiplicity,
        numeric_roots: numeric.roots,
        converged: numeric.converged,
        iterations: numeric.iterations,
        distinct_real_exact: exact.distinct_real,
        distinct_nonreal_exact: exact.distinct_nonreal,
        squarefree_degree: exact.squarefree_degree,
    })
}

impl RootsReport {
    pub fn max_residual(&self) -> f64 {
        self.numeric_roots
            .iter()
            .fold(0.0, |m, r| m.max(r.residual))
    }

    /// Largest distance from a non-real root to the nearest conjugate of
    /// another root.
    pub fn max_conjugate_mismatch(&self, real_tol: f64) -> f64 {
        let zs: Vec<Complex64> = self.numeric_roots.iter().map(NumericRoot::z).collect();
        zs.iter()
            .enumerate()
            .filter(|(_, z)| z.im.abs() >= real_tol)
            .map(|(i, z)| {
                zs.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, w)| (w.conj() - z).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    }

    /// Distinct real zeros seen numerically: the origin (if present) plus
    /// clusters of numeric roots with `|im| < real_tol`.
    pub fn numeric_distinct_real(&self, real_tol: f64) -> usize {
        let mut reals: Vec<f64> = self
            .numeric_roots
            .iter()
            .filter(|r| r.im.abs() < real_tol)
            .map(|r| r.re)
            .collect();
        reals.sort_by(f64::total_cmp);
        let clusters = reals.windows(2).filter(|w| w[1] - w[0] >= real_tol).count()
            + usize::from(!reals.is_empty());
        clusters + usize::from(self.origin_multiplicity > 0)
    }
}
