//! Exact computation of the independent domination polynomial `D_i(G, x)`.
//!
//! Independent dominating sets are exactly the maximal independent sets, so
//! the brute engine enumerates those on the explicit graph. The compressed
//! engine works on the class quotient: a chosen support `T` of classes must be
//! independent in the quotient and dominate every class outside it; a clique
//! class in `T` contributes one of its `size` vertices (`size·x`) and a null
//! class in `T` contributes all of its vertices (`x^size`).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{ClassGraph, ExplicitGraph};
use crate::poly::DomPolynomial;

pub const DEFAULT_BRUTE_CAP: usize = 30;
pub const DOMINATION_CAP: usize = 26;
pub const MAX_CLASSES: usize = 64;
/// Largest exponent the dense representation will allocate.
pub const MAX_DEGREE: u64 = 1 << 22;

/// Calls `visit` once per maximal independent set of `g`.
///
/// Bron–Kerbosch with Tomita pivoting on the complement graph.
pub fn for_each_maximal_independent_set<F: FnMut(&BitSet)>(g: &ExplicitGraph, mut visit: F) {
    let len = g.len();
    // Complement neighborhoods, self excluded.
    let others: Vec<BitSet> = (0..len)
        .map(|v| {
            let mut s = BitSet::full(len).difference(g.neighbors(v));
            s.remove(v);
            s
        })
        .collect();
    let mut current = BitSet::new(len);
    expand(
        &others,
        &mut current,
        BitSet::full(len),
        BitSet::new(len),
        &mut visit,
    );
}

fn expand<F: FnMut(&BitSet)>(
    others: &[BitSet],
    current: &mut BitSet,
    mut candidates: BitSet,
    mut excluded: BitSet,
    visit: &mut F,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            visit(current);
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .max_by_key(|&u| candidates.intersection_count(&others[u]))
        .expect("candidates nonempty");
    let branch: Vec<usize> = candidates.difference(&others[pivot]).iter().collect();
    for v in branch {
        current.insert(v);
        expand(
            others,
            current,
            candidates.intersection(&others[v]),
            excluded.intersection(&others[v]),
            visit,
        );
        current.remove(v);
        candidates.remove(v);
        excluded.insert(v);
    }
}

pub fn dipoly_bruteforce(g: &ExplicitGraph) -> Result<DomPolynomial> {
    dipoly_bruteforce_with_cap(g, DEFAULT_BRUTE_CAP)
}

pub fn dipoly_bruteforce_with_cap(g: &ExplicitGraph, cap: usize) -> Result<DomPolynomial> {
    if g.len() > cap {
        return Err(Error::SizeCap {
            what: "brute-force vertex count",
            size: g.len(),
            cap,
        });
    }
    if g.is_empty() {
        return Err(Error::EmptyGraph(g.n()));
    }
    let mut counts = vec![0u64; g.len() + 1];
    for_each_maximal_independent_set(g, |set| counts[set.count()] += 1);
    Ok(DomPolynomial::from_coeffs(
        counts.into_iter().map(BigUint::from).collect(),
    ))
}

struct SupportSearch<'a> {
    adj: Vec<u64>,
    cg: &'a ClassGraph,
    terms: BTreeMap<u64, BigUint>,
}

impl SupportSearch<'_> {
    /// Decide class `i` given the chosen set so far.
    fn walk(&mut self, i: usize, chosen: u64, blocked: u64, exponent: u64, coeff: &BigUint) {
        let t = self.adj.len();
        // Classes below `i` left out must already be dominated, or still have
        // an undecided, unblocked neighbor at index ≥ i.
        let open = if i >= 64 { 0 } else { !0u64 << i } & !blocked;
        for k in 0..i {
            let bit = 1u64 << k;
            if chosen & bit == 0 && self.adj[k] & chosen == 0 && self.adj[k] & open == 0 {
                return;
            }
        }
        if i == t {
            *self.terms.entry(exponent).or_default() += coeff;
            return;
        }
        let bit = 1u64 << i;
        if blocked & bit == 0 {
            let class = &self.cg.classes()[i];
            let (e, c) = if class.is_clique {
                (exponent + 1, coeff * BigUint::from(class.size))
            } else {
                (exponent + class.size, coeff.clone())
            };
            self.walk(i + 1, chosen | bit, blocked | self.adj[i], e, &c);
        }
        self.walk(i + 1, chosen, blocked, exponent, coeff);
    }
}

pub fn dipoly_compressed(cg: &ClassGraph) -> Result<DomPolynomial> {
    let t = cg.len();
    if t == 0 {
        return Err(Error::EmptyGraph(cg.n()));
    }
    if t > MAX_CLASSES {
        return Err(Error::SizeCap {
            what: "divisor class count",
            size: t,
            cap: MAX_CLASSES,
        });
    }
    let adj = (0..t)
        .map(|i| {
            (0..t)
                .filter(|&j| cg.adjacent(i, j))
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect();
    let mut search = SupportSearch {
        adj,
        cg,
        terms: BTreeMap::new(),
    };
    search.walk(0, 0, 0, 0, &BigUint::one());
    let degree = search.terms.keys().next_back().copied().unwrap_or(0);
    if degree > MAX_DEGREE {
        return Err(Error::SizeCap {
            what: "polynomial degree",
            size: usize::try_from(degree).unwrap_or(usize::MAX),
            cap: MAX_DEGREE as usize,
        });
    }
    Ok(DomPolynomial::from_terms(
        search.terms.into_iter().map(|(e, c)| (e as usize, c)),
    ))
}

/// `(γ_i, α)`: lowest and highest exponents present.
pub fn gamma_i_alpha(p: &DomPolynomial) -> Result<(usize, usize)> {
    match (p.low_degree(), p.degree()) {
        (Some(lo), Some(hi)) => Ok((lo, hi)),
        _ => Err(Error::ZeroPolynomial),
    }
}

/// Minimum dominating set size, independence not required.
pub fn domination_number(g: &ExplicitGraph) -> Result<usize> {
    let len = g.len();
    if len > DOMINATION_CAP {
        return Err(Error::SizeCap {
            what: "domination search vertex count",
            size: len,
            cap: DOMINATION_CAP,
        });
    }
    if len == 0 {
        return Err(Error::EmptyGraph(g.n()));
    }
    let full: u32 = if len == 32 { !0 } else { (1 << len) - 1 };
    let closed: Vec<u32> = (0..len)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, u| m | 1 << u))
        .collect();

    fn search(closed: &[u32], full: u32, start: usize, left: usize, covered: u32) -> bool {
        if covered == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..closed.len()).any(|v| search(closed, full, v + 1, left - 1, covered | closed[v]))
    }

    Ok((1..=len)
        .find(|&k| search(&closed, full, 0, k, 0))
        .expect("the whole vertex set dominates"))
}
