//! Zero-divisor graphs Γ(ℤ_n), 0 excluded.
//!
//! The vertex set splits into divisor classes `A_e = {u : gcd(u, n) = e}` for
//! the proper divisors `e` of `n`. Each class is a clique when `n | e²` and an
//! independent set otherwise; two distinct classes are completely joined when
//! `n | e_i e_j` and completely disjoint otherwise. [`ClassGraph`] stores that
//! quotient; [`ExplicitGraph`] materializes the vertices for oracle work.

use std::fmt::Write as _;

use num_integer::Integer;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::numtheory::{divisors, euler_phi, factorize};

pub const DEFAULT_VERTEX_CAP: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub divisor: u64,
    /// `φ(n / divisor)`
    pub size: u64,
    pub is_clique: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGraph {
    n: u64,
    classes: Vec<DivisorClass>,
    adjacency: Vec<Vec<bool>>,
}

fn divides_product(n: u64, a: u64, b: u64) -> bool {
    (a as u128 * b as u128).is_multiple_of(n as u128)
}

pub fn build_class_graph(n: u64) -> Result<ClassGraph> {
    let f = factorize(n)?;
    if f.is_prime() {
        return Err(Error::EmptyGraph(n));
    }
    let classes: Vec<DivisorClass> = divisors(&f)
        .into_iter()
        .filter(|&e| e != 1 && e != n)
        .map(|e| DivisorClass {
            divisor: e,
            size: euler_phi(n / e),
            is_clique: divides_product(n, e, e),
        })
        .collect();
    let adjacency = classes
        .iter()
        .enumerate()
        .map(|(i, a)| {
            classes
                .iter()
                .enumerate()
                .map(|(j, b)| i != j && divides_product(n, a.divisor, b.divisor))
                .collect()
        })
        .collect();
    Ok(ClassGraph {
        n,
        classes,
        adjacency,
    })
}

impl ClassGraph {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Ascending by divisor.
    pub fn classes(&self) -> &[DivisorClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn vertex_count(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn class_index(&self, divisor: u64) -> Option<usize> {
        self.classes
            .binary_search_by_key(&divisor, |c| c.divisor)
            .ok()
    }

    /// Class edges `(e_i, e_j)` with `e_i < e_j`.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.adjacency[i][j] {
                    out.push((self.classes[i].divisor, self.classes[j].divisor));
                }
            }
        }
        out
    }

    /// Graphviz text, one class edge per line.
    pub fn to_dot(&self) -> String {
        let mut s = format!("graph class_graph_{} {{\n", self.n);
        for c in &self.classes {
            let kind = if c.is_clique { "clique" } else { "null" };
            writeln!(
                s,
                "  {} [label=\"{}: {} {}\"];",
                c.divisor, c.divisor, c.size, kind
            )
            .unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(s, "  {a} -- {b};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Vertex-level Γ(ℤ_n) with residues in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph {
    n: u64,
    vertices: Vec<u64>,
    class_of: Vec<usize>,
    adjacency: Vec<BitSet>,
}

pub fn expand_graph(cg: &ClassGraph) -> Result<ExplicitGraph> {
    expand_graph_with_cap(cg, DEFAULT_VERTEX_CAP)
}

pub fn expand_graph_with_cap(cg: &ClassGraph, cap: usize) -> Result<ExplicitGraph> {
    let total = cg.vertex_count();
    if total > cap as u64 {
        return Err(Error::SizeCap {
            what: "explicit graph vertex count",
            size: usize::try_from(total).unwrap_or(usize::MAX),
            cap,
        });
    }
    let n = cg.n;
    let mut vertices = Vec::with_capacity(total as usize);
    let mut class_of = Vec::with_capacity(total as usize);
    for u in 1..n {
        let g = u.gcd(&n);
        if g > 1 {
            vertices.push(u);
            class_of.push(cg.class_index(g).expect("gcd is a proper divisor"));
        }
    }
    let len = vertices.len();
    let mut members: Vec<BitSet> = vec![BitSet::new(len); cg.len()];
    for (v, &c) in class_of.iter().enumerate() {
        members[c].insert(v);
    }
    // Each vertex's neighborhood is a union of whole classes.
    let class_neighborhoods: Vec<BitSet> = (0..cg.len())
        .map(|i| {
            let mut nb = BitSet::new(len);
            for (j, class_members) in members.iter().enumerate() {
                if cg.adjacent(i, j) || (i == j && cg.classes[i].is_clique) {
                    for v in class_members.iter() {
                        nb.insert(v);
                    }
                }
            }
            nb
        })
        .collect();
    let adjacency = class_of
        .iter()
        .enumerate()
        .map(|(v, &c)| {
            let mut nb = class_neighborhoods[c].clone();
            nb.remove(v);
            nb
        })
        .collect();
    Ok(ExplicitGraph {
        n,
        vertices,
        class_of,
        adjacency,
    })
}

impl ExplicitGraph {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Index into [`ClassGraph::classes`] of vertex `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn index_of(&self, residue: u64) -> Option<usize> {
        self.vertices.binary_search(&residue).ok()
    }

    /// Residue pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for (i, nb) in self.adjacency.iter().enumerate() {
            for j in nb.iter().filter(|&j| j > i) {
                out.push((self.vertices[i], self.vertices[j]));
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("graph zero_divisor_graph_{} {{\n", self.n);
        for &v in &self.vertices {
            writeln!(s, "  {v};").unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(s, "  {a} -- {b};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}
