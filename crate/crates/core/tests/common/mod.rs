//! Test-only oracles built straight from the definitions, sharing no code
//! with the library's graph construction or counting engines.

#![allow(dead_code)]

use num_integer::Integer;

/// Γ(ℤ_n) by the O(V²) scan `u·v ≡ 0 (mod n)`.
pub struct DefGraph {
    pub n: u64,
    pub vertices: Vec<u64>,
    pub adj: Vec<Vec<bool>>,
}

pub fn definition_graph(n: u64) -> DefGraph {
    let vertices: Vec<u64> = (1..n).filter(|u| u.gcd(&n) > 1).collect();
    let adj = vertices
        .iter()
        .map(|&u| {
            vertices
                .iter()
                .map(|&v| u != v && (u * v) % n == 0)
                .collect()
        })
        .collect();
    DefGraph { n, vertices, adj }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn composites(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo.max(4)..=hi).filter(|&n| !is_prime(n))
}

/// Zero-divisor count `n − φ(n) − 1` by direct gcd counting.
pub fn vertex_count(n: u64) -> usize {
    (1..n).filter(|u| u.gcd(&n) > 1).count()
}

impl DefGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    fn masks(&self) -> Vec<u32> {
        assert!(self.len() <= 26);
        self.adj
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &a)| a)
                    .fold(0u32, |m, (j, _)| m | 1 << j)
            })
            .collect()
    }

    /// Every vertex subset that is independent and dominating, as bit masks.
    pub fn independent_dominating_subsets(&self) -> Vec<u32> {
        let len = self.len();
        assert!(len <= 20, "2^V scan limited to 20 vertices");
        let nb = self.masks();
        let full = (1u32 << len) - 1;
        (1..=full)
            .filter(|&s| {
                let mut covered = s;
                for (v, &nv) in nb.iter().enumerate() {
                    if s >> v & 1 == 1 {
                        if nv & s != 0 {
                            return false;
                        }
                        covered |= nv;
                    }
                }
                covered == full
            })
            .collect()
    }

    /// Coefficients by size from the 2^V scan.
    pub fn subset_scan_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.len() + 1];
        for s in self.independent_dominating_subsets() {
            counts[s.count_ones() as usize] += 1;
        }
        trim(counts)
    }

    /// Maximal independent sets by include/exclude branching in vertex
    /// order; an excluded vertex must end with a chosen neighbor.
    pub fn maximal_independent_sets(&self) -> Vec<Vec<usize>> {
        let len = self.len();
        let mut out = Vec::new();
        let mut state = vec![0u8; len]; // 0 undecided, 1 in, 2 out
        self.branch(0, &mut state, &mut out);
        out
    }

    fn branch(&self, v: usize, state: &mut Vec<u8>, out: &mut Vec<Vec<usize>>) {
        let len = self.len();
        // excluded vertices need an in-neighbor, now or later
        for u in 0..v {
            if state[u] == 2
                && !(0..len).any(|w| {
                    self.adj[u][w] && (state[w] == 1 || (w >= v && self.can_join(w, state)))
                })
            {
                return;
            }
        }
        if v == len {
            out.push((0..len).filter(|&u| state[u] == 1).collect());
            return;
        }
        if self.can_join(v, state) {
            state[v] = 1;
            self.branch(v + 1, state, out);
        }
        state[v] = 2;
        self.branch(v + 1, state, out);
        state[v] = 0;
    }

    fn can_join(&self, v: usize, state: &[u8]) -> bool {
        state[v] != 2 && !(0..self.len()).any(|w| state[w] == 1 && self.adj[v][w])
    }

    /// Coefficients by size from the branching enumerator.
    pub fn mis_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.len() + 1];
        for s in self.maximal_independent_sets() {
            counts[s.len()] += 1;
        }
        trim(counts)
    }

    pub fn domination_number(&self) -> usize {
        let nb = self.masks();
        let len = self.len();
        let full = (1u32 << len) - 1;
        (1u32..=full)
            .filter(|&s| {
                let covered = (0..len)
                    .filter(|&v| s >> v & 1 == 1)
                    .fold(s, |m, v| m | nb[v]);
                covered == full
            })
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn to_u64s(p: &zdgpoly::DomPolynomial) -> Vec<u64> {
    p.coeffs()
        .iter()
        .map(|c| u64::try_from(c).unwrap())
        .collect()
}
