//! Shared fixtures for unit, integration, and acceptance tests: small named
//! hypergraphs and a seeded random generator. Not part of the public API.

use num::complex::Complex64;
use num::rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::WeightedHypergraph;
use crate::rational::{rat, rat_int};
use crate::tensor::HypergraphTensor;

/// Three vertices, edges `{v1,v2}` (weight 1) and `{v1,v2,v3}` (weight 2).
pub fn ex123() -> WeightedHypergraph {
    WeightedHypergraph::with_default_labels(
        3,
        vec![(vec![0, 1], rat_int(1)), (vec![0, 1, 2], rat_int(2))],
    )
    .unwrap()
}

/// The protein-protein interaction hypergraph: five vertices with edges
/// `{v1,v2,v3,v4}`, `{v1,v5}`, `{v3,v5}`, all unweighted.
pub fn protein() -> WeightedHypergraph {
    WeightedHypergraph::unweighted(5, vec![vec![0, 1, 2, 3], vec![0, 4], vec![2, 4]]).unwrap()
}

/// One unweighted edge on two vertices.
pub fn k2() -> WeightedHypergraph {
    WeightedHypergraph::unweighted(2, vec![vec![0, 1]]).unwrap()
}

/// The triangle graph.
pub fn k3() -> WeightedHypergraph {
    WeightedHypergraph::unweighted(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
}

/// The 4-cycle graph.
pub fn c4() -> WeightedHypergraph {
    WeightedHypergraph::unweighted(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])
        .unwrap()
}

/// The path graph on three vertices.
pub fn path3() -> WeightedHypergraph {
    WeightedHypergraph::unweighted(3, vec![vec![0, 1], vec![1, 2]]).unwrap()
}

/// The star graph K_{1,3}.
pub fn star3() -> WeightedHypergraph {
    WeightedHypergraph::unweighted(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap()
}

/// Two disjoint unweighted edges `{v1,v2}`, `{v3,v4}`.
pub fn two_disjoint_edges() -> WeightedHypergraph {
    WeightedHypergraph::unweighted(4, vec![vec![0, 1], vec![2, 3]]).unwrap()
}

/// One unweighted 4-edge on four vertices.
pub fn single_4edge() -> WeightedHypergraph {
    WeightedHypergraph::unweighted(4, vec![vec![0, 1, 2, 3]]).unwrap()
}

/// All `len`-tuples over `0..n`, in lexicographic order. Test oracle
/// helper for exhaustive entry enumeration.
pub fn all_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(n.pow(len as u32));
    let mut current = vec![0usize; len];
    loop {
        out.push(current.clone());
        let mut pos = 0;
        loop {
            if pos == len {
                return out;
            }
            if current[pos] + 1 < n {
                current[pos] += 1;
                break;
            }
            current[pos] = 0;
            pos += 1;
        }
    }
}

/// Contraction by exhaustive tuple enumeration: the independent oracle for
/// the inclusion-exclusion path. `(T x^{k-1})_i = sum over all (k-1)-tuples
/// of entry(i, tuple) * prod x`.
pub fn brute_force_contract(t: &HypergraphTensor, x: &[Complex64]) -> Vec<Complex64> {
    let n = t.dim();
    let k1 = t.order() - 1;
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for i in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for tuple in all_tuples(n, k1) {
            let mut index = Vec::with_capacity(k1 + 1);
            index.push(i);
            index.extend(&tuple);
            let entry = t.entry(&index).value;
            if entry != 0.0 {
                let prod: Complex64 = tuple.iter().map(|&v| x[v]).product();
                acc += entry * prod;
            }
        }
        out[i] = acc;
    }
    out
}

/// Entrywise row comparison by exhaustive tuple enumeration (exact where
/// rational values are available, bitwise on doubles otherwise).
pub fn rows_equal_brute(t: &HypergraphTensor, i: usize, j: usize) -> bool {
    let n = t.dim();
    let k1 = t.order() - 1;
    for tuple in all_tuples(n, k1) {
        let mut index_i = Vec::with_capacity(k1 + 1);
        index_i.push(i);
        index_i.extend(&tuple);
        let mut index_j = Vec::with_capacity(k1 + 1);
        index_j.push(j);
        index_j.extend(&tuple);
        let a = t.entry(&index_i);
        let b = t.entry(&index_j);
        let equal = match (&a.exact, &b.exact) {
            (Some(x), Some(y)) => x == y,
            _ => a.value == b.value,
        };
        if !equal {
            return false;
        }
    }
    true
}

/// Deterministic generator of valid weighted hypergraphs with small
/// rational weights. `n` in `2..=max_n`, edge cardinalities in
/// `2..=max_nabla`.
pub struct RandomHypergraphs {
    rng: ChaCha8Rng,
    pub max_n: usize,
    pub max_nabla: usize,
    /// Force every vertex to be covered (positive degrees).
    pub cover_all: bool,
    /// Force connectivity.
    pub connected: bool,
}

impl RandomHypergraphs {
    pub fn new(seed: u64) -> Self {
        RandomHypergraphs {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_n: 7,
            max_nabla: 4,
            cover_all: true,
            connected: false,
        }
    }

    pub fn connected(seed: u64) -> Self {
        RandomHypergraphs {
            connected: true,
            ..Self::new(seed)
        }
    }

    pub fn next(&mut self) -> WeightedHypergraph {
        loop {
            if let Some(g) = self.try_next() {
                if !self.connected || g.is_connected() {
                    return g;
                }
            }
        }
    }

    fn try_next(&mut self) -> Option<WeightedHypergraph> {
        let n = self.rng.gen_range(2..=self.max_n);
        let max_card = self.max_nabla.min(n);
        let m = self.rng.gen_range(1..=(n + 1));
        let mut supports: Vec<Vec<usize>> = Vec::new();
        for _ in 0..m {
            let card = self.rng.gen_range(2..=max_card);
            let mut support: Vec<usize> = (0..n).collect();
            for i in 0..card {
                let j = self.rng.gen_range(i..n);
                support.swap(i, j);
            }
            support.truncate(card);
            support.sort_unstable();
            if !supports.contains(&support) {
                supports.push(support);
            }
        }
        if self.cover_all {
            // Chain uncovered vertices to covered ones so degrees stay positive.
            let mut covered = vec![false; n];
            for s in &supports {
                for &v in s {
                    covered[v] = true;
                }
            }
            for v in 0..n {
                if !covered[v] {
                    let partner = (v + 1) % n;
                    let mut s = vec![v.min(partner), v.max(partner)];
                    s.dedup();
                    if s.len() == 2 && !supports.contains(&s) {
                        supports.push(s);
                        covered[v] = true;
                    }
                }
            }
            if covered.iter().any(|c| !c) {
                return None;
            }
        }
        let edges: Vec<(Vec<usize>, BigRational)> = supports
            .into_iter()
            .map(|s| {
                let p = self.rng.gen_range(1..=9i64);
                let q = self.rng.gen_range(1..=4i64);
                (s, rat(p, q))
            })
            .collect();
        WeightedHypergraph::with_default_labels(n, edges).ok()
    }

    /// A uniform random graph (2-uniform), for the matrix-oracle suite.
    pub fn next_graph(&mut self, max_n: usize) -> WeightedHypergraph {
        loop {
            let n = self.rng.gen_range(2..=max_n);
            let mut supports = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if self.rng.gen_bool(0.5) {
                        supports.push(vec![i, j]);
                    }
                }
            }
            if supports.is_empty() {
                continue;
            }
            let edges: Vec<(Vec<usize>, BigRational)> = supports
                .into_iter()
                .map(|s| (s, rat(self.rng.gen_range(1..=5i64), 1)))
                .collect();
            if let Ok(g) = WeightedHypergraph::with_default_labels(n, edges) {
                return g;
            }
        }
    }
}
