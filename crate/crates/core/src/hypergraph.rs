//! Weighted hypergraphs and purely combinatorial structure detection.
//!
//! A hypergraph here is a set of vertices together with edges that are
//! vertex sets of cardinality at least two, each carrying a strictly
//! positive rational weight. All structure predicates in this module are
//! combinatorial; their tensor-level counterparts live in [`crate::tensor`].

use std::collections::{BTreeSet, HashMap, VecDeque};

use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{format_rational, parse_rational, rat_to_f64};

/// Errors raised by hypergraph validation and the brute-force searches.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("edge {index} has fewer than two vertices")]
    EdgeTooSmall { index: usize },
    #[error("edge {index} has a non-positive weight")]
    NonPositiveWeight { index: usize },
    #[error("edges {first} and {second} have the same vertex support")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edge {index} references vertex {vertex}, outside the declared {n} vertices")]
    IndexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("hypergraph has no edges")]
    EmptyEdgeSet,
    #[error("{what}: needs {needed} candidates, above the configured cap {cap}")]
    TooLarge {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    #[error("l = {ell} must be at least 2 and divide the maximum edge cardinality {nabla}")]
    InvalidEll { ell: usize, nabla: usize },
    #[error("edge {index} has an unparsable weight '{text}'")]
    BadWeight { index: usize, text: String },
}

/// An edge: a sorted set of 0-based vertex indices plus a positive weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub support: Vec<usize>,
    pub weight: BigRational,
}

impl Edge {
    pub fn cardinality(&self) -> usize {
        self.support.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.support.binary_search(&v).is_ok()
    }

    pub fn weight_f64(&self) -> f64 {
        rat_to_f64(&self.weight)
    }
}

/// A validated weighted hypergraph. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedHypergraph {
    vertex_labels: Vec<String>,
    edges: Vec<Edge>,
}

/// Per-vertex weighted degrees together with the degree and cardinality
/// extremes (`delta`, `Delta`, `nabla`).
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    pub degrees: Vec<BigRational>,
    pub delta_min: BigRational,
    pub delta_max: BigRational,
    pub nabla: usize,
}

impl DegreeProfile {
    pub fn degrees_f64(&self) -> Vec<f64> {
        self.degrees.iter().map(rat_to_f64).collect()
    }
}

/// Caps for the exhaustive searches. All searches that enumerate an
/// exponential candidate space check these before running.
#[derive(Debug, Clone)]
pub struct BruteForceCaps {
    /// Max vertex count for subset enumerations (reducibility,
    /// odd-bipartition, sign-matrix search): `2^N` candidates.
    pub subset_max_vertices: usize,
    /// Max total candidate colorings `nabla^N`.
    pub coloring_budget: u128,
    /// Max multisets enumerated per edge when checking odd-bipartitions
    /// and colorings.
    pub multisets_per_edge: u128,
}

impl Default for BruteForceCaps {
    fn default() -> Self {
        BruteForceCaps {
            subset_max_vertices: 20,
            coloring_budget: 10_000_000,
            multisets_per_edge: 1_000_000,
        }
    }
}

/// Everything the combinatorial layer can say about one hypergraph.
#[derive(Debug, Clone)]
pub struct StructuralReport {
    pub connected: bool,
    pub reducible_witness: Option<(Vec<usize>, Vec<usize>)>,
    pub duplicate_classes: Vec<Vec<usize>>,
    pub odd_bipartition: Option<(Vec<usize>, Vec<usize>)>,
    /// For each admissible `l` (dividing `nabla`), the first coloring found.
    pub colorings: Vec<(usize, Option<Vec<usize>>)>,
}

impl WeightedHypergraph {
    /// Validates raw data: every support has cardinality at least two, all
    /// weights are strictly positive, supports are pairwise distinct,
    /// vertex indices are in range, and at least one edge is present.
    pub fn new(
        vertex_labels: Vec<String>,
        raw_edges: Vec<(Vec<usize>, BigRational)>,
    ) -> Result<Self, HypergraphError> {
        let n = vertex_labels.len();
        if raw_edges.is_empty() {
            return Err(HypergraphError::EmptyEdgeSet);
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for (index, (support, weight)) in raw_edges.into_iter().enumerate() {
            let set: BTreeSet<usize> = support.into_iter().collect();
            if set.len() < 2 {
                return Err(HypergraphError::EdgeTooSmall { index });
            }
            if let Some(&v) = set.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::IndexOutOfRange { index, vertex: v, n });
            }
            if !weight.is_positive() {
                return Err(HypergraphError::NonPositiveWeight { index });
            }
            let sorted: Vec<usize> = set.into_iter().collect();
            if let Some(&first) = seen.get(&sorted) {
                return Err(HypergraphError::DuplicateEdge { first, second: index });
            }
            seen.insert(sorted.clone(), index);
            edges.push(Edge {
                support: sorted,
                weight,
            });
        }
        Ok(WeightedHypergraph {
            vertex_labels,
            edges,
        })
    }

    /// Same as [`WeightedHypergraph::new`] with generated labels `v1..vN`.
    pub fn with_default_labels(
        n: usize,
        raw_edges: Vec<(Vec<usize>, BigRational)>,
    ) -> Result<Self, HypergraphError> {
        let labels = (1..=n).map(|i| format!("v{i}")).collect();
        Self::new(labels, raw_edges)
    }

    /// Unweighted hypergraph: every edge has weight one.
    pub fn unweighted(n: usize, supports: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let edges = supports
            .into_iter()
            .map(|s| (s, BigRational::one()))
            .collect();
        Self::with_default_labels(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Maximum edge cardinality; the order of all associated tensors.
    pub fn nabla(&self) -> usize {
        self.edges.iter().map(Edge::cardinality).max().unwrap_or(0)
    }

    /// True when every edge has cardinality exactly `nabla`.
    pub fn is_uniform(&self) -> bool {
        let nabla = self.nabla();
        self.edges.iter().all(|e| e.cardinality() == nabla)
    }

    pub fn edges_containing(&self, v: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.contains(v))
    }

    /// Weighted degree of one vertex.
    pub fn degree(&self, v: usize) -> BigRational {
        self.edges_containing(v)
            .map(|e| e.weight.clone())
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Degrees, their extremes, and the maximum edge cardinality.
    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<BigRational> =
            (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        let delta_min = degrees.iter().min().cloned().unwrap_or_else(BigRational::zero);
        let delta_max = degrees.iter().max().cloned().unwrap_or_else(BigRational::zero);
        DegreeProfile {
            degrees,
            delta_min,
            delta_max,
            nabla: self.nabla(),
        }
    }

    /// Breadth-first search on the vertex-edge incidence structure.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        while let Some(v) = queue.pop_front() {
            for e in self.edges_containing(v) {
                for &u in &e.support {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Searches for a bipartition `V = V1 U V2` (both nonempty) such that
    /// every edge meeting `V1` meets it in at least two vertices. Returns
    /// the first witness in mask order, or `None` when irreducible.
    pub fn is_reducible(
        &self,
        caps: &BruteForceCaps,
    ) -> Result<Option<(Vec<usize>, Vec<usize>)>, HypergraphError> {
        let n = self.vertex_count();
        if n > caps.subset_max_vertices {
            return Err(HypergraphError::TooLarge {
                what: "reducibility search",
                needed: 1u128 << n,
                cap: 1u128 << caps.subset_max_vertices,
            });
        }
        for mask in 1u64..((1u64 << n) - 1) {
            let ok = self.edges.iter().all(|e| {
                let in_v1 = e.support.iter().filter(|&&v| mask >> v & 1 == 1).count();
                in_v1 == 0 || in_v1 >= 2
            });
            if ok {
                return Ok(Some(split_by_mask(n, mask)));
            }
        }
        Ok(None)
    }

    /// True when `v_i` and `v_j` share no edge and the `i`-th and `j`-th
    /// rows of the adjacency tensor coincide. The row condition is decided
    /// combinatorially: every edge at either vertex must have cardinality
    /// exactly `nabla`, and `e -> (e \ {v_i}) u {v_j}` must be a
    /// weight-preserving bijection between their edge sets.
    pub fn are_duplicates(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        let nabla = self.nabla();
        let edges_i: Vec<&Edge> = self.edges_containing(i).collect();
        let edges_j: Vec<&Edge> = self.edges_containing(j).collect();
        if edges_i.iter().any(|e| e.contains(j)) {
            return false;
        }
        // An edge of cardinality < nabla at v_i produces a nonzero row
        // entry (first index i, support the edge itself) whose counterpart
        // in row j would need the support plus v_j to be an edge; that
        // would be a shared edge. So rows can only match on full-size edges.
        if edges_i.iter().chain(&edges_j).any(|e| e.cardinality() != nabla) {
            return false;
        }
        if edges_i.len() != edges_j.len() {
            return false;
        }
        edges_i.iter().all(|e| {
            let mut target: Vec<usize> = e
                .support
                .iter()
                .copied()
                .filter(|&v| v != i)
                .chain(std::iter::once(j))
                .collect();
            target.sort_unstable();
            self.edges
                .iter()
                .any(|f| f.support == target && f.weight == e.weight)
        })
    }

    /// Groups vertices into classes of mutually duplicate vertices
    /// (transitive closure of the pairwise relation, then re-verified
    /// pairwise). Vertices with no duplicate partner are omitted.
    pub fn duplicate_classes(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if self.are_duplicates(i, j) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..n {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        let mut classes: Vec<Vec<usize>> = groups
            .into_values()
            .filter(|class| class.len() >= 2)
            .collect();
        classes.sort();
        for class in &classes {
            for a in 0..class.len() {
                for b in (a + 1)..class.len() {
                    debug_assert!(self.are_duplicates(class[a], class[b]));
                }
            }
        }
        classes
    }

    /// Enumerates the size-`nabla` index multisets whose support is the
    /// given edge, as multiplicity vectors aligned with `edge.support`.
    fn edge_multiplicity_vectors(
        &self,
        edge: &Edge,
        cap: u128,
    ) -> Result<Vec<Vec<usize>>, HypergraphError> {
        let nabla = self.nabla();
        let parts = edge.cardinality();
        let needed = compositions_count(nabla, parts);
        if needed > cap {
            return Err(HypergraphError::TooLarge {
                what: "per-edge multiset enumeration",
                needed,
                cap,
            });
        }
        Ok(compositions(nabla, parts))
    }

    /// Searches for a bipartition such that, for every edge, every size-`nabla`
    /// multiset supported on the edge contains an odd number of `V1`
    /// members counted with repetition. Requires even `nabla`; returns
    /// `None` immediately for odd `nabla`.
    pub fn odd_bipartition(
        &self,
        caps: &BruteForceCaps,
    ) -> Result<Option<(Vec<usize>, Vec<usize>)>, HypergraphError> {
        let n = self.vertex_count();
        let nabla = self.nabla();
        if nabla % 2 != 0 {
            return Ok(None);
        }
        if n > caps.subset_max_vertices {
            return Err(HypergraphError::TooLarge {
                what: "odd-bipartition search",
                needed: 1u128 << n,
                cap: 1u128 << caps.subset_max_vertices,
            });
        }
        let per_edge: Vec<Vec<Vec<usize>>> = self
            .edges
            .iter()
            .map(|e| self.edge_multiplicity_vectors(e, caps.multisets_per_edge))
            .collect::<Result<_, _>>()?;
        for mask in 1u64..(1u64 << n) {
            let ok = self.edges.iter().zip(&per_edge).all(|(e, multisets)| {
                multisets.iter().all(|mult| {
                    let count: usize = e
                        .support
                        .iter()
                        .zip(mult)
                        .filter(|(&v, _)| mask >> v & 1 == 1)
                        .map(|(_, &m)| m)
                        .sum();
                    count % 2 == 1
                })
            });
            if ok {
                return Ok(Some(split_by_mask(n, mask)));
            }
        }
        Ok(None)
    }

    /// Exhaustive search for a map `phi: V -> [nabla]` such that every
    /// size-`nabla` multiset supported on an edge satisfies
    /// `sum phi = nabla/l (mod nabla)` counted with repetition.
    pub fn find_coloring(
        &self,
        ell: usize,
        caps: &BruteForceCaps,
    ) -> Result<Option<Vec<usize>>, HypergraphError> {
        let n = self.vertex_count();
        let nabla = self.nabla();
        if ell < 2 || nabla % ell != 0 {
            return Err(HypergraphError::InvalidEll { ell, nabla });
        }
        let total = (nabla as u128).checked_pow(n as u32);
        match total {
            Some(t) if t <= caps.coloring_budget => {}
            _ => {
                return Err(HypergraphError::TooLarge {
                    what: "coloring search",
                    needed: total.unwrap_or(u128::MAX),
                    cap: caps.coloring_budget,
                })
            }
        }
        let per_edge: Vec<Vec<Vec<usize>>> = self
            .edges
            .iter()
            .map(|e| self.edge_multiplicity_vectors(e, caps.multisets_per_edge))
            .collect::<Result<_, _>>()?;
        let target = nabla / ell;
        // phi[v] in 1..=nabla, enumerated as a mixed-radix counter.
        let mut phi = vec![1usize; n];
        loop {
            let ok = self.edges.iter().zip(&per_edge).all(|(e, multisets)| {
                multisets.iter().all(|mult| {
                    let sum: usize = e
                        .support
                        .iter()
                        .zip(mult)
                        .map(|(&v, &m)| phi[v] * m)
                        .sum();
                    sum % nabla == target % nabla
                })
            });
            if ok {
                return Ok(Some(phi));
            }
            // advance the counter
            let mut pos = 0;
            loop {
                if pos == n {
                    return Ok(None);
                }
                if phi[pos] < nabla {
                    phi[pos] += 1;
                    break;
                }
                phi[pos] = 1;
                pos += 1;
            }
        }
    }

    /// Concatenates two hypergraphs on disjoint vertex sets.
    pub fn disjoint_union(&self, other: &WeightedHypergraph) -> WeightedHypergraph {
        let offset = self.vertex_count();
        let mut labels = self.vertex_labels.clone();
        labels.extend(
            other
                .vertex_labels
                .iter()
                .map(|l| format!("{l}'")),
        );
        let mut edges: Vec<(Vec<usize>, BigRational)> = self
            .edges
            .iter()
            .map(|e| (e.support.clone(), e.weight.clone()))
            .collect();
        edges.extend(other.edges.iter().map(|e| {
            (
                e.support.iter().map(|&v| v + offset).collect(),
                e.weight.clone(),
            )
        }));
        WeightedHypergraph::new(labels, edges)
            .expect("union of valid hypergraphs is valid")
    }

    /// Assembles the full combinatorial report. Colorings are attempted for
    /// every `l >= 2` dividing `nabla`.
    pub fn structural_report(
        &self,
        caps: &BruteForceCaps,
    ) -> Result<StructuralReport, HypergraphError> {
        let nabla = self.nabla();
        let mut colorings = Vec::new();
        for ell in 2..=nabla {
            if nabla % ell == 0 {
                colorings.push((ell, self.find_coloring(ell, caps)?));
            }
        }
        Ok(StructuralReport {
            connected: self.is_connected(),
            reducible_witness: self.is_reducible(caps)?,
            duplicate_classes: self.duplicate_classes(),
            odd_bipartition: self.odd_bipartition(caps)?,
            colorings,
        })
    }
}

/// The `nabla`-hyperflower: `nabla - 1` central vertices shared by all `m`
/// edges, and `m` peripheral vertices of degree one.
pub fn hyperflower(nabla: usize, m: usize) -> WeightedHypergraph {
    assert!(nabla >= 2 && m >= 1, "hyperflower needs nabla >= 2, m >= 1");
    let n = nabla - 1 + m;
    let supports: Vec<Vec<usize>> = (0..m)
        .map(|p| {
            let mut s: Vec<usize> = (0..nabla - 1).collect();
            s.push(nabla - 1 + p);
            s
        })
        .collect();
    WeightedHypergraph::unweighted(n, supports).expect("hyperflower is valid")
}

fn split_by_mask(n: usize, mask: u64) -> (Vec<usize>, Vec<usize>) {
    let v1 = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
    let v2 = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
    (v1, v2)
}

/// All vectors of `parts` positive integers summing to `total`.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; parts];
    fn recurse(
        total: usize,
        parts: usize,
        pos: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == parts - 1 {
            if total >= 1 {
                current[pos] = total;
                out.push(current.clone());
            }
            return;
        }
        let remaining_min = parts - pos - 1;
        for v in 1..=(total.saturating_sub(remaining_min)) {
            current[pos] = v;
            recurse(total - v, parts, pos + 1, current, out);
        }
    }
    if parts == 0 || total < parts {
        return out;
    }
    recurse(total, parts, 0, &mut current, &mut out);
    out
}

/// `C(total - 1, parts - 1)`: the number of compositions above.
pub fn compositions_count(total: usize, parts: usize) -> u128 {
    if parts == 0 || total < parts {
        return 0;
    }
    let mut result: u128 = 1;
    let n = (total - 1) as u128;
    let k = (parts - 1) as u128;
    let k = k.min(n - k);
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

/// On-disk hypergraph description. Vertex indices are 1-based in files and
/// 0-based everywhere else; weights may be numbers or exact `"p/q"` strings.
#[derive(Debug, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeFile>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EdgeFile {
    pub vertices: Vec<usize>,
    pub weight: WeightValue,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightValue {
    Number(f64),
    Exact(String),
}

impl HypergraphFile {
    pub fn parse(text: &str) -> Result<WeightedHypergraph, HypergraphError> {
        let file: HypergraphFile =
            serde_json::from_str(text).map_err(|_| HypergraphError::EmptyEdgeSet)?;
        file.into_hypergraph()
    }

    pub fn into_hypergraph(self) -> Result<WeightedHypergraph, HypergraphError> {
        let n = self.vertices.len();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (index, edge) in self.edges.into_iter().enumerate() {
            let weight = match &edge.weight {
                WeightValue::Number(x) => crate::rational::rat_from_f64(*x)
                    .ok_or_else(|| HypergraphError::BadWeight {
                        index,
                        text: x.to_string(),
                    })?,
                WeightValue::Exact(s) => {
                    parse_rational(s).ok_or_else(|| HypergraphError::BadWeight {
                        index,
                        text: s.clone(),
                    })?
                }
            };
            let mut support = Vec::with_capacity(edge.vertices.len());
            for v in edge.vertices {
                if v == 0 || v > n {
                    return Err(HypergraphError::IndexOutOfRange {
                        index,
                        vertex: v,
                        n,
                    });
                }
                support.push(v - 1);
            }
            edges.push((support, weight));
        }
        WeightedHypergraph::new(self.vertices, edges)
    }

    pub fn from_hypergraph(g: &WeightedHypergraph) -> HypergraphFile {
        HypergraphFile {
            vertices: g.vertex_labels().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeFile {
                    vertices: e.support.iter().map(|&v| v + 1).collect(),
                    weight: WeightValue::Exact(format_rational(&e.weight)),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::testsupport::{ex123, two_disjoint_edges};
    use num::ToPrimitive;

    #[test]
    fn validates_example_123() {
        let g = ex123();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.nabla(), 3);
    }

    #[test]
    fn rejects_small_edge() {
        let err = WeightedHypergraph::with_default_labels(2, vec![(vec![0], rat_int(1))])
            .unwrap_err();
        assert_eq!(err, HypergraphError::EdgeTooSmall { index: 0 });
    }

    #[test]
    fn rejects_non_positive_weight() {
        let err =
            WeightedHypergraph::with_default_labels(2, vec![(vec![0, 1], rat_int(-1))])
                .unwrap_err();
        assert_eq!(err, HypergraphError::NonPositiveWeight { index: 0 });
        let err =
            WeightedHypergraph::with_default_labels(2, vec![(vec![0, 1], rat_int(0))])
                .unwrap_err();
        assert_eq!(err, HypergraphError::NonPositiveWeight { index: 0 });
    }

    #[test]
    fn rejects_duplicate_support_and_bad_index() {
        let err = WeightedHypergraph::with_default_labels(
            3,
            vec![
                (vec![0, 1], rat_int(1)),
                (vec![1, 0], rat_int(2)), // same set, different order
            ],
        )
        .unwrap_err();
        assert_eq!(err, HypergraphError::DuplicateEdge { first: 0, second: 1 });

        let err = WeightedHypergraph::with_default_labels(2, vec![(vec![0, 5], rat_int(1))])
            .unwrap_err();
        assert!(matches!(err, HypergraphError::IndexOutOfRange { vertex: 5, .. }));
    }

    #[test]
    fn rejects_empty_edge_set() {
        let err = WeightedHypergraph::with_default_labels(2, vec![]).unwrap_err();
        assert_eq!(err, HypergraphError::EmptyEdgeSet);
    }

    #[test]
    fn degree_profile_of_example_123() {
        let profile = ex123().degree_profile();
        assert_eq!(
            profile.degrees,
            vec![rat_int(3), rat_int(3), rat_int(2)]
        );
        assert_eq!(profile.nabla, 3);
        assert_eq!(profile.delta_min, rat_int(2));
        assert_eq!(profile.delta_max, rat_int(3));
    }

    #[test]
    fn degree_profile_single_edge_and_flower() {
        let k2 = WeightedHypergraph::unweighted(2, vec![vec![0, 1]]).unwrap();
        let p = k2.degree_profile();
        assert_eq!(p.degrees, vec![rat_int(1), rat_int(1)]);
        assert_eq!(p.nabla, 2);

        // 3-hyperflower with 2 edges: central degrees M=2, peripheral 1.
        let p = hyperflower(3, 2).degree_profile();
        assert_eq!(
            p.degrees,
            vec![rat_int(2), rat_int(2), rat_int(1), rat_int(1)]
        );
        assert_eq!(p.nabla, 3);
    }

    #[test]
    fn degree_sum_equals_weighted_cardinality_sum() {
        // sum_i deg v_i = sum_e |e| w(e)
        let g = ex123();
        let lhs: BigRational = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        let rhs: BigRational = g
            .edges()
            .iter()
            .map(|e| rat_int(e.cardinality() as i64) * e.weight.clone())
            .sum();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn connectivity() {
        assert!(ex123().is_connected());
        assert!(!two_disjoint_edges().is_connected());
        assert!(hyperflower(4, 3).is_connected());
        assert!(hyperflower(2, 5).is_connected());
    }

    #[test]
    fn reducibility_witnesses() {
        let caps = BruteForceCaps::default();
        // v3 of ex:123 is in no cardinality-2 edge, so V2 = {v3} works.
        let (v1, v2) = ex123().is_reducible(&caps).unwrap().unwrap();
        let check = |v1: &Vec<usize>, v2: &Vec<usize>| {
            ex123().edges().iter().all(|e| {
                let c = e.support.iter().filter(|v| v1.contains(v)).count();
                c == 0 || c >= 2
            }) && !v1.is_empty()
                && !v2.is_empty()
        };
        assert!(check(&v1, &v2));
        assert!(v2 == vec![2] || v1 == vec![0, 1]);

        // A path on 3 vertices is a connected graph, hence irreducible.
        let path3 = WeightedHypergraph::unweighted(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert!(path3.is_reducible(&caps).unwrap().is_none());

        // Disconnected hypergraphs are always reducible.
        assert!(two_disjoint_edges().is_reducible(&caps).unwrap().is_some());
    }

    #[test]
    fn reducibility_cap() {
        let g = hyperflower(3, 2);
        let caps = BruteForceCaps {
            subset_max_vertices: 3,
            ..Default::default()
        };
        assert!(matches!(
            g.is_reducible(&caps),
            Err(HypergraphError::TooLarge { .. })
        ));
    }

    #[test]
    fn duplicate_classes_of_hyperflowers() {
        // All M peripheral vertices are duplicate of each other.
        for (nabla, m) in [(3, 2), (3, 3), (4, 3)] {
            let g = hyperflower(nabla, m);
            let classes = g.duplicate_classes();
            assert_eq!(classes, vec![(nabla - 1..nabla - 1 + m).collect::<Vec<_>>()]);
        }
    }

    #[test]
    fn no_duplicates_in_example_123() {
        assert!(ex123().duplicate_classes().is_empty());
    }

    #[test]
    fn disjoint_edges_have_no_duplicates() {
        // Rows differ: A_{1,2} = 1 but A_{3,2} = 0, so v1 and v3 are not
        // duplicates (and likewise for the other cross pairs). Verified
        // against brute-force tensor rows in the tensor module tests.
        let g = two_disjoint_edges();
        assert!(g.duplicate_classes().is_empty());
        assert!(!g.are_duplicates(0, 2));
        assert!(!g.are_duplicates(0, 1)); // shared edge
    }

    #[test]
    fn duplicates_respect_weights() {
        // Same shape as a 3-hyperflower but one edge re-weighted: the
        // bijection no longer preserves weights.
        let g = WeightedHypergraph::with_default_labels(
            4,
            vec![
                (vec![0, 1, 2], rat_int(1)),
                (vec![0, 1, 3], rat(1, 2)),
            ],
        )
        .unwrap();
        assert!(g.duplicate_classes().is_empty());
    }

    #[test]
    fn odd_bipartition_cases() {
        let caps = BruteForceCaps::default();
        // Single 4-edge: V1 = {v1} gives an odd count on the unique multiset.
        let e4 = WeightedHypergraph::unweighted(4, vec![vec![0, 1, 2, 3]]).unwrap();
        let (v1, _) = e4.odd_bipartition(&caps).unwrap().unwrap();
        assert_eq!(v1.len() % 2, 1);

        // Odd nabla: none, immediately.
        assert!(ex123().odd_bipartition(&caps).unwrap().is_none());

        // C4 is bipartite, so odd-bipartite as a graph.
        let c4 = WeightedHypergraph::unweighted(
            4,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
        .unwrap();
        let (v1, v2) = c4.odd_bipartition(&caps).unwrap().unwrap();
        // Witness must separate every edge.
        for e in c4.edges() {
            let c = e.support.iter().filter(|v| v1.contains(v)).count();
            assert_eq!(c % 2, 1);
        }
        assert_eq!(v1.len() + v2.len(), 4);

        // K3 is an odd cycle: not bipartite.
        let k3 = WeightedHypergraph::unweighted(
            3,
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        assert!(k3.odd_bipartition(&caps).unwrap().is_none());
    }

    #[test]
    fn odd_bipartite_implies_uniform() {
        // A non-uniform even-order hypergraph carries a multiset with a
        // spare slot whose placement flips the parity, so no bipartition
        // can work.
        let caps = BruteForceCaps::default();
        let g = WeightedHypergraph::unweighted(4, vec![vec![0, 1, 2, 3], vec![0, 1]])
            .unwrap();
        assert_eq!(g.nabla(), 4);
        assert!(g.odd_bipartition(&caps).unwrap().is_none());
    }

    #[test]
    fn coloring_cases() {
        let caps = BruteForceCaps::default();
        let k2 = WeightedHypergraph::unweighted(2, vec![vec![0, 1]]).unwrap();
        let phi = k2.find_coloring(2, &caps).unwrap().unwrap();
        assert_eq!((phi[0] + phi[1]) % 2, 1);

        let k3 = WeightedHypergraph::unweighted(
            3,
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        assert!(k3.find_coloring(2, &caps).unwrap().is_none());

        let err = k2.find_coloring(3, &caps).unwrap_err();
        assert_eq!(err, HypergraphError::InvalidEll { ell: 3, nabla: 2 });
    }

    #[test]
    fn hyperflower_is_3_colorable() {
        // The 3-hyperflower spectrum is invariant under cube roots of
        // unity, so a (3,3)-coloring must exist for the connected flower.
        let caps = BruteForceCaps::default();
        let g = hyperflower(3, 2);
        let phi = g.find_coloring(3, &caps).unwrap();
        assert!(phi.is_some());
    }

    #[test]
    fn union_shapes() {
        let k2 = WeightedHypergraph::unweighted(2, vec![vec![0, 1]]).unwrap();
        let u = k2.disjoint_union(&k2);
        assert_eq!(u.vertex_count(), 4);
        assert_eq!(u.edge_count(), 2);

        let u = ex123().disjoint_union(&k2);
        assert_eq!(u.vertex_count(), 5);
        assert_eq!(u.edge_count(), 3);
        assert_eq!(u.nabla(), 3);
    }

    #[test]
    fn hyperflower_shapes() {
        let g = hyperflower(3, 2);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(
            g.edges().iter().map(|e| e.support.clone()).collect::<Vec<_>>(),
            vec![vec![0, 1, 2], vec![0, 1, 3]]
        );
        let g = hyperflower(3, 3);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 3);
        // Star graph for nabla = 2.
        let g = hyperflower(2, 4);
        assert_eq!(g.vertex_count(), 5);
        assert!(g.edges().iter().all(|e| e.support[0] == 0));
        // Degree profile: nabla - 1 vertices of degree M, M of degree 1.
        let p = hyperflower(4, 3).degree_profile();
        let m_count = p.degrees.iter().filter(|d| **d == rat_int(3)).count();
        let one_count = p.degrees.iter().filter(|d| **d == rat_int(1)).count();
        assert_eq!((m_count, one_count), (3, 3));
    }

    #[test]
    fn compositions_enumeration() {
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(compositions(4, 4), vec![vec![1, 1, 1, 1]]);
        assert_eq!(compositions_count(3, 2), 2);
        assert_eq!(compositions_count(6, 3), 10);
        assert_eq!(compositions(6, 3).len(), 10);
    }

    #[test]
    fn file_round_trip() {
        let text = r#"{
            "vertices": ["a", "b", "c"],
            "edges": [
                {"vertices": [1, 2], "weight": 1.0},
                {"vertices": [1, 2, 3], "weight": "2"}
            ]
        }"#;
        let g = HypergraphFile::parse(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges()[1].weight, rat_int(2));

        let file = HypergraphFile::from_hypergraph(&g);
        let json = serde_json::to_string(&file).unwrap();
        let g2 = HypergraphFile::parse(&json).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn file_rejects_one_based_violations() {
        let text = r#"{"vertices": ["a"], "edges": [{"vertices": [0, 1], "weight": 1}]}"#;
        // weight as bare integer also exercises the Number arm
        let err = HypergraphFile::parse(text).unwrap_err();
        assert!(matches!(err, HypergraphError::IndexOutOfRange { vertex: 0, .. }));
    }

    #[test]
    fn rational_weight_strings_are_exact() {
        let text = r#"{"vertices": ["a","b"], "edges": [{"vertices": [1,2], "weight": "1/3"}]}"#;
        let g = HypergraphFile::parse(text).unwrap();
        assert_eq!(g.edges()[0].weight, rat(1, 3));
        assert!(g.edges()[0].weight.to_f64().unwrap() - 0.3333333 < 1e-6);
    }
}
