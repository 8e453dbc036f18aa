//! The seven spectral tensors of a weighted hypergraph, stored in
//! row-structured sparse form.
//!
//! Every nonzero off-diagonal entry of these tensors is determined by its
//! first index `i` and the support `S` of its index multiset: all entries
//! with the same `(i, S)` share one coefficient `c_{i,S}`. A tensor is
//! therefore stored as a diagonal vector plus, per row, a list of
//! `(support, coefficient)` pairs - never as a dense `N^order` array.
//!
//! Coefficients are exact rationals for the kinds that stay in the
//! rationals (`A`, `K`, `K+`, `RW`, `RW+`) and floating point for the
//! normalized Laplacians `L`, `L+`, whose entries involve `order`-th roots
//! of the degrees.

pub mod stirling;

use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{BruteForceCaps, HypergraphError, WeightedHypergraph};
use crate::rational::{format_rational, parse_rational, rat_to_f64};
use stirling::StirlingTable;

/// Which of the seven tensors to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TensorKind {
    /// Adjacency tensor `A`.
    Adjacency,
    /// Kirchhoff Laplacian `K = deg - A`.
    Kirchhoff,
    /// Signless Kirchhoff Laplacian `K+`.
    SignlessKirchhoff,
    /// Normalized Laplacian `L` (degree-root scaling; floating point).
    Normalized,
    /// Signless normalized Laplacian `L+`.
    SignlessNormalized,
    /// Random-walk Laplacian `RW` (row-scaled; not symmetric).
    RandomWalk,
    /// Signless random-walk Laplacian `RW+`.
    SignlessRandomWalk,
}

pub const ALL_KINDS: [TensorKind; 7] = [
    TensorKind::Adjacency,
    TensorKind::Kirchhoff,
    TensorKind::SignlessKirchhoff,
    TensorKind::Normalized,
    TensorKind::SignlessNormalized,
    TensorKind::RandomWalk,
    TensorKind::SignlessRandomWalk,
];

impl TensorKind {
    /// Entries invariant under index permutations. The row-scaled kinds
    /// `RW`, `RW+` are not symmetric.
    pub fn is_symmetric(self) -> bool {
        !matches!(self, TensorKind::RandomWalk | TensorKind::SignlessRandomWalk)
    }

    /// All entries nonnegative.
    pub fn is_nonnegative(self) -> bool {
        matches!(
            self,
            TensorKind::Adjacency
                | TensorKind::SignlessKirchhoff
                | TensorKind::SignlessNormalized
                | TensorKind::SignlessRandomWalk
        )
    }

    /// Coefficients stay rational (no degree roots involved).
    pub fn is_rational(self) -> bool {
        !matches!(self, TensorKind::Normalized | TensorKind::SignlessNormalized)
    }

    /// Kinds that divide by vertex degrees.
    pub fn needs_positive_degrees(self) -> bool {
        matches!(
            self,
            TensorKind::Normalized
                | TensorKind::SignlessNormalized
                | TensorKind::RandomWalk
                | TensorKind::SignlessRandomWalk
        )
    }

    pub fn code(self) -> &'static str {
        match self {
            TensorKind::Adjacency => "A",
            TensorKind::Kirchhoff => "K",
            TensorKind::SignlessKirchhoff => "K+",
            TensorKind::Normalized => "L",
            TensorKind::SignlessNormalized => "L+",
            TensorKind::RandomWalk => "RW",
            TensorKind::SignlessRandomWalk => "RW+",
        }
    }

    pub fn parse(code: &str) -> Option<TensorKind> {
        match code {
            "A" | "a" => Some(TensorKind::Adjacency),
            "K" | "k" => Some(TensorKind::Kirchhoff),
            "K+" | "k+" => Some(TensorKind::SignlessKirchhoff),
            "L" | "l" => Some(TensorKind::Normalized),
            "L+" | "l+" => Some(TensorKind::SignlessNormalized),
            "RW" | "rw" => Some(TensorKind::RandomWalk),
            "RW+" | "rw+" => Some(TensorKind::SignlessRandomWalk),
            _ => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TensorError {
    #[error("vertex {vertex} has degree zero; a degree-normalized tensor is undefined")]
    ZeroDegreeVertex { vertex: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the zero vector is not an eigenvector")]
    ZeroVector,
    #[error("exact arithmetic requested on floating-point tensor kind {kind}")]
    NotExact { kind: &'static str },
    #[error(transparent)]
    Stirling(#[from] stirling::StirlingRangeError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A coefficient carried both ways: `exact` is present for rational kinds,
/// `value` is always the nearest double.
#[derive(Debug, Clone, PartialEq)]
pub struct Coefficient {
    pub exact: Option<BigRational>,
    pub value: f64,
}

impl Coefficient {
    pub fn from_rational(r: BigRational) -> Self {
        let value = rat_to_f64(&r);
        Coefficient {
            exact: Some(r),
            value,
        }
    }

    pub fn from_f64(value: f64) -> Self {
        Coefficient { exact: None, value }
    }

    pub fn zero() -> Self {
        Coefficient::from_rational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        match &self.exact {
            Some(r) => r.is_zero(),
            None => self.value == 0.0,
        }
    }
}

/// One row-structured entry: the support (sorted, containing the row
/// index) and the shared coefficient for every index tuple realizing it.
#[derive(Debug, Clone, PartialEq)]
pub struct RowEntry {
    pub support: Vec<usize>,
    pub coeff: Coefficient,
}

/// An order-`order`, dimension-`dim` hypergraph tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergraphTensor {
    kind: TensorKind,
    order: usize,
    dim: usize,
    diagonal: Vec<Coefficient>,
    rows: Vec<Vec<RowEntry>>,
}

/// Builds the requested tensor. Degree-normalized kinds reject hypergraphs
/// with an isolated (degree-zero) vertex.
pub fn build(g: &WeightedHypergraph, kind: TensorKind) -> Result<HypergraphTensor, TensorError> {
    let n = g.vertex_count();
    let nabla = g.nabla();
    let profile = g.degree_profile();
    if kind.needs_positive_degrees() {
        if let Some(v) = profile.degrees.iter().position(|d| d.is_zero()) {
            return Err(TensorError::ZeroDegreeVertex { vertex: v });
        }
    }
    let mut table = StirlingTable::new();
    let diagonal: Vec<Coefficient> = match kind {
        TensorKind::Adjacency => (0..n).map(|_| Coefficient::zero()).collect(),
        TensorKind::Kirchhoff | TensorKind::SignlessKirchhoff => profile
            .degrees
            .iter()
            .map(|d| Coefficient::from_rational(d.clone()))
            .collect(),
        _ => (0..n)
            .map(|_| Coefficient::from_rational(BigRational::one()))
            .collect(),
    };
    let mut rows: Vec<Vec<RowEntry>> = vec![Vec::new(); n];
    let degree_roots: Vec<f64> = profile
        .degrees
        .iter()
        .map(|d| rat_to_f64(d).powf(-1.0 / nabla as f64))
        .collect();
    for e in g.edges() {
        let r = e.cardinality();
        let row_count = table.row_count(r, nabla)?;
        let base = e.weight.clone() / BigRational::from_integer(row_count);
        for &i in &e.support {
            let coeff = match kind {
                TensorKind::Adjacency | TensorKind::SignlessKirchhoff => {
                    Coefficient::from_rational(base.clone())
                }
                TensorKind::Kirchhoff => Coefficient::from_rational(-base.clone()),
                TensorKind::RandomWalk => {
                    Coefficient::from_rational(-base.clone() / profile.degrees[i].clone())
                }
                TensorKind::SignlessRandomWalk => {
                    Coefficient::from_rational(base.clone() / profile.degrees[i].clone())
                }
                TensorKind::Normalized | TensorKind::SignlessNormalized => {
                    let scale: f64 = e.support.iter().map(|&j| degree_roots[j]).product();
                    let sign = if kind == TensorKind::Normalized { -1.0 } else { 1.0 };
                    Coefficient::from_f64(sign * rat_to_f64(&base) * scale)
                }
            };
            rows[i].push(RowEntry {
                support: e.support.clone(),
                coeff,
            });
        }
    }
    Ok(HypergraphTensor {
        kind,
        order: nabla,
        dim: n,
        diagonal,
        rows,
    })
}

impl HypergraphTensor {
    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn diagonal(&self) -> &[Coefficient] {
        &self.diagonal
    }

    pub fn rows(&self) -> &[Vec<RowEntry>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[RowEntry] {
        &self.rows[i]
    }

    /// Direct entry lookup. The diagonal value when all indices coincide;
    /// the row coefficient when the index support is an edge containing
    /// every index; zero otherwise.
    pub fn entry(&self, index: &[usize]) -> Coefficient {
        assert_eq!(index.len(), self.order, "index tuple must have length {}", self.order);
        assert!(index.iter().all(|&i| i < self.dim), "index out of range");
        let first = index[0];
        if index.iter().all(|&i| i == first) {
            return self.diagonal[first].clone();
        }
        let mut support: Vec<usize> = index.to_vec();
        support.sort_unstable();
        support.dedup();
        for entry in &self.rows[first] {
            if entry.support == support {
                return entry.coeff.clone();
            }
        }
        Coefficient::zero()
    }

    /// `(T x^{order-1})_i` for a complex vector, evaluated per support by
    /// inclusion-exclusion over the subsets of `S \ {i}` that a tuple may
    /// miss: `sum_W (-1)^{|W|} (sum_{u in S\W} x_u)^{order-1}`.
    pub fn contract(&self, x: &[Complex64]) -> Result<Vec<Complex64>, TensorError> {
        if x.len() != self.dim {
            return Err(TensorError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let k1 = (self.order - 1) as u32;
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for i in 0..self.dim {
            let mut acc = self.diagonal[i].value * x[i].powu(k1);
            for entry in &self.rows[i] {
                let m = inclusion_exclusion_complex(&entry.support, i, x, k1);
                acc += entry.coeff.value * m;
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Exact-rational contraction; only available when every coefficient
    /// is rational.
    pub fn contract_exact(&self, x: &[BigRational]) -> Result<Vec<BigRational>, TensorError> {
        if x.len() != self.dim {
            return Err(TensorError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if !self.kind.is_rational() {
            return Err(TensorError::NotExact {
                kind: self.kind.code(),
            });
        }
        let k1 = (self.order - 1) as i32;
        let mut out = vec![BigRational::zero(); self.dim];
        for i in 0..self.dim {
            let diag = self.diagonal[i].exact.clone().expect("rational kind");
            let mut acc = diag * pow_rational(&x[i], k1);
            for entry in &self.rows[i] {
                let c = entry.coeff.exact.clone().expect("rational kind");
                let m = inclusion_exclusion_rational(&entry.support, i, x, k1);
                acc += c * m;
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Closed-form row sum: `diagonal_i + sum_S c_{i,S} * N(|S|, order)`.
    pub fn row_sum(&self, i: usize) -> Coefficient {
        let mut exact_acc = self.diagonal[i].exact.clone();
        let mut float_acc = self.diagonal[i].value;
        for entry in &self.rows[i] {
            let count = stirling::row_count(entry.support.len(), self.order)
                .expect("valid support cardinality");
            let count_rat = BigRational::from_integer(count);
            float_acc += entry.coeff.value * rat_to_f64(&count_rat);
            exact_acc = match (exact_acc, &entry.coeff.exact) {
                (Some(acc), Some(c)) => Some(acc + c * count_rat),
                _ => None,
            };
        }
        match exact_acc {
            Some(r) => Coefficient::from_rational(r),
            None => Coefficient::from_f64(float_acc),
        }
    }

    /// Closed-form sum of absolute values of the off-diagonal row entries.
    pub fn row_abs_offdiagonal_sum(&self, i: usize) -> Coefficient {
        let mut exact_acc = Some(BigRational::zero());
        let mut float_acc = 0.0;
        for entry in &self.rows[i] {
            let count = stirling::row_count(entry.support.len(), self.order)
                .expect("valid support cardinality");
            let count_rat = BigRational::from_integer(count);
            float_acc += entry.coeff.value.abs() * rat_to_f64(&count_rat);
            exact_acc = match (exact_acc, &entry.coeff.exact) {
                (Some(acc), Some(c)) => Some(acc + c.abs() * count_rat),
                _ => None,
            };
        }
        match exact_acc {
            Some(r) => Coefficient::from_rational(r),
            None => Coefficient::from_f64(float_acc),
        }
    }

    /// Checks `T_{i..i} >= sum |off-diagonal row entries|` for every row.
    pub fn is_diagonally_dominated(&self) -> bool {
        (0..self.dim).all(|i| {
            let offdiag = self.row_abs_offdiagonal_sum(i);
            match (&self.diagonal[i].exact, &offdiag.exact) {
                (Some(d), Some(s)) => d >= s,
                _ => self.diagonal[i].value >= offdiag.value - 1e-12,
            }
        })
    }

    /// Brute force over nonempty proper index subsets `J`: weakly
    /// irreducible means every `J` has a row `i` in `J` with a support not
    /// contained in `J`.
    pub fn is_weakly_irreducible(&self, caps: &BruteForceCaps) -> Result<bool, TensorError> {
        let n = self.dim;
        if n > caps.subset_max_vertices {
            return Err(TensorError::Hypergraph(HypergraphError::TooLarge {
                what: "weak irreducibility search",
                needed: 1u128 << n,
                cap: 1u128 << caps.subset_max_vertices,
            }));
        }
        for mask in 1u64..((1u64 << n) - 1) {
            let has_exit = (0..n).filter(|&i| mask >> i & 1 == 1).any(|i| {
                self.rows[i]
                    .iter()
                    .any(|e| e.support.iter().any(|&v| mask >> v & 1 == 0))
            });
            if !has_exit {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Brute force over nonempty proper index subsets `J`: irreducible
    /// means every `J` has a row `i` in `J` with a support meeting `J`
    /// exactly in `{i}`.
    pub fn is_irreducible(&self, caps: &BruteForceCaps) -> Result<bool, TensorError> {
        let n = self.dim;
        if n > caps.subset_max_vertices {
            return Err(TensorError::Hypergraph(HypergraphError::TooLarge {
                what: "irreducibility search",
                needed: 1u128 << n,
                cap: 1u128 << caps.subset_max_vertices,
            }));
        }
        for mask in 1u64..((1u64 << n) - 1) {
            let has_entry = (0..n).filter(|&i| mask >> i & 1 == 1).any(|i| {
                self.rows[i].iter().any(|e| {
                    e.support
                        .iter()
                        .all(|&v| v == i || mask >> v & 1 == 0)
                })
            });
            if !has_entry {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when the union of row supports forms one connected component.
    pub fn support_connected(&self) -> bool {
        let n = self.dim;
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for entry in &self.rows[v] {
                for &u in &entry.support {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Max-norm of `T x^{order-1} - lambda x^{[order-1]}` after normalizing
    /// `x` to unit max-norm.
    pub fn residual(&self, lambda: Complex64, x: &[Complex64]) -> Result<f64, TensorError> {
        let norm = x.iter().map(|v| v.norm()).fold(0.0f64, f64::max);
        if norm == 0.0 {
            return Err(TensorError::ZeroVector);
        }
        let scaled: Vec<Complex64> = x.iter().map(|v| v / norm).collect();
        let contracted = self.contract(&scaled)?;
        let k1 = (self.order - 1) as u32;
        Ok(contracted
            .iter()
            .zip(&scaled)
            .map(|(lhs, xi)| (lhs - lambda * xi.powu(k1)).norm())
            .fold(0.0f64, f64::max))
    }

    /// Exact-rational residual (rational kinds, rational eigenpair data).
    pub fn residual_exact(
        &self,
        lambda: &BigRational,
        x: &[BigRational],
    ) -> Result<BigRational, TensorError> {
        if x.iter().all(|v| v.is_zero()) {
            return Err(TensorError::ZeroVector);
        }
        let contracted = self.contract_exact(x)?;
        let k1 = (self.order - 1) as i32;
        Ok(contracted
            .iter()
            .zip(x)
            .map(|(lhs, xi)| (lhs - lambda * pow_rational(xi, k1)).abs())
            .max()
            .expect("nonempty"))
    }
}

fn pow_rational(x: &BigRational, e: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

fn inclusion_exclusion_complex(
    support: &[usize],
    row: usize,
    x: &[Complex64],
    k1: u32,
) -> Complex64 {
    let others: Vec<usize> = support.iter().copied().filter(|&v| v != row).collect();
    let full: Complex64 = support.iter().map(|&v| x[v]).sum();
    let mut acc = Complex64::new(0.0, 0.0);
    for mask in 0u32..(1u32 << others.len()) {
        let mut s = full;
        let mut bits = 0;
        for (pos, &v) in others.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                s -= x[v];
                bits += 1;
            }
        }
        let term = s.powu(k1);
        if bits % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn inclusion_exclusion_rational(
    support: &[usize],
    row: usize,
    x: &[BigRational],
    k1: i32,
) -> BigRational {
    let others: Vec<usize> = support.iter().copied().filter(|&v| v != row).collect();
    let full: BigRational = support.iter().map(|&v| x[v].clone()).sum();
    let mut acc = BigRational::zero();
    for mask in 0u32..(1u32 << others.len()) {
        let mut s = full.clone();
        let mut bits = 0;
        for (pos, &v) in others.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                s -= x[v].clone();
                bits += 1;
            }
        }
        let term = pow_rational(&s, k1);
        if bits % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Dump format
// ---------------------------------------------------------------------------

/// Serialized tensor: kind, order, dimension, diagonal, and the row
/// entries with decimal and (when available) exact rational coefficients.
/// Rows and supports are 1-based on disk.
#[derive(Debug, Serialize, Deserialize)]
pub struct TensorDump {
    pub kind: String,
    pub order: usize,
    pub dimension: usize,
    pub diagonal: Vec<DumpValue>,
    pub entries: Vec<DumpEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DumpEntry {
    pub row: usize,
    pub support: Vec<usize>,
    pub coefficient: DumpValue,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DumpValue {
    pub decimal: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl DumpValue {
    fn from_coefficient(c: &Coefficient) -> DumpValue {
        DumpValue {
            decimal: c.value,
            exact: c.exact.as_ref().map(format_rational),
        }
    }

    fn to_coefficient(&self) -> Result<Coefficient, TensorError> {
        match &self.exact {
            Some(text) => {
                let r = parse_rational(text).ok_or(TensorError::NotExact { kind: "dump" })?;
                Ok(Coefficient::from_rational(r))
            }
            None => Ok(Coefficient::from_f64(self.decimal)),
        }
    }
}

impl TensorDump {
    pub fn from_tensor(t: &HypergraphTensor) -> TensorDump {
        let mut entries = Vec::new();
        for (i, row) in t.rows.iter().enumerate() {
            for entry in row {
                entries.push(DumpEntry {
                    row: i + 1,
                    support: entry.support.iter().map(|&v| v + 1).collect(),
                    coefficient: DumpValue::from_coefficient(&entry.coeff),
                });
            }
        }
        TensorDump {
            kind: t.kind.code().to_string(),
            order: t.order,
            dimension: t.dim,
            diagonal: t.diagonal.iter().map(DumpValue::from_coefficient).collect(),
            entries,
        }
    }

    pub fn into_tensor(self) -> Result<HypergraphTensor, TensorError> {
        let kind = TensorKind::parse(&self.kind).ok_or(TensorError::NotExact { kind: "dump" })?;
        let diagonal = self
            .diagonal
            .iter()
            .map(DumpValue::to_coefficient)
            .collect::<Result<Vec<_>, _>>()?;
        let mut rows: Vec<Vec<RowEntry>> = vec![Vec::new(); self.dimension];
        for entry in &self.entries {
            let row = entry.row - 1;
            rows[row].push(RowEntry {
                support: entry.support.iter().map(|&v| v - 1).collect(),
                coeff: entry.coefficient.to_coefficient()?,
            });
        }
        Ok(HypergraphTensor {
            kind,
            order: self.order,
            dim: self.dimension,
            diagonal,
            rows,
        })
    }
}
