//! Eigenpair computation for hypergraph tensors.
//!
//! The pipeline: [`assemble`] expands a tensor into its eigenpair
//! polynomial system plus generic slices, [`solve`] tracks every
//! total-degree start path of the squared system, [`classify`] filters,
//! deduplicates and tags the endpoints into a [`SpectrumReport`], and
//! [`geometric_multiplicity`] re-solves with growing numbers of generic
//! homogeneous slices until an eigenvalue disappears. Independent of the
//! homotopy route, [`spectral_radius_nonneg`] runs the Perron-Frobenius
//! min-max iteration for nonnegative weakly irreducible kinds and
//! [`matrix_oracle`] eigendecomposes the order-2 case densely.

pub mod linalg;
pub mod poly;
pub mod system;
pub mod track;

use num::complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::WeightedHypergraph;
use crate::tensor::{build, HypergraphTensor, TensorError, TensorKind};

pub use system::{assemble, EigenSystem, SliceCoefficients, SquareSystem};
pub use track::{Homotopy, PathOutcome, TrackOptions, TrackedPath};

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("system needs {required} paths, above the budget {budget}")]
    PathBudgetExceeded { required: u128, budget: u128 },
    #[error("multiplicity runs with {slices} slices disagreed between two seeds")]
    Inconclusive { slices: usize },
    #[error("kind {kind} has negative entries; the iteration needs a nonnegative tensor")]
    NotNonnegative { kind: &'static str },
    #[error("support structure is disconnected; the Perron-Frobenius iteration is undefined")]
    NotConnected,
    #[error("spectral radius iteration missed tolerance {tol:e} within {max_iter} iterations")]
    NoConvergence { tol: f64, max_iter: usize },
    #[error("matrix oracle needs an order-2 tensor, got order {order}")]
    NotMatrix { order: usize },
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// Solver configuration. Defaults: dedup `1e-8` and real-classification
/// `1e-10` (both relative to `max(1, |lambda|)`), eigenpair acceptance
/// residual `1e-8` in the tensor max-norm.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub seed: u64,
    pub tol_dedup: f64,
    pub tol_residual: f64,
    pub real_threshold: f64,
    pub paths_budget: u128,
    pub track: TrackOptions,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            seed: 1,
            tol_dedup: 1e-8,
            tol_residual: 1e-8,
            real_threshold: 1e-10,
            paths_budget: 1_000_000,
            track: TrackOptions::default(),
        }
    }
}

impl SolveOptions {
    pub fn with_seed(seed: u64) -> Self {
        SolveOptions {
            seed,
            ..Default::default()
        }
    }
}

/// One tracked path endpoint, split into eigenvector and eigenvalue parts.
#[derive(Debug, Clone)]
pub struct PathResult {
    pub eigenvector: Vec<Complex64>,
    pub lambda: Complex64,
    pub converged: bool,
    /// Endpoint vanishes on the original slices (meaningful for
    /// randomized squarings of overdetermined systems).
    pub verified: bool,
    pub singular: bool,
    pub winding_estimate: usize,
    pub condition_estimate: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub paths_tracked: u64,
    pub converged: u64,
    pub diverged: u64,
    pub failed: u64,
    /// Converged endpoints rejected by slice verification.
    pub junk: u64,
    pub seed: u64,
    /// Set when more than 1% of paths failed; rerun with a fresh seed.
    pub possibly_incomplete: bool,
}

#[derive(Debug, Clone)]
pub struct SolveOutput {
    pub results: Vec<PathResult>,
    pub stats: SolveStats,
    /// Failure reason tallies, for diagnostics.
    pub failure_reasons: Vec<(&'static str, u64)>,
}

fn mix_seed(seed: u64, tag: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(23)
        ^ tag.wrapping_mul(0xD1B5_4A32_D192_ED03)
}

const TAG_GAMMA: u64 = 0xA1;
const TAG_SQUARE: u64 = 0xB2;
const TAG_GM: u64 = 0xC3;
const TAG_REAL: u64 = 0xD4;

/// Tracks every total-degree start path of the squared system.
pub fn solve(system: &EigenSystem, opts: &SolveOptions) -> Result<SolveOutput, SolveError> {
    let square = system.square(mix_seed(system.seed, TAG_SQUARE));
    let total = square.total_paths();
    if total > opts.paths_budget {
        return Err(SolveError::PathBudgetExceeded {
            required: total,
            budget: opts.paths_budget,
        });
    }
    let total = total as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(system.seed, TAG_GAMMA));
    let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let gamma = Complex64::from_polar(1.0, angle);
    let homotopy = Homotopy::new(&square, gamma, &opts.track);

    let tracked: Vec<TrackedPath> = (0..total)
        .into_par_iter()
        .map(|index| homotopy.track(homotopy.start_point(index as u128)))
        .collect();

    let n = system.n;
    let mut results = Vec::with_capacity(tracked.len());
    let mut stats = SolveStats {
        paths_tracked: total,
        converged: 0,
        diverged: 0,
        failed: 0,
        junk: 0,
        seed: system.seed,
        possibly_incomplete: false,
    };
    let mut failure_reasons: std::collections::BTreeMap<&'static str, u64> =
        std::collections::BTreeMap::new();
    for path in tracked {
        match path.outcome {
            PathOutcome::Diverged => {
                stats.diverged += 1;
            }
            PathOutcome::Failed(reason) => {
                stats.failed += 1;
                *failure_reasons.entry(reason).or_insert(0) += 1;
            }
            PathOutcome::Converged => {
                let verified = square.verifies(&path.point, 1e-8);
                if verified {
                    stats.converged += 1;
                } else {
                    stats.junk += 1;
                }
                results.push(PathResult {
                    eigenvector: path.point[..n].to_vec(),
                    lambda: path.point[n],
                    converged: true,
                    verified,
                    singular: path.singular,
                    winding_estimate: path.winding,
                    condition_estimate: path.condition,
                    residual: path.residual,
                });
            }
        }
    }
    stats.possibly_incomplete = stats.failed as f64 > 0.01 * stats.paths_tracked as f64;
    Ok(SolveOutput {
        results,
        stats,
        failure_reasons: failure_reasons.into_iter().collect(),
    })
}

/// One deduplicated eigenvalue with its best witness.
#[derive(Debug, Clone)]
pub struct EigenvalueRecord {
    pub value: Complex64,
    pub is_real: bool,
    /// No nonsingular endpoint produced this value.
    pub from_singular_endpoint: bool,
    pub eigenvector: Vec<Complex64>,
    /// Tensor-level residual of the representative eigenpair.
    pub residual: f64,
    pub geometric_multiplicity: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<EigenvalueRecord>,
    pub stats: SolveStats,
}

impl SpectrumReport {
    pub fn distinct_values(&self) -> Vec<Complex64> {
        self.eigenvalues.iter().map(|e| e.value).collect()
    }

    pub fn real_values(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .filter(|e| e.is_real)
            .map(|e| e.value.re)
            .collect()
    }

    pub fn find(&self, lambda: Complex64, tol: f64) -> Option<&EigenvalueRecord> {
        self.eigenvalues
            .iter()
            .find(|e| (e.value - lambda).norm() <= tol * lambda.norm().max(1.0))
    }
}

/// Filters verified endpoints through the tensor residual, deduplicates
/// eigenvalues with an absolute-plus-relative tolerance, and tags each
/// cluster. Eigenvalues are sorted lexicographically by real then
/// imaginary part.
pub fn classify(
    tensor: &HypergraphTensor,
    results: &[PathResult],
    opts: &SolveOptions,
) -> SpectrumReport {
    classify_with_stats(
        tensor,
        results,
        opts,
        SolveStats {
            paths_tracked: 0,
            converged: 0,
            diverged: 0,
            failed: 0,
            junk: 0,
            seed: opts.seed,
            possibly_incomplete: false,
        },
    )
}

pub fn classify_with_stats(
    tensor: &HypergraphTensor,
    results: &[PathResult],
    opts: &SolveOptions,
    stats: SolveStats,
) -> SpectrumReport {
    struct Witness {
        lambda: Complex64,
        eigenvector: Vec<Complex64>,
        singular: bool,
        tensor_residual: f64,
    }
    let mut witnesses: Vec<Witness> = Vec::new();
    for r in results {
        if !(r.converged && r.verified) {
            continue;
        }
        let Ok(residual) = tensor.residual(r.lambda, &r.eigenvector) else {
            continue;
        };
        if residual <= opts.tol_residual {
            witnesses.push(Witness {
                lambda: r.lambda,
                eigenvector: r.eigenvector.clone(),
                singular: r.singular,
                tensor_residual: residual,
            });
        }
    }
    // Union-find clustering on pairwise closeness.
    let m = witnesses.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let a = witnesses[i].lambda;
            let b = witnesses[j].lambda;
            let scale = a.norm().max(b.norm()).max(1.0);
            if (a - b).norm() <= opts.tol_dedup * scale {
                let (ra, rb) = (find(&mut parent, i), find(&mut parent, j));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut clusters: std::collections::HashMap<usize, Vec<usize>> =
        std::collections::HashMap::new();
    for i in 0..m {
        let root = find(&mut parent, i);
        clusters.entry(root).or_default().push(i);
    }
    let mut eigenvalues: Vec<EigenvalueRecord> = clusters
        .into_values()
        .map(|members| {
            let best = members
                .iter()
                .copied()
                .min_by(|&a, &b| {
                    witnesses[a]
                        .tensor_residual
                        .total_cmp(&witnesses[b].tensor_residual)
                })
                .expect("cluster nonempty");
            let value = witnesses[best].lambda;
            let from_singular = members.iter().all(|&i| witnesses[i].singular);
            EigenvalueRecord {
                value,
                is_real: value.im.abs() <= opts.real_threshold * value.norm().max(1.0),
                from_singular_endpoint: from_singular,
                eigenvector: witnesses[best].eigenvector.clone(),
                residual: witnesses[best].tensor_residual,
                geometric_multiplicity: None,
            }
        })
        .collect();
    eigenvalues.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    // Canonical order must be stable under endpoint noise in the last few
    // digits: mathematically equal real parts (conjugate pairs) are grouped
    // and ordered by imaginary part instead.
    let mut start = 0;
    while start < eigenvalues.len() {
        let mut end = start + 1;
        while end < eigenvalues.len() {
            let prev = eigenvalues[end - 1].value.re;
            let here = eigenvalues[end].value.re;
            if (here - prev).abs() <= 1e-12 * here.abs().max(1.0) {
                end += 1;
            } else {
                break;
            }
        }
        eigenvalues[start..end].sort_by(|a, b| a.value.im.total_cmp(&b.value.im));
        start = end;
    }
    SpectrumReport { eigenvalues, stats }
}

/// Solve-and-classify in one call.
pub fn spectrum(
    tensor: &HypergraphTensor,
    opts: &SolveOptions,
) -> Result<SpectrumReport, SolveError> {
    let system = assemble(tensor, 0, opts.seed, SliceCoefficients::Complex);
    let out = solve(&system, opts)?;
    Ok(classify_with_stats(tensor, &out.results, opts, out.stats))
}

/// Determines `gm(lambda)` by slicing: for `j = 1, 2, ...` append `j`
/// generic homogeneous slices and re-solve; the first `j` with no
/// solution near `lambda` is the geometric multiplicity. Every level runs
/// twice with independent seeds; disagreement surfaces as `Inconclusive`
/// rather than a guess.
pub fn geometric_multiplicity(
    tensor: &HypergraphTensor,
    lambda: Complex64,
    opts: &SolveOptions,
) -> Result<usize, SolveError> {
    let trace = geometric_multiplicity_traced(tensor, lambda, opts)?;
    Ok(trace.multiplicity)
}

/// Per-level outcomes of the slicing procedure, for reporting.
#[derive(Debug, Clone)]
pub struct MultiplicityTrace {
    pub multiplicity: usize,
    /// `(slice count, found in run A, found in run B)` per level.
    pub levels: Vec<(usize, bool, bool)>,
}

pub fn geometric_multiplicity_traced(
    tensor: &HypergraphTensor,
    lambda: Complex64,
    opts: &SolveOptions,
) -> Result<MultiplicityTrace, SolveError> {
    let n = tensor.dim();
    let match_tol = opts.tol_dedup.max(1e-9);
    let mut levels = Vec::new();
    for j in 1..=n {
        let mut found = [false, false];
        for (attempt, slot) in found.iter_mut().enumerate() {
            let seed = mix_seed(
                opts.seed,
                TAG_GM ^ ((j as u64) << 8) ^ ((attempt as u64) << 32),
            );
            let system = assemble(tensor, j, seed, SliceCoefficients::Complex);
            let out = solve(&system, opts)?;
            let report = classify(tensor, &out.results, opts);
            *slot = report.find(lambda, match_tol).is_some();
        }
        levels.push((j, found[0], found[1]));
        match (found[0], found[1]) {
            (true, true) => continue,
            (false, false) => {
                return Ok(MultiplicityTrace {
                    multiplicity: j,
                    levels,
                })
            }
            _ => return Err(SolveError::Inconclusive { slices: j }),
        }
    }
    Err(SolveError::Inconclusive { slices: n })
}

/// A real eigenpair found with real-coefficient slices.
#[derive(Debug, Clone)]
pub struct HEigenPair {
    pub lambda: f64,
    pub eigenvector: Vec<f64>,
    pub residual: f64,
}

/// Re-solves with real generic slices and keeps the endpoints whose
/// eigenvalue and (phase-aligned) eigenvector are real within tolerance.
pub fn h_eigen_search(
    tensor: &HypergraphTensor,
    opts: &SolveOptions,
) -> Result<Vec<HEigenPair>, SolveError> {
    let system = assemble(
        tensor,
        0,
        mix_seed(opts.seed, TAG_REAL),
        SliceCoefficients::Real,
    );
    let out = solve(&system, opts)?;
    let mut pairs: Vec<HEigenPair> = Vec::new();
    for r in &out.results {
        if !(r.converged && r.verified) {
            continue;
        }
        if r.lambda.im.abs() > opts.real_threshold * r.lambda.norm().max(1.0) {
            continue;
        }
        // Eigenvectors are determined up to a complex scale; rotate the
        // largest coordinate onto the positive real axis before testing
        // realness.
        let pivot = r
            .eigenvector
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let pivot_value = r.eigenvector[pivot];
        if pivot_value.norm() == 0.0 {
            continue;
        }
        let phase = pivot_value / pivot_value.norm();
        let aligned: Vec<Complex64> = r.eigenvector.iter().map(|x| x / phase).collect();
        let imag = aligned.iter().map(|x| x.im.abs()).fold(0.0f64, f64::max);
        let scale = aligned.iter().map(|x| x.norm()).fold(0.0f64, f64::max);
        if imag > 1e-7 * scale.max(1.0) {
            continue;
        }
        let real_vec: Vec<f64> = aligned.iter().map(|x| x.re).collect();
        let as_complex: Vec<Complex64> =
            real_vec.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let Ok(residual) = tensor.residual(Complex64::new(r.lambda.re, 0.0), &as_complex) else {
            continue;
        };
        if residual > opts.tol_residual {
            continue;
        }
        pairs.push(HEigenPair {
            lambda: r.lambda.re,
            eigenvector: real_vec,
            residual,
        });
    }
    // Collapse near-identical pairs (same lambda, same direction up to sign).
    let mut kept: Vec<HEigenPair> = Vec::new();
    'outer: for pair in pairs {
        let norm = pair
            .eigenvector
            .iter()
            .map(|x| x.abs())
            .fold(0.0f64, f64::max);
        for existing in &kept {
            if (existing.lambda - pair.lambda).abs() > opts.tol_dedup * pair.lambda.abs().max(1.0)
            {
                continue;
            }
            let enorm = existing
                .eigenvector
                .iter()
                .map(|x| x.abs())
                .fold(0.0f64, f64::max);
            let mut same = true;
            let mut flipped = true;
            for (a, b) in existing.eigenvector.iter().zip(&pair.eigenvector) {
                if (a / enorm - b / norm).abs() > 1e-6 {
                    same = false;
                }
                if (a / enorm + b / norm).abs() > 1e-6 {
                    flipped = false;
                }
            }
            if same || flipped {
                continue 'outer;
            }
        }
        kept.push(pair);
    }
    kept.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    Ok(kept)
}

/// Power-type Perron-Frobenius iteration for nonnegative weakly
/// irreducible tensors: `x <- normalize((T x^{k-1})^{[1/(k-1)]})` from the
/// all-ones start, with the min-max ratio sandwich as the stopping rule.
/// A zero diagonal (kind `A`) is shifted by the identity first, which
/// moves every eigenvalue by exactly one and keeps the iteration from
/// cycling.
pub fn spectral_radius_nonneg(
    tensor: &HypergraphTensor,
    tol: f64,
    max_iter: usize,
) -> Result<(f64, Vec<f64>), SolveError> {
    if !tensor.kind().is_nonnegative() {
        return Err(SolveError::NotNonnegative {
            kind: tensor.kind().code(),
        });
    }
    if !tensor.support_connected() {
        return Err(SolveError::NotConnected);
    }
    let n = tensor.dim();
    let k1 = (tensor.order() - 1) as i32;
    let shift = if tensor.diagonal().iter().any(|d| d.value == 0.0) {
        1.0
    } else {
        0.0
    };
    let mut x = vec![1.0f64; n];
    for _ in 0..max_iter {
        let xc: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let y = tensor.contract(&xc)?;
        let shifted: Vec<f64> = (0..n).map(|i| y[i].re + shift * x[i].powi(k1)).collect();
        let ratios: Vec<f64> = (0..n).map(|i| shifted[i] / x[i].powi(k1)).collect();
        let min_ratio = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let max_ratio = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if max_ratio - min_ratio <= tol * max_ratio.abs().max(1.0) {
            let rho = 0.5 * (max_ratio + min_ratio) - shift;
            return Ok((rho, x));
        }
        let mut next: Vec<f64> = shifted
            .iter()
            .map(|&v| v.max(0.0).powf(1.0 / k1 as f64))
            .collect();
        let norm = next.iter().copied().fold(0.0f64, f64::max);
        if norm == 0.0 || !norm.is_finite() {
            return Err(SolveError::NoConvergence { tol, max_iter });
        }
        for v in &mut next {
            *v /= norm;
        }
        x = next;
    }
    Err(SolveError::NoConvergence { tol, max_iter })
}

/// Dense eigendecomposition for the order-2 (graph) case: the independent
/// oracle for the homotopy route. Symmetric kinds go straight to a cyclic
/// Jacobi sweep; the row-scaled kinds are isospectral to their normalized
/// counterparts and are mapped there first.
#[derive(Debug, Clone)]
pub struct MatrixOracle {
    /// All `N` eigenvalues, ascending, with multiplicity.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors (columns) of the symmetrized matrix.
    pub eigenvectors: Vec<Vec<f64>>,
    /// The kind actually decomposed (differs for `RW`, `RW+`).
    pub decomposed_kind: TensorKind,
}

pub fn matrix_oracle(
    g: &WeightedHypergraph,
    kind: TensorKind,
) -> Result<MatrixOracle, SolveError> {
    if g.nabla() != 2 {
        return Err(SolveError::NotMatrix { order: g.nabla() });
    }
    let decomposed_kind = match kind {
        TensorKind::RandomWalk => TensorKind::Normalized,
        TensorKind::SignlessRandomWalk => TensorKind::SignlessNormalized,
        other => other,
    };
    let t = build(g, decomposed_kind)?;
    let n = t.dim();
    let mut matrix = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        matrix[i][i] = t.diagonal()[i].value;
        for entry in t.row(i) {
            let j = *entry
                .support
                .iter()
                .find(|&&v| v != i)
                .expect("2-uniform support");
            matrix[i][j] = entry.coeff.value;
        }
    }
    let (values, vectors) = linalg::jacobi_symmetric(&matrix);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let eigenvectors: Vec<Vec<f64>> = (0..n)
        .map(|row| order.iter().map(|&col| vectors[row][col]).collect())
        .collect();
    Ok(MatrixOracle {
        eigenvalues,
        eigenvectors,
        decomposed_kind,
    })
}

/// Distinct values of a real eigenvalue list under the dedup tolerance.
pub fn dedup_reals(values: &[f64], tol: f64) -> Vec<f64> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::new();
    for v in sorted {
        match out.last() {
            Some(&last) if (v - last).abs() <= tol * v.abs().max(1.0) => {}
            _ => out.push(v),
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Spectrum file format
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SpectrumFile {
    pub stats: SolveStats,
    pub eigenvalues: Vec<EigenvalueFileEntry>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct EigenvalueFileEntry {
    pub re: f64,
    pub im: f64,
    pub is_real: bool,
    pub from_singular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gm: Option<usize>,
    pub residual: f64,
}

impl SpectrumFile {
    pub fn from_report(report: &SpectrumReport) -> SpectrumFile {
        SpectrumFile {
            stats: report.stats.clone(),
            eigenvalues: report
                .eigenvalues
                .iter()
                .map(|e| EigenvalueFileEntry {
                    re: e.value.re,
                    im: e.value.im,
                    is_real: e.is_real,
                    from_singular: e.from_singular_endpoint,
                    gm: e.geometric_multiplicity,
                    residual: e.residual,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Two-column `re,im` scatter data for the complex plane.
pub fn plot_csv(report: &SpectrumReport) -> String {
    let mut out = String::from("re,im\n");
    for e in &report.eigenvalues {
        out.push_str(&format!("{},{}\n", e.value.re, e.value.im));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::hyperflower;
    use crate::testsupport::{c4, ex123, k2, path3};

    fn close(a: Complex64, re: f64, im: f64, tol: f64) -> bool {
        (a - Complex64::new(re, im)).norm() < tol
    }

    #[test]
    fn k2_adjacency_spectrum() {
        let t = build(&k2(), TensorKind::Adjacency).unwrap();
        let opts = SolveOptions::with_seed(7);
        let report = spectrum(&t, &opts).unwrap();
        assert_eq!(report.stats.paths_tracked, 4);
        let values = report.distinct_values();
        assert_eq!(values.len(), 2);
        assert!(close(values[0], -1.0, 0.0, 1e-9));
        assert!(close(values[1], 1.0, 0.0, 1e-9));
        assert!(report.eigenvalues.iter().all(|e| e.is_real));
        assert!(report.eigenvalues.iter().all(|e| e.residual < 1e-10));
    }

    #[test]
    fn c4_adjacency_spectrum_handles_multiple_eigenvalue() {
        // Oracle (characteristic polynomial of the 4-cycle): 2, 0, 0, -2.
        // gm(0) = 2 makes the sliced zero set positive-dimensional, so the
        // endgame has to finish those paths.
        let t = build(&c4(), TensorKind::Adjacency).unwrap();
        let opts = SolveOptions::with_seed(3);
        let report = spectrum(&t, &opts).unwrap();
        let values = report.distinct_values();
        assert_eq!(values.len(), 3, "{values:?}");
        assert!(close(values[0], -2.0, 0.0, 1e-8));
        assert!(close(values[1], 0.0, 0.0, 1e-8));
        assert!(close(values[2], 2.0, 0.0, 1e-8));
        // The zero eigenvalue only arises on the positive-dimensional
        // component, hence from singular endpoints.
        let zero = report.find(Complex64::new(0.0, 0.0), 1e-6).unwrap();
        assert!(zero.from_singular_endpoint);
    }

    #[test]
    fn hyperflower_32_adjacency_distinct_spectrum() {
        let t = build(&hyperflower(3, 2), TensorKind::Adjacency).unwrap();
        let opts = SolveOptions::with_seed(11);
        let report = spectrum(&t, &opts).unwrap();
        assert_eq!(report.stats.paths_tracked, 81);
        let values = report.distinct_values();
        // {0} and the three cube roots of 4.
        assert_eq!(values.len(), 4, "{values:?}");
        let r = 4f64.powf(1.0 / 3.0);
        let targets = [
            Complex64::new(0.0, 0.0),
            Complex64::new(r, 0.0),
            Complex64::from_polar(r, std::f64::consts::TAU / 3.0),
            Complex64::from_polar(r, -std::f64::consts::TAU / 3.0),
        ];
        for target in targets {
            assert!(
                values.iter().any(|v| (v - target).norm() < 1e-7),
                "missing {target}"
            );
        }
    }

    #[test]
    fn determinism_same_seed_same_report() {
        let t = build(&ex123(), TensorKind::Adjacency).unwrap();
        let opts = SolveOptions::with_seed(42);
        let a = spectrum(&t, &opts).unwrap();
        let b = spectrum(&t, &opts).unwrap();
        let fa = SpectrumFile::from_report(&a).to_json();
        let fb = SpectrumFile::from_report(&b).to_json();
        assert_eq!(fa, fb);
        // A different seed still gives the same distinct eigenvalues.
        let c = spectrum(&t, &SolveOptions::with_seed(43)).unwrap();
        assert_eq!(a.eigenvalues.len(), c.eigenvalues.len());
        for (x, y) in a.distinct_values().iter().zip(c.distinct_values()) {
            assert!((x - y).norm() < 1e-7);
        }
    }

    #[test]
    fn gm_of_simple_matrix_eigenvalue_is_one() {
        let t = build(&k2(), TensorKind::Adjacency).unwrap();
        let opts = SolveOptions::with_seed(5);
        let gm = geometric_multiplicity(&t, Complex64::new(1.0, 0.0), &opts).unwrap();
        assert_eq!(gm, 1);
    }

    #[test]
    fn gm_of_c4_zero_is_two() {
        let t = build(&c4(), TensorKind::Adjacency).unwrap();
        let opts = SolveOptions::with_seed(5);
        let gm = geometric_multiplicity(&t, Complex64::new(0.0, 0.0), &opts).unwrap();
        assert_eq!(gm, 2);
    }

    #[test]
    fn h_eigen_search_finds_the_all_ones_pairs() {
        // RW+ of a connected hypergraph has (2, all-ones); K has (0, all-ones).
        let opts = SolveOptions::with_seed(9);
        let rwp = build(&ex123(), TensorKind::SignlessRandomWalk).unwrap();
        let pairs = h_eigen_search(&rwp, &opts).unwrap();
        let found = pairs.iter().any(|p| {
            (p.lambda - 2.0).abs() < 1e-8 && {
                let norm = p.eigenvector.iter().cloned().fold(0.0f64, f64::max);
                p.eigenvector.iter().all(|&x| (x / norm - 1.0).abs() < 1e-6)
            }
        });
        assert!(found, "{pairs:?}");

        let k = build(&path3(), TensorKind::Kirchhoff).unwrap();
        let pairs = h_eigen_search(&k, &opts).unwrap();
        assert!(pairs.iter().any(|p| {
            p.lambda.abs() < 1e-8 && {
                let norm = p.eigenvector.iter().cloned().fold(0.0f64, f64::max);
                p.eigenvector.iter().all(|&x| (x / norm - 1.0).abs() < 1e-6)
            }
        }));
    }

    #[test]
    fn spectral_radius_of_signless_random_walk_is_two() {
        for g in [ex123(), hyperflower(3, 3), path3()] {
            let t = build(&g, TensorKind::SignlessRandomWalk).unwrap();
            let (rho, x) = spectral_radius_nonneg(&t, 1e-12, 100_000).unwrap();
            assert!((rho - 2.0).abs() < 1e-10);
            assert!(x.iter().all(|&v| (v - 1.0).abs() < 1e-8));
        }
    }

    #[test]
    fn spectral_radius_respects_preconditions() {
        let k = build(&ex123(), TensorKind::Kirchhoff).unwrap();
        assert!(matches!(
            spectral_radius_nonneg(&k, 1e-10, 1000),
            Err(SolveError::NotNonnegative { .. })
        ));
        let two = crate::testsupport::two_disjoint_edges();
        let a = build(&two, TensorKind::Adjacency).unwrap();
        assert!(matches!(
            spectral_radius_nonneg(&a, 1e-10, 1000),
            Err(SolveError::NotConnected)
        ));
    }

    #[test]
    fn spectral_radius_of_irregular_adjacency() {
        // ex:123 adjacency: delta = 2, Delta = 3; rho must land between.
        let a = build(&ex123(), TensorKind::Adjacency).unwrap();
        let (rho, x) = spectral_radius_nonneg(&a, 1e-12, 200_000).unwrap();
        assert!(rho >= 2.0 - 1e-9 && rho <= 3.0 + 1e-9, "{rho}");
        assert!(x.iter().all(|&v| v > 0.0));
        // Cross-check against the homotopy spectrum: rho equals the
        // largest eigenvalue modulus.
        let report = spectrum(&a, &SolveOptions::with_seed(2)).unwrap();
        let max_modulus = report
            .distinct_values()
            .iter()
            .map(|v| v.norm())
            .fold(0.0f64, f64::max);
        assert!((rho - max_modulus).abs() < 1e-7, "{rho} vs {max_modulus}");
    }

    #[test]
    fn matrix_oracle_values() {
        let o = matrix_oracle(&k2(), TensorKind::Adjacency).unwrap();
        assert_eq!(o.eigenvalues.len(), 2);
        assert!((o.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((o.eigenvalues[1] - 1.0).abs() < 1e-12);

        let o = matrix_oracle(&k2(), TensorKind::Normalized).unwrap();
        assert!((o.eigenvalues[0] - 0.0).abs() < 1e-12);
        assert!((o.eigenvalues[1] - 2.0).abs() < 1e-12);

        let o = matrix_oracle(&c4(), TensorKind::Adjacency).unwrap();
        let expected = [-2.0, 0.0, 0.0, 2.0];
        for (v, e) in o.eigenvalues.iter().zip(expected) {
            assert!((v - e).abs() < 1e-11);
        }

        // Order-2 precondition.
        assert!(matches!(
            matrix_oracle(&ex123(), TensorKind::Adjacency),
            Err(SolveError::NotMatrix { order: 3 })
        ));
    }

    #[test]
    fn solver_matches_oracle_on_small_graphs() {
        let opts = SolveOptions::with_seed(17);
        for (g, kind) in [
            (c4(), TensorKind::Adjacency),
            (path3(), TensorKind::Kirchhoff),
            (k2(), TensorKind::Normalized),
            (path3(), TensorKind::RandomWalk),
        ] {
            let t = build(&g, kind).unwrap();
            let report = spectrum(&t, &opts).unwrap();
            let oracle = matrix_oracle(&g, kind).unwrap();
            let oracle_distinct = dedup_reals(&oracle.eigenvalues, 1e-8);
            let solver_values = report.distinct_values();
            assert_eq!(
                solver_values.len(),
                oracle_distinct.len(),
                "kind {kind:?}: {solver_values:?} vs {oracle_distinct:?}"
            );
            for v in &solver_values {
                assert!(v.im.abs() < 1e-8);
                assert!(
                    oracle_distinct.iter().any(|o| (v.re - o).abs() < 1e-8),
                    "kind {kind:?}: {v} not in {oracle_distinct:?}"
                );
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let t = build(&ex123(), TensorKind::Adjacency).unwrap();
        let mut opts = SolveOptions::with_seed(1);
        opts.paths_budget = 10;
        let system = assemble(&t, 0, 1, SliceCoefficients::Complex);
        assert!(matches!(
            solve(&system, &opts),
            Err(SolveError::PathBudgetExceeded { required: 27, .. })
        ));
    }

    #[test]
    fn classify_empty_input_is_empty_report() {
        let t = build(&k2(), TensorKind::Adjacency).unwrap();
        let report = classify(&t, &[], &SolveOptions::default());
        assert!(report.eigenvalues.is_empty());
    }
}
