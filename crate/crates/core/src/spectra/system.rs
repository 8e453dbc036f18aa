//! Assembly of the eigenpair polynomial system.
//!
//! For an order-`k`, dimension-`n` tensor `T` the system consists of the
//! `n` polynomials `(T x^{k-1})_i - lambda x_i^{k-1}` in the variables
//! `x_1..x_n, lambda`, one generic affine slice in the `x` variables
//! (nonzero constant term, so it misses the trivial line `x = 0`), and
//! optionally further generic homogeneous linear slices used to probe
//! geometric multiplicity. Slice coefficients come from a seeded complex
//! (or real) Gaussian.
//!
//! With homogeneous slices present the system is overdetermined; it is
//! squared by absorbing the extra slices into the other equations with
//! random multipliers, and candidate solutions are re-verified against
//! the original slices afterwards.

use num::complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::hypergraph::compositions;
use crate::tensor::HypergraphTensor;

use super::poly::MPoly;

/// The eigenpair system plus its slicing hyperplanes.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    /// Tensor dimension: number of `x` variables.
    pub n: usize,
    /// Tensor order: the joint degree of each eigen polynomial.
    pub k: usize,
    /// `n` polynomials in `n + 1` variables (`lambda` is the last).
    pub eigen_polys: Vec<MPoly>,
    /// One affine slice followed by the homogeneous slices.
    pub slices: Vec<MPoly>,
    pub seed: u64,
}

/// Whether slice coefficients are complex or real Gaussians. Real slices
/// keep real isolated solutions real, which is what the H-eigenpair
/// search needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceCoefficients {
    Complex,
    Real,
}

fn gaussian(rng: &mut ChaCha8Rng, kind: SliceCoefficients) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    match kind {
        SliceCoefficients::Complex => {
            let im: f64 = StandardNormal.sample(rng);
            Complex64::new(re, im)
        }
        SliceCoefficients::Real => Complex64::new(re, 0.0),
    }
}

/// Expands the structured tensor rows into explicit eigen polynomials and
/// draws the slicing hyperplanes.
pub fn assemble(
    tensor: &HypergraphTensor,
    num_homogeneous_slices: usize,
    seed: u64,
    coefficients: SliceCoefficients,
) -> EigenSystem {
    let n = tensor.dim();
    let k = tensor.order();
    let nvars = n + 1;
    let lambda = n;
    let k1 = (k - 1) as u32;

    let mut eigen_polys = Vec::with_capacity(n);
    for i in 0..n {
        let mut p = MPoly::zero(nvars);
        let diag = tensor.diagonal()[i].value;
        if diag != 0.0 {
            let mut exps = vec![0u32; nvars];
            exps[i] = k1;
            p.push(Complex64::new(diag, 0.0), exps);
        }
        for entry in tensor.row(i) {
            let c = entry.coeff.value;
            let others: Vec<usize> = entry
                .support
                .iter()
                .copied()
                .filter(|&v| v != i)
                .collect();
            // Each tuple of k-1 indices drawn from the support and covering
            // support \ {i} contributes one monomial; group them by the
            // multiplicity vector and weight with the multinomial count.
            for total_others in others.len()..=(k - 1) {
                let remainder = (k - 1 - total_others) as u32;
                for comp in compositions(total_others, others.len()) {
                    let mut exps = vec![0u32; nvars];
                    exps[i] = remainder;
                    for (&v, &m) in others.iter().zip(&comp) {
                        exps[v] += m as u32;
                    }
                    let coeff = c * multinomial(k - 1, &exps[..n]);
                    p.push(Complex64::new(coeff, 0.0), exps);
                }
            }
        }
        // -lambda x_i^{k-1}
        let mut exps = vec![0u32; nvars];
        exps[i] = k1;
        exps[lambda] = 1;
        p.push(Complex64::new(-1.0, 0.0), exps);
        p.normalize();
        eigen_polys.push(p);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slices = Vec::with_capacity(1 + num_homogeneous_slices);
    for slice_index in 0..=num_homogeneous_slices {
        let mut p = MPoly::zero(nvars);
        // Gaussian direction, normalized. The affine slice gets a unit
        // constant term, which keeps the hyperplane at unit distance from
        // the trivial line x = 0 (sliced witness points otherwise drift
        // into its ill-conditioned neighborhood for unlucky draws); this
        // is a pure rescaling of the Gaussian hyperplane.
        let direction: Vec<Complex64> = (0..n).map(|_| gaussian(&mut rng, coefficients)).collect();
        let norm = direction.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        for (v, c) in direction.iter().enumerate() {
            let mut exps = vec![0u32; nvars];
            exps[v] = 1;
            p.push(c / norm, exps);
        }
        if slice_index == 0 {
            p.push(Complex64::new(1.0, 0.0), vec![0u32; nvars]);
        }
        p.normalize();
        slices.push(p);
    }

    EigenSystem {
        n,
        k,
        eigen_polys,
        slices,
        seed,
    }
}

fn multinomial(total: usize, exps: &[u32]) -> f64 {
    let mut value = 1.0f64;
    let mut remaining = total as u64;
    for &e in exps {
        for j in 1..=(e as u64) {
            value *= remaining as f64 / j as f64;
            remaining -= 1;
        }
    }
    value
}

/// A square system ready for total-degree tracking, with the symbolic
/// Jacobian and the original slices kept aside for verification.
#[derive(Debug, Clone)]
pub struct SquareSystem {
    pub nvars: usize,
    pub polys: Vec<MPoly>,
    pub degrees: Vec<u32>,
    pub jacobian: Vec<Vec<MPoly>>,
    /// Original slice polynomials that were absorbed by randomization;
    /// endpoints must vanish on these to count as solutions.
    pub verify: Vec<MPoly>,
}

impl EigenSystem {
    /// Bezout path count of the squared system: `k^n`.
    pub fn path_count(&self) -> u128 {
        (self.k as u128).saturating_pow(self.n as u32)
    }

    /// Squares the system. With only the affine slice present this is the
    /// system itself; with `j` extra homogeneous slices, those are folded
    /// into the other equations with seeded random multipliers (solutions
    /// of the full system survive; extra ones are filtered by `verify`).
    pub fn square(&self, randomization_seed: u64) -> SquareSystem {
        let nvars = self.n + 1;
        let mut polys: Vec<MPoly> = Vec::with_capacity(nvars);
        let mut verify: Vec<MPoly> = Vec::new();
        if self.slices.len() == 1 {
            polys.extend(self.eigen_polys.iter().cloned());
            polys.push(self.slices[0].clone());
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(randomization_seed);
            let extras = &self.slices[1..];
            for base in self
                .eigen_polys
                .iter()
                .chain(std::iter::once(&self.slices[0]))
            {
                let mut p = base.clone();
                for extra in extras {
                    p.axpy(gaussian(&mut rng, SliceCoefficients::Complex), extra);
                }
                polys.push(p);
            }
            verify.extend(extras.iter().cloned());
        }
        let degrees: Vec<u32> = polys.iter().map(MPoly::total_degree).collect();
        let jacobian = polys
            .iter()
            .map(|p| (0..nvars).map(|v| p.partial(v)).collect())
            .collect();
        SquareSystem {
            nvars,
            polys,
            degrees,
            jacobian,
            verify,
        }
    }
}

impl SquareSystem {
    pub fn eval(&self, z: &[Complex64]) -> Vec<Complex64> {
        self.polys.iter().map(|p| p.eval(z)).collect()
    }

    pub fn eval_jacobian(&self, z: &[Complex64]) -> super::linalg::CMat {
        let mut m = super::linalg::CMat::zeros(self.nvars);
        for (i, row) in self.jacobian.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                m.set(i, j, p.eval(z));
            }
        }
        m
    }

    pub fn total_paths(&self) -> u128 {
        self.degrees.iter().map(|&d| d as u128).product()
    }

    /// True when the point vanishes on every absorbed slice.
    pub fn verifies(&self, z: &[Complex64], tol: f64) -> bool {
        let scale = 1.0 + super::linalg::inf_norm_vec(z);
        self.verify.iter().all(|p| p.eval(z).norm() <= tol * scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{build, TensorKind};
    use crate::testsupport::{k2, protein};
    use rand::Rng;

    fn poly_as_map(p: &MPoly) -> std::collections::BTreeMap<Vec<u32>, f64> {
        p.terms
            .iter()
            .map(|t| (t.exps.clone(), t.coeff.re))
            .collect()
    }

    #[test]
    fn k2_system_is_the_matrix_pencil() {
        let a = build(&k2(), TensorKind::Adjacency).unwrap();
        let sys = assemble(&a, 0, 7, SliceCoefficients::Complex);
        assert_eq!(sys.eigen_polys.len(), 2);
        // x2 - lambda x1 and x1 - lambda x2 (variables x1, x2, lambda).
        let p0 = poly_as_map(&sys.eigen_polys[0]);
        assert_eq!(p0.get(&vec![0, 1, 0]), Some(&1.0));
        assert_eq!(p0.get(&vec![1, 0, 1]), Some(&-1.0));
        assert_eq!(p0.len(), 2);
        let p1 = poly_as_map(&sys.eigen_polys[1]);
        assert_eq!(p1.get(&vec![1, 0, 0]), Some(&1.0));
        assert_eq!(p1.get(&vec![0, 1, 1]), Some(&-1.0));
        assert_eq!(sys.slices.len(), 1);
        // Affine slice has a constant term.
        assert!(sys.slices[0]
            .terms
            .iter()
            .any(|t| t.exps.iter().all(|&e| e == 0)));
    }

    #[test]
    fn protein_system_matches_published_expansion() {
        // Adjacency tensor of the 4-uniform protein interaction example:
        // row 1 must expand to x2 x3 x4 + 3/7 x1^2 x5 + 3/7 x1 x5^2 + 1/7 x5^3
        // minus lambda x1^3 (variables x1..x5, lambda).
        let a = build(&protein(), TensorKind::Adjacency).unwrap();
        let sys = assemble(&a, 0, 7, SliceCoefficients::Complex);
        assert_eq!(sys.n, 5);
        assert_eq!(sys.k, 4);
        let tol = 1e-15;
        let check = |poly: &MPoly, expected: &[(Vec<u32>, f64)]| {
            let map = poly_as_map(poly);
            assert_eq!(map.len(), expected.len(), "{map:?}");
            for (exps, coeff) in expected {
                let got = map.get(exps).unwrap_or_else(|| panic!("missing {exps:?}"));
                assert!((got - coeff).abs() < tol, "{exps:?}: {got} vs {coeff}");
            }
        };
        let s = |a: u32, b: u32, c: u32, d: u32, e: u32, l: u32| vec![a, b, c, d, e, l];
        check(
            &sys.eigen_polys[0],
            &[
                (s(0, 1, 1, 1, 0, 0), 1.0),
                (s(2, 0, 0, 0, 1, 0), 3.0 / 7.0),
                (s(1, 0, 0, 0, 2, 0), 3.0 / 7.0),
                (s(0, 0, 0, 0, 3, 0), 1.0 / 7.0),
                (s(3, 0, 0, 0, 0, 1), -1.0),
            ],
        );
        check(
            &sys.eigen_polys[1],
            &[
                (s(1, 0, 1, 1, 0, 0), 1.0),
                (s(0, 3, 0, 0, 0, 1), -1.0),
            ],
        );
        check(
            &sys.eigen_polys[2],
            &[
                (s(1, 1, 0, 1, 0, 0), 1.0),
                (s(0, 0, 2, 0, 1, 0), 3.0 / 7.0),
                (s(0, 0, 1, 0, 2, 0), 3.0 / 7.0),
                (s(0, 0, 0, 0, 3, 0), 1.0 / 7.0),
                (s(0, 0, 3, 0, 0, 1), -1.0),
            ],
        );
        check(
            &sys.eigen_polys[3],
            &[
                (s(1, 1, 1, 0, 0, 0), 1.0),
                (s(0, 0, 0, 3, 0, 1), -1.0),
            ],
        );
        check(
            &sys.eigen_polys[4],
            &[
                (s(3, 0, 0, 0, 0, 0), 1.0 / 7.0),
                (s(0, 0, 3, 0, 0, 0), 1.0 / 7.0),
                (s(2, 0, 0, 0, 1, 0), 3.0 / 7.0),
                (s(0, 0, 2, 0, 1, 0), 3.0 / 7.0),
                (s(1, 0, 0, 0, 2, 0), 3.0 / 7.0),
                (s(0, 0, 1, 0, 2, 0), 3.0 / 7.0),
                (s(0, 0, 0, 0, 3, 1), -1.0),
            ],
        );
        // Joint degree k in (x, lambda); degree k-1 in x alone.
        let xvars: Vec<usize> = (0..5).collect();
        for p in &sys.eigen_polys {
            assert_eq!(p.total_degree(), 4);
            assert_eq!(p.degree_in(&xvars), 3);
        }
        assert_eq!(sys.path_count(), 1024);
    }

    #[test]
    fn expanded_polynomials_match_structured_contraction() {
        // Evaluating the expanded system at random points must agree with
        // the inclusion-exclusion contraction minus lambda x^[k-1].
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for g in [
            crate::hypergraph::hyperflower(3, 2),
            crate::testsupport::ex123(),
            protein(),
        ] {
            for kind in [TensorKind::Adjacency, TensorKind::RandomWalk, TensorKind::Normalized] {
                let t = build(&g, kind).unwrap();
                let sys = assemble(&t, 0, 5, SliceCoefficients::Complex);
                let n = t.dim();
                for _ in 0..5 {
                    let z: Vec<Complex64> = (0..=n)
                        .map(|_| {
                            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                        })
                        .collect();
                    let x = &z[..n];
                    let lambda = z[n];
                    let contracted = t.contract(x).unwrap();
                    for (i, p) in sys.eigen_polys.iter().enumerate() {
                        let expected =
                            contracted[i] - lambda * x[i].powu((t.order() - 1) as u32);
                        let got = p.eval(&z);
                        assert!(
                            (expected - got).norm() < 1e-10 * (1.0 + expected.norm()),
                            "row {i}: {got} vs {expected}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn real_slices_have_real_coefficients() {
        let a = build(&k2(), TensorKind::Adjacency).unwrap();
        let sys = assemble(&a, 2, 11, SliceCoefficients::Real);
        for slice in &sys.slices {
            for term in &slice.terms {
                assert_eq!(term.coeff.im, 0.0);
            }
        }
        assert_eq!(sys.slices.len(), 3);
        // Homogeneous slices have no constant term.
        for slice in &sys.slices[1..] {
            assert!(slice.terms.iter().all(|t| t.exps.iter().any(|&e| e > 0)));
        }
    }

    #[test]
    fn squaring_keeps_bezout_count_and_verification() {
        let a = build(&k2(), TensorKind::Adjacency).unwrap();
        let sys = assemble(&a, 2, 11, SliceCoefficients::Complex);
        let square = sys.square(4242);
        assert_eq!(square.polys.len(), 3);
        assert_eq!(square.degrees, vec![2, 2, 1]);
        assert_eq!(square.total_paths(), 4);
        assert_eq!(square.verify.len(), 2);
        // A point on all original slices verifies; a generic point does not.
        let z = [
            Complex64::new(0.3, -0.2),
            Complex64::new(1.0, 0.4),
            Complex64::new(0.0, 0.0),
        ];
        assert!(!square.verifies(&z, 1e-6));
    }

    #[test]
    fn same_seed_same_system() {
        let a = build(&protein(), TensorKind::Adjacency).unwrap();
        let s1 = assemble(&a, 1, 123, SliceCoefficients::Complex);
        let s2 = assemble(&a, 1, 123, SliceCoefficients::Complex);
        assert_eq!(s1.slices, s2.slices);
        let s3 = assemble(&a, 1, 124, SliceCoefficients::Complex);
        assert_ne!(s1.slices, s3.slices);
    }
}
