use hypergraph_spectra::spectra::*;
use hypergraph_spectra::spectra::track::*;
use hypergraph_spectra::tensor::{build, TensorKind};
use hypergraph_spectra::testsupport::protein;
use num::complex::Complex64;
use rand::{Rng, SeedableRng};

fn main() {
    let t = build(&protein(), TensorKind::Adjacency).unwrap();
    for attempt in [0u64, 1] {
        let j = 1usize;
        let seed = 5u64.wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(23) ^ (0xC3u64 ^ ((j as u64) << 8) ^ (attempt << 32)).wrapping_mul(0xD1B5_4A32_D192_ED03);
        let sys = assemble(&t, j, seed, SliceCoefficients::Complex);
        let square = sys.square(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(23) ^ 0xB2u64.wrapping_mul(0xD1B5_4A32_D192_ED03));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(23) ^ 0xA1u64.wrapping_mul(0xD1B5_4A32_D192_ED03));
        let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let gamma = Complex64::from_polar(1.0, angle);
        let topts = TrackOptions::default();
        let h = Homotopy::new(&square, gamma, &topts);
        println!("== seed5 gm attempt {attempt}");
        let mut nfail = 0; let mut nconv = 0; let mut nver = 0;
        for index in 0..square.total_paths() {
            let p = h.track(h.start_point(index));
            match &p.outcome {
                PathOutcome::Converged => {
                    nconv += 1;
                    let verified = square.verifies(&p.point, 1e-8);
                    if verified { nver += 1; }
                    if p.point[5].norm() < 1e-3 || verified {
                        println!("  path {index}: lam={:.3e} res={:.2e} wind={} cond={:.2e} verified={} vmax={:.2e} znorm={:.2e}",
                            p.point[5].norm(), p.residual, p.winding, p.condition, verified,
                            square.verify.iter().map(|v| v.eval(&p.point).norm()).fold(0.0f64, f64::max),
                            p.point.iter().map(|v| v.norm()).fold(0.0f64, f64::max));
                    }
                }
                PathOutcome::Failed(r) => {
                    nfail += 1;
                    if p.point.len() == 6 && (p.point[5].norm() < 1e-3) {
                        println!("  FAILED path {index} ({r}): lam={:.3e} res={:.2e} wind={} cond={:.2e} vmax={:.2e}",
                            p.point[5].norm(), p.residual, p.winding, p.condition,
                            square.verify.iter().map(|v| v.eval(&p.point).norm()).fold(0.0f64, f64::max));
                    }
                }
                _ => {}
            }
        }
        println!("  converged {nconv} verified {nver} failed {nfail}");
    }
}
