use hypergraph_spectra::spectra::*;
use hypergraph_spectra::tensor::{build, TensorKind};
use hypergraph_spectra::testsupport::protein;
use num::complex::Complex64;
use std::time::Instant;

fn main() {
    let t = build(&protein(), TensorKind::Adjacency).unwrap();
    for seed in [1u64, 2, 3] {
        let sys = assemble(&t, 0, seed, SliceCoefficients::Complex);
        let start = Instant::now();
        let out = solve(&sys, &SolveOptions::with_seed(seed)).unwrap();
        let report = classify_with_stats(&t, &out.results, &SolveOptions::with_seed(seed), out.stats.clone());
        println!("protein seed {seed}: {} distinct {} real; {:?} reasons {:?} in {:?}", report.eigenvalues.len(), report.real_values().len(), out.stats, out.failure_reasons, start.elapsed());
    }
    for seed in [1u64, 5, 9] {
        let start = Instant::now();
        match geometric_multiplicity_traced(&t, Complex64::new(0.0,0.0), &SolveOptions::with_seed(seed)) {
            Ok(trace) => println!("gm(0) seed {seed} = {} levels {:?} in {:?}", trace.multiplicity, trace.levels, start.elapsed()),
            Err(e) => println!("gm(0) seed {seed} ERROR {e}"),
        }
    }
}
