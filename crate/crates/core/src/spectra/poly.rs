//! Sparse multivariate polynomials over the complex numbers, just enough
//! for assembling and tracking the eigenpair system: evaluation, symbolic
//! partial derivatives, and joint degrees.

use num::complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    pub exps: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MPoly {
    pub nvars: usize,
    pub terms: Vec<Term>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        MPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Complex64) -> MPoly {
        let mut p = MPoly::zero(nvars);
        p.push(c, vec![0; nvars]);
        p.normalize();
        p
    }

    /// Appends a term without merging; call [`MPoly::normalize`] afterwards.
    pub fn push(&mut self, coeff: Complex64, exps: Vec<u32>) {
        debug_assert_eq!(exps.len(), self.nvars);
        self.terms.push(Term { coeff, exps });
    }

    /// Merges equal exponent vectors, drops zero terms, sorts terms into a
    /// canonical (graded-lexicographic) order.
    pub fn normalize(&mut self) {
        self.terms.sort_by(|a, b| {
            let da: u32 = a.exps.iter().sum();
            let db: u32 = b.exps.iter().sum();
            db.cmp(&da).then_with(|| b.exps.cmp(&a.exps))
        });
        let mut merged: Vec<Term> = Vec::with_capacity(self.terms.len());
        for term in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last) if last.exps == term.exps => last.coeff += term.coeff,
                _ => merged.push(term),
            }
        }
        merged.retain(|t| t.coeff.norm() != 0.0);
        self.terms = merged;
    }

    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        debug_assert_eq!(z.len(), self.nvars);
        let mut acc = Complex64::new(0.0, 0.0);
        for term in &self.terms {
            let mut prod = term.coeff;
            for (v, &e) in term.exps.iter().enumerate() {
                if e > 0 {
                    prod *= z[v].powu(e);
                }
            }
            acc += prod;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for term in &self.terms {
            let e = term.exps[var];
            if e == 0 {
                continue;
            }
            let mut exps = term.exps.clone();
            exps[var] = e - 1;
            out.push(term.coeff * e as f64, exps);
        }
        out.normalize();
        out
    }

    /// Joint degree over all variables.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.exps.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Degree counting only the listed variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        self.terms
            .iter()
            .map(|t| vars.iter().map(|&v| t.exps[v]).sum())
            .max()
            .unwrap_or(0)
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: Complex64, other: &MPoly) {
        debug_assert_eq!(self.nvars, other.nvars);
        for term in &other.terms {
            self.push(c * term.coeff, term.exps.clone());
        }
        self.normalize();
    }
}
