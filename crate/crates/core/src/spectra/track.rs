//! Total-degree homotopy path tracking.
//!
//! The start system is the product system `z_i^{d_i} - 1` with the gamma
//! trick: `H(z, t) = (1 - t) gamma S(z) + t F(z)`, tracked from `t = 0`
//! to `t = 1` with a fourth-order Runge-Kutta predictor on the Davidenko
//! equation and a short Newton corrector per step. Endpoints are
//! Newton-refined at `t = 1`; paths whose endpoint refinement stalls are
//! finished with a Cauchy-loop endgame around `t = 1`, which also yields
//! the winding number estimate. Paths leaving a norm ball are reported as
//! divergent (the Bezout count overshoots the actual root count, so these
//! are expected), and genuine tracking failures are counted, never
//! silently dropped.

use num::complex::Complex64;

use super::linalg::{condition_inf, inf_norm_vec, CMat};
use super::system::SquareSystem;

#[derive(Debug, Clone)]
pub struct TrackOptions {
    /// Initial step in `t`.
    pub initial_step: f64,
    /// Largest step in `t`.
    pub max_step: f64,
    /// Below this step the path is considered stalled.
    pub min_step: f64,
    /// Newton corrections per predictor step.
    pub max_newton: usize,
    /// Relative corrector tolerance on the Newton update norm.
    pub corrector_tol: f64,
    /// Hard cap on accepted steps per path.
    pub max_steps: usize,
    /// Points beyond this max-norm are divergent.
    pub diverge_threshold: f64,
    /// Radius of the Cauchy endgame circle around `t = 1`; also the
    /// checkpoint the endgame restarts from.
    pub endgame_radius: f64,
    /// A larger first-attempt circle: better conditioned when it works
    /// (the loop mean is radius-independent for a closed loop).
    pub endgame_radius_outer: f64,
    /// Plain tracking hands over to endpoint refinement at `1 - near_one`.
    pub near_one: f64,
    /// Samples per endgame loop (trapezoidal Cauchy integral).
    pub endgame_samples: usize,
    /// Maximum winding number attempted by the endgame.
    pub max_winding: usize,
    /// Relative tolerance for deciding an endgame loop has closed.
    pub closure_tol: f64,
    /// Target residual for endpoint refinement (relative to the system
    /// scale at the endpoint).
    pub refine_tol: f64,
    /// Newton-step bound (first-order endpoint error estimate) for
    /// accepting a directly refined endpoint without the endgame.
    pub refine_step_tol: f64,
    /// Residual threshold (same scaling) for calling a path converged.
    pub accept_tol: f64,
    /// Jacobian condition number separating singular endpoints.
    pub singular_condition: f64,
}

impl Default for TrackOptions {
    fn default() -> Self {
        TrackOptions {
            initial_step: 0.05,
            max_step: 0.1,
            min_step: 1e-14,
            max_newton: 3,
            corrector_tol: 1e-10,
            max_steps: 10_000,
            diverge_threshold: 1e6,
            endgame_radius: 1e-4,
            endgame_radius_outer: 1e-3,
            near_one: 1e-6,
            endgame_samples: 32,
            max_winding: 24,
            closure_tol: 1e-6,
            refine_tol: 1e-11,
            refine_step_tol: 1e-9,
            accept_tol: 1e-8,
            singular_condition: 1e12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathOutcome {
    /// Endpoint accepted (residual within tolerance).
    Converged,
    /// Left the norm ball; counts toward the Bezout overshoot.
    Diverged,
    /// Tracking or endgame breakdown; counted and reported.
    Failed(&'static str),
}

#[derive(Debug, Clone)]
pub struct TrackedPath {
    pub outcome: PathOutcome,
    /// Final point `(x_1..x_n, lambda)`; meaningful only when converged.
    pub point: Vec<Complex64>,
    pub winding: usize,
    pub condition: f64,
    pub residual: f64,
    pub singular: bool,
    pub steps: usize,
}

impl TrackedPath {
    fn failure(reason: &'static str, steps: usize) -> TrackedPath {
        TrackedPath {
            outcome: PathOutcome::Failed(reason),
            point: Vec::new(),
            winding: 0,
            condition: f64::NAN,
            residual: f64::NAN,
            singular: false,
            steps,
        }
    }

    fn divergent(steps: usize) -> TrackedPath {
        TrackedPath {
            outcome: PathOutcome::Diverged,
            point: Vec::new(),
            winding: 0,
            condition: f64::NAN,
            residual: f64::NAN,
            singular: false,
            steps,
        }
    }
}

/// The homotopy between the product start system and the target.
pub struct Homotopy<'a> {
    pub target: &'a SquareSystem,
    pub gamma: Complex64,
    pub opts: &'a TrackOptions,
}

impl<'a> Homotopy<'a> {
    pub fn new(target: &'a SquareSystem, gamma: Complex64, opts: &'a TrackOptions) -> Self {
        Homotopy {
            target,
            gamma,
            opts,
        }
    }

    /// Start point for a path index in mixed-radix digits over the degrees.
    pub fn start_point(&self, mut index: u128) -> Vec<Complex64> {
        self.target
            .degrees
            .iter()
            .map(|&d| {
                let digit = (index % d as u128) as f64;
                index /= d as u128;
                let angle = std::f64::consts::TAU * digit / d as f64;
                Complex64::new(angle.cos(), angle.sin())
            })
            .collect()
    }

    fn eval_h(&self, z: &[Complex64], t: Complex64) -> Vec<Complex64> {
        let f = self.target.eval(z);
        let one = Complex64::new(1.0, 0.0);
        self.target
            .degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let s = z[i].powu(d) - one;
                (one - t) * self.gamma * s + t * f[i]
            })
            .collect()
    }

    fn jac_h(&self, z: &[Complex64], t: Complex64) -> CMat {
        let mut m = self.target.eval_jacobian(z);
        let n = m.n;
        let one = Complex64::new(1.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                let mut v = t * m.at(i, j);
                if i == j {
                    let d = self.target.degrees[i];
                    v += (one - t) * self.gamma * d as f64 * z[i].powu(d - 1);
                }
                m.set(i, j, v);
            }
        }
        m
    }

    fn dh_dt(&self, z: &[Complex64]) -> Vec<Complex64> {
        let f = self.target.eval(z);
        let one = Complex64::new(1.0, 0.0);
        self.target
            .degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let s = z[i].powu(d) - one;
                f[i] - self.gamma * s
            })
            .collect()
    }

    /// `dz/dt = -H_z^{-1} H_t`, scaled by `dt` (which may be complex on
    /// endgame arcs).
    fn velocity(&self, z: &[Complex64], t: Complex64, dt: Complex64) -> Option<Vec<Complex64>> {
        let lu = self.jac_h(z, t).lu()?;
        let ht = self.dh_dt(z);
        let rhs: Vec<Complex64> = ht.iter().map(|v| -v * dt).collect();
        Some(lu.solve(&rhs))
    }

    fn rk4(&self, z: &[Complex64], t: Complex64, dt: Complex64) -> Option<Vec<Complex64>> {
        let half = dt * 0.5;
        let k1 = self.velocity(z, t, dt)?;
        let z2: Vec<Complex64> = z.iter().zip(&k1).map(|(a, b)| a + b * 0.5).collect();
        let k2 = self.velocity(&z2, t + half, dt)?;
        let z3: Vec<Complex64> = z.iter().zip(&k2).map(|(a, b)| a + b * 0.5).collect();
        let k3 = self.velocity(&z3, t + half, dt)?;
        let z4: Vec<Complex64> = z.iter().zip(&k3).map(|(a, b)| a + b).collect();
        let k4 = self.velocity(&z4, t + dt, dt)?;
        Some(
            (0..z.len())
                .map(|i| z[i] + (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) / 6.0)
                .collect(),
        )
    }

    /// Newton iterations on `H(., t)`; `Some((point, iters))` on contraction.
    fn correct(
        &self,
        start: &[Complex64],
        t: Complex64,
        max_iters: usize,
    ) -> Option<(Vec<Complex64>, usize)> {
        let mut z = start.to_vec();
        for iter in 1..=max_iters {
            let lu = self.jac_h(&z, t).lu()?;
            let h = self.eval_h(&z, t);
            let rhs: Vec<Complex64> = h.iter().map(|v| -v).collect();
            let delta = lu.solve(&rhs);
            for (zi, di) in z.iter_mut().zip(&delta) {
                *zi += di;
            }
            let step = inf_norm_vec(&delta);
            if !step.is_finite() {
                return None;
            }
            if step <= self.opts.corrector_tol * (1.0 + inf_norm_vec(&z)) {
                return Some((z, iter));
            }
        }
        None
    }

    /// Residual scale: coefficients are O(1)-O(degrees), values grow like
    /// `|z|^degree`.
    fn residual_scale(&self, z: &[Complex64]) -> f64 {
        let max_degree = self.target.degrees.iter().copied().max().unwrap_or(1);
        (1.0 + inf_norm_vec(z)).powi(max_degree as i32)
    }

    fn target_residual(&self, z: &[Complex64]) -> f64 {
        inf_norm_vec(&self.target.eval(z))
    }

    /// Newton on the target system at `t = 1`. Returns the best point seen,
    /// its residual, and the update norm that produced it (a first-order
    /// estimate of the endpoint error; it stagnates near multiple roots,
    /// which is exactly when the endgame must take over).
    fn refine_endpoint(&self, start: &[Complex64], max_iters: usize) -> (Vec<Complex64>, f64, f64) {
        let mut z = start.to_vec();
        let mut best = z.clone();
        let mut best_res = self.target_residual(&z);
        let mut best_step = f64::INFINITY;
        for _ in 0..max_iters {
            let Some(lu) = self.target.eval_jacobian(&z).lu() else {
                break;
            };
            let f = self.target.eval(&z);
            let rhs: Vec<Complex64> = f.iter().map(|v| -v).collect();
            let delta = lu.solve(&rhs);
            // Backtracking on the residual: full Newton steps overshoot
            // near multiple roots, fractional steps still descend.
            let current_res = self.target_residual(&z);
            let mut alpha = 1.0f64;
            let mut accepted = None;
            for _ in 0..6 {
                let trial: Vec<Complex64> = z
                    .iter()
                    .zip(&delta)
                    .map(|(zi, di)| zi + di * alpha)
                    .collect();
                let res = self.target_residual(&trial);
                if res.is_finite() && res < current_res {
                    accepted = Some((trial, res));
                    break;
                }
                alpha *= 0.5;
            }
            let Some((trial, res)) = accepted else {
                break;
            };
            z = trial;
            let step = alpha * inf_norm_vec(&delta);
            if res <= best_res {
                best_res = res;
                best = z.clone();
                best_step = step;
            }
            if step <= 1e-15 * (1.0 + inf_norm_vec(&z)) {
                break;
            }
        }
        (best, best_res, best_step)
    }

    /// Tracks one start point all the way to its classified endpoint.
    pub fn track(&self, start: Vec<Complex64>) -> TrackedPath {
        let opts = self.opts;
        let t_outer = 1.0 - opts.endgame_radius_outer;
        let t_checkpoint = 1.0 - opts.endgame_radius;
        let t_near = 1.0 - opts.near_one;
        let mut z = start;
        let mut t = 0.0f64;
        let mut h = opts.initial_step;
        let mut outer_anchor: Option<Vec<Complex64>> = None;
        let mut checkpoint: Option<Vec<Complex64>> = None;
        let mut checkpoint_norm = f64::INFINITY;
        let mut steps = 0usize;

        loop {
            steps += 1;
            if steps > opts.max_steps {
                return TrackedPath::failure("step budget exhausted", steps);
            }
            let landing = if t < t_outer {
                t_outer
            } else if t < t_checkpoint {
                t_checkpoint
            } else {
                t_near
            };
            let (h_eff, lands) = if t + h >= landing {
                (landing - t, true)
            } else {
                (h, false)
            };
            let t_next = if lands { landing } else { t + h_eff };
            let tc = Complex64::new(t, 0.0);
            let accepted = self
                .rk4(&z, tc, Complex64::new(h_eff, 0.0))
                .and_then(|pred| self.correct(&pred, Complex64::new(t_next, 0.0), opts.max_newton));
            match accepted {
                Some((z_new, iters)) => {
                    z = z_new;
                    t = t_next;
                    if inf_norm_vec(&z) > opts.diverge_threshold {
                        return TrackedPath::divergent(steps);
                    }
                    if (t - t_outer).abs() < f64::EPSILON {
                        outer_anchor = Some(z.clone());
                    }
                    if (t - t_checkpoint).abs() < f64::EPSILON {
                        checkpoint_norm = inf_norm_vec(&z);
                        checkpoint = Some(z.clone());
                    }
                    if t >= t_near - f64::EPSILON {
                        break;
                    }
                    if iters <= 1 {
                        h = (h * 2.0).min(opts.max_step);
                    } else if iters >= opts.max_newton {
                        h *= 0.7;
                    }
                }
                None => {
                    if inf_norm_vec(&z) > opts.diverge_threshold {
                        return TrackedPath::divergent(steps);
                    }
                    h *= 0.5;
                    if h < opts.min_step {
                        return if checkpoint.is_some() || outer_anchor.is_some() {
                            self.finish_with_endgame(outer_anchor, checkpoint, steps)
                        } else if inf_norm_vec(&z) > opts.diverge_threshold.sqrt() {
                            TrackedPath::divergent(steps)
                        } else {
                            TrackedPath::failure("stalled before endgame zone", steps)
                        };
                    }
                }
            }
        }

        // A path with a finite limit has essentially constant norm across
        // the endgame zone; strong growth between the checkpoint and
        // `t_near` marks a pole.
        let near_norm = inf_norm_vec(&z);
        if near_norm > 1e3 && near_norm > 20.0 * checkpoint_norm {
            return TrackedPath::divergent(steps);
        }

        // Direct endpoint refinement.
        let (refined, residual, step) = self.refine_endpoint(&z, 12);
        let scale = self.residual_scale(&refined);
        if residual <= opts.refine_tol * scale
            && step <= opts.refine_step_tol * (1.0 + inf_norm_vec(&refined))
        {
            let condition = condition_inf(&self.target.eval_jacobian(&refined));
            let singular = condition > opts.singular_condition;
            return TrackedPath {
                outcome: PathOutcome::Converged,
                point: refined,
                winding: 1,
                condition,
                residual,
                singular,
                steps,
            };
        }
        if checkpoint.is_some() || outer_anchor.is_some() {
            self.finish_with_endgame(outer_anchor, checkpoint, steps)
        } else {
            TrackedPath::failure("no checkpoint for endgame", steps)
        }
    }

    fn finish_with_endgame(
        &self,
        outer_anchor: Option<Vec<Complex64>>,
        checkpoint: Option<Vec<Complex64>>,
        steps: usize,
    ) -> TrackedPath {
        let opts = self.opts;
        // Radius ladder. The loop mean is radius-independent once the loop
        // closes, and larger circles are better conditioned; smaller ones
        // avoid enclosing nearby branch points. Each attempt is judged by
        // closure plus the endpoint residual, so a bad radius falls
        // through to the next.
        let mut attempts: Vec<(Vec<Complex64>, f64)> = Vec::new();
        if let Some(a) = outer_anchor {
            attempts.push((a, opts.endgame_radius_outer));
        }
        if let Some(a) = &checkpoint {
            attempts.push((a.clone(), opts.endgame_radius));
        }
        if let Some(a) = checkpoint {
            let r2 = opts.endgame_radius * 0.311;
            if let Some(inner) = self.track_real_segment(a, 1.0 - opts.endgame_radius, 1.0 - r2) {
                attempts.push((inner, r2));
            }
        }
        let mut best_failure: Option<TrackedPath> = None;
        for (anchor, radius) in attempts {
            let candidate = match self.cauchy_loop(&anchor, radius) {
                EndgameResult::Closed {
                    endpoint,
                    winding,
                    max_norm,
                } => Some((endpoint, winding, max_norm)),
                EndgameResult::Drifted { endpoint, max_norm } => {
                    // Winding unknown; report the largest attempted.
                    Some((endpoint, opts.max_winding, max_norm))
                }
                EndgameResult::Diverged => return TrackedPath::divergent(steps),
                EndgameResult::Broke => None,
            };
            if let Some((endpoint, winding, max_norm)) = candidate {
                let tp = self.classify_endgame_endpoint(endpoint, winding, max_norm, steps);
                match tp.outcome {
                    PathOutcome::Converged | PathOutcome::Diverged => return tp,
                    PathOutcome::Failed(_) => {
                        if best_failure
                            .as_ref()
                            .map(|b| !tp.residual.is_nan() && tp.residual < b.residual)
                            .unwrap_or(true)
                        {
                            best_failure = Some(tp);
                        }
                    }
                }
            }
        }
        best_failure
            .unwrap_or_else(|| TrackedPath::failure("endgame loop did not close", steps))
    }

    fn classify_endgame_endpoint(
        &self,
        endpoint: Vec<Complex64>,
        winding: usize,
        max_norm: f64,
        steps: usize,
    ) -> TrackedPath {
        let opts = self.opts;
        // Polish only helps nonsingular stalls; keep whichever residual wins.
        let (polished, polished_res, _) = self.refine_endpoint(&endpoint, 6);
        let raw_res = self.target_residual(&endpoint);
        let (point, residual) = if polished_res < raw_res {
            (polished, polished_res)
        } else {
            (endpoint, raw_res)
        };
        let condition = condition_inf(&self.target.eval_jacobian(&point));
        let singular = condition > opts.singular_condition || winding > 1;
        let scale = self.residual_scale(&point);
        let outcome = if residual <= opts.accept_tol * scale {
            PathOutcome::Converged
        } else if max_norm > 1e3 * (1.0 + inf_norm_vec(&point)) {
            // The loop closed around a pole: the Cauchy mean cancels the
            // negative powers and leaves a finite non-solution. The path
            // has no finite limit.
            return TrackedPath::divergent(steps);
        } else {
            PathOutcome::Failed("endgame endpoint residual too large")
        };
        TrackedPath {
            outcome,
            point,
            winding,
            condition,
            residual,
            singular,
            steps,
        }
    }

    /// Adaptive real-`t` tracking of a short segment (used before a
    /// smaller endgame circle).
    fn track_real_segment(
        &self,
        mut z: Vec<Complex64>,
        t_from: f64,
        t_to: f64,
    ) -> Option<Vec<Complex64>> {
        let mut t = t_from;
        let mut h = (t_to - t_from) / 8.0;
        let mut guard = 0;
        while t < t_to {
            guard += 1;
            if guard > 4000 {
                return None;
            }
            let h_eff = h.min(t_to - t);
            let t_next = t + h_eff;
            let step = self
                .rk4(&z, Complex64::new(t, 0.0), Complex64::new(h_eff, 0.0))
                .and_then(|p| self.correct(&p, Complex64::new(t_next, 0.0), self.opts.max_newton));
            match step {
                Some((z_new, _)) => {
                    z = z_new;
                    t = t_next;
                }
                None => {
                    h *= 0.5;
                    if h < self.opts.min_step {
                        return None;
                    }
                }
            }
        }
        Some(z)
    }

    /// Tracks loops around `t = 1 - r e^{i theta}` until the path closes,
    /// averaging equally spaced samples (the trapezoidal Cauchy integral,
    /// which recovers the limit point exactly for a closed loop).
    ///
    /// Paths landing on a positive-dimensional component may drift along
    /// the component (the corrector has a null direction there) and never
    /// close numerically. The coordinates that matter are still carried by
    /// every sample, so the mean of the last full loop is returned as a
    /// salvage endpoint and judged by its residual.
    fn cauchy_loop(&self, anchor: &[Complex64], r: f64) -> EndgameResult {
        let opts = self.opts;
        let m = opts.endgame_samples;
        let mut z = anchor.to_vec();
        let mut sum = vec![Complex64::new(0.0, 0.0); z.len()];
        let mut last_loop_sum = vec![Complex64::new(0.0, 0.0); z.len()];
        let mut count = 0usize;
        let mut max_norm = inf_norm_vec(&z);
        for loop_index in 0..opts.max_winding {
            for v in &mut last_loop_sum {
                *v = Complex64::new(0.0, 0.0);
            }
            for s in 0..m {
                let theta0 = std::f64::consts::TAU * (loop_index as f64 + s as f64 / m as f64);
                let theta1 = theta0 + std::f64::consts::TAU / m as f64;
                if !self.track_arc(&mut z, theta0, theta1, r, 0) {
                    return EndgameResult::Broke;
                }
                let norm = inf_norm_vec(&z);
                max_norm = max_norm.max(norm);
                if norm > opts.diverge_threshold {
                    return EndgameResult::Diverged;
                }
                for (acc, v) in sum.iter_mut().zip(&z) {
                    *acc += v;
                }
                for (acc, v) in last_loop_sum.iter_mut().zip(&z) {
                    *acc += v;
                }
                count += 1;
            }
            let dist = z
                .iter()
                .zip(anchor)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            if dist <= opts.closure_tol * (1.0 + inf_norm_vec(anchor)) {
                let endpoint = sum.iter().map(|v| v / count as f64).collect();
                return EndgameResult::Closed {
                    endpoint,
                    winding: loop_index + 1,
                    max_norm,
                };
            }
        }
        EndgameResult::Drifted {
            endpoint: last_loop_sum.iter().map(|v| v / m as f64).collect(),
            max_norm,
        }
    }

    /// One corrected arc step on the endgame circle, splitting recursively
    /// when the corrector rejects.
    fn track_arc(&self, z: &mut Vec<Complex64>, theta0: f64, theta1: f64, r: f64, depth: usize) -> bool {
        let t_of = |theta: f64| {
            Complex64::new(1.0, 0.0)
                - Complex64::new(r, 0.0) * Complex64::new(theta.cos(), theta.sin())
        };
        // dt = t(theta1) - t(theta0) drives the predictor; correction happens
        // at the exact landing parameter.
        let t0 = t_of(theta0);
        let t1 = t_of(theta1);
        let dt = t1 - t0;
        let step = self
            .rk4(z, t0, dt)
            .and_then(|p| self.correct(&p, t1, self.opts.max_newton + 1));
        match step {
            Some((z_new, _)) => {
                *z = z_new;
                true
            }
            None => {
                if depth >= 8 {
                    return false;
                }
                let mid = 0.5 * (theta0 + theta1);
                self.track_arc(z, theta0, mid, r, depth + 1)
                    && self.track_arc(z, mid, theta1, r, depth + 1)
            }
        }
    }
}

enum EndgameResult {
    Closed {
        endpoint: Vec<Complex64>,
        winding: usize,
        max_norm: f64,
    },
    /// Loops never closed; the last-loop mean is offered for salvage.
    Drifted {
        endpoint: Vec<Complex64>,
        max_norm: f64,
    },
    Diverged,
    Broke,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::system::{assemble, SliceCoefficients};
    use crate::tensor::{build, TensorKind};
    use crate::testsupport::k2;

    #[test]
    fn start_points_enumerate_roots_of_unity() {
        let a = build(&k2(), TensorKind::Adjacency).unwrap();
        let sys = assemble(&a, 0, 3, SliceCoefficients::Complex).square(0);
        let opts = TrackOptions::default();
        let h = Homotopy::new(&sys, Complex64::new(0.6, 0.8), &opts);
        assert_eq!(sys.total_paths(), 4);
        for index in 0..4u128 {
            let z = h.start_point(index);
            for (zi, &d) in z.iter().zip(&sys.degrees) {
                assert!((zi.powu(d) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
            }
        }
        // All start points distinct.
        let pts: Vec<_> = (0..4u128).map(|i| h.start_point(i)).collect();
        for i in 0..4 {
            for j in (i + 1)..4 {
                let d: f64 = pts[i]
                    .iter()
                    .zip(&pts[j])
                    .map(|(a, b)| (a - b).norm())
                    .sum();
                assert!(d > 1e-9);
            }
        }
    }

    #[test]
    fn tracks_k2_adjacency_paths() {
        let a = build(&k2(), TensorKind::Adjacency).unwrap();
        let square = assemble(&a, 0, 3, SliceCoefficients::Complex).square(0);
        let opts = TrackOptions::default();
        let h = Homotopy::new(&square, Complex64::from_polar(1.0, 0.83), &opts);
        let mut lambdas = Vec::new();
        for index in 0..square.total_paths() {
            let path = h.track(h.start_point(index));
            if path.outcome == PathOutcome::Converged {
                lambdas.push(path.point[2]);
                assert!(path.residual < 1e-9);
                assert!(!path.singular);
            }
        }
        // The two eigenvalues 1 and -1 appear; the other paths diverge.
        assert!(lambdas
            .iter()
            .any(|l| (l - Complex64::new(1.0, 0.0)).norm() < 1e-8));
        assert!(lambdas
            .iter()
            .any(|l| (l + Complex64::new(1.0, 0.0)).norm() < 1e-8));
    }
}
