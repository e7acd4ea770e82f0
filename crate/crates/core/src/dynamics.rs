//! Iterative dynamics of the smoothed zero-counting main term.
//!
//! The map is `T_{n+1} = T_n + ΔT·f(T_n)` with
//! `f(T) = (T/2π)·ln(T/2π) − T/2π`, natural logarithm throughout. `f`
//! vanishes exactly at `T = 2πe`, is negative on `(0, 2πe)` and positive
//! above, so orbits started below the fixed point drift toward zero and
//! eventually leave the domain `T > 0`. Leaving the domain is a recorded
//! termination ([`Termination::DomainExit`]), never a fabricated sample.

use serde::Serialize;
use thiserror::Error;

use crate::par;

/// `2πe`, the unique fixed point of the map on `T > 0`.
pub const FIXED_POINT: f64 = std::f64::consts::TAU * std::f64::consts::E;

#[derive(Debug, Error, PartialEq)]
pub enum DynamicsError {
    #[error("map is undefined for non-positive ordinate t = {0}")]
    NonPositiveOrdinate(f64),
    #[error("step size must be positive, got {0}")]
    NonPositiveStep(f64),
    #[error("iteration count must be positive")]
    ZeroIterations,
    #[error("transient ({transient}) must be smaller than iterations ({iterations})")]
    TransientTooLong { transient: usize, iterations: usize },
    #[error("orbit has {0} samples, need at least 2 for exponent estimation")]
    OrbitTooShort(usize),
    #[error("step-size grid must be nonempty")]
    EmptyGrid,
    #[error("step-size grid must be strictly ascending at index {0}")]
    GridNotAscending(usize),
    #[error("value set must be nonempty")]
    EmptyValues,
}

/// Configuration of one orbit run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MapParams {
    pub t0: f64,
    pub delta_t: f64,
    pub iterations: usize,
    pub transient: usize,
}

impl MapParams {
    /// Validates `t0 > 0`, `delta_t > 0`, `iterations ≥ 1`,
    /// `transient < iterations`.
    pub fn new(
        t0: f64,
        delta_t: f64,
        iterations: usize,
        transient: usize,
    ) -> Result<Self, DynamicsError> {
        if !(t0 > 0.0) || !t0.is_finite() {
            return Err(DynamicsError::NonPositiveOrdinate(t0));
        }
        if !(delta_t > 0.0) || !delta_t.is_finite() {
            return Err(DynamicsError::NonPositiveStep(delta_t));
        }
        if iterations == 0 {
            return Err(DynamicsError::ZeroIterations);
        }
        if transient >= iterations {
            return Err(DynamicsError::TransientTooLong {
                transient,
                iterations,
            });
        }
        Ok(Self {
            t0,
            delta_t,
            iterations,
            transient,
        })
    }
}

/// How an orbit ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    /// All requested iterations ran.
    Completed,
    /// The successor of `samples[k]` would have been non-positive (or not
    /// finite); iteration stopped with `samples[k]` as the last entry.
    DomainExit(usize),
}

/// A generated trajectory. `samples[0]` is always `t0` and every sample is
/// strictly positive and finite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Orbit {
    pub params: MapParams,
    pub samples: Vec<f64>,
    pub termination: Termination,
}

/// Per-step exponent estimates `ln(|T_{n+1} − T_n| / ΔT)`.
///
/// A zero difference yields negative infinity; such entries stay in
/// `exponents` but are excluded from `mean`. When no finite entry exists the
/// mean is reported as negative infinity and `valid_count` is 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LyapunovSeries {
    pub exponents: Vec<f64>,
    pub mean: f64,
    pub valid_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChaosLabel {
    Chaotic,
    NonChaotic,
}

/// Verdict for one step size: chaotic iff the mean exponent is strictly
/// positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChaosClassification {
    pub delta_t: f64,
    pub mean_lyapunov: f64,
    pub label: ChaosLabel,
}

/// Post-transient samples for one grid point of a scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanTail {
    pub delta_t: f64,
    pub samples: Vec<f64>,
    /// True when a domain exit cut the tail short of `iterations − transient`.
    pub truncated: bool,
}

/// Long-run behaviour across a strictly ascending grid of step sizes.
/// `tails[i]` corresponds to `delta_t_grid[i]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BifurcationScan {
    pub delta_t_grid: Vec<f64>,
    pub tails: Vec<ScanTail>,
    pub t0: f64,
}

/// The increment field `f(T) = (T/2π)·(ln(T/2π) − 1)`.
fn increment_field(t: f64) -> f64 {
    let x = t / std::f64::consts::TAU;
    x * (x.ln() - 1.0)
}

/// One application of the map: `T + ΔT·((T/2π)·ln(T/2π) − T/2π)`.
pub fn map_step(t: f64, delta_t: f64) -> Result<f64, DynamicsError> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(DynamicsError::NonPositiveOrdinate(t));
    }
    if !(delta_t > 0.0) || !delta_t.is_finite() {
        return Err(DynamicsError::NonPositiveStep(delta_t));
    }
    Ok(t + delta_t * increment_field(t))
}

/// Runs the map from `params.t0` for up to `params.iterations` steps.
///
/// Iteration stops early, recording [`Termination::DomainExit`], as soon as
/// the next value would leave the open domain `(0, ∞)` (including overflow
/// to infinity, which only happens for starts above the fixed point).
pub fn iterate_orbit(params: &MapParams) -> Orbit {
    let mut samples = Vec::with_capacity(params.iterations + 1);
    samples.push(params.t0);
    let mut termination = Termination::Completed;
    for n in 0..params.iterations {
        let next = samples[n] + params.delta_t * increment_field(samples[n]);
        if !(next > 0.0) || !next.is_finite() {
            termination = Termination::DomainExit(n);
            break;
        }
        samples.push(next);
    }
    Orbit {
        params: *params,
        samples,
        termination,
    }
}

/// Exponent series for an existing orbit: `ln(|T_{n+1} − T_n| / ΔT)` per
/// consecutive pair, which equals `ln|f(T_n)|` along the orbit.
pub fn lyapunov_series(orbit: &Orbit) -> Result<LyapunovSeries, DynamicsError> {
    if orbit.samples.len() < 2 {
        return Err(DynamicsError::OrbitTooShort(orbit.samples.len()));
    }
    let delta_t = orbit.params.delta_t;
    let exponents: Vec<f64> = orbit
        .samples
        .windows(2)
        .map(|w| ((w[1] - w[0]).abs() / delta_t).ln())
        .collect();
    let finite: Vec<f64> = exponents.iter().copied().filter(|e| e.is_finite()).collect();
    let valid_count = finite.len();
    let mean = if valid_count == 0 {
        f64::NEG_INFINITY
    } else {
        finite.iter().sum::<f64>() / valid_count as f64
    };
    Ok(LyapunovSeries {
        exponents,
        mean,
        valid_count,
    })
}

/// Runs an orbit and labels it chaotic iff the mean exponent is positive.
///
/// Orbits that exit the domain before producing two samples have no finite
/// exponent; they classify as non-chaotic with mean negative infinity.
pub fn classify_chaos(params: &MapParams) -> ChaosClassification {
    let orbit = iterate_orbit(params);
    let mean = match lyapunov_series(&orbit) {
        Ok(series) => series.mean,
        Err(_) => f64::NEG_INFINITY,
    };
    ChaosClassification {
        delta_t: params.delta_t,
        mean_lyapunov: mean,
        label: if mean > 0.0 {
            ChaosLabel::Chaotic
        } else {
            ChaosLabel::NonChaotic
        },
    }
}

/// Classifies every step size in `grid` with the same `t0` and iteration
/// budget. Output order matches grid order.
pub fn classify_chaos_sweep(
    grid: &[f64],
    t0: f64,
    iterations: usize,
) -> Result<Vec<ChaosClassification>, DynamicsError> {
    let params = validated_grid_params(grid, t0, iterations, 0)?;
    Ok(par::map_ordered(&params, classify_chaos))
}

/// Bifurcation scan: for each step size in the strictly ascending `grid`,
/// the post-transient tail of the orbit from `t0`.
///
/// With the `parallel` feature active the grid points are evaluated across
/// threads; results are always emitted in grid order.
pub fn bifurcation_scan(
    grid: &[f64],
    t0: f64,
    iterations: usize,
    transient: usize,
) -> Result<BifurcationScan, DynamicsError> {
    let params = validated_grid_params(grid, t0, iterations, transient)?;
    let tails = par::map_ordered(&params, scan_tail);
    Ok(BifurcationScan {
        delta_t_grid: grid.to_vec(),
        tails,
        t0,
    })
}

/// Always-sequential twin of [`bifurcation_scan`]; produces identical output
/// and exists so the two execution paths can be benchmarked side by side.
pub fn bifurcation_scan_seq(
    grid: &[f64],
    t0: f64,
    iterations: usize,
    transient: usize,
) -> Result<BifurcationScan, DynamicsError> {
    let params = validated_grid_params(grid, t0, iterations, transient)?;
    let tails = par::map_sequential(&params, scan_tail);
    Ok(BifurcationScan {
        delta_t_grid: grid.to_vec(),
        tails,
        t0,
    })
}

fn validated_grid_params(
    grid: &[f64],
    t0: f64,
    iterations: usize,
    transient: usize,
) -> Result<Vec<MapParams>, DynamicsError> {
    if grid.is_empty() {
        return Err(DynamicsError::EmptyGrid);
    }
    for (i, w) in grid.windows(2).enumerate() {
        if !(w[1] > w[0]) {
            return Err(DynamicsError::GridNotAscending(i + 1));
        }
    }
    grid.iter()
        .map(|&dt| MapParams::new(t0, dt, iterations, transient))
        .collect()
}

fn scan_tail(params: &MapParams) -> ScanTail {
    let orbit = iterate_orbit(params);
    let expected = params.iterations - params.transient;
    let start = (params.transient + 1).min(orbit.samples.len());
    let samples: Vec<f64> = orbit.samples[start..].to_vec();
    ScanTail {
        delta_t: params.delta_t,
        truncated: samples.len() < expected,
        samples,
    }
}

/// Mirror-asymmetry of a value set about `center`: the mean distance from
/// each reflected value `2·center − v` to the nearest element of the set,
/// normalized by the value range. 0 means perfectly mirror-symmetric;
/// degenerate (single-value) sets score 0 by convention.
pub fn symmetry_metric(values: &[f64], center: f64) -> Result<f64, DynamicsError> {
    if values.is_empty() {
        return Err(DynamicsError::EmptyValues);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let range = sorted[sorted.len() - 1] - sorted[0];
    if range == 0.0 {
        return Ok(0.0);
    }
    let total: f64 = values
        .iter()
        .map(|&v| nearest_distance(&sorted, 2.0 * center - v))
        .sum();
    Ok(total / (values.len() as f64 * range))
}

fn nearest_distance(sorted: &[f64], target: f64) -> f64 {
    let idx = sorted.partition_point(|&v| v < target);
    let mut best = f64::INFINITY;
    if idx < sorted.len() {
        best = best.min((sorted[idx] - target).abs());
    }
    if idx > 0 {
        best = best.min((sorted[idx - 1] - target).abs());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const PAPER_T0: f64 = 14.137;
    const PAPER_DT: f64 = 1.5;

    fn paper_params(iterations: usize) -> MapParams {
        MapParams::new(PAPER_T0, PAPER_DT, iterations, 0).unwrap()
    }

    #[test]
    fn fixed_point_is_invariant() {
        for dt in [0.5, 1.5, 3.0, 10.0] {
            let stepped = map_step(FIXED_POINT, dt).unwrap();
            // 4 ulps of 2πe ≈ 1.4e-14
            assert!(
                (stepped - FIXED_POINT).abs() <= 4.0 * (FIXED_POINT * f64::EPSILON),
                "dt={dt}: {stepped} vs {FIXED_POINT}"
            );
        }
    }

    #[test]
    fn map_step_at_two_pi() {
        // T/2π = 1 forces f = −1, so the step is exactly −ΔT.
        let stepped = map_step(std::f64::consts::TAU, 1.5).unwrap();
        assert_relative_eq!(stepped, std::f64::consts::TAU - 1.5, max_relative = 1e-14);
    }

    #[test]
    fn map_step_paper_start() {
        let stepped = map_step(PAPER_T0, PAPER_DT).unwrap();
        assert_relative_eq!(stepped, 13.498_857_160_9, epsilon = 1e-9);
    }

    #[test]
    fn map_step_rejects_non_positive_ordinate() {
        assert_eq!(
            map_step(0.0, 1.5),
            Err(DynamicsError::NonPositiveOrdinate(0.0))
        );
        assert!(map_step(-3.0, 1.5).is_err());
        assert!(map_step(3.0, 0.0).is_err());
    }

    #[test]
    fn orbit_at_fixed_point_is_constant() {
        let params = MapParams::new(FIXED_POINT, 1.5, 10, 0).unwrap();
        let orbit = iterate_orbit(&params);
        assert_eq!(orbit.termination, Termination::Completed);
        assert_eq!(orbit.samples.len(), 11);
        for &s in &orbit.samples {
            assert!((s - FIXED_POINT).abs() <= 8.0 * FIXED_POINT * f64::EPSILON);
        }
    }

    #[test]
    fn orbit_first_steps_match_closed_form() {
        let orbit = iterate_orbit(&paper_params(3));
        let expected = [14.137, 13.498_857_160_9, 12.740_666_013_3, 11.849_236_622_4];
        assert_eq!(orbit.samples.len(), 4);
        for (s, e) in orbit.samples.iter().zip(expected) {
            assert_relative_eq!(s, &e, epsilon = 1e-9);
        }
        assert_eq!(orbit.termination, Termination::Completed);
    }

    #[test]
    fn paper_run_exits_domain() {
        // From 14.137 the field is negative everywhere below 2πe, so the
        // orbit descends until its successor would drop below zero.
        let orbit = iterate_orbit(&paper_params(10_000));
        assert_eq!(orbit.termination, Termination::DomainExit(13));
        assert_eq!(orbit.samples.len(), 14);
        assert!(orbit.samples.iter().all(|&s| s > 0.0));
        assert_relative_eq!(orbit.samples[13], 0.099_667_968_28, epsilon = 1e-9);
    }

    #[test]
    fn runaway_orbit_above_fixed_point_stops_at_overflow() {
        let params = MapParams::new(100.0, 1.5, 10_000, 0).unwrap();
        let orbit = iterate_orbit(&params);
        assert!(matches!(orbit.termination, Termination::DomainExit(_)));
        assert!(orbit.samples.iter().all(|s| s.is_finite()));
    }

    #[test]
    fn lyapunov_single_step_at_two_pi_is_zero() {
        let params = MapParams::new(std::f64::consts::TAU, 1.5, 1, 0).unwrap();
        let orbit = iterate_orbit(&params);
        let series = lyapunov_series(&orbit).unwrap();
        assert_eq!(series.exponents.len(), 1);
        assert!(series.exponents[0].abs() <= 1e-12);
    }

    #[test]
    fn lyapunov_at_fixed_point_has_no_finite_entries() {
        let params = MapParams::new(FIXED_POINT, 1.5, 5, 0).unwrap();
        let mut orbit = iterate_orbit(&params);
        // Force exact repetition so the difference is exactly zero.
        for s in orbit.samples.iter_mut() {
            *s = FIXED_POINT;
        }
        let series = lyapunov_series(&orbit).unwrap();
        assert!(series.exponents.iter().all(|e| *e == f64::NEG_INFINITY));
        assert_eq!(series.valid_count, 0);
        assert_eq!(series.mean, f64::NEG_INFINITY);
    }

    #[test]
    fn lyapunov_first_exponent_from_paper_start() {
        let orbit = iterate_orbit(&paper_params(1));
        let series = lyapunov_series(&orbit).unwrap();
        assert_relative_eq!(series.exponents[0], -0.854_658_243_127, epsilon = 1e-9);
    }

    #[test]
    fn lyapunov_requires_two_samples() {
        let params = paper_params(1);
        let orbit = Orbit {
            params,
            samples: vec![params.t0],
            termination: Termination::DomainExit(0),
        };
        assert_eq!(
            lyapunov_series(&orbit),
            Err(DynamicsError::OrbitTooShort(1))
        );
    }

    #[test]
    fn lyapunov_identity_holds_along_orbit() {
        let orbit = iterate_orbit(&paper_params(10_000));
        let series = lyapunov_series(&orbit).unwrap();
        for (w, e) in orbit.samples.windows(2).zip(&series.exponents) {
            let diff = (w[1] - w[0]).abs();
            if e.is_finite() {
                assert_relative_eq!(e.exp() * PAPER_DT, diff, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn classify_fixed_point_as_non_chaotic() {
        let params = MapParams::new(FIXED_POINT, 1.5, 100, 0).unwrap();
        let c = classify_chaos(&params);
        assert_eq!(c.label, ChaosLabel::NonChaotic);
    }

    #[test]
    fn classify_paper_config_reports_negative_mean() {
        let c = classify_chaos(&paper_params(1000));
        assert!(c.mean_lyapunov < 0.0);
        assert_eq!(c.label, ChaosLabel::NonChaotic);
    }

    #[test]
    fn sweep_is_deterministic_and_ordered() {
        let grid: Vec<f64> = (1..=40).map(|i| i as f64 * 0.1).collect();
        let a = classify_chaos_sweep(&grid, PAPER_T0, 1000).unwrap();
        let b = classify_chaos_sweep(&grid, PAPER_T0, 1000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), grid.len());
        for (c, dt) in a.iter().zip(&grid) {
            assert_eq!(c.delta_t, *dt);
        }
    }

    #[test]
    fn scan_at_fixed_point_yields_constant_tail() {
        let scan = bifurcation_scan(&[1.5], FIXED_POINT, 100, 10).unwrap();
        assert_eq!(scan.tails.len(), 1);
        let tail = &scan.tails[0];
        assert_eq!(tail.samples.len(), 90);
        assert!(!tail.truncated);
        for &s in &tail.samples {
            assert!((s - FIXED_POINT).abs() <= 8.0 * FIXED_POINT * f64::EPSILON);
        }
    }

    #[test]
    fn scan_flags_truncated_tails() {
        let scan = bifurcation_scan(&[1.5], PAPER_T0, 10_000, 1000).unwrap();
        let tail = &scan.tails[0];
        assert!(tail.truncated);
        // Exit happens long before the transient window ends.
        assert!(tail.samples.is_empty());
    }

    #[test]
    fn scan_matches_sequential_path() {
        let grid: Vec<f64> = (1..=16).map(|i| 0.25 * i as f64).collect();
        let par = bifurcation_scan(&grid, PAPER_T0, 2000, 200).unwrap();
        let seq = bifurcation_scan_seq(&grid, PAPER_T0, 2000, 200).unwrap();
        assert_eq!(par, seq);
    }

    #[test]
    fn scan_rejects_bad_grids() {
        assert_eq!(
            bifurcation_scan(&[], PAPER_T0, 10, 0),
            Err(DynamicsError::EmptyGrid)
        );
        assert_eq!(
            bifurcation_scan(&[1.0, 1.0], PAPER_T0, 10, 0),
            Err(DynamicsError::GridNotAscending(1))
        );
        assert!(bifurcation_scan(&[-1.0, 1.0], PAPER_T0, 10, 0).is_err());
    }

    #[test]
    fn symmetry_metric_on_exact_mirror_pair() {
        assert_eq!(symmetry_metric(&[13.13, 15.13], 14.13).unwrap(), 0.0);
        assert_eq!(symmetry_metric(&[14.13], 14.13).unwrap(), 0.0);
    }

    #[test]
    fn symmetry_metric_detects_asymmetry() {
        let m = symmetry_metric(&[10.0, 11.0, 20.0], 14.13).unwrap();
        assert!(m > 0.0);
        assert_eq!(
            symmetry_metric(&[], 14.13),
            Err(DynamicsError::EmptyValues)
        );
    }
}
