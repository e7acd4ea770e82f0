//! Entropy, histograms, clustering summaries, hydrogen levels, and
//! distribution-overlap reports.

use serde::Serialize;
use thiserror::Error;

/// CODATA 2018 values, compiled in so results never depend on a runtime
/// lookup.
pub mod constants {
    /// Electron mass (kg).
    pub const ELECTRON_MASS: f64 = 9.109_383_7015e-31;
    /// Elementary charge (C).
    pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
    /// Vacuum permittivity (F/m).
    pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_8128e-12;
    /// Planck constant (J·s).
    pub const PLANCK_CONSTANT: f64 = 6.626_070_15e-34;
}

const NORMALIZATION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("probabilities must sum to 1 within 1e-12, got sum = {sum}")]
    BadNormalization { sum: f64 },
    #[error("probability {value} at index {index} is negative")]
    NegativeProbability { index: usize, value: f64 },
    #[error("value set must be nonempty")]
    EmptyValues,
    #[error("histogram needs at least one bin")]
    ZeroBins,
    #[error("value {value} at index {index} is not finite")]
    NonFiniteValue { index: usize, value: f64 },
}

/// A probability vector with its Shannon entropy in nats.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    pub probabilities: Vec<f64>,
    pub entropy: f64,
}

impl EntropyReport {
    pub fn new(probabilities: Vec<f64>) -> Result<Self, StatsError> {
        let entropy = shannon_entropy(&probabilities)?;
        Ok(Self {
            probabilities,
            entropy,
        })
    }

    /// Uniform distribution over `n` outcomes; entropy `ln(n)`.
    pub fn uniform(n: usize) -> Result<Self, StatsError> {
        Self::new(vec![1.0 / n as f64; n.max(1)])
    }
}

/// Equal-width histogram. `edges` has `counts.len() + 1` strictly ascending
/// entries; the last bin is right-inclusive.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
    pub total: usize,
}

impl Histogram {
    /// Center of bin `i`.
    pub fn bin_center(&self, i: usize) -> f64 {
        0.5 * (self.edges[i] + self.edges[i + 1])
    }

    /// Index of the most populated bin (lowest index wins ties).
    pub fn modal_bin(&self) -> usize {
        let mut best = 0;
        for (i, &c) in self.counts.iter().enumerate() {
            if c > self.counts[best] {
                best = i;
            }
        }
        best
    }
}

/// Location/scale/mode summary of a value set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClusterSummary {
    pub mean: f64,
    /// Population standard deviation.
    pub stdev: f64,
    /// Center of the most populated bin of a 50-bin histogram.
    pub modal_bin_center: f64,
}

/// Hydrogen bound-state energies `E_n = −Ry/n²` in electron-volts,
/// `levels[n-1]` holding `E_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyLevels {
    pub n_max: usize,
    pub rydberg_ev: f64,
    pub levels: Vec<f64>,
}

/// Histogram-intersection comparison of two value sets on a shared grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub spectrum_summary: ClusterSummary,
    pub levels_summary: ClusterSummary,
    /// `Σ min(p_bin, q_bin)` over a shared 100-bin grid, both sides
    /// normalized to unit mass. 1 = identical binned shape, 0 = disjoint.
    pub overlap: f64,
    pub notes: Vec<String>,
}

/// Shannon entropy `−Σ p·ln(p)` in nats; zero entries contribute zero.
pub fn shannon_entropy(probabilities: &[f64]) -> Result<f64, StatsError> {
    let mut sum = 0.0;
    for (index, &value) in probabilities.iter().enumerate() {
        if value < 0.0 || !value.is_finite() {
            return Err(StatsError::NegativeProbability { index, value });
        }
        sum += value;
    }
    if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(StatsError::BadNormalization { sum });
    }
    Ok(probabilities
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum())
}

/// Entropy of the uniform distribution over `n` outcomes: `ln(n)`.
pub fn uniform_entropy(n: usize) -> f64 {
    assert!(n >= 1, "uniform distribution needs at least one outcome");
    (n as f64).ln()
}

/// Equal-width histogram over `[min, max]` with the last bin
/// right-inclusive. A degenerate range (all values equal to `c`) produces a
/// single bin `[c − ½, c + ½]` holding everything.
pub fn histogram(values: &[f64], bins: usize) -> Result<Histogram, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyValues);
    }
    if bins == 0 {
        return Err(StatsError::ZeroBins);
    }
    for (index, &value) in values.iter().enumerate() {
        if !value.is_finite() {
            return Err(StatsError::NonFiniteValue { index, value });
        }
    }
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if min == max {
        return Ok(Histogram {
            edges: vec![min - 0.5, min + 0.5],
            counts: vec![values.len()],
            total: values.len(),
        });
    }
    let width = (max - min) / bins as f64;
    let edges: Vec<f64> = (0..=bins)
        .map(|i| {
            if i == bins {
                max
            } else {
                min + width * i as f64
            }
        })
        .collect();
    let mut counts = vec![0usize; bins];
    for &v in values {
        let raw = ((v - min) / (max - min) * bins as f64) as usize;
        counts[raw.min(bins - 1)] += 1;
    }
    Ok(Histogram {
        edges,
        counts,
        total: values.len(),
    })
}

/// Mean, population standard deviation, and 50-bin modal center.
pub fn cluster_summary(values: &[f64]) -> Result<ClusterSummary, StatsError> {
    let hist = histogram(values, 50)?;
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let variance = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    Ok(ClusterSummary {
        mean,
        stdev: variance.sqrt(),
        modal_bin_center: hist.bin_center(hist.modal_bin()),
    })
}

/// Bound-state energies from the pinned constants:
/// `Ry = m_e·e⁴ / (8·ε₀²·h²)` converted to eV, `E_n = −Ry/n²`.
pub fn hydrogen_levels(n_max: usize) -> EnergyLevels {
    assert!(n_max >= 1, "need at least the ground state");
    use constants::*;
    let rydberg_joule = ELECTRON_MASS * ELEMENTARY_CHARGE.powi(4)
        / (8.0 * VACUUM_PERMITTIVITY.powi(2) * PLANCK_CONSTANT.powi(2));
    let rydberg_ev = rydberg_joule / ELEMENTARY_CHARGE;
    let levels = (1..=n_max)
        .map(|n| -rydberg_ev / (n as f64 * n as f64))
        .collect();
    EnergyLevels {
        n_max,
        rydberg_ev,
        levels,
    }
}

/// Histogram intersection of two value sets on a shared 100-bin grid over
/// the union of their ranges, plus per-set summaries and qualitative notes.
pub fn compare_spectra(
    spectrum_values: &[f64],
    level_values: &[f64],
) -> Result<ComparisonReport, StatsError> {
    if spectrum_values.is_empty() || level_values.is_empty() {
        return Err(StatsError::EmptyValues);
    }
    let spectrum_summary = cluster_summary(spectrum_values)?;
    let levels_summary = cluster_summary(level_values)?;

    let (p, q, _) = shared_grid_masses(spectrum_values, level_values, 100)?;
    let overlap = p.iter().zip(&q).map(|(a, b)| a.min(*b)).sum::<f64>();

    let mut notes = Vec::new();
    let all_negative =
        |vals: &[f64]| vals.iter().all(|&v| v < 0.0);
    if all_negative(spectrum_values) && all_negative(level_values) {
        notes.push("both value sets are strictly negative".to_string());
        let accumulates = |vals: &[f64]| {
            let min = vals.iter().copied().fold(f64::INFINITY, f64::min);
            let max = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            // more than half the values sit in the upper (toward-zero)
            // quarter of the range
            let cut = max - 0.25 * (max - min);
            vals.iter().filter(|&&v| v >= cut).count() * 2 > vals.len()
        };
        if accumulates(spectrum_values) && accumulates(level_values) {
            notes.push("both distributions accumulate toward zero".to_string());
        }
    }
    notes.push("the two value sets carry no shared physical unit; both are rescaled to unit mass before comparison".to_string());

    Ok(ComparisonReport {
        spectrum_summary,
        levels_summary,
        overlap,
        notes,
    })
}

/// Unit-mass bin weights of both sets on one shared equal-width grid.
/// Returns `(p, q, edges)`.
pub fn shared_grid_masses(
    a: &[f64],
    b: &[f64],
    bins: usize,
) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>), StatsError> {
    if a.is_empty() || b.is_empty() {
        return Err(StatsError::EmptyValues);
    }
    if bins == 0 {
        return Err(StatsError::ZeroBins);
    }
    let union: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
    for (index, &value) in union.iter().enumerate() {
        if !value.is_finite() {
            return Err(StatsError::NonFiniteValue { index, value });
        }
    }
    let min = union.iter().copied().fold(f64::INFINITY, f64::min);
    let max = union.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = if min == max {
        (min - 0.5, min + 0.5)
    } else {
        (min, max)
    };
    let edges: Vec<f64> = (0..=bins)
        .map(|i| lo + (hi - lo) * i as f64 / bins as f64)
        .collect();
    let mass = |vals: &[f64]| -> Vec<f64> {
        let mut counts = vec![0usize; bins];
        for &v in vals {
            let raw = ((v - lo) / (hi - lo) * bins as f64) as usize;
            counts[raw.min(bins - 1)] += 1;
        }
        counts
            .into_iter()
            .map(|c| c as f64 / vals.len() as f64)
            .collect()
    };
    Ok((mass(a), mass(b), edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn entropy_degenerate_and_uniform() {
        assert_eq!(shannon_entropy(&[1.0]).unwrap(), 0.0);
        let uniform = vec![0.01; 100];
        assert_relative_eq!(
            shannon_entropy(&uniform).unwrap(),
            4.605_170_185_99,
            epsilon = 1e-9
        );
        assert_relative_eq!(
            shannon_entropy(&[0.5, 0.5]).unwrap(),
            std::f64::consts::LN_2,
            epsilon = 1e-12
        );
    }

    #[test]
    fn entropy_ignores_zero_entries() {
        let h = shannon_entropy(&[0.5, 0.5, 0.0]).unwrap();
        assert_relative_eq!(h, std::f64::consts::LN_2, epsilon = 1e-12);
    }

    #[test]
    fn entropy_rejects_bad_input() {
        match shannon_entropy(&[0.5, 0.4]) {
            Err(StatsError::BadNormalization { sum }) => {
                assert_relative_eq!(sum, 0.9, epsilon = 1e-12)
            }
            other => panic!("expected normalization error, got {other:?}"),
        }
        assert!(matches!(
            shannon_entropy(&[1.5, -0.5]),
            Err(StatsError::NegativeProbability { index: 1, .. })
        ));
    }

    #[test]
    fn uniform_entropy_values() {
        assert_eq!(uniform_entropy(1), 0.0);
        assert_relative_eq!(uniform_entropy(100), 4.605_170_185_99, epsilon = 1e-9);
        assert_relative_eq!(uniform_entropy(2), std::f64::consts::LN_2, epsilon = 1e-12);
    }

    #[test]
    fn uniform_entropy_matches_explicit_vector() {
        for n in [1usize, 2, 3, 10, 100, 777, 1000] {
            let explicit = shannon_entropy(&vec![1.0 / n as f64; n]).unwrap();
            assert!(
                (uniform_entropy(n) - explicit).abs() <= 1e-12,
                "n={n}"
            );
        }
    }

    #[test]
    fn entropy_report_uniform() {
        let report = EntropyReport::uniform(100).unwrap();
        assert_eq!(report.probabilities.len(), 100);
        assert_relative_eq!(report.entropy, 4.605_170_185_99, epsilon = 1e-9);
    }

    #[test]
    fn histogram_edge_policy() {
        let hist = histogram(&[0.0, 0.5, 1.0], 2).unwrap();
        assert_eq!(hist.counts, vec![1, 2]);
        assert_eq!(hist.total, 3);
        assert_eq!(hist.edges.len(), 3);
    }

    #[test]
    fn histogram_degenerate_range() {
        let hist = histogram(&[3.25, 3.25, 3.25], 7).unwrap();
        assert_eq!(hist.counts, vec![3]);
        assert_relative_eq!(hist.bin_center(0), 3.25, epsilon = 1e-12);
    }

    #[test]
    fn histogram_conserves_mass() {
        let values: Vec<f64> = (0..1000).map(|i| (i as f64 * 0.7).sin()).collect();
        let hist = histogram(&values, 50).unwrap();
        assert_eq!(hist.counts.iter().sum::<usize>(), 1000);
        assert_eq!(hist.total, 1000);
    }

    #[test]
    fn histogram_rejects_bad_input() {
        assert!(matches!(histogram(&[], 5), Err(StatsError::EmptyValues)));
        assert!(matches!(histogram(&[1.0], 0), Err(StatsError::ZeroBins)));
        assert!(matches!(
            histogram(&[1.0, f64::NAN], 5),
            Err(StatsError::NonFiniteValue { index: 1, .. })
        ));
    }

    #[test]
    fn cluster_summary_values() {
        let constant = cluster_summary(&[-1.0, -1.0, -1.0]).unwrap();
        assert_eq!(constant.mean, -1.0);
        assert_eq!(constant.stdev, 0.0);
        assert_relative_eq!(constant.modal_bin_center, -1.0, epsilon = 1e-12);

        let pair = cluster_summary(&[0.0, 1.0]).unwrap();
        assert_relative_eq!(pair.mean, 0.5, epsilon = 1e-12);
        assert_relative_eq!(pair.stdev, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn hydrogen_level_values() {
        let levels = hydrogen_levels(5);
        assert_relative_eq!(levels.rydberg_ev, 13.605_693_122_9, epsilon = 1e-6);
        assert_relative_eq!(levels.levels[0], -13.605_693_122_9, epsilon = 1e-6);
        assert_relative_eq!(levels.levels[1], -3.401_423_280_72, epsilon = 1e-6);
        assert_eq!(levels.levels[0], -levels.rydberg_ev);
    }

    #[test]
    fn hydrogen_levels_monotone_and_scaled() {
        let levels = hydrogen_levels(100);
        assert!(levels.levels.iter().all(|&e| e < 0.0));
        assert!(levels.levels.windows(2).all(|w| w[1] > w[0]));
        for (i, &e) in levels.levels.iter().enumerate() {
            let n = (i + 1) as f64;
            assert!(
                (e.abs() * n * n - levels.rydberg_ev).abs() <= 1e-9 * levels.rydberg_ev,
                "n = {n}"
            );
        }
    }

    #[test]
    fn overlap_identical_and_disjoint() {
        let a: Vec<f64> = (0..50).map(|i| -1.0 + 0.01 * i as f64).collect();
        let identical = compare_spectra(&a, &a).unwrap();
        assert_relative_eq!(identical.overlap, 1.0, epsilon = 1e-12);

        let b: Vec<f64> = (0..50).map(|i| 100.0 + 0.01 * i as f64).collect();
        let disjoint = compare_spectra(&a, &b).unwrap();
        assert_eq!(disjoint.overlap, 0.0);
    }

    #[test]
    fn overlap_is_symmetric() {
        let a: Vec<f64> = (0..40).map(|i| (i as f64 * 0.31).sin() - 1.0).collect();
        let b: Vec<f64> = (0..60).map(|i| (i as f64 * 0.17).cos() - 0.8).collect();
        let ab = compare_spectra(&a, &b).unwrap().overlap;
        let ba = compare_spectra(&b, &a).unwrap().overlap;
        assert!((ab - ba).abs() <= 1e-12);
    }

    #[test]
    fn comparison_notes_negative_accumulation() {
        // Inverse-ordinate style values, negated: accumulate toward 0⁻.
        let spectrum: Vec<f64> = (1..=100).map(|i| -14.134725 / (14.0 + i as f64)).collect();
        let levels = hydrogen_levels(100);
        let report = compare_spectra(&spectrum, &levels.levels).unwrap();
        assert!(report
            .notes
            .iter()
            .any(|n| n.contains("strictly negative")));
    }
}
