//! The log-derivative operator `ln(∂) + ln(∂̄)` under `∂ + ∂̄ = 1`.
//!
//! `∂` and `∂̄` are modeled as random scalars in `(0, 1)` tied by the
//! constraint `∂ + ∂̄ = 1`; only scalars make `ln(∂) + ln(∂̄)` a usable
//! matrix entry. By AM-GM every entry satisfies
//! `ln(∂·∂̄) ≤ ln(¼) ≈ −1.386294`, an upper bound that no choice of inputs
//! can beat — the clustering reports in [`crate::stats`] lean on this.
//!
//! The operator is realized as a diagonal matrix whose characteristic
//! polynomial factors as `det(A − λI) = Π(entry_i − λ)`, so its eigenvalues
//! are the diagonal entries themselves. Dense-solver routes exist for
//! similarity round-trips `P⁻¹·D·P` and for small-n cross-checks.

use nalgebra::{Complex, DMatrix};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::number_theory::ZeroTable;

/// `ln(¼)`, the AM-GM ceiling for every operator entry.
pub const ENTRY_UPPER_BOUND: f64 = -1.386_294_361_119_890_6;

/// Default rejection threshold for the similarity-transform condition
/// estimate `σ_max/σ_min`.
pub const DEFAULT_CONDITION_BOUND: f64 = 1e8;

/// Numerical ceiling for imaginary parts of round-trip eigenvalues.
const REALNESS_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum OperatorError {
    #[error("derivative sample must lie strictly inside (0, 1), got {0}")]
    SampleOutOfRange(f64),
    #[error("clamp margin must lie in (0, 0.5), got {0}")]
    BadEpsilon(f64),
    #[error("matrix dimension must be at least 1")]
    ZeroDimension,
    #[error("gap grid entries must be positive, got {value} at index {index}")]
    BadGapGrid { index: usize, value: f64 },
    #[error("pair correlation vanishes at u = {0}; entry is undefined there")]
    CorrelationZero(f64),
    #[error("normalized gap must be non-negative, got {0}")]
    NegativeGap(f64),
    #[error("entry {index}: {source}")]
    Entry {
        index: usize,
        #[source]
        source: Box<OperatorError>,
    },
    #[error("diagonal entry {index} is not finite ({value})")]
    NonFiniteEntry { index: usize, value: f64 },
    #[error("matrix must be square, got {rows}×{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("transform matrix is {rows}×{cols} but the diagonal has {entries} entries")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        entries: usize,
    },
    #[error("transform matrix is singular")]
    Singular,
    #[error("transform condition estimate {estimate:.3e} exceeds bound {bound:.3e}")]
    IllConditioned { estimate: f64, bound: f64 },
    #[error("round-trip produced a non-real eigenvalue (|imag| = {max_imag:.3e})")]
    ComplexEigenvalue { max_imag: f64 },
}

/// A sampled `(∂, ∂̄)` with `∂ + ∂̄ = 1` enforced at construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivativePair {
    d: f64,
    d_bar: f64,
}

impl DerivativePair {
    /// Builds the pair from `∂`; `∂̄ = 1 − ∂`. Both components must land
    /// strictly inside `(0, 1)`.
    pub fn new(d: f64) -> Result<Self, OperatorError> {
        if !(d > 0.0 && d < 1.0) {
            return Err(OperatorError::SampleOutOfRange(d));
        }
        Ok(Self { d, d_bar: 1.0 - d })
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn d_bar(&self) -> f64 {
        self.d_bar
    }
}

/// Deterministic source of derivative pairs: `∂` uniform on
/// `(epsilon, 1 − epsilon)` drawn from a seeded ChaCha8 stream.
///
/// The u64→f64 mapping is done in-house so the sample sequence is pinned by
/// the ChaCha8 specification alone, independent of RNG-crate internals.
#[derive(Debug, Clone)]
pub struct PairSampler {
    rng: ChaCha8Rng,
    epsilon: f64,
}

impl PairSampler {
    pub fn new(seed: u64, epsilon: f64) -> Result<Self, OperatorError> {
        if !(epsilon > 0.0 && epsilon < 0.5) {
            return Err(OperatorError::BadEpsilon(epsilon));
        }
        Ok(Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            epsilon,
        })
    }

    /// Next pair in the stream.
    pub fn sample(&mut self) -> DerivativePair {
        // 53 significant bits, shifted into the open unit interval.
        let unit = (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
            + 0.5 / (1u64 << 53) as f64;
        let d = self.epsilon + (1.0 - 2.0 * self.epsilon) * unit;
        DerivativePair::new(d).expect("clamped sample is strictly inside (0, 1)")
    }
}

/// Sampling and sizing for one random diagonal operator.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumConfig {
    pub n: usize,
    pub seed: u64,
    /// Normalized-gap grid consumed cyclically when correlation weighting
    /// is on.
    pub u_grid: Vec<f64>,
    /// Clamp margin for the uniform sampling interval.
    pub epsilon: f64,
}

impl SpectrumConfig {
    pub const DEFAULT_EPSILON: f64 = 1e-6;
    pub const DEFAULT_U_MIN: f64 = 0.5;
    pub const DEFAULT_U_MAX: f64 = 10.0;

    /// `n` entries with the default gap grid (`n` points evenly spaced over
    /// `[0.5, 10]`) and default clamp margin.
    pub fn new(n: usize, seed: u64) -> Result<Self, OperatorError> {
        let grid = linspace(Self::DEFAULT_U_MIN, Self::DEFAULT_U_MAX, n.max(1));
        Self::with_grid(n, seed, grid, Self::DEFAULT_EPSILON)
    }

    pub fn with_grid(
        n: usize,
        seed: u64,
        u_grid: Vec<f64>,
        epsilon: f64,
    ) -> Result<Self, OperatorError> {
        if n == 0 {
            return Err(OperatorError::ZeroDimension);
        }
        if !(epsilon > 0.0 && epsilon < 0.5) {
            return Err(OperatorError::BadEpsilon(epsilon));
        }
        if u_grid.is_empty() {
            return Err(OperatorError::BadGapGrid {
                index: 0,
                value: f64::NAN,
            });
        }
        for (index, &value) in u_grid.iter().enumerate() {
            if !(value > 0.0) || !value.is_finite() {
                return Err(OperatorError::BadGapGrid { index, value });
            }
        }
        Ok(Self {
            n,
            seed,
            u_grid,
            epsilon,
        })
    }
}

/// Evenly spaced grid of `count ≥ 1` points from `start` to `end` inclusive.
pub fn linspace(start: f64, end: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![start];
    }
    let step = (end - start) / (count - 1) as f64;
    (0..count).map(|i| start + step * i as f64).collect()
}

/// Diagonal matrix with finite real entries; off-diagonal entries are
/// implicitly zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagonalOperator {
    entries: Vec<f64>,
}

impl DiagonalOperator {
    /// Rejects non-finite candidates so downstream spectra stay real and
    /// finite.
    pub fn new(entries: Vec<f64>) -> Result<Self, OperatorError> {
        for (index, &value) in entries.iter().enumerate() {
            if !value.is_finite() {
                return Err(OperatorError::NonFiniteEntry { index, value });
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Characteristic polynomial `det(A − λI) = Π(entry_i − λ)` evaluated
    /// at `lambda`. A zero factor makes the product exactly zero, so it is
    /// returned before the remaining factors can overflow the intermediate
    /// product.
    pub fn charpoly_at(&self, lambda: f64) -> f64 {
        let mut product = 1.0;
        for &e in &self.entries {
            let factor = e - lambda;
            if factor == 0.0 {
                return 0.0;
            }
            product *= factor;
        }
        product
    }

    /// The operator as an explicit dense matrix, for cross-checks.
    pub fn to_dense(&self) -> DMatrix<f64> {
        DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(&self.entries))
    }
}

/// Real eigenvalues of one operator realization, ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub config: Option<SpectrumConfig>,
}

/// Montgomery pair correlation `R₂(u) = 1 − (sin(πu)/(πu))²`, with the
/// removable singularity at `u = 0` evaluated as its limit 0.
pub fn pair_correlation(u: f64) -> f64 {
    assert!(u >= 0.0, "normalized gap must be non-negative, got {u}");
    if u == 0.0 {
        return 0.0;
    }
    let pu = std::f64::consts::PI * u;
    let sinc = pu.sin() / pu;
    1.0 - sinc * sinc
}

/// Entry value `ln(∂) + ln(∂̄) = ln(∂·∂̄)`; always `≤ ln(¼)`.
pub fn operator_entry(pair: &DerivativePair) -> f64 {
    pair.d().ln() + pair.d_bar().ln()
}

/// Correlation-weighted entry `ln(∂·R₂(u)) + ln(∂̄·R₂(u))`, which equals
/// `operator_entry + 2·ln(R₂(u))`. Undefined where `R₂(u) = 0` (only
/// `u = 0`).
pub fn operator_entry_r2(pair: &DerivativePair, u: f64) -> Result<f64, OperatorError> {
    if u < 0.0 {
        return Err(OperatorError::NegativeGap(u));
    }
    let r2 = pair_correlation(u);
    if r2 == 0.0 {
        return Err(OperatorError::CorrelationZero(u));
    }
    Ok((pair.d() * r2).ln() + (pair.d_bar() * r2).ln())
}

/// Random diagonal operator: entry `i` comes from a fresh sampled pair,
/// weighted by `R₂(u)` over the cyclic gap grid when `use_r2` is set.
/// Entries are fully determined by `config.seed`.
pub fn build_diagonal_operator(
    config: &SpectrumConfig,
    use_r2: bool,
) -> Result<DiagonalOperator, OperatorError> {
    let mut sampler = PairSampler::new(config.seed, config.epsilon)?;
    let mut entries = Vec::with_capacity(config.n);
    for index in 0..config.n {
        let pair = sampler.sample();
        let entry = if use_r2 {
            let u = config.u_grid[index % config.u_grid.len()];
            operator_entry_r2(&pair, u).map_err(|source| OperatorError::Entry {
                index,
                source: Box::new(source),
            })?
        } else {
            operator_entry(&pair)
        };
        entries.push(entry);
    }
    DiagonalOperator::new(entries)
}

/// Eigenvalues via the factored characteristic polynomial: the roots of
/// `Π(entry_i − λ)` are the diagonal entries, returned ascending. Each root
/// is re-checked against the polynomial before the spectrum is released.
pub fn eigenvalues_via_charpoly(op: &DiagonalOperator) -> Spectrum {
    let mut eigenvalues = op.entries().to_vec();
    eigenvalues.sort_by(f64::total_cmp);
    for &root in &eigenvalues {
        let residual = op.charpoly_at(root).abs();
        assert!(
            residual <= 1e-9,
            "eigenvalue {root} leaves characteristic-polynomial residual {residual}"
        );
    }
    Spectrum {
        eigenvalues,
        config: None,
    }
}

/// True iff `max |A[i][j] − conj(A[j][i])| ≤ tol`.
pub fn hermiticity_check(matrix: &DMatrix<f64>, tol: f64) -> Result<bool, OperatorError> {
    if matrix.nrows() != matrix.ncols() {
        return Err(OperatorError::NotSquare {
            rows: matrix.nrows(),
            cols: matrix.ncols(),
        });
    }
    let mut worst = 0.0_f64;
    for i in 0..matrix.nrows() {
        for j in 0..=i {
            worst = worst.max((matrix[(i, j)] - matrix[(j, i)]).abs());
        }
    }
    Ok(worst <= tol)
}

/// Complex-entry variant of [`hermiticity_check`].
pub fn hermiticity_check_complex(
    matrix: &DMatrix<Complex<f64>>,
    tol: f64,
) -> Result<bool, OperatorError> {
    if matrix.nrows() != matrix.ncols() {
        return Err(OperatorError::NotSquare {
            rows: matrix.nrows(),
            cols: matrix.ncols(),
        });
    }
    let mut worst = 0.0_f64;
    for i in 0..matrix.nrows() {
        for j in 0..=i {
            worst = worst.max((matrix[(i, j)] - matrix[(j, i)].conj()).norm());
        }
    }
    Ok(worst <= tol)
}

/// Condition estimate `σ_max/σ_min` from a singular value decomposition.
pub fn condition_estimate(matrix: &DMatrix<f64>) -> Result<f64, OperatorError> {
    if matrix.nrows() != matrix.ncols() {
        return Err(OperatorError::NotSquare {
            rows: matrix.nrows(),
            cols: matrix.ncols(),
        });
    }
    let svd = matrix.clone().svd(false, false);
    let max = svd.singular_values.max();
    let min = svd.singular_values.min();
    if min <= 0.0 || !min.is_finite() {
        return Err(OperatorError::Singular);
    }
    Ok(max / min)
}

/// Forms `P⁻¹·diag(entries)·P`, extracts its eigenvalues with a dense
/// solver, verifies they are numerically real, and returns them ascending.
///
/// By similarity the multiset equals `entries` up to floating-point error
/// scaled by the condition of `P`; transforms with condition estimate above
/// [`DEFAULT_CONDITION_BOUND`] are rejected.
pub fn similarity_roundtrip(entries: &[f64], p: &DMatrix<f64>) -> Result<Spectrum, OperatorError> {
    similarity_roundtrip_bounded(entries, p, DEFAULT_CONDITION_BOUND)
}

/// [`similarity_roundtrip`] with an explicit condition bound.
pub fn similarity_roundtrip_bounded(
    entries: &[f64],
    p: &DMatrix<f64>,
    condition_bound: f64,
) -> Result<Spectrum, OperatorError> {
    let diagonal = DiagonalOperator::new(entries.to_vec())?;
    if p.nrows() != p.ncols() {
        return Err(OperatorError::NotSquare {
            rows: p.nrows(),
            cols: p.ncols(),
        });
    }
    if p.nrows() != entries.len() {
        return Err(OperatorError::DimensionMismatch {
            rows: p.nrows(),
            cols: p.ncols(),
            entries: entries.len(),
        });
    }
    let estimate = condition_estimate(p)?;
    if estimate > condition_bound {
        return Err(OperatorError::IllConditioned {
            estimate,
            bound: condition_bound,
        });
    }
    let p_inv = p.clone().try_inverse().ok_or(OperatorError::Singular)?;
    let transformed = p_inv * diagonal.to_dense() * p;
    let complex_eigen = transformed.complex_eigenvalues();
    let max_imag = complex_eigen.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
    let scale = complex_eigen.iter().map(|c| c.norm()).fold(1.0, f64::max);
    if max_imag > REALNESS_TOLERANCE * scale {
        return Err(OperatorError::ComplexEigenvalue { max_imag });
    }
    let mut eigenvalues: Vec<f64> = complex_eigen.iter().map(|c| c.re).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum {
        eigenvalues,
        config: None,
    })
}

/// Ascending eigenvalues of a dense symmetric matrix, by an iterative dense
/// solver. This is the brute-force route used to cross-check the factored
/// characteristic-polynomial shortcut on small dimensions.
pub fn dense_symmetric_eigenvalues(matrix: &DMatrix<f64>) -> Result<Vec<f64>, OperatorError> {
    if matrix.nrows() != matrix.ncols() {
        return Err(OperatorError::NotSquare {
            rows: matrix.nrows(),
            cols: matrix.ncols(),
        });
    }
    let mut eigenvalues: Vec<f64> = matrix
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(eigenvalues)
}

/// Deterministic orthogonal matrix: the Q factor of a seeded random matrix.
/// Useful as a well-conditioned transform for similarity round-trips.
pub fn seeded_orthogonal(n: usize, seed: u64) -> DMatrix<f64> {
    let mut sampler = PairSampler::new(seed, 1e-6).expect("fixed epsilon is valid");
    let m = DMatrix::from_fn(n, n, |_, _| sampler.sample().d() - 0.5);
    m.qr().q()
}

/// Inverse-ordinate spectrum `λ_i = T̄₁ / T̄_i`: `λ₁ = 1` exactly, strictly
/// decreasing, all values in `(0, 1]`.
pub fn inverse_time_spectrum(zeros: &ZeroTable) -> Spectrum {
    let first = zeros.ordinates()[0];
    let eigenvalues = zeros.ordinates().iter().map(|&t| first / t).collect();
    Spectrum {
        eigenvalues,
        config: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn pair_correlation_values() {
        assert_eq!(pair_correlation(0.0), 0.0);
        assert_eq!(pair_correlation(1.0), 1.0);
        assert_eq!(pair_correlation(2.0), 1.0);
        assert_relative_eq!(pair_correlation(0.5), 0.594_715_265_431, epsilon = 1e-9);
        assert!(pair_correlation(1e-6) > 0.0);
    }

    #[test]
    fn pair_correlation_bounded_on_grid() {
        for i in 0..=100_000 {
            let u = i as f64 * 1e-4;
            let r = pair_correlation(u);
            assert!((0.0..=1.0).contains(&r), "R₂({u}) = {r}");
            if u > 0.0 {
                assert!(r > 0.0, "R₂ should vanish only at u = 0, but R₂({u}) = 0");
            }
        }
    }

    #[test]
    fn derivative_pair_constraint() {
        let pair = DerivativePair::new(0.3).unwrap();
        assert_eq!(pair.d(), 0.3);
        assert!((pair.d() + pair.d_bar() - 1.0).abs() <= 1e-15);
        assert!(DerivativePair::new(0.0).is_err());
        assert!(DerivativePair::new(1.0).is_err());
        assert!(DerivativePair::new(1.2).is_err());
        assert!(DerivativePair::new(f64::NAN).is_err());
    }

    #[test]
    fn sampler_is_deterministic() {
        let mut a = PairSampler::new(42, 1e-6).unwrap();
        let mut b = PairSampler::new(42, 1e-6).unwrap();
        for _ in 0..10 {
            assert_eq!(a.sample(), b.sample());
        }
        let mut c = PairSampler::new(43, 1e-6).unwrap();
        assert_ne!(a.sample(), c.sample());
    }

    #[test]
    fn sampler_mean_is_centered() {
        let mut sampler = PairSampler::new(7, 1e-6).unwrap();
        let n = 10_000;
        let mean = (0..n).map(|_| sampler.sample().d()).sum::<f64>() / n as f64;
        assert!((0.45..0.55).contains(&mean), "mean {mean}");
    }

    #[test]
    fn sampler_rejects_bad_epsilon() {
        assert!(PairSampler::new(0, 0.0).is_err());
        assert!(PairSampler::new(0, 0.5).is_err());
    }

    #[test]
    fn entry_values_and_bound() {
        let balanced = DerivativePair::new(0.5).unwrap();
        assert_relative_eq!(operator_entry(&balanced), ENTRY_UPPER_BOUND, epsilon = 1e-12);
        let skewed = DerivativePair::new(0.9).unwrap();
        assert_relative_eq!(operator_entry(&skewed), -2.407_945_608_65, epsilon = 1e-9);

        let mut sampler = PairSampler::new(11, 1e-6).unwrap();
        for _ in 0..1000 {
            let entry = operator_entry(&sampler.sample());
            assert!(entry.is_finite());
            assert!(entry <= ENTRY_UPPER_BOUND + 1e-12);
        }
    }

    #[test]
    fn entry_at_clamp_margin_is_finite() {
        let eps = 1e-6;
        let pair = DerivativePair::new(eps).unwrap();
        let entry = operator_entry(&pair);
        assert!(entry.is_finite());
        assert_relative_eq!(entry, (eps * (1.0 - eps)).ln(), epsilon = 1e-12);
    }

    #[test]
    fn correlation_weighted_entry() {
        let pair = DerivativePair::new(0.5).unwrap();
        // R₂(1) = 1 contributes nothing.
        assert_relative_eq!(
            operator_entry_r2(&pair, 1.0).unwrap(),
            ENTRY_UPPER_BOUND,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            operator_entry_r2(&pair, 0.5).unwrap(),
            -2.425_639_428_06,
            epsilon = 1e-9
        );
        // Decomposition identity.
        let direct = operator_entry_r2(&pair, 0.37).unwrap();
        let split = operator_entry(&pair) + 2.0 * pair_correlation(0.37).ln();
        assert_relative_eq!(direct, split, epsilon = 1e-12);
    }

    #[test]
    fn correlation_weighted_entry_rejects_zero_gap() {
        let pair = DerivativePair::new(0.5).unwrap();
        let err = operator_entry_r2(&pair, 0.0).unwrap_err();
        assert!(err.to_string().contains("u = 0"));
        assert!(operator_entry_r2(&pair, -1.0).is_err());
    }

    #[test]
    fn diagonal_operator_build() {
        let config = SpectrumConfig::new(3, 5).unwrap();
        let op = build_diagonal_operator(&config, false).unwrap();
        assert_eq!(op.dim(), 3);
        for &e in op.entries() {
            assert!(e <= ENTRY_UPPER_BOUND + 1e-12);
        }
        let again = build_diagonal_operator(&config, false).unwrap();
        assert_eq!(op, again);
    }

    #[test]
    fn diagonal_operator_paper_shape() {
        let config = SpectrumConfig::new(1000, 0).unwrap();
        assert_eq!(config.u_grid.len(), 1000);
        assert_eq!(config.u_grid[0], 0.5);
        assert_eq!(config.u_grid[999], 10.0);
        let op = build_diagonal_operator(&config, true).unwrap();
        assert_eq!(op.dim(), 1000);
        assert!(op.entries().iter().all(|e| e.is_finite()));
        let again = build_diagonal_operator(&config, true).unwrap();
        assert_eq!(op, again);
    }

    #[test]
    fn diagonal_operator_rejects_non_finite() {
        assert!(matches!(
            DiagonalOperator::new(vec![-1.0, f64::INFINITY]),
            Err(OperatorError::NonFiniteEntry { index: 1, .. })
        ));
    }

    #[test]
    fn charpoly_eigenvalues_sorted() {
        let op = DiagonalOperator::new(vec![-1.4, -1.5]).unwrap();
        let spectrum = eigenvalues_via_charpoly(&op);
        assert_eq!(spectrum.eigenvalues, vec![-1.5, -1.4]);

        let single = DiagonalOperator::new(vec![0.25]).unwrap();
        assert_eq!(eigenvalues_via_charpoly(&single).eigenvalues, vec![0.25]);
    }

    #[test]
    fn charpoly_vanishes_exactly_at_roots() {
        let config = SpectrumConfig::new(6, 9).unwrap();
        let op = build_diagonal_operator(&config, false).unwrap();
        for &e in op.entries() {
            assert_eq!(op.charpoly_at(e), 0.0);
        }
        assert!(op.charpoly_at(1.0).abs() > 0.0);
    }

    #[test]
    fn charpoly_matches_dense_solver_on_small_n() {
        for n in 2..=10 {
            let config = SpectrumConfig::new(n, n as u64).unwrap();
            let op = build_diagonal_operator(&config, false).unwrap();
            let via_charpoly = eigenvalues_via_charpoly(&op);
            let dense = dense_symmetric_eigenvalues(&op.to_dense()).unwrap();
            for (a, b) in via_charpoly.eigenvalues.iter().zip(&dense) {
                assert!((a - b).abs() < 1e-10, "n={n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn hermiticity_checks() {
        let diag = DiagonalOperator::new(vec![1.0, -2.0, 0.5]).unwrap();
        assert!(hermiticity_check(&diag.to_dense(), 0.0).unwrap());

        let shift = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(!hermiticity_check(&shift, 1e-12).unwrap());

        let p = seeded_orthogonal(5, 3);
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(&[
            1.0, 2.0, 3.0, 4.0, 5.0,
        ]));
        let conjugated = p.transpose() * d * &p;
        assert!(hermiticity_check(&conjugated, 1e-10).unwrap());

        let rect = DMatrix::<f64>::zeros(2, 3);
        assert!(matches!(
            hermiticity_check(&rect, 1e-12),
            Err(OperatorError::NotSquare { .. })
        ));
    }

    #[test]
    fn hermiticity_check_complex_entries() {
        let i = Complex::new(0.0, 1.0);
        let hermitian = DMatrix::from_row_slice(2, 2, &[
            Complex::new(1.0, 0.0),
            i,
            -i,
            Complex::new(2.0, 0.0),
        ]);
        assert!(hermiticity_check_complex(&hermitian, 1e-12).unwrap());
        let broken = DMatrix::from_row_slice(2, 2, &[
            Complex::new(1.0, 0.0),
            i,
            i,
            Complex::new(2.0, 0.0),
        ]);
        assert!(!hermiticity_check_complex(&broken, 1e-12).unwrap());
    }

    #[test]
    fn similarity_identity_transform() {
        let p = DMatrix::identity(2, 2);
        let spectrum = similarity_roundtrip(&[1.0, 2.0], &p).unwrap();
        assert_eq!(spectrum.eigenvalues, vec![1.0, 2.0]);
    }

    #[test]
    fn similarity_shear_transform() {
        let p = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 1.0]);
        let spectrum = similarity_roundtrip(&[1.0, 2.0], &p).unwrap();
        assert_relative_eq!(spectrum.eigenvalues[0], 1.0, epsilon = 1e-10);
        assert_relative_eq!(spectrum.eigenvalues[1], 2.0, epsilon = 1e-10);
    }

    #[test]
    fn similarity_orthogonal_preserves_multiset() {
        let entries: Vec<f64> = (1..=8).map(|i| -0.2 * i as f64).collect();
        let p = seeded_orthogonal(8, 17);
        let spectrum = similarity_roundtrip(&entries, &p).unwrap();
        let mut expected = entries.clone();
        expected.sort_by(f64::total_cmp);
        for (a, b) in spectrum.eigenvalues.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn similarity_rejects_bad_transforms() {
        let singular = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert!(matches!(
            similarity_roundtrip(&[1.0, 2.0], &singular),
            Err(OperatorError::Singular) | Err(OperatorError::IllConditioned { .. })
        ));

        let ill = DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(&[1.0, 1e-12]));
        match similarity_roundtrip(&[1.0, 2.0], &ill) {
            Err(OperatorError::IllConditioned { estimate, .. }) => assert!(estimate > 1e8),
            other => panic!("expected ill-conditioned rejection, got {other:?}"),
        }

        let mismatched = DMatrix::identity(3, 3);
        assert!(matches!(
            similarity_roundtrip(&[1.0, 2.0], &mismatched),
            Err(OperatorError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_spectrum_shape() {
        let spectrum = inverse_time_spectrum(&ZeroTable::bundled());
        assert_eq!(spectrum.eigenvalues.len(), 100);
        assert_eq!(spectrum.eigenvalues[0], 1.0);
        assert_relative_eq!(spectrum.eigenvalues[1], 0.672_376_467_745, epsilon = 1e-9);
        assert!(spectrum.eigenvalues.windows(2).all(|w| w[1] < w[0]));
        assert!(spectrum
            .eigenvalues
            .iter()
            .all(|&l| l > 0.0 && l <= 1.0));
        assert!(spectrum.eigenvalues[99] < spectrum.eigenvalues[9]);
        assert!(spectrum.eigenvalues[9] < spectrum.eigenvalues[1]);
    }
}
