//! Zero-ordinate tables, zero counting, the Chebyshev function, and the
//! prime-counting ratio.
//!
//! The counting side uses the smoothed main term
//! `N(T) ≈ (T/2π)·ln(T/2π) − T/2π + 7/8`; the oscillating remainder is
//! deliberately dropped so that its size can be *measured* against the
//! empirical count from a zero table. `ψ(x)` is computed two independent
//! ways — directly as `Σ_{p^k ≤ x} ln p` over a sieve, and through the
//! truncated explicit formula
//! `x − Σ_k 2·Re(x^{ρ_k}/ρ_k) − ln(2π) − ½·ln(1 − x⁻²)` with
//! `ρ_k = ½ + i·T̄_k` — so the truncation error is observable.

mod bundled;

use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

/// `−ζ′(0)/ζ(0)` instantiated as the constant `ln(2π)`.
const LOG_TWO_PI: f64 = 1.837_877_066_409_345_5;

/// Half-width of the window in which `x` counts as sitting on a prime-power
/// jump of `ψ`.
const PRIME_POWER_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("failed to read zero table {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: cannot parse ordinate from {content:?}")]
    Parse { line: usize, content: String },
    #[error("line {line}: ordinate {value} is not positive")]
    NonPositive { line: usize, value: f64 },
    #[error("line {line}: ordinate {value} does not exceed its predecessor {previous}")]
    NotAscending {
        line: usize,
        value: f64,
        previous: f64,
    },
    #[error("zero table is empty")]
    Empty,
    #[error("T = {query} exceeds table coverage (largest ordinate {max})")]
    OutOfRange { query: f64, max: f64 },
    #[error("requested {requested} zeros but the table holds {available}")]
    InsufficientZeros { requested: usize, available: usize },
    #[error("explicit formula requires x > 1, got {0}")]
    ArgumentTooSmall(f64),
}

/// Where a table's ordinates came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroSource {
    Bundled,
    File(PathBuf),
}

impl fmt::Display for ZeroSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroSource::Bundled => write!(f, "bundled"),
            ZeroSource::File(p) => write!(f, "{}", p.display()),
        }
    }
}

/// Strictly ascending, strictly positive ordinates `T̄_i` of nontrivial
/// zeros `ρ_i = ½ + i·T̄_i`. Construction validates the invariants, so a
/// `ZeroTable` is never empty, unordered, or non-positive.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: ZeroSource,
}

impl ZeroTable {
    /// The compiled-in table of the first 100 ordinates.
    pub fn bundled() -> Self {
        Self {
            ordinates: bundled::BUNDLED_ORDINATES.to_vec(),
            source: ZeroSource::Bundled,
        }
    }

    /// Parses a table from a UTF-8 text file: one decimal ordinate per line,
    /// blank lines skipped, `#` starts a comment. Errors cite the 1-based
    /// line number.
    pub fn from_file(path: &Path) -> Result<Self, TableError> {
        let text = std::fs::read_to_string(path).map_err(|source| TableError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut ordinates = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if content.is_empty() {
                continue;
            }
            let value: f64 = content.parse().map_err(|_| TableError::Parse {
                line,
                content: content.to_string(),
            })?;
            if !(value > 0.0) || !value.is_finite() {
                return Err(TableError::NonPositive { line, value });
            }
            if let Some(&previous) = ordinates.last() {
                if value <= previous {
                    return Err(TableError::NotAscending {
                        line,
                        value,
                        previous,
                    });
                }
            }
            ordinates.push(value);
        }
        Self::from_ordinates(ordinates, ZeroSource::File(path.to_path_buf()))
    }

    /// Wraps a pre-built ordinate list, validating the table invariants.
    pub fn from_ordinates(ordinates: Vec<f64>, source: ZeroSource) -> Result<Self, TableError> {
        if ordinates.is_empty() {
            return Err(TableError::Empty);
        }
        for (i, w) in ordinates.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(TableError::NotAscending {
                    line: i + 2,
                    value: w[1],
                    previous: w[0],
                });
            }
        }
        if !(ordinates[0] > 0.0) {
            return Err(TableError::NonPositive {
                line: 1,
                value: ordinates[0],
            });
        }
        Ok(Self { ordinates, source })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn source(&self) -> &ZeroSource {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty tables
    }

    pub fn max_ordinate(&self) -> f64 {
        *self.ordinates.last().expect("table is never empty")
    }
}

/// Comparison of the two `ψ(x)` routes at one argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PsiComparison {
    pub x: f64,
    /// Sieve value `Σ_{p^k ≤ x} ln p`.
    pub direct: f64,
    /// Truncated explicit formula using `zeros_used` conjugate pairs.
    pub explicit_truncated: f64,
    pub zeros_used: usize,
    pub abs_error: f64,
    /// Set when `x` sits within `1e-9` of an integer prime power, where the
    /// jump of `ψ` makes the comparison ill-posed.
    pub near_prime_power: bool,
}

/// Smoothed zero-counting main term `(T/2π)·ln(T/2π) − T/2π + 7/8`.
///
/// The oscillating remainder is dropped by design; callers measure it by
/// comparing against [`zero_count_empirical`].
pub fn counting_formula(t: f64) -> f64 {
    assert!(t > 0.0, "counting formula requires T > 0, got {t}");
    let x = t / std::f64::consts::TAU;
    x * x.ln() - x + 0.875
}

/// Number of table ordinates `≤ t`. Queries beyond the table maximum are
/// rejected so a too-small table can never silently undercount.
pub fn zero_count_empirical(zeros: &ZeroTable, t: f64) -> Result<usize, TableError> {
    if t > zeros.max_ordinate() {
        return Err(TableError::OutOfRange {
            query: t,
            max: zeros.max_ordinate(),
        });
    }
    Ok(zeros.ordinates().partition_point(|&z| z <= t))
}

/// All primes `≤ limit`, ascending (empty when `limit < 2`).
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    is_prime[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if is_prime[i] {
            let mut j = i * i;
            while j <= n {
                is_prime[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is_prime
        .iter()
        .enumerate()
        .filter_map(|(i, &p)| p.then_some(i as u64))
        .collect()
}

/// Chebyshev function `ψ(x) = Σ_{p^k ≤ x} ln p` by direct sieve.
pub fn chebyshev_psi(x: f64) -> f64 {
    assert!(x >= 1.0, "ψ requires x ≥ 1, got {x}");
    let mut total = 0.0;
    for p in sieve_primes(x.floor() as u64) {
        let log_p = (p as f64).ln();
        let mut power = p as f64;
        while power <= x {
            total += log_p;
            // p ≤ x ≤ f64::MAX^(1/2) in practice; guard anyway
            if power > x / p as f64 {
                break;
            }
            power *= p as f64;
        }
    }
    total
}

/// `ψ(x)` through the truncated explicit formula against the direct sieve.
///
/// Uses the first `zeros_used` ordinates paired with their conjugates:
/// each `ρ = ½ + iT̄` contributes `2·Re(x^ρ/ρ)`.
pub fn explicit_formula_psi(
    x: f64,
    zeros: &ZeroTable,
    zeros_used: usize,
) -> Result<PsiComparison, TableError> {
    if !(x > 1.0) {
        return Err(TableError::ArgumentTooSmall(x));
    }
    if zeros_used > zeros.len() {
        return Err(TableError::InsufficientZeros {
            requested: zeros_used,
            available: zeros.len(),
        });
    }
    let zero_sum: f64 = zeros.ordinates()[..zeros_used]
        .iter()
        .map(|&t| {
            // 2·Re(x^(½+iT)/(½+iT)) = 2√x·(cos(T ln x)/2 + T·sin(T ln x))/(¼+T²)
            let theta = t * x.ln();
            2.0 * x.sqrt() * (0.5 * theta.cos() + t * theta.sin()) / (0.25 + t * t)
        })
        .sum();
    let explicit_truncated = x - zero_sum - LOG_TWO_PI - 0.5 * (1.0 - x.powi(-2)).ln();
    let direct = chebyshev_psi(x);
    Ok(PsiComparison {
        x,
        direct,
        explicit_truncated,
        zeros_used,
        abs_error: (direct - explicit_truncated).abs(),
        near_prime_power: is_near_prime_power(x),
    })
}

fn is_near_prime_power(x: f64) -> bool {
    let candidate = x.round();
    if candidate < 2.0 || (x - candidate).abs() > PRIME_POWER_TOLERANCE {
        return false;
    }
    let mut m = candidate as u64;
    // Strip the smallest prime factor repeatedly; a prime power strips to 1.
    let mut factor = 0u64;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            factor = d;
            break;
        }
        d += 1;
    }
    if factor == 0 {
        return true; // candidate itself is prime
    }
    while m % factor == 0 {
        m /= factor;
    }
    m == 1
}

/// Prime-counting ratio `π(x) / (x / ln x)`.
pub fn pnt_ratio(x: f64) -> f64 {
    assert!(x >= 2.0, "prime-counting ratio requires x ≥ 2, got {x}");
    let count = sieve_primes(x.floor() as u64).len() as f64;
    count / (x / x.ln())
}

/// Prime-counting ratios at several points from one shared sieve.
/// `points` need not be sorted; outputs follow input order.
pub fn pnt_ratio_sweep(points: &[f64]) -> Vec<(f64, usize, f64)> {
    let max = points.iter().copied().fold(2.0_f64, f64::max);
    let primes = sieve_primes(max.floor() as u64);
    points
        .iter()
        .map(|&x| {
            assert!(x >= 2.0, "prime-counting ratio requires x ≥ 2, got {x}");
            let count = primes.partition_point(|&p| p as f64 <= x);
            (x, count, count as f64 / (x / x.ln()))
        })
        .collect()
}
