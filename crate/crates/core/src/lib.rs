//! Numerical laboratory around the distribution of Riemann zeta zeros.
//!
//! The crate groups four loosely coupled toolkits:
//!
//! - [`dynamics`] — the one-dimensional iterative map
//!   `T_{n+1} = T_n + ΔT·((T/2π)·ln(T/2π) − T/2π)` together with orbit
//!   generation, Lyapunov-exponent series, chaos classification, and
//!   bifurcation scans over the step size.
//! - [`number_theory`] — zero-ordinate tables, the smoothed zero-counting
//!   main term, the Chebyshev function `ψ(x)` computed directly by sieve and
//!   through its truncated explicit formula, and the prime-counting ratio
//!   `π(x)/(x/ln x)`.
//! - [`operator`] — the log-derivative construction `ln(∂) + ln(∂̄)` under
//!   the constraint `∂ + ∂̄ = 1`: pair sampling, the Montgomery pair
//!   correlation `R₂(u)`, diagonal random operators, eigenvalue extraction
//!   via the characteristic polynomial, similarity round-trips, and the
//!   inverse-ordinate spectrum `λ_i = T̄₁/T̄_i`.
//! - [`stats`] — Shannon entropy, histograms, clustering summaries, hydrogen
//!   energy levels from pinned CODATA constants, and distribution-overlap
//!   comparison reports.
//!
//! All operations are deterministic: randomness flows from explicit 64-bit
//! seeds through a pinned ChaCha8 generator, and grid scans emit results in
//! grid order whether or not the `parallel` feature (on by default) fans the
//! work out across threads.

pub mod dynamics;
pub mod number_theory;
pub mod operator;
pub mod stats;

mod par;

// Matrix types appear in the operator module's public signatures.
pub use nalgebra;
