//! The claims audit: a built-in registry of published numeric claims about
//! these constructions, each re-computed at desk scale and classified as
//! `Reproduced` (the number comes out), `NotReproduced` (the computation
//! disagrees), or `NotDerivable` (no configuration of the stated formulas
//! can produce the number, with the obstruction recorded).

use std::fmt;

use serde::Serialize;

use zetalab_core::dynamics::{
    classify_chaos_sweep, iterate_orbit, lyapunov_series, ChaosLabel, MapParams, FIXED_POINT,
};
use zetalab_core::number_theory::{
    counting_formula, explicit_formula_psi, pnt_ratio_sweep, zero_count_empirical, ZeroTable,
};
use zetalab_core::operator::{
    build_diagonal_operator, dense_symmetric_eigenvalues, eigenvalues_via_charpoly,
    inverse_time_spectrum, pair_correlation, seeded_orthogonal, similarity_roundtrip, PairSampler,
    SpectrumConfig, ENTRY_UPPER_BOUND,
};
use zetalab_core::stats::{cluster_summary, hydrogen_levels, shannon_entropy};

use crate::cli::SpectrumArgs;
use crate::commands::spectrum_output;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Reproduced,
    NotReproduced,
    NotDerivable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Reproduced => write!(f, "Reproduced"),
            Verdict::NotReproduced => write!(f, "NotReproduced"),
            Verdict::NotDerivable => write!(f, "NotDerivable"),
        }
    }
}

/// One audited claim.
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: &'static str,
    /// Acceptance-criterion number this claim belongs to (1..=13).
    pub criterion: u8,
    pub subject: &'static str,
    pub claimed: String,
    pub computed: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub claims: Vec<Claim>,
    pub reproduced: usize,
    pub not_reproduced: usize,
    pub not_derivable: usize,
}

impl AuditReport {
    fn new(claims: Vec<Claim>) -> Self {
        let count = |v: Verdict| claims.iter().filter(|c| c.verdict == v).count();
        Self {
            reproduced: count(Verdict::Reproduced),
            not_reproduced: count(Verdict::NotReproduced),
            not_derivable: count(Verdict::NotDerivable),
            claims,
        }
    }
}

/// Fixed-width table for terminal reading.
pub fn render_table(report: &AuditReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<28} {:>4}  {:<14}  {}\n",
        "claim", "crit", "verdict", "computed"
    ));
    out.push_str(&"-".repeat(100));
    out.push('\n');
    for claim in &report.claims {
        out.push_str(&format!(
            "{:<28} {:>4}  {:<14}  {}\n",
            claim.id,
            claim.criterion,
            claim.verdict.to_string(),
            claim.computed
        ));
    }
    out.push_str(&"-".repeat(100));
    out.push('\n');
    out.push_str(&format!(
        "reproduced: {}   not reproduced: {}   not derivable: {}",
        report.reproduced, report.not_reproduced, report.not_derivable
    ));
    out
}

/// Runs every claim check. All randomness derives from `seed`.
pub fn run_audit(seed: u64) -> Result<AuditReport, CliError> {
    let claims = vec![
        claim_uniform_entropy()?,
        claim_zero_counting()?,
        claim_explicit_formula()?,
        claim_pnt_trend(),
        claim_fixed_point()?,
        claim_exponent_identity()?,
        claim_entry_bound(seed)?,
        claim_eigenvalue_realness(seed)?,
        claim_inverse_spectrum(),
        claim_pair_correlation(),
        claim_hydrogen_ground_state(),
        claim_exponent_range()?,
        claim_chaos_threshold()?,
        claim_eigenvalue_clustering(seed)?,
        claim_seeded_determinism(seed)?,
    ];
    Ok(AuditReport::new(claims))
}

fn verdict_if(reproduced: bool) -> Verdict {
    if reproduced {
        Verdict::Reproduced
    } else {
        Verdict::NotReproduced
    }
}

fn claim_uniform_entropy() -> Result<Claim, CliError> {
    let h = shannon_entropy(&vec![0.01; 100])?;
    let ok = (h - 4.605_170).abs() <= 1e-6;
    Ok(Claim {
        id: "uniform-entropy-100",
        criterion: 1,
        subject: "Shannon entropy of 100 uniform exponent bins",
        claimed: "H = ln(100) ≈ 4.605".to_string(),
        computed: format!("H = {h:.9}"),
        verdict: verdict_if(ok),
    })
}

fn claim_zero_counting() -> Result<Claim, CliError> {
    let table = ZeroTable::bundled();
    let formula = counting_formula(100.0);
    let empirical = zero_count_empirical(&table, 100.0)?;
    let mut max_gap = 0.0_f64;
    for t in 20..=100 {
        let gap = (counting_formula(t as f64)
            - zero_count_empirical(&table, t as f64)? as f64)
            .abs();
        max_gap = max_gap.max(gap);
    }
    let ok = (formula - 29.003).abs() <= 0.01 && empirical == 29 && max_gap < 1.5;
    Ok(Claim {
        id: "zero-count-at-100",
        criterion: 2,
        subject: "smoothed counting term vs table count of ordinates ≤ T",
        claimed: "about 29 zeros below T = 100; main term tracks the count".to_string(),
        computed: format!(
            "formula(100) = {formula:.5}, table count = {empirical}, max gap on [20,100] = {max_gap:.3}"
        ),
        verdict: verdict_if(ok),
    })
}

fn claim_explicit_formula() -> Result<Claim, CliError> {
    let table = ZeroTable::bundled();
    let fine = explicit_formula_psi(100.5, &table, 100)?;
    let mut improves = true;
    for x in [50.5, 100.5, 200.5] {
        let coarse = explicit_formula_psi(x, &table, 5)?;
        let best = explicit_formula_psi(x, &table, 100)?;
        improves &= best.abs_error < coarse.abs_error;
    }
    let ok = fine.abs_error < 2.0 && improves;
    Ok(Claim {
        id: "explicit-formula-psi",
        criterion: 3,
        subject: "ψ(x) from the zero sum vs the direct sieve",
        claimed: "the zero sum reconstructs ψ(x), improving with more zeros".to_string(),
        computed: format!(
            "|ψ(100.5) − truncated(K=100)| = {:.4}; deeper truncations improve at x ∈ {{50.5, 100.5, 200.5}}: {improves}",
            fine.abs_error
        ),
        verdict: verdict_if(ok),
    })
}

fn claim_pnt_trend() -> Claim {
    let sweep = pnt_ratio_sweep(&[1e3, 1e4, 1e5, 1e6]);
    let ratios: Vec<f64> = sweep.iter().map(|&(_, _, r)| r).collect();
    let decreasing = ratios
        .windows(2)
        .all(|w| (w[1] - 1.0).abs() < (w[0] - 1.0).abs());
    let ok = (ratios[3] - 1.0845).abs() <= 0.002 && decreasing;
    Claim {
        id: "pnt-ratio-limit",
        criterion: 4,
        subject: "π(x)/(x/ln x) as x grows",
        claimed: "the ratio approaches 1".to_string(),
        computed: format!(
            "ratios at 10³..10⁶ = [{:.4}, {:.4}, {:.4}, {:.4}], distance to 1 strictly decreasing: {decreasing}",
            ratios[0], ratios[1], ratios[2], ratios[3]
        ),
        verdict: verdict_if(ok),
    }
}

fn claim_fixed_point() -> Result<Claim, CliError> {
    let mut worst = 0.0_f64;
    for dt in [0.5, 1.5, 3.0] {
        let params = MapParams::new(FIXED_POINT, dt, 1000, 0)?;
        let orbit = iterate_orbit(&params);
        for &s in &orbit.samples {
            worst = worst.max((s - FIXED_POINT).abs() / FIXED_POINT);
        }
    }
    let ok = worst <= 1e-12;
    Ok(Claim {
        id: "map-fixed-point",
        criterion: 5,
        subject: "invariance of T = 2πe under the map",
        claimed: "the increment vanishes at T = 2πe for every step size".to_string(),
        computed: format!("max relative drift over 1000 iterations, ΔT ∈ {{0.5, 1.5, 3.0}}: {worst:.3e}"),
        verdict: verdict_if(ok),
    })
}

fn claim_exponent_identity() -> Result<Claim, CliError> {
    let params = MapParams::new(14.137, 1.5, 10_000, 0)?;
    let orbit = iterate_orbit(&params);
    let series = lyapunov_series(&orbit)?;
    let mut worst = 0.0_f64;
    for (w, e) in orbit.samples.windows(2).zip(&series.exponents) {
        if e.is_finite() {
            let diff = (w[1] - w[0]).abs();
            worst = worst.max((e.exp() * 1.5 - diff).abs() / diff);
        }
    }
    let single = {
        let p = MapParams::new(std::f64::consts::TAU, 1.5, 1, 0)?;
        lyapunov_series(&iterate_orbit(&p))?.exponents[0]
    };
    let ok = worst <= 1e-12 && single.abs() <= 1e-12;
    Ok(Claim {
        id: "exponent-step-identity",
        criterion: 6,
        subject: "exponents as logs of normalized step sizes",
        claimed: "exp(exponent)·ΔT recovers |T_{n+1} − T_n|; the step at T = 2π has exponent 0"
            .to_string(),
        computed: format!(
            "max relative deviation {worst:.3e}; exponent at T = 2π: {single:.3e}"
        ),
        verdict: verdict_if(ok),
    })
}

fn claim_entry_bound(seed: u64) -> Result<Claim, CliError> {
    let mut sampler = PairSampler::new(seed, 1e-6)?;
    let mut max_entry = f64::NEG_INFINITY;
    let mut max_constraint_dev = 0.0_f64;
    for _ in 0..100_000 {
        let pair = sampler.sample();
        max_constraint_dev = max_constraint_dev.max((pair.d() + pair.d_bar() - 1.0).abs());
        max_entry = max_entry.max(pair.d().ln() + pair.d_bar().ln());
    }
    let ok = max_entry <= ENTRY_UPPER_BOUND + 1e-12 && max_constraint_dev <= 1e-15;
    Ok(Claim {
        id: "entry-upper-bound",
        criterion: 7,
        subject: "ln(∂) + ln(∂̄) under ∂ + ∂̄ = 1",
        claimed: "every entry obeys the AM-GM ceiling ln(¼) ≈ −1.3863".to_string(),
        computed: format!(
            "10⁵ samples: max entry = {max_entry:.6}, max |∂ + ∂̄ − 1| = {max_constraint_dev:.2e}"
        ),
        verdict: verdict_if(ok),
    })
}

fn claim_eigenvalue_realness(seed: u64) -> Result<Claim, CliError> {
    // Small-n: factored characteristic polynomial vs dense solver.
    let mut worst_dense_gap = 0.0_f64;
    for n in 2..=10 {
        let config = SpectrumConfig::new(n, seed.wrapping_add(n as u64))?;
        let operator = build_diagonal_operator(&config, false)?;
        let via_charpoly = eigenvalues_via_charpoly(&operator);
        let dense = dense_symmetric_eigenvalues(&operator.to_dense())?;
        for (a, b) in via_charpoly.eigenvalues.iter().zip(&dense) {
            worst_dense_gap = worst_dense_gap.max((a - b).abs());
        }
    }
    // Similarity round-trip with a seeded orthogonal transform, n = 8.
    let entries: Vec<f64> = {
        let config = SpectrumConfig::new(8, seed)?;
        build_diagonal_operator(&config, false)?.entries().to_vec()
    };
    let p = seeded_orthogonal(8, seed.wrapping_add(99));
    let spectrum = similarity_roundtrip(&entries, &p)?;
    let mut expected = entries.clone();
    expected.sort_by(f64::total_cmp);
    let mut worst_roundtrip = 0.0_f64;
    for (a, b) in spectrum.eigenvalues.iter().zip(&expected) {
        worst_roundtrip = worst_roundtrip.max((a - b).abs());
    }
    let ok = worst_dense_gap <= 1e-10 && worst_roundtrip <= 1e-9;
    Ok(Claim {
        id: "eigenvalue-realness",
        criterion: 8,
        subject: "realness and solver agreement of operator eigenvalues",
        claimed: "the generated operators have real eigenvalues".to_string(),
        computed: format!(
            "charpoly vs dense solver (n ≤ 10): max gap {worst_dense_gap:.2e}; orthogonal round-trip (n = 8): max gap {worst_roundtrip:.2e}"
        ),
        verdict: verdict_if(ok),
    })
}

fn claim_inverse_spectrum() -> Claim {
    let spectrum = inverse_time_spectrum(&ZeroTable::bundled());
    let decreasing = spectrum.eigenvalues.windows(2).all(|w| w[1] < w[0]);
    let ok = spectrum.eigenvalues[0] == 1.0
        && (spectrum.eigenvalues[1] - 0.672_374).abs() <= 1e-5
        && decreasing;
    Claim {
        id: "inverse-ordinate-spectrum",
        criterion: 9,
        subject: "λ_i = T̄₁/T̄_i over the bundled ordinates",
        claimed: "λ₁ = 1 and the sequence decays toward 0".to_string(),
        computed: format!(
            "λ₁ = {}, λ₂ = {:.6}, strictly decreasing: {decreasing}",
            spectrum.eigenvalues[0], spectrum.eigenvalues[1]
        ),
        verdict: verdict_if(ok),
    }
}

fn claim_pair_correlation() -> Claim {
    let r_half = pair_correlation(0.5);
    let mut in_bounds = true;
    for i in 0..=100_000 {
        let r = pair_correlation(i as f64 * 1e-4);
        in_bounds &= (0.0..=1.0).contains(&r);
    }
    let ok = pair_correlation(0.0) == 0.0
        && pair_correlation(1.0) == 1.0
        && (r_half - 0.594_715).abs() <= 1e-6
        && in_bounds;
    Claim {
        id: "pair-correlation-form",
        criterion: 10,
        subject: "R₂(u) = 1 − (sin(πu)/(πu))²",
        claimed: "R₂(0) = 0, R₂(1) = 1, values stay in [0, 1]".to_string(),
        computed: format!(
            "R₂(0) = {}, R₂(1) = {}, R₂(0.5) = {r_half:.9}, bounded on 10⁵ grid points: {in_bounds}",
            pair_correlation(0.0),
            pair_correlation(1.0)
        ),
        verdict: verdict_if(ok),
    }
}

fn claim_hydrogen_ground_state() -> Claim {
    let levels = hydrogen_levels(100);
    let mut scale_ok = true;
    for (i, &e) in levels.levels.iter().enumerate() {
        let n = (i + 1) as f64;
        scale_ok &= (e.abs() * n * n - levels.rydberg_ev).abs() <= 1e-9 * levels.rydberg_ev;
    }
    let ok = (levels.levels[0] + 13.6057).abs() <= 0.001 && scale_ok;
    Claim {
        id: "hydrogen-ground-state",
        criterion: 11,
        subject: "E_n = −m_e·e⁴/(8ε₀²h²)·1/n² from pinned constants",
        claimed: "E₁ ≈ −13.6 eV with 1/n² scaling".to_string(),
        computed: format!(
            "E₁ = {:.6} eV, |E_n|·n² constant to 1e-9 relative: {scale_ok}",
            levels.levels[0]
        ),
        verdict: verdict_if(ok),
    }
}

fn claim_exponent_range() -> Result<Claim, CliError> {
    let params = MapParams::new(14.137, 1.5, 10_000, 0)?;
    let orbit = iterate_orbit(&params);
    let series = lyapunov_series(&orbit)?;
    let finite: Vec<f64> = series
        .exponents
        .iter()
        .copied()
        .filter(|e| e.is_finite())
        .collect();
    let lo = finite.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = finite.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let matches_claim = lo >= 1.95 && hi <= 2.3;
    Ok(Claim {
        id: "exponent-range-1.95-2.3",
        criterion: 12,
        subject: "claimed span of the exponent series",
        claimed: "100 exponents evenly spread between 1.95 and 2.3".to_string(),
        computed: format!(
            "exponents from the default run span [{lo:.4}, {hi:.4}]; below the fixed point |f(T)| ≤ 1, so ln|f| ≤ 0 and no run of the stated recurrence reaches 1.95"
        ),
        verdict: if matches_claim {
            Verdict::Reproduced
        } else {
            Verdict::NotDerivable
        },
    })
}

fn claim_chaos_threshold() -> Result<Claim, CliError> {
    let grid: Vec<f64> = (1..=40).map(|i| i as f64 * 0.1).collect();
    let sweep = classify_chaos_sweep(&grid, 14.137, 1000)?;
    let boundary = sweep
        .windows(2)
        .find(|w| w[0].label != w[1].label)
        .map(|w| w[1].delta_t);
    let chaotic_below = sweep
        .iter()
        .filter(|c| c.delta_t < 2.4)
        .all(|c| c.label == ChaosLabel::Chaotic);
    let nonchaotic_above = sweep
        .iter()
        .filter(|c| c.delta_t > 2.5)
        .all(|c| c.label == ChaosLabel::NonChaotic);
    let matches_claim = chaotic_below && nonchaotic_above && boundary.is_some();
    Ok(Claim {
        id: "chaos-threshold-2.4-vs-2.5",
        criterion: 12,
        subject: "chaotic/non-chaotic boundary in the step size (stated once as 2.4, once as 2.5)",
        claimed: "chaotic for step sizes below ≈2.4–2.5, non-chaotic above".to_string(),
        computed: format!(
            "sweep of ΔT over 0.1..4.0 from t0 = 14.137: every mean exponent is negative; observed boundary: {}",
            match boundary {
                Some(b) => format!("{b:.2}"),
                None => "none (all non-chaotic)".to_string(),
            }
        ),
        verdict: verdict_if(matches_claim),
    })
}

fn claim_eigenvalue_clustering(seed: u64) -> Result<Claim, CliError> {
    let config = SpectrumConfig::new(1000, seed)?;
    let operator = build_diagonal_operator(&config, true)?;
    let spectrum = eigenvalues_via_charpoly(&operator);
    let summary = cluster_summary(&spectrum.eigenvalues)?;
    let matches_claim = (summary.modal_bin_center + 0.131).abs() <= 0.01;
    Ok(Claim {
        id: "eigenvalue-clustering-0.131",
        criterion: 12,
        subject: "tabulated eigenvalues near −0.1311/−0.1312 with one zero entry",
        claimed: "1000 eigenvalues cluster around −0.131".to_string(),
        computed: format!(
            "observed mean {:.4}, modal bin center {:.4}; every entry is ≤ ln(¼) ≈ −1.3863 by AM-GM, so values near −0.131 cannot arise from ln(∂·R₂) + ln(∂̄·R₂) with ∂ + ∂̄ = 1 and R₂ ≤ 1",
            summary.mean, summary.modal_bin_center
        ),
        verdict: if matches_claim {
            Verdict::Reproduced
        } else {
            Verdict::NotDerivable
        },
    })
}

fn claim_seeded_determinism(seed: u64) -> Result<Claim, CliError> {
    let args = SpectrumArgs {
        n: 500,
        use_r2: true,
        u_min: 0.5,
        u_max: 10.0,
        epsilon: 1e-6,
    };
    let first = spectrum_output(&args, seed)?;
    let second = spectrum_output(&args, seed)?;
    let identical = first.csv == second.csv
        && first.json == second.json
        && first.svg == second.svg
        && first.summary == second.summary;
    Ok(Claim {
        id: "seeded-determinism",
        criterion: 13,
        subject: "bytes of seeded pipeline outputs across repeat runs",
        claimed: "a fixed seed reproduces every emitted byte".to_string(),
        computed: format!("two seeded spectrum builds serialized identically: {identical}"),
        verdict: verdict_if(identical),
    })
}
