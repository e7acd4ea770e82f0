//! Maps each subcommand to its computation and serialized outputs.
//!
//! Every command produces a [`CommandOutput`]: a one-line JSON summary for
//! stdout plus optional CSV/JSON/SVG documents. Building the documents is
//! pure; [`run`] only adds directory creation and file writes, so identical
//! invocations yield byte-identical files.

use std::path::Path;

use serde::Serialize;
use serde_json::json;

use zetalab_core::dynamics::{
    bifurcation_scan, iterate_orbit, lyapunov_series, MapParams, Termination,
};
use zetalab_core::number_theory::{
    counting_formula, explicit_formula_psi, pnt_ratio_sweep, zero_count_empirical, ZeroTable,
};
use zetalab_core::operator::{
    build_diagonal_operator, eigenvalues_via_charpoly, inverse_time_spectrum, linspace,
    SpectrumConfig,
};
use zetalab_core::stats::{
    cluster_summary, compare_spectra, histogram, hydrogen_levels, shared_grid_masses,
    EntropyReport,
};

use crate::audit;
use crate::cli::{
    BifurcationArgs, Cli, Command, CompareArgs, CompareSource, EntropyArgs, FormatKind,
    HydrogenArgs, OrbitArgs, PntArgs, PsiArgs, SpectrumArgs, ZeroTableArgs, ZerosArgs,
};
use crate::emit::{csv_document, fmt_sig, json_document, json_line, write_text};
use crate::error::CliError;
use crate::svg::{self, Series};

/// Everything a command wants to say: a stdout summary plus the documents
/// to write, keyed by the command's file stem.
pub struct CommandOutput {
    pub name: &'static str,
    pub summary: serde_json::Value,
    pub stdout_prelude: Option<String>,
    pub csv: Option<String>,
    pub json: Option<String>,
    pub svg: Option<String>,
}

/// Executes the parsed command line: builds the output, writes the requested
/// formats under `output_dir`, prints the summary line.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let output = build_output(cli)?;
    write_output(&output, &cli.output_dir, &cli.formats)?;
    if let Some(prelude) = &output.stdout_prelude {
        println!("{prelude}");
    }
    println!("{}", json_line(&output.summary)?);
    Ok(())
}

/// Pure part of [`run`]: dispatches to the per-command builder.
pub fn build_output(cli: &Cli) -> Result<CommandOutput, CliError> {
    match &cli.command {
        Command::Orbit(args) => orbit_output(args),
        Command::Lyapunov(args) => lyapunov_output(args),
        Command::Bifurcation(args) => bifurcation_output(args),
        Command::Entropy(args) => entropy_output(args),
        Command::Spectrum(args) => spectrum_output(args, cli.seed),
        Command::InverseSpectrum(args) => inverse_spectrum_output(args),
        Command::Zeros(args) => zeros_output(args),
        Command::Psi(args) => psi_output(args),
        Command::Pnt(args) => pnt_output(args),
        Command::Hydrogen(args) => hydrogen_output(args),
        Command::Compare(args) => compare_output(args, cli.seed),
        Command::Audit => audit_output(cli.seed),
    }
}

fn write_output(
    output: &CommandOutput,
    dir: &Path,
    formats: &[FormatKind],
) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::input(format!("cannot create {}: {e}", dir.display())))?;
    for format in formats {
        let (ext, content) = match format {
            FormatKind::Csv => ("csv", &output.csv),
            FormatKind::Json => ("json", &output.json),
            FormatKind::Svg => ("svg", &output.svg),
        };
        if let Some(content) = content {
            write_text(&dir.join(format!("{}.{ext}", output.name)), content)?;
        }
    }
    Ok(())
}

fn load_table(path: &Option<std::path::PathBuf>) -> Result<ZeroTable, CliError> {
    match path {
        Some(p) => Ok(ZeroTable::from_file(p)?),
        None => Ok(ZeroTable::bundled()),
    }
}

fn termination_label(t: &Termination) -> serde_json::Value {
    match t {
        Termination::Completed => json!("completed"),
        Termination::DomainExit(k) => json!({ "domain_exit": k }),
    }
}

fn orbit_output(args: &OrbitArgs) -> Result<CommandOutput, CliError> {
    let params = MapParams::new(args.t0, args.dt, args.n, 0)?;
    let orbit = iterate_orbit(&params);

    let csv = csv_document(
        &["step", "t"],
        orbit
            .samples
            .iter()
            .enumerate()
            .map(|(i, &t)| vec![i.to_string(), fmt_sig(t)]),
    );
    let points: Vec<(f64, f64)> = orbit
        .samples
        .iter()
        .enumerate()
        .map(|(i, &t)| (i as f64, t))
        .collect();
    let svg = svg::line_plot(
        "Orbit of the counting-term map",
        "iteration step",
        "T",
        &[Series::new(format!("ΔT = {}", args.dt), points)],
    );
    let summary = json!({
        "command": "orbit",
        "t0": args.t0,
        "delta_t": args.dt,
        "iterations": args.n,
        "samples": orbit.samples.len(),
        "termination": termination_label(&orbit.termination),
        "final": orbit.samples.last().copied(),
    });
    Ok(CommandOutput {
        name: "orbit",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&orbit)?),
        svg: Some(svg),
    })
}

fn lyapunov_output(args: &OrbitArgs) -> Result<CommandOutput, CliError> {
    let params = MapParams::new(args.t0, args.dt, args.n, 0)?;
    let orbit = iterate_orbit(&params);
    let series = lyapunov_series(&orbit)?;

    let csv = csv_document(
        &["step", "exponent"],
        series
            .exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| vec![i.to_string(), fmt_sig(e)]),
    );
    let points: Vec<(f64, f64)> = series
        .exponents
        .iter()
        .enumerate()
        .map(|(i, &e)| (i as f64, e))
        .collect();
    let svg = svg::line_plot(
        "Lyapunov exponents vs iteration step",
        "iteration step",
        "exponent (nats)",
        &[Series::new(format!("ΔT = {}", args.dt), points)],
    );
    #[derive(Serialize)]
    struct LyapunovDoc<'a> {
        params: &'a MapParams,
        termination: &'a Termination,
        exponents: &'a [f64],
        mean: f64,
        valid_count: usize,
    }
    let doc = LyapunovDoc {
        params: &orbit.params,
        termination: &orbit.termination,
        exponents: &series.exponents,
        mean: series.mean,
        valid_count: series.valid_count,
    };
    let summary = json!({
        "command": "lyapunov",
        "mean": if series.mean.is_finite() { json!(series.mean) } else { json!("-inf") },
        "valid_count": series.valid_count,
        "steps": series.exponents.len(),
        "termination": termination_label(&orbit.termination),
    });
    Ok(CommandOutput {
        name: "lyapunov",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&doc)?),
        svg: Some(svg),
    })
}

fn bifurcation_output(args: &BifurcationArgs) -> Result<CommandOutput, CliError> {
    let dt_max = args.dt_max.unwrap_or(args.dt_min);
    if args.dt_count == 0 {
        return Err(CliError::input("--dt-count must be at least 1"));
    }
    if args.dt_count > 1 && !(dt_max > args.dt_min) {
        return Err(CliError::input(
            "--dt-max must exceed --dt-min when --dt-count is greater than 1",
        ));
    }
    let grid = if args.dt_count == 1 {
        vec![args.dt_min]
    } else {
        linspace(args.dt_min, dt_max, args.dt_count)
    };
    let transient = args.transient.unwrap_or(args.n / 10);
    let scan = bifurcation_scan(&grid, args.t0, args.n, transient)?;

    let mut rows = Vec::new();
    for tail in &scan.tails {
        for (i, &v) in tail.samples.iter().enumerate() {
            rows.push(vec![
                fmt_sig(tail.delta_t),
                (transient + 1 + i).to_string(),
                fmt_sig(v),
            ]);
        }
    }
    let csv = csv_document(&["delta_t", "step", "value"], rows.into_iter());

    let svg = if grid.len() == 1 {
        let points: Vec<(f64, f64)> = scan.tails[0]
            .samples
            .iter()
            .enumerate()
            .map(|(i, &v)| ((transient + 1 + i) as f64, v))
            .collect();
        svg::scatter_plot(
            "Iterate values over one long run",
            "iteration step",
            "T",
            &[Series::new(format!("ΔT = {}", grid[0]), points)],
        )
    } else {
        let points: Vec<(f64, f64)> = scan
            .tails
            .iter()
            .flat_map(|tail| tail.samples.iter().map(|&v| (tail.delta_t, v)))
            .collect();
        svg::scatter_plot(
            "Bifurcation scan over step size",
            "ΔT",
            "post-transient T",
            &[Series::new("tail samples", points)],
        )
    };

    #[derive(Serialize)]
    struct ScanDoc<'a> {
        t0: f64,
        iterations: usize,
        transient: usize,
        scan: &'a zetalab_core::dynamics::BifurcationScan,
    }
    let truncated = scan.tails.iter().filter(|t| t.truncated).count();
    let doc = ScanDoc {
        t0: args.t0,
        iterations: args.n,
        transient,
        scan: &scan,
    };
    let summary = json!({
        "command": "bifurcation",
        "grid_points": grid.len(),
        "iterations": args.n,
        "transient": transient,
        "truncated_tails": truncated,
    });
    Ok(CommandOutput {
        name: "bifurcation",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&doc)?),
        svg: Some(svg),
    })
}

fn entropy_output(args: &EntropyArgs) -> Result<CommandOutput, CliError> {
    let report = match (&args.uniform, &args.probs) {
        (Some(n), None) => {
            if *n == 0 {
                return Err(CliError::input("--uniform needs at least one outcome"));
            }
            EntropyReport::uniform(*n)?
        }
        (None, Some(probs)) => EntropyReport::new(probs.clone())?,
        (None, None) => EntropyReport::uniform(100)?,
        (Some(_), Some(_)) => unreachable!("clap rejects conflicting flags"),
    };

    let csv = csv_document(
        &["index", "probability"],
        report
            .probabilities
            .iter()
            .enumerate()
            .map(|(i, &p)| vec![i.to_string(), fmt_sig(p)]),
    );
    let points: Vec<(f64, f64)> = report
        .probabilities
        .iter()
        .enumerate()
        .map(|(i, &p)| (i as f64, p))
        .collect();
    let svg = svg::line_plot(
        "Probability vector",
        "index",
        "probability",
        &[Series::new("p", points)],
    );
    let summary = json!({ "entropy": report.entropy });
    Ok(CommandOutput {
        name: "entropy",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&report)?),
        svg: Some(svg),
    })
}

pub(crate) fn spectrum_output(args: &SpectrumArgs, seed: u64) -> Result<CommandOutput, CliError> {
    if !(args.u_max > args.u_min) && args.n > 1 {
        return Err(CliError::input("--u-max must exceed --u-min"));
    }
    let grid = linspace(args.u_min, args.u_max, args.n.max(1));
    let config = SpectrumConfig::with_grid(args.n, seed, grid, args.epsilon)?;
    let operator = build_diagonal_operator(&config, args.use_r2)?;
    let spectrum = eigenvalues_via_charpoly(&operator);
    let summary_stats = cluster_summary(&spectrum.eigenvalues)?;

    let csv = csv_document(
        &["index", "eigenvalue"],
        spectrum
            .eigenvalues
            .iter()
            .enumerate()
            .map(|(i, &e)| vec![i.to_string(), fmt_sig(e)]),
    );
    let hist = histogram(&spectrum.eigenvalues, 50)?;
    let svg = svg::histogram_plot(
        "Eigenvalue histogram",
        "eigenvalue",
        "count",
        &hist,
    );
    #[derive(Serialize)]
    struct SpectrumDoc<'a> {
        config: &'a SpectrumConfig,
        use_r2: bool,
        summary: zetalab_core::stats::ClusterSummary,
        eigenvalues: &'a [f64],
    }
    let doc = SpectrumDoc {
        config: &config,
        use_r2: args.use_r2,
        summary: summary_stats,
        eigenvalues: &spectrum.eigenvalues,
    };
    let summary = json!({
        "command": "spectrum",
        "n": args.n,
        "seed": seed,
        "use_r2": args.use_r2,
        "mean": summary_stats.mean,
        "stdev": summary_stats.stdev,
        "modal_bin_center": summary_stats.modal_bin_center,
    });
    Ok(CommandOutput {
        name: "spectrum",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&doc)?),
        svg: Some(svg),
    })
}

fn inverse_spectrum_output(args: &ZeroTableArgs) -> Result<CommandOutput, CliError> {
    let table = load_table(&args.zeros_file)?;
    let spectrum = inverse_time_spectrum(&table);

    let csv = csv_document(
        &["index", "ordinate", "lambda"],
        table
            .ordinates()
            .iter()
            .zip(&spectrum.eigenvalues)
            .enumerate()
            .map(|(i, (&t, &l))| vec![(i + 1).to_string(), fmt_sig(t), fmt_sig(l)]),
    );
    let points: Vec<(f64, f64)> = spectrum
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(i, &l)| ((i + 1) as f64, l))
        .collect();
    let svg = svg::scatter_plot(
        "Inverse-ordinate spectrum",
        "index",
        "λ",
        &[Series::new("λ_i = T̄₁/T̄_i", points)],
    );
    #[derive(Serialize)]
    struct InverseDoc<'a> {
        source: String,
        ordinates: &'a [f64],
        eigenvalues: &'a [f64],
    }
    let doc = InverseDoc {
        source: table.source().to_string(),
        ordinates: table.ordinates(),
        eigenvalues: &spectrum.eigenvalues,
    };
    let summary = json!({
        "command": "inverse-spectrum",
        "count": spectrum.eigenvalues.len(),
        "lambda_1": spectrum.eigenvalues[0],
        "lambda_2": spectrum.eigenvalues.get(1),
    });
    Ok(CommandOutput {
        name: "inverse-spectrum",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&doc)?),
        svg: Some(svg),
    })
}

fn zeros_output(args: &ZerosArgs) -> Result<CommandOutput, CliError> {
    let table = load_table(&args.zeros_file)?;

    let query = match args.count_below {
        Some(t) => {
            if !(t > 0.0) {
                return Err(CliError::Domain(format!(
                    "counting formula requires T > 0, got {t}"
                )));
            }
            let empirical = zero_count_empirical(&table, t)?;
            let formula = counting_formula(t);
            Some((t, empirical, formula))
        }
        None => None,
    };

    let csv = csv_document(
        &["index", "ordinate"],
        table
            .ordinates()
            .iter()
            .enumerate()
            .map(|(i, &t)| vec![(i + 1).to_string(), fmt_sig(t)]),
    );
    let staircase: Vec<(f64, f64)> = table
        .ordinates()
        .iter()
        .enumerate()
        .map(|(i, &t)| (t, (i + 1) as f64))
        .collect();
    let formula_curve: Vec<(f64, f64)> = {
        let hi = table.max_ordinate();
        (0..=200)
            .map(|i| {
                let t = 2.0 + (hi - 2.0) * i as f64 / 200.0;
                (t, counting_formula(t))
            })
            .collect()
    };
    let svg = svg::line_plot(
        "Zero counting: table vs smoothed formula",
        "T",
        "count",
        &[
            Series::new("empirical count", staircase),
            Series::new("smoothed formula", formula_curve),
        ],
    );
    #[derive(Serialize)]
    struct QueryDoc {
        t: f64,
        empirical: usize,
        formula: f64,
    }
    #[derive(Serialize)]
    struct ZerosDoc<'a> {
        source: String,
        count: usize,
        max_ordinate: f64,
        query: Option<QueryDoc>,
        ordinates: &'a [f64],
    }
    let doc = ZerosDoc {
        source: table.source().to_string(),
        count: table.len(),
        max_ordinate: table.max_ordinate(),
        query: query.map(|(t, empirical, formula)| QueryDoc {
            t,
            empirical,
            formula,
        }),
        ordinates: table.ordinates(),
    };
    let summary = match query {
        Some((_, empirical, formula)) => json!({ "empirical": empirical, "formula": formula }),
        None => json!({
            "command": "zeros",
            "count": table.len(),
            "max_ordinate": table.max_ordinate(),
        }),
    };
    Ok(CommandOutput {
        name: "zeros",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&doc)?),
        svg: Some(svg),
    })
}

fn psi_output(args: &PsiArgs) -> Result<CommandOutput, CliError> {
    let table = load_table(&args.zeros_file)?;
    let comparison = explicit_formula_psi(args.x, &table, args.k)?;

    // Convergence sweep: the same evaluation for every truncation up to k.
    let sweep: Vec<_> = (0..=args.k)
        .map(|k| explicit_formula_psi(args.x, &table, k))
        .collect::<Result<_, _>>()?;

    let csv = csv_document(
        &["zeros_used", "explicit_truncated", "abs_error"],
        sweep.iter().map(|c| {
            vec![
                c.zeros_used.to_string(),
                fmt_sig(c.explicit_truncated),
                fmt_sig(c.abs_error),
            ]
        }),
    );
    let points: Vec<(f64, f64)> = sweep
        .iter()
        .map(|c| (c.zeros_used as f64, c.abs_error))
        .collect();
    let svg = svg::line_plot(
        "Explicit-formula truncation error",
        "conjugate zero pairs used",
        "|direct − truncated|",
        &[Series::new(format!("x = {}", args.x), points)],
    );
    #[derive(Serialize)]
    struct PsiDoc<'a> {
        comparison: &'a zetalab_core::number_theory::PsiComparison,
        sweep: &'a [zetalab_core::number_theory::PsiComparison],
    }
    let doc = PsiDoc {
        comparison: &comparison,
        sweep: &sweep,
    };
    let summary = json!({
        "command": "psi",
        "x": comparison.x,
        "direct": comparison.direct,
        "explicit_truncated": comparison.explicit_truncated,
        "zeros_used": comparison.zeros_used,
        "abs_error": comparison.abs_error,
        "near_prime_power": comparison.near_prime_power,
    });
    Ok(CommandOutput {
        name: "psi",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&doc)?),
        svg: Some(svg),
    })
}

fn pnt_output(args: &PntArgs) -> Result<CommandOutput, CliError> {
    if args.max < 10 {
        return Err(CliError::input("--max must be at least 10"));
    }
    // 1-2-5 per decade up to max, max itself always included.
    let mut points = Vec::new();
    let mut decade = 10u64;
    loop {
        for mult in [1u64, 2, 5] {
            let x = decade.saturating_mul(mult);
            if x <= args.max && x >= 10 {
                points.push(x as f64);
            }
        }
        match decade.checked_mul(10) {
            Some(next) if decade < args.max => decade = next,
            _ => break,
        }
    }
    if points.last() != Some(&(args.max as f64)) {
        points.push(args.max as f64);
    }
    let sweep = pnt_ratio_sweep(&points);

    let csv = csv_document(
        &["x", "prime_count", "ratio"],
        sweep
            .iter()
            .map(|(x, c, r)| vec![fmt_sig(*x), c.to_string(), fmt_sig(*r)]),
    );
    let curve: Vec<(f64, f64)> = sweep.iter().map(|(x, _, r)| (x.log10(), *r)).collect();
    let svg = svg::line_plot(
        "Prime-counting ratio",
        "log10(x)",
        "π(x)/(x/ln x)",
        &[Series::new("ratio", curve)],
    );
    #[derive(Serialize)]
    struct PntPoint {
        x: f64,
        prime_count: usize,
        ratio: f64,
    }
    #[derive(Serialize)]
    struct PntDoc {
        max: u64,
        points: Vec<PntPoint>,
    }
    let doc = PntDoc {
        max: args.max,
        points: sweep
            .iter()
            .map(|&(x, prime_count, ratio)| PntPoint {
                x,
                prime_count,
                ratio,
            })
            .collect(),
    };
    let last = sweep.last().expect("sweep is nonempty");
    let summary = json!({
        "command": "pnt",
        "x_max": last.0,
        "prime_count": last.1,
        "ratio": last.2,
    });
    Ok(CommandOutput {
        name: "pnt",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&doc)?),
        svg: Some(svg),
    })
}

fn hydrogen_output(args: &HydrogenArgs) -> Result<CommandOutput, CliError> {
    if args.n_max == 0 {
        return Err(CliError::input("--n-max must be at least 1"));
    }
    let levels = hydrogen_levels(args.n_max);

    let csv = csv_document(
        &["n", "energy_ev"],
        levels
            .levels
            .iter()
            .enumerate()
            .map(|(i, &e)| vec![(i + 1).to_string(), fmt_sig(e)]),
    );
    let points: Vec<(f64, f64)> = levels
        .levels
        .iter()
        .enumerate()
        .map(|(i, &e)| ((i + 1) as f64, e))
        .collect();
    let svg = svg::scatter_plot(
        "Hydrogen bound-state energies",
        "principal quantum number n",
        "E_n (eV)",
        &[Series::new("E_n = −Ry/n²", points)],
    );
    let summary = json!({
        "command": "hydrogen",
        "n_max": args.n_max,
        "rydberg_ev": levels.rydberg_ev,
        "ground_state_ev": levels.levels[0],
    });
    Ok(CommandOutput {
        name: "hydrogen",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&levels)?),
        svg: Some(svg),
    })
}

fn compare_output(args: &CompareArgs, seed: u64) -> Result<CommandOutput, CliError> {
    if args.n_max == 0 {
        return Err(CliError::input("--n-max must be at least 1"));
    }
    let (label, spectrum_values) = match args.source {
        CompareSource::Inverse => {
            let spectrum = inverse_time_spectrum(&ZeroTable::bundled());
            // Negated so both sides live on the negative axis.
            let negated: Vec<f64> = spectrum.eigenvalues.iter().map(|l| -l).collect();
            ("negated inverse-ordinate spectrum", negated)
        }
        CompareSource::Operator => {
            let config = SpectrumConfig::new(1000, seed)?;
            let operator = build_diagonal_operator(&config, true)?;
            let spectrum = eigenvalues_via_charpoly(&operator);
            ("correlation-weighted operator spectrum", spectrum.eigenvalues)
        }
    };
    let levels = hydrogen_levels(args.n_max);
    let report = compare_spectra(&spectrum_values, &levels.levels)?;
    let (p, q, edges) = shared_grid_masses(&spectrum_values, &levels.levels, 100)?;

    let csv = csv_document(
        &["bin_center", "spectrum_mass", "levels_mass"],
        (0..p.len()).map(|i| {
            let center = 0.5 * (edges[i] + edges[i + 1]);
            vec![fmt_sig(center), fmt_sig(p[i]), fmt_sig(q[i])]
        }),
    );
    let centers: Vec<f64> = (0..p.len())
        .map(|i| 0.5 * (edges[i] + edges[i + 1]))
        .collect();
    let svg = svg::line_plot(
        "Spectrum vs hydrogen levels (unit mass)",
        "value",
        "bin mass",
        &[
            Series::new(label, centers.iter().zip(&p).map(|(&c, &m)| (c, m)).collect()),
            Series::new(
                "hydrogen levels",
                centers.iter().zip(&q).map(|(&c, &m)| (c, m)).collect(),
            ),
        ],
    );
    #[derive(Serialize)]
    struct CompareDoc<'a> {
        source: &'a str,
        n_max: usize,
        report: &'a zetalab_core::stats::ComparisonReport,
    }
    let doc = CompareDoc {
        source: label,
        n_max: args.n_max,
        report: &report,
    };
    let summary = json!({
        "command": "compare",
        "source": label,
        "overlap": report.overlap,
        "spectrum_mean": report.spectrum_summary.mean,
        "levels_mean": report.levels_summary.mean,
    });
    Ok(CommandOutput {
        name: "compare",
        summary,
        stdout_prelude: None,
        csv: Some(csv),
        json: Some(json_document(&doc)?),
        svg: Some(svg),
    })
}

fn audit_output(seed: u64) -> Result<CommandOutput, CliError> {
    let report = audit::run_audit(seed)?;

    let csv = csv_document(
        &["id", "criterion", "subject", "claimed", "computed", "verdict"],
        report.claims.iter().map(|c| {
            vec![
                c.id.to_string(),
                c.criterion.to_string(),
                c.subject.to_string(),
                c.claimed.clone(),
                c.computed.clone(),
                c.verdict.to_string(),
            ]
        }),
    );
    let summary = json!({
        "command": "audit",
        "claims": report.claims.len(),
        "reproduced": report.reproduced,
        "not_reproduced": report.not_reproduced,
        "not_derivable": report.not_derivable,
    });
    Ok(CommandOutput {
        name: "audit",
        summary,
        stdout_prelude: Some(audit::render_table(&report)),
        csv: Some(csv),
        json: Some(json_document(&report)?),
        svg: None,
    })
}
