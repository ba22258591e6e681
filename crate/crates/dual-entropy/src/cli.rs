//! Command-line front end.
//!
//! Verbs: `measure`, `verify`, `sweep`, `indicator`, `lemmas`,
//! `random-suite`. Every run is a pure function of its flags plus the seed
//! (flag `--seed` or environment variable `DUAL_ENTROPY_SEED`), so reruns
//! reproduce output files byte for byte. Floats are printed in Rust's
//! shortest round-trip form. Exit codes: 0 success, 2 invalid input or
//! state, 3 property failure (some slack or residual below `-tol`).
//!
//! Grid endpoints accept the symbolic tokens `sqrt2`, `2sqrt2`, `qmin`,
//! `qmax` so exact irrational bounds do not have to be typed in decimal.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::indicators::{indicator, IndicatorKind};
use crate::measures::{
    concurrence_2q_mixed, concurrence_pure, measure_pure, q_window, MeasureKind,
};
use crate::monogamy::{
    bound_mj, bound_powersum, bound_thm_mixed, bound_thm_ordered, bound_weighted_geo,
    cut_and_pairwise, lemma_residual, ordering_profile, LemmaKind, MonogamyFamily,
};
use crate::sampler::Sampler;
use crate::states::{
    density_of, dicke_state, generalized_schmidt_state, ghz_state, w_state, Bipartition, PureState,
};

const SQRT2: f64 = std::f64::consts::SQRT_2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "dual-entropy",
    version,
    about = "Dual-entropy entanglement measures, monogamy bounds, and multipartite indicators"
)]
pub struct Cli {
    /// Seed for the random suite.
    #[arg(long, global = true, env = "DUAL_ENTROPY_SEED", default_value_t = 1)]
    pub seed: u64,

    /// Tolerance below which a negative slack or residual is a failure.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format for tabular results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Evaluate one measure on a state and cut.
    Measure(MeasureArgs),
    /// Compare all monogamy bounds over an exponent grid.
    Verify(VerifyArgs),
    /// Bound comparison with ordering diagnostics per row.
    Sweep(VerifyArgs),
    /// Multipartite indicators tau_t and omega_q.
    Indicator(IndicatorArgs),
    /// Residual grids for the scalar lemmas.
    Lemmas(LemmasArgs),
    /// Seeded randomized property suite.
    RandomSuite(RandomSuiteArgs),
}

/// Where the input state comes from.
#[derive(Args, Clone, Debug)]
pub struct StateArgs {
    /// Built-in family: schmidt | dicke | w | ghz.
    #[arg(long)]
    pub family: Option<String>,

    /// Schmidt parameters "l0,l1,l2,l3,l4[,phi]" or the preset name "ex1".
    #[arg(long)]
    pub params: Option<String>,

    /// Qubit count for dicke / w / ghz.
    #[arg(long)]
    pub n: Option<usize>,

    /// Excitation number for dicke.
    #[arg(long)]
    pub k: Option<usize>,

    /// JSON state file {"num_qubits": n, "amplitudes": [[re, im], ...]}.
    #[arg(long, conflicts_with = "family")]
    pub state_file: Option<PathBuf>,

    /// Also write the constructed state to this JSON file.
    #[arg(long)]
    pub export_state: Option<PathBuf>,
}

impl StateArgs {
    fn require_n(&self) -> Result<usize> {
        self.n
            .ok_or_else(|| Error::InvalidArgument("--n is required for this family".into()))
    }

    fn build(&self) -> Result<PureState> {
        let psi = if let Some(path) = &self.state_file {
            PureState::read_json_file(path)?
        } else {
            match self.family.as_deref() {
                Some("schmidt") => schmidt_from_params(self.params.as_deref().unwrap_or("ex1"))?,
                Some("dicke") => {
                    let n = self.require_n()?;
                    let k = self.k.ok_or_else(|| {
                        Error::InvalidArgument("--k is required for dicke".into())
                    })?;
                    dicke_state(n, k)?
                }
                Some("w") => w_state(self.require_n()?)?,
                Some("ghz") => ghz_state(self.require_n()?)?,
                Some(other) => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown family '{other}' (expected schmidt | dicke | w | ghz)"
                    )))
                }
                None => {
                    return Err(Error::InvalidArgument(
                        "provide --family or --state-file".into(),
                    ))
                }
            }
        };
        if let Some(path) = &self.export_state {
            psi.write_json_file(path)?;
        }
        Ok(psi)
    }

    /// Family member with `n` qubits, for sweeps over the qubit count.
    /// Defaults to the W family.
    fn build_with_n(&self, n: usize) -> Result<PureState> {
        match self.family.as_deref() {
            None | Some("w") => w_state(n),
            Some("ghz") => ghz_state(n),
            Some("dicke") => dicke_state(n, self.k.unwrap_or(1)),
            Some(other) => Err(Error::InvalidArgument(format!(
                "family '{other}' does not support qubit-count sweeps"
            ))),
        }
    }
}

fn schmidt_from_params(params: &str) -> Result<PureState> {
    if params == "ex1" {
        let s5 = 5.0f64.sqrt();
        return generalized_schmidt_state(
            [1.0 / s5, 0.0, (2.0f64 / 5.0).sqrt(), 1.0 / s5, 1.0 / s5],
            0.0,
        );
    }
    let parts: Vec<f64> = params
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidArgument(format!("bad schmidt parameter '{p}'")))
        })
        .collect::<Result<_>>()?;
    match parts.len() {
        5 => generalized_schmidt_state([parts[0], parts[1], parts[2], parts[3], parts[4]], 0.0),
        6 => generalized_schmidt_state(
            [parts[0], parts[1], parts[2], parts[3], parts[4]],
            parts[5],
        ),
        got => Err(Error::InvalidArgument(format!(
            "schmidt takes 5 lambdas plus an optional phase, got {got} values"
        ))),
    }
}

#[derive(Args, Debug)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub state: StateArgs,

    /// concurrence | tangle | st | eof | tsallis | ttq.
    #[arg(long, default_value = "st")]
    pub measure: String,

    /// Entropic index for tsallis / ttq.
    #[arg(long)]
    pub q: Option<f64>,

    /// Focus qubits of the cut, comma separated.
    #[arg(long, default_value = "0")]
    pub cut: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub state: StateArgs,

    /// st | ttq.
    #[arg(long, default_value = "st")]
    pub measure: String,

    /// Entropic index for ttq.
    #[arg(long)]
    pub q: Option<f64>,

    /// Focus qubit of the one-to-group cut.
    #[arg(long, default_value_t = 0)]
    pub focus: usize,

    /// Single outer exponent (accepts sqrt2 / 2sqrt2).
    #[arg(long, conflicts_with = "alpha_range")]
    pub alpha: Option<String>,

    /// Outer exponent grid "start:stop:step", endpoints inclusive.
    #[arg(long)]
    pub alpha_range: Option<String>,

    /// Head length for the mixed-order bound; defaults to the profile m.
    #[arg(long)]
    pub m: Option<usize>,

    /// Which bounds to evaluate; only "all" is supported.
    #[arg(long, default_value = "all")]
    pub bounds: String,
}

#[derive(Args, Debug)]
pub struct IndicatorArgs {
    #[command(flatten)]
    pub state: StateArgs,

    /// tau | omega.
    #[arg(long)]
    pub kind: String,

    /// Entropic index for a single omega evaluation.
    #[arg(long)]
    pub q: Option<f64>,

    /// Qubit-count grid "start:stop[:step]" (w / ghz / dicke families).
    #[arg(long)]
    pub n_range: Option<String>,

    /// Sweep omega over the q validity window instead of a single q.
    #[arg(long, default_value_t = false)]
    pub q_sweep: bool,

    /// Qubit counts forming the omega sweep columns.
    #[arg(long, default_value = "3,5,7,10")]
    pub n_list: String,

    /// Number of q grid points across the window.
    #[arg(long, default_value_t = 50)]
    pub q_points: usize,

    /// Focus qubit.
    #[arg(long, default_value_t = 0)]
    pub focus: usize,
}

#[derive(Args, Debug)]
pub struct LemmasArgs {
    /// L1 | L2 | L4 | all.
    #[arg(long, default_value = "all")]
    pub which: String,

    /// Step of the t grid over each lemma's domain.
    #[arg(long, default_value_t = 0.01)]
    pub t_step: f64,

    /// Exponent grid "start:stop:step".
    #[arg(long, default_value = "2:10:0.25")]
    pub x_range: String,
}

#[derive(Args, Debug)]
pub struct RandomSuiteArgs {
    /// Samples per check group.
    #[arg(long, default_value_t = 1000)]
    pub count: usize,

    /// Qubit count for the monogamy group.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
}

pub fn main_entry() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 0 for --help/--version and 2 for usage errors.
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Ok(false) means the run completed but a property check failed.
pub fn run(cli: &Cli) -> Result<bool> {
    match &cli.verb {
        Verb::Measure(args) => run_measure(cli, args),
        Verb::Verify(args) => run_bounds(cli, args, false),
        Verb::Sweep(args) => run_bounds(cli, args, true),
        Verb::Indicator(args) => run_indicator(cli, args),
        Verb::Lemmas(args) => run_lemmas(cli, args),
        Verb::RandomSuite(args) => run_random_suite(cli, args),
    }
}

// ---------------------------------------------------------------- output

#[derive(Clone, Debug)]
enum Cell {
    F(f64),
    U(usize),
    S(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::F(v) => format!("{v}"),
            Cell::U(v) => format!("{v}"),
            Cell::S(s) => s.clone(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::F(v) => serde_json::json!(v),
            Cell::U(v) => serde_json::json!(v),
            Cell::S(s) => serde_json::json!(s),
        }
    }
}

struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut text = self.columns.join(",");
                text.push('\n');
                for row in &self.rows {
                    let line: Vec<String> = row.iter().map(Cell::csv).collect();
                    text.push_str(&line.join(","));
                    text.push('\n');
                }
                text
            }
            Format::Json => {
                let rows: Vec<serde_json::Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut obj = serde_json::Map::new();
                        for (name, cell) in self.columns.iter().zip(row) {
                            obj.insert(name.clone(), cell.json());
                        }
                        serde_json::Value::Object(obj)
                    })
                    .collect();
                let mut text = serde_json::to_string_pretty(&rows).expect("serializable rows");
                text.push('\n');
                text
            }
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------- parsing

/// Grid endpoint: a float literal or a symbolic constant.
fn parse_value(token: &str) -> Result<f64> {
    match token.trim() {
        "sqrt2" => Ok(SQRT2),
        "2sqrt2" => Ok(2.0 * SQRT2),
        "qmin" => Ok(q_window().0),
        "qmax" => Ok(q_window().1),
        other => other
            .parse::<f64>()
            .map_err(|_| Error::InvalidArgument(format!("cannot parse grid value '{other}'"))),
    }
}

/// "start:stop[:step]" with step defaulting to 1.
fn parse_range(spec: &str) -> Result<(f64, f64, f64)> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.len() {
        2 => Ok((parse_value(parts[0])?, parse_value(parts[1])?, 1.0)),
        3 => Ok((
            parse_value(parts[0])?,
            parse_value(parts[1])?,
            parse_value(parts[2])?,
        )),
        _ => Err(Error::InvalidArgument(format!(
            "range '{spec}' must be start:stop or start:stop:step"
        ))),
    }
}

/// Inclusive grid; the stop endpoint is included when it lands on the grid
/// within 1e-9 and the final point is snapped onto it exactly.
fn float_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "grid step must be positive, got {step}"
        )));
    }
    if stop < start - 1e-12 {
        return Err(Error::InvalidArgument(format!(
            "grid stop {stop} precedes start {start}"
        )));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    let mut points = Vec::with_capacity(count + 1);
    for i in 0..=count {
        let mut x = start + i as f64 * step;
        if (x - stop).abs() < 1e-9 {
            x = stop;
        }
        points.push(x);
    }
    Ok(points)
}

fn parse_float_grid(spec: &str) -> Result<Vec<f64>> {
    let (start, stop, step) = parse_range(spec)?;
    float_grid(start, stop, step)
}

fn parse_usize_grid(spec: &str) -> Result<Vec<usize>> {
    parse_float_grid(spec)?
        .into_iter()
        .map(|x| {
            let rounded = x.round();
            if (x - rounded).abs() > 1e-9 || rounded < 0.0 {
                Err(Error::InvalidArgument(format!(
                    "grid value {x} is not a nonnegative integer"
                )))
            } else {
                Ok(rounded as usize)
            }
        })
        .collect()
}

fn parse_usize_list(spec: &str) -> Result<Vec<usize>> {
    spec.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad integer '{p}'")))
        })
        .collect()
}

fn parse_measure_kind(name: &str, q: Option<f64>) -> Result<MeasureKind> {
    let need_q = || {
        q.ok_or_else(|| Error::InvalidArgument(format!("--q is required for measure '{name}'")))
    };
    match name {
        "concurrence" => Ok(MeasureKind::Concurrence),
        "tangle" => Ok(MeasureKind::Tangle),
        "st" => Ok(MeasureKind::StEntropy),
        "eof" => Ok(MeasureKind::Eof),
        "tsallis" => Ok(MeasureKind::TsallisQ(need_q()?)),
        "ttq" => Ok(MeasureKind::TtqEntropy(need_q()?)),
        other => Err(Error::UnsupportedMeasure(format!(
            "unknown measure '{other}'"
        ))),
    }
}

fn parse_monogamy_kind(name: &str, q: Option<f64>) -> Result<MeasureKind> {
    match parse_measure_kind(name, q)? {
        kind @ (MeasureKind::StEntropy | MeasureKind::TtqEntropy(_)) => Ok(kind),
        other => Err(Error::UnsupportedMeasure(format!(
            "monogamy verification supports st and ttq, not {other}"
        ))),
    }
}

// ---------------------------------------------------------------- verbs

fn run_measure(cli: &Cli, args: &MeasureArgs) -> Result<bool> {
    let kind = parse_measure_kind(&args.measure, args.q)?;
    let psi = args.state.build()?;
    let focus = parse_usize_list(&args.cut)?;
    let cut = Bipartition::new(psi.num_qubits(), focus.iter().copied())?;
    let mv = measure_pure(&psi, &cut, kind)?;
    let text = match cli.format {
        Format::Csv => format!("{}\n", mv.value),
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("measure".into(), serde_json::json!(format!("{kind}")));
            obj.insert("cut".into(), serde_json::json!(focus));
            obj.insert("value".into(), serde_json::json!(mv.value));
            obj.insert(
                "route".into(),
                serde_json::json!(format!("{:?}", mv.route).to_lowercase()),
            );
            obj.insert("cross_check".into(), serde_json::json!(mv.cross_check));
            let mut text =
                serde_json::to_string_pretty(&serde_json::Value::Object(obj)).expect("object");
            text.push('\n');
            text
        }
    };
    emit(cli, &text)?;
    Ok(true)
}

fn run_bounds(cli: &Cli, args: &VerifyArgs, with_conditions: bool) -> Result<bool> {
    if args.bounds != "all" {
        return Err(Error::InvalidArgument(
            "only --bounds all is supported".into(),
        ));
    }
    let kind = parse_monogamy_kind(&args.measure, args.q)?;
    let family = MonogamyFamily::for_kind(kind)?;
    let psi = args.state.build()?;
    let (cut_measure, pairwise) = cut_and_pairwise(&psi, args.focus, kind)?;
    let profile = ordering_profile(&pairwise, family.gamma);
    let m = args.m.unwrap_or(profile.m);

    let alphas = match (&args.alpha, &args.alpha_range) {
        (Some(a), _) => vec![parse_value(a)?],
        (None, Some(range)) => parse_float_grid(range)?,
        (None, None) => {
            return Err(Error::InvalidArgument(
                "provide --alpha or --alpha-range".into(),
            ))
        }
    };

    let mut table = if with_conditions {
        Table::new([
            "alpha",
            "lhs",
            "rhs_powersum",
            "rhs_weighted",
            "rhs_mj",
            "rhs_thm",
            "slack_thm",
            "conditions",
        ])
    } else {
        Table::new([
            "alpha",
            "lhs",
            "rhs_powersum",
            "rhs_weighted",
            "rhs_mj",
            "rhs_thm",
            "m",
            "slack_thm",
        ])
    };

    let conditions = format!("m={};consistent={}", profile.m, profile.consistent);
    let mut ok = true;
    for alpha in alphas {
        let lhs = cut_measure.powf(alpha);
        let ps = bound_powersum(&pairwise, alpha, family.gamma)?;
        let wg = bound_weighted_geo(&pairwise, alpha, family.gamma)?;
        let mj = bound_mj(&pairwise, alpha, family.gamma)?;
        let thm = bound_thm_mixed(&pairwise, alpha, family.gamma, m)?;
        let slack_thm = lhs - thm;
        for rhs in [ps, wg, mj, thm] {
            if lhs - rhs < -cli.tol {
                ok = false;
            }
        }
        let mut row = vec![
            Cell::F(alpha),
            Cell::F(lhs),
            Cell::F(ps),
            Cell::F(wg),
            Cell::F(mj),
            Cell::F(thm),
        ];
        if with_conditions {
            row.push(Cell::F(slack_thm));
            row.push(Cell::S(conditions.clone()));
        } else {
            row.push(Cell::U(m));
            row.push(Cell::F(slack_thm));
        }
        table.push(row);
    }
    emit(cli, &table.render(cli.format))?;
    Ok(ok)
}

fn run_indicator(cli: &Cli, args: &IndicatorArgs) -> Result<bool> {
    match args.kind.as_str() {
        "tau" => {
            if let Some(range) = &args.n_range {
                let mut table = Table::new(["N", "tau_t"]);
                for n in parse_usize_grid(range)? {
                    let psi = args.state.build_with_n(n)?;
                    let value = indicator(&psi, args.focus, IndicatorKind::TauT)?.value;
                    table.push(vec![Cell::U(n), Cell::F(value)]);
                }
                emit(cli, &table.render(cli.format))?;
            } else {
                let psi = args.state.build()?;
                let value = indicator(&psi, args.focus, IndicatorKind::TauT)?.value;
                emit_single(cli, "tau_t", value)?;
            }
        }
        "omega" => {
            if args.q_sweep {
                let ns = parse_usize_list(&args.n_list)?;
                if args.q_points < 2 {
                    return Err(Error::InvalidArgument(
                        "--q-points must be at least 2".into(),
                    ));
                }
                let states: Vec<PureState> = ns
                    .iter()
                    .map(|&n| args.state.build_with_n(n))
                    .collect::<Result<_>>()?;
                let mut columns = vec!["q".to_string()];
                columns.extend(ns.iter().map(|n| format!("omega_q_N{n}")));
                let mut table = Table::new(columns);
                let (lo, hi) = q_window();
                for i in 0..args.q_points {
                    let q = lo + (hi - lo) * i as f64 / (args.q_points - 1) as f64;
                    let mut row = vec![Cell::F(q)];
                    for psi in &states {
                        let value =
                            indicator(psi, args.focus, IndicatorKind::OmegaQ(q))?.value;
                        row.push(Cell::F(value));
                    }
                    table.push(row);
                }
                emit(cli, &table.render(cli.format))?;
            } else {
                let q = args.q.ok_or_else(|| {
                    Error::InvalidArgument("provide --q or --q-sweep for omega".into())
                })?;
                let psi = args.state.build()?;
                let value = indicator(&psi, args.focus, IndicatorKind::OmegaQ(q))?.value;
                emit_single(cli, "omega_q", value)?;
            }
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown indicator '{other}' (expected tau | omega)"
            )))
        }
    }
    Ok(true)
}

fn emit_single(cli: &Cli, name: &str, value: f64) -> Result<()> {
    let text = match cli.format {
        Format::Csv => format!("{value}\n"),
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&serde_json::json!({ name: value }))
                .expect("object");
            text.push('\n');
            text
        }
    };
    emit(cli, &text)
}

fn run_lemmas(cli: &Cli, args: &LemmasArgs) -> Result<bool> {
    let which: Vec<LemmaKind> = match args.which.as_str() {
        "all" => vec![LemmaKind::L1, LemmaKind::L2, LemmaKind::L4],
        "L1" | "l1" => vec![LemmaKind::L1],
        "L2" | "l2" => vec![LemmaKind::L2],
        "L4" | "l4" => vec![LemmaKind::L4],
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown lemma '{other}' (expected L1 | L2 | L4 | all)"
            )))
        }
    };
    let xs = parse_float_grid(&args.x_range)?;
    let mut table = Table::new(["t", "x", "which", "residual"]);
    let mut ok = true;
    for &lemma in &which {
        let t_max = match lemma {
            LemmaKind::L4 => crate::monogamy::l4_domain_max(),
            _ => 1.0,
        };
        let mut ts = float_grid(0.0, t_max, args.t_step)?;
        // Keep the exact domain endpoint on the grid.
        if (ts.last().copied().unwrap_or(0.0) - t_max).abs() > 1e-12 {
            ts.push(t_max);
        }
        for &x in &xs {
            for &t in &ts {
                let residual = lemma_residual(t, x, lemma)?;
                if residual < -cli.tol {
                    ok = false;
                }
                table.push(vec![
                    Cell::F(t),
                    Cell::F(x),
                    Cell::S(lemma.to_string()),
                    Cell::F(residual),
                ]);
            }
        }
    }
    emit(cli, &table.render(cli.format))?;
    Ok(ok)
}

struct CheckRow {
    name: String,
    samples: usize,
    /// Minimum slack for inequality checks, maximum absolute deviation for
    /// equality checks.
    worst: f64,
    failures: usize,
}

impl CheckRow {
    fn inequality(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            samples: 0,
            worst: f64::INFINITY,
            failures: 0,
        }
    }

    fn equality(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            samples: 0,
            worst: 0.0,
            failures: 0,
        }
    }

    fn record_slack(&mut self, slack: f64, tol: f64) {
        self.samples += 1;
        self.worst = self.worst.min(slack);
        if slack < -tol {
            self.failures += 1;
        }
    }

    fn record_deviation(&mut self, dev: f64, tol: f64) {
        self.samples += 1;
        self.worst = self.worst.max(dev);
        if dev > tol {
            self.failures += 1;
        }
    }
}

fn run_random_suite(cli: &Cli, args: &RandomSuiteArgs) -> Result<bool> {
    let mut sampler = Sampler::new(cli.seed);
    let kinds = [
        (MeasureKind::StEntropy, "st"),
        (MeasureKind::TtqEntropy(1.2), "ttq_q1.2"),
        (MeasureKind::TtqEntropy(2.0), "ttq_q2"),
        (MeasureKind::TtqEntropy(3.0), "ttq_q3"),
    ];
    let mut powersum_rows: Vec<CheckRow> = kinds
        .iter()
        .map(|(_, label)| CheckRow::inequality(format!("powersum_{label}")))
        .collect();
    let mut thm_rows: Vec<CheckRow> = kinds
        .iter()
        .map(|(_, label)| CheckRow::inequality(format!("thm_ordered_{label}")))
        .collect();

    for _ in 0..args.count {
        let psi = sampler.haar_pure(args.n)?;
        for (i, (kind, _)) in kinds.iter().enumerate() {
            let family = MonogamyFamily::for_kind(*kind)?;
            let gamma = family.gamma;
            let (cut_measure, pairwise) = cut_and_pairwise(&psi, 0, *kind)?;
            let rhs = bound_powersum(&pairwise, gamma, gamma)?;
            powersum_rows[i].record_slack(cut_measure.powf(gamma) - rhs, cli.tol);
            let profile = ordering_profile(&pairwise, gamma);
            if profile.m + 1 == pairwise.len() {
                let alpha = 2.0 * gamma;
                let rhs = bound_thm_ordered(&pairwise, alpha, gamma)?;
                thm_rows[i].record_slack(cut_measure.powf(alpha) - rhs, cli.tol);
            }
        }
    }

    // Route agreement on random two-qubit pure states.
    let mut wootters = CheckRow::equality("wootters_vs_pure");
    let mut routes = [
        (MeasureKind::StEntropy, CheckRow::equality("routes_st")),
        (MeasureKind::Eof, CheckRow::equality("routes_eof")),
        (
            MeasureKind::TtqEntropy(2.0),
            CheckRow::equality("routes_ttq_q2"),
        ),
    ];
    for _ in 0..args.count {
        let psi = sampler.haar_pure(2)?;
        let cut = Bipartition::single(2, 0)?;
        let direct = concurrence_pure(&psi, &cut)?;
        let from_density = concurrence_2q_mixed(&density_of(&psi))?;
        wootters.record_deviation((direct - from_density).abs(), cli.tol);
        for (kind, row) in routes.iter_mut() {
            let mv = measure_pure(&psi, &cut, *kind)?;
            let cross = mv.cross_check.expect("single-qubit cut has a closed form");
            row.record_deviation((mv.value - cross).abs(), cli.tol);
        }
    }

    let mut table = Table::new(["check", "samples", "worst", "failures"]);
    let mut ok = true;
    let all_rows = powersum_rows
        .into_iter()
        .chain(thm_rows)
        .chain(std::iter::once(wootters))
        .chain(routes.into_iter().map(|(_, row)| row));
    for row in all_rows {
        if row.failures > 0 {
            ok = false;
        }
        let worst = if row.samples == 0 { 0.0 } else { row.worst };
        table.push(vec![
            Cell::S(row.name),
            Cell::U(row.samples),
            Cell::F(worst),
            Cell::U(row.failures),
        ]);
    }
    emit(cli, &table.render(cli.format))?;
    Ok(ok)
}
