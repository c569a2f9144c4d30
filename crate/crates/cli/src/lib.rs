//! Argument parsing and dispatch for the `eigenperiod` binary.
//!
//! [`parse_args`] turns argv into a validated [`CommandRequest`];
//! [`execute`] runs it and returns the rendered output with an exit code.
//! JSON output goes through `serde_json::Value`, whose maps keep keys
//! sorted, so re-rendering parsed output reproduces it byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use eigenperiod::boundary::{self, BoundaryDivisor};
use eigenperiod::cover::{self, CoverData};
use eigenperiod::dmtable::{self, TableDataset};
use eigenperiod::git::{self, CollisionPartition, WeightVector};
use eigenperiod::spectra;

/// Success.
pub const EXIT_OK: i32 = 0;
/// Usage error or invalid input.
pub const EXIT_INVALID: i32 = 1;
/// `table check` found a mismatch.
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "eigenperiod",
    version,
    about = "Invariants of cyclic covers of the projective line"
)]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// CSV output (spectrum, pure-locus --list)
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: RawCommand,
}

#[derive(Args, Debug)]
struct Ndk {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    d: u64,
    #[arg(long)]
    k: u64,
}

#[derive(Subcommand, Debug)]
enum RawCommand {
    /// Eigen-Hodge numbers, genus and regime of the cover
    Hodge(Ndk),
    /// Eigenspectra of the singularity x^l + y^d
    Spectrum {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        l: u64,
    },
    /// Pure and non-pure boundary divisors of the moduli of n points
    PureLocus {
        #[command(flatten)]
        ndk: Ndk,
        /// List divisors, one per line (non-pure ones unless --pure)
        #[arg(long)]
        list: bool,
        #[arg(long, requires = "list")]
        pure: bool,
    },
    /// Whether a boundary divisor is pure for every character
    CompactType {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        /// Comma-separated labels, e.g. 1,2,3
        #[arg(long)]
        members: String,
    },
    /// Codimension H(n, d, k) of the non-pure image
    Codim {
        #[command(flatten)]
        ndk: Ndk,
        /// Use the search instead of the closed form
        #[arg(long)]
        oracle: bool,
    },
    /// GIT stability of a collision partition
    Stability {
        /// Comma-separated weights, e.g. 1/3,1/3,1/3,1/3,1/3,1/3
        #[arg(long)]
        weights: String,
        /// Pipe-separated blocks, e.g. 1,2,3|4|5|6
        #[arg(long)]
        partition: String,
    },
    /// Subsets of total weight one (centres of the Hassett to GIT map)
    BlowupLoci {
        #[arg(long)]
        weights: String,
    },
    /// Hassett reduction between two weight vectors, or the image
    /// codimension of a collision stratum
    Reduction {
        #[arg(long, requires = "to", conflicts_with_all = ["n", "d", "size"])]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
        #[arg(long, requires_all = ["d", "size"])]
        n: Option<u64>,
        #[arg(long, requires_all = ["n", "size"])]
        d: Option<u64>,
        #[arg(long, requires_all = ["n", "d"])]
        size: Option<u64>,
    },
    /// The table of discrete monodromy cases
    Table {
        #[command(subcommand)]
        action: TableAction,
    },
}

#[derive(Subcommand, Debug)]
enum TableAction {
    /// Recompute every row and report disagreements
    Check {
        /// Explicit rows CSV (defaults to the shipped file)
        #[arg(long)]
        explicit: Option<PathBuf>,
        /// Parametric rows CSV (defaults to the shipped file)
        #[arg(long)]
        parametric: Option<PathBuf>,
    },
    /// Look up (n, k/d), reducing the ratio first
    Lookup(Ndk),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Hodge(CoverData),
    Spectrum {
        d: u64,
        l: u64,
    },
    PureLocus {
        n: u64,
        d: u64,
        k: u64,
        list: Option<ListKind>,
    },
    CompactType {
        d: u64,
        divisor: BoundaryDivisor,
    },
    Codim {
        n: u64,
        d: u64,
        k: u64,
        oracle: bool,
    },
    Stability {
        weights: WeightVector,
        partition: CollisionPartition,
    },
    BlowupLoci {
        weights: WeightVector,
    },
    ReductionExists {
        from: WeightVector,
        to: WeightVector,
    },
    ReductionCodim {
        n: u64,
        d: u64,
        size: u64,
    },
    TableCheck {
        explicit: Option<PathBuf>,
        parametric: Option<PathBuf>,
    },
    TableLookup {
        n: u64,
        k: u64,
        d: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListKind {
    Pure,
    NonPure,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandRequest {
    pub command: Command,
    pub format: Format,
}

/// A rejected command line. `help` marks `--help`/`--version`, which are
/// printed to stdout with exit code 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError {
    pub message: String,
    pub help: bool,
}

impl UsageError {
    fn new(message: impl Into<String>) -> Self {
        UsageError {
            message: message.into(),
            help: false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.help {
            EXIT_OK
        } else {
            EXIT_INVALID
        }
    }
}

/// Rendered output of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn invalid(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_INVALID,
        }
    }
}

fn check_nd(n: u64, d: u64) -> Result<(), UsageError> {
    if n < 4 {
        return Err(UsageError::new(format!("--n must be at least 4, got {n}")));
    }
    if d < 2 {
        return Err(UsageError::new(format!("--d must be at least 2, got {d}")));
    }
    Ok(())
}

fn check_k(k: u64, d: u64) -> Result<(), UsageError> {
    if k == 0 || k >= d {
        return Err(UsageError::new(format!(
            "--k must satisfy 1 <= k < d, got k={k}, d={d}"
        )));
    }
    Ok(())
}

fn check_ndk(a: &Ndk) -> Result<(), UsageError> {
    check_nd(a.n, a.d)?;
    check_k(a.k, a.d)
}

fn flag_err(flag: &str, e: impl std::fmt::Display) -> UsageError {
    UsageError::new(format!("{flag}: {e}"))
}

fn parse_weights(flag: &str, s: &str) -> Result<WeightVector, UsageError> {
    s.parse().map_err(|e| flag_err(flag, e))
}

fn parse_members(s: &str) -> Result<Vec<u64>, UsageError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| flag_err("--members", format!("bad label `{t}`")))
        })
        .collect()
}

/// Parses and validates a full argv (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<CommandRequest, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind;
        let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
        UsageError {
            message: e.render().to_string(),
            help,
        }
    })?;
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Plain
    };
    let csv_ok = matches!(
        cli.command,
        RawCommand::Spectrum { .. } | RawCommand::PureLocus { list: true, .. }
    );
    if format == Format::Csv && !csv_ok {
        return Err(UsageError::new(
            "--csv is only available for `spectrum` and `pure-locus --list`",
        ));
    }
    let command = match cli.command {
        RawCommand::Hodge(a) => {
            check_ndk(&a)?;
            Command::Hodge(
                CoverData::new(a.n, a.d, a.k as i64).map_err(|e| UsageError::new(e.to_string()))?,
            )
        }
        RawCommand::Spectrum { d, l } => {
            if d < 2 || l < 2 {
                return Err(UsageError::new(format!(
                    "--d and --l must be at least 2, got d={d}, l={l}"
                )));
            }
            Command::Spectrum { d, l }
        }
        RawCommand::PureLocus { ndk, list, pure } => {
            check_ndk(&ndk)?;
            let list = match (list, pure) {
                (false, _) => None,
                (true, true) => Some(ListKind::Pure),
                (true, false) => Some(ListKind::NonPure),
            };
            Command::PureLocus {
                n: ndk.n,
                d: ndk.d,
                k: ndk.k,
                list,
            }
        }
        RawCommand::CompactType { n, d, members } => {
            check_nd(n, d)?;
            let divisor = boundary::canonicalize(n, &parse_members(&members)?)
                .map_err(|e| flag_err("--members", e))?;
            Command::CompactType { d, divisor }
        }
        RawCommand::Codim { ndk, oracle } => {
            check_ndk(&ndk)?;
            if ndk.n < 5 {
                return Err(UsageError::new(format!(
                    "--n must be at least 5 for codim, got {}",
                    ndk.n
                )));
            }
            Command::Codim {
                n: ndk.n,
                d: ndk.d,
                k: ndk.k,
                oracle,
            }
        }
        RawCommand::Stability { weights, partition } => Command::Stability {
            weights: parse_weights("--weights", &weights)?,
            partition: partition.parse().map_err(|e| flag_err("--partition", e))?,
        },
        RawCommand::BlowupLoci { weights } => Command::BlowupLoci {
            weights: parse_weights("--weights", &weights)?,
        },
        RawCommand::Reduction {
            from,
            to,
            n,
            d,
            size,
        } => match (from, to, n, d, size) {
            (Some(from), Some(to), None, None, None) => Command::ReductionExists {
                from: parse_weights("--from", &from)?,
                to: parse_weights("--to", &to)?,
            },
            (None, None, Some(n), Some(d), Some(size)) => {
                check_nd(n, d)?;
                Command::ReductionCodim { n, d, size }
            }
            _ => {
                return Err(UsageError::new(
                    "reduction needs either --from and --to, or --n, --d and --size",
                ))
            }
        },
        RawCommand::Table {
            action:
                TableAction::Check {
                    explicit,
                    parametric,
                },
        } => Command::TableCheck {
            explicit,
            parametric,
        },
        RawCommand::Table {
            action: TableAction::Lookup(a),
        } => {
            check_nd(a.n, a.d)?;
            check_k(a.k, a.d)?;
            Command::TableLookup {
                n: a.n,
                k: a.k,
                d: a.d,
            }
        }
    };
    Ok(CommandRequest { command, format })
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always render");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("library types serialize to JSON")
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Runs a validated request.
pub fn execute(req: &CommandRequest) -> Outcome {
    let fmt = req.format;
    match &req.command {
        Command::Hodge(c) => hodge(c, fmt),
        Command::Spectrum { d, l } => spectrum(*d, *l, fmt),
        Command::PureLocus { n, d, k, list } => pure_locus(*n, *d, *k, *list, fmt),
        Command::CompactType { d, divisor } => compact_type(*d, divisor, fmt),
        Command::Codim { n, d, k, oracle } => codim(*n, *d, *k, *oracle, fmt),
        Command::Stability { weights, partition } => stability(weights, partition, fmt),
        Command::BlowupLoci { weights } => blowup(weights, fmt),
        Command::ReductionExists { from, to } => reduction_exists(from, to, fmt),
        Command::ReductionCodim { n, d, size } => reduction_codim(*n, *d, *size, fmt),
        Command::TableCheck {
            explicit,
            parametric,
        } => table_check(explicit.as_ref(), parametric.as_ref(), fmt),
        Command::TableLookup { n, k, d } => table_lookup(*n, *k, *d, fmt),
    }
}

/// Parses, runs, and folds usage errors into an [`Outcome`].
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(req) => execute(&req),
        Err(e) if e.help => Outcome::ok(e.message),
        Err(e) => {
            let mut stderr = e.message;
            if !stderr.starts_with("error") {
                stderr = format!("error: {stderr}");
            }
            if !stderr.ends_with('\n') {
                stderr.push('\n');
            }
            Outcome {
                stdout: String::new(),
                stderr,
                code: EXIT_INVALID,
            }
        }
    }
}

fn hodge(c: &CoverData, fmt: Format) -> Outcome {
    let h = cover::eigen_hodge_numbers(c);
    let genus = match cover::affine_model_genus(c.n(), c.d()) {
        Ok(g) => g,
        Err(e) => return Outcome::invalid(e),
    };
    let regime = c.regime();
    if fmt == Format::Json {
        return Outcome::ok(render_json(&json!({
            "n": c.n(),
            "d": c.d(),
            "k": c.k(),
            "h10": h.h10,
            "h01": h.h01,
            "genus": genus,
            "regime": to_value(&regime),
        })));
    }
    Outcome::ok(format!(
        "signature: ({},{}); genus: {genus}; regime: {regime}\n",
        h.h10, h.h01
    ))
}

fn spectrum(d: u64, l: u64, fmt: Format) -> Outcome {
    let sp = match spectra::eigenspectra_curve(d, l) {
        Ok(sp) => sp,
        Err(e) => return Outcome::invalid(e),
    };
    let top = spectra::grw_top_dim(d, l).expect("arguments already accepted");
    match fmt {
        Format::Json => Outcome::ok(render_json(&json!({
            "d": d,
            "l": l,
            "milnor": sp.total_multiplicity(),
            "grw_top_dim": top,
            "entries": to_value(&sp.entries()),
        }))),
        Format::Csv => {
            let mut out = String::from("alpha,eta,weight,mult\n");
            for e in sp.entries() {
                let _ = writeln!(out, "{},{},{},{}", e.alpha, e.eta, e.weight, e.multiplicity);
            }
            Outcome::ok(out)
        }
        Format::Plain => {
            let mut out = String::new();
            for e in sp.entries() {
                let _ = writeln!(
                    out,
                    "alpha={} eta={} weight={} mult={}",
                    e.alpha, e.eta, e.weight, e.multiplicity
                );
            }
            let _ = writeln!(
                out,
                "milnor number: {}; top weight dimension: {top}",
                sp.total_multiplicity()
            );
            Outcome::ok(out)
        }
    }
}

fn pure_locus(n: u64, d: u64, k: u64, list: Option<ListKind>, fmt: Format) -> Outcome {
    let report = match boundary::enumerate_pure_locus(n, d, k) {
        Ok(r) => r,
        Err(e) => return Outcome::invalid(e),
    };
    if let Some(kind) = list {
        let divisors: Vec<BoundaryDivisor> = match kind {
            ListKind::NonPure => report.non_pure.clone(),
            ListKind::Pure => {
                let bad: BTreeSet<&BoundaryDivisor> = report.non_pure.iter().collect();
                boundary::canonical_divisors(n)
                    .expect("n already accepted")
                    .into_iter()
                    .filter(|dv| !bad.contains(dv))
                    .collect()
            }
        };
        return match fmt {
            Format::Json => Outcome::ok(render_json(&json!({
                "n": n,
                "d": d,
                "k": k,
                "pure": kind == ListKind::Pure,
                "divisors": divisors.iter().map(|dv| to_value(&dv.members())).collect::<Vec<_>>(),
            }))),
            Format::Csv => {
                let mut out = String::from("size,min_side,members\n");
                for dv in &divisors {
                    let _ = writeln!(
                        out,
                        "{},{},{}",
                        dv.size(),
                        dv.min_side(),
                        csv_quote(&dv.to_string())
                    );
                }
                Outcome::ok(out)
            }
            Format::Plain => Outcome::ok(divisors.iter().map(|dv| format!("{dv}\n")).collect()),
        };
    }
    if fmt == Format::Json {
        return Outcome::ok(render_json(&to_value(&report)));
    }
    let mut out = format!("n={n} d={d} k={k} regime: {}\n", report.regime);
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w:?}");
    }
    for (size, c) in &report.counts_by_size {
        let _ = writeln!(out, "size {size}: pure {}, non-pure {}", c.pure, c.non_pure);
    }
    let _ = writeln!(
        out,
        "total: {}; pure: {}; non-pure: {}",
        report.total(),
        report.pure_total(),
        report.non_pure_total()
    );
    Outcome::ok(out)
}

fn compact_type(d: u64, divisor: &BoundaryDivisor, fmt: Format) -> Outcome {
    let ct = match boundary::is_compact_type(d, divisor) {
        Ok(b) => b,
        Err(e) => return Outcome::invalid(e),
    };
    if fmt == Format::Json {
        return Outcome::ok(render_json(&json!({
            "n": divisor.n(),
            "d": d,
            "divisor": to_value(&divisor.members()),
            "compact_type": ct,
        })));
    }
    Outcome::ok(format!("divisor {{{divisor}}}: compact type: {ct}\n"))
}

fn codim(n: u64, d: u64, k: u64, oracle: bool, fmt: Format) -> Outcome {
    let h = if oracle {
        git::codim_h_oracle(n, d, k)
    } else {
        git::codim_h_closed(n, d, k)
    };
    let h = match h {
        Ok(h) => h,
        Err(e) => return Outcome::invalid(e),
    };
    if fmt == Format::Json {
        return Outcome::ok(render_json(&json!({
            "n": n,
            "d": d,
            "k": k,
            "method": if oracle { "search" } else { "closed" },
            "H": to_value(&h),
        })));
    }
    Outcome::ok(format!("H = {h}\n"))
}

fn stability(w: &WeightVector, p: &CollisionPartition, fmt: Format) -> Outcome {
    let st = match git::git_stability(w, p) {
        Ok(s) => s,
        Err(e) => return Outcome::invalid(e),
    };
    if fmt == Format::Json {
        return Outcome::ok(render_json(&json!({
            "weights": to_value(w),
            "partition": p.to_string(),
            "stability": st.to_string(),
        })));
    }
    Outcome::ok(format!("{st}\n"))
}

fn blowup(w: &WeightVector, fmt: Format) -> Outcome {
    let loci = match git::blowup_loci(w) {
        Ok(l) => l,
        Err(e) => return Outcome::invalid(e),
    };
    if fmt == Format::Json {
        return Outcome::ok(render_json(&json!({
            "weights": to_value(w),
            "loci": to_value(&loci),
            "isomorphism": loci.is_empty(),
        })));
    }
    let mut out = String::new();
    for l in &loci {
        let labels: Vec<String> = l.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(out, "{}", labels.join(","));
    }
    let _ = writeln!(out, "{} loci", loci.len());
    Outcome::ok(out)
}

fn reduction_exists(from: &WeightVector, to: &WeightVector, fmt: Format) -> Outcome {
    let ok = match git::hassett_reduction_exists(from, to) {
        Ok(b) => b,
        Err(e) => return Outcome::invalid(e),
    };
    if fmt == Format::Json {
        return Outcome::ok(render_json(&json!({
            "from": to_value(from),
            "to": to_value(to),
            "exists": ok,
        })));
    }
    Outcome::ok(format!("reduction exists: {ok}\n"))
}

fn reduction_codim(n: u64, d: u64, size: u64, fmt: Format) -> Outcome {
    let c = match git::reduction_image_codim(n, d, size) {
        Ok(c) => c,
        Err(e) => return Outcome::invalid(e),
    };
    if fmt == Format::Json {
        return Outcome::ok(render_json(
            &json!({ "n": n, "d": d, "size": size, "codim": c }),
        ));
    }
    Outcome::ok(format!("codim = {c}\n"))
}

fn table_check(explicit: Option<&PathBuf>, parametric: Option<&PathBuf>, fmt: Format) -> Outcome {
    let owned;
    let data: &TableDataset = if explicit.is_none() && parametric.is_none() {
        TableDataset::embedded()
    } else {
        let (e0, p0) = dmtable::embedded_csv();
        let read = |p: Option<&PathBuf>, default: &str| -> Result<String, String> {
            match p {
                Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
                None => Ok(default.to_string()),
            }
        };
        let (e, p) = match (read(explicit, e0), read(parametric, p0)) {
            (Ok(e), Ok(p)) => (e, p),
            (Err(msg), _) | (_, Err(msg)) => return Outcome::invalid(msg),
        };
        owned = match TableDataset::from_csv(&e, &p) {
            Ok(d) => d,
            Err(err) => return Outcome::invalid(err),
        };
        &owned
    };
    let mismatches = data.validate_all();
    let rows = data.explicit_rows().len();
    let params = data.parametric_rows().len();
    let code = if mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    let stdout = if fmt == Format::Json {
        render_json(&json!({
            "explicit_rows": rows,
            "parametric_rows": params,
            "mismatches": to_value(&mismatches),
        }))
    } else {
        let mut out = String::new();
        for m in &mismatches {
            let _ = writeln!(out, "mismatch: {m}");
        }
        let _ = writeln!(
            out,
            "{rows} rows validated, {params} parametric rows checked for n = {}..={}; {} mismatches",
            dmtable::EXPLICIT_MAX_N + 1,
            dmtable::PARAMETRIC_CHECK_MAX_N,
            mismatches.len()
        );
        out
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}

fn table_lookup(n: u64, k: u64, d: u64, fmt: Format) -> Outcome {
    let row = dmtable::lookup(n, k, d);
    let discrete = dmtable::is_discrete(n, k, d);
    if fmt == Format::Json {
        return Outcome::ok(render_json(&json!({
            "n": n,
            "k": k,
            "d": d,
            "row": row.as_ref().map(to_value),
            "discrete": discrete,
        })));
    }
    let mut out = match &row {
        Some(r) => format!("{}: (r,s) = ({},{}); H = {}\n", r.label(), r.r, r.s, r.h),
        None => format!("n={n} k/d={k}/{d}: not in table\n"),
    };
    let _ = writeln!(out, "discrete: {discrete}");
    Outcome::ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        std::iter::once("eigenperiod".to_string())
            .chain(s.split_whitespace().map(String::from))
            .collect()
    }

    #[test]
    fn parses_examples() {
        let r = parse_args(argv("hodge --n 8 --d 4 --k 1")).unwrap();
        assert!(matches!(r.command, Command::Hodge(_)));
        let r = parse_args(argv("codim --n 12 --d 6 --k 1 --oracle")).unwrap();
        assert_eq!(
            r.command,
            Command::Codim {
                n: 12,
                d: 6,
                k: 1,
                oracle: true
            }
        );
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "hodge --n 8 --d 4 --k 4",
            "hodge --n 3 --d 4 --k 1",
            "frobnicate",
            "stability --weights 1/0,1 --partition 1|2",
            "blowup-loci --weights 1/2,x",
            "hodge --n 8 --d 4 --k 1 --csv",
            "reduction --n 8 --d 4",
        ] {
            let e = parse_args(argv(bad)).unwrap_err();
            assert!(!e.help, "{bad}");
            assert_eq!(e.exit_code(), EXIT_INVALID);
        }
    }

    #[test]
    fn k_error_names_the_flag() {
        let e = parse_args(argv("hodge --n 8 --d 4 --k 4")).unwrap_err();
        assert!(e.message.contains("--k"));
    }

    #[test]
    fn hodge_plain() {
        let out = run(argv("hodge --n 8 --d 4 --k 1"));
        assert_eq!(out.stdout, "signature: (1,5); genus: 9; regime: DividesN\n");
        assert_eq!(out.code, 0);
    }

    #[test]
    fn codim_plain() {
        assert_eq!(
            run(argv("codim --n 9 --d 6 --k 1")).stdout,
            "H = not-applicable\n"
        );
        assert_eq!(run(argv("codim --n 8 --d 6 --k 1")).stdout, "H = 5\n");
        assert_eq!(
            run(argv("codim --n 12 --d 12 --k 5 --oracle")).stdout,
            "H = inf\n"
        );
    }

    #[test]
    fn help_exits_zero() {
        let out = run(argv("--help"));
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("hodge"));
    }
}
