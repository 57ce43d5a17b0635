//! `terw`: exact Terwilliger algebra invariants of rank-3 association
//! schemes from the command line.
//!
//! Exit codes: 0 success, 1 usage/IO/syntax problems, 2 mathematical
//! verification failure.

mod report;

use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::{
    emit_json, verdict_name, witness_record, BatchPair, BatchReport, CompareReport,
    InvariantReport, VertexRecord,
};
use terwilliger::error::Error;
use terwilliger::invariants::{
    compare_schemes, complex_invariant, conference_invariant, format_dim_profile,
    oracle_dimension, rational_signature, signature_profile, CompareVerdict, ComparisonMode,
    SchemeData,
};
use terwilliger::scheme::{
    paley_graph_scheme, paley_tournament, parse_scheme, parse_tournament, scheme_from_tournament,
    serialize_scheme, serialize_tournament, tournament_from_scheme, verify_conference, verify_drt,
    SchemeTable, Tournament,
};
use terwilliger::subconstituent::{subconstituents, verify_subconstituent_identities};

#[derive(Parser)]
#[command(
    name = "terw",
    about = "Exact Terwilliger algebra invariants of asymmetric rank-3 association schemes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Complex,
    Rational,
}

impl From<Mode> for ComparisonMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Complex => ComparisonMode::Complex,
            Mode::Rational => ComparisonMode::Rational,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a Paley tournament (or, with --graph, a Paley conference-graph
    /// scheme) in the plain-text file format
    Paley {
        /// Prime order; 3 mod 4 for tournaments, 1 mod 4 with --graph
        p: u64,
        /// Construct the conference-graph scheme instead of the tournament
        #[arg(long)]
        graph: bool,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check file syntax, scheme/tournament invariants, and the defining
    /// identities (doubly regular or conference)
    Verify {
        /// Input file, `-` for stdin, or `paley:P` / `paleygraph:P`
        #[arg(default_value = "-")]
        file: String,
    },
    /// Per-vertex complex invariants (dimension, epsilon, m2, factors)
    Invariants {
        #[arg(default_value = "-")]
        file: String,
        /// Restrict to one vertex
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Per-vertex rational Wedderburn signatures
    Signature {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Multiset summary of the per-vertex invariants
    Profile {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long, value_enum, default_value_t = Mode::Complex)]
        mode: Mode,
    },
    /// Span-closure dimension of the algebra at one vertex (any rank)
    OracleDim {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        vertex: usize,
    },
    /// Compare two schemes by their per-vertex invariant lists
    Compare {
        file1: String,
        file2: String,
        #[arg(long, value_enum, default_value_t = Mode::Complex)]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// All-pairs comparison over every parseable file in a directory
    Batch {
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Complex)]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// The subconstituent identity suite, exact, per vertex
    Identities {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        vertex: Option<usize>,
    },
}

// ---------------------------------------------------------------------------
// Error handling and exit codes
// ---------------------------------------------------------------------------

enum CliError {
    /// Exit 1: bad usage, unreadable input, malformed files.
    Usage(String),
    /// Exit 2: the mathematics failed to verify.
    Math(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Math(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Math(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match &e {
            Error::Syntax { .. }
            | Error::VertexOutOfRange { .. }
            | Error::RelationOutOfRange { .. }
            | Error::Unsupported(_) => CliError::Usage(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    // die quietly when the downstream end of a pipe closes
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's default exit code for usage errors is 2; the contract
            // here reserves 2 for verification failures
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

// ---------------------------------------------------------------------------
// Input loading
// ---------------------------------------------------------------------------

enum LoadedInput {
    Tournament(Tournament),
    Scheme(SchemeTable),
}

impl LoadedInput {
    fn order(&self) -> usize {
        match self {
            LoadedInput::Tournament(t) => t.order(),
            LoadedInput::Scheme(s) => s.order(),
        }
    }

    fn table(&self) -> SchemeTable {
        match self {
            LoadedInput::Tournament(t) => scheme_from_tournament(t),
            LoadedInput::Scheme(s) => s.clone(),
        }
    }

    fn scheme_data(self) -> CliResult<SchemeData> {
        Ok(match self {
            LoadedInput::Tournament(t) => SchemeData::from_tournament(t)?,
            LoadedInput::Scheme(s) => SchemeData::from_scheme_table(s)?,
        })
    }

    /// The tournament behind the input, for commands that need one.
    fn tournament(&self) -> CliResult<Tournament> {
        match self {
            LoadedInput::Tournament(t) => Ok(t.clone()),
            LoadedInput::Scheme(s) => {
                if s.rank() == 3 && !s.is_symmetric() {
                    Ok(tournament_from_scheme(s)?)
                } else {
                    Err(CliError::Usage(
                        "this command needs a tournament or an asymmetric rank-3 scheme".into(),
                    ))
                }
            }
        }
    }
}

/// Accepts a path, `-` for stdin, or the pseudo-identifiers `paley:P` and
/// `paleygraph:P`. File contents are sniffed by the header line: one token
/// means a tournament file, two tokens a scheme file.
fn load_input(spec: &str) -> CliResult<LoadedInput> {
    if let Some(p) = spec.strip_prefix("paley:") {
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::Usage(format!("bad prime in {spec:?}")))?;
        return Ok(LoadedInput::Tournament(paley_tournament(p)?));
    }
    if let Some(p) = spec.strip_prefix("paleygraph:") {
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::Usage(format!("bad prime in {spec:?}")))?;
        return Ok(LoadedInput::Scheme(paley_graph_scheme(p)?));
    }
    let text = if spec == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(spec).map_err(|e| CliError::Usage(format!("{spec}: {e}")))?
    };
    parse_input_text(&text)
}

fn parse_input_text(text: &str) -> CliResult<LoadedInput> {
    let header_tokens = text
        .lines()
        .next()
        .map(|l| l.split_whitespace().count())
        .unwrap_or(0);
    match header_tokens {
        1 => Ok(LoadedInput::Tournament(parse_tournament(text)?)),
        2 => Ok(LoadedInput::Scheme(parse_scheme(text)?)),
        _ => Err(CliError::Usage(
            "unrecognized input: expected `n` (tournament) or `n d` (scheme) on line 1".into(),
        )),
    }
}

fn vertex_list(order: usize, vertex: Option<usize>) -> CliResult<Vec<usize>> {
    match vertex {
        None => Ok((0..order).collect()),
        Some(x) if x < order => Ok(vec![x]),
        Some(x) => Err(CliError::Usage(format!(
            "vertex {x} out of range for order {order}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Paley { p, graph, output } => cmd_paley(p, graph, output),
        Command::Verify { file } => cmd_verify(&file),
        Command::Invariants { file, vertex, json } => cmd_invariants(&file, vertex, json),
        Command::Signature { file, vertex, json } => cmd_signature(&file, vertex, json),
        Command::Profile { file, mode } => cmd_profile(&file, mode),
        Command::OracleDim { file, vertex } => cmd_oracle_dim(&file, vertex),
        Command::Compare {
            file1,
            file2,
            mode,
            json,
        } => cmd_compare(&file1, &file2, mode, json),
        Command::Batch { dir, mode, json } => cmd_batch(&dir, mode, json),
        Command::Identities { file, vertex } => cmd_identities(&file, vertex),
    }
}

fn cmd_paley(p: u64, graph: bool, output: Option<PathBuf>) -> CliResult<()> {
    let text = if graph {
        serialize_scheme(&paley_graph_scheme(p)?)
    } else {
        serialize_tournament(&paley_tournament(p)?)
    };
    match output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_verify(file: &str) -> CliResult<()> {
    match load_input(file)? {
        LoadedInput::Tournament(t) => {
            let params = verify_drt(&t)?;
            println!(
                "tournament of order {}: doubly regular, u = {}",
                t.order(),
                params.u()
            );
        }
        LoadedInput::Scheme(s) => {
            if s.rank() == 3 && s.is_symmetric() {
                let u = verify_conference(&s)?;
                println!(
                    "symmetric rank-3 scheme of order {}: conference identity holds, u = {u}",
                    s.order()
                );
            } else if s.rank() == 3 {
                let t = tournament_from_scheme(&s)?;
                let params = verify_drt(&t)?;
                println!(
                    "asymmetric rank-3 scheme of order {}: doubly regular, u = {}",
                    s.order(),
                    params.u()
                );
            } else {
                println!(
                    "rank-{} scheme of order {}: table invariants hold (no rank-3 identity suite applies)",
                    s.rank(),
                    s.order()
                );
            }
        }
    }
    Ok(())
}

struct ComputedInvariants {
    kind: &'static str,
    records: Vec<VertexRecord>,
    dims: Vec<usize>,
}

fn compute_invariants(
    input: &LoadedInput,
    vertices: &[usize],
    with_signatures: bool,
) -> CliResult<ComputedInvariants> {
    match input {
        LoadedInput::Scheme(s) if s.rank() == 3 && s.is_symmetric() => {
            let mut records = Vec::new();
            let mut dims = Vec::new();
            for &x in vertices {
                let inv = conference_invariant(s, x)?;
                dims.push(inv.dim);
                records.push(VertexRecord::new(&inv, None));
            }
            Ok(ComputedInvariants {
                kind: "conference",
                records,
                dims,
            })
        }
        other => {
            let t = other.tournament()?;
            let mut records = Vec::new();
            let mut dims = Vec::new();
            for &x in vertices {
                let inv = complex_invariant(&t, x)?;
                dims.push(inv.dim);
                let sig = if with_signatures {
                    Some(rational_signature(&t, x)?)
                } else {
                    None
                };
                records.push(VertexRecord::new(&inv, sig.as_ref()));
            }
            Ok(ComputedInvariants {
                kind: "drt",
                records,
                dims,
            })
        }
    }
}

fn cmd_invariants(file: &str, vertex: Option<usize>, json: bool) -> CliResult<()> {
    let input = load_input(file)?;
    let vertices = vertex_list(input.order(), vertex)?;
    let computed = compute_invariants(&input, &vertices, false)?;
    if json {
        let report = InvariantReport {
            scheme: file.to_string(),
            order: input.order(),
            kind: computed.kind.to_string(),
            vertices: computed.records,
            profile: format_dim_profile(&computed.dims),
        };
        println!("{}", emit_json(&report));
    } else {
        for rec in &computed.records {
            let factors: Vec<String> = rec
                .factors
                .iter()
                .map(|f| {
                    let coeffs: Vec<String> = f.coeffs.iter().map(|c| c.to_string()).collect();
                    format!("[{}]^{}", coeffs.join(","), f.multiplicity)
                })
                .collect();
            println!(
                "vertex {}: dim {}, epsilon {}, m2 {}, d_alpha {}, factors {}",
                rec.vertex,
                rec.dim,
                rec.epsilon,
                rec.m2,
                rec.d_alpha,
                if factors.is_empty() {
                    "none".to_string()
                } else {
                    factors.join(" ")
                }
            );
        }
        println!("profile: {}", format_dim_profile(&computed.dims));
    }
    Ok(())
}

fn cmd_signature(file: &str, vertex: Option<usize>, json: bool) -> CliResult<()> {
    let input = load_input(file)?;
    let vertices = vertex_list(input.order(), vertex)?;
    let t = input.tournament()?;
    verify_drt(&t)?;
    if json {
        let computed = compute_invariants(&input, &vertices, true)?;
        let report = InvariantReport {
            scheme: file.to_string(),
            order: input.order(),
            kind: computed.kind.to_string(),
            vertices: computed.records,
            profile: format_dim_profile(&computed.dims),
        };
        println!("{}", emit_json(&report));
    } else {
        for &x in &vertices {
            let sig = rational_signature(&t, x)?;
            println!("vertex {x}: dim {} = {sig}", sig.rational_dimension());
        }
    }
    Ok(())
}

fn cmd_profile(file: &str, mode: Mode) -> CliResult<()> {
    let input = load_input(file)?;
    match mode {
        Mode::Complex => {
            let vertices: Vec<usize> = (0..input.order()).collect();
            let computed = compute_invariants(&input, &vertices, false)?;
            println!("{}", format_dim_profile(&computed.dims));
        }
        Mode::Rational => {
            let data = input.scheme_data()?;
            let signatures = data.rational_signatures()?;
            for (sig, count) in signature_profile(&signatures) {
                println!("{count} x [{sig}]");
            }
        }
    }
    Ok(())
}

fn cmd_oracle_dim(file: &str, vertex: usize) -> CliResult<()> {
    let input = load_input(file)?;
    let table = input.table();
    let dim = oracle_dimension(&table, vertex)?;
    println!("{dim}");
    Ok(())
}

fn cmd_compare(file1: &str, file2: &str, mode: Mode, json: bool) -> CliResult<()> {
    let a = load_input(file1)?.scheme_data()?;
    let b = load_input(file2)?.scheme_data()?;
    let verdict = compare_schemes(&a, &b, mode.into())?;
    if json {
        let report = CompareReport {
            left: file1.to_string(),
            right: file2.to_string(),
            mode: format!("{mode:?}").to_lowercase(),
            verdict: verdict_name(&verdict).to_string(),
            witness: witness_record(&verdict),
        };
        println!("{}", emit_json(&report));
    } else {
        println!("verdict: {}", verdict_name(&verdict));
        describe_verdict(&verdict);
    }
    Ok(())
}

fn describe_verdict(verdict: &CompareVerdict) {
    match verdict {
        CompareVerdict::DistinguishedByOrder { left, right } => {
            println!("  orders differ: {left} vs {right}");
        }
        CompareVerdict::DistinguishedByComplexDims {
            dim,
            left_count,
            right_count,
        } => {
            println!("  dimension {dim} occurs {left_count} vs {right_count} times");
        }
        CompareVerdict::DistinguishedByRationalSignature(w) => {
            println!(
                "  at sorted signature {}: {} vs {}",
                w.signature_index,
                w.left
                    .as_ref()
                    .map_or("absent".to_string(), |c| c.to_string()),
                w.right
                    .as_ref()
                    .map_or("absent".to_string(), |c| c.to_string()),
            );
        }
        CompareVerdict::NotDistinguished | CompareVerdict::Inconclusive => {}
    }
}

fn cmd_batch(dir: &Path, mode: Mode, json: bool) -> CliResult<()> {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.is_file())
        .collect();
    entries.sort();
    let mut names = Vec::new();
    let mut data = Vec::new();
    for path in &entries {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("skipping {}: {e}", path.display());
                continue;
            }
        };
        match parse_input_text(&text).and_then(|i| i.scheme_data()) {
            Ok(d) => {
                names.push(path.file_name().unwrap().to_string_lossy().into_owned());
                data.push(d);
            }
            Err(e) => eprintln!("skipping {}: {}", path.display(), e.message()),
        }
    }
    if names.is_empty() {
        return Err(CliError::Usage(format!(
            "no parseable scheme files in {}",
            dir.display()
        )));
    }
    let k = names.len();
    let mut verdicts: BTreeMap<(usize, usize), CompareVerdict> = BTreeMap::new();
    for i in 0..k {
        for j in i + 1..k {
            let v = compare_schemes(&data[i], &data[j], mode.into())?;
            verdicts.insert((i, j), v);
        }
    }
    // equivalence classes: reflexive-symmetric-transitive closure of
    // "not distinguished", taken at the reporting level only; the full
    // pairwise matrix is still printed
    let mut class_of: Vec<usize> = (0..k).collect();
    fn find(class_of: &mut Vec<usize>, i: usize) -> usize {
        if class_of[i] != i {
            let root = find(class_of, class_of[i]);
            class_of[i] = root;
        }
        class_of[i]
    }
    for (&(i, j), v) in &verdicts {
        if matches!(v, CompareVerdict::NotDistinguished) {
            let (a, b) = (find(&mut class_of, i), find(&mut class_of, j));
            if a != b {
                class_of[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for i in 0..k {
        let root = find(&mut class_of, i);
        classes.entry(root).or_default().push(names[i].clone());
    }
    let classes: Vec<Vec<String>> = classes.into_values().collect();
    let inconclusive: Vec<(String, String)> = verdicts
        .iter()
        .filter(|(_, v)| matches!(v, CompareVerdict::Inconclusive))
        .map(|(&(i, j), _)| (names[i].clone(), names[j].clone()))
        .collect();

    if json {
        let report = BatchReport {
            mode: format!("{mode:?}").to_lowercase(),
            files: names.clone(),
            verdicts: verdicts
                .iter()
                .map(|(&(i, j), v)| BatchPair {
                    left: names[i].clone(),
                    right: names[j].clone(),
                    verdict: verdict_name(v).to_string(),
                })
                .collect(),
            classes,
            inconclusive_pairs: inconclusive,
        };
        println!("{}", emit_json(&report));
    } else {
        println!("{} files, mode {:?}", k, mode);
        println!("pairwise verdicts (= not distinguished, X distinguished, ? inconclusive):");
        for i in 0..k {
            let mut row = String::new();
            for j in 0..k {
                let symbol = if i == j {
                    '='
                } else {
                    let key = (i.min(j), i.max(j));
                    match verdicts[&key] {
                        CompareVerdict::NotDistinguished => '=',
                        CompareVerdict::Inconclusive => '?',
                        _ => 'X',
                    }
                };
                row.push(symbol);
                row.push(' ');
            }
            println!("  {row} {}", names[i]);
        }
        println!("equivalence classes under `not distinguished`:");
        for (idx, class) in classes.iter().enumerate() {
            println!("  class {}: {}", idx + 1, class.join(" "));
        }
        if !inconclusive.is_empty() {
            println!("inconclusive pairs:");
            for (a, b) in &inconclusive {
                println!("  {a} vs {b}");
            }
        }
    }
    Ok(())
}

fn cmd_identities(file: &str, vertex: Option<usize>) -> CliResult<()> {
    let input = load_input(file)?;
    let t = input.tournament()?;
    let params = verify_drt(&t)?;
    let vertices = vertex_list(t.order(), vertex)?;
    let mut all_ok = true;
    for &x in &vertices {
        let d = subconstituents(&t, x)?;
        let report = verify_subconstituent_identities(&d, params.u());
        println!("vertex {x}:");
        for check in &report.checks {
            if check.passed {
                println!("  PASS {}", check.name);
            } else {
                all_ok = false;
                let (r, c) = check.first_failure.unwrap_or((0, 0));
                println!("  FAIL {} at ({r},{c})", check.name);
            }
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err(CliError::Math("identity suite failed".into()))
    }
}
