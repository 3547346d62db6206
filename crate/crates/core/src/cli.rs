//! Command-line front end. JSON goes to stdout, human-readable tables to
//! stderr.
//!
//! Exit codes: 0 computed, 1 property violated, 2 input error, 3 resource cap
//! or budget refusal.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bounds::threshold_report;
use crate::construct::{
    admissible_blowup_construction, c4_construction, clique_blowup_construction, linear_construction,
    rpartite_construction, Construction,
};
use crate::detect::{contains_berge_with, count_f_copies_in_shadow, verify_certificate, BergeCertificate, DetectOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::invariants::{ramsey_number, RamseyOptions};
use crate::oracle::{sandwich_with, Cache, Caps, Mode, SearchResult};
use crate::patterns::{named_pattern, BUILTIN_NAMES};
use crate::projective::projective_incidence_graph;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "berge", version, about = "Berge-F containment, constructions, bounds and exact searches")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a construction and print it with its claims.
    Construct(ConstructArgs),
    /// Decide whether a hypergraph contains a Berge copy of a pattern.
    Check(CheckArgs),
    /// Count copies of a pattern in the 2-shadow of a hypergraph.
    Count(CountArgs),
    /// Uniformity threshold bounds for a pattern.
    Bounds(BoundsArgs),
    /// Exhaustive two-colour Ramsey number.
    Ramsey(RamseyArgs),
    /// Exact extremal number by exhaustive search.
    Search(SearchArgs),
    /// Re-check a Berge certificate.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct ConstructArgs {
    /// linear, clique-blowup, admissible-blowup, rpartite or c4.
    name: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Clique size for clique-blowup.
    #[arg(long)]
    s: Option<usize>,
    /// Chromatic threshold for admissible-blowup.
    #[arg(long)]
    c: Option<usize>,
    /// Block size bound for admissible-blowup.
    #[arg(long)]
    t: Option<usize>,
    /// Comma-separated class blowup factors.
    #[arg(long, value_delimiter = ',')]
    factors: Option<Vec<usize>>,
    /// Projective plane order used as the c4 base (default 2).
    #[arg(long)]
    q: Option<usize>,
    /// Graph JSON file used as the c4 base instead of a projective plane.
    #[arg(long)]
    base: Option<PathBuf>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Hypergraph JSON file; `-` or absent reads stdin.
    #[arg(long)]
    host: Option<PathBuf>,
    /// Builtin pattern name or graph JSON file.
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    node_limit: Option<u64>,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    host: Option<PathBuf>,
    #[arg(long)]
    pattern: String,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long)]
    pattern: String,
    /// Skip the Ramsey upper bound.
    #[arg(long)]
    no_ramsey: bool,
    #[arg(long, default_value_t = RamseyOptions::default().n_max)]
    ramsey_nmax: usize,
    #[arg(long)]
    ramsey_node_limit: Option<u64>,
}

#[derive(Debug, Args)]
struct RamseyArgs {
    #[arg(long)]
    g1: String,
    #[arg(long)]
    g2: String,
    #[arg(long, default_value_t = RamseyOptions::default().n_max)]
    nmax: usize,
    #[arg(long)]
    node_limit: Option<u64>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// hypergraph, linear-hypergraph, graph, generalized or sandwich.
    #[arg(long)]
    mode: String,
    #[arg(long)]
    n: usize,
    /// Run every n from --n up to this value and print a CSV table.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long)]
    pattern: String,
    /// Bypass the on-disk result cache.
    #[arg(long)]
    no_cache: bool,
    /// Override the size cap for this search.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    host: Option<PathBuf>,
    #[arg(long)]
    pattern: String,
    /// Certificate JSON file.
    #[arg(long)]
    cert: PathBuf,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
            } else {
                let _ = stdout.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            let _ = writeln!(stderr, "error: --threads must be positive");
            return EXIT_INPUT;
        }
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let host = match cli.command.host() {
        Some(None) => {
            let mut s = String::new();
            if let Err(e) = stdin.read_to_string(&mut s) {
                let _ = writeln!(stderr, "error: cannot read stdin: {e}");
                return EXIT_INPUT;
            }
            Some(s)
        }
        _ => None,
    };
    let mut out = Output::default();
    let result = pool.install(|| dispatch(cli.command, host, &mut out));
    let _ = stdout.write_all(&out.stdout);
    let _ = stderr.write_all(&out.stderr);
    let _ = stdout.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_resource_limit() {
                EXIT_CAP
            } else {
                EXIT_INPUT
            }
        }
    }
}

impl Command {
    /// `Some(None)` when the command reads its host from stdin.
    fn host(&self) -> Option<Option<&Path>> {
        let host = match self {
            Command::Check(a) => &a.host,
            Command::Count(a) => &a.host,
            Command::Verify(a) => &a.host,
            _ => return None,
        };
        Some(host.as_deref().filter(|p| *p != Path::new("-")))
    }
}

#[derive(Default)]
struct Output {
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

impl Output {
    fn json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        serde_json::to_writer(&mut self.stdout, value)?;
        writeln!(self.stdout)?;
        Ok(())
    }

    fn line(&mut self, text: &str) -> Result<()> {
        writeln!(self.stdout, "{text}")?;
        Ok(())
    }

    fn note(&mut self, text: &str) -> Result<()> {
        write!(self.stderr, "{text}")?;
        if !text.ends_with('\n') {
            writeln!(self.stderr)?;
        }
        Ok(())
    }
}

fn dispatch(cmd: Command, stdin: Option<String>, out: &mut Output) -> Result<i32> {
    match cmd {
        Command::Construct(a) => construct(a, out),
        Command::Check(a) => {
            let h = read_host(a.host.as_deref(), stdin.as_deref())?;
            let f = resolve_pattern(&a.pattern)?;
            let opts = DetectOptions { node_limit: a.node_limit };
            match contains_berge_with(&h, &f, &opts)? {
                Some(cert) => out.json(&cert)?,
                None => out.line("FREE")?,
            }
            Ok(EXIT_OK)
        }
        Command::Count(a) => {
            let h = read_host(a.host.as_deref(), stdin.as_deref())?;
            let f = resolve_pattern(&a.pattern)?;
            #[derive(Serialize)]
            struct Count {
                count: u64,
            }
            out.json(&Count { count: count_f_copies_in_shadow(&h, &f) })?;
            Ok(EXIT_OK)
        }
        Command::Bounds(a) => {
            let f = resolve_pattern(&a.pattern)?;
            let opts = RamseyOptions {
                n_max: a.ramsey_nmax,
                node_limit: a.ramsey_node_limit.or(RamseyOptions::default().node_limit),
            };
            let report = threshold_report(&f, (!a.no_ramsey).then_some(&opts))?;
            out.json(&report)?;
            out.note(&report.to_table())?;
            Ok(EXIT_OK)
        }
        Command::Ramsey(a) => {
            let g1 = resolve_pattern(&a.g1)?;
            let g2 = resolve_pattern(&a.g2)?;
            let opts = RamseyOptions {
                n_max: a.nmax,
                node_limit: a.node_limit.or(RamseyOptions::default().node_limit),
            };
            let res = ramsey_number(&g1, &g2, &opts)?;
            out.json(&res)?;
            for level in &res.levels {
                out.note(&format!(
                    "n = {:>2}  avoidable = {:<5}  nodes = {}  terminal = {}",
                    level.n, level.avoidable, level.nodes, level.terminal_colourings
                ))?;
            }
            Ok(EXIT_OK)
        }
        Command::Search(a) => search(a, out),
        Command::Verify(a) => {
            let h = read_host(a.host.as_deref(), stdin.as_deref())?;
            let f = resolve_pattern(&a.pattern)?;
            let cert: BergeCertificate = serde_json::from_str(&read_file(&a.cert)?)?;
            if verify_certificate(&h, &f, &cert) {
                out.line("VALID")?;
                Ok(EXIT_OK)
            } else {
                out.line("INVALID")?;
                Ok(EXIT_VIOLATION)
            }
        }
    }
}

fn require(v: Option<usize>, flag: &str, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameter(format!("construct {name} needs --{flag}")))
}

fn construct(a: ConstructArgs, out: &mut Output) -> Result<i32> {
    let name = a.name.as_str();
    let factors = a.factors.as_deref();
    let c: Construction = match name {
        "linear" => linear_construction(require(a.n, "n", name)?, require(a.r, "r", name)?)?,
        "clique-blowup" => clique_blowup_construction(
            require(a.n, "n", name)?,
            require(a.s, "s", name)?,
            require(a.r, "r", name)?,
            factors,
        )?,
        "admissible-blowup" => admissible_blowup_construction(
            require(a.n, "n", name)?,
            require(a.c, "c", name)?,
            require(a.t, "t", name)?,
            require(a.r, "r", name)?,
            factors,
        )?,
        "rpartite" => rpartite_construction(require(a.n, "n", name)?, require(a.r, "r", name)?)?,
        "c4" => {
            let base = match &a.base {
                Some(path) => serde_json::from_str::<Graph>(&read_file(path)?)?,
                None => projective_incidence_graph(a.q.unwrap_or(2))?,
            };
            c4_construction(&base, require(a.i, "i", name)?, require(a.j, "j", name)?)?
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "unknown construction {name:?}; expected linear, clique-blowup, admissible-blowup, rpartite or c4"
            )))
        }
    };
    out.json(&c)?;
    out.note(&format!(
        "{name}: n = {}, {} hyperedges, {}-uniform, free of {}",
        c.hypergraph.n(),
        c.hypergraph.len(),
        c.claims.uniform,
        c.claims.free_of.join(", ")
    ))?;
    Ok(EXIT_OK)
}

fn search(a: SearchArgs, out: &mut Output) -> Result<i32> {
    let f = resolve_pattern(&a.pattern)?;
    let mut caps = Caps::default();
    if let Some(cap) = a.cap {
        caps = Caps {
            hypergraph: Vec::new(),
            hypergraph_default: cap,
            graph: cap,
            generalized: cap,
        };
    }
    let cache = (!a.no_cache).then(Cache::from_env);
    let run = |mode: Mode, n: usize, r: usize, f: &Graph| -> Result<SearchResult> {
        match &cache {
            Some(c) => c.search(mode, n, r, f, &caps),
            None => crate::oracle::search(mode, n, r, f, &caps),
        }
    };
    let n_max = a.n_max.unwrap_or(a.n);
    if n_max < a.n {
        return Err(Error::InvalidParameter("--n-max must be at least --n".into()));
    }
    if a.mode == "sandwich" {
        let mut all = Vec::new();
        let mut csv = String::from("n,generalized,hypergraph,graph,holds\n");
        for n in a.n..=n_max {
            let s = sandwich_with(n, a.r, &f, run)?;
            csv.push_str(&format!("{n},{},{},{},{}\n", s.generalized, s.hypergraph, s.turan, s.holds));
            all.push(s);
        }
        if a.n_max.is_some() {
            out.json(&all)?;
        } else {
            out.json(&all[0])?;
        }
        out.note(&csv)?;
        return Ok(if all.iter().all(|s| s.holds) { EXIT_OK } else { EXIT_VIOLATION });
    }
    let mode = Mode::parse(&a.mode)?;
    let mut all = Vec::new();
    let mut csv = String::from("n,value,nodes,seconds\n");
    for n in a.n..=n_max {
        let res = run(mode, n, a.r, &f)?;
        csv.push_str(&format!("{n},{},{},{:.3}\n", res.value, res.nodes_explored, res.elapsed.as_secs_f64()));
        all.push(res);
    }
    if a.n_max.is_some() {
        out.json(&all)?;
    } else {
        out.json(&all[0])?;
    }
    out.note(&csv)?;
    Ok(EXIT_OK)
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))
}

fn read_host(path: Option<&Path>, stdin: Option<&str>) -> Result<Hypergraph> {
    let text = match path {
        Some(p) if p != Path::new("-") => read_file(p)?,
        _ => stdin.unwrap_or_default().to_string(),
    };
    Ok(serde_json::from_str(&text)?)
}

/// A builtin name, or a path to a graph JSON file.
pub fn resolve_pattern(name_or_path: &str) -> Result<Graph> {
    match named_pattern(name_or_path) {
        Ok(g) => Ok(g),
        Err(e) => {
            let path = Path::new(name_or_path);
            if path.is_file() {
                Ok(serde_json::from_str(&read_file(path)?)?)
            } else if name_or_path.ends_with(".json") {
                Err(Error::InvalidParameter(format!("pattern file {name_or_path} not found")))
            } else {
                Err(Error::InvalidParameter(format!(
                    "{e}; builtins are {} (and K<n>, P<n>, C<n>, K<s>,<t>), or pass a graph JSON file",
                    BUILTIN_NAMES.join(", ")
                )))
            }
        }
    }
}
