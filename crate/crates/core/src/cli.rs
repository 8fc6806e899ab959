//! The `slp` command line.

use std::fmt::Display;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::aztec::{self, assemble_complete_baxter, verify_canary, DominoTiling};
use crate::baxter::{
    anti_of, block_decompose, enumerate_slp, is_complete_baxter, is_slp, reduce, slp_decompose,
};
use crate::entangle::{
    down_layered, enumerate_3412_involutions, partners_of_layered_even, partners_of_layered_odd,
    up_layered, LayerSpec,
};
use crate::error::Error;
use crate::motzkin::{
    decompose_ud, enumerate_jt, enumerate_ud, is_janus, janus_decompose, map_k, map_k_direct,
    JanusDecomposition, MotzkinPath, UdDecomposition,
};
use crate::paths::{
    count_neen_formula, decompose_enne, decompose_neen, enumerate_enne, enumerate_neen, map_f,
    map_g, map_h, map_j, CatalanPath,
};
use crate::patterns::{is_anti_baxter, is_reduced_baxter, NamedPattern};
use crate::perm::Perm;
use crate::threads::{
    connector_decompositions, entangled_partners, entanglement_graph, enumerate_threads,
    even_decompositions, is_even_thread, is_odd_thread, leftmost_decomposition, odd_decompose,
    Side,
};
use crate::verify::{run_suite, Suite};

#[derive(Parser, Debug)]
#[command(name = "slp", version, about = "Snow leopard permutations, their threads, and related lattice paths")]
pub struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every object of one kind and size.
    Enumerate {
        kind: Kind,
        /// Permutation length (slp).
        #[arg(long, allow_negative_numbers = true)]
        len: Option<isize>,
        /// Size parameter (every other kind).
        #[arg(long, allow_negative_numbers = true)]
        n: Option<isize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Test membership; exits 1 when the answer is false.
    Check {
        class: Class,
        input: String,
        /// Pattern for `contains`: 3-14-2, 2-41-3, 3-41-2, 2-14-3 or 3412.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Split an object into the parts of its recursive description.
    Decompose { what: Decomposable, input: String },
    /// Threads entangled with a given thread.
    Partners {
        perm: String,
        /// Which kind of thread the input is.
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Entangled pairs (even thread of length n, odd thread of length n+1).
    Graph {
        #[arg(long, allow_negative_numbers = true)]
        n: isize,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Apply one of the maps to a path or permutation.
    Map {
        /// H, J, F, G, K, Kdirect, reduce, anti, complement or inverse.
        #[arg(ignore_case = true)]
        name: MapName,
        input: String,
    },
    /// Closed-form counts.
    Count {
        what: Countable,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Re-derive published tables and structural facts.
    Verify {
        suite: SuiteArg,
        #[arg(long, visible_alias = "n", default_value_t = 6)]
        nmax: usize,
    },
    /// Partners of the up-layered (odd side) or down-layered (even side)
    /// thread with the given layer lengths.
    PartnersLayered {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Domino tilings of the Aztec diamond.
    Aztec(AztecArgs),
}

#[derive(Args, Debug)]
pub struct AztecArgs {
    #[command(subcommand)]
    pub command: AztecCommand,
}

#[derive(Subcommand, Debug)]
pub enum AztecCommand {
    /// Every tiling, one domino per line, tilings separated by blank lines.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The two matrices of one tiling (index into `aztec enumerate`).
    Asm {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        index: usize,
    },
    /// Permutation matrices versus Baxter permutations over all tilings.
    VerifyCanary {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Slp,
    Et,
    Ot,
    Jt,
    Enne,
    Neen,
    Ud,
    Inv3412,
    Tilings,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
    Count,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Slp,
    Et,
    Ot,
    Jt,
    CompleteBaxter,
    Baxter,
    AntiBaxter,
    Contains,
    Enne,
    Neen,
    Ud,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Decomposable {
    Slp,
    Blocks,
    Even,
    Odd,
    Janus,
    Enne,
    Neen,
    Ud,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    H,
    J,
    F,
    G,
    K,
    #[value(name = "Kdirect")]
    Kdirect,
    Reduce,
    Anti,
    Complement,
    Inverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Countable {
    Neen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Even,
    Odd,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Even => Side::Even,
            SideArg::Odd => Side::Odd,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Tables,
    Bijections,
    Conjecture,
    Canary,
    Closure,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Bijections => Suite::Bijections,
            SuiteArg::Conjecture => Suite::Conjecture,
            SuiteArg::Canary => Suite::Canary,
            SuiteArg::Closure => Suite::Closure,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Outcome of a command that ran to completion.
#[derive(Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A check or verification answered "no".
    Failed,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::Io(e)
    }
}

type CliResult = Result<Status, CliError>;

#[derive(Serialize)]
struct Record<'a> {
    kind: &'a str,
    n: isize,
    value: &'a str,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Writes `values` sorted by their text in the requested format.
fn emit(out: &mut impl Write, kind: &str, n: isize, mut values: Vec<String>, format: Format) -> io::Result<()> {
    values.sort();
    match format {
        Format::Count => writeln!(out, "{}", values.len()),
        Format::Text => values.iter().try_for_each(|v| writeln!(out, "{v}")),
        Format::Jsonl => values.iter().try_for_each(|v| {
            let line = serde_json::to_string(&Record { kind, n, value: v }).expect("plain record");
            writeln!(out, "{line}")
        }),
        Format::Csv => {
            writeln!(out, "kind,n,value")?;
            values
                .iter()
                .try_for_each(|v| writeln!(out, "{kind},{n},{}", csv_field(v)))
        }
    }
}

fn texts<T: Display>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn compacts<'a>(items: impl IntoIterator<Item = &'a Perm>) -> Vec<String> {
    items.into_iter().map(Perm::compact).collect()
}

fn perm(s: &str) -> Result<Perm, Error> {
    s.parse()
}

fn in_range(what: &str, v: isize, lo: isize, hi: isize) -> Result<(), CliError> {
    if (lo..=hi).contains(&v) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("{what} = {v} is out of range {lo}..={hi}")))
    }
}

fn enumerate(out: &mut impl Write, kind: Kind, len: Option<isize>, n: Option<isize>, format: Format) -> CliResult {
    let name = kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    let size = match (kind, len, n) {
        (Kind::Slp, Some(l), None) => l,
        (Kind::Slp, _, _) => return Err(CliError::Usage("enumerate slp takes --len".into())),
        (_, None, Some(n)) => n,
        _ => return Err(CliError::Usage(format!("enumerate {name} takes --n"))),
    };
    let values = match kind {
        Kind::Slp => {
            in_range("--len", size, -1, 21)?;
            compacts(&enumerate_slp(size))
        }
        Kind::Et | Kind::Ot => {
            in_range("--n", size, -1, 10)?;
            let t = enumerate_threads(size);
            compacts(if kind == Kind::Et { &t.even_threads } else { &t.odd_threads })
        }
        Kind::Jt => {
            in_range("--n", size, -1, 11)?;
            compacts(&enumerate_jt(size))
        }
        Kind::Enne => {
            in_range("--n", size, 0, 13)?;
            texts(enumerate_enne(size as usize))
        }
        Kind::Neen => {
            in_range("--n", size, 0, 13)?;
            texts(enumerate_neen(size as usize))
        }
        Kind::Ud => {
            in_range("--n", size, 0, 20)?;
            texts(enumerate_ud(size as usize))
        }
        Kind::Inv3412 => {
            in_range("--n", size, 0, 14)?;
            compacts(enumerate_3412_involutions(size as usize).iter())
        }
        Kind::Tilings => {
            in_range("--n", size, 1, aztec::MAX_ORDER as isize)?;
            return aztec_enumerate(out, size as usize, format);
        }
    };
    emit(out, &name, size, values, format)?;
    Ok(Status::Ok)
}

fn one_line(t: &DominoTiling) -> String {
    t.to_string().replace('\n', "; ")
}

fn aztec_enumerate(out: &mut impl Write, order: usize, format: Format) -> CliResult {
    let tilings = aztec::enumerate_tilings(order)?;
    match format {
        Format::Text => {
            for (k, t) in tilings.iter().enumerate() {
                if k > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "{t}")?;
            }
        }
        _ => emit(out, "tilings", order as isize, tilings.iter().map(one_line).collect(), format)?,
    }
    Ok(Status::Ok)
}

fn check(out: &mut impl Write, class: Class, input: &str, pattern: Option<&str>) -> CliResult {
    if pattern.is_some() && class != Class::Contains {
        return Err(CliError::Usage("--pattern only applies to `check contains`".into()));
    }
    let answer = match class {
        Class::Slp => is_slp(&perm(input)?),
        Class::Et => is_even_thread(&perm(input)?),
        Class::Ot => is_odd_thread(&perm(input)?),
        Class::Jt => is_janus(&perm(input)?),
        Class::CompleteBaxter => is_complete_baxter(&perm(input)?),
        Class::Baxter => is_reduced_baxter(&perm(input)?),
        Class::AntiBaxter => is_anti_baxter(&perm(input)?),
        Class::Contains => {
            let pat: NamedPattern = pattern
                .ok_or_else(|| CliError::Usage("check contains needs --pattern".into()))?
                .parse()?;
            pat.is_contained_in(&perm(input)?)
        }
        Class::Enne => input.parse::<CatalanPath>()?.is_enne(),
        Class::Neen => input.parse::<CatalanPath>()?.is_neen(),
        Class::Ud => input.parse::<MotzkinPath>()?.is_peakless(),
    };
    writeln!(out, "{answer}")?;
    Ok(if answer { Status::Ok } else { Status::Failed })
}

fn decompose(out: &mut impl Write, what: Decomposable, input: &str) -> CliResult {
    match what {
        Decomposable::Slp => {
            let p = perm(input)?;
            let d = slp_decompose(&p)?;
            writeln!(out, "pi1 {}", d.left.compact())?;
            writeln!(out, "pi2 {}", d.right.compact())?;
            match (d.connector_position, d.connector_value(&p)) {
                (Some(pos), Some(v)) => writeln!(out, "connector {v} at position {pos}")?,
                _ => writeln!(out, "connector none")?,
            }
        }
        Decomposable::Blocks => {
            for b in block_decompose(&perm(input)?)? {
                writeln!(out, "{}", b.compact())?;
            }
        }
        Decomposable::Even => {
            let a = perm(input)?;
            let leftmost = leftmost_decomposition(&a)?;
            let actual = connector_decompositions(&a)?;
            for (b1, a1) in even_decompositions(&a)? {
                let mut tags = Vec::new();
                if (b1.clone(), a1.clone()) == leftmost {
                    tags.push("leftmost");
                }
                if !actual.contains(&(b1.clone(), a1.clone())) {
                    tags.push("absorbed");
                }
                let tags = if tags.is_empty() { String::new() } else { format!(" ({})", tags.join(", ")) };
                writeln!(out, "beta1 {} alpha1 {}{tags}", b1.compact(), a1.compact())?;
            }
        }
        Decomposable::Odd => {
            let (a2, b2) = odd_decompose(&perm(input)?)?;
            writeln!(out, "alpha2 {} beta2 {}", a2.compact(), b2.compact())?;
        }
        Decomposable::Janus => match janus_decompose(&perm(input)?)? {
            JanusDecomposition::LargestFirst(g1) => writeln!(out, "largest-first gamma1 {}", g1.compact())?,
            JanusDecomposition::Split(g1, g2) => {
                writeln!(out, "split gamma1 {} gamma2 {}", g1.compact(), g2.compact())?
            }
        },
        Decomposable::Enne => {
            let (a, b) = decompose_enne(&input.parse()?)?;
            writeln!(out, "a {a}\nb {b}")?;
        }
        Decomposable::Neen => {
            let (a, b) = decompose_neen(&input.parse()?)?;
            writeln!(out, "a {a}\nb {b}")?;
        }
        Decomposable::Ud => match decompose_ud(&input.parse()?)? {
            UdDecomposition::Level(a) => writeln!(out, "level a {a}")?,
            UdDecomposition::UpDown(a, b) => writeln!(out, "up-down a {a} b {b}")?,
        },
    }
    Ok(Status::Ok)
}

fn map(out: &mut impl Write, name: MapName, input: &str) -> CliResult {
    let text = match name {
        MapName::H => map_h(&input.parse()?)?.compact(),
        MapName::J => map_j(&input.parse()?)?.compact(),
        MapName::F => map_f(&perm(input)?)?.to_string(),
        MapName::G => map_g(&perm(input)?)?.to_string(),
        MapName::K => map_k(&perm(input)?)?.to_string(),
        MapName::Kdirect => map_k_direct(&perm(input)?)?.to_string(),
        MapName::Reduce => reduce(&perm(input)?)?.compact(),
        MapName::Anti => anti_of(&perm(input)?)?.compact(),
        MapName::Complement => perm(input)?.complement().compact(),
        MapName::Inverse => perm(input)?.inverse().compact(),
    };
    writeln!(out, "{text}")?;
    Ok(Status::Ok)
}

fn verify(out: &mut impl Write, suite: Suite, nmax: usize) -> CliResult {
    let checks = run_suite(suite, nmax);
    let failed = checks.iter().filter(|c| !c.passed).count();
    for c in &checks {
        writeln!(out, "{c}")?;
    }
    writeln!(out, "{} checks, {failed} failed", checks.len())?;
    Ok(if failed == 0 { Status::Ok } else { Status::Failed })
}

fn aztec_cmd(out: &mut impl Write, cmd: AztecCommand) -> CliResult {
    match cmd {
        AztecCommand::Enumerate { order, format } => aztec_enumerate(out, order, format),
        AztecCommand::Asm { order, index } => {
            let tilings = aztec::enumerate_tilings(order)?;
            let t = tilings.get(index).ok_or_else(|| {
                CliError::Usage(format!("--index {index} out of range (order {order} has {} tilings)", tilings.len()))
            })?;
            let (large, small) = t.asm_pair();
            writeln!(out, "{t}\n\nlarge\n{large}\n\nsmall\n{small}")?;
            if let Some(p) = large.permutation() {
                writeln!(out, "\nlarge permutation {}", p.compact())?;
                match assemble_complete_baxter(t) {
                    Ok(w) => writeln!(out, "complete Baxter {}", w.compact())?,
                    Err(_) => writeln!(out, "small matrix is not a permutation matrix")?,
                }
            }
            Ok(Status::Ok)
        }
        AztecCommand::VerifyCanary { order } => {
            let r = verify_canary(order)?;
            writeln!(out, "tilings {}", r.tilings)?;
            writeln!(out, "large matrix is a permutation matrix {}", r.permutation_lasms)?;
            writeln!(out, "  of which Baxter {}", r.baxter)?;
            writeln!(out, "  of which small matrix is also a permutation matrix {}", r.both_permutation)?;
            for k in &r.violations {
                writeln!(out, "violation at tiling #{k}")?;
            }
            writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" })?;
            Ok(if r.passed() { Status::Ok } else { Status::Failed })
        }
    }
}

/// Runs a parsed command, writing its output to `out`.
pub fn execute(cmd: Command, out: &mut impl Write) -> CliResult {
    match cmd {
        Command::Enumerate { kind, len, n, format } => enumerate(out, kind, len, n, format),
        Command::Check { class, input, pattern } => check(out, class, &input, pattern.as_deref()),
        Command::Decompose { what, input } => decompose(out, what, &input),
        Command::Partners { perm: p, side, format } => {
            let p = perm(&p)?;
            let partners = entangled_partners(&p, side.into())?;
            emit(out, "partners", p.len(), compacts(&partners), format)?;
            Ok(Status::Ok)
        }
        Command::Graph { n, format } => {
            in_range("--n", n, -1, 9)?;
            let g = entanglement_graph(n);
            let edges = g.edges.iter().map(|(a, b)| format!("{} | {}", a.compact(), b.compact())).collect();
            emit(out, "edge", n, edges, format)?;
            Ok(Status::Ok)
        }
        Command::Map { name, input } => map(out, name, &input),
        Command::Count { what: Countable::Neen, n, k } => {
            writeln!(out, "{}", count_neen_formula(n, k))?;
            Ok(Status::Ok)
        }
        Command::Verify { suite, nmax } => verify(out, suite.into(), nmax),
        Command::PartnersLayered { spec, side, format } => {
            let spec: LayerSpec = spec.parse()?;
            if spec.total() > 12 {
                return Err(CliError::Usage(format!("layer spec {spec} is longer than 12")));
            }
            let (thread, partners) = match side {
                SideArg::Odd => (up_layered(&spec), partners_of_layered_odd(&spec)),
                SideArg::Even => (down_layered(&spec), partners_of_layered_even(&spec)),
            };
            emit(out, "partners", thread.len(), compacts(&partners), format)?;
            Ok(Status::Ok)
        }
        Command::Aztec(a) => aztec_cmd(out, a.command),
    }
}

/// Entry point of the `slp` binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = execute(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(Status::Ok), Ok(())) => ExitCode::SUCCESS,
        (Ok(Status::Failed), Ok(())) => ExitCode::from(1),
        (Err(CliError::Usage(m)), _) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        (Err(CliError::Domain(e)), _) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (Err(CliError::Io(e)), _) | (_, Err(e)) => {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
