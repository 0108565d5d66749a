//! `rrreg`: regularity of Rees algebras and fiber rings of equigenerated
//! monomial ideals in two variables.

mod document;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rrreg_core::hilbert::{hilbert_report_in, hilbert_samuel_in};
use rrreg_core::search::CounterExample;
use rrreg_core::{
    make_ideal, rr_generators, rr_oracle, Analyzer, Cap, Condition, Error as AlgebraError,
    HilbertRow, IdealSpec, RegularityReport, ScanOptions, SearchError,
};

use document::{AnalysisDocument, HilbertSection, Input, RrSection};

/// Exit status for computations stopped by a cap or resource ceiling.
const EXIT_UNRESOLVED: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "rrreg", version, about = "Ratliff-Rush closures and Rees/fiber regularity of monomial ideals in k[x,y]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare reg R(I) with reg F(I) for one ideal.
    Analyze(AnalyzeArgs),
    /// Sweep four-generated ideals over a range of degrees.
    Search(SearchArgs),
    /// Hilbert-Samuel polynomial and postulation number.
    Hilbert(HilbertArgs),
    /// Generators of the Ratliff-Rush closure of a power.
    Rr(RrArgs),
}

#[derive(Debug, Args)]
struct IdealArgs {
    /// Generation degree d.
    #[arg(long)]
    degree: usize,
    /// Interior x-exponents a_1 < ... < a_p, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    exponents: Vec<usize>,
}

impl IdealArgs {
    fn spec(&self) -> Result<IdealSpec, AlgebraError> {
        make_ideal(self.degree, &self.exponents)
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Print a JSON document.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Print plain text (default).
    #[arg(long)]
    text: bool,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    /// Largest power scanned for r_J and reg R (default d²(d²-1)).
    #[arg(long)]
    cap: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct HilbertArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    /// Also report H(n) and P(n) at this n.
    #[arg(long)]
    at: Option<usize>,
    #[arg(long)]
    cap: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct RrArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    /// The power n.
    #[arg(long)]
    power: usize,
    /// Drop divisibility-redundant generators.
    #[arg(long)]
    minimal: bool,
    /// Cross-check against the colon-ideal construction with t up to this value.
    #[arg(long, value_name = "TMAX")]
    oracle: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    min_degree: usize,
    #[arg(long)]
    max_degree: usize,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, env = "RRREG_WORKERS")]
    workers: Option<usize>,
    /// File receiving one `d,a,b,r_J,reg_F,status` line per finished triple.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Continue from an existing checkpoint instead of overwriting it.
    #[arg(long, requires = "checkpoint")]
    resume: bool,
    /// Write the deterministic report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Triples per checkpoint flush.
    #[arg(long, default_value_t = 1000)]
    flush_every: usize,
    #[arg(long)]
    cap: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug)]
enum Failure {
    Validation(String),
    Unresolved(String),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::CapExceeded { .. } | AlgebraError::ResourceLimit { .. } => {
                Failure::Unresolved(e.to_string())
            }
            other => Failure::Validation(other.to_string()),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Algebra(inner) => inner.into(),
            other => Failure::Validation(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    // clap exits with 2 on usage errors; 2 is reserved for unresolved results
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Search(args) => search(args),
        Command::Hilbert(args) => hilbert(args),
        Command::Rr(args) => rr(args),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
        Err(Failure::Unresolved(msg)) => {
            eprintln!("unresolved: {msg}");
            ExitCode::from(EXIT_UNRESOLVED)
        }
    }
}

fn input(ideal: &IdealArgs) -> Input {
    Input {
        degree: ideal.degree,
        exponents: ideal.exponents.clone(),
        cap: None,
        power: None,
        at: None,
        oracle: None,
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "unresolved".to_string(), |v| v.to_string())
}

fn print_regularity(spec: &IdealSpec, r: &RegularityReport) {
    println!("ideal: {spec}");
    println!("r_J = {}", r.r_j);
    println!("reg F = {}", r.reg_f);
    println!("reg R = {}", opt(r.reg_r));
    println!("s* = {}", opt(r.s_star));
    println!("s*_in = {}", opt(r.s_star_in));
    let verdict = match (r.conjecture_holds, r.reg_r) {
        (true, _) => "TRUE (reg R = reg F)",
        (false, Some(_)) => "FALSE (reg R > reg F)",
        (false, None) => "FALSE (reg R > reg F, reg R unresolved)",
    };
    println!("verdict: {verdict}");
    if let Some(w) = r.witness {
        println!("witness: {w} in tilde(I^{}) but not in I^{}", r.reg_f, r.reg_f);
    }
    if let Some(c) = r.criterion_witness {
        let cond = match c.condition {
            Condition::First => "i",
            Condition::Second => "ii",
        };
        println!(
            "certificate: a = {}, b = {}, a + b = {}, condition ({cond})",
            c.a,
            c.b,
            c.a + c.b
        );
    }
    if r.lemma_consistent == Some(false) {
        println!("warning: sumset characterization of reg F disagrees with the initial-degree scan");
    }
}

fn analyze(args: AnalyzeArgs) -> Outcome {
    let spec = args.ideal.spec()?;
    let report = Analyzer::new(&spec).report(Cap::from(args.cap))?;
    if args.output.json {
        let mut inp = input(&args.ideal);
        inp.cap = args.cap;
        let doc = AnalysisDocument::new("analyze", inp).with_regularity(&report);
        println!("{}", doc.to_json());
    } else {
        print_regularity(&spec, &report);
    }
    if report.reg_r.is_none() {
        return Ok(ExitCode::from(EXIT_UNRESOLVED));
    }
    Ok(ExitCode::SUCCESS)
}

fn hilbert(args: HilbertArgs) -> Outcome {
    let spec = args.ideal.spec()?;
    let mut analyzer = Analyzer::new(&spec);
    let reg_r = analyzer.reg_rees(Cap::from(args.cap))?;
    let report = hilbert_report_in(analyzer.family(), reg_r)?;
    let at = match args.at {
        Some(n) => Some(HilbertRow {
            n,
            h: hilbert_samuel_in(analyzer.family(), n)?,
            p: report.poly.eval(n) as i64,
        }),
        None => None,
    };
    if args.output.json {
        let mut inp = input(&args.ideal);
        inp.cap = args.cap;
        inp.at = args.at;
        let mut doc = AnalysisDocument::new("hilbert", inp);
        doc.reg_r = Some(reg_r);
        doc.hilbert = Some(HilbertSection::new(report, at));
        println!("{}", doc.to_json());
        return Ok(ExitCode::SUCCESS);
    }
    println!("ideal: {spec}");
    println!("e = {}", report.e);
    println!(
        "poly = ({}, {}, {})  P(n) = {}",
        report.poly.e0, report.poly.e1, report.poly.e2, report.poly
    );
    println!("reg R = {reg_r}");
    let from = report.postulation.map_or(0, |p| p.saturating_sub(2));
    println!("{:>6} {:>16} {:>16}", "n", "H(n)", "P(n)");
    for row in report.table.iter().filter(|r| r.n >= from) {
        let mark = if row.h as i64 != row.p { "  *" } else { "" };
        println!("{:>6} {:>16} {:>16}{mark}", row.n, row.h, row.p);
    }
    match report.postulation {
        Some(p) => println!("n(I) = {p}"),
        None => println!("n(I) = none (H = P for all n >= 0)"),
    }
    if let Some(row) = at {
        println!("H({}) = {}", row.n, row.h);
        println!("P({}) = {}", row.n, row.p);
    }
    Ok(ExitCode::SUCCESS)
}

fn rr(args: RrArgs) -> Outcome {
    let spec = args.ideal.spec()?;
    let closure = rr_generators(&spec, args.power)?;
    let agreement = match args.oracle {
        Some(t_max) => Some(rr_oracle(&spec, args.power, t_max)?.ideal() == closure.ideal()),
        None => None,
    };
    let closure = if args.minimal {
        closure.minimalized()
    } else {
        closure
    };
    if args.output.json {
        let mut inp = input(&args.ideal);
        inp.power = Some(args.power);
        inp.oracle = args.oracle;
        let mut doc = AnalysisDocument::new("rr", inp);
        doc.rr = Some(RrSection {
            power: args.power,
            minimal: args.minimal,
            count: closure.generators.len(),
            generators: closure.generators,
            oracle_agreement: agreement,
        });
        println!("{}", doc.to_json());
    } else {
        use std::io::Write;
        let stdout = std::io::stdout();
        let mut out = std::io::BufWriter::new(stdout.lock());
        writeln!(out, "ideal: {spec}")?;
        writeln!(
            out,
            "{} generators of tilde(I^{}){}",
            closure.generators.len(),
            args.power,
            if args.minimal { " (minimal)" } else { "" }
        )?;
        for g in &closure.generators {
            writeln!(out, "{g}")?;
        }
        if let Some(ok) = agreement {
            writeln!(out, "oracle agreement: {}", if ok { "yes" } else { "no" })?;
        }
    }
    if agreement == Some(false) {
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn search(args: SearchArgs) -> Outcome {
    let workers = args
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let opts = ScanOptions {
        workers,
        checkpoint: args.checkpoint.clone(),
        resume: args.resume,
        flush_every: args.flush_every,
        stop_after: None,
        cap: Cap::from(args.cap),
    };
    let outcome = rrreg_core::scan(args.min_degree, args.max_degree, &opts)?;
    let report = outcome.render_report();
    if let Some(path) = &args.report {
        std::fs::write(path, &report)?;
    }
    let n_cx = outcome.counterexamples().count();
    let n_un = outcome.unresolved().count();
    if args.output.json {
        let doc = serde_json::json!({
            "version": document::VERSION,
            "command": "search",
            "minDegree": outcome.min_degree,
            "maxDegree": outcome.max_degree,
            "cases": outcome.records.len(),
            "counterexamples": outcome
                .counterexamples()
                .filter_map(CounterExample::from_record)
                .collect::<Vec<_>>(),
            "unresolved": outcome.unresolved().map(|r| r.to_line()).collect::<Vec<_>>(),
            "perDegree": outcome.per_degree,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json value"));
    } else {
        println!(
            "degrees {}..={}: {} cases, {n_cx} counter-examples, {n_un} unresolved",
            outcome.min_degree,
            outcome.max_degree,
            outcome.records.len()
        );
        for r in outcome.counterexamples() {
            let w = r.witness.map(|w| format!(" witness {w}")).unwrap_or_default();
            println!("counter-example: {}{w}", r.to_line());
        }
        for r in outcome.unresolved() {
            println!("unresolved: {}", r.to_line());
        }
    }
    if n_un > 0 {
        return Ok(ExitCode::from(EXIT_UNRESOLVED));
    }
    Ok(ExitCode::SUCCESS)
}
