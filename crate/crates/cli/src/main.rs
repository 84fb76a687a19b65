//! `fillfn`: batch front end for word problems, conjugacy and filling surveys.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fillfn_core::area::{annular_area, AreaBudget, AreaOutcome, AreaSearch};
use fillfn_core::conjugacy::ConjugacyCertificate;
use fillfn_core::registry::{lookup, Group, Registry};
use fillfn_core::survey::{
    bs12_witness, g4_chain, g4_s_commutes, heis_companion_ledger, heis_witness, threads_from_env, ExperimentManifest,
    RunSpec, DEFAULT_SEED,
};
use fillfn_core::{verify_ledger, AreaLedger, Error, Presentation, Word};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "fillfn", version, about = "Word problems, conjugators and filling functions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the normal form of a word.
    Eval {
        #[arg(long)]
        group: String,
        #[arg(long)]
        word: String,
    },
    /// Decide whether a word is trivial.
    Wp {
        #[arg(long)]
        group: String,
        #[arg(long)]
        word: String,
        /// Print a derivation to the empty word when one is available.
        #[arg(long)]
        ledger: bool,
        #[arg(long, value_enum)]
        expect: Option<Triviality>,
    },
    /// Find a conjugator `w` with `w u w^-1 = v`.
    Conj {
        #[arg(long)]
        group: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long, default_value_t = 12)]
        radius: usize,
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long, value_enum)]
        expect: Option<Conjugacy>,
    },
    /// Exact area of a null-homotopic word.
    Area {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Exact annular area between two conjugate words.
    Ann {
        #[arg(long)]
        group: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Tabulate Area, CL or Ann.
    Survey(SurveyArgs),
    /// Build and check a witness family member.
    Witness {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        verify: bool,
    },
    /// Replay a conjugacy certificate or a derivation file.
    Check {
        #[arg(long)]
        group: String,
        #[arg(long, conflicts_with = "ledger", required_unless_present = "ledger")]
        certificate: Option<PathBuf>,
        #[arg(long)]
        ledger: Option<PathBuf>,
    },
    /// List registered groups.
    Groups,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    #[arg(long)]
    group: Option<String>,
    /// Presentation file: `generators:` and `relator:` lines.
    #[arg(long)]
    presentation: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 1_000_000)]
    max_nodes: usize,
    /// Longest intermediate word explored; defaults from the input length.
    #[arg(long)]
    max_len: Option<usize>,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long, required_unless_present = "manifest")]
    group: Option<String>,
    #[arg(long = "fn", value_enum, required_unless_present = "manifest")]
    function: Option<SurveyFn>,
    #[arg(long, required_unless_present = "manifest")]
    nmax: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, default_value_t = 12)]
    radius: usize,
    #[arg(long, default_value_t = 100_000)]
    max_nodes: usize,
    #[arg(long, default_value_t = 16)]
    max_len: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Run every table listed in a manifest instead.
    #[arg(long, conflicts_with_all = ["group", "function", "nmax"])]
    manifest: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Triviality {
    Trivial,
    Nontrivial,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conjugacy {
    Conjugate,
    NotConjugate,
}

#[derive(Clone, Copy, ValueEnum)]
enum SurveyFn {
    Area,
    Cl,
    Ann,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Heis,
    G4,
    Bs12,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Manifest(_) | Error::Degenerate(_) => EXIT_USAGE,
        Error::NotFoundWithin(_) => EXIT_UNKNOWN,
        _ => EXIT_NEGATIVE,
    }
}

fn run(cmd: Cmd) -> Result<u8, Error> {
    match cmd {
        Cmd::Eval { group, word } => {
            let g = lookup(&group)?;
            let w = g.presentation().parse_word(&word)?;
            println!("{}", g.describe(&w));
            Ok(0)
        }
        Cmd::Wp { group, word, ledger, expect } => cmd_wp(&group, &word, ledger, expect),
        Cmd::Conj { group, u, v, radius, certificate, expect } => {
            cmd_conj(&group, &u, &v, radius, certificate.as_deref(), expect)
        }
        Cmd::Area { source, word, budget } => cmd_area(&source, &word, &budget),
        Cmd::Ann { group, u, v, budget } => cmd_ann(&group, &u, &v, &budget),
        Cmd::Survey(args) => cmd_survey(args),
        Cmd::Witness { family, n, verify } => cmd_witness(family, n, verify),
        Cmd::Check { group, certificate, ledger } => cmd_check(&group, certificate.as_deref(), ledger.as_deref()),
        Cmd::Groups => {
            for name in Registry::builtin().names() {
                println!("{name}");
            }
            Ok(0)
        }
    }
}

fn cmd_wp(group: &str, word: &str, want_ledger: bool, expect: Option<Triviality>) -> Result<u8, Error> {
    let g = lookup(group)?;
    let p = g.presentation();
    let w = p.parse_word(word)?;
    let trivial = g.is_identity(&w);
    println!("{}", if trivial { "trivial" } else { "nontrivial" });
    if want_ledger && trivial {
        match g.identity_ledger(&w) {
            Some(l) => print!("{}", l.to_text(p)),
            None => eprintln!("no derivation available for {}", g.name()),
        }
    }
    Ok(match expect {
        Some(Triviality::Trivial) if !trivial => EXIT_NEGATIVE,
        Some(Triviality::Nontrivial) if trivial => EXIT_NEGATIVE,
        _ => 0,
    })
}

fn cmd_conj(
    group: &str,
    u: &str,
    v: &str,
    radius: usize,
    cert_path: Option<&Path>,
    expect: Option<Conjugacy>,
) -> Result<u8, Error> {
    let g = lookup(group)?;
    let p = g.presentation();
    let (u, v) = (p.parse_word(u)?, p.parse_word(v)?);
    let found = match g.conjugacy_verdict(&u, &v) {
        Some(false) => Err(Error::NotConjugate),
        _ => g.conjugator(&u, &v, radius),
    };
    match found {
        Ok(cert) => {
            let ok = cert.verify(p, &|x| g.is_identity(x));
            println!("conjugator: {}", p.format_word(&cert.w));
            println!("length: {}", cert.w.len());
            println!("verified: {ok}");
            if let Some(path) = cert_path {
                fs::write(path, cert.to_text(p))?;
            }
            Ok(match expect {
                _ if !ok => EXIT_NEGATIVE,
                Some(Conjugacy::NotConjugate) => EXIT_NEGATIVE,
                _ => 0,
            })
        }
        Err(Error::NotConjugate) => {
            println!("not conjugate");
            Ok(match expect {
                Some(Conjugacy::Conjugate) => EXIT_NEGATIVE,
                _ => 0,
            })
        }
        Err(Error::NotFoundWithin(r)) => {
            println!("unknown: no conjugator within radius {r}");
            Ok(EXIT_UNKNOWN)
        }
        Err(e) => Err(e),
    }
}

fn budget_for(b: &BudgetArgs, len: usize, p: &Presentation) -> AreaBudget {
    let mut budget = AreaBudget::for_len(len, p);
    budget.max_nodes = b.max_nodes;
    if let Some(m) = b.max_len {
        budget.max_len = m;
    }
    budget
}

fn report(outcome: &AreaOutcome, expanded: usize) -> u8 {
    match outcome {
        AreaOutcome::Exact(k) => {
            println!("exact {k}");
            println!("expanded: {expanded}");
            0
        }
        AreaOutcome::Unknown { lower, upper } => {
            match upper {
                Some(u) => println!("unknown: {lower} <= value <= {u}"),
                None => println!("unknown: value >= {lower}"),
            }
            println!("expanded: {expanded}");
            EXIT_UNKNOWN
        }
        AreaOutcome::NotNullHomotopic => {
            println!("not null-homotopic");
            EXIT_NEGATIVE
        }
    }
}

fn cmd_area(source: &Source, word: &str, b: &BudgetArgs) -> Result<u8, Error> {
    if let Some(path) = &source.presentation {
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("file");
        let (p, warnings) = Presentation::parse_text(name, &fs::read_to_string(path)?)?;
        for w in warnings {
            eprintln!("warning: {w}");
        }
        let w = p.parse_word(word)?;
        let r = AreaSearch::new(&p).area(&w, budget_for(b, w.len(), &p));
        return Ok(report(&r.outcome, r.expanded));
    }
    let g = lookup(source.group.as_deref().unwrap_or_default())?;
    let p = g.presentation();
    let w = p.parse_word(word)?;
    let oracle = |x: &Word| g.is_identity(x);
    let bound = |x: &[fillfn_core::Letter]| g.area_lower_bound(x);
    let r = AreaSearch::new(p).with_oracle(&oracle).with_lower_bound(&bound).area(&w, budget_for(b, w.len(), p));
    Ok(report(&r.outcome, r.expanded))
}

fn cmd_ann(group: &str, u: &str, v: &str, b: &BudgetArgs) -> Result<u8, Error> {
    let g = lookup(group)?;
    let p = g.presentation();
    let (u, v) = (p.parse_word(u)?, p.parse_word(v)?);
    let bound = |x: &[fillfn_core::Letter]| g.area_lower_bound(x);
    let pair = |x: &[fillfn_core::Letter], y: &[fillfn_core::Letter]| g.ann_lower_bound(x, y);
    let search = AreaSearch::new(p).with_lower_bound(&bound).with_pair_bound(&pair);
    let r = annular_area(&u, &v, &search, budget_for(b, u.len() + v.len(), p));
    Ok(report(&r.outcome, r.expanded))
}

fn cmd_survey(a: SurveyArgs) -> Result<u8, Error> {
    let mut manifest = match &a.manifest {
        Some(path) => ExperimentManifest::load(path)?,
        None => ExperimentManifest {
            seed: a.seed,
            out_dir: PathBuf::from("tables"),
            format: match a.format {
                Format::Csv => "csv".into(),
                Format::Tsv => "tsv".into(),
            },
            runs: vec![RunSpec {
                group: a.group.clone().unwrap_or_default(),
                function: match a.function {
                    Some(SurveyFn::Area) | None => "area".into(),
                    Some(SurveyFn::Cl) => "cl".into(),
                    Some(SurveyFn::Ann) => "ann".into(),
                },
                n_max: a.nmax.unwrap_or_default(),
                radius: a.radius,
                max_nodes: a.max_nodes,
                max_len: a.max_len,
            }],
        },
    };
    if let Some(out) = &a.out {
        manifest.out_dir = out.clone();
    }
    for spec in &manifest.runs {
        lookup(&spec.group)?;
    }
    let threads = threads_from_env().unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    for path in manifest.execute(None, threads)? {
        println!("{}", path.display());
    }
    Ok(0)
}

fn cmd_witness(family: Family, n: u32, verify: bool) -> Result<u8, Error> {
    match family {
        Family::Heis => {
            let g = lookup("G1")?;
            let p = g.presentation();
            let wit = heis_witness(n)?;
            println!("u: {}\nv: {}\nw: {}", p.format_word(&wit.u), p.format_word(&wit.v), p.format_word(&wit.w));
            if verify {
                let cert = ConjugacyCertificate::new(wit.u, wit.v, wit.w, None, p, &|x| g.is_identity(x)).is_ok();
                let companion = heis_companion_ledger(n)?;
                let replays = verify_ledger(&companion, p);
                println!("conjugation: {}", verdict(cert));
                println!("companion ledger ({} steps): {}", companion.len(), verdict(replays));
                return Ok(if cert && replays { 0 } else { EXIT_NEGATIVE });
            }
        }
        Family::G4 => {
            let g = lookup("G4")?;
            let p = g.presentation();
            let chain = g4_chain(n)?;
            println!("u x: {}", p.format_word(&chain[0].lhs));
            if verify {
                let mut all = true;
                for (i, link) in chain.iter().enumerate() {
                    println!("link {}: {} = {}: {}", i + 1, p.format_word(&link.lhs), p.format_word(&link.rhs), verdict(link.holds));
                    all &= link.holds;
                }
                let k = n * n;
                let commutes = g4_s_commutes(k);
                println!("s commutes with a^-{k} d^{k}: {}", verdict(commutes));
                return Ok(if all && commutes { 0 } else { EXIT_NEGATIVE });
            }
        }
        Family::Bs12 => {
            let g = lookup("BS12")?;
            let p = g.presentation();
            let (w, ledger) = bs12_witness(n)?;
            println!("word: {}\nledger steps: {}", p.format_word(&w), ledger.len());
            if verify {
                let ok = ledger.start == w && verify_ledger(&ledger, p);
                println!("ledger: {}", verdict(ok));
                return Ok(if ok { 0 } else { EXIT_NEGATIVE });
            }
        }
    }
    Ok(0)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn cmd_check(group: &str, cert: Option<&Path>, ledger: Option<&Path>) -> Result<u8, Error> {
    let g: Box<dyn Group> = lookup(group)?;
    let p = g.presentation();
    let ok = if let Some(path) = cert {
        let c = ConjugacyCertificate::from_text(p, &fs::read_to_string(path)?)?;
        c.verify(p, &|x| g.is_identity(x))
    } else if let Some(path) = ledger {
        let l = AreaLedger::from_text(p, &fs::read_to_string(path)?)?;
        println!("steps: {}", l.len());
        verify_ledger(&l, p)
    } else {
        false
    };
    println!("{}", if ok { "valid" } else { "invalid" });
    Ok(if ok { 0 } else { EXIT_NEGATIVE })
}
