//! Command-line entry point: build or parse an algebra, run the requested
//! analysis, print a JSON report to stdout and a human summary to stderr.
//!
//! Exit codes: 0 success, 2 parse error, 3 off-variety input,
//! 4 internal inconsistency, 1 anything else.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use algvar::algebra::{self, MulTable};
use algvar::cohomology::TheoryKind;
use algvar::counting;
use algvar::equivariance;
use algvar::identities;
use algvar::moduli::Theory;
use algvar::report::{self, EquivarianceSection, InputDesc, Report};
use algvar::sample;
use algvar::Error;

#[derive(Parser)]
#[command(name = "algvar", version, about = "Exact analysis of algebra structure constants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldMode {
    Rational,
    Prime,
}

#[derive(Args)]
struct InputArgs {
    /// Algebra file (JSON). Mutually exclusive with --builder.
    file: Option<PathBuf>,
    /// Canonical builder: matrix_algebra, split_etale, dual_numbers, sl2,
    /// abelian, leibniz2, or m<r> shorthand.
    #[arg(long, conflicts_with = "file")]
    builder: Option<String>,
    /// Argument for parametric builders (matrix_algebra, split_etale, abelian).
    #[arg(long)]
    arg: Option<usize>,
    /// Scalar mode. `prime` adds advisory mod-p membership flags; all
    /// verdict-level values stay rational either way.
    #[arg(long, value_enum, default_value = "rational")]
    field: FieldMode,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    Alg,
    Comm,
    Leib,
    Lie,
    Hochschild,
    Harrison,
    Leibniz,
    Ce,
}

impl TheoryArg {
    fn cohomology(self) -> TheoryKind {
        match self {
            TheoryArg::Alg | TheoryArg::Hochschild => TheoryKind::Hochschild,
            TheoryArg::Comm | TheoryArg::Harrison => TheoryKind::Harrison,
            TheoryArg::Leib | TheoryArg::Leibniz => TheoryKind::Leibniz,
            TheoryArg::Lie | TheoryArg::Ce => TheoryKind::ChevalleyEilenberg,
        }
    }

    fn variety(self) -> Theory {
        match self {
            TheoryArg::Alg | TheoryArg::Hochschild => Theory::Alg,
            TheoryArg::Comm | TheoryArg::Harrison => Theory::Comm,
            TheoryArg::Leib | TheoryArg::Leibniz => Theory::Leib,
            TheoryArg::Lie | TheoryArg::Ce => Theory::Lie,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Membership in the four varieties plus symmetry/skew flags.
    Check(InputArgs),
    /// Cohomology summary for one theory; the input must lie on the variety.
    Cohomology {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        theory: TheoryArg,
    },
    /// Trace form, Killing form, characters, kernel and annihilator.
    Forms(InputArgs),
    /// Tangent-level rigidity verdict and stratum invariant for one theory.
    Rigidity {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        theory: TheoryArg,
    },
    /// Orbit counting: `count assoc <n>` or `count lie <n>`.
    Count {
        #[arg(value_parser = ["assoc", "lie"])]
        which: String,
        n: usize,
        #[arg(long)]
        witnesses: bool,
    },
    /// Randomized equivariance battery at dims {2,3} (or a single --dim).
    Equivariance {
        #[arg(long, default_value_t = sample::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

fn load_input(args: &InputArgs) -> Result<(InputDesc, MulTable), Error> {
    let field = match args.field {
        FieldMode::Rational => "rational",
        FieldMode::Prime => "prime",
    };
    if let Some(name) = &args.builder {
        let (full_name, table) = algebra::builder_by_name(name, args.arg)?;
        let desc = InputDesc {
            name: full_name,
            dim: table.dim(),
            source: format!("builder:{name}"),
            field: field.into(),
        };
        return Ok((desc, table));
    }
    let Some(path) = &args.file else {
        return Err(Error::Parse("no input: pass a file or --builder".into()));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let (name, table) = algebra::from_json(&text)?;
    let desc = InputDesc {
        name,
        dim: table.dim(),
        source: format!("file:{}", path.display()),
        field: field.into(),
    };
    Ok((desc, table))
}

fn attach_mod_p(report: &mut Report, args: &InputArgs, x: &MulTable) {
    if args.field == FieldMode::Prime {
        report.membership_mod_p = identities::membership_mod_p(x);
    }
}

fn run() -> Result<Report, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check(input) => {
            let (desc, x) = load_input(&input)?;
            let mut report = Report::new(desc);
            report.membership = Some(report::membership_section(&x));
            attach_mod_p(&mut report, &input, &x);
            Ok(report)
        }
        Command::Cohomology { input, theory } => {
            let (desc, x) = load_input(&input)?;
            let mut report = Report::new(desc);
            report.cohomology = Some(report::cohomology_section(&x, theory.cohomology())?);
            attach_mod_p(&mut report, &input, &x);
            Ok(report)
        }
        Command::Forms(input) => {
            let (desc, x) = load_input(&input)?;
            let mut report = Report::new(desc);
            report.membership = Some(report::membership_section(&x));
            report.forms = Some(report::forms_section(&x)?);
            attach_mod_p(&mut report, &input, &x);
            Ok(report)
        }
        Command::Rigidity { input, theory } => {
            let (desc, x) = load_input(&input)?;
            let mut report = Report::new(desc);
            report.rigidity = Some(report::rigidity_section(&x, theory.variety())?);
            attach_mod_p(&mut report, &input, &x);
            Ok(report)
        }
        Command::Count { which, n, witnesses } => {
            if n == 0 {
                return Err(Error::Parse("n must be at least 1".into()));
            }
            let result = match which.as_str() {
                "assoc" => counting::n_assoc(n, witnesses),
                _ => counting::n_lie(n, witnesses),
            };
            let desc = InputDesc {
                name: format!("count_{which}({n})"),
                dim: n,
                source: "count".into(),
                field: "rational".into(),
            };
            let mut report = Report::new(desc);
            report.count = Some(result);
            Ok(report)
        }
        Command::Equivariance { seed, dim, trials } => {
            let dims = match dim {
                Some(d) => vec![d],
                None => vec![2, 3],
            };
            let laws = equivariance::run_battery(seed, &dims, trials);
            let all_passed = laws.iter().all(|l| l.passed);
            let desc = InputDesc {
                name: "equivariance_battery".into(),
                dim: *dims.iter().max().unwrap(),
                source: "battery".into(),
                field: "rational".into(),
            };
            let mut report = Report::new(desc);
            report.seed = Some(seed);
            report.equivariance = Some(EquivarianceSection {
                dims,
                trials,
                laws,
                all_passed,
            });
            if !all_passed {
                eprintln!("equivariance: some laws FAILED");
            }
            Ok(report)
        }
    }
}

fn summarize_to_stderr(report: &Report) {
    eprintln!("algvar {}: {}", report.tool.version, report.input.name);
    if let Some(m) = &report.membership {
        eprintln!(
            "  membership: associative={} commutative={} leibniz={} lie={}",
            m.associative, m.commutative, m.leibniz, m.lie
        );
    }
    if let Some(c) = &report.cohomology {
        eprintln!(
            "  {}: z2={} b2={} h2={} (z1={} b1={} h1={})",
            c.theory, c.summary.z2, c.summary.b2, c.summary.h2,
            c.summary.z1, c.summary.b1, c.summary.h1
        );
    }
    if let Some(f) = &report.forms {
        eprintln!(
            "  trace discriminant={} killing discriminant={}",
            f.trace.discriminant, f.killing.discriminant
        );
    }
    if let Some(r) = &report.rigidity {
        eprintln!(
            "  {}: variety={} orbit={} stack={} orbit_open={} rigid={}",
            r.verdict.theory.name(),
            r.verdict.variety_tangent_dim,
            r.verdict.orbit_tangent_dim,
            r.verdict.stack_tangent_dim,
            r.verdict.orbit_open,
            r.verdict.rigid_in_moduli
        );
    }
    if let Some(c) = &report.count {
        eprintln!("  count({}) = {}", c.n, c.value);
    }
    if let Some(e) = &report.equivariance {
        for l in &e.laws {
            eprintln!(
                "  {} dim={} {}",
                l.law,
                l.dim,
                if l.passed { "pass" } else { "FAIL" }
            );
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(report) => {
            println!("{}", report.to_json());
            summarize_to_stderr(&report);
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Parse(_) => 2,
                Error::OffVariety { .. } => 3,
                Error::InternalInconsistency(_) => 4,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
