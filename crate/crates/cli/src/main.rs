//! `nemcone`: spaces, cones, membership, pushforwards, the counterexample,
//! the regression suite, and PORTA/JSON/LaTeX export.
//!
//! Exit codes: 0 success, 1 a requested check failed, 2 usage error or
//! refused request.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use nemcone::cone::{certify_membership, json, latex, porta};
use nemcone::curves::{counterexample_ftau, eff_cone, nem_cone, CurveError};
use nemcone::fixtures::Fixtures;
use nemcone::linalg::fmt_vec;
use nemcone::mg::{
    basis_names, hyperelliptic_pullback_cone, hyperelliptic_pushforward, m21_cones, m21_pushforward_map,
    mg1_inequality_family, pointed_pushforward, MgError, Target,
};
use nemcone::moduli::{pushforward_between, relations_and_basis, LinearMap, ModuliError, SpaceId};
use nemcone::verify::{self, Section};
use nemcone::{ConeError, RatCone, RatVector, Rational};

const OUT_DIR_ENV: &str = "NEMCONE_OUT_DIR";

#[derive(Parser)]
#[command(name = "nemcone", version, about = "Exact cones of divisors on symmetric quotients of M_{0,n}")]
struct Cli {
    /// Load fixtures from this TOML file instead of the built-in data.
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Boundary count, Picard number, basis and relations of X_{n,m}.
    Space {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Print a cone.
    Cone {
        #[command(flatten)]
        sel: ConeSel,
        #[arg(long, value_enum, default_value_t = Rep::Hrep)]
        rep: Rep,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Membership of a vector in a cone, with a certificate. Exit 1 if outside.
    Member {
        #[command(flatten)]
        sel: ConeSel,
        /// Comma-separated rationals, e.g. `1,-3/2,0`.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Apply a pushforward to a vector.
    Push {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long)]
        n: Option<usize>,
        /// Source number of distinguished points (quotient map).
        #[arg(long)]
        from_m: Option<usize>,
        /// Target number of distinguished points (quotient map).
        #[arg(long)]
        to_m: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
        /// Half the number of symmetric points for the pointed map (X_{2k+3,1}).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = TargetArg::Mg)]
        target: TargetArg,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Transport F_τ to X_{n,3} and certify it lies outside the boundary cone.
    Counterexample {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Run the regression suite. Exit 0 iff every selected criterion passes.
    VerifyPaper {
        /// Comma-separated section names (table, counterexample, nem-x0,
        /// nem-x1, eff-x2, genus, m21, containment, formats).
        #[arg(long, value_delimiter = ',')]
        sections: Vec<String>,
        #[arg(long)]
        verbose: bool,
    },
    /// Write a cone as PORTA, JSON or LaTeX (to `--output`, to
    /// `$NEMCONE_OUT_DIR`, or to stdout).
    Export {
        #[command(flatten)]
        sel: ConeSel,
        /// Re-export a cone read from a .ieq/.poi/.json file instead.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long, value_enum, default_value_t = Rep::Hrep)]
        rep: Rep,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ConeSel {
    #[arg(long, value_enum, default_value_t = Which::Nem)]
    which: Which,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    /// Pointed map parameter for `--which mg1` (X_{2k+3,1}).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = TargetArg::Mg)]
    target: TargetArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Eff,
    Nem,
    NefFixture,
    Hyperelliptic,
    Mg1,
    M21Eff,
    M21Nem,
    M21Nef,
    M21NefFixture,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rep {
    Hrep,
    Rays,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Porta,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Quotient,
    Hyperelliptic,
    Pointed,
    M21,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Mg,
    Mg1,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::Mg => Target::Mg,
            TargetArg::Mg1 => Target::Mg1,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Moduli(#[from] ModuliError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Mg(#[from] MgError),
    #[error("{0}")]
    Other(String),
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        match e {
            CurveError::Refused(s) => CliError::Refused(s),
            CurveError::Moduli(m) => CliError::Moduli(m),
            e => CliError::Other(e.to_string()),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Other(_) | CliError::Cone(_) => 1,
            _ => 2,
        }
    }
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required here")))
}

fn space(n: Option<usize>, m: Option<usize>) -> Result<SpaceId, CliError> {
    Ok(SpaceId::new(need(n, "n")?, need(m, "m")?)?)
}

fn parse_vector(s: &str) -> Result<RatVector, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(|_| CliError::Usage(format!("'{t}' is not a rational number"))))
        .collect()
}

fn load_fixtures(path: Option<&Path>) -> Result<Fixtures, CliError> {
    match path {
        None => Ok(Fixtures::builtin().clone()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            Fixtures::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
        }
    }
}

/// The selected cone, its coordinate names and a file stem.
fn select(sel: &ConeSel, f: &Fixtures) -> Result<(RatCone, Vec<String>, String), CliError> {
    let m21_names = || vec!["Delta_irr".to_string(), "Delta_1".into(), "W".into()];
    let x_names = |s: SpaceId| -> Result<Vec<String>, CliError> { Ok(relations_and_basis(s)?.names().to_vec()) };
    let stem = |w: &str, s: SpaceId| format!("{w}_X{}_{}", s.n(), s.m());
    Ok(match sel.which {
        Which::Eff => {
            let s = space(sel.n, sel.m)?;
            (eff_cone(s)?, x_names(s)?, stem("eff", s))
        }
        Which::Nem => {
            let s = space(sel.n, sel.m)?;
            (nem_cone(s)?, x_names(s)?, stem("nem", s))
        }
        Which::NefFixture => {
            let s = space(sel.n, sel.m)?;
            let fc = f.nef_of(s).ok_or_else(|| CliError::Usage(format!("no nef fixture for {s}")))?;
            let c = fc.cone(&format!("X{}_{}", s.n(), s.m())).map_err(|e| CliError::Other(e.to_string()))?;
            (c, x_names(s)?, stem("nef", s))
        }
        Which::Hyperelliptic => {
            let g = need(sel.g, "g")?;
            (hyperelliptic_pullback_cone(g)?, basis_names(Target::Mg, g), format!("hyperelliptic_g{g}"))
        }
        Which::Mg1 => {
            let (g, k) = (need(sel.g, "g")?, need(sel.k, "k")?);
            let t = Target::from(sel.target);
            let fam = mg1_inequality_family(g, k, t)?;
            let tag = if t == Target::Mg { "mg" } else { "mg1" };
            (fam.pushed_cone()?, basis_names(t, g), format!("{tag}_g{g}_k{k}"))
        }
        Which::M21Eff | Which::M21Nem | Which::M21Nef | Which::M21NefFixture => {
            let c = m21_cones(f)?;
            let (cone, tag) = match sel.which {
                Which::M21Eff => (c.eff, "eff"),
                Which::M21Nem => (c.push_nem, "pushnem"),
                Which::M21Nef => (c.push_nef, "pushnef"),
                _ => (c.nef, "nef"),
            };
            (cone, m21_names(), format!("m21_{tag}"))
        }
    })
}

fn text_cone(c: &RatCone, names: &[String], rep: Rep) -> Result<String, CliError> {
    let mut s = format!("ambient dimension {}; coordinates ({})\n", c.ambient_dim(), names.join(", "));
    match rep {
        Rep::Hrep => {
            let ineqs = c.inequalities()?;
            s.push_str(&format!("{} inequalities (a·x ≥ 0):\n", ineqs.len()));
            for a in ineqs {
                s.push_str(&format!("  {}\n", fmt_vec(&nemcone::linalg::primitive(a).map_err(ConeError::from)?)));
            }
            for e in c.equations()? {
                s.push_str(&format!("  {} = 0\n", fmt_vec(e)));
            }
        }
        Rep::Rays => {
            let rays = c.rays()?;
            s.push_str(&format!("{} rays:\n", rays.len()));
            for r in rays {
                s.push_str(&format!("  {}\n", fmt_vec(r)));
            }
            for l in c.lineality()? {
                s.push_str(&format!("  lineality {}\n", fmt_vec(l)));
            }
        }
    }
    Ok(s)
}

/// Puts the requested representation in canonical form (rays trigger DD).
fn prepared(c: RatCone, rep: Rep) -> Result<RatCone, CliError> {
    Ok(match rep {
        Rep::Rays => c.canonical()?,
        Rep::Hrep if c.hrep().is_some() => c,
        Rep::Hrep => c.canonical()?,
    })
}

fn emit(text: &str, output: Option<&Path>, default_name: &str) -> Result<(), CliError> {
    let path = match output {
        Some(p) => Some(p.to_path_buf()),
        None => std::env::var_os(OUT_DIR_ENV).map(|d| PathBuf::from(d).join(default_name)),
    };
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
            }
            std::fs::write(&p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            println!("wrote {}", p.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn read_cone_file(p: &Path) -> Result<RatCone, CliError> {
    let text = std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
    let is_json = p.extension().is_some_and(|e| e == "json");
    if is_json {
        json::read(&text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
    } else {
        porta::read(&text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let fixtures = load_fixtures(cli.fixtures.as_deref())?;
    match cli.command {
        Command::Space { n, m } => {
            let s = SpaceId::new(n, m)?;
            let spec = relations_and_basis(s)?;
            println!("space {s}");
            println!("boundaries {}", spec.boundary_count());
            println!("picard {}", spec.picard_number());
            println!("basis {}", spec.names().join(" "));
            let labels: Vec<String> = spec.labels().iter().map(|l| l.name()).collect();
            println!("labels {}", labels.join(" "));
            println!("relations {}", spec.relations().len());
            for r in spec.relations() {
                println!("  {}", fmt_vec(r));
            }
            Ok(0)
        }
        Command::Cone { sel, rep, format } => {
            let (c, names, _) = select(&sel, &fixtures)?;
            let c = prepared(c, rep)?;
            match format {
                Format::Text => print!("{}", text_cone(&c, &names, rep)?),
                Format::Json => println!("{}", json::write(&c)?),
            }
            Ok(0)
        }
        Command::Member { sel, vector } => {
            let v = parse_vector(&vector)?;
            let (c, _, _) = select(&sel, &fixtures)?;
            if v.len() != c.ambient_dim() {
                return Err(CliError::Usage(format!("vector has {} entries, cone lives in dimension {}", v.len(), c.ambient_dim())));
            }
            let c = c.canonical()?;
            let cert = certify_membership(c.rays()?, c.lineality()?, &v);
            let ok = cert.verify(c.rays()?, c.lineality()?, &v);
            println!("{} {}", if cert.is_membership() { "member" } else { "outside" }, fmt_vec(&v));
            println!("certificate {} (verified: {ok})", cert.describe());
            Ok(if cert.is_membership() && ok { 0 } else { 1 })
        }
        Command::Push { map, n, from_m, to_m, g, k, target, vector } => {
            let v = parse_vector(&vector)?;
            let lm: LinearMap = match map {
                MapKind::Quotient => {
                    let n = need(n, "n")?;
                    pushforward_between(SpaceId::new(n, need(from_m, "from-m")?)?, SpaceId::new(n, need(to_m, "to-m")?)?)?
                }
                MapKind::Hyperelliptic => hyperelliptic_pushforward(need(g, "g")?)?,
                MapKind::Pointed => pointed_pushforward(need(g, "g")?, need(k, "k")?, target.into())?,
                MapKind::M21 => m21_pushforward_map(),
            };
            let img = lm.apply(&v).map_err(|e| CliError::Usage(e.to_string()))?;
            println!("{}", fmt_vec(&img));
            Ok(0)
        }
        Command::Counterexample { n } => {
            let c = counterexample_ftau(&fixtures, n)?;
            println!("class {}", fmt_vec(&c.class.coords));
            println!("certificate {}", c.certificate.describe());
            let ok = c.verified();
            println!("outside the boundary cone: {ok}");
            Ok(if ok { 0 } else { 1 })
        }
        Command::VerifyPaper { sections, verbose } => {
            let parsed: Vec<Section> =
                sections.iter().map(|s| s.parse::<Section>().map_err(CliError::Usage)).collect::<Result<_, _>>()?;
            let filter = (!parsed.is_empty()).then_some(parsed.as_slice());
            let report = verify::run(&fixtures, filter);
            print!("{}", report.render(verbose));
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Export { sel, input, format, rep, output } => {
            let (c, names, stem) = match &input {
                Some(p) => {
                    let c = read_cone_file(p)?;
                    let names = (1..=c.ambient_dim()).map(|i| format!("x{i}")).collect();
                    let stem = p.file_stem().map_or("cone".into(), |s| s.to_string_lossy().into_owned());
                    (c, names, stem)
                }
                None => select(&sel, &fixtures)?,
            };
            let (text, ext) = match format {
                ExportFormat::Porta => {
                    let c = prepared(c, rep)?;
                    let which = if rep == Rep::Rays { porta::Which::Vrep } else { porta::Which::Hrep };
                    let text = porta::write(&c, which).map_err(|e| CliError::Other(e.to_string()))?;
                    (text, if rep == Rep::Rays { "poi" } else { "ieq" })
                }
                ExportFormat::Json => (json::write(&c.canonical()?)?, "json"),
                ExportFormat::Latex => (latex::write(&c.canonical()?, &names)?, "tex"),
            };
            emit(&text, output.as_deref(), &format!("{stem}.{ext}"))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
