use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use alexdef::alexander::{alexander_sequence, is_symmetric, torsion_order_check, TwistSetup};
use alexdef::deformation::{cocycle_generator, deformability_verdict, dim_h1, point_minpoly, CharacterAlpha};
use alexdef::field::{parse_polynomial, ExtConjugation, FieldElem, RootChoice};
use alexdef::lattice::{canonical_splitting, h1_structure};
use alexdef::laurent::rational_roots;
use alexdef::matrix::Ring;
use alexdef::numeric::cross_check;
use alexdef::presentation::{parse_presentation, Presentation};
use alexdef::report::{AnalysisReport, Count};
use alexdef::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "alexdef",
    version,
    about = "Twisted Alexander polynomials and deformations of reducible representations"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// First homology and the canonical homomorphism onto Z.
    H1(Input),
    /// Twisted Alexander polynomials.
    Alexander {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        sigma: SigmaArgs,
    },
    /// Rational zeros of Delta_0 with multiplicities.
    Zeros {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        sigma: SigmaArgs,
    },
    /// A cocycle spanning H^1 when it is one-dimensional.
    Cocycle {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        sigma: SigmaArgs,
        #[command(flatten)]
        root: RootArgs,
    },
    /// Full deformability verdict.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        sigma: SigmaArgs,
        #[command(flatten)]
        root: RootArgs,
        /// Recompute every rank and solvability decision in floating point.
        #[arg(long)]
        float_check: bool,
    },
}

#[derive(Args)]
struct Input {
    /// Presentation file.
    #[arg(short, long)]
    presentation: PathBuf,
}

#[derive(Args)]
struct SigmaArgs {
    /// Character on the torsion as zeta_m exponents per generator,
    /// e.g. "a=1,b=-1" (unlisted generators get 0), or "trivial".
    #[arg(long, conflicts_with = "sigma_torsion")]
    sigma: Option<String>,
    /// Exponents on the canonical torsion generators, e.g. "0,1".
    #[arg(long)]
    sigma_torsion: Option<String>,
}

#[derive(Args)]
struct RootArgs {
    /// Minimal polynomial of z in t, coefficients in Q(zeta_m) written with z.
    #[arg(long, required_unless_present = "scan_rational", conflicts_with = "scan_rational")]
    root_minpoly: Option<String>,
    /// Use every rational zero of Delta_0 in turn.
    #[arg(long)]
    scan_rational: bool,
    /// Pick the root of the minimal polynomial closest to "re" or "re,im"
    /// (default: largest modulus).
    #[arg(long, requires = "root_minpoly")]
    root_near: Option<String>,
}

struct Failure {
    code: u8,
    message: String,
}

/// 3 for a violated consistency check, 2 for bad input or failed preconditions.
fn exit_code(e: &Error) -> u8 {
    if matches!(e, Error::InternalInconsistency(_)) {
        3
    } else {
        2
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn load(input: &Input) -> Result<(String, Presentation), Failure> {
    let text = std::fs::read_to_string(&input.presentation)
        .map_err(|e| usage(format!("cannot read {}: {e}", input.presentation.display())))?;
    Ok((input.presentation.display().to_string(), parse_presentation(&text)?))
}

fn twist(p: &Presentation, args: &SigmaArgs) -> Result<TwistSetup, Failure> {
    let splitting = canonical_splitting(&h1_structure(p))?;
    if let Some(list) = &args.sigma_torsion {
        let exps = list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| usage(format!("bad torsion exponent `{s}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(TwistSetup::new(splitting, exps)?);
    }
    let mut exps = vec![0; p.arity()];
    match args.sigma.as_deref().map(str::trim) {
        None | Some("trivial") => {}
        Some(spec) => {
            for part in spec.split(',') {
                let (name, e) = part
                    .split_once('=')
                    .ok_or_else(|| usage(format!("expected generator=exponent, got `{part}`")))?;
                let g = p
                    .generator_index(name.trim())
                    .ok_or_else(|| usage(format!("unknown generator `{}`", name.trim())))?;
                exps[g] = e
                    .trim()
                    .parse()
                    .map_err(|_| usage(format!("bad exponent `{}`", e.trim())))?;
            }
        }
    }
    Ok(TwistSetup::from_generator_prescription(p, splitting, &exps)?)
}

fn parse_near(s: &str) -> Result<Complex64, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |x: &str| {
        x.parse::<f64>()
            .map_err(|_| usage(format!("bad number `{x}` in --root-near")))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(usage("--root-near takes `re` or `re,im`")),
    }
}

/// The evaluation points requested on the command line.
fn roots(p: &Presentation, tw: &TwistSetup, args: &RootArgs) -> Result<Vec<FieldElem>, Failure> {
    let k = tw.field();
    if let Some(text) = &args.root_minpoly {
        let mut coeffs = parse_polynomial(text, k)?;
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        return match coeffs.len() {
            0 | 1 => Err(Error::InvalidMinpoly(format!("`{text}` has degree < 1")).into()),
            2 => Ok(vec![coeffs[0].neg().try_div(&coeffs[1])?]),
            _ => {
                let choice = match &args.root_near {
                    Some(s) => RootChoice::Near(parse_near(s)?),
                    None => RootChoice::LargestModulus,
                };
                Ok(vec![k
                    .extension(&coeffs, ExtConjugation::Unmarked, choice)?
                    .generator()?])
            }
        };
    }
    let seq = alexander_sequence(p, tw)?;
    let d0 = &seq.deltas()[0];
    if d0.is_zero() {
        return Err(usage(
            "Delta_0 vanishes identically; give --root-minpoly instead of --scan-rational",
        ));
    }
    Ok(rational_roots(d0)?
        .into_iter()
        .map(|(r, _)| k.from_rational(r))
        .collect())
}

fn list(v: &[String]) -> String {
    format!("[{}]", v.join(", "))
}

fn h1(input: &Input, format: Format) -> Result<String, Failure> {
    let (name, p) = load(input)?;
    let h = h1_structure(&p);
    let torsion: Vec<String> = h.torsion_invariants().iter().map(ToString::to_string).collect();
    let phi = canonical_splitting(&h).ok().map(|s| s.phi().to_vec());
    Ok(match format {
        Format::Json => json_line(json!({
            "presentation": name,
            "torsion": h.torsion_invariants().iter().map(Count::from).collect::<Vec<_>>(),
            "betti": h.betti(),
            "phi": phi,
        })),
        Format::Text => {
            let mut out = format!(
                "presentation: {name}\ntorsion: {}\nbetti: {}\n",
                list(&torsion),
                h.betti()
            );
            if let Some(phi) = phi {
                let phi: Vec<String> = phi.iter().map(ToString::to_string).collect();
                writeln!(out, "phi: {}", list(&phi)).unwrap();
            }
            out
        }
    })
}

fn alexander(input: &Input, sigma: &SigmaArgs, format: Format) -> Result<String, Failure> {
    let (name, p) = load(input)?;
    let tw = twist(&p, sigma)?;
    let seq = alexander_sequence(&p, &tw)?;
    let deltas: Vec<String> = seq.deltas().iter().map(ToString::to_string).collect();
    let d0 = &seq.deltas()[0];
    let symmetric = if d0.is_zero() { None } else { Some(is_symmetric(d0)?.0) };
    let torsion = if tw.is_trivial() {
        Some(torsion_order_check(&p, &tw, d0)?).filter(|c| !c.skipped)
    } else {
        None
    };
    Ok(match format {
        Format::Json => json_line(json!({
            "presentation": name,
            "sigma": {"order": tw.order(), "torsion_exponents": tw.sigma()},
            "delta": deltas,
            "positive_rank": seq.positive_rank(),
            "symmetric": symmetric,
            "torsion_check": torsion.as_ref().map(|c| json!({
                "delta_at_one": c.delta_at_one.as_ref().map(ToString::to_string),
                "torsion_order": c.torsion_order.to_string(),
                "agrees": c.agrees,
            })),
        })),
        Format::Text => {
            let mut out = String::new();
            for (k, d) in deltas.iter().enumerate() {
                writeln!(out, "delta_{k}: {d}").unwrap();
            }
            writeln!(out, "positive_rank: {}", seq.positive_rank()).unwrap();
            if let Some(s) = symmetric {
                writeln!(out, "symmetric: {s}").unwrap();
            }
            if let Some(c) = torsion {
                let v = c.delta_at_one.map_or_else(|| "n/a".into(), |q| q.to_string());
                writeln!(
                    out,
                    "|delta_0(1)|: {v}, |tors H1|: {}, agree: {}",
                    c.torsion_order, c.agrees
                )
                .unwrap();
            }
            out
        }
    })
}

fn zeros(input: &Input, sigma: &SigmaArgs, format: Format) -> Result<String, Failure> {
    let (_, p) = load(input)?;
    let tw = twist(&p, sigma)?;
    let seq = alexander_sequence(&p, &tw)?;
    let d0 = &seq.deltas()[0];
    if d0.is_zero() {
        return Err(usage("Delta_0 vanishes identically; every point is a zero"));
    }
    let found = rational_roots(d0)?;
    Ok(match format {
        Format::Json => json_line(json!({
            "delta0": d0.to_string(),
            "zeros": found.iter().map(|(r, m)| json!({"root": r.to_string(), "multiplicity": m})).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = format!("delta_0: {d0}\n");
            if found.is_empty() {
                out.push_str("no rational zeros\n");
            }
            for (r, m) in &found {
                writeln!(out, "zero {r} multiplicity {m}").unwrap();
            }
            out
        }
    })
}

fn cocycle(input: &Input, sigma: &SigmaArgs, root: &RootArgs, format: Format) -> Result<String, Failure> {
    let (_, p) = load(input)?;
    let tw = twist(&p, sigma)?;
    let mut outputs = Vec::new();
    for z in roots(&p, &tw, root)? {
        let alpha = CharacterAlpha::new(&p, tw.clone(), z.clone())?;
        let dim = dim_h1(&p, &alpha)?;
        let d = cocycle_generator(&p, &alpha)?;
        let minpoly = point_minpoly(&z)?.map(|m| m.to_string());
        let values: Vec<String> = d.values().iter().map(ToString::to_string).collect();
        outputs.push((minpoly, dim, values));
    }
    Ok(match format {
        Format::Json => {
            let items: Vec<Value> = outputs
                .iter()
                .map(|(m, dim, v)| json!({"z_minpoly": m, "dim_h1": dim, "generators": p.generators(), "d_plus": v}))
                .collect();
            json_line(if root.scan_rational {
                json!(items)
            } else {
                items[0].clone()
            })
        }
        Format::Text => outputs
            .iter()
            .map(|(m, dim, v)| {
                let mut out = format!("z_minpoly: {}\ndim_h1: {dim}\n", m.as_deref().unwrap_or("n/a"));
                for (g, x) in p.generators().iter().zip(v) {
                    writeln!(out, "d_plus({g}): {x}").unwrap();
                }
                out
            })
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn analyze(input: &Input, sigma: &SigmaArgs, root: &RootArgs, float: bool, format: Format) -> Result<String, Failure> {
    let (name, p) = load(input)?;
    let tw = twist(&p, sigma)?;
    let mut reports = Vec::new();
    for z in roots(&p, &tw, root)? {
        let r = deformability_verdict(&p, &tw, &z)?;
        let checks = float.then(|| cross_check(&r.decisions));
        reports.push(AnalysisReport::new(&name, &tw, &z, &r, checks)?);
    }
    Ok(match format {
        Format::Json if root.scan_rational => {
            let mut s = serde_json::to_string_pretty(&reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Json => reports[0].to_json(),
        Format::Text => reports
            .iter()
            .map(AnalysisReport::to_text)
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn json_line(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json serializes");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let f = cli.format;
    let result = match &cli.command {
        Command::H1(input) => h1(input, f),
        Command::Alexander { input, sigma } => alexander(input, sigma, f),
        Command::Zeros { input, sigma } => zeros(input, sigma, f),
        Command::Cocycle { input, sigma, root } => cocycle(input, sigma, root, f),
        Command::Analyze {
            input,
            sigma,
            root,
            float_check,
        } => analyze(input, sigma, root, *float_check, f),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
