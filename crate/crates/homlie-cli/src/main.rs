//! Command-line front end: load algebras, representations and cochains from
//! JSON files, dispatch the library computations, and print text or JSON.
//!
//! Exit codes: 0 when the queried property holds (or the command is a pure
//! data query), 1 when a property fails mathematically, 2 on input errors and
//! unmet preconditions.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use homlie::algebra::{HomLieAlgebra, LinearMap, VerificationReport};
use homlie::cohomology::{self, Cochain};
use homlie::deformation;
use homlie::derivation::{self, GradedDerivationSpace};
use homlie::io::{self, format_rational, AlgebraFile, CochainFile, OperatorFile};
use homlie::linalg::{Matrix, Rational};
use homlie::representation::{self, Representation};

#[derive(Parser)]
#[command(
    name = "homlie",
    version,
    about = "Exact computations with finite-dimensional hom-Lie algebras"
)]
struct Cli {
    /// Output mode
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check hom-Jacobi, multiplicativity and regularity of an algebra
    Verify { algebra: PathBuf },
    /// Basis of the grade-k derivation space Der_{alpha^k}
    Derivations {
        algebra: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        grade: i64,
    },
    /// Basis of the inner derivations Inn_{alpha^k}
    InnerDerivations {
        algebra: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        grade: i64,
    },
    /// Cohomology dimensions and representatives for a representation
    Cohomology {
        algebra: PathBuf,
        /// "trivial" or "adjoint:S" for an integer S
        #[arg(long)]
        rep: String,
        #[arg(long)]
        degree: usize,
    },
    /// Semidirect product with a representation loaded from a file
    Semidirect {
        algebra: PathBuf,
        #[arg(long)]
        rep: PathBuf,
    },
    /// Central extension by a scalar 2-cochain
    CentralExtend {
        algebra: PathBuf,
        #[arg(long)]
        theta: PathBuf,
    },
    /// Isomorphism of two central extensions differing by a coboundary
    IsoCheck {
        algebra: PathBuf,
        #[arg(long)]
        theta1: PathBuf,
        #[arg(long)]
        theta2: PathBuf,
        #[arg(long)]
        f: PathBuf,
    },
    /// One-dimensional extension by an operator acting as a derivation
    DerivationExtend {
        algebra: PathBuf,
        #[arg(long)]
        op: PathBuf,
    },
    /// Direct sum of two algebras
    DirectSum { left: PathBuf, right: PathBuf },
    /// Test a linear map both directly and through its graph
    MorphismCheck {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Hom-Nijenhuis test plus the deformation and triviality it generates
    Nijenhuis {
        algebra: PathBuf,
        #[arg(long)]
        op: PathBuf,
    },
    /// Deformation conditions for a 2-cochain, sampled at parameter values
    Deform {
        algebra: PathBuf,
        #[arg(long)]
        omega: PathBuf,
        /// Comma-separated rational parameters
        #[arg(long, default_value = "1,-1,2", allow_hyphen_values = true)]
        t: String,
    },
    /// Check that the coboundary operator squares to zero
    DSquared {
        algebra: PathBuf,
        /// "trivial" or "adjoint:S" for an integer S
        #[arg(long)]
        rep: String,
        #[arg(long)]
        max_degree: usize,
    },
}

/// A mathematically meaningful answer, as opposed to an input error.
enum Outcome {
    Holds,
    Fails,
}

/// Writes to stdout, exiting quietly when the consumer closed the pipe.
fn write_stdout(args: std::fmt::Arguments<'_>) {
    use std::io::Write;
    if let Err(e) = std::io::stdout().write_fmt(args) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed to write to stdout: {e}");
    }
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        write_stdout(format_args!($($arg)*));
        write_stdout(format_args!("\n"));
    }};
}

macro_rules! outp {
    ($($arg:tt)*) => { write_stdout(format_args!($($arg)*)) };
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(&cli) {
        Ok(Outcome::Holds) => 0,
        Ok(Outcome::Fails) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    })
}

fn load_algebra(path: &Path) -> Result<HomLieAlgebra> {
    io::read_algebra(path).with_context(|| format!("reading algebra from {}", path.display()))
}

fn load_matrix(path: &Path) -> Result<Matrix> {
    io::read_matrix(path).with_context(|| format!("reading matrix from {}", path.display()))
}

fn load_cochain(path: &Path, algebra_dim: usize) -> Result<Cochain> {
    io::read_cochain(path, algebra_dim)
        .with_context(|| format!("reading cochain from {}", path.display()))
}

fn parse_rep_spec(g: &HomLieAlgebra, spec: &str) -> Result<Representation> {
    if spec == "trivial" {
        return Ok(Representation::trivial(g)?);
    }
    if let Some(s) = spec.strip_prefix("adjoint:") {
        let s: i64 = s.parse().with_context(|| format!("invalid adjoint power '{s}'"))?;
        return Ok(Representation::adjoint(g, s)?);
    }
    Err(anyhow!("unknown representation '{spec}': expected 'trivial' or 'adjoint:S'"))
}

fn parse_t_list(list: &str) -> Result<Vec<Rational>> {
    list.split(',')
        .map(|s| io::parse_rational(s, || format!("parameter '{s}'")).map_err(anyhow::Error::from))
        .collect()
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "property": r.property,
        "holds": r.holds,
        "counterexample": r.counterexample.as_ref().map(|c| json!({
            "indices": c.indices,
            "defect": c.defect.iter().map(format_rational).collect::<Vec<_>>(),
        })),
    })
}

fn algebra_json(g: &HomLieAlgebra) -> Value {
    serde_json::to_value(AlgebraFile::from_algebra(g)).expect("serialization is total")
}

fn operator_json(m: &Matrix) -> Value {
    serde_json::to_value(OperatorFile::from_matrix(m)).expect("serialization is total")
}

fn cochain_json(c: &Cochain) -> Value {
    serde_json::to_value(CochainFile::from_cochain(c)).expect("serialization is total")
}

fn print_json(v: &Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("serialization is total"));
}

fn label(g: &HomLieAlgebra, i: usize) -> String {
    match g.basis_labels() {
        Some(labels) => labels[i].clone(),
        None => format!("e{}", i + 1),
    }
}

fn combo_text(g: &HomLieAlgebra, v: &[Rational]) -> String {
    let (zero, one) = (homlie::linalg::rat_int(0), homlie::linalg::rat_int(1));
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if *c == zero {
            continue;
        }
        let name = label(g, i);
        if *c == one {
            parts.push(name);
        } else if *c == -&one {
            parts.push(format!("-{name}"));
        } else {
            parts.push(format!("{} {name}", format_rational(c)));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn algebra_text(g: &HomLieAlgebra) -> String {
    let mut out = format!("dim {}\n", g.dim());
    if g.structure().is_empty() {
        out.push_str("all brackets zero\n");
    }
    for (&(i, j), coeffs) in g.structure() {
        out.push_str(&format!("[{}, {}] = {}\n", label(g, i), label(g, j), combo_text(g, coeffs)));
    }
    out.push_str(&format!("alpha:\n{}", g.alpha()));
    out
}

fn verdict(reports: &[&VerificationReport]) -> Outcome {
    if reports.iter().all(|r| r.holds) {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

/// Shared printer for the verbs that build an algebra and verify it.
fn emit_constructed(
    output: Output,
    constructed: &HomLieAlgebra,
    extra: &[(&str, Value)],
) -> Outcome {
    let hj = constructed.verify_hom_jacobi();
    let mult = constructed.is_multiplicative();
    match output {
        Output::Text => {
            outln!("{hj}; {mult}");
            outp!("{}", algebra_text(constructed));
        }
        Output::Json => {
            let mut obj = json!({
                "algebra": algebra_json(constructed),
                "hom_jacobi": report_json(&hj),
                "multiplicative": report_json(&mult),
            });
            for (k, v) in extra {
                obj[*k] = v.clone();
            }
            print_json(&obj);
        }
    }
    verdict(&[&hj, &mult])
}

fn emit_derivation_space(output: Output, name: &str, space: &GradedDerivationSpace) -> Outcome {
    match output {
        Output::Text => {
            outln!("{name} grade {}: dim {}", space.k, space.dim());
            for (idx, op) in space.operators().iter().enumerate() {
                outln!("basis[{idx}]:");
                outp!("{op}");
            }
        }
        Output::Json => print_json(&json!({
            "grade": space.k,
            "dim": space.dim(),
            "basis": space.operators().iter().map(operator_json).collect::<Vec<_>>(),
        })),
    }
    Outcome::Holds
}

fn run(cli: &Cli) -> Result<Outcome> {
    let output = cli.output;
    match &cli.command {
        Command::Verify { algebra } => {
            let g = load_algebra(algebra)?;
            let hj = g.verify_hom_jacobi();
            let mult = g.is_multiplicative();
            let regular = g.is_regular();
            match output {
                Output::Text => outln!("{hj}; {mult}; regular: {regular}"),
                Output::Json => print_json(&json!({
                    "hom_jacobi": report_json(&hj),
                    "multiplicative": report_json(&mult),
                    "regular": regular,
                })),
            }
            Ok(verdict(&[&hj, &mult]))
        }
        Command::Derivations { algebra, grade } => {
            let g = load_algebra(algebra)?;
            let space = derivation::derivation_space(&g, *grade)?;
            Ok(emit_derivation_space(output, "derivations", &space))
        }
        Command::InnerDerivations { algebra, grade } => {
            let g = load_algebra(algebra)?;
            let space = derivation::inner_derivation_space(&g, *grade)?;
            Ok(emit_derivation_space(output, "inner derivations", &space))
        }
        Command::Cohomology { algebra, rep, degree } => {
            let g = load_algebra(algebra)?;
            let rep = parse_rep_spec(&g, rep)?;
            let result = cohomology::cohomology(&rep, *degree)?;
            match output {
                Output::Text => {
                    outln!("dims Z={} B={} H={}", result.dim_z, result.dim_b, result.dim_h)
                }
                Output::Json => print_json(&json!({
                    "degree": result.degree,
                    "dim_Z": result.dim_z,
                    "dim_B": result.dim_b,
                    "dim_H": result.dim_h,
                    "representatives":
                        result.representatives.iter().map(cochain_json).collect::<Vec<_>>(),
                })),
            }
            Ok(Outcome::Holds)
        }
        Command::Semidirect { algebra, rep } => {
            let g = load_algebra(algebra)?;
            let (rho, a) = io::read_representation(rep)
                .with_context(|| format!("reading representation from {}", rep.display()))?;
            let rep = Representation::new(&g, rho, a)?;
            Ok(emit_constructed(output, &rep.semidirect_product(), &[]))
        }
        Command::CentralExtend { algebra, theta } => {
            let g = load_algebra(algebra)?;
            let theta = load_cochain(theta, g.dim())?;
            let ext = representation::central_extension(&g, &theta)?;
            Ok(emit_constructed(output, &ext, &[]))
        }
        Command::IsoCheck { algebra, theta1, theta2, f } => {
            let g = load_algebra(algebra)?;
            let theta1 = load_cochain(theta1, g.dim())?;
            let theta2 = load_cochain(theta2, g.dim())?;
            let f = load_cochain(f, g.dim())?;
            match representation::central_extension_isomorphism(&g, &theta1, &theta2, &f) {
                Ok((map, report)) => {
                    match output {
                        Output::Text => {
                            outln!("{report}");
                            outp!("{}", map.matrix);
                        }
                        Output::Json => print_json(&json!({
                            "map": operator_json(&map.matrix),
                            "report": report_json(&report),
                        })),
                    }
                    Ok(verdict(&[&report]))
                }
                Err(homlie::Error::NotCoboundary) => {
                    match output {
                        Output::Text => {
                            outln!("not cohomologous: theta1 - theta2 is not the coboundary of f")
                        }
                        Output::Json => print_json(&json!({
                            "map": Value::Null,
                            "report": {"property": "central-extension isomorphism",
                                       "holds": false, "counterexample": Value::Null},
                        })),
                    }
                    Ok(Outcome::Fails)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::DerivationExtend { algebra, op } => {
            let g = load_algebra(algebra)?;
            let d = load_matrix(op)?;
            let ext = derivation::derivation_extension(&g, &d)?;
            let is_der = derivation::is_derivation(&g, 1, &d)?;
            Ok(emit_constructed(output, &ext, &[("alpha_derivation", report_json(&is_der))]))
        }
        Command::DirectSum { left, right } => {
            let g = load_algebra(left)?;
            let k = load_algebra(right)?;
            Ok(emit_constructed(output, &g.direct_sum(&k), &[]))
        }
        Command::MorphismCheck { source, target, map } => {
            let g = load_algebra(source)?;
            let k = load_algebra(target)?;
            let phi = LinearMap::new(load_matrix(map)?);
            let direct = g.is_morphism(&k, &phi)?;
            let graph = g.graph_is_subalgebra(&k, &phi)?;
            match output {
                Output::Text => outln!(
                    "morphism: {}; graph subalgebra: {}",
                    if direct { "yes" } else { "no" },
                    if graph { "yes" } else { "no" }
                ),
                Output::Json => {
                    print_json(&json!({ "morphism": direct, "graph_subalgebra": graph }))
                }
            }
            Ok(if direct && graph { Outcome::Holds } else { Outcome::Fails })
        }
        Command::Nijenhuis { algebra, op } => {
            let g = load_algebra(algebra)?;
            let n = load_matrix(op)?;
            let nij = deformation::is_hom_nijenhuis(&g, &n)?;
            if !nij.holds {
                match output {
                    Output::Text => outln!("hom-Nijenhuis: no ({nij})"),
                    Output::Json => print_json(&json!({
                        "hom_nijenhuis": report_json(&nij),
                        "generates_deformation": Value::Null,
                        "trivializes": Value::Null,
                    })),
                }
                return Ok(Outcome::Fails);
            }
            let datum = deformation::nijenhuis_bracket(&g, &n)?;
            let trivial = deformation::check_trivializes(&g, &n)?;
            let valid = datum.generates_deformation();
            match output {
                Output::Text => outln!(
                    "hom-Nijenhuis: yes; deformation: {}; trivializes: {}",
                    if valid { "valid" } else { "invalid" },
                    if trivial.holds { "yes" } else { "no" }
                ),
                Output::Json => print_json(&json!({
                    "hom_nijenhuis": report_json(&nij),
                    "generates_deformation": valid,
                    "trivializes": report_json(&trivial),
                    "omega": cochain_json(&datum.omega),
                })),
            }
            Ok(if valid && trivial.holds { Outcome::Holds } else { Outcome::Fails })
        }
        Command::Deform { algebra, omega, t } => {
            let g = load_algebra(algebra)?;
            let omega = load_cochain(omega, g.dim())?;
            let ts = parse_t_list(t)?;
            let report = deformation::generates_deformation(&g, &omega)?;
            let mut all_hold = report.holds;
            let mut samples = Vec::new();
            for t in &ts {
                let deformed = deformation::deformed_bracket_at(&g, &omega, t)?;
                let hj = deformed.verify_hom_jacobi();
                let mult = deformed.is_multiplicative();
                all_hold &= hj.holds && mult.holds;
                samples.push((t.clone(), deformed, hj, mult));
            }
            match output {
                Output::Text => {
                    outln!("{report}");
                    for (t, _, hj, mult) in &samples {
                        outln!("t = {}: {hj}; {mult}", format_rational(t));
                    }
                }
                Output::Json => print_json(&json!({
                    "generates_deformation": report_json(&report),
                    "samples": samples.iter().map(|(t, deformed, hj, mult)| json!({
                        "t": format_rational(t),
                        "algebra": algebra_json(deformed),
                        "hom_jacobi": report_json(hj),
                        "multiplicative": report_json(mult),
                    })).collect::<Vec<_>>(),
                })),
            }
            Ok(if all_hold { Outcome::Holds } else { Outcome::Fails })
        }
        Command::DSquared { algebra, rep, max_degree } => {
            let g = load_algebra(algebra)?;
            let rep = parse_rep_spec(&g, rep)?;
            let report = cohomology::d_squared_is_zero(&rep, *max_degree);
            match output {
                Output::Text => outln!("{report}"),
                Output::Json => print_json(&report_json(&report)),
            }
            Ok(verdict(&[&report]))
        }
    }
}
