//! File-based front end: load structure documents, run the kind-appropriate
//! law suites, execute constructions, and print reports with exact witnesses.
//!
//! Exit codes: 0 all checked laws pass, 1 at least one violation or a failed
//! construction stage, 2 parse or shape errors. Output is deterministic:
//! fixed field order, sorted sparse entries, no timestamps.

use clap::{Parser, Subcommand, ValueEnum};
use forge::algebra::{check_diff_algebra, check_law, derivation_space, DiffAlgebra, Law};
use forge::bialgebra::{
    check_asi, check_diff_asi, coherent_derivation_space, double_construction, ASIBialgebra,
    DiffASIBialgebra,
};
use forge::bimodule::{
    check_admissible, check_bimodule, check_diff_bimodule, semidirect_product,
    AdmissibleQuadruple, DiffBimodule,
};
use forge::dendriform::{check_diff_dendriform, check_zinbiel, dendriform_to_diff_asi};
use forge::doc::{self, BimoduleParts, DocError, Document, Kind};
use forge::matrix::Matrix;
use forge::poisson::{
    build_induced_poisson_bialgebra, check_compat_conditions, check_poisson,
    check_poisson_bialgebra, induce_poisson, pipeline_zinbiel_to_poisson_bialgebra, poisson_double,
    pybe_residual,
};
use forge::report::{
    residual_from_pairs, residual_from_triples, CheckReport, LawReport, Violation,
};
use forge::scalar::{parse_scalar, Scalar};
use forge::tensor::{flip_sigma, Element2, Element3};
use forge::yangbaxter::{
    aybe_residual, canonical_r, check_coboundary_conditions, check_psi_admissible_aybe,
    coboundary_delta,
};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "forge",
    version,
    about = "Exact checks and constructions for differential (bi)algebraic structures"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the law suite for the document's kind
    Check {
        file: PathBuf,
        /// Comma-separated law names to restrict the report to
        #[arg(long, value_delimiter = ',')]
        laws: Option<Vec<String>>,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Solve a linear law system and emit its basis as documents
    Derive {
        file: PathBuf,
        #[arg(long)]
        space: Space,
    },
    /// Execute a construction and emit the derived documents plus a report
    Build {
        file: Option<PathBuf>,
        #[arg(long)]
        op: Op,
        /// Scalar weights for the extension family, one per derivation
        #[arg(long, value_delimiter = ',')]
        theta: Option<Vec<String>>,
        /// Base dimension for canonical-r when no input file is given
        #[arg(long)]
        n: Option<usize>,
        /// Write each output document to this directory instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate equation residuals for a structure and an r element
    Residual {
        file: PathBuf,
        /// Document holding the r element
        #[arg(long)]
        r: Option<PathBuf>,
        #[arg(long)]
        eq: Eq,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    Derivations,
    Coherent,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Semidirect,
    Double,
    Coboundary,
    InducePoisson,
    ZinbielPipeline,
    CanonicalR,
    AsiExtend,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Semidirect => "semidirect",
            Op::Double => "double",
            Op::Coboundary => "coboundary",
            Op::InducePoisson => "induce-poisson",
            Op::ZinbielPipeline => "zinbiel-pipeline",
            Op::CanonicalR => "canonical-r",
            Op::AsiExtend => "asi-extend",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Eq {
    Aybe,
    Pybe,
    Pqadm,
    Coboundary,
    Dpb,
    Vip,
}

impl Eq {
    fn name(self) -> &'static str {
        match self {
            Eq::Aybe => "aybe",
            Eq::Pybe => "pybe",
            Eq::Pqadm => "pqadm",
            Eq::Coboundary => "coboundary",
            Eq::Dpb => "dpb",
            Eq::Vip => "vip",
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("forge: {msg}");
            ExitCode::from(2)
        }
    }
}

type CliResult = Result<u8, String>;

fn run(cli: Cli) -> CliResult {
    match cli.cmd {
        Cmd::Check { file, laws, json } => cmd_check(&file, laws.as_deref(), json),
        Cmd::Derive { file, space } => cmd_derive(&file, space),
        Cmd::Build {
            file,
            op,
            theta,
            n,
            out,
        } => cmd_build(file.as_deref(), op, theta.as_deref(), n, out.as_deref()),
        Cmd::Residual { file, r, eq } => cmd_residual(&file, r.as_deref(), eq),
    }
}

fn tool() -> String {
    format!("forge {}", env!("CARGO_PKG_VERSION"))
}

/// FNV-1a over the raw input bytes, files in argument order.
fn digest(chunks: &[&[u8]]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for chunk in chunks {
        for &b in *chunk {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    format!("{h:016x}")
}

fn load(path: &Path) -> Result<(Document, Vec<u8>), String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let text = std::str::from_utf8(&bytes).map_err(|e| format!("{}: {e}", path.display()))?;
    let doc = doc::parse_document(text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((doc, bytes))
}

fn doc_err(path: &Path, e: DocError) -> String {
    format!("{}: {e}", path.display())
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

// ---------------------------------------------------------------------------
// check

#[derive(Serialize)]
struct CheckOutput {
    tool: String,
    digest: String,
    kind: String,
    laws: Vec<LawReport>,
    verdict: &'static str,
}

fn cmd_check(path: &Path, laws: Option<&[String]>, json: bool) -> CliResult {
    let (document, bytes) = load(path)?;
    let mut report = check_suite(&document).map_err(|e| doc_err(path, e))?;
    if let Some(wanted) = laws {
        for name in wanted {
            if !report.laws.iter().any(|l| &l.law == name) {
                let known: Vec<&str> = report.laws.iter().map(|l| l.law.as_str()).collect();
                return Err(format!(
                    "unknown law \"{name}\" for kind \"{}\"; available: {}",
                    document.kind,
                    known.join(", ")
                ));
            }
        }
        report.laws.retain(|l| wanted.iter().any(|w| w == &l.law));
    }
    let pass = report.pass();
    let output = CheckOutput {
        tool: tool(),
        digest: digest(&[&bytes]),
        kind: document.kind.to_string(),
        laws: report.laws,
        verdict: verdict(pass),
    };
    if json {
        println!("{}", to_pretty(&output));
    } else {
        print_check_text(&output);
    }
    Ok(u8::from(!pass))
}

fn print_check_text(out: &CheckOutput) {
    println!("kind: {}", out.kind);
    for law in &out.laws {
        if law.pass {
            println!("  {}: pass", law.law);
        } else {
            println!("  {}: FAIL ({} witnesses)", law.law, law.violations.len());
            for v in &law.violations {
                println!("    at {:?}: {}", v.indices, format_residual(v));
            }
        }
    }
    println!("verdict: {}", out.verdict);
}

fn format_residual(v: &Violation) -> String {
    let terms: Vec<String> = v
        .residual
        .iter()
        .map(|(idx, c)| format!("{idx:?} -> {}", forge::scalar::format_scalar(c)))
        .collect();
    terms.join(", ")
}

fn check_suite(document: &Document) -> Result<CheckReport, DocError> {
    match document.kind {
        Kind::Algebra => Ok(check_law(&document.as_algebra()?, Law::Associative)),
        Kind::DiffAlgebra => Ok(check_diff_algebra(&document.as_diff_algebra()?, false)),
        Kind::Bimodule => {
            let parts = document.as_bimodule()?;
            check_bimodule_suite(parts)
        }
        Kind::AsiBialgebra => Ok(check_asi(&document.as_asi_bialgebra()?)),
        Kind::DiffAsiBialgebra => Ok(check_diff_asi(&document.as_diff_asi_bialgebra()?)),
        Kind::Zinbiel => Ok(check_zinbiel(&document.as_zinbiel()?)),
        Kind::Dendriform => Ok(check_diff_dendriform(&document.as_dendriform()?)),
        Kind::Poisson => Ok(check_poisson(&document.as_poisson()?)),
        Kind::PoissonBialgebra => Ok(check_poisson_bialgebra(&document.as_poisson_bialgebra()?)),
        Kind::RElement => {
            let r = document.as_r_element()?;
            let sym = r.add(&flip_sigma(&r));
            let violations = if sym.is_zero() {
                Vec::new()
            } else {
                vec![Violation {
                    indices: vec![],
                    residual: residual_from_pairs(&sym.entries()),
                }]
            };
            Ok(CheckReport::new(vec![LawReport::new(
                "antisymmetric",
                violations,
            )]))
        }
        Kind::LinearMap => {
            document.as_linear_map()?;
            Ok(CheckReport::default())
        }
        Kind::BilinearForm => {
            let f = document.as_bilinear_form()?;
            let skew = f.b.sub(&f.b.transpose());
            let sym = if skew.is_zero() {
                Vec::new()
            } else {
                vec![Violation {
                    indices: vec![],
                    residual: matrix_residual(&skew),
                }]
            };
            let nondeg = if f.b.rank() == f.dim() {
                Vec::new()
            } else {
                vec![Violation {
                    indices: vec![],
                    residual: vec![(vec![], forge::scalar::int(1))],
                }]
            };
            Ok(CheckReport::new(vec![
                LawReport::new("symmetric", sym),
                LawReport::new("nondegenerate", nondeg),
            ]))
        }
    }
}

fn matrix_residual(m: &Matrix) -> Vec<(Vec<usize>, Scalar)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let c = m.get(i, j);
            if !num::Zero::is_zero(c) {
                out.push((vec![i, j], c.clone()));
            }
        }
    }
    out
}

fn check_bimodule_suite(parts: BimoduleParts) -> Result<CheckReport, DocError> {
    let BimoduleParts {
        alg,
        bm,
        phi,
        omega,
        pi,
    } = parts;
    let needs_phi = omega.is_some() || pi.is_some();
    if needs_phi && phi.is_none() {
        return Err(DocError::Shape(
            "omega or pi require the phi family on the algebra".into(),
        ));
    }
    let mut report = match (&phi, omega) {
        (Some(phi), Some(omega)) => {
            let da = DiffAlgebra::new(alg.clone(), phi.clone());
            check_diff_bimodule(&da, &DiffBimodule::new(bm.clone(), omega))
        }
        _ => check_bimodule(&alg, &bm),
    };
    if let Some(pi) = pi {
        let da = DiffAlgebra::new(alg, phi.expect("checked above"));
        report.merge(check_admissible(&da, &AdmissibleQuadruple::new(bm, pi)).namespaced("pi"));
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// derive

fn cmd_derive(path: &Path, space: Space) -> CliResult {
    let (document, _) = load(path)?;
    match space {
        Space::Derivations => {
            let alg = match document.kind {
                Kind::Algebra => document.as_algebra(),
                Kind::DiffAlgebra => document.as_diff_algebra().map(|da| da.base),
                _ => Err(DocError::Shape(format!(
                    "derivations need kind \"algebra\" or \"diff_algebra\", got \"{}\"",
                    document.kind
                ))),
            }
            .map_err(|e| doc_err(path, e))?;
            let basis: Vec<Document> = derivation_space(&alg)
                .iter()
                .map(doc::from_linear_map)
                .collect();
            println!("{}", to_pretty(&basis));
        }
        Space::Coherent => {
            let bialg = match document.kind {
                Kind::AsiBialgebra => document.as_asi_bialgebra(),
                Kind::DiffAsiBialgebra => document.as_diff_asi_bialgebra().map(|db| db.bialg),
                _ => Err(DocError::Shape(format!(
                    "coherent space needs kind \"asi_bialgebra\" or \"diff_asi_bialgebra\", got \"{}\"",
                    document.kind
                ))),
            }
            .map_err(|e| doc_err(path, e))?;
            let basis: Vec<(Document, Document)> = coherent_derivation_space(&bialg)
                .iter()
                .map(|p| (doc::from_linear_map(&p.d), doc::from_linear_map(&p.cd)))
                .collect();
            println!("{}", to_pretty(&basis));
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// build

#[derive(Serialize)]
struct NamedDoc {
    name: &'static str,
    document: Document,
}

#[derive(Serialize)]
struct BuildOutput {
    tool: String,
    digest: String,
    op: &'static str,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    failed_stage: Option<String>,
    laws: Vec<LawReport>,
    outputs: Vec<NamedDoc>,
}

struct Built {
    report: CheckReport,
    failed_stage: Option<String>,
    outputs: Vec<NamedDoc>,
}

impl Built {
    fn ok(report: CheckReport, outputs: Vec<NamedDoc>) -> Self {
        Built {
            report,
            failed_stage: None,
            outputs,
        }
    }

    fn failed(stage: &str, report: CheckReport) -> Self {
        Built {
            report,
            failed_stage: Some(stage.to_string()),
            outputs: Vec::new(),
        }
    }
}

fn cmd_build(
    file: Option<&Path>,
    op: Op,
    theta: Option<&[String]>,
    n: Option<usize>,
    out_dir: Option<&Path>,
) -> CliResult {
    let loaded = match file {
        Some(path) => Some((path, load(path)?)),
        None => None,
    };
    if loaded.is_none() && !matches!(op, Op::CanonicalR) {
        return Err(format!("op {} requires an input file", op.name()));
    }
    let input_digest = match &loaded {
        Some((_, (_, bytes))) => digest(&[bytes]),
        None => digest(&[]),
    };

    let built = match op {
        Op::CanonicalR => {
            let base = match (&loaded, n) {
                (_, Some(n)) => n,
                (Some((path, (document, _))), None) => {
                    document.any_dim().map_err(|e| doc_err(path, e))?
                }
                (None, None) => return Err("canonical-r needs --n or an input file".into()),
            };
            let r = canonical_r(base);
            Built::ok(
                CheckReport::default(),
                vec![NamedDoc {
                    name: "r",
                    document: doc::from_r_element(&r),
                }],
            )
        }
        Op::Semidirect => {
            let (path, (document, _)) = loaded.as_ref().expect("checked above");
            build_semidirect(document).map_err(|e| doc_err(path, e))?
        }
        Op::Double => {
            let (path, (document, _)) = loaded.as_ref().expect("checked above");
            build_double(document).map_err(|e| doc_err(path, e))?
        }
        Op::Coboundary => {
            let (path, (document, _)) = loaded.as_ref().expect("checked above");
            build_coboundary(document).map_err(|e| doc_err(path, e))?
        }
        Op::InducePoisson => {
            let (path, (document, _)) = loaded.as_ref().expect("checked above");
            build_induce_poisson(document).map_err(|e| doc_err(path, e))?
        }
        Op::ZinbielPipeline => {
            let (path, (document, _)) = loaded.as_ref().expect("checked above");
            build_pipeline(document).map_err(|e| doc_err(path, e))?
        }
        Op::AsiExtend => {
            let (path, (document, _)) = loaded.as_ref().expect("checked above");
            build_asi_extend(document, theta).map_err(|e| doc_err(path, e))?
        }
    };

    let pass = built.failed_stage.is_none() && built.report.pass();
    let output = BuildOutput {
        tool: tool(),
        digest: input_digest,
        op: op.name(),
        verdict: verdict(pass),
        failed_stage: built.failed_stage,
        laws: built.report.laws,
        outputs: built.outputs,
    };
    match out_dir {
        None => println!("{}", to_pretty(&output)),
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            for named in &output.outputs {
                let path = dir.join(format!("{}.json", named.name));
                std::fs::write(&path, doc::render_document(&named.document))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                eprintln!("wrote {}", path.display());
            }
            let path = dir.join("report.json");
            let report_only = BuildOutput {
                outputs: Vec::new(),
                ..output
            };
            std::fs::write(&path, to_pretty(&report_only) + "\n")
                .map_err(|e| format!("{}: {e}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(u8::from(!pass))
}

fn build_semidirect(document: &Document) -> Result<Built, DocError> {
    let parts = document.as_bimodule()?;
    let (phi, omega) = match (parts.phi, parts.omega) {
        (Some(phi), Some(omega)) => (phi, omega),
        _ => {
            return Err(DocError::Shape(
                "semidirect needs a bimodule document with phi and omega families".into(),
            ))
        }
    };
    let da = DiffAlgebra::new(parts.alg, phi);
    let dbm = DiffBimodule::new(parts.bm, omega);
    match semidirect_product(&da, &dbm) {
        Err(report) => Ok(Built::failed("gate", *report)),
        Ok(ext) => {
            let report = check_diff_algebra(&ext, false);
            Ok(Built::ok(
                report,
                vec![NamedDoc {
                    name: "semidirect",
                    document: doc::from_diff_algebra(&ext),
                }],
            ))
        }
    }
}

fn build_double(document: &Document) -> Result<Built, DocError> {
    match document.kind {
        Kind::DiffAsiBialgebra => {
            let db = document.as_diff_asi_bialgebra()?;
            let (double, form, report) = double_construction(&db);
            Ok(Built::ok(
                report,
                vec![
                    NamedDoc {
                        name: "double",
                        document: doc::from_diff_algebra(&double),
                    },
                    NamedDoc {
                        name: "form",
                        document: doc::from_bilinear_form(&form),
                    },
                ],
            ))
        }
        Kind::PoissonBialgebra => {
            let pb = document.as_poisson_bialgebra()?;
            let (double, _) = poisson_double(&pb);
            Ok(Built::ok(
                check_poisson(&double),
                vec![NamedDoc {
                    name: "double",
                    document: doc::from_poisson(&double),
                }],
            ))
        }
        _ => Err(DocError::Shape(format!(
            "double needs kind \"diff_asi_bialgebra\" or \"poisson_bialgebra\", got \"{}\"",
            document.kind
        ))),
    }
}

fn build_coboundary(document: &Document) -> Result<Built, DocError> {
    match document.kind {
        Kind::Algebra => {
            let alg = document.as_algebra()?;
            let r = document
                .embedded_r(alg.dim())?
                .ok_or_else(|| DocError::Shape("coboundary needs an embedded r".into()))?;
            let coalg = coboundary_delta(&alg, &r);
            let bialg = ASIBialgebra::new(alg, coalg);
            Ok(Built::ok(
                check_asi(&bialg),
                vec![NamedDoc {
                    name: "bialgebra",
                    document: doc::from_asi_bialgebra(&bialg),
                }],
            ))
        }
        Kind::DiffAlgebra => {
            let da = document.as_diff_algebra()?;
            let psi = document
                .psi_family(da.dim())?
                .ok_or_else(|| DocError::Shape("coboundary needs the psi family".into()))?;
            if psi.len() != da.phi.len() {
                return Err(DocError::Shape(format!(
                    "phi has {} maps but psi has {}",
                    da.phi.len(),
                    psi.len()
                )));
            }
            let r = document
                .embedded_r(da.dim())?
                .ok_or_else(|| DocError::Shape("coboundary needs an embedded r".into()))?;
            let report = check_coboundary_conditions(&da, &psi, &r);
            let assembled = DiffASIBialgebra::new(
                ASIBialgebra::new(da.base.clone(), coboundary_delta(&da.base, &r)),
                da.phi.clone(),
                psi,
            );
            Ok(Built::ok(
                report,
                vec![NamedDoc {
                    name: "bialgebra",
                    document: doc::from_diff_asi_bialgebra(&assembled),
                }],
            ))
        }
        _ => Err(DocError::Shape(format!(
            "coboundary needs kind \"algebra\" or \"diff_algebra\", got \"{}\"",
            document.kind
        ))),
    }
}

fn build_induce_poisson(document: &Document) -> Result<Built, DocError> {
    match document.kind {
        Kind::DiffAlgebra => {
            let da = document.as_diff_algebra()?;
            if da.phi.len() != 2 {
                return Err(DocError::Shape(format!(
                    "induce-poisson needs exactly two derivations, got {}",
                    da.phi.len()
                )));
            }
            match induce_poisson(&da, &[(0, 1)]) {
                Err(report) => Ok(Built::failed("gate", *report)),
                Ok(p) => Ok(Built::ok(
                    check_poisson(&p),
                    vec![NamedDoc {
                        name: "poisson",
                        document: doc::from_poisson(&p),
                    }],
                )),
            }
        }
        Kind::DiffAsiBialgebra => {
            let db = document.as_diff_asi_bialgebra()?;
            if db.phi.len() != 2 {
                return Err(DocError::Shape(format!(
                    "induce-poisson needs exactly two derivations, got {}",
                    db.phi.len()
                )));
            }
            match build_induced_poisson_bialgebra(&db) {
                Err(report) => Ok(Built::failed("gate", *report)),
                Ok((pb, report)) => Ok(Built::ok(
                    report,
                    vec![NamedDoc {
                        name: "poisson_bialgebra",
                        document: doc::from_poisson_bialgebra(&pb),
                    }],
                )),
            }
        }
        _ => Err(DocError::Shape(format!(
            "induce-poisson needs kind \"diff_algebra\" or \"diff_asi_bialgebra\", got \"{}\"",
            document.kind
        ))),
    }
}

fn build_pipeline(document: &Document) -> Result<Built, DocError> {
    let z = document.as_zinbiel()?;
    if z.phi.len() != 2 {
        return Err(DocError::Shape(format!(
            "zinbiel-pipeline needs exactly two derivations, got {}",
            z.phi.len()
        )));
    }
    match pipeline_zinbiel_to_poisson_bialgebra(&z) {
        Err(e) => {
            let e = *e;
            Ok(Built::failed(&e.stage, e.report))
        }
        Ok(out) => {
            let pre_lie = doc::from_algebra(&forge::algebra::Algebra::new(
                out.pre_poisson.diamond.clone(),
            ));
            Ok(Built::ok(
                out.report,
                vec![
                    NamedDoc {
                        name: "zinbiel",
                        document: doc::from_zinbiel(&z),
                    },
                    NamedDoc {
                        name: "associated",
                        document: doc::from_diff_algebra(&out.associated),
                    },
                    NamedDoc {
                        name: "poisson",
                        document: doc::from_poisson(&out.poisson),
                    },
                    NamedDoc {
                        name: "pre_lie",
                        document: pre_lie,
                    },
                    NamedDoc {
                        name: "bialgebra",
                        document: doc::from_diff_asi_bialgebra(&out.bialgebra),
                    },
                    NamedDoc {
                        name: "r",
                        document: doc::from_r_element(&out.r),
                    },
                    NamedDoc {
                        name: "ambient_poisson",
                        document: doc::from_poisson(&out.ambient_poisson),
                    },
                    NamedDoc {
                        name: "poisson_bialgebra",
                        document: doc::from_poisson_bialgebra(&out.poisson_bialgebra),
                    },
                ],
            ))
        }
    }
}

fn build_asi_extend(document: &Document, theta: Option<&[String]>) -> Result<Built, DocError> {
    let dd = match document.kind {
        Kind::Zinbiel => document.as_zinbiel()?.dendriform_view(),
        Kind::Dendriform => document.as_dendriform()?,
        _ => {
            return Err(DocError::Shape(format!(
                "asi-extend needs kind \"zinbiel\" or \"dendriform\", got \"{}\"",
                document.kind
            )))
        }
    };
    let theta: Vec<Scalar> = match theta {
        None => vec![forge::scalar::int(0); dd.phi.len()],
        Some(raw) => raw
            .iter()
            .map(|s| {
                parse_scalar(s).map_err(|e| DocError::Shape(format!("--theta: \"{s}\": {e}")))
            })
            .collect::<Result<_, _>>()?,
    };
    if theta.len() != dd.phi.len() {
        return Err(DocError::Shape(format!(
            "--theta needs {} values, got {}",
            dd.phi.len(),
            theta.len()
        )));
    }
    match dendriform_to_diff_asi(&dd, &theta) {
        Err(report) => Ok(Built::failed("gate", *report)),
        Ok(db) => Ok(Built::ok(
            check_diff_asi(&db),
            vec![NamedDoc {
                name: "bialgebra",
                document: doc::from_diff_asi_bialgebra(&db),
            }],
        )),
    }
}

// ---------------------------------------------------------------------------
// residual

#[derive(Serialize)]
struct ResidualOutput {
    tool: String,
    digest: String,
    eq: &'static str,
    laws: Vec<LawReport>,
    verdict: &'static str,
}

fn cmd_residual(path: &Path, r_path: Option<&Path>, eq: Eq) -> CliResult {
    let (document, bytes) = load(path)?;
    let loaded_r = match r_path {
        Some(p) => Some((p, load(p)?)),
        None => None,
    };
    let input_digest = match &loaded_r {
        Some((_, (_, r_bytes))) => digest(&[&bytes, r_bytes]),
        None => digest(&[&bytes]),
    };

    let need_r = |dim: usize| -> Result<Element2, String> {
        let (p, (r_doc, _)) = loaded_r
            .as_ref()
            .ok_or_else(|| format!("--eq {} requires --r", eq.name()))?;
        let r = r_doc.as_r_element().map_err(|e| doc_err(p, e))?;
        if r.dims() != (dim, dim) {
            return Err(format!(
                "{}: r has dim {} but the structure has dim {dim}",
                p.display(),
                r.dims().0
            ));
        }
        Ok(r)
    };

    let laws = match eq {
        Eq::Aybe => {
            let alg = match document.kind {
                Kind::Algebra => document.as_algebra(),
                Kind::DiffAlgebra => document.as_diff_algebra().map(|da| da.base),
                _ => Err(DocError::Shape(format!(
                    "aybe needs kind \"algebra\" or \"diff_algebra\", got \"{}\"",
                    document.kind
                ))),
            }
            .map_err(|e| doc_err(path, e))?;
            let r = need_r(alg.dim())?;
            vec![residual_law("aybe", &aybe_residual(&alg, &r))]
        }
        Eq::Pybe => {
            let p = match document.kind {
                Kind::Poisson => document.as_poisson(),
                Kind::PoissonBialgebra => document.as_poisson_bialgebra().map(|pb| pb.alg),
                _ => Err(DocError::Shape(format!(
                    "pybe needs kind \"poisson\" or \"poisson_bialgebra\", got \"{}\"",
                    document.kind
                ))),
            }
            .map_err(|e| doc_err(path, e))?;
            let r = need_r(p.dim())?;
            let (bracket_part, product_part) = pybe_residual(&p, &r);
            vec![
                residual_law("pybe_bracket", &bracket_part),
                residual_law("pybe_product", &product_part),
            ]
        }
        Eq::Pqadm => {
            let (da, psi) = diff_pair(&document).map_err(|e| doc_err(path, e))?;
            let r = need_r(da.dim())?;
            let mut report = check_psi_admissible_aybe(&da, &psi, &r);
            report.laws.retain(|l| l.law.starts_with("family_mix_"));
            report.laws
        }
        Eq::Coboundary => {
            let (da, psi) = diff_pair(&document).map_err(|e| doc_err(path, e))?;
            let r = need_r(da.dim())?;
            check_coboundary_conditions(&da, &psi, &r).laws
        }
        Eq::Dpb | Eq::Vip => {
            let db = document
                .as_diff_asi_bialgebra()
                .map_err(|e| doc_err(path, e))?;
            if db.phi.len() != 2 {
                return Err(format!(
                    "{}: {} needs exactly two derivations, got {}",
                    path.display(),
                    eq.name(),
                    db.phi.len()
                ));
            }
            let da = DiffAlgebra::new(db.bialg.alg.clone(), db.phi.clone());
            let cc = check_compat_conditions(&da, &db.psi, &db.bialg.coalg.comult);
            let prefix = match eq {
                Eq::Dpb => "dpb_",
                _ => "vip_",
            };
            let mut laws = cc.report.laws;
            laws.retain(|l| l.law.starts_with(prefix));
            laws
        }
    };

    let pass = laws.iter().all(|l| l.pass);
    let output = ResidualOutput {
        tool: tool(),
        digest: input_digest,
        eq: eq.name(),
        laws,
        verdict: verdict(pass),
    };
    println!("{}", to_pretty(&output));
    Ok(u8::from(!pass))
}

/// diff_algebra document with its psi family, or a diff_asi_bialgebra
/// reduced to the same pair.
fn diff_pair(document: &Document) -> Result<(DiffAlgebra, Vec<Matrix>), DocError> {
    match document.kind {
        Kind::DiffAlgebra => {
            let da = document.as_diff_algebra()?;
            let psi = document
                .psi_family(da.dim())?
                .ok_or_else(|| DocError::Shape("this equation needs the psi family".into()))?;
            if psi.len() != da.phi.len() {
                return Err(DocError::Shape(format!(
                    "phi has {} maps but psi has {}",
                    da.phi.len(),
                    psi.len()
                )));
            }
            Ok((da, psi))
        }
        Kind::DiffAsiBialgebra => {
            let db = document.as_diff_asi_bialgebra()?;
            Ok((
                DiffAlgebra::new(db.bialg.alg.clone(), db.phi.clone()),
                db.psi,
            ))
        }
        _ => Err(DocError::Shape(format!(
            "this equation needs kind \"diff_algebra\" or \"diff_asi_bialgebra\", got \"{}\"",
            document.kind
        ))),
    }
}

fn residual_law(name: &str, e: &Element3) -> LawReport {
    let violations = if e.is_zero() {
        Vec::new()
    } else {
        vec![Violation {
            indices: vec![],
            residual: residual_from_triples(&e.entries()),
        }]
    };
    LawReport::new(name, violations)
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    doc::to_json_pretty(value)
}
