use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use trilie::double::{
    double_bracket, solve_bialgebra_space, theorem_relations,
    verify_bialgebra_equations, verify_delta_skew, verify_invariance, verify_manin_triple, verify_matched_pair,
    verify_matched_pair_reduced, BialgebraConstraint, BialgebraEquation, MatchedPairData,
};
use trilie::io;
use trilie::prelie::{
    canonical_r, prelie_from_o_operator, r_from_o_operator, subadjacent, verify_o_operator, verify_prelie, PreLieAlgebra,
};
use trilie::suite::{run_suite, DEFAULT_SEED};
use trilie::yang_baxter::{
    delta_from_r, dual_structure, is_cybe_solution, verify_co_jacobi, verify_thm_condition, Comultiplication,
    RElement,
};
use trilie::{
    get_algebra, get_paper_bialgebra, BilinearForm, CatalogId, CatalogTag, Error, Matrix, Scalar, ThreeLieAlgebra,
    VerificationReport,
};

#[derive(Parser)]
#[command(name = "trilie", version, about = "Exact checks and constructions for 3-Lie algebras and bialgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Clone, Default)]
struct Common {
    /// Algebra file, or a catalog id such as `dim3`, `dim4.6`, `catalog:trivial:4`
    #[arg(long)]
    alg: Option<String>,
    /// r file
    #[arg(long)]
    r: Option<String>,
    /// Δ file, or `catalog:class1` for the built-in comultiplication on dim4.1
    #[arg(long)]
    delta: Option<String>,
    /// representation file
    #[arg(long)]
    rep: Option<String>,
    /// O-operator file
    #[arg(long)]
    op: Option<String>,
    /// 3-pre-Lie file
    #[arg(long)]
    prelie: Option<String>,
    /// bilinear form file: a JSON matrix
    #[arg(long)]
    form: Option<String>,
    /// α for class dim4.6, as `p/q`
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verifier
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Yang–Baxter checks on r
    Cybe {
        #[command(subcommand)]
        what: CybeCmd,
    },
    /// Build a derived structure and print it as JSON
    Derive {
        #[command(subcommand)]
        what: DeriveCmd,
    },
    /// Exact linear solves
    Solve {
        #[command(subcommand)]
        what: SolveCmd,
    },
    /// Built-in algebras
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
    /// Reproduce every worked example and structural claim
    VerifyPaper {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Fundamental Identity and its equivalent forms
    Fi(Common),
    /// Representation axioms
    Rep(Common),
    /// 3-pre-Lie axioms, from `--prelie` or from the O-operator in `--op`
    Prelie(Common),
    /// Invariance of `--form` on `--alg`
    Invariance(Common),
    /// Standard Manin triple on A⊕A* with A* from `--delta`
    Manin(Common),
    /// (A, A*, ad*, ad*) matched pair, reduced and full
    MatchedPair(Common),
    /// Bialgebra equations; `--equations` defaults to b1,b2
    Bialgebra {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',')]
        equations: Vec<String>,
    },
    /// O-operator identity
    Operator(Common),
}

#[derive(Subcommand)]
enum CybeCmd {
    /// [[r,r,r]] = 0
    Check(Common),
    /// The condition on r for the induced Δ, together with co-Jacobi
    ThmCondition(Common),
}

#[derive(Subcommand)]
enum DeriveCmd {
    /// Δ = Δ1+Δ2+Δ3 from r
    Delta {
        #[command(flatten)]
        common: Common,
        /// print only Δ1, Δ2 or Δ3
        #[arg(long)]
        part: Option<u8>,
    },
    /// The double bracket on A⊕A*
    Double(Common),
    /// A⋉V from a representation
    Semidirect(Common),
    /// r in A⋉V* from an O-operator
    OToR(Common),
    /// The 3-pre-Lie algebra induced by the O-operator in `--op`
    Prelie(Common),
    /// The canonical r from a 3-pre-Lie algebra
    CanonicalR(Common),
}

#[derive(Subcommand)]
enum SolveCmd {
    /// Kernel of the selected constraints on Δ
    BialgebraSpace {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', default_value = "skew,b1,b2")]
        constraints: Vec<String>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Show {
        id: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
}

enum Output {
    Reports(Vec<VerificationReport>),
    Data(Value),
}

fn builtin_delta(name: &str) -> bool {
    matches!(name, "catalog:class1" | "catalog:paper")
}

struct Loaded<'a> {
    c: &'a Common,
    alpha: Option<Scalar>,
}

impl<'a> Loaded<'a> {
    fn new(c: &'a Common) -> Result<Self, Error> {
        let alpha = c.alpha.as_deref().map(Scalar::parse).transpose()?;
        Ok(Loaded { c, alpha })
    }

    fn missing(flag: &str) -> Error {
        Error::InvalidArgument(format!("missing --{flag}"))
    }

    fn alg(&self) -> Result<ThreeLieAlgebra, Error> {
        match (&self.c.alg, self.c.delta.as_deref()) {
            (Some(a), _) => io::load_algebra(a, self.alpha.as_ref()),
            (None, Some(d)) if builtin_delta(d) => Ok(get_paper_bialgebra().0),
            _ => Err(Self::missing("alg")),
        }
    }

    fn r(&self, alg: &ThreeLieAlgebra) -> Result<RElement, Error> {
        let path = self.c.r.as_ref().ok_or_else(|| Self::missing("r"))?;
        io::r_from_json(io::read_json(path)?, alg)
    }

    fn delta(&self, alg: &ThreeLieAlgebra) -> Result<Comultiplication, Error> {
        match self.c.delta.as_deref() {
            Some(name) if builtin_delta(name) => {
                let (a, d) = get_paper_bialgebra();
                if &a != alg {
                    return Err(Error::InvalidArgument(format!("{name} is defined on dim4.1")));
                }
                Ok(d)
            }
            Some(path) => io::delta_from_json(io::read_json(path)?, alg),
            None => Err(Self::missing("delta")),
        }
    }

    fn rep(&self) -> Result<trilie::Representation, Error> {
        let path = self.c.rep.as_ref().ok_or_else(|| Self::missing("rep"))?;
        let alg = self.c.alg.as_ref().map(|a| io::load_algebra(a, self.alpha.as_ref())).transpose()?;
        let v = match path.as_str() {
            "adjoint" | "coadjoint" => Value::String(path.clone()),
            _ => io::read_json(path)?,
        };
        if v.is_string() && alg.is_none() {
            return Err(Self::missing("alg"));
        }
        io::representation_from_json(v, alg.as_ref(), self.alpha.as_ref())
    }

    fn op(&self) -> Result<(ThreeLieAlgebra, trilie::Representation, trilie::LinearOperator), Error> {
        let path = self.c.op.as_ref().ok_or_else(|| Self::missing("op"))?;
        io::o_operator_from_json(io::read_json(path)?, self.alpha.as_ref())
    }

    fn prelie(&self) -> Result<PreLieAlgebra, Error> {
        if let Some(path) = &self.c.prelie {
            return io::prelie_from_json(io::read_json(path)?);
        }
        if self.c.op.is_some() {
            let (a, rep, t) = self.op()?;
            return prelie_from_o_operator(&t, &a, &rep);
        }
        Err(Self::missing("prelie"))
    }
}

fn renamed(mut r: VerificationReport, name: &str) -> VerificationReport {
    r.check = name.into();
    r
}

fn run_check(what: &CheckCmd) -> Result<Output, Error> {
    let reports = match what {
        CheckCmd::Fi(c) => {
            let a = Loaded::new(c)?.alg()?;
            vec![a.verify_fundamental_identity(), a.verify_equivalent_identities()]
        }
        CheckCmd::Rep(c) => {
            let rep = Loaded::new(c)?.rep()?;
            vec![rep.verify()]
        }
        CheckCmd::Prelie(c) => {
            let p = Loaded::new(c)?.prelie()?;
            let mut out = vec![verify_prelie(&p)];
            if let Ok(sub) = subadjacent(&p) {
                out.push(renamed(sub.verify_fundamental_identity(), "subadjacent_fundamental_identity"));
            }
            out
        }
        CheckCmd::Invariance(c) => {
            let l = Loaded::new(c)?;
            let a = l.alg()?;
            let path = c.form.as_ref().ok_or_else(|| Loaded::missing("form"))?;
            let m: Matrix = serde_json::from_value(io::read_json(path)?).map_err(|e| Error::Parse(e.to_string()))?;
            let b = BilinearForm::detect(m)?;
            vec![verify_invariance(&a, &b)?, trilie::is_pseudo_metric(&a, &b)?]
        }
        CheckCmd::Manin(c) => {
            let l = Loaded::new(c)?;
            let a = l.alg()?;
            let dual = dual_structure(&l.delta(&a)?)?;
            vec![verify_manin_triple(&a, &dual)?]
        }
        CheckCmd::MatchedPair(c) => {
            let l = Loaded::new(c)?;
            let a = l.alg()?;
            let dual = dual_structure(&l.delta(&a)?)?;
            let full = verify_matched_pair(&MatchedPairData::coadjoint_pair(&a, &dual)?)?;
            vec![verify_matched_pair_reduced(&a, &dual)?, full]
        }
        CheckCmd::Bialgebra { common, equations } => {
            let l = Loaded::new(common)?;
            let a = l.alg()?;
            let d = l.delta(&a)?;
            let eqs = if equations.is_empty() {
                vec![BialgebraEquation::B1, BialgebraEquation::B2]
            } else {
                equations.iter().map(|e| e.parse()).collect::<Result<Vec<_>, _>>()?
            };
            let mut out = vec![verify_delta_skew(&d)];
            out.extend(verify_bialgebra_equations(&a, &d, &eqs)?);
            if let Ok(dual) = dual_structure(&d) {
                out.push(renamed(dual.verify_fundamental_identity(), "dual_fundamental_identity"));
                if out.last().unwrap().passed {
                    out.push(theorem_relations(&a, &d)?.report);
                }
            }
            out
        }
        CheckCmd::Operator(c) => {
            let (a, rep, t) = Loaded::new(c)?.op()?;
            vec![verify_o_operator(&t, &a, &rep)?]
        }
    };
    Ok(Output::Reports(reports))
}

fn run_cybe(what: &CybeCmd) -> Result<Output, Error> {
    let (c, thm) = match what {
        CybeCmd::Check(c) => (c, false),
        CybeCmd::ThmCondition(c) => (c, true),
    };
    let l = Loaded::new(c)?;
    let a = l.alg()?;
    let r = l.r(&a)?;
    if !thm {
        return Ok(Output::Reports(vec![is_cybe_solution(&r)]));
    }
    let delta = delta_from_r(&r).sum();
    Ok(Output::Reports(vec![verify_thm_condition(&r).0, verify_co_jacobi(&delta)?]))
}

fn run_derive(what: &DeriveCmd) -> Result<Output, Error> {
    let data = match what {
        DeriveCmd::Delta { common, part } => {
            let l = Loaded::new(common)?;
            let a = l.alg()?;
            let t = delta_from_r(&l.r(&a)?);
            let d = match part {
                None => t.sum(),
                Some(1) => t.delta1,
                Some(2) => t.delta2,
                Some(3) => t.delta3,
                Some(p) => return Err(Error::InvalidArgument(format!("--part must be 1, 2 or 3, got {p}"))),
            };
            io::delta_to_json(&d)
        }
        DeriveCmd::Double(c) => {
            let l = Loaded::new(c)?;
            let a = l.alg()?;
            let dual = dual_structure(&l.delta(&a)?)?;
            io::algebra_to_json(&double_bracket(&a, &dual)?)
        }
        DeriveCmd::Semidirect(c) => io::algebra_to_json(&Loaded::new(c)?.rep()?.semidirect_product()?),
        DeriveCmd::OToR(c) => {
            let (a, rep, t) = Loaded::new(c)?.op()?;
            let (big, r) = r_from_o_operator(&t, &a, &rep)?;
            json!({"alg": io::algebra_to_json(&big), "r": io::r_to_json(&r)})
        }
        DeriveCmd::Prelie(c) => io::prelie_to_json(&Loaded::new(c)?.prelie()?),
        DeriveCmd::CanonicalR(c) => {
            let p = Loaded::new(c)?.prelie()?;
            let (big, r) = canonical_r(&p)?;
            json!({"alg": io::algebra_to_json(&big), "r": io::r_to_json(&r)})
        }
    };
    Ok(Output::Data(data))
}

fn run_solve(what: &SolveCmd) -> Result<Output, Error> {
    let SolveCmd::BialgebraSpace { common, constraints } = what;
    let a = Loaded::new(common)?.alg()?;
    let cons = constraints.iter().map(|s| s.parse()).collect::<Result<Vec<BialgebraConstraint>, _>>()?;
    let sol = solve_bialgebra_space(&a, &cons)?;
    let n = a.dim();
    let basis: Vec<Value> = sol
        .kernel_basis
        .iter()
        .map(|t| {
            let tensor = trilie::Tensor::from_vec(4, n, t.data().to_vec()).expect("kernel vectors have n⁴ entries");
            io::delta_to_json(&Comultiplication::new(a.clone(), tensor).expect("dimension matches"))
        })
        .collect();
    Ok(Output::Data(json!({
        "unknowns": sol.unknowns,
        "rank": sol.rank,
        "kernel_dim": sol.kernel_dim(),
        "kernel_basis": basis,
    })))
}

fn run_catalog(what: &CatalogCmd) -> Result<Output, Error> {
    match what {
        CatalogCmd::List => {
            let mut ids: Vec<Value> =
                CatalogId::all_nontrivial(Scalar::one()).iter().map(|id| Value::String(id.to_string())).collect();
            ids.push(Value::String("trivial:n".into()));
            Ok(Output::Data(Value::Array(ids)))
        }
        CatalogCmd::Show { id, alpha } => {
            let alpha = alpha.as_deref().map(Scalar::parse).transpose()?;
            let id = CatalogId::parse(id.strip_prefix("catalog:").unwrap_or(id), alpha)?;
            let a = get_algebra(&id);
            let mut out = io::algebra_to_json(&a);
            if id.tag() == &CatalogTag::Dim4(1) {
                out["class1_delta"] = io::delta_to_json(&get_paper_bialgebra().1);
            }
            Ok(Output::Data(out))
        }
    }
}

fn report_text(r: &VerificationReport, verbose: bool) -> String {
    let mut s = format!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.check);
    if let Some(w) = &r.witness {
        let idx: Vec<String> = w.indices.iter().map(|i| i.to_string()).collect();
        s.push_str(&format!("  witness [{}] residual {}", idx.join(","), w.residual));
        if let Some(eq) = &w.equation {
            s.push_str(&format!(" ({eq})"));
        }
    }
    if verbose {
        s.push_str(&format!("\n    checked {}", r.checked_count));
        for n in &r.notes {
            s.push_str(&format!("\n    note: {n}"));
        }
    }
    s
}

/// Writes a line to stdout; a closed pipe is not an error.
fn out(line: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn emit(result: Output, format: Format, verbose: bool) -> ExitCode {
    match result {
        Output::Data(v) => {
            out(&serde_json::to_string_pretty(&v).expect("json"));
            ExitCode::SUCCESS
        }
        Output::Reports(reports) => {
            let ok = reports.iter().all(|r| r.passed);
            match format {
                Format::Text => {
                    for r in &reports {
                        out(&report_text(r, verbose));
                    }
                }
                Format::Json => {
                    let v: Vec<Value> = reports.iter().map(VerificationReport::to_json).collect();
                    out(&serde_json::to_string_pretty(&v).expect("json"));
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn verify_paper(seed: u64, format: Format, verbose: bool) -> ExitCode {
    let items = run_suite(seed);
    let ok = items.iter().all(|i| i.report.passed);
    match format {
        Format::Text => {
            for i in &items {
                let mut r = i.report.clone();
                r.check = format!("{:>2} {}", i.number, i.name);
                out(&report_text(&r, verbose));
            }
        }
        Format::Json => {
            let v: Vec<Value> = items
                .iter()
                .map(|i| {
                    let mut o = i.report.to_json();
                    o["item"] = json!(i.number);
                    o
                })
                .collect();
            out(&serde_json::to_string_pretty(&v).expect("json"));
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let default = Common::default();
    let (result, common) = match &cli.command {
        Command::VerifyPaper { seed, format, verbose } => return verify_paper(*seed, *format, *verbose),
        Command::Check { what } => (run_check(what), check_common(what)),
        Command::Cybe { what } => {
            let (CybeCmd::Check(c) | CybeCmd::ThmCondition(c)) = what;
            (run_cybe(what), c)
        }
        Command::Derive { what } => (run_derive(what), derive_common(what)),
        Command::Solve { what } => {
            let SolveCmd::BialgebraSpace { common, .. } = what;
            (run_solve(what), common)
        }
        Command::Catalog { what } => (run_catalog(what), &default),
    };
    match result {
        Ok(out) => emit(out, common.format, common.verbose),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn check_common(what: &CheckCmd) -> &Common {
    match what {
        CheckCmd::Fi(c)
        | CheckCmd::Rep(c)
        | CheckCmd::Prelie(c)
        | CheckCmd::Invariance(c)
        | CheckCmd::Manin(c)
        | CheckCmd::MatchedPair(c)
        | CheckCmd::Operator(c) => c,
        CheckCmd::Bialgebra { common, .. } => common,
    }
}

fn derive_common(what: &DeriveCmd) -> &Common {
    match what {
        DeriveCmd::Delta { common, .. } => common,
        DeriveCmd::Double(c)
        | DeriveCmd::Semidirect(c)
        | DeriveCmd::OToR(c)
        | DeriveCmd::Prelie(c)
        | DeriveCmd::CanonicalR(c) => c,
    }
}
