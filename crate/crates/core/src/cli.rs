//! The `whopf` command line.
//!
//! Every command reads JSON documents (a path, or stdin when omitted) and
//! writes one JSON document or text table. Exit codes: 0 success, 1 a check
//! or computation failed, 2 unreadable input or bad usage. Errors go to
//! stderr as `{"error": kind, "message": ...}`.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::constructors::*;
use crate::document::{
    sparse_pairs, DynamicalDocument, ElementDocument, TwistDocument, WhaDocument,
};
use crate::error::Error;
use crate::grouplikes::{
    antipode_order_report, check_grouplike_counitals, distinguished_pair, is_grouplike,
    is_trivial_grouplike, lambda_ell_relations, radford_check, self_intertwiners,
};
use crate::integrals::{
    check_antipode_from_integrals, dual_integral_space, dual_pair, integral_space,
    invariance_check, Side,
};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{FieldSpec, Scalar};
use crate::semisimplicity::semisimplicity_report;
use crate::twisting::{
    deform_q, dynamical_cosemisimplicity_check, dynamical_theta, regularize, twist,
    DynamicalTwistData,
};
use crate::validate::validate;
use crate::wha::WeakHopfAlgebra;
use crate::zoo;

#[derive(Parser, Debug)]
#[command(name = "whopf", version, about = "Exact computations with finite-dimensional weak Hopf algebras")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an algebra and emit its document.
    Make {
        #[command(subcommand)]
        kind: MakeKind,
    },
    /// Check every axiom; exit 1 on the first failing family.
    Validate { input: Option<PathBuf> },
    /// Integrals, group-likes, Radford and trace sections in one object.
    Report {
        input: Option<PathBuf>,
        #[arg(long)]
        integrals: bool,
        #[arg(long)]
        grouplikes: bool,
        #[arg(long)]
        radford: bool,
        #[arg(long)]
        traces: bool,
        /// Also report on the dual.
        #[arg(long)]
        dual: bool,
    },
    /// Twist, deform or regularize an algebra.
    Twist(TwistArgs),
    /// The bundled examples.
    Zoo {
        /// Run the full pipeline on every member.
        #[arg(long)]
        run_all: bool,
        #[arg(long)]
        json: bool,
        /// Corrupt the counit of this member before checking it.
        #[arg(long, value_name = "MEMBER")]
        mutate: Option<String>,
        /// Emit the document of one member.
        #[arg(long, value_name = "MEMBER")]
        emit: Option<String>,
    },
    /// Integral spaces of H and H*, and a dual pair.
    Integrals { input: Option<PathBuf> },
    /// Group-like elements.
    Grouplike {
        #[command(subcommand)]
        action: GrouplikeCommand,
    },
    /// The S⁴ identity, after regularizing if needed.
    Radford { input: Option<PathBuf> },
    /// The distinguished pair (α, a).
    Distinguished { input: Option<PathBuf> },
    /// Dynamical twist of M_m⊗U and its cosemisimplicity check.
    Dyntwist(DyntwistArgs),
}

#[derive(Subcommand, Debug)]
enum GrouplikeCommand {
    /// Is the element group-like, and is it trivial?
    Check {
        input: Option<PathBuf>,
        /// Element as a JSON list of [index, scalar] pairs.
        #[arg(long)]
        element: PathBuf,
    },
}

#[derive(Args, Debug)]
#[group(id = "how", required = true, multiple = false)]
struct TwistHow {
    /// Twist document with theta and theta_bar.
    #[arg(long, value_name = "FILE")]
    twist: Option<PathBuf>,
    /// Dynamical twist data; the input is then U.
    #[arg(long, value_name = "FILE")]
    dynamical: Option<PathBuf>,
    /// Deform by an element q ∈ H_t.
    #[arg(long, value_name = "FILE")]
    q: Option<PathBuf>,
    /// Deform by the inverse of the minimal data's g.
    #[arg(long)]
    regularize: bool,
}

#[derive(Args, Debug)]
struct TwistArgs {
    input: Option<PathBuf>,
    #[command(flatten)]
    how: TwistHow,
}

#[derive(Args, Debug)]
struct DyntwistArgs {
    /// U = k[ℤ/n] with A = ℤ/n and J ≡ 1.
    #[arg(long, conflicts_with_all = ["u", "j"])]
    cyclic: Option<usize>,
    /// Document for U.
    #[arg(long, requires = "j")]
    u: Option<PathBuf>,
    /// Dynamical document with the group and J.
    #[arg(long, requires = "u")]
    j: Option<PathBuf>,
    /// Emit H_Θ instead of the report.
    #[arg(long)]
    emit: bool,
}

#[derive(Args, Debug)]
struct GroupoidShape {
    /// Pair groupoid on N objects.
    #[arg(long, value_name = "N", conflicts_with = "groups")]
    pair: Option<usize>,
    /// Disjoint union of cyclic groups, e.g. "2,2".
    #[arg(long, value_name = "ORDERS")]
    groups: Option<String>,
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(Subcommand, Debug)]
enum MakeKind {
    /// Groupoid algebra.
    Groupoid(GroupoidShape),
    /// Function algebra on a groupoid.
    Functions(GroupoidShape),
    /// Group algebra.
    Group {
        #[arg(long, value_name = "N", conflicts_with = "symmetric")]
        cyclic: Option<usize>,
        #[arg(long, value_name = "N")]
        symmetric: Option<usize>,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Minimal weak Hopf algebra of ⊕ M_{n_i} with A = k1.
    Minimal {
        /// Block sizes, e.g. "2" or "1,1".
        #[arg(long)]
        blocks: String,
        /// g as diagonal entries, or as full blocks in row-major order.
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Matrix algebra M_n as a pair groupoid algebra with E_xy labels.
    Matrix {
        #[arg(long)]
        n: usize,
    },
    /// Tensor product of two documents.
    Tensor { left: PathBuf, right: PathBuf },
    /// M_n⊗k[ℤ/n], the host of a cyclic dynamical twist.
    DyntwistHost {
        #[arg(long)]
        cyclic: usize,
    },
    /// Sweedler's four-dimensional Hopf algebra.
    Sweedler,
    /// A bialgebra without antipode or non-degenerate integral.
    Monoid,
}

/// Result of a command run.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Schema(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        kind: "UsageError".into(),
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// What a command produced before it is written out.
struct Output {
    code: i32,
    text: String,
}

impl Output {
    fn json(v: &impl serde::Serialize, ok: bool) -> Self {
        Output {
            code: if ok { 0 } else { 1 },
            text: serde_json::to_string_pretty(v).expect("reports serialize") + "\n",
        }
    }

    fn document(h: &WeakHopfAlgebra, name: &str) -> Self {
        Output {
            code: 0,
            text: WhaDocument::from_algebra(h, name).to_json() + "\n",
        }
    }
}

fn read_text(path: Option<&Path>) -> CliResult<String> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p).map_err(|e| Failure {
            code: 2,
            kind: "IoError".into(),
            message: format!("{}: {}", p.display(), e),
        }),
        _ => {
            let mut s = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| Failure {
                code: 2,
                kind: "IoError".into(),
                message: format!("stdin: {}", e),
            })?;
            Ok(s)
        }
    }
}

fn load(path: Option<&Path>) -> CliResult<(WeakHopfAlgebra, String)> {
    let doc = WhaDocument::parse(&read_text(path)?)?;
    let name = doc.name().unwrap_or("algebra").to_string();
    Ok((doc.to_algebra()?, name))
}

/// Loads a document and insists that it passes every axiom.
fn load_valid(path: Option<&Path>) -> CliResult<(WeakHopfAlgebra, String)> {
    let (h, name) = load(path)?;
    let report = validate(&h);
    if let Some(f) = report.failures().next() {
        return Err(Error::AxiomFailure(format!("{} fails", f.axiom)).into());
    }
    Ok((h, name))
}

fn sparse(v: &[Scalar]) -> Value {
    json!(sparse_pairs(v))
}

fn basis_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|b| sparse(b)).collect())
}

fn error_json(e: &Error) -> Value {
    json!({ "error": e.kind(), "message": e.to_string() })
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> CliResult<Vec<T>> {
    text.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| usage(format!("bad {} '{}'", what, t))))
        .collect()
}

fn groupoid(shape: &GroupoidShape) -> CliResult<(Groupoid, FieldSpec, String)> {
    let field: FieldSpec = shape.field.parse()?;
    match (&shape.pair, &shape.groups) {
        (Some(n), None) if *n > 0 => Ok((Groupoid::pair(*n), field, format!("pair{}", n))),
        (None, Some(orders)) => {
            let orders: Vec<usize> = parse_list(orders, "group order")?;
            let mut parts = orders.iter().map(|&n| {
                if n == 0 {
                    return Err(usage("group order must be positive"));
                }
                Ok(Groupoid::from_group(&FiniteGroup::cyclic(n)))
            });
            let mut g = parts.next().ok_or_else(|| usage("empty --groups"))??;
            for p in parts {
                g = Groupoid::disjoint_union(&g, &p?);
            }
            let name = orders.iter().map(|n| format!("z{}", n)).collect::<Vec<_>>().join("_");
            Ok((g, field, name))
        }
        _ => Err(usage("give exactly one of --pair N (N > 0) or --groups")),
    }
}

fn minimal(blocks: &str, g: Option<&str>) -> CliResult<WeakHopfAlgebra> {
    let blocks: Vec<usize> = parse_list(blocks, "block size")?;
    if blocks.is_empty() || blocks.contains(&0) {
        return Err(usage("block sizes must be positive"));
    }
    let mut p = SemisimplePresentation::trivial(blocks.clone());
    if let Some(g) = g {
        let entries = g
            .split(',')
            .map(|t| Scalar::parse(t, FieldSpec::Rational))
            .collect::<crate::error::Result<Vec<_>>>()?;
        let diag: usize = blocks.iter().sum();
        let full: usize = blocks.iter().map(|n| n * n).sum();
        let mut it = entries.iter();
        let mats: Vec<Matrix> = if entries.len() == diag {
            blocks
                .iter()
                .map(|&n| Matrix::diagonal(&it.by_ref().take(n).cloned().collect::<Vec<_>>()))
                .collect()
        } else if entries.len() == full {
            blocks
                .iter()
                .map(|&n| Matrix::from_fn(n, n, |_, _| it.next().expect("counted").clone()))
                .collect()
        } else {
            return Err(usage(format!(
                "--g needs {} diagonal entries or {} matrix entries, got {}",
                diag,
                full,
                entries.len()
            )));
        };
        p = p.with_g(mats);
    }
    Ok(minimal_wha(&p)?.algebra)
}

fn cmd_make(kind: &MakeKind) -> CliResult<Output> {
    let (h, name) = match kind {
        MakeKind::Groupoid(shape) => {
            let (g, field, name) = groupoid(shape)?;
            (groupoid_algebra(&g, field), format!("groupoid_{}", name))
        }
        MakeKind::Functions(shape) => {
            let (g, field, name) = groupoid(shape)?;
            (function_algebra(&g, field), format!("functions_{}", name))
        }
        MakeKind::Group {
            cyclic,
            symmetric,
            field,
        } => {
            let field: FieldSpec = field.parse()?;
            match (cyclic, symmetric) {
                (Some(n), None) if *n > 0 => (
                    group_algebra(&FiniteGroup::cyclic(*n), field),
                    format!("group_z{}", n),
                ),
                (None, Some(n)) if *n > 0 => (
                    group_algebra(&FiniteGroup::symmetric(*n), field),
                    format!("group_s{}", n),
                ),
                _ => return Err(usage("give exactly one of --cyclic N or --symmetric N (N > 0)")),
            }
        }
        MakeKind::Minimal { blocks, g } => (minimal(blocks, g.as_deref())?, "minimal".to_string()),
        MakeKind::Matrix { n } => {
            if *n == 0 {
                return Err(usage("n must be positive"));
            }
            (matrix_wha(*n), format!("pair{}", n))
        }
        MakeKind::Tensor { left, right } => {
            let (a, na) = load(Some(left))?;
            let (b, nb) = load(Some(right))?;
            (a.tensor_product(&b)?, format!("{}⊗{}", na, nb))
        }
        MakeKind::DyntwistHost { cyclic } => {
            if *cyclic == 0 {
                return Err(usage("order must be positive"));
            }
            let d = zoo::cyclic_dynamical_data(*cyclic)?;
            (dynamical_theta(&d)?.host, format!("dyn_host_z{}", cyclic))
        }
        MakeKind::Sweedler => (sweedler(), "sweedler".to_string()),
        MakeKind::Monoid => (idempotent_monoid_bialgebra(), "idempotent_monoid".to_string()),
    };
    Ok(Output::document(&h, &name))
}

fn cmd_validate(input: Option<&Path>) -> CliResult<Output> {
    let (h, name) = load(input)?;
    let report = validate(&h);
    let ok = report.passed();
    Ok(Output::json(
        &json!({ "name": name, "passed": ok, "checks": report.checks }),
        ok,
    ))
}

fn integrals_section(h: &WeakHopfAlgebra) -> (Value, bool) {
    let mut v = json!({
        "left_dim": integral_space(h, Side::Left).dim(),
        "right_dim": integral_space(h, Side::Right).dim(),
        "ht_dim": h.target_base().dim(),
    });
    let ok = match dual_pair(h) {
        Ok(pair) => {
            v["pair"] = json!({ "ell": sparse(&pair.ell), "lambda": sparse(&pair.lambda) });
            v["invariance"] = match invariance_check(h, &pair.lambda, None) {
                Ok(r) => json!(r.passed()),
                Err(e) => error_json(&e),
            };
            v["antipode_from_integrals"] = json!(check_antipode_from_integrals(h, &pair).is_ok());
            true
        }
        Err(e) => {
            v["pair"] = error_json(&e);
            false
        }
    };
    (v, ok)
}

fn grouplikes_section(h: &WeakHopfAlgebra) -> crate::error::Result<Value> {
    let pair = dual_pair(h)?;
    let dp = distinguished_pair(h, &pair)?;
    let subs = h.counital_subalgebras();
    let order = match antipode_order_report(h, 4) {
        Ok(r) => json!(r),
        Err(e) => error_json(&e),
    };
    Ok(json!({
        "alpha": sparse(&dp.alpha),
        "a": sparse(&dp.a),
        "alpha_trivial": is_trivial_grouplike(&h.dualize(), &dp.alpha)?.is_some(),
        "a_trivial": is_trivial_grouplike(h, &dp.a)?.is_some(),
        "self_intertwiners_dim": self_intertwiners(h, h.counit())?.dim(),
        "z_cap_hs_dim": subs.z_cap_hs.dim(),
        "dual_ht_cap_hs_dim": h.dualize().counital_subalgebras().ht_cap_hs.dim(),
        "s4_order": order,
    }))
}

fn radford_section(h: &WeakHopfAlgebra) -> crate::error::Result<(Value, bool)> {
    let reg = regularize(h)?;
    let pair = dual_pair(&reg.algebra)?;
    let dp = distinguished_pair(&reg.algebra, &pair)?;
    let check = radford_check(&reg.algebra, &dp)?;
    let relations = lambda_ell_relations(&reg.algebra, &dp)?;
    let ok = check.passed && relations.iter().all(|c| c.passed);
    let residual = match &check.witness {
        None => "0".to_string(),
        Some(w) => w.residual.clone(),
    };
    Ok((
        json!({
            "regularized": reg.algebra != *h,
            "q": sparse(&reg.q),
            "alpha": sparse(&dp.alpha),
            "a": sparse(&dp.a),
            "residual": residual,
            "check": check,
            "relations": relations,
        }),
        ok,
    ))
}

#[derive(Clone, Copy)]
struct Sections {
    integrals: bool,
    grouplikes: bool,
    radford: bool,
    traces: bool,
}

fn report(h: &WeakHopfAlgebra, s: Sections) -> (Value, bool) {
    let mut out = serde_json::Map::new();
    out.insert("dim".into(), json!(h.dim()));
    out.insert("field".into(), json!(h.field().to_string()));
    let mut ok = true;
    let mut put = |key: &str, r: crate::error::Result<(Value, bool)>| {
        let v = match r {
            Ok((v, good)) => {
                ok &= good;
                v
            }
            Err(e) => {
                ok = false;
                error_json(&e)
            }
        };
        out.insert(key.to_string(), v);
    };
    if s.integrals {
        put("integrals", Ok(integrals_section(h)));
    }
    if s.grouplikes {
        put("grouplikes", grouplikes_section(h).map(|v| (v, true)));
    }
    if s.radford {
        put("radford", radford_section(h));
    }
    if s.traces {
        put("traces", semisimplicity_report(h).map(|r| (json!(r), true)));
    }
    (Value::Object(out), ok)
}

fn cmd_report(input: Option<&Path>, mut s: Sections, dual: bool) -> CliResult<Output> {
    let (h, name) = load_valid(input)?;
    if !(s.integrals || s.grouplikes || s.radford || s.traces) {
        s = Sections {
            integrals: true,
            grouplikes: true,
            radford: true,
            traces: true,
        };
    }
    let (mut v, mut ok) = report(&h, s);
    v["name"] = json!(name);
    if dual {
        let (d, dok) = report(&h.dualize(), s);
        v["dual"] = d;
        ok &= dok;
    }
    Ok(Output::json(&v, ok))
}

fn cmd_twist(args: &TwistArgs) -> CliResult<Output> {
    let how = &args.how;
    let (h, name) = load_valid(args.input.as_deref())?;
    let (out, suffix) = if let Some(p) = &how.twist {
        let t = TwistDocument::parse(&read_text(Some(p))?)?.to_twist(&h)?;
        (twist(&h, &t)?, "twisted")
    } else if let Some(p) = &how.dynamical {
        let d = DynamicalDocument::parse(&read_text(Some(p))?)?.to_data(&h)?;
        let dt = dynamical_theta(&d)?;
        (twist(&dt.host, &dt.twist)?, "dyntwisted")
    } else if let Some(p) = &how.q {
        let q = ElementDocument::parse(&read_text(Some(p))?)?.to_element(&h)?;
        (deform_q(&h, &q)?, "deformed")
    } else {
        (regularize(&h)?.algebra, "regularized")
    };
    Ok(Output::document(&out, &format!("{}_{}", name, suffix)))
}

fn cmd_zoo(run_all: bool, as_json: bool, mutate: Option<&str>, emit: Option<&str>) -> CliResult<Output> {
    if let Some(name) = emit {
        let h = zoo::find(name).ok_or_else(|| usage(format!("no zoo member '{}'", name)))?;
        return Ok(Output::document(&h, name));
    }
    if let Some(m) = mutate {
        if !zoo::members().iter().any(|x| x.name == m) {
            return Err(usage(format!("no zoo member '{}'", m)));
        }
    }
    if !run_all {
        let names: Vec<&str> = zoo::members().iter().map(|m| m.name).collect();
        let controls: Vec<&str> = zoo::negative_controls().iter().map(|m| m.name).collect();
        return Ok(Output::json(&json!({ "members": names, "negative_controls": controls }), true));
    }
    let report = zoo::run_all(mutate);
    if as_json {
        Ok(Output::json(&report, report.passed))
    } else {
        Ok(Output {
            code: if report.passed { 0 } else { 1 },
            text: report.table(),
        })
    }
}

fn cmd_integrals(input: Option<&Path>) -> CliResult<Output> {
    let (h, _) = load_valid(input)?;
    let mut v = json!({
        "left": basis_json(&integral_space(&h, Side::Left)),
        "right": basis_json(&integral_space(&h, Side::Right)),
        "dual_left": basis_json(&dual_integral_space(&h, Side::Left)),
        "dual_right": basis_json(&dual_integral_space(&h, Side::Right)),
        "ht_dim": h.target_base().dim(),
    });
    let ok = match dual_pair(&h) {
        Ok(p) => {
            v["pair"] = json!({ "ell": sparse(&p.ell), "lambda": sparse(&p.lambda) });
            true
        }
        Err(e) => {
            v["pair"] = error_json(&e);
            false
        }
    };
    Ok(Output::json(&v, ok))
}

fn cmd_grouplike_check(input: Option<&Path>, element: &Path) -> CliResult<Output> {
    let (h, _) = load_valid(input)?;
    let g = ElementDocument::parse(&read_text(Some(element))?)?.to_element(&h)?;
    let grouplike = is_grouplike(&h, &g);
    let mut v = json!({ "grouplike": grouplike });
    if grouplike {
        v["counitals"] = json!(check_grouplike_counitals(&h, &g)?);
        match is_trivial_grouplike(&h, &g)? {
            Some(y) => {
                v["trivial"] = json!(true);
                v["y"] = sparse(&y);
            }
            None => v["trivial"] = json!(false),
        }
    }
    Ok(Output::json(&v, grouplike))
}

fn cmd_radford(input: Option<&Path>) -> CliResult<Output> {
    let (h, _) = load_valid(input)?;
    let (v, ok) = radford_section(&h)?;
    Ok(Output::json(&v, ok))
}

fn cmd_distinguished(input: Option<&Path>) -> CliResult<Output> {
    let (h, _) = load_valid(input)?;
    let pair = dual_pair(&h)?;
    let dp = distinguished_pair(&h, &pair)?;
    Ok(Output::json(
        &json!({
            "alpha": sparse(&dp.alpha),
            "a": sparse(&dp.a),
            "ell": sparse(&dp.source.ell),
            "lambda": sparse(&dp.source.lambda),
        }),
        true,
    ))
}

fn cmd_dyntwist(args: &DyntwistArgs) -> CliResult<Output> {
    let d: DynamicalTwistData = match (&args.cyclic, &args.u, &args.j) {
        (Some(n), None, None) if *n > 0 => zoo::cyclic_dynamical_data(*n)?,
        (None, Some(u), Some(j)) => {
            let (u, _) = load_valid(Some(u))?;
            DynamicalDocument::parse(&read_text(Some(j))?)?.to_data(&u)?
        }
        _ => return Err(usage("give --cyclic N (N > 0) or both --u and --j")),
    };
    if args.emit {
        let dt = dynamical_theta(&d)?;
        return Ok(Output::document(&twist(&dt.host, &dt.twist)?, "dyntwisted"));
    }
    let report = dynamical_cosemisimplicity_check(&d)?;
    let ok = report.passed();
    Ok(Output::json(&json!({ "passed": ok, "report": report }), ok))
}

fn dispatch(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Make { kind } => cmd_make(kind),
        Command::Validate { input } => cmd_validate(input.as_deref()),
        Command::Report {
            input,
            integrals,
            grouplikes,
            radford,
            traces,
            dual,
        } => cmd_report(
            input.as_deref(),
            Sections {
                integrals: *integrals,
                grouplikes: *grouplikes,
                radford: *radford,
                traces: *traces,
            },
            *dual,
        ),
        Command::Twist(args) => cmd_twist(args),
        Command::Zoo {
            run_all,
            json,
            mutate,
            emit,
        } => cmd_zoo(*run_all, *json, mutate.as_deref(), emit.as_deref()),
        Command::Integrals { input } => cmd_integrals(input.as_deref()),
        Command::Grouplike {
            action: GrouplikeCommand::Check { input, element },
        } => cmd_grouplike_check(input.as_deref(), element),
        Command::Radford { input } => cmd_radford(input.as_deref()),
        Command::Distinguished { input } => cmd_distinguished(input.as_deref()),
        Command::Dyntwist(args) => cmd_dyntwist(args),
    }
}

fn failure_outcome(f: Failure) -> Outcome {
    let payload = json!({ "error": f.kind, "message": f.message });
    Outcome {
        code: f.code,
        stdout: String::new(),
        stderr: serde_json::to_string(&payload).expect("serializes") + "\n",
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                failure_outcome(usage(text.trim_end()))
            };
        }
    };
    let out = match dispatch(&cli) {
        Ok(o) => o,
        Err(f) => return failure_outcome(f),
    };
    match &cli.out {
        None => Outcome {
            code: out.code,
            stdout: out.text,
            stderr: String::new(),
        },
        Some(p) => match std::fs::write(p, &out.text) {
            Ok(()) => Outcome {
                code: out.code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => failure_outcome(Failure {
                code: 2,
                kind: "IoError".into(),
                message: format!("{}: {}", p.display(), e),
            }),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("whopf").chain(args.iter().copied()))
    }

    #[test]
    fn make_produces_documents() {
        let o = run_args(&["make", "groupoid", "--pair", "2"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let doc = WhaDocument::parse(&o.stdout).unwrap();
        assert_eq!(doc.dim, 4);
        let o = run_args(&["make", "minimal", "--blocks", "2", "--g", "3,-1"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(WhaDocument::parse(&o.stdout).unwrap().dim, 16);
    }

    #[test]
    fn bad_usage_exits_two() {
        let o = run_args(&["make", "group"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("UsageError"));
        let o = run_args(&["frobnicate"]);
        assert_eq!(o.code, 2);
    }

    #[test]
    fn zoo_lists_members() {
        let o = run_args(&["zoo"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("dyn_host_z2"));
    }
}
