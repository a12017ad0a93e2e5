//! `resint`: verification toolkit for residual intersections of graded
//! ideals over exact fields.

use resint_cli::{corpus, job, report};

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use resint_core::en;
use resint_core::koszul::{check_gs, check_gs_minus, KoszulData};
use resint_core::residual;
use resint_core::resolve::{resolve_module, Presentation};
use resint_core::{Error, Field, MonomialOrder};

#[derive(Parser)]
#[command(
    name = "resint",
    about = "Residual intersections J = a : I over graded polynomial rings: \
             hypothesis checks and verified conclusions with exact arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Override the coefficient field: `Q` or `Fp:<prime>`.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Override the monomial order: degrevlex | lex | deglex.
    #[arg(long, global = true)]
    order: Option<String>,
    /// Override the degree budget (max S-polynomial degree).
    #[arg(long, global = true)]
    budget: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute J = a : I and report generators and invariants.
    Quotient { job: PathBuf },
    /// Betti table, regularity, projective dimension and depth of the
    /// quotient by the named ideal.
    Betti {
        job: PathBuf,
        /// Name of the ideal in the job file.
        #[arg(long, default_value = "I")]
        ideal: String,
    },
    /// Depths of the Koszul cycles and homologies of I.
    KoszulDepths { job: PathBuf },
    /// Condition checkers: SD_k, SDC_k, G_s, SCM, depth classification.
    CheckConditions {
        job: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: i64,
        /// Level; defaults to the full range r - g.
        #[arg(long)]
        t: Option<i64>,
        /// Bound for the G_s check; defaults to nvars + 1.
        #[arg(long)]
        s: Option<i64>,
    },
    /// Full residual-intersection report for (I, a), including the
    /// regularity bound.
    Residual { job: PathBuf },
    /// Canonical-module identification for (I, a).
    CanonicalCheck {
        job: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_degree: i64,
    },
    /// Height-2 pipeline: Hilbert-Burch, mapping cone, Eagon-Northcott,
    /// exact regularity.
    En { job: PathBuf },
    /// Degree combinatorics tables f(j), n(j) for given (s, k, u).
    EnTables {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        u: i64,
    },
    /// The beta(m, t) table.
    BetaTable {
        #[arg(long, default_value_t = 10)]
        m: u32,
        #[arg(long, default_value_t = 15)]
        t: u32,
    },
    /// Run the built-in example suite and emit a summary.
    Corpus {
        /// Re-run over the other coefficient field and compare invariants.
        #[arg(long)]
        certify: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((value, ok)) => {
            let text = report::to_pretty(&value);
            print!("{text}");
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            let code = exit_code_for(&e);
            let kind = match code {
                3 => "budget-exceeded",
                2 => "hypothesis-failure",
                _ => "parse-error",
            };
            let value = json!({
                "error": e.to_string(),
                "kind": kind,
                "truncated": code == 3,
            });
            let text = report::to_pretty(&value);
            print!("{text}");
            if let Some(path) = &cli.json {
                let _ = std::fs::write(path, &text);
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded(_) => 3,
        Error::NotHeightTwo { .. }
        | Error::NotPerfect { .. }
        | Error::NotContained(_)
        | Error::Precondition(_)
        | Error::Inhomogeneous(_) => 2,
        _ => 1,
    }
}

struct JobContext {
    spec: job::JobSpec,
    ring: resint_core::GradedRing,
}

fn load_job(cli: &Cli, path: &PathBuf) -> Result<JobContext, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let mut spec = job::parse_job(&text)?;
    if let Some(f) = &cli.field {
        spec.field = parse_field_flag(f)?;
    }
    if let Some(o) = &cli.order {
        spec.order = job::parse_order(o)?;
    }
    if let Some(b) = cli.budget {
        spec.budget.max_degree = b;
    }
    let ring = spec.ring()?;
    Ok(JobContext { spec, ring })
}

fn parse_field_flag(text: &str) -> Result<Field, Error> {
    if text == "Q" {
        return Ok(Field::Rationals);
    }
    if let Some(p) = text.strip_prefix("Fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Parse(format!("invalid field `{text}`")))?;
        return Field::prime(p);
    }
    Err(Error::Parse(format!(
        "invalid field `{text}`; use `Q` or `Fp:<prime>`"
    )))
}

fn order_name(order: MonomialOrder) -> &'static str {
    match order {
        MonomialOrder::DegRevLex => "degrevlex",
        MonomialOrder::Lex => "lex",
        MonomialOrder::DegLex => "deglex",
        MonomialOrder::Elim(_) => "elimination",
    }
}

fn job_header(ctx: &JobContext) -> Value {
    json!({
        "field": ctx.spec.field.to_string(),
        "ring": ctx.spec.vars,
        "order": order_name(ctx.spec.order),
        "budget": ctx.spec.budget.max_degree,
    })
}

fn dispatch(cli: &Cli) -> Result<(Value, bool), Error> {
    match &cli.command {
        Command::Quotient { job } => {
            let ctx = load_job(cli, job)?;
            let i = ctx.spec.ideal(&ctx.ring, "I")?;
            let a = ctx.spec.ideal(&ctx.ring, "a")?;
            let j = a.quotient(&i)?;
            let value = json!({
                "job": job_header(&ctx),
                "J": j.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "groebner_basis": j.groebner_basis().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "height": j.height(),
                "dim": j.dimension(),
                "is_unit": j.is_unit(),
                "ideal_hashes": {
                    "I": report::ideal_hash(&i),
                    "a": report::ideal_hash(&a),
                    "J": report::ideal_hash(&j),
                },
            });
            Ok((value, true))
        }
        Command::Betti { job, ideal } => {
            let ctx = load_job(cli, job)?;
            let i = ctx.spec.ideal(&ctx.ring, ideal)?;
            let res = resolve_module(&Presentation::cyclic(&i)?, i.budget())?;
            let mut value = report::betti_json(&res);
            let obj = value.as_object_mut().unwrap();
            obj.insert("job".into(), job_header(&ctx));
            obj.insert("ideal".into(), json!(ideal));
            obj.insert("staircase".into(), json!(res.betti.to_string()));
            Ok((value, true))
        }
        Command::KoszulDepths { job } => {
            let ctx = load_job(cli, job)?;
            let i = ctx.spec.ideal(&ctx.ring, "I")?;
            let koszul = KoszulData::new(i.generators().to_vec(), i.budget())?;
            let r = koszul.generator_count();
            let mut rows = Vec::new();
            for idx in 0..=r {
                let z = koszul.cycles(idx)?;
                let h = koszul.homology(idx)?;
                rows.push(json!({
                    "index": idx,
                    "depth_cycles": koszul.module_depth(&z)?,
                    "depth_homology": koszul.module_depth(&h)?,
                }));
            }
            let value = json!({
                "job": job_header(&ctx),
                "r": r,
                "grade": koszul.grade(),
                "rows": rows,
            });
            Ok((value, true))
        }
        Command::CheckConditions { job, k, t, s } => {
            let ctx = load_job(cli, job)?;
            let i = ctx.spec.ideal(&ctx.ring, "I")?;
            let koszul = KoszulData::new(i.generators().to_vec(), i.budget())?;
            let full = koszul.generator_count() as i64 - koszul.grade();
            let level = t.unwrap_or(full);
            let s_bound = s.unwrap_or(ctx.ring.nvars() as i64 + 1);
            let sd = koszul.check_sd(*k, level)?;
            let sdc = koszul.check_sdc(*k, level)?;
            let gs = check_gs(&i, s_bound)?;
            let gs_minus = check_gs_minus(&i, s_bound)?;
            let scm = koszul.check_scm()?;
            let ztop = koszul.classify_depth_ztop()?;
            let overall = sd.overall && sdc.overall && gs.overall && scm.overall;
            let value = json!({
                "job": job_header(&ctx),
                "SD": report::depth_report_json(&sd),
                "SDC": report::depth_report_json(&sdc),
                "Gs": report::gs_json(&gs),
                "Gs_minus": report::gs_json(&gs_minus),
                "SCM": report::scm_json(&scm),
                "depth_ztop": report::ztop_json(&ztop),
                "overall": overall,
            });
            Ok((value, overall))
        }
        Command::Residual { job } => {
            let ctx = load_job(cli, job)?;
            let i = ctx.spec.ideal(&ctx.ring, "I")?;
            let a = ctx.spec.ideal(&ctx.ring, "a")?;
            let data = residual::build_residual(&a, &i)?;
            if !data.a_was_minimal {
                eprintln!(
                    "warning: the given generators of a were not minimal; \
                     sigma(a) and the degree data use the re-minimized set"
                );
            }
            let cm = residual::verify_cm_conclusion(&data)?;
            let reg = residual::regularity_bound(&data)?;
            let canonical = residual::canonical_module_check(&data, 12)?;
            let mut value = report::residual_json(&data, &cm, &reg, Some(&canonical));
            value
                .as_object_mut()
                .unwrap()
                .insert("job".into(), job_header(&ctx));
            let ok = data.is_residual;
            Ok((value, ok))
        }
        Command::CanonicalCheck { job, max_degree } => {
            let ctx = load_job(cli, job)?;
            let i = ctx.spec.ideal(&ctx.ring, "I")?;
            let a = ctx.spec.ideal(&ctx.ring, "a")?;
            let data = residual::build_residual(&a, &i)?;
            let report_ = residual::canonical_module_check(&data, *max_degree)?;
            let ok = matches!(report_.status, residual::CanonicalStatus::Compared)
                && report_.equal != Some(false);
            let value = json!({
                "job": job_header(&ctx),
                "canonical": report::canonical_json(&report_),
            });
            Ok((value, ok))
        }
        Command::En { job } => {
            let ctx = load_job(cli, job)?;
            let i = ctx.spec.ideal(&ctx.ring, "I")?;
            let a = ctx.spec.ideal(&ctx.ring, "a")?;
            let hb = en::hilbert_burch(&i)?;
            let (reg, enc) = en::en_regularity(&i, &a)?;
            let mut exact = true;
            for kpos in 0..enc.complex.length() {
                exact &= enc.complex.homology_vanishes_after(kpos, i.budget())?;
            }
            let a_min = a.minimal_generators()?;
            let mut a_degrees: Vec<i64> = a_min.iter().map(|g| g.degree().unwrap()).collect();
            a_degrees.sort_by_key(|d| -d);
            let shape = en::EnShape::new(&hb, &a_degrees);
            let j = a.quotient(&i)?;
            let mut value = report::en_json(&reg, &shape, exact, &report::ideal_hash(&j));
            let obj = value.as_object_mut().unwrap();
            obj.insert("job".into(), job_header(&ctx));
            obj.insert(
                "hilbert_burch".into(),
                json!({
                    "generator_degrees": hb.gen_degrees,
                    "syzygy_degrees": hb.syz_degrees,
                    "sigma": hb.sigma,
                    "u": hb.u,
                    "input_was_minimal": hb.input_was_minimal,
                }),
            );
            obj.insert("tables_text".into(), json!(en_tables_text(&shape)));
            let ok = exact && reg.cm_of_height_s && reg.bound_sk_le_u;
            Ok((value, ok))
        }
        Command::EnTables { s, k, u } => {
            let lo = if *k == 0 { 0 } else { k - 1 };
            let mut rows = Vec::new();
            let mut text = String::from("  j | f_rel |        n(j)\n");
            for j in lo..=(s - 1) {
                let (f_rel, n) = en::en_count(*s, *k, *u, j)?;
                text.push_str(&format!("{j:>3} | {f_rel:>5} | {n:>11}\n"));
                rows.push(json!({ "j": j, "f_relative": f_rel, "n": n.to_string() }));
            }
            let total = en::en_alternating_sum(*s, *k, *u);
            let value = json!({
                "s": s, "k": k, "u": u,
                "rows": rows,
                "alternating_sum": total.to_string(),
                "alternating_sum_nonzero": total != 0,
                "text": text,
            });
            Ok((value, true))
        }
        Command::BetaTable { m, t } => {
            let value = report::beta_table_json(*m, *t);
            Ok((value, true))
        }
        Command::Corpus { certify } => {
            let field = match &cli.field {
                Some(f) => parse_field_flag(f)?,
                None => Field::Prime(32003),
            };
            corpus::run_corpus(field, *certify)
        }
    }
}

fn en_tables_text(shape: &en::EnShape) -> String {
    let mut text = String::from("  j |  f(j) |  n(j)\n");
    for data in &shape.per_index {
        text.push_str(&format!("{:>3} | {:>5} | {:>5}\n", data.j, data.f, data.n));
    }
    text
}
