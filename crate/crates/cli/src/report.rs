//! Deterministic JSON report builders. Maps are serde_json objects backed
//! by ordered maps, so identical inputs serialize byte-identically; no
//! timestamps anywhere.

use serde_json::{json, Value};

use resint_core::en::{EnRegularity, EnShape};
use resint_core::groebner::GradedIdeal;
use resint_core::koszul::{DepthReport, GsReport, ScmReport, ZtopReport};
use resint_core::residual::{CanonicalReport, CanonicalStatus, CmReport, RegularityReport, ResidualData};
use resint_core::resolve::Resolved;

/// FNV-1a over the canonical generator display; stable across runs.
pub fn ideal_hash(ideal: &GradedIdeal) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for g in ideal.generators() {
        for b in format!("{g};").bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    format!("{h:016x}")
}

pub fn depth_report_json(report: &DepthReport) -> Value {
    json!({
        "condition": report.kind.label(),
        "k": report.k,
        "level": report.level,
        "rows": report.rows.iter().map(|r| json!({
            "index": r.index,
            "depth": r.depth,
            "threshold": r.threshold,
            "pass": r.pass,
        })).collect::<Vec<_>>(),
        "overall": report.overall,
    })
}

pub fn scm_json(report: &ScmReport) -> Value {
    json!({
        "rows": report.rows.iter().map(|r| json!({
            "index": r.index,
            "is_zero": r.is_zero,
            "depth": r.depth,
            "dim": r.dim,
            "cohen_macaulay": r.cohen_macaulay,
        })).collect::<Vec<_>>(),
        "overall": report.overall,
    })
}

pub fn gs_json(report: &GsReport) -> Value {
    json!({
        "s": report.s,
        "rows": report.rows.iter().map(|r| json!({
            "fitting_index": r.fitting_index,
            "height": r.height,
            "required": r.required,
            "pass": r.pass,
        })).collect::<Vec<_>>(),
        "overall": report.overall,
    })
}

pub fn ztop_json(report: &ZtopReport) -> Value {
    json!({
        "depth": report.depth,
        "case": report.case.label(),
        "expected": report.expected,
        "matches": report.matches,
    })
}

pub fn betti_json(res: &Resolved) -> Value {
    json!({
        "zero_module": res.is_zero,
        "table": res.betti.entries.iter().map(|(&(i, j), &mult)| json!({
            "i": i, "j": j, "beta": mult,
        })).collect::<Vec<_>>(),
        "regularity": if res.is_zero { Value::Null } else { json!(res.regularity) },
        "projective_dimension": res.projective_dimension,
        "depth": if res.is_zero { Value::Null } else { json!(res.depth) },
        "dimension": if res.is_zero { Value::Null } else { json!(res.dimension) },
        "cohen_macaulay": res.is_cohen_macaulay(),
    })
}

pub fn canonical_json(report: &CanonicalReport) -> Value {
    let status = match &report.status {
        CanonicalStatus::Compared => json!("compared"),
        CanonicalStatus::Inconclusive(reason) => json!(format!("inconclusive: {reason}")),
    };
    json!({
        "status": status,
        "equal": report.equal,
        "first_discrepancy": report.first_discrepancy.map(|(d, l, r)| json!({
            "degree": d,
            "lhs": l.to_string(),
            "rhs": r.to_string(),
        })),
        "window": report.window.map(|(lo, hi)| json!([lo, hi])),
    })
}

pub fn residual_json(
    data: &ResidualData,
    cm: &CmReport,
    reg: &RegularityReport,
    canonical: Option<&CanonicalReport>,
) -> Value {
    json!({
        "ideal_hashes": {
            "I": ideal_hash(&data.ideal),
            "a": ideal_hash(&data.a),
            "J": ideal_hash(&data.j),
        },
        "s": data.s,
        "g": data.g,
        "sigma_a": data.sigma_a,
        "beg_I_mod_a": data.beg_i_mod_a,
        "generator_degrees": {
            "I": data.gen_degrees,
            "a": data.a_degrees,
        },
        "flags": {
            "trivial": data.trivial,
            "is_residual": data.is_residual,
            "is_geometric": data.is_geometric,
            "a_was_minimal": data.a_was_minimal,
            "Gs": data.gs.overall,
            "Gs_minus": data.gs_minus.overall,
            "SD0": data.sd0.overall,
            "SD1": data.sd1.overall,
            "SDC1": data.sdc1.overall,
            "SCM": data.scm.overall,
            "local_mu_route": data.local_mu_route.label(),
        },
        "checks": {
            "Gs": gs_json(&data.gs),
            "SD1": depth_report_json(&data.sd1),
            "SDC1": depth_report_json(&data.sdc1),
            "SCM": scm_json(&data.scm),
        },
        "reg_bound": reg.bound,
        "reg_actual": reg.actual,
        "reg_holds": reg.holds,
        "tight": reg.tight,
        "cm": cm.cohen_macaulay,
        "cm_hypotheses": cm.hypotheses.label(),
        "canonical_match": canonical.map(canonical_json),
    })
}

pub fn en_json(reg: &EnRegularity, shape: &EnShape, exact: bool, j_hash: &str) -> Value {
    json!({
        "s": reg.s,
        "k": reg.k,
        "u": reg.u,
        "sigma_a": reg.sigma_a,
        "beg_I": reg.beg_i,
        "beg_I_mod_a": reg.beg_i_mod_a,
        "c_degrees": shape.c_degrees,
        "f": shape.per_index.iter().map(|d| d.f).collect::<Vec<_>>(),
        "n": shape.per_index.iter().map(|d| d.n).collect::<Vec<_>>(),
        "predicted_minimal_degree_formula": reg.predicted_min_degree,
        "predicted_general_formula": reg.predicted_general,
        "reg_actual": reg.actual,
        "reg_from_en_complex": reg.actual_en,
        "cm_of_height_s": reg.cm_of_height_s,
        "sk_le_u": reg.bound_sk_le_u,
        "strict_regime": reg.strict_regime,
        "en_complex_exact": exact,
        "ideal_hash_J": j_hash,
    })
}

pub fn beta_table_json(m_max: u32, t_max: u32) -> Value {
    let mut rows = Vec::new();
    for m in 1..=m_max {
        for t in 0..=t_max {
            rows.push(json!({
                "m": m,
                "t": t,
                "beta": resint_core::en::beta(m, t).to_string(),
            }));
        }
    }
    json!({ "m_max": m_max, "t_max": t_max, "values": rows })
}

/// Pretty, stable serialization used for all report output.
pub fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
