//! The built-in example corpus and its runner. Every numeric expectation
//! recorded here was frozen from independent oracle runs (degreewise linear
//! algebra and minimal free resolutions) before being asserted.

use num_bigint::BigInt;
use serde_json::{json, Value};

use resint_core::en;
use resint_core::groebner::GradedIdeal;
use resint_core::koszul::{check_gs, KoszulData};
use resint_core::residual::{self, CanonicalStatus, ComplexShape};
use resint_core::{Budget, Error, Field, GradedRing, Polynomial};

pub const CORPUS_BUDGET: Budget = Budget::DEFAULT;

/// One height-2 pipeline entry with its frozen expectations.
pub struct H2Entry {
    pub name: &'static str,
    pub ideal: GradedIdeal,
    pub a: GradedIdeal,
    pub expected_s: usize,
    pub expected_reg: i64,
    pub expected_strict: bool,
}

fn ring(field: Field, vars: &[&str]) -> GradedRing {
    GradedRing::standard(field, vars.to_vec()).expect("valid ring")
}

fn ideal(ring: &GradedRing, gens: &[&str]) -> GradedIdeal {
    GradedIdeal::parse(ring, gens, CORPUS_BUDGET).expect("valid corpus ideal")
}

fn parse_all(ring: &GradedRing, entries: &[&str]) -> Vec<Polynomial> {
    entries
        .iter()
        .map(|s| ring.parse_poly(s).expect("valid corpus polynomial"))
        .collect()
}

/// Determinant by Laplace expansion along the first column.
fn det(ring: &GradedRing, mat: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
    if rows.is_empty() {
        return ring.one();
    }
    let mut acc = ring.zero();
    for (idx, &r) in rows.iter().enumerate() {
        let e = &mat[r][cols[0]];
        if e.is_zero() {
            continue;
        }
        let sub: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let term = e.mul(&det(ring, mat, &sub, &cols[1..]));
        acc = if idx % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Maximal minors of an `r x (r-1)` matrix of forms, one per deleted row.
fn delete_row_minors(ring: &GradedRing, flat: &[&str], rows: usize) -> Vec<Polynomial> {
    let cols = flat.len() / rows;
    let polys = parse_all(ring, flat);
    let mat: Vec<Vec<Polynomial>> = (0..rows)
        .map(|r| polys[r * cols..(r + 1) * cols].to_vec())
        .collect();
    let all_cols: Vec<usize> = (0..cols).collect();
    (0..rows)
        .map(|skip| {
            let sel: Vec<usize> = (0..rows).filter(|&r| r != skip).collect();
            det(ring, &mat, &sel, &all_cols)
        })
        .collect()
}

fn combo(ring: &GradedRing, polys: &[Polynomial], coeffs: &[i64]) -> Polynomial {
    let mut acc = ring.zero();
    for (p, &c) in polys.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.add(&p.scale(&ring.field().from_int(c)));
        }
    }
    acc
}

const MINOR_TRIPLE: [&str; 3] = ["x*z - y^2", "x^2 - y*z", "x*y - z^2"];
const MIXED_TRIPLE: [&str; 3] = ["x^3 - y^2*z", "x^2*y - y*z^2", "x*z - y^2"];
const GEN6_MINORS: [&str; 3] = ["x1*x5 - x2*x4", "x1*x6 - x3*x4", "x2*x6 - x3*x5"];

// A generic-looking 4x3 matrix of linear forms; its 3-minors are four
// cubics of height 2.
const MAT4: [&str; 12] = [
    "-2*x - y - 3*z", "-x - 3*y + 2*z", "2*x + 3*y",
    "3*x + 3*y - z", "-2*x + 3*z", "-3*x + y - 3*z",
    "-x + 3*y", "2*x + 2*y + 3*z", "-3*y",
    "-2*x + z", "-z", "-3*x + z",
];

// A generic-looking 5x4 matrix of linear forms; its 4-minors are five
// quartics of height 2.
const MAT5: [&str; 20] = [
    "-y - 3*z", "-3*x + 3*z", "-2*x + 2*y - z", "2*y - 3*z",
    "-x + y - 3*z", "-3*x + 3*y + z", "-x - y - z", "3*x - 2*y",
    "3*x + 2*y - z", "-2*x + 2*y + 3*z", "-x + 2*z", "-2*x + 2*y",
    "2*x - y + 2*z", "-y + 3*z", "-3*x - 3*y - 3*z", "-3*x + 2*z",
    "-x + y + 3*z", "z", "2*x + 2*y + z", "2*x + 2*y - 3*z",
];

/// The nine height-2 entries: r in {3, 4, 5}, s in {2, 3}, mixed generator
/// degrees, one strict-regime instance.
pub fn height_two_entries(field: Field) -> Vec<H2Entry> {
    let r3 = ring(field, &["x", "y", "z"]);
    let mut out = Vec::new();

    out.push(H2Entry {
        name: "link_2x3",
        ideal: ideal(&r3, &MINOR_TRIPLE),
        a: ideal(&r3, &MINOR_TRIPLE[..2]),
        expected_s: 2,
        expected_reg: 0,
        expected_strict: false,
    });
    out.push(H2Entry {
        name: "res3_2x3",
        ideal: ideal(&r3, &MINOR_TRIPLE),
        a: ideal(&r3, &["x*z - y^2", "x^2 - y*z", "x*y*z - z^3"]),
        expected_s: 3,
        expected_reg: 0,
        expected_strict: false,
    });
    out.push(H2Entry {
        name: "mixed_link",
        ideal: ideal(&r3, &MIXED_TRIPLE),
        a: ideal(&r3, &MIXED_TRIPLE[..2]),
        expected_s: 2,
        expected_reg: 2,
        expected_strict: false,
    });
    out.push(H2Entry {
        name: "mixed_strict",
        ideal: ideal(&r3, &MIXED_TRIPLE),
        a: ideal(&r3, &["x^3 - y^2*z", "x*z - y^2"]),
        expected_s: 2,
        expected_reg: 0,
        expected_strict: true,
    });

    let m4 = delete_row_minors(&r3, &MAT4, 4);
    let a1 = combo(&r3, &m4, &[1, 1, 0, 0]);
    let a2 = combo(&r3, &m4, &[0, 1, 1, 2]);
    let a3 = combo(&r3, &m4, &[1, 0, 2, 1]);
    let i4 = GradedIdeal::new(&r3, m4.clone(), CORPUS_BUDGET).expect("r4 minors");
    out.push(H2Entry {
        name: "quartet_cubics_s2",
        ideal: i4.clone(),
        a: GradedIdeal::new(&r3, vec![a1.clone(), a2.clone()], CORPUS_BUDGET).unwrap(),
        expected_s: 2,
        expected_reg: 1,
        expected_strict: false,
    });
    out.push(H2Entry {
        name: "quartet_cubics_s3",
        ideal: i4.clone(),
        a: GradedIdeal::new(&r3, vec![a1.clone(), a2.clone(), a3], CORPUS_BUDGET).unwrap(),
        expected_s: 3,
        expected_reg: 0,
        expected_strict: false,
    });
    let quartic = m4[2]
        .mul(&r3.parse_poly("x + 2*y").unwrap())
        .add(&m4[3].mul(&r3.parse_poly("z").unwrap()));
    out.push(H2Entry {
        name: "quartet_cubics_s3_mixed",
        ideal: i4,
        a: GradedIdeal::new(&r3, vec![a1, a2, quartic], CORPUS_BUDGET).unwrap(),
        expected_s: 3,
        expected_reg: 1,
        expected_strict: false,
    });

    let m5 = delete_row_minors(&r3, &MAT5, 5);
    let b1 = combo(&r3, &m5, &[1, 1, 0, 0, 0]);
    let b2 = combo(&r3, &m5, &[0, 0, 1, 1, 1]);
    let b3 = combo(&r3, &m5, &[1, 0, 2, 0, 1]);
    let i5 = GradedIdeal::new(&r3, m5, CORPUS_BUDGET).expect("r5 minors");
    out.push(H2Entry {
        name: "quintet_quartics_s2",
        ideal: i5.clone(),
        a: GradedIdeal::new(&r3, vec![b1.clone(), b2.clone()], CORPUS_BUDGET).unwrap(),
        expected_s: 2,
        expected_reg: 2,
        expected_strict: false,
    });
    out.push(H2Entry {
        name: "quintet_quartics_s3",
        ideal: i5,
        a: GradedIdeal::new(&r3, vec![b1, b2, b3], CORPUS_BUDGET).unwrap(),
        expected_s: 3,
        expected_reg: 1,
        expected_strict: false,
    });
    out
}

/// Geometric residuals used for the canonical-module identification: one
/// linkage (s = g) and one s = g + 1, both over six generic variables, plus
/// the three-variable link.
pub fn geometric_entries(field: Field) -> Vec<(&'static str, GradedIdeal, GradedIdeal)> {
    let r3 = ring(field, &["x", "y", "z"]);
    let r6 = ring(field, &["x1", "x2", "x3", "x4", "x5", "x6"]);
    vec![
        (
            "link_2x3",
            ideal(&r3, &MINOR_TRIPLE),
            ideal(&r3, &MINOR_TRIPLE[..2]),
        ),
        (
            "gen6_link",
            ideal(&r6, &GEN6_MINORS),
            ideal(&r6, &GEN6_MINORS[..2]),
        ),
        (
            "gen6_s3",
            ideal(&r6, &GEN6_MINORS),
            ideal(
                &r6,
                &[
                    "x1*x5 - x2*x4",
                    "x1*x6 - x3*x4",
                    "x1*x2*x6 - x1*x3*x5 + x6*x2*x6 - x6*x3*x5",
                ],
            ),
        ),
    ]
}

/// Complete intersections and the determinantal examples used by the
/// condition-checker criteria.
pub struct ConditionFixtures {
    pub ci: KoszulData,
    pub ci_big: KoszulData,
    pub minor_triple: KoszulData,
    pub gen6: KoszulData,
}

pub fn condition_fixtures(field: Field) -> ConditionFixtures {
    let r3 = ring(field, &["x", "y", "z"]);
    let r6 = ring(field, &["x1", "x2", "x3", "x4", "x5", "x6"]);
    ConditionFixtures {
        ci: KoszulData::new(parse_all(&r3, &["x", "y"]), CORPUS_BUDGET).unwrap(),
        ci_big: KoszulData::new(parse_all(&r3, &["x^2", "y^3", "z^4"]), CORPUS_BUDGET).unwrap(),
        minor_triple: KoszulData::new(parse_all(&r3, &MINOR_TRIPLE), CORPUS_BUDGET).unwrap(),
        gen6: KoszulData::new(parse_all(&r6, &GEN6_MINORS), CORPUS_BUDGET).unwrap(),
    }
}

/// Runs the full built-in suite and returns the summary JSON plus the
/// overall pass flag.
pub fn run_corpus(field: Field, certify: bool) -> Result<(Value, bool), Error> {
    let mut sections = serde_json::Map::new();
    let mut all_pass = true;

    // Beta table: zero below the diagonal, positive on and above it.
    {
        let mut ok = true;
        for m in 1..=10u32 {
            for t in 0..=15u32 {
                let b = en::beta(m, t);
                let expected_zero = t <= m - 1;
                if expected_zero != (b == BigInt::from(0)) {
                    ok = false;
                }
                if !expected_zero && b <= BigInt::from(0) {
                    ok = false;
                }
            }
        }
        all_pass &= ok;
        sections.insert("beta_table".into(), json!({ "pass": ok }));
    }

    // Twist bookkeeping sweep.
    {
        let mut ok = true;
        for r in 1..=8usize {
            for g in 1..=r as i64 {
                for s in g as usize..=8 {
                    let shape = ComplexShape::build(r, g, s)?;
                    for (i, &beg) in shape.beg_total.iter().enumerate() {
                        ok &= beg == ComplexShape::beg_closed_formula(r, g, s, i as i64);
                        ok &= shape.max_twist[i] == i as i64;
                    }
                }
            }
        }
        all_pass &= ok;
        sections.insert("complex_shapes".into(), json!({ "pass": ok }));
    }

    // Height-2 pipeline.
    {
        let mut entries = Vec::new();
        let mut ok = true;
        for entry in height_two_entries(field) {
            let (reg, enc) = en::en_regularity(&entry.ideal, &entry.a)?;
            let mut exact = true;
            for k in 0..enc.complex.length() {
                exact &= enc.complex.homology_vanishes_after(k, CORPUS_BUDGET)?;
            }
            // H_0 of the complex is R/(a : I) at Hilbert-function level.
            let j = entry.a.quotient(&entry.ideal)?;
            let mut h0_ok = enc.minors_ideal.equals(&j)?;
            for delta in 0..=12 {
                h0_ok &= enc.minors_ideal.quotient_ring_piece_dim(delta)
                    == j.quotient_ring_piece_dim(delta);
            }
            let formula_ok = reg.actual == reg.predicted_general
                && reg.actual == reg.actual_en
                && reg.s == entry.expected_s
                && reg.actual == entry.expected_reg
                && reg.cm_of_height_s
                && reg.bound_sk_le_u
                && reg.strict_regime == entry.expected_strict;
            let strict_ok = if reg.strict_regime {
                let rhs = reg.sigma_a - (reg.s as i64 - 1) * reg.beg_i - reg.s as i64;
                reg.actual < rhs
            } else {
                true
            };
            let pass = exact && h0_ok && formula_ok && strict_ok;
            ok &= pass;
            entries.push(json!({
                "name": entry.name,
                "s": reg.s,
                "k": reg.k,
                "u": reg.u,
                "sigma_a": reg.sigma_a,
                "reg": reg.actual,
                "predicted": reg.predicted_general,
                "strict_regime": reg.strict_regime,
                "en_exact": exact,
                "h0_matches": h0_ok,
                "pass": pass,
            }));
        }
        all_pass &= ok;
        sections.insert(
            "height_two".into(),
            json!({ "entries": entries, "pass": ok }),
        );
    }

    // Linkage equality (the 2x3 link).
    {
        let r3 = ring(field, &["x", "y", "z"]);
        let i = ideal(&r3, &MINOR_TRIPLE);
        let a = ideal(&r3, &MINOR_TRIPLE[..2]);
        let data = residual::build_residual(&a, &i)?;
        let rb = residual::regularity_bound(&data)?;
        let ok = rb.bound == Some(0) && rb.actual == Some(0) && rb.tight == Some(true);
        all_pass &= ok;
        sections.insert(
            "linkage_equality".into(),
            json!({
                "bound": rb.bound,
                "actual": rb.actual,
                "tight": rb.tight,
                "pass": ok,
            }),
        );
    }

    // Condition checkers.
    {
        let fx = condition_fixtures(field);
        let mut ok = true;
        for k in [0i64, 1] {
            for t in 0..=3 {
                ok &= fx.ci.check_sd(k, t)?.overall;
                ok &= fx.ci.check_sdc(k, t)?.overall;
                ok &= fx.ci_big.check_sd(k, t)?.overall;
                ok &= fx.ci_big.check_sdc(k, t)?.overall;
            }
        }
        for s in 1..=6 {
            ok &= check_gs(fx.ci.ideal(), s)?.overall;
            ok &= check_gs(fx.ci_big.ideal(), s)?.overall;
        }
        ok &= fx.minor_triple.check_scm()?.overall;
        let ztop = fx.gen6.classify_depth_ztop()?;
        // CM non-complete-intersection case in six variables:
        // depth Z_{r-g} = d - g + 2 = 6.
        ok &= ztop.expected == Some(6) && ztop.matches == Some(true);
        all_pass &= ok;
        sections.insert(
            "conditions".into(),
            json!({ "ztop_depth": ztop.depth, "pass": ok }),
        );
    }

    // Canonical module identification.
    {
        let mut entries = Vec::new();
        let mut ok = true;
        for (name, i, a) in geometric_entries(field) {
            let data = residual::build_residual(&a, &i)?;
            let report = residual::canonical_module_check(&data, 12)?;
            let pass =
                report.status == CanonicalStatus::Compared && report.equal == Some(true);
            ok &= pass;
            entries.push(json!({
                "name": name,
                "s": data.s,
                "g": data.g,
                "geometric": data.is_geometric,
                "equal": report.equal,
                "pass": pass,
            }));
        }
        all_pass &= ok;
        sections.insert(
            "canonical_module".into(),
            json!({ "entries": entries, "pass": ok }),
        );
    }

    // Field cross-check: key integer invariants agree between F_p and Q.
    if certify {
        let other = match field {
            Field::Rationals => Field::Prime(32003),
            Field::Prime(_) => Field::Rationals,
        };
        let mut ok = true;
        let mine = height_two_entries(field);
        let theirs = height_two_entries(other);
        let mut rows = Vec::new();
        for (e1, e2) in mine.iter().zip(&theirs) {
            let (r1, _) = en::en_regularity(&e1.ideal, &e1.a)?;
            let (r2, _) = en::en_regularity(&e2.ideal, &e2.a)?;
            let same = r1 == r2;
            ok &= same;
            rows.push(json!({ "name": e1.name, "agree": same }));
        }
        all_pass &= ok;
        sections.insert(
            "field_consistency".into(),
            json!({ "entries": rows, "other_field": other.to_string(), "pass": ok }),
        );
    }

    sections.insert("pass".into(), json!(all_pass));
    sections.insert("field".into(), json!(field.to_string()));
    Ok((Value::Object(sections), all_pass))
}
