//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Every assertion is exact integer equality, no tolerances.

use num_bigint::BigInt;
use num_traits::Zero;

use resint_cli::corpus::{
    condition_fixtures, geometric_entries, height_two_entries, CORPUS_BUDGET,
};
use resint_core::en;
use resint_core::koszul::check_gs;
use resint_core::residual::{self, CanonicalStatus, ComplexShape};
use resint_core::resolve::{resolve_module, Presentation};
use resint_core::Field;

const FIELD: Field = Field::Prime(32003);

fn verdict(criterion: &str, pass: bool) {
    println!(
        "{} criterion {criterion}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed");
}

/// beta(m, t) = 0 for t <= m-1 and > 0 for m <= t <= 15, for m up to 10.
#[test]
fn criterion_1_beta_table() {
    let mut pass = true;
    for m in 1..=10u32 {
        for t in 0..=15u32 {
            let b = en::beta(m, t);
            if t <= m - 1 {
                pass &= b.is_zero();
            } else {
                pass &= b > BigInt::zero();
            }
        }
    }
    verdict("1 (beta table vanishing/positivity)", pass);
}

/// The twist-level construction of the total complex reproduces the closed
/// beg formula for all 1 <= g <= r <= 8, g <= s <= 8; pure integers.
#[test]
fn criterion_2_beg_bookkeeping() {
    let mut pass = true;
    for r in 1..=8usize {
        for g in 1..=r as i64 {
            for s in g as usize..=8 {
                let shape = ComplexShape::build(r, g, s).unwrap();
                for (i, &beg) in shape.beg_total.iter().enumerate() {
                    pass &= beg == ComplexShape::beg_closed_formula(r, g, s, i as i64);
                    // The biggest twist magnitude in term i is i.
                    pass &= shape.max_twist[i] == i as i64;
                }
            }
        }
    }
    verdict("2 (beg(D_i) bookkeeping, all r, g, s <= 8)", pass);
}

/// Linkage equality for the 2x3 link: reg(R/J) from the minimal free
/// resolution equals sigma(a) - (s-g+1) beg(I/a) - s exactly. The ground
/// truth reg(R/J) = 0 was frozen from the resolution oracle.
#[test]
fn criterion_3_linkage_equality() {
    let entry = &height_two_entries(FIELD)[0];
    assert_eq!(entry.name, "link_2x3");
    let data = residual::build_residual(&entry.a, &entry.ideal).unwrap();
    let reg = residual::regularity_bound(&data).unwrap();
    let resolved =
        resolve_module(&Presentation::cyclic(&data.j).unwrap(), CORPUS_BUDGET).unwrap();
    let frozen_reg = 0i64;
    let pass = resolved.regularity == frozen_reg
        && reg.actual == Some(frozen_reg)
        && reg.bound == Some(frozen_reg)
        && data.sigma_a - (data.s as i64 - data.g + 1) * data.beg_i_mod_a.unwrap()
            - data.s as i64
            == frozen_reg;
    verdict("3 (linkage equality on the 2x3 link)", pass);
}

/// Height-2 corpus, nine instances spanning r in {3,4,5}, s in {2,3}:
/// (a) R/J CM of height s, (b) s-k <= u, (c) regularity equals the general
/// formula exactly, (d) strict inequality in the s-k = u regime.
#[test]
fn criterion_4_height_two_corpus() {
    let entries = height_two_entries(FIELD);
    assert!(entries.len() >= 6);
    let mut pass = true;
    let mut seen_strict = false;
    for entry in &entries {
        let (reg, _) = en::en_regularity(&entry.ideal, &entry.a).unwrap();
        let a = reg.cm_of_height_s;
        let b = reg.bound_sk_le_u;
        let c = reg.actual == reg.predicted_general
            && reg.actual == entry.expected_reg
            && reg.actual == reg.actual_en;
        let mut d = true;
        if reg.strict_regime {
            seen_strict = true;
            let rhs = reg.sigma_a - (reg.s as i64 - 1) * reg.beg_i - reg.s as i64;
            d = reg.actual < rhs;
        }
        let entry_pass = a && b && c && d && reg.s == entry.expected_s;
        if !entry_pass {
            println!("  entry {} failed: {reg:?}", entry.name);
        }
        pass &= entry_pass;
    }
    pass &= seen_strict;
    verdict("4 (height-2 corpus: CM, s-k <= u, exact regularity, strict regime)", pass);
}

/// The Eagon-Northcott complex: differentials square to zero, higher
/// homology vanishes (syzygy computation), and H_0 matches R/(a : I) at
/// Hilbert-function level up to degree 12.
#[test]
fn criterion_5_en_exactness() {
    let mut pass = true;
    for entry in height_two_entries(FIELD) {
        let (_, enc) = en::en_regularity(&entry.ideal, &entry.a).unwrap();
        pass &= enc.complex.verify().is_ok();
        for k in 0..enc.complex.length() {
            pass &= enc
                .complex
                .homology_vanishes_after(k, CORPUS_BUDGET)
                .unwrap();
        }
        let j = entry.a.quotient(&entry.ideal).unwrap();
        pass &= enc.minors_ideal.equals(&j).unwrap();
        for delta in 0..=12 {
            pass &= enc.minors_ideal.quotient_ring_piece_dim(delta)
                == j.quotient_ring_piece_dim(delta);
        }
    }
    verdict("5 (Eagon-Northcott exactness and H_0 identification)", pass);
}

/// Complete intersections pass SD_k and SDC_k for k <= 1 at every level and
/// G_s for all s; the minor triple is strongly CM; and in six generic
/// variables depth Z_{r-g} = d - g + 2.
#[test]
fn criterion_6_condition_checkers() {
    let fx = condition_fixtures(FIELD);
    let mut pass = true;
    for k in [0i64, 1] {
        for t in 0..=5 {
            pass &= fx.ci.check_sd(k, t).unwrap().overall;
            pass &= fx.ci.check_sdc(k, t).unwrap().overall;
            pass &= fx.ci_big.check_sd(k, t).unwrap().overall;
            pass &= fx.ci_big.check_sdc(k, t).unwrap().overall;
        }
    }
    for s in 1..=8 {
        pass &= check_gs(fx.ci.ideal(), s).unwrap().overall;
        pass &= check_gs(fx.ci_big.ideal(), s).unwrap().overall;
    }
    pass &= fx.minor_triple.check_scm().unwrap().overall;
    let ztop = fx.gen6.classify_depth_ztop().unwrap();
    let d = 6i64;
    let g = fx.gen6.grade();
    pass &= ztop.expected == Some(d - g + 2) && ztop.matches == Some(true);
    verdict("6 (condition checkers: CI, SCM, depth classification)", pass);
}

/// Canonical-module identification on geometric entries including one with
/// s = g and one with s = g + 1: Hilbert functions of Ext^s(R/J, R)(b) and
/// ((I^{s-g+1}+J)/J)(b + sigma(a)) agree up to degree 12, exactly.
#[test]
fn criterion_7_canonical_module() {
    let mut pass = true;
    let mut seen_link = false;
    let mut seen_plus_one = false;
    for (name, ideal, a) in geometric_entries(FIELD) {
        let data = residual::build_residual(&a, &ideal).unwrap();
        if data.s as i64 == data.g {
            seen_link = true;
        }
        if data.s as i64 == data.g + 1 {
            seen_plus_one = true;
        }
        let report = residual::canonical_module_check(&data, 12).unwrap();
        let ok = data.is_geometric
            && data.gs.overall
            && data.scm.overall
            && report.status == CanonicalStatus::Compared
            && report.equal == Some(true);
        if !ok {
            println!("  entry {name} failed: {report:?}");
        }
        pass &= ok;
    }
    pass &= seen_link && seen_plus_one;
    verdict("7 (canonical module identification, s = g and s = g + 1)", pass);
}

/// The Groebner ideal quotient agrees with the brute-force degreewise
/// linear-algebra quotient on every corpus pair, up to degree 6: equal
/// piece dimensions, and every oracle basis vector is a member.
#[test]
fn criterion_8_quotient_oracle() {
    let mut pass = true;
    let mut pairs: Vec<(&str, _, _)> = Vec::new();
    for entry in height_two_entries(FIELD) {
        pairs.push((entry.name, entry.ideal, entry.a));
    }
    for (name, ideal, a) in geometric_entries(FIELD) {
        pairs.push((name, ideal, a));
    }
    for (name, ideal, a) in &pairs {
        let ring = ideal.ring().clone();
        let j = a.quotient(ideal).unwrap();
        for delta in 0..=6 {
            let (oracle_dim, oracle_basis) = resint_oracle::quotient_piece(
                &ring,
                a.generators(),
                ideal.generators(),
                delta,
            );
            let gb_dim = j.piece_dim(delta);
            let dims_ok = oracle_dim as i128 == gb_dim;
            let members_ok = oracle_basis
                .iter()
                .all(|p| j.contains(p).unwrap());
            if !(dims_ok && members_ok) {
                println!(
                    "  pair {name} degree {delta}: oracle {oracle_dim}, groebner {gb_dim}"
                );
            }
            pass &= dims_ok && members_ok;
        }
    }
    verdict("8 (quotient oracle equivalence up to degree 6)", pass);
}
