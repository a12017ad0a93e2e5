//! Corpus-wide structural invariants, checked exactly on every entry.

use resint_cli::corpus::{geometric_entries, height_two_entries, CORPUS_BUDGET};
use resint_core::en::{self, EnShape};
use resint_core::groebner::GradedIdeal;
use resint_core::koszul::KoszulData;
use resint_core::residual;
use resint_core::resolve::{resolve_module, Presentation};
use resint_core::Field;

const FIELD: Field = Field::Prime(32003);

fn all_pairs() -> Vec<(&'static str, GradedIdeal, GradedIdeal)> {
    let mut pairs: Vec<(&str, _, _)> = Vec::new();
    for e in height_two_entries(FIELD) {
        pairs.push((e.name, e.ideal, e.a));
    }
    for (name, i, a) in geometric_entries(FIELD) {
        if pairs.iter().all(|(n, _, _)| *n != name) {
            pairs.push((name, i, a));
        }
    }
    pairs
}

/// Auslander-Buchsbaum, Hilbert-series agreement, and the generator-degree
/// lower bound for regularity, on every corpus quotient ring.
#[test]
fn resolution_invariants_on_corpus() {
    for (name, ideal, _) in all_pairs() {
        let n = ideal.ring().nvars() as i64;
        let res = resolve_module(&Presentation::cyclic(&ideal).unwrap(), CORPUS_BUDGET).unwrap();
        assert!(res.complex.verify().is_ok(), "{name}: d∘d != 0");
        assert!(res.complex.is_minimal(), "{name}: unit entry survived");
        assert_eq!(
            res.depth + res.projective_dimension as i64,
            n,
            "{name}: Auslander-Buchsbaum"
        );
        assert_eq!(
            &res.complex.hilbert_series(),
            ideal.hilbert_series(),
            "{name}: resolution vs initial-ideal Hilbert series"
        );
        // Dimension through two routes: the alternating numerator of the
        // resolution and the initial-ideal series.
        assert_eq!(res.dimension, ideal.dimension(), "{name}: dimension routes");
        if res.projective_dimension >= 1 {
            let maxdeg = ideal
                .generators()
                .iter()
                .filter_map(|g| g.degree())
                .max()
                .unwrap();
            assert!(
                res.regularity >= maxdeg - 1,
                "{name}: regularity lower bound"
            );
        }
    }
}

/// Koszul invariants: vanishing above r - g, the H_0 Hilbert function, the
/// depth formula for high cycles, and the alternating rank sum.
#[test]
fn koszul_invariants_on_corpus() {
    for (name, ideal, _) in all_pairs() {
        if ideal.ring().nvars() > 3 {
            continue; // the six-variable entries are covered separately
        }
        let k = KoszulData::new(ideal.generators().to_vec(), CORPUS_BUDGET).unwrap();
        let r = k.generator_count() as i64;
        let g = k.grade();
        let d = k.ambient_dim();
        let alt: i64 = (0..=r)
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                sign * k.rank(i as usize) as i64
            })
            .sum();
        assert_eq!(alt, 0, "{name}: Euler characteristic of ranks");
        for i in (r - g + 1)..=(r - 1) {
            if i < 1 {
                continue;
            }
            let z = k.cycles(i as usize).unwrap();
            let depth = k.module_depth(&z).unwrap();
            assert_eq!(
                depth,
                Some(d - r + i + 1),
                "{name}: depth Z_{i} formula"
            );
        }
        for i in (r - g + 1)..=r {
            let h = k.homology(i as usize).unwrap();
            assert!(
                resolve_module(&h, CORPUS_BUDGET).unwrap().is_zero,
                "{name}: H_{i} should vanish above r - g"
            );
        }
        let h0 = k.homology(0).unwrap();
        let degrees: Vec<i64> = (0..=8).collect();
        let dims = h0.piece_dims(&degrees, CORPUS_BUDGET).unwrap();
        for (idx, &delta) in degrees.iter().enumerate() {
            assert_eq!(
                dims[idx],
                ideal.quotient_ring_piece_dim(delta),
                "{name}: H_0 Hilbert function at degree {delta}"
            );
        }
    }
}

/// Residual containments, the geometric intersection identity, and the
/// regularity bound on every verified entry.
#[test]
fn residual_invariants_on_corpus() {
    for (name, ideal, a) in all_pairs() {
        let data = residual::build_residual(&a, &ideal).unwrap();
        // a ⊆ J and J·I ⊆ a, exactly.
        assert!(data.j.contains_ideal(&data.a).unwrap(), "{name}: a ⊆ J");
        let ji = data.j.product(&data.ideal).unwrap();
        assert!(data.a.contains_ideal(&ji).unwrap(), "{name}: J·I ⊆ a");
        if data.is_geometric {
            let meet = data.ideal.intersect(&data.j).unwrap();
            for delta in 0..=6 {
                assert_eq!(
                    meet.piece_dim(delta),
                    data.a.piece_dim(delta),
                    "{name}: (I ∩ J)_{delta} = a_{delta}"
                );
            }
        }
        if data.is_residual && !data.trivial {
            let reg = residual::regularity_bound(&data).unwrap();
            if data.sd1.overall {
                assert_eq!(reg.holds, Some(true), "{name}: regularity bound violated");
            }
        }
    }
}

/// The closed-form count n(j) matches the top-degree multiplicity of the
/// constructed twist multiset, and the tie-break between equal b- and
/// a-degrees does not change f or n.
#[test]
fn en_shape_counts_on_corpus() {
    for entry in height_two_entries(FIELD) {
        let hb = en::hilbert_burch(&entry.ideal).unwrap();
        let mut a_degrees: Vec<i64> = entry
            .a
            .minimal_generators()
            .unwrap()
            .iter()
            .map(|g| g.degree().unwrap())
            .collect();
        a_degrees.sort_by_key(|d| -d);
        let shape = EnShape::new(&hb, &a_degrees);
        let (s, k, u) = (shape.s as i64, shape.k as i64, shape.u as i64);
        let lo = if k == 0 { 0 } else { k - 1 };
        for data in &shape.per_index {
            let j = data.j as i64;
            assert_eq!(data.f, shape.f_closed(data.j), "{}: f({j})", entry.name);
            if j >= lo {
                let (_, n) = en::en_count(s, k, u, j).unwrap();
                assert_eq!(n as usize, data.n, "{}: n({j})", entry.name);
            }
        }
        // f is strictly increasing before k-1 and flat afterwards.
        for w in shape.per_index.windows(2) {
            let j = w[0].j as i64;
            if j < k - 1 {
                assert!(w[0].f < w[1].f, "{}: strict increase at {j}", entry.name);
            } else {
                assert_eq!(w[0].f, w[1].f, "{}: flat at {j}", entry.name);
            }
        }
    }
}

/// Squares of the minor ideal: the Groebner graded pieces of I^2 match the
/// brute-force rank computation, and the generic six-variable minors span a
/// three-dimensional quadric space.
#[test]
fn power_and_piece_dims_against_oracle() {
    let entries = height_two_entries(FIELD);
    let ideal = &entries[0].ideal;
    let square = ideal.power(2).unwrap();
    assert_eq!(square.generators().len(), 6);
    for delta in 0..=6 {
        assert_eq!(
            square.piece_dim(delta),
            resint_oracle::piece_dim(ideal.ring(), square.generators(), delta) as i128,
            "I^2 piece at degree {delta}"
        );
    }
    let (_, gen6, _) = geometric_entries(FIELD).into_iter().nth(1).unwrap();
    assert_eq!(gen6.piece_dim(2), 3);
}

/// Membership through the Groebner normal form agrees with the
/// linear-algebra membership oracle on probe elements up to degree 6.
#[test]
fn membership_oracle_on_corpus() {
    for (name, ideal, a) in all_pairs() {
        let ring = ideal.ring().clone();
        if ring.nvars() > 3 {
            continue;
        }
        let mut probes = Vec::new();
        for g in ideal.generators() {
            probes.push(g.clone());
            probes.push(g.mul(&ring.var(0)));
        }
        for g in a.generators() {
            probes.push(g.add(&ideal.generators()[0]));
        }
        probes.push(ring.parse_poly("x^2 + y^2 + z^2").unwrap());
        probes.push(ring.var(2).pow(3));
        for p in probes {
            if p.degree().unwrap_or(0) > 6 || !p.is_homogeneous() {
                continue;
            }
            assert_eq!(
                ideal.contains(&p).unwrap(),
                resint_oracle::is_member(&ring, ideal.generators(), &p),
                "{name}: membership of {p}"
            );
        }
    }
}

/// The refined strict-regime prediction applies to the mixed strict entry
/// and matches the measured regularity; the corpus therefore covers it.
#[test]
fn refined_strict_case_has_corpus_coverage() {
    let mut covered = false;
    for entry in height_two_entries(FIELD) {
        let hb = en::hilbert_burch(&entry.ideal).unwrap();
        let mut a_degrees: Vec<i64> = entry
            .a
            .minimal_generators()
            .unwrap()
            .iter()
            .map(|g| g.degree().unwrap())
            .collect();
        a_degrees.sort_by_key(|d| -d);
        if let Some(predicted) = en::refined_strict_prediction(&hb.gen_degrees, &a_degrees) {
            let (reg, _) = en::en_regularity(&entry.ideal, &entry.a).unwrap();
            assert!(reg.strict_regime, "{}: refined case outside strict regime", entry.name);
            assert_eq!(predicted, reg.actual, "{}: refined prediction", entry.name);
            covered = true;
        }
    }
    assert!(covered, "no corpus entry exercises the refined strict case");
}
