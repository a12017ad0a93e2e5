//! Fitting ideals are invariant under row operations on the presentation
//! matrix (tested via mutual membership of generators).

use resint_core::groebner::{fitting_ideal, GradedIdeal};
use resint_core::resolve::GradedMap;
use resint_core::{Budget, Field, GradedRing};

#[test]
fn fitting_invariant_under_row_operations() {
    let ring = GradedRing::standard(Field::Rationals, vec!["x", "y", "z"]).unwrap();
    let i = GradedIdeal::parse(
        &ring,
        &["x*z - y^2", "x^2 - y*z", "x*y - z^2"],
        Budget::DEFAULT,
    )
    .unwrap();
    let row = GradedMap::row_of_polys(&ring, i.generators()).unwrap();
    let syz = row.syzygy_map(Budget::DEFAULT).unwrap();

    // Row-operated variant: swap rows 0 and 2, then add 3 * row 0 to row 1
    // (all target twists agree, so these are graded operations).
    let mut entries: Vec<Vec<_>> = syz.entries().to_vec();
    entries.swap(0, 2);
    let three = ring.parse_poly("3").unwrap();
    for j in 0..entries[0].len() {
        let add = entries[0][j].mul(&three);
        entries[1][j] = entries[1][j].add(&add);
    }
    let altered = GradedMap::new(
        &ring,
        syz.source_twists().to_vec(),
        syz.target_twists().to_vec(),
        entries,
    )
    .unwrap();

    for fit_index in 0..=3usize {
        let a = fitting_ideal(&syz, fit_index, Budget::DEFAULT).unwrap();
        let b = fitting_ideal(&altered, fit_index, Budget::DEFAULT).unwrap();
        assert!(
            a.equals(&b).unwrap(),
            "Fitt_{fit_index} changed under row operations"
        );
    }
}

#[test]
fn fitting_degenerate_conventions() {
    let ring = GradedRing::standard(Field::Rationals, vec!["x", "y", "z"]).unwrap();
    let x = ring.parse_poly("x").unwrap();
    let psi = GradedMap::new(
        &ring,
        vec![1],
        vec![0],
        vec![vec![x]],
    )
    .unwrap();
    // Fitt_0 of coker(x): the ideal (x).
    let f0 = fitting_ideal(&psi, 0, Budget::DEFAULT).unwrap();
    assert!(f0
        .equals(&GradedIdeal::parse(&ring, &["x"], Budget::DEFAULT).unwrap())
        .unwrap());
    // i at or above the target rank: the unit ideal.
    let f1 = fitting_ideal(&psi, 1, Budget::DEFAULT).unwrap();
    assert!(f1.is_unit());
    let f5 = fitting_ideal(&psi, 5, Budget::DEFAULT).unwrap();
    assert!(f5.is_unit());
}
