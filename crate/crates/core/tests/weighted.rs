//! The grading machinery under non-unit weights: Hilbert series,
//! resolutions and depth bookkeeping all follow the weighted degrees.

use resint_core::groebner::GradedIdeal;
use resint_core::resolve::{resolve_module, Presentation};
use resint_core::{Budget, Field, GradedRing, MonomialOrder};

#[test]
fn weighted_complete_intersection() {
    // Q[x, y] with weights (1, 2): I = (x^4, y^2), both of degree 4.
    let ring = GradedRing::new(
        Field::Rationals,
        vec!["x", "y"],
        vec![1, 2],
        MonomialOrder::DegRevLex,
    )
    .unwrap();
    let i = GradedIdeal::parse(&ring, &["x^4", "y^2"], Budget::DEFAULT).unwrap();
    assert_eq!(i.dimension_and_height(), (0, 2));
    // Pieces of R/I: degrees 0..3 have one monomial of each weighted degree
    // not hit by the ideal: 1; x; x^2, y; x^3, x*y; then x^2 y, ...
    assert_eq!(
        (0..=7).map(|d| i.quotient_ring_piece_dim(d)).collect::<Vec<_>>(),
        vec![1, 1, 2, 2, 1, 1, 0, 0]
    );
    let res = resolve_module(&Presentation::cyclic(&i).unwrap(), Budget::DEFAULT).unwrap();
    // Koszul resolution: 0 -> R(-8) -> R(-4)^2 -> R.
    assert_eq!(res.projective_dimension, 2);
    assert_eq!(res.complex.module_twists(1), &[4, 4]);
    assert_eq!(res.complex.module_twists(2), &[8]);
    assert_eq!(res.depth, 0);
    assert!(res.is_cohen_macaulay());
    assert_eq!(&res.complex.hilbert_series(), i.hilbert_series());
    // Weighted piece counts agree with the brute-force rank.
    for d in 0..=7 {
        assert_eq!(
            i.piece_dim(d),
            resint_oracle::piece_dim(&ring, i.generators(), d) as i128
        );
    }
}

#[test]
fn weighted_quotient_and_syzygy() {
    let ring = GradedRing::new(
        Field::prime(101).unwrap(),
        vec!["x", "y", "z"],
        vec![1, 1, 2],
        MonomialOrder::DegRevLex,
    )
    .unwrap();
    // z has degree 2; x*z - y^3 is homogeneous of degree 3.
    let f = ring.parse_poly("x*z - y^3").unwrap();
    assert!(f.is_homogeneous());
    assert_eq!(f.degree(), Some(3));
    let a = GradedIdeal::new(&ring, vec![f.mul(&ring.var(0))], Budget::DEFAULT).unwrap();
    let i = GradedIdeal::new(&ring, vec![f], Budget::DEFAULT).unwrap();
    let j = a.quotient(&i).unwrap();
    // (x f) : (f) = (x).
    let x = GradedIdeal::parse(&ring, &["x"], Budget::DEFAULT).unwrap();
    assert!(j.equals(&x).unwrap());
}
