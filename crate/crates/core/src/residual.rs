//! Residual intersections `J = a : I`: construction, hypothesis checks,
//! verified conclusions (Cohen-Macaulayness, regularity bound and tightness,
//! canonical module), and the twist bookkeeping of the approximation
//! complexes.

use alloc::vec::Vec;

use crate::error::{Budget, Error, Result};
use crate::groebner::GradedIdeal;
use crate::koszul::{
    check_gs, check_gs_minus, DepthReport, GsReport, KoszulData, ScmReport,
};
use crate::poly::Polynomial;
use crate::resolve::{ext_module, resolve_module, Presentation};
use crate::ring::GradedRing;

/// Which argument justified the "`I/a` locally one generator in height `s`"
/// hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalMuRoute {
    /// The residual is geometric, which implies the bound.
    Geometric,
    /// The Fitting-height surrogate (`μ(I_p) ≤ ht p + 1` up to height `s`)
    /// holds.
    FittingBound,
    /// Neither check succeeded; conclusions relying on the hypothesis are
    /// reported as unverified.
    Unverified,
}

impl LocalMuRoute {
    pub fn label(&self) -> &'static str {
        match self {
            LocalMuRoute::Geometric => "geometric",
            LocalMuRoute::FittingBound => "fitting-height-bound",
            LocalMuRoute::Unverified => "unverified",
        }
    }
}

/// The full bundle for one residual intersection: ideals, invariants, and
/// every hypothesis check the conclusions depend on.
#[derive(Debug, Clone)]
pub struct ResidualData {
    pub ring: GradedRing,
    /// `I`, rebuilt on minimal generators sorted by descending degree.
    pub ideal: GradedIdeal,
    pub gen_degrees: Vec<i64>,
    /// `a`, rebuilt on minimal generators sorted by descending degree.
    pub a: GradedIdeal,
    pub a_degrees: Vec<i64>,
    /// False when the given generators of `a` were not minimal and the set
    /// was re-minimized (the degree data below uses the minimal set).
    pub a_was_minimal: bool,
    /// `J = a : I`.
    pub j: GradedIdeal,
    /// `μ(a)`.
    pub s: usize,
    /// `ht I`.
    pub g: i64,
    /// Sum of the degrees of the minimal generators of `a`.
    pub sigma_a: i64,
    /// Least degree where `I` exceeds `a`; `None` when `a = I`.
    pub beg_i_mod_a: Option<i64>,
    /// `a = I`, so `J = R`.
    pub trivial: bool,
    /// `ht J ≥ s` together with `s ≥ ht I` (the parameter region of the
    /// definition).
    pub is_residual: bool,
    /// `ht(I + J) ≥ s + 1`.
    pub is_geometric: bool,
    pub gs: GsReport,
    pub gs_minus: GsReport,
    pub local_mu_route: LocalMuRoute,
    /// Sliding depth with `k = 1` at full level.
    pub sd1: DepthReport,
    /// Sliding depth with `k = 0` at full level.
    pub sd0: DepthReport,
    /// Cycle condition with `k = 1` at level `min{s-g, r-g}`.
    pub sdc1: DepthReport,
    pub scm: ScmReport,
}

/// Builds `J = a : I` and populates every flag. `a ⊆ I` is verified;
/// `a = I` is legal and flagged trivial.
pub fn build_residual(a: &GradedIdeal, ideal: &GradedIdeal) -> Result<ResidualData> {
    let ring = ideal.ring().clone();
    if a.ring() != &ring {
        return Err(Error::RingMismatch);
    }
    let budget = ideal.budget();
    for gen in a.generators() {
        if !ideal.contains(gen)? {
            return Err(Error::NotContained(alloc::format!(
                "generator {gen} of a does not lie in I"
            )));
        }
    }

    let mut i_gens = ideal.minimal_generators()?;
    i_gens.sort_by_key(|g| -g.degree().unwrap());
    let gen_degrees: Vec<i64> = i_gens.iter().map(|g| g.degree().unwrap()).collect();
    let ideal = GradedIdeal::new(&ring, i_gens.clone(), budget)?;

    let mut a_gens = a.minimal_generators()?;
    let a_was_minimal = a_gens.len() == a.generators().len();
    a_gens.sort_by_key(|g| -g.degree().unwrap());
    let a_degrees: Vec<i64> = a_gens.iter().map(|g| g.degree().unwrap()).collect();
    let a = GradedIdeal::new(&ring, a_gens, budget)?;

    let s = a_degrees.len();
    let g = ideal.height();
    let sigma_a: i64 = a_degrees.iter().sum();
    let j = a.quotient(&ideal)?;
    let trivial = j.is_unit();

    let beg_i_mod_a = crate::en::beg_quotient(&ideal, &a)?;
    let is_residual = j.height() >= s as i64 && s as i64 >= g;
    let i_plus_j = ideal.sum(&j)?;
    let is_geometric = i_plus_j.height() >= s as i64 + 1;

    let gs = check_gs(&ideal, s as i64)?;
    let gs_minus = check_gs_minus(&ideal, s as i64 + 1)?;
    let local_mu_route = if is_geometric {
        LocalMuRoute::Geometric
    } else if gs_minus.overall {
        LocalMuRoute::FittingBound
    } else {
        LocalMuRoute::Unverified
    };

    let koszul = KoszulData::new(i_gens, budget)?;
    let r = koszul.generator_count() as i64;
    let full = r - g;
    let sd1 = koszul.check_sd(1, full)?;
    let sd0 = koszul.check_sd(0, full)?;
    let sdc1 = koszul.check_sdc(1, (s as i64 - g).min(full))?;
    let scm = koszul.check_scm()?;

    Ok(ResidualData {
        ring,
        ideal,
        gen_degrees,
        a,
        a_degrees,
        a_was_minimal,
        j,
        s,
        g,
        sigma_a,
        beg_i_mod_a,
        trivial,
        is_residual,
        is_geometric,
        gs,
        gs_minus,
        local_mu_route,
        sd1,
        sd0,
        sdc1,
        scm,
    })
}

/// How strongly the hypothesis set backing a conclusion was verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisStatus {
    /// The geometric route: geometric residual plus sliding depth.
    VerifiedGeometric,
    /// The algebraic route: cycle condition plus the local-μ surrogate.
    VerifiedLocal,
    /// Some but not all inputs verified.
    Partial,
    Unverified,
}

impl HypothesisStatus {
    pub fn label(&self) -> &'static str {
        match self {
            HypothesisStatus::VerifiedGeometric => "verified-geometric-sd",
            HypothesisStatus::VerifiedLocal => "verified-sdc-local-mu",
            HypothesisStatus::Partial => "partially-verified",
            HypothesisStatus::Unverified => "unverified",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CmReport {
    /// `ht J ≥ s`, the residual gate. When false, nothing is claimed.
    pub gate_passed: bool,
    pub trivial: bool,
    /// `R/J` Cohen-Macaulay of dimension `n - s`; `None` when gated off.
    pub cohen_macaulay: Option<bool>,
    pub depth: Option<i64>,
    pub dim: Option<i64>,
    pub expected_dim: i64,
    pub hypotheses: HypothesisStatus,
}

/// Checks the Cohen-Macaulay conclusion on `R/J` directly and records which
/// hypothesis route was verified.
pub fn verify_cm_conclusion(data: &ResidualData) -> Result<CmReport> {
    let n = data.ring.nvars() as i64;
    let expected_dim = n - data.s as i64;
    let hypotheses = hypothesis_status(data);
    if !data.is_residual {
        return Ok(CmReport {
            gate_passed: false,
            trivial: data.trivial,
            cohen_macaulay: None,
            depth: None,
            dim: None,
            expected_dim,
            hypotheses,
        });
    }
    if data.trivial {
        return Ok(CmReport {
            gate_passed: true,
            trivial: true,
            cohen_macaulay: Some(true),
            depth: None,
            dim: None,
            expected_dim,
            hypotheses,
        });
    }
    let res = resolve_module(&Presentation::cyclic(&data.j)?, data.ideal.budget())?;
    let cm = res.is_cohen_macaulay() && res.dimension == expected_dim;
    Ok(CmReport {
        gate_passed: true,
        trivial: false,
        cohen_macaulay: Some(cm),
        depth: Some(res.depth),
        dim: Some(res.dimension),
        expected_dim,
        hypotheses,
    })
}

fn hypothesis_status(data: &ResidualData) -> HypothesisStatus {
    if data.is_geometric && data.sd0.overall {
        HypothesisStatus::VerifiedGeometric
    } else if data.sdc1.overall && data.local_mu_route != LocalMuRoute::Unverified {
        HypothesisStatus::VerifiedLocal
    } else if data.sd0.overall || data.sdc1.overall {
        HypothesisStatus::Partial
    } else {
        HypothesisStatus::Unverified
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    /// `σ(a) - (s-g+1)·beg(I/a) - s`; `None` when `J = R`.
    pub bound: Option<i64>,
    /// `reg(R/J)` from the minimal free resolution.
    pub actual: Option<i64>,
    pub holds: Option<bool>,
    /// Equality criterion: the degree-`(s-g+1)·beg(I/a)` piece of
    /// `(I^{s-g+1} + J)/J` is nonzero.
    pub tight: Option<bool>,
}

/// Evaluates the regularity bound and its tightness criterion.
pub fn regularity_bound(data: &ResidualData) -> Result<RegularityReport> {
    if data.trivial || (data.s as i64) < data.g {
        return Ok(RegularityReport {
            bound: None,
            actual: None,
            holds: None,
            tight: None,
        });
    }
    let beg = data
        .beg_i_mod_a
        .ok_or_else(|| Error::Precondition("I/a is zero but J is proper".into()))?;
    let e = data.s as i64 - data.g + 1;
    let bound = data.sigma_a - e * beg - data.s as i64;
    let res = resolve_module(&Presentation::cyclic(&data.j)?, data.ideal.budget())?;
    let actual = res.regularity;

    let power = data.ideal.power(e.max(1) as u32)?;
    let numerator = power.sum(&data.j)?;
    let delta = e * beg;
    let tight = numerator.piece_dim(delta) - data.j.piece_dim(delta) > 0;

    Ok(RegularityReport {
        bound: Some(bound),
        actual: Some(actual),
        holds: Some(actual <= bound),
        tight: Some(tight),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalStatus {
    /// All hypotheses verified and the Hilbert functions compared.
    Compared,
    /// A hypothesis could not be verified; no claim is made.
    Inconclusive(&'static str),
}

#[derive(Debug, Clone)]
pub struct CanonicalReport {
    pub status: CanonicalStatus,
    /// Hilbert functions agree on the whole window when `Some(true)`.
    pub equal: Option<bool>,
    /// First degree where the two sides differ, with both values.
    pub first_discrepancy: Option<(i64, i128, i128)>,
    /// Compared degree window (inclusive).
    pub window: Option<(i64, i64)>,
}

/// Compares the Hilbert function of `Ext^s(R/J, R)(b)` with that of
/// `((I^{s-g+1} + J)/J)(b + σ(a))`, for `b = -Σ weights`, on degrees up to
/// `max_degree`. Requires the geometric, G_s, and strong-CM hypotheses.
pub fn canonical_module_check(data: &ResidualData, max_degree: i64) -> Result<CanonicalReport> {
    if data.trivial || !data.is_residual {
        return Ok(CanonicalReport {
            status: CanonicalStatus::Inconclusive("not a nontrivial residual intersection"),
            equal: None,
            first_discrepancy: None,
            window: None,
        });
    }
    if !data.is_geometric {
        return Ok(CanonicalReport {
            status: CanonicalStatus::Inconclusive("residual is not geometric"),
            equal: None,
            first_discrepancy: None,
            window: None,
        });
    }
    if !data.gs.overall {
        return Ok(CanonicalReport {
            status: CanonicalStatus::Inconclusive("G_s unverified"),
            equal: None,
            first_discrepancy: None,
            window: None,
        });
    }
    if !data.scm.overall {
        return Ok(CanonicalReport {
            status: CanonicalStatus::Inconclusive("strong Cohen-Macaulayness unverified"),
            equal: None,
            first_discrepancy: None,
            window: None,
        });
    }

    let budget = data.ideal.budget();
    let b = -data.ring.weight_sum();
    let e = data.s as i64 - data.g + 1;

    let ext = ext_module(&Presentation::cyclic(&data.j)?, data.s, budget)?;
    let power = data.ideal.power(e.max(1) as u32)?;
    let numerator = power.sum(&data.j)?;

    // Window: below `lo` both sides vanish: the Ext presentation has no
    // generator below its minimal twist, and the right side lives in
    // nonnegative internal degrees.
    let ext_min_twist = ext.map.target_twists().iter().min().copied().unwrap_or(0);
    let lo = (ext_min_twist - b).min(-(b + data.sigma_a));
    let degrees: Vec<i64> = (lo..=max_degree).collect();

    let ext_shift: Vec<i64> = degrees.iter().map(|d| d + b).collect();
    let lhs = ext.piece_dims(&ext_shift, budget)?;
    let mut equal = true;
    let mut first = None;
    for (idx, &delta) in degrees.iter().enumerate() {
        let inner = delta + b + data.sigma_a;
        let rhs = numerator.piece_dim(inner) - data.j.piece_dim(inner);
        if lhs[idx] != rhs {
            equal = false;
            first = Some((delta, lhs[idx], rhs));
            break;
        }
    }
    Ok(CanonicalReport {
        status: CanonicalStatus::Compared,
        equal: Some(equal),
        first_discrepancy: first,
        window: Some((lo, max_degree)),
    })
}

/// A summand in the twist bookkeeping: either a free piece `S(-m)` or a
/// cycle piece `Z_p ⊗ S(-m)`, with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeSummand {
    pub kind: SummandKind,
    pub multiplicity: u64,
    /// Magnitude `m` of the twist `S(-m)` in the T-grading.
    pub twist: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummandKind {
    Free,
    /// `Z_p` for the recorded cycle index.
    Cycle(i64),
}

/// Rank/twist tables for the modified approximation complex, its total
/// complex, and the degree-zero local-cohomology slice.
#[derive(Debug, Clone)]
pub struct ComplexShape {
    pub r: usize,
    pub g: i64,
    pub s: usize,
    /// Summands of the modified complex per index `0..r-1`.
    pub zprime: Vec<Vec<ShapeSummand>>,
    /// Summands of the total complex per index `0..r+s-1`.
    pub total: Vec<Vec<ShapeSummand>>,
    /// `(index j, summands)` of the sliced complex, `j = r-s .. r-1`;
    /// free multiplicities already account for the local-cohomology count.
    pub zplus: Vec<(i64, Vec<ShapeSummand>)>,
    /// `beg` of each total-complex term, from the constructed twists.
    pub beg_total: Vec<i64>,
    /// Largest twist magnitude appearing in each total-complex term.
    pub max_twist: Vec<i64>,
}

impl ComplexShape {
    /// Pure integer construction from `(r, g, s)`.
    pub fn build(r: usize, g: i64, s: usize) -> Result<ComplexShape> {
        if g < 1 || (r as i64) < g || (s as i64) < g {
            return Err(Error::Precondition(
                "complex shapes need r >= g >= 1 and s >= g".into(),
            ));
        }
        // Modified complex: below the tail the terms are cycle modules with
        // twist -i; in the tail they are free with multiplicity C(r, i+1)
        // per twist in [r-g+1, i].
        let mut zprime: Vec<Vec<ShapeSummand>> = Vec::with_capacity(r);
        for i in 0..r as i64 {
            if i <= r as i64 - g {
                zprime.push(alloc::vec![ShapeSummand {
                    kind: SummandKind::Cycle(i),
                    multiplicity: 1,
                    twist: i,
                }]);
            } else {
                let mult = crate::en::binomial(r as i64, i + 1) as u64;
                let mut summands = Vec::new();
                for t in (r as i64 - i)..=(g - 1) {
                    summands.push(ShapeSummand {
                        kind: SummandKind::Free,
                        multiplicity: mult,
                        twist: r as i64 - t,
                    });
                }
                zprime.push(summands);
            }
        }

        // Total complex: tensor with the Koszul complex on the s linear
        // forms, which contributes twist q with multiplicity C(s, q).
        let top = r + s - 1;
        let mut total: Vec<Vec<ShapeSummand>> = Vec::with_capacity(top + 1);
        for i in 0..=top as i64 {
            let mut summands: Vec<ShapeSummand> = Vec::new();
            for p in 0..r as i64 {
                let q = i - p;
                if q < 0 || q > s as i64 {
                    continue;
                }
                let kmult = crate::en::binomial(s as i64, q) as u64;
                for sm in &zprime[p as usize] {
                    summands.push(ShapeSummand {
                        kind: sm.kind,
                        multiplicity: sm.multiplicity * kmult,
                        twist: sm.twist + q,
                    });
                }
            }
            total.push(summands);
        }

        let beg_total: Vec<i64> = total
            .iter()
            .map(|summands| summands.iter().map(|s| s.twist).min().unwrap_or(0))
            .collect();
        let max_twist: Vec<i64> = total
            .iter()
            .map(|summands| summands.iter().map(|s| s.twist).max().unwrap_or(0))
            .collect();

        // Slice: index j = r - s + i comes from total-complex position
        // i + s, keeping only twists m >= r with multiplicity scaled by
        // C(m-1, r-1).
        let mut zplus = Vec::with_capacity(s);
        for j in (r as i64 - s as i64)..=(r as i64 - 1) {
            let d_index = (j + s as i64) as usize;
            let mut summands: Vec<ShapeSummand> = Vec::new();
            for sm in &total[d_index] {
                if sm.twist < r as i64 {
                    continue;
                }
                let coh = crate::en::binomial(sm.twist - 1, r as i64 - 1) as u64;
                if coh == 0 {
                    continue;
                }
                summands.push(ShapeSummand {
                    kind: sm.kind,
                    multiplicity: sm.multiplicity * coh,
                    twist: sm.twist,
                });
            }
            zplus.push((j, summands));
        }

        Ok(ComplexShape {
            r,
            g,
            s,
            zprime,
            total,
            zplus,
            beg_total,
            max_twist,
        })
    }

    /// The closed formula for `beg` of the total-complex terms. For `g = 1`
    /// the tail has no free summands and every term begins at its own
    /// index; for `g ≥ 2` the three-range formula applies.
    pub fn beg_closed_formula(r: usize, g: i64, s: usize, i: i64) -> i64 {
        let r = r as i64;
        let s = s as i64;
        debug_assert!((0..r + s).contains(&i));
        if g == 1 {
            return i;
        }
        if i <= r - g {
            i
        } else if i <= r - 1 {
            r - g + 1
        } else {
            i - g + 2
        }
    }
}

/// Shape bookkeeping from actual data: `r` and `g` are read off the
/// generators, `s` off the degree list.
pub fn complex_shapes(
    f: &[Polynomial],
    a_degrees: &[i64],
    budget: Budget,
) -> Result<ComplexShape> {
    if f.is_empty() {
        return Err(Error::Precondition("empty generator list".into()));
    }
    let ring = f[0].ring().clone();
    let ideal = GradedIdeal::new(&ring, f.to_vec(), budget)?;
    ComplexShape::build(f.len(), ideal.height(), a_degrees.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn ring3() -> GradedRing {
        GradedRing::standard(Field::Rationals, alloc::vec!["x", "y", "z"]).unwrap()
    }

    fn minor_ideal(r: &GradedRing) -> GradedIdeal {
        GradedIdeal::parse(
            r,
            &["x*z - y^2", "x^2 - y*z", "x*y - z^2"],
            Budget::DEFAULT,
        )
        .unwrap()
    }

    #[test]
    fn trivial_residual_when_a_equals_i() {
        let r = ring3();
        let i = minor_ideal(&r);
        let data = build_residual(&i, &i).unwrap();
        assert!(data.trivial);
        assert!(data.j.is_unit());
        let reg = regularity_bound(&data).unwrap();
        assert_eq!(reg.bound, None);
        let cm = verify_cm_conclusion(&data).unwrap();
        assert_eq!(cm.cohen_macaulay, Some(true));
    }

    #[test]
    fn containment_is_enforced() {
        let r = ring3();
        let i = minor_ideal(&r);
        let outside = GradedIdeal::parse(&r, &["x^2"], Budget::DEFAULT).unwrap();
        assert!(matches!(
            build_residual(&outside, &i),
            Err(Error::NotContained(_))
        ));
    }

    #[test]
    fn link_of_minor_triple() {
        let r = ring3();
        let i = minor_ideal(&r);
        let a = GradedIdeal::parse(&r, &["x*z - y^2", "x^2 - y*z"], Budget::DEFAULT).unwrap();
        let data = build_residual(&a, &i).unwrap();
        assert!(!data.trivial);
        assert_eq!(data.s, 2);
        assert_eq!(data.g, 2);
        assert_eq!(data.sigma_a, 4);
        assert_eq!(data.beg_i_mod_a, Some(2));
        assert!(data.is_residual);
        assert!(data.scm.overall);
        assert!(data.gs.overall);
        assert!(data.sdc1.overall);
        assert!(data.sd1.overall);

        let cm = verify_cm_conclusion(&data).unwrap();
        assert_eq!(cm.cohen_macaulay, Some(true));

        let reg = regularity_bound(&data).unwrap();
        // Bound: 4 - 1*2 - 2 = 0; linkage over a field is an equality.
        assert_eq!(reg.bound, Some(0));
        assert_eq!(reg.actual, Some(0));
        assert_eq!(reg.holds, Some(true));
        assert_eq!(reg.tight, Some(true));
    }

    #[test]
    fn broken_residual_is_reported_not_claimed() {
        // a = one quadric inside the height-2 minor ideal: ht(a : I) = 1 < 2
        // would be needed for s = 1... take s = 2 with a non-regular pair so
        // the height gate fails: a = (f1, x*f1) has μ = 1 after
        // minimalization, so instead use two proportional-in-degree
        // generators whose quotient has low height.
        let r = ring3();
        let i = minor_ideal(&r);
        // a = (f1) alone: s = 1 < g; ht J = ht(a : I) is 1, so the gate
        // ht J >= s may pass or fail; construct the genuinely failing case
        // a = (f1 * x, f1 * y) ⊂ I with J = (f1) : I + ... of height 1 < 2.
        let f1x = r.parse_poly("x^2*z - x*y^2").unwrap();
        let f1y = r.parse_poly("x*y*z - y^3").unwrap();
        let a = GradedIdeal::new(&r, alloc::vec![f1x, f1y], Budget::DEFAULT).unwrap();
        let data = build_residual(&a, &i).unwrap();
        assert!(!data.is_residual);
        let cm = verify_cm_conclusion(&data).unwrap();
        assert!(!cm.gate_passed);
        assert_eq!(cm.cohen_macaulay, None);
    }

    #[test]
    fn canonical_check_on_linkage() {
        let r = ring3();
        let i = minor_ideal(&r);
        let a = GradedIdeal::parse(&r, &["x*z - y^2", "x^2 - y*z"], Budget::DEFAULT).unwrap();
        let data = build_residual(&a, &i).unwrap();
        assert!(data.is_geometric, "height-3 sum: {}", data.ideal.sum(&data.j).unwrap().height());
        let report = canonical_module_check(&data, 10).unwrap();
        assert_eq!(report.status, CanonicalStatus::Compared);
        assert_eq!(report.equal, Some(true), "{report:?}");
    }

    #[test]
    fn shape_beg_matches_formula_small_case() {
        // r = 3, g = 2, s = 2: the ranges give beg(D_i) = (0, 1, 2, 3, 4):
        // i on [0, r-g], then r-g+1 on [r-g+1, r-1], then i-g+2.
        let shape = ComplexShape::build(3, 2, 2).unwrap();
        assert_eq!(shape.beg_total, alloc::vec![0, 1, 2, 3, 4]);
        for (i, &beg) in shape.beg_total.iter().enumerate() {
            assert_eq!(
                beg,
                ComplexShape::beg_closed_formula(3, 2, 2, i as i64)
            );
        }
        // Biggest twist in term i is i.
        for (i, &m) in shape.max_twist.iter().enumerate() {
            assert_eq!(m, i as i64);
        }
    }

    #[test]
    fn shape_tail_ranks() {
        // Ranks of the free tail terms: C(r, i+1) * (g - r + i).
        let (r, g, s) = (5usize, 3i64, 4usize);
        let shape = ComplexShape::build(r, g, s).unwrap();
        for i in (r as i64 - g + 1)..r as i64 {
            let total: u64 = shape.zprime[i as usize]
                .iter()
                .map(|sm| sm.multiplicity)
                .sum();
            let expect = crate::en::binomial(r as i64, i + 1) as u64
                * (g - r as i64 + i).max(0) as u64;
            assert_eq!(total, expect, "index {i}");
        }
    }

    #[test]
    fn shape_zplus_free_above_r_minus_g() {
        let (r, g, s) = (4usize, 2i64, 3usize);
        let shape = ComplexShape::build(r, g, s).unwrap();
        for (j, summands) in &shape.zplus {
            if *j >= r as i64 - g + 1 {
                assert!(
                    summands
                        .iter()
                        .all(|sm| matches!(sm.kind, SummandKind::Free)),
                    "index {j}"
                );
            } else {
                for sm in summands {
                    if let SummandKind::Cycle(p) = sm.kind {
                        assert!(p >= j.max(&0).clone() && p <= r as i64 - 1);
                    }
                }
            }
        }
    }

    #[test]
    fn shape_g1_tail_has_no_free_summand() {
        let (r, g, s) = (4usize, 1i64, 3usize);
        let shape = ComplexShape::build(r, g, s).unwrap();
        let (j, top) = shape.zplus.last().unwrap();
        assert_eq!(*j, r as i64 - 1);
        assert!(top
            .iter()
            .all(|sm| matches!(sm.kind, SummandKind::Cycle(_))));
        // And beg(D_i) = i throughout for g = 1.
        for (i, &beg) in shape.beg_total.iter().enumerate() {
            assert_eq!(beg, i as i64);
        }
    }

    #[test]
    fn shape_complete_intersection_degenerates() {
        // r = g: the modified complex is entirely the free truncation.
        let shape = ComplexShape::build(3, 3, 4).unwrap();
        for i in 1..3usize {
            assert!(shape.zprime[i]
                .iter()
                .all(|sm| matches!(sm.kind, SummandKind::Free)));
        }
        // Index 0 is the cycle Z_0 = R.
        assert_eq!(shape.zprime[0].len(), 1);
    }

    #[test]
    fn shape_parameter_validation() {
        assert!(ComplexShape::build(2, 3, 3).is_err());
        assert!(ComplexShape::build(3, 0, 3).is_err());
        assert!(ComplexShape::build(3, 2, 1).is_err());
    }
}
