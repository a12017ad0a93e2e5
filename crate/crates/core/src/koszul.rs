//! Koszul complexes, their cycle and homology modules, and the depth
//! condition checkers: sliding depth on homologies and on cycles, the
//! local-generator bound via Fitting heights, strong Cohen-Macaulayness,
//! and the classification of `depth Z_{r-g}`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Budget, Error, Result};
use crate::groebner::{self, GradedIdeal};
use crate::poly::Polynomial;
use crate::resolve::{
    ext_module, homology_presentation, resolve_module, ChainComplex, GradedMap, Presentation,
};
use crate::ring::GradedRing;

/// A Koszul complex on a homogeneous generating sequence, together with the
/// invariants the condition checkers need.
#[derive(Debug, Clone)]
pub struct KoszulData {
    ring: GradedRing,
    gens: Vec<Polynomial>,
    degrees: Vec<i64>,
    ideal: GradedIdeal,
    complex: ChainComplex,
    budget: Budget,
}

impl KoszulData {
    /// Builds `K(f; R)` with twists `K_i = ⊕ R(-i_{t_1} - ... - i_{t_i})`
    /// over the i-subsets in lexicographic order. The differential squares
    /// to zero exactly; this is verified at construction.
    pub fn new(gens: Vec<Polynomial>, budget: Budget) -> Result<KoszulData> {
        if gens.is_empty() {
            return Err(Error::Precondition("empty generating sequence".into()));
        }
        let ring = gens[0].ring().clone();
        let mut degrees = Vec::with_capacity(gens.len());
        for g in &gens {
            if g.ring() != &ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_homogeneous() || g.is_zero() {
                return Err(Error::Inhomogeneous(alloc::format!(
                    "Koszul input {g} must be homogeneous and nonzero"
                )));
            }
            degrees.push(g.degree().unwrap());
        }
        let r = gens.len();
        let mut maps = Vec::with_capacity(r);
        for i in 1..=r {
            maps.push(koszul_differential(&ring, &gens, &degrees, i)?);
        }
        let complex = ChainComplex { maps };
        complex.verify()?;
        let ideal = GradedIdeal::new(&ring, gens.clone(), budget)?;
        Ok(KoszulData {
            ring,
            gens,
            degrees,
            ideal,
            complex,
            budget,
        })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Degrees `i_1, ..., i_r` of the generating sequence.
    pub fn generator_degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    /// Height of the generated ideal (grade, over the polynomial ring).
    pub fn grade(&self) -> i64 {
        self.ideal.height()
    }

    /// `dim R`: the ambient dimension the depth thresholds refer to.
    pub fn ambient_dim(&self) -> i64 {
        self.ring.nvars() as i64
    }

    /// Rank of `K_i`, binomial(r, i).
    pub fn rank(&self, i: usize) -> usize {
        self.complex_twists(i).map(|t| t.len()).unwrap_or(0)
    }

    fn complex_twists(&self, i: usize) -> Option<&[i64]> {
        let r = self.gens.len();
        if i > r {
            return None;
        }
        Some(self.complex.module_twists(i))
    }

    /// The cycle module `Z_i = ker ∂_i` as a graded presentation.
    pub fn cycles(&self, i: usize) -> Result<Presentation> {
        let r = self.gens.len();
        if i > r {
            return Err(Error::IndexOutOfRange(alloc::format!(
                "cycle index {i} exceeds {r}"
            )));
        }
        let ambient = self.complex.module_twists(i).to_vec();
        let outgoing = if i >= 1 {
            Some(&self.complex.maps[i - 1])
        } else {
            None
        };
        homology_presentation(&self.ring, ambient, None, outgoing, self.budget)
    }

    /// The homology module `H_i = Z_i / B_i` as a graded presentation.
    pub fn homology(&self, i: usize) -> Result<Presentation> {
        let r = self.gens.len();
        if i > r {
            return Err(Error::IndexOutOfRange(alloc::format!(
                "homology index {i} exceeds {r}"
            )));
        }
        let ambient = self.complex.module_twists(i).to_vec();
        let incoming = if i < r {
            Some(&self.complex.maps[i])
        } else {
            None
        };
        let outgoing = if i >= 1 {
            Some(&self.complex.maps[i - 1])
        } else {
            None
        };
        homology_presentation(&self.ring, ambient, incoming, outgoing, self.budget)
    }

    /// Depth of a presented module with the zero-module convention `None`
    /// (reads as +infinity and passes every threshold).
    pub fn module_depth(&self, pres: &Presentation) -> Result<Option<i64>> {
        let res = resolve_module(pres, self.budget)?;
        Ok(if res.is_zero { None } else { Some(res.depth) })
    }

    /// Sliding depth on homology modules: `depth H_i ≥ min{d-g, d-r+i+k}`
    /// for `r-g-t ≤ i ≤ r-g`. Homologies above `r-g` vanish over the
    /// polynomial ring and pass vacuously.
    pub fn check_sd(&self, k: i64, t: i64) -> Result<DepthReport> {
        let d = self.ambient_dim();
        let g = self.grade();
        let r = self.gens.len() as i64;
        let lo = (r - g - t).max(0);
        let hi = r - g;
        let mut rows = Vec::new();
        for i in lo..=hi {
            let h = self.homology(i as usize)?;
            let depth = self.module_depth(&h)?;
            let threshold = (d - g).min(d - r + i + k);
            rows.push(DepthRow {
                index: i,
                depth,
                threshold,
                pass: depth.map(|dp| dp >= threshold).unwrap_or(true),
            });
        }
        Ok(DepthReport::new(ConditionKind::SlidingDepth, k, t, rows))
    }

    /// Sliding depth on cycles: `depth Z_i ≥ min{d-r+i+k, d-g+2, d}` for
    /// `r-g-t ≤ i ≤ r-g`.
    pub fn check_sdc(&self, k: i64, t: i64) -> Result<DepthReport> {
        let d = self.ambient_dim();
        let g = self.grade();
        let r = self.gens.len() as i64;
        let lo = (r - g - t).max(0);
        let hi = r - g;
        let mut rows = Vec::new();
        for i in lo..=hi {
            let z = self.cycles(i as usize)?;
            let depth = self.module_depth(&z)?;
            let threshold = (d - r + i + k).min(d - g + 2).min(d);
            rows.push(DepthRow {
                index: i,
                depth,
                threshold,
                pass: depth.map(|dp| dp >= threshold).unwrap_or(true),
            });
        }
        Ok(DepthReport::new(ConditionKind::SlidingDepthCycles, k, t, rows))
    }

    /// Strong Cohen-Macaulayness: every Koszul homology `H_0 .. H_{r-g}` is
    /// Cohen-Macaulay (zero modules pass).
    pub fn check_scm(&self) -> Result<ScmReport> {
        let g = self.grade();
        let r = self.gens.len() as i64;
        let mut rows = Vec::new();
        for i in 0..=(r - g).max(0) {
            let h = self.homology(i as usize)?;
            let res = resolve_module(&h, self.budget)?;
            rows.push(ScmRow {
                index: i,
                is_zero: res.is_zero,
                depth: if res.is_zero { None } else { Some(res.depth) },
                dim: if res.is_zero { None } else { Some(res.dimension) },
                cohen_macaulay: res.is_cohen_macaulay(),
            });
        }
        let overall = rows.iter().all(|r| r.cohen_macaulay);
        Ok(ScmReport { rows, overall })
    }

    /// Classification of `depth Z_{r-g}`: certifies the regular-sequence
    /// case (depth `d`) and the CM non-complete-intersection case (depth
    /// `d - g + 2`); the unmixedness-dependent case is reported untested.
    pub fn classify_depth_ztop(&self) -> Result<ZtopReport> {
        if self.ideal.is_unit() {
            return Err(Error::Precondition(
                "depth classification requires a proper ideal".into(),
            ));
        }
        let d = self.ambient_dim();
        let g = self.grade();
        let r = self.gens.len() as i64;
        let z = self.cycles((r - g).max(0) as usize)?;
        let depth = self
            .module_depth(&z)?
            .unwrap_or(d);
        let regular_sequence = r == g;
        let (case, expected) = if g == 1 || regular_sequence {
            (ZtopCase::RegularOrHeightOne, Some(d))
        } else {
            let quotient_cm =
                resolve_module(&Presentation::cyclic(&self.ideal)?, self.budget)?
                    .is_cohen_macaulay();
            if quotient_cm {
                (ZtopCase::CmNotComplete, Some(d - g + 2))
            } else {
                (ZtopCase::Untested, None)
            }
        };
        Ok(ZtopReport {
            depth,
            case,
            expected,
            matches: expected.map(|e| e == depth),
        })
    }
}

fn koszul_differential(
    ring: &GradedRing,
    gens: &[Polynomial],
    degrees: &[i64],
    i: usize,
) -> Result<GradedMap> {
    let r = gens.len();
    let sources = subsets(r, i);
    let targets = subsets(r, i - 1);
    let source_twists: Vec<i64> = sources
        .iter()
        .map(|s| s.iter().map(|&t| degrees[t]).sum())
        .collect();
    let target_twists: Vec<i64> = targets
        .iter()
        .map(|s| s.iter().map(|&t| degrees[t]).sum())
        .collect();
    let mut entries = alloc::vec![alloc::vec![ring.zero(); sources.len()]; targets.len()];
    for (j, s) in sources.iter().enumerate() {
        for (pos, &t) in s.iter().enumerate() {
            let reduced: Vec<usize> = s
                .iter()
                .copied()
                .filter(|&u| u != t)
                .collect();
            let row = targets
                .iter()
                .position(|c| *c == reduced)
                .expect("subset bookkeeping");
            let term = if pos % 2 == 0 {
                gens[t].clone()
            } else {
                gens[t].neg()
            };
            entries[row][j] = term;
        }
    }
    GradedMap::new(ring, source_twists, target_twists, entries)
}

/// All i-subsets of `{0..n}` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let items: Vec<usize> = (0..n).collect();
    groebner::combinations(&items, k)
}

/// Which sliding-depth condition a report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionKind {
    SlidingDepth,
    SlidingDepthCycles,
}

impl ConditionKind {
    pub fn label(&self) -> &'static str {
        match self {
            ConditionKind::SlidingDepth => "SD",
            ConditionKind::SlidingDepthCycles => "SDC",
        }
    }
}

/// One row of a depth check: `depth = None` is the zero module, which
/// passes every threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthRow {
    pub index: i64,
    pub depth: Option<i64>,
    pub threshold: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthReport {
    pub kind: ConditionKind,
    pub k: i64,
    pub level: i64,
    pub rows: Vec<DepthRow>,
    pub overall: bool,
}

impl DepthReport {
    fn new(kind: ConditionKind, k: i64, level: i64, rows: Vec<DepthRow>) -> DepthReport {
        let overall = rows.iter().all(|r| r.pass);
        DepthReport {
            kind,
            k,
            level,
            rows,
            overall,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScmRow {
    pub index: i64,
    pub is_zero: bool,
    pub depth: Option<i64>,
    pub dim: Option<i64>,
    pub cohen_macaulay: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScmReport {
    pub rows: Vec<ScmRow>,
    pub overall: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZtopCase {
    /// `g = 1` or the generators form a regular sequence: depth `d`.
    RegularOrHeightOne,
    /// `g ≥ 2`, `R/I` CM, not a complete intersection: depth `d - g + 2`.
    CmNotComplete,
    /// Needs an unmixedness test, which the toolkit does not perform.
    Untested,
}

impl ZtopCase {
    pub fn label(&self) -> &'static str {
        match self {
            ZtopCase::RegularOrHeightOne => "regular-sequence-or-height-one",
            ZtopCase::CmNotComplete => "cm-not-complete-intersection",
            ZtopCase::Untested => "untested-hypothesis",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZtopReport {
    pub depth: i64,
    pub case: ZtopCase,
    pub expected: Option<i64>,
    pub matches: Option<bool>,
}

/// The local generator bound: `μ(I_p) ≤ ht p` for all primes `p ⊇ I` with
/// `ht p ≤ s - 1`, tested through Fitting-ideal heights:
/// `ht Fitt_i(I) ≥ i + 1` for `1 ≤ i ≤ s - 1`.
pub fn check_gs(ideal: &GradedIdeal, s: i64) -> Result<GsReport> {
    if s < 1 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    let budget = ideal.budget();
    let row = GradedMap::row_of_polys(ideal.ring(), ideal.generators())?;
    let syz = row.syzygy_map(budget)?;
    let mut rows = Vec::new();
    for i in 1..s {
        let fitt = groebner::fitting_ideal(&syz, i as usize, budget)?;
        let height = fitt.height();
        rows.push(GsRow {
            fitting_index: i,
            height,
            required: i + 1,
            pass: fitt.is_unit() || height >= i + 1,
        });
    }
    let overall = rows.iter().all(|r| r.pass);
    Ok(GsReport { s, rows, overall })
}

/// The weaker bound `μ(I_p) ≤ ht p + 1` for `ht p ≤ s - 1`, i.e.
/// `ht Fitt_i(I) ≥ i` for `2 ≤ i ≤ s`.
pub fn check_gs_minus(ideal: &GradedIdeal, s: i64) -> Result<GsReport> {
    if s < 1 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    let budget = ideal.budget();
    let row = GradedMap::row_of_polys(ideal.ring(), ideal.generators())?;
    let syz = row.syzygy_map(budget)?;
    let mut rows = Vec::new();
    for i in 2..=s {
        let fitt = groebner::fitting_ideal(&syz, i as usize, budget)?;
        let height = fitt.height();
        rows.push(GsRow {
            fitting_index: i,
            height,
            required: i,
            pass: fitt.is_unit() || height >= i,
        });
    }
    let overall = rows.iter().all(|r| r.pass);
    Ok(GsReport { s, rows, overall })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsRow {
    pub fitting_index: i64,
    pub height: i64,
    pub required: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsReport {
    pub s: i64,
    pub rows: Vec<GsRow>,
    pub overall: bool,
}

impl GsReport {
    pub fn describe(&self) -> String {
        if self.overall {
            alloc::format!("holds up to s = {}", self.s)
        } else {
            alloc::format!("fails for s = {}", self.s)
        }
    }
}

/// `H_{r-g}(f; R)` compared against the canonical module `Ext^g(R/I, R)`:
/// returns both presentations for Hilbert-function comparison.
pub fn top_homology_and_canonical(
    koszul: &KoszulData,
    budget: Budget,
) -> Result<(Presentation, Presentation)> {
    let r = koszul.generator_count() as i64;
    let g = koszul.grade();
    let h = koszul.homology((r - g).max(0) as usize)?;
    let canonical = ext_module(
        &Presentation::cyclic(koszul.ideal())?,
        g.max(0) as usize,
        budget,
    )?;
    Ok((h, canonical))
}
