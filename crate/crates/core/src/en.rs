//! The height-2 perfect-ideal pipeline: Hilbert-Burch data, mapping-cone
//! presentations of `I/a`, the Eagon-Northcott complex with exact graded
//! twists, and the degree combinatorics that pin down the regularity of the
//! quotient by `a : I`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Budget, Error, Result};
use crate::groebner::GradedIdeal;
use crate::koszul::subsets;
use crate::modgb::{ModuleGb, VecPoly};
use crate::poly::Polynomial;
use crate::resolve::{resolve_module, ChainComplex, GradedMap, Presentation};

/// `β_m(t) = (-1)^m Σ_{j=0}^m (-1)^j j^t C(m, j)`, exactly. Zero for
/// `t ≤ m - 1` and positive otherwise.
pub fn beta(m: u32, t: u32) -> BigInt {
    let mut total = BigInt::zero();
    let mut binom = BigInt::one();
    for j in 0..=m {
        if j > 0 {
            // C(m, j) = C(m, j-1) * (m - j + 1) / j.
            binom = binom * BigInt::from(m - j + 1) / BigInt::from(j);
        }
        // 0^0 = 1 in this summation.
        let jt = if j == 0 && t == 0 {
            BigInt::one()
        } else {
            BigInt::from(j).pow(t)
        };
        let term = &binom * jt;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    if m % 2 == 1 {
        total = -total;
    }
    total
}

/// Exact binomial coefficient with the usual out-of-range convention.
pub fn binomial(n: i64, r: i64) -> i128 {
    if r < 0 || r > n || n < 0 {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Hilbert-Burch data of a height-2 perfect ideal: the minimal generators,
/// the `r × (r-1)` syzygy matrix, and the degree bookkeeping.
#[derive(Debug, Clone)]
pub struct HilbertBurchData {
    /// The ideal, re-built from its minimal generators.
    pub ideal: GradedIdeal,
    /// Minimal generators sorted by descending degree: `i_1 ≥ ... ≥ i_r`.
    pub gens: Vec<Polynomial>,
    pub gen_degrees: Vec<i64>,
    /// The minimal syzygy matrix, `r` rows and `r - 1` columns.
    pub syzygy: GradedMap,
    /// Column degrees `b_1, ..., b_{r-1}` (descending).
    pub syz_degrees: Vec<i64>,
    /// Multiplicity of the minimal generator degree `i_r`.
    pub u: usize,
    /// `σ = Σ b_t = Σ i_t`.
    pub sigma: i64,
    /// False when the input generating set had to be re-minimized.
    pub input_was_minimal: bool,
}

/// Builds Hilbert-Burch data, verifying height 2, perfection, the strict
/// inequalities `b_t > i_r`, and that the maximal minors of the syzygy
/// matrix regenerate the ideal.
pub fn hilbert_burch(ideal: &GradedIdeal) -> Result<HilbertBurchData> {
    let budget = ideal.budget();
    let ring = ideal.ring();
    if ideal.height() != 2 {
        return Err(Error::NotHeightTwo {
            height: ideal.height(),
        });
    }
    let minimal = ideal.minimal_generators()?;
    let input_was_minimal = minimal.len() == ideal.generators().len();
    let mut gens = minimal;
    // Descending degree, stable within equal degrees.
    gens.sort_by_key(|g| -g.degree().unwrap());
    let gen_degrees: Vec<i64> = gens.iter().map(|g| g.degree().unwrap()).collect();
    let r = gens.len();

    let res = resolve_module(
        &Presentation {
            map: GradedMap::row_of_polys(ring, &gens)?,
        },
        budget,
    )?;
    // Perfection: grade 2 equals the projective dimension of R/I.
    if res.projective_dimension != 2 {
        return Err(Error::NotPerfect {
            height: 2,
            pd: res.projective_dimension,
        });
    }

    let row = GradedMap::row_of_polys(ring, &gens)?;
    let syzygy = row.syzygy_map(budget)?;
    if syzygy.source_rank() != r - 1 {
        return Err(Error::NotPerfect {
            height: 2,
            pd: res.projective_dimension,
        });
    }
    let mut order: Vec<usize> = (0..r - 1).collect();
    order.sort_by_key(|&j| -syzygy.source_twists()[j]);
    let cols: Vec<VecPoly> = order.iter().map(|&j| syzygy.column(j)).collect();
    let syz_degrees: Vec<i64> = order.iter().map(|&j| syzygy.source_twists()[j]).collect();
    let syzygy = GradedMap::from_columns(
        ring,
        syzygy.target_twists().to_vec(),
        &cols,
        syz_degrees.clone(),
    )?;

    let i_r = *gen_degrees.last().unwrap();
    if syz_degrees.iter().any(|&b| b <= i_r) {
        return Err(Error::Precondition(alloc::format!(
            "syzygy degrees {syz_degrees:?} do not strictly exceed the minimal generator degree {i_r}"
        )));
    }
    let sigma: i64 = syz_degrees.iter().sum();
    if sigma != gen_degrees.iter().sum::<i64>() {
        return Err(Error::Precondition(
            "syzygy degrees and generator degrees have different sums".into(),
        ));
    }

    // The (r-1)-minors regenerate the ideal up to unit.
    let rows: Vec<usize> = (0..r).collect();
    let cols: Vec<usize> = (0..r - 1).collect();
    let mut minors = Vec::with_capacity(r);
    for skip in 0..r {
        let sel: Vec<usize> = rows.iter().copied().filter(|&i| i != skip).collect();
        minors.push(syzygy.minor(&sel, &cols));
    }
    let minor_ideal = GradedIdeal::new(ring, minors, budget)?;
    let rebuilt = GradedIdeal::new(ring, gens.clone(), budget)?;
    if !minor_ideal.equals(&rebuilt)? {
        return Err(Error::Precondition(
            "maximal minors of the syzygy matrix do not regenerate the ideal".into(),
        ));
    }

    let u = gen_degrees.iter().filter(|&&d| d == i_r).count();
    Ok(HilbertBurchData {
        ideal: rebuilt,
        gens,
        gen_degrees,
        syzygy,
        syz_degrees,
        u,
        sigma,
        input_was_minimal,
    })
}

/// The mapping-cone presentation of `I/a`: columns are the Hilbert-Burch
/// syzygies of `I` followed by the expressions of the generators of `a` in
/// the generators of `I`. The cokernel's Hilbert function is verified
/// against `I/a` up to degree 6.
pub fn mapping_cone_presentation(
    hb: &HilbertBurchData,
    a: &GradedIdeal,
) -> Result<GradedMap> {
    let ring = hb.ideal.ring();
    let budget = hb.ideal.budget();
    if a.ring() != ring {
        return Err(Error::RingMismatch);
    }
    for g in a.generators() {
        if !hb.ideal.contains(g)? {
            return Err(Error::NotContained(alloc::format!(
                "generator {g} of a is not in I"
            )));
        }
    }
    let a_min = minimal_descending(a)?;

    let gen_vecs: Vec<VecPoly> = hb
        .gens
        .iter()
        .map(|g| VecPoly::from_poly(g, 0))
        .collect();
    let lifter = ModuleGb::new(ring, &gen_vecs, 1, true, budget)?;

    let mut columns: Vec<VecPoly> = (0..hb.syzygy.source_rank())
        .map(|j| hb.syzygy.column(j))
        .collect();
    let mut source_twists = hb.syz_degrees.clone();
    for l in &a_min {
        let coeffs = lifter
            .lift(&VecPoly::from_poly(l, 0))
            .ok_or_else(|| Error::NotContained(alloc::format!("cannot express {l} in I")))?;
        let mut terms = Vec::new();
        for (t, c) in coeffs.iter().enumerate() {
            terms.extend(VecPoly::from_poly(c, t).terms);
        }
        columns.push(VecPoly { terms });
        source_twists.push(l.degree().unwrap());
    }
    let psi = GradedMap::from_columns(
        ring,
        hb.syzygy.target_twists().to_vec(),
        &columns,
        source_twists,
    )?;

    // Cokernel Hilbert function agrees with I/a in low degrees.
    let degrees: Vec<i64> = (0..=6).collect();
    let coker_dims = Presentation { map: psi.clone() }.piece_dims(&degrees, budget)?;
    for (idx, &delta) in degrees.iter().enumerate() {
        let expect = hb.ideal.piece_dim(delta) - a.piece_dim(delta);
        if coker_dims[idx] != expect {
            return Err(Error::MalformedMap(alloc::format!(
                "mapping cone cokernel has dimension {} in degree {delta}, expected {expect}",
                coker_dims[idx]
            )));
        }
    }
    Ok(psi)
}

fn minimal_descending(a: &GradedIdeal) -> Result<Vec<Polynomial>> {
    let mut min = a.minimal_generators()?;
    min.sort_by_key(|g| -g.degree().unwrap());
    Ok(min)
}

/// An Eagon-Northcott complex together with the ideal it resolves and the
/// grade check that decides whether it is a resolution.
#[derive(Debug, Clone)]
pub struct EnComplex {
    /// `0 -> N_{s-1} -> ... -> N_0 -> R`, differentials squaring to zero.
    pub complex: ChainComplex,
    /// `I_r(ψ)`, the ideal of maximal minors: the homology at `R`.
    pub minors_ideal: GradedIdeal,
    /// `s = cols - rows + 1`, the grade the minor ideal must reach.
    pub expected_grade: i64,
    /// True when `grade I_r(ψ) ≥ s`, so the complex is acyclic.
    pub grade_ok: bool,
}

/// Builds the Eagon-Northcott complex of a graded map `ψ: F -> G` with
/// `rank F ≥ rank G`. Terms are `N_j = ∧^{r+j} F ⊗ D_j(G^*) ⊗ (∧^r G)^*`
/// with the contraction differentials; `∂∘∂ = 0` is verified exactly.
pub fn eagon_northcott(psi: &GradedMap, budget: Budget) -> Result<EnComplex> {
    let ring = psi.ring();
    let r = psi.target_rank();
    let f = psi.source_rank();
    if r == 0 || f < r {
        return Err(Error::Precondition(
            "Eagon-Northcott needs rank(source) >= rank(target) >= 1".into(),
        ));
    }
    let s = f - r + 1;
    let col_twists = psi.source_twists().to_vec();
    let row_twists = psi.target_twists().to_vec();
    let total_row: i64 = row_twists.iter().sum();

    // Basis bookkeeping per homological index j: pairs (K, A) with K an
    // (r+j)-subset of columns and A an exponent vector of total j over the
    // rows. Twist: Σ_K c - Σ A_t i_t - Σ i_t. For j = 0, A = 0.
    let exps_of = |j: usize| -> Vec<Vec<u32>> {
        crate::monomial::monomials_of_degree(r, &alloc::vec![1u32; r], j as i64)
            .into_iter()
            .map(|m| m.exps)
            .collect()
    };

    let mut bases: Vec<Vec<(Vec<usize>, Vec<u32>)>> = Vec::with_capacity(s);
    for j in 0..s {
        let mut basis = Vec::new();
        for k_set in subsets(f, r + j) {
            for a in exps_of(j) {
                basis.push((k_set.clone(), a.clone()));
            }
        }
        bases.push(basis);
    }
    let twist_of = |k_set: &[usize], a: &[u32]| -> i64 {
        let ksum: i64 = k_set.iter().map(|&c| col_twists[c]).sum();
        let asum: i64 = a
            .iter()
            .enumerate()
            .map(|(t, &e)| e as i64 * row_twists[t])
            .sum();
        ksum - asum - total_row
    };

    let mut maps: Vec<GradedMap> = Vec::with_capacity(s);
    // Augmentation N_0 -> R by maximal minors.
    {
        let rows: Vec<usize> = (0..r).collect();
        let mut entries = alloc::vec![Vec::with_capacity(bases[0].len())];
        let mut source_twists = Vec::with_capacity(bases[0].len());
        for (k_set, a) in &bases[0] {
            entries[0].push(psi.minor(&rows, k_set));
            source_twists.push(twist_of(k_set, a));
        }
        maps.push(GradedMap::new(ring, source_twists, alloc::vec![0], entries)?);
    }
    // Contraction differentials N_j -> N_{j-1}.
    for j in 1..s {
        let source = &bases[j];
        let target = &bases[j - 1];
        let mut entries =
            alloc::vec![alloc::vec![ring.zero(); source.len()]; target.len()];
        for (col_idx, (k_set, a)) in source.iter().enumerate() {
            for (pos, &kcol) in k_set.iter().enumerate() {
                let k_reduced: Vec<usize> = k_set
                    .iter()
                    .copied()
                    .filter(|&c| c != kcol)
                    .collect();
                for t in 0..r {
                    if a[t] == 0 {
                        continue;
                    }
                    let mut a_reduced = a.clone();
                    a_reduced[t] -= 1;
                    let row_idx = target
                        .iter()
                        .position(|(kk, aa)| *kk == k_reduced && *aa == a_reduced)
                        .expect("basis bookkeeping");
                    let entry = &psi.entries()[t][kcol];
                    let signed = if pos % 2 == 0 {
                        entry.clone()
                    } else {
                        entry.neg()
                    };
                    entries[row_idx][col_idx] =
                        entries[row_idx][col_idx].add(&signed);
                }
            }
        }
        let source_twists: Vec<i64> = source.iter().map(|(k, a)| twist_of(k, a)).collect();
        let target_twists: Vec<i64> = target.iter().map(|(k, a)| twist_of(k, a)).collect();
        maps.push(GradedMap::new(ring, source_twists, target_twists, entries)?);
    }

    let complex = ChainComplex { maps };
    complex.verify()?;

    let minors_ideal = GradedIdeal::new(
        ring,
        complex.maps[0].entries()[0].clone(),
        budget,
    )?;
    let grade = minors_ideal.height();
    Ok(EnComplex {
        complex,
        minors_ideal,
        expected_grade: s as i64,
        grade_ok: grade >= s as i64,
    })
}

/// The degree bookkeeping of the complex: the merged column-degree sequence,
/// the `f(j)`/`n(j)` data per homological index, and the parameters
/// `(s, k, u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnShape {
    /// Column degrees `c_1 ≥ ... ≥ c_{r+s-1}` (syzygy degrees before the
    /// degrees of `a` on ties).
    pub c_degrees: Vec<i64>,
    pub s: usize,
    pub k: usize,
    pub u: usize,
    pub i_r: i64,
    pub sigma: i64,
    pub per_index: Vec<EnIndexData>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnIndexData {
    pub j: usize,
    /// Generator degrees of `N_j[σ]`, descending.
    pub degrees: Vec<i64>,
    /// Maximum generator degree: `Σ_{t≤r+j} c_t - j·i_r - σ`.
    pub f: i64,
    /// Multiplicity of the maximum.
    pub n: usize,
}

impl EnShape {
    /// Assembles shape data from Hilbert-Burch data and the degrees of a
    /// minimal generating set of `a` (descending).
    pub fn new(hb: &HilbertBurchData, a_degrees: &[i64]) -> EnShape {
        let s = a_degrees.len();
        let i_r = *hb.gen_degrees.last().unwrap();
        let k = a_degrees.iter().filter(|&&d| d > i_r).count();
        // Merge descending; on equal values the b-degrees come first.
        let mut c: Vec<(i64, u8)> = hb.syz_degrees.iter().map(|&b| (b, 0)).collect();
        c.extend(a_degrees.iter().map(|&d| (d, 1)));
        c.sort_by_key(|&(d, tag)| (-d, tag));
        let c_degrees: Vec<i64> = c.iter().map(|&(d, _)| d).collect();

        let r = hb.gens.len();
        let mut per_index = Vec::with_capacity(s);
        for j in 0..s {
            let mut degrees = Vec::new();
            for k_set in subsets(r + s - 1, r + j) {
                let ksum: i64 = k_set.iter().map(|&t| c_degrees[t]).sum();
                for a in crate::monomial::monomials_of_degree(r, &alloc::vec![1u32; r], j as i64)
                {
                    let asum: i64 = a
                        .exps
                        .iter()
                        .enumerate()
                        .map(|(t, &e)| e as i64 * hb.gen_degrees[t])
                        .sum();
                    degrees.push(ksum - asum - hb.sigma);
                }
            }
            degrees.sort_by_key(|&d| -d);
            let f = degrees[0];
            let n = degrees.iter().take_while(|&&d| d == f).count();
            per_index.push(EnIndexData { j, degrees, f, n });
        }
        EnShape {
            c_degrees,
            s,
            k,
            u: hb.u,
            i_r,
            sigma: hb.sigma,
            per_index,
        }
    }

    /// The closed form `f(j) = Σ_{t=1}^{r+j} c_t - j i_r - σ`.
    pub fn f_closed(&self, j: usize) -> i64 {
        let r = self.c_degrees.len() + 1 - self.s;
        let head: i64 = self.c_degrees.iter().take(r + j).sum();
        head - j as i64 * self.i_r - self.sigma
    }
}

/// Closed-form count of top-degree generators of `N_j[σ]`:
/// `n(j) = C(s-k, j-k+1) · C(u+j-1, u-1)` for `k-1 ≤ j ≤ s-1`.
pub fn en_count(s: i64, k: i64, u: i64, j: i64) -> Result<(i64, i128)> {
    let lo = if k == 0 { 0 } else { k - 1 };
    if j < lo || j > s - 1 {
        return Err(Error::IndexOutOfRange(alloc::format!(
            "j = {j} outside [{lo}, {}]",
            s - 1
        )));
    }
    let n = binomial(s - k, j - k + 1) * binomial(u + j - 1, u - 1);
    // Offset of f(j) from the flat maximum, in strict steps: zero on the
    // flat range j ≥ k - 1.
    let f_relative = (j - (k - 1)).min(0);
    Ok((f_relative, n))
}

/// `Σ_j (-1)^j n(j)`: zero exactly when `s - k = u`; otherwise carries the
/// sign of `(-1)^{s+1}`.
pub fn en_alternating_sum(s: i64, k: i64, u: i64) -> i128 {
    let lo = if k == 0 { 0 } else { k - 1 };
    let mut total = 0i128;
    for j in lo..=(s - 1) {
        let n = binomial(s - k, j - k + 1) * binomial(u + j - 1, u - 1);
        if j % 2 == 0 {
            total += n;
        } else {
            total -= n;
        }
    }
    total
}

/// Regularity report for the height-2 pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnRegularity {
    pub s: usize,
    pub k: usize,
    pub u: usize,
    pub sigma_a: i64,
    pub beg_i: i64,
    pub beg_i_mod_a: i64,
    /// `σ(a) - (s-1)·beg(I) - s`, valid as an equality when
    /// `s - k ≤ u - 1`.
    pub predicted_min_degree: Option<i64>,
    /// `σ(a) - (s-1)·beg(I/a) - s`: the general equality.
    pub predicted_general: i64,
    /// From the minimal free resolution of `R/J`.
    pub actual: i64,
    /// From the Eagon-Northcott complex after unit cancellation.
    pub actual_en: i64,
    /// `s - k ≤ u`.
    pub bound_sk_le_u: bool,
    /// `R/J` Cohen-Macaulay of height `s`.
    pub cm_of_height_s: bool,
    /// `s - k = u`: the strict-inequality regime against the minimal-degree
    /// formula.
    pub strict_regime: bool,
}

/// Runs the full pipeline on `(I, a)`: Hilbert-Burch, mapping cone,
/// Eagon-Northcott, and both regularity formulas, cross-checked against the
/// minimal free resolution of `R/J`.
pub fn en_regularity(ideal: &GradedIdeal, a: &GradedIdeal) -> Result<(EnRegularity, EnComplex)> {
    let budget = ideal.budget();
    let ring = ideal.ring();
    let hb = hilbert_burch(ideal)?;
    let a_min = minimal_descending(a)?;
    let a_degrees: Vec<i64> = a_min.iter().map(|g| g.degree().unwrap()).collect();
    let s = a_degrees.len();
    let j_ideal = a.quotient(&hb.ideal)?;
    if j_ideal.is_unit() {
        return Err(Error::Precondition(
            "a : I is the unit ideal; the residual is trivial".into(),
        ));
    }
    if j_ideal.height() < s as i64 {
        return Err(Error::Precondition(alloc::format!(
            "a : I has height {}, not a genuine {s}-residual intersection",
            j_ideal.height()
        )));
    }

    let psi = mapping_cone_presentation(&hb, a)?;
    let en = eagon_northcott(&psi, budget)?;
    if !en.grade_ok {
        return Err(Error::Precondition(
            "maximal-minor ideal of the mapping cone has deficient grade".into(),
        ));
    }

    let shape = EnShape::new(&hb, &a_degrees);
    let i_r = hb.gen_degrees[hb.gens.len() - 1];
    let sigma_a: i64 = a_degrees.iter().sum();
    let beg_i_mod_a = beg_quotient(&hb.ideal, a)?.ok_or_else(|| {
        Error::Precondition("I/a is zero; a = I".into())
    })?;

    let res = resolve_module(&Presentation::cyclic(&j_ideal)?, budget)?;
    let actual = res.regularity;
    let cm_of_height_s =
        res.is_cohen_macaulay() && res.dimension == ring.nvars() as i64 - s as i64;

    // Regularity read off the Eagon-Northcott complex after minimization.
    let mut en_min = en.complex.clone();
    crate::resolve::prune(&mut en_min)?;
    let actual_en = crate::resolve::BettiTable::from_complex(&en_min)
        .regularity()
        .unwrap_or(0);

    let k = shape.k;
    let u = shape.u;
    let predicted_min_degree = if s as i64 - k as i64 <= u as i64 - 1 {
        Some(sigma_a - (s as i64 - 1) * i_r - s as i64)
    } else {
        None
    };
    let predicted_general = sigma_a - (s as i64 - 1) * beg_i_mod_a - s as i64;

    Ok((
        EnRegularity {
            s,
            k,
            u,
            sigma_a,
            beg_i: i_r,
            beg_i_mod_a,
            predicted_min_degree,
            predicted_general,
            actual,
            actual_en,
            bound_sk_le_u: s as i64 - (k as i64) <= u as i64,
            cm_of_height_s,
            strict_regime: s as i64 - k as i64 == u as i64,
        },
        en,
    ))
}

/// The refined prediction in the strict regime `s - k = u`: when the
/// generator degrees carry a second-lowest tier of value `i_mid` and
/// multiplicity `v - u`, no degree of `a` falls strictly between the two
/// lowest tiers, and the number `t` of degrees of `a` equal to `i_mid`
/// satisfies `t < v - u`, the regularity equals
/// `σ(a) - (s-1)·i_mid - s`. Returns `None` when the hypotheses fail.
pub fn refined_strict_prediction(gen_degrees: &[i64], a_degrees: &[i64]) -> Option<i64> {
    let s = a_degrees.len() as i64;
    let i_r = *gen_degrees.last()?;
    let u = gen_degrees.iter().filter(|&&d| d == i_r).count() as i64;
    let k = a_degrees.iter().filter(|&&d| d > i_r).count() as i64;
    if s - k != u {
        return None;
    }
    // Second-lowest generator tier: value i_mid with multiplicity v - u.
    let i_mid = *gen_degrees.iter().filter(|&&d| d > i_r).min()?;
    let v = u + gen_degrees.iter().filter(|&&d| d == i_mid).count() as i64;
    if a_degrees.iter().any(|&d| d > i_r && d < i_mid) {
        return None;
    }
    let t = a_degrees.iter().filter(|&&d| d == i_mid).count() as i64;
    if t < v - u {
        let sigma: i64 = a_degrees.iter().sum();
        Some(sigma - (s - 1) * i_mid - s)
    } else {
        None
    }
}

/// `beg(I/a)`: the least degree where `dim I_δ > dim a_δ`; `None` when the
/// ideals agree up to the largest generator degree of `I` (i.e. `I = a`).
pub fn beg_quotient(ideal: &GradedIdeal, a: &GradedIdeal) -> Result<Option<i64>> {
    let top = ideal
        .generators()
        .iter()
        .filter_map(|g| g.degree())
        .max()
        .unwrap_or(0);
    let lo = ideal.beg().unwrap_or(0);
    for delta in lo..=top {
        if ideal.piece_dim(delta) > a.piece_dim(delta) {
            return Ok(Some(delta));
        }
    }
    Ok(None)
}
