//! Graded free modules, syzygies, minimal free resolutions, Betti tables,
//! regularity, depth, Ext modules and Cohen-Macaulay tests.
//!
//! Conventions: a free module `⊕_j R(-d_j)` is recorded by its twist list
//! `[d_j]`; the generator of `R(-d)` sits in degree `d`. A graded map
//! `F -> G` stores `entries[row][col]` with the entry in position `(i, j)`
//! homogeneous of degree `source_twists[j] - target_twists[i]` or zero.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Budget, Error, Result};
use crate::hilbert::HilbertSeries;
use crate::modgb::{ModuleGb, VecPoly};
use crate::monomial::count_monomials_of_degree;
use crate::poly::Polynomial;
use crate::ring::GradedRing;

/// A degree-zero map between graded free modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    ring: GradedRing,
    source_twists: Vec<i64>,
    target_twists: Vec<i64>,
    /// `entries[i][j]`: coefficient of basis vector `i` of the target in the
    /// image of basis vector `j` of the source.
    entries: Vec<Vec<Polynomial>>,
}

impl GradedMap {
    pub fn new(
        ring: &GradedRing,
        source_twists: Vec<i64>,
        target_twists: Vec<i64>,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<GradedMap> {
        if entries.len() != target_twists.len()
            || entries.iter().any(|row| row.len() != source_twists.len())
        {
            return Err(Error::MalformedMap("entry matrix shape mismatch".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                if e.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                if !e.is_homogeneous() {
                    return Err(Error::MalformedMap(alloc::format!(
                        "entry ({i}, {j}) is not homogeneous"
                    )));
                }
                let expect = source_twists[j] - target_twists[i];
                if e.degree() != Some(expect) {
                    return Err(Error::MalformedMap(alloc::format!(
                        "entry ({i}, {j}) has degree {:?}, expected {expect}",
                        e.degree()
                    )));
                }
            }
        }
        Ok(GradedMap {
            ring: ring.clone(),
            source_twists,
            target_twists,
            entries,
        })
    }

    /// Map with no columns (zero source module).
    pub fn empty_source(ring: &GradedRing, target_twists: Vec<i64>) -> GradedMap {
        let entries = target_twists.iter().map(|_| Vec::new()).collect();
        GradedMap {
            ring: ring.clone(),
            source_twists: Vec::new(),
            target_twists,
            entries,
        }
    }

    /// Row vector `(f_1 ... f_r): ⊕ R(-deg f_j) -> R`.
    pub fn row_of_polys(ring: &GradedRing, polys: &[Polynomial]) -> Result<GradedMap> {
        let mut source = Vec::with_capacity(polys.len());
        for p in polys {
            match p.degree() {
                Some(d) => source.push(d),
                None => return Err(Error::Precondition("zero generator in row map".into())),
            }
        }
        GradedMap::new(
            ring,
            source,
            alloc::vec![0],
            alloc::vec![polys.to_vec()],
        )
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn source_rank(&self) -> usize {
        self.source_twists.len()
    }

    pub fn target_rank(&self) -> usize {
        self.target_twists.len()
    }

    pub fn source_twists(&self) -> &[i64] {
        &self.source_twists
    }

    pub fn target_twists(&self) -> &[i64] {
        &self.target_twists
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn is_zero_map(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// Column `j` as an element of the target free module.
    pub fn column(&self, j: usize) -> VecPoly {
        let mut terms = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            let p = &row[j];
            terms.extend(VecPoly::from_poly(p, i).terms);
        }
        VecPoly { terms }
    }

    pub fn columns(&self) -> Vec<VecPoly> {
        (0..self.source_rank()).map(|j| self.column(j)).collect()
    }

    /// Assembles a map from column vectors living in the target module.
    pub fn from_columns(
        ring: &GradedRing,
        target_twists: Vec<i64>,
        columns: &[VecPoly],
        source_twists: Vec<i64>,
    ) -> Result<GradedMap> {
        let mut entries =
            alloc::vec![alloc::vec![ring.zero(); columns.len()]; target_twists.len()];
        for (j, col) in columns.iter().enumerate() {
            for i in 0..target_twists.len() {
                entries[i][j] = col.component(ring, i);
            }
        }
        GradedMap::new(ring, source_twists, target_twists, entries)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        if self.source_twists != other.target_twists {
            return Err(Error::MalformedMap(
                "composition: source/target twists do not match".into(),
            ));
        }
        let rows = self.target_rank();
        let mid = self.source_rank();
        let cols = other.source_rank();
        let mut entries = alloc::vec![alloc::vec![self.ring.zero(); cols]; rows];
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = self.ring.zero();
                for k in 0..mid {
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                }
                entries[i][j] = acc;
            }
        }
        GradedMap::new(
            &self.ring,
            other.source_twists.clone(),
            self.target_twists.clone(),
            entries,
        )
    }

    /// The dual map `Hom(-, R)`: transpose with negated, swapped twists.
    pub fn dual(&self) -> GradedMap {
        let rows = self.source_rank();
        let cols = self.target_rank();
        let mut entries = alloc::vec![alloc::vec![self.ring.zero(); cols]; rows];
        for i in 0..rows {
            for (j, row) in self.entries.iter().enumerate() {
                entries[i][j] = row[i].clone();
            }
        }
        GradedMap {
            ring: self.ring.clone(),
            source_twists: self.target_twists.iter().map(|d| -d).collect(),
            target_twists: self.source_twists.iter().map(|d| -d).collect(),
            entries,
        }
    }

    /// Determinant of the square submatrix on `rows × cols`, by Laplace
    /// expansion along the first selected row.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        debug_assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return self.ring.one();
        }
        if rows.len() == 1 {
            return self.entries[rows[0]][cols[0]].clone();
        }
        let mut acc = self.ring.zero();
        for (idx, &c) in cols.iter().enumerate() {
            let e = &self.entries[rows[0]][c];
            if e.is_zero() {
                continue;
            }
            let sub_rows = &rows[1..];
            let sub_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, &v)| v)
                .collect();
            let sub = self.minor(sub_rows, &sub_cols);
            let term = e.mul(&sub);
            acc = if idx % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    /// Generators of the kernel, as columns in the source module with their
    /// degrees. With `minimal` set, trimmed to a minimal generating set by
    /// ascending-degree membership.
    pub fn kernel_generators(
        &self,
        minimal: bool,
        budget: Budget,
    ) -> Result<Vec<(VecPoly, i64)>> {
        if self.source_rank() == 0 {
            return Ok(Vec::new());
        }
        let cols = self.columns();
        let rank = self.target_rank().max(1);
        let gb = ModuleGb::new(&self.ring, &cols, rank, true, budget)?;
        let syz = gb.syzygies();
        let mut with_deg: Vec<(VecPoly, i64)> = Vec::with_capacity(syz.len());
        for s in syz {
            let d = s
                .degree(&self.ring, &self.source_twists)
                .expect("syzygy of nonzero map is nonzero");
            debug_assert!(s.is_homogeneous(&self.ring, &self.source_twists));
            with_deg.push((s, d));
        }
        if !minimal {
            return Ok(with_deg);
        }
        minimal_subset(&self.ring, with_deg, self.source_rank(), budget)
    }

    /// The kernel as a graded map into the source of `self`.
    pub fn syzygy_map(&self, budget: Budget) -> Result<GradedMap> {
        let ker = self.kernel_generators(true, budget)?;
        let (cols, degs): (Vec<VecPoly>, Vec<i64>) = ker.into_iter().unzip();
        GradedMap::from_columns(&self.ring, self.source_twists.clone(), &cols, degs)
    }
}

/// Selects a minimal generating subset from homogeneous module elements by
/// graded Nakayama: offer elements in ascending (degree, position) order and
/// keep those outside the submodule generated so far.
fn minimal_subset(
    ring: &GradedRing,
    elements: Vec<(VecPoly, i64)>,
    rank: usize,
    budget: Budget,
) -> Result<Vec<(VecPoly, i64)>> {
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by_key(|&i| (elements[i].1, i));
    let mut inc = crate::modgb::IncrementalGb::new(ring, rank.max(1), budget);
    let mut kept = Vec::new();
    for i in order {
        let (v, d) = &elements[i];
        if !inc.contains(v) {
            inc.insert(v)?;
            kept.push((v.clone(), *d));
        }
    }
    Ok(kept)
}

/// A finitely generated graded module presented as the cokernel of a graded
/// map.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub map: GradedMap,
}

impl Presentation {
    /// The free module with the given twists.
    pub fn free(ring: &GradedRing, twists: Vec<i64>) -> Presentation {
        Presentation {
            map: GradedMap::empty_source(ring, twists),
        }
    }

    /// `R/I` from the generator row of the ideal.
    pub fn cyclic(ideal: &crate::groebner::GradedIdeal) -> Result<Presentation> {
        if ideal.generators().is_empty() {
            return Ok(Presentation::free(ideal.ring(), alloc::vec![0]));
        }
        Ok(Presentation {
            map: GradedMap::row_of_polys(ideal.ring(), ideal.generators())?,
        })
    }

    /// The ideal `I` as a module: generators with their syzygies.
    pub fn of_ideal(ideal: &crate::groebner::GradedIdeal, budget: Budget) -> Result<Presentation> {
        if ideal.generators().is_empty() {
            return Ok(Presentation::free(ideal.ring(), Vec::new()));
        }
        let row = GradedMap::row_of_polys(ideal.ring(), ideal.generators())?;
        Ok(Presentation {
            map: row.syzygy_map(budget)?,
        })
    }

    pub fn ring(&self) -> &GradedRing {
        self.map.ring()
    }

    /// Twist the module: `M(b)` has presentation twists lowered by `b`.
    pub fn twist(&self, b: i64) -> Presentation {
        Presentation {
            map: GradedMap {
                ring: self.map.ring.clone(),
                source_twists: self.map.source_twists.iter().map(|d| d - b).collect(),
                target_twists: self.map.target_twists.iter().map(|d| d - b).collect(),
                entries: self.map.entries.clone(),
            },
        }
    }

    /// Graded-piece dimensions over a degree range, via a Groebner basis of
    /// the relation submodule.
    pub fn piece_dims(&self, degrees: &[i64], budget: Budget) -> Result<Vec<i128>> {
        let ring = self.ring();
        let rank = self.map.target_rank();
        let image_gb = if self.map.source_rank() == 0 {
            None
        } else {
            Some(ModuleGb::new(
                ring,
                &self.map.columns(),
                rank.max(1),
                false,
                budget,
            )?)
        };
        let mut out = Vec::with_capacity(degrees.len());
        for &delta in degrees {
            let mut free_dim: i128 = 0;
            for &tw in self.map.target_twists() {
                free_dim += count_monomials_of_degree(ring.weights(), delta - tw) as i128;
            }
            let image_dim = match &image_gb {
                None => 0,
                Some(gb) => {
                    let mut count = 0i128;
                    for comp in 0..rank {
                        let leads: Vec<&crate::monomial::Monomial> = gb
                            .basis
                            .iter()
                            .filter_map(|g| g.leading())
                            .filter(|(t, _)| t.comp == comp)
                            .map(|(t, _)| &t.mono)
                            .collect();
                        if leads.is_empty() {
                            continue;
                        }
                        let d = delta - self.map.target_twists()[comp];
                        for m in
                            crate::monomial::monomials_of_degree(ring.nvars(), ring.weights(), d)
                        {
                            if leads.iter().any(|l| l.divides(&m)) {
                                count += 1;
                            }
                        }
                    }
                    count
                }
            };
            out.push(free_dim - image_dim);
        }
        Ok(out)
    }
}

/// A finite complex of graded free modules: `maps[k]` is the differential
/// `F_{k+1} -> F_k`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub maps: Vec<GradedMap>,
}

impl ChainComplex {
    pub fn ring(&self) -> &GradedRing {
        self.maps[0].ring()
    }

    /// Number of differentials.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Twists of the free module at homological position `i`.
    pub fn module_twists(&self, i: usize) -> &[i64] {
        if i == 0 {
            self.maps[0].target_twists()
        } else {
            self.maps[i - 1].source_twists()
        }
    }

    pub fn module_rank(&self, i: usize) -> usize {
        self.module_twists(i).len()
    }

    /// Checks twist compatibility and that consecutive differentials
    /// compose to zero, exactly.
    pub fn verify(&self) -> Result<()> {
        for k in 0..self.maps.len().saturating_sub(1) {
            let composite = self.maps[k].compose(&self.maps[k + 1])?;
            if !composite.is_zero_map() {
                return Err(Error::MalformedMap(alloc::format!(
                    "differentials {} and {} do not compose to zero",
                    k + 1,
                    k + 2
                )));
            }
        }
        Ok(())
    }

    /// Largest `i` with `F_i` nonzero; `None` when even `F_0` is zero.
    pub fn projective_length(&self) -> Option<usize> {
        let mut top = None;
        for i in 0..=self.maps.len() {
            if self.module_rank_checked(i) > 0 {
                top = Some(i);
            }
        }
        top
    }

    fn module_rank_checked(&self, i: usize) -> usize {
        if i <= self.maps.len() {
            if i == 0 {
                self.maps[0].target_rank()
            } else {
                self.maps[i - 1].source_rank()
            }
        } else {
            0
        }
    }

    /// True when `ker(maps[k]) ⊆ im(maps[k+1])`, so homology vanishes at
    /// position `k + 1`. For the top position pass `k = length - 1`; the
    /// kernel of the last differential must then be zero.
    pub fn homology_vanishes_after(&self, k: usize, budget: Budget) -> Result<bool> {
        let kernel = self.maps[k].kernel_generators(false, budget)?;
        if kernel.is_empty() {
            return Ok(true);
        }
        if k + 1 >= self.maps.len() {
            return Ok(false);
        }
        let image_cols = self.maps[k + 1].columns();
        if image_cols.is_empty() {
            return Ok(false);
        }
        let gb = ModuleGb::new(
            self.ring(),
            &image_cols,
            self.maps[k + 1].target_rank().max(1),
            false,
            budget,
        )?;
        for (v, _) in kernel {
            if !gb.contains(&v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Alternating sum of the twisted free-module series: the Hilbert
    /// series of the module the complex resolves.
    pub fn hilbert_series(&self) -> HilbertSeries {
        let ring = self.ring();
        let mut acc: BTreeMap<i64, i128> = BTreeMap::new();
        for i in 0..=self.maps.len() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            if i > self.maps.len() {
                break;
            }
            let twists = if i == 0 {
                self.maps[0].target_twists()
            } else {
                self.maps[i - 1].source_twists()
            };
            for &t in twists {
                *acc.entry(t).or_insert(0) += sign;
            }
        }
        if acc.is_empty() {
            return HilbertSeries::from_numerator(Vec::new(), 0, ring.weights());
        }
        let min = *acc.keys().next().unwrap();
        let max = *acc.keys().last().unwrap();
        let mut numerator = alloc::vec![0i128; (max - min + 1) as usize];
        for (t, c) in acc {
            numerator[(t - min) as usize] = c;
        }
        HilbertSeries::from_numerator(numerator, min, ring.weights())
    }

    /// True when no differential carries a unit entry.
    pub fn is_minimal(&self) -> bool {
        self.maps
            .iter()
            .flat_map(|m| m.entries.iter().flatten())
            .all(|e| !e.is_unit())
    }
}

impl fmt::Display for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..=self.maps.len()).rev() {
            write!(f, "F{i}(")?;
            for (k, t) in self.module_twists(i).iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "-{t}")?;
            }
            write!(f, ")")?;
            if i > 0 {
                write!(f, " -> ")?;
            }
        }
        Ok(())
    }
}

/// Betti numbers `β_{i,j}` of a minimal complex: homological index and
/// internal degree to multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn from_complex(complex: &ChainComplex) -> BettiTable {
        let mut entries = BTreeMap::new();
        for i in 0..=complex.maps.len() {
            let twists = if i == 0 {
                complex.maps[0].target_twists()
            } else {
                complex.maps[i - 1].source_twists()
            };
            for &t in twists {
                *entries.entry((i, t)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn regularity(&self) -> Option<i64> {
        self.entries
            .iter()
            .filter(|(_, &mult)| mult > 0)
            .map(|(&(i, j), _)| j - i as i64)
            .max()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries
            .iter()
            .filter(|(_, &mult)| mult > 0)
            .map(|(&(i, _), _)| i)
            .max()
            .unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|(&(h, _), _)| h == i)
            .map(|(_, &m)| m)
            .sum()
    }
}

impl fmt::Display for BettiTable {
    /// Staircase layout: row `d` column `i` holds `β_{i, i+d}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero module)");
        }
        let pd = self.projective_dimension();
        let dmin = self
            .entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .min()
            .unwrap();
        let dmax = self
            .entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .max()
            .unwrap();
        write!(f, "{:>6}:", "")?;
        for i in 0..=pd {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        write!(f, "{:>6}:", "total")?;
        for i in 0..=pd {
            write!(f, "{:>6}", self.total(i))?;
        }
        writeln!(f)?;
        for d in dmin..=dmax {
            write!(f, "{d:>6}:")?;
            for i in 0..=pd {
                match self.entries.get(&(i, i as i64 + d)) {
                    Some(&m) if m > 0 => write!(f, "{m:>6}")?,
                    _ => write!(f, "{:>6}", ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Outcome of resolving a module: the minimal complex plus derived
/// invariants. For the zero module `is_zero` is set and the numeric fields
/// are meaningless.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub complex: ChainComplex,
    pub betti: BettiTable,
    pub is_zero: bool,
    pub regularity: i64,
    pub projective_dimension: usize,
    /// By Auslander-Buchsbaum: `nvars - pd`, with respect to the irrelevant
    /// maximal ideal.
    pub depth: i64,
    /// From the alternating Hilbert numerator of the resolution.
    pub dimension: i64,
}

impl Resolved {
    pub fn is_cohen_macaulay(&self) -> bool {
        self.is_zero || self.depth == self.dimension
    }
}

/// Computes the minimal graded free resolution of `coker(pres.map)` by
/// iterated syzygies, taking minimal generators of each kernel, then
/// cancels any remaining unit entries (deterministic pivot order: smallest
/// degree first, then position).
pub fn minimal_free_resolution(pres: &Presentation, budget: Budget) -> Result<ChainComplex> {
    let ring = pres.ring();
    let n = ring.nvars();
    let mut maps: Vec<GradedMap> = Vec::new();

    // First differential: minimal generators of the relation submodule.
    let first = if pres.map.source_rank() == 0 {
        pres.map.clone()
    } else {
        let cols: Vec<(VecPoly, i64)> = (0..pres.map.source_rank())
            .map(|j| (pres.map.column(j), pres.map.source_twists()[j]))
            .filter(|(c, _)| !c.is_zero())
            .collect();
        let kept = minimal_subset(ring, cols, pres.map.target_rank(), budget)?;
        let (cols, degs): (Vec<VecPoly>, Vec<i64>) = kept.into_iter().unzip();
        GradedMap::from_columns(ring, pres.map.target_twists().to_vec(), &cols, degs)?
    };
    maps.push(first);

    loop {
        let last = maps.last().unwrap();
        if last.source_rank() == 0 {
            break;
        }
        let ker = last.kernel_generators(true, budget)?;
        if ker.is_empty() {
            break;
        }
        let (cols, degs): (Vec<VecPoly>, Vec<i64>) = ker.into_iter().unzip();
        let next = GradedMap::from_columns(ring, last.source_twists().to_vec(), &cols, degs)?;
        maps.push(next);
        if maps.len() > n + 2 {
            return Err(Error::BudgetExceeded(
                "resolution exceeds the Hilbert syzygy bound".into(),
            ));
        }
    }

    let mut complex = ChainComplex { maps };
    prune(&mut complex)?;
    Ok(complex)
}

/// Resolves and packages the invariants.
pub fn resolve_module(pres: &Presentation, budget: Budget) -> Result<Resolved> {
    let complex = minimal_free_resolution(pres, budget)?;
    let betti = BettiTable::from_complex(&complex);
    let is_zero = complex.maps[0].target_rank() == 0;
    let n = pres.ring().nvars() as i64;
    let (regularity, projective_dimension, depth, dimension) = if is_zero {
        (0, 0, n, -1)
    } else {
        let reg = betti.regularity().unwrap();
        let pd = betti.projective_dimension();
        let dim = complex.hilbert_series().dimension().unwrap_or(-1);
        (reg, pd, n - pd as i64, dim)
    };
    Ok(Resolved {
        complex,
        betti,
        is_zero,
        regularity,
        projective_dimension,
        depth,
        dimension,
    })
}

/// `Ext^i_R(M, R)` as a graded presentation, from the dual of the minimal
/// free resolution of `M`.
pub fn ext_module(pres: &Presentation, i: usize, budget: Budget) -> Result<Presentation> {
    let ring = pres.ring();
    let resolution = minimal_free_resolution(pres, budget)?;
    let p = resolution.projective_length().unwrap_or(0);
    if i > p {
        return Ok(Presentation::free(ring, Vec::new()));
    }
    // Dual complex: delta_k = d_k^T : G_{k-1} -> G_k.
    let ambient: Vec<i64> = resolution
        .module_twists(i)
        .iter()
        .map(|d| -d)
        .collect();
    let incoming = if i >= 1 && i <= resolution.maps.len() {
        Some(resolution.maps[i - 1].dual())
    } else {
        None
    };
    let outgoing = if i < resolution.maps.len() {
        Some(resolution.maps[i].dual())
    } else {
        None
    };
    homology_presentation(ring, ambient, incoming.as_ref(), outgoing.as_ref(), budget)
}

/// Presentation of `ker(outgoing) / im(incoming)` in the free module with
/// the given twists. Either map may be absent (treated as zero).
pub fn homology_presentation(
    ring: &GradedRing,
    ambient_twists: Vec<i64>,
    incoming: Option<&GradedMap>,
    outgoing: Option<&GradedMap>,
    budget: Budget,
) -> Result<Presentation> {
    let rank = ambient_twists.len();
    if rank == 0 {
        return Ok(Presentation::free(ring, Vec::new()));
    }

    // Generators: a minimal generating set of the kernel of `outgoing`.
    let kernel: Vec<(VecPoly, i64)> = match outgoing {
        None => ambient_twists
            .iter()
            .enumerate()
            .map(|(j, &d)| {
                (
                    VecPoly::basis_vector(ring.nvars(), j, ring.field().one()),
                    d,
                )
            })
            .collect(),
        Some(b) => b.kernel_generators(true, budget)?,
    };
    if kernel.is_empty() {
        return Ok(Presentation::free(ring, Vec::new()));
    }
    let (ker_cols, ker_degs): (Vec<VecPoly>, Vec<i64>) = kernel.into_iter().unzip();

    // Relations: syzygies among the kernel generators, plus the incoming
    // columns expressed in the kernel generators.
    let tracked = ModuleGb::new(ring, &ker_cols, rank, true, budget)?;
    let mut rel_cols: Vec<VecPoly> = Vec::new();
    let mut rel_degs: Vec<i64> = Vec::new();
    for s in tracked.syzygies() {
        if let Some(d) = s.degree(ring, &ker_degs) {
            rel_cols.push(s);
            rel_degs.push(d);
        }
    }
    if let Some(a) = incoming {
        for j in 0..a.source_rank() {
            let col = a.column(j);
            if col.is_zero() {
                continue;
            }
            let coeffs = tracked.lift(&col).ok_or_else(|| {
                Error::MalformedMap("incoming map does not land in the kernel".into())
            })?;
            let mut rel = VecPoly::zero();
            for (k, c) in coeffs.iter().enumerate() {
                let mut terms = rel.terms;
                terms.extend(VecPoly::from_poly(c, k).terms);
                rel = VecPoly { terms };
            }
            if !rel.is_zero() {
                rel_cols.push(rel);
                rel_degs.push(a.source_twists()[j]);
            }
        }
    }

    let map = GradedMap::from_columns(ring, ker_degs, &rel_cols, rel_degs)?;
    let pres = Presentation { map };
    prune_presentation(pres)
}

/// Cancels unit entries of a presentation: the result presents the same
/// module with a minimal generator set.
pub fn prune_presentation(pres: Presentation) -> Result<Presentation> {
    let mut complex = ChainComplex {
        maps: alloc::vec![pres.map],
    };
    prune(&mut complex)?;
    Ok(Presentation {
        map: complex.maps.into_iter().next().unwrap(),
    })
}

/// Cancels unit entries across the whole complex by row/column operations.
/// Pivot order is deterministic: scan differentials from the left, rows then
/// columns (all unit entries have degree zero, so degree ordering reduces to
/// position ordering).
pub fn prune(complex: &mut ChainComplex) -> Result<()> {
    let ring = complex.ring().clone();
    let field = ring.field();
    loop {
        let mut pivot: Option<(usize, usize, usize)> = None;
        'scan: for k in 0..complex.maps.len() {
            let m = &complex.maps[k];
            for i in 0..m.target_rank() {
                for j in 0..m.source_rank() {
                    if m.entries[i][j].is_unit() {
                        pivot = Some((k, i, j));
                        break 'scan;
                    }
                }
            }
        }
        let (k, i0, j0) = match pivot {
            Some(p) => p,
            None => break,
        };

        let unit = complex.maps[k].entries[i0][j0].clone();
        let unit_coeff = unit.leading_term().unwrap().1.clone();
        let inv = field.inv(&unit_coeff)?;

        // Clear row i0 by column operations, compensating in maps[k+1].
        for j in 0..complex.maps[k].source_rank() {
            if j == j0 {
                continue;
            }
            let v = complex.maps[k].entries[i0][j].clone();
            if v.is_zero() {
                continue;
            }
            let factor = v.scale(&inv);
            for row in 0..complex.maps[k].target_rank() {
                let sub = complex.maps[k].entries[row][j0].mul(&factor);
                complex.maps[k].entries[row][j] =
                    complex.maps[k].entries[row][j].sub(&sub);
            }
            if k + 1 < complex.maps.len() {
                for col in 0..complex.maps[k + 1].source_rank() {
                    let add = complex.maps[k + 1].entries[j][col].mul(&factor);
                    complex.maps[k + 1].entries[j0][col] =
                        complex.maps[k + 1].entries[j0][col].add(&add);
                }
            }
        }

        // Clear column j0 by row operations, compensating in maps[k-1].
        for i in 0..complex.maps[k].target_rank() {
            if i == i0 {
                continue;
            }
            let w = complex.maps[k].entries[i][j0].clone();
            if w.is_zero() {
                continue;
            }
            let factor = w.scale(&inv);
            for col in 0..complex.maps[k].source_rank() {
                let sub = complex.maps[k].entries[i0][col].mul(&factor);
                complex.maps[k].entries[i][col] = complex.maps[k].entries[i][col].sub(&sub);
            }
            if k > 0 {
                for row in 0..complex.maps[k - 1].target_rank() {
                    let add = complex.maps[k - 1].entries[row][i].mul(&factor);
                    complex.maps[k - 1].entries[row][i0] =
                        complex.maps[k - 1].entries[row][i0].add(&add);
                }
            }
        }

        // The compensated neighbours must now be zero along the cancelled
        // row/column; composition-zero guarantees it.
        if k + 1 < complex.maps.len() {
            for col in 0..complex.maps[k + 1].source_rank() {
                debug_assert!(complex.maps[k + 1].entries[j0][col].is_zero());
            }
        }
        if k > 0 {
            for row in 0..complex.maps[k - 1].target_rank() {
                debug_assert!(complex.maps[k - 1].entries[row][i0].is_zero());
            }
        }

        // Delete row i0 and column j0 of maps[k]; row j0 of maps[k+1];
        // column i0 of maps[k-1].
        {
            let m = &mut complex.maps[k];
            m.entries.remove(i0);
            m.target_twists.remove(i0);
            for row in m.entries.iter_mut() {
                row.remove(j0);
            }
            m.source_twists.remove(j0);
        }
        if k + 1 < complex.maps.len() {
            let m = &mut complex.maps[k + 1];
            m.entries.remove(j0);
            m.target_twists.remove(j0);
        }
        if k > 0 {
            let m = &mut complex.maps[k - 1];
            for row in m.entries.iter_mut() {
                row.remove(i0);
            }
            m.source_twists.remove(i0);
        }
    }

    // Drop trailing zero modules.
    while complex.maps.len() > 1
        && complex.maps.last().unwrap().source_rank() == 0
        && complex.maps.last().unwrap().target_rank() > 0
    {
        let last = complex.maps.last().unwrap();
        if complex.maps.len() >= 2 {
            let prev = &complex.maps[complex.maps.len() - 2];
            if prev.source_rank() == last.target_rank() {
                complex.maps.pop();
                continue;
            }
        }
        break;
    }
    Ok(())
}
