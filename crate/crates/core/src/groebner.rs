//! Graded ideals and their operations: Groebner bases, membership, sums,
//! products, powers, intersections, quotients, graded pieces, dimension,
//! height, and Fitting ideals.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Budget, Error, Result};
use crate::hilbert::HilbertSeries;
use crate::modgb::{self, VecPoly};
use crate::monomial::{count_monomials_of_degree, monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::resolve::GradedMap;
use crate::ring::GradedRing;

/// A homogeneous ideal with its cached reduced Groebner basis, Hilbert
/// series, dimension and height. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    ring: GradedRing,
    gens: Vec<Polynomial>,
    budget: Budget,
    gb: Vec<Polynomial>,
    hilbert: HilbertSeries,
    /// Krull dimension of `R/I`; `-1` when the ideal is the unit ideal.
    dim: i64,
    /// `nvars - dim`; for the unit ideal the sentinel `nvars + 1`.
    height: i64,
}

impl GradedIdeal {
    /// Builds an ideal from homogeneous generators and computes all cached
    /// invariants eagerly. Zero generators are dropped.
    pub fn new(ring: &GradedRing, gens: Vec<Polynomial>, budget: Budget) -> Result<GradedIdeal> {
        let mut kept: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(alloc::format!(
                    "generator {g} is not homogeneous"
                )));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        let gb = modgb::ideal_groebner_basis(ring, &kept, budget)?;
        let lead: Vec<Monomial> = gb
            .iter()
            .map(|p| p.leading_monomial().unwrap().clone())
            .collect();
        let hilbert = HilbertSeries::of_quotient_by_monomials(&lead, ring.weights());
        let n = ring.nvars() as i64;
        let (dim, height) = match hilbert.dimension() {
            Some(d) => (d, n - d),
            None => (-1, n + 1),
        };
        Ok(GradedIdeal {
            ring: ring.clone(),
            gens: kept,
            budget,
            gb,
            hilbert,
            dim,
            height,
        })
    }

    /// Parses each generator and builds the ideal.
    pub fn parse(ring: &GradedRing, gens: &[&str], budget: Budget) -> Result<GradedIdeal> {
        let polys = gens
            .iter()
            .map(|s| ring.parse_poly(s))
            .collect::<Result<Vec<_>>>()?;
        GradedIdeal::new(ring, polys, budget)
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// The reduced Groebner basis under the ring's order; deterministic.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        &self.gb
    }

    /// Hilbert series of `R/I`.
    pub fn hilbert_series(&self) -> &HilbertSeries {
        &self.hilbert
    }

    /// `(dim R/I, height I)` with `height = nvars - dim`, which equals the
    /// grade because the ambient ring is a polynomial ring. For the unit
    /// ideal the sentinel pair `(-1, nvars + 1)`; the height slot reads as
    /// "+infinity".
    pub fn dimension_and_height(&self) -> (i64, i64) {
        (self.dim, self.height)
    }

    pub fn dimension(&self) -> i64 {
        self.dim
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.len() == 1 && self.gb[0].is_unit()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// The unique reduced remainder; zero exactly on members.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(modgb::poly_normal_form(&self.ring, f, &self.gb))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// True when every generator of `other` reduces to zero.
    pub fn contains_ideal(&self, other: &GradedIdeal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality via mutual membership of generators.
    pub fn equals(&self, other: &GradedIdeal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// `I + J`.
    pub fn sum(&self, other: &GradedIdeal) -> Result<GradedIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        GradedIdeal::new(&self.ring, gens, self.budget)
    }

    /// `I * J`, generated by pairwise products.
    pub fn product(&self, other: &GradedIdeal) -> Result<GradedIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g));
            }
        }
        GradedIdeal::new(&self.ring, gens, self.budget)
    }

    /// `I^k` for `k >= 1`, generated by all k-fold products of generators.
    pub fn power(&self, k: u32) -> Result<GradedIdeal> {
        if k == 0 {
            return Err(Error::Precondition("ideal power requires k >= 1".into()));
        }
        // Products over multisets of generator indices of size k.
        let mut gens: Vec<Polynomial> = Vec::new();
        let mut stack: Vec<(usize, u32, Polynomial)> =
            alloc::vec![(0, 0, self.ring.one())];
        while let Some((start, depth, acc)) = stack.pop() {
            if depth == k {
                gens.push(acc);
                continue;
            }
            for i in start..self.gens.len() {
                stack.push((i, depth + 1, acc.mul(&self.gens[i])));
            }
        }
        GradedIdeal::new(&self.ring, gens, self.budget)
    }

    /// `I ∩ J` by the one-tag elimination trick: compute a basis of
    /// `t*I + (1-t)*J` under an order eliminating `t` and keep the t-free
    /// elements.
    pub fn intersect(&self, other: &GradedIdeal) -> Result<GradedIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return GradedIdeal::new(&self.ring, Vec::new(), self.budget);
        }
        let ext = self.ring.extend_with_tag();
        let t = ext.var(0);
        let one_minus_t = ext.one().sub(&t);
        let mut ext_gens: Vec<Polynomial> = Vec::new();
        for f in &self.gens {
            ext_gens.push(t.mul(&f.map_to_ring(&ext)?));
        }
        for g in &other.gens {
            ext_gens.push(one_minus_t.mul(&g.map_to_ring(&ext)?));
        }
        let gb = modgb::ideal_groebner_basis(&ext, &ext_gens, self.budget)?;
        let mut result: Vec<Polynomial> = Vec::new();
        for p in &gb {
            let lead_t_free = p
                .leading_monomial()
                .map(|m| m.exps[0] == 0)
                .unwrap_or(false);
            if lead_t_free {
                result.push(p.map_to_ring(&self.ring)?);
            }
        }
        GradedIdeal::new(&self.ring, result, self.budget)
    }

    /// `self : (f)` for a single homogeneous polynomial, via
    /// `(self ∩ (f)) * f^{-1}`.
    pub fn quotient_by_poly(&self, f: &Polynomial) -> Result<GradedIdeal> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            // a : (0) = R.
            return GradedIdeal::new(&self.ring, alloc::vec![self.ring.one()], self.budget);
        }
        let principal = GradedIdeal::new(&self.ring, alloc::vec![f.clone()], self.budget)?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|g| g.exact_div(f))
            .collect::<Result<Vec<_>>>()?;
        GradedIdeal::new(&self.ring, gens, self.budget)
    }

    /// The ideal quotient `self : other = { r : r * other ⊆ self }`,
    /// computed generator-by-generator and intersected.
    pub fn quotient(&self, other: &GradedIdeal) -> Result<GradedIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if other.is_zero() {
            return GradedIdeal::new(&self.ring, alloc::vec![self.ring.one()], self.budget);
        }
        let mut acc: Option<GradedIdeal> = None;
        for f in &other.gens {
            let q = self.quotient_by_poly(f)?;
            acc = Some(match acc {
                None => q,
                Some(prev) => prev.intersect(&q)?,
            });
        }
        Ok(acc.expect("other has at least one generator"))
    }

    /// Vector-space dimension of the degree-`delta` piece of the ideal.
    pub fn piece_dim(&self, delta: i64) -> i128 {
        let total = count_monomials_of_degree(self.ring.weights(), delta) as i128;
        total - self.hilbert.piece_dim(delta)
    }

    /// Vector-space dimension of the degree-`delta` piece of `R/I`.
    pub fn quotient_ring_piece_dim(&self, delta: i64) -> i128 {
        self.hilbert.piece_dim(delta)
    }

    /// Least degree with a nonzero piece; `None` for the zero ideal.
    pub fn beg(&self) -> Option<i64> {
        self.gens
            .iter()
            .filter_map(|g| g.degree())
            .min()
    }

    /// Monomials of degree `delta` outside the initial ideal: a basis of
    /// `(R/I)_delta`.
    pub fn standard_monomials(&self, delta: i64) -> Vec<Monomial> {
        let leads: Vec<&Monomial> = self
            .gb
            .iter()
            .map(|p| p.leading_monomial().unwrap())
            .collect();
        monomials_of_degree(self.ring.nvars(), self.ring.weights(), delta)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect()
    }

    /// Re-selects a minimal homogeneous generating set by graded Nakayama:
    /// generators are offered in ascending degree and kept only when outside
    /// the ideal generated by the generators kept so far.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        minimalize_generators(&self.ring, &self.gens, self.budget)
    }
}

impl fmt::Display for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Minimal homogeneous generators of the ideal spanned by `gens`, in
/// ascending (degree, input position) order.
pub fn minimalize_generators(
    ring: &GradedRing,
    gens: &[Polynomial],
    budget: Budget,
) -> Result<Vec<Polynomial>> {
    let mut indexed: Vec<(i64, usize)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| (g.degree().unwrap(), i))
        .collect();
    indexed.sort();
    let mut inc = modgb::IncrementalGb::new(ring, 1, budget);
    let mut kept = Vec::new();
    for (_, i) in indexed {
        let v = VecPoly::from_poly(&gens[i], 0);
        if !inc.contains(&v) {
            inc.insert(&v)?;
            kept.push(gens[i].clone());
        }
    }
    Ok(kept)
}

/// The `i`-th Fitting ideal of the cokernel of `psi`: the ideal of
/// `(rank(target) - i)`-minors. `Fitt_i = R` when `i >= rank(target)`, and
/// the zero ideal when the requested minor size exceeds the matrix.
pub fn fitting_ideal(psi: &GradedMap, i: usize, budget: Budget) -> Result<GradedIdeal> {
    let ring = psi.ring();
    let n0 = psi.target_rank();
    if i >= n0 {
        return GradedIdeal::new(ring, alloc::vec![ring.one()], budget);
    }
    let size = n0 - i;
    if size > psi.source_rank() {
        return GradedIdeal::new(ring, Vec::new(), budget);
    }
    let rows: Vec<usize> = (0..n0).collect();
    let cols: Vec<usize> = (0..psi.source_rank()).collect();
    let mut minors = Vec::new();
    for rsel in combinations(&rows, size) {
        for csel in combinations(&cols, size) {
            let d = psi.minor(&rsel, &csel);
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    GradedIdeal::new(ring, minors, budget)
}

pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            rec(items, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, k, 0, &mut current, &mut out);
    out
}
