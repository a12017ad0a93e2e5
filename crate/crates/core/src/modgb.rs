//! Buchberger engine over free modules.
//!
//! One engine serves every Groebner-type computation in the crate: ideal
//! bases are the rank-1 case, kernels come from the block-elimination trick
//! (append tracker components, keep basis elements whose leading term falls
//! in the tracker block), and lifts through a submodule reuse the tracked
//! basis. Pair selection uses the sugar strategy; determinism comes from a
//! totally ordered pair queue and a fixed final sort.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Budget, Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::GradedRing;

/// A module term: basis component plus monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModTerm {
    pub comp: usize,
    pub mono: Monomial,
}

/// An element of a free module, terms sorted strictly descending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VecPoly {
    pub terms: Vec<(ModTerm, Coeff)>,
}

/// Comparison context: ring order plus the elimination split. Components
/// below `split` form the dominant block; components at or above it are
/// only compared once the dominant block is exhausted.
#[derive(Clone, Copy)]
pub(crate) struct Env<'r> {
    pub ring: &'r GradedRing,
    pub split: usize,
}

impl<'r> Env<'r> {
    pub fn new(ring: &'r GradedRing) -> Env<'r> {
        Env {
            ring,
            split: usize::MAX,
        }
    }

    pub fn with_split(ring: &'r GradedRing, split: usize) -> Env<'r> {
        Env { ring, split }
    }

    fn cmp_terms(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        let block_a = a.comp < self.split;
        let block_b = b.comp < self.split;
        match (block_a, block_b) {
            (true, false) => return Ordering::Greater,
            (false, true) => return Ordering::Less,
            _ => {}
        }
        self.ring
            .cmp_monomials(&a.mono, &b.mono)
            .then_with(|| b.comp.cmp(&a.comp))
    }
}

impl VecPoly {
    pub fn zero() -> VecPoly {
        VecPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(ModTerm, Coeff)> {
        self.terms.first()
    }

    /// Single generator `e_comp`.
    pub fn basis_vector(nvars: usize, comp: usize, one: Coeff) -> VecPoly {
        VecPoly {
            terms: alloc::vec![(
                ModTerm {
                    comp,
                    mono: Monomial::one(nvars)
                },
                one
            )],
        }
    }

    /// Embeds a polynomial into component `comp`.
    pub fn from_poly(p: &Polynomial, comp: usize) -> VecPoly {
        VecPoly {
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| {
                    (
                        ModTerm {
                            comp,
                            mono: m.clone(),
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Extracts the polynomial sitting in component `comp`.
    pub fn component(&self, ring: &GradedRing, comp: usize) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .filter(|(t, _)| t.comp == comp)
                .map(|(t, c)| (t.mono.clone(), c.clone()))
                .collect(),
        )
    }

    /// Largest component index present plus one.
    pub fn max_comp_bound(&self) -> usize {
        self.terms.iter().map(|(t, _)| t.comp + 1).max().unwrap_or(0)
    }

    pub fn shift_comps(&self, offset: i64) -> VecPoly {
        VecPoly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    (
                        ModTerm {
                            comp: (t.comp as i64 + offset) as usize,
                            mono: t.mono.clone(),
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Weighted degree using per-component twists; `None` when zero.
    pub fn degree(&self, ring: &GradedRing, twists: &[i64]) -> Option<i64> {
        self.terms
            .iter()
            .map(|(t, _)| ring.monomial_degree(&t.mono) + twists[t.comp])
            .max()
    }

    /// True when all terms share one twisted degree.
    pub fn is_homogeneous(&self, ring: &GradedRing, twists: &[i64]) -> bool {
        match self.terms.first() {
            None => true,
            Some((t0, _)) => {
                let d = ring.monomial_degree(&t0.mono) + twists[t0.comp];
                self.terms
                    .iter()
                    .all(|(t, _)| ring.monomial_degree(&t.mono) + twists[t.comp] == d)
            }
        }
    }

    fn normalize(env: &Env, mut terms: Vec<(ModTerm, Coeff)>) -> VecPoly {
        terms.sort_by(|a, b| env.cmp_terms(&b.0, &a.0));
        let field = env.ring.field();
        let mut out: Vec<(ModTerm, Coeff)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == t {
                    last.1 = field.add(&last.1, &c);
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((t, c));
            }
        }
        VecPoly { terms: out }
    }

    /// Re-sorts under a (possibly different) environment.
    pub(crate) fn resort(&self, env: &Env) -> VecPoly {
        VecPoly::normalize(env, self.terms.clone())
    }

    fn add(&self, env: &Env, other: &VecPoly) -> VecPoly {
        let field = env.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match env.cmp_terms(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        VecPoly { terms: out }
    }

    /// `self - (c * m) * other`.
    fn sub_scaled(&self, env: &Env, other: &VecPoly, m: &Monomial, c: &Coeff) -> VecPoly {
        let field = env.ring.field();
        let neg = field.neg(c);
        let scaled = VecPoly {
            terms: other
                .terms
                .iter()
                .map(|(t, tc)| {
                    (
                        ModTerm {
                            comp: t.comp,
                            mono: t.mono.mul(m),
                        },
                        field.mul(tc, &neg),
                    )
                })
                .collect(),
        };
        self.add(env, &scaled)
    }

    fn monic(&self, env: &Env) -> VecPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let field = env.ring.field();
                let inv = field.inv(c).expect("nonzero leading coefficient");
                VecPoly {
                    terms: self
                        .terms
                        .iter()
                        .map(|(t, tc)| (t.clone(), field.mul(tc, &inv)))
                        .collect(),
                }
            }
        }
    }
}

/// Fully reduces `v` against `basis`: every term of the result is divisible
/// by no leading term of the basis. Canonical for a reduced basis.
pub(crate) fn normal_form(env: &Env, v: &VecPoly, basis: &[VecPoly]) -> VecPoly {
    let field = env.ring.field();
    let mut rest = v.clone();
    let mut out: Vec<(ModTerm, Coeff)> = Vec::new();
    'outer: while let Some((t, c)) = rest.leading().cloned() {
        for g in basis {
            if let Some((gt, gc)) = g.leading() {
                if gt.comp == t.comp && gt.mono.divides(&t.mono) {
                    let m = gt.mono.quotient(&t.mono);
                    let q = field.div(&c, gc).expect("leading coefficients nonzero");
                    rest = rest.sub_scaled(env, g, &m, &q);
                    continue 'outer;
                }
            }
        }
        out.push((t, c));
        rest.terms.remove(0);
    }
    VecPoly { terms: out }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    sugar: i64,
    lcm_degree: i64,
    i: usize,
    j: usize,
}

/// A Groebner basis of a submodule of a free module, with optional tracker
/// components for syzygies and lifts.
pub(crate) struct ModuleGb {
    pub ring: GradedRing,
    /// Components `0..rank` are the ambient free module, components
    /// `rank..rank + ngens` are trackers (present only when tracked).
    pub rank: usize,
    pub ngens: usize,
    pub tracked: bool,
    pub basis: Vec<VecPoly>,
}

impl ModuleGb {
    /// Computes the reduced basis of the submodule generated by `gens`
    /// inside a free module of rank `rank`. With `track` set, tracker
    /// components are appended and the full elimination basis is computed,
    /// enabling [`Self::syzygies`] and [`Self::lift`].
    pub fn new(
        ring: &GradedRing,
        gens: &[VecPoly],
        rank: usize,
        track: bool,
        budget: Budget,
    ) -> Result<ModuleGb> {
        let nvars = ring.nvars();
        let split = if track { rank } else { usize::MAX };
        let env = Env::with_split(ring, split);
        let mut input: Vec<VecPoly> = Vec::with_capacity(gens.len());
        for (j, g) in gens.iter().enumerate() {
            let mut h = g.resort(&env);
            if track {
                let tracker =
                    VecPoly::basis_vector(nvars, rank + j, ring.field().one());
                h = h.add(&env, &tracker);
            }
            if !h.is_zero() {
                input.push(h);
            }
        }
        // The product criterion is only sound for ideals (rank one, no
        // trackers).
        let ideal_mode = !track && rank == 1;
        let basis = buchberger(&env, input, ideal_mode, budget)?;
        Ok(ModuleGb {
            ring: ring.clone(),
            rank,
            ngens: gens.len(),
            tracked: track,
            basis,
        })
    }

    fn env(&self) -> Env<'_> {
        Env::with_split(&self.ring, if self.tracked { self.rank } else { usize::MAX })
    }

    /// Canonical normal form of an ambient-module element against the
    /// ambient part of the basis (tracker components are ignored).
    pub fn normal_form_ambient(&self, v: &VecPoly) -> VecPoly {
        let env = self.env();
        let v = v.resort(&env);
        if !self.tracked {
            return normal_form(&env, &v, &self.basis);
        }
        // Reduce only by basis elements whose lead sits in the ambient
        // block, then discard tracker debris.
        let ambient: Vec<VecPoly> = self
            .basis
            .iter()
            .filter(|g| g.leading().map(|(t, _)| t.comp < self.rank).unwrap_or(false))
            .cloned()
            .collect();
        let mut red = v;
        let field = self.ring.field();
        let mut out: Vec<(ModTerm, Coeff)> = Vec::new();
        'outer: while let Some((t, c)) = red.leading().cloned() {
            if t.comp >= self.rank {
                break;
            }
            for g in &ambient {
                let (gt, gc) = g.leading().unwrap();
                if gt.comp == t.comp && gt.mono.divides(&t.mono) {
                    let m = gt.mono.quotient(&t.mono);
                    let q = field.div(&c, gc).unwrap();
                    red = red.sub_scaled(&env, g, &m, &q);
                    continue 'outer;
                }
            }
            out.push((t, c));
            red.terms.remove(0);
        }
        VecPoly { terms: out }
    }

    /// Membership test for an ambient element.
    pub fn contains(&self, v: &VecPoly) -> bool {
        self.normal_form_ambient(v).is_zero()
    }

    /// Basis elements living entirely in the tracker block: the syzygies of
    /// the original generators, as elements of a rank-`ngens` free module.
    pub fn syzygies(&self) -> Vec<VecPoly> {
        assert!(self.tracked, "syzygies require a tracked basis");
        let mut out: Vec<VecPoly> = self
            .basis
            .iter()
            .filter(|g| {
                g.leading()
                    .map(|(t, _)| t.comp >= self.rank)
                    .unwrap_or(false)
            })
            .map(|g| g.shift_comps(-(self.rank as i64)))
            .collect();
        out.sort_by(|a, b| {
            let env = Env::new(&self.ring);
            match (a.leading(), b.leading()) {
                (Some((ta, _)), Some((tb, _))) => env.cmp_terms(ta, tb),
                _ => Ordering::Equal,
            }
        });
        out
    }

    /// Expresses `v` in terms of the original generators: returns `q` with
    /// `v = sum q_j * gens_j`, or `None` when `v` is not in the submodule.
    pub fn lift(&self, v: &VecPoly) -> Option<Vec<Polynomial>> {
        assert!(self.tracked, "lift requires a tracked basis");
        let env = self.env();
        let v = v.resort(&env);
        let field = self.ring.field();
        let mut red = v;
        // Reduce until no ambient term remains reducible; then the ambient
        // part must be exactly zero for membership.
        'outer: loop {
            let lead = match red.leading() {
                Some((t, c)) if t.comp < self.rank => (t.clone(), c.clone()),
                _ => break,
            };
            for g in &self.basis {
                let (gt, gc) = match g.leading() {
                    Some(l) => l,
                    None => continue,
                };
                if gt.comp == lead.0.comp && gt.mono.divides(&lead.0.mono) {
                    let m = gt.mono.quotient(&lead.0.mono);
                    let q = field.div(&lead.1, gc).unwrap();
                    red = red.sub_scaled(&env, g, &m, &q);
                    continue 'outer;
                }
            }
            // Irreducible ambient term left over: not a member.
            return None;
        }
        if red.terms.iter().any(|(t, _)| t.comp < self.rank) {
            return None;
        }
        // (v, 0) reduced to (0, t) means v = -sum t_j gens_j.
        let mut coeffs = Vec::with_capacity(self.ngens);
        for j in 0..self.ngens {
            coeffs.push(red.component(&self.ring, self.rank + j).neg());
        }
        Some(coeffs)
    }
}

/// Reduced Groebner basis of an ideal: monic, mutually reduced, sorted by
/// ascending leading monomial. Deterministic.
pub fn ideal_groebner_basis(
    ring: &GradedRing,
    gens: &[Polynomial],
    budget: Budget,
) -> Result<Vec<Polynomial>> {
    let vecs: Vec<VecPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| VecPoly::from_poly(p, 0))
        .collect();
    let gb = ModuleGb::new(ring, &vecs, 1, false, budget)?;
    Ok(gb
        .basis
        .iter()
        .map(|v| v.component(ring, 0))
        .collect())
}

/// Canonical remainder of `f` modulo a reduced ideal basis.
pub fn poly_normal_form(ring: &GradedRing, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let env = Env::new(ring);
    let v = VecPoly::from_poly(f, 0);
    let basis_vec: Vec<VecPoly> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| VecPoly::from_poly(p, 0))
        .collect();
    normal_form(&env, &v, &basis_vec).component(ring, 0)
}

fn buchberger(
    env: &Env,
    mut basis: Vec<VecPoly>,
    ideal_mode: bool,
    budget: Budget,
) -> Result<Vec<VecPoly>> {
    let field = env.ring.field();
    // Sugar degree per element, for pair selection only.
    let mut sugars: Vec<i64> = basis
        .iter()
        .map(|g| plain_degree(env.ring, g))
        .collect();

    let mut queue: BTreeSet<PairKey> = BTreeSet::new();
    let mut lcms: alloc::collections::BTreeMap<(usize, usize), Monomial> =
        alloc::collections::BTreeMap::new();

    let push_pair =
        |queue: &mut BTreeSet<PairKey>,
         lcms: &mut alloc::collections::BTreeMap<(usize, usize), Monomial>,
         basis: &[VecPoly],
         sugars: &[i64],
         i: usize,
         j: usize| {
            let (ti, ci_) = match basis[i].leading() {
                Some(l) => l,
                None => return,
            };
            let (tj, _) = match basis[j].leading() {
                Some(l) => l,
                None => return,
            };
            let _ = ci_;
            if ti.comp != tj.comp {
                return;
            }
            if ideal_mode && ti.mono.is_coprime_with(&tj.mono) {
                return;
            }
            let lcm = ti.mono.lcm(&tj.mono);
            let ld = env.ring.monomial_degree(&lcm);
            let sugar = ld
                + (sugars[i] - env.ring.monomial_degree(&ti.mono))
                    .max(sugars[j] - env.ring.monomial_degree(&tj.mono));
            queue.insert(PairKey {
                sugar,
                lcm_degree: ld,
                i,
                j,
            });
            lcms.insert((i, j), lcm);
        };

    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &mut lcms, &basis, &sugars, i, j);
        }
    }

    let mut pairs_done: usize = 0;
    while let Some(key) = queue.iter().next().cloned() {
        queue.remove(&key);
        let (i, j) = (key.i, key.j);
        let lcm = match lcms.get(&(i, j)) {
            Some(l) => l.clone(),
            None => continue,
        };
        pairs_done += 1;
        if pairs_done > budget.max_pairs {
            return Err(Error::BudgetExceeded(alloc::format!(
                "more than {} critical pairs",
                budget.max_pairs
            )));
        }
        if key.lcm_degree > budget.max_degree as i64 {
            return Err(Error::BudgetExceeded(alloc::format!(
                "S-pair degree {} exceeds limit {}",
                key.lcm_degree,
                budget.max_degree
            )));
        }

        // Chain criterion: some k with lead dividing the lcm and both
        // (i, k), (j, k) already handled.
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            match basis[k].leading() {
                Some((tk, _)) => {
                    tk.comp == basis[i].leading().unwrap().0.comp
                        && tk.mono.divides(&lcm)
                        && !pending(&queue, i, k)
                        && !pending(&queue, j, k)
                }
                None => false,
            }
        });
        if chain {
            continue;
        }

        let (ti, ci) = basis[i].leading().unwrap().clone();
        let (tj, cj) = basis[j].leading().unwrap().clone();
        let mi = ti.mono.quotient(&lcm);
        let mj = tj.mono.quotient(&lcm);
        // S-pair: (lcm/lt_i) * g_i - (ci/cj) * (lcm/lt_j) * g_j, scaled monic
        // on the i side.
        let spair = {
            let gi = &basis[i];
            let gj = &basis[j];
            let scaled_i = VecPoly {
                terms: gi
                    .terms
                    .iter()
                    .map(|(t, c)| {
                        (
                            ModTerm {
                                comp: t.comp,
                                mono: t.mono.mul(&mi),
                            },
                            c.clone(),
                        )
                    })
                    .collect(),
            };
            let ratio = field.div(&ci, &cj).unwrap();
            scaled_i.sub_scaled(env, gj, &mj, &ratio)
        };
        let reduced = normal_form(env, &spair, &basis);
        if reduced.is_zero() {
            continue;
        }
        let new_sugar = key.sugar.max(plain_degree(env.ring, &reduced));
        basis.push(reduced.monic(env));
        sugars.push(new_sugar);
        let n = basis.len() - 1;
        for k in 0..n {
            push_pair(&mut queue, &mut lcms, &basis, &sugars, k, n);
        }
    }

    Ok(reduce_basis(env, basis))
}

fn pending(queue: &BTreeSet<PairKey>, a: usize, b: usize) -> bool {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    queue.iter().any(|k| k.i == lo && k.j == hi)
}

fn plain_degree(ring: &GradedRing, v: &VecPoly) -> i64 {
    v.terms
        .iter()
        .map(|(t, _)| ring.monomial_degree(&t.mono))
        .max()
        .unwrap_or(0)
}

/// Minimalizes and tail-reduces a basis; output is monic and sorted by
/// ascending leading term.
fn reduce_basis(env: &Env, basis: Vec<VecPoly>) -> Vec<VecPoly> {
    // Drop elements whose leading term is divisible by another's.
    let mut keep: Vec<bool> = alloc::vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] || basis[i].is_zero() {
            keep[i] = false;
            continue;
        }
        let (ti, _) = basis[i].leading().unwrap();
        for (j, other) in basis.iter().enumerate() {
            if i == j || !keep[j] {
                continue;
            }
            let (tj, _) = other.leading().unwrap();
            if tj.comp == ti.comp && tj.mono.divides(&ti.mono) {
                // Prefer the later, already-reduced element on exact ties.
                if tj.mono != ti.mono || j > i {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<VecPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // Tail-reduce each against the rest.
    let mut reduced: Vec<VecPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<VecPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(env, &minimal[i], &others);
        if !r.is_zero() {
            reduced.push(r.monic(env));
        }
    }
    reduced.sort_by(|a, b| match (a.leading(), b.leading()) {
        (Some((ta, _)), Some((tb, _))) => env.cmp_terms(ta, tb),
        _ => Ordering::Equal,
    });
    reduced
}

/// An extendable basis used for minimal-generator selection: elements are
/// offered in ascending degree; an element already in the span is rejected.
pub(crate) struct IncrementalGb {
    ring: GradedRing,
    rank: usize,
    budget: Budget,
    gens: Vec<VecPoly>,
    basis: Vec<VecPoly>,
}

impl IncrementalGb {
    pub fn new(ring: &GradedRing, rank: usize, budget: Budget) -> IncrementalGb {
        IncrementalGb {
            ring: ring.clone(),
            rank,
            budget,
            gens: Vec::new(),
            basis: Vec::new(),
        }
    }

    pub fn contains(&self, v: &VecPoly) -> bool {
        let env = Env::new(&self.ring);
        normal_form(&env, &v.resort(&env), &self.basis).is_zero()
    }

    /// Adds a generator and recompletes the basis.
    pub fn insert(&mut self, v: &VecPoly) -> Result<()> {
        self.gens.push(v.clone());
        let gb = ModuleGb::new(&self.ring, &self.gens, self.rank, false, self.budget)?;
        self.basis = gb.basis;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn ring() -> GradedRing {
        GradedRing::standard(Field::Rationals, alloc::vec!["x", "y", "z"]).unwrap()
    }

    fn gb_strings(ring: &GradedRing, gens: &[&str]) -> Vec<alloc::string::String> {
        let polys: Vec<Polynomial> = gens.iter().map(|s| ring.parse_poly(s).unwrap()).collect();
        ideal_groebner_basis(ring, &polys, Budget::DEFAULT)
            .unwrap()
            .iter()
            .map(|p| alloc::format!("{p}"))
            .collect()
    }

    #[test]
    fn monomial_ideal_basis_is_itself() {
        let r = ring();
        assert_eq!(gb_strings(&r, &["y", "x"]), alloc::vec!["y", "x"]);
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let r = ring();
        let gb = ideal_groebner_basis(&r, &[], Budget::DEFAULT).unwrap();
        assert!(gb.is_empty());
    }

    #[test]
    fn twisted_cubic_style_minors() {
        let r = ring();
        let gens = ["x*z - y^2", "x^2 - y*z", "x*y - z^2"];
        let polys: Vec<Polynomial> = gens.iter().map(|s| r.parse_poly(s).unwrap()).collect();
        let gb = ideal_groebner_basis(&r, &polys, Budget::DEFAULT).unwrap();
        // Every original generator reduces to zero.
        for p in &polys {
            assert!(poly_normal_form(&r, p, &gb).is_zero());
        }
        // The basis is reduced: leading monomials pairwise non-divisible.
        for (i, a) in gb.iter().enumerate() {
            for (j, b) in gb.iter().enumerate() {
                if i != j {
                    assert!(!a
                        .leading_monomial()
                        .unwrap()
                        .divides(b.leading_monomial().unwrap()));
                }
            }
        }
    }

    #[test]
    fn normal_form_membership() {
        let r = ring();
        let x = r.parse_poly("x").unwrap();
        let gb = ideal_groebner_basis(&r, &[x], Budget::DEFAULT).unwrap();
        let x2 = r.parse_poly("x^2").unwrap();
        assert!(poly_normal_form(&r, &x2, &gb).is_zero());
        let y = r.parse_poly("y").unwrap();
        assert_eq!(poly_normal_form(&r, &y, &gb), y);
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = ring();
        let cols = alloc::vec![
            VecPoly::from_poly(&r.parse_poly("x").unwrap(), 0),
            VecPoly::from_poly(&r.parse_poly("y").unwrap(), 0),
        ];
        let gb = ModuleGb::new(&r, &cols, 1, true, Budget::DEFAULT).unwrap();
        let syz = gb.syzygies();
        assert_eq!(syz.len(), 1);
        // The syzygy is (y, -x) up to sign.
        let s = &syz[0];
        let c0 = s.component(&r, 0);
        let c1 = s.component(&r, 1);
        let xp = r.parse_poly("x").unwrap();
        let yp = r.parse_poly("y").unwrap();
        assert!(c0.mul(&xp).add(&c1.mul(&yp)).is_zero());
        assert!(!c0.is_zero() && !c1.is_zero());
    }

    #[test]
    fn lift_expresses_membership() {
        let r = ring();
        let f1 = r.parse_poly("x*z - y^2").unwrap();
        let f2 = r.parse_poly("x^2 - y*z").unwrap();
        let cols = alloc::vec![VecPoly::from_poly(&f1, 0), VecPoly::from_poly(&f2, 0)];
        let gb = ModuleGb::new(&r, &cols, 1, true, Budget::DEFAULT).unwrap();
        let target = f1.mul(&r.parse_poly("z").unwrap()).add(&f2.mul(&r.parse_poly("x - y").unwrap()));
        let coeffs = gb.lift(&VecPoly::from_poly(&target, 0)).unwrap();
        let rebuilt = coeffs[0].mul(&f1).add(&coeffs[1].mul(&f2));
        assert_eq!(rebuilt, target);
        // Non-member.
        let y = r.parse_poly("y").unwrap();
        assert!(gb.lift(&VecPoly::from_poly(&y, 0)).is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring();
        let gens: Vec<Polynomial> = ["x^5 - y^3*z^2", "x^2*y^3 - z^5"]
            .iter()
            .map(|s| r.parse_poly(s).unwrap())
            .collect();
        let tight = Budget {
            max_degree: 3,
            max_pairs: 200_000,
        };
        assert!(matches!(
            ideal_groebner_basis(&r, &gens, tight),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
