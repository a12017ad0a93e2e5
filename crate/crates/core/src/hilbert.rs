//! Hilbert series of graded quotients, computed from monomial ideals.
//!
//! A series is stored as its numerator over the implicit denominator
//! `prod_i (1 - t^{w_i})`; for the standard grading this is `(1-t)^n`. The
//! numerator (the K-polynomial) is unique, so two series agree exactly when
//! their trimmed numerators agree coefficientwise.

use alloc::vec;
use alloc::vec::Vec;

use crate::monomial::{count_monomials_of_degree, Monomial};

/// Numerator of a Hilbert series with denominator `prod (1 - t^{w_i})`.
///
/// The numerator may start at a negative exponent (`offset`), which happens
/// for duals such as Ext modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    /// `numerator[i]` is the coefficient of `t^(offset + i)`; leading and
    /// trailing zeros trimmed.
    pub numerator: Vec<i128>,
    /// Exponent of the first stored coefficient.
    pub offset: i64,
    /// The grading weights, fixing the denominator.
    pub denom_weights: Vec<u32>,
}

impl HilbertSeries {
    /// Series of the full ring: numerator 1.
    pub fn of_ring(weights: &[u32]) -> HilbertSeries {
        HilbertSeries {
            numerator: vec![1],
            offset: 0,
            denom_weights: weights.to_vec(),
        }
    }

    /// Series of `R/M` for the monomial ideal generated by `lead_terms`
    /// (typically the leading terms of a Groebner basis).
    pub fn of_quotient_by_monomials(lead_terms: &[Monomial], weights: &[u32]) -> HilbertSeries {
        let gens: Vec<Monomial> = lead_terms.to_vec();
        HilbertSeries::from_numerator(numerator_rec(gens, weights), 0, weights)
    }

    /// Builds a series from a numerator polynomial starting at `offset`.
    pub fn from_numerator(numerator: Vec<i128>, offset: i64, weights: &[u32]) -> HilbertSeries {
        let mut hs = HilbertSeries {
            numerator,
            offset,
            denom_weights: weights.to_vec(),
        };
        hs.normalize();
        hs
    }

    fn normalize(&mut self) {
        while self.numerator.last() == Some(&0) {
            self.numerator.pop();
        }
        while self.numerator.first() == Some(&0) {
            self.numerator.remove(0);
            self.offset += 1;
        }
        if self.numerator.is_empty() {
            self.offset = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Graded-piece dimensions for degrees `0..=max_deg`.
    pub fn expand(&self, max_deg: i64) -> Vec<i128> {
        (0..=max_deg).map(|d| self.piece_dim(d)).collect()
    }

    /// Graded-piece dimension at one degree: the convolution of the
    /// numerator with the monomial count of the ambient ring.
    pub fn piece_dim(&self, degree: i64) -> i128 {
        let mut total = 0i128;
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let d = degree - self.offset - i as i64;
            if d >= 0 {
                total += c * count_monomials_of_degree(&self.denom_weights, d) as i128;
            }
        }
        total
    }

    /// Order of vanishing of the numerator at `t = 1`.
    pub fn numerator_vanishing_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut current = self.numerator.clone();
        let mut order = 0;
        while eval_at_one(&current) == 0 {
            current = divide_by_one_minus_t(&current);
            order += 1;
        }
        Some(order)
    }

    /// Krull dimension of the module the series describes: the number of
    /// variables minus the vanishing order. `None` for the zero module.
    pub fn dimension(&self) -> Option<i64> {
        self.numerator_vanishing_order()
            .map(|k| self.denom_weights.len() as i64 - k as i64)
    }
}

fn eval_at_one(p: &[i128]) -> i128 {
    p.iter().sum()
}

fn divide_by_one_minus_t(p: &[i128]) -> Vec<i128> {
    // p = (1 - t) q  =>  q_i = sum_{j<=i} p_j; the final prefix sum is
    // p(1) = 0 so the top coefficient drops off.
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0i128;
    for (i, &c) in p.iter().enumerate() {
        acc += c;
        if i + 1 < p.len() {
            q.push(acc);
        }
    }
    trim(q)
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_scaled(a: &mut Vec<i128>, b: &[i128], shift: usize, scale: i128) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, &y) in b.iter().enumerate() {
        a[j + shift] += scale * y;
    }
}

/// Recursive pivot decomposition: for a variable `v` present in at least two
/// generators, `N(I) = N(I + (v)) + t^{w(v)} N(I : v)`, coming from the exact
/// sequence `0 -> R/(I:v)(-w) -> R/I -> R/(I+(v)) -> 0`.
fn numerator_rec(gens: Vec<Monomial>, weights: &[u32]) -> Vec<i128> {
    let gens = minimalize(gens);
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    if gens.is_empty() {
        return vec![1];
    }
    // Pivot: variable occurring in the most generators.
    let nvars = weights.len();
    let mut best_var = None;
    let mut best_count = 1usize;
    for v in 0..nvars {
        let count = gens.iter().filter(|g| g.exps[v] > 0).count();
        if count > best_count {
            best_count = count;
            best_var = Some(v);
        }
    }
    match best_var {
        None => {
            // Every variable occurs in at most one generator, so the
            // generators are pairwise coprime: N = prod (1 - t^{deg g}).
            let mut acc = vec![1i128];
            for g in &gens {
                let d = g.degree(weights) as usize;
                let mut factor = vec![0i128; d + 1];
                factor[0] = 1;
                factor[d] = -1;
                acc = poly_mul(&acc, &factor);
            }
            acc
        }
        Some(v) => {
            let w = weights[v] as usize;
            // I + (v): keep generators not divisible by v, plus v itself.
            let mut plus: Vec<Monomial> = gens
                .iter()
                .filter(|g| g.exps[v] == 0)
                .cloned()
                .collect();
            plus.push(Monomial::var(nvars, v));
            // I : v: lower the v-exponent of each generator by one.
            let colon: Vec<Monomial> = gens
                .iter()
                .map(|g| {
                    let mut h = g.clone();
                    if h.exps[v] > 0 {
                        h.exps[v] -= 1;
                    }
                    h
                })
                .collect();
            let mut out = numerator_rec(plus, weights);
            let colon_num = numerator_rec(colon, weights);
            poly_add_scaled(&mut out, &colon_num, w, 1);
            out
        }
    }
}

/// Drops generators divisible by another generator, and duplicates.
fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for g in &gens {
        if out.contains(g) {
            continue;
        }
        if gens.iter().any(|h| h != g && h.divides(g)) {
            continue;
        }
        out.push(g.clone());
    }
    out
}
