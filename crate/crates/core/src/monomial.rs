//! Exponent vectors and monomial orders.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A monomial as an exponent vector; the owning ring fixes the number of
/// variables and their weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Weighted total degree.
    pub fn degree(&self, weights: &[u32]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A total order on monomials refining divisibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree-reverse-lexicographic (the default).
    DegRevLex,
    /// Pure lexicographic.
    Lex,
    /// Degree-lexicographic.
    DegLex,
    /// Block order eliminating the first `k` variables: compares the
    /// leading block by degrevlex, then the remaining variables by
    /// degrevlex. Used internally for the one-tag elimination trick.
    Elim(usize),
}

impl MonomialOrder {
    /// Compares two exponent vectors under this order with the given
    /// weights. Returns `Greater` when `a` is the larger monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(&a.exps, &b.exps, weights),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegLex => {
                let da = a.degree(weights);
                let db = b.degree(weights);
                da.cmp(&db).then_with(|| a.exps.cmp(&b.exps))
            }
            MonomialOrder::Elim(k) => {
                let k = *k;
                degrevlex(&a.exps[..k], &b.exps[..k], &weights[..k])
                    .then_with(|| degrevlex(&a.exps[k..], &b.exps[k..], &weights[k..]))
            }
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32], weights: &[u32]) -> Ordering {
    let da: i64 = a.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
    let db: i64 = b.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // Reverse-lex tie break: the monomial with the smaller exponent
            // on the last variable where they differ is the larger one.
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

/// Enumerates all monomials of exact weighted degree `degree`, in
/// lexicographically descending exponent order. Deterministic.
pub fn monomials_of_degree(nvars: usize, weights: &[u32], degree: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if degree < 0 {
        return out;
    }
    let mut current = vec![0u32; nvars];
    fill(0, degree, &mut current, nvars, weights, &mut out);
    out
}

fn fill(
    var: usize,
    remaining: i64,
    current: &mut Vec<u32>,
    nvars: usize,
    weights: &[u32],
    out: &mut Vec<Monomial>,
) {
    if var == nvars {
        if remaining == 0 {
            out.push(Monomial {
                exps: current.clone(),
            });
        }
        return;
    }
    if var == nvars - 1 {
        let w = weights[var] as i64;
        if remaining % w == 0 {
            current[var] = (remaining / w) as u32;
            out.push(Monomial {
                exps: current.clone(),
            });
            current[var] = 0;
        }
        return;
    }
    let w = weights[var] as i64;
    let max_e = remaining / w;
    for e in (0..=max_e).rev() {
        current[var] = e as u32;
        fill(var + 1, remaining - e * w, current, nvars, weights, out);
    }
    current[var] = 0;
}

/// Number of monomials of exact weighted degree `degree` in `nvars`
/// variables.
pub fn count_monomials_of_degree(weights: &[u32], degree: i64) -> u64 {
    if degree < 0 {
        return 0;
    }
    let d = degree as usize;
    let mut ways = vec![0u64; d + 1];
    ways[0] = 1;
    for &w in weights {
        let w = w as usize;
        for t in w..=d {
            ways[t] += ways[t - w];
        }
    }
    ways[d]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial {
            exps: exps.to_vec(),
        }
    }

    #[test]
    fn degrevlex_standard_examples() {
        let w = [1, 1, 1];
        let ord = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > xz > yz > z^2 in degrevlex on (x, y, z).
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for pair in seq.windows(2) {
            assert_eq!(ord.cmp(&pair[0], &pair[1], &w), Ordering::Greater);
        }
    }

    #[test]
    fn order_is_multiplicative() {
        let w = [1, 1];
        let ord = MonomialOrder::DegRevLex;
        let a = m(&[2, 0]);
        let b = m(&[1, 1]);
        let c = m(&[0, 3]);
        assert_eq!(ord.cmp(&a, &b, &w), ordering_of(&ord, &a.mul(&c), &b.mul(&c), &w));
    }

    fn ordering_of(ord: &MonomialOrder, a: &Monomial, b: &Monomial, w: &[u32]) -> Ordering {
        ord.cmp(a, b, w)
    }

    #[test]
    fn elimination_block_dominates() {
        let w = [1, 1, 1];
        let ord = MonomialOrder::Elim(1);
        // t > x^5 when t is the eliminated first variable.
        let t = m(&[1, 0, 0]);
        let x5 = m(&[0, 5, 0]);
        assert_eq!(ord.cmp(&t, &x5, &w), Ordering::Greater);
    }

    #[test]
    fn counting_matches_enumeration() {
        let w = [1, 1, 1];
        for d in 0..8 {
            assert_eq!(
                monomials_of_degree(3, &w, d).len() as u64,
                count_monomials_of_degree(&w, d)
            );
        }
        // Weighted case.
        let w2 = [1, 2];
        for d in 0..10 {
            assert_eq!(
                monomials_of_degree(2, &w2, d).len() as u64,
                count_monomials_of_degree(&w2, d)
            );
        }
    }

    #[test]
    fn degree_two_in_three_vars_is_six() {
        assert_eq!(count_monomials_of_degree(&[1, 1, 1], 2), 6);
    }
}
