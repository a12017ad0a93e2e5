//! Multivariate polynomials with exact coefficients.
//!
//! Terms are kept sorted in strictly descending monomial order with no zero
//! coefficients, so equality is structural and printing is canonical.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::ring::GradedRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: GradedRing,
    /// Sorted descending under the ring order; coefficients nonzero.
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &GradedRing) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &GradedRing, c: Coeff) -> Polynomial {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(ring.nvars()), c));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_monomial(ring: &GradedRing, m: Monomial) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: alloc::vec![(m, ring.field().one())],
        }
    }

    /// Builds a polynomial from unsorted terms, combining duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: &GradedRing, mut terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let field = ring.field();
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = field.add(&last.1, &c);
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Weighted degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms
            .iter()
            .map(|(m, _)| self.ring.monomial_degree(m))
            .max()
    }

    /// True when every term has the same weighted degree. The zero
    /// polynomial is homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = self.ring.monomial_degree(m0);
                self.terms
                    .iter()
                    .all(|(m, _)| self.ring.monomial_degree(m) == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// True for a nonzero constant, i.e. a unit of the graded ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let field = self.ring.field();
        let mut out: Vec<(Monomial, Coeff)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ring.cmp_monomials(&self.terms[i].0, &other.terms[j].0) {
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
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Multiplies by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc: Vec<(Monomial, Coeff)> = Vec::new();
        for (m, c) in &other.terms {
            acc.extend(self.mul_term(m, c).terms);
        }
        Polynomial::from_terms(&self.ring, acc)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Rescales so the leading coefficient is 1. No-op on zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self
                    .ring
                    .field()
                    .inv(c)
                    .expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Exact division: returns `self / divisor` when the remainder of
    /// one-divisor long division is zero, else an error.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = self.ring.field();
        let (dm, dc) = divisor.leading_term().unwrap();
        let mut rem = self.clone();
        let mut quo: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((lm, lc)) = rem.leading_term() {
            if !dm.divides(lm) {
                return Err(Error::Precondition("division is not exact".into()));
            }
            let qm = dm.quotient(lm);
            let qc = field.div(lc, dc)?;
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
            quo.push((qm, qc));
        }
        Ok(Polynomial::from_terms(&self.ring, quo))
    }

    /// Re-interprets the polynomial in `target`, mapping variables by name.
    /// Variables missing from `target` must not occur in the support.
    pub fn map_to_ring(&self, target: &GradedRing) -> Result<Polynomial> {
        let indices: Vec<Option<usize>> = self
            .ring
            .variables()
            .iter()
            .map(|v| target.var_index(v))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = alloc::vec![0u32; target.nvars()];
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    match indices[i] {
                        Some(j) => exps[j] = e,
                        None => {
                            return Err(Error::UnknownVariable(
                                self.ring.variables()[i].clone(),
                            ))
                        }
                    }
                }
            }
            let c = match (target.field(), c) {
                (crate::field::Field::Rationals, Coeff::Rat(_)) => c.clone(),
                (crate::field::Field::Prime(_), Coeff::Fp(_)) => c.clone(),
                _ => return Err(Error::RingMismatch),
            };
            terms.push((Monomial { exps }, c));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Parses the grammar `expr := ['-'] term (('+'|'-') term)*`,
    /// `term := factor ('*' factor)*`, `factor := INT | VAR ['^' INT]`.
    pub fn parse(ring: &GradedRing, text: &str) -> Result<Polynomial> {
        Parser {
            ring,
            chars: text.chars().collect(),
            pos: 0,
        }
        .parse()
    }
}

struct Parser<'r> {
    ring: &'r GradedRing,
    chars: Vec<char>,
    pos: usize,
}

impl<'r> Parser<'r> {
    fn parse(mut self) -> Result<Polynomial> {
        let poly = self.expr()?;
        self.skip_ws();
        if self.pos != self.chars.len() {
            return Err(Error::Parse(alloc::format!(
                "unexpected character `{}` at position {}",
                self.chars[self.pos],
                self.pos
            )));
        }
        Ok(poly)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.peek() == Some('-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        let mut acc = {
            let t = self.term()?;
            if negate {
                t.neg()
            } else {
                t
            }
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                '-' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(
                    self.ring,
                    self.ring.field().from_bigint(&n),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.identifier();
                let idx = self
                    .ring
                    .var_index(&name)
                    .ok_or(Error::UnknownVariable(name))?;
                let exp = if self.peek() == Some('^') {
                    self.pos += 1;
                    let n = self.integer()?;
                    let (sign, digits) = n.to_u64_digits();
                    if sign == num_bigint::Sign::Minus {
                        return Err(Error::Parse("negative exponent".into()));
                    }
                    digits.first().copied().unwrap_or(0) as u32
                } else {
                    1
                };
                let mut m = Monomial::one(self.ring.nvars());
                m.exps[idx] = exp;
                Ok(Polynomial::from_terms(
                    self.ring,
                    alloc::vec![(m, self.ring.field().one())],
                ))
            }
            Some(c) => Err(Error::Parse(alloc::format!(
                "unexpected character `{c}` at position {}",
                self.pos
            ))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected an integer".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>()
            .map_err(|_| Error::Parse("invalid integer".into()))
    }

    fn identifier(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric()
                || self.chars[self.pos] == '_'
                || self.chars[self.pos] == '#')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let cs = c.to_display_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, String::from(rest)),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_string(self.ring(), m);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial_string(ring: &GradedRing, m: &Monomial) -> String {
    let mut out = String::new();
    for (i, &e) in m.exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(&ring.variables()[i]);
        if e > 1 {
            out.push('^');
            out.push_str(&alloc::format!("{e}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn qring() -> GradedRing {
        GradedRing::standard(Field::Rationals, alloc::vec!["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parse_homogeneous_quadric() {
        let r = qring();
        let p = r.parse_poly("x*z - y^2").unwrap();
        assert_eq!(p.degree(), Some(2));
        assert!(p.is_homogeneous());
        assert_eq!(p.terms().len(), 2);
    }

    #[test]
    fn parse_zero_has_no_degree() {
        let r = qring();
        let p = r.parse_poly("0").unwrap();
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert!(p.is_homogeneous());
    }

    #[test]
    fn parse_inhomogeneous_flagged() {
        let r = qring();
        let p = r.parse_poly("x + y^2").unwrap();
        assert!(!p.is_homogeneous());
    }

    #[test]
    fn parse_errors() {
        let r = qring();
        assert!(matches!(
            r.parse_poly("x*w"),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(r.parse_poly("x +"), Err(Error::Parse(_))));
        assert!(matches!(r.parse_poly("x y"), Err(Error::Parse(_))));
    }

    #[test]
    fn display_roundtrip() {
        let r = qring();
        for text in ["x*z - y^2", "x^2 - y*z", "2*x^3 + 3*x*y*z - 7", "0", "x - 1"] {
            let p = r.parse_poly(text).unwrap();
            let q = r.parse_poly(&alloc::format!("{p}")).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn degree_is_additive_on_homogeneous() {
        let r = qring();
        let p = r.parse_poly("x*z - y^2").unwrap();
        let q = r.parse_poly("x + y").unwrap();
        assert_eq!(p.mul(&q).degree(), Some(3));
    }

    #[test]
    fn arithmetic_cancellation() {
        let r = qring();
        let p = r.parse_poly("x^2 - y*z").unwrap();
        assert!(p.sub(&p).is_zero());
        let q = p.add(&p.neg());
        assert!(q.is_zero());
    }

    #[test]
    fn exact_division() {
        let r = qring();
        let p = r.parse_poly("x^2 - y^2").unwrap();
        let d = r.parse_poly("x - y").unwrap();
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, r.parse_poly("x + y").unwrap());
        assert!(r.parse_poly("x^2 - y*z").unwrap().exact_div(&d).is_err());
    }

    #[test]
    fn weighted_degrees() {
        let r = GradedRing::new(
            Field::Rationals,
            alloc::vec!["x", "y"],
            alloc::vec![1, 2],
            crate::monomial::MonomialOrder::DegRevLex,
        )
        .unwrap();
        let p = r.parse_poly("x^2 - y").unwrap();
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(2));
    }
}
