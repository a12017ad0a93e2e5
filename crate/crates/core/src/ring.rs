//! Graded polynomial rings over an exact field.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

#[derive(Debug, PartialEq, Eq, Hash)]
pub(crate) struct RingInner {
    pub field: Field,
    pub vars: Vec<String>,
    pub weights: Vec<u32>,
    pub order: MonomialOrder,
}

/// A polynomial ring with a positive grading and a monomial order.
///
/// Cheap to clone (shared pointer); immutable after construction. Two rings
/// compare equal when they have the same field, variables, weights and
/// order, so structurally identical rings interoperate.
#[derive(Debug, Clone)]
pub struct GradedRing {
    pub(crate) inner: Arc<RingInner>,
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for GradedRing {}

impl GradedRing {
    /// Builds a graded polynomial ring. Weights default to 1 when `weights`
    /// is empty (standard grading).
    pub fn new<S: Into<String>>(
        field: Field,
        variables: Vec<S>,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<GradedRing> {
        let vars: Vec<String> = variables.into_iter().map(Into::into).collect();
        let weights = if weights.is_empty() {
            alloc::vec![1; vars.len()]
        } else {
            weights
        };
        if weights.len() != vars.len() {
            return Err(Error::Precondition(
                "weights and variables must have equal length".into(),
            ));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::NonpositiveWeight);
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Parse(alloc::format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        Ok(GradedRing {
            inner: Arc::new(RingInner {
                field,
                vars,
                weights,
                order,
            }),
        })
    }

    /// Standard-graded ring with all weights 1 and degrevlex order.
    pub fn standard<S: Into<String>>(field: Field, variables: Vec<S>) -> Result<GradedRing> {
        GradedRing::new(field, variables, Vec::new(), MonomialOrder::DegRevLex)
    }

    pub fn field(&self) -> Field {
        self.inner.field
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.inner.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.inner.order
    }

    /// Sum of the variable weights; `-sum` is the canonical-module twist of
    /// the ring.
    pub fn weight_sum(&self) -> i64 {
        self.inner.weights.iter().map(|&w| w as i64).sum()
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.inner.order.cmp(a, b, &self.inner.weights)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        m.degree(&self.inner.weights)
    }

    /// Parses a polynomial in the grammar `+ - * ^` with integer
    /// coefficients; juxtaposition is not allowed and whitespace is
    /// insignificant.
    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(self, text)
    }

    /// The zero polynomial.
    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    /// The constant polynomial 1.
    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self, self.inner.field.one())
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::from_monomial(self, Monomial::var(self.nvars(), i))
    }

    /// Extends the ring by a fresh tag variable in front, switching to the
    /// `Elim(1)` block order. Used by the intersection trick.
    pub(crate) fn extend_with_tag(&self) -> GradedRing {
        let mut vars: Vec<String> = Vec::with_capacity(self.nvars() + 1);
        let mut tag = String::from("t#");
        while self.inner.vars.contains(&tag) {
            tag.push('#');
        }
        vars.push(tag);
        vars.extend(self.inner.vars.iter().cloned());
        let mut weights = Vec::with_capacity(self.nvars() + 1);
        weights.push(1);
        weights.extend_from_slice(&self.inner.weights);
        GradedRing {
            inner: Arc::new(RingInner {
                field: self.inner.field,
                vars,
                weights,
                order: MonomialOrder::Elim(1),
            }),
        }
    }

    pub(crate) fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.vars.iter().position(|v| v == name)
    }
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.inner.field)?;
        for (i, v) in self.inner.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")?;
        if self.inner.weights.iter().any(|&w| w != 1) {
            write!(f, " weights ")?;
            for (i, w) in self.inner.weights.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}

/// Convenience constructor matching the toolkit's entry-point signature.
pub fn create_ring<S: Into<String>>(
    field: Field,
    variables: Vec<S>,
    weights: Vec<u32>,
    order: MonomialOrder,
) -> Result<GradedRing> {
    GradedRing::new(field, variables, weights, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_errors() {
        let r = GradedRing::standard(Field::Rationals, alloc::vec!["x", "y", "z"]).unwrap();
        assert_eq!(r.nvars(), 3);
        assert_eq!(r.weight_sum(), 3);

        let dup = GradedRing::standard(Field::Rationals, alloc::vec!["x", "x"]);
        assert_eq!(dup, Err(Error::DuplicateVariable(String::from("x"))));

        let bad = GradedRing::new(
            Field::Rationals,
            alloc::vec!["x"],
            alloc::vec![0],
            MonomialOrder::DegRevLex,
        );
        assert_eq!(bad, Err(Error::NonpositiveWeight));
    }

    #[test]
    fn structurally_equal_rings_compare_equal() {
        let a = GradedRing::standard(Field::Rationals, alloc::vec!["x", "y"]).unwrap();
        let b = GradedRing::standard(Field::Rationals, alloc::vec!["x", "y"]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tag_extension_uses_elimination_order() {
        let r = GradedRing::standard(Field::Rationals, alloc::vec!["x", "y"]).unwrap();
        let ext = r.extend_with_tag();
        assert_eq!(ext.nvars(), 3);
        assert_eq!(ext.order(), MonomialOrder::Elim(1));
        assert_eq!(ext.variables()[0], "t#");
    }
}
