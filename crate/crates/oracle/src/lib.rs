//! Degree-bounded brute-force oracles used by the test suites.
//!
//! Everything here works through dense exact linear algebra on monomial
//! coefficient vectors, independently of the Groebner machinery it is used
//! to check: membership, graded-piece dimensions, and ideal quotients are
//! computed degree by degree from first principles.

use resint_core::monomial::{monomials_of_degree, Monomial};
use resint_core::{Coeff, Field, GradedRing, Polynomial};

/// Dense matrix over the coefficient field, in row-major order.
pub struct Matrix {
    pub field: Field,
    pub rows: Vec<Vec<Coeff>>,
    pub cols: usize,
}

impl Matrix {
    pub fn new(field: Field, cols: usize) -> Matrix {
        Matrix {
            field,
            rows: Vec::new(),
            cols,
        }
    }

    pub fn push_row(&mut self, row: Vec<Coeff>) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// columns.
    pub fn echelonize(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows.len() {
                break;
            }
            let Some(p) = (row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero()) else {
                continue;
            };
            self.rows.swap(row, p);
            let inv = f.inv(&self.rows[row][col]).unwrap();
            for c in col..self.cols {
                self.rows[row][c] = f.mul(&self.rows[row][c], &inv);
            }
            for r in 0..self.rows.len() {
                if r != row && !self.rows[r][col].is_zero() {
                    let factor = self.rows[r][col].clone();
                    for c in col..self.cols {
                        let sub = f.mul(&self.rows[row][c], &factor);
                        self.rows[r][c] = f.sub(&self.rows[r][c], &sub);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        self.rows.truncate(row);
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.echelonize();
        self.rows.len()
    }

    /// Basis of the right nullspace.
    pub fn nullspace(mut self) -> Vec<Vec<Coeff>> {
        let f = self.field;
        let pivots = self.echelonize();
        let mut basis = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                // Echelon rows are normalized: x_pc = -row[free] * x_free.
                v[pc] = f.neg(&self.rows[r][free]);
            }
            basis.push(v);
        }
        basis
    }
}

/// Coefficient vector of a homogeneous polynomial on the monomial basis of
/// its degree.
pub fn coeff_vector(ring: &GradedRing, basis: &[Monomial], p: &Polynomial) -> Vec<Coeff> {
    let f = ring.field();
    let mut v = vec![f.zero(); basis.len()];
    for (m, c) in p.terms() {
        let idx = basis
            .iter()
            .position(|b| b == m)
            .expect("monomial outside the degree basis");
        v[idx] = c.clone();
    }
    v
}

/// Spanning vectors of the degree-`delta` piece of the ideal generated by
/// `gens`: all `m * g` with matching degree.
pub fn piece_spanning_vectors(
    ring: &GradedRing,
    gens: &[Polynomial],
    delta: i64,
) -> (Vec<Monomial>, Vec<Vec<Coeff>>) {
    let basis = monomials_of_degree(ring.nvars(), ring.weights(), delta);
    let mut vectors = Vec::new();
    for g in gens {
        let Some(d) = g.degree() else { continue };
        if d > delta {
            continue;
        }
        for m in monomials_of_degree(ring.nvars(), ring.weights(), delta - d) {
            let prod = g.mul_term(&m, &ring.field().one());
            vectors.push(coeff_vector(ring, &basis, &prod));
        }
    }
    (basis, vectors)
}

/// Dimension of the degree-`delta` piece of `(gens)` by Gaussian rank.
pub fn piece_dim(ring: &GradedRing, gens: &[Polynomial], delta: i64) -> usize {
    let (basis, vectors) = piece_spanning_vectors(ring, gens, delta);
    let mut m = Matrix::new(ring.field(), basis.len());
    for v in vectors {
        m.push_row(v);
    }
    m.rank()
}

/// Membership of a homogeneous `f` in `(gens)`, decided inside the single
/// graded piece of `deg f`.
pub fn is_member(ring: &GradedRing, gens: &[Polynomial], f: &Polynomial) -> bool {
    if f.is_zero() {
        return true;
    }
    let delta = f.degree().unwrap();
    let (basis, vectors) = piece_spanning_vectors(ring, gens, delta);
    let mut with_f = Matrix::new(ring.field(), basis.len());
    let mut without = Matrix::new(ring.field(), basis.len());
    for v in &vectors {
        with_f.push_row(v.clone());
        without.push_row(v.clone());
    }
    with_f.push_row(coeff_vector(ring, &basis, f));
    with_f.rank() == without.rank()
}

/// The degree-`delta` piece of the quotient `a : I`, solved as a nullspace:
/// coefficients `r` of degree `delta` with `r * f ∈ a` for every generator
/// `f` of `I`. Returns the piece dimension and a polynomial basis.
pub fn quotient_piece(
    ring: &GradedRing,
    a_gens: &[Polynomial],
    i_gens: &[Polynomial],
    delta: i64,
) -> (usize, Vec<Polynomial>) {
    let f = ring.field();
    let basis = monomials_of_degree(ring.nvars(), ring.weights(), delta);
    if basis.is_empty() {
        return (0, Vec::new());
    }
    let mut constraints = Matrix::new(f, basis.len());
    for gen in i_gens {
        let d = gen.degree().expect("nonzero generators");
        let target_basis = monomials_of_degree(ring.nvars(), ring.weights(), delta + d);
        // Echelon form of a's piece in degree delta + d.
        let (_, a_vectors) = piece_spanning_vectors(ring, a_gens, delta + d);
        let mut a_mat = Matrix::new(f, target_basis.len());
        for v in a_vectors {
            a_mat.push_row(v);
        }
        let pivots = a_mat.echelonize();

        // Residual of m_i * gen after reduction by a's echelon rows; each
        // coordinate of the residual is one linear constraint on the r_i.
        let mut residuals: Vec<Vec<Coeff>> = Vec::with_capacity(basis.len());
        for m in &basis {
            let prod = gen.mul_term(m, &f.one());
            let mut v = coeff_vector(ring, &target_basis, &prod);
            for (r, &pc) in pivots.iter().enumerate() {
                if !v[pc].is_zero() {
                    let factor = v[pc].clone();
                    for c in 0..target_basis.len() {
                        let sub = f.mul(&a_mat.rows[r][c], &factor);
                        v[c] = f.sub(&v[c], &sub);
                    }
                }
            }
            residuals.push(v);
        }
        // Transpose: one constraint row per surviving target coordinate.
        for c in 0..target_basis.len() {
            if residuals.iter().all(|v| v[c].is_zero()) {
                continue;
            }
            constraints.push_row(residuals.iter().map(|v| v[c].clone()).collect());
        }
    }
    let null = constraints.nullspace();
    let polys = null
        .iter()
        .map(|v| {
            Polynomial::from_terms(
                ring,
                basis
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect(),
            )
        })
        .collect();
    (null.len(), polys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use resint_core::groebner::GradedIdeal;
    use resint_core::Budget;

    fn ring3() -> GradedRing {
        GradedRing::standard(Field::Rationals, vec!["x", "y", "z"]).unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let f = Field::Rationals;
        let mut m = Matrix::new(f, 3);
        m.push_row(vec![f.from_int(1), f.from_int(2), f.from_int(3)]);
        m.push_row(vec![f.from_int(2), f.from_int(4), f.from_int(6)]);
        let null = m.nullspace();
        assert_eq!(null.len(), 2);
    }

    #[test]
    fn piece_dims_match_groebner() {
        let r = ring3();
        let gens: Vec<Polynomial> = ["x*z - y^2", "x^2 - y*z", "x*y - z^2"]
            .iter()
            .map(|s| r.parse_poly(s).unwrap())
            .collect();
        let ideal = GradedIdeal::new(&r, gens.clone(), Budget::DEFAULT).unwrap();
        for delta in 0..7 {
            assert_eq!(
                piece_dim(&r, &gens, delta) as i128,
                ideal.piece_dim(delta),
                "degree {delta}"
            );
        }
    }

    #[test]
    fn membership_against_groebner() {
        let r = ring3();
        let gens: Vec<Polynomial> = ["x*z - y^2", "x^2 - y*z"]
            .iter()
            .map(|s| r.parse_poly(s).unwrap())
            .collect();
        let ideal = GradedIdeal::new(&r, gens.clone(), Budget::DEFAULT).unwrap();
        for text in ["x^2*z - x*y^2", "x^2 - y*z", "x^3", "z^3", "x*y*z"] {
            let p = r.parse_poly(text).unwrap();
            assert_eq!(
                is_member(&r, &gens, &p),
                ideal.contains(&p).unwrap(),
                "{text}"
            );
        }
    }

    #[test]
    fn quotient_piece_principal_case() {
        // (x^2) : (x) = (x): in degree 1 the quotient piece is span{x}.
        let r = ring3();
        let a = vec![r.parse_poly("x^2").unwrap()];
        let i = vec![r.parse_poly("x").unwrap()];
        let (dim, basis) = quotient_piece(&r, &a, &i, 1);
        assert_eq!(dim, 1);
        assert!(!basis[0].is_zero());
        assert_eq!(basis[0].degree(), Some(1));
    }
}
