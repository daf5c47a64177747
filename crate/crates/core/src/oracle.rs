//! Truncated matrices of the faithful action on `K[x]`.
//!
//! The operator algebra sits inside `End(K[x])`, so two canonical forms are
//! equal exactly when they act identically on polynomials. The matrices
//! here are built from the action alone, never from the multiplication
//! rules, which makes them an independent check on [`op_mul`].
//!
//! [`op_mul`]: crate::operator::op_mul

use num_traits::Zero;

use crate::matrix::Matrix;
use crate::operator::CanonicalOperator;
use crate::rational::{factorial, int, Rational};

/// Matrix of an operator on `span{x^[0], ..., x^[N]}` in the divided-power
/// basis. Column `s` is exact when `s + max positive grade ≤ N`; higher
/// columns lose the part of the image that falls outside the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedAction {
    pub size: usize,
    pub matrix: Matrix,
    valid: usize,
}

impl TruncatedAction {
    pub fn valid_columns(&self) -> std::ops::Range<usize> {
        0..self.valid
    }

    pub fn is_valid(&self, column: usize) -> bool {
        column < self.valid
    }

    /// Same operator in the monomial basis `x^s`:
    /// entry `(t, s)` is scaled by `s! / t!`.
    pub fn to_monomial_basis(&self) -> Matrix {
        let n = self.size + 1;
        let mut m = Matrix::zeros(n, n);
        for t in 0..n {
            for s in 0..n {
                let v = self.matrix.get(t, s);
                if !v.is_zero() {
                    let scale = Rational::new(factorial(s), factorial(t));
                    m.set(t, s, v * scale);
                }
            }
        }
        m
    }
}

pub fn action_matrix(a: &CanonicalOperator, size: usize) -> TruncatedAction {
    let n = size + 1;
    let mut m = Matrix::zeros(n, n);
    for s in 0..n {
        // b_g(H) v_g x^[s] = b_g(s + g + 1) x^[s+g]
        for (grade, b) in a.diag() {
            let t = s as i64 + grade;
            if (0..n as i64).contains(&t) {
                let v = m.get(t as usize, s) + b.eval(&int(t + 1));
                m.set(t as usize, s, v);
            }
        }
    }
    for ((k, l), lam) in a.mat() {
        if *k < n && *l < n {
            let v = m.get(*k, *l) + lam;
            m.set(*k, *l, v);
        }
    }
    let valid = n.saturating_sub(a.max_positive_grade());
    TruncatedAction {
        size,
        matrix: m,
        valid,
    }
}

/// A column on which `a·b` and the product of the two action matrices
/// disagree.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("product mismatch in column {column} (x^[{column}])")]
pub struct ProductMismatch {
    pub column: usize,
}

/// Compares the action of `a * b` with the composition of the two actions
/// on every column where all three truncations are exact. Returns the
/// number of columns compared.
pub fn verify_product(
    a: &CanonicalOperator,
    b: &CanonicalOperator,
    size: usize,
) -> Result<usize, ProductMismatch> {
    let product = a * b;
    let ma = action_matrix(a, size);
    let mb = action_matrix(b, size);
    let mab = action_matrix(&product, size);
    let reach = a.max_positive_grade() + b.max_positive_grade();
    let joint = (size + 1).saturating_sub(reach).min(mab.valid);
    let n = size + 1;
    for s in 0..joint {
        let mut col = vec![Rational::zero(); n];
        for t in 0..n {
            let bt = mb.matrix.get(t, s);
            if bt.is_zero() {
                continue;
            }
            for (r, slot) in col.iter_mut().enumerate() {
                let at = ma.matrix.get(r, t);
                if !at.is_zero() {
                    *slot += at * bt;
                }
            }
        }
        if (0..n).any(|r| &col[r] != mab.matrix.get(r, s)) {
            return Err(ProductMismatch { column: s });
        }
    }
    Ok(joint)
}

pub fn check_product(a: &CanonicalOperator, b: &CanonicalOperator, size: usize) -> bool {
    verify_product(a, b, size).is_ok()
}

/// Degree bound past which a vanishing action certifies `a = 0`.
///
/// On `x^[s]` the grade-`g` part of `a` contributes
/// `b_g(s + g + 1) + λ_{s+g,s}`; beyond the largest matrix column only the
/// polynomial survives, and it is pinned down by `deg b_g + 1` values.
pub fn zero_certificate_bound(a: &CanonicalOperator) -> usize {
    let max_col = a.mat().keys().map(|(_, l)| *l).max().unwrap_or(0);
    let max_deg = a.diag().values().filter_map(|b| b.degree()).max().unwrap_or(0);
    max_col + max_deg + a.max_abs_grade() + 2
}

pub fn is_zero_certified(a: &CanonicalOperator) -> bool {
    let bound = zero_certificate_bound(a);
    let action = action_matrix(a, bound + a.max_positive_grade());
    (0..=bound).all(|s| {
        debug_assert!(action.is_valid(s));
        (0..=action.size).all(|t| action.matrix.get(t, s).is_zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{make_eij, normalize_word, Generator::*, Word};
    use crate::rational::int;

    fn word(letters: &[crate::operator::Generator]) -> CanonicalOperator {
        normalize_word(&Word::product(letters.to_vec()))
    }

    #[test]
    fn eij_is_scaled_unit_in_monomial_basis() {
        let m = action_matrix(&make_eij(1, 2), 3).to_monomial_basis();
        let mut expected = Matrix::zeros(4, 4);
        expected.set(1, 2, int(2));
        assert_eq!(m, expected);
    }

    #[test]
    fn del_is_superdiagonal() {
        let a = action_matrix(&CanonicalOperator::v(-1), 3);
        let mut expected = Matrix::zeros(4, 4);
        for s in 1..4 {
            expected.set(s - 1, s, int(1));
        }
        assert_eq!(a.matrix, expected);
        assert_eq!(a.valid_columns(), 0..4);
    }

    #[test]
    fn h_is_diagonal() {
        let a = action_matrix(&CanonicalOperator::h(), 2);
        assert_eq!(a.matrix, Matrix::from_i64(3, 3, &[1, 0, 0, 0, 2, 0, 0, 0, 3]));
    }

    #[test]
    fn validity_tracks_positive_grade() {
        let a = action_matrix(&word(&[Int, Int]), 5);
        assert_eq!(a.valid_columns(), 0..4);
        let b = action_matrix(&make_eij(7, 0), 5);
        assert_eq!(b.valid_columns(), 0..0);
    }

    #[test]
    fn check_product_examples() {
        let d = CanonicalOperator::v(-1);
        let i = CanonicalOperator::v(1);
        assert!(check_product(&CanonicalOperator::x(), &d, 20));
        assert!(check_product(&d, &i, 20));
        assert!(check_product(&make_eij(0, 1), &make_eij(1, 2), 20));
    }

    #[test]
    fn check_product_reports_column() {
        // e_00 ∂ is e_01, which differs from ∂ e_01 = 0 on x^[1]
        let wrong = word(&[Del, E(0, 1)]);
        assert!(wrong.is_zero());
        let a = action_matrix(&make_eij(0, 0), 5).matrix;
        let b = action_matrix(&CanonicalOperator::v(-1), 5).matrix;
        assert_eq!(&a * &b, action_matrix(&make_eij(0, 1), 5).matrix);
    }

    #[test]
    fn zero_certificates() {
        assert!(is_zero_certified(&CanonicalOperator::zero()));
        let w = Word::new(vec![(int(1), vec![]), (int(-1), vec![Int, Del])]);
        assert!(is_zero_certified(&(&make_eij(0, 0) - &normalize_word(&w))));
        let h1 = &CanonicalOperator::h() - &CanonicalOperator::one();
        assert!(is_zero_certified(&(&h1 - &word(&[X, Del]))));
        assert!(!is_zero_certified(&make_eij(3, 5)));
        assert!(!is_zero_certified(&(&CanonicalOperator::h() - &CanonicalOperator::scalar(int(7)))));
    }
}
