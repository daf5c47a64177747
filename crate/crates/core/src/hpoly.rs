//! Univariate polynomials in the symbol `H` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational};

/// Polynomial in `H`, coefficients indexed by degree. The leading
/// coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HPoly {
    coeffs: Vec<Rational>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `H`.
    pub fn h() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `(H - root)^n`.
    pub fn linear_power(root: &Rational, n: usize) -> Self {
        let factor = Self::from_coeffs(vec![-root.clone(), Rational::one()]);
        (0..n).fold(Self::one(), |acc, _| &acc * &factor)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        HPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// `f(H + k)`, by Horner's scheme in the polynomial ring.
    pub fn shift(&self, k: i64) -> Self {
        self.shift_by(&int(k))
    }

    /// `f(H + c)` for a rational offset.
    pub fn shift_by(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let step = Self::from_coeffs(vec![c.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &step) + &Self::constant(c.clone()))
    }

    /// Remainder on division by a monic polynomial.
    pub fn rem_monic(&self, modulus: &HPoly) -> Self {
        let m = modulus.degree().expect("modulus must be nonzero");
        debug_assert!(modulus.coeffs[m].is_one());
        let mut r = self.coeffs.clone();
        while r.len() > m {
            let top = r.len() - 1;
            let lead = r[top].clone();
            if !lead.is_zero() {
                for (k, c) in modulus.coeffs.iter().enumerate() {
                    let idx = top - m + k;
                    r[idx] = &r[idx] - &lead * c;
                }
            }
            r.pop();
        }
        Self::from_coeffs(r)
    }
}

pub fn hpoly_shift(f: &HPoly, k: i64) -> HPoly {
    f.shift(k)
}

pub fn hpoly_eval(f: &HPoly, c: &Rational) -> Rational {
    f.eval(c)
}

impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        HPoly::from_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        self + &(-rhs)
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        if self.is_zero() || rhs.is_zero() {
            return HPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HPoly::from_coeffs(out)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Rational, mono: &str) -> fmt::Result {
    let mag = c.abs();
    if first {
        if c.is_negative() {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if c.is_negative() { " - " } else { " + " })?;
    }
    if mono.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(mono)
    } else {
        write!(f, "{mag}*{mono}")
    }
}

/// Writes a polynomial in `var` with descending powers, e.g. `H^2 - 4*H + 3`.
pub(crate) fn fmt_poly(f: &mut fmt::Formatter<'_>, coeffs: &[Rational], var: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        fmt_term(f, first, c, &mono)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "H")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> HPoly {
        HPoly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn shift_examples() {
        assert_eq!(HPoly::h().shift(1), poly(&[1, 1]));
        assert_eq!(poly(&[-1, 0, 1]).shift(-2), poly(&[3, -4, 1]));
        let f = poly(&[2, -3, 0, 5]);
        assert_eq!(f.shift(0), f);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly(&[-1, 1]).eval(&int(1)), int(0));
        assert_eq!(poly(&[0, 0, 1]).eval(&ratio(3, 2)), ratio(9, 4));
        let lam = ratio(2, 7);
        assert_eq!(HPoly::linear_power(&lam, 4).eval(&lam), int(0));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[3, -4, 1]).to_string(), "H^2 - 4*H + 3");
        assert_eq!(poly(&[-1, 1]).to_string(), "H - 1");
        assert_eq!(HPoly::zero().to_string(), "0");
        assert_eq!(HPoly::from_coeffs(vec![ratio(-1, 2), int(0), int(-1)]).to_string(), "-H^2 - 1/2");
    }

    #[test]
    fn rem_monic_reduces_degree() {
        let m = HPoly::linear_power(&int(2), 2);
        let f = poly(&[1, 2, 3, 4]);
        let r = f.rem_monic(&m);
        assert!(r.degree().unwrap_or(0) < 2);
        // f and r agree at the double root together with their derivatives
        assert_eq!(f.eval(&int(2)), r.eval(&int(2)));
    }

    fn arb_poly() -> impl Strategy<Value = HPoly> {
        prop::collection::vec(-5i64..=5, 0..6).prop_map(|cs| poly(&cs))
    }

    proptest! {
        #[test]
        fn shift_composes(f in arb_poly(), a in -6i64..6, b in -6i64..6) {
            prop_assert_eq!(f.shift(a).shift(b), f.shift(a + b));
        }

        #[test]
        fn shift_matches_eval(f in arb_poly(), k in -6i64..6, c in -20i64..20, d in 1i64..5) {
            let at = ratio(c, d);
            prop_assert_eq!(f.shift(k).eval(&at), f.eval(&(&at + int(k))));
        }
    }
}
