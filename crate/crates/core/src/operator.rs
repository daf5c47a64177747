//! Canonical forms and arithmetic of polynomial integro-differential
//! operators.
//!
//! Every operator is stored as `Σ b_i(H) v_i + Σ λ_ij e_ij`, where
//! `v_i = ∫^i` for `i > 0`, `v_0 = 1`, `v_i = ∂^{|i|}` for `i < 0`, the
//! coefficients `b_i` are polynomials in `H = ∂x` written on the left, and
//! `e_ij = ∫^i ∂^j - ∫^{i+1} ∂^{j+1}` are the matrix units spanning the ideal
//! `F`. This representation is unique, so equality of operators is equality
//! of the two sparse maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::hpoly::{fmt_poly, HPoly};
use crate::rational::{factorial, int, Rational};

/// Letters of the free algebra mapped onto the operator algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Multiplication by `x`.
    X,
    /// `d/dx`.
    Del,
    /// Integration `∫_0^x`.
    Int,
    /// `H = ∂x`.
    H,
    /// Matrix unit `e_ij`.
    E(usize, usize),
}

impl Generator {
    pub fn to_operator(self) -> CanonicalOperator {
        match self {
            Generator::X => CanonicalOperator::x(),
            Generator::Del => CanonicalOperator::v(-1),
            Generator::Int => CanonicalOperator::v(1),
            Generator::H => CanonicalOperator::h(),
            Generator::E(i, j) => CanonicalOperator::eij(i, j),
        }
    }

    /// Direct action on a polynomial, straight from the definitions of the
    /// generators as linear maps of `K[x]`.
    pub fn act(self, p: &XPoly) -> XPoly {
        match self {
            Generator::X => p.mul_x(),
            Generator::Del => p.derivative(),
            Generator::Int => p.integral(),
            Generator::H => p.mul_x().derivative(),
            Generator::E(i, j) => {
                let first = (0..j).fold(p.clone(), |q, _| q.derivative());
                let first = (0..i).fold(first, |q, _| q.integral());
                let second = (0..=j).fold(p.clone(), |q, _| q.derivative());
                let second = (0..=i).fold(second, |q, _| q.integral());
                &first - &second
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X => f.write_str("x"),
            Generator::Del => f.write_str("d"),
            Generator::Int => f.write_str("i"),
            Generator::H => f.write_str("H"),
            Generator::E(i, j) => write!(f, "e({i},{j})"),
        }
    }
}

/// A linear combination of products of generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word {
    pub terms: Vec<(Rational, Vec<Generator>)>,
}

impl Word {
    pub fn new(terms: Vec<(Rational, Vec<Generator>)>) -> Self {
        Word { terms }
    }

    pub fn product(letters: Vec<Generator>) -> Self {
        Word {
            terms: vec![(Rational::one(), letters)],
        }
    }

    /// Applies each product letter by letter, right to left, and sums.
    pub fn act(&self, p: &XPoly) -> XPoly {
        self.terms.iter().fold(XPoly::zero(), |acc, (c, letters)| {
            let image = letters.iter().rev().fold(p.clone(), |q, g| g.act(&q));
            &acc + &image.scale(c)
        })
    }
}

/// Canonical form of an element of the operator algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CanonicalOperator {
    diag: BTreeMap<i64, HPoly>,
    mat: BTreeMap<(usize, usize), Rational>,
}

impl CanonicalOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::diag_term(0, HPoly::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::diag_term(0, HPoly::constant(c))
    }

    pub fn h() -> Self {
        Self::diag_term(0, HPoly::h())
    }

    /// `v_grade`: a power of `∫` for positive grades, of `∂` for negative ones.
    pub fn v(grade: i64) -> Self {
        Self::diag_term(grade, HPoly::one())
    }

    /// `x = ∫H = (H - 1)∫`.
    pub fn x() -> Self {
        Self::diag_term(1, HPoly::from_coeffs(vec![-Rational::one(), Rational::one()]))
    }

    pub fn eij(i: usize, j: usize) -> Self {
        Self::mat_term(i, j, Rational::one())
    }

    pub fn diag_term(grade: i64, b: HPoly) -> Self {
        let mut op = Self::zero();
        op.add_diag(grade, b);
        op
    }

    pub fn mat_term(i: usize, j: usize, c: Rational) -> Self {
        let mut op = Self::zero();
        op.add_mat(i, j, c);
        op
    }

    pub fn from_parts(
        diag: impl IntoIterator<Item = (i64, HPoly)>,
        mat: impl IntoIterator<Item = ((usize, usize), Rational)>,
    ) -> Self {
        let mut op = Self::zero();
        for (g, b) in diag {
            op.add_diag(g, b);
        }
        for ((i, j), c) in mat {
            op.add_mat(i, j, c);
        }
        op
    }

    pub fn diag(&self) -> &BTreeMap<i64, HPoly> {
        &self.diag
    }

    pub fn mat(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.mat
    }

    pub fn is_zero(&self) -> bool {
        self.diag.is_empty() && self.mat.is_empty()
    }

    fn add_diag(&mut self, grade: i64, b: HPoly) {
        if b.is_zero() {
            return;
        }
        let sum = match self.diag.remove(&grade) {
            Some(old) => &old + &b,
            None => b,
        };
        if !sum.is_zero() {
            self.diag.insert(grade, sum);
        }
    }

    fn add_mat(&mut self, i: usize, j: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let sum = match self.mat.remove(&(i, j)) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.mat.insert((i, j), sum);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CanonicalOperator {
            diag: self.diag.iter().map(|(g, b)| (*g, b.scale(c))).collect(),
            mat: self.mat.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Adds `h(H) · v_i · v_j` to `self`.
    fn add_shift_product(&mut self, h: HPoly, i: i64, j: i64) {
        if i > 0 && j < 0 {
            // ∫^a ∂^m kills x^[s] for s < m, where v_{a-m} would not.
            let (a, m) = (i, -j);
            self.add_diag(a - m, h.clone());
            for s in (m - a).max(0)..m {
                let row = (s + a - m) as usize;
                let coeff = h.eval(&int(row as i64 + 1));
                self.add_mat(row, s as usize, -coeff);
            }
        } else {
            self.add_diag(i + j, h);
        }
    }

    /// The homogeneous part of degree `grade`; `e_kl` has degree `k - l`.
    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn grade_component(&self, grade: i64) -> Self {
        CanonicalOperator {
            diag: self
                .diag
                .get(&grade)
                .map(|b| (grade, b.clone()))
                .into_iter()
                .collect(),
            mat: self
                .mat
                .iter()
                .filter(|((k, l), _)| *k as i64 - *l as i64 == grade)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Grades with a nonzero component, ascending.
    pub fn grades(&self) -> Vec<i64> {
        let mut gs: Vec<i64> = self.diag.keys().copied().collect();
        gs.extend(self.mat.keys().map(|(k, l)| *k as i64 - *l as i64));
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// Largest grade, floored at zero.
    pub fn max_positive_grade(&self) -> usize {
        self.grades().last().copied().unwrap_or(0).max(0) as usize
    }

    pub fn max_abs_grade(&self) -> usize {
        self.grades().iter().map(|g| g.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Membership in the ideal `F` spanned by the matrix units.
    pub fn is_in_f(&self) -> bool {
        self.diag.is_empty()
    }

    /// Image in `B₁ = K[H][∂, ∂⁻¹; τ]`: the matrix part is dropped.
    pub fn project_to_b1(&self) -> B1Element {
        B1Element::from_terms(self.diag.clone())
    }

    /// Action on a polynomial given by its coefficients in the divided-power
    /// basis `x^[s] = x^s / s!`.
    pub fn apply_divided(&self, input: &[Rational]) -> Vec<Rational> {
        let top = input.len() as i64 - 1 + self.max_positive_grade() as i64;
        let mut out = vec![Rational::zero(); (top + 1).max(0) as usize];
        for (s, c) in input.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (grade, b) in &self.diag {
                let t = s as i64 + grade;
                if t >= 0 {
                    out[t as usize] += b.eval(&int(t + 1)) * c;
                }
            }
            for ((k, l), lam) in &self.mat {
                if *l == s {
                    out[*k] += lam * c;
                }
            }
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    pub fn apply(&self, p: &XPoly) -> XPoly {
        XPoly::from_divided(&self.apply_divided(&p.to_divided()))
    }
}

pub fn op_add(a: &CanonicalOperator, b: &CanonicalOperator) -> CanonicalOperator {
    a + b
}

pub fn op_mul(a: &CanonicalOperator, b: &CanonicalOperator) -> CanonicalOperator {
    a * b
}

pub fn make_eij(i: usize, j: usize) -> CanonicalOperator {
    CanonicalOperator::eij(i, j)
}

pub fn normalize_word(w: &Word) -> CanonicalOperator {
    w.terms.iter().fold(CanonicalOperator::zero(), |acc, (c, letters)| {
        let prod = letters
            .iter()
            .fold(CanonicalOperator::one(), |p, g| &p * &g.to_operator());
        &acc + &prod.scale(c)
    })
}

impl Add for &CanonicalOperator {
    type Output = CanonicalOperator;
    fn add(self, rhs: &CanonicalOperator) -> CanonicalOperator {
        let mut out = self.clone();
        for (g, b) in &rhs.diag {
            out.add_diag(*g, b.clone());
        }
        for ((i, j), c) in &rhs.mat {
            out.add_mat(*i, *j, c.clone());
        }
        out
    }
}

impl Neg for &CanonicalOperator {
    type Output = CanonicalOperator;
    fn neg(self) -> CanonicalOperator {
        self.scale(&-Rational::one())
    }
}

impl Sub for &CanonicalOperator {
    type Output = CanonicalOperator;
    fn sub(self, rhs: &CanonicalOperator) -> CanonicalOperator {
        self + &(-rhs)
    }
}

impl Mul for &CanonicalOperator {
    type Output = CanonicalOperator;

    fn mul(self, rhs: &CanonicalOperator) -> CanonicalOperator {
        let mut out = CanonicalOperator::zero();
        for (&i, f) in &self.diag {
            // f v_i · g v_j = f(H) g(H - i) v_i v_j
            for (&j, g) in &rhs.diag {
                out.add_shift_product(f * &g.shift(-i), i, j);
            }
            // f v_i · e_kl = f(k + i + 1) e_{k+i,l}
            for (&(k, l), c) in &rhs.mat {
                let row = k as i64 + i;
                if row >= 0 {
                    out.add_mat(row as usize, l, f.eval(&int(row + 1)) * c);
                }
            }
        }
        for (&(k, l), c) in &self.mat {
            // e_kl · g v_j = g(l + 1) e_{k,l-j}
            for (&j, g) in &rhs.diag {
                let col = l as i64 - j;
                if col >= 0 {
                    out.add_mat(k, col as usize, g.eval(&int(l as i64 + 1)) * c);
                }
            }
            for (&(k2, l2), c2) in rhs.mat.range((l, 0)..(l + 1, 0)) {
                debug_assert_eq!(k2, l);
                out.add_mat(k, l2, c * c2);
            }
        }
        out
    }
}

fn write_sep(f: &mut fmt::Formatter<'_>, first: bool, negative: bool) -> fmt::Result {
    match (first, negative) {
        (true, true) => f.write_str("-"),
        (true, false) => Ok(()),
        (false, true) => f.write_str(" - "),
        (false, false) => f.write_str(" + "),
    }
}

fn grade_suffix(grade: i64, int_letter: &str, del_letter: &str) -> String {
    let (letter, n) = if grade > 0 {
        (int_letter, grade)
    } else {
        (del_letter, -grade)
    };
    if n == 1 {
        letter.to_string()
    } else {
        format!("{letter}^{n}")
    }
}

struct PolyView<'a>(&'a [Rational]);

impl fmt::Display for PolyView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, self.0, "H")
    }
}

/// Writes `Σ b_i(H) v_i` in ascending grade. Single-term coefficients are
/// folded into the sign; longer ones are parenthesised.
pub(crate) fn fmt_graded(
    f: &mut fmt::Formatter<'_>,
    terms: &BTreeMap<i64, HPoly>,
    first: &mut bool,
    suffix: impl Fn(i64) -> String,
) -> fmt::Result {
    for (&grade, b) in terms {
        let nonzero: Vec<(usize, &Rational)> =
            b.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if grade == 0 {
            for (k, c) in nonzero.iter().rev() {
                write_sep(f, *first, c.is_negative())?;
                *first = false;
                let mag = c.abs();
                match k {
                    0 => write!(f, "{mag}")?,
                    _ if mag.is_one() => write!(f, "{}", hmono(*k))?,
                    _ => write!(f, "{mag}*{}", hmono(*k))?,
                }
            }
            continue;
        }
        let v = suffix(grade);
        if let [(k, c)] = nonzero.as_slice() {
            write_sep(f, *first, c.is_negative())?;
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() {
                factors.push(mag.to_string());
            }
            if *k > 0 {
                factors.push(hmono(*k));
            }
            factors.push(v);
            f.write_str(&factors.join("*"))?;
        } else {
            write_sep(f, *first, false)?;
            write!(f, "({})*{v}", PolyView(b.coeffs()))?;
        }
        *first = false;
    }
    Ok(())
}

fn hmono(k: usize) -> String {
    if k == 1 {
        "H".to_string()
    } else {
        format!("H^{k}")
    }
}

/// Canonical text: graded terms in ascending grade (`d` for `∂`, `i` for
/// `∫`), then matrix units `e(i,j)` in lexicographic order.
impl fmt::Display for CanonicalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        fmt_graded(f, &self.diag, &mut first, |g| grade_suffix(g, "i", "d"))?;
        for ((i, j), c) in &self.mat {
            write_sep(f, first, c.is_negative())?;
            first = false;
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "e({i},{j})")?;
            } else {
                write!(f, "{mag}*e({i},{j})")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Element of the skew Laurent polynomial ring `K[H][∂, ∂⁻¹; τ]`,
/// `τ(H) = H + 1`, stored as `Σ b_i(H) ∂^{-i}` (so grade `i` matches the
/// grade of `v_i`, with `∫ ↦ ∂⁻¹`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct B1Element {
    terms: BTreeMap<i64, HPoly>,
}

impl B1Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, HPoly::one())
    }

    pub fn term(grade: i64, b: HPoly) -> Self {
        Self::from_terms([(grade, b)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, HPoly)>) -> Self {
        let mut out = Self::zero();
        for (g, b) in terms {
            out.add_term(g, b);
        }
        out
    }

    fn add_term(&mut self, grade: i64, b: HPoly) {
        if b.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&grade) {
            Some(old) => &old + &b,
            None => b,
        };
        if !sum.is_zero() {
            self.terms.insert(grade, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, HPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients written on the right: `Σ ∂^{-i} c_i(H)`, using
    /// `b(H) ∂^{-i} = ∂^{-i} b(H + i)`.
    pub fn right_coefficients(&self) -> BTreeMap<i64, HPoly> {
        self.terms.iter().map(|(g, b)| (*g, b.shift(*g))).collect()
    }
}

impl Add for &B1Element {
    type Output = B1Element;
    fn add(self, rhs: &B1Element) -> B1Element {
        let mut out = self.clone();
        for (g, b) in &rhs.terms {
            out.add_term(*g, b.clone());
        }
        out
    }
}

impl Mul for &B1Element {
    type Output = B1Element;
    fn mul(self, rhs: &B1Element) -> B1Element {
        let mut out = B1Element::zero();
        for (&i, f) in &self.terms {
            for (&j, g) in &rhs.terms {
                out.add_term(i + j, f * &g.shift(-i));
            }
        }
        out
    }
}

impl fmt::Display for B1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        fmt_graded(f, &self.terms, &mut first, |g| {
            if g == -1 {
                "d".to_string()
            } else if g < 0 {
                format!("d^{}", -g)
            } else {
                format!("d^-{g}")
            }
        })?;
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Polynomial in `x`, coefficients indexed by degree in the monomial basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XPoly {
    coeffs: Vec<Rational>,
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x^[s] = x^s / s!`.
    pub fn divided_power(s: usize) -> Self {
        Self::monomial(Rational::new(BigInt::one(), factorial(s)), s)
    }

    pub fn from_divided(divided: &[Rational]) -> Self {
        Self::from_coeffs(
            divided
                .iter()
                .enumerate()
                .map(|(s, c)| c / Rational::from_integer(factorial(s)))
                .collect(),
        )
    }

    pub fn to_divided(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(s, c)| c * Rational::from_integer(factorial(s)))
            .collect()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * int(n as i64))
                .collect(),
        )
    }

    /// Antiderivative vanishing at zero.
    pub fn integral(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / int(n as i64 + 1)),
        );
        Self::from_coeffs(coeffs)
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        XPoly::from_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self + &rhs.scale(&-Rational::one())
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "x")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use Generator::*;

    fn word(letters: &[Generator]) -> CanonicalOperator {
        normalize_word(&Word::product(letters.to_vec()))
    }

    fn poly(cs: &[i64]) -> HPoly {
        HPoly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn add_examples() {
        let d = CanonicalOperator::v(-1);
        assert!((&d + &-&d).is_zero());
        let e00 = CanonicalOperator::eij(0, 0);
        assert_eq!(&(&CanonicalOperator::one() - &e00) + &e00, CanonicalOperator::one());
        let e12 = CanonicalOperator::eij(1, 2);
        let h = CanonicalOperator::h();
        assert_eq!(&(&h + &e12) + &(&h - &e12), h.scale(&int(2)));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(word(&[Del, Int]), CanonicalOperator::one());
        assert_eq!(
            word(&[Int, Del]),
            &CanonicalOperator::one() - &CanonicalOperator::eij(0, 0)
        );
        assert_eq!(word(&[E(0, 1), E(1, 2)]), CanonicalOperator::eij(0, 2));
        assert_eq!(word(&[H, E(2, 2)]), CanonicalOperator::mat_term(2, 2, int(3)));
        assert_eq!(word(&[X, Del]), CanonicalOperator::diag_term(0, poly(&[-1, 1])));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(word(&[X]), CanonicalOperator::diag_term(1, poly(&[-1, 1])));
        assert_eq!(
            word(&[Int, Del, Int, Del]),
            &CanonicalOperator::one() - &CanonicalOperator::eij(0, 0)
        );
        assert_eq!(normalize_word(&Word::product(vec![])), CanonicalOperator::one());
        assert_eq!(normalize_word(&Word::default()), CanonicalOperator::zero());
    }

    #[test]
    fn eij_two_routes() {
        let w = Word::new(vec![
            (int(1), vec![Int, Int, Del]),
            (int(-1), vec![Int, Int, Int, Del, Del]),
        ]);
        assert_eq!(normalize_word(&w), make_eij(2, 1));
        let w00 = Word::new(vec![(int(1), vec![]), (int(-1), vec![Int, Del])]);
        assert_eq!(normalize_word(&w00), make_eij(0, 0));
    }

    #[test]
    fn eij_times_del_follows_definition() {
        // e_ij ∂ = e_{i,j+1}, not ∂ e_{i,j+1}
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(word(&[E(i, j), Del]), make_eij(i, j + 1));
                if i > 0 {
                    assert_ne!(word(&[E(i, j), Del]), word(&[Del, E(i, j + 1)]));
                }
            }
        }
    }

    #[test]
    fn grade_component_examples() {
        let a = &(&word(&[Del, Del]) + &CanonicalOperator::h()) + &make_eij(1, 3);
        assert_eq!(a.grade_component(-2), &word(&[Del, Del]) + &make_eij(1, 3));
        assert_eq!(CanonicalOperator::h().grade_component(0), CanonicalOperator::h());
        assert!(CanonicalOperator::x().grade_component(0).is_zero());
    }

    #[test]
    fn ideal_membership() {
        assert!((&make_eij(0, 0) + &make_eij(3, 1).scale(&int(5))).is_in_f());
        assert!(!(&CanonicalOperator::one() - &make_eij(0, 0)).is_in_f());
        assert!(!word(&[Int, Del]).is_in_f());
    }

    #[test]
    fn b1_projection_examples() {
        assert_eq!(word(&[Int, Del]).project_to_b1(), B1Element::one());
        assert!(make_eij(1, 2).project_to_b1().is_zero());
        assert_eq!(
            CanonicalOperator::x().project_to_b1(),
            B1Element::term(1, poly(&[-1, 1]))
        );
        assert_eq!(CanonicalOperator::x().project_to_b1().to_string(), "(H - 1)*d^-1");
    }

    #[test]
    fn apply_examples() {
        let x2 = XPoly::monomial(int(1), 2);
        assert_eq!(
            CanonicalOperator::v(1).apply(&x2),
            XPoly::monomial(ratio(1, 3), 3)
        );
        assert_eq!(
            make_eij(1, 2).apply(&XPoly::monomial(ratio(1, 2), 2)),
            XPoly::monomial(int(1), 1)
        );
        let x3 = XPoly::monomial(int(1), 3);
        assert_eq!(CanonicalOperator::h().apply(&x3), x3.scale(&int(4)));
    }

    #[test]
    fn letterwise_action_of_generators() {
        let p = XPoly::from_coeffs(vec![int(3), int(-1), ratio(1, 2), int(2)]);
        for g in [X, Del, Int, H, E(0, 0), E(2, 1), E(1, 3)] {
            assert_eq!(g.to_operator().apply(&p), g.act(&p), "{g}");
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(CanonicalOperator::zero().to_string(), "0");
        assert_eq!(CanonicalOperator::one().to_string(), "1");
        assert_eq!(word(&[Int, Del]).to_string(), "1 - e(0,0)");
        assert_eq!(CanonicalOperator::x().to_string(), "(H - 1)*i");
        let a = &(&word(&[Del, Del]).scale(&int(-2)) + &CanonicalOperator::h())
            + &make_eij(1, 3).scale(&ratio(3, 2));
        assert_eq!(a.to_string(), "-2*d^2 + H + 3/2*e(1,3)");
        let b = CanonicalOperator::diag_term(2, poly(&[0, 0, -3]));
        assert_eq!(b.to_string(), "-3*H^2*i^2");
    }
}
