//! Classification of finite-length generalized weight modules and the
//! Hom and Ext dimensions between the indecomposables.
//!
//! Every such module is `K[x]^s ⊕ ⊕ M(n_k, λ_k)`: `s` is the rank of `e_00`
//! on weight 1, and the `M(n, λ)` factors are read off the Jordan type of
//! `H - λ` on one weight space of the complement of `FM`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use super::{
    common_window, make_kx, make_m, restrict, split_complement, Boundary, Submodule, WeightWindowModule,
};
use crate::error::{Error, Result};
use crate::hpoly::HPoly;
use crate::matrix::{Matrix, SparseSystem};
use crate::operator::B1Element;
use crate::rational::{format_rational, int, integer_offset, parse_rational, weight_class_of, Rational, WeightClass};

/// Block sizes of a nilpotent matrix, largest first, from the ranks of its
/// powers.
pub fn jordan_type(n: &Matrix) -> Result<Vec<usize>> {
    if !n.is_square() {
        return Err(Error::Shape(format!("{}x{} matrix has no Jordan type", n.rows(), n.cols())));
    }
    let d = n.rows();
    let mut ranks = vec![d];
    let mut power = Matrix::identity(d);
    while *ranks.last().expect("nonempty") > 0 {
        power = &power * n;
        let r = power.rank();
        if r == *ranks.last().expect("nonempty") {
            return Err(Error::NotNilpotent);
        }
        ranks.push(r);
    }
    ranks.push(0);
    // blocks of size ≥ k: ranks[k-1] - ranks[k]
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut sizes = Vec::new();
    for k in (1..at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(k, exactly));
    }
    Ok(sizes)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Factor {
    pub n: usize,
    pub class: WeightClass,
}

/// `K[x]^s ⊕ ⊕ M(n, class)`, with factors sorted by class then size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct DecompositionReport {
    pub s: usize,
    pub factors: Vec<Factor>,
}

impl DecompositionReport {
    pub fn new(s: usize, mut factors: Vec<Factor>) -> Self {
        factors.sort();
        DecompositionReport { s, factors }
    }

    pub fn merge(&self, other: &DecompositionReport) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Self::new(self.s + other.s, factors)
    }

    pub fn is_indecomposable(&self) -> bool {
        self.s + self.factors.len() == 1
    }
}

impl fmt::Display for DecompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.s > 0 {
            parts.push(if self.s == 1 { "Kx".to_string() } else { format!("Kx^{}", self.s) });
        }
        parts.extend(self.factors.iter().map(|fa| format!("M({},{})", fa.n, fa.class)));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Identifies a module up to isomorphism.
///
/// The module must be valid, contain weight 1 strictly above a truncated
/// lower edge when its class is integral, and have an interior of at least
/// `2·(largest block) + 3` weights.
pub fn decompose(m: &WeightWindowModule) -> Result<DecompositionReport> {
    m.validate()?;
    let (complement, split) = split_complement(m)?;
    let quotient = restrict(m, &complement)?;
    let interior: Vec<i64> = m.interior().collect();
    let Some(&first) = interior.first() else {
        return Err(Error::WindowTooSmall("the window has no interior weights".into()));
    };
    let partition = jordan_type(quotient.nilpotent(first))?;
    for &i in &interior[1..] {
        if jordan_type(quotient.nilpotent(i))? != partition {
            return Err(Error::InvalidModule(format!(
                "Jordan type of H changes between indices {first} and {i}"
            )));
        }
    }
    let largest = partition.first().copied().unwrap_or(0);
    if m.interior_width() < 2 * largest + 3 {
        return Err(Error::WindowTooSmall(format!(
            "interior width {} is below {} for blocks of size {largest}",
            m.interior_width(),
            2 * largest + 3
        )));
    }
    let class = m.class();
    let factors = partition
        .into_iter()
        .map(|n| Factor { n, class: class.clone() })
        .collect();
    Ok(DecompositionReport::new(split.multiplicity, factors))
}

pub fn is_isomorphic(a: &WeightWindowModule, b: &WeightWindowModule) -> Result<bool> {
    Ok(decompose(a)? == decompose(b)?)
}

/// An indecomposable from the classification: `K[x]` or `M(n, λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClassifiedModule {
    Kx,
    M { n: usize, lambda: Rational },
}

impl ClassifiedModule {
    pub fn m(n: usize, lambda: Rational) -> Self {
        ClassifiedModule::M { n, lambda }
    }

    pub fn class(&self) -> WeightClass {
        match self {
            ClassifiedModule::Kx => weight_class_of(&Rational::zero()),
            ClassifiedModule::M { lambda, .. } => weight_class_of(lambda),
        }
    }

    /// `[-(2n+3), 2n+3]` around the class representative; `[1, 5]` for `K[x]`.
    pub fn default_window(&self) -> (i64, i64) {
        match self {
            ClassifiedModule::Kx => (1, 5),
            ClassifiedModule::M { n, .. } => {
                let r = 2 * *n as i64 + 3;
                (-r, r)
            }
        }
    }

    /// The windowed module, with base weight the class representative.
    pub fn to_module(&self, window: Option<(i64, i64)>) -> Result<WeightWindowModule> {
        let (lo, hi) = window.unwrap_or_else(|| self.default_window());
        match self {
            ClassifiedModule::Kx => make_kx(hi.max(1))?.align_to(lo, hi),
            ClassifiedModule::M { n, lambda } => {
                let rep = weight_class_of(lambda).representative().clone();
                make_m(*n, &rep, lo, hi)
            }
        }
    }
}

impl FromStr for ClassifiedModule {
    type Err = Error;

    /// `Kx`, `K[x]`, or `M(n,λ)` with `λ` a rational literal.
    fn from_str(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "Kx" || t == "K[x]" {
            return Ok(ClassifiedModule::Kx);
        }
        let bad = || Error::Syntax {
            pos: 0,
            msg: format!("expected Kx or M(n,λ), found {text:?}"),
        };
        let inner = t
            .strip_prefix("M(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (n, lambda) = inner.split_once(',').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok(ClassifiedModule::M {
            n,
            lambda: parse_rational(lambda)?,
        })
    }
}

impl fmt::Display for ClassifiedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifiedModule::Kx => f.write_str("Kx"),
            ClassifiedModule::M { n, lambda } => write!(f, "M({n},{})", format_rational(lambda)),
        }
    }
}

/// `dim Hom(A, B)` for indecomposables: `min(n, m)` between `M`'s of one
/// class, 1 for `K[x]` to itself, 0 otherwise.
pub fn hom_dim(a: &ClassifiedModule, b: &ClassifiedModule) -> usize {
    use ClassifiedModule::*;
    match (a, b) {
        (Kx, Kx) => 1,
        (Kx, M { .. }) | (M { .. }, Kx) => 0,
        (M { n, lambda }, M { n: m, lambda: mu }) => {
            if weight_class_of(lambda) == weight_class_of(mu) {
                (*n).min(*m)
            } else {
                0
            }
        }
    }
}

/// Solution space of a Hom computation: each basis vector is a family of
/// maps `φ_i : A^{λ+i} → B^{λ+i}` over the common window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub lo: i64,
    pub hi: i64,
    pub basis: Vec<Vec<Matrix>>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The component of basis vector `k` at index `i`.
    pub fn map(&self, k: usize, i: i64) -> &Matrix {
        &self.basis[k][(i - self.lo) as usize]
    }
}

/// If `phi` is a scalar plus a nilpotent, that scalar.
pub fn scalar_part(phi: &Matrix) -> Option<Rational> {
    let d = phi.rows();
    if d == 0 || !phi.is_square() {
        return None;
    }
    let c = phi.trace() / int(d as i64);
    (phi - &Matrix::scalar(d, &c)).pow(d).is_zero().then_some(c)
}

/// Brute-force `Hom(A, B)`: all families of maps between matching weight
/// spaces that commute with `H`, `∂` and `∫` inside the common window.
pub fn hom_window(a: &WeightWindowModule, b: &WeightWindowModule) -> Result<HomSpace> {
    if a.class() != b.class() {
        return Ok(HomSpace {
            lo: a.lo(),
            hi: a.hi(),
            basis: Vec::new(),
        });
    }
    let b = b.rebase(a.base_weight())?;
    let (lo, hi) = common_window(a, &b)?;
    let a = a.align_to(lo, hi)?;
    let b = b.align_to(lo, hi)?;
    if hi - lo < 2 {
        return Err(Error::WindowTooSmall(format!("common window [{lo}, {hi}] has no interior")));
    }
    if let Some(one) = a.weight_one_index() {
        let both_genuine = a.lower_boundary() == Boundary::Genuine && b.lower_boundary() == Boundary::Genuine;
        if one <= lo && !both_genuine {
            return Err(Error::WindowTooSmall(format!(
                "weight 1 (index {one}) must lie above the truncated lower edge {lo}"
            )));
        }
    }

    // unknown layout: φ_i row-major, indices in window order
    let mut offsets = Vec::new();
    let mut total = 0;
    for i in lo..=hi {
        offsets.push(total);
        total += a.dim(i) * b.dim(i);
    }
    let var = |i: i64, r: usize, c: usize| offsets[(i - lo) as usize] + r * a.dim(i) + c;
    let mut system = SparseSystem::new(total);

    // target_map · φ_src - φ_dst · source_map = 0, mapping A^src → B^dst
    let mut intertwine = |src: i64, dst: i64, source_map: &Matrix, target_map: &Matrix| {
        for r in 0..b.dim(dst) {
            for c in 0..a.dim(src) {
                let mut terms = Vec::new();
                for k in 0..b.dim(src) {
                    let t = target_map.get(r, k);
                    if !t.is_zero() {
                        terms.push((var(src, k, c), t.clone()));
                    }
                }
                for k in 0..a.dim(dst) {
                    let s = source_map.get(k, c);
                    if !s.is_zero() {
                        terms.push((var(dst, r, k), -s.clone()));
                    }
                }
                system.add_equation(terms);
            }
        }
    };
    for i in lo..=hi {
        intertwine(i, i, a.nilpotent(i), b.nilpotent(i));
        if i > lo {
            intertwine(i, i - 1, a.down(i), b.down(i));
        }
        if i < hi {
            intertwine(i, i + 1, a.up(i), b.up(i));
        }
    }

    let basis = system
        .solution_basis()
        .into_iter()
        .map(|v| {
            (lo..=hi)
                .map(|i| {
                    let (rows, cols) = (b.dim(i), a.dim(i));
                    let start = var(i, 0, 0);
                    let mut m = Matrix::zeros(rows, cols);
                    for r in 0..rows {
                        for c in 0..cols {
                            m.set(r, c, v[start + r * cols + c].clone());
                        }
                    }
                    m
                })
                .collect()
        })
        .collect();
    Ok(HomSpace { lo, hi, basis })
}

/// Ext¹ between indecomposables, as computed here and as stated in the
/// classification literature. The two can differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtReport {
    pub computed: usize,
    pub paper_claim: usize,
}

/// `Ext¹(A, B)` from the resolution `0 → I(H - λ)^n → I → M(n, λ) → 0`,
/// with `λ` moved to 0 in the integral class so that right multiplication
/// by `(H - λ)^n` is injective. The group is `B / (H - λ)^n B`; the
/// operator is invertible on every weight space except `B^λ`, so its
/// dimension is the corank of `N^n` there. For `A = K[x]` the group
/// vanishes.
pub fn ext_dim(a: &ClassifiedModule, b: &ClassifiedModule) -> Result<ExtReport> {
    use ClassifiedModule::*;
    let paper_claim = match (a, b) {
        (M { .. }, M { .. }) if a.class() == b.class() => 1,
        _ => 0,
    };
    let computed = match a {
        Kx => 0,
        M { n, lambda } => {
            let weight = if a.class().is_integral() { int(0) } else { lambda.clone() };
            ext_corank(*n, &weight, b)?
        }
    };
    Ok(ExtReport { computed, paper_claim })
}

/// Dimension of `B^w / N^n B^w` for the windowed model of `b`.
fn ext_corank(n: usize, weight: &Rational, b: &ClassifiedModule) -> Result<usize> {
    if weight_class_of(weight) != b.class() {
        return Ok(0);
    }
    let module = b.to_module(None)?;
    let idx = integer_offset(weight, module.base_weight()).expect("same class");
    let module = if module.contains(idx) {
        module
    } else {
        b.to_module(Some((idx - 1, idx + 1)))?
    };
    let d = module.dim(idx);
    Ok(d - module.nilpotent(idx).pow(n).rank())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniserialReport {
    pub uniserial: bool,
    /// The composition chain `0 ⊂ ... ⊂ M` when the module is uniserial.
    pub chain: Vec<Submodule>,
}

impl UniserialReport {
    pub fn chain_length(&self) -> usize {
        self.chain.len()
    }
}

/// Whether the submodules of `m` form a chain.
///
/// With `FM ≠ 0` this holds only for a single `K[x]`. With `FM = 0`, `∂`
/// and `∫` are mutually inverse between weight spaces, so submodules are
/// the `H`-stable subspaces of one weight space carried along by them;
/// these form a chain exactly when `ker N` is at most a line, and the chain
/// is `ker N^k`.
pub fn is_uniserial(m: &WeightWindowModule) -> Result<UniserialReport> {
    m.validate()?;
    let not = || UniserialReport {
        uniserial: false,
        chain: Vec::new(),
    };
    if m.is_zero() {
        return Ok(UniserialReport {
            uniserial: true,
            chain: vec![Submodule::zero(m)],
        });
    }
    let (complement, split) = split_complement(m)?;
    if split.multiplicity > 0 {
        if split.multiplicity == 1 && complement.is_zero() {
            return Ok(UniserialReport {
                uniserial: true,
                chain: vec![Submodule::zero(m), Submodule::whole(m)],
            });
        }
        return Ok(not());
    }
    let interior: Vec<i64> = m.interior().collect();
    if interior.is_empty() {
        return Err(Error::WindowTooSmall("the window has no interior weights".into()));
    }
    let r = interior[interior.len() / 2];
    let n = m.nilpotent(r);
    let d = m.dim(r);
    if d - n.rank() > 1 {
        return Ok(not());
    }
    let mut chain = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let seed = n.pow(k).nullspace();
        let sub = propagate(m, r, seed);
        if !sub.is_closed(m) {
            return Err(Error::InvalidModule(format!("ker N^{k} does not generate a submodule")));
        }
        chain.push(sub);
    }
    debug_assert!(chain.windows(2).all(|w| w[0].is_contained_in(&w[1])));
    Ok(UniserialReport {
        uniserial: true,
        chain,
    })
}

/// Spreads a subspace of `M^{λ+r}` to every index using `∂` and `∫`.
fn propagate(m: &WeightWindowModule, r: i64, seed: Matrix) -> Submodule {
    let mut bases = vec![Matrix::zeros(0, 0); m.spaces().len()];
    let at = |i: i64| (i - m.lo()) as usize;
    bases[at(r)] = seed;
    for i in (m.lo()..r).rev() {
        bases[at(i)] = (m.down(i + 1) * &bases[at(i + 1)]).column_basis();
    }
    for i in r + 1..=m.hi() {
        bases[at(i)] = (m.up(i - 1) * &bases[at(i - 1)]).column_basis();
    }
    Submodule::new(m, bases)
}

/// A family of maps `source^{λ+i} → target^{λ+i}`; the target is indexed
/// so that source index `i` lands on target index `i - offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    pub source: WeightWindowModule,
    pub target: WeightWindowModule,
    pub offset: i64,
    pub maps: Vec<Matrix>,
}

impl ModuleMorphism {
    pub fn map(&self, i: i64) -> &Matrix {
        &self.maps[(i - self.source.lo()) as usize]
    }

    /// Checks that the maps commute with `H`, `∂` and `∫` inside the window.
    pub fn verify(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if t.weight(s.lo() - self.offset) != s.weight(s.lo()) {
            return Err(Error::Mismatch("the morphism does not preserve weights".into()));
        }
        let fail = |i: i64, what: &str| Err(Error::InvalidModule(format!("index {i}: map does not commute with {what}")));
        for i in s.indices() {
            let j = i - self.offset;
            if !t.contains(j) {
                return Err(Error::WindowTooSmall(format!("target has no index {j}")));
            }
            let phi = self.map(i);
            if (t.nilpotent(j) * phi) != (phi * s.nilpotent(i)) {
                return fail(i, "H");
            }
            if i > s.lo() && j > t.lo() && (t.down(j) * phi) != (self.map(i - 1) * s.down(i)) {
                return fail(i, "∂");
            }
            if i < s.hi() && j < t.hi() && (t.up(j) * phi) != (self.map(i + 1) * s.up(i)) {
                return fail(i, "∫");
            }
        }
        Ok(())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.verify().is_ok() && self.maps.iter().all(|m| m.inverse().is_some())
    }
}

/// Coordinates in `M(n, μ)` of the coset of a `B₁` element: writing it as
/// `Σ ∂^{-g} c_g(H)`, reducing `c_g` modulo `(H - μ)^n`, and expanding in
/// powers of `H - μ` gives the coefficients on `u_{g,j} = ∂^{-g}(H - μ)^j`.
pub fn coset_coordinates(b: &B1Element, n: usize, mu: &Rational) -> Vec<(i64, Vec<Rational>)> {
    let modulus = HPoly::linear_power(mu, n);
    b.right_coefficients()
        .into_iter()
        .map(|(g, c)| {
            let reduced = c.rem_monic(&modulus).shift_by(mu);
            let mut coords = reduced.coeffs().to_vec();
            coords.resize(n, Rational::zero());
            (g, coords)
        })
        .collect()
}

/// The isomorphism `M(n, λ) → M(n, λ + k)` sending the generator `1` to
/// `∂^k`, on the source window `[lo, hi]`. It is well defined because
/// `(H - λ)^n ∂^k = ∂^k (H - λ - k)^n`.
pub fn shift_isomorphism(n: usize, lambda: &Rational, k: i64, lo: i64, hi: i64) -> Result<ModuleMorphism> {
    let mu = lambda + int(k);
    let source = make_m(n, lambda, lo, hi)?;
    let target = make_m(n, &mu, lo - k, hi - k)?;
    let shift = B1Element::term(-k, HPoly::one());
    let maps = (lo..=hi)
        .map(|i| {
            let mut phi = Matrix::zeros(n, n);
            for j in 0..n {
                // u_{i,j} = ∂^{-i} (H - λ)^j = (H - λ - i)^j ∂^{-i}
                let basis = B1Element::term(i, HPoly::linear_power(lambda, j).shift(-i));
                for (g, coords) in coset_coordinates(&(&basis * &shift), n, &mu) {
                    if g != i - k {
                        return Err(Error::InvalidModule(format!(
                            "image of u_({i},{j}) has grade {g}, expected {}",
                            i - k
                        )));
                    }
                    for (r, v) in coords.into_iter().enumerate() {
                        phi.set(r, j, v);
                    }
                }
            }
            Ok(phi)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ModuleMorphism {
        source,
        target,
        offset: k,
        maps,
    })
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn jordan_types() {
        assert_eq!(jordan_type(&Matrix::zeros(3, 3)).unwrap(), vec![1, 1, 1]);
        assert_eq!(jordan_type(&Matrix::jordan_block(4)).unwrap(), vec![4]);
        let j21 = Matrix::jordan_block(2).block_diag(&Matrix::jordan_block(1));
        assert_eq!(jordan_type(&j21).unwrap(), vec![2, 1]);
        assert_eq!(jordan_type(&Matrix::zeros(0, 0)).unwrap(), Vec::<usize>::new());
        assert_eq!(jordan_type(&Matrix::identity(2)), Err(Error::NotNilpotent));
    }

    #[test]
    fn decompose_single_block() {
        let r = decompose(&make_m(5, &int(0), -14, 14).unwrap()).unwrap();
        assert_eq!(r, DecompositionReport::new(0, vec![Factor { n: 5, class: WeightClass::of(&int(0)) }]));
        let r = decompose(&make_m(2, &ratio(7, 2), -8, 8).unwrap()).unwrap();
        assert_eq!(r.factors[0].class.representative(), &ratio(1, 2));
    }

    #[test]
    fn decompose_scrambled_sum() {
        let (lo, hi) = (-7, 7);
        let parts = [
            make_kx(hi).unwrap(),
            make_m(3, &int(0), lo, hi).unwrap(),
            make_m(1, &int(0), lo, hi).unwrap(),
        ];
        let m = random_scramble(&direct_sum_aligned(&parts).unwrap(), 99);
        let r = decompose(&m).unwrap();
        let z = WeightClass::of(&int(0));
        assert_eq!(
            r,
            DecompositionReport::new(1, vec![Factor { n: 3, class: z.clone() }, Factor { n: 1, class: z }])
        );
        assert_eq!(r.to_string(), "Kx + M(1,0) + M(3,0)");
    }

    #[test]
    fn decompose_requires_width() {
        let m = make_m(4, &int(0), -4, 5).unwrap();
        assert!(matches!(decompose(&m), Err(Error::WindowTooSmall(_))));
    }

    #[test]
    fn isomorphism_examples() {
        let a = make_m(2, &ratio(1, 2), -7, 7).unwrap();
        let b = make_m(2, &ratio(5, 2), -7, 7).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
        let c = make_m(2, &ratio(1, 3), -7, 7).unwrap();
        assert!(!is_isomorphic(&make_m(2, &int(0), -7, 7).unwrap(), &c).unwrap());
        let k = make_kx(5).unwrap();
        assert!(!is_isomorphic(&k, &make_m(1, &int(0), -5, 5).unwrap()).unwrap());
    }

    #[test]
    fn parse_classified() {
        assert_eq!("Kx".parse::<ClassifiedModule>().unwrap(), ClassifiedModule::Kx);
        assert_eq!(
            "M(2, -1/2)".parse::<ClassifiedModule>().unwrap(),
            ClassifiedModule::m(2, ratio(-1, 2))
        );
        assert!("M(0,1)".parse::<ClassifiedModule>().is_err());
        assert!("N(1,1)".parse::<ClassifiedModule>().is_err());
        assert_eq!(ClassifiedModule::m(3, ratio(2, 3)).to_string(), "M(3,2/3)");
    }

    #[test]
    fn hom_examples() {
        let lam = ratio(1, 2);
        let m2 = ClassifiedModule::m(2, lam.clone());
        let m3 = ClassifiedModule::m(3, lam.clone());
        assert_eq!(hom_dim(&m2, &m3), 2);
        assert_eq!(hom_dim(&m2, &ClassifiedModule::Kx), 0);
        assert_eq!(hom_dim(&m2, &ClassifiedModule::m(2, ratio(1, 3))), 0);
        let w = |c: &ClassifiedModule| c.to_module(None).unwrap();
        assert_eq!(hom_window(&w(&m2), &w(&m3)).unwrap().dim(), 2);
        let one = ClassifiedModule::m(1, lam);
        assert_eq!(hom_window(&w(&one), &w(&one)).unwrap().dim(), 1);
        let m20 = ClassifiedModule::m(2, int(0));
        assert_eq!(hom_window(&w(&ClassifiedModule::Kx), &w(&m20)).unwrap().dim(), 0);
        assert_eq!(hom_window(&w(&m20), &w(&ClassifiedModule::Kx)).unwrap().dim(), 0);
        assert_eq!(hom_window(&w(&ClassifiedModule::Kx), &w(&ClassifiedModule::Kx)).unwrap().dim(), 1);
    }

    #[test]
    fn hom_rejects_cut_below_weight_one() {
        let k = make_kx(8).unwrap();
        let m = make_m(2, &int(0), 1, 8).unwrap();
        assert!(matches!(hom_window(&k, &m), Err(Error::WindowTooSmall(_))));
    }

    #[test]
    fn ext_examples() {
        let lam = ratio(1, 3);
        let kx = ClassifiedModule::Kx;
        for n in 1..=4 {
            let r = ext_dim(&ClassifiedModule::m(n, lam.clone()), &kx).unwrap();
            assert_eq!((r.computed, r.paper_claim), (0, 0));
            let r = ext_dim(&ClassifiedModule::m(n, int(3)), &kx).unwrap();
            assert_eq!((r.computed, r.paper_claim), (0, 0));
        }
        let m1 = ClassifiedModule::m(1, lam.clone());
        assert_eq!(ext_dim(&m1, &m1).unwrap(), ExtReport { computed: 1, paper_claim: 1 });
        let r = ext_dim(&ClassifiedModule::m(2, lam.clone()), &ClassifiedModule::m(3, lam)).unwrap();
        assert_eq!((r.computed, r.paper_claim), (2, 1));
        assert_eq!(ext_dim(&kx, &m1).unwrap().computed, 0);
    }

    #[test]
    fn uniserial_examples() {
        let r = is_uniserial(&make_m(3, &ratio(1, 2), -9, 9).unwrap()).unwrap();
        assert!(r.uniserial);
        assert_eq!(r.chain_length(), 4);
        assert!(is_uniserial(&make_kx(5).unwrap()).unwrap().uniserial);
        let one = make_m(1, &int(0), -5, 5).unwrap();
        let two = direct_sum(&one, &one).unwrap();
        assert!(!is_uniserial(&two).unwrap().uniserial);
    }

    #[test]
    fn shift_maps_generator_to_power_of_del() {
        let phi = shift_isomorphism(2, &ratio(1, 2), 2, -4, 4).unwrap();
        phi.verify().unwrap();
        assert!(phi.is_isomorphism());
        assert_eq!(phi.target.base_weight(), &ratio(5, 2));
        // 1 = u_{0,0} goes to ∂^2 = u_{-2,0} of the target
        assert_eq!(phi.map(0).column(0), vec![int(1), int(0)]);
    }
}
