//! Finite windows of generalized weight modules.
//!
//! A generalized weight module `M = ⊕ M^μ` whose support lies in one coset
//! `λ + Z` is stored on an integer window `[lo, hi]`: index `i` holds the
//! weight space `M^{λ+i}` together with
//!
//! * `N_i`, the nilpotent action of `H - (λ + i)`,
//! * `D_i : M^{λ+i} → M^{λ+i-1}`, the action of `∂`,
//! * `U_i : M^{λ+i} → M^{λ+i+1}`, the action of `∫`.
//!
//! `D` at `lo` and `U` at `hi` point outside the window and are stored with
//! zero rows. Each edge is either [`Boundary::Genuine`] (every weight space
//! beyond it is zero) or [`Boundary::Truncated`] (the window was cut).

mod classify;
mod io;
mod submodule;

pub use classify::*;
pub use io::{ModuleFile, SpaceFile};
pub use submodule::*;

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{int, integer_offset, weight_class_of, Rational, WeightClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Genuine,
    Truncated,
}

impl Boundary {
    /// Genuine only when both sides are.
    fn meet(self, other: Boundary) -> Boundary {
        if self == Boundary::Genuine && other == Boundary::Genuine {
            Boundary::Genuine
        } else {
            Boundary::Truncated
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    pub nilpotent: Matrix,
    pub down: Matrix,
    pub up: Matrix,
}

impl WeightSpace {
    pub fn dim(&self) -> usize {
        self.nilpotent.rows()
    }

    fn zero() -> Self {
        WeightSpace {
            nilpotent: Matrix::zeros(0, 0),
            down: Matrix::zeros(0, 0),
            up: Matrix::zeros(0, 0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightWindowModule {
    base_weight: Rational,
    lo: i64,
    hi: i64,
    lower: Boundary,
    upper: Boundary,
    spaces: Vec<WeightSpace>,
}

impl WeightWindowModule {
    /// Assembles a module from raw data, checking shapes only. Use
    /// [`validate`](Self::validate) for the module relations.
    pub fn from_parts(
        base_weight: Rational,
        lo: i64,
        lower: Boundary,
        upper: Boundary,
        spaces: Vec<WeightSpace>,
    ) -> Result<Self> {
        if spaces.is_empty() {
            return Err(Error::Shape("a window needs at least one weight space".into()));
        }
        let hi = lo + spaces.len() as i64 - 1;
        let m = WeightWindowModule {
            base_weight,
            lo,
            hi,
            lower,
            upper,
            spaces,
        };
        m.check_shapes()?;
        Ok(m)
    }

    fn check_shapes(&self) -> Result<()> {
        for i in self.lo..=self.hi {
            let s = self.space(i);
            let d = s.dim();
            let below = if i > self.lo { self.dim(i - 1) } else { 0 };
            let above = if i < self.hi { self.dim(i + 1) } else { 0 };
            let shape = |m: &Matrix| (m.rows(), m.cols());
            if shape(&s.nilpotent) != (d, d) || shape(&s.down) != (below, d) || shape(&s.up) != (above, d) {
                return Err(Error::Shape(format!(
                    "weight space at index {i}: N is {:?}, D is {:?}, U is {:?} for dimension {d}",
                    shape(&s.nilpotent),
                    shape(&s.down),
                    shape(&s.up)
                )));
            }
        }
        Ok(())
    }

    pub fn base_weight(&self) -> &Rational {
        &self.base_weight
    }

    pub fn class(&self) -> WeightClass {
        weight_class_of(&self.base_weight)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn lower_boundary(&self) -> Boundary {
        self.lower
    }

    pub fn upper_boundary(&self) -> Boundary {
        self.upper
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    /// Indices strictly inside the window.
    pub fn interior(&self) -> std::ops::Range<i64> {
        self.lo + 1..self.hi
    }

    pub fn interior_width(&self) -> usize {
        (self.hi - self.lo - 1).max(0) as usize
    }

    pub fn contains(&self, i: i64) -> bool {
        (self.lo..=self.hi).contains(&i)
    }

    pub fn space(&self, i: i64) -> &WeightSpace {
        &self.spaces[(i - self.lo) as usize]
    }

    pub fn spaces(&self) -> &[WeightSpace] {
        &self.spaces
    }

    pub fn dim(&self, i: i64) -> usize {
        self.space(i).dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(WeightSpace::dim).collect()
    }

    pub fn weight(&self, i: i64) -> Rational {
        &self.base_weight + int(i)
    }

    pub fn nilpotent(&self, i: i64) -> &Matrix {
        &self.space(i).nilpotent
    }

    pub fn down(&self, i: i64) -> &Matrix {
        &self.space(i).down
    }

    pub fn up(&self, i: i64) -> &Matrix {
        &self.space(i).up
    }

    /// Weights carrying a nonzero space, in increasing order.
    pub fn support(&self) -> Vec<Rational> {
        self.indices()
            .filter(|&i| self.dim(i) > 0)
            .map(|i| self.weight(i))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().all(|s| s.dim() == 0)
    }

    /// Index of the weight-1 space when the class is integral.
    pub fn weight_one_index(&self) -> Option<i64> {
        integer_offset(&int(1), &self.base_weight)
    }

    /// `P_i = 1 - U_{i-1} D_i`, the action of `e_00 = 1 - ∫∂` on `M^{λ+i}`.
    /// Known when `i - 1` is in the window, or at a genuine lower edge.
    pub fn projector(&self, i: i64) -> Option<Matrix> {
        let d = self.dim(i);
        if i > self.lo {
            Some(&Matrix::identity(d) - &(self.up(i - 1) * self.down(i)))
        } else if i == self.lo && self.lower == Boundary::Genuine {
            Some(Matrix::identity(d))
        } else {
            None
        }
    }

    /// Checks every relation that can be seen inside the window:
    /// nilpotency, `∂∫ = 1`, `[H, ∂] = -∂`, `[H, ∫] = ∫`, and
    /// `H(1 - ∫∂) = 1 - ∫∂`.
    pub fn validate(&self) -> Result<()> {
        self.check_shapes()?;
        let bad = |i: i64, what: &str| Err(Error::InvalidModule(format!("index {i}: {what}")));
        for i in self.indices() {
            let d = self.dim(i);
            let n = self.nilpotent(i);
            if !n.pow(d).is_zero() {
                return bad(i, "H - weight is not nilpotent");
            }
            if i < self.hi {
                if !(self.down(i + 1) * self.up(i)).is_identity() {
                    return bad(i, "∂∫ is not the identity");
                }
                if (self.nilpotent(i + 1) * self.up(i)) != (self.up(i) * n) {
                    return bad(i, "∫ does not intertwine H - 1 with H");
                }
            }
            if i > self.lo && (self.nilpotent(i - 1) * self.down(i)) != (self.down(i) * n) {
                return bad(i, "∂ does not intertwine H + 1 with H");
            }
            if let Some(p) = self.projector(i) {
                if self.weight(i) == int(1) {
                    if (&p * &p) != p {
                        return bad(i, "1 - ∫∂ is not idempotent");
                    }
                    if !(n * &p).is_zero() {
                        return bad(i, "H does not act as 1 on the image of 1 - ∫∂");
                    }
                } else if !p.is_zero() {
                    return bad(i, "1 - ∫∂ is nonzero away from weight 1");
                }
            }
        }
        if self.upper == Boundary::Genuine && self.dim(self.hi) > 0 {
            return bad(self.hi, "a genuine upper edge needs a zero space (∫ is injective)");
        }
        Ok(())
    }

    /// The same module with its weights indexed from another base weight in
    /// the same class.
    pub fn rebase(&self, new_base: &Rational) -> Result<Self> {
        let shift = integer_offset(&self.base_weight, new_base).ok_or_else(|| {
            Error::Mismatch(format!(
                "base weights {} and {new_base} lie in different classes",
                self.base_weight
            ))
        })?;
        let mut out = self.clone();
        out.base_weight = new_base.clone();
        out.lo += shift;
        out.hi += shift;
        Ok(out)
    }

    /// Moves the window to `[lo, hi]`. Cutting inside the window leaves a
    /// truncated edge; growing is only possible past a genuine edge, where
    /// zero spaces are added.
    pub fn align_to(&self, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::WindowTooSmall(format!("empty window [{lo}, {hi}]")));
        }
        let grow = |edge: Boundary, side: &str| -> Result<()> {
            if edge == Boundary::Genuine {
                Ok(())
            } else {
                Err(Error::WindowTooSmall(format!(
                    "cannot extend a truncated {side} edge"
                )))
            }
        };
        if lo < self.lo {
            grow(self.lower, "lower")?;
        }
        if hi > self.hi {
            grow(self.upper, "upper")?;
        }
        let mut spaces = Vec::with_capacity((hi - lo + 1) as usize);
        for i in lo..=hi {
            if self.contains(i) {
                spaces.push(self.space(i).clone());
            } else {
                spaces.push(WeightSpace::zero());
            }
        }
        // re-shape the maps that now point to a different neighbour
        let dim_at = |i: i64| if self.contains(i) { self.dim(i) } else { 0 };
        for (k, s) in spaces.iter_mut().enumerate() {
            let i = lo + k as i64;
            let d = s.dim();
            if i == lo || !self.contains(i - 1) || !self.contains(i) {
                let rows = if i > lo { dim_at(i - 1) } else { 0 };
                s.down = Matrix::zeros(rows, d);
            }
            if i == hi || !self.contains(i + 1) || !self.contains(i) {
                let rows = if i < hi { dim_at(i + 1) } else { 0 };
                s.up = Matrix::zeros(rows, d);
            }
        }
        let lower = if lo > self.lo { Boundary::Truncated } else { self.lower };
        let upper = if hi < self.hi { Boundary::Truncated } else { self.upper };
        WeightWindowModule::from_parts(self.base_weight.clone(), lo, lower, upper, spaces)
    }

    /// Writes the module as a list of weight spaces with explicit weights,
    /// the input format of [`coset_split`].
    pub fn to_entries(&self) -> Vec<WeightSpaceEntry> {
        self.indices()
            .map(|i| {
                let s = self.space(i);
                let down = if i > self.lo || self.lower == Boundary::Genuine {
                    Some(s.down.clone())
                } else {
                    None
                };
                let up = if i < self.hi || self.upper == Boundary::Genuine {
                    Some(s.up.clone())
                } else {
                    None
                };
                WeightSpaceEntry {
                    weight: self.weight(i),
                    nilpotent: s.nilpotent.clone(),
                    down,
                    up,
                }
            })
            .collect()
    }
}

/// `M(n, λ) = B₁ / B₁(H - λ)^n` on the window `[lo, hi]`, base weight `λ`.
///
/// Index `i` has basis `u_{i,j} = ∂^{-i} (H - λ)^j`, `0 ≤ j < n`, so `∂` and
/// `∫` act as identity matrices and `H - (λ + i)` sends `u_{i,j}` to
/// `u_{i,j+1}`.
pub fn make_m(n: usize, lambda: &Rational, lo: i64, hi: i64) -> Result<WeightWindowModule> {
    if n == 0 {
        return Err(Error::InvalidModule("M(n, λ) needs n ≥ 1".into()));
    }
    if lo >= hi {
        return Err(Error::WindowTooSmall(format!("window [{lo}, {hi}]")));
    }
    let spaces = (lo..=hi)
        .map(|i| WeightSpace {
            nilpotent: Matrix::jordan_block(n),
            down: if i > lo { Matrix::identity(n) } else { Matrix::zeros(0, n) },
            up: if i < hi { Matrix::identity(n) } else { Matrix::zeros(0, n) },
        })
        .collect();
    WeightWindowModule::from_parts(lambda.clone(), lo, Boundary::Truncated, Boundary::Truncated, spaces)
}

/// `K[x]` on weights `1..=hi`, base weight 0: index `s + 1` holds `x^[s]`.
pub fn make_kx(hi: i64) -> Result<WeightWindowModule> {
    if hi < 1 {
        return Err(Error::WindowTooSmall(format!("K[x] window [1, {hi}]")));
    }
    let spaces = (1..=hi)
        .map(|i| WeightSpace {
            nilpotent: Matrix::zeros(1, 1),
            // ∂ kills the constants at weight 1
            down: if i > 1 { Matrix::identity(1) } else { Matrix::zeros(0, 1) },
            up: if i < hi { Matrix::identity(1) } else { Matrix::zeros(0, 1) },
        })
        .collect();
    WeightWindowModule::from_parts(int(0), 1, Boundary::Genuine, Boundary::Truncated, spaces)
}

/// Blockwise direct sum; both inputs must share base weight and window.
pub fn direct_sum(a: &WeightWindowModule, b: &WeightWindowModule) -> Result<WeightWindowModule> {
    if a.base_weight != b.base_weight || a.lo != b.lo || a.hi != b.hi {
        return Err(Error::Mismatch(format!(
            "direct sum needs equal base weights and windows, got {} on [{}, {}] and {} on [{}, {}]",
            a.base_weight, a.lo, a.hi, b.base_weight, b.lo, b.hi
        )));
    }
    let spaces = a
        .spaces
        .iter()
        .zip(&b.spaces)
        .map(|(x, y)| WeightSpace {
            nilpotent: x.nilpotent.block_diag(&y.nilpotent),
            down: x.down.block_diag(&y.down),
            up: x.up.block_diag(&y.up),
        })
        .collect();
    WeightWindowModule::from_parts(
        a.base_weight.clone(),
        a.lo,
        a.lower.meet(b.lower),
        a.upper.meet(b.upper),
        spaces,
    )
}

/// The window on which two modules of one class can be compared: each
/// genuine edge may be pushed outwards, truncated edges may not.
pub fn common_window(a: &WeightWindowModule, b: &WeightWindowModule) -> Result<(i64, i64)> {
    let b = b.rebase(&a.base_weight)?;
    let lo = match (a.lower, b.lower) {
        (Boundary::Genuine, Boundary::Genuine) => a.lo.min(b.lo),
        (Boundary::Genuine, Boundary::Truncated) => b.lo,
        (Boundary::Truncated, Boundary::Genuine) => a.lo,
        (Boundary::Truncated, Boundary::Truncated) => a.lo.max(b.lo),
    };
    let hi = match (a.upper, b.upper) {
        (Boundary::Genuine, Boundary::Genuine) => a.hi.max(b.hi),
        (Boundary::Genuine, Boundary::Truncated) => b.hi,
        (Boundary::Truncated, Boundary::Genuine) => a.hi,
        (Boundary::Truncated, Boundary::Truncated) => a.hi.min(b.hi),
    };
    if lo > hi {
        return Err(Error::WindowTooSmall(format!(
            "windows [{}, {}] and [{}, {}] do not overlap",
            a.lo, a.hi, b.lo, b.hi
        )));
    }
    Ok((lo, hi))
}

/// Direct sum of modules of one class after moving them onto a common
/// window and base weight (the base weight of the first).
pub fn direct_sum_aligned(mods: &[WeightWindowModule]) -> Result<WeightWindowModule> {
    let (first, rest) = mods
        .split_first()
        .ok_or_else(|| Error::Mismatch("empty direct sum".into()))?;
    let base = first.base_weight.clone();
    let mut window = (first.lo, first.hi);
    let mut acc = first.clone();
    for m in rest {
        let m = m.rebase(&base)?;
        window = common_window(&acc, &m)?;
        acc = direct_sum(&acc.align_to(window.0, window.1)?, &m.align_to(window.0, window.1)?)?;
    }
    acc.align_to(window.0, window.1)
}

/// Random integer matrix with determinant 1, as a product of unit lower and
/// unit upper triangular factors.
fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for r in 0..n {
        for c in 0..r {
            lower.set(r, c, int(rng.gen_range(-2..=2)));
            upper.set(c, r, int(rng.gen_range(-2..=2)));
        }
    }
    &lower * &upper
}

/// Conjugates every weight space by a random invertible change of basis.
/// The result is isomorphic to the input.
pub fn random_scramble(m: &WeightWindowModule, seed: u64) -> WeightWindowModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let changes: Vec<(Matrix, Matrix)> = m
        .spaces
        .iter()
        .map(|s| {
            let t = random_unimodular(s.dim(), &mut rng);
            let inv = t.inverse().expect("unimodular matrices are invertible");
            (t, inv)
        })
        .collect();
    let zero = (Matrix::zeros(0, 0), Matrix::zeros(0, 0));
    let spaces = m
        .spaces
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let (t, inv) = &changes[k];
            let below = if k > 0 { &changes[k - 1].0 } else { &zero.0 };
            let above = changes.get(k + 1).map_or(&zero.0, |c| &c.0);
            WeightSpace {
                nilpotent: &(t * &s.nilpotent) * inv,
                down: if s.down.rows() > 0 { &(below * &s.down) * inv } else { s.down.clone() },
                up: if s.up.rows() > 0 { &(above * &s.up) * inv } else { s.up.clone() },
            }
        })
        .collect();
    WeightWindowModule {
        spaces,
        ..m.clone()
    }
}

/// One weight space of a module whose support may meet several classes.
/// `down` maps to the space of weight `weight - 1`; `up` to `weight + 1`.
/// `None` means the neighbour is outside the data; a map with zero rows
/// declares the neighbour to be zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpaceEntry {
    pub weight: Rational,
    pub nilpotent: Matrix,
    pub down: Option<Matrix>,
    pub up: Option<Matrix>,
}

/// Groups weight spaces by their class in `Q/Z`. Each output module has
/// single-coset support and base weight equal to the class representative.
pub fn coset_split(entries: &[WeightSpaceEntry]) -> Result<Vec<WeightWindowModule>> {
    let mut classes: BTreeMap<WeightClass, BTreeMap<i64, &WeightSpaceEntry>> = BTreeMap::new();
    for e in entries {
        let class = weight_class_of(&e.weight);
        let idx = integer_offset(&e.weight, class.representative()).expect("same class");
        if classes.entry(class).or_default().insert(idx, e).is_some() {
            return Err(Error::InvalidModule(format!("weight {} listed twice", e.weight)));
        }
    }
    classes
        .into_iter()
        .map(|(class, by_index)| {
            let lo = *by_index.keys().next().expect("nonempty");
            let hi = *by_index.keys().last().expect("nonempty");
            if by_index.len() as i64 != hi - lo + 1 {
                return Err(Error::InvalidModule(format!(
                    "weights of class {class} are not contiguous"
                )));
            }
            let edge = |m: &Option<Matrix>| match m {
                Some(m) if m.rows() == 0 => Ok(Boundary::Genuine),
                None => Ok(Boundary::Truncated),
                Some(_) => Err(Error::InvalidModule(format!(
                    "class {class}: map leaves the listed weights"
                ))),
            };
            let lower = edge(&by_index[&lo].down)?;
            let upper = edge(&by_index[&hi].up)?;
            let spaces = by_index
                .iter()
                .map(|(&i, e)| {
                    let d = e.nilpotent.rows();
                    let missing = |what: &str| {
                        Error::InvalidModule(format!("weight {}: missing {what} map", e.weight))
                    };
                    let down = match (&e.down, i > lo) {
                        (Some(m), _) => m.clone(),
                        (None, false) => Matrix::zeros(0, d),
                        (None, true) => return Err(missing("down")),
                    };
                    let up = match (&e.up, i < hi) {
                        (Some(m), _) => m.clone(),
                        (None, false) => Matrix::zeros(0, d),
                        (None, true) => return Err(missing("up")),
                    };
                    Ok(WeightSpace {
                        nilpotent: e.nilpotent.clone(),
                        down,
                        up,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            WeightWindowModule::from_parts(class.representative().clone(), lo, lower, upper, spaces)
        })
        .collect()
}
