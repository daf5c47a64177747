//! Submodules of windowed modules, the submodule `FM`, and its complement.

use serde::Serialize;

use super::{Boundary, WeightSpace, WeightWindowModule};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// A family of subspaces, one per index of a parent window, each given by a
/// matrix whose columns are a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    lo: i64,
    bases: Vec<Matrix>,
}

impl Submodule {
    pub fn new(parent: &WeightWindowModule, bases: Vec<Matrix>) -> Self {
        assert_eq!(bases.len(), parent.spaces().len());
        for (k, b) in bases.iter().enumerate() {
            assert_eq!(b.rows(), parent.spaces()[k].dim());
        }
        Submodule { lo: parent.lo(), bases }
    }

    pub fn zero(parent: &WeightWindowModule) -> Self {
        let bases = parent.spaces().iter().map(|s| Matrix::zeros(s.dim(), 0)).collect();
        Submodule { lo: parent.lo(), bases }
    }

    pub fn whole(parent: &WeightWindowModule) -> Self {
        let bases = parent.spaces().iter().map(|s| Matrix::identity(s.dim())).collect();
        Submodule { lo: parent.lo(), bases }
    }

    pub fn basis(&self, i: i64) -> &Matrix {
        &self.bases[(i - self.lo) as usize]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Matrix::cols).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.bases.iter().all(|b| b.cols() == 0)
    }

    /// True when every subspace of `self` lies in the matching one of `other`.
    pub fn is_contained_in(&self, other: &Submodule) -> bool {
        self.bases
            .iter()
            .zip(&other.bases)
            .all(|(a, b)| b.hstack(a).rank() == b.cols())
    }

    /// True when the two families meet only in zero at every index.
    pub fn meets_trivially(&self, other: &Submodule) -> bool {
        self.bases
            .iter()
            .zip(&other.bases)
            .all(|(a, b)| a.hstack(b).rank() == a.cols() + b.cols())
    }

    /// Closure under `H`, `∂` and `∫` wherever the image stays in the window.
    pub fn is_closed(&self, parent: &WeightWindowModule) -> bool {
        restrict(parent, self).is_ok()
    }
}

fn restricted_map(target: &Matrix, map: &Matrix, source: &Matrix, what: &str, i: i64) -> Result<Matrix> {
    target.solve(&(map * source)).ok_or_else(|| {
        Error::InvalidModule(format!("subspace at index {i} is not closed under {what}"))
    })
}

/// The module structure induced on a submodule, in the coordinates of the
/// given bases. Fails if some map leaves the family.
pub fn restrict(parent: &WeightWindowModule, sub: &Submodule) -> Result<WeightWindowModule> {
    let spaces = parent
        .indices()
        .map(|i| {
            let b = sub.basis(i);
            let nilpotent = restricted_map(b, parent.nilpotent(i), b, "H", i)?;
            let down = if i > parent.lo() {
                restricted_map(sub.basis(i - 1), parent.down(i), b, "∂", i)?
            } else {
                Matrix::zeros(0, b.cols())
            };
            let up = if i < parent.hi() {
                restricted_map(sub.basis(i + 1), parent.up(i), b, "∫", i)?
            } else {
                Matrix::zeros(0, b.cols())
            };
            Ok(WeightSpace { nilpotent, down, up })
        })
        .collect::<Result<Vec<_>>>()?;
    WeightWindowModule::from_parts(
        parent.base_weight().clone(),
        parent.lo(),
        parent.lower_boundary(),
        parent.upper_boundary(),
        spaces,
    )
}

/// `FM`, the submodule generated by the action of the ideal `F`.
///
/// `F` is spanned by `e_ij = ∫^i e_00 ∂^j` and `e_00 = 1 - ∫∂` only acts
/// nontrivially on weight 1, so `FM` is `∫^k` applied to the image of `e_00`
/// on `M^1`, placed at weight `1 + k`. It is zero outside the integral
/// class.
pub fn compute_fm(m: &WeightWindowModule) -> Result<Submodule> {
    let Some(one) = m.weight_one_index() else {
        return Ok(Submodule::zero(m));
    };
    if one < m.lo() && m.lower_boundary() == Boundary::Genuine {
        return Ok(Submodule::zero(m));
    }
    if !m.contains(one) {
        return Err(Error::WindowTooSmall(format!(
            "weight 1 (index {one}) lies outside the window [{}, {}]",
            m.lo(),
            m.hi()
        )));
    }
    let p = m.projector(one).ok_or_else(|| {
        Error::WindowTooSmall(format!(
            "weight 1 sits on the truncated lower edge (index {one})"
        ))
    })?;
    let mut bases = Vec::with_capacity(m.spaces().len());
    let mut current = p.column_basis();
    for i in m.indices() {
        if i < one {
            bases.push(Matrix::zeros(m.dim(i), 0));
        } else {
            if i > one {
                current = m.up(i - 1) * &current;
            }
            bases.push(current.clone());
        }
    }
    Ok(Submodule::new(m, bases))
}

/// Rank of `e_00` on the weight-1 space: the number of copies of `K[x]`.
pub fn kx_multiplicity(m: &WeightWindowModule) -> Result<usize> {
    let fm = compute_fm(m)?;
    Ok(m.weight_one_index()
        .filter(|&i| m.contains(i))
        .map_or(0, |i| fm.basis(i).cols()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    /// Copies of `K[x]` in `FM`.
    pub multiplicity: usize,
    pub fm_dims: Vec<usize>,
    pub complement_dims: Vec<usize>,
}

/// A complement `C` to `FM`, closed under `H`, `∂` and `∫`, with
/// `M = FM ⊕ C` on every weight of the window.
///
/// `C` is the annihilator of `F`: `m ∈ M^{1+k}` lies in `C` exactly when
/// `e_00 ∂^k m = 0`. Each condition is a linear system whose kernel is
/// computed directly; the result is then checked against the required
/// properties, so corrupt input surfaces as [`Error::InfeasibleSystem`].
pub fn split_complement(m: &WeightWindowModule) -> Result<(Submodule, SplitReport)> {
    let fm = compute_fm(m)?;
    let complement = if fm.is_zero() {
        Submodule::whole(m)
    } else {
        let one = m.weight_one_index().expect("FM vanishes off the integral class");
        let p = m.projector(one).expect("checked by compute_fm");
        let mut bases = Vec::with_capacity(m.spaces().len());
        // conditions maps M^{λ+i} to M^1 through ∂^{i - one} followed by e_00
        let mut condition = p;
        for i in m.indices() {
            if i <= one {
                if i == one {
                    bases.push(condition.nullspace());
                } else {
                    bases.push(Matrix::identity(m.dim(i)));
                }
            } else {
                condition = &condition * m.down(i);
                bases.push(condition.nullspace());
            }
        }
        Submodule::new(m, bases)
    };
    let infeasible = |msg: &str| Err(Error::InfeasibleSystem(msg.to_string()));
    if restrict(m, &complement).is_err() {
        return infeasible("the annihilator of F is not closed under H, ∂, ∫");
    }
    if !complement.meets_trivially(&fm) {
        return infeasible("the annihilator of F meets FM");
    }
    let (fm_dims, complement_dims) = (fm.dims(), complement.dims());
    if fm_dims.iter().zip(&complement_dims).zip(m.dims()).any(|((a, b), d)| a + b != d) {
        return infeasible("FM and its candidate complement do not span the module");
    }
    let multiplicity = kx_multiplicity(m)?;
    Ok((
        complement,
        SplitReport {
            multiplicity,
            fm_dims,
            complement_dims,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use crate::rational::{int, ratio};

    fn kx_plus(n: usize, lo: i64, hi: i64) -> WeightWindowModule {
        let kx = make_kx(hi).unwrap().align_to(lo, hi).unwrap();
        direct_sum(&kx, &make_m(n, &int(0), lo, hi).unwrap()).unwrap()
    }

    #[test]
    fn fm_of_kx_is_everything() {
        let k = make_kx(6).unwrap();
        let fm = compute_fm(&k).unwrap();
        assert_eq!(fm, Submodule::whole(&k));
    }

    #[test]
    fn fm_of_m_is_zero() {
        for lam in [int(0), int(3), ratio(1, 2)] {
            let m = make_m(2, &lam, -5, 5).unwrap();
            assert!(compute_fm(&m).unwrap().is_zero());
        }
    }

    #[test]
    fn fm_of_sum_has_rank_one_above_weight_one() {
        let m = kx_plus(2, -4, 5);
        let fm = compute_fm(&m).unwrap();
        assert_eq!(fm.dims(), vec![0, 0, 0, 0, 0, 1, 1, 1, 1, 1]);
        assert!(fm.is_closed(&m));
    }

    #[test]
    fn fm_needs_weight_one() {
        let m = kx_plus(1, -4, 5).align_to(2, 5).unwrap();
        assert!(matches!(compute_fm(&m), Err(Error::WindowTooSmall(_))));
        let m = kx_plus(1, -4, 5).align_to(1, 5).unwrap();
        assert!(matches!(compute_fm(&m), Err(Error::WindowTooSmall(_))));
    }

    #[test]
    fn complement_of_scrambled_sum() {
        let m = random_scramble(&kx_plus(2, -6, 6), 3);
        let (c, report) = split_complement(&m).unwrap();
        assert_eq!(report.multiplicity, 1);
        assert!(c.is_closed(&m));
        let fm = compute_fm(&m).unwrap();
        assert!(c.meets_trivially(&fm));
        for (k, i) in m.indices().enumerate() {
            assert_eq!(c.dims()[k], 2);
            assert_eq!(fm.dims()[k], if i >= 1 { 1 } else { 0 });
        }
    }

    #[test]
    fn complement_trivial_cases() {
        let m = make_m(3, &ratio(1, 3), -4, 4).unwrap();
        let (c, r) = split_complement(&m).unwrap();
        assert_eq!(c, Submodule::whole(&m));
        assert_eq!(r.multiplicity, 0);
        let k = make_kx(5).unwrap();
        let (c, r) = split_complement(&k).unwrap();
        assert!(c.is_zero());
        assert_eq!(r.multiplicity, 1);
    }

    #[test]
    fn corrupted_projector_is_infeasible() {
        // H - 1 pushes the M(1, 0) part of the weight-1 space into FM
        let good = kx_plus(1, -3, 4);
        let mut spaces = good.spaces().to_vec();
        let one = (1 - good.lo()) as usize;
        spaces[one].nilpotent.set(0, 1, int(1));
        let bad = WeightWindowModule::from_parts(int(0), good.lo(), Boundary::Truncated, Boundary::Truncated, spaces)
            .unwrap();
        assert!(bad.validate().is_err());
        assert!(split_complement(&bad).is_err());
    }
}
