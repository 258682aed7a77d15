//! Exterior derivative, interior product, Cartan's formula, the radial
//! homotopy operator and the volume-form pairing.
//!
//! Contraction by a decomposable multivector `u1∧…∧uk` applies the factors
//! first-to-last: `ι_{u1∧…∧uk} = ι_{uk} ∘ … ∘ ι_{u1}`. With that order
//! `ι_{∂J} Ω = σ(J) dx_{J^c}`, where `σ(J)` is the sign of the permutation
//! `(J, J^c)` of `(0, …, n-1)`.

use std::sync::Arc;

use super::{merge, KForm, KVector};
use crate::coords::{self, Coords};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// `dx0∧dx1∧…∧dx{n-1}`.
pub fn volume_form<T: Scalar>(coords: &Arc<Coords>) -> KForm<T> {
    let idx: Vec<usize> = (0..coords.dim()).collect();
    KForm::basis(coords, &idx).expect("indices in range")
}

fn is_volume_form<T: Scalar>(omega: &KForm<T>) -> bool {
    let n = omega.dim();
    omega.grade() == n && omega.len() == 1 && omega.coefficient(&(0..n).collect::<Vec<_>>()).is_one()
}

/// Removes `j` (in order) from `i`, returning what is left and the sign
/// picked up by moving each removed index to the front.
fn contract_indices(j: &[usize], i: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut rest = i.to_vec();
    let mut negative = false;
    for x in j {
        let pos = rest.iter().position(|y| y == x)?;
        negative ^= pos % 2 == 1;
        rest.remove(pos);
    }
    Some((rest, negative))
}

fn contract_unchecked<T: Scalar>(v: &KVector<T>, a: &KForm<T>) -> KForm<T> {
    let mut out = KForm::zero(a.coords(), a.grade() - v.grade());
    for (j, cv) in v.terms() {
        for (i, ca) in a.terms() {
            if let Some((rest, negative)) = contract_indices(j, i) {
                let c = cv * ca;
                out.add_term(rest, if negative { -c } else { c });
            }
        }
    }
    out
}

/// Interior product `v ⌋ a`; bilinear, grade `a.grade - v.grade`.
pub fn contract<T: Scalar>(v: &KVector<T>, a: &KForm<T>) -> Result<KForm<T>> {
    if !coords::same(v.coords(), a.coords()) {
        return Err(Error::CoordsMismatch);
    }
    if v.grade() > a.grade() {
        return Err(Error::Grade(format!("cannot contract a grade-{} field into a {}-form", v.grade(), a.grade())));
    }
    Ok(contract_unchecked(v, a))
}

/// `L_v a = v⌋da + d(v⌋a)`, with `v⌋·` read as zero when the grade of `v`
/// exceeds that of its argument. Needs `v.grade <= a.grade + 1`.
pub fn lie_derivative<T: Scalar>(v: &KVector<T>, a: &KForm<T>) -> Result<KForm<T>> {
    if !coords::same(v.coords(), a.coords()) {
        return Err(Error::CoordsMismatch);
    }
    if v.grade() > a.grade() + 1 {
        return Err(Error::Grade(format!("Lie derivative of a {}-form along a grade-{} field", a.grade(), v.grade())));
    }
    let first = contract_unchecked(v, &a.d());
    if v.grade() > a.grade() {
        return Ok(first);
    }
    first.try_add(&contract_unchecked(v, a).d())
}

/// The multivector `X` of grade `n - a.grade` with `X ⌋ Ω = a`.
///
/// `omega` must be exactly `dx0∧…∧dx{n-1}`.
pub fn omega_inverse<T: Scalar>(a: &KForm<T>, omega: &KForm<T>) -> Result<KVector<T>> {
    if !coords::same(a.coords(), omega.coords()) {
        return Err(Error::CoordsMismatch);
    }
    if !is_volume_form(omega) {
        return Err(Error::NotVolumeForm);
    }
    let n = a.dim();
    if a.grade() > n {
        return Err(Error::Grade(format!("{}-form on {n} coordinates", a.grade())));
    }
    let mut out = KVector::zero(a.coords(), n - a.grade());
    for (i, c) in a.terms() {
        let j: Vec<usize> = (0..n).filter(|x| !i.contains(x)).collect();
        let (_, sign) = merge(&j, i).expect("complementary tuples");
        out.add_term(j, if sign < 0 { -c } else { c.clone() });
    }
    Ok(out)
}

impl<T: Scalar> KForm<T> {
    /// Exterior derivative. On a top-degree form this is the zero form of
    /// grade `n + 1`.
    pub fn d(&self) -> KForm<T> {
        let n = self.dim();
        let mut out = KForm::zero(self.coords(), self.grade() + 1);
        for (idx, f) in self.terms() {
            for v in (0..n).filter(|v| !idx.contains(v)) {
                let df = f.partial(v).expect("index in range");
                if df.is_zero() {
                    continue;
                }
                let pos = idx.iter().filter(|&&i| i < v).count();
                let mut new_idx = idx.to_vec();
                new_idx.insert(pos, v);
                out.add_term(new_idx, if pos % 2 == 1 { -df } else { df });
            }
        }
        out
    }

    /// Radial homotopy operator centred at the origin.
    ///
    /// On `x^α dx_{i1}∧…∧dx_{ik}` with `|α| = m` it gives
    /// `Σ_j (-1)^(j-1) x_{ij} x^α / (k + m) · dx_{i1}∧…(omit ij)…∧dx_{ik}`,
    /// so `d K + K d` is the identity on forms of positive grade.
    pub fn homotopy(&self) -> Result<KForm<T>> {
        if self.grade() == 0 {
            return Err(Error::Grade("homotopy operator needs a form of positive grade".into()));
        }
        let k = self.grade();
        let coords = self.coords().clone();
        let mut out = KForm::zero(&coords, k - 1);
        for (idx, f) in self.terms() {
            for (mono, coef) in f.terms() {
                let weight = coef.clone() / T::from_int((k as u32 + mono.degree()) as i64);
                for (j, &var) in idx.iter().enumerate() {
                    let lifted = mono.mul(&crate::poly::Monomial::var(var));
                    let sign = if j % 2 == 1 { -weight.clone() } else { weight.clone() };
                    let mut rest = idx.to_vec();
                    rest.remove(j);
                    out.add_term(rest, Polynomial::monomial(&coords, sign, lifted));
                }
            }
        }
        Ok(out)
    }
}
