use std::array;

use super::directional_derivative;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

pub type Matrix3<E> = [[E; 3]; 3];

/// `L` symmetric with polynomial entries, `M` constant and antisymmetric,
/// meant to satisfy `L̇ = [M, L] = ML - LM` along a flow.
#[derive(Clone, Debug, PartialEq)]
pub struct LaxPair<T: Scalar> {
    l: Matrix3<Polynomial<T>>,
    m: Matrix3<T>,
}

impl<T: Scalar> LaxPair<T> {
    pub fn new(l: Matrix3<Polynomial<T>>, m: Matrix3<T>) -> Result<Self> {
        for i in 0..3 {
            for j in 0..3 {
                if l[i][j] != l[j][i] {
                    return Err(Error::Invalid("L must be symmetric".into()));
                }
                if m[i][j] != -m[j][i].clone() {
                    return Err(Error::Invalid("M must be antisymmetric".into()));
                }
            }
        }
        Ok(LaxPair { l, m })
    }

    pub fn l(&self) -> &Matrix3<Polynomial<T>> {
        &self.l
    }

    pub fn m(&self) -> &Matrix3<T> {
        &self.m
    }

    /// `tr(L^p)`; `p = 0` gives 3.
    pub fn trace_power(&self, p: u32) -> Polynomial<T> {
        let coords = self.l[0][0].coords().clone();
        let identity: Matrix3<Polynomial<T>> = array::from_fn(|i| {
            array::from_fn(|j| if i == j { Polynomial::one(&coords) } else { Polynomial::zero(&coords) })
        });
        let power = (0..p).fold(identity, |acc, _| mat_mul(&acc, &self.l));
        (0..3).fold(Polynomial::zero(&coords), |s, i| &s + &power[i][i])
    }
}

fn mat_mul<T: Scalar>(a: &Matrix3<Polynomial<T>>, b: &Matrix3<Polynomial<T>>) -> Matrix3<Polynomial<T>> {
    array::from_fn(|i| {
        array::from_fn(|j| (0..3).fold(Polynomial::zero(a[0][0].coords()), |s, k| &s + &(&a[i][k] * &b[k][j])))
    })
}

/// `L̇ - (ML - LM)` with `L̇` taken symbolically along `field`; the zero
/// matrix exactly when the Lax equation holds for that flow.
pub fn lax_residual<T: Scalar>(pair: &LaxPair<T>, field: &[Polynomial<T>]) -> Result<Matrix3<Polynomial<T>>> {
    if field.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: field.len() });
    }
    let (l, m) = (&pair.l, &pair.m);
    let mut out: Matrix3<Polynomial<T>> = array::from_fn(|_| array::from_fn(|_| Polynomial::zero(l[0][0].coords())));
    for i in 0..3 {
        for j in 0..3 {
            let mut commutator = Polynomial::zero(l[0][0].coords());
            for k in 0..3 {
                commutator = &commutator + &(&l[k][j].scale(&m[i][k]) - &l[i][k].scale(&m[k][j]));
            }
            out[i][j] = directional_derivative(&l[i][j], field)?.try_sub(&commutator)?;
        }
    }
    Ok(out)
}
