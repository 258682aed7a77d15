//! Graded exterior algebra over polynomial coefficients.
//!
//! [`KForm`] (differential forms) and [`KVector`] (multivector fields) share
//! one representation: a grade and a map from strictly increasing index
//! tuples to nonzero [`Polynomial`] coefficients. The kind parameter keeps
//! the two algebras from being mixed up; the pairing between them lives in
//! [`calculus`].
//!
//! A zero element may carry a grade above the dimension. That is how
//! `d` of a top form and contractions of it stay well-typed.

pub mod calculus;
pub(crate) mod json;

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::coords::{self, Coords};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

pub use calculus::{contract, lie_derivative, omega_inverse, volume_form};

/// Marker for the two graded algebras.
pub trait Kind: Copy + fmt::Debug + Send + Sync + 'static {
    const NAME: &'static str;
    /// Prefix used when printing a basis element.
    const BASIS_PREFIX: &'static str;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Form;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vector;

impl Kind for Form {
    const NAME: &'static str = "form";
    const BASIS_PREFIX: &'static str = "d";
}

impl Kind for Vector {
    const NAME: &'static str = "vector";
    const BASIS_PREFIX: &'static str = "∂";
}

pub struct Graded<T, K> {
    coords: Arc<Coords>,
    grade: usize,
    terms: BTreeMap<Vec<usize>, Polynomial<T>>,
    kind: PhantomData<K>,
}

/// Differential form of a fixed grade.
pub type KForm<T> = Graded<T, Form>;
/// Multivector field of a fixed grade.
pub type KVector<T> = Graded<T, Vector>;

impl<T: Clone, K> Clone for Graded<T, K> {
    fn clone(&self) -> Self {
        Graded { coords: self.coords.clone(), grade: self.grade, terms: self.terms.clone(), kind: PhantomData }
    }
}

/// Sorts `idx` in place and returns the permutation sign, or `None` if an
/// index repeats.
pub(crate) fn sort_with_sign(idx: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    // insertion sort, counting transpositions
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Concatenation `a ++ b` of two increasing tuples, sorted, with its sign.
pub(crate) fn merge(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut inversions = 0usize;
    for &x in a {
        if b.contains(&x) {
            return None;
        }
        inversions += b.iter().filter(|&&y| y < x).count();
    }
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    Some((out, if inversions.is_multiple_of(2) { 1 } else { -1 }))
}

impl<T: Scalar, K: Kind> Graded<T, K> {
    pub fn zero(coords: &Arc<Coords>, grade: usize) -> Self {
        Graded { coords: coords.clone(), grade, terms: BTreeMap::new(), kind: PhantomData }
    }

    /// Grade-0 element wrapping a polynomial.
    pub fn scalar(p: Polynomial<T>) -> Self {
        let mut out = Self::zero(p.coords(), 0);
        if !p.is_zero() {
            out.terms.insert(Vec::new(), p);
        }
        out
    }

    /// The basis element on `idx` (any order; a permutation contributes its
    /// sign, a repeat gives zero).
    pub fn basis(coords: &Arc<Coords>, idx: &[usize]) -> Result<Self> {
        Self::from_terms(coords, idx.len(), [(idx.to_vec(), Polynomial::one(coords))])
    }

    /// Sums `coef * basis(idx)` over the given terms.
    pub fn from_terms(
        coords: &Arc<Coords>,
        grade: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Polynomial<T>)>,
    ) -> Result<Self> {
        let mut out = Self::zero(coords, grade);
        for (mut idx, coef) in terms {
            if idx.len() != grade {
                return Err(Error::Grade(format!("index tuple {idx:?} in a grade-{grade} element")));
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= coords.dim()) {
                return Err(Error::IndexOutOfRange { index: bad, dim: coords.dim() });
            }
            if !coords::same(coef.coords(), coords) {
                return Err(Error::CoordsMismatch);
            }
            if let Some(sign) = sort_with_sign(&mut idx) {
                out.add_term(idx, if sign < 0 { -coef } else { coef });
            }
        }
        Ok(out)
    }

    pub fn coords(&self) -> &Arc<Coords> {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic index order.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Polynomial<T>)> + '_ {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Coefficient on a strictly increasing index tuple.
    pub fn coefficient(&self, idx: &[usize]) -> Polynomial<T> {
        self.terms.get(idx).cloned().unwrap_or_else(|| Polynomial::zero(&self.coords))
    }

    /// The polynomial of a grade-0 element.
    pub fn to_scalar(&self) -> Option<Polynomial<T>> {
        (self.grade == 0).then(|| self.coefficient(&[]))
    }

    pub(crate) fn add_term(&mut self, idx: Vec<usize>, coef: Polynomial<T>) {
        if coef.is_zero() {
            return;
        }
        match self.terms.remove(&idx) {
            Some(prev) => {
                let sum = &prev + &coef;
                if !sum.is_zero() {
                    self.terms.insert(idx, sum);
                }
            }
            None => {
                self.terms.insert(idx, coef);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !coords::same(&self.coords, &other.coords) {
            return Err(Error::CoordsMismatch);
        }
        if self.grade != other.grade {
            return Err(Error::Grade(format!("cannot add grades {} and {}", self.grade, other.grade)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map_coefficients(|c| c.scale(factor))
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn mul_poly(&self, p: &Polynomial<T>) -> Result<Self> {
        if !coords::same(&self.coords, p.coords()) {
            return Err(Error::CoordsMismatch);
        }
        Ok(self.map_coefficients(|c| c * p))
    }

    fn map_coefficients(&self, f: impl Fn(&Polynomial<T>) -> Polynomial<T>) -> Self {
        let mut out = Self::zero(&self.coords, self.grade);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), f(c));
        }
        out
    }

    /// Exterior product with sign from the shuffle of index tuples.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if !coords::same(&self.coords, &other.coords) {
            return Err(Error::CoordsMismatch);
        }
        let mut out = Self::zero(&self.coords, self.grade + other.grade);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((idx, sign)) = merge(a, b) {
                    let c = ca * cb;
                    out.add_term(idx, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// The same element with coefficients in another scalar type.
    pub fn cast<U: Scalar>(&self) -> Graded<U, K> {
        let mut out = Graded::zero(&self.coords, self.grade);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), c.cast());
        }
        out
    }

    /// Moves onto `target`, sending coordinate `i` to `map(i)`.
    pub fn relabel(&self, target: &Arc<Coords>, map: impl Fn(usize) -> usize + Copy) -> Result<Self> {
        Self::from_terms(
            target,
            self.grade,
            self.terms
                .iter()
                .map(|(idx, c)| Ok((idx.iter().map(|&i| map(i)).collect(), c.relabel(target, map)?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

impl<T: Scalar> KForm<T> {
    /// The basis 1-form `dx_index`.
    pub fn dx(coords: &Arc<Coords>, index: usize) -> Result<Self> {
        Self::basis(coords, &[index])
    }

    /// `dp` of a polynomial.
    pub fn differential(p: &Polynomial<T>) -> Self {
        Self::scalar(p.clone()).d()
    }
}

impl<T: Scalar> KVector<T> {
    /// The coordinate vector field `∂/∂x_index`.
    pub fn partial(coords: &Arc<Coords>, index: usize) -> Result<Self> {
        Self::basis(coords, &[index])
    }

    /// `Σ f_i ∂_i` from one component per coordinate.
    pub fn from_components(components: &[Polynomial<T>]) -> Result<Self> {
        let coords = components.first().ok_or_else(|| Error::Invalid("no components".into()))?.coords().clone();
        if components.len() != coords.dim() {
            return Err(Error::DimensionMismatch { expected: coords.dim(), got: components.len() });
        }
        Self::from_terms(&coords, 1, components.iter().cloned().enumerate().map(|(i, c)| (vec![i], c)))
    }

    /// Components of a grade-1 field, one per coordinate.
    pub fn components(&self) -> Option<Vec<Polynomial<T>>> {
        (self.grade == 1).then(|| (0..self.dim()).map(|i| self.coefficient(&[i])).collect())
    }
}

impl<T: Scalar, K: Kind> PartialEq for Graded<T, K> {
    fn eq(&self, other: &Self) -> bool {
        coords::same(&self.coords, &other.coords) && self.grade == other.grade && self.terms == other.terms
    }
}

impl<T: Scalar, K: Kind> fmt::Debug for Graded<T, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graded<{}>(grade {}: {})", K::NAME, self.grade, self)
    }
}

/// Human-readable form such as `-dx∧dy + (-z + y)*dy∧dz`.
impl<T: Scalar, K: Kind> fmt::Display for Graded<T, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (idx, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if idx.is_empty() {
                write!(f, "{c}")?;
                continue;
            }
            if c.is_one() {
            } else if (-c).is_one() {
                f.write_str("-")?;
            } else {
                write!(f, "({c})*")?;
            }
            for (j, &v) in idx.iter().enumerate() {
                if j > 0 {
                    f.write_str("∧")?;
                }
                write!(f, "{}{}", K::BASIS_PREFIX, self.coords.name(v))?;
            }
        }
        Ok(())
    }
}

macro_rules! graded_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, T: Scalar, K: Kind> $tr<&'a Graded<T, K>> for &'a Graded<T, K> {
            type Output = Graded<T, K>;
            /// # Panics
            /// On mismatched coordinates or grades.
            fn $method(self, rhs: &'a Graded<T, K>) -> Graded<T, K> {
                self.$checked(rhs).expect("incompatible graded elements")
            }
        }
    };
}

graded_binop!(Add, add, try_add);
graded_binop!(Sub, sub, try_sub);

impl<T: Scalar, K: Kind> Neg for &Graded<T, K> {
    type Output = Graded<T, K>;
    fn neg(self) -> Graded<T, K> {
        self.map_coefficients(|c| -c)
    }
}

impl<T: Scalar, K: Kind> Neg for Graded<T, K> {
    type Output = Graded<T, K>;
    fn neg(self) -> Graded<T, K> {
        -&self
    }
}
