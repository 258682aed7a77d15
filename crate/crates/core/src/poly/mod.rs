//! Sparse multivariate polynomials over a [`Scalar`] field.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], so iteration follows
//! the canonical order and the printed form is deterministic. Zero
//! coefficients are never stored; two polynomials on the same coordinates
//! are equal exactly when their term maps are.

mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub use monomial::Monomial;

use crate::coords::{self, Coords};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct Polynomial<T> {
    coords: Arc<Coords>,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero(coords: &Arc<Coords>) -> Self {
        Polynomial { coords: coords.clone(), terms: BTreeMap::new() }
    }

    pub fn one(coords: &Arc<Coords>) -> Self {
        Self::constant(coords, T::one())
    }

    pub fn constant(coords: &Arc<Coords>, value: T) -> Self {
        Self::monomial(coords, value, Monomial::one())
    }

    /// The coordinate function `x_index`.
    pub fn var(coords: &Arc<Coords>, index: usize) -> Result<Self> {
        if index >= coords.dim() {
            return Err(Error::IndexOutOfRange { index, dim: coords.dim() });
        }
        Ok(Self::monomial(coords, T::one(), Monomial::var(index)))
    }

    /// All coordinate functions in order.
    pub fn vars(coords: &Arc<Coords>) -> Vec<Self> {
        (0..coords.dim()).map(|i| Self::monomial(coords, T::one(), Monomial::var(i))).collect()
    }

    /// # Panics
    /// If the monomial mentions a variable outside `coords`.
    pub fn monomial(coords: &Arc<Coords>, coef: T, mono: Monomial) -> Self {
        assert!(mono.span() <= coords.dim(), "monomial variable out of range");
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(mono, coef);
        }
        Polynomial { coords: coords.clone(), terms }
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms(coords: &Arc<Coords>, terms: impl IntoIterator<Item = (Monomial, T)>) -> Result<Self> {
        let mut p = Self::zero(coords);
        for (m, c) in terms {
            if m.span() > coords.dim() {
                return Err(Error::IndexOutOfRange { index: m.span() - 1, dim: coords.dim() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn coords(&self) -> &Arc<Coords> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &T)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> T {
        self.terms.get(mono).cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> T {
        self.coefficient(&Monomial::one())
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, coef: T) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coef;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_coords(&self, other: &Self) -> Result<()> {
        if coords::same(&self.coords, &other.coords) {
            Ok(())
        } else {
            Err(Error::CoordsMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_coords(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_coords(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_coords(other)?;
        let mut out = Self::zero(&self.coords);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &T) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.coords);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * factor.clone())).collect();
        Polynomial { coords: self.coords.clone(), terms }
    }

    pub fn mul_monomial(&self, coef: &T, mono: &Monomial) -> Self {
        if coef.is_zero() {
            return Self::zero(&self.coords);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone() * coef.clone())).collect();
        Polynomial { coords: self.coords.clone(), terms }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.coords);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> Result<Self> {
        if index >= self.coords.dim() {
            return Err(Error::IndexOutOfRange { index, dim: self.coords.dim() });
        }
        let mut out = Self::zero(&self.coords);
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.derivative(index) {
                out.add_term(dm, c.clone() * T::from_int(e as i64));
            }
        }
        Ok(out)
    }

    /// All first partials, in coordinate order.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.coords.dim()).map(|i| self.partial(i).expect("index in range")).collect()
    }

    /// Evaluates at `point` in the coefficient type (exact for rationals).
    pub fn eval(&self, point: &[T]) -> Result<T> {
        if point.len() != self.coords.dim() {
            return Err(Error::DimensionMismatch { expected: self.coords.dim(), got: point.len() });
        }
        let mut sum = T::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in m.powers() {
                for _ in 0..e {
                    term = term * point[v].clone();
                }
            }
            sum = sum + term;
        }
        Ok(sum)
    }

    /// Evaluates at a float point, converting coefficients on the fly.
    pub fn eval_f64(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.coords.dim() {
            return Err(Error::DimensionMismatch { expected: self.coords.dim(), got: point.len() });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                let c: f64 = c.cast();
                m.powers().iter().fold(c, |acc, &(v, e)| acc * point[v].powi(e as i32))
            })
            .sum())
    }

    /// The same polynomial with coefficients converted to another scalar type.
    pub fn cast<U: Scalar>(&self) -> Polynomial<U> {
        let mut out = Polynomial::zero(&self.coords);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.cast());
        }
        out
    }

    /// Moves the polynomial onto `target`, sending variable `i` to `map(i)`.
    pub fn relabel(&self, target: &Arc<Coords>, map: impl Fn(usize) -> usize) -> Result<Self> {
        Self::from_terms(target, self.terms.iter().map(|(m, c)| (m.map_vars(&map), c.clone())))
    }
}

impl<T: Scalar> PartialEq for Polynomial<T> {
    fn eq(&self, other: &Self) -> bool {
        coords::same(&self.coords, &other.coords) && self.terms == other.terms
    }
}

impl<T: Scalar> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Canonical form: terms in ascending monomial order, `c*x^2*y` style,
/// unit coefficients omitted, `0` for the zero polynomial.
impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            for (j, &(v, e)) in m.powers().iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                f.write_str(self.coords.name(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, T: Scalar> $tr<&'a Polynomial<T>> for &'a Polynomial<T> {
            type Output = Polynomial<T>;
            /// # Panics
            /// On a coordinate mismatch; use the `try_` form to handle it.
            fn $method(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
                self.$checked(rhs).expect("polynomials on different coordinates")
            }
        }

        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { coords: self.coords.clone(), terms }
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -&self
    }
}
