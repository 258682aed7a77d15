//! Seedable generators of random rational polynomials and forms.

use std::sync::Arc;

use rand::Rng;

use crate::coords::Coords;
use crate::exterior::{Graded, Kind};
use crate::hamfields::combinations;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::{rational, Rational};

/// Small nonzero rational: numerator in ±1..=9, denominator in 1..=4.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let num = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    rational(num, rng.gen_range(1..=4))
}

/// A monomial of total degree at most `max_degree`.
pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    Monomial::from_pairs((0..degree).map(|_| (rng.gen_range(0..dim), 1)))
}

/// Up to `max_terms` random terms of degree at most `max_degree`.
pub fn random_polynomial<R: Rng + ?Sized>(
    rng: &mut R,
    coords: &Arc<Coords>,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial<Rational> {
    let count = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<_> =
        (0..count).map(|_| (random_monomial(rng, coords.dim(), max_degree), small_rational(rng))).collect();
    Polynomial::from_terms(coords, terms).expect("variables in range")
}

/// Random element of the given grade; each basis slot is filled with
/// probability one half.
pub fn random_graded<K: Kind, R: Rng + ?Sized>(
    rng: &mut R,
    coords: &Arc<Coords>,
    grade: usize,
    max_degree: u32,
    max_terms: usize,
) -> Graded<Rational, K> {
    let mut terms = Vec::new();
    for idx in combinations(coords.dim(), grade) {
        if rng.gen_bool(0.5) {
            terms.push((idx, random_polynomial(rng, coords, max_degree, max_terms)));
        }
    }
    Graded::from_terms(coords, grade, terms).expect("valid indices")
}
