//! The rigid-body example: `ẋ = y - z, ẏ = z - x, ż = x - y` on `(x, y, z)`.

use std::sync::Arc;

use super::LaxPair;
use crate::coords::Coords;
use crate::exterior::KForm;
use crate::poly::Polynomial;
use crate::scalar::{rational, Rational};

type Q = Polynomial<Rational>;

/// `(x, y, z)`, also accepting `x0, x1, x2`.
pub fn coords() -> Arc<Coords> {
    Coords::with_aliases(&["x", "y", "z"], &["x0", "x1", "x2"]).expect("valid names")
}

fn p(text: &str, c: &Arc<Coords>) -> Q {
    Q::parse(text, c).expect("built-in expression parses")
}

/// `Dx` with `D` the constant antisymmetric matrix of the example.
pub fn field(c: &Arc<Coords>) -> Vec<Q> {
    ["y - z", "z - x", "x - y"].iter().map(|s| p(s, c)).collect()
}

/// `I1 = x + y + z` and `I2 = 3/2 (x² + y² + z²)`.
pub fn invariants(c: &Arc<Coords>) -> [Q; 2] {
    [p("x + y + z", c), p("3/2*(x^2 + y^2 + z^2)", c)]
}

/// Flux 2-form `(y-z) dy∧dz + (z-x) dz∧dx + (x-y) dx∧dy` of the field.
pub fn flux_form(c: &Arc<Coords>) -> KForm<Rational> {
    flux_with_first(c, "y - z")
}

/// The flux form with `y - x` as its first coefficient. It is not closed.
pub fn unclosed_flux_form(c: &Arc<Coords>) -> KForm<Rational> {
    flux_with_first(c, "y - x")
}

fn flux_with_first(c: &Arc<Coords>, first: &str) -> KForm<Rational> {
    KForm::from_terms(c, 2, [(vec![1, 2], p(first, c)), (vec![2, 0], p("-x + z", c)), (vec![0, 1], p("x - y", c))])
        .expect("indices in range")
}

/// `L = [[x, z, y], [z, y, x], [y, x, z]]`, `M = ½[[0, -1, 1], [1, 0, -1], [-1, 1, 0]]`.
pub fn lax_pair(c: &Arc<Coords>) -> LaxPair<Rational> {
    let [x, y, z] = [p("x", c), p("y", c), p("z", c)];
    let l = [[x.clone(), z.clone(), y.clone()], [z.clone(), y.clone(), x.clone()], [y, x, z]];
    let h = rational(1, 2);
    let zero = rational(0, 1);
    let m =
        [[zero.clone(), -h.clone(), h.clone()], [h.clone(), zero.clone(), -h.clone()], [-h.clone(), h.clone(), zero]];
    LaxPair::new(l, m).expect("L symmetric, M antisymmetric")
}
