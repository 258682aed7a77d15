//! Nambu flows: exact right-hand sides, their divergence and vector
//! potentials, numeric integration and the Lax-pair check.

mod integrate;
mod lax;
pub mod rigid_body;

pub use integrate::{integrate, integrate_field, FlowSpec, IntegrationError, Sample, Trajectory};
pub use lax::{lax_residual, LaxPair, Matrix3};

use crate::error::{Error, Result};
use crate::exterior::{contract, volume_form, KVector};
use crate::hamfields::{nambu_bracket, NambuSystem};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// `ẋ_i = {H1, H2, …, H_{n-1}, x_i}` for a system with `n - 1` Hamiltonians.
pub fn flow_field<T: Scalar>(system: &NambuSystem<T>) -> Result<Vec<Polynomial<T>>> {
    let n = system.dim();
    let hs = system.hamiltonians();
    if hs.len() + 1 != n {
        return Err(Error::Invalid(format!(
            "a flow on {n} coordinates needs {} Hamiltonians, got {}",
            n - 1,
            hs.len()
        )));
    }
    Polynomial::vars(system.coords())
        .into_iter()
        .map(|xi| {
            let mut args = hs[1..].to_vec();
            args.push(xi);
            nambu_bracket(&hs[0], &args)
        })
        .collect()
}

fn field_coords<T: Scalar>(field: &[Polynomial<T>]) -> Result<std::sync::Arc<crate::Coords>> {
    let coords = field.first().ok_or_else(|| Error::Invalid("empty vector field".into()))?.coords().clone();
    if field.len() != coords.dim() {
        return Err(Error::DimensionMismatch { expected: coords.dim(), got: field.len() });
    }
    Ok(coords)
}

/// `Σ ∂f_i/∂x_i`.
pub fn divergence<T: Scalar>(field: &[Polynomial<T>]) -> Result<Polynomial<T>> {
    let coords = field_coords(field)?;
    field.iter().enumerate().try_fold(Polynomial::zero(&coords), |acc, (i, f)| acc.try_add(&f.partial(i)?))
}

/// Rate of change of `g` along `field`: `Σ ∂g/∂x_i · f_i`.
pub fn directional_derivative<T: Scalar>(g: &Polynomial<T>, field: &[Polynomial<T>]) -> Result<Polynomial<T>> {
    let coords = field_coords(field)?;
    field.iter().enumerate().try_fold(Polynomial::zero(&coords), |acc, (i, f)| acc.try_add(&g.partial(i)?.try_mul(f)?))
}

/// `rot h` on three coordinates.
pub fn curl<T: Scalar>(h: &[Polynomial<T>]) -> Result<Vec<Polynomial<T>>> {
    let coords = field_coords(h)?;
    if coords.dim() != 3 {
        return Err(Error::Invalid("curl is defined on three coordinates".into()));
    }
    let d = |i: usize, j: usize| h[i].partial(j).expect("index in range");
    Ok(vec![&d(2, 1) - &d(1, 2), &d(0, 2) - &d(2, 0), &d(1, 0) - &d(0, 1)])
}

/// A vector potential `h` with `rot h = field`, from the homotopy operator
/// applied to the flux 2-form `field ⌋ Ω`.
pub fn vector_hamiltonian<T: Scalar>(field: &[Polynomial<T>]) -> Result<Vec<Polynomial<T>>> {
    let coords = field_coords(field)?;
    if coords.dim() != 3 {
        return Err(Error::Invalid("vector potentials are computed on three coordinates".into()));
    }
    if !divergence(field)?.is_zero() {
        return Err(Error::NonzeroDivergence);
    }
    let flux = contract(&KVector::from_components(field)?, &volume_form(&coords))?;
    let nu = flux.homotopy()?;
    Ok((0..3).map(|i| nu.coefficient(&[i])).collect())
}
