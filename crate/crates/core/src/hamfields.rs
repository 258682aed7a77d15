//! Hamiltonian multivector fields of the Liouville volume form and the
//! Nambu brackets they induce.
//!
//! For a polynomial `H` on `n` coordinates and `1 <= k <= n-1`, the
//! grade-`k` Hamiltonian field is the unique `X` with
//! `X ⌋ Ω = Σ_{|S| = n-k-1} dH ∧ dx_S`, where `S` ranges over increasing
//! index tuples. For `k = n-1` this is `X ⌋ Ω = dH`.
//!
//! No `1/k!` normalization is applied: with the contraction order used in
//! [`crate::exterior::calculus`], the bracket of top arity is
//! `(-1)^(n-1) det[∇H; ∇F1; …; ∇F_{n-1}]`, which is the plain Jacobian for
//! odd `n`.

use std::sync::Arc;

use serde::Serialize;

use crate::coords::{self, Coords};
use crate::error::{Error, Result};
use crate::exterior::json::GradedDoc;
use crate::exterior::{contract, lie_derivative, omega_inverse, volume_form, KForm, KVector};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Increasing `size`-tuples drawn from `0..n`, in lexicographic order.
pub fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size <= n {
        go(0, n, size, &mut Vec::with_capacity(size), &mut out);
    }
    out
}

fn check_grade(n: usize, k: usize) -> Result<()> {
    if k == 0 || k + 1 > n {
        return Err(Error::Grade(format!("grade {k} outside 1..={} for {n} coordinates", n.saturating_sub(1))));
    }
    Ok(())
}

/// `Σ_{|S| = n-k-1} dH ∧ dx_S`, a closed `(n-k)`-form.
pub fn theta_ladder<T: Scalar>(h: &Polynomial<T>, k: usize) -> Result<KForm<T>> {
    let coords = h.coords();
    let n = coords.dim();
    check_grade(n, k)?;
    let dh = KForm::differential(h);
    let mut out = KForm::zero(coords, n - k);
    for s in combinations(n, n - k - 1) {
        out = out.try_add(&dh.wedge(&KForm::basis(coords, &s)?)?)?;
    }
    Ok(out)
}

/// Grade-`k` Hamiltonian field of `h`, defined by `X ⌋ Ω = theta_ladder(h, k)`.
pub fn hamiltonian_kvector<T: Scalar>(h: &Polynomial<T>, k: usize) -> Result<KVector<T>> {
    omega_inverse(&theta_ladder(h, k)?, &volume_form(h.coords()))
}

/// `{H, F1, …, Fk} = X_H^k ⌋ (dF1 ∧ … ∧ dFk)`.
pub fn nambu_bracket<T: Scalar>(h: &Polynomial<T>, fs: &[Polynomial<T>]) -> Result<Polynomial<T>> {
    let coords = h.coords();
    let n = coords.dim();
    if fs.is_empty() || fs.len() + 1 > n {
        return Err(Error::Invalid(format!(
            "bracket with {} arguments after H needs 1..={} on {n} coordinates",
            fs.len(),
            n.saturating_sub(1)
        )));
    }
    if fs.iter().any(|f| !coords::same(f.coords(), coords)) {
        return Err(Error::CoordsMismatch);
    }
    let x = hamiltonian_kvector(h, fs.len())?;
    let mut wedge = KForm::scalar(Polynomial::one(coords));
    for f in fs {
        wedge = wedge.wedge(&KForm::differential(f))?;
    }
    Ok(contract(&x, &wedge)?.to_scalar().expect("full contraction is grade 0"))
}

/// `{H, G} = X_H^1 ⌋ dG`.
pub fn poisson_bracket<T: Scalar>(h: &Polynomial<T>, g: &Polynomial<T>) -> Result<Polynomial<T>> {
    nambu_bracket(h, std::slice::from_ref(g))
}

/// Hamiltonians `H1, …, Hm` (`1 <= m <= n-1`) on a shared coordinate system.
#[derive(Clone, Debug, PartialEq)]
pub struct NambuSystem<T: Scalar> {
    coords: Arc<Coords>,
    hamiltonians: Vec<Polynomial<T>>,
}

impl<T: Scalar> NambuSystem<T> {
    pub fn new(hamiltonians: Vec<Polynomial<T>>) -> Result<Self> {
        let coords = hamiltonians
            .first()
            .ok_or_else(|| Error::Invalid("a Nambu system needs at least one Hamiltonian".into()))?
            .coords()
            .clone();
        if hamiltonians.iter().any(|h| !coords::same(h.coords(), &coords)) {
            return Err(Error::CoordsMismatch);
        }
        if hamiltonians.len() + 1 > coords.dim() {
            return Err(Error::Invalid(format!(
                "{} Hamiltonians on {} coordinates (at most {})",
                hamiltonians.len(),
                coords.dim(),
                coords.dim().saturating_sub(1)
            )));
        }
        Ok(NambuSystem { coords, hamiltonians })
    }

    pub fn coords(&self) -> &Arc<Coords> {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn hamiltonians(&self) -> &[Polynomial<T>] {
        &self.hamiltonians
    }
}

/// Both pieces of Cartan's formula for `L_X Ω`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiouvilleResiduals<T: Scalar> {
    /// `L_X Ω = X⌋dΩ + d(X⌋Ω)`.
    pub lie: KForm<T>,
    /// `d(X⌋Ω)`.
    pub theta_differential: KForm<T>,
}

impl<T: Scalar> LiouvilleResiduals<T> {
    pub fn pass(&self) -> bool {
        self.lie.is_zero() && self.theta_differential.is_zero()
    }
}

/// Exact residuals of the Liouville condition for an arbitrary field.
pub fn liouville_residuals<T: Scalar>(x: &KVector<T>) -> Result<LiouvilleResiduals<T>> {
    let omega = volume_form(x.coords());
    Ok(LiouvilleResiduals { lie: lie_derivative(x, &omega)?, theta_differential: contract(x, &omega)?.d() })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiouvilleCertificate<T: Scalar> {
    pub n: usize,
    pub k: usize,
    pub hamiltonian: Polynomial<T>,
    pub residuals: LiouvilleResiduals<T>,
}

impl<T: Scalar> LiouvilleCertificate<T> {
    pub fn theta_closed(&self) -> bool {
        self.residuals.theta_differential.is_zero()
    }

    pub fn pass(&self) -> bool {
        self.residuals.pass()
    }

    /// `{"n","k","H","lie_residual","theta_closed","pass"}`, compact.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc {
            n: usize,
            k: usize,
            #[serde(rename = "H")]
            h: String,
            lie_residual: GradedDoc,
            theta_closed: bool,
            pass: bool,
        }
        let doc = Doc {
            n: self.n,
            k: self.k,
            h: self.hamiltonian.to_string(),
            lie_residual: self.residuals.lie.to_doc(),
            theta_closed: self.theta_closed(),
            pass: self.pass(),
        };
        serde_json::to_string(&doc).expect("plain data serializes")
    }
}

/// Checks `L_X Ω = 0` and `d(X⌋Ω) = 0` exactly for `X = X_H^k`.
pub fn liouville_check<T: Scalar>(h: &Polynomial<T>, k: usize) -> Result<LiouvilleCertificate<T>> {
    let x = hamiltonian_kvector(h, k)?;
    Ok(LiouvilleCertificate { n: h.coords().dim(), k, hamiltonian: h.clone(), residuals: liouville_residuals(&x)? })
}

/// `(t, x0, …)`: the system with a time coordinate in front.
pub fn with_time(coords: &Arc<Coords>) -> Result<Arc<Coords>> {
    coords.prepend("t")
}

fn lift<T: Scalar>(p: &Polynomial<T>, extended: &Arc<Coords>) -> Polynomial<T> {
    p.relabel(extended, |i| i + 1).expect("extended system is one larger")
}

/// `θ_i = dx_i - {H, x_i} dt` on `(t, x0, …)`.
pub fn cartan_distribution<T: Scalar>(h: &Polynomial<T>) -> Result<Vec<KForm<T>>> {
    let ext = with_time(h.coords())?;
    let dt = KForm::dx(&ext, 0)?;
    Polynomial::vars(h.coords())
        .iter()
        .enumerate()
        .map(|(i, xi)| {
            let rate = lift(&poisson_bracket(h, xi)?, &ext);
            KForm::dx(&ext, i + 1)?.try_sub(&dt.mul_poly(&rate)?)
        })
        .collect()
}

/// `∂t + Σ {H, x_i} ∂_i`, the field annihilating every `θ_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ContactField<T: Scalar> {
    pub base: KVector<T>,
    pub hamiltonian: Polynomial<T>,
}

pub fn contact_field<T: Scalar>(h: &Polynomial<T>) -> Result<ContactField<T>> {
    let ext = with_time(h.coords())?;
    let mut terms = vec![(vec![0], Polynomial::one(&ext))];
    for (i, xi) in Polynomial::vars(h.coords()).iter().enumerate() {
        terms.push((vec![i + 1], lift(&poisson_bracket(h, xi)?, &ext)));
    }
    Ok(ContactField { base: KVector::from_terms(&ext, 1, terms)?, hamiltonian: h.clone() })
}

/// Volume of the Cartan forms for a planar Hamiltonian system, with a
/// primitive and the comparison against `Ω - (X⌋Ω)∧dt`.
#[derive(Clone, Debug, PartialEq)]
pub struct PoincareInvariant<T: Scalar> {
    /// `θ0 ∧ θ1` on `(t, x0, x1)`.
    pub volume: KForm<T>,
    /// Homotopy primitive of `volume`; `d(primitive) = volume`.
    pub primitive: KForm<T>,
    /// `Ω - (X_H^1 ⌋ Ω) ∧ dt` on `(t, x0, x1)`.
    pub reference: KForm<T>,
}

impl<T: Scalar> PoincareInvariant<T> {
    /// `volume - reference`; zero exactly when the two constructions agree.
    pub fn discrepancy(&self) -> KForm<T> {
        &self.volume - &self.reference
    }
}

pub fn poincare_invariant<T: Scalar>(h: &Polynomial<T>) -> Result<PoincareInvariant<T>> {
    let coords = h.coords();
    if coords.dim() != 2 {
        return Err(Error::Invalid("the Poincaré invariant is built on two coordinates".into()));
    }
    let ext = with_time(coords)?;
    let theta = cartan_distribution(h)?;
    let volume = theta[0].wedge(&theta[1])?;
    let primitive = volume.homotopy()?;

    let x = hamiltonian_kvector(h, 1)?;
    let x_omega = contract(&x, &volume_form(coords))?.relabel(&ext, |i| i + 1)?;
    let omega = KForm::basis(&ext, &[1, 2])?;
    let reference = omega.try_sub(&x_omega.wedge(&KForm::dx(&ext, 0)?)?)?;
    Ok(PoincareInvariant { volume, primitive, reference })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Polynomial<Rational>;

    fn oscillator() -> Q {
        let c = Coords::indexed(2).unwrap();
        Q::parse("1/2*(x0^2+x1^2)", &c).unwrap()
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(4, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn ladder_top_and_bottom() {
        let c = Coords::indexed(3).unwrap();
        let h = Q::parse("x0*x1^2 - x2^3 + 2", &c).unwrap();
        assert_eq!(theta_ladder(&h, 2).unwrap(), KForm::differential(&h));
        let dh = KForm::differential(&h);
        let mut expected = KForm::zero(&c, 2);
        for i in 0..3 {
            expected = &expected + &dh.wedge(&KForm::dx(&c, i).unwrap()).unwrap();
        }
        assert_eq!(theta_ladder(&h, 1).unwrap(), expected);
        assert!(theta_ladder(&Q::constant(&c, Rational::from_integer(4.into())), 1).unwrap().is_zero());
        assert!(theta_ladder(&h, 0).is_err());
        assert!(theta_ladder(&h, 3).is_err());
    }

    #[test]
    fn oscillator_field() {
        let h = oscillator();
        let c = h.coords().clone();
        let expected = KVector::from_components(&[Q::parse("x1", &c).unwrap(), Q::parse("-x0", &c).unwrap()]).unwrap();
        assert_eq!(hamiltonian_kvector(&h, 1).unwrap(), expected);
    }

    #[test]
    fn three_dimensional_fields_match_closed_forms() {
        let c = Coords::indexed(3).unwrap();
        let h = Q::parse("x0^2*x2 + 3*x1 - x0*x1*x2", &c).unwrap();
        let g = h.gradient();
        let x1 = hamiltonian_kvector(&h, 1).unwrap();
        let expected = KVector::from_components(&[&g[1] - &g[2], &g[2] - &g[0], &g[0] - &g[1]]).unwrap();
        assert_eq!(x1, expected);
        let x2 = hamiltonian_kvector(&h, 2).unwrap();
        let expected = KVector::from_terms(
            &c,
            2,
            [(vec![1, 2], g[0].clone()), (vec![2, 0], g[1].clone()), (vec![0, 1], g[2].clone())],
        )
        .unwrap();
        assert_eq!(x2, expected);
    }

    #[test]
    fn brackets() {
        let h = oscillator();
        let c = h.coords().clone();
        let x0 = Q::var(&c, 0).unwrap();
        assert_eq!(poisson_bracket(&h, &x0).unwrap(), Q::var(&c, 1).unwrap());
        assert!(poisson_bracket(&h, &h).unwrap().is_zero());
        assert!(poisson_bracket(&h, &Q::one(&c)).unwrap().is_zero());
        assert!(nambu_bracket(&h, &[x0.clone(), x0.clone()]).is_err());
        assert!(nambu_bracket(&h, &[]).is_err());

        let c3 = Coords::new(&["x", "y", "z"]).unwrap();
        let i1 = Q::parse("x+y+z", &c3).unwrap();
        let i2 = Q::parse("3/2*(x^2+y^2+z^2)", &c3).unwrap();
        let x = Q::var(&c3, 0).unwrap();
        assert_eq!(nambu_bracket(&i1, &[i2, x]).unwrap(), Q::parse("3*(z-y)", &c3).unwrap());
    }

    #[test]
    fn liouville_detects_non_hamiltonian_fields() {
        let c = Coords::indexed(3).unwrap();
        let x = KVector::from_terms(&c, 2, [(vec![1, 2], Q::var(&c, 1).unwrap())]).unwrap();
        let r = liouville_residuals(&x).unwrap();
        assert!(!r.pass());
        let expected = -KForm::basis(&c, &[0, 1]).unwrap();
        assert_eq!(r.theta_differential, expected);
        assert_eq!(r.lie, expected);

        // x0·∂1∧∂2 contracts to x0 dx0, which is closed
        let closed = KVector::from_terms(&c, 2, [(vec![1, 2], Q::var(&c, 0).unwrap())]).unwrap();
        assert!(liouville_residuals(&closed).unwrap().pass());
        assert!(liouville_residuals(&KVector::<Rational>::zero(&c, 1)).unwrap().pass());
    }

    #[test]
    fn certificate_json_shape() {
        let c = Coords::indexed(3).unwrap();
        let h = Q::parse("x0*x1*x2", &c).unwrap();
        let cert = liouville_check(&h, 2).unwrap();
        assert!(cert.pass());
        assert_eq!(
            cert.to_json(),
            r#"{"n":3,"k":2,"H":"x0*x1*x2","lie_residual":{"coords":["x0","x1","x2"],"grade":2,"terms":[]},"theta_closed":true,"pass":true}"#
        );
    }

    #[test]
    fn cartan_forms_of_oscillator() {
        let h = oscillator();
        let theta = cartan_distribution(&h).unwrap();
        let ext = theta[0].coords().clone();
        let p = |s: &str| Q::parse(s, &ext).unwrap();
        let dt = KForm::dx(&ext, 0).unwrap();
        assert_eq!(theta[0], &KForm::dx(&ext, 1).unwrap() - &dt.mul_poly(&p("x1")).unwrap());
        assert_eq!(theta[1], &KForm::dx(&ext, 2).unwrap() + &dt.mul_poly(&p("x0")).unwrap());

        let cf = contact_field(&h).unwrap();
        let expected = KVector::from_components(&[p("1"), p("x1"), p("-x0")]).unwrap();
        assert_eq!(cf.base, expected);
        for th in &theta {
            assert!(contract(&cf.base, th).unwrap().to_scalar().unwrap().is_zero());
        }
    }

    #[test]
    fn constant_hamiltonian_gives_trivial_contact_structure() {
        let c = Coords::indexed(3).unwrap();
        let h = Q::constant(&c, Rational::from_integer(7.into()));
        let theta = cartan_distribution(&h).unwrap();
        let ext = theta[0].coords().clone();
        for (i, th) in theta.iter().enumerate() {
            assert_eq!(*th, KForm::dx(&ext, i + 1).unwrap());
        }
        assert_eq!(contact_field(&h).unwrap().base, KVector::partial(&ext, 0).unwrap());
    }

    #[test]
    fn cartan_volume_of_oscillator() {
        // θ0∧θ1 = (dx0 - x1 dt)∧(dx1 + x0 dt) = dx0∧dx1 + dH∧dt
        let inv = poincare_invariant(&oscillator()).unwrap();
        let ext = inv.volume.coords().clone();
        let dh = KForm::differential(&Q::parse("1/2*(x0^2+x1^2)", &ext).unwrap());
        let omega = KForm::basis(&ext, &[1, 2]).unwrap();
        let dt = KForm::dx(&ext, 0).unwrap();
        assert_eq!(inv.volume, &omega + &dh.wedge(&dt).unwrap());
        assert_eq!(inv.reference, &omega - &dh.wedge(&dt).unwrap());
        assert_eq!(inv.discrepancy(), dh.wedge(&dt).unwrap().scale(&Rational::from_integer(2.into())));
        assert_eq!(inv.primitive.d(), inv.volume);
    }
}
