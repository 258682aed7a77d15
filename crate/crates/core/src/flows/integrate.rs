use std::io::{self, Write};

use num_traits::Float;
use thiserror::Error;

use super::flow_field;
use crate::error::Error;
use crate::hamfields::NambuSystem;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Initial-value problem for the flow of a [`NambuSystem`].
#[derive(Clone, Debug)]
pub struct FlowSpec<T: Scalar, F> {
    pub system: NambuSystem<T>,
    pub initial_state: Vec<F>,
    pub t_end: F,
    pub step: F,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sample<F> {
    pub t: F,
    pub state: Vec<F>,
    pub invariants: Vec<F>,
}

/// Samples at every step plus the max-norm drift `max_t |I(t) - I(0)|` of
/// each monitored invariant.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory<F> {
    pub samples: Vec<Sample<F>>,
    pub drift: Vec<F>,
}

#[derive(Debug, Error)]
pub enum IntegrationError<F: Scalar> {
    #[error(transparent)]
    Spec(#[from] Error),
    /// The state stopped being finite; `partial` ends at the last good sample.
    #[error("state became non-finite after t = {}", partial.samples.last().map(|s| s.t.clone()).unwrap_or_else(F::zero))]
    NonFinite { partial: Trajectory<F> },
}

impl<F: Float + Scalar> Trajectory<F> {
    pub fn last(&self) -> &Sample<F> {
        self.samples.last().expect("a trajectory has at least the initial sample")
    }

    /// CSV with header `t,x0,…,x{n-1},I1,…,Im`, one row per sample, and a
    /// `# drift Ij = …` footer line per invariant. Values carry 17
    /// significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        let first = &self.samples[0];
        let mut header = vec!["t".to_owned()];
        header.extend((0..first.state.len()).map(|i| format!("x{i}")));
        header.extend((1..=first.invariants.len()).map(|j| format!("I{j}")));
        writeln!(out, "{}", header.join(","))?;
        for s in &self.samples {
            let row: Vec<String> = std::iter::once(s.t)
                .chain(s.state.iter().copied())
                .chain(s.invariants.iter().copied())
                .map(fmt17)
                .collect();
            writeln!(out, "{}", row.join(","))?;
        }
        for (j, d) in self.drift.iter().enumerate() {
            writeln!(out, "# drift I{} = {}", j + 1, fmt17(*d))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }
}

fn fmt17<F: Float + Scalar>(v: F) -> String {
    format!("{:.16e}", v.to_f64().unwrap_or(f64::NAN))
}

/// Integrates the flow of `spec.system`, monitoring all its Hamiltonians.
pub fn integrate<T: Scalar, F: Float + Scalar>(spec: &FlowSpec<T, F>) -> Result<Trajectory<F>, IntegrationError<F>> {
    let field = flow_field(&spec.system)?;
    integrate_field(&field, spec.system.hamiltonians(), &spec.initial_state, spec.t_end, spec.step)
}

/// Classical fourth-order Runge–Kutta with a fixed step on an explicit
/// polynomial field. The last step is shortened to land on `t_end`.
pub fn integrate_field<T: Scalar, F: Float + Scalar>(
    field: &[Polynomial<T>],
    invariants: &[Polynomial<T>],
    initial_state: &[F],
    t_end: F,
    step: F,
) -> Result<Trajectory<F>, IntegrationError<F>> {
    let n = initial_state.len();
    let coords = field.first().ok_or_else(|| Error::Invalid("empty vector field".into()))?.coords();
    if field.len() != coords.dim() || n != coords.dim() {
        return Err(Error::DimensionMismatch { expected: coords.dim(), got: n }.into());
    }
    if !(t_end.is_finite() && t_end >= F::zero()) {
        return Err(Error::Invalid("t_end must be finite and non-negative".into()).into());
    }
    if !(step.is_finite() && step > F::zero()) {
        return Err(Error::Invalid("step must be finite and positive".into()).into());
    }
    if t_end > F::zero() && step >= t_end {
        return Err(Error::Invalid("step must be smaller than t_end".into()).into());
    }
    if initial_state.iter().any(|v| !v.is_finite()) {
        return Err(Error::Invalid("initial state must be finite".into()).into());
    }

    let rhs: Vec<Polynomial<F>> = field.iter().map(Polynomial::cast).collect();
    let monitors: Vec<Polynomial<F>> = invariants.iter().map(Polynomial::cast).collect();
    let eval = |p: &Polynomial<F>, x: &[F]| p.eval(x).expect("state length checked");
    let measure = |x: &[F]| monitors.iter().map(|m| eval(m, x)).collect::<Vec<F>>();
    let velocity = |x: &[F]| rhs.iter().map(|f| eval(f, x)).collect::<Vec<F>>();

    let ratio = t_end / step;
    let steps = (ratio - ratio * F::epsilon() * F::from_int(64)).ceil().to_usize().unwrap_or(0);

    let mut state = initial_state.to_vec();
    let initial = measure(&state);
    let mut drift = vec![F::zero(); initial.len()];
    let mut samples = vec![Sample { t: F::zero(), state: state.clone(), invariants: initial.clone() }];
    let two = F::from_int(2);
    let six = F::from_int(6);
    let axpy = |x: &[F], a: F, k: &[F]| x.iter().zip(k).map(|(&xi, &ki)| xi + a * ki).collect::<Vec<F>>();

    for i in 1..=steps {
        let t_prev = samples.last().expect("nonempty").t;
        let t = if i == steps { t_end } else { step * F::from_usize(i).expect("step count fits") };
        let h = t - t_prev;
        let k1 = velocity(&state);
        let k2 = velocity(&axpy(&state, h / two, &k1));
        let k3 = velocity(&axpy(&state, h / two, &k2));
        let k4 = velocity(&axpy(&state, h, &k3));
        let next: Vec<F> = (0..n).map(|j| state[j] + h / six * (k1[j] + two * k2[j] + two * k3[j] + k4[j])).collect();
        if next.iter().any(|v| !v.is_finite()) {
            return Err(IntegrationError::NonFinite { partial: Trajectory { samples, drift } });
        }
        state = next;
        let values = measure(&state);
        for (d, (v, v0)) in drift.iter_mut().zip(values.iter().zip(&initial)) {
            *d = Float::max(*d, Float::abs(*v - *v0));
        }
        samples.push(Sample { t, state: state.clone(), invariants: values });
    }
    Ok(Trajectory { samples, drift })
}
