//! Acceptance suite. Prints one `criterion N: PASS|FAIL` line per criterion
//! and exits nonzero when any criterion fails.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use nambu_core::exterior::{contract, volume_form};
use nambu_core::flows::{
    directional_derivative, flow_field, integrate_field, lax_residual, rigid_body, vector_hamiltonian,
};
use nambu_core::hamfields::{
    cartan_distribution, hamiltonian_kvector, liouville_check, nambu_bracket, poisson_bracket, with_time, NambuSystem,
};
use nambu_core::random::{random_graded, random_polynomial};
use nambu_core::{rational, Coords, QForm, QPoly, QVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

/// Collects named sub-checks; the criterion passes iff all of them do.
#[derive(Default)]
struct Checks {
    failed: Vec<String>,
    count: usize,
}

impl Checks {
    fn check(&mut self, name: &str, ok: bool) {
        self.count += 1;
        if !ok {
            self.failed.push(name.to_owned());
        }
    }

    fn outcome(self, extra: &str) -> Outcome {
        let pass = self.failed.is_empty();
        let mut detail = format!("{}/{} checks", self.count - self.failed.len(), self.count);
        if !pass {
            detail += &format!("; failed: {}", self.failed.join(", "));
        }
        if !extra.is_empty() {
            detail += &format!("; {extra}");
        }
        Outcome::new(pass, detail)
    }
}

fn parse(text: &str, c: &Arc<Coords>) -> QPoly {
    QPoly::parse(text, c).unwrap()
}

fn d(p: &QPoly, i: usize) -> QPoly {
    p.partial(i).unwrap()
}

fn liouville_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut total, mut passed) = (0, 0);
    for n in 2..=6 {
        let c = Coords::indexed(n).unwrap();
        for k in 1..n {
            for _ in 0..20 {
                let h = random_polynomial(&mut rng, &c, 3, 6);
                let cert = liouville_check(&h, k).unwrap();
                total += 1;
                passed += usize::from(cert.residuals.lie.is_zero() && cert.residuals.theta_differential.is_zero());
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        passed == total && elapsed < Duration::from_secs(60),
        format!("{passed}/{total} certificates with zero residuals in {:.2} s (limit 60 s)", elapsed.as_secs_f64()),
    )
}

fn oscillator() -> Outcome {
    let c = Coords::indexed(2).unwrap();
    let h = parse("1/2*(x0^2 + x1^2)", &c);
    let mut checks = Checks::default();

    let x = hamiltonian_kvector(&h, 1).unwrap();
    let expected = &QVector::partial(&c, 0).unwrap().mul_poly(&parse("x1", &c)).unwrap()
        - &QVector::partial(&c, 1).unwrap().mul_poly(&parse("x0", &c)).unwrap();
    checks.check("field", x == expected);
    checks.check("contraction equals dH", contract(&x, &volume_form(&c)).unwrap() == QForm::differential(&h));

    let e = with_time(&c).unwrap();
    let form1 = |text: &str| -> QForm {
        let mut sum = QForm::zero(&e, 1);
        for (i, coef) in text.split(';').enumerate() {
            sum = &sum + &QForm::dx(&e, i).unwrap().mul_poly(&parse(coef, &e)).unwrap();
        }
        sum
    };
    let thetas = cartan_distribution(&h).unwrap();
    let expected_thetas = [form1("-x1;1;0"), form1("x0;0;1")];
    checks.check("theta forms", thetas == expected_thetas);

    let volume = thetas[0].wedge(&thetas[1]).unwrap();
    let omega = QForm::dx(&e, 1).unwrap().wedge(&QForm::dx(&e, 2).unwrap()).unwrap();
    let h_ext = parse("1/2*(x0^2 + x1^2)", &e);
    let lifted = x.relabel(&e, |i| i + 1).unwrap();
    let reference = &omega - &contract(&lifted, &omega).unwrap().wedge(&QForm::dx(&e, 0).unwrap()).unwrap();
    checks.check("theta0 wedge theta1 equals omega - (X contract omega) wedge dt", volume == reference);

    let primitive = &(&QForm::dx(&e, 2).unwrap().mul_poly(&parse("1/2*x0", &e)).unwrap()
        - &QForm::dx(&e, 1).unwrap().mul_poly(&parse("1/2*x1", &e)).unwrap())
        - &QForm::dx(&e, 0).unwrap().mul_poly(&h_ext).unwrap();
    let di = primitive.d();
    checks.check("d(i) equals theta0 wedge theta1", di == volume);

    let extra = format!("theta0∧theta1 = {volume}; omega - (X⌋omega)∧dt = {reference}; d(i) = {di}");
    checks.outcome(&extra)
}

fn three_dimensional_formulas() -> Outcome {
    let c = Coords::indexed(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checks = Checks::default();
    let basis2 = |i: usize, j: usize| QVector::basis(&c, &[i, j]).unwrap();
    let basis1 = |i: usize| QVector::partial(&c, i).unwrap();
    let two = rational(2, 1);
    for trial in 0..20 {
        let [h, f, g] = [(); 3].map(|_| random_polynomial(&mut rng, &c, 3, 6));
        let (h0, h1, h2) = (d(&h, 0), d(&h, 1), d(&h, 2));
        let (f0, f1, f2) = (d(&f, 0), d(&f, 1), d(&f, 2));
        let (g0, g1, g2) = (d(&g, 0), d(&g, 1), d(&g, 2));

        let x1 = &(&basis1(0).mul_poly(&(&h1 - &h2)).unwrap() + &basis1(1).mul_poly(&(&h2 - &h0)).unwrap())
            + &basis1(2).mul_poly(&(&h0 - &h1)).unwrap();
        checks.check(&format!("X^1 #{trial}"), hamiltonian_kvector(&h, 1).unwrap() == x1);

        let printed_x2 = (&(&basis2(1, 2).mul_poly(&h0).unwrap() + &basis2(2, 0).mul_poly(&h1).unwrap())
            + &basis2(0, 1).mul_poly(&h2).unwrap())
            .scale(&rational(1, 2));
        checks.check(&format!("X^2 #{trial}"), hamiltonian_kvector(&h, 2).unwrap() == printed_x2.scale(&two));

        let pb = &(&(&(&h1 - &h2) * &g0) + &(&(&h2 - &h0) * &g1)) + &(&(&h0 - &h1) * &g2);
        checks.check(&format!("two-point bracket #{trial}"), poisson_bracket(&h, &g).unwrap() == pb);

        let printed_triple = (&(&(&h0 * &(&(&f1 * &g2) - &(&f2 * &g1))) + &(&h1 * &(&(&f2 * &g0) - &(&f0 * &g2))))
            + &(&h2 * &(&(&f0 * &g1) - &(&f1 * &g0))))
            .scale(&rational(1, 2));
        let triple = nambu_bracket(&h, &[f.clone(), g.clone()]).unwrap();
        checks.check(&format!("triple bracket #{trial}"), triple == printed_triple.scale(&two));

        let jacobian = &(&(&h0 * &(&(&f1 * &g2) - &(&f2 * &g1))) - &(&h1 * &(&(&f0 * &g2) - &(&f2 * &g0))))
            + &(&h2 * &(&(&f0 * &g1) - &(&f1 * &g0)));
        checks.check(&format!("jacobian #{trial}"), triple == jacobian);
    }
    checks.outcome("20 random cubic triples; printed ½ prefactors doubled")
}

fn homotopy_potential() -> Outcome {
    let c = rigid_body::coords();
    let omega = rigid_body::flux_form(&c);
    let nu = omega.homotopy().unwrap();
    let h = ["1/3*(y^2 + z^2 - x*(y + z))", "1/3*(z^2 + x^2 - y*(z + x))", "1/3*(x^2 + y^2 - z*(x + y))"]
        .map(|s| parse(s, &c));
    let mut checks = Checks::default();
    checks.check("K(omega) components", (0..3).all(|i| nu.coefficient(&[i]) == h[i]) && nu.len() == 3);
    checks.check("dK(omega) = omega", nu.d() == omega);
    checks.check("vector potential", vector_hamiltonian(&rigid_body::field(&c)).unwrap() == h);
    checks.outcome(&format!("K(omega) = {nu}"))
}

fn lax_pair() -> Outcome {
    let c = rigid_body::coords();
    let pair = rigid_body::lax_pair(&c);
    let field = rigid_body::field(&c);
    let [i1, i2] = rigid_body::invariants(&c);
    let mut checks = Checks::default();
    let residual = lax_residual(&pair, &field).unwrap();
    checks.check("residual", residual.iter().flatten().all(QPoly::is_zero));

    // independent entrywise expansion of L̇ - (ML - LM)
    let (l, m) = (pair.l(), pair.m());
    let mut independent = true;
    for i in 0..3 {
        for j in 0..3 {
            let mut commutator = QPoly::zero(&c);
            for s in 0..3 {
                commutator = &commutator + &(&l[s][j].scale(&m[i][s]) - &l[i][s].scale(&m[s][j]));
            }
            let rate = (0..3).fold(QPoly::zero(&c), |acc, v| &acc + &(&d(&l[i][j], v) * &field[v]));
            independent &= (&rate - &commutator).is_zero();
        }
    }
    checks.check("entrywise expansion", independent);
    checks.check("tr L = I1", pair.trace_power(1) == i1);
    checks.check("½ tr L² = I2", pair.trace_power(2).scale(&rational(1, 2)) == i2);
    checks.outcome("")
}

fn bracket_dynamics() -> Outcome {
    let c = rigid_body::coords();
    let field = rigid_body::field(&c);
    let [i1, i2] = rigid_body::invariants(&c);
    let mut checks = Checks::default();
    for (i, xi) in QPoly::vars(&c).into_iter().enumerate() {
        let b = nambu_bracket(&i1, &[i2.clone(), xi]).unwrap();
        checks.check(&format!("component {i}"), b == field[i].scale(&rational(-3, 1)));
    }
    let bracket_field = flow_field(&NambuSystem::new(vec![i1.clone(), i2.clone()]).unwrap()).unwrap();
    for (name, f) in [("Dx", &field), ("bracket field", &bracket_field)] {
        for (j, inv) in [&i1, &i2].into_iter().enumerate() {
            checks.check(&format!("{name} conserves I{}", j + 1), directional_derivative(inv, f).unwrap().is_zero());
        }
    }
    checks.outcome("{I1, I2, x_i} = -3 (Dx)_i")
}

fn homotopy_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut ok = 0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let grade = rng.gen_range(1..n);
        let c = Coords::indexed(n).unwrap();
        let a: QForm = random_graded(&mut rng, &c, grade, 3, 4);
        let lhs = &a.homotopy().unwrap().d() + &a.d().homotopy().unwrap();
        ok += usize::from(lhs == a);
    }
    Outcome::new(ok == 200, format!("{ok}/200 random forms"))
}

fn numeric_conservation() -> Outcome {
    let start = Instant::now();
    let c = rigid_body::coords();
    let field = rigid_body::field(&c);
    let invariants = rigid_body::invariants(&c);
    let x0 = [1.0, 0.0, 0.0];
    let run = |step: f64| integrate_field(&field, &invariants, &x0, 10.0, step).unwrap().drift;
    let coarse = run(1e-3);
    let fine = run(5e-4);
    let elapsed = start.elapsed();
    let max = |v: &[f64]| v.iter().copied().fold(0.0, f64::max);
    let bounded = coarse.iter().all(|&dr| dr <= 1e-8);
    let ratio = max(&coarse) / max(&fine);
    let order = (12.0..=20.0).contains(&ratio);
    let fast = elapsed < Duration::from_secs(5);
    let mut checks = Checks::default();
    checks.check("drift ≤ 1e-8", bounded);
    checks.check("halving ratio in [12, 20]", order);
    checks.check("runtime < 5 s", fast);
    checks.outcome(&format!(
        "drift(h=1e-3) = [{:.3e}, {:.3e}], drift(h=5e-4) = [{:.3e}, {:.3e}], ratio {ratio:.2}, {:.2} s",
        coarse[0],
        coarse[1],
        fine[0],
        fine[1],
        elapsed.as_secs_f64()
    ))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_nambu"))
            .args(["verify", "--dim", "4", "--grade", "2", "--random", "20", "--degree", "3", "--seed", "11"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let lines = a.stdout.iter().filter(|&&ch| ch == b'\n').count();
    Outcome::new(
        a.status.success() && a.stdout == b.stdout && lines == 20,
        format!("{lines} certificates, {} bytes, identical: {}", a.stdout.len(), a.stdout == b.stdout),
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, liouville_suite),
        (2, oscillator),
        (3, three_dimensional_formulas),
        (4, homotopy_potential),
        (5, lax_pair),
        (6, bracket_dynamics),
        (7, homotopy_identity),
        (8, numeric_conservation),
        (9, determinism),
    ];
    let mut failures = 0;
    for (id, run) in criteria {
        let outcome = run();
        failures += usize::from(!outcome.pass);
        println!("criterion {id}: {} ({})", if outcome.pass { "PASS" } else { "FAIL" }, outcome.detail);
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
