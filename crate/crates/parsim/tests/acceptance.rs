//! Acceptance suite: one pass/fail line per criterion, run in order by a
//! single test so the full scorecard always prints together.

use std::time::Instant;

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use parsim::bounds::{burn_in_time, covariate_covariance, pe_check, realization_bound, theta_error_bound};
use parsim::estimate::{estimate_classical_projection, estimate_parsim_bank, true_theta};
use parsim::hankel::{build_hankels, build_regressor_bank, empirical_covariance};
use parsim::harness::{
    run_sweep, write_sweep, EstimatorChoice, ExperimentConfig, ModelSpec, PastHorizonRule,
};
use parsim::model::{Channel, StateSpaceModel};
use parsim::realize::{extract_system, procrustes_align, spectral_norm, svd_realize};

struct Scorecard {
    failures: Vec<String>,
}

impl Scorecard {
    fn record(&mut self, id: usize, name: &str, started: Instant, result: Result<String, String>) {
        let secs = started.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {id} ({name}): PASS [{secs:.1}s] {detail}"),
            Err(reason) => {
                println!("criterion {id} ({name}): FAIL [{secs:.1}s] {reason}");
                self.failures.push(format!("criterion {id}: {reason}"));
            }
        }
    }
}

fn random_two_state(seed: u64) -> StateSpaceModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut draw = || -> f64 {
            let g: f64 = rng.sample(StandardNormal);
            0.4 * g
        };
        let a = DMatrix::from_fn(2, 2, |_, _| draw());
        let b = DMatrix::from_fn(2, 1, |_, _| draw() + 0.5);
        let c = DMatrix::from_fn(1, 2, |_, _| draw() + 0.5);
        let k = DMatrix::from_fn(2, 1, |_, _| 0.2 * draw());
        let m = StateSpaceModel::new(a, b, c, k, 0.1, 1.0).unwrap();
        if m.validate(false).passed() {
            return m;
        }
    }
}

/// Exact recovery on the noiseless zero-bias fixture.
///
/// This criterion cannot pass and is reported honestly. With e = 0 the
/// S1 output obeys y_{k+1} = 0.5 y_k + u_k exactly, so one regressor row
/// is a linear combination of two others and the OLS problem has an
/// affine solution set; any K' gives byte-identical noiseless data, so
/// no estimator can single out the true theta (the minimum-norm solution
/// differs from it by |theta.w|/|w| = 1/3 on row 1). The solver reports
/// the rank deficiency as an excitation failure instead of silently
/// picking a representative.
fn criterion_1() -> Result<String, String> {
    let m = StateSpaceModel::s1();
    let (p, f, n) = (2usize, 3usize, 2000usize);
    let t = m
        .simulate(p + f + n - 1, 1, true)
        .map_err(|e| format!("simulation failed: {e}"))?;
    let h = build_hankels(&t, p, f, n).map_err(|e| format!("hankel assembly failed: {e}"))?;
    let bank = build_regressor_bank(&h);
    let est = estimate_parsim_bank(&bank).map_err(|e| {
        format!(
            "unattainable: noiseless data is exactly collinear \
             (y_k+1 = 0.5 y_k + u_k), theta is not identifiable and the \
             solver raises: {e}"
        )
    })?;
    for (idx, theta) in est.thetas.iter().enumerate() {
        let truth = true_theta(&m, p, f, idx + 1).unwrap();
        let rel = (theta - &truth).norm() / truth.norm();
        if rel > 1e-6 {
            return Err(format!("row {} relative error {rel:.3e}", idx + 1));
        }
    }
    let truth_gl = m.extended_observability(f).unwrap() * m.extended_controllability(p).unwrap();
    let rel = (&est.stacked_gamma_lp - &truth_gl).norm() / truth_gl.norm();
    if rel > 1e-6 {
        return Err(format!("Gamma_f L_p relative error {rel:.3e}"));
    }
    let classical =
        estimate_classical_projection(&h).map_err(|e| format!("classical estimator: {e}"))?;
    let rel = (&classical - &truth_gl).norm() / truth_gl.norm();
    if rel > 1e-6 {
        return Err(format!("classical relative error {rel:.3e}"));
    }
    Ok("noiseless recovery within 1e-6".into())
}

/// Stable solver matches the normal-equations oracle on noisy data.
fn criterion_2() -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for instance in 0..50u64 {
        let m = random_two_state(1000 + instance);
        let (p, f, n) = (2usize, 3usize, 300usize);
        let t = m.simulate(p + f + n - 1, instance, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let bank = build_regressor_bank(&h);
        let est =
            estimate_parsim_bank(&bank).map_err(|e| format!("instance {instance}: {e}"))?;
        for prob in &bank.problems {
            let z = &prob.regressor;
            let gram = z * z.transpose();
            let oracle = &prob.target
                * z.transpose()
                * gram
                    .try_inverse()
                    .ok_or_else(|| format!("instance {instance}: singular gram"))?;
            let rel = (&est.thetas[prob.i - 1] - &oracle).norm() / oracle.norm();
            worst = worst.max(rel);
            if rel > 1e-8 {
                return Err(format!(
                    "instance {instance} row {} deviates from oracle by {rel:.3e}",
                    prob.i
                ));
            }
        }
    }
    Ok(format!("50 instances, worst oracle deviation {worst:.1e}"))
}

/// O(1/sqrt(N)) convergence of the Monte Carlo medians.
fn criterion_3() -> Result<String, String> {
    let model = StateSpaceModel::s1().with_sigma_e(0.3);
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cfg = ExperimentConfig {
        model: ModelSpec::Inline(model.to_json()),
        f: 5,
        p_rule: PastHorizonRule::Fixed { p: 2 },
        n_grid: vec![250, 500, 1000, 2000, 4000, 8000],
        trials: 50,
        delta: 0.05,
        base_seed: 7,
        c: 1.0,
        c0: 1.0,
        estimator: EstimatorChoice::Parsim,
        output_dir: dir.path().to_path_buf(),
        noiseless: false,
    };
    let result = run_sweep(&cfg).map_err(|e| format!("sweep failed: {e}"))?;
    let s = &result.summary;
    let theta = s
        .slope_err_theta_max
        .as_ref()
        .ok_or("no theta slope fitted")?
        .slope;
    let a = s.slope_err_a.as_ref().ok_or("no eps_A slope fitted")?.slope;
    let c = s.slope_err_c.as_ref().ok_or("no eps_C slope fitted")?.slope;
    if !(-0.65..=-0.35).contains(&theta) {
        return Err(format!("theta slope {theta:.3} outside [-0.65, -0.35]"));
    }
    for (label, slope) in [("eps_A", a), ("eps_C", c)] {
        if !(-0.75..=-0.25).contains(&slope) {
            return Err(format!("{label} slope {slope:.3} outside [-0.75, -0.25]"));
        }
    }
    Ok(format!(
        "slopes theta {theta:.3}, eps_A {a:.3}, eps_C {c:.3}"
    ))
}

/// Extended-model and state-reconstruction identities on random systems.
fn criterion_4() -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for instance in 0..20u64 {
        let m = random_two_state(2000 + instance);
        let (p, f, n) = (2usize, 3usize, 60usize);
        let t = m.simulate(p + f + n - 1, instance, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let gamma = m.extended_observability(f).unwrap();
        let gf = m.toeplitz_markov(f, Channel::Input).unwrap();
        let hf = m.toeplitz_markov(f, Channel::Noise).unwrap();
        let rhs = &gamma * &h.x_k + &gf * &h.u_f + &hf * &h.e_f;
        let rel = (&h.y_f - rhs).norm() / h.y_f.norm();
        worst = worst.max(rel);
        if rel > 1e-10 {
            return Err(format!("instance {instance}: future-data residual {rel:.3e}"));
        }
        let lp = m.extended_controllability(p).unwrap();
        let ac_p = m.a_closed().pow(p as u32);
        let rhs = &lp * &h.z_p + &ac_p * &h.x_kp;
        let rel = (&h.x_k - rhs).norm() / h.x_k.norm();
        worst = worst.max(rel);
        if rel > 1e-10 {
            return Err(format!(
                "instance {instance}: state-reconstruction residual {rel:.3e}"
            ));
        }
    }
    // nilpotent fixture: the truncation term is identically zero
    let s1 = StateSpaceModel::s1();
    let ac_p = s1.a_closed().pow(2);
    if ac_p.norm() != 0.0 {
        return Err("S1 closed-loop matrix is not nilpotent at p = 2".into());
    }
    Ok(format!("20 systems, worst residual {worst:.1e}"))
}

/// Stacking inequality ||M|| <= sqrt(f) max_i ||M_i||.
fn criterion_5() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..100 {
        let f = rng.random_range(1..=6);
        let rows = rng.random_range(1..=3);
        let cols = rng.random_range(1..=8);
        let m = DMatrix::from_fn(f * rows, cols, |_, _| rng.sample::<f64, _>(StandardNormal));
        let whole = spectral_norm(&m);
        let max_block = (0..f)
            .map(|i| spectral_norm(&m.rows(i * rows, rows).clone_owned()))
            .fold(0.0, f64::max);
        if whole > (f as f64).sqrt() * max_block * (1.0 + 1e-12) {
            return Err(format!(
                "case {case}: ||M|| = {whole:.6} > sqrt({f}) * {max_block:.6}"
            ));
        }
    }
    Ok("100 random block matrices satisfy the inequality".into())
}

/// SVD robustness radii under perturbations at half the allowed size.
fn criterion_6() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (p, f) = (3usize, 4usize);
    for instance in 0..100u64 {
        let m = random_two_state(3000 + instance);
        let nx = m.nx();
        let true_gl =
            m.extended_observability(f).unwrap() * m.extended_controllability(p).unwrap();
        let sigma_nx = true_gl.singular_values()[nx - 1];
        let raw = DMatrix::from_fn(true_gl.nrows(), true_gl.ncols(), |_, _| {
            rng.sample::<f64, _>(StandardNormal)
        });
        let pert = &raw * (sigma_nx / 8.0 / spectral_norm(&raw));
        let delta = spectral_norm(&pert);
        let noisy_gl = &true_gl + pert;

        let bar = svd_realize(&true_gl, nx).map_err(|e| format!("instance {instance}: {e}"))?;
        let hat = svd_realize(&noisy_gl, nx).map_err(|e| format!("instance {instance}: {e}"))?;
        let t = procrustes_align(&bar.gamma_f, &bar.l_p, &hat.gamma_f, &hat.l_p);

        let drop_last = |g: &DMatrix<f64>| g.rows(0, g.nrows() - m.ny()).clone_owned();
        let sigma_o = drop_last(&hat.gamma_f).singular_values()[nx - 1]
            .min(drop_last(&bar.gamma_f).singular_values()[nx - 1]);
        let radii = realization_bound(delta, &true_gl, nx, sigma_o)
            .map_err(|e| format!("instance {instance}: {e}"))?;

        let err_gamma = spectral_norm(&(&hat.gamma_f - &bar.gamma_f * &t));
        let err_l = spectral_norm(&(&hat.l_p - t.transpose() * &bar.l_p));
        if err_gamma.max(err_l) > radii.factor {
            return Err(format!(
                "instance {instance}: factor error {:.3e} exceeds radius {:.3e}",
                err_gamma.max(err_l),
                radii.factor
            ));
        }

        let sys_bar = extract_system(&bar, p, nx, m.nu(), m.ny()).unwrap();
        let sys_hat = extract_system(&hat, p, nx, m.nu(), m.ny()).unwrap();
        let err_c = spectral_norm(&(&sys_hat.c - &sys_bar.c * &t));
        let err_k = spectral_norm(&(&sys_hat.k - t.transpose() * &sys_bar.k));
        let err_b = spectral_norm(&(&sys_hat.b - t.transpose() * &sys_bar.b));
        if err_c.max(err_k).max(err_b) > radii.ckb {
            return Err(format!(
                "instance {instance}: extraction error {:.3e} exceeds radius {:.3e}",
                err_c.max(err_k).max(err_b),
                radii.ckb
            ));
        }
        let err_a = spectral_norm(&(&sys_hat.a - t.transpose() * &sys_bar.a * &t));
        if err_a > radii.a {
            return Err(format!(
                "instance {instance}: A error {err_a:.3e} exceeds radius {:.3e}",
                radii.a
            ));
        }
    }
    Ok("100/100 perturbed systems inside all three radii".into())
}

/// Excitation holds empirically past the burn-in time.
fn criterion_7() -> Result<String, String> {
    let m = StateSpaceModel::s1();
    let (p, f) = (2usize, 3usize);
    let mut detail = Vec::new();
    for i in [1usize, f] {
        let n_pe = burn_in_time(&m, p, i, 0.05, 1.0, 100_000_000)
            .map_err(|e| format!("burn-in search: {e}"))?;
        let tau = i + p;
        let sigma_tau = covariate_covariance(&m, p, i, tau);
        let mut holds = 0;
        for trial in 0..100u64 {
            let t = m
                .simulate(p + f + n_pe - 1, 40_000 + trial, false)
                .unwrap();
            let h = build_hankels(&t, p, f, n_pe).unwrap();
            let bank = build_regressor_bank(&h);
            let emp = empirical_covariance(&bank, i);
            if pe_check(&emp, &sigma_tau).holds {
                holds += 1;
            }
        }
        if holds < 95 {
            return Err(format!("row {i}: PE held in only {holds}/100 trials at N = {n_pe}"));
        }
        detail.push(format!("row {i}: {holds}/100 at N = {n_pe}"));
    }
    Ok(detail.join(", "))
}

/// Bound shape: nonincreasing in N, linear in log(1/delta).
fn criterion_8() -> Result<String, String> {
    let m = StateSpaceModel::s1();
    let (p, f, i) = (2usize, 3usize, 2usize);
    let grid = [250usize, 500, 1000, 2000, 4000, 8000];
    let radii: Vec<f64> = grid
        .iter()
        .map(|&n| {
            theta_error_bound(&m, p, f, i, n, 0.05, 1.0)
                .map(|b| b.theta_radius_sq)
                .map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    for w in radii.windows(2) {
        if w[1] > w[0] {
            return Err(format!("radius^2 increased along the grid: {w:?}"));
        }
    }
    // log(1/delta) points are equally spaced, so linearity means the
    // second difference of radius^2 vanishes
    let at = |delta: f64| {
        theta_error_bound(&m, p, f, i, 1000, delta, 1.0)
            .map(|b| b.theta_radius_sq)
            .map_err(|e| e.to_string())
    };
    let (r1, r2, r3) = (at(0.2)?, at(0.02)?, at(0.002)?);
    let second = (r3 - r2) - (r2 - r1);
    let rel = second.abs() / r2;
    if rel > 1e-9 {
        return Err(format!("second difference {rel:.3e} relative, not linear"));
    }
    Ok(format!(
        "radius^2 nonincreasing over N, log(1/delta) curvature {rel:.1e}"
    ))
}

/// Byte-identical sweep reruns.
fn criterion_9() -> Result<String, String> {
    let dirs = (tempfile::tempdir(), tempfile::tempdir());
    let (d1, d2) = (dirs.0.map_err(|e| e.to_string())?, dirs.1.map_err(|e| e.to_string())?);
    let mut cfg = ExperimentConfig {
        model: ModelSpec::Fixture("s1".into()),
        f: 3,
        p_rule: PastHorizonRule::Fixed { p: 2 },
        n_grid: vec![200, 400],
        trials: 8,
        delta: 0.05,
        base_seed: 99,
        c: 1.0,
        c0: 1.0,
        estimator: EstimatorChoice::Both,
        output_dir: d1.path().to_path_buf(),
        noiseless: false,
    };
    let first = run_sweep(&cfg).map_err(|e| e.to_string())?;
    write_sweep(&first, d1.path()).map_err(|e| e.to_string())?;
    cfg.output_dir = d2.path().to_path_buf();
    let second = run_sweep(&cfg).map_err(|e| e.to_string())?;
    write_sweep(&second, d2.path()).map_err(|e| e.to_string())?;
    let a = std::fs::read(d1.path().join("rows.csv")).map_err(|e| e.to_string())?;
    let b = std::fs::read(d2.path().join("rows.csv")).map_err(|e| e.to_string())?;
    if a != b {
        return Err("rows.csv differs between reruns".into());
    }
    Ok(format!("rows.csv identical over {} bytes", a.len()))
}

#[test]
fn acceptance_criteria() {
    let mut card = Scorecard { failures: Vec::new() };
    type Check = fn() -> Result<String, String>;
    let checks: [(usize, &str, Check); 9] = [
        (1, "exact recovery", criterion_1),
        (2, "OLS oracle equivalence", criterion_2),
        (3, "convergence rate", criterion_3),
        (4, "structural identities", criterion_4),
        (5, "stacking inequality", criterion_5),
        (6, "SVD robustness", criterion_6),
        (7, "persistence of excitation", criterion_7),
        (8, "bound shape", criterion_8),
        (9, "determinism", criterion_9),
    ];
    for (id, name, check) in checks {
        let started = Instant::now();
        card.record(id, name, started, check());
    }
    assert!(
        card.failures.is_empty(),
        "failed criteria:\n{}",
        card.failures.join("\n")
    );
}
