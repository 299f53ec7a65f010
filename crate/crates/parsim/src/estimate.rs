//! The PARSIM bank of causal ARX least-squares problems and the classical
//! projection estimator used as a baseline.
//!
//! ```
//! use parsim::model::StateSpaceModel;
//! use parsim::hankel::{build_hankels, build_regressor_bank};
//! use parsim::estimate::{estimate_classical_projection, estimate_parsim_bank, true_theta};
//!
//! let m = StateSpaceModel::s1();
//! let (p, f, n) = (2, 3, 4000);
//! let t = m.simulate(p + f + n - 1, 9, false).unwrap();
//! let h = build_hankels(&t, p, f, n).unwrap();
//! let est = estimate_parsim_bank(&build_regressor_bank(&h)).unwrap();
//! let truth = true_theta(&m, p, f, 1).unwrap();
//! assert!((&est.thetas[0] - &truth).norm() < 0.2);
//! let classical = estimate_classical_projection(&h).unwrap();
//! assert_eq!(classical.nrows(), f); // f * ny rows
//! ```

use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hankel::{HankelBundle, RegressorBank};

/// Result of solving the `f` ARX rows and stacking them.
#[derive(Debug, Clone)]
pub struct ArxBankEstimate {
    /// Per-row parameter matrices `theta_i = [Gamma_fi L_p | G_fi]`,
    /// `ny x d_i`.
    pub thetas: Vec<DMatrix<f64>>,
    /// Row-stacked `Gamma_f L_p` estimate, `f*ny x p*(ny + nu)`.
    pub stacked_gamma_lp: DMatrix<f64>,
    /// For each lag `j` in `0..f`: the per-row Markov estimates
    /// `(i, G_j from row i)` over rows `i > j`.
    pub markov_per_row: Vec<Vec<(usize, DMatrix<f64>)>>,
    /// Unweighted mean of the per-row estimates at each lag.
    pub markov_mean: Vec<DMatrix<f64>>,
    /// Smallest singular value of each regressor Gram `(1/N) Z Z^T`.
    pub gram_sigma_min: Vec<f64>,
}

/// Solves `min || Y - theta Z ||_F` through the SVD of the regressor.
/// Singular values below `max(d, N) * eps * sigma_max` are treated as a
/// persistence-of-excitation failure rather than truncated.
fn ols_solve(y: &DMatrix<f64>, z: &DMatrix<f64>, row: usize) -> Result<(DMatrix<f64>, f64)> {
    let (d, n) = (z.nrows(), z.ncols());
    let svd = z.clone().svd(true, true);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let sigma_min = svd.singular_values.iter().cloned().fold(f64::INFINITY, f64::min);
    let tol = d.max(n) as f64 * f64::EPSILON * sigma_max;
    if n < d || sigma_min <= tol {
        return Err(Error::ExcitationFailure {
            row,
            sigma_min: sigma_min * sigma_min / n as f64,
            tol: tol * tol / n as f64,
        });
    }
    let u = svd.u.as_ref().expect("requested U");
    let v_t = svd.v_t.as_ref().expect("requested V^T");
    // theta = Y Z^+ = (Y V) diag(1/s) U^T
    let yv = y * v_t.transpose();
    let mut scaled = yv;
    for (c, s) in svd.singular_values.iter().enumerate() {
        scaled.column_mut(c).scale_mut(1.0 / s);
    }
    let theta = scaled * u.transpose();
    Ok((theta, sigma_min * sigma_min / n as f64))
}

/// Estimates all `f` ARX rows by OLS and assembles the stacked
/// `Gamma_f L_p` estimate together with per-lag Markov parameters.
/// Rows are solved in parallel and merged by index.
pub fn estimate_parsim_bank(bank: &RegressorBank) -> Result<ArxBankEstimate> {
    let solved: Result<Vec<_>> = bank
        .problems
        .par_iter()
        .map(|prob| ols_solve(&prob.target, &prob.regressor, prob.i))
        .collect();
    let solved = solved?;
    let (p, f, nu, ny) = (bank.p, bank.f, bank.nu, bank.ny);
    let zp_cols = p * (ny + nu);
    let mut stacked = DMatrix::zeros(f * ny, zp_cols);
    let mut thetas = Vec::with_capacity(f);
    let mut grams = Vec::with_capacity(f);
    for (idx, (theta, gram_min)) in solved.into_iter().enumerate() {
        stacked
            .view_mut((idx * ny, 0), (ny, zp_cols))
            .copy_from(&theta.columns(0, zp_cols));
        thetas.push(theta);
        grams.push(gram_min);
    }
    // lag-j Markov blocks live at block position i-1-j inside G_fi
    let mut markov_per_row = Vec::with_capacity(f);
    let mut markov_mean = Vec::with_capacity(f);
    for j in 0..f {
        let mut rows = Vec::new();
        let mut sum = DMatrix::zeros(ny, nu);
        for i in (j + 1)..=f {
            let start = zp_cols + (i - 1 - j) * nu;
            let block = thetas[i - 1].columns(start, nu).clone_owned();
            sum += &block;
            rows.push((i, block));
        }
        sum /= rows.len() as f64;
        markov_per_row.push(rows);
        markov_mean.push(sum);
    }
    Ok(ArxBankEstimate {
        thetas,
        stacked_gamma_lp: stacked,
        markov_per_row,
        markov_mean,
        gram_sigma_min: grams,
    })
}

/// Classical projection estimate of `Gamma_f L_p`: future inputs are
/// projected out through the orthogonal factor of `U_f^T` instead of
/// forming the dense projector.
pub fn estimate_classical_projection(h: &HankelBundle) -> Result<DMatrix<f64>> {
    let n = h.n;
    let fu = h.u_f.nrows();
    if n < fu {
        return Err(Error::ExcitationFailure {
            row: 0,
            sigma_min: 0.0,
            tol: 0.0,
        });
    }
    let uft = h.u_f.transpose(); // N x f*nu
    let svd_u = uft.clone().svd(true, false);
    let sigma_max = svd_u.singular_values.iter().cloned().fold(0.0, f64::max);
    let sigma_min = svd_u
        .singular_values
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    let tol = n.max(fu) as f64 * f64::EPSILON * sigma_max;
    if sigma_min <= tol {
        return Err(Error::ExcitationFailure {
            row: 0,
            sigma_min: sigma_min * sigma_min / n as f64,
            tol: tol * tol / n as f64,
        });
    }
    let q = svd_u.u.expect("requested U"); // N x f*nu, orthonormal columns
    // M Pi^perp = M - (M Q) Q^T for row-shaped M
    let project = |m: &DMatrix<f64>| -> DMatrix<f64> { m - (m * &q) * q.transpose() };
    let yf_proj = project(&h.y_f);
    let zp_proj = project(&h.z_p);
    let lhs = &yf_proj * h.z_p.transpose();
    let gram = &zp_proj * h.z_p.transpose();
    let d = gram.nrows();
    let svd_g = gram.clone().svd(true, true);
    let g_max = svd_g.singular_values.iter().cloned().fold(0.0, f64::max);
    let g_min = svd_g
        .singular_values
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    let g_tol = d as f64 * f64::EPSILON * g_max;
    if g_min <= g_tol {
        return Err(Error::ExcitationFailure {
            row: 0,
            sigma_min: g_min / n as f64,
            tol: g_tol / n as f64,
        });
    }
    // lhs * gram^{-1} via the SVD of the (symmetric) gram
    let u = svd_g.u.as_ref().expect("requested U");
    let v_t = svd_g.v_t.as_ref().expect("requested V^T");
    let mut scaled = &lhs * v_t.transpose();
    for (c, s) in svd_g.singular_values.iter().enumerate() {
        scaled.column_mut(c).scale_mut(1.0 / s);
    }
    Ok(scaled * u.transpose())
}

/// True row parameter `theta_i = [Gamma_fi L_p | G_fi]` for comparison
/// against estimates.
pub fn true_theta(
    m: &crate::model::StateSpaceModel,
    p: usize,
    f: usize,
    i: usize,
) -> Result<DMatrix<f64>> {
    let (ny, nu) = (m.ny(), m.nu());
    let gamma = m.extended_observability(f)?;
    let lp = m.extended_controllability(p)?;
    let gf = m.toeplitz_markov(f, crate::model::Channel::Input)?;
    let gamma_fi = gamma.rows((i - 1) * ny, ny).clone_owned();
    let left = &gamma_fi * &lp;
    let g_fi = gf.view(((i - 1) * ny, 0), (ny, i * nu)).clone_owned();
    let mut theta = DMatrix::zeros(ny, left.ncols() + g_fi.ncols());
    theta.view_mut((0, 0), (ny, left.ncols())).copy_from(&left);
    theta
        .view_mut((0, left.ncols()), (ny, g_fi.ncols()))
        .copy_from(&g_fi);
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::{build_hankels, build_regressor_bank};
    use crate::model::{Channel, StateSpaceModel};

    fn noiseless_bank(n: usize, seed: u64) -> (StateSpaceModel, RegressorBank, HankelBundle) {
        let m = StateSpaceModel::s1();
        let (p, f) = (2, 3);
        let t = m.simulate(p + f + n - 1, seed, true).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let bank = build_regressor_bank(&h);
        (m, bank, h)
    }

    #[test]
    fn noiseless_data_is_exactly_collinear_and_raises_pe_failure() {
        // With e = 0 the output obeys y_{k+1} = 0.5 y_k + u_k exactly, so
        // the regressor rows are linearly dependent and theta is not
        // identifiable (K never enters the data). The solver must report
        // this as an excitation failure instead of returning the
        // minimum-norm solution, which provably differs from the truth.
        let (_, bank, h) = noiseless_bank(500, 2);
        let dependent = h.z_p.row(0) * 0.5 + h.z_p.row(2) - h.z_p.row(1);
        assert!(dependent.norm() <= 1e-12 * h.z_p.norm());
        match estimate_parsim_bank(&bank) {
            Err(Error::ExcitationFailure { sigma_min, tol, .. }) => {
                assert!(sigma_min <= tol)
            }
            other => panic!("expected PE failure, got {other:?}"),
        }
    }

    #[test]
    fn planted_consistent_data_recovers_theta_exactly() {
        // A noisy simulation gives a full-rank regressor; replacing the
        // targets with theta_true * Z makes OLS exact.
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 3, 500);
        let t = m.simulate(p + f + n - 1, 2, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let mut bank = build_regressor_bank(&h);
        for prob in &mut bank.problems {
            let truth = true_theta(&m, p, f, prob.i).unwrap();
            prob.target = &truth * &prob.regressor;
        }
        let est = estimate_parsim_bank(&bank).unwrap();
        for (idx, theta) in est.thetas.iter().enumerate() {
            let truth = true_theta(&m, 2, 3, idx + 1).unwrap();
            assert!(
                (theta - &truth).norm() <= 1e-9 * (1.0 + truth.norm()),
                "row {} error {}",
                idx + 1,
                (theta - &truth).norm()
            );
        }
        // Markov means recover the impulse response exactly
        for j in 1..3 {
            let truth = m.markov_parameter(j, Channel::Input);
            assert!((est.markov_mean[j].clone() - truth).norm() < 1e-9);
        }
    }

    #[test]
    fn rank_deficient_regressor_is_pe_failure() {
        let (_, bank, _) = noiseless_bank(4, 2); // N < d_i
        match estimate_parsim_bank(&bank) {
            Err(Error::ExcitationFailure { row, .. }) => assert!(row >= 1),
            other => panic!("expected PE failure, got {other:?}"),
        }
    }

    #[test]
    fn matches_normal_equations_oracle() {
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 3, 400);
        let t = m.simulate(p + f + n - 1, 77, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let bank = build_regressor_bank(&h);
        let est = estimate_parsim_bank(&bank).unwrap();
        for prob in &bank.problems {
            let z = &prob.regressor;
            let gram = z * z.transpose();
            let oracle = &prob.target
                * z.transpose()
                * gram.try_inverse().expect("well conditioned");
            let theta = &est.thetas[prob.i - 1];
            assert!(
                (theta - &oracle).norm() <= 1e-8 * oracle.norm(),
                "row {} deviates from normal equations",
                prob.i
            );
        }
    }

    #[test]
    fn ols_residual_orthogonality() {
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 3, 300);
        let t = m.simulate(p + f + n - 1, 19, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let bank = build_regressor_bank(&h);
        let est = estimate_parsim_bank(&bank).unwrap();
        for prob in &bank.problems {
            let residual = &prob.target - &est.thetas[prob.i - 1] * &prob.regressor;
            let cross = residual * prob.regressor.transpose();
            assert!(
                cross.norm() <= 1e-8 * prob.target.norm() * prob.regressor.norm()
            );
        }
    }

    #[test]
    fn classical_noiseless_is_pe_failure() {
        // Z_p itself carries the exact collinearity, so the projected
        // Gram is singular.
        let (_, _, h) = noiseless_bank(1000, 4);
        assert!(matches!(
            estimate_classical_projection(&h),
            Err(Error::ExcitationFailure { .. })
        ));
    }

    #[test]
    fn classical_planted_consistent_data_recovers_gamma_lp() {
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 3, 1000);
        let t = m.simulate(p + f + n - 1, 4, false).unwrap();
        let mut h = build_hankels(&t, p, f, n).unwrap();
        let truth = m.extended_observability(f).unwrap() * m.extended_controllability(p).unwrap();
        let g_f = m.toeplitz_markov(f, Channel::Input).unwrap();
        h.y_f = &truth * &h.z_p + &g_f * &h.u_f;
        let est = estimate_classical_projection(&h).unwrap();
        assert!((est - &truth).norm() <= 1e-9 * truth.norm());
    }

    #[test]
    fn classical_fails_on_short_data() {
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 3, 2); // N < f*nu
        let t = m.simulate(p + f + n - 1, 4, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        assert!(matches!(
            estimate_classical_projection(&h),
            Err(Error::ExcitationFailure { .. })
        ));
    }

    #[test]
    fn classical_matches_dense_projector_oracle() {
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 2, 200);
        let t = m.simulate(p + f + n - 1, 55, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let est = estimate_classical_projection(&h).unwrap();
        // literal dense projector
        let uf = &h.u_f;
        let pi = nalgebra::DMatrix::identity(n, n)
            - uf.transpose() * (uf * uf.transpose()).try_inverse().unwrap() * uf;
        let oracle = (&h.y_f * &pi * h.z_p.transpose())
            * (&h.z_p * &pi * h.z_p.transpose()).try_inverse().unwrap();
        assert!((est - &oracle).norm() <= 1e-8 * oracle.norm());
    }

    #[test]
    fn stacked_rows_equal_theta_blocks() {
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 3, 150);
        let t = m.simulate(p + f + n - 1, 88, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let bank = build_regressor_bank(&h);
        let est = estimate_parsim_bank(&bank).unwrap();
        let zp_cols = p * (m.ny() + m.nu());
        for i in 1..=f {
            let row = est.stacked_gamma_lp.rows((i - 1) * m.ny(), m.ny());
            let block = est.thetas[i - 1].columns(0, zp_cols);
            assert_eq!(row.clone_owned(), block.clone_owned());
        }
    }

    #[test]
    fn error_splits_into_stochastic_and_bias_terms() {
        // theta_hat - theta = H_fi E_i Z^+ + Gamma_fi Ac^p X_{k-p} Z^+
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 3, 250);
        let t = m.simulate(p + f + n - 1, 23, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let bank = build_regressor_bank(&h);
        let est = estimate_parsim_bank(&bank).unwrap();
        let hf = m.toeplitz_markov(f, Channel::Noise).unwrap();
        for prob in &bank.problems {
            let i = prob.i;
            let truth = true_theta(&m, p, f, i).unwrap();
            let diff = &est.thetas[i - 1] - &truth;
            let z = &prob.regressor;
            let pinv = z.clone().pseudo_inverse(1e-12).unwrap();
            let h_fi = hf.view(((i - 1) * m.ny(), 0), (m.ny(), i * m.ny())).clone_owned();
            // S1 has nilpotent Ac, so the bias term vanishes identically
            let stochastic = &h_fi * &prob.e_i * &pinv;
            assert!(
                (diff.clone() - stochastic).norm() <= 1e-8 * (1.0 + diff.norm()),
                "row {i}"
            );
        }
    }
}
