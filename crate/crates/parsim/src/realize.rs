//! Balanced realization from the estimated `Gamma_f L_p`: rank-`n_x` SVD
//! factorization, system-matrix extraction by shift invariance, and
//! alignment against ground truth up to a similarity transform.
//!
//! ```
//! use nalgebra::DMatrix;
//! use parsim::realize::svd_realize;
//!
//! // Gamma_2 L_1 of the scalar fixture, a rank-one matrix
//! let gl = DMatrix::from_row_slice(2, 2, &[0.5, 1.0, 0.25, 0.5]);
//! let r = svd_realize(&gl, 1).unwrap();
//! assert!((r.singular_values[0] - 1.25).abs() < 1e-12);
//! assert!(((&r.gamma_f * &r.l_p) - gl).norm() < 1e-12);
//! ```

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::StateSpaceModel;

/// Spectral norm (largest singular value).
pub fn spectral_norm(m: &DMatrix<f64>) -> f64 {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0.0;
    }
    m.singular_values()[0]
}

/// Rank-`n_x` balanced factors of a `Gamma_f L_p` estimate.
#[derive(Debug, Clone)]
pub struct RealizationResult {
    /// `U1 * Lambda1^(1/2)`, `f*ny x nx`.
    pub gamma_f: DMatrix<f64>,
    /// `Lambda1^(1/2) * V1^T`, `nx x p*(ny + nu)`.
    pub l_p: DMatrix<f64>,
    /// All singular values of the input, nonincreasing.
    pub singular_values: Vec<f64>,
    /// `sigma_{nx} - sigma_{nx+1}` (the full gap when the input has rank
    /// at most `nx`).
    pub sigma_gap: f64,
}

/// Top-`n_x` SVD with the balanced square-root split. Each left singular
/// vector is flipped so its largest-magnitude entry is positive, which
/// pins down the factor signs across runs.
pub fn svd_realize(gamma_lp: &DMatrix<f64>, nx: usize) -> Result<RealizationResult> {
    let (rows, cols) = gamma_lp.shape();
    if nx == 0 || nx > rows.min(cols) {
        return Err(Error::Dimension(format!(
            "order {nx} not representable by a {rows}x{cols} matrix"
        )));
    }
    let svd = gamma_lp.clone().svd(true, true);
    let sv: Vec<f64> = svd.singular_values.iter().cloned().collect();
    let tol = rows.max(cols) as f64 * f64::EPSILON * sv[0];
    if sv[nx - 1] <= tol {
        return Err(Error::RankDeficient {
            index: nx,
            value: sv[nx - 1],
            tol,
        });
    }
    let mut u1 = svd
        .u
        .as_ref()
        .expect("requested U")
        .columns(0, nx)
        .clone_owned();
    let mut v1_t = svd
        .v_t
        .as_ref()
        .expect("requested V^T")
        .rows(0, nx)
        .clone_owned();
    for j in 0..nx {
        let col = u1.column(j);
        let mut best = 0usize;
        for r in 1..col.nrows() {
            if col[r].abs() > col[best].abs() {
                best = r;
            }
        }
        if col[best] < 0.0 {
            u1.column_mut(j).neg_mut();
            v1_t.row_mut(j).neg_mut();
        }
    }
    let sqrt_l: Vec<f64> = sv[..nx].iter().map(|s| s.sqrt()).collect();
    let mut gamma_f = u1;
    let mut l_p = v1_t;
    for (j, s) in sqrt_l.iter().enumerate() {
        gamma_f.column_mut(j).scale_mut(*s);
        l_p.row_mut(j).scale_mut(*s);
    }
    let sigma_gap = sv[nx - 1] - sv.get(nx).copied().unwrap_or(0.0);
    Ok(RealizationResult {
        gamma_f,
        l_p,
        singular_values: sv,
        sigma_gap,
    })
}

/// System matrices pulled out of balanced factors.
#[derive(Debug, Clone)]
pub struct SystemMatrices {
    pub a: DMatrix<f64>,
    pub b: DMatrix<f64>,
    pub c: DMatrix<f64>,
    pub k: DMatrix<f64>,
}

/// Extracts `(A, B, C, K)` from the factors: `C` from the first block row
/// of `Gamma_f`, `A` by shift invariance, `K` and `B` from the
/// controllability-layout columns of `L_p` (the `B` block occupies the
/// final `nu` columns).
pub fn extract_system(
    r: &RealizationResult,
    p: usize,
    nx: usize,
    nu: usize,
    ny: usize,
) -> Result<SystemMatrices> {
    let f_ny = r.gamma_f.nrows();
    if f_ny < nx + ny || !f_ny.is_multiple_of(ny) {
        return Err(Error::Extraction(format!(
            "observability factor has {f_ny} rows; need at least nx + ny = {} in multiples of ny",
            nx + ny
        )));
    }
    let c = r.gamma_f.rows(0, ny).clone_owned();
    let lower = r.gamma_f.rows(0, f_ny - ny).clone_owned(); // drop last block row
    let upper = r.gamma_f.rows(ny, f_ny - ny).clone_owned(); // drop first block row
    let sv = lower.singular_values();
    let tol = (f_ny - ny).max(nx) as f64 * f64::EPSILON * sv[0];
    if sv[nx - 1] <= tol {
        return Err(Error::Extraction(
            "shifted observability block is rank deficient".into(),
        ));
    }
    let pinv = lower
        .pseudo_inverse(tol)
        .map_err(|e| Error::Extraction(e.to_string()))?;
    let a = pinv * upper;
    let k = r.l_p.columns((p - 1) * ny, ny).clone_owned();
    let b = r.l_p.columns(p * ny + (p - 1) * nu, nu).clone_owned();
    Ok(SystemMatrices { a, b, c, k })
}

/// Per-matrix spectral-norm errors after aligning a realization to the
/// true basis with `T = Gamma_f^+ Gamma_f_hat`.
#[derive(Debug, Clone, Serialize)]
pub struct AlignmentResult {
    #[serde(skip)]
    pub t: DMatrix<f64>,
    pub t_condition: f64,
    pub err_a: f64,
    pub err_b: f64,
    pub err_c: f64,
    pub err_k: f64,
    pub err_gamma: f64,
    pub err_lp: f64,
}

/// Aligns the realized factors with the true system. The transform is the
/// least-squares fit of the estimated observability factor onto the true
/// one; all errors follow the `(T^-1 A T, T^-1 B, C T, T^-1 K)` convention.
pub fn align_similarity(
    truth: &StateSpaceModel,
    p: usize,
    f: usize,
    r: &RealizationResult,
) -> Result<AlignmentResult> {
    let nx = truth.nx();
    let gamma_true = truth.extended_observability(f)?;
    let lp_true = truth.extended_controllability(p)?;
    let sv_g = gamma_true.singular_values();
    let g_tol = gamma_true.nrows().max(nx) as f64 * f64::EPSILON * sv_g[0];
    let t = gamma_true
        .clone()
        .pseudo_inverse(g_tol)
        .map_err(|e| Error::Extraction(e.to_string()))?
        * &r.gamma_f;
    let sv_t = t.singular_values();
    let cond = sv_t[0] / sv_t[nx - 1];
    let t_inv = t
        .clone()
        .try_inverse()
        .ok_or(Error::SingularAlignment(cond))?;
    if !cond.is_finite() {
        return Err(Error::SingularAlignment(cond));
    }
    let sys = extract_system(r, p, nx, truth.nu(), truth.ny())?;
    let err_a = spectral_norm(&(&sys.a - &t_inv * truth.a() * &t));
    let err_b = spectral_norm(&(&sys.b - &t_inv * truth.b()));
    let err_k = spectral_norm(&(&sys.k - &t_inv * truth.k()));
    let err_c = spectral_norm(&(&sys.c - truth.c() * &t));
    let err_gamma = spectral_norm(&(&r.gamma_f - &gamma_true * &t));
    let err_lp = spectral_norm(&(&r.l_p - &t_inv * &lp_true));
    Ok(AlignmentResult {
        t,
        t_condition: cond,
        err_a,
        err_b,
        err_c,
        err_k,
        err_gamma,
        err_lp,
    })
}

/// Report on the SVD robustness precondition
/// `||est - true|| <= sigma_nx(true) / 4`.
#[derive(Debug, Clone, Serialize)]
pub struct SvdConditionReport {
    pub delta: f64,
    pub sigma_nx: f64,
    pub holds: bool,
}

pub fn check_svd_condition(
    true_gl: &DMatrix<f64>,
    est_gl: &DMatrix<f64>,
    nx: usize,
) -> SvdConditionReport {
    let delta = spectral_norm(&(est_gl - true_gl));
    let sigma_nx = true_gl.singular_values()[nx - 1];
    SvdConditionReport {
        delta,
        sigma_nx,
        holds: delta <= sigma_nx / 4.0,
    }
}

/// Single unitary transform minimizing the combined Procrustes mismatch
/// of both factor pairs, used by the SVD robustness checks.
pub fn procrustes_align(
    gamma_bar: &DMatrix<f64>,
    l_bar: &DMatrix<f64>,
    gamma_hat: &DMatrix<f64>,
    l_hat: &DMatrix<f64>,
) -> DMatrix<f64> {
    let m = gamma_bar.transpose() * gamma_hat + l_bar * l_hat.transpose();
    let svd = m.svd(true, true);
    svd.u.unwrap() * svd.v_t.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use nalgebra::DMatrix;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn s1_truth_product() -> DMatrix<f64> {
        // Gamma_2 L_1 for S1: [[0.5, 1], [0.25, 0.5]]
        DMatrix::from_row_slice(2, 2, &[0.5, 1.0, 0.25, 0.5])
    }

    #[test]
    fn rank_one_hand_svd() {
        let r = svd_realize(&s1_truth_product(), 1).unwrap();
        assert_relative_eq!(r.singular_values[0], 1.25, epsilon = 1e-12);
        assert_relative_eq!(r.gamma_f[(0, 0)], 1.0, epsilon = 1e-12);
        assert_relative_eq!(r.gamma_f[(1, 0)], 0.5, epsilon = 1e-12);
        assert_relative_eq!(r.l_p[(0, 0)], 0.5, epsilon = 1e-12);
        assert_relative_eq!(r.l_p[(0, 1)], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn zero_matrix_is_rank_deficient() {
        assert!(matches!(
            svd_realize(&DMatrix::zeros(3, 3), 1),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn random_low_rank_matrix_is_reproduced() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut draw = |r: usize, c: usize| {
            DMatrix::from_fn(r, c, |_, _| rng.sample::<f64, _>(StandardNormal))
        };
        let m = draw(6, 2) * draw(2, 5);
        let r = svd_realize(&m, 2).unwrap();
        let rebuilt = &r.gamma_f * &r.l_p;
        assert!((rebuilt - &m).norm() <= 1e-10 * m.norm());
    }

    #[test]
    fn eckart_young_and_balance() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let m = DMatrix::from_fn(6, 5, |_, _| rng.sample::<f64, _>(StandardNormal));
        let nx = 2;
        let r = svd_realize(&m, nx).unwrap();
        let residual = spectral_norm(&(&m - &r.gamma_f * &r.l_p));
        assert_relative_eq!(residual, r.singular_values[nx], epsilon = 1e-10);
        // both Gramians equal the diagonal singular-value matrix
        let g1 = r.gamma_f.transpose() * &r.gamma_f;
        let g2 = &r.l_p * r.l_p.transpose();
        let lambda = DMatrix::from_fn(nx, nx, |i, j| {
            if i == j {
                r.singular_values[i]
            } else {
                0.0
            }
        });
        assert!((g1 - &lambda).norm() < 1e-10);
        assert!((g2 - &lambda).norm() < 1e-10);
    }

    #[test]
    fn scalar_extraction() {
        let r = svd_realize(&s1_truth_product(), 1).unwrap();
        let sys = extract_system(&r, 1, 1, 1, 1).unwrap();
        assert_relative_eq!(sys.c[(0, 0)], 1.0, epsilon = 1e-12);
        assert_relative_eq!(sys.a[(0, 0)], 0.5, epsilon = 1e-12);
        assert_relative_eq!(sys.k[(0, 0)], 0.5, epsilon = 1e-12);
        assert_relative_eq!(sys.b[(0, 0)], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn truth_round_trip_with_identity_transform() {
        let m = StateSpaceModel::s1();
        let (p, f) = (2, 3);
        let r = RealizationResult {
            gamma_f: m.extended_observability(f).unwrap(),
            l_p: m.extended_controllability(p).unwrap(),
            singular_values: vec![],
            sigma_gap: 0.0,
        };
        let sys = extract_system(&r, p, 1, 1, 1).unwrap();
        assert!((&sys.a - m.a()).norm() < 1e-12);
        assert!((&sys.c - m.c()).norm() < 1e-12);
        assert!((&sys.k - m.k()).norm() < 1e-12);
        assert!((&sys.b - m.b()).norm() < 1e-12);
    }

    #[test]
    fn too_short_observability_rejected() {
        let r = RealizationResult {
            gamma_f: DMatrix::from_element(1, 1, 1.0), // f*ny = nx
            l_p: DMatrix::from_element(1, 2, 1.0),
            singular_values: vec![],
            sigma_gap: 0.0,
        };
        assert!(matches!(
            extract_system(&r, 1, 1, 1, 1),
            Err(Error::Extraction(_))
        ));
    }

    #[test]
    fn alignment_of_truth_is_identity() {
        let m = StateSpaceModel::s1();
        let (p, f) = (2, 3);
        let r = RealizationResult {
            gamma_f: m.extended_observability(f).unwrap(),
            l_p: m.extended_controllability(p).unwrap(),
            singular_values: vec![],
            sigma_gap: 0.0,
        };
        let al = align_similarity(&m, p, f, &r).unwrap();
        assert!((al.t.clone() - DMatrix::identity(1, 1)).norm() < 1e-12);
        assert!(al.err_a < 1e-12 && al.err_b < 1e-12);
        assert!(al.err_c < 1e-12 && al.err_k < 1e-12);
    }

    #[test]
    fn alignment_recovers_known_transform() {
        // 2-state model, factors transformed by a known invertible T0
        let a = DMatrix::from_row_slice(2, 2, &[0.6, 0.1, 0.0, 0.4]);
        let b = DMatrix::from_row_slice(2, 1, &[1.0, 0.5]);
        let c = DMatrix::from_row_slice(1, 2, &[1.0, 0.3]);
        let k = DMatrix::from_row_slice(2, 1, &[0.2, 0.1]);
        let m = StateSpaceModel::new(a, b, c, k, 0.1, 1.0).unwrap();
        let (p, f) = (3, 4);
        let t0 = DMatrix::from_row_slice(2, 2, &[1.0, 0.4, -0.2, 0.9]);
        let t0_inv = t0.clone().try_inverse().unwrap();
        let r = RealizationResult {
            gamma_f: m.extended_observability(f).unwrap() * &t0,
            l_p: &t0_inv * m.extended_controllability(p).unwrap(),
            singular_values: vec![],
            sigma_gap: 0.0,
        };
        let al = align_similarity(&m, p, f, &r).unwrap();
        assert!((al.t.clone() - &t0).norm() <= 1e-10);
        for e in [al.err_a, al.err_b, al.err_c, al.err_k, al.err_gamma, al.err_lp] {
            assert!(e <= 1e-10, "error {e}");
        }
    }

    #[test]
    fn svd_condition_report() {
        let truth = s1_truth_product();
        let sigma1 = 1.25;
        let ok = check_svd_condition(&truth, &truth, 1);
        assert!(ok.holds && ok.delta == 0.0);
        // perturbation of norm sigma/2 violates, sigma/8 satisfies
        let mut bump = DMatrix::zeros(2, 2);
        bump[(0, 0)] = sigma1 / 2.0;
        assert!(!check_svd_condition(&truth, &(&truth + &bump), 1).holds);
        bump[(0, 0)] = sigma1 / 8.0;
        assert!(check_svd_condition(&truth, &(&truth + &bump), 1).holds);
    }

    #[test]
    fn eigenvalues_invariant_under_similarity() {
        let m = StateSpaceModel::s1();
        let r = svd_realize(
            &(m.extended_observability(3).unwrap() * m.extended_controllability(2).unwrap()),
            1,
        )
        .unwrap();
        let sys = extract_system(&r, 2, 1, 1, 1).unwrap();
        let eig = crate::model::spectral_radius(&sys.a);
        assert_relative_eq!(eig, 0.5, epsilon = 1e-6);
    }
}
