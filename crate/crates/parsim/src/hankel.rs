//! Block-Hankel data matrices and the per-row regressor bank assembled
//! from a simulated trajectory.
//!
//! With the convention `k = p + 1`, a trajectory of length
//! `p + f + N - 1` fills past/future Hankel matrices with `N` columns
//! each. The state and innovation analogues are carried along purely for
//! structural tests; estimators never touch them.
//!
//! ```
//! use parsim::model::StateSpaceModel;
//! use parsim::hankel::{build_hankels, build_regressor_bank};
//!
//! let m = StateSpaceModel::s1();
//! let (p, f, n) = (2, 3, 40);
//! let t = m.simulate(p + f + n - 1, 1, false).unwrap();
//! let h = build_hankels(&t, p, f, n).unwrap();
//! assert_eq!(h.z_p.nrows(), 2 * p); // [Y_p; U_p], scalar u and y
//! let bank = build_regressor_bank(&h);
//! assert_eq!(bank.problems.len(), f);
//! assert_eq!(bank.problems[0].d_i(), 2 * p + 1);
//! ```

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::model::Trajectory;

/// Past/future block-Hankel matrices built from one trajectory.
#[derive(Debug, Clone)]
pub struct HankelBundle {
    pub u_p: DMatrix<f64>,
    pub u_f: DMatrix<f64>,
    pub y_p: DMatrix<f64>,
    pub y_f: DMatrix<f64>,
    /// Stacked past data `[Y_p; U_p]`.
    pub z_p: DMatrix<f64>,
    /// Future innovations, test-only analogue of `U_f`.
    pub e_f: DMatrix<f64>,
    /// States at the regression start time, `x_k ... x_{k+N-1}`.
    pub x_k: DMatrix<f64>,
    /// States `p` steps earlier, `x_{k-p} ... x_{k-p+N-1}`.
    pub x_kp: DMatrix<f64>,
    pub p: usize,
    pub f: usize,
    pub n: usize,
    pub nu: usize,
    pub ny: usize,
}

/// One causal ARX problem: regressor `[Z_p; U_i]` against the `i`-th
/// future output block row.
#[derive(Debug, Clone)]
pub struct RegressorProblem {
    /// Row index `i` in `1..=f`.
    pub i: usize,
    /// `[Z_p; U_i]`, `d_i x N` with `d_i = p*ny + (p + i)*nu`.
    pub regressor: DMatrix<f64>,
    /// Block row `i` of `Y_f`, `ny x N`.
    pub target: DMatrix<f64>,
    /// First `i` block rows of `E_f`, test-only.
    pub e_i: DMatrix<f64>,
}

impl RegressorProblem {
    pub fn d_i(&self) -> usize {
        self.regressor.nrows()
    }
}

/// The `f` regressor/target pairs of the ARX bank.
#[derive(Debug, Clone)]
pub struct RegressorBank {
    pub problems: Vec<RegressorProblem>,
    pub p: usize,
    pub f: usize,
    pub n: usize,
    pub nu: usize,
    pub ny: usize,
}

fn hankel(data: &DMatrix<f64>, start: usize, block_rows: usize, n: usize) -> DMatrix<f64> {
    let ch = data.nrows();
    DMatrix::from_fn(block_rows * ch, n, |r, c| {
        let (block, within) = (r / ch, r % ch);
        data[(within, start + block + c)]
    })
}

/// Builds all Hankel matrices at `k = p + 1`.
pub fn build_hankels(t: &Trajectory, p: usize, f: usize, n: usize) -> Result<HankelBundle> {
    if p == 0 || f == 0 || n == 0 {
        return Err(Error::EmptyHorizon);
    }
    let need = p + f + n - 1;
    if t.len() < need {
        return Err(Error::DataLength {
            have: t.len(),
            need,
        });
    }
    let (nu, ny) = (t.u.nrows(), t.y.nrows());
    let u_p = hankel(&t.u, 0, p, n);
    let y_p = hankel(&t.y, 0, p, n);
    let u_f = hankel(&t.u, p, f, n);
    let y_f = hankel(&t.y, p, f, n);
    let e_f = hankel(&t.e, p, f, n);
    let x_k = t.x.columns(p, n).clone_owned();
    let x_kp = t.x.columns(0, n).clone_owned();
    let mut z_p = DMatrix::zeros((ny + nu) * p, n);
    z_p.view_mut((0, 0), (p * ny, n)).copy_from(&y_p);
    z_p.view_mut((p * ny, 0), (p * nu, n)).copy_from(&u_p);
    Ok(HankelBundle {
        u_p,
        u_f,
        y_p,
        y_f,
        z_p,
        e_f,
        x_k,
        x_kp,
        p,
        f,
        n,
        nu,
        ny,
    })
}

/// Forms the `f` regressor/target pairs from a bundle.
pub fn build_regressor_bank(h: &HankelBundle) -> RegressorBank {
    let problems = (1..=h.f)
        .map(|i| {
            let zp_rows = h.z_p.nrows();
            let mut regressor = DMatrix::zeros(zp_rows + i * h.nu, h.n);
            regressor.view_mut((0, 0), (zp_rows, h.n)).copy_from(&h.z_p);
            regressor
                .view_mut((zp_rows, 0), (i * h.nu, h.n))
                .copy_from(&h.u_f.rows(0, i * h.nu));
            RegressorProblem {
                i,
                regressor,
                target: h.y_f.rows((i - 1) * h.ny, h.ny).clone_owned(),
                e_i: h.e_f.rows(0, i * h.ny).clone_owned(),
            }
        })
        .collect();
    RegressorBank {
        problems,
        p: h.p,
        f: h.f,
        n: h.n,
        nu: h.nu,
        ny: h.ny,
    }
}

/// Empirical covariance `(1/N) sum_j z_j z_j^T` of the `i`-th regressor.
pub fn empirical_covariance(bank: &RegressorBank, i: usize) -> DMatrix<f64> {
    let z = &bank.problems[i - 1].regressor;
    let mut cov = z * z.transpose();
    cov /= bank.n as f64;
    cov
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::StateSpaceModel;
    use nalgebra::DMatrix;
    use proptest::prelude::*;

    fn scalar_trajectory(u: &[f64]) -> Trajectory {
        let n = u.len();
        Trajectory {
            u: DMatrix::from_row_slice(1, n, u),
            y: DMatrix::from_fn(1, n, |_, c| 10.0 + c as f64),
            x: DMatrix::zeros(1, n),
            e: DMatrix::zeros(1, n),
        }
    }

    #[test]
    fn scalar_example_matches_definition() {
        let t = scalar_trajectory(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let h = build_hankels(&t, 2, 2, 3).unwrap();
        assert_eq!(
            h.u_p,
            DMatrix::from_row_slice(2, 3, &[1.0, 2.0, 3.0, 2.0, 3.0, 4.0])
        );
        assert_eq!(
            h.u_f,
            DMatrix::from_row_slice(2, 3, &[3.0, 4.0, 5.0, 4.0, 5.0, 6.0])
        );
    }

    #[test]
    fn single_sample_bundle() {
        // p = f = N = 1 needs p + f + N - 1 = 2 samples
        let t = scalar_trajectory(&[7.0, 8.0]);
        let h = build_hankels(&t, 1, 1, 1).unwrap();
        assert_eq!(h.u_p[(0, 0)], 7.0);
        assert_eq!(h.u_f[(0, 0)], 8.0);
        assert_eq!(h.z_p.nrows(), 2);
    }

    #[test]
    fn too_short_trajectory_is_rejected() {
        let t = scalar_trajectory(&[1.0, 2.0, 3.0]);
        assert!(matches!(
            build_hankels(&t, 2, 2, 3),
            Err(Error::DataLength { have: 3, need: 6 })
        ));
    }

    #[test]
    fn regressor_dimension_counts() {
        let t = scalar_trajectory(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let h = build_hankels(&t, 2, 2, 3).unwrap();
        let bank = build_regressor_bank(&h);
        assert_eq!(bank.problems[0].d_i(), 5); // p*ny + p*nu + 1*nu
        assert_eq!(bank.problems[1].d_i(), 6);
        // i = f regressor is [Z_p; U_f] in full
        let full = &bank.problems[1].regressor;
        assert_eq!(full.rows(4, 2).clone_owned(), h.u_f);
    }

    #[test]
    fn regressor_columns_match_hand_assembly() {
        let m = StateSpaceModel::s1();
        let t = m.simulate(40, 5, false).unwrap();
        let (p, f, n) = (3, 2, 30);
        let h = build_hankels(&t, p, f, n).unwrap();
        let bank = build_regressor_bank(&h);
        for prob in &bank.problems {
            for j in 0..n {
                // z_{p,i}(j) = (y_j..y_{j+p-1}, u_j..u_{j+p-1}, u_{j+p}..u_{j+p+i-1})
                let mut z = Vec::new();
                for l in 0..p {
                    z.push(t.y[(0, j + l)]);
                }
                for l in 0..p {
                    z.push(t.u[(0, j + l)]);
                }
                for l in 0..prob.i {
                    z.push(t.u[(0, j + p + l)]);
                }
                let col = prob.regressor.column(j);
                assert_eq!(col.as_slice(), z.as_slice());
            }
        }
    }

    #[test]
    fn empirical_covariance_basis_and_single_column() {
        let mut bank = {
            let t = scalar_trajectory(&[1.0; 8]);
            let h = build_hankels(&t, 2, 2, 4).unwrap();
            build_regressor_bank(&h)
        };
        // overwrite with N copies of e1
        let d = bank.problems[0].d_i();
        let mut z = DMatrix::zeros(d, 4);
        for c in 0..4 {
            z[(0, c)] = 1.0;
        }
        bank.problems[0].regressor = z;
        let cov = empirical_covariance(&bank, 1);
        assert_eq!(cov[(0, 0)], 1.0);
        assert_eq!(cov.norm(), 1.0);

        // single column: z z^T
        bank.n = 1;
        let z = DMatrix::from_column_slice(d, 1, &[1.0, 2.0, 0.0, -1.0, 0.5]);
        bank.problems[0].regressor = z.clone();
        let cov = empirical_covariance(&bank, 1);
        assert!((cov - &z * z.transpose()).norm() < 1e-15);
    }

    #[test]
    fn extended_model_identity() {
        // Y_f = Gamma_f X_k + G_f U_f + H_f E_f on simulated data
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 3, 50);
        let t = m.simulate(p + f + n - 1, 21, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let gamma = m.extended_observability(f).unwrap();
        let gf = m.toeplitz_markov(f, crate::model::Channel::Input).unwrap();
        let hf = m.toeplitz_markov(f, crate::model::Channel::Noise).unwrap();
        let rhs = &gamma * &h.x_k + &gf * &h.u_f + &hf * &h.e_f;
        assert!((&h.y_f - rhs).norm() <= 1e-10 * h.y_f.norm());
    }

    #[test]
    fn state_reconstruction_identity() {
        // X_k = L_p Z_p + Ac^p X_{k-p}; for S1 the Ac^p term is exactly zero
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 2, 50);
        let t = m.simulate(p + f + n - 1, 31, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let lp = m.extended_controllability(p).unwrap();
        let rhs = &lp * &h.z_p;
        assert!((&h.x_k - rhs).norm() <= 1e-10 * h.x_k.norm());
    }

    #[test]
    fn row_wise_identity() {
        let m = StateSpaceModel::s1();
        let (p, f, n) = (2, 3, 60);
        let t = m.simulate(p + f + n - 1, 41, false).unwrap();
        let h = build_hankels(&t, p, f, n).unwrap();
        let bank = build_regressor_bank(&h);
        let lp = m.extended_controllability(p).unwrap();
        let gf = m.toeplitz_markov(f, crate::model::Channel::Input).unwrap();
        let hf = m.toeplitz_markov(f, crate::model::Channel::Noise).unwrap();
        let ny = m.ny();
        for prob in &bank.problems {
            let i = prob.i;
            let gamma_fi = m.extended_observability(f).unwrap().rows((i - 1) * ny, ny).clone_owned();
            let g_fi = gf.view(((i - 1) * ny, 0), (ny, i * m.nu())).clone_owned();
            let h_fi = hf.view(((i - 1) * ny, 0), (ny, i * ny)).clone_owned();
            let u_i = h.u_f.rows(0, i * m.nu());
            let rhs = &gamma_fi * &lp * &h.z_p + &g_fi * u_i + &h_fi * &prob.e_i;
            assert!(
                (&prob.target - rhs).norm() <= 1e-10 * prob.target.norm(),
                "row {i} residual too large"
            );
        }
    }

    proptest! {
        #[test]
        fn hankel_shift_property(seed in 0u64..1000) {
            let m = StateSpaceModel::s1();
            let (p, f, n) = (3, 2, 10);
            let t = m.simulate(p + f + n - 1, seed, false).unwrap();
            let h = build_hankels(&t, p, f, n).unwrap();
            for (mat, rows) in [(&h.u_p, p), (&h.y_p, p), (&h.u_f, f), (&h.y_f, f)] {
                for r in 0..rows - 1 {
                    for c in 1..n {
                        prop_assert_eq!(mat[(r, c)], mat[(r + 1, c - 1)]);
                    }
                }
            }
        }
    }
}
