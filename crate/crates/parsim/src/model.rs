//! Innovations-form state-space model, simulation and the structural
//! matrices built from it (extended observability/controllability,
//! Markov-parameter Toeplitz blocks, state covariance).
//!
//! ```
//! use parsim::model::StateSpaceModel;
//!
//! let m = StateSpaceModel::s1();
//! assert!(m.validate(false).passed());
//! let t = m.simulate(100, 7, false).unwrap();
//! assert_eq!(t.len(), 100);
//! // same seed, same data
//! assert_eq!(t.y, m.simulate(100, 7, false).unwrap().y);
//! ```

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for spectral-radius validation. The model class allows a
/// marginally stable `A`, so the check on `A` is `rho(A) <= 1 + EPS_RHO`,
/// while the predictor matrix `A - KC` must satisfy
/// `rho(A - KC) < 1 - EPS_RHO`.
pub const EPS_RHO: f64 = 1e-9;

/// Which impulse-response channel a Markov parameter belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Channel {
    /// Input channel: `0` at lag 0, `C A^(j-1) B` for lag `j >= 1`.
    Input,
    /// Noise channel: `I` at lag 0, `C A^(j-1) K` for lag `j >= 1`.
    Noise,
}

/// Discrete-time LTI system on innovations form:
///
/// ```text
/// x[k+1] = A x[k] + B u[k] + K e[k]
/// y[k]   = C x[k] + e[k]
/// ```
///
/// with `u[k] ~ N(0, sigma_u^2 I)` and `e[k] ~ N(0, sigma_e^2 I)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateSpaceModel {
    a: DMatrix<f64>,
    b: DMatrix<f64>,
    c: DMatrix<f64>,
    k: DMatrix<f64>,
    sigma_e: f64,
    sigma_u: f64,
}

/// JSON wire format: row-major nested arrays plus the two noise scales.
#[derive(Serialize, Deserialize)]
struct ModelJson {
    #[serde(rename = "A")]
    a: Vec<Vec<f64>>,
    #[serde(rename = "B")]
    b: Vec<Vec<f64>>,
    #[serde(rename = "C")]
    c: Vec<Vec<f64>>,
    #[serde(rename = "K")]
    k: Vec<Vec<f64>>,
    sigma_e: f64,
    sigma_u: f64,
}

fn to_nested(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| m[(r, c)]).collect())
        .collect()
}

fn from_nested(rows: &[Vec<f64>], name: &str) -> Result<DMatrix<f64>> {
    if rows.is_empty() || rows[0].is_empty() {
        return Err(Error::Config(format!("matrix {name} is empty")));
    }
    let ncols = rows[0].len();
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Config(format!("matrix {name} has ragged rows")));
    }
    Ok(DMatrix::from_fn(rows.len(), ncols, |r, c| rows[r][c]))
}

impl StateSpaceModel {
    pub fn new(
        a: DMatrix<f64>,
        b: DMatrix<f64>,
        c: DMatrix<f64>,
        k: DMatrix<f64>,
        sigma_e: f64,
        sigma_u: f64,
    ) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension(format!(
                "A must be square, got {}x{}",
                a.nrows(),
                a.ncols()
            )));
        }
        let nx = a.nrows();
        if b.nrows() != nx {
            return Err(Error::Dimension(format!(
                "B has {} rows, expected {nx}",
                b.nrows()
            )));
        }
        if c.ncols() != nx {
            return Err(Error::Dimension(format!(
                "C has {} columns, expected {nx}",
                c.ncols()
            )));
        }
        let ny = c.nrows();
        if k.nrows() != nx || k.ncols() != ny {
            return Err(Error::Dimension(format!(
                "K is {}x{}, expected {nx}x{ny}",
                k.nrows(),
                k.ncols()
            )));
        }
        if sigma_e < 0.0 || sigma_u < 0.0 {
            return Err(Error::Config(
                "noise scales must be nonnegative".into(),
            ));
        }
        Ok(Self {
            a,
            b,
            c,
            k,
            sigma_e,
            sigma_u,
        })
    }

    /// Canonical scalar test fixture: `A = 0.5, B = 1, C = 1, K = 0.5`,
    /// `sigma_u = 1, sigma_e = 0.1`. Its predictor matrix `A - KC` is zero,
    /// so the truncation bias vanishes for every past horizon `p >= 1`.
    pub fn s1() -> Self {
        Self::new(
            DMatrix::from_element(1, 1, 0.5),
            DMatrix::from_element(1, 1, 1.0),
            DMatrix::from_element(1, 1, 1.0),
            DMatrix::from_element(1, 1, 0.5),
            0.1,
            1.0,
        )
        .expect("fixture dimensions are consistent")
    }

    pub fn a(&self) -> &DMatrix<f64> {
        &self.a
    }
    pub fn b(&self) -> &DMatrix<f64> {
        &self.b
    }
    pub fn c(&self) -> &DMatrix<f64> {
        &self.c
    }
    pub fn k(&self) -> &DMatrix<f64> {
        &self.k
    }
    pub fn sigma_e(&self) -> f64 {
        self.sigma_e
    }
    pub fn sigma_u(&self) -> f64 {
        self.sigma_u
    }
    pub fn nx(&self) -> usize {
        self.a.nrows()
    }
    pub fn nu(&self) -> usize {
        self.b.ncols()
    }
    pub fn ny(&self) -> usize {
        self.c.nrows()
    }

    /// Returns a copy with the given innovation scale.
    pub fn with_sigma_e(&self, sigma_e: f64) -> Self {
        let mut m = self.clone();
        m.sigma_e = sigma_e;
        m
    }

    /// Predictor-form closed-loop matrix `A - KC`.
    pub fn a_closed(&self) -> DMatrix<f64> {
        &self.a - &self.k * &self.c
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ModelJson {
            a: to_nested(&self.a),
            b: to_nested(&self.b),
            c: to_nested(&self.c),
            k: to_nested(&self.k),
            sigma_e: self.sigma_e,
            sigma_u: self.sigma_u,
        })
        .expect("model serialization cannot fail")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let m: ModelJson = serde_json::from_value(v.clone())?;
        Self::new(
            from_nested(&m.a, "A")?,
            from_nested(&m.b, "B")?,
            from_nested(&m.c, "C")?,
            from_nested(&m.k, "K")?,
            m.sigma_e,
            m.sigma_u,
        )
    }

    /// Markov parameter at lag `j` for the given channel.
    pub fn markov_parameter(&self, j: usize, channel: Channel) -> DMatrix<f64> {
        match channel {
            Channel::Input => {
                if j == 0 {
                    DMatrix::zeros(self.ny(), self.nu())
                } else {
                    &self.c * self.a.pow((j - 1) as u32) * &self.b
                }
            }
            Channel::Noise => {
                if j == 0 {
                    DMatrix::identity(self.ny(), self.ny())
                } else {
                    &self.c * self.a.pow((j - 1) as u32) * &self.k
                }
            }
        }
    }

    /// Extended observability matrix: vertical stack of `C, CA, ..., CA^(f-1)`.
    pub fn extended_observability(&self, f: usize) -> Result<DMatrix<f64>> {
        if f == 0 {
            return Err(Error::EmptyHorizon);
        }
        let (nx, ny) = (self.nx(), self.ny());
        let mut gamma = DMatrix::zeros(f * ny, nx);
        let mut block = self.c.clone();
        for r in 0..f {
            gamma.view_mut((r * ny, 0), (ny, nx)).copy_from(&block);
            if r + 1 < f {
                block = &block * &self.a;
            }
        }
        Ok(gamma)
    }

    /// Block-lower-triangular Toeplitz matrix of Markov parameters over a
    /// horizon of `f` steps; block `(r, c)` is the lag `r - c` parameter.
    pub fn toeplitz_markov(&self, f: usize, channel: Channel) -> Result<DMatrix<f64>> {
        if f == 0 {
            return Err(Error::EmptyHorizon);
        }
        let ny = self.ny();
        let bw = match channel {
            Channel::Input => self.nu(),
            Channel::Noise => self.ny(),
        };
        let lags: Vec<DMatrix<f64>> =
            (0..f).map(|j| self.markov_parameter(j, channel)).collect();
        let mut t = DMatrix::zeros(f * ny, f * bw);
        for r in 0..f {
            for c in 0..=r {
                t.view_mut((r * ny, c * bw), (ny, bw)).copy_from(&lags[r - c]);
            }
        }
        Ok(t)
    }

    /// Extended controllability matrix of the predictor form:
    /// `[Ac^(p-1) K ... Ac K  K | Ac^(p-1) B ... Ac B  B]` with `Ac = A - KC`.
    pub fn extended_controllability(&self, p: usize) -> Result<DMatrix<f64>> {
        if p == 0 {
            return Err(Error::EmptyHorizon);
        }
        let (nx, nu, ny) = (self.nx(), self.nu(), self.ny());
        let ac = self.a_closed();
        let mut lp = DMatrix::zeros(nx, p * (ny + nu));
        let mut kb = self.k.clone();
        let mut bb = self.b.clone();
        for j in 0..p {
            // powers grow right to left: block j holds Ac^j K and Ac^j B
            lp.view_mut((0, (p - 1 - j) * ny), (nx, ny)).copy_from(&kb);
            lp.view_mut((0, p * ny + (p - 1 - j) * nu), (nx, nu))
                .copy_from(&bb);
            if j + 1 < p {
                kb = &ac * kb;
                bb = &ac * bb;
            }
        }
        Ok(lp)
    }

    /// State covariance at time `k >= 1` via the exact recursion starting
    /// from `Sigma_{x,1} = 0`. The recursion stops early once the iterate
    /// is stationary to machine precision.
    pub fn state_covariance(&self, k: usize) -> DMatrix<f64> {
        assert!(k >= 1, "time index starts at 1");
        let nx = self.nx();
        let q = self.sigma_u * self.sigma_u * &self.b * self.b.transpose()
            + self.sigma_e * self.sigma_e * &self.k * self.k.transpose();
        let mut sigma = DMatrix::zeros(nx, nx);
        for _ in 1..k {
            let next = &self.a * &sigma * self.a.transpose() + &q;
            let delta = (&next - &sigma).norm();
            sigma = next;
            if delta <= 1e-15 * (1.0 + sigma.norm()) {
                break;
            }
        }
        // enforce exact symmetry against round-off drift
        (&sigma + sigma.transpose()) * 0.5
    }

    /// Validates the standing model conditions: spectral radii of `A`
    /// and `A - KC`, minimality ranks, and positive noise scales.
    pub fn validate(&self, noiseless: bool) -> ValidationReport {
        let rho_a = spectral_radius(&self.a);
        let rho_ac = spectral_radius(&self.a_closed());
        let obs = self
            .extended_observability(self.nx())
            .expect("nx >= 1");
        let ctrl = controllability_bk(self);
        let obs_rank = numerical_rank(&obs, self.nx());
        let ctrl_rank = numerical_rank(&ctrl, self.nx());
        let mut failures = Vec::new();
        if rho_a > 1.0 + EPS_RHO {
            failures.push(format!("rho(A) = {rho_a:.6} exceeds 1"));
        }
        if rho_ac >= 1.0 - EPS_RHO {
            failures.push(format!("rho(A - KC) = {rho_ac:.6} is not < 1"));
        }
        if obs_rank < self.nx() {
            failures.push(format!(
                "(A, C) not observable: rank {obs_rank} < {}",
                self.nx()
            ));
        }
        if ctrl_rank < self.nx() {
            failures.push(format!(
                "(A, [B K]) not controllable: rank {ctrl_rank} < {}",
                self.nx()
            ));
        }
        if self.sigma_e <= 0.0 && !noiseless {
            failures.push("sigma_e must be positive outside noiseless mode".into());
        }
        if self.sigma_u <= 0.0 {
            failures.push("sigma_u must be positive".into());
        }
        ValidationReport {
            rho_a,
            rho_a_closed: rho_ac,
            observability_rank: obs_rank,
            controllability_rank: ctrl_rank,
            nx: self.nx(),
            failures,
        }
    }

    /// Simulates `n_bar` samples of the forward recursion from `x[1] = 0`
    /// with i.i.d. Gaussian input and innovations drawn from a ChaCha8 stream
    /// seeded by `seed`. The input sequence is drawn first, then the
    /// innovations, so the same seed always yields the same trajectory.
    pub fn simulate(&self, n_bar: usize, seed: u64, noiseless: bool) -> Result<Trajectory> {
        if n_bar == 0 {
            return Err(Error::EmptyTrajectory);
        }
        let (nu, ny) = (self.nu(), self.ny());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut u = DMatrix::zeros(nu, n_bar);
        for c in 0..n_bar {
            for r in 0..nu {
                let g: f64 = rng.sample(StandardNormal);
                u[(r, c)] = self.sigma_u * g;
            }
        }
        let mut e = DMatrix::zeros(ny, n_bar);
        if !noiseless {
            for c in 0..n_bar {
                for r in 0..ny {
                    let g: f64 = rng.sample(StandardNormal);
                    e[(r, c)] = self.sigma_e * g;
                }
            }
        }
        Ok(self.replay(u, e))
    }

    /// Runs the forward recursion from `x[1] = 0` with the given input and
    /// innovation sequences.
    pub fn replay(&self, u: DMatrix<f64>, e: DMatrix<f64>) -> Trajectory {
        let n_bar = u.ncols();
        assert_eq!(e.ncols(), n_bar, "input and innovation lengths differ");
        let (nx, ny) = (self.nx(), self.ny());
        let mut x = DMatrix::zeros(nx, n_bar);
        let mut y = DMatrix::zeros(ny, n_bar);
        for t in 0..n_bar {
            let xt = x.column(t).clone_owned();
            y.set_column(t, &(&self.c * &xt + e.column(t)));
            if t + 1 < n_bar {
                let next = &self.a * &xt + &self.b * u.column(t) + &self.k * e.column(t);
                x.set_column(t + 1, &next);
            }
        }
        Trajectory { u, y, x, e }
    }
}

/// Diagnostics from [`StateSpaceModel::validate`].
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub rho_a: f64,
    pub rho_a_closed: f64,
    pub observability_rank: usize,
    pub controllability_rank: usize,
    pub nx: usize,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Simulated input/output record, with the state and innovation sequences
/// retained for structural tests. Estimators never read `x` or `e`.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub u: DMatrix<f64>,
    pub y: DMatrix<f64>,
    pub x: DMatrix<f64>,
    pub e: DMatrix<f64>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.u.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.u.ncols() == 0
    }
}

/// Spectral radius via complex eigenvalues.
pub fn spectral_radius(m: &DMatrix<f64>) -> f64 {
    m.complex_eigenvalues()
        .iter()
        .map(|l| l.norm())
        .fold(0.0, f64::max)
}

/// Numerical rank with threshold `nx * eps * sigma_max`.
pub fn numerical_rank(m: &DMatrix<f64>, nx: usize) -> usize {
    let sv = m.singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    let tol = nx as f64 * f64::EPSILON * smax;
    sv.iter().filter(|&&s| s > tol).count()
}

/// Controllability matrix of `(A, [B K])` over `nx` blocks.
fn controllability_bk(m: &StateSpaceModel) -> DMatrix<f64> {
    let (nx, nu, ny) = (m.nx(), m.nu(), m.ny());
    let w = nu + ny;
    let mut bk = DMatrix::zeros(nx, w);
    bk.view_mut((0, 0), (nx, nu)).copy_from(m.b());
    bk.view_mut((0, nu), (nx, ny)).copy_from(m.k());
    let mut ctrl = DMatrix::zeros(nx, nx * w);
    let mut block = bk;
    for j in 0..nx {
        ctrl.view_mut((0, j * w), (nx, w)).copy_from(&block);
        if j + 1 < nx {
            block = m.a() * block;
        }
    }
    ctrl
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn random_two_state(seed: u64) -> StateSpaceModel {
        // stable 2-state model with eigenvalues well inside the unit disc
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

    #[test]
    fn s1_validates() {
        let report = StateSpaceModel::s1().validate(false);
        assert!(report.passed(), "{:?}", report.failures);
        assert_relative_eq!(report.rho_a, 0.5);
        assert_relative_eq!(report.rho_a_closed, 0.0);
    }

    #[test]
    fn unstable_a_fails() {
        let m = StateSpaceModel::new(
            DMatrix::from_element(1, 1, 1.1),
            DMatrix::from_element(1, 1, 1.0),
            DMatrix::from_element(1, 1, 1.0),
            DMatrix::from_element(1, 1, 0.5),
            0.1,
            1.0,
        )
        .unwrap();
        let report = m.validate(false);
        assert!(!report.passed());
        assert!(report.failures[0].contains("rho(A)"));
    }

    #[test]
    fn random_minimal_system_validates() {
        let m = random_two_state(7);
        let report = m.validate(false);
        assert!(report.passed(), "{:?}", report.failures);
        // oracle: eigenvalues and ranks computed directly
        assert!(spectral_radius(m.a()) < 1.0);
        assert_eq!(numerical_rank(&m.extended_observability(2).unwrap(), 2), 2);
    }

    #[test]
    fn simulate_zero_input_noiseless_is_zero() {
        let m = StateSpaceModel::s1();
        // noiseless with sigma_u = 0 leaves nothing to drive the state
        let m = StateSpaceModel::new(
            m.a().clone(),
            m.b().clone(),
            m.c().clone(),
            m.k().clone(),
            0.1,
            0.0,
        )
        .unwrap();
        let t = m.simulate(20, 1, true).unwrap();
        assert_eq!(t.y.norm(), 0.0);
        assert_eq!(t.x.norm(), 0.0);
    }

    #[test]
    fn impulse_response_matches_markov_parameters() {
        let m = StateSpaceModel::s1();
        let n = 8;
        let mut u = DMatrix::zeros(1, n);
        u[(0, 0)] = 1.0;
        let t = m.replay(u, DMatrix::zeros(1, n));
        for j in 0..n {
            let expected = if j == 0 { 0.0 } else { 0.5f64.powi(j as i32 - 1) };
            assert_relative_eq!(t.y[(0, j)], expected, epsilon = 1e-14);
        }
    }

    #[test]
    fn simulate_is_deterministic_in_seed() {
        let m = StateSpaceModel::s1();
        let a = m.simulate(64, 42, false).unwrap();
        let b = m.simulate(64, 42, false).unwrap();
        let c = m.simulate(64, 43, false).unwrap();
        assert_eq!(a.y, b.y);
        assert_eq!(a.u, b.u);
        assert_ne!(a.y, c.y);
    }

    #[test]
    fn simulate_replays_from_stored_inputs() {
        let m = random_two_state(3);
        let t = m.simulate(200, 9, false).unwrap();
        // rebuild x, y from stored u, e and the recursion
        let mut x = nalgebra::DVector::zeros(m.nx());
        for k in 0..t.len() {
            let y = m.c() * &x + t.e.column(k);
            assert!((y - t.y.column(k)).norm() <= 1e-12 * (1.0 + t.y.column(k).norm()));
            x = m.a() * &x + m.b() * t.u.column(k) + m.k() * t.e.column(k);
            if k + 1 < t.len() {
                assert!(
                    (&x - t.x.column(k + 1)).norm()
                        <= 1e-12 * (1.0 + t.x.column(k + 1).norm())
                );
            }
        }
    }

    #[test]
    fn empty_trajectory_is_an_error() {
        assert!(matches!(
            StateSpaceModel::s1().simulate(0, 0, false),
            Err(Error::EmptyTrajectory)
        ));
    }

    #[test]
    fn markov_parameters_scalar() {
        let m = StateSpaceModel::s1();
        assert_relative_eq!(m.markov_parameter(1, Channel::Input)[(0, 0)], 1.0);
        assert_relative_eq!(m.markov_parameter(2, Channel::Noise)[(0, 0)], 0.25);
        assert_relative_eq!(m.markov_parameter(0, Channel::Input)[(0, 0)], 0.0);
        assert_relative_eq!(m.markov_parameter(0, Channel::Noise)[(0, 0)], 1.0);
    }

    #[test]
    fn markov_parameter_matches_power_oracle() {
        let m = random_two_state(11);
        // repeated multiplication instead of matrix powers
        let mut a_pow = DMatrix::identity(2, 2);
        for _ in 0..2 {
            a_pow = m.a() * a_pow;
        }
        let expected = m.c() * &a_pow * m.b();
        assert_relative_eq!(
            m.markov_parameter(3, Channel::Input)[(0, 0)],
            expected[(0, 0)],
            epsilon = 1e-13
        );
    }

    #[test]
    fn observability_scalar_and_identity() {
        let m = StateSpaceModel::s1();
        let g = m.extended_observability(3).unwrap();
        assert_eq!(g.as_slice(), &[1.0, 0.5, 0.25]);

        let id = StateSpaceModel::new(
            DMatrix::identity(2, 2),
            DMatrix::identity(2, 2),
            DMatrix::identity(2, 2),
            DMatrix::from_element(2, 2, 0.1),
            0.1,
            1.0,
        )
        .unwrap();
        let g2 = id.extended_observability(2).unwrap();
        assert_eq!(g2.view((0, 0), (2, 2)), DMatrix::identity(2, 2));
        assert_eq!(g2.view((2, 0), (2, 2)), DMatrix::identity(2, 2));
    }

    #[test]
    fn observability_shift_structure() {
        let m = random_two_state(5);
        let f = 4;
        let ny = m.ny();
        let g = m.extended_observability(f).unwrap();
        let g_short = m.extended_observability(f - 1).unwrap();
        let shifted = g.view((ny, 0), ((f - 1) * ny, m.nx())).clone_owned();
        let expected = &g_short * m.a();
        assert!((shifted - expected).norm() < 1e-13);
    }

    #[test]
    fn toeplitz_scalar_blocks() {
        let m = StateSpaceModel::s1();
        let g = m.toeplitz_markov(2, Channel::Input).unwrap();
        assert_eq!(g, DMatrix::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0]));
        let h = m.toeplitz_markov(2, Channel::Noise).unwrap();
        assert_eq!(h, DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.5, 1.0]));
    }

    #[test]
    fn toeplitz_blockwise_oracle() {
        let m = random_two_state(13);
        let f = 3;
        let (ny, nu) = (m.ny(), m.nu());
        let t = m.toeplitz_markov(f, Channel::Input).unwrap();
        for r in 0..f {
            for c in 0..f {
                let block = t.view((r * ny, c * nu), (ny, nu)).clone_owned();
                if c > r {
                    assert_eq!(block.norm(), 0.0);
                } else {
                    let expected = m.markov_parameter(r - c, Channel::Input);
                    assert!((block - expected).norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn controllability_scalar() {
        let m = StateSpaceModel::s1();
        let lp2 = m.extended_controllability(2).unwrap();
        assert_eq!(lp2.as_slice(), &[0.0, 0.5, 0.0, 1.0]);
        let lp1 = m.extended_controllability(1).unwrap();
        assert_eq!(lp1.as_slice(), &[0.5, 1.0]);
    }

    #[test]
    fn controllability_power_oracle() {
        let m = random_two_state(17);
        let p = 3;
        let (ny, nu, nx) = (m.ny(), m.nu(), m.nx());
        let lp = m.extended_controllability(p).unwrap();
        let ac = m.a_closed();
        for j in 0..p {
            let mut pow = DMatrix::identity(nx, nx);
            for _ in 0..j {
                pow = &ac * pow;
            }
            let kb = lp.view((0, (p - 1 - j) * ny), (nx, ny)).clone_owned();
            let bb = lp
                .view((0, p * ny + (p - 1 - j) * nu), (nx, nu))
                .clone_owned();
            assert!((kb - &pow * m.k()).norm() < 1e-14);
            assert!((bb - &pow * m.b()).norm() < 1e-14);
        }
    }

    #[test]
    fn state_covariance_starts_at_zero_and_reaches_fixed_point() {
        let m = StateSpaceModel::s1();
        assert_eq!(m.state_covariance(1).norm(), 0.0);
        let fixed = (1.0 + 0.0025) / (1.0 - 0.25);
        assert_relative_eq!(m.state_covariance(10_000)[(0, 0)], fixed, epsilon = 1e-12);
    }

    #[test]
    fn state_covariance_monotone_in_k() {
        let m = random_two_state(19);
        let mut prev = m.state_covariance(1);
        for k in 2..30 {
            let cur = m.state_covariance(k);
            let diff = &cur - &prev;
            let eig = diff.symmetric_eigen();
            assert!(eig.eigenvalues.iter().all(|&l| l >= -1e-12));
            prev = cur;
        }
    }

    #[test]
    fn json_round_trip() {
        let m = random_two_state(23);
        let v = m.to_json();
        let back = StateSpaceModel::from_json(&v).unwrap();
        assert_eq!(m, back);
        // schema keys are the matrix names
        assert!(v.get("A").is_some() && v.get("sigma_u").is_some());
    }
}
