//! Gauss-Legendre quadrature and normalized associated Legendre functions.
//!
//! The normalization used throughout the crate makes the real spherical
//! harmonics orthonormal under the *normalized* sphere measure
//! (total mass 1):
//!
//! ```text
//!   Y_k^0      = Pbar_k^0(cos t)
//!   Y_k^{ m}   = sqrt(2) * Pbar_k^m(cos t) * cos(m p),  m > 0
//!   Y_k^{-m}   = sqrt(2) * Pbar_k^m(cos t) * sin(m p),  m > 0
//! ```
//!
//! with `int_{-1}^{1} Pbar_k^m(x)^2 dx = 2`. In particular
//! `Pbar_k^0 = sqrt(2k+1) P_k` and `Y_1^0 = sqrt(3) x3`.

/// Gauss-Legendre nodes and weights on [-1, 1].
///
/// Nodes are returned in descending order so that row 0 of a grid is the
/// northernmost ring. Weights sum to 2 and the set is exactly symmetric
/// about 0 (enforced by averaging the Newton-refined halves).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2, "need at least two quadrature nodes");
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess, then Newton on P_n.
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_p_and_dp(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_p_and_dp(n, z);
        dp = d;
        let weight = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = weight;
        w[n - 1 - i] = weight;
    }
    if n % 2 == 1 {
        x[m - 1] = 0.0;
        let (_, d) = legendre_p_and_dp(n, 0.0);
        w[m - 1] = 2.0 / (d * d);
    }
    (x, w)
}

/// P_n(x) and its derivative by the three-term recurrence.
fn legendre_p_and_dp(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    // (1-x^2) P_n' = n (P_{n-1} - x P_n)
    let dp = n as f64 * (p0 - x * p1) / (1.0 - x * x);
    (p1, dp)
}

/// Table of normalized associated Legendre values.
///
/// `plm[m]` is row-major with rows k = m..=l_max and one column per node:
/// entry `plm[m][(k - m) * n_nodes + j] = Pbar_k^m(x_j)`.
pub struct PlmTable {
    pub l_max: usize,
    pub n_nodes: usize,
    pub plm: Vec<Vec<f64>>,
}

impl PlmTable {
    pub fn new(l_max: usize, nodes: &[f64]) -> Self {
        let n = nodes.len();
        let mut plm = Vec::with_capacity(l_max + 1);
        for m in 0..=l_max {
            plm.push(vec![0.0; (l_max + 1 - m) * n]);
        }
        let mut table = PlmTable {
            l_max,
            n_nodes: n,
            plm,
        };
        for (j, &x) in nodes.iter().enumerate() {
            let s = (1.0 - x * x).max(0.0).sqrt();
            let mut rec = PlmRecurrence::start();
            for m in 0..=l_max {
                let mut col = PlmColumn::seed(&rec);
                for k in m..=l_max {
                    table.plm[m][(k - m) * n + j] = col.value();
                    col.advance(k, m, x);
                }
                rec.raise(m, s);
            }
        }
        table
    }

    /// Values Pbar_k^m(x_j) for k = m..=l_max at node j, as a slice stride.
    #[inline]
    pub fn value(&self, k: usize, m: usize, j: usize) -> f64 {
        self.plm[m][(k - m) * self.n_nodes + j]
    }
}

/// Tracks the sectoral seed Pbar_m^m = c_m s^m along increasing m.
pub(crate) struct PlmRecurrence {
    /// Pbar_m^m(x) for the current m.
    pub pmm: f64,
}

impl PlmRecurrence {
    pub fn start() -> Self {
        PlmRecurrence { pmm: 1.0 }
    }

    /// Move the sectoral value from m to m+1: Pbar_{m+1}^{m+1} = sqrt((2m+3)/(2m+2)) s Pbar_m^m.
    #[inline]
    pub fn raise(&mut self, m: usize, s: f64) {
        let mf = m as f64;
        self.pmm *= ((2.0 * mf + 3.0) / (2.0 * mf + 2.0)).sqrt() * s;
    }
}

/// Walks Pbar_k^m upward in k at fixed m, holding the rolling pair.
pub(crate) struct PlmColumn {
    prev: f64,
    curr: f64,
}

impl PlmColumn {
    #[inline]
    pub fn seed(rec: &PlmRecurrence) -> Self {
        PlmColumn {
            prev: 0.0,
            curr: rec.pmm,
        }
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.curr
    }

    /// Step k -> k+1 at fixed m.
    #[inline]
    pub fn advance(&mut self, k: usize, m: usize, x: f64) {
        let next = plm_next(k, m, x, self.curr, self.prev);
        self.prev = self.curr;
        self.curr = next;
    }
}

/// Pbar_{k+1}^m from (Pbar_k^m, Pbar_{k-1}^m).
#[inline]
pub(crate) fn plm_next(k: usize, m: usize, x: f64, curr: f64, prev: f64) -> f64 {
    let kf = k as f64;
    let mf = m as f64;
    if k == m {
        // Pbar_{m+1}^m = sqrt(2m+3) x Pbar_m^m
        (2.0 * mf + 3.0).sqrt() * x * curr
    } else {
        let kn = kf + 1.0;
        let a = ((4.0 * kn * kn - 1.0) / (kn * kn - mf * mf)).sqrt();
        let b = (((kn - 1.0) * (kn - 1.0) - mf * mf) / (4.0 * (kn - 1.0) * (kn - 1.0) - 1.0)).sqrt();
        a * (x * curr - b * prev)
    }
}

/// Coefficient in dPbar_k^m/dt = k x q_k^m - dtheta_coupling(k,m) q_{k-1}^m
/// where q = Pbar / sin t.
#[inline]
pub(crate) fn dtheta_coupling(k: usize, m: usize) -> f64 {
    let kf = k as f64;
    let mf = m as f64;
    if k == 0 {
        0.0
    } else {
        ((2.0 * kf + 1.0) * (kf * kf - mf * mf) / (2.0 * kf - 1.0)).sqrt()
    }
}

/// int_0^1 P_k(x) dx for k = 0..=l_max (unnormalized Legendre).
///
/// Used for hemisphere integrals of band-limited ring averages:
/// int_{-1}^{0} P_k = (-1)^k int_0^1 P_k.
pub fn legendre_half_integrals(l_max: usize) -> Vec<f64> {
    let mut out = vec![0.0; l_max + 1];
    out[0] = 1.0;
    if l_max >= 1 {
        out[1] = 0.5;
    }
    // P_k(0) by recurrence; int_0^1 P_k = (P_{k-1}(0) - P_{k+1}(0)) / (2k+1).
    let mut p_at_zero = vec![0.0; l_max + 3];
    p_at_zero[0] = 1.0;
    if l_max + 2 >= 1 {
        p_at_zero[1] = 0.0;
    }
    for k in 2..=(l_max + 2) {
        let kf = k as f64;
        p_at_zero[k] = -(kf - 1.0) * p_at_zero[k - 2] / kf;
    }
    for (k, slot) in out.iter_mut().enumerate().take(l_max + 1).skip(2) {
        *slot = (p_at_zero[k - 1] - p_at_zero[k + 1]) / (2.0 * k as f64 + 1.0);
    }
    out
}
