//! Pointwise evaluation of band-limited fields at arbitrary sphere points.
//!
//! Values and surface gradients are accumulated from quantities that stay
//! regular at the poles: for m >= 1 the recurrences run on
//! q_k^m = Pbar_k^m / sin t (a polynomial in cos t times sin^{m-1} t), and
//! the colatitude derivative uses
//!
//! ```text
//!   d Pbar_k^m / dt = k x q_k^m - e_k^m q_{k-1}^m            (m >= 1)
//!   d Pbar_k^0 / dt = -sqrt(k(k+1)) sin t q_k^1
//! ```
//!
//! so no expression ever divides by sin t. At a pole the longitude of the
//! evaluation point is immaterial: the assembled tangent vector is the
//! same for every choice.

use super::coeffs::HarmonicCoeffs;
use super::legendre::{dtheta_coupling, plm_next, PlmRecurrence};

/// Value of the field at a unit vector.
pub fn eval_value(coeffs: &HarmonicCoeffs, p: [f64; 3]) -> f64 {
    eval_impl(coeffs, p, false).0
}

/// Value and intrinsic surface gradient (a tangent vector at `p`).
pub fn eval_with_gradient(coeffs: &HarmonicCoeffs, p: [f64; 3]) -> (f64, [f64; 3]) {
    eval_impl(coeffs, p, true)
}

/// Surface gradient alone.
pub fn eval_gradient(coeffs: &HarmonicCoeffs, p: [f64; 3]) -> [f64; 3] {
    eval_impl(coeffs, p, true).1
}

fn eval_impl(coeffs: &HarmonicCoeffs, p: [f64; 3], want_gradient: bool) -> (f64, [f64; 3]) {
    let l = coeffs.l_max();
    let x = p[2].clamp(-1.0, 1.0);
    let s = p[0].hypot(p[1]);
    // Longitude unit vector; arbitrary at the poles (any choice yields the
    // same assembled tangent vector there).
    let (c1, s1) = if s > 0.0 { (p[0] / s, p[1] / s) } else { (1.0, 0.0) };

    let mut value = 0.0;
    let mut d_theta = 0.0;
    let mut d_phi_over_sin = 0.0;

    // m = 0: plain normalized Legendre in x.
    {
        let mut prev = 0.0;
        let mut curr = 1.0; // Pbar_0^0
        for k in 0..=l {
            value += coeffs.get(k, 0) * curr;
            let next = plm_next(k, 0, x, curr, prev);
            prev = curr;
            curr = next;
        }
    }

    // m >= 1 on q = Pbar / sin t; the m = 1 pass also accumulates the
    // zonal colatitude derivative through q_k^1.
    let mut rec = PlmRecurrence::start();
    rec.raise(0, 1.0); // pmm now c_1; sectoral factor s^{m-1} tracked separately
    let mut sect = 1.0; // s^{m-1}
    let (mut cm, mut sm) = (c1, s1);
    for m in 1..=l {
        let mf = m as f64;
        let mut prev = 0.0;
        let mut curr = rec.pmm * sect; // q_m^m = c_m s^{m-1}
        for k in m..=l {
            let a = coeffs.get(k, m as i64);
            let b = coeffs.get(k, -(m as i64));
            let proj = a * cm + b * sm;
            value += std::f64::consts::SQRT_2 * s * curr * proj;
            if want_gradient {
                let dp = k as f64 * x * curr - dtheta_coupling(k, m) * prev;
                d_theta += std::f64::consts::SQRT_2 * dp * proj;
                d_phi_over_sin +=
                    std::f64::consts::SQRT_2 * mf * curr * (-a * sm + b * cm);
                if m == 1 {
                    // d Pbar_k^0/dt = -sqrt(k(k+1)) sin t q_k^1
                    let c0 = coeffs.get(k, 0);
                    d_theta -= (k as f64 * (k as f64 + 1.0)).sqrt() * s * curr * c0;
                }
            }
            let next = plm_next(k, m, x, curr, prev);
            prev = curr;
            curr = next;
        }
        rec.raise(m, 1.0);
        sect *= s;
        let (cm2, sm2) = (cm * c1 - sm * s1, sm * c1 + cm * s1);
        cm = cm2;
        sm = sm2;
    }

    if !want_gradient {
        return (value, [0.0; 3]);
    }

    // e_theta and e_phi at (x, s, longitude (c1, s1)).
    let e_theta = [x * c1, x * s1, -s];
    let e_phi = [-s1, c1, 0.0];
    let grad = [
        d_theta * e_theta[0] + d_phi_over_sin * e_phi[0],
        d_theta * e_theta[1] + d_phi_over_sin * e_phi[1],
        d_theta * e_theta[2] + d_phi_over_sin * e_phi[2],
    ];
    (value, grad)
}

/// Evaluate the Laplace-Beltrami image of the field at a point without
/// materializing the full grid.
pub fn eval_laplacian(coeffs: &HarmonicCoeffs, p: [f64; 3]) -> f64 {
    let lap = coeffs.scale_by_degree(|k| -((k * (k + 1)) as f64));
    eval_value(&lap, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::transform::SphereTransform;
    use rand::{Rng, SeedableRng};

    fn random_coeffs(l: usize, seed: u64) -> HarmonicCoeffs {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut c = HarmonicCoeffs::zeros(l);
        for v in c.as_mut_slice() {
            *v = rng.gen::<f64>() * 2.0 - 1.0;
        }
        c
    }

    #[test]
    fn point_values_match_grid_synthesis() {
        let t = SphereTransform::new(10, 16, 32);
        let c = random_coeffs(10, 3);
        let vals = t.synthesize(&c);
        for (j, i) in [(0, 0), (5, 7), (15, 31), (8, 16)] {
            let p = t.node(j, i);
            let v = eval_value(&c, p);
            assert!((v - vals[(j, i)]).abs() < 1e-12);
        }
    }

    #[test]
    fn gradient_matches_tangential_finite_differences() {
        let c = random_coeffs(12, 11);
        let p = normalize([0.3, -0.55, 0.78]);
        let (_, g) = eval_with_gradient(&c, p);
        // tangent basis at p
        let t1 = normalize(cross(p, [0.0, 0.0, 1.0]));
        let t2 = normalize(cross(p, t1));
        let h = 1e-6;
        for t in [t1, t2] {
            let plus = normalize([p[0] + h * t[0], p[1] + h * t[1], p[2] + h * t[2]]);
            let minus = normalize([p[0] - h * t[0], p[1] - h * t[1], p[2] - h * t[2]]);
            let fd = (eval_value(&c, plus) - eval_value(&c, minus)) / (2.0 * h);
            let an = g[0] * t[0] + g[1] * t[1] + g[2] * t[2];
            assert!((fd - an).abs() < 1e-6, "fd {fd} vs analytic {an}");
        }
        // tangency
        let dot = g[0] * p[0] + g[1] * p[1] + g[2] * p[2];
        assert!(dot.abs() < 1e-10);
    }

    #[test]
    fn gradient_is_exact_at_the_poles() {
        // f = sqrt(3) x1 = Y_1^1: gradient at the north pole is sqrt(3) e1.
        let mut c = HarmonicCoeffs::zeros(4);
        c.set(1, 1, 1.0);
        let g = eval_gradient(&c, [0.0, 0.0, 1.0]);
        assert!((g[0] - 3f64.sqrt()).abs() < 1e-14);
        assert!(g[1].abs() < 1e-14);
        assert!(g[2].abs() < 1e-14);

        // f = Y_1^0: the pole is a critical point.
        let mut c = HarmonicCoeffs::zeros(4);
        c.set(1, 0, 1.0);
        let g = eval_gradient(&c, [0.0, 0.0, 1.0]);
        assert!(g.iter().all(|v| v.abs() < 1e-14));

        // south pole of Y_2^1 (gradient must also be finite and match the
        // limit along a meridian)
        let mut c = HarmonicCoeffs::zeros(4);
        c.set(2, 1, 0.7);
        c.set(2, -1, -0.3);
        let g_pole = eval_gradient(&c, [0.0, 0.0, -1.0]);
        let eps = 1e-7;
        let near = normalize([eps, 0.0, -1.0]);
        let g_near = eval_gradient(&c, near);
        for (a, b) in g_pole.iter().zip(&g_near) {
            assert!((a - b).abs() < 1e-6);
        }
    }

    #[test]
    fn coordinate_field_gradient_at_equator() {
        // f(x) = x3 has surface gradient (0,0,1) at (1,0,0).
        let mut c = HarmonicCoeffs::zeros(2);
        c.set(1, 0, 1.0 / 3f64.sqrt());
        let g = eval_gradient(&c, [1.0, 0.0, 0.0]);
        assert!((g[0]).abs() < 1e-14);
        assert!((g[1]).abs() < 1e-14);
        assert!((g[2] - 1.0).abs() < 1e-14);
    }

    fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    }

    fn normalize(v: [f64; 3]) -> [f64; 3] {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        [v[0] / n, v[1] / n, v[2] / n]
    }
}
