//! Scalar spherical-harmonic analysis and synthesis.
//!
//! Longitude is handled by direct trigonometric sums against precomputed
//! cos/sin tables (only orders m <= l_max are ever needed), colatitude by
//! Gauss-Legendre quadrature against the normalized associated Legendre
//! tables. Both directions are exact for band-limited fields: the
//! longitude rule needs n_phi >= 2 l_max + 1 and the Gauss rule covers
//! polynomial degree 2 n_theta - 1 >= 2 l_max.

use ndarray::Array2;
use rayon::prelude::*;

use super::coeffs::HarmonicCoeffs;
use super::legendre::PlmTable;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

pub struct SphereTransform {
    pub l_max: usize,
    pub n_theta: usize,
    pub n_phi: usize,
    /// cos(theta_j), descending (row 0 is the northernmost ring).
    pub nodes_x: Vec<f64>,
    pub sin_theta: Vec<f64>,
    /// Gauss-Legendre weights, sum 2.
    pub gl_weights: Vec<f64>,
    pub plm: PlmTable,
    /// cos(m phi_i), sin(m phi_i) for m = 0..=l_max.
    cos_mphi: Vec<Vec<f64>>,
    sin_mphi: Vec<Vec<f64>>,
}

impl SphereTransform {
    pub fn new(l_max: usize, n_theta: usize, n_phi: usize) -> Self {
        assert!(n_phi >= 2 * l_max + 1, "n_phi must be at least 2*l_max+1");
        assert!(2 * n_theta > 2 * l_max, "n_theta must exceed l_max");
        let (nodes_x, gl_weights) = super::legendre::gauss_legendre(n_theta);
        let sin_theta = nodes_x.iter().map(|x| (1.0 - x * x).sqrt()).collect();
        let plm = PlmTable::new(l_max, &nodes_x);
        let mut cos_mphi = Vec::with_capacity(l_max + 1);
        let mut sin_mphi = Vec::with_capacity(l_max + 1);
        for m in 0..=l_max {
            let mut c = Vec::with_capacity(n_phi);
            let mut s = Vec::with_capacity(n_phi);
            for i in 0..n_phi {
                let phi = 2.0 * std::f64::consts::PI * i as f64 / n_phi as f64;
                let a = m as f64 * phi;
                c.push(a.cos());
                s.push(a.sin());
            }
            cos_mphi.push(c);
            sin_mphi.push(s);
        }
        SphereTransform {
            l_max,
            n_theta,
            n_phi,
            nodes_x,
            sin_theta,
            gl_weights,
            plm,
            cos_mphi,
            sin_mphi,
        }
    }

    pub fn phi(&self, i: usize) -> f64 {
        2.0 * std::f64::consts::PI * i as f64 / self.n_phi as f64
    }

    /// Unit vector of grid node (j, i).
    pub fn node(&self, j: usize, i: usize) -> [f64; 3] {
        let x = self.nodes_x[j];
        let s = self.sin_theta[j];
        let phi = self.phi(i);
        [s * phi.cos(), s * phi.sin(), x]
    }

    /// Synthesis: coefficients to grid values (n_theta x n_phi).
    pub fn synthesize(&self, coeffs: &HarmonicCoeffs) -> Array2<f64> {
        assert!(coeffs.l_max() <= self.l_max, "coefficients exceed grid bandlimit");
        let l = coeffs.l_max();
        let nt = self.n_theta;
        let np = self.n_phi;
        let mut values = Array2::<f64>::zeros((nt, np));
        let rows: Vec<_> = values
            .axis_iter_mut(ndarray::Axis(0))
            .into_iter()
            .collect();
        rows.into_par_iter().enumerate().for_each(|(j, mut row)| {
            // ring Fourier coefficients from the Legendre sums
            for m in 0..=l {
                let mut gc = 0.0;
                let mut gs = 0.0;
                for k in m..=l {
                    let p = self.plm.value(k, m, j);
                    gc += coeffs.get(k, m as i64) * p;
                    if m > 0 {
                        gs += coeffs.get(k, -(m as i64)) * p;
                    }
                }
                if m == 0 {
                    for v in row.iter_mut() {
                        *v += gc;
                    }
                } else {
                    let cm = &self.cos_mphi[m];
                    let sm = &self.sin_mphi[m];
                    for (i, v) in row.iter_mut().enumerate() {
                        *v += SQRT_2 * (gc * cm[i] + gs * sm[i]);
                    }
                }
            }
        });
        values
    }

    /// Analysis: grid values to coefficients at bandlimit `l_max_out`.
    ///
    /// Exact for fields band-limited at `l_max_out`; otherwise returns the
    /// quadrature projection (spectral truncation with aliasing controlled
    /// by the grid margin).
    pub fn analyze(&self, values: &Array2<f64>, l_max_out: usize) -> HarmonicCoeffs {
        assert!(l_max_out <= self.l_max, "requested bandlimit exceeds grid tables");
        assert_eq!(values.dim(), (self.n_theta, self.n_phi), "grid shape mismatch");
        let nt = self.n_theta;
        let np = self.n_phi;
        let inv_np = 1.0 / np as f64;

        // Ring transforms A_m(j) = (1/2 pi) int f cos(m phi) d phi, same with sin.
        let mut ring_cos = vec![vec![0.0; nt]; l_max_out + 1];
        let mut ring_sin = vec![vec![0.0; nt]; l_max_out + 1];
        let cols: Vec<(usize, (&mut Vec<f64>, &mut Vec<f64>))> = ring_cos
            .iter_mut()
            .zip(ring_sin.iter_mut())
            .enumerate()
            .collect();
        cols.into_par_iter().for_each(|(m, (rc, rs))| {
            let cm = &self.cos_mphi[m];
            let sm = &self.sin_mphi[m];
            for j in 0..nt {
                let row = values.row(j);
                let mut ac = 0.0;
                let mut as_ = 0.0;
                for (i, v) in row.iter().enumerate() {
                    ac += v * cm[i];
                    as_ += v * sm[i];
                }
                rc[j] = ac * inv_np;
                rs[j] = as_ * inv_np;
            }
        });

        // Legendre quadrature in colatitude.
        let mut out = HarmonicCoeffs::zeros(l_max_out);
        for m in 0..=l_max_out {
            for k in m..=l_max_out {
                let mut cc = 0.0;
                let mut cs = 0.0;
                for j in 0..nt {
                    let wp = self.gl_weights[j] * self.plm.value(k, m, j);
                    cc += wp * ring_cos[m][j];
                    cs += wp * ring_sin[m][j];
                }
                if m == 0 {
                    out.set(k, 0, 0.5 * cc);
                } else {
                    out.set(k, m as i64, cc / SQRT_2);
                    out.set(k, -(m as i64), cs / SQRT_2);
                }
            }
        }
        out
    }
}
