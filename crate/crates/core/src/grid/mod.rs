//! Discretization of the unit sphere: quadrature grid, spherical-harmonic
//! transforms, differential operators, rotations, and the hemisphere and
//! great-circle integrals the symmetry diagnostics are built on.

pub mod coeffs;
pub mod eval;
pub mod legendre;
pub mod rotation;
pub mod transform;

use std::sync::Arc;

use nalgebra::Matrix3;
use ndarray::Array2;
use rayon::prelude::*;

pub use coeffs::HarmonicCoeffs;
pub use transform::SphereTransform;

use crate::error::{Error, Result};

/// Gauss-Legendre colatitude x equispaced longitude grid.
///
/// There are no nodes at the poles. Per-node quadrature weights sum to
/// 4 pi (unnormalized area); normalized integrals divide by 4 pi.
pub struct SphereGrid {
    pub l_max: usize,
    pub n_theta: usize,
    pub n_phi: usize,
    pub transform: SphereTransform,
    /// Unit vectors, row-major (j * n_phi + i).
    pub nodes: Vec<[f64; 3]>,
    /// Per-node area weights w_j * (2 pi / n_phi); sum = 4 pi.
    pub node_weights: Vec<f64>,
}

impl SphereGrid {
    pub fn new(l_max: usize, n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_phi < 2 * l_max + 1 || n_theta <= l_max {
            return Err(Error::Resolution {
                l_max,
                n_theta,
                n_phi,
            });
        }
        let transform = SphereTransform::new(l_max, n_theta, n_phi);
        let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
        let mut nodes = Vec::with_capacity(n_theta * n_phi);
        let mut node_weights = Vec::with_capacity(n_theta * n_phi);
        for j in 0..n_theta {
            let w = transform.gl_weights[j] * dphi;
            for i in 0..n_phi {
                nodes.push(transform.node(j, i));
                node_weights.push(w);
            }
        }
        Ok(SphereGrid {
            l_max,
            n_theta,
            n_phi,
            transform,
            nodes,
            node_weights,
        })
    }

    #[inline]
    pub fn node(&self, j: usize, i: usize) -> [f64; 3] {
        self.nodes[j * self.n_phi + i]
    }

    /// Normalized integral: sum of w f / 4 pi (total measure 1).
    pub fn quadrature(&self, values: &Array2<f64>) -> f64 {
        self.integral_ds(values) / (4.0 * std::f64::consts::PI)
    }

    /// Unnormalized surface integral (d S measure, total 4 pi).
    pub fn integral_ds(&self, values: &Array2<f64>) -> f64 {
        let mut acc = 0.0;
        for j in 0..self.n_theta {
            let mut row = 0.0;
            for i in 0..self.n_phi {
                row += values[(j, i)];
            }
            acc += row * self.node_weights[j * self.n_phi];
        }
        acc
    }

    /// Pointwise map over grid values.
    pub fn map_values(&self, values: &Array2<f64>, f: impl Fn(f64) -> f64 + Sync) -> Array2<f64> {
        let mut out = values.clone();
        out.mapv_inplace(f);
        out
    }
}

/// Shared discretization state: the working grid plus a 3/2-oversampled
/// companion used for dealiased pointwise nonlinearities.
pub struct SphereContext {
    pub grid: SphereGrid,
    pub over: SphereGrid,
    /// sqrt(2k+1) * int_0^1 P_k, for hemisphere integrals of ring averages.
    half_integrals: Vec<f64>,
}

impl SphereContext {
    pub fn new(l_max: usize, n_theta: usize, n_phi: usize) -> Result<Arc<Self>> {
        let grid = SphereGrid::new(l_max, n_theta, n_phi)?;
        let over = SphereGrid::new(l_max, (3 * n_theta).div_ceil(2), (3 * n_phi).div_ceil(2))?;
        let raw = legendre::legendre_half_integrals(l_max);
        let half_integrals = raw
            .iter()
            .enumerate()
            .map(|(k, v)| ((2 * k + 1) as f64).sqrt() * v)
            .collect();
        Ok(Arc::new(SphereContext {
            grid,
            over,
            half_integrals,
        }))
    }

    /// Default laboratory resolution.
    pub fn standard() -> Arc<Self> {
        Self::new(48, 64, 128).expect("standard resolution is valid")
    }

    pub fn l_max(&self) -> usize {
        self.grid.l_max
    }

    pub fn describe(&self) -> String {
        format!(
            "L={} {}x{}",
            self.grid.l_max, self.grid.n_theta, self.grid.n_phi
        )
    }

    /// Laplace-Beltrami in coefficient space: degree k scales by -k(k+1).
    pub fn laplacian(&self, coeffs: &HarmonicCoeffs) -> HarmonicCoeffs {
        coeffs.scale_by_degree(|k| -((k * (k + 1)) as f64))
    }

    /// Rotate a band-limited field: output(x) = input(R^T x).
    ///
    /// Exact up to transform roundoff since rotations preserve degree.
    pub fn rotate(&self, coeffs: &HarmonicCoeffs, r: &Matrix3<f64>) -> Result<HarmonicCoeffs> {
        rotation::validate_rotation(r)?;
        let rt = r.transpose();
        let values = self.evaluate_on_grid(coeffs, |p| rotation::apply(&rt, p));
        Ok(self.grid.transform.analyze(&values, coeffs.l_max()))
    }

    /// Evaluate `coeffs` at `map(node)` for every grid node.
    pub fn evaluate_on_grid(
        &self,
        coeffs: &HarmonicCoeffs,
        map: impl Fn([f64; 3]) -> [f64; 3] + Sync,
    ) -> Array2<f64> {
        let nt = self.grid.n_theta;
        let np = self.grid.n_phi;
        let mut values = Array2::<f64>::zeros((nt, np));
        let rows: Vec<_> = values
            .axis_iter_mut(ndarray::Axis(0))
            .into_iter()
            .collect();
        rows.into_par_iter().enumerate().for_each(|(j, mut row)| {
            for (i, v) in row.iter_mut().enumerate() {
                *v = eval::eval_value(coeffs, map(self.grid.node(j, i)));
            }
        });
        values
    }

    /// Ring averages of the field around `axis`: entry j is the mean of the
    /// field over the circle of colatitude theta_j (Gauss node) about the
    /// axis. Exact projection onto the zonal part for band-limited fields.
    pub fn ring_averages(&self, coeffs: &HarmonicCoeffs, axis: [f64; 3]) -> Vec<f64> {
        let r = rotation::rotation_to_pole(axis);
        let rt = r.transpose();
        let nt = self.grid.n_theta;
        let np = self.grid.n_phi;
        (0..nt)
            .into_par_iter()
            .map(|j| {
                let mut acc = 0.0;
                for i in 0..np {
                    acc += eval::eval_value(coeffs, rotation::apply(&rt, self.grid.node(j, i)));
                }
                acc / np as f64
            })
            .collect()
    }

    /// Integrals of a band-limited field over the closed hemispheres
    /// H_axis and H_{-axis} (dS measure). The field is rotated so the axis
    /// becomes the pole and the zonal profile, a polynomial of degree
    /// l_max in cos(colatitude), is integrated exactly over each half.
    pub fn hemisphere_pair(&self, coeffs: &HarmonicCoeffs, axis: [f64; 3]) -> (f64, f64) {
        let averages = self.ring_averages(coeffs, axis);
        self.hemisphere_pair_from_averages(&averages)
    }

    /// Same as `hemisphere_pair` but from precomputed ring averages.
    pub fn hemisphere_pair_from_averages(&self, averages: &[f64]) -> (f64, f64) {
        let l = self.grid.l_max;
        let t = &self.grid.transform;
        let mut north = 0.0;
        let mut south = 0.0;
        for k in 0..=l {
            let mut a_k = 0.0;
            for j in 0..self.grid.n_theta {
                a_k += 0.5 * t.gl_weights[j] * t.plm.value(k, 0, j) * averages[j];
            }
            let half = self.half_integrals[k];
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            north += a_k * half;
            south += a_k * half * sign;
        }
        let two_pi = 2.0 * std::f64::consts::PI;
        (two_pi * north, two_pi * south)
    }

    /// Line integral over the great circle C_axis of the gradient component
    /// along the axis: closed trapezoidal rule with n samples (spectrally
    /// accurate for smooth periodic integrands).
    pub fn circle_gradient_integral(
        &self,
        coeffs: &HarmonicCoeffs,
        axis: [f64; 3],
        n: usize,
    ) -> f64 {
        let (a, b) = rotation::circle_frame(axis);
        let mut acc = 0.0;
        for i in 0..n {
            let t = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            let (ct, st) = (t.cos(), t.sin());
            let p = [
                ct * a[0] + st * b[0],
                ct * a[1] + st * b[1],
                ct * a[2] + st * b[2],
            ];
            let g = eval::eval_gradient(coeffs, p);
            acc += g[0] * axis[0] + g[1] * axis[1] + g[2] * axis[2];
        }
        acc * 2.0 * std::f64::consts::PI / n as f64
    }
}
