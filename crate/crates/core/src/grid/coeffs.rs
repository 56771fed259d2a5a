//! Real spherical-harmonic coefficient vectors.

use crate::error::{Error, Result};

/// Coefficients of a real band-limited field, indexed by degree k and
/// order m with 0 <= k <= l_max and |m| <= k. Storage is the flat layout
/// `idx(k, m) = k^2 + k + m`, so a full vector has `(l_max+1)^2` entries.
///
/// The basis is orthonormal under the normalized sphere measure; the
/// (0,0) coefficient equals the mean of the field.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoeffs {
    l_max: usize,
    data: Vec<f64>,
}

impl HarmonicCoeffs {
    pub fn zeros(l_max: usize) -> Self {
        HarmonicCoeffs {
            l_max,
            data: vec![0.0; (l_max + 1) * (l_max + 1)],
        }
    }

    pub fn from_vec(l_max: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != (l_max + 1) * (l_max + 1) {
            return Err(Error::Precondition(format!(
                "coefficient vector length {} does not match bandlimit {} (expected {})",
                data.len(),
                l_max,
                (l_max + 1) * (l_max + 1)
            )));
        }
        Ok(HarmonicCoeffs { l_max, data })
    }

    #[inline]
    pub fn l_max(&self) -> usize {
        self.l_max
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn idx(k: usize, m: i64) -> usize {
        debug_assert!(m.unsigned_abs() as usize <= k);
        k * k + (k as i64 + m) as usize
    }

    #[inline]
    pub fn get(&self, k: usize, m: i64) -> f64 {
        self.data[Self::idx(k, m)]
    }

    #[inline]
    pub fn set(&mut self, k: usize, m: i64, v: f64) {
        self.data[Self::idx(k, m)] = v;
    }

    #[inline]
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Copy into a (possibly different) bandlimit, truncating or zero-padding.
    pub fn resized(&self, l_max: usize) -> HarmonicCoeffs {
        let mut out = HarmonicCoeffs::zeros(l_max);
        let l = self.l_max.min(l_max);
        for k in 0..=l {
            for m in -(k as i64)..=(k as i64) {
                out.set(k, m, self.get(k, m));
            }
        }
        out
    }

    /// Multiply every degree-k coefficient by f(k).
    pub fn scale_by_degree(&self, f: impl Fn(usize) -> f64) -> HarmonicCoeffs {
        let mut out = self.clone();
        for k in 0..=self.l_max {
            let s = f(k);
            for m in -(k as i64)..=(k as i64) {
                let i = Self::idx(k, m);
                out.data[i] = self.data[i] * s;
            }
        }
        out
    }

    /// Zero all coefficients of the given degree, returning how many were
    /// nonzero beforehand.
    pub fn zero_degree(&mut self, k: usize) -> usize {
        let mut nonzero = 0;
        for m in -(k as i64)..=(k as i64) {
            let i = Self::idx(k, m);
            if self.data[i] != 0.0 {
                nonzero += 1;
            }
            self.data[i] = 0.0;
        }
        nonzero
    }

    /// l2 norm of the coefficient vector (equals the L2(d omega) norm of
    /// the synthesized field by orthonormality).
    pub fn norm_l2(&self) -> f64 {
        self.data.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |a, c| a.max(c.abs()))
    }

    /// Spectral H1 seminorm: sum over (k,m) of k(k+1) c^2, square-rooted.
    pub fn seminorm_h1(&self) -> f64 {
        let mut acc = 0.0;
        for k in 1..=self.l_max {
            let eig = (k * (k + 1)) as f64;
            for m in -(k as i64)..=(k as i64) {
                let c = self.get(k, m);
                acc += eig * c * c;
            }
        }
        acc.sqrt()
    }

    pub fn axpy(&mut self, a: f64, other: &HarmonicCoeffs) {
        assert_eq!(self.l_max, other.l_max, "bandlimits differ");
        for (s, o) in self.data.iter_mut().zip(&other.data) {
            *s += a * o;
        }
    }

    pub fn scaled(&self, a: f64) -> HarmonicCoeffs {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= a;
        }
        out
    }

    pub fn dot(&self, other: &HarmonicCoeffs) -> f64 {
        assert_eq!(self.l_max, other.l_max, "bandlimits differ");
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }
}
