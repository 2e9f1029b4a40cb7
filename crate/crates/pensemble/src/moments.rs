//! Running per-feature statistics: mean, central moments up to order four,
//! and range.
//!
//! The accumulators follow the single-pass update that extends the classic
//! one-pass mean/variance recurrence to third and fourth central moments, so
//! a batch recomputation over the same samples matches to rounding error.
//! All moments are population moments (divided by the count), since the
//! sensitivity formulas treat them as distribution parameters.

use ndarray::Array1;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureMoments {
    count: u64,
    mean: Array1<f64>,
    /// Sums of (x - mean)^k; divide by count for the central moments.
    m2: Array1<f64>,
    m3: Array1<f64>,
    m4: Array1<f64>,
    min: Array1<f64>,
    max: Array1<f64>,
}

impl FeatureMoments {
    pub fn new(dim: usize) -> Self {
        FeatureMoments {
            count: 0,
            mean: Array1::zeros(dim),
            m2: Array1::zeros(dim),
            m3: Array1::zeros(dim),
            m4: Array1::zeros(dim),
            min: Array1::from_elem(dim, f64::INFINITY),
            max: Array1::from_elem(dim, f64::NEG_INFINITY),
        }
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Fold one observation into the accumulators.
    pub fn update(&mut self, x: &Array1<f64>) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        if let Some(bad) = x.iter().find(|v| !v.is_finite()) {
            return Err(Error::OutOfRange {
                what: "feature value",
                value: *bad,
            });
        }
        let n1 = self.count as f64;
        self.count += 1;
        let n = self.count as f64;
        for j in 0..self.dim() {
            let xj = x[j];
            let delta = xj - self.mean[j];
            let delta_n = delta / n;
            let delta_n2 = delta_n * delta_n;
            let term1 = delta * delta_n * n1;
            self.mean[j] += delta_n;
            self.m4[j] += term1 * delta_n2 * (n * n - 3.0 * n + 3.0)
                + 6.0 * delta_n2 * self.m2[j]
                - 4.0 * delta_n * self.m3[j];
            self.m3[j] += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * self.m2[j];
            self.m2[j] += term1;
            if xj < self.min[j] {
                self.min[j] = xj;
            }
            if xj > self.max[j] {
                self.max[j] = xj;
            }
        }
        Ok(())
    }

    pub fn mean(&self) -> &Array1<f64> {
        &self.mean
    }

    /// Population variance per feature (zero before any observation).
    pub fn variance(&self) -> Array1<f64> {
        if self.count == 0 {
            return Array1::zeros(self.dim());
        }
        &self.m2 / self.count as f64
    }

    /// Third central moment per feature.
    pub fn third_central(&self) -> Array1<f64> {
        if self.count == 0 {
            return Array1::zeros(self.dim());
        }
        &self.m3 / self.count as f64
    }

    /// Fourth central moment per feature.
    pub fn fourth_central(&self) -> Array1<f64> {
        if self.count == 0 {
            return Array1::zeros(self.dim());
        }
        &self.m4 / self.count as f64
    }

    pub fn std_dev(&self) -> Array1<f64> {
        self.variance().mapv(f64::sqrt)
    }

    /// Per-feature observed range `max - min` (zero before any observation).
    pub fn range(&self) -> Array1<f64> {
        if self.count == 0 {
            return Array1::zeros(self.dim());
        }
        &self.max - &self.min
    }

    /// Center and scale a vector with the running statistics. Features with
    /// zero variance map to zero.
    pub fn standardize(&self, x: &Array1<f64>) -> Result<Array1<f64>> {
        if self.count == 0 {
            return Err(Error::InsufficientData("standardization"));
        }
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        let sd = self.std_dev();
        let mut z = Array1::zeros(self.dim());
        for j in 0..self.dim() {
            if sd[j] > 0.0 {
                z[j] = (x[j] - self.mean[j]) / sd[j];
            }
        }
        Ok(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use proptest::prelude::*;

    /// Two-pass batch oracle for the central moments.
    fn batch_moments(samples: &[f64]) -> (f64, f64, f64, f64) {
        let n = samples.len() as f64;
        let mean = samples.iter().sum::<f64>() / n;
        let central = |k: i32| samples.iter().map(|x| (x - mean).powi(k)).sum::<f64>() / n;
        (mean, central(2), central(3), central(4))
    }

    #[test]
    fn three_point_stream_matches_batch() {
        let mut m = FeatureMoments::new(1);
        for v in [1.0, 2.0, 3.0] {
            m.update(&array![v]).unwrap();
        }
        assert_eq!(m.mean()[0], 2.0);
        assert!((m.variance()[0] - 2.0 / 3.0).abs() < 1e-15);
        let (mean, v2, v3, v4) = batch_moments(&[1.0, 2.0, 3.0]);
        assert!((m.mean()[0] - mean).abs() < 1e-15);
        assert!((m.variance()[0] - v2).abs() < 1e-15);
        assert!((m.third_central()[0] - v3).abs() < 1e-15);
        assert!((m.fourth_central()[0] - v4).abs() < 1e-15);
    }

    #[test]
    fn single_sample_has_zero_spread() {
        let mut m = FeatureMoments::new(1);
        m.update(&array![5.0]).unwrap();
        assert_eq!(m.mean()[0], 5.0);
        assert_eq!(m.variance()[0], 0.0);
        assert_eq!(m.third_central()[0], 0.0);
        assert_eq!(m.fourth_central()[0], 0.0);
    }

    #[test]
    fn constant_stream_has_zero_spread() {
        let mut m = FeatureMoments::new(1);
        for _ in 0..50 {
            m.update(&array![7.0]).unwrap();
        }
        assert_eq!(m.variance()[0], 0.0);
        assert_eq!(m.third_central()[0], 0.0);
        assert_eq!(m.fourth_central()[0], 0.0);
        assert_eq!(m.range()[0], 0.0);
    }

    #[test]
    fn rejects_dimension_mismatch() {
        let mut m = FeatureMoments::new(2);
        assert!(m.update(&array![1.0]).is_err());
    }

    #[test]
    fn standardize_at_mean_is_zero() {
        let mut m = FeatureMoments::new(2);
        m.update(&array![1.0, -1.0]).unwrap();
        m.update(&array![3.0, 1.0]).unwrap();
        let z = m.standardize(&m.mean().clone()).unwrap();
        assert_eq!(z, array![0.0, 0.0]);
    }

    #[test]
    fn standardize_direct_formula() {
        // mean 0, population sd 2 from the stream {-2, 2}.
        let mut m = FeatureMoments::new(1);
        m.update(&array![-2.0]).unwrap();
        m.update(&array![2.0]).unwrap();
        assert_eq!(m.std_dev()[0], 2.0);
        let z = m.standardize(&array![4.0]).unwrap();
        assert_eq!(z[0], 2.0);
    }

    #[test]
    fn standardize_degenerate_feature_maps_to_zero() {
        let mut m = FeatureMoments::new(2);
        m.update(&array![1.0, 7.0]).unwrap();
        m.update(&array![2.0, 7.0]).unwrap();
        let z = m.standardize(&array![9.0, 9.0]).unwrap();
        assert_eq!(z[1], 0.0);
        assert!(z[0] > 0.0);
    }

    #[test]
    fn standardized_stream_converges_to_unit_stats() {
        // Feed a skewed deterministic pseudo-random stream; the standardized
        // outputs must approach mean 0 / variance 1.
        let mut m = FeatureMoments::new(1);
        let mut out = Vec::new();
        let mut state = 88172645463325252u64;
        for _ in 0..10_000 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let u = (state >> 11) as f64 / (1u64 << 53) as f64;
            let x = 3.0 + 2.0 * u * u; // skewed into [3, 5]
            m.update(&array![x]).unwrap();
            out.push(m.standardize(&array![x]).unwrap()[0]);
        }
        let n = out.len() as f64;
        let mean = out.iter().sum::<f64>() / n;
        let var = out.iter().map(|z| (z - mean) * (z - mean)).sum::<f64>() / n;
        assert!(mean.abs() < 0.05, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "var {var}");
    }

    proptest! {
        #[test]
        fn incremental_matches_batch(samples in proptest::collection::vec(-50.0f64..50.0, 2..200)) {
            let mut m = FeatureMoments::new(1);
            for &v in &samples {
                m.update(&array![v]).unwrap();
            }
            let (mean, v2, v3, v4) = batch_moments(&samples);
            let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(1.0);
            prop_assert!(rel(m.mean()[0], mean) < 1e-8);
            prop_assert!(rel(m.variance()[0], v2) < 1e-8);
            prop_assert!(rel(m.third_central()[0], v3) < 1e-8);
            prop_assert!(rel(m.fourth_central()[0], v4) < 1e-8);
            prop_assert!(m.m2[0] >= 0.0 && m.m4[0] >= 0.0);
        }
    }
}
