//! Samples and chunks: the units of streaming.

use ndarray::Array1;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One observation: a feature vector and its class index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledSample {
    pub x: Array1<f64>,
    pub label: usize,
}

impl LabeledSample {
    /// Build a sample, checking that every feature is finite and the label
    /// fits the class count.
    pub fn new(x: Array1<f64>, label: usize, classes: usize) -> Result<Self> {
        if let Some(bad) = x.iter().find(|v| !v.is_finite()) {
            return Err(Error::OutOfRange {
                what: "feature value",
                value: *bad,
            });
        }
        if label >= classes {
            return Err(Error::OutOfRange {
                what: "class label",
                value: label as f64,
            });
        }
        Ok(LabeledSample { x, label })
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }
}

/// A fixed-size block of samples sharing one feature dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DataChunk {
    samples: Vec<LabeledSample>,
}

impl DataChunk {
    pub fn new(samples: Vec<LabeledSample>) -> Result<Self> {
        let first = samples.first().ok_or(Error::InsufficientData("chunk"))?;
        let n = first.dim();
        for s in &samples {
            if s.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: s.dim(),
                });
            }
        }
        Ok(DataChunk { samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Feature dimension shared by every sample.
    pub fn dim(&self) -> usize {
        self.samples[0].dim()
    }

    pub fn samples(&self) -> &[LabeledSample] {
        &self.samples
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LabeledSample> {
        self.samples.iter()
    }
}

impl IntoIterator for DataChunk {
    type Item = LabeledSample;
    type IntoIter = std::vec::IntoIter<LabeledSample>;

    fn into_iter(self) -> Self::IntoIter {
        self.samples.into_iter()
    }
}

/// One-hot encoding of a class index, the regression target of the
/// consequent update.
pub fn one_hot(label: usize, classes: usize) -> Array1<f64> {
    let mut t = Array1::zeros(classes);
    t[label] = 1.0;
    t
}
