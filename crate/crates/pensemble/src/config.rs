//! Runtime configuration shared by the ensemble and its base learners.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// All tunable knobs of the engine.
///
/// Ensemble-level parameters come first, then the feature-selection
/// parameters, then the base-learner thresholds. Every field can be
/// overridden from the CLI with `--set key=value`, where `key` matches the
/// field name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    /// Decreasing factor: a wrong expert's weight is multiplied by `p`.
    pub p: f64,
    /// Weight-prune threshold: experts with normalized weight below `theta`
    /// are removed (the sole remaining expert is always kept).
    pub theta: f64,
    /// Warning-level confidence of the drift detector.
    pub alpha_w: f64,
    /// Drift-level confidence of the drift detector.
    pub alpha_d: f64,
    /// Confidence of the generalization-error slack term.
    pub eta: f64,
    /// Radius of the perturbation neighborhood in the sensitivity measure.
    pub q_radius: f64,
    /// Learning rate of the online feature-selection gradient step.
    pub alpha_fs: f64,
    /// Regularization factor of the feature-selection step; also fixes the
    /// projection ball radius `1/sqrt(chi)`.
    pub chi: f64,
    /// Feature budget: number of input attributes kept active. `None` keeps
    /// all of them.
    pub budget: Option<usize>,
    /// Base learner: datum-significance growth threshold.
    pub g_ds: f64,
    /// Base learner: volume guard as a fraction of the geometric-mean
    /// feature range.
    pub rho_vol: f64,
    /// Base learner: rule-significance prune threshold (relative to the best
    /// rule).
    pub theta_ers: f64,
    /// Base learner: density prune threshold (relative to the densest rule).
    pub theta_pp: f64,
    /// Base learner: quadratic weight-decay strength in the consequent
    /// update.
    pub gamma_decay: f64,
    /// Base learner: initial scale of the per-rule output covariance.
    pub omega_init: f64,
    /// Base learner: overlap factor sizing a new rule from its nearest
    /// neighbor.
    pub k_ov: f64,
    /// Seed recorded with the model; the harness derives stream seeds from
    /// its run seed.
    pub seed: u64,
}

impl Default for EnsembleConfig {
    fn default() -> Self {
        EnsembleConfig {
            p: 0.1,
            theta: 0.01,
            alpha_w: 0.005,
            alpha_d: 0.001,
            eta: 0.05,
            q_radius: 1.0,
            alpha_fs: 0.2,
            chi: 0.01,
            budget: None,
            g_ds: 0.05,
            rho_vol: 0.3,
            theta_ers: 0.1,
            theta_pp: 0.1,
            gamma_decay: 1e-4,
            omega_init: 1e5,
            k_ov: 0.5,
            seed: 0,
        }
    }
}

fn in_open_unit(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v < 1.0 {
        Ok(())
    } else {
        Err(Error::Config(format!("{name} must lie in (0,1), got {v}")))
    }
}

fn in_half_open_unit(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v <= 1.0 {
        Ok(())
    } else {
        Err(Error::Config(format!("{name} must lie in (0,1], got {v}")))
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::Config(format!("{name} must be positive, got {v}")))
    }
}

impl EnsembleConfig {
    /// Check every documented parameter range.
    pub fn validate(&self) -> Result<()> {
        in_open_unit("p", self.p)?;
        in_open_unit("theta", self.theta)?;
        in_half_open_unit("alpha_w", self.alpha_w)?;
        in_half_open_unit("alpha_d", self.alpha_d)?;
        in_open_unit("eta", self.eta)?;
        positive("q_radius", self.q_radius)?;
        positive("alpha_fs", self.alpha_fs)?;
        positive("chi", self.chi)?;
        if let Some(b) = self.budget {
            if b == 0 {
                return Err(Error::Config("budget must be at least 1".into()));
            }
        }
        positive("g_ds", self.g_ds)?;
        positive("rho_vol", self.rho_vol)?;
        in_open_unit("theta_ers", self.theta_ers)?;
        in_open_unit("theta_pp", self.theta_pp)?;
        if self.gamma_decay < 0.0 || !self.gamma_decay.is_finite() {
            return Err(Error::Config(format!(
                "gamma_decay must be non-negative, got {}",
                self.gamma_decay
            )));
        }
        positive("omega_init", self.omega_init)?;
        positive("k_ov", self.k_ov)?;
        Ok(())
    }

    /// Effective feature budget for an `n`-dimensional input space.
    pub fn budget_for(&self, n: usize) -> usize {
        self.budget.unwrap_or(n).min(n).max(1)
    }

    /// Override one field by name, as the CLI `--set key=value` flag does.
    pub fn set_key(&mut self, key: &str, value: &str) -> Result<()> {
        fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T>
        where
            T::Err: std::fmt::Display,
        {
            value
                .parse()
                .map_err(|e| Error::Config(format!("cannot parse value for {key}: {e}")))
        }
        let bad = |e: std::num::ParseFloatError| {
            Error::Config(format!("cannot parse value for {key}: {e}"))
        };
        match key {
            "p" => self.p = value.parse().map_err(bad)?,
            "theta" => self.theta = value.parse().map_err(bad)?,
            "alpha_w" => self.alpha_w = value.parse().map_err(bad)?,
            "alpha_d" => self.alpha_d = value.parse().map_err(bad)?,
            "eta" => self.eta = value.parse().map_err(bad)?,
            "q_radius" => self.q_radius = value.parse().map_err(bad)?,
            "alpha_fs" => self.alpha_fs = value.parse().map_err(bad)?,
            "chi" => self.chi = value.parse().map_err(bad)?,
            "budget" => self.budget = Some(value.parse().map_err(bad)?),
            "g_ds" => self.g_ds = value.parse().map_err(bad)?,
            "rho_vol" => self.rho_vol = value.parse().map_err(bad)?,
            "theta_ers" => self.theta_ers = value.parse().map_err(bad)?,
            "theta_pp" => self.theta_pp = value.parse().map_err(bad)?,
            "gamma_decay" => self.gamma_decay = value.parse().map_err(bad)?,
            "omega_init" => self.omega_init = value.parse().map_err(bad)?,
            "k_ov" => self.k_ov = value.parse().map_err(bad)?,
            "seed" => self.seed = value.parse().map_err(bad)?,
            _ => return Err(Error::Config(format!("unknown config key: {key}"))),
        }
        Ok(())
    }
}
