//! An online classification engine for non-stationary data streams.
//!
//! The engine maintains an evolving ensemble of local experts. Each expert is
//! a self-organizing Takagi-Sugeno fuzzy rule base ([`pclass`]) that grows,
//! prunes and recalls rules as the stream unfolds. On top of the experts sit
//! four ensemble-level mechanisms:
//!
//! * weighted-majority voting with per-sample penalty/reward dynamics
//!   ([`ensemble`]),
//! * a non-parametric drift detector built on Hoeffding bounds ([`drift`]),
//! * an estimator of each expert's localized generalization error used to
//!   prune degrading experts ([`genloss`]),
//! * crisp online feature selection that activates and deactivates input
//!   attributes on the fly ([`gofs`]).
//!
//! [`streams`] provides deterministic synthetic stream generators and CSV
//! ingestion; [`harness`] runs the chunked train-then-test protocol, writes
//! metrics, and persists models.
//!
//! Runnable walkthroughs for every major capability live in `examples/`.

pub mod config;
pub mod data;
pub mod drift;
pub mod ensemble;
pub mod error;
pub mod genloss;
pub mod gofs;
pub mod harness;
pub(crate) mod linalg;
pub mod moments;
pub mod pclass;
pub mod streams;

pub use config::EnsembleConfig;
pub use data::{DataChunk, LabeledSample};
pub use drift::{DriftMonitor, DriftState};
pub use ensemble::{ChunkReport, LocalExpert, Pensemble};
pub use error::{Error, Result};
pub use gofs::FeatureMask;
pub use harness::{run_experiment, MetricsRow, RunConfig};
pub use moments::FeatureMoments;
pub use pclass::{FuzzyRule, RuleBase};
pub use streams::{StreamKind, StreamSpec};
