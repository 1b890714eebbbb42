//! Cross-range resolution limits for radar imaging of orbiting targets.
//!
//! The crate bundles the pieces needed to answer "what cross-range resolution
//! can a ground radar achieve on a given space target, and what does it cost":
//!
//! - [`scenario`] — configuration parsing, units and shared value types,
//! - [`orbit`] — two-body propagation, line-of-sight geometry, visibility
//!   passes and the cumulative rotation angle of the radar LOS,
//! - [`bounds`] — the Rayleigh limit and the computational resolution limit
//!   sandwich with its sensitivities and inversions,
//! - [`link`] — the tracking-radar range equation,
//! - [`tradeoff`] — coupled resource relations (power, duty cycle, CPI,
//!   energy) solved against the bounds,
//! - [`spectrum`] — a line-spectrum laboratory that validates the bound
//!   sandwich empirically with seeded Monte Carlo trials.

pub mod bounds;
pub mod constants;
pub mod link;
pub mod orbit;
pub mod scenario;
pub mod spectrum;
pub mod tradeoff;

pub use scenario::{DbValue, RadarParams, ScenarioConfig, StationGeodetic, TimeWindow};
