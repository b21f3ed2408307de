//! The abstract cover machinery: the region function φ, the reference merge
//! loop with its history forest, and checks that the result is independent
//! of merge order.

pub mod forest;
pub mod naive;
pub mod phi;
pub mod properties;
pub mod welldef;

pub use forest::{MergeForest, MergeNode};
pub use naive::{naive_phi_cover, MergePolicy, NaiveRun, PolicyError};
pub use phi::{Phi, CIRCLE_COVER_TOL};
pub use properties::{check_phi_properties, Counterexample, PointSetSampler, PropertyOutcome, PropertyReport};
pub use welldef::{check_well_defined, covers_equal, Outcome, Trials, Verdict, WellDefinedError, EXHAUSTIVE_MAX_TREES};
