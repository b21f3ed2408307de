//! Fast hull-cover: shoot rays along hull edges, merge the components a ray
//! runs into, keep the shot rays as obstacles, and finally keep the
//! outermost hulls.

pub mod components;
pub mod engine;
pub mod maximal;
pub mod shooter;

pub use components::{ComponentSet, EdgeEntry, EdgeWorklist};
pub use engine::{hull_cover_fast, hull_cover_with, EngineError, HullCoverRun, HullOptions, RayRecord, Stats};
pub use maximal::{maximal_regions, outermost_containers, weakly_disjoint};
pub use shooter::{ray_hit, BvhShooter, Hit, LinearShooter, Obstacle, ObstacleId, RayShooter, Shot};
