//! Input forests, their validation and I/O, seeded generators, and the
//! cover output type.

pub mod cover;
pub mod generate;
pub mod instance;
pub mod io;
pub mod validate;

pub use cover::{Cover, Region};
pub use generate::{generate, GenError, GenKind, GenParams};
pub use instance::{GeometricTree, Instance};
pub use io::{parse_instance, parse_instance_scaled, serialize_instance, ParseError};
pub use validate::{validate_instance, Rule, ValidationReport, Violation, Warning};
