//! Fast box-cover: grow each tree's box by the stored boxes whose boundary
//! it meets, store the result, and finally keep the outermost boxes.

pub mod engine;
pub mod index;
pub mod maximal;

pub use engine::{box_cover_fast, box_cover_with, BoxCoverRun, BoxStats};
pub use index::{boundary_pieces, BvhIndex, LinearIndex, SegmentRangeIndex};
pub use maximal::{maximal_boxes, outermost_boxes};
