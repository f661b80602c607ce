//! Brute-force checkers that produce ground truth for the main pipeline.
//!
//! None of these reuse the hull, evaluation or subdivision code of the other
//! modules: hulls are decided by a private simplex solver, region counts by
//! integer evaluation on a grid or by exact polygon clipping, and crossings by
//! bisection on caller-supplied evaluators.

mod crossing;
mod grid;
mod hull;
mod lp;
mod polygon;
mod sample;

pub use crossing::locate_crossing;
pub use grid::{
    grid_region_count, sign_components, GridBox, GridOutcome, GridRegionMap, GridReport, PlFunction,
    ResolutionCount, Schedule, SignCount, SignReport,
};
pub use polygon::{exact_region_count, exact_sign_components, level_set_segments};
pub use hull::{brute_force_hull, brute_force_upper_vertices, BRUTE_FORCE_DIM_CAP, BRUTE_FORCE_POINT_CAP};
pub use sample::{sample_equality, sample_points, Counterexample, SampleReport, DEFAULT_SEED};

#[cfg(test)]
mod tests;
