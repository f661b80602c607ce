//! Tropical hypersurfaces, linear-region counts and bounds, and decision
//! boundaries.

mod boundary;
mod count;
mod hypersurface;

pub use boundary::{decision_boundary, DecisionBoundary};
pub use count::{poly_region_count, region_bound, RegionReport};
pub use hypersurface::{hypersurface, CurveEdge, TropicalCurve, TropicalHypersurface};

#[cfg(test)]
mod tests;
