//! Slow, independent reference implementations used to check the fast path.
//!
//! Everything here works by enumeration over all pairs or triples of
//! inequalities or generators, so it does not share any of the angular
//! bookkeeping that [`crate::extreme`] and [`crate::hull`] rely on.

pub mod gen;
pub mod lp;
pub mod naive;

pub use gen::{gen_instance, parabola_polygon, Shape};
pub use lp::{contains_point, lp_max, LpResult};
pub use naive::{cone_equal, hull_naive, poly_equal, poly_includes, recession_rays, vrep_contains, vrep_naive, vrep_to_hpoly};
