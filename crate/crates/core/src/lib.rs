//! Exact convex hull of two planar polyhedra given by halfplanes.
//!
//! Both inputs are lists of inequalities `a*x + b*y <= c` with rational
//! coefficients. [`hull`] returns the smallest such list whose feasible set
//! contains both, without ever building a vertex description of the result
//! from scratch: each input is turned into points and rays ([`extreme`]), rays
//! are replaced by far-away points, and a Graham scan over the combined
//! points yields the edges.
//!
//! ```
//! use planar_hull::{hull, HPoly, Ineq};
//!
//! let square = |lo: i64, hi: i64| -> HPoly {
//!     [(1, 0, hi), (0, 1, hi), (-1, 0, -lo), (0, -1, -lo)]
//!         .iter()
//!         .map(|&(a, b, c)| Ineq::int(a, b, c).unwrap())
//!         .collect()
//! };
//! let h = hull(&square(0, 1), &square(2, 3)).unwrap();
//! assert_eq!(h.len(), 6);
//! ```

pub mod decompose;
pub mod error;
pub mod geometry;
pub mod io;
pub mod normalize;
pub mod oracle;
pub mod poly;
pub mod reconstruct;

pub use decompose::{boundary_point, decompose, extreme, Decomposition};
pub use error::{Error, Result};
pub use geometry::{
    connect, gap_ge_pi, in_box, int, intersect, orient, pivot_compare, rat, saturates, theta_compare, Dir, Ineq,
    Point, Rational,
};
pub use io::{emit_hpoly, parse_hpoly, ParseError};
pub use normalize::{canonical_poly, is_normalized, is_satisfiable, normalize, remove_redundant};
pub use poly::{HPoly, VRep};
pub use reconstruct::{box_size, centroid, hull, hull_with, scan, sort_ccw, translate, HullOptions, HullStats};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/inequalities.md")]
    mod inequalities {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/reconstruction.md")]
    mod reconstruction {}
    #[doc = include_str!("../../../book/src/normalization.md")]
    mod normalization {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/testing.md")]
    mod testing {}
}
