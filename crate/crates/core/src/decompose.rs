//! Halfplane systems to points and rays.
//!
//! After sorting by orientation, each inequality is compared with its two
//! angular neighbours. A neighbour gap below π means the two boundaries meet
//! in a vertex; a gap of π or more means the boundary runs off to infinity,
//! which contributes a ray along it instead.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{gap_ge_pi, intersect, theta_compare, Dir, Ineq, Point, Rational};
use crate::poly::{HPoly, VRep};

/// Result of [`decompose`], with bookkeeping used by tests and the benchmark.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub vrep: VRep,
    /// Whether an orientation sort was performed.
    pub sorted: bool,
    /// Loop iterations whose predecessor gap was at least π.
    pub open_before: usize,
    /// Loop iterations whose successor gap was at least π.
    pub open_after: usize,
}

/// Foot of the perpendicular from the origin onto the boundary of `e`.
pub fn boundary_point(e: &Ineq) -> Point {
    let a = Rational::from_integer(e.a().clone());
    let b = Rational::from_integer(e.b().clone());
    let norm2 = &a * &a + &b * &b;
    let t = e.c() / norm2;
    Point::new(a * &t, b * t)
}

/// Points and rays generating `[[e]]`. See [`decompose`].
pub fn extreme(e: &HPoly, assume_sorted: bool) -> Result<VRep> {
    decompose(e, assume_sorted).map(|d| d.vrep)
}

/// Convert a satisfiable, non-redundant system into points and rays.
///
/// With `assume_sorted` the system must already be in strictly increasing
/// orientation order (as produced by [`crate::normalize::canonical_poly`] or
/// [`crate::hull`]); this is checked in linear time and no sort happens.
///
/// Violations of the precondition that are visible locally (repeated
/// orientations, a vertex cut off by a neighbouring inequality, an empty
/// strip) are reported as [`Error::NotNormalized`].
pub fn decompose(e: &HPoly, assume_sorted: bool) -> Result<Decomposition> {
    if e.is_universe() {
        return Err(Error::NotNormalized("the empty system has no finite generator set".into()));
    }
    let sorted_storage;
    let es: &[Ineq] = if assume_sorted {
        if !e.is_theta_sorted() {
            return Err(Error::NotNormalized("input is not in increasing orientation order".into()));
        }
        e.ineqs()
    } else {
        let mut v = e.ineqs().to_vec();
        v.sort_by(theta_compare);
        if v.windows(2).any(|w| theta_compare(&w[0], &w[1]) == Ordering::Equal) {
            return Err(Error::NotNormalized("two inequalities share an orientation".into()));
        }
        sorted_storage = v;
        &sorted_storage
    };

    let n = es.len();
    let mut points = Vec::with_capacity(n);
    let mut rays = Vec::new();
    let (mut open_before, mut open_after) = (0, 0);

    if n == 1 {
        rays.push(Dir::new(-es[0].a().clone(), -es[0].b().clone())?);
    }
    for i in 0..n {
        let cur = &es[i];
        let prev = &es[(i + n - 1) % n];
        let next = &es[(i + 1) % n];
        let d_pre = n == 1 || gap_ge_pi(prev, cur);
        let d_post = n == 1 || gap_ge_pi(cur, next);
        if d_pre {
            open_before += 1;
            rays.push(Dir::new(cur.b().clone(), -cur.a().clone())?);
        }
        if d_post {
            open_after += 1;
            rays.push(Dir::new(-cur.b().clone(), cur.a().clone())?);
        } else {
            let v = intersect(cur, next).ok_or_else(|| {
                Error::NotNormalized(format!("{} and {} do not meet", cur, next))
            })?;
            if n >= 3 {
                let before = prev;
                let after = &es[(i + 2) % n];
                if !before.contains(&v) || !after.contains(&v) {
                    return Err(Error::NotNormalized(format!(
                        "vertex {} of {} and {} is infeasible",
                        v, cur, next
                    )));
                }
            }
            points.push(v);
        }
        if d_pre && d_post {
            let v = boundary_point(cur);
            if n == 2 && !next.contains(&v) {
                return Err(Error::Unsatisfiable);
            }
            points.push(v);
        }
    }
    if open_before > 2 || open_after > 2 {
        return Err(Error::NotNormalized("more than two unbounded boundary directions".into()));
    }
    debug_assert!(rays.iter().all(|r| !(r.dx.is_zero() && r.dy.is_zero())));

    let vrep = VRep::from_parts(points, rays);
    debug_assert!(vrep.rays.len() <= 4);
    Ok(Decomposition { vrep, sorted: !assume_sorted, open_before, open_after })
}
