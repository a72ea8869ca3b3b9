//! Bringing arbitrary halfplane lists into the form [`crate::hull`] expects:
//! satisfiable, free of redundant inequalities, sorted by orientation.
//!
//! Redundancy is decided with the exact enumeration LP from
//! [`crate::oracle::lp_max`], which costs `O(n^3)` per probe. This module is
//! not on the hull's fast path.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geometry::theta_compare;
use crate::oracle::lp::{feasible_candidates, lp_max};
use crate::poly::HPoly;

pub fn is_satisfiable(e: &HPoly) -> bool {
    e.is_universe() || !feasible_candidates(e).is_empty()
}

/// Whether dropping `e.ineqs()[i]` leaves the feasible set unchanged.
pub fn is_redundant_at(e: &HPoly, i: usize) -> bool {
    let f = &e.ineqs()[i];
    lp_max(&e.without(i), &f.normal()).at_most(f.c())
}

/// Satisfiable with no redundant inequality.
pub fn is_normalized(e: &HPoly) -> bool {
    is_satisfiable(e) && (0..e.len()).all(|i| !is_redundant_at(e, i))
}

/// A subset with the same feasible set and nothing left to drop.
///
/// Among inequalities with the same orientation only the tightest can
/// survive. The rest are probed in orientation order and dropped as soon as
/// they are found redundant against what remains.
pub fn remove_redundant(e: &HPoly) -> Result<HPoly> {
    if !is_satisfiable(e) {
        return Err(Error::Unsatisfiable);
    }
    let mut v = e.ineqs().to_vec();
    v.sort_by(|f, g| theta_compare(f, g).then_with(|| f.c().cmp(g.c())));
    v.dedup_by(|later, kept| later.same_theta(kept));
    let mut cur = HPoly::new(v);
    let mut i = 0;
    while i < cur.len() {
        if is_redundant_at(&cur, i) {
            cur = cur.without(i);
        } else {
            i += 1;
        }
    }
    Ok(cur)
}

/// Orientation-sorted copy. Coefficients are canonical by construction.
pub fn canonical_poly(e: &HPoly) -> HPoly {
    let mut v = e.ineqs().to_vec();
    v.sort_by(|f, g| match theta_compare(f, g) {
        Ordering::Equal => f.c().cmp(g.c()),
        o => o,
    });
    HPoly::new(v)
}

/// Satisfiability check, redundancy removal and canonical ordering.
pub fn normalize(e: &HPoly) -> Result<HPoly> {
    remove_redundant(e).map(|r| canonical_poly(&r))
}
