use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::decompose::boundary_point;
use crate::geometry::{intersect, Dir, Point, Rational};
use crate::poly::HPoly;

/// Outcome of maximising a linear objective over a halfplane system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Finite(Rational),
    Unbounded,
    Infeasible,
}

impl LpResult {
    /// The optimum does not exceed `bound`; an empty feasible set satisfies
    /// every bound.
    pub fn at_most(&self, bound: &Rational) -> bool {
        match self {
            LpResult::Finite(v) => v <= bound,
            LpResult::Unbounded => false,
            LpResult::Infeasible => true,
        }
    }
}

pub fn contains_point(e: &HPoly, p: &Point) -> bool {
    e.contains(p)
}

/// Every feasible pairwise boundary crossing plus every feasible
/// perpendicular foot. Nonempty exactly when the system is satisfiable.
pub(crate) fn feasible_candidates(e: &HPoly) -> Vec<Point> {
    let es = e.ineqs();
    let mut out = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            if let Some(p) = intersect(&es[i], &es[j]) {
                if e.contains(&p) {
                    out.push(p);
                }
            }
        }
    }
    for f in es {
        let p = boundary_point(f);
        if e.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Whether `(x, y)` is a nonnegative combination of `gens`.
pub(crate) fn in_cone(x: &BigInt, y: &BigInt, gens: &[(BigInt, BigInt)]) -> bool {
    if x.is_zero() && y.is_zero() {
        return true;
    }
    let cross = |ax: &BigInt, ay: &BigInt, bx: &BigInt, by: &BigInt| ax * by - ay * bx;
    for (gx, gy) in gens {
        if cross(gx, gy, x, y).is_zero() && (gx * x + gy * y).is_positive() {
            return true;
        }
    }
    for (i, (ax, ay)) in gens.iter().enumerate() {
        for (bx, by) in &gens[i + 1..] {
            let det = cross(ax, ay, bx, by);
            if det.is_zero() {
                continue;
            }
            // Coefficients by Cramer's rule, compared in sign only.
            let l1 = cross(x, y, bx, by);
            let l2 = cross(ax, ay, x, y);
            let s = det.signum();
            if !(l1 * &s).is_negative() && !(l2 * &s).is_negative() {
                return true;
            }
        }
    }
    false
}

/// Supremum of `d·x` over `[[e]]`, by exhaustive enumeration.
///
/// The system is bounded in direction `d` exactly when `d` lies in the cone
/// of the outward normals. A bounded optimum is attained at a candidate
/// point: a vertex if the feasible set has one, otherwise on a boundary line
/// whose perpendicular foot is feasible.
pub fn lp_max(e: &HPoly, d: &Dir) -> LpResult {
    if e.is_universe() {
        return LpResult::Unbounded;
    }
    let cands = feasible_candidates(e);
    if cands.is_empty() {
        return LpResult::Infeasible;
    }
    let normals: Vec<(BigInt, BigInt)> = e.ineqs().iter().map(|f| (f.a().clone(), f.b().clone())).collect();
    if !in_cone(&d.dx, &d.dy, &normals) {
        return LpResult::Unbounded;
    }
    let dx = Rational::from_integer(d.dx.clone());
    let dy = Rational::from_integer(d.dy.clone());
    let best = cands.iter().map(|p| &dx * &p.x + &dy * &p.y).max().unwrap();
    LpResult::Finite(best)
}
