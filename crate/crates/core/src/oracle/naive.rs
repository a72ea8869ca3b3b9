//! Brute-force conversions between halfplane systems and generators.
//!
//! Nothing here looks at angular neighbours: vertices come from all pairwise
//! boundary crossings, rays from a global `A·d <= 0` filter, and halfplane
//! systems from every line through pairs of generators.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{int, intersect, Dir, Ineq, Point, Rational};
use crate::normalize::{canonical_poly, remove_redundant};
use crate::oracle::lp::{feasible_candidates, in_cone, lp_max};
use crate::poly::{HPoly, VRep};

fn dot(d: &Dir, p: &Point) -> Rational {
    &p.x * Rational::from_integer(d.dx.clone()) + &p.y * Rational::from_integer(d.dy.clone())
}

fn dir_dot(u: &Dir, v: &Dir) -> BigInt {
    &u.dx * &v.dx + &u.dy * &v.dy
}

/// Every direction `d` with `A·d <= 0`, as a generating set of that cone.
pub fn recession_rays(e: &HPoly) -> Vec<Dir> {
    if e.is_universe() {
        return [(1, 0), (0, 1), (-1, 0), (0, -1)].iter().map(|&(x, y)| Dir::int(x, y).unwrap()).collect();
    }
    let mut out: Vec<Dir> = Vec::new();
    for f in e.ineqs() {
        let n = f.normal();
        let along = Dir { dx: n.dy.clone(), dy: -n.dx.clone() };
        for cand in [along.clone(), along.neg(), n.neg()] {
            let ok = e.ineqs().iter().all(|g| !dir_dot(&g.normal(), &cand).is_positive());
            if ok && !out.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out
}

/// Points and rays of a satisfiable system, computed by enumeration.
///
/// Vertices are the feasible crossings of any two boundary lines. When the
/// set has no vertex (all normals parallel) every feasible perpendicular
/// foot is added as an anchor so that the generators still span the set.
pub fn vrep_naive(e: &HPoly) -> Result<VRep> {
    if e.is_universe() {
        return Ok(VRep::from_parts([Point::int(0, 0)], recession_rays(e)));
    }
    let es = e.ineqs();
    let mut verts = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            if let Some(p) = intersect(&es[i], &es[j]) {
                if e.contains(&p) {
                    verts.push(p);
                }
            }
        }
    }
    if verts.is_empty() {
        verts = feasible_candidates(e);
        if verts.is_empty() {
            return Err(Error::Unsatisfiable);
        }
    }
    Ok(VRep::from_parts(verts, recession_rays(e)))
}

/// Smallest halfplane system containing `conv(points) + cone(rays)`.
///
/// Candidate boundaries are the lines through two generator points, the
/// lines through a point parallel to a ray, and the axis-parallel lines
/// through each point (needed when the hull is a point or a segment). A
/// candidate is kept when it holds every generator and its line carries a
/// second generator, or it is axis-parallel. The survivors are then pruned
/// to a non-redundant system.
pub fn vrep_to_hpoly(v: &VRep) -> Result<HPoly> {
    let pts = &v.points;
    let mut normals: Vec<(Dir, &Point, bool)> = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            let (dx, dy) = q.sub(p);
            let along = Dir::from_rational(&dx, &dy)?;
            normals.push((Dir { dx: along.dy.clone(), dy: -along.dx.clone() }, p, false));
        }
        for r in &v.rays {
            normals.push((Dir { dx: r.dy.clone(), dy: -r.dx.clone() }, p, false));
        }
        for (x, y) in [(1, 0), (0, 1)] {
            normals.push((Dir::int(x, y)?, p, true));
        }
    }
    let mut kept: HashSet<Ineq> = HashSet::new();
    let mut order = Vec::new();
    for (n, p, axis) in normals {
        for n in [n.clone(), n.neg()] {
            if v.rays.iter().any(|r| dir_dot(&n, r).is_positive()) {
                continue;
            }
            let c = dot(&n, p);
            let mut tight = 0;
            let mut holds = true;
            for q in pts {
                match dot(&n, q).cmp(&c) {
                    std::cmp::Ordering::Greater => {
                        holds = false;
                        break;
                    }
                    std::cmp::Ordering::Equal => tight += 1,
                    std::cmp::Ordering::Less => {}
                }
            }
            let flat = v.rays.iter().any(|r| dir_dot(&n, r).is_zero());
            if holds && (axis || tight >= 2 || flat) {
                let e = Ineq::from_normal(&n, c);
                if kept.insert(e.clone()) {
                    order.push(e);
                }
            }
        }
    }
    Ok(canonical_poly(&remove_redundant(&HPoly::new(order))?))
}

/// Reference hull: decompose both sides by enumeration and rebuild by
/// brute force.
pub fn hull_naive(e1: &HPoly, e2: &HPoly) -> Result<HPoly> {
    if e1.is_universe() || e2.is_universe() {
        return Ok(HPoly::universe());
    }
    let mut v = vrep_naive(e1)?;
    let v2 = vrep_naive(e2)?;
    v.extend(v2.points, v2.rays);
    vrep_to_hpoly(&v)
}

/// `[[e1]] ⊆ [[e2]]`.
pub fn poly_includes(e1: &HPoly, e2: &HPoly) -> bool {
    e2.ineqs().iter().all(|f| lp_max(e1, &f.normal()).at_most(f.c()))
}

/// Same feasible set, by mutual inclusion.
pub fn poly_equal(e1: &HPoly, e2: &HPoly) -> bool {
    poly_includes(e1, e2) && poly_includes(e2, e1)
}

/// Mutual containment of two finitely generated cones.
pub fn cone_equal(r1: &[Dir], r2: &[Dir]) -> bool {
    let gens = |r: &[Dir]| r.iter().map(|d| (d.dx.clone(), d.dy.clone())).collect::<Vec<_>>();
    let (g1, g2) = (gens(r1), gens(r2));
    r1.iter().all(|d| in_cone(&d.dx, &d.dy, &g2)) && r2.iter().all(|d| in_cone(&d.dx, &d.dy, &g1))
}

/// Homogenised generator: `(x, y, 1)` for a point, `(dx, dy, 0)` for a ray.
type Lifted = [Rational; 3];

fn det3(m: [&Lifted; 3]) -> Rational {
    let [a, b, c] = m;
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &b[0] * (&a[1] * &c[2] - &a[2] * &c[1])
        + &c[0] * (&a[1] * &b[2] - &a[2] * &b[1])
}

/// Membership of `p` in `conv(points) + cone(rays ∪ {0})`.
///
/// Lifting to three dimensions turns this into cone membership of
/// `(p, 1)`, which by Carathéodory needs at most three linearly independent
/// generators. All subsets of size one, two and three are tried, each by
/// solving the exact linear system and checking the signs.
pub fn vrep_contains(v: &VRep, p: &Point) -> bool {
    let mut gens: Vec<Lifted> = v.points.iter().map(|q| [q.x.clone(), q.y.clone(), int(1)]).collect();
    gens.extend(v.rays.iter().map(|r| {
        [Rational::from_integer(r.dx.clone()), Rational::from_integer(r.dy.clone()), int(0)]
    }));
    let t: Lifted = [p.x.clone(), p.y.clone(), int(1)];
    if v.points.contains(p) {
        return true;
    }
    let g = gens.len();
    // Pairs: t = l1*a + l2*b using a nonsingular 2x2 minor, checked on the third row.
    for i in 0..g {
        for j in i + 1..g {
            if solve_pair(&gens[i], &gens[j], &t) {
                return true;
            }
        }
    }
    for i in 0..g {
        for j in i + 1..g {
            for k in j + 1..g {
                let d = det3([&gens[i], &gens[j], &gens[k]]);
                if d.is_zero() {
                    continue;
                }
                let l1 = det3([&t, &gens[j], &gens[k]]) / &d;
                let l2 = det3([&gens[i], &t, &gens[k]]) / &d;
                let l3 = det3([&gens[i], &gens[j], &t]) / &d;
                if !l1.is_negative() && !l2.is_negative() && !l3.is_negative() {
                    return true;
                }
            }
        }
    }
    false
}

fn solve_pair(a: &Lifted, b: &Lifted, t: &Lifted) -> bool {
    for (r, s) in [(0, 1), (0, 2), (1, 2)] {
        let det = &a[r] * &b[s] - &a[s] * &b[r];
        if det.is_zero() {
            continue;
        }
        let l1 = (&t[r] * &b[s] - &t[s] * &b[r]) / &det;
        let l2 = (&a[r] * &t[s] - &a[s] * &t[r]) / &det;
        let third = 3 - r - s;
        return !l1.is_negative() && !l2.is_negative() && &l1 * &a[third] + &l2 * &b[third] == t[third];
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    fn poly(v: &[(i64, i64, i64)]) -> HPoly {
        v.iter().map(|&(a, b, c)| Ineq::int(a, b, c).unwrap()).collect()
    }

    fn dirs(v: &[(i64, i64)]) -> Vec<Dir> {
        v.iter().map(|&(x, y)| Dir::int(x, y).unwrap()).collect()
    }

    #[test]
    fn naive_square() {
        let v = vrep_naive(&poly(&[(1, 0, 1), (0, 1, 1), (-1, 0, 0), (0, -1, 0)])).unwrap();
        assert_eq!(v.points.len(), 4);
        assert!(v.rays.is_empty());
    }

    #[test]
    fn naive_halfplane() {
        let e = poly(&[(1, 0, 0)]);
        let v = vrep_naive(&e).unwrap();
        assert_eq!(v.points, vec![Point::int(0, 0)]);
        assert!(cone_equal(&v.rays, &dirs(&[(0, 1), (0, -1), (-1, 0)])));
        for (x, y) in [(-3, 5), (0, -9), (1, 0), (-1, 1)] {
            let p = Point::int(x, y);
            assert_eq!(vrep_contains(&v, &p), e.contains(&p), "{}", p);
        }
    }

    #[test]
    fn naive_wedge() {
        let v = vrep_naive(&poly(&[(1, 1, 2), (-1, 0, 0)])).unwrap();
        assert_eq!(v.points, vec![Point::int(0, 2)]);
        assert!(cone_equal(&v.rays, &dirs(&[(0, -1), (1, -1)])));
    }

    #[test]
    fn naive_hull_of_two_squares() {
        let a = poly(&[(1, 0, 1), (0, 1, 1), (-1, 0, 0), (0, -1, 0)]);
        let b = poly(&[(1, 0, 3), (0, 1, 3), (-1, 0, -2), (0, -1, -2)]);
        assert_eq!(
            hull_naive(&a, &b).unwrap(),
            poly(&[(1, 0, 3), (0, 1, 3), (-1, 1, 1), (-1, 0, 0), (0, -1, 0), (1, -1, 1)])
        );
    }

    #[test]
    fn naive_hull_of_point_with_itself() {
        let p = poly(&[(1, 0, 1), (0, 1, 2), (-1, 0, -1), (0, -1, -2)]);
        assert_eq!(hull_naive(&p, &p).unwrap(), p);
    }

    #[test]
    fn naive_hull_of_facing_halfplanes() {
        assert!(hull_naive(&poly(&[(0, -1, 0)]), &poly(&[(0, 1, 0)])).unwrap().is_universe());
    }

    #[test]
    fn equality_examples() {
        assert!(poly_equal(&poly(&[(1, 0, 1)]), &poly(&[(2, 0, 2)])));
        assert!(!poly_equal(&poly(&[(1, 0, 1)]), &poly(&[(1, 0, 2)])));
        assert!(!poly_equal(&HPoly::universe(), &poly(&[(1, 0, 0)])));
        assert!(poly_equal(&HPoly::universe(), &HPoly::universe()));
    }

    #[test]
    fn lifted_membership() {
        let v = VRep::from_parts(
            [Point::int(0, 0), Point::int(2, 0)],
            dirs(&[(0, 1)]),
        );
        assert!(vrep_contains(&v, &Point::int(1, 0)));
        assert!(vrep_contains(&v, &Point::new(rat(3, 2), int(7))));
        assert!(!vrep_contains(&v, &Point::int(3, 1)));
        assert!(!vrep_contains(&v, &Point::new(int(1), rat(-1, 5))));
    }
}
