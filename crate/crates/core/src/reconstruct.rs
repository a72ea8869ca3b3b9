//! Hull of two halfplane systems.
//!
//! Both inputs are decomposed into points and rays. All points fit in an
//! axis-aligned box of half-width `s`; each point is then pushed along every
//! ray far enough to leave the box. A Graham scan over the resulting finite
//! point set yields a polygon, and exactly those polygon edges that touch a
//! point inside the box are edges of the true hull. The rest are artefacts of
//! cutting the unbounded directions off at a finite distance.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::geometry::{connect, in_box, int, orient, saturates, theta_compare, Dir, Ineq, Point, Rational};
use crate::poly::{HPoly, VRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HullOptions {
    /// Inputs are already in increasing orientation order; do not sort them.
    pub assume_sorted: bool,
    /// Skip the search for in-box boundary points when the edge's line
    /// misses the box entirely.
    pub skip_inner_loop: bool,
}

impl Default for HullOptions {
    fn default() -> Self {
        HullOptions { assume_sorted: false, skip_inner_loop: true }
    }
}

/// Operation counts from one [`hull_with`] call.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HullStats {
    /// Orientation sorts performed while decomposing the inputs.
    pub extreme_sorts: usize,
    pub points: usize,
    pub rays: usize,
    /// Size of the translated point set.
    pub translated: usize,
    /// Orientation tests made by the scan.
    pub scan_steps: usize,
    pub vertices: usize,
    /// Iterations of the in-box boundary search.
    pub inner_steps: usize,
    /// Edges whose boundary search was skipped.
    pub inner_skips: usize,
}

/// Half-width of a box holding every point of `points` strictly inside.
pub fn box_size(points: &[Point]) -> Result<Rational> {
    let max = points
        .iter()
        .flat_map(|p| [p.x.abs(), p.y.abs()])
        .max()
        .ok_or(Error::EmptyPointSet)?;
    Ok(max + Rational::one())
}

/// Points together with each point moved along each ray.
///
/// Every move has Chebyshev length `4s`, which puts the moved point outside
/// the box of half-width `s`. The result is sorted and duplicate free.
pub fn translate(points: &[Point], rays: &[Dir], s: &Rational) -> Vec<Point> {
    let reach = s * int(4);
    let scales: Vec<Rational> = rays
        .iter()
        .map(|r| &reach / Rational::from_integer(r.chebyshev_len()))
        .collect();
    let mut q = Vec::with_capacity(points.len() * (rays.len() + 1));
    for p in points {
        q.push(p.clone());
        for (r, mu) in rays.iter().zip(&scales) {
            q.push(p.offset(r, mu));
        }
    }
    q.sort_unstable();
    q.dedup();
    q
}

/// Arithmetic mean of at least two points.
pub fn centroid(q: &[Point]) -> Result<Point> {
    if q.len() < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: q.len() });
    }
    let n = Rational::from_integer(q.len().into());
    let (sx, sy) = q.iter().fold((Rational::zero(), Rational::zero()), |(sx, sy), p| {
        (sx + &p.x, sy + &p.y)
    });
    Ok(Point::new(sx / &n, sy / n))
}

/// Points sorted counter-clockwise around `pivot`, see
/// [`crate::geometry::pivot_compare`]. Copies of the pivot are dropped.
pub fn sort_ccw(q: &[Point], pivot: &Point) -> Result<Vec<Point>> {
    // The angular key is the primitive integer direction from the pivot, so
    // comparisons stay in integer arithmetic.
    let mut keyed = Vec::with_capacity(q.len());
    for p in q.iter().filter(|&p| p != pivot) {
        let (dx, dy) = p.sub(pivot);
        keyed.push((Dir::from_rational(&dx, &dy)?, p));
    }
    if keyed.len() < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: keyed.len() });
    }
    keyed.sort_by(|(d1, p1), (d2, p2)| {
        d1.angle_cmp(d2).then_with(|| {
            let (x1, y1) = p1.sub(pivot);
            let (x2, y2) = p2.sub(pivot);
            (&x1 * &x1 + &y1 * &y1).cmp(&(&x2 * &x2 + &y2 * &y2))
        })
    });
    Ok(keyed.into_iter().map(|(_, p)| p.clone()).collect())
}

/// Indices, ascending, of the hull vertices of a sequence sorted by [`sort_ccw`].
///
/// Collinear boundary points are not vertices. A fully collinear input has
/// exactly its two extreme points as vertices.
pub fn scan(seq: &[Point]) -> Result<Vec<usize>> {
    scan_counted(seq, &mut 0)
}

fn scan_counted(seq: &[Point], steps: &mut usize) -> Result<Vec<usize>> {
    let n = seq.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    let off_line = (2..n).find(|&j| {
        *steps += 1;
        orient(&seq[0], &seq[1], &seq[j]) != Ordering::Equal
    });
    if off_line.is_none() {
        let lo = (0..n).min_by(|&i, &j| seq[i].cmp(&seq[j])).unwrap();
        let hi = (0..n).max_by(|&i, &j| seq[i].cmp(&seq[j])).unwrap();
        let mut k = vec![lo, hi];
        k.sort_unstable();
        return Ok(k);
    }

    // The lowest point (then leftmost) is always a vertex; start there.
    let start = (0..n)
        .min_by(|&i, &j| seq[i].y.cmp(&seq[j].y).then_with(|| seq[i].x.cmp(&seq[j].x)))
        .unwrap();
    let mut stack: Vec<usize> = vec![start];
    for t in 1..n {
        let j = (start + t) % n;
        while stack.len() >= 2 {
            *steps += 1;
            let (a, b) = (stack[stack.len() - 2], stack[stack.len() - 1]);
            if orient(&seq[a], &seq[b], &seq[j]) == Ordering::Greater {
                break;
            }
            stack.pop();
        }
        stack.push(j);
    }
    while stack.len() > 2 {
        *steps += 1;
        let (a, b) = (stack[stack.len() - 2], stack[stack.len() - 1]);
        if orient(&seq[a], &seq[b], &seq[start]) == Ordering::Greater {
            break;
        }
        stack.pop();
    }
    stack.sort_unstable();
    Ok(stack)
}

/// Smallest halfplane system containing both inputs, with default options.
///
/// Each input must be satisfiable and free of redundant inequalities, or
/// empty (the whole plane). The result is sorted by orientation.
pub fn hull(e1: &HPoly, e2: &HPoly) -> Result<HPoly> {
    hull_with(e1, e2, &HullOptions::default()).map(|(h, _)| h)
}

pub fn hull_with(e1: &HPoly, e2: &HPoly, opts: &HullOptions) -> Result<(HPoly, HullStats)> {
    let mut stats = HullStats::default();
    if e1.is_universe() || e2.is_universe() {
        return Ok((HPoly::universe(), stats));
    }
    let d1 = decompose(e1, opts.assume_sorted)?;
    let d2 = decompose(e2, opts.assume_sorted)?;
    stats.extreme_sorts = usize::from(d1.sorted) + usize::from(d2.sorted);

    let mut merged: VRep = d1.vrep;
    merged.extend(d2.vrep.points, d2.vrep.rays);
    let VRep { points, rays } = merged;
    debug_assert!(rays.len() <= 8);
    stats.points = points.len();
    stats.rays = rays.len();

    let s = box_size(&points)?;
    let q = translate(&points, &rays, &s);
    stats.translated = q.len();

    if q.len() == 1 {
        let p = &q[0];
        let out = vec![
            Ineq::new(int(1), int(0), p.x.clone())?,
            Ineq::new(int(0), int(1), p.y.clone())?,
            Ineq::new(int(-1), int(0), -&p.x)?,
            Ineq::new(int(0), int(-1), -&p.y)?,
        ];
        return Ok((HPoly::new(out), stats));
    }

    let pivot = centroid(&q)?;
    let seq = sort_ccw(&q, &pivot)?;
    let n = seq.len();
    let k = scan_counted(&seq, &mut stats.scan_steps)?;
    let m = k.len();
    stats.vertices = m;

    let mut out = Vec::new();
    for i in 0..m {
        let (ki, knext) = (k[i], k[(i + 1) % m]);
        let (p1, p2) = (&seq[ki], &seq[knext]);
        let e = connect(p1, p2)?;
        let mut add = in_box(&s, p1) || in_box(&s, p2) || m == 2;
        if !add && opts.skip_inner_loop && misses_box(&e, &s) {
            stats.inner_skips += 1;
        } else {
            let mut j = (ki + 1) % n;
            while !add && j != knext {
                stats.inner_steps += 1;
                add = saturates(&seq[j], &e) && in_box(&s, &seq[j]);
                j = (j + 1) % n;
            }
        }
        if m == 2 && in_box(&s, p1) {
            out.push(end_cap(p1, p2)?);
        }
        if add {
            out.push(e);
        }
    }
    out.sort_by(theta_compare);
    out.dedup();
    Ok((HPoly::new(out), stats))
}

/// No point of the boundary line lies strictly inside the box.
fn misses_box(e: &Ineq, s: &Rational) -> bool {
    let reach = s * Rational::from_integer(e.a().abs() + e.b().abs());
    e.c().abs() >= reach
}

/// Axis-aligned bound through `p1` on the side away from `p2`, closing a
/// segment or ray at its finite end.
fn end_cap(p1: &Point, p2: &Point) -> Result<Ineq> {
    let sgn = |v: Rational| Rational::from_integer(v.signum().to_integer());
    if p1.y == p2.y {
        let g = sgn(&p1.x - &p2.x);
        Ineq::new(g.clone(), int(0), g * &p1.x)
    } else {
        let g = sgn(&p1.y - &p2.y);
        Ineq::new(int(0), g.clone(), g * &p1.y)
    }
}
