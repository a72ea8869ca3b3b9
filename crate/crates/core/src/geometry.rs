//! Exact planar primitives.
//!
//! Every scalar is a [`Rational`]; nothing in this crate rounds. Angles are
//! never materialised: orientation of a halfplane is compared through the
//! quadrant of its outward normal followed by the sign of a cross product.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a rational from small integers.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    /// Translate by `scale * dir`.
    pub fn offset(&self, dir: &Dir, scale: &Rational) -> Point {
        Point::new(
            &self.x + scale * Rational::from_integer(dir.dx.clone()),
            &self.y + scale * Rational::from_integer(dir.dy.clone()),
        )
    }

    pub(crate) fn sub(&self, other: &Point) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A ray direction in primitive integer form.
///
/// Two directions that differ by a positive factor are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dir {
    pub dx: BigInt,
    pub dy: BigInt,
}

impl Dir {
    pub fn new(dx: BigInt, dy: BigInt) -> Result<Self> {
        if dx.is_zero() && dy.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let g = dx.gcd(&dy);
        Ok(Dir { dx: dx / &g, dy: dy / &g })
    }

    pub fn int(dx: i64, dy: i64) -> Result<Self> {
        Dir::new(BigInt::from(dx), BigInt::from(dy))
    }

    /// Primitive direction of a nonzero rational vector.
    pub fn from_rational(dx: &Rational, dy: &Rational) -> Result<Self> {
        let l = dx.denom().lcm(dy.denom());
        let sx = dx.numer() * (&l / dx.denom());
        let sy = dy.numer() * (&l / dy.denom());
        Dir::new(sx, sy)
    }

    pub fn neg(&self) -> Dir {
        Dir { dx: -&self.dx, dy: -&self.dy }
    }

    /// Larger of `|dx|` and `|dy|`.
    pub fn chebyshev_len(&self) -> BigInt {
        self.dx.abs().max(self.dy.abs())
    }

    /// Counter-clockwise polar order of directions, starting at `(1, 0)`.
    pub fn angle_cmp(&self, other: &Dir) -> Ordering {
        angle_cmp(&self.dx, &self.dy, &other.dx, &other.dy)
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dx, self.dy)
    }
}

/// Closed halfplane `a*x + b*y <= c` with coprime integer normal `(a, b)`.
///
/// The normal points away from the feasible side. Canonical form is unique,
/// so structural equality is equality of halfplanes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ineq {
    a: BigInt,
    b: BigInt,
    c: Rational,
}

impl Ineq {
    /// Canonicalise a raw rational triple by positive scaling.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateIneq);
        }
        // Clear denominators of the normal, then divide out the content.
        let l = a.denom().lcm(b.denom());
        let ia = a.numer() * (&l / a.denom());
        let ib = b.numer() * (&l / b.denom());
        let g = ia.gcd(&ib);
        let scale = Rational::new(l, g.clone());
        Ok(Ineq { a: ia / &g, b: ib / &g, c: c * scale })
    }

    pub fn int(a: i64, b: i64, c: i64) -> Result<Self> {
        Ineq::new(int(a), int(b), int(c))
    }

    pub fn from_normal(normal: &Dir, c: Rational) -> Ineq {
        Ineq { a: normal.dx.clone(), b: normal.dy.clone(), c }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// Outward normal as a direction.
    pub fn normal(&self) -> Dir {
        Dir { dx: self.a.clone(), dy: self.b.clone() }
    }

    /// `a*x + b*y` at `p`.
    pub fn eval(&self, p: &Point) -> Rational {
        dot_int(&self.a, &self.b, &p.x, &p.y)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p) <= self.c
    }

    /// Same orientation, i.e. normals are positive multiples.
    pub fn same_theta(&self, other: &Ineq) -> bool {
        self.a == other.a && self.b == other.b
    }

    /// The halfplane with the opposite normal through the same boundary line.
    pub fn flipped(&self) -> Ineq {
        Ineq { a: -&self.a, b: -&self.b, c: -&self.c }
    }
}

impl fmt::Display for Ineq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (coef, var) in [(&self.a, "x"), (&self.b, "y")] {
            if coef.is_zero() {
                continue;
            }
            let mag = coef.abs();
            let sign = if coef.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {} ", sign)?;
            } else if coef.is_negative() {
                write!(f, "-")?;
            }
            if mag.is_one() {
                write!(f, "{}", var)?;
            } else {
                write!(f, "{}{}", mag, var)?;
            }
            wrote = true;
        }
        write!(f, " <= {}", self.c)
    }
}

fn dot_int(a: &BigInt, b: &BigInt, x: &Rational, y: &Rational) -> Rational {
    x * Rational::from_integer(a.clone()) + y * Rational::from_integer(b.clone())
}

/// Index of the quarter-turn containing the polar angle of `(x, y)`:
/// 0 for `[0, π/2)`, 1 for `[π/2, π)`, 2 for `[π, 3π/2)`, 3 for `[3π/2, 2π)`.
fn quadrant<T: Signed>(x: &T, y: &T) -> u8 {
    let (xp, yp) = (x.is_positive(), y.is_positive());
    let (xn, yn) = (x.is_negative(), y.is_negative());
    if xp && !yn {
        0
    } else if !xp && yp {
        1
    } else if xn && !yp {
        2
    } else {
        debug_assert!(!xn && yn);
        3
    }
}

pub(crate) fn angle_cmp<T>(x1: &T, y1: &T, x2: &T, y2: &T) -> Ordering
where
    T: Signed + Ord,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    quadrant(x1, y1).cmp(&quadrant(x2, y2)).then_with(|| {
        // Same quarter-turn: counter-clockwise of v1 means larger angle.
        let cross = (x1 * y2) - (x2 * y1);
        T::zero().cmp(&cross)
    })
}

/// Orders halfplanes by the angle of their outward normal, measured
/// counter-clockwise from the normal of `x <= 0`.
pub fn theta_compare(e1: &Ineq, e2: &Ineq) -> Ordering {
    angle_cmp(&e1.a, &e1.b, &e2.a, &e2.b)
}

/// Whether the counter-clockwise turn from `e1`'s normal to `e2`'s is at least π.
pub fn gap_ge_pi(e1: &Ineq, e2: &Ineq) -> bool {
    let cross = &e1.a * &e2.b - &e2.a * &e1.b;
    match cross.sign() {
        num_bigint::Sign::Minus => true,
        num_bigint::Sign::Plus => false,
        num_bigint::Sign::NoSign => (&e1.a * &e2.a + &e1.b * &e2.b).is_negative(),
    }
}

/// Crossing point of the two boundary lines; `None` when they are parallel.
pub fn intersect(e1: &Ineq, e2: &Ineq) -> Option<Point> {
    let det = &e1.a * &e2.b - &e2.a * &e1.b;
    if det.is_zero() {
        return None;
    }
    let det = Rational::from_integer(det);
    let a1 = Rational::from_integer(e1.a.clone());
    let b1 = Rational::from_integer(e1.b.clone());
    let a2 = Rational::from_integer(e2.a.clone());
    let b2 = Rational::from_integer(e2.b.clone());
    let x = (&e1.c * &b2 - &e2.c * &b1) / &det;
    let y = (&a1 * &e2.c - &a2 * &e1.c) / &det;
    Some(Point::new(x, y))
}

/// Halfplane whose boundary passes through `p1` and `p2` and whose feasible
/// side contains every point to the left of the directed line `p1 -> p2`.
pub fn connect(p1: &Point, p2: &Point) -> Result<Ineq> {
    if p1 == p2 {
        return Err(Error::CoincidentPoints);
    }
    let a = &p2.y - &p1.y;
    let b = &p1.x - &p2.x;
    let c = &a * &p1.x + &b * &p1.y;
    Ineq::new(a, b, c)
}

/// `p` lies on the boundary line of `e`.
pub fn saturates(p: &Point, e: &Ineq) -> bool {
    e.eval(p) == e.c
}

/// `p` lies strictly inside the axis-aligned square of half-width `s`.
pub fn in_box(s: &Rational, p: &Point) -> bool {
    p.x.abs() < *s && p.y.abs() < *s
}

/// Sign of `(q - p) x (r - p)`: `Greater` for a left turn.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Ordering {
    let (ux, uy) = q.sub(p);
    let (vx, vy) = r.sub(p);
    (ux * vy).cmp(&(uy * vx))
}

/// Counter-clockwise order of points around `pivot`; points on a common ray
/// from the pivot are ordered by increasing distance.
///
/// The angular origin is the direction `(1, 0)` from the pivot, which is the
/// orientation of `connect(pivot, p)` rotated by a fixed quarter turn.
pub fn pivot_compare(pivot: &Point, p1: &Point, p2: &Point) -> Result<Ordering> {
    if p1 == pivot || p2 == pivot {
        return Err(Error::PointIsPivot);
    }
    let (x1, y1) = p1.sub(pivot);
    let (x2, y2) = p2.sub(pivot);
    Ok(angle_cmp(&x1, &y1, &x2, &y2).then_with(|| {
        let d1 = &x1 * &x1 + &y1 * &y1;
        let d2 = &x2 * &x2 + &y2 * &y2;
        d1.cmp(&d2)
    }))
}
