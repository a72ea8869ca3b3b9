//! Seeded generation of normalized test instances.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{connect, int, rat, Dir, Ineq, Point, Rational};
use crate::normalize::{canonical_poly, is_satisfiable, normalize};
use crate::poly::{HPoly, VRep};

/// Degeneracy family of a generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Bounded, two dimensional.
    Polytope,
    /// Unbounded in one direction, not containing a line.
    Wedge,
    /// Two facing halfplanes.
    Strip,
    Halfplane,
    /// A single point described by three or four inequalities.
    Point,
    /// A line, ray or segment.
    Line,
    /// Arbitrary random inequalities, possibly unbounded.
    Random,
}

impl Shape {
    pub const ALL: [Shape; 7] = [
        Shape::Polytope,
        Shape::Wedge,
        Shape::Strip,
        Shape::Halfplane,
        Shape::Point,
        Shape::Line,
        Shape::Random,
    ];

    fn name(self) -> &'static str {
        match self {
            Shape::Polytope => "polytope",
            Shape::Wedge => "wedge",
            Shape::Strip => "strip",
            Shape::Halfplane => "halfplane",
            Shape::Point => "point",
            Shape::Line => "line",
            Shape::Random => "random",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Shape::ALL
            .iter()
            .copied()
            .find(|sh| sh.name() == s)
            .ok_or_else(|| format!("unknown shape `{}`", s))
    }
}

struct Gen {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Gen {
    fn coord(&mut self) -> i64 {
        self.rng.gen_range(-self.bound..=self.bound)
    }

    fn point(&mut self) -> Point {
        let den = self.rng.gen_range(1..=2);
        Point::new(rat(self.coord(), den), rat(self.coord(), den))
    }

    fn dir(&mut self) -> Dir {
        loop {
            let (x, y) = (self.coord(), self.coord());
            if (x, y) != (0, 0) {
                return Dir::int(x, y).unwrap();
            }
        }
    }

    /// Direction with strictly positive dot product against `u`.
    fn dir_towards(&mut self, u: &Dir) -> Dir {
        loop {
            let d = self.dir();
            if &d.dx * &u.dx + &d.dy * &u.dy > BigInt::from(0) {
                return d;
            }
        }
    }

    fn through(normal: &Dir, p: &Point) -> Ineq {
        let c = &p.x * Rational::from_integer(normal.dx.clone()) + &p.y * Rational::from_integer(normal.dy.clone());
        Ineq::from_normal(normal, c)
    }

    fn slack(&mut self) -> Rational {
        int(self.rng.gen_range(0..=self.bound))
    }

    fn polytope(&mut self, n: usize) -> Vec<Ineq> {
        let pts: Vec<Point> = (0..n.max(3)).map(|_| self.point()).collect();
        let ring = monotone_chain(pts);
        match ring.len() {
            1 => self.point_ineqs(&ring[0], 4),
            2 => segment(&ring[0], &ring[1]),
            _ => (0..ring.len())
                .map(|i| connect(&ring[i], &ring[(i + 1) % ring.len()]).unwrap())
                .collect(),
        }
    }

    fn wedge(&mut self, n: usize) -> Vec<Ineq> {
        let apex = self.point();
        let u = self.dir();
        (0..n.max(2))
            .map(|i| {
                let a = self.dir_towards(&u);
                let f = Gen::through(&a, &apex);
                if i == 0 {
                    f
                } else {
                    let s = self.slack();
                    Ineq::from_normal(&a, f.c() + s)
                }
            })
            .collect()
    }

    fn strip(&mut self) -> Vec<Ineq> {
        let a = self.dir();
        let p = self.point();
        let lo = Gen::through(&a, &p);
        let width = int(self.rng.gen_range(1..=self.bound));
        vec![Ineq::from_normal(&a, lo.c() + width), lo.flipped()]
    }

    fn halfplane(&mut self) -> Vec<Ineq> {
        let a = self.dir();
        vec![Ineq::from_normal(&a, int(self.coord()))]
    }

    fn point_ineqs(&mut self, v: &Point, count: usize) -> Vec<Ineq> {
        let n1 = self.dir();
        let n2 = loop {
            let d = self.dir();
            if &n1.dx * &d.dy != &n1.dy * &d.dx {
                break d;
            }
        };
        let normals = if count == 3 {
            let sum = Dir::new(-(&n1.dx + &n2.dx), -(&n1.dy + &n2.dy)).unwrap();
            vec![n1, n2, sum]
        } else {
            vec![n1.clone(), n2.clone(), n1.neg(), n2.neg()]
        };
        normals.iter().map(|d| Gen::through(d, v)).collect()
    }

    fn line(&mut self) -> Vec<Ineq> {
        let p0 = self.point();
        let t = self.dir();
        let normal = Dir { dx: t.dy.clone(), dy: -t.dx.clone() };
        let on_line = Gen::through(&normal, &p0);
        let mut out = vec![on_line.clone(), on_line.flipped()];
        let caps = self.rng.gen_range(0..=2);
        if caps >= 1 {
            out.push(Gen::through(&self.dir_towards(&t.neg()), &p0));
        }
        if caps == 2 {
            let len = Rational::from_integer(self.rng.gen_range(1..=self.bound).into());
            let p1 = p0.offset(&t, &len);
            out.push(Gen::through(&self.dir_towards(&t), &p1));
        }
        out
    }

    fn random(&mut self, n: usize) -> Vec<Ineq> {
        for _ in 0..20 {
            let v: Vec<Ineq> = (0..n)
                .map(|_| {
                    let a = self.dir();
                    Ineq::from_normal(&a, int(self.coord()))
                })
                .collect();
            if is_satisfiable(&HPoly::new(v.clone())) {
                return v;
            }
        }
        let centre = self.point();
        (0..n)
            .map(|_| {
                let a = self.dir();
                let f = Gen::through(&a, &centre);
                let s = self.slack();
                Ineq::from_normal(&a, f.c() + s)
            })
            .collect()
    }
}

fn segment(p: &Point, q: &Point) -> Vec<Ineq> {
    let (dx, dy) = q.sub(p);
    let t = Dir::from_rational(&dx, &dy).unwrap();
    vec![
        connect(p, q).unwrap(),
        connect(q, p).unwrap(),
        Gen::through(&t, q),
        Gen::through(&t.neg(), p),
    ]
}

/// Counter-clockwise hull vertices of a point cloud (Andrew's monotone chain).
fn monotone_chain(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let turn = |a: &Point, b: &Point, c: &Point| {
        let (ux, uy) = b.sub(a);
        let (vx, vy) = c.sub(a);
        ux * vy - uy * vx
    };
    let zero = int(0);
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= zero {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= zero {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Deterministic normalized instance. `n = 0` always gives the whole plane.
///
/// `n` bounds the number of inequalities for the families that take a size
/// (polytope, wedge, random); the others have a fixed size.
pub fn gen_instance(seed: u64, n: usize, coeff_bound: i64, shape: Shape) -> HPoly {
    if n == 0 {
        return HPoly::universe();
    }
    let mut g = Gen { rng: ChaCha8Rng::seed_from_u64(seed), bound: coeff_bound.max(1) };
    let raw = match shape {
        Shape::Polytope => g.polytope(n),
        Shape::Wedge => g.wedge(n),
        Shape::Strip => g.strip(),
        Shape::Halfplane => g.halfplane(),
        Shape::Point => {
            let v = g.point();
            let count = if g.rng.gen_bool(0.5) { 3 } else { 4 };
            g.point_ineqs(&v, count)
        }
        Shape::Line => g.line(),
        Shape::Random => g.random(n),
    };
    normalize(&HPoly::new(raw)).expect("generated systems are satisfiable")
}

/// Convex polygon with `n >= 3` edges whose vertices lie on the parabola
/// `y = (x - shift)^2`, already normalized.
pub fn parabola_polygon(n: usize, shift: i64) -> HPoly {
    assert!(n >= 3, "a polygon needs at least three edges");
    let half = (n as i64 - 1) / 2;
    let verts: Vec<Point> = (0..n as i64)
        .map(|i| {
            let x = i - half;
            Point::new(int(x + shift), Rational::from_integer(BigInt::from(x) * BigInt::from(x)))
        })
        .collect();
    // Lower chain left to right, then the cap from the last vertex back.
    let ineqs = (0..n).map(|i| connect(&verts[i], &verts[(i + 1) % n]).unwrap()).collect();
    canonical_poly(&HPoly::new(ineqs))
}

/// A seeded random point of `conv(points) + cone(rays)`.
pub fn sample_vrep<R: Rng>(rng: &mut R, v: &VRep) -> Point {
    let weights: Vec<i64> = v.points.iter().map(|_| rng.gen_range(0..=8)).collect();
    let total: i64 = weights.iter().sum();
    let mut x = int(0);
    let mut y = int(0);
    for (p, &w) in v.points.iter().zip(&weights) {
        let l = if total == 0 { rat(1, v.points.len() as i64) } else { rat(w, total) };
        x += &l * &p.x;
        y += l * &p.y;
    }
    let mut p = Point::new(x, y);
    for r in &v.rays {
        let mu = rat(rng.gen_range(0..=12), rng.gen_range(1..=3));
        p = p.offset(r, &mu);
    }
    p
}

/// A seeded random lattice point with quarter-integer coordinates in
/// `[-bound, bound]^2`.
pub fn sample_box<R: Rng>(rng: &mut R, bound: i64) -> Point {
    let b = bound * 4;
    Point::new(rat(rng.gen_range(-b..=b), 4), rat(rng.gen_range(-b..=b), 4))
}
