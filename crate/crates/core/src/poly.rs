use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::geometry::{theta_compare, Dir, Ineq, Point};

/// A finite system of halfplanes. The empty system is the whole plane.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HPoly {
    ineqs: Vec<Ineq>,
}

impl HPoly {
    pub fn new(ineqs: Vec<Ineq>) -> Self {
        HPoly { ineqs }
    }

    pub fn universe() -> Self {
        HPoly::default()
    }

    pub fn is_universe(&self) -> bool {
        self.ineqs.is_empty()
    }

    pub fn ineqs(&self) -> &[Ineq] {
        &self.ineqs
    }

    pub fn into_ineqs(self) -> Vec<Ineq> {
        self.ineqs
    }

    pub fn len(&self) -> usize {
        self.ineqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ineqs.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.ineqs.iter().all(|e| e.contains(p))
    }

    /// Strictly increasing orientation, which also rules out repeated angles.
    pub fn is_theta_sorted(&self) -> bool {
        self.ineqs
            .windows(2)
            .all(|w| theta_compare(&w[0], &w[1]) == Ordering::Less)
    }

    /// The system with `ineqs[skip]` left out.
    pub fn without(&self, skip: usize) -> HPoly {
        let ineqs = self
            .ineqs
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, e)| e.clone())
            .collect();
        HPoly { ineqs }
    }
}

impl FromIterator<Ineq> for HPoly {
    fn from_iter<I: IntoIterator<Item = Ineq>>(iter: I) -> Self {
        HPoly::new(iter.into_iter().collect())
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ineqs.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, e) in self.ineqs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "}}")
    }
}

/// Points and rays whose Minkowski sum `conv(points) + cone(rays ∪ {0})`
/// is a polyhedron. Both lists are duplicate free and keep insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VRep {
    pub points: Vec<Point>,
    pub rays: Vec<Dir>,
}

impl VRep {
    /// Build from possibly repeating generators.
    pub fn from_parts(points: impl IntoIterator<Item = Point>, rays: impl IntoIterator<Item = Dir>) -> Self {
        let mut v = VRep::default();
        v.extend(points, rays);
        v
    }

    pub fn extend(&mut self, points: impl IntoIterator<Item = Point>, rays: impl IntoIterator<Item = Dir>) {
        let mut seen: HashSet<Point> = self.points.iter().cloned().collect();
        for p in points {
            if seen.insert(p.clone()) {
                self.points.push(p);
            }
        }
        for r in rays {
            self.push_ray(r);
        }
    }

    pub fn push_ray(&mut self, r: Dir) {
        if !self.rays.contains(&r) {
            self.rays.push(r);
        }
    }
}
