use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyring::{LaurentPoly, Var};

/// Slope `Δj/Δi` of a polygon side in the `(M-exponent, L-exponent)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Finite(Ratio<i64>),
    Vertical,
}

impl Slope {
    fn between(a: (i64, i64), b: (i64, i64)) -> Slope {
        let di = b.0 - a.0;
        let dj = b.1 - a.1;
        if di == 0 {
            Slope::Vertical
        } else {
            Slope::Finite(Ratio::new(dj, di))
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(r) => write!(f, "{r}"),
            Slope::Vertical => f.write_str("inf"),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    /// Counterclockwise, starting from the lowest-then-leftmost point.
    pub vertices: Vec<(i64, i64)>,
    /// Distinct side slopes, ascending, vertical last.
    pub slopes: Vec<Slope>,
}

impl NewtonPolygon {
    pub fn sides(&self) -> Vec<((i64, i64), (i64, i64))> {
        let n = self.vertices.len();
        match n {
            0 | 1 => vec![],
            2 => vec![(self.vertices[0], self.vertices[1])],
            _ => (0..n)
                .map(|i| (self.vertices[i], self.vertices[(i + 1) % n]))
                .collect(),
        }
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Convex hull without collinear points (Andrew's monotone chain).
fn convex_hull(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    // sort by (j, i) so the hull starts at the lowest, then leftmost point
    pts.sort_by_key(|&(i, j)| (j, i));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) >= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) >= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    // chains were built clockwise in (j, i) order; flip to counterclockwise in (i, j)
    let mut hull: Vec<(i64, i64)> = lower.into_iter().chain(upper).collect();
    hull[1..].reverse();
    if hull.len() == 2 && hull[0] == hull[1] {
        hull.pop();
    }
    hull
}

/// Newton polygon of a polynomial in `M`, `L`: the convex hull of the
/// exponent support.
pub fn newton_polygon(p: &LaurentPoly) -> Result<NewtonPolygon> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("Newton polygon"));
    }
    if let Some(v) = p.vars().into_iter().find(|v| !matches!(v, Var::M | Var::L)) {
        return Err(Error::InvalidArgument(format!("Newton polygon expects M, L only; found {v}")));
    }
    let pts = p
        .terms()
        .map(|(m, _)| (m.exp(Var::M) as i64, m.exp(Var::L) as i64))
        .collect();
    let vertices = convex_hull(pts);
    let mut np = NewtonPolygon {
        vertices,
        slopes: vec![],
    };
    let mut slopes: Vec<Slope> = np.sides().into_iter().map(|(a, b)| Slope::between(a, b)).collect();
    slopes.sort();
    slopes.dedup();
    np.slopes = slopes;
    Ok(np)
}
