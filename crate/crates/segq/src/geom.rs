//! Exact planar primitives: points, segments, lines, orientation and
//! distance predicates, point-line duality, and the drag frame that
//! normalizes a query segment to horizontal.
//!
//! All decisions are exact (see [`crate::num`]). The drag frame is an exact
//! similarity: it maps the segment to a horizontal one and scales every
//! squared distance by the same rational factor, so every comparison made in
//! frame coordinates agrees with the comparison made in input coordinates.

use crate::meter;
use crate::num::Real;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("vertical line has no dual point")]
    VerticalLineNotDualizable,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Real,
    pub y: Real,
}

impl Point {
    pub fn new(x: Real, y: Real) -> Point {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point {
            x: Real::from_int(x),
            y: Real::from_int(y),
        }
    }

    pub fn from_f64s(x: f64, y: f64) -> Point {
        Point {
            x: Real::from_f64(x),
            y: Real::from_f64(y),
        }
    }

    pub fn to_f64s(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

/// Sign of the cross product `(q - p) x (r - p)`, decided exactly.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    meter::tick();
    let d = cross(p, q, r);
    match d.sign() {
        1 => Orientation::Ccw,
        -1 => Orientation::Cw,
        _ => Orientation::Collinear,
    }
}

/// `(q - p) x (r - p)` as an exact scalar.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Real {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

pub fn dot(ax: &Real, ay: &Real, bx: &Real, by: &Real) -> Real {
    ax * bx + ay * by
}

pub fn dist2_points(p: &Point, q: &Point) -> Real {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// Closed segment with endpoints in normalized order: `a < b`
/// lexicographically by `(x, y)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Result<Segment, GeomError> {
        if p == q {
            return Err(GeomError::DegenerateSegment);
        }
        if (&p.x, &p.y) <= (&q.x, &q.y) {
            Ok(Segment { a: p, b: q })
        } else {
            Ok(Segment { a: q, b: p })
        }
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    pub fn is_vertical(&self) -> bool {
        self.a.x == self.b.x
    }

    pub fn supporting_line(&self) -> Line {
        Line::through(&self.a, &self.b)
    }

    /// Midpoint; exact.
    pub fn midpoint(&self) -> Point {
        let two = Real::from_int(2);
        Point {
            x: (&self.a.x + &self.b.x) / &two,
            y: (&self.a.y + &self.b.y) / &two,
        }
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?} -> {:?}]", self.a, self.b)
    }
}

/// Exact squared Euclidean distance from `p` to the closed segment `s`.
pub fn dist2_point_segment(p: &Point, s: &Segment) -> Real {
    meter::tick();
    let abx = &s.b.x - &s.a.x;
    let aby = &s.b.y - &s.a.y;
    let apx = &p.x - &s.a.x;
    let apy = &p.y - &s.a.y;
    let t_num = &apx * &abx + &apy * &aby;
    if t_num.sign() <= 0 {
        return &apx * &apx + &apy * &apy;
    }
    let t_den = &abx * &abx + &aby * &aby;
    if t_num >= t_den {
        return dist2_points(p, &s.b);
    }
    // Foot strictly inside: |ap|^2 - (ap·ab)^2 / |ab|^2.
    let ap2 = &apx * &apx + &apy * &apy;
    ap2 - (&t_num * &t_num) / t_den
}

/// Line `Ax + By = C` with a canonical coefficient triple: the first nonzero
/// coefficient of `(A, B)` is one.
#[derive(Clone, PartialEq, Eq)]
pub struct Line {
    pub a: Real,
    pub b: Real,
    pub c: Real,
}

impl Line {
    pub fn new(a: Real, b: Real, c: Real) -> Line {
        assert!(
            a.sign() != 0 || b.sign() != 0,
            "line coefficients (A, B) must not both vanish"
        );
        if a.sign() != 0 {
            let bb = &b / &a;
            let cc = &c / &a;
            Line {
                a: Real::from_int(1),
                b: bb,
                c: cc,
            }
        } else {
            let cc = &c / &b;
            Line {
                a: Real::zero(),
                b: Real::from_int(1),
                c: cc,
            }
        }
    }

    pub fn through(p: &Point, q: &Point) -> Line {
        let dx = &q.x - &p.x;
        let dy = &q.y - &p.y;
        // (y2-y1)x - (x2-x1)y = (y2-y1)x1 - (x2-x1)y1
        let c = &dy * &p.x - &dx * &p.y;
        Line::new(dy, -dx, c)
    }

    /// Slope/intercept form `y = m x + c`; `None` for vertical lines.
    pub fn slope_intercept(&self) -> Option<(Real, Real)> {
        if self.b.sign() == 0 {
            return None;
        }
        let m = -(&self.a / &self.b);
        let c = &self.c / &self.b;
        Some((m, c))
    }

    pub fn from_slope_intercept(m: &Real, c: &Real) -> Line {
        // y = m x + c  <=>  -m x + y = c
        Line::new(-m, Real::from_int(1), c.clone())
    }

    pub fn is_vertical(&self) -> bool {
        self.b.sign() == 0
    }

    /// `A p.x + B p.y - C`; zero iff `p` lies on the line.
    pub fn residual(&self, p: &Point) -> Real {
        &self.a * &p.x + &self.b * &p.y - &self.c
    }

    /// Sign of the vertical elevation of `p` over the line: `1` above, `-1`
    /// below, `0` on. Panics on vertical lines.
    pub fn above_sign(&self, p: &Point) -> i32 {
        meter::tick();
        assert!(!self.is_vertical(), "above/below undefined for vertical line");
        // elevation = p.y - (C - A p.x)/B; sign = sign(residual) * sign(B)
        self.residual(p).sign() * self.b.sign()
    }

    /// y-value at `x`; panics on vertical lines.
    pub fn y_at(&self, x: &Real) -> Real {
        assert!(!self.is_vertical());
        (&self.c - &self.a * x) / &self.b
    }

    /// Exact squared distance from `p` to the (infinite) line.
    pub fn dist2_point(&self, p: &Point) -> Real {
        let r = self.residual(p);
        let n2 = &self.a * &self.a + &self.b * &self.b;
        (&r * &r) / n2
    }

    /// Intersection point of two non-parallel lines.
    pub fn intersect(&self, o: &Line) -> Option<Point> {
        let det = &self.a * &o.b - &o.a * &self.b;
        if det.sign() == 0 {
            return None;
        }
        let x = (&self.c * &o.b - &o.c * &self.b) / &det;
        let y = (&self.a * &o.c - &o.a * &self.c) / &det;
        Some(Point::new(x, y))
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
    }
}

/// Dual of a point `(a, b)`: the line `y = a x - b`.
pub fn dual_of_point(p: &Point) -> Line {
    // a x - y = b
    Line::new(p.x.clone(), Real::from_int(-1), p.y.clone())
}

/// Dual of a non-vertical line `y = m x + c`: the point `(m, -c)`.
pub fn dual_of_line(l: &Line) -> Result<Point, GeomError> {
    let (m, c) = l
        .slope_intercept()
        .ok_or(GeomError::VerticalLineNotDualizable)?;
    Ok(Point::new(m, -c))
}

/// Which side of the directed segment `a -> b` (endpoints in normalized
/// order) a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Side of `s`'s supporting line containing `p`, or `None` if `p` is on it.
pub fn side_of(s: &Segment, p: &Point) -> Option<Side> {
    match orient(s.a(), s.b(), p) {
        Orientation::Ccw => Some(Side::Left),
        Orientation::Cw => Some(Side::Right),
        Orientation::Collinear => None,
    }
}

/// Exact similarity transform `p -> R (p - a)` mapping a segment to a
/// horizontal one with the chosen side facing up.
///
/// `R` is `scale`-orthogonal: `R Rᵀ = scale · I` with
/// `scale = |b - a|²  > 0`, so all squared distances are multiplied by
/// exactly `scale` and every comparison is preserved. A pure rotation would
/// need the irrational factor `1/|b - a|`; scaling keeps everything in the
/// rationals.
#[derive(Clone)]
pub struct DragFrame {
    /// Row-major 2x2 matrix.
    pub m: [Real; 4],
    /// Base point subtracted before rotation (the segment's left endpoint).
    pub origin: Point,
    /// Uniform factor applied to squared distances.
    pub scale: Real,
}

impl DragFrame {
    pub fn apply(&self, p: &Point) -> Point {
        let dx = &p.x - &self.origin.x;
        let dy = &p.y - &self.origin.y;
        Point {
            x: &self.m[0] * &dx + &self.m[1] * &dy,
            y: &self.m[2] * &dx + &self.m[3] * &dy,
        }
    }

    /// Frame x-coordinate of `p` (projection along the segment direction).
    pub fn x_of(&self, p: &Point) -> Real {
        let dx = &p.x - &self.origin.x;
        let dy = &p.y - &self.origin.y;
        &self.m[0] * &dx + &self.m[1] * &dy
    }

    /// Frame y-coordinate of `p` (signed elevation over the supporting
    /// line; positive on the chosen side).
    pub fn y_of(&self, p: &Point) -> Real {
        let dx = &p.x - &self.origin.x;
        let dy = &p.y - &self.origin.y;
        &self.m[2] * &dx + &self.m[3] * &dy
    }

    /// Frame image of the segment: `(0, 0) -> (scale, 0)`.
    pub fn span(&self) -> Real {
        self.scale.clone()
    }
}

/// Build the frame for `s` with `side` mapped to the upper half-plane.
pub fn to_drag_frame(s: &Segment, side: Side) -> DragFrame {
    let dx = &s.b().x - &s.a().x;
    let dy = &s.b().y - &s.a().y;
    let scale = &dx * &dx + &dy * &dy;
    let m = match side {
        // y = dot with left normal (-dy, dx)
        Side::Left => [dx.clone(), dy.clone(), -(&dy), dx.clone()],
        // y = dot with right normal (dy, -dx)
        Side::Right => [dx.clone(), dy.clone(), dy.clone(), -(&dx)],
    };
    DragFrame {
        m,
        origin: s.a().clone(),
        scale,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::Real;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orient_basics() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Ccw);
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orient(&p(0, 0), &p(0, 1), &p(1, 1)), Orientation::Cw);
    }

    #[test]
    fn orient_near_degenerate_exact() {
        // Points on a line with slope 1/3 and a one-ulp-ish rational offset.
        use crate::num::BigRat;
        use num_bigint::BigInt;
        let tiny = Real::from_rat(BigRat::new(BigInt::from(1), BigInt::from(10u64).pow(24)));
        let a = p(0, 0);
        let b = Point::new(Real::from_int(3), Real::from_int(1));
        let c = Point::new(Real::from_int(6), Real::from_int(2) + &tiny);
        assert_eq!(orient(&a, &b, &c), Orientation::Ccw);
        let c2 = Point::new(Real::from_int(6), Real::from_int(2) - &tiny);
        assert_eq!(orient(&a, &b, &c2), Orientation::Cw);
        let c3 = Point::new(Real::from_int(6), Real::from_int(2));
        assert_eq!(orient(&a, &b, &c3), Orientation::Collinear);
    }

    #[test]
    fn dist2_examples() {
        let s = Segment::new(p(-1, 0), p(1, 0)).unwrap();
        assert_eq!(dist2_point_segment(&p(0, 2), &s), Real::from_int(4));
        let s = Segment::new(p(0, 0), p(1, 0)).unwrap();
        assert_eq!(dist2_point_segment(&p(3, 4), &s), Real::from_int(20));
        let s = Segment::new(p(0, 0), p(10, 10)).unwrap();
        assert_eq!(dist2_point_segment(&p(5, 5), &s), Real::zero());
    }

    #[test]
    fn dual_examples() {
        let l = dual_of_point(&p(2, 3));
        let (m, c) = l.slope_intercept().unwrap();
        assert_eq!(m, Real::from_int(2));
        assert_eq!(c, Real::from_int(-3));
        let back = dual_of_line(&l).unwrap();
        assert_eq!(back, p(2, 3));

        let l0 = dual_of_point(&p(0, 0));
        let (m, c) = l0.slope_intercept().unwrap();
        assert!(m.is_zero() && c.is_zero());

        // Incidence preservation: (1,-1) on y = 2x - 3 iff dual of (1,-1)
        // passes through (2,3).
        let l = dual_of_point(&p(2, 3));
        assert_eq!(l.residual(&p(1, -1)).sign(), 0);
        let l2 = dual_of_point(&p(1, -1));
        let (m, c) = l2.slope_intercept().unwrap();
        assert_eq!(m, Real::from_int(1));
        assert_eq!(c, Real::from_int(1));
        assert_eq!(l2.residual(&p(2, 3)).sign(), 0);

        let vertical = Line::through(&p(1, 0), &p(1, 5));
        assert_eq!(
            dual_of_line(&vertical).unwrap_err(),
            GeomError::VerticalLineNotDualizable
        );
    }

    #[test]
    fn drag_frame_horizontal_identity_up_to_scale() {
        let s = Segment::new(p(0, 0), p(2, 0)).unwrap();
        let f = to_drag_frame(&s, Side::Left);
        assert_eq!(f.apply(s.a()), p(0, 0));
        assert_eq!(f.apply(s.b()), Point::new(f.span(), Real::zero()));
        // Left of a +x segment is above.
        assert!(f.y_of(&p(1, 3)).sign() > 0);
        assert_eq!(f.scale, Real::from_int(4));
    }

    #[test]
    fn drag_frame_vertical_side_selection() {
        let s = Segment::new(p(0, 0), p(0, 2)).unwrap();
        let probe = p(1, 1);
        let side = side_of(&s, &probe).unwrap();
        let f = to_drag_frame(&s, side);
        let ia = f.apply(s.a());
        let ib = f.apply(s.b());
        assert_eq!(ia, p(0, 0));
        assert!(ib.y.is_zero() && ib.x.sign() > 0);
        assert!(f.y_of(&probe).sign() > 0);
    }

    proptest! {
        #[test]
        fn orient_antisymmetric(ax in -100i64..100, ay in -100i64..100,
                                bx in -100i64..100, by in -100i64..100,
                                cx in -100i64..100, cy in -100i64..100) {
            let (a, b, c) = (p(ax, ay), p(bx, by), p(cx, cy));
            let flip = |o: Orientation| match o {
                Orientation::Ccw => Orientation::Cw,
                Orientation::Cw => Orientation::Ccw,
                Orientation::Collinear => Orientation::Collinear,
            };
            prop_assert_eq!(orient(&a, &b, &c), flip(orient(&b, &a, &c)));
            prop_assert_eq!(orient(&a, &b, &c), flip(orient(&a, &c, &b)));
        }

        #[test]
        fn dual_preserves_above_below(px in -50i64..50, py in -50i64..50,
                                      m in -20i64..20, c in -50i64..50) {
            let pt = p(px, py);
            let line = Line::from_slope_intercept(&Real::from_int(m), &Real::from_int(c));
            let above = line.above_sign(&pt);
            // p above l  <=>  l* above p*, i.e. the elevation of the dual
            // point of l over the dual line of p has the same sign.
            let dp = dual_of_line(&line).unwrap();
            let dl = dual_of_point(&pt);
            let elev = (&dp.y - dl.y_at(&dp.x)).sign();
            prop_assert_eq!(above, elev);
        }

        #[test]
        fn drag_frame_scales_dist2_uniformly(ax in -40i64..40, ay in -40i64..40,
                                             bx in -40i64..40, by in -40i64..40,
                                             px in -40i64..40, py in -40i64..40,
                                             qx in -40i64..40, qy in -40i64..40) {
            prop_assume!((ax, ay) != (bx, by));
            let s = Segment::new(p(ax, ay), p(bx, by)).unwrap();
            let f = to_drag_frame(&s, Side::Left);
            let (u, v) = (p(px, py), p(qx, qy));
            let before = dist2_points(&u, &v);
            let after = dist2_points(&f.apply(&u), &f.apply(&v));
            prop_assert_eq!(after, before * f.scale.clone());
        }
    }
}
