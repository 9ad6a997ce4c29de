//! Convex hulls over indexed point sets: strict CCW hulls, logarithmic
//! extreme-vertex queries, tangent-based merging of separated hulls, and
//! exact hull/segment classification.

use crate::geom::{cross, orient, Orientation, Point, Segment};
use crate::meter;
use crate::num::Real;
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HullError {
    #[error("empty input")]
    EmptyInput,
    #[error("hulls are not separated by the given line")]
    NotSeparated,
}

/// Hull vertex: owning-set index plus its coordinates.
#[derive(Clone, Debug)]
pub struct HullVertex {
    pub idx: usize,
    pub pt: Point,
}

/// Strictly convex CCW polygon (1 and 2 vertex degenerate hulls allowed).
#[derive(Clone, Debug)]
pub struct ConvexHull {
    verts: Vec<HullVertex>,
}

/// Result of an extreme-vertex query.
#[derive(Clone, Debug)]
pub struct ExtremeHit {
    /// Ring position of the winning vertex.
    pub pos: usize,
    /// Owning-set index of the winning vertex (smallest among ties).
    pub idx: usize,
    /// True when a second hull vertex attains the same extreme value, i.e.
    /// the supporting line touches an edge. Callers that must honor the
    /// smallest-index tie rule over non-vertex points rescan on this flag.
    pub tied: bool,
}

impl ConvexHull {
    /// Hull of `points`, indexed by position.
    pub fn build(points: &[Point]) -> Result<ConvexHull, HullError> {
        ConvexHull::build_indexed(points.iter().cloned().enumerate())
    }

    /// Hull of an indexed point collection. Duplicate coordinates keep the
    /// smallest index. Collinear inputs yield a 2-vertex hull.
    pub fn build_indexed(
        points: impl IntoIterator<Item = (usize, Point)>,
    ) -> Result<ConvexHull, HullError> {
        let mut pts: Vec<(usize, Point)> = points.into_iter().collect();
        if pts.is_empty() {
            return Err(HullError::EmptyInput);
        }
        pts.sort_by(|a, b| {
            (&a.1.x, &a.1.y, a.0)
                .partial_cmp(&(&b.1.x, &b.1.y, b.0))
                .unwrap()
        });
        pts.dedup_by(|a, b| a.1 == b.1); // keeps first = smallest index
        if pts.len() == 1 {
            return Ok(ConvexHull {
                verts: vec![HullVertex {
                    idx: pts[0].0,
                    pt: pts[0].1.clone(),
                }],
            });
        }

        // Monotone chain, strict turns only.
        let chain = |iter: &mut dyn Iterator<Item = &(usize, Point)>| {
            let mut out: Vec<&(usize, Point)> = Vec::new();
            for p in iter {
                while out.len() >= 2
                    && orient(&out[out.len() - 2].1, &out[out.len() - 1].1, &p.1)
                        != Orientation::Ccw
                {
                    out.pop();
                }
                out.push(p);
            }
            out
        };
        let lower = chain(&mut pts.iter());
        let upper = chain(&mut pts.iter().rev());
        let mut ring: Vec<HullVertex> = Vec::with_capacity(lower.len() + upper.len());
        for v in lower.iter().chain(upper.iter().skip(1).take(upper.len() - 2)) {
            ring.push(HullVertex {
                idx: v.0,
                pt: v.1.clone(),
            });
        }
        Ok(ConvexHull { verts: ring })
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn vertices(&self) -> &[HullVertex] {
        &self.verts
    }

    pub fn vertex(&self, pos: usize) -> &HullVertex {
        &self.verts[pos % self.verts.len()]
    }

    /// Owning-set indices in ring order.
    pub fn indices(&self) -> Vec<usize> {
        self.verts.iter().map(|v| v.idx).collect()
    }

    fn dot_dir(p: &Point, dx: &Real, dy: &Real) -> Real {
        &p.x * dx + &p.y * dy
    }

    /// Vertex maximizing `dot(v, (dx, dy))`. Ties resolve to the smallest
    /// owning-set index; `tied` reports whether a tie existed.
    pub fn extreme(&self, dx: &Real, dy: &Real) -> ExtremeHit {
        assert!(!self.verts.is_empty());
        assert!(dx.sign() != 0 || dy.sign() != 0, "zero direction");
        let n = self.verts.len();
        if n <= 8 {
            return self.extreme_scan(dx, dy);
        }

        // Ring edge directions turn CCW by a full 2π, so dot(edge, d) has one
        // cyclically contiguous positive arc. On any sub-chain turning < π
        // the sign changes at most once, which makes the chains binary
        // searchable. We split the ring at the lexicographic extremes.
        let (lo_pos, hi_pos) = self.lex_split();
        let mut best: Option<(Real, usize)> = None;
        let mut consider = |pos: usize, best: &mut Option<(Real, usize)>| {
            meter::tick();
            let f = Self::dot_dir(&self.verts[pos].pt, dx, dy);
            match best {
                None => *best = Some((f, pos)),
                Some((bf, bp)) => {
                    if f > *bf {
                        *best = Some((f, pos));
                    } else if f == *bf && self.verts[pos].idx < self.verts[*bp].idx {
                        *best = Some((f, pos));
                    }
                }
            }
        };
        for pos in self.chain_extreme(lo_pos, hi_pos, dx, dy) {
            consider(pos, &mut best);
        }
        for pos in self.chain_extreme(hi_pos, lo_pos, dx, dy) {
            consider(pos, &mut best);
        }
        let (bf, bpos) = best.unwrap();
        self.resolve_ties(bpos, bf, dx, dy)
    }

    fn extreme_scan(&self, dx: &Real, dy: &Real) -> ExtremeHit {
        let mut bpos = 0usize;
        let mut bf = Self::dot_dir(&self.verts[0].pt, dx, dy);
        let mut tied = false;
        for pos in 1..self.verts.len() {
            meter::tick();
            let f = Self::dot_dir(&self.verts[pos].pt, dx, dy);
            match f.cmp(&bf) {
                Ordering::Greater => {
                    bf = f;
                    bpos = pos;
                    tied = false;
                }
                Ordering::Equal => {
                    tied = true;
                    if self.verts[pos].idx < self.verts[bpos].idx {
                        bpos = pos;
                    }
                }
                Ordering::Less => {}
            }
        }
        ExtremeHit {
            pos: bpos,
            idx: self.verts[bpos].idx,
            tied,
        }
    }

    /// Ring positions of the lexicographic minimum and maximum vertices.
    fn lex_split(&self) -> (usize, usize) {
        let mut lo = 0;
        let mut hi = 0;
        for (i, v) in self.verts.iter().enumerate() {
            if (&v.pt.x, &v.pt.y) < (&self.verts[lo].pt.x, &self.verts[lo].pt.y) {
                lo = i;
            }
            if (&v.pt.x, &v.pt.y) > (&self.verts[hi].pt.x, &self.verts[hi].pt.y) {
                hi = i;
            }
        }
        (lo, hi)
    }

    /// Candidate extreme positions on the CCW chain `from -> to` (inclusive).
    fn chain_extreme(&self, from: usize, to: usize, dx: &Real, dy: &Real) -> Vec<usize> {
        let n = self.verts.len();
        let len = (to + n - from) % n; // number of edges on the chain
        if len == 0 {
            return vec![from];
        }
        let edge_sign = |k: usize| -> i32 {
            meter::tick();
            let a = &self.verts[(from + k) % n].pt;
            let b = &self.verts[(from + k + 1) % n].pt;
            (&(&b.x - &a.x) * dx + &(&b.y - &a.y) * dy).sign()
        };
        if edge_sign(0) <= 0 {
            // Non-increasing start: max at one of the chain ends.
            return vec![from, to];
        }
        // Positive prefix: binary search its last edge.
        let mut lo = 0usize; // known positive
        let mut hi = len - 1;
        while lo < hi {
            let mid = (lo + hi + 1) / 2;
            if edge_sign(mid) > 0 {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        vec![(from + lo + 1) % n]
    }

    fn resolve_ties(&self, pos: usize, f: Real, dx: &Real, dy: &Real) -> ExtremeHit {
        let n = self.verts.len();
        let mut idx = self.verts[pos].idx;
        let mut tied = false;
        for nb in [(pos + 1) % n, (pos + n - 1) % n] {
            if nb == pos {
                continue;
            }
            meter::tick();
            if Self::dot_dir(&self.verts[nb].pt, dx, dy) == f {
                tied = true;
                idx = idx.min(self.verts[nb].idx);
            }
        }
        ExtremeHit { pos, idx, tied }
    }

    /// Exact point-in-closed-hull test, O(log n).
    pub fn contains(&self, p: &Point) -> bool {
        let n = self.verts.len();
        match n {
            1 => return self.verts[0].pt == *p,
            2 => {
                let (a, b) = (&self.verts[0].pt, &self.verts[1].pt);
                if orient(a, b, p) != Orientation::Collinear {
                    return false;
                }
                let t = (&p.x - &a.x) * (&b.x - &a.x) + (&p.y - &a.y) * (&b.y - &a.y);
                let d2 = (&b.x - &a.x) * (&b.x - &a.x) + (&b.y - &a.y) * (&b.y - &a.y);
                return t.sign() >= 0 && t <= d2;
            }
            _ => {}
        }
        let a0 = &self.verts[0].pt;
        if orient(a0, &self.verts[1].pt, p) == Orientation::Cw
            || orient(a0, &self.verts[n - 1].pt, p) == Orientation::Ccw
        {
            return false;
        }
        // Binary search the fan wedge containing p.
        let mut lo = 1usize;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if orient(a0, &self.verts[mid].pt, p) != Orientation::Cw {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        orient(&self.verts[lo].pt, &self.verts[lo + 1 % n].pt, p) != Orientation::Cw
            || (lo + 1) == n
    }

    /// Exact closed-segment versus closed-hull disjointness.
    pub fn disjoint_from_segment(&self, s: &Segment) -> bool {
        let n = self.verts.len();
        if n == 1 {
            use crate::geom::dist2_point_segment;
            return dist2_point_segment(&self.verts[0].pt, s).sign() > 0;
        }
        // Which side of l(s) does the hull reach?
        let line = s.supporting_line();
        let (nx, ny) = (line.a.clone(), line.b.clone());
        let hi = self.extreme(&nx, &ny);
        let lo = self.extreme(&-(&nx), &-(&ny));
        let rhi = line.residual(&self.verts[hi.pos].pt).sign();
        let rlo = line.residual(&self.verts[lo.pos].pt).sign();
        if rhi < 0 || rlo > 0 {
            return true; // hull strictly on one side of the line
        }
        // The line meets the hull; compare spans along the line direction.
        let (dx, dy) = (-(&ny), nx.clone());
        let proj = |p: &Point| -> Real { &p.x * &dx + &p.y * &dy };
        let (mut tmin, mut tmax): (Option<Real>, Option<Real>) = (None, None);
        // Walk hull edges and collect the on-line crossing interval. O(n),
        // used on verification paths only; query paths use side tests first.
        for i in 0..n {
            let a = &self.verts[i].pt;
            let b = &self.verts[(i + 1) % n].pt;
            let ra = line.residual(a);
            let rb = line.residual(b);
            let (sa, sb) = (ra.sign(), rb.sign());
            let mut push = |t: Real| {
                tmin = Some(match tmin.take() {
                    None => t.clone(),
                    Some(m) => Real::min_of(m, t.clone()),
                });
                tmax = Some(match tmax.take() {
                    None => t,
                    Some(m) => Real::max_of(m, t),
                });
            };
            if sa == 0 {
                push(proj(a));
            }
            if sa * sb < 0 {
                // Edge crosses the line: t = proj(a) + (proj(b)-proj(a)) * ra/(ra-rb)
                let w = &ra / (&ra - &rb);
                let t = proj(a).clone() + (proj(b) - proj(a)) * w;
                push(t);
            }
            if n == 2 {
                if sb == 0 {
                    push(proj(b));
                }
                break;
            }
        }
        let (tmin, tmax) = match (tmin, tmax) {
            (Some(a), Some(b)) => (a, b),
            _ => return true,
        };
        let (sa, sb) = (proj(s.a()), proj(s.b()));
        let (smin, smax) = if sa <= sb { (sa, sb) } else { (sb, sa) };
        smax < tmin || smin > tmax
    }
}

/// Hull of the union of two hulls that are strictly separated by `sep`,
/// computed with two common-tangent walks.
pub fn merge_separated_hulls(
    h1: &ConvexHull,
    h2: &ConvexHull,
    sep: &crate::geom::Line,
) -> Result<ConvexHull, HullError> {
    if h1.is_empty() || h2.is_empty() {
        return Err(HullError::EmptyInput);
    }
    // Verify strict separation, h1 negative side / h2 positive (or swapped).
    let side_range = |h: &ConvexHull| -> (i32, i32) {
        let top = h.extreme(&sep.a, &sep.b);
        let bot = h.extreme(&-(&sep.a), &-(&sep.b));
        (
            sep.residual(&h.vertex(bot.pos).pt).sign(),
            sep.residual(&h.vertex(top.pos).pt).sign(),
        )
    };
    let (l1, u1) = side_range(h1);
    let (l2, u2) = side_range(h2);
    let (neg, pos) = if u1 < 0 && l2 > 0 {
        (h1, h2)
    } else if u2 < 0 && l1 > 0 {
        (h2, h1)
    } else {
        return Err(HullError::NotSeparated);
    };

    if neg.len() + pos.len() <= 8 {
        // Tiny hulls: rebuild from the vertex union.
        return ConvexHull::build_indexed(
            neg.verts
                .iter()
                .chain(pos.verts.iter())
                .map(|v| (v.idx, v.pt.clone())),
        );
    }

    // Work in coordinates u = signed distance direction (neg -> pos),
    // realized through orientation predicates only. `neg` plays the left
    // hull, `pos` the right hull of a Preparata–Hong merge.
    let t_upper = tangent_walk(neg, pos, true);
    let t_lower = tangent_walk(neg, pos, false);
    // Stitch: from upper.0 (on neg) CCW to lower.0, then lower.1 (on pos)
    // CCW to upper.1.
    let mut out: Vec<HullVertex> = Vec::new();
    let push_arc = |h: &ConvexHull, from: usize, to: usize, out: &mut Vec<HullVertex>| {
        let n = h.len();
        let mut i = from;
        loop {
            out.push(h.verts[i].clone());
            if i == to {
                break;
            }
            i = (i + 1) % n;
        }
    };
    push_arc(neg, t_upper.0, t_lower.0, &mut out);
    push_arc(pos, t_lower.1, t_upper.1, &mut out);
    // Drop collinear middles introduced by tangents through 3+ points.
    let cleaned = strict_ring(out);
    Ok(ConvexHull { verts: cleaned })
}

fn strict_ring(mut ring: Vec<HullVertex>) -> Vec<HullVertex> {
    loop {
        let n = ring.len();
        if n <= 2 {
            return ring;
        }
        let mut drop_pos = None;
        for i in 0..n {
            let a = &ring[(i + n - 1) % n].pt;
            let b = &ring[i].pt;
            let c = &ring[(i + 1) % n].pt;
            if orient(a, b, c) != Orientation::Ccw {
                drop_pos = Some(i);
                break;
            }
        }
        match drop_pos {
            Some(i) => {
                ring.remove(i);
            }
            None => return ring,
        }
    }
}

/// One common tangent of two strictly separated hulls; returns ring
/// positions `(on_left, on_right)`. `upper` selects the tangent keeping both
/// hulls on its right when walking left -> right hull.
fn tangent_walk(left: &ConvexHull, right: &ConvexHull, upper: bool) -> (usize, usize) {
    let nl = left.len();
    let nr = right.len();
    // Start from the vertices nearest the other hull along the separation;
    // any start works for the alternating walk below, which terminates
    // because each step strictly advances one pointer around its hull.
    let mut i = 0usize; // on left
    let mut j = 0usize; // on right
    let better = |a: &Point, b: &Point, c: &Point| -> bool {
        // Is c strictly on the "bad" side of tangent a->b, forcing an advance?
        let o = cross(a, b, c);
        if upper {
            o.sign() > 0 || (o.sign() == 0 && farther(a, b, c))
        } else {
            o.sign() < 0 || (o.sign() == 0 && farther(a, b, c))
        }
    };
    let mut changed = true;
    let mut guard = 4 * (nl + nr) + 8;
    while changed {
        changed = false;
        while better(
            &left.verts[i].pt,
            &right.verts[j].pt,
            &right.verts[(j + 1) % nr].pt,
        ) {
            j = (j + 1) % nr;
            changed = true;
            guard -= 1;
            assert!(guard > 0, "tangent walk failed to converge");
        }
        while better(
            &right.verts[j].pt,
            &left.verts[i].pt,
            &left.verts[(i + if upper { nl - 1 } else { 1 }) % nl].pt,
        ) {
            i = (i + if upper { nl - 1 } else { 1 }) % nl;
            changed = true;
            guard -= 1;
            assert!(guard > 0, "tangent walk failed to converge");
        }
    }
    (i, j)
}

fn farther(a: &Point, b: &Point, c: &Point) -> bool {
    // With a, b, c collinear: does c extend past b seen from a?
    let t = (&c.x - &a.x) * (&b.x - &a.x) + (&c.y - &a.y) * (&b.y - &a.y);
    let d = (&b.x - &a.x) * (&b.x - &a.x) + (&b.y - &a.y) * (&b.y - &a.y);
    t > d
}
