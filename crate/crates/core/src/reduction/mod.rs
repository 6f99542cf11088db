//! Deleting an edge pair `±s` from a symmetric polygon, and the exact
//! bookkeeping that shows when this lowers the Mahler volume.
//!
//! Removing `±s` from the hyperplane presentation extends the neighbouring
//! edges of `s` until they meet at `z` (and `-z`). Dually, the vertices
//! `±v°(s)` drop out of the polar. In a frame where `s` is horizontal and
//! `z` sits on the vertical axis both changes are triangles whose areas are
//! the fraction `β / 2γ` of `p1(s)` and `p2(v°(s))` respectively, which
//! gives
//!
//! ```text
//! M(A_s) = M(A) + r (area(A°) p1 - area(A) p2) - r² p1 p2,    r = β / 2γ.
//! ```
//!
//! The last term is always negative, so whenever
//! `p1 / area(A) <= p2 / area(A°)` the deletion lowers `M`.
//!
//! Every quantity here is exact. Rotations are replaced by a rational map
//! that sends the edge direction to the x-axis; only areas and vertical
//! coordinates are read off the frame, and all of those are preserved up to
//! the common determinant factor.

mod descent;

pub use descent::{
    apply_move, descend, mean_type1_ratio, select_move, DescentStep, DescentTrace, Move, Side,
    TraceJson,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{line_intersection, LinearMap, Point, SymPolygon};
use crate::parallelograms::{p1, p2};
use crate::rational::{self, Rational};

/// `P` transformed so that edge `edge` is horizontal and on the lower
/// boundary, and the lines through its two neighbouring edges meet on the
/// vertical axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedFrame {
    pub map: LinearMap,
    pub polygon: SymPolygon,
    pub edge: usize,
}

/// Which neighbour `s'` of the edge `s` to measure against. Vertices are
/// stored counterclockwise, so the clockwise neighbour is edge `s - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Neighbor {
    Clockwise,
    Anticlockwise,
}

impl Neighbor {
    fn offset(self) -> i64 {
        match self {
            Neighbor::Clockwise => -1,
            Neighbor::Anticlockwise => 1,
        }
    }
}

/// Vertical distances in a normalized frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerticalDistances {
    /// From `z` to the line of `s`.
    pub alpha: Rational,
    /// From the origin to the line of `s`.
    pub c_s: Rational,
    /// From `v°(s)` to `v°(s')`.
    pub beta: Rational,
    /// From `v°(s')` to the origin.
    pub gamma: Rational,
}

impl VerticalDistances {
    /// `α γ = β c(s)`, the cross-multiplied form of `α / c(s) = β / γ`.
    pub fn identity_holds(&self) -> bool {
        &self.alpha * &self.gamma == &self.beta * &self.c_s
    }

    pub fn all_positive(&self) -> bool {
        [&self.alpha, &self.c_s, &self.beta, &self.gamma]
            .iter()
            .all(|q| q.is_positive())
    }

    /// `β / 2γ`.
    pub fn update_ratio(&self) -> Rational {
        &self.beta / (&self.gamma * rational::int(2))
    }
}

fn require_hexagon_or_more(poly: &SymPolygon) -> Result<()> {
    if poly.half() < 3 {
        Err(Error::TooFewSides)
    } else {
        Ok(())
    }
}

/// Smallest integer vector with the same direction as `d`.
fn primitive_direction(d: &Point) -> (BigInt, BigInt) {
    let l = d.x.denom().lcm(d.y.denom());
    let dx = d.x.numer() * (&l / d.x.denom());
    let dy = d.y.numer() * (&l / d.y.denom());
    let g = dx.gcd(&dy);
    (dx / &g, dy / g)
}

/// Meeting point of the lines through the edges adjacent to `s`.
fn apex(poly: &SymPolygon, s: usize) -> Result<Point> {
    line_intersection(
        poly.vertex_at(s, -1),
        poly.vertex_at(s, 0),
        poly.vertex_at(s, 1),
        poly.vertex_at(s, 2),
    )
    .ok_or_else(|| Error::Invariant("edges adjacent to s are parallel".into()))
}

pub fn normalize_for_edge(poly: &SymPolygon, s: usize) -> Result<NormalizedFrame> {
    require_hexagon_or_more(poly)?;
    let s = s % poly.len();
    let (p, q) = poly.edge(s);
    let (dx, dy) = primitive_direction(&(q - p));
    let rot = LinearMap::new(
        Rational::from_integer(dx.clone()),
        Rational::from_integer(dy.clone()),
        Rational::from_integer(-dy),
        Rational::from_integer(dx),
    )?;
    let z = rot.apply(&apex(poly, s)?);
    if z.y.is_zero() {
        return Err(Error::Invariant("apex on the horizontal axis".into()));
    }
    let shear = LinearMap::new(
        Rational::one(),
        -(&z.x / &z.y),
        Rational::zero(),
        Rational::one(),
    )?;
    let mut map = shear.compose(&rot);
    if map.apply(p).y.is_positive() {
        map = LinearMap::from_ints(-1, 0, 0, -1)?.compose(&map);
    }
    let polygon = poly.apply_linear(&map)?;
    let edge = polygon
        .index_of(&map.apply(p))
        .ok_or_else(|| Error::Invariant("edge lost under normalization".into()))?;
    let frame = NormalizedFrame { map, polygon, edge };
    frame.check()?;
    Ok(frame)
}

impl NormalizedFrame {
    fn check(&self) -> Result<()> {
        let (p, q) = self.polygon.edge(self.edge);
        if p.y != q.y || !p.y.is_negative() || p.x >= q.x {
            return Err(Error::Invariant("edge not horizontal at the bottom".into()));
        }
        if !self.apex()?.x.is_zero() {
            return Err(Error::Invariant("apex off the vertical axis".into()));
        }
        Ok(())
    }

    /// Height of the edge line (negative: the edge is below the origin).
    pub fn edge_height(&self) -> &Rational {
        &self.polygon.vertex(self.edge).y
    }

    /// `z`, on the vertical axis below the edge.
    pub fn apex(&self) -> Result<Point> {
        apex(&self.polygon, self.edge)
    }

    /// Dual vertex of edge `edge + offset`.
    fn dual_vertex(&self, offset: i64) -> Point {
        let s = crate::geometry::index_shift(self.edge, offset, self.polygon.len());
        self.polygon.edge_line(s).into_normal()
    }

    /// The two dual vertices adjacent to `v°(s)` share a second coordinate.
    pub fn dual_neighbors_level(&self) -> bool {
        self.dual_vertex(-1).y == self.dual_vertex(1).y
    }
}

pub fn vertical_distances(frame: &NormalizedFrame, which: Neighbor) -> Result<VerticalDistances> {
    let y_s = frame.edge_height();
    let z = frame.apex()?;
    let w_s = frame.dual_vertex(0);
    let w_n = frame.dual_vertex(which.offset());
    Ok(VerticalDistances {
        alpha: y_s - &z.y,
        c_s: -y_s,
        beta: (&w_s.y - &w_n.y).abs(),
        gamma: w_n.y.abs(),
    })
}

/// `A_s`: drop the edge pair `±s` and extend the neighbouring edges to
/// their meeting points `±z`.
pub fn remove_edge_pair(poly: &SymPolygon, s: usize) -> Result<SymPolygon> {
    require_hexagon_or_more(poly)?;
    let len = poly.len();
    let n = poly.half();
    let s = s % len;
    let z = apex(poly, s)?;
    let mut out = Vec::with_capacity(len - 2);
    for i in 0..len {
        if i == s {
            out.push(z.clone());
        } else if i == (s + n) % len {
            out.push(-&z);
        } else if i != (s + 1) % len && i != (s + n + 1) % len {
            out.push(poly.vertex(i).clone());
        }
    }
    SymPolygon::from_ccw(out)
}

/// Drop the vertex pair `±x`; the rest is already the hull.
pub fn remove_vertex_pair(poly: &SymPolygon, x: usize) -> Result<SymPolygon> {
    require_hexagon_or_more(poly)?;
    let len = poly.len();
    let x = x % len;
    let anti = (x + poly.half()) % len;
    let out = (0..len)
        .filter(|&i| i != x && i != anti)
        .map(|i| poly.vertex(i).clone())
        .collect();
    SymPolygon::from_ccw(out)
}

/// Index in `dual` (the canonical polar of `poly`) of the vertex `v°(s)`.
pub fn dual_index(poly: &SymPolygon, dual: &SymPolygon, s: usize) -> usize {
    dual.index_of(poly.edge_line(s).normal())
        .expect("every edge line is a vertex of the polar")
}

/// The two sides of the parallelogram-ratio inequality for edge `s`:
/// `area(p1(s)) / area(P)` and `area(p2(v°(s))) / area(P°)`.
pub fn ratio_sides(poly: &SymPolygon, dual: &SymPolygon, s: usize) -> Result<(Rational, Rational)> {
    let lhs = p1(poly, s).area() / poly.area();
    let rhs = p2(dual, dual_index(poly, dual, s))?.area() / dual.area();
    Ok((lhs, rhs))
}

/// [`ratio_sides`] for every edge of `poly` at once.
pub fn all_ratio_sides(poly: &SymPolygon, dual: &SymPolygon) -> Result<Vec<(Rational, Rational)>> {
    let area = poly.area();
    let dual_area = dual.area();
    // Dual vertices follow the edges of `poly` in order, up to rotation.
    let shift = dual_index(poly, dual, 0);
    (0..poly.len())
        .map(|s| {
            let lhs = p1(poly, s).area() / &area;
            let rhs = p2(dual, (s + shift) % dual.len())?.area() / &dual_area;
            Ok((lhs, rhs))
        })
        .collect()
}

/// Which of the identities behind the deletion step held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeletionIdentities {
    pub primal_area_update: bool,
    pub dual_area_update: bool,
    pub mahler_expansion: bool,
    pub last_term_negative: bool,
    pub ratio_identity_both_neighbors: bool,
    pub dual_neighbors_level: bool,
}

impl DeletionIdentities {
    pub fn all(&self) -> bool {
        self.primal_area_update
            && self.dual_area_update
            && self.mahler_expansion
            && self.last_term_negative
            && self.ratio_identity_both_neighbors
            && self.dual_neighbors_level
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub m_before: Rational,
    pub m_after: Rational,
    pub identities: DeletionIdentities,
}

impl DeletionCheck {
    pub fn qualifies(&self) -> bool {
        self.lhs <= self.rhs
    }
}

/// Evaluate the deletion of `±s`: both sides of the ratio inequality, the
/// Mahler volumes before and after, and every exact identity in the
/// normalized frame. Errors if a qualifying edge fails to lower `M`.
pub fn check_edge_deletion(poly: &SymPolygon, s: usize) -> Result<DeletionCheck> {
    require_hexagon_or_more(poly)?;
    let frame = normalize_for_edge(poly, s)?;
    let a = &frame.polygon;
    let t = frame.edge;
    let dual = a.polar_dual();
    let area = a.area();
    let dual_area = dual.area();
    let p1_area = p1(a, t).area();
    let p2_area = p2(&dual, dual_index(a, &dual, t))?.area();

    let cw = vertical_distances(&frame, Neighbor::Clockwise)?;
    let acw = vertical_distances(&frame, Neighbor::Anticlockwise)?;
    let r = cw.update_ratio();

    let a_s = remove_edge_pair(a, t)?;
    let a_s_area = a_s.area();
    let a_s_dual_area = a_s.polar_dual().area();

    let m = &area * &dual_area;
    let middle = &r * (&dual_area * &p1_area - &area * &p2_area);
    let last = &r * &r * &p1_area * &p2_area;
    let expanded = &m + &middle - &last;

    let identities = DeletionIdentities {
        primal_area_update: a_s_area == &area + &r * &p1_area,
        dual_area_update: a_s_dual_area == &dual_area - &r * &p2_area,
        mahler_expansion: expanded == &a_s_area * &a_s_dual_area,
        last_term_negative: last.is_positive(),
        ratio_identity_both_neighbors: cw.identity_holds()
            && acw.identity_holds()
            && cw.beta * &acw.gamma == acw.beta * &cw.gamma,
        dual_neighbors_level: frame.dual_neighbors_level(),
    };

    let m_before = poly.mahler_volume();
    let m_after = remove_edge_pair(poly, s)?.mahler_volume();
    let check = DeletionCheck {
        lhs: p1_area / area,
        rhs: p2_area / dual_area,
        m_before,
        m_after,
        identities,
    };
    if check.qualifies() && check.m_after >= check.m_before {
        return Err(Error::Invariant(format!(
            "qualifying edge {s} did not lower the Mahler volume ({} -> {})",
            check.m_before, check.m_after
        )));
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::zonogen::named_polygon;

    fn edge_from(poly: &SymPolygon, p: (i64, i64), q: (i64, i64)) -> usize {
        let s = poly.index_of(&Point::int(p.0, p.1)).unwrap();
        assert_eq!(poly.vertex_at(s, 1), &Point::int(q.0, q.1));
        s
    }

    #[test]
    fn frame_for_hex6b_top_edge_is_a_half_turn() {
        let h = named_polygon("hex6b").unwrap();
        let top = edge_from(&h, (1, 2), (-1, 2));
        let frame = normalize_for_edge(&h, top).unwrap();
        assert_eq!(frame.map, LinearMap::from_ints(-1, 0, 0, -1).unwrap());
        assert_eq!(frame.polygon, h);
        assert_eq!(frame.polygon.vertex(frame.edge), &Point::int(-1, -2));
        assert_eq!(frame.apex().unwrap(), Point::int(0, -4));
    }

    #[test]
    fn frame_for_sheared_hex6b() {
        let shear = LinearMap::from_ints(1, 1, 0, 1).unwrap();
        let h = named_polygon("hex6b")
            .unwrap()
            .apply_linear(&shear)
            .unwrap();
        let top = edge_from(&h, (3, 2), (1, 2));
        let frame = normalize_for_edge(&h, top).unwrap();
        assert!(frame.apex().unwrap().x.is_zero());
        assert_eq!(frame.polygon.mahler_volume(), int(9));
    }

    #[test]
    fn frames_reject_parallelograms() {
        let sq = named_polygon("square").unwrap();
        assert_eq!(normalize_for_edge(&sq, 0), Err(Error::TooFewSides));
        assert_eq!(remove_edge_pair(&sq, 0), Err(Error::TooFewSides));
        assert_eq!(remove_vertex_pair(&sq, 0), Err(Error::TooFewSides));
        assert_eq!(check_edge_deletion(&sq, 0), Err(Error::TooFewSides));
    }

    #[test]
    fn vertical_distances_on_hex6b() {
        let h = named_polygon("hex6b").unwrap();
        let top = edge_from(&h, (1, 2), (-1, 2));
        let frame = normalize_for_edge(&h, top).unwrap();
        for which in [Neighbor::Clockwise, Neighbor::Anticlockwise] {
            let d = vertical_distances(&frame, which).unwrap();
            assert_eq!(
                (
                    d.alpha.clone(),
                    d.c_s.clone(),
                    d.beta.clone(),
                    d.gamma.clone()
                ),
                (int(2), int(2), ratio(1, 4), ratio(1, 4))
            );
            assert!(d.identity_holds());
        }
        assert!(frame.dual_neighbors_level());
    }

    #[test]
    fn vertical_distances_on_hex6_bottom_edge() {
        // z = (1, -2) before the shear; alpha is 1, not 0.
        let h = named_polygon("hex6").unwrap();
        let s = edge_from(&h, (0, -1), (1, -1));
        let frame = normalize_for_edge(&h, s).unwrap();
        let d = vertical_distances(&frame, Neighbor::Clockwise).unwrap();
        assert_eq!(
            (
                d.alpha.clone(),
                d.c_s.clone(),
                d.beta.clone(),
                d.gamma.clone()
            ),
            (int(1), int(1), ratio(1, 2), ratio(1, 2))
        );
        assert!(d.identity_holds() && d.all_positive());
    }

    #[test]
    fn remove_edge_pair_examples() {
        let h6 = named_polygon("hex6").unwrap();
        let s = edge_from(&h6, (0, 1), (-1, 1));
        let out = remove_edge_pair(&h6, s).unwrap();
        let expect = SymPolygon::new(vec![
            Point::int(1, 0),
            Point::int(-1, 2),
            Point::int(-1, 0),
            Point::int(1, -2),
        ])
        .unwrap();
        assert_eq!(out, expect);
        assert_eq!(out.area(), int(4));
        assert_eq!(out.mahler_volume(), int(8));

        let h6b = named_polygon("hex6b").unwrap();
        let top = edge_from(&h6b, (1, 2), (-1, 2));
        let out = remove_edge_pair(&h6b, top).unwrap();
        let expect = SymPolygon::new(vec![
            Point::int(0, 4),
            Point::int(-2, 0),
            Point::int(0, -4),
            Point::int(2, 0),
        ])
        .unwrap();
        assert_eq!(out, expect);
        assert_eq!(out.area(), int(16));
    }

    #[test]
    fn remove_vertex_pair_is_dual_of_edge_removal() {
        let d6 = named_polygon("hex6").unwrap().polar_dual();
        let x = d6.index_of(&Point::int(0, 1)).unwrap();
        let out = remove_vertex_pair(&d6, x).unwrap();
        assert_eq!(out.len(), 4);
        assert_eq!(out.mahler_volume(), int(8));

        for name in ["hex6", "hex6b", "oct8"] {
            let poly = named_polygon(name).unwrap();
            let dual = poly.polar_dual();
            for x in 0..poly.len() {
                let direct = remove_vertex_pair(&poly, x).unwrap();
                assert!(direct.area() < poly.area());
                // x is the dual vertex of the polar edge whose line is <., x> = 1.
                let e = (0..dual.len())
                    .find(|&t| dual.edge_line(t).normal() == poly.vertex(x))
                    .unwrap();
                let via_dual = remove_edge_pair(&dual, e).unwrap().polar_dual();
                assert_eq!(direct, via_dual);
            }
        }
    }

    #[test]
    fn deletion_worked_examples() {
        let h6b = named_polygon("hex6b").unwrap();
        let top = edge_from(&h6b, (1, 2), (-1, 2));
        let c = check_edge_deletion(&h6b, top).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (ratio(2, 3), ratio(2, 3)));
        assert_eq!((c.m_before.clone(), c.m_after.clone()), (int(9), int(8)));
        assert!(c.identities.all());

        let h6 = named_polygon("hex6").unwrap();
        let s = edge_from(&h6, (0, 1), (-1, 1));
        let c = check_edge_deletion(&h6, s).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (ratio(2, 3), ratio(2, 3)));
        assert_eq!((c.m_before.clone(), c.m_after.clone()), (int(9), int(8)));
    }

    #[test]
    fn deletion_identities_hold_on_every_octagon_edge() {
        let z8 = named_polygon("oct8").unwrap();
        for s in 0..z8.len() {
            let c = check_edge_deletion(&z8, s).unwrap();
            assert!(c.identities.all(), "edge {s}: {:?}", c.identities);
            if c.qualifies() {
                assert!(c.m_after < c.m_before);
            }
        }
    }
}
