//! Type-1 and type-2 parallelograms inscribed in a symmetric polygon, and
//! the comparison of their total areas.
//!
//! `p1(P, s)` is the hull of the edge pair `±s`; `p2(P, x)` is the hull of
//! the four neighbours of the vertex pair `±x`. Summed over a polygon with
//! at least eight sides the type-1 areas are strictly smaller; on hexagons
//! the two sums agree. The proof carves both parallelograms out of the
//! hexagon `H(x)` and compares the leftover triangles `T1(x - 1)` and
//! `T2(x)`, which share a base; [`hexagon_carving`] exposes those pieces.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::geometry::{orient, Point, SymPolygon};
use crate::rational::{self, Rational};

/// A centrally symmetric parallelogram, corners counterclockwise from the
/// lexicographically smallest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quad {
    corners: [Point; 4],
}

impl Quad {
    fn from_ccw(mut corners: [Point; 4]) -> Self {
        let start = (0..4).min_by(|&i, &j| corners[i].cmp(&corners[j])).unwrap();
        corners.rotate_left(start);
        debug_assert!(corners[2] == -&corners[0] && corners[3] == -&corners[1]);
        Quad { corners }
    }

    pub fn corners(&self) -> &[Point; 4] {
        &self.corners
    }

    pub fn area(&self) -> Rational {
        // Symmetric about the origin: four congruent-in-pairs fan triangles.
        self.corners[0].cross(&self.corners[1]) * rational::int(2)
    }
}

/// A triangle; only its unsigned area matters here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tri {
    pub corners: [Point; 3],
}

impl Tri {
    pub fn area(&self) -> Rational {
        let [a, b, c] = &self.corners;
        orient(a, b, c).abs() / rational::int(2)
    }
}

/// Type-1 parallelogram on edge `s`.
pub fn p1(poly: &SymPolygon, s: usize) -> Quad {
    let a = poly.vertex_at(s, 0).clone();
    let b = poly.vertex_at(s, 1).clone();
    Quad::from_ccw([a.clone(), b.clone(), -a, -b])
}

/// Type-2 parallelogram at vertex `x`. Undefined on parallelograms.
pub fn p2(poly: &SymPolygon, x: usize) -> Result<Quad> {
    let n = poly.half() as i64;
    if n < 3 {
        return Err(Error::DegenerateParallelogram);
    }
    Ok(Quad::from_ccw([
        poly.vertex_at(x, -1).clone(),
        poly.vertex_at(x, 1).clone(),
        poly.vertex_at(x, n - 1).clone(),
        poly.vertex_at(x, n + 1).clone(),
    ]))
}

/// Both sides of the type-1 / type-2 area comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelogramSums {
    /// Sum of `area(p1(s))` over all edges.
    pub lhs: Rational,
    /// Sum of `area(p2(x))` over all vertices.
    pub rhs: Rational,
    pub relation: Ordering,
}

impl ParallelogramSums {
    pub fn relation_symbol(&self) -> &'static str {
        match self.relation {
            Ordering::Less => "<",
            Ordering::Equal => "=",
            Ordering::Greater => ">",
        }
    }
}

/// Sum the type-1 and type-2 areas and check the expected relation:
/// equality on hexagons, strict `<` from eight sides up.
pub fn compare_parallelogram_sums(poly: &SymPolygon) -> Result<ParallelogramSums> {
    if poly.half() < 3 {
        return Err(Error::DegenerateParallelogram);
    }
    let lhs: Rational = (0..poly.len()).map(|s| p1(poly, s).area()).sum();
    let rhs = (0..poly.len())
        .map(|x| p2(poly, x).map(|q| q.area()))
        .sum::<Result<Rational>>()?;
    let relation = lhs.cmp(&rhs);
    let expected = if poly.half() == 3 {
        Ordering::Equal
    } else {
        Ordering::Less
    };
    if relation != expected {
        return Err(Error::Invariant(format!(
            "type-1 sum {lhs} vs type-2 sum {rhs} on a {}-gon",
            poly.len()
        )));
    }
    Ok(ParallelogramSums { lhs, rhs, relation })
}

/// The hexagon `H(x)` and the triangles left over when `p1(e(x))` or
/// `p2(x)` is carved out of it (each leaves a triangle and its negative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Carving {
    /// `[x-1, x, x+1, x+n-1, x+n, x+n+1]`.
    pub hexagon: [Point; 6],
    /// `[x, x+1, x+n-1]`.
    pub t1: Tri,
    /// `[x-1, x, x+1]`.
    pub t2: Tri,
}

impl Carving {
    pub fn hexagon_area(&self) -> Rational {
        let h = &self.hexagon;
        let twice: Rational = (0..6).map(|i| h[i].cross(&h[(i + 1) % 6])).sum();
        twice / rational::int(2)
    }
}

/// Edge `e(x) = [x-1, x]`, as an edge index.
pub fn edge_before(poly: &SymPolygon, x: usize) -> usize {
    crate::geometry::index_shift(x, -1, poly.len())
}

pub fn hexagon_carving(poly: &SymPolygon, x: usize) -> Result<Carving> {
    let n = poly.half() as i64;
    if n < 3 {
        return Err(Error::DegenerateParallelogram);
    }
    let v = |k: i64| poly.vertex_at(x, k).clone();
    Ok(Carving {
        hexagon: [v(-1), v(0), v(1), v(n - 1), v(n), v(n + 1)],
        t1: Tri {
            corners: [v(0), v(1), v(n - 1)],
        },
        t2: Tri {
            corners: [v(-1), v(0), v(1)],
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::zonogen::named_polygon;

    fn at(poly: &SymPolygon, x: i64, y: i64) -> usize {
        poly.index_of(&Point::int(x, y)).unwrap()
    }

    #[test]
    fn type1_examples() {
        let h6 = named_polygon("hex6").unwrap();
        let s = at(&h6, 0, 1);
        assert_eq!(h6.vertex_at(s, 1), &Point::int(-1, 1));
        let q = p1(&h6, s);
        assert_eq!(q.area(), int(2));
        let mut corners = q.corners().to_vec();
        corners.sort();
        let mut expect = vec![
            Point::int(0, 1),
            Point::int(-1, 1),
            Point::int(0, -1),
            Point::int(1, -1),
        ];
        expect.sort();
        assert_eq!(corners, expect);

        let sq = named_polygon("square").unwrap();
        for s in 0..4 {
            assert_eq!(p1(&sq, s).corners().as_slice(), sq.vertices());
            assert_eq!(p1(&sq, s).area(), int(4));
        }

        let h6b = named_polygon("hex6b").unwrap();
        let top = at(&h6b, 1, 2);
        assert_eq!(p1(&h6b, top).area(), int(8));
    }

    #[test]
    fn type2_examples() {
        let h6 = named_polygon("hex6").unwrap();
        let q = p2(&h6, at(&h6, 1, 0)).unwrap();
        assert_eq!(q.area(), int(2));
        assert!(q.corners().contains(&Point::int(1, -1)));
        assert!(q.corners().contains(&Point::int(-1, 1)));

        let sq = named_polygon("square").unwrap();
        assert_eq!(p2(&sq, 0), Err(Error::DegenerateParallelogram));

        let dual = named_polygon("hex6b").unwrap().polar_dual();
        let top = dual.index_of(&Point::new(int(0), ratio(1, 2))).unwrap();
        let q = p2(&dual, top).unwrap();
        assert_eq!(q.area(), ratio(1, 2));
        assert_eq!(q.corners()[0], Point::new(ratio(-1, 2), ratio(-1, 4)));
    }

    #[test]
    fn parallelogram_sum_examples() {
        let h6 = named_polygon("hex6").unwrap();
        let r = compare_parallelogram_sums(&h6).unwrap();
        assert_eq!(
            (r.lhs, r.rhs, r.relation),
            (int(12), int(12), Ordering::Equal)
        );
        let z8 = named_polygon("oct8").unwrap();
        let r = compare_parallelogram_sums(&z8).unwrap();
        assert_eq!(r.relation, Ordering::Less);
        assert_eq!(r.relation_symbol(), "<");
        assert_eq!(
            compare_parallelogram_sums(&named_polygon("square").unwrap()),
            Err(Error::DegenerateParallelogram)
        );
    }

    #[test]
    fn carving_identities_on_named_polygons() {
        for name in ["hex6", "hex6b", "oct8"] {
            let poly = named_polygon(name).unwrap();
            for x in 0..poly.len() {
                let c = hexagon_carving(&poly, x).unwrap();
                let h = c.hexagon_area();
                let two = int(2);
                assert_eq!(
                    h,
                    p1(&poly, edge_before(&poly, x)).area() + &two * c.t1.area()
                );
                assert_eq!(h, p2(&poly, x).unwrap().area() + &two * c.t2.area());
            }
        }
    }

    #[test]
    fn triangles_on_hexagon_are_equal_and_on_octagon_ordered() {
        let h6 = named_polygon("hex6").unwrap();
        for x in 0..6 {
            let c = hexagon_carving(&h6, x).unwrap();
            assert_eq!(c.t1.area(), c.t2.area());
        }
        let z8 = named_polygon("oct8").unwrap();
        for x in 0..8 {
            let prev = hexagon_carving(&z8, edge_before(&z8, x)).unwrap();
            let here = hexagon_carving(&z8, x).unwrap();
            assert!(prev.t1.area() > here.t2.area());
        }
    }
}
