//! Exact primitives for centrally symmetric convex polygons: points, the
//! validated polygon type, polar duals, invertible linear maps and the
//! Mahler volume `area(P) * area(P°)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A point (or vector) in the plane with rational coordinates.
///
/// Ordering is lexicographic: `x` first, then `y`.
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
        Point::new(rational::int(x), rational::int(y))
    }

    pub fn origin() -> Self {
        Point::new(Rational::zero(), Rational::zero())
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the 3-D cross product; positive when `other` lies
    /// counterclockwise of `self`.
    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rational::to_f64(&self.x), rational::to_f64(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Cross product of `b - a` and `c - b`: positive for a left turn at `b`.
pub fn turn(a: &Point, b: &Point, c: &Point) -> Rational {
    (b - a).cross(&(c - b))
}

/// Twice the signed area of the triangle `abc`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Rational {
    (b - a).cross(&(c - a))
}

/// Intersection of the line through `p1, p2` with the line through `q1, q2`,
/// or `None` when they are parallel.
pub fn line_intersection(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> Option<Point> {
    let d = p2 - p1;
    let e = q2 - q1;
    let denom = d.cross(&e);
    if denom.is_zero() {
        return None;
    }
    let t = (q1 - p1).cross(&e) / denom;
    Some(p1 + &d.scale(&t))
}

/// Reduce `i + k` modulo `modulus`; used for all cyclic vertex and edge
/// arithmetic (`x + n` is the antipode of `x` on a `2n`-gon).
pub fn index_shift(i: usize, k: i64, modulus: usize) -> usize {
    assert!(modulus > 0, "index_shift needs a positive modulus");
    let m = modulus as i64;
    (((i as i64 + k) % m + m) % m) as usize
}

/// The half-plane `{x : <x, w> <= 1}`.
///
/// For an edge `s` of a polygon, `w` is the dual vertex of `s`: the unit
/// normal divided by the support distance. Neither of those is stored on its
/// own because the norm of `w` is irrational in general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPlane {
    w: Point,
}

impl HalfPlane {
    pub fn new(w: Point) -> Result<Self> {
        if w.is_origin() {
            return Err(Error::Parse("half-plane normal must be nonzero".into()));
        }
        Ok(HalfPlane { w })
    }

    pub fn normal(&self) -> &Point {
        &self.w
    }

    pub fn into_normal(self) -> Point {
        self.w
    }

    /// `<p, w>`; equal to 1 on the boundary line.
    pub fn evaluate(&self, p: &Point) -> Rational {
        p.dot(&self.w)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.evaluate(p) <= Rational::one()
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        self.evaluate(p) == Rational::one()
    }

    /// Squared support distance `c(s)^2 = 1 / |w|^2`; rational even though
    /// `c(s)` itself usually is not.
    pub fn support_distance_squared(&self) -> Rational {
        Rational::one() / self.w.dot(&self.w)
    }
}

/// An invertible 2x2 rational matrix with rows `(a b)` and `(c d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl LinearMap {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        let m = LinearMap { a, b, c, d };
        if m.determinant().is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(m)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(
            rational::int(a),
            rational::int(b),
            rational::int(c),
            rational::int(d),
        )
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1).expect("identity is invertible")
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn determinant(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.a * &p.x + &self.b * &p.y,
            &self.c * &p.x + &self.d * &p.y,
        )
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    pub fn transpose(&self) -> LinearMap {
        LinearMap {
            a: self.a.clone(),
            b: self.c.clone(),
            c: self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn inverse(&self) -> LinearMap {
        let det = self.determinant();
        LinearMap {
            a: &self.d / &det,
            b: -&self.b / &det,
            c: -&self.c / &det,
            d: &self.a / &det,
        }
    }

    /// The map `(T*)^{-1}` that carries `P°` onto `T(P)°`.
    pub fn dual(&self) -> LinearMap {
        self.transpose().inverse()
    }
}

/// A centrally symmetric, strictly convex polygon with `2n >= 4` vertices.
///
/// Vertices are stored counterclockwise and rotated so that vertex 0 is the
/// lexicographically smallest; two polygons are equal iff their vertex
/// lists are. Vertex `i` and vertex `i + n` are antipodes, and edge `i` runs
/// from vertex `i` to vertex `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymPolygon {
    vertices: Vec<Point>,
}

impl SymPolygon {
    /// Validate and canonicalize a vertex list. Clockwise input is reversed.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 4 {
            return Err(Error::TooFewVertices(points.len()));
        }
        if !points.len().is_multiple_of(2) {
            return Err(Error::NotCentrallySymmetric);
        }
        let mut points = points;
        let signed = twice_signed_area(&points);
        if signed.is_zero() {
            return Err(Error::NotConvex);
        }
        if signed.is_negative() {
            points.reverse();
        }
        Self::from_ccw(points)
    }

    /// Validate a list that must already be counterclockwise.
    pub fn from_ccw(points: Vec<Point>) -> Result<Self> {
        let len = points.len();
        if len < 4 {
            return Err(Error::TooFewVertices(len));
        }
        if !len.is_multiple_of(2) {
            return Err(Error::NotCentrallySymmetric);
        }
        if !twice_signed_area(&points).is_positive() {
            return Err(Error::WrongOrientation);
        }
        let n = len / 2;
        if (0..n).any(|i| points[i + n] != -&points[i]) {
            return Err(Error::NotCentrallySymmetric);
        }
        // Strict left turn at every vertex and edge directions winding exactly
        // once (two upper/lower half-plane crossings): strictly convex.
        let upper = |d: &Point| d.y.is_positive() || (d.y.is_zero() && d.x.is_positive());
        let mut crossings = 0;
        for i in 0..len {
            let a = &points[i];
            let b = &points[(i + 1) % len];
            let c = &points[(i + 2) % len];
            if !orient(a, b, c).is_positive() {
                return Err(Error::NotConvex);
            }
            if upper(&(b - a)) != upper(&(c - b)) {
                crossings += 1;
            }
            if !a.cross(b).is_positive() {
                return Err(Error::Invariant("origin not interior".into()));
            }
        }
        if crossings != 2 {
            return Err(Error::NotConvex);
        }
        Ok(Self::canonical(points))
    }

    fn canonical(mut points: Vec<Point>) -> Self {
        let start = points
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| p.cmp(q))
            .map(|(i, _)| i)
            .unwrap_or(0);
        points.rotate_left(start);
        SymPolygon { vertices: points }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Number of vertices, `2n`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Half the vertex count.
    pub fn half(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn is_parallelogram(&self) -> bool {
        self.half() == 2
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.len()]
    }

    /// Vertex `i + k`, cyclically.
    pub fn vertex_at(&self, i: usize, k: i64) -> &Point {
        &self.vertices[index_shift(i, k, self.len())]
    }

    pub fn edge(&self, s: usize) -> (&Point, &Point) {
        (self.vertex_at(s, 0), self.vertex_at(s, 1))
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    /// Exact area by the trapezoid form of the shoelace formula.
    pub fn area(&self) -> Rational {
        let len = self.len();
        let twice: Rational = (0..len)
            .map(|i| {
                let p = &self.vertices[i];
                let q = &self.vertices[(i + 1) % len];
                (&p.x - &q.x) * (&p.y + &q.y)
            })
            .sum();
        twice / rational::int(2)
    }

    /// Boundary half-plane of edge `s`: the unique `w` with
    /// `<p, w> = <q, w> = 1` for the endpoints `p, q`.
    pub fn edge_line(&self, s: usize) -> HalfPlane {
        let (p, q) = self.edge(s);
        let det = p.cross(q);
        let w = Point::new((&q.y - &p.y) / &det, (&p.x - &q.x) / &det);
        HalfPlane { w }
    }

    /// Dual vertices listed in edge order, before canonical rotation: entry
    /// `s` is `v°(s)`.
    pub fn dual_vertices(&self) -> Vec<Point> {
        (0..self.len())
            .map(|s| self.edge_line(s).into_normal())
            .collect()
    }

    /// The polar body, whose vertex for edge `s` is `edge_line(s)`.
    pub fn polar_dual(&self) -> SymPolygon {
        SymPolygon::canonical(self.dual_vertices())
    }

    pub fn mahler_volume(&self) -> Rational {
        self.area() * self.polar_dual().area()
    }

    /// Image under an invertible map; orientation is repaired when the
    /// determinant is negative.
    pub fn apply_linear(&self, map: &LinearMap) -> Result<SymPolygon> {
        if map.determinant().is_zero() {
            return Err(Error::SingularMap);
        }
        SymPolygon::new(self.vertices.iter().map(|p| map.apply(p)).collect())
    }

    /// Whether `p` lies in the closed polygon.
    pub fn contains(&self, p: &Point) -> bool {
        (0..self.len()).all(|s| self.edge_line(s).contains(p))
    }

    /// Whether every vertex of `other` lies in this polygon.
    pub fn contains_polygon(&self, other: &SymPolygon) -> bool {
        other.vertices.iter().all(|p| self.contains(p))
    }
}

/// Twice the signed area of a closed vertex list, by the cross-product form.
pub(crate) fn twice_signed_area(points: &[Point]) -> Rational {
    let len = points.len();
    (0..len)
        .map(|i| points[i].cross(&points[(i + 1) % len]))
        .sum()
}

/// Wire form of a polygon: `{"vertices": [["p/q", "p/q"], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<[String; 2]>,
}

impl From<&SymPolygon> for PolygonJson {
    fn from(p: &SymPolygon) -> Self {
        PolygonJson {
            vertices: p
                .vertices
                .iter()
                .map(|v| [rational::format(&v.x), rational::format(&v.y)])
                .collect(),
        }
    }
}

impl TryFrom<PolygonJson> for SymPolygon {
    type Error = Error;

    fn try_from(json: PolygonJson) -> Result<Self> {
        let points = json
            .vertices
            .iter()
            .map(|[x, y]| Ok(Point::new(rational::parse(x)?, rational::parse(y)?)))
            .collect::<Result<Vec<_>>>()?;
        SymPolygon::new(points)
    }
}

impl SymPolygon {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolygonJson::from(self)).expect("polygon serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let json: PolygonJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        SymPolygon::try_from(json)
    }
}
