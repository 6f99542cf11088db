//! Slow, independent reference computations used to cross-check the main
//! modules. Nothing here is on a hot path.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::geometry::{Point, SymPolygon};
use crate::parallelograms::{p1, p2};
use crate::rational::{self, Rational};
use crate::reduction::{remove_edge_pair, Side};

/// Half-plane of the upper/lower split used for angular sorting.
fn upper(p: &Point) -> bool {
    p.y.is_positive() || (p.y.is_zero() && p.x.is_positive())
}

fn angular_cmp(a: &Point, b: &Point) -> Ordering {
    match (upper(a), upper(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => {
            let c = a.cross(b);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
    }
}

/// Polar body by brute force: intersect every pair of boundary lines
/// `<x, v> = 1` over the vertices `v`, keep the feasible points, and sort
/// them by angle.
pub fn dual_by_halfplane_intersection(poly: &SymPolygon) -> SymPolygon {
    let vs = poly.vertices();
    let one = Rational::one();
    let mut found: Vec<Point> = Vec::new();
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            // Solve <x, a> = 1, <x, b> = 1 by Cramer's rule.
            let det = a.cross(b);
            if det.is_zero() {
                continue;
            }
            let x = (&b.y - &a.y) / &det;
            let y = (&a.x - &b.x) / &det;
            let p = Point::new(x, y);
            if vs.iter().all(|v| p.dot(v) <= one) && !found.contains(&p) {
                found.push(p);
            }
        }
    }
    found.sort_by(angular_cmp);
    SymPolygon::new(found).expect("feasible region of a symmetric polygon is a symmetric polygon")
}

/// Area as a fan of triangles `[0, v_i, v_{i+1}]`, each measured as
/// half of base times height against the origin.
pub fn area_by_fan(poly: &SymPolygon) -> Rational {
    let len = poly.len();
    let half = rational::ratio(1, 2);
    (0..len)
        .map(|i| {
            let a = poly.vertex(i);
            let b = poly.vertex(i + 1);
            // |det| of the 2x2 matrix with rows a, b.
            let det = &a.x * &b.y - &b.x * &a.y;
            det.abs() * &half
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloArea {
    pub estimate: f64,
    pub stderr: f64,
}

impl MonteCarloArea {
    pub fn within_sigmas(&self, exact: f64, k: f64) -> bool {
        (self.estimate - exact).abs() <= k * self.stderr
    }
}

/// Rejection-sampling area estimate over the bounding box.
pub fn area_by_montecarlo(poly: &SymPolygon, samples: usize, seed: u64) -> MonteCarloArea {
    assert!(samples >= 10_000, "need at least 10^4 samples");
    let pts: Vec<(f64, f64)> = poly.vertices().iter().map(Point::to_f64).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let edges: Vec<((f64, f64), (f64, f64))> = (0..pts.len())
        .map(|i| (pts[i], pts[(i + 1) % pts.len()]))
        .collect();
    let inside = |x: f64, y: f64| {
        edges
            .iter()
            .all(|&((ax, ay), (bx, by))| (bx - ax) * (y - ay) - (by - ay) * (x - ax) >= 0.0)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hits = (0..samples)
        .filter(|_| inside(rng.gen_range(x0..x1), rng.gen_range(y0..y1)))
        .count();
    let box_area = (x1 - x0) * (y1 - y0);
    let p = hits as f64 / samples as f64;
    MonteCarloArea {
        estimate: box_area * p,
        stderr: box_area * (p * (1.0 - p) / samples as f64).sqrt(),
    }
}

/// One edge of one side, evaluated against the ratio inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub side: Side,
    pub edge: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    /// Mahler volume after deleting this edge pair from its side.
    pub m_after: Rational,
}

impl Candidate {
    pub fn qualifies(&self) -> bool {
        self.lhs <= self.rhs
    }

    pub fn gap(&self) -> Rational {
        &self.rhs - &self.lhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MoveReport {
    pub m_before: Option<Rational>,
    /// The side with the smaller mean type-1 ratio (primal on ties).
    pub chosen_side: Option<Side>,
    pub candidates: Vec<Candidate>,
}

impl MoveReport {
    pub fn qualifying(&self) -> impl Iterator<Item = &Candidate> {
        self.candidates.iter().filter(|c| c.qualifies())
    }

    pub fn qualifying_on_chosen_side(&self) -> usize {
        self.qualifying()
            .filter(|c| Some(c.side) == self.chosen_side)
            .count()
    }

    /// Every qualifying candidate on either side strictly lowers `M`.
    pub fn all_qualifying_decrease(&self) -> bool {
        match &self.m_before {
            Some(m) => self.qualifying().all(|c| &c.m_after < m),
            None => true,
        }
    }
}

/// Evaluate every edge of `P` and of `P°`, recording whether it satisfies
/// the ratio inequality and what deleting it does to `M`. Parallelograms
/// give an empty report.
pub fn exhaustive_move_check(poly: &SymPolygon) -> Result<MoveReport> {
    if poly.half() < 3 {
        return Ok(MoveReport::default());
    }
    let dual = dual_by_halfplane_intersection(poly);
    let mut candidates = Vec::with_capacity(2 * poly.len());
    let mut means = Vec::with_capacity(2);
    for (side, q, q_dual) in [(Side::Primal, poly, &dual), (Side::Dual, &dual, poly)] {
        let q_area = area_by_fan(q);
        let q_dual_area = area_by_fan(q_dual);
        let type1_total: Rational = (0..q.len()).map(|t| p1(q, t).area()).sum();
        means.push(type1_total / (&q_area * rational::int(q.len() as i64)));
        for t in 0..q.len() {
            let w = q.edge_line(t).into_normal();
            let x = q_dual
                .index_of(&w)
                .expect("edge line of a polygon is a vertex of its polar");
            let after = remove_edge_pair(q, t)?;
            candidates.push(Candidate {
                side,
                edge: t,
                lhs: p1(q, t).area() / &q_area,
                rhs: p2(q_dual, x)?.area() / &q_dual_area,
                m_after: after.mahler_volume(),
            });
        }
    }
    Ok(MoveReport {
        m_before: Some(area_by_fan(poly) * area_by_fan(&dual)),
        chosen_side: Some(if means[0] <= means[1] {
            Side::Primal
        } else {
            Side::Dual
        }),
        candidates,
    })
}
