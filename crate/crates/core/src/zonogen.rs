//! Seeded generation of centrally symmetric convex polygons as zonogons,
//! plus the fixed polygons used throughout the test suite.
//!
//! A zonogon with generators `g_1, ..., g_n` (distinct directions in the
//! upper half-plane, sorted by angle) has vertices
//! `v_k = -(g_1 + ... + g_n)/2 + g_1 + ... + g_k`, followed by their
//! negatives. Generators are drawn as `2h` for integer `h`, so all vertices
//! are integral.
//!
//! The random source is SplitMix64:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15          (wrapping)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9    (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB    (wrapping)
//! return z ^ (z >> 31)
//! ```
//!
//! An integer in `[-B, B]` is `(next() % (2B + 1)) - B`. Each candidate
//! generator draws `hx` then `hy`; it is rejected when `hy < 0`, when
//! `hy = 0` and `hx <= 0`, or when it is parallel to an earlier generator.

use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Point, SymPolygon};
use crate::rational;

/// The SplitMix64 generator described in the module docs.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `[-bound, bound]` (modulo reduction).
    pub fn symmetric(&mut self, bound: u32) -> i64 {
        let span = 2 * bound as u64 + 1;
        (self.next_u64() % span) as i64 - bound as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    /// Half the vertex count.
    pub n: usize,
    pub seed: u64,
    /// Generator components are drawn from `[-coord_bound, coord_bound]`.
    pub coord_bound: u32,
}

impl GenSpec {
    pub const DEFAULT_BOUND: u32 = 16;

    pub fn new(n: usize, seed: u64, coord_bound: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("n must be at least 2, got {n}")));
        }
        if coord_bound == 0 {
            return Err(Error::InvalidSpec("coord_bound must be positive".into()));
        }
        let available = upper_directions(coord_bound as i64);
        if n > available {
            return Err(Error::InvalidSpec(format!(
                "only {available} distinct directions fit in bound {coord_bound}, need {n}"
            )));
        }
        Ok(GenSpec {
            n,
            seed,
            coord_bound,
        })
    }
}

/// Number of primitive integer directions `(x, y)` in the upper half-plane
/// with `|x|, y <= bound`.
fn upper_directions(bound: i64) -> usize {
    let mut count = 0;
    for y in 0..=bound {
        for x in -bound..=bound {
            let upper = y > 0 || x > 0;
            if upper && x.gcd(&y) == 1 {
                count += 1;
            }
        }
    }
    count
}

/// Angular order of upper-half-plane vectors, measured from the +x axis.
fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    let c = a.cross(b);
    if c.is_positive() {
        Ordering::Less
    } else if c.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// Zonogon of the given generators. Each must lie in the open upper
/// half-plane (or on the positive x-axis) and no two may be parallel.
pub fn zonogon_from_generators(generators: &[Point]) -> Result<SymPolygon> {
    if generators.len() < 2 {
        return Err(Error::InvalidSpec(
            "a zonogon needs at least 2 generators".into(),
        ));
    }
    for g in generators {
        let upper = g.y.is_positive() || (g.y.is_zero() && g.x.is_positive());
        if !upper {
            return Err(Error::InvalidSpec(format!(
                "generator {g} not in upper half-plane"
            )));
        }
    }
    let mut gens = generators.to_vec();
    gens.sort_by(angle_cmp);
    if gens.windows(2).any(|w| w[0].cross(&w[1]).is_zero()) {
        return Err(Error::InvalidSpec("parallel generators".into()));
    }
    let half = rational::ratio(1, 2);
    let total = gens.iter().fold(Point::origin(), |acc, g| &acc + g);
    let mut v = -total.scale(&half);
    let mut vertices = Vec::with_capacity(2 * gens.len());
    for g in &gens {
        vertices.push(v.clone());
        v = &v + g;
    }
    for g in &gens {
        vertices.push(v.clone());
        v = &v - g;
    }
    SymPolygon::new(vertices)
}

/// Draw the `n` integer generators for `spec` (before sorting).
pub fn random_generators(spec: &GenSpec) -> Vec<Point> {
    let mut rng = SplitMix64::new(spec.seed);
    let mut gens: Vec<(i64, i64)> = Vec::with_capacity(spec.n);
    while gens.len() < spec.n {
        let hx = rng.symmetric(spec.coord_bound);
        let hy = rng.symmetric(spec.coord_bound);
        let upper = hy > 0 || (hy == 0 && hx > 0);
        if !upper || gens.iter().any(|&(gx, gy)| gx * hy - gy * hx == 0) {
            continue;
        }
        gens.push((hx, hy));
    }
    gens.into_iter()
        .map(|(x, y)| Point::int(2 * x, 2 * y))
        .collect()
}

/// A random zonogon with exactly `2n` vertices, deterministic in the seed.
pub fn random_zonogon(spec: &GenSpec) -> SymPolygon {
    zonogon_from_generators(&random_generators(spec))
        .expect("distinct upper-half-plane generators always give a valid zonogon")
}

/// The fixed test polygons: `square` `[-1,1]^2`, `diamond` (its polar),
/// `hex6`, `hex6b` and the octagon `oct8`.
pub fn named_polygon(name: &str) -> Result<SymPolygon> {
    let pts: &[(i64, i64)] = match name {
        "square" => &[(1, 1), (-1, 1), (-1, -1), (1, -1)],
        "diamond" => &[(1, 0), (0, 1), (-1, 0), (0, -1)],
        "hex6" => &[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)],
        "hex6b" => &[(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)],
        "oct8" => {
            return zonogon_from_generators(&[
                Point::int(2, 0),
                Point::int(2, 2),
                Point::int(0, 2),
                Point::int(-2, 2),
            ])
        }
        other => return Err(Error::UnknownName(other.to_string())),
    };
    SymPolygon::new(pts.iter().map(|&(x, y)| Point::int(x, y)).collect())
}

pub const NAMED_POLYGONS: [&str; 5] = ["square", "diamond", "hex6", "hex6b", "oct8"];

/// Convenience for callers that want the default coordinate bound.
pub fn zonogon(n: usize, seed: u64) -> Result<SymPolygon> {
    Ok(random_zonogon(&GenSpec::new(
        n,
        seed,
        GenSpec::DEFAULT_BOUND,
    )?))
}
