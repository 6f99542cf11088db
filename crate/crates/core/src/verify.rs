//! The full property battery for a single polygon, as run by
//! `mahler verify`.

use std::fmt;

use crate::error::Result;
use crate::geometry::{LinearMap, SymPolygon};
use crate::oracle;
use crate::parallelograms::{compare_parallelogram_sums, edge_before, hexagon_carving, p1, p2};
use crate::rational;
use crate::reduction::{
    check_edge_deletion, descend, normalize_for_edge, vertical_distances, Neighbor,
};
use crate::zonogen::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    /// Set when the failure came from an internal invariant error.
    pub internal: bool,
}

impl CheckResult {
    fn from_bool(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            internal: false,
        }
    }

    fn skipped(name: &'static str, why: &str) -> Self {
        CheckResult {
            name,
            status: Status::Skipped,
            detail: why.to_string(),
            internal: false,
        }
    }

    fn from_result(name: &'static str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((ok, detail)) => Self::from_bool(name, ok, detail),
            Err(e) => CheckResult {
                name,
                status: Status::Fail,
                detail: e.to_string(),
                internal: e.is_internal(),
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct Battery {
    pub checks: Vec<CheckResult>,
}

impl Battery {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn internal_failure(&self) -> bool {
        self.checks.iter().any(|c| c.internal)
    }

    /// 0 all pass, 1 a property failed, 3 an internal invariant fired.
    pub fn exit_code(&self) -> i32 {
        if self.internal_failure() {
            3
        } else if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        self.checks
            .iter()
            .map(|c| format!("{:<width$}  {}  {}\n", c.name, c.status, c.detail))
            .collect()
    }
}

/// Deterministic invertible rational maps with small entries.
pub fn random_linear_maps(count: usize, seed: u64) -> Vec<LinearMap> {
    let mut rng = SplitMix64::new(seed);
    let mut entry = || {
        let num = rng.symmetric(5);
        let den = (rng.next_u64() % 5) as i64 + 1;
        rational::ratio(num, den)
    };
    let mut maps = Vec::with_capacity(count);
    while maps.len() < count {
        if let Ok(m) = LinearMap::new(entry(), entry(), entry(), entry()) {
            maps.push(m);
        }
    }
    maps
}

const SIX_SIDES: &str = "needs at least 6 sides";

pub fn run_battery(poly: &SymPolygon) -> Battery {
    let n = poly.half();
    let len = poly.len();
    let dual = poly.polar_dual();
    let m = poly.area() * dual.area();
    let mut checks = Vec::new();

    checks.push(CheckResult::from_bool(
        "bipolarity",
        dual.polar_dual() == *poly,
        "(A°)° = A",
    ));

    let maps = random_linear_maps(20, 0x5eed);
    checks.push(CheckResult::from_result(
        "linear invariance",
        maps.iter()
            .map(|t| {
                let image = poly.apply_linear(t)?;
                let polar_ok = image.polar_dual() == dual.apply_linear(&t.dual())?;
                Ok(polar_ok && image.mahler_volume() == m)
            })
            .collect::<Result<Vec<bool>>>()
            .map(|v| (v.iter().all(|&b| b), format!("{} maps", v.len()))),
    ));

    checks.push(CheckResult::from_bool(
        "polar oracle",
        oracle::dual_by_halfplane_intersection(poly) == dual,
        "edge-wise vs half-plane intersection",
    ));
    checks.push(CheckResult::from_bool(
        "area oracle",
        oracle::area_by_fan(poly) == poly.area() && oracle::area_by_fan(&dual) == dual.area(),
        "shoelace vs fan",
    ));
    checks.push(CheckResult::from_bool(
        "santalo bound",
        rational::to_f64(&m) <= std::f64::consts::PI.powi(2) + 1e-6,
        format!("M ≈ {:.6}", rational::to_f64(&m)),
    ));

    if n < 3 {
        for name in [
            "parallelogram sums",
            "triangle comparison",
            "carving identities",
            "ratio identity",
            "level dual neighbours",
            "area updates",
            "deletion decrease",
            "move existence",
        ] {
            checks.push(CheckResult::skipped(name, SIX_SIDES));
        }
    } else {
        checks.push(CheckResult::from_result(
            "parallelogram sums",
            compare_parallelogram_sums(poly)
                .map(|r| (true, format!("{} {} {}", r.lhs, r.relation_symbol(), r.rhs))),
        ));

        checks.push(CheckResult::from_result(
            "triangle comparison",
            (0..len)
                .map(|x| {
                    let t1 = hexagon_carving(poly, edge_before(poly, x))?.t1.area();
                    let t2 = hexagon_carving(poly, x)?.t2.area();
                    Ok(if n == 3 { t1 == t2 } else { t1 > t2 })
                })
                .collect::<Result<Vec<bool>>>()
                .map(|v| {
                    let rel = if n == 3 { "=" } else { ">" };
                    (
                        v.iter().all(|&b| b),
                        format!("T1(x-1) {rel} T2(x) at {len} vertices"),
                    )
                }),
        ));

        checks.push(CheckResult::from_result(
            "carving identities",
            (0..len)
                .map(|x| {
                    let c = hexagon_carving(poly, x)?;
                    let h = c.hexagon_area();
                    let two = rational::int(2);
                    Ok(
                        h == p1(poly, edge_before(poly, x)).area() + &two * c.t1.area()
                            && h == p2(poly, x)?.area() + &two * c.t2.area(),
                    )
                })
                .collect::<Result<Vec<bool>>>()
                .map(|v| {
                    (
                        v.iter().all(|&b| b),
                        "H = P1 + 2 T1 = P2 + 2 T2".to_string(),
                    )
                }),
        ));

        let frames = (0..len)
            .map(|s| normalize_for_edge(poly, s))
            .collect::<Result<Vec<_>>>();
        checks.push(CheckResult::from_result(
            "ratio identity",
            frames.clone().and_then(|frames| {
                let mut ok = true;
                for f in &frames {
                    for which in [Neighbor::Clockwise, Neighbor::Anticlockwise] {
                        let d = vertical_distances(f, which)?;
                        ok &= d.identity_holds() && d.all_positive();
                    }
                }
                Ok((
                    ok,
                    "alpha gamma = beta c(s) on every edge, both neighbours".into(),
                ))
            }),
        ));
        checks.push(CheckResult::from_result(
            "level dual neighbours",
            frames.map(|frames| {
                (
                    frames.iter().all(|f| f.dual_neighbors_level()),
                    "dual neighbours of v°(s) level".into(),
                )
            }),
        ));

        let deletions = (0..len)
            .map(|s| check_edge_deletion(poly, s))
            .collect::<Result<Vec<_>>>();
        checks.push(CheckResult::from_result(
            "area updates",
            deletions.clone().map(|v| {
                (
                    v.iter().all(|c| c.identities.all()),
                    "area updates and Mahler expansion".into(),
                )
            }),
        ));
        checks.push(CheckResult::from_result(
            "deletion decrease",
            deletions.map(|v| {
                let q: Vec<_> = v.iter().filter(|c| c.qualifies()).collect();
                (
                    q.iter().all(|c| c.m_after < c.m_before),
                    format!("{} of {} edges qualify", q.len(), v.len()),
                )
            }),
        ));

        checks.push(CheckResult::from_result(
            "move existence",
            oracle::exhaustive_move_check(poly).map(|r| {
                let k = r.qualifying_on_chosen_side();
                (
                    k >= 1 && r.all_qualifying_decrease(),
                    format!("{k} qualifying on the {:?} side", r.chosen_side.unwrap()),
                )
            }),
        ));
    }

    checks.push(CheckResult::from_result(
        "descent",
        descend(poly).map(|t| {
            let ok = t.steps.len() + 2 == n && t.final_mahler == rational::int(8);
            (
                ok,
                format!("{} steps, M {} -> {}", t.steps.len(), m, t.final_mahler),
            )
        }),
    ));

    Battery { checks }
}
