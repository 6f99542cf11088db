//! Choosing a volume-decreasing deletion and iterating it down to a
//! parallelogram.
//!
//! Compare the mean of `area(p1(s)) / area` over the edges of `P` with the
//! same mean over `P°`, and work on whichever side is smaller. On that side
//! the type-1 / type-2 comparison forces the ratio inequality to hold for
//! at least one edge; deleting that edge pair (or, on the dual side, the
//! matching vertex pair of `P`) lowers the Mahler volume.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{PolygonJson, SymPolygon};
use crate::parallelograms::p1;
use crate::rational::{self, Rational};

use super::{all_ratio_sides, remove_edge_pair, remove_vertex_pair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Delete an edge pair of `P`.
    Primal,
    /// Delete an edge pair of `P°`, i.e. a vertex pair of `P`.
    Dual,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    pub side: Side,
    /// Edge index in `P` (primal) or in the canonical `P°` (dual).
    pub edge: usize,
    /// `rhs - lhs` of the ratio inequality; never negative.
    pub gap: Rational,
}

/// Mean of `area(p1(s)) / area(P)` over the edges of `P`.
pub fn mean_type1_ratio(poly: &SymPolygon) -> Rational {
    let total: Rational = (0..poly.len()).map(|s| p1(poly, s).area()).sum();
    total / (poly.area() * rational::int(poly.len() as i64))
}

/// Pick the side by the mean comparison (primal on ties), then the edge
/// with the largest gap (smallest index on ties).
pub fn select_move(poly: &SymPolygon) -> Result<Move> {
    if poly.half() < 3 {
        return Err(Error::TooFewSides);
    }
    let dual = poly.polar_dual();
    let side = if mean_type1_ratio(poly) <= mean_type1_ratio(&dual) {
        Side::Primal
    } else {
        Side::Dual
    };
    let (q, q_dual) = match side {
        Side::Primal => (poly, &dual),
        Side::Dual => (&dual, poly),
    };
    let mut best: Option<Move> = None;
    for (t, (lhs, rhs)) in all_ratio_sides(q, q_dual)?.into_iter().enumerate() {
        let gap = rhs - lhs;
        if gap < Rational::from_integer(0.into()) {
            continue;
        }
        if best.as_ref().is_none_or(|b| gap > b.gap) {
            best = Some(Move { side, edge: t, gap });
        }
    }
    best.ok_or(Error::NoQualifyingEdge)
}

/// Execute a move on the primal polygon.
pub fn apply_move(poly: &SymPolygon, mv: &Move) -> Result<SymPolygon> {
    match mv.side {
        Side::Primal => remove_edge_pair(poly, mv.edge),
        Side::Dual => {
            let dual = poly.polar_dual();
            let x = poly
                .index_of(dual.edge_line(mv.edge).normal())
                .ok_or_else(|| Error::Invariant("bipolar vertex missing".into()))?;
            remove_vertex_pair(poly, x)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStep {
    pub polygon: SymPolygon,
    pub dual: SymPolygon,
    pub mahler: Rational,
    pub mv: Move,
}

/// The executed deletions from the input down to a parallelogram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTrace {
    pub steps: Vec<DescentStep>,
    pub final_polygon: SymPolygon,
    pub final_mahler: Rational,
}

/// Delete pairs until a parallelogram remains. Every step must strictly
/// lower the Mahler volume and the end value must be exactly 8; anything
/// else is reported as [`Error::Invariant`].
pub fn descend(poly: &SymPolygon) -> Result<DescentTrace> {
    let mut steps = Vec::with_capacity(poly.half().saturating_sub(2));
    let mut current = poly.clone();
    let mut current_m = current.mahler_volume();
    while current.half() > 2 {
        let mv = select_move(&current)?;
        let next = apply_move(&current, &mv)?;
        let next_m = next.mahler_volume();
        if next.len() + 2 != current.len() || next_m >= current_m {
            return Err(Error::Invariant(format!(
                "step {} went from M = {current_m} to M = {next_m}",
                steps.len()
            )));
        }
        let dual = current.polar_dual();
        steps.push(DescentStep {
            polygon: std::mem::replace(&mut current, next),
            dual,
            mahler: std::mem::replace(&mut current_m, next_m),
            mv,
        });
    }
    if current_m != rational::int(8) {
        return Err(Error::Invariant(format!(
            "parallelogram with Mahler volume {current_m}"
        )));
    }
    Ok(DescentTrace {
        steps,
        final_polygon: current,
        final_mahler: current_m,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MoveJson {
    pub side: Side,
    pub edge: usize,
    pub gap: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepJson {
    pub vertices: Vec<[String; 2]>,
    pub mahler: String,
    #[serde(rename = "move")]
    pub mv: MoveJson,
}

/// Wire form:
/// `{"steps":[{"vertices":[...],"mahler":"p/q","move":{...}}],"final":{"vertices":[...]},"final_mahler":"8"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceJson {
    pub steps: Vec<StepJson>,
    #[serde(rename = "final")]
    pub final_polygon: PolygonJson,
    pub final_mahler: String,
}

impl From<&DescentTrace> for TraceJson {
    fn from(trace: &DescentTrace) -> Self {
        TraceJson {
            steps: trace
                .steps
                .iter()
                .map(|step| StepJson {
                    vertices: PolygonJson::from(&step.polygon).vertices,
                    mahler: rational::format(&step.mahler),
                    mv: MoveJson {
                        side: step.mv.side,
                        edge: step.mv.edge,
                        gap: rational::format(&step.mv.gap),
                    },
                })
                .collect(),
            final_polygon: PolygonJson::from(&trace.final_polygon),
            final_mahler: rational::format(&trace.final_mahler),
        }
    }
}

impl DescentTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TraceJson::from(self)).expect("trace serializes")
    }

    /// Parse a trace. Recorded values are taken as given; see
    /// [`DescentTrace::recorded_values_match`] to re-derive them.
    pub fn from_json(text: &str) -> Result<Self> {
        let json: TraceJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let steps = json
            .steps
            .into_iter()
            .map(|step| {
                let polygon = SymPolygon::try_from(PolygonJson {
                    vertices: step.vertices,
                })?;
                Ok(DescentStep {
                    dual: polygon.polar_dual(),
                    polygon,
                    mahler: rational::parse(&step.mahler)?,
                    mv: Move {
                        side: step.mv.side,
                        edge: step.mv.edge,
                        gap: rational::parse(&step.mv.gap)?,
                    },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DescentTrace {
            steps,
            final_polygon: SymPolygon::try_from(json.final_polygon)?,
            final_mahler: rational::parse(&json.final_mahler)?,
        })
    }

    /// Recompute every Mahler volume and replay every move.
    pub fn recorded_values_match(&self) -> bool {
        let replay_ok = self.steps.iter().enumerate().all(|(i, step)| {
            let next = self
                .steps
                .get(i + 1)
                .map_or(&self.final_polygon, |s| &s.polygon);
            step.polygon.mahler_volume() == step.mahler
                && apply_move(&step.polygon, &step.mv).as_ref() == Ok(next)
        });
        replay_ok && self.final_polygon.mahler_volume() == self.final_mahler
    }

    pub fn mahler_sequence(&self) -> Vec<Rational> {
        self.steps
            .iter()
            .map(|s| s.mahler.clone())
            .chain(std::iter::once(self.final_mahler.clone()))
            .collect()
    }
}
