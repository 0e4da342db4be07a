use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{build_graph, verify_embedding, Embedding, GraphSpec, PlaneRef, VerifyReport};
use crate::plane::{IncidencePlane, LineId, PointId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CycleRoute {
    /// Points of an arc, no three collinear.
    Arc,
    /// Origin plus a run of consecutive long-cycle points.
    RunThroughOrigin,
    /// As above, hopping one parallel-class lap to dodge a collinear triple.
    RunWithSkip,
    LongCycle,
    /// Long cycle with one edge rerouted through the origin.
    LongPlusOrigin,
    /// Long-cycle path closed through points at infinity.
    Ladder,
    /// Ladder rung completed by bounded search.
    LadderRepair,
    Singer,
    Oracle,
}

/// Closed cycle: `lines[i]` joins `points[i]` and `points[i + 1]` (cyclically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleChain {
    pub plane: PlaneRef,
    pub route: CycleRoute,
    pub points: Vec<PointId>,
    pub lines: Vec<LineId>,
}

impl CycleChain {
    pub fn from_points(plane: &dyn IncidencePlane, plane_ref: PlaneRef, route: CycleRoute, points: Vec<PointId>) -> Result<Self> {
        let k = points.len();
        let lines = (0..k).map(|i| plane.join(points[i], points[(i + 1) % k]).ok_or(Error::SamePoint)).collect::<Result<_>>()?;
        Ok(CycleChain { plane: plane_ref, route, points, lines })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn to_embedding(&self) -> Embedding {
        Embedding {
            plane: self.plane,
            graph: GraphSpec::Cycle { k: self.len() as u64 },
            vertex_map: self.points.clone(),
            edge_map: self.lines.clone(),
        }
    }

    pub fn verify(&self, plane: &dyn IncidencePlane) -> Result<VerifyReport> {
        let g = build_graph(&GraphSpec::Cycle { k: self.len() as u64 })?;
        verify_embedding(&g, &self.to_embedding(), plane)
    }

    /// Returns the chain only if it verifies.
    pub(crate) fn checked(self, plane: &dyn IncidencePlane) -> Result<Self> {
        if self.len() < 3 {
            return Err(Error::ConstructionFailed(format!("{} points do not form a cycle", self.len())));
        }
        let report = self.verify(plane)?;
        if report.passed() {
            Ok(self)
        } else {
            Err(Error::ConstructionFailed(format!(
                "{:?} {}-cycle in {}: {}",
                self.route,
                self.len(),
                self.plane,
                report.violations.join("; ")
            )))
        }
    }

    pub(crate) fn from_embedding(e: Embedding, route: CycleRoute) -> Self {
        CycleChain { plane: e.plane, route, points: e.vertex_map, lines: e.edge_map }
    }
}
