use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::graph::{build_graph, Edge, Graph, GraphSpec, Vertex};
use crate::error::{Error, Result};
use crate::plane::{IncidencePlane, LineId, PointId, ProjPoint, ProjectivePlane};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PlaneModel {
    /// PG(2,q) over GF(q).
    Pg,
    /// AG(2,q): PG(2,q) without its line at infinity.
    Ag,
    /// A plane loaded from a file; points and lines are bare ids.
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneRef {
    pub model: PlaneModel,
    pub q: u64,
}

impl PlaneRef {
    pub fn pg(q: u64) -> Self {
        PlaneRef { model: PlaneModel::Pg, q }
    }

    pub fn ag(q: u64) -> Self {
        PlaneRef { model: PlaneModel::Ag, q }
    }

    pub fn generic(q: u64) -> Self {
        PlaneRef { model: PlaneModel::Generic, q }
    }

    /// The coordinatized plane behind PG and AG references.
    pub fn coordinatized(&self) -> Result<ProjectivePlane> {
        match self.model {
            PlaneModel::Generic => Err(Error::InvalidArgument("a generic plane has no coordinates".into())),
            _ => ProjectivePlane::with_order(self.q),
        }
    }
}

impl fmt::Display for PlaneRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = match self.model {
            PlaneModel::Pg => "PG",
            PlaneModel::Ag => "AG",
            PlaneModel::Generic => "GENERIC",
        };
        write!(f, "{m}({})", self.q)
    }
}

/// Injective vertex-to-point map plus the induced edge-to-line map, both in
/// the id space of the referenced plane. `edge_map[i]` belongs to the i-th
/// edge of `build_graph(graph)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub plane: PlaneRef,
    pub graph: GraphSpec,
    pub vertex_map: Vec<PointId>,
    pub edge_map: Vec<LineId>,
}

impl Embedding {
    /// Derives the edge lines from the vertex images.
    pub fn from_vertices(
        plane: &dyn IncidencePlane,
        plane_ref: PlaneRef,
        graph: &Graph,
        vertex_map: Vec<PointId>,
    ) -> Result<Self> {
        if vertex_map.len() != graph.vertices {
            return Err(Error::Schema(format!("{} images for {} vertices", vertex_map.len(), graph.vertices)));
        }
        let edge_map = graph
            .edges
            .iter()
            .map(|&(a, b)| plane.join(vertex_map[a as usize], vertex_map[b as usize]).ok_or(Error::SamePoint))
            .collect::<Result<_>>()?;
        Ok(Embedding { plane: plane_ref, graph: graph.spec.clone(), vertex_map, edge_map })
    }

    pub fn from_points(pg: &ProjectivePlane, plane_ref: PlaneRef, graph: &Graph, points: &[ProjPoint]) -> Result<Self> {
        let ids = points.iter().map(|p| pg.point_id(p)).collect();
        Self::from_vertices(pg, plane_ref, graph, ids)
    }

    pub fn points(&self, pg: &ProjectivePlane) -> Result<Vec<ProjPoint>> {
        self.vertex_map.iter().map(|&p| pg.point_of(p)).collect()
    }

    pub fn verify(&self, plane: &dyn IncidencePlane) -> Result<VerifyReport> {
        verify_embedding(&build_graph(&self.graph)?, self, plane)
    }

    /// Compact single-line JSON with a trailing newline; identical inputs
    /// give identical bytes.
    pub fn to_json(&self) -> Result<String> {
        let graph = build_graph(&self.graph)?;
        let pg = match self.plane.model {
            PlaneModel::Generic => None,
            _ => Some(self.plane.coordinatized()?),
        };
        let point = |id: PointId| -> Result<Ref> {
            match &pg {
                Some(pg) => Ok(Ref::Triple(pg.point_of(id)?.coords())),
                None => Ok(Ref::Id(id)),
            }
        };
        let line = |id: LineId| -> Result<Ref> {
            match &pg {
                Some(pg) => Ok(Ref::Triple(pg.line_of(id)?.coords())),
                None => Ok(Ref::Id(id)),
            }
        };
        let file = EmbeddingFile {
            plane: self.plane,
            graph: self.graph.clone(),
            vertices: self.vertex_map.iter().enumerate().map(|(v, &p)| Ok((v as Vertex, point(p)?))).collect::<Result<_>>()?,
            edges: graph.edges.iter().zip(&self.edge_map).map(|(&e, &l)| Ok((e, line(l)?))).collect::<Result<_>>()?,
        };
        let mut s = serde_json::to_string(&file)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: EmbeddingFile = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        let graph = build_graph(&file.graph).map_err(|e| Error::Schema(e.to_string()))?;
        let pg = match file.plane.model {
            PlaneModel::Generic => None,
            _ => Some(file.plane.coordinatized().map_err(|e| Error::Schema(e.to_string()))?),
        };
        let point_id = |r: &Ref| -> Result<PointId> {
            match (r, &pg) {
                (Ref::Triple(t), Some(pg)) => Ok(pg.point_id(&pg.point(*t).map_err(|e| Error::Schema(e.to_string()))?)),
                (Ref::Id(i), None) => Ok(*i),
                _ => Err(Error::Schema(format!("point form does not match the {} model", file.plane))),
            }
        };
        let line_id = |r: &Ref| -> Result<LineId> {
            match (r, &pg) {
                (Ref::Triple(t), Some(pg)) => Ok(pg.line_id(&pg.line(*t).map_err(|e| Error::Schema(e.to_string()))?)),
                (Ref::Id(i), None) => Ok(*i),
                _ => Err(Error::Schema(format!("line form does not match the {} model", file.plane))),
            }
        };

        let mut vertex_map = vec![None; graph.vertices];
        let mut used = HashSet::new();
        for (v, r) in &file.vertices {
            let slot =
                vertex_map.get_mut(*v as usize).ok_or_else(|| Error::Schema(format!("vertex {v} is not in {}", file.graph)))?;
            if slot.is_some() {
                return Err(Error::Schema(format!("vertex {v} listed twice")));
            }
            let p = point_id(r)?;
            if !used.insert(p) {
                return Err(Error::Schema(format!("point {p} used by two vertices")));
            }
            *slot = Some(p);
        }
        let vertex_map = vertex_map
            .into_iter()
            .enumerate()
            .map(|(v, p)| p.ok_or_else(|| Error::Schema(format!("vertex {v} has no image"))))
            .collect::<Result<Vec<_>>>()?;

        let index: HashMap<Edge, usize> = graph.edges.iter().enumerate().map(|(i, &(a, b))| ((a.min(b), a.max(b)), i)).collect();
        let mut edge_map = vec![None; graph.edges.len()];
        for ((a, b), r) in &file.edges {
            let i = *index
                .get(&((*a).min(*b), (*a).max(*b)))
                .ok_or_else(|| Error::Schema(format!("({a},{b}) is not an edge of {}", file.graph)))?;
            if edge_map[i].is_some() {
                return Err(Error::Schema(format!("edge ({a},{b}) listed twice")));
            }
            edge_map[i] = Some(line_id(r)?);
        }
        let edge_map = edge_map
            .into_iter()
            .zip(&graph.edges)
            .map(|(l, (a, b))| l.ok_or_else(|| Error::Schema(format!("edge ({a},{b}) has no line"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Embedding { plane: file.plane, graph: file.graph, vertex_map, edge_map })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Ref {
    Triple([u64; 3]),
    Id(u32),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EmbeddingFile {
    plane: PlaneRef,
    graph: GraphSpec,
    vertices: Vec<(Vertex, Ref)>,
    edges: Vec<(Edge, Ref)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub vertices_injective: bool,
    pub edges_well_defined: bool,
    pub edges_injective: bool,
    pub degree_bound_ok: bool,
    pub violations: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.vertices_injective && self.edges_well_defined && self.edges_injective && self.degree_bound_ok
    }
}

/// Recomputes every edge line from the vertex images and checks both maps
/// for injectivity. Stored edge lines are compared, never trusted.
pub fn verify_embedding(graph: &Graph, emb: &Embedding, plane: &dyn IncidencePlane) -> Result<VerifyReport> {
    if emb.graph != graph.spec {
        return Err(Error::Schema(format!("embedding is for {}, not {}", emb.graph, graph.spec)));
    }
    if emb.plane.q != plane.order() {
        return Err(Error::Schema(format!("embedding is for {}, plane has order {}", emb.plane, plane.order())));
    }
    if emb.vertex_map.len() != graph.vertices || emb.edge_map.len() != graph.edges.len() {
        return Err(Error::Schema("map sizes do not match the graph".into()));
    }
    let infinity = match emb.plane.model {
        PlaneModel::Ag => plane.line_at_infinity(),
        _ => None,
    };
    for &p in &emb.vertex_map {
        if p as usize >= plane.num_points() || infinity.is_some_and(|l| plane.incident(p, l)) {
            return Err(Error::PointNotInPlane(p));
        }
    }

    let mut violations = Vec::new();
    let mut seen: HashMap<PointId, Vertex> = HashMap::new();
    for (v, &p) in emb.vertex_map.iter().enumerate() {
        if let Some(u) = seen.insert(p, v as Vertex) {
            violations.push(format!("vertices {u} and {v} both map to point {p}"));
        }
    }
    let vertices_injective = violations.is_empty();

    let mut edges_well_defined = true;
    let mut lines: HashMap<LineId, Edge> = HashMap::new();
    let mut edges_injective = true;
    for (i, &(a, b)) in graph.edges.iter().enumerate() {
        match plane.join(emb.vertex_map[a as usize], emb.vertex_map[b as usize]) {
            None => {
                edges_well_defined = false;
                violations.push(format!("edge ({a},{b}) joins a point to itself"));
            }
            Some(l) => {
                if l != emb.edge_map[i] {
                    edges_well_defined = false;
                    violations.push(format!("edge ({a},{b}) stored as line {}, recomputed {l}", emb.edge_map[i]));
                }
                if let Some((c, d)) = lines.insert(l, (a, b)) {
                    edges_injective = false;
                    violations.push(format!("edges ({c},{d}) and ({a},{b}) share line {l}"));
                }
            }
        }
    }

    let max = plane.order() as usize + 1;
    let degree_bound_ok = graph.max_degree() <= max;
    if !degree_bound_ok {
        violations.push(format!("max degree {} exceeds q+1 = {max}", graph.max_degree()));
    }
    Ok(VerifyReport { vertices_injective, edges_well_defined, edges_injective, degree_bound_ok, violations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pg(q: u64) -> ProjectivePlane {
        ProjectivePlane::with_order(q).unwrap()
    }

    #[test]
    fn triangle_in_fano() {
        let p = pg(2);
        let g = build_graph(&GraphSpec::Cycle { k: 3 }).unwrap();
        let e = Embedding::from_vertices(&p, PlaneRef::pg(2), &g, vec![0, 1, 2]).unwrap();
        assert!(verify_embedding(&g, &e, &p).unwrap().passed());
    }

    #[test]
    fn collinear_triangle_fails() {
        let p = pg(3);
        let g = build_graph(&GraphSpec::Cycle { k: 3 }).unwrap();
        // (0,0), (0,1), (0,2) lie on x = 0.
        let e = Embedding::from_vertices(&p, PlaneRef::pg(3), &g, vec![0, 1, 2]).unwrap();
        let r = verify_embedding(&g, &e, &p).unwrap();
        assert!(!r.edges_injective && !r.passed());
    }

    #[test]
    fn oversize_wheel_fails_degree_bound() {
        let p = pg(2);
        let g = build_graph(&GraphSpec::Wheel { n: 4 }).unwrap();
        let e = Embedding::from_vertices(&p, PlaneRef::pg(2), &g, vec![0, 1, 2, 3, 4]).unwrap();
        assert!(!verify_embedding(&g, &e, &p).unwrap().degree_bound_ok);
    }

    #[test]
    fn out_of_plane_point_is_an_error() {
        let p = pg(2);
        let g = build_graph(&GraphSpec::Cycle { k: 3 }).unwrap();
        let mut e = Embedding::from_vertices(&p, PlaneRef::pg(2), &g, vec![0, 1, 2]).unwrap();
        e.vertex_map[2] = 7;
        assert!(matches!(verify_embedding(&g, &e, &p), Err(Error::PointNotInPlane(7))));
        let mut e = Embedding::from_vertices(&p, PlaneRef::ag(2), &g, vec![0, 1, 4]).unwrap();
        assert!(matches!(verify_embedding(&g, &e, &p), Err(Error::PointNotInPlane(4))));
        e.plane = PlaneRef::pg(3);
        assert!(matches!(verify_embedding(&g, &e, &p), Err(Error::Schema(_))));
    }

    #[test]
    fn json_round_trip_c8_in_ag3() {
        let p = pg(3);
        let g = build_graph(&GraphSpec::Cycle { k: 8 }).unwrap();
        // The eight points of AG(2,3) other than the origin, in an order
        // where consecutive pairs use distinct lines.
        let f = p.field();
        let ring = [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1), (2, 2), (1, 2), (2, 1)];
        let pts: Vec<ProjPoint> = ring.iter().map(|&(x, y)| p.affine(f.elem(x), f.elem(y))).collect();
        let e = Embedding::from_points(&p, PlaneRef::ag(3), &g, &pts).unwrap();
        let text = e.to_json().unwrap();
        let back = Embedding::from_json(&text).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.to_json().unwrap(), text);
        assert_eq!(verify_embedding(&g, &e, &p).unwrap(), verify_embedding(&g, &back, &p).unwrap());
    }

    #[test]
    fn json_rejections() {
        let dup = r#"{"plane":{"model":"PG","q":2},"graph":{"kind":"CYCLE","k":3},"vertices":[[0,[1,0,0]],[1,[1,0,0]],[2,[0,1,0]]],"edges":[]}"#;
        assert!(matches!(Embedding::from_json(dup), Err(Error::Schema(_))));
        let ok = r#"{"plane":{"model":"PG","q":2},"graph":{"kind":"CYCLE","k":3},"vertices":[[0,[0,0,1]],[1,[1,0,1]],[2,[0,1,1]]],"edges":[[[0,1],[0,1,0]],[[1,2],[1,1,1]],[[2,0],[1,0,0]]]}"#;
        let e = Embedding::from_json(ok).unwrap();
        assert!(e.verify(&pg(2)).unwrap().passed());
        assert!(matches!(e.verify(&pg(3)), Err(Error::Schema(_))));
        let generic = r#"{"plane":{"model":"GENERIC","q":2},"graph":{"kind":"CYCLE","k":3},"vertices":[[0,[0,0,1]],[1,1],[2,2]],"edges":[]}"#;
        assert!(Embedding::from_json(generic).is_err());
    }

    #[test]
    fn tampered_edge_line_is_caught() {
        let p = pg(2);
        let g = build_graph(&GraphSpec::Cycle { k: 3 }).unwrap();
        let mut e = Embedding::from_vertices(&p, PlaneRef::pg(2), &g, vec![0, 1, 2]).unwrap();
        e.edge_map[0] = (e.edge_map[0] + 1) % 7;
        let r = e.verify(&p).unwrap();
        assert!(!r.edges_well_defined && !r.passed());
    }
}
