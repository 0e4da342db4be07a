//! Exhaustive backtracking embedder for small planes.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{build_graph, verify_embedding, Embedding, Graph, GraphSpec, PlaneModel, PlaneRef, Vertex};
use crate::plane::{check_plane_axioms, GenericPlane, IncidencePlane, IncidenceTable, LineId, PointId, ProjectivePlane};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest order accepted without an explicit override.
pub const MAX_ORACLE_ORDER: u64 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Symmetry {
    None,
    /// The cyclic shift `p -> p + 1` is a collineation: fix the first vertex.
    PointTransitive,
    /// The collineation group is 2-transitive on allowed points: fix the
    /// first two vertices.
    TwoTransitive,
}

/// A plane prepared for search: tables, the points vertices may use, and
/// the symmetry the search may exploit.
#[derive(Clone, Debug)]
pub struct OraclePlane {
    pub plane_ref: PlaneRef,
    table: IncidenceTable,
    allowed: Vec<bool>,
    symmetry: Symmetry,
}

impl OraclePlane {
    pub fn pg(q: u64) -> Result<Self> {
        Self::check_order(q)?;
        Self::pg_unbounded(q)
    }

    pub fn ag(q: u64) -> Result<Self> {
        Self::check_order(q)?;
        Self::ag_unbounded(q)
    }

    pub fn pg_unbounded(q: u64) -> Result<Self> {
        let pg = ProjectivePlane::with_order(q)?;
        let table = IncidenceTable::from_plane(&pg);
        let n = table.num_points();
        Ok(OraclePlane { plane_ref: PlaneRef::pg(q), table, allowed: vec![true; n], symmetry: Symmetry::TwoTransitive })
    }

    pub fn ag_unbounded(q: u64) -> Result<Self> {
        let pg = ProjectivePlane::with_order(q)?;
        let table = IncidenceTable::from_plane(&pg);
        let linf = table.line_at_infinity().expect("coordinatized plane");
        let allowed = (0..table.num_points() as PointId).map(|p| !table.incident(p, linf)).collect();
        Ok(OraclePlane { plane_ref: PlaneRef::ag(q), table, allowed, symmetry: Symmetry::TwoTransitive })
    }

    /// A projective plane from a file; no collineations are assumed beyond
    /// a detected cyclic shift.
    pub fn from_generic(plane: &GenericPlane) -> Result<Self> {
        let report = check_plane_axioms(plane);
        if let Some(v) = report.violations.first() {
            return Err(Error::MalformedPlane(v.to_string()));
        }
        let table = plane.to_table()?;
        let n = table.num_points();
        let symmetry = if is_cyclic(&table) { Symmetry::PointTransitive } else { Symmetry::None };
        Ok(OraclePlane { plane_ref: PlaneRef::generic(plane.q), table, allowed: vec![true; n], symmetry })
    }

    fn check_order(q: u64) -> Result<()> {
        if q > MAX_ORACLE_ORDER {
            return Err(Error::PlaneTooLarge(q));
        }
        Ok(())
    }

    pub fn table(&self) -> &IncidenceTable {
        &self.table
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn allowed_points(&self) -> usize {
        self.allowed.iter().filter(|&&a| a).count()
    }

    fn usable_lines(&self) -> usize {
        match self.plane_ref.model {
            PlaneModel::Ag => self.table.num_lines() - 1,
            _ => self.table.num_lines(),
        }
    }
}

fn is_cyclic(t: &IncidenceTable) -> bool {
    let n = t.num_points() as PointId;
    let lines: HashSet<Vec<PointId>> = t.lines().iter().cloned().collect();
    t.lines().iter().all(|l| {
        let mut s: Vec<PointId> = l.iter().map(|&p| (p + 1) % n).collect();
        s.sort_unstable();
        lines.contains(&s)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Found,
    #[serde(rename = "notfound")]
    NotFound,
    #[serde(rename = "budget")]
    BudgetExceeded,
}

#[derive(Clone, Debug)]
pub struct OracleOutcome {
    pub verdict: Verdict,
    pub embedding: Option<Embedding>,
    pub nodes: u64,
}

impl OracleOutcome {
    fn bare(verdict: Verdict, nodes: u64) -> Self {
        OracleOutcome { verdict, embedding: None, nodes }
    }
}

struct Search<'a> {
    g: &'a Graph,
    t: &'a IncidenceTable,
    allowed: &'a [bool],
    order: Vec<Vertex>,
    /// Position of each vertex in `order`.
    rank: Vec<usize>,
    /// For each vertex, neighbors placed earlier in the order.
    back: Vec<Vec<Vertex>>,
    /// For each vertex, how many neighbors come later in the order.
    forward: Vec<usize>,
    assign: Vec<PointId>,
    point_used: Vec<bool>,
    line_used: Vec<bool>,
    free_lines: Vec<usize>,
    fixed: Vec<Option<PointId>>,
    nodes: u64,
    budget: u64,
}

const UNSET: PointId = PointId::MAX;

impl Search<'_> {
    fn use_line(&mut self, l: LineId, on: bool) {
        self.line_used[l as usize] = on;
        for &p in &self.t.lines()[l as usize] {
            if on {
                self.free_lines[p as usize] -= 1;
            } else {
                self.free_lines[p as usize] += 1;
            }
        }
    }

    fn remaining(&self, v: Vertex, depth: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| self.rank[w as usize] > depth).count()
    }

    fn candidates(&self, v: Vertex, depth: usize) -> Vec<PointId> {
        if let Some(p) = self.fixed[depth] {
            return vec![p];
        }
        let n = self.t.num_points() as PointId;
        match self.back[v as usize].first() {
            None => (0..n).filter(|&p| self.allowed[p as usize] && !self.point_used[p as usize]).collect(),
            Some(&u) => {
                let pu = self.assign[u as usize];
                let mut c = Vec::new();
                for l in self.t.lines_through(pu) {
                    if self.line_used[l as usize] {
                        continue;
                    }
                    c.extend(
                        self.t.lines()[l as usize].iter().filter(|&&p| self.allowed[p as usize] && !self.point_used[p as usize]),
                    );
                }
                c.sort_unstable();
                c
            }
        }
    }

    /// `Some(true)` on success, `Some(false)` when exhausted, `None` on budget.
    fn run(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let v = self.order[depth];
        let back = self.back[v as usize].clone();
        for p in self.candidates(v, depth) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let mut lines: Vec<LineId> = Vec::with_capacity(back.len());
            let ok = back.iter().all(|&w| {
                let l = self.t.join(self.assign[w as usize], p).expect("distinct points");
                let fresh = !self.line_used[l as usize] && !lines.contains(&l);
                lines.push(l);
                fresh
            });
            if !ok || self.free_lines[p as usize] < self.forward[v as usize] + back.len() {
                continue;
            }
            self.assign[v as usize] = p;
            self.point_used[p as usize] = true;
            for &l in &lines {
                self.use_line(l, true);
            }
            let feasible = self.free_lines[p as usize] >= self.forward[v as usize]
                && back.iter().all(|&w| self.free_lines[self.assign[w as usize] as usize] >= self.remaining(w, depth));
            if feasible {
                match self.run(depth + 1) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            for &l in &lines {
                self.use_line(l, false);
            }
            self.point_used[p as usize] = false;
            self.assign[v as usize] = UNSET;
        }
        Some(false)
    }
}

/// Decreasing degree picks each component's root; breadth-first from there,
/// visiting higher-degree neighbors first.
fn vertex_order(g: &Graph) -> Vec<Vertex> {
    let mut by_degree: Vec<Vertex> = (0..g.vertices as Vertex).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut seen = vec![false; g.vertices];
    let mut order = Vec::with_capacity(g.vertices);
    for &root in &by_degree {
        if seen[root as usize] {
            continue;
        }
        seen[root as usize] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut next: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| !seen[w as usize]).collect();
            next.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
            for w in next {
                seen[w as usize] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

/// Depth-first search for an embedding of `g`, capped at `budget` candidate
/// placements. `NotFound` is only reported after exhausting the space.
pub fn exists_embedding(g: &Graph, plane: &OraclePlane, budget: u64) -> OracleOutcome {
    let t = &plane.table;
    let q = t.order() as usize;
    if g.max_degree() > q + 1 || g.edges.len() > plane.usable_lines() || g.vertices > plane.allowed_points() {
        return OracleOutcome::bare(Verdict::NotFound, 0);
    }
    let order = vertex_order(g);
    let mut rank = vec![0; g.vertices];
    for (i, &v) in order.iter().enumerate() {
        rank[v as usize] = i;
    }
    let back: Vec<Vec<Vertex>> = (0..g.vertices)
        .map(|v| {
            let mut b: Vec<Vertex> = g.neighbors(v as Vertex).iter().copied().filter(|&w| rank[w as usize] < rank[v]).collect();
            b.sort_by_key(|&w| rank[w as usize]);
            b
        })
        .collect();
    let forward = (0..g.vertices).map(|v| g.degree(v as Vertex) - back[v].len()).collect();

    let allowed_pts: Vec<PointId> = (0..t.num_points() as PointId).filter(|&p| plane.allowed[p as usize]).collect();
    let mut fixed = vec![None; g.vertices];
    let pinned = match plane.symmetry {
        Symmetry::None => 0,
        Symmetry::PointTransitive => 1,
        Symmetry::TwoTransitive => 2,
    };
    for (slot, &p) in fixed.iter_mut().zip(&allowed_pts).take(pinned) {
        *slot = Some(p);
    }

    let n = t.num_points();
    let mut s = Search {
        g,
        t,
        allowed: &plane.allowed,
        order,
        rank,
        back,
        forward,
        assign: vec![UNSET; g.vertices],
        point_used: vec![false; n],
        line_used: vec![false; t.num_lines()],
        free_lines: vec![q + 1; n],
        fixed,
        nodes: 0,
        budget,
    };
    if plane.plane_ref.model == PlaneModel::Ag {
        let linf = t.line_at_infinity().expect("affine view keeps its line at infinity");
        s.use_line(linf, true);
    }
    match s.run(0) {
        None => OracleOutcome::bare(Verdict::BudgetExceeded, s.nodes),
        Some(false) => OracleOutcome::bare(Verdict::NotFound, s.nodes),
        Some(true) => {
            let emb = Embedding::from_vertices(t, plane.plane_ref, g, s.assign.clone()).expect("distinct points");
            let report = verify_embedding(g, &emb, t).expect("points come from the plane");
            assert!(report.passed(), "oracle produced an invalid embedding: {:?}", report.violations);
            OracleOutcome { verdict: Verdict::Found, embedding: Some(emb), nodes: s.nodes }
        }
    }
}

/// Oracle verdict for every cycle length from 3 up to the number of points.
pub fn pancyclicity_table(plane: &OraclePlane, budget: u64) -> Result<Vec<(u64, Verdict)>> {
    let q = plane.table.order();
    if q > 4 {
        return Err(Error::PlaneTooLarge(q));
    }
    (3..=plane.allowed_points() as u64)
        .map(|k| {
            let g = build_graph(&GraphSpec::Cycle { k })?;
            Ok((k, exists_embedding(&g, plane, budget).verdict))
        })
        .collect()
}
