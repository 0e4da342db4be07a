use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;
pub type Edge = (Vertex, Vertex);

/// Target graph. Vertex conventions: cycles use `0..k` in order; wheels and
/// gears put the center at 0 and the rim at `1..`, and gear rim vertex `v_j`
/// is `j + 1` with spokes on even `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GraphSpec {
    Cycle { k: u64 },
    Wheel { n: u64 },
    Gear { n: u64 },
    EdgeList { vertices: u64, edges: Vec<Edge> },
}

impl GraphSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &'static str, v: u64| Err(Error::OutOfRange { what, value: v, min: 3, max: u32::MAX as u64 });
        match *self {
            GraphSpec::Cycle { k } if k < 3 => bad("k", k),
            GraphSpec::Wheel { n } | GraphSpec::Gear { n } if n < 3 => bad("n", n),
            GraphSpec::Cycle { k } if k > u32::MAX as u64 => bad("k", k),
            GraphSpec::EdgeList { vertices, ref edges } => {
                for &(a, b) in edges {
                    if a == b || a as u64 >= vertices || b as u64 >= vertices {
                        return Err(Error::InvalidArgument(format!("edge ({a},{b}) invalid for {vertices} vertices")));
                    }
                }
                let mut norm: Vec<Edge> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
                norm.sort_unstable();
                if norm.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::InvalidArgument("repeated edge".into()));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> u64 {
        match *self {
            GraphSpec::Cycle { k } => k,
            GraphSpec::Wheel { n } => n + 1,
            GraphSpec::Gear { n } => 2 * n + 1,
            GraphSpec::EdgeList { vertices, .. } => vertices,
        }
    }

    pub fn edge_count(&self) -> u64 {
        match *self {
            GraphSpec::Cycle { k } => k,
            GraphSpec::Wheel { n } => 2 * n,
            GraphSpec::Gear { n } => 3 * n,
            GraphSpec::EdgeList { ref edges, .. } => edges.len() as u64,
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Cycle { k } => write!(f, "cycle:{k}"),
            GraphSpec::Wheel { n } => write!(f, "wheel:{n}"),
            GraphSpec::Gear { n } => write!(f, "gear:{n}"),
            GraphSpec::EdgeList { vertices, edges } => write!(f, "edges:{vertices}/{}", edges.len()),
        }
    }
}

/// Parses `cycle:K`, `wheel:N` or `gear:N`.
impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, num) = s.split_once(':').ok_or_else(|| Error::InvalidArgument(format!("expected KIND:N, got {s:?}")))?;
        let v: u64 = num.parse().map_err(|_| Error::InvalidArgument(format!("bad size {num:?}")))?;
        let spec = match kind.to_ascii_lowercase().as_str() {
            "cycle" | "c" => GraphSpec::Cycle { k: v },
            "wheel" | "w" => GraphSpec::Wheel { n: v },
            "gear" | "g" => GraphSpec::Gear { n: v },
            _ => return Err(Error::InvalidArgument(format!("unknown graph kind {kind:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Explicit vertex and edge lists with adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub spec: GraphSpec,
    pub vertices: usize,
    pub edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v as usize]
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.iter().position(|&(x, y)| (x.min(y), x.max(y)) == key)
    }
}

pub fn build_graph(spec: &GraphSpec) -> Result<Graph> {
    spec.validate()?;
    let edges: Vec<Edge> = match *spec {
        GraphSpec::Cycle { k } => {
            let k = k as Vertex;
            (0..k).map(|i| (i, (i + 1) % k)).collect()
        }
        GraphSpec::Wheel { n } => {
            let n = n as Vertex;
            let rim = (1..=n).map(|i| (i, i % n + 1));
            rim.chain((1..=n).map(|i| (0, i))).collect()
        }
        GraphSpec::Gear { n } => {
            let m = 2 * n as Vertex;
            let rim = (0..m).map(|j| (j + 1, (j + 1) % m + 1));
            rim.chain((0..m).step_by(2).map(|j| (0, j + 1))).collect()
        }
        GraphSpec::EdgeList { ref edges, .. } => edges.clone(),
    };
    let vertices = spec.vertex_count() as usize;
    let mut adjacency = vec![Vec::new(); vertices];
    for &(a, b) in &edges {
        adjacency[a as usize].push(b);
        adjacency[b as usize].push(a);
    }
    Ok(Graph { spec: spec.clone(), vertices, edges, adjacency })
}
