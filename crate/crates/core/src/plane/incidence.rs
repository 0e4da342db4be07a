use crate::error::{Error, Result};

pub type PointId = u32;
pub type LineId = u32;

/// Read-only incidence queries shared by the coordinatized planes and
/// planes loaded from files. Ids run over `0..num_points()` and
/// `0..num_lines()`.
pub trait IncidencePlane: Sync {
    fn order(&self) -> u64;

    fn num_points(&self) -> usize;

    fn num_lines(&self) -> usize {
        self.num_points()
    }

    /// The line through two distinct points.
    fn join(&self, a: PointId, b: PointId) -> Option<LineId>;

    /// The point on two distinct lines.
    fn meet(&self, l: LineId, m: LineId) -> Option<PointId>;

    fn incident(&self, p: PointId, l: LineId) -> bool;

    /// Points on `l`, ascending.
    fn points_on(&self, l: LineId) -> Vec<PointId>;

    /// Lines through `p`, ascending.
    fn lines_through(&self, p: PointId) -> Vec<LineId>;

    /// The distinguished line removed by the affine view, when the plane has one.
    fn line_at_infinity(&self) -> Option<LineId> {
        None
    }
}

/// Table-backed plane: O(1) joins and meets.
#[derive(Clone, Debug)]
pub struct IncidenceTable {
    q: u64,
    n: usize,
    join: Vec<u32>,
    meet: Vec<u32>,
    points_on: Vec<Vec<PointId>>,
    lines_through: Vec<Vec<LineId>>,
    infinity: Option<LineId>,
}

const NONE: u32 = u32::MAX;

impl IncidenceTable {
    /// Builds tables from line point-lists. Fails unless every pair of points
    /// lies on exactly one line and every pair of lines meets exactly once.
    pub fn from_lines(q: u64, lines: &[Vec<PointId>]) -> Result<Self> {
        let n = lines.len();
        let expected = (q * q + q + 1) as usize;
        if n != expected {
            return Err(Error::MalformedPlane(format!("{n} lines, expected {expected} for order {q}")));
        }
        let mut lines_through = vec![Vec::new(); n];
        for (l, pts) in lines.iter().enumerate() {
            for &p in pts {
                let slot = lines_through
                    .get_mut(p as usize)
                    .ok_or_else(|| Error::MalformedPlane(format!("point id {p} out of range")))?;
                slot.push(l as LineId);
            }
        }
        let mut join = vec![NONE; n * n];
        for (l, pts) in lines.iter().enumerate() {
            for (i, &a) in pts.iter().enumerate() {
                for &b in &pts[i + 1..] {
                    for (x, y) in [(a, b), (b, a)] {
                        let slot = &mut join[x as usize * n + y as usize];
                        if *slot != NONE {
                            return Err(Error::MalformedPlane(format!("points {a} and {b} share two lines")));
                        }
                        *slot = l as u32;
                    }
                }
            }
        }
        let mut meet = vec![NONE; n * n];
        for (p, ls) in lines_through.iter().enumerate() {
            for (i, &l) in ls.iter().enumerate() {
                for &m in &ls[i + 1..] {
                    for (x, y) in [(l, m), (m, l)] {
                        let slot = &mut meet[x as usize * n + y as usize];
                        if *slot != NONE {
                            return Err(Error::MalformedPlane(format!("lines {l} and {m} share two points")));
                        }
                        *slot = p as u32;
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && (join[a * n + b] == NONE || meet[a * n + b] == NONE) {
                    return Err(Error::MalformedPlane(format!("ids {a} and {b} are not joined or do not meet")));
                }
            }
        }
        let mut points_on: Vec<Vec<PointId>> = lines.to_vec();
        points_on.iter_mut().for_each(|v| v.sort_unstable());
        Ok(IncidenceTable { q, n, join, meet, points_on, lines_through, infinity: None })
    }

    /// Copies the incidence structure of any plane into tables.
    pub fn from_plane(plane: &dyn IncidencePlane) -> Self {
        let lines: Vec<Vec<PointId>> = (0..plane.num_lines() as LineId).map(|l| plane.points_on(l)).collect();
        let mut table = Self::from_lines(plane.order(), &lines).expect("source plane satisfies the axioms");
        table.infinity = plane.line_at_infinity();
        table
    }

    pub fn with_line_at_infinity(mut self, l: Option<LineId>) -> Self {
        self.infinity = l;
        self
    }

    pub fn lines(&self) -> &[Vec<PointId>] {
        &self.points_on
    }
}

impl IncidencePlane for IncidenceTable {
    fn order(&self) -> u64 {
        self.q
    }

    fn num_points(&self) -> usize {
        self.n
    }

    fn join(&self, a: PointId, b: PointId) -> Option<LineId> {
        let v = *self.join.get(a as usize * self.n + b as usize)?;
        (v != NONE).then_some(v)
    }

    fn meet(&self, l: LineId, m: LineId) -> Option<PointId> {
        let v = *self.meet.get(l as usize * self.n + m as usize)?;
        (v != NONE).then_some(v)
    }

    fn incident(&self, p: PointId, l: LineId) -> bool {
        self.points_on.get(l as usize).is_some_and(|pts| pts.binary_search(&p).is_ok())
    }

    fn points_on(&self, l: LineId) -> Vec<PointId> {
        self.points_on[l as usize].clone()
    }

    fn lines_through(&self, p: PointId) -> Vec<LineId> {
        self.lines_through[p as usize].clone()
    }

    fn line_at_infinity(&self) -> Option<LineId> {
        self.infinity
    }
}
