//! Every cycle length in PG(2,q).
//!
//! Lengths q²+1..q²+q come from the long-cycle path
//! `S = P_1 -> ... -> E = P_{q²-q-1}`, both ends on `l_1`, closed back to
//! `S` through some of `Q_2..Q_q` (`Q_i = P_{q²-q+i-2}` on `l_i`),
//! `Q_0 = P_0`, the origin and points at infinity. With `m_i` the old link
//! leaving `Q_i` (through `(i+2)`), `m` the one leaving `E` (through `(3)`):
//!
//! | q²+q−k | tail after E |
//! |---|---|
//! | 0 | `(3) Q_3 (4) Q_4 .. (q) Q_q (0) (1) Q_0 O (2)` |
//! | 1 | `Q_2 (2) (3) Q_3 .. (q) Q_q Q_0 O` |
//! | 2 | `Q_2 (2) (3) Q_3 .. (q) Q_q Q_0` |
//! | 3 | `(3) Q_3 .. (q) Q_q Q_0 O` |
//! | 4 | `(3) Q_3 .. (q) Q_q Q_0` |
//! | 2i−3 | `(3) O Q_i (i+1) Q_{i+1} .. (q) Q_q Q_0` |
//! | 2i−4 | `(3) (2) O Q_i (i+1) Q_{i+1} .. (q) Q_q Q_0` |

use super::ag::{ag_cycle, oracle_cycle};
use super::chain::{CycleChain, CycleRoute};
use super::long::long_sequence;
use super::singer::singer_cycle;
use crate::error::{Error, Result};
use crate::graphs::PlaneRef;
use crate::oracle::OraclePlane;
use crate::plane::{Frame, IncidencePlane, IncidenceTable, PointId, ProjectivePlane};

pub const REPAIR_BUDGET: u64 = 1_000_000;

struct Ladder<'a> {
    q: usize,
    frame: &'a Frame,
    seq: &'a [PointId],
}

impl Ladder<'_> {
    fn qi(&self, i: usize) -> PointId {
        if i == 0 {
            self.seq[0]
        } else {
            self.seq[self.q * self.q - self.q + i - 2]
        }
    }

    fn dir(&self, i: usize) -> PointId {
        self.frame.directions[i]
    }

    fn prefix(&self) -> &[PointId] {
        &self.seq[1..self.q * self.q - self.q]
    }

    /// `(from) Q_from (from+1) Q_{from+1} .. (q) Q_q`, starting at the point
    /// after `Q_{from-1}` or `(from)` as requested.
    fn zigzag(&self, from: usize, lead_with_dir: bool, out: &mut Vec<PointId>) {
        for i in from..=self.q {
            if lead_with_dir || i > from {
                out.push(self.dir(i));
            }
            out.push(self.qi(i));
        }
    }

    fn tail(&self, d: usize) -> Vec<PointId> {
        let q = self.q;
        let o = self.frame.origin;
        let mut t = Vec::new();
        match d {
            0 => {
                self.zigzag(3, true, &mut t);
                t.extend([self.dir(0), self.dir(1), self.qi(0), o, self.dir(2)]);
            }
            1 | 2 => {
                t.extend([self.qi(2), self.dir(2)]);
                self.zigzag(3, true, &mut t);
                t.push(self.qi(0));
                if d == 1 {
                    t.push(o);
                }
            }
            3 | 4 => {
                self.zigzag(3, true, &mut t);
                t.push(self.qi(0));
                if d == 3 {
                    t.push(o);
                }
            }
            _ if d % 2 == 1 => {
                let i = (d + 3) / 2;
                debug_assert!((4..=q).contains(&i));
                t.extend([self.dir(3), o]);
                self.zigzag(i, false, &mut t);
                t.push(self.qi(0));
            }
            _ => {
                let i = (d + 4) / 2;
                debug_assert!((5..=q).contains(&i));
                t.extend([self.dir(3), self.dir(2), o]);
                self.zigzag(i, false, &mut t);
                t.push(self.qi(0));
            }
        }
        t
    }
}

struct Repair<'a> {
    t: &'a IncidenceTable,
    start: PointId,
    point_used: Vec<bool>,
    line_used: Vec<bool>,
    tail: Vec<PointId>,
    nodes: u64,
    budget: u64,
}

impl Repair<'_> {
    fn go(&mut self, cur: PointId, left: usize) -> bool {
        if left == 0 {
            return self.t.join(cur, self.start).is_some_and(|l| !self.line_used[l as usize]);
        }
        for l in self.t.lines_through(cur) {
            if self.line_used[l as usize] {
                continue;
            }
            self.line_used[l as usize] = true;
            for p in self.t.points_on(l) {
                if self.point_used[p as usize] {
                    continue;
                }
                self.nodes += 1;
                if self.nodes > self.budget {
                    self.line_used[l as usize] = false;
                    return false;
                }
                self.point_used[p as usize] = true;
                self.tail.push(p);
                if self.go(p, left - 1) {
                    return true;
                }
                self.tail.pop();
                self.point_used[p as usize] = false;
            }
            self.line_used[l as usize] = false;
        }
        false
    }
}

/// Depth-first search for `len` fresh points closing `prefix` into a cycle,
/// avoiding every line the prefix uses. Stops after `budget` placements.
pub(crate) fn repair(plane: &IncidenceTable, prefix: &[PointId], len: usize, budget: u64) -> Option<Vec<PointId>> {
    let mut r = Repair {
        t: plane,
        start: *prefix.first()?,
        point_used: vec![false; plane.num_points()],
        line_used: vec![false; plane.num_lines()],
        tail: Vec::with_capacity(len),
        nodes: 0,
        budget,
    };
    for &p in prefix {
        r.point_used[p as usize] = true;
    }
    for w in prefix.windows(2) {
        r.line_used[plane.join(w[0], w[1])? as usize] = true;
    }
    r.go(*prefix.last()?, len).then_some(r.tail)
}

/// A k-cycle in PG(2,q) for 3 ≤ k ≤ q²+q+1.
pub fn pg_cycle(q: u64, k: u64) -> Result<CycleChain> {
    let pg = ProjectivePlane::with_order(q)?;
    let n = q * q + q + 1;
    if k < 3 || k > n {
        return Err(Error::OutOfRange { what: "k", value: k, min: 3, max: n });
    }
    if q <= 3 {
        return oracle_cycle(&OraclePlane::pg(q)?, k);
    }
    if k == n {
        return singer_cycle(q);
    }
    if k <= q * q {
        let mut c = ag_cycle(q, k)?;
        c.plane = PlaneRef::pg(q);
        return c.checked(&pg);
    }
    let (frame, seq) = long_sequence(&pg)?;
    let ladder = Ladder { q: q as usize, frame: &frame, seq: &seq };
    let d = (q * q + q - k) as usize;
    let mut pts = ladder.prefix().to_vec();
    pts.extend(ladder.tail(d));
    let attempt = CycleChain::from_points(&pg, PlaneRef::pg(q), CycleRoute::Ladder, pts).and_then(|c| c.checked(&pg));
    match attempt {
        Ok(c) if c.len() as u64 == k => Ok(c),
        other => {
            log::warn!("ladder rung q={q} k={k} failed ({:?}); trying repair search", other.err());
            let table = IncidenceTable::from_plane(&pg);
            let prefix = ladder.prefix();
            let tail = repair(&table, prefix, k as usize - prefix.len(), REPAIR_BUDGET)
                .ok_or_else(|| Error::ConstructionFailed(format!("no {k}-cycle from the ladder in PG(2,{q})")))?;
            let mut pts = prefix.to_vec();
            pts.extend(tail);
            CycleChain::from_points(&pg, PlaneRef::pg(q), CycleRoute::LadderRepair, pts)?.checked(&pg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_rungs_need_no_repair() {
        for q in [4u64, 5, 7, 8, 9] {
            for k in q * q + 1..=q * q + q {
                let c = pg_cycle(q, k).unwrap();
                assert_eq!(c.len() as u64, k);
                assert_eq!(c.route, CycleRoute::Ladder, "q = {q}, k = {k}");
            }
        }
    }

    #[test]
    fn every_length_q4() {
        for k in 3..=21 {
            assert_eq!(pg_cycle(4, k).unwrap().len() as u64, k);
        }
        assert_eq!(pg_cycle(4, 21).unwrap().route, CycleRoute::Singer);
    }

    #[test]
    fn repair_search_closes_a_path() {
        let pg = ProjectivePlane::with_order(4).unwrap();
        let t = IncidenceTable::from_plane(&pg);
        let (_, seq) = long_sequence(&pg).unwrap();
        let prefix = &seq[1..12];
        let tail = repair(&t, prefix, 6, REPAIR_BUDGET).unwrap();
        let mut pts = prefix.to_vec();
        pts.extend(tail);
        let c = CycleChain::from_points(&pg, PlaneRef::pg(4), CycleRoute::LadderRepair, pts).unwrap();
        assert!(c.verify(&pg).unwrap().passed());
    }

    #[test]
    fn small_orders_use_oracle() {
        for k in 3..=13 {
            assert_eq!(pg_cycle(3, k).unwrap().len() as u64, k);
        }
        for k in 3..=7 {
            assert_eq!(pg_cycle(2, k).unwrap().route, CycleRoute::Oracle);
        }
    }
}
