//! Wheels W_n and gears G_n in planes of order q.
//!
//! Wheels and gears put the center at vertex 0; the gear rim vertex `v_j`
//! is `j + 1` and carries a spoke when `j` is even.

use serde::{Deserialize, Serialize};

use crate::cycles::{parabola, walk_points};
use crate::error::{Error, Result};
use crate::graphs::{build_graph, verify_embedding, Embedding, GraphSpec, PlaneRef};
use crate::oracle::{exists_embedding, OraclePlane, Verdict, DEFAULT_BUDGET, MAX_ORACLE_ORDER};
use crate::plane::{Frame, IncidencePlane, LabelingKind, PointId, ProjPoint, ProjectivePlane, SlopeLabeling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WheelRoute {
    Arc,
    Explicit,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GearRoute {
    FromWheel,
    PathsEven,
    PathsOdd,
    MaxEven,
    MaxOdd,
    Oracle,
}

#[derive(Clone, Debug)]
pub struct WheelPlan {
    pub route: WheelRoute,
    pub embedding: Embedding,
}

#[derive(Clone, Debug)]
pub struct GearPlan {
    pub route: GearRoute,
    pub embedding: Embedding,
}

fn finish(plane: &dyn IncidencePlane, plane_ref: PlaneRef, spec: GraphSpec, vertex_map: Vec<PointId>) -> Option<Embedding> {
    let g = build_graph(&spec).ok()?;
    let mut seen = vertex_map.clone();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let e = Embedding::from_vertices(plane, plane_ref, &g, vertex_map).ok()?;
    verify_embedding(&g, &e, plane).ok()?.passed().then_some(e)
}

fn check_range(q: u64, n: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::OutOfRange { what: "n", value: n, min: 3, max: q + 1 });
    }
    if n > q + 1 {
        return Err(Error::ImpossibleDegree { n, max: q + 1 });
    }
    Ok(())
}

/// Conic `yz = x²` through `(0:1:0)`, plus the nucleus `(1:0:0)` in even
/// characteristic.
pub fn arc_points(pg: &ProjectivePlane) -> Vec<ProjPoint> {
    let mut arc = parabola(pg);
    arc.push(pg.vertical_point());
    if pg.field().characteristic_two() {
        arc.push(pg.slope_point(crate::gf::FieldElement::ZERO));
    }
    arc
}

fn oracle_embedding(plane: &OraclePlane, spec: GraphSpec) -> Result<Embedding> {
    let g = build_graph(&spec)?;
    let out = exists_embedding(&g, plane, DEFAULT_BUDGET);
    match out.verdict {
        Verdict::Found => Ok(out.embedding.expect("found")),
        v => Err(Error::ConstructionFailed(format!("oracle: {v:?} for {spec} in {}", plane.plane_ref))),
    }
}

/// W_n in PG(2,q) for 3 ≤ n ≤ q+1.
pub fn wheel(q: u64, n: u64) -> Result<WheelPlan> {
    check_range(q, n)?;
    let pg = ProjectivePlane::with_order(q)?;
    let spec = GraphSpec::Wheel { n };
    let arc_size = if pg.field().characteristic_two() { q + 2 } else { q + 1 };
    if n < arc_size {
        let arc = arc_points(&pg);
        let ids = arc[..=n as usize].iter().map(|p| pg.point_id(p)).collect();
        let e = finish(&pg, PlaneRef::pg(q), spec, ids)
            .ok_or_else(|| Error::ConstructionFailed(format!("arc wheel W_{n} in PG(2,{q})")))?;
        return Ok(WheelPlan { route: WheelRoute::Arc, embedding: e });
    }
    let frame = Frame::generic(&pg);
    match wheel_on(&pg, PlaneRef::pg(q), frame.origin, n) {
        Ok(embedding) => Ok(WheelPlan { route: WheelRoute::Explicit, embedding }),
        Err(e) if q > MAX_ORACLE_ORDER => Err(e),
        Err(_) => {
            let embedding = oracle_embedding(&OraclePlane::pg(q)?, spec)?;
            Ok(WheelPlan { route: WheelRoute::Oracle, embedding })
        }
    }
}

/// W_n from incidences only, centered at `o`: with `ℓ` the first line
/// missing `o`, `P_i` its points and `ℓ_i = o P_i`, pick a line `m`
/// through `P_1` and `Q_i = ℓ_i ∩ m`. Odd n: rim `P_1 Q_2 P_3 .. Q_{n-1} P_n`.
/// Even n: rim `P_1 Q_2 .. P_{n-1} T` with `T` on `ℓ_n`.
pub fn wheel_on(plane: &dyn IncidencePlane, plane_ref: PlaneRef, o: PointId, n: u64) -> Result<Embedding> {
    let q = plane.order();
    check_range(q, n)?;
    let n = n as usize;
    let through_o = plane.lines_through(o);
    let ell = (0..plane.num_lines() as u32).find(|l| through_o.binary_search(l).is_err()).expect("some line misses a point");
    // 1-based: p[1..=q+1].
    let mut p = vec![0];
    p.extend(plane.points_on(ell));
    let spoke = |i: usize| plane.join(o, p[i]).expect("o is off ℓ");
    let spec = GraphSpec::Wheel { n: n as u64 };
    for m in plane.lines_through(p[1]) {
        if m == ell || m == spoke(1) {
            continue;
        }
        let last = if n % 2 == 1 { n } else { n - 1 };
        let rim: Vec<PointId> =
            (1..=last).map(|i| if i % 2 == 1 { p[i] } else { plane.meet(spoke(i), m).expect("distinct lines") }).collect();
        if n % 2 == 1 {
            let mut vm = vec![o];
            vm.extend(&rim);
            if let Some(e) = finish(plane, plane_ref, spec.clone(), vm) {
                return Ok(e);
            }
            continue;
        }
        for t in plane.points_on(spoke(n)) {
            if t == o || t == p[n] {
                continue;
            }
            let mut vm = vec![o];
            vm.extend(&rim);
            vm.push(t);
            if let Some(e) = finish(plane, plane_ref, spec.clone(), vm) {
                return Ok(e);
            }
        }
    }
    Err(Error::ConstructionFailed(format!("no W_{n} around point {o} in {plane_ref}")))
}

fn gear_vertices(o: PointId, rim: &[PointId]) -> Vec<PointId> {
    let mut vm = vec![o];
    vm.extend_from_slice(rim);
    vm
}

/// G_n as W_{2n} minus alternate spokes, for 3 ≤ n ≤ ⌊(q+1)/2⌋.
pub fn gear_from_wheel(q: u64, n: u64) -> Result<Embedding> {
    if n < 3 || 2 * n > q + 1 {
        return Err(Error::OutOfRange { what: "n", value: n, min: 3, max: q.div_ceil(2) });
    }
    let w = wheel(q, 2 * n)?.embedding;
    let pg = ProjectivePlane::with_order(q)?;
    finish(&pg, PlaneRef::pg(q), GraphSpec::Gear { n }, w.vertex_map.clone())
        .ok_or_else(|| Error::ConstructionFailed(format!("G_{n} from W_{}", 2 * n)))
}

fn labeled_frame(pg: &ProjectivePlane) -> Result<Frame> {
    let lab = SlopeLabeling::new(pg, LabelingKind::A, pg.field().first_primitive())?;
    Ok(Frame::from_labeling(pg, &lab))
}

/// Gears from two truncated paths, for ⌊(q+1)/2⌋ < n ≤ q.
pub fn gear_paths(q: u64, n: u64) -> Result<GearPlan> {
    check_range(q, n)?;
    if n > q || n < 5 {
        return Err(Error::OutOfRange { what: "n", value: n, min: 5, max: q });
    }
    let pg = ProjectivePlane::with_order(q)?;
    let frame = labeled_frame(&pg)?;
    gear_paths_on(&pg, PlaneRef::pg(q), &frame, n)
}

pub fn gear_paths_on(plane: &dyn IncidencePlane, plane_ref: PlaneRef, frame: &Frame, n: u64) -> Result<GearPlan> {
    let nn = n as usize;
    let spec = GraphSpec::Gear { n };
    let o = frame.origin;
    let l0_points: Vec<PointId> =
        plane.points_on(frame.pencil[0]).into_iter().filter(|&p| p != o && frame.direction_class(p).is_none()).collect();
    let p0 = l0_points[0];
    let pp = walk_points(plane, frame, p0)?;
    let fail = || Error::ConstructionFailed(format!("G_{n} from paths in {plane_ref}"));
    if nn.is_multiple_of(2) {
        for &q0 in &l0_points[1..] {
            let Ok(qq) = walk_points(plane, frame, q0) else { continue };
            let mut rim: Vec<PointId> = pp[..=nn - 2].to_vec();
            rim.push(frame.directions[0]);
            rim.extend_from_slice(&qq[1..nn]);
            rim.push(frame.directions[1]);
            if let Some(e) = finish(plane, plane_ref, spec.clone(), gear_vertices(o, &rim)) {
                return Ok(GearPlan { route: GearRoute::PathsEven, embedding: e });
            }
        }
        return Err(fail());
    }
    // Q_0 with Q_{n-3} on l_k + P_0 for k = 1 or n first, then any other start.
    let mut starts = Vec::new();
    for k in [1, nn] {
        let Some(target) = frame.parallel(plane, k, p0).and_then(|l| plane.meet(l, frame.pencil[nn - 3])) else { continue };
        for &q0 in &l0_points[1..] {
            if walk_points(plane, frame, q0).is_ok_and(|qq| qq[nn - 3] == target) && !starts.contains(&q0) {
                starts.push(q0);
            }
        }
    }
    for &q0 in &l0_points[1..] {
        if !starts.contains(&q0) {
            starts.push(q0);
        }
    }
    for q0 in starts {
        let Ok(qq) = walk_points(plane, frame, q0) else { continue };
        for t in plane.points_on(frame.pencil[nn]) {
            if t == o {
                continue;
            }
            let mut rim: Vec<PointId> = pp[..nn].to_vec();
            rim.push(frame.directions[0]);
            rim.push(t);
            rim.extend_from_slice(&qq[..=nn - 3]);
            if let Some(e) = finish(plane, plane_ref, spec.clone(), gear_vertices(o, &rim)) {
                return Ok(GearPlan { route: GearRoute::PathsOdd, embedding: e });
            }
        }
    }
    Err(fail())
}

/// G_{q+1}: every spoke is a line through the origin, the rim alternates
/// infinite points and one chosen affine point per pencil line.
pub fn gear_max(q: u64) -> Result<GearPlan> {
    if q < 4 {
        return Err(Error::InvalidArgument(format!("the explicit G_(q+1) needs q >= 4, got {q}")));
    }
    let pg = ProjectivePlane::with_order(q)?;
    let frame = labeled_frame(&pg)?;
    gear_max_on(&pg, PlaneRef::pg(q), &frame)
}

pub fn gear_max_on(plane: &dyn IncidencePlane, plane_ref: PlaneRef, frame: &Frame) -> Result<GearPlan> {
    let q = frame.q();
    let o = frame.origin;
    let d = |i: usize| frame.directions[i % (q + 1)];
    let choices = |i: usize| -> Vec<PointId> {
        plane.points_on(frame.pencil[i]).into_iter().filter(|&p| p != o && p != frame.directions[i]).collect()
    };
    // First point of l_i off every line in `avoid`.
    let pick = |i: usize, avoid: &[Option<u32>], skip: &dyn Fn(PointId) -> bool| -> Option<PointId> {
        choices(i).into_iter().find(|&p| !skip(p) && avoid.iter().flatten().all(|&l| !plane.incident(p, l)))
    };
    let par = |i: usize, p: PointId| frame.parallel(plane, i % (q + 1), p);
    let none = |_: PointId| false;
    let fail = || Error::ConstructionFailed(format!("G_{} in {plane_ref}", q + 1));
    let spec = GraphSpec::Gear { n: q as u64 + 1 };
    let mut pts = vec![0; q + 1];
    if q.is_multiple_of(2) {
        pts[1] = choices(1)[0];
        for i in (3..q).step_by(2) {
            pts[i] = pick(i, &[par(i - 1, pts[i - 2])], &none).ok_or_else(fail)?;
        }
        pts[0] = pick(0, &[par(q, pts[q - 1])], &none).ok_or_else(fail)?;
        for i in (2..=q).step_by(2) {
            let p1 = pts[1];
            let skip = |p: PointId| i == q && par(0, p).is_some_and(|l| plane.incident(p1, l));
            pts[i] = pick(i, &[par(i - 1, pts[i - 2])], &skip).ok_or_else(fail)?;
        }
        let mut rim = Vec::with_capacity(2 * q + 2);
        for i in (1..q).step_by(2) {
            rim.extend([d(i - 1), pts[i]]);
        }
        rim.extend([d(q), pts[0]]);
        for i in (2..=q).step_by(2) {
            rim.extend([d(i - 1), pts[i]]);
        }
        let e = finish(plane, plane_ref, spec, gear_vertices(o, &rim)).ok_or_else(fail)?;
        return Ok(GearPlan { route: GearRoute::MaxEven, embedding: e });
    }
    pts[1] = choices(1)[0];
    for i in (3..=q).step_by(2) {
        pts[i] = pick(i, &[par(i - 1, pts[i - 2])], &none).ok_or_else(fail)?;
    }
    pts[2] = choices(2)[0];
    for i in (4..q).step_by(2) {
        let p1 = pts[1];
        let skip = |p: PointId| i == q - 1 && par(q, p).is_some_and(|l| plane.incident(p1, l));
        pts[i] = pick(i, &[par(i - 1, pts[i - 2])], &skip).ok_or_else(fail)?;
    }
    let avoid = [par(0, pts[q]), par(1, pts[2]), Some(frame.pencil[0]), Some(frame.pencil[1]), Some(frame.infinity)];
    let mut rim = Vec::with_capacity(2 * q + 2);
    for i in (2..q).step_by(2) {
        rim.extend([d(i - 1), pts[i]]);
    }
    rim.extend([d(q), pts[1]]);
    for i in (3..=q).step_by(2) {
        rim.extend([d(i - 1), pts[i]]);
    }
    rim.push(d(0));
    for t in 0..plane.num_points() as PointId {
        if pts[1..].contains(&t) || t == o || avoid.iter().flatten().any(|&l| plane.incident(t, l)) {
            continue;
        }
        let mut r = rim.clone();
        r.push(t);
        if let Some(e) = finish(plane, plane_ref, spec.clone(), gear_vertices(o, &r)) {
            return Ok(GearPlan { route: GearRoute::MaxOdd, embedding: e });
        }
    }
    Err(fail())
}

/// G_n in PG(2,q) for 3 ≤ n ≤ q+1.
pub fn gear(q: u64, n: u64) -> Result<GearPlan> {
    check_range(q, n)?;
    ProjectivePlane::with_order(q)?;
    let oracle = |q| -> Result<GearPlan> {
        let e = oracle_embedding(&OraclePlane::pg(q)?, GraphSpec::Gear { n })?;
        Ok(GearPlan { route: GearRoute::Oracle, embedding: e })
    };
    if q <= 4 || (q, n) == (5, 4) {
        return oracle(q);
    }
    if 2 * n <= q + 1 {
        return Ok(GearPlan { route: GearRoute::FromWheel, embedding: gear_from_wheel(q, n)? });
    }
    if n == q + 1 {
        return gear_max(q);
    }
    gear_paths(q, n)
}

/// Wheel or gear on a plane known only by incidences.
pub fn wheel_generic(plane: &dyn IncidencePlane, plane_ref: PlaneRef, n: u64) -> Result<Embedding> {
    let frame = Frame::generic(plane);
    wheel_on(plane, plane_ref, frame.origin, n)
}

pub fn gear_generic(plane: &dyn IncidencePlane, plane_ref: PlaneRef, n: u64) -> Result<GearPlan> {
    let q = plane.order();
    check_range(q, n)?;
    let frame = Frame::generic(plane);
    if 2 * n <= q + 1 {
        let w = wheel_on(plane, plane_ref, frame.origin, 2 * n)?;
        let e = finish(plane, plane_ref, GraphSpec::Gear { n }, w.vertex_map)
            .ok_or_else(|| Error::ConstructionFailed(format!("G_{n} from W_{}", 2 * n)))?;
        return Ok(GearPlan { route: GearRoute::FromWheel, embedding: e });
    }
    if n == q + 1 && q >= 4 {
        return gear_max_on(plane, plane_ref, &frame);
    }
    if n >= 5 {
        return gear_paths_on(plane, plane_ref, &frame, n);
    }
    Err(Error::ConstructionFailed(format!("no incidence route for G_{n} in {plane_ref}")))
}
