//! Every cycle length in AG(2,q).

use super::chain::{CycleChain, CycleRoute};
use super::long::{cycle_q2, long_cycle, long_sequence};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::graphs::{build_graph, GraphSpec, PlaneRef};
use crate::oracle::{exists_embedding, OraclePlane, Verdict, DEFAULT_BUDGET};
use crate::plane::{ProjPoint, ProjectivePlane};

/// `(t, t²)` for all t, by encoding.
pub fn parabola(pg: &ProjectivePlane) -> Vec<ProjPoint> {
    let f = pg.field();
    f.elements().map(|t| pg.affine(t, f.mul(t, t))).collect()
}

/// First monic `x² + c1 x + c0` without roots, as `(c0, c1)`, ordered by `c0 + c1 q`.
pub fn first_irreducible_quadratic(f: &Field) -> (FieldElement, FieldElement) {
    let q = f.order();
    (0..q * q)
        .map(|i| (f.elem(i % q), f.elem(i / q)))
        .find(|&(c0, c1)| f.elements().all(|x| !f.add(f.mul(x, f.add(x, c1)), c0).is_zero()))
        .expect("irreducible quadratics exist over every finite field")
}

/// The q+1 affine points of `x² − c1 xy + c0 y² = 1`, the norm-one curve
/// of GF(q²) = GF(q)(θ) with θ² + c1 θ + c0 = 0. Ordered by point id.
pub fn ellipse(pg: &ProjectivePlane) -> Vec<ProjPoint> {
    let f = pg.field();
    let (c0, c1) = first_irreducible_quadratic(f);
    let mut pts: Vec<ProjPoint> = f
        .elements()
        .flat_map(|x| f.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| {
            let v = f.add(f.sub(f.mul(x, x), f.mul(c1, f.mul(x, y))), f.mul(c0, f.mul(y, y)));
            v == FieldElement::ONE
        })
        .map(|(x, y)| pg.affine(x, y))
        .collect();
    pts.sort_by_key(|p| pg.point_id(p));
    pts
}

pub(crate) fn oracle_cycle(plane: &OraclePlane, k: u64) -> Result<CycleChain> {
    let g = build_graph(&GraphSpec::Cycle { k })?;
    let out = exists_embedding(&g, plane, DEFAULT_BUDGET);
    match out.verdict {
        Verdict::Found => Ok(CycleChain::from_embedding(out.embedding.expect("found"), CycleRoute::Oracle)),
        v => Err(Error::ConstructionFailed(format!("oracle: {v:?} for C_{k} in {}", plane.plane_ref))),
    }
}

/// Index `j mod (q²−1)` of the long sequence.
fn at(seq: &[u32], j: u64) -> u32 {
    seq[(j % seq.len() as u64) as usize]
}

/// A k-cycle in AG(2,q) for 3 ≤ k ≤ q².
pub fn ag_cycle(q: u64, k: u64) -> Result<CycleChain> {
    let pg = ProjectivePlane::with_order(q)?;
    if k < 3 || k > q * q {
        return Err(Error::OutOfRange { what: "k", value: k, min: 3, max: q * q });
    }
    if q <= 3 {
        return oracle_cycle(&OraclePlane::ag(q)?, k);
    }
    let plane_ref = PlaneRef::ag(q);
    if k <= q + 1 {
        let arc = if k <= q { parabola(&pg) } else { ellipse(&pg) };
        let ids = arc[..k as usize].iter().map(|p| pg.point_id(p)).collect();
        return CycleChain::from_points(&pg, plane_ref, CycleRoute::Arc, ids)?.checked(&pg);
    }
    if k == q * q - 1 {
        return long_cycle(q);
    }
    if k == q * q {
        return cycle_q2(q);
    }
    let (frame, seq) = long_sequence(&pg)?;
    let o = frame.origin;
    // P_{k-1} shares l_1 with P_1 exactly when k - 2 is a multiple of q + 1.
    let (route, pts) = if !(k - 2).is_multiple_of(q + 1) {
        let mut pts = vec![o];
        pts.extend((1..k).map(|j| at(&seq, j)));
        (CycleRoute::RunThroughOrigin, pts)
    } else {
        let lap = q + 1;
        let mut pts = vec![o];
        pts.extend((1..=k - 3).map(|j| at(&seq, j)));
        pts.push(at(&seq, k - 3 + lap));
        pts.push(at(&seq, k - 2 + lap));
        (CycleRoute::RunWithSkip, pts)
    };
    CycleChain::from_points(&pg, plane_ref, route, pts)?.checked(&pg)
}
