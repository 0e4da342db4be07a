//! Paths glued end to end through `l_1`-class lines into long cycles.

use super::base::walk;
use super::chain::{CycleChain, CycleRoute};
use crate::error::{Error, Result};
use crate::gf::{certify, CertificateRoute, FieldElement};
use crate::graphs::PlaneRef;
use crate::plane::{Frame, IncidencePlane, LabelingKind, PointId, ProjectivePlane, SlopeLabeling};

/// Follows paths from `start` until one returns to it. Every path adds
/// q+1 points; the result is the concatenation.
pub(crate) fn glued(plane: &dyn IncidencePlane, frame: &Frame, start: PointId) -> Result<Vec<PointId>> {
    let q = frame.q();
    let mut points = Vec::new();
    let mut cur = start;
    for _ in 0..q {
        let w = walk(plane, frame, cur)?;
        points.extend_from_slice(&w.points);
        if w.ret == start {
            return Ok(points);
        }
        cur = w.ret;
    }
    Err(Error::ConstructionFailed(format!("paths from point {start} do not return within {q} laps")))
}

/// Labeling A for the odd route, B for the others, with the certified α.
pub fn certified_labeling(pg: &ProjectivePlane) -> Result<SlopeLabeling> {
    let q = pg.q();
    let cert = certify(pg.field()).map_err(|_| Error::NoCertificate(q))?;
    let kind = match cert.route {
        CertificateRoute::OddGamma => LabelingKind::A,
        CertificateRoute::EvenGolomb | CertificateRoute::BruteSmall => LabelingKind::B,
    };
    SlopeLabeling::new(pg, kind, cert.alpha)
}

/// Frame and the glued sequence from `(0, 1)`; `seq[j]` lies on `l_{j mod (q+1)}`.
pub(crate) fn long_sequence(pg: &ProjectivePlane) -> Result<(Frame, Vec<PointId>)> {
    let labeling = certified_labeling(pg)?;
    let frame = Frame::from_labeling(pg, &labeling);
    let start = pg.point_id(&pg.affine(FieldElement::ZERO, FieldElement::ONE));
    let seq = glued(pg, &frame, start)?;
    Ok((frame, seq))
}

/// Cycle of length (q+1)·ord(return multiplier) for any labeling.
pub fn long_cycle_with(pg: &ProjectivePlane, labeling: &SlopeLabeling) -> Result<CycleChain> {
    let frame = Frame::from_labeling(pg, labeling);
    let start = pg.point_id(&pg.affine(FieldElement::ZERO, FieldElement::ONE));
    let seq = glued(pg, &frame, start)?;
    CycleChain::from_points(pg, PlaneRef::ag(pg.q()), CycleRoute::LongCycle, seq)?.checked(pg)
}

/// The (q²−1)-cycle through every affine point except the origin.
pub fn long_cycle(q: u64) -> Result<CycleChain> {
    let pg = ProjectivePlane::with_order(q)?;
    long_cycle_with(&pg, &certified_labeling(&pg)?)
}

/// Replaces the edge `P_0 P_1` of the long cycle by `P_0 O P_1`.
pub fn cycle_q2(q: u64) -> Result<CycleChain> {
    let pg = ProjectivePlane::with_order(q)?;
    let (frame, mut seq) = long_sequence(&pg)?;
    seq.insert(1, frame.origin);
    CycleChain::from_points(&pg, PlaneRef::ag(q), CycleRoute::LongPlusOrigin, seq)?.checked(&pg)
}
