//! The q+1 point paths from a point of `l_0` and their closed forms.

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::plane::{AffinePoint, Frame, IncidencePlane, LineId, PointId, ProjectivePlane, SlopeLabeling};

/// Incidence-only path `P_0..P_q` with `P_i` on `l_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Walk {
    pub points: Vec<PointId>,
    /// `links[i-1]` joins `P_{i-1}` and `P_i`.
    pub links: Vec<LineId>,
    /// `l_1 + P_q`, which carries the return point.
    pub glue: LineId,
    pub ret: PointId,
}

fn step(plane: &dyn IncidencePlane, frame: &Frame, from: PointId, class: usize, onto: usize) -> Result<(LineId, PointId)> {
    let fail = || Error::ConstructionFailed(format!("path step from point {from} via class {class}"));
    let link = frame.parallel(plane, class, from).ok_or_else(fail)?;
    let next = plane.meet(link, frame.pencil[onto]).ok_or_else(fail)?;
    if next == frame.origin || next == from {
        return Err(fail());
    }
    Ok((link, next))
}

/// `P_i = (l_{i+1} + P_{i-1}) ∩ l_i`, indices of `l` mod q+1, then
/// `Q_0 = (l_1 + P_q) ∩ l_0`.
pub(crate) fn walk(plane: &dyn IncidencePlane, frame: &Frame, start: PointId) -> Result<Walk> {
    let q = frame.q();
    if frame.point_class(plane, start) != Some(0) {
        return Err(Error::InvalidArgument(format!("start point {start} is not on l_0 away from the origin")));
    }
    let mut points = vec![start];
    let mut links = Vec::with_capacity(q);
    for i in 1..=q {
        let (link, next) = step(plane, frame, points[i - 1], (i + 1) % (q + 1), i)?;
        links.push(link);
        points.push(next);
    }
    let (glue, ret) = step(plane, frame, points[q], 1, 0)?;
    Ok(Walk { points, links, glue, ret })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePath {
    pub beta: FieldElement,
    pub labeling: SlopeLabeling,
    /// `P_0..P_q`.
    pub points: Vec<AffinePoint>,
    pub ids: Vec<PointId>,
    pub links: Vec<LineId>,
    pub glue: LineId,
    pub return_point: AffinePoint,
}

/// Runs the path recurrence from `P_0 = (0, beta)` with lines and
/// intersections only.
pub fn base_path(pg: &ProjectivePlane, labeling: &SlopeLabeling, beta: FieldElement) -> Result<BasePath> {
    if pg.q() <= 2 {
        return Err(Error::InvalidArgument("paths need q > 2".into()));
    }
    if beta.is_zero() || beta.enc() >= pg.q() {
        return Err(Error::InvalidArgument(format!("beta = {beta} must be a nonzero element of GF({})", pg.q())));
    }
    let frame = Frame::from_labeling(pg, labeling);
    let start = pg.point_id(&pg.affine(FieldElement::ZERO, beta));
    let w = walk(pg, &frame, start)?;
    let affine = |id: PointId| pg.to_affine(&pg.point_of(id).expect("walk stays in the plane")).expect("affine");
    Ok(BasePath {
        beta,
        labeling: labeling.clone(),
        points: w.points.iter().map(|&p| affine(p)).collect(),
        ids: w.points,
        links: w.links,
        glue: w.glue,
        return_point: affine(w.ret),
    })
}

/// `c` with `Q_0 = (0, c beta)` for every `beta`; read off the path from 1.
pub fn return_multiplier(pg: &ProjectivePlane, labeling: &SlopeLabeling) -> Result<FieldElement> {
    Ok(base_path(pg, labeling, FieldElement::ONE)?.return_point.y)
}

/// Closed form of `P_i` on the labeling-A path from `(0, beta)`:
/// `P_0 = (0, beta)`;
/// `P_j = (beta (1+a)^(j-1) / (a^j (1-a)), beta (1+a)^(j-1) / (1-a))` for `1 <= j <= q-2`;
/// `P_{q-1} = (c, c)` and `P_q = (c, 0)` with `c = beta / ((1+a)^2 (1-a))`.
pub fn path_closed_form(field: &Field, alpha: FieldElement, beta: FieldElement, i: u64) -> Result<AffinePoint> {
    let q = field.order();
    if i > q {
        return Err(Error::OutOfRange { what: "path index", value: i, min: 0, max: q });
    }
    let one = FieldElement::ONE;
    let plus = field.add(one, alpha);
    let minus = field.sub(one, alpha);
    let degenerate = || Error::DegenerateAlpha { q, alpha: alpha.enc() };
    if alpha.is_zero() || plus.is_zero() || minus.is_zero() {
        return Err(degenerate());
    }
    if i == 0 {
        return Ok(AffinePoint::new(FieldElement::ZERO, beta));
    }
    if i + 1 >= q {
        let c = field.div(beta, field.mul(field.mul(plus, plus), minus)).ok_or_else(degenerate)?;
        let y = if i == q { FieldElement::ZERO } else { c };
        return Ok(AffinePoint::new(c, y));
    }
    let y = field.div(field.mul(beta, field.pow(plus, i - 1)), minus).ok_or_else(degenerate)?;
    let x = field.div(y, field.pow(alpha, i)).ok_or_else(degenerate)?;
    Ok(AffinePoint::new(x, y))
}

/// `Q_0 = (0, gamma beta)` with `gamma = -a / ((1-a)(1+a)^2)`.
pub fn closed_form_return(field: &Field, alpha: FieldElement, beta: FieldElement) -> Result<AffinePoint> {
    let gamma = crate::gf::gamma_map(field, alpha)?;
    Ok(AffinePoint::new(FieldElement::ZERO, field.mul(gamma, beta)))
}
