//! Labeled pencils through the origin and the affine frame the cycle and
//! gear constructions walk on.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::incidence::{IncidencePlane, LineId, PointId};
use super::projective::{ProjLine, ProjPoint, ProjectivePlane};
use crate::error::{Error, Result};
use crate::gf::FieldElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelingKind {
    /// `l_0: x=0`, `l_i: y = α^i x` for `1 <= i <= q-1`, `l_q: y=0`.
    A,
    /// `l_0: x=0`, `l_i: y = α^i x` for `1 <= i <= q-2`, `l_{q-1}: y=0`, `l_q: y=x`.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Slope {
    Vertical,
    Finite(FieldElement),
}

/// Ordered lines `l_0..l_q` through the origin, given by their slopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeLabeling {
    pub kind: LabelingKind,
    pub alpha: FieldElement,
    pub slopes: Vec<Slope>,
}

impl SlopeLabeling {
    pub fn new(plane: &ProjectivePlane, kind: LabelingKind, alpha: FieldElement) -> Result<Self> {
        let f = plane.field();
        let q = f.order();
        if q > 2 && !f.is_primitive(alpha) {
            return Err(Error::InvalidArgument(format!("{alpha} is not primitive in GF({q})")));
        }
        let mut slopes = vec![Slope::Vertical];
        let last_power = match kind {
            LabelingKind::A => q - 1,
            LabelingKind::B => q.saturating_sub(2),
        };
        slopes.extend((1..=last_power).map(|i| Slope::Finite(f.pow(alpha, i))));
        slopes.push(Slope::Finite(FieldElement::ZERO));
        if kind == LabelingKind::B {
            slopes.push(Slope::Finite(FieldElement::ONE));
        }
        if slopes.len() as u64 != q + 1 {
            return Err(Error::InvalidArgument(format!("labeling {kind:?} needs q >= 3")));
        }
        Ok(SlopeLabeling { kind, alpha, slopes })
    }

    pub fn line(&self, plane: &ProjectivePlane, i: usize) -> ProjLine {
        match self.slopes[i] {
            Slope::Vertical => plane.line_vertical(FieldElement::ZERO),
            Slope::Finite(m) => plane.line_slope(m, FieldElement::ZERO),
        }
    }

    /// The point `(i)` on the line at infinity.
    pub fn direction(&self, plane: &ProjectivePlane, i: usize) -> ProjPoint {
        match self.slopes[i] {
            Slope::Vertical => plane.vertical_point(),
            Slope::Finite(m) => plane.slope_point(m),
        }
    }
}

/// Origin, line at infinity, pencil `l_0..l_q` through the origin and the
/// matching directions `(0)..(q)`, all as ids of one plane.
#[derive(Clone, Debug)]
pub struct Frame {
    pub origin: PointId,
    pub infinity: LineId,
    pub pencil: Vec<LineId>,
    pub directions: Vec<PointId>,
    dir_index: HashMap<PointId, usize>,
}

impl Frame {
    fn assemble(origin: PointId, infinity: LineId, pencil: Vec<LineId>, directions: Vec<PointId>) -> Self {
        let dir_index = directions.iter().enumerate().map(|(i, &d)| (d, i)).collect();
        Frame { origin, infinity, pencil, directions, dir_index }
    }

    pub fn from_labeling(plane: &ProjectivePlane, labeling: &SlopeLabeling) -> Self {
        let n = labeling.slopes.len();
        Self::assemble(
            plane.point_id(&plane.origin()),
            plane.line_id(&plane.line_at_infinity()),
            (0..n).map(|i| plane.line_id(&labeling.line(plane, i))).collect(),
            (0..n).map(|i| plane.point_id(&labeling.direction(plane, i))).collect(),
        )
    }

    /// Frame for a plane known only by incidence: the line at infinity is
    /// line 0 (or the plane's own), the origin the smallest point off it,
    /// and the pencil is ordered by direction id.
    pub fn generic(plane: &dyn IncidencePlane) -> Self {
        let infinity = plane.line_at_infinity().unwrap_or(0);
        let on_inf = plane.points_on(infinity);
        let origin = (0..plane.num_points() as PointId).find(|p| on_inf.binary_search(p).is_err()).expect("a point off a line");
        let pencil = on_inf.iter().map(|&d| plane.join(origin, d).expect("distinct points")).collect();
        Self::assemble(origin, infinity, pencil, on_inf)
    }

    pub fn q(&self) -> usize {
        self.pencil.len() - 1
    }

    pub fn direction_class(&self, p: PointId) -> Option<usize> {
        self.dir_index.get(&p).copied()
    }

    /// Parallel class of a line other than the line at infinity.
    pub fn line_class(&self, plane: &dyn IncidencePlane, l: LineId) -> Option<usize> {
        if l == self.infinity {
            return None;
        }
        self.direction_class(plane.meet(l, self.infinity)?)
    }

    /// Index `i` with `p` on `l_i`, for affine points other than the origin.
    pub fn point_class(&self, plane: &dyn IncidencePlane, p: PointId) -> Option<usize> {
        if p == self.origin || plane.incident(p, self.infinity) {
            return None;
        }
        self.line_class(plane, plane.join(self.origin, p)?)
    }

    /// `l_i + P`: the line of class `i` through `p`.
    pub fn parallel(&self, plane: &dyn IncidencePlane, i: usize, p: PointId) -> Option<LineId> {
        plane.join(p, self.directions[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelings_cover_every_direction_once() {
        for q in [3u64, 4, 5, 7, 8, 9, 11, 13, 16] {
            let pg = ProjectivePlane::with_order(q).unwrap();
            let alpha = pg.field().first_primitive();
            for kind in [LabelingKind::A, LabelingKind::B] {
                let lab = SlopeLabeling::new(&pg, kind, alpha).unwrap();
                let frame = Frame::from_labeling(&pg, &lab);
                let mut dirs = frame.directions.clone();
                dirs.sort_unstable();
                assert_eq!(dirs, pg.points_on(frame.infinity));
                let mut lines = frame.pencil.clone();
                lines.sort_unstable();
                assert_eq!(
                    lines,
                    pg.lines_through(frame.origin).into_iter().filter(|&l| l != frame.infinity).collect::<Vec<_>>()
                );
                for i in 0..=q as usize {
                    assert!(pg.incident(frame.directions[i], frame.pencil[i]));
                }
            }
        }
    }

    #[test]
    fn labeling_b_swaps_last_two_of_a() {
        let pg = ProjectivePlane::with_order(7).unwrap();
        let alpha = pg.field().elem(3);
        let a = SlopeLabeling::new(&pg, LabelingKind::A, alpha).unwrap();
        let b = SlopeLabeling::new(&pg, LabelingKind::B, alpha).unwrap();
        assert_eq!(a.slopes[6], b.slopes[7]);
        assert_eq!(a.slopes[7], b.slopes[6]);
        assert_eq!(a.slopes[..6], b.slopes[..6]);
    }

    #[test]
    fn generic_frame_on_table() {
        let pg = ProjectivePlane::with_order(5).unwrap();
        let f = Frame::generic(&pg);
        assert_eq!(f.infinity, 30);
        assert_eq!(f.origin, 0);
        for p in 1..25 {
            let c = f.point_class(&pg, p).unwrap();
            assert!(pg.incident(p, f.pencil[c]));
            assert_eq!(f.line_class(&pg, f.parallel(&pg, c, p).unwrap()), Some(c));
        }
    }
}
