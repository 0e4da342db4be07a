//! Cycles of every length in AG(2,q) and PG(2,q).

mod ag;
mod base;
mod chain;
mod long;
mod pg;
mod singer;

pub use ag::{ag_cycle, ellipse, first_irreducible_quadratic, parabola};
pub use base::{base_path, closed_form_return, path_closed_form, return_multiplier, BasePath};
pub use chain::{CycleChain, CycleRoute};
pub use long::{certified_labeling, cycle_q2, long_cycle, long_cycle_with};
pub use pg::{pg_cycle, REPAIR_BUDGET};
pub use singer::{consecutive_pair, is_perfect_difference_set, singer_cycle, singer_difference_set, singer_plane, SingerPlane};

/// The q+1 points `P_0..P_q` of the path from `start` on `l_0`.
pub(crate) fn walk_points(
    plane: &dyn crate::plane::IncidencePlane,
    frame: &crate::plane::Frame,
    start: crate::plane::PointId,
) -> crate::Result<Vec<crate::plane::PointId>> {
    base::walk(plane, frame, start).map(|w| w.points)
}
