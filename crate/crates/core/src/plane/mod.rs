//! Incidence planes: coordinatized PG(2,q) and AG(2,q), planes loaded from
//! files, and the labeled frame used by the constructions.

mod frame;
mod generic;
mod incidence;
mod projective;

pub use frame::{Frame, LabelingKind, Slope, SlopeLabeling};
pub use generic::{
    ag_from_field, check_plane_axioms, export_projective, pg_from_field, AffinePlane, AxiomReport, AxiomViolation, GenericPlane,
    PlaneKind,
};
pub use incidence::{IncidencePlane, IncidenceTable, LineId, PointId};
pub use projective::{AffinePoint, ProjLine, ProjPoint, ProjectivePlane};
