//! PG(2,q) coordinatized by GF(q), with AG(2,q) as the complement of the
//! line z = 0.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::incidence::{IncidencePlane, LineId, PointId};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// Homogeneous point `(x : y : z)`, first nonzero coordinate equal to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjPoint(pub [FieldElement; 3]);

/// Homogeneous line `[a : b : c]` with incidence `ax + by + cz = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjLine(pub [FieldElement; 3]);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl AffinePoint {
    pub fn new(x: FieldElement, y: FieldElement) -> Self {
        AffinePoint { x, y }
    }
}

impl ProjPoint {
    pub fn coords(&self) -> [u64; 3] {
        self.0.map(|c| c.enc())
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0[2].is_zero()
    }
}

impl ProjLine {
    pub fn coords(&self) -> [u64; 3] {
        self.0.map(|c| c.enc())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.coords();
        write!(f, "({x}:{y}:{z})")
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.coords();
        write!(f, "[{a}:{b}:{c}]")
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// PG(2,q) over a concrete field.
///
/// Point ids: affine `(x, y) -> x*q + y`, then `(1:m:0) -> q^2 + m` and
/// `(0:1:0) -> q^2 + q`. Line ids on canonical triples:
/// `[1:b:c] -> b*q + c`, `[0:1:c] -> q^2 + c`, `[0:0:1] -> q^2 + q`.
#[derive(Clone, Debug)]
pub struct ProjectivePlane {
    field: Field,
}

impl ProjectivePlane {
    pub fn new(field: Field) -> Self {
        ProjectivePlane { field }
    }

    pub fn with_order(q: u64) -> Result<Self> {
        Ok(Self::new(Field::with_order(q)?))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn size(&self) -> usize {
        let q = self.q() as usize;
        q * q + q + 1
    }

    fn canonical(&self, t: [FieldElement; 3]) -> Option<[FieldElement; 3]> {
        let lead = *t.iter().find(|c| !c.is_zero())?;
        let inv = self.field.inv(lead)?;
        Some(t.map(|c| self.field.mul(c, inv)))
    }

    fn cross(&self, u: &[FieldElement; 3], v: &[FieldElement; 3]) -> [FieldElement; 3] {
        let f = &self.field;
        let m = |a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement| f.sub(f.mul(a, b), f.mul(c, d));
        [m(u[1], v[2], u[2], v[1]), m(u[2], v[0], u[0], v[2]), m(u[0], v[1], u[1], v[0])]
    }

    fn triple_id(&self, t: &[FieldElement; 3]) -> u32 {
        let q = self.q();
        let id = if t[0] == FieldElement::ONE {
            t[1].enc() * q + t[2].enc()
        } else if t[1] == FieldElement::ONE {
            q * q + t[2].enc()
        } else {
            q * q + q
        };
        id as u32
    }

    fn id_triple(&self, id: u32) -> Option<[FieldElement; 3]> {
        let q = self.q();
        let id = id as u64;
        let f = &self.field;
        if id < q * q {
            Some([FieldElement::ONE, f.elem(id / q), f.elem(id % q)])
        } else if id < q * q + q {
            Some([FieldElement::ZERO, FieldElement::ONE, f.elem(id - q * q)])
        } else if id == q * q + q {
            Some([FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE])
        } else {
            None
        }
    }

    fn check(&self, t: &[FieldElement; 3]) -> Result<()> {
        let q = self.q();
        if let Some(bad) = t.iter().find(|c| c.enc() >= q) {
            return Err(Error::OutOfRange { what: "field element", value: bad.enc(), min: 0, max: q - 1 });
        }
        Ok(())
    }

    /// Canonical point from any nonzero homogeneous triple.
    pub fn point(&self, coords: [u64; 3]) -> Result<ProjPoint> {
        let t = coords.map(FieldElement::from_raw);
        self.check(&t)?;
        self.canonical(t).map(ProjPoint).ok_or_else(|| Error::InvalidArgument("zero triple is not a point".into()))
    }

    pub fn line(&self, coords: [u64; 3]) -> Result<ProjLine> {
        let t = coords.map(FieldElement::from_raw);
        self.check(&t)?;
        self.canonical(t).map(ProjLine).ok_or_else(|| Error::InvalidArgument("zero triple is not a line".into()))
    }

    pub fn affine(&self, x: FieldElement, y: FieldElement) -> ProjPoint {
        ProjPoint([x, y, FieldElement::ONE]).canonicalized(self)
    }

    pub fn affine_point(&self, p: AffinePoint) -> ProjPoint {
        self.affine(p.x, p.y)
    }

    /// `None` for points on the line at infinity.
    pub fn to_affine(&self, p: &ProjPoint) -> Option<AffinePoint> {
        let z = self.field.inv(p.0[2])?;
        Some(AffinePoint::new(self.field.mul(p.0[0], z), self.field.mul(p.0[1], z)))
    }

    pub fn origin(&self) -> ProjPoint {
        self.affine(FieldElement::ZERO, FieldElement::ZERO)
    }

    pub fn line_at_infinity(&self) -> ProjLine {
        ProjLine([FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE])
    }

    /// Point at infinity of the parallel class with slope `m`.
    pub fn slope_point(&self, m: FieldElement) -> ProjPoint {
        ProjPoint([FieldElement::ONE, m, FieldElement::ZERO])
    }

    pub fn vertical_point(&self) -> ProjPoint {
        ProjPoint([FieldElement::ZERO, FieldElement::ONE, FieldElement::ZERO])
    }

    pub fn on(&self, p: &ProjPoint, l: &ProjLine) -> bool {
        let f = &self.field;
        let s = (0..3).fold(FieldElement::ZERO, |acc, i| f.add(acc, f.mul(p.0[i], l.0[i])));
        s.is_zero()
    }

    pub fn line_through(&self, p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
        self.canonical(self.cross(&p.0, &q.0)).map(ProjLine).ok_or(Error::SamePoint)
    }

    pub fn intersect(&self, l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
        self.canonical(self.cross(&l.0, &m.0)).map(ProjPoint).ok_or(Error::SameLine)
    }

    /// The line through `p` in the parallel class of `l`.
    pub fn parallel_line(&self, l: &ProjLine, p: &ProjPoint) -> Result<ProjLine> {
        let linf = self.line_at_infinity();
        if *l == linf {
            return Err(Error::LineAtInfinity);
        }
        let dir = self.intersect(l, &linf)?;
        if *p == dir {
            return Err(Error::InvalidArgument(format!("{p} is the direction of {l}")));
        }
        self.line_through(p, &dir)
    }

    /// `y = m x + c`.
    pub fn line_slope(&self, m: FieldElement, c: FieldElement) -> ProjLine {
        let f = &self.field;
        ProjLine([f.neg(m), FieldElement::ONE, f.neg(c)]).canonicalized(self)
    }

    /// `x = c`.
    pub fn line_vertical(&self, c: FieldElement) -> ProjLine {
        ProjLine([FieldElement::ONE, FieldElement::ZERO, self.field.neg(c)])
    }

    pub fn point_id(&self, p: &ProjPoint) -> PointId {
        let q = self.q();
        let id = match self.to_affine(p) {
            Some(a) => a.x.enc() * q + a.y.enc(),
            None if p.0[0] == FieldElement::ONE => q * q + p.0[1].enc(),
            None => q * q + q,
        };
        id as PointId
    }

    pub fn line_id(&self, l: &ProjLine) -> LineId {
        self.triple_id(&l.0)
    }

    pub fn point_of(&self, id: PointId) -> Result<ProjPoint> {
        let q = self.q();
        let i = id as u64;
        let f = &self.field;
        if i < q * q {
            Ok(self.affine(f.elem(i / q), f.elem(i % q)))
        } else if i < q * q + q {
            Ok(self.slope_point(f.elem(i - q * q)))
        } else if i == q * q + q {
            Ok(self.vertical_point())
        } else {
            Err(Error::PointNotInPlane(id))
        }
    }

    pub fn line_of(&self, id: LineId) -> Result<ProjLine> {
        self.id_triple(id).map(ProjLine).ok_or_else(|| Error::OutOfRange {
            what: "line id",
            value: id as u64,
            min: 0,
            max: self.size() as u64 - 1,
        })
    }

    pub fn points(&self) -> impl Iterator<Item = ProjPoint> + '_ {
        (0..self.size() as u32).map(|i| self.point_of(i).expect("id in range"))
    }

    pub fn lines(&self) -> impl Iterator<Item = ProjLine> + '_ {
        (0..self.size() as u32).map(|i| ProjLine(self.id_triple(i).expect("id in range")))
    }

    pub fn affine_points(&self) -> impl Iterator<Item = ProjPoint> + '_ {
        self.points().filter(|p| !p.is_at_infinity())
    }

    /// Points of `l` ordered by id.
    pub fn points_on_line(&self, l: &ProjLine) -> Vec<ProjPoint> {
        let axes = [[1u64, 0, 0], [0, 1, 0], [0, 0, 1]].map(|c| self.line(c).expect("axis"));
        let mut found: Vec<ProjPoint> = Vec::with_capacity(2);
        for ax in axes.iter().filter(|ax| *ax != l) {
            let p = self.intersect(l, ax).expect("distinct lines");
            if !found.contains(&p) {
                found.push(p);
            }
        }
        let (a, b) = (found[0], found[1]);
        let f = &self.field;
        let mut pts: Vec<ProjPoint> = std::iter::once(a)
            .chain(f.elements().map(|t| {
                let v = [0, 1, 2].map(|i| f.add(b.0[i], f.mul(t, a.0[i])));
                ProjPoint(self.canonical(v).expect("distinct points span the line"))
            }))
            .collect();
        pts.sort_by_key(|p| self.point_id(p));
        pts
    }

    pub fn lines_through_point(&self, p: &ProjPoint) -> Vec<ProjLine> {
        // Duality: the lines through (x:y:z) are the points of the line [x:y:z].
        self.points_on_line(&ProjLine(p.0)).into_iter().map(|d| ProjLine(d.0)).collect()
    }
}

impl ProjPoint {
    fn canonicalized(self, plane: &ProjectivePlane) -> Self {
        ProjPoint(plane.canonical(self.0).expect("nonzero triple"))
    }
}

impl ProjLine {
    fn canonicalized(self, plane: &ProjectivePlane) -> Self {
        ProjLine(plane.canonical(self.0).expect("nonzero triple"))
    }
}

impl IncidencePlane for ProjectivePlane {
    fn order(&self) -> u64 {
        self.q()
    }

    fn num_points(&self) -> usize {
        self.size()
    }

    fn join(&self, a: PointId, b: PointId) -> Option<LineId> {
        let (p, q) = (self.point_of(a).ok()?, self.point_of(b).ok()?);
        self.line_through(&p, &q).ok().map(|l| self.line_id(&l))
    }

    fn meet(&self, l: LineId, m: LineId) -> Option<PointId> {
        let (l, m) = (self.line_of(l).ok()?, self.line_of(m).ok()?);
        self.intersect(&l, &m).ok().map(|p| self.point_id(&p))
    }

    fn incident(&self, p: PointId, l: LineId) -> bool {
        match (self.point_of(p), self.line_of(l)) {
            (Ok(p), Ok(l)) => self.on(&p, &l),
            _ => false,
        }
    }

    fn points_on(&self, l: LineId) -> Vec<PointId> {
        let l = self.line_of(l).expect("line id in range");
        self.points_on_line(&l).iter().map(|p| self.point_id(p)).collect()
    }

    fn lines_through(&self, p: PointId) -> Vec<LineId> {
        let p = self.point_of(p).expect("point id in range");
        let mut ids: Vec<LineId> = self.lines_through_point(&p).iter().map(|l| self.line_id(l)).collect();
        ids.sort_unstable();
        ids
    }

    fn line_at_infinity(&self) -> Option<LineId> {
        Some(self.line_id(&ProjectivePlane::line_at_infinity(self)))
    }
}
