//! Planes given only by point ids and line lists, plus the axiom checker.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::incidence::{IncidencePlane, IncidenceTable, PointId};
use super::projective::ProjectivePlane;
use crate::error::{Error, Result};

/// Plane file contents: `{"q":3,"points":13,"lines":[[0,1,2,3],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericPlane {
    pub q: u64,
    pub points: usize,
    pub lines: Vec<Vec<PointId>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PlaneKind {
    Projective,
    Affine,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum AxiomViolation {
    PointCount { points: usize, q: u64 },
    LineCount { lines: usize, expected: usize },
    PointOutOfRange { line: usize, point: PointId },
    RepeatedPoint { line: usize, point: PointId },
    DuplicateLine { first: usize, second: usize },
    LineSize { line: usize, size: usize, expected: usize },
    PairNotJoined { a: PointId, b: PointId },
    PairOnSeveralLines { a: PointId, b: PointId, lines: usize },
    LinesDisjoint { l: usize, m: usize },
    LinesMeetTwice { l: usize, m: usize, common: usize },
    ParallelCount { line: usize, point: PointId, parallels: usize },
    NoQuadrangle,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AxiomViolation::*;
        match self {
            PointCount { points, q } => write!(f, "{points} points fits neither q^2 nor q^2+q+1 for q = {q}"),
            LineCount { lines, expected } => write!(f, "{lines} lines, expected {expected}"),
            PointOutOfRange { line, point } => write!(f, "line {line} names point {point}, which does not exist"),
            RepeatedPoint { line, point } => write!(f, "line {line} lists point {point} twice"),
            DuplicateLine { first, second } => write!(f, "lines {first} and {second} are the same point set"),
            LineSize { line, size, expected } => write!(f, "line {line} has {size} points, expected {expected}"),
            PairNotJoined { a, b } => write!(f, "no line through points {a} and {b}"),
            PairOnSeveralLines { a, b, lines } => write!(f, "points {a} and {b} lie on {lines} lines"),
            LinesDisjoint { l, m } => write!(f, "lines {l} and {m} do not meet"),
            LinesMeetTwice { l, m, common } => write!(f, "lines {l} and {m} share {common} points"),
            ParallelCount { line, point, parallels } => {
                write!(f, "point {point} has {parallels} parallels to line {line}, expected 1")
            }
            NoQuadrangle => write!(f, "no four points with no three collinear"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AxiomReport {
    pub kind: Option<PlaneKind>,
    pub points: usize,
    pub lines: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl GenericPlane {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let plane: GenericPlane = serde_json::from_str(text).map_err(|e| Error::MalformedPlane(e.to_string()))?;
        Ok(plane)
    }

    pub fn to_json(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("{{\"q\":{},\"points\":{},\"lines\":[", self.q, self.points));
        for (i, l) in self.lines.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&serde_json::to_string(l).expect("integers serialize"));
        }
        s.push_str("]}\n");
        s
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn kind(&self) -> Option<PlaneKind> {
        let q = self.q as usize;
        if self.points == q * q + q + 1 {
            Some(PlaneKind::Projective)
        } else if self.points == q * q {
            Some(PlaneKind::Affine)
        } else {
            None
        }
    }

    /// Table view of a projective plane file. Fails unless the axioms hold.
    pub fn to_table(&self) -> Result<IncidenceTable> {
        if self.kind() != Some(PlaneKind::Projective) {
            return Err(Error::MalformedPlane("only projective plane files have an incidence table".into()));
        }
        let report = check_plane_axioms(self);
        if let Some(v) = report.violations.first() {
            return Err(Error::MalformedPlane(v.to_string()));
        }
        IncidenceTable::from_lines(self.q, &self.lines)
    }
}

/// Checks a plane file against the projective or affine axioms, chosen by
/// the point count. Violations are collected, not thrown.
pub fn check_plane_axioms(plane: &GenericPlane) -> AxiomReport {
    let mut v = Vec::new();
    let kind = plane.kind();
    let q = plane.q as usize;
    let n = plane.points;
    let report = |violations| AxiomReport { kind, points: n, lines: plane.lines.len(), violations };
    if plane.q < 2 || kind.is_none() {
        v.push(AxiomViolation::PointCount { points: n, q: plane.q });
        return report(v);
    }
    let projective = kind == Some(PlaneKind::Projective);
    let (expected_lines, line_size) = if projective { (n, q + 1) } else { (q * q + q, q) };
    if plane.lines.len() != expected_lines {
        v.push(AxiomViolation::LineCount { lines: plane.lines.len(), expected: expected_lines });
    }

    let mut sets: Vec<BTreeSet<PointId>> = Vec::with_capacity(plane.lines.len());
    for (i, l) in plane.lines.iter().enumerate() {
        let mut s = BTreeSet::new();
        for &p in l {
            if p as usize >= n {
                v.push(AxiomViolation::PointOutOfRange { line: i, point: p });
            } else if !s.insert(p) {
                v.push(AxiomViolation::RepeatedPoint { line: i, point: p });
            }
        }
        if s.len() != line_size {
            v.push(AxiomViolation::LineSize { line: i, size: s.len(), expected: line_size });
        }
        sets.push(s);
    }
    let mut seen: HashMap<&BTreeSet<PointId>, usize> = HashMap::new();
    for (i, s) in sets.iter().enumerate() {
        if let Some(&first) = seen.get(s) {
            v.push(AxiomViolation::DuplicateLine { first, second: i });
        } else {
            seen.insert(s, i);
        }
    }

    let mut pair = vec![0u32; n * n];
    for s in &sets {
        let pts: Vec<PointId> = s.iter().copied().collect();
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                pair[a as usize * n + b as usize] += 1;
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            match pair[a * n + b] {
                1 => {}
                0 => v.push(AxiomViolation::PairNotJoined { a: a as PointId, b: b as PointId }),
                c => v.push(AxiomViolation::PairOnSeveralLines { a: a as PointId, b: b as PointId, lines: c as usize }),
            }
        }
    }

    let m = sets.len();
    let mut meets = vec![0usize; m * m];
    for i in 0..m {
        for j in i + 1..m {
            meets[i * m + j] = sets[i].intersection(&sets[j]).count();
        }
    }
    if projective {
        for i in 0..m {
            for j in i + 1..m {
                match meets[i * m + j] {
                    1 => {}
                    0 => v.push(AxiomViolation::LinesDisjoint { l: i, m: j }),
                    c => v.push(AxiomViolation::LinesMeetTwice { l: i, m: j, common: c }),
                }
            }
        }
    } else {
        for i in 0..m {
            for j in i + 1..m {
                let c = meets[i * m + j];
                if c > 1 {
                    v.push(AxiomViolation::LinesMeetTwice { l: i, m: j, common: c });
                }
            }
        }
        // Playfair: each point off a line has exactly one parallel through it.
        let mut through: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, s) in sets.iter().enumerate() {
            for &p in s {
                through[p as usize].push(i);
            }
        }
        for (i, s) in sets.iter().enumerate() {
            for p in 0..n as PointId {
                if s.contains(&p) {
                    continue;
                }
                let parallels = through[p as usize]
                    .iter()
                    .filter(|&&j| {
                        let (a, b) = if i < j { (i, j) } else { (j, i) };
                        meets[a * m + b] == 0
                    })
                    .count();
                if parallels != 1 {
                    v.push(AxiomViolation::ParallelCount { line: i, point: p, parallels });
                }
            }
        }
    }

    if !has_quadrangle(n, &sets) {
        v.push(AxiomViolation::NoQuadrangle);
    }
    report(v)
}

fn has_quadrangle(n: usize, sets: &[BTreeSet<PointId>]) -> bool {
    let collinear = |a: PointId, b: PointId, c: PointId| sets.iter().any(|s| s.contains(&a) && s.contains(&b) && s.contains(&c));
    // Any non-collinear triple plus one point off its three sides suffices,
    // so scanning a few triples is enough in practice.
    let pts: Vec<PointId> = (0..n as PointId).collect();
    for &a in pts.iter().take(4) {
        for &b in pts.iter().filter(|&&b| b > a) {
            for &c in pts.iter().filter(|&&c| c > b) {
                if collinear(a, b, c) {
                    continue;
                }
                if pts
                    .iter()
                    .any(|&d| d != a && d != b && d != c && !collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d))
                {
                    return true;
                }
            }
        }
    }
    false
}

/// Generic-id view of PG(2,q); ids match [`ProjectivePlane::point_id`].
pub fn pg_from_field(q: u64) -> Result<GenericPlane> {
    let plane = ProjectivePlane::with_order(q)?;
    Ok(export_projective(&plane))
}

pub fn export_projective(plane: &ProjectivePlane) -> GenericPlane {
    let lines = (0..plane.size() as u32).map(|l| plane.points_on(l)).collect();
    GenericPlane { q: plane.q(), points: plane.size(), lines }
}

/// AG(2,q) as PG(2,q) minus the line at infinity. Affine point ids coincide
/// with projective ids, which put the affine points at `0..q^2`.
#[derive(Clone, Debug)]
pub struct AffinePlane {
    pg: ProjectivePlane,
}

impl AffinePlane {
    pub fn new(pg: ProjectivePlane) -> Self {
        AffinePlane { pg }
    }

    pub fn projective(&self) -> &ProjectivePlane {
        &self.pg
    }

    pub fn q(&self) -> u64 {
        self.pg.q()
    }

    pub fn num_points(&self) -> usize {
        (self.q() * self.q()) as usize
    }

    pub fn to_generic(&self) -> GenericPlane {
        let linf = self.pg.line_id(&self.pg.line_at_infinity());
        let n = self.num_points() as PointId;
        let lines = (0..self.pg.size() as u32)
            .filter(|&l| l != linf)
            .map(|l| self.pg.points_on(l).into_iter().filter(|&p| p < n).collect())
            .collect();
        GenericPlane { q: self.q(), points: self.num_points(), lines }
    }
}

pub fn ag_from_field(q: u64) -> Result<AffinePlane> {
    Ok(AffinePlane::new(ProjectivePlane::with_order(q)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> GenericPlane {
        let lines = vec![vec![0, 1, 3], vec![1, 2, 4], vec![2, 3, 5], vec![3, 4, 6], vec![0, 4, 5], vec![1, 5, 6], vec![0, 2, 6]];
        GenericPlane { q: 2, points: 7, lines }
    }

    #[test]
    fn fano_passes() {
        let r = check_plane_axioms(&fano());
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.kind, Some(PlaneKind::Projective));
    }

    #[test]
    fn pg3_round_trip() {
        let p = pg_from_field(3).unwrap();
        let back = GenericPlane::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        let r = check_plane_axioms(&back);
        assert!(r.passed());
        assert_eq!((r.points, r.lines), (13, 13));
    }

    #[test]
    fn repeated_line_is_reported() {
        let mut p = fano();
        p.lines[6] = p.lines[0].clone();
        let r = check_plane_axioms(&p);
        assert!(r.violations.contains(&AxiomViolation::DuplicateLine { first: 0, second: 6 }));
    }

    #[test]
    fn pg_counts() {
        for (q, n, k) in [(2u64, 7usize, 3usize), (3, 13, 4), (4, 21, 5)] {
            let p = pg_from_field(q).unwrap();
            assert_eq!(p.points, n);
            assert_eq!(p.lines.len(), n);
            assert!(p.lines.iter().all(|l| l.len() == k));
            let mut deg = vec![0; n];
            p.lines.iter().flatten().for_each(|&x| deg[x as usize] += 1);
            assert!(deg.iter().all(|&d| d == k));
        }
    }

    #[test]
    fn pg_passes_axioms_up_to_16() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            assert!(check_plane_axioms(&pg_from_field(q).unwrap()).passed(), "q = {q}");
        }
    }

    #[test]
    fn ag_passes_axioms() {
        for q in [2u64, 3, 4, 5] {
            let g = ag_from_field(q).unwrap().to_generic();
            let r = check_plane_axioms(&g);
            assert_eq!(r.kind, Some(PlaneKind::Affine));
            assert!(r.passed(), "q = {q}: {:?}", r.violations);
        }
    }

    #[test]
    fn malformed_file() {
        assert!(GenericPlane::from_json("{\"q\":2}").is_err());
        assert!(pg_from_field(6).is_err());
    }

    #[test]
    fn table_from_file_matches_coordinates() {
        let pg = ProjectivePlane::with_order(4).unwrap();
        let t = export_projective(&pg).to_table().unwrap();
        for a in 0..21 {
            for b in 0..21 {
                assert_eq!(t.join(a, b), pg.join(a, b));
                assert_eq!(t.meet(a, b), pg.meet(a, b));
            }
        }
    }
}
