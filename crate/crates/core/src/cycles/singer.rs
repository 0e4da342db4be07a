//! Singer difference sets and the Hamiltonian cycle of PG(2,q).

use super::chain::{CycleChain, CycleRoute};
use crate::error::Result;
use crate::gf::cubic::CubicExtension;
use crate::gf::Field;
use crate::graphs::PlaneRef;
use crate::plane::{ProjPoint, ProjectivePlane};

/// Cyclic model of PG(2,q): residue `i` mod `q²+q+1` is the point `g^i`
/// of GF(q³) read as a homogeneous triple, and the lines are the
/// translates of `difference_set`.
#[derive(Clone, Debug)]
pub struct SingerPlane {
    pub q: u64,
    pub modulus: u64,
    pub difference_set: Vec<u64>,
    pub residue_points: Vec<ProjPoint>,
}

pub fn singer_plane(q: u64) -> Result<SingerPlane> {
    let field = Field::with_order(q)?;
    let pg = ProjectivePlane::new(field.clone());
    let ext = CubicExtension::new(&field);
    let g = ext.first_primitive();
    let n = q * q + q + 1;
    let mut h = CubicExtension::one();
    let mut difference_set = Vec::with_capacity(q as usize + 1);
    let mut residue_points = Vec::with_capacity(n as usize);
    for i in 0..n {
        // h lies in span{1, g} iff det(1, g, h) = g1 h2 - g2 h1 = 0.
        if field.mul(g[1], h[2]) == field.mul(g[2], h[1]) {
            difference_set.push(i);
        }
        residue_points.push(pg.point(h.map(|c| c.enc())).expect("nonzero power"));
        h = ext.mul(&h, &g);
    }
    Ok(SingerPlane { q, modulus: n, difference_set, residue_points })
}

pub fn singer_difference_set(q: u64) -> Result<Vec<u64>> {
    Ok(singer_plane(q)?.difference_set)
}

/// Every nonzero residue mod `n` is a difference of exactly one ordered pair.
pub fn is_perfect_difference_set(d: &[u64], n: u64) -> bool {
    let mut hits = vec![0u32; n as usize];
    for &a in d {
        for &b in d {
            if a != b {
                hits[((a + n - b) % n) as usize] += 1;
            }
        }
    }
    hits[0] == 0 && hits[1..].iter().all(|&h| h == 1)
}

/// Points `0, 1, ..., n-1` in residue order. Edge `{i, i+1}` lies on the
/// translate `D + (i - d)` where `d, d+1` is the first consecutive pair in `D`.
pub fn singer_cycle(q: u64) -> Result<CycleChain> {
    let s = singer_plane(q)?;
    let pg = ProjectivePlane::with_order(q)?;
    let pts = s.residue_points.iter().map(|p| pg.point_id(p)).collect();
    CycleChain::from_points(&pg, PlaneRef::pg(q), CycleRoute::Singer, pts)?.checked(&pg)
}

/// Smallest `d` with `d` and `d + 1` in the difference set.
pub fn consecutive_pair(s: &SingerPlane) -> Option<u64> {
    let n = s.modulus;
    s.difference_set.iter().copied().find(|d| s.difference_set.contains(&((d + 1) % n)))
}
