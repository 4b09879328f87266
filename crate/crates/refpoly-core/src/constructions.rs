//! The polytopes built from graphs: the stable set polytope `Q_G`, the
//! merged polytopes `Γ(P,Q) = conv(P ∪ -Q)` and
//! `Ω(P,Q) = conv(P×{1} ∪ -Q×{-1})`, the Hansen polytope `Ω(Q_G,Q_G)`, and
//! the bipyramid over a polytope.
//!
//! Generator lists keep fixed ordering conventions (stable sets in
//! canonical order with the origin last, P-block before the negated
//! Q-block) so that toric variable indices line up with the matrix layout
//! used by the algebraic checks.

use num::{BigInt, One, Zero};

use crate::geometry::{LatticePoint, VRep};
use crate::graph::Graph;
use crate::{Error, Result};

/// Indicator vector ρ(W) = Σ_{j ∈ W} e_j in dimension d.
pub fn indicator(d: usize, w: crate::graph::VertexSubset) -> LatticePoint {
    let mut coords = vec![BigInt::zero(); d];
    for v in w.vertices() {
        coords[v - 1] = BigInt::one();
    }
    LatticePoint(coords)
}

/// The (0,1)-polytope conv{ρ(W) : W stable in G}, generators in canonical
/// stable-set order (the origin, from the empty set, comes last).
pub fn stable_set_polytope(g: &Graph) -> VRep {
    let d = g.vertex_count();
    let points = g.stable_sets().into_iter().map(|w| indicator(d, w)).collect();
    VRep::new(d, points).expect("stable sets are pairwise distinct")
}

/// Γ(P,Q) = conv(P ∪ -Q): generator list is P's points followed by the
/// negated points of Q, deduplicated keeping the first occurrence.
pub fn gamma(p: &VRep, q: &VRep) -> Result<VRep> {
    if p.ambient_dim != q.ambient_dim {
        return Err(Error::DimensionMismatch {
            left: p.ambient_dim,
            right: q.ambient_dim,
        });
    }
    let mut points: Vec<LatticePoint> = p.points.clone();
    let mut seen: std::collections::HashSet<LatticePoint> = points.iter().cloned().collect();
    for y in &q.points {
        let neg = y.neg();
        if seen.insert(neg.clone()) {
            points.push(neg);
        }
    }
    VRep::new(p.ambient_dim, points)
}

/// Ω(P,Q) = conv(P×{1} ∪ -Q×{-1}) in one dimension higher.
pub fn omega(p: &VRep, q: &VRep) -> Result<VRep> {
    if p.ambient_dim != q.ambient_dim {
        return Err(Error::DimensionMismatch {
            left: p.ambient_dim,
            right: q.ambient_dim,
        });
    }
    let mut points = Vec::with_capacity(p.points.len() + q.points.len());
    for x in &p.points {
        let mut coords = x.0.clone();
        coords.push(BigInt::one());
        points.push(LatticePoint(coords));
    }
    for y in &q.points {
        let mut coords: Vec<BigInt> = y.0.iter().map(|c| -c).collect();
        coords.push(-BigInt::one());
        points.push(LatticePoint(coords));
    }
    VRep::new(p.ambient_dim + 1, points)
}

/// The Hansen polytope Ω(Q_G, Q_G).
pub fn hansen(g: &Graph) -> VRep {
    let q = stable_set_polytope(g);
    omega(&q, &q).expect("equal dimensions by construction")
}

/// conv(P×{0}, ±e_{d+1}).
pub fn bipyramid(p: &VRep) -> VRep {
    let d = p.ambient_dim;
    let mut points: Vec<LatticePoint> = p
        .points
        .iter()
        .map(|x| {
            let mut coords = x.0.clone();
            coords.push(BigInt::zero());
            LatticePoint(coords)
        })
        .collect();
    points.push(LatticePoint::unit(d + 1, d));
    points.push(LatticePoint::unit(d + 1, d).neg());
    VRep::new(d + 1, points).expect("apexes are distinct from the equator")
}
