//! Integer decomposition property testing, plus the explicit
//! non-decomposable witness points arising from odd holes and odd antiholes.

use std::collections::HashSet;

use num::{BigInt, Signed, Zero};
use serde::Serialize;

use crate::geometry::{LatticePoint, Polytope};
use crate::graph::Graph;
use crate::{Error, Result};

/// Outcome of an IDP check up to a dilation bound.
#[derive(Clone, Debug, Serialize)]
pub struct IdpReport {
    pub holds: bool,
    pub checked_bound: u32,
    pub witness: Option<IdpWitness>,
}

/// A lattice point of `dilation·P` that is not a sum of `dilation` lattice
/// points of P.
#[derive(Clone, Debug, Serialize)]
pub struct IdpWitness {
    pub dilation: u32,
    pub point: LatticePoint,
}

/// Dilation bound that suffices to detect IDP failure: for k ≥ d-1 every
/// lattice point of (k+1)P splits off a point of P, so failures must appear
/// by n = d-1.
pub fn default_idp_bound(dim: usize) -> u32 {
    (dim.saturating_sub(1)).max(2) as u32
}

fn to_i64_vec(p: &[BigInt]) -> Result<Vec<i64>> {
    p.iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Capacity("coordinate exceeds i64".into())))
        .collect()
}

/// Checks whether every lattice point of nP is a sum of n lattice points of
/// P, for n up to `bound` (default `max(2, d-1)`). The sumsets
/// S_n = S_{n-1} + S_1 are compared against the streamed lattice points of
/// nP; the first discrepancy, in lexicographic order at the smallest failing
/// n, becomes the witness.
pub fn has_idp(p: &Polytope, bound: Option<u32>) -> Result<IdpReport> {
    let bound = bound.unwrap_or_else(|| default_idp_bound(p.ambient_dim()));
    let base: Vec<Vec<i64>> = p
        .lattice_points(1)?
        .iter()
        .map(|q| to_i64_vec(&q.0))
        .collect::<Result<_>>()?;
    let mut current: HashSet<Vec<i64>> = base.iter().cloned().collect();
    for n in 2..=bound {
        let mut next: HashSet<Vec<i64>> = HashSet::with_capacity(current.len() * 2);
        for a in &current {
            for b in &base {
                next.insert(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        let mut witness: Option<LatticePoint> = None;
        p.visit_lattice_points(n as u64, |q| {
            if witness.is_none() {
                let as_i64: Vec<i64> = q
                    .iter()
                    .map(|c| i64::try_from(c).expect("desk-scale coordinates"))
                    .collect();
                if !next.contains(&as_i64) {
                    witness = Some(LatticePoint(q.to_vec()));
                }
            }
        })?;
        if let Some(point) = witness {
            return Ok(IdpReport {
                holds: false,
                checked_bound: bound,
                witness: Some(IdpWitness { dilation: n, point }),
            });
        }
        current = next;
    }
    Ok(IdpReport {
        holds: true,
        checked_bound: bound,
        witness: None,
    })
}

fn validate_cycle_listing(
    g: &Graph,
    listing: &[usize],
    expect_cycle_edges: bool,
    what: &str,
) -> Result<usize> {
    let m = listing.len();
    if m < 5 || m % 2 == 0 {
        return Err(Error::InvalidWitness(format!(
            "{what} must list an odd number ≥ 5 of vertices, got {m}"
        )));
    }
    let mut seen = HashSet::new();
    for &v in listing {
        if v < 1 || v > g.vertex_count() {
            return Err(Error::InvalidWitness(format!(
                "{what} vertex {v} outside 1..={}",
                g.vertex_count()
            )));
        }
        if !seen.insert(v) {
            return Err(Error::InvalidWitness(format!("{what} repeats vertex {v}")));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            let adjacent = g.has_edge(listing[i], listing[j]);
            let want = if expect_cycle_edges {
                consecutive
            } else {
                !consecutive
            };
            if adjacent != want {
                return Err(Error::InvalidWitness(format!(
                    "{what} is not induced: vertices {} and {} are {}adjacent",
                    listing[i],
                    listing[j],
                    if adjacent { "" } else { "non-" }
                )));
            }
        }
    }
    Ok((m - 1) / 2)
}

/// Witness point from an induced odd hole of `g1` (length 2ℓ+1): the point
/// with coordinate 1 on the hole vertices and 2 in the last slot lies in
/// 3·Ω(Q_{g1}, ·) but admits no 3-term decomposition. It is assembled from
/// the maximal stable sets S_1..S_{2ℓ+1} of the hole via
/// a = (Σ (ρ(S_i), 1) + (0, -1)) / ℓ, which must divide exactly.
pub fn odd_hole_witness(g1: &Graph, hole: &[usize]) -> Result<(u32, LatticePoint)> {
    let ell = validate_cycle_listing(g1, hole, true, "odd hole")?;
    let d = g1.vertex_count();
    let m = hole.len();
    // accumulate Σ v_i with v_i = ρ(S_i) + e_{d+1},
    // S_i = hole positions {i, i+2, .., i+2(ℓ-1)} (cyclic)
    let mut sum = vec![0i64; d + 1];
    for i in 0..m {
        for k in 0..ell {
            let pos = (i + 2 * k) % m;
            sum[hole[pos] - 1] += 1;
        }
        sum[d] += 1;
    }
    sum[d] -= 1; // the extra (0, -1) generator
    let ell_i = ell as i64;
    if sum.iter().any(|&c| c % ell_i != 0) {
        return Err(Error::Inconsistency(
            "odd-hole witness sum is not divisible by ℓ".to_string(),
        ));
    }
    let point: Vec<i64> = sum.iter().map(|&c| c / ell_i).collect();
    debug_assert!(hole.iter().all(|&v| point[v - 1] == 1) && point[d] == 2);
    Ok((3, LatticePoint::from_i64(&point)))
}

/// Witness point from an induced odd antihole of `g1`, listed in the order
/// of its complement cycle (length 2ℓ+1): built from the stable pairs
/// w_i = e_{u_i} + e_{u_{i+1}} + e_{d+1} via b = (Σ w_i + (0,-1)) / 2,
/// non-decomposable at dilation ℓ+1.
pub fn odd_antihole_witness(g1: &Graph, antihole: &[usize]) -> Result<(u32, LatticePoint)> {
    let ell = validate_cycle_listing(g1, antihole, false, "odd antihole")?;
    let d = g1.vertex_count();
    let m = antihole.len();
    let mut sum = vec![0i64; d + 1];
    for i in 0..m {
        sum[antihole[i] - 1] += 1;
        sum[antihole[(i + 1) % m] - 1] += 1;
        sum[d] += 1;
    }
    sum[d] -= 1;
    if sum.iter().any(|&c| c % 2 != 0) {
        return Err(Error::Inconsistency(
            "odd-antihole witness sum is not divisible by 2".to_string(),
        ));
    }
    let point: Vec<i64> = sum.iter().map(|&c| c / 2).collect();
    debug_assert!(antihole.iter().all(|&v| point[v - 1] == 1) && point[d] == ell as i64);
    Ok((ell as u32 + 1, LatticePoint::from_i64(&point)))
}

/// True iff no multiset of `n` lattice points of P sums to `point`
/// (exhaustive search with componentwise feasibility pruning). The point
/// must lie in n·P.
pub fn verify_witness(p: &Polytope, n: u32, point: &LatticePoint) -> Result<bool> {
    let nn = BigInt::from(n);
    for f in &p.hrep.facets {
        if f.eval_int(&point.0) > &f.offset * &nn {
            return Err(Error::PointOutsideDilate);
        }
    }
    let mut pts: Vec<Vec<i64>> = p
        .lattice_points(1)?
        .iter()
        .map(|q| to_i64_vec(&q.0))
        .collect::<Result<_>>()?;
    // search from large last coordinate down; deterministic tie-break
    pts.sort_by(|a, b| (b.last(), b).cmp(&(a.last(), a)));
    let d = p.ambient_dim();
    let mut lo = vec![i64::MAX; d];
    let mut hi = vec![i64::MIN; d];
    for q in &pts {
        for k in 0..d {
            lo[k] = lo[k].min(q[k]);
            hi[k] = hi[k].max(q[k]);
        }
    }
    let mut remaining = to_i64_vec(&point.0)?;
    let found = decompose(&pts, 0, n as i64, &mut remaining, &lo, &hi);
    Ok(!found)
}

fn decompose(
    pts: &[Vec<i64>],
    start: usize,
    slots: i64,
    remaining: &mut Vec<i64>,
    lo: &[i64],
    hi: &[i64],
) -> bool {
    if slots == 0 {
        return remaining.iter().all(|&c| c == 0);
    }
    // componentwise reachability of the remaining sum with `slots` summands
    for k in 0..remaining.len() {
        if remaining[k] < slots * lo[k] || remaining[k] > slots * hi[k] {
            return false;
        }
    }
    for i in start..pts.len() {
        for (r, c) in remaining.iter_mut().zip(&pts[i]) {
            *r -= c;
        }
        if decompose(pts, i, slots - 1, remaining, lo, hi) {
            for (r, c) in remaining.iter_mut().zip(&pts[i]) {
                *r += c;
            }
            return true;
        }
        for (r, c) in remaining.iter_mut().zip(&pts[i]) {
            *r += c;
        }
    }
    false
}
