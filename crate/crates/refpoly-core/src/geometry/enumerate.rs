//! Streaming enumeration of the lattice points of a polytope dilate.
//!
//! Coordinates are fixed left to right; at each level the admissible
//! integer interval for the next coordinate is intersected over all facets,
//! with the contribution of the still-free coordinates bounded exactly by
//! linear minima over the polytope's point set (attained at a generator).
//! Facets whose rightmost nonzero coefficient sits at the current level are
//! applied exactly, so every emitted point satisfies every facet; output is
//! in lexicographic order.
//!
//! The hot path runs on i128 after an arbitrary-precision audit proves that
//! no intermediate value can overflow; otherwise the same code runs on
//! BigInt.

use num::{BigInt, BigRational, Integer, Signed, Zero};

use super::HRep;
use crate::{Error, Result};

/// Scalar the enumeration recursion runs on.
pub(crate) trait Coord: Clone + Ord + Integer + Signed {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn mul_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn incr(&mut self);
}

impl Coord for i128 {
    fn from_big(v: &BigInt) -> Option<Self> {
        i128::try_from(v).ok()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn incr(&mut self) {
        *self += 1;
    }
}

impl Coord for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn incr(&mut self) {
        *self += 1;
    }
}

/// Facet system of the n-th dilate plus the exact bound data, over BigInt.
struct Prepared {
    dim: usize,
    coeffs: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
    /// facet indices with a nonzero coefficient at each level
    facets_at: Vec<Vec<usize>>,
    /// tail_floor[f][k] = floor(n · min over P of Σ_{j ≥ k} a_{f,j} x_j)
    tail_floor: Vec<Vec<BigInt>>,
    box_lo: Vec<BigInt>,
    box_hi: Vec<BigInt>,
}

fn prepare(hrep: &HRep, points: &[Vec<BigRational>], dilate: u64) -> Result<Prepared> {
    let dim = hrep.ambient_dim;
    if points.is_empty() {
        return Err(Error::Inconsistency(
            "enumeration needs a nonempty point set".to_string(),
        ));
    }
    let n = BigInt::from(dilate);
    let nrat = BigRational::from_integer(n.clone());

    let mut box_lo = Vec::with_capacity(dim);
    let mut box_hi = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut lo = points[0][k].clone();
        let mut hi = points[0][k].clone();
        for p in &points[1..] {
            if p[k] < lo {
                lo = p[k].clone();
            }
            if p[k] > hi {
                hi = p[k].clone();
            }
        }
        box_lo.push((lo * &nrat).ceil().to_integer());
        box_hi.push((hi * &nrat).floor().to_integer());
    }

    let fcount = hrep.facets.len();
    let mut coeffs = Vec::with_capacity(fcount);
    let mut rhs = Vec::with_capacity(fcount);
    let mut tail_floor = Vec::with_capacity(fcount);
    for facet in &hrep.facets {
        rhs.push(&facet.offset * &n);
        // suffix minima of Σ_{j ≥ k} a_j x_j over the point set
        let mut suffix: Vec<BigRational> = vec![BigRational::zero(); points.len()];
        let mut mins = vec![BigInt::zero(); dim + 1];
        for k in (0..dim).rev() {
            let a = BigRational::from_integer(facet.normal[k].clone());
            let mut min: Option<BigRational> = None;
            for (s, p) in suffix.iter_mut().zip(points) {
                *s += &a * &p[k];
                if min.as_ref().is_none_or(|m| *s < *m) {
                    min = Some(s.clone());
                }
            }
            mins[k] = (min.unwrap() * &nrat).floor().to_integer();
        }
        tail_floor.push(mins);
        coeffs.push(facet.normal.clone());
    }

    let mut facets_at = vec![Vec::new(); dim];
    for (f, normal) in coeffs.iter().enumerate() {
        for (k, a) in normal.iter().enumerate() {
            if !a.is_zero() {
                facets_at[k].push(f);
            }
        }
    }

    Ok(Prepared {
        dim,
        coeffs,
        rhs,
        facets_at,
        tail_floor,
        box_lo,
        box_hi,
    })
}

/// Checks that every value the recursion can produce fits comfortably in
/// i128 (the audit is a static bound, not a runtime check).
fn fits_i128(prep: &Prepared) -> bool {
    let limit = BigInt::from(1) << 100;
    for k in 0..prep.dim {
        if prep.box_lo[k].abs() > limit || prep.box_hi[k].abs() > limit {
            return false;
        }
    }
    for f in 0..prep.rhs.len() {
        let mut bound = prep.rhs[f].abs();
        for k in 0..prep.dim {
            let b = prep.box_lo[k].abs().max(prep.box_hi[k].abs());
            bound += prep.coeffs[f][k].abs() * b;
        }
        for t in &prep.tail_floor[f] {
            bound += t.abs();
        }
        if bound > limit {
            return false;
        }
    }
    true
}

struct Converted<T> {
    dim: usize,
    coeffs: Vec<Vec<T>>,
    facets_at: Vec<Vec<usize>>,
    tail_floor: Vec<Vec<T>>,
    box_lo: Vec<T>,
    box_hi: Vec<T>,
}

fn convert<T: Coord>(prep: &Prepared) -> Option<(Converted<T>, Vec<T>)> {
    let conv_vec = |v: &[BigInt]| -> Option<Vec<T>> { v.iter().map(T::from_big).collect() };
    let resid = conv_vec(&prep.rhs)?;
    Some((
        Converted {
            dim: prep.dim,
            coeffs: prep
                .coeffs
                .iter()
                .map(|r| conv_vec(r))
                .collect::<Option<_>>()?,
            facets_at: prep.facets_at.clone(),
            tail_floor: prep
                .tail_floor
                .iter()
                .map(|r| conv_vec(r))
                .collect::<Option<_>>()?,
            box_lo: conv_vec(&prep.box_lo)?,
            box_hi: conv_vec(&prep.box_hi)?,
        },
        resid,
    ))
}

fn recurse<T: Coord, F: FnMut(&[T])>(
    c: &Converted<T>,
    level: usize,
    point: &mut Vec<T>,
    resid: &mut Vec<T>,
    visit: &mut F,
) {
    if level == c.dim {
        visit(point);
        return;
    }
    let mut lo = c.box_lo[level].clone();
    let mut hi = c.box_hi[level].clone();
    for &f in &c.facets_at[level] {
        let a = &c.coeffs[f][level];
        let rem = resid[f].sub_ref(&c.tail_floor[f][level + 1]);
        if a.is_positive() {
            let bound = rem.div_floor(a);
            if bound < hi {
                hi = bound;
            }
        } else {
            let bound = rem.div_ceil(a);
            if bound > lo {
                lo = bound;
            }
        }
    }
    if lo > hi {
        return;
    }
    // enter the interval: shift residuals to the low end, then step by one
    for &f in &c.facets_at[level] {
        let delta = c.coeffs[f][level].mul_ref(&lo);
        resid[f] = resid[f].sub_ref(&delta);
    }
    let mut val = lo.clone();
    loop {
        point.push(val.clone());
        recurse(c, level + 1, point, resid, visit);
        point.pop();
        if val == hi {
            break;
        }
        val.incr();
        for &f in &c.facets_at[level] {
            resid[f] = resid[f].sub_ref(&c.coeffs[f][level]);
        }
    }
    // restore residuals
    for &f in &c.facets_at[level] {
        let delta = c.coeffs[f][level].mul_ref(&val);
        resid[f] = resid[f].clone() + delta;
    }
}

/// Visits the lattice points of the `dilate`-th dilate of the polytope with
/// facet system `hrep` and point set `points` (generators or vertices; any
/// set whose hull is the polytope). Points are visited in lexicographic
/// order, constant memory per point.
pub(crate) fn visit_dilate<F: FnMut(&[BigInt])>(
    hrep: &HRep,
    points: &[Vec<BigRational>],
    dilate: u64,
    mut visit: F,
) -> Result<()> {
    let prep = prepare(hrep, points, dilate)?;
    if fits_i128(&prep) {
        let (conv, mut resid) = convert::<i128>(&prep).expect("audited conversion");
        let mut point = Vec::with_capacity(prep.dim);
        let mut adapter = |p: &[i128]| {
            let big: Vec<BigInt> = p.iter().map(|x| BigInt::from(*x)).collect();
            visit(&big);
        };
        recurse(&conv, 0, &mut point, &mut resid, &mut adapter);
    } else {
        let (conv, mut resid) = convert::<BigInt>(&prep).expect("BigInt conversion is total");
        let mut point = Vec::with_capacity(prep.dim);
        let mut adapter = |p: &[BigInt]| visit(p);
        recurse(&conv, 0, &mut point, &mut resid, &mut adapter);
    }
    Ok(())
}

/// Exact count of `|dilate·P ∩ Z^d|` without materializing the points.
pub(crate) fn count_dilate(
    hrep: &HRep,
    points: &[Vec<BigRational>],
    dilate: u64,
) -> Result<u64> {
    let prep = prepare(hrep, points, dilate)?;
    let mut count = 0u64;
    if fits_i128(&prep) {
        let (conv, mut resid) = convert::<i128>(&prep).expect("audited conversion");
        let mut point = Vec::with_capacity(prep.dim);
        recurse(&conv, 0, &mut point, &mut resid, &mut |_: &[i128]| {
            count += 1
        });
    } else {
        let (conv, mut resid) = convert::<BigInt>(&prep).expect("BigInt conversion is total");
        let mut point = Vec::with_capacity(prep.dim);
        recurse(&conv, 0, &mut point, &mut resid, &mut |_: &[BigInt]| {
            count += 1
        });
    }
    Ok(count)
}
