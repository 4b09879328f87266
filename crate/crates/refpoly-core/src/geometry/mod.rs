//! Exact rational convex geometry: hulls, facets, reflexivity, duality, and
//! lattice-point enumeration. All arithmetic is arbitrary-precision integer
//! or rational; there is no floating point anywhere in this crate.

mod dd;
mod enumerate;

use std::collections::HashSet;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::linalg;
use crate::{Error, Result};

/// A point of the integer lattice in some ambient dimension. Serializes as
/// an array of decimal strings so arbitrary precision survives JSON.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticePoint(pub Vec<BigInt>);

impl serde::Serialize for LatticePoint {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl LatticePoint {
    pub fn from_i64(coords: &[i64]) -> Self {
        LatticePoint(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![BigInt::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut c = vec![BigInt::zero(); dim];
        c[axis] = BigInt::one();
        LatticePoint(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> Self {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        linalg::to_rational(&self.0)
    }
}

/// V-representation: a duplicate-free list of integer points whose convex
/// hull is the polytope (generators, not necessarily vertices).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VRep {
    pub ambient_dim: usize,
    pub points: Vec<LatticePoint>,
}

impl VRep {
    pub fn new(ambient_dim: usize, points: Vec<LatticePoint>) -> Result<VRep> {
        let mut seen = HashSet::new();
        for p in &points {
            if p.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    left: ambient_dim,
                    right: p.dim(),
                });
            }
            if !seen.insert(p.clone()) {
                return Err(Error::Inconsistency(
                    "duplicate point in V-representation".to_string(),
                ));
            }
        }
        Ok(VRep {
            ambient_dim,
            points,
        })
    }

    pub fn from_rows(ambient_dim: usize, rows: &[&[i64]]) -> VRep {
        VRep::new(
            ambient_dim,
            rows.iter().map(|r| LatticePoint::from_i64(r)).collect(),
        )
        .expect("test rows must be duplicate-free")
    }
}

/// One facet inequality `normal · x ≤ offset` with a primitive normal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Facet {
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        self.normal
            .iter()
            .zip(point)
            .map(|(a, x)| BigRational::from_integer(a.clone()) * x)
            .sum()
    }

    pub fn eval_int(&self, point: &[BigInt]) -> BigInt {
        self.normal.iter().zip(point).map(|(a, x)| a * x).sum()
    }
}

/// H-representation: irredundant facet list of a full-dimensional polytope.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HRep {
    pub ambient_dim: usize,
    pub facets: Vec<Facet>,
}

/// Affine dimension of the hull of a nonempty point set, by exact rank.
pub fn affine_dimension(v: &VRep) -> usize {
    if v.points.is_empty() {
        return 0;
    }
    let base = &v.points[0].0;
    let diffs: Vec<Vec<BigInt>> = v.points[1..]
        .iter()
        .map(|p| p.0.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank_int(&diffs)
}

/// Exact convex hull of a full-dimensional point set: extreme points plus
/// the irredundant facet system with primitive integer normals, facets
/// sorted by (normal, offset).
pub fn convex_hull(v: &VRep) -> Result<(VRep, HRep)> {
    let p = Polytope::from_points(v.clone())?;
    Ok((p.vertices, p.hrep))
}

/// Membership of a rational point in the closed polytope.
pub fn contains(h: &HRep, point: &[BigRational]) -> bool {
    h.facets
        .iter()
        .all(|f| f.eval(point) <= BigRational::from_integer(f.offset.clone()))
}

/// Membership in the topological interior.
pub fn strictly_contains(h: &HRep, point: &[BigRational]) -> bool {
    h.facets
        .iter()
        .all(|f| f.eval(point) < BigRational::from_integer(f.offset.clone()))
}

/// Lattice points of the n-th dilate of the polytope described by `h`, in
/// lexicographic order. The bounding data is recovered from the facet system
/// by exact vertex enumeration; an unbounded system is an error.
pub fn lattice_points(h: &HRep, dilate: u64) -> Result<Vec<LatticePoint>> {
    let verts = vertices_of_hrep(h)?;
    let mut out = Vec::new();
    enumerate::visit_dilate(h, &verts, dilate, |p| {
        out.push(LatticePoint(p.to_vec()));
    })?;
    Ok(out)
}

/// Rational vertices of the (bounded) polyhedron `h`, via the same
/// double-description engine run on the homogenization cone.
pub(crate) fn vertices_of_hrep(h: &HRep) -> Result<Vec<Vec<BigRational>>> {
    let d = h.ambient_dim;
    let mut rows: Vec<Vec<BigInt>> = h
        .facets
        .iter()
        .map(|f| {
            let mut r = f.normal.clone();
            r.push(-&f.offset);
            r
        })
        .collect();
    let mut last = vec![BigInt::zero(); d + 1];
    last[d] = -BigInt::one();
    rows.push(last);
    let rays = dd::extreme_rays(&rows, d + 1).map_err(|_| Error::Unbounded)?;
    let mut verts = Vec::with_capacity(rays.len());
    for ray in rays {
        let t = ray[d].clone();
        if t.is_zero() {
            return Err(Error::Unbounded);
        }
        debug_assert!(t.is_positive());
        let tr = BigRational::from_integer(t);
        verts.push(
            ray[..d]
                .iter()
                .map(|c| BigRational::from_integer(c.clone()) / &tr)
                .collect(),
        );
    }
    Ok(verts)
}

/// A full-dimensional lattice polytope carrying both representations.
#[derive(Clone, Debug)]
pub struct Polytope {
    pub generators: VRep,
    pub vertices: VRep,
    pub hrep: HRep,
}

impl Polytope {
    /// Computes the hull of a full-dimensional generator set.
    pub fn from_points(v: VRep) -> Result<Polytope> {
        if v.points.is_empty() {
            return Err(Error::NotFullDimensional {
                found: 0,
                ambient: v.ambient_dim,
            });
        }
        let d = v.ambient_dim;
        let adim = affine_dimension(&v);
        if adim != d {
            return Err(Error::NotFullDimensional {
                found: adim,
                ambient: d,
            });
        }

        // facets = extreme rays of the cone of valid inequalities (a, -b)
        let rows: Vec<Vec<BigInt>> = v
            .points
            .iter()
            .map(|p| {
                let mut r = p.0.clone();
                r.push(BigInt::one());
                r
            })
            .collect();
        let rays = dd::extreme_rays(&rows, d + 1)?;
        let mut facets: Vec<Facet> = rays
            .into_iter()
            .map(|ray| {
                let offset = -ray[d].clone();
                Facet {
                    normal: ray[..d].to_vec(),
                    offset,
                }
            })
            .collect();
        facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
        let hrep = HRep {
            ambient_dim: d,
            facets,
        };

        // vertices: generators whose tight facet normals span R^d
        let mut vertices = Vec::new();
        for p in &v.points {
            let tight: Vec<Vec<BigInt>> = hrep
                .facets
                .iter()
                .filter(|f| f.eval_int(&p.0) == f.offset)
                .map(|f| f.normal.clone())
                .collect();
            if tight.len() >= d && linalg::rank_int(&tight) == d {
                vertices.push(p.clone());
            }
        }
        let vertices = VRep::new(d, vertices)?;

        Ok(Polytope {
            generators: v,
            vertices,
            hrep,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.hrep.ambient_dim
    }

    pub fn facet_count(&self) -> usize {
        self.hrep.facets.len()
    }

    /// Reflexive ⟺ with primitive normals every facet offset is exactly 1
    /// (which also forces the origin to be interior).
    pub fn is_reflexive(&self) -> bool {
        self.hrep.facets.iter().all(|f| f.offset.is_one())
    }

    pub fn contains(&self, point: &[BigRational]) -> bool {
        contains(&self.hrep, point)
    }

    pub fn strictly_contains(&self, point: &[BigRational]) -> bool {
        strictly_contains(&self.hrep, point)
    }

    pub fn contains_lattice_point(&self, point: &LatticePoint) -> bool {
        self.hrep
            .facets
            .iter()
            .all(|f| f.eval_int(&point.0) <= f.offset)
    }

    pub fn origin_is_interior(&self) -> bool {
        self.hrep.facets.iter().all(|f| f.offset.is_positive())
    }

    /// Vertex set of the dual polytope `{x : ⟨x,y⟩ ≤ 1 ∀ y ∈ P}` as rational
    /// points `normal/offset`, one per facet. Requires the origin interior.
    pub fn dual_polytope(&self) -> Result<Vec<Vec<BigRational>>> {
        if !self.origin_is_interior() {
            return Err(Error::OriginNotInterior);
        }
        Ok(self
            .hrep
            .facets
            .iter()
            .map(|f| {
                let b = BigRational::from_integer(f.offset.clone());
                f.normal
                    .iter()
                    .map(|a| BigRational::from_integer(a.clone()) / &b)
                    .collect()
            })
            .collect())
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        let set: HashSet<&Vec<BigInt>> = self.vertices.points.iter().map(|p| &p.0).collect();
        self.vertices
            .points
            .iter()
            .all(|p| set.contains(&p.neg().0))
    }

    /// 2-level: every facet normal takes exactly two values on the vertex set.
    pub fn is_two_level(&self) -> bool {
        self.hrep.facets.iter().all(|f| {
            let values: HashSet<BigInt> = self
                .vertices
                .points
                .iter()
                .map(|p| f.eval_int(&p.0))
                .collect();
            values.len() == 2
        })
    }

    /// Streaming visit of the lattice points of the n-th dilate in
    /// lexicographic order.
    pub fn visit_lattice_points<F: FnMut(&[BigInt])>(&self, dilate: u64, visit: F) -> Result<()> {
        let pts: Vec<Vec<BigRational>> = self
            .generators
            .points
            .iter()
            .map(|p| p.to_rational())
            .collect();
        enumerate::visit_dilate(&self.hrep, &pts, dilate, visit)
    }

    pub fn lattice_points(&self, dilate: u64) -> Result<Vec<LatticePoint>> {
        let mut out = Vec::new();
        self.visit_lattice_points(dilate, |p| out.push(LatticePoint(p.to_vec())))?;
        Ok(out)
    }

    pub fn count_lattice_points(&self, dilate: u64) -> Result<u64> {
        let pts: Vec<Vec<BigRational>> = self
            .generators
            .points
            .iter()
            .map(|p| p.to_rational())
            .collect();
        enumerate::count_dilate(&self.hrep, &pts, dilate)
    }

    /// Test-facing soundness check of the computed hull.
    pub fn validate(&self) -> Result<()> {
        let d = self.ambient_dim();
        for p in &self.generators.points {
            if !self.contains_lattice_point(p) {
                return Err(Error::Inconsistency(format!(
                    "generator {:?} violates a facet",
                    p.0
                )));
            }
        }
        for f in &self.hrep.facets {
            let mut n = f.normal.clone();
            linalg::make_primitive(&mut n);
            if n != f.normal {
                return Err(Error::Inconsistency("non-primitive normal".to_string()));
            }
            // tight vertices must affinely span the facet hyperplane
            let tight: Vec<Vec<BigInt>> = self
                .vertices
                .points
                .iter()
                .filter(|p| f.eval_int(&p.0) == f.offset)
                .map(|p| {
                    let mut r = p.0.clone();
                    r.push(BigInt::one());
                    r
                })
                .collect();
            let rank = linalg::rank_int(&tight);
            if rank != d {
                return Err(Error::Inconsistency(format!(
                    "facet {:?} ≤ {} is tight on an affine rank {} set, expected {}",
                    f.normal, f.offset, rank, d
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn cross_polytope(d: usize) -> VRep {
        let mut pts = Vec::new();
        for i in 0..d {
            pts.push(LatticePoint::unit(d, i));
            pts.push(LatticePoint::unit(d, i).neg());
        }
        VRep::new(d, pts).unwrap()
    }

    #[test]
    fn affine_dimension_cases() {
        let v = VRep::from_rows(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(affine_dimension(&v), 2);
        let single = VRep::from_rows(3, &[&[5, 2, 1]]);
        assert_eq!(affine_dimension(&single), 0);
        let seg = VRep::from_rows(2, &[&[0, 0], &[2, 2]]);
        assert_eq!(affine_dimension(&seg), 1);
    }

    #[test]
    fn square_hull() {
        let v = VRep::from_rows(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let p = Polytope::from_points(v).unwrap();
        assert_eq!(p.vertices.points.len(), 4);
        assert_eq!(p.facet_count(), 4);
        p.validate().unwrap();
        assert!(!p.is_reflexive()); // origin on the boundary
        assert!(p.is_two_level());
    }

    #[test]
    fn interior_generator_is_not_a_vertex() {
        let v = VRep::from_rows(2, &[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1]]);
        let p = Polytope::from_points(v).unwrap();
        assert_eq!(p.vertices.points.len(), 4);
        assert!(!p
            .vertices
            .points
            .contains(&LatticePoint::from_i64(&[1, 1])));
    }

    #[test]
    fn cross_polytope_hull_and_dual() {
        let p = Polytope::from_points(cross_polytope(3)).unwrap();
        assert_eq!(p.facet_count(), 8);
        assert!(p.is_reflexive());
        assert!(p.is_centrally_symmetric());
        p.validate().unwrap();
        // dual is the cube with vertices {±1}^3
        let dual = p.dual_polytope().unwrap();
        assert_eq!(dual.len(), 8);
        assert!(dual.iter().all(|v| v.iter().all(|c| c.is_integer())));
        // duality involution: hull of the dual's vertices dualizes back
        let dv = VRep::new(
            3,
            dual.iter()
                .map(|v| LatticePoint(v.iter().map(|c| c.to_integer()).collect()))
                .collect(),
        )
        .unwrap();
        let cube = Polytope::from_points(dv).unwrap();
        assert!(cube.is_reflexive());
        let back = cube.dual_polytope().unwrap();
        let back_set: HashSet<Vec<BigInt>> = back
            .iter()
            .map(|v| v.iter().map(|c| c.to_integer()).collect())
            .collect();
        let orig: HashSet<Vec<BigInt>> =
            cross_polytope(3).points.into_iter().map(|p| p.0).collect();
        assert_eq!(back_set, orig);
    }

    #[test]
    fn containment() {
        let p = Polytope::from_points(cross_polytope(2)).unwrap();
        assert!(p.strictly_contains(&[rat(0), rat(0)]));
        assert!(p.contains(&[rat(1), rat(0)]));
        assert!(!p.strictly_contains(&[rat(1), rat(0)]));
        assert!(!p.contains(&[rat(1), rat(1)]));
    }

    #[test]
    fn degenerate_input_rejected() {
        let seg = VRep::from_rows(2, &[&[0, 0], &[1, 1]]);
        assert!(matches!(
            Polytope::from_points(seg),
            Err(Error::NotFullDimensional {
                found: 1,
                ambient: 2
            })
        ));
    }

    #[test]
    fn segment_lattice_points() {
        let v = VRep::from_rows(1, &[&[0], &[1]]);
        let p = Polytope::from_points(v).unwrap();
        let pts = p.lattice_points(3).unwrap();
        assert_eq!(
            pts,
            vec![
                LatticePoint::from_i64(&[0]),
                LatticePoint::from_i64(&[1]),
                LatticePoint::from_i64(&[2]),
                LatticePoint::from_i64(&[3]),
            ]
        );
        assert_eq!(p.count_lattice_points(3).unwrap(), 4);
    }

    #[test]
    fn lattice_points_from_hrep_only() {
        let p = Polytope::from_points(cross_polytope(2)).unwrap();
        let pts = lattice_points(&p.hrep, 2).unwrap();
        // |2·cross ∩ Z²| = 13: all |x|+|y| ≤ 2
        assert_eq!(pts.len(), 13);
        // lexicographic order
        let mut sorted = pts.clone();
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(pts, sorted);
    }

    #[test]
    fn unbounded_detected() {
        let h = HRep {
            ambient_dim: 2,
            facets: vec![
                Facet {
                    normal: vec![BigInt::from(-1), BigInt::zero()],
                    offset: BigInt::zero(),
                },
                Facet {
                    normal: vec![BigInt::zero(), BigInt::from(-1)],
                    offset: BigInt::zero(),
                },
            ],
        };
        assert!(matches!(lattice_points(&h, 1), Err(Error::Unbounded)));
    }

    #[test]
    fn hull_round_trip_same_facets() {
        let v = VRep::from_rows(
            3,
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
                &[1, 1, 1],
            ],
        );
        let p = Polytope::from_points(v).unwrap();
        let again = Polytope::from_points(p.vertices.clone()).unwrap();
        assert_eq!(p.hrep, again.hrep);
        assert_eq!(p.vertices, again.vertices);
    }

    #[test]
    fn brute_force_enumeration_oracle() {
        let polys = vec![
            Polytope::from_points(cross_polytope(3)).unwrap(),
            Polytope::from_points(VRep::from_rows(
                2,
                &[&[0, 0], &[3, 1], &[1, 3], &[-1, 2], &[2, -1]],
            ))
            .unwrap(),
            Polytope::from_points(VRep::from_rows(
                3,
                &[&[0, 0, 0], &[2, 0, 0], &[0, 3, 0], &[0, 0, 1], &[1, 1, 2]],
            ))
            .unwrap(),
        ];
        for p in &polys {
            for n in 1..=3u64 {
                let fast: Vec<Vec<i64>> = p
                    .lattice_points(n)
                    .unwrap()
                    .into_iter()
                    .map(|q| q.0.iter().map(|c| i64::try_from(c).unwrap()).collect())
                    .collect();
                let slow = brute_force_points(p, n);
                assert_eq!(fast, slow, "dilate {n}");
            }
        }
    }

    fn brute_force_points(p: &Polytope, n: u64) -> Vec<Vec<i64>> {
        let d = p.ambient_dim();
        let nn = BigInt::from(n);
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        for v in &p.vertices.points {
            for k in 0..d {
                let c = i64::try_from(&(&v.0[k] * &nn)).unwrap();
                lo[k] = lo[k].min(c);
                hi[k] = hi[k].max(c);
            }
        }
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'outer: loop {
            let big: Vec<BigInt> = cur.iter().map(|&c| BigInt::from(c)).collect();
            if p.hrep
                .facets
                .iter()
                .all(|f| f.eval_int(&big) <= &f.offset * &nn)
            {
                out.push(cur.clone());
            }
            for k in (0..d).rev() {
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    for j in k + 1..d {
                        cur[j] = lo[j];
                    }
                    continue 'outer;
                }
            }
            break;
        }
        out
    }
}
