//! Double-description core: extreme rays of a pointed polyhedral cone
//! `{w : row_i · w ≤ 0}` over exact integer arithmetic.
//!
//! Rays are kept as primitive integer vectors together with their tight-set
//! bitmask over the processed constraints; adjacency of rays uses the
//! combinatorial criterion (no third ray is tight on the common tight set),
//! which is exact for pointed cones.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::linalg;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
struct TightSet {
    words: Vec<u64>,
}

impl TightSet {
    fn new(constraints: usize) -> Self {
        TightSet {
            words: vec![0; constraints.div_ceil(64).max(1)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &Self) -> Self {
        TightSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn is_superset_of(&self, sub: &Self) -> bool {
        sub.words
            .iter()
            .zip(&self.words)
            .all(|(s, w)| s & w == *s)
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    coords: Vec<BigInt>,
    tight: TightSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of `{w ∈ R^k : rows[i]·w ≤ 0 ∀i}`, primitive, in a
/// deterministic order. Fails when the cone is not pointed (constraint
/// matrix rank below `k`).
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], k: usize) -> Result<Vec<Vec<BigInt>>> {
    let m = rows.len();
    let initial = linalg::independent_rows(rows, k)
        .ok_or_else(|| Error::Inconsistency("cone is not pointed".to_string()))?;

    // Simplicial start: rays r_j with L·r_j = -e_j over the chosen rows.
    let base: Vec<Vec<BigInt>> = initial.iter().map(|&i| rows[i].clone()).collect();
    let mut rays: Vec<Ray> = Vec::with_capacity(k);
    for j in 0..k {
        let mut rhs = vec![BigRational::zero(); k];
        rhs[j] = -BigRational::one();
        let sol = linalg::solve_square(&base, &rhs)
            .expect("initial rows are independent by construction");
        let coords = clear_denominators(&sol);
        let mut tight = TightSet::new(m);
        for (idx, &row) in initial.iter().enumerate() {
            if idx != j {
                tight.set(row);
            }
        }
        rays.push(Ray { coords, tight });
    }

    let mut is_initial = vec![false; m];
    for &i in &initial {
        is_initial[i] = true;
    }

    for c in 0..m {
        if is_initial[c] {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(&rows[c], &r.coords)).collect();
        let any_positive = values.iter().any(|v| v.is_positive());
        if !any_positive {
            for (ray, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    ray.tight.set(c);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut created: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].tight.intersection(&rays[n].tight);
                if common.len() + 2 < k {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(i, r)| {
                    i != p && i != n && r.tight.is_superset_of(&common)
                });
                if blocked {
                    continue;
                }
                // w = v_p·r_n − v_n·r_p is tight on c and stays in the cone
                let mut coords: Vec<BigInt> = rays[n]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(cn, cp)| &values[p] * cn - &values[n] * cp)
                    .collect();
                linalg::make_primitive(&mut coords);
                let mut tight = common;
                tight.set(c);
                created.push(Ray { coords, tight });
            }
        }

        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (ray, v) in rays.into_iter().zip(values) {
            if v.is_positive() {
                continue;
            }
            let mut ray = ray;
            if v.is_zero() {
                ray.tight.set(c);
            }
            kept.push(ray);
        }
        kept.extend(created);
        rays = kept;
    }

    Ok(rays.into_iter().map(|r| r.coords).collect())
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction.
fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = num::Integer::lcm(&lcm, x.denom());
    }
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    linalg::make_primitive(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rows(data: &[&[i64]]) -> Vec<Vec<BigInt>> {
        data.iter().map(|r| r.iter().map(|&x| bi(x)).collect()).collect()
    }

    fn normalize(mut rays: Vec<Vec<BigInt>>) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = rays
            .drain(..)
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn orthant_rays() {
        // {w : -w_i ≤ 0} = nonnegative orthant
        let r = extreme_rays(&rows(&[&[-1, 0], &[0, -1]]), 2).unwrap();
        assert_eq!(normalize(r), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn square_cone() {
        // facets of the square [0,1]^2 via lifted points (x,1):
        // points (0,0),(1,0),(0,1),(1,1)
        let r = extreme_rays(
            &rows(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]),
            3,
        )
        .unwrap();
        // four facets: x≥0, y≥0, x≤1, y≤1 encoded as (a, -b)
        assert_eq!(
            normalize(r),
            vec![
                vec![-1, 0, 0],
                vec![0, -1, 0],
                vec![0, 1, -1],
                vec![1, 0, -1],
            ]
        );
    }

    #[test]
    fn redundant_constraint_ignored() {
        // x ≤ 0 twice plus y ≤ 0
        let r = extreme_rays(&rows(&[&[1, 0], &[1, 0], &[0, 1]]), 2).unwrap();
        assert_eq!(normalize(r), vec![vec![-1, 0], vec![0, -1]]);
    }

    #[test]
    fn not_pointed_detected() {
        assert!(extreme_rays(&rows(&[&[1, 0]]), 2).is_err());
    }
}
