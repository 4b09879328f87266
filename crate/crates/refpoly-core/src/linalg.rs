//! Small exact linear-algebra helpers over BigInt / BigRational.
//!
//! Everything here works on tiny dense matrices (dimensions ≤ ~15 on one
//! side), so plain fraction or gcd based elimination is the right tool.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Divides a vector by the gcd of its entries, in place. The zero vector is
/// left unchanged. The sign is not normalized here; callers orient vectors
/// themselves.
pub fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
}

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

/// Rank of an integer matrix via rational Gaussian elimination.
pub fn rank_int(rows: &[Vec<BigInt>]) -> usize {
    let rat: Vec<Vec<BigRational>> = rows.iter().map(|r| to_rational(r)).collect();
    rank_rat(rat)
}

/// Rank of a rational matrix; consumes the rows as scratch space.
pub fn rank_rat(mut rows: Vec<Vec<BigRational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &inv;
            for c in col..cols {
                let sub = &factor * &rows[rank][c];
                rows[r][c] -= sub;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Greedy selection of `count` linearly independent rows, returned as indices
/// into `rows` in increasing order. Returns None if the matrix has rank
/// below `count`.
pub fn independent_rows(rows: &[Vec<BigInt>], count: usize) -> Option<Vec<usize>> {
    if count == 0 {
        return Some(Vec::new());
    }
    let cols = rows.first()?.len();
    let mut basis: Vec<Vec<BigRational>> = Vec::with_capacity(count);
    let mut chosen = Vec::with_capacity(count);
    for (idx, row) in rows.iter().enumerate() {
        let mut cand = to_rational(row);
        // reduce against the current echelonized basis
        for b in &basis {
            let lead = b.iter().position(|x| !x.is_zero()).unwrap();
            if !cand[lead].is_zero() {
                let factor = &cand[lead] / &b[lead];
                for c in 0..cols {
                    let sub = &factor * &b[c];
                    cand[c] -= sub;
                }
            }
        }
        if cand.iter().any(|x| !x.is_zero()) {
            basis.push(cand);
            // keep basis rows echelonized against each other lazily: sort by leading index
            basis.sort_by_key(|b| b.iter().position(|x| !x.is_zero()).unwrap());
            chosen.push(idx);
            if chosen.len() == count {
                return Some(chosen);
            }
        }
    }
    None
}

/// Solves the square system `m · x = rhs` over the rationals.
/// Returns None when `m` is singular.
pub fn solve_square(m: &[Vec<BigInt>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n) && rhs.len() == n);
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| to_rational(r)).collect();
    let mut b: Vec<BigRational> = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &inv;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
            let sub = &factor * &b[col];
            b[r] -= sub;
        }
    }
    Some(
        (0..n)
            .map(|i| &b[i] / &a[i][i])
            .collect(),
    )
}

/// Basis of the integer kernel `{u : A·u = 0}` of an integer matrix, via
/// unimodular column reduction. The kernel of an integer matrix is a
/// saturated lattice, so the returned vectors generate it exactly.
pub fn integer_kernel(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if cols == 0 {
        return Vec::new();
    }
    // work on column-major copies of A and the unimodular transform U
    let mut acols: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j].clone()).collect())
        .collect();
    let mut ucols: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| {
            let mut e = vec![BigInt::zero(); cols];
            e[j] = BigInt::one();
            e
        })
        .collect();

    let mut pivot_col = 0usize;
    for row in 0..rows {
        if pivot_col == cols {
            break;
        }
        // Euclidean reduction among columns pivot_col.. on this row until at
        // most one nonzero entry remains.
        loop {
            let mut best: Option<usize> = None;
            for j in pivot_col..cols {
                if !acols[j][row].is_zero() {
                    best = match best {
                        None => Some(j),
                        Some(b) if acols[j][row].abs() < acols[b][row].abs() => Some(j),
                        other => other,
                    };
                }
            }
            let Some(b) = best else { break };
            let mut others = false;
            for j in pivot_col..cols {
                if j == b || acols[j][row].is_zero() {
                    continue;
                }
                others = true;
                let q = div_nearest(&acols[j][row], &acols[b][row]);
                if !q.is_zero() {
                    for i in 0..rows {
                        let sub = &q * &acols[b][i];
                        acols[j][i] -= sub;
                    }
                    for i in 0..cols {
                        let sub = &q * &ucols[b][i];
                        ucols[j][i] -= sub;
                    }
                }
            }
            if !others {
                acols.swap(pivot_col, b);
                ucols.swap(pivot_col, b);
                pivot_col += 1;
                break;
            }
        }
    }

    (pivot_col..cols)
        .filter(|&j| acols[j].iter().all(|x| x.is_zero()))
        .map(|j| ucols[j].clone())
        .collect()
}

// round-to-nearest quotient; keeps entries small during column reduction
fn div_nearest(lhs: &BigInt, rhs: &BigInt) -> BigInt {
    let (q, r) = lhs.div_rem(rhs);
    if BigInt::from(2) * r.abs() > rhs.abs() {
        if r.sign() == rhs.sign() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}
