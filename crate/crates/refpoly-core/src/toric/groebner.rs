//! Binomial Buchberger machinery for toric ideals.
//!
//! Toric ideals are generated by pure difference binomials x^u - x^v, and
//! every S-polynomial and reduction stays in that class, so no field
//! coefficients ever materialize. Generators come from an integer kernel
//! basis of the homogenized configuration matrix and are saturated variable
//! by variable (graded reverse-lex with that variable cheapest, dividing it
//! out of every basis element to a fixed point) before the final reduced
//! basis is computed in the requested order.

use std::cmp::Ordering;

use num::{BigInt, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::linalg;
use crate::{Error, Result};

/// Exponent vector of a monomial; one entry per configuration column.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(vars: usize) -> Self {
        Monomial {
            exponents: vec![0; vars],
        }
    }

    pub fn variable(vars: usize, v: usize) -> Self {
        let mut e = vec![0; vars];
        e[v] = 1;
        Monomial { exponents: e }
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// self / other; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.exponents.len()))?;
        for e in &self.exponents {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

/// Graded reverse-lexicographic order given by an explicit variable ranking
/// (`vars_desc[0]` is the largest variable, the last entry the smallest).
#[derive(Clone, Debug)]
pub struct MonomialOrder {
    vars_desc: Vec<usize>,
}

impl MonomialOrder {
    /// Grevlex with the natural ranking x_0 > x_1 > ... > x_{n-1}.
    pub fn grevlex(vars: usize) -> Self {
        MonomialOrder {
            vars_desc: (0..vars).collect(),
        }
    }

    /// Grevlex with an explicit largest-to-smallest variable listing.
    pub fn with_ranking(vars_desc: Vec<usize>) -> Self {
        MonomialOrder { vars_desc }
    }

    /// Natural ranking except that `cheapest` is moved to the end.
    pub fn grevlex_with_cheapest(vars: usize, cheapest: usize) -> Self {
        let mut ranking: Vec<usize> = (0..vars).filter(|&v| v != cheapest).collect();
        ranking.push(cheapest);
        MonomialOrder { vars_desc: ranking }
    }

    pub fn vars(&self) -> usize {
        self.vars_desc.len()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.vars_desc
    }

    /// Total order: degree first, ties broken at the rightmost (smallest)
    /// variable where the exponents differ — more of a small variable makes
    /// a monomial smaller.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return da.cmp(&db);
        }
        for &v in self.vars_desc.iter().rev() {
            let (ea, eb) = (a.exponents[v], b.exponents[v]);
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }
}

/// Pure difference binomial `lead - trail` with `lead` strictly larger in
/// the governing order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    /// Orders the pair under `order`; None when the two sides coincide.
    pub fn oriented(a: Monomial, b: Monomial, order: &MonomialOrder) -> Option<Binomial> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }
}

/// Fully reduces the monomial pair `(a, b)` modulo `basis`; returns the
/// oriented nonzero result or None when it reduces to zero.
fn reduce(
    mut a: Monomial,
    mut b: Monomial,
    basis: &[Binomial],
    order: &MonomialOrder,
    skip: Option<usize>,
) -> Option<Binomial> {
    let reduce_side = |m: &mut Monomial| loop {
        let mut changed = false;
        for (i, g) in basis.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            if g.lead.divides(m) {
                *m = m.div(&g.lead).mul(&g.trail);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    };
    reduce_side(&mut a);
    reduce_side(&mut b);
    Binomial::oriented(a, b, order)
}

/// Buchberger with the normal selection strategy (lowest lcm degree first,
/// then the order on lcms, then pair indices) and the coprime-lead skip.
fn buchberger(generators: Vec<Binomial>, order: &MonomialOrder) -> Vec<Binomial> {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in generators {
        if let Some(r) = reduce(g.lead, g.trail, &basis, order, None) {
            basis.push(r);
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: pick the pair with the smallest lcm
        let mut best = 0;
        let mut best_lcm = basis[pairs[0].0].lead.lcm(&basis[pairs[0].1].lead);
        for (idx, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let lcm = basis[i].lead.lcm(&basis[j].lead);
            if order.cmp(&lcm, &best_lcm) == Ordering::Less {
                best_lcm = lcm;
                best = idx;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        if basis[i].lead.is_coprime_with(&basis[j].lead) {
            continue;
        }
        let lcm = basis[i].lead.lcm(&basis[j].lead);
        let s1 = lcm.div(&basis[i].lead).mul(&basis[i].trail);
        let s2 = lcm.div(&basis[j].lead).mul(&basis[j].trail);
        if let Some(r) = reduce(s1, s2, &basis, order, None) {
            let new_idx = basis.len();
            basis.push(r);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
    }

    interreduce(basis, order)
}

/// Minimal, fully reduced, deterministically sorted basis.
fn interreduce(mut basis: Vec<Binomial>, order: &MonomialOrder) -> Vec<Binomial> {
    // minimality: drop elements whose lead is divisible by another lead
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && basis[j].lead.divides(&basis[i].lead)
                && (basis[j].lead != basis[i].lead || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Binomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(b, k)| k.then_some(b))
        .collect();

    // tail reduction against the minimal set
    let mut reduced: Vec<Binomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let b = &minimal[i];
        let r = reduce(b.lead.clone(), b.trail.clone(), &minimal, order, Some(i))
            .expect("minimal basis elements cannot reduce to zero");
        reduced.push(r);
    }
    reduced.sort_by(|a, b| {
        a.lead
            .degree()
            .cmp(&b.lead.degree())
            .then_with(|| order.cmp(&a.lead, &b.lead))
    });
    reduced
}

/// Divides the variable `v` out of every basis element as far as possible.
/// Returns true when anything changed.
fn divide_out_variable(basis: &mut [Binomial], v: usize) -> bool {
    let mut changed = false;
    for b in basis.iter_mut() {
        let common = b.lead.exponents[v].min(b.trail.exponents[v]);
        if common > 0 {
            b.lead.exponents[v] -= common;
            b.trail.exponents[v] -= common;
            changed = true;
        }
    }
    changed
}

/// Reduced Gröbner basis of the toric ideal of the homogenized matrix
/// `matrix` (already including the homogenizing row) under `order`:
/// integer kernel basis, then saturation by every variable, then the final
/// reduced basis.
pub(crate) fn toric_groebner_of_matrix(
    matrix: &[Vec<BigInt>],
    order: &MonomialOrder,
) -> Result<Vec<Binomial>> {
    let vars = order.vars();
    let kernel = linalg::integer_kernel(matrix);
    let mut gens: Vec<Binomial> = Vec::new();
    for u in kernel {
        let mut plus = vec![0u32; vars];
        let mut minus = vec![0u32; vars];
        for (k, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = u32::try_from(c.magnitude().clone())
                .map_err(|_| Error::Capacity("kernel exponent exceeds u32".to_string()))?;
            if c > &BigInt::zero() {
                plus[k] = mag;
            } else {
                minus[k] = mag;
            }
        }
        if let Some(b) = Binomial::oriented(Monomial::new(plus), Monomial::new(minus), order) {
            gens.push(b);
        }
    }
    if gens.is_empty() {
        return Ok(Vec::new());
    }

    // saturation: one cheapest-variable Gröbner pass per variable, dividing
    // the variable out to a fixed point
    for v in 0..vars {
        let sat_order = MonomialOrder::grevlex_with_cheapest(vars, v);
        loop {
            let mut gb = buchberger(
                gens.iter()
                    .filter_map(|b| {
                        Binomial::oriented(b.lead.clone(), b.trail.clone(), &sat_order)
                    })
                    .collect(),
                &sat_order,
            );
            let changed = divide_out_variable(&mut gb, v);
            gens = gb
                .into_iter()
                .filter(|b| b.lead != b.trail)
                .collect();
            if !changed {
                break;
            }
        }
    }

    Ok(buchberger(
        gens.iter()
            .filter_map(|b| Binomial::oriented(b.lead.clone(), b.trail.clone(), order))
            .collect(),
        order,
    ))
}

/// Leading monomials of a reduced basis — the minimal generators of the
/// initial ideal — sorted under `order`.
pub fn initial_ideal_min_gens(gb: &[Binomial], order: &MonomialOrder) -> Vec<Monomial> {
    let mut leads: Vec<Monomial> = gb.iter().map(|b| b.lead.clone()).collect();
    leads.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| order.cmp(a, b))
    });
    leads
}

/// True when every monomial has all exponents ≤ 1.
pub fn is_squarefree(monomials: &[Monomial]) -> bool {
    monomials.iter().all(|m| m.is_squarefree())
}

/// Normal form of an arbitrary binomial modulo a Gröbner basis; zero is
/// represented as None.
pub fn normal_form(
    a: &Monomial,
    b: &Monomial,
    gb: &[Binomial],
    order: &MonomialOrder,
) -> Option<Binomial> {
    reduce(a.clone(), b.clone(), gb, order, None)
}

/// Buchberger criterion re-assertion for a claimed Gröbner basis: every
/// S-binomial reduces to zero.
pub fn all_s_pairs_reduce(gb: &[Binomial], order: &MonomialOrder) -> bool {
    for i in 0..gb.len() {
        for j in i + 1..gb.len() {
            let lcm = gb[i].lead.lcm(&gb[j].lead);
            let s1 = lcm.div(&gb[i].lead).mul(&gb[i].trail);
            let s2 = lcm.div(&gb[j].lead).mul(&gb[j].trail);
            if reduce(s1, s2, gb, order, None).is_some() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let ord = MonomialOrder::grevlex(3);
        // x1 > x2 > x3; equal-degree ties at the smallest variable
        assert_eq!(ord.cmp(&mono(&[1, 0, 0]), &mono(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&mono(&[0, 2, 0]), &mono(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&mono(&[2, 0, 0]), &mono(&[0, 0, 1])), Ordering::Greater); // degree wins
        assert_eq!(ord.cmp(&mono(&[1, 1, 0]), &mono(&[1, 1, 0])), Ordering::Equal);
    }

    #[test]
    fn grevlex_with_moved_cheapest() {
        // ranking x2 > x3 > x1 (variable 0 cheapest)
        let ord = MonomialOrder::grevlex_with_cheapest(3, 0);
        // x1·x3 vs x2²: rightmost difference is at x1 -> more x1 = smaller
        assert_eq!(ord.cmp(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn monomial_curve_basis() {
        // columns 0,1,2 homogenized
        let matrix: Vec<Vec<BigInt>> = vec![
            vec![0.into(), 1.into(), 2.into()],
            vec![1.into(), 1.into(), 1.into()],
        ];
        let ord = MonomialOrder::grevlex(3);
        let gb = toric_groebner_of_matrix(&matrix, &ord).unwrap();
        assert_eq!(gb.len(), 1);
        // under the natural grevlex (x3 smallest) the square leads
        assert_eq!(gb[0].lead, mono(&[0, 2, 0]));
        assert_eq!(gb[0].trail, mono(&[1, 0, 1]));
        assert!(!is_squarefree(&initial_ideal_min_gens(&gb, &ord)));
        assert!(all_s_pairs_reduce(&gb, &ord));
    }

    #[test]
    fn independent_columns_give_zero_ideal() {
        let matrix: Vec<Vec<BigInt>> = vec![
            vec![1.into(), 0.into(), 0.into()],
            vec![0.into(), 1.into(), 0.into()],
            vec![1.into(), 1.into(), 1.into()],
        ];
        let ord = MonomialOrder::grevlex(3);
        assert!(toric_groebner_of_matrix(&matrix, &ord).unwrap().is_empty());
    }

    #[test]
    fn twisted_cubic_needs_saturation_path() {
        // columns 0,1,2,3 on a line: ideal of the twisted cubic curve's
        // coordinate ring; reduced grevlex basis has three quadrics
        let matrix: Vec<Vec<BigInt>> = vec![
            vec![0.into(), 1.into(), 2.into(), 3.into()],
            vec![1.into(), 1.into(), 1.into(), 1.into()],
        ];
        let ord = MonomialOrder::grevlex(4);
        let gb = toric_groebner_of_matrix(&matrix, &ord).unwrap();
        assert_eq!(gb.len(), 3);
        assert!(all_s_pairs_reduce(&gb, &ord));
        // x2² - x1x3, x2x3 - x1x4, x3² - x2x4
        let leads: Vec<Monomial> = initial_ideal_min_gens(&gb, &ord);
        assert!(leads.contains(&mono(&[0, 2, 0, 0])));
        assert!(leads.contains(&mono(&[0, 1, 1, 0])));
        assert!(leads.contains(&mono(&[0, 0, 2, 0])));
    }

    #[test]
    fn fiber_oracle_tiny_configs() {
        // every equal-image monomial pair up to degree 6 must reduce to zero
        let configs: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![0], vec![1], vec![2]],
            vec![vec![2, 0], vec![1, 1], vec![0, 2], vec![0, 0]],
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![0, 0]],
        ];
        for cols in configs {
            let rows = cols[0].len();
            let mut matrix: Vec<Vec<BigInt>> = (0..rows)
                .map(|r| cols.iter().map(|c| BigInt::from(c[r])).collect())
                .collect();
            matrix.push(vec![BigInt::from(1); cols.len()]);
            let ord = MonomialOrder::grevlex(cols.len());
            let gb = toric_groebner_of_matrix(&matrix, &ord).unwrap();
            assert!(all_s_pairs_reduce(&gb, &ord));

            // enumerate all monomials of degree ≤ 6 and bucket by image
            let mut by_image: std::collections::HashMap<Vec<i64>, Vec<Monomial>> =
                std::collections::HashMap::new();
            let nvars = cols.len();
            let mut stack = vec![(Monomial::one(nvars), 0usize)];
            while let Some((m, from)) = stack.pop() {
                let image: Vec<i64> = (0..rows)
                    .map(|r| {
                        m.exponents
                            .iter()
                            .zip(&cols)
                            .map(|(&e, c)| e as i64 * c[r])
                            .sum()
                    })
                    .chain(std::iter::once(m.degree() as i64))
                    .collect();
                by_image.entry(image).or_default().push(m.clone());
                if m.degree() < 6 {
                    for v in from..nvars {
                        let mut e = m.exponents.clone();
                        e[v] += 1;
                        stack.push((Monomial::new(e), v));
                    }
                }
            }
            for (_, bucket) in by_image {
                for i in 0..bucket.len() {
                    for j in i + 1..bucket.len() {
                        assert!(
                            normal_form(&bucket[i], &bucket[j], &gb, &ord).is_none(),
                            "binomial {:?} - {:?} did not reduce to zero",
                            bucket[i],
                            bucket[j]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_basis_property() {
        let matrix: Vec<Vec<BigInt>> = vec![
            vec![0.into(), 1.into(), 2.into(), 3.into()],
            vec![1.into(), 1.into(), 1.into(), 1.into()],
        ];
        let ord = MonomialOrder::grevlex(4);
        let gb = toric_groebner_of_matrix(&matrix, &ord).unwrap();
        for (i, g) in gb.iter().enumerate() {
            for (j, h) in gb.iter().enumerate() {
                if i == j {
                    continue;
                }
                assert!(!h.lead.divides(&g.lead), "lead divisibility in reduced basis");
                assert!(!h.lead.divides(&g.trail), "unreduced trail in reduced basis");
            }
        }
    }
}
