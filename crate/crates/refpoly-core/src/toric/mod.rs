//! Toric ideals of point configurations, harmony of configuration pairs,
//! the combined matrix of a pair, and the squarefree-initial-ideal
//! verification pipeline with its predicted generator set.

mod groebner;

pub use groebner::{
    all_s_pairs_reduce, initial_ideal_min_gens, is_squarefree, normal_form, Binomial, Monomial,
    MonomialOrder,
};

use std::collections::HashSet;

use num::BigInt;
use serde::Serialize;

use crate::constructions;
use crate::decomposition;
use crate::geometry::{Polytope, VRep};
use crate::graph::Graph;
use crate::{Error, Result};

/// An integer matrix whose columns index polynomial-ring variables; the
/// toric ideal lives over the columns homogenized by an extra row of ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointConfiguration {
    pub rows: usize,
    pub columns: Vec<Vec<i64>>,
}

impl PointConfiguration {
    pub fn new(rows: usize, columns: Vec<Vec<i64>>) -> Result<Self> {
        let mut seen = HashSet::new();
        for c in &columns {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    left: rows,
                    right: c.len(),
                });
            }
            if !seen.insert(c.clone()) {
                return Err(Error::Configuration(format!(
                    "duplicate column {c:?}; componentwise-comparable duplicates have no canonical order"
                )));
            }
        }
        Ok(PointConfiguration { rows, columns })
    }

    /// Stable-set configuration of a graph: one indicator column per stable
    /// set in canonical order, the zero column last.
    pub fn stable_sets(g: &Graph) -> Self {
        let d = g.vertex_count();
        let columns = g
            .stable_sets()
            .into_iter()
            .map(|w| {
                let mut col = vec![0i64; d];
                for v in w.vertices() {
                    col[v - 1] = 1;
                }
                col
            })
            .collect();
        PointConfiguration { rows: d, columns }
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|&x| x >= 0))
    }

    pub fn has_zero_last_column(&self) -> bool {
        self.columns
            .last()
            .is_some_and(|c| c.iter().all(|&x| x == 0))
    }

    fn contains_zero_column(&self) -> bool {
        self.columns.iter().any(|c| c.iter().all(|&x| x == 0))
    }

    /// Column support (1-based row indices of nonzero entries).
    fn support(&self, col: usize) -> HashSet<usize> {
        self.columns[col]
            .iter()
            .enumerate()
            .filter_map(|(i, &x)| (x != 0).then_some(i + 1))
            .collect()
    }

    /// Matrix with the homogenizing row of ones appended, as BigInt rows.
    pub fn homogenized(&self) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| self.columns.iter().map(|c| BigInt::from(c[r])).collect())
            .collect();
        rows.push(vec![BigInt::from(1); self.column_count()]);
        rows
    }

    /// Image of a monomial under the homogenized configuration map
    /// (configuration part plus total degree).
    pub fn image(&self, m: &Monomial) -> Vec<i64> {
        let mut out: Vec<i64> = (0..self.rows)
            .map(|r| {
                m.exponents
                    .iter()
                    .zip(&self.columns)
                    .map(|(&e, c)| e as i64 * c[r])
                    .sum()
            })
            .collect();
        out.push(m.degree() as i64);
        out
    }

    /// The polytope spanned by the columns.
    pub fn polytope(&self) -> Result<Polytope> {
        let points = self
            .columns
            .iter()
            .map(|c| crate::geometry::LatticePoint::from_i64(c))
            .collect();
        Polytope::from_points(VRep::new(self.rows, points)?)
    }
}

fn require_harmony_inputs(a: &PointConfiguration, b: &PointConfiguration) -> Result<()> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch {
            left: a.rows,
            right: b.rows,
        });
    }
    if !a.is_nonnegative() || !b.is_nonnegative() {
        return Err(Error::Configuration(
            "harmony is defined for nonnegative configurations".to_string(),
        ));
    }
    if !a.contains_zero_column() || !b.contains_zero_column() {
        return Err(Error::Configuration(
            "harmony requires the zero column in both configurations".to_string(),
        ));
    }
    Ok(())
}

/// Harmony of two nonnegative configurations: for every column pair the
/// positive part of the difference is a column of `a` and the negative part
/// a column of `b`.
pub fn harmony(a: &PointConfiguration, b: &PointConfiguration) -> Result<bool> {
    require_harmony_inputs(a, b)?;
    let acols: HashSet<&Vec<i64>> = a.columns.iter().collect();
    let bcols: HashSet<&Vec<i64>> = b.columns.iter().collect();
    for ca in &a.columns {
        for cb in &b.columns {
            let plus: Vec<i64> = ca.iter().zip(cb).map(|(x, y)| (x - y).max(0)).collect();
            let minus: Vec<i64> = ca.iter().zip(cb).map(|(x, y)| (y - x).max(0)).collect();
            if !acols.contains(&plus) || !bcols.contains(&minus) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The combined (d+1) × (m+n+1) matrix of a pair: the negated B columns with
/// last row -1, then the A columns with last row 1, then the zero column.
pub fn omega_matrix(a: &PointConfiguration, b: &PointConfiguration) -> Result<PointConfiguration> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch {
            left: a.rows,
            right: b.rows,
        });
    }
    let mut columns = Vec::with_capacity(a.column_count() + b.column_count() + 1);
    for cb in &b.columns {
        let mut col: Vec<i64> = cb.iter().map(|&x| -x).collect();
        col.push(-1);
        columns.push(col);
    }
    for ca in &a.columns {
        let mut col = ca.clone();
        col.push(1);
        columns.push(col);
    }
    columns.push(vec![0; a.rows + 1]);
    PointConfiguration::new(a.rows + 1, columns)
}

/// Validates the canonical column order of a nonnegative configuration
/// (no later column may dominate an earlier one componentwise) and returns
/// the grevlex order ranking variables by column position, so the zero
/// column is the smallest variable.
fn canonical_order_of(config: &PointConfiguration, name: &str) -> Result<MonomialOrder> {
    if !config.has_zero_last_column() {
        return Err(Error::OrderViolation(format!(
            "{name}: the zero column must come last"
        )));
    }
    let n = config.column_count();
    for i in 0..n {
        for j in i + 1..n {
            let dominated = config.columns[i]
                .iter()
                .zip(&config.columns[j])
                .all(|(x, y)| x <= y);
            if dominated {
                return Err(Error::OrderViolation(format!(
                    "{name}: column {} is componentwise ≤ column {}, so the position ranking is not compatible",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(MonomialOrder::grevlex(n))
}

/// The three orders of the combined construction: position-ranked grevlex
/// on A's ring and B's ring (zero column smallest), and the combined-ring
/// order ranking y_1 > .. > y_m > x_1 > .. > x_n > z, which is exactly the
/// column layout of [`omega_matrix`].
pub fn canonical_orders(
    a: &PointConfiguration,
    b: &PointConfiguration,
) -> Result<(MonomialOrder, MonomialOrder, MonomialOrder)> {
    let order_a = canonical_order_of(a, "first configuration")?;
    let order_b = canonical_order_of(b, "second configuration")?;
    let order_rev = MonomialOrder::grevlex(a.column_count() + b.column_count() + 1);
    Ok((order_a, order_b, order_rev))
}

/// Reduced Gröbner basis of the toric ideal of `config` under `order`.
pub fn toric_groebner(config: &PointConfiguration, order: &MonomialOrder) -> Result<Vec<Binomial>> {
    if order.vars() != config.column_count() {
        return Err(Error::DimensionMismatch {
            left: order.vars(),
            right: config.column_count(),
        });
    }
    groebner::toric_groebner_of_matrix(&config.homogenized(), order)
}

/// The predicted minimal generators of the combined initial ideal:
/// {x_n·y_m} ∪ {x_i·y_j : supports of a_i and b_j meet} ∪ M_A ∪ M_B,
/// where M_A and M_B are the minimal squarefree generators of the two
/// initial ideals under the canonical orders, embedded in the combined ring.
/// Errors if either initial ideal fails to be squarefree.
pub fn predicted_initial_gens(
    a: &PointConfiguration,
    b: &PointConfiguration,
) -> Result<Vec<Monomial>> {
    require_harmony_inputs(a, b)?;
    let (order_a, order_b, order_rev) = canonical_orders(a, b)?;
    let (n, m) = (a.column_count(), b.column_count());
    let vars = n + m + 1;

    let gens_a = initial_ideal_min_gens(&toric_groebner(a, &order_a)?, &order_a);
    if !is_squarefree(&gens_a) {
        return Err(Error::NotSquarefree(
            "initial ideal of the first configuration".to_string(),
        ));
    }
    let gens_b = initial_ideal_min_gens(&toric_groebner(b, &order_b)?, &order_b);
    if !is_squarefree(&gens_b) {
        return Err(Error::NotSquarefree(
            "initial ideal of the second configuration".to_string(),
        ));
    }

    // combined-ring variable layout: y_j -> j-1, x_i -> m+i-1, z -> m+n
    let mut out: Vec<Monomial> = Vec::new();
    let mut push_pair = |xi: usize, yj: usize, out: &mut Vec<Monomial>| {
        let mut e = vec![0u32; vars];
        e[m + xi - 1] += 1;
        e[yj - 1] += 1;
        out.push(Monomial::new(e));
    };
    push_pair(n, m, &mut out);
    for i in 1..=n {
        let sa = a.support(i - 1);
        if sa.is_empty() {
            continue;
        }
        for j in 1..=m {
            if !sa.is_disjoint(&b.support(j - 1)) {
                push_pair(i, j, &mut out);
            }
        }
    }
    for g in &gens_a {
        let mut e = vec![0u32; vars];
        for (i, &x) in g.exponents.iter().enumerate() {
            e[m + i] = x;
        }
        out.push(Monomial::new(e));
    }
    for g in &gens_b {
        let mut e = vec![0u32; vars];
        for (j, &x) in g.exponents.iter().enumerate() {
            e[j] = x;
        }
        out.push(Monomial::new(e));
    }
    out.sort_by(|p, q| {
        p.degree()
            .cmp(&q.degree())
            .then_with(|| order_rev.cmp(p, q))
    });
    out.dedup();
    Ok(out)
}

/// Geometric compressedness of the polytope spanned by a set of lattice
/// points: delegates to the 2-level test. For configurations whose columns
/// are exactly the lattice points of a (0,1)-polytope this coincides with
/// squarefreeness of the initial ideal under every reverse-lex order.
pub fn is_compressed_geometric(v: &VRep) -> Result<bool> {
    Ok(Polytope::from_points(v.clone())?.is_two_level())
}

/// Brute-force compressedness oracle: checks squarefreeness of the initial
/// ideal under every variable permutation. Capped at 6 columns.
pub fn is_compressed_all_orders(config: &PointConfiguration) -> Result<bool> {
    let n = config.column_count();
    if n > 6 {
        return Err(Error::Capacity(format!(
            "all-orders compressedness check capped at 6 columns, got {n}"
        )));
    }
    let matrix = config.homogenized();
    let mut ranking: Vec<usize> = (0..n).collect();
    permutations(&mut ranking, 0, &mut |perm| {
        let order = MonomialOrder::with_ranking(perm.to_vec());
        let gb = groebner::toric_groebner_of_matrix(&matrix, &order)?;
        Ok(is_squarefree(&initial_ideal_min_gens(&gb, &order)))
    })
}

fn permutations<F>(items: &mut Vec<usize>, k: usize, check: &mut F) -> Result<bool>
where
    F: FnMut(&[usize]) -> Result<bool>,
{
    if k == items.len() {
        return check(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        let ok = permutations(items, k + 1, check)?;
        items.swap(k, i);
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full algebraic/geometric verification record for a graph pair.
#[derive(Clone, Debug, Serialize)]
pub struct SquarefreeReport {
    pub harmony: bool,
    pub initial_a_squarefree: bool,
    pub initial_b_squarefree: bool,
    pub hypotheses_hold: bool,
    pub combined_initial_gens: Vec<Monomial>,
    pub combined_squarefree: bool,
    /// Computed combined generators equal the predicted set; absent when
    /// the hypotheses already failed.
    pub predicted_matches: Option<bool>,
    /// When all hypotheses hold the combined polytope must be reflexive
    /// with the integer decomposition property.
    pub algebraic_prediction: Option<bool>,
    pub omega_reflexive: bool,
    pub omega_idp: bool,
    pub geometry_consistent: bool,
}

/// Runs the whole pipeline for a pair of graphs on the same vertex set:
/// harmony of the stable-set configurations, squarefreeness of both initial
/// ideals under the canonical orders, the combined initial ideal under the
/// combined order with its predicted generators, and the consequence check
/// against the geometric reflexivity and IDP verdicts for Ω.
pub fn verify_squarefree_theorem(g1: &Graph, g2: &Graph) -> Result<SquarefreeReport> {
    if g1.vertex_count() != g2.vertex_count() {
        return Err(Error::DimensionMismatch {
            left: g1.vertex_count(),
            right: g2.vertex_count(),
        });
    }
    let a = PointConfiguration::stable_sets(g1);
    let b = PointConfiguration::stable_sets(g2);
    let harmony_holds = harmony(&a, &b)?;
    let (order_a, order_b, order_rev) = canonical_orders(&a, &b)?;

    let gens_a = initial_ideal_min_gens(&toric_groebner(&a, &order_a)?, &order_a);
    let gens_b = initial_ideal_min_gens(&toric_groebner(&b, &order_b)?, &order_b);
    let initial_a_squarefree = is_squarefree(&gens_a);
    let initial_b_squarefree = is_squarefree(&gens_b);

    let combined = omega_matrix(&a, &b)?;
    let combined_gb = toric_groebner(&combined, &order_rev)?;
    let combined_initial_gens = initial_ideal_min_gens(&combined_gb, &order_rev);
    let combined_squarefree = is_squarefree(&combined_initial_gens);

    let hypotheses_hold = harmony_holds && initial_a_squarefree && initial_b_squarefree;
    let predicted_matches = if hypotheses_hold {
        let predicted = predicted_initial_gens(&a, &b)?;
        Some(predicted == combined_initial_gens)
    } else {
        None
    };

    // geometric side
    let q1 = constructions::stable_set_polytope(g1);
    let q2 = constructions::stable_set_polytope(g2);
    let om = Polytope::from_points(constructions::omega(&q1, &q2)?)?;
    let omega_reflexive = om.is_reflexive();
    let omega_idp = decomposition::has_idp(&om, None)?.holds;

    let algebraic_prediction = if hypotheses_hold && combined_squarefree {
        Some(true)
    } else {
        None
    };
    let geometry_consistent = match algebraic_prediction {
        Some(true) => omega_reflexive && omega_idp,
        _ => true, // no prediction made, nothing to contradict
    };

    Ok(SquarefreeReport {
        harmony: harmony_holds,
        initial_a_squarefree,
        initial_b_squarefree,
        hypotheses_hold,
        combined_initial_gens,
        combined_squarefree,
        predicted_matches,
        algebraic_prediction,
        omega_reflexive,
        omega_idp,
        geometry_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(rows: usize, cols: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::new(rows, cols.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn harmony_examples() {
        let unit = config(1, &[&[1], &[0]]);
        assert!(harmony(&unit, &unit).unwrap());
        let two = config(1, &[&[2], &[0]]);
        assert!(!harmony(&two, &unit).unwrap());
        // stable-set configurations of any pair on the same vertex count
        for (g1, g2) in [
            (Graph::cycle(5).unwrap(), Graph::cycle(5).unwrap()),
            (Graph::path(4).unwrap(), Graph::complete(4).unwrap()),
            (Graph::empty(3).unwrap(), Graph::cycle(3).unwrap()),
        ] {
            let a = PointConfiguration::stable_sets(&g1);
            let b = PointConfiguration::stable_sets(&g2);
            assert!(harmony(&a, &b).unwrap());
        }
    }

    #[test]
    fn harmony_requires_zero_column() {
        let no_zero = config(1, &[&[1], &[2]]);
        let unit = config(1, &[&[1], &[0]]);
        assert!(harmony(&no_zero, &unit).is_err());
    }

    #[test]
    fn omega_matrix_layout() {
        let unit = config(1, &[&[1], &[0]]);
        let m = omega_matrix(&unit, &unit).unwrap();
        assert_eq!(m.rows, 2);
        assert_eq!(
            m.columns,
            vec![
                vec![-1, -1],
                vec![0, -1],
                vec![1, 1],
                vec![0, 1],
                vec![0, 0]
            ]
        );
        // column count of a stable-set pair
        let a = PointConfiguration::stable_sets(&Graph::cycle(5).unwrap());
        let om = omega_matrix(&a, &a).unwrap();
        assert_eq!(om.column_count(), 23);
        assert_eq!(om.rows, 6);
    }

    #[test]
    fn duplicate_columns_rejected() {
        assert!(PointConfiguration::new(1, vec![vec![1], vec![1]]).is_err());
    }

    #[test]
    fn canonical_orders_on_path3() {
        let a = PointConfiguration::stable_sets(&Graph::path(3).unwrap());
        // ({1,3},{1},{2},{3},∅): position ranking puts the empty set last
        assert_eq!(a.columns[0], vec![1, 0, 1]);
        assert!(a.has_zero_last_column());
        let (order_a, _, order_rev) = canonical_orders(&a, &a).unwrap();
        assert_eq!(order_a.vars(), 5);
        assert_eq!(order_rev.vars(), 11);
        // violation: increasing-cardinality layout
        let bad = config(1, &[&[0], &[1]]);
        assert!(matches!(
            canonical_orders(&bad, &bad),
            Err(Error::OrderViolation(_))
        ));
    }

    #[test]
    fn k2_stable_config_has_zero_ideal() {
        let a = PointConfiguration::stable_sets(&Graph::complete(2).unwrap());
        let (order_a, _, _) = canonical_orders(&a, &a).unwrap();
        assert!(toric_groebner(&a, &order_a).unwrap().is_empty());
    }

    #[test]
    fn predicted_gens_unit_pair() {
        let unit = config(1, &[&[1], &[0]]);
        let predicted = predicted_initial_gens(&unit, &unit).unwrap();
        // n = m = 2, combined vars (y1, y2, x1, x2, z);
        // M = {x2·y2, x1·y1}
        let x2y2 = Monomial::new(vec![0, 1, 0, 1, 0]);
        let x1y1 = Monomial::new(vec![1, 0, 1, 0, 0]);
        assert_eq!(predicted.len(), 2);
        assert!(predicted.contains(&x2y2) && predicted.contains(&x1y1));
    }

    #[test]
    fn predicted_matches_computed_for_unit_pair() {
        let unit = config(1, &[&[1], &[0]]);
        let (_, _, order_rev) = canonical_orders(&unit, &unit).unwrap();
        let combined = omega_matrix(&unit, &unit).unwrap();
        let gb = toric_groebner(&combined, &order_rev).unwrap();
        let gens = initial_ideal_min_gens(&gb, &order_rev);
        assert_eq!(gens, predicted_initial_gens(&unit, &unit).unwrap());
        assert!(is_squarefree(&gens));
    }

    #[test]
    fn predicted_matches_computed_for_path3_pair() {
        let a = PointConfiguration::stable_sets(&Graph::path(3).unwrap());
        let (_, _, order_rev) = canonical_orders(&a, &a).unwrap();
        let combined = omega_matrix(&a, &a).unwrap();
        let gb = toric_groebner(&combined, &order_rev).unwrap();
        let gens = initial_ideal_min_gens(&gb, &order_rev);
        assert!(is_squarefree(&gens));
        assert_eq!(gens, predicted_initial_gens(&a, &a).unwrap());
        assert!(all_s_pairs_reduce(&gb, &order_rev));
    }

    #[test]
    fn compressedness_examples() {
        // perfect graphs: compressed
        for g in [
            Graph::path(3).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::cycle(4).unwrap(),
        ] {
            let q = constructions::stable_set_polytope(&g);
            assert!(is_compressed_geometric(&q).unwrap(), "{g:?}");
        }
        // the odd cycle is not
        let qc5 = constructions::stable_set_polytope(&Graph::cycle(5).unwrap());
        assert!(!is_compressed_geometric(&qc5).unwrap());
        // unit cube
        let cube = constructions::stable_set_polytope(&Graph::empty(3).unwrap());
        assert!(is_compressed_geometric(&cube).unwrap());
    }

    #[test]
    fn all_orders_oracle_agrees_with_two_level() {
        // 0/1 stable-set configurations with at most 6 columns
        for g in [
            Graph::complete(2).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::empty(2).unwrap(),
            Graph::path(3).unwrap(),
        ] {
            let cfg = PointConfiguration::stable_sets(&g);
            let brute = is_compressed_all_orders(&cfg).unwrap();
            let geometric =
                is_compressed_geometric(&constructions::stable_set_polytope(&g)).unwrap();
            assert_eq!(brute, geometric, "{g:?}");
        }
    }

    #[test]
    fn all_orders_capped() {
        let cfg = PointConfiguration::stable_sets(&Graph::cycle(4).unwrap());
        assert!(cfg.column_count() > 6);
        assert!(is_compressed_all_orders(&cfg).is_err());
    }

    #[test]
    fn binomials_stay_in_the_ideal() {
        let a = PointConfiguration::stable_sets(&Graph::path(3).unwrap());
        let combined = omega_matrix(&a, &a).unwrap();
        let (_, _, order_rev) = canonical_orders(&a, &a).unwrap();
        let gb = toric_groebner(&combined, &order_rev).unwrap();
        for b in &gb {
            assert_eq!(combined.image(&b.lead), combined.image(&b.trail));
        }
    }

    #[test]
    fn squarefree_report_path3() {
        let p3 = Graph::path(3).unwrap();
        let report = verify_squarefree_theorem(&p3, &p3).unwrap();
        assert!(report.harmony);
        assert!(report.hypotheses_hold);
        assert!(report.combined_squarefree);
        assert_eq!(report.predicted_matches, Some(true));
        assert_eq!(report.algebraic_prediction, Some(true));
        assert!(report.omega_reflexive && report.omega_idp);
        assert!(report.geometry_consistent);
    }

    #[test]
    fn squarefree_report_k2() {
        let k2 = Graph::complete(2).unwrap();
        let report = verify_squarefree_theorem(&k2, &k2).unwrap();
        assert!(report.hypotheses_hold && report.combined_squarefree);
        assert_eq!(report.predicted_matches, Some(true));
        assert!(report.geometry_consistent);
    }

    #[test]
    fn squarefree_report_c5_hypotheses_fail() {
        let c5 = Graph::cycle(5).unwrap();
        let report = verify_squarefree_theorem(&c5, &c5).unwrap();
        assert!(report.harmony);
        assert!(!report.initial_a_squarefree);
        assert!(!report.hypotheses_hold);
        assert_eq!(report.predicted_matches, None);
        assert!(!report.omega_idp);
        assert!(report.geometry_consistent);
    }
}
