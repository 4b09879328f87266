//! Ehrhart δ-polynomials, normalized volumes, and the (1+λ)-product
//! identity relating Ω(Q_G1,Q_G2) to the suspended Γ polytope.

use num::{BigInt, One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::constructions;
use crate::geometry::{Polytope, VRep};
use crate::graph::Graph;
use crate::{Error, Result};

/// Coefficient vector (δ_0, .., δ_d) of the Ehrhart δ-polynomial of a
/// full-dimensional lattice polytope of dimension d. Serializes as an array
/// of decimal strings, lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaPolynomial {
    coeffs: Vec<BigInt>,
}

impl DeltaPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        DeltaPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        DeltaPolynomial {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree of the polynomial (largest index with a nonzero coefficient).
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// δ(1): the normalized volume d!·vol(P).
    pub fn normalized_volume(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// δ_i = δ_{s-i} for all i, where s is the degree.
    pub fn is_palindromic(&self) -> bool {
        let s = self.degree();
        (0..=s).all(|i| self.coeffs[i] == self.coeffs[s - i])
    }

    /// Multiplication by (1 + λ), with explicit degree growth.
    pub fn times_one_plus_lambda(&self) -> DeltaPolynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
            out[i + 1] += c;
        }
        DeltaPolynomial { coeffs: out }
    }
}

impl Serialize for DeltaPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// |n·P ∩ Z^d| by streaming enumeration.
pub fn count_dilate(p: &Polytope, n: u64) -> Result<BigInt> {
    Ok(BigInt::from(p.count_lattice_points(n)?))
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// δ-polynomial via the transform
/// δ_i = Σ_{j=0..i} (-1)^{i-j} · C(d+1, i-j) · L(j), with L(0) = 1 and
/// L(j) the lattice-point count of the j-th dilate, for i = 0..d.
/// The same sum at index d+1 must vanish (this needs one extra count,
/// L(d+1)); a nonzero check value or a negative coefficient signals an
/// enumeration bug and is reported as an error.
pub fn delta_polynomial(p: &Polytope) -> Result<DeltaPolynomial> {
    let d = p.ambient_dim();
    let mut counts = vec![BigInt::one()];
    for n in 1..=(d + 1) as u64 {
        counts.push(count_dilate(p, n)?);
    }
    let transform = |i: usize| -> BigInt {
        let mut acc = BigInt::zero();
        for j in i.saturating_sub(d + 1)..=i {
            let c = binomial(d + 1, i - j);
            let term = &c * &counts[j];
            if (i - j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    };
    let coeffs: Vec<BigInt> = (0..=d).map(&transform).collect();
    if coeffs.iter().any(|c| c.is_negative()) {
        return Err(Error::Inconsistency(format!(
            "negative δ coefficient in {coeffs:?}"
        )));
    }
    let check = transform(d + 1);
    if !check.is_zero() {
        return Err(Error::Inconsistency(format!(
            "δ transform at index {} is {}, expected 0",
            d + 1,
            check
        )));
    }
    Ok(DeltaPolynomial { coeffs })
}

/// Normalized volume δ(1) of a polytope.
pub fn normalized_volume(p: &Polytope) -> Result<BigInt> {
    Ok(delta_polynomial(p)?.normalized_volume())
}

/// Report of the δ identity δ(Ω) = δ(Γ of the suspended pair) = (1+λ)·δ(Γ)
/// for a pair of graphs, together with the volume consequence.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaTheoremReport {
    pub g1_perfect: bool,
    pub g2_perfect: bool,
    pub hypothesis_holds: bool,
    pub delta_gamma: DeltaPolynomial,
    pub delta_omega: DeltaPolynomial,
    pub delta_gamma_suspended: DeltaPolynomial,
    pub product_one_plus_lambda: DeltaPolynomial,
    pub omega_equals_suspended: bool,
    pub omega_equals_product: bool,
    pub identity_holds: bool,
    #[serde(serialize_with = "ser_bigint")]
    pub vol_gamma: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub vol_omega: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub vol_gamma_suspended: BigInt,
    pub volume_ratio_is_two: bool,
}

pub(crate) fn ser_bigint<S: Serializer>(
    v: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Computes δ(Ω(Q_G1,Q_G2)), δ(Γ(Q_Ĝ1,Q_Ĝ2)), (1+λ)·δ(Γ(Q_G1,Q_G2)) and the
/// equality/volume verdicts. If either graph is imperfect the report flags
/// the failed hypothesis but still carries all three polynomials.
pub fn verify_delta_theorem(g1: &Graph, g2: &Graph) -> Result<DeltaTheoremReport> {
    if g1.vertex_count() != g2.vertex_count() {
        return Err(Error::DimensionMismatch {
            left: g1.vertex_count(),
            right: g2.vertex_count(),
        });
    }
    let q1 = constructions::stable_set_polytope(g1);
    let q2 = constructions::stable_set_polytope(g2);
    let ga = Polytope::from_points(constructions::gamma(&q1, &q2)?)?;
    let om = Polytope::from_points(constructions::omega(&q1, &q2)?)?;
    let q1h = constructions::stable_set_polytope(&g1.suspension());
    let q2h = constructions::stable_set_polytope(&g2.suspension());
    let gah = Polytope::from_points(constructions::gamma(&q1h, &q2h)?)?;

    let delta_gamma = delta_polynomial(&ga)?;
    let delta_omega = delta_polynomial(&om)?;
    let delta_gamma_suspended = delta_polynomial(&gah)?;
    let product = delta_gamma.times_one_plus_lambda();

    let g1_perfect = g1.is_perfect_spgt();
    let g2_perfect = g2.is_perfect_spgt();
    let omega_equals_suspended =
        trimmed(&delta_omega) == trimmed(&delta_gamma_suspended);
    let omega_equals_product = trimmed(&delta_omega) == trimmed(&product);
    let vol_gamma = delta_gamma.normalized_volume();
    let vol_omega = delta_omega.normalized_volume();
    let vol_gamma_suspended = delta_gamma_suspended.normalized_volume();
    let volume_ratio_is_two = vol_omega == BigInt::from(2) * &vol_gamma
        && vol_gamma_suspended == vol_omega;

    Ok(DeltaTheoremReport {
        g1_perfect,
        g2_perfect,
        hypothesis_holds: g1_perfect && g2_perfect,
        identity_holds: omega_equals_suspended && omega_equals_product,
        delta_gamma,
        delta_omega,
        delta_gamma_suspended,
        product_one_plus_lambda: product,
        omega_equals_suspended,
        omega_equals_product,
        vol_gamma,
        vol_omega,
        vol_gamma_suspended,
        volume_ratio_is_two,
    })
}

fn trimmed(p: &DeltaPolynomial) -> &[BigInt] {
    let end = p
        .coeffs()
        .iter()
        .rposition(|c| !c.is_zero())
        .map_or(0, |i| i + 1);
    &p.coeffs()[..end]
}
