use crate::diagram::{HalfInt, OrientedDiagram};
use crate::engine::contract;
use crate::models;
use crate::scalar::{CycScalar, DyadicPoly, LaurentPoly, Matrix, Mono, Var};

use super::{leg_is_lower, InvariantError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderResult {
    /// The raw state sum ∇̃.
    pub state_sum: Matrix,
    /// ∇ = (iq)^{−rot} ∇̃.
    pub normalized: Matrix,
    /// tr(∇)/2.
    pub polynomial: DyadicPoly,
    pub rotation: HalfInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SawollekResult {
    /// Z = ½ × state sum.
    pub z: Matrix<DyadicPoly>,
    /// W = (iσ⁻¹τ)^{−rot} Z, the normalization that cancels the curl factor
    /// (iσ⁻¹τ)^{rot} of this model.
    pub w: Matrix<DyadicPoly>,
    /// tr(W).
    pub polynomial: DyadicPoly,
    /// W¹₁ − W²₂, the trace twisted by the closing cup and cap weights ±i.
    /// It vanishes on knot-type diagrams, where tr(W) need not be constant.
    pub supertrace: DyadicPoly,
    pub rotation: HalfInt,
}

/// (i·x)^{r/2} for a unit monomial x given by its doubled exponent vector;
/// i^{1/2} is ζ.
fn i_times_pow(rot_doubled: i64, x: Mono) -> LaurentPoly {
    let zeta = CycScalar::zeta(rot_doubled);
    let e = x.0.map(|d| d * rot_doubled as i32);
    // Exponents of x are stored doubled; (x)^{r/2} halves them back.
    assert!(
        e.iter().all(|d| d % 2 == 0),
        "half power of an odd monomial"
    );
    let half = Mono(e.map(|d| d / 2));
    LaurentPoly::term(zeta, half)
}

/// The Alexander state sum of a knotoid and its normalizations.
pub fn alexander(od: &OrientedDiagram) -> Result<AlexanderResult, InvariantError> {
    if leg_is_lower(od).is_none() {
        return Err(InvariantError::NeedsKnotoid);
    }
    let state_sum = contract(od, &models::alexander())?.matrix;
    let rotation = od.rotation_number();
    let f = i_times_pow(-rotation.doubled(), Mono::var(Var::Q, 1));
    let normalized = state_sum.scale(&f);
    let polynomial = DyadicPoly::half(normalized.trace());
    Ok(AlexanderResult {
        state_sum,
        normalized,
        polynomial,
        rotation,
    })
}

/// The two-variable σ, τ state sum of a knotoid.
pub fn sawollek(od: &OrientedDiagram) -> Result<SawollekResult, InvariantError> {
    if leg_is_lower(od).is_none() {
        return Err(InvariantError::NeedsKnotoid);
    }
    let raw = contract(od, &models::sawollek())?.matrix;
    let rotation = od.rotation_number();
    let st = Mono::var(Var::Sigma, -1).mul(&Mono::var(Var::Tau, 1));
    let f = i_times_pow(-rotation.doubled(), st);
    let z = raw.map(|p| DyadicPoly::half(p.clone()));
    let w = raw.map(|p| DyadicPoly::half(p * &f));
    let polynomial = w.trace();
    let supertrace = w.get(0, 0) - w.get(1, 1);
    Ok(SawollekResult {
        z,
        w,
        polynomial,
        supertrace,
        rotation,
    })
}
