use crate::diagram::OrientedDiagram;
use crate::engine::contract;
use crate::models;
use crate::scalar::{LaurentPoly, Matrix, Mono, Var};

use super::{leg_is_lower, InvariantError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomflyptResult {
    pub n: usize,
    /// The state sum <K> (diagonal for knotoids, 1×1 when closed).
    pub state_sum: Matrix,
    /// q^{−(n+1)w} <K>.
    pub normalized: Matrix,
    /// For nonempty closed diagrams, P^n = q^{−(n+1)w} <K> / <O>.
    pub polynomial: Option<LaurentPoly>,
    /// The unknot value <O> = Σ_a q^{−a}.
    pub unknot: LaurentPoly,
}

/// <O> for labels −n, −n+2, …, n.
pub fn unknot_value(n: usize) -> LaurentPoly {
    let mut o = LaurentPoly::zero();
    let mut a = -(n as i32);
    while a <= n as i32 {
        o += &LaurentPoly::var(Var::Q, -a);
        a += 2;
    }
    o
}

pub fn homflypt(od: &OrientedDiagram, n: usize) -> Result<HomflyptResult, InvariantError> {
    let state_sum = contract(od, &models::homflypt(n))?.matrix;
    let w = od.writhe();
    let f = LaurentPoly::mono(Mono::var(Var::Q, -((n as i32 + 1) * w as i32)));
    let normalized = state_sum.scale(&f);
    let unknot = unknot_value(n);
    let polynomial = if leg_is_lower(od).is_none() && !od.events().is_empty() {
        Some(normalized.get(0, 0).div_exact(&unknot)?)
    } else {
        None
    };
    Ok(HomflyptResult {
        n,
        state_sum,
        normalized,
        polynomial,
        unknot,
    })
}
