//! State-sum contraction of Morse words against a quantum model, a
//! brute-force oracle, and the identity checks a model must satisfy.

mod contract;
mod model;
mod oracle;
mod verify;

pub use contract::{contract, tangle_matrix, EndpointLabels, EngineError, InvariantResult};
pub use model::QuantumModel;
pub use oracle::{enumerate_oracle, ORACLE_SLOT_BOUND};
pub use verify::{verify_model, CheckResult, VerifyReport};

use crate::diagram::OrientedDiagram;
use crate::scalar::Matrix;

/// Cuts the word at level `cut` and multiplies the matrices of the two halves.
/// For every choice of endpoint labels the product must match the
/// corresponding entry of the full contraction.
pub fn functoriality_check(
    od: &OrientedDiagram,
    model: &QuantumModel,
    cut: usize,
) -> Result<bool, EngineError> {
    let len = od.events().len();
    assert!(cut <= len, "cut level out of range");
    let full = contract(od, model)?.matrix;
    let lower = od.slice(0, cut);
    let upper = od.slice(cut, len);
    let first_is_leg = od
        .events()
        .iter()
        .find(|e| e.kind.is_endpoint())
        .map(|e| e.kind.is_leg());
    let n = model.n;
    let pairs: Vec<(usize, usize)> = match first_is_leg {
        None => vec![(0, 0)],
        Some(_) => (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect(),
    };
    for (a, b) in pairs {
        let labels = first_is_leg.map(|leg_first| {
            if leg_first {
                EndpointLabels { leg: a, head: b }
            } else {
                EndpointLabels { leg: b, head: a }
            }
        });
        let ml = tangle_matrix(&lower, model, labels)?;
        let mu = tangle_matrix(&upper, model, labels)?;
        let prod: Matrix = mu.matmul(&ml);
        if prod.get(0, 0) != full.get(a, b) {
            return Ok(false);
        }
    }
    Ok(true)
}
