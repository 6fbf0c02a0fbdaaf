//! Knotoid invariants built on the state-sum engine, together with the
//! independent state expansions used to cross-check it.

mod alexander;
mod binary;
mod bracket;
mod homflypt;
mod skein;

pub use alexander::{alexander, sawollek, AlexanderResult, SawollekResult};
pub use binary::{binary_bracket, binary_bracket_engine, binary_normalized, BinaryColoring};
pub use bracket::{bracket_matrix, bracket_matrix_states, rotational_bracket};
pub use homflypt::{homflypt, unknot_value, HomflyptResult};
pub use skein::{skein_check_alexander, skein_check_homflypt, skein_triple, SkeinTriple};

use crate::diagram::{EventKind, MorseDiagram, MorseEvent, OrientedDiagram};
use crate::engine::EngineError;
use crate::scalar::DivisionError;

/// Largest crossing count for the explicit 2^c state expansions.
pub const MAX_STATE_CROSSINGS: usize = 16;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum InvariantError {
    #[error("{0} crossings exceed the state expansion limit of {MAX_STATE_CROSSINGS}")]
    TooManyCrossings(usize),
    #[error("invariant needs a knotoid (a diagram with a leg and a head)")]
    NeedsKnotoid,
    #[error("division by the unknot value is not exact: {0}")]
    Division(#[from] DivisionError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("skein triple does not differ exactly at crossing {0}")]
    SiteMismatch(usize),
    #[error("event {0} is not a crossing")]
    NotACrossing(usize),
}

/// The crossingless word obtained by smoothing every crossing. Bit `j` of
/// `state` set means the `j`-th crossing (in word order) gets its horizontal
/// smoothing, a cap followed by a cup at the same position.
pub(crate) fn smooth(events: &[MorseEvent], state: u32) -> MorseDiagram {
    let mut out = Vec::with_capacity(events.len() + 4);
    let mut j = 0;
    for e in events {
        if e.kind.is_crossing() {
            if state >> j & 1 == 1 {
                out.push(MorseEvent::cap(e.pos));
                out.push(MorseEvent::cup(e.pos));
            }
            j += 1;
        } else {
            out.push(*e);
        }
    }
    MorseDiagram::new(out).expect("smoothing keeps a word valid")
}

/// Per state: the exponent of A, i.e. #A-smoothings − #B-smoothings. For `xp`
/// the vertical smoothing is the A-smoothing, for `xn` the horizontal one.
pub(crate) fn a_exponent(events: &[MorseEvent], state: u32) -> i32 {
    let mut j = 0;
    let mut exp = 0;
    for e in events {
        if e.kind.is_crossing() {
            let horizontal = state >> j & 1 == 1;
            let is_a = horizontal == (e.kind == EventKind::CrossNeg);
            exp += if is_a { 1 } else { -1 };
            j += 1;
        }
    }
    exp
}

pub(crate) fn check_state_limit(od: &OrientedDiagram) -> Result<usize, InvariantError> {
    let c = od.events().iter().filter(|e| e.kind.is_crossing()).count();
    if c > MAX_STATE_CROSSINGS {
        return Err(InvariantError::TooManyCrossings(c));
    }
    Ok(c)
}

/// True when the lower of the two endpoints is the leg.
pub(crate) fn leg_is_lower(od: &OrientedDiagram) -> Option<bool> {
    od.events()
        .iter()
        .find(|e| e.kind.is_endpoint())
        .map(|e| e.kind.is_leg())
}
