use std::collections::HashMap;

use crate::diagram::{ComponentKind, EventKind, OrientedDiagram};
use crate::engine::contract;
use crate::models;
use crate::scalar::{a_pow, LaurentPoly};

use super::{leg_is_lower, InvariantError};

/// Value of the binary bracket with the color forced at the head.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryColoring {
    pub value: LaurentPoly,
    /// Color of the edge at the head (None for closed diagrams).
    pub head_color: Option<u8>,
}

/// True when going from slot `a` to slot `b` passes through a crossing.
fn passes_crossing(od: &OrientedDiagram, a: (usize, usize), b: (usize, usize)) -> bool {
    if a.0 == b.0 {
        return false;
    }
    let k = a.0.min(b.0);
    let e = od.events()[k];
    let p = if a.0 < b.0 { a.1 } else { b.1 };
    e.kind.is_crossing() && p >= e.pos && p < e.pos + 2
}

/// Binary bracket by coloring: along every component the color flips at each
/// crossing it passes, the knotoid starts with color 0 at its leg, and each
/// closed component takes both starting colors (it is infeasible when it
/// passes an odd number of crossings). At a crossing the smoothing is forced:
/// different bottom colors give the vertical smoothing, equal colors the
/// horizontal one.
pub fn binary_bracket(od: &OrientedDiagram) -> Result<BinaryColoring, InvariantError> {
    // Per component: its slots and the flip parity reached at each slot.
    let mut parity: Vec<Vec<((usize, usize), u8)>> = Vec::new();
    let mut closed_ids = Vec::new();
    let mut feasible = Vec::new();
    for (ci, comp) in od.components().iter().enumerate() {
        let mut f = 0u8;
        let mut list = Vec::with_capacity(comp.slots.len());
        for (j, &s) in comp.slots.iter().enumerate() {
            if j > 0 && passes_crossing(od, comp.slots[j - 1], s) {
                f ^= 1;
            }
            list.push((s, f));
        }
        if comp.kind == ComponentKind::Closed {
            closed_ids.push(ci);
            let last = *comp.slots.last().unwrap();
            let wrap = passes_crossing(od, last, comp.slots[0]) as u8;
            feasible.push((f ^ wrap) == 0);
        }
        parity.push(list);
    }
    let open = od.open_component();
    let head_color = open.map(|i| parity[i].last().unwrap().1);
    if feasible.iter().any(|&ok| !ok) {
        return Ok(BinaryColoring {
            value: LaurentPoly::zero(),
            head_color,
        });
    }
    let mut total = LaurentPoly::zero();
    for choice in 0..1u32 << closed_ids.len() {
        let mut color: HashMap<(usize, usize), u8> = HashMap::new();
        for (ci, list) in parity.iter().enumerate() {
            let start = closed_ids
                .iter()
                .position(|&c| c == ci)
                .map_or(0, |j| (choice >> j & 1) as u8);
            for &(s, f) in list {
                color.insert(s, start ^ f);
            }
        }
        let mut exp = 0i32;
        for (i, e) in od.events().iter().enumerate() {
            if !e.kind.is_crossing() {
                continue;
            }
            let vertical = color[&(i, e.pos)] != color[&(i, e.pos + 1)];
            let a_weight = vertical == (e.kind == EventKind::CrossPos);
            exp += if a_weight { 1 } else { -1 };
        }
        total += &a_pow(exp);
    }
    Ok(BinaryColoring {
        value: total,
        head_color,
    })
}

/// The same value read from the engine: the entry with color 0 at the leg
/// and the forced color at the head.
pub fn binary_bracket_engine(od: &OrientedDiagram) -> Result<LaurentPoly, InvariantError> {
    let m = contract(od, &models::binary())?.matrix;
    let head = binary_bracket(od)?.head_color;
    Ok(match (leg_is_lower(od), head) {
        (None, _) | (_, None) => m.get(0, 0).clone(),
        (Some(true), Some(c)) => m.get(0, c as usize).clone(),
        (Some(false), Some(c)) => m.get(c as usize, 0).clone(),
    })
}

/// A^{−w} {K}.
pub fn binary_normalized(od: &OrientedDiagram) -> Result<LaurentPoly, InvariantError> {
    let v = binary_bracket(od)?.value;
    Ok(&a_pow(-od.writhe() as i32) * &v)
}
