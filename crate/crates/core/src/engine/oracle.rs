use crate::diagram::{EventKind, OrientedDiagram};
use crate::scalar::{LaurentPoly, Matrix};

use super::contract::EngineError;
use super::model::{dir_index, QuantumModel};

/// Largest number of labelled slots the brute-force enumeration accepts.
pub const ORACLE_SLOT_BOUND: usize = 24;

/// Sums the weight of every labelling of every slot, one slot at a time,
/// depth first, reading weights straight from the dense model matrices.
/// Independent of the level-by-level contraction; exponential, so only for
/// small diagrams.
pub fn enumerate_oracle(od: &OrientedDiagram, model: &QuantumModel) -> Result<Matrix, EngineError> {
    let slots = od.bottom_width() + od.events().iter().map(|e| e.kind.outputs()).sum::<usize>();
    if slots > ORACLE_SLOT_BOUND {
        return Err(EngineError::OracleBound {
            slots,
            bound: ORACLE_SLOT_BOUND,
        });
    }
    if od.bottom_width() != 0 || od.top_width() != 0 {
        return Err(EngineError::OracleBound { slots, bound: 0 });
    }
    let ends: Vec<usize> = (0..od.events().len())
        .filter(|&i| od.events()[i].kind.is_endpoint())
        .collect();
    let n = model.n;
    let size = if ends.is_empty() { 1 } else { n };
    let mut out = Matrix::zeros(size, size);
    let mut walker = Walker {
        od,
        model,
        ends: &ends,
        endpoint: [0, 0],
        out: &mut out,
    };
    walker.visit(0, Vec::new(), LaurentPoly::one());
    Ok(out)
}

struct Walker<'a> {
    od: &'a OrientedDiagram,
    model: &'a QuantumModel,
    ends: &'a [usize],
    /// Labels chosen at the (lower, upper) endpoints.
    endpoint: [usize; 2],
    out: &'a mut Matrix,
}

impl Walker<'_> {
    fn visit(&mut self, i: usize, level: Vec<u8>, weight: LaurentPoly) {
        if weight.is_zero() {
            return;
        }
        let events = self.od.events();
        if i == events.len() {
            let (r, c) = if self.ends.is_empty() {
                (0, 0)
            } else {
                (self.endpoint[0], self.endpoint[1])
            };
            let v = self.out.get(r, c) + &weight;
            self.out.set(r, c, v);
            return;
        }
        let n = self.model.n;
        let e = events[i];
        let p = e.pos;
        match e.kind {
            EventKind::CrossPos | EventKind::CrossNeg => {
                let (l, r) = self.od.crossing_bottom_dirs(i).unwrap();
                let m = self.model.crossing_matrix(e.kind, l, r);
                let col = level[p] as usize * n + level[p + 1] as usize;
                for a in 0..n {
                    for b in 0..n {
                        let w = m.get(a * n + b, col);
                        let mut nl = level.clone();
                        nl[p] = a as u8;
                        nl[p + 1] = b as u8;
                        self.visit(i + 1, nl, &weight * w);
                    }
                }
            }
            EventKind::Cup => {
                let (k, lp) = self.od.left_leg(i);
                let m = &self.model.cup[dir_index(self.od.dir(k, lp))];
                for a in 0..n {
                    for b in 0..n {
                        let mut nl = level.clone();
                        nl.splice(p..p, [a as u8, b as u8]);
                        self.visit(i + 1, nl, &weight * m.get(a, b));
                    }
                }
            }
            EventKind::Cap => {
                let (k, lp) = self.od.left_leg(i);
                let m = &self.model.cap[dir_index(self.od.dir(k, lp))];
                let w = m.get(level[p] as usize, level[p + 1] as usize);
                let mut nl = level;
                nl.drain(p..p + 2);
                self.visit(i + 1, nl, &weight * w);
            }
            EventKind::Leg | EventKind::HeadDown => {
                let which = self.ends.iter().position(|&j| j == i).unwrap();
                for a in 0..n {
                    let mut nl = level.clone();
                    nl.insert(p, a as u8);
                    self.endpoint[which] = a;
                    self.visit(i + 1, nl, weight.clone());
                }
            }
            EventKind::Head | EventKind::LegDown => {
                let which = self.ends.iter().position(|&j| j == i).unwrap();
                let mut nl = level;
                self.endpoint[which] = nl.remove(p) as usize;
                self.visit(i + 1, nl, weight);
            }
        }
    }
}
