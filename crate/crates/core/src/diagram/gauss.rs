use std::fmt;

use super::orient::{Motion, Slots, Stop};
use super::{EventKind, OrientedDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Passage {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussEntry {
    /// Index of the crossing event in the word.
    pub crossing: usize,
    pub passage: Passage,
    pub sign: i8,
}

/// Crossing passages along the knotoid component from leg to head.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GaussCode {
    pub entries: Vec<GaussEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GaussError {
    #[error("diagram has no knotoid component")]
    NoKnotoid,
    #[error("crossing {0} does not appear twice in the Gauss code")]
    NotSelfCrossing(usize),
}

impl GaussCode {
    /// Crossing ids that the knotoid component passes twice.
    pub fn self_crossings(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self
            .entries
            .iter()
            .map(|e| e.crossing)
            .filter(|&c| self.entries.iter().filter(|e| e.crossing == c).count() == 2)
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

/// Renders as `(1,O,+) (1,U,+)` with crossings numbered by first appearance.
impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut order: Vec<usize> = Vec::new();
        for e in &self.entries {
            if !order.contains(&e.crossing) {
                order.push(e.crossing);
            }
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                let id = order.iter().position(|&c| c == e.crossing).unwrap() + 1;
                let o = if e.passage == Passage::Over { 'O' } else { 'U' };
                let s = if e.sign > 0 { '+' } else { '-' };
                format!("({id},{o},{s})")
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl OrientedDiagram {
    pub fn gauss_code(&self) -> Result<GaussCode, GaussError> {
        let events = self.events();
        let li = events
            .iter()
            .position(|e| e.kind.is_leg())
            .ok_or(GaussError::NoKnotoid)?;
        let slots = Slots::new(self.bottom_width(), events).expect("oriented words are valid");
        let e = events[li];
        let (mut k, mut p, mut m) = match e.kind {
            EventKind::Leg => (li + 1, e.pos, Motion::Up),
            _ => (li, e.pos, Motion::Down),
        };
        let mut entries = Vec::new();
        loop {
            let through = match m {
                Motion::Up if k < events.len() => Some(k),
                Motion::Down if k > 0 => Some(k - 1),
                _ => None,
            };
            let next = slots.next(k, p, m);
            if let (Some(ci), Ok((_, _, nm))) = (through, next) {
                let c = events[ci];
                let on_it = p >= c.pos && p < c.pos + 2;
                if c.kind.is_crossing() && on_it && nm == m {
                    // The bl–tr strand joins bottom slot pos with top slot pos+1.
                    let on_diag = match m {
                        Motion::Up => p == c.pos,
                        Motion::Down => p == c.pos + 1,
                    };
                    let over = on_diag == (c.kind == EventKind::CrossPos);
                    entries.push(GaussEntry {
                        crossing: ci,
                        passage: if over { Passage::Over } else { Passage::Under },
                        sign: self.crossing_sign(ci).unwrap(),
                    });
                }
            }
            match next {
                Ok((nk, np, nm)) => (k, p, m) = (nk, np, nm),
                Err(Stop::Endpoint(_)) | Err(Stop::Boundary) | Err(Stop::Loop) => break,
            }
        }
        Ok(GaussCode { entries })
    }

    /// Σ sign over crossings of odd parity on the knotoid component.
    pub fn odd_writhe(&self) -> Result<i64, GaussError> {
        let gc = self.gauss_code()?;
        let mut j = 0;
        for c in gc.self_crossings() {
            if crossing_parity(&gc, c)? == Parity::Odd {
                j += self.crossing_sign(c).unwrap() as i64;
            }
        }
        Ok(j)
    }

    /// True when every self-crossing of the knotoid component is even.
    pub fn all_crossings_even(&self) -> Result<bool, GaussError> {
        let gc = self.gauss_code()?;
        for c in gc.self_crossings() {
            if crossing_parity(&gc, c)? == Parity::Odd {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Odd iff an odd number of entries lies strictly between the two
/// occurrences of `id`.
pub fn crossing_parity(gc: &GaussCode, id: usize) -> Result<Parity, GaussError> {
    let idx: Vec<usize> = gc
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.crossing == id)
        .map(|(i, _)| i)
        .collect();
    if idx.len() != 2 {
        return Err(GaussError::NotSelfCrossing(id));
    }
    Ok(if (idx[1] - idx[0] - 1) % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    })
}
