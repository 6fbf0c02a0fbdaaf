//! Morse isotopy as local rewrites of the event word.
//!
//! Every move replaces a short run of events (possibly empty, for insertions)
//! by another run. Positions are re-indexed explicitly, so each intermediate
//! word is a valid diagram. Orientations of closed components are carried
//! across a rewrite through direction hints on the untouched levels.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{EventKind, MorseDiagram, MorseEvent as E, OrientError, OrientedDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    MinMaxInsert,
    MinMaxDelete,
    Slide,
    R2Insert,
    R2Delete,
    R3,
    DistantCommute,
    EndpointShift,
    /// Adds a curl; changes writhe and rotation, so not a Morse isotopy.
    R1Insert,
    R1Delete,
}

impl MoveKind {
    /// False for the curl moves, which break regular isotopy.
    pub fn preserves_isotopy(self) -> bool {
        !matches!(self, MoveKind::R1Insert | MoveKind::R1Delete)
    }

    pub fn is_insertion(self) -> bool {
        matches!(
            self,
            MoveKind::MinMaxInsert | MoveKind::R2Insert | MoveKind::R1Insert
        )
    }
}

/// Where and how to apply a move. For insertions `index` is the level at which
/// the new events go and `pos` the strand they act on; otherwise `index` is
/// the first rewritten event. `variant` picks the chirality or side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub index: usize,
    pub pos: usize,
    pub variant: u8,
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}@{}:{}/{}",
            self.kind, self.index, self.pos, self.variant
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("move {0} does not apply")]
    NotApplicable(MoveSite),
    #[error("orientation lost in rewrite: {0}")]
    Orientation(#[from] OrientError),
}

/// A rewrite: events `lo..hi` become `new`.
struct Rewrite {
    lo: usize,
    hi: usize,
    new: Vec<E>,
}

fn cross(kind: EventKind, pos: usize) -> E {
    E::new(kind, pos)
}

fn crossing_kind(v: u8) -> EventKind {
    if v & 1 == 0 {
        EventKind::CrossPos
    } else {
        EventKind::CrossNeg
    }
}

/// The curl on strand `p`: a cup beside it, one crossing, a cap.
fn curl(p: usize, kind: EventKind, left: bool) -> [E; 3] {
    if left {
        [E::cup(p), cross(kind, p + 1), E::cap(p)]
    } else {
        [E::cup(p + 1), cross(kind, p), E::cap(p + 1)]
    }
}

/// A zigzag on strand `p` whose two arms overlap in a Reidemeister II pair.
fn folded_pair(p: usize, kind: EventKind, left: bool) -> [E; 4] {
    let f = kind.switched();
    if left {
        [
            E::cup(p),
            cross(kind, p + 1),
            cross(f, p + 1),
            E::cap(p + 1),
        ]
    } else {
        [E::cup(p + 1), cross(kind, p), cross(f, p), E::cap(p)]
    }
}

fn zigzag(p: usize, left: bool) -> [E; 2] {
    if left {
        [E::cup(p), E::cap(p + 1)]
    } else {
        [E::cup(p + 1), E::cap(p)]
    }
}

/// Swap of two adjacent events acting on disjoint strands. `right` puts the
/// later event to the right of the earlier one when both sides are possible.
fn commute(a: E, b: E, right: bool) -> Option<[E; 2]> {
    let (ain, aout) = (a.kind.inputs(), a.kind.outputs());
    let (bin, bout) = (b.kind.inputs(), b.kind.outputs());
    let (p, r) = (a.pos, b.pos);
    if !right && r + bin <= p {
        return Some([b, E::new(a.kind, p + bout - bin)]);
    }
    if right && r >= p + aout {
        return Some([E::new(b.kind, r - aout + ain), a]);
    }
    None
}

fn rewrite(events: &[E], widths: &[usize], site: &MoveSite) -> Option<Rewrite> {
    let at = |i: usize| events.get(i).copied();
    let k = site.index;
    let p = site.pos;
    let v = site.variant;
    let replace = |lo: usize, len: usize, new: Vec<E>| {
        Some(Rewrite {
            lo,
            hi: lo + len,
            new,
        })
    };
    match site.kind {
        MoveKind::MinMaxInsert => {
            let w = *widths.get(k)?;
            (p < w && v < 2).then(|| Rewrite {
                lo: k,
                hi: k,
                new: zigzag(p, v == 1).to_vec(),
            })
        }
        MoveKind::MinMaxDelete => {
            let pair = [at(k)?, at(k + 1)?];
            (v < 2 && pair == zigzag(p, v == 1)).then(|| Rewrite {
                lo: k,
                hi: k + 2,
                new: Vec::new(),
            })
        }
        MoveKind::R2Insert => {
            let w = *widths.get(k)?;
            let kind = crossing_kind(v);
            let new = match v >> 1 {
                0 if p + 1 < w => vec![cross(kind, p), cross(kind.switched(), p)],
                1 if p < w => folded_pair(p, kind, false).to_vec(),
                2 if p < w => folded_pair(p, kind, true).to_vec(),
                _ => return None,
            };
            Some(Rewrite { lo: k, hi: k, new })
        }
        MoveKind::R2Delete => {
            let kind = crossing_kind(v);
            match v >> 1 {
                0 => {
                    let pair = [at(k)?, at(k + 1)?];
                    (pair == [cross(kind, p), cross(kind.switched(), p)]).then(|| Rewrite {
                        lo: k,
                        hi: k + 2,
                        new: Vec::new(),
                    })
                }
                s @ (1 | 2) => {
                    let run = [at(k)?, at(k + 1)?, at(k + 2)?, at(k + 3)?];
                    (run == folded_pair(p, kind, s == 2)).then(|| Rewrite {
                        lo: k,
                        hi: k + 4,
                        new: Vec::new(),
                    })
                }
                _ => None,
            }
        }
        MoveKind::R1Insert => {
            let w = *widths.get(k)?;
            (p < w && v < 4).then(|| Rewrite {
                lo: k,
                hi: k,
                new: curl(p, crossing_kind(v), v >> 1 == 1).to_vec(),
            })
        }
        MoveKind::R1Delete => {
            let run = [at(k)?, at(k + 1)?, at(k + 2)?];
            (v < 4 && run == curl(p, crossing_kind(v), v >> 1 == 1)).then(|| Rewrite {
                lo: k,
                hi: k + 3,
                new: Vec::new(),
            })
        }
        MoveKind::R3 => {
            let [x, y, z] = [at(k)?, at(k + 1)?, at(k + 2)?];
            if !(x.kind.is_crossing() && y.kind.is_crossing() && z.kind.is_crossing()) {
                return None;
            }
            // σ1σ2⁻¹σ1 has no braid partner.
            if x.kind == z.kind && y.kind != x.kind {
                return None;
            }
            if x.pos != z.pos || v != 0 {
                return None;
            }
            if y.pos == x.pos + 1 {
                replace(
                    k,
                    3,
                    vec![
                        cross(z.kind, x.pos + 1),
                        cross(y.kind, x.pos),
                        cross(x.kind, x.pos + 1),
                    ],
                )
            } else if y.pos + 1 == x.pos {
                replace(
                    k,
                    3,
                    vec![
                        cross(z.kind, y.pos),
                        cross(y.kind, x.pos),
                        cross(x.kind, y.pos),
                    ],
                )
            } else {
                None
            }
        }
        MoveKind::Slide => {
            let (a, b) = (at(k)?, at(k + 1)?);
            if v != 0 {
                return None;
            }
            let new = match (a.kind, b.kind) {
                (x, EventKind::Cap) if x.is_crossing() && a.pos == b.pos + 1 => {
                    vec![cross(x.switched(), b.pos), E::cap(b.pos + 1)]
                }
                (x, EventKind::Cap) if x.is_crossing() && b.pos == a.pos + 1 => {
                    vec![cross(x.switched(), a.pos + 1), E::cap(a.pos)]
                }
                (EventKind::Cup, x) if x.is_crossing() && a.pos == b.pos + 1 => {
                    vec![E::cup(b.pos), cross(x.switched(), b.pos + 1)]
                }
                (EventKind::Cup, x) if x.is_crossing() && b.pos == a.pos + 1 => {
                    vec![E::cup(a.pos + 1), cross(x.switched(), a.pos)]
                }
                _ => return None,
            };
            replace(k, 2, new)
        }
        MoveKind::DistantCommute | MoveKind::EndpointShift => {
            let (a, b) = (at(k)?, at(k + 1)?);
            let endpoints = a.kind.is_endpoint() as u8 + b.kind.is_endpoint() as u8;
            // Reordering leg and head would swap which endpoint is lower.
            let wanted = if site.kind == MoveKind::EndpointShift {
                1
            } else {
                0
            };
            if endpoints != wanted || v > 1 {
                return None;
            }
            let pair = commute(a, b, v == 1)?;
            replace(k, 2, pair.to_vec())
        }
    }
}

fn splice(events: &[E], rw: &Rewrite) -> Vec<E> {
    let mut out = Vec::with_capacity(events.len() + rw.new.len());
    out.extend_from_slice(&events[..rw.lo]);
    out.extend_from_slice(&rw.new);
    out.extend_from_slice(&events[rw.hi..]);
    out
}

fn candidate_sites(events: &[E], widths: &[usize]) -> Vec<MoveSite> {
    let mut out = Vec::new();
    let site = |kind, index, pos, variant| MoveSite {
        kind,
        index,
        pos,
        variant,
    };
    for (k, &w) in widths.iter().enumerate() {
        for p in 0..w {
            for v in 0..2 {
                out.push(site(MoveKind::MinMaxInsert, k, p, v));
            }
            for v in 0..6 {
                out.push(site(MoveKind::R2Insert, k, p, v));
            }
            for v in 0..4 {
                out.push(site(MoveKind::R1Insert, k, p, v));
            }
        }
    }
    for (i, e) in events.iter().enumerate() {
        for kind in [MoveKind::DistantCommute, MoveKind::EndpointShift] {
            for v in 0..2 {
                out.push(site(kind, i, e.pos, v));
            }
        }
        out.push(site(MoveKind::R3, i, e.pos, 0));
        out.push(site(MoveKind::Slide, i, e.pos, 0));
        match e.kind {
            EventKind::Cup => {
                // Pattern starts at a cup; the rewritten strand sits beside it.
                let right = e.pos.checked_sub(1).map(|p| (p, 0u8));
                for (p, v) in right.into_iter().chain([(e.pos, 1)]) {
                    out.push(site(MoveKind::MinMaxDelete, i, p, v));
                    for c in 0..2 {
                        out.push(site(MoveKind::R1Delete, i, p, c | (v << 1)));
                        out.push(site(MoveKind::R2Delete, i, p, c | ((1 + v) << 1)));
                    }
                }
            }
            k if k.is_crossing() => {
                out.push(site(MoveKind::R2Delete, i, e.pos, crossing_kind_bit(k)));
            }
            _ => {}
        }
    }
    out
}

fn crossing_kind_bit(k: EventKind) -> u8 {
    (k == EventKind::CrossNeg) as u8
}

/// Every move that applies to `d`, each checked to yield a valid diagram.
pub fn applicable_moves(d: &MorseDiagram) -> Vec<MoveSite> {
    let events = d.events();
    let widths = d.widths();
    candidate_sites(events, &widths)
        .into_iter()
        .filter(|s| {
            rewrite(events, &widths, s)
                .is_some_and(|rw| MorseDiagram::new(splice(events, &rw)).is_ok())
        })
        .collect()
}

pub fn apply_move(d: &MorseDiagram, site: &MoveSite) -> Result<MorseDiagram, MoveError> {
    let rw = rewrite(d.events(), &d.widths(), site).ok_or(MoveError::NotApplicable(*site))?;
    MorseDiagram::new(splice(d.events(), &rw)).map_err(|_| MoveError::NotApplicable(*site))
}

/// Applies a move and keeps the direction of every closed component.
pub fn apply_move_oriented(
    od: &OrientedDiagram,
    site: &MoveSite,
) -> Result<OrientedDiagram, MoveError> {
    let d = od.diagram().ok_or(MoveError::NotApplicable(*site))?;
    let rw = rewrite(d.events(), &d.widths(), site).ok_or(MoveError::NotApplicable(*site))?;
    let nd =
        MorseDiagram::new(splice(d.events(), &rw)).map_err(|_| MoveError::NotApplicable(*site))?;
    let shift = rw.new.len() as isize - (rw.hi - rw.lo) as isize;
    let hints = od.hints_outside(rw.lo, rw.hi, shift);
    Ok(OrientedDiagram::with_hints(&nd, &hints)?)
}

/// Knobs for [`random_equivalent_with`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomConfig {
    /// Probability of drawing from the insertion moves when both classes apply.
    pub insert_bias: f64,
    /// Insertions never push the width above max(this, the input's width).
    pub max_width: usize,
    /// Insertions never push the crossing count above the input's count plus this.
    pub extra_crossings: usize,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig {
            insert_bias: 0.5,
            max_width: 8,
            extra_crossings: 4,
        }
    }
}

/// A Morse-isotopic diagram reached by `steps` random moves (never RI).
pub fn random_equivalent(d: &MorseDiagram, steps: usize, seed: u64) -> MorseDiagram {
    random_equivalent_oriented(&OrientedDiagram::new(d), steps, seed)
        .diagram()
        .expect("closed word")
}

/// As [`random_equivalent`], carrying closed-component orientations along.
pub fn random_equivalent_oriented(
    od: &OrientedDiagram,
    steps: usize,
    seed: u64,
) -> OrientedDiagram {
    random_equivalent_with(od, steps, seed, &RandomConfig::default())
}

pub fn random_equivalent_with(
    od: &OrientedDiagram,
    steps: usize,
    seed: u64,
    cfg: &RandomConfig,
) -> OrientedDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = od.clone();
    let start = od.diagram().expect("closed word");
    let max_width = cfg.max_width.max(start.max_width());
    let max_cross = start.crossing_count() + cfg.extra_crossings;
    for _ in 0..steps {
        let d = cur.diagram().expect("closed word");
        let (mut grow, mut other): (Vec<MoveSite>, Vec<MoveSite>) = applicable_moves(&d)
            .into_iter()
            .filter(|s| s.kind.preserves_isotopy())
            .partition(|s| s.kind.is_insertion());
        grow.retain(|s| {
            let next = apply_move(&d, s).expect("applicable");
            next.max_width() <= max_width && next.crossing_count() <= max_cross
        });
        let pool = match (grow.is_empty(), other.is_empty()) {
            (true, true) => break,
            (false, true) => &mut grow,
            (true, false) => &mut other,
            (false, false) => {
                if rng.gen_bool(cfg.insert_bias) {
                    &mut grow
                } else {
                    &mut other
                }
            }
        };
        let site = pool[rng.gen_range(0..pool.len())];
        cur = apply_move_oriented(&cur, &site).expect("applicable move keeps orientation");
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(ev: Vec<E>) -> MorseDiagram {
        MorseDiagram::new(ev).unwrap()
    }

    fn kinds(d: &MorseDiagram) -> Vec<MoveKind> {
        applicable_moves(d).into_iter().map(|s| s.kind).collect()
    }

    #[test]
    fn trivial_strand_sites() {
        let k = kinds(&d(vec![E::leg(0), E::head(0)]));
        assert!(k.contains(&MoveKind::MinMaxInsert));
        assert!(k.contains(&MoveKind::R2Insert));
    }

    #[test]
    fn circle_is_not_a_zigzag() {
        let k = kinds(&d(vec![E::cup(0), E::cap(0)]));
        assert!(!k.contains(&MoveKind::MinMaxDelete));
    }

    #[test]
    fn minmax_keeps_rotation() {
        let strand = d(vec![E::leg(0), E::head(0)]);
        for v in 0..2 {
            let s = MoveSite {
                kind: MoveKind::MinMaxInsert,
                index: 1,
                pos: 0,
                variant: v,
            };
            let z = apply_move(&strand, &s).unwrap();
            assert_eq!(z.len(), 4);
            assert_eq!(OrientedDiagram::new(&z).rotation_number().doubled(), 0);
            let back: Vec<_> = applicable_moves(&z)
                .into_iter()
                .filter(|s| s.kind == MoveKind::MinMaxDelete)
                .collect();
            assert_eq!(apply_move(&z, &back[0]).unwrap(), strand);
        }
    }

    #[test]
    fn r2_insert_then_delete() {
        let base = d(vec![E::cup(0), E::leg(1), E::head(0), E::cap(0)]);
        let ins = MoveSite {
            kind: MoveKind::R2Insert,
            index: 2,
            pos: 0,
            variant: 1,
        };
        let grown = apply_move(&base, &ins).unwrap();
        let del = MoveSite {
            kind: MoveKind::R2Delete,
            index: 2,
            pos: 0,
            variant: 1,
        };
        assert_eq!(apply_move(&grown, &del).unwrap(), base);
    }

    #[test]
    fn r3_is_the_braid_relation() {
        let w = d(vec![
            E::cup(0),
            E::cup(2),
            E::cup(4),
            E::xp(1),
            E::xp(2),
            E::xp(1),
            E::cap(4),
            E::cap(2),
            E::cap(0),
        ]);
        let s = MoveSite {
            kind: MoveKind::R3,
            index: 3,
            pos: 1,
            variant: 0,
        };
        let out = apply_move(&w, &s).unwrap();
        assert_eq!(&out.events()[3..6], &[E::xp(2), E::xp(1), E::xp(2)]);
    }

    #[test]
    fn curls_change_writhe_by_one() {
        let strand = d(vec![E::leg(0), E::head(0)]);
        for v in 0..4 {
            let s = MoveSite {
                kind: MoveKind::R1Insert,
                index: 1,
                pos: 0,
                variant: v,
            };
            let od = OrientedDiagram::new(&apply_move(&strand, &s).unwrap());
            assert_eq!(od.writhe().abs(), 1);
            assert_eq!(od.rotation_number().doubled().abs(), 2);
        }
    }

    #[test]
    fn zero_steps_is_identity() {
        let w = d(vec![E::leg(0), E::cup(1), E::xp(0), E::cap(1), E::head(0)]);
        assert_eq!(random_equivalent(&w, 0, 7), w);
    }

    #[test]
    fn random_walk_is_deterministic_and_keeps_rotation() {
        let w = d(vec![E::leg(0), E::head(0)]);
        let a = random_equivalent(&w, 50, 11);
        assert_eq!(a, random_equivalent(&w, 50, 11));
        assert_eq!(OrientedDiagram::new(&a).rotation_number().doubled(), 0);
    }
}
