//! Morse words: validation, orientation, rotation numbers, Gauss codes,
//! crossing signs and parity.
//!
//! A word lists events from bottom to top. Level `k` is the horizontal slice
//! between event `k-1` and event `k`; level 0 is the bottom boundary and
//! level `events.len()` the top. A strand position at a level is a *slot*.
//!
//! ```text
//!   cap p        xp p          xn p        cup p
//!   ___           \ /           \ /
//!  /   \           /             \         \___/
//!  p  p+1         / \           / \        p  p+1
//!               p   p+1       p   p+1
//! ```
//!
//! `xp` is the crossing whose bottom-left to top-right strand is over.
//! Endpoints come in four shapes: `leg`/`head` are dots at the bottom/top of
//! an upward strand; `legdown` is a leg whose strand leaves downward (dot on
//! top of the strand below it) and `headdown` a head reached from above (dot
//! at the bottom of the strand above it).

mod gauss;
mod orient;

use std::fmt;

pub use gauss::GaussError;
pub use gauss::{crossing_parity, GaussCode, GaussEntry, Parity, Passage};
pub use orient::{
    orient, ComponentInfo, ComponentKind, Dir, HalfInt, OrientError, OrientedDiagram,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    Leg,
    Head,
    LegDown,
    HeadDown,
    Cup,
    Cap,
    CrossPos,
    CrossNeg,
}

impl EventKind {
    /// Strands consumed from the level below.
    pub fn inputs(self) -> usize {
        match self {
            EventKind::Leg | EventKind::HeadDown | EventKind::Cup => 0,
            EventKind::Head | EventKind::LegDown => 1,
            EventKind::Cap | EventKind::CrossPos | EventKind::CrossNeg => 2,
        }
    }

    /// Strands produced on the level above.
    pub fn outputs(self) -> usize {
        match self {
            EventKind::Head | EventKind::LegDown | EventKind::Cap => 0,
            EventKind::Leg | EventKind::HeadDown => 1,
            EventKind::Cup | EventKind::CrossPos | EventKind::CrossNeg => 2,
        }
    }

    pub fn width_change(self) -> isize {
        self.outputs() as isize - self.inputs() as isize
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, EventKind::CrossPos | EventKind::CrossNeg)
    }

    pub fn is_extremum(self) -> bool {
        matches!(self, EventKind::Cup | EventKind::Cap)
    }

    pub fn is_endpoint(self) -> bool {
        matches!(
            self,
            EventKind::Leg | EventKind::Head | EventKind::LegDown | EventKind::HeadDown
        )
    }

    pub fn is_leg(self) -> bool {
        matches!(self, EventKind::Leg | EventKind::LegDown)
    }

    pub fn is_head(self) -> bool {
        matches!(self, EventKind::Head | EventKind::HeadDown)
    }

    /// The crossing with the other strand on top.
    pub fn switched(self) -> EventKind {
        match self {
            EventKind::CrossPos => EventKind::CrossNeg,
            EventKind::CrossNeg => EventKind::CrossPos,
            k => k,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            EventKind::Leg => "leg",
            EventKind::Head => "head",
            EventKind::LegDown => "legdown",
            EventKind::HeadDown => "headdown",
            EventKind::Cup => "cup",
            EventKind::Cap => "cap",
            EventKind::CrossPos => "xp",
            EventKind::CrossNeg => "xn",
        }
    }

    pub fn from_token(s: &str) -> Option<EventKind> {
        Some(match s {
            "leg" => EventKind::Leg,
            "head" => EventKind::Head,
            "legdown" => EventKind::LegDown,
            "headdown" => EventKind::HeadDown,
            "cup" => EventKind::Cup,
            "cap" => EventKind::Cap,
            "xp" => EventKind::CrossPos,
            "xn" => EventKind::CrossNeg,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorseEvent {
    pub kind: EventKind,
    pub pos: usize,
}

impl MorseEvent {
    pub fn new(kind: EventKind, pos: usize) -> Self {
        MorseEvent { kind, pos }
    }
    pub fn leg(pos: usize) -> Self {
        Self::new(EventKind::Leg, pos)
    }
    pub fn head(pos: usize) -> Self {
        Self::new(EventKind::Head, pos)
    }
    pub fn leg_down(pos: usize) -> Self {
        Self::new(EventKind::LegDown, pos)
    }
    pub fn head_down(pos: usize) -> Self {
        Self::new(EventKind::HeadDown, pos)
    }
    pub fn cup(pos: usize) -> Self {
        Self::new(EventKind::Cup, pos)
    }
    pub fn cap(pos: usize) -> Self {
        Self::new(EventKind::Cap, pos)
    }
    pub fn xp(pos: usize) -> Self {
        Self::new(EventKind::CrossPos, pos)
    }
    pub fn xn(pos: usize) -> Self {
        Self::new(EventKind::CrossNeg, pos)
    }

    /// Whether the event is legal on a level of width `w`.
    pub fn fits(&self, w: usize) -> bool {
        self.pos + self.kind.inputs() <= w
    }
}

impl fmt::Display for MorseEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind.token(), self.pos)
    }
}

impl fmt::Debug for MorseEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ViolationKind {
    #[error("width underflow")]
    Underflow,
    #[error("position {pos} out of range at width {width}")]
    BadPosition { pos: usize, width: usize },
    #[error("diagram ends with width {0}, expected {1}")]
    OpenTop(usize, usize),
    #[error("more than one leg")]
    ExtraLeg,
    #[error("more than one head")]
    ExtraHead,
    #[error("leg and head counts differ")]
    UnmatchedEndpoint,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("event {event}: {kind}")]
pub struct Violation {
    /// Index of the first offending event (`events.len()` for end-of-word checks).
    pub event: usize,
    pub kind: ViolationKind,
}

/// Running widths of a word starting at width `bottom`: entry k is the width
/// of level k.
pub fn level_widths(bottom: usize, events: &[MorseEvent]) -> Result<Vec<usize>, Violation> {
    let mut w = bottom;
    let mut out = Vec::with_capacity(events.len() + 1);
    out.push(w);
    for (i, e) in events.iter().enumerate() {
        if e.kind.inputs() > w {
            return Err(Violation {
                event: i,
                kind: ViolationKind::Underflow,
            });
        }
        if !e.fits(w) {
            return Err(Violation {
                event: i,
                kind: ViolationKind::BadPosition {
                    pos: e.pos,
                    width: w,
                },
            });
        }
        w = w + e.kind.outputs() - e.kind.inputs();
        out.push(w);
    }
    Ok(out)
}

fn check_endpoints(events: &[MorseEvent], require_pair: bool) -> Result<(), Violation> {
    let mut legs = 0;
    let mut heads = 0;
    for (i, e) in events.iter().enumerate() {
        if e.kind.is_leg() {
            legs += 1;
            if legs > 1 {
                return Err(Violation {
                    event: i,
                    kind: ViolationKind::ExtraLeg,
                });
            }
        }
        if e.kind.is_head() {
            heads += 1;
            if heads > 1 {
                return Err(Violation {
                    event: i,
                    kind: ViolationKind::ExtraHead,
                });
            }
        }
    }
    if require_pair && legs != heads {
        return Err(Violation {
            event: events.len(),
            kind: ViolationKind::UnmatchedEndpoint,
        });
    }
    Ok(())
}

/// A validated Morse word of a closed link diagram or a (multi-)knotoid
/// diagram: width starts and ends at 0, at most one leg and one head.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MorseDiagram {
    events: Vec<MorseEvent>,
}

impl MorseDiagram {
    pub fn new(events: Vec<MorseEvent>) -> Result<Self, Violation> {
        validate(&events)?;
        Ok(MorseDiagram { events })
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        MorseDiagram { events: Vec::new() }
    }

    pub fn events(&self) -> &[MorseEvent] {
        &self.events
    }

    pub fn into_events(self) -> Vec<MorseEvent> {
        self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn widths(&self) -> Vec<usize> {
        level_widths(0, &self.events).expect("validated")
    }

    pub fn max_width(&self) -> usize {
        self.widths().into_iter().max().unwrap_or(0)
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.kind.is_crossing()).count()
    }

    pub fn is_knotoid(&self) -> bool {
        self.events.iter().any(|e| e.kind.is_leg())
    }

    pub fn as_tangle(&self) -> Tangle {
        Tangle {
            bottom: 0,
            events: self.events.clone(),
        }
    }

    /// Stable 64-bit FNV-1a hash of the printed word.
    pub fn hash64(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        for e in &self.events {
            for b in e.to_string().bytes().chain(std::iter::once(b'\n')) {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        }
        h
    }
}

impl fmt::Display for MorseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MorseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.events.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Checks every [`MorseDiagram`] invariant, reporting the first offending event.
pub fn validate(events: &[MorseEvent]) -> Result<(), Violation> {
    let w = level_widths(0, events)?;
    let top = *w.last().unwrap();
    if top != 0 {
        return Err(Violation {
            event: events.len(),
            kind: ViolationKind::OpenTop(top, 0),
        });
    }
    check_endpoints(events, true)
}

/// An open word with `bottom` input strands, used for fragments of diagrams.
/// At most one leg and one head may occur.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tangle {
    pub bottom: usize,
    pub events: Vec<MorseEvent>,
}

impl Tangle {
    pub fn new(bottom: usize, events: Vec<MorseEvent>) -> Result<Self, Violation> {
        level_widths(bottom, &events)?;
        check_endpoints(&events, false)?;
        Ok(Tangle { bottom, events })
    }

    pub fn widths(&self) -> Vec<usize> {
        level_widths(self.bottom, &self.events).expect("validated")
    }

    pub fn top(&self) -> usize {
        *self.widths().last().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(validate(&[MorseEvent::leg(0), MorseEvent::head(0)]).is_ok());
        assert!(validate(&[MorseEvent::cup(0), MorseEvent::cap(0)]).is_ok());
        let v = validate(&[MorseEvent::cap(0)]).unwrap_err();
        assert_eq!(v.event, 0);
        assert_eq!(v.kind, ViolationKind::Underflow);
        assert!(validate(&[]).is_ok());
    }

    #[test]
    fn positions_and_endpoints() {
        let v = validate(&[MorseEvent::cup(1)]).unwrap_err();
        assert_eq!(v.kind, ViolationKind::BadPosition { pos: 1, width: 0 });
        let v = validate(&[MorseEvent::cup(0), MorseEvent::xp(1)]).unwrap_err();
        assert_eq!(v.event, 1);
        let v = validate(&[MorseEvent::leg(0)]).unwrap_err();
        assert_eq!(v.kind, ViolationKind::OpenTop(1, 0));
        let v = validate(&[
            MorseEvent::leg(0),
            MorseEvent::leg(0),
            MorseEvent::head(0),
            MorseEvent::head(0),
        ])
        .unwrap_err();
        assert_eq!(v.kind, ViolationKind::ExtraLeg);
        let v =
            validate(&[MorseEvent::cup(0), MorseEvent::head(0), MorseEvent::head(0)]).unwrap_err();
        assert_eq!(v.kind, ViolationKind::ExtraHead);
    }
}
