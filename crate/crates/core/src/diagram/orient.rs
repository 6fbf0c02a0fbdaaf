use std::fmt;

use super::{level_widths, EventKind, MorseDiagram, MorseEvent, Tangle, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Up,
    Down,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
        }
    }
}

/// A half-integer stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// The knotoid component, from leg to head.
    Open,
    /// A closed curve.
    Closed,
    /// A fragment component touching the boundary of a tangle.
    Arc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    pub kind: ComponentKind,
    /// Sum of the signs of the component's cups and caps.
    pub extremum_sign_sum: i64,
    /// Slots of the component in traversal order along its orientation.
    pub slots: Vec<(usize, usize)>,
}

impl ComponentInfo {
    pub fn rotation(&self) -> HalfInt {
        HalfInt(self.extremum_sign_sum)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OrientError {
    #[error(transparent)]
    Invalid(#[from] Violation),
    #[error("expected {expected} bottom directions, got {got}")]
    BottomMismatch { expected: usize, got: usize },
    #[error("knotoid component does not run from a leg to a head")]
    BadEndpoints,
    #[error("orientation hint contradicts a forced direction at level {0}, position {1}")]
    HintConflict(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Motion {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Stop {
    /// Came back to the starting slot.
    Loop,
    /// Hit the bottom or top boundary.
    Boundary,
    /// Reached the dot of the endpoint event with this index.
    Endpoint(usize),
}

/// One slot visited during a walk together with the direction of motion.
pub(crate) type Step = (usize, usize, Motion);

/// Cursor-free slot arithmetic over a word.
pub(crate) struct Slots<'a> {
    pub events: &'a [MorseEvent],
    pub widths: Vec<usize>,
}

impl<'a> Slots<'a> {
    pub fn new(bottom: usize, events: &'a [MorseEvent]) -> Result<Self, Violation> {
        Ok(Slots {
            events,
            widths: level_widths(bottom, events)?,
        })
    }

    /// The next slot from (k, p) moving in direction `m`, or the reason the
    /// walk ends there.
    pub fn next(&self, k: usize, p: usize, m: Motion) -> Result<Step, Stop> {
        match m {
            Motion::Up => {
                if k == self.events.len() {
                    return Err(Stop::Boundary);
                }
                let e = self.events[k];
                let (q, i, o) = (e.pos, e.kind.inputs(), e.kind.outputs());
                if p < q {
                    return Ok((k + 1, p, Motion::Up));
                }
                if p >= q + i {
                    return Ok((k + 1, p - i + o, Motion::Up));
                }
                match e.kind {
                    EventKind::Cap => Ok((k, 2 * q + 1 - p, Motion::Down)),
                    EventKind::CrossPos | EventKind::CrossNeg => {
                        Ok((k + 1, 2 * q + 1 - p, Motion::Up))
                    }
                    _ => Err(Stop::Endpoint(k)),
                }
            }
            Motion::Down => {
                if k == 0 {
                    return Err(Stop::Boundary);
                }
                let e = self.events[k - 1];
                let (q, i, o) = (e.pos, e.kind.inputs(), e.kind.outputs());
                if p < q {
                    return Ok((k - 1, p, Motion::Down));
                }
                if p >= q + o {
                    return Ok((k - 1, p - o + i, Motion::Down));
                }
                match e.kind {
                    EventKind::Cup => Ok((k, 2 * q + 1 - p, Motion::Up)),
                    EventKind::CrossPos | EventKind::CrossNeg => {
                        Ok((k - 1, 2 * q + 1 - p, Motion::Down))
                    }
                    _ => Err(Stop::Endpoint(k - 1)),
                }
            }
        }
    }

    /// Walks from a slot until returning to it or stopping.
    pub fn walk(&self, k: usize, p: usize, m: Motion) -> (Vec<Step>, Stop) {
        let mut steps = vec![(k, p, m)];
        let (mut ck, mut cp, mut cm) = (k, p, m);
        loop {
            match self.next(ck, cp, cm) {
                Ok((nk, np, nm)) => {
                    if (nk, np, nm) == (k, p, m) {
                        return (steps, Stop::Loop);
                    }
                    steps.push((nk, np, nm));
                    (ck, cp, cm) = (nk, np, nm);
                }
                Err(s) => return (steps, s),
            }
        }
    }
}

fn motion_dir(m: Motion) -> Dir {
    match m {
        Motion::Up => Dir::Up,
        Motion::Down => Dir::Down,
    }
}

/// A word together with a direction for every slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedDiagram {
    bottom: usize,
    events: Vec<MorseEvent>,
    widths: Vec<usize>,
    dirs: Vec<Vec<Dir>>,
    comp_of: Vec<Vec<usize>>,
    components: Vec<ComponentInfo>,
}

impl OrientedDiagram {
    /// Orients a diagram with the default convention for closed components.
    pub fn new(d: &MorseDiagram) -> Self {
        Self::with_hints(d, &[]).expect("valid diagram orients")
    }

    /// Orients a diagram; a closed component containing a hinted slot gets the
    /// hinted direction there (first matching hint wins), otherwise the default.
    pub fn with_hints(
        d: &MorseDiagram,
        hints: &[(usize, usize, Dir)],
    ) -> Result<Self, OrientError> {
        Self::build(0, d.events(), &[], hints, true)
    }

    /// Orients a diagram with the closed components listed in `flips` (by
    /// index in discovery order) reversed from the default.
    pub fn with_flips(d: &MorseDiagram, flips: &[usize]) -> Self {
        let base = Self::new(d);
        let mut hints = Vec::new();
        for &c in flips {
            if let Some(info) = base.components.get(c) {
                if info.kind == ComponentKind::Closed {
                    let (k, p) = info.slots[0];
                    hints.push((k, p, base.dirs[k][p].flip()));
                }
            }
        }
        Self::with_hints(d, &hints).expect("flip hints are consistent")
    }

    /// Orients an open tangle with the given directions on its bottom strands.
    pub fn tangle(
        t: &Tangle,
        bottom: &[Dir],
        hints: &[(usize, usize, Dir)],
    ) -> Result<Self, OrientError> {
        Self::build(t.bottom, &t.events, bottom, hints, false)
    }

    fn build(
        bottom: usize,
        events: &[MorseEvent],
        bottom_dirs: &[Dir],
        hints: &[(usize, usize, Dir)],
        closed_word: bool,
    ) -> Result<Self, OrientError> {
        if bottom_dirs.len() != bottom {
            return Err(OrientError::BottomMismatch {
                expected: bottom,
                got: bottom_dirs.len(),
            });
        }
        let slots = Slots::new(bottom, events)?;
        let widths = slots.widths.clone();
        let mut dirs: Vec<Vec<Option<Dir>>> = widths.iter().map(|&w| vec![None; w]).collect();
        let mut comp_of: Vec<Vec<usize>> = widths.iter().map(|&w| vec![usize::MAX; w]).collect();
        let mut components: Vec<ComponentInfo> = Vec::new();

        // Assigns directions along a path given in orientation order.
        let commit = |path: Vec<(usize, usize, Dir)>,
                      kind: ComponentKind,
                      dirs: &mut Vec<Vec<Option<Dir>>>,
                      comp_of: &mut Vec<Vec<usize>>,
                      components: &mut Vec<ComponentInfo>| {
            let id = components.len();
            let mut order = Vec::with_capacity(path.len());
            for (k, p, d) in path {
                dirs[k][p] = Some(d);
                comp_of[k][p] = id;
                order.push((k, p));
            }
            components.push(ComponentInfo {
                kind,
                extremum_sign_sum: 0,
                slots: order,
            });
        };

        // The knotoid component.
        if let Some(li) = events.iter().position(|e| e.kind.is_leg()) {
            let e = events[li];
            let (k, m) = match e.kind {
                EventKind::Leg => (li + 1, Motion::Up),
                _ => (li, Motion::Down),
            };
            let (steps, stop) = slots.walk(k, e.pos, m);
            let ok = match stop {
                Stop::Endpoint(j) => events[j].kind.is_head(),
                Stop::Boundary => !closed_word,
                Stop::Loop => false,
            };
            if !ok {
                return Err(OrientError::BadEndpoints);
            }
            let kind = if matches!(stop, Stop::Boundary) {
                ComponentKind::Arc
            } else {
                ComponentKind::Open
            };
            let path = steps
                .into_iter()
                .map(|(k, p, m)| (k, p, motion_dir(m)))
                .collect();
            commit(path, kind, &mut dirs, &mut comp_of, &mut components);
        }

        // Arcs entering through the bottom boundary.
        for (p, &d) in bottom_dirs.iter().enumerate() {
            if dirs[0][p].is_some() {
                if dirs[0][p] != Some(d) {
                    return Err(OrientError::HintConflict(0, p));
                }
                continue;
            }
            let path = Self::component_path(&slots, 0, p, d);
            commit(
                path,
                ComponentKind::Arc,
                &mut dirs,
                &mut comp_of,
                &mut components,
            );
        }

        // Everything else, in bottom-to-top, left-to-right discovery order.
        for k in 0..widths.len() {
            for p in 0..widths[k] {
                if dirs[k][p].is_some() {
                    continue;
                }
                // Lowest-leftmost slot of a new component: a left cup leg,
                // directed Down by default (counterclockwise at birth).
                let (fwd, stop) = slots.walk(k, p, Motion::Up);
                let mut members: Vec<(usize, usize)> =
                    fwd.iter().map(|&(a, b, _)| (a, b)).collect();
                if stop != Stop::Loop {
                    let (back, _) = slots.walk(k, p, Motion::Down);
                    members.extend(back.iter().map(|&(a, b, _)| (a, b)));
                }
                let mut start_dir = Dir::Down;
                for &(hk, hp, hd) in hints {
                    if hk < widths.len() && hp < widths[hk] && members.contains(&(hk, hp)) {
                        // Direction of the hinted slot under "start slot Up".
                        let up = Self::component_path(&slots, k, p, Dir::Up);
                        let along = up
                            .iter()
                            .find(|&&(a, b, _)| (a, b) == (hk, hp))
                            .map(|&(_, _, d)| d)
                            .unwrap();
                        start_dir = if along == hd { Dir::Up } else { Dir::Down };
                        break;
                    }
                }
                let kind = if stop == Stop::Loop {
                    ComponentKind::Closed
                } else {
                    ComponentKind::Arc
                };
                let path = Self::component_path(&slots, k, p, start_dir);
                commit(path, kind, &mut dirs, &mut comp_of, &mut components);
            }
        }

        let dirs: Vec<Vec<Dir>> = dirs
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|d| d.expect("every slot oriented"))
                    .collect()
            })
            .collect();

        let mut od = OrientedDiagram {
            bottom,
            events: events.to_vec(),
            widths,
            dirs,
            comp_of,
            components,
        };
        for (i, e) in events.iter().enumerate() {
            if e.kind.is_extremum() {
                let s = od.extremum_sign(i).unwrap() as i64;
                let (k, p) = od.left_leg(i);
                let c = od.comp_of[k][p];
                od.components[c].extremum_sign_sum += s;
            }
        }
        Ok(od)
    }

    /// The whole component through (k, p), listed in orientation order, with
    /// (k, p) directed `d`.
    fn component_path(slots: &Slots, k: usize, p: usize, d: Dir) -> Vec<(usize, usize, Dir)> {
        let m = match d {
            Dir::Up => Motion::Up,
            Dir::Down => Motion::Down,
        };
        let (fwd, stop) = slots.walk(k, p, m);
        let mut path: Vec<(usize, usize, Dir)> = Vec::new();
        if stop != Stop::Loop {
            let back_m = match m {
                Motion::Up => Motion::Down,
                Motion::Down => Motion::Up,
            };
            let (back, _) = slots.walk(k, p, back_m);
            for &(a, b, mm) in back.iter().skip(1).rev() {
                path.push((a, b, motion_dir(mm).flip()));
            }
        }
        path.extend(fwd.into_iter().map(|(a, b, mm)| (a, b, motion_dir(mm))));
        path
    }

    pub fn events(&self) -> &[MorseEvent] {
        &self.events
    }

    pub fn bottom_width(&self) -> usize {
        self.bottom
    }

    pub fn top_width(&self) -> usize {
        *self.widths.last().unwrap()
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn is_closed_word(&self) -> bool {
        self.bottom == 0 && self.top_width() == 0
    }

    /// The underlying diagram, for words with empty boundary.
    pub fn diagram(&self) -> Option<MorseDiagram> {
        if self.is_closed_word() {
            MorseDiagram::new(self.events.clone()).ok()
        } else {
            None
        }
    }

    pub fn dir(&self, level: usize, pos: usize) -> Dir {
        self.dirs[level][pos]
    }

    pub fn level_dirs(&self, level: usize) -> &[Dir] {
        &self.dirs[level]
    }

    pub fn component_of(&self, level: usize, pos: usize) -> usize {
        self.comp_of[level][pos]
    }

    pub fn components(&self) -> &[ComponentInfo] {
        &self.components
    }

    /// Index of the knotoid component, if any.
    pub fn open_component(&self) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.kind == ComponentKind::Open)
    }

    /// The slot just left of an extremum: for a cap at event i the left leg
    /// lives on level i, for a cup on level i+1.
    pub fn left_leg(&self, i: usize) -> (usize, usize) {
        let e = self.events[i];
        match e.kind {
            EventKind::Cap => (i, e.pos),
            _ => (i + 1, e.pos),
        }
    }

    /// +1 when the left leg of the cup/cap runs Down (counterclockwise turn),
    /// −1 when it runs Up.
    pub fn extremum_sign(&self, i: usize) -> Option<i8> {
        if !self.events[i].kind.is_extremum() {
            return None;
        }
        let (k, p) = self.left_leg(i);
        Some(match self.dirs[k][p] {
            Dir::Down => 1,
            Dir::Up => -1,
        })
    }

    /// Directions of the bottom-left and bottom-right strands of a crossing.
    pub fn crossing_bottom_dirs(&self, i: usize) -> Option<(Dir, Dir)> {
        let e = self.events[i];
        e.kind
            .is_crossing()
            .then(|| (self.dirs[i][e.pos], self.dirs[i][e.pos + 1]))
    }

    /// Right-hand-rule sign of a crossing.
    pub fn crossing_sign(&self, i: usize) -> Option<i8> {
        let e = self.events[i];
        let (l, r) = self.crossing_bottom_dirs(i)?;
        let g = if e.kind == EventKind::CrossPos { 1 } else { -1 };
        Some(if l == r { g } else { -g })
    }

    pub fn rotation_number(&self) -> HalfInt {
        HalfInt(self.components.iter().map(|c| c.extremum_sign_sum).sum())
    }

    pub fn component_rotations(&self) -> Vec<HalfInt> {
        self.components.iter().map(|c| c.rotation()).collect()
    }

    pub fn writhe(&self) -> i64 {
        (0..self.events.len())
            .filter_map(|i| self.crossing_sign(i))
            .map(|s| s as i64)
            .sum()
    }

    /// Directions of the strands at the lower and the higher endpoint.
    pub fn endpoint_dirs(&self) -> Option<(Dir, Dir)> {
        let mut found = Vec::new();
        for (i, e) in self.events.iter().enumerate() {
            let d = match e.kind {
                EventKind::Leg | EventKind::HeadDown => self.dirs[i + 1][e.pos],
                EventKind::Head | EventKind::LegDown => self.dirs[i][e.pos],
                _ => continue,
            };
            found.push(d);
        }
        (found.len() == 2).then(|| (found[0], found[1]))
    }

    /// Direction hints for every slot outside the event range `lo..hi`, with
    /// levels above the range shifted by `shift` (the change in event count),
    /// for re-orienting a word after a local rewrite.
    pub fn hints_outside(&self, lo: usize, hi: usize, shift: isize) -> Vec<(usize, usize, Dir)> {
        let mut out = Vec::new();
        for k in 0..self.widths.len() {
            let nk = if k <= lo {
                k as isize
            } else if k >= hi {
                k as isize + shift
            } else {
                continue;
            };
            for p in 0..self.widths[k] {
                out.push((nk as usize, p, self.dirs[k][p]));
            }
        }
        out
    }

    /// The sub-word `lo..hi` as an oriented tangle with inherited directions.
    pub fn slice(&self, lo: usize, hi: usize) -> OrientedDiagram {
        let events = self.events[lo..hi].to_vec();
        let widths = self.widths[lo..=hi].to_vec();
        let dirs = self.dirs[lo..=hi].to_vec();
        let comp_of = self.comp_of[lo..=hi].to_vec();
        OrientedDiagram {
            bottom: widths[0],
            events,
            widths,
            dirs,
            comp_of,
            components: self.components.clone(),
        }
    }
}

pub fn orient(d: &MorseDiagram) -> OrientedDiagram {
    OrientedDiagram::new(d)
}
