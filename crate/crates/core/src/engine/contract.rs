use std::collections::HashMap;

use crate::diagram::{Dir, EventKind, OrientedDiagram};
use crate::scalar::{LaurentPoly, Matrix};

use super::model::{dir_index, QuantumModel};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("endpoint at event {0} needs a fixed label")]
    UnlabelledEndpoint(usize),
    #[error("label {label} out of range for a model with {n} labels")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("frontier of {size} states exceeds the bound {bound} at level {level}")]
    FrontierBound {
        level: usize,
        size: usize,
        bound: usize,
    },
    #[error("enumeration would visit {slots} slots, above the bound {bound}")]
    OracleBound { slots: usize, bound: usize },
    #[error("diagram has more than two endpoints")]
    TooManyEndpoints,
}

/// Fixed labels for the endpoint strands of a tangle fragment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EndpointLabels {
    pub leg: usize,
    pub head: usize,
}

/// How the contraction treats an endpoint event.
#[derive(Clone, Copy, Debug)]
enum EndMode {
    Fixed(u8),
    /// Sum over the label and record it in the state tag.
    Record,
}

/// A contraction state: a tag (bottom basis index or recorded label) and the
/// labels on the current level.
type State = (u32, Vec<u8>);

/// Result of contracting a whole diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    /// 1×1 for closed diagrams; N×N with rows indexed by the label at the
    /// lower endpoint and columns by the label at the upper endpoint.
    pub matrix: Matrix,
    pub model: String,
    pub diagram_hash: u64,
    /// Directions at the (lower, upper) endpoints.
    pub endpoint_dirs: Option<(Dir, Dir)>,
    /// Largest number of simultaneous states seen.
    pub peak_frontier: usize,
}

pub(crate) fn index_of(labels: &[u8], n: usize) -> usize {
    labels.iter().fold(0, |acc, &l| acc * n + l as usize)
}

fn labels_of(mut idx: usize, width: usize, n: usize) -> Vec<u8> {
    let mut out = vec![0u8; width];
    for slot in out.iter_mut().rev() {
        *slot = (idx % n) as u8;
        idx /= n;
    }
    out
}

fn add_to(map: &mut HashMap<State, LaurentPoly>, key: State, w: LaurentPoly) {
    if w.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(v) => {
            *v += &w;
            if v.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, w);
        }
    }
}

/// Runs the states bottom to top through every event. `modes` holds the
/// treatment of the endpoint events in word order. Returns the final states
/// and the peak frontier size.
fn propagate(
    od: &OrientedDiagram,
    model: &QuantumModel,
    start: HashMap<State, LaurentPoly>,
    modes: &[EndMode],
    tags: usize,
) -> Result<(HashMap<State, LaurentPoly>, usize), EngineError> {
    let n = model.n;
    let mut states = start;
    let mut peak = states.len();
    let mut end_idx = 0;
    let max_w = od.widths().iter().copied().max().unwrap_or(0);
    for (i, e) in od.events().iter().enumerate() {
        let p = e.pos;
        let mut next: HashMap<State, LaurentPoly> = HashMap::with_capacity(states.len());
        match e.kind {
            EventKind::CrossPos | EventKind::CrossNeg => {
                let (l, r) = od.crossing_bottom_dirs(i).unwrap();
                let sc = model.sparse_crossing(e.kind, l, r);
                for ((tag, labels), amp) in states {
                    let inp = labels[p] as usize * n + labels[p + 1] as usize;
                    for (a, b, w) in &sc.by_input[inp] {
                        let mut nl = labels.clone();
                        nl[p] = *a;
                        nl[p + 1] = *b;
                        add_to(&mut next, (tag, nl), &amp * w);
                    }
                }
            }
            EventKind::Cup => {
                let (k, lp) = od.left_leg(i);
                let sp = &model.sparse_cup[dir_index(od.dir(k, lp))];
                for ((tag, labels), amp) in states {
                    for (a, b, w) in &sp.entries {
                        let mut nl = Vec::with_capacity(labels.len() + 2);
                        nl.extend_from_slice(&labels[..p]);
                        nl.push(*a);
                        nl.push(*b);
                        nl.extend_from_slice(&labels[p..]);
                        add_to(&mut next, (tag, nl), &amp * w);
                    }
                }
            }
            EventKind::Cap => {
                let (k, lp) = od.left_leg(i);
                let sp = &model.sparse_cap[dir_index(od.dir(k, lp))];
                for ((tag, labels), amp) in states {
                    let idx = labels[p] as usize * n + labels[p + 1] as usize;
                    if let Some(w) = &sp.lookup[idx] {
                        let mut nl = labels;
                        nl.drain(p..p + 2);
                        add_to(&mut next, (tag, nl), &amp * w);
                    }
                }
            }
            EventKind::Leg | EventKind::HeadDown => {
                let mode = *modes.get(end_idx).ok_or(EngineError::TooManyEndpoints)?;
                end_idx += 1;
                for ((tag, labels), amp) in states {
                    let choices: Vec<u8> = match mode {
                        EndMode::Fixed(l) => vec![l],
                        EndMode::Record => (0..n as u8).collect(),
                    };
                    for l in choices {
                        let mut nl = labels.clone();
                        nl.insert(p, l);
                        let nt = match mode {
                            EndMode::Fixed(_) => tag,
                            EndMode::Record => tag * n as u32 + l as u32,
                        };
                        add_to(&mut next, (nt, nl), amp.clone());
                    }
                }
            }
            EventKind::Head | EventKind::LegDown => {
                let mode = *modes.get(end_idx).ok_or(EngineError::TooManyEndpoints)?;
                end_idx += 1;
                for ((tag, mut labels), amp) in states {
                    let l = labels.remove(p);
                    match mode {
                        EndMode::Fixed(f) if f != l => {}
                        EndMode::Fixed(_) => add_to(&mut next, (tag, labels), amp),
                        EndMode::Record => {
                            add_to(&mut next, (tag * n as u32 + l as u32, labels), amp)
                        }
                    }
                }
            }
        }
        let bound = tags.saturating_mul(n.saturating_pow(max_w as u32));
        if next.len() > bound {
            return Err(EngineError::FrontierBound {
                level: i + 1,
                size: next.len(),
                bound,
            });
        }
        peak = peak.max(next.len());
        states = next;
    }
    Ok((states, peak))
}

fn endpoint_modes(
    od: &OrientedDiagram,
    labels: Option<EndpointLabels>,
    n: usize,
) -> Result<Vec<EndMode>, EngineError> {
    let mut modes = Vec::new();
    for (i, e) in od.events().iter().enumerate() {
        if !e.kind.is_endpoint() {
            continue;
        }
        let lab = labels.ok_or(EngineError::UnlabelledEndpoint(i))?;
        let l = if e.kind.is_leg() { lab.leg } else { lab.head };
        if l >= n {
            return Err(EngineError::LabelOutOfRange { label: l, n });
        }
        modes.push(EndMode::Fixed(l as u8));
    }
    Ok(modes)
}

/// Matrix of an oriented tangle: rows indexed by the labels on the top
/// boundary, columns by the labels on the bottom boundary, leftmost label
/// most significant. Endpoint strands inside the tangle carry fixed labels.
pub(crate) fn tangle_matrix_raw(
    od: &OrientedDiagram,
    model: &QuantumModel,
    labels: Option<EndpointLabels>,
) -> Result<Matrix, EngineError> {
    let n = model.n;
    let modes = endpoint_modes(od, labels, n)?;
    let b = od.bottom_width();
    let cols = n.pow(b as u32);
    let mut start = HashMap::with_capacity(cols);
    for t in 0..cols {
        start.insert((t as u32, labels_of(t, b, n)), LaurentPoly::one());
    }
    let (end, _) = propagate(od, model, start, &modes, cols)?;
    let rows = n.pow(od.top_width() as u32);
    let mut m = Matrix::zeros(rows, cols);
    for ((tag, top), w) in end {
        m.set(index_of(&top, n), tag as usize, w);
    }
    Ok(m)
}

/// Public tangle evaluation.
pub fn tangle_matrix(
    od: &OrientedDiagram,
    model: &QuantumModel,
    labels: Option<EndpointLabels>,
) -> Result<Matrix, EngineError> {
    tangle_matrix_raw(od, model, labels)
}

/// Contracts a whole diagram, level by level. The frontier never holds more
/// than N^w states, w the maximal width.
pub fn contract(
    od: &OrientedDiagram,
    model: &QuantumModel,
) -> Result<InvariantResult, EngineError> {
    let n = model.n;
    let ends: Vec<usize> = od
        .events()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.kind.is_endpoint())
        .map(|(i, _)| i)
        .collect();
    let hash = od.diagram().map_or(0, |d| d.hash64());
    let start = || {
        let mut s = HashMap::new();
        s.insert((0u32, Vec::new()), LaurentPoly::one());
        s
    };
    let (matrix, peak) = match ends.len() {
        0 => {
            let (end, peak) = propagate(od, model, start(), &[], 1)?;
            let v = end
                .get(&(0, Vec::new()))
                .cloned()
                .unwrap_or_else(LaurentPoly::zero);
            (Matrix::from_rows(vec![vec![v]]), peak)
        }
        2 => {
            let mut m = Matrix::zeros(n, n);
            let mut peak = 0;
            for a in 0..n {
                let modes = [EndMode::Fixed(a as u8), EndMode::Record];
                let (end, pk) = propagate(od, model, start(), &modes, 1)?;
                peak = peak.max(pk);
                for ((tag, _), w) in end {
                    m.set(a, tag as usize, w);
                }
            }
            (m, peak)
        }
        _ => return Err(EngineError::TooManyEndpoints),
    };
    Ok(InvariantResult {
        matrix,
        model: model.name.clone(),
        diagram_hash: hash,
        endpoint_dirs: od.endpoint_dirs(),
        peak_frontier: peak,
    })
}
