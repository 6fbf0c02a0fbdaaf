use crate::diagram::{Dir, EventKind, MorseEvent, OrientedDiagram, Tangle};
use crate::scalar::{LaurentPoly, Matrix};

use super::contract::tangle_matrix_raw;

/// Index of a direction in per-orientation tables.
pub(crate) fn dir_index(d: Dir) -> usize {
    match d {
        Dir::Up => 0,
        Dir::Down => 1,
    }
}

fn pattern_index(l: Dir, r: Dir) -> usize {
    2 * dir_index(l) + dir_index(r)
}

fn kind_index(k: EventKind) -> usize {
    match k {
        EventKind::CrossPos => 0,
        EventKind::CrossNeg => 1,
        _ => panic!("not a crossing"),
    }
}

/// Nonzero entries of an N²×N² crossing matrix grouped by input pair.
#[derive(Clone, Debug)]
pub(crate) struct SparseCrossing {
    /// For input pair index `x*N + y`, the list of (out_left, out_right, weight).
    pub by_input: Vec<Vec<(u8, u8, LaurentPoly)>>,
}

impl SparseCrossing {
    fn new(m: &Matrix, n: usize) -> Self {
        let mut by_input = vec![Vec::new(); n * n];
        for out in 0..n * n {
            for (inp, slot) in by_input.iter_mut().enumerate() {
                let w = m.get(out, inp);
                if !w.is_zero() {
                    slot.push(((out / n) as u8, (out % n) as u8, w.clone()));
                }
            }
        }
        SparseCrossing { by_input }
    }
}

/// Nonzero entries of an N×N cup or cap matrix.
#[derive(Clone, Debug)]
pub(crate) struct SparsePair {
    pub entries: Vec<(u8, u8, LaurentPoly)>,
    pub lookup: Vec<Option<LaurentPoly>>,
}

impl SparsePair {
    fn new(m: &Matrix, n: usize) -> Self {
        let mut entries = Vec::new();
        let mut lookup = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                let w = m.get(a, b);
                if !w.is_zero() {
                    entries.push((a as u8, b as u8, w.clone()));
                    lookup[a * n + b] = Some(w.clone());
                }
            }
        }
        SparsePair { entries, lookup }
    }
}

/// A state-sum model: index set of size N, cup and cap matrices for each
/// direction of their left leg, and R, R̄ for upward crossings. Matrices for
/// crossings whose strands do not both point up are synthesized by bending
/// one strand with a cup and a cap around an upward crossing.
///
/// Conventions: cup/cap entry (a, b) weighs left label a and right label b.
/// Crossing matrices have rows indexed by the top pair (tl, tr) and columns
/// by the bottom pair (bl, br), pair index `left*N + right`. `R` belongs to
/// `xp` and `R̄` to `xn`.
#[derive(Clone, Debug)]
pub struct QuantumModel {
    pub name: String,
    pub n: usize,
    /// Display/spin values of the labels 0..N.
    pub labels: Vec<i64>,
    pub oriented: bool,
    /// Indexed by the direction of the left leg (Up, Down).
    pub cup: [Matrix; 2],
    pub cap: [Matrix; 2],
    pub r: Matrix,
    pub rbar: Matrix,
    /// [kind][pattern] crossing matrices, pattern = bottom (left, right) dirs.
    crossings: Vec<Vec<Matrix>>,
    pub(crate) sparse_cross: Vec<Vec<SparseCrossing>>,
    pub(crate) sparse_cup: [SparsePair; 2],
    pub(crate) sparse_cap: [SparsePair; 2],
}

impl QuantumModel {
    /// Unoriented model: the same cup, cap and crossing matrices whatever
    /// the directions.
    pub fn unoriented(
        name: &str,
        labels: Vec<i64>,
        cup: Matrix,
        cap: Matrix,
        r: Matrix,
        rbar: Matrix,
    ) -> Self {
        let crossings = vec![vec![r.clone(); 4], vec![rbar.clone(); 4]];
        Self::assemble(
            name,
            labels,
            false,
            [cup.clone(), cup],
            [cap.clone(), cap],
            r,
            rbar,
            crossings,
        )
    }

    /// Oriented model; mixed and downward crossings are synthesized.
    pub fn oriented(
        name: &str,
        labels: Vec<i64>,
        cup: [Matrix; 2],
        cap: [Matrix; 2],
        r: Matrix,
        rbar: Matrix,
    ) -> Self {
        let n = labels.len();
        let zero = Matrix::zeros(n * n, n * n);
        let mut crossings = vec![vec![zero.clone(); 4], vec![zero; 4]];
        crossings[0][pattern_index(Dir::Up, Dir::Up)] = r.clone();
        crossings[1][pattern_index(Dir::Up, Dir::Up)] = rbar.clone();
        let mut m = Self::assemble(name, labels, true, cup, cap, r, rbar, crossings);
        // Each recipe only needs patterns computed before it.
        for (l, rr) in [
            (Dir::Down, Dir::Up),
            (Dir::Up, Dir::Down),
            (Dir::Down, Dir::Down),
        ] {
            for kind in [EventKind::CrossPos, EventKind::CrossNeg] {
                let t = m.rotated_crossing(kind, l, rr);
                m.crossings[kind_index(kind)][pattern_index(l, rr)] = t;
            }
            m.rebuild_sparse();
        }
        m
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        name: &str,
        labels: Vec<i64>,
        oriented: bool,
        cup: [Matrix; 2],
        cap: [Matrix; 2],
        r: Matrix,
        rbar: Matrix,
        crossings: Vec<Vec<Matrix>>,
    ) -> Self {
        let n = labels.len();
        assert!((1..=16).contains(&n), "index set size must be 1..=16");
        for m in cup.iter().chain(cap.iter()) {
            assert_eq!((m.rows(), m.cols()), (n, n), "cup/cap must be N×N");
        }
        for m in [&r, &rbar] {
            assert_eq!((m.rows(), m.cols()), (n * n, n * n), "R must be N²×N²");
        }
        let sparse_cup = [SparsePair::new(&cup[0], n), SparsePair::new(&cup[1], n)];
        let sparse_cap = [SparsePair::new(&cap[0], n), SparsePair::new(&cap[1], n)];
        let mut m = QuantumModel {
            name: name.to_string(),
            n,
            labels,
            oriented,
            cup,
            cap,
            r,
            rbar,
            crossings,
            sparse_cross: Vec::new(),
            sparse_cup,
            sparse_cap,
        };
        m.rebuild_sparse();
        m
    }

    fn rebuild_sparse(&mut self) {
        let n = self.n;
        self.sparse_cross = self
            .crossings
            .iter()
            .map(|row| row.iter().map(|m| SparseCrossing::new(m, n)).collect())
            .collect();
    }

    /// The crossing with bottom directions (l, r) written as a bent upward
    /// crossing: the downward strand is pulled around a cup and a cap.
    fn rotated_crossing(&self, kind: EventKind, l: Dir, r: Dir) -> Matrix {
        let inner = kind.switched();
        let events = if l == Dir::Down {
            vec![
                MorseEvent::cup(2),
                MorseEvent::new(inner, 1),
                MorseEvent::cap(0),
            ]
        } else {
            vec![
                MorseEvent::cup(0),
                MorseEvent::new(inner, 1),
                MorseEvent::cap(2),
            ]
        };
        let t = Tangle::new(2, events).expect("recipe word is valid");
        let od = OrientedDiagram::tangle(&t, &[l, r], &[]).expect("recipe word orients");
        tangle_matrix_raw(&od, self, None).expect("recipe contracts")
    }

    /// The matrix used for a crossing of this kind with these bottom directions.
    pub fn crossing_matrix(&self, kind: EventKind, l: Dir, r: Dir) -> &Matrix {
        &self.crossings[kind_index(kind)][pattern_index(l, r)]
    }

    pub(crate) fn sparse_crossing(&self, kind: EventKind, l: Dir, r: Dir) -> &SparseCrossing {
        &self.sparse_cross[kind_index(kind)][pattern_index(l, r)]
    }

    /// Replaces R (and re-derives every dependent matrix); used to build
    /// deliberately broken models in tests.
    pub fn with_r(&self, r: Matrix) -> Self {
        if self.oriented {
            Self::oriented(
                &self.name,
                self.labels.clone(),
                self.cup.clone(),
                self.cap.clone(),
                r,
                self.rbar.clone(),
            )
        } else {
            Self::unoriented(
                &self.name,
                self.labels.clone(),
                self.cup[0].clone(),
                self.cap[0].clone(),
                r,
                self.rbar.clone(),
            )
        }
    }
}
