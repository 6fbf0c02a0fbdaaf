use std::fmt;

use crate::diagram::{Dir, EventKind, MorseEvent as E, OrientedDiagram, Tangle};
use crate::scalar::Matrix;

use super::contract::tangle_matrix_raw;
use super::model::QuantumModel;

/// Outcome of one family of identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Indices locating the first failure: the case number within the
    /// family followed by the differing (row, column).
    pub witness: Option<Vec<usize>>,
    pub cases: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub model: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model {}", self.model)?;
        for c in &self.checks {
            let status = if c.passed { "ok" } else { "FAIL" };
            write!(f, "  {:<24} {:>4} cases  {}", c.name, c.cases, status)?;
            if let Some(w) = &c.witness {
                let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, "  at ({})", parts.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

struct Family {
    name: &'static str,
    cases: usize,
    witness: Option<Vec<usize>>,
}

impl Family {
    fn new(name: &'static str) -> Self {
        Family {
            name,
            cases: 0,
            witness: None,
        }
    }

    fn compare(&mut self, a: &Matrix, b: &Matrix) {
        let case = self.cases;
        self.cases += 1;
        if self.witness.is_none() {
            if let Some((i, j)) = a.first_difference(b) {
                self.witness = Some(vec![case, i, j]);
            }
        }
    }

    fn fail(&mut self, idx: Vec<usize>) {
        self.cases += 1;
        if self.witness.is_none() {
            self.witness = Some(idx);
        }
    }

    fn pass(&mut self) {
        self.cases += 1;
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            passed: self.witness.is_none(),
            witness: self.witness,
            cases: self.cases,
        }
    }
}

fn all_dirs(width: usize) -> Vec<Vec<Dir>> {
    (0..1usize << width)
        .map(|bits| {
            (0..width)
                .map(|k| {
                    if bits >> (width - 1 - k) & 1 == 1 {
                        Dir::Down
                    } else {
                        Dir::Up
                    }
                })
                .collect()
        })
        .collect()
}

/// Matrices of two words on the same boundary for every orientable choice of
/// bottom directions; pairs whose orientation fails are skipped.
fn tangle_pairs(
    model: &QuantumModel,
    bottom: usize,
    lhs: &[E],
    rhs: &[E],
) -> Vec<(Matrix, Matrix)> {
    let tl = Tangle::new(bottom, lhs.to_vec()).expect("check word is valid");
    let tr = Tangle::new(bottom, rhs.to_vec()).expect("check word is valid");
    let mut out = Vec::new();
    for dirs in all_dirs(bottom) {
        let (Ok(ol), Ok(or)) = (
            OrientedDiagram::tangle(&tl, &dirs, &[]),
            OrientedDiagram::tangle(&tr, &dirs, &[]),
        ) else {
            continue;
        };
        // Both sides must carry the same directions on the top boundary.
        if ol.level_dirs(lhs.len()) != or.level_dirs(rhs.len()) {
            continue;
        }
        let ml = tangle_matrix_raw(&ol, model, None).expect("check word contracts");
        let mr = tangle_matrix_raw(&or, model, None).expect("check word contracts");
        out.push((ml, mr));
    }
    out
}

fn identity_tangle(model: &QuantumModel, bottom: usize) -> Matrix {
    Matrix::identity(model.n.pow(bottom as u32))
}

const KINDS: [EventKind; 2] = [EventKind::CrossPos, EventKind::CrossNeg];

/// Checks the identities that make a state sum an isotopy invariant of
/// knotoid diagrams. Every family is tested exhaustively over the label set
/// and over all orientations of its strands.
pub fn verify_model(model: &QuantumModel) -> VerifyReport {
    let n = model.n;
    let mut checks = Vec::new();

    let mut inv = Family::new("R inverse");
    let id2 = Matrix::identity(n * n);
    inv.compare(&model.r.matmul(&model.rbar), &id2);
    inv.compare(&model.rbar.matmul(&model.r), &id2);
    checks.push(inv.finish());

    let mut ybe = Family::new("Yang-Baxter");
    let id = Matrix::identity(n);
    for r in [&model.r, &model.rbar] {
        let r1 = r.kron(&id);
        let r2 = id.kron(r);
        ybe.compare(&r1.matmul(&r2).matmul(&r1), &r2.matmul(&r1).matmul(&r2));
    }
    checks.push(ybe.finish());

    let mut zig = Family::new("cup-cap cancellation");
    for (lhs, rhs) in [
        (vec![E::cup(1), E::cap(0)], Vec::<E>::new()),
        (vec![E::cup(0), E::cap(1)], Vec::new()),
    ] {
        for (a, b) in tangle_pairs(model, 1, &lhs, &rhs) {
            zig.compare(&a, &b);
        }
    }
    checks.push(zig.finish());

    let mut slide = Family::new("crossing slides");
    for k in KINDS {
        let f = k.switched();
        for (a, b) in tangle_pairs(
            model,
            3,
            &[E::new(k, 1), E::cap(0)],
            &[E::new(f, 0), E::cap(1)],
        ) {
            slide.compare(&a, &b);
        }
        for (a, b) in tangle_pairs(
            model,
            1,
            &[E::cup(1), E::new(k, 0)],
            &[E::cup(0), E::new(f, 1)],
        ) {
            slide.compare(&a, &b);
        }
    }
    checks.push(slide.finish());

    let mut r2 = Family::new("Reidemeister II");
    for k in KINDS {
        for (a, _) in tangle_pairs(model, 2, &[E::new(k, 0), E::new(k.switched(), 0)], &[]) {
            r2.compare(&a, &identity_tangle(model, 2));
        }
    }
    checks.push(r2.finish());

    let mut r3 = Family::new("Reidemeister III");
    for x in KINDS {
        for y in KINDS {
            for z in KINDS {
                if x == z && y != x {
                    continue;
                }
                let lhs = [E::new(x, 0), E::new(y, 1), E::new(z, 0)];
                let rhs = [E::new(z, 1), E::new(y, 0), E::new(x, 1)];
                for (a, b) in tangle_pairs(model, 3, &lhs, &rhs) {
                    r3.compare(&a, &b);
                }
            }
        }
    }
    checks.push(r3.finish());

    if model.oriented {
        let mut conv = Family::new("crossing rotation");
        for k in KINDS {
            let f = k.switched();
            let direct = [E::new(k, 0)];
            for bent in [
                [E::cup(2), E::new(f, 1), E::cap(0)],
                [E::cup(0), E::new(f, 1), E::cap(2)],
            ] {
                for (a, b) in tangle_pairs(model, 2, &direct, &bent) {
                    conv.compare(&a, &b);
                }
            }
        }
        checks.push(conv.finish());

        let mut spin = Family::new("spin conservation");
        for (ki, r) in [&model.r, &model.rbar].into_iter().enumerate() {
            for out in 0..n * n {
                for inp in 0..n * n {
                    if r.get(out, inp).is_zero() {
                        continue;
                    }
                    let s = |x: usize| model.labels[x / n] + model.labels[x % n];
                    if s(out) == s(inp) {
                        spin.pass();
                    } else {
                        spin.fail(vec![ki, out, inp]);
                    }
                }
            }
        }
        checks.push(spin.finish());
    }

    VerifyReport {
        model: model.name.clone(),
        checks,
    }
}
