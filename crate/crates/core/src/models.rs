//! The concrete state-sum models.

use std::fmt;
use std::str::FromStr;

use crate::engine::QuantumModel;
use crate::scalar::{poly_parse, CycScalar, LaurentPoly, Matrix, Mono, Var};

fn p(s: &str) -> LaurentPoly {
    poly_parse(s).expect("model literal parses")
}

fn mat(rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| p(s)).collect())
            .collect(),
    )
}

/// Diagonal cup and cap matrices weighting label `a` by `w(sign, a)`, where
/// sign is +1 when the left leg runs down and −1 when it runs up.
fn diagonal_turns(n: usize, w: impl Fn(i64, usize) -> LaurentPoly) -> [Matrix; 2] {
    let up = Matrix::from_fn(n, n, |a, b| {
        if a == b {
            w(-1, a)
        } else {
            LaurentPoly::zero()
        }
    });
    let down = Matrix::from_fn(
        n,
        n,
        |a, b| if a == b { w(1, a) } else { LaurentPoly::zero() },
    );
    [up, down]
}

/// Kauffman bracket: unoriented, loop value −A² − A⁻².
pub fn bracket() -> QuantumModel {
    let m = mat(&[&["0", "w^2*A"], &["-w^2*A^-1", "0"]]);
    let r = mat(&[
        &["A", "0", "0", "0"],
        &["0", "0", "A^-1", "0"],
        &["0", "A^-1", "A - A^-3", "0"],
        &["0", "0", "0", "A"],
    ]);
    let rbar = mat(&[
        &["A^-1", "0", "0", "0"],
        &["0", "A^-1 - A^3", "A", "0"],
        &["0", "A", "0", "0"],
        &["0", "0", "0", "A^-1"],
    ]);
    QuantumModel::unoriented("bracket", vec![0, 1], m.clone(), m, r, rbar)
}

/// Binary bracket: unoriented with trivial cups and caps; each crossing
/// forces the labels to alternate.
pub fn binary() -> QuantumModel {
    let id = Matrix::identity(2);
    let r = mat(&[
        &["0", "0", "0", "A^-1"],
        &["0", "A", "0", "0"],
        &["0", "0", "A", "0"],
        &["A^-1", "0", "0", "0"],
    ]);
    let rbar = mat(&[
        &["0", "0", "0", "A"],
        &["0", "A^-1", "0", "0"],
        &["0", "0", "A^-1", "0"],
        &["A", "0", "0", "0"],
    ]);
    QuantumModel::unoriented("binary", vec![0, 1], id.clone(), id, r, rbar)
}

/// Weight ζ^{sign·label} for labels ±1.
fn half_turn(sign: i64, label: i64) -> LaurentPoly {
    LaurentPoly::constant(CycScalar::zeta(sign * label))
}

/// Oriented Alexander model on labels (+1, −1).
pub fn alexander() -> QuantumModel {
    let labels = vec![1, -1];
    let r = mat(&[
        &["q", "0", "0", "0"],
        &["0", "q - q^-1", "1", "0"],
        &["0", "1", "0", "0"],
        &["0", "0", "0", "-q^-1"],
    ]);
    let rbar = mat(&[
        &["q^-1", "0", "0", "0"],
        &["0", "0", "1", "0"],
        &["0", "1", "q^-1 - q", "0"],
        &["0", "0", "0", "-q"],
    ]);
    let l2 = labels.clone();
    let turns = diagonal_turns(2, |s, a| half_turn(s, l2[a]));
    QuantumModel::oriented("alexander", labels, turns.clone(), turns, r, rbar)
}

/// Oriented two-variable model in σ, τ on labels (+1, −1).
pub fn sawollek() -> QuantumModel {
    let labels = vec![1, -1];
    let z = "s^-1*t - s*t^-1";
    let r = mat(&[
        &["s^-1*t", "0", "0", "0"],
        &["0", z, "s*t", "0"],
        &["0", "s^-1*t^-1", "0", "0"],
        &["0", "0", "0", "-s*t^-1"],
    ]);
    let neg_z = "s*t^-1 - s^-1*t";
    let rbar = mat(&[
        &["s*t^-1", "0", "0", "0"],
        &["0", "0", "s*t", "0"],
        &["0", "s^-1*t^-1", neg_z, "0"],
        &["0", "0", "0", "-s^-1*t"],
    ]);
    let l2 = labels.clone();
    let turns = diagonal_turns(2, |s, a| half_turn(s, l2[a]));
    QuantumModel::oriented("sawollek", labels, turns.clone(), turns, r, rbar)
}

/// Oriented Homflypt specialisation on labels −n, −n+2, …, n.
pub fn homflypt(n: usize) -> QuantumModel {
    assert!(n >= 1, "homflypt needs n >= 1");
    let labels: Vec<i64> = (0..=n as i64).map(|k| -(n as i64) + 2 * k).collect();
    let big = labels.len();
    let q = LaurentPoly::var(Var::Q, 1);
    let qi = LaurentPoly::var(Var::Q, -1);
    let z = &q - &qi;
    let idx = |a: usize, b: usize| a * big + b;
    let mut r = Matrix::zeros(big * big, big * big);
    let mut rbar = Matrix::zeros(big * big, big * big);
    for i in 0..big {
        for j in 0..big {
            let col = idx(i, j);
            if i == j {
                r.set(col, col, q.clone());
                rbar.set(col, col, qi.clone());
            } else {
                r.set(idx(j, i), col, LaurentPoly::one());
                rbar.set(idx(j, i), col, LaurentPoly::one());
                if labels[i] > labels[j] {
                    r.set(col, col, z.clone());
                } else {
                    rbar.set(col, col, -&z);
                }
            }
        }
    }
    let l2 = labels.clone();
    let turns = diagonal_turns(big, |s, a| {
        LaurentPoly::mono(Mono::var_doubled(Var::Q, (s * l2[a]) as i32))
    });
    QuantumModel::oriented(
        &format!("homflypt:{n}"),
        labels,
        turns.clone(),
        turns,
        r,
        rbar,
    )
}

/// Model names accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelId {
    Bracket,
    Binary,
    Alexander,
    Sawollek,
    Homflypt(usize),
}

impl ModelId {
    pub fn build(self) -> QuantumModel {
        match self {
            ModelId::Bracket => bracket(),
            ModelId::Binary => binary(),
            ModelId::Alexander => alexander(),
            ModelId::Sawollek => sawollek(),
            ModelId::Homflypt(n) => homflypt(n),
        }
    }

    pub fn all_small() -> Vec<ModelId> {
        vec![
            ModelId::Bracket,
            ModelId::Binary,
            ModelId::Alexander,
            ModelId::Sawollek,
            ModelId::Homflypt(1),
            ModelId::Homflypt(2),
        ]
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelId::Bracket => write!(f, "bracket"),
            ModelId::Binary => write!(f, "binary"),
            ModelId::Alexander => write!(f, "alexander"),
            ModelId::Sawollek => write!(f, "sawollek"),
            ModelId::Homflypt(n) => write!(f, "homflypt:{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown model `{0}` (expected bracket, binary, alexander, sawollek or homflypt:N)")]
pub struct UnknownModel(pub String);

impl FromStr for ModelId {
    type Err = UnknownModel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "bracket" => return Ok(ModelId::Bracket),
            "binary" => return Ok(ModelId::Binary),
            "alexander" => return Ok(ModelId::Alexander),
            "sawollek" => return Ok(ModelId::Sawollek),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("homflypt:") {
            if let Ok(n) = rest.parse::<usize>() {
                if (1..=6).contains(&n) {
                    return Ok(ModelId::Homflypt(n));
                }
            }
        }
        Err(UnknownModel(s.to_string()))
    }
}
