//! Acceptance gate: one PASS/FAIL line per criterion. Every comparison is
//! bit-exact on exact polynomials; there is no numeric tolerance anywhere.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! The process exits nonzero on a failure only when KNOTOID_STRICT=1.

mod common;

use knotoid::diagram::OrientedDiagram;
use knotoid::engine::{contract, enumerate_oracle, functoriality_check, verify_model};
use knotoid::invariants::{
    alexander, binary_bracket, binary_normalized, bracket_matrix, bracket_matrix_states, homflypt,
    rotational_bracket, sawollek, skein_check_alexander, skein_check_homflypt, skein_triple,
    unknot_value,
};
use knotoid::models::{self, ModelId};
use knotoid::moves::{apply_move_oriented, random_equivalent_oriented, MoveKind, MoveSite};
use knotoid::scalar::{poly_parse, CycScalar, DyadicPoly, LaurentPoly, Matrix, Mono, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> LaurentPoly {
    poly_parse(s).unwrap()
}

fn diag(a: &str, b: &str) -> Matrix {
    Matrix::from_rows(vec![
        vec![p(a), LaurentPoly::zero()],
        vec![LaurentPoly::zero(), p(b)],
    ])
}

fn show(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            pass: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, note: String) {
        if !ok {
            self.pass = false;
        }
        self.notes
            .push(format!("{} {note}", if ok { "ok  " } else { "FAIL" }));
    }
}

fn odd_pair() -> OrientedDiagram {
    common::oriented("two_odd_crossings")
}

fn bracket_example() -> Outcome {
    let mut o = Outcome::new();
    let got = bracket_matrix(&odd_pair()).unwrap();
    let want = diag("-A^2 + A^-2 + 1", "-A^4 - A^-2 + A^-6");
    o.check(
        got == want,
        format!("engine matrix {} against {}", show(&got), show(&want)),
    );
    let states = bracket_matrix_states(&odd_pair()).unwrap();
    o.notes.push(format!(
        "info state expansion gives the same matrix: {}",
        states == got
    ));
    // The printed matrix has entries 1 and -1 at A = 1, while every bracket
    // matrix has equal diagonal entries there.
    let at_one = |m: &Matrix, i: usize| m.get(i, i).set_one(Var::A);
    o.notes.push(format!(
        "info at A = 1: printed ({}, {}), computed ({}, {})",
        at_one(&want, 0),
        at_one(&want, 1),
        at_one(&got, 0),
        at_one(&got, 1)
    ));
    o
}

fn rotational_example() -> Outcome {
    let mut o = Outcome::new();
    let got = rotational_bracket(&odd_pair()).unwrap();
    let want = p("l - A^-4*l + A^2*l^-1");
    o.check(got == want, format!("rotational bracket {got}"));
    o
}

fn binary_examples() -> Outcome {
    let mut o = Outcome::new();
    let v = binary_bracket(&odd_pair()).unwrap().value;
    o.check(v == p("A^-2"), format!("two odd crossings: {v}"));
    let t = common::oriented("twisted_multi_writhe_minus5");
    let v = binary_bracket(&t).unwrap().value;
    o.check(v == p("A^3 + A^-5"), format!("twisted multi-knotoid: {v}"));
    o.check(
        t.writhe() == -5,
        format!("twisted multi-knotoid writhe {}", t.writhe()),
    );
    let n = binary_normalized(&t).unwrap();
    o.check(
        n == p("A^8 + 1"),
        format!("twisted multi-knotoid normalized: {n}"),
    );
    let b = binary_normalized(&common::oriented("balanced_multi")).unwrap();
    o.check(
        b == p("A^4 + A^-4"),
        format!("balanced multi-knotoid normalized: {b}"),
    );
    o
}

fn alexander_examples() -> Outcome {
    let mut o = Outcome::new();
    let m = alexander(&common::oriented("single_crossing_loop")).unwrap();
    let want = diag("w^2*q - w^2", "w^2*q^-1 + w^2");
    o.check(
        m.state_sum == want,
        format!("multi-knotoid state sum {}", show(&m.state_sum)),
    );
    let poly = DyadicPoly::half(p("-q^2 - 1"));
    o.check(
        m.polynomial == poly,
        format!(
            "multi-knotoid polynomial {} (rotation {}), printed {poly}",
            m.polynomial, m.rotation
        ),
    );
    let k = alexander(&odd_pair()).unwrap();
    let poly = DyadicPoly::half(p("q^3 + q^-1 - 2*q^2 + 2"));
    o.check(
        k.polynomial == poly,
        format!(
            "knotoid polynomial {} (rotation {}), printed {poly}",
            k.polynomial, k.rotation
        ),
    );
    o
}

fn homflypt_examples() -> Outcome {
    let mut o = Outcome::new();
    let u = unknot_value(1);
    o.check(u == p("q + q^-1"), format!("<O> for n = 1: {u}"));
    let circle = common::oriented("circle");
    let c = contract(&circle, &models::homflypt(1)).unwrap().matrix;
    o.check(
        c.get(0, 0) == &u,
        format!("contracted circle for n = 1: {}", c.get(0, 0)),
    );
    for n in 1..=3 {
        let h = homflypt(&circle, n).unwrap();
        o.check(
            h.polynomial == Some(LaurentPoly::one()),
            format!("P^{n} of the unknot: {:?}", h.polynomial),
        );
    }
    for n in 1..=2usize {
        let h = homflypt(&odd_pair(), n).unwrap();
        let labels: Vec<i32> = (0..=n as i32).map(|k| -(n as i32) + 2 * k).collect();
        let q = |e: i32| LaurentPoly::var(Var::Q, e);
        let z = &q(1) - &q(-1);
        let mut ok = true;
        for (i, &a) in labels.iter().enumerate() {
            let others = labels
                .iter()
                .filter(|&&b| b != a)
                .fold(LaurentPoly::zero(), |acc, &b| &acc + &q(-b));
            let formula = &q(2 - a) + &(&z * &others);
            for j in 0..labels.len() {
                let want = if i == j {
                    formula.clone()
                } else {
                    LaurentPoly::zero()
                };
                ok &= h.state_sum.get(i, j) == &want;
            }
        }
        o.check(
            ok,
            format!("worked state sum for n = {n}: {}", show(&h.state_sum)),
        );
    }
    o
}

fn model_verification() -> Outcome {
    let mut o = Outcome::new();
    let mut ids = ModelId::all_small();
    ids.push(ModelId::Homflypt(3));
    for id in ids {
        let r = verify_model(&id.build());
        let cases: usize = r.checks.iter().map(|c| c.cases).sum();
        o.check(
            r.passed(),
            format!("{id}: {} families, {cases} cases", r.checks.len()),
        );
    }
    let good = models::alexander();
    let mut r = good.r.clone();
    r.set(0, 0, p("q^2"));
    let bad = good.with_r(r);
    let rep = verify_model(&bad);
    let witness = rep.failures().first().and_then(|c| c.witness.clone());
    o.check(
        !rep.passed() && witness.is_some(),
        format!("corrupted R rejected, first witness {:?}", witness),
    );
    o
}

fn oracle_equivalence() -> Outcome {
    let mut o = Outcome::new();
    let corpus = common::corpus();
    let ids = [
        ModelId::Bracket,
        ModelId::Binary,
        ModelId::Alexander,
        ModelId::Sawollek,
        ModelId::Homflypt(1),
        ModelId::Homflypt(2),
    ];
    let mut agree = 0;
    let mut total = 0;
    let mut widest = 0;
    let mut most_crossings = 0;
    for f in &corpus {
        widest = widest.max(f.diagram.max_width());
        most_crossings = most_crossings.max(f.diagram.crossing_count());
        let od = OrientedDiagram::new(&f.diagram);
        for id in ids {
            let m = id.build();
            total += 1;
            let a = contract(&od, &m).unwrap().matrix;
            let b = enumerate_oracle(&od, &m).unwrap();
            if a == b {
                agree += 1;
            } else {
                o.check(false, format!("{} under {id}", f.name));
            }
        }
    }
    o.check(
        corpus.len() >= 25,
        format!("{} corpus diagrams", corpus.len()),
    );
    o.check(
        widest <= 8 && most_crossings <= 6,
        format!("max width {widest}, max crossings {most_crossings}"),
    );
    o.check(
        agree == total,
        format!("{agree}/{total} contractions equal the enumeration"),
    );
    o
}

/// Every invariant the move walk must preserve.
#[derive(Clone, Debug, PartialEq)]
struct Bundle {
    rotation: i64,
    bracket: Matrix,
    bracket_states: Matrix,
    rotbracket: Option<LaurentPoly>,
    binary: Option<LaurentPoly>,
    alexander: Option<(Matrix, Matrix)>,
    sawollek: Option<Matrix<DyadicPoly>>,
    homflypt1: Matrix,
    homflypt2: Matrix,
}

const BUNDLE_FIELDS: [&str; 9] = [
    "rotation",
    "bracket",
    "bracket by states",
    "rotational bracket",
    "binary",
    "alexander",
    "sawollek",
    "homflypt:1",
    "homflypt:2",
];

fn bundle(od: &OrientedDiagram) -> Bundle {
    let knotoid = od.open_component().is_some();
    Bundle {
        rotation: od.rotation_number().doubled(),
        bracket: bracket_matrix(od).unwrap(),
        bracket_states: bracket_matrix_states(od).unwrap(),
        rotbracket: knotoid.then(|| rotational_bracket(od).unwrap()),
        binary: knotoid.then(|| binary_bracket(od).unwrap().value),
        alexander: knotoid.then(|| {
            let a = alexander(od).unwrap();
            (a.state_sum, a.normalized)
        }),
        sawollek: knotoid.then(|| sawollek(od).unwrap().w),
        homflypt1: homflypt(od, 1).unwrap().state_sum,
        homflypt2: homflypt(od, 2).unwrap().state_sum,
    }
}

fn differing(a: &Bundle, b: &Bundle) -> Vec<&'static str> {
    let eq = [
        a.rotation == b.rotation,
        a.bracket == b.bracket,
        a.bracket_states == b.bracket_states,
        a.rotbracket == b.rotbracket,
        a.binary == b.binary,
        a.alexander == b.alexander,
        a.sawollek == b.sawollek,
        a.homflypt1 == b.homflypt1,
        a.homflypt2 == b.homflypt2,
    ];
    BUNDLE_FIELDS
        .iter()
        .zip(eq)
        .filter(|(_, e)| !e)
        .map(|(n, _)| *n)
        .collect()
}

/// `after == f · before` for exactly one candidate factor; returns its index.
fn factor_of(before: &Matrix, after: &Matrix, candidates: &[LaurentPoly]) -> Option<usize> {
    candidates.iter().position(|f| &before.scale(f) == after)
}

fn unit(c: CycScalar, m: Mono) -> LaurentPoly {
    LaurentPoly::term(c, m)
}

fn move_invariance() -> Outcome {
    let mut o = Outcome::new();
    let corpus = common::corpus();
    let walks = 50;
    let steps = 20;
    let mut broken: Vec<String> = Vec::new();
    for j in 0..walks {
        let f = &corpus[j % corpus.len()];
        let od = OrientedDiagram::new(&f.diagram);
        let before = bundle(&od);
        let out = random_equivalent_oriented(&od, steps, 1000 + j as u64);
        let after = bundle(&out);
        for name in differing(&before, &after) {
            broken.push(format!("{name} on {} (seed {})", f.name, 1000 + j));
        }
    }
    o.check(
        broken.is_empty(),
        format!(
            "{} move applications over {walks} walks, changed: {:?}",
            walks * steps,
            broken
        ),
    );

    // Curls: every RI insertion site on the knotoids of the corpus.
    let i = CycScalar::i();
    let neg_i = CycScalar::i().scale(-1);
    let q = |e: i32| Mono::var(Var::Q, e);
    let st = Mono::var(Var::Sigma, -1).mul(&Mono::var(Var::Tau, 1));
    let binary_f = [p("A"), p("A^-1")];
    let alex_f = [unit(i, q(-1)), unit(neg_i, q(1))];
    let saw_f = [unit(i, st), unit(neg_i, st.inv())];
    let hom_f = |n: i32| [p(&format!("q^{}", n + 1)), p(&format!("q^{}", -(n + 1)))];
    let mut seen = [[0usize; 3]; 5];
    let names = [
        "binary A^(+-1)",
        "alexander q^-1 i / -q i",
        "sawollek (i s^-1 t)^(-+1)",
        "homflypt:1 q^(+-2)",
        "homflypt:2 q^(+-3)",
    ];
    for f in corpus.iter().filter(|f| f.diagram.is_knotoid()) {
        let od = OrientedDiagram::new(&f.diagram);
        let widths = f.diagram.widths();
        let base_bin = binary_bracket(&od).unwrap().value;
        let base_alex = alexander(&od).unwrap().state_sum;
        let base_saw = contract(&od, &models::sawollek()).unwrap().matrix;
        let base_h1 = homflypt(&od, 1).unwrap().state_sum;
        let base_h2 = homflypt(&od, 2).unwrap().state_sum;
        for (k, &w) in widths.iter().enumerate() {
            for pos in 0..w {
                for variant in 0..4 {
                    let site = MoveSite {
                        kind: MoveKind::R1Insert,
                        index: k,
                        pos,
                        variant,
                    };
                    let c = apply_move_oriented(&od, &site).unwrap();
                    let one = |x: &LaurentPoly| Matrix::from_rows(vec![vec![x.clone()]]);
                    let new_bin = binary_bracket(&c).unwrap().value;
                    let checks = [
                        (!base_bin.is_zero())
                            .then(|| factor_of(&one(&base_bin), &one(&new_bin), &binary_f)),
                        Some(factor_of(
                            &base_alex,
                            &alexander(&c).unwrap().state_sum,
                            &alex_f,
                        )),
                        Some(factor_of(
                            &base_saw,
                            &contract(&c, &models::sawollek()).unwrap().matrix,
                            &saw_f,
                        )),
                        Some(factor_of(
                            &base_h1,
                            &homflypt(&c, 1).unwrap().state_sum,
                            &hom_f(1),
                        )),
                        Some(factor_of(
                            &base_h2,
                            &homflypt(&c, 2).unwrap().state_sum,
                            &hom_f(2),
                        )),
                    ];
                    for (slot, r) in checks.iter().enumerate() {
                        match r {
                            Some(Some(idx)) => seen[slot][*idx] += 1,
                            Some(None) => seen[slot][2] += 1,
                            None => {}
                        }
                    }
                }
            }
        }
    }
    for (slot, name) in names.iter().enumerate() {
        let [a, b, miss] = seen[slot];
        o.check(
            miss == 0 && a > 0 && b > 0,
            format!("curl factor {name}: {a} and {b} insertions match, {miss} match neither"),
        );
    }
    // The factors the alexander model does produce.
    let strand = common::oriented("trivial_strand");
    for variant in [0u8, 2] {
        let site = MoveSite {
            kind: MoveKind::R1Insert,
            index: 1,
            pos: 0,
            variant,
        };
        let c = apply_move_oriented(&strand, &site).unwrap();
        let a = alexander(&c).unwrap();
        o.notes.push(format!(
            "info curl of rotation {} multiplies the alexander state sum by {}",
            c.rotation_number(),
            a.state_sum.get(0, 0)
        ));
    }
    o
}

fn parity_laws() -> Outcome {
    let mut o = Outcome::new();
    let mut even = 0;
    let mut odd = 0;
    for f in common::corpus() {
        let od = OrientedDiagram::new(&f.diagram);
        if !common::is_pure_knotoid(&od) {
            continue;
        }
        let v = binary_bracket(&od).unwrap().value;
        let w = od.writhe() as i32;
        if od.all_crossings_even().unwrap() {
            even += 1;
            let want = LaurentPoly::var(Var::A, w);
            o.check(v == want, format!("{}: {{K}} = {v}, A^w = {want}", f.name));
        } else {
            odd += 1;
            let j = od.odd_writhe().unwrap() as i32;
            let want = LaurentPoly::var(Var::A, -2 * j + w);
            o.check(
                v == want,
                format!("{}: {{K}} = {v}, A^(-2J+w) = {want}", f.name),
            );
        }
    }
    o.check(
        even > 0 && odd > 0,
        format!("{even} even and {odd} odd knotoids"),
    );
    o
}

fn skein_identities() -> Outcome {
    let mut o = Outcome::new();
    let pool: Vec<OrientedDiagram> = common::corpus()
        .iter()
        .filter(|f| f.diagram.is_knotoid() && f.diagram.crossing_count() > 0)
        .map(|f| OrientedDiagram::new(&f.diagram))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut counts = [0usize; 3];
    let total = 50;
    for t in 0..total {
        let base = &pool[rng.gen_range(0..pool.len())];
        let mut od = random_equivalent_oriented(base, rng.gen_range(0..12), 500 + t);
        if !od.events().iter().any(|e| e.kind.is_crossing()) {
            // R2 deletions can clear every crossing.
            od = base.clone();
        }
        let sites: Vec<usize> = (0..od.events().len())
            .filter(|&i| od.events()[i].kind.is_crossing())
            .collect();
        let site = sites[rng.gen_range(0..sites.len())];
        let triple = skein_triple(&od, site).unwrap();
        counts[0] += skein_check_alexander(&triple).unwrap() as usize;
        counts[1] += skein_check_homflypt(&triple, 1).unwrap() as usize;
        counts[2] += skein_check_homflypt(&triple, 2).unwrap() as usize;
    }
    o.check(
        counts[0] == total as usize,
        format!("alexander conway skein {}/{total}", counts[0]),
    );
    o.check(
        counts[1] == total as usize,
        format!("homflypt skein n = 1 {}/{total}", counts[1]),
    );
    o.check(
        counts[2] == total as usize,
        format!("homflypt skein n = 2 {}/{total}", counts[2]),
    );
    o
}

fn sawollek_classes() -> Outcome {
    let mut o = Outcome::new();
    let mut knot_type = Vec::new();
    let mut proper = Vec::new();
    for f in common::corpus() {
        let od = OrientedDiagram::new(&f.diagram);
        if !common::is_pure_knotoid(&od) {
            continue;
        }
        let s = sawollek(&od).unwrap();
        if common::is_outer_knot_type(&f.diagram) {
            knot_type.push((f.name.clone(), s));
        } else if !od.all_crossings_even().unwrap() {
            proper.push((f.name.clone(), s));
        }
    }
    let reference = knot_type[0].1.polynomial.clone();
    let off: Vec<String> = knot_type
        .iter()
        .filter(|(_, s)| s.polynomial != reference)
        .map(|(n, s)| format!("{n} = {}", s.polynomial))
        .collect();
    o.check(
        knot_type.len() >= 5,
        format!("{} knot-type diagrams", knot_type.len()),
    );
    o.check(
        off.is_empty(),
        format!("tr W constant on knot type (reference {reference}), differing: {off:?}"),
    );
    let differs = proper.iter().any(|(_, s)| s.polynomial != reference);
    o.check(
        differs,
        format!("some proper knotoid differs, among {} proper", proper.len()),
    );
    let st_zero = knot_type.iter().all(|(_, s)| s.supertrace.is_zero());
    let st_proper = proper
        .iter()
        .filter(|(_, s)| !s.supertrace.is_zero())
        .count();
    o.notes.push(format!(
        "info supertrace W11 - W22 vanishes on every knot-type diagram: {st_zero}; nonzero on {st_proper}/{} proper",
        proper.len()
    ));
    o
}

fn functoriality() -> Outcome {
    let mut o = Outcome::new();
    let corpus = common::corpus();
    let ids = [
        ModelId::Bracket,
        ModelId::Binary,
        ModelId::Alexander,
        ModelId::Sawollek,
        ModelId::Homflypt(1),
        ModelId::Homflypt(2),
    ];
    let models: Vec<_> = ids.iter().map(|id| id.build()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut ok = 0;
    let total = 100;
    for t in 0..total {
        let f = &corpus[rng.gen_range(0..corpus.len())];
        let od = random_equivalent_oriented(
            &OrientedDiagram::new(&f.diagram),
            rng.gen_range(0..6),
            900 + t,
        );
        let cut = rng.gen_range(0..=od.events().len());
        let m = &models[rng.gen_range(0..models.len())];
        if functoriality_check(&od, m, cut).unwrap() {
            ok += 1;
        } else {
            o.check(false, format!("{} cut at {cut} under {}", f.name, m.name));
        }
    }
    o.check(ok == total, format!("{ok}/{total} splits factor"));
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        (
            "bracket matrix of the two odd crossing knotoid",
            bracket_example,
        ),
        (
            "rotational bracket of the two odd crossing knotoid",
            rotational_example,
        ),
        ("binary bracket values and normalizations", binary_examples),
        ("alexander state sums and polynomials", alexander_examples),
        (
            "homflypt unknot values and worked state sum",
            homflypt_examples,
        ),
        ("every model passes its identity checks", model_verification),
        (
            "contraction equals brute-force enumeration on the corpus",
            oracle_equivalence,
        ),
        (
            "invariance under random moves and curl factors",
            move_invariance,
        ),
        ("binary bracket parity laws", parity_laws),
        ("conway and homflypt skein relations", skein_identities),
        (
            "sawollek trace on knot-type and proper knotoids",
            sawollek_classes,
        ),
        ("functoriality under word splits", functoriality),
    ];
    let mut passed = 0;
    let mut failed = Vec::new();
    println!("acceptance (tolerance: bit-exact equality of exact polynomials)");
    for (k, (name, f)) in criteria.iter().enumerate() {
        let out = f();
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {name}", k + 1);
        for n in &out.notes {
            println!("        {n}");
        }
        if out.pass {
            passed += 1;
        } else {
            failed.push(k + 1);
        }
    }
    println!(
        "{passed}/{} criteria pass; failing: {failed:?}",
        criteria.len()
    );
    let strict = std::env::var("KNOTOID_STRICT").is_ok_and(|v| v == "1");
    if strict && !failed.is_empty() {
        std::process::exit(1);
    }
}
