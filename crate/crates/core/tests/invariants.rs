mod common;

use knotoid::diagram::{EventKind, MorseDiagram, OrientedDiagram};
use knotoid::invariants::{
    alexander, binary_bracket, binary_bracket_engine, bracket_matrix, bracket_matrix_states,
    homflypt, sawollek,
};
use knotoid::scalar::{poly_parse, LaurentPoly, Var};

fn p(s: &str) -> LaurentPoly {
    poly_parse(s).unwrap()
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn fresh(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
    fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Kauffman bracket of a closed diagram by direct state enumeration:
/// each crossing is smoothed both ways, loops are counted with union-find
/// over the strand segments, and each loop contributes δ = −A² − A⁻².
/// For the crossing whose over strand runs bottom-left to top-right the
/// A-smoothing is the vertical one.
fn kauffman_bracket(d: &MorseDiagram) -> LaurentPoly {
    let crossings: Vec<EventKind> = d
        .events()
        .iter()
        .filter(|e| e.kind.is_crossing())
        .map(|e| e.kind)
        .collect();
    let delta = p("-A^2 - A^-2");
    let mut total = LaurentPoly::zero();
    for state in 0u32..(1 << crossings.len()) {
        let mut dsu = Dsu(Vec::new());
        let mut level: Vec<usize> = Vec::new();
        let mut c = 0;
        let mut a_exp = 0i32;
        for e in d.events() {
            let k = e.pos;
            match e.kind {
                EventKind::Cup => {
                    let (u, v) = (dsu.fresh(), dsu.fresh());
                    dsu.union(u, v);
                    level.splice(k..k, [u, v]);
                }
                EventKind::Cap => {
                    dsu.union(level[k], level[k + 1]);
                    level.drain(k..k + 2);
                }
                kind if kind.is_crossing() => {
                    let a_choice = state >> c & 1 == 0;
                    c += 1;
                    let vertical = a_choice == (kind == EventKind::CrossPos);
                    a_exp += if a_choice { 1 } else { -1 };
                    if !vertical {
                        dsu.union(level[k], level[k + 1]);
                        let (u, v) = (dsu.fresh(), dsu.fresh());
                        dsu.union(u, v);
                        level[k] = u;
                        level[k + 1] = v;
                    }
                }
                _ => panic!("closed diagrams only"),
            }
        }
        total += &(&LaurentPoly::var(Var::A, a_exp) * &delta.pow(dsu.classes() as i64));
    }
    total
}

#[test]
fn bracket_matches_state_enumeration_on_closed_diagrams() {
    let mut n = 0;
    for f in common::corpus().iter().filter(|f| !f.diagram.is_knotoid()) {
        let od = OrientedDiagram::new(&f.diagram);
        let m = bracket_matrix(&od).unwrap();
        assert_eq!(m.get(0, 0), &kauffman_bracket(&f.diagram), "{}", f.name);
        n += 1;
    }
    assert!(n >= 4);
}

#[test]
fn bracket_routes_agree_on_corpus() {
    for f in common::corpus() {
        let od = OrientedDiagram::new(&f.diagram);
        assert_eq!(
            bracket_matrix(&od).unwrap(),
            bracket_matrix_states(&od).unwrap(),
            "{}",
            f.name
        );
    }
}

#[test]
fn binary_routes_agree_on_knotoids() {
    for f in common::corpus().iter().filter(|f| f.diagram.is_knotoid()) {
        let od = OrientedDiagram::new(&f.diagram);
        assert_eq!(
            binary_bracket(&od).unwrap().value,
            binary_bracket_engine(&od).unwrap(),
            "{}",
            f.name
        );
    }
}

#[test]
fn knot_type_alexander_is_the_conway_polynomial() {
    // Conway polynomials of the closures at z = q − q⁻¹: trefoil 1 + z²,
    // figure eight 1 − z², unknot 1.
    let cases = [
        ("long_trefoil", "q^2 - 1 + q^-2"),
        ("long_trefoil_mirror", "q^2 - 1 + q^-2"),
        ("long_figure_eight", "-q^2 + 3 - q^-2"),
        ("trivial_strand", "1"),
        ("zigzag_strand", "1"),
        ("curl_right_xp", "1"),
    ];
    for (name, want) in cases {
        let a = alexander(&common::oriented(name)).unwrap();
        assert_eq!(
            a.polynomial.as_laurent(),
            Some(&p(want)),
            "{name}: {}",
            a.polynomial
        );
    }
}

#[test]
fn homflypt_n1_is_the_jones_polynomial() {
    // At n = 1, P(q) is the Jones polynomial at t = q⁻², up to the sign
    // (−1)^(components − 1) of the quantum normalization.
    let tref = homflypt(&common::oriented("trefoil"), 1)
        .unwrap()
        .polynomial
        .unwrap();
    let trefoils = [p("q^-2 + q^-6 - q^-8"), p("q^2 + q^6 - q^8")];
    assert!(trefoils.contains(&tref), "{tref}");
    let hopf = homflypt(&common::oriented("hopf_link"), 1)
        .unwrap()
        .polynomial
        .unwrap();
    let hopfs = [p("q + q^5"), p("q^-1 + q^-5")];
    assert!(hopfs.contains(&hopf), "{hopf}");
}

#[test]
fn sawollek_is_one_on_the_trivial_strand_and_supertrace_detects_proper() {
    let s = sawollek(&common::oriented("trivial_strand")).unwrap();
    assert_eq!(s.polynomial.as_laurent(), Some(&LaurentPoly::one()));
    assert!(s.supertrace.is_zero());
    let s = sawollek(&common::oriented("two_odd_crossings_switched")).unwrap();
    assert!(!s.supertrace.is_zero());
}

#[test]
fn writhe_normalized_bracket_is_unchanged_by_curls() {
    let base = bracket_matrix(&common::oriented("trivial_strand")).unwrap();
    for name in ["curl_right_xp", "curl_left_xn"] {
        let od = common::oriented(name);
        let f = LaurentPoly::var(Var::A, -3 * od.writhe() as i32).scale(
            knotoid::scalar::CycScalar::int(if od.writhe() % 2 == 0 { 1 } else { -1 }),
        );
        assert_eq!(bracket_matrix(&od).unwrap().scale(&f), base, "{name}");
    }
}
