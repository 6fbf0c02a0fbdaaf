use crate::diagram::{Dir, EventKind, MorseDiagram, MorseEvent, OrientedDiagram};
use crate::scalar::{LaurentPoly, Matrix, Mono, Var};

use super::{alexander, homflypt, InvariantError};

/// Three diagrams that agree away from one crossing site: a positive
/// crossing, a negative crossing, and the oriented smoothing.
#[derive(Clone, Debug)]
pub struct SkeinTriple {
    pub plus: OrientedDiagram,
    pub minus: OrientedDiagram,
    pub zero: OrientedDiagram,
    /// Event index of the site in `plus` and `minus`.
    pub site: usize,
}

fn reorient(events: Vec<MorseEvent>, hints: &[(usize, usize, Dir)]) -> OrientedDiagram {
    let d = MorseDiagram::new(events).expect("skein rewrite keeps the word valid");
    OrientedDiagram::with_hints(&d, hints)
        .expect("oriented smoothing keeps orientations consistent")
}

/// Builds the skein triple at crossing event `site` of a closed word,
/// keeping the orientation of every component.
pub fn skein_triple(od: &OrientedDiagram, site: usize) -> Result<SkeinTriple, InvariantError> {
    let e = *od
        .events()
        .get(site)
        .ok_or(InvariantError::NotACrossing(site))?;
    if !e.kind.is_crossing() {
        return Err(InvariantError::NotACrossing(site));
    }
    let (l, r) = od.crossing_bottom_dirs(site).unwrap();
    let positive_kind = if od.crossing_sign(site) == Some(1) {
        e.kind
    } else {
        e.kind.switched()
    };
    let same = od.hints_outside(site, site + 1, 0);
    let with_kind = |k: EventKind| {
        let mut ev = od.events().to_vec();
        ev[site] = MorseEvent::new(k, e.pos);
        reorient(ev, &same)
    };
    let plus = with_kind(positive_kind);
    let minus = with_kind(positive_kind.switched());
    let mut ev = od.events().to_vec();
    let zero = if l == r {
        ev.remove(site);
        reorient(ev, &od.hints_outside(site, site + 1, -1))
    } else {
        ev.splice(
            site..site + 1,
            [MorseEvent::cap(e.pos), MorseEvent::cup(e.pos)],
        );
        reorient(ev, &od.hints_outside(site, site + 1, 1))
    };
    Ok(SkeinTriple {
        plus,
        minus,
        zero,
        site,
    })
}

fn check_site(t: &SkeinTriple) -> Result<(), InvariantError> {
    let (p, m) = (t.plus.events(), t.minus.events());
    let ok = p.len() == m.len()
        && t.site < p.len()
        && p.iter().zip(m).enumerate().all(|(i, (a, b))| {
            if i == t.site {
                a.kind.is_crossing() && b.kind == a.kind.switched() && a.pos == b.pos
            } else {
                a == b
            }
        })
        && t.plus.crossing_sign(t.site) == Some(1)
        && t.minus.crossing_sign(t.site) == Some(-1);
    if ok {
        Ok(())
    } else {
        Err(InvariantError::SiteMismatch(t.site))
    }
}

/// ∇(K₊) − ∇(K₋) = (q − q⁻¹) ∇(K₀) on the normalized matrices.
pub fn skein_check_alexander(t: &SkeinTriple) -> Result<bool, InvariantError> {
    check_site(t)?;
    let p = alexander(&t.plus)?.normalized;
    let m = alexander(&t.minus)?.normalized;
    let z = alexander(&t.zero)?.normalized;
    let c = &LaurentPoly::var(Var::Q, 1) - &LaurentPoly::var(Var::Q, -1);
    Ok(p.sub(&m) == z.scale(&c))
}

/// q^{n+1} P(K₊) − q^{−n−1} P(K₋) = (q − q⁻¹) P(K₀) on the normalized
/// matrices, and <K₊> − <K₋> = (q − q⁻¹) <K₀> before normalization.
pub fn skein_check_homflypt(t: &SkeinTriple, n: usize) -> Result<bool, InvariantError> {
    check_site(t)?;
    let hp = homflypt(&t.plus, n)?;
    let hm = homflypt(&t.minus, n)?;
    let hz = homflypt(&t.zero, n)?;
    let c = &LaurentPoly::var(Var::Q, 1) - &LaurentPoly::var(Var::Q, -1);
    let up = LaurentPoly::mono(Mono::var(Var::Q, n as i32 + 1));
    let down = LaurentPoly::mono(Mono::var(Var::Q, -(n as i32) - 1));
    let lhs: Matrix = hp.normalized.scale(&up).sub(&hm.normalized.scale(&down));
    let normalized_ok = lhs == hz.normalized.scale(&c);
    let regular_ok = hp.state_sum.sub(&hm.state_sum) == hz.state_sum.scale(&c);
    Ok(normalized_ok && regular_ok)
}
