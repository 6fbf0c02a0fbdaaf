use crate::diagram::{ComponentKind, EventKind, OrientedDiagram};
use crate::engine::contract;
use crate::models;
use crate::scalar::{a_pow, delta, poly_parse, LaurentPoly, Matrix, Mono, Var};

use super::{a_exponent, check_state_limit, leg_is_lower, smooth, InvariantError};

/// Σ over states of A^{#A−#B} δ^{#circles} λ^{rot}, where rot is the rotation
/// number of the open state component.
pub fn rotational_bracket(od: &OrientedDiagram) -> Result<LaurentPoly, InvariantError> {
    let c = check_state_limit(od)?;
    let d = delta();
    let mut total = LaurentPoly::zero();
    for s in 0..1u32 << c {
        let sd = smooth(od.events(), s);
        let sod = OrientedDiagram::new(&sd);
        let circles = sod
            .components()
            .iter()
            .filter(|c| c.kind == ComponentKind::Closed)
            .count();
        let rot2 = sod
            .open_component()
            .map_or(0, |i| sod.components()[i].extremum_sign_sum);
        let lam = LaurentPoly::mono(Mono::var_doubled(Var::Lambda, rot2 as i32));
        let term = &(&a_pow(a_exponent(od.events(), s)) * &d.pow(circles as i64)) * &lam;
        total += &term;
    }
    Ok(total)
}

/// The bracket matrix from the engine: rows indexed by the label at the lower
/// endpoint, columns by the label at the upper one (1×1 when closed).
pub fn bracket_matrix(od: &OrientedDiagram) -> Result<Matrix, InvariantError> {
    Ok(contract(od, &models::bracket())?.matrix)
}

/// The bracket matrix by explicit smoothing: each state contributes
/// A^{#A−#B} δ^{#circles} times the product of cup and cap matrices met
/// along its open component, taking M for a turn traversed left to right
/// and Mᵀ for one traversed right to left.
pub fn bracket_matrix_states(od: &OrientedDiagram) -> Result<Matrix, InvariantError> {
    let c = check_state_limit(od)?;
    let m = Matrix::from_rows(vec![
        vec![LaurentPoly::zero(), poly_parse("w^2*A").unwrap()],
        vec![poly_parse("-w^2*A^-1").unwrap(), LaurentPoly::zero()],
    ]);
    let mt = m.transpose();
    let d = delta();
    let knotoid = leg_is_lower(od);
    let size = if knotoid.is_some() { 2 } else { 1 };
    let mut total = Matrix::zeros(size, size);
    for s in 0..1u32 << c {
        let sd = smooth(od.events(), s);
        let sod = OrientedDiagram::new(&sd);
        let circles = sod
            .components()
            .iter()
            .filter(|c| c.kind == ComponentKind::Closed)
            .count();
        let weight = &a_pow(a_exponent(od.events(), s)) * &d.pow(circles as i64);
        let path = match sod.open_component() {
            None => Matrix::identity(1),
            Some(i) => {
                let slots = &sod.components()[i].slots;
                let ev = sd.events();
                let mut p = Matrix::identity(2);
                for w in slots.windows(2) {
                    let ((k0, p0), (k1, p1)) = (w[0], w[1]);
                    if k0 != k1 {
                        continue;
                    }
                    let pos = p0.min(p1);
                    let is_cup =
                        k0 > 0 && ev[k0 - 1].kind == EventKind::Cup && ev[k0 - 1].pos == pos;
                    let is_cap =
                        k0 < ev.len() && ev[k0].kind == EventKind::Cap && ev[k0].pos == pos;
                    assert!(is_cup || is_cap, "horizontal step crosses a turn");
                    p = p.matmul(if p1 > p0 { &m } else { &mt });
                }
                if knotoid == Some(true) {
                    p
                } else {
                    p.transpose()
                }
            }
        };
        total = total.add(&path.scale(&weight));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{MorseDiagram, MorseEvent as E};

    fn od(ev: Vec<E>) -> OrientedDiagram {
        OrientedDiagram::new(&MorseDiagram::new(ev).unwrap())
    }

    #[test]
    fn circle_and_strand() {
        let circle = od(vec![E::cup(0), E::cap(0)]);
        assert_eq!(rotational_bracket(&circle).unwrap(), delta());
        let strand = od(vec![E::leg(0), E::head(0)]);
        assert_eq!(rotational_bracket(&strand).unwrap(), LaurentPoly::one());
        assert_eq!(bracket_matrix(&strand).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn routes_agree_on_kinks() {
        for w in [
            vec![E::leg(0), E::cup(1), E::xp(0), E::cap(1), E::head(0)],
            vec![E::cup(0), E::leg(0), E::head_down(2), E::cap(1), E::cap(0)],
            vec![E::cup(0), E::cup(1), E::xn(0), E::cap(1), E::cap(0)],
        ] {
            let d = od(w);
            assert_eq!(
                bracket_matrix(&d).unwrap(),
                bracket_matrix_states(&d).unwrap()
            );
        }
    }
}
