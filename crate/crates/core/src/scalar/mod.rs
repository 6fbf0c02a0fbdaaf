//! Exact coefficient ring Z[ζ₈] and Laurent polynomials with half-integer
//! exponents in the variables A, q, σ, τ, λ.

mod cyclotomic;
mod dyadic;
mod laurent;
mod matrix;
mod parse;

pub use cyclotomic::{cyc_mul, CycScalar};
pub use dyadic::{dyadic_parse, DyadicPoly};
pub use laurent::{poly_mul, DivisionError, LaurentPoly, Mono, Var, NVARS};
pub use matrix::{Matrix, Ring};
pub use parse::{poly_parse, poly_print, PolyParseError};

/// `A^e`, the most common monomial.
pub fn a_pow(e: i32) -> LaurentPoly {
    LaurentPoly::var(Var::A, e)
}

/// `q^e`.
pub fn q_pow(e: i32) -> LaurentPoly {
    LaurentPoly::var(Var::Q, e)
}

/// The loop value −A² − A⁻².
pub fn delta() -> LaurentPoly {
    -(&a_pow(2) + &a_pow(-2))
}
