use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::CycScalar;
use super::laurent::LaurentPoly;
use super::parse::{poly_parse, PolyParseError};

/// A Laurent polynomial divided by a power of two, `num / 2^halvings`,
/// kept with the smallest possible `halvings`. Used for the half-trace and
/// half-prefactor normalizations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DyadicPoly {
    num: LaurentPoly,
    halvings: u32,
}

impl DyadicPoly {
    pub fn new(num: LaurentPoly, halvings: u32) -> Self {
        let mut d = DyadicPoly { num, halvings };
        d.reduce();
        d
    }

    pub fn zero() -> Self {
        Self::from(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn half(p: LaurentPoly) -> Self {
        Self::new(p, 1)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn halvings(&self) -> u32 {
        self.halvings
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial when it has integral coefficients.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        (self.halvings == 0).then_some(&self.num)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.halvings = 0;
            return;
        }
        while self.halvings > 0
            && self
                .num
                .terms()
                .iter()
                .all(|(_, c)| c.c.iter().all(|x| x % 2 == 0))
        {
            self.num = LaurentPoly::from_terms(
                self.num
                    .terms()
                    .iter()
                    .map(|&(m, c)| (m, c.div_int(2).unwrap())),
            );
            self.halvings -= 1;
        }
    }

    fn lift(&self, h: u32) -> LaurentPoly {
        self.num.scale(CycScalar::int(1i64 << (h - self.halvings)))
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self::new(&self.num * p, self.halvings)
    }
}

impl From<LaurentPoly> for DyadicPoly {
    fn from(p: LaurentPoly) -> Self {
        DyadicPoly {
            num: p,
            halvings: 0,
        }
    }
}

impl Add for &DyadicPoly {
    type Output = DyadicPoly;
    fn add(self, o: &DyadicPoly) -> DyadicPoly {
        let h = self.halvings.max(o.halvings);
        DyadicPoly::new(&self.lift(h) + &o.lift(h), h)
    }
}

impl Sub for &DyadicPoly {
    type Output = DyadicPoly;
    fn sub(self, o: &DyadicPoly) -> DyadicPoly {
        let h = self.halvings.max(o.halvings);
        DyadicPoly::new(&self.lift(h) - &o.lift(h), h)
    }
}

impl Mul for &DyadicPoly {
    type Output = DyadicPoly;
    fn mul(self, o: &DyadicPoly) -> DyadicPoly {
        DyadicPoly::new(&self.num * &o.num, self.halvings + o.halvings)
    }
}

impl Neg for &DyadicPoly {
    type Output = DyadicPoly;
    fn neg(self) -> DyadicPoly {
        DyadicPoly {
            num: -&self.num,
            halvings: self.halvings,
        }
    }
}

/// `p` when integral, otherwise `1/2*(p)`, `1/4*(p)`, ...
impl fmt::Display for DyadicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.halvings == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "1/{}*({})", 1u64 << self.halvings, self.num)
        }
    }
}

impl fmt::Debug for DyadicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the [`DyadicPoly`] display form.
pub fn dyadic_parse(text: &str) -> Result<DyadicPoly, PolyParseError> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("1/") {
        let star = rest.find('*').ok_or(PolyParseError {
            pos: 2,
            msg: "expected '*' after denominator".into(),
        })?;
        let den: u64 = rest[..star].trim().parse().map_err(|_| PolyParseError {
            pos: 2,
            msg: "bad denominator".into(),
        })?;
        if !den.is_power_of_two() || den < 2 {
            return Err(PolyParseError {
                pos: 2,
                msg: "denominator must be a power of two".into(),
            });
        }
        let body = poly_parse(&rest[star + 1..])?;
        return Ok(DyadicPoly::new(body, den.trailing_zeros()));
    }
    poly_parse(t).map(DyadicPoly::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Var;

    #[test]
    fn halves_cancel() {
        let h = DyadicPoly::half(LaurentPoly::one());
        let s = &h + &h;
        assert_eq!(s, DyadicPoly::one());
        assert_eq!(s.halvings(), 0);
    }

    #[test]
    fn display_roundtrip() {
        let q = |e| LaurentPoly::var(Var::Q, e);
        let p = DyadicPoly::half(-(&q(2) + &LaurentPoly::one()));
        assert_eq!(p.to_string(), "1/2*(-q^2 - 1)");
        assert_eq!(dyadic_parse(&p.to_string()).unwrap(), p);
        let even = DyadicPoly::half(q(1).scale(CycScalar::int(2)));
        assert_eq!(even.to_string(), "q");
    }
}
