use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::cyclotomic::CycScalar;

/// The fixed variable universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A = 0,
    Q = 1,
    Sigma = 2,
    Tau = 3,
    Lambda = 4,
}

pub const NVARS: usize = 5;

impl Var {
    pub const ALL: [Var; NVARS] = [Var::A, Var::Q, Var::Sigma, Var::Tau, Var::Lambda];

    pub fn symbol(self) -> char {
        match self {
            Var::A => 'A',
            Var::Q => 'q',
            Var::Sigma => 's',
            Var::Tau => 't',
            Var::Lambda => 'l',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        Some(match c {
            'A' => Var::A,
            'q' => Var::Q,
            's' => Var::Sigma,
            't' => Var::Tau,
            'l' => Var::Lambda,
            _ => return None,
        })
    }
}

/// Exponent vector with every exponent stored doubled, so `q^{1/2}` is 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [i32; NVARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; NVARS]);

    /// `v^e` with integer exponent e.
    pub fn var(v: Var, e: i32) -> Mono {
        Self::var_doubled(v, 2 * e)
    }

    /// `v^(d/2)`.
    pub fn var_doubled(v: Var, d: i32) -> Mono {
        let mut m = [0; NVARS];
        m[v as usize] = d;
        Mono(m)
    }

    pub fn doubled(&self, v: Var) -> i32 {
        self.0[v as usize]
    }

    pub fn total(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        Mono(m)
    }

    pub fn inv(&self) -> Mono {
        let mut m = self.0;
        for a in m.iter_mut() {
            *a = -*a;
        }
        Mono(m)
    }

    pub fn pow(&self, k: i32) -> Mono {
        let mut m = self.0;
        for a in m.iter_mut() {
            *a *= k;
        }
        Mono(m)
    }
}

/// Graded lexicographic order: total degree first, then variable by variable.
impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.total().cmp(&o.total()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let d = self.doubled(v);
            if d == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", v.symbol())?;
            if d % 2 != 0 {
                write!(f, "^{{{d}/2}}")?;
            } else if d != 2 {
                write!(f, "^{}", d / 2)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Multivariate Laurent polynomial with half-integer exponents over Z[ζ₈].
/// Terms are kept sorted by [`Mono`] order with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Mono, CycScalar)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(CycScalar::ONE)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(CycScalar::int(n))
    }

    pub fn constant(c: CycScalar) -> Self {
        Self::term(c, Mono::ONE)
    }

    pub fn term(c: CycScalar, m: Mono) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn mono(m: Mono) -> Self {
        Self::term(CycScalar::ONE, m)
    }

    /// `v^e`.
    pub fn var(v: Var, e: i32) -> Self {
        Self::mono(Mono::var(v, e))
    }

    /// `v^(d/2)`.
    pub fn var_doubled(v: Var, d: i32) -> Self {
        Self::mono(Mono::var_doubled(v, d))
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, CycScalar)>>(it: I) -> Self {
        let mut acc: BTreeMap<Mono, CycScalar> = BTreeMap::new();
        for (m, c) in it {
            *acc.entry(m).or_default() += c;
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Mono, CycScalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The coefficient of a monomial (zero when absent).
    pub fn coeff(&self, m: &Mono) -> CycScalar {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1,
            Err(_) => CycScalar::ZERO,
        }
    }

    /// Single term `c·m` with c = ±ζ^k, if self has that shape.
    pub fn as_unit_monomial(&self) -> Option<(CycScalar, Mono)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms[0];
        c.as_root_of_unity().map(|_| (c, m))
    }

    /// Multiplicative inverse of a unit monomial.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (c, m) = self.as_unit_monomial()?;
        Some(Self::term(c.unit_inverse()?, m.inv()))
    }

    pub fn scale(&self, c: CycScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|&(m, x)| (m, x * c))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|&(k, c)| (k.mul(m), c)).collect(),
        }
    }

    pub fn mul_term(&self, c: CycScalar, m: &Mono) -> Self {
        if c.is_one() {
            self.mul_mono(m)
        } else {
            self.mul_mono(m).scale(c)
        }
    }

    /// Non-negative integer power; negative powers are allowed for unit monomials.
    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            let inv = self
                .unit_inverse()
                .expect("negative power of a non-unit Laurent polynomial");
            return inv.pow(-k);
        }
        let mut out = Self::one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        out
    }

    /// Substitutes v = 1.
    pub fn set_one(&self, v: Var) -> Self {
        Self::from_terms(self.terms.iter().map(|&(m, c)| {
            let mut e = m.0;
            e[v as usize] = 0;
            (Mono(e), c)
        }))
    }

    /// Substitutes v ↦ c·mono for a unit monomial image, with doubled exponent
    /// of v required even when the image has odd doubled exponents.
    pub fn substitute_monomial(&self, v: Var, c: CycScalar, image: &Mono) -> Self {
        let cinv = c.unit_inverse().expect("substitution image must be a unit");
        Self::from_terms(self.terms.iter().map(|&(m, x)| {
            let d = m.doubled(v);
            assert!(d % 2 == 0, "half-integer power in monomial substitution");
            let k = d / 2;
            let mut e = m.0;
            e[v as usize] = 0;
            let mut coef = x;
            let f = if k >= 0 { c } else { cinv };
            for _ in 0..k.abs() {
                coef = coef * f;
            }
            (Mono(e).mul(&image.pow(k)), coef)
        }))
    }

    /// Variables that occur with a nonzero exponent somewhere.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.iter().any(|(m, _)| m.doubled(v) != 0))
            .collect()
    }

    /// Exact division by a divisor that is univariate in some variable and has
    /// unit leading and trailing coefficients. Other variables in self are
    /// treated as coefficients.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, DivisionError> {
        if divisor.is_zero() {
            return Err(DivisionError::ByZero);
        }
        if let Some(inv) = divisor.unit_inverse() {
            return Ok(self * &inv);
        }
        let vars = divisor.variables();
        if vars.len() != 1 {
            return Err(DivisionError::NotUnivariate);
        }
        let v = vars[0];
        let deg = |m: &Mono| m.doubled(v);
        let dmax = divisor.terms.iter().map(|(m, _)| deg(m)).max().unwrap();
        let lead = divisor
            .terms
            .iter()
            .find(|(m, _)| deg(m) == dmax)
            .map(|&(_, c)| c)
            .unwrap();
        let lead_inv = lead.unit_inverse().ok_or(DivisionError::NonUnitLeading)?;
        let dmin = divisor.terms.iter().map(|(m, _)| deg(m)).min().unwrap();
        let span = dmax - dmin;

        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        loop {
            if rem.is_zero() {
                return Ok(quot);
            }
            let rmax = rem.terms.iter().map(|(m, _)| deg(m)).max().unwrap();
            let rmin = rem.terms.iter().map(|(m, _)| deg(m)).min().unwrap();
            if rmax - rmin < span {
                return Err(DivisionError::Inexact {
                    quotient: quot,
                    remainder: rem,
                });
            }
            // Cancel every term of top v-degree in one step.
            let top: Vec<(Mono, CycScalar)> = rem
                .terms
                .iter()
                .filter(|(m, _)| deg(m) == rmax)
                .map(|&(m, c)| {
                    let mut e = m.0;
                    e[v as usize] -= dmax;
                    (Mono(e), c * lead_inv)
                })
                .collect();
            let q = LaurentPoly::from_terms(top);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DivisionError {
    #[error("division by zero")]
    ByZero,
    #[error("divisor is not univariate")]
    NotUnivariate,
    #[error("divisor leading coefficient is not a unit")]
    NonUnitLeading,
    #[error("inexact division: quotient so far {quotient}, remainder {remainder}")]
    Inexact {
        quotient: LaurentPoly,
        remainder: LaurentPoly,
    },
}

fn merge(a: &[(Mono, CycScalar)], b: &[(Mono, CycScalar)], sign: i64) -> Vec<(Mono, CycScalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, b[j].1.scale(sign)));
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].1 + b[j].1.scale(sign);
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(m, c)| (m, c.scale(sign))));
    out
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: merge(&self.terms, &o.terms, 1),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: LaurentPoly) -> LaurentPoly {
        &self + &o
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, o: &LaurentPoly) {
        if o.is_zero() {
            return;
        }
        self.terms = merge(&self.terms, &o.terms, 1);
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, o: LaurentPoly) {
        *self += &o;
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: merge(&self.terms, &o.terms, -1),
        }
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        &self - &o
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(CycScalar::int(-1))
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

pub fn poly_mul(p: &LaurentPoly, r: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() || r.is_zero() {
        return LaurentPoly::zero();
    }
    if r.terms.len() == 1 {
        let (m, c) = r.terms[0];
        return p.mul_term(c, &m);
    }
    if p.terms.len() == 1 {
        let (m, c) = p.terms[0];
        return r.mul_term(c, &m);
    }
    let mut acc: BTreeMap<Mono, CycScalar> = BTreeMap::new();
    for (ma, ca) in &p.terms {
        for (mb, cb) in &r.terms {
            *acc.entry(ma.mul(mb)).or_default() += *ca * *cb;
        }
    }
    LaurentPoly {
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        poly_mul(self, o)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        poly_mul(&self, &o)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::int(n)
    }
}

impl From<CycScalar> for LaurentPoly {
    fn from(c: CycScalar) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Prints terms in descending graded-lexicographic order.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let first = idx == 0;
            if c.support() == 1 {
                let j = (0..4).find(|&j| c.c[j] != 0).unwrap();
                let x = c.c[j];
                if first {
                    if x < 0 {
                        write!(f, "-")?;
                    }
                } else if x < 0 {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let mag = x.unsigned_abs();
                let basis = match j {
                    0 => None,
                    1 => Some("w"),
                    2 => Some("w^2"),
                    _ => Some("w^3"),
                };
                let mut parts: Vec<String> = Vec::new();
                if mag != 1 || (basis.is_none() && m.is_one()) {
                    parts.push(mag.to_string());
                }
                if let Some(b) = basis {
                    parts.push(b.to_string());
                }
                if !m.is_one() {
                    parts.push(m.to_string());
                }
                write!(f, "{}", parts.join("*"))?;
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                if m.is_one() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c})*{m}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(e: i32) -> LaurentPoly {
        LaurentPoly::var(Var::A, e)
    }

    #[test]
    fn products() {
        let p = &a(1) + &a(-1);
        let r = &a(1) - &a(-1);
        assert_eq!(&p * &r, &a(2) - &a(-2));
        let ia = a(1).scale(CycScalar::i());
        let mia = a(-1).scale(-CycScalar::i());
        assert!((&ia * &mia).is_one());
        let h = LaurentPoly::var_doubled(Var::Q, 1);
        assert_eq!(&h * &h, LaurentPoly::var(Var::Q, 1));
    }

    #[test]
    fn display_order() {
        let delta = -(&a(2) + &a(-2));
        assert_eq!(delta.to_string(), "-A^2 - A^-2");
        let p = LaurentPoly::var_doubled(Var::Q, -1).scale(CycScalar::i());
        assert_eq!(p.to_string(), "w^2*q^{-1/2}");
        let c = LaurentPoly::constant(CycScalar::new(1, 1, 0, 0));
        assert_eq!(c.to_string(), "(1 + w)");
        assert_eq!(LaurentPoly::int(-3).to_string(), "-3");
    }

    #[test]
    fn exact_division() {
        let q = |e| LaurentPoly::var(Var::Q, e);
        let o = &q(1) + &q(-1);
        let num = &(&q(3) + &q(-3)) * &o;
        assert_eq!(num.div_exact(&o).unwrap(), &q(3) + &q(-3));
        assert!(matches!(
            LaurentPoly::one().div_exact(&o),
            Err(DivisionError::Inexact { .. })
        ));
        let half = LaurentPoly::var_doubled(Var::Q, 1);
        let o2 = &(&q(1) + &LaurentPoly::one()) + &q(-1);
        let n2 = &(&o2 * &half) * &a(3);
        assert_eq!(n2.div_exact(&o2).unwrap(), &half * &a(3));
    }

    #[test]
    fn substitution() {
        let s = |e| LaurentPoly::var(Var::Sigma, e);
        let p = &s(2) + &s(-1);
        assert_eq!(p.set_one(Var::Sigma), LaurentPoly::int(2));
        let img = Mono::var(Var::Tau, -2);
        let r = p.substitute_monomial(Var::Sigma, CycScalar::i(), &img);
        let t = |e| LaurentPoly::var(Var::Tau, e);
        assert_eq!(
            r,
            &t(-4).scale(CycScalar::int(-1)) + &t(2).scale(-CycScalar::i())
        );
    }
}
