//! Text grammar for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | 'w' ['^' INT] | VAR ['^' exp] | '(' poly ')'
//! exp    := ['{'] ['-'] INT ['/' '2'] ['}']
//! VAR    := 'A' | 'q' | 's' | 't' | 'l'
//! ```

use super::cyclotomic::CycScalar;
use super::laurent::{LaurentPoly, Mono, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("polynomial syntax error at byte {pos}: {msg}")]
pub struct PolyParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyParseError> {
        Err(PolyParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), PolyParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self) -> Result<i64, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse::<i64>().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn poly(&mut self) -> Result<LaurentPoly, PolyParseError> {
        let mut acc = LaurentPoly::zero();
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        loop {
            let t = self.term()?;
            if negate {
                acc = &acc - &t;
            } else {
                acc = &acc + &t;
            }
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, PolyParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<i32, PolyParseError> {
        let braced = self.eat(b'{');
        let neg = self.eat(b'-');
        let n = self.int()?;
        let mut doubled = n.checked_mul(2).and_then(|x| i32::try_from(x).ok());
        if self.eat(b'/') {
            let d = self.int()?;
            if d != 2 {
                return self.err("only halves are allowed as fractional exponents");
            }
            doubled = i32::try_from(n).ok();
        }
        let Some(mut d) = doubled else {
            return self.err("exponent out of range");
        };
        if neg {
            d = -d;
        }
        if braced {
            self.expect(b'}')?;
        }
        Ok(d)
    }

    fn factor(&mut self) -> Result<LaurentPoly, PolyParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.poly()?;
                self.expect(b')')?;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => Ok(LaurentPoly::int(self.int()?)),
            Some(b'w') => {
                self.pos += 1;
                let k = if self.eat(b'^') {
                    let braced = self.eat(b'{');
                    let neg = self.eat(b'-');
                    let k = self.int()?;
                    if braced {
                        self.expect(b'}')?;
                    }
                    if neg {
                        -k
                    } else {
                        k
                    }
                } else {
                    1
                };
                Ok(LaurentPoly::constant(CycScalar::zeta(k)))
            }
            Some(c) => match Var::from_symbol(c as char) {
                Some(v) => {
                    self.pos += 1;
                    let d = if self.eat(b'^') { self.exponent()? } else { 2 };
                    Ok(LaurentPoly::mono(Mono::var_doubled(v, d)))
                }
                None => self.err(format!("unexpected character '{}'", c as char)),
            },
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn poly_parse(text: &str) -> Result<LaurentPoly, PolyParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let out = p.poly()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

pub fn poly_print(p: &LaurentPoly) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_value() {
        let d = poly_parse("-A^2 - A^-2").unwrap();
        let a2 = LaurentPoly::var(Var::A, 2);
        let am2 = LaurentPoly::var(Var::A, -2);
        assert_eq!(d, -(&a2 + &am2));
    }

    #[test]
    fn zero_and_half() {
        assert!(poly_parse("0").unwrap().is_zero());
        let p = poly_parse("w^2*q^{-1/2}").unwrap();
        assert_eq!(
            p,
            LaurentPoly::var_doubled(Var::Q, -1).scale(CycScalar::i())
        );
        assert_eq!(
            poly_parse("q^-1/2").unwrap(),
            LaurentPoly::var_doubled(Var::Q, -1)
        );
    }

    #[test]
    fn mixed_coefficients() {
        let p = poly_parse("(2 - w^2)*A*l^-1 + 3*w*s^{1/2}*t").unwrap();
        assert_eq!(poly_parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn errors_carry_position() {
        let e = poly_parse("A^ + 1").unwrap_err();
        assert_eq!(e.pos, 3);
        assert!(poly_parse("x").is_err());
        assert!(poly_parse("A^{1/3}").is_err());
        assert!(poly_parse("(A").is_err());
    }
}
