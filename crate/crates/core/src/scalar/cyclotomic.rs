use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Element of Z[ζ] with ζ a primitive 8th root of unity, stored in the
/// basis {1, ζ, ζ², ζ³} (so ζ⁴ = −1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct CycScalar {
    pub c: [i64; 4],
}

impl CycScalar {
    pub const ZERO: CycScalar = CycScalar { c: [0; 4] };
    pub const ONE: CycScalar = CycScalar { c: [1, 0, 0, 0] };

    pub const fn new(c0: i64, c1: i64, c2: i64, c3: i64) -> Self {
        CycScalar {
            c: [c0, c1, c2, c3],
        }
    }

    pub const fn int(n: i64) -> Self {
        CycScalar { c: [n, 0, 0, 0] }
    }

    /// ζ^k for any integer k.
    pub fn zeta(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        if k < 4 {
            c[k] = 1;
        } else {
            c[k - 4] = -1;
        }
        CycScalar { c }
    }

    /// The imaginary unit ζ².
    pub fn i() -> Self {
        Self::zeta(2)
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0; 4]
    }

    pub fn is_one(&self) -> bool {
        self.c == [1, 0, 0, 0]
    }

    /// Returns k with self = ζ^k when self is a unit of that form.
    pub fn as_root_of_unity(&self) -> Option<i64> {
        let nz: Vec<usize> = (0..4).filter(|&j| self.c[j] != 0).collect();
        if nz.len() != 1 {
            return None;
        }
        let j = nz[0];
        match self.c[j] {
            1 => Some(j as i64),
            -1 => Some(j as i64 + 4),
            _ => None,
        }
    }

    /// Inverse of ±ζ^k; None for non-units of that form.
    pub fn unit_inverse(&self) -> Option<Self> {
        self.as_root_of_unity().map(|k| Self::zeta(-k))
    }

    pub fn scale(&self, n: i64) -> Self {
        CycScalar {
            c: [self.c[0] * n, self.c[1] * n, self.c[2] * n, self.c[3] * n],
        }
    }

    /// Exact division by an integer, if every coordinate is divisible.
    pub fn div_int(&self, n: i64) -> Option<Self> {
        if n == 0 || self.c.iter().any(|x| x % n != 0) {
            return None;
        }
        Some(CycScalar {
            c: [self.c[0] / n, self.c[1] / n, self.c[2] / n, self.c[3] / n],
        })
    }

    /// Number of nonzero coordinates.
    pub fn support(&self) -> usize {
        self.c.iter().filter(|&&x| x != 0).count()
    }
}

pub fn cyc_mul(a: CycScalar, b: CycScalar) -> CycScalar {
    let mut out = [0i64; 4];
    for i in 0..4 {
        if a.c[i] == 0 {
            continue;
        }
        for j in 0..4 {
            let p = a.c[i] * b.c[j];
            let k = i + j;
            if k < 4 {
                out[k] += p;
            } else {
                out[k - 4] -= p;
            }
        }
    }
    CycScalar { c: out }
}

impl Add for CycScalar {
    type Output = CycScalar;
    fn add(self, o: CycScalar) -> CycScalar {
        CycScalar {
            c: [
                self.c[0] + o.c[0],
                self.c[1] + o.c[1],
                self.c[2] + o.c[2],
                self.c[3] + o.c[3],
            ],
        }
    }
}

impl AddAssign for CycScalar {
    fn add_assign(&mut self, o: CycScalar) {
        *self = *self + o;
    }
}

impl Sub for CycScalar {
    type Output = CycScalar;
    fn sub(self, o: CycScalar) -> CycScalar {
        self + (-o)
    }
}

impl SubAssign for CycScalar {
    fn sub_assign(&mut self, o: CycScalar) {
        *self = *self - o;
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        self.scale(-1)
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, o: CycScalar) -> CycScalar {
        cyc_mul(self, o)
    }
}

impl From<i64> for CycScalar {
    fn from(n: i64) -> Self {
        CycScalar::int(n)
    }
}

/// Formats as an integer combination of `1, w, w^2, w^3`, e.g. `2 - w^2`.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, &x) in self.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let basis = match j {
                0 => "",
                1 => "w",
                2 => "w^2",
                _ => "w^3",
            };
            let mag = x.unsigned_abs();
            if first {
                if x < 0 {
                    write!(f, "-")?;
                }
            } else if x < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (j, mag) {
                (0, m) => write!(f, "{m}")?,
                (_, 1) => write!(f, "{basis}")?,
                (_, m) => write!(f, "{m}*{basis}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity() {
        let z = CycScalar::zeta(1);
        assert_eq!(z * z, CycScalar::i());
        assert_eq!(CycScalar::i() * CycScalar::i(), CycScalar::int(-1));
        let mut p = CycScalar::ONE;
        for _ in 0..8 {
            p = p * z;
        }
        assert_eq!(p, CycScalar::ONE);
        assert_eq!(CycScalar::zeta(4), CycScalar::int(-1));
        assert_eq!(CycScalar::zeta(7), -CycScalar::zeta(3));
    }

    #[test]
    fn difference_of_squares() {
        let one = CycScalar::ONE;
        let z = CycScalar::zeta(1);
        assert_eq!((one + z) * (one - z), one - CycScalar::i());
    }

    #[test]
    fn unit_inverse() {
        for k in 0..8 {
            let u = CycScalar::zeta(k);
            assert_eq!(u * u.unit_inverse().unwrap(), CycScalar::ONE);
        }
        assert!(CycScalar::int(2).unit_inverse().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(CycScalar::new(2, 0, -1, 0).to_string(), "2 - w^2");
        assert_eq!(CycScalar::new(0, -3, 0, 1).to_string(), "-3*w + w^3");
    }
}
