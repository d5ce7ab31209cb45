//! Exact Gaussian-rational scalars.
//!
//! Every coefficient in the library is an element of Q(i): a pair of
//! arbitrary-precision rationals.  Equality is exact, denominators are kept
//! positive and in lowest terms by the underlying rational type.
//!
//! The module also owns the coefficient literal grammar shared with the CLI:
//!
//! ```text
//! RAT     ::= ["-"] INT [ "/" POSINT ]
//! COMPLEX ::= RAT | [RAT] ("+"|"-") [RAT] "i" | RAT "i" | ["-"] "i"
//! ```
//!
//! Examples: `3/2`, `-1+2i`, `i`, `2/3-1/5i`.

use crate::error::Error;
use crate::Result;
use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element of Q(i), exact in both components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// n/d as a real Gaussian rational. Panics if d == 0.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        GaussianRational::new(
            BigRational::new(BigInt::from(n), BigInt::from(d)),
            BigRational::zero(),
        )
    }

    pub fn from_real(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    pub fn zero() -> Self {
        GaussianRational::from_int(0)
    }

    pub fn one() -> Self {
        GaussianRational::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 = re^2 + im^2, an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero; callers guard.
    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "inverse of zero");
        GaussianRational::new(&self.re / &n, -&self.im / &n)
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl<'a, 'b> Add<&'b GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a, 'b> Sub<&'b GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a, 'b> Mul<&'b GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a, 'b> Div<&'b GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &'b GaussianRational) -> GaussianRational {
        self * &rhs.inv()
    }
}

impl<'a> Neg for &'a GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

/// Canonical emission of a rational: `p/q` with positive `q`, or plain `p`.
pub fn emit_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical literal form; [`parse_complex`] inverts this exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&emit_rational(&self.re));
        }
        if !self.im.is_zero() {
            let im = &self.im;
            if im.abs().is_one() {
                if im.is_negative() {
                    out.push_str("-i");
                } else if out.is_empty() {
                    out.push('i');
                } else {
                    out.push_str("+i");
                }
            } else {
                let lit = emit_rational(im);
                if !out.is_empty() && !im.is_negative() {
                    out.push('+');
                }
                out.push_str(&lit);
                out.push('i');
            }
        }
        write!(f, "{out}")
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            expected: expected.to_string(),
        })
    }

    fn take_sign(&mut self) -> Option<i8> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(1)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(-1)
            }
            _ => None,
        }
    }

    fn take_uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("digit");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    /// Unsigned RAT body: INT [ "/" POSINT ].
    fn take_unsigned_rat(&mut self) -> Result<BigRational> {
        let numer = self.take_uint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom = self.take_uint()?;
            if denom.is_zero() {
                return self.err("nonzero denominator");
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }
}

/// Parse a COMPLEX literal such as `3/2`, `-1+2i`, `i`, `2/3-1/5i`.
pub fn parse_complex(text: &str) -> Result<GaussianRational> {
    let trimmed = text.trim();
    let mut c = Cursor {
        bytes: trimmed.as_bytes(),
        pos: 0,
    };
    let lead_sign = c.take_sign().unwrap_or(1);
    // Leading bare `i` (as in "i", "-i").
    if c.peek() == Some(b'i') {
        c.pos += 1;
        if c.peek().is_some() {
            return c.err("end of literal");
        }
        let mut im = BigRational::one();
        if lead_sign < 0 {
            im = -im;
        }
        return Ok(GaussianRational::new(BigRational::zero(), im));
    }
    let mut first = c.take_unsigned_rat()?;
    if lead_sign < 0 {
        first = -first;
    }
    match c.peek() {
        None => Ok(GaussianRational::from_real(first)),
        Some(b'i') => {
            c.pos += 1;
            if c.peek().is_some() {
                return c.err("end of literal");
            }
            Ok(GaussianRational::new(BigRational::zero(), first))
        }
        Some(b'+') | Some(b'-') => {
            let sign = c.take_sign().unwrap();
            let mut im = if c.peek() == Some(b'i') {
                BigRational::one()
            } else {
                c.take_unsigned_rat()?
            };
            if c.peek() != Some(b'i') {
                return c.err("'i'");
            }
            c.pos += 1;
            if c.peek().is_some() {
                return c.err("end of literal");
            }
            if sign < 0 {
                im = -im;
            }
            Ok(GaussianRational::new(first, im))
        }
        Some(_) => c.err("'+', '-', 'i', or end of literal"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::new(
            BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    #[test]
    fn parse_literals() {
        assert_eq!(parse_complex("3/2").unwrap(), g((3, 2), (0, 1)));
        assert_eq!(parse_complex("-1+2i").unwrap(), g((-1, 1), (2, 1)));
        assert_eq!(parse_complex("i").unwrap(), GaussianRational::i());
        assert_eq!(parse_complex("-i").unwrap(), -GaussianRational::i());
        assert_eq!(parse_complex("2/3-1/5i").unwrap(), g((2, 3), (-1, 5)));
        assert_eq!(parse_complex("0").unwrap(), GaussianRational::zero());
        assert_eq!(parse_complex("7i").unwrap(), g((0, 1), (7, 1)));
        assert_eq!(parse_complex("1-i").unwrap(), g((1, 1), (-1, 1)));
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["", "1+", "i3", "2//3", "1/0", "1+2", "--1", "1 + 2i"] {
            assert!(parse_complex(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        let samples = [
            GaussianRational::zero(),
            GaussianRational::one(),
            GaussianRational::i(),
            -GaussianRational::i(),
            g((3, 2), (0, 1)),
            g((-1, 1), (2, 1)),
            g((2, 3), (-1, 5)),
            g((0, 1), (-7, 4)),
            g((-5, 3), (-1, 1)),
        ];
        for v in samples {
            let lit = v.to_string();
            assert_eq!(parse_complex(&lit).unwrap(), v, "literal {lit}");
        }
    }

    #[test]
    fn field_arithmetic() {
        let a = g((1, 2), (3, 1));
        let b = g((-2, 3), (1, 5));
        let prod = &a * &b;
        assert_eq!(&prod / &b, a);
        assert_eq!(&a.inv() * &a, GaussianRational::one());
        assert_eq!(a.conj().conj(), a);
        assert_eq!(
            a.norm_sqr(),
            BigRational::new(BigInt::from(37), BigInt::from(4))
        );
    }
}
