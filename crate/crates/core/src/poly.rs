//! Complex polynomials with exact Gaussian-rational coefficients.
//!
//! Coefficients are stored in ascending order with the highest entry nonzero;
//! the empty list is the zero polynomial, whose degree is `None` rather than
//! any integer, so degree formulas fail loudly instead of silently producing
//! off-by-one counts.
//!
//! Besides ring arithmetic this module provides the reversal-with-conjugation
//! operation `p -> p#`, `p#(z) = z^deg(p) * conj(p(1/conj(z)))`, which
//! reflects roots across the unit circle and underlies everything else here.

use crate::error::Error;
use crate::scalar::GaussianRational;
use crate::Result;
use num::complex::Complex64;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

type G = GaussianRational;

/// Dense univariate polynomial over Q(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<G>,
}

impl Poly {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<G>) -> Self {
        while coeffs.last().is_some_and(G::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(G::one())
    }

    pub fn constant(c: G) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c * z^k.
    pub fn monomial(c: G, k: usize) -> Self {
        let mut coeffs = vec![G::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// Convenience constructor from small integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| G::from_int(c)).collect())
    }

    /// Monic product of (z - r) over the given roots.
    pub fn from_roots(roots: &[G]) -> Self {
        let mut p = Poly::one();
        for r in roots {
            p = &p * &Poly::new(vec![-r, G::one()]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[G] {
        &self.coeffs
    }

    /// Coefficient of z^k (zero when k exceeds the degree).
    pub fn coeff(&self, k: usize) -> G {
        self.coeffs.get(k).cloned().unwrap_or_else(G::zero)
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn lead(&self) -> &G {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn constant_term(&self) -> G {
        self.coeff(0)
    }

    pub fn eval(&self, x: &G) -> G {
        let mut acc = G::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex64();
        }
        acc
    }

    pub fn coeffs_c64(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(G::to_complex64).collect()
    }

    pub fn scale(&self, c: &G) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Coefficient-wise complex conjugation.
    pub fn conj(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(G::conj).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * &G::from_int(k as i64 + 1))
                .collect(),
        )
    }

    /// Multiply by z^k.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![G::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Multiplicity of 0 as a root (0 for the zero polynomial).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Split off z^j: returns (p / z^j, j) with j the multiplicity of root 0.
    pub fn strip_zero_roots(&self) -> (Poly, usize) {
        if self.is_zero() {
            return (Poly::zero(), 0);
        }
        let j = self.zero_root_multiplicity();
        (Poly::new(self.coeffs[j..].to_vec()), j)
    }

    /// Exact division by z^k; requires 0 to be a root of multiplicity >= k.
    pub fn shift_down(&self, k: usize) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if self.zero_root_multiplicity() < k {
            return Err(Error::InternalInconsistency(
                "shift_down would discard nonzero coefficients".into(),
            ));
        }
        Ok(Poly::new(self.coeffs[k..].to_vec()))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.lead().inv();
        self.scale(&inv)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True when every coefficient is real.
    pub fn has_real_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    /// The reversal-with-conjugation p#.  For p of degree k the coefficients
    /// of p# are conj(p_k), ..., conj(p_0); leading zeros of the reversal
    /// (from a root of p at the origin) are dropped, so
    /// deg(p#) = deg(p) - mult_0(p).  The sharp of zero is zero.
    pub fn sharp(&self) -> Poly {
        Poly::new(self.coeffs.iter().rev().map(G::conj).collect())
    }

    /// If p = gamma * p# for a constant gamma, return gamma (necessarily
    /// unimodular); otherwise `None`.  Errors on the zero polynomial.
    pub fn self_inversive(&self) -> Result<Option<G>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let c0 = self.constant_term();
        if c0.is_zero() {
            // sharp drops degree, so p = gamma p# is impossible.
            return Ok(None);
        }
        let gamma = &c0 / &self.lead().conj();
        if *self == self.sharp().scale(&gamma) {
            debug_assert!(gamma.norm_sqr() == num::rational::BigRational::from_integer(1.into()));
            Ok(Some(gamma))
        } else {
            Ok(None)
        }
    }

    /// Witness for the sharp-of-a-sum identity
    /// `(p1+p2)# = z^(n-n1) p1# + z^(n-n2) p2#` with n = deg(p1+p2),
    /// ni = deg(pi).  Returns (sharp(p1+p2), n-n1, n-n2) after asserting the
    /// identity exactly; the shifts may be negative in the cancellation case,
    /// where the identity is checked after clearing z-powers.
    pub fn sharp_sum_witness(p1: &Poly, p2: &Poly) -> Result<(Poly, i64, i64)> {
        if p1.is_zero() || p2.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sum = p1 + p2;
        let n = sum.degree().ok_or(Error::ZeroSum)? as i64;
        let n1 = p1.degree().unwrap() as i64;
        let n2 = p2.degree().unwrap() as i64;
        let (s1, s2) = (n - n1, n - n2);
        // Clear negative exponents: multiply the identity by z^k.
        let k = (-s1.min(s2)).max(0) as usize;
        let lhs = sum.sharp().shift_up(k);
        let rhs = &p1.sharp().shift_up((k as i64 + s1) as usize)
            + &p2.sharp().shift_up((k as i64 + s2) as usize);
        if lhs != rhs {
            return Err(Error::InternalInconsistency(
                "sharp-of-sum identity failed".into(),
            ));
        }
        Ok((sum.sharp(), s1, s2))
    }

    /// Euclidean division: p = quotient * d + remainder with
    /// deg(remainder) < deg(d).
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        let dd = d.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = d.lead().inv();
        let mut quot = vec![G::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &lead_inv;
            if !c.is_zero() {
                for j in 0..dd {
                    rem[k - dd + j] = &rem[k - dd + j] - &(&c * &d.coeffs[j]);
                }
            }
            rem[k] = G::zero();
            quot[k - dd] = c;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::InternalInconsistency(
                "inexact polynomial division".into(),
            ));
        }
        Ok(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let b_monic = b.monic();
            let (_, r) = a.divrem(&b_monic)?;
            a = b_monic;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended Euclid: returns (g, u, v) with u*self + v*other = g, g monic.
    /// Remainders are renormalized monic at every step to keep the rational
    /// coefficients of the Bézout pair from blowing up.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Poly::one(), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let mut u = &u0 - &(&q * &u1);
            let mut v = &v0 - &(&q * &v1);
            let mut r = r;
            if !r.is_zero() {
                let inv = r.lead().inv();
                r = r.scale(&inv);
                u = u.scale(&inv);
                v = v.scale(&inv);
            }
            r0 = std::mem::replace(&mut r1, r);
            u0 = std::mem::replace(&mut u1, u);
            v0 = std::mem::replace(&mut v1, v);
        }
        let inv = r0.lead().inv();
        Ok((r0.scale(&inv), u0.scale(&inv), v0.scale(&inv)))
    }

    /// Yun square-free decomposition: p = lead * prod_i out[i].0 ^ out[i].1
    /// with the factors monic, square-free, and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        if f.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let df = f.derivative();
        let g = f.gcd(&df)?;
        let mut b = f.div_exact(&g)?;
        let mut c = df.div_exact(&g)?;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1usize;
        while b.degree() != Some(0) {
            let a = b.gcd(&d)?;
            if a.degree() != Some(0) {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a)?;
            c = d.div_exact(&a)?;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Multiplicity of `root` as a zero of self (0 when not a root).
    pub fn root_multiplicity(&self, root: &G) -> usize {
        let lin = Poly::new(vec![-root, G::one()]);
        let mut m = 0;
        let mut cur = self.clone();
        while !cur.is_zero() {
            let (q, r) = cur.divrem(&lin).unwrap();
            if !r.is_zero() {
                break;
            }
            m += 1;
            cur = q;
        }
        m
    }

    /// Real-part and imaginary-part coefficient vectors (ascending, untrimmed).
    pub fn real_imag_parts(&self) -> (Vec<num::rational::BigRational>, Vec<num::rational::BigRational>) {
        let re = self.coeffs.iter().map(|c| c.re().clone()).collect();
        let im = self.coeffs.iter().map(|c| c.im().clone()).collect();
        (re, im)
    }
}

impl<'a, 'b> Add<&'b Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'b Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl<'a, 'b> Sub<&'b Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'b Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl<'a, 'b> Mul<&'b Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'b Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![G::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl<'a> Neg for &'a Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let lit = c.to_string();
            let simple = !lit.contains('+') && !(lit.len() > 1 && lit[1..].contains('-'));
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{lit}")?;
            } else {
                if c.is_one() {
                    // coefficient 1 is left implicit
                } else if simple {
                    write!(f, "{lit}")?;
                } else {
                    write!(f, "({lit})")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> G {
        &G::from_int(re) + &(&G::from_int(im) * &G::i())
    }

    #[test]
    fn sharp_reverses_and_conjugates() {
        // 2 + z -> 1 + 2z
        let p = Poly::from_ints(&[2, 1]);
        assert_eq!(p.sharp(), Poly::from_ints(&[1, 2]));
        // 1 - z^2 -> z^2 - 1
        let q = Poly::from_ints(&[1, 0, -1]);
        assert_eq!(q.sharp(), Poly::from_ints(&[-1, 0, 1]));
        // (-i)(z+1) -> i(z+1)
        let s = Poly::new(vec![gi(0, -1), gi(0, -1)]);
        assert_eq!(s.sharp(), Poly::new(vec![gi(0, 1), gi(0, 1)]));
        // zero
        assert_eq!(Poly::zero().sharp(), Poly::zero());
    }

    #[test]
    fn sharp_degree_drop_at_origin() {
        let p = Poly::from_ints(&[0, 0, 3, 1]); // z^2(3 + z)
        assert_eq!(p.sharp(), Poly::from_ints(&[1, 3]));
        assert_eq!(
            p.sharp().degree().unwrap(),
            p.degree().unwrap() - p.zero_root_multiplicity()
        );
    }

    #[test]
    fn self_inversive_examples() {
        let q = Poly::from_ints(&[1, 0, -1]); // 1 - z^2, gamma = -1
        assert_eq!(q.self_inversive().unwrap(), Some(G::from_int(-1)));
        let p = Poly::from_ints(&[1, 1]); // 1 + z, gamma = 1
        assert_eq!(p.self_inversive().unwrap(), Some(G::one()));
        let r = Poly::new(vec![G::from_ratio(-1, 2), G::one()]); // z - 1/2
        assert_eq!(r.self_inversive().unwrap(), None);
        assert!(Poly::zero().self_inversive().is_err());
    }

    #[test]
    fn sharp_sum_witness_cancellation() {
        // (1+z) + (1-z) = 2: shifts are (-1, -1)
        let p1 = Poly::from_ints(&[1, 1]);
        let p2 = Poly::from_ints(&[1, -1]);
        let (s, a, b) = Poly::sharp_sum_witness(&p1, &p2).unwrap();
        assert_eq!(s, Poly::from_ints(&[2]));
        assert_eq!((a, b), (-1, -1));

        // z + 1: shifts (0, 1)
        let (s, a, b) =
            Poly::sharp_sum_witness(&Poly::from_ints(&[0, 1]), &Poly::one()).unwrap();
        assert_eq!(s, Poly::from_ints(&[1, 1]));
        assert_eq!((a, b), (0, 1));

        // i(1+3z+z^2) + i(1-z^2) = i(2+3z)
        let p1 = Poly::new(vec![gi(0, 1), gi(0, 3), gi(0, 1)]);
        let p2 = Poly::new(vec![gi(0, 1), gi(0, 0), gi(0, -1)]);
        let (s, a, b) = Poly::sharp_sum_witness(&p1, &p2).unwrap();
        assert_eq!(s, (&p1 + &p2).sharp());
        assert_eq!((a, b), (-1, -1));

        assert!(matches!(
            Poly::sharp_sum_witness(&Poly::from_ints(&[1, 1]), &Poly::from_ints(&[-1, -1])),
            Err(Error::ZeroSum)
        ));
    }

    #[test]
    fn divrem_examples() {
        // z^2 / (z-1) = (z+1, 1)
        let (q, r) = Poly::from_ints(&[0, 0, 1])
            .divrem(&Poly::from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert_eq!(r, Poly::one());

        // identity divisor
        let p = Poly::new(vec![gi(2, 1), gi(0, 3), gi(-1, 0)]);
        let (q, r) = p.divrem(&Poly::one()).unwrap();
        assert_eq!(q, p);
        assert!(r.is_zero());

        // z * i(1+3z+z^2) by 1-z^2: remainder degree < 2, exact reconstruction
        let s = Poly::new(vec![gi(0, 1), gi(0, 3), gi(0, 1)]).shift_up(1);
        let d = Poly::from_ints(&[1, 0, -1]);
        let (q, r) = s.divrem(&d).unwrap();
        assert!(r.degree().unwrap() < 2);
        assert_eq!(&(&q * &d) + &r, s);

        assert!(p.divrem(&Poly::zero()).is_err());
    }

    #[test]
    fn gcd_examples() {
        let g = Poly::from_ints(&[-1, 0, 1])
            .gcd(&Poly::from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(g, Poly::from_ints(&[-1, 1]));

        // i(1+2z+z^2) and 1-z^2 share z+1
        let a = Poly::new(vec![gi(0, 1), gi(0, 2), gi(0, 1)]);
        let b = Poly::from_ints(&[1, 0, -1]);
        assert_eq!(a.gcd(&b).unwrap(), Poly::from_ints(&[1, 1]));

        assert_eq!(
            Poly::from_ints(&[0, 1]).gcd(&Poly::from_ints(&[-1, 1])).unwrap(),
            Poly::one()
        );
        assert!(Poly::zero().gcd(&Poly::zero()).is_err());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[2, 1]);
        let (g, u, v) = a.ext_gcd(&b).unwrap();
        assert_eq!(&(&u * &a) + &(&v * &b), g);
        assert_eq!(g, Poly::one());
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        let p = &Poly::from_roots(&[G::one(), G::one(), G::from_ratio(1, 2)])
            * &Poly::from_ints(&[3]);
        let parts = p.squarefree_decomposition().unwrap();
        let mut rebuilt = Poly::constant(p.lead().clone());
        for (f, m) in &parts {
            rebuilt = &rebuilt * &f.pow(*m as u32);
        }
        assert_eq!(rebuilt, p);
        assert_eq!(parts.len(), 2);
    }
}
