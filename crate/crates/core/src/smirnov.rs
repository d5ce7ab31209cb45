//! Smirnov-class canonical form via Fejér--Riesz spectral factorization.
//!
//! For coprime s~, q~ with q~(0) != 0 the trigonometric polynomial
//! |s~|^2 + |q~|^2 is strictly positive on the circle, so it factors as
//! |r|^2 with r zero-free on the closed disk; normalizing arg r(0) =
//! arg q~(0) makes a = q~/r, b = s~/r the canonical pair with
//! |a|^2 + |b|^2 = 1 on the circle and a(0) > 0.  The factor generically
//! leaves Q(i), so r carries floating coefficients together with residual
//! certificates; the absence of circle roots is still checked exactly.

use crate::aberth;
use crate::error::Error;
use crate::poly::Poly;
use crate::profile::SpaceDescriptor;
use crate::rootloc::count_roots;
use crate::scalar::GaussianRational;
use crate::symbol::RationalSymbol;
use crate::Result;
use num::complex::Complex64;
use num::{ToPrimitive, Zero};

type G = GaussianRational;

/// Polynomial with floating complex coefficients (ascending).
#[derive(Debug, Clone)]
pub struct NumericPoly {
    coeffs: Vec<Complex64>,
}

impl NumericPoly {
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }
}

/// Canonical Smirnov data for ω~ = s~/q~: the spectral factor r and the
/// pair a = q~/r, b = s~/r, with numeric certificates.
#[derive(Debug, Clone)]
pub struct CanonicalTriple {
    pub spectral_factor: NumericPoly,
    pub a_numer: Poly,
    pub b_numer: Poly,
    pub a_at_zero: Complex64,
    /// max over 512 circle samples of | |a|^2 + |b|^2 - 1 |.
    pub max_unimodular_residual: f64,
    /// smallest modulus among the roots of the spectral factor.
    pub min_factor_root_modulus: f64,
    /// Dom(T^Sa of ω~) = q~ H^2.
    pub sarason_domain: SpaceDescriptor,
}

impl CanonicalTriple {
    pub fn eval_a(&self, z: Complex64) -> Complex64 {
        self.a_numer.eval_c64(z) / self.spectral_factor.eval(z)
    }

    pub fn eval_b(&self, z: Complex64) -> Complex64 {
        self.b_numer.eval_c64(z) / self.spectral_factor.eval(z)
    }
}

/// Spectral factor r with |r|^2 = |s~|^2 + |q~|^2 on the circle, no roots in
/// the closed disk, and arg r(0) = arg q~(0).
pub fn fejer_riesz(s_tilde: &Poly, q_tilde: &Poly) -> Result<NumericPoly> {
    if s_tilde.is_zero() {
        return Err(Error::ZeroNumerator);
    }
    if q_tilde.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if q_tilde.constant_term().is_zero() {
        return Err(Error::DenominatorVanishesAtZero);
    }
    if s_tilde.gcd(q_tilde)?.degree() != Some(0) {
        return Err(Error::NotCoprime);
    }

    // z^N L(z) with L the Laurent polynomial equal to |s~|^2 + |q~|^2 on the
    // circle; p# equals z^deg(p) conj(p)(1/z) as a rational identity.
    let n_s = s_tilde.degree().unwrap();
    let n_q = q_tilde.degree().unwrap();
    let n = n_s.max(n_q);
    let p_full = &(s_tilde * &s_tilde.sharp()).shift_up(n - n_s)
        + &(q_tilde * &q_tilde.sharp()).shift_up(n - n_q);
    let (p, shift) = p_full.strip_zero_roots();
    let m = n - shift;
    if p.degree() != Some(2 * m) {
        return Err(Error::InternalInconsistency(
            "Laurent support of |s|^2 + |q|^2 is not symmetric".into(),
        ));
    }

    // Positivity on the circle in exact form: value at z = 1 and no circle
    // roots (guaranteed by coprimality, but verified).
    let at_one = p.eval(&G::one());
    let at_one_re = at_one.re().to_f64().unwrap();
    if !at_one.im().is_zero() || at_one_re <= 0.0 {
        return Err(Error::InternalInconsistency(
            "|s|^2 + |q|^2 not positive at z = 1".into(),
        ));
    }
    if m == 0 {
        let mag = at_one_re.sqrt();
        let q0 = q_tilde.constant_term().to_complex64();
        return Ok(NumericPoly {
            coeffs: vec![q0 / q0.norm() * mag],
        });
    }
    if count_roots(&p)?.on_circle != 0 {
        return Err(Error::CircleRootDetected);
    }

    // Numeric roots pair as (α, 1/conj(α)); keep the outside representative.
    let mut inside: Vec<Complex64> = Vec::new();
    let mut outside: Vec<Complex64> = Vec::new();
    for (f, mult) in p.squarefree_decomposition()? {
        if f.degree() == Some(0) {
            continue;
        }
        for root in aberth::roots(&f.coeffs_c64()) {
            let dest = if root.norm() < 1.0 {
                &mut inside
            } else {
                &mut outside
            };
            for _ in 0..mult {
                dest.push(root);
            }
        }
    }
    if inside.len() != m || outside.len() != m {
        return Err(Error::CircleRootDetected);
    }
    let mut unmatched: Vec<Complex64> = outside.clone();
    for a in &inside {
        let mirror = Complex64::new(1.0, 0.0) / a.conj();
        let Some((idx, d)) = unmatched
            .iter()
            .enumerate()
            .map(|(i, b)| (i, (b - mirror).norm()))
            .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
        else {
            return Err(Error::CircleRootDetected);
        };
        if d > 1e-8 * mirror.norm().max(1.0) {
            return Err(Error::CircleRootDetected);
        }
        unmatched.remove(idx);
    }

    let monic: Vec<Complex64> = aberth::poly_from_roots(Complex64::new(1.0, 0.0), &outside);
    let monic_poly = NumericPoly { coeffs: monic };
    // |c|^2 |monic(1)|^2 = L(1) = P(1).
    let m1 = monic_poly.eval(Complex64::new(1.0, 0.0));
    let mag = (at_one_re / m1.norm_sqr()).sqrt();
    // Phase: rotate so that r(0) / q~(0) is a positive real.
    let q0 = q_tilde.constant_term().to_complex64();
    let r0_dir = monic_poly.eval(Complex64::new(0.0, 0.0));
    let phase = (q0 / q0.norm()) * (r0_dir.conj() / r0_dir.norm());
    let c = phase * mag;
    Ok(NumericPoly {
        coeffs: monic_poly.coeffs.iter().map(|x| x * c).collect(),
    })
}

/// Canonical triple of a circle-pole symbol, together with the Sarason
/// domain descriptor q~ H^2 (on which the multiplication operator agrees
/// with T of the symbol).
pub fn canonical_form(omega: &RationalSymbol) -> Result<CanonicalTriple> {
    if !omega.is_rat_t() {
        return Err(Error::NotRatT);
    }
    let s_tilde = omega.s().clone();
    let q_tilde = omega.q().clone();
    let r = fejer_riesz(&s_tilde, &q_tilde)?;

    let mut min_root = f64::INFINITY;
    if r.degree() >= 1 {
        for root in aberth::roots(r.coeffs()) {
            min_root = min_root.min(root.norm());
        }
    }

    let a_at_zero = q_tilde.eval_c64(Complex64::new(0.0, 0.0)) / r.eval(Complex64::new(0.0, 0.0));
    let mut max_residual = 0.0f64;
    for k in 0..512 {
        let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / 512.0;
        let z = Complex64::from_polar(1.0, theta);
        let rv = r.eval(z);
        let a = q_tilde.eval_c64(z) / rv;
        let b = s_tilde.eval_c64(z) / rv;
        max_residual = max_residual.max((a.norm_sqr() + b.norm_sqr() - 1.0).abs());
    }

    Ok(CanonicalTriple {
        spectral_factor: r,
        a_numer: q_tilde.clone(),
        b_numer: s_tilde,
        a_at_zero,
        max_unimodular_residual: max_residual,
        min_factor_root_modulus: min_root,
        sarason_domain: SpaceDescriptor::inner_space(q_tilde),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::make_symbol;

    fn gi(re: i64, im: i64) -> G {
        &G::from_int(re) + &(&G::from_int(im) * &G::i())
    }

    #[test]
    fn factor_of_one_and_z_minus_one() {
        // |1|^2 + |z-1|^2 = 3 - 2cos θ: r = c(z - t) with t = (3+√5)/2,
        // c = 1/√t, and r(0) on the negative real axis (arg q(0) = π).
        let r = fejer_riesz(&Poly::one(), &Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(r.degree(), 1);
        let t = (3.0 + 5.0f64.sqrt()) / 2.0;
        let root = -r.coeffs()[0] / r.coeffs()[1];
        assert!((root - Complex64::new(t, 0.0)).norm() < 1e-12);
        let r0 = r.eval(Complex64::new(0.0, 0.0));
        assert!(r0.re < 0.0 && r0.im.abs() < 1e-12);
        // |r|^2 matches 3 - 2cos θ on samples
        for k in 0..32 {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / 32.0;
            let z = Complex64::from_polar(1.0, theta);
            let lhs = r.eval(z).norm_sqr();
            assert!((lhs - (3.0 - 2.0 * theta.cos())).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_constant_factor() {
        // s~ = 1, q~ = 1: L = 2, r = √2 with arg r(0) = 0
        let r = fejer_riesz(&Poly::one(), &Poly::one()).unwrap();
        assert_eq!(r.degree(), 0);
        assert!((r.coeffs()[0] - Complex64::new(2.0f64.sqrt(), 0.0)).norm() < 1e-14);

        // s~ = i(1+z), q~ = 1-z: |s|^2 + |q|^2 = 4 on the circle, r = 2
        let s = Poly::new(vec![gi(0, 1), gi(0, 1)]);
        let r = fejer_riesz(&s, &Poly::from_ints(&[1, -1])).unwrap();
        assert_eq!(r.degree(), 0);
        assert!((r.coeffs()[0] - Complex64::new(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            fejer_riesz(&Poly::from_ints(&[-1, 1]), &Poly::from_ints(&[-1, 1])),
            Err(Error::NotCoprime)
        ));
        assert!(matches!(
            fejer_riesz(&Poly::one(), &Poly::from_ints(&[0, 1])),
            Err(Error::DenominatorVanishesAtZero)
        ));
        assert!(matches!(
            fejer_riesz(&Poly::zero(), &Poly::one()),
            Err(Error::ZeroNumerator)
        ));
    }

    #[test]
    fn canonical_form_helson() {
        let w = make_symbol(
            &Poly::new(vec![gi(0, -1), gi(0, -1)]),
            &Poly::from_ints(&[-1, 1]),
        )
        .unwrap();
        let triple = canonical_form(&w).unwrap();
        assert!(triple.max_unimodular_residual <= 1e-12);
        assert!(triple.a_at_zero.re > 0.0);
        assert!(triple.a_at_zero.im.abs() <= 1e-12);
        assert_eq!(triple.sarason_domain.inner_monic(), Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn canonical_form_no_poles() {
        // q~ = 1: r from |s~|^2 + 1
        let w = make_symbol(&Poly::from_ints(&[0, 2]), &Poly::one()).unwrap();
        let triple = canonical_form(&w).unwrap();
        assert!(triple.max_unimodular_residual <= 1e-12);
        assert!(triple.min_factor_root_modulus > 1.0);
        assert!(triple.a_at_zero.re > 0.0);
    }
}
