//! Root location relative to the unit circle.
//!
//! Counts are exact: circle roots are counted by pulling the self-inversive
//! common factor gcd(p, p#) through the Cayley substitution
//! z = (1+it)/(1-it) to a real-coefficient polynomial and running a Sturm
//! chain; the circle-free cofactor goes through a Schur--Cohn reduction, with
//! an exact Cauchy-index count (again via Cayley, into half-plane form) for
//! the measure-zero singular steps of the reduction.
//!
//! Explicit factor polynomials are exact whenever the inside/on/outside
//! grouping lies in Q(i)[z] — rational roots are recognized from numeric
//! approximations and verified exactly, and unsplittable square-free cofactors
//! that sit entirely in one region are grouped wholesale.  Otherwise factors
//! fall back to floating coefficients with a reconstruction certificate,
//! while the counts stay exact.

use crate::aberth;
use crate::error::Error;
use crate::poly::Poly;
use crate::scalar::GaussianRational;
use crate::sturm;
use crate::Result;
use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

type G = GaussianRational;

/// Exact root counts with multiplicity, relative to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootCounts {
    pub inside: usize,
    pub on_circle: usize,
    pub outside: usize,
}

impl RootCounts {
    pub fn total(&self) -> usize {
        self.inside + self.on_circle + self.outside
    }
}

/// Explicit factors of p = unit * inside * on_circle * outside.
#[derive(Debug, Clone)]
pub enum FactorParts {
    /// Monic exact factors; reconstruction is an exact identity.
    Exact {
        unit: G,
        inside: Poly,
        on_circle: Poly,
        outside: Poly,
    },
    /// Floating factors rebuilt from numeric roots, with the maximum
    /// coefficient error of the reconstruction as a certificate.
    Numeric {
        unit: Complex64,
        inside: Vec<Complex64>,
        on_circle: Vec<Complex64>,
        outside: Vec<Complex64>,
        max_residual: f64,
    },
}

/// A polynomial split by root location relative to the unit circle.
#[derive(Debug, Clone)]
pub struct CircleFactorization {
    pub counts: RootCounts,
    pub parts: FactorParts,
}

impl CircleFactorization {
    pub fn is_exact(&self) -> bool {
        matches!(self.parts, FactorParts::Exact { .. })
    }

    /// Monic exact factors (unit, inside, on, outside); errors when only
    /// numeric factors are available.
    pub fn exact_parts(&self) -> Result<(&G, &Poly, &Poly, &Poly)> {
        match &self.parts {
            FactorParts::Exact {
                unit,
                inside,
                on_circle,
                outside,
            } => Ok((unit, inside, on_circle, outside)),
            FactorParts::Numeric { .. } => Err(Error::FactorsNotExact),
        }
    }
}

/// The Cayley form D(t) = (1-it)^n p((1+it)/(1-it)) as a polynomial in t.
/// D collects p's roots as t = i(1-z)/(1+z); circle roots land on the real
/// t-axis, open-disk roots in the upper half-plane, and a root at z = -1
/// drops the degree.
fn cayley_poly(p: &Poly) -> Poly {
    let n = p.degree().expect("Cayley form of zero polynomial");
    let one_plus = Poly::new(vec![G::one(), G::i()]); // 1 + it
    let one_minus = Poly::new(vec![G::one(), -G::i()]); // 1 - it
    let mut acc = Poly::zero();
    let mut plus_pow = Poly::one();
    let mut minus_pows = Vec::with_capacity(n + 1);
    minus_pows.push(Poly::one());
    for k in 1..=n {
        minus_pows.push(&minus_pows[k - 1] * &one_minus);
    }
    for k in 0..=n {
        let c = p.coeff(k);
        if !c.is_zero() {
            acc = &acc + &(&plus_pow * &minus_pows[n - k]).scale(&c);
        }
        if k < n {
            plus_pow = &plus_pow * &one_plus;
        }
    }
    acc
}

/// Exact number of circle roots of the self-inversive polynomial
/// d = gcd(p, p#), which carries all circle roots of p at full multiplicity.
fn on_circle_count_of_gcd(d: &Poly) -> Result<usize> {
    let deg_d = d.degree().unwrap();
    if deg_d == 0 {
        return Ok(0);
    }
    // d is self-inversive: its root multiset is symmetric under reflection
    // across the circle with matching multiplicities, so the Cayley form of d
    // is a real polynomial up to a constant.
    let minus_one = Poly::from_ints(&[1, 1]);
    let at_minus_one = d.root_multiplicity(&G::from_int(-1));
    let mut core = d.clone();
    for _ in 0..at_minus_one {
        core = core.div_exact(&minus_one)?;
    }
    if core.degree() == Some(0) {
        return Ok(at_minus_one);
    }
    let cayley = cayley_poly_normalized(&core)?;
    Ok(at_minus_one + sturm::real_roots_with_multiplicity(&cayley))
}

/// Cayley form of a self-inversive polynomial without the root -1, divided by
/// its leading coefficient; the result must be real.
fn cayley_poly_normalized(core: &Poly) -> Result<sturm::RPoly> {
    let acc = cayley_poly(core);
    let lead_inv = acc.lead().inv();
    let normalized = acc.scale(&lead_inv);
    if !normalized.has_real_coeffs() {
        return Err(Error::InternalInconsistency(
            "Cayley form of a self-inversive polynomial was not real".into(),
        ));
    }
    let (re, _) = normalized.real_imag_parts();
    Ok(sturm::rtrim(re))
}

/// Schur transform: conj(p(0)) p - lead(p) p#.  Degree strictly drops.
fn schur_transform(p: &Poly) -> Poly {
    let a0 = p.constant_term().conj();
    let an = p.lead().clone();
    &p.scale(&a0) - &p.sharp().scale(&an)
}

/// Number of roots in the open unit disk of a polynomial with no roots on the
/// circle.  Schur--Cohn reduction: with delta = |p(0)|^2 - |lead|^2 and
/// Tp the Schur transform, inside(p) = inside(Tp) for delta > 0 and
/// inside(p) = deg(p) - inside(Tp) for delta < 0 (Rouché against p or p#).
/// A singular step (delta = 0, possible even without circle roots) falls
/// back to the exact Cauchy-index count in the Cayley half-plane picture.
fn inside_count_circle_free(p: &Poly) -> Result<usize> {
    let (p, origin) = p.strip_zero_roots();
    let n = p
        .degree()
        .ok_or_else(|| Error::InternalInconsistency("Schur-Cohn on zero polynomial".into()))?;
    if n == 0 {
        return Ok(origin);
    }
    let delta = p.constant_term().norm_sqr() - p.lead().norm_sqr();
    if delta.is_zero() {
        return Ok(origin + inside_count_cauchy(&p)?);
    }
    let t = schur_transform(&p);
    // t(0) = delta != 0, so t is nonzero and has no root at the origin.
    let inner = inside_count_circle_free(&t)?;
    if delta.is_positive() {
        Ok(origin + inner)
    } else {
        Ok(origin + n - inner)
    }
}

/// Exact inside count via the argument principle: the Cayley image of p has
/// exactly inside(p) roots in the upper half-plane when p has no circle
/// roots (and hence no root at -1).
fn inside_count_cauchy(p: &Poly) -> Result<usize> {
    let n = p.degree().unwrap();
    let (re, im) = cayley_poly(p).real_imag_parts();
    sturm::upper_half_plane_roots(&sturm::rtrim(re), &sturm::rtrim(im), n)
        .map_err(Error::InternalInconsistency)
}

/// Exact root counts of p relative to the unit circle, with multiplicity.
pub fn count_roots(p: &Poly) -> Result<RootCounts> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let total = p.degree().unwrap();
    if total == 0 {
        return Ok(RootCounts {
            inside: 0,
            on_circle: 0,
            outside: 0,
        });
    }
    let (p1, origin) = p.strip_zero_roots();
    let mut inside = origin;
    let mut on_circle = 0;
    if p1.degree().unwrap() > 0 {
        let d = p1.gcd(&p1.sharp())?;
        on_circle = on_circle_count_of_gcd(&d)?;
        let deg_d = d.degree().unwrap();
        if (deg_d - on_circle) % 2 != 0 {
            return Err(Error::InternalInconsistency(
                "reciprocal pairs in gcd(p, p#) must have even total degree".into(),
            ));
        }
        inside += (deg_d - on_circle) / 2;
        let e = p1.div_exact(&d)?;
        if e.degree().unwrap() > 0 {
            inside += inside_count_circle_free(&e)?;
        }
    }
    let outside = total
        .checked_sub(inside + on_circle)
        .ok_or_else(|| Error::InternalInconsistency("root counts exceed the degree".into()))?;
    Ok(RootCounts {
        inside,
        on_circle,
        outside,
    })
}

/// Cohn's criterion: all roots of p lie on the unit circle iff p is
/// self-inversive and p' has all roots in the closed unit disk.  This is an
/// independent decision procedure; it never consults [`count_roots`].
pub fn cohn_test(p: &Poly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Err(Error::ZeroPolynomial);
    }
    if p.self_inversive()?.is_none() {
        return Ok(false);
    }
    let dp = p.derivative();
    all_roots_in_closed_disk(&dp)
}

/// Exact recursive test for "all roots in the closed unit disk".
///
/// With a0 = f(0) after stripping origin roots and an the leading
/// coefficient:
/// * |a0| > |an| forces a root outside;
/// * |a0| = |an| forces every root onto the circle if any verdict is to be
///   positive, which is Cohn's criterion again one derivative down;
/// * |a0| < |an| reduces to the reflected Schur transform, since
///   out(f) = inside(Tf) and inside(g) = out(g#) for g(0) != 0.
fn all_roots_in_closed_disk(f: &Poly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (f, _origin) = f.strip_zero_roots();
    let n = f.degree().unwrap();
    if n == 0 {
        return Ok(true);
    }
    let delta = f.constant_term().norm_sqr() - f.lead().norm_sqr();
    if delta.is_positive() {
        return Ok(false);
    }
    if delta.is_zero() {
        return match f.self_inversive()? {
            None => Ok(false),
            Some(_) => all_roots_in_closed_disk(&f.derivative()),
        };
    }
    let t = schur_transform(&f);
    debug_assert!(!t.is_zero());
    all_roots_in_closed_disk(&t.sharp())
}

/// Best rational approximation with bounded denominator via continued
/// fractions; `None` if nothing within `eps`.
fn rationalize(x: f64, max_den: u64, eps: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0) = (BigInt::from(1), BigInt::from(0));
    let (mut p1, mut q1) = (BigInt::from(x.floor() as i64), BigInt::from(1));
    let mut frac = x - x.floor();
    for _ in 0..64 {
        let approx = p1.to_f64()? / q1.to_f64()?;
        if (approx - x).abs() <= eps {
            return Some(BigRational::new(p1, q1));
        }
        if frac.abs() < 1e-18 {
            break;
        }
        let recip = 1.0 / frac;
        let a = recip.floor();
        frac = recip - a;
        let ai = BigInt::from(a as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > BigInt::from(max_den) {
            break;
        }
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
    }
    let approx = p1.to_f64()? / q1.to_f64()?;
    if (approx - x).abs() <= eps {
        Some(BigRational::new(p1, q1))
    } else {
        None
    }
}

fn recognize_gaussian_root(p: &Poly, z: Complex64) -> Option<G> {
    let re = rationalize(z.re, 1_000_000_000_000, 1e-7)?;
    let im = rationalize(z.im, 1_000_000_000_000, 1e-7)?;
    let cand = G::new(re, im);
    if p.eval(&cand).is_zero() {
        Some(cand)
    } else {
        None
    }
}

/// Numeric roots with multiplicities via square-free decomposition + Aberth.
fn numeric_roots_with_multiplicity(p: &Poly) -> Result<Vec<(Complex64, usize)>> {
    let mut out = Vec::new();
    for (f, m) in p.squarefree_decomposition()? {
        if f.degree() == Some(0) {
            continue;
        }
        for r in aberth::roots(&f.coeffs_c64()) {
            out.push((r, m));
        }
    }
    Ok(out)
}

struct ExactSplit {
    inside: Poly,
    on_circle: Poly,
    outside: Poly,
}

/// Try to produce exact monic factors grouped by root location.
fn exact_split(p: &Poly, counts: &RootCounts) -> Result<Option<ExactSplit>> {
    let one = BigRational::one();
    let (mut work, origin) = p.monic().strip_zero_roots();
    let mut inside = Poly::monomial(G::one(), origin);
    let mut on_circle = Poly::one();
    let mut outside = Poly::one();

    // Peel off exactly-verified Gaussian-rational roots.
    if work.degree().unwrap() > 0 {
        let mut candidates: Vec<G> = Vec::new();
        for (root, _) in numeric_roots_with_multiplicity(&work)? {
            if let Some(g) = recognize_gaussian_root(&work, root) {
                if !candidates.contains(&g) {
                    candidates.push(g);
                }
            }
        }
        for g in candidates {
            let mult = work.root_multiplicity(&g);
            if mult == 0 {
                continue;
            }
            let factor = Poly::from_roots(&vec![g.clone(); mult]);
            work = work.div_exact(&factor)?;
            let n = g.norm_sqr();
            if n < one {
                inside = &inside * &factor;
            } else if n == one {
                on_circle = &on_circle * &factor;
            } else {
                outside = &outside * &factor;
            }
        }
    }

    // Whatever is left may still group exactly if each square-free factor
    // sits entirely in one region.
    if work.degree().unwrap() > 0 {
        for (f, m) in work.squarefree_decomposition()? {
            let c = count_roots(&f)?;
            let fm = f.pow(m as u32);
            let deg = f.degree().unwrap();
            if c.inside == deg {
                inside = &inside * &fm;
            } else if c.on_circle == deg {
                on_circle = &on_circle * &fm;
            } else if c.outside == deg {
                outside = &outside * &fm;
            } else {
                return Ok(None);
            }
        }
    }

    let split = ExactSplit {
        inside,
        on_circle,
        outside,
    };
    let check = RootCounts {
        inside: split.inside.degree().unwrap(),
        on_circle: split.on_circle.degree().unwrap(),
        outside: split.outside.degree().unwrap(),
    };
    if check != *counts {
        return Err(Error::InternalInconsistency(
            "exact factor grouping disagrees with exact counts".into(),
        ));
    }
    Ok(Some(split))
}

fn numeric_split(
    p: &Poly,
    counts: &RootCounts,
    tol: f64,
    eps_fac: f64,
) -> Result<CircleFactorization> {
    let mut inside_roots = Vec::new();
    let mut on_roots = Vec::new();
    let mut outside_roots = Vec::new();
    for (root, m) in numeric_roots_with_multiplicity(p)? {
        let dest = if (root.norm() - 1.0).abs() <= tol {
            &mut on_roots
        } else if root.norm() < 1.0 {
            &mut inside_roots
        } else {
            &mut outside_roots
        };
        for _ in 0..m {
            dest.push(root);
        }
    }
    let got = RootCounts {
        inside: inside_roots.len(),
        on_circle: on_roots.len(),
        outside: outside_roots.len(),
    };
    if got != *counts {
        return Err(Error::InternalInconsistency(format!(
            "numeric classification {got:?} disagrees with exact counts {counts:?}"
        )));
    }
    let unit = p.lead().to_complex64();
    let one = Complex64::new(1.0, 0.0);
    let inside = aberth::poly_from_roots(one, &inside_roots);
    let on_circle = aberth::poly_from_roots(one, &on_roots);
    let outside = aberth::poly_from_roots(one, &outside_roots);

    // Reconstruction certificate.
    let product = {
        let a = mul_c64(&inside, &on_circle);
        let b = mul_c64(&a, &outside);
        b.iter().map(|c| c * unit).collect::<Vec<_>>()
    };
    let scale = p
        .coeffs()
        .iter()
        .map(|c| c.to_complex64().norm())
        .fold(1.0f64, f64::max);
    let mut max_residual = 0.0f64;
    for k in 0..product.len().max(p.coeffs().len()) {
        let a = product.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0));
        let b = p
            .coeffs()
            .get(k)
            .map(G::to_complex64)
            .unwrap_or(Complex64::new(0.0, 0.0));
        max_residual = max_residual.max((a - b).norm() / scale);
    }
    if max_residual > eps_fac {
        return Err(Error::InternalInconsistency(format!(
            "factor reconstruction residual {max_residual:e} exceeds {eps_fac:e}"
        )));
    }
    Ok(CircleFactorization {
        counts: *counts,
        parts: FactorParts::Numeric {
            unit,
            inside,
            on_circle,
            outside,
            max_residual,
        },
    })
}

fn mul_c64(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Factor p by root location.  Counts are always exact; factor polynomials
/// are exact when the grouping lies in Q(i)[z] and numeric otherwise.
pub fn factor_circle(p: &Poly) -> Result<CircleFactorization> {
    factor_circle_with(p, 1e-9, 1e-10, false)
}

/// Factor with explicit tolerances; `force_numeric` skips the exact path.
pub fn factor_circle_with(
    p: &Poly,
    tol: f64,
    eps_fac: f64,
    force_numeric: bool,
) -> Result<CircleFactorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let counts = count_roots(p)?;
    if p.degree() == Some(0) {
        return Ok(CircleFactorization {
            counts,
            parts: FactorParts::Exact {
                unit: p.lead().clone(),
                inside: Poly::one(),
                on_circle: Poly::one(),
                outside: Poly::one(),
            },
        });
    }
    if !force_numeric {
        if let Some(split) = exact_split(p, &counts)? {
            let unit = p.lead().clone();
            let recon = &(&(&split.inside * &split.on_circle) * &split.outside).scale(&unit);
            if *recon != *p {
                return Err(Error::InternalInconsistency(
                    "exact factor reconstruction failed".into(),
                ));
            }
            return Ok(CircleFactorization {
                counts,
                parts: FactorParts::Exact {
                    unit,
                    inside: split.inside,
                    on_circle: split.on_circle,
                    outside: split.outside,
                },
            });
        }
    }
    numeric_split(p, &counts, tol, eps_fac)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> G {
        &G::from_int(re) + &(&G::from_int(im) * &G::i())
    }

    #[test]
    fn counts_spec_examples() {
        // (z-1)^3: all three roots on the circle
        let p = Poly::from_roots(&[G::one(), G::one(), G::one()]);
        assert_eq!(
            count_roots(&p).unwrap(),
            RootCounts { inside: 0, on_circle: 3, outside: 0 }
        );

        // iz(3+2z): roots 0 (inside) and -3/2 (outside)
        let p = Poly::new(vec![G::zero(), gi(0, 3), gi(0, 2)]);
        assert_eq!(
            count_roots(&p).unwrap(),
            RootCounts { inside: 1, on_circle: 0, outside: 1 }
        );

        // 1+3z^2: roots +-i/sqrt(3), modulus < 1
        let p = Poly::from_ints(&[1, 0, 3]);
        assert_eq!(
            count_roots(&p).unwrap(),
            RootCounts { inside: 2, on_circle: 0, outside: 0 }
        );
    }

    #[test]
    fn counts_mixed_multiplicities() {
        // (z-1/2)(z-1)^2
        let p = Poly::from_roots(&[G::from_ratio(1, 2), G::one(), G::one()]);
        assert_eq!(
            count_roots(&p).unwrap(),
            RootCounts { inside: 1, on_circle: 2, outside: 0 }
        );
        // reciprocal pair straddling the circle: (z-2)(z-1/2)
        let p = Poly::from_roots(&[G::from_int(2), G::from_ratio(1, 2)]);
        assert_eq!(
            count_roots(&p).unwrap(),
            RootCounts { inside: 1, on_circle: 0, outside: 1 }
        );
    }

    #[test]
    fn schur_cohn_singular_step_falls_back() {
        // roots 2 and i/2: |a0| = |lead| with no circle roots
        let p = Poly::from_roots(&[G::from_int(2), &G::from_ratio(1, 2) * &G::i()]);
        assert_eq!(
            count_roots(&p).unwrap(),
            RootCounts { inside: 1, on_circle: 0, outside: 1 }
        );
    }

    #[test]
    fn cohn_spec_examples() {
        assert!(cohn_test(&Poly::from_ints(&[1, 0, -1])).unwrap()); // 1 - z^2
        assert!(!cohn_test(&Poly::new(vec![G::from_ratio(-1, 2), G::one()])).unwrap());
        // (z-1)^2 (z+1)
        let p = Poly::from_roots(&[G::one(), G::one(), G::from_int(-1)]);
        assert!(cohn_test(&p).unwrap());
        // self-inversive but not circle-rooted: (z-2)(z-1/2) is ruled out
        let p = Poly::from_roots(&[G::from_int(2), G::from_ratio(1, 2)]);
        assert!(!cohn_test(&p).unwrap());
    }

    #[test]
    fn factors_spec_examples() {
        // z^2 - 1/4: both roots inside
        let p = Poly::new(vec![G::from_ratio(-1, 4), G::zero(), G::one()]);
        let f = factor_circle(&p).unwrap();
        let (unit, inside, on, out) = f.exact_parts().unwrap();
        assert_eq!(unit, &G::one());
        assert_eq!(inside, &p);
        assert_eq!(on, &Poly::one());
        assert_eq!(out, &Poly::one());

        // (z-1)(z-3)
        let p = Poly::from_roots(&[G::one(), G::from_int(3)]);
        let f = factor_circle(&p).unwrap();
        let (_, inside, on, out) = f.exact_parts().unwrap();
        assert!(inside.degree() == Some(0));
        assert_eq!(on, &Poly::from_roots(&[G::one()]));
        assert_eq!(out, &Poly::from_roots(&[G::from_int(3)]));

        // (z-1/2)(z-1)^2
        let p = Poly::from_roots(&[G::from_ratio(1, 2), G::one(), G::one()]);
        let f = factor_circle(&p).unwrap();
        assert_eq!(
            f.counts,
            RootCounts { inside: 1, on_circle: 2, outside: 0 }
        );
        let (_, inside, on, _) = f.exact_parts().unwrap();
        assert_eq!(inside, &Poly::from_roots(&[G::from_ratio(1, 2)]));
        assert_eq!(on, &Poly::from_roots(&[G::one(), G::one()]));
    }

    #[test]
    fn irrational_single_region_groups_exactly() {
        // z^2 - 2 has both roots outside, irrational
        let p = Poly::from_ints(&[-2, 0, 1]);
        let f = factor_circle(&p).unwrap();
        let (_, _, _, out) = f.exact_parts().unwrap();
        assert_eq!(out, &p);
    }

    #[test]
    fn mixed_irrational_goes_numeric() {
        // 1 + 3z + z^2 has roots (-3 +- sqrt(5))/2: one inside, one outside
        let p = Poly::from_ints(&[1, 3, 1]);
        let f = factor_circle(&p).unwrap();
        assert_eq!(
            f.counts,
            RootCounts { inside: 1, on_circle: 0, outside: 1 }
        );
        assert!(!f.is_exact());
        match f.parts {
            FactorParts::Numeric { max_residual, .. } => assert!(max_residual <= 1e-10),
            _ => unreachable!(),
        }
    }
}
