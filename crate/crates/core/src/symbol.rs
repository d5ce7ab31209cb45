//! Rational symbols ω = s/q and their transforms.
//!
//! Construction always reduces to coprime form (reporting the removed factor
//! rather than rejecting, since a silent common factor changes the operator).
//! The class split is exact: a symbol is `RatT` when every pole lies on the
//! unit circle, decided by the exact root counts of the denominator.

use crate::error::Error;
use crate::poly::Poly;
use crate::rootloc::{self, CircleFactorization, RootCounts};
use crate::scalar::GaussianRational;
use crate::sturm;
use crate::Result;
use num::complex::Complex64;

type G = GaussianRational;

/// Pole-location class of a symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolClass {
    /// All poles on the unit circle.
    RatT,
    /// At least one pole off the unit circle.
    GeneralRat,
}

/// A reduced rational symbol ω = s/q with cached circle factorization data.
#[derive(Debug, Clone)]
pub struct RationalSymbol {
    s: Poly,
    q: Poly,
    s_split: Option<CircleFactorization>,
    q_split: CircleFactorization,
    class: SymbolClass,
    reduction: Option<Poly>,
}

impl RationalSymbol {
    pub fn s(&self) -> &Poly {
        &self.s
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }

    pub fn class(&self) -> SymbolClass {
        self.class
    }

    pub fn is_rat_t(&self) -> bool {
        self.class == SymbolClass::RatT
    }

    /// The common factor divided out at construction, when nontrivial.
    pub fn reduction(&self) -> Option<&Poly> {
        self.reduction.as_ref()
    }

    /// m = deg(q).
    pub fn m(&self) -> usize {
        self.q.degree().expect("denominator is nonzero")
    }

    /// n = deg(s); `None` for the zero symbol.
    pub fn n(&self) -> Option<usize> {
        self.s.degree()
    }

    pub fn q_split(&self) -> &CircleFactorization {
        &self.q_split
    }

    pub fn s_split(&self) -> Result<&CircleFactorization> {
        self.s_split.as_ref().ok_or(Error::ZeroNumerator)
    }

    pub fn q_counts(&self) -> RootCounts {
        self.q_split.counts
    }

    pub fn s_counts(&self) -> Result<RootCounts> {
        Ok(self.s_split()?.counts)
    }

    /// Is deg(s) <= deg(q)?  The zero symbol counts as proper.
    pub fn is_proper(&self) -> bool {
        self.n().map_or(true, |n| n <= self.m())
    }

    /// ω evaluated at a point where q does not vanish.
    pub fn eval(&self, x: &G) -> Result<G> {
        let qv = self.q.eval(x);
        if qv.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(&self.s.eval(x) / &qv)
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        self.s.eval_c64(z) / self.q.eval_c64(z)
    }

    /// The unimodular constant with q = gamma * q#; exists whenever all roots
    /// of q lie on the circle.
    pub fn q_gamma(&self) -> Result<G> {
        if !self.is_rat_t() {
            return Err(Error::NotRatT);
        }
        self.q
            .self_inversive()?
            .ok_or_else(|| Error::InternalInconsistency(
                "circle-rooted denominator is not self-inversive".into(),
            ))
    }

    /// Equality as rational functions (cross-multiplication).
    pub fn equiv(&self, other: &RationalSymbol) -> bool {
        &self.s * &other.q == &other.s * &self.q
    }
}

/// Construct the reduced symbol s/q.  Common factors are divided out and
/// reported through [`RationalSymbol::reduction`].
pub fn make_symbol(s_in: &Poly, q_in: &Poly) -> Result<RationalSymbol> {
    if q_in.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let (s, q, reduction) = if s_in.is_zero() {
        (Poly::zero(), Poly::constant(q_in.lead().clone()), {
            let g = q_in.monic();
            if g.degree() == Some(0) {
                None
            } else {
                Some(g)
            }
        })
    } else {
        let g = s_in.gcd(q_in)?;
        if g.degree() == Some(0) {
            (s_in.clone(), q_in.clone(), None)
        } else {
            (s_in.div_exact(&g)?, q_in.div_exact(&g)?, Some(g))
        }
    };
    let q_split = rootloc::factor_circle(&q)?;
    let s_split = if s.is_zero() {
        None
    } else {
        Some(rootloc::factor_circle(&s)?)
    };
    let class = if q_split.counts.inside == 0 && q_split.counts.outside == 0 {
        SymbolClass::RatT
    } else {
        SymbolClass::GeneralRat
    };
    Ok(RationalSymbol {
        s,
        q,
        s_split,
        q_split,
        class,
        reduction,
    })
}

/// z^shift * numer / denom with the power of z kept explicit; `shift` may be
/// negative, mirroring the reduction T_{z^k ω} = T_{z^k} T_ω.
#[derive(Debug, Clone)]
pub struct ShiftedSymbol {
    pub shift: i64,
    pub numer: Poly,
    pub denom: Poly,
}

impl ShiftedSymbol {
    /// Collapse a nonnegative shift into a plain symbol.
    pub fn flatten(&self) -> Result<RationalSymbol> {
        if self.shift < 0 {
            return Err(Error::NotProper);
        }
        make_symbol(&self.numer.shift_up(self.shift as usize), &self.denom)
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        let base = self.numer.eval_c64(z) / self.denom.eval_c64(z);
        base * z.powi(self.shift as i32)
    }
}

/// The boundary conjugate symbol ω*(z) = conj(ω(z)) on the circle, i.e.
/// z^(m-n) s# / q#.
pub fn omega_star(omega: &RationalSymbol) -> ShiftedSymbol {
    match omega.n() {
        None => ShiftedSymbol {
            shift: 0,
            numer: Poly::zero(),
            denom: omega.q().sharp(),
        },
        Some(n) => ShiftedSymbol {
            shift: omega.m() as i64 - n as i64,
            numer: omega.s().sharp(),
            denom: omega.q().sharp(),
        },
    }
}

/// ω = ω_- (z^κ ω_0) ω_+ split by pole/zero location, with κ = n_- − m_-.
#[derive(Debug, Clone)]
pub struct WienerHopfSplit {
    pub kappa: i64,
    /// ω_- = s_- / (z^κ q_-): poles and zeros inside the circle.
    pub minus: ShiftedSymbol,
    /// ω_0: poles and zeros on the circle (carries the scalar unit of ω).
    pub zero: RationalSymbol,
    /// ω_+ = s_+ / q_+: poles and zeros outside the circle.
    pub plus: RationalSymbol,
}

/// Split ω by root location.  Requires exact factorizations of both s and q.
pub fn wiener_hopf_split(omega: &RationalSymbol) -> Result<WienerHopfSplit> {
    let s_split = omega.s_split()?;
    let (s_unit, s_in, s_on, s_out) = s_split.exact_parts()?;
    let (q_unit, q_in, q_on, q_out) = omega.q_split().exact_parts()?;
    let kappa = s_in.degree().unwrap() as i64 - q_in.degree().unwrap() as i64;
    let minus = ShiftedSymbol {
        shift: -kappa,
        numer: s_in.clone(),
        denom: q_in.clone(),
    };
    let unit = s_unit / q_unit;
    let zero = make_symbol(&s_on.scale(&unit), q_on)?;
    let plus = make_symbol(s_out, q_out)?;
    // Product identity, z-powers already cancel by construction:
    // s * (q_- q_0 q_+) == q * (s_- s_0' s_+) with s_0' carrying the unit.
    let lhs = omega.s() * &(&(&minus.denom * zero.q()) * plus.q());
    let rhs = omega.q() * &(&(&minus.numer * zero.s()) * plus.s());
    if lhs != rhs {
        return Err(Error::InternalInconsistency(
            "Wiener-Hopf product does not reconstruct the symbol".into(),
        ));
    }
    Ok(WienerHopfSplit {
        kappa,
        minus,
        zero,
        plus,
    })
}

/// Certificate that ω is real-valued on the circle: the unimodular constant
/// of q and the self-inversive core of s.
#[derive(Debug, Clone)]
pub struct SymmetryWitness {
    pub gamma: G,
    pub s_tilde: Poly,
}

/// Decide ω(T) ⊂ R for a symbol with circle poles, exactly.
///
/// Two independent routes are evaluated: the coefficient conditions
/// (properness, s = z^(m-n) s~ with s~ self-inversive, and the matching of
/// the unimodular constants of s~ and q), and the rational-function identity
/// ω* = ω after cross multiplication.  They must agree; disagreement is an
/// internal error.
pub fn real_on_circle(omega: &RationalSymbol) -> Result<Option<SymmetryWitness>> {
    if !omega.is_rat_t() {
        return Err(Error::NotRatT);
    }
    if omega.s().is_zero() {
        return Err(Error::ZeroNumerator);
    }
    let m = omega.m();
    let n = omega.n().unwrap();

    // Route A: coefficient conditions.
    let witness = if n > m {
        None
    } else if omega.s().zero_root_multiplicity() < m - n {
        None
    } else {
        let s_tilde = omega.s().shift_down(m - n)?;
        match s_tilde.self_inversive()? {
            None => None,
            Some(delta) => {
                let gamma = omega.q_gamma()?;
                if delta == gamma {
                    Some(SymmetryWitness { gamma, s_tilde })
                } else {
                    None
                }
            }
        }
    };

    // Route B: ω* = ω by cross multiplication.
    let sharp_s = omega.s().sharp();
    let sharp_q = omega.q().sharp();
    let route_b = if m >= n {
        &sharp_s.shift_up(m - n) * omega.q() == omega.s() * &sharp_q
    } else {
        &sharp_s * omega.q() == &omega.s().shift_up(n - m) * &sharp_q
    };

    if witness.is_some() != route_b {
        return Err(Error::InternalInconsistency(
            "symmetry criteria disagree between the coefficient and conjugate routes".into(),
        ));
    }
    Ok(witness)
}

/// Compose a real rational function with the inverse Cayley transform:
/// ω(z) = ω~(-i (z+1)/(z-1)).  The poles of ω~ must be real so that the
/// result has poles only on the circle; this is checked exactly with a Sturm
/// chain.
pub fn cayley_compose(s_real: &Poly, q_real: &Poly) -> Result<RationalSymbol> {
    cayley_compose_impl(s_real, q_real, true)
}

/// As [`cayley_compose`] but skipping the real-rootedness check of the
/// denominator; the result may then fail to be a circle-pole symbol.
pub fn cayley_compose_unchecked(s_real: &Poly, q_real: &Poly) -> Result<RationalSymbol> {
    cayley_compose_impl(s_real, q_real, false)
}

fn cayley_compose_impl(s_real: &Poly, q_real: &Poly, check_poles: bool) -> Result<RationalSymbol> {
    if q_real.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if s_real.is_zero() {
        return Err(Error::ZeroNumerator);
    }
    if !s_real.has_real_coeffs() || !q_real.has_real_coeffs() {
        return Err(Error::NonRealCoefficients);
    }
    if check_poles {
        let (re, _) = q_real.real_imag_parts();
        let deg = q_real.degree().unwrap();
        if sturm::real_roots_with_multiplicity(&sturm::rtrim(re)) != deg {
            return Err(Error::NonRealPoles);
        }
    }
    let k = s_real
        .degree()
        .unwrap()
        .max(q_real.degree().unwrap());
    make_symbol(&cayley_lift(s_real, k), &cayley_lift(q_real, k))
}

/// sum_j p_j (-i)^j (z+1)^j (z-1)^(k-j): the numerator of p(-i(z+1)/(z-1))
/// over (z-1)^k.
fn cayley_lift(p: &Poly, k: usize) -> Poly {
    let plus = Poly::from_ints(&[1, 1]);
    let minus = Poly::from_ints(&[-1, 1]);
    let mut minus_pows = Vec::with_capacity(k + 1);
    minus_pows.push(Poly::one());
    for j in 1..=k {
        minus_pows.push(&minus_pows[j - 1] * &minus);
    }
    let mut acc = Poly::zero();
    let mut plus_pow = Poly::one();
    let mut i_pow = G::one();
    let minus_i = -G::i();
    for j in 0..=k {
        let c = p.coeff(j);
        if !c.is_zero() {
            acc = &acc + &(&plus_pow * &minus_pows[k - j]).scale(&(&c * &i_pow));
        }
        if j < k {
            plus_pow = &plus_pow * &plus;
            i_pow = &i_pow * &minus_i;
        }
    }
    acc
}

/// Classification of the boundary image ω(T) for real-valued symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircleImage {
    NotRealValued,
    RealProperSubset,
    RealFullLine,
}

/// Sampling classifier for ω(T).  Advisory only: verdicts that matter use
/// exact criteria elsewhere, and the sampled union can only underestimate the
/// true image.
pub fn circle_image_classify(omega: &RationalSymbol) -> Result<CircleImage> {
    const N_SAMP: usize = 512;
    if !omega.is_rat_t() {
        return Err(Error::NotRatT);
    }
    if real_on_circle(omega)?.is_none() {
        return Ok(CircleImage::NotRealValued);
    }
    let m = omega.m();
    if m == 0 {
        // Real on the circle with no poles forces a constant.
        return Ok(CircleImage::RealProperSubset);
    }

    // Pole angles from the numeric roots of q (all on the circle).
    let mut angles: Vec<f64> = Vec::new();
    for (f, _) in omega.q().squarefree_decomposition()? {
        if f.degree() == Some(0) {
            continue;
        }
        for r in crate::aberth_roots(&f) {
            let theta = r.arg().rem_euclid(2.0 * std::f64::consts::PI);
            if !angles.iter().any(|a| (a - theta).abs() < 1e-7) {
                angles.push(theta);
            }
        }
    }
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let tau = 2.0 * std::f64::consts::PI;
    let value = |theta: f64| -> f64 {
        let z = Complex64::from_polar(1.0, theta);
        omega.eval_c64(z).re
    };
    let q_scale: f64 = omega
        .q()
        .coeffs()
        .iter()
        .map(|c| c.to_complex64().norm())
        .sum();

    // One-sided limit at a pole: walk toward it geometrically, down to the
    // depth where evaluating q starts to drown in cancellation noise, and
    // take the sign at the trusted depth of largest magnitude — the pole
    // term dominates there even when its residue is tiny against the smooth
    // part of the arc.
    let pole_limit_sign = |theta_pole: f64, side: f64, span: f64| -> f64 {
        let mut best = (0.0f64, 0.0f64); // (|v|, sign)
        for j in 0..24 {
            let delta = span / 64.0 * 0.25f64.powi(j);
            let theta = theta_pole + side * delta;
            let z = Complex64::from_polar(1.0, theta);
            let qv = omega.q().eval_c64(z);
            if qv.norm() < 1e-11 * q_scale.max(1.0) {
                break;
            }
            let v = (omega.s().eval_c64(z) / qv).re;
            if v.abs() >= best.0 {
                best = (v.abs(), v.signum());
            }
        }
        best.1
    };

    let mut intervals: Vec<(f64, f64)> = Vec::new();
    for (i, &a) in angles.iter().enumerate() {
        let b = if i + 1 < angles.len() {
            angles[i + 1]
        } else {
            angles[0] + tau
        };
        let span = b - a;
        let samples: Vec<f64> = (0..N_SAMP)
            .map(|j| value(a + span * (j as f64 + 0.5) / N_SAMP as f64))
            .collect();
        // Sampled extremes understate the true arc image; inflate each
        // finite endpoint by the local sample variation so that touching
        // arcs cannot produce a phantom gap.
        let neighbor_gap = |idx: usize| -> f64 {
            let mut g = 0.0f64;
            if idx > 0 {
                g = g.max((samples[idx] - samples[idx - 1]).abs());
            }
            if idx + 1 < samples.len() {
                g = g.max((samples[idx] - samples[idx + 1]).abs());
            }
            g
        };
        let (lo_idx, _) = samples
            .iter()
            .enumerate()
            .min_by(|x, y| x.1.partial_cmp(y.1).unwrap())
            .unwrap();
        let (hi_idx, _) = samples
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.partial_cmp(y.1).unwrap())
            .unwrap();
        let mut lo = samples[lo_idx] - 3.0 * neighbor_gap(lo_idx) - 1e-9;
        let mut hi = samples[hi_idx] + 3.0 * neighbor_gap(hi_idx) + 1e-9;
        for sign in [pole_limit_sign(a, 1.0, span), pole_limit_sign(b, -1.0, span)] {
            if sign > 0.0 {
                hi = f64::INFINITY;
            } else if sign < 0.0 {
                lo = f64::NEG_INFINITY;
            }
        }
        intervals.push((lo, hi));
    }

    intervals.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let mut covered_to = f64::NEG_INFINITY;
    for &(lo, hi) in &intervals {
        if covered_to == f64::NEG_INFINITY {
            if lo > f64::NEG_INFINITY {
                return Ok(CircleImage::RealProperSubset);
            }
        } else if lo > covered_to {
            return Ok(CircleImage::RealProperSubset);
        }
        covered_to = covered_to.max(hi);
    }
    if covered_to == f64::INFINITY {
        Ok(CircleImage::RealFullLine)
    } else {
        Ok(CircleImage::RealProperSubset)
    }
}
