//! Structural profiles of T_ω and its adjoint: explicit kernel bases, domain
//! and range descriptors, complements, and Fredholm data.
//!
//! For a symbol with circle poles the forward operator acts on
//! Dom(T_ω) = q H^p + P_{m-1} by T_ω (qh + r) = s h + r~ where
//! r s = r~ q + r_2 with deg r_2 < m, and the adjoint is multiplication by
//! ω* restricted to q# H^p'.  Everything here evaluates those descriptions
//! exactly.

use crate::error::Error;
use crate::linalg;
use crate::poly::Poly;
use crate::rootloc;
use crate::scalar::GaussianRational;
use crate::symbol::RationalSymbol;
use crate::Result;
use std::fmt;

type G = GaussianRational;

/// A quotient of coprime polynomials with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numer: Poly,
    denom: Poly,
}

impl RationalFunction {
    pub fn new(numer: Poly, denom: Poly) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if numer.is_zero() {
            return Ok(RationalFunction {
                numer: Poly::zero(),
                denom: Poly::one(),
            });
        }
        let g = numer.gcd(&denom)?;
        let (mut n, mut d) = if g.degree() == Some(0) {
            (numer, denom)
        } else {
            (numer.div_exact(&g)?, denom.div_exact(&g)?)
        };
        let lead_inv = d.lead().inv();
        n = n.scale(&lead_inv);
        d = d.scale(&lead_inv);
        Ok(RationalFunction { numer: n, denom: d })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            numer: p,
            denom: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(Poly::zero())
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn denom(&self) -> &Poly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// The function viewed as a polynomial, when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.denom.degree() == Some(0)).then_some(&self.numer)
    }

    pub fn add(&self, other: &RationalFunction) -> Result<Self> {
        RationalFunction::new(
            &(&self.numer * &other.denom) + &(&other.numer * &self.denom),
            &self.denom * &other.denom,
        )
    }

    pub fn sub(&self, other: &RationalFunction) -> Result<Self> {
        RationalFunction::new(
            &(&self.numer * &other.denom) - &(&other.numer * &self.denom),
            &self.denom * &other.denom,
        )
    }

    pub fn mul(&self, other: &RationalFunction) -> Result<Self> {
        RationalFunction::new(&self.numer * &other.numer, &self.denom * &other.denom)
    }

    pub fn mul_poly(&self, p: &Poly) -> Result<Self> {
        RationalFunction::new(&self.numer * p, self.denom.clone())
    }

    pub fn div_poly(&self, p: &Poly) -> Result<Self> {
        RationalFunction::new(self.numer.clone(), &self.denom * p)
    }

    pub fn scale(&self, c: &G) -> Self {
        RationalFunction {
            numer: self.numer.scale(c),
            denom: self.denom.clone(),
        }
    }

    pub fn eval(&self, x: &G) -> Result<G> {
        let d = self.denom.eval(x);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(&self.numer.eval(x) / &d)
    }

    pub fn at_zero(&self) -> Result<G> {
        self.eval(&G::zero())
    }

    /// True when every pole lies strictly outside the closed unit disk, i.e.
    /// the function belongs to (in fact extends past) the Hardy space.
    pub fn poles_off_closed_disk(&self) -> Result<bool> {
        if self.denom.degree() == Some(0) {
            return Ok(true);
        }
        let counts = rootloc::count_roots(&self.denom)?;
        Ok(counts.inside == 0 && counts.on_circle == 0)
    }

    /// First `k` Taylor coefficients at the origin; needs denom(0) != 0.
    pub fn taylor(&self, k: usize) -> Result<Vec<G>> {
        let d0 = self.denom.constant_term();
        if d0.is_zero() {
            return Err(Error::DenominatorVanishesAtZero);
        }
        let d0_inv = d0.inv();
        let mut out = Vec::with_capacity(k);
        for j in 0..k {
            let mut acc = self.numer.coeff(j);
            for i in 1..=j {
                let di = self.denom.coeff(i);
                if !di.is_zero() {
                    acc = &acc - &(&di * &out[j - i]);
                }
            }
            out.push(&acc * &d0_inv);
        }
        Ok(out)
    }

    /// Backward shift (f - f(0)) / z.
    pub fn backward_shift(&self) -> Result<Self> {
        let f0 = self.at_zero().map_err(|_| Error::DenominatorVanishesAtZero)?;
        let shifted = &self.numer - &self.denom.scale(&f0);
        RationalFunction::new(shifted.shift_down(1)?, self.denom.clone())
    }

    /// T_{z^k}: multiplication by z^k for k >= 0, otherwise drop the first
    /// -k Taylor coefficients and shift down.
    pub fn toeplitz_shift(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            return RationalFunction::new(self.numer.shift_up(k as usize), self.denom.clone());
        }
        let drop = (-k) as usize;
        let head = Poly::new(self.taylor(drop)?);
        let remainder = &self.numer - &(&head * &self.denom);
        RationalFunction::new(remainder.shift_down(drop)?, self.denom.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.degree() == Some(0) && self.denom.constant_term().is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}

/// Symbolic descriptor of a subspace
/// T_{z^shift} (multiplier) Q_cut (inner * H) + span(finite_span),
/// where Q_k is the identity for k <= 0 and otherwise kills P_{k-1}.
#[derive(Debug, Clone)]
pub struct SpaceDescriptor {
    pub shift: i64,
    pub multiplier: Option<(Poly, Poly)>,
    pub tail_cut: i64,
    pub inner: Poly,
    pub finite_span: Vec<RationalFunction>,
}

impl SpaceDescriptor {
    pub fn inner_space(inner: Poly) -> Self {
        SpaceDescriptor {
            shift: 0,
            multiplier: None,
            tail_cut: 0,
            inner,
            finite_span: Vec::new(),
        }
    }

    pub fn with_span(inner: Poly, finite_span: Vec<RationalFunction>) -> Self {
        SpaceDescriptor {
            shift: 0,
            multiplier: None,
            tail_cut: 0,
            inner,
            finite_span,
        }
    }

    /// Inner factor normalized monic, for unit-insensitive comparisons.
    pub fn inner_monic(&self) -> Poly {
        self.inner.monic()
    }

    pub fn render(&self, space: &str) -> String {
        let mut out = String::new();
        if self.shift != 0 {
            out.push_str(&format!("T_z^{} ", self.shift));
        }
        if let Some((n, d)) = &self.multiplier {
            out.push_str(&format!("T_[({}) / ({})] ", n, d));
        }
        if self.tail_cut > 0 {
            out.push_str(&format!("Q_{} ", self.tail_cut));
        }
        if self.inner.degree() == Some(0) && self.inner.constant_term().is_one() {
            out.push_str(space);
        } else {
            out.push_str(&format!("({}) {}", self.inner, space));
        }
        if !self.finite_span.is_empty() {
            let parts: Vec<String> = self.finite_span.iter().map(|f| f.to_string()).collect();
            out.push_str(&format!(" + span{{{}}}", parts.join(", ")));
        }
        out
    }
}

/// Kernel dimension plus an explicit basis when the relevant circle
/// factorization is exact over Q(i).
#[derive(Debug, Clone)]
pub struct KernelData {
    pub dim: usize,
    pub basis: Option<Vec<RationalFunction>>,
}

/// Structured description of T_ω on H^p for a symbol with circle poles.
#[derive(Debug, Clone)]
pub struct OperatorProfile {
    pub p_label: f64,
    pub kernel: KernelData,
    pub domain: SpaceDescriptor,
    pub range: SpaceDescriptor,
    pub range_complement_dim: usize,
    pub closed_range: bool,
    pub dense_range: bool,
    pub injective: bool,
    pub fredholm: bool,
    pub index: Option<i64>,
}

/// Structured description of the adjoint T_ω* on H^p'.
#[derive(Debug, Clone)]
pub struct AdjointProfile {
    pub p_prime_label: f64,
    pub kernel: KernelData,
    pub domain: SpaceDescriptor,
    pub range: SpaceDescriptor,
    pub closed_range: bool,
    pub dense_range: Option<bool>,
    pub injective: bool,
    pub fredholm: bool,
    pub index: Option<i64>,
}

/// Fredholm-type flags available for any rational symbol.
#[derive(Debug, Clone, Copy)]
pub struct ForwardFlags {
    pub closed_range: bool,
    pub dense_range: bool,
    pub fredholm: bool,
}

fn check_p(p: f64) -> Result<f64> {
    if p > 1.0 && p.is_finite() {
        Ok(p)
    } else {
        Err(Error::InternalInconsistency(format!(
            "exponent label p = {p} outside (1, inf)"
        )))
    }
}

/// Closed/dense-range flags for T_ω, valid for any rational symbol.  The
/// operator has dense range exactly when its adjoint is injective, i.e. when
/// the zeros in the open disk do not outnumber the poles in the closed disk.
pub fn forward_flags(omega: &RationalSymbol) -> Result<ForwardFlags> {
    let sc = omega.s_counts()?;
    let qc = omega.q_counts();
    Ok(ForwardFlags {
        closed_range: sc.on_circle == 0,
        dense_range: sc.inside <= qc.inside + qc.on_circle,
        fredholm: sc.on_circle == 0,
    })
}

/// Full forward profile; requires all poles on the circle.
pub fn profile(omega: &RationalSymbol, p: f64) -> Result<OperatorProfile> {
    let p = check_p(p)?;
    if !omega.is_rat_t() {
        return Err(Error::NotRatT);
    }
    let sc = omega.s_counts()?;
    let m = omega.m();
    let kernel_dim = m.saturating_sub(sc.inside + sc.on_circle);
    let basis = match omega.s_split()?.exact_parts() {
        Ok((_, _, _, s_plus)) => {
            let mut v = Vec::with_capacity(kernel_dim);
            for j in 0..kernel_dim {
                v.push(RationalFunction::new(
                    Poly::monomial(G::one(), j),
                    s_plus.clone(),
                )?);
            }
            Some(v)
        }
        Err(_) => None,
    };
    let monomials: Vec<RationalFunction> = (0..m)
        .map(|j| RationalFunction::from_poly(Poly::monomial(G::one(), j)))
        .collect();
    let tilde_p = tilde_p_basis(omega)?;
    let range_complement_dim = sc.inside.saturating_sub(m);
    let closed_range = sc.on_circle == 0;
    // dense range of T <=> injectivity of T*: zeros inside <= poles in the
    // closed disk (all m of them are on the circle here).
    let dense_range = sc.inside <= m;
    let fredholm = closed_range;
    Ok(OperatorProfile {
        p_label: p,
        kernel: KernelData {
            dim: kernel_dim,
            basis,
        },
        domain: SpaceDescriptor::with_span(omega.q().clone(), monomials),
        range: SpaceDescriptor::with_span(
            omega.s().clone(),
            tilde_p.into_iter().map(RationalFunction::from_poly).collect(),
        ),
        range_complement_dim,
        closed_range,
        dense_range,
        injective: kernel_dim == 0,
        fredholm,
        index: fredholm.then_some(m as i64 - sc.inside as i64),
    })
}

/// Basis of P~ = { r : r q = r_1 s + r_2 with r_1, r_2 of degree < m },
/// the finite polynomial summand of Ran(T_ω).  Exact linear algebra on the
/// coefficient system, echelonized.
pub fn tilde_p_basis(omega: &RationalSymbol) -> Result<Vec<Poly>> {
    if !omega.is_rat_t() {
        return Err(Error::NotRatT);
    }
    let Some(n) = omega.n() else {
        return Ok(Vec::new());
    };
    let m = omega.m();
    if n == 0 {
        return Ok(Vec::new());
    }
    solve_polynomial_relation(omega.q(), omega.s(), n, m)
        .map(|basis| basis.into_iter().map(|(r, _, _)| r).collect())
}

/// Witnesses (r_1, r_2) with r q = r_1 s + r_2 for a member of P~.
pub fn tilde_p_witness(omega: &RationalSymbol, r: &Poly) -> Result<(Poly, Poly)> {
    let m = omega.m();
    relation_witness(r, omega.q(), omega.s(), m)
}

/// Basis of the adjoint-side finite summand P~*: for a proper symbol the
/// defining relation is r q# = z^(m-n) r_1 s# + r_2, otherwise
/// r q# = r_1 s# + r_2, with r_1, r_2 of degree < m.
pub fn adjoint_tilde_p_basis(omega: &RationalSymbol) -> Result<Vec<Poly>> {
    if !omega.is_rat_t() {
        return Err(Error::NotRatT);
    }
    let Some(n) = omega.n() else {
        return Ok(Vec::new());
    };
    let m = omega.m();
    let q_sharp = omega.q().sharp();
    let (mult, r_bound) = if m >= n {
        let s_sharp_deg = omega.s().sharp().degree().unwrap();
        (
            omega.s().sharp().shift_up(m - n),
            m - n + s_sharp_deg,
        )
    } else {
        (omega.s().sharp(), omega.s().sharp().degree().unwrap())
    };
    if r_bound == 0 {
        return Ok(Vec::new());
    }
    solve_polynomial_relation(&q_sharp, &mult, r_bound, m)
        .map(|basis| basis.into_iter().map(|(r, _, _)| r).collect())
}

/// Solve r*a = r1*b + r2 with deg r < r_deg, deg r1 < m, deg r2 < m; returns
/// the canonical basis of solutions projected to r, with witnesses.
fn solve_polynomial_relation(
    a: &Poly,
    b: &Poly,
    r_deg: usize,
    m: usize,
) -> Result<Vec<(Poly, Poly, Poly)>> {
    let ncols = r_deg + 2 * m;
    let max_deg = {
        let da = a.degree().unwrap_or(0);
        let db = b.degree().unwrap_or(0);
        (r_deg - 1 + da).max(if m > 0 { m - 1 + db } else { 0 }).max(m.saturating_sub(1))
    };
    let mut rows = Vec::with_capacity(max_deg + 1);
    for k in 0..=max_deg {
        let mut row = vec![G::zero(); ncols];
        for j in 0..r_deg {
            if k >= j {
                row[j] = a.coeff(k - j);
            }
        }
        for j in 0..m {
            if k >= j {
                row[r_deg + j] = -&b.coeff(k - j);
            }
            if k == j {
                row[r_deg + m + j] = -G::one();
            }
        }
        rows.push(row);
    }
    let null = linalg::nullspace(rows, ncols);
    // Project to the r block and echelonize for a canonical answer.
    let mut r_rows: Vec<Vec<G>> = null.iter().map(|v| v[..r_deg].to_vec()).collect();
    linalg::rref(&mut r_rows);
    let mut out = Vec::new();
    for row in r_rows {
        let r = Poly::new(row);
        if r.is_zero() {
            continue;
        }
        let (r1, r2) = relation_witness(&r, a, b, m)?;
        out.push((r, r1, r2));
    }
    Ok(out)
}

/// For fixed r, solve r*a = r1*b + r2 exactly with deg r1, r2 < m.
fn relation_witness(r: &Poly, a: &Poly, b: &Poly, m: usize) -> Result<(Poly, Poly)> {
    let target = r * a;
    let max_deg = target
        .degree()
        .unwrap_or(0)
        .max(if m > 0 { m - 1 + b.degree().unwrap_or(0) } else { 0 });
    let ncols = 2 * m;
    let mut rows = Vec::with_capacity(max_deg + 1);
    let mut rhs = Vec::with_capacity(max_deg + 1);
    for k in 0..=max_deg {
        let mut row = vec![G::zero(); ncols];
        for j in 0..m {
            if k >= j {
                row[j] = b.coeff(k - j);
            }
            if k == j {
                row[m + j] = G::one();
            }
        }
        rows.push(row);
        rhs.push(target.coeff(k));
    }
    let x = linalg::solve(rows, rhs, ncols).ok_or_else(|| {
        Error::InternalInconsistency("polynomial relation witness does not exist".into())
    })?;
    let r1 = Poly::new(x[..m].to_vec());
    let r2 = Poly::new(x[m..].to_vec());
    if &(&r1 * b) + &r2 != target {
        return Err(Error::InternalInconsistency(
            "polynomial relation witness failed to verify".into(),
        ));
    }
    Ok((r1, r2))
}

/// Adjoint profile, available for any rational symbol.
pub fn adjoint_profile(omega: &RationalSymbol, p: f64) -> Result<AdjointProfile> {
    let p = check_p(p)?;
    let p_prime = p / (p - 1.0);
    let sc = omega.s_counts()?;
    let qc = omega.q_counts();
    let m = omega.m();
    let n = omega.n().unwrap();
    let kernel_dim = sc.inside.saturating_sub(qc.inside + qc.on_circle);

    let domain_inner = if omega.is_rat_t() {
        omega.q().sharp()
    } else {
        let (_, _, q_on, _) = omega.q_split().exact_parts()?;
        q_on.sharp()
    };

    let basis = match (omega.s_split()?.exact_parts(), omega.q_split().exact_parts()) {
        (Ok((_, s_in, _, _)), Ok((_, q_in, q_on, _))) => {
            let numer_base = (&(q_in * q_on)).sharp();
            let denom = s_in.sharp();
            let mut v = Vec::with_capacity(kernel_dim);
            for j in 0..kernel_dim {
                v.push(RationalFunction::new(numer_base.shift_up(j), denom.clone())?);
            }
            Some(v)
        }
        _ => None,
    };

    let range = if omega.is_rat_t() {
        SpaceDescriptor {
            shift: m as i64 - n as i64,
            multiplier: None,
            tail_cut: 0,
            inner: omega.s().sharp(),
            finite_span: Vec::new(),
        }
    } else {
        let (_, _, s_on, s_out) = omega.s_split()?.exact_parts()?;
        let (_, _, _, q_out) = omega.q_split().exact_parts()?;
        SpaceDescriptor {
            shift: m as i64 - n as i64,
            multiplier: Some((s_out.sharp(), q_out.sharp())),
            tail_cut: (sc.on_circle + sc.inside) as i64 - (qc.on_circle + qc.inside) as i64,
            inner: s_on.sharp(),
            finite_span: Vec::new(),
        }
    };

    let closed_range = sc.on_circle == 0;
    let dense_range = omega
        .is_rat_t()
        .then(|| m <= sc.inside + sc.on_circle);
    let fredholm = closed_range;
    let index = (fredholm && omega.is_rat_t()).then_some(sc.inside as i64 - m as i64);
    Ok(AdjointProfile {
        p_prime_label: p_prime,
        kernel: KernelData {
            dim: kernel_dim,
            basis,
        },
        domain: SpaceDescriptor::inner_space(domain_inner),
        range,
        closed_range,
        dense_range,
        injective: kernel_dim == 0,
        fredholm,
        index,
    })
}

/// Membership side for [`dom_contains`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainSide {
    Forward,
    Adjoint,
}

/// Decide membership of a rational f with poles off the closed disk in
/// Dom(T_ω) (forward) or Dom(T_ω*) (adjoint), for circle-pole symbols.
///
/// Forward membership is automatic for such f: the decomposition f = qh + r
/// always exists with h again pole-free on the closed disk (see
/// [`decompose_in_domain`]).  Adjoint membership asks whether q# divides f
/// within the ring of rationals with poles off the closed disk, i.e. whether
/// q# divides the numerator exactly.
pub fn dom_contains(
    omega: &RationalSymbol,
    f: &RationalFunction,
    side: DomainSide,
) -> Result<bool> {
    if !omega.is_rat_t() {
        return Err(Error::NotRatT);
    }
    if !f.poles_off_closed_disk()? {
        return Err(Error::PolesInClosedDisk);
    }
    match side {
        DomainSide::Forward => {
            decompose_in_domain(omega, f)?;
            Ok(true)
        }
        DomainSide::Adjoint => {
            if f.is_zero() {
                return Ok(true);
            }
            let (_, rem) = f.numer().divrem(&omega.q().sharp())?;
            Ok(rem.is_zero())
        }
    }
}

/// Write f = q h + r with deg r < m and h rational with poles off the closed
/// disk.  Exists for every such f when all poles of ω are on the circle,
/// since the denominator of f is invertible modulo q.
pub fn decompose_in_domain(
    omega: &RationalSymbol,
    f: &RationalFunction,
) -> Result<(RationalFunction, Poly)> {
    if !omega.is_rat_t() {
        return Err(Error::NotRatT);
    }
    if !f.poles_off_closed_disk()? {
        return Err(Error::PolesInClosedDisk);
    }
    let q = omega.q();
    let m = omega.m();
    if m == 0 {
        let inv = q.constant_term().inv();
        return Ok((f.scale(&inv), Poly::zero()));
    }
    let u = f.numer();
    let v = f.denom();
    let (g, a, _) = v.ext_gcd(q)?;
    if g.degree() != Some(0) {
        return Err(Error::InternalInconsistency(
            "denominator shares a factor with q despite disjoint root regions".into(),
        ));
    }
    // r = u * v^{-1} mod q
    let (_, r) = (&(u * &a)).divrem(q)?;
    let w = (&(u - &(&r * v))).div_exact(q)?;
    let h = RationalFunction::new(w, v.clone())?;
    // qh + r must reconstruct f exactly.
    let recon = h.mul_poly(q)?.add(&RationalFunction::from_poly(r.clone()))?;
    if recon != *f {
        return Err(Error::InternalInconsistency(
            "domain decomposition failed to reconstruct the element".into(),
        ));
    }
    Ok((h, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::make_symbol;

    fn gi(re: i64, im: i64) -> G {
        &G::from_int(re) + &(&G::from_int(im) * &G::i())
    }

    fn helson_1() -> RationalSymbol {
        make_symbol(
            &Poly::new(vec![gi(0, -1), gi(0, -1)]),
            &Poly::from_ints(&[-1, 1]),
        )
        .unwrap()
    }

    #[test]
    fn profile_one_over_z_minus_1_squared() {
        let w = make_symbol(&Poly::one(), &Poly::from_roots(&[G::one(), G::one()])).unwrap();
        let pr = profile(&w, 2.0).unwrap();
        assert_eq!(pr.kernel.dim, 2);
        let basis = pr.kernel.basis.unwrap();
        assert_eq!(basis[0], RationalFunction::from_poly(Poly::one()));
        assert_eq!(basis[1], RationalFunction::from_poly(Poly::from_ints(&[0, 1])));
        assert_eq!(pr.domain.finite_span.len(), 2);
        assert_eq!(pr.domain.inner_monic(), Poly::from_roots(&[G::one(), G::one()]));
        assert!(pr.closed_range); // s = 1 has no circle zeros
        assert_eq!(pr.index, Some(2));
        // no zeros inside, two circle poles: T has dense range while T* does not
        assert!(pr.dense_range);
    }

    #[test]
    fn profile_z_over_z_minus_1() {
        let w = make_symbol(&Poly::from_ints(&[0, 1]), &Poly::from_ints(&[-1, 1])).unwrap();
        let pr = profile(&w, 2.0).unwrap();
        assert_eq!(pr.kernel.dim, 0);
        assert!(pr.dense_range);
        assert!(pr.closed_range);
        assert!(pr.fredholm);
        assert_eq!(pr.index, Some(0));
        assert_eq!(pr.range_complement_dim, 0);
        // P~ = span{1}
        let tp = tilde_p_basis(&w).unwrap();
        assert_eq!(tp, vec![Poly::one()]);
        let (r1, r2) = tilde_p_witness(&w, &tp[0]).unwrap();
        assert_eq!(&(&r1 * w.s()) + &r2, &tp[0] * w.q());
    }

    #[test]
    fn profile_helson() {
        let w = helson_1();
        let pr = profile(&w, 2.0).unwrap();
        assert_eq!(pr.kernel.dim, 0);
        assert!(!pr.closed_range); // s has the root -1 on the circle
        assert!(!pr.fredholm);
        assert_eq!(pr.index, None);
        assert!(pr.dense_range);
        // P~ = span{1}
        assert_eq!(tilde_p_basis(&w).unwrap(), vec![Poly::one()]);
    }

    #[test]
    fn tilde_p_trivial_for_constant_numerator() {
        let w = make_symbol(&Poly::one(), &Poly::from_roots(&[G::one(), G::one()])).unwrap();
        assert!(tilde_p_basis(&w).unwrap().is_empty());
    }

    #[test]
    fn adjoint_profile_helson() {
        let w = helson_1();
        let a = adjoint_profile(&w, 2.0).unwrap();
        assert_eq!(a.kernel.dim, 0);
        assert!(a.injective);
        // Dom = (1-z) H^2, compared monically
        assert_eq!(a.domain.inner_monic(), Poly::from_ints(&[-1, 1]));
        assert_eq!(a.range.shift, 0);
        assert_eq!(a.p_prime_label, 2.0);
    }

    #[test]
    fn adjoint_profile_kernel_dims() {
        // (z-1/2)/(z-1)^2: n_- = 1, m_0 = 2 -> dim 0
        let w = make_symbol(
            &Poly::from_roots(&[G::from_ratio(1, 2)]),
            &Poly::from_roots(&[G::one(), G::one()]),
        )
        .unwrap();
        assert_eq!(adjoint_profile(&w, 2.0).unwrap().kernel.dim, 0);

        // (z-1/2)(z-1/3)(z-1/4)/(z-1): n_- = 3, m_0 = 1 -> dim 2
        let s = Poly::from_roots(&[
            G::from_ratio(1, 2),
            G::from_ratio(1, 3),
            G::from_ratio(1, 4),
        ]);
        let w = make_symbol(&s, &Poly::from_ints(&[-1, 1])).unwrap();
        let a = adjoint_profile(&w, 2.0).unwrap();
        assert_eq!(a.kernel.dim, 2);
        let basis = a.kernel.basis.unwrap();
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(b.poles_off_closed_disk().unwrap());
        }
        // T_ω is injective (m = 1 <= 3 zeros in the closed disk), so T_ω* has dense range.
        assert_eq!(a.dense_range, Some(true));
    }

    #[test]
    fn dom_contains_helson() {
        let w = helson_1();
        let one = RationalFunction::from_poly(Poly::one());
        assert!(dom_contains(&w, &one, DomainSide::Forward).unwrap());
        assert!(!dom_contains(&w, &one, DomainSide::Adjoint).unwrap());
        // (1-z)/(z-2) is divisible by q# within the off-disk ring
        let f = RationalFunction::new(Poly::from_ints(&[1, -1]), Poly::from_ints(&[-2, 1])).unwrap();
        assert!(dom_contains(&w, &f, DomainSide::Adjoint).unwrap());
        // pole inside the disk is rejected
        let bad = RationalFunction::new(Poly::one(), Poly::new(vec![G::from_ratio(-1, 2), G::one()])).unwrap();
        assert!(matches!(
            dom_contains(&w, &bad, DomainSide::Forward),
            Err(Error::PolesInClosedDisk)
        ));
    }

    #[test]
    fn decompose_rational_element() {
        let w = helson_1();
        // f = 1/(z-2): decompose as qh + r
        let f = RationalFunction::new(Poly::one(), Poly::from_ints(&[-2, 1])).unwrap();
        let (h, r) = decompose_in_domain(&w, &f).unwrap();
        assert!(r.degree().map_or(true, |d| d < 1));
        assert!(h.poles_off_closed_disk().unwrap());
        let recon = h.mul_poly(w.q()).unwrap().add(&RationalFunction::from_poly(r)).unwrap();
        assert_eq!(recon, f);
    }
}
