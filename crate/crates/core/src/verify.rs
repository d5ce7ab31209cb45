//! Built-in verification corpus.
//!
//! Each runner checks one family of exact identities or certified numeric
//! bounds on randomized or structured inputs, and reports a single
//! pass/fail outcome with a short detail line.  The CLI `selftest`
//! subcommand runs all of them; the acceptance test suite drives the same
//! runners with the documented sizes and tolerances.

use crate::apply::{
    adjoint_identity_check, apply_adjoint, apply_adjoint_general, compression_solve,
    sarason_axioms_probe, szego_eigen, DomElement,
};
use crate::poly::Poly;
use crate::profile::{adjoint_profile, RationalFunction};
use crate::rootloc::{cohn_test, count_roots};
use crate::scalar::GaussianRational;
use crate::selfadjoint::{analyze, helson_family};
use crate::smirnov::canonical_form;
use crate::symbol::{cayley_compose, make_symbol, real_on_circle, CircleImage, RationalSymbol};
use num::bigint::BigInt;
use num::rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

type G = GaussianRational;

/// Outcome of one named verification run.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: String) -> Self {
        CheckOutcome {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckOutcome {
            name,
            passed: false,
            detail,
        }
    }
}

/// Seed from TOEPLITZ_LAB_SEED, falling back to a fixed default.
pub fn default_seed() -> u64 {
    std::env::var("TOEPLITZ_LAB_SEED")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0x5eed_7e11)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(rng: &mut ChaCha8Rng, max_abs: i64, max_den: i64) -> BigRational {
    let n = rng.gen_range(-max_abs..=max_abs);
    let d = rng.gen_range(1..=max_den);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gaussian(rng: &mut ChaCha8Rng) -> G {
    G::new(rat(rng, 3, 3), rat(rng, 3, 3))
}

pub fn nonzero_gaussian(rng: &mut ChaCha8Rng) -> G {
    loop {
        let g = gaussian(rng);
        if !g.is_zero() {
            return g;
        }
    }
}

/// Random polynomial of exactly the given degree.
pub fn poly_of_degree(rng: &mut ChaCha8Rng, deg: usize) -> Poly {
    let mut coeffs: Vec<G> = (0..deg).map(|_| gaussian(rng)).collect();
    coeffs.push(nonzero_gaussian(rng));
    Poly::new(coeffs)
}

/// An exact point on the unit circle: (1 - t^2 + 2ti) / (1 + t^2) for
/// rational t, or one of the lattice points.
pub fn circle_point(rng: &mut ChaCha8Rng) -> G {
    match rng.gen_range(0u8..6) {
        0 => G::from_int(1),
        1 => G::from_int(-1),
        2 => G::i(),
        3 => -G::i(),
        _ => {
            let t = rat(rng, 3, 3);
            let t2 = &t * &t;
            let denom = BigRational::from_integer(1.into()) + &t2;
            G::new(
                (BigRational::from_integer(1.into()) - &t2) / &denom,
                (BigRational::from_integer(2.into()) * &t) / &denom,
            )
        }
    }
}

/// Random denominator with all roots on the circle, degree in [1, max_m].
pub fn circle_poly(rng: &mut ChaCha8Rng, max_m: usize) -> Poly {
    let m = rng.gen_range(1..=max_m);
    let mut roots = Vec::with_capacity(m);
    while roots.len() < m {
        let p = circle_point(rng);
        let mult = rng.gen_range(1..=2.min(m - roots.len()));
        for _ in 0..mult {
            roots.push(p.clone());
        }
    }
    Poly::from_roots(&roots)
}

/// Random circle-pole symbol with coprime s, q; `proper` forces n <= m.
pub fn ratt_symbol(rng: &mut ChaCha8Rng, max_m: usize, max_n: usize, proper: bool) -> RationalSymbol {
    loop {
        let q = circle_poly(rng, max_m);
        let m = q.degree().unwrap();
        let n_cap = if proper { m } else { max_n };
        let n = rng.gen_range(0..=n_cap);
        let s = poly_of_degree(rng, n);
        if s.is_zero() {
            continue;
        }
        if s.gcd(&q).unwrap().degree() != Some(0) {
            continue;
        }
        let w = make_symbol(&s, &q).unwrap();
        if w.reduction().is_none() {
            return w;
        }
    }
}

/// Random symmetric symbol from the Cayley correspondence.
pub fn symmetric_symbol(rng: &mut ChaCha8Rng) -> RationalSymbol {
    loop {
        let ds = rng.gen_range(0..=3usize);
        let s_tilde = {
            let mut coeffs: Vec<G> = (0..ds).map(|_| G::from_real(rat(rng, 3, 3))).collect();
            coeffs.push(G::from_real(loop {
                let r = rat(rng, 3, 3);
                if !num::Zero::is_zero(&r) {
                    break r;
                }
            }));
            Poly::new(coeffs)
        };
        let dq = rng.gen_range(0..=3usize);
        let q_tilde = {
            let roots: Vec<G> = (0..dq).map(|_| G::from_real(rat(rng, 3, 2))).collect();
            Poly::from_roots(&roots)
        };
        if s_tilde.is_zero() {
            continue;
        }
        let w = cayley_compose(&s_tilde, &q_tilde).unwrap();
        if w.m() >= 1 && !w.s().is_zero() {
            return w;
        }
    }
}

/// Random element of Dom(T_ω) with polynomial h.
pub fn dom_element(rng: &mut ChaCha8Rng, omega: &RationalSymbol, max_h_deg: usize) -> DomElement {
    let h = if rng.gen_bool(0.2) {
        Poly::zero()
    } else {
        let deg = rng.gen_range(0..=max_h_deg);
        poly_of_degree(rng, deg)
    };
    let m = omega.m();
    let r = if m == 0 || rng.gen_bool(0.2) {
        Poly::zero()
    } else {
        let deg = rng.gen_range(0..m);
        poly_of_degree(rng, deg)
    };
    DomElement::from_polys(omega, h, r).unwrap()
}

/// Criterion 1: the Cayley-power family ω_k for k = 1..6 is symmetric with a
/// selfadjoint extension exactly for even k; the k = 1 adjoint domain is
/// (1-z) H^2; exact arithmetic, under one second.
pub fn criterion_helson_family() -> CheckOutcome {
    const NAME: &str = "helson_family";
    let start = Instant::now();
    for k in 1..=6u32 {
        let (omega, report) = match helson_family(k) {
            Ok(v) => v,
            Err(e) => return CheckOutcome::fail(NAME, format!("k = {k}: {e}")),
        };
        if !report.symmetric {
            return CheckOutcome::fail(NAME, format!("k = {k} not symmetric"));
        }
        if report.extension_exists() != Some(k % 2 == 0) {
            return CheckOutcome::fail(NAME, format!("k = {k}: wrong extension verdict"));
        }
        if k == 1 {
            let a = match adjoint_profile(&omega, 2.0) {
                Ok(a) => a,
                Err(e) => return CheckOutcome::fail(NAME, format!("k = 1 profile: {e}")),
            };
            if a.domain.inner_monic() != Poly::from_ints(&[-1, 1]) {
                return CheckOutcome::fail(NAME, "k = 1 adjoint domain is not (1-z)H^2".into());
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        return CheckOutcome::fail(NAME, format!("took {elapsed:?}, limit 1 s"));
    }
    CheckOutcome::pass(NAME, format!("k = 1..6 in {elapsed:?}"))
}

/// Criterion 2: the quadratic family i(1 + a z + z^2)/(1 - z^2) admits a
/// selfadjoint extension iff |a| > 2, and a = 2 degenerates by a coprimality
/// reduction.
pub fn criterion_quadratic_family() -> CheckOutcome {
    const NAME: &str = "quadratic_family";
    let build = |num: i64, den: i64| {
        let a = G::from_ratio(num, den);
        let s = Poly::new(vec![G::i(), &a * &G::i(), G::i()]);
        make_symbol(&s, &Poly::from_ints(&[1, 0, -1])).unwrap()
    };
    for (num, den, expect) in [
        (1i64, 2i64, false),
        (1, 1, false),
        (3, 2, false),
        (3, 1, true),
        (4, 1, true),
    ] {
        let report = match analyze(&build(num, den)) {
            Ok(r) => r,
            Err(e) => return CheckOutcome::fail(NAME, format!("a = {num}/{den}: {e}")),
        };
        if report.extension_exists() != Some(expect) {
            return CheckOutcome::fail(NAME, format!("a = {num}/{den}: wrong verdict"));
        }
    }
    let degenerate = build(2, 1);
    if degenerate.reduction().is_none() {
        return CheckOutcome::fail(NAME, "a = 2 did not report a reduction".into());
    }
    CheckOutcome::pass(NAME, "a in {1/2, 1, 3/2, 3, 4} plus the a = 2 degeneracy".into())
}

/// Criterion 3: the adjoint pairing identity <Tf, q#v> = <f, T*(q#v)> is the
/// exact rational zero on randomized data; under ten seconds.
pub fn criterion_adjoint_pairing(seed: u64, cases: usize) -> CheckOutcome {
    const NAME: &str = "adjoint_pairing";
    let start = Instant::now();
    let mut rng = rng_from_seed(seed ^ 0x03);
    for case in 0..cases {
        let omega = ratt_symbol(&mut rng, 4, 6, false);
        let f = dom_element(&mut rng, &omega, 6);
        let v_deg = rng.gen_range(0..=6);
        let v = poly_of_degree(&mut rng, v_deg);
        match adjoint_identity_check(&omega, &f, &v) {
            Ok(res) if res.is_zero() => {}
            Ok(res) => {
                return CheckOutcome::fail(
                    NAME,
                    format!("case {case}: nonzero residual {res} for ω = ({})/({})",
                        omega.s(), omega.q()),
                )
            }
            Err(e) => return CheckOutcome::fail(NAME, format!("case {case}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 10.0 {
        return CheckOutcome::fail(NAME, format!("took {elapsed:?}, limit 10 s"));
    }
    CheckOutcome::pass(NAME, format!("{cases} random probes in {elapsed:?}"))
}

/// Criterion 4: the finite-section solve agrees exactly with the division
/// route on random proper symbols.
pub fn criterion_compression_oracle(seed: u64, cases: usize) -> CheckOutcome {
    const NAME: &str = "compression_vs_division";
    let mut rng = rng_from_seed(seed ^ 0x04);
    for case in 0..cases {
        let omega = ratt_symbol(&mut rng, 8, 8, true);
        let m = omega.m();
        let r1_deg = rng.gen_range(0..m);
        let r1 = poly_of_degree(&mut rng, r1_deg);
        let via_division = (&(&r1 * omega.s())).divrem(omega.q()).unwrap().0;
        match compression_solve(&omega, &r1) {
            Ok(r) if r == via_division => {}
            Ok(_) => return CheckOutcome::fail(NAME, format!("case {case}: routes disagree")),
            Err(e) => return CheckOutcome::fail(NAME, format!("case {case}: {e}")),
        }
    }
    CheckOutcome::pass(NAME, format!("{cases} random proper symbols, m <= 8"))
}

/// Criterion 5: adjoint kernel dimension max(0, n_- - m_- - m_0) on a grid
/// of symbols, every emitted basis element annihilated exactly.
pub fn criterion_adjoint_kernel_grid() -> CheckOutcome {
    const NAME: &str = "adjoint_kernel_grid";
    let inside_pool = [
        G::from_ratio(1, 2),
        G::from_ratio(1, 3),
        G::from_ratio(1, 4),
        G::from_ratio(2, 5),
    ];
    let s_inside_pool = [
        G::from_ratio(1, 5),
        G::from_ratio(1, 6),
        G::from_ratio(1, 7),
        G::from_ratio(2, 7),
    ];
    let mut tested = 0usize;
    for n_minus in 0..=3usize {
        for m_minus in 0..=3usize {
            for m_0 in 0..=3usize {
                if n_minus == 0 && m_minus + m_0 == 0 {
                    continue; // constant over constant: nothing to test
                }
                let s = {
                    let mut p = Poly::from_roots(&s_inside_pool[..n_minus]);
                    // add one zero outside the circle for variety
                    if (n_minus + m_minus) % 2 == 0 {
                        p = &p * &Poly::from_roots(&[G::from_int(3)]);
                    }
                    p
                };
                let q = {
                    let inside = Poly::from_roots(&inside_pool[..m_minus]);
                    let on = Poly::from_roots(&vec![G::one(); m_0]);
                    &inside * &on
                };
                let omega = match make_symbol(&s, &q) {
                    Ok(w) => w,
                    Err(e) => return CheckOutcome::fail(NAME, format!("build: {e}")),
                };
                if omega.reduction().is_some() {
                    return CheckOutcome::fail(NAME, "unexpected reduction in grid".into());
                }
                let prof = match adjoint_profile(&omega, 2.0) {
                    Ok(p) => p,
                    Err(e) => return CheckOutcome::fail(NAME, format!("profile: {e}")),
                };
                let expect = n_minus.saturating_sub(m_minus + m_0);
                if prof.kernel.dim != expect {
                    return CheckOutcome::fail(
                        NAME,
                        format!(
                            "kernel dim {} != {expect} at (n-, m-, m0) = ({n_minus}, {m_minus}, {m_0})",
                            prof.kernel.dim
                        ),
                    );
                }
                let Some(basis) = &prof.kernel.basis else {
                    return CheckOutcome::fail(NAME, "grid symbol lost exact factors".into());
                };
                let (_, _q_in, q_on, _) = omega.q_split().exact_parts().unwrap();
                let q0_sharp = q_on.sharp();
                for b in basis {
                    // b = (q_-)# (q_0)# z^j / (s_-)#; feed v = b / (q_0)# to
                    // the general adjoint action.
                    let v = match b.div_poly(&q0_sharp) {
                        Ok(v) => v,
                        Err(e) => return CheckOutcome::fail(NAME, format!("basis: {e}")),
                    };
                    match apply_adjoint_general(&omega, &v) {
                        Ok(img) if img.is_zero() => {}
                        Ok(_) => {
                            return CheckOutcome::fail(
                                NAME,
                                format!(
                                    "basis element not annihilated at ({n_minus}, {m_minus}, {m_0})"
                                ),
                            )
                        }
                        Err(e) => return CheckOutcome::fail(NAME, format!("apply: {e}")),
                    }
                    // For circle-pole symbols the specialized route must agree.
                    if omega.is_rat_t() {
                        let v_spec = b.div_poly(&omega.q().sharp()).unwrap();
                        match apply_adjoint(&omega, &v_spec) {
                            Ok(img) if img.is_zero() => {}
                            _ => {
                                return CheckOutcome::fail(
                                    NAME,
                                    "specialized adjoint route failed to annihilate".into(),
                                )
                            }
                        }
                    }
                }
                tested += 1;
            }
        }
    }
    CheckOutcome::pass(NAME, format!("{tested} grid symbols"))
}

/// Criterion 6: exact root counts against prescribed multisets with radii in
/// {1/3, 1/2, 1, 2, 3}, and agreement of Cohn's criterion with the counts.
pub fn criterion_root_location(seed: u64, cases: usize) -> CheckOutcome {
    const NAME: &str = "root_location";
    let mut rng = rng_from_seed(seed ^ 0x06);
    let radii: [BigRational; 5] = [
        BigRational::new(1.into(), 3.into()),
        BigRational::new(1.into(), 2.into()),
        BigRational::from_integer(1.into()),
        BigRational::from_integer(2.into()),
        BigRational::from_integer(3.into()),
    ];
    let one = BigRational::from_integer(1.into());
    for case in 0..cases {
        let mut roots: Vec<G> = Vec::new();
        let mut expect = (0usize, 0usize, 0usize);
        let picks = rng.gen_range(1..=3usize);
        for _ in 0..picks {
            let radius = &radii[rng.gen_range(0..radii.len())];
            let point = circle_point(&mut rng);
            let root = &point * &G::from_real(radius.clone());
            let mult = rng.gen_range(1..=3usize);
            for _ in 0..mult {
                roots.push(root.clone());
            }
            let slot = if *radius < one {
                &mut expect.0
            } else if *radius == one {
                &mut expect.1
            } else {
                &mut expect.2
            };
            *slot += mult;
        }
        let p = Poly::from_roots(&roots).scale(&nonzero_gaussian(&mut rng));
        let counts = match count_roots(&p) {
            Ok(c) => c,
            Err(e) => return CheckOutcome::fail(NAME, format!("case {case}: {e}")),
        };
        if (counts.inside, counts.on_circle, counts.outside) != expect {
            return CheckOutcome::fail(
                NAME,
                format!("case {case}: counts {counts:?} != expected {expect:?}"),
            );
        }
        let deg = p.degree().unwrap();
        let on_all = counts.on_circle == deg;
        match cohn_test(&p) {
            Ok(c) if c == on_all => {}
            Ok(_) => {
                return CheckOutcome::fail(
                    NAME,
                    format!("case {case}: Cohn disagrees with counts"),
                )
            }
            Err(e) => return CheckOutcome::fail(NAME, format!("case {case}: {e}")),
        }
    }
    CheckOutcome::pass(NAME, format!("{cases} constructed polynomials"))
}

/// Criterion 7: the two symmetry routes agree on Cayley-composed symbols and
/// non-symmetric controls; symmetric cases pass the reflection identities
/// and the degree sandwich.
pub fn criterion_symmetry_equivalence(seed: u64, cases: usize) -> CheckOutcome {
    const NAME: &str = "symmetry_equivalence";
    let mut rng = rng_from_seed(seed ^ 0x07);
    let mut symmetric_seen = 0usize;
    let mut controls = 0usize;
    while symmetric_seen < cases || controls < cases {
        let (omega, want_symmetric) = if symmetric_seen < cases {
            (symmetric_symbol(&mut rng), true)
        } else {
            (ratt_symbol(&mut rng, 4, 6, false), false)
        };
        // real_on_circle itself cross-checks the two routes and errors on
        // disagreement; analyze adds the reflection identities.
        let witness = match real_on_circle(&omega) {
            Ok(w) => w,
            Err(e) => return CheckOutcome::fail(NAME, format!("route disagreement: {e}")),
        };
        if want_symmetric {
            if witness.is_none() {
                return CheckOutcome::fail(NAME, "Cayley symbol not symmetric".into());
            }
            if let Err(e) = analyze(&omega) {
                return CheckOutcome::fail(NAME, format!("identity check: {e}"));
            }
            symmetric_seen += 1;
        } else {
            if witness.is_some() {
                continue; // a random control happened to be symmetric; resample
            }
            controls += 1;
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("{cases} symmetric + {cases} control symbols"),
    )
}

/// Criterion 8: on the symmetric corpus, every extension has even deg(q) and
/// every half-line image forces an extension; no internal inconsistency.
pub fn criterion_parity_and_shortcut(seed: u64, cases: usize) -> CheckOutcome {
    const NAME: &str = "parity_and_shortcut";
    let mut rng = rng_from_seed(seed ^ 0x08);
    let mut extensions = 0usize;
    let mut half_lines = 0usize;
    for case in 0..cases {
        let omega = symmetric_symbol(&mut rng);
        let report = match analyze(&omega) {
            Ok(r) => r,
            Err(e) => return CheckOutcome::fail(NAME, format!("case {case}: {e}")),
        };
        let d = report.details.as_ref().unwrap();
        if d.extension_exists {
            extensions += 1;
            if omega.m() % 2 != 0 {
                return CheckOutcome::fail(NAME, format!("case {case}: odd deg(q) extension"));
            }
        }
        if report.image == CircleImage::RealProperSubset {
            half_lines += 1;
            if !d.extension_exists {
                return CheckOutcome::fail(
                    NAME,
                    format!("case {case}: proper-subset image without extension"),
                );
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("{cases} symbols ({extensions} extensions, {half_lines} half-line images)"),
    )
}

/// Criterion 9: canonical-form certificates on random circle-pole symbols.
pub fn criterion_fejer_riesz(seed: u64, cases: usize) -> CheckOutcome {
    const NAME: &str = "fejer_riesz_canonical";
    let mut rng = rng_from_seed(seed ^ 0x09);
    for case in 0..cases {
        let omega = ratt_symbol(&mut rng, 6, 6, false);
        let triple = match canonical_form(&omega) {
            Ok(t) => t,
            Err(e) => return CheckOutcome::fail(NAME, format!("case {case}: {e}")),
        };
        if triple.max_unimodular_residual > 1e-10 {
            return CheckOutcome::fail(
                NAME,
                format!(
                    "case {case}: residual {:e}",
                    triple.max_unimodular_residual
                ),
            );
        }
        if !(triple.a_at_zero.re > 0.0) || triple.a_at_zero.im.abs() > 1e-12 {
            return CheckOutcome::fail(NAME, format!("case {case}: a(0) = {}", triple.a_at_zero));
        }
        if triple.spectral_factor.degree() >= 1 && triple.min_factor_root_modulus <= 1.0 {
            return CheckOutcome::fail(
                NAME,
                format!(
                    "case {case}: factor root modulus {}",
                    triple.min_factor_root_modulus
                ),
            );
        }
    }
    CheckOutcome::pass(NAME, format!("{cases} random symbols, m <= 6"))
}

/// Criterion 10: the Szegő eigenrelation certificate holds exactly, and at
/// λ = 0 the eigenvalue matches conj(ω*(0)).
pub fn criterion_szego(seed: u64, cases: usize) -> CheckOutcome {
    const NAME: &str = "szego_eigenrelation";
    let mut rng = rng_from_seed(seed ^ 0x0a);
    let one = BigRational::from_integer(1.into());
    for case in 0..cases {
        let omega = ratt_symbol(&mut rng, 5, 5, true);
        let lambda = loop {
            let l = G::new(rat(&mut rng, 3, 5), rat(&mut rng, 3, 5));
            if l.norm_sqr() < one {
                break l;
            }
        };
        // szego_eigen verifies s + (1 - conj(λ)z) r = q c exactly before
        // returning; any failure surfaces as an error here.
        if let Err(e) = szego_eigen(&omega, &lambda) {
            return CheckOutcome::fail(NAME, format!("case {case}: {e}"));
        }
        let (c0, _) = match szego_eigen(&omega, &G::zero()) {
            Ok(v) => v,
            Err(e) => return CheckOutcome::fail(NAME, format!("case {case} (λ=0): {e}")),
        };
        let star = crate::symbol::omega_star(&omega);
        let expect = if star.shift > 0 {
            G::zero()
        } else {
            (&star.numer.eval(&G::zero()) / &star.denom.eval(&G::zero())).conj()
        };
        if c0 != expect {
            return CheckOutcome::fail(NAME, format!("case {case}: λ = 0 eigenvalue mismatch"));
        }
    }
    CheckOutcome::pass(NAME, format!("{cases} random proper symbols"))
}

/// Criterion 11: the three shift axioms verified exactly on random
/// domain elements.
pub fn criterion_sarason_axioms(seed: u64, cases: usize) -> CheckOutcome {
    const NAME: &str = "sarason_axioms";
    let mut rng = rng_from_seed(seed ^ 0x0b);
    for case in 0..cases {
        let omega = ratt_symbol(&mut rng, 4, 5, false);
        let f = dom_element(&mut rng, &omega, 4);
        match sarason_axioms_probe(&omega, &f) {
            Ok(probe) if probe.all_hold() => {}
            Ok(probe) => {
                return CheckOutcome::fail(
                    NAME,
                    format!(
                        "case {case}: axioms failed (shift {}, compression {}, backward {:?})",
                        probe.shift_into_domain,
                        probe.compression_identity,
                        probe.backward_shift_into_domain
                    ),
                )
            }
            Err(e) => return CheckOutcome::fail(NAME, format!("case {case}: {e}")),
        }
    }
    CheckOutcome::pass(NAME, format!("{cases} random (symbol, element) pairs"))
}

/// Additional library invariant: membership transfer r g ∈ r~ H^2 iff
/// g ∈ r~ H^2 for coprime r, r~ (exercised by `selftest`).
pub fn check_membership_transfer(seed: u64, cases: usize) -> CheckOutcome {
    const NAME: &str = "membership_transfer";
    let mut rng = rng_from_seed(seed ^ 0x0c);
    for case in 0..cases {
        let r_tilde = loop {
            let deg = rng.gen_range(1..=3);
            let p = poly_of_degree(&mut rng, deg);
            if !p.constant_term().is_zero() {
                break p;
            }
        };
        let r = loop {
            let deg = rng.gen_range(0..=3);
            let p = poly_of_degree(&mut rng, deg);
            if !p.is_zero() && p.gcd(&r_tilde).unwrap().degree() == Some(0) {
                break p;
            }
        };
        // g with poles off the closed disk
        let g = {
            let num_deg = rng.gen_range(0..=3);
            let num = poly_of_degree(&mut rng, num_deg);
            let outside_root = G::from_int(rng.gen_range(2..5));
            RationalFunction::new(
                num,
                Poly::from_roots(&[outside_root, G::from_int(-3)]),
            )
            .unwrap()
        };
        let lhs = match g
            .mul_poly(&r)
            .and_then(|rg| crate::apply::in_shifted_hardy(&rg, &r_tilde))
        {
            Ok(b) => b,
            Err(e) => return CheckOutcome::fail(NAME, format!("case {case}: {e}")),
        };
        let rhs = match crate::apply::in_shifted_hardy(&g, &r_tilde) {
            Ok(b) => b,
            Err(e) => return CheckOutcome::fail(NAME, format!("case {case}: {e}")),
        };
        if lhs != rhs {
            return CheckOutcome::fail(NAME, format!("case {case}: membership transfer failed"));
        }
    }
    CheckOutcome::pass(NAME, format!("{cases} coprime pairs"))
}

/// Run the full corpus at the documented sizes.
pub fn run_all(seed: u64) -> Vec<CheckOutcome> {
    vec![
        criterion_helson_family(),
        criterion_quadratic_family(),
        criterion_adjoint_pairing(seed, 200),
        criterion_compression_oracle(seed, 100),
        criterion_adjoint_kernel_grid(),
        criterion_root_location(seed, 500),
        criterion_symmetry_equivalence(seed, 100),
        criterion_parity_and_shortcut(seed, 100),
        criterion_fejer_riesz(seed, 50),
        criterion_szego(seed, 50),
        criterion_sarason_axioms(seed, 100),
        check_membership_transfer(seed, 100),
    ]
}
