//! Real-coefficient polynomial helpers: Sturm chains, Cauchy indices, and
//! real root counting with multiplicity.
//!
//! Polynomials here are plain ascending `Vec<BigRational>` with nonzero last
//! entry; these routines back the exact circle/disk root counts in `rootloc`.

use num::rational::BigRational;
use num::{Signed, Zero};

pub(crate) type RPoly = Vec<BigRational>;

pub(crate) fn rtrim(mut v: RPoly) -> RPoly {
    while v.last().is_some_and(BigRational::is_zero) {
        v.pop();
    }
    v
}

pub(crate) fn rdeg(v: &RPoly) -> Option<usize> {
    v.len().checked_sub(1)
}

pub(crate) fn rneg(v: &RPoly) -> RPoly {
    v.iter().map(|c| -c).collect()
}

pub(crate) fn rsub(a: &RPoly, b: &RPoly) -> RPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    let zero = BigRational::zero();
    for k in 0..n {
        out.push(a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero));
    }
    rtrim(out)
}

pub(crate) fn rderiv(v: &RPoly) -> RPoly {
    if v.len() <= 1 {
        return Vec::new();
    }
    v[1..]
        .iter()
        .enumerate()
        .map(|(k, c)| c * BigRational::from_integer((k as i64 + 1).into()))
        .collect()
}

pub(crate) fn rdivrem(a: &RPoly, d: &RPoly) -> (RPoly, RPoly) {
    assert!(!d.is_empty(), "division by zero polynomial");
    let dd = d.len() - 1;
    let mut rem = a.clone();
    if rem.len() < d.len() {
        return (Vec::new(), rem);
    }
    let lead = d.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = &rem[k] / &lead;
        if !c.is_zero() {
            for j in 0..dd {
                let t = &c * &d[j];
                rem[k - dd + j] = &rem[k - dd + j] - &t;
            }
        }
        rem[k] = BigRational::zero();
        quot[k - dd] = c;
    }
    (rtrim(quot), rtrim(rem))
}

pub(crate) fn rmonic(v: &RPoly) -> RPoly {
    if v.is_empty() {
        return Vec::new();
    }
    let lead = v.last().unwrap().clone();
    v.iter().map(|c| c / &lead).collect()
}

pub(crate) fn rgcd(a: &RPoly, b: &RPoly) -> RPoly {
    let mut a = rtrim(a.clone());
    let mut b = rtrim(b.clone());
    while !b.is_empty() {
        let bm = rmonic(&b);
        let (_, r) = rdivrem(&a, &bm);
        a = bm;
        b = r;
    }
    rmonic(&a)
}

pub(crate) fn rdiv_exact(a: &RPoly, d: &RPoly) -> RPoly {
    let (q, r) = rdivrem(a, d);
    assert!(r.is_empty(), "inexact real polynomial division");
    q
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of the polynomial at +infinity / -infinity.
fn sign_at_inf(v: &RPoly, plus: bool) -> i8 {
    match rdeg(v) {
        None => 0,
        Some(d) => {
            let s = sign(v.last().unwrap());
            if plus || d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }
}

fn variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm--Tarski index: builds the negative-remainder chain seeded with
/// (f0, f1) and returns V(-inf) - V(+inf), which equals the Cauchy index
/// I(f1/f0) over the whole real line.
pub(crate) fn sturm_index(f0: &RPoly, f1: &RPoly) -> i64 {
    let mut chain: Vec<RPoly> = Vec::new();
    let a = rtrim(f0.clone());
    let b = rtrim(f1.clone());
    if a.is_empty() {
        return 0;
    }
    chain.push(a);
    if !b.is_empty() {
        chain.push(b);
        loop {
            let n = chain.len();
            let (_, r) = rdivrem(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(rneg(&r));
        }
    }
    let at_minus: Vec<i8> = chain.iter().map(|f| sign_at_inf(f, false)).collect();
    let at_plus: Vec<i8> = chain.iter().map(|f| sign_at_inf(f, true)).collect();
    variations(&at_minus) as i64 - variations(&at_plus) as i64
}

/// Number of distinct real roots of a square-free polynomial.
pub(crate) fn distinct_real_roots(f: &RPoly) -> usize {
    if rdeg(f).map_or(true, |d| d == 0) {
        return 0;
    }
    let idx = sturm_index(f, &rderiv(f));
    assert!(idx >= 0, "Sturm count came out negative");
    idx as usize
}

/// Yun square-free decomposition over the rationals.
pub(crate) fn ryun(f: &RPoly) -> Vec<(RPoly, usize)> {
    let f = rmonic(&rtrim(f.clone()));
    if rdeg(&f).map_or(true, |d| d == 0) {
        return Vec::new();
    }
    let df = rderiv(&f);
    let g = rgcd(&f, &df);
    let mut b = rdiv_exact(&f, &g);
    let mut c = rdiv_exact(&df, &g);
    let mut d = rsub(&c, &rderiv(&b));
    let mut out = Vec::new();
    let mut i = 1usize;
    while rdeg(&b) != Some(0) {
        let a = rgcd(&b, &d);
        if rdeg(&a) != Some(0) {
            out.push((a.clone(), i));
        }
        b = rdiv_exact(&b, &a);
        c = rdiv_exact(&d, &a);
        d = rsub(&c, &rderiv(&b));
        i += 1;
    }
    out
}

/// Number of real roots counted with multiplicity.
pub(crate) fn real_roots_with_multiplicity(f: &RPoly) -> usize {
    ryun(f)
        .iter()
        .map(|(s, m)| m * distinct_real_roots(s))
        .sum()
}

/// Number of roots of D = A(t) + i B(t) in the open upper half-plane,
/// assuming no real roots.  `n` is the degree of D.
///
/// The total argument variation of D along the real line is
/// -pi I(B/A) + [atan(B/A)] evaluated between the endpoints; the boundary
/// term vanishes unless deg B > deg A, where atan(B/A) tends to ±pi/2.
/// Each root above the axis contributes +pi to the variation and each root
/// below -pi, so N_up = (n - I(B/A) + boundary) / 2.
pub(crate) fn upper_half_plane_roots(a: &RPoly, b: &RPoly, n: usize) -> Result<usize, String> {
    let a = rtrim(a.clone());
    let b = rtrim(b.clone());
    let num = match (rdeg(&a), rdeg(&b)) {
        (None, _) | (_, None) => {
            // purely real or purely imaginary: conjugate-symmetric roots
            n as i64
        }
        (Some(da), Some(db)) => {
            let idx = sturm_index(&a, &b);
            let boundary = if db > da {
                let s_plus = (sign(b.last().unwrap()) * sign(a.last().unwrap())) as i64;
                let s_minus = if (db - da) % 2 == 0 { s_plus } else { -s_plus };
                (s_plus - s_minus) / 2
            } else {
                0
            };
            n as i64 - idx + boundary
        }
    };
    if num < 0 || num % 2 != 0 {
        return Err(format!(
            "half-plane count not a nonnegative integer: 2 N_up = {num} at degree {n}"
        ));
    }
    Ok((num / 2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    fn rp(coeffs: &[i64]) -> RPoly {
        rtrim(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    #[test]
    fn sturm_counts_real_roots() {
        // (t-1)(t+2)(t-5): 3 distinct real roots
        let f = rp(&[10, -7, -4, 1]);
        assert_eq!(distinct_real_roots(&f), 3);
        // t^2 + 1: none
        assert_eq!(distinct_real_roots(&rp(&[1, 0, 1])), 0);
        // t^2 - 2: two irrational roots
        assert_eq!(distinct_real_roots(&rp(&[-2, 0, 1])), 2);
    }

    #[test]
    fn multiplicity_counting() {
        // (t-1)^2 (t^2+1): 2 real roots with multiplicity
        let f = rp(&[1, -2, 2, -2, 1]);
        assert_eq!(real_roots_with_multiplicity(&f), 2);
        // t^3: 3
        assert_eq!(real_roots_with_multiplicity(&rp(&[0, 0, 0, 1])), 3);
    }

    #[test]
    fn half_plane_counts() {
        // t + i: root at -i (below). A = t, B = 1.
        assert_eq!(upper_half_plane_roots(&rp(&[0, 1]), &rp(&[1]), 1).unwrap(), 0);
        // t - i: root at i (above). B = -1.
        assert_eq!(upper_half_plane_roots(&rp(&[0, 1]), &rp(&[-1]), 1).unwrap(), 1);
        // (t-i)(t+2i) = t^2 + it + 2: A = t^2+2, B = t: one above, one below.
        assert_eq!(
            upper_half_plane_roots(&rp(&[2, 0, 1]), &rp(&[0, 1]), 2).unwrap(),
            1
        );
        // (t-i)^2 = (t^2-1) + (-2t)i: both above.
        assert_eq!(
            upper_half_plane_roots(&rp(&[-1, 0, 1]), &rp(&[0, -2]), 2).unwrap(),
            2
        );
    }

    #[test]
    fn half_plane_counts_with_dominant_imaginary_part() {
        // it + 1: root at i (above); deg B > deg A engages the boundary term.
        assert_eq!(upper_half_plane_roots(&rp(&[1]), &rp(&[0, 1]), 1).unwrap(), 1);
        // it - 1: root at -i (below).
        assert_eq!(upper_half_plane_roots(&rp(&[-1]), &rp(&[0, 1]), 1).unwrap(), 0);
        // (t-i)^2 (it+1) = (3t^2 - 1) + i(t^3 - 3t): all three above.
        assert_eq!(
            upper_half_plane_roots(&rp(&[-1, 0, 3]), &rp(&[0, -3, 0, 1]), 3).unwrap(),
            3
        );
        // i(t^2 + 1): A = 0: one above, one below.
        assert_eq!(upper_half_plane_roots(&rp(&[]), &rp(&[1, 0, 1]), 2).unwrap(), 1);
    }
}
