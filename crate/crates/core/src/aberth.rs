//! Aberth--Ehrlich simultaneous root refinement for the numeric side of the
//! factorization pipeline.  Inputs are square-free by construction (callers
//! run a square-free decomposition first), which keeps the iteration
//! well-behaved.

use num::complex::Complex64;

/// All roots of the polynomial with the given ascending coefficients.
/// Requires a nonzero leading coefficient and degree >= 1.
pub(crate) fn roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    assert!(n >= 1 && coeffs[n].norm() > 0.0);
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / coeffs[n]).collect();

    if n == 1 {
        return vec![-monic[0]];
    }

    // Cauchy-style inclusion radius.
    let radius = 1.0
        + monic[..n]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.376;
            Complex64::from_polar(radius * 0.7 + 0.1 * k as f64 / n as f64, theta)
        })
        .collect();

    let eval = |p: &[Complex64], x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in p.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let deriv: Vec<Complex64> = monic[1..]
        .iter()
        .enumerate()
        .map(|(k, c)| c * Complex64::new(k as f64 + 1.0, 0.0))
        .collect();

    for _ in 0..400 {
        let mut max_step = 0.0f64;
        let snapshot = z.clone();
        for k in 0..n {
            let zk = snapshot[k];
            let p = eval(&monic, zk);
            let dp = eval(&deriv, zk);
            let newton = if dp.norm() > 0.0 { p / dp } else { p };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &zj) in snapshot.iter().enumerate() {
                if j != k {
                    let d = zk - zj;
                    if d.norm() > 1e-300 {
                        repulsion += Complex64::new(1.0, 0.0) / d;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
            z[k] = zk - step;
            let rel = step.norm() / (1.0 + z[k].norm());
            max_step = max_step.max(rel);
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

/// Expand prod (z - r_k) scaled by `lead`.
pub(crate) fn poly_from_roots(lead: Complex64, roots: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = vec![lead];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k] -= c * r;
            next[k + 1] += c;
        }
        coeffs = next;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_well_separated_roots() {
        // (z-2)(z+1/2)(z-i) expanded
        let expected = [
            Complex64::new(2.0, 0.0),
            Complex64::new(-0.5, 0.0),
            Complex64::new(0.0, 1.0),
        ];
        let coeffs = poly_from_roots(Complex64::new(3.0, -1.0), &expected);
        let mut got = roots(&coeffs);
        for e in expected {
            let (idx, _) = got
                .iter()
                .enumerate()
                .min_by(|a, b| (a.1 - e).norm().partial_cmp(&(b.1 - e).norm()).unwrap())
                .unwrap();
            assert!((got[idx] - e).norm() < 1e-10, "missed root {e}");
            got.remove(idx);
        }
    }
}
