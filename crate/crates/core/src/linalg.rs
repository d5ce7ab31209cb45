//! Small exact dense linear algebra over Q(i), enough for the coefficient
//! systems that define the finite polynomial complements.

use crate::scalar::GaussianRational;

type G = GaussianRational;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<G>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot_row) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot_row);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

/// Basis of the nullspace of the matrix (rows x ncols), echelonized so the
/// output is canonical for a given input.
pub fn nullspace(mut rows: Vec<Vec<G>>, ncols: usize) -> Vec<Vec<G>> {
    for row in &rows {
        assert_eq!(row.len(), ncols);
    }
    let pivots = rref(&mut rows);
    let is_pivot = |c: usize| pivots.contains(&c);
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![G::zero(); ncols];
        v[free] = G::one();
        for (r, &pc) in pivots.iter().enumerate() {
            if r < rows.len() {
                v[pc] = -&rows[r][free];
            }
        }
        basis.push(v);
    }
    basis
}

/// Solve A x = b exactly; `None` when inconsistent.  When the system is
/// underdetermined an arbitrary solution (free variables set to zero) is
/// returned.
pub fn solve(mut rows: Vec<Vec<G>>, b: Vec<G>, ncols: usize) -> Option<Vec<G>> {
    for (row, rhs) in rows.iter_mut().zip(b) {
        assert_eq!(row.len(), ncols);
        row.push(rhs);
    }
    let pivots = rref(&mut rows);
    if pivots.contains(&ncols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![G::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[r][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(n: i64) -> G {
        G::from_int(n)
    }

    #[test]
    fn nullspace_of_rank_one() {
        // x + y + z = 0 over a 1x3 system
        let basis = nullspace(vec![vec![gi(1), gi(1), gi(1)]], 3);
        assert_eq!(basis.len(), 2);
        for v in basis {
            let s = v.iter().fold(G::zero(), |acc, x| &acc + x);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_square() {
        // x + 2y = 5, 3x - y = 1  =>  x = 1, y = 2
        let x = solve(
            vec![vec![gi(1), gi(2)], vec![gi(3), gi(-1)]],
            vec![gi(5), gi(1)],
            2,
        )
        .unwrap();
        assert_eq!(x, vec![gi(1), gi(2)]);
        // inconsistent
        assert!(solve(
            vec![vec![gi(1), gi(1)], vec![gi(1), gi(1)]],
            vec![gi(0), gi(1)],
            2,
        )
        .is_none());
    }
}
