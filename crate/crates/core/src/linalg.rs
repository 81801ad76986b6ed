//! Exact linear algebra: fraction-free determinants, rational linear solves,
//! and an incremental span builder used for minimal polynomials.
//!
//! All pivoting picks the first nonzero entry, which keeps results
//! deterministic across runs and platforms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Rat, RatPoly};

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination.  Every intermediate division is exact.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    for row in &m {
        assert_eq!(row.len(), n, "determinant of non-square matrix");
    }
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 { -d } else { d }
}

/// Solve `A x = b` over Q by Gaussian elimination with first-nonzero
/// pivoting.  Returns `None` when the system is inconsistent.  When the
/// solution is not unique the free variables are set to zero, so callers
/// that need uniqueness must know `A` has full column rank.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "row count mismatch");
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut next_row = 0usize;
    for col in 0..cols {
        let Some(p) = (next_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, p);
        let inv = Rat::one() / m[next_row][col].clone();
        for j in col..=cols {
            let v = m[next_row][j].clone() * inv.clone();
            m[next_row][j] = v;
        }
        for r in 0..rows {
            if r != next_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=cols {
                    let v = m[r][j].clone() - f.clone() * m[next_row][j].clone();
                    m[r][j] = v;
                }
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
        if next_row == rows {
            break;
        }
    }

    // Any leftover nonzero right-hand side marks an inconsistent system.
    for r in next_row..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for col in 0..cols {
        if let Some(r) = pivot_of_col[col] {
            x[col] = m[r][cols].clone();
        }
    }
    Some(x)
}

/// Incremental row space with combination tracking.
///
/// Vectors are offered one at a time.  An independent vector is absorbed and
/// `None` comes back; the first dependent vector yields the coefficients
/// expressing it over the previously offered vectors, in offer order.
pub struct SpanBuilder {
    dim: usize,
    /// (pivot column, reduced row, combination over offered vectors)
    rows: Vec<(usize, Vec<Rat>, Vec<Rat>)>,
    offered: usize,
}

impl SpanBuilder {
    pub fn new(dim: usize) -> Self {
        SpanBuilder { dim, rows: Vec::new(), offered: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn offer(&mut self, v: Vec<Rat>) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        let mut v = v;
        // combo over offered vectors; index self.offered is the new vector itself
        let mut combo = vec![Rat::zero(); self.offered + 1];
        combo[self.offered] = Rat::one();
        for (pivot, row, row_combo) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for j in 0..self.dim {
                let t = v[j].clone() - f.clone() * row[j].clone();
                v[j] = t;
            }
            for (j, rc) in row_combo.iter().enumerate() {
                let t = combo[j].clone() - f.clone() * rc.clone();
                combo[j] = t;
            }
        }
        match (0..self.dim).find(|&j| !v[j].is_zero()) {
            Some(pivot) => {
                let inv = Rat::one() / v[pivot].clone();
                for j in 0..self.dim {
                    let t = v[j].clone() * inv.clone();
                    v[j] = t;
                }
                for c in combo.iter_mut() {
                    let t = c.clone() * inv.clone();
                    *c = t;
                }
                self.rows.push((pivot, v, combo));
                self.offered += 1;
                None
            }
            None => {
                // v_new = -sum_{j < offered} combo[j]/combo[last] * v_j,
                // and combo[last] is 1 by construction.
                let deps = combo[..self.offered].iter().map(|c| -c.clone()).collect();
                self.offered += 1;
                Some(deps)
            }
        }
    }
}

/// Minimal polynomial of an element given its successive powers as
/// coordinate vectors: feeds `1, v, v^2, ...` into a [`SpanBuilder`] until
/// the first linear dependency and returns the monic annihilating
/// polynomial of that degree.
pub fn minpoly_from_powers<F>(dim: usize, mut next_power: F) -> RatPoly
where
    F: FnMut() -> Vec<Rat>,
{
    let mut span = SpanBuilder::new(dim);
    loop {
        let v = next_power();
        if let Some(deps) = span.offer(v) {
            let k = deps.len();
            let mut coeffs = vec![Rat::zero(); k + 1];
            for (j, c) in deps.into_iter().enumerate() {
                coeffs[j] = -c;
            }
            coeffs[k] = Rat::one();
            return RatPoly::from_coeffs(coeffs);
        }
        assert!(span.rank() <= dim, "span exceeded ambient dimension");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use num_bigint::BigInt;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_closed_forms() {
        assert_eq!(bareiss_det(int_matrix(&[&[3]])), BigInt::from(3));
        assert_eq!(bareiss_det(int_matrix(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        // Needs a row swap on the second pivot.
        assert_eq!(
            bareiss_det(int_matrix(&[&[1, 2, 3], &[2, 4, 7], &[3, 5, 3]])),
            BigInt::from(1)
        );
        assert_eq!(
            bareiss_det(int_matrix(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])),
            BigInt::from(30)
        );
        // Singular.
        assert_eq!(bareiss_det(int_matrix(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }

    #[test]
    fn solve_unique_system() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(-1)]];
        let b = vec![rat(4), rat(-1)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert!(solve(&a, &[rat(1), rat(3)]).is_none());
        assert!(solve(&a, &[rat(1), rat(2)]).is_some());
    }

    #[test]
    fn solve_overdetermined_consistent() {
        let a = vec![vec![rat(1)], vec![rat(2)], vec![rat(3)]];
        let b = vec![rat(5), rat(10), rat(15)];
        assert_eq!(solve(&a, &b).unwrap(), vec![rat(5)]);
    }

    #[test]
    fn minpoly_of_companion_powers() {
        // Powers of the image of x in Q[x]/(x^2 - x - 1).
        let m = crate::ratpoly(&[-1, -1, 1]);
        let modulus = m.clone();
        let mut cur = crate::ratpoly(&[1]);
        let p = minpoly_from_powers(2, move || {
            let v = vec![cur.coeff(0), cur.coeff(1)];
            let next = &cur * &crate::ratpoly(&[0, 1]);
            cur = next.divrem(&modulus).1;
            v
        });
        assert_eq!(p, m);
    }

    #[test]
    fn minpoly_detects_rational_element() {
        let mut k = 0u32;
        let p = minpoly_from_powers(3, move || {
            // powers of the constant 5 inside a 3-dimensional space
            let v = vec![rat(5i64.pow(k)), rat(0), rat(0)];
            k += 1;
            v
        });
        assert_eq!(p, crate::ratpoly(&[-5, 1]));
    }
}
