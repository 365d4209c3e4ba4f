//! Dense exact Gaussian elimination over a [`FieldSpec`].

use crate::scalars::{FieldSpec, Scalar};

/// Row-major dense matrix.
pub type Matrix = Vec<Vec<Scalar>>;

pub(crate) fn zero_vec(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub(crate) fn unit_vec(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub(crate) fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `dst += c * src`
pub(crate) fn axpy(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = &*d + &(c * s);
        }
    }
}

pub(crate) fn scale(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

pub(crate) fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Reduced row-echelon form. Returns the nonzero rows (leading entry 1) and
/// their pivot columns, in increasing pivot order.
pub(crate) fn rref(mut rows: Matrix, ncols: usize) -> (Matrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            rows[r] = scale(&rows[r], &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = -&row[col];
                axpy(row, &c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : M x = 0}` for an `m × ncols` matrix, one vector per free
/// column, in increasing free-column order.
pub(crate) fn nullspace(field: FieldSpec, m: Matrix, ncols: usize) -> Matrix {
    let (rows, pivots) = rref(m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = unit_vec(field, ncols, free);
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    basis
}

/// Solves `M y = rhs`. Free variables are set to zero. Returns the solution
/// (if consistent) and the rank of `M`.
pub(crate) fn solve(field: FieldSpec, m: &Matrix, rhs: &[Scalar], ncols: usize) -> (Option<Vec<Scalar>>, usize) {
    let augmented: Matrix = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (rows, pivots) = rref(augmented, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return (None, pivots.len() - 1);
    }
    let mut y = zero_vec(field, ncols);
    for (row, &p) in rows.iter().zip(&pivots) {
        y[p] = row[ncols].clone();
    }
    (Some(y), pivots.len())
}

/// `M v` for a row-major matrix.
#[cfg(test)]
pub(crate) fn mat_vec(field: FieldSpec, m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    &acc + &(a * b)
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        FieldSpec::RATIONALS.from_i64(v)
    }

    #[test]
    fn rref_and_nullspace() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        let (rows, pivots) = rref(m.clone(), 3);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows[0], vec![q(1), q(0), q(1)]);
        let ns = nullspace(FieldSpec::RATIONALS, m.clone(), 3);
        assert_eq!(ns, vec![vec![q(-1), q(-1), q(1)]]);
        assert!(is_zero_vec(&mat_vec(FieldSpec::RATIONALS, &m, &ns[0])));
    }

    #[test]
    fn solve_consistent_and_not() {
        let f = FieldSpec::prime(5).unwrap();
        let m = vec![vec![f.from_i64(1), f.from_i64(1)], vec![f.from_i64(2), f.from_i64(2)]];
        let (y, rank) = solve(f, &m, &[f.from_i64(3), f.from_i64(1)], 2);
        assert_eq!(rank, 1);
        assert_eq!(y.unwrap(), vec![f.from_i64(3), f.zero()]);
        let (y, _) = solve(f, &m, &[f.from_i64(3), f.from_i64(2)], 2);
        assert!(y.is_none());
    }
}
