//! Exact linear algebra over the rationals.
//!
//! Rows are first cleared of denominators, then reduced with fraction-free
//! (Bareiss) elimination so intermediate entries stay integral.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::polyring::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Row echelon form produced by fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Integer rows after elimination; rows past `pivots.len()` are zero.
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
    /// +1 or -1 depending on the parity of row swaps.
    pub swap_sign: i8,
}

fn integerize(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

/// Fraction-free elimination over the full width of `m`.
pub fn echelon(m: &[Vec<Rational>], cols: usize) -> Echelon {
    let mut rows: Vec<Vec<BigInt>> = m.iter().map(|r| integerize(r)).collect();
    let mut pivots = Vec::new();
    let mut swap_sign = 1i8;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            swap_sign = -swap_sign;
        }
        for i in (r + 1)..rows.len() {
            for j in (c + 1)..cols {
                let v = &rows[r][c] * &rows[i][j] - &rows[i][c] * &rows[r][j];
                rows[i][j] = v / &prev;
            }
            rows[i][c] = BigInt::zero();
        }
        // entries left of c in rows below are already zero
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon {
        rows,
        pivots,
        swap_sign,
    }
}

pub fn rank(m: &[Vec<Rational>], cols: usize) -> usize {
    echelon(m, cols).pivots.len()
}

/// Determinant of a square matrix. The empty matrix has determinant one.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let scale = m.iter().fold(BigInt::one(), |acc, row| {
        acc * row.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()))
    });
    let e = echelon(m, n);
    if e.pivots.len() < n {
        return Rational::zero();
    }
    // Bareiss leaves the determinant of the integerized matrix in the last pivot.
    let d = &e.rows[n - 1][n - 1] * BigInt::from(e.swap_sign);
    Rational::new(d, scale)
}

/// Back-substitutes echelon rows given values of the free columns.
fn back_substitute(e: &Echelon, cols: usize, assign: &mut [Rational]) {
    for (i, &pc) in e.pivots.iter().enumerate().rev() {
        let row = &e.rows[i];
        let mut acc = Rational::zero();
        for j in (pc + 1)..cols {
            if !row[j].is_zero() {
                acc += Rational::from_integer(row[j].clone()) * &assign[j];
            }
        }
        assign[pc] = -acc / Rational::from_integer(row[pc].clone());
    }
}

/// Basis of the right nullspace `{x : m x = 0}`, one vector per free column.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let e = echelon(m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); cols];
            x[f] = Rational::one();
            back_substitute(&e, cols, &mut x);
            x
        })
        .collect()
}

/// Outcome of solving `m x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Inconsistent,
    /// A particular solution (free variables set to zero) and the nullspace dimension.
    Solved { x: Vec<Rational>, nullity: usize },
}

pub fn solve(m: &[Vec<Rational>], b: &[Rational], cols: usize) -> Solution {
    assert_eq!(m.len(), b.len(), "right-hand side length mismatch");
    let aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let e = echelon(&aug, cols + 1);
    if e.pivots.last() == Some(&cols) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); cols + 1];
    x[cols] = -Rational::one();
    back_substitute(&e, cols + 1, &mut x);
    x.pop();
    Solution::Solved {
        x,
        nullity: cols - e.pivots.len(),
    }
}

pub fn mat_vec(m: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{int, rational};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&m(&[&[1, 2], &[3, 4]])), int(-2));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(&m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])), int(30));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), int(0));
        assert_eq!(determinant(&[]), int(1));
        let q = vec![
            vec![rational(1, 2), rational(1, 3)],
            vec![rational(1, 5), rational(1, 7)],
        ];
        assert_eq!(determinant(&q), rational(1, 14) - rational(1, 15));
    }

    #[test]
    fn nullspace_and_rank() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns, vec![vec![int(-1), int(1), int(0)]]);
        assert_eq!(rank(&a, 3), 2);
        assert!(nullspace(&m(&[&[1, 0], &[0, 1]]), 2).is_empty());
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    #[test]
    fn solve_cases() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let Solution::Solved { x, nullity } = solve(&a, &[int(3), int(4)], 2) else {
            panic!("expected solution")
        };
        assert_eq!(nullity, 0);
        assert_eq!(mat_vec(&a, &x), vec![int(3), int(4)]);
        let b = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&b, &[int(1), int(2)], 2), Solution::Inconsistent);
        let Solution::Solved { nullity, .. } = solve(&b, &[int(1), int(1)], 2) else {
            panic!("expected solution")
        };
        assert_eq!(nullity, 1);
    }
}
