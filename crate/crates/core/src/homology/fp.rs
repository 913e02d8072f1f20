//! Dense linear algebra over F_p.

use crate::error::HomologyError;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u64) -> Result<(), HomologyError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(HomologyError::NotPrime(p))
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Reduces an integer into `[0, p)`.
pub fn reduce(x: i64, p: u64) -> u64 {
    (x as i128).rem_euclid(p as i128) as u64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    pub p: u64,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub data: Vec<Vec<u64>>,
}

impl FpMatrix {
    /// Matrix with integer entries reduced mod `p`.
    pub fn from_integers(
        p: u64,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        entries: &[Vec<i64>],
    ) -> Result<FpMatrix, HomologyError> {
        check_prime(p)?;
        let data = entries
            .iter()
            .map(|row| row.iter().map(|&x| reduce(x, p)).collect())
            .collect();
        Ok(FpMatrix {
            p,
            row_labels,
            col_labels,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    /// Rank by Gaussian elimination. Rows are taken in label order; each
    /// pivots on its least-labelled nonzero column.
    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut row_order: Vec<usize> = (0..self.rows()).collect();
        row_order.sort_by(|&a, &b| self.row_labels[a].as_bytes().cmp(self.row_labels[b].as_bytes()));
        let mut col_order: Vec<usize> = (0..self.cols()).collect();
        col_order.sort_by(|&a, &b| self.col_labels[a].as_bytes().cmp(self.col_labels[b].as_bytes()));
        let mut rows: Vec<Vec<u64>> = row_order.iter().map(|&r| self.data[r].clone()).collect();
        let mut rank = 0;
        for i in 0..rows.len() {
            let Some(&col) = col_order.iter().find(|&&j| rows[i][j] != 0) else {
                continue;
            };
            rank += 1;
            let inv = inv_mod(rows[i][col], p);
            let pivot: Vec<u64> = rows[i].iter().map(|&x| mul_mod(x, inv, p)).collect();
            for row in rows.iter_mut().skip(i + 1) {
                let factor = row[col];
                if factor == 0 {
                    continue;
                }
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p - mul_mod(factor, y, p)) % p;
                }
            }
        }
        rank
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols(), other.rows());
        let p = self.p;
        let data = self
            .data
            .iter()
            .map(|row| {
                (0..other.cols())
                    .map(|j| {
                        row.iter()
                            .zip(&other.data)
                            .fold(0, |acc, (&a, orow)| (acc + mul_mod(a, orow[j], p)) % p)
                    })
                    .collect()
            })
            .collect();
        FpMatrix {
            p,
            row_labels: self.row_labels.clone(),
            col_labels: other.col_labels.clone(),
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|row| row.iter().all(|&x| x == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("r{i}")).collect()
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn rank_depends_on_p() {
        let m = vec![vec![2, 0], vec![0, 3]];
        for (p, r) in [(2, 1), (3, 1), (5, 2)] {
            assert_eq!(FpMatrix::from_integers(p, labels(2), labels(2), &m).unwrap().rank(), r);
        }
        assert_eq!(
            FpMatrix::from_integers(4, labels(2), labels(2), &m),
            Err(HomologyError::NotPrime(4))
        );
    }

    #[test]
    fn inverse() {
        for a in 1..13 {
            assert_eq!(mul_mod(a, inv_mod(a, 13), 13), 1);
        }
    }
}
