//! Smith normal form over the integers with arbitrary-precision entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero diagonal of the Smith normal form of `m`, each dividing the next.
#[allow(clippy::needless_range_loop)]
pub fn invariant_factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // least nonzero absolute value in the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&a[t][t]);
            for j in t..cols {
                let sub = &q * &a[t][j];
                a[i][j] -= sub;
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            for i in t..rows {
                let sub = &q * &a[i][t];
                a[i][j] -= sub;
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t]))) {
            for j in t..cols {
                let add = a[i][j].clone();
                a[t][j] += add;
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

pub fn integer_rank(m: &[Vec<i64>]) -> usize {
    invariant_factors(m).len()
}
