//! Exact matrix rank.
//!
//! [`bareiss_rank`] runs fraction-free elimination over any [`ExactDomain`];
//! [`rank`] clears the denominators of a coefficient-field matrix row by row
//! (which does not change the rank) and eliminates in the integral domain.
//! [`rank_mod_prime`] is the probabilistic fast path: plain Gaussian
//! elimination over `Z/p`, which can only under-estimate the rational rank.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::ToPrimitive;

use crate::scalar::{Coefficient, ExactDomain};
use crate::Rational;

/// Rank of a dense row-major matrix by Bareiss elimination.
///
/// Columns without a pivot are skipped; the previous pivot remains the exact
/// divisor for the next step, so every division is exact.
pub fn bareiss_rank<D: ExactDomain>(mut rows: Vec<Vec<D>>) -> usize {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = D::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let p = &pivot_row[col];
        for row in below.iter_mut() {
            let lead = std::mem::replace(&mut row[col], D::zero());
            for j in col + 1..ncols {
                row[j] = D::det2_div(p, &row[j], &lead, &pivot_row[j], &prev);
            }
        }
        prev = p.clone();
        rank += 1;
    }
    rank
}

/// Exact rank of a matrix over a coefficient field.
pub fn rank<F: Coefficient>(rows: &[Vec<F>]) -> usize {
    bareiss_rank(rows.iter().map(|r| F::clear_denominators(r)).collect())
}

fn mod_prime(r: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = r.numer().mod_floor(&pb).to_u64()?;
    let den = r.denom().mod_floor(&pb).to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, inv_mod(den, p), p))
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse by Fermat; `p` must be prime and `a` nonzero mod `p`.
fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Rank over `Z/p` of a rational matrix, or `None` if some denominator
/// vanishes mod `p`. The result never exceeds the rational rank.
pub fn rank_mod_prime(rows: &[Vec<Rational>], p: u64) -> Option<usize> {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| mod_prime(x, p)).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()?;
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inv_mod(m[rank][col], p);
        let pivot_row: Vec<u64> = m[rank].iter().map(|&x| mul_mod(x, inv, p)).collect();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for j in col..ncols {
                row[j] = (row[j] + p - mul_mod(f, pivot_row[j], p)) % p;
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

/// Primes above `2^30` used for modular rank computations.
pub const LARGE_PRIMES: [u64; 8] = [
    1_073_741_827,
    1_073_741_831,
    1_073_741_833,
    1_073_741_839,
    2_147_483_647,
    2_147_483_659,
    4_294_967_291,
    4_294_967_311,
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gaussian, gaussian_int, rational};
    use crate::{GaussianRational, Integer};

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Integer>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
            .collect()
    }

    fn rat_matrix(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rational(x, 1)).collect())
            .collect()
    }

    #[test]
    fn integer_ranks() {
        assert_eq!(bareiss_rank(int_matrix(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(int_matrix(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(bareiss_rank(int_matrix(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
        assert_eq!(
            bareiss_rank(int_matrix(&[&[0, 1, 0], &[0, 0, 1], &[0, 1, 1], &[0, 2, 5]])),
            2
        );
        assert_eq!(bareiss_rank(int_matrix(&[&[2, 0, 1], &[0, 0, 3], &[1, 0, 0]])), 2);
        assert_eq!(bareiss_rank::<Integer>(Vec::new()), 0);
    }

    #[test]
    fn pivotless_column_keeps_divisions_exact() {
        // second column is zero below the first pivot, third needs exact division
        let m = int_matrix(&[&[2, 4, 6, 1], &[4, 8, 3, 5], &[6, 12, 9, 2], &[1, 2, 1, 1]]);
        let r = rat_matrix(&[&[2, 4, 6, 1], &[4, 8, 3, 5], &[6, 12, 9, 2], &[1, 2, 1, 1]]);
        assert_eq!(bareiss_rank(m), 3);
        assert_eq!(rank_mod_prime(&r, LARGE_PRIMES[0]), Some(3));
    }

    #[test]
    fn rational_rank_clears_denominators() {
        let rows = vec![
            vec![rational(1, 2), rational(1, 3)],
            vec![rational(3, 2), rational(1, 1)],
        ];
        assert_eq!(rank(&rows), 1);
        assert_eq!(bareiss_rank(rows), 1);
    }

    #[test]
    fn gaussian_rank() {
        let i = gaussian(rational(0, 1), rational(1, 1));
        let one = gaussian_int(1);
        // rows (1, i) and (i, -1) are dependent: second = i * first
        let rows: Vec<Vec<GaussianRational>> = vec![vec![one.clone(), i.clone()], vec![i.clone(), -one.clone()]];
        assert_eq!(rank(&rows), 1);
        let rows: Vec<Vec<GaussianRational>> = vec![vec![one.clone(), i.clone()], vec![i, one]];
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn modular_rank_detects_bad_denominator() {
        let p = 1_073_741_827;
        let rows = vec![vec![Rational::new(1.into(), Integer::from(p))]];
        assert_eq!(rank_mod_prime(&rows, p), None);
    }

    #[test]
    fn large_primes_are_prime() {
        for &p in &LARGE_PRIMES {
            assert!(p > 1 << 30);
            let mut d = 2u64;
            while d * d <= p {
                assert_ne!(p % d, 0, "{p} divisible by {d}");
                d += 1;
            }
        }
    }
}
