//! Divisor sums, the divisibility indicator, and the pentagonal expansion
//! of the Euler product `∏ (1 - q^n)`.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::qseries::{int, QSeries};

/// `σ_k(n) = Σ_{d | n} d^k` by trial division up to `√n`.
pub fn sigma_power(k: u32, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::DomainError(
            "sigma_k(0) is undefined for the integer divisor sum".into(),
        ));
    }
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    Ok(total)
}

/// Dense table of `σ_k(n)` for `1 <= n <= max`, filled by a divisor sieve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable {
    k: u32,
    /// `values[n] = σ_k(n)`; `values[0]` is an unused zero.
    values: Vec<BigInt>,
}

impl SigmaTable {
    pub fn new(k: u32, max: usize) -> Self {
        let mut values = vec![BigInt::zero(); max + 1];
        for d in 1..=max {
            let dk = BigInt::from(d).pow(k);
            for m in (d..=max).step_by(d) {
                values[m] += &dk;
            }
        }
        Self { k, values }
    }

    pub fn power(&self) -> u32 {
        self.k
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }

    /// `σ_k(n)`.
    ///
    /// # Panics
    ///
    /// For `n == 0` or `n` beyond the table.
    pub fn get(&self, n: usize) -> &BigInt {
        assert!(n >= 1, "sigma table is indexed from 1");
        &self.values[n]
    }
}

/// `σ(n) = σ_1(n)` for `0 <= n <= max` as machine integers (`σ(0)` is
/// stored as 0). The tau kernels need only this.
pub fn sigma1_sieve(max: usize) -> Vec<i64> {
    let mut values = vec![0i64; max + 1];
    for d in 1..=max {
        for m in (d..=max).step_by(d) {
            values[m] += d as i64;
        }
    }
    values
}

/// 1 if `k` divides `n`, else 0 (so `δ_k^0 = 1`).
///
/// # Panics
///
/// If `k == 0`.
pub fn delta_indicator(k: u64, n: u64) -> u32 {
    assert!(k >= 1, "delta indicator needs k >= 1");
    u32::from(n.is_multiple_of(k))
}

/// Generalized pentagonal exponents `j(3j-1)/2` below `precision` with
/// their signs `(-1)^j`, in increasing exponent order.
pub fn pentagonal_terms(precision: usize) -> Vec<(usize, i64)> {
    let mut terms = vec![(0usize, 1i64)];
    let mut j: usize = 1;
    loop {
        let sign = if j.is_multiple_of(2) { 1 } else { -1 };
        let lo = j * (3 * j - 1) / 2;
        let hi = j * (3 * j + 1) / 2;
        if lo >= precision {
            break;
        }
        terms.push((lo, sign));
        if hi < precision {
            terms.push((hi, sign));
        }
        j += 1;
    }
    terms
}

/// `∏_{n>=1} (1 - q^n) + O(q^precision)` via Euler's pentagonal theorem.
pub fn euler_product(precision: usize) -> QSeries {
    let mut coeffs = vec![int(0); precision];
    for (e, s) in pentagonal_terms(precision) {
        coeffs[e] = int(s);
    }
    QSeries::new(0, coeffs, precision as i64)
}

/// `σ(n)` for `1 <= n <= max` (index 0 unused) from the Euler product
/// alone: `q P'/P = -Σ σ(n) q^n` with `P = ∏ (1 - q^n)` sparse, so
/// `σ(n) = -n p_n - Σ_{k>=1} p_k σ(n-k)`. Independent of divisor sums.
pub fn sigma1_from_pentagonal(max: usize) -> Vec<i64> {
    let terms: Vec<(usize, i64)> = pentagonal_terms(max + 1)
        .into_iter()
        .filter(|&(e, _)| e > 0)
        .collect();
    let mut sigma = vec![0i64; max + 1];
    for n in 1..=max {
        let mut s = 0i64;
        for &(k, p) in terms.iter().take_while(|&&(k, _)| k <= n) {
            if k == n {
                s -= n as i64 * p;
            } else {
                s -= p * sigma[n - k];
            }
        }
        sigma[n] = s;
    }
    sigma
}

/// Brute-force truncated product `∏_{n < precision} (1 - q^n)`; a test
/// oracle for [`euler_product`].
pub fn euler_product_naive(precision: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); precision];
    if precision == 0 {
        return c;
    }
    c[0] = BigInt::one();
    for n in 1..precision {
        for i in (n..precision).rev() {
            let prev = c[i - n].clone();
            c[i] -= prev;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_sigma(k: u32, n: u64) -> BigInt {
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .map(|d| BigInt::from(d).pow(k))
            .sum()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_power(1, 6).unwrap(), BigInt::from(12));
        assert_eq!(sigma_power(3, 2).unwrap(), BigInt::from(9));
        assert_eq!(sigma_power(1, 10000).unwrap(), brute_sigma(1, 10000));
        // σ(2^4)·σ(5^4) = 31·781
        assert_eq!(sigma_power(1, 10000).unwrap(), BigInt::from(24211));
        assert_eq!(sigma_power(5, 2).unwrap(), BigInt::from(33));
    }

    #[test]
    fn sigma_zero_is_a_domain_error() {
        assert!(matches!(sigma_power(1, 0), Err(Error::DomainError(_))));
    }

    #[test]
    fn sigma_table_matches_trial_division() {
        for k in [0, 1, 3, 5] {
            let t = SigmaTable::new(k, 300);
            for n in 1..=300u64 {
                assert_eq!(t.get(n as usize), &sigma_power(k, n).unwrap());
            }
        }
    }

    #[test]
    fn sigma_table_on_primes_and_coprime_products() {
        let t = SigmaTable::new(3, 500);
        for p in [2usize, 3, 5, 7, 11, 13, 97, 499] {
            assert_eq!(t.get(p), &(BigInt::from(p).pow(3u32) + 1));
        }
        for (a, b) in [(4usize, 9usize), (8, 15), (7, 64), (12, 35)] {
            assert_eq!(t.get(a * b), &(t.get(a) * t.get(b)));
        }
    }

    #[test]
    fn delta() {
        assert_eq!(delta_indicator(2, 4), 1);
        assert_eq!(delta_indicator(3, 4), 0);
        assert_eq!(delta_indicator(3, 0), 1);
    }

    #[test]
    fn euler_product_head() {
        assert_eq!(
            euler_product(6),
            QSeries::from_ints(0, &[1, -1, -1, 0, 0, 1], 6)
        );
        assert_eq!(euler_product(8).coeff(7), int(1));
        assert_eq!(euler_product(1), QSeries::one(1));
    }

    #[test]
    fn euler_product_matches_brute_force_to_200() {
        let naive = euler_product_naive(200);
        let fast = euler_product(200);
        for (n, c) in naive.iter().enumerate() {
            assert_eq!(fast.coeff(n as i64).to_integer(), *c, "q^{n}");
        }
    }

    #[test]
    fn pentagonal_sigma_matches_sieve() {
        let a = sigma1_from_pentagonal(10_000);
        let b = sigma1_sieve(10_000);
        assert_eq!(a[1..], b[1..]);
    }
}
