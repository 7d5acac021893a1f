//! Exact integer kernels behind the series and tau code.
//!
//! Coefficients are stored as [`BigInt`] but most of them fit in `i128`,
//! so the inner loops work on `i128` mirrors and spill into a `BigInt`
//! only when a product or a running sum would overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Running sum of products that stays in `i128` until it cannot.
#[derive(Debug, Default)]
pub struct Accumulator {
    small: i128,
    big: BigInt,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_i128(&mut self, x: i128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = x;
            }
        }
    }

    /// Adds `x * y`.
    pub fn add_product(&mut self, x: i128, y: &Wide) {
        match y.small.and_then(|y| x.checked_mul(y)) {
            Some(p) => self.add_i128(p),
            None => self.big += &y.big * x,
        }
    }

    /// Adds `x * y` for two wide values.
    pub fn add_wide_product(&mut self, x: &Wide, y: &Wide) {
        match x.small {
            Some(xs) => self.add_product(xs, y),
            None => self.big += &x.big * &y.big,
        }
    }

    pub fn add_big(&mut self, x: &BigInt) {
        self.big += x;
    }

    pub fn finish(self) -> BigInt {
        self.big + self.small
    }
}

/// A `BigInt` together with its `i128` value when it fits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wide {
    pub big: BigInt,
    pub small: Option<i128>,
}

impl Wide {
    pub fn is_zero(&self) -> bool {
        self.small == Some(0)
    }
}

impl From<BigInt> for Wide {
    fn from(big: BigInt) -> Self {
        let small = big.to_i128();
        Wide { big, small }
    }
}

impl From<i128> for Wide {
    fn from(x: i128) -> Self {
        Wide {
            big: BigInt::from(x),
            small: Some(x),
        }
    }
}

pub fn widen(v: &[BigInt]) -> Vec<Wide> {
    v.iter().cloned().map(Wide::from).collect()
}

/// Truncated Cauchy product of two integer sequences (both starting at
/// exponent 0), returning `len` coefficients. Zero entries are skipped, so
/// sparse operands like `f(q^m)` are cheap.
pub fn convolve(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let a = widen(a);
    let b = widen(b);
    let nz = |v: &[Wide]| v.iter().filter(|x| !x.is_zero()).count();
    let (a, b) = if nz(&a) <= nz(&b) { (a, b) } else { (b, a) };
    let support: Vec<usize> = (0..a.len().min(len)).filter(|&i| !a[i].is_zero()).collect();
    (0..len)
        .map(|n| {
            let mut acc = Accumulator::new();
            for &i in support.iter().take_while(|&&i| i <= n) {
                if let Some(y) = b.get(n - i) {
                    if !y.is_zero() {
                        acc.add_wide_product(&a[i], y);
                    }
                }
            }
            acc.finish()
        })
        .collect()
}

/// Coefficients `0..len` of `f^t` where `f = 1 + Σ c_k q^k` is given by its
/// sparse nonconstant terms `(k, c_k)` and `t` is any integer.
///
/// Uses the power recurrence obtained from `q (f^t)' f = t f' f^t`:
/// `n g_n = Σ_k ((t+1) k - n) c_k g_{n-k}`, whose divisions by `n` are
/// exact over the integers because `f` has constant term 1.
pub fn unit_power(terms: &[(usize, i64)], t: i64, len: usize) -> Vec<BigInt> {
    debug_assert!(terms.iter().all(|&(k, _)| k >= 1));
    let mut g: Vec<Wide> = Vec::with_capacity(len);
    if len == 0 {
        return Vec::new();
    }
    g.push(Wide::from(1i128));
    for n in 1..len {
        let mut acc = Accumulator::new();
        for &(k, c) in terms.iter().take_while(|&&(k, _)| k <= n) {
            let w = ((t + 1) as i128 * k as i128 - n as i128) * c as i128;
            if w != 0 {
                acc.add_product(w, &g[n - k]);
            }
        }
        let (q, r) = acc.finish().div_rem(&BigInt::from(n));
        assert!(
            r.is_zero(),
            "power recurrence division by {n} must be exact"
        );
        g.push(Wide::from(q));
    }
    g.into_iter().map(|w| w.big).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn accumulator_spills_on_overflow() {
        let mut acc = Accumulator::new();
        let huge = Wide::from(i128::MAX / 2);
        acc.add_product(3, &huge);
        acc.add_product(3, &huge);
        let expected = BigInt::from(i128::MAX / 2) * 6;
        assert_eq!(acc.finish(), expected);
    }

    #[test]
    fn convolve_matches_schoolbook() {
        let a = big(&[1, 2, 0, -3]);
        let b = big(&[4, 0, 5]);
        assert_eq!(convolve(&a, &b, 5), big(&[4, 8, 5, -2, 0]));
    }

    #[test]
    fn unit_power_of_binomial() {
        // (1 + q)^3 and (1 - q)^-2
        assert_eq!(unit_power(&[(1, 1)], 3, 5), big(&[1, 3, 3, 1, 0]));
        assert_eq!(unit_power(&[(1, -1)], -2, 5), big(&[1, 2, 3, 4, 5]));
    }

    #[test]
    fn unit_power_of_sparse_base() {
        // (1 - q^2)^2 = 1 - 2q^2 + q^4
        assert_eq!(unit_power(&[(2, -1)], 2, 6), big(&[1, 0, -2, 0, 1, 0]));
    }
}
