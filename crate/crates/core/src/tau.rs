//! The divisor-sum recurrence, the three tau functions by three independent
//! routes, and their congruences.
//!
//! `τ`, `τ2`, `τ3` are the coefficients of `η(q)^24`, `η(q)^8 η(q^2)^8` and
//! `η(q)^6 η(q^3)^6`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::sigma1_sieve;
use crate::error::{Error, Result};
use crate::forms::{eta_quotient, EtaQuotientSpec};
use crate::kernel::{Accumulator, Wide};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauKind {
    Tau,
    Tau2,
    Tau3,
}

impl TauKind {
    pub const ALL: [TauKind; 3] = [TauKind::Tau, TauKind::Tau2, TauKind::Tau3];

    pub fn as_str(self) -> &'static str {
        match self {
            TauKind::Tau => "tau",
            TauKind::Tau2 => "tau2",
            TauKind::Tau3 => "tau3",
        }
    }

    fn eta_factors(self) -> &'static [(u32, i64)] {
        match self {
            TauKind::Tau => &[(1, 24)],
            TauKind::Tau2 => &[(1, 8), (2, 8)],
            TauKind::Tau3 => &[(1, 6), (3, 6)],
        }
    }

    /// Level `p` and the leading factor `c` of the logarithmic recursion
    /// `τ(n) = -c/(n-1) Σ τ(j) s(n-j)`.
    fn level_and_factor(self) -> (usize, i128) {
        match self {
            TauKind::Tau => (1, 24),
            TauKind::Tau2 => (2, 8),
            TauKind::Tau3 => (3, 6),
        }
    }
}

impl fmt::Display for TauKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TauKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauMethod {
    EtaProduct,
    LogRecursion,
    ExplicitFormula,
}

impl TauMethod {
    pub const ALL: [TauMethod; 3] = [
        TauMethod::EtaProduct,
        TauMethod::LogRecursion,
        TauMethod::ExplicitFormula,
    ];
}

/// `values[n - 1]` is the value at `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauTable {
    pub which: TauKind,
    pub method: TauMethod,
    pub values: Vec<BigInt>,
}

impl TauTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at `n >= 1`.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n - 1]
    }

    /// First `n` where the two tables differ, over their common length.
    pub fn first_disagreement(&self, other: &TauTable) -> Option<usize> {
        self.values
            .iter()
            .zip(&other.values)
            .position(|(a, b)| a != b)
            .map(|i| i + 1)
    }

    pub fn to_bfile(&self) -> String {
        bfile(1, &self.values)
    }
}

/// OEIS b-file body: one `n a(n)` line per value starting at `offset`.
pub fn bfile(offset: i64, values: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        out.push_str(&format!("{} {v}\n", offset + i as i64));
    }
    out
}

fn exact_div(n: usize, numerator: BigInt, denominator: i128) -> Result<BigInt> {
    let d = BigInt::from(denominator);
    let (q, r) = numerator.div_rem(&d);
    if !r.is_zero() {
        return Err(Error::NonIntegralResult {
            n: n as u64,
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        });
    }
    Ok(q)
}

fn small(x: BigInt) -> i128 {
    x.to_i128()
        .expect("divisor-sum recurrence values fit in i128")
}

/// `σ(1..=max)` from the divisor-sum recurrence alone (index 0 unused):
///
/// `(2k-1) σ(2k) = 8 Σ_{j<k} σ(j)(2σ(2k-j) + 4σ(k-j) - 5σ(2k-2j)) - (4k+1)σ(k) + 8σ(k)^2`,
/// `k σ(2k+1) = Σ_{j<=k} σ(j)(8σ(2k+1-j) - 20σ(2k+1-2j))`.
pub fn sigma_recurrence_table(max: usize) -> Result<Vec<BigInt>> {
    let mut s: Vec<i128> = vec![0, 1];
    s.truncate(max + 1);
    for n in 2..=max {
        let v = if n % 2 == 0 {
            let k = n / 2;
            let mut acc = Accumulator::new();
            for j in 1..k {
                acc.add_i128(8 * s[j] * (2 * s[2 * k - j] + 4 * s[k - j] - 5 * s[2 * k - 2 * j]));
            }
            let sk = s[k];
            acc.add_i128(-(4 * k as i128 + 1) * sk + 8 * sk * sk);
            exact_div(n, acc.finish(), 2 * k as i128 - 1)?
        } else {
            let k = n / 2;
            let mut acc = Accumulator::new();
            for j in 1..=k {
                acc.add_i128(s[j] * (8 * s[n - j] - 20 * s[n - 2 * j]));
            }
            exact_div(n, acc.finish(), k as i128)?
        };
        s.push(small(v));
    }
    Ok(s.into_iter().map(BigInt::from).collect())
}

/// `σ(n)` for `n >= 2` by [`sigma_recurrence_table`].
pub fn sigma_recurrence(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::DomainError(format!(
            "the recurrence starts at n = 2, got {n}"
        )));
    }
    Ok(sigma_recurrence_table(n)?.swap_remove(n))
}

/// `s(n) = σ(n) + sign·p·δ_p(n) σ(n/p)` for `0 <= n <= max` (index 0 unused).
fn twisted_sigma(sigma: &[i64], p: usize, sign: i64, max: usize) -> Vec<i128> {
    (0..=max)
        .map(|n| {
            let mut v = sigma[n] as i128;
            if p > 1 && n > 0 && n % p == 0 {
                v += (sign * p as i64 * sigma[n / p]) as i128;
            }
            v
        })
        .collect()
}

fn check_len(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::DomainError("tau tables need N >= 1".into()));
    }
    Ok(())
}

/// Coefficients of the eta product, `n = 1..=N`.
pub fn tau_by_eta(which: TauKind, n: usize) -> Result<TauTable> {
    check_len(n)?;
    let spec = EtaQuotientSpec::new(which.eta_factors())?;
    let series = eta_quotient(&spec, n as i64 + 1)?;
    let values = (1..=n as i64)
        .map(|i| series.coeff(i).to_integer())
        .collect();
    Ok(TauTable {
        which,
        method: TauMethod::EtaProduct,
        values,
    })
}

/// From the logarithmic derivative of the eta product:
/// `τ(n) = -c/(n-1) Σ_{j<n} τ(j) s(n-j)` with `(c, s)` = `(24, σ)`,
/// `(8, σ + 2δ2 σ(·/2))`, `(6, σ + 3δ3 σ(·/3))`.
pub fn tau_by_recursion(which: TauKind, n: usize) -> Result<TauTable> {
    check_len(n)?;
    let (p, c) = which.level_and_factor();
    let s = twisted_sigma(&sigma1_sieve(n), p, 1, n);
    let mut t: Vec<Wide> = vec![Wide::from(0i128), Wide::from(1i128)];
    for m in 2..=n {
        let mut acc = Accumulator::new();
        for j in 1..m {
            acc.add_product(s[m - j], &t[j]);
        }
        let v = exact_div(m, acc.finish() * -c, m as i128 - 1)?;
        t.push(Wide::from(v));
    }
    Ok(TauTable {
        which,
        method: TauMethod::LogRecursion,
        values: t.into_iter().skip(1).take(n).map(|w| w.big).collect(),
    })
}

/// From the convolution formulas:
///
/// - `τ(n) = 40 Σ (-10n²j² + 30nj³ - 21j⁴) σ(j)σ(n-j) - n⁴(2n-5)σ(n)/3`,
/// - `τ2(n) = 12 Σ (3nj - 5j²) s(j)s(n-j) + (3n² - 2n³) s(n)`,
/// - `τ3(n) = Σ [6(3nj - 5j²) s(j)s(n-j) - 12 τ3(j) u(n-j)] - n²(n-2) s(n)`,
///
/// sums over `1 <= j < n`, `s` the twisted sums of the recursion and
/// `u = σ - 3δ3 σ(·/3)`. Only `τ3` consumes earlier values.
pub fn tau_by_formula(which: TauKind, n: usize) -> Result<TauTable> {
    check_len(n)?;
    let sigma = sigma1_sieve(n);
    let (p, _) = which.level_and_factor();
    let s = twisted_sigma(&sigma, p, 1, n);
    let u = twisted_sigma(&sigma, 3, -1, n);
    let mut values: Vec<BigInt> = Vec::with_capacity(n);
    for m in 1..=n {
        let mi = m as i128;
        let mut acc = Accumulator::new();
        let v = match which {
            TauKind::Tau => {
                for j in 1..m {
                    let ji = j as i128;
                    let w =
                        -10 * mi * mi * ji * ji + 30 * mi * ji * ji * ji - 21 * ji * ji * ji * ji;
                    acc.add_product(40 * w, &Wide::from(s[j] * s[m - j]));
                }
                let tail = BigInt::from(mi).pow(4u32) * (2 * mi - 5) * s[m];
                acc.add_big(&-exact_div(m, tail, 3)?);
                acc.finish()
            }
            TauKind::Tau2 => {
                for j in 1..m {
                    let ji = j as i128;
                    acc.add_product(
                        12 * (3 * mi * ji - 5 * ji * ji),
                        &Wide::from(s[j] * s[m - j]),
                    );
                }
                acc.add_product(3 * mi * mi - 2 * mi * mi * mi, &Wide::from(s[m]));
                acc.finish()
            }
            TauKind::Tau3 if m == 1 => BigInt::from(1),
            TauKind::Tau3 => {
                for j in 1..m {
                    let ji = j as i128;
                    acc.add_product(
                        6 * (3 * mi * ji - 5 * ji * ji),
                        &Wide::from(s[j] * s[m - j]),
                    );
                    acc.add_product(-12 * u[m - j], &Wide::from(values[j - 1].clone()));
                }
                acc.add_product(-mi * mi * (mi - 2), &Wide::from(s[m]));
                acc.finish()
            }
        };
        values.push(v);
    }
    Ok(TauTable {
        which,
        method: TauMethod::ExplicitFormula,
        values,
    })
}

pub fn tau_table(which: TauKind, method: TauMethod, n: usize) -> Result<TauTable> {
    match method {
        TauMethod::EtaProduct => tau_by_eta(which, n),
        TauMethod::LogRecursion => tau_by_recursion(which, n),
        TauMethod::ExplicitFormula => tau_by_formula(which, n),
    }
}

/// Built-in congruences. Rules over `k` are checked for every `k` whose
/// arguments stay within the scan range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CongruenceRule {
    /// `(2k-1)σ(2k) ≡ (4k+7)σ(k) (mod 8)`
    SigmaMod8,
    /// `σ(2k) ≡ σ(k) (mod 2)`
    SigmaMod2,
    /// `k σ(2k+1) ≡ 0 (mod 4)`
    SigmaOddMod4,
    /// `(n-1)τ(n) ≡ 0 (mod 24)`
    TauMod24,
    /// `τ(n) ≡ nσ(n) (mod 2)`
    TauMod2,
    /// `τ(n) ≡ nσ(n) (mod 5)`
    TauMod5,
    /// `(n-1)τ2(n) ≡ 0 (mod 8)`
    Tau2ShiftMod8,
    /// `τ2(2k) ≡ 0 (mod 8)`
    Tau2EvenMod8,
    /// `τ2(n) ≡ nσ(n) (mod 2)`
    Tau2Mod2,
    /// `τ2(3k) ≡ 0 (mod 3)`
    Tau2Mod3,
    /// `τ2(6k) ≡ 0 (mod 24)`
    Tau2Mod24,
    /// `(n-1)τ3(n) ≡ 0 (mod 6)`
    Tau3ShiftMod6,
    /// `τ3(n) ≡ 0 (mod 6)` when `gcd(n-1, 6) = 1`
    Tau3Mod6,
    /// `τ3(n) ≡ n(σ(n) + δ3 σ(n/3)) (mod 2)`
    Tau3Parity,
    /// `τ3(n) ≡ 2n(n+1)σ(n) (mod 3)`
    Tau3SigmaMod3,
    /// `τ3(2k) ≡ 0 (mod 2)`
    Tau3EvenMod2,
    /// `τ3(3k) ≡ 0 (mod 3)`
    Tau3Mod3,
    /// `τ3(6k) ≡ 0 (mod 6)`
    Tau3SixMod6,
}

impl CongruenceRule {
    pub const ALL: [CongruenceRule; 18] = [
        CongruenceRule::SigmaMod8,
        CongruenceRule::SigmaMod2,
        CongruenceRule::SigmaOddMod4,
        CongruenceRule::TauMod24,
        CongruenceRule::TauMod2,
        CongruenceRule::TauMod5,
        CongruenceRule::Tau2ShiftMod8,
        CongruenceRule::Tau2EvenMod8,
        CongruenceRule::Tau2Mod2,
        CongruenceRule::Tau2Mod3,
        CongruenceRule::Tau2Mod24,
        CongruenceRule::Tau3ShiftMod6,
        CongruenceRule::Tau3Mod6,
        CongruenceRule::Tau3Parity,
        CongruenceRule::Tau3SigmaMod3,
        CongruenceRule::Tau3EvenMod2,
        CongruenceRule::Tau3Mod3,
        CongruenceRule::Tau3SixMod6,
    ];

    pub fn name(self) -> &'static str {
        use CongruenceRule::*;
        match self {
            SigmaMod8 => "sigma-mod8",
            SigmaMod2 => "sigma-mod2",
            SigmaOddMod4 => "sigma-odd-mod4",
            TauMod24 => "tau-mod24",
            TauMod2 => "tau-mod2",
            TauMod5 => "tau-mod5",
            Tau2ShiftMod8 => "tau2-shift-mod8",
            Tau2EvenMod8 => "tau2-even-mod8",
            Tau2Mod2 => "tau2-mod2",
            Tau2Mod3 => "tau2-mod3",
            Tau2Mod24 => "tau2-mod24",
            Tau3ShiftMod6 => "tau3-shift-mod6",
            Tau3Mod6 => "tau3-mod6",
            Tau3Parity => "tau3-parity",
            Tau3SigmaMod3 => "tau3-sigma-mod3",
            Tau3EvenMod2 => "tau3-even-mod2",
            Tau3Mod3 => "tau3-mod3",
            Tau3SixMod6 => "tau3-six-mod6",
        }
    }

    pub fn statement(self) -> &'static str {
        use CongruenceRule::*;
        match self {
            SigmaMod8 => "(2k-1) sigma(2k) = (4k+7) sigma(k) mod 8",
            SigmaMod2 => "sigma(2k) = sigma(k) mod 2",
            SigmaOddMod4 => "k sigma(2k+1) = 0 mod 4",
            TauMod24 => "(n-1) tau(n) = 0 mod 24",
            TauMod2 => "tau(n) = n sigma(n) mod 2",
            TauMod5 => "tau(n) = n sigma(n) mod 5",
            Tau2ShiftMod8 => "(n-1) tau2(n) = 0 mod 8",
            Tau2EvenMod8 => "tau2(2k) = 0 mod 8",
            Tau2Mod2 => "tau2(n) = n sigma(n) mod 2",
            Tau2Mod3 => "tau2(3k) = 0 mod 3",
            Tau2Mod24 => "tau2(6k) = 0 mod 24",
            Tau3ShiftMod6 => "(n-1) tau3(n) = 0 mod 6",
            Tau3Mod6 => "tau3(n) = 0 mod 6 when gcd(n-1, 6) = 1",
            Tau3Parity => "tau3(n) = n (sigma(n) + delta_3 sigma(n/3)) mod 2",
            Tau3SigmaMod3 => "tau3(n) = 2n(n+1) sigma(n) mod 3",
            Tau3EvenMod2 => "tau3(2k) = 0 mod 2",
            Tau3Mod3 => "tau3(3k) = 0 mod 3",
            Tau3SixMod6 => "tau3(6k) = 0 mod 6",
        }
    }

    fn tau_kind(self) -> Option<TauKind> {
        use CongruenceRule::*;
        match self {
            SigmaMod8 | SigmaMod2 | SigmaOddMod4 => None,
            TauMod24 | TauMod2 | TauMod5 => Some(TauKind::Tau),
            Tau2ShiftMod8 | Tau2EvenMod8 | Tau2Mod2 | Tau2Mod3 | Tau2Mod24 => Some(TauKind::Tau2),
            _ => Some(TauKind::Tau3),
        }
    }

    /// Name of the scanned parameter and the largest value whose
    /// arguments stay `<= up_to`.
    fn parameter(self, up_to: usize) -> (&'static str, usize) {
        use CongruenceRule::*;
        match self {
            SigmaMod8 | SigmaMod2 | Tau2EvenMod8 | Tau3EvenMod2 => ("k", up_to / 2),
            SigmaOddMod4 => ("k", up_to.saturating_sub(1) / 2),
            Tau2Mod3 | Tau3Mod3 => ("k", up_to / 3),
            Tau2Mod24 | Tau3SixMod6 => ("k", up_to / 6),
            _ => ("n", up_to),
        }
    }

    fn holds(self, m: usize, sigma: &[i64], tau: &[BigInt]) -> bool {
        use CongruenceRule::*;
        let t = |n: usize| &tau[n - 1];
        let md = |x: &BigInt, p: i64| x.mod_floor(&BigInt::from(p)).is_zero();
        let mi = m as i64;
        let nsig = |n: usize| BigInt::from(n as i64) * sigma[n];
        match self {
            SigmaMod8 => ((2 * mi - 1) * sigma[2 * m] - (4 * mi + 7) * sigma[m]).rem_euclid(8) == 0,
            SigmaMod2 => (sigma[2 * m] - sigma[m]).rem_euclid(2) == 0,
            SigmaOddMod4 => (mi * sigma[2 * m + 1]).rem_euclid(4) == 0,
            TauMod24 => md(&(t(m) * (mi - 1)), 24),
            TauMod2 | Tau2Mod2 => md(&(t(m) - nsig(m)), 2),
            TauMod5 => md(&(t(m) - nsig(m)), 5),
            Tau2ShiftMod8 => md(&(t(m) * (mi - 1)), 8),
            Tau2EvenMod8 => md(t(2 * m), 8),
            Tau2Mod3 => md(t(3 * m), 3),
            Tau2Mod24 => md(t(6 * m), 24),
            Tau3ShiftMod6 => md(&(t(m) * (mi - 1)), 6),
            Tau3Mod6 => (mi - 1).gcd(&6) != 1 || md(t(m), 6),
            Tau3Parity => {
                let third = if m.is_multiple_of(3) { sigma[m / 3] } else { 0 };
                md(&(t(m) - BigInt::from(mi) * (sigma[m] + third)), 2)
            }
            Tau3SigmaMod3 => md(&(t(m) - BigInt::from(2 * mi * (mi + 1)) * sigma[m]), 3),
            Tau3EvenMod2 => md(t(2 * m), 2),
            Tau3Mod3 => md(t(3 * m), 3),
            Tau3SixMod6 => md(t(6 * m), 6),
        }
    }
}

impl fmt::Display for CongruenceRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CongruenceRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub rule: CongruenceRule,
    pub up_to: usize,
    /// `("n" | "k", value)` of the first failing parameter.
    pub first_violation: Option<(&'static str, usize)>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_violation {
            None => write!(f, "{}: no violation up to {}", self.rule, self.up_to),
            Some((p, v)) => write!(
                f,
                "{}: violation at {p} = {v} ({})",
                self.rule,
                self.rule.statement()
            ),
        }
    }
}

/// Checks the rule for every admissible parameter whose arguments are at
/// most `up_to`, with tau values from the log recursion.
pub fn congruence_scan(rule: CongruenceRule, up_to: usize) -> Result<ScanReport> {
    let sigma = sigma1_sieve(up_to.max(1));
    let tau = match rule.tau_kind() {
        Some(k) if up_to >= 1 => tau_by_recursion(k, up_to)?.values,
        _ => Vec::new(),
    };
    Ok(scan_with(rule, up_to, &sigma, &tau))
}

/// [`congruence_scan`] on precomputed `σ(0..=up_to)` and the rule's tau
/// values `τ(1..=up_to)`.
pub fn scan_with(rule: CongruenceRule, up_to: usize, sigma: &[i64], tau: &[BigInt]) -> ScanReport {
    let (name, max) = rule.parameter(up_to);
    let first_violation = (1..=max)
        .find(|&m| !rule.holds(m, sigma, tau))
        .map(|m| (name, m));
    ScanReport {
        rule,
        up_to,
        first_violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sigma_power;

    fn ints(t: &TauTable) -> Vec<i64> {
        t.values.iter().map(|v| v.to_i64().unwrap()).collect()
    }

    #[test]
    fn sigma_recurrence_examples() {
        assert_eq!(sigma_recurrence(2).unwrap(), BigInt::from(3));
        assert_eq!(sigma_recurrence(3).unwrap(), BigInt::from(4));
        assert_eq!(
            sigma_recurrence(1000).unwrap(),
            sigma_power(1, 1000).unwrap()
        );
        assert!(sigma_recurrence(1).is_err());
    }

    #[test]
    fn sigma_recurrence_matches_sieve() {
        let rec = sigma_recurrence_table(3000).unwrap();
        let sieve = sigma1_sieve(3000);
        for n in 1..=3000 {
            assert_eq!(rec[n], BigInt::from(sieve[n]), "n = {n}");
        }
    }

    #[test]
    fn recursion_heads() {
        assert_eq!(
            ints(&tau_by_recursion(TauKind::Tau, 4).unwrap()),
            [1, -24, 252, -1472]
        );
        assert_eq!(
            ints(&tau_by_recursion(TauKind::Tau2, 6).unwrap()),
            [1, -8, 12, 64, -210, -96]
        );
        assert_eq!(
            ints(&tau_by_recursion(TauKind::Tau3, 7).unwrap()),
            [1, -6, 9, 4, 6, -54, -40]
        );
    }

    #[test]
    fn formula_first_value() {
        for k in TauKind::ALL {
            assert_eq!(tau_by_formula(k, 1).unwrap().values, [BigInt::from(1)]);
        }
    }

    #[test]
    fn routes_agree_to_300() {
        for k in TauKind::ALL {
            let eta = tau_by_eta(k, 300).unwrap();
            for m in [TauMethod::LogRecursion, TauMethod::ExplicitFormula] {
                let other = tau_table(k, m, 300).unwrap();
                assert_eq!(eta.first_disagreement(&other), None, "{k} {m:?}");
            }
        }
    }

    #[test]
    fn empty_table_is_an_error() {
        assert!(tau_by_eta(TauKind::Tau, 0).is_err());
    }

    #[test]
    fn rule_names_round_trip() {
        for r in CongruenceRule::ALL {
            assert_eq!(r.name().parse::<CongruenceRule>().unwrap(), r);
        }
        assert_eq!(
            "tau-mod7".parse::<CongruenceRule>(),
            Err(Error::UnknownRule("tau-mod7".into()))
        );
    }

    #[test]
    fn spec_scans() {
        assert!(congruence_scan(CongruenceRule::Tau2EvenMod8, 500)
            .unwrap()
            .passed());
        assert!(congruence_scan(CongruenceRule::Tau3Mod6, 500)
            .unwrap()
            .passed());
        assert!(congruence_scan(CongruenceRule::TauMod24, 1000)
            .unwrap()
            .passed());
    }

    #[test]
    fn all_rules_scan_clean_to_1000() {
        for r in CongruenceRule::ALL {
            let rep = congruence_scan(r, 1000).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn scan_reports_violations() {
        // Corrupt τ2(4).
        let sigma = sigma1_sieve(10);
        let mut tau = tau_by_recursion(TauKind::Tau2, 10).unwrap().values;
        tau[3] += 1;
        let rep = scan_with(CongruenceRule::Tau2EvenMod8, 10, &sigma, &tau);
        assert_eq!(rep.first_violation, Some(("k", 2)));
        assert!(rep.to_string().contains("violation at k = 2"));
    }

    #[test]
    fn bfile_format() {
        let t = tau_by_eta(TauKind::Tau, 3).unwrap();
        assert_eq!(t.to_bfile(), "1 1\n2 -24\n3 252\n");
    }
}
