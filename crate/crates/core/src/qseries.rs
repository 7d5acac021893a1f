//! Truncated Laurent series in `q` with exact rational coefficients.
//!
//! A [`QSeries`] is a value `q^v (c_0 + c_1 q + ...) + O(q^N)`. Every
//! operation propagates the precision `N` it can actually guarantee, so an
//! identity checked with [`QSeries::first_difference`] is only ever asserted
//! on coefficients both sides really know.
//!
//! Storage is dense from the valuation up to the precision, and the
//! valuation is always tight (first stored coefficient nonzero). The zero
//! series stores no coefficients and reports `valuation == precision`.
//! With that normal form, structural equality is series equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel;

/// Exact rational number; numerator and denominator are kept coprime with a
/// positive denominator.
pub type Rat = BigRational;

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Sign applied by [`QSeries::substitute`]: `q -> +q^m` or `q -> -q^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRecord", into = "SeriesRecord")]
pub struct QSeries {
    valuation: i64,
    coeffs: Vec<Rat>,
    precision: i64,
}

impl QSeries {
    /// Builds `Σ coeffs[i] q^(valuation+i) + O(q^precision)`.
    ///
    /// Entries at or beyond the precision are dropped, leading zeros are
    /// stripped and the tail is padded with zeros up to the precision.
    pub fn new(valuation: i64, coeffs: Vec<Rat>, precision: i64) -> Self {
        let keep = (precision - valuation).max(0) as usize;
        let mut coeffs = coeffs;
        coeffs.truncate(keep);
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(precision),
            Some(skip) => {
                coeffs.drain(..skip);
                let valuation = valuation + skip as i64;
                coeffs.resize((precision - valuation) as usize, Rat::zero());
                Self {
                    valuation,
                    coeffs,
                    precision,
                }
            }
        }
    }

    pub fn from_ints(valuation: i64, coeffs: &[i64], precision: i64) -> Self {
        Self::new(
            valuation,
            coeffs.iter().map(|&c| int(c)).collect(),
            precision,
        )
    }

    pub fn from_bigints(valuation: i64, coeffs: Vec<BigInt>, precision: i64) -> Self {
        Self::new(
            valuation,
            coeffs.into_iter().map(Rat::from_integer).collect(),
            precision,
        )
    }

    /// Series whose coefficient of `q^n` is `f(n)` for `start <= n < precision`.
    pub fn from_fn(start: i64, precision: i64, f: impl FnMut(i64) -> Rat) -> Self {
        Self::new(start, (start..precision).map(f).collect(), precision)
    }

    pub fn zero(precision: i64) -> Self {
        Self {
            valuation: precision,
            coeffs: Vec::new(),
            precision,
        }
    }

    pub fn one(precision: i64) -> Self {
        Self::constant(Rat::one(), precision)
    }

    pub fn constant(c: Rat, precision: i64) -> Self {
        Self::monomial(c, 0, precision)
    }

    /// `c q^exponent + O(q^precision)`.
    pub fn monomial(c: Rat, exponent: i64, precision: i64) -> Self {
        Self::new(exponent, vec![c], precision)
    }

    /// Lowest exponent with a nonzero coefficient; equals the precision for
    /// the zero series.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coefficients starting at the valuation.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `q^n`.
    ///
    /// # Panics
    ///
    /// If `n` is not below the precision; the coefficient is unknown there.
    pub fn coeff(&self, n: i64) -> Rat {
        assert!(
            n < self.precision,
            "coefficient of q^{n} requested from a series known only to O(q^{})",
            self.precision
        );
        if n < self.valuation {
            Rat::zero()
        } else {
            self.coeffs[(n - self.valuation) as usize].clone()
        }
    }

    /// `(exponent, coefficient)` pairs for the nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> + '_ {
        let v = self.valuation;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (v + i as i64, c))
    }

    /// Forget everything from `q^precision` on. A larger value is clamped
    /// to the current precision.
    pub fn truncate(&self, precision: i64) -> Self {
        let precision = precision.min(self.precision);
        Self::new(self.valuation, self.coeffs.clone(), precision)
    }

    /// True when every known coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients from the valuation as integers, or `None` if any is not.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// First exponent below the common precision where the two series
    /// differ, or `None` if they agree there.
    pub fn first_difference(&self, other: &QSeries) -> Option<i64> {
        let common = self.precision.min(other.precision);
        let start = self.valuation.min(other.valuation);
        (start..common).find(|&n| self.coeff(n) != other.coeff(n))
    }

    /// Equality up to the common precision.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        self.first_difference(other).is_none()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.precision);
        }
        Self {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            precision: self.precision,
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&int(c))
    }

    /// Multiplicative inverse, valid to the precision the input allows:
    /// the result has valuation `-v` and precision `N - 2v`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let len = self.coeffs.len();
        let lead = &self.coeffs[0];
        let mut out: Vec<Rat> = Vec::with_capacity(len);
        if self.is_integral() && lead.abs().is_one() {
            // Unit leading coefficient: stay in integers.
            let a = self.integer_coeffs().unwrap();
            let unit = a[0].clone();
            let mut b: Vec<BigInt> = Vec::with_capacity(len);
            b.push(unit.clone());
            for n in 1..len {
                let mut acc = BigInt::zero();
                for k in 1..=n {
                    if !a[k].is_zero() {
                        acc += &a[k] * &b[n - k];
                    }
                }
                b.push(-acc * &unit);
            }
            out.extend(b.into_iter().map(Rat::from_integer));
        } else {
            let inv_lead = lead.recip();
            out.push(inv_lead.clone());
            for n in 1..len {
                let mut acc = Rat::zero();
                for k in 1..=n {
                    if !self.coeffs[k].is_zero() {
                        acc += &self.coeffs[k] * &out[n - k];
                    }
                }
                out.push(-acc * &inv_lead);
            }
        }
        let v = self.valuation;
        Ok(Self::new(-v, out, self.precision - 2 * v))
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// [`QSeries::invert`].
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.invert()?.pow(-e);
        }
        let relative = if self.is_zero() {
            self.precision
        } else {
            self.precision - self.valuation
        };
        let mut result = Self::one(relative);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// The derivation `q d/dq`: the coefficient of `q^n` is multiplied by `n`.
    pub fn derive(&self) -> Self {
        let v = self.valuation;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(v + i as i64))
            .collect();
        Self::new(v, coeffs, self.precision)
    }

    /// Applies [`QSeries::derive`] `k` times.
    pub fn derive_n(&self, k: u32) -> Self {
        (0..k).fold(self.clone(), |f, _| f.derive())
    }

    /// Substitutes `q -> s q^m`.
    pub fn substitute(&self, m: u32, sign: Sign) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        let m = m as i64;
        if self.is_zero() {
            return Self::zero(self.precision * m);
        }
        let v = self.valuation;
        let len = self.coeffs.len() as i64 * m;
        let mut coeffs = vec![Rat::zero(); len as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let n = v + i as i64;
            let flip = sign == Sign::Minus && n.is_odd();
            coeffs[i * m as usize] = if flip { -c } else { c.clone() };
        }
        Self::new(v * m, coeffs, self.precision * m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series records always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Least common multiple of the coefficient denominators.
fn common_denominator(coeffs: &[Rat]) -> BigInt {
    coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn scaled_numerators(coeffs: &[Rat], den: &BigInt) -> Vec<BigInt> {
    coeffs
        .iter()
        .map(|c| c.numer() * (den / c.denom()))
        .collect()
}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;

    fn add(self, other: &QSeries) -> QSeries {
        let precision = self.precision.min(other.precision);
        let start = self.valuation.min(other.valuation);
        if start >= precision {
            return QSeries::zero(precision);
        }
        let mut coeffs = vec![Rat::zero(); (precision - start) as usize];
        for s in [self, other] {
            for (i, c) in s.coeffs.iter().enumerate() {
                let idx = s.valuation + i as i64 - start;
                if (idx as usize) < coeffs.len() {
                    coeffs[idx as usize] += c;
                }
            }
        }
        QSeries::new(start, coeffs, precision)
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;

    fn sub(self, other: &QSeries) -> QSeries {
        self + &(-other)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            precision: self.precision,
        }
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;

    /// Precision of the product is `min(N_a + v_b, N_b + v_a)`.
    fn mul(self, other: &QSeries) -> QSeries {
        let precision = (self.precision + other.valuation).min(other.precision + self.valuation);
        if self.is_zero() || other.is_zero() {
            return QSeries::zero(precision);
        }
        let valuation = self.valuation + other.valuation;
        if valuation >= precision {
            return QSeries::zero(precision);
        }
        let len = (precision - valuation) as usize;
        // Clear denominators once so the quadratic loop runs over integers.
        let da = common_denominator(&self.coeffs);
        let db = common_denominator(&other.coeffs);
        let a = scaled_numerators(&self.coeffs, &da);
        let b = scaled_numerators(&other.coeffs, &db);
        let den = da * db;
        let coeffs = kernel::convolve(&a, &b, len)
            .into_iter()
            .map(|n| Rat::new(n, den.clone()))
            .collect();
        QSeries::new(valuation, coeffs, precision)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $method(self, other: QSeries) -> QSeries {
                (&self).$method(&other)
            }
        }
        impl<'a> $tr<&'a QSeries> for QSeries {
            type Output = QSeries;
            fn $method(self, other: &QSeries) -> QSeries {
                (&self).$method(other)
            }
        }
        impl<'a> $tr<QSeries> for &'a QSeries {
            type Output = QSeries;
            fn $method(self, other: QSeries) -> QSeries {
                self.$method(&other)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.terms() {
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = n == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match n {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision)
    }
}

/// JSON wire form: `{"valuation": v, "precision": N, "coeffs": ["p/q", ...]}`.
#[derive(Serialize, Deserialize)]
struct SeriesRecord {
    valuation: i64,
    precision: i64,
    coeffs: Vec<String>,
}

impl From<QSeries> for SeriesRecord {
    fn from(s: QSeries) -> Self {
        SeriesRecord {
            valuation: s.valuation,
            precision: s.precision,
            coeffs: s.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<SeriesRecord> for QSeries {
    type Error = Error;

    fn try_from(r: SeriesRecord) -> Result<Self> {
        if r.valuation + r.coeffs.len() as i64 > r.precision {
            return Err(Error::Parse(format!(
                "{} coefficients from q^{} exceed precision {}",
                r.coeffs.len(),
                r.valuation,
                r.precision
            )));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries::new(r.valuation, coeffs, r.precision))
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        let d = BigInt::from_str(d.trim()).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("{s}: zero denominator")));
        }
        Ok(Rat::new(n, d))
    } else {
        BigInt::from_str(s)
            .map(Rat::from_integer)
            .map_err(|e| Error::Parse(format!("{s}: {e}")))
    }
}
