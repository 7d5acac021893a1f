//! Named forms on `SL2(Z)`, `Γ0(2)` and `Γ0(3)` as q-series with weight,
//! group and kind bookkeeping.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{pentagonal_terms, SigmaTable};
use crate::error::{Error, Result};
use crate::kernel;
use crate::qseries::{int, rat, QSeries, Rat, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    SL2Z,
    Gamma0_2,
    Gamma0_3,
}

impl Group {
    pub const ALL: [Group; 3] = [Group::SL2Z, Group::Gamma0_2, Group::Gamma0_3];

    /// Index `d` of the image in `PSL2(Z)`: 1, 3, 4.
    pub fn index(self) -> u32 {
        match self {
            Group::SL2Z => 1,
            Group::Gamma0_2 => 3,
            Group::Gamma0_3 => 4,
        }
    }

    pub fn level(self) -> u32 {
        match self {
            Group::SL2Z => 1,
            Group::Gamma0_2 => 2,
            Group::Gamma0_3 => 3,
        }
    }

    /// Smallest of the three groups containing both, if any.
    pub fn meet(self, other: Group) -> Option<Group> {
        match (self, other) {
            (a, b) if a == b => Some(a),
            (Group::SL2Z, b) => Some(b),
            (a, Group::SL2Z) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::SL2Z => "SL2Z",
            Group::Gamma0_2 => "Gamma0_2",
            Group::Gamma0_3 => "Gamma0_3",
        })
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "SL2Z" | "sl2z" | "1" => Ok(Group::SL2Z),
            "Gamma0_2" | "gamma0_2" | "2" => Ok(Group::Gamma0_2),
            "Gamma0_3" | "gamma0_3" | "3" => Ok(Group::Gamma0_3),
            _ => Err(Error::DomainError(format!("unknown group `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Modular,
    Quasimodular,
    Cusp,
    Weakly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormDescriptor {
    pub weight: u32,
    pub group: Group,
    pub kind: FormKind,
}

impl FormDescriptor {
    pub fn new(weight: u32, group: Group, kind: FormKind) -> Self {
        Self {
            weight,
            group,
            kind,
        }
    }

    /// Descriptor of a product: weights add, groups intersect.
    pub fn product(&self, other: &FormDescriptor) -> Result<FormDescriptor> {
        use FormKind::*;
        let group = self.group.meet(other.group).ok_or_else(|| {
            Error::DescriptorMismatch(format!(
                "no common group for {} and {}",
                self.group, other.group
            ))
        })?;
        let kind = match (self.kind, other.kind) {
            (Weakly, _) | (_, Weakly) => Weakly,
            (Quasimodular, _) | (_, Quasimodular) => Quasimodular,
            (Cusp, _) | (_, Cusp) => Cusp,
            _ => Modular,
        };
        Ok(FormDescriptor::new(self.weight + other.weight, group, kind))
    }

    /// Descriptor of a sum: weights must agree.
    pub fn sum(&self, other: &FormDescriptor) -> Result<FormDescriptor> {
        use FormKind::*;
        if self.weight != other.weight {
            return Err(Error::DescriptorMismatch(format!(
                "cannot add weight {} to weight {}",
                self.weight, other.weight
            )));
        }
        let group = self.group.meet(other.group).ok_or_else(|| {
            Error::DescriptorMismatch(format!(
                "no common group for {} and {}",
                self.group, other.group
            ))
        })?;
        let kind = match (self.kind, other.kind) {
            (Weakly, _) | (_, Weakly) => Weakly,
            (Quasimodular, _) | (_, Quasimodular) => Quasimodular,
            (Cusp, Cusp) => Cusp,
            _ => Modular,
        };
        Ok(FormDescriptor::new(self.weight, group, kind))
    }

    /// `q d/dq` raises the weight by 2 and leaves modularity only for
    /// weight 0.
    pub fn derived(&self) -> FormDescriptor {
        let kind = match self.kind {
            FormKind::Modular | FormKind::Cusp if self.weight > 0 => FormKind::Quasimodular,
            FormKind::Modular | FormKind::Cusp => FormKind::Cusp,
            k => k,
        };
        FormDescriptor::new(self.weight + 2, self.group, kind)
    }
}

/// A q-series with its descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub series: QSeries,
    pub descriptor: FormDescriptor,
}

impl Form {
    /// Checks that the series is compatible with the descriptor: cusp forms
    /// vanish at infinity and only weakly modular forms have poles there.
    pub fn new(series: QSeries, descriptor: FormDescriptor) -> Result<Form> {
        if !descriptor.weight.is_multiple_of(2) {
            return Err(Error::DescriptorMismatch(format!(
                "odd weight {}",
                descriptor.weight
            )));
        }
        let v = series.valuation();
        let ok = match descriptor.kind {
            FormKind::Cusp => series.is_zero() || v >= 1,
            FormKind::Weakly => true,
            _ => series.is_zero() || v >= 0,
        };
        if !ok {
            return Err(Error::DescriptorMismatch(format!(
                "{:?} form cannot have valuation {v}",
                descriptor.kind
            )));
        }
        Ok(Form { series, descriptor })
    }

    pub fn weight(&self) -> u32 {
        self.descriptor.weight
    }

    pub fn group(&self) -> Group {
        self.descriptor.group
    }

    pub fn mul(&self, other: &Form) -> Result<Form> {
        Form::new(
            &self.series * &other.series,
            self.descriptor.product(&other.descriptor)?,
        )
    }

    pub fn pow(&self, e: u32) -> Result<Form> {
        let mut desc = FormDescriptor::new(0, self.group(), FormKind::Modular);
        for _ in 0..e {
            desc = desc.product(&self.descriptor)?;
        }
        Form::new(self.series.pow(e as i64)?, desc)
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        Form::new(
            &self.series + &other.series,
            self.descriptor.sum(&other.descriptor)?,
        )
    }

    pub fn sub(&self, other: &Form) -> Result<Form> {
        Form::new(
            &self.series - &other.series,
            self.descriptor.sum(&other.descriptor)?,
        )
    }

    pub fn scale(&self, c: &Rat) -> Form {
        Form {
            series: self.series.scale(c),
            descriptor: self.descriptor,
        }
    }

    pub fn derive(&self) -> Form {
        Form {
            series: self.series.derive(),
            descriptor: self.descriptor.derived(),
        }
    }
}

/// Formal product `∏ η(q^r)^t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    factors: Vec<(u32, i64)>,
}

impl EtaQuotientSpec {
    /// Rejects factors with `r = 0` and specs whose `q`-prefactor
    /// `q^(Σ r t / 24)` would have a fractional exponent.
    pub fn new(factors: &[(u32, i64)]) -> Result<Self> {
        if factors.iter().any(|&(r, _)| r == 0) {
            return Err(Error::DomainError("eta quotient needs r >= 1".into()));
        }
        let sum: i64 = factors.iter().map(|&(r, t)| r as i64 * t).sum();
        if sum % 24 != 0 {
            return Err(Error::FractionalExponent(sum));
        }
        Ok(Self {
            factors: factors.to_vec(),
        })
    }

    pub fn factors(&self) -> &[(u32, i64)] {
        &self.factors
    }

    /// `Σ r_j t_j / 24`.
    pub fn valuation(&self) -> i64 {
        self.factors.iter().map(|&(r, t)| r as i64 * t).sum::<i64>() / 24
    }

    /// Weight `Σ t_j / 2` (may be half-integral; returned doubled).
    pub fn doubled_weight(&self) -> i64 {
        self.factors.iter().map(|&(_, t)| t).sum()
    }
}

/// Coefficients of `E_{2j}(q)`, `j ∈ {1,2,3}`, as dense integers up to
/// `len` (exclusive).
fn eisenstein_integers(j: u32, len: usize) -> Result<Vec<BigInt>> {
    let b: i64 = match j {
        1 => -24,
        2 => 240,
        3 => -504,
        _ => {
            return Err(Error::DomainError(format!(
                "Eisenstein index must be 1, 2 or 3, got {j}"
            )))
        }
    };
    let mut out = vec![BigInt::zero(); len];
    if len == 0 {
        return Ok(out);
    }
    out[0] = BigInt::from(1);
    let sigma = SigmaTable::new(2 * j - 1, len.saturating_sub(1));
    for (n, c) in out.iter_mut().enumerate().skip(1) {
        *c = sigma.get(n) * b;
    }
    Ok(out)
}

/// `E_{2j}(q^m) + O(q^precision)`.
pub fn eisenstein_series(j: u32, m: u32, precision: i64) -> Result<QSeries> {
    if m == 0 {
        return Err(Error::DomainError(
            "rescaling exponent must be positive".into(),
        ));
    }
    let base_len = if precision <= 0 {
        0
    } else {
        ((precision - 1) / m as i64 + 1) as usize
    };
    let base = QSeries::from_bigints(0, eisenstein_integers(j, base_len)?, base_len as i64);
    Ok(base.substitute(m, Sign::Plus).truncate(precision))
}

/// `E_{2j}(q^m)` with its descriptor. `m` must be 1, 2 or 3 so that the
/// group is one of the three supported ones.
pub fn eisenstein(j: u32, m: u32, precision: i64) -> Result<Form> {
    let group = match m {
        1 => Group::SL2Z,
        2 => Group::Gamma0_2,
        3 => Group::Gamma0_3,
        _ => {
            return Err(Error::DomainError(format!(
                "no supported group for E(q^{m}); use eisenstein_series"
            )))
        }
    };
    let kind = if j == 1 {
        FormKind::Quasimodular
    } else {
        FormKind::Modular
    };
    Form::new(
        eisenstein_series(j, m, precision)?,
        FormDescriptor::new(2 * j, group, kind),
    )
}

/// `q^(Σ r t/24) ∏ ∏_n (1 - q^(r n))^t + O(q^precision)`.
///
/// Each factor `∏ (1 - q^(r n))^t` is raised from its sparse pentagonal
/// expansion with the integer power recurrence, then the factors are
/// convolved. Everything stays in integers.
pub fn eta_quotient(spec: &EtaQuotientSpec, precision: i64) -> Result<QSeries> {
    let v = spec.valuation();
    if precision <= v {
        return Ok(QSeries::zero(precision));
    }
    let len = (precision - v) as usize;
    let mut product: Option<Vec<BigInt>> = None;
    for &(r, t) in spec.factors() {
        if t == 0 {
            continue;
        }
        let r = r as usize;
        let terms: Vec<(usize, i64)> = pentagonal_terms((len - 1) / r + 1)
            .into_iter()
            .filter(|&(e, _)| e > 0)
            .map(|(e, s)| (e * r, s))
            .collect();
        let factor = kernel::unit_power(&terms, t, len);
        product = Some(match product {
            None => factor,
            Some(p) => kernel::convolve(&p, &factor, len),
        });
    }
    let coeffs = product.unwrap_or_else(|| {
        let mut one = vec![BigInt::zero(); len];
        one[0] = BigInt::from(1);
        one
    });
    Ok(QSeries::from_bigints(v, coeffs, precision))
}

/// `η_g'/η_g = Σ (r_j t_j / 24) E_2(q^(r_j))`.
pub fn eta_quotient_log_derivative(spec: &EtaQuotientSpec, precision: i64) -> Result<QSeries> {
    let mut total = QSeries::zero(precision);
    for &(r, t) in spec.factors() {
        let e2 = eisenstein_series(1, r, precision)?;
        total = &total + &e2.scale(&rat(r as i64 * t, 24));
    }
    Ok(total)
}

/// `θ_3(s q^m) = 1 + 2 Σ_{n>=1} s^n q^(m n^2)`.
pub fn theta3(m: u32, sign: Sign, precision: i64) -> QSeries {
    let mut coeffs = vec![int(0); precision.max(0) as usize];
    if coeffs.is_empty() {
        return QSeries::zero(precision);
    }
    coeffs[0] = int(1);
    let m = m as i64;
    let mut n = 1i64;
    while m * n * n < precision {
        let s = if sign == Sign::Minus && n % 2 == 1 {
            -2
        } else {
            2
        };
        coeffs[(m * n * n) as usize] = int(s);
        n += 1;
    }
    QSeries::new(0, coeffs, precision)
}

/// Names accepted by [`catalog`] and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormName {
    E2,
    E4,
    E6,
    Delta,
    P2,
    Q2,
    R2,
    Delta2,
    P3,
    Q3,
    R3,
    S3,
    Delta3,
    J,
    J2,
    J3,
}

impl FormName {
    pub const ALL: [FormName; 16] = [
        FormName::E2,
        FormName::E4,
        FormName::E6,
        FormName::Delta,
        FormName::P2,
        FormName::Q2,
        FormName::R2,
        FormName::Delta2,
        FormName::P3,
        FormName::Q3,
        FormName::R3,
        FormName::S3,
        FormName::Delta3,
        FormName::J,
        FormName::J2,
        FormName::J3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormName::E2 => "E2",
            FormName::E4 => "E4",
            FormName::E6 => "E6",
            FormName::Delta => "Delta",
            FormName::P2 => "P2",
            FormName::Q2 => "Q2",
            FormName::R2 => "R2",
            FormName::Delta2 => "Delta2",
            FormName::P3 => "P3",
            FormName::Q3 => "Q3",
            FormName::R3 => "R3",
            FormName::S3 => "S3",
            FormName::Delta3 => "Delta3",
            FormName::J => "j",
            FormName::J2 => "j2",
            FormName::J3 => "j3",
        }
    }

    /// OEIS A-number for the forms listed there.
    pub fn oeis(self) -> Option<&'static str> {
        match self {
            FormName::Q2 => Some("A004011"),
            FormName::Delta2 => Some("A002288"),
            FormName::J2 => Some("A007267"),
            FormName::Q3 => Some("A008653"),
            FormName::R3 => Some("A198956"),
            FormName::S3 => Some("A198958"),
            FormName::Delta3 => Some("A007332"),
            FormName::J3 => Some("A030197"),
            FormName::Delta => Some("A000594"),
            _ => None,
        }
    }

    pub fn descriptor(self) -> FormDescriptor {
        use FormKind::*;
        use Group::*;
        let (w, g, k) = match self {
            FormName::E2 => (2, SL2Z, Quasimodular),
            FormName::E4 => (4, SL2Z, Modular),
            FormName::E6 => (6, SL2Z, Modular),
            FormName::Delta => (12, SL2Z, Cusp),
            FormName::P2 => (2, Gamma0_2, Quasimodular),
            FormName::Q2 => (2, Gamma0_2, Modular),
            FormName::R2 => (4, Gamma0_2, Modular),
            FormName::Delta2 => (8, Gamma0_2, Cusp),
            FormName::P3 => (2, Gamma0_3, Quasimodular),
            FormName::Q3 => (2, Gamma0_3, Modular),
            FormName::R3 => (4, Gamma0_3, Modular),
            FormName::S3 => (6, Gamma0_3, Modular),
            FormName::Delta3 => (6, Gamma0_3, Cusp),
            FormName::J => (0, SL2Z, Weakly),
            FormName::J2 => (0, Gamma0_2, Weakly),
            FormName::J3 => (0, Gamma0_3, Weakly),
        };
        FormDescriptor::new(w, g, k)
    }
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn eta(factors: &[(u32, i64)], precision: i64) -> Result<QSeries> {
    eta_quotient(&EtaQuotientSpec::new(factors)?, precision)
}

fn series_for(name: FormName, n: i64) -> Result<QSeries> {
    let e2 = |m| eisenstein_series(1, m, n);
    let e4 = |m| eisenstein_series(2, m, n);
    Ok(match name {
        FormName::E2 => e2(1)?,
        FormName::E4 => e4(1)?,
        FormName::E6 => eisenstein_series(3, 1, n)?,
        FormName::Delta => eta(&[(1, 24)], n)?,
        FormName::P2 => (&e2(1)? + &e2(2)?.scale_int(2)).scale(&rat(1, 3)),
        FormName::Q2 => &e2(2)?.scale_int(2) - &e2(1)?,
        FormName::R2 => (&e4(2)?.scale_int(4) - &e4(1)?).scale(&rat(1, 3)),
        FormName::Delta2 => eta(&[(1, 8), (2, 8)], n)?,
        FormName::P3 => (&e2(1)? + &e2(3)?.scale_int(3)).scale(&rat(1, 4)),
        FormName::Q3 => (&e2(3)?.scale_int(3) - &e2(1)?).scale(&rat(1, 2)),
        FormName::R3 => {
            let a = eta(&[(3, 8)], n)?;
            let b = eta(&[(3, 8), (9, 3), (1, -3)], n)?;
            &a + &b.scale_int(9)
        }
        FormName::S3 => eta(&[(3, 18), (1, -6)], n)?,
        FormName::Delta3 => eta(&[(1, 6), (3, 6)], n)?,
        FormName::J | FormName::J2 | FormName::J3 => {
            // Inverting a valuation-1 cusp form costs two orders.
            let m = n + 2;
            let (num, den) = match name {
                FormName::J => (
                    series_for(FormName::E4, m)?.pow(3)?,
                    series_for(FormName::Delta, m)?,
                ),
                FormName::J2 => (
                    series_for(FormName::Q2, m)?.pow(4)?,
                    series_for(FormName::Delta2, m)?,
                ),
                _ => (
                    series_for(FormName::Q3, m)?.pow(3)?,
                    series_for(FormName::Delta3, m)?,
                ),
            };
            (&num * &den.invert()?).truncate(n)
        }
    })
}

/// The named form to `O(q^precision)`.
pub fn catalog(name: FormName, precision: i64) -> Result<Form> {
    if precision < 1 {
        return Err(Error::DomainError(format!(
            "precision must be at least 1, got {precision}"
        )));
    }
    Form::new(series_for(name, precision)?, name.descriptor())
}

/// [`catalog`] by string name.
pub fn catalog_by_name(name: &str, precision: i64) -> Result<Form> {
    catalog(name.parse()?, precision)
}

/// Weight-1 theta form `⅓(2θ3(q)θ3(q^3) - θ3(-q)θ3(-q^3))`, the first
/// coordinate of the solution of the original three-variable level-3
/// system. It carries a character, so no descriptor is attached.
pub fn p3_orig(precision: i64) -> QSeries {
    let plus = &theta3(1, Sign::Plus, precision) * &theta3(3, Sign::Plus, precision);
    let minus = &theta3(1, Sign::Minus, precision) * &theta3(3, Sign::Minus, precision);
    (&plus.scale_int(2) - &minus).scale(&rat(1, 3))
}

/// Particular solution `(t1, t2, t3)` of the original level-3 system
/// ([`crate::symalg::original_level3_field`]) with `dot = 3 q d/dq`:
/// `t1 = P3orig`, `t2 = ⅛(E2(q) - 9E2(q^3))`, `t3 = η(q^3)^9/η(q)^3`.
pub fn original_level3_solution(precision: i64) -> Result<[QSeries; 3]> {
    let t2 = (&eisenstein_series(1, 1, precision)?
        - &eisenstein_series(1, 3, precision)?.scale_int(9))
        .scale(&rat(1, 8));
    let t3 = eta(&[(3, 9), (1, -3)], precision)?;
    Ok([p3_orig(precision), t2, t3])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(f: &QSeries, upto: i64) -> Vec<i64> {
        (0..upto)
            .map(|n| {
                let c = f.coeff(n);
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn eisenstein_heads() {
        assert_eq!(
            ints(&eisenstein_series(1, 1, 4).unwrap(), 4),
            [1, -24, -72, -96]
        );
        assert_eq!(
            ints(&eisenstein_series(2, 1, 3).unwrap(), 3),
            [1, 240, 2160]
        );
        assert_eq!(
            ints(&eisenstein_series(3, 1, 3).unwrap(), 3),
            [1, -504, -16632]
        );
        assert!(eisenstein_series(4, 1, 3).is_err());
    }

    #[test]
    fn eisenstein_rescaled_matches_substitution() {
        let direct = eisenstein_series(1, 2, 21).unwrap();
        let via = eisenstein_series(1, 1, 11)
            .unwrap()
            .substitute(2, Sign::Plus)
            .truncate(21);
        assert_eq!(direct, via);
        assert_eq!(ints(&direct, 5), [1, 0, -24, 0, -72]);
    }

    #[test]
    fn eisenstein_descriptors() {
        let e2 = eisenstein(1, 1, 5).unwrap();
        assert_eq!(e2.descriptor.kind, FormKind::Quasimodular);
        let e4 = eisenstein(2, 2, 5).unwrap();
        assert_eq!(
            e4.descriptor,
            FormDescriptor::new(4, Group::Gamma0_2, FormKind::Modular)
        );
        assert!(eisenstein(2, 5, 5).is_err());
    }

    #[test]
    fn eta_quotient_heads() {
        let delta = eta(&[(1, 24)], 4).unwrap();
        assert_eq!(delta, QSeries::from_ints(1, &[1, -24, 252], 4));
        let d2 = eta(&[(1, 8), (2, 8)], 7).unwrap();
        assert_eq!(d2, QSeries::from_ints(1, &[1, -8, 12, 64, -210, -96], 7));
        let d3 = eta(&[(1, 6), (3, 6)], 8).unwrap();
        assert_eq!(d3, QSeries::from_ints(1, &[1, -6, 9, 4, 6, -54, -40], 8));
    }

    #[test]
    fn eta_quotient_rejects_fractional_prefactor() {
        assert_eq!(
            EtaQuotientSpec::new(&[(1, 1)]),
            Err(Error::FractionalExponent(1))
        );
        assert!(EtaQuotientSpec::new(&[(3, 8), (9, 3), (1, -3)]).is_ok());
    }

    #[test]
    fn eta_quotient_agrees_with_generic_series_route() {
        // Same product assembled from euler_product with pow/invert/substitute.
        use crate::arith::euler_product;
        let n = 40;
        let spec = EtaQuotientSpec::new(&[(3, 8), (9, 3), (1, -3)]).unwrap();
        let p = |r: u32| {
            euler_product(n as usize)
                .substitute(r, Sign::Plus)
                .truncate(n)
        };
        let generic = &(&p(3).pow(8).unwrap() * &p(9).pow(3).unwrap()) * &p(1).pow(-3).unwrap();
        let generic = &generic * &QSeries::monomial(int(1), 2, n + 2);
        assert_eq!(eta_quotient(&spec, n).unwrap(), generic.truncate(n));
    }

    #[test]
    fn eta_quotient_below_valuation_is_zero() {
        let s = eta(&[(1, 48)], 2).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.precision(), 2);
    }

    #[test]
    fn log_derivative_identities() {
        let n = 30;
        let q2 = catalog(FormName::Q2, n).unwrap().series;
        let q3 = catalog(FormName::Q3, n).unwrap().series;
        let spec2 = EtaQuotientSpec::new(&[(2, 24), (1, -24)]).unwrap();
        assert_eq!(eta_quotient_log_derivative(&spec2, n).unwrap(), q2);
        let spec3 = EtaQuotientSpec::new(&[(3, 24), (1, -24)]).unwrap();
        assert_eq!(
            eta_quotient_log_derivative(&spec3, n).unwrap(),
            q3.scale_int(2)
        );
        let spec1 = EtaQuotientSpec::new(&[(1, 24)]).unwrap();
        assert_eq!(
            eta_quotient_log_derivative(&spec1, n).unwrap(),
            eisenstein_series(1, 1, n).unwrap()
        );
    }

    #[test]
    fn log_derivative_matches_quotient() {
        let n = 30;
        for factors in [
            &[(1, 24)][..],
            &[(1, 8), (2, 8)],
            &[(3, 18), (1, -6)],
            &[(2, 24), (1, -24)],
        ] {
            let spec = EtaQuotientSpec::new(factors).unwrap();
            let f = eta_quotient(&spec, n).unwrap();
            let lhs = &f.derive() * &f.invert().unwrap();
            let rhs = eta_quotient_log_derivative(&spec, n).unwrap();
            assert!(lhs.agrees_with(&rhs), "{factors:?}");
        }
    }

    #[test]
    fn theta_series() {
        assert_eq!(
            ints(&theta3(1, Sign::Plus, 10), 10),
            [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]
        );
        let t = theta3(2, Sign::Minus, 19);
        assert_eq!(
            (t.coeff(2), t.coeff(8), t.coeff(18)),
            (int(-2), int(2), int(-2))
        );
        let t = theta3(6, Sign::Plus, 25);
        assert_eq!(
            (t.coeff(6), t.coeff(24), t.coeff(1)),
            (int(2), int(2), int(0))
        );
    }

    #[test]
    fn catalog_printed_heads() {
        let head = |n: FormName, k| ints(&catalog(n, k).unwrap().series, k);
        assert_eq!(head(FormName::P2, 5), [1, -8, -40, -32, -104]);
        assert_eq!(head(FormName::S3, 7), [0, 0, 1, 6, 27, 80, 207]);
        let j2 = catalog(FormName::J2, 4).unwrap().series;
        assert_eq!(
            j2,
            QSeries::from_ints(-1, &[1, 104, 4372, 96256, 1240002], 4)
        );
        let j3 = catalog(FormName::J3, 4).unwrap().series;
        assert_eq!(j3, QSeries::from_ints(-1, &[1, 42, 783, 8672, 65367], 4));
    }

    #[test]
    fn catalog_precision_is_exact() {
        for name in FormName::ALL {
            let f = catalog(name, 17).unwrap();
            assert_eq!(f.series.precision(), 17, "{name}");
            assert!(f.series.is_integral(), "{name}");
        }
    }

    #[test]
    fn catalog_unknown_name() {
        assert_eq!(
            catalog_by_name("E8", 4),
            Err(Error::UnknownName("E8".into()))
        );
        assert_eq!("j3".parse::<FormName>().unwrap(), FormName::J3);
    }

    #[test]
    fn descriptor_arithmetic() {
        let q2 = catalog(FormName::Q2, 6).unwrap();
        let d2 = catalog(FormName::Delta2, 6).unwrap();
        let prod = q2.mul(&d2).unwrap();
        assert_eq!(
            prod.descriptor,
            FormDescriptor::new(10, Group::Gamma0_2, FormKind::Cusp)
        );
        assert_eq!(q2.derive().descriptor.kind, FormKind::Quasimodular);
        assert_eq!(q2.derive().weight(), 4);
        let q3 = catalog(FormName::Q3, 6).unwrap();
        assert!(matches!(q2.mul(&q3), Err(Error::DescriptorMismatch(_))));
        assert!(q2.add(&d2).is_err());
        let e4 = catalog(FormName::E4, 6).unwrap();
        assert_eq!(e4.mul(&q2).unwrap().group(), Group::Gamma0_2);
    }

    #[test]
    fn cusp_descriptor_requires_vanishing() {
        let desc = FormDescriptor::new(2, Group::SL2Z, FormKind::Cusp);
        assert!(Form::new(QSeries::one(4), desc).is_err());
    }

    #[test]
    fn original_solution_heads() {
        let [t1, t2, t3] = original_level3_solution(6).unwrap();
        assert_eq!(t1.coeff(0), rat(1, 3));
        assert_eq!(t1.coeff(1), int(2));
        assert_eq!(t2.coeff(0), int(-1));
        assert_eq!(ints(&t3, 6), [0, 1, 3, 9, 13, 24]);
    }
}
