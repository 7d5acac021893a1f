//! Rankin–Cohen brackets, Serre-type derivations and Chazy-type equations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{catalog, Form, FormDescriptor, FormKind, FormName, Group};
use crate::qseries::{int, rat, QSeries, Rat};
use crate::symalg::{reduce_mod_ideal, MPoly, PolyVF, MAX_VARS};

/// `C(top, k)` for any integer `top`, by the falling-factorial recurrence.
pub fn binomial(top: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc = acc * BigInt::from(top - i) / BigInt::from(i + 1);
    }
    acc
}

/// `[f, g]_n = Σ_{i+j=n} (-1)^j C(n+k-1, i) C(n+l-1, j) f^(j) g^(i)` for
/// declared weights `k` of `f` and `l` of `g`; derivatives are `q d/dq`.
pub fn rankin_cohen(f: &QSeries, k: u32, g: &QSeries, l: u32, n: u32) -> QSeries {
    let precision = f.precision().min(g.precision());
    let mut total = QSeries::zero(precision);
    for j in 0..=n {
        let i = n - j;
        let mut c = binomial((n + k) as i64 - 1, i) * binomial((n + l) as i64 - 1, j);
        if j % 2 == 1 {
            c = -c;
        }
        if c.is_zero() {
            continue;
        }
        let term = &f.derive_n(j) * &g.derive_n(i);
        total = &total + &term.scale(&Rat::from_integer(c));
    }
    total
}

/// [`rankin_cohen`] on forms, using their declared weights. For `n >= 1`
/// a bracket of two modular forms is a cusp form of weight `k + l + 2n`.
pub fn rankin_cohen_forms(f: &Form, g: &Form, n: u32) -> Result<Form> {
    let prod = f.descriptor.product(&g.descriptor)?;
    let kind = match prod.kind {
        FormKind::Modular | FormKind::Cusp if n >= 1 => FormKind::Cusp,
        k => k,
    };
    let series = rankin_cohen(&f.series, f.weight(), &g.series, g.weight(), n);
    Form::new(
        series,
        FormDescriptor::new(prod.weight + 2 * n, prod.group, kind),
    )
}

/// `(w, P)` for the group's Serre-type derivation `f' - (k/w) P f`.
fn serre_data(group: Group, precision: i64) -> Result<(i64, QSeries)> {
    let (w, name) = match group {
        Group::SL2Z => (12, FormName::E2),
        Group::Gamma0_2 => (8, FormName::P2),
        Group::Gamma0_3 => (6, FormName::P3),
    };
    Ok((w, catalog(name, precision.max(1))?.series))
}

/// `f' - (k/w) P f` with `(w, P)` = `(12, E2)`, `(8, P2)`, `(6, P3)`.
pub fn serre_derivative(f: &QSeries, k: u32, group: Group) -> Result<QSeries> {
    let (w, p) = serre_data(group, f.precision())?;
    let correction = (&p * f).scale(&rat(k as i64, w));
    Ok(&f.derive() - &correction)
}

/// [`serre_derivative`] with the declared weight and group of `f`. Only
/// modular inputs stay modular.
pub fn serre_derivative_form(f: &Form) -> Result<Form> {
    let kind = match f.descriptor.kind {
        FormKind::Modular | FormKind::Cusp => f.descriptor.kind,
        _ => {
            return Err(Error::DescriptorMismatch(
                "Serre derivative needs a modular form".into(),
            ))
        }
    };
    Form::new(
        serre_derivative(&f.series, f.weight(), f.group())?,
        FormDescriptor::new(f.weight() + 2, f.group(), kind),
    )
}

fn term(c: Rat, e: [u32; MAX_VARS], n: usize) -> MPoly {
    MPoly::term(c, e, n)
}

/// The Serre-type derivation as a vector field on the generator ring
/// (the `∂/∂t1` slot is empty).
pub fn serre_field(group: Group) -> PolyVF {
    let comps = match group {
        Group::SL2Z => vec![
            MPoly::zero(3),
            term(rat(-1, 3), [0, 0, 1, 0], 3),
            term(rat(-1, 2), [0, 2, 0, 0], 3),
        ],
        Group::Gamma0_2 => vec![
            MPoly::zero(3),
            term(rat(-1, 4), [0, 0, 1, 0], 3),
            term(rat(-1, 2), [0, 3, 0, 0], 3),
        ],
        Group::Gamma0_3 => vec![
            MPoly::zero(4),
            &term(rat(-1, 3), [0, 2, 0, 0], 4) + &term(int(18), [0, 0, 1, 0], 4),
            &term(rat(1, 3), [0, 1, 1, 0], 4) + &term(int(9), [0, 0, 0, 1], 4),
            term(int(1), [0, 1, 0, 1], 4),
        ],
    };
    PolyVF::new(comps).expect("fixed fields are well formed")
}

/// Serre-type derivation applied to a polynomial in the group's
/// generators; for `Γ0(3)` the result is reduced modulo `t3^2 - t2 t4`.
pub fn serre_derivative_poly(group: Group, f: &MPoly) -> Result<MPoly> {
    let out = serre_field(group).apply(f)?;
    Ok(match group {
        Group::Gamma0_3 => reduce_mod_ideal(&out),
        _ => out,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChazyVariant {
    /// `2y''' - 2y y'' + 3y'^2`.
    Classical,
    /// `y'''(16y' - 2y^2) - y''(8y'' + 12y y' - 2y^3) + y'^2(20y' - 3y^2)`.
    Gamma02,
}

/// Left side of the Chazy-type equation at `y`.
pub fn chazy_residual(variant: ChazyVariant, y: &QSeries) -> QSeries {
    let d1 = y.derive();
    let d2 = d1.derive();
    let d3 = d2.derive();
    match variant {
        ChazyVariant::Classical => {
            let a = d3.scale_int(2);
            let b = (y * &d2).scale_int(2);
            let c = (&d1 * &d1).scale_int(3);
            &(&a - &b) + &c
        }
        ChazyVariant::Gamma02 => {
            let y2 = y * y;
            let y3 = &y2 * y;
            let a = &d3 * &(&d1.scale_int(16) - &y2.scale_int(2));
            let inner = &(&d2.scale_int(8) + &(y * &d1).scale_int(12)) - &y3.scale_int(2);
            let b = &d2 * &inner;
            let c = &(&d1 * &d1) * &(&d1.scale_int(20) - &y2.scale_int(3));
            &(&a - &b) + &c
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HigherOrderIdentity {
    /// `4E2^(5) - 10E2 E2^(4) + 100E2' E2''' - 100(E2'')^2 = 144Δ`.
    Sl2zOrder5,
    /// `-6P2 P2'' + 9(P2')^2 + 4P2''' = 16Δ2`.
    Gamma02Order3,
    /// `P3''' - 2P3 P3'' + 3(P3')^2 = 6Q3 Δ3`.
    Gamma03Order3,
}

impl HigherOrderIdentity {
    pub const ALL: [HigherOrderIdentity; 3] = [
        HigherOrderIdentity::Sl2zOrder5,
        HigherOrderIdentity::Gamma02Order3,
        HigherOrderIdentity::Gamma03Order3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            HigherOrderIdentity::Sl2zOrder5 => "sl2z_order5",
            HigherOrderIdentity::Gamma02Order3 => "gamma02_order3",
            HigherOrderIdentity::Gamma03Order3 => "gamma03_order3",
        }
    }
}

impl fmt::Display for HigherOrderIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HigherOrderIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|w| w.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Left side minus right side of the identity to `O(q^precision)`.
pub fn higher_order_identity(which: HigherOrderIdentity, precision: i64) -> Result<QSeries> {
    let get = |n| catalog(n, precision).map(|f| f.series);
    Ok(match which {
        HigherOrderIdentity::Sl2zOrder5 => {
            let e = get(FormName::E2)?;
            let d: Vec<QSeries> = (0..=5).map(|k| e.derive_n(k)).collect();
            let lhs = [
                d[5].scale_int(4),
                (&e * &d[4]).scale_int(-10),
                (&d[1] * &d[3]).scale_int(100),
                (&d[2] * &d[2]).scale_int(-100),
            ]
            .iter()
            .fold(QSeries::zero(precision), |acc, t| &acc + t);
            &lhs - &get(FormName::Delta)?.scale_int(144)
        }
        HigherOrderIdentity::Gamma02Order3 => {
            let p = get(FormName::P2)?;
            let (d1, d2, d3) = (p.derive(), p.derive_n(2), p.derive_n(3));
            let lhs = &(&(&p * &d2).scale_int(-6) + &(&d1 * &d1).scale_int(9)) + &d3.scale_int(4);
            &lhs - &get(FormName::Delta2)?.scale_int(16)
        }
        HigherOrderIdentity::Gamma03Order3 => {
            let p = get(FormName::P3)?;
            let (d1, d2, d3) = (p.derive(), p.derive_n(2), p.derive_n(3));
            let lhs = &(&d3 - &(&p * &d2).scale_int(2)) + &(&d1 * &d1).scale_int(3);
            &lhs - &(&get(FormName::Q3)? * &get(FormName::Delta3)?).scale_int(6)
        }
    })
}

/// Residuals of the level-2 bracket quotients, each zero to precision:
/// `[Δ2,Δ2]_2/(72Δ2^2) + Q2^2/8`, `[Δ2,Q2]_1/(8Δ2) + R2/4`,
/// `[Δ2,R2]_1/(8Δ2) + Q2^3/2`, and `[Δ2,Δ2]_2/(72Δ2^2) - (P2' - P2^2/8)`.
pub fn level2_bracket_quotients(precision: i64) -> Result<Vec<(&'static str, QSeries)>> {
    // Dividing by Δ2 (valuation 1) costs one order per factor.
    let m = precision + 2;
    let get = |n| catalog(n, m).map(|f| f.series);
    let (d, p, q, r) = (
        get(FormName::Delta2)?,
        get(FormName::P2)?,
        get(FormName::Q2)?,
        get(FormName::R2)?,
    );
    let inv = d.invert()?;
    let inv2 = &inv * &inv;
    let rc22 = &(&rankin_cohen(&d, 8, &d, 8, 2) * &inv2).scale(&rat(1, 72));
    let rcq = &(&rankin_cohen(&d, 8, &q, 2, 1) * &inv).scale(&rat(1, 8));
    let rcr = &(&rankin_cohen(&d, 8, &r, 4, 1) * &inv).scale(&rat(1, 8));
    let p_side = &p.derive() - &(&p * &p).scale(&rat(1, 8));
    let out = vec![
        (
            "[D2,D2]_2/(72 D2^2) = -Q2^2/8",
            rc22 + &(&q * &q).scale(&rat(1, 8)),
        ),
        ("[D2,Q2]_1/(8 D2) = -R2/4", rcq + &r.scale(&rat(1, 4))),
        (
            "[D2,R2]_1/(8 D2) = -Q2^3/2",
            rcr + &(&(&q * &q) * &q).scale(&rat(1, 2)),
        ),
        ("[D2,D2]_2/(72 D2^2) = P2' - P2^2/8", rc22 - &p_side),
    ];
    Ok(out
        .into_iter()
        .map(|(n, s)| (n, s.truncate(precision)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series(name: FormName, n: i64) -> QSeries {
        catalog(name, n).unwrap().series
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(binomial(9, 2), BigInt::from(36));
        assert_eq!(binomial(-1, 0), BigInt::from(1));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn bracket_zero_is_product() {
        let (f, g) = (series(FormName::E4, 20), series(FormName::Q2, 20));
        assert_eq!(rankin_cohen(&f, 4, &g, 2, 0), &f * &g);
    }

    #[test]
    fn bracket_quotients_vanish() {
        for (name, r) in level2_bracket_quotients(40).unwrap() {
            assert!(r.is_zero(), "{name}");
            assert_eq!(r.precision(), 40);
        }
    }

    #[test]
    fn bracket_of_forms_is_cusp() {
        let e4 = catalog(FormName::E4, 20).unwrap();
        let e6 = catalog(FormName::E6, 20).unwrap();
        let b = rankin_cohen_forms(&e4, &e6, 1).unwrap();
        assert_eq!(
            b.descriptor,
            FormDescriptor::new(12, Group::SL2Z, FormKind::Cusp)
        );
        // [E4, E6]_1 = -3456 Δ
        assert_eq!(b.series, series(FormName::Delta, 20).scale_int(-3456));
    }

    #[test]
    fn serre_examples() {
        let n = 30;
        let e4 = series(FormName::E4, n);
        assert_eq!(
            serre_derivative(&e4, 4, Group::SL2Z).unwrap(),
            series(FormName::E6, n).scale(&rat(-1, 3))
        );
        let q2 = series(FormName::Q2, n);
        assert_eq!(
            serre_derivative(&q2, 2, Group::Gamma0_2).unwrap(),
            series(FormName::R2, n).scale(&rat(-1, 4))
        );
        let q3 = series(FormName::Q3, n);
        let want = (&series(FormName::R3, n).scale_int(54) - &(&q3 * &q3)).scale(&rat(1, 3));
        assert_eq!(serre_derivative(&q3, 2, Group::Gamma0_3).unwrap(), want);
        let d = catalog(FormName::Delta, n).unwrap();
        assert!(serre_derivative_form(&d).unwrap().series.is_zero());
        assert!(serre_derivative_form(&catalog(FormName::E2, n).unwrap()).is_err());
    }

    #[test]
    fn serre_poly_examples() {
        let t = |i| MPoly::var(i, 3);
        assert_eq!(
            serre_derivative_poly(Group::Gamma0_2, &t(1)).unwrap(),
            MPoly::var(2, 3).scale(&rat(-1, 4))
        );
        assert_eq!(
            serre_derivative_poly(Group::Gamma0_2, &t(2)).unwrap(),
            MPoly::var(1, 3).pow(3).scale(&rat(-1, 2))
        );
        assert_eq!(
            serre_derivative_poly(Group::Gamma0_3, &MPoly::var(3, 4)).unwrap(),
            &MPoly::var(1, 4) * &MPoly::var(3, 4)
        );
        assert!(serre_derivative_poly(Group::SL2Z, &MPoly::var(0, 4)).is_err());
    }

    /// Monomials in the modular generators (no `t1`) of weight `<= max`.
    fn modular_monomials(weights: &[u32], max: u32) -> Vec<[u32; MAX_VARS]> {
        let mut out = Vec::new();
        let bound = |w: u32| max / w;
        let n = weights.len();
        for a in 0..=bound(weights[1]) {
            for b in 0..=bound(weights[2]) {
                for c in 0..=(if n == 4 { bound(weights[3]) } else { 0 }) {
                    let e = [0, a, b, c];
                    let w: u32 = e.iter().zip(weights).map(|(x, y)| x * y).sum();
                    if w <= max && w > 0 {
                        out.push(e);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn serre_poly_commutes_with_evaluation() {
        let n = 24;
        let cases = [
            (
                Group::SL2Z,
                vec![FormName::E2, FormName::E4, FormName::E6],
                vec![2, 4, 6],
            ),
            (
                Group::Gamma0_2,
                vec![FormName::P2, FormName::Q2, FormName::R2],
                vec![2, 2, 4],
            ),
            (
                Group::Gamma0_3,
                vec![FormName::P3, FormName::Q3, FormName::R3, FormName::S3],
                vec![2, 2, 4, 6],
            ),
        ];
        for (g, names, w) in cases {
            let point: Vec<_> = names.iter().map(|&m| series(m, n)).collect();
            for e in modular_monomials(&w, 12) {
                let m = MPoly::term(int(1), e, w.len());
                let k = e.iter().zip(&w).map(|(x, y)| x * y).sum();
                let lhs = serre_derivative_poly(g, &m)
                    .unwrap()
                    .evaluate(&point)
                    .unwrap();
                let rhs = serre_derivative(&m.evaluate(&point).unwrap(), k, g).unwrap();
                assert_eq!(lhs, rhs, "{g} {e:?}");
            }
        }
    }

    #[test]
    fn chazy_equations() {
        let n = 50;
        assert!(chazy_residual(ChazyVariant::Classical, &series(FormName::E2, n)).is_zero());
        assert!(chazy_residual(ChazyVariant::Gamma02, &series(FormName::P2, n)).is_zero());
        assert!(chazy_residual(ChazyVariant::Classical, &QSeries::zero(n)).is_zero());
        assert!(!chazy_residual(ChazyVariant::Classical, &series(FormName::P2, n)).is_zero());
    }

    #[test]
    fn higher_order_identities_hold() {
        for w in HigherOrderIdentity::ALL {
            let r = higher_order_identity(w, 60).unwrap();
            assert!(r.is_zero(), "{w}");
            assert_eq!(w.as_str().parse::<HigherOrderIdentity>().unwrap(), w);
        }
    }

    fn arb_series() -> impl Strategy<Value = QSeries> {
        prop::collection::vec(-20i64..=20, 12).prop_map(|c| QSeries::from_ints(0, &c, 12))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bracket_symmetry(f in arb_series(), g in arb_series(), k in 0u32..6, l in 0u32..6, n in 0u32..5) {
            let (k, l) = (2 * k, 2 * l);
            let a = rankin_cohen(&f, k, &g, l, n);
            let b = rankin_cohen(&g, l, &f, k, n);
            let b = if n % 2 == 1 { -b } else { b };
            prop_assert_eq!(a, b);
        }

        #[test]
        fn serre_leibniz(i in 0usize..4, j in 0usize..4) {
            let names = [FormName::E4, FormName::E6, FormName::Delta, FormName::E4];
            let (f, g) = (catalog(names[i], 20).unwrap(), catalog(names[j], 20).unwrap());
            let fg = f.mul(&g).unwrap();
            let lhs = serre_derivative(&fg.series, fg.weight(), Group::SL2Z).unwrap();
            let df = serre_derivative(&f.series, f.weight(), Group::SL2Z).unwrap();
            let dg = serre_derivative(&g.series, g.weight(), Group::SL2Z).unwrap();
            prop_assert_eq!(lhs, &(&df * &g.series) + &(&f.series * &dg));
        }
    }
}
