//! Named verification suites, as run by `qmf verify`.

use std::fmt;
use std::str::FromStr;

use crate::calculus::{
    chazy_residual, higher_order_identity, level2_bracket_quotients, serre_derivative,
    serre_derivative_poly, ChazyVariant, HigherOrderIdentity,
};
use crate::error::{Error, Result};
use crate::forms::{catalog, original_level3_solution, Form, FormName, Group};
use crate::modspace::{certify_equal, generators, verify_independence, Certificate};
use crate::qseries::{int, rat, QSeries};
use crate::symalg::{
    check_sl2_triple, invariant_relation_residual, ode_residual, ode_residual_scaled,
    original_level2_field, original_level2_map, original_level2_relation, original_level3_field,
    original_level3_map, original_level3_timescale, pushforward_residual, ramanujan_field,
    sl2_triple, Level3Variant, MPoly, WeightVector,
};

pub const DEFAULT_IDENTITY_ORDER: i64 = 64;
pub const DEFAULT_SYSTEM_ORDER: i64 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Systems,
    Sl2,
    Identities,
    Chazy,
    Serre,
    Pushforward,
    Bases,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::All,
        Suite::Systems,
        Suite::Sl2,
        Suite::Identities,
        Suite::Chazy,
        Suite::Serre,
        Suite::Pushforward,
        Suite::Bases,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Systems => "systems",
            Suite::Sl2 => "sl2",
            Suite::Identities => "identities",
            Suite::Chazy => "chazy",
            Suite::Serre => "serre",
            Suite::Pushforward => "pushforward",
            Suite::Bases => "bases",
        }
    }

    fn default_order(self) -> i64 {
        match self {
            Suite::Systems => DEFAULT_SYSTEM_ORDER,
            _ => DEFAULT_IDENTITY_ORDER,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {}: {}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

fn check(
    suite: Suite,
    name: impl Into<String>,
    passed: bool,
    detail: impl Into<String>,
) -> CheckResult {
    CheckResult {
        suite,
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

/// Passes iff every residual vanishes; reports the first nonzero
/// coefficient otherwise.
fn residual_check(
    suite: Suite,
    name: impl Into<String>,
    residuals: &[QSeries],
    note: &str,
) -> CheckResult {
    let precision = residuals.iter().map(QSeries::precision).min().unwrap_or(0);
    let bad = residuals
        .iter()
        .enumerate()
        .find(|(_, r)| !r.is_zero())
        .map(|(j, r)| (j, r.valuation()));
    match bad {
        None => {
            let detail = if note.is_empty() {
                format!("zero through q^{}", precision - 1)
            } else {
                format!("zero through q^{}, {note}", precision - 1)
            };
            check(suite, name, true, detail)
        }
        Some((j, v)) => check(
            suite,
            name,
            false,
            format!("component {} nonzero at q^{v}", j + 1),
        ),
    }
}

fn poly_check(suite: Suite, name: impl Into<String>, residuals: &[MPoly]) -> CheckResult {
    match residuals.iter().position(|p| !p.is_zero()) {
        None => check(suite, name, true, "exact"),
        Some(j) => check(
            suite,
            name,
            false,
            format!("component {} residual {}", j + 1, residuals[j]),
        ),
    }
}

fn certify_check(suite: Suite, name: &str, lhs: &Form, rhs: &Form) -> Result<CheckResult> {
    let cert = certify_equal(lhs, rhs)?;
    Ok(check(
        suite,
        name,
        cert == Certificate::Equal,
        format!("Sturm-certified: {cert}"),
    ))
}

fn series(name: FormName, n: i64) -> Result<QSeries> {
    Ok(catalog(name, n)?.series)
}

fn systems(n: i64) -> Result<Vec<CheckResult>> {
    let s = Suite::Systems;
    let tuple = |g: Group| -> Result<Vec<QSeries>> {
        generators(g).iter().map(|&m| series(m, n)).collect()
    };
    let mut out = Vec::new();
    let labels = [
        (Group::SL2Z, "Ramanujan system at (E2, E4, E6)"),
        (Group::Gamma0_2, "level-2 system at (P2, Q2, R2)"),
    ];
    for (g, label) in labels {
        let r = ode_residual(&ramanujan_field(g, Level3Variant::Linear), &tuple(g)?)?;
        out.push(residual_check(s, label, &r, ""));
    }
    let sol = tuple(Group::Gamma0_3)?;
    let mut r = ode_residual(
        &ramanujan_field(Group::Gamma0_3, Level3Variant::Linear),
        &sol,
    )?;
    r.extend(ode_residual(
        &ramanujan_field(Group::Gamma0_3, Level3Variant::Quadratic),
        &sol,
    )?);
    out.push(residual_check(
        s,
        "level-3 system at (P3, Q3, R3, S3), both t4' forms",
        &r,
        "",
    ));
    let sol = original_level3_solution(n)?;
    let r = ode_residual_scaled(&original_level3_field(), &sol, &original_level3_timescale())?;
    out.push(residual_check(
        s,
        "original three-variable level-3 system at its theta/eta solution",
        &r,
        "",
    ));
    Ok(out)
}

fn sl2() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for g in Group::ALL {
        let (e, h, f) = sl2_triple(g, Level3Variant::Quadratic);
        for c in check_sl2_triple(&e, &h, &f)?.checks {
            let detail = if c.passed {
                if g == Group::Gamma0_3 {
                    "exact mod t3^2 - t2 t4".to_string()
                } else {
                    "exact".to_string()
                }
            } else {
                format!("residual {}", c.residual)
            };
            out.push(check(
                Suite::Sl2,
                format!("{g}: {}", c.relation),
                c.passed,
                detail,
            ));
        }
    }
    Ok(out)
}

fn identities(n: i64) -> Result<Vec<CheckResult>> {
    let s = Suite::Identities;
    let f = |m| catalog(m, n);
    let mut out = Vec::new();

    let e4 = f(FormName::E4)?;
    let e6 = f(FormName::E6)?;
    let rhs = e4.pow(3)?.sub(&e6.pow(2)?)?.scale(&rat(1, 1728));
    out.push(certify_check(
        s,
        "Delta = (E4^3 - E6^2)/1728",
        &f(FormName::Delta)?,
        &rhs,
    )?);
    let (q2, r2) = (f(FormName::Q2)?, f(FormName::R2)?);
    let rhs = q2.pow(4)?.sub(&r2.pow(2)?)?.scale(&rat(1, 256));
    out.push(certify_check(
        s,
        "Delta2 = (Q2^4 - R2^2)/256",
        &f(FormName::Delta2)?,
        &rhs,
    )?);
    let (q3, r3, s3) = (f(FormName::Q3)?, f(FormName::R3)?, f(FormName::S3)?);
    let rhs = q3.mul(&r3)?.sub(&s3.scale(&int(27)))?;
    out.push(certify_check(
        s,
        "Delta3 = Q3 R3 - 27 S3",
        &f(FormName::Delta3)?,
        &rhs,
    )?);
    out.push(certify_check(
        s,
        "R3^2 = Q3 S3",
        &r3.pow(2)?,
        &q3.mul(&s3)?,
    )?);

    // The j-family, multiplied back and against a second expression.
    let j = series(FormName::J, n)?;
    let j2 = series(FormName::J2, n)?;
    let j3 = series(FormName::J3, n)?;
    let delta = series(FormName::Delta, n)?;
    let delta2 = series(FormName::Delta2, n)?;
    let delta3 = series(FormName::Delta3, n)?;
    let k1728 = QSeries::constant(int(1728), n);
    let k256 = QSeries::constant(int(256), n);
    let checks: Vec<(&str, QSeries)> = vec![
        ("j Delta = E4^3", &(&j * &delta) - &e4.pow(3)?.series),
        (
            "(j - 1728) Delta = E6^2",
            &(&(&j - &k1728) * &delta) - &e6.pow(2)?.series,
        ),
        ("j2 Delta2 = Q2^4", &(&j2 * &delta2) - &q2.pow(4)?.series),
        (
            "(j2 - 256) Delta2 = R2^2",
            &(&(&j2 - &k256) * &delta2) - &r2.pow(2)?.series,
        ),
        ("j3 Delta3 = Q3^3", &(&j3 * &delta3) - &q3.pow(3)?.series),
    ];
    for (name, r) in checks {
        out.push(residual_check(s, name, &[r], ""));
    }

    let log_derivs = [
        ("Delta' = E2 Delta", FormName::Delta, FormName::E2),
        ("Delta2' = P2 Delta2", FormName::Delta2, FormName::P2),
        ("Delta3' = P3 Delta3", FormName::Delta3, FormName::P3),
    ];
    for (name, d, p) in log_derivs {
        let d = series(d, n)?;
        let r = &d.derive() - &(&series(p, n)? * &d);
        out.push(residual_check(s, name, &[r], "precision-verified"));
    }

    for (name, r) in level2_bracket_quotients(n)? {
        out.push(residual_check(s, name, &[r], "precision-verified"));
    }
    for w in HigherOrderIdentity::ALL {
        let r = higher_order_identity(w, n)?;
        out.push(residual_check(s, w.as_str(), &[r], "precision-verified"));
    }
    Ok(out)
}

fn chazy(n: i64) -> Result<Vec<CheckResult>> {
    let s = Suite::Chazy;
    Ok(vec![
        residual_check(
            s,
            "Chazy equation at E2",
            &[chazy_residual(
                ChazyVariant::Classical,
                &series(FormName::E2, n)?,
            )],
            "precision-verified, not certified",
        ),
        residual_check(
            s,
            "level-2 Chazy-type equation at P2",
            &[chazy_residual(
                ChazyVariant::Gamma02,
                &series(FormName::P2, n)?,
            )],
            "precision-verified, not certified",
        ),
    ])
}

/// Serre-type derivation as a series and as a polynomial operator agree
/// on every generator monomial of weight `<= max_weight`.
pub fn serre_consistency(group: Group, max_weight: u32, n: i64) -> Result<(usize, Option<String>)> {
    let w = WeightVector::for_group(group).weights;
    let point: Vec<QSeries> = generators(group)
        .iter()
        .map(|&m| series(m, n))
        .collect::<Result<_>>()?;
    let nvars = w.len();
    let mut count = 0;
    let mut stack = vec![[0u32; 4]];
    let mut seen = std::collections::BTreeSet::new();
    while let Some(e) = stack.pop() {
        if !seen.insert(e) {
            continue;
        }
        let k: u32 = e.iter().zip(&w).map(|(a, b)| a * b).sum();
        if k > 0 {
            let m = MPoly::term(int(1), e, nvars);
            let lhs = serre_derivative_poly(group, &m)?.evaluate(&point)?;
            let rhs = serre_derivative(&m.evaluate(&point)?, k, group)?;
            count += 1;
            if lhs != rhs {
                return Ok((count, Some(format!("{m}"))));
            }
        }
        for i in 1..nvars {
            if k + w[i] <= max_weight {
                let mut next = e;
                next[i] += 1;
                stack.push(next);
            }
        }
    }
    Ok((count, None))
}

fn serre(n: i64) -> Result<Vec<CheckResult>> {
    let s = Suite::Serre;
    let mut out = Vec::new();
    for g in Group::ALL {
        let (count, bad) = serre_consistency(g, 12, n)?;
        out.push(match bad {
            None => check(
                s,
                format!("{g}: series and polynomial forms agree"),
                true,
                format!("{count} monomials of weight <= 12"),
            ),
            Some(m) => check(
                s,
                format!("{g}: series and polynomial forms agree"),
                false,
                format!("differs at {m}"),
            ),
        });
    }
    let e4 = series(FormName::E4, n)?;
    let e6 = series(FormName::E6, n)?;
    let r = &serre_derivative(&e4, 4, Group::SL2Z)? + &e6.scale(&rat(1, 3));
    out.push(residual_check(s, "E4 -> -E6/3", &[r], ""));
    let r = &serre_derivative(&series(FormName::Q2, n)?, 2, Group::Gamma0_2)?
        + &series(FormName::R2, n)?.scale(&rat(1, 4));
    out.push(residual_check(s, "Q2 -> -R2/4", &[r], ""));
    let q3 = series(FormName::Q3, n)?;
    let want = (&series(FormName::R3, n)?.scale_int(54) - &(&q3 * &q3)).scale(&rat(1, 3));
    let r = &serre_derivative(&q3, 2, Group::Gamma0_3)? - &want;
    out.push(residual_check(s, "Q3 -> (54 R3 - Q3^2)/3", &[r], ""));
    let fg = &e4 * &e6;
    let lhs = serre_derivative(&fg, 10, Group::SL2Z)?;
    let rhs = &(&serre_derivative(&e4, 4, Group::SL2Z)? * &e6)
        + &(&e4 * &serre_derivative(&e6, 6, Group::SL2Z)?);
    out.push(residual_check(s, "Leibniz on E4 E6", &[&lhs - &rhs], ""));
    Ok(out)
}

fn pushforward() -> Result<Vec<CheckResult>> {
    let s = Suite::Pushforward;
    let mut out = Vec::new();
    let (phi, ts) = original_level3_map();
    for (var, label) in [
        (Level3Variant::Linear, "t4' = t1 t4 + t2 t4"),
        (Level3Variant::Quadratic, "t4' = t1 t4 + t3^2"),
    ] {
        let r = pushforward_residual(
            &original_level3_field(),
            &phi,
            &ts,
            &ramanujan_field(Group::Gamma0_3, var),
        )?;
        out.push(poly_check(
            s,
            format!("level-3 change of variables ({label})"),
            &r,
        ));
    }
    let (phi, ts) = original_level2_map();
    let r = pushforward_residual(
        &original_level2_field(),
        &phi,
        &ts,
        &ramanujan_field(Group::Gamma0_2, Level3Variant::Linear),
    )?;
    out.push(poly_check(s, "level-2 change of variables", &r));
    let (g, c) = original_level2_relation();
    let r = invariant_relation_residual(&original_level2_field(), &g, &c)?;
    out.push(poly_check(
        s,
        "level-2 relation t3^2 = 4(t1^4 - t4) is invariant",
        &[r],
    ));
    Ok(out)
}

fn bases() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for g in [Group::Gamma0_2, Group::Gamma0_3] {
        for k in (2..=24).step_by(2) {
            let rep = verify_independence(g, k)?;
            out.push(check(
                Suite::Bases,
                format!("{g} weight {k}"),
                rep.passed(),
                format!("rank {} of dimension {}", rep.rank, rep.dimension),
            ));
        }
    }
    Ok(out)
}

/// Runs a suite. `order` is the working precision of series checks; the
/// symbolic suites ignore it.
pub fn run_suite(suite: Suite, order: Option<i64>) -> Result<Vec<CheckResult>> {
    let n = order.unwrap_or(suite.default_order());
    if n < 8 && !matches!(suite, Suite::Sl2 | Suite::Pushforward | Suite::Bases) {
        return Err(Error::DomainError(format!(
            "order must be at least 8, got {n}"
        )));
    }
    match suite {
        Suite::Systems => systems(n),
        Suite::Sl2 => sl2(),
        Suite::Identities => identities(n),
        Suite::Chazy => chazy(n),
        Suite::Serre => serre(n),
        Suite::Pushforward => pushforward(),
        Suite::Bases => bases(),
        Suite::All => {
            let mut out = systems(order.unwrap_or(DEFAULT_SYSTEM_ORDER))?;
            out.extend(sl2()?);
            out.extend(identities(n)?);
            out.extend(chazy(n)?);
            out.extend(serre(n)?);
            out.extend(pushforward()?);
            out.extend(bases()?);
            Ok(out)
        }
    }
}
