//! Polynomials in up to four variables, polynomial vector fields, and the
//! Ramanujan-type systems they describe.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::forms::Group;
use crate::qseries::{int, rat, QSeries, Rat};

pub const MAX_VARS: usize = 4;

/// Exponent vector, ordered graded-lexicographically with `t1 > t2 > t3 > t4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; MAX_VARS]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weight(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with rational coefficients in `t1..t_nvars`. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat, nvars: usize) -> Self {
        Self::term(c, [0; MAX_VARS], nvars)
    }

    /// `c · t^exps`.
    pub fn term(c: Rat, exps: [u32; MAX_VARS], nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        assert!(
            exps[nvars..].iter().all(|&e| e == 0),
            "exponent on a variable beyond nvars"
        );
        p.add_term(Monomial(exps), c);
        p
    }

    /// The variable `t_{i+1}` (0-based `i`).
    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars);
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Self::term(Rat::one(), e, nvars)
    }

    /// All variables `t1, …, t_nvars`.
    pub fn vars(nvars: usize) -> Vec<MPoly> {
        (0..nvars).map(|i| Self::var(i, nvars)).collect()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, a) in &self.terms {
            out.add_term(*m, a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::constant(Rat::one(), self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `∂p/∂t_{i+1}`.
    pub fn partial(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut d = *m;
                d.0[i] -= 1;
                out.add_term(d, c * Rat::from_integer(e.into()));
            }
        }
        out
    }

    /// `Some(w)` if every term has weight `w`; the zero polynomial is
    /// homogeneous of every weight and reports `None`.
    pub fn homogeneous_weight(&self, weights: &[u32]) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.weight(weights));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// Substitutes `t_j ↦ images[j]`. All images must share one `nvars`.
    pub fn compose(&self, images: &[MPoly]) -> Result<MPoly> {
        if images.len() != self.nvars {
            return Err(Error::SubstitutionError(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => 0,
        };
        if images.iter().any(|p| p.nvars != target) {
            return Err(Error::SubstitutionError(
                "images live in different polynomial rings".into(),
            ));
        }
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone(), target);
            for (j, &e) in m.0[..self.nvars].iter().enumerate() {
                if e > 0 {
                    t = &t * &images[j].pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Evaluates at a tuple of q-series.
    pub fn evaluate(&self, point: &[QSeries]) -> Result<QSeries> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let precision = point
            .iter()
            .map(QSeries::precision)
            .min()
            .unwrap_or(i64::MAX);
        let mut powers: Vec<Vec<QSeries>> = point
            .iter()
            .map(|s| vec![QSeries::one(s.precision())])
            .collect();
        let mut total = QSeries::zero(precision);
        for (m, c) in &self.terms {
            let mut t = QSeries::constant(c.clone(), precision);
            for (j, &e) in m.0[..self.nvars].iter().enumerate() {
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = powers[j].last().unwrap() * &point[j];
                    powers[j].push(next);
                }
                if e > 0 {
                    t = &t * &powers[j][e];
                }
            }
            total = &total + &t;
        }
        Ok(total)
    }

    fn check_ring(&self, other: &MPoly) {
        assert_eq!(self.nvars, other.nvars, "polynomials from different rings");
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &-rhs
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rat::one())
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.check_ring(rhs);
        let mut out = MPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.times(b), x * y);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let vars: Vec<String> = m.0[..self.nvars]
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| match e {
                    1 => format!("t{}", j + 1),
                    _ => format!("t{}^{e}", j + 1),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{a}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Normal form modulo `t3^2 - t2 t4` (four variables): every `t3^2` is
/// rewritten to `t2 t4` until `t3` appears at most linearly.
pub fn reduce_mod_ideal(p: &MPoly) -> MPoly {
    assert_eq!(p.nvars, 4, "the level-3 relation lives in four variables");
    let mut out = MPoly::zero(4);
    for (m, c) in &p.terms {
        let mut e = m.0;
        let k = e[2] / 2;
        e[2] -= 2 * k;
        e[1] += k;
        e[3] += k;
        out.add_term(Monomial(e), c.clone());
    }
    out
}

/// `Σ components[j] ∂/∂t_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVF {
    components: Vec<MPoly>,
}

impl PolyVF {
    pub fn new(components: Vec<MPoly>) -> Result<Self> {
        let n = components.len();
        if let Some(p) = components.iter().find(|p| p.nvars != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.nvars,
            });
        }
        Ok(Self { components })
    }

    pub fn zero(nvars: usize) -> Self {
        Self {
            components: vec![MPoly::zero(nvars); nvars],
        }
    }

    /// `-c ∂/∂t_{i+1}`-style constant field `c ∂/∂t_{i+1}`.
    pub fn constant(i: usize, c: Rat, nvars: usize) -> Self {
        let mut v = Self::zero(nvars);
        v.components[i] = MPoly::constant(c, nvars);
        v
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MPoly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MPoly::is_zero)
    }

    /// Directional derivative `V(p)`.
    pub fn apply(&self, p: &MPoly) -> Result<MPoly> {
        if p.nvars != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: p.nvars,
            });
        }
        let mut out = MPoly::zero(p.nvars);
        for (j, c) in self.components.iter().enumerate() {
            out = &out + &(c * &p.partial(j));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> PolyVF {
        PolyVF {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn sub(&self, other: &PolyVF) -> Result<PolyVF> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        Ok(PolyVF {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn add(&self, other: &PolyVF) -> Result<PolyVF> {
        self.sub(&other.scale(&-Rat::one()))
    }

    /// Componentwise [`reduce_mod_ideal`].
    pub fn reduce_mod_ideal(&self) -> PolyVF {
        PolyVF {
            components: self.components.iter().map(reduce_mod_ideal).collect(),
        }
    }
}

impl fmt::Display for PolyVF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `[V, W]`: component `j` is `V(W_j) - W(V_j)`.
pub fn lie_bracket(v: &PolyVF, w: &PolyVF) -> Result<PolyVF> {
    if v.nvars() != w.nvars() {
        return Err(Error::DimensionMismatch {
            expected: v.nvars(),
            found: w.nvars(),
        });
    }
    let mut components = Vec::with_capacity(v.nvars());
    for (vj, wj) in v.components.iter().zip(&w.components) {
        components.push(&v.apply(wj)? - &w.apply(vj)?);
    }
    Ok(PolyVF { components })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: &'static str,
    pub passed: bool,
    /// Left side minus right side (reduced in four variables).
    pub residual: PolyVF,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Report {
    pub checks: Vec<RelationCheck>,
}

impl Sl2Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks `[E,F] = H`, `[H,E] = 2E`, `[H,F] = -2F`. In four variables the
/// residuals are taken modulo `t3^2 - t2 t4`.
pub fn check_sl2_triple(e: &PolyVF, h: &PolyVF, f: &PolyVF) -> Result<Sl2Report> {
    let two = int(2);
    let cases: [(&'static str, PolyVF, PolyVF); 3] = [
        ("[E,F] = H", lie_bracket(e, f)?, h.clone()),
        ("[H,E] = 2E", lie_bracket(h, e)?, e.scale(&two)),
        ("[H,F] = -2F", lie_bracket(h, f)?, f.scale(&-two)),
    ];
    let checks = cases
        .into_iter()
        .map(|(relation, lhs, rhs)| {
            let mut residual = lhs.sub(&rhs)?;
            if residual.nvars() == 4 {
                residual = residual.reduce_mod_ideal();
            }
            Ok(RelationCheck {
                relation,
                passed: residual.is_zero(),
                residual,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Sl2Report { checks })
}

/// `timescale · V(phi_j)` for each target coordinate, as polynomials in the
/// source variables.
pub fn pushforward(v: &PolyVF, phi: &[MPoly], timescale: &Rat) -> Result<Vec<MPoly>> {
    phi.iter()
        .map(|p| {
            if p.nvars != v.nvars() {
                return Err(Error::SubstitutionError(format!(
                    "map component in {} variables, field in {}",
                    p.nvars,
                    v.nvars()
                )));
            }
            Ok(v.apply(p)?.scale(timescale))
        })
        .collect()
}

/// Per-coordinate residuals `timescale · V(phi_j) - target_j ∘ phi`.
pub fn pushforward_residual(
    v: &PolyVF,
    phi: &[MPoly],
    timescale: &Rat,
    target: &PolyVF,
) -> Result<Vec<MPoly>> {
    if phi.len() != target.nvars() {
        return Err(Error::SubstitutionError(format!(
            "{} map components for a {}-variable target",
            phi.len(),
            target.nvars()
        )));
    }
    let pushed = pushforward(v, phi, timescale)?;
    pushed
        .iter()
        .zip(target.components())
        .map(|(p, t)| Ok(p - &t.compose(phi)?))
        .collect()
}

/// `timescale · solution_j' - V_j(solution)` where `'` is `q d/dq`.
pub fn ode_residual_scaled(
    v: &PolyVF,
    solution: &[QSeries],
    timescale: &Rat,
) -> Result<Vec<QSeries>> {
    if solution.len() != v.nvars() {
        return Err(Error::DimensionMismatch {
            expected: v.nvars(),
            found: solution.len(),
        });
    }
    v.components
        .iter()
        .zip(solution)
        .map(|(c, s)| Ok(&s.derive().scale(timescale) - &c.evaluate(solution)?))
        .collect()
}

/// `solution_j' - V_j(solution)`.
pub fn ode_residual(v: &PolyVF, solution: &[QSeries]) -> Result<Vec<QSeries>> {
    ode_residual_scaled(v, solution, &Rat::one())
}

/// Per-variable weights of the polynomial generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub weights: Vec<u32>,
}

impl WeightVector {
    pub fn for_group(group: Group) -> Self {
        let weights = match group {
            Group::SL2Z => vec![2, 4, 6],
            Group::Gamma0_2 => vec![2, 2, 4],
            Group::Gamma0_3 => vec![2, 2, 4, 6],
        };
        Self { weights }
    }

    /// Euler field `Σ w_j t_j ∂/∂t_j`.
    pub fn euler_field(&self) -> PolyVF {
        let n = self.weights.len();
        PolyVF {
            components: (0..n)
                .map(|j| MPoly::var(j, n).scale(&int(self.weights[j] as i64)))
                .collect(),
        }
    }
}

/// Which printed last component of the level-3 field to use. They agree
/// modulo `t3^2 - t2 t4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Level3Variant {
    /// `t4' = t1 t4 + t2 t4`.
    #[default]
    Linear,
    /// `t4' = t1 t4 + t3^2`.
    Quadratic,
}

fn poly(nvars: usize, terms: &[(i64, i64, [u32; MAX_VARS])]) -> MPoly {
    let mut p = MPoly::zero(nvars);
    for &(n, d, e) in terms {
        p = &p + &MPoly::term(rat(n, d), e, nvars);
    }
    p
}

fn field(nvars: usize, comps: &[&[(i64, i64, [u32; MAX_VARS])]]) -> PolyVF {
    PolyVF {
        components: comps.iter().map(|c| poly(nvars, c)).collect(),
    }
}

/// The Ramanujan-type field whose solution is the group's generator tuple:
/// `(E2, E4, E6)`, `(P2, Q2, R2)` or `(P3, Q3, R3, S3)`.
pub fn ramanujan_field(group: Group, variant: Level3Variant) -> PolyVF {
    match group {
        Group::SL2Z => field(
            3,
            &[
                &[(1, 12, [2, 0, 0, 0]), (-1, 12, [0, 1, 0, 0])],
                &[(1, 3, [1, 1, 0, 0]), (-1, 3, [0, 0, 1, 0])],
                &[(1, 2, [1, 0, 1, 0]), (-1, 2, [0, 2, 0, 0])],
            ],
        ),
        Group::Gamma0_2 => field(
            3,
            &[
                &[(1, 8, [2, 0, 0, 0]), (-1, 8, [0, 2, 0, 0])],
                &[(1, 4, [1, 1, 0, 0]), (-1, 4, [0, 0, 1, 0])],
                &[(1, 2, [1, 0, 1, 0]), (-1, 2, [0, 3, 0, 0])],
            ],
        ),
        Group::Gamma0_3 => {
            let last: &[_] = match variant {
                Level3Variant::Linear => &[(1, 1, [1, 0, 0, 1]), (1, 1, [0, 1, 0, 1])],
                Level3Variant::Quadratic => &[(1, 1, [1, 0, 0, 1]), (1, 1, [0, 0, 2, 0])],
            };
            field(
                4,
                &[
                    &[(1, 6, [2, 0, 0, 0]), (-1, 6, [0, 2, 0, 0])],
                    &[
                        (1, 3, [1, 1, 0, 0]),
                        (-1, 3, [0, 2, 0, 0]),
                        (18, 1, [0, 0, 1, 0]),
                    ],
                    &[
                        (2, 3, [1, 0, 1, 0]),
                        (1, 3, [0, 1, 1, 0]),
                        (9, 1, [0, 0, 0, 1]),
                    ],
                    last,
                ],
            )
        }
    }
}

/// The `(E, H, F)` triple spanning `sl2` for the group: the Ramanujan-type
/// field, its Euler field, and the constant field `-c ∂/∂t1`.
pub fn sl2_triple(group: Group, variant: Level3Variant) -> (PolyVF, PolyVF, PolyVF) {
    let h = WeightVector::for_group(group).euler_field();
    let c = match group {
        Group::SL2Z => 12,
        Group::Gamma0_2 => 8,
        Group::Gamma0_3 => 6,
    };
    let f = PolyVF::constant(0, int(-c), h.nvars());
    (ramanujan_field(group, variant), h, f)
}

/// Three-variable level-3 system in its original coordinates, with time
/// `3 q d/dq`:
/// `t1' = -t1 t2 - 9(t1^3 - t3)`, `t2' = 81 t1 (t1^3 - t3) - t2^2`,
/// `t3' = -3 t2 t3`.
pub fn original_level3_field() -> PolyVF {
    field(
        3,
        &[
            &[
                (-1, 1, [1, 1, 0, 0]),
                (-9, 1, [3, 0, 0, 0]),
                (9, 1, [0, 0, 1, 0]),
            ],
            &[
                (81, 1, [4, 0, 0, 0]),
                (-81, 1, [1, 0, 1, 0]),
                (-1, 1, [0, 2, 0, 0]),
            ],
            &[(-3, 1, [0, 1, 1, 0])],
        ],
    )
}

/// Time factor of [`original_level3_field`]: `dot = 3 q d/dq`.
pub fn original_level3_timescale() -> Rat {
    int(3)
}

/// Map `(−2t2 − 9t1², 9t1², 3t1t3, t3²)` from original level-3 coordinates
/// to the four-variable ones, with timescale 1/3.
pub fn original_level3_map() -> (Vec<MPoly>, Rat) {
    let phi = vec![
        poly(3, &[(-2, 1, [0, 1, 0, 0]), (-9, 1, [2, 0, 0, 0])]),
        poly(3, &[(9, 1, [2, 0, 0, 0])]),
        poly(3, &[(3, 1, [1, 0, 1, 0])]),
        poly(3, &[(1, 1, [0, 0, 2, 0])]),
    ];
    (phi, rat(1, 3))
}

/// Four-variable level-2 system in original coordinates:
/// `t1' = t3 - t1 t2`, `t2' = 2t1² - ½t2²`, `t3' = -2t2t3 + 8t1³`,
/// `t4' = -4t2t4`.
pub fn original_level2_field() -> PolyVF {
    field(
        4,
        &[
            &[(1, 1, [0, 0, 1, 0]), (-1, 1, [1, 1, 0, 0])],
            &[(2, 1, [2, 0, 0, 0]), (-1, 2, [0, 2, 0, 0])],
            &[(-2, 1, [0, 1, 1, 0]), (8, 1, [3, 0, 0, 0])],
            &[(-4, 1, [0, 1, 0, 1])],
        ],
    )
}

/// Map `(20t2, 40t1, 800t3)` to the level-2 Ramanujan coordinates, with
/// timescale -5.
pub fn original_level2_map() -> (Vec<MPoly>, Rat) {
    let phi = vec![
        poly(4, &[(20, 1, [0, 1, 0, 0])]),
        poly(4, &[(40, 1, [1, 0, 0, 0])]),
        poly(4, &[(800, 1, [0, 0, 1, 0])]),
    ];
    (phi, int(-5))
}

/// Invariant relation `g = t3² − 4t1⁴ + 4t4` of [`original_level2_field`],
/// with cofactor `−4t2`: `V(g) = −4t2·g`.
pub fn original_level2_relation() -> (MPoly, MPoly) {
    let g = poly(
        4,
        &[
            (1, 1, [0, 0, 2, 0]),
            (-4, 1, [4, 0, 0, 0]),
            (4, 1, [0, 0, 0, 1]),
        ],
    );
    (g, poly(4, &[(-4, 1, [0, 1, 0, 0])]))
}

/// `V(g) - cofactor · g`; zero when `g = 0` is invariant.
pub fn invariant_relation_residual(v: &PolyVF, g: &MPoly, cofactor: &MPoly) -> Result<MPoly> {
    Ok(&v.apply(g)? - &(cofactor * g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{catalog, original_level3_solution, FormName};
    use crate::qseries::Sign;
    use proptest::prelude::*;

    fn t(i: usize, n: usize) -> MPoly {
        MPoly::var(i, n)
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial([2, 0, 0, 0]);
        let b = Monomial([1, 1, 0, 0]);
        let c = Monomial([0, 0, 0, 3]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial([0, 1, 0, 1]) > Monomial([0, 0, 2, 0]));
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&t(0, 3) * &t(0, 3)) - &t(1, 3).scale(&rat(1, 3));
        assert_eq!(p.to_string(), "t1^2 - 1/3*t2");
        assert!((&p - &p).is_zero());
        assert_eq!(p.partial(0).to_string(), "2*t1");
        assert_eq!(MPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn compose_and_evaluate() {
        let p = &t(0, 2) * &t(1, 2);
        let images = [&t(0, 1) + &MPoly::constant(int(1), 1), t(0, 1)];
        assert_eq!(p.compose(&images).unwrap().to_string(), "t1^2 + t1");
        assert!(matches!(
            p.compose(&images[..1]),
            Err(Error::SubstitutionError(_))
        ));
        let s = QSeries::from_ints(0, &[1, 1], 4);
        let v = p.evaluate(&[s.clone(), s]).unwrap();
        assert_eq!(v, QSeries::from_ints(0, &[1, 2, 1, 0], 4));
    }

    #[test]
    fn reduce_examples() {
        let n = 4;
        let gen = &(&t(2, n) * &t(2, n)) - &(&t(1, n) * &t(3, n));
        assert!(reduce_mod_ideal(&gen).is_zero());
        let p = &(&t(0, n) * &t(3, n)) + &(&t(2, n) * &t(2, n));
        let want = &(&t(0, n) * &t(3, n)) + &(&t(1, n) * &t(3, n));
        assert_eq!(reduce_mod_ideal(&p), want);
        let cube = t(2, n).pow(3);
        assert_eq!(reduce_mod_ideal(&cube), &(&t(1, n) * &t(2, n)) * &t(3, n));
    }

    #[test]
    fn level2_brackets() {
        let (e, h, f) = sl2_triple(Group::Gamma0_2, Level3Variant::Linear);
        assert_eq!(lie_bracket(&h, &f).unwrap(), f.scale(&int(-2)));
        assert_eq!(lie_bracket(&e, &f).unwrap(), h);
        assert!(lie_bracket(&e, &e).unwrap().is_zero());
    }

    #[test]
    fn all_triples_pass() {
        for g in Group::ALL {
            for var in [Level3Variant::Linear, Level3Variant::Quadratic] {
                let (e, h, f) = sl2_triple(g, var);
                assert!(
                    check_sl2_triple(&e, &h, &f).unwrap().passed(),
                    "{g} {var:?}"
                );
            }
        }
    }

    #[test]
    fn level3_euler_field_must_scale_t4() {
        // With `6 t3 ∂/∂t4` as the last component the relations break.
        let (e, _, f) = sl2_triple(Group::Gamma0_3, Level3Variant::Quadratic);
        let mut comps = WeightVector::for_group(Group::Gamma0_3)
            .euler_field()
            .components;
        comps[3] = t(2, 4).scale(&int(6));
        let h = PolyVF::new(comps).unwrap();
        let report = check_sl2_triple(&e, &h, &f).unwrap();
        assert!(!report.passed());
        assert!(!report.checks[0].passed);
    }

    #[test]
    fn euler_grading() {
        for g in Group::ALL {
            let w = WeightVector::for_group(g);
            let e = ramanujan_field(g, Level3Variant::Quadratic);
            for (j, c) in e.components().iter().enumerate() {
                assert_eq!(c.homogeneous_weight(&w.weights), Some(w.weights[j] + 2));
            }
        }
    }

    #[test]
    fn level3_variants_agree_mod_ideal() {
        let a = ramanujan_field(Group::Gamma0_3, Level3Variant::Linear);
        let b = ramanujan_field(Group::Gamma0_3, Level3Variant::Quadratic);
        assert_ne!(a, b);
        assert_eq!(a.reduce_mod_ideal(), b.reduce_mod_ideal());
    }

    #[test]
    fn generator_tuples_solve_their_systems() {
        let n = 40;
        let tuples = [
            (Group::SL2Z, vec![FormName::E2, FormName::E4, FormName::E6]),
            (
                Group::Gamma0_2,
                vec![FormName::P2, FormName::Q2, FormName::R2],
            ),
            (
                Group::Gamma0_3,
                vec![FormName::P3, FormName::Q3, FormName::R3, FormName::S3],
            ),
        ];
        for (g, names) in tuples {
            let sol: Vec<_> = names
                .iter()
                .map(|&m| catalog(m, n).unwrap().series)
                .collect();
            for var in [Level3Variant::Linear, Level3Variant::Quadratic] {
                let r = ode_residual(&ramanujan_field(g, var), &sol).unwrap();
                assert!(r.iter().all(QSeries::is_zero), "{g} {var:?}");
                assert!(r.iter().all(|s| s.precision() == n));
            }
        }
    }

    #[test]
    fn ode_residual_dimension_mismatch() {
        let v = ramanujan_field(Group::SL2Z, Level3Variant::Linear);
        assert!(matches!(
            ode_residual(&v, &[QSeries::one(3)]),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 1
            })
        ));
    }

    #[test]
    fn original_level3_solution_solves() {
        let sol = original_level3_solution(101).unwrap();
        let r = ode_residual_scaled(&original_level3_field(), &sol, &original_level3_timescale())
            .unwrap();
        assert!(r.iter().all(QSeries::is_zero));
    }

    #[test]
    fn doubled_arguments_do_not_solve_original_level3() {
        // t1, t2 read in q^2 while t3 stays in q.
        let [t1, t2, t3] = original_level3_solution(40).unwrap();
        let mixed = [
            t1.substitute(2, Sign::Plus),
            t2.substitute(2, Sign::Plus),
            t3,
        ];
        let r = ode_residual_scaled(
            &original_level3_field(),
            &mixed,
            &original_level3_timescale(),
        )
        .unwrap();
        assert!(r.iter().any(|s| !s.is_zero()));
    }

    #[test]
    fn original_level3_solution_maps_to_generators() {
        // phi(t) along the solution is (P3, Q3, R3, S3).
        let n = 30;
        let sol = original_level3_solution(n).unwrap();
        let (phi, _) = original_level3_map();
        for (p, name) in phi
            .iter()
            .zip([FormName::P3, FormName::Q3, FormName::R3, FormName::S3])
        {
            assert_eq!(
                p.evaluate(&sol).unwrap(),
                catalog(name, n).unwrap().series,
                "{name}"
            );
        }
    }

    #[test]
    fn pushforwards() {
        let (phi, ts) = original_level3_map();
        for var in [Level3Variant::Linear, Level3Variant::Quadratic] {
            let r = pushforward_residual(
                &original_level3_field(),
                &phi,
                &ts,
                &ramanujan_field(Group::Gamma0_3, var),
            )
            .unwrap();
            assert!(r.iter().all(MPoly::is_zero));
        }
        let (phi, ts) = original_level2_map();
        let r = pushforward_residual(
            &original_level2_field(),
            &phi,
            &ts,
            &ramanujan_field(Group::Gamma0_2, Level3Variant::Linear),
        )
        .unwrap();
        assert!(r.iter().all(MPoly::is_zero));
        let v = ramanujan_field(Group::SL2Z, Level3Variant::Linear);
        let id = MPoly::vars(3);
        assert_eq!(pushforward(&v, &id, &int(1)).unwrap(), v.components());
        let bad = pushforward_residual(
            &original_level2_field(),
            &phi,
            &int(5),
            &ramanujan_field(Group::Gamma0_2, Level3Variant::Linear),
        )
        .unwrap();
        assert!(!bad.iter().all(MPoly::is_zero));
    }

    #[test]
    fn level2_relation_is_invariant() {
        let (g, c) = original_level2_relation();
        assert!(
            invariant_relation_residual(&original_level2_field(), &g, &c)
                .unwrap()
                .is_zero()
        );
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = MPoly> {
        prop::collection::vec((-5i64..=5, prop::array::uniform4(0u32..=1), 0u32..=1), 0..5)
            .prop_map(move |terms| {
                let mut p = MPoly::zero(nvars);
                for (c, e, extra) in terms {
                    let mut e = e;
                    e[0] += extra;
                    p = &p + &MPoly::term(int(c), e, nvars);
                }
                p
            })
    }

    fn arb_field() -> impl Strategy<Value = PolyVF> {
        prop::collection::vec(arb_poly(4), 4).prop_map(|c| PolyVF::new(c).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bracket_antisymmetry_and_jacobi(u in arb_field(), v in arb_field(), w in arb_field()) {
            let uv = lie_bracket(&u, &v).unwrap();
            let vu = lie_bracket(&v, &u).unwrap();
            prop_assert!(uv.add(&vu).unwrap().is_zero());
            let j = lie_bracket(&u, &lie_bracket(&v, &w).unwrap()).unwrap()
                .add(&lie_bracket(&v, &lie_bracket(&w, &u).unwrap()).unwrap()).unwrap()
                .add(&lie_bracket(&w, &uv).unwrap()).unwrap();
            prop_assert!(j.is_zero());
        }

        #[test]
        fn reduction_is_idempotent_ring_map(p in arb_poly(4), q in arb_poly(4)) {
            let rp = reduce_mod_ideal(&p);
            prop_assert_eq!(reduce_mod_ideal(&rp), rp.clone());
            let lhs = reduce_mod_ideal(&(&p * &q));
            let rhs = reduce_mod_ideal(&(&rp * &reduce_mod_ideal(&q)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
