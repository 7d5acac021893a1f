//! Dimensions of `M_k(Γ0(p))`, the Sturm bound, equality certificates and
//! monomial bases of the graded rings.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::{catalog, Form, FormKind, FormName, Group};
use crate::qseries::QSeries;
use crate::symalg::{MPoly, MAX_VARS};

/// Invariants of the modular curve `X0(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct X0pInvariants {
    pub p: u64,
    pub index: u64,
    pub eps2: u64,
    pub eps3: u64,
    pub genus: u64,
    pub cusps: u64,
    pub widths: (u64, u64),
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn x0p_invariants(p: u64) -> Result<X0pInvariants> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let eps2 = match p {
        2 => 1,
        _ if p % 4 == 1 => 2,
        _ => 0,
    };
    let eps3 = match p {
        3 => 1,
        _ if p % 3 == 1 => 2,
        _ => 0,
    };
    let genus = if (p + 1) % 12 == 2 {
        (p + 1) / 12 - 1
    } else {
        (p + 1) / 12
    };
    Ok(X0pInvariants {
        p,
        index: p + 1,
        eps2,
        eps3,
        genus,
        cusps: 2,
        widths: (1, p),
    })
}

fn check_weight(k: u64) -> Result<()> {
    if k % 2 == 1 {
        return Err(Error::DomainError(format!("odd weight {k}")));
    }
    Ok(())
}

/// `dim M_k(Γ0(p)) = (k-1)(g-1) + ⌊k/4⌋ε2 + ⌊k/3⌋ε3 + k` for even `k >= 2`;
/// constants give 1 at `k = 0`.
pub fn dim_modular(p: u64, k: u64) -> Result<u64> {
    let inv = x0p_invariants(p)?;
    check_weight(k)?;
    if k == 0 {
        return Ok(1);
    }
    let (k, g) = (k as i64, inv.genus as i64);
    let d = (k - 1) * (g - 1) + (k / 4) * inv.eps2 as i64 + (k / 3) * inv.eps3 as i64 + k;
    Ok(d as u64)
}

/// `dim S_k(Γ0(p))`: the genus at `k = 2`, `dim M_k - 2` above.
pub fn dim_cusp(p: u64, k: u64) -> Result<u64> {
    let inv = x0p_invariants(p)?;
    check_weight(k)?;
    Ok(match k {
        0 => 0,
        2 => inv.genus,
        _ => dim_modular(p, k)? - 2,
    })
}

/// `dim M_k` for one of the three groups (`SL2(Z)` included).
pub fn dim_modular_group(group: Group, k: u64) -> Result<u64> {
    match group {
        Group::SL2Z => {
            check_weight(k)?;
            Ok(match k {
                2 => 0,
                _ if k % 12 == 2 => k / 12,
                _ => k / 12 + 1,
            })
        }
        g => dim_modular(g.level() as u64, k),
    }
}

/// `⌊d k / 12⌋` with `d` the index of the group.
pub fn sturm_bound(group: Group, k: u64) -> u64 {
    group.index() as u64 * k / 12
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    Equal,
    /// First exponent where the coefficients differ.
    Unequal(i64),
    InsufficientPrecision,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Equal => f.write_str("equal"),
            Certificate::Unequal(n) => write!(f, "unequal at q^{n}"),
            Certificate::InsufficientPrecision => f.write_str("insufficient precision"),
        }
    }
}

/// Decides `f = g` for two modular forms of the same weight from their
/// coefficients through the Sturm bound.
pub fn certify_equal(f: &Form, g: &Form) -> Result<Certificate> {
    for x in [f, g] {
        if !matches!(x.descriptor.kind, FormKind::Modular | FormKind::Cusp) {
            return Err(Error::DescriptorMismatch(format!(
                "{:?} input cannot be certified",
                x.descriptor.kind
            )));
        }
    }
    if f.weight() != g.weight() {
        return Err(Error::DescriptorMismatch(format!(
            "weights {} and {} differ",
            f.weight(),
            g.weight()
        )));
    }
    let group = f.group().meet(g.group()).ok_or_else(|| {
        Error::DescriptorMismatch(format!("groups {} and {} differ", f.group(), g.group()))
    })?;
    let bound = sturm_bound(group, f.weight() as u64) as i64;
    if let Some(n) = (0..=bound).find(|&n| {
        n < f.series.precision()
            && n < g.series.precision()
            && f.series.coeff(n) != g.series.coeff(n)
    }) {
        return Ok(Certificate::Unequal(n));
    }
    if f.series.precision() <= bound || g.series.precision() <= bound {
        return Ok(Certificate::InsufficientPrecision);
    }
    Ok(Certificate::Equal)
}

/// Exponent tuples over `(t1, …)` of a monomial basis of `M_k`, in the
/// modular generators (`t1` never appears):
/// `SL2(Z)`: `E4^a E6^b`; `Γ0(2)`: `Q2^r R2^s`; `Γ0(3)`: one
/// `Q3^a R3^b S3^c` per class `j = b + 2c`, with the smallest `c`.
pub fn monomial_basis(group: Group, k: u64) -> Vec<[u32; MAX_VARS]> {
    if k % 2 == 1 {
        return Vec::new();
    }
    let k = k as u32;
    let mut out = Vec::new();
    match group {
        Group::SL2Z => {
            for b in 0..=k / 6 {
                let rest = k - 6 * b;
                if rest.is_multiple_of(4) {
                    out.push([0, rest / 4, b, 0]);
                }
            }
        }
        Group::Gamma0_2 => {
            for s in 0..=k / 4 {
                out.push([0, (k - 4 * s) / 2, s, 0]);
            }
        }
        Group::Gamma0_3 => {
            let half = k / 2;
            for j in 0..=k / 3 {
                let c = (2 * j).saturating_sub(half);
                let b = j - 2 * c;
                let a = (k + 2 * c - 4 * j) / 2;
                out.push([0, a, b, c]);
            }
        }
    }
    out
}

/// Generator names `(t1, …)` of the group's ring.
pub fn generators(group: Group) -> &'static [FormName] {
    match group {
        Group::SL2Z => &[FormName::E2, FormName::E4, FormName::E6],
        Group::Gamma0_2 => &[FormName::P2, FormName::Q2, FormName::R2],
        Group::Gamma0_3 => &[FormName::P3, FormName::Q3, FormName::R3, FormName::S3],
    }
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&v % &prev).is_zero(), "Bareiss step must divide exactly");
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub group: Group,
    pub weight: u64,
    pub basis: Vec<[u32; MAX_VARS]>,
    /// Coefficients `a(0..=sturm_bound)` of each basis monomial.
    pub matrix: Vec<Vec<BigInt>>,
    pub rank: usize,
    pub dimension: u64,
}

impl IndependenceReport {
    pub fn passed(&self) -> bool {
        self.rank as u64 == self.dimension && self.basis.len() as u64 == self.dimension
    }
}

/// Evaluates the monomial basis on the generators and checks that the head
/// coefficients through the Sturm bound have full rank.
pub fn verify_independence(group: Group, k: u64) -> Result<IndependenceReport> {
    check_weight(k)?;
    let bound = sturm_bound(group, k) as i64;
    let precision = bound + 1;
    let point: Vec<QSeries> = generators(group)
        .iter()
        .map(|&n| catalog(n, precision).map(|f| f.series))
        .collect::<Result<_>>()?;
    let basis = monomial_basis(group, k);
    let nvars = point.len();
    let matrix = basis
        .iter()
        .map(|&e| {
            let s = MPoly::term(crate::qseries::int(1), e, nvars).evaluate(&point)?;
            Ok((0..precision).map(|n| s.coeff(n).to_integer()).collect())
        })
        .collect::<Result<Vec<Vec<BigInt>>>>()?;
    let rank = integer_rank(matrix.clone());
    Ok(IndependenceReport {
        group,
        weight: k,
        basis,
        matrix,
        rank,
        dimension: dim_modular_group(group, k)?,
    })
}
