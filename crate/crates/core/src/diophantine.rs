//! Bounded exhaustive scans of the square equations that rule out most
//! parameter sets, plus the audit of the significant-prime table.
//!
//! A scan certifies nothing beyond its bounds; every result records the
//! bounds it was run with.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_prime::nt_funcs::primes;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::primitive_part;
use crate::atlas::{named_order, out_order, simple_order, ClassicalType, Family};
use crate::design::Verdict;
use crate::{Error, Result};

/// Exact perfect-square test.
pub fn is_square(m: &BigUint) -> bool {
    let r = m.sqrt();
    &r * &r == *m
}

fn square_root(m: &BigUint) -> Option<BigUint> {
    let r = m.sqrt();
    (&r * &r == *m).then_some(r)
}

/// All prime powers `≤ limit`, ascending.
pub fn prime_powers(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in primes(limit) {
        let mut q = p;
        loop {
            out.push(q);
            match q.checked_mul(p) {
                Some(n) if n <= limit => q = n,
                _ => break,
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EquationFamily {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
}

impl EquationFamily {
    pub const ALL: [EquationFamily; 8] = [
        EquationFamily::F1,
        EquationFamily::F2,
        EquationFamily::F3,
        EquationFamily::F4,
        EquationFamily::F5,
        EquationFamily::F6,
        EquationFamily::F7,
        EquationFamily::F8,
    ];

    pub fn equation(self) -> &'static str {
        match self {
            EquationFamily::F1 => "k^2 = q + 1, q = 2^f",
            EquationFamily::F2 => "z^2 = 2^f - eps, f >= 3 odd, eps = +-1",
            EquationFamily::F3 => "z^2 = q^2 + q + 1",
            EquationFamily::F4 => "z^2 = (q^n - 1)/(q - 1), n >= 4",
            EquationFamily::F5 => "z^2 = q^4 + q^3 + q^2 + q + 1",
            EquationFamily::F6 => "q^2 = z^2 + 1, z >= 1",
            EquationFamily::F7 => "z^2 = q^(n/2) - 1, n >= 4 even",
            EquationFamily::F8 => "z^2 = q^2 - q + 1",
        }
    }
}

impl FromStr for EquationFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown equation family `{s}`")))
    }
}

impl fmt::Display for EquationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest prime power `q` scanned.
    pub q_max: u64,
    /// Largest exponent `f` for the families with `q = 2^f`.
    pub f_max: u32,
    /// Largest dimension `n`.
    pub n_max: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { q_max: 10_000, f_max: 40, n_max: 20 }
    }
}

/// A value in a solution; small values serialise as JSON numbers, larger
/// ones as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Value(pub BigInt);

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.collect_str(&self.0),
        }
    }
}

impl<T: Into<BigInt>> From<T> for Value {
    fn from(v: T) -> Self {
        Value(v.into())
    }
}

pub type Assignment = BTreeMap<&'static str, Value>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub family: EquationFamily,
    pub equation: &'static str,
    pub bounds: BTreeMap<&'static str, u64>,
    pub solutions: Vec<Assignment>,
}

fn assignment<const N: usize>(pairs: [(&'static str, Value); N]) -> Assignment {
    pairs.into_iter().collect()
}

/// Scans `z² = poly(q)` over prime powers `q ≤ q_max`.
fn scan_q(qs: &[u64], poly: impl Fn(&BigUint) -> BigUint + Sync) -> Vec<Assignment> {
    qs.par_iter()
        .filter_map(|&q| {
            let z = square_root(&poly(&BigUint::from(q)))?;
            Some(assignment([("q", q.into()), ("z", z.into())]))
        })
        .collect()
}

/// Exhaustive scan of one equation family within `bounds`.
pub fn scan(family: EquationFamily, bounds: &Bounds) -> ScanResult {
    let qs = || prime_powers(bounds.q_max);
    let mut used = BTreeMap::new();
    let mut solutions = match family {
        EquationFamily::F1 => {
            used.insert("f_max", u64::from(bounds.f_max));
            (1..=bounds.f_max)
                .into_par_iter()
                .filter_map(|f| {
                    let q = BigUint::from(1u32) << f;
                    let k = square_root(&(&q + 1u32))?;
                    Some(assignment([("f", f.into()), ("k", k.into()), ("q", q.into())]))
                })
                .collect()
        }
        EquationFamily::F2 => {
            used.insert("f_max", u64::from(bounds.f_max));
            (3..=bounds.f_max)
                .into_par_iter()
                .filter(|f| f % 2 == 1)
                .flat_map_iter(|f| {
                    let q = BigInt::from(1) << f;
                    [-1i32, 1].into_iter().filter_map(move |eps| {
                        let rhs = (&q - eps).to_biguint()?;
                        let z = square_root(&rhs)?;
                        Some(assignment([("eps", eps.into()), ("f", f.into()), ("z", z.into())]))
                    })
                })
                .collect()
        }
        EquationFamily::F3 => {
            used.insert("q_max", bounds.q_max);
            scan_q(&qs(), |q| q * q + q + 1u32)
        }
        EquationFamily::F4 | EquationFamily::F7 => {
            used.insert("q_max", bounds.q_max);
            used.insert("n_max", u64::from(bounds.n_max));
            let qs = qs();
            let ns: Vec<u32> = (4..=bounds.n_max)
                .filter(|n| family == EquationFamily::F4 || n % 2 == 0)
                .collect();
            ns.par_iter()
                .flat_map_iter(|&n| {
                    qs.iter().filter_map(move |&q| {
                        let qb = BigUint::from(q);
                        let rhs = if family == EquationFamily::F4 {
                            (qb.pow(n) - 1u32) / (q - 1)
                        } else {
                            qb.pow(n / 2) - 1u32
                        };
                        let z = square_root(&rhs)?;
                        Some(assignment([("n", n.into()), ("q", q.into()), ("z", z.into())]))
                    })
                })
                .collect()
        }
        EquationFamily::F5 => {
            used.insert("q_max", bounds.q_max);
            scan_q(&qs(), |q| {
                let q2 = q * q;
                &q2 * &q2 + &q2 * q + &q2 + q + 1u32
            })
        }
        EquationFamily::F6 => {
            used.insert("q_max", bounds.q_max);
            scan_q(&qs(), |q| q * q - 1u32)
                .into_iter()
                .filter(|a| !a["z"].0.is_zero())
                .collect()
        }
        EquationFamily::F8 => {
            used.insert("q_max", bounds.q_max);
            scan_q(&qs(), |q| q * q - q + 1u32)
        }
    };
    solutions.sort();
    ScanResult { family, equation: family.equation(), bounds: used, solutions }
}

/// The solutions known to exist for each family, restricted to `bounds`.
/// A scan passes when it returns exactly this list.
pub fn known_solutions(family: EquationFamily, bounds: &Bounds) -> Vec<Assignment> {
    let q = bounds.q_max as i64;
    let f = i64::from(bounds.f_max);
    let n = i64::from(bounds.n_max);
    let all: Vec<(bool, Assignment)> = match family {
        EquationFamily::F1 => vec![(3 <= f, assignment([("f", 3.into()), ("k", 3.into()), ("q", 8.into())]))],
        EquationFamily::F2 => vec![(3 <= f, assignment([("eps", (-1).into()), ("f", 3.into()), ("z", 3.into())]))],
        EquationFamily::F4 => vec![
            (4 <= n && 7 <= q, assignment([("n", 4.into()), ("q", 7.into()), ("z", 20.into())])),
            (5 <= n && 3 <= q, assignment([("n", 5.into()), ("q", 3.into()), ("z", 11.into())])),
        ],
        EquationFamily::F5 => vec![(3 <= q, assignment([("q", 3.into()), ("z", 11.into())]))],
        _ => Vec::new(),
    };
    all.into_iter().filter(|(keep, _)| *keep).map(|(_, a)| a).collect()
}

/// All `(λ, k)` with `b = λ·k·(k + 1)`, `λ ≥ 2` and `λ | k`.
pub fn b_factorization(b: u64) -> Vec<(u64, u64)> {
    (2..=b.sqrt())
        .filter_map(|k| {
            let (lambda, r) = b.div_rem(&(k * (k + 1)));
            (r == 0 && lambda >= 2 && k % lambda == 0).then_some((lambda, k))
        })
        .collect()
}

/// One row of the table of admissible pairs `(X, Y)`.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub family: Family,
    pub n: u32,
    /// As printed; `q₀` for unitary groups.
    pub q: u64,
    pub e: u32,
    pub out: u64,
    pub phi: u64,
    pub y: &'static [&'static str],
    pub s: Option<u64>,
}

const fn row(
    family: Family,
    (n, q, e): (u32, u64, u32),
    out: u64,
    phi: u64,
    y: &'static [&'static str],
    s: Option<u64>,
) -> TableRow {
    TableRow { family, n, q, e, out, phi, y, s }
}

/// The fifteen rows, transcribed as printed.
pub const TABLE: [TableRow; 15] = [
    row(Family::Psl, (5, 3, 5), 2, 121, &["M11"], Some(13)),
    row(Family::Psl, (4, 2, 4), 2, 5, &["A7"], None),
    row(Family::Psl, (4, 7, 4), 2, 25, &["PSU4(2)"], Some(19)),
    row(Family::Psp, (12, 2, 12), 1, 13, &["S14"], Some(31)),
    row(Family::Psp, (6, 5, 6), 2, 7, &["J2"], Some(31)),
    row(Family::Psp, (4, 7, 4), 2, 25, &["A7"], None),
    row(Family::Psu, (4, 3, 3), 8, 5, &["A7", "PSL3(4)"], None),
    row(Family::OmegaMinus, (18, 2, 12), 2, 19, &["A20"], Some(257)),
    row(Family::OmegaMinus, (12, 2, 12), 2, 13, &["A13"], Some(31)),
    row(Family::OmegaMinus, (10, 2, 10), 2, 11, &["A12"], Some(17)),
    row(Family::OmegaOdd, (7, 3, 6), 2, 7, &["PSp6(2)", "S9"], Some(13)),
    row(Family::OmegaOdd, (7, 5, 6), 2, 7, &["PSp6(2)"], Some(31)),
    row(Family::OmegaPlus, (14, 2, 12), 2, 13, &["A16"], Some(127)),
    row(Family::OmegaPlus, (8, 3, 6), 24, 7, &["POmega8+(2)"], Some(13)),
    row(Family::OmegaPlus, (8, 5, 6), 24, 7, &["POmega8+(2)"], Some(31)),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub x: String,
    pub e: u32,
    pub order: String,
    pub stated_out: u64,
    pub computed_out: u64,
    /// Informational; not part of the verdict.
    pub out_matches: bool,
    pub stated_phi: u64,
    /// `Φ*_{ef}(p)` with `e` from the row and `q = p^f` the field size.
    pub computed_phi: String,
    pub y: Vec<&'static str>,
    pub s: Option<u64>,
    pub checks: Vec<RowCheck>,
    pub verdict: Verdict,
}

fn divides(d: u64, m: &BigUint) -> bool {
    (m % d).is_zero()
}

pub fn audit_row(r: &TableRow) -> Result<RowReport> {
    let t = ClassicalType::new(r.family, r.n, r.q)?;
    let order = simple_order(&t)?;
    let computed_out = out_order(&t)?;
    let phi = primitive_part(t.p(), r.e * t.field_f())?.value;
    let mut checks = Vec::new();
    match r.s {
        Some(s) => {
            let y_orders = r.y.iter().map(|y| named_order(y)).collect::<Result<Vec<_>>>()?;
            checks.push(RowCheck { name: "s | |X|", passed: divides(s, &order) });
            checks.push(RowCheck { name: "s^2 !| |X|", passed: !divides(s * s, &order) });
            checks.push(RowCheck {
                name: "s !| |Y|",
                passed: y_orders.iter().all(|o| !divides(s, o)),
            });
            checks.push(RowCheck { name: "s !| phi", passed: !divides(s, &phi) });
        }
        None => checks.push(RowCheck { name: "phi", passed: phi == BigUint::from(r.phi) }),
    }
    let verdict = if checks.iter().all(|c| c.passed) { Verdict::Pass } else { Verdict::Fail };
    Ok(RowReport {
        x: t.to_string(),
        e: r.e,
        order: order.to_string(),
        stated_out: r.out,
        computed_out,
        out_matches: computed_out == r.out,
        stated_phi: r.phi,
        computed_phi: phi.to_string(),
        y: r.y.to_vec(),
        s: r.s,
        checks,
        verdict,
    })
}

/// Audits every row of [`TABLE`].
pub fn signprime_audit() -> Result<Vec<RowReport>> {
    TABLE.iter().map(audit_row).collect()
}
