//! Orders of the finite simple classical groups, their outer automorphism
//! groups, and a small table of named groups.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::arith::prime_power;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    #[serde(rename = "PSL")]
    Psl,
    #[serde(rename = "PSp")]
    Psp,
    /// Parameterised by `(n, q₀)` with natural module over `GF(q₀²)`.
    #[serde(rename = "PSU")]
    Psu,
    /// `Ω_n(q)`, `n` odd, `q` odd.
    #[serde(rename = "POmega")]
    OmegaOdd,
    #[serde(rename = "POmega+")]
    OmegaPlus,
    #[serde(rename = "POmega-")]
    OmegaMinus,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "psl" | "l" => Family::Psl,
            "psp" | "s" => Family::Psp,
            "psu" | "u" => Family::Psu,
            "pomega" | "omega" | "o" => Family::OmegaOdd,
            "pomega+" | "omega+" | "o+" => Family::OmegaPlus,
            "pomega-" | "omega-" | "o-" => Family::OmegaMinus,
            _ => return Err(Error::InvalidParameters(format!("unknown family `{s}`"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Psl => "PSL",
            Family::Psp => "PSp",
            Family::Psu => "PSU",
            Family::OmegaOdd => "POmega",
            Family::OmegaPlus => "POmega+",
            Family::OmegaMinus => "POmega-",
        };
        f.write_str(s)
    }
}

/// A classical group `X(n, q)`; for unitary groups `q` is `q₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClassicalType {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    #[serde(skip)]
    p: u64,
    #[serde(skip)]
    f: u32,
}

impl ClassicalType {
    pub fn new(family: Family, n: u32, q: u64) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidParameters(format!("{family}({n},{q}): {m}")));
        let Some((p, f)) = prime_power(q) else {
            return bad("q is not a prime power");
        };
        match family {
            Family::Psl | Family::Psu if n < 2 => return bad("n ≥ 2 required"),
            Family::Psp if n < 2 || n % 2 != 0 => return bad("n must be even and ≥ 2"),
            Family::OmegaOdd if n < 3 || n % 2 == 0 => return bad("n must be odd and ≥ 3"),
            Family::OmegaOdd if p == 2 => return bad("q must be odd"),
            Family::OmegaPlus | Family::OmegaMinus if n < 4 || n % 2 != 0 => {
                return bad("n must be even and ≥ 4")
            }
            _ => {}
        }
        Ok(Self { family, n, q, p, f })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `f` with `q = p^f` for the stored `q` (so `q₀` for unitary groups).
    pub fn f(&self) -> u32 {
        self.f
    }

    /// Size of the field of definition: `q₀²` for unitary groups, else `q`.
    pub fn field_size(&self) -> u64 {
        match self.family {
            Family::Psu => self.q * self.q,
            _ => self.q,
        }
    }

    /// `f` for the field of definition.
    pub fn field_f(&self) -> u32 {
        match self.family {
            Family::Psu => 2 * self.f,
            _ => self.f,
        }
    }

    /// Dimension bounds assumed once `PSL₂(q)` and its isomorphic copies
    /// are excluded.
    pub fn admissible(&self) -> bool {
        match self.family {
            Family::Psl => self.n >= 3,
            Family::Psu => self.n >= 3 && (self.n, self.q) != (3, 2),
            Family::Psp => self.n >= 4,
            Family::OmegaOdd => self.n >= 5,
            Family::OmegaPlus | Family::OmegaMinus => self.n >= 6,
        }
    }

    /// Exponent `e` such that `Φ*_{ef}(p)` divides `|X|`: `n` for linear,
    /// symplectic, minus-type and odd-dimensional unitary groups, `n − 1`
    /// for odd orthogonal and even-dimensional unitary groups, `n − 2` for
    /// plus-type groups.
    pub fn ppd_exponent(&self) -> u32 {
        match self.family {
            Family::Psl | Family::Psp | Family::OmegaMinus => self.n,
            Family::Psu if self.n % 2 == 1 => self.n,
            Family::Psu | Family::OmegaOdd => self.n - 1,
            Family::OmegaPlus => self.n - 2,
        }
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}({})", self.family, self.n, self.q)
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn gcd_big(a: &BigUint, b: u64) -> BigUint {
    a.gcd(&big(b))
}

/// `∏_{i ∈ range} (q^{step·i} − 1)`.
fn prod_minus_one(q: &BigUint, range: std::ops::RangeInclusive<u32>, step: u32) -> BigUint {
    range.map(|i| q.pow(step * i) - 1u32).product()
}

/// Exact order of the simple group.
pub fn simple_order(t: &ClassicalType) -> Result<BigUint> {
    let q = big(t.q);
    let n = t.n;
    let ord = match t.family {
        Family::Psl => {
            let num = q.pow(n * (n - 1) / 2) * prod_minus_one(&q, 2..=n, 1);
            let d = (t.q - 1).gcd(&u64::from(n));
            num / d
        }
        Family::Psp => {
            let m = n / 2;
            let num = q.pow(m * m) * prod_minus_one(&q, 1..=m, 2);
            num / (t.q - 1).gcd(&2)
        }
        Family::Psu => {
            let mut num = q.pow(n * (n - 1) / 2);
            for i in 2..=n {
                let qi = q.pow(i);
                num *= if i % 2 == 0 { qi - 1u32 } else { qi + 1u32 };
            }
            num / (t.q + 1).gcd(&u64::from(n))
        }
        Family::OmegaOdd => {
            let m = (n - 1) / 2;
            let num = q.pow(m * m) * prod_minus_one(&q, 1..=m, 2);
            num / (t.q - 1).gcd(&2)
        }
        Family::OmegaPlus | Family::OmegaMinus => {
            let m = n / 2;
            let qm = q.pow(m);
            let top = if t.family == Family::OmegaPlus { &qm - 1u32 } else { &qm + 1u32 };
            let d = gcd_big(&top, 4);
            q.pow(m * (m - 1)) * &top * prod_minus_one(&q, 1..=(m - 1), 2) / d
        }
    };
    Ok(ord)
}

/// `|Out(X)|`.
pub fn out_order(t: &ClassicalType) -> Result<u64> {
    let f = u64::from(t.f);
    let q = t.q;
    let n = u64::from(t.n);
    let g2 = (q - 1).gcd(&2);
    Ok(match t.family {
        Family::Psl if t.n == 2 => g2 * f,
        Family::Psl => 2 * n.gcd(&(q - 1)) * f,
        Family::Psp if t.n == 4 && t.p == 2 => 2 * f,
        Family::Psp => g2 * f,
        Family::Psu if t.n == 2 => g2 * f,
        Family::Psu => n.gcd(&(q + 1)) * 2 * f,
        Family::OmegaOdd => g2 * f,
        Family::OmegaPlus => {
            let d = gcd_big(&(big(q).pow(t.n / 2) - 1u32), 4);
            let d = u64::try_from(d).expect("small");
            if t.n == 8 {
                6 * d * f
            } else {
                2 * d * f
            }
        }
        Family::OmegaMinus => {
            let d = gcd_big(&(big(q).pow(t.n / 2) + 1u32), 4);
            2 * u64::try_from(d).expect("small") * f
        }
    })
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(big).product::<BigUint>().max(BigUint::one())
}

/// Orders of the named groups appearing in the significant-prime table,
/// plus the patterns `A<ℓ>` and `S<ℓ>`.
pub fn named_order(name: &str) -> Result<BigUint> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let table: &[(&str, u64)] = &[
        ("M11", 7920),
        ("J2", 604800),
        ("Sz(8)", 29120),
        ("Sz8", 29120),
        ("PSL3(4)", 20160),
        ("PSU4(2)", 25920),
        ("PSp6(2)", 1451520),
        ("POmega8+(2)", 174182400),
        ("G2(3)", 4245696),
        ("PSL2(13)", 1092),
        ("PSL2(19)", 3420),
    ];
    if let Some((_, o)) = table.iter().find(|(n, _)| *n == key) {
        return Ok(big(*o));
    }
    let unknown = || Error::UnknownGroup(name.to_string());
    let (head, tail) = key.split_at(key.chars().next().ok_or_else(unknown)?.len_utf8());
    let l: u64 = tail.parse().map_err(|_| unknown())?;
    match head {
        "A" if l >= 1 => Ok((factorial(l) / 2u32).max(BigUint::one())),
        "S" if l >= 1 => Ok(factorial(l)),
        _ => Err(unknown()),
    }
}
