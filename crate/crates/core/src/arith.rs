//! Primitive parts of `q^e − 1`, Zsigmondy primes, `w`-parts and the
//! order inequalities used to bound point stabilisers.
//!
//! Everything is exact; there is no floating point in this module.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_prime::nt_funcs::{factorize, factorize64, is_prime};
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::atlas::Family;
use crate::design::Verdict;
use crate::{Error, Result};

fn as_string<S: Serializer, T: std::fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// A prime together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimePower {
    #[serde(serialize_with = "as_string")]
    pub prime: BigUint,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitivePartResult {
    pub q: u64,
    pub e: u32,
    #[serde(serialize_with = "as_string")]
    pub value: BigUint,
    pub witness: Vec<PrimePower>,
}

/// `(p, f)` with `q = p^f`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let fac = factorize64(q);
    match fac.len() {
        1 => fac.into_iter().next().map(|(p, f)| (p, f as u32)),
        _ => None,
    }
}

/// Largest divisor of `q^e − 1` coprime to every `q^i − 1` with `i < e`.
///
/// Computed by stripping: each `gcd(v, q^i − 1)` is divided out of `v`
/// until the two are coprime.
pub fn primitive_part(q: u64, e: u32) -> Result<PrimitivePartResult> {
    if q < 2 || e < 1 {
        return Err(Error::InvalidParameters(format!("primitive part needs q ≥ 2, e ≥ 1 (got {q}, {e})")));
    }
    let qb = BigUint::from(q);
    let mut value = qb.pow(e) - 1u32;
    for i in 1..e {
        let qi = qb.pow(i) - 1u32;
        loop {
            let g = value.gcd(&qi);
            if g.is_one() {
                break;
            }
            value /= g;
        }
    }
    let witness = if value.is_one() {
        Vec::new()
    } else {
        factorize(value.clone())
            .into_iter()
            .map(|(prime, multiplicity)| PrimePower { prime, multiplicity })
            .collect()
    };
    Ok(PrimitivePartResult { q, e, value, witness })
}

/// `Φ*_{ef}(p)` for `q = p^f`.
pub fn primitive_part_ef(q: u64, e: u32) -> Result<PrimitivePartResult> {
    let (p, f) = prime_power(q)
        .ok_or_else(|| Error::InvalidParameters(format!("{q} is not a prime power")))?;
    primitive_part(p, e * f)
}

/// Primes dividing `p^m − 1` but no `p^i − 1` with `i < m`.
pub fn primitive_prime_divisors(p: u64, m: u32) -> Result<BTreeSet<BigUint>> {
    if !is_prime(&BigUint::from(p), None).probably() {
        return Err(Error::InvalidParameters(format!("{p} is not prime")));
    }
    if m < 2 {
        return Err(Error::InvalidParameters(format!("m must be ≥ 2 (got {m})")));
    }
    Ok(primitive_part(p, m)?.witness.into_iter().map(|w| w.prime).collect())
}

/// `(m_w, m_{w'})`: the largest power of `w` dividing `m` and the cofactor.
pub fn w_part(m: &BigUint, w: u64) -> (BigUint, BigUint) {
    assert!(!m.is_zero() && w >= 2, "w_part needs m ≥ 1 and w ≥ 2");
    let w = BigUint::from(w);
    let mut rest = m.clone();
    let mut part = BigUint::one();
    loop {
        let (d, r) = rest.div_rem(&w);
        if !r.is_zero() {
            break;
        }
        rest = d;
        part *= &w;
    }
    (part, rest)
}

/// `(k + 1) / gcd(k + 1, out)`, which divides every non-trivial suborbit
/// length of the socle.
pub fn orbit_divisor(k: u64, out: u64) -> u64 {
    (k + 1) / (k + 1).gcd(&out)
}

/// `|X| < |Out(X)|² · |X_x| · (|X_x|_{p'})²`.
pub fn sing_inequality(order_x: &BigUint, out_x: &BigUint, order_xx: &BigUint, p: u64) -> bool {
    let (_, xx_pprime) = w_part(order_xx, p);
    let rhs = out_x * out_x * order_xx * &xx_pprime * &xx_pprime;
    *order_x < rhs
}

/// `|X| < |X_x|³`.
pub fn is_large(order_x: &BigUint, order_xx: &BigUint) -> bool {
    *order_x < order_xx.pow(3u32)
}

/// The corollary of the inequality above: when `|Out(X)| ≤ |X_x|_p` the
/// stabiliser must be large.  Returns `HypothesisUnmet` when the
/// `|Out(X)|` hypothesis or the inequality itself does not hold.
pub fn sing_largeness(order_x: &BigUint, out_x: &BigUint, order_xx: &BigUint, p: u64) -> Verdict {
    let (xx_p, _) = w_part(order_xx, p);
    if *out_x > xx_p || !sing_inequality(order_x, out_x, order_xx, p) {
        return Verdict::HypothesisUnmet;
    }
    if is_large(order_x, order_xx) {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Base prime of a prime power (`1` maps to `None`).
fn base_prime(x: &BigUint) -> Option<BigUint> {
    if x.is_one() {
        return None;
    }
    let fac = factorize(x.clone());
    if fac.len() == 1 {
        fac.into_keys().next()
    } else {
        Some(BigUint::zero())
    }
}

/// `|X|_p ≤ |Out(X)|_p³ · |X_B|_p³`.  Each argument must be a power of one
/// common prime (`1` is accepted as `p⁰`).
pub fn utakmica_check(order_x_p: &BigUint, out_x_p: &BigUint, order_xb_p: &BigUint) -> Result<bool> {
    let mut base: Option<BigUint> = None;
    for x in [order_x_p, out_x_p, order_xb_p] {
        if x.is_zero() {
            return Err(Error::MixedPrimes("0 is not a prime power".into()));
        }
        match (base_prime(x), &base) {
            (None, _) => {}
            (Some(b), _) if b.is_zero() => {
                return Err(Error::MixedPrimes(format!("{x} is not a prime power")))
            }
            (Some(b), None) => base = Some(b),
            (Some(b), Some(c)) if &b != c => {
                return Err(Error::MixedPrimes(format!("{b} and {c}")))
            }
            _ => {}
        }
    }
    let rhs = (out_x_p * order_xb_p).pow(3u32);
    Ok(*order_x_p <= rhs)
}

/// Smallest power of `p` that `|X_B|_p` can be for the inequality above to
/// hold.
pub fn utakmica_min_xb_p(order_x_p: &BigUint, out_x_p: &BigUint, p: u64) -> BigUint {
    let p = BigUint::from(p);
    let mut x = BigUint::one();
    while (out_x_p * &x).pow(3u32) < *order_x_p {
        x *= &p;
    }
    x
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KraljBound {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    /// The exponent `a/b` in `|X_B|_p ≥ q^{a/b}`.
    #[serde(serialize_with = "as_string")]
    pub exponent: Ratio<i64>,
    /// `max(p, ⌈q^{a/b}⌉)`.
    #[serde(serialize_with = "as_string")]
    pub threshold: BigUint,
}

/// `⌈q^{a/b}⌉` for `a/b ≥ 0`.
fn ceil_rational_power(q: &BigUint, exp: &Ratio<i64>) -> BigUint {
    let a = exp.numer().to_u32().expect("non-negative exponent");
    let b = exp.denom().to_u32().expect("positive denominator");
    let target = q.pow(a);
    let root = target.nth_root(b);
    if root.pow(b) == target {
        root
    } else {
        root + 1u32
    }
}

/// Lower bound for `|X_B|_p` in each classical family.  For unitary groups
/// `q` is `q₀` and the bound is stated in the field size `q₀²`.
pub fn kralj_bound(family: Family, n: u32, q: u64) -> Result<KraljBound> {
    let t = crate::atlas::ClassicalType::new(family, n, q)?;
    if !t.admissible() {
        return Err(Error::InvalidParameters(format!("{t} is outside the admissible range")));
    }
    let n = i64::from(n);
    let exponent = match family {
        Family::Psl => Ratio::new((n + 2) * (n - 3), 6),
        Family::Psp => Ratio::new(n * n - 12, 12),
        Family::Psu => Ratio::new((n + 2) * (n - 3), 12),
        Family::OmegaOdd => Ratio::new((n - 1) * (n - 1) - 12, 12),
        Family::OmegaPlus | Family::OmegaMinus => Ratio::new(n * (n - 2) - 12, 12),
    };
    let p = BigUint::from(t.p());
    let field = BigUint::from(t.field_size());
    let power = if exponent <= Ratio::from_integer(0) {
        BigUint::one()
    } else {
        ceil_rational_power(&field, &exponent)
    };
    Ok(KraljBound { family, n: t.n, q, exponent, threshold: power.max(p) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn quoted_primitive_parts() {
        for (q, e, v) in [(2, 6, 1), (7, 4, 25), (3, 5, 121), (2, 8, 17), (2, 12, 13)] {
            assert_eq!(primitive_part(q, e).unwrap().value, b(v), "({q},{e})");
        }
        assert!(primitive_part(2, 6).unwrap().witness.is_empty());
        let w = primitive_part(7, 4).unwrap().witness;
        assert_eq!(w, vec![PrimePower { prime: b(5), multiplicity: 2 }]);
    }

    /// Definition check against a brute-force search over divisors.
    #[test]
    fn primitive_part_is_largest_coprime_divisor() {
        for q in 2u64..=7 {
            for e in 1u32..=8 {
                let n = q.pow(e) - 1;
                let best = (1..=n)
                    .filter(|d| n % d == 0)
                    .filter(|d| (1..e).all(|i| d.gcd(&(q.pow(i) - 1)) == 1))
                    .max()
                    .unwrap();
                assert_eq!(primitive_part(q, e).unwrap().value, b(best), "({q},{e})");
            }
        }
    }

    #[test]
    fn zsigmondy_sweep() {
        let mut exceptions = Vec::new();
        for q in 2u64..=16 {
            for e in 3u32..=12 {
                if primitive_part(q, e).unwrap().value.is_one() {
                    exceptions.push((q, e));
                }
            }
        }
        assert_eq!(exceptions, vec![(2, 6)]);
    }

    #[test]
    fn primitive_primes_congruence() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for m in 2u32..=12 {
                for u in primitive_prime_divisors(p, m).unwrap() {
                    assert_eq!(&u % m, BigUint::one(), "p={p} m={m} u={u}");
                }
            }
        }
    }

    #[test]
    fn primitive_prime_examples() {
        assert_eq!(primitive_prime_divisors(3, 5).unwrap(), [b(11)].into());
        assert!(primitive_prime_divisors(2, 6).unwrap().is_empty());
        assert_eq!(primitive_prime_divisors(2, 4).unwrap(), [b(5)].into());
        assert!(primitive_prime_divisors(4, 3).is_err());
    }

    #[test]
    fn ef_matches_direct() {
        assert_eq!(primitive_part_ef(9, 3).unwrap().value, primitive_part(3, 6).unwrap().value);
        assert_eq!(primitive_part_ef(8, 1).unwrap().value, b(7));
        assert!(primitive_part_ef(6, 2).is_err());
    }

    #[test]
    fn w_parts() {
        assert_eq!(w_part(&b(5616), 3), (b(27), b(208)));
        assert_eq!(w_part(&b(7), 2), (b(1), b(7)));
        assert_eq!(w_part(&b(1451520), 2), (b(512), b(2835)));
    }

    #[test]
    fn orbit_divisors() {
        assert_eq!(orbit_divisor(12, 2), 13);
        assert_eq!(39 % orbit_divisor(12, 2), 0);
        assert_eq!(orbit_divisor(6, 3), 7);
        assert_eq!(orbit_divisor(3, 4), 1);
    }

    #[test]
    fn sing_examples() {
        assert!(sing_inequality(&b(5616), &b(2), &b(39), 3));
        assert!(!sing_inequality(&b(1_000_000), &b(1), &b(10), 2));
        // |Out| = 2 ≤ |X_x|_3 = 3, so the corollary applies
        assert_eq!(sing_largeness(&b(5616), &b(2), &b(39), 3), Verdict::Pass);
        assert_eq!(sing_largeness(&b(5616), &b(4), &b(39), 3), Verdict::HypothesisUnmet);
    }

    #[test]
    fn utakmica_examples() {
        assert!(utakmica_check(&b(27), &b(1), &b(3)).unwrap());
        assert!(!utakmica_check(&b(4096), &b(2), &b(2)).unwrap());
        assert_eq!(utakmica_min_xb_p(&b(512), &b(1), 2), b(8));
        assert!(utakmica_check(&b(512), &b(1), &b(8)).unwrap());
        assert!(!utakmica_check(&b(512), &b(1), &b(4)).unwrap());
        assert!(matches!(utakmica_check(&b(8), &b(3), &b(2)), Err(Error::MixedPrimes(_))));
        assert!(utakmica_check(&b(12), &b(1), &b(2)).is_err());
    }

    #[test]
    fn kralj_examples() {
        let k = kralj_bound(Family::Psl, 6, 2).unwrap();
        assert_eq!(k.exponent, Ratio::from_integer(4));
        assert_eq!(k.threshold, b(16));
        let k = kralj_bound(Family::Psp, 6, 2).unwrap();
        assert_eq!(k.exponent, Ratio::from_integer(2));
        assert_eq!(k.threshold, b(4));
        for q in [3u64, 4, 5, 8] {
            let k = kralj_bound(Family::Psl, 3, q).unwrap();
            assert_eq!(k.exponent, Ratio::from_integer(0));
            assert_eq!(k.threshold, b(prime_power(q).unwrap().0));
        }
        let k = kralj_bound(Family::Psl, 4, 2).unwrap();
        assert_eq!(k.exponent, Ratio::new(1, 1));
        let k = kralj_bound(Family::Psp, 4, 2).unwrap();
        assert_eq!(k.exponent, Ratio::new(1, 3));
        assert_eq!(k.threshold, b(2));
        let k = kralj_bound(Family::Psu, 4, 2).unwrap();
        assert_eq!(k.exponent, Ratio::new(1, 2));
        assert_eq!(k.threshold, b(2));
        assert!(kralj_bound(Family::Psl, 2, 4).is_err());
        assert!(kralj_bound(Family::Psu, 3, 2).is_err());
    }

    #[test]
    fn ceil_power() {
        assert_eq!(ceil_rational_power(&b(2), &Ratio::new(7, 6)), b(3));
        assert_eq!(ceil_rational_power(&b(8), &Ratio::new(2, 3)), b(4));
        assert_eq!(ceil_rational_power(&b(9), &Ratio::new(1, 2)), b(3));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
