//! Prime-field arithmetic and projective 3×3 matrices.
//!
//! Everything the `PSL(3,3)` construction needs lives here: field elements,
//! matrices modulo scalars, the polarity of the conic `XZ − Y² = 0` and the
//! semidirect product `PSL(3,3):⟨σ⟩` built on top of it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::permgroup::Element;
use crate::{Error, Result};

/// An element of the prime field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    value: u8,
    modulus: u8,
}

impl FieldElem {
    pub fn new(value: i64, modulus: u8) -> Self {
        debug_assert!(modulus >= 2);
        let m = i64::from(modulus);
        Self { value: value.rem_euclid(m) as u8, modulus }
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn modulus(self) -> u8 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse via Fermat; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let p = u32::from(self.modulus);
        let mut acc = 1u32;
        let mut base = u32::from(self.value);
        let mut exp = p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Some(Self { value: acc as u8, modulus: self.modulus })
    }
}

impl Add for FieldElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus);
        let p = u16::from(self.modulus);
        Self { value: ((u16::from(self.value) + u16::from(rhs.value)) % p) as u8, ..self }
    }
}

impl Sub for FieldElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FieldElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self { value: (self.modulus - self.value) % self.modulus, ..self }
    }
}

impl Mul for FieldElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus);
        let p = u16::from(self.modulus);
        Self { value: ((u16::from(self.value) * u16::from(rhs.value)) % p) as u8, ..self }
    }
}

/// An invertible 3×3 matrix over `GF(p)` taken modulo scalars.
///
/// Values are always stored in canonical form: the first nonzero entry in
/// row-major order is 1. Equality, hashing and ordering act on that form, so
/// two matrices compare equal exactly when they differ by a nonzero scalar.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMatrix {
    entries: [[u8; 3]; 3],
    modulus: u8,
}

impl ProjMatrix {
    /// Builds a projective matrix from integer literals (negative values are
    /// reduced, so `-1` becomes `p − 1`).
    pub fn new(rows: [[i64; 3]; 3], modulus: u8) -> Result<Self> {
        let mut entries = [[0u8; 3]; 3];
        for (dst, src) in entries.iter_mut().zip(rows.iter()) {
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                *d = FieldElem::new(*s, modulus).value();
            }
        }
        let raw = Self { entries, modulus };
        if raw.det().is_zero() {
            return Err(Error::Singular(modulus));
        }
        Ok(raw.canonical())
    }

    pub fn identity(modulus: u8) -> Self {
        let mut entries = [[0u8; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1;
        }
        Self { entries, modulus }
    }

    pub fn modulus(&self) -> u8 {
        self.modulus
    }

    pub fn entry(&self, row: usize, col: usize) -> FieldElem {
        FieldElem { value: self.entries[row][col], modulus: self.modulus }
    }

    pub fn entries(&self) -> [[u8; 3]; 3] {
        self.entries
    }

    fn canonical(mut self) -> Self {
        let lead = self
            .entries
            .iter()
            .flatten()
            .copied()
            .find(|&v| v != 0)
            .expect("nonsingular matrix has a nonzero entry");
        if lead != 1 {
            let inv = FieldElem { value: lead, modulus: self.modulus }
                .inverse()
                .expect("nonzero");
            self = self.scale(inv);
        }
        self
    }

    fn scale(mut self, c: FieldElem) -> Self {
        for row in self.entries.iter_mut() {
            for v in row.iter_mut() {
                *v = (FieldElem { value: *v, modulus: self.modulus } * c).value();
            }
        }
        self
    }

    /// Multiplies by a nonzero scalar and re-canonicalizes; the result is
    /// always equal to `self`.
    pub fn scaled(&self, c: u8) -> Self {
        let c = FieldElem::new(i64::from(c), self.modulus);
        assert!(!c.is_zero(), "scalar must be nonzero");
        let raw = Self { entries: self.entries, modulus: self.modulus }.scale(c);
        raw.canonical()
    }

    /// Cofactor-expansion determinant of the stored (canonical) representative.
    pub fn det(&self) -> FieldElem {
        let m = |r: usize, c: usize| self.entry(r, c);
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    }

    pub fn mat_mul(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        let p = u32::from(self.modulus);
        let mut entries = [[0u8; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                let s: u32 = (0..3)
                    .map(|k| u32::from(self.entries[i][k]) * u32::from(other.entries[k][j]))
                    .sum();
                *out = (s % p) as u8;
            }
        }
        Self { entries, modulus: self.modulus }.canonical()
    }

    /// Adjugate divided by the determinant.
    pub fn mat_inverse(&self) -> Result<Self> {
        let d = self.det().inverse().ok_or(Error::Singular(self.modulus))?;
        let m = |r: usize, c: usize| self.entry(r, c);
        let mut entries = [[0u8; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                // cofactor C_{ji}
                let (r0, r1) = others(j);
                let (c0, c1) = others(i);
                let minor = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
                let cof = if (i + j) % 2 == 0 { minor } else { -minor };
                *out = (cof * d).value();
            }
        }
        Ok(Self { entries, modulus: self.modulus }.canonical())
    }

    pub fn transpose(&self) -> Self {
        let mut entries = [[0u8; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                *out = self.entries[j][i];
            }
        }
        Self { entries, modulus: self.modulus }.canonical()
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::identity(self.modulus);
        let mut base = *self;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mat_mul(&base);
            }
            base = base.mat_mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative order in `PGL(3,p)`.
    pub fn order(&self) -> u64 {
        let id = Self::identity(self.modulus);
        let mut x = *self;
        let mut n = 1;
        while x != id {
            x = x.mat_mul(self);
            n += 1;
        }
        n
    }

    /// Image of a projective point under the right action `v ↦ v·M`.
    pub fn apply_to_point(&self, pt: &ProjPoint) -> ProjPoint {
        let p = u32::from(self.modulus);
        let mut out = [0i64; 3];
        for (j, o) in out.iter_mut().enumerate() {
            let s: u32 = (0..3)
                .map(|k| u32::from(pt.coords[k]) * u32::from(self.entries[k][j]))
                .sum();
            *o = i64::from(s % p);
        }
        ProjPoint::new(out, self.modulus).expect("invertible image of a nonzero vector")
    }
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Row-major base-p digits of the canonical entries.
impl fmt::Display for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.entries.iter().flatten() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjMatrix({self})")
    }
}

impl Serialize for ProjMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Element for ProjMatrix {
    fn compose(&self, other: &Self) -> Self {
        self.mat_mul(other)
    }

    fn inverse(&self) -> Self {
        self.mat_inverse().expect("stored matrices are invertible")
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.modulus)
    }
}

/// A point of `PG(2,p)`: nonzero vector whose first nonzero coordinate is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [u8; 3],
}

impl ProjPoint {
    pub fn new(v: [i64; 3], modulus: u8) -> Option<Self> {
        let mut c = v.map(|x| FieldElem::new(x, modulus));
        let lead = c.iter().copied().find(|x| !x.is_zero())?;
        let inv = lead.inverse()?;
        for x in c.iter_mut() {
            *x = *x * inv;
        }
        Some(Self { coords: c.map(FieldElem::value) })
    }

    pub fn coords(&self) -> [u8; 3] {
        self.coords
    }

    /// All `p² + p + 1` points in sorted order.
    pub fn all(modulus: u8) -> Vec<Self> {
        let p = i64::from(modulus);
        let mut pts = Vec::new();
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    if let Some(pt) = Self::new([a, b, c], modulus) {
                        if pt.coords == [a as u8, b as u8, c as u8] {
                            pts.push(pt);
                        }
                    }
                }
            }
        }
        pts
    }
}

/// Gram matrix of the bilinear form obtained by polarizing `XZ − Y²`.
///
/// Polarization gives `[[0,0,1],[0,−2,0],[1,0,0]]`; over `GF(3)` the middle
/// entry is 1.
pub fn conic_gram(modulus: u8) -> ProjMatrix {
    ProjMatrix::new([[0, 0, 1], [0, -2, 0], [1, 0, 0]], modulus).expect("nonsingular for p odd")
}

/// The polarity automorphism `g ↦ M·g⁻ᵀ·M⁻¹`.
pub fn polarity_apply(g: &ProjMatrix) -> ProjMatrix {
    let m = conic_gram(g.modulus());
    let m_inv = m.mat_inverse().expect("gram matrix is invertible");
    let g_inv_t = g.mat_inverse().expect("invertible").transpose();
    m.mat_mul(&g_inv_t).mat_mul(&m_inv)
}

/// Element `(g, ε)` of `PGL(3,p):⟨σ⟩`, with `(g,ε)·(h,δ) = (g·σ^ε(h), ε⊕δ)`.
///
/// The derived ordering compares the twist bit first, so every element of the
/// linear subgroup sorts before every element of the other coset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    twist: bool,
    mat: ProjMatrix,
}

impl GroupElement {
    pub fn new(mat: ProjMatrix, twist: bool) -> Self {
        Self { twist, mat }
    }

    pub fn linear(mat: ProjMatrix) -> Self {
        Self { twist: false, mat }
    }

    /// The polarity itself, `(1, 1)`.
    pub fn polarity(modulus: u8) -> Self {
        Self { twist: true, mat: ProjMatrix::identity(modulus) }
    }

    pub fn mat(&self) -> &ProjMatrix {
        &self.mat
    }

    pub fn twist(&self) -> bool {
        self.twist
    }

    pub fn mul(&self, other: &Self) -> Self {
        let h = if self.twist { polarity_apply(&other.mat) } else { other.mat };
        Self { twist: self.twist ^ other.twist, mat: self.mat.mat_mul(&h) }
    }

    pub fn inv(&self) -> Self {
        let gi = self.mat.mat_inverse().expect("invertible");
        let mat = if self.twist { polarity_apply(&gi) } else { gi };
        Self { twist: self.twist, mat }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.mat, u8::from(self.twist))
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Element for GroupElement {
    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Self {
        self.inv()
    }

    fn identity_like(&self) -> Self {
        Self { twist: false, mat: ProjMatrix::identity(self.mat.modulus()) }
    }
}

/// The explicit matrices over `GF(3)` generating the order-39 Frobenius
/// group `P = ⟨η, ψ⟩` and the `A₄` subgroup `L = ⟨α, γ⟩`.
pub mod generators {
    use super::ProjMatrix;

    pub const MODULUS: u8 = 3;

    pub fn eta() -> ProjMatrix {
        ProjMatrix::new([[1, 1, -1], [0, 1, 1], [1, 1, 0]], MODULUS).unwrap()
    }

    pub fn psi() -> ProjMatrix {
        ProjMatrix::new([[1, 1, -1], [0, 1, -1], [0, 0, 1]], MODULUS).unwrap()
    }

    pub fn alpha() -> ProjMatrix {
        ProjMatrix::new([[0, 0, 1], [0, -1, 0], [1, 0, 0]], MODULUS).unwrap()
    }

    pub fn gamma() -> ProjMatrix {
        ProjMatrix::new([[0, 0, 1], [0, -1, -1], [1, -1, 1]], MODULUS).unwrap()
    }
}
