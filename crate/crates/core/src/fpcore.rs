//! Prime-field arithmetic and the coefficient vectors the rest of the crate
//! works with: integer vectors over ℤ and residue vectors over F_p.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`PrimeField::new`].
pub const DESK_MODULUS_MAX: u64 = 1_000_000;

/// The field F_p for an odd prime `p ≤ DESK_MODULUS_MAX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidModulus { modulus: p, reason: "must be an odd prime >= 3" });
        }
        if p > DESK_MODULUS_MAX {
            return Err(Error::InvalidModulus { modulus: p, reason: "exceeds the desk-scale bound 10^6" });
        }
        if !is_prime(p) {
            return Err(Error::InvalidModulus { modulus: p, reason: "not prime" });
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits in u64")
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    /// Signed view of a residue: values above p/2 read as negative.
    #[inline]
    pub fn signed(&self, r: u64) -> i64 {
        if r > self.p / 2 {
            r as i64 - self.p as i64
        } else {
            r as i64
        }
    }

    /// `min(r, p - r)`, the distance of `r/p` to the nearest integer scaled by p.
    #[inline]
    pub fn circular_distance(&self, r: u64) -> u64 {
        r.min(self.p - r)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime in `[x, 2x]`.
///
/// Returns the prime itself rather than a [`PrimeField`]: for `x = 2` the
/// answer is 2, which is not an admissible field modulus.
pub fn next_prime_in_doubling(x: u64) -> Result<u64> {
    if x < 2 {
        return Err(Error::Precondition(format!("next_prime_in_doubling needs x >= 2, got {x}")));
    }
    let upper = x.saturating_mul(2);
    (x..=upper)
        .find(|&c| is_prime(c))
        .ok_or_else(|| Error::Precondition(format!("no prime in [{x}, {upper}] (u64 overflow)")))
}

/// Coefficient vector over ℤ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![BigInt::zero(); n])
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Indices (0-based) of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()
    }

    pub fn dot(&self, other: &[BigInt]) -> BigInt {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    /// Coordinates as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Sum of absolute values of the coordinates.
    pub fn l1_norm(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).sum()
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(coords: Vec<BigInt>) -> Self {
        Self(coords)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Coefficient vector over F_p, coordinates stored canonically in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpVector {
    field: PrimeField,
    coords: Vec<u64>,
}

impl FpVector {
    pub fn new(field: PrimeField, coords: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|&&c| c >= field.modulus()) {
            return Err(Error::Precondition(format!(
                "coordinate {bad} is not a canonical residue mod {}",
                field.modulus()
            )));
        }
        Ok(Self { field, coords })
    }

    /// Reduces arbitrary signed integers into `[0, p)`.
    pub fn from_i64(field: PrimeField, coords: &[i64]) -> Self {
        Self { field, coords: coords.iter().map(|&c| field.reduce_i64(c)).collect() }
    }

    pub fn zeros(field: PrimeField, n: usize) -> Self {
        Self { field, coords: vec![0; n] }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    #[inline]
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Indices (0-based) of the coordinates that are nonzero mod p.
    pub fn support(&self) -> Vec<usize> {
        self.coords.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
    }

    /// Signed view of every coordinate, see [`PrimeField::signed`].
    pub fn signed_coords(&self) -> Vec<i64> {
        self.coords.iter().map(|&c| self.field.signed(c)).collect()
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.modulus();
        Self { field: self.field, coords: self.coords.iter().map(|&x| self.field.mul(x, c)).collect() }
    }
}

impl fmt::Display for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ") mod {}", self.modulus())
    }
}

/// Divides out the gcd of the coordinates and fixes the sign so the first
/// nonzero coordinate is positive.
pub fn normalize_gcd(a: &IntVector) -> Result<IntVector> {
    let g = a.coords().iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let first_negative = a.coords().iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    let g = if first_negative { -g } else { g };
    Ok(IntVector(a.coords().iter().map(|c| c / &g).collect()))
}

/// Coordinate-wise image under ℤ^n → F_p^n.
pub fn reduce_mod_p(a: &IntVector, field: PrimeField) -> FpVector {
    FpVector { field, coords: a.coords().iter().map(|c| field.reduce(c)).collect() }
}
