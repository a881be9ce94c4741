//! Exact scalars: big integers and rationals (re-exported from `num`), and the
//! field abstraction used by the row-reduction code of the oracle.

use core::fmt::{self, Debug, Display};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type BigRat = num_rational::BigRational;

/// Mersenne prime `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// A field given by a runtime context. Elements carry no context of their own,
/// so a prime field with a runtime modulus and the rationals share one interface.
pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Debug + Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Element of a prime field; the modulus lives in the owning [`PrimeField`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeFieldElt(u64);

impl PrimeFieldElt {
    /// Representative in `[0, p)`.
    pub fn value(self) -> u64 {
        self.0
    }
}

impl Display for PrimeFieldElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `Z/pZ` for a prime `2^30 < p < 2^32`, so products of reduced values fit in `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    modulus: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { modulus: DEFAULT_PRIME }
    }
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus <= 1 << 30 || modulus >= 1 << 32 || !is_prime(modulus) {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(PrimeField { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elem(&self, v: u64) -> PrimeFieldElt {
        PrimeFieldElt(v % self.modulus)
    }
}

/// Trial division; moduli here are below `2^32`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = PrimeFieldElt;

    fn zero(&self) -> PrimeFieldElt {
        PrimeFieldElt(0)
    }

    fn one(&self) -> PrimeFieldElt {
        PrimeFieldElt(1)
    }

    fn from_i64(&self, v: i64) -> PrimeFieldElt {
        let p = self.modulus as i128;
        PrimeFieldElt((v as i128).rem_euclid(p) as u64)
    }

    fn add(&self, a: &PrimeFieldElt, b: &PrimeFieldElt) -> PrimeFieldElt {
        let s = a.0 + b.0;
        PrimeFieldElt(if s >= self.modulus { s - self.modulus } else { s })
    }

    fn sub(&self, a: &PrimeFieldElt, b: &PrimeFieldElt) -> PrimeFieldElt {
        PrimeFieldElt(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.modulus - b.0 })
    }

    fn mul(&self, a: &PrimeFieldElt, b: &PrimeFieldElt) -> PrimeFieldElt {
        PrimeFieldElt(a.0 * b.0 % self.modulus)
    }

    fn neg(&self, a: &PrimeFieldElt) -> PrimeFieldElt {
        PrimeFieldElt(if a.0 == 0 { 0 } else { self.modulus - a.0 })
    }

    fn inv(&self, a: &PrimeFieldElt) -> Option<PrimeFieldElt> {
        if a.0 == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        let mut e = self.modulus - 2;
        let mut base = *a;
        let mut acc = PrimeFieldElt(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Some(acc)
    }

    fn is_zero(&self, a: &PrimeFieldElt) -> bool {
        a.0 == 0
    }
}

/// The field `Q` with [`BigRat`] elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRat;

    fn zero(&self) -> BigRat {
        BigRat::zero()
    }

    fn one(&self) -> BigRat {
        BigRat::one()
    }

    fn from_i64(&self, v: i64) -> BigRat {
        BigRat::from_integer(BigInt::from(v))
    }

    fn add(&self, a: &BigRat, b: &BigRat) -> BigRat {
        a + b
    }

    fn sub(&self, a: &BigRat, b: &BigRat) -> BigRat {
        a - b
    }

    fn mul(&self, a: &BigRat, b: &BigRat) -> BigRat {
        a * b
    }

    fn neg(&self, a: &BigRat) -> BigRat {
        -a
    }

    fn inv(&self, a: &BigRat) -> Option<BigRat> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRat) -> bool {
        a.is_zero()
    }
}

/// Exact `r^(num/den)` for `den > 0`, or `None` if the root is irrational
/// (or the base is zero with a negative exponent).
pub fn rational_power(r: &BigRat, num: i64, den: u32) -> Option<BigRat> {
    debug_assert!(den > 0);
    let g = num_integer::gcd(num.unsigned_abs(), den as u64);
    let (num, den) = if g == 0 { (0, 1) } else { (num / g as i64, (den as u64 / g) as u32) };
    if r.is_zero() {
        return match num.signum() {
            0 => Some(BigRat::one()),
            1 => Some(BigRat::zero()),
            _ => None,
        };
    }
    let root = if den == 1 {
        r.clone()
    } else {
        if r.is_negative() && den % 2 == 0 {
            return None;
        }
        let n = r.numer().nth_root(den);
        let d = r.denom().nth_root(den);
        let candidate = BigRat::new(n, d);
        if num_traits::pow(candidate.clone(), den as usize) != *r {
            return None;
        }
        candidate
    };
    let p = num_traits::pow(root, num.unsigned_abs() as usize);
    Some(if num < 0 { p.recip() } else { p })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRat {
        BigRat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn moduli_are_validated() {
        assert!(PrimeField::new(DEFAULT_PRIME).is_ok());
        assert!(PrimeField::new(2_147_483_629).is_ok());
        assert!(PrimeField::new(1_073_741_827).is_ok());
        assert_eq!(PrimeField::new(2_147_483_649), Err(Error::InvalidModulus(2_147_483_649)));
        assert!(PrimeField::new(97).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::default();
        for v in [1i64, 2, 3, -7, 123_456_789] {
            let a = f.from_i64(v);
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        }
        assert_eq!(f.inv(&f.zero()), None);
        assert_eq!(f.from_i64(-1).value(), DEFAULT_PRIME - 1);
    }

    #[test]
    fn rationals_stay_reduced() {
        let a = rat(2, -4);
        assert_eq!(*a.numer(), BigInt::from(-1));
        assert_eq!(*a.denom(), BigInt::from(2));
    }

    #[test]
    fn fractional_powers() {
        assert_eq!(rational_power(&rat(4, 1), 1, 2), Some(rat(2, 1)));
        assert_eq!(rational_power(&rat(4, 9), -3, 2), Some(rat(27, 8)));
        assert_eq!(rational_power(&rat(2, 1), 1, 2), None);
        assert_eq!(rational_power(&rat(-8, 1), 1, 3), Some(rat(-2, 1)));
        assert_eq!(rational_power(&rat(-4, 1), 1, 2), None);
        assert_eq!(rational_power(&rat(0, 1), -1, 1), None);
        assert_eq!(rational_power(&rat(5, 7), 0, 6), Some(rat(1, 1)));
    }
}
