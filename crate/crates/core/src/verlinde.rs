//! The level-`k` Verlinde ring of `sl2` and the dimension formulas for the
//! two families of coinvariants.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::arith::BigInt;
use crate::error::{Error, Result};
use crate::qcomb::Composition;

/// `Σ a_l [l]` in the level-`k` Verlinde ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerlindeElt {
    level: u32,
    coeffs: Vec<BigInt>,
}

impl VerlindeElt {
    pub fn zero(level: u32) -> Self {
        VerlindeElt { level, coeffs: vec![BigInt::zero(); level as usize + 1] }
    }

    /// The unit `[0]`.
    pub fn unit(level: u32) -> Self {
        Self::basis(level, 0).expect("[0] exists at every level")
    }

    /// The basis element `[l]`.
    pub fn basis(level: u32, l: u32) -> Result<Self> {
        if l > level {
            return Err(Error::OutOfRange(format!("[{}] at level {}", l, level)));
        }
        let mut e = Self::zero(level);
        e.coeffs[l as usize] = BigInt::from(1);
        Ok(e)
    }

    pub fn from_coeffs(level: u32, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != level as usize + 1 {
            return Err(Error::OutOfRange(format!(
                "{} coefficients for level {} (need {})",
                coeffs.len(),
                level,
                level + 1
            )));
        }
        Ok(VerlindeElt { level, coeffs })
    }

    /// `[0] + [1] + ... + [a]`.
    pub fn partial_sum(level: u32, a: u32) -> Result<Self> {
        if a > level {
            return Err(Error::OutOfRange(format!("[0]+...+[{}] at level {}", a, level)));
        }
        let mut e = Self::zero(level);
        for l in 0..=a as usize {
            e.coeffs[l] = BigInt::from(1);
        }
        Ok(e)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient `(a : [l])_k`.
    pub fn coeff(&self, l: u32) -> Result<&BigInt> {
        self.coeffs
            .get(l as usize)
            .ok_or_else(|| Error::OutOfRange(format!("[{}] at level {}", l, self.level)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(VerlindeElt { level: self.level, coeffs })
    }

    /// Bilinear extension of the fusion rule
    /// `[l][l'] = Σ [l'']` over `|l-l'| <= l'' <= min(l+l', 2k-l-l')`, `l'' ≡ |l-l'| (mod 2)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let k = self.level as i64;
        let mut out = Self::zero(self.level);
        for (l, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (lp, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for lpp in fusion_channels(k, l as i64, lp as i64) {
                    out.coeffs[lpp as usize] += &ab;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::unit(self.level);
        for _ in 0..n {
            acc = acc.mul(self).expect("same level");
        }
        acc
    }
}

/// Indices `l''` occurring in `[l]·[l']` at level `k`.
pub fn fusion_channels(k: i64, l: i64, lp: i64) -> impl Iterator<Item = i64> {
    let lo = (l - lp).abs();
    let hi = (l + lp).min(2 * k - l - lp);
    (lo..=hi).step_by(2)
}

impl fmt::Display for VerlindeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (l, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}[{}]", c, l)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn verlinde_mul(a: &VerlindeElt, b: &VerlindeElt) -> Result<VerlindeElt> {
    a.mul(b)
}

pub fn verlinde_coeff(a: &VerlindeElt, l: u32) -> Result<BigInt> {
    a.coeff(l).cloned()
}

/// `((Σ_{j=0}^k (j+1)[j])^N : [l])_k`, the dimension of `L_l^(k) / B_N`.
pub fn dim_bigc(k: u32, l: u32, n: u32) -> Result<BigInt> {
    if l > k {
        return Err(Error::OutOfRange(format!("l = {} exceeds k = {}", l, k)));
    }
    let coeffs = (0..=k).map(|j| BigInt::from(j + 1)).collect();
    let base = VerlindeElt::from_coeffs(k, coeffs)?;
    verlinde_coeff(&base.pow(n), l)
}

/// `(Π_a ([0]+...+[a])^{M_a + M̄_a} : [l])_k`.
pub fn dim_mixc(k: u32, l: u32, big: &Composition, big_bar: &Composition) -> Result<BigInt> {
    if l > k {
        return Err(Error::OutOfRange(format!("l = {} exceeds k = {}", l, k)));
    }
    for c in [big, big_bar] {
        if c.len() != k as usize {
            return Err(Error::LengthMismatch(c.len(), k as usize));
        }
    }
    let mut acc = VerlindeElt::unit(k);
    for a in 1..=k {
        let mult = big.entries()[a as usize - 1] + big_bar.entries()[a as usize - 1];
        acc = acc.mul(&VerlindeElt::partial_sum(k, a)?.pow(mult))?;
    }
    verlinde_coeff(&acc, l)
}

/// `([1]^{m_1} ... [k]^{m_k} : [l])_k`.
pub fn basis_product_coeff(k: u32, l: u32, m: &Composition) -> Result<BigInt> {
    if l > k {
        return Err(Error::OutOfRange(format!("l = {} exceeds k = {}", l, k)));
    }
    if m.len() != k as usize {
        return Err(Error::LengthMismatch(m.len(), k as usize));
    }
    let mut acc = VerlindeElt::unit(k);
    for (i, &mult) in m.entries().iter().enumerate() {
        acc = acc.mul(&VerlindeElt::basis(k, i as u32 + 1)?.pow(mult))?;
    }
    verlinde_coeff(&acc, l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elt(k: u32, c: &[i64]) -> VerlindeElt {
        VerlindeElt::from_coeffs(k, c.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let b = |k, l| VerlindeElt::basis(k, l).unwrap();
        assert_eq!(verlinde_mul(&b(1, 1), &b(1, 1)).unwrap(), b(1, 0));
        assert_eq!(verlinde_mul(&b(2, 1), &b(2, 2)).unwrap(), b(2, 1));
        assert_eq!(verlinde_mul(&b(2, 1), &b(2, 1)).unwrap(), elt(2, &[1, 0, 1]));
        assert_eq!(verlinde_mul(&b(2, 1), &b(1, 1)), Err(Error::LevelMismatch(2, 1)));
    }

    #[test]
    fn coefficient_examples() {
        let a = elt(1, &[1, 2]);
        assert_eq!(verlinde_coeff(&a, 1).unwrap(), BigInt::from(2));
        assert_eq!(verlinde_coeff(&VerlindeElt::unit(1), 1).unwrap(), BigInt::from(0));
        // ([0]+2[1])^2 = [0] + 4[1] + 4[1]^2 = 5[0] + 4[1].
        assert_eq!(a.pow(2), elt(1, &[5, 4]));
        assert_eq!(verlinde_coeff(&a.pow(2), 0).unwrap(), BigInt::from(5));
        assert!(verlinde_coeff(&a, 2).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_bigc(1, 0, 1).unwrap(), BigInt::from(1));
        assert_eq!(dim_bigc(1, 1, 2).unwrap(), BigInt::from(4));
        for k in 0..4 {
            assert_eq!(dim_bigc(k, 0, 0).unwrap(), BigInt::from(1));
        }
        assert!(dim_bigc(1, 2, 1).is_err());

        assert_eq!(dim_mixc(1, 1, &comp(&[1]), &comp(&[0])).unwrap(), BigInt::from(1));
        assert_eq!(dim_mixc(1, 0, &comp(&[1]), &comp(&[1])).unwrap(), BigInt::from(2));
        assert_eq!(dim_mixc(3, 0, &comp(&[0, 0, 0]), &comp(&[0, 0, 0])).unwrap(), BigInt::from(1));
        assert!(dim_mixc(2, 0, &comp(&[1]), &comp(&[0, 0])).is_err());
    }

    #[test]
    fn ring_laws_on_basis() {
        for k in 0..=4u32 {
            let basis: Vec<VerlindeElt> = (0..=k).map(|l| VerlindeElt::basis(k, l).unwrap()).collect();
            for a in &basis {
                assert_eq!(a.mul(&VerlindeElt::unit(k)).unwrap(), *a);
                for b in &basis {
                    let ab = a.mul(b).unwrap();
                    assert_eq!(ab, b.mul(a).unwrap());
                    assert!(ab.coeffs().iter().all(|c| *c == BigInt::from(0) || *c == BigInt::from(1)));
                    for c in &basis {
                        assert_eq!(ab.mul(c).unwrap(), a.mul(&b.mul(c).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}
