//! Compositions, Gaussian binomials and the q-multinomial coefficients `F_{M,m}(q)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::arith::BigInt;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Var};

/// The variable `q` (integer steps).
pub fn q_var() -> Var {
    Var::integer("q")
}

/// A sequence `(m_1, ..., m_k)` of non-negative multiplicities, `k >= 1`.
/// Entry `a` (1-based) counts copies of the `(a+1)`-dimensional module.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::OutOfRange("a composition needs length k >= 1".into()));
        }
        Ok(Composition(entries))
    }

    pub fn zeros(k: usize) -> Result<Self> {
        Self::new(vec![0; k])
    }

    /// `(0, ..., 0, n)` of length `k`.
    pub fn top(k: usize, n: u32) -> Result<Self> {
        let mut c = Self::zeros(k)?;
        c.0[k - 1] = n;
        Ok(c)
    }

    /// Multiplicity vector of a list of levels: entry `a` counts how often `a`
    /// occurs. Zero levels carry no entry; levels above `k` are rejected.
    pub fn from_levels(k: usize, levels: &[u32]) -> Result<Self> {
        let mut c = Self::zeros(k)?;
        for &l in levels {
            if l as usize > k {
                return Err(Error::OutOfRange(format!("level {} exceeds k = {}", l, k)));
            }
            if l > 0 {
                c.0[l as usize - 1] += 1;
            }
        }
        Ok(c)
    }

    /// Inverse of [`Composition::from_levels`], levels in decreasing order.
    pub fn levels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &m) in self.0.iter().enumerate().rev() {
            out.extend(core::iter::repeat(i as u32 + 1).take(m as usize));
        }
        out
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `Σ m_a`, the number of factors.
    pub fn count(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// `|m| = Σ a·m_a`.
    pub fn weight(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &m)| (i as u64 + 1) * m as u64).sum()
    }

    /// Suffix sums `λ_a = Σ_{i>=a} m_i`, `a = 1..k`.
    pub fn lambda(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.0.len()];
        let mut acc = 0u64;
        for i in (0..self.0.len()).rev() {
            acc += self.0[i] as u64;
            out[i] = acc;
        }
        out
    }

    /// Right zero-padding to length `k` (no-op if already that long).
    pub fn padded(&self, k: usize) -> Composition {
        let mut v = self.0.clone();
        if v.len() < k {
            v.resize(k, 0);
        }
        Composition(v)
    }

    pub fn checked_add(&self, other: &Composition) -> Result<Composition> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(Composition(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// Product of factor dimensions `Π (a+1)^{m_a}`.
    pub fn tensor_dim(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &m)| (i as u64 + 2).pow(m)).product()
    }

    /// All `m` of the same length with `λ_a(m) <= λ_a(self)` for every `a`;
    /// outside this set `F_{self,m}` vanishes.
    pub fn dominated(&self) -> Vec<Composition> {
        let lam = self.lambda();
        let k = lam.len();
        let mut out = Vec::new();
        let mut mu = vec![0u64; k + 1];
        fn rec(a: usize, lam: &[u64], mu: &mut Vec<u64>, out: &mut Vec<Composition>) {
            // Chooses μ_a for a = k-1 down to 0 (0-based), with μ_a >= μ_{a+1}.
            let lo = mu[a + 1];
            let hi = lam[a];
            let mut v = lo;
            while v <= hi {
                mu[a] = v;
                if a == 0 {
                    let m = (0..lam.len()).map(|i| (mu[i] - mu[i + 1]) as u32).collect();
                    out.push(Composition(m));
                } else {
                    rec(a - 1, lam, mu, out);
                }
                v += 1;
            }
        }
        rec(k - 1, &lam, &mut mu, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

/// Coefficients of the Gaussian binomial `[m, n]_q`, lowest degree first;
/// empty (the zero polynomial) unless `0 <= n <= m`.
pub fn q_binomial_coeffs(m: i64, n: i64) -> Vec<BigInt> {
    if n < 0 || n > m {
        return Vec::new();
    }
    let n = n as usize;
    let top = (m as usize) - n;
    // Numerator Π_{j=1}^{n} (1 - q^{top+j}).
    let mut c = vec![BigInt::from(1)];
    for j in 1..=n {
        let s = top + j;
        let mut next = vec![BigInt::zero(); c.len() + s];
        for (i, x) in c.iter().enumerate() {
            next[i] += x;
            next[i + s] -= x;
        }
        c = next;
    }
    // Exact division by (1 - q^j): b_i = a_i + b_{i-j}.
    for j in 1..=n {
        let mut b = vec![BigInt::zero(); c.len() - j];
        for i in 0..b.len() {
            b[i] = if i >= j { &c[i] + &b[i - j] } else { c[i].clone() };
        }
        debug_assert!((0..j).all(|r| {
            let i = c.len() - j + r;
            let carry = if i >= j { b.get(i - j).cloned().unwrap_or_default() } else { BigInt::zero() };
            (&c[i] + carry).is_zero()
        }));
        c = b;
    }
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

/// Gaussian binomial as a polynomial in `q`.
pub fn q_binomial(m: i64, n: i64) -> LaurentPoly {
    LaurentPoly::from_q_coeffs(q_var(), &q_binomial_coeffs(m, n))
}

/// `|m|`.
pub fn weight(m: &Composition) -> u64 {
    m.weight()
}

/// `(λ_1(m), ..., λ_k(m))`.
pub fn lambda_partial(m: &Composition) -> Vec<u64> {
    m.lambda()
}

/// The q-multinomial `F_{M,m}(q)`.
///
/// With `λ = λ(M)`, `μ = λ(m)` and `μ_{k+1} = 0`:
/// `q^{Σ_{a<k} μ_{a+1}(λ_a - μ_a)} Π_a [λ_a - μ_{a+1}, μ_a - μ_{a+1}]_q`.
pub fn f_coeff(big: &Composition, m: &Composition) -> Result<LaurentPoly> {
    if big.len() != m.len() {
        return Err(Error::LengthMismatch(big.len(), m.len()));
    }
    let k = big.len();
    let lam: Vec<i64> = big.lambda().into_iter().map(|x| x as i64).collect();
    let mut mu: Vec<i64> = m.lambda().into_iter().map(|x| x as i64).collect();
    mu.push(0);

    let mut coeffs = vec![BigInt::from(1)];
    for a in 0..k {
        let factor = q_binomial_coeffs(lam[a] - mu[a + 1], mu[a] - mu[a + 1]);
        if factor.is_empty() {
            return Ok(LaurentPoly::zero(vec![q_var()]));
        }
        coeffs = dense_mul(&coeffs, &factor);
    }
    let shift: i64 = (0..k.saturating_sub(1)).map(|a| mu[a + 1] * (lam[a] - mu[a])).sum();
    debug_assert!(shift >= 0);
    Ok(LaurentPoly::from_q_coeffs(q_var(), &coeffs).shift(&[shift]))
}

pub(crate) fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Expands `Π_a (1 + x_1 + ... + x_a)^{M_a}` by brute force and returns every
/// nonzero coefficient, keyed by the exponent vector of `x_1..x_k`.
pub fn multinomial_expansion(big: &Composition) -> BTreeMap<Composition, BigInt> {
    let k = big.len();
    let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    acc.insert(vec![0; k], BigInt::from(1));
    for (a, &mult) in big.entries().iter().enumerate() {
        for _ in 0..mult {
            let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
            for (e, c) in &acc {
                *next.entry(e.clone()).or_default() += c;
                for var in 0..=a {
                    let mut e2 = e.clone();
                    e2[var] += 1;
                    *next.entry(e2).or_default() += c;
                }
            }
            acc = next;
        }
    }
    acc.into_iter().map(|(e, c)| (Composition(e), c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn q(coeffs: &[i64]) -> LaurentPoly {
        let c: Vec<BigInt> = coeffs.iter().map(|&x| BigInt::from(x)).collect();
        LaurentPoly::from_q_coeffs(q_var(), &c)
    }

    /// Partitions fitting in an `n × (m-n)` box, counted by size.
    fn box_partitions(m: i64, n: i64) -> Vec<BigInt> {
        if n < 0 || n > m {
            return Vec::new();
        }
        let (rows, cols) = (n as usize, (m - n) as usize);
        let mut counts = vec![BigInt::zero(); rows * cols + 1];
        // Non-increasing sequences of `rows` parts in [0, cols].
        fn rec(left: usize, max: usize, size: usize, counts: &mut Vec<BigInt>) {
            if left == 0 {
                counts[size] += 1;
                return;
            }
            for p in 0..=max {
                rec(left - 1, p, size + p, counts);
            }
        }
        rec(rows, cols, 0, &mut counts);
        counts
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(5, 0), q(&[1]));
        assert_eq!(q_binomial(0, 0), q(&[1]));
        assert_eq!(q_binomial(2, 1), q(&[1, 1]));
        // Frozen from the box-partition count below.
        assert_eq!(q_binomial(4, 2), q(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(2, 3).is_zero());
        assert!(q_binomial(-1, 0).is_zero());
        assert!(q_binomial(3, -1).is_zero());
    }

    #[test]
    fn q_binomial_matches_box_partitions() {
        for m in 0..9 {
            for n in -1..=m + 1 {
                assert_eq!(q_binomial_coeffs(m, n), box_partitions(m, n), "[{m},{n}]");
            }
        }
    }

    #[test]
    fn weight_and_lambda_examples() {
        assert_eq!(weight(&c(&[0, 0, 0])), 0);
        assert_eq!(weight(&c(&[1, 1])), 3);
        assert_eq!(weight(&c(&[2, 0, 1])), 5);
        assert_eq!(lambda_partial(&c(&[1, 1])), [2, 1]);
        assert_eq!(lambda_partial(&c(&[0, 0])), [0, 0]);
        assert_eq!(lambda_partial(&c(&[2, 0, 1])), [3, 1, 1]);
        assert!(Composition::new(vec![]).is_err());
    }

    #[test]
    fn levels_round_trip() {
        let m = Composition::from_levels(3, &[1, 3, 0, 1]).unwrap();
        assert_eq!(m, c(&[2, 0, 1]));
        assert_eq!(m.levels(), [3, 1, 1]);
        assert!(Composition::from_levels(2, &[3]).is_err());
    }

    #[test]
    fn f_coeff_examples() {
        assert_eq!(f_coeff(&c(&[1]), &c(&[1])).unwrap(), q(&[1]));
        assert_eq!(f_coeff(&c(&[2]), &c(&[1])).unwrap(), q(&[1, 1]));
        assert!(f_coeff(&c(&[2]), &c(&[3])).unwrap().is_zero());
        assert_eq!(f_coeff(&c(&[1]), &c(&[1, 0])), Err(Error::LengthMismatch(1, 2)));
    }

    #[test]
    fn f_coeff_carries_a_q_shift() {
        // M = (0,2), m = (1,1): λ = (2,2), μ = (2,1); shift μ_2(λ_1 - μ_1) = 0,
        // factors [1,1][2,1] = 1 + q.
        assert_eq!(f_coeff(&c(&[0, 2]), &c(&[1, 1])).unwrap(), q(&[1, 1]));
        // M = (0,2), m = (2,0): μ = (2,0): [2,2][2,0] = 1.
        assert_eq!(f_coeff(&c(&[0, 2]), &c(&[2, 0])).unwrap(), q(&[1]));
        // M = (1,1), m = (0,1): λ = (2,1), μ = (1,1): q^{1·(2-1)} [1,0][1,1] = q.
        assert_eq!(f_coeff(&c(&[1, 1]), &c(&[0, 1])).unwrap(), q(&[0, 1]));
    }

    #[test]
    fn multinomial_expansion_examples() {
        let e = multinomial_expansion(&c(&[1]));
        assert_eq!(e.len(), 2);
        assert_eq!(e[&c(&[0])], BigInt::from(1));
        assert_eq!(e[&c(&[1])], BigInt::from(1));
        let e = multinomial_expansion(&c(&[2]));
        assert_eq!(e[&c(&[1])], BigInt::from(2));
        assert_eq!(e[&c(&[2])], BigInt::from(1));
        let e = multinomial_expansion(&c(&[0, 1]));
        assert_eq!(e.len(), 3);
        for m in [[0, 0], [1, 0], [0, 1]] {
            assert_eq!(e[&c(&m)], BigInt::from(1));
        }
    }

    #[test]
    fn dominated_set_covers_support() {
        let big = c(&[1, 0, 2]);
        let dom = big.dominated();
        let e = multinomial_expansion(&big);
        for m in e.keys() {
            assert!(dom.contains(m), "{m}");
        }
        for m in &dom {
            let f = f_coeff(&big, m).unwrap();
            assert_eq!(f.at_one(), e.get(m).cloned().unwrap_or_default());
        }
    }

    fn small_composition() -> impl Strategy<Value = Composition> {
        (1usize..=3).prop_flat_map(|k| prop::collection::vec(0u32..=2, k)).prop_map(Composition)
    }

    proptest! {
        #[test]
        fn q_binomial_symmetry(m in 0i64..10, n in 0i64..10) {
            prop_assume!(n <= m);
            prop_assert_eq!(q_binomial(m, n), q_binomial(m, m - n));
        }

        #[test]
        fn q_binomial_pascal(m in 1i64..10, n in 0i64..10) {
            let rhs = &q_binomial(m - 1, n - 1) + &q_binomial(m - 1, n).shift(&[n]);
            prop_assert_eq!(q_binomial(m, n), rhs);
        }

        #[test]
        fn f_coeff_support_and_positivity(big in small_composition(), raw in prop::collection::vec(0u32..=3, 3)) {
            let m = Composition(raw[..big.len()].to_vec());
            let f = f_coeff(&big, &m).unwrap();
            prop_assert!(f.has_nonnegative_coeffs());
            let lb = big.lambda();
            let lm = m.lambda();
            let outside = lm.iter().zip(&lb).any(|(x, y)| x > y);
            prop_assert_eq!(f.is_zero(), outside);
        }
    }
}
