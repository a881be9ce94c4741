//! Closed character formulas: fusion characters `χ_m`, `ch π_m`, the
//! two-variable fusion characters of `V_M` (`sl2`) and `V_{M,M̄}` (`sl3`),
//! and the characters of the two families of coinvariants.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::BigInt;
use crate::error::{Error, Result};
use crate::kostka::{alternating_sum, restricted_kostka, unrestricted_kostka};
use crate::poly::{LaurentPoly, Var};
use crate::qcomb::{f_coeff, Composition};
use crate::verlinde::{dim_bigc, dim_mixc};

/// `(q, z)` with `z` in half steps.
pub fn qz_vars() -> Vec<Var> {
    vec![Var::integer("q"), Var::half_step("z")]
}

/// `(q, z1, z2)` with half-step `z`s, used by [`ch_vm`].
pub fn qz1z2_vars() -> Vec<Var> {
    vec![Var::integer("q"), Var::half_step("z1"), Var::half_step("z2")]
}

/// `(q, z1, z2)` with sixth-step `z`s, used by [`ch_vmmbar`].
pub fn qz1z2_sixth_vars() -> Vec<Var> {
    vec![Var::integer("q"), Var::sixth_step("z1"), Var::sixth_step("z2")]
}

fn lift_q(p: &LaurentPoly, vars: &[Var]) -> LaurentPoly {
    p.embed(vars).expect("q is among the target variables")
}

/// `χ_m(q,z) = Σ_n z^{|m|-|n|} F_{m,n}(q)`.
pub fn chi(m: &Composition) -> LaurentPoly {
    let vars = qz_vars();
    let mut acc = LaurentPoly::zero(vars.clone());
    let wm = m.weight() as i64;
    for n in m.dominated() {
        let f = f_coeff(m, &n).expect("same length");
        acc += &lift_q(&f, &vars).shift(&[0, 2 * (wm - n.weight() as i64)]);
    }
    acc
}

/// `ch_{q,z} π_m = z^{-|m|/2} χ_m(q,z)`.
pub fn ch_pi(m: &Composition) -> LaurentPoly {
    chi(m).shift(&[0, -(m.weight() as i64)])
}

/// `ch V_M = Σ_m F_{M,m}(q) ch_{q,z1}π_m ch_{q,z2}π_m`.
pub fn ch_vm(big: &Composition) -> LaurentPoly {
    let vars = qz1z2_vars();
    let mut acc = LaurentPoly::zero(vars.clone());
    for m in big.dominated() {
        let f = lift_q(&f_coeff(big, &m).expect("same length"), &vars);
        let pi = ch_pi(&m);
        let p1 = pi.rename("z", "z1").and_then(|p| p.embed(&vars)).expect("renamed");
        let p2 = pi.rename("z", "z2").and_then(|p| p.embed(&vars)).expect("renamed");
        acc += &(&(&f * &p1) * &p2);
    }
    acc
}

fn check_same_length(a: &Composition, b: &Composition) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(())
}

/// `ch V_{M,M̄} = Σ_{m,m̄} F_{M,m} F_{M̄,m̄} ch_{q,z1z2}π_{m+m̄} (z1^{-1}z2)^{(|M|-|M̄|)/3-(|m|-|m̄|)/2}`,
/// with `z1, z2` in sixth steps.
pub fn ch_vmmbar(big: &Composition, big_bar: &Composition) -> Result<LaurentPoly> {
    check_same_length(big, big_bar)?;
    let vars = qz1z2_sixth_vars();
    let mut acc = LaurentPoly::zero(vars.clone());
    let dw = 2 * (big.weight() as i64 - big_bar.weight() as i64);
    let fbar: Vec<(Composition, LaurentPoly)> =
        big_bar.dominated().into_iter().map(|mb| (mb.clone(), f_coeff(big_bar, &mb).expect("same length"))).collect();
    for m in big.dominated() {
        let f = f_coeff(big, &m).expect("same length");
        for (mb, fb) in &fbar {
            let sum = m.checked_add(mb)?;
            let e6 = dw - 3 * (m.weight() as i64 - mb.weight() as i64);
            // z^{e/2} ↦ (z1 z2)^{e/2}, i.e. 3e sixth steps in each.
            let pi = ch_pi(&sum);
            let lifted = LaurentPoly::from_terms(
                vars.clone(),
                pi.terms().map(|(e, c)| (vec![e[0], 3 * e[1] - e6, 3 * e[1] + e6], c.clone())),
            )?;
            let ff = lift_q(&(&f * fb), &vars);
            acc += &(&ff * &lifted);
        }
    }
    Ok(acc)
}

/// Parameters of a space of coinvariants: either `L_l^(k)` modulo the ideal
/// built from `N` copies of the top, or the mixed family given by `M, M̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoinvariantParams {
    Big { k: u32, l: u32, n: u32 },
    Mixed { k: u32, l: u32, big: Composition, big_bar: Composition },
}

impl CoinvariantParams {
    pub fn big(k: u32, l: u32, n: u32) -> Result<Self> {
        let p = CoinvariantParams::Big { k, l, n };
        p.validate()?;
        Ok(p)
    }

    pub fn mixed(k: u32, l: u32, big: Composition, big_bar: Composition) -> Result<Self> {
        let p = CoinvariantParams::Mixed { k, l, big, big_bar };
        p.validate()?;
        Ok(p)
    }

    /// The mixed family from the lists `k_i` and `k̄_i` (entries in `0..=k`;
    /// zeros contribute nothing).
    pub fn from_levels(k: u32, l: u32, levels: &[u32], levels_bar: &[u32]) -> Result<Self> {
        let big = Composition::from_levels(k as usize, levels)?;
        let big_bar = Composition::from_levels(k as usize, levels_bar)?;
        Self::mixed(k, l, big, big_bar)
    }

    pub fn k(&self) -> u32 {
        match *self {
            CoinvariantParams::Big { k, .. } | CoinvariantParams::Mixed { k, .. } => k,
        }
    }

    pub fn l(&self) -> u32 {
        match *self {
            CoinvariantParams::Big { l, .. } | CoinvariantParams::Mixed { l, .. } => l,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (k, l) = (self.k(), self.l());
        if k == 0 {
            return Err(Error::OutOfRange("level k must be positive".into()));
        }
        if l > k {
            return Err(Error::OutOfRange(format!("l = {} exceeds k = {}", l, k)));
        }
        if let CoinvariantParams::Mixed { big, big_bar, .. } = self {
            for c in [big, big_bar] {
                if c.len() != k as usize {
                    return Err(Error::LengthMismatch(c.len(), k as usize));
                }
            }
        }
        Ok(())
    }

    pub fn character(&self) -> Result<LaurentPoly> {
        match self {
            CoinvariantParams::Big { k, l, n } => ch_bigc(*k, *l, *n),
            CoinvariantParams::Mixed { k, l, big, big_bar } => ch_mixc(*k, *l, big, big_bar),
        }
    }

    pub fn dimension(&self) -> Result<BigInt> {
        match self {
            CoinvariantParams::Big { k, l, n } => dim_bigc(*k, *l, *n),
            CoinvariantParams::Mixed { k, l, big, big_bar } => dim_mixc(*k, *l, big, big_bar),
        }
    }
}

/// `Σ_m F_{(0,…,0,N),m}(q) K^{(k)}_{l,m}(q) ch_{q,z}π_m`.
pub fn ch_bigc(k: u32, l: u32, n: u32) -> Result<LaurentPoly> {
    CoinvariantParams::Big { k, l, n }.validate()?;
    let big = Composition::top(k as usize, n)?;
    let vars = qz_vars();
    let mut acc = LaurentPoly::zero(vars.clone());
    for m in big.dominated() {
        let kostka = restricted_kostka(k, l, &m)?;
        if kostka.is_zero() {
            continue;
        }
        let f = f_coeff(&big, &m)?;
        acc += &(&lift_q(&(&f * &kostka), &vars) * &ch_pi(&m));
    }
    Ok(acc)
}

/// `𝒦_{l,M}(q,z) = Σ_m F_{M,m}(q) K_{l,m}(q) ch_{q,z}π_m` with unrestricted Kostka polynomials.
pub fn kcal(l: u32, big: &Composition) -> LaurentPoly {
    let vars = qz_vars();
    let mut acc = LaurentPoly::zero(vars.clone());
    for m in big.dominated() {
        let kostka = unrestricted_kostka(l, &m);
        if kostka.is_zero() {
            continue;
        }
        let f = f_coeff(big, &m).expect("same length");
        acc += &(&lift_q(&(&f * &kostka), &vars) * &ch_pi(&m));
    }
    acc
}

/// The alternating-sum form of [`ch_bigc`], built from [`kcal`].
pub fn ch_bigc_alternating(k: u32, l: u32, n: u32) -> Result<LaurentPoly> {
    CoinvariantParams::Big { k, l, n }.validate()?;
    let big = Composition::top(k as usize, n)?;
    alternating_sum(k, l, big.weight(), |idx| Ok(kcal(idx, &big)), qz_vars())
}

/// `Σ_{m,m̄} F_{M,m}(q) F_{M̄,m̄}(q) K^{(k)}_{l,m+m̄}(q) z^{|m|-|m̄|}`.
pub fn ch_mixc(k: u32, l: u32, big: &Composition, big_bar: &Composition) -> Result<LaurentPoly> {
    CoinvariantParams::Mixed { k, l, big: big.clone(), big_bar: big_bar.clone() }.validate()?;
    let vars = qz_vars();
    let mut acc = LaurentPoly::zero(vars.clone());
    let mut kostka_cache: BTreeMap<Composition, LaurentPoly> = BTreeMap::new();
    let fbar: Vec<(Composition, LaurentPoly)> =
        big_bar.dominated().into_iter().map(|mb| (mb.clone(), f_coeff(big_bar, &mb).expect("same length"))).collect();
    for m in big.dominated() {
        let f = f_coeff(big, &m)?;
        for (mb, fb) in &fbar {
            let sum = m.checked_add(mb)?;
            if !kostka_cache.contains_key(&sum) {
                let kk = restricted_kostka(k, l, &sum)?;
                kostka_cache.insert(sum.clone(), kk);
            }
            let kk = &kostka_cache[&sum];
            if kk.is_zero() {
                continue;
            }
            let dz = 2 * (m.weight() as i64 - mb.weight() as i64);
            acc += &lift_q(&(&(&f * fb) * kk), &vars).shift(&[0, dz]);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Binding;
    use crate::qcomb::multinomial_expansion;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn qz(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(qz_vars(), terms.iter().map(|&(a, b, x)| (vec![a, b], BigInt::from(x)))).unwrap()
    }

    /// Compositions of length `k` with entries summing to at most `max`.
    fn small_compositions(k: usize, max: u32) -> Vec<Composition> {
        let mut out = vec![vec![]];
        for _ in 0..k {
            let mut next = Vec::new();
            for v in &out {
                let used: u32 = v.iter().sum();
                for x in 0..=max - used {
                    let mut w = v.clone();
                    w.push(x);
                    next.push(w);
                }
            }
            out = next;
        }
        out.into_iter().map(|v| Composition::new(v).unwrap()).collect()
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(&c(&[1])), qz(&[(0, 2, 1), (0, 0, 1)]));
        assert_eq!(chi(&c(&[2])), qz(&[(0, 4, 1), (0, 2, 1), (1, 2, 1), (0, 0, 1)]));
        assert_eq!(chi(&c(&[0, 0])), LaurentPoly::one(qz_vars()));
    }

    #[test]
    fn ch_pi_examples() {
        assert_eq!(ch_pi(&c(&[1])), qz(&[(0, 1, 1), (0, -1, 1)]));
        assert_eq!(ch_pi(&c(&[2])), qz(&[(0, 2, 1), (0, 0, 1), (1, 0, 1), (0, -2, 1)]));
        assert_eq!(ch_pi(&c(&[0])), LaurentPoly::one(qz_vars()));
    }

    #[test]
    fn chi_total_dimension() {
        for k in 1..=3 {
            for m in small_compositions(k, 3) {
                assert_eq!(chi(&m).at_one(), BigInt::from(m.tensor_dim()), "m = {}", m);
            }
        }
    }

    #[test]
    fn ch_pi_at_q_one_is_classical() {
        for k in 1..=3 {
            for m in small_compositions(k, 3) {
                let got = ch_pi(&m).specialize(&[("q", Binding::int(1))]).unwrap().into_poly().unwrap();
                let zv = vec![Var::half_step("z")];
                let mut want = LaurentPoly::one(zv.clone());
                for (i, &mult) in m.entries().iter().enumerate() {
                    let a = i as i64 + 1;
                    let string = LaurentPoly::from_terms(
                        zv.clone(),
                        (0..=a).map(|j| (vec![a - 2 * j], BigInt::from(1))),
                    )
                    .unwrap();
                    want = &want * &string.pow(mult);
                }
                assert_eq!(got, want, "m = {}", m);
            }
        }
    }

    #[test]
    fn ch_vm_examples() {
        let got = ch_vm(&c(&[1]));
        let want = LaurentPoly::from_terms(
            qz1z2_vars(),
            [
                (vec![0, 1, 1], 1),
                (vec![0, 1, -1], 1),
                (vec![0, -1, 1], 1),
                (vec![0, -1, -1], 1),
                (vec![0, 0, 0], 1),
            ]
            .into_iter()
            .map(|(e, x)| (e, BigInt::from(x))),
        )
        .unwrap();
        assert_eq!(got, want);
        assert_eq!(ch_vm(&c(&[0])), LaurentPoly::one(qz1z2_vars()));
        assert_eq!(ch_vm(&c(&[2])).at_one(), BigInt::from(25));
    }

    #[test]
    fn ch_vm_dimension() {
        for k in 1..=3 {
            for big in small_compositions(k, 2) {
                let want: BigInt = multinomial_expansion(&big)
                    .iter()
                    .map(|(m, f)| f * BigInt::from(m.tensor_dim()).pow(2))
                    .sum();
                assert_eq!(ch_vm(&big).at_one(), want, "M = {}", big);
            }
        }
    }

    #[test]
    fn ch_vmmbar_examples() {
        let zero = c(&[0]);
        assert_eq!(ch_vmmbar(&zero, &zero).unwrap(), LaurentPoly::one(qz1z2_sixth_vars()));
        let one = ch_vmmbar(&c(&[1]), &zero).unwrap();
        assert_eq!(one.at_one(), BigInt::from(3));
        // Weights of C^3: (z1^{-1}z2)^{1/3}, (z1^{-1}z2)^{1/3-1/2}(z1z2)^{±1/2}.
        let want = LaurentPoly::from_terms(
            qz1z2_sixth_vars(),
            [vec![0, -2, 2], vec![0, 4, 2], vec![0, -2, -4]].into_iter().map(|e| (e, BigInt::from(1))),
        )
        .unwrap();
        assert_eq!(one, want);
        assert_eq!(ch_vmmbar(&c(&[1]), &c(&[1])).unwrap().at_one(), BigInt::from(9));
        assert!(ch_vmmbar(&c(&[1]), &c(&[1, 0])).is_err());
    }

    #[test]
    fn ch_vmmbar_swaps_variables_under_conjugation() {
        for big in small_compositions(2, 2) {
            for bar in small_compositions(2, 1) {
                let a = ch_vmmbar(&big, &bar).unwrap();
                let b = ch_vmmbar(&bar, &big).unwrap();
                let swapped = LaurentPoly::from_terms(
                    qz1z2_sixth_vars(),
                    b.terms().map(|(e, x)| (vec![e[0], e[2], e[1]], x.clone())),
                )
                .unwrap();
                assert_eq!(a, swapped);
            }
        }
    }

    #[test]
    fn ch_bigc_examples() {
        assert_eq!(ch_bigc(1, 0, 1).unwrap(), LaurentPoly::one(qz_vars()));
        assert_eq!(ch_bigc(1, 1, 1).unwrap(), qz(&[(0, 1, 1), (0, -1, 1)]));
        assert!(ch_bigc(1, 2, 1).is_err());
    }

    #[test]
    fn ch_bigc_dimension() {
        for k in 1..=2 {
            for l in 0..=k {
                for n in 0..=3 {
                    let ch = ch_bigc(k, l, n).unwrap();
                    assert!(ch.has_nonnegative_coeffs());
                    assert_eq!(ch.at_one(), dim_bigc(k, l, n).unwrap(), "k={} l={} N={}", k, l, n);
                }
            }
        }
    }

    #[test]
    fn alternating_form_agrees() {
        for k in 1..=3 {
            for l in 0..=k {
                for n in 0..=3 {
                    assert_eq!(
                        ch_bigc_alternating(k, l, n).unwrap(),
                        ch_bigc(k, l, n).unwrap(),
                        "k={} l={} N={}",
                        k,
                        l,
                        n
                    );
                }
            }
        }
    }

    #[test]
    fn ch_mixc_examples() {
        assert_eq!(ch_mixc(1, 1, &c(&[1]), &c(&[0])).unwrap(), qz(&[(0, 2, 1)]));
        assert_eq!(ch_mixc(1, 0, &c(&[1]), &c(&[0])).unwrap(), LaurentPoly::one(qz_vars()));
        assert_eq!(ch_mixc(1, 1, &c(&[1]), &c(&[1])).unwrap(), qz(&[(0, 2, 1), (0, -2, 1)]));
        assert!(ch_mixc(2, 0, &c(&[1]), &c(&[0, 0])).is_err());
    }

    #[test]
    fn ch_mixc_dimension_and_symmetry() {
        for k in 1..=2u32 {
            let comps: Vec<Composition> =
                small_compositions(k as usize, 4).into_iter().filter(|m| m.weight() <= 4).collect();
            for big in &comps {
                for bar in &comps {
                    if big.weight() + bar.weight() > 4 {
                        continue;
                    }
                    for l in 0..=k {
                        let ch = ch_mixc(k, l, big, bar).unwrap();
                        assert!(ch.has_nonnegative_coeffs());
                        assert_eq!(ch.at_one(), dim_mixc(k, l, big, bar).unwrap());
                        let other = ch_mixc(k, l, bar, big).unwrap();
                        let flipped = LaurentPoly::from_terms(
                            qz_vars(),
                            other.terms().map(|(e, x)| (vec![e[0], -e[1]], x.clone())),
                        )
                        .unwrap();
                        assert_eq!(ch, flipped);
                    }
                }
            }
        }
    }

    #[test]
    fn params_validate() {
        assert!(CoinvariantParams::big(2, 3, 1).is_err());
        assert!(CoinvariantParams::mixed(2, 1, c(&[1]), c(&[0, 0])).is_err());
        let p = CoinvariantParams::from_levels(2, 1, &[1, 2, 0], &[2]).unwrap();
        assert_eq!(p, CoinvariantParams::Mixed { k: 2, l: 1, big: c(&[1, 1]), big_bar: c(&[0, 1]) });
        assert_eq!(p.character().unwrap().at_one(), p.dimension().unwrap());
    }
}
