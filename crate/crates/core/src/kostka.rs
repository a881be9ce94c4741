//! Level-restricted Kostka polynomials of `sl2` from their fermionic sum, the
//! unrestricted ones by level stabilization, and the alternating-sum form.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::BigInt;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::qcomb::{dense_mul, q_binomial_coeffs, q_var, Composition};

/// One admissible `n` of the fermionic sum, with its quadratic form value
/// `c(n)` and vacancy numbers `p_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionicSummand {
    pub n: Vec<u32>,
    pub quadratic: i64,
    pub vacancies: Vec<i64>,
}

impl FermionicSummand {
    /// `q^{c(n)} Π_a [p_a + n_a, n_a]`; zero when some `p_a < 0`.
    pub fn value(&self) -> LaurentPoly {
        let mut coeffs = vec![BigInt::from(1)];
        for (p, &n) in self.vacancies.iter().zip(&self.n) {
            coeffs = dense_mul(&coeffs, &q_binomial_coeffs(p + n as i64, n as i64));
        }
        LaurentPoly::from_q_coeffs(q_var(), &coeffs).shift(&[self.quadratic])
    }
}

fn check_level(k: u32, l: u32, m: &Composition) -> Result<()> {
    if l > k {
        return Err(Error::OutOfRange(format!("l = {} exceeds k = {}", l, k)));
    }
    if m.len() != k as usize {
        return Err(Error::LengthMismatch(m.len(), k as usize));
    }
    Ok(())
}

/// All `n ∈ Z^k_{>=0}` with `Σ a·n_a = target`.
fn weighted_compositions(k: usize, target: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fn rec(a: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if a == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = a as u64;
        for n in 0..=left / w {
            cur[a - 1] = n as u32;
            rec(a - 1, left - n * w, cur, out);
        }
        cur[a - 1] = 0;
    }
    rec(k, target, &mut cur, &mut out);
    out
}

/// The summands of the fermionic formula for `K^{(k)}_{l,m}`, with
/// `A_{ab} = min(a,b)`, `v_a = max(a-k+l, 0)`,
/// `c(n) = Σ_{a,b} A_{ab} n_a n_b + Σ_a v_a n_a` and
/// `p_a = Σ_b A_{ab}(m_b - 2 n_b) - v_a`.
pub fn fermionic_summands(k: u32, l: u32, m: &Composition) -> Result<Vec<FermionicSummand>> {
    check_level(k, l, m)?;
    let total = m.weight() as i64 - l as i64;
    if total < 0 || total % 2 != 0 {
        return Ok(Vec::new());
    }
    let k = k as usize;
    let a_mat = |a: usize, b: usize| a.min(b) as i64;
    let v: Vec<i64> = (1..=k).map(|a| (a as i64 - k as i64 + l as i64).max(0)).collect();
    let mm: Vec<i64> = m.entries().iter().map(|&x| x as i64).collect();

    let out = weighted_compositions(k, (total / 2) as u64)
        .into_iter()
        .map(|n| {
            let nn: Vec<i64> = n.iter().map(|&x| x as i64).collect();
            let mut quadratic = 0i64;
            for a in 1..=k {
                for b in 1..=k {
                    quadratic += a_mat(a, b) * nn[a - 1] * nn[b - 1];
                }
                quadratic += v[a - 1] * nn[a - 1];
            }
            let vacancies = (1..=k)
                .map(|a| (1..=k).map(|b| a_mat(a, b) * (mm[b - 1] - 2 * nn[b - 1])).sum::<i64>() - v[a - 1])
                .collect();
            FermionicSummand { n, quadratic, vacancies }
        })
        .collect();
    Ok(out)
}

/// `K^{(k)}_{l,m}(q)`; `m` must have length `k`.
pub fn restricted_kostka(k: u32, l: u32, m: &Composition) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero(vec![q_var()]);
    for s in fermionic_summands(k, l, m)? {
        if s.vacancies.iter().any(|&p| p < 0) {
            continue;
        }
        acc += &s.value();
    }
    Ok(acc)
}

/// Level at which the restricted formula has stabilized to the unrestricted
/// Kostka polynomial: `max(l, |m|)`, and at least the length of `m`.
pub fn stable_level(l: u32, m: &Composition) -> u32 {
    (l as u64).max(m.weight()).max(m.len() as u64).max(1) as u32
}

/// `K_{l,m}(q)`, the graded multiplicity of `π_l` in the fusion product `π_m`.
pub fn unrestricted_kostka(l: u32, m: &Composition) -> LaurentPoly {
    let k = stable_level(l, m);
    restricted_kostka(k, l, &m.padded(k as usize)).expect("stable level admits l and m")
}

/// `Σ_{i>=0} q^{(k+2)i²+(l+1)i} K_{2(k+2)i+l, m} - Σ_{i>0} q^{(k+2)i²-(l+1)i} K_{2(k+2)i-l-2, m}`.
pub fn alternating_sum_kostka(k: u32, l: u32, m: &Composition) -> Result<LaurentPoly> {
    if l > k {
        return Err(Error::OutOfRange(format!("l = {} exceeds k = {}", l, k)));
    }
    alternating_sum(k, l, m.weight(), |idx| Ok(unrestricted_kostka(idx, m)), vec![q_var()])
}

/// Shared shape of the alternating sums: `term(idx)` supplies the unrestricted
/// object at highest weight `idx`; indices above `max_index` contribute nothing.
pub(crate) fn alternating_sum<F>(
    k: u32,
    l: u32,
    max_index: u64,
    mut term: F,
    vars: Vec<crate::poly::Var>,
) -> Result<LaurentPoly>
where
    F: FnMut(u32) -> Result<LaurentPoly>,
{
    let (k, l) = (k as i64, l as i64);
    let q_index = vars.iter().position(|v| v.name() == "q").expect("q variable");
    let q_shift = |e: i64| {
        let mut s = vec![0i64; vars.len()];
        s[q_index] = e;
        s
    };
    let mut acc = LaurentPoly::zero(vars.clone());
    let mut i = 0i64;
    loop {
        let plus = 2 * (k + 2) * i + l;
        let minus = 2 * (k + 2) * i - l - 2;
        if plus as u64 > max_index && (i == 0 || minus as u64 > max_index) {
            break;
        }
        if plus as u64 <= max_index {
            let t = term(plus as u32)?;
            acc += &t.shift(&q_shift((k + 2) * i * i + (l + 1) * i));
        }
        if i > 0 && minus as u64 <= max_index {
            let t = term(minus as u32)?;
            acc = &acc - &t.shift(&q_shift((k + 2) * i * i - (l + 1) * i));
        }
        i += 1;
    }
    Ok(acc)
}
