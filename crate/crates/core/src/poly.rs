//! Sparse multivariate Laurent polynomials with big-integer coefficients.
//!
//! Every variable carries a `step`: a stored exponent `e` means the
//! mathematical exponent `e / step`. `q` uses step 1, weight variables use
//! step 2 (so `z^{1/2}` is stored as `z^1`), and the `sl3` character uses
//! step 6. Terms live in a `BTreeMap`, so iteration is lexicographic in the
//! stored exponent vectors and zero coefficients are never stored.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{rational_power, BigInt, BigRat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    name: String,
    step: u32,
}

impl Var {
    /// `step` must be positive.
    pub fn new(name: impl Into<String>, step: u32) -> Self {
        assert!(step > 0, "variable step must be positive");
        Var { name: name.into(), step }
    }

    pub fn integer(name: impl Into<String>) -> Self {
        Var::new(name, 1)
    }

    pub fn half_step(name: impl Into<String>) -> Self {
        Var::new(name, 2)
    }

    pub fn sixth_step(name: impl Into<String>) -> Self {
        Var::new(name, 6)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn step(&self) -> u32 {
        self.step
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

/// Value substituted for a variable by [`LaurentPoly::specialize`].
#[derive(Clone, Debug, PartialEq)]
pub enum Binding {
    Value(BigRat),
    Poly(LaurentPoly),
}

impl Binding {
    pub fn int(v: i64) -> Self {
        Binding::Value(BigRat::from_integer(BigInt::from(v)))
    }
}

/// Result of a specialization: a scalar once every variable is bound.
#[derive(Clone, Debug, PartialEq)]
pub enum Specialized {
    Value(BigRat),
    Poly(LaurentPoly),
}

impl Specialized {
    pub fn into_value(self) -> Option<BigRat> {
        match self {
            Specialized::Value(v) => Some(v),
            Specialized::Poly(_) => None,
        }
    }

    pub fn into_poly(self) -> Option<LaurentPoly> {
        match self {
            Specialized::Value(_) => None,
            Specialized::Poly(p) => Some(p),
        }
    }
}

fn var_list(vars: &[Var]) -> String {
    let names: Vec<String> = vars.iter().map(|v| format!("{}/{}", v.name, v.step)).collect();
    format!("[{}]", names.join(","))
}

impl LaurentPoly {
    pub fn zero(vars: Vec<Var>) -> Self {
        LaurentPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vec<Var>, c: impl Into<BigInt>) -> Self {
        let n = vars.len();
        Self::monomial(vars, vec![0; n], c)
    }

    pub fn one(vars: Vec<Var>) -> Self {
        Self::constant(vars, 1)
    }

    /// `c * x^exps`, exponents in stored units.
    pub fn monomial(vars: Vec<Var>, exps: Vec<i64>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exps, c.into());
        p
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(vars: Vec<Var>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(Error::Inconsistent(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    p.vars.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Polynomial in `q` from a dense coefficient list (index = exponent).
    pub fn from_q_coeffs(q: Var, coeffs: &[BigInt]) -> Self {
        let mut p = Self::zero(vec![q]);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(vec![i as i64], c.clone());
        }
        p
    }

    fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at a stored exponent vector.
    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: var_list(&self.vars),
                right: var_list(&other.vars),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    /// Multiplies by the monomial `x^exps` (stored units).
    pub fn shift(&self, exps: &[i64]) -> Self {
        assert_eq!(exps.len(), self.vars.len(), "shift vector length");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(exps).map(|(x, y)| x + y).collect(), c.clone()))
            .collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Renames variable `from` to `to`; the step is unchanged.
    pub fn rename(&self, from: &str, to: &str) -> Result<Self> {
        let i = self.vars.iter().position(|v| v.name == from).ok_or_else(|| Error::UnknownVariable(from.to_string()))?;
        let mut out = self.clone();
        out.vars[i].name = to.to_string();
        Ok(out)
    }

    /// Re-expresses the polynomial over a larger variable list. Every own
    /// variable must appear in `target` with the same step.
    pub fn embed(&self, target: &[Var]) -> Result<Self> {
        let mut map = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let idx = target.iter().position(|t| t == v).ok_or_else(|| Error::VariableMismatch {
                left: var_list(&self.vars),
                right: var_list(target),
            })?;
            map.push(idx);
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut out = vec![0; target.len()];
            for (i, x) in e.iter().enumerate() {
                out[map[i]] = *x;
            }
            (out, c.clone())
        });
        Self::from_terms(target.to_vec(), terms)
    }

    /// Substitutes values or polynomials for some variables.
    ///
    /// Unbound variables keep their order; variables introduced by polynomial
    /// bindings are appended after them. A fractional power of a binding must
    /// be exact: `z^{1/2}` with `z = 4` gives 2, with `z = 2` it is an error.
    /// Non-monomial polynomials may only be raised to non-negative integer powers.
    pub fn specialize(&self, bindings: &[(&str, Binding)]) -> Result<Specialized> {
        let mut bound: Vec<Option<&Binding>> = vec![None; self.vars.len()];
        for (name, b) in bindings {
            let i = self
                .vars
                .iter()
                .position(|v| v.name == *name)
                .ok_or_else(|| Error::UnknownVariable((*name).to_string()))?;
            bound[i] = Some(b);
        }

        let mut out_vars: Vec<Var> =
            self.vars.iter().zip(&bound).filter(|(_, b)| b.is_none()).map(|(v, _)| v.clone()).collect();
        for b in bound.iter().flatten() {
            if let Binding::Poly(p) = b {
                for v in &p.vars {
                    match out_vars.iter().find(|o| o.name == v.name) {
                        Some(o) if o.step != v.step => {
                            return Err(Error::VariableMismatch {
                                left: var_list(&out_vars),
                                right: var_list(&p.vars),
                            })
                        }
                        Some(_) => {}
                        None => out_vars.push(v.clone()),
                    }
                }
            }
        }
        let index_of = |name: &str| out_vars.iter().position(|o| o.name == name).unwrap();
        let n_out = out_vars.len();

        let mut acc: BTreeMap<Vec<i64>, BigRat> = BTreeMap::new();
        for (exps, c) in &self.terms {
            let mut term: BTreeMap<Vec<i64>, BigRat> = BTreeMap::new();
            term.insert(vec![0; n_out], BigRat::from_integer(c.clone()));
            for (i, var) in self.vars.iter().enumerate() {
                let e = exps[i];
                let factor = match bound[i] {
                    None => {
                        let mut m = vec![0; n_out];
                        m[index_of(&var.name)] = e;
                        single(m, BigRat::one())
                    }
                    Some(Binding::Value(r)) => {
                        let v = rational_power(r, e, var.step).ok_or_else(|| Error::NonRepresentable {
                            var: var.name.clone(),
                            detail: format!("({})^({}/{}) is not rational", r, e, var.step),
                        })?;
                        single(vec![0; n_out], v)
                    }
                    Some(Binding::Poly(p)) => power_of_binding(p, e, var, &out_vars)?,
                };
                term = mul_rat(&term, &factor);
            }
            for (e, c) in term {
                let slot = acc.entry(e).or_insert_with(BigRat::zero);
                *slot += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());

        if n_out == 0 {
            let v = acc.into_values().next().unwrap_or_else(BigRat::zero);
            return Ok(Specialized::Value(v));
        }
        let mut out = Self::zero(out_vars);
        for (e, c) in acc {
            if !c.is_integer() {
                return Err(Error::NonIntegral(c.to_string()));
            }
            out.add_term(e, c.to_integer());
        }
        Ok(Specialized::Poly(out))
    }

    /// Evaluates with every variable bound to a rational.
    pub fn evaluate(&self, values: &[(&str, BigRat)]) -> Result<BigRat> {
        let b: Vec<(&str, Binding)> = values.iter().map(|(n, v)| (*n, Binding::Value(v.clone()))).collect();
        match self.specialize(&b)? {
            Specialized::Value(v) => Ok(v),
            Specialized::Poly(p) => Err(Error::OutOfRange(format!(
                "evaluation leaves variables {} unbound",
                var_list(&p.vars)
            ))),
        }
    }

    /// Value at all variables equal to 1.
    pub fn at_one(&self) -> BigInt {
        self.coefficient_sum()
    }
}

fn single(e: Vec<i64>, c: BigRat) -> BTreeMap<Vec<i64>, BigRat> {
    let mut m = BTreeMap::new();
    if !c.is_zero() {
        m.insert(e, c);
    }
    m
}

fn mul_rat(a: &BTreeMap<Vec<i64>, BigRat>, b: &BTreeMap<Vec<i64>, BigRat>) -> BTreeMap<Vec<i64>, BigRat> {
    let mut out: BTreeMap<Vec<i64>, BigRat> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigRat::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `p^(e/step)` re-expressed over `out_vars`.
fn power_of_binding(p: &LaurentPoly, e: i64, var: &Var, out_vars: &[Var]) -> Result<BTreeMap<Vec<i64>, BigRat>> {
    let step = var.step as i64;
    let place = |exps: &[i64], mult_num: i64, mult_den: i64| -> Result<Vec<i64>> {
        let mut out = vec![0; out_vars.len()];
        for (j, pv) in p.vars.iter().enumerate() {
            let num = exps[j] * mult_num;
            if num % mult_den != 0 {
                return Err(Error::NonRepresentable {
                    var: pv.name.clone(),
                    detail: format!("{}*{}/{} is not a multiple of 1/{}", exps[j], mult_num, mult_den, pv.step),
                });
            }
            let idx = out_vars.iter().position(|o| o.name == pv.name).unwrap();
            out[idx] = num / mult_den;
        }
        Ok(out)
    };

    if p.terms.len() == 1 {
        let (exps, c) = p.terms.iter().next().unwrap();
        let coeff = rational_power(&BigRat::from_integer(c.clone()), e, var.step).ok_or_else(|| {
            Error::NonRepresentable { var: var.name.clone(), detail: format!("({})^({}/{}) is not rational", c, e, step) }
        })?;
        return Ok(single(place(exps, e, step)?, coeff));
    }
    if p.terms.is_empty() {
        return if e > 0 {
            Ok(BTreeMap::new())
        } else if e == 0 {
            Ok(single(vec![0; out_vars.len()], BigRat::one()))
        } else {
            Err(Error::NonRepresentable { var: var.name.clone(), detail: "negative power of zero".into() })
        };
    }
    let (n, r) = e.div_rem(&step);
    if r != 0 || n < 0 {
        return Err(Error::NonRepresentable {
            var: var.name.clone(),
            detail: format!("power {}/{} of a non-monomial binding", e, step),
        });
    }
    let pw = p.pow(n as u32);
    let mut out = BTreeMap::new();
    for (exps, c) in &pw.terms {
        out.insert(place(exps, 1, 1)?, BigRat::from_integer(c.clone()));
    }
    Ok(out)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    /// Panics on a variable-list mismatch; see [`LaurentPoly::checked_add`].
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("LaurentPoly addition")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check_vars(rhs).expect("LaurentPoly addition");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("LaurentPoly subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("LaurentPoly multiplication")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, name: &str, e: i64, step: u32) -> fmt::Result {
    let g = num_integer::gcd(e.unsigned_abs(), step as u64) as i64;
    let (n, d) = (e / g, step as i64 / g);
    match (n, d) {
        (1, 1) => write!(f, "{}", name),
        (_, 1) => write!(f, "{}^{}", name, n),
        _ => write!(f, "{}^({}/{})", name, n, d),
    }
}

impl fmt::Display for LaurentPoly {
    /// Human-readable form such as `z^(-1/2) + z^(1/2)` or `1 + 2*q + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let mut factors = 0;
            if !mag.is_one() || exps.iter().all(|e| *e == 0) {
                write!(f, "{}", mag)?;
                factors += 1;
            }
            for (v, e) in self.vars.iter().zip(exps) {
                if *e == 0 {
                    continue;
                }
                if factors > 0 {
                    write!(f, "*")?;
                }
                write_exponent(f, &v.name, *e, v.step)?;
                factors += 1;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn q_vars() -> Vec<Var> {
        vec![Var::integer("q")]
    }

    fn qz() -> Vec<Var> {
        vec![Var::integer("q"), Var::half_step("z")]
    }

    fn qpoly(coeffs: &[i64]) -> LaurentPoly {
        let c: Vec<BigInt> = coeffs.iter().map(|&x| BigInt::from(x)).collect();
        LaurentPoly::from_q_coeffs(Var::integer("q"), &c)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&qpoly(&[1, 1]) + &qpoly(&[0, 1]), qpoly(&[1, 2]));
        let p = qpoly(&[3, 0, -2]);
        assert_eq!(&p + &LaurentPoly::zero(q_vars()), p);
        let z = LaurentPoly::monomial(qz(), vec![0, 2], 1);
        let diff = &z - &z;
        assert!(diff.is_zero());
        assert_eq!(diff.len(), 0);
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&qpoly(&[1, 1]) * &qpoly(&[1, -1]), qpoly(&[1, 0, -1]));
        let half = LaurentPoly::monomial(qz(), vec![0, 1], 1);
        assert_eq!(&half * &half, LaurentPoly::monomial(qz(), vec![0, 2], 1));
        assert_eq!(qpoly(&[1, 1]).pow(2), qpoly(&[1, 2, 1]));
    }

    #[test]
    fn mismatched_variables_are_rejected() {
        let a = LaurentPoly::one(q_vars());
        let b = LaurentPoly::one(qz());
        assert!(matches!(a.checked_add(&b), Err(Error::VariableMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::VariableMismatch { .. })));
        let c = LaurentPoly::one(vec![Var::integer("z")]);
        let d = LaurentPoly::one(vec![Var::half_step("z")]);
        assert!(c.checked_add(&d).is_err());
    }

    #[test]
    fn specialization_examples() {
        // z^2 + (1+q) z + 1 at q = z = 1.
        let chi = LaurentPoly::from_terms(
            qz(),
            [
                (vec![0, 4], BigInt::from(1)),
                (vec![0, 2], BigInt::from(1)),
                (vec![1, 2], BigInt::from(1)),
                (vec![0, 0], BigInt::from(1)),
            ],
        )
        .unwrap();
        let v = chi.specialize(&[("q", Binding::int(1)), ("z", Binding::int(1))]).unwrap();
        assert_eq!(v, Specialized::Value(BigRat::from_integer(4.into())));

        assert_eq!(chi.specialize(&[]).unwrap(), Specialized::Poly(chi.clone()));

        let root = LaurentPoly::monomial(vec![Var::half_step("z")], vec![1], 1);
        assert_eq!(root.evaluate(&[("z", BigRat::from_integer(4.into()))]).unwrap(), BigRat::from_integer(2.into()));
        assert!(matches!(
            root.evaluate(&[("z", BigRat::from_integer(2.into()))]),
            Err(Error::NonRepresentable { .. })
        ));
        assert!(matches!(chi.specialize(&[("w", Binding::int(1))]), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn partial_specialization_keeps_order() {
        let vars = vec![Var::integer("q"), Var::half_step("z1"), Var::half_step("z2")];
        let p = LaurentPoly::from_terms(vars, [(vec![2, 1, -1], BigInt::from(3)), (vec![0, 2, 0], BigInt::from(1))])
            .unwrap();
        let s = p.specialize(&[("z1", Binding::int(1))]).unwrap().into_poly().unwrap();
        assert_eq!(s.vars(), &[Var::integer("q"), Var::half_step("z2")]);
        assert_eq!(s.coeff(&[2, -1]), BigInt::from(3));
        assert_eq!(s.coeff(&[0, 0]), BigInt::from(1));
        // Rational values that leave a fractional coefficient cannot stay a polynomial.
        let quarter = BigRat::new(1.into(), 4.into());
        assert!(matches!(p.specialize(&[("z1", Binding::Value(quarter))]), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn monomial_substitution() {
        // z -> z1 z2 with z1, z2 in sixth steps: z^{1/2} -> z1^{1/2} z2^{1/2}.
        let z = LaurentPoly::from_terms(
            qz(),
            [(vec![0, 1], BigInt::from(1)), (vec![3, -1], BigInt::from(2))],
        )
        .unwrap();
        let target = vec![Var::sixth_step("z1"), Var::sixth_step("z2")];
        let z1z2 = LaurentPoly::monomial(target, vec![6, 6], 1);
        let s = z.specialize(&[("z", Binding::Poly(z1z2))]).unwrap().into_poly().unwrap();
        assert_eq!(s.vars().iter().map(|v| v.name()).collect::<Vec<_>>(), ["q", "z1", "z2"]);
        assert_eq!(s.coeff(&[0, 3, 3]), BigInt::from(1));
        assert_eq!(s.coeff(&[3, -3, -3]), BigInt::from(2));

        // z^{1/2} -> (integer-step w)^{1/2} is not representable.
        let w = LaurentPoly::monomial(vec![Var::integer("w")], vec![1], 1);
        assert!(z.specialize(&[("z", Binding::Poly(w))]).is_err());

        // A non-monomial binding only admits integer powers.
        let one_plus_w = &LaurentPoly::one(vec![Var::integer("w")]) + &LaurentPoly::monomial(vec![Var::integer("w")], vec![1], 1);
        let sq = LaurentPoly::monomial(vec![Var::half_step("z")], vec![4], 1);
        let s = sq.specialize(&[("z", Binding::Poly(one_plus_w.clone()))]).unwrap().into_poly().unwrap();
        assert_eq!(s, one_plus_w.pow(2));
        let root = LaurentPoly::monomial(vec![Var::half_step("z")], vec![1], 1);
        assert!(root.specialize(&[("z", Binding::Poly(one_plus_w))]).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(qpoly(&[1, 2, 1]).to_string(), "1 + 2*q + q^2");
        assert_eq!(qpoly(&[0, -1, 0, 3]).to_string(), "-q + 3*q^3");
        let p = LaurentPoly::from_terms(vec![Var::half_step("z")], [(vec![1], BigInt::from(1)), (vec![-1], BigInt::from(1))])
            .unwrap();
        assert_eq!(p.to_string(), "z^(-1/2) + z^(1/2)");
        assert_eq!(LaurentPoly::zero(q_vars()).to_string(), "0");
        let s = LaurentPoly::monomial(vec![Var::sixth_step("z1")], vec![4], 1);
        assert_eq!(s.to_string(), "z1^(2/3)");
    }

    #[test]
    fn embedding_into_more_variables() {
        let p = qpoly(&[1, 1]);
        let e = p.embed(&qz()).unwrap();
        assert_eq!(e.coeff(&[1, 0]), BigInt::from(1));
        assert!(p.embed(&[Var::half_step("z")]).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-3i64..4, -3i64..4), -5i64..6), 0..6).prop_map(|ts| {
            LaurentPoly::from_terms(qz(), ts.into_iter().map(|((a, b), c)| (vec![a, b], BigInt::from(c)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn normalization_is_idempotent(a in arb_poly()) {
            let again = LaurentPoly::from_terms(a.vars().to_vec(), a.terms().map(|(e, c)| (e.clone(), c.clone()))).unwrap();
            prop_assert_eq!(&again, &a);
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn evaluation_at_one_is_coefficient_sum(a in arb_poly()) {
            let v = a.specialize(&[("q", Binding::int(1)), ("z", Binding::int(1))]).unwrap();
            prop_assert_eq!(v, Specialized::Value(BigRat::from_integer(a.coefficient_sum())));
        }
    }
}
