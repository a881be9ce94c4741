//! Filtered tensor products of evaluation modules, their associated graded
//! characters and the two quotient recipes.
//!
//! The tensor product basis is the product basis with factor 0 most
//! significant. `x ⊗ t^i` acts as `Σ_a ζ_a^i x^{(a)}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::oracle::linalg::{Echelon, SparseOp};
use crate::oracle::rep::{IntMatrix, RepModule};
use crate::poly::{LaurentPoly, Var};
use crate::qcomb::q_var;

/// A grading variable: stored exponent `Σ c · (eigenvalue of op) + offset`,
/// with eigenvalues of a weight operator summed over the factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub var: Var,
    pub terms: Vec<(String, i64)>,
    pub offset: i64,
}

impl Grading {
    pub fn new(var: Var, terms: &[(&str, i64)], offset: i64) -> Self {
        Grading { var, terms: terms.iter().map(|&(n, c)| (n.to_string(), c)).collect(), offset }
    }
}

/// `x ⊗ t^i + shift`, with `x` a generator or a weight operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFactor {
    pub op: String,
    pub t_power: u32,
    pub shift: i64,
}

/// A product of [`IdealFactor`]s, the rightmost applied first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealOp {
    pub factors: Vec<IdealFactor>,
}

impl IdealOp {
    /// `(x ⊗ t^i)^n`.
    pub fn power(op: &str, t_power: u32, n: u32) -> Self {
        let f = IdealFactor { op: op.to_string(), t_power, shift: 0 };
        IdealOp { factors: vec![f; n as usize] }
    }

    /// `x ⊗ t^0 + shift`.
    pub fn shifted(op: &str, shift: i64) -> Self {
        IdealOp { factors: vec![IdealFactor { op: op.to_string(), t_power: 0, shift }] }
    }

    /// Total `t`-degree.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.t_power).sum()
    }
}

/// How the ideal is divided out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientMode {
    /// Quotient of the associated graded module by the images of the operators,
    /// each acting with its `t`-degree.
    Graded,
    /// Quotient of the whole space by `Σ op · V`, then the induced filtration is graded.
    Filtered,
}

/// Dimensions keyed by `(filtration degree, grading values)`, the grading
/// values in the stored units of [`GradedDims::vars`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub vars: Vec<Var>,
    pub dims: BTreeMap<(u32, Vec<i64>), u64>,
}

impl GradedDims {
    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    /// The character, with `q` marking the filtration degree.
    pub fn to_poly(&self) -> LaurentPoly {
        let mut vars = vec![q_var()];
        vars.extend(self.vars.iter().cloned());
        let terms = self.dims.iter().map(|((d, w), &n)| {
            let mut e = vec![*d as i64];
            e.extend_from_slice(w);
            (e, n.into())
        });
        LaurentPoly::from_terms(vars, terms).expect("exponent lengths match")
    }

    fn record(&mut self, d: u32, w: &[i64], n: usize) {
        if n > 0 {
            *self.dims.entry((d, w.to_vec())).or_insert(0) += n as u64;
        }
    }
}

/// Ranks of the projections of a growing set of vectors onto each weight class.
struct ClassRanks<F: Field> {
    classes: Vec<Vec<usize>>,
    echelons: Vec<Echelon<F>>,
}

impl<F: Field> ClassRanks<F> {
    fn new(field: &F, classes: &[Vec<usize>]) -> Self {
        let echelons = classes.iter().map(|c| Echelon::new(field.clone(), c.len())).collect();
        ClassRanks { classes: classes.to_vec(), echelons }
    }

    fn insert(&mut self, v: &[F::Elem]) {
        for (coords, e) in self.classes.iter().zip(self.echelons.iter_mut()) {
            e.insert(coords.iter().map(|&i| v[i].clone()).collect());
        }
    }

    fn ranks(&self) -> Vec<usize> {
        self.echelons.iter().map(|e| e.rank()).collect()
    }
}

/// Basis of the filtration: `levels[d]` completes `F^{d-1}` to `F^d`, and
/// `ranks[d][c]` is the dimension of `F^d` in weight class `c`.
#[derive(Clone, Debug)]
pub struct Filtration<F: Field> {
    pub levels: Vec<Vec<Vec<F::Elem>>>,
    pub ranks: Vec<Vec<usize>>,
}

impl<F: Field> Filtration<F> {
    pub fn dim(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    /// Basis of `F^d`.
    fn up_to(&self, d: usize) -> impl Iterator<Item = &Vec<F::Elem>> {
        self.levels[..=d].iter().flatten()
    }
}

#[derive(Clone, Debug)]
pub struct FusionProblem<F: Field> {
    field: F,
    factors: Vec<RepModule>,
    zetas: Vec<F::Elem>,
    acting: Vec<String>,
    gradings: Vec<Grading>,
    t_powers: u32,
    strides: Vec<usize>,
    dim: usize,
}

impl<F: Field> FusionProblem<F> {
    /// `acting` names the generators `x` whose currents `x ⊗ t^i`, `i < N`,
    /// build the filtration (`N` = number of factors).
    pub fn new(field: F, factors: Vec<RepModule>, zetas: Vec<F::Elem>, acting: &[&str], gradings: Vec<Grading>) -> Result<Self> {
        if zetas.len() != factors.len() {
            return Err(Error::Inconsistent(format!("{} points for {} factors", zetas.len(), factors.len())));
        }
        for (i, z) in zetas.iter().enumerate() {
            if field.is_zero(z) || zetas[..i].contains(z) {
                return Err(Error::ZetaCollision);
            }
        }
        for m in &factors {
            for g in acting {
                m.generator(g)?;
            }
            for gr in &gradings {
                for (w, _) in &gr.terms {
                    m.weight(w)?;
                }
            }
        }
        let mut strides = vec![1usize; factors.len()];
        for a in (0..factors.len().saturating_sub(1)).rev() {
            strides[a] = strides[a + 1] * factors[a + 1].dim();
        }
        let dim = factors.iter().map(|m| m.dim()).product();
        let t_powers = factors.len() as u32;
        Ok(FusionProblem {
            field,
            factors,
            zetas,
            acting: acting.iter().map(|s| s.to_string()).collect(),
            gradings,
            t_powers,
            strides,
            dim,
        })
    }

    /// Overrides the number of `t`-powers used (default: number of factors).
    pub fn with_t_powers(mut self, n: u32) -> Self {
        self.t_powers = n;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zetas(&self) -> &[F::Elem] {
        &self.zetas
    }

    fn digit(&self, g: usize, a: usize) -> usize {
        (g / self.strides[a]) % self.factors[a].dim()
    }

    pub fn cyclic_vector(&self) -> Vec<F::Elem> {
        (0..self.dim)
            .map(|g| {
                let mut x = 1i64;
                for (a, m) in self.factors.iter().enumerate() {
                    x *= m.cyclic[self.digit(g, a)];
                }
                self.field.from_i64(x)
            })
            .collect()
    }

    fn factor_matrix(&self, a: usize, name: &str) -> Result<IntMatrix> {
        let m = &self.factors[a];
        if let Ok(g) = m.generator(name) {
            return Ok(g.clone());
        }
        Ok(IntMatrix::diagonal(m.weight(name)?))
    }

    /// `x ⊗ t^i` on the tensor product.
    pub fn current(&self, name: &str, i: u32) -> Result<SparseOp<F>> {
        let f = &self.field;
        let mut cols: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); self.dim];
        for a in 0..self.factors.len() {
            let mat = self.factor_matrix(a, name)?;
            let c = f.pow(&self.zetas[a], i);
            let s = self.strides[a];
            for (g, col) in cols.iter_mut().enumerate() {
                let j = self.digit(g, a);
                for &(r, v) in mat.col(j) {
                    let target = g + r * s - j * s;
                    let val = f.mul(&c, &f.from_i64(v));
                    match col.iter_mut().find(|(t, _)| *t == target) {
                        Some((_, x)) => *x = f.add(x, &val),
                        None => col.push((target, val)),
                    }
                }
            }
        }
        for col in &mut cols {
            col.retain(|(_, x)| !f.is_zero(x));
        }
        Ok(SparseOp::from_cols(cols))
    }

    fn ideal_op(&self, op: &IdealOp) -> Result<Vec<SparseOp<F>>> {
        let f = &self.field;
        op.factors
            .iter()
            .map(|fac| {
                let x = self.current(&fac.op, fac.t_power)?;
                Ok(if fac.shift == 0 { x } else { x.add_scaled(f, &f.from_i64(fac.shift), &SparseOp::identity(f, self.dim)) })
            })
            .collect()
    }

    fn apply_product(&self, ops: &[SparseOp<F>], v: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = v.to_vec();
        for op in ops.iter().rev() {
            w = op.apply(&self.field, &w);
        }
        w
    }

    /// Grading values per basis vector, grouped: `(values, basis indices)`.
    pub fn weight_classes(&self) -> Result<Vec<(Vec<i64>, Vec<usize>)>> {
        let mut per_op: BTreeMap<&str, Vec<Vec<i64>>> = BTreeMap::new();
        for gr in &self.gradings {
            for (w, _) in &gr.terms {
                let lists = self.factors.iter().map(|m| m.weight(w).map(|x| x.to_vec())).collect::<Result<_>>()?;
                per_op.insert(w, lists);
            }
        }
        let mut classes: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for g in 0..self.dim {
            let key = self
                .gradings
                .iter()
                .map(|gr| {
                    gr.offset
                        + gr.terms
                            .iter()
                            .map(|(w, c)| {
                                let lists = &per_op[w.as_str()];
                                c * (0..self.factors.len()).map(|a| lists[a][self.digit(g, a)]).sum::<i64>()
                            })
                            .sum::<i64>()
                })
                .collect();
            classes.entry(key).or_default().push(g);
        }
        Ok(classes.into_iter().collect())
    }

    fn grading_vars(&self) -> Vec<Var> {
        self.gradings.iter().map(|g| g.var.clone()).collect()
    }

    fn invariance_error(&self) -> Error {
        let names: Vec<String> = self.gradings.iter().map(|g| String::from(g.var.name())).collect();
        Error::WeightNotInvariant(names.join(","))
    }

    /// `F^d = U^{<=d}(g[t]) · (⊗ cyclic vectors)` for all `d` until the span stops growing.
    pub fn filtration(&self) -> Result<Filtration<F>> {
        let f = &self.field;
        let classes: Vec<Vec<usize>> = self.weight_classes()?.into_iter().map(|(_, c)| c).collect();
        let mut currents: Vec<(u32, SparseOp<F>)> = Vec::new();
        for name in &self.acting {
            for i in 0..self.t_powers {
                currents.push((i, self.current(name, i)?));
            }
        }
        let mut span = Echelon::new(f.clone(), self.dim);
        let mut class_ranks = ClassRanks::new(f, &classes);
        let mut levels: Vec<Vec<Vec<F::Elem>>> = Vec::new();
        let mut ranks = Vec::new();
        let patience = self.t_powers.saturating_sub(1).max(1) as usize;
        let mut empty_run = 0;
        for d in 0usize.. {
            let mut candidates = Vec::new();
            if d == 0 {
                candidates.push(self.cyclic_vector());
            } else {
                for (i, op) in &currents {
                    let i = *i as usize;
                    if i >= 1 && i <= d {
                        for v in &levels[d - i] {
                            candidates.push(op.apply(f, v));
                        }
                    }
                }
            }
            let mut new = Vec::new();
            let mut queue = Vec::new();
            for c in candidates {
                if span.insert(c.clone()) {
                    queue.push(c.clone());
                    new.push(c);
                }
            }
            while let Some(v) = queue.pop() {
                for (i, op) in &currents {
                    if *i != 0 {
                        continue;
                    }
                    let w = op.apply(f, &v);
                    if span.insert(w.clone()) {
                        queue.push(w.clone());
                        new.push(w);
                    }
                }
            }
            for v in &new {
                class_ranks.insert(v);
            }
            let r = class_ranks.ranks();
            if r.iter().sum::<usize>() != span.rank() {
                return Err(self.invariance_error());
            }
            let grew = !new.is_empty();
            levels.push(new);
            ranks.push(r);
            if span.is_full() {
                break;
            }
            if grew {
                empty_run = 0;
            } else {
                empty_run += 1;
                if empty_run >= patience {
                    break;
                }
            }
        }
        while levels.len() > 1 && levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
            ranks.pop();
        }
        Ok(Filtration { levels, ranks })
    }

    /// Dimensions of the weight spaces of `F^d / F^{d-1}`.
    pub fn graded_character(&self) -> Result<GradedDims> {
        let filt = self.filtration()?;
        let keys: Vec<Vec<i64>> = self.weight_classes()?.into_iter().map(|(k, _)| k).collect();
        let mut out = GradedDims { vars: self.grading_vars(), dims: BTreeMap::new() };
        for d in 0..filt.levels.len() {
            for (c, key) in keys.iter().enumerate() {
                let prev = if d == 0 { 0 } else { filt.ranks[d - 1][c] };
                out.record(d as u32, key, filt.ranks[d][c] - prev);
            }
        }
        Ok(out)
    }

    /// Graded dimensions of the quotient by the ideal operators, in the given mode.
    pub fn quotient_character(&self, ideal: &[IdealOp], mode: QuotientMode) -> Result<GradedDims> {
        let f = &self.field;
        let filt = self.filtration()?;
        let weight_classes = self.weight_classes()?;
        let keys: Vec<&Vec<i64>> = weight_classes.iter().map(|(k, _)| k).collect();
        let classes: Vec<Vec<usize>> = weight_classes.iter().map(|(_, c)| c.clone()).collect();
        let ops: Vec<(u32, Vec<SparseOp<F>>)> =
            ideal.iter().map(|op| Ok((op.degree(), self.ideal_op(op)?))).collect::<Result<_>>()?;
        let mut out = GradedDims { vars: self.grading_vars(), dims: BTreeMap::new() };
        let top = filt.levels.len() - 1;
        let not_contained = || Error::Inconsistent("ideal image leaves the filtered space".into());

        match mode {
            QuotientMode::Graded => {
                for d in 0..=top {
                    let mut sub = ClassRanks::new(f, &classes);
                    if d > 0 {
                        for v in filt.up_to(d - 1) {
                            sub.insert(v);
                        }
                    }
                    for (s, op) in &ops {
                        let s = *s as usize;
                        if s > d {
                            continue;
                        }
                        for v in filt.up_to(d - s) {
                            sub.insert(&self.apply_product(op, v));
                        }
                    }
                    let r = sub.ranks();
                    for v in &filt.levels[d] {
                        sub.insert(v);
                    }
                    if sub.ranks() != filt.ranks[d] {
                        return Err(not_contained());
                    }
                    for (c, key) in keys.iter().enumerate() {
                        out.record(d as u32, key, filt.ranks[d][c] - r[c]);
                    }
                }
            }
            QuotientMode::Filtered => {
                let mut sub = ClassRanks::new(f, &classes);
                for (_, op) in &ops {
                    for v in filt.up_to(top) {
                        sub.insert(&self.apply_product(op, v));
                    }
                }
                let mut prev = sub.ranks();
                for d in 0..=top {
                    for v in &filt.levels[d] {
                        sub.insert(v);
                    }
                    let r = sub.ranks();
                    for (c, key) in keys.iter().enumerate() {
                        out.record(d as u32, key, r[c] - prev[c]);
                    }
                    prev = r;
                }
                if prev != filt.ranks[top] {
                    return Err(not_contained());
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, RationalField};
    use crate::oracle::rep::{pi_sum_lowest, sl2_irrep, varpi};
    use crate::poly::Var;

    fn zetas<F: Field>(f: &F, n: usize) -> Vec<F::Elem> {
        (1..=n as i64).map(|i| f.from_i64(3 * i + 1)).collect()
    }

    fn h_grading() -> Vec<Grading> {
        vec![Grading::new(Var::half_step("z"), &[("h", 1)], 0)]
    }

    fn pis(levels: &[u32]) -> Vec<RepModule> {
        levels.iter().map(|&l| sl2_irrep(l)).collect()
    }

    #[test]
    fn single_factor_is_the_module() {
        let f = PrimeField::default();
        let p = FusionProblem::new(f, pis(&[1]), zetas(&f, 1), &["e", "f", "h"], h_grading()).unwrap();
        let g = p.graded_character().unwrap();
        let want: BTreeMap<(u32, Vec<i64>), u64> = [((0, vec![-1]), 1), ((0, vec![1]), 1)].into_iter().collect();
        assert_eq!(g.dims, want);
    }

    #[test]
    fn two_doublets() {
        let f = RationalField;
        let p = FusionProblem::new(f, pis(&[1, 1]), zetas(&f, 2), &["e", "f", "h"], h_grading()).unwrap();
        let filt = p.filtration().unwrap();
        let sizes: Vec<usize> = filt.levels.iter().map(|l| l.len()).collect();
        assert_eq!(sizes, [3, 1]);
        let g = p.graded_character().unwrap();
        let want: BTreeMap<(u32, Vec<i64>), u64> =
            [((0, vec![-2]), 1), ((0, vec![0]), 1), ((0, vec![2]), 1), ((1, vec![0]), 1)].into_iter().collect();
        assert_eq!(g.dims, want);
    }

    #[test]
    fn saturates_to_full_tensor_product() {
        let f = PrimeField::default();
        let p = FusionProblem::new(f, pis(&[1, 2]), zetas(&f, 2), &["e", "f", "h"], h_grading()).unwrap();
        assert_eq!(p.graded_character().unwrap().total(), 6);
    }

    #[test]
    fn extra_current_changes_nothing() {
        let f = PrimeField::default();
        for levels in [&[1u32, 1][..], &[1, 1, 1], &[2, 1, 1]] {
            let base = FusionProblem::new(f, pis(levels), zetas(&f, levels.len()), &["e", "f", "h"], h_grading()).unwrap();
            let more = base.clone().with_t_powers(levels.len() as u32 + 1);
            assert_eq!(base.graded_character().unwrap(), more.graded_character().unwrap());
        }
    }

    #[test]
    fn zeta_collisions_rejected() {
        let f = PrimeField::default();
        let z = vec![f.from_i64(2), f.from_i64(2)];
        assert_eq!(FusionProblem::new(f, pis(&[1, 1]), z, &["e"], vec![]).unwrap_err(), Error::ZetaCollision);
        let z = vec![f.zero()];
        assert_eq!(FusionProblem::new(f, pis(&[1]), z, &["e"], vec![]).unwrap_err(), Error::ZetaCollision);
        assert!(matches!(
            FusionProblem::new(f, pis(&[1]), zetas(&f, 1), &["e''"], vec![]),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn varpi_quotient_smallest() {
        let f = PrimeField::default();
        let ideal = [IdealOp::power("e''", 0, 1), IdealOp::power("e''", 1, 2), IdealOp::shifted("h''", 0)];
        let grading = vec![Grading::new(Var::half_step("z"), &[("h'", 1)], 0)];
        let p = FusionProblem::new(f, vec![varpi(1)], zetas(&f, 1), &["e''", "f''", "h''"], grading).unwrap();
        assert_eq!(p.graded_character().unwrap().total(), 5);
        assert_eq!(p.quotient_character(&ideal, QuotientMode::Graded).unwrap().total(), 1);
    }

    #[test]
    fn filtered_quotient_smallest() {
        let f = RationalField;
        let ideal = [IdealOp::power("e", 0, 1), IdealOp::shifted("h", 1), IdealOp::power("e", 1, 1)];
        let grading = vec![Grading::new(Var::half_step("z"), &[("htilde", 2)], 0)];
        let p = FusionProblem::new(f, vec![pi_sum_lowest(1)], zetas(&f, 1), &["e", "f", "h"], grading).unwrap();
        let g = p.quotient_character(&ideal, QuotientMode::Filtered).unwrap();
        let want: BTreeMap<(u32, Vec<i64>), u64> = [((0, vec![2]), 1)].into_iter().collect();
        assert_eq!(g.dims, want);
    }

    #[test]
    fn empty_ideal_is_the_fusion_product() {
        let f = PrimeField::default();
        let p = FusionProblem::new(f, pis(&[1, 1, 2]), zetas(&f, 3), &["e", "f", "h"], h_grading()).unwrap();
        let g = p.graded_character().unwrap();
        assert_eq!(p.quotient_character(&[], QuotientMode::Graded).unwrap(), g);
        assert_eq!(p.quotient_character(&[], QuotientMode::Filtered).unwrap(), g);
    }
}
