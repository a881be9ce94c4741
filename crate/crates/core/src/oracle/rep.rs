//! Explicit finite-dimensional modules of `sl2`, `sl2 ⊕ sl2` and `sl3`, with
//! integer generator matrices, diagonal weight operators and a cyclic vector.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::oracle::linalg::SparseOp;

/// Square integer matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    cols: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix { cols: vec![Vec::new(); dim] }
    }

    /// From `(row, col, value)` triples; repeated positions add up.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut dense = vec![vec![0i64; dim]; dim];
        for (r, c, v) in entries {
            dense[c][r] += v;
        }
        Self::from_dense_cols(dense)
    }

    fn from_dense_cols(dense: Vec<Vec<i64>>) -> Self {
        let cols = dense
            .into_iter()
            .map(|col| col.into_iter().enumerate().filter(|&(_, v)| v != 0).collect())
            .collect();
        IntMatrix { cols }
    }

    pub fn diagonal(d: &[i64]) -> Self {
        Self::from_entries(d.len(), d.iter().enumerate().map(|(i, &v)| (i, i, v)))
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &[(usize, i64)] {
        &self.cols[j]
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; v.len()];
        for (j, &x) in v.iter().enumerate() {
            for &(r, a) in &self.cols[j] {
                out[r] += a * x;
            }
        }
        out
    }

    fn dense_cols(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        let mut d = vec![vec![0i64; n]; n];
        for (j, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                d[j][r] = v;
            }
        }
        d
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cols = (0..other.dim()).map(|j| {
            let mut e = vec![0i64; self.dim()];
            for &(k, b) in other.col(j) {
                for &(r, a) in self.col(k) {
                    e[r] += a * b;
                }
            }
            e
        });
        Self::from_dense_cols(cols.collect())
    }

    pub fn lin(&self, a: i64, other: &Self, b: i64) -> Self {
        let x = self.dense_cols();
        let y = other.dense_cols();
        let d = x
            .iter()
            .zip(&y)
            .map(|(cx, cy)| cx.iter().zip(cy).map(|(p, q)| a * p + b * q).collect())
            .collect();
        Self::from_dense_cols(d)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).lin(1, &other.mul(self), -1)
    }

    pub fn scaled(&self, c: i64) -> Self {
        self.lin(c, self, 0)
    }

    pub fn to_op<F: Field>(&self, field: &F) -> SparseOp<F> {
        SparseOp::from_cols(self.cols.iter().map(|col| col.iter().map(|&(r, v)| (r, field.from_i64(v))).collect()).collect())
    }
}

/// The Lie algebra acting on a [`RepModule`], fixing generator names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    /// `e, f, h`.
    Sl2,
    /// `e', f', h'` on the first copy and `e'', f'', h''` on the second.
    Sl2Pair,
    /// `e_ab` for `a != b` (named `e12`, …) and `h12, h23`.
    Sl3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepModule {
    pub label: String,
    pub algebra: Algebra,
    pub generators: BTreeMap<String, IntMatrix>,
    pub cyclic: Vec<i64>,
    /// Diagonal operators, by name, as eigenvalue lists in the module basis.
    pub weights: BTreeMap<String, Vec<i64>>,
}

impl RepModule {
    pub fn dim(&self) -> usize {
        self.cyclic.len()
    }

    pub fn generator(&self, name: &str) -> Result<&IntMatrix> {
        self.generators.get(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn weight(&self, name: &str) -> Result<&[i64]> {
        self.weights.get(name).map(|v| v.as_slice()).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Checks the defining brackets of [`RepModule::algebra`] as exact matrix
    /// identities, and that every weight operator is the diagonal of the
    /// matching generator when one exists.
    pub fn check_brackets(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Inconsistent(format!("{}: {}", self.label, what)));
        match self.algebra {
            Algebra::Sl2 => self.check_sl2("")?,
            Algebra::Sl2Pair => {
                self.check_sl2("'")?;
                self.check_sl2("''")?;
                for a in ["e'", "f'", "h'"] {
                    for b in ["e''", "f''", "h''"] {
                        if self.generator(a)?.commutator(self.generator(b)?) != IntMatrix::zero(self.dim()) {
                            return fail(format!("[{}, {}] != 0", a, b));
                        }
                    }
                }
            }
            Algebra::Sl3 => self.check_sl3()?,
        }
        for (name, w) in &self.weights {
            if let Some(g) = self.generators.get(name) {
                if *g != IntMatrix::diagonal(w) {
                    return fail(format!("weight `{}` disagrees with its generator", name));
                }
            }
        }
        if self.cyclic.iter().all(|&x| x == 0) {
            return fail("cyclic vector is zero".into());
        }
        Ok(())
    }

    fn check_sl2(&self, suffix: &str) -> Result<()> {
        let g = |n: &str| self.generator(&format!("{}{}", n, suffix));
        let (e, f, h) = (g("e")?, g("f")?, g("h")?);
        let ok = h.commutator(e) == e.scaled(2) && h.commutator(f) == f.scaled(-2) && e.commutator(f) == *h;
        if !ok {
            return Err(Error::Inconsistent(format!("{}: sl2 relations fail on copy `{}`", self.label, suffix)));
        }
        Ok(())
    }

    fn check_sl3(&self) -> Result<()> {
        let h12 = self.generator("h12")?;
        let h23 = self.generator("h23")?;
        // `Σ c_a E_aa` with `Σ c_a = 0`, written through `h12 = E11-E22`, `h23 = E22-E33`.
        let cartan = |c: [i64; 3]| h12.lin(c[0], h23, c[0] + c[1]);
        let unit = |a: usize, b: usize| -> [i64; 3] {
            let mut c = [0i64; 3];
            c[a - 1] += 1;
            c[b - 1] -= 1;
            c
        };
        let pairs: Vec<(usize, usize)> =
            (1..=3).flat_map(|a| (1..=3).filter(move |&b| b != a).map(move |b| (a, b))).collect();
        let e = |a: usize, b: usize| self.generator(&format!("e{}{}", a, b));
        for &(a, b) in &pairs {
            for &(c, d) in &pairs {
                let lhs = e(a, b)?.commutator(e(c, d)?);
                let rhs = if b == c && d == a {
                    cartan(unit(a, b))
                } else if b == c {
                    e(a, d)?.clone()
                } else if d == a {
                    e(c, b)?.scaled(-1)
                } else {
                    IntMatrix::zero(self.dim())
                };
                if lhs != rhs {
                    return Err(Error::Inconsistent(format!("{}: [e{}{}, e{}{}] fails", self.label, a, b, c, d)));
                }
            }
            for (hname, c) in [("h12", [1, -1, 0]), ("h23", [0, 1, -1])] {
                let lhs = self.generator(hname)?.commutator(e(a, b)?);
                if lhs != e(a, b)?.scaled(c[a - 1] - c[b - 1]) {
                    return Err(Error::Inconsistent(format!("{}: [{}, e{}{}] fails", self.label, hname, a, b)));
                }
            }
        }
        Ok(())
    }
}

fn sl2_matrices(l: u32) -> (IntMatrix, IntMatrix, Vec<i64>) {
    let l = l as i64;
    let n = (l + 1) as usize;
    let e = IntMatrix::from_entries(n, (0..l).map(|j| (j as usize + 1, j as usize, l - j)));
    let f = IntMatrix::from_entries(n, (1..=l).map(|j| (j as usize - 1, j as usize, j)));
    let h = (0..=l).map(|j| 2 * j - l).collect();
    (e, f, h)
}

fn unit_vector(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[i] = 1;
    v
}

/// `π_l` in the basis `w_0, …, w_l` with `h w_j = (2j-l) w_j`,
/// `e w_j = (l-j) w_{j+1}`, `f w_j = j w_{j-1}`; cyclic vector `w_0`, the
/// lowest weight vector.
pub fn sl2_irrep(l: u32) -> RepModule {
    let (e, f, h) = sl2_matrices(l);
    let n = l as usize + 1;
    let mut generators = BTreeMap::new();
    generators.insert("e".to_string(), e);
    generators.insert("f".to_string(), f);
    generators.insert("h".to_string(), IntMatrix::diagonal(&h));
    let mut weights = BTreeMap::new();
    weights.insert("h".to_string(), h);
    RepModule { label: format!("pi_{}", l), algebra: Algebra::Sl2, generators, cyclic: unit_vector(n, 0), weights }
}

/// Entries of `block` placed as a diagonal block at `offset`.
fn embed_block(offset: usize, block: &IntMatrix) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
    (0..block.dim()).flat_map(move |j| block.col(j).iter().map(move |&(r, v)| (offset + r, offset + j, v)))
}

/// `a ⊗ 1` and `1 ⊗ b` on a tensor block of shape `(da, db)`, index `i*db + j`.
fn kron_left(a: &IntMatrix, db: usize) -> IntMatrix {
    let n = a.dim() * db;
    IntMatrix::from_entries(
        n,
        (0..a.dim()).flat_map(|i| {
            a.col(i).iter().flat_map(move |&(r, v)| (0..db).map(move |j| (r * db + j, i * db + j, v)))
        }),
    )
}

fn kron_right(da: usize, b: &IntMatrix) -> IntMatrix {
    let db = b.dim();
    IntMatrix::from_entries(
        da * db,
        (0..da).flat_map(|i| (0..db).flat_map(move |j| b.col(j).iter().map(move |&(r, v)| (i * db + r, i * db + j, v)))),
    )
}

/// `ϖ^(k) = ⊕_{l<=k} π_l^∨ ⊗ π_l` over `sl2 ⊕ sl2`, the first copy acting on the
/// dual factor by `(x φ)(v) = -φ(x v)`; cyclic vector `σ^(k) = Σ_l Σ_j φ_j ⊗ w_j`.
pub fn varpi(k: u32) -> RepModule {
    let dim: usize = (0..=k as usize).map(|l| (l + 1) * (l + 1)).sum();
    let mut entries: BTreeMap<&str, Vec<(usize, usize, i64)>> = BTreeMap::new();
    let mut cyclic = vec![0i64; dim];
    let mut hp = Vec::with_capacity(dim);
    let mut hpp = Vec::with_capacity(dim);
    let mut offset = 0;
    for l in 0..=k {
        let n = l as usize + 1;
        let (e, f, h) = sl2_matrices(l);
        let hm = IntMatrix::diagonal(&h);
        // Dual action: minus the transpose.
        let dual = |m: &IntMatrix| {
            IntMatrix::from_entries(n, (0..n).flat_map(|j| m.col(j).iter().map(move |&(r, v)| (j, r, -v))))
        };
        let blocks = [
            ("e'", kron_left(&dual(&e), n)),
            ("f'", kron_left(&dual(&f), n)),
            ("h'", kron_left(&dual(&hm), n)),
            ("e''", kron_right(n, &e)),
            ("f''", kron_right(n, &f)),
            ("h''", kron_right(n, &hm)),
        ];
        for (name, b) in &blocks {
            entries.entry(name).or_default().extend(embed_block(offset, b));
        }
        for i in 0..n {
            for j in 0..n {
                hp.push(-h[i]);
                hpp.push(h[j]);
            }
            cyclic[offset + i * n + i] = 1;
        }
        offset += n * n;
    }
    let generators = entries.into_iter().map(|(k, v)| (k.to_string(), IntMatrix::from_entries(dim, v))).collect();
    let mut weights = BTreeMap::new();
    weights.insert("h'".to_string(), hp);
    weights.insert("h''".to_string(), hpp);
    RepModule { label: format!("varpi_{}", k), algebra: Algebra::Sl2Pair, generators, cyclic, weights }
}

fn pi_sum(m: u32, highest: bool) -> RepModule {
    let dim: usize = (0..=m as usize).map(|l| l + 1).sum();
    let mut entries: BTreeMap<&str, Vec<(usize, usize, i64)>> = BTreeMap::new();
    let mut cyclic = vec![0i64; dim];
    let mut h_all = Vec::with_capacity(dim);
    let mut tilde = Vec::with_capacity(dim);
    let mut offset = 0;
    for l in 0..=m {
        let n = l as usize + 1;
        let (e, f, h) = sl2_matrices(l);
        entries.entry("e").or_default().extend(embed_block(offset, &e));
        entries.entry("f").or_default().extend(embed_block(offset, &f));
        entries.entry("h").or_default().extend(embed_block(offset, &IntMatrix::diagonal(&h)));
        h_all.extend_from_slice(&h);
        let t = if highest { -(l as i64) } else { l as i64 };
        tilde.extend(core::iter::repeat(t).take(n));
        cyclic[offset + if highest { n - 1 } else { 0 }] = 1;
        offset += n;
    }
    let generators = entries.into_iter().map(|(k, v)| (k.to_string(), IntMatrix::from_entries(dim, v))).collect();
    let mut weights = BTreeMap::new();
    weights.insert("h".to_string(), h_all);
    weights.insert("htilde".to_string(), tilde);
    let label = if highest { format!("pibar^({})", m) } else { format!("pi^({})", m) };
    RepModule { label, algebra: Algebra::Sl2, generators, cyclic, weights }
}

/// `π^(m) = ⊕_{l<=m} π_l` with cyclic vector `Σ_l u_l` (lowest weight vectors)
/// and `h̃ = l` on the summand `π_l`.
pub fn pi_sum_lowest(m: u32) -> RepModule {
    pi_sum(m, false)
}

/// `π̄^(m)` with cyclic vector `Σ_l ū_l` (highest weight vectors) and `h̃ = -l` on `π_l`.
pub fn pi_sum_highest(m: u32) -> RepModule {
    pi_sum(m, true)
}

/// Exponent vectors `α ∈ Z^3_{>=0}` with `|α| = m`, in a fixed order.
fn sym_basis(m: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=m {
        for b in 0..=m - a {
            out.push([a, b, m - a - b]);
        }
    }
    out
}

fn sl3_sym_module(m: u32, dual: bool) -> RepModule {
    let basis = sym_basis(m);
    let dim = basis.len();
    let index: BTreeMap<[u32; 3], usize> = basis.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let mut generators = BTreeMap::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let mut entries = Vec::new();
            for (col, alpha) in basis.iter().enumerate() {
                // Natural module: `e_ij = x_i ∂_j`. Dual: `e_ij = -y_j ∂_i`.
                let (from, to, coeff) = if dual { (i, j, -(alpha[i] as i64)) } else { (j, i, alpha[j] as i64) };
                if coeff == 0 {
                    continue;
                }
                let mut beta = *alpha;
                beta[from] -= 1;
                beta[to] += 1;
                entries.push((index[&beta], col, coeff));
            }
            generators.insert(format!("e{}{}", i + 1, j + 1), IntMatrix::from_entries(dim, entries));
        }
    }
    let sign = if dual { -1 } else { 1 };
    let h12: Vec<i64> = basis.iter().map(|a| sign * (a[0] as i64 - a[1] as i64)).collect();
    let h23: Vec<i64> = basis.iter().map(|a| sign * (a[1] as i64 - a[2] as i64)).collect();
    generators.insert("h12".to_string(), IntMatrix::diagonal(&h12));
    generators.insert("h23".to_string(), IntMatrix::diagonal(&h23));
    let lowest = if dual { [m, 0, 0] } else { [0, 0, m] };
    let mut weights = BTreeMap::new();
    weights.insert("h12".to_string(), h12);
    weights.insert("h23".to_string(), h23);
    let label = if dual { format!("Pibar_{}", m) } else { format!("Pi_{}", m) };
    RepModule { label, algebra: Algebra::Sl3, generators, cyclic: unit_vector(dim, index[&lowest]), weights }
}

/// `Π_m = Sym^m C^3`; cyclic vector the lowest weight vector `x_3^m`.
pub fn sl3_sym(m: u32) -> RepModule {
    sl3_sym_module(m, false)
}

/// `Π̄_m = Sym^m (C^3)^*`; cyclic vector the lowest weight vector `y_1^m`.
pub fn sl3_sym_dual(m: u32) -> RepModule {
    sl3_sym_module(m, true)
}
