//! Dense vectors, sparse column-stored operators and incremental row
//! reduction over a [`Field`].

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::Field;

/// Square operator stored by columns: `cols[j]` lists the nonzero `(row, value)`
/// entries of the image of basis vector `j`.
#[derive(Clone, Debug)]
pub struct SparseOp<F: Field> {
    cols: Vec<Vec<(usize, F::Elem)>>,
}

impl<F: Field> SparseOp<F> {
    pub fn zero(dim: usize) -> Self {
        SparseOp { cols: vec![Vec::new(); dim] }
    }

    pub fn identity(field: &F, dim: usize) -> Self {
        SparseOp { cols: (0..dim).map(|j| vec![(j, field.one())]).collect() }
    }

    pub fn from_cols(cols: Vec<Vec<(usize, F::Elem)>>) -> Self {
        SparseOp { cols }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &[(usize, F::Elem)] {
        &self.cols[j]
    }

    /// `self + c·other`, merging entries.
    pub fn add_scaled(&self, field: &F, c: &F::Elem, other: &Self) -> Self {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut dense: Vec<(usize, F::Elem)> = a.clone();
                for (r, v) in b {
                    let v = field.mul(c, v);
                    match dense.iter_mut().find(|(rr, _)| rr == r) {
                        Some((_, x)) => *x = field.add(x, &v),
                        None => dense.push((*r, v)),
                    }
                }
                dense.retain(|(_, x)| !field.is_zero(x));
                dense.sort_by_key(|(r, _)| *r);
                dense
            })
            .collect();
        SparseOp { cols }
    }

    pub fn apply(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); v.len()];
        for (j, x) in v.iter().enumerate() {
            if field.is_zero(x) {
                continue;
            }
            for (r, a) in &self.cols[j] {
                out[*r] = field.add(&out[*r], &field.mul(a, x));
            }
        }
        out
    }
}

/// Row echelon form grown one vector at a time. Each stored row has a unit
/// pivot and is zero at the pivots of all earlier rows, so reducing a new
/// vector by the rows in insertion order clears every pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, dim: usize) -> Self {
        Echelon { field, dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        for (p, row) in &self.rows {
            if f.is_zero(&v[*p]) {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v
    }

    /// Whether `v` lies in the current span.
    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns `true` if it was independent of the stored rows.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        if self.is_full() {
            return false;
        }
        let v = self.reduce(v);
        let f = &self.field;
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("pivot is nonzero");
        let v: Vec<F::Elem> = v.iter().map(|x| f.mul(x, &inv)).collect();
        self.rows.push((p, v));
        true
    }
}
