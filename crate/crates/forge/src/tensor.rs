//! Structure constants and tensor elements.
//!
//! Everything is indexed against a fixed ordered basis e_0, ..., e_{n-1}.
//! `StructTensor` holds a bilinear product e_i ∘ e_j = Σ_k c[i][j][k] e_k.
//! The same container, read as Δ(e_k) = Σ_{i,j} d[i][j][k] e_i⊗e_j, stores a
//! comultiplication; the accessor names keep the two readings apart.

use crate::matrix::Matrix;
use crate::scalar::{int, Scalar};
use num::Zero;

/// Cubic array c[i][j][k], kept flat. Index layout (i*dim + j)*dim + k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructTensor {
    dim: usize,
    c: Vec<Scalar>,
}

impl StructTensor {
    pub fn zero(dim: usize) -> Self {
        StructTensor {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, x: Scalar) {
        self.c[(i * self.dim + j) * self.dim + k] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, x: &Scalar) {
        let cur = self.get(i, j, k) + x;
        self.set(i, j, k, cur);
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Self {
        let mut t = StructTensor::zero(dim);
        for (i, j, k, x) in entries {
            t.add_to(*i, *j, *k, x);
        }
        t
    }

    pub fn from_int_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        StructTensor::from_entries(
            dim,
            &entries
                .iter()
                .map(|&(i, j, k, n)| (i, j, k, int(n)))
                .collect::<Vec<_>>(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Nonzero coefficients in lexicographic (i, j, k) order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let x = self.get(i, j, k);
                    if !x.is_zero() {
                        out.push((i, j, k, x.clone()));
                    }
                }
            }
        }
        out
    }

    /// Product of two coefficient vectors under the stored bilinear map.
    pub fn bilinear(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), self.dim);
        assert_eq!(b.len(), self.dim);
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &ab * self.get(i, j, k);
                }
            }
        }
        out
    }

    /// e_i ∘ e_j as a coefficient vector.
    pub fn product_of_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.get(i, j, k).clone()).collect()
    }

    /// Left multiplication operator L(a): v ↦ a ∘ v.
    pub fn left_op(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let mut ej = vec![Scalar::zero(); self.dim];
            ej[j] = num::One::one();
            let col = self.bilinear(a, &ej);
            for (k, x) in col.into_iter().enumerate() {
                m.set(k, j, x);
            }
        }
        m
    }

    /// Right multiplication operator R(a): v ↦ v ∘ a.
    pub fn right_op(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let mut ej = vec![Scalar::zero(); self.dim];
            ej[j] = num::One::one();
            let col = self.bilinear(&ej, a);
            for (k, x) in col.into_iter().enumerate() {
                m.set(k, j, x);
            }
        }
        m
    }

    pub fn left_op_basis(&self, i: usize) -> Matrix {
        let mut a = vec![Scalar::zero(); self.dim];
        a[i] = num::One::one();
        self.left_op(&a)
    }

    pub fn right_op_basis(&self, i: usize) -> Matrix {
        let mut a = vec![Scalar::zero(); self.dim];
        a[i] = num::One::one();
        self.right_op(&a)
    }

    /// Opposite product: c_op[i][j][k] = c[j][i][k].
    pub fn opposite(&self) -> StructTensor {
        let mut t = StructTensor::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    t.set(i, j, k, self.get(j, i, k).clone());
                }
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> StructTensor {
        StructTensor {
            dim: self.dim,
            c: self.c.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &StructTensor) -> StructTensor {
        assert_eq!(self.dim, other.dim);
        StructTensor {
            dim: self.dim,
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &StructTensor) -> StructTensor {
        self.add(&other.scale(&int(-1)))
    }

    pub fn is_commutative_array(&self) -> bool {
        *self == self.opposite()
    }

    // Comultiplication reading: Δ(e_k) = Σ d[i][j][k] e_i⊗e_j.

    /// Δ applied to a coefficient vector, as an element of A⊗A.
    pub fn comult(&self, a: &[Scalar]) -> Element2 {
        assert_eq!(a.len(), self.dim);
        let mut out = Element2::zero(self.dim, self.dim);
        for k in 0..self.dim {
            if a[k].is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let d = self.get(i, j, k);
                    if !d.is_zero() {
                        out.add_to(i, j, &(&a[k] * d));
                    }
                }
            }
        }
        out
    }

    pub fn comult_basis(&self, k: usize) -> Element2 {
        let mut a = vec![Scalar::zero(); self.dim];
        a[k] = num::One::one();
        self.comult(&a)
    }

    /// Swap of tensor legs on the comultiplication reading:
    /// d'[i][j][k] = d[j][i][k].
    pub fn comult_flip(&self) -> StructTensor {
        self.opposite()
    }
}

/// Element of U⊗V with fixed bases: coefficient matrix t[i][j] on e_i⊗f_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element2 {
    dim_a: usize,
    dim_b: usize,
    t: Vec<Scalar>,
}

impl Element2 {
    pub fn zero(dim_a: usize, dim_b: usize) -> Self {
        Element2 {
            dim_a,
            dim_b,
            t: vec![Scalar::zero(); dim_a * dim_b],
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_a, self.dim_b)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.t[i * self.dim_b + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.t[i * self.dim_b + j] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &Scalar) {
        let cur = self.get(i, j) + x;
        self.set(i, j, cur);
    }

    pub fn from_entries(dim_a: usize, dim_b: usize, entries: &[(usize, usize, Scalar)]) -> Self {
        let mut e = Element2::zero(dim_a, dim_b);
        for (i, j, x) in entries {
            e.add_to(*i, *j, x);
        }
        e
    }

    pub fn from_int_entries(dim_a: usize, dim_b: usize, entries: &[(usize, usize, i64)]) -> Self {
        Element2::from_entries(
            dim_a,
            dim_b,
            &entries
                .iter()
                .map(|&(i, j, n)| (i, j, int(n)))
                .collect::<Vec<_>>(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(Scalar::is_zero)
    }

    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim_a {
            for j in 0..self.dim_b {
                let x = self.get(i, j);
                if !x.is_zero() {
                    out.push((i, j, x.clone()));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Element2) -> Element2 {
        assert_eq!(self.dims(), other.dims());
        Element2 {
            dim_a: self.dim_a,
            dim_b: self.dim_b,
            t: self.t.iter().zip(&other.t).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Element2) -> Element2 {
        assert_eq!(self.dims(), other.dims());
        Element2 {
            dim_a: self.dim_a,
            dim_b: self.dim_b,
            t: self.t.iter().zip(&other.t).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Element2 {
        Element2 {
            dim_a: self.dim_a,
            dim_b: self.dim_b,
            t: self.t.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element2 {
        Element2 {
            dim_a: self.dim_a,
            dim_b: self.dim_b,
            t: self.t.iter().map(|a| a * c).collect(),
        }
    }

    /// (f⊗g) applied legwise.
    pub fn map_both(&self, f: &Matrix, g: &Matrix) -> Element2 {
        assert_eq!(f.cols(), self.dim_a);
        assert_eq!(g.cols(), self.dim_b);
        let mut out = Element2::zero(f.rows(), g.rows());
        for i in 0..self.dim_a {
            for j in 0..self.dim_b {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for p in 0..f.rows() {
                    let fa = f.get(p, i);
                    if fa.is_zero() {
                        continue;
                    }
                    for q in 0..g.rows() {
                        let gb = g.get(q, j);
                        if !gb.is_zero() {
                            out.add_to(p, q, &(x * fa * gb));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn map_left(&self, f: &Matrix) -> Element2 {
        self.map_both(f, &Matrix::identity(self.dim_b))
    }

    pub fn map_right(&self, g: &Matrix) -> Element2 {
        self.map_both(&Matrix::identity(self.dim_a), g)
    }

    /// As a map V*→U when both legs live in the same space: a* ↦ Σ⟨a*,u_i⟩v_i
    /// has matrix tᵀ in dual coordinates; this returns the raw coefficient
    /// matrix so callers pick the orientation.
    pub fn coeff_matrix(&self) -> Matrix {
        let mut m = Matrix::zero(self.dim_a, self.dim_b);
        for i in 0..self.dim_a {
            for j in 0..self.dim_b {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn from_coeff_matrix(m: &Matrix) -> Element2 {
        let mut e = Element2::zero(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                e.set(i, j, m.get(i, j).clone());
            }
        }
        e
    }
}

/// σ(u⊗v) = v⊗u.
pub fn flip_sigma(x: &Element2) -> Element2 {
    let (da, db) = x.dims();
    let mut out = Element2::zero(db, da);
    for i in 0..da {
        for j in 0..db {
            out.set(j, i, x.get(i, j).clone());
        }
    }
    out
}

/// Element of V⊗V⊗V over one space: coefficients t[i][j][k] on e_i⊗e_j⊗e_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element3 {
    dim: usize,
    t: Vec<Scalar>,
}

impl Element3 {
    pub fn zero(dim: usize) -> Self {
        Element3 {
            dim,
            t: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.t[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, x: Scalar) {
        self.t[(i * self.dim + j) * self.dim + k] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, x: &Scalar) {
        let cur = self.get(i, j, k) + x;
        self.set(i, j, k, cur);
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(Scalar::is_zero)
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let x = self.get(i, j, k);
                    if !x.is_zero() {
                        out.push((i, j, k, x.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Element3) -> Element3 {
        assert_eq!(self.dim, other.dim);
        Element3 {
            dim: self.dim,
            t: self.t.iter().zip(&other.t).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Element3) -> Element3 {
        assert_eq!(self.dim, other.dim);
        Element3 {
            dim: self.dim,
            t: self.t.iter().zip(&other.t).map(|(a, b)| a - b).collect(),
        }
    }

    /// Apply f on one tensor leg (0, 1, or 2), identity on the others.
    pub fn map_leg(&self, leg: usize, f: &Matrix) -> Element3 {
        assert!(leg < 3);
        assert_eq!(f.rows(), self.dim);
        assert_eq!(f.cols(), self.dim);
        let n = self.dim;
        let mut out = Element3::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let x = self.get(i, j, k);
                    if x.is_zero() {
                        continue;
                    }
                    let src = [i, j, k][leg];
                    for p in 0..n {
                        let fp = f.get(p, src);
                        if fp.is_zero() {
                            continue;
                        }
                        let mut idx = [i, j, k];
                        idx[leg] = p;
                        out.add_to(idx[0], idx[1], idx[2], &(x * fp));
                    }
                }
            }
        }
        out
    }
}

/// τ(u⊗v⊗w) = w⊗u⊗v, so coefficients move as out[i][j][k] = x[j][k][i].
pub fn cyclic_tau(x: &Element3) -> Element3 {
    let n = x.dim();
    let mut out = Element3::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set(i, j, k, x.get(j, k, i).clone());
            }
        }
    }
    out
}

pub fn basis_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = num::One::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn sample3() -> Element3 {
        let mut x = Element3::zero(2);
        x.set(0, 1, 1, int(3));
        x.set(1, 0, 0, int(-2));
        x
    }

    #[test]
    fn flip_is_an_involution() {
        let x = Element2::from_int_entries(2, 2, &[(0, 1, 5), (1, 1, -1)]);
        assert_eq!(flip_sigma(&flip_sigma(&x)), x);
        assert_eq!(*flip_sigma(&x).get(1, 0), int(5));
    }

    #[test]
    fn cyclic_permutation_has_order_three() {
        let x = sample3();
        let once = cyclic_tau(&x);
        assert_eq!(*once.get(1, 0, 1), int(3));
        assert_ne!(once, x);
        assert_eq!(cyclic_tau(&cyclic_tau(&once)), x);
    }

    #[test]
    fn bilinear_matches_basis_products() {
        // e_0∘e_0 = e_1, e_0∘e_1 = 2 e_0
        let t = StructTensor::from_int_entries(2, &[(0, 0, 1, 1), (0, 1, 0, 2)]);
        let a = vec![int(1), int(0)];
        let b = vec![int(1), int(3)];
        assert_eq!(t.bilinear(&a, &b), vec![int(6), int(1)]);
    }

    #[test]
    fn left_and_right_ops_agree_with_bilinear() {
        let t = StructTensor::from_int_entries(2, &[(0, 1, 0, 1), (1, 0, 1, 4)]);
        let a = vec![int(2), int(-1)];
        let v = vec![int(1), int(1)];
        assert_eq!(t.left_op(&a).apply(&v), t.bilinear(&a, &v));
        assert_eq!(t.right_op(&a).apply(&v), t.bilinear(&v, &a));
    }

    #[test]
    fn comult_reading_places_legs_correctly() {
        // Δ(e_1) = 2 e_0⊗e_1
        let d = StructTensor::from_int_entries(2, &[(0, 1, 1, 2)]);
        let out = d.comult_basis(1);
        assert_eq!(*out.get(0, 1), int(2));
        assert_eq!(out.entries().len(), 1);
        assert!(d.comult_basis(0).is_zero());
    }

    #[test]
    fn map_leg_touches_only_the_requested_slot() {
        let x = sample3();
        let f = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let y = x.map_leg(2, &f);
        assert_eq!(*y.get(0, 1, 0), int(3));
        assert_eq!(*y.get(1, 0, 1), int(-2));
        assert_eq!(x.map_leg(0, &f).get(1, 1, 1), &int(3));
    }

    #[test]
    fn map_both_applies_operators_legwise() {
        let x = Element2::from_int_entries(2, 2, &[(0, 0, 1)]);
        let f = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let g = Matrix::from_int_rows(&[&[3, 0], &[0, 3]]);
        let y = x.map_both(&f, &g);
        assert_eq!(*y.get(1, 0), int(3));
    }
}
