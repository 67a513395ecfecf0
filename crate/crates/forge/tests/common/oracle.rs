//! Independent cross-check computations for the test suites.
//!
//! Everything here is written straight from the defining formulas with plain
//! nested loops and its own elimination routine. None of it calls into the
//! library's solvers or tensor types, so agreement between the two paths is
//! evidence, not tautology.

use num::{BigRational, One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(n.into())
}

/// Struct constants as a nested cube: c[i][j][k] = coefficient of e_k in
/// e_i ∘ e_j.
pub type Cube = Vec<Vec<Vec<Q>>>;

pub fn cube(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Cube {
    let mut c = vec![vec![vec![Q::zero(); dim]; dim]; dim];
    for &(i, j, k, x) in entries {
        c[i][j][k] += q(x);
    }
    c
}

/// Forward Gaussian elimination; returns the echelon rows and pivot columns.
fn echelon(mut m: Vec<Vec<Q>>, n: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == m.len() {
            break;
        }
        let Some(sel) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, sel);
        for i in (r + 1)..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &m[r][col];
            for j in col..n {
                let x = &m[i][j] - &f * &m[r][j];
                m[i][j] = x;
            }
        }
        pivots.push(col);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let n = rows[0].len();
    echelon(rows.to_vec(), n).1.len()
}

/// Basis of {x : rows·x = 0} by back-substitution, one vector per free
/// column. Not canonicalized; span is what matters here.
pub fn solve_homogeneous(rows: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    let (m, pivots) = echelon(rows.to_vec(), n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut x = vec![Q::zero(); n];
        x[fc] = Q::one();
        for ri in (0..pivots.len()).rev() {
            let pc = pivots[ri];
            let mut s = Q::zero();
            for j in (pc + 1)..n {
                if !m[ri][j].is_zero() && !x[j].is_zero() {
                    s += &m[ri][j] * &x[j];
                }
            }
            x[pc] = -s / &m[ri][pc];
        }
        basis.push(x);
    }
    basis
}

pub fn same_span(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let ra = rank(a);
    if ra != rank(b) {
        return false;
    }
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    rank(&all) == ra
}

/// Rows of the linear system cutting out derivations of the product c.
/// Unknowns are matrix entries d[p][q] (coefficient of e_p in D(e_q)),
/// flattened as p*dim + q. One row per basis triple (i, j, k):
/// coefficient of e_k in D(e_i∘e_j) - D(e_i)∘e_j - e_i∘D(e_j).
pub fn derivation_system(c: &Cube) -> Vec<Vec<Q>> {
    let n = c.len();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Q::zero(); n * n];
                for qq in 0..n {
                    row[k * n + qq] += &c[i][j][qq];
                }
                for p in 0..n {
                    row[p * n + i] -= &c[p][j][k];
                }
                for qq in 0..n {
                    row[qq * n + j] -= &c[i][qq][k];
                }
                rows.push(row);
            }
        }
    }
    rows
}

pub fn derivation_basis(c: &Cube) -> Vec<Vec<Q>> {
    let n = c.len();
    solve_homogeneous(&derivation_system(c), n * n)
}

/// Direct substitution check of the Leibniz rule for a flattened matrix,
/// expanding both sides on every basis pair.
pub fn satisfies_leibniz(c: &Cube, d: &[Q]) -> bool {
    let n = c.len();
    let at = |p: usize, qq: usize| &d[p * n + qq];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut lhs = Q::zero();
                for qq in 0..n {
                    lhs += &c[i][j][qq] * at(k, qq);
                }
                let mut rhs = Q::zero();
                for p in 0..n {
                    rhs += at(p, i) * &c[p][j][k];
                }
                for qq in 0..n {
                    rhs += at(qq, j) * &c[i][qq][k];
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Monomial of r = Σ coeff · (e_a ⊗ e_b).
pub type Mono2 = (usize, usize, Q);

/// The combination r12r13 + r13r23 - r23r12, expanded monomial pair by
/// monomial pair:
///   r12r13 = Σ (a_i∘a_j) ⊗ b_i ⊗ b_j
///   r13r23 = Σ a_i ⊗ a_j ⊗ (b_i∘b_j)
///   r23r12 = Σ a_j ⊗ (a_i∘b_j) ⊗ b_i
pub fn aybe_combination(c: &Cube, r: &[Mono2]) -> Vec<Vec<Vec<Q>>> {
    let n = c.len();
    let mut out = vec![vec![vec![Q::zero(); n]; n]; n];
    for (ai, bi, wi) in r {
        for (aj, bj, wj) in r {
            let w = wi * wj;
            for k in 0..n {
                let p = &c[*ai][*aj][k];
                if !p.is_zero() {
                    out[k][*bi][*bj] += &w * p;
                }
                let p = &c[*bi][*bj][k];
                if !p.is_zero() {
                    out[*ai][*aj][k] += &w * p;
                }
                let p = &c[*ai][*bj][k];
                if !p.is_zero() {
                    out[*aj][k][*bi] -= &w * p;
                }
            }
        }
    }
    out
}
