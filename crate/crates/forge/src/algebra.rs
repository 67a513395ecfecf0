//! Algebras and differential algebras given by structure constants, with
//! explicit law checks and exact derivation-space solving.

use crate::matrix::{commutator, nullspace, Matrix};
use crate::report::{residual_from_vec, CheckReport, LawReport, Violation};
use crate::scalar::Scalar;
use crate::tensor::StructTensor;
use num::Zero;

/// A bilinear product on a finite basis. Laws are checkable properties, not
/// construction-time requirements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub mult: StructTensor,
}

impl Algebra {
    pub fn new(mult: StructTensor) -> Self {
        Algebra { mult }
    }

    pub fn dim(&self) -> usize {
        self.mult.dim()
    }
}

/// An algebra together with an ordered family of declared derivations.
/// Validity of the family is established by `check_diff_algebra`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffAlgebra {
    pub base: Algebra,
    pub phi: Vec<Matrix>,
}

impl DiffAlgebra {
    pub fn new(base: Algebra, phi: Vec<Matrix>) -> Self {
        let n = base.dim();
        assert!(
            phi.iter().all(|d| d.rows() == n && d.cols() == n),
            "derivation shape"
        );
        DiffAlgebra { base, phi }
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Associative,
    Commutative,
}

pub fn multiply(alg: &Algebra, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    alg.mult.bilinear(a, b)
}

/// Checks a law on all basis tuples; bilinearity extends the verdict to the
/// whole space. Failing tuples are all listed, with exact residuals.
pub fn check_law(alg: &Algebra, law: Law) -> CheckReport {
    let n = alg.dim();
    let c = &alg.mult;
    let mut violations = Vec::new();
    match law {
        Law::Associative => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let mut res = vec![Scalar::zero(); n];
                        for m in 0..n {
                            let left = c.get(i, j, m);
                            if !left.is_zero() {
                                for (l, r) in res.iter_mut().enumerate() {
                                    let w = c.get(m, k, l);
                                    if !w.is_zero() {
                                        *r += left * w;
                                    }
                                }
                            }
                            let right = c.get(j, k, m);
                            if !right.is_zero() {
                                for (l, r) in res.iter_mut().enumerate() {
                                    let w = c.get(i, m, l);
                                    if !w.is_zero() {
                                        *r -= right * w;
                                    }
                                }
                            }
                        }
                        if res.iter().any(|x| !x.is_zero()) {
                            violations.push(Violation {
                                indices: vec![i, j, k],
                                residual: residual_from_vec(&res),
                            });
                        }
                    }
                }
            }
            CheckReport::new(vec![LawReport::new("associative", violations)])
        }
        Law::Commutative => {
            for i in 0..n {
                for j in 0..n {
                    let res: Vec<Scalar> = (0..n)
                        .map(|k| c.get(i, j, k) - c.get(j, i, k))
                        .collect();
                    if res.iter().any(|x| !x.is_zero()) {
                        violations.push(Violation {
                            indices: vec![i, j],
                            residual: residual_from_vec(&res),
                        });
                    }
                }
            }
            CheckReport::new(vec![LawReport::new("commutative", violations)])
        }
    }
}

/// Leibniz rule D(a∘b) = D(a)∘b + a∘D(b), checked on all basis pairs.
pub fn check_derivation(alg: &Algebra, d: &Matrix) -> CheckReport {
    let n = alg.dim();
    assert!(d.rows() == n && d.cols() == n, "derivation shape");
    CheckReport::new(vec![LawReport::new("leibniz", leibniz_violations(alg, d))])
}

fn leibniz_violations(alg: &Algebra, d: &Matrix) -> Vec<Violation> {
    let n = alg.dim();
    let c = &alg.mult;
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut res = vec![Scalar::zero(); n];
            for (k, r) in res.iter_mut().enumerate() {
                for q in 0..n {
                    let cq = c.get(i, j, q);
                    if !cq.is_zero() {
                        *r += cq * d.get(k, q);
                    }
                }
                for p in 0..n {
                    let dpi = d.get(p, i);
                    if !dpi.is_zero() {
                        *r -= dpi * c.get(p, j, k);
                    }
                    let dpj = d.get(p, j);
                    if !dpj.is_zero() {
                        *r -= dpj * c.get(i, p, k);
                    }
                }
            }
            if res.iter().any(|x| !x.is_zero()) {
                violations.push(Violation {
                    indices: vec![i, j],
                    residual: residual_from_vec(&res),
                });
            }
        }
    }
    violations
}

/// Exact basis of the space of derivations, solved from the Leibniz linear
/// system in dim² unknowns d[p][q] (entry order p*dim + q). The returned
/// basis is the canonical nullspace basis, so output is deterministic.
pub fn derivation_space(alg: &Algebra) -> Vec<Matrix> {
    let n = alg.dim();
    let c = &alg.mult;
    let mut sys = Matrix::zero(n * n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let row = (i * n + j) * n + k;
                for q in 0..n {
                    let cur = sys.get(row, k * n + q) + c.get(i, j, q);
                    sys.set(row, k * n + q, cur);
                }
                for p in 0..n {
                    let cur = sys.get(row, p * n + i) - c.get(p, j, k);
                    sys.set(row, p * n + i, cur);
                    let cur = sys.get(row, p * n + j) - c.get(i, p, k);
                    sys.set(row, p * n + j, cur);
                }
            }
        }
    }
    nullspace(&sys)
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zero(n, n);
            for p in 0..n {
                for q in 0..n {
                    m.set(p, q, v[p * n + q].clone());
                }
            }
            m
        })
        .collect()
}

/// Flattens a square map into the coordinate order used by
/// `derivation_space`, for span tests against its output.
pub fn flatten_op(d: &Matrix) -> Vec<Scalar> {
    let n = d.rows();
    let mut v = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            v.push(d.get(p, q).clone());
        }
    }
    v
}

/// Every member of Φ satisfies Leibniz, all pairs commute, and optionally
/// the product is commutative.
pub fn check_diff_algebra(da: &DiffAlgebra, commutative: bool) -> CheckReport {
    let mut report = CheckReport::default();
    for (k, d) in da.phi.iter().enumerate() {
        report.push(LawReport::new(
            &format!("derivation_{k}"),
            leibniz_violations(&da.base, d),
        ));
    }
    for k in 0..da.phi.len() {
        for l in (k + 1)..da.phi.len() {
            let comm = commutator(&da.phi[k], &da.phi[l]);
            let mut violations = Vec::new();
            for q in 0..da.dim() {
                let col = comm.column(q);
                if col.iter().any(|x| !x.is_zero()) {
                    violations.push(Violation {
                        indices: vec![q],
                        residual: residual_from_vec(&col),
                    });
                }
            }
            report.push(LawReport::new(&format!("commute_{k}_{l}"), violations));
        }
    }
    if commutative {
        report.merge(check_law(&da.base, Law::Commutative));
    }
    report
}
