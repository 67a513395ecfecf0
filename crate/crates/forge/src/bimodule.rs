//! Bimodules over (differential) algebras, admissible families, duals,
//! semi-direct products, and matched pairs.
//!
//! Action data is stored per algebra basis vector: l[i] and r[i] are the
//! vDim×vDim matrices by which e_i acts on V from the left and right.

use crate::algebra::{check_diff_algebra, check_law, Algebra, DiffAlgebra, Law};
use crate::matrix::{commutator, Matrix};
use crate::report::{residual_from_vec, CheckReport, LawReport, Violation};
use crate::scalar::Scalar;
use crate::tensor::StructTensor;
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    pub alg_dim: usize,
    pub v_dim: usize,
    pub l: Vec<Matrix>,
    pub r: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(alg_dim: usize, v_dim: usize, l: Vec<Matrix>, r: Vec<Matrix>) -> Self {
        assert_eq!(l.len(), alg_dim, "one left action per basis vector");
        assert_eq!(r.len(), alg_dim, "one right action per basis vector");
        assert!(
            l.iter().chain(&r).all(|m| m.rows() == v_dim && m.cols() == v_dim),
            "action shape"
        );
        Bimodule { alg_dim, v_dim, l, r }
    }

    /// Left and right multiplication of the algebra on itself.
    pub fn regular(alg: &Algebra) -> Self {
        let n = alg.dim();
        Bimodule::new(
            n,
            n,
            (0..n).map(|i| alg.mult.left_op_basis(i)).collect(),
            (0..n).map(|i| alg.mult.right_op_basis(i)).collect(),
        )
    }

    /// Action of a general algebra element, by linearity.
    pub fn act_left(&self, a: &[Scalar]) -> Matrix {
        combine(&self.l, a, self.v_dim)
    }

    pub fn act_right(&self, a: &[Scalar]) -> Matrix {
        combine(&self.r, a, self.v_dim)
    }
}

fn combine(mats: &[Matrix], a: &[Scalar], v_dim: usize) -> Matrix {
    assert_eq!(a.len(), mats.len(), "coefficient count");
    let mut out = Matrix::zero(v_dim, v_dim);
    for (i, x) in a.iter().enumerate() {
        if !x.is_zero() {
            out = out.add(&mats[i].scale(x));
        }
    }
    out
}

/// Bimodule with a declared family Ω = {α_k} matching the algebra's Φ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffBimodule {
    pub base: Bimodule,
    pub omega: Vec<Matrix>,
}

impl DiffBimodule {
    pub fn new(base: Bimodule, omega: Vec<Matrix>) -> Self {
        let v = base.v_dim;
        assert!(omega.iter().all(|m| m.rows() == v && m.cols() == v), "family shape");
        DiffBimodule { base, omega }
    }
}

/// Bimodule with a declared family Π = {β_k}; admissibility relates Π to Φ
/// through the mirrored Leibniz identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleQuadruple {
    pub base: Bimodule,
    pub pi: Vec<Matrix>,
}

impl AdmissibleQuadruple {
    pub fn new(base: Bimodule, pi: Vec<Matrix>) -> Self {
        let v = base.v_dim;
        assert!(pi.iter().all(|m| m.rows() == v && m.cols() == v), "family shape");
        AdmissibleQuadruple { base, pi }
    }
}

/// Violations of a matrix identity, one per basis vector of V on which the
/// residual operator is nonzero; `prefix` indices identify the instantiation.
pub(crate) fn operator_violations(residual: &Matrix, prefix: &[usize]) -> Vec<Violation> {
    let mut out = Vec::new();
    for q in 0..residual.cols() {
        let col = residual.column(q);
        if col.iter().any(|x| !x.is_zero()) {
            let mut indices = prefix.to_vec();
            indices.push(q);
            out.push(Violation {
                indices,
                residual: residual_from_vec(&col),
            });
        }
    }
    out
}

/// The three bimodule identities on basis pairs:
/// l(a)l(b) = l(a∘b), r(b)r(a) = r(a∘b), r(b)l(a) = l(a)r(b).
pub fn check_bimodule(alg: &Algebra, bm: &Bimodule) -> CheckReport {
    let n = alg.dim();
    assert_eq!(bm.alg_dim, n, "algebra dimension");
    let c = &alg.mult;
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut compat = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lij = combine(&bm.l, &c.product_of_basis(i, j), bm.v_dim);
            let rij = combine(&bm.r, &c.product_of_basis(i, j), bm.v_dim);
            left.extend(operator_violations(&bm.l[i].mul(&bm.l[j]).sub(&lij), &[i, j]));
            right.extend(operator_violations(&bm.r[j].mul(&bm.r[i]).sub(&rij), &[i, j]));
            compat.extend(operator_violations(
                &bm.r[j].mul(&bm.l[i]).sub(&bm.l[i].mul(&bm.r[j])),
                &[i, j],
            ));
        }
    }
    CheckReport::new(vec![
        LawReport::new("left_action", left),
        LawReport::new("right_action", right),
        LawReport::new("action_compat", compat),
    ])
}

fn family_commute_laws(family: &[Matrix], name: &str) -> Vec<LawReport> {
    let mut laws = Vec::new();
    for k in 0..family.len() {
        for l in (k + 1)..family.len() {
            laws.push(LawReport::new(
                &format!("{name}_commute_{k}_{l}"),
                operator_violations(&commutator(&family[k], &family[l]), &[]),
            ));
        }
    }
    laws
}

/// Leibniz compatibility of Ω with Φ on both actions:
/// α_k(l(a)v) = l(∂_k a)v + l(a)α_k(v) and the mirrored right version.
pub fn check_diff_bimodule(da: &DiffAlgebra, dbm: &DiffBimodule) -> CheckReport {
    assert_eq!(da.phi.len(), dbm.omega.len(), "family size");
    let n = da.dim();
    let bm = &dbm.base;
    let mut report = check_bimodule(&da.base, bm);
    report.laws.extend(family_commute_laws(&dbm.omega, "omega"));
    for (k, alpha) in dbm.omega.iter().enumerate() {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..n {
            let dphi_i = da.phi[k].column(i);
            let l_dphi = combine(&bm.l, &dphi_i, bm.v_dim);
            let r_dphi = combine(&bm.r, &dphi_i, bm.v_dim);
            left.extend(operator_violations(
                &alpha.mul(&bm.l[i]).sub(&l_dphi).sub(&bm.l[i].mul(alpha)),
                &[i],
            ));
            right.extend(operator_violations(
                &alpha.mul(&bm.r[i]).sub(&r_dphi).sub(&bm.r[i].mul(alpha)),
                &[i],
            ));
        }
        report.push(LawReport::new(&format!("leibniz_left_{k}"), left));
        report.push(LawReport::new(&format!("leibniz_right_{k}"), right));
    }
    report
}

/// (V*, r*, l*, Π*): actions swap and transpose, the family transposes.
/// Validity is the caller's question, via check_diff_bimodule.
pub fn dual_bimodule(bm: &Bimodule, pi: &[Matrix]) -> DiffBimodule {
    let l = bm.r.iter().map(Matrix::transpose).collect();
    let r = bm.l.iter().map(Matrix::transpose).collect();
    DiffBimodule::new(
        Bimodule::new(bm.alg_dim, bm.v_dim, l, r),
        pi.iter().map(Matrix::transpose).collect(),
    )
}

/// Mirrored Leibniz identities for Π against Φ:
/// r(a)β_k(v) = r(∂_k a)v + β_k(r(a)v) and the left version.
pub fn check_admissible(da: &DiffAlgebra, aq: &AdmissibleQuadruple) -> CheckReport {
    assert_eq!(da.phi.len(), aq.pi.len(), "family size");
    let n = da.dim();
    let bm = &aq.base;
    let mut report = CheckReport::default();
    report.laws.extend(family_commute_laws(&aq.pi, "pi"));
    for (k, beta) in aq.pi.iter().enumerate() {
        let mut right = Vec::new();
        let mut left = Vec::new();
        for i in 0..n {
            let dphi_i = da.phi[k].column(i);
            let r_dphi = combine(&bm.r, &dphi_i, bm.v_dim);
            let l_dphi = combine(&bm.l, &dphi_i, bm.v_dim);
            right.extend(operator_violations(
                &bm.r[i].mul(beta).sub(&r_dphi).sub(&beta.mul(&bm.r[i])),
                &[i],
            ));
            left.extend(operator_violations(
                &bm.l[i].mul(beta).sub(&l_dphi).sub(&beta.mul(&bm.l[i])),
                &[i],
            ));
        }
        report.push(LawReport::new(&format!("mirror_right_{k}"), right));
        report.push(LawReport::new(&format!("mirror_left_{k}"), left));
    }
    report
}

/// {−α_k + θ_k·id}: the shifted family that is admissible whenever Ω is a
/// differential-bimodule family.
pub fn theta_family(omega: &[Matrix], theta: &[Scalar]) -> Vec<Matrix> {
    assert_eq!(omega.len(), theta.len(), "family length");
    omega
        .iter()
        .zip(theta)
        .map(|(a, t)| Matrix::identity(a.rows()).scale(t).sub(a))
        .collect()
}

/// Product (a+u)(b+v) = ab + l(a)v + r(b)u on the block basis [A then V],
/// with family Φ+Ω block-diagonal. Refuses invalid inputs, returning the
/// failing report.
pub fn semidirect_product(
    da: &DiffAlgebra,
    dbm: &DiffBimodule,
) -> Result<DiffAlgebra, Box<CheckReport>> {
    let report = check_diff_bimodule(da, dbm);
    if !report.pass() {
        return Err(Box::new(report));
    }
    Ok(semidirect_product_unchecked(da, dbm))
}

pub fn semidirect_product_unchecked(da: &DiffAlgebra, dbm: &DiffBimodule) -> DiffAlgebra {
    let n = da.dim();
    let m = dbm.base.v_dim;
    let mut c = StructTensor::zero(n + m);
    for (i, j, k, x) in da.base.mult.entries() {
        c.set(i, j, k, x);
    }
    for i in 0..n {
        for t in 0..m {
            for s in 0..m {
                c.set(i, n + t, n + s, dbm.base.l[i].get(s, t).clone());
                c.set(n + t, i, n + s, dbm.base.r[i].get(s, t).clone());
            }
        }
    }
    let phi = da
        .phi
        .iter()
        .zip(&dbm.omega)
        .map(|(p, o)| block_diag(p, o))
        .collect();
    DiffAlgebra::new(Algebra::new(c), phi)
}

pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.rows(), b.rows());
    let mut out = Matrix::zero(n + m, n + m);
    for i in 0..n {
        for j in 0..a.cols() {
            out.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..m {
        for j in 0..b.cols() {
            out.set(n + i, n + j, b.get(i, j).clone());
        }
    }
    out
}

/// Action data for a matched pair: each algebra acts on the other.
/// la[i], ra[i] are bDim×bDim (A acting on B); lb[s], rb[s] are aDim×aDim.
#[derive(Debug, Clone)]
pub struct MatchedPairActions {
    pub la: Vec<Matrix>,
    pub ra: Vec<Matrix>,
    pub lb: Vec<Matrix>,
    pub rb: Vec<Matrix>,
}

/// The product (a+b)⋆(a'+b') = (a·a' + r_B(b')a + l_B(b)a') + (b·b' + l_A(a)b' + r_A(a')b)
/// on [A then B] with family Φ_A+Φ_B, assembled without validation.
pub fn matched_pair_product(
    a: &DiffAlgebra,
    b: &DiffAlgebra,
    actions: &MatchedPairActions,
) -> DiffAlgebra {
    let n = a.dim();
    let m = b.dim();
    assert_eq!(a.phi.len(), b.phi.len(), "family size");
    let mut c = StructTensor::zero(n + m);
    for (i, j, k, x) in a.base.mult.entries() {
        c.set(i, j, k, x);
    }
    for (s, t, u, x) in b.base.mult.entries() {
        c.set(n + s, n + t, n + u, x);
    }
    for i in 0..n {
        for t in 0..m {
            for k in 0..n {
                c.set(i, n + t, k, actions.rb[t].get(k, i).clone());
                c.set(n + t, i, k, actions.lb[t].get(k, i).clone());
            }
            for s in 0..m {
                c.set(i, n + t, n + s, actions.la[i].get(s, t).clone());
                c.set(n + t, i, n + s, actions.ra[i].get(s, t).clone());
            }
        }
    }
    let phi: Vec<Matrix> = a
        .phi
        .iter()
        .zip(&b.phi)
        .map(|(p, q)| block_diag(p, q))
        .collect();
    DiffAlgebra::new(Algebra::new(c), phi)
}

/// Assembles the matched-pair product and verifies the laws through it: ⋆
/// must make a differential algebra and both cross actions must be
/// differential bimodules.
pub fn matched_pair_assemble(
    a: &DiffAlgebra,
    b: &DiffAlgebra,
    actions: &MatchedPairActions,
) -> (DiffAlgebra, CheckReport) {
    let n = a.dim();
    let m = b.dim();
    let assembled = matched_pair_product(a, b, actions);

    let mut report = check_law(&assembled.base, Law::Associative).namespaced("assembled");
    report.merge(check_diff_algebra(&assembled, false).namespaced("assembled"));
    let cross_a = DiffBimodule::new(
        Bimodule::new(n, m, actions.la.clone(), actions.ra.clone()),
        b.phi.clone(),
    );
    report.merge(check_diff_bimodule(a, &cross_a).namespaced("cross_a"));
    let cross_b = DiffBimodule::new(
        Bimodule::new(m, n, actions.lb.clone(), actions.rb.clone()),
        a.phi.clone(),
    );
    report.merge(check_diff_bimodule(b, &cross_b).namespaced("cross_b"));
    (assembled, report)
}
