//! Dendriform and Zinbiel algebras, the splitting of associative products,
//! and the bridges from Rota-Baxter and O-operators back to dendriform
//! structure and onward to 2n-dimensional differential ASI bialgebras.

use crate::algebra::{Algebra, DiffAlgebra};
use crate::bialgebra::{ASIBialgebra, DiffASIBialgebra};
use crate::bimodule::{
    block_diag, dual_bimodule, operator_violations, semidirect_product, theta_family, Bimodule,
    DiffBimodule,
};
use crate::matrix::{commutator, Matrix};
use crate::report::{violation1, CheckReport, LawReport};
use crate::scalar::Scalar;
use crate::tensor::{basis_vector, StructTensor};
use crate::yangbaxter::{
    canonical_r, check_o_operator, check_rota_baxter, coboundary_delta, OOperator,
};

/// Two products ≻ and ≺ whose sum is meant to be associative; the three
/// dendriform axioms are checkable properties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dendriform {
    pub succ: StructTensor,
    pub prec: StructTensor,
}

impl Dendriform {
    pub fn new(succ: StructTensor, prec: StructTensor) -> Self {
        assert_eq!(succ.dim(), prec.dim(), "dimension");
        Dendriform { succ, prec }
    }

    pub fn zero(dim: usize) -> Self {
        Dendriform::new(StructTensor::zero(dim), StructTensor::zero(dim))
    }

    /// ≻ = ·, ≺ = 0 turns any associative product into a dendriform pair.
    pub fn left_trivial(alg: &Algebra) -> Self {
        Dendriform::new(alg.mult.clone(), StructTensor::zero(alg.dim()))
    }

    pub fn dim(&self) -> usize {
        self.succ.dim()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffDendriform {
    pub base: Dendriform,
    pub phi: Vec<Matrix>,
}

impl DiffDendriform {
    pub fn new(base: Dendriform, phi: Vec<Matrix>) -> Self {
        let n = base.dim();
        assert!(
            phi.iter().all(|d| d.rows() == n && d.cols() == n),
            "family shape"
        );
        DiffDendriform { base, phi }
    }
}

/// Stored by ∗ alone; the dendriform reading (≻, ≺) = (∗, ∗ᵒᵖ) is
/// materialized on demand. `phi` may be empty for the plain algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zinbiel {
    pub star: StructTensor,
    pub phi: Vec<Matrix>,
}

impl Zinbiel {
    pub fn new(star: StructTensor, phi: Vec<Matrix>) -> Self {
        let n = star.dim();
        assert!(
            phi.iter().all(|d| d.rows() == n && d.cols() == n),
            "family shape"
        );
        Zinbiel { star, phi }
    }

    pub fn dim(&self) -> usize {
        self.star.dim()
    }

    pub fn dendriform_view(&self) -> DiffDendriform {
        DiffDendriform::new(
            Dendriform::new(self.star.clone(), self.star.opposite()),
            self.phi.clone(),
        )
    }
}

/// The three dendriform identities on all basis triples:
///   (a≺b)≺c = a≺(b≺c + b≻c)
///   (a≻b)≺c = a≻(b≺c)
///   (a≺b + a≻b)≻c = a≻(b≻c)
pub fn check_dendriform(d: &Dendriform) -> CheckReport {
    let n = d.dim();
    let succ = &d.succ;
    let prec = &d.prec;
    let mut prec_sum = Vec::new();
    let mut middle = Vec::new();
    let mut succ_sum = Vec::new();
    for i in 0..n {
        let ei = basis_vector(n, i);
        for j in 0..n {
            let pij = prec.product_of_basis(i, j);
            let sij = succ.product_of_basis(i, j);
            let sum_ij: Vec<Scalar> = pij.iter().zip(&sij).map(|(a, b)| a + b).collect();
            for k in 0..n {
                let ek = basis_vector(n, k);
                let pjk = prec.product_of_basis(j, k);
                let sjk = succ.product_of_basis(j, k);
                let sum_jk: Vec<Scalar> = pjk.iter().zip(&sjk).map(|(a, b)| a + b).collect();

                let lhs = prec.bilinear(&pij, &ek);
                let rhs = prec.bilinear(&ei, &sum_jk);
                let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                prec_sum.extend(violation1(vec![i, j, k], &res));

                let lhs = prec.bilinear(&sij, &ek);
                let rhs = succ.bilinear(&ei, &pjk);
                let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                middle.extend(violation1(vec![i, j, k], &res));

                let lhs = succ.bilinear(&sum_ij, &ek);
                let rhs = succ.bilinear(&ei, &sjk);
                let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                succ_sum.extend(violation1(vec![i, j, k], &res));
            }
        }
    }
    CheckReport::new(vec![
        LawReport::new("prec_absorbs_sum", prec_sum),
        LawReport::new("middle_assoc", middle),
        LawReport::new("succ_absorbs_sum", succ_sum),
    ])
}

/// Leibniz in both products for every ∂_k, one violation per basis pair.
fn leibniz_laws(t: &StructTensor, phi: &[Matrix], name: &str) -> Vec<LawReport> {
    let n = t.dim();
    let mut out = Vec::new();
    for (k, d) in phi.iter().enumerate() {
        let mut v = Vec::new();
        for i in 0..n {
            let ei = basis_vector(n, i);
            let di = d.column(i);
            for j in 0..n {
                let ej = basis_vector(n, j);
                let lhs = d.apply(&t.product_of_basis(i, j));
                let rhs: Vec<Scalar> = t
                    .bilinear(&di, &ej)
                    .iter()
                    .zip(&t.bilinear(&ei, &d.column(j)))
                    .map(|(a, b)| a + b)
                    .collect();
                let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                v.extend(violation1(vec![i, j], &res));
            }
        }
        out.push(LawReport::new(&format!("{name}_{k}"), v));
    }
    out
}

fn commute_laws(phi: &[Matrix]) -> Vec<LawReport> {
    let mut out = Vec::new();
    for k in 0..phi.len() {
        for l in (k + 1)..phi.len() {
            out.push(LawReport::new(
                &format!("commute_{k}_{l}"),
                operator_violations(&commutator(&phi[k], &phi[l]), &[]),
            ));
        }
    }
    out
}

pub fn check_diff_dendriform(dd: &DiffDendriform) -> CheckReport {
    let mut report = check_dendriform(&dd.base);
    for law in leibniz_laws(&dd.base.succ, &dd.phi, "leibniz_succ") {
        report.push(law);
    }
    for law in leibniz_laws(&dd.base.prec, &dd.phi, "leibniz_prec") {
        report.push(law);
    }
    for law in commute_laws(&dd.phi) {
        report.push(law);
    }
    report
}

/// a∗(b∗c) = (a∗b)∗c + (b∗a)∗c on all triples, then the differential laws.
pub fn check_zinbiel(z: &Zinbiel) -> CheckReport {
    let n = z.dim();
    let t = &z.star;
    let mut v = Vec::new();
    for i in 0..n {
        let ei = basis_vector(n, i);
        for j in 0..n {
            let tij = t.product_of_basis(i, j);
            let tji = t.product_of_basis(j, i);
            for k in 0..n {
                let ek = basis_vector(n, k);
                let lhs = t.bilinear(&ei, &t.product_of_basis(j, k));
                let rhs: Vec<Scalar> = t
                    .bilinear(&tij, &ek)
                    .iter()
                    .zip(&t.bilinear(&tji, &ek))
                    .map(|(a, b)| a + b)
                    .collect();
                let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                v.extend(violation1(vec![i, j, k], &res));
            }
        }
    }
    let mut report = CheckReport::new(vec![LawReport::new("zinbiel", v)]);
    for law in leibniz_laws(&z.star, &z.phi, "leibniz") {
        report.push(law);
    }
    for law in commute_laws(&z.phi) {
        report.push(law);
    }
    report
}

/// a·b = a≻b + a≺b. Associative whenever the dendriform axioms hold,
/// commutative in the Zinbiel case.
pub fn associated_algebra(d: &Dendriform) -> Algebra {
    Algebra::new(d.succ.add(&d.prec))
}

/// a≻b = R(a)·b and a≺b = a·R(b). Refuses unless R is Rota-Baxter and
/// commutes with every ∂_k.
pub fn from_rota_baxter(da: &DiffAlgebra, rb: &Matrix) -> Result<DiffDendriform, Box<CheckReport>> {
    let n = da.dim();
    assert_eq!((rb.rows(), rb.cols()), (n, n), "operator shape");
    let mut gate = check_rota_baxter(&da.base, rb);
    for (k, d) in da.phi.iter().enumerate() {
        gate.push(LawReport::new(
            &format!("family_commute_{k}"),
            operator_violations(&commutator(d, rb), &[]),
        ));
    }
    if !gate.pass() {
        return Err(Box::new(gate));
    }
    let mut succ = StructTensor::zero(n);
    let mut prec = StructTensor::zero(n);
    for i in 0..n {
        let ri = rb.column(i);
        let ei = basis_vector(n, i);
        for j in 0..n {
            let ej = basis_vector(n, j);
            let s = da.base.mult.bilinear(&ri, &ej);
            let p = da.base.mult.bilinear(&ei, &rb.column(j));
            for (k, x) in s.into_iter().enumerate() {
                succ.set(i, j, k, x);
            }
            for (k, x) in p.into_iter().enumerate() {
                prec.set(i, j, k, x);
            }
        }
    }
    Ok(DiffDendriform::new(
        Dendriform::new(succ, prec),
        da.phi.clone(),
    ))
}

/// u≻v = l(T(u))v and u≺v = r(T(v))u on V, with Ω as the derivation family.
/// Refuses unless T passes check_o_operator.
pub fn from_o_operator(
    da: &DiffAlgebra,
    dbm: &DiffBimodule,
    t: &OOperator,
) -> Result<DiffDendriform, Box<CheckReport>> {
    let gate = check_o_operator(da, dbm, t);
    if !gate.pass() {
        return Err(Box::new(gate));
    }
    let m = dbm.base.v_dim;
    let mut succ = StructTensor::zero(m);
    let mut prec = StructTensor::zero(m);
    for s in 0..m {
        let act_l = dbm.base.act_left(&t.column(s));
        let act_r = dbm.base.act_right(&t.column(s));
        for u in 0..m {
            for (w, x) in act_l.column(u).into_iter().enumerate() {
                succ.set(s, u, w, x);
            }
            for (w, x) in act_r.column(u).into_iter().enumerate() {
                prec.set(u, s, w, x);
            }
        }
    }
    Ok(DiffDendriform::new(
        Dendriform::new(succ, prec),
        dbm.omega.clone(),
    ))
}

/// Builds the 2n-dimensional differential ASI bialgebra carried by a
/// differential dendriform algebra: the associated algebra acts on its dual
/// through R*_≺ and L*_≻, the family on the dual copy is θ_k·id − ∂_k*, the
/// r-element is the canonical pairing element, and Δ is its coboundary.
pub fn dendriform_to_diff_asi(
    dd: &DiffDendriform,
    theta: &[Scalar],
) -> Result<DiffASIBialgebra, Box<CheckReport>> {
    assert_eq!(theta.len(), dd.phi.len(), "family sizes");
    let gate = check_diff_dendriform(dd);
    if !gate.pass() {
        return Err(Box::new(gate));
    }
    let n = dd.base.dim();
    let da = DiffAlgebra::new(associated_algebra(&dd.base), dd.phi.clone());
    let actions = Bimodule::new(
        n,
        n,
        (0..n).map(|i| dd.base.succ.left_op_basis(i)).collect(),
        (0..n).map(|i| dd.base.prec.right_op_basis(i)).collect(),
    );
    let pi = theta_family(&dd.phi, theta);
    let ambient = semidirect_product(&da, &dual_bimodule(&actions, &pi))?;
    let r = canonical_r(n);
    let coalg = coboundary_delta(&ambient.base, &r);
    let psi_a = theta_family(&dd.phi, theta);
    let psi: Vec<Matrix> = psi_a
        .iter()
        .zip(&dd.phi)
        .map(|(p, d)| block_diag(p, &d.transpose()))
        .collect();
    Ok(DiffASIBialgebra::new(
        ASIBialgebra::new(ambient.base.clone(), coalg),
        ambient.phi.clone(),
        psi,
    ))
}
