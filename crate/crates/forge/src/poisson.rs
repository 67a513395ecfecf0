//! Poisson algebras induced by pairs of commuting derivations on commutative
//! algebras, their modules and bialgebras, the Poisson Yang-Baxter equation,
//! and the pre-Poisson picture over Zinbiel algebras.
//!
//! Biconditional statements are always evaluated by computing both sides in
//! full and flagging disagreement, never by rewriting one side into the other.

use crate::algebra::{check_diff_algebra, check_law, Algebra, DiffAlgebra, Law};
use crate::bialgebra::{
    check_asi, check_coalgebra, check_diff_asi, ASIBialgebra, BilForm, Coalgebra, DiffASIBialgebra,
};
use crate::bimodule::{check_diff_bimodule, operator_violations, Bimodule, DiffBimodule};
use crate::dendriform::{associated_algebra, check_zinbiel, dendriform_to_diff_asi, Zinbiel};
use crate::matrix::Matrix;
use crate::report::{violation1, violation2, violation3, CheckReport, LawReport, Violation};
use crate::scalar::{int, Scalar};
use crate::tensor::{basis_vector, cyclic_tau, flip_sigma, Element2, Element3, StructTensor};
use crate::yangbaxter::{aybe_residual, canonical_r, coboundary_delta, flag_violation, RElement};
use num::Zero;

/// Bracket and product on one carrier; the five Poisson laws are checkable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonAlgebra {
    pub bracket: StructTensor,
    pub prod: StructTensor,
}

impl PoissonAlgebra {
    pub fn new(bracket: StructTensor, prod: StructTensor) -> Self {
        assert_eq!(bracket.dim(), prod.dim(), "dimension");
        PoissonAlgebra { bracket, prod }
    }

    pub fn zero(dim: usize) -> Self {
        PoissonAlgebra::new(StructTensor::zero(dim), StructTensor::zero(dim))
    }

    pub fn dim(&self) -> usize {
        self.prod.dim()
    }

    /// ad(e_i), the bracket action of the i-th basis vector.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.bracket.left_op_basis(i)
    }
}

/// Actions ρ (bracket side) and μ (product side) on V, one matrix per basis
/// vector of the algebra. The product context is commutative, so μ carries
/// both one-sided actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonModule {
    pub alg_dim: usize,
    pub v_dim: usize,
    pub rho: Vec<Matrix>,
    pub mu: Vec<Matrix>,
}

impl PoissonModule {
    pub fn new(alg_dim: usize, v_dim: usize, rho: Vec<Matrix>, mu: Vec<Matrix>) -> Self {
        assert_eq!(rho.len(), alg_dim, "action count");
        assert_eq!(mu.len(), alg_dim, "action count");
        assert!(
            rho.iter()
                .chain(&mu)
                .all(|m| m.rows() == v_dim && m.cols() == v_dim),
            "action shape"
        );
        PoissonModule {
            alg_dim,
            v_dim,
            rho,
            mu,
        }
    }

    /// (A, ad, L) acting on itself.
    pub fn regular(p: &PoissonAlgebra) -> Self {
        let n = p.dim();
        PoissonModule::new(
            n,
            n,
            (0..n).map(|i| p.ad_basis(i)).collect(),
            (0..n).map(|i| p.prod.left_op_basis(i)).collect(),
        )
    }

    pub fn act_rho(&self, a: &[Scalar]) -> Matrix {
        combine(&self.rho, a, self.v_dim)
    }

    pub fn act_mu(&self, a: &[Scalar]) -> Matrix {
        combine(&self.mu, a, self.v_dim)
    }
}

fn combine(mats: &[Matrix], a: &[Scalar], dim: usize) -> Matrix {
    assert_eq!(mats.len(), a.len(), "coefficient count");
    let mut out = Matrix::zero(dim, dim);
    for (m, x) in mats.iter().zip(a) {
        if !x.is_zero() {
            out = out.add(&m.scale(x));
        }
    }
    out
}

/// Poisson algebra with a Lie cobracket δ and a comultiplication Δ, both in
/// the structure-tensor container read as x(e_k) = Σ t[i][j][k] e_i⊗e_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonBialgebra {
    pub alg: PoissonAlgebra,
    pub cobracket: StructTensor,
    pub comult: StructTensor,
}

impl PoissonBialgebra {
    pub fn new(alg: PoissonAlgebra, cobracket: StructTensor, comult: StructTensor) -> Self {
        let n = alg.dim();
        assert_eq!(cobracket.dim(), n, "dimension");
        assert_eq!(comult.dim(), n, "dimension");
        PoissonBialgebra {
            alg,
            cobracket,
            comult,
        }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
}

/// Pre-Lie product ⋄ and Zinbiel product ∗ on one carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrePoisson {
    pub diamond: StructTensor,
    pub star: StructTensor,
}

impl PrePoisson {
    pub fn new(diamond: StructTensor, star: StructTensor) -> Self {
        assert_eq!(diamond.dim(), star.dim(), "dimension");
        PrePoisson { diamond, star }
    }

    pub fn dim(&self) -> usize {
        self.star.dim()
    }
}

/// Antisymmetry, Jacobi, and the Leibniz rule [a, b·c] = [a,b]·c + b·[a,c],
/// plus commutativity and associativity of the product.
pub fn check_poisson(p: &PoissonAlgebra) -> CheckReport {
    let n = p.dim();
    let br = &p.bracket;
    let pr = &p.prod;
    let mut report = check_law(&Algebra::new(pr.clone()), Law::Commutative);
    report.merge(check_law(&Algebra::new(pr.clone()), Law::Associative));

    let mut antisym = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let res: Vec<Scalar> = br
                .product_of_basis(i, j)
                .iter()
                .zip(&br.product_of_basis(j, i))
                .map(|(a, b)| a + b)
                .collect();
            antisym.extend(violation1(vec![i, j], &res));
        }
    }
    report.push(LawReport::new("antisymmetric", antisym));

    let mut jacobi = Vec::new();
    let mut leibniz = Vec::new();
    for i in 0..n {
        let ei = basis_vector(n, i);
        for j in 0..n {
            let ej = basis_vector(n, j);
            let bij = br.product_of_basis(i, j);
            for k in 0..n {
                let ek = basis_vector(n, k);
                let t1 = br.bilinear(&bij, &ek);
                let t2 = br.bilinear(&br.product_of_basis(j, k), &ei);
                let t3 = br.bilinear(&br.product_of_basis(k, i), &ej);
                let res: Vec<Scalar> = t1
                    .iter()
                    .zip(&t2)
                    .zip(&t3)
                    .map(|((a, b), c)| a + b + c)
                    .collect();
                jacobi.extend(violation1(vec![i, j, k], &res));

                let lhs = br.bilinear(&ei, &pr.product_of_basis(j, k));
                let r1 = pr.bilinear(&bij, &ek);
                let r2 = pr.bilinear(&ej, &br.product_of_basis(i, k));
                let res: Vec<Scalar> = lhs
                    .iter()
                    .zip(&r1)
                    .zip(&r2)
                    .map(|((a, b), c)| a - b - c)
                    .collect();
                leibniz.extend(violation1(vec![i, j, k], &res));
            }
        }
    }
    report.push(LawReport::new("jacobi", jacobi));
    report.push(LawReport::new("leibniz", leibniz));
    report
}

/// [a, b] = Σ ∂₁(a)·∂₂(b) − ∂₂(a)·∂₁(b) over the given index pairs into Φ.
/// Refuses a base that is not a commutative differential algebra.
pub fn induce_poisson(
    da: &DiffAlgebra,
    pairs: &[(usize, usize)],
) -> Result<PoissonAlgebra, Box<CheckReport>> {
    let gate = check_diff_algebra(da, true);
    if !gate.pass() {
        return Err(Box::new(gate));
    }
    let n = da.dim();
    let mut bracket = StructTensor::zero(n);
    for &(p1, p2) in pairs {
        let d1 = &da.phi[p1];
        let d2 = &da.phi[p2];
        for i in 0..n {
            for j in 0..n {
                let pos = da.base.mult.bilinear(&d1.column(i), &d2.column(j));
                let neg = da.base.mult.bilinear(&d2.column(i), &d1.column(j));
                for (k, (a, b)) in pos.iter().zip(&neg).enumerate() {
                    bracket.add_to(i, j, k, &(a - b));
                }
            }
        }
    }
    Ok(PoissonAlgebra::new(bracket, da.base.mult.clone()))
}

/// ρ_μ(a) = μ(∂₁(a))α₂ − μ(∂₂(a))α₁ on a two-sided-symmetric module.
/// Refuses modules whose left and right actions differ, and invalid ones.
pub fn induce_module(
    da: &DiffAlgebra,
    dbm: &DiffBimodule,
) -> Result<PoissonModule, Box<CheckReport>> {
    assert_eq!(da.phi.len(), 2, "derivation pair");
    let mut gate = check_diff_bimodule(da, dbm);
    let mut sym = Vec::new();
    for (i, (l, r)) in dbm.base.l.iter().zip(&dbm.base.r).enumerate() {
        sym.extend(operator_violations(&l.sub(r), &[i]));
    }
    gate.push(LawReport::new("two_sided_symmetric", sym));
    if !gate.pass() {
        return Err(Box::new(gate));
    }
    let n = da.dim();
    let d1 = &da.phi[0];
    let d2 = &da.phi[1];
    let a1 = &dbm.omega[0];
    let a2 = &dbm.omega[1];
    let rho = (0..n)
        .map(|i| {
            dbm.base
                .act_left(&d1.column(i))
                .mul(a2)
                .sub(&dbm.base.act_left(&d2.column(i)).mul(a1))
        })
        .collect();
    Ok(PoissonModule::new(
        n,
        dbm.base.v_dim,
        rho,
        dbm.base.l.clone(),
    ))
}

/// (V*, −ρ*, μ*).
pub fn dual_poisson_module(pm: &PoissonModule) -> PoissonModule {
    PoissonModule::new(
        pm.alg_dim,
        pm.v_dim,
        pm.rho.iter().map(|m| m.transpose().neg()).collect(),
        pm.mu.iter().map(|m| m.transpose()).collect(),
    )
}

/// Lie action, product action, and the two cross laws
/// ρ(a·b) = μ(b)ρ(a) + μ(a)ρ(b) and μ([a,b]) = ρ(a)μ(b) − μ(b)ρ(a).
pub fn check_poisson_module(p: &PoissonAlgebra, pm: &PoissonModule) -> CheckReport {
    assert_eq!(p.dim(), pm.alg_dim, "dimension");
    let n = p.dim();
    let mut lie = Vec::new();
    let mut assoc = Vec::new();
    let mut cross1 = Vec::new();
    let mut cross2 = Vec::new();
    for i in 0..n {
        let ri = &pm.rho[i];
        let mi = &pm.mu[i];
        for j in 0..n {
            let rj = &pm.rho[j];
            let mj = &pm.mu[j];
            let res = pm
                .act_rho(&p.bracket.product_of_basis(i, j))
                .sub(&ri.mul(rj).sub(&rj.mul(ri)));
            lie.extend(operator_violations(&res, &[i, j]));
            let res = pm.act_mu(&p.prod.product_of_basis(i, j)).sub(&mi.mul(mj));
            assoc.extend(operator_violations(&res, &[i, j]));
            let res = pm
                .act_rho(&p.prod.product_of_basis(i, j))
                .sub(&mj.mul(ri))
                .sub(&mi.mul(rj));
            cross1.extend(operator_violations(&res, &[i, j]));
            let res = pm
                .act_mu(&p.bracket.product_of_basis(i, j))
                .sub(&ri.mul(mj).sub(&mj.mul(ri)));
            cross2.extend(operator_violations(&res, &[i, j]));
        }
    }
    CheckReport::new(vec![
        LawReport::new("lie_action", lie),
        LawReport::new("product_action", assoc),
        LawReport::new("bracket_of_product", cross1),
        LawReport::new("product_of_bracket", cross2),
    ])
}

/// Mutual actions for gluing two Poisson algebras on A⊕B. rho_a[i]/mu_a[i]
/// act on B, rho_b[s]/mu_b[s] act on A.
#[derive(Debug, Clone)]
pub struct PoissonMatchedActions {
    pub rho_a: Vec<Matrix>,
    pub mu_a: Vec<Matrix>,
    pub rho_b: Vec<Matrix>,
    pub mu_b: Vec<Matrix>,
}

/// Bracket and product on A⊕B:
///   [a+b, a'+b'] = ([a,a'] + ρ_B(b)a' − ρ_B(b')a) + ([b,b'] + ρ_A(a)b' − ρ_A(a')b)
///   (a+b)·(a'+b') = (a·a' + μ_B(b)a' + μ_B(b')a) + (b·b' + μ_A(a)b' + μ_A(a')b)
pub fn matched_pair_poisson(
    pa: &PoissonAlgebra,
    pb: &PoissonAlgebra,
    act: &PoissonMatchedActions,
) -> PoissonAlgebra {
    let n = pa.dim();
    let m = pb.dim();
    let dim = n + m;
    let mut bracket = StructTensor::zero(dim);
    let mut prod = StructTensor::zero(dim);
    for i in 0..n {
        for j in 0..n {
            for (k, x) in pa.bracket.product_of_basis(i, j).iter().enumerate() {
                bracket.add_to(i, j, k, x);
            }
            for (k, x) in pa.prod.product_of_basis(i, j).iter().enumerate() {
                prod.add_to(i, j, k, x);
            }
        }
        for t in 0..m {
            for (k, x) in act.rho_b[t].column(i).iter().enumerate() {
                let v = -x;
                bracket.add_to(i, n + t, k, &v);
                bracket.add_to(n + t, i, k, x);
            }
            for (k, x) in act.rho_a[i].column(t).iter().enumerate() {
                bracket.add_to(i, n + t, n + k, x);
                let v = -x;
                bracket.add_to(n + t, i, n + k, &v);
            }
            for (k, x) in act.mu_b[t].column(i).iter().enumerate() {
                prod.add_to(i, n + t, k, x);
                prod.add_to(n + t, i, k, x);
            }
            for (k, x) in act.mu_a[i].column(t).iter().enumerate() {
                prod.add_to(i, n + t, n + k, x);
                prod.add_to(n + t, i, n + k, x);
            }
        }
    }
    for s in 0..m {
        for t in 0..m {
            for (k, x) in pb.bracket.product_of_basis(s, t).iter().enumerate() {
                bracket.add_to(n + s, n + t, n + k, x);
            }
            for (k, x) in pb.prod.product_of_basis(s, t).iter().enumerate() {
                prod.add_to(n + s, n + t, n + k, x);
            }
        }
    }
    PoissonAlgebra::new(bracket, prod)
}

/// A⋉_{ρ,μ}V: the matched pair against a structureless partner.
pub fn poisson_semidirect(p: &PoissonAlgebra, pm: &PoissonModule) -> PoissonAlgebra {
    assert_eq!(p.dim(), pm.alg_dim, "dimension");
    let m = pm.v_dim;
    let act = PoissonMatchedActions {
        rho_a: pm.rho.clone(),
        mu_a: pm.mu.clone(),
        rho_b: vec![Matrix::zero(p.dim(), p.dim()); m],
        mu_b: vec![Matrix::zero(p.dim(), p.dim()); m],
    };
    matched_pair_poisson(p, &PoissonAlgebra::zero(m), &act)
}

/// Double of a Poisson bialgebra on A⊕A*: both halves keep their own
/// structure (A* multiplies by the coproduct tensors read as products) and
/// act on each other by −ad* on the bracket side and L* on the product side.
/// Returned actions allow reusing the assembly for matched-pair checks.
pub fn poisson_double(pb: &PoissonBialgebra) -> (PoissonAlgebra, PoissonMatchedActions) {
    let n = pb.dim();
    let dual = PoissonAlgebra::new(pb.cobracket.clone(), pb.comult.clone());
    let act = PoissonMatchedActions {
        rho_a: (0..n).map(|i| pb.alg.ad_basis(i).transpose().neg()).collect(),
        mu_a: (0..n).map(|i| pb.alg.prod.left_op_basis(i).transpose()).collect(),
        rho_b: (0..n).map(|s| dual.ad_basis(s).transpose().neg()).collect(),
        mu_b: (0..n).map(|s| dual.prod.left_op_basis(s).transpose()).collect(),
    };
    (matched_pair_poisson(&pb.alg, &dual, &act), act)
}

fn bil(b: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let by = b.apply(y);
    x.iter()
        .zip(&by)
        .fold(Scalar::zero(), |acc, (p, q)| acc + p * q)
}

/// Nondegenerate symmetric form invariant for both operations, a coordinate
/// split into two isotropic subalgebras closed under both operations.
pub fn manin_triple(
    p: &PoissonAlgebra,
    form: &BilForm,
    plus: &[usize],
    minus: &[usize],
) -> CheckReport {
    let n = p.dim();
    let mut report = crate::bialgebra::check_frobenius(&Algebra::new(p.prod.clone()), form)
        .namespaced("form");

    let mut seen = vec![0usize; n];
    for &i in plus.iter().chain(minus) {
        assert!(i < n, "split index");
        seen[i] += 1;
    }
    let partition = if seen.iter().all(|&c| c == 1) {
        Vec::new()
    } else {
        vec![flag_violation()]
    };
    report.push(LawReport::new("split_partition", partition));

    let mut inv = Vec::new();
    for i in 0..n {
        let ei = basis_vector(n, i);
        for j in 0..n {
            for k in 0..n {
                let ek = basis_vector(n, k);
                let lhs = bil(&form.b, &p.bracket.product_of_basis(i, j), &ek);
                let rhs = bil(&form.b, &ei, &p.bracket.product_of_basis(j, k));
                inv.extend(violation1(vec![i, j, k], &[lhs - rhs]));
            }
        }
    }
    report.push(LawReport::new("invariant_bracket", inv));

    for (name_iso, name_br, name_pr, part) in [
        ("isotropic_plus", "closed_bracket_plus", "closed_product_plus", plus),
        ("isotropic_minus", "closed_bracket_minus", "closed_product_minus", minus),
    ] {
        let inside = |k: usize| part.contains(&k);
        let mut iso = Vec::new();
        let mut cbr = Vec::new();
        let mut cpr = Vec::new();
        for &i in part {
            for &j in part {
                iso.extend(violation1(vec![i, j], &[form.b.get(i, j).clone()]));
                let mut left: Vec<Scalar> = p.bracket.product_of_basis(i, j);
                for (k, x) in left.iter_mut().enumerate() {
                    if inside(k) {
                        *x = Scalar::zero();
                    }
                }
                cbr.extend(violation1(vec![i, j], &left));
                let mut left: Vec<Scalar> = p.prod.product_of_basis(i, j);
                for (k, x) in left.iter_mut().enumerate() {
                    if inside(k) {
                        *x = Scalar::zero();
                    }
                }
                cpr.extend(violation1(vec![i, j], &left));
            }
        }
        report.push(LawReport::new(name_iso, iso));
        report.push(LawReport::new(name_br, cbr));
        report.push(LawReport::new(name_pr, cpr));
    }
    report
}

/// Every Poisson bialgebra law, reported separately: the five algebra laws,
/// Lie coalgebra laws for δ, cocommutative coassociative Δ, the Poisson
/// coalgebra law, the Lie bialgebra cocycle, the ASI pair (·, Δ), and the two
/// mixed compatibilities between δ and Δ.
pub fn check_poisson_bialgebra(pb: &PoissonBialgebra) -> CheckReport {
    let n = pb.dim();
    let br = &pb.alg.bracket;
    let pr = &pb.alg.prod;
    let db = &pb.cobracket;
    let dm = &pb.comult;

    let mut report = check_poisson(&pb.alg).namespaced("poisson");

    let mut coanti = Vec::new();
    let mut cojac = Vec::new();
    let mut pcl = Vec::new();
    for k in 0..n {
        let dk = db.comult_basis(k);
        coanti.extend(violation2(vec![k], &dk.add(&flip_sigma(&dk))));

        let mut cube = Element3::zero(n);
        for (i, j, w) in dk.entries() {
            for (p, q, w2) in db.comult_basis(j).entries() {
                cube.add_to(i, p, q, &(&w * &w2));
            }
        }
        let total = cube.add(&cyclic_tau(&cube)).add(&cyclic_tau(&cyclic_tau(&cube)));
        cojac.extend(violation3(vec![k], &total));

        let mut c1 = Element3::zero(n);
        for (i, j, w) in dk.entries() {
            for (p, q, w2) in dm.comult_basis(j).entries() {
                c1.add_to(i, p, q, &(&w * &w2));
            }
        }
        let mut c2 = Element3::zero(n);
        let mut c3 = Element3::zero(n);
        for (i, j, w) in dm.comult_basis(k).entries() {
            for (p, q, w2) in db.comult_basis(i).entries() {
                c2.add_to(p, q, j, &(&w * &w2));
            }
            for (p, q, w2) in db.comult_basis(j).entries() {
                c3.add_to(p, i, q, &(&w * &w2));
            }
        }
        pcl.extend(violation3(vec![k], &c1.sub(&c2).sub(&c3)));
    }
    report.push(LawReport::new("co_antisymmetric", coanti));
    report.push(LawReport::new("co_jacobi", cojac));
    report.merge(check_coalgebra(&Coalgebra::new(dm.clone()), true).namespaced("comult"));
    report.push(LawReport::new("poisson_coalgebra", pcl));

    report.merge(
        check_asi(&ASIBialgebra::new(
            Algebra::new(pr.clone()),
            Coalgebra::new(dm.clone()),
        ))
        .namespaced("asi"),
    );

    let mut cocycle = Vec::new();
    let mut mixed1 = Vec::new();
    let mut mixed2 = Vec::new();
    for i in 0..n {
        let adi = pb.alg.ad_basis(i);
        let li = pr.left_op_basis(i);
        let di = db.comult_basis(i);
        let ci = dm.comult_basis(i);
        for j in 0..n {
            let adj = pb.alg.ad_basis(j);
            let lj = pr.left_op_basis(j);
            let dj = db.comult_basis(j);
            let cj = dm.comult_basis(j);

            let lhs = db.comult(&br.product_of_basis(i, j));
            let rhs = dj
                .map_left(&adi)
                .add(&dj.map_right(&adi))
                .sub(&di.map_left(&adj))
                .sub(&di.map_right(&adj));
            cocycle.extend(violation2(vec![i, j], &lhs.sub(&rhs)));

            let lhs = db.comult(&pr.product_of_basis(i, j));
            let rhs = dj
                .map_left(&li)
                .add(&di.map_left(&lj))
                .add(&cj.map_right(&adi))
                .add(&ci.map_right(&adj));
            mixed1.extend(violation2(vec![i, j], &lhs.sub(&rhs)));

            let lhs = dm.comult(&br.product_of_basis(i, j));
            let rhs = cj
                .map_left(&adi)
                .add(&cj.map_right(&adi))
                .add(&di.map_left(&lj))
                .sub(&di.map_right(&lj));
            mixed2.extend(violation2(vec![i, j], &lhs.sub(&rhs)));
        }
    }
    report.push(LawReport::new("lie_cocycle", cocycle));
    report.push(LawReport::new("cobracket_of_product", mixed1));
    report.push(LawReport::new("comult_of_bracket", mixed2));
    report
}

/// δ = (ð₁⊗ð₂ − ð₂⊗ð₁)Δ.
pub fn induce_poisson_coalgebra(comult: &StructTensor, psi: &[Matrix]) -> StructTensor {
    assert_eq!(psi.len(), 2, "family pair");
    let n = comult.dim();
    let mut out = StructTensor::zero(n);
    for k in 0..n {
        let dk = comult.comult_basis(k);
        let e = dk
            .map_left(&psi[0])
            .map_right(&psi[1])
            .sub(&dk.map_left(&psi[1]).map_right(&psi[0]));
        for (i, j, w) in e.entries() {
            out.set(i, j, k, w);
        }
    }
    out
}

/// The four compatibility conditions between a derivation pair Φ, a second
/// family Ψ, and a comultiplication, with the combination S = ð₂∂₁ − ð₁∂₂
/// exposed for inspection:
///   vip_1: S(a)·b = 0
///   vip_2: (S⊗id)Δ = 0
///   dpb_1: (id⊗L(b) − L(b)⊗id)(S⊗id)Δ(a) + (L(S(a))⊗id)Δ(b) = 0
///   dpb_2: the six-term antisymmetrized counterpart on the bracket side
pub struct CompatConditions {
    pub s: Matrix,
    pub report: CheckReport,
}

pub fn check_compat_conditions(
    da: &DiffAlgebra,
    psi: &[Matrix],
    comult: &StructTensor,
) -> CompatConditions {
    assert_eq!(da.phi.len(), 2, "family pair");
    assert_eq!(psi.len(), 2, "family pair");
    let n = da.dim();
    assert_eq!(comult.dim(), n, "dimension");
    let mult = &da.base.mult;
    let d1 = &da.phi[0];
    let d2 = &da.phi[1];
    let cd1 = &psi[0];
    let cd2 = &psi[1];
    let s = cd2.mul(d1).sub(&cd1.mul(d2));

    // ad(a) = L(∂₁(a))∂₂ − L(∂₂(a))∂₁ for the induced bracket.
    let ad = |i: usize| {
        mult.left_op(&d1.column(i))
            .mul(d2)
            .sub(&mult.left_op(&d2.column(i)).mul(d1))
    };
    let mix = |x: &Element2| {
        x.map_left(cd1)
            .map_right(cd2)
            .sub(&x.map_left(cd2).map_right(cd1))
    };

    let mut vip1 = Vec::new();
    let mut vip2 = Vec::new();
    let mut dpb1 = Vec::new();
    let mut dpb2 = Vec::new();
    for k in 0..n {
        vip2.extend(violation2(vec![k], &comult.comult_basis(k).map_left(&s)));
    }
    for i in 0..n {
        let si = s.column(i);
        let adi = ad(i);
        let lsi = mult.left_op(&si);
        let ci = comult.comult_basis(i);
        let inner_i = mix(&ci);
        for j in 0..n {
            let ej = basis_vector(n, j);
            vip1.extend(violation1(vec![i, j], &mult.bilinear(&si, &ej)));

            let adj = ad(j);
            let lsj = mult.left_op(&s.column(j));
            let cj = comult.comult_basis(j);
            let inner_j = mix(&cj);

            let t1 = ci.map_left(&s);
            let res = t1
                .map_right(&mult.left_op_basis(j))
                .sub(&t1.map_left(&mult.left_op_basis(j)))
                .add(&cj.map_left(&lsi));
            dpb1.extend(violation2(vec![i, j], &res));

            let res = cj
                .map_left(&adi)
                .map_right(&s)
                .sub(&cj.map_left(&s).map_right(&adi))
                .sub(&ci.map_left(&adj).map_right(&s).sub(&ci.map_left(&s).map_right(&adj)))
                .sub(&cj.map_left(&lsi).map_right(&s).sub(&cj.map_left(&s).map_right(&lsi)))
                .add(&ci.map_left(&lsj).map_right(&s).sub(&ci.map_left(&s).map_right(&lsj)))
                .add(&inner_j.map_left(&lsi).add(&inner_j.map_right(&lsi)))
                .sub(&inner_i.map_left(&lsj).add(&inner_i.map_right(&lsj)));
            dpb2.extend(violation2(vec![i, j], &res));
        }
    }
    let report = CheckReport::new(vec![
        LawReport::new("vip_1", vip1),
        LawReport::new("vip_2", vip2),
        LawReport::new("dpb_1", dpb1),
        LawReport::new("dpb_2", dpb2),
    ]);
    CompatConditions { s, report }
}

/// Induces bracket and cobracket on a commutative cocommutative differential
/// ASI bialgebra with |Φ| = 2 and reports: the compatibility conditions, the
/// full bialgebra suite, and an equivalence law flagging any disagreement
/// between "bialgebra passes" and "dpb_1 ∧ dpb_2".
pub fn build_induced_poisson_bialgebra(
    db: &DiffASIBialgebra,
) -> Result<(PoissonBialgebra, CheckReport), Box<CheckReport>> {
    assert_eq!(db.phi.len(), 2, "derivation pair");
    let mut gate = check_diff_asi(db);
    gate.merge(check_law(&db.bialg.alg, Law::Commutative));
    gate.merge(check_coalgebra(&db.bialg.coalg, true));
    if !gate.pass() {
        return Err(Box::new(gate));
    }
    let da = DiffAlgebra::new(db.bialg.alg.clone(), db.phi.clone());
    let poisson = induce_poisson(&da, &[(0, 1)])?;
    let comult = &db.bialg.coalg.comult;
    let cobracket = induce_poisson_coalgebra(comult, &db.psi);
    let pb = PoissonBialgebra::new(poisson, cobracket, comult.clone());

    let compat = check_compat_conditions(&da, &db.psi, comult);
    let bialg = check_poisson_bialgebra(&pb);
    let dpb_ok = compat.report.law("dpb_1").unwrap().pass && compat.report.law("dpb_2").unwrap().pass;
    let agree = if bialg.pass() == dpb_ok {
        Vec::new()
    } else {
        vec![flag_violation()]
    };
    let mut report = compat.report.namespaced("compat");
    report.merge(bialg.namespaced("bialgebra"));
    report.push(LawReport::new("equivalence", agree));
    Ok((pb, report))
}

/// Residual pair of [r₁₂,r₁₃] + [r₁₃,r₂₃] + [r₁₂,r₂₃] = 0 and the
/// product-side Yang-Baxter combination; r solves the equation iff both
/// tensors vanish.
pub fn pybe_residual(p: &PoissonAlgebra, r: &RElement) -> (Element3, Element3) {
    let n = p.dim();
    assert_eq!(r.dims(), (n, n), "r shape");
    let l = &p.bracket;
    let mut out = Element3::zero(n);
    let entries = r.entries();
    for (ai, bi, wi) in &entries {
        for (aj, bj, wj) in &entries {
            let w = wi * wj;
            for k in 0..n {
                let c = l.get(*ai, *aj, k);
                if !c.is_zero() {
                    out.add_to(k, *bi, *bj, &(&w * c));
                }
                let c = l.get(*bi, *bj, k);
                if !c.is_zero() {
                    out.add_to(*ai, *aj, k, &(&w * c));
                }
                let c = l.get(*bi, *aj, k);
                if !c.is_zero() {
                    out.add_to(*ai, k, *bj, &(&w * c));
                }
            }
        }
    }
    (out, aybe_residual(&Algebra::new(p.prod.clone()), r))
}

/// δ(a) = (id⊗ad(a) + ad(a)⊗id)(r) and Δ(a) = (id⊗L(a) − L(a)⊗id)(r).
pub fn coboundary_poisson(p: &PoissonAlgebra, r: &RElement) -> (StructTensor, StructTensor) {
    let n = p.dim();
    assert_eq!(r.dims(), (n, n), "r shape");
    let mut cobracket = StructTensor::zero(n);
    for k in 0..n {
        let adk = p.ad_basis(k);
        let dk = r.map_right(&adk).add(&r.map_left(&adk));
        for (i, j, w) in dk.entries() {
            cobracket.set(i, j, k, w);
        }
    }
    let comult = coboundary_delta(&Algebra::new(p.prod.clone()), r).comult;
    (cobracket, comult)
}

/// [T(u),T(v)] = T(ρ(T(u))v − ρ(T(v))u) and T(u)·T(v) = T(μ(T(u))v + μ(T(v))u).
pub fn check_poisson_o_operator(
    p: &PoissonAlgebra,
    pm: &PoissonModule,
    t: &Matrix,
) -> CheckReport {
    assert_eq!((t.rows(), t.cols()), (p.dim(), pm.v_dim), "operator shape");
    let m = pm.v_dim;
    let mut bracket = Vec::new();
    let mut product = Vec::new();
    for s in 0..m {
        let ts = t.column(s);
        for u in 0..m {
            let tu = t.column(u);
            let lhs = p.bracket.bilinear(&ts, &tu);
            let arg: Vec<Scalar> = pm
                .act_rho(&ts)
                .column(u)
                .iter()
                .zip(&pm.act_rho(&tu).column(s))
                .map(|(a, b)| a - b)
                .collect();
            let rhs = t.apply(&arg);
            let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            bracket.extend(violation1(vec![s, u], &res));

            let lhs = p.prod.bilinear(&ts, &tu);
            let arg: Vec<Scalar> = pm
                .act_mu(&ts)
                .column(u)
                .iter()
                .zip(&pm.act_mu(&tu).column(s))
                .map(|(a, b)| a + b)
                .collect();
            let rhs = t.apply(&arg);
            let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            product.extend(violation1(vec![s, u], &res));
        }
    }
    CheckReport::new(vec![
        LawReport::new("operator_bracket", bracket),
        LawReport::new("operator_product", product),
    ])
}

/// Weight-zero Rota-Baxter rule for both operations.
pub fn check_poisson_rota_baxter(p: &PoissonAlgebra, rb: &Matrix) -> CheckReport {
    let n = p.dim();
    assert_eq!((rb.rows(), rb.cols()), (n, n), "operator shape");
    let rule = |t: &StructTensor| {
        let mut v = Vec::new();
        for i in 0..n {
            let ri = rb.column(i);
            let ei = basis_vector(n, i);
            for j in 0..n {
                let rj = rb.column(j);
                let ej = basis_vector(n, j);
                let lhs = t.bilinear(&ri, &rj);
                let arg: Vec<Scalar> = t
                    .bilinear(&ri, &ej)
                    .iter()
                    .zip(&t.bilinear(&ei, &rj))
                    .map(|(a, b)| a + b)
                    .collect();
                let rhs = rb.apply(&arg);
                let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                v.extend(violation1(vec![i, j], &res));
            }
        }
        v
    };
    CheckReport::new(vec![
        LawReport::new("product_rule", rule(&p.prod)),
        LawReport::new("bracket_rule", rule(&p.bracket)),
    ])
}

/// Builds A⋉_{−ρ*,μ*}V*, embeds r = T − σ(T), and evaluates both sides of
/// the equivalence "r solves the Poisson Yang-Baxter equation iff T is an
/// operator for (ρ, μ)". Refuses an invalid module.
pub fn oopsemi_embed(
    p: &PoissonAlgebra,
    pm: &PoissonModule,
    t: &Matrix,
) -> Result<(PoissonAlgebra, RElement, CheckReport), Box<CheckReport>> {
    assert_eq!((t.rows(), t.cols()), (p.dim(), pm.v_dim), "operator shape");
    let gate = check_poisson_module(p, pm);
    if !gate.pass() {
        return Err(Box::new(gate));
    }
    let n = p.dim();
    let m = pm.v_dim;
    let ambient = poisson_semidirect(p, &dual_poisson_module(pm));
    let mut emb = Element2::zero(n + m, n + m);
    for i in 0..n {
        for s in 0..m {
            emb.set(i, n + s, t.get(i, s).clone());
        }
    }
    let r = emb.sub(&flip_sigma(&emb));

    let (br_res, pr_res) = pybe_residual(&ambient, &r);
    let mut report = CheckReport::new(vec![
        LawReport::new("pybe_bracket", violation3(vec![], &br_res).into_iter().collect()),
        LawReport::new("pybe_product", violation3(vec![], &pr_res).into_iter().collect()),
    ]);
    let left_ok = report.pass();
    let op_side = check_poisson_o_operator(p, pm, t);
    let right_ok = op_side.pass();
    report.merge(op_side.namespaced("operator_side"));
    let agree = if left_ok == right_ok {
        Vec::new()
    } else {
        vec![flag_violation()]
    };
    report.push(LawReport::new("equivalence", agree));
    Ok((ambient, r, report))
}

/// a⋄(b⋄c) − (a⋄b)⋄c = b⋄(a⋄c) − (b⋄a)⋄c on all basis triples.
pub fn check_prelie(t: &StructTensor) -> CheckReport {
    let n = t.dim();
    let mut v = Vec::new();
    for i in 0..n {
        let ei = basis_vector(n, i);
        for j in 0..n {
            let ej = basis_vector(n, j);
            for k in 0..n {
                let ek = basis_vector(n, k);
                let l1 = t.bilinear(&ei, &t.product_of_basis(j, k));
                let l2 = t.bilinear(&t.product_of_basis(i, j), &ek);
                let r1 = t.bilinear(&ej, &t.product_of_basis(i, k));
                let r2 = t.bilinear(&t.product_of_basis(j, i), &ek);
                let res: Vec<Scalar> = l1
                    .iter()
                    .zip(&l2)
                    .zip(r1.iter().zip(&r2))
                    .map(|((a, b), (c, d))| a - b - c + d)
                    .collect();
                v.extend(violation1(vec![i, j, k], &res));
            }
        }
    }
    CheckReport::new(vec![LawReport::new("pre_lie", v)])
}

/// Pre-Lie ⋄, Zinbiel ∗, and the two mixed laws
///   (a⋄b − b⋄a)∗c = a⋄(b∗c) − b∗(a⋄c)
///   (a∗b + b∗a)⋄c = a∗(b⋄c) + b∗(a⋄c)
pub fn check_prepoisson(pp: &PrePoisson) -> CheckReport {
    let n = pp.dim();
    let dia = &pp.diamond;
    let star = &pp.star;
    let mut report = check_prelie(dia);
    report.merge(check_zinbiel(&Zinbiel::new(star.clone(), vec![])));

    let mut m1 = Vec::new();
    let mut m2 = Vec::new();
    for i in 0..n {
        let ei = basis_vector(n, i);
        for j in 0..n {
            let ej = basis_vector(n, j);
            for k in 0..n {
                let ek = basis_vector(n, k);
                let anti: Vec<Scalar> = dia
                    .product_of_basis(i, j)
                    .iter()
                    .zip(&dia.product_of_basis(j, i))
                    .map(|(a, b)| a - b)
                    .collect();
                let lhs = star.bilinear(&anti, &ek);
                let r1 = dia.bilinear(&ei, &star.product_of_basis(j, k));
                let r2 = star.bilinear(&ej, &dia.product_of_basis(i, k));
                let res: Vec<Scalar> = lhs
                    .iter()
                    .zip(r1.iter().zip(&r2))
                    .map(|(a, (b, c))| a - b + c)
                    .collect();
                m1.extend(violation1(vec![i, j, k], &res));

                let sym: Vec<Scalar> = star
                    .product_of_basis(i, j)
                    .iter()
                    .zip(&star.product_of_basis(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                let lhs = dia.bilinear(&sym, &ek);
                let r1 = star.bilinear(&ei, &dia.product_of_basis(j, k));
                let r2 = star.bilinear(&ej, &dia.product_of_basis(i, k));
                let res: Vec<Scalar> = lhs
                    .iter()
                    .zip(r1.iter().zip(&r2))
                    .map(|(a, (b, c))| a - b - c)
                    .collect();
                m2.extend(violation1(vec![i, j, k], &res));
            }
        }
    }
    report.push(LawReport::new("mixed_antisym", m1));
    report.push(LawReport::new("mixed_sym", m2));
    report
}

/// [a,b] = a⋄b − b⋄a and a·b = a∗b + b∗a. Refuses an invalid pre-Poisson.
pub fn prepoisson_to_poisson(pp: &PrePoisson) -> Result<PoissonAlgebra, Box<CheckReport>> {
    let gate = check_prepoisson(pp);
    if !gate.pass() {
        return Err(Box::new(gate));
    }
    Ok(PoissonAlgebra::new(
        pp.diamond.sub(&pp.diamond.opposite()),
        pp.star.add(&pp.star.opposite()),
    ))
}

/// a⋄b = ∂₁(a)∗∂₂(b) − ∂₂(a)∗∂₁(b). Refuses an invalid differential Zinbiel
/// algebra; the pair in Φ is used in order.
pub fn zinbiel_to_prepoisson(z: &Zinbiel) -> Result<PrePoisson, Box<CheckReport>> {
    assert_eq!(z.phi.len(), 2, "derivation pair");
    let gate = check_zinbiel(z);
    if !gate.pass() {
        return Err(Box::new(gate));
    }
    let n = z.dim();
    let d1 = &z.phi[0];
    let d2 = &z.phi[1];
    let mut diamond = StructTensor::zero(n);
    for i in 0..n {
        for j in 0..n {
            let pos = z.star.bilinear(&d1.column(i), &d2.column(j));
            let neg = z.star.bilinear(&d2.column(i), &d1.column(j));
            for (k, (a, b)) in pos.iter().zip(&neg).enumerate() {
                diamond.set(i, j, k, a - b);
            }
        }
    }
    Ok(PrePoisson::new(diamond, z.star.clone()))
}

/// Associativity plus left-commutativity (ab)c = (ba)c.
pub fn check_perm(t: &StructTensor) -> CheckReport {
    let n = t.dim();
    let mut report = check_law(&Algebra::new(t.clone()), Law::Associative);
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ij = t.product_of_basis(i, j);
            let ji = t.product_of_basis(j, i);
            for k in 0..n {
                let ek = basis_vector(n, k);
                let res: Vec<Scalar> = t
                    .bilinear(&ij, &ek)
                    .iter()
                    .zip(&t.bilinear(&ji, &ek))
                    .map(|(a, b)| a - b)
                    .collect();
                v.extend(violation1(vec![i, j, k], &res));
            }
        }
    }
    report.push(LawReport::new("left_commutative", v));
    report
}

/// The P⊗A structure that characterizes pre-Poisson algebras:
///   [p⊗a, q⊗b] = pq⊗a⋄b − qp⊗b⋄a
///   (p⊗a)·(q⊗b) = pq⊗a∗b + qp⊗b∗a
/// Index (u, a) ↦ u·dim(A) + a. Refuses an invalid perm-algebra; the
/// pre-Poisson laws are deliberately not gated so the equivalence is
/// observable from the output.
pub fn perm_tensor_poisson(
    perm: &StructTensor,
    pp: &PrePoisson,
) -> Result<PoissonAlgebra, Box<CheckReport>> {
    let gate = check_perm(perm);
    if !gate.pass() {
        return Err(Box::new(gate));
    }
    let p = perm.dim();
    let n = pp.dim();
    let dim = p * n;
    let idx = |u: usize, a: usize| u * n + a;
    let mut bracket = StructTensor::zero(dim);
    let mut prod = StructTensor::zero(dim);
    for (u, v, w, pw) in perm.entries() {
        for (a, b, c, cw) in pp.diamond.entries() {
            let x = &pw * &cw;
            bracket.add_to(idx(u, a), idx(v, b), idx(w, c), &x);
            let y = -&x;
            bracket.add_to(idx(v, b), idx(u, a), idx(w, c), &y);
        }
        for (a, b, c, cw) in pp.star.entries() {
            let x = &pw * &cw;
            prod.add_to(idx(u, a), idx(v, b), idx(w, c), &x);
            prod.add_to(idx(v, b), idx(u, a), idx(w, c), &x);
        }
    }
    Ok(PoissonAlgebra::new(bracket, prod))
}

/// Everything the Zinbiel-to-Poisson-bialgebra chain produces, with the
/// cross-verification report covering route agreements and residuals.
#[derive(Debug)]
pub struct PoissonPipeline {
    pub associated: DiffAlgebra,
    pub poisson: PoissonAlgebra,
    pub pre_poisson: PrePoisson,
    pub bialgebra: DiffASIBialgebra,
    pub r: RElement,
    pub ambient_poisson: PoissonAlgebra,
    pub cobracket: StructTensor,
    pub poisson_bialgebra: PoissonBialgebra,
    pub report: CheckReport,
}

#[derive(Debug)]
pub struct PipelineError {
    pub stage: String,
    pub report: CheckReport,
}

fn stage_err(stage: &str, report: CheckReport) -> Box<PipelineError> {
    Box::new(PipelineError {
        stage: stage.to_string(),
        report,
    })
}

fn tensor_diff_violations(a: &StructTensor, b: &StructTensor) -> Vec<Violation> {
    a.sub(b)
        .entries()
        .into_iter()
        .map(|(i, j, k, w)| Violation {
            indices: vec![i, j, k],
            residual: vec![(vec![], w)],
        })
        .collect()
}

/// Runs the full chain from a differential Zinbiel algebra to the Poisson
/// bialgebra on A⊕A*, halting at the first failing stage:
///   zinbiel → associated commutative algebra → induced Poisson → pre-Poisson
///   → 2n differential ASI bialgebra (θ = 0) → canonical r → induced ambient
///   Poisson → cobracket via both constructions → Poisson bialgebra.
pub fn pipeline_zinbiel_to_poisson_bialgebra(
    z: &Zinbiel,
) -> Result<PoissonPipeline, Box<PipelineError>> {
    assert_eq!(z.phi.len(), 2, "derivation pair");
    let rep = check_zinbiel(z);
    if !rep.pass() {
        return Err(stage_err("zinbiel", rep));
    }

    let view = z.dendriform_view();
    let associated = DiffAlgebra::new(associated_algebra(&view.base), z.phi.clone());
    let rep = check_diff_algebra(&associated, true);
    if !rep.pass() {
        return Err(stage_err("associated_algebra", rep));
    }

    let poisson = induce_poisson(&associated, &[(0, 1)])
        .map_err(|e| stage_err("induced_poisson", *e))?;
    let rep = check_poisson(&poisson);
    if !rep.pass() {
        return Err(stage_err("induced_poisson", rep));
    }

    let pre_poisson =
        zinbiel_to_prepoisson(z).map_err(|e| stage_err("pre_poisson", *e))?;
    let mut cross = CheckReport::default();
    cross.push(LawReport::new(
        "pre_poisson_bracket_route",
        tensor_diff_violations(
            &pre_poisson.diamond.sub(&pre_poisson.diamond.opposite()),
            &poisson.bracket,
        ),
    ));
    cross.push(LawReport::new(
        "pre_poisson_product_route",
        tensor_diff_violations(
            &pre_poisson.star.add(&pre_poisson.star.opposite()),
            &poisson.prod,
        ),
    ));

    // L_⋄ coincides with the module action induced from (A, L_∗, Φ).
    let n = z.dim();
    let star_actions = Bimodule::new(
        n,
        n,
        (0..n).map(|i| z.star.left_op_basis(i)).collect(),
        (0..n).map(|i| z.star.left_op_basis(i)).collect(),
    );
    let star_module = DiffBimodule::new(star_actions, z.phi.clone());
    let induced_mod = induce_module(&associated, &star_module)
        .map_err(|e| stage_err("induced_module", *e))?;
    let mut action_agree = Vec::new();
    for i in 0..n {
        let res = induced_mod.rho[i].sub(&pre_poisson.diamond.left_op_basis(i));
        action_agree.extend(operator_violations(&res, &[i]));
    }
    cross.push(LawReport::new("diamond_action_agreement", action_agree));

    let bialgebra = dendriform_to_diff_asi(&view, &[int(0), int(0)])
        .map_err(|e| stage_err("bialgebra", *e))?;
    let rep = check_diff_asi(&bialgebra);
    if !rep.pass() {
        return Err(stage_err("bialgebra", rep));
    }

    let r = canonical_r(n);
    let ambient = DiffAlgebra::new(bialgebra.bialg.alg.clone(), bialgebra.phi.clone());
    let ambient_poisson = induce_poisson(&ambient, &[(0, 1)])
        .map_err(|e| stage_err("ambient_poisson", *e))?;
    let rep = check_poisson(&ambient_poisson);
    if !rep.pass() {
        return Err(stage_err("ambient_poisson", rep));
    }

    // Semidirect route: the ambient Poisson algebra is also the extension of
    // the induced Poisson algebra by the dual of the induced module.
    let semidirect = poisson_semidirect(&poisson, &dual_poisson_module(&induced_mod));
    cross.push(LawReport::new(
        "semidirect_bracket_route",
        tensor_diff_violations(&semidirect.bracket, &ambient_poisson.bracket),
    ));
    cross.push(LawReport::new(
        "semidirect_product_route",
        tensor_diff_violations(&semidirect.prod, &ambient_poisson.prod),
    ));

    let (cobracket, comult_from_r) = coboundary_poisson(&ambient_poisson, &r);
    let comult = bialgebra.bialg.coalg.comult.clone();
    let cobracket_families = induce_poisson_coalgebra(&comult, &bialgebra.psi);
    cross.push(LawReport::new(
        "cobracket_agreement",
        tensor_diff_violations(&cobracket, &cobracket_families),
    ));
    cross.push(LawReport::new(
        "comult_agreement",
        tensor_diff_violations(&comult_from_r, &comult),
    ));

    let compat = check_compat_conditions(&ambient, &bialgebra.psi, &comult);
    cross.merge(compat.report.namespaced("compat"));

    let (br_res, pr_res) = pybe_residual(&ambient_poisson, &r);
    cross.push(LawReport::new(
        "pybe_bracket",
        violation3(vec![], &br_res).into_iter().collect(),
    ));
    cross.push(LawReport::new(
        "pybe_product",
        violation3(vec![], &pr_res).into_iter().collect(),
    ));

    let poisson_bialgebra = PoissonBialgebra::new(ambient_poisson.clone(), cobracket.clone(), comult);
    let rep = check_poisson_bialgebra(&poisson_bialgebra);
    if !rep.pass() {
        return Err(stage_err("poisson_bialgebra", rep));
    }
    if !cross.pass() {
        return Err(stage_err("cross_checks", cross));
    }

    Ok(PoissonPipeline {
        associated,
        poisson,
        pre_poisson,
        bialgebra,
        r,
        ambient_poisson,
        cobracket,
        poisson_bialgebra,
        report: cross,
    })
}
