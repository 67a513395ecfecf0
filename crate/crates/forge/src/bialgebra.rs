//! Coalgebras, ASI bialgebras and their differential refinement, Frobenius
//! forms, double constructions, and coherent derivations/endomorphisms.
//!
//! Conventions: the comultiplication array reads Δ(e_k) = Σ d[i][j][k]
//! e_i⊗e_j; dual-space bases are always the dual basis of the primal, so
//! dual actions are plain transposes in coordinates.

use crate::algebra::{check_diff_algebra, check_law, Algebra, DiffAlgebra, Law};
use crate::bimodule::{block_diag, matched_pair_product, MatchedPairActions};
use crate::matrix::{commutator, nullspace, Matrix, ShapeError};
use crate::report::{violation1, violation2, violation3, CheckReport, LawReport, Violation};
use crate::scalar::Scalar;
use crate::tensor::{basis_vector, flip_sigma, Element3, StructTensor};
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    pub comult: StructTensor,
}

impl Coalgebra {
    pub fn new(comult: StructTensor) -> Self {
        Coalgebra { comult }
    }

    pub fn dim(&self) -> usize {
        self.comult.dim()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASIBialgebra {
    pub alg: Algebra,
    pub coalg: Coalgebra,
}

impl ASIBialgebra {
    pub fn new(alg: Algebra, coalg: Coalgebra) -> Self {
        assert_eq!(alg.dim(), coalg.dim(), "dimension");
        ASIBialgebra { alg, coalg }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffASIBialgebra {
    pub bialg: ASIBialgebra,
    pub phi: Vec<Matrix>,
    pub psi: Vec<Matrix>,
}

impl DiffASIBialgebra {
    pub fn new(bialg: ASIBialgebra, phi: Vec<Matrix>, psi: Vec<Matrix>) -> Self {
        assert_eq!(phi.len(), psi.len(), "family sizes");
        let n = bialg.dim();
        assert!(
            phi.iter().chain(&psi).all(|m| m.rows() == n && m.cols() == n),
            "family shape"
        );
        DiffASIBialgebra { bialg, phi, psi }
    }

    pub fn dim(&self) -> usize {
        self.bialg.dim()
    }
}

/// 𝔅[i][j] = value on (e_i, e_j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilForm {
    pub b: Matrix,
}

impl BilForm {
    pub fn new(b: Matrix) -> Self {
        assert!(b.is_square(), "bilinear form shape");
        BilForm { b }
    }

    /// The standard pairing on V⊕V*: 1 exactly on (e_i, e_i*) and (e_i*, e_i).
    pub fn pairing(n: usize) -> Self {
        let mut b = Matrix::zero(2 * n, 2 * n);
        for i in 0..n {
            b.set(i, n + i, num::One::one());
            b.set(n + i, i, num::One::one());
        }
        BilForm::new(b)
    }

    pub fn dim(&self) -> usize {
        self.b.rows()
    }
}

/// Candidate pair (∂, ð); validity is check_coherent_derivation's question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherentPair {
    pub d: Matrix,
    pub cd: Matrix,
}

/// Coassociativity (Δ⊗id)Δ = (id⊗Δ)Δ on every basis vector; with the flag,
/// also cocommutativity Δ = σΔ.
pub fn check_coalgebra(c: &Coalgebra, cocommutative: bool) -> CheckReport {
    let n = c.dim();
    let d = &c.comult;
    let mut coassoc = Vec::new();
    for k in 0..n {
        let mut res = Element3::zero(n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut acc = Scalar::zero();
                    for i in 0..n {
                        acc += d.get(i, z, k) * d.get(x, y, i);
                    }
                    for j in 0..n {
                        acc -= d.get(x, j, k) * d.get(y, z, j);
                    }
                    if !acc.is_zero() {
                        res.set(x, y, z, acc);
                    }
                }
            }
        }
        coassoc.extend(violation3(vec![k], &res));
    }
    let mut report = CheckReport::new(vec![LawReport::new("coassociative", coassoc)]);
    if cocommutative {
        let mut violations = Vec::new();
        for k in 0..n {
            let e = c.comult.comult_basis(k);
            violations.extend(violation2(vec![k], &e.sub(&flip_sigma(&e))));
        }
        report.push(LawReport::new("cocommutative", violations));
    }
    report
}

/// Δ∘E = (E⊗id + id⊗E)∘Δ on every basis vector.
pub fn check_coderivation(c: &Coalgebra, e: &Matrix) -> CheckReport {
    let n = c.dim();
    assert!(e.rows() == n && e.cols() == n, "coderivation shape");
    CheckReport::new(vec![LawReport::new(
        "coleibniz",
        coleibniz_violations(c, e),
    )])
}

fn coleibniz_violations(c: &Coalgebra, e: &Matrix) -> Vec<Violation> {
    let n = c.dim();
    let mut out = Vec::new();
    for k in 0..n {
        let lhs = c.comult.comult(&e.column(k));
        let dk = c.comult.comult_basis(k);
        let rhs = dk.map_left(e).add(&dk.map_right(e));
        out.extend(violation2(vec![k], &lhs.sub(&rhs)));
    }
    out
}

/// The two ASI compatibility conditions between product and coproduct:
///   Δ(a·b) = (R(b)⊗id)Δ(a) + (id⊗L(a))Δ(b)
///   (L(a)⊗id - id⊗R(a))Δ(b) = σ((id⊗R(b) - L(b)⊗id)Δ(a))
/// on all basis pairs, plus associativity and coassociativity.
pub fn check_asi(b: &ASIBialgebra) -> CheckReport {
    let n = b.dim();
    let mult = &b.alg.mult;
    let d = &b.coalg.comult;
    let mut report = check_law(&b.alg, Law::Associative);
    report.merge(check_coalgebra(&b.coalg, false));
    let mut compat = Vec::new();
    let mut balance = Vec::new();
    for i in 0..n {
        let li = mult.left_op_basis(i);
        let ri = mult.right_op_basis(i);
        let di = d.comult_basis(i);
        for j in 0..n {
            let lj = mult.left_op_basis(j);
            let rj = mult.right_op_basis(j);
            let dj = d.comult_basis(j);
            let lhs = d.comult(&mult.product_of_basis(i, j));
            let rhs = di.map_left(&rj).add(&dj.map_right(&li));
            compat.extend(violation2(vec![i, j], &lhs.sub(&rhs)));

            let lhs = dj.map_left(&li).sub(&dj.map_right(&ri));
            let rhs = flip_sigma(&di.map_right(&rj).sub(&di.map_left(&lj)));
            balance.extend(violation2(vec![i, j], &lhs.sub(&rhs)));
        }
    }
    report.push(LawReport::new("compat_product", compat));
    report.push(LawReport::new("compat_sigma", balance));
    report
}

/// The two crossed Leibniz identities on the product only:
///   1: ð(a)·b = a·∂(b) + ð(a·b)
///   2: a·ð(b) = ∂(a)·b + ð(a·b)
/// This half makes sense without a coproduct, so r-element checkers reuse it.
pub(crate) fn quasi_admissible_laws(
    alg: &Algebra,
    d: &Matrix,
    cd: &Matrix,
    suffix: &str,
) -> Vec<LawReport> {
    let n = alg.dim();
    let mult = &alg.mult;
    let mut v1 = Vec::new();
    let mut v2 = Vec::new();
    for i in 0..n {
        let ei = basis_vector(n, i);
        let cd_i = cd.column(i);
        let d_i = d.column(i);
        for j in 0..n {
            let ej = basis_vector(n, j);
            let prod = mult.product_of_basis(i, j);
            let cd_prod = cd.apply(&prod);

            let lhs = mult.bilinear(&cd_i, &ej);
            let rhs: Vec<Scalar> = mult
                .bilinear(&ei, &d.column(j))
                .iter()
                .zip(&cd_prod)
                .map(|(a, b)| a + b)
                .collect();
            let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            v1.extend(violation1(vec![i, j], &res));

            let lhs = mult.bilinear(&ei, &cd.column(j));
            let rhs: Vec<Scalar> = mult
                .bilinear(&d_i, &ej)
                .iter()
                .zip(&cd_prod)
                .map(|(a, b)| a + b)
                .collect();
            let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            v2.extend(violation1(vec![i, j], &res));
        }
    }
    vec![
        LawReport::new(&format!("cross_leibniz_1{suffix}"), v1),
        LawReport::new(&format!("cross_leibniz_2{suffix}"), v2),
    ]
}

/// The four crossed Leibniz identities tying a derivation candidate ∂ to a
/// coderivation candidate ð through one product/coproduct pair: the two
/// product laws above plus their coproduct mirrors
///   3: (∂⊗id)Δ = (id⊗ð)Δ + Δ∂
///   4: (id⊗∂)Δ = (ð⊗id)Δ + Δ∂
fn cross_laws(
    alg: &Algebra,
    coalg: &Coalgebra,
    d: &Matrix,
    cd: &Matrix,
    suffix: &str,
) -> Vec<LawReport> {
    let n = alg.dim();
    let dm = &coalg.comult;
    let mut out = quasi_admissible_laws(alg, d, cd, suffix);
    let mut v3 = Vec::new();
    let mut v4 = Vec::new();
    for k in 0..n {
        let dk = dm.comult_basis(k);
        let comult_dk = dm.comult(&d.column(k));
        let lhs = dk.map_left(d);
        let rhs = dk.map_right(cd).add(&comult_dk);
        v3.extend(violation2(vec![k], &lhs.sub(&rhs)));
        let lhs = dk.map_right(d);
        let rhs = dk.map_left(cd).add(&comult_dk);
        v4.extend(violation2(vec![k], &lhs.sub(&rhs)));
    }
    out.push(LawReport::new(&format!("cross_coleibniz_1{suffix}"), v3));
    out.push(LawReport::new(&format!("cross_coleibniz_2{suffix}"), v4));
    out
}

/// ASI bialgebra laws, differential-algebra laws for Φ, coderivation and
/// commutation laws for Ψ, and the four crossed identities for each index.
pub fn check_diff_asi(db: &DiffASIBialgebra) -> CheckReport {
    let b = &db.bialg;
    let mut report = check_asi(b);
    report.merge(
        check_diff_algebra(&DiffAlgebra::new(b.alg.clone(), db.phi.clone()), false)
            .namespaced("alg"),
    );
    for (k, psi) in db.psi.iter().enumerate() {
        report.push(LawReport::new(
            &format!("coalg.coderivation_{k}"),
            coleibniz_violations(&b.coalg, psi),
        ));
    }
    for k in 0..db.psi.len() {
        for l in (k + 1)..db.psi.len() {
            let comm = commutator(&db.psi[k], &db.psi[l]);
            let mut violations = Vec::new();
            for q in 0..b.dim() {
                violations.extend(violation1(vec![q], &comm.column(q)));
            }
            report.push(LawReport::new(&format!("coalg.commute_{k}_{l}"), violations));
        }
    }
    for (k, (d, cd)) in db.phi.iter().zip(&db.psi).enumerate() {
        report
            .laws
            .extend(cross_laws(&b.alg, &b.coalg, d, cd, &format!("_{k}")));
    }
    report
}

/// Swaps the roles of product and coproduct: the dual algebra multiplies by
/// the comultiplication array, the dual comultiplication is the negated
/// product array, and the families transpose and trade places.
pub fn dualize(db: &DiffASIBialgebra) -> DiffASIBialgebra {
    let mult = db.bialg.coalg.comult.clone();
    let comult = db.bialg.alg.mult.scale(&crate::scalar::int(-1));
    DiffASIBialgebra::new(
        ASIBialgebra::new(Algebra::new(mult), Coalgebra::new(comult)),
        db.psi.iter().map(Matrix::transpose).collect(),
        db.phi.iter().map(Matrix::transpose).collect(),
    )
}

/// Symmetry, nondegeneracy, and invariance 𝔅(a·b, c) = 𝔅(a, b·c).
pub fn check_frobenius(alg: &Algebra, form: &BilForm) -> CheckReport {
    let n = alg.dim();
    assert_eq!(form.dim(), n, "form dimension");
    let b = &form.b;
    let mut symmetric = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let r = b.get(i, j) - b.get(j, i);
            if !r.is_zero() {
                symmetric.push(Violation {
                    indices: vec![i, j],
                    residual: vec![(vec![], r)],
                });
            }
        }
    }
    let mut nondegenerate = Vec::new();
    for v in nullspace(b) {
        nondegenerate.extend(violation1(vec![], &v));
    }
    let mut invariant = Vec::new();
    let c = &alg.mult;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut r = Scalar::zero();
                for q in 0..n {
                    r += c.get(i, j, q) * b.get(q, k);
                    r -= c.get(j, k, q) * b.get(i, q);
                }
                if !r.is_zero() {
                    invariant.push(Violation {
                        indices: vec![i, j, k],
                        residual: vec![(vec![], r)],
                    });
                }
            }
        }
    }
    CheckReport::new(vec![
        LawReport::new("symmetric", symmetric),
        LawReport::new("nondegenerate", nondegenerate),
        LawReport::new("invariant", invariant),
    ])
}

/// Φ̂ with 𝔅(∂_k a, b) = 𝔅(a, ∂̂_k b); in coordinates ∂̂_k = B⁻¹∂_kᵀB.
/// Refused when the form is degenerate.
pub fn adjoint_family(form: &BilForm, phi: &[Matrix]) -> Result<Vec<Matrix>, ShapeError> {
    let inv = form.b.inverse().ok_or(ShapeError::Singular)?;
    Ok(phi
        .iter()
        .map(|d| inv.mul(&d.transpose()).mul(&form.b))
        .collect())
}

/// Coefficient-transposed product on the dual space: e_s*·e_t* reads the
/// comultiplication coefficients back as structure constants.
pub fn dual_algebra(coalg: &Coalgebra) -> Algebra {
    Algebra::new(coalg.comult.clone())
}

/// Matched-pair actions of the double: A acts on A* by the dual regular
/// actions (R*, L*), and A* acts back on A the same way through its own
/// product.
/// Coadjoint cross actions of the double: each side acts on the other's
/// dual through transposed regular representations.
pub fn double_actions(alg: &Algebra, coalg: &Coalgebra) -> MatchedPairActions {
    let n = alg.dim();
    let dual = dual_algebra(coalg);
    MatchedPairActions {
        la: (0..n).map(|i| alg.mult.right_op_basis(i).transpose()).collect(),
        ra: (0..n).map(|i| alg.mult.left_op_basis(i).transpose()).collect(),
        lb: (0..n).map(|s| dual.mult.right_op_basis(s).transpose()).collect(),
        rb: (0..n).map(|s| dual.mult.left_op_basis(s).transpose()).collect(),
    }
}

/// The 2n-dimensional algebra on A⊕A* with both dual regular actions, the
/// family Φ+Ψ*, and the standard pairing form. The report covers the
/// differential-algebra laws of the assembled product and the Frobenius laws
/// of the pairing; it passes exactly when check_diff_asi does.
pub fn double_construction(db: &DiffASIBialgebra) -> (DiffAlgebra, BilForm, CheckReport) {
    let n = db.dim();
    let a_side = DiffAlgebra::new(db.bialg.alg.clone(), db.phi.clone());
    let b_side = DiffAlgebra::new(
        dual_algebra(&db.bialg.coalg),
        db.psi.iter().map(Matrix::transpose).collect(),
    );
    let actions = double_actions(&db.bialg.alg, &db.bialg.coalg);
    let double = matched_pair_product(&a_side, &b_side, &actions);
    let form = BilForm::pairing(n);
    let mut report = check_law(&double.base, Law::Associative).namespaced("double");
    report.merge(check_diff_algebra(&double, false).namespaced("double"));
    report.merge(check_frobenius(&double.base, &form).namespaced("form"));
    (double, form, report)
}

/// ∂ a derivation, ð a coderivation, the four crossed identities, and the
/// same content routed through the double: ∂+ð* must derive the assembled
/// product.
pub fn check_coherent_derivation(b: &ASIBialgebra, p: &CoherentPair) -> CheckReport {
    let n = b.dim();
    assert!(p.d.rows() == n && p.cd.rows() == n, "pair shape");
    let mut report = CheckReport::default();
    report.push(LawReport::new(
        "derivation",
        crate::algebra::check_derivation(&b.alg, &p.d)
            .laws
            .remove(0)
            .violations,
    ));
    report.push(LawReport::new(
        "coderivation",
        coleibniz_violations(&b.coalg, &p.cd),
    ));
    report.laws.extend(cross_laws(&b.alg, &b.coalg, &p.d, &p.cd, ""));

    let zero = vec![Matrix::zero(n, n)];
    let a_side = DiffAlgebra::new(b.alg.clone(), zero.clone());
    let b_side = DiffAlgebra::new(dual_algebra(&b.coalg), zero);
    let double = matched_pair_product(&a_side, &b_side, &double_actions(&b.alg, &b.coalg));
    let lifted = block_diag(&p.d, &p.cd.transpose());
    report.merge(
        crate::algebra::check_derivation(&double.base, &lifted).namespaced("double"),
    );
    report
}

/// Exact basis of the solution space of the six joint linear conditions on
/// (∂, ð): Leibniz, the coderivation law, and the four crossed identities.
/// Unknown order is [∂ entries row-major, then ð entries row-major].
pub fn coherent_derivation_space(b: &ASIBialgebra) -> Vec<CoherentPair> {
    let n = b.dim();
    let c = &b.alg.mult;
    let d = &b.coalg.comult;
    let nn = n * n;
    let rows = 6 * n * n * n;
    let mut sys = Matrix::zero(rows, 2 * nn);
    let dx = |p: usize, q: usize| p * n + q;
    let cx = |p: usize, q: usize| nn + p * n + q;
    let mut row = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // Leibniz for ∂
                for q in 0..n {
                    let cur = sys.get(row, dx(k, q)) + c.get(i, j, q);
                    sys.set(row, dx(k, q), cur);
                }
                for p in 0..n {
                    let cur = sys.get(row, dx(p, i)) - c.get(p, j, k);
                    sys.set(row, dx(p, i), cur);
                    let cur = sys.get(row, dx(p, j)) - c.get(i, p, k);
                    sys.set(row, dx(p, j), cur);
                }
                // coderivation for ð
                let r1 = row + 1;
                for q in 0..n {
                    let cur = sys.get(r1, cx(q, k)) + d.get(i, j, q);
                    sys.set(r1, cx(q, k), cur);
                }
                for p in 0..n {
                    let cur = sys.get(r1, cx(i, p)) - d.get(p, j, k);
                    sys.set(r1, cx(i, p), cur);
                    let cur = sys.get(r1, cx(j, p)) - d.get(i, p, k);
                    sys.set(r1, cx(j, p), cur);
                }
                // ð(a)·b = a·∂(b) + ð(a·b)
                let r2 = row + 2;
                for p in 0..n {
                    let cur = sys.get(r2, cx(p, i)) + c.get(p, j, k);
                    sys.set(r2, cx(p, i), cur);
                }
                for q in 0..n {
                    let cur = sys.get(r2, dx(q, j)) - c.get(i, q, k);
                    sys.set(r2, dx(q, j), cur);
                    let cur = sys.get(r2, cx(k, q)) - c.get(i, j, q);
                    sys.set(r2, cx(k, q), cur);
                }
                // a·ð(b) = ∂(a)·b + ð(a·b)
                let r3 = row + 3;
                for q in 0..n {
                    let cur = sys.get(r3, cx(q, j)) + c.get(i, q, k);
                    sys.set(r3, cx(q, j), cur);
                }
                for p in 0..n {
                    let cur = sys.get(r3, dx(p, i)) - c.get(p, j, k);
                    sys.set(r3, dx(p, i), cur);
                }
                for q in 0..n {
                    let cur = sys.get(r3, cx(k, q)) - c.get(i, j, q);
                    sys.set(r3, cx(k, q), cur);
                }
                // (∂⊗id)Δ = (id⊗ð)Δ + Δ∂
                let r4 = row + 4;
                for p in 0..n {
                    let cur = sys.get(r4, dx(i, p)) + d.get(p, j, k);
                    sys.set(r4, dx(i, p), cur);
                }
                for q in 0..n {
                    let cur = sys.get(r4, cx(j, q)) - d.get(i, q, k);
                    sys.set(r4, cx(j, q), cur);
                    let cur = sys.get(r4, dx(q, k)) - d.get(i, j, q);
                    sys.set(r4, dx(q, k), cur);
                }
                // (id⊗∂)Δ = (ð⊗id)Δ + Δ∂
                let r5 = row + 5;
                for q in 0..n {
                    let cur = sys.get(r5, dx(j, q)) + d.get(i, q, k);
                    sys.set(r5, dx(j, q), cur);
                }
                for p in 0..n {
                    let cur = sys.get(r5, cx(i, p)) - d.get(p, j, k);
                    sys.set(r5, cx(i, p), cur);
                }
                for q in 0..n {
                    let cur = sys.get(r5, dx(q, k)) - d.get(i, j, q);
                    sys.set(r5, dx(q, k), cur);
                }
                row += 6;
            }
        }
    }
    nullspace(&sys)
        .into_iter()
        .map(|v| {
            let mut dm = Matrix::zero(n, n);
            let mut cm = Matrix::zero(n, n);
            for p in 0..n {
                for q in 0..n {
                    dm.set(p, q, v[dx(p, q)].clone());
                    cm.set(p, q, v[nn + p * n + q].clone());
                }
            }
            CoherentPair { d: dm, cd: cm }
        })
        .collect()
}

/// [(S1,S2),(T1,T2)] = (T1S1 - S1T1, S2T2 - T2S2).
pub fn coherent_bracket(p1: &CoherentPair, p2: &CoherentPair) -> CoherentPair {
    CoherentPair {
        d: commutator(&p2.d, &p1.d),
        cd: commutator(&p1.cd, &p2.cd),
    }
}

/// φ an algebra endomorphism, ψ a coalgebra endomorphism, the four mixed
/// intertwining identities, optionally invertibility of both, and the lift
/// φ+ψ* as an endomorphism of the double product.
pub fn check_coherent_endomorphism(
    b: &ASIBialgebra,
    phi: &Matrix,
    psi: &Matrix,
    automorphism: bool,
) -> CheckReport {
    let n = b.dim();
    assert!(phi.rows() == n && psi.rows() == n, "endomorphism shape");
    let mult = &b.alg.mult;
    let dm = &b.coalg.comult;
    let mut report = CheckReport::default();

    let mut alg_endo = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.apply(&mult.product_of_basis(i, j));
            let rhs = mult.bilinear(&phi.column(i), &phi.column(j));
            let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            alg_endo.extend(violation1(vec![i, j], &res));
        }
    }
    report.push(LawReport::new("algebra_endo", alg_endo));

    let mut coalg_endo = Vec::new();
    for k in 0..n {
        let lhs = dm.comult(&psi.column(k));
        let rhs = dm.comult_basis(k).map_both(psi, psi);
        coalg_endo.extend(violation2(vec![k], &lhs.sub(&rhs)));
    }
    report.push(LawReport::new("coalgebra_endo", coalg_endo));

    // ψ(φ(a)·b) = a·ψ(b) and ψ(a·φ(b)) = ψ(a)·b
    let mut m1 = Vec::new();
    let mut m2 = Vec::new();
    for i in 0..n {
        let ei = basis_vector(n, i);
        for j in 0..n {
            let ej = basis_vector(n, j);
            let lhs = psi.apply(&mult.bilinear(&phi.column(i), &ej));
            let rhs = mult.bilinear(&ei, &psi.column(j));
            let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            m1.extend(violation1(vec![i, j], &res));

            let lhs = psi.apply(&mult.bilinear(&ei, &phi.column(j)));
            let rhs = mult.bilinear(&psi.column(i), &ej);
            let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            m2.extend(violation1(vec![i, j], &res));
        }
    }
    report.push(LawReport::new("mixed_product_1", m1));
    report.push(LawReport::new("mixed_product_2", m2));

    // (id⊗φ)Δ = (ψ⊗id)Δφ and (φ⊗id)Δ = (id⊗ψ)Δφ
    let mut m3 = Vec::new();
    let mut m4 = Vec::new();
    for k in 0..n {
        let dk = dm.comult_basis(k);
        let dphik = dm.comult(&phi.column(k));
        m3.extend(violation2(
            vec![k],
            &dk.map_right(phi).sub(&dphik.map_left(psi)),
        ));
        m4.extend(violation2(
            vec![k],
            &dk.map_left(phi).sub(&dphik.map_right(psi)),
        ));
    }
    report.push(LawReport::new("mixed_comult_1", m3));
    report.push(LawReport::new("mixed_comult_2", m4));

    if automorphism {
        for (name, m) in [("phi_invertible", phi), ("psi_invertible", psi)] {
            let kernel: Vec<Violation> = nullspace(m)
                .iter()
                .filter_map(|v| violation1(vec![], v))
                .collect();
            report.push(LawReport::new(name, kernel));
        }
    }

    let zero = vec![Matrix::zero(n, n)];
    let a_side = DiffAlgebra::new(b.alg.clone(), zero.clone());
    let b_side = DiffAlgebra::new(dual_algebra(&b.coalg), zero);
    let double = matched_pair_product(&a_side, &b_side, &double_actions(&b.alg, &b.coalg));
    let lifted = block_diag(phi, &psi.transpose());
    let dc = &double.base.mult;
    let mut endo = Vec::new();
    for i in 0..2 * n {
        for j in 0..2 * n {
            let lhs = lifted.apply(&dc.product_of_basis(i, j));
            let rhs = dc.bilinear(&lifted.column(i), &lifted.column(j));
            let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            endo.extend(violation1(vec![i, j], &res));
        }
    }
    report.push(LawReport::new("double.endo", endo));
    report
}

/// ∂ = mult∘σ∘Δ; on an ASI bialgebra this is both a derivation and a
/// coderivation.
pub fn canonical_derivation(b: &ASIBialgebra) -> Matrix {
    let n = b.dim();
    let c = &b.alg.mult;
    let d = &b.coalg.comult;
    let mut out = Matrix::zero(n, n);
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let w = d.get(i, j, k);
                if w.is_zero() {
                    continue;
                }
                for l in 0..n {
                    let cur = out.get(l, k) + w * c.get(j, i, l);
                    out.set(l, k, cur);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::assoc3;
    use crate::scalar::int;

    fn trivial_bialgebra(n: usize) -> ASIBialgebra {
        ASIBialgebra::new(
            Algebra::new(StructTensor::zero(n)),
            Coalgebra::new(StructTensor::zero(n)),
        )
    }

    #[test]
    fn dual_of_a_commutative_product_is_a_cocommutative_coalgebra() {
        let c = Coalgebra::new(assoc3());
        assert!(check_coalgebra(&c, true).pass());
    }

    #[test]
    fn coassociativity_failure_is_witnessed() {
        // Δ(e_0) = e_1⊗e_1, Δ(e_1) = e_0⊗e_0: the two expansions of e_0 differ
        let d = StructTensor::from_int_entries(2, &[(1, 1, 0, 1), (0, 0, 1, 1)]);
        let report = check_coalgebra(&Coalgebra::new(d), false);
        assert!(!report.pass());
        assert!(!report.law("coassociative").unwrap().violations.is_empty());
    }

    #[test]
    fn zero_coproduct_admits_every_coderivation() {
        let c = Coalgebra::new(StructTensor::zero(3));
        let e = Matrix::from_int_rows(&[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]]);
        assert!(check_coderivation(&c, &e).pass());
    }

    #[test]
    fn zero_coproduct_with_associative_algebra_is_asi() {
        let b = ASIBialgebra::new(
            Algebra::new(assoc3()),
            Coalgebra::new(StructTensor::zero(3)),
        );
        assert!(check_asi(&b).pass());
        let db = DiffASIBialgebra::new(
            b,
            vec![Matrix::zero(3, 3)],
            vec![Matrix::zero(3, 3)],
        );
        assert!(check_diff_asi(&db).pass());
    }

    #[test]
    fn dualizing_twice_negates_both_structures() {
        let db = DiffASIBialgebra::new(
            ASIBialgebra::new(
                Algebra::new(assoc3()),
                Coalgebra::new(StructTensor::from_int_entries(3, &[(0, 1, 2, 1)])),
            ),
            vec![crate::fixtures::d1()],
            vec![crate::fixtures::d2()],
        );
        let twice = dualize(&dualize(&db));
        assert_eq!(twice.bialg.alg.mult, db.bialg.alg.mult.scale(&int(-1)));
        assert_eq!(twice.bialg.coalg.comult, db.bialg.coalg.comult.scale(&int(-1)));
        assert_eq!(twice.phi, db.phi);
        assert_eq!(twice.psi, db.psi);
    }

    #[test]
    fn pairing_form_is_frobenius_for_the_trivial_double() {
        // Δ = 0 with Ψ = -Φ: the double is the semidirect product on A⊕A*
        let db = DiffASIBialgebra::new(
            ASIBialgebra::new(
                Algebra::new(assoc3()),
                Coalgebra::new(StructTensor::zero(3)),
            ),
            vec![crate::fixtures::d1(), crate::fixtures::d2()],
            vec![crate::fixtures::d1().neg(), crate::fixtures::d2().neg()],
        );
        assert!(check_diff_asi(&db).pass());
        let (double, form, report) = double_construction(&db);
        assert!(report.pass(), "{report:?}");
        assert_eq!(double.dim(), 6);
        assert_eq!(form.dim(), 6);
    }

    #[test]
    fn degenerate_forms_fail_and_refuse_adjoints() {
        let alg = Algebra::new(StructTensor::zero(2));
        let form = BilForm::new(Matrix::zero(2, 2));
        let report = check_frobenius(&alg, &form);
        assert!(!report.law("nondegenerate").unwrap().pass);
        assert!(adjoint_family(&form, &[Matrix::identity(2)]).is_err());
    }

    #[test]
    fn adjoint_reverses_under_the_pairing_swap() {
        let form = BilForm::pairing(1);
        let d = Matrix::from_int_rows(&[&[3, 0], &[0, 5]]);
        let adj = adjoint_family(&form, &[d]).unwrap();
        assert_eq!(adj[0], Matrix::from_int_rows(&[&[5, 0], &[0, 3]]));
    }

    #[test]
    fn zero_pair_is_coherent_and_bracket_is_alternating() {
        let b = trivial_bialgebra(2);
        let p = CoherentPair {
            d: Matrix::zero(2, 2),
            cd: Matrix::zero(2, 2),
        };
        assert!(check_coherent_derivation(&b, &p).pass());
        let q = CoherentPair {
            d: Matrix::from_int_rows(&[&[0, 1], &[0, 0]]),
            cd: Matrix::from_int_rows(&[&[1, 0], &[0, 2]]),
        };
        let bq = coherent_bracket(&q, &q);
        assert!(bq.d.is_zero() && bq.cd.is_zero());
    }

    #[test]
    fn trivial_bialgebra_has_the_full_coherent_space() {
        let b = trivial_bialgebra(2);
        let space = coherent_derivation_space(&b);
        assert_eq!(space.len(), 8);
        for p in &space {
            assert!(check_coherent_derivation(&b, p).pass());
        }
    }

    #[test]
    fn identity_is_a_coherent_endomorphism_and_doubling_fails() {
        let b = ASIBialgebra::new(
            Algebra::new(assoc3()),
            Coalgebra::new(StructTensor::zero(3)),
        );
        let id = Matrix::identity(3);
        assert!(check_coherent_endomorphism(&b, &id, &id, true).pass());
        let report =
            check_coherent_endomorphism(&b, &id.scale(&int(2)), &id, false);
        assert!(!report.law("mixed_product_1").unwrap().pass);
    }

    #[test]
    fn canonical_derivation_vanishes_without_coproduct() {
        let b = ASIBialgebra::new(
            Algebra::new(assoc3()),
            Coalgebra::new(StructTensor::zero(3)),
        );
        assert!(canonical_derivation(&b).is_zero());
    }
}
