//! Acceptance gate. Seven criteria, one verdict line each, exact arithmetic
//! throughout (tolerance is identically zero). Run with --nocapture to see
//! the per-criterion lines; any failure also fails the named test.

mod common;

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{oracle, seed};
use forge::algebra::{check_diff_algebra, derivation_space, Algebra, DiffAlgebra};
use forge::bialgebra::{
    check_coherent_derivation, check_diff_asi, coherent_bracket, coherent_derivation_space,
    double_actions, double_construction, dual_algebra, CoherentPair, DiffASIBialgebra,
};
use forge::bimodule::matched_pair_assemble;
use forge::dendriform::{check_zinbiel, dendriform_to_diff_asi, Zinbiel};
use forge::matrix::{in_span, Matrix};
use forge::poisson::{
    check_poisson_bialgebra, coboundary_poisson, induce_poisson_coalgebra,
    pipeline_zinbiel_to_poisson_bialgebra, pybe_residual, PoissonPipeline,
};
use forge::scalar::{int, Scalar};
use forge::tensor::{Element2, StructTensor};
use forge::yangbaxter::check_psi_admissible_aybe;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn verdict_line(n: usize, title: &str, body: impl FnOnce() + UnwindSafe) {
    let result = catch_unwind(body);
    let verdict = if result.is_ok() { "pass" } else { "fail" };
    println!("criterion {n} ({title}): {verdict}");
    if let Err(e) = result {
        resume_unwind(e);
    }
}

fn z3() -> Zinbiel {
    Zinbiel::new(seed::zinbiel3(), vec![seed::d1(), seed::d2()])
}

fn pipeline() -> PoissonPipeline {
    pipeline_zinbiel_to_poisson_bialgebra(&z3()).expect("pipeline on the seed fixture")
}

fn d6() -> DiffASIBialgebra {
    dendriform_to_diff_asi(&z3().dendriform_view(), &[int(0), int(0)]).expect("seed extension")
}

/// d on the original summand, minus its transpose on the dual summand.
fn extend_to_double(d: &Matrix) -> Matrix {
    let mut e = Matrix::zero(6, 6);
    for p in 0..3 {
        for q in 0..3 {
            e.set(p, q, d.get(p, q).clone());
            e.set(3 + p, 3 + q, -d.get(q, p).clone());
        }
    }
    e
}

fn flatten_pair(d: &Matrix, cd: &Matrix) -> Vec<Scalar> {
    let n = d.rows();
    let mut v = Vec::with_capacity(2 * n * n);
    for m in [d, cd] {
        for p in 0..n {
            for q in 0..n {
                v.push(m.get(p, q).clone());
            }
        }
    }
    v
}

fn flatten_matrix(m: &Matrix) -> Vec<Scalar> {
    let n = m.rows();
    (0..n * n).map(|x| m.get(x / n, x % n).clone()).collect()
}

fn witness_count(report: &forge::report::CheckReport) -> usize {
    report.laws.iter().map(|l| l.violations.len()).sum()
}

const DELTAS: [i64; 4] = [-2, -1, 1, 2];

#[test]
fn criterion_1_pipeline_reproduces_the_worked_example_end_to_end() {
    verdict_line(1, "worked example reproduced end to end", || {
        let dir = tempfile::tempdir().expect("tempdir");
        let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/z3.json");
        let status = Command::new(env!("CARGO_BIN_EXE_forge"))
            .args(["build", fixture, "--op", "zinbiel-pipeline", "--out"])
            .arg(dir.path())
            .output()
            .expect("spawn");
        assert!(
            status.status.success(),
            "pipeline run failed: {}",
            String::from_utf8_lossy(&status.stderr)
        );
        let doc = |name: &str| {
            let text = std::fs::read_to_string(dir.path().join(format!("{name}.json")))
                .unwrap_or_else(|e| panic!("{name}.json: {e}"));
            forge::doc::parse_document(&text).unwrap_or_else(|e| panic!("{name}.json: {e}"))
        };

        let zin = doc("zinbiel").as_zinbiel().unwrap();
        assert_eq!(zin.star, seed::zinbiel3());
        assert_eq!(zin.phi, vec![seed::d1(), seed::d2()]);

        let assoc = doc("associated").as_diff_algebra().unwrap();
        assert_eq!(*assoc.base.mult.get(0, 0, 2), int(2));
        assert_eq!(*assoc.base.mult.get(0, 1, 2), int(1));
        assert_eq!(*assoc.base.mult.get(1, 1, 2), int(2));
        assert_eq!(assoc.base.mult, seed::assoc3());
        assert_eq!(assoc.phi, vec![seed::d1(), seed::d2()]);

        let poisson = doc("poisson").as_poisson().unwrap();
        assert_eq!(*poisson.bracket.get(0, 1, 2), int(-3));
        assert_eq!(poisson.bracket, seed::bracket3());
        assert_eq!(poisson.prod, seed::assoc3());

        let diamond = doc("pre_lie").as_algebra().unwrap();
        assert_eq!(*diamond.mult.get(0, 0, 2), int(-1));
        assert_eq!(*diamond.mult.get(0, 1, 2), int(-2));
        assert_eq!(*diamond.mult.get(1, 0, 2), int(1));
        assert_eq!(*diamond.mult.get(1, 1, 2), int(-1));
        assert_eq!(diamond.mult, seed::diamond3());

        let db = doc("bialgebra").as_diff_asi_bialgebra().unwrap();
        assert_eq!(db.bialg.alg.mult, seed::double6_product());
        assert_eq!(db.phi, vec![extend_to_double(&seed::d1()), extend_to_double(&seed::d2())]);
        assert_eq!(db.psi, db.phi.iter().map(|m| m.scale(&int(-1))).collect::<Vec<_>>());

        let r = doc("r").as_r_element().unwrap();
        assert_eq!(r, seed::canonical_r6());

        let ambient = doc("ambient_poisson").as_poisson().unwrap();
        assert_eq!(*ambient.bracket.get(0, 5, 3), int(1));
        assert_eq!(*ambient.bracket.get(0, 5, 4), int(2));
        assert_eq!(*ambient.prod.get(1, 5, 3), int(1));
        assert_eq!(*ambient.prod.get(1, 5, 4), int(1));
        assert_eq!(ambient.bracket, seed::double6_bracket());
        assert_eq!(ambient.prod, seed::double6_product());

        let pb = doc("poisson_bialgebra").as_poisson_bialgebra().unwrap();
        assert_eq!(pb.alg.bracket, seed::double6_bracket());
        assert_eq!(pb.alg.prod, seed::double6_product());
        for (k, expected) in seed::double6_delta_expected() {
            assert_eq!(pb.cobracket.comult_basis(k), expected, "cobracket of basis {k}");
        }
        for (k, expected) in seed::double6_comult_expected() {
            assert_eq!(pb.comult.comult_basis(k), expected, "comult of basis {k}");
            assert_eq!(db.bialg.coalg.comult.comult_basis(k), expected);
        }
    });
}

#[test]
fn criterion_2_canonical_r_is_admissible_and_the_assembly_checks_out() {
    verdict_line(2, "canonical r admissible, assembled structure valid, under a second", || {
        let start = Instant::now();
        let db = d6();
        let expected_phi = vec![extend_to_double(&seed::d1()), extend_to_double(&seed::d2())];
        assert_eq!(db.phi, expected_phi);
        assert_eq!(
            db.psi,
            expected_phi.iter().map(|m| m.scale(&int(-1))).collect::<Vec<_>>()
        );

        let da = DiffAlgebra::new(db.bialg.alg.clone(), db.phi.clone());
        let admissible = check_psi_admissible_aybe(&da, &db.psi, &seed::canonical_r6());
        assert!(admissible.pass());
        for law in &admissible.laws {
            assert!(law.violations.is_empty(), "{} left a residual", law.law);
        }

        let asi = check_diff_asi(&db);
        assert!(asi.pass());
        for law in &asi.laws {
            assert!(law.violations.is_empty(), "{} left a residual", law.law);
        }
        assert!(start.elapsed() < Duration::from_secs(1), "took {:?}", start.elapsed());
    });
}

#[test]
fn criterion_3_triangle_fails_in_unison_under_mutation() {
    verdict_line(3, "bialgebra, matched pair, and double agree on 10 mutations", || {
        let triangle = |db: &DiffASIBialgebra| {
            let asi = check_diff_asi(db);
            let a_side = DiffAlgebra::new(db.bialg.alg.clone(), db.phi.clone());
            let b_side = DiffAlgebra::new(
                dual_algebra(&db.bialg.coalg),
                db.psi.iter().map(Matrix::transpose).collect(),
            );
            let actions = double_actions(&db.bialg.alg, &db.bialg.coalg);
            let (_, matched) = matched_pair_assemble(&a_side, &b_side, &actions);
            let (_, _, double) = double_construction(db);
            (asi.pass(), matched.pass(), double.pass())
        };

        let db = d6();
        assert_eq!(triangle(&db), (true, true, true));

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..10 {
            let mut m = db.clone();
            let (i, j, k) = (rng.gen_range(0..6), rng.gen_range(0..6), rng.gen_range(0..6));
            let delta = int(DELTAS[rng.gen_range(0..4)]);
            let tensor = if rng.gen_range(0..2) == 0 {
                &mut m.bialg.alg.mult
            } else {
                &mut m.bialg.coalg.comult
            };
            let w = tensor.get(i, j, k) + &delta;
            tensor.set(i, j, k, w);
            assert_eq!(
                triangle(&m),
                (false, false, false),
                "trial {trial} mutation at ({i},{j},{k}) escaped detection"
            );
        }
    });
}

#[test]
fn criterion_4_coherent_pairs_form_a_lie_algebra_containing_the_seed_family() {
    verdict_line(4, "coherent derivation space closes and holds the pipeline pairs", || {
        let db = d6();
        let space = coherent_derivation_space(&db.bialg);
        assert!(!space.is_empty());
        for p in &space {
            assert!(check_coherent_derivation(&db.bialg, p).pass());
        }

        let basis: Vec<Vec<Scalar>> = space.iter().map(|p| flatten_pair(&p.d, &p.cd)).collect();
        for p1 in &space {
            for p2 in &space {
                let br = coherent_bracket(p1, p2);
                assert!(in_span(&basis, &flatten_pair(&br.d, &br.cd)));
                assert!(check_coherent_derivation(&db.bialg, &br).pass());
            }
        }

        for (d, cd) in db.phi.iter().zip(&db.psi) {
            let pair = CoherentPair { d: d.clone(), cd: cd.clone() };
            assert!(check_coherent_derivation(&db.bialg, &pair).pass());
            assert!(in_span(&basis, &flatten_pair(d, cd)));
        }
    });
}

#[test]
fn criterion_5_r_solves_the_poisson_equation_and_both_cobracket_routes_agree() {
    verdict_line(5, "pybe residual vanishes and the two cobracket routes agree", || {
        let out = pipeline();
        let (bracket_res, prod_res) = pybe_residual(&out.ambient_poisson, &out.r);
        assert!(bracket_res.is_zero());
        assert!(prod_res.is_zero());

        let via_families =
            induce_poisson_coalgebra(&out.bialgebra.bialg.coalg.comult, &out.bialgebra.psi);
        let (via_coboundary, _) = coboundary_poisson(&out.ambient_poisson, &out.r);
        assert_eq!(via_families, via_coboundary);
        assert_eq!(via_families, out.cobracket);
        assert_eq!(via_families, out.poisson_bialgebra.cobracket);
    });
}

#[test]
fn criterion_6_library_and_oracle_agree() {
    verdict_line(6, "derivation spaces, the residual witness, and the biconditional", || {
        // (a) derivation space vs the independent row-reduction oracle, on the
        // seed algebra and on random small commutative products.
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut corpora: Vec<(usize, Vec<(usize, usize, usize, i64)>)> = vec![(
            3,
            vec![(0, 0, 2, 2), (0, 1, 2, 1), (1, 0, 2, 1), (1, 1, 2, 2)],
        )];
        for _ in 0..5 {
            let n = rng.gen_range(1..=3);
            let mut entries = Vec::new();
            for i in 0..n {
                for j in i..n {
                    for k in 0..n {
                        let w = rng.gen_range(-2..=2i64);
                        if w != 0 {
                            entries.push((i, j, k, w));
                            if i != j {
                                entries.push((j, i, k, w));
                            }
                        }
                    }
                }
            }
            corpora.push((n, entries));
        }
        for (n, entries) in &corpora {
            let alg = Algebra::new(StructTensor::from_int_entries(*n, entries));
            let lib: Vec<Vec<Scalar>> =
                derivation_space(&alg).iter().map(flatten_matrix).collect();
            let ora = oracle::derivation_basis(&oracle::cube(*n, entries));
            assert_eq!(lib.len(), ora.len(), "dimension mismatch at n={n}");
            assert!(oracle::same_span(&lib, &ora), "span mismatch at n={n}");
        }

        // (b) the frozen residual witness, against the expansion oracle.
        let a3 = Algebra::new(seed::assoc3());
        let r = Element2::from_int_entries(3, 3, &[(0, 2, 1), (2, 0, -1)]);
        let res = forge::yangbaxter::aybe_residual(&a3, &r);
        assert_eq!(res.entries(), vec![(2, 2, 2, int(6))]);
        let ora = oracle::aybe_combination(
            &oracle::cube(3, &[(0, 0, 2, 2), (0, 1, 2, 1), (1, 0, 2, 1), (1, 1, 2, 2)]),
            &[(0, 2, oracle::q(1)), (2, 0, oracle::q(-1))],
        );
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(*res.get(i, j, k), ora[i][j][k]);
                }
            }
        }

        // (c) the tensor-side and operator-side characterizations agree on 20
        // random antisymmetric r.
        let da = DiffAlgebra::new(a3, vec![seed::d1(), seed::d2()]);
        let psi: Vec<Matrix> = da.phi.iter().map(|m| m.scale(&int(-1))).collect();
        for trial in 0..20 {
            let mut r = Element2::zero(3, 3);
            for i in 0..3 {
                for j in i + 1..3 {
                    let w = int(rng.gen_range(-2..=2));
                    r.set(i, j, w.clone());
                    r.set(j, i, -w);
                }
            }
            let report = forge::yangbaxter::check_r_sharp_equivalence(&da, &psi, &r);
            let side = |prefix: &str| {
                report
                    .laws
                    .iter()
                    .filter(|l| l.law.starts_with(prefix))
                    .all(|l| l.pass)
            };
            assert_eq!(
                side("aybe_side."),
                side("operator_side."),
                "sides disagree on trial {trial}"
            );
            assert!(report.law("equivalence").expect("law").pass);
        }
    });
}

#[test]
fn criterion_7_mutated_fixtures_always_fail_with_witnesses() {
    verdict_line(7, "twenty mutations per axiom suite, all caught with witnesses", || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let caught = |report: forge::report::CheckReport, what: &str| {
            assert!(!report.pass(), "{what} passed after mutation");
            assert!(witness_count(&report) >= 1, "{what} failed without a witness");
        };

        let z = z3();
        assert!(check_zinbiel(&z).pass());
        for trial in 0..20 {
            let mut m = z.clone();
            let slot = rng.gen_range(0..45);
            let delta = int(DELTAS[rng.gen_range(0..4)]);
            if slot < 27 {
                let (i, j, k) = (slot / 9, (slot / 3) % 3, slot % 3);
                let w = m.star.get(i, j, k) + &delta;
                m.star.set(i, j, k, w);
            } else {
                let (f, p, q) = ((slot - 27) / 9, ((slot - 27) / 3) % 3, slot % 3);
                let w = m.phi[f].get(p, q) + &delta;
                m.phi[f].set(p, q, w);
            }
            caught(check_zinbiel(&m), &format!("zinbiel trial {trial}"));
        }

        let da = DiffAlgebra::new(Algebra::new(seed::assoc3()), vec![seed::d1(), seed::d2()]);
        assert!(check_diff_algebra(&da, true).pass());
        for trial in 0..20 {
            let mut m = da.clone();
            let slot = rng.gen_range(0..45);
            let delta = int(DELTAS[rng.gen_range(0..4)]);
            if slot < 27 {
                let (i, j, k) = (slot / 9, (slot / 3) % 3, slot % 3);
                let w = m.base.mult.get(i, j, k) + &delta;
                m.base.mult.set(i, j, k, w);
            } else {
                let (f, p, q) = ((slot - 27) / 9, ((slot - 27) / 3) % 3, slot % 3);
                let w = m.phi[f].get(p, q) + &delta;
                m.phi[f].set(p, q, w);
            }
            caught(check_diff_algebra(&m, true), &format!("derivation trial {trial}"));
        }

        let db = d6();
        assert!(check_diff_asi(&db).pass());
        for trial in 0..20 {
            let mut m = db.clone();
            let slot = rng.gen_range(0..432);
            let delta = int(DELTAS[rng.gen_range(0..4)]);
            let (i, j, k) = ((slot / 36) % 6, (slot / 6) % 6, slot % 6);
            let tensor = if slot < 216 {
                &mut m.bialg.alg.mult
            } else {
                &mut m.bialg.coalg.comult
            };
            let w = tensor.get(i, j, k) + &delta;
            tensor.set(i, j, k, w);
            caught(check_diff_asi(&m), &format!("asi trial {trial}"));
        }

        // The product and comultiplication have flat directions along the
        // square-zero ideal span{e2,e3,e4}: shifting a diagonal product into
        // that span (or a diagonal comultiplication onto its complement)
        // yields another valid Poisson bialgebra, so those slots cannot
        // witness unsoundness and the corpus samples the rest.
        let pb = pipeline().poisson_bialgebra;
        assert!(check_poisson_bialgebra(&pb).pass());
        let mut slots = Vec::new();
        for t in 0..4usize {
            for i in 0..6 {
                for j in 0..6 {
                    for k in 0..6 {
                        let flat = match t {
                            1 => i == j && matches!(i, 0 | 1 | 5) && matches!(k, 2 | 3 | 4),
                            3 => i == j && matches!(i, 2 | 3 | 4) && matches!(k, 0 | 1 | 5),
                            _ => false,
                        };
                        if !flat {
                            slots.push((t, i, j, k));
                        }
                    }
                }
            }
        }
        for trial in 0..20 {
            let mut m = pb.clone();
            let (t, i, j, k) = slots[rng.gen_range(0..slots.len())];
            let delta = int(DELTAS[rng.gen_range(0..4)]);
            let tensor = match t {
                0 => &mut m.alg.bracket,
                1 => &mut m.alg.prod,
                2 => &mut m.cobracket,
                _ => &mut m.comult,
            };
            let w = tensor.get(i, j, k) + &delta;
            tensor.set(i, j, k, w);
            caught(check_poisson_bialgebra(&m), &format!("poisson trial {trial}"));
        }
    });
}
