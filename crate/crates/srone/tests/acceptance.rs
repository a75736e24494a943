//! Acceptance gate. One test per shipped guarantee, each re-deriving its
//! claim from the public API and asserting the stated wall-clock bound.
//! The bodies share a lock so every bound is measured without contention
//! from sibling tests; the inner runners still parallelize freely.

use std::sync::{Mutex, MutexGuard, PoisonError};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use srone::classify;
use srone::intmat::{self, IntMatrix};
use srone::jacobson::{self, Block2, ElementClass};
use srone::ring::{ElementId, Ring};
use srone::sr::{self, CornerOracle, Side, VariantKind};
use srone::suite::{self, Outcome};

static GATE: Mutex<()> = Mutex::new(());

fn serial() -> MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(PoisonError::into_inner)
}

fn within(started: Instant, bound_secs: u64, what: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(bound_secs),
        "{what} took {elapsed:?}, bound is {bound_secs}s"
    );
}

fn pass_count(reports: &[suite::PropertyReport]) -> usize {
    reports.iter().filter(|r| matches!(r.outcome, Outcome::Pass)).count()
}

/// Both circle products a + b − axb and a + b − bxa land in the same
/// membership class, exhaustively over all 16³ triples of M(2,Z/2) and all
/// 81³ triples of M(2,Z/3), for the unit, regular, and unit-regular classes
/// at once.
#[test]
fn a01_circle_products_share_membership_classes_exhaustively() {
    let _guard = serial();
    let started = Instant::now();
    let mut triples = 0u64;
    for spec in ["M(2,Z/2)", "M(2,Z/3)"] {
        let r = Ring::parse_spec(spec).unwrap();
        let unit: Vec<bool> = r.elements().map(|v| r.is_unit(v)).collect();
        let reg: Vec<bool> = r.elements().map(|v| classify::is_regular(&r, v)).collect();
        let ureg: Vec<bool> = r.elements().map(|v| classify::is_unit_regular(&r, v)).collect();
        for a in r.elements() {
            for b in r.elements() {
                let sum = r.add(a, b);
                for x in r.elements() {
                    let axb = r.sub(sum, r.mul(r.mul(a, x), b));
                    let bxa = r.sub(sum, r.mul(r.mul(b, x), a));
                    triples += 1;
                    assert!(
                        unit[axb] == unit[bxa] && reg[axb] == reg[bxa] && ureg[axb] == ureg[bxa],
                        "class mismatch in {spec} at a={}, b={}, x={}",
                        r.format_element(a),
                        r.format_element(b),
                        r.format_element(x),
                    );
                }
            }
        }
    }
    assert_eq!(triples, 16u64.pow(3) + 81u64.pow(3));

    // The shipped suite cells must report the same exhaustive volumes.
    let rings = [Ring::parse_spec("M(2,Z/2)").unwrap(), Ring::parse_spec("M(2,Z/3)").unwrap()];
    let reports = suite::run_suite(
        &rings,
        &["L3.2-unit", "L3.2-reg", "L3.2-ureg"],
        suite::DEFAULT_BUDGET,
    )
    .unwrap();
    assert_eq!(reports.len(), 6);
    for report in &reports {
        assert!(matches!(report.outcome, Outcome::Pass), "{} on {}", report.theorem, report.ring);
        let order = if report.ring == "M(2,Z/2)" { 16u64 } else { 81u64 };
        assert_eq!(report.instances, order.pow(3), "{} on {}", report.theorem, report.ring);
    }
    within(started, 10, "exhaustive class scan");
    println!("checked {triples} triples plus {} suite cells", reports.len());
}

/// The strongly regular class genuinely breaks the circle symmetry: a triple
/// in M(2,Z/4) with exactly one strongly regular side is found, and both
/// memberships survive an independent recomputation.
#[test]
fn a02_strongly_regular_asymmetry_is_found_in_mod_four_matrices() {
    let _guard = serial();
    let started = Instant::now();
    let payload = suite::find_counterexamples("sreg-asymmetry").unwrap();
    assert_eq!(payload["found"], true);
    assert_eq!(payload["ring"], "M(2,Z/4)");
    let a_flag = payload["a_side"]["strongly_regular"].as_bool().unwrap();
    let b_flag = payload["b_side"]["strongly_regular"].as_bool().unwrap();
    assert_ne!(a_flag, b_flag, "exactly one side is strongly regular");

    let r = Ring::parse_spec("M(2,Z/4)").unwrap();
    let parse = |key: &str| r.parse_element(payload[key].as_str().unwrap()).unwrap();
    let (a, b, x) = (parse("a"), parse("b"), parse("x"));
    let sum = r.add(a, b);
    let axb = r.sub(sum, r.mul(r.mul(a, x), b));
    let bxa = r.sub(sum, r.mul(r.mul(b, x), a));
    assert_eq!(r.format_element(axb), payload["a_side"]["value"].as_str().unwrap());
    assert_eq!(r.format_element(bxa), payload["b_side"]["value"].as_str().unwrap());
    assert_eq!(classify::is_strongly_regular(&r, axb), a_flag);
    assert_eq!(classify::is_strongly_regular(&r, bxa), b_flag);
    within(started, 1, "asymmetry search");
}

/// det(a + b − axb) = det(a + b − bxa) over 10⁴ random integer triples with
/// n = 3 and entries bounded by 9, and exhaustively over all 4096 binary
/// 2×2 triples; the corresponding trace identity fails and a mismatch is
/// produced.
#[test]
fn a03_determinant_symmetry_holds_while_trace_symmetry_fails() {
    let _guard = serial();
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    for trial in 0..10_000 {
        let a = intmat::random_matrix(&mut rng, 3, 9);
        let b = intmat::random_matrix(&mut rng, 3, 9);
        let x = intmat::random_matrix(&mut rng, 3, 9);
        let sum = a.add(&b);
        let right = sum.sub(&a.mul(&x).mul(&b)).det_exact();
        let left = sum.sub(&b.mul(&x).mul(&a)).det_exact();
        assert_eq!(right, left, "determinant mismatch at trial {trial}");
    }

    let reports = suite::run_suite(&[], &["T3.7-mod2"], suite::DEFAULT_BUDGET).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(matches!(reports[0].outcome, Outcome::Pass));
    assert_eq!(reports[0].instances, 4096);

    let mismatch = suite::find_counterexamples("trace-mismatch").unwrap();
    assert_eq!(mismatch["found"], true);
    within(started, 30, "determinant and trace sweep");
}

/// On every registry ring the right and left witness sets coincide for all
/// five variants, and right witnesses transfer to the other side, both
/// through the circle identity and through the involution where one exists.
#[test]
fn a04_right_and_left_element_sets_coincide_across_the_registry() {
    let _guard = serial();
    let mut ids = suite::expand_selector("T3.1").unwrap();
    ids.push("T3.9");
    ids.extend(suite::expand_selector("sjl").unwrap());
    let reports = suite::run_suite(&suite::default_registry(), &ids, suite::DEFAULT_BUDGET).unwrap();
    assert!(!suite::any_fail(&reports), "side coincidence failed somewhere");
    let passed = pass_count(&reports);
    assert!(passed > 0, "no cell actually ran");
    println!("{passed} of {} cells passed, rest skipped", reports.len());
}

/// Over the integers the 1×1 verdict is yes exactly on {0, ±1}; every no
/// comes with a refutation certificate whose residue avoids ±1 mod m and
/// which revalidates.
#[test]
fn a05_one_by_one_integer_verdicts_match_the_unit_interval() {
    let _guard = serial();
    let started = Instant::now();
    for n in -20i64..=20 {
        let verdict = intmat::sr1_int(&IntMatrix::diagonal(&[n]));
        assert_eq!(verdict.is_yes(), (-1..=1).contains(&n), "verdict for ({n})");
        if n.abs() >= 2 {
            let cert = verdict.certificate().unwrap_or_else(|| panic!("no certificate for ({n})"));
            assert!(cert.validate(), "certificate for ({n}) failed validation");
            assert!(cert.residue != BigInt::one(), "residue 1 for ({n})");
            assert!(cert.residue != &cert.modulus - 1, "residue m-1 for ({n})");
        }
    }
    within(started, 1, "one-by-one sweep");
}

/// The named decision vectors: diag(7,0), diag(2,0), diag(0,2) have stable
/// range one, diag(2,2) does not; 2E₁₁ in M(2,Z/4) has it without being
/// regular; the two block orientations reduce to determinants 0 and ±2 with
/// opposite verdicts; and the orientation audit derives the det-0 side and
/// flags the discrepancy.
#[test]
fn a06_named_integer_vectors_and_the_orientation_audit_agree() {
    let _guard = serial();
    let started = Instant::now();
    for (rows, expect) in [
        ([[7i64, 0], [0, 0]], true),
        ([[2, 0], [0, 0]], true),
        ([[0, 0], [0, 2]], true),
        ([[2, 0], [0, 2]], false),
    ] {
        let m = IntMatrix::from_rows(&[&rows[0], &rows[1]]);
        assert_eq!(intmat::sr1_int(&m).is_yes(), expect, "verdict for {m}");
    }

    let r = Ring::parse_spec("M(2,Z/4)").unwrap();
    let two_e11 = r.parse_element("[[2,0],[0,0]]").unwrap();
    assert!(sr::has_sr1(&r, two_e11, Side::Right, VariantKind::Full));
    assert!(!classify::is_regular(&r, two_e11));

    let a = IntMatrix::unit_entry(2, 0, 1, 1);
    let b = IntMatrix::unit_entry(2, 0, 0, 1);
    let c = IntMatrix::unit_entry(2, 1, 0, 2);
    let c_ab = c.sub(&a.mul(&b));
    let c_ba = c.sub(&b.mul(&a));
    assert_eq!(c_ab.det_exact(), BigInt::zero());
    assert_eq!(c_ba.det_exact().magnitude().to_u32_digits(), vec![2]);
    assert!(intmat::sr1_int(&c_ab).is_yes());
    assert!(!intmat::sr1_int(&c_ba).is_yes());

    let audit = intmat::audit_6_12();
    assert!(audit.criteria_agree, "determinant and Schur criteria disagree");
    assert_eq!(audit.sr_one_label.as_deref(), Some("[[1,b],[a,c]]"));
    assert!(audit.note.contains("contradicts"), "audit note must flag the discrepancy");
    within(started, 1, "named vectors and audit");
}

/// For A = diag(7,0), B = diag(2,1) no unit in the box |entries| ≤ 10
/// completes A + B·U to a unimodular matrix, the sampled unit dets all land
/// on ±2 mod 7, the sampled nontrivial idempotent dets all land on 0 mod 7,
/// and the two trivial idempotents are excluded by their dets.
#[test]
fn a07_unit_and_idempotent_variants_are_refuted_for_the_canonical_pair() {
    let _guard = serial();
    let started = Instant::now();
    let a = IntMatrix::diagonal(&[7, 0]);
    let b = IntMatrix::diagonal(&[2, 1]);
    let report = intmat::variant_refute(&a, &b, 10, 10_000).unwrap();
    assert!(report.unit_candidates > 0);
    assert!(report.unit_hits.is_empty(), "a unit witness slipped through: {:?}", report.unit_hits);
    assert_eq!(report.modulus, BigInt::from(7));
    assert_eq!(report.expected_residues, vec![BigInt::from(2), BigInt::from(5)]);
    assert!(report.unit_congruence_ok);
    assert!(report.idempotent_congruence_ok);
    assert_eq!(report.trivial_idempotent_dets, vec![BigInt::zero(), BigInt::from(9)]);
    assert_eq!(report.samples, 10_000);
    within(started, 30, "variant refutation");
    println!("box held {} unimodular candidates, none completed", report.unit_candidates);
}

/// One hundred random 3×3 matrices with det ∈ {0, ±1}, paired with random
/// X of entries ≤ 5, all complete to unimodular via the produced witness:
/// |det(A + (I − AX)B)| = 1 every time, under a second per instance.
#[test]
fn a08_integer_witnesses_complete_random_matrices_to_unimodular() {
    let _guard = serial();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce98);
    let identity = IntMatrix::identity(3);
    for trial in 0..100 {
        let a = if trial % 2 == 0 {
            let (u, _) = intmat::random_unimodular(&mut rng, 3, 12);
            let (v, _) = intmat::random_unimodular(&mut rng, 3, 12);
            let d = IntMatrix::diagonal(&[rng.gen_range(1..=9), rng.gen_range(1..=9), 0]);
            u.mul(&d).mul(&v)
        } else {
            intmat::random_unimodular(&mut rng, 3, 12).0
        };
        let x = intmat::random_matrix(&mut rng, 3, 5);
        let started = Instant::now();
        let b = intmat::int_witness(&a, &x)
            .unwrap_or_else(|e| panic!("witness failed at trial {trial}: {e}"));
        let completed = a.add(&identity.sub(&a.mul(&x)).mul(&b));
        let det = completed.det_exact();
        assert!(
            det.magnitude().is_one(),
            "trial {trial}: det(A + (I − AX)B) = {det} for A = {a}, X = {x}"
        );
        within(started, 1, "one witness instance");
    }
}

/// Every exhaustive family in the suite passes on the default registry
/// within the default budget, inside five minutes.
#[test]
fn a09_suite_families_pass_exhaustively_on_the_default_registry() {
    let _guard = serial();
    let started = Instant::now();
    let mut ids: Vec<&str> = Vec::new();
    for family in ["T2", "T4", "T5", "T6"] {
        ids.extend(suite::expand_selector(family).unwrap());
    }
    let reports = suite::run_suite(&suite::default_registry(), &ids, suite::DEFAULT_BUDGET).unwrap();
    assert!(!suite::any_fail(&reports), "an exhaustive family failed");
    let passed = pass_count(&reports);
    assert!(passed > 0, "no cell actually ran");
    within(started, 300, "exhaustive families");
    println!("{passed} of {} cells passed, rest skipped", reports.len());
}

/// Every certificate the library hands out re-verifies by multiplication:
/// element witnesses on both sides and all variants, comaximal pair
/// witnesses, block inverses, Peirce inverses, corner suspensions, and
/// involution transports. No exceptions.
#[test]
fn a10_certificates_and_inverses_reverify_by_multiplication() {
    let _guard = serial();
    let mut certs = 0u64;

    // Element witnesses, both sides, all five variants.
    for spec in ["Z/12", "M(2,Z/2)", "T(2,Z/3)"] {
        let r = Ring::parse_spec(spec).unwrap();
        for side in [Side::Right, Side::Left] {
            for variant in [
                VariantKind::Full,
                VariantKind::Unit,
                VariantKind::Idempotent,
                VariantKind::Regular,
                VariantKind::Square,
            ] {
                for a in r.elements() {
                    for x in r.elements() {
                        if let Some(cert) = sr::sr1_witness(&r, a, x, side, variant) {
                            assert!(cert.verify(&r), "{spec}: form3 witness failed re-verification");
                            certs += 1;
                        }
                    }
                }
            }
        }
    }

    // Pair witnesses for every comaximal pair; non-comaximal pairs must be
    // rejected rather than certified.
    for spec in ["Z/12", "M(2,Z/2)", "T(2,Z/2)"] {
        let r = Ring::parse_spec(spec).unwrap();
        for a in r.elements() {
            for t in r.elements() {
                if let Ok(cert) = sr::pair_witness(&r, a, t) {
                    assert!(cert.verify(&r), "{spec}: pair witness failed re-verification");
                    certs += 1;
                }
            }
        }
    }

    // Block inverses over Z/6: whenever the Schur test grants a unit, the
    // returned blocks multiply to the identity on both sides.
    let z6 = Ring::parse_spec("Z/6").unwrap();
    let block_mul = |l: &Block2, r: &Block2| Block2 {
        u: z6.add(z6.mul(l.u, r.u), z6.mul(l.q, r.p)),
        q: z6.add(z6.mul(l.u, r.q), z6.mul(l.q, r.r)),
        p: z6.add(z6.mul(l.p, r.u), z6.mul(l.r, r.p)),
        r: z6.add(z6.mul(l.p, r.q), z6.mul(l.r, r.r)),
    };
    let id2 = Block2::identity(&z6);
    let mut inverses = 0u64;
    for u in z6.elements().filter(|&u| z6.is_unit(u)) {
        for q in z6.elements() {
            for p in z6.elements() {
                for rr in z6.elements() {
                    let blk = Block2 { u, q, p, r: rr };
                    let verdict = jacobson::banachiewicz(&z6, blk, ElementClass::Unit).unwrap();
                    if let Some(inv) = verdict.inverse {
                        assert!(verdict.in_class);
                        assert_eq!(block_mul(&blk, &inv), id2);
                        assert_eq!(block_mul(&inv, &blk), id2);
                        inverses += 1;
                    }
                }
            }
        }
    }
    assert!(inverses > 0);
    certs += inverses;

    // Peirce inverses in M(2,Z/3) at the corner E11: every accepted
    // (x, p, y) multiplies out to 1 on both sides.
    let m = Ring::parse_spec("M(2,Z/3)").unwrap();
    let e = m.parse_element("[[1,0],[0,0]]").unwrap();
    let f = m.sub(m.one(), e);
    let component = |left: ElementId, right: ElementId| -> Vec<ElementId> {
        m.elements().filter(|&v| m.mul(m.mul(left, v), right) == v).collect()
    };
    let mut accepted = 0u64;
    for &x in &component(e, e) {
        for &p in &component(f, e) {
            for &y in &component(f, f) {
                if let Ok(inv) = jacobson::peirce_inverse(&m, e, x, p, y) {
                    let total = m.add(m.add(x, p), y);
                    assert_eq!(m.mul(total, inv), m.one());
                    assert_eq!(m.mul(inv, total), m.one());
                    accepted += 1;
                }
            }
        }
    }
    assert!(accepted > 0);
    certs += accepted;

    // Corner suspension in M(2,Z/4) and the corner unit extracted back out.
    let m4 = Ring::parse_spec("M(2,Z/4)").unwrap();
    let e4 = m4.parse_element("[[1,0],[0,0]]").unwrap();
    let a4 = m4.parse_element("[[2,0],[0,0]]").unwrap();
    let p4 = m4.parse_element("[[0,0],[1,0]]").unwrap();
    let scan = |ring: &Ring, e, a, t| sr::scan_corner_witness(ring, e, a, t);
    let cert = sr::suspend_witness(&m4, e4, a4, p4, m4.zero(), &scan as &dyn CornerOracle).unwrap();
    assert!(cert.verify(&m4), "suspension certificate failed re-verification");
    let (k, k_inv) = sr::suspension_corner_unit(&m4, e4, cert.u).unwrap();
    assert_eq!(m4.mul(k, k_inv), e4);
    assert_eq!(m4.mul(k_inv, k), e4);
    certs += 2;

    // Involution transport: every right witness over the transposed matrix
    // ring crosses to a verified left witness.
    let mt = Ring::matrix(2, Ring::modular(2).unwrap()).unwrap().with_transpose().unwrap();
    let mut transported = 0u64;
    for a in mt.elements() {
        for x in mt.elements() {
            if let Some(right) = sr::sr1_witness(&mt, a, x, Side::Right, VariantKind::Full) {
                let left = sr::involution_transport(&mt, &right)
                    .expect("transport must exist under an involution");
                assert_eq!(left.side, Side::Left);
                assert!(left.verify(&mt), "transported witness failed re-verification");
                transported += 1;
            }
        }
    }
    assert!(transported > 0);
    certs += transported;

    println!("{certs} certificates re-verified, zero failures");
}

/// Two consecutive full runs of the entire suite over the default registry
/// produce byte-identical reports once the timing field is stripped.
#[test]
fn a11_consecutive_full_runs_are_byte_identical() {
    let _guard = serial();
    let ids = suite::expand_selector("all").unwrap();
    let registry = suite::default_registry();
    let first = suite::run_suite(&registry, &ids, suite::DEFAULT_BUDGET).unwrap();
    let second = suite::run_suite(&registry, &ids, suite::DEFAULT_BUDGET).unwrap();
    assert!(!suite::any_fail(&first), "the full suite has a failing cell");
    assert_eq!(first.len(), second.len());
    let bytes = |reports: &[suite::PropertyReport]| {
        reports
            .iter()
            .map(|r| serde_json::to_string(&r.timeless()).unwrap())
            .collect::<Vec<_>>()
    };
    assert_eq!(bytes(&first), bytes(&second), "reports drifted between runs");
    println!("{} reports, byte-identical across runs", first.len());
}
