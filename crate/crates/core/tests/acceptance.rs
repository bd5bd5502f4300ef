//! End-to-end acceptance checks. Each test covers one numbered criterion,
//! verifies exact values (no tolerances), enforces its time budget, and
//! prints a single pass line; a failed assertion is the corresponding fail
//! line.

use std::time::{Duration, Instant};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use fc_core::affine::AffineDescriptor;
use fc_core::fc::{
    check_bounded_fc_nilpotent_chain, check_bounded_fc_solvable_chain, fc_membership,
};
use fc_core::finite::FinitePermDescriptor;
use fc_core::fixtures;
use fc_core::group::Element;
use fc_core::handle::class_size_mod;
use fc_core::oracle;
use fc_core::perm::Perm;
use fc_core::theorems::{
    commutator_finiteness, coset_cover_witness, neumann_decompose, nilpotent_tower,
    solvable_resolve, symmetry_check, witness_from_nilpotent, SymmetryVerdict,
    COSET_COVER_RADIUS,
};
use fc_core::{GroupRef, IndexValue, SubgroupHandle};

fn pass(criterion: &str, started: Instant, limit: Duration, detail: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= limit,
        "criterion {criterion}: over time budget ({elapsed:?} > {limit:?})"
    );
    println!("acceptance criterion {criterion}: PASS in {elapsed:?} — {detail}");
}

#[test]
fn criterion_01_tower_contract() {
    let started = Instant::now();
    let per_run = Duration::from_secs(5);

    let dinf = fixtures::dinf().unwrap();
    let run = Instant::now();
    let chain = check_bounded_fc_nilpotent_chain(&dinf.group, &dinf.nilpotent_chain).unwrap();
    let trace = nilpotent_tower(&chain).unwrap();
    assert!(run.elapsed() <= per_run, "dinf tower over budget");
    assert_eq!(trace.stabilizer_index, 2);
    assert_eq!(trace.nilpotency_class, 1);
    assert_eq!(trace.class_bound, 4);

    let z2c4 = fixtures::z2c4().unwrap();
    let run = Instant::now();
    let chain = check_bounded_fc_nilpotent_chain(&z2c4.group, &z2c4.nilpotent_chain).unwrap();
    let trace = nilpotent_tower(&chain).unwrap();
    assert!(run.elapsed() <= per_run, "z2c4 tower over budget");
    assert_eq!(trace.stabilizer_index, 4);
    assert_eq!(trace.nilpotency_class, 1);
    assert_eq!(trace.class_bound, 4);
    pass(
        "1 (tower contract)",
        started,
        Duration::from_secs(10),
        "dinf index 2 class 1; z2c4 index 4 class 1",
    );
}

#[test]
fn criterion_02_witness_round_trip() {
    let started = Instant::now();
    let dinf = fixtures::dinf().unwrap();
    let z = dinf.nilpotent_chain[1].clone();
    let witness = witness_from_nilpotent(&dinf.group, &z).unwrap();
    assert_eq!(witness.kernel_index, 2);
    assert!(witness.chain.level_bounds().iter().all(|&b| b <= 2));

    let d8 = fixtures::d8().unwrap();
    let full = SubgroupHandle::full(&d8.group);
    let witness = witness_from_nilpotent(&d8.group, &full).unwrap();
    assert_eq!(witness.kernel_index, 1);
    assert!(witness.chain.level_bounds().iter().all(|&b| b <= 1));
    pass(
        "2 (witness round-trip)",
        started,
        Duration::from_secs(1),
        "dinf bounds ≤ 2; d8 bounds ≤ 1",
    );
}

#[test]
fn criterion_03_neumann_decomposition() {
    let started = Instant::now();
    let zxs3 = fixtures::zxs3().unwrap();
    let full = SubgroupHandle::full(&zxs3.group);
    let result = neumann_decompose(&full).unwrap();
    assert_eq!(result.derived_order, 3);
    assert_eq!(result.centralizer_index, 2);
    assert_eq!(result.centralizer_class, 1);
    pass(
        "3 (bounded FC decomposition)",
        started,
        Duration::from_secs(1),
        "zxs3 derived order 3, centralizer index 2, class 1",
    );
}

#[test]
fn criterion_04_symmetry_suite() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut verified = 0u32;
    let mut hypothesis_false = 0u32;
    for fixture in fixtures::all().unwrap() {
        let group = &fixture.group;
        let ball = oracle::ball_enumerate(group, &group.standard_generators(), 3).unwrap();
        let pool: Vec<Element> = ball.elements().cloned().collect();
        let random_subgroup = |rng: &mut ChaCha8Rng| {
            let count = rng.gen_range(0..=2usize.min(pool.len()));
            let gens: Vec<Element> = (0..count)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            SubgroupHandle::generate(group, &gens).unwrap()
        };
        for _ in 0..20 {
            let h = random_subgroup(&mut rng);
            let k = random_subgroup(&mut rng);
            let n = random_subgroup(&mut rng);
            let report = symmetry_check(&h, &k, &n).unwrap();
            match report.verdict {
                SymmetryVerdict::Violation => panic!(
                    "violation on fixture {}: {}",
                    fixture.name, report.interpretation
                ),
                SymmetryVerdict::Verified => verified += 1,
                SymmetryVerdict::HypothesisFalse => hypothesis_false += 1,
            }
        }
    }
    assert!(verified > 0, "the suite never exercised the conclusion");
    pass(
        "4 (symmetry suite)",
        started,
        Duration::from_secs(60),
        &format!(
            "160 instances: {verified} verified, {hypothesis_false} hypothesis-false, 0 violations"
        ),
    );
}

#[test]
fn criterion_05_commutator_finiteness() {
    let started = Instant::now();
    let zxs3 = fixtures::zxs3().unwrap();
    let full = SubgroupHandle::full(&zxs3.group);
    let report = commutator_finiteness(&full, &full).unwrap();
    assert_eq!(report.commutator_order, 3);

    let dinf = fixtures::dinf().unwrap();
    let dfull = SubgroupHandle::full(&dinf.group);
    assert!(matches!(
        commutator_finiteness(&dfull, &dfull),
        Err(fc_core::Error::HypothesisFailed { .. })
    ));
    pass(
        "5 (mutual FC commutator)",
        started,
        Duration::from_secs(1),
        "zxs3 commutator order 3; dinf rejected with a hypothesis error",
    );
}

#[test]
fn criterion_06_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0u32;
    let mut infinite_seen = 0u32;
    for fixture in [
        fixtures::dinf().unwrap(),
        fixtures::zxs3().unwrap(),
        fixtures::z2c4().unwrap(),
    ] {
        let group = &fixture.group;
        let full = SubgroupHandle::full(group);
        let trivial = SubgroupHandle::trivial(group);
        let gens = group.standard_generators();
        let ball = oracle::ball_enumerate(group, &gens, 6).unwrap();
        let small_ball: Vec<Element> = ball.elements_within(3).cloned().collect();
        let mut symmetrized: Vec<Element> = Vec::new();
        for g in &gens {
            symmetrized.push(g.clone());
            symmetrized.push(group.inv(g));
        }
        for _ in 0..34 {
            // A random element: a word of length at most 6 in the
            // generators and their inverses.
            let mut g = group.identity();
            for _ in 0..rng.gen_range(0..=6) {
                g = group.mul(&g, &symmetrized[rng.gen_range(0..symmetrized.len())]);
            }
            let is_id = |x: &Element| group.is_identity(x);
            // Class size against the brute count.
            let size = class_size_mod(group, &g, &trivial).unwrap();
            let brute = oracle::brute_check(group, &gens, &g, is_id, 6).unwrap();
            match size {
                IndexValue::Finite(n) => {
                    assert!(brute.stabilized(), "finite class did not stabilize");
                    assert_eq!(brute.at_radius, n, "class size disagrees with the oracle");
                }
                IndexValue::Infinite => {
                    // Strictly growing counts at radii 3, 4, 5.
                    let c3 = oracle::conjugate_count(group, ball.elements_within(3), &g, is_id);
                    let c4 = oracle::conjugate_count(group, ball.elements_within(4), &g, is_id);
                    let c5 = oracle::conjugate_count(group, ball.elements_within(5), &g, is_id);
                    assert!(c3 < c4 && c4 < c5, "infinite class counts must keep growing");
                    infinite_seen += 1;
                }
            }
            // FC membership agrees with the oracle verdict.
            let fc = fc_membership(&full, &full, &trivial, &g).unwrap();
            assert_eq!(fc, size.is_finite());
            assert_eq!(fc, brute.stabilized());
            // The computed centralizer agrees with direct commutation on
            // a ball.
            let centralizer = full.centralizer_mod(&g, &trivial).unwrap();
            for h in &small_ball {
                assert_eq!(
                    centralizer.contains(h),
                    group.is_identity(&group.comm(h, &g)),
                    "centralizer membership disagrees with direct commutation"
                );
            }
            checked += 1;
        }
    }
    assert!(checked >= 100);
    assert!(infinite_seen > 0, "no infinite classes were exercised");
    pass(
        "6 (oracle equivalence)",
        started,
        Duration::from_secs(60),
        &format!("{checked} random elements, {infinite_seen} with verified infinite classes"),
    );
}

#[test]
fn criterion_07_finite_backend_against_naive_enumeration() {
    let started = Instant::now();
    for fixture in fixtures::all().unwrap() {
        let group = &fixture.group;
        let Some(order) = group.order().as_finite() else {
            continue;
        };
        assert!(order <= 24, "finite fixtures stay within the naive budget");
        let full = SubgroupHandle::full(group);
        let trivial = SubgroupHandle::trivial(group);
        let ball = oracle::ball_enumerate(group, &group.standard_generators(), 32).unwrap();
        // Order by exhaustive word enumeration.
        assert_eq!(ball.len() as u64, order, "naive order disagrees");
        let elements: Vec<Element> = ball.elements().cloned().collect();
        let is_id = |x: &Element| group.is_identity(x);
        // Conjugacy class sizes, element by element.
        let mut total = 0u64;
        for g in &elements {
            let size = class_size_mod(group, g, &trivial).unwrap();
            let count = oracle::conjugate_count(group, ball.elements(), g, is_id);
            assert_eq!(size, IndexValue::Finite(count));
            total += 1;
        }
        assert_eq!(total, order);
        // Upper central series against a naive recomputation by direct
        // commutation.
        let (series, _) = full.upper_central_series().unwrap();
        let mut naive_prev: Vec<Element> = vec![group.identity()];
        for level in &series {
            let mut computed: Vec<Element> = level.enumerate_elements().unwrap();
            computed.sort();
            assert_eq!(computed, naive_prev, "central series level disagrees");
            naive_prev = elements
                .iter()
                .filter(|z| {
                    elements
                        .iter()
                        .all(|g| naive_prev.binary_search(&group.comm(z, g)).is_ok())
                })
                .cloned()
                .collect();
            naive_prev.sort();
        }
        // Derived subgroup against naive closure of all commutators.
        let mut naive_derived: Vec<Element> = Vec::new();
        for a in &elements {
            for b in &elements {
                let c = group.comm(a, b);
                if !naive_derived.contains(&c) {
                    naive_derived.push(c);
                }
            }
        }
        loop {
            let mut grew = false;
            let snapshot = naive_derived.clone();
            for a in &snapshot {
                for b in &snapshot {
                    let p = group.mul(a, b);
                    if !naive_derived.contains(&p) {
                        naive_derived.push(p);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        naive_derived.sort();
        let mut derived = full.derived_subgroup().unwrap().enumerate_elements().unwrap();
        derived.sort();
        assert_eq!(derived, naive_derived, "derived subgroup disagrees");
    }
    pass(
        "7 (finite backend vs naive)",
        started,
        Duration::from_secs(30),
        "order, class sizes, central series, and derived subgroups match full enumeration",
    );
}

#[test]
fn criterion_08_solvable_resolver() {
    let started = Instant::now();
    let dinf = fixtures::dinf().unwrap();
    let chain = check_bounded_fc_solvable_chain(&dinf.group, &dinf.solvable_chain).unwrap();
    let resolution = solvable_resolve(&chain).unwrap();
    assert!(resolution.derived_length <= 2);
    let full = SubgroupHandle::full(&dinf.group);
    assert!(full.relative_index(&resolution.subgroup).unwrap().is_finite());

    let s3 = fixtures::s3().unwrap();
    let chain = check_bounded_fc_solvable_chain(&s3.group, &s3.solvable_chain).unwrap();
    let resolution = solvable_resolve(&chain).unwrap();
    assert!(resolution.derived_length <= 2);
    pass(
        "8 (solvable resolver)",
        started,
        Duration::from_secs(1),
        "dinf and s3 resolve to finite-index solvable subgroups, derived length ≤ 2",
    );
}

#[test]
fn criterion_09_coset_cover_harness() {
    let started = Instant::now();
    // The plane as an affine group with trivial point part.
    let z2 = GroupRef::new_affine(AffineDescriptor {
        rank: 2,
        finite_part: FinitePermDescriptor::new(1, vec![]).unwrap(),
        action: vec![],
    })
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let e = Perm::identity(1);
    for family in 0..50 {
        let count = rng.gen_range(1..=4usize);
        let cosets: Vec<(Element, SubgroupHandle)> = (0..count)
            .map(|_| {
                // A random line through the lattice: infinite index in the
                // plane.
                let (mut a, mut b) = (0i64, 0i64);
                while a == 0 && b == 0 {
                    a = rng.gen_range(-3..=3);
                    b = rng.gen_range(-3..=3);
                }
                let line = SubgroupHandle::generate(
                    &z2,
                    &[Element::affine(vec![a, b], e.clone())],
                )
                .unwrap();
                let offset = Element::affine(
                    vec![rng.gen_range(-10..=10), rng.gen_range(-10..=10)],
                    e.clone(),
                );
                (offset, line)
            })
            .collect();
        let witness = coset_cover_witness(&z2, &cosets, COSET_COVER_RADIUS)
            .unwrap_or_else(|err| panic!("family {family} found no witness: {err}"));
        for (offset, sub) in &cosets {
            assert!(
                !sub.contains(&z2.mul(&z2.inv(offset), &witness.element)),
                "family {family}: witness is covered"
            );
        }
        assert!(witness.radius <= COSET_COVER_RADIUS);
    }
    pass(
        "9 (coset cover harness)",
        started,
        Duration::from_secs(30),
        "50 random coset families in the plane all yield uncovered witnesses",
    );
}

#[test]
fn criterion_10_trace_refinement() {
    let started = Instant::now();
    for fixture in [fixtures::dinf().unwrap(), fixtures::z2c4().unwrap()] {
        let chain =
            check_bounded_fc_nilpotent_chain(&fixture.group, &fixture.nilpotent_chain).unwrap();
        let trace = nilpotent_tower(&chain).unwrap();
        for step in &trace.steps {
            // The odd tower level sits exactly two below the top; its
            // factor over the level beneath it must be finite.
            let odd = &step.tower[step.tower.len() - 2];
            let below = &step.tower[step.tower.len() - 3];
            let index = odd.relative_index(below).unwrap();
            assert!(
                index.is_finite(),
                "{}: odd factor at step {} is infinite",
                fixture.name,
                step.level
            );
        }
        // The certified bounds on the accepted chain are themselves
        // attained: re-derive each attained element's index.
        for (i, cert) in chain.certificates.iter().enumerate() {
            let full = SubgroupHandle::full(&fixture.group);
            let c = full
                .centralizer_mod(&cert.attained_by, &chain.levels[i])
                .unwrap();
            assert_eq!(
                full.relative_index(&c).unwrap(),
                IndexValue::Finite(cert.bound)
            );
        }
        // Re-run the bound computation to confirm it is deterministic.
        let again =
            check_bounded_fc_nilpotent_chain(&fixture.group, &fixture.nilpotent_chain).unwrap();
        for (a, b) in chain.certificates.iter().zip(again.certificates.iter()) {
            assert_eq!(a, b);
        }
    }
    pass(
        "10 (trace refinement)",
        started,
        Duration::from_secs(10),
        "odd tower factors are finite and chain certificates are attained and deterministic",
    );
}
