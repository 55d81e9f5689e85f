use packlab::graph::decode_graph6;
use packlab::verify::{
    self, witness_has_obstruction, EnumerationTask, Mode, Predicate, RunConfig, Status,
};

fn run(task: &EnumerationTask, workers: usize) -> verify::VerificationReport {
    verify::run(task, RunConfig { workers }).unwrap().without_timing()
}

#[test]
fn matching_threshold_n6() {
    let rep = verify::verify_matching_threshold(6).unwrap();
    assert_eq!(rep.status, Status::Pass);
    assert_eq!(rep.examined, 1 << 15);
    for c in &rep.checks {
        assert_eq!(c.extremal.as_ref().unwrap().edges, 9, "{}", c.label);
        assert_eq!(c.sharp, Some(true));
    }
}

#[test]
fn t1_and_mainthm1_are_complement_images() {
    let t1 = verify::verify_t1_threshold(6, 3).unwrap();
    assert_eq!(t1.status, Status::Pass);
    assert!(t1.checks.iter().all(|c| c.extremal.as_ref().unwrap().edges == 3));
    let m = verify::verify_mainthm1_threshold(6, 3).unwrap();
    assert_eq!(m.status, Status::Pass);
    assert!(m.notes.iter().all(|n| n.passed));
    // packing checks for D = 2, 3 pair with colouring checks for D = 3, 2
    for (pack, colour) in m.checks[..2].iter().zip(t1.checks.iter().rev()) {
        assert_eq!(pack.examined, colour.examined);
        assert_eq!(pack.bad, colour.bad);
        assert_eq!(pack.extremal.as_ref().unwrap().edges, 12);
    }
}

#[test]
fn reports_do_not_depend_on_workers() {
    let task = EnumerationTask::exhaustive(Predicate::T1, 6, Some(3));
    let one = run(&task, 1);
    assert_eq!(one, run(&task, 4));
    assert_eq!(one.to_json(), run(&task, 3).to_json());

    let sampled = EnumerationTask::sampled(Predicate::Conj1, 9, Some(3), 5000, 11);
    let a = run(&sampled, 1);
    assert_eq!(a.to_json(), run(&sampled, 4).to_json());
    assert_eq!(a.task.rng, Some(verify::RNG_ID));
}

#[test]
fn extremal_witnesses_revalidate() {
    for (p, n, r) in [(Predicate::Matching, 6, None), (Predicate::T1, 6, Some(3)), (Predicate::Mainthm1, 6, Some(3))] {
        let rep = run(&EnumerationTask::exhaustive(p, n, r), 0);
        for c in rep.checks.iter().filter(|c| !c.label.starts_with("complement")) {
            let w = c.extremal.as_ref().unwrap();
            assert_eq!(decode_graph6(&w.graph6).unwrap().edge_count() as u64, w.edges);
            assert!(witness_has_obstruction(p, n, r, &w.graph6).unwrap(), "{p} {}", c.label);
        }
    }
}

#[test]
fn tiny_node_cap_aborts() {
    let mut task = EnumerationTask::exhaustive(Predicate::T1, 6, Some(3));
    task.node_cap = 1;
    assert_eq!(run(&task, 0).status, Status::Aborted);
}

#[test]
fn searches_find_nothing_at_six() {
    for p in [Predicate::Conj1, Predicate::Question1] {
        let rep = run(&EnumerationTask::exhaustive(p, 6, Some(3)), 0);
        assert_eq!(rep.status, Status::Pass);
        assert!(rep.violations.is_empty());
        assert!(!rep.notes.is_empty() && rep.notes.iter().all(|n| n.passed));
    }
    for n in 1..=6 {
        assert_eq!(verify::verify_chvatal(n).unwrap().status, Status::Pass);
    }
}

#[test]
fn report_schema() {
    let rep = run(&EnumerationTask::exhaustive(Predicate::Matching, 4, None), 0);
    let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    for key in ["task", "examined", "violations", "extremal", "status"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v.get("elapsed_ms").is_none());
    assert_eq!(v["status"], "pass");
    assert_eq!(v["extremal"]["edges"], 3);
    let timed = verify::run(&EnumerationTask::exhaustive(Predicate::Matching, 4, None), RunConfig::default()).unwrap();
    assert!(timed.elapsed_ms.is_some());
    assert_eq!(EnumerationTask::sampled(Predicate::Chvatal, 5, None, 1, 1).mode, Mode::Sampled);
}
