use logbehave_core::holonomic::{load_store, save_store, Sequence};
use logbehave_core::induction::{clf_bound, induction_step, pointwise_bound_check, BoundSpec, Side};
use logbehave_core::logbehavior::{check_log_convex, check_root_log_concave, CheckOptions};
use logbehave_core::paperchecks::{lemma_2_1, theorem_1_1, Context};

#[test]
fn store_survives_a_disk_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("clf.seqcache");
    let mut seq = Sequence::clf();
    seq.extend_to(120).unwrap();
    save_store(seq.store(), &path).unwrap();
    let loaded = load_store(&path).unwrap();
    let mut again = Sequence::with_store(seq.recurrence().clone(), loaded).unwrap();
    assert_eq!(again.term(120).unwrap(), seq.term(120).unwrap());
}

#[test]
fn checkers_and_certificates_compose() {
    let mut clf = Sequence::clf();
    assert!(check_log_convex(&mut clf, 1, 300, true).unwrap().holds_strictly());
    let opts = CheckOptions::default();
    assert!(check_root_log_concave(&mut clf, 2, 120, &opts).unwrap().holds_strictly());

    let spec = BoundSpec::new(clf_bound(), Side::Upper, 0, 5);
    let cert = induction_step(&mut clf, &spec).unwrap();
    assert!(cert.is_certified());
    cert.recheck().unwrap();
    assert!(pointwise_bound_check(&mut clf, &spec, 5, 150).unwrap().holds());
}

#[test]
fn pipelines_report_passing_sub_results() {
    let mut ctx = Context::default();
    let r = theorem_1_1(&mut ctx, 60).unwrap();
    assert!(r.passed, "{}", r.summary_table());
    assert!(r.display_ids().any(|d| d == "1.1"));
    assert!(lemma_2_1(&mut ctx).unwrap().passed);
}
