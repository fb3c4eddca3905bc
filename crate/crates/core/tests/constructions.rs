use qls_core::constructions::{
    execute, maximal_qls, plan_cardinality, plan_direct_product, plan_wilson, plan_wilson1, ConstructionPlan,
};
use qls_core::{qls_cardinality, Error, Tolerance};

fn check(plan: &ConstructionPlan) {
    let q = execute(plan).unwrap_or_else(|e| panic!("{}: {e}", plan.provenance()));
    let tol = Tolerance::default();
    let rep = q.verify(&tol);
    assert!(rep.pass && rep.worst_deviation() <= 1e-10, "{}: {rep:?}", plan.provenance());
    let c = qls_cardinality(&q, &tol).unwrap().c;
    assert_eq!(c, plan.predicted_c(), "{}", plan.provenance());
    assert_ne!(c, q.order() + 1);
}

fn sweep(lo: usize, hi: usize, plan: impl Fn(usize) -> qls_core::Result<ConstructionPlan>) -> Vec<usize> {
    let mut missing = Vec::new();
    for c in lo..=hi {
        match plan(c) {
            Ok(p) => {
                assert_eq!(p.predicted_c(), c);
                check(&p);
            }
            Err(Error::Unachievable { .. } | Error::UnknownAchievability { .. }) => missing.push(c),
            Err(e) => panic!("c = {c}: {e}"),
        }
    }
    missing
}

#[test]
fn wilson_accounting_is_exact() {
    // m = s = 2 leaves the odd values open.
    let odd: Vec<usize> = (9..=22).filter(|c| c % 2 == 1).collect();
    assert_eq!(sweep(8, 22, |c| plan_wilson(2, 3, 2, c)), [&[9][..], &odd[1..]].concat());
    assert_eq!(sweep(14, 3 * 16 + 2 * 2, |c| plan_wilson(3, 4, 2, c)), [15]);
    assert_eq!(sweep(15, 3 * 16 + 2 * 3, |c| plan_wilson(3, 4, 3, c)), [16]);
}

#[test]
fn wilson1_accounting_is_exact() {
    assert_eq!(sweep(7, 20, |c| plan_wilson1(2, 3, c)), [8]);
    assert_eq!(sweep(10, 29, |c| plan_wilson1(3, 3, c)), [11]);
}

#[test]
fn direct_product_accounting_is_exact() {
    let even = |m: usize, t: usize| -> Vec<usize> { (m * t..=m * t * t).filter(|c| c % 2 == 1).collect() };
    assert_eq!(sweep(6, 18, |c| plan_direct_product(2, 3, c)), even(2, 3));
    assert_eq!(sweep(6, 12, |c| plan_direct_product(3, 2, c)), [7]);
    assert_eq!(sweep(8, 32, |c| plan_direct_product(2, 4, c)), even(2, 4));
    assert_eq!(sweep(9, 27, |c| plan_direct_product(3, 3, c)), [10]);
}

#[test]
fn planner_covers_small_orders() {
    for v in 4..=7 {
        for c in v..=v * v {
            if let Ok(p) = plan_cardinality(v, c) {
                assert_eq!(p.predicted_c(), c);
                check(&p);
            }
        }
    }
}

#[test]
fn maximal_up_to_twelve() {
    let tol = Tolerance::default();
    for v in 4..=12 {
        let q = maximal_qls(v).unwrap();
        assert_eq!(qls_cardinality(&q, &tol).unwrap().c, v * v);
    }
}
