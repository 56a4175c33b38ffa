use std::time::Instant;

use knotform::analyzer::*;
use knotform::knot::*;

fn report(format: &str, payload: &str) -> CoverReport {
    let k = knot_from_text(format, payload).unwrap();
    analyze(payload, &k, &AnalyzeOptions::default()).unwrap()
}

#[test]
fn default_corpus_has_no_violations() {
    let start = Instant::now();
    let run = run_corpus_fresh(&default_corpus(), &AnalyzeOptions::default());
    for r in &run.reports {
        eprintln!("{:<20} det={:<3} h1={:<12} orb={:?} cover={:?} {}", r.name, r.det, r.h1.to_string(), r.orbifold_order, r.cover_order, r.classification);
    }
    eprintln!("corpus took {:?}", start.elapsed());
    assert!(run.errors.is_empty(), "{:?}", run.errors);
    assert_eq!(run.summary.violations(), 0, "{:?}", run.summary);
}

#[test]
fn two_bridge_family_is_cyclic() {
    for (p, q) in [(3, 1), (5, 3), (7, 3), (9, 5), (15, 4)] {
        let r = report("twobridge", &format!("{p} {q}"));
        assert_eq!(r.classification, Classification::CyclicType(p), "{p}/{q}");
    }
}

#[test]
fn torus_family() {
    for n in [3, 5, 7, 9] {
        let r = report("torus", &format!("2 {n}"));
        assert_eq!(r.classification, Classification::CyclicType(n));
    }
    let t34 = report("torus", "3 4");
    assert_eq!((t34.cover_order, t34.classification), (Some(24), Classification::TetrahedralType));
    assert_eq!(t34.h1.to_string(), "Z/3");
    let t35 = report("torus", "3 5");
    assert_eq!((t35.cover_order, t35.classification), (Some(120), Classification::IcosahedralType));
    assert_eq!(t35.det, 1);
}

#[test]
fn montesinos_single_fraction_matches_two_bridge() {
    for (p, q) in [(5, 3), (7, 3), (9, 5)] {
        let a = analyze("m", &montesinos(0, &[(p, q)]).unwrap(), &AnalyzeOptions::default()).unwrap();
        let b = analyze("b", &two_bridge(p, q).unwrap(), &AnalyzeOptions::default()).unwrap();
        assert_eq!((a.det, a.cover_order), (b.det, b.cover_order), "{p}/{q}");
    }
}

#[test]
fn spherical_montesinos_cover_is_finite() {
    let r = analyze("m", &montesinos(-1, &[(1, 2), (1, 3), (1, 5)]).unwrap(), &AnalyzeOptions::default()).unwrap();
    assert_eq!((r.cover_order, r.classification), (Some(120), Classification::IcosahedralType));
}
