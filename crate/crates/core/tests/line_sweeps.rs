use gts_core::covers::FamilySpec;
use gts_core::lines::{
    acb_member, cb_member, cov_member, probe_battery, probe_corpus, pt_is_exact, pt_of, sm_member,
    smallness_refuter, Bornology, LineId, Variant,
};
use gts_core::qmetric::{MetricName, QuasiMetric};
use gts_core::realset::TopologyKind;
use gts_core::{int, RealSet};

fn probes() -> Vec<RealSet> {
    probe_corpus().into_iter().map(|(_, s)| s).collect()
}

fn bornologies() -> Vec<Bornology> {
    let mut out = vec![
        Bornology::FB,
        Bornology::All,
        Bornology::NatBounded,
        Bornology::UB,
        Bornology::LB,
        Bornology::ReverseWellOrdered,
    ];
    out.extend(
        MetricName::ALL
            .iter()
            .map(|n| Bornology::MetricBounded(QuasiMetric::new(*n))),
    );
    out
}

#[test]
fn corpus_is_large_enough() {
    let c = probe_corpus();
    assert!(c.len() >= 24);
    let mut names: Vec<_> = c.iter().map(|(n, _)| *n).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), c.len());
}

#[test]
fn small_or_compact_sets_are_admissibly_compact() {
    for line in LineId::all() {
        for (name, a) in probe_corpus() {
            if sm_member(line, &a) || cb_member(line, &a) {
                assert!(acb_member(line, &a), "{line} {name}");
            }
        }
    }
}

#[test]
fn partial_topologization_keeps_small_and_compact_sets() {
    for line in LineId::all().into_iter().filter(|l| pt_is_exact(*l)) {
        let pt = pt_of(line);
        assert_eq!(line.topology(), pt.topology());
        for (name, a) in probe_corpus() {
            assert_eq!(sm_member(line, &a), sm_member(pt, &a), "{line} {name}");
            assert_eq!(cb_member(line, &a), cb_member(pt, &a), "{line} {name}");
        }
    }
}

#[test]
fn partial_topologization_adds_finite_families() {
    // every line's admissible families stay admissible after pt
    for line in LineId::all() {
        let pt = pt_of(line);
        for f in probe_battery(line) {
            assert!(cov_member(pt, &f), "{line} -> {pt}: {f}");
        }
    }
}

#[test]
fn bornologies_are_ideals_on_probes() {
    let ps = probes();
    for b in bornologies() {
        assert!(b.contains(&RealSet::empty()));
        for x in [-3, 0, 7] {
            assert!(b.contains(&RealSet::point(int(x))), "{b}");
        }
        for a in &ps {
            for c in &ps {
                if b.contains(a) && b.contains(c) {
                    assert!(b.contains(&a.union(c)), "{b}: {a} u {c}");
                }
                if b.contains(a) && c.is_subset(a) {
                    assert!(b.contains(c), "{b}: {c} in {a}");
                }
                if b.contains(a) {
                    assert!(b.contains(&a.intersect(c)), "{b}: {a} n {c}");
                }
            }
        }
    }
}

#[test]
fn bases_are_increasing_and_cofinal_on_probes() {
    for b in bornologies() {
        let Ok(schema) = b.base() else { continue };
        for n in 0..12 {
            assert!(
                schema.element(n).is_subset(&schema.element(n + 1)),
                "{b} at {n}"
            );
            assert!(b.contains(&schema.element(n)), "{b}: B_{n}");
        }
        for a in probes() {
            // the grid is only cofinal among finite sets of integers
            if b == Bornology::FB {
                continue;
            }
            assert_eq!(schema.index_of(&a).is_some(), b.contains(&a), "{b}: {a}");
        }
    }
}

/// The line whose admissible families are `EF(nat, CB_nat)` has exactly the
/// bounded sets as small sets.
#[test]
fn ef_line_small_sets_are_the_bornology() {
    let lst = LineId::standard(Variant::Lst);
    for a in probes() {
        assert_eq!(sm_member(lst, &a), Bornology::NatBounded.contains(&a));
    }
    for f in probe_battery(lst) {
        assert!(f.all_members(&|m| m.is_open(TopologyKind::Nat)));
    }
}

#[test]
fn refuters_are_admissible_and_fail_on_their_set() {
    for line in LineId::all() {
        for (name, a) in probe_corpus() {
            if let Some(f) = smallness_refuter(line, &a) {
                assert!(!sm_member(line, &a), "{line} {name}");
                assert!(cov_member(line, &f));
                assert!(!f.ess_finite_on(&a).essentially_finite);
            }
        }
    }
    let empty = FamilySpec::finite(vec![]);
    assert!(LineId::all().iter().all(|l| cov_member(*l, &empty)));
}
