use super::*;
use crate::covers::{AccShape, IndexRange};
use crate::qmetric::{MetricName, QuasiMetric};
use crate::rat::{int, Rat};

fn fin(x: Rat) -> ExtRat {
    ExtRat::Fin(x)
}

fn co(a: i128, b: i128) -> RealSet {
    RealSet::interval(Interval::closed_open(int(a), fin(int(b))))
}

fn open(a: i128, b: i128) -> RealSet {
    RealSet::interval(Interval::open(fin(int(a)), fin(int(b))))
}

fn closed(a: i128, b: i128) -> RealSet {
    RealSet::interval(Interval::closed(int(a), int(b)))
}

fn s(v: Variant) -> LineId {
    LineId::sorgenfrey(v)
}

fn n(v: Variant) -> LineId {
    LineId::standard(v)
}

#[test]
fn names_round_trip() {
    let all = LineId::all();
    assert_eq!(all.len(), 29);
    for l in all {
        assert_eq!(l.name().parse::<LineId>().unwrap(), l);
    }
    assert_eq!("standard/uf".parse::<LineId>().unwrap(), LineId::Uf);
    assert!("sorgenfrey/xx".parse::<LineId>().is_err());
}

#[test]
fn opens() {
    assert!(op_member(s(Variant::Om), &co(0, 1).union(&co(2, 3))));
    assert!(!op_member(s(Variant::Om), &open(0, 1)));
    assert!(op_member(s(Variant::St), &open(0, 1)));
    assert!(op_member(n(Variant::Ut), &open(0, 1).union(&open(3, 9))));
    assert!(!op_member(n(Variant::Ut), &closed(0, 1)));
    let blocks =
        RealSet::periodic(vec![Interval::closed_open(int(0), fin(int(1)))], int(2)).unwrap();
    assert!(op_member(s(Variant::Lom), &blocks));
    assert!(!op_member(s(Variant::Om), &blocks));
    assert!(!op_member(s(Variant::LPlusOm), &blocks));
    let up = blocks.intersect(&co(0, 1).union(&RealSet::interval(Interval::closed_open(
        int(0),
        ExtRat::PosInf,
    ))));
    assert!(op_member(s(Variant::LPlusOm), &up));
    assert!(!op_member(s(Variant::LMinusOm), &up));
    let ray = RealSet::interval(Interval::open(ExtRat::NegInf, fin(int(3))));
    assert!(op_member(LineId::Uu, &ray));
    assert!(!op_member(LineId::Uf, &open(0, 1)));
}

#[test]
fn admissible_families() {
    let tiles = FamilySpec::periodic(co(0, 2), int(1), IndexRange::All).unwrap();
    assert!(!cov_member(s(Variant::St), &tiles));
    assert!(cov_member(s(Variant::Lst), &tiles));
    assert!(cov_member(s(Variant::Ut), &tiles));
    let neg = RealSet::interval(Interval::open(ExtRat::NegInf, fin(int(1))));
    let split = FamilySpec::split(int(0), FamilySpec::finite(vec![neg]), tiles.clone());
    assert!(cov_member(s(Variant::LPlusSt), &split));
    assert!(!cov_member(s(Variant::LMinusSt), &split));
    let rays = FamilySpec::accumulating(int(0), ExtRat::PosInf, AccShape::Rays).unwrap();
    assert!(cov_member(LineId::Uu, &rays));
    assert!(!cov_member(LineId::Ul, &rays));
    assert!(cov_member(LineId::Uf, &rays));
    let to_one = FamilySpec::accumulating(int(0), fin(int(1)), AccShape::Rays).unwrap();
    assert!(!cov_member(LineId::Uu, &to_one));
    assert!(cov_member(LineId::Uf, &to_one));
}

#[test]
fn bornology_tables() {
    assert!(!sm_member(n(Variant::Ut), &closed(0, 1)));
    assert!(cb_member(n(Variant::Ut), &closed(0, 1)));
    assert!(sm_member(n(Variant::Lom), &closed(0, 1)));
    assert!(!sm_member(
        n(Variant::Lom),
        &open(0, 1).union(&RealSet::interval(Interval::open(
            fin(int(0)),
            ExtRat::PosInf
        )))
    ));
    assert!(!cb_member(s(Variant::St), &closed(0, 1)));
    assert!(acb_member(
        LineId::Uf,
        &RealSet::interval(Interval::open(ExtRat::NegInf, fin(int(0))))
    ));
    let neg_integers = RealSet::normalize(
        vec![],
        Some(crate::realset::TailSpec {
            pattern: vec![Interval::point(int(0))],
            period: int(1),
            cut: int(0),
        }),
        None,
    )
    .unwrap();
    assert!(sm_member(LineId::Uf, &neg_integers));
    assert!(!sm_member(LineId::Uf, &closed(0, 1)));
}

#[test]
fn pt_table() {
    assert_eq!(pt_of(n(Variant::Lom)), n(Variant::Lst));
    assert_eq!(pt_of(n(Variant::Ut)), n(Variant::Ut));
    assert_eq!(pt_of(s(Variant::Om)), s(Variant::St));
    assert_eq!(pt_of(n(Variant::LPlusOm)), n(Variant::LPlusSt));
    for l in LineId::all() {
        assert_eq!(pt_of(pt_of(l)), pt_of(l));
        assert_eq!(pt_of(l) == l, l.is_partially_topological());
    }
    assert!(!pt_is_exact(s(Variant::Rom)));
}

#[test]
fn bornologies_and_bases() {
    let down5 = RealSet::interval(Interval::open_closed(ExtRat::NegInf, int(5)));
    assert!(Bornology::UB.contains(&down5));
    assert_eq!(Bornology::UB.base().unwrap().index_of(&down5), Some(6));
    assert_eq!(
        Bornology::UB.base().unwrap().element(6),
        RealSet::interval(Interval::open(ExtRat::NegInf, fin(int(6))))
    );
    let naturals = RealSet::normalize(
        vec![],
        None,
        Some(crate::realset::TailSpec {
            pattern: vec![Interval::point(int(0))],
            period: int(1),
            cut: int(0),
        }),
    )
    .unwrap();
    assert!(!Bornology::NatBounded.contains(&naturals));
    let grid = Bornology::FB.base().unwrap();
    assert_eq!(grid.element(2).core().len(), 5);
    assert_eq!(grid.index_of(&RealSet::point(int(-3))), Some(3));
    assert_eq!(
        Bornology::NatBounded
            .base()
            .unwrap()
            .index_of(&closed(-2, 7)),
        Some(7)
    );
    assert_eq!(
        Bornology::All.base().unwrap().index_of(&RealSet::reals()),
        Some(0)
    );
    assert!(Bornology::ReverseWellOrdered.base().is_err());
    let shrinking = AffinePiece {
        lo: AffineEnd::Affine {
            alpha: int(0),
            beta: int(1),
        },
        lo_closed: true,
        hi: AffineEnd::PosInf,
        hi_closed: false,
    };
    assert!(BaseSchema::affine(vec![shrinking], 0).is_err());
    let balls = Bornology::MetricBounded(QuasiMetric::new(MetricName::DNPlus))
        .base()
        .unwrap();
    assert!(balls.index_of(&down5).is_some());
    assert!(balls.index_of(&naturals).is_none());
}

#[test]
fn tables_match_definitions_on_probes() {
    for line in LineId::all() {
        let battery = probe_battery(line);
        assert!(!battery.is_empty(), "{line}");
        for (name, a) in probe_corpus() {
            if sm_member(line, &a) {
                for f in &battery {
                    assert!(f.ess_finite_on(&a).essentially_finite, "{line} {name} {f}");
                }
            } else {
                assert!(smallness_refuter(line, &a).is_some(), "{line} {name}");
            }
        }
    }
}

#[test]
fn weak_local_smallness() {
    let none = [n(Variant::Ut), s(Variant::Ut), LineId::Uf];
    for line in LineId::all() {
        assert_eq!(
            small_open_cover(line).is_none(),
            none.contains(&line),
            "{line}"
        );
    }
}
