//! Fixed probe sets and families used to cross-check the closed-form tables
//! against the definitions.

use super::{cov_member, op_member, sm_member, LineFamily, LineId};
use crate::covers::{AccShape, FamilySpec, IndexRange};
use crate::rat::{int, rat, ExtRat, Rat};
use crate::realset::{Interval, RealSet, TailSpec};

fn fin(x: Rat) -> ExtRat {
    ExtRat::Fin(x)
}

fn iv(s: Interval) -> RealSet {
    RealSet::interval(s)
}

fn pts(xs: &[Rat]) -> RealSet {
    RealSet::from_intervals(xs.iter().cloned().map(Interval::point).collect())
}

fn tail(pattern: Vec<Interval>, period: i128, cut: i128) -> TailSpec {
    TailSpec {
        pattern,
        period: int(period),
        cut: int(cut),
    }
}

fn with_tails(core: Vec<Interval>, left: Option<TailSpec>, right: Option<TailSpec>) -> RealSet {
    RealSet::normalize(core, left, right).expect("probe tails are well formed")
}

/// Named probe sets: finite sets, bounded and unbounded intervals,
/// half-lines and sets with periodic tails.
pub fn probe_corpus() -> Vec<(&'static str, RealSet)> {
    let o = |a: i128, b: i128| Interval::open(fin(int(a)), fin(int(b)));
    let c = |a: i128, b: i128| Interval::closed(int(a), int(b));
    let co = |a: i128, b: i128| Interval::closed_open(int(a), fin(int(b)));
    vec![
        ("empty", RealSet::empty()),
        ("zero", RealSet::point(int(0))),
        ("three_points", pts(&[int(0), int(1), int(2)])),
        ("scattered_points", pts(&[int(-3), rat(1, 2), int(5)])),
        ("unit_closed", iv(c(0, 1))),
        ("unit_open", iv(o(0, 1))),
        ("unit_half_open", iv(co(0, 1))),
        (
            "unit_open_closed",
            iv(Interval::open_closed(fin(int(0)), int(1))),
        ),
        ("wide_closed", iv(c(-5, 7))),
        (
            "neg_open_ray",
            iv(Interval::open(ExtRat::NegInf, fin(int(0)))),
        ),
        (
            "closed_ray_down",
            iv(Interval::open_closed(ExtRat::NegInf, int(5))),
        ),
        (
            "pos_open_ray",
            iv(Interval::open(fin(int(0)), ExtRat::PosInf)),
        ),
        (
            "closed_ray_up",
            iv(Interval::closed_open(int(-2), ExtRat::PosInf)),
        ),
        ("reals", RealSet::reals()),
        (
            "integers",
            RealSet::periodic(vec![Interval::point(int(0))], int(1)).unwrap(),
        ),
        (
            "naturals",
            with_tails(
                vec![],
                None,
                Some(tail(vec![Interval::point(int(0))], 1, 0)),
            ),
        ),
        (
            "neg_integers",
            with_tails(
                vec![],
                Some(tail(vec![Interval::point(int(0))], 1, 1)),
                None,
            ),
        ),
        (
            "even_blocks",
            RealSet::periodic(vec![co(0, 1)], int(2)).unwrap(),
        ),
        (
            "blocks_up",
            with_tails(vec![], None, Some(tail(vec![c(0, 1)], 2, 0))),
        ),
        (
            "blocks_down",
            with_tails(vec![], Some(tail(vec![o(0, 1)], 2, 0)), None),
        ),
        (
            "interval_and_point",
            RealSet::from_intervals(vec![c(0, 1), Interval::point(int(3))]),
        ),
        (
            "ray_and_naturals",
            with_tails(
                vec![Interval::open(ExtRat::NegInf, fin(int(0)))],
                None,
                Some(tail(vec![Interval::point(int(0))], 1, 0)),
            ),
        ),
        (
            "neg_integers_and_unit",
            with_tails(
                vec![c(0, 1)],
                Some(tail(vec![Interval::point(int(0))], 1, 0)),
                None,
            ),
        ),
        (
            "half_offsets_down",
            with_tails(
                vec![Interval::point(int(5))],
                Some(tail(vec![Interval::point(rat(1, 2))], 1, 0)),
                None,
            ),
        ),
        (
            "two_rays",
            RealSet::from_intervals(vec![
                Interval::open_closed(ExtRat::NegInf, int(-1)),
                Interval::closed_open(int(1), ExtRat::PosInf),
            ]),
        ),
        (
            "point_and_gap",
            RealSet::from_intervals(vec![Interval::point(rat(-1, 3)), o(2, 3)]),
        ),
        ("punctured_line", RealSet::point(int(0)).complement()),
        (
            "off_integers",
            RealSet::periodic(vec![Interval::point(int(0))], int(1))
                .unwrap()
                .complement(),
        ),
    ]
}

/// Basic interval of the line between `a` and `b`.
fn basic(line: LineId, a: ExtRat, b: ExtRat) -> RealSet {
    match line {
        LineId::Line(LineFamily::Sorgenfrey, _) => match a {
            ExtRat::Fin(x) => iv(Interval::closed_open(x, b)),
            _ => iv(Interval::open(a, b)),
        },
        LineId::Line(LineFamily::Standard, _) => iv(Interval::open(a, b)),
        _ => iv(Interval::open(ExtRat::NegInf, b)),
    }
}

fn tiles(line: LineId, range: IndexRange) -> FamilySpec {
    FamilySpec::periodic(basic(line, fin(int(0)), fin(int(2))), int(1), range)
        .expect("bounded seed")
}

fn rays_to(start: Rat, limit: ExtRat) -> FamilySpec {
    FamilySpec::accumulating(start, limit, AccShape::Rays).expect("limit above start")
}

/// Candidate families of every shape the representation supports, built from
/// the line's basic opens.
fn candidates(line: LineId) -> Vec<FamilySpec> {
    let b = |a: i128, c: i128| basic(line, fin(int(a)), fin(int(c)));
    let neg = |c: i128| iv(Interval::open(ExtRat::NegInf, fin(int(c))));
    let up = |a: i128| basic(line, fin(int(a)), ExtRat::PosInf);
    let shaped =
        |shape| FamilySpec::accumulating(int(0), fin(int(1)), shape).expect("limit above start");
    let mut out = vec![
        FamilySpec::finite(vec![]),
        FamilySpec::finite(vec![RealSet::reals()]),
        FamilySpec::finite(vec![neg(1), up(0)]),
        FamilySpec::finite(vec![b(0, 1), b(0, 3)]),
        FamilySpec::finite(vec![neg(0), neg(3)]),
        rays_to(int(0), ExtRat::PosInf),
        rays_to(int(0), fin(int(1))),
        shaped(AccShape::OpenTiles),
        shaped(AccShape::HalfOpenTiles),
        FamilySpec::Union(vec![
            rays_to(int(0), fin(int(1))),
            FamilySpec::finite(vec![neg(2)]),
        ]),
    ];
    // upper opens are rays, so there are no bounded tiles
    if !line.is_upper() {
        out.extend([
            tiles(line, IndexRange::All),
            tiles(line, IndexRange::From(0)),
            tiles(line, IndexRange::Upto(0)),
            FamilySpec::split(
                int(0),
                FamilySpec::finite(vec![neg(1)]),
                tiles(line, IndexRange::All),
            ),
            FamilySpec::split(
                int(0),
                tiles(line, IndexRange::All),
                FamilySpec::finite(vec![up(-1)]),
            ),
        ]);
    }
    out
}

/// Admissible families of the line among the candidates.
pub fn probe_battery(line: LineId) -> Vec<FamilySpec> {
    candidates(line)
        .into_iter()
        .filter(|f| cov_member(line, f))
        .collect()
}

/// A point approached from the left inside `a`, with a start below it.
fn left_germ(a: &RealSet) -> Option<(Rat, Rat)> {
    a.window(&int(-64), &int(64))
        .into_iter()
        .find(|s| !s.is_point() && !s.is_empty())
        .map(|s| {
            let (lo, hi) = match (s.lo(), s.hi()) {
                (ExtRat::Fin(l), ExtRat::Fin(h)) => (l.clone(), h.clone()),
                (ExtRat::Fin(l), _) => (l.clone(), l + int(2)),
                (_, ExtRat::Fin(h)) => (h - int(2), h.clone()),
                _ => (int(0), int(2)),
            };
            let mid = (&lo + &hi) / int(2);
            (lo, mid)
        })
}

/// An admissible family that is not essentially finite on `a`, if one is
/// found among the candidates and the accumulating families aimed at `a`.
pub fn smallness_refuter(line: LineId, a: &RealSet) -> Option<FamilySpec> {
    let mut cands = candidates(line);
    if let Some((start, l)) = left_germ(a) {
        cands.push(rays_to(start, fin(l)));
    }
    cands
        .into_iter()
        .find(|f| cov_member(line, f) && !f.ess_finite_on(a).essentially_finite)
}

/// A representable cover of the line by small open sets.
pub fn small_open_cover(line: LineId) -> Option<FamilySpec> {
    candidates(line).into_iter().find(|f| {
        f.union_of().is_reals() && f.all_members(&|m| op_member(line, m) && sm_member(line, m))
    })
}
