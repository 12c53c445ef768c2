//! Finitely presented families of sets, essential finiteness, full rings and
//! bounded-depth generation of generalized topologies.

mod essfin;
mod generate;
mod rings;

use std::fmt;

use num_traits::{Signed, Zero};

use crate::rat::{ceil_div, int, ExtRat, Rat};
use crate::realset::{Interval, RealSet};
use crate::SetError;

pub use essfin::{EssFinVerdict, Obstruction};
pub use generate::{GenOutcome, GenState, PlusRule, DEFAULT_DEPTH_CAP};
pub use rings::{ef_member, full_ring_closure, gen_topology, gen_topology_member, EfVerdict};

/// Index set of a periodic family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexRange {
    All,
    From(i64),
    Upto(i64),
    Finite(i64, i64),
}

impl IndexRange {
    pub fn contains(&self, k: i64) -> bool {
        match *self {
            IndexRange::All => true,
            IndexRange::From(a) => k >= a,
            IndexRange::Upto(b) => k <= b,
            IndexRange::Finite(a, b) => a <= k && k <= b,
        }
    }

    /// The indices in range with `|k| <= n`.
    pub fn truncate(&self, n: i64) -> std::ops::RangeInclusive<i64> {
        let (a, b) = match *self {
            IndexRange::All => (-n, n),
            IndexRange::From(a) => (a.max(-n), n),
            IndexRange::Upto(b) => (-n, b.min(n)),
            IndexRange::Finite(a, b) => (a.max(-n), b.min(n)),
        };
        a..=b
    }
}

/// Shape of the members of an accumulating family, indexed by `n >= 0` over
/// the points `c_n` climbing from `start` towards `limit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AccShape {
    /// `(-inf, c_n)`
    Rays,
    /// `(c_n, c_{n+2})`
    OpenTiles,
    /// `[c_n, c_{n+1})`
    HalfOpenTiles,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Finite(Vec<RealSet>),
    /// Members `seed + k*period` for `k` in `range`; the seed is bounded.
    Periodic {
        seed: RealSet,
        period: Rat,
        range: IndexRange,
    },
    /// Left members cut to `(-inf, cut)`, right members cut to `[cut, +inf)`.
    Split {
        cut: Rat,
        left: Box<FamilySpec>,
        right: Box<FamilySpec>,
    },
    Restricted {
        base: Box<FamilySpec>,
        window: RealSet,
    },
    Union(Vec<FamilySpec>),
    Accumulating {
        start: Rat,
        limit: ExtRat,
        shape: AccShape,
    },
}

/// A family flattened into one generator and the window its members are cut to.
#[derive(Clone, Debug)]
pub(crate) struct Part {
    pub kind: PartKind,
    pub window: RealSet,
}

#[derive(Clone, Debug)]
pub(crate) enum PartKind {
    Members(Vec<RealSet>),
    Periodic {
        seed: RealSet,
        period: Rat,
        range: IndexRange,
    },
    Acc {
        start: Rat,
        limit: ExtRat,
        shape: AccShape,
    },
}

pub(crate) fn acc_point(start: &Rat, limit: &ExtRat, n: i64) -> Rat {
    match limit {
        ExtRat::Fin(l) => l - (l - start) / int(n as i128 + 1),
        _ => start + int(n as i128),
    }
}

fn acc_member(start: &Rat, limit: &ExtRat, shape: AccShape, n: i64) -> RealSet {
    let c = |k: i64| ExtRat::Fin(acc_point(start, limit, k));
    RealSet::interval(match shape {
        AccShape::Rays => Interval::open(ExtRat::NegInf, c(n)),
        AccShape::OpenTiles => Interval::open(c(n), c(n + 2)),
        AccShape::HalfOpenTiles => Interval::closed_open(acc_point(start, limit, n), c(n + 1)),
    })
}

impl PartKind {
    pub fn is_finite(&self) -> bool {
        matches!(self, PartKind::Members(_))
    }

    /// Members with index `|k| <= n` (all members for a finite part).
    pub fn members_upto(&self, n: i64) -> Vec<RealSet> {
        match self {
            PartKind::Members(m) => m.clone(),
            PartKind::Periodic {
                seed,
                period,
                range,
            } => range
                .truncate(n)
                .map(|k| seed.translate(&(period * int(k as i128))))
                .collect(),
            PartKind::Acc {
                start,
                limit,
                shape,
            } => (0..=n.max(0))
                .map(|k| acc_member(start, limit, *shape, k))
                .collect(),
        }
    }

    /// Union of the members with index `|k| <= n`.
    pub fn union_upto(&self, n: i64) -> RealSet {
        match self {
            PartKind::Periodic {
                seed,
                period,
                range,
            } => {
                let r = range.truncate(n);
                periodic_block(seed, period, *r.start(), *r.end())
            }
            PartKind::Acc {
                start,
                limit,
                shape,
            } => {
                let c = |k: i64| ExtRat::Fin(acc_point(start, limit, k));
                let n = n.max(0);
                RealSet::interval(match shape {
                    AccShape::Rays => Interval::open(ExtRat::NegInf, c(n)),
                    AccShape::OpenTiles => Interval::open(c(0), c(n + 2)),
                    AccShape::HalfOpenTiles => Interval::closed_open(start.clone(), c(n + 1)),
                })
            }
            PartKind::Members(m) => m.iter().fold(RealSet::empty(), |acc, s| acc.union(s)),
        }
    }

    /// An index past which `member ∩ window` only repeats shapes already seen,
    /// up to translation.
    pub fn shape_bound(&self, window: &RealSet) -> i64 {
        let mut ev: Vec<Rat> = Vec::new();
        let mut periods: Vec<Rat> = Vec::new();
        for iv in window.core() {
            ev.extend(iv.lo().fin().cloned());
            ev.extend(iv.hi().fin().cloned());
        }
        for t in window.left_tail().into_iter().chain(window.right_tail()) {
            ev.extend(t.cut.fin().cloned());
            periods.push(t.periodic.period.clone());
        }
        let reach = ev.iter().map(|e| e.abs()).max().unwrap_or_else(Rat::zero);
        match self {
            PartKind::Members(_) => 0,
            PartKind::Periodic { seed, period, .. } => {
                let span = match (seed.inf(), seed.sup()) {
                    (ExtRat::Fin(a), ExtRat::Fin(b)) => a.abs().max(b.abs()),
                    _ => Rat::zero(),
                };
                let big = periods
                    .iter()
                    .fold(period.clone(), |acc, q| crate::rat::lcm(&acc, q));
                ceil_div(&(reach + span + big), period) as i64 + 2
            }
            PartKind::Acc { start, limit, .. } => match limit {
                ExtRat::Fin(l) => {
                    let below: Vec<&Rat> = ev.iter().filter(|e| *e < l).collect();
                    let gap = below
                        .iter()
                        .map(|e| l - *e)
                        .min()
                        .unwrap_or_else(|| l - start);
                    ceil_div(&(l - start), &gap) as i64 + 2
                }
                _ => {
                    let big = periods
                        .iter()
                        .fold(int(1), |acc, q| crate::rat::lcm(&acc, q));
                    ceil_div(&(reach + start.abs() + big), &int(1)) as i64 + 2
                }
            },
        }
    }

    /// Union of all members.
    pub fn union_all(&self) -> RealSet {
        match self {
            PartKind::Members(_) => self.union_upto(0),
            PartKind::Acc {
                start,
                limit,
                shape,
            } => RealSet::interval(match shape {
                AccShape::Rays => Interval::open(ExtRat::NegInf, limit.clone()),
                AccShape::OpenTiles => Interval::open(ExtRat::Fin(start.clone()), limit.clone()),
                AccShape::HalfOpenTiles => Interval::closed_open(start.clone(), limit.clone()),
            }),
            PartKind::Periodic {
                seed,
                period,
                range,
            } => periodic_union(seed, period, range),
        }
    }
}

fn translates(seed: &RealSet, period: &Rat, a: i64, b: i64) -> RealSet {
    let mut ivs = Vec::new();
    for k in a..=b {
        let t = period * int(k as i128);
        ivs.extend(seed.core().iter().map(|iv| iv.shift(&t)));
    }
    RealSet::from_intervals(ivs)
}

// Union of `seed + k*period` for `a <= k <= b`. Between the two edge blocks the
// union agrees with the full periodic union.
fn periodic_block(seed: &RealSet, period: &Rat, a: i64, b: i64) -> RealSet {
    if a > b || seed.is_empty() {
        return RealSet::empty();
    }
    let (lo, hi) = match (seed.inf(), seed.sup()) {
        (ExtRat::Fin(x), ExtRat::Fin(y)) => (x, y),
        _ => unreachable!("periodic seeds are bounded"),
    };
    let span = ceil_div(&(&hi - &lo), period) as i64 + 1;
    if b - a <= 2 * span + 2 {
        return translates(seed, period, a, b);
    }
    let whole = RealSet::periodic(seed.core().to_vec(), period.clone()).expect("positive period");
    let inner = Interval::open(
        ExtRat::Fin(&hi + period * int(a as i128 - 1)),
        ExtRat::Fin(&lo + period * int(b as i128 + 1)),
    );
    whole
        .intersect(&RealSet::interval(inner))
        .union(&translates(seed, period, a, a + span))
        .union(&translates(seed, period, b - span, b))
}

fn periodic_union(seed: &RealSet, period: &Rat, range: &IndexRange) -> RealSet {
    if seed.is_empty() {
        return RealSet::empty();
    }
    let (lo, hi) = match (seed.inf(), seed.sup()) {
        (ExtRat::Fin(a), ExtRat::Fin(b)) => (a, b),
        _ => unreachable!("periodic seeds are bounded"),
    };
    let whole = RealSet::periodic(seed.core().to_vec(), period.clone()).expect("positive period");
    let span = ceil_div(&(&hi - &lo), period) as i64 + 1;
    let piece = |a: i64, b: i64| translates(seed, period, a, b);
    match *range {
        IndexRange::All => whole,
        IndexRange::Finite(a, b) => piece(a, b),
        IndexRange::From(a) => {
            let x = &hi + period * int(a as i128 - 1);
            let far = whole.intersect(&RealSet::interval(Interval::open(
                ExtRat::Fin(x),
                ExtRat::PosInf,
            )));
            far.union(&piece(a, a + span))
        }
        IndexRange::Upto(b) => {
            let y = &lo + period * int(b as i128 + 1);
            let far = whole.intersect(&RealSet::interval(Interval::open(
                ExtRat::NegInf,
                ExtRat::Fin(y),
            )));
            far.union(&piece(b - span, b))
        }
    }
}

impl FamilySpec {
    pub fn finite(members: Vec<RealSet>) -> FamilySpec {
        FamilySpec::Finite(members)
    }

    pub fn periodic(seed: RealSet, period: Rat, range: IndexRange) -> Result<FamilySpec, SetError> {
        if !period.is_positive() || period.is_zero() {
            return Err(SetError::Malformed("family period must be positive".into()));
        }
        if seed.has_tails() || !seed.boundedness().bounded {
            return Err(SetError::Malformed(
                "periodic family seeds must be bounded".into(),
            ));
        }
        if let IndexRange::Finite(a, b) = range {
            if a > b {
                return Err(SetError::Malformed("empty index range".into()));
            }
        }
        Ok(FamilySpec::Periodic {
            seed,
            period,
            range,
        })
    }

    pub fn split(cut: Rat, left: FamilySpec, right: FamilySpec) -> FamilySpec {
        FamilySpec::Split {
            cut,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn accumulating(
        start: Rat,
        limit: ExtRat,
        shape: AccShape,
    ) -> Result<FamilySpec, SetError> {
        match &limit {
            ExtRat::Fin(l) if *l > start => {}
            ExtRat::PosInf => {}
            _ => {
                return Err(SetError::Malformed(
                    "accumulation limit must lie above the start".into(),
                ))
            }
        }
        Ok(FamilySpec::Accumulating {
            start,
            limit,
            shape,
        })
    }

    pub(crate) fn parts(&self) -> Vec<Part> {
        self.parts_in(&RealSet::reals())
    }

    fn parts_in(&self, window: &RealSet) -> Vec<Part> {
        let part = |kind| {
            vec![Part {
                kind,
                window: window.clone(),
            }]
        };
        match self {
            FamilySpec::Finite(m) => part(PartKind::Members(m.clone())),
            FamilySpec::Periodic {
                seed,
                period,
                range: IndexRange::Finite(a, b),
            } => part(PartKind::Members(
                (*a..=*b)
                    .map(|k| seed.translate(&(period * int(k as i128))))
                    .collect(),
            )),
            FamilySpec::Periodic {
                seed,
                period,
                range,
            } => part(PartKind::Periodic {
                seed: seed.clone(),
                period: period.clone(),
                range: *range,
            }),
            FamilySpec::Accumulating {
                start,
                limit,
                shape,
            } => part(PartKind::Acc {
                start: start.clone(),
                limit: limit.clone(),
                shape: *shape,
            }),
            FamilySpec::Split { cut, left, right } => {
                let lw =
                    RealSet::interval(Interval::open(ExtRat::NegInf, ExtRat::Fin(cut.clone())));
                let rw = RealSet::interval(Interval::closed_open(cut.clone(), ExtRat::PosInf));
                let mut out = left.parts_in(&window.intersect(&lw));
                out.extend(right.parts_in(&window.intersect(&rw)));
                out
            }
            FamilySpec::Restricted { base, window: w } => base.parts_in(&window.intersect(w)),
            FamilySpec::Union(fs) => fs.iter().flat_map(|f| f.parts_in(window)).collect(),
        }
    }

    /// Largest absolute value of a finite breakpoint in the presentation.
    pub fn reach(&self) -> Rat {
        let mut best = Rat::zero();
        let mut see = |s: &RealSet| {
            for v in [s.inf(), s.sup()] {
                if let ExtRat::Fin(x) = v {
                    best = best.clone().max(x.abs());
                }
            }
            for t in s.left_tail().into_iter().chain(s.right_tail()) {
                if let ExtRat::Fin(x) = &t.cut {
                    best = best.clone().max(x.abs() + &t.periodic.period);
                }
            }
        };
        for p in self.parts() {
            see(&p.window);
            match &p.kind {
                PartKind::Members(m) => m.iter().for_each(&mut see),
                PartKind::Periodic { seed, period, .. } => {
                    see(seed);
                    see(&RealSet::point(period.clone()));
                }
                PartKind::Acc { start, limit, .. } => {
                    see(&RealSet::point(start.clone()));
                    if let ExtRat::Fin(l) = limit {
                        see(&RealSet::point(l.clone()));
                    }
                }
            }
        }
        best
    }

    /// Whether the family has finitely many members.
    pub fn is_finite(&self) -> bool {
        self.parts().iter().all(|p| p.kind.is_finite())
    }

    /// `⋃F` as a set.
    pub fn union_of(&self) -> RealSet {
        self.parts().iter().fold(RealSet::empty(), |acc, p| {
            acc.union(&p.kind.union_all().intersect(&p.window))
        })
    }

    /// Distinct members with index `|k| <= n`, sorted. For finite families this
    /// is the whole family.
    pub fn members_upto(&self, n: i64) -> Vec<RealSet> {
        let mut out: Vec<RealSet> = self
            .parts()
            .iter()
            .flat_map(|p| {
                p.kind
                    .members_upto(n)
                    .into_iter()
                    .map(|m| m.intersect(&p.window))
                    .collect::<Vec<_>>()
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The members when the family is finite.
    pub fn finite_members(&self) -> Option<Vec<RealSet>> {
        self.is_finite().then(|| self.members_upto(0))
    }

    /// `{U ∩ Y : U ∈ F}`; finite families stay finite with empty members dropped.
    pub fn restrict(&self, y: &RealSet) -> FamilySpec {
        if y.is_reals() {
            return self.clone();
        }
        match self.finite_members() {
            Some(m) => {
                let mut out: Vec<RealSet> = m
                    .iter()
                    .map(|s| s.intersect(y))
                    .filter(|s| !s.is_empty())
                    .collect();
                out.sort();
                out.dedup();
                FamilySpec::Finite(out)
            }
            None => FamilySpec::Restricted {
                base: Box::new(self.clone()),
                window: y.clone(),
            },
        }
    }

    /// Applies `f` to every member; only structure-preserving maps are allowed
    /// on infinite parts, so this is limited to finite families.
    pub fn map_finite(&self, f: &dyn Fn(&RealSet) -> RealSet) -> Option<FamilySpec> {
        self.finite_members()
            .map(|m| FamilySpec::Finite(m.iter().map(f).collect()))
    }

    /// Preimage family under `x -> a*x + b`.
    pub fn affine_preimage(&self, a: &Rat, b: &Rat) -> Result<FamilySpec, SetError> {
        let pre = |s: &RealSet| s.affine_preimage(a, b);
        Ok(match self {
            FamilySpec::Finite(m) => FamilySpec::Finite(m.iter().map(pre).collect()),
            FamilySpec::Periodic {
                seed,
                period,
                range,
            } => {
                let p = period / a;
                if a.is_positive() {
                    FamilySpec::Periodic {
                        seed: pre(seed),
                        period: p,
                        range: *range,
                    }
                } else {
                    let range = match *range {
                        IndexRange::All => IndexRange::All,
                        IndexRange::From(k) => IndexRange::Upto(-k),
                        IndexRange::Upto(k) => IndexRange::From(-k),
                        IndexRange::Finite(x, y) => IndexRange::Finite(-y, -x),
                    };
                    FamilySpec::Periodic {
                        seed: pre(seed),
                        period: p.abs(),
                        range,
                    }
                }
            }
            FamilySpec::Split { cut, left, right } => {
                let lw =
                    RealSet::interval(Interval::open(ExtRat::NegInf, ExtRat::Fin(cut.clone())));
                let rw = RealSet::interval(Interval::closed_open(cut.clone(), ExtRat::PosInf));
                FamilySpec::Union(vec![
                    FamilySpec::Restricted {
                        base: Box::new(left.affine_preimage(a, b)?),
                        window: pre(&lw),
                    },
                    FamilySpec::Restricted {
                        base: Box::new(right.affine_preimage(a, b)?),
                        window: pre(&rw),
                    },
                ])
            }
            FamilySpec::Restricted { base, window } => FamilySpec::Restricted {
                base: Box::new(base.affine_preimage(a, b)?),
                window: pre(window),
            },
            FamilySpec::Union(fs) => FamilySpec::Union(
                fs.iter()
                    .map(|f| f.affine_preimage(a, b))
                    .collect::<Result<_, _>>()?,
            ),
            FamilySpec::Accumulating {
                start,
                limit,
                shape,
            } => {
                if !a.is_positive() {
                    return Err(SetError::Unsupported(
                        "preimage of an accumulating family under a decreasing map".into(),
                    ));
                }
                let inv = |v: &Rat| (v - b) / a;
                let limit = match limit {
                    ExtRat::Fin(l) => ExtRat::Fin(inv(l)),
                    other if a == &Rat::from_integer(1) => other.clone(),
                    _ => {
                        return Err(SetError::Unsupported(
                            "rescaled accumulating family with an infinite limit".into(),
                        ))
                    }
                };
                FamilySpec::Accumulating {
                    start: inv(start),
                    limit,
                    shape: *shape,
                }
            }
        })
    }

    /// Every member, for families where this is decidable: finite families
    /// check each member, infinite parts check the generator shape.
    pub fn all_members(&self, pred: &dyn Fn(&RealSet) -> bool) -> bool {
        self.parts().iter().all(|p| match &p.kind {
            PartKind::Members(m) => m.iter().all(|s| pred(&s.intersect(&p.window))),
            // members far from the window's breakpoints repeat earlier shapes
            kind => kind
                .members_upto(kind.shape_bound(&p.window))
                .iter()
                .all(|s| pred(&s.intersect(&p.window))),
        })
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexRange::All => f.write_str("all"),
            IndexRange::From(a) => write!(f, "from {a}"),
            IndexRange::Upto(b) => write!(f, "upto {b}"),
            IndexRange::Finite(a, b) => write!(f, "{a}..{b}"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Finite(m) => {
                let v: Vec<String> = m.iter().map(|s| s.to_string()).collect();
                write!(f, "finite{{{}}}", v.join("; "))
            }
            FamilySpec::Periodic {
                seed,
                period,
                range,
            } => {
                write!(
                    f,
                    "periodic(seed {seed}, period {}, {range})",
                    crate::rat::fmt_rat(period)
                )
            }
            FamilySpec::Split { cut, left, right } => {
                write!(f, "split({}, {left}, {right})", crate::rat::fmt_rat(cut))
            }
            FamilySpec::Restricted { base, window } => write!(f, "restrict({base}, {window})"),
            FamilySpec::Union(fs) => {
                let v: Vec<String> = fs.iter().map(|s| s.to_string()).collect();
                write!(f, "union[{}]", v.join(", "))
            }
            FamilySpec::Accumulating {
                start,
                limit,
                shape,
            } => {
                write!(
                    f,
                    "accumulating({shape:?} from {} to {limit})",
                    crate::rat::fmt_rat(start)
                )
            }
        }
    }
}
