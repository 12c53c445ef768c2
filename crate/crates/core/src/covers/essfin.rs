use std::fmt;

use super::{acc_point, AccShape, FamilySpec, Part, PartKind};
use crate::rat::{int, Cut, ExtRat, Rat};
use crate::realset::{Interval, RealSet};

/// Why a family is not essentially finite on a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// The trace is unbounded above while every finite union of the infinitely
    /// many remaining members is bounded above.
    UnboundedAbove,
    UnboundedBelow,
    /// Members pile up below this point and the trace reaches it.
    AccumulatesAt(Rat),
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::UnboundedAbove => {
                f.write_str("K ∩ ⋃F unbounded above, members bounded above")
            }
            Obstruction::UnboundedBelow => f.write_str("K ∩ ⋃F unbounded below, members bounded"),
            Obstruction::AccumulatesAt(l) => {
                write!(f, "members accumulate at {}", crate::rat::fmt_rat(l))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssFinVerdict {
    pub essentially_finite: bool,
    pub witness: Option<Vec<RealSet>>,
    pub obstruction: Option<Obstruction>,
}

impl EssFinVerdict {
    fn no(o: Obstruction) -> EssFinVerdict {
        EssFinVerdict {
            essentially_finite: false,
            witness: None,
            obstruction: Some(o),
        }
    }
}

struct Split {
    finite_cover: RealSet,
    infinite: Vec<Part>,
}

fn split(parts: Vec<Part>) -> Split {
    let mut finite_cover = RealSet::empty();
    let mut infinite = Vec::new();
    for p in parts {
        if p.kind.is_finite() {
            finite_cover = finite_cover.union(&p.kind.union_all().intersect(&p.window));
        } else {
            infinite.push(p);
        }
    }
    Split {
        finite_cover,
        infinite,
    }
}

fn limits(infinite: &[Part]) -> Vec<Rat> {
    let mut out: Vec<Rat> = infinite
        .iter()
        .filter_map(|p| match &p.kind {
            PartKind::Acc {
                limit: ExtRat::Fin(l),
                ..
            } => Some(l.clone()),
            _ => None,
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

// Whether `rest` reaches `l` from below once the members of parts that do not
// accumulate at `l` are removed.
fn accumulates(rest: &RealSet, infinite: &[Part], l: &Rat) -> bool {
    let stable = infinite
        .iter()
        .filter(|p| !matches!(&p.kind, PartKind::Acc { limit: ExtRat::Fin(x), .. } if x == l))
        .fold(RealSet::empty(), |acc, p| {
            acc.union(&p.kind.union_all().intersect(&p.window))
        });
    let near = rest.difference(&stable).window(&(l - int(1)), l);
    let edge = Cut::before(l.clone());
    near.iter()
        .any(|iv| *iv.start() < edge && *iv.end() >= edge)
}

impl FamilySpec {
    /// Whether some finite subfamily covers `K ∩ ⋃F`.
    pub fn ess_finite_on(&self, k: &RealSet) -> EssFinVerdict {
        let Split {
            finite_cover,
            infinite,
        } = split(self.parts());
        let rest = k.intersect(&self.union_of()).difference(&finite_cover);
        let finite_members: Vec<RealSet> = self
            .parts()
            .iter()
            .filter(|p| p.kind.is_finite())
            .flat_map(|p| {
                p.kind
                    .members_upto(0)
                    .into_iter()
                    .map(|m| m.intersect(&p.window))
                    .collect::<Vec<_>>()
            })
            .collect();
        if rest.is_empty() {
            return EssFinVerdict {
                essentially_finite: true,
                witness: Some(dedup(finite_members)),
                obstruction: None,
            };
        }
        if !rest.boundedness().bounded_above {
            return EssFinVerdict::no(Obstruction::UnboundedAbove);
        }
        let rays = infinite
            .iter()
            .filter_map(|p| match &p.kind {
                PartKind::Acc {
                    start,
                    limit,
                    shape: AccShape::Rays,
                } => Some(
                    RealSet::interval(Interval::open(
                        ExtRat::NegInf,
                        ExtRat::Fin(acc_point(start, limit, 0)),
                    ))
                    .intersect(&p.window),
                ),
                _ => None,
            })
            .fold(RealSet::empty(), |acc, s| acc.union(&s));
        if !rest.difference(&rays).boundedness().bounded_below {
            return EssFinVerdict::no(Obstruction::UnboundedBelow);
        }
        for l in limits(&infinite) {
            if accumulates(&rest, &infinite, &l) {
                return EssFinVerdict::no(Obstruction::AccumulatesAt(l));
            }
        }
        // some truncation covers the trace; find one by doubling
        let mut n: i64 = 1;
        loop {
            let cover = infinite.iter().fold(RealSet::empty(), |acc, p| {
                acc.union(&p.kind.union_upto(n).intersect(&p.window))
            });
            if rest.is_subset(&cover) {
                break;
            }
            assert!(
                n < 1 << 40,
                "truncation search did not terminate for {self}"
            );
            n *= 2;
        }
        let mut witness = finite_members;
        for p in &infinite {
            for m in p.kind.members_upto(n) {
                let m = m.intersect(&p.window);
                if !m.intersect(k).is_empty() {
                    witness.push(m);
                }
            }
        }
        EssFinVerdict {
            essentially_finite: true,
            witness: Some(dedup(witness)),
            obstruction: None,
        }
    }

    /// Essential finiteness on the family's own union.
    pub fn ess_finite(&self) -> EssFinVerdict {
        self.ess_finite_on(&self.union_of())
    }

    /// Every point has an open neighbourhood on which the family is
    /// essentially finite.
    pub fn locally_ess_finite(&self) -> bool {
        let Split {
            finite_cover,
            infinite,
        } = split(self.parts());
        let rest = self.union_of().difference(&finite_cover);
        limits(&infinite)
            .iter()
            .all(|l| !accumulates(&rest, &infinite, l))
    }
}

fn dedup(mut v: Vec<RealSet>) -> Vec<RealSet> {
    v.sort();
    v.dedup();
    v
}
