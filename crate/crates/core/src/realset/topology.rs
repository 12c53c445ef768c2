use std::fmt;
use std::str::FromStr;

use super::interval::Interval;
use super::RealSet;
use crate::rat::{Cut, ExtRat};
use crate::SetError;

/// The topologies on the line that the named metrics induce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TopologyKind {
    Nat,
    /// Open sets `(-inf, a)`, the empty set and the line.
    Upper,
    /// Open sets `(a, +inf)`, the empty set and the line.
    Lower,
    /// Generated by `[a, b)`.
    SorgR,
    /// Generated by `(a, b]`.
    SorgL,
    Discrete,
}

impl TopologyKind {
    pub const ALL: [TopologyKind; 6] = [
        TopologyKind::Nat,
        TopologyKind::Upper,
        TopologyKind::Lower,
        TopologyKind::SorgR,
        TopologyKind::SorgL,
        TopologyKind::Discrete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TopologyKind::Nat => "nat",
            TopologyKind::Upper => "upper",
            TopologyKind::Lower => "lower",
            TopologyKind::SorgR => "sorg_r",
            TopologyKind::SorgL => "sorg_l",
            TopologyKind::Discrete => "discrete",
        }
    }
}

impl fmt::Display for TopologyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TopologyKind {
    type Err = SetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TopologyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| SetError::Malformed(format!("unknown topology kind `{s}`")))
    }
}

// Interior of a normalized list for the topologies whose interior is computed
// component by component.
fn local_interior(kind: TopologyKind, a: &[Interval]) -> Vec<Interval> {
    let open_start = |c: &Cut| match c.at {
        ExtRat::Fin(ref x) => Cut::after(x.clone()),
        _ => c.clone(),
    };
    let open_end = |c: &Cut| match c.at {
        ExtRat::Fin(ref x) => Cut::before(x.clone()),
        _ => c.clone(),
    };
    a.iter()
        .map(|iv| {
            let (s, e) = match kind {
                TopologyKind::Nat => (open_start(iv.start()), open_end(iv.end())),
                TopologyKind::SorgR => (iv.start().clone(), open_end(iv.end())),
                TopologyKind::SorgL => (open_start(iv.start()), iv.end().clone()),
                _ => (iv.start().clone(), iv.end().clone()),
            };
            Interval::from_cuts(s, e)
        })
        .filter(|iv| !iv.is_empty())
        .collect()
}

impl RealSet {
    pub fn interior(&self, kind: TopologyKind) -> RealSet {
        match kind {
            TopologyKind::Discrete => self.clone(),
            // the largest ray inside the set ends where the complement starts
            TopologyKind::Upper => match self.complement().inf() {
                ExtRat::NegInf => RealSet::empty(),
                hi => RealSet::interval(Interval::open(ExtRat::NegInf, hi)),
            },
            TopologyKind::Lower => match self.complement().sup() {
                ExtRat::PosInf => RealSet::empty(),
                lo => RealSet::interval(Interval::open(lo, ExtRat::PosInf)),
            },
            local => self.map_local(&|a| local_interior(local, a)),
        }
    }

    pub fn closure(&self, kind: TopologyKind) -> RealSet {
        self.complement().interior(kind).complement()
    }

    pub fn is_open(&self, kind: TopologyKind) -> bool {
        self.interior(kind) == *self
    }

    pub fn is_closed(&self, kind: TopologyKind) -> bool {
        self.closure(kind) == *self
    }
}
