//! Random set descriptions with a membership oracle that does not go through
//! the library's normal forms.

#![allow(dead_code)]

use gts_core::realset::{Interval, TailSpec};
use gts_core::{ExtRat, Rat, RealSet};
use num_integer::Integer;
use proptest::prelude::*;

/// Interval in quarters: `lo/4 .. hi/4`, `None` for an infinite end.
#[derive(Clone, Debug)]
pub struct Piece {
    pub lo: Option<i64>,
    pub lo_closed: bool,
    pub hi: Option<i64>,
    pub hi_closed: bool,
}

impl Piece {
    pub fn holds(&self, q: &Rat) -> bool {
        let above = match self.lo {
            None => true,
            Some(l) => {
                let l = quarter(l);
                *q > l || (self.lo_closed && *q == l)
            }
        };
        let below = match self.hi {
            None => true,
            Some(h) => {
                let h = quarter(h);
                *q < h || (self.hi_closed && *q == h)
            }
        };
        above && below
    }

    pub fn interval(&self) -> Interval {
        let end = |v: Option<i64>, neg: bool| match v {
            Some(x) => ExtRat::Fin(quarter(x)),
            None if neg => ExtRat::NegInf,
            None => ExtRat::PosInf,
        };
        let (lo, hi) = (end(self.lo, true), end(self.hi, false));
        let lc = self.lo_closed && self.lo.is_some();
        let hc = self.hi_closed && self.hi.is_some();
        Interval::new(lo, lc, hi, hc).unwrap_or_else(|_| {
            Interval::open(
                ExtRat::Fin(Rat::from_integer(0)),
                ExtRat::Fin(Rat::from_integer(0)),
            )
        })
    }
}

pub fn quarter(v: i64) -> Rat {
    Rat::new(v as i128, 4)
}

/// Pattern in quarters inside `[0, period)`.
#[derive(Clone, Debug)]
pub struct TailDesc {
    /// Period in quarters.
    pub period: i64,
    pub pattern: Vec<(i64, bool, i64, bool)>,
    pub cut: i64,
}

impl TailDesc {
    fn pattern_holds(&self, q: &Rat) -> bool {
        // reduce q*4 modulo the period in quarters
        let scaled = q * Rat::from_integer(4);
        let p = Rat::from_integer(self.period as i128);
        let k = (scaled.clone() / p.clone()).floor();
        let y = scaled - k * p;
        self.pattern.iter().any(|&(a, ac, b, bc)| {
            let (a, b) = (Rat::from_integer(a as i128), Rat::from_integer(b as i128));
            (y > a || (ac && y == a)) && (y < b || (bc && y == b))
        })
    }

    fn spec(&self) -> TailSpec {
        TailSpec {
            pattern: self
                .pattern
                .iter()
                .filter_map(|&(a, ac, b, bc)| {
                    Interval::new(ExtRat::Fin(quarter(a)), ac, ExtRat::Fin(quarter(b)), bc).ok()
                })
                .collect(),
            period: quarter(self.period),
            cut: quarter(self.cut),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Desc {
    pub core: Vec<Piece>,
    pub left: Option<TailDesc>,
    pub right: Option<TailDesc>,
}

impl Desc {
    pub fn holds(&self, q: &Rat) -> bool {
        self.core.iter().any(|p| p.holds(q))
            || self
                .left
                .as_ref()
                .is_some_and(|t| *q < quarter(t.cut) && t.pattern_holds(q))
            || self
                .right
                .as_ref()
                .is_some_and(|t| *q > quarter(t.cut) && t.pattern_holds(q))
    }

    pub fn build(&self) -> RealSet {
        RealSet::normalize(
            self.core.iter().map(Piece::interval).collect(),
            self.left.as_ref().map(TailDesc::spec),
            self.right.as_ref().map(TailDesc::spec),
        )
        .expect("generated tails are well formed")
    }
}

fn piece() -> impl Strategy<Value = Piece> {
    (
        prop::option::weighted(0.9, -24i64..24),
        any::<bool>(),
        0i64..16,
        any::<bool>(),
        prop::bool::weighted(0.1),
    )
        .prop_map(|(lo, lo_closed, len, hi_closed, open_top)| {
            let hi = if open_top {
                None
            } else {
                Some(lo.unwrap_or(-8) + len)
            };
            Piece {
                lo,
                lo_closed,
                hi,
                hi_closed,
            }
        })
}

fn tail() -> impl Strategy<Value = TailDesc> {
    (
        prop::sample::select(vec![4i64, 6, 8]),
        -24i64..24,
        prop::collection::vec((0i64..8, any::<bool>(), 0i64..4, any::<bool>()), 0..3),
    )
        .prop_map(|(period, cut, raw)| {
            let mut pattern = Vec::new();
            for (a, ac, len, bc) in raw {
                let a = a.mod_floor(&period);
                let b = (a + len).min(period);
                // the top end of [0, period) is never closed
                let bc = bc && b < period;
                if a < b || (a == b && ac && bc) {
                    pattern.push((a, ac, b, bc));
                }
            }
            TailDesc {
                period,
                pattern,
                cut,
            }
        })
}

pub fn desc() -> impl Strategy<Value = Desc> {
    (
        prop::collection::vec(piece(), 0..4),
        prop::option::weighted(0.3, tail()),
        prop::option::weighted(0.3, tail()),
    )
        .prop_map(|(core, left, right)| Desc { core, left, right })
}

pub fn set() -> impl Strategy<Value = RealSet> {
    desc().prop_map(|d| d.build())
}

/// Grid of step 1/16 over [-8, 8].
pub fn grid() -> Vec<Rat> {
    (-128..=128).map(|k| Rat::new(k, 16)).collect()
}
