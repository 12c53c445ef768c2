use num_traits::{Signed, Zero};

use super::interval::{self, Interval};
use crate::rat::{ceil_div, floor_div, int, Cut, ExtRat, Rat};

/// Eventual behaviour of a set towards one of the infinities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Behavior {
    Const(bool),
    Periodic(Periodic),
}

/// `⋃_{k∈ℤ} (pattern + k·period)` with `pattern ⊆ [0, period)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Periodic {
    pub period: Rat,
    pub pattern: Vec<Interval>,
}

impl Periodic {
    /// Builds from an arbitrary list of intervals interpreted modulo `period`.
    pub fn from_pattern(period: Rat, raw: Vec<Interval>) -> Periodic {
        let n = interval::normalize(raw);
        // fold every copy into [0, period)
        let mut folded = Vec::new();
        for iv in &n {
            let (lo, hi) = match (iv.lo().fin(), iv.hi().fin()) {
                (Some(l), Some(h)) => (l.clone(), h.clone()),
                _ => {
                    folded.push(Interval::closed_open(int(0), ExtRat::Fin(period.clone())));
                    continue;
                }
            };
            for k in floor_div(&lo, &period) - 1..=ceil_div(&hi, &period) + 1 {
                let s = iv.shift(&(-&period * int(k)));
                folded.extend(interval::clip(
                    std::slice::from_ref(&s),
                    &Cut::before(int(0)),
                    &Cut::before(period.clone()),
                ));
            }
        }
        Periodic {
            period,
            pattern: interval::normalize(folded),
        }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        let k = floor_div(x, &self.period);
        let y = x - &self.period * int(k);
        self.pattern.iter().any(|iv| iv.contains(&y))
    }

    /// The periodic set restricted to the cut range `[start, end)`; infinite ends
    /// are only allowed when the pattern is empty.
    pub fn materialize(&self, start: &Cut, end: &Cut) -> Vec<Interval> {
        if self.pattern.is_empty() || start >= end {
            return Vec::new();
        }
        let (s, e) = match (start.at.fin(), end.at.fin()) {
            (Some(s), Some(e)) => (s, e),
            _ => panic!("materializing a periodic set over an unbounded window"),
        };
        let mut out = Vec::new();
        for k in floor_div(s, &self.period) - 1..=ceil_div(e, &self.period) + 1 {
            out.extend(interval::shift(&self.pattern, &(&self.period * int(k))));
        }
        interval::clip(&interval::normalize(out), start, end)
    }

    /// Pattern over `[0, big)` where `big` is a multiple of the period.
    pub fn pattern_over(&self, big: &Rat) -> Vec<Interval> {
        self.materialize(&Cut::before(int(0)), &Cut::before(big.clone()))
    }

    /// Applies a cut-local set operator; the operator only sees a window one
    /// period wider on each side, so its edge artefacts stay outside `[0, p)`.
    pub fn map_local(&self, op: &dyn Fn(&[Interval]) -> Vec<Interval>) -> Periodic {
        let p = &self.period;
        let window = self.materialize(&Cut::before(-p), &Cut::before(p * int(2)));
        let out = op(&window);
        Periodic {
            period: p.clone(),
            pattern: interval::clip(&out, &Cut::before(int(0)), &Cut::before(p.clone())),
        }
    }

    /// Image under `x -> a*x + b`.
    pub fn affine(&self, a: &Rat, b: &Rat) -> Periodic {
        let new_p = (a * &self.period).abs();
        // preimage of [0, new_p) under the map
        let (s, e) = if a.is_negative() {
            (Cut::after((&new_p - b) / a), Cut::after(-b / a))
        } else {
            (Cut::before(-b / a), Cut::before((&new_p - b) / a))
        };
        let src = self.materialize(&s, &e);
        let img: Vec<Interval> = src.iter().map(|iv| iv.affine(a, b)).collect();
        Periodic::from_pattern(new_p, img)
    }
}

impl Behavior {
    pub fn materialize(&self, start: &Cut, end: &Cut) -> Vec<Interval> {
        match self {
            Behavior::Const(false) => Vec::new(),
            Behavior::Const(true) => {
                if start < end {
                    vec![Interval::from_cuts(start.clone(), end.clone())]
                } else {
                    Vec::new()
                }
            }
            Behavior::Periodic(p) => p.materialize(start, end),
        }
    }

    pub fn period(&self) -> Option<&Rat> {
        match self {
            Behavior::Periodic(p) => Some(&p.period),
            Behavior::Const(_) => None,
        }
    }

    /// Minimal period, with empty and full patterns collapsing to constants.
    pub fn reduce(self) -> Behavior {
        let p = match self {
            Behavior::Const(_) => return self,
            Behavior::Periodic(p) => p,
        };
        if p.pattern.is_empty() {
            return Behavior::Const(false);
        }
        let full = Interval::closed_open(int(0), ExtRat::Fin(p.period.clone()));
        if p.pattern == [full] {
            return Behavior::Const(true);
        }
        let bound = 2 * p.pattern.len() as i128 + 2;
        for k in (2..=bound).rev() {
            let q = &p.period / int(k);
            let shifted = interval::shift(
                &p.materialize(&Cut::before(q.clone()), &Cut::before(&p.period + &q)),
                &-q.clone(),
            );
            if shifted == p.pattern {
                let pattern =
                    interval::clip(&p.pattern, &Cut::before(int(0)), &Cut::before(q.clone()));
                return Behavior::Periodic(Periodic { period: q, pattern });
            }
        }
        Behavior::Periodic(p)
    }

    pub fn at_scale(&self, big: &Rat) -> Vec<Interval> {
        match self {
            Behavior::Const(false) => Vec::new(),
            Behavior::Const(true) => vec![Interval::closed_open(int(0), ExtRat::Fin(big.clone()))],
            Behavior::Periodic(p) => p.pattern_over(big),
        }
    }

    pub fn is_zero_const(&self) -> bool {
        matches!(self, Behavior::Const(false))
    }

    pub fn contains(&self, x: &Rat) -> bool {
        match self {
            Behavior::Const(b) => *b,
            Behavior::Periodic(p) => p.contains(x),
        }
    }
}

pub(crate) fn is_positive(r: &Rat) -> bool {
    r.is_positive() && !r.is_zero()
}
