use std::fmt;

use num_traits::{Signed, Zero};

use crate::rat::{Cut, ExtRat, Rat};
use crate::SetError;

/// A connected subset of the line, stored as the cut range `[start, end)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    start: Cut,
    end: Cut,
}

impl Interval {
    /// Builds `<lo, hi>` with the given closedness flags.
    ///
    /// Fails when `lo > hi` or when an infinite endpoint is marked closed. A range
    /// such as `(1, 1)` is accepted and is empty; normalization drops it.
    pub fn new(
        lo: ExtRat,
        lo_closed: bool,
        hi: ExtRat,
        hi_closed: bool,
    ) -> Result<Interval, SetError> {
        if lo > hi {
            return Err(SetError::Malformed(format!(
                "lower endpoint {lo} exceeds upper endpoint {hi}"
            )));
        }
        if (lo_closed && !lo.is_finite()) || (hi_closed && !hi.is_finite()) {
            return Err(SetError::Malformed(
                "an infinite endpoint cannot be closed".into(),
            ));
        }
        if lo == ExtRat::PosInf || hi == ExtRat::NegInf {
            return Err(SetError::Malformed("interval lies at infinity".into()));
        }
        let start = match lo {
            ExtRat::NegInf => Cut::neg_inf(),
            at => Cut {
                at,
                after: !lo_closed,
            },
        };
        let end = match hi {
            ExtRat::PosInf => Cut::pos_inf(),
            at => Cut {
                at,
                after: hi_closed,
            },
        };
        Ok(Interval { start, end })
    }

    pub fn closed(lo: Rat, hi: Rat) -> Interval {
        Interval::from_cuts(Cut::before(lo), Cut::after(hi))
    }

    pub fn open(lo: ExtRat, hi: ExtRat) -> Interval {
        Interval::new(lo, false, hi, false).expect("open interval with ordered endpoints")
    }

    /// `[lo, hi)` with finite `lo`.
    pub fn closed_open(lo: Rat, hi: ExtRat) -> Interval {
        Interval::new(ExtRat::Fin(lo), true, hi, false).expect("ordered endpoints")
    }

    /// `(lo, hi]` with finite `hi`.
    pub fn open_closed(lo: ExtRat, hi: Rat) -> Interval {
        Interval::new(lo, false, ExtRat::Fin(hi), true).expect("ordered endpoints")
    }

    pub fn point(x: Rat) -> Interval {
        Interval::closed(x.clone(), x)
    }

    pub fn reals() -> Interval {
        Interval::from_cuts(Cut::neg_inf(), Cut::pos_inf())
    }

    pub(crate) fn from_cuts(start: Cut, end: Cut) -> Interval {
        Interval { start, end }
    }

    pub fn start(&self) -> &Cut {
        &self.start
    }

    pub fn end(&self) -> &Cut {
        &self.end
    }

    pub fn lo(&self) -> &ExtRat {
        &self.start.at
    }

    pub fn hi(&self) -> &ExtRat {
        &self.end.at
    }

    pub fn lo_closed(&self) -> bool {
        self.start.at.is_finite() && !self.start.after
    }

    pub fn hi_closed(&self) -> bool {
        self.end.at.is_finite() && self.end.after
    }

    pub fn is_empty(&self) -> bool {
        self.start >= self.end
    }

    pub fn is_point(&self) -> bool {
        self.lo() == self.hi() && self.lo_closed() && self.hi_closed()
    }

    pub fn is_bounded(&self) -> bool {
        self.lo().is_finite() && self.hi().is_finite()
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.start <= Cut::before(x.clone()) && Cut::after(x.clone()) <= self.end
    }

    pub fn shift(&self, t: &Rat) -> Interval {
        Interval {
            start: self.start.shift(t),
            end: self.end.shift(t),
        }
    }

    /// Image under `x -> a*x + b`, `a != 0`.
    pub fn affine(&self, a: &Rat, b: &Rat) -> Interval {
        debug_assert!(!a.is_zero());
        let (start, end) = if a.is_negative() {
            (self.end.reflect(), self.start.reflect())
        } else {
            (self.start.clone(), self.end.clone())
        };
        let k = a.abs();
        Interval {
            start: start.scale_pos(&k).shift(b),
            end: end.scale_pos(&k).shift(b),
        }
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        Interval {
            start: self.start.clone().max(other.start.clone()),
            end: self.end.clone().min(other.end.clone()),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "{{{}}}", self.lo());
        }
        let l = if self.lo_closed() { '[' } else { '(' };
        let r = if self.hi_closed() { ']' } else { ')' };
        write!(f, "{l}{}, {}{r}", self.lo(), self.hi())
    }
}

/// Sorts, drops empties and merges overlapping or touching intervals.
pub fn normalize(mut raw: Vec<Interval>) -> Vec<Interval> {
    raw.retain(|iv| !iv.is_empty());
    raw.sort();
    let mut out: Vec<Interval> = Vec::with_capacity(raw.len());
    for iv in raw {
        match out.last_mut() {
            Some(last) if iv.start <= last.end => {
                if iv.end > last.end {
                    last.end = iv.end;
                }
            }
            _ => out.push(iv),
        }
    }
    out
}

/// Pointwise Boolean combination of normalized interval lists.
pub fn combine(lists: &[&[Interval]], f: &dyn Fn(&[bool]) -> bool) -> Vec<Interval> {
    let mut cuts: Vec<Cut> = vec![Cut::neg_inf(), Cut::pos_inf()];
    for l in lists {
        for iv in l.iter() {
            cuts.push(iv.start.clone());
            cuts.push(iv.end.clone());
        }
    }
    cuts.sort();
    cuts.dedup();
    let mut ptr = vec![0usize; lists.len()];
    let mut bits = vec![false; lists.len()];
    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let (s, e) = (&w[0], &w[1]);
        for (i, l) in lists.iter().enumerate() {
            while ptr[i] < l.len() && l[ptr[i]].end <= *s {
                ptr[i] += 1;
            }
            bits[i] = ptr[i] < l.len() && l[ptr[i]].start <= *s;
        }
        if f(&bits) {
            out.push(Interval {
                start: s.clone(),
                end: e.clone(),
            });
        }
    }
    normalize(out)
}

pub fn union(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    combine(&[a, b], &|v| v[0] || v[1])
}

pub fn intersect(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    combine(&[a, b], &|v| v[0] && v[1])
}

pub fn complement(a: &[Interval]) -> Vec<Interval> {
    combine(&[a], &|v| !v[0])
}

pub fn sym_diff(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    combine(&[a, b], &|v| v[0] != v[1])
}

/// Restriction of a normalized list to the cut range `[start, end)`.
pub fn clip(a: &[Interval], start: &Cut, end: &Cut) -> Vec<Interval> {
    let w = Interval::from_cuts(start.clone(), end.clone());
    a.iter()
        .map(|iv| iv.intersect(&w))
        .filter(|iv| !iv.is_empty())
        .collect()
}

pub fn shift(a: &[Interval], t: &Rat) -> Vec<Interval> {
    a.iter().map(|iv| iv.shift(t)).collect()
}
