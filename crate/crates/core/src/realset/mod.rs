//! Exact canonical subsets of the real line.
//!
//! A [`RealSet`] is a finite union of intervals with rational or infinite
//! endpoints, optionally continued towards either infinity by a periodic tail.
//! Every constructor returns the canonical form, so `==` decides set equality.

pub mod interval;
pub mod periodic;
mod topology;

use std::fmt;

use num_traits::{Signed, Zero};

pub use interval::Interval;
pub use periodic::{Behavior, Periodic};
pub use topology::TopologyKind;

use crate::rat::{int, lcm, Cut, ExtRat, Rat};
use crate::SetError;

/// A periodic tail: the pattern repeated with the period, kept only below
/// (left tail) or above (right tail) the cut.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tail {
    pub periodic: Periodic,
    /// Strict bound of the tail region. A right tail with cut `-inf` covers the
    /// whole line; that is the representation of purely periodic sets.
    pub cut: ExtRat,
}

/// User-facing tail description accepted by [`RealSet::normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailSpec {
    pub pattern: Vec<Interval>,
    pub period: Rat,
    pub cut: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealSet {
    core: Vec<Interval>,
    left: Option<Tail>,
    right: Option<Tail>,
}

/// Boundedness flags of a set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Boundedness {
    pub bounded: bool,
    pub bounded_above: bool,
    pub bounded_below: bool,
    pub finite: bool,
}

/// Non-canonical three-region description: `left` below `l`, `mid` on `[l, r]`,
/// `right` above `r`.
#[derive(Clone, Debug)]
pub(crate) struct Raw {
    pub left: Behavior,
    pub l: Rat,
    pub mid: Vec<Interval>,
    pub r: Rat,
    pub right: Behavior,
}

impl Raw {
    pub fn materialize(&self, start: &Cut, end: &Cut) -> Vec<Interval> {
        let lcut = Cut::before(self.l.clone());
        let rcut = Cut::after(self.r.clone());
        let mut out = Vec::new();
        if *start < lcut {
            out.extend(self.left.materialize(start, &lcut.clone().min(end.clone())));
        }
        out.extend(interval::clip(
            &self.mid,
            &lcut.clone().max(start.clone()),
            &rcut.clone().min(end.clone()),
        ));
        if rcut < *end {
            out.extend(
                self.right
                    .materialize(&rcut.clone().max(start.clone()), end),
            );
        }
        interval::normalize(out)
    }

    fn window(&self, lo: Rat, hi: Rat) -> Vec<Interval> {
        self.materialize(&Cut::before(lo), &Cut::after(hi))
    }

    /// Smallest `M` such that two differing eventual behaviours must differ
    /// inside any window of length `M`.
    fn margin(&self) -> Rat {
        match (self.left.period(), self.right.period()) {
            (Some(a), Some(b)) => lcm(a, b) + int(1),
            (Some(a), None) | (None, Some(a)) => a + int(1),
            (None, None) => int(1),
        }
    }
}

impl RealSet {
    pub fn empty() -> RealSet {
        RealSet {
            core: Vec::new(),
            left: None,
            right: None,
        }
    }

    pub fn reals() -> RealSet {
        RealSet {
            core: vec![Interval::reals()],
            left: None,
            right: None,
        }
    }

    pub fn interval(iv: Interval) -> RealSet {
        RealSet::from_intervals(vec![iv])
    }

    pub fn point(x: Rat) -> RealSet {
        RealSet::interval(Interval::point(x))
    }

    pub fn from_intervals(raw: Vec<Interval>) -> RealSet {
        RealSet {
            core: interval::normalize(raw),
            left: None,
            right: None,
        }
    }

    /// The set `⋃_{k∈ℤ}(pattern + k·period)` over the whole line.
    pub fn periodic(pattern: Vec<Interval>, period: Rat) -> Result<RealSet, SetError> {
        if !periodic::is_positive(&period) {
            return Err(SetError::Malformed("period must be positive".into()));
        }
        let p = Periodic::from_pattern(period, pattern);
        Ok(canonicalize(Raw {
            left: Behavior::Periodic(p.clone()),
            l: int(0),
            mid: p.materialize(&Cut::before(int(0)), &Cut::after(int(0))),
            r: int(0),
            right: Behavior::Periodic(p),
        }))
    }

    /// Canonical form of `⋃raw ∪ left tail ∪ right tail`.
    pub fn normalize(
        raw: Vec<Interval>,
        left: Option<TailSpec>,
        right: Option<TailSpec>,
    ) -> Result<RealSet, SetError> {
        let mut acc = RealSet::from_intervals(raw);
        for (spec, is_left) in [(left, true), (right, false)] {
            let Some(spec) = spec else { continue };
            if !periodic::is_positive(&spec.period) {
                return Err(SetError::Malformed("tail period must be positive".into()));
            }
            for iv in &spec.pattern {
                let inside = iv.is_empty()
                    || (*iv.start() >= Cut::before(int(0))
                        && *iv.end() <= Cut::before(spec.period.clone()));
                if !inside {
                    return Err(SetError::Malformed(format!(
                        "tail pattern interval {iv} is not inside [0, period)"
                    )));
                }
            }
            let p = Behavior::Periodic(Periodic::from_pattern(spec.period, spec.pattern));
            let raw = if is_left {
                Raw {
                    left: p,
                    l: spec.cut.clone(),
                    mid: Vec::new(),
                    r: spec.cut,
                    right: Behavior::Const(false),
                }
            } else {
                Raw {
                    left: Behavior::Const(false),
                    l: spec.cut.clone(),
                    mid: Vec::new(),
                    r: spec.cut,
                    right: p,
                }
            };
            acc = acc.union(&canonicalize(raw));
        }
        Ok(acc)
    }

    pub fn core(&self) -> &[Interval] {
        &self.core
    }

    pub fn left_tail(&self) -> Option<&Tail> {
        self.left.as_ref()
    }

    pub fn right_tail(&self) -> Option<&Tail> {
        self.right.as_ref()
    }

    pub fn has_tails(&self) -> bool {
        self.left.is_some() || self.right.is_some()
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty() && !self.has_tails()
    }

    pub fn is_reals(&self) -> bool {
        self.core.len() == 1 && self.core[0] == Interval::reals()
    }

    pub(crate) fn left_behavior(&self) -> Behavior {
        if let Some(t) = &self.left {
            return Behavior::Periodic(t.periodic.clone());
        }
        if let Some(t) = &self.right {
            if t.cut == ExtRat::NegInf {
                return Behavior::Periodic(t.periodic.clone());
            }
        }
        Behavior::Const(
            self.core
                .first()
                .is_some_and(|iv| *iv.lo() == ExtRat::NegInf),
        )
    }

    pub(crate) fn right_behavior(&self) -> Behavior {
        if let Some(t) = &self.right {
            return Behavior::Periodic(t.periodic.clone());
        }
        Behavior::Const(
            self.core
                .last()
                .is_some_and(|iv| *iv.hi() == ExtRat::PosInf),
        )
    }

    fn finite_events(&self) -> Vec<Rat> {
        let mut ev = Vec::new();
        for iv in &self.core {
            ev.extend(iv.lo().fin().cloned());
            ev.extend(iv.hi().fin().cloned());
        }
        for t in self.left.iter().chain(self.right.iter()) {
            ev.extend(t.cut.fin().cloned());
        }
        ev
    }

    pub(crate) fn to_raw(&self) -> Raw {
        let ev = self.finite_events();
        let mut l = ev.iter().min().cloned().unwrap_or_else(|| int(0));
        let mut r = ev.iter().max().cloned().unwrap_or_else(|| int(0));
        if let (Some(lt), Some(rt)) = (&self.left, &self.right) {
            if let (ExtRat::Fin(cl), ExtRat::Fin(cr)) = (&lt.cut, &rt.cut) {
                if cr < cl {
                    l = cl.clone();
                    r = cl.clone();
                }
            }
        }
        let right = self.right_behavior();
        let mid = match &self.right {
            Some(t) if matches!(t.cut, ExtRat::Fin(ref c) if *c < l) || t.cut == ExtRat::NegInf => {
                t.periodic
                    .materialize(&Cut::before(l.clone()), &Cut::after(r.clone()))
            }
            _ => interval::clip(&self.core, &Cut::before(l.clone()), &Cut::after(r.clone())),
        };
        Raw {
            left: self.left_behavior(),
            l,
            mid,
            r,
            right,
        }
    }

    pub fn contains_point(&self, x: &Rat) -> bool {
        if self.core.iter().any(|iv| iv.contains(x)) {
            return true;
        }
        if let Some(t) = &self.left {
            if ExtRat::Fin(x.clone()) < t.cut && t.periodic.contains(x) {
                return true;
            }
        }
        if let Some(t) = &self.right {
            if ExtRat::Fin(x.clone()) > t.cut && t.periodic.contains(x) {
                return true;
            }
        }
        false
    }

    /// The grid points `lo + k·step` of a bounded window that belong to the set.
    pub fn sample_points(&self, window: &Interval, step: &Rat) -> Result<Vec<Rat>, SetError> {
        if !periodic::is_positive(step) {
            return Err(SetError::Malformed("sampling step must be positive".into()));
        }
        let (Some(lo), Some(hi)) = (window.lo().fin(), window.hi().fin()) else {
            return Err(SetError::Malformed(
                "sampling window must be bounded".into(),
            ));
        };
        let mut out = Vec::new();
        let mut x = lo.clone();
        while x <= *hi {
            if window.contains(&x) && self.contains_point(&x) {
                out.push(x.clone());
            }
            x += step;
        }
        Ok(out)
    }

    /// The set restricted to a bounded window, as plain intervals.
    pub fn window(&self, lo: &Rat, hi: &Rat) -> Vec<Interval> {
        self.to_raw().window(lo.clone(), hi.clone())
    }

    pub fn union(&self, other: &RealSet) -> RealSet {
        combine(&[self, other], &|v| v[0] || v[1])
    }

    pub fn intersect(&self, other: &RealSet) -> RealSet {
        combine(&[self, other], &|v| v[0] && v[1])
    }

    pub fn difference(&self, other: &RealSet) -> RealSet {
        combine(&[self, other], &|v| v[0] && !v[1])
    }

    pub fn complement(&self) -> RealSet {
        combine(&[self], &|v| !v[0])
    }

    pub fn sym_difference(&self, other: &RealSet) -> RealSet {
        combine(&[self, other], &|v| v[0] != v[1])
    }

    pub fn is_subset(&self, other: &RealSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn boundedness(&self) -> Boundedness {
        let bounded_above = self.right_behavior().is_zero_const();
        let bounded_below = self.left_behavior().is_zero_const();
        let finite = !self.has_tails() && self.core.iter().all(Interval::is_point);
        Boundedness {
            bounded: bounded_above && bounded_below,
            bounded_above,
            bounded_below,
            finite,
        }
    }

    /// Supremum (`-inf` for the empty set).
    pub fn sup(&self) -> ExtRat {
        if !self.right_behavior().is_zero_const() {
            return ExtRat::PosInf;
        }
        if let Some(iv) = self.core.last() {
            return iv.hi().clone();
        }
        match &self.left {
            Some(t) => {
                let c = t.cut.fin().expect("left tail cut is finite").clone();
                let w = t
                    .periodic
                    .materialize(&Cut::before(&c - &t.periodic.period), &Cut::before(c));
                w.last().map(|iv| iv.hi().clone()).unwrap_or(ExtRat::NegInf)
            }
            None => ExtRat::NegInf,
        }
    }

    /// Infimum (`+inf` for the empty set).
    pub fn inf(&self) -> ExtRat {
        if !self.left_behavior().is_zero_const() {
            return ExtRat::NegInf;
        }
        if let Some(iv) = self.core.first() {
            return iv.lo().clone();
        }
        match &self.right {
            Some(t) => {
                let c = t.cut.fin().expect("right tail cut is finite").clone();
                let w = t
                    .periodic
                    .materialize(&Cut::after(c.clone()), &Cut::after(&c + &t.periodic.period));
                w.first()
                    .map(|iv| iv.lo().clone())
                    .unwrap_or(ExtRat::PosInf)
            }
            None => ExtRat::PosInf,
        }
    }

    /// Whether every connected component is a single point.
    pub fn is_scattered(&self) -> bool {
        self.core.iter().all(Interval::is_point)
            && self
                .left
                .iter()
                .chain(self.right.iter())
                .all(|t| t.periodic.pattern.iter().all(Interval::is_point))
    }

    /// Image under `x -> a*x + b`, `a != 0`.
    pub fn affine_image(&self, a: &Rat, b: &Rat) -> RealSet {
        assert!(!a.is_zero(), "affine image needs a non-zero slope");
        let raw = self.to_raw();
        let map_b = |beh: Behavior| match beh {
            Behavior::Periodic(p) => Behavior::Periodic(p.affine(a, b)),
            c => c,
        };
        let mid: Vec<Interval> = raw.mid.iter().map(|iv| iv.affine(a, b)).collect();
        let l = a * &raw.l + b;
        let r = a * &raw.r + b;
        let out = if a.is_negative() {
            Raw {
                left: map_b(raw.right),
                l: r,
                mid,
                r: l,
                right: map_b(raw.left),
            }
        } else {
            Raw {
                left: map_b(raw.left),
                l,
                mid,
                r,
                right: map_b(raw.right),
            }
        };
        canonicalize(out)
    }

    /// Preimage under `x -> a*x + b`, `a != 0`.
    pub fn affine_preimage(&self, a: &Rat, b: &Rat) -> RealSet {
        let inv = Rat::from_integer(1) / a;
        self.affine_image(&inv, &(-b * &inv))
    }

    pub fn translate(&self, t: &Rat) -> RealSet {
        self.affine_image(&int(1), t)
    }

    pub(crate) fn map_local(&self, op: &dyn Fn(&[Interval]) -> Vec<Interval>) -> RealSet {
        let raw = self.to_raw();
        let map_b = |beh: Behavior| match beh {
            Behavior::Periodic(p) => Behavior::Periodic(p.map_local(op)),
            Behavior::Const(c) => {
                let full = if c {
                    vec![Interval::reals()]
                } else {
                    Vec::new()
                };
                Behavior::Const(!op(&full).is_empty())
            }
        };
        let window = raw.window(&raw.l - int(1), &raw.r + int(1));
        let mid = interval::clip(
            &op(&window),
            &Cut::before(raw.l.clone()),
            &Cut::after(raw.r.clone()),
        );
        canonicalize(Raw {
            left: map_b(raw.left),
            l: raw.l,
            mid,
            r: raw.r,
            right: map_b(raw.right),
        })
    }
}

/// Pointwise Boolean combination of canonical sets.
pub(crate) fn combine(sets: &[&RealSet], f: &dyn Fn(&[bool]) -> bool) -> RealSet {
    let raws: Vec<Raw> = sets.iter().map(|s| s.to_raw()).collect();
    let side = |pick: &dyn Fn(&Raw) -> &Behavior| -> Behavior {
        let behs: Vec<&Behavior> = raws.iter().map(pick).collect();
        let periods: Vec<&Rat> = behs.iter().filter_map(|b| b.period()).collect();
        if periods.is_empty() {
            let bits: Vec<bool> = behs
                .iter()
                .map(|b| matches!(b, Behavior::Const(true)))
                .collect();
            return Behavior::Const(f(&bits));
        }
        let big = periods
            .iter()
            .skip(1)
            .fold(periods[0].clone(), |acc, p| lcm(&acc, p));
        let pats: Vec<Vec<Interval>> = behs.iter().map(|b| b.at_scale(&big)).collect();
        let refs: Vec<&[Interval]> = pats.iter().map(|v| v.as_slice()).collect();
        let out = interval::combine(&refs, f);
        let pattern = interval::clip(&out, &Cut::before(int(0)), &Cut::before(big.clone()));
        Behavior::Periodic(Periodic {
            period: big,
            pattern,
        })
    };
    let left = side(&|r: &Raw| &r.left);
    let right = side(&|r: &Raw| &r.right);
    let l = raws
        .iter()
        .map(|r| r.l.clone())
        .min()
        .unwrap_or_else(|| int(0));
    let r = raws
        .iter()
        .map(|r| r.r.clone())
        .max()
        .unwrap_or_else(|| int(0));
    let mats: Vec<Vec<Interval>> = raws
        .iter()
        .map(|x| x.window(l.clone(), r.clone()))
        .collect();
    let refs: Vec<&[Interval]> = mats.iter().map(|v| v.as_slice()).collect();
    let mid = interval::clip(
        &interval::combine(&refs, f),
        &Cut::before(l.clone()),
        &Cut::after(r.clone()),
    );
    canonicalize(Raw {
        left,
        l,
        mid,
        r,
        right,
    })
}

/// Canonical form of a three-region description: minimal periods, minimal cuts.
pub(crate) fn canonicalize(raw: Raw) -> RealSet {
    let raw = Raw {
        left: raw.left.reduce(),
        right: raw.right.reduce(),
        ..raw
    };
    let margin = raw.margin();

    let right_cut = match &raw.right {
        Behavior::Periodic(p) => {
            let lo = &raw.l - &margin;
            let here = raw.window(lo.clone(), raw.r.clone());
            let model = p.materialize(&Cut::before(lo), &Cut::after(raw.r.clone()));
            let d = interval::sym_diff(&here, &model);
            match d.last() {
                None if raw.left == raw.right => {
                    return RealSet {
                        core: Vec::new(),
                        left: None,
                        right: Some(Tail {
                            periodic: p.clone(),
                            cut: ExtRat::NegInf,
                        }),
                    };
                }
                None => Some(&raw.l - &margin),
                Some(iv) => Some(
                    iv.hi()
                        .fin()
                        .expect("difference inside a bounded window")
                        .clone(),
                ),
            }
        }
        Behavior::Const(_) => None,
    };
    let left_cut = match &raw.left {
        Behavior::Periodic(p) => {
            let hi = &raw.r + &margin;
            let here = raw.window(raw.l.clone(), hi.clone());
            let model = p.materialize(&Cut::before(raw.l.clone()), &Cut::after(hi.clone()));
            let d = interval::sym_diff(&here, &model);
            Some(match d.first() {
                Some(iv) => iv
                    .lo()
                    .fin()
                    .expect("difference inside a bounded window")
                    .clone(),
                None => hi,
            })
        }
        Behavior::Const(_) => None,
    };

    let start = left_cut
        .clone()
        .map(Cut::before)
        .unwrap_or_else(Cut::neg_inf);
    let end = right_cut
        .clone()
        .map(Cut::after)
        .unwrap_or_else(Cut::pos_inf);
    let core = if start < end {
        raw.materialize(&start, &end)
    } else {
        Vec::new()
    };
    let tail = |b: &Behavior, c: Option<Rat>| match (b, c) {
        (Behavior::Periodic(p), Some(c)) => Some(Tail {
            periodic: p.clone(),
            cut: ExtRat::Fin(c),
        }),
        _ => None,
    };
    RealSet {
        core,
        left: tail(&raw.left, left_cut),
        right: tail(&raw.right, right_cut),
    }
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pat: Vec<String> = self
            .periodic
            .pattern
            .iter()
            .map(|iv| iv.to_string())
            .collect();
        write!(
            f,
            "period {} cut {} pattern {}",
            crate::rat::fmt_rat(&self.periodic.period),
            self.cut,
            pat.join(" u ")
        )
    }
}

impl fmt::Display for RealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let mut parts: Vec<String> = Vec::new();
        if let Some(t) = &self.left {
            parts.push(format!("left-tail({t})"));
        }
        parts.extend(self.core.iter().map(|iv| iv.to_string()));
        if let Some(t) = &self.right {
            parts.push(format!("right-tail({t})"));
        }
        f.write_str(&parts.join(" u "))
    }
}
