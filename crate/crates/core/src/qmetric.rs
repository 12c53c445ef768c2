//! Named quasi-(pseudo)metrics on the line with closed-form balls.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::rat::{int, Cut, ExtRat, Rat};
use crate::realset::{interval, Behavior, Interval, Periodic, RealSet, TopologyKind};
use crate::SetError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetricName {
    /// `|x - y|`
    DN,
    /// `min{|x - y|, 1}`
    DN1,
    /// `|phi(x) - phi(y)|`
    DNPlus,
    DNPlus1,
    /// `min{|x - y|, 1} + |max(y,0) - max(x,0)|`
    DU,
    /// `max(0, y - x)`
    RhoU,
    RhoU1,
    /// `y - x` when `x <= y`, else 1
    RhoS,
    RhoS1,
    /// `min{y - x, 1}` when `x <= y`, else `1 + x - y`
    RhoL,
    /// `y - x` when `x <= y`, else `1 + x - y`
    Rho0,
    Rho01,
    /// `rho_S(phi(-y), phi(-x))`
    RhoSMinus,
}

impl MetricName {
    pub const ALL: [MetricName; 13] = [
        MetricName::DN,
        MetricName::DN1,
        MetricName::DNPlus,
        MetricName::DNPlus1,
        MetricName::DU,
        MetricName::RhoU,
        MetricName::RhoU1,
        MetricName::RhoS,
        MetricName::RhoS1,
        MetricName::RhoL,
        MetricName::Rho0,
        MetricName::Rho01,
        MetricName::RhoSMinus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MetricName::DN => "d_n",
            MetricName::DN1 => "d_n1",
            MetricName::DNPlus => "d_n_plus",
            MetricName::DNPlus1 => "d_n_plus_1",
            MetricName::DU => "d_u",
            MetricName::RhoU => "rho_u",
            MetricName::RhoU1 => "rho_u1",
            MetricName::RhoS => "rho_S",
            MetricName::RhoS1 => "rho_S1",
            MetricName::RhoL => "rho_L",
            MetricName::Rho0 => "rho_0",
            MetricName::Rho01 => "rho_0_1",
            MetricName::RhoSMinus => "rho_S_minus",
        }
    }

    pub fn uses_phi(self) -> bool {
        matches!(
            self,
            MetricName::DNPlus | MetricName::DNPlus1 | MetricName::RhoSMinus
        )
    }

    pub fn is_translation_invariant(self) -> bool {
        !matches!(
            self,
            MetricName::DNPlus | MetricName::DNPlus1 | MetricName::DU | MetricName::RhoSMinus
        )
    }

    pub fn is_symmetric(self) -> bool {
        matches!(
            self,
            MetricName::DN
                | MetricName::DN1
                | MetricName::DNPlus
                | MetricName::DNPlus1
                | MetricName::DU
        )
    }

    /// Whether `d(x,y) = d(y,x) = 0` forces `x = y` fails, i.e. only a
    /// quasi-pseudometric.
    pub fn is_pseudo(self) -> bool {
        matches!(self, MetricName::RhoU | MetricName::RhoU1)
    }

    fn capped(self) -> bool {
        matches!(
            self,
            MetricName::DN1
                | MetricName::DNPlus1
                | MetricName::RhoU1
                | MetricName::RhoS1
                | MetricName::Rho01
        )
    }
}

impl fmt::Display for MetricName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MetricName {
    type Err = SetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MetricName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| SetError::Malformed(format!("unknown metric `{s}`")))
    }
}

/// How the damping map behind `d_n_plus` and `rho_S_minus` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum PhiMode {
    /// `1/(1-x)` below zero, `1+x` above: rational and exact.
    #[default]
    ExactSurrogate,
    /// `e^x` below zero, evaluated in `f64`.
    FloatExp,
}

pub fn phi(x: &Rat) -> Rat {
    if x.is_negative() {
        Rat::one() / (Rat::one() - x)
    } else {
        Rat::one() + x
    }
}

/// Inverse of [`phi`] on `(0, +inf)`.
pub fn phi_inv(t: &Rat) -> Rat {
    debug_assert!(t.is_positive());
    if *t < Rat::one() {
        Rat::one() - Rat::one() / t
    } else {
        t - Rat::one()
    }
}

fn phi_f64(x: f64) -> f64 {
    if x < 0.0 {
        x.exp()
    } else {
        1.0 + x
    }
}

/// Which sets are bounded for a metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundedKind {
    All,
    Both,
    Above,
    Below,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuasiMetric {
    pub name: MetricName,
    pub phi_mode: PhiMode,
    pub conjugated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivVerdict {
    Refuted,
    Inconclusive,
}

impl QuasiMetric {
    pub fn new(name: MetricName) -> QuasiMetric {
        QuasiMetric {
            name,
            phi_mode: PhiMode::ExactSurrogate,
            conjugated: false,
        }
    }

    pub fn with_phi(self, phi_mode: PhiMode) -> QuasiMetric {
        QuasiMetric { phi_mode, ..self }
    }

    pub fn conjugate(self) -> QuasiMetric {
        QuasiMetric {
            conjugated: !self.conjugated,
            ..self
        }
    }

    fn is_float(&self) -> bool {
        self.phi_mode == PhiMode::FloatExp && self.name.uses_phi()
    }

    fn exact_only(&self) -> Result<(), SetError> {
        if self.is_float() {
            Err(SetError::Unsupported(format!(
                "{self} uses the floating-point damping map"
            )))
        } else {
            Ok(())
        }
    }

    pub fn is_translation_invariant(&self) -> bool {
        self.name.is_translation_invariant()
    }

    pub fn is_symmetric(&self) -> bool {
        self.name.is_symmetric()
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Result<Rat, SetError> {
        self.exact_only()?;
        Ok(if self.conjugated {
            base_eval(self.name, y, x)
        } else {
            base_eval(self.name, x, y)
        })
    }

    /// Approximate value; the only evaluation available in float mode.
    pub fn eval_approx(&self, x: f64, y: f64) -> f64 {
        let (x, y) = if self.conjugated { (y, x) } else { (x, y) };
        let one = |v: f64| v.min(1.0);
        let rho_s = |x: f64, y: f64| if x <= y { y - x } else { 1.0 };
        let ph = |v: f64| match self.phi_mode {
            PhiMode::ExactSurrogate if v < 0.0 => 1.0 / (1.0 - v),
            PhiMode::ExactSurrogate => 1.0 + v,
            PhiMode::FloatExp => phi_f64(v),
        };
        match self.name {
            MetricName::DN => (x - y).abs(),
            MetricName::DN1 => one((x - y).abs()),
            MetricName::DNPlus => (ph(x) - ph(y)).abs(),
            MetricName::DNPlus1 => one((ph(x) - ph(y)).abs()),
            MetricName::DU => one((x - y).abs()) + (y.max(0.0) - x.max(0.0)).abs(),
            MetricName::RhoU => (y - x).max(0.0),
            MetricName::RhoU1 => one((y - x).max(0.0)),
            MetricName::RhoS => rho_s(x, y),
            MetricName::RhoS1 => one(rho_s(x, y)),
            MetricName::RhoL => {
                if x <= y {
                    one(y - x)
                } else {
                    1.0 + x - y
                }
            }
            MetricName::Rho0 | MetricName::Rho01 => {
                let v = if x <= y { y - x } else { 1.0 + x - y };
                if self.name == MetricName::Rho01 {
                    one(v)
                } else {
                    v
                }
            }
            MetricName::RhoSMinus => rho_s(ph(-y), ph(-x)),
        }
    }

    /// `B_d(x, r) = {y : d(x, y) < r}` as a single interval.
    pub fn ball_interval(&self, x: &Rat, r: &Rat) -> Result<Interval, SetError> {
        self.exact_only()?;
        if !r.is_positive() {
            return Err(SetError::Malformed("radius must be positive".into()));
        }
        if !self.conjugated {
            return Ok(base_ball(self.name, x, r));
        }
        if self.name.is_symmetric() {
            return Ok(base_ball(self.name, x, r));
        }
        if self.name.is_translation_invariant() {
            return Ok(base_ball(self.name, &Rat::zero(), r).affine(&-Rat::one(), x));
        }
        // conjugate of rho_S_minus: y with rho_S_minus(y, x) < r
        let lo = ExtRat::Fin(-phi_inv(&(phi(&-x) + r)));
        Ok(if *r <= Rat::one() {
            Interval::open_closed(lo, x.clone())
        } else {
            Interval::open(lo, ExtRat::PosInf)
        })
    }

    pub fn ball(&self, x: &Rat, r: &Rat) -> Result<RealSet, SetError> {
        self.ball_interval(x, r).map(RealSet::interval)
    }

    pub fn bounded_kind(&self) -> BoundedKind {
        let base = match self.name {
            n if n.capped() => BoundedKind::All,
            MetricName::RhoSMinus => BoundedKind::All,
            MetricName::DN | MetricName::Rho0 => BoundedKind::Both,
            MetricName::RhoL => BoundedKind::Below,
            _ => BoundedKind::Above,
        };
        if !self.conjugated || self.name.is_symmetric() {
            return base;
        }
        match (self.name, base) {
            (MetricName::RhoSMinus, _) => BoundedKind::Below,
            (_, BoundedKind::Above) => BoundedKind::Below,
            (_, BoundedKind::Below) => BoundedKind::Above,
            (_, k) => k,
        }
    }

    /// Whether `A` lies inside some ball.
    pub fn is_bounded_set(&self, a: &RealSet) -> bool {
        if a.is_empty() {
            return true;
        }
        let b = a.boundedness();
        match self.bounded_kind() {
            BoundedKind::All => true,
            BoundedKind::Both => b.bounded,
            BoundedKind::Above => b.bounded_above,
            BoundedKind::Below => b.bounded_below,
        }
    }

    pub fn topology_of(&self) -> TopologyKind {
        let base = match self.name {
            MetricName::DN
            | MetricName::DN1
            | MetricName::DNPlus
            | MetricName::DNPlus1
            | MetricName::DU => TopologyKind::Nat,
            MetricName::RhoU | MetricName::RhoU1 => TopologyKind::Upper,
            _ => TopologyKind::SorgR,
        };
        if !self.conjugated {
            return base;
        }
        match base {
            TopologyKind::Upper => TopologyKind::Lower,
            TopologyKind::SorgR => TopologyKind::SorgL,
            k => k,
        }
    }

    /// `[A]^delta = union of B(a, delta) over a in A`.
    pub fn nbhd(&self, a: &RealSet, delta: &Rat) -> Result<RealSet, SetError> {
        self.exact_only()?;
        if !delta.is_positive() {
            return Err(SetError::Malformed(
                "neighbourhood radius must be positive".into(),
            ));
        }
        if a.is_empty() {
            return Ok(RealSet::empty());
        }
        if self.is_translation_invariant() {
            return Ok(minkowski(a, &self.ball_interval(&Rat::zero(), delta)?));
        }
        if a.has_tails() {
            return Err(SetError::Unsupported(format!(
                "neighbourhoods of periodic sets need a translation-invariant metric, got {self}"
            )));
        }
        self.nbhd_monotone(a, delta)
    }

    /// Neighbourhood through ball endpoints that move monotonically with the centre.
    pub fn nbhd_monotone(&self, a: &RealSet, delta: &Rat) -> Result<RealSet, SetError> {
        if a.has_tails() {
            return Err(SetError::Unsupported(
                "monotone expansion needs a set without tails".into(),
            ));
        }
        let mut parts = Vec::new();
        for j in a.core() {
            let lo_ball = j
                .lo()
                .fin()
                .map(|p| self.ball_interval(p, delta))
                .transpose()?;
            let hi_ball = j
                .hi()
                .fin()
                .map(|q| self.ball_interval(q, delta))
                .transpose()?;
            if j.lo_closed() {
                parts.push(lo_ball.clone().expect("closed end is finite"));
            }
            if j.hi_closed() {
                parts.push(hi_ball.clone().expect("closed end is finite"));
            }
            if !j.is_point() {
                let lo = lo_ball.map(|b| b.lo().clone()).unwrap_or(ExtRat::NegInf);
                let hi = hi_ball.map(|b| b.hi().clone()).unwrap_or(ExtRat::PosInf);
                if lo < hi {
                    parts.push(Interval::open(lo, hi));
                }
            }
        }
        Ok(RealSet::from_intervals(parts))
    }

    /// Refutes uniform equivalence of `self` and `other` with witness pairs.
    pub fn uniform_equiv_refute(
        &self,
        other: &QuasiMetric,
        eps: &Rat,
        pairs: &[(Rat, Rat)],
    ) -> Result<EquivVerdict, SetError> {
        let mut vals = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            vals.push((self.eval(x, y)?, other.eval(x, y)?));
        }
        let mut delta = Rat::one();
        for _ in 0..=20 {
            if !vals.iter().any(|(a, b)| *a < delta && b >= eps) {
                return Ok(EquivVerdict::Inconclusive);
            }
            delta /= int(2);
        }
        Ok(EquivVerdict::Refuted)
    }
}

impl fmt::Display for QuasiMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = self.name.as_str().to_string();
        if self.phi_mode == PhiMode::FloatExp && self.name.uses_phi() {
            s = format!("{s}[float]");
        }
        if self.conjugated {
            write!(f, "conj({s})")
        } else {
            f.write_str(&s)
        }
    }
}

fn base_eval(name: MetricName, x: &Rat, y: &Rat) -> Rat {
    let one = Rat::one();
    let cap = |v: Rat| v.min(Rat::one());
    let rho_s = |x: &Rat, y: &Rat| if x <= y { y - x } else { Rat::one() };
    let rho_0 = |x: &Rat, y: &Rat| if x <= y { y - x } else { Rat::one() + x - y };
    match name {
        MetricName::DN => (x - y).abs(),
        MetricName::DN1 => cap((x - y).abs()),
        MetricName::DNPlus => (phi(x) - phi(y)).abs(),
        MetricName::DNPlus1 => cap((phi(x) - phi(y)).abs()),
        MetricName::DU => {
            let z = Rat::zero();
            cap((x - y).abs()) + (y.max(&z).clone() - x.max(&z).clone()).abs()
        }
        MetricName::RhoU => (y - x).max(Rat::zero()),
        MetricName::RhoU1 => cap((y - x).max(Rat::zero())),
        MetricName::RhoS => rho_s(x, y),
        MetricName::RhoS1 => cap(rho_s(x, y)),
        MetricName::RhoL => {
            if x <= y {
                cap(y - x)
            } else {
                one + x - y
            }
        }
        MetricName::Rho0 => rho_0(x, y),
        MetricName::Rho01 => cap(rho_0(x, y)),
        MetricName::RhoSMinus => rho_s(&phi(&-y), &phi(&-x)),
    }
}

fn base_ball(name: MetricName, x: &Rat, r: &Rat) -> Interval {
    let one = Rat::one();
    let small = *r <= one;
    let fin = |v: Rat| ExtRat::Fin(v);
    let open = |lo: ExtRat, hi: ExtRat| Interval::open(lo, hi);
    match name {
        n if n.capped() && !small => Interval::reals(),
        MetricName::DN | MetricName::DN1 => open(fin(x - r), fin(x + r)),
        MetricName::DNPlus | MetricName::DNPlus1 => {
            let c = phi(x);
            let lo = if c <= *r {
                ExtRat::NegInf
            } else {
                fin(phi_inv(&(&c - r)))
            };
            open(lo, fin(phi_inv(&(c + r))))
        }
        MetricName::DU => du_ball(x, r),
        MetricName::RhoU | MetricName::RhoU1 => open(ExtRat::NegInf, fin(x + r)),
        _ if small && name != MetricName::RhoSMinus => Interval::closed_open(x.clone(), fin(x + r)),
        MetricName::RhoS => open(ExtRat::NegInf, fin(x + r)),
        MetricName::RhoL => open(fin(x + one - r), ExtRat::PosInf),
        MetricName::Rho0 => open(fin(x + one - r), fin(x + r)),
        MetricName::RhoSMinus => {
            let c = phi(&-x);
            let hi = if c <= *r {
                ExtRat::PosInf
            } else {
                fin(-phi_inv(&(&c - r)))
            };
            if small {
                Interval::closed_open(x.clone(), hi)
            } else {
                open(ExtRat::NegInf, hi)
            }
        }
        _ => unreachable!("capped metrics with small radius handled above"),
    }
}

// d_u(x, .) is continuous, non-increasing left of x and non-decreasing right of
// x, and piecewise linear with breaks at 0, x-1 and x+1.
fn du_ball(x: &Rat, r: &Rat) -> Interval {
    let f = |y: &Rat| base_eval(MetricName::DU, x, y);
    let solve = |dir: Rat| -> ExtRat {
        let mut pts: Vec<Rat> = [int(0), x - int(1), x + int(1)]
            .into_iter()
            .filter(|b| (b - x) * &dir > Rat::zero())
            .collect();
        pts.sort_by_key(|a| (a - x) * &dir);
        let mut prev = x.clone();
        for b in pts {
            if f(&b) >= *r {
                return ExtRat::Fin(interp(&prev, &b, &f(&prev), &f(&b), r));
            }
            prev = b;
        }
        let next = &prev + &dir;
        let slope = f(&next) - f(&prev);
        if slope.is_zero() {
            if dir.is_positive() {
                ExtRat::PosInf
            } else {
                ExtRat::NegInf
            }
        } else {
            ExtRat::Fin(&prev + &dir * ((r - f(&prev)) / slope))
        }
    };
    Interval::open(solve(int(-1)), solve(int(1)))
}

fn interp(a: &Rat, b: &Rat, fa: &Rat, fb: &Rat, r: &Rat) -> Rat {
    a + (b - a) * ((r - fa) / (fb - fa))
}

/// `A + I` for a translation-invariant ball `I`.
pub(crate) fn minkowski(a: &RealSet, ball: &Interval) -> RealSet {
    if a.is_empty() {
        return RealSet::empty();
    }
    match (ball.lo(), ball.hi()) {
        (ExtRat::NegInf, ExtRat::PosInf) => return RealSet::reals(),
        (ExtRat::NegInf, ExtRat::Fin(h)) => {
            debug_assert!(!ball.hi_closed());
            return match a.sup() {
                ExtRat::Fin(s) => {
                    RealSet::interval(Interval::open(ExtRat::NegInf, ExtRat::Fin(s + h)))
                }
                _ => RealSet::reals(),
            };
        }
        (ExtRat::Fin(l), ExtRat::PosInf) => {
            debug_assert!(!ball.lo_closed());
            return match a.inf() {
                ExtRat::Fin(s) => {
                    RealSet::interval(Interval::open(ExtRat::Fin(s + l), ExtRat::PosInf))
                }
                _ => RealSet::reals(),
            };
        }
        _ => {}
    }
    let (bl, bh) = (
        ball.lo().fin().unwrap().clone(),
        ball.hi().fin().unwrap().clone(),
    );
    let reach = bl.abs().max(bh.abs()) + int(1);
    let sum = |list: &[Interval]| -> Vec<Interval> {
        list.iter()
            .map(|j| {
                Interval::new(
                    j.lo().add(&bl),
                    j.lo_closed() && ball.lo_closed(),
                    j.hi().add(&bh),
                    j.hi_closed() && ball.hi_closed(),
                )
                .expect("sum of intervals is an interval")
            })
            .collect()
    };
    let periodic = |b: Behavior| match b {
        Behavior::Periodic(p) => {
            let w = p.materialize(
                &Cut::before(-&reach - &p.period),
                &Cut::before(&p.period * int(2) + &reach),
            );
            let pattern = interval::clip(
                &interval::normalize(sum(&w)),
                &Cut::before(Rat::zero()),
                &Cut::before(p.period.clone()),
            );
            Behavior::Periodic(Periodic {
                period: p.period,
                pattern,
            })
        }
        c => c,
    };
    let raw = a.to_raw();
    let l = &raw.l - &reach;
    let r = &raw.r + &reach;
    let w = raw.materialize(&Cut::before(&l - &reach), &Cut::after(&r + &reach));
    let mid = interval::clip(
        &interval::normalize(sum(&w)),
        &Cut::before(l.clone()),
        &Cut::after(r.clone()),
    );
    crate::realset::canonicalize(crate::realset::Raw {
        left: periodic(raw.left),
        l,
        mid,
        r,
        right: periodic(raw.right),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn m(n: MetricName) -> QuasiMetric {
        QuasiMetric::new(n)
    }

    fn fin(v: Rat) -> ExtRat {
        ExtRat::Fin(v)
    }

    #[test]
    fn sorgenfrey_values() {
        assert_eq!(
            m(MetricName::RhoS).eval(&int(0), &rat(1, 2)).unwrap(),
            rat(1, 2)
        );
        assert_eq!(
            m(MetricName::RhoS).eval(&rat(1, 2), &int(0)).unwrap(),
            int(1)
        );
        assert_eq!(
            m(MetricName::DNPlus).eval(&int(-1), &int(0)).unwrap(),
            rat(1, 2)
        );
    }

    #[test]
    fn ball_shapes() {
        let b = m(MetricName::RhoS)
            .ball_interval(&int(0), &rat(1, 2))
            .unwrap();
        assert_eq!(b, Interval::closed_open(int(0), fin(rat(1, 2))));
        let u = m(MetricName::RhoU).ball_interval(&int(0), &int(1)).unwrap();
        assert_eq!(u, Interval::open(ExtRat::NegInf, fin(int(1))));
        let c = m(MetricName::RhoS)
            .conjugate()
            .ball_interval(&int(0), &rat(1, 2))
            .unwrap();
        assert_eq!(c, Interval::open_closed(fin(rat(-1, 2)), int(0)));
        let z = m(MetricName::Rho0).ball_interval(&int(0), &int(2)).unwrap();
        assert_eq!(z, Interval::open(fin(int(-1)), fin(int(2))));
    }

    #[test]
    fn neighbourhoods() {
        let a = RealSet::interval(Interval::closed(int(-1), int(1)));
        let n = m(MetricName::DN).nbhd(&a, &rat(1, 2)).unwrap();
        assert_eq!(
            n,
            RealSet::interval(Interval::open(fin(rat(-3, 2)), fin(rat(3, 2))))
        );
        let c = RealSet::interval(Interval::closed(int(-6), int(6)));
        let p = m(MetricName::DNPlus).nbhd(&c, &rat(1, 4)).unwrap();
        assert_eq!(
            p,
            RealSet::interval(Interval::open(ExtRat::NegInf, fin(rat(25, 4))))
        );
        let pt = RealSet::point(int(0));
        assert!(m(MetricName::RhoU1).nbhd(&pt, &int(2)).unwrap().is_reals());
    }

    #[test]
    fn bounded_sets() {
        let pos = RealSet::interval(Interval::open(fin(int(0)), ExtRat::PosInf));
        let neg = RealSet::interval(Interval::open(ExtRat::NegInf, fin(int(0))));
        assert!(!m(MetricName::RhoU).is_bounded_set(&pos));
        assert!(m(MetricName::RhoU).is_bounded_set(&neg));
        assert!(m(MetricName::RhoU1).is_bounded_set(&RealSet::reals()));
        assert!(m(MetricName::DNPlus).is_bounded_set(&neg));
    }

    #[test]
    fn induced_topologies() {
        assert_eq!(m(MetricName::RhoL).topology_of(), TopologyKind::SorgR);
        assert_eq!(m(MetricName::RhoU).topology_of(), TopologyKind::Upper);
        assert_eq!(m(MetricName::Rho0).topology_of(), TopologyKind::SorgR);
        assert_eq!(
            m(MetricName::RhoU).conjugate().topology_of(),
            TopologyKind::Lower
        );
    }

    #[test]
    fn uniform_equivalence() {
        let pairs: Vec<(Rat, Rat)> = (0..26)
            .map(|k| (-int(1 << k), -int(1 << (k + 1))))
            .collect();
        let v = m(MetricName::DNPlus)
            .uniform_equiv_refute(&m(MetricName::DN), &int(1), &pairs)
            .unwrap();
        assert_eq!(v, EquivVerdict::Refuted);
        let v = m(MetricName::DN)
            .uniform_equiv_refute(&m(MetricName::DN1), &int(1), &pairs)
            .unwrap();
        assert_eq!(v, EquivVerdict::Inconclusive);
        let quarter: Vec<(Rat, Rat)> = (0..8).map(|k| (int(k), int(k) + rat(1, 4))).collect();
        let v = m(MetricName::RhoS)
            .uniform_equiv_refute(&m(MetricName::Rho0), &rat(1, 2), &quarter)
            .unwrap();
        assert_eq!(v, EquivVerdict::Inconclusive);
    }

    #[test]
    fn float_mode_refuses_balls() {
        let d = m(MetricName::DNPlus).with_phi(PhiMode::FloatExp);
        assert!(d.ball(&int(0), &int(1)).is_err());
        assert!((d.eval_approx(-1.0, 0.0) - (1.0 - (-1.0f64).exp())).abs() < 1e-9);
    }
}
