use std::fmt;

use num_traits::Signed;

use crate::qmetric::QuasiMetric;
use crate::rat::{fmt_rat, int, ExtRat, Rat};
use crate::realset::{Interval, RealSet};
use crate::SetError;

/// Named bornologies on the line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bornology {
    /// Finite sets.
    FB,
    All,
    /// Bounded sets, the compact bornology of the natural topology.
    NatBounded,
    /// Bounded above.
    UB,
    /// Bounded below.
    LB,
    MetricBounded(QuasiMetric),
    Custom(BaseSchema),
    /// Bounded above sets in which every non-empty subset has a largest
    /// element. Among RealSets: bounded above with only point components.
    ReverseWellOrdered,
}

impl Bornology {
    pub fn contains(&self, a: &RealSet) -> bool {
        let b = a.boundedness();
        match self {
            Bornology::FB => b.finite,
            Bornology::All => true,
            Bornology::NatBounded => b.bounded,
            Bornology::UB => b.bounded_above,
            Bornology::LB => b.bounded_below,
            Bornology::MetricBounded(d) => d.is_bounded_set(a),
            Bornology::Custom(schema) => schema.index_of(a).is_some(),
            Bornology::ReverseWellOrdered => b.bounded_above && a.is_scattered(),
        }
    }

    /// An increasing base `B_0 ⊆ B_1 ⊆ ...`. The reverse well-ordered sets
    /// have none: every base member is countable.
    pub fn base(&self) -> Result<BaseSchema, SetError> {
        let v = |alpha: i128, beta: i128| AffineEnd::Affine {
            alpha: int(alpha),
            beta: int(beta),
        };
        let piece = |lo, lo_closed, hi, hi_closed| AffinePiece {
            lo,
            lo_closed,
            hi,
            hi_closed,
        };
        Ok(match self {
            Bornology::FB => BaseSchema::Grid,
            Bornology::All => BaseSchema::affine(
                vec![piece(AffineEnd::NegInf, false, AffineEnd::PosInf, false)],
                0,
            )?,
            Bornology::NatBounded => {
                BaseSchema::affine(vec![piece(v(0, -1), true, v(0, 1), true)], 0)?
            }
            Bornology::UB => {
                BaseSchema::affine(vec![piece(AffineEnd::NegInf, false, v(0, 1), false)], 0)?
            }
            Bornology::LB => {
                BaseSchema::affine(vec![piece(v(0, -1), false, AffineEnd::PosInf, false)], 0)?
            }
            Bornology::MetricBounded(d) => BaseSchema::Balls(*d),
            Bornology::Custom(s) => s.clone(),
            Bornology::ReverseWellOrdered => {
                return Err(SetError::Unsupported(
                    "reverse well-ordered sets have no countable base".into(),
                ))
            }
        })
    }
}

impl fmt::Display for Bornology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bornology::FB => f.write_str("FB"),
            Bornology::All => f.write_str("ALL"),
            Bornology::NatBounded => f.write_str("CB_nat"),
            Bornology::UB => f.write_str("UB"),
            Bornology::LB => f.write_str("LB"),
            Bornology::MetricBounded(d) => write!(f, "B({d})"),
            Bornology::Custom(s) => write!(f, "custom({s})"),
            Bornology::ReverseWellOrdered => f.write_str("UB_rwo"),
        }
    }
}

/// Endpoint `alpha + beta*n` of a schema piece.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AffineEnd {
    NegInf,
    PosInf,
    Affine { alpha: Rat, beta: Rat },
}

impl AffineEnd {
    fn at(&self, n: u64) -> ExtRat {
        match self {
            AffineEnd::NegInf => ExtRat::NegInf,
            AffineEnd::PosInf => ExtRat::PosInf,
            AffineEnd::Affine { alpha, beta } => ExtRat::Fin(alpha + beta * int(n as i128)),
        }
    }

    fn coeffs(&self) -> Option<(&Rat, &Rat)> {
        match self {
            AffineEnd::Affine { alpha, beta } => Some((alpha, beta)),
            _ => None,
        }
    }
}

impl fmt::Display for AffineEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineEnd::NegInf => f.write_str("-inf"),
            AffineEnd::PosInf => f.write_str("+inf"),
            AffineEnd::Affine { alpha, beta } => write!(f, "{}+{}n", fmt_rat(alpha), fmt_rat(beta)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffinePiece {
    pub lo: AffineEnd,
    pub lo_closed: bool,
    pub hi: AffineEnd,
    pub hi_closed: bool,
}

impl AffinePiece {
    fn at(&self, n: u64) -> Interval {
        let (lo, hi) = (self.lo.at(n), self.hi.at(n));
        match Interval::new(lo.clone(), self.lo_closed, hi.clone(), self.hi_closed) {
            Ok(iv) => iv,
            // empty at this index
            Err(_) => Interval::open(ExtRat::Fin(int(0)), ExtRat::Fin(int(0))),
        }
    }
}

/// Indexed increasing family of sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseSchema {
    /// Union of intervals with affine endpoints, indexed from `n0`.
    Affine { pieces: Vec<AffinePiece>, n0: u64 },
    /// The integer points `{-n, ..., n}`.
    Grid,
    /// `ball(0, n + 1)`.
    Balls(QuasiMetric),
}

impl BaseSchema {
    /// Rejects schemas whose members can shrink: lower ends must not increase
    /// and upper ends must not decrease in `n`.
    pub fn affine(pieces: Vec<AffinePiece>, n0: u64) -> Result<BaseSchema, SetError> {
        for p in &pieces {
            match (&p.lo, &p.hi) {
                (AffineEnd::PosInf, _) | (_, AffineEnd::NegInf) => {
                    return Err(SetError::Malformed(
                        "piece with reversed infinite ends".into(),
                    ))
                }
                _ => {}
            }
            if p.lo
                .coeffs()
                .is_some_and(|(_, b)| *b > Rat::from_integer(0))
            {
                return Err(SetError::Malformed(format!(
                    "lower end {} increases with n",
                    p.lo
                )));
            }
            if p.hi
                .coeffs()
                .is_some_and(|(_, b)| *b < Rat::from_integer(0))
            {
                return Err(SetError::Malformed(format!(
                    "upper end {} decreases with n",
                    p.hi
                )));
            }
        }
        Ok(BaseSchema::Affine { pieces, n0 })
    }

    pub fn element(&self, n: u64) -> RealSet {
        match self {
            BaseSchema::Affine { pieces, n0 } => {
                let n = n.max(*n0);
                RealSet::from_intervals(pieces.iter().map(|p| p.at(n)).collect())
            }
            BaseSchema::Grid => {
                let n = n.min(1 << 16) as i128;
                RealSet::from_intervals((-n..=n).map(|k| Interval::point(int(k))).collect())
            }
            BaseSchema::Balls(d) => d
                .ball(&int(0), &int(n as i128 + 1))
                .unwrap_or_else(|_| RealSet::empty()),
        }
    }

    /// Index past which the relative order of all affine ends and the finite
    /// breakpoints of `a` no longer changes.
    fn stable_index(&self, a: &RealSet) -> u64 {
        let BaseSchema::Affine { pieces, n0 } = self else {
            return 0;
        };
        let mut lines: Vec<(Rat, Rat)> = Vec::new();
        for p in pieces {
            for e in [&p.lo, &p.hi] {
                if let Some((al, be)) = e.coeffs() {
                    lines.push((al.clone(), be.clone()));
                }
            }
        }
        for v in [a.inf(), a.sup()] {
            if let ExtRat::Fin(x) = v {
                lines.push((x, Rat::from_integer(0)));
            }
        }
        for t in a.left_tail().into_iter().chain(a.right_tail()) {
            if let ExtRat::Fin(x) = &t.cut {
                lines.push((x.clone(), Rat::from_integer(0)));
            }
        }
        for iv in a.core() {
            for e in [iv.lo(), iv.hi()] {
                if let ExtRat::Fin(x) = e {
                    lines.push((x.clone(), Rat::from_integer(0)));
                }
            }
        }
        let mut best = *n0;
        for (i, (a1, b1)) in lines.iter().enumerate() {
            for (a2, b2) in &lines[i + 1..] {
                if b1 != b2 {
                    let cross = (a2 - a1) / (b1 - b2);
                    let c = cross.floor().to_integer();
                    if c >= 0 {
                        best = best.max(c as u64 + 1);
                    }
                }
            }
        }
        best
    }

    /// Least `n` with `a ⊆ B_n`.
    pub fn index_of(&self, a: &RealSet) -> Option<u64> {
        let lo = match self {
            BaseSchema::Affine { n0, .. } => *n0,
            _ => 0,
        };
        let hi = match self {
            BaseSchema::Affine { .. } => self.stable_index(a),
            BaseSchema::Grid => {
                let b = a.boundedness();
                if !b.finite
                    || a.core()
                        .iter()
                        .any(|iv| !iv.lo().is_finite() || !is_integer(iv.lo()))
                {
                    return None;
                }
                let m = [a.inf(), a.sup()]
                    .iter()
                    .filter_map(|e| match e {
                        ExtRat::Fin(x) => Some(x.abs().to_integer()),
                        _ => None,
                    })
                    .max()
                    .unwrap_or(0);
                m as u64
            }
            BaseSchema::Balls(d) => {
                if !d.is_bounded_set(a) {
                    return None;
                }
                let mut n = 1u64;
                while !a.is_subset(&self.element(n)) {
                    if n > 1 << 40 {
                        return None;
                    }
                    n *= 2;
                }
                n
            }
        };
        let hi = hi.max(lo);
        if !a.is_subset(&self.element(hi)) {
            return None;
        }
        let (mut l, mut h) = (lo, hi);
        while l < h {
            let mid = l + (h - l) / 2;
            if a.is_subset(&self.element(mid)) {
                h = mid;
            } else {
                l = mid + 1;
            }
        }
        Some(l)
    }
}

fn is_integer(e: &ExtRat) -> bool {
    matches!(e, ExtRat::Fin(x) if x.is_integer())
}

impl fmt::Display for BaseSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSchema::Affine { pieces, n0 } => {
                for (i, p) in pieces.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" u ")?;
                    }
                    let (l, r) = (
                        if p.lo_closed { '[' } else { '(' },
                        if p.hi_closed { ']' } else { ')' },
                    );
                    write!(f, "{l}{}, {}{r}", p.lo, p.hi)?;
                }
                write!(f, " for n >= {n0}")
            }
            BaseSchema::Grid => f.write_str("{-n..n}"),
            BaseSchema::Balls(d) => write!(f, "ball_{d}(0, n+1)"),
        }
    }
}
