use std::fmt;

use num_traits::Zero;

use crate::covers::FamilySpec;
use crate::rat::{fmt_rat, int, Cut, Rat};
use crate::realset::{Interval, RealSet};
use crate::SetError;

/// Map of the line that is affine between consecutive breakpoints. Piece `i`
/// covers `[b_{i-1}, b_i)`, with the outer pieces unbounded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiecewiseAffineMap {
    breakpoints: Vec<Rat>,
    /// `(slope, intercept)`, one more than there are breakpoints.
    pieces: Vec<(Rat, Rat)>,
}

impl PiecewiseAffineMap {
    pub fn new(
        breakpoints: Vec<Rat>,
        pieces: Vec<(Rat, Rat)>,
    ) -> Result<PiecewiseAffineMap, SetError> {
        if pieces.len() != breakpoints.len() + 1 {
            return Err(SetError::Malformed(format!(
                "{} breakpoints need {} pieces, got {}",
                breakpoints.len(),
                breakpoints.len() + 1,
                pieces.len()
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SetError::Malformed(
                "breakpoints must be strictly ascending".into(),
            ));
        }
        Ok(PiecewiseAffineMap {
            breakpoints,
            pieces,
        })
    }

    pub fn affine(slope: Rat, intercept: Rat) -> PiecewiseAffineMap {
        PiecewiseAffineMap {
            breakpoints: Vec::new(),
            pieces: vec![(slope, intercept)],
        }
    }

    pub fn identity() -> PiecewiseAffineMap {
        PiecewiseAffineMap::affine(int(1), int(0))
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[(Rat, Rat)] {
        &self.pieces
    }

    fn domain(&self, i: usize) -> RealSet {
        let start = if i == 0 {
            Cut::neg_inf()
        } else {
            Cut::before(self.breakpoints[i - 1].clone())
        };
        let end = if i == self.breakpoints.len() {
            Cut::pos_inf()
        } else {
            Cut::before(self.breakpoints[i].clone())
        };
        RealSet::interval(Interval::from_cuts(start, end))
    }

    pub fn apply(&self, x: &Rat) -> Rat {
        let i = self.breakpoints.iter().take_while(|b| *b <= x).count();
        let (a, b) = &self.pieces[i];
        a * x + b
    }

    pub fn image(&self, s: &RealSet) -> RealSet {
        let mut out = RealSet::empty();
        for (i, (a, b)) in self.pieces.iter().enumerate() {
            let part = s.intersect(&self.domain(i));
            if part.is_empty() {
                continue;
            }
            let img = if a.is_zero() {
                RealSet::point(b.clone())
            } else {
                part.affine_image(a, b)
            };
            out = out.union(&img);
        }
        out
    }

    pub fn preimage(&self, s: &RealSet) -> RealSet {
        let mut out = RealSet::empty();
        for (i, (a, b)) in self.pieces.iter().enumerate() {
            let dom = self.domain(i);
            let pre = if a.is_zero() {
                if s.contains_point(b) {
                    dom
                } else {
                    RealSet::empty()
                }
            } else {
                s.affine_preimage(a, b).intersect(&dom)
            };
            out = out.union(&pre);
        }
        out
    }

    /// `{f^-1(U) : U in F}`. Infinite families are only representable under a
    /// single increasing affine piece.
    pub fn preimage_family(&self, f: &FamilySpec) -> Result<FamilySpec, SetError> {
        if let Some(g) = f.map_finite(&|u| self.preimage(u)) {
            return Ok(g);
        }
        match self.pieces.as_slice() {
            [(a, b)] if !a.is_zero() => f.affine_preimage(a, b),
            _ => Err(SetError::Unsupported(format!(
                "preimage of the infinite family {f} under {self}"
            ))),
        }
    }
}

impl fmt::Display for PiecewiseAffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, " | {} | ", fmt_rat(&self.breakpoints[i - 1]))?;
            }
            write!(f, "{}x+{}", fmt_rat(a), fmt_rat(b))?;
        }
        Ok(())
    }
}
