//! Exact rationals, the extended rational line, and interval cuts.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational number used for every endpoint, period, radius and sample point.
pub type Rat = Ratio<i128>;

/// Shorthand for `n / d`.
pub fn rat(n: i128, d: i128) -> Rat {
    Rat::new(n, d)
}

pub fn int(n: i128) -> Rat {
    Rat::from_integer(n)
}

/// Least positive common multiple of two positive rationals.
pub fn lcm(a: &Rat, b: &Rat) -> Rat {
    let num = a.numer().lcm(b.numer());
    let den = a.denom().gcd(b.denom());
    Rat::new(num, den)
}

/// `floor(x / p)` as an integer.
pub fn floor_div(x: &Rat, p: &Rat) -> i128 {
    (x / p).floor().to_integer()
}

pub fn ceil_div(x: &Rat, p: &Rat) -> i128 {
    (x / p).ceil().to_integer()
}

/// Parses `n`, `-n` or `n/d`; the result is always reduced.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = i128::from_str(n).ok()?;
    let d = i128::from_str(d).ok()?;
    if d == 0 {
        return None;
    }
    Some(Rat::new(n, d))
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A rational number or one of the two infinities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtRat {
    NegInf,
    Fin(Rat),
    PosInf,
}

impl ExtRat {
    pub fn fin(&self) -> Option<&Rat> {
        match self {
            ExtRat::Fin(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Fin(_))
    }

    pub fn add(&self, r: &Rat) -> ExtRat {
        match self {
            ExtRat::Fin(x) => ExtRat::Fin(x + r),
            other => other.clone(),
        }
    }

    /// Multiplication by a non-zero rational; negative factors swap the infinities.
    pub fn scale(&self, r: &Rat) -> ExtRat {
        debug_assert!(!r.is_zero());
        match (self, r.is_negative()) {
            (ExtRat::Fin(x), _) => ExtRat::Fin(x * r),
            (ExtRat::NegInf, false) | (ExtRat::PosInf, true) => ExtRat::NegInf,
            _ => ExtRat::PosInf,
        }
    }

    pub fn neg(&self) -> ExtRat {
        self.scale(&-Rat::one())
    }
}

impl From<Rat> for ExtRat {
    fn from(r: Rat) -> Self {
        ExtRat::Fin(r)
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::NegInf => f.write_str("-inf"),
            ExtRat::PosInf => f.write_str("+inf"),
            ExtRat::Fin(r) => f.write_str(&fmt_rat(r)),
        }
    }
}

/// A position on the line with every rational doubled into `x-` and `x+`.
///
/// An interval is the half-open range `[start, end)` of cuts; a closed lower
/// endpoint `a` starts at `a-`, an open one at `a+`; a closed upper endpoint `b`
/// ends at `b+`, an open one at `b-`. Two intervals touch exactly when one ends
/// where the other starts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cut {
    pub at: ExtRat,
    pub after: bool,
}

impl Cut {
    pub fn before(x: Rat) -> Cut {
        Cut {
            at: ExtRat::Fin(x),
            after: false,
        }
    }

    pub fn after(x: Rat) -> Cut {
        Cut {
            at: ExtRat::Fin(x),
            after: true,
        }
    }

    pub fn neg_inf() -> Cut {
        Cut {
            at: ExtRat::NegInf,
            after: true,
        }
    }

    pub fn pos_inf() -> Cut {
        Cut {
            at: ExtRat::PosInf,
            after: false,
        }
    }

    pub fn shift(&self, t: &Rat) -> Cut {
        Cut {
            at: self.at.add(t),
            after: self.after,
        }
    }

    /// Image under `x -> a*x` for `a > 0`.
    pub fn scale_pos(&self, a: &Rat) -> Cut {
        Cut {
            at: self.at.scale(a),
            after: self.after,
        }
    }

    /// Image under `x -> -x` (the side flips).
    pub fn reflect(&self) -> Cut {
        let at = self.at.neg();
        let after = match at {
            ExtRat::NegInf => true,
            ExtRat::PosInf => false,
            _ => !self.after,
        };
        Cut { at, after }
    }
}

impl PartialOrd for Cut {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cut {
    fn cmp(&self, other: &Self) -> Ordering {
        self.at.cmp(&other.at).then(self.after.cmp(&other.after))
    }
}
