//! Exhaustive-search oracle for essential finiteness, used to cross-check the
//! symbolic decision.

use std::fmt;

use gts_core::covers::{AccShape, FamilySpec};
use gts_core::rat::int;
use gts_core::{ExtRat, Interval, Rat, RealSet};

/// Default largest subfamily the oracle tries.
pub const DEFAULT_MAX_SUBFAMILY: usize = 8;

/// Subsets examined before the oracle gives up.
const COMBINATION_CAP: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refusal {
    WindowTooSmall,
    CapExceeded(String),
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refusal::WindowTooSmall => f.write_str("refused: window does not cover K ∩ ⋃F"),
            Refusal::CapExceeded(why) => write!(f, "refused: combinatorial cap exceeded ({why})"),
        }
    }
}

fn acc_point(start: &Rat, limit: &ExtRat, n: i64) -> Rat {
    match limit {
        // c_n = limit - (limit - start)/(n + 1)
        ExtRat::Fin(l) => l - (l - start) / int(n as i128 + 1),
        _ => start + int(n as i128),
    }
}

/// Members whose index lies in `[a, b]`, listed directly from the
/// presentation.
pub fn window_members(f: &FamilySpec, a: i64, b: i64) -> Vec<RealSet> {
    match f {
        FamilySpec::Finite(m) => m.clone(),
        FamilySpec::Periodic {
            seed,
            period,
            range,
        } => (a..=b)
            .filter(|k| range.contains(*k))
            .map(|k| seed.translate(&(period * int(k as i128))))
            .collect(),
        FamilySpec::Accumulating {
            start,
            limit,
            shape,
        } => (a.max(0)..=b)
            .map(|n| {
                let c = |k: i64| acc_point(start, limit, k);
                RealSet::interval(match shape {
                    AccShape::Rays => Interval::open(ExtRat::NegInf, ExtRat::Fin(c(n))),
                    AccShape::OpenTiles => Interval::open(ExtRat::Fin(c(n)), ExtRat::Fin(c(n + 2))),
                    AccShape::HalfOpenTiles => Interval::closed_open(c(n), ExtRat::Fin(c(n + 1))),
                })
            })
            .collect(),
        FamilySpec::Split { cut, left, right } => {
            let lw = RealSet::interval(Interval::open(ExtRat::NegInf, ExtRat::Fin(cut.clone())));
            let rw = RealSet::interval(Interval::closed_open(cut.clone(), ExtRat::PosInf));
            let mut out: Vec<RealSet> = window_members(left, a, b)
                .iter()
                .map(|m| m.intersect(&lw))
                .collect();
            out.extend(window_members(right, a, b).iter().map(|m| m.intersect(&rw)));
            out
        }
        FamilySpec::Restricted { base, window } => window_members(base, a, b)
            .iter()
            .map(|m| m.intersect(window))
            .collect(),
        FamilySpec::Union(fs) => fs.iter().flat_map(|g| window_members(g, a, b)).collect(),
    }
}

/// Whether some subfamily of at most `max` members of `F` truncated to index
/// window `[a, b]` covers `K ∩ ⋃F`, by trying every subfamily in order of size.
///
/// The window must already reach all of `K ∩ ⋃F`; otherwise the search says
/// nothing about `F` and the oracle refuses. It also refuses when no
/// subfamily within the size bound covers, since larger ones were not tried.
pub fn oracle_ess_finite(
    f: &FamilySpec,
    window: (i64, i64),
    k: &RealSet,
    max: usize,
) -> Result<bool, Refusal> {
    let target = k.intersect(&f.union_of());
    let mut members: Vec<RealSet> = window_members(f, window.0, window.1)
        .iter()
        .map(|m| m.intersect(k))
        .filter(|m| !m.is_empty())
        .collect();
    members.sort();
    members.dedup();
    let reach = members.iter().fold(RealSet::empty(), |acc, m| acc.union(m));
    if reach != target {
        return Err(Refusal::WindowTooSmall);
    }
    let mut tried = 0u64;
    for size in 0..=max.min(members.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            tried += 1;
            if tried > COMBINATION_CAP {
                return Err(Refusal::CapExceeded(format!(
                    "{COMBINATION_CAP} subfamilies of {} members tried",
                    members.len()
                )));
            }
            let cover = idx
                .iter()
                .fold(RealSet::empty(), |acc, &i| acc.union(&members[i]));
            if cover == target {
                return Ok(true);
            }
            let Some(pos) = (0..size).rev().find(|&i| idx[i] < members.len() - size + i) else {
                break;
            };
            idx[pos] += 1;
            for j in pos + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Err(Refusal::CapExceeded(format!(
        "no subfamily of at most {max} members covers"
    )))
}
