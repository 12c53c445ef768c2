//! Named real lines: the standard and Sorgenfrey variants and the three
//! upper-topology lines, with their opens, admissible families and the
//! bornologies attached to them.

use std::fmt;
use std::str::FromStr;

use crate::covers::{ef_member, EfVerdict, FamilySpec};
use crate::rat::{int, ExtRat};
use crate::realset::{Behavior, Interval, RealSet, TopologyKind};
use crate::SetError;

mod bornology;
mod probes;
#[cfg(test)]
mod tests;

pub use bornology::{AffineEnd, AffinePiece, BaseSchema, Bornology};
pub use probes::{probe_battery, probe_corpus, small_open_cover, smallness_refuter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineFamily {
    Standard,
    Sorgenfrey,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Ut,
    Om,
    St,
    Lom,
    Lst,
    Slom,
    LPlusOm,
    LMinusOm,
    LPlusSt,
    LMinusSt,
    SlPlusOm,
    SlMinusOm,
    Rom,
}

impl Variant {
    pub const ALL: [Variant; 13] = [
        Variant::Ut,
        Variant::Om,
        Variant::St,
        Variant::Lom,
        Variant::Lst,
        Variant::Slom,
        Variant::LPlusOm,
        Variant::LMinusOm,
        Variant::LPlusSt,
        Variant::LMinusSt,
        Variant::SlPlusOm,
        Variant::SlMinusOm,
        Variant::Rom,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Ut => "ut",
            Variant::Om => "om",
            Variant::St => "st",
            Variant::Lom => "lom",
            Variant::Lst => "lst",
            Variant::Slom => "slom",
            Variant::LPlusOm => "l_plus_om",
            Variant::LMinusOm => "l_minus_om",
            Variant::LPlusSt => "l_plus_st",
            Variant::LMinusSt => "l_minus_st",
            Variant::SlPlusOm => "sl_plus_om",
            Variant::SlMinusOm => "sl_minus_om",
            Variant::Rom => "rom",
        }
    }

    /// Members are arbitrary opens of the topology rather than unions of
    /// basic intervals.
    fn topological_members(self) -> bool {
        matches!(
            self,
            Variant::Ut | Variant::St | Variant::Lst | Variant::LPlusSt | Variant::LMinusSt
        )
    }
}

/// Which half-line has to be handled finitely.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Negative,
    Positive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyRule {
    All,
    EssFinite,
    Local,
    LocalAnd(Side),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineId {
    Line(LineFamily, Variant),
    /// Upper opens with `EF(u, UB)`.
    Uu,
    /// Upper opens with `EF(u, LB)`.
    Ul,
    /// Upper opens with `EF(u, FB)`, i.e. every family of upper opens.
    Uf,
}

impl LineId {
    pub fn standard(v: Variant) -> LineId {
        LineId::Line(LineFamily::Standard, v)
    }

    pub fn sorgenfrey(v: Variant) -> LineId {
        LineId::Line(LineFamily::Sorgenfrey, v)
    }

    /// The 29 corpus lines.
    pub fn all() -> Vec<LineId> {
        let mut out = Vec::new();
        for fam in [LineFamily::Standard, LineFamily::Sorgenfrey] {
            out.extend(Variant::ALL.iter().map(|v| LineId::Line(fam, *v)));
        }
        out.extend([LineId::Uu, LineId::Ul, LineId::Uf]);
        out
    }

    pub fn name(self) -> String {
        match self {
            LineId::Line(LineFamily::Standard, v) => format!("standard/{}", v.as_str()),
            LineId::Line(LineFamily::Sorgenfrey, v) => format!("sorgenfrey/{}", v.as_str()),
            LineId::Uu => "uu".into(),
            LineId::Ul => "ul".into(),
            LineId::Uf => "uf".into(),
        }
    }

    /// Topology generated by the opens.
    pub fn topology(self) -> TopologyKind {
        match self {
            LineId::Line(LineFamily::Standard, _) => TopologyKind::Nat,
            LineId::Line(LineFamily::Sorgenfrey, _) => TopologyKind::SorgR,
            _ => TopologyKind::Upper,
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(self, LineId::Uu | LineId::Ul | LineId::Uf)
    }

    /// Fixed by partial topologization.
    pub fn is_partially_topological(self) -> bool {
        match self {
            LineId::Line(_, v) => v.topological_members(),
            _ => true,
        }
    }

    fn family_rule(self) -> FamilyRule {
        match self {
            LineId::Line(_, v) => match v {
                Variant::Ut => FamilyRule::All,
                Variant::Om
                | Variant::St
                | Variant::Slom
                | Variant::Rom
                | Variant::SlPlusOm
                | Variant::SlMinusOm => FamilyRule::EssFinite,
                Variant::Lom | Variant::Lst => FamilyRule::Local,
                Variant::LPlusOm | Variant::LPlusSt => FamilyRule::LocalAnd(Side::Negative),
                Variant::LMinusOm | Variant::LMinusSt => FamilyRule::LocalAnd(Side::Positive),
            },
            _ => FamilyRule::All,
        }
    }
}

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for LineId {
    type Err = SetError;

    fn from_str(s: &str) -> Result<LineId, SetError> {
        let s = s.trim();
        let (fam, var) = match s.split_once('/') {
            Some((f, v)) => (Some(f), v),
            None => (None, s),
        };
        match var {
            "uu" => return Ok(LineId::Uu),
            "ul" => return Ok(LineId::Ul),
            "uf" => return Ok(LineId::Uf),
            _ => {}
        }
        let family = match fam {
            Some("standard") | None => LineFamily::Standard,
            Some("sorgenfrey") => LineFamily::Sorgenfrey,
            Some(other) => {
                return Err(SetError::Malformed(format!(
                    "unknown line family `{other}`"
                )))
            }
        };
        Variant::ALL
            .iter()
            .find(|v| v.as_str() == var)
            .map(|v| LineId::Line(family, *v))
            .ok_or_else(|| SetError::Malformed(format!("unknown line `{s}`")))
    }
}

fn half_line(side: Side) -> RealSet {
    match side {
        Side::Negative => RealSet::interval(Interval::open(ExtRat::NegInf, ExtRat::Fin(int(0)))),
        Side::Positive => RealSet::interval(Interval::open(ExtRat::Fin(int(0)), ExtRat::PosInf)),
    }
}

/// Locally finite union of basic intervals of the topology. For Sorgenfrey
/// lines these are exactly the sets open and closed in the topology, for
/// standard lines every open set qualifies.
fn basic_union(kind: TopologyKind, u: &RealSet) -> bool {
    match kind {
        TopologyKind::SorgR => u.is_open(kind) && u.complement().is_open(kind),
        _ => u.is_open(kind),
    }
}

/// Whether `u` is open in the line.
pub fn op_member(line: LineId, u: &RealSet) -> bool {
    let kind = line.topology();
    let LineId::Line(_, v) = line else {
        return u.is_open(TopologyKind::Upper);
    };
    if v.topological_members() {
        return u.is_open(kind);
    }
    if !basic_union(kind, u) {
        return false;
    }
    // endpoints are rational in every RealSet, so rom shares om's opens
    match v {
        Variant::Om | Variant::Rom => !u.has_tails(),
        Variant::LPlusOm | Variant::SlPlusOm => matches!(u.left_behavior(), Behavior::Const(_)),
        Variant::LMinusOm | Variant::SlMinusOm => matches!(u.right_behavior(), Behavior::Const(_)),
        _ => true,
    }
}

/// Base index bound for the EF tests of the upper lines.
fn upper_reach(f: &FamilySpec) -> u32 {
    let r = f.reach().ceil().to_integer();
    (r.clamp(0, 1 << 20) as u32 + 2).max(8)
}

/// Whether `f` is an admissible family of the line.
pub fn cov_member(line: LineId, f: &FamilySpec) -> bool {
    let upper_open = |s: &RealSet| s.is_open(TopologyKind::Upper);
    match line {
        LineId::Uu => {
            let base = |n: u32| {
                RealSet::interval(Interval::open(ExtRat::NegInf, ExtRat::Fin(int(n as i128))))
            };
            return ef_member(f, &upper_open, &base, upper_reach(f)) == EfVerdict::Member;
        }
        LineId::Ul => {
            let base = |n: u32| {
                RealSet::interval(Interval::open(ExtRat::Fin(-int(n as i128)), ExtRat::PosInf))
            };
            return ef_member(f, &upper_open, &base, upper_reach(f)) == EfVerdict::Member;
        }
        // every family is essentially finite on a finite set
        LineId::Uf => return f.all_members(&upper_open),
        LineId::Line(..) => {}
    }
    if !f.all_members(&|m| op_member(line, m)) {
        return false;
    }
    match line.family_rule() {
        FamilyRule::All => true,
        FamilyRule::EssFinite => f.ess_finite().essentially_finite,
        FamilyRule::Local => f.locally_ess_finite(),
        FamilyRule::LocalAnd(side) => {
            f.locally_ess_finite() && f.ess_finite_on(&half_line(side)).essentially_finite
        }
    }
}

/// Small sets: every admissible family is essentially finite on them.
pub fn sm_class(line: LineId) -> Bornology {
    match line {
        LineId::Line(_, v) => match v {
            Variant::Ut => Bornology::FB,
            Variant::Om
            | Variant::St
            | Variant::Slom
            | Variant::Rom
            | Variant::SlPlusOm
            | Variant::SlMinusOm => Bornology::All,
            Variant::Lom | Variant::Lst => Bornology::NatBounded,
            Variant::LPlusOm | Variant::LPlusSt => Bornology::UB,
            Variant::LMinusOm | Variant::LMinusSt => Bornology::LB,
        },
        LineId::Uu => Bornology::UB,
        LineId::Ul => Bornology::All,
        LineId::Uf => Bornology::ReverseWellOrdered,
    }
}

/// Subsets of sets compact in the topology. Compact sets of the Sorgenfrey
/// line are countable, and among RealSets only finite sets are.
pub fn cb_class(line: LineId) -> Bornology {
    match line {
        LineId::Line(LineFamily::Standard, _) => Bornology::NatBounded,
        LineId::Line(LineFamily::Sorgenfrey, _) => Bornology::FB,
        _ => Bornology::UB,
    }
}

/// Admissibly compact bornology.
pub fn acb_class(line: LineId) -> Bornology {
    match line {
        LineId::Line(fam, Variant::Ut) => cb_class(LineId::Line(fam, Variant::Ut)),
        LineId::Uf => Bornology::UB,
        other => sm_class(other),
    }
}

pub fn sm_member(line: LineId, a: &RealSet) -> bool {
    sm_class(line).contains(a)
}

pub fn cb_member(line: LineId, a: &RealSet) -> bool {
    cb_class(line).contains(a)
}

pub fn acb_member(line: LineId, a: &RealSet) -> bool {
    acb_class(line).contains(a)
}

/// Partial topologization. The Sorgenfrey rom line maps to st over the
/// topology generated by rational half-open intervals, which this
/// representation cannot tell apart from st; see [`pt_is_exact`].
pub fn pt_of(line: LineId) -> LineId {
    match line {
        LineId::Line(fam, v) => LineId::Line(
            fam,
            match v {
                Variant::Om
                | Variant::Slom
                | Variant::Rom
                | Variant::SlPlusOm
                | Variant::SlMinusOm => Variant::St,
                Variant::Lom => Variant::Lst,
                Variant::LPlusOm => Variant::LPlusSt,
                Variant::LMinusOm => Variant::LMinusSt,
                other => other,
            },
        ),
        other => other,
    }
}

/// False where `pt_of` only names the nearest corpus line.
pub fn pt_is_exact(line: LineId) -> bool {
    line != LineId::sorgenfrey(Variant::Rom)
}
