//! Criteria used to test metrizability of lines: properness, the base
//! condition, chain conditions on bases and the verdicts built from them.

use std::fmt;

use num_traits::{One, Signed};

use crate::lines::{BaseSchema, Bornology};
use crate::qmetric::QuasiMetric;
use crate::rat::{fmt_rat, int, Rat};
use crate::realset::{RealSet, TopologyKind};
use crate::SetError;

mod maps;
mod verdict;

pub use maps::PiecewiseAffineMap;
pub use verdict::{
    axiom_probe, initial_bornology_member, metrizable_verdict, metrizable_verdict_upto,
    strict_cont_refute, AxiomReport, AxiomViolation, MetrizabilityReport, Part, StrictContVerdict,
};

/// Largest index any check walks to.
pub const MAX_INDEX: u64 = 4096;

/// How far past `n` a properness partner is searched for.
const PROPER_MARGIN: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProperVerdict {
    Proper,
    /// `cl(B_n)` is not inside the interior of any of the searched `B_m`.
    Improper {
        index: u64,
        closure: RealSet,
    },
}

/// `(t1, t2)`-properness on base elements `B_0..B_N`: each `cl_t2(B_n)` lies in
/// `int_t1(B_m)` for some `m <= N + margin`. Base elements suffice since
/// closure and interior are monotone and every member sits in some `B_n`.
pub fn proper_check(
    b: &Bornology,
    t1: TopologyKind,
    t2: TopologyKind,
    n: u64,
) -> Result<ProperVerdict, SetError> {
    let schema = b.base()?;
    let n = n.min(MAX_INDEX);
    let interiors: Vec<RealSet> = (0..=n + PROPER_MARGIN)
        .map(|m| schema.element(m).interior(t1))
        .collect();
    for i in 0..=n {
        let cl = schema.element(i).closure(t2);
        if !interiors.iter().any(|int| cl.is_subset(int)) {
            return Ok(ProperVerdict::Improper {
                index: i,
                closure: cl,
            });
        }
    }
    Ok(ProperVerdict::Proper)
}

/// Whether the `t`-open members of `b` form a base for it, on base elements
/// up to index 16.
pub fn base_check(b: &Bornology, t: TopologyKind) -> Result<bool, SetError> {
    Ok(proper_check(b, t, TopologyKind::Discrete, 16)? == ProperVerdict::Proper)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainVerdict {
    /// Every index up to the bound passed; `proved_all_n` when the check is
    /// independent of the index.
    Pass {
        proved_all_n: bool,
    },
    FailAt {
        n: u64,
        missing: RealSet,
    },
    /// The requested bound exceeded [`MAX_INDEX`]; indices up to it passed.
    Truncated(u64),
}

/// `[B_n]^delta ⊆ B_{n+1}` as checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub n: u64,
    pub delta: Rat,
    pub nbhd: RealSet,
    pub next: RealSet,
}

impl Certificate {
    pub fn recheck(&self) -> bool {
        self.nbhd.is_subset(&self.next)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub verdict: ChainVerdict,
    /// The single radius used, if one radius served every index.
    pub delta_used: Option<Rat>,
    pub certificates: Vec<Certificate>,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        !matches!(self.verdict, ChainVerdict::FailAt { .. })
    }
}

impl fmt::Display for ChainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            ChainVerdict::Pass { proved_all_n: true } => f.write_str("pass(all n)")?,
            ChainVerdict::Pass {
                proved_all_n: false,
            } => write!(f, "pass(n<{})", self.certificates.len())?,
            ChainVerdict::FailAt { n, missing } => write!(f, "fail_at({n}, missing {missing})")?,
            ChainVerdict::Truncated(n) => write!(f, "truncated({n})")?,
        }
        if let Some(d) = &self.delta_used {
            write!(f, " delta={}", fmt_rat(d))?;
        }
        Ok(())
    }
}

fn first_index(schema: &BaseSchema) -> u64 {
    match schema {
        BaseSchema::Affine { n0, .. } => *n0,
        _ => 0,
    }
}

/// One inclusion `[B_n]^delta ⊆ B_{n+1}`.
fn step(
    d: &QuasiMetric,
    schema: &BaseSchema,
    n: u64,
    delta: &Rat,
) -> Result<Certificate, SetError> {
    let b = schema.element(n);
    let nbhd = d.nbhd(&b, delta).map_err(|e| {
        SetError::Unsupported(format!("neighbourhood of B_{n} = {b} under {d}: {e}"))
    })?;
    Ok(Certificate {
        n,
        delta: delta.clone(),
        nbhd,
        next: schema.element(n + 1),
    })
}

/// For a translation-invariant metric the neighbourhood of an affine piece
/// moves its ends by constants, so each piece's margin against the next
/// index does not depend on `n`. Checking every piece at the first index then
/// settles all indices.
fn index_uniform(d: &QuasiMetric, schema: &BaseSchema, delta: &Rat) -> bool {
    let BaseSchema::Affine { pieces, n0 } = schema else {
        return false;
    };
    if !d.is_translation_invariant() {
        return false;
    }
    pieces.iter().all(|p| {
        let single = BaseSchema::Affine {
            pieces: vec![p.clone()],
            n0: *n0,
        };
        let here = single.element(*n0);
        !here.is_empty()
            && d.nbhd(&here, delta)
                .is_ok_and(|nb| nb.is_subset(&single.element(*n0 + 1)))
    })
}

/// `[B_n]^delta ⊆ B_{n+1}` for `n` from the schema start up to `n_max`.
pub fn chain_check(
    d: &QuasiMetric,
    schema: &BaseSchema,
    delta: &Rat,
    n_max: u64,
) -> Result<ChainReport, SetError> {
    if !delta.is_positive() {
        return Err(SetError::Malformed("chain radius must be positive".into()));
    }
    let top = n_max.min(MAX_INDEX);
    let mut certificates = Vec::new();
    for n in first_index(schema)..top {
        let c = step(d, schema, n, delta)?;
        if !c.recheck() {
            let missing = c.nbhd.difference(&c.next);
            return Ok(ChainReport {
                verdict: ChainVerdict::FailAt { n, missing },
                delta_used: Some(delta.clone()),
                certificates,
            });
        }
        certificates.push(c);
    }
    let verdict = if n_max > MAX_INDEX {
        ChainVerdict::Truncated(MAX_INDEX)
    } else {
        ChainVerdict::Pass {
            proved_all_n: index_uniform(d, schema, delta),
        }
    };
    Ok(ChainReport {
        verdict,
        delta_used: Some(delta.clone()),
        certificates,
    })
}

fn dyadic(k: u32) -> Rat {
    Rat::one() / int(1i128 << k)
}

/// Per-index search over `delta = 2^-k`, `k = 0..=20`.
pub fn chain_search(
    d: &QuasiMetric,
    schema: &BaseSchema,
    n_max: u64,
) -> Result<ChainReport, SetError> {
    let top = n_max.min(MAX_INDEX);
    let mut certificates = Vec::new();
    for n in first_index(schema)..top {
        let mut found = None;
        let mut last = None;
        for k in 0..=20 {
            let c = step(d, schema, n, &dyadic(k))?;
            if c.recheck() {
                found = Some(c);
                break;
            }
            last = Some(c);
        }
        match found {
            Some(c) => certificates.push(c),
            None => {
                let c = last.expect("at least one radius tried");
                return Ok(ChainReport {
                    verdict: ChainVerdict::FailAt {
                        n,
                        missing: c.nbhd.difference(&c.next),
                    },
                    delta_used: None,
                    certificates,
                });
            }
        }
    }
    let verdict = if n_max > MAX_INDEX {
        ChainVerdict::Truncated(MAX_INDEX)
    } else {
        ChainVerdict::Pass {
            proved_all_n: false,
        }
    };
    Ok(ChainReport {
        verdict,
        delta_used: None,
        certificates,
    })
}

/// One radius for every index: the largest `2^-k`, `k = 1..=12`, that passes.
/// On failure the report for the smallest radius is returned.
pub fn uniform_chain_check(
    d: &QuasiMetric,
    schema: &BaseSchema,
    n_max: u64,
) -> Result<ChainReport, SetError> {
    let mut last = None;
    for k in 1..=12 {
        let r = chain_check(d, schema, &dyadic(k), n_max)?;
        if r.passed() {
            return Ok(r);
        }
        last = Some(r);
    }
    Ok(last.expect("at least one radius tried"))
}
