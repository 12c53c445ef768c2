use std::fmt;

use super::{chain_search, proper_check, ChainReport, PiecewiseAffineMap, ProperVerdict};
use crate::covers::FamilySpec;
use crate::lines::{cov_member, op_member, Bornology, LineId};
use crate::qmetric::QuasiMetric;
use crate::rat::int;
use crate::realset::RealSet;
use crate::SetError;

/// Radii and indices used for the symbolic base comparisons.
const BASE_PROBE: u64 = 16;
const CHAIN_BOUND: u64 = 64;

/// Parts of a metrizability report, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    /// The metric induces the line's topology.
    Topology,
    /// Bounded sets of the metric are the bornology.
    Bornology,
    /// The bornology is proper for the line topology and the conjugate
    /// metric's topology.
    Properness,
    /// `[B_n]^delta ⊆ B_{n+1}` with a radius per index.
    Chain,
}

impl Part {
    pub fn as_str(self) -> &'static str {
        match self {
            Part::Topology => "topology",
            Part::Bornology => "bornology",
            Part::Properness => "properness",
            Part::Chain => "chain",
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetrizabilityReport {
    pub line: LineId,
    pub bornology: Bornology,
    pub metric: QuasiMetric,
    /// Failing parts with a short reason, in check order.
    pub failures: Vec<(Part, String)>,
    pub chain: Option<ChainReport>,
}

impl MetrizabilityReport {
    pub fn consistent(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fails(&self, part: Part) -> bool {
        self.failures.iter().any(|(p, _)| *p == part)
    }
}

impl fmt::Display for MetrizabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}: ", self.line, self.bornology, self.metric)?;
        if self.consistent() {
            return f.write_str("CONSISTENT");
        }
        f.write_str("INCONSISTENT")?;
        for (p, why) in &self.failures {
            write!(f, " [{p}: {why}]")?;
        }
        Ok(())
    }
}

/// Whether `d` can metrize the line with bornology `b`: matching topology,
/// bounded sets agreeing with `b` on the probes and on base elements and
/// balls, properness, and the chain condition.
pub fn metrizable_verdict(
    line: LineId,
    b: &Bornology,
    d: &QuasiMetric,
    probes: &[RealSet],
) -> Result<MetrizabilityReport, SetError> {
    metrizable_verdict_upto(line, b, d, probes, CHAIN_BOUND)
}

/// [`metrizable_verdict`] with the chain condition checked up to `chain_bound`.
pub fn metrizable_verdict_upto(
    line: LineId,
    b: &Bornology,
    d: &QuasiMetric,
    probes: &[RealSet],
    chain_bound: u64,
) -> Result<MetrizabilityReport, SetError> {
    let mut failures = Vec::new();
    if d.topology_of() != line.topology() {
        failures.push((
            Part::Topology,
            format!(
                "{} induces {}, line has {}",
                d,
                d.topology_of(),
                line.topology()
            ),
        ));
    }
    if let Some(a) = probes.iter().find(|a| b.contains(a) != d.is_bounded_set(a)) {
        let (inb, ind) = (b.contains(a), d.is_bounded_set(a));
        failures.push((Part::Bornology, format!("{a}: member={inb} bounded={ind}")));
    }
    let schema = b.base();
    match &schema {
        Err(e) => failures.push((Part::Bornology, e.to_string())),
        Ok(s) if !failures.iter().any(|(p, _)| *p == Part::Bornology) => {
            if let Some(n) = (0..=BASE_PROBE).find(|n| !d.is_bounded_set(&s.element(*n))) {
                failures.push((
                    Part::Bornology,
                    format!("B_{n} = {} is unbounded", s.element(n)),
                ));
            } else {
                for r in 1..=BASE_PROBE {
                    let ball = d.ball(&int(0), &int(r as i128))?;
                    if s.index_of(&ball).is_none() {
                        failures.push((
                            Part::Bornology,
                            format!("ball {ball} lies in no base element"),
                        ));
                        break;
                    }
                }
            }
        }
        Ok(_) => {}
    }
    match proper_check(b, line.topology(), d.conjugate().topology_of(), BASE_PROBE) {
        Ok(ProperVerdict::Proper) => {}
        Ok(ProperVerdict::Improper { index, closure }) => failures.push((
            Part::Properness,
            format!("closure {closure} of B_{index} is in no interior"),
        )),
        Err(e) => failures.push((Part::Properness, e.to_string())),
    }
    let mut chain = None;
    if let Ok(s) = &schema {
        let r = chain_search(d, s, chain_bound)?;
        if !r.passed() {
            failures.push((Part::Chain, r.to_string()));
        }
        chain = Some(r);
    }
    Ok(MetrizabilityReport {
        line,
        bornology: b.clone(),
        metric: *d,
        failures,
        chain,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrictContVerdict {
    /// The preimage of this admissible family is not admissible in the source.
    Refuted {
        family: FamilySpec,
        preimage: FamilySpec,
    },
    Unrefuted {
        checked: usize,
        skipped: usize,
    },
    /// A preimage family has no finite presentation.
    Unrepresentable {
        family: FamilySpec,
        reason: String,
    },
}

/// Looks for a family admissible in `dst` whose preimage is not admissible in
/// `src`. Families not admissible in `dst` are skipped.
pub fn strict_cont_refute(
    f: &PiecewiseAffineMap,
    src: LineId,
    dst: LineId,
    battery: &[FamilySpec],
) -> StrictContVerdict {
    let (mut checked, mut skipped) = (0, 0);
    for fam in battery {
        if !cov_member(dst, fam) {
            skipped += 1;
            continue;
        }
        let pre = match f.preimage_family(fam) {
            Ok(p) => p,
            Err(e) => {
                return StrictContVerdict::Unrepresentable {
                    family: fam.clone(),
                    reason: e.to_string(),
                }
            }
        };
        checked += 1;
        if !cov_member(src, &pre) {
            return StrictContVerdict::Refuted {
                family: fam.clone(),
                preimage: pre,
            };
        }
    }
    StrictContVerdict::Unrefuted { checked, skipped }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    /// 1 to 5, after the gts axioms.
    pub axiom: u8,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// Instances checked per axiom.
    pub checked: [usize; 5],
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, axiom: u8, ok: bool, detail: impl FnOnce() -> String) {
        self.checked[axiom as usize - 1] += 1;
        if !ok {
            self.violations.push(AxiomViolation {
                axiom,
                detail: detail(),
            });
        }
    }
}

/// Subsets of `items` of size at most `k`.
fn small_subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for size in 1..=k.min(items.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&i| items[i].clone()).collect());
            let Some(pos) = (0..size).rev().find(|&i| idx[i] < items.len() - size + i) else {
                break;
            };
            idx[pos] += 1;
            for j in pos + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

/// Instance-level check of the five gts axioms on sampled families and sets.
/// Subfamilies for the finiteness axiom have at most `depth` members.
pub fn axiom_probe(
    line: LineId,
    families: &[FamilySpec],
    sets: &[RealSet],
    depth: usize,
) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let opens: Vec<RealSet> = sets
        .iter()
        .filter(|s| op_member(line, s))
        .cloned()
        .collect();
    let admissible: Vec<&FamilySpec> = families.iter().filter(|f| cov_member(line, f)).collect();

    rep.check(
        1,
        op_member(line, &RealSet::empty()) && op_member(line, &RealSet::reals()),
        || "empty set or line not open".into(),
    );
    for sub in small_subsets(&opens, depth) {
        let fam = FamilySpec::finite(sub.clone());
        rep.check(1, cov_member(line, &fam), || {
            format!("finite family {fam} not admissible")
        });
        if let [u, v] = sub.as_slice() {
            rep.check(
                1,
                op_member(line, &u.union(v)) && op_member(line, &u.intersect(v)),
                || format!("union or intersection of {u} and {v} not open"),
            );
        }
    }
    for f in &admissible {
        for v in &opens {
            let r = f.restrict(v);
            rep.check(2, cov_member(line, &r), || {
                format!("{f} restricted to {v} not admissible")
            });
        }
    }
    for f in admissible.iter().filter(|f| f.is_finite()) {
        let members = f.finite_members().unwrap_or_default();
        for g in &admissible {
            let cover = g.union_of();
            if !members.iter().all(|u| u.is_subset(&cover)) {
                continue;
            }
            let composed = FamilySpec::Union(members.iter().map(|u| g.restrict(u)).collect());
            rep.check(3, cov_member(line, &composed), || {
                format!("{g} refining {f} not admissible")
            });
        }
        let u = f.union_of();
        for w in &opens {
            if w.is_subset(&u) && members.iter().any(|m| m.is_subset(w)) {
                let mut more = members.clone();
                more.push(w.clone());
                let fam = FamilySpec::finite(more);
                rep.check(4, cov_member(line, &fam), || {
                    format!("{f} with {w} added not admissible")
                });
            }
        }
        if op_member(line, &u) {
            let fam = FamilySpec::finite(vec![u.clone()]);
            rep.check(4, cov_member(line, &fam), || {
                format!("{{{u}}} not admissible")
            });
        }
        for s in sets {
            if s.is_subset(&u) && members.iter().all(|m| op_member(line, &s.intersect(m))) {
                rep.check(5, op_member(line, s), || {
                    format!("{s} glued along {f} not open")
                });
            }
        }
    }
    rep
}

/// Membership in the initial bornology `{A : f_i(A) in B_i for all i}`.
pub fn initial_bornology_member(
    maps: &[PiecewiseAffineMap],
    borns: &[Bornology],
    a: &RealSet,
) -> Result<bool, SetError> {
    if maps.len() != borns.len() {
        return Err(SetError::Malformed(format!(
            "{} maps but {} bornologies",
            maps.len(),
            borns.len()
        )));
    }
    Ok(maps.iter().zip(borns).all(|(f, b)| b.contains(&f.image(a))))
}
