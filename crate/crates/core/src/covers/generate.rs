//! Bounded generation of the least generalized topology containing a finite
//! collection of families.

use std::collections::BTreeSet;

use super::FamilySpec;
use crate::realset::RealSet;
use crate::SetError;

pub const DEFAULT_DEPTH_CAP: usize = 8;

/// Growth limits per collection; hitting one marks the state as truncated.
const MAX_OPENS: usize = 2048;
const MAX_FAMILIES: usize = 4096;
const MAX_CHOICES: usize = 64;

/// One closure rule, after the five gts axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlusRule {
    /// Finite unions and intersections of opens are open, finite families of
    /// opens are admissible.
    Finiteness,
    /// Intersecting an admissible family with an open stays admissible.
    Stability,
    /// Refining every member by an admissible family stays admissible.
    Transitivity,
    /// Coarsenings of admissible families with the same union are admissible.
    Saturation,
    /// A set whose traces on an admissible family are open is open.
    Regularity,
}

impl PlusRule {
    pub const ALL: [PlusRule; 5] = [
        PlusRule::Finiteness,
        PlusRule::Stability,
        PlusRule::Transitivity,
        PlusRule::Saturation,
        PlusRule::Regularity,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenOutcome {
    Found { depth: usize },
    NotFoundWithinDepth(usize),
}

/// Opens and admissible families reached so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenState {
    pub carrier: RealSet,
    pub opens: BTreeSet<RealSet>,
    /// Explicit finite families, each sorted without duplicates.
    pub families: BTreeSet<Vec<RealSet>>,
    /// Every finite family drawn from these sets is admissible.
    pub finite_from: BTreeSet<RealSet>,
    /// Admissible infinite families, kept as given.
    pub infinite: Vec<FamilySpec>,
    pub truncated: bool,
}

fn norm(mut v: Vec<RealSet>) -> Vec<RealSet> {
    v.sort();
    v.dedup();
    v
}

fn union_all(v: &[RealSet]) -> RealSet {
    v.iter().fold(RealSet::empty(), |acc, s| acc.union(s))
}

impl GenState {
    pub fn new(psi: &[FamilySpec], carrier: &RealSet) -> GenState {
        let mut st = GenState {
            carrier: carrier.clone(),
            opens: BTreeSet::new(),
            families: BTreeSet::new(),
            finite_from: BTreeSet::new(),
            infinite: Vec::new(),
            truncated: false,
        };
        for f in psi {
            match f.finite_members() {
                Some(m) => {
                    st.opens.extend(m.iter().cloned());
                    st.families.insert(norm(m));
                }
                None => {
                    st.opens.extend(f.members_upto(2));
                    st.infinite.push(f.clone());
                }
            }
        }
        st
    }

    pub fn is_admissible(&self, f: &FamilySpec) -> bool {
        match f.finite_members() {
            Some(m) => {
                let m = norm(m);
                self.families.contains(&m) || m.iter().all(|s| self.finite_from.contains(s))
            }
            None => self.infinite.contains(f),
        }
    }

    fn add_open(&mut self, s: RealSet) {
        if self.opens.len() >= MAX_OPENS && !self.opens.contains(&s) {
            self.truncated = true;
        } else {
            self.opens.insert(s);
        }
    }

    fn add_family(&mut self, f: Vec<RealSet>) {
        let f = norm(f);
        if self.families.len() >= MAX_FAMILIES && !self.families.contains(&f) {
            self.truncated = true;
        } else {
            self.families.insert(f);
        }
    }

    /// Admissible families whose union is `u`: explicit ones and `{u}` itself.
    fn refinements_of(&self, u: &RealSet) -> Vec<Vec<RealSet>> {
        let mut out: Vec<Vec<RealSet>> = self
            .families
            .iter()
            .filter(|f| union_all(f) == *u)
            .cloned()
            .collect();
        if self.finite_from.contains(u) {
            out.push(vec![u.clone()]);
        }
        out
    }

    pub fn plus_step(&self, rule: PlusRule) -> GenState {
        let mut next = self.clone();
        match rule {
            PlusRule::Finiteness => {
                next.finite_from.extend(self.opens.iter().cloned());
                next.add_open(RealSet::empty());
                next.add_open(self.carrier.clone());
                let opens: Vec<&RealSet> = self.opens.iter().collect();
                for (i, a) in opens.iter().enumerate() {
                    for b in &opens[i + 1..] {
                        next.add_open(a.union(b));
                        next.add_open(a.intersect(b));
                    }
                }
            }
            PlusRule::Stability => {
                for f in &self.families {
                    for v in &self.opens {
                        next.add_family(f.iter().map(|u| u.intersect(v)).collect());
                    }
                }
                for f in &self.infinite {
                    for v in &self.opens {
                        let r = f.restrict(v);
                        if !next.infinite.contains(&r) && r.finite_members().is_none() {
                            if next.infinite.len() >= MAX_FAMILIES {
                                next.truncated = true;
                            } else {
                                next.infinite.push(r);
                            }
                        }
                    }
                }
            }
            PlusRule::Transitivity => {
                for f in &self.families {
                    let options: Vec<Vec<Vec<RealSet>>> =
                        f.iter().map(|u| self.refinements_of(u)).collect();
                    if options.iter().any(|o| o.is_empty()) {
                        continue;
                    }
                    // walk the product of choices, capped
                    let mut idx = vec![0usize; options.len()];
                    for _ in 0..MAX_CHOICES {
                        let mut combined = Vec::new();
                        for (o, &i) in options.iter().zip(&idx) {
                            combined.extend(o[i].iter().cloned());
                        }
                        next.add_family(combined);
                        let mut pos = 0;
                        loop {
                            if pos == idx.len() {
                                break;
                            }
                            idx[pos] += 1;
                            if idx[pos] < options[pos].len() {
                                break;
                            }
                            idx[pos] = 0;
                            pos += 1;
                        }
                        if pos == idx.len() {
                            break;
                        }
                    }
                }
            }
            PlusRule::Saturation => {
                for f in &self.families {
                    let u = union_all(f);
                    if self.opens.contains(&u) {
                        next.add_family(vec![u.clone()]);
                    }
                    for o in &self.opens {
                        if o.is_subset(&u) && f.iter().any(|m| m.is_subset(o)) {
                            let mut g = f.clone();
                            g.push(o.clone());
                            next.add_family(g);
                        }
                    }
                }
            }
            PlusRule::Regularity => {
                for f in &self.families {
                    let u = union_all(f);
                    for o in &self.opens {
                        let v = o.intersect(&u);
                        if f.iter().all(|m| self.opens.contains(&v.intersect(m))) {
                            next.add_open(v);
                        }
                    }
                }
            }
        }
        next
    }

    /// One round of every rule.
    pub fn plus(&self) -> GenState {
        PlusRule::ALL
            .iter()
            .fold(self.clone(), |st, r| st.plus_step(*r))
    }

    pub fn generate_upto(&self, k: usize) -> Result<GenState, SetError> {
        if k > DEFAULT_DEPTH_CAP {
            return Err(SetError::Truncated(format!(
                "depth {k} exceeds the cap {DEFAULT_DEPTH_CAP}"
            )));
        }
        Ok((0..k).fold(self.clone(), |st, _| st.plus()))
    }

    /// Searches for `f` in the first `k` rounds. A negative answer only means
    /// "not reached".
    pub fn member_generated(&self, f: &FamilySpec, k: usize) -> Result<GenOutcome, SetError> {
        if k > DEFAULT_DEPTH_CAP {
            return Err(SetError::Truncated(format!(
                "depth {k} exceeds the cap {DEFAULT_DEPTH_CAP}"
            )));
        }
        let mut st = self.clone();
        for depth in 0..=k {
            if st.is_admissible(f) {
                return Ok(GenOutcome::Found { depth });
            }
            if depth < k {
                st = st.plus();
            }
        }
        Ok(GenOutcome::NotFoundWithinDepth(k))
    }
}
