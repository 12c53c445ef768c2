use std::collections::BTreeSet;

use super::FamilySpec;
use crate::realset::RealSet;

/// Least collection containing `generators`, the empty set and `y`, closed
/// under finite unions and intersections. Sorted.
pub fn full_ring_closure(generators: &[RealSet], y: &RealSet) -> Vec<RealSet> {
    let mut seed: BTreeSet<RealSet> = generators.iter().cloned().collect();
    seed.insert(RealSet::empty());
    seed.insert(y.clone());
    close(
        seed,
        &[
            &|a: &RealSet, b: &RealSet| a.union(b),
            &|a: &RealSet, b: &RealSet| a.intersect(b),
        ],
    )
}

type SetOp<'a> = &'a dyn Fn(&RealSet, &RealSet) -> RealSet;

fn close(mut acc: BTreeSet<RealSet>, ops: &[SetOp]) -> Vec<RealSet> {
    let mut frontier: Vec<RealSet> = acc.iter().cloned().collect();
    while !frontier.is_empty() {
        let current: Vec<RealSet> = acc.iter().cloned().collect();
        let mut next = Vec::new();
        for a in &frontier {
            for b in &current {
                for op in ops {
                    let c = op(a, b);
                    if !acc.contains(&c) {
                        acc.insert(c.clone());
                        next.push(c);
                    }
                }
            }
        }
        frontier = next;
    }
    acc.into_iter().collect()
}

/// The topology generated by finitely many sets: unions of finite intersections.
pub fn gen_topology(generators: &[RealSet]) -> Vec<RealSet> {
    let mut seed: BTreeSet<RealSet> = generators.iter().cloned().collect();
    seed.insert(RealSet::reals());
    let meets = close(seed, &[&|a: &RealSet, b: &RealSet| a.intersect(b)]);
    let mut with_empty: BTreeSet<RealSet> = meets.into_iter().collect();
    with_empty.insert(RealSet::empty());
    close(with_empty, &[&|a: &RealSet, b: &RealSet| a.union(b)])
}

pub fn gen_topology_member(generators: &[RealSet], u: &RealSet) -> bool {
    gen_topology(generators).contains(u)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EfVerdict {
    Member,
    /// Fails on the base element with this index.
    FailsAt(u32),
    /// Some member is outside the admissible collection.
    MemberOutside(RealSet),
}

/// Membership in `EF(L, B)`: members satisfy `in_l` and the family is
/// essentially finite on every base element `base(n)`.
///
/// Essential finiteness passes to subsets, so base elements suffice. Failures
/// only come from points where members accumulate, from the two infinities, or
/// from unbounded traces; all of these show up by the index `n_max` once it
/// passes every breakpoint of the family.
pub fn ef_member(
    f: &FamilySpec,
    in_l: &dyn Fn(&RealSet) -> bool,
    base: &dyn Fn(u32) -> RealSet,
    n_max: u32,
) -> EfVerdict {
    if let Some(m) = f.members_upto(8).into_iter().find(|m| !in_l(m)) {
        return EfVerdict::MemberOutside(m);
    }
    if !f.all_members(in_l) {
        return EfVerdict::MemberOutside(RealSet::empty());
    }
    for n in 0..=n_max {
        if !f.ess_finite_on(&base(n)).essentially_finite {
            return EfVerdict::FailsAt(n);
        }
    }
    EfVerdict::Member
}
