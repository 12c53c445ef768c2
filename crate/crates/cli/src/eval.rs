//! Resolution of declarations and dispatch of queries to the core crate.

use std::collections::HashMap;

use gts_core::checkers::{
    base_check, chain_check, chain_search, initial_bornology_member, metrizable_verdict_upto,
    proper_check, strict_cont_refute, uniform_chain_check, ChainReport, ChainVerdict,
    PiecewiseAffineMap, ProperVerdict, StrictContVerdict,
};
use gts_core::covers::{FamilySpec, GenOutcome, GenState};
use gts_core::lines::{
    acb_member, cb_member, cov_member, op_member, probe_corpus, pt_of, sm_member, AffineEnd,
    AffinePiece, BaseSchema, Bornology,
};
use gts_core::qmetric::{PhiMode, QuasiMetric};
use gts_core::rat::fmt_rat;
use gts_core::realset::TailSpec;
use gts_core::{Interval, RealSet};
use num_traits::Zero;

use crate::grammar::*;
use crate::oracle::oracle_ess_finite;
use crate::report::{Caps, Record, Report, Status};

type Res<T> = Result<T, String>;

#[derive(Clone)]
enum Value {
    Set(RealSet),
    Family(FamilySpec),
    Metric(QuasiMetric),
    Bornology(Bornology),
    Map(PiecewiseAffineMap),
}

/// Declarations resolved in order. A declaration that fails to build is kept
/// as an error and reported by every query that uses it.
struct Env {
    values: HashMap<String, Res<Value>>,
}

impl Env {
    fn get(&self, name: &str) -> Res<&Value> {
        match self.values.get(name) {
            Some(Ok(v)) => Ok(v),
            Some(Err(e)) => Err(format!("declaration `{name}`: {e}")),
            None => Err(format!("unknown identifier `{name}`")),
        }
    }

    fn bounded_core(&self, s: &SetExpr, what: &str) -> Res<Vec<Interval>> {
        let s = self.set(s)?;
        if s.has_tails() {
            return Err(format!("{what} must be a finite union of intervals"));
        }
        Ok(s.core().to_vec())
    }

    fn set(&self, e: &SetExpr) -> Res<RealSet> {
        Ok(match e {
            SetExpr::Empty => RealSet::empty(),
            SetExpr::Reals => RealSet::reals(),
            SetExpr::Point(x) => RealSet::point(x.clone()),
            SetExpr::Interval(lo, hi) => RealSet::interval(
                Interval::new(lo.value.clone(), lo.closed, hi.value.clone(), hi.closed)
                    .map_err(|e| e.to_string())?,
            ),
            SetExpr::Union(v) => v.iter().try_fold(RealSet::empty(), |acc, s| {
                Ok::<_, String>(acc.union(&self.set(s)?))
            })?,
            SetExpr::Intersect(v) => v.iter().try_fold(RealSet::reals(), |acc, s| {
                Ok::<_, String>(acc.intersect(&self.set(s)?))
            })?,
            SetExpr::Complement(s) => self.set(s)?.complement(),
            SetExpr::Difference(a, b) => self.set(a)?.difference(&self.set(b)?),
            SetExpr::Periodic { period, pattern } => RealSet::periodic(
                self.bounded_core(pattern, "a periodic pattern")?,
                period.clone(),
            )
            .map_err(|e| e.to_string())?,
            SetExpr::TailLeft {
                cut,
                period,
                pattern,
            }
            | SetExpr::TailRight {
                cut,
                period,
                pattern,
            } => {
                let spec = TailSpec {
                    pattern: self.bounded_core(pattern, "a tail pattern")?,
                    period: period.clone(),
                    cut: cut.clone(),
                };
                let (l, r) = if matches!(e, SetExpr::TailLeft { .. }) {
                    (Some(spec), None)
                } else {
                    (None, Some(spec))
                };
                RealSet::normalize(Vec::new(), l, r).map_err(|e| e.to_string())?
            }
            SetExpr::Interior(k, s) => self.set(s)?.interior(*k),
            SetExpr::Closure(k, s) => self.set(s)?.closure(*k),
            SetExpr::Affine { a, b, set } => {
                if a.is_zero() {
                    return Err("affine image needs a nonzero slope".into());
                }
                self.set(set)?.affine_image(a, b)
            }
            SetExpr::Ref(n) => match self.get(n)? {
                Value::Set(s) => s.clone(),
                _ => return Err(format!("`{n}` is not a set")),
            },
        })
    }

    fn family(&self, e: &FamilyExpr) -> Res<FamilySpec> {
        Ok(match e {
            FamilyExpr::Finite(v) => {
                FamilySpec::finite(v.iter().map(|s| self.set(s)).collect::<Res<_>>()?)
            }
            FamilyExpr::Periodic {
                seed,
                period,
                range,
            } => FamilySpec::periodic(self.set(seed)?, period.clone(), *range)
                .map_err(|e| e.to_string())?,
            FamilyExpr::Split { cut, left, right } => {
                FamilySpec::split(cut.clone(), self.family(left)?, self.family(right)?)
            }
            FamilyExpr::Restrict(f, s) => self.family(f)?.restrict(&self.set(s)?),
            FamilyExpr::Join(v) => {
                FamilySpec::Union(v.iter().map(|f| self.family(f)).collect::<Res<_>>()?)
            }
            FamilyExpr::Accumulating {
                start,
                limit,
                shape,
            } => FamilySpec::accumulating(start.clone(), limit.clone(), *shape)
                .map_err(|e| e.to_string())?,
            FamilyExpr::Ref(n) => match self.get(n)? {
                Value::Family(f) => f.clone(),
                _ => return Err(format!("`{n}` is not a family")),
            },
        })
    }

    fn metric(&self, e: &MetricExpr) -> Res<QuasiMetric> {
        Ok(match e {
            MetricExpr::Builtin(m) => QuasiMetric::new(*m),
            MetricExpr::Conj(m) => self.metric(m)?.conjugate(),
            MetricExpr::Float(m) => self.metric(m)?.with_phi(PhiMode::FloatExp),
            MetricExpr::Ref(n) => match self.get(n)? {
                Value::Metric(m) => *m,
                _ => return Err(format!("`{n}` is not a metric")),
            },
        })
    }

    fn born(&self, e: &BornExpr) -> Res<Bornology> {
        let end = |b: &SchemaBound, upper: bool| match &b.affine {
            Some((alpha, beta)) => AffineEnd::Affine {
                alpha: alpha.clone(),
                beta: beta.clone(),
            },
            None if upper => AffineEnd::PosInf,
            None => AffineEnd::NegInf,
        };
        Ok(match e {
            BornExpr::FB => Bornology::FB,
            BornExpr::All => Bornology::All,
            BornExpr::NatBounded => Bornology::NatBounded,
            BornExpr::UB => Bornology::UB,
            BornExpr::LB => Bornology::LB,
            BornExpr::ReverseWellOrdered => Bornology::ReverseWellOrdered,
            BornExpr::Bounded(m) => Bornology::MetricBounded(self.metric(m)?),
            BornExpr::Schema { from, pieces } => {
                let pieces = pieces
                    .iter()
                    .map(|(lo, hi)| AffinePiece {
                        lo: end(lo, false),
                        lo_closed: lo.closed,
                        hi: end(hi, true),
                        hi_closed: hi.closed,
                    })
                    .collect();
                Bornology::Custom(BaseSchema::affine(pieces, *from).map_err(|e| e.to_string())?)
            }
            BornExpr::Ref(n) => match self.get(n)? {
                Value::Bornology(b) => b.clone(),
                _ => return Err(format!("`{n}` is not a bornology")),
            },
        })
    }

    fn map(&self, e: &MapExpr) -> Res<PiecewiseAffineMap> {
        Ok(match e {
            MapExpr::Affine(a, b) => PiecewiseAffineMap::affine(a.clone(), b.clone()),
            MapExpr::Piecewise { breaks, pieces } => {
                PiecewiseAffineMap::new(breaks.clone(), pieces.clone())
                    .map_err(|e| e.to_string())?
            }
            MapExpr::Ref(n) => match self.get(n)? {
                Value::Map(m) => m.clone(),
                _ => return Err(format!("`{n}` is not a map")),
            },
        })
    }

    fn declare(&mut self, d: &Decl) {
        let v = match d {
            Decl::Set(_, e) => self.set(e).map(Value::Set),
            Decl::Family(_, e) => self.family(e).map(Value::Family),
            Decl::Metric(_, e) => self.metric(e).map(Value::Metric),
            Decl::Bornology(_, e) => self.born(e).map(Value::Bornology),
            Decl::Map(_, e) => self.map(e).map(Value::Map),
        };
        self.values.insert(d.name().to_string(), v);
    }
}

/// A chain report checked only up to the cap when more was asked for.
pub fn capped(mut r: ChainReport, requested: u64, cap: u64) -> ChainReport {
    if requested > cap
        && r.verdict
            == (ChainVerdict::Pass {
                proved_all_n: false,
            })
    {
        r.verdict = ChainVerdict::Truncated(cap);
    }
    r
}

fn probe_sets() -> Vec<RealSet> {
    probe_corpus().into_iter().map(|(_, s)| s).collect()
}

fn answer(env: &Env, q: &Query, caps: Caps) -> Res<String> {
    let e = |x: gts_core::SetError| x.to_string();
    Ok(match q {
        Query::Show(s) => env.set(s)?.to_string(),
        Query::Boundedness(s) => {
            let b = env.set(s)?.boundedness();
            format!(
                "bounded={} above={} below={} finite={}",
                b.bounded, b.bounded_above, b.bounded_below, b.finite
            )
        }
        Query::Contains(s, x) => env.set(s)?.contains_point(x).to_string(),
        Query::Subset(a, b) => env.set(a)?.is_subset(&env.set(b)?).to_string(),
        Query::Equal(a, b) => (env.set(a)? == env.set(b)?).to_string(),
        Query::IsOpen(k, s) => env.set(s)?.is_open(*k).to_string(),
        Query::Eval(m, x, y) => fmt_rat(&env.metric(m)?.eval(x, y).map_err(e)?),
        Query::Ball { metric, at, radius } => {
            env.metric(metric)?.ball(at, radius).map_err(e)?.to_string()
        }
        Query::Nbhd {
            metric,
            set,
            radius,
        } => env
            .metric(metric)?
            .nbhd(&env.set(set)?, radius)
            .map_err(e)?
            .to_string(),
        Query::EssFinite(f, k) => {
            let v = env.family(f)?.ess_finite_on(&env.set(k)?);
            match (v.essentially_finite, v.witness, v.obstruction) {
                (true, Some(w), _) => {
                    let w: Vec<String> = w.iter().map(|s| s.to_string()).collect();
                    format!("true witness {{{}}}", w.join("; "))
                }
                (true, None, _) => "true".into(),
                (false, _, Some(o)) => format!("false: {o}"),
                (false, _, None) => "false".into(),
            }
        }
        Query::LocallyEssFinite(f) => env.family(f)?.locally_ess_finite().to_string(),
        Query::Op(l, s) => op_member(*l, &env.set(s)?).to_string(),
        Query::Cov(l, f) => cov_member(*l, &env.family(f)?).to_string(),
        Query::Class(c, l, s) => {
            let s = env.set(s)?;
            match c {
                LineClass::Sm => sm_member(*l, &s),
                LineClass::Cb => cb_member(*l, &s),
                LineClass::Acb => acb_member(*l, &s),
            }
            .to_string()
        }
        Query::Pt(l) => pt_of(*l).to_string(),
        Query::Member(b, s) => env.born(b)?.contains(&env.set(s)?).to_string(),
        Query::BaseIndex(b, s) => match env.born(b)?.base().map_err(e)?.index_of(&env.set(s)?) {
            Some(n) => n.to_string(),
            None => "none".into(),
        },
        Query::Proper { born, t1, t2, upto } => {
            match proper_check(&env.born(born)?, *t1, *t2, *upto).map_err(e)? {
                ProperVerdict::Proper => "PROPER".into(),
                ProperVerdict::Improper { index, closure } => {
                    format!("IMPROPER at B_{index}: closure {closure}")
                }
            }
        }
        Query::Base(b, k) => base_check(&env.born(b)?, *k).map_err(e)?.to_string(),
        Query::Chain {
            metric,
            born,
            delta,
            upto,
        } => {
            let schema = env.born(born)?.base().map_err(e)?;
            let n = (*upto).min(caps.chain);
            capped(
                chain_check(&env.metric(metric)?, &schema, delta, n).map_err(e)?,
                *upto,
                caps.chain,
            )
            .to_string()
        }
        Query::UniformChain { metric, born, upto } | Query::ChainSearch { metric, born, upto } => {
            let schema = env.born(born)?.base().map_err(e)?;
            let d = env.metric(metric)?;
            let n = (*upto).min(caps.chain);
            let r = if matches!(q, Query::UniformChain { .. }) {
                uniform_chain_check(&d, &schema, n)
            } else {
                chain_search(&d, &schema, n)
            };
            capped(r.map_err(e)?, *upto, caps.chain).to_string()
        }
        Query::Metrizable { line, born, metric } => {
            let (b, d) = (env.born(born)?, env.metric(metric)?);
            metrizable_verdict_upto(*line, &b, &d, &probe_sets(), caps.chain)
                .map_err(e)?
                .to_string()
        }
        Query::StrictCont {
            map,
            src,
            dst,
            battery,
        } => {
            let battery: Vec<FamilySpec> =
                battery.iter().map(|f| env.family(f)).collect::<Res<_>>()?;
            match strict_cont_refute(&env.map(map)?, *src, *dst, &battery) {
                StrictContVerdict::Refuted { family, preimage } => {
                    format!("REFUTED by {family}: preimage {preimage} is not admissible")
                }
                StrictContVerdict::Unrefuted { checked, skipped } => {
                    format!("UNREFUTED ({checked} checked, {skipped} skipped)")
                }
                StrictContVerdict::Unrepresentable { family, reason } => {
                    format!("UNREPRESENTABLE preimage of {family}: {reason}")
                }
            }
        }
        Query::Initial { set, pairs } => {
            let maps: Vec<PiecewiseAffineMap> =
                pairs.iter().map(|(m, _)| env.map(m)).collect::<Res<_>>()?;
            let borns: Vec<Bornology> =
                pairs.iter().map(|(_, b)| env.born(b)).collect::<Res<_>>()?;
            initial_bornology_member(&maps, &borns, &env.set(set)?)
                .map_err(e)?
                .to_string()
        }
        Query::Generated { target, psi, depth } => {
            if *depth > caps.depth {
                return Err(format!("depth {depth} exceeds the cap {}", caps.depth));
            }
            let psi: Vec<FamilySpec> = psi.iter().map(|f| env.family(f)).collect::<Res<_>>()?;
            let st = GenState::new(&psi, &RealSet::reals());
            match st
                .member_generated(&env.family(target)?, *depth as usize)
                .map_err(e)?
            {
                GenOutcome::Found { depth } => format!("found at depth {depth}"),
                GenOutcome::NotFoundWithinDepth(k) => format!("not found within depth {k}"),
            }
        }
        Query::Oracle {
            family,
            set,
            window,
            max,
        } => oracle_ess_finite(&env.family(family)?, *window, &env.set(set)?, *max as usize)
            .map_err(|r| r.to_string())?
            .to_string(),
    })
}

/// Evaluates every query in order. Failures become error records; the run
/// always completes.
pub fn run(doc: &QueryDoc, caps: Caps) -> Report {
    let mut env = Env {
        values: HashMap::new(),
    };
    for d in &doc.decls {
        env.declare(d);
    }
    let mut report = Report::new("eval", caps);
    for (i, q) in doc.queries.iter().enumerate() {
        let (status, result) = match answer(&env, q, caps) {
            Ok(r) => (Status::Ok, r),
            Err(m) => (Status::Error, m),
        };
        report.records.push(Record {
            id: format!("q{i}"),
            status,
            anchor: None,
            subject: q.to_string(),
            result,
        });
    }
    report
}
