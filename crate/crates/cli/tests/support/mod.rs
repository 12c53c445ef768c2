//! Seeded randomized batteries shared by the acceptance target. Each returns
//! counts and the first few failures instead of panicking.

#![allow(dead_code)]

use gts_cli::oracle::oracle_ess_finite;
use gts_core::covers::{full_ring_closure, AccShape, FamilySpec, GenOutcome, GenState, IndexRange};
use gts_core::qmetric::{MetricName, QuasiMetric};
use gts_core::realset::TailSpec;
use gts_core::{ExtRat, Interval, Rat, RealSet, TopologyKind};
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KEEP: usize = 5;

#[derive(Debug, Default)]
pub struct Outcome {
    pub instances: usize,
    /// Instances the reference could decide.
    pub answered: usize,
    /// Instances the engine reported as truncated.
    pub truncated: usize,
    /// Instances the engine decided negatively.
    pub negative: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl Outcome {
    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < KEEP {
            self.failures.push(msg);
        }
    }

    pub fn ok(&self) -> bool {
        self.failure_count == 0
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn quarter(v: i64) -> Rat {
    Rat::new(v as i128, 4)
}

fn fin(v: i64) -> ExtRat {
    ExtRat::Fin(quarter(v))
}

/// Interval in quarters, `None` for an infinite end.
#[derive(Clone, Debug)]
pub struct Piece {
    pub lo: Option<i64>,
    pub lo_closed: bool,
    pub hi: Option<i64>,
    pub hi_closed: bool,
}

impl Piece {
    pub fn holds(&self, q: &Rat) -> bool {
        let above = self
            .lo
            .is_none_or(|l| *q > quarter(l) || (self.lo_closed && *q == quarter(l)));
        let below = self
            .hi
            .is_none_or(|h| *q < quarter(h) || (self.hi_closed && *q == quarter(h)));
        above && below
    }

    pub fn interval(&self) -> Option<Interval> {
        let lo = self.lo.map_or(ExtRat::NegInf, fin);
        let hi = self.hi.map_or(ExtRat::PosInf, fin);
        Interval::new(
            lo,
            self.lo_closed && self.lo.is_some(),
            hi,
            self.hi_closed && self.hi.is_some(),
        )
        .ok()
    }
}

/// Periodic pattern in quarters inside `[0, period)`.
#[derive(Clone, Debug)]
pub struct TailDesc {
    pub period: i64,
    pub pattern: Vec<(i64, bool, i64, bool)>,
    pub cut: i64,
}

impl TailDesc {
    fn pattern_holds(&self, q: &Rat) -> bool {
        let scaled = q * Rat::from_integer(4);
        let p = Rat::from_integer(self.period as i128);
        let y = scaled.clone() - (scaled / p.clone()).floor() * p;
        self.pattern.iter().any(|&(a, ac, b, bc)| {
            let (a, b) = (Rat::from_integer(a as i128), Rat::from_integer(b as i128));
            (y > a || (ac && y == a)) && (y < b || (bc && y == b))
        })
    }

    fn spec(&self) -> TailSpec {
        TailSpec {
            pattern: self
                .pattern
                .iter()
                .filter_map(|&(a, ac, b, bc)| Interval::new(fin(a), ac, fin(b), bc).ok())
                .collect(),
            period: quarter(self.period),
            cut: quarter(self.cut),
        }
    }
}

/// A set description with a membership test that bypasses the normal form.
#[derive(Clone, Debug)]
pub struct Desc {
    pub core: Vec<Piece>,
    pub left: Option<TailDesc>,
    pub right: Option<TailDesc>,
}

impl Desc {
    pub fn holds(&self, q: &Rat) -> bool {
        self.core.iter().any(|p| p.holds(q))
            || self
                .left
                .as_ref()
                .is_some_and(|t| *q < quarter(t.cut) && t.pattern_holds(q))
            || self
                .right
                .as_ref()
                .is_some_and(|t| *q > quarter(t.cut) && t.pattern_holds(q))
    }

    pub fn build(&self) -> RealSet {
        RealSet::normalize(
            self.core.iter().filter_map(Piece::interval).collect(),
            self.left.as_ref().map(TailDesc::spec),
            self.right.as_ref().map(TailDesc::spec),
        )
        .expect("generated tails are well formed")
    }
}

fn gen_piece(r: &mut impl Rng) -> Piece {
    let lo = if r.gen_bool(0.9) {
        Some(r.gen_range(-24..24))
    } else {
        None
    };
    let len = r.gen_range(0..16);
    let hi = if r.gen_bool(0.1) {
        None
    } else {
        Some(lo.unwrap_or(-8) + len)
    };
    Piece {
        lo,
        lo_closed: r.gen(),
        hi,
        hi_closed: r.gen(),
    }
}

fn gen_tail(r: &mut impl Rng) -> TailDesc {
    let period = *[4i64, 6, 8].choose(r).unwrap();
    let cut = r.gen_range(-24..24);
    let mut pattern = Vec::new();
    for _ in 0..r.gen_range(0..3) {
        let a = r.gen_range(0..period);
        let b = (a + r.gen_range(0..4)).min(period);
        let (ac, bc) = (r.gen(), r.gen::<bool>() && b < period);
        if a < b || (a == b && ac && bc) {
            pattern.push((a, ac, b, bc));
        }
    }
    TailDesc {
        period,
        pattern,
        cut,
    }
}

pub fn gen_desc(r: &mut impl Rng) -> Desc {
    let core = (0..r.gen_range(0..4)).map(|_| gen_piece(r)).collect();
    let left = if r.gen_bool(0.3) {
        Some(gen_tail(r))
    } else {
        None
    };
    let right = if r.gen_bool(0.3) {
        Some(gen_tail(r))
    } else {
        None
    };
    Desc { core, left, right }
}

/// Step 1/16 over [-8, 8].
pub fn grid() -> Vec<Rat> {
    (-128..=128).map(|k| Rat::new(k, 16)).collect()
}

type Pointwise<'a> = &'a dyn Fn(bool, bool) -> bool;

pub const LAWS: [&str; 5] = [
    "sampling",
    "boolean",
    "identities",
    "canonicity",
    "interior/closure",
];

/// `n` instances of every law in [`LAWS`]; one outcome per law.
pub fn law_battery(seed: u64, n: usize) -> Vec<(&'static str, Outcome)> {
    let mut r = rng(seed);
    let grid = grid();
    let mut out: Vec<(&'static str, Outcome)> =
        LAWS.iter().map(|l| (*l, Outcome::default())).collect();
    for i in 0..n {
        let (da, db) = (gen_desc(&mut r), gen_desc(&mut r));
        let (a, b) = (da.build(), db.build());
        for (_, o) in out.iter_mut() {
            o.instances += 1;
        }

        if let Some(q) = grid.iter().find(|q| a.contains_point(q) != da.holds(q)) {
            out[0].1.fail(format!("#{i}: {a} at {q} from {da:?}"));
        }

        let ops: [(&str, RealSet, Pointwise); 5] = [
            ("union", a.union(&b), &|x, y| x || y),
            ("intersect", a.intersect(&b), &|x, y| x && y),
            ("difference", a.difference(&b), &|x, y| x && !y),
            ("sym_difference", a.sym_difference(&b), &|x, y| x != y),
            ("complement", a.complement(), &|x, _| !x),
        ];
        for (name, c, f) in &ops {
            if let Some(q) = grid
                .iter()
                .find(|q| c.contains_point(q) != f(da.holds(q), db.holds(q)))
            {
                out[1]
                    .1
                    .fail(format!("#{i}: {name} of {a} and {b} wrong at {q}"));
            }
        }

        let ac = a.complement();
        let identities = [
            ("involution", ac.complement() == a),
            (
                "de morgan",
                a.union(&b).complement() == ac.intersect(&b.complement()),
            ),
            (
                "commutative",
                a.union(&b) == b.union(&a) && a.intersect(&b) == b.intersect(&a),
            ),
            (
                "absorption",
                a.union(&a.intersect(&b)) == a && a.intersect(&a.union(&b)) == a,
            ),
            (
                "excluded middle",
                a.union(&ac).is_reals() && a.intersect(&ac).is_empty(),
            ),
            (
                "difference",
                a.difference(&b) == a.intersect(&b.complement()),
            ),
            ("subset", a.is_subset(&b) == (a.union(&b) == b)),
        ];
        for (name, holds) in identities {
            if !holds {
                out[2].1.fail(format!("#{i}: {name} for {a}, {b}"));
            }
        }

        // equal sets must have equal normal forms however they were described
        let mut shuffled = da.clone();
        shuffled.core.shuffle(&mut r);
        shuffled.core.extend(da.core.iter().take(1).cloned());
        let finite_cuts = a
            .left_tail()
            .iter()
            .chain(a.right_tail().iter())
            .all(|t| t.cut.is_finite());
        let rebuilt_ok = !finite_cuts || {
            let spec = |t: &gts_core::realset::Tail| TailSpec {
                pattern: t.periodic.pattern.clone(),
                period: t.periodic.period.clone(),
                cut: t.cut.fin().expect("finite cut").clone(),
            };
            RealSet::normalize(
                a.core().to_vec(),
                a.left_tail().map(spec),
                a.right_tail().map(spec),
            )
            .ok()
            .as_ref()
                == Some(&a)
        };
        let grid_differs = grid
            .iter()
            .any(|q| a.contains_point(q) != b.contains_point(q));
        if shuffled.build() != a
            || !rebuilt_ok
            || a.union(&RealSet::empty()) != a
            || (grid_differs && a == b)
        {
            out[3]
                .1
                .fail(format!("#{i}: normal form of {a} not canonical"));
        }

        for t in TopologyKind::ALL {
            let (ia, ca) = (a.interior(t), a.closure(t));
            let laws = ia.is_subset(&a)
                && a.is_subset(&ca)
                && ia.interior(t) == ia
                && ca.closure(t) == ca
                && ia.is_open(t)
                && ca.is_closed(t)
                && a.intersect(&b).interior(t) == ia.intersect(&b.interior(t))
                && a.union(&b).closure(t) == ca.union(&b.closure(t))
                && ca.complement() == ac.interior(t);
            if !laws {
                out[4].1.fail(format!("#{i}: {t} laws fail for {a}, {b}"));
            }
        }
    }
    out
}

/// The defining formulas, transcribed independently of the library.
pub fn metric_formula(name: MetricName, x: &Rat, y: &Rat) -> Rat {
    let one = Rat::one();
    let cap = |v: Rat| if v > one { one.clone() } else { v };
    let phi = |v: &Rat| {
        if v.is_negative() {
            one.clone() / (one.clone() - v)
        } else {
            one.clone() + v
        }
    };
    let rho_s = |a: &Rat, b: &Rat| if a <= b { b - a } else { one.clone() };
    let pos = |v: &Rat| {
        if v.is_negative() {
            Rat::zero()
        } else {
            v.clone()
        }
    };
    let rho_0 = || if x <= y { y - x } else { one.clone() + x - y };
    match name {
        MetricName::DN => (x - y).abs(),
        MetricName::DN1 => cap((x - y).abs()),
        MetricName::DNPlus => (phi(x) - phi(y)).abs(),
        MetricName::DNPlus1 => cap((phi(x) - phi(y)).abs()),
        MetricName::DU => cap((x - y).abs()) + (pos(y) - pos(x)).abs(),
        MetricName::RhoU => pos(&(y - x)),
        MetricName::RhoU1 => cap(pos(&(y - x))),
        MetricName::RhoS => rho_s(x, y),
        MetricName::RhoS1 => cap(rho_s(x, y)),
        MetricName::RhoL => {
            if x <= y {
                cap(y - x)
            } else {
                one.clone() + x - y
            }
        }
        MetricName::Rho0 => rho_0(),
        MetricName::Rho01 => cap(rho_0()),
        MetricName::RhoSMinus => rho_s(&phi(&-y), &phi(&-x)),
    }
}

fn gen_point(r: &mut impl Rng) -> Rat {
    let d = *[1i128, 2, 3, 8, 16].choose(r).unwrap();
    Rat::new(r.gen_range(-400..400), d * 4)
}

fn gen_radius(r: &mut impl Rng) -> Rat {
    let d = *[1i128, 4, 16].choose(r).unwrap();
    Rat::new(r.gen_range(1..64), d * 8)
}

/// `n` random triples per metric (each also drawn conjugated half the time):
/// formula agreement, the quasi-pseudometric axioms, and single-interval
/// balls agreeing with evaluation.
pub fn metric_battery(seed: u64, n: usize) -> Vec<(MetricName, Outcome)> {
    let mut r = rng(seed);
    MetricName::ALL
        .iter()
        .map(|&name| {
            let mut o = Outcome::default();
            for i in 0..n {
                o.instances += 1;
                let d = if r.gen() {
                    QuasiMetric::new(name).conjugate()
                } else {
                    QuasiMetric::new(name)
                };
                let (x, y, z) = (gen_point(&mut r), gen_point(&mut r), gen_point(&mut r));
                let ev = |a: &Rat, b: &Rat| d.eval(a, b).expect("exact metric");
                let dxy = ev(&x, &y);
                let (fx, fy) = if d.conjugated { (&y, &x) } else { (&x, &y) };
                if dxy != metric_formula(name, fx, fy) {
                    o.fail(format!("#{i}: {d}({x}, {y}) = {dxy}"));
                }
                let dyx = ev(&y, &x);
                let axioms = ev(&x, &x).is_zero()
                    && !dxy.is_negative()
                    && ev(&x, &z) <= &dxy + ev(&y, &z)
                    && (!d.is_symmetric() || dxy == dyx)
                    && (name.is_pseudo() || !(dxy.is_zero() && dyx.is_zero()) || x == y)
                    && d.conjugate().eval(&x, &y).ok() == Some(dyx);
                if !axioms {
                    o.fail(format!("#{i}: axioms fail for {d} at {x}, {y}, {z}"));
                }
                let rad = gen_radius(&mut r);
                match d.ball(&x, &rad) {
                    Ok(ball) => {
                        let shape =
                            ball.core().len() <= 1 && !ball.has_tails() && ball.contains_point(&x);
                        let near = [&y, &z, &(&x + &rad), &(&x - &rad), &x];
                        if !shape
                            || near
                                .iter()
                                .any(|p| ball.contains_point(p) != (ev(&x, p) < rad))
                        {
                            o.fail(format!("#{i}: ball {d}({x}, {rad}) = {ball}"));
                        }
                    }
                    Err(e) => o.fail(format!("#{i}: ball {d}({x}, {rad}): {e}")),
                }
            }
            (name, o)
        })
        .collect()
}

fn gen_bounded(r: &mut impl Rng) -> RealSet {
    let lo = r.gen_range(-24..24);
    let hi = lo + r.gen_range(1..16);
    RealSet::interval(Interval::new(fin(lo), r.gen(), fin(hi), r.gen()).unwrap())
}

fn gen_simple_family(r: &mut impl Rng) -> FamilySpec {
    match r.gen_range(0..3) {
        0 => FamilySpec::finite((0..r.gen_range(1..4)).map(|_| gen_bounded(r)).collect()),
        1 => {
            let range = match r.gen_range(0..4) {
                0 => IndexRange::All,
                1 => IndexRange::From(r.gen_range(-4..4)),
                2 => IndexRange::Upto(r.gen_range(-4..4)),
                _ => {
                    let a = r.gen_range(-4..4);
                    IndexRange::Finite(a, a + r.gen_range(0..4))
                }
            };
            FamilySpec::periodic(gen_bounded(r), quarter(r.gen_range(1..12)), range).unwrap()
        }
        _ => {
            let start = quarter(r.gen_range(-16..8));
            let limit = if r.gen_bool(0.7) {
                ExtRat::Fin(&start + quarter(r.gen_range(1..16)))
            } else {
                ExtRat::PosInf
            };
            let shape = *[AccShape::Rays, AccShape::OpenTiles, AccShape::HalfOpenTiles]
                .choose(r)
                .unwrap();
            FamilySpec::accumulating(start, limit, shape).unwrap()
        }
    }
}

pub fn gen_family(r: &mut impl Rng) -> FamilySpec {
    match r.gen_range(0..6) {
        0 => FamilySpec::split(
            quarter(r.gen_range(-8..8)),
            gen_simple_family(r),
            gen_simple_family(r),
        ),
        1 => FamilySpec::Union(vec![gen_simple_family(r), gen_simple_family(r)]),
        2 => gen_simple_family(r).restrict(&gen_bounded(r)),
        _ => gen_simple_family(r),
    }
}

fn gen_k(r: &mut impl Rng) -> RealSet {
    match r.gen_range(0..6) {
        0 => RealSet::interval(Interval::closed_open(
            quarter(r.gen_range(-16..16)),
            ExtRat::PosInf,
        )),
        1 => RealSet::interval(Interval::open(ExtRat::NegInf, fin(r.gen_range(-16..16)))),
        2 => gen_bounded(r).union(&gen_bounded(r)),
        _ => gen_bounded(r),
    }
}

pub const EF_WINDOWS: [i64; 5] = [2, 4, 8, 16, 32];

/// Symbolic essential finiteness against the exhaustive oracle on growing
/// index windows. The oracle only ever proves a cover, so a disagreement is
/// an oracle cover where the symbolic decision says "not essentially finite".
pub fn ef_oracle_battery(seed: u64, n: usize) -> Outcome {
    let mut r = rng(seed);
    let mut o = Outcome::default();
    for i in 0..n {
        o.instances += 1;
        let (f, k) = (gen_family(&mut r), gen_k(&mut r));
        let symbolic = f.ess_finite_on(&k).essentially_finite;
        o.negative += usize::from(!symbolic);
        let answer = EF_WINDOWS
            .iter()
            .find_map(|&w| oracle_ess_finite(&f, (-w, w), &k, 8).ok());
        if let Some(found) = answer {
            o.answered += 1;
            if found != symbolic {
                o.fail(format!(
                    "#{i}: oracle {found}, symbolic {symbolic} for {f:?} on {k}"
                ));
            }
        }
    }
    o
}

/// Finite Ψ restricted to a bounded Y: a finite family is generated within
/// depth 4 exactly when its members lie in the ring generated on Y.
pub fn ring_battery(seed: u64, n: usize) -> Outcome {
    let mut r = rng(seed);
    let mut o = Outcome::default();
    for i in 0..n {
        o.instances += 1;
        let lo = r.gen_range(-8..4);
        let y = RealSet::interval(Interval::closed(
            quarter(lo),
            quarter(lo + r.gen_range(8..24)),
        ));
        let total = r.gen_range(1..=3);
        let gens: Vec<RealSet> = (0..total)
            .map(|_| gen_bounded(&mut r).intersect(&y))
            .collect();
        let split = r.gen_range(0..=total);
        let psi: Vec<FamilySpec> = [&gens[..split], &gens[split..]]
            .iter()
            .filter(|g| !g.is_empty())
            .map(|g| FamilySpec::finite(g.to_vec()))
            .collect();
        let ring = full_ring_closure(&gens, &y);
        let st = GenState::new(&psi, &y);

        let mut candidates: Vec<Vec<RealSet>> = Vec::new();
        for _ in 0..2 {
            candidates.push(
                (0..r.gen_range(1..4))
                    .map(|_| ring.choose(&mut r).unwrap().clone())
                    .collect(),
            );
        }
        for _ in 0..2 {
            let mut c: Vec<RealSet> = (0..r.gen_range(0..3))
                .map(|_| ring.choose(&mut r).unwrap().clone())
                .collect();
            c.push(gen_bounded(&mut r).intersect(&y));
            candidates.push(c);
        }
        for c in candidates {
            let expected = c.iter().all(|m| ring.contains(m));
            match st.member_generated(&FamilySpec::finite(c.clone()), 4) {
                Ok(GenOutcome::Found { .. }) => {
                    o.answered += 1;
                    if !expected {
                        o.fail(format!(
                            "#{i}: generated {c:?} outside the ring of {gens:?} on {y}"
                        ));
                    }
                }
                Ok(GenOutcome::NotFoundWithinDepth(_)) => {
                    if expected {
                        let reached = st.generate_upto(4).map(|s| s.truncated).unwrap_or(true);
                        if reached {
                            o.truncated += 1;
                        } else {
                            o.fail(format!(
                                "#{i}: ring family {c:?} of {gens:?} on {y} not generated"
                            ));
                        }
                    } else {
                        o.answered += 1;
                    }
                }
                Err(e) => o.fail(format!("#{i}: {e}")),
            }
        }
    }
    o
}
