use std::fmt::{self, Display, Formatter};

use gts_core::covers::{AccShape, IndexRange};
use gts_core::rat::fmt_rat;
use gts_core::{ExtRat, Rat};

use super::ast::*;

struct R<'a>(&'a Rat);

impl Display for R<'_> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rat(self.0))
    }
}

struct E<'a>(&'a ExtRat);

impl Display for E<'_> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self.0 {
            ExtRat::NegInf => f.write_str("-inf"),
            ExtRat::PosInf => f.write_str("+inf"),
            ExtRat::Fin(r) => write!(f, "{}", R(r)),
        }
    }
}

fn join<T: Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn oc(closed: bool) -> &'static str {
    if closed {
        "closed"
    } else {
        "open"
    }
}

impl Display for Bound {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", oc(self.closed), E(&self.value))
    }
}

impl Display for SetExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Empty => f.write_str("empty"),
            SetExpr::Reals => f.write_str("reals"),
            SetExpr::Point(x) => write!(f, "point {}", R(x)),
            SetExpr::Interval(lo, hi) => write!(f, "interval({lo}, {hi})"),
            SetExpr::Union(v) => write!(f, "union({})", join(v)),
            SetExpr::Intersect(v) => write!(f, "intersect({})", join(v)),
            SetExpr::Complement(s) => write!(f, "complement({s})"),
            SetExpr::Difference(a, b) => write!(f, "difference({a}, {b})"),
            SetExpr::Periodic { period, pattern } => {
                write!(f, "periodic(period {}, {pattern})", R(period))
            }
            SetExpr::TailLeft {
                cut,
                period,
                pattern,
            } => {
                write!(
                    f,
                    "tail_left(cut {}, period {}, {pattern})",
                    R(cut),
                    R(period)
                )
            }
            SetExpr::TailRight {
                cut,
                period,
                pattern,
            } => {
                write!(
                    f,
                    "tail_right(cut {}, period {}, {pattern})",
                    R(cut),
                    R(period)
                )
            }
            SetExpr::Interior(k, s) => write!(f, "interior({k}, {s})"),
            SetExpr::Closure(k, s) => write!(f, "closure({k}, {s})"),
            SetExpr::Affine { a, b, set } => write!(f, "affine({}, {}, {set})", R(a), R(b)),
            SetExpr::Ref(n) => f.write_str(n),
        }
    }
}

struct Range<'a>(&'a IndexRange);

impl Display for Range<'_> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self.0 {
            IndexRange::All => f.write_str("all"),
            IndexRange::From(a) => write!(f, "from {a}"),
            IndexRange::Upto(b) => write!(f, "upto {b}"),
            IndexRange::Finite(a, b) => write!(f, "{a}..{b}"),
        }
    }
}

impl Display for FamilyExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            FamilyExpr::Finite(v) => write!(f, "finite({})", join(v)),
            FamilyExpr::Periodic {
                seed,
                period,
                range,
            } => {
                write!(
                    f,
                    "periodic(seed {seed}, period {}, {})",
                    R(period),
                    Range(range)
                )
            }
            FamilyExpr::Split { cut, left, right } => {
                write!(f, "split(cut {}, {left}, {right})", R(cut))
            }
            FamilyExpr::Restrict(fam, s) => write!(f, "restrict({fam}, {s})"),
            FamilyExpr::Join(v) => write!(f, "join({})", join(v)),
            FamilyExpr::Accumulating {
                start,
                limit,
                shape,
            } => {
                let shape = match shape {
                    AccShape::Rays => "rays",
                    AccShape::OpenTiles => "open_tiles",
                    AccShape::HalfOpenTiles => "half_open_tiles",
                };
                write!(
                    f,
                    "accumulating(start {}, limit {}, {shape})",
                    R(start),
                    E(limit)
                )
            }
            FamilyExpr::Ref(n) => f.write_str(n),
        }
    }
}

impl Display for MetricExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            MetricExpr::Builtin(m) => f.write_str(m.as_str()),
            MetricExpr::Conj(m) => write!(f, "conj({m})"),
            MetricExpr::Float(m) => write!(f, "float({m})"),
            MetricExpr::Ref(n) => f.write_str(n),
        }
    }
}

fn schema_end(b: &SchemaBound, upper: bool) -> String {
    match (&b.affine, upper) {
        (Some((a, c)), _) => format!("{} {}:{}", oc(b.closed), R(a), R(c)),
        (None, false) => "open -inf".into(),
        (None, true) => "open +inf".into(),
    }
}

impl Display for BornExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            BornExpr::FB => f.write_str("FB"),
            BornExpr::All => f.write_str("ALL"),
            BornExpr::NatBounded => f.write_str("CB_nat"),
            BornExpr::UB => f.write_str("UB"),
            BornExpr::LB => f.write_str("LB"),
            BornExpr::ReverseWellOrdered => f.write_str("UB_rwo"),
            BornExpr::Bounded(m) => write!(f, "bounded({m})"),
            BornExpr::Schema { from, pieces } => {
                write!(f, "schema(from {from}")?;
                for (lo, hi) in pieces {
                    write!(
                        f,
                        ", piece({}, {})",
                        schema_end(lo, false),
                        schema_end(hi, true)
                    )?;
                }
                f.write_str(")")
            }
            BornExpr::Ref(n) => f.write_str(n),
        }
    }
}

impl Display for MapExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            MapExpr::Affine(a, b) => write!(f, "affine({}, {})", R(a), R(b)),
            MapExpr::Piecewise { breaks, pieces } => {
                let b: Vec<String> = breaks.iter().map(|x| R(x).to_string()).collect();
                write!(f, "piecewise(breaks({})", b.join(", "))?;
                for (s, c) in pieces {
                    write!(f, ", piece({}, {})", R(s), R(c))?;
                }
                f.write_str(")")
            }
            MapExpr::Ref(n) => f.write_str(n),
        }
    }
}

impl Display for Decl {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Decl::Set(n, s) => write!(f, "set {n} = {s}"),
            Decl::Family(n, x) => write!(f, "family {n} = {x}"),
            Decl::Metric(n, x) => write!(f, "metric {n} = {x}"),
            Decl::Bornology(n, x) => write!(f, "bornology {n} = {x}"),
            Decl::Map(n, x) => write!(f, "map {n} = {x}"),
        }
    }
}

impl Display for Query {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Query::Show(s) => write!(f, "show {s}"),
            Query::Boundedness(s) => write!(f, "boundedness {s}"),
            Query::Contains(s, x) => write!(f, "contains {s} at {}", R(x)),
            Query::Subset(a, b) => write!(f, "subset {a} {b}"),
            Query::Equal(a, b) => write!(f, "equal {a} {b}"),
            Query::IsOpen(k, s) => write!(f, "is_open {k} {s}"),
            Query::Eval(m, x, y) => write!(f, "eval {m} {} {}", R(x), R(y)),
            Query::Ball { metric, at, radius } => {
                write!(f, "ball {metric} at {} radius {}", R(at), R(radius))
            }
            Query::Nbhd {
                metric,
                set,
                radius,
            } => write!(f, "nbhd {metric} {set} radius {}", R(radius)),
            Query::EssFinite(fam, s) => write!(f, "ess_finite {fam} on {s}"),
            Query::LocallyEssFinite(fam) => write!(f, "locally_ess_finite {fam}"),
            Query::Op(l, s) => write!(f, "op {l} {s}"),
            Query::Cov(l, fam) => write!(f, "cov {l} {fam}"),
            Query::Class(c, l, s) => {
                let c = match c {
                    LineClass::Sm => "sm",
                    LineClass::Cb => "cb",
                    LineClass::Acb => "acb",
                };
                write!(f, "{c} {l} {s}")
            }
            Query::Pt(l) => write!(f, "pt {l}"),
            Query::Member(b, s) => write!(f, "member {b} {s}"),
            Query::BaseIndex(b, s) => write!(f, "base_index {b} {s}"),
            Query::Proper { born, t1, t2, upto } => {
                write!(f, "proper {born} {t1} {t2} upto {upto}")
            }
            Query::Base(b, k) => write!(f, "base {b} {k}"),
            Query::Chain {
                metric,
                born,
                delta,
                upto,
            } => {
                write!(f, "chain {metric} {born} delta {} upto {upto}", R(delta))
            }
            Query::UniformChain { metric, born, upto } => {
                write!(f, "uniform_chain {metric} {born} upto {upto}")
            }
            Query::ChainSearch { metric, born, upto } => {
                write!(f, "chain_search {metric} {born} upto {upto}")
            }
            Query::Metrizable { line, born, metric } => {
                write!(f, "metrizable {line} {born} {metric}")
            }
            Query::StrictCont {
                map,
                src,
                dst,
                battery,
            } => {
                write!(f, "strict_cont {map} {src} {dst} with {}", join(battery))
            }
            Query::Initial { set, pairs } => {
                let p: Vec<String> = pairs.iter().map(|(m, b)| format!("{m}:{b}")).collect();
                write!(f, "initial {set} with {}", p.join(", "))
            }
            Query::Generated { target, psi, depth } => {
                write!(f, "generated {target} from {} depth {depth}", join(psi))
            }
            Query::Oracle {
                family,
                set,
                window,
                max,
            } => {
                write!(
                    f,
                    "oracle {family} on {set} window {}..{} max {max}",
                    window.0, window.1
                )
            }
        }
    }
}

/// Canonical text of a document; `parse` reads it back to an equal document.
pub fn print(doc: &QueryDoc) -> String {
    let mut out = format!("version {}\n", doc.version);
    for d in &doc.decls {
        out.push_str(&d.to_string());
        out.push('\n');
    }
    for q in &doc.queries {
        out.push_str(&format!("query {q}\n"));
    }
    out
}
