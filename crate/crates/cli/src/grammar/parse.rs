use std::collections::HashMap;

use gts_core::covers::{AccShape, IndexRange};
use gts_core::lines::LineId;
use gts_core::qmetric::MetricName;
use gts_core::{ExtRat, Rat, TopologyKind};

use super::ast::*;
use super::lex::{lex, ParseError, Spanned, Tok};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Set,
    Family,
    Metric,
    Bornology,
    Map,
}

impl Kind {
    fn noun(self) -> &'static str {
        match self {
            Kind::Set => "a set",
            Kind::Family => "a family",
            Kind::Metric => "a metric",
            Kind::Bornology => "a bornology",
            Kind::Map => "a map",
        }
    }
}

/// Words with a fixed meaning somewhere in the grammar; declarations may not
/// shadow them.
const RESERVED: &[&str] = &[
    "version",
    "set",
    "family",
    "metric",
    "bornology",
    "map",
    "query",
    "empty",
    "reals",
    "point",
    "interval",
    "closed",
    "open",
    "union",
    "intersect",
    "complement",
    "difference",
    "periodic",
    "tail_left",
    "tail_right",
    "interior",
    "closure",
    "affine",
    "finite",
    "split",
    "restrict",
    "join",
    "accumulating",
    "rays",
    "open_tiles",
    "half_open_tiles",
    "seed",
    "period",
    "cut",
    "start",
    "limit",
    "all",
    "from",
    "upto",
    "conj",
    "float",
    "FB",
    "ALL",
    "CB_nat",
    "UB",
    "LB",
    "UB_rwo",
    "bounded",
    "schema",
    "piece",
    "piecewise",
    "breaks",
    "at",
    "radius",
    "on",
    "with",
    "delta",
    "depth",
    "window",
    "max",
];

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    scope: HashMap<String, Kind>,
}

type P<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn err_here<T>(&self, msg: impl Into<String>) -> P<T> {
        let s = &self.toks[self.pos];
        Err(ParseError {
            line: s.line,
            col: s.col,
            msg: msg.into(),
        })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> P<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.err_here(format!("expected {want}, found {}", self.peek()))
        }
    }

    fn at_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == w)
    }

    fn word(&mut self, w: &str) -> P<()> {
        if self.at_word(w) {
            self.bump();
            Ok(())
        } else {
            self.err_here(format!("expected `{w}`, found {}", self.peek()))
        }
    }

    fn ident(&mut self) -> P<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            t => self.err_here(format!("expected an identifier, found {t}")),
        }
    }

    fn rat(&mut self) -> P<Rat> {
        match self.peek().clone() {
            Tok::Num(r) => {
                self.bump();
                Ok(r)
            }
            t => self.err_here(format!("expected a rational, found {t}")),
        }
    }

    fn int(&mut self) -> P<i64> {
        match self.peek().clone() {
            Tok::Num(r) if r.is_integer() => match i64::try_from(*r.numer()) {
                Ok(k) => {
                    self.bump();
                    Ok(k)
                }
                Err(_) => self.err_here("integer out of range"),
            },
            t => self.err_here(format!("expected an integer, found {t}")),
        }
    }

    fn nat(&mut self) -> P<u64> {
        match self.peek().clone() {
            Tok::Num(r) if r.is_integer() && *r.numer() >= 0 => match u64::try_from(*r.numer()) {
                Ok(k) => {
                    self.bump();
                    Ok(k)
                }
                Err(_) => self.err_here("integer out of range"),
            },
            t => self.err_here(format!("expected a natural number, found {t}")),
        }
    }

    fn ext(&mut self) -> P<ExtRat> {
        match self.peek() {
            Tok::NegInf => {
                self.bump();
                Ok(ExtRat::NegInf)
            }
            Tok::PosInf => {
                self.bump();
                Ok(ExtRat::PosInf)
            }
            _ => Ok(ExtRat::Fin(self.rat()?)),
        }
    }

    /// Comma-separated items inside parentheses; the opening one is consumed here.
    fn list<T>(&mut self, item: impl Fn(&mut Parser) -> P<T>) -> P<Vec<T>> {
        self.expect(Tok::LParen)?;
        let mut out = Vec::new();
        if *self.peek() == Tok::RParen {
            self.bump();
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            match self.bump() {
                Tok::Comma => continue,
                Tok::RParen => return Ok(out),
                t => {
                    self.pos -= 1;
                    return self.err_here(format!("expected `,` or `)`, found {t}"));
                }
            }
        }
    }

    fn reference(&mut self, want: Kind) -> P<String> {
        let name = self.ident()?;
        match self.scope.get(&name) {
            Some(k) if *k == want => Ok(name),
            Some(k) => {
                self.pos -= 1;
                self.err_here(format!(
                    "`{name}` is {}, expected {}",
                    k.noun(),
                    want.noun()
                ))
            }
            None => {
                self.pos -= 1;
                self.err_here(format!("unknown identifier `{name}`"))
            }
        }
    }

    fn topology(&mut self) -> P<TopologyKind> {
        let name = self.ident()?;
        name.parse().or_else(|_| {
            self.pos -= 1;
            self.err_here(format!("unknown topology `{name}`"))
        })
    }

    fn line(&mut self) -> P<LineId> {
        let name = self.ident()?;
        name.parse().or_else(|_| {
            self.pos -= 1;
            self.err_here(format!("unknown line `{name}`"))
        })
    }

    fn bound(&mut self) -> P<Bound> {
        let closed = if self.at_word("closed") {
            true
        } else if self.at_word("open") {
            false
        } else {
            return self.err_here(format!(
                "expected `closed` or `open`, found {}",
                self.peek()
            ));
        };
        self.bump();
        let value = self.ext()?;
        if closed && !matches!(value, ExtRat::Fin(_)) {
            self.pos -= 1;
            return self.err_here("an infinite end must be open");
        }
        Ok(Bound { closed, value })
    }

    fn set(&mut self) -> P<SetExpr> {
        let Tok::Ident(head) = self.peek().clone() else {
            return self.err_here(format!("expected a set, found {}", self.peek()));
        };
        let boxed = |p: &mut Parser| p.set().map(Box::new);
        match head.as_str() {
            "empty" => {
                self.bump();
                Ok(SetExpr::Empty)
            }
            "reals" => {
                self.bump();
                Ok(SetExpr::Reals)
            }
            "point" => {
                self.bump();
                Ok(SetExpr::Point(self.rat()?))
            }
            "interval" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let lo = self.bound()?;
                self.expect(Tok::Comma)?;
                let hi = self.bound()?;
                self.expect(Tok::RParen)?;
                Ok(SetExpr::Interval(lo, hi))
            }
            "union" | "intersect" => {
                self.bump();
                let parts = self.list(Parser::set)?;
                Ok(if head == "union" {
                    SetExpr::Union(parts)
                } else {
                    SetExpr::Intersect(parts)
                })
            }
            "complement" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let s = boxed(self)?;
                self.expect(Tok::RParen)?;
                Ok(SetExpr::Complement(s))
            }
            "difference" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let a = boxed(self)?;
                self.expect(Tok::Comma)?;
                let b = boxed(self)?;
                self.expect(Tok::RParen)?;
                Ok(SetExpr::Difference(a, b))
            }
            "periodic" => {
                self.bump();
                self.expect(Tok::LParen)?;
                self.word("period")?;
                let period = self.rat()?;
                self.expect(Tok::Comma)?;
                let pattern = boxed(self)?;
                self.expect(Tok::RParen)?;
                Ok(SetExpr::Periodic { period, pattern })
            }
            "tail_left" | "tail_right" => {
                self.bump();
                self.expect(Tok::LParen)?;
                self.word("cut")?;
                let cut = self.rat()?;
                self.expect(Tok::Comma)?;
                self.word("period")?;
                let period = self.rat()?;
                self.expect(Tok::Comma)?;
                let pattern = boxed(self)?;
                self.expect(Tok::RParen)?;
                Ok(if head == "tail_left" {
                    SetExpr::TailLeft {
                        cut,
                        period,
                        pattern,
                    }
                } else {
                    SetExpr::TailRight {
                        cut,
                        period,
                        pattern,
                    }
                })
            }
            "interior" | "closure" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let k = self.topology()?;
                self.expect(Tok::Comma)?;
                let s = boxed(self)?;
                self.expect(Tok::RParen)?;
                Ok(if head == "interior" {
                    SetExpr::Interior(k, s)
                } else {
                    SetExpr::Closure(k, s)
                })
            }
            "affine" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let a = self.rat()?;
                self.expect(Tok::Comma)?;
                let b = self.rat()?;
                self.expect(Tok::Comma)?;
                let set = boxed(self)?;
                self.expect(Tok::RParen)?;
                Ok(SetExpr::Affine { a, b, set })
            }
            _ => Ok(SetExpr::Ref(self.reference(Kind::Set)?)),
        }
    }

    fn range(&mut self) -> P<IndexRange> {
        if self.at_word("all") {
            self.bump();
            Ok(IndexRange::All)
        } else if self.at_word("from") {
            self.bump();
            Ok(IndexRange::From(self.int()?))
        } else if self.at_word("upto") {
            self.bump();
            Ok(IndexRange::Upto(self.int()?))
        } else {
            let a = self.int()?;
            self.expect(Tok::DotDot)?;
            let b = self.int()?;
            Ok(IndexRange::Finite(a, b))
        }
    }

    fn family(&mut self) -> P<FamilyExpr> {
        let Tok::Ident(head) = self.peek().clone() else {
            return self.err_here(format!("expected a family, found {}", self.peek()));
        };
        match head.as_str() {
            "finite" => {
                self.bump();
                Ok(FamilyExpr::Finite(self.list(Parser::set)?))
            }
            "periodic" => {
                self.bump();
                self.expect(Tok::LParen)?;
                self.word("seed")?;
                let seed = self.set()?;
                self.expect(Tok::Comma)?;
                self.word("period")?;
                let period = self.rat()?;
                self.expect(Tok::Comma)?;
                let range = self.range()?;
                self.expect(Tok::RParen)?;
                Ok(FamilyExpr::Periodic {
                    seed,
                    period,
                    range,
                })
            }
            "split" => {
                self.bump();
                self.expect(Tok::LParen)?;
                self.word("cut")?;
                let cut = self.rat()?;
                self.expect(Tok::Comma)?;
                let left = Box::new(self.family()?);
                self.expect(Tok::Comma)?;
                let right = Box::new(self.family()?);
                self.expect(Tok::RParen)?;
                Ok(FamilyExpr::Split { cut, left, right })
            }
            "restrict" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let f = Box::new(self.family()?);
                self.expect(Tok::Comma)?;
                let s = self.set()?;
                self.expect(Tok::RParen)?;
                Ok(FamilyExpr::Restrict(f, s))
            }
            "join" => {
                self.bump();
                Ok(FamilyExpr::Join(self.list(Parser::family)?))
            }
            "accumulating" => {
                self.bump();
                self.expect(Tok::LParen)?;
                self.word("start")?;
                let start = self.rat()?;
                self.expect(Tok::Comma)?;
                self.word("limit")?;
                let limit = self.ext()?;
                self.expect(Tok::Comma)?;
                let shape = match self.ident()?.as_str() {
                    "rays" => AccShape::Rays,
                    "open_tiles" => AccShape::OpenTiles,
                    "half_open_tiles" => AccShape::HalfOpenTiles,
                    s => {
                        self.pos -= 1;
                        return self.err_here(format!("unknown shape `{s}`"));
                    }
                };
                self.expect(Tok::RParen)?;
                Ok(FamilyExpr::Accumulating {
                    start,
                    limit,
                    shape,
                })
            }
            _ => Ok(FamilyExpr::Ref(self.reference(Kind::Family)?)),
        }
    }

    fn metric(&mut self) -> P<MetricExpr> {
        let Tok::Ident(head) = self.peek().clone() else {
            return self.err_here(format!("expected a metric, found {}", self.peek()));
        };
        if head == "conj" || head == "float" {
            self.bump();
            self.expect(Tok::LParen)?;
            let m = Box::new(self.metric()?);
            self.expect(Tok::RParen)?;
            return Ok(if head == "conj" {
                MetricExpr::Conj(m)
            } else {
                MetricExpr::Float(m)
            });
        }
        if self.scope.contains_key(&head) {
            return Ok(MetricExpr::Ref(self.reference(Kind::Metric)?));
        }
        match head.parse::<MetricName>() {
            Ok(m) => {
                self.bump();
                Ok(MetricExpr::Builtin(m))
            }
            Err(_) => self.err_here(format!("unknown identifier `{head}`")),
        }
    }

    fn schema_bound(&mut self) -> P<SchemaBound> {
        let closed = if self.at_word("closed") {
            true
        } else if self.at_word("open") {
            false
        } else {
            return self.err_here(format!(
                "expected `closed` or `open`, found {}",
                self.peek()
            ));
        };
        self.bump();
        if matches!(self.peek(), Tok::NegInf | Tok::PosInf) {
            if closed {
                return self.err_here("an infinite end must be open");
            }
            self.bump();
            return Ok(SchemaBound {
                closed,
                affine: None,
            });
        }
        let alpha = self.rat()?;
        self.expect(Tok::Colon)?;
        let beta = self.rat()?;
        Ok(SchemaBound {
            closed,
            affine: Some((alpha, beta)),
        })
    }

    fn born(&mut self) -> P<BornExpr> {
        let Tok::Ident(head) = self.peek().clone() else {
            return self.err_here(format!("expected a bornology, found {}", self.peek()));
        };
        let simple = match head.as_str() {
            "FB" => Some(BornExpr::FB),
            "ALL" => Some(BornExpr::All),
            "CB_nat" => Some(BornExpr::NatBounded),
            "UB" => Some(BornExpr::UB),
            "LB" => Some(BornExpr::LB),
            "UB_rwo" => Some(BornExpr::ReverseWellOrdered),
            _ => None,
        };
        if let Some(b) = simple {
            self.bump();
            return Ok(b);
        }
        match head.as_str() {
            "bounded" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let m = self.metric()?;
                self.expect(Tok::RParen)?;
                Ok(BornExpr::Bounded(m))
            }
            "schema" => {
                self.bump();
                self.expect(Tok::LParen)?;
                self.word("from")?;
                let from = self.nat()?;
                let mut pieces = Vec::new();
                while *self.peek() == Tok::Comma {
                    self.bump();
                    self.word("piece")?;
                    self.expect(Tok::LParen)?;
                    let lo = self.schema_bound()?;
                    self.expect(Tok::Comma)?;
                    let hi = self.schema_bound()?;
                    self.expect(Tok::RParen)?;
                    pieces.push((lo, hi));
                }
                self.expect(Tok::RParen)?;
                Ok(BornExpr::Schema { from, pieces })
            }
            _ => Ok(BornExpr::Ref(self.reference(Kind::Bornology)?)),
        }
    }

    fn map(&mut self) -> P<MapExpr> {
        if self.at_word("affine") {
            self.bump();
            self.expect(Tok::LParen)?;
            let a = self.rat()?;
            self.expect(Tok::Comma)?;
            let b = self.rat()?;
            self.expect(Tok::RParen)?;
            return Ok(MapExpr::Affine(a, b));
        }
        if self.at_word("piecewise") {
            self.bump();
            self.expect(Tok::LParen)?;
            self.word("breaks")?;
            let breaks = self.list(Parser::rat)?;
            let mut pieces = Vec::new();
            while *self.peek() == Tok::Comma {
                self.bump();
                self.word("piece")?;
                self.expect(Tok::LParen)?;
                let s = self.rat()?;
                self.expect(Tok::Comma)?;
                let c = self.rat()?;
                self.expect(Tok::RParen)?;
                pieces.push((s, c));
            }
            self.expect(Tok::RParen)?;
            return Ok(MapExpr::Piecewise { breaks, pieces });
        }
        Ok(MapExpr::Ref(self.reference(Kind::Map)?))
    }

    fn sep_list<T>(&mut self, item: impl Fn(&mut Parser) -> P<T>) -> P<Vec<T>> {
        let mut out = Vec::new();
        if matches!(self.peek(), Tok::Sep | Tok::Eof) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if *self.peek() != Tok::Comma {
                return Ok(out);
            }
            self.bump();
        }
    }

    fn query(&mut self) -> P<Query> {
        let verb = self.ident()?;
        let q = match verb.as_str() {
            "show" => Query::Show(self.set()?),
            "boundedness" => Query::Boundedness(self.set()?),
            "contains" => {
                let s = self.set()?;
                self.word("at")?;
                Query::Contains(s, self.rat()?)
            }
            "subset" => Query::Subset(self.set()?, self.set()?),
            "equal" => Query::Equal(self.set()?, self.set()?),
            "is_open" => Query::IsOpen(self.topology()?, self.set()?),
            "eval" => Query::Eval(self.metric()?, self.rat()?, self.rat()?),
            "ball" => {
                let metric = self.metric()?;
                self.word("at")?;
                let at = self.rat()?;
                self.word("radius")?;
                Query::Ball {
                    metric,
                    at,
                    radius: self.rat()?,
                }
            }
            "nbhd" => {
                let metric = self.metric()?;
                let set = self.set()?;
                self.word("radius")?;
                Query::Nbhd {
                    metric,
                    set,
                    radius: self.rat()?,
                }
            }
            "ess_finite" => {
                let f = self.family()?;
                self.word("on")?;
                Query::EssFinite(f, self.set()?)
            }
            "locally_ess_finite" => Query::LocallyEssFinite(self.family()?),
            "op" => Query::Op(self.line()?, self.set()?),
            "cov" => Query::Cov(self.line()?, self.family()?),
            "sm" => Query::Class(LineClass::Sm, self.line()?, self.set()?),
            "cb" => Query::Class(LineClass::Cb, self.line()?, self.set()?),
            "acb" => Query::Class(LineClass::Acb, self.line()?, self.set()?),
            "pt" => Query::Pt(self.line()?),
            "member" => Query::Member(self.born()?, self.set()?),
            "base_index" => Query::BaseIndex(self.born()?, self.set()?),
            "proper" => {
                let born = self.born()?;
                let t1 = self.topology()?;
                let t2 = self.topology()?;
                self.word("upto")?;
                Query::Proper {
                    born,
                    t1,
                    t2,
                    upto: self.nat()?,
                }
            }
            "base" => Query::Base(self.born()?, self.topology()?),
            "chain" => {
                let metric = self.metric()?;
                let born = self.born()?;
                self.word("delta")?;
                let delta = self.rat()?;
                if delta <= Rat::from_integer(0) {
                    self.pos -= 1;
                    return self.err_here("delta must be positive");
                }
                self.word("upto")?;
                Query::Chain {
                    metric,
                    born,
                    delta,
                    upto: self.nat()?,
                }
            }
            "uniform_chain" | "chain_search" => {
                let metric = self.metric()?;
                let born = self.born()?;
                self.word("upto")?;
                let upto = self.nat()?;
                if verb == "uniform_chain" {
                    Query::UniformChain { metric, born, upto }
                } else {
                    Query::ChainSearch { metric, born, upto }
                }
            }
            "metrizable" => Query::Metrizable {
                line: self.line()?,
                born: self.born()?,
                metric: self.metric()?,
            },
            "strict_cont" => {
                let map = self.map()?;
                let src = self.line()?;
                let dst = self.line()?;
                self.word("with")?;
                Query::StrictCont {
                    map,
                    src,
                    dst,
                    battery: self.sep_list(Parser::family)?,
                }
            }
            "initial" => {
                let set = self.set()?;
                self.word("with")?;
                let pairs = self.sep_list(|p| {
                    let m = p.map()?;
                    p.expect(Tok::Colon)?;
                    Ok((m, p.born()?))
                })?;
                Query::Initial { set, pairs }
            }
            "generated" => {
                let target = self.family()?;
                self.word("from")?;
                let psi = self.sep_list(Parser::family)?;
                self.word("depth")?;
                Query::Generated {
                    target,
                    psi,
                    depth: self.nat()?,
                }
            }
            "oracle" => {
                let family = self.family()?;
                self.word("on")?;
                let set = self.set()?;
                self.word("window")?;
                let a = self.int()?;
                self.expect(Tok::DotDot)?;
                let b = self.int()?;
                self.word("max")?;
                Query::Oracle {
                    family,
                    set,
                    window: (a, b),
                    max: self.nat()?,
                }
            }
            _ => {
                self.pos -= 1;
                return self.err_here(format!("unknown query `{verb}`"));
            }
        };
        Ok(q)
    }

    fn declare(&mut self) -> P<String> {
        let name = self.ident()?;
        let bad = if RESERVED.contains(&name.as_str()) || name.contains('/') {
            Some(format!("`{name}` is reserved"))
        } else if name.parse::<MetricName>().is_ok() || name.parse::<TopologyKind>().is_ok() {
            Some(format!("`{name}` names a built-in"))
        } else if self.scope.contains_key(&name) {
            Some(format!("duplicate identifier `{name}`"))
        } else {
            None
        };
        if let Some(msg) = bad {
            self.pos -= 1;
            return self.err_here(msg);
        }
        self.expect(Tok::Eq)?;
        Ok(name)
    }

    fn doc(&mut self) -> P<QueryDoc> {
        let mut doc = QueryDoc::default();
        let mut first = true;
        loop {
            while *self.peek() == Tok::Sep {
                self.bump();
            }
            if *self.peek() == Tok::Eof {
                return Ok(doc);
            }
            let head = self.ident()?;
            match head.as_str() {
                "version" => {
                    if !first {
                        self.pos -= 1;
                        return self.err_here("`version` must come first");
                    }
                    let v = self.nat()?;
                    if v != 1 {
                        self.pos -= 1;
                        return self.err_here(format!("unsupported version {v}"));
                    }
                    doc.version = 1;
                }
                "query" => doc.queries.push(self.query()?),
                "set" | "family" | "metric" | "bornology" | "map" => {
                    let kind = match head.as_str() {
                        "set" => Kind::Set,
                        "family" => Kind::Family,
                        "metric" => Kind::Metric,
                        "bornology" => Kind::Bornology,
                        _ => Kind::Map,
                    };
                    let name = self.declare()?;
                    let decl = match kind {
                        Kind::Set => Decl::Set(name.clone(), self.set()?),
                        Kind::Family => Decl::Family(name.clone(), self.family()?),
                        Kind::Metric => Decl::Metric(name.clone(), self.metric()?),
                        Kind::Bornology => Decl::Bornology(name.clone(), self.born()?),
                        Kind::Map => Decl::Map(name.clone(), self.map()?),
                    };
                    // registered after the body, so a declaration cannot mention itself
                    self.scope.insert(name, kind);
                    doc.decls.push(decl);
                }
                _ => {
                    self.pos -= 1;
                    return self
                        .err_here(format!("expected a declaration or `query`, found `{head}`"));
                }
            }
            first = false;
            if !matches!(self.peek(), Tok::Sep | Tok::Eof) {
                return self.err_here(format!("expected end of statement, found {}", self.peek()));
            }
        }
    }
}

/// Parses a query document. References must point at earlier declarations,
/// which keeps the reference graph acyclic.
pub fn parse(text: &str) -> Result<QueryDoc, ParseError> {
    let toks = lex(text)?;
    Parser {
        toks,
        pos: 0,
        scope: HashMap::new(),
    }
    .doc()
}
