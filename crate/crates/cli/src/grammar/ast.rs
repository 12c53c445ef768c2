use gts_core::covers::{AccShape, IndexRange};
use gts_core::lines::LineId;
use gts_core::qmetric::MetricName;
use gts_core::{ExtRat, Rat, TopologyKind};

/// Interval end: `closed q`, `open q`, `open -inf`, `open +inf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub closed: bool,
    pub value: ExtRat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetExpr {
    Empty,
    Reals,
    Point(Rat),
    Interval(Bound, Bound),
    Union(Vec<SetExpr>),
    Intersect(Vec<SetExpr>),
    Complement(Box<SetExpr>),
    Difference(Box<SetExpr>, Box<SetExpr>),
    Periodic {
        period: Rat,
        pattern: Box<SetExpr>,
    },
    TailLeft {
        cut: Rat,
        period: Rat,
        pattern: Box<SetExpr>,
    },
    TailRight {
        cut: Rat,
        period: Rat,
        pattern: Box<SetExpr>,
    },
    Interior(TopologyKind, Box<SetExpr>),
    Closure(TopologyKind, Box<SetExpr>),
    Affine {
        a: Rat,
        b: Rat,
        set: Box<SetExpr>,
    },
    Ref(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyExpr {
    Finite(Vec<SetExpr>),
    Periodic {
        seed: SetExpr,
        period: Rat,
        range: IndexRange,
    },
    Split {
        cut: Rat,
        left: Box<FamilyExpr>,
        right: Box<FamilyExpr>,
    },
    Restrict(Box<FamilyExpr>, SetExpr),
    Join(Vec<FamilyExpr>),
    Accumulating {
        start: Rat,
        limit: ExtRat,
        shape: AccShape,
    },
    Ref(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetricExpr {
    Builtin(MetricName),
    Conj(Box<MetricExpr>),
    /// The `e^x` damping map evaluated in floating point.
    Float(Box<MetricExpr>),
    Ref(String),
}

/// Schema end `alpha:beta` standing for `alpha + beta*n`, or an infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaBound {
    pub closed: bool,
    /// `None` for an infinite end.
    pub affine: Option<(Rat, Rat)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BornExpr {
    FB,
    All,
    NatBounded,
    UB,
    LB,
    ReverseWellOrdered,
    Bounded(MetricExpr),
    Schema {
        from: u64,
        pieces: Vec<(SchemaBound, SchemaBound)>,
    },
    Ref(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapExpr {
    Affine(Rat, Rat),
    Piecewise {
        breaks: Vec<Rat>,
        pieces: Vec<(Rat, Rat)>,
    },
    Ref(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Set(String, SetExpr),
    Family(String, FamilyExpr),
    Metric(String, MetricExpr),
    Bornology(String, BornExpr),
    Map(String, MapExpr),
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Set(n, _)
            | Decl::Family(n, _)
            | Decl::Metric(n, _)
            | Decl::Bornology(n, _)
            | Decl::Map(n, _) => n,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineClass {
    Sm,
    Cb,
    Acb,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Show(SetExpr),
    Boundedness(SetExpr),
    Contains(SetExpr, Rat),
    Subset(SetExpr, SetExpr),
    Equal(SetExpr, SetExpr),
    IsOpen(TopologyKind, SetExpr),
    Eval(MetricExpr, Rat, Rat),
    Ball {
        metric: MetricExpr,
        at: Rat,
        radius: Rat,
    },
    Nbhd {
        metric: MetricExpr,
        set: SetExpr,
        radius: Rat,
    },
    EssFinite(FamilyExpr, SetExpr),
    LocallyEssFinite(FamilyExpr),
    Op(LineId, SetExpr),
    Cov(LineId, FamilyExpr),
    Class(LineClass, LineId, SetExpr),
    Pt(LineId),
    Member(BornExpr, SetExpr),
    BaseIndex(BornExpr, SetExpr),
    Proper {
        born: BornExpr,
        t1: TopologyKind,
        t2: TopologyKind,
        upto: u64,
    },
    Base(BornExpr, TopologyKind),
    Chain {
        metric: MetricExpr,
        born: BornExpr,
        delta: Rat,
        upto: u64,
    },
    UniformChain {
        metric: MetricExpr,
        born: BornExpr,
        upto: u64,
    },
    ChainSearch {
        metric: MetricExpr,
        born: BornExpr,
        upto: u64,
    },
    Metrizable {
        line: LineId,
        born: BornExpr,
        metric: MetricExpr,
    },
    StrictCont {
        map: MapExpr,
        src: LineId,
        dst: LineId,
        battery: Vec<FamilyExpr>,
    },
    Initial {
        set: SetExpr,
        pairs: Vec<(MapExpr, BornExpr)>,
    },
    Generated {
        target: FamilyExpr,
        psi: Vec<FamilyExpr>,
        depth: u64,
    },
    Oracle {
        family: FamilyExpr,
        set: SetExpr,
        window: (i64, i64),
        max: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryDoc {
    pub version: u32,
    pub decls: Vec<Decl>,
    pub queries: Vec<Query>,
}

impl Default for QueryDoc {
    fn default() -> QueryDoc {
        QueryDoc {
            version: 1,
            decls: Vec::new(),
            queries: Vec::new(),
        }
    }
}
