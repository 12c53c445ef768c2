use gts_cli::grammar::{parse, print, Query, SetExpr};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn statements_split_on_semicolons() {
    let doc =
        parse("set A = union(interval(closed 0, open 1), point 2); query boundedness A").unwrap();
    assert_eq!(doc.decls.len(), 1);
    assert_eq!(doc.decls[0].name(), "A");
    assert!(matches!(doc.queries[..], [Query::Boundedness(SetExpr::Ref(ref n))] if n == "A"));
}

#[test]
fn ball_query_parses() {
    let doc = parse("query ball rho_S at 0 radius 1/2").unwrap();
    assert!(matches!(doc.queries[..], [Query::Ball { .. }]));
}

#[test]
fn unknown_identifier_has_position() {
    let err = parse("set A = point 0\n\nquery show union(A, B)").unwrap_err();
    assert_eq!((err.line, err.col), (3, 21));
    assert!(err.msg.contains("unknown identifier `B`"), "{err}");
    assert!(err.to_string().starts_with("line 3, column 21: "));
}

#[test]
fn names_must_be_declared_before_use() {
    assert!(parse("set A = B\nset B = point 0").is_err());
    // a declaration cannot refer to itself
    assert!(parse("set A = complement(A)").is_err());
}

#[test]
fn kinds_are_checked() {
    let err = parse("family F = finite(point 0)\nquery show F").unwrap_err();
    assert!(err.msg.contains("`F` is a family, expected a set"), "{err}");
}

#[test]
fn duplicate_and_reserved_names_rejected() {
    assert!(parse("set A = empty\nset A = reals").is_err());
    assert!(parse("set d_n = empty").is_err());
    assert!(parse("set UB = empty").is_err());
}

#[test]
fn decimals_rejected() {
    let err = parse("query show point 0.5").unwrap_err();
    assert_eq!(err.line, 1);
}

#[test]
fn rationals_normalized_silently() {
    let a = parse("query show point 2/4").unwrap();
    let b = parse("query show point 1/2").unwrap();
    assert_eq!(a, b);
    assert_eq!(print(&a), "version 1\nquery show point 1/2\n");
}

#[test]
fn version_header() {
    assert!(parse("version 1\nquery show empty").is_ok());
    assert!(parse("version 2\nquery show empty").is_err());
    assert!(parse("query show empty\nversion 1").is_err());
}

#[test]
fn comments_and_blank_lines() {
    let doc = parse("# header\n\nset A = point 0 # trailing\n\n").unwrap();
    assert_eq!(doc.decls.len(), 1);
    assert!(doc.queries.is_empty());
}

#[test]
fn fixture_round_trips() {
    let text = include_str!("fixtures/basics.gts");
    let doc = parse(text).unwrap();
    assert_eq!(parse(&print(&doc)).unwrap(), doc);
}

/// Random well-scoped documents, written as text.
struct Gen {
    r: ChaCha8Rng,
    sets: Vec<String>,
    families: Vec<String>,
    metrics: Vec<String>,
    borns: Vec<String>,
    maps: Vec<String>,
}

const TOPOS: [&str; 6] = ["nat", "upper", "lower", "sorg_r", "sorg_l", "discrete"];
const METRICS: [&str; 5] = ["d_n", "d_n_plus", "rho_S", "rho_0_1", "rho_S_minus"];
const LINES: [&str; 6] = [
    "standard/ut",
    "standard/lom",
    "sorgenfrey/st",
    "uu",
    "ul",
    "uf",
];

impl Gen {
    fn rat(&mut self) -> String {
        let n: i64 = self.r.gen_range(-40..40);
        match self.r.gen_range(0..3) {
            0 => n.to_string(),
            _ => format!("{n}/{}", self.r.gen_range(1..9)),
        }
    }

    fn pos(&mut self) -> String {
        format!("{}/{}", self.r.gen_range(1..20), self.r.gen_range(1..5))
    }

    fn bound(&mut self, neg: bool) -> String {
        match self.r.gen_range(0..5) {
            0 => format!("open {}", if neg { "-inf" } else { "+inf" }),
            1 | 2 => format!("open {}", self.rat()),
            _ => format!("closed {}", self.rat()),
        }
    }

    fn pick(&mut self, v: &[&'static str]) -> &'static str {
        v.choose(&mut self.r).unwrap()
    }

    fn named(&mut self, which: fn(&Gen) -> &Vec<String>) -> Option<String> {
        which(self).clone().choose(&mut self.r).cloned()
    }

    fn set(&mut self, depth: u32) -> String {
        let leaf = depth == 0 || self.r.gen_bool(0.3);
        if leaf {
            return match self.r.gen_range(0..5) {
                0 => "empty".into(),
                1 => "reals".into(),
                2 => format!("point {}", self.rat()),
                3 => self.named(|g| &g.sets).unwrap_or_else(|| "empty".into()),
                _ => format!("interval({}, {})", self.bound(true), self.bound(false)),
            };
        }
        let d = depth - 1;
        match self.r.gen_range(0..9) {
            0 => format!("union({}, {})", self.set(d), self.set(d)),
            1 => format!(
                "intersect({}, {}, {})",
                self.set(d),
                self.set(d),
                self.set(d)
            ),
            2 => format!("complement({})", self.set(d)),
            3 => format!("difference({}, {})", self.set(d), self.set(d)),
            4 => format!("periodic(period {}, {})", self.pos(), self.set(d)),
            5 => format!(
                "tail_left(cut {}, period {}, {})",
                self.rat(),
                self.pos(),
                self.set(d)
            ),
            6 => format!(
                "tail_right(cut {}, period {}, {})",
                self.rat(),
                self.pos(),
                self.set(d)
            ),
            7 => {
                let t = self.pick(&TOPOS);
                let op = self.pick(&["interior", "closure"]);
                format!("{op}({t}, {})", self.set(d))
            }
            _ => format!("affine({}, {}, {})", self.rat(), self.rat(), self.set(d)),
        }
    }

    fn range(&mut self) -> String {
        match self.r.gen_range(0..4) {
            0 => "all".into(),
            1 => format!("from {}", self.r.gen_range(-5..5)),
            2 => format!("upto {}", self.r.gen_range(-5..5)),
            _ => format!("{}..{}", self.r.gen_range(-5..0), self.r.gen_range(0..5)),
        }
    }

    fn family(&mut self, depth: u32) -> String {
        let d = depth.saturating_sub(1);
        match self.r.gen_range(0..if depth == 0 { 4 } else { 7 }) {
            0 => format!("finite({}, {})", self.set(1), self.set(1)),
            1 => format!(
                "periodic(seed {}, period {}, {})",
                self.set(1),
                self.pos(),
                self.range()
            ),
            2 => {
                let shape = self.pick(&["rays", "open_tiles", "half_open_tiles"]);
                let limit = if self.r.gen() {
                    "+inf".to_string()
                } else {
                    self.rat()
                };
                format!("accumulating(start {}, limit {limit}, {shape})", self.rat())
            }
            3 => self
                .named(|g| &g.families)
                .unwrap_or_else(|| "finite()".into()),
            4 => format!(
                "split(cut {}, {}, {})",
                self.rat(),
                self.family(d),
                self.family(d)
            ),
            5 => format!("restrict({}, {})", self.family(d), self.set(1)),
            _ => format!("join({}, {})", self.family(d), self.family(d)),
        }
    }

    fn metric(&mut self, depth: u32) -> String {
        match self.r.gen_range(0..if depth == 0 { 2 } else { 4 }) {
            0 => self.pick(&METRICS).into(),
            1 => self.named(|g| &g.metrics).unwrap_or_else(|| "rho_u".into()),
            2 => format!("conj({})", self.metric(depth - 1)),
            _ => format!("float({})", self.metric(depth - 1)),
        }
    }

    fn schema_end(&mut self) -> String {
        match self.r.gen_range(0..4) {
            0 => self.pick(&["open -inf", "open +inf"]).into(),
            1 => format!("open {}:{}", self.rat(), self.rat()),
            _ => format!("closed {}:{}", self.rat(), self.rat()),
        }
    }

    fn born(&mut self) -> String {
        match self.r.gen_range(0..4) {
            0 => self
                .pick(&["FB", "ALL", "CB_nat", "UB", "LB", "UB_rwo"])
                .into(),
            1 => format!("bounded({})", self.metric(1)),
            2 => self.named(|g| &g.borns).unwrap_or_else(|| "FB".into()),
            _ => {
                let pieces: Vec<String> = (0..self.r.gen_range(0..3))
                    .map(|_| format!(", piece({}, {})", self.schema_end(), self.schema_end()))
                    .collect();
                format!("schema(from {}{})", self.r.gen_range(0..4), pieces.concat())
            }
        }
    }

    fn map(&mut self) -> String {
        match self.r.gen_range(0..3) {
            0 => format!("affine({}, {})", self.rat(), self.rat()),
            1 => self
                .named(|g| &g.maps)
                .unwrap_or_else(|| "affine(1, 0)".into()),
            _ => {
                let k = self.r.gen_range(0..3);
                let breaks: Vec<String> = (0..k).map(|_| self.rat()).collect();
                let pieces: Vec<String> = (0..=k)
                    .map(|_| format!(", piece({}, {})", self.rat(), self.rat()))
                    .collect();
                format!(
                    "piecewise(breaks({}){})",
                    breaks.join(", "),
                    pieces.concat()
                )
            }
        }
    }

    fn query(&mut self) -> String {
        match self.r.gen_range(0..20) {
            0 => format!("show {}", self.set(3)),
            1 => format!("contains {} at {}", self.set(2), self.rat()),
            2 => format!("equal {} {}", self.set(2), self.set(2)),
            3 => format!("is_open {} {}", self.pick(&TOPOS), self.set(2)),
            4 => format!("eval {} {} {}", self.metric(1), self.rat(), self.rat()),
            5 => format!(
                "ball {} at {} radius {}",
                self.metric(1),
                self.rat(),
                self.pos()
            ),
            6 => format!("ess_finite {} on {}", self.family(2), self.set(2)),
            7 => format!("locally_ess_finite {}", self.family(2)),
            8 => format!("cov {} {}", self.pick(&LINES), self.family(1)),
            9 => format!(
                "{} {} {}",
                self.pick(&["op", "sm", "cb", "acb"]),
                self.pick(&LINES),
                self.set(2)
            ),
            10 => format!("pt {}", self.pick(&LINES)),
            11 => format!("member {} {}", self.born(), self.set(2)),
            12 => format!(
                "proper {} {} {} upto {}",
                self.born(),
                self.pick(&TOPOS),
                self.pick(&TOPOS),
                self.r.gen_range(0..20)
            ),
            13 => format!(
                "chain {} {} delta {} upto {}",
                self.metric(1),
                self.born(),
                self.pos(),
                self.r.gen_range(0..70)
            ),
            14 => format!("uniform_chain {} {} upto 8", self.metric(1), self.born()),
            15 => format!(
                "metrizable {} {} {}",
                self.pick(&LINES),
                self.born(),
                self.metric(1)
            ),
            16 => format!(
                "strict_cont {} {} {} with {}, {}",
                self.map(),
                self.pick(&LINES),
                self.pick(&LINES),
                self.family(1),
                self.family(1)
            ),
            17 => format!(
                "initial {} with {}:{}, {}:{}",
                self.set(2),
                self.map(),
                self.born(),
                self.map(),
                self.born()
            ),
            18 => format!(
                "generated {} from {} depth {}",
                self.family(1),
                self.family(1),
                self.r.gen_range(0..9)
            ),
            _ => format!(
                "oracle {} on {} window {}..{} max {}",
                self.family(1),
                self.set(2),
                self.r.gen_range(-9..0),
                self.r.gen_range(0..9),
                self.r.gen_range(0..9)
            ),
        }
    }

    fn doc(seed: u64) -> String {
        let mut g = Gen {
            r: ChaCha8Rng::seed_from_u64(seed),
            sets: vec![],
            families: vec![],
            metrics: vec![],
            borns: vec![],
            maps: vec![],
        };
        let mut out = String::new();
        if g.r.gen() {
            out.push_str("version 1\n");
        }
        for i in 0..g.r.gen_range(0..12) {
            let line = match g.r.gen_range(0..6) {
                0 | 1 => {
                    let body = g.set(3);
                    g.sets.push(format!("s{i}"));
                    format!("set s{i} = {body}")
                }
                2 => {
                    let body = g.family(2);
                    g.families.push(format!("f{i}"));
                    format!("family f{i} = {body}")
                }
                3 => {
                    let body = g.metric(2);
                    g.metrics.push(format!("m{i}"));
                    format!("metric m{i} = {body}")
                }
                4 => {
                    let body = g.born();
                    g.borns.push(format!("b{i}"));
                    format!("bornology b{i} = {body}")
                }
                _ => {
                    let body = g.map();
                    g.maps.push(format!("p{i}"));
                    format!("map p{i} = {body}")
                }
            };
            out.push_str(&line);
            out.push('\n');
            for _ in 0..g.r.gen_range(0..3) {
                let q = g.query();
                out.push_str(&format!("query {q}\n"));
            }
        }
        out
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn print_then_parse_is_identity(seed in any::<u64>()) {
        let text = Gen::doc(seed);
        let doc = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        let printed = print(&doc);
        prop_assert_eq!(parse(&printed).map_err(|e| TestCaseError::fail(format!("{e}\n{printed}")))?, doc);
        prop_assert_eq!(print(&parse(&printed).unwrap()), printed);
    }
}

#[test]
fn generated_docs_are_substantial() {
    let decls: usize = (0..64)
        .map(|s| parse(&Gen::doc(s)).unwrap().decls.len())
        .sum();
    let queries: usize = (0..64)
        .map(|s| parse(&Gen::doc(s)).unwrap().queries.len())
        .sum();
    assert!(
        decls > 200 && queries > 200,
        "{decls} declarations, {queries} queries"
    );
}
