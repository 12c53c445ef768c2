//! Report records and their two renderings.

use std::fmt::Write;

pub const SCHEMA: &str = "gts-report/1";
pub const ENGINE: &str = concat!("gts ", env!("CARGO_PKG_VERSION"));

/// Index and depth limits applied during a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest chain index checked.
    pub chain: u64,
    /// Largest generation depth.
    pub depth: u64,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            chain: 64,
            depth: 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// A query evaluated.
    Ok,
    /// A suite entry matched its expectation.
    Pass,
    Fail,
    /// A query could not be evaluated.
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }

    pub fn failed(self) -> bool {
        matches!(self, Status::Fail | Status::Error)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub id: String,
    pub status: Status,
    /// Where the expectation comes from, for suite entries.
    pub anchor: Option<String>,
    /// The query text or the checked statement.
    pub subject: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    /// `eval` or `corpus`.
    pub kind: &'static str,
    pub caps: Caps,
    pub records: Vec<Record>,
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl Report {
    pub fn new(kind: &'static str, caps: Caps) -> Report {
        Report {
            kind,
            caps,
            records: Vec::new(),
        }
    }

    pub fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.status == s).count()
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| r.status.failed()).count()
    }

    pub fn failed_records(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status.failed())
    }

    /// Line-delimited `key=value` text; field order is fixed.
    pub fn machine(&self) -> String {
        let mut out = String::new();
        writeln!(out, "schema={SCHEMA}").unwrap();
        writeln!(out, "engine={}", quote(ENGINE)).unwrap();
        writeln!(out, "kind={}", self.kind).unwrap();
        writeln!(
            out,
            "caps chain={} depth={}",
            self.caps.chain, self.caps.depth
        )
        .unwrap();
        for r in &self.records {
            write!(out, "record id={} status={}", r.id, r.status.as_str()).unwrap();
            if let Some(a) = &r.anchor {
                write!(out, " anchor={}", quote(a)).unwrap();
            }
            writeln!(
                out,
                " subject={} result={}",
                quote(&r.subject),
                quote(&r.result)
            )
            .unwrap();
        }
        writeln!(
            out,
            "summary total={} ok={} pass={} fail={} error={}",
            self.records.len(),
            self.count(Status::Ok),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error)
        )
        .unwrap();
        out
    }

    /// Plain-text table followed by a one-line summary.
    pub fn human(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{} report ({ENGINE}, chain cap {}, depth cap {})",
            self.kind, self.caps.chain, self.caps.depth
        )
        .unwrap();
        let w_id = self
            .records
            .iter()
            .map(|r| r.id.len())
            .max()
            .unwrap_or(2)
            .max(2);
        writeln!(out, "{:<w_id$}  {:<6}  subject => result", "id", "status").unwrap();
        for r in &self.records {
            writeln!(
                out,
                "{:<w_id$}  {:<6}  {} => {}",
                r.id,
                r.status.as_str(),
                r.subject,
                r.result
            )
            .unwrap();
            if let (Some(a), true) = (&r.anchor, r.status.failed()) {
                writeln!(out, "{:<w_id$}  {:<6}  anchor: {a}", "", "").unwrap();
            }
        }
        writeln!(
            out,
            "{} records: {} ok, {} pass, {} fail, {} error",
            self.records.len(),
            self.count(Status::Ok),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error)
        )
        .unwrap();
        out
    }
}
