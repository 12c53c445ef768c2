//! One line per acceptance criterion; exits non-zero if any fails. Runs
//! without the test harness so the lines are always printed.

mod support;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use gts_cli::report::Status;
use gts_cli::{corpus_verify, Caps, Report};
use gts_core::lines::probe_corpus;

struct Line {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn section(rep: &Report, prefix: &str) -> (usize, Vec<String>) {
    let recs: Vec<_> = rep
        .records
        .iter()
        .filter(|r| r.id.starts_with(prefix))
        .collect();
    let bad = recs
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{}: {}", r.id, r.result))
        .collect();
    (recs.len(), bad)
}

fn from_section(name: &'static str, rep: &Report, prefixes: &[&str], extra: &str) -> Line {
    let (mut total, mut bad) = (0, Vec::new());
    for p in prefixes {
        let (n, b) = section(rep, p);
        total += n;
        bad.extend(b);
    }
    Line {
        name,
        pass: total > 0 && bad.is_empty(),
        detail: format!(
            "{total} records, {} failing{extra}{}",
            bad.len(),
            first(&bad)
        ),
    }
}

fn first(v: &[String]) -> String {
    v.first()
        .map(|s| format!("; first: {s}"))
        .unwrap_or_default()
}

fn battery_line(name: &'static str, outcomes: &[(String, &support::Outcome)], min: usize) -> Line {
    let pass = outcomes.iter().all(|(_, o)| o.ok() && o.instances >= min);
    let per: Vec<String> = outcomes
        .iter()
        .map(|(k, o)| format!("{k} {}/{}", o.instances - o.failure_count, o.instances))
        .collect();
    let fails: Vec<String> = outcomes
        .iter()
        .flat_map(|(_, o)| o.failures.clone())
        .collect();
    Line {
        name,
        pass,
        detail: format!("{}{}", per.join(", "), first(&fails)),
    }
}

fn main() {
    let mut lines = Vec::new();

    let t0 = Instant::now();
    let rep = corpus_verify(Caps::default());
    let corpus_time = t0.elapsed();
    let probes = probe_corpus().len();
    let id_lines: BTreeSet<&str> = rep
        .records
        .iter()
        .filter_map(|r| r.id.strip_prefix("identity/"))
        .filter_map(|s| s.rsplit_once('/'))
        .map(|(l, _)| l)
        .collect();

    let mut l1 = from_section(
        "1 bornology identity table",
        &rep,
        &["identity/", "pt/"],
        &format!(
            ", {probes} probes, {} lines, corpus run {} ms",
            id_lines.len(),
            corpus_time.as_millis()
        ),
    );
    l1.pass &= probes >= 24 && corpus_time < Duration::from_secs(10);
    lines.push(l1);

    let mut l2 = from_section("2 metrizability verdict sweep", &rep, &["metrizable/"], "");
    let failing = rep
        .records
        .iter()
        .filter(|r| r.id.starts_with("metrizable/") && r.subject.contains("INCONSISTENT"))
        .count();
    l2.detail
        .push_str(&format!(", {failing} declared failures"));
    l2.pass &= failing > 0;
    lines.push(l2);

    let mut l3 = from_section(
        "3 chain criteria",
        &rep,
        &["chain/"],
        &format!(", corpus run {} ms", corpus_time.as_millis()),
    );
    l3.pass &= corpus_time < Duration::from_secs(5);
    lines.push(l3);

    lines.push(from_section("4 bornology sweeps", &rep, &["sweep/"], ""));

    let ef = support::ef_oracle_battery(0xEF, 400);
    lines.push(Line {
        name: "5 essential-finiteness oracle",
        pass: ef.ok() && ef.answered >= 200,
        detail: format!(
            "{} instances ({} not essentially finite), {} answered, {} refused, {} disagreements{}",
            ef.instances,
            ef.negative,
            ef.answered,
            ef.instances - ef.answered,
            ef.failure_count,
            first(&ef.failures)
        ),
    });

    let laws = support::law_battery(0x1A75, 10_000);
    let laws: Vec<(String, &support::Outcome)> =
        laws.iter().map(|(k, o)| (k.to_string(), o)).collect();
    lines.push(battery_line("6 set algebra laws", &laws, 10_000));

    let metrics = support::metric_battery(0x3E7, 10_000);
    let metrics: Vec<(String, &support::Outcome)> = metrics
        .iter()
        .map(|(k, o)| (k.as_str().to_string(), o))
        .collect();
    lines.push(battery_line(
        "7 quasi-pseudometric axioms and balls",
        &metrics,
        10_000,
    ));

    let ring = support::ring_battery(0x2112, 60);
    lines.push(Line {
        name: "8 generated topology equals the ring closure",
        pass: ring.ok() && ring.instances >= 50,
        detail: format!(
            "{} instances, {} candidates decided, {} truncated, {} disagreements{}",
            ring.instances,
            ring.answered,
            ring.truncated,
            ring.failure_count,
            first(&ring.failures)
        ),
    });

    let again = corpus_verify(Caps::default());
    let same = rep.machine() == again.machine();
    lines.push(Line {
        name: "9 determinism",
        pass: same,
        detail: format!(
            "{} bytes, {}",
            rep.machine().len(),
            if same { "identical" } else { "differ" }
        ),
    });

    for l in &lines {
        println!(
            "{} {}: {}",
            if l.pass { "PASS" } else { "FAIL" },
            l.name,
            l.detail
        );
    }
    let failed: Vec<&str> = lines.iter().filter(|l| !l.pass).map(|l| l.name).collect();
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
