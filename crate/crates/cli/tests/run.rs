use gts_cli::report::Status;
use gts_cli::{parse, run, Caps};

fn results(text: &str) -> Vec<(Status, String)> {
    let rep = run(&parse(text).unwrap(), Caps::default());
    rep.records
        .into_iter()
        .map(|r| (r.status, r.result))
        .collect()
}

#[test]
fn empty_doc_gives_empty_report() {
    let rep = run(&parse("").unwrap(), Caps::default());
    assert!(rep.records.is_empty());
    assert_eq!(rep.failures(), 0);
    assert!(
        rep.machine()
            .ends_with("summary total=0 ok=0 pass=0 fail=0 error=0\n"),
        "{}",
        rep.machine()
    );
}

#[test]
fn ball_evaluates_to_half_open_interval() {
    assert_eq!(
        results("query ball rho_S at 0 radius 1/2"),
        vec![(Status::Ok, "[0, 1/2)".to_string())]
    );
}

#[test]
fn three_chain_examples() {
    let text = "bornology W = schema(from 0, piece(closed -1:-1, closed 1:1))
query chain d_n W delta 1/2 upto 64
query chain d_n_plus W delta 1/8 upto 64
query uniform_chain d_n_plus UB upto 64";
    let r = results(text);
    assert!(r.iter().all(|(s, _)| *s == Status::Ok));
    assert!(r[0].1.starts_with("pass"), "{}", r[0].1);
    // the neighbourhood of [-2, 2] already reaches below -3
    assert!(r[1].1.starts_with("fail_at(1,"), "{}", r[1].1);
    assert!(
        r[2].1.starts_with("pass") && r[2].1.ends_with("delta=1/2"),
        "{}",
        r[2].1
    );
}

#[test]
fn float_metric_in_symbolic_query_is_a_record_not_an_abort() {
    let r = results("query ball float(d_n_plus) at 0 radius 1/2\nquery show point 1");
    assert_eq!(r[0].0, Status::Error);
    assert!(r[0].1.contains("floating-point"), "{}", r[0].1);
    assert_eq!(r[1], (Status::Ok, "{1}".to_string()));
}

#[test]
fn chain_over_cap_is_truncated() {
    let text = "bornology W = schema(from 0, piece(closed -1:-1, closed 1:1))
query uniform_chain d_n_plus UB upto 64";
    let rep = run(&parse(text).unwrap(), Caps { chain: 4, depth: 8 });
    assert!(
        rep.records[0].result.contains("truncated(4)"),
        "{}",
        rep.records[0].result
    );
}

#[test]
fn generation_depth_above_cap_is_an_error() {
    let text = "query generated finite(point 0) from finite(point 1) depth 5";
    let rep = run(
        &parse(text).unwrap(),
        Caps {
            chain: 64,
            depth: 2,
        },
    );
    assert_eq!(rep.records[0].status, Status::Error);
}

#[test]
fn fixture_reports_are_deterministic() {
    let doc = parse(include_str!("fixtures/basics.gts")).unwrap();
    let a = run(&doc, Caps::default());
    let b = run(&doc, Caps::default());
    assert_eq!(a.machine(), b.machine());
    assert_eq!(a.human(), b.human());
    assert_eq!(a.records.len(), 25);
    // the float ball and the refused oracle window
    let errors: Vec<&str> = a.failed_records().map(|r| r.id.as_str()).collect();
    assert_eq!(errors, ["q5", "q24"]);
    assert_eq!(a.records[23].result, "true");
    assert_eq!(
        a.records[24].result,
        "refused: window does not cover K ∩ ⋃F"
    );
}

#[test]
fn machine_format_header() {
    let rep = run(&parse("query show empty").unwrap(), Caps::default());
    let m = rep.machine();
    let head: Vec<&str> = m.lines().take(4).collect();
    assert_eq!(
        head,
        [
            "schema=gts-report/1",
            &format!("engine=\"gts {}\"", env!("CARGO_PKG_VERSION")),
            "kind=eval",
            "caps chain=64 depth=8"
        ]
    );
    assert!(
        m.contains("record id=q0 status=ok subject=\"show empty\" result=\"{}\""),
        "{m}"
    );
}
