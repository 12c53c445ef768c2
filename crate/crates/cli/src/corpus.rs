//! The built-in verification suite: the bornology identity tables, the pt
//! table, the class sweeps, the metrizability triples, the chain criteria and
//! the axiom probes.

use gts_core::checkers::{
    axiom_probe, base_check, chain_check, initial_bornology_member, metrizable_verdict_upto,
    proper_check, strict_cont_refute, uniform_chain_check, ChainVerdict, Part, PiecewiseAffineMap,
    ProperVerdict, StrictContVerdict,
};
use gts_core::covers::{FamilySpec, IndexRange};
use gts_core::lines::{
    acb_member, cb_member, cov_member, op_member, probe_battery, probe_corpus, pt_is_exact, pt_of,
    sm_member, small_open_cover, smallness_refuter, AffineEnd, AffinePiece, BaseSchema, Bornology,
    LineId, Variant,
};
use gts_core::qmetric::{MetricName, QuasiMetric};
use gts_core::rat::{int, rat};
use gts_core::{ExtRat, Interval, RealSet, TopologyKind};

use crate::eval::capped;
use crate::grammar::LineClass;
use crate::report::{Caps, Record, Report, Status};

/// One stated identity: the class of `line` equals `expected`.
#[derive(Clone, Debug)]
pub struct Identity {
    pub line: LineId,
    pub class: LineClass,
    pub expected: Bornology,
    pub anchor: &'static str,
}

#[derive(Clone, Debug)]
pub struct PtRow {
    pub line: LineId,
    pub image: LineId,
    pub anchor: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Consistent,
    /// Inconsistent, with this part among the failures.
    Fails(Part),
}

#[derive(Clone, Debug)]
pub struct Triple {
    pub line: LineId,
    pub born: Bornology,
    pub metric: MetricName,
    pub expect: Expect,
    pub anchor: &'static str,
}

/// The tables the suite checks against. Tests swap in corrupted copies.
#[derive(Clone, Debug)]
pub struct Tables {
    pub identities: Vec<Identity>,
    pub pt: Vec<PtRow>,
    pub triples: Vec<Triple>,
}

fn std_(v: Variant) -> LineId {
    LineId::standard(v)
}

fn sorg(v: Variant) -> LineId {
    LineId::sorgenfrey(v)
}

fn class_name(c: LineClass) -> &'static str {
    match c {
        LineClass::Sm => "sm",
        LineClass::Cb => "cb",
        LineClass::Acb => "acb",
    }
}

fn class_member(c: LineClass, line: LineId, a: &RealSet) -> bool {
    match c {
        LineClass::Sm => sm_member(line, a),
        LineClass::Cb => cb_member(line, a),
        LineClass::Acb => acb_member(line, a),
    }
}

impl Tables {
    pub fn stated() -> Tables {
        Tables {
            identities: stated_identities(),
            pt: stated_pt(),
            triples: stated_triples(),
        }
    }
}

fn stated_identities() -> Vec<Identity> {
    use Bornology::*;
    use LineClass::*;
    use Variant::*;
    let mut out = Vec::new();
    let mut add =
        |lines: &[LineId], classes: &[LineClass], expected: Bornology, anchor: &'static str| {
            for &line in lines {
                for &class in classes {
                    out.push(Identity {
                        line,
                        class,
                        expected: expected.clone(),
                        anchor,
                    });
                }
            }
        };
    add(
        &[LineId::Uu],
        &[Acb, Sm],
        UB,
        "ACB(R_uu) = Sm(R_uu) = UB(R)",
    );
    add(
        &[LineId::Ul],
        &[Acb, Sm],
        All,
        "ACB(R_ul) = Sm(R_ul) = P(R)",
    );
    add(
        &[LineId::Uf],
        &[Sm],
        ReverseWellOrdered,
        "Sm(R_uf): sets in UB(R) whose non-empty subsets have a largest element",
    );
    add(
        &[LineId::Uf],
        &[Acb, Cb],
        UB,
        "ACB(R_uf) = CB(R_uf) = UB(R)",
    );
    add(
        &[LineId::Uu, LineId::Ul],
        &[Cb],
        UB,
        "each of R_uu, R_ul, R_uf is CB-quasi-pseudometrizable by rho_u",
    );
    add(&[std_(Ut)], &[Sm], FB, "R_ut: FB = Sm");
    add(&[std_(Ut)], &[Cb, Acb], NatBounded, "R_ut: CB = ACB");
    add(
        &[std_(Lst), std_(Lom)],
        &[Sm, Cb, Acb],
        NatBounded,
        "R_lst, R_lom: Sm = CB = ACB = B(d_n, R)",
    );
    add(
        &[std_(LPlusOm), std_(LPlusSt)],
        &[Cb],
        NatBounded,
        "R_l+om, R_l+st: CB = CB_nat(R)",
    );
    add(
        &[std_(LPlusOm), std_(LPlusSt)],
        &[Sm, Acb],
        UB,
        "R_l+om, R_l+st: Sm = ACB = B(d+_n, R)",
    );
    let v = [std_(Om), std_(Slom), std_(Rom), std_(St)];
    add(
        &v,
        &[Sm, Acb],
        All,
        "R_om, R_slom, R_rom, R_st: Sm = ACB = P(R)",
    );
    add(
        &v,
        &[Cb],
        NatBounded,
        "R_om, R_slom, R_rom, R_st: CB-metrizable by d_n",
    );
    add(
        &[sorg(Lst), sorg(Lom)],
        &[Sm, Acb],
        NatBounded,
        "R^S_lst, R^S_lom: ACB- and Sm-quasi-metrizable by rho_0",
    );
    add(
        &[sorg(LPlusSt), sorg(LPlusOm)],
        &[Sm, Acb],
        UB,
        "R^S_l+st, R^S_l+om: ACB- and Sm-quasi-metrizable by rho_S",
    );
    add(
        &[sorg(LMinusSt), sorg(LMinusOm)],
        &[Sm, Acb],
        LB,
        "R^S_l-st, R^S_l-om: ACB- and Sm-quasi-metrizable by rho_L",
    );
    add(
        &[sorg(Om), sorg(Slom), sorg(St), sorg(SlPlusOm)],
        &[Sm, Acb],
        All,
        "R^S_om, R^S_slom, R^S_st, R^S_sl+om: ACB- and Sm-quasi-metrizable by rho_S1",
    );
    add(
        &[sorg(Ut)],
        &[Sm],
        FB,
        "R^S_ut: tau_S,r ∩ FB(R) is not a base for FB(R)",
    );
    let all_sorg: Vec<LineId> = Variant::ALL.iter().map(|v| sorg(*v)).collect();
    add(
        &all_sorg,
        &[Cb],
        FB,
        "each relatively compact set in the Sorgenfrey topology is countable",
    );
    out
}

fn stated_pt() -> Vec<PtRow> {
    use Variant::*;
    let mut out = vec![
        PtRow {
            line: std_(Lom),
            image: std_(Lst),
            anchor: "pt(R_lom) = R_lst",
        },
        PtRow {
            line: std_(LPlusOm),
            image: std_(LPlusSt),
            anchor: "pt(R_l+om) = R_l+st",
        },
    ];
    for v in [Om, Slom, Rom] {
        out.push(PtRow {
            line: std_(v),
            image: std_(St),
            anchor: "pt(R_om) = pt(R_slom) = pt(R_rom) = R_st",
        });
    }
    for l in LineId::all()
        .into_iter()
        .filter(|l| l.is_partially_topological())
    {
        out.push(PtRow {
            line: l,
            image: l,
            anchor: "partially topological lines are fixed by pt",
        });
    }
    out
}

fn stated_triples() -> Vec<Triple> {
    use Bornology::*;
    use MetricName::*;
    use Variant::*;
    let mut out = Vec::new();
    let mut add = |lines: &[LineId],
                   born: Bornology,
                   metrics: &[MetricName],
                   expect: Expect,
                   anchor: &'static str| {
        for &line in lines {
            for &metric in metrics {
                out.push(Triple {
                    line,
                    born: born.clone(),
                    metric,
                    expect,
                    anchor,
                });
            }
        }
    };
    let ok = Expect::Consistent;
    add(
        &[LineId::Uu],
        UB,
        &[RhoU],
        ok,
        "R_uu is ACB- and Sm-quasi-pseudometrizable by rho_u",
    );
    add(
        &[LineId::Ul],
        All,
        &[RhoU1],
        ok,
        "R_ul is ACB- and Sm-quasi-pseudometrizable by rho_u,1",
    );
    add(
        &[LineId::Uf],
        UB,
        &[RhoU],
        ok,
        "R_uf is ACB-quasi-pseudometrizable by rho_u",
    );
    add(
        &[LineId::Ul],
        UB,
        &[RhoU],
        ok,
        "each of R_uu, R_ul, R_uf is CB-quasi-pseudometrizable by rho_u",
    );
    add(
        &[std_(Ut)],
        NatBounded,
        &[DN],
        ok,
        "R_ut is ACB-metrizable by d_n",
    );
    add(
        &[std_(Lst), std_(Lom)],
        NatBounded,
        &[DN],
        ok,
        "(R_lst, d_n), (R_lom, d_n) are uniformly Sm-metrizable",
    );
    add(
        &[std_(LPlusOm), std_(LPlusSt)],
        UB,
        &[DNPlus, DU],
        ok,
        "R_l+om, R_l+st: uniformly ACB-metrizable by d+_n and uniformly Sm-metrizable by d_u",
    );
    let v = [std_(Om), std_(Slom), std_(Rom), std_(St)];
    add(
        &v,
        All,
        &[DN1],
        ok,
        "R_om, R_slom, R_rom, R_st are Sm-metrizable by d_n,1",
    );
    add(
        &v,
        NatBounded,
        &[DN],
        ok,
        "R_om, R_slom, R_rom, R_st are CB-metrizable by d_n",
    );
    add(
        &[sorg(Lst), sorg(Lom)],
        NatBounded,
        &[Rho0],
        ok,
        "R^S_lst, R^S_lom are Sm-quasi-metrizable by rho_0",
    );
    add(
        &[sorg(LPlusSt), sorg(LPlusOm)],
        UB,
        &[RhoS],
        ok,
        "R^S_l+st, R^S_l+om are Sm-quasi-metrizable by rho_S",
    );
    add(
        &[sorg(LMinusSt), sorg(LMinusOm)],
        LB,
        &[RhoL],
        ok,
        "R^S_l-st, R^S_l-om are Sm-quasi-metrizable by rho_L",
    );
    add(
        &[sorg(Om), sorg(Slom), sorg(St), sorg(SlPlusOm)],
        All,
        &[RhoS1, Rho01],
        ok,
        "R^S_om, R^S_slom, R^S_st, R^S_sl+om: Sm-quasi-metrizable by rho_S1 and by min{rho_0, 1}",
    );
    let proper = Expect::Fails(Part::Properness);
    add(
        &[std_(Ut)],
        FB,
        &[DN, DN1],
        proper,
        "int_nat A = ∅ for each A in Sm(R_ut)",
    );
    add(
        &[LineId::Uf],
        LB,
        &[RhoU],
        proper,
        "int_u A = ∅ for each A in LB(R)",
    );
    add(
        &[LineId::Uf],
        ReverseWellOrdered,
        &[RhoU],
        Expect::Fails(Part::Bornology),
        "R_uf is not Sm-quasi-pseudometrizable",
    );
    add(
        &[sorg(Ut)],
        FB,
        &[RhoS],
        proper,
        "tau_S,r ∩ FB(R) is not a base for FB(R)",
    );
    let all_sorg: Vec<LineId> = Variant::ALL.iter().map(|v| sorg(*v)).collect();
    add(
        &all_sorg,
        FB,
        &[RhoS, Rho0],
        proper,
        "none of the Sorgenfrey lines is CB-metrizable",
    );
    out
}

fn record(id: String, ok: bool, anchor: Option<&str>, subject: String, result: String) -> Record {
    Record {
        id,
        status: if ok { Status::Pass } else { Status::Fail },
        anchor: anchor.map(str::to_string),
        subject,
        result,
    }
}

fn identities(t: &Tables, probes: &[(&str, RealSet)], out: &mut Vec<Record>) {
    for row in &t.identities {
        let bad: Vec<&str> = probes
            .iter()
            .filter(|(_, a)| class_member(row.class, row.line, a) != row.expected.contains(a))
            .map(|(n, _)| *n)
            .collect();
        let result = if bad.is_empty() {
            format!("{}/{} probes agree", probes.len(), probes.len())
        } else {
            format!("disagree on {}", bad.join(", "))
        };
        out.push(record(
            format!("identity/{}/{}", row.line, class_name(row.class)),
            bad.is_empty(),
            Some(row.anchor),
            format!("{}({}) = {}", class_name(row.class), row.line, row.expected),
            result,
        ));
    }
}

fn pt_table(t: &Tables, out: &mut Vec<Record>) {
    for row in &t.pt {
        let got = pt_of(row.line);
        out.push(record(
            format!("pt/{}", row.line),
            got == row.image,
            Some(row.anchor),
            format!("pt({}) = {}", row.line, row.image),
            got.to_string(),
        ));
    }
}

fn sweeps(probes: &[(&str, RealSet)], out: &mut Vec<Record>) {
    for line in LineId::all() {
        let bad: Vec<&str> = probes
            .iter()
            .filter(|(_, a)| (sm_member(line, a) || cb_member(line, a)) && !acb_member(line, a))
            .map(|(n, _)| *n)
            .collect();
        out.push(record(
            format!("sweep/sm-cb-in-acb/{line}"),
            bad.is_empty(),
            Some("(Sm(X) ∪ CB(X)) ⊆ ACB(X)"),
            format!("Sm ∪ CB ⊆ ACB on {line}"),
            if bad.is_empty() {
                "no violations".into()
            } else {
                format!("violated by {}", bad.join(", "))
            },
        ));
    }
    for line in LineId::all().into_iter().filter(|l| pt_is_exact(*l)) {
        let img = pt_of(line);
        let bad: Vec<&str> = probes
            .iter()
            .filter(|(_, a)| {
                sm_member(line, a) != sm_member(img, a) || cb_member(line, a) != cb_member(img, a)
            })
            .map(|(n, _)| *n)
            .collect();
        out.push(record(
            format!("sweep/pt-keeps-sm-cb/{line}"),
            bad.is_empty(),
            Some("Sm(X) = Sm(X_pt)"),
            format!("Sm and CB of {line} equal those of {img}"),
            if bad.is_empty() {
                "no violations".into()
            } else {
                format!("violated by {}", bad.join(", "))
            },
        ));
    }
    // definitional cross-check of the closed-form small sets
    for line in LineId::all() {
        let battery = probe_battery(line);
        let mut bad = Vec::new();
        for (n, a) in probes {
            let ok = if sm_member(line, a) {
                battery
                    .iter()
                    .all(|f| f.ess_finite_on(a).essentially_finite)
            } else {
                smallness_refuter(line, a)
                    .is_some_and(|f| cov_member(line, &f) && !f.ess_finite_on(a).essentially_finite)
            };
            if !ok {
                bad.push(*n);
            }
        }
        out.push(record(
            format!("sweep/smallness-refuter/{line}"),
            bad.is_empty(),
            Some("small: every admissible family is essentially finite on the set"),
            format!("closed-form Sm of {line} against admissible probe families"),
            if bad.is_empty() {
                "no violations".into()
            } else {
                format!("violated by {}", bad.join(", "))
            },
        ));
    }
    let lst = LineId::standard(Variant::Lst);
    let bad: Vec<&str> = probes
        .iter()
        .filter(|(_, a)| sm_member(lst, a) != Bornology::NatBounded.contains(a))
        .map(|(n, _)| *n)
        .collect();
    out.push(record(
        "sweep/ef-small-sets".into(),
        bad.is_empty(),
        Some("Sm((X, tau, EF(tau, B))) = B"),
        "Sm(standard/lst) = CB_nat".into(),
        if bad.is_empty() {
            "no violations".into()
        } else {
            format!("violated by {}", bad.join(", "))
        },
    ));
    for line in LineId::all() {
        let expect_cover =
            !matches!(line, LineId::Uf) && !matches!(line, LineId::Line(_, Variant::Ut));
        let cover = small_open_cover(line);
        let ok = match &cover {
            Some(f) => {
                expect_cover
                    && f.union_of().is_reals()
                    && f.all_members(&|m| op_member(line, m) && sm_member(line, m))
            }
            None => !expect_cover,
        };
        out.push(record(
            format!("sweep/weakly-locally-small/{line}"),
            ok,
            Some("U ⊆ Op_X ∩ Sm(X)"),
            format!(
                "{line} {} covered by small opens",
                if expect_cover { "is" } else { "is not" }
            ),
            cover
                .map(|f| f.to_string())
                .unwrap_or_else(|| "no small open cover".into()),
        ));
    }
}

fn triples(t: &Tables, caps: Caps, sets: &[RealSet], out: &mut Vec<Record>) {
    for tr in &t.triples {
        let d = QuasiMetric::new(tr.metric);
        let id = format!("metrizable/{}/{}/{}", tr.line, tr.born, tr.metric.as_str());
        let subject = format!("({}, {}, {})", tr.line, tr.born, tr.metric.as_str());
        let (ok, result) = match metrizable_verdict_upto(tr.line, &tr.born, &d, sets, caps.chain) {
            Ok(r) => {
                let ok = match tr.expect {
                    Expect::Consistent => r.consistent(),
                    Expect::Fails(p) => r.fails(p),
                };
                (ok, r.to_string())
            }
            Err(e) => (false, e.to_string()),
        };
        let want = match tr.expect {
            Expect::Consistent => "CONSISTENT".to_string(),
            Expect::Fails(p) => format!("INCONSISTENT at {p}"),
        };
        out.push(record(
            id,
            ok,
            Some(tr.anchor),
            format!("{subject} expected {want}"),
            result,
        ));
    }
}

fn widening() -> BaseSchema {
    let end = |alpha: i128, beta: i128| AffineEnd::Affine {
        alpha: int(alpha),
        beta: int(beta),
    };
    BaseSchema::affine(
        vec![AffinePiece {
            lo: end(-1, -1),
            lo_closed: true,
            hi: end(1, 1),
            hi_closed: true,
        }],
        0,
    )
    .expect("monotone schema")
}

fn chains(caps: Caps, out: &mut Vec<Record>) {
    let dn = QuasiMetric::new(MetricName::DN);
    let dplus = QuasiMetric::new(MetricName::DNPlus);
    let n = caps.chain;
    let r = chain_check(&dn, &widening(), &rat(1, 2), n).map(|r| capped(r, 64, n));
    out.push(record(
        "chain/d_n/widening".into(),
        r.as_ref().is_ok_and(|r| r.passed()),
        Some("[B_n]^delta ⊆ B_{n+1} for B_n = [-(n+1), n+1]"),
        "chain d_n [-(n+1), n+1] delta 1/2".into(),
        r.map(|r| r.to_string()).unwrap_or_else(|e| e.to_string()),
    ));
    for k in 2..=12u32 {
        let delta = rat(1, 1 << k);
        let bound = 1u64 << k;
        let r = chain_check(&dplus, &widening(), &delta, n).map(|r| capped(r, 64, n));
        // a cap below the failing index leaves the check truncated, not failed
        let ok = r.as_ref().is_ok_and(|r| match &r.verdict {
            ChainVerdict::FailAt { n: at, .. } => *at <= bound,
            ChainVerdict::Truncated(_) => n < 64,
            ChainVerdict::Pass { .. } => false,
        });
        out.push(record(
            format!("chain/d_n_plus/widening/2^-{k}"),
            ok,
            Some("(-inf, m) ⊆ [C_m]^delta under d+_n for m > n(delta)"),
            format!(
                "chain d_n_plus [-(n+1), n+1] delta 1/{} fails by n = {bound}",
                1u64 << k
            ),
            r.map(|r| r.to_string()).unwrap_or_else(|e| e.to_string()),
        ));
    }
    let ub = Bornology::UB.base().expect("UB has a base");
    let r = uniform_chain_check(&dplus, &ub, n).map(|r| capped(r, 64, n));
    out.push(record(
        "chain/d_n_plus/upper-rays".into(),
        r.as_ref()
            .is_ok_and(|r| r.passed() && r.delta_used == Some(rat(1, 2))),
        Some("R_l+om, R_l+st are uniformly ACB-metrizable by d+_n"),
        "uniform chain d_n_plus (-inf, n) passes with delta 1/2".into(),
        r.map(|r| r.to_string()).unwrap_or_else(|e| e.to_string()),
    ));
    let nat = Bornology::NatBounded.base().expect("CB_nat has a base");
    let r = uniform_chain_check(&dplus, &nat, n);
    out.push(record(
        "chain/d_n_plus/nat-not-uniform".into(),
        r.as_ref().is_ok_and(|r| !r.passed()) || n < 64,
        Some("B(d_n, R) is not uniformly quasi-metrizable with respect to d+_n"),
        "uniform chain d_n_plus [-n, n] fails".into(),
        r.map(|r| r.to_string()).unwrap_or_else(|e| e.to_string()),
    ));
}

fn checks(out: &mut Vec<Record>) {
    use TopologyKind::*;
    let proper = |b: Bornology, t1, t2, want: bool, anchor: &str, out: &mut Vec<Record>| {
        let got = proper_check(&b, t1, t2, 16);
        let ok = got
            .as_ref()
            .is_ok_and(|v| (*v == ProperVerdict::Proper) == want);
        out.push(record(
            format!("proper/{b}/{t1}/{t2}"),
            ok,
            Some(anchor),
            format!(
                "{b} is {}({t1}, {t2})-proper",
                if want { "" } else { "not " }
            ),
            match got {
                Ok(ProperVerdict::Proper) => "PROPER".into(),
                Ok(ProperVerdict::Improper { index, closure }) => {
                    format!("IMPROPER at B_{index}: closure {closure}")
                }
                Err(e) => e.to_string(),
            },
        ));
    };
    proper(
        Bornology::UB,
        Upper,
        Lower,
        true,
        "cl_l (-inf, n) ⊆ int_u (-inf, n+1)",
        out,
    );
    proper(
        Bornology::LB,
        Upper,
        Nat,
        false,
        "int_u A = ∅ for each A in LB(R)",
        out,
    );
    proper(
        Bornology::FB,
        SorgR,
        Nat,
        false,
        "finite sets have empty interior",
        out,
    );
    let base = |b: Bornology, t, want: bool, anchor: &str, out: &mut Vec<Record>| {
        let got = base_check(&b, t);
        out.push(record(
            format!("base/{b}/{t}"),
            got.as_ref().is_ok_and(|v| *v == want),
            Some(anchor),
            format!(
                "{t} ∩ {b} is {}a base for {b}",
                if want { "" } else { "not " }
            ),
            got.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()),
        ));
    };
    base(
        Bornology::NatBounded,
        Nat,
        true,
        "[-n, n] ⊆ (-n-1, n+1)",
        out,
    );
    base(
        Bornology::FB,
        SorgR,
        false,
        "tau_S,r ∩ FB(R) is not a base for FB(R)",
        out,
    );
    base(
        Bornology::UB,
        Upper,
        true,
        "(-inf, n) is open in the upper topology",
        out,
    );
}

fn maps(out: &mut Vec<Record>) {
    let periodic = FamilySpec::periodic(
        RealSet::interval(Interval::open(ExtRat::Fin(int(0)), ExtRat::Fin(int(2)))),
        int(1),
        IndexRange::All,
    )
    .expect("bounded seed");
    let battery = vec![periodic];
    let id = PiecewiseAffineMap::identity();
    let shift = PiecewiseAffineMap::affine(int(1), int(1));
    let (st, ut, lst) = (std_(Variant::St), std_(Variant::Ut), std_(Variant::Lst));
    for (name, f, src, dst, refute) in [
        ("identity", &id, st, ut, true),
        ("identity", &id, ut, lst, false),
        ("shift", &shift, lst, lst, false),
    ] {
        let v = strict_cont_refute(f, src, dst, &battery);
        let ok = match &v {
            StrictContVerdict::Refuted { preimage, .. } => refute && !cov_member(src, preimage),
            StrictContVerdict::Unrefuted { checked, .. } => !refute && *checked > 0,
            StrictContVerdict::Unrepresentable { .. } => false,
        };
        out.push(record(
            format!("strict-cont/{name}/{src}/{dst}"),
            ok,
            Some("{f^-1(U): U in U} in Cov_X for each admissible U"),
            format!(
                "{name}: {src} -> {dst} {}",
                if refute { "refuted" } else { "unrefuted" }
            ),
            format!("{v:?}"),
        ));
    }
    let maps = vec![
        PiecewiseAffineMap::identity(),
        PiecewiseAffineMap::affine(int(-1), int(0)),
    ];
    let borns = vec![Bornology::UB, Bornology::UB];
    let unit = RealSet::interval(Interval::closed(int(0), int(1)));
    let up = RealSet::interval(Interval::closed_open(int(0), ExtRat::PosInf));
    for (name, a, want) in [("unit", &unit, true), ("ray", &up, false)] {
        let got = initial_bornology_member(&maps, &borns, a);
        out.push(record(
            format!("initial/{name}"),
            got.as_ref().is_ok_and(|v| *v == want),
            Some("B_X = ⋂{A ⊆ X: f_i(A) in B_i}"),
            format!("{a} in the initial bornology of x, -x into UB: {want}"),
            got.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()),
        ));
    }
}

fn axioms(caps: Caps, sets: &[RealSet], out: &mut Vec<Record>) {
    let depth = caps.depth.min(2) as usize;
    for line in LineId::all() {
        let mut fams = probe_battery(line);
        fams.push(FamilySpec::finite(Vec::new()));
        let rep = axiom_probe(line, &fams, sets, depth);
        out.push(record(
            format!("axioms/{line}"),
            rep.passed(),
            Some("gts axioms (i)-(v)"),
            format!("axiom instances on {line}"),
            match rep.violations.first() {
                None => format!("checked {:?}", rep.checked),
                Some(v) => format!("axiom {} violated: {}", v.axiom, v.detail),
            },
        ));
    }
}

/// Runs the suite against `tables`.
pub fn corpus_verify_with(caps: Caps, tables: &Tables) -> Report {
    let probes = probe_corpus();
    let sets: Vec<RealSet> = probes.iter().map(|(_, s)| s.clone()).collect();
    let mut out = Vec::new();
    identities(tables, &probes, &mut out);
    pt_table(tables, &mut out);
    sweeps(&probes, &mut out);
    triples(tables, caps, &sets, &mut out);
    chains(caps, &mut out);
    checks(&mut out);
    maps(&mut out);
    axioms(caps, &sets, &mut out);
    Report {
        kind: "corpus",
        caps,
        records: out,
    }
}

/// Runs the suite against the stated tables.
pub fn corpus_verify(caps: Caps) -> Report {
    corpus_verify_with(caps, &Tables::stated())
}
