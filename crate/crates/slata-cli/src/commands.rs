//! Command implementations.  Each command builds whatever structure the
//! document describes, emits named checks with witnesses, and renders the
//! constructed objects as artifacts.  Law failures are verdicts (exit 1);
//! malformed input (exit 2) and blown size gates (exit 3) are errors.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use slata::adjoint::{equational_adjoint_check, is_slata_morphism, Slata};
use slata::congruence::{
    congruence_from_family, enumerate_congruences, enumerate_vietoris_families,
    family_from_congruence, is_vietoris_family, quotient, Congruence, VietorisFamily,
};
use slata::corpus::meet_semilattices_with_top;
use slata::order::{MeetSemilattice, Poset, PosetError, SemilatticeError};
use slata::relation::{compose_star, dual_specialization, relation_from_hom};
use slata::space::{
    algebra_of_slata_space, dual_algebra, dual_space, dualize_slata, h_map,
    semilattice_unit_isomorphism, unit_isomorphism, verify_counit_slata, verify_s_space,
    verify_slata_space, DualSpace, Multirelation,
};
use slata::tense::{
    algebra_of_eslata_space, check_derived_identities, dualize_eslata, eslata_unit_isomorphism,
    inequality_form_holds, interplay_witness, verify_eslata_space, ESlata,
};
use slata::SmallSet;

use crate::doc::{AlgebraDocument, TableSpec};
use crate::report::{Check, Report};

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input: exit code 2.
    #[error("{0}")]
    Input(String),
    /// A size gate would be exceeded: exit code 3.
    #[error("{0}")]
    Limit(String),
}

/// The separation axiom scans subsets of the closed-set family, so cap it.
const MAX_CLOSED_FAMILY: usize = 20;

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn limit(msg: impl Into<String>) -> CliError {
    CliError::Limit(msg.into())
}

/// Which operator sets a document may carry.
enum OpsMode {
    Plain,
    Pair,
    Tense,
}

fn ops_mode(doc: &AlgebraDocument) -> Result<OpsMode, CliError> {
    match doc.op_names().as_slice() {
        [] => Ok(OpsMode::Plain),
        ['i', 'd'] => Ok(OpsMode::Pair),
        ['P', 'G', 'F', 'H'] => Ok(OpsMode::Tense),
        other => Err(input(format!(
            "operator set {other:?} is not supported: give none, i and d, or P G F H"
        ))),
    }
}

/// Builds the algebra, emitting the law checks; `None` when a law failed.
fn build_algebra(
    doc: &AlgebraDocument,
    checks: &mut Vec<Check>,
) -> Result<Option<MeetSemilattice>, CliError> {
    let n = doc.n();
    let lab = |x: usize| doc.labels[x].clone();
    match &doc.table {
        TableSpec::Meet(flat) => {
            let m = |a: usize, b: usize| flat[a * n + b];
            let mut ok = true;
            let mut push = |name: &str, witness: Option<String>, ok: &mut bool| {
                match witness {
                    Some(w) => {
                        *ok = false;
                        checks.push(Check::fail(name, w));
                    }
                    None => checks.push(Check::pass(name)),
                }
            };
            let idem = (0..n)
                .find(|&a| m(a, a) != a)
                .map(|a| format!("meet({0}, {0}) = {1}", lab(a), lab(m(a, a))));
            push("algebra.idempotent", idem, &mut ok);
            let comm = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| m(a, b) != m(b, a))
                .map(|(a, b)| format!("meet({}, {}) ≠ meet({}, {})", lab(a), lab(b), lab(b), lab(a)));
            push("algebra.commutative", comm, &mut ok);
            let assoc = (0..n)
                .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
                .find(|&(a, b, c)| m(a, m(b, c)) != m(m(a, b), c))
                .map(|(a, b, c)| format!("witness triple ({}, {}, {})", lab(a), lab(b), lab(c)));
            push("algebra.associative", assoc, &mut ok);
            let neutral = (0..n)
                .find(|&a| m(a, doc.top) != a)
                .map(|a| format!("meet({}, {}) = {}", lab(a), lab(doc.top), lab(m(a, doc.top))));
            push("algebra.top-neutral", neutral, &mut ok);
            if !ok {
                return Ok(None);
            }
            match MeetSemilattice::validate(n, flat.clone(), doc.top) {
                Ok(a) => {
                    checks.push(Check::pass("algebra.order"));
                    Ok(Some(a.with_labels(doc.labels.clone())))
                }
                Err(e @ SemilatticeError::CarrierTooLarge { .. }) => Err(limit(e.to_string())),
                Err(e) => {
                    checks.push(Check::fail("algebra.order", e.to_string()));
                    Ok(None)
                }
            }
        }
        TableSpec::Leq(pairs) => {
            let p = match Poset::from_pairs_closure(n, pairs) {
                Ok(p) => {
                    checks.push(Check::pass("algebra.order"));
                    p
                }
                Err(e @ PosetError::CarrierTooLarge { .. }) => {
                    return Err(limit(e.to_string()))
                }
                Err(e) => {
                    checks.push(Check::fail("algebra.order", e.to_string()));
                    return Ok(None);
                }
            };
            match p.greatest() {
                Some(t) if t == doc.top => checks.push(Check::pass("algebra.top")),
                Some(t) => {
                    checks.push(Check::fail(
                        "algebra.top",
                        format!("greatest element is {}, not {}", lab(t), lab(doc.top)),
                    ));
                    return Ok(None);
                }
                None => {
                    checks.push(Check::fail("algebra.top", "no greatest element".to_string()));
                    return Ok(None);
                }
            }
            match MeetSemilattice::from_order(&p) {
                Ok(a) => {
                    checks.push(Check::pass("algebra.meets"));
                    Ok(Some(a.with_labels(doc.labels.clone())))
                }
                Err(e) => {
                    checks.push(Check::fail("algebra.meets", e.to_string()));
                    Ok(None)
                }
            }
        }
    }
}

/// Emits the adjunction check for an `{i, d}` document.
fn build_slata(doc: &AlgebraDocument, a: &MeetSemilattice, checks: &mut Vec<Check>) -> Option<Slata> {
    let i = doc.op('i').unwrap().to_vec();
    let d = doc.op('d').unwrap().to_vec();
    match Slata::new(a.clone(), i, d) {
        Ok(s) => {
            checks.push(Check::pass("pair.adjunction"));
            Some(s)
        }
        Err(e) => {
            checks.push(Check::fail("pair.adjunction", e.to_string()));
            None
        }
    }
}

/// Emits the tense-axiom checks for a `{P, G, F, H}` document.
fn build_eslata(doc: &AlgebraDocument, a: &MeetSemilattice, checks: &mut Vec<Check>) -> Option<ESlata> {
    let p = doc.op('P').unwrap();
    let g = doc.op('G').unwrap();
    let f = doc.op('F').unwrap();
    let h = doc.op('H').unwrap();
    let mut ok = true;
    let mut named = |name: &str, r: Result<(), String>, ok: &mut bool| match r {
        Ok(()) => checks.push(Check::pass(name)),
        Err(w) => {
            *ok = false;
            checks.push(Check::fail(name, w));
        }
    };
    named(
        "tense.t1-past-adjunction",
        equational_adjoint_check(a, p, g).map_err(|e| e.to_string()),
        &mut ok,
    );
    named(
        "tense.t2-future-adjunction",
        equational_adjoint_check(a, f, h).map_err(|e| e.to_string()),
        &mut ok,
    );
    named(
        "tense.t3-interplay",
        match interplay_witness(a, p, g, f, h) {
            None => Ok(()),
            Some((future, x, y)) => Err(format!(
                "{} mixing law fails at ({}, {})",
                if future { "future" } else { "past" },
                doc.labels[x],
                doc.labels[y]
            )),
        },
        &mut ok,
    );
    let ineq = inequality_form_holds(a, p, g, f, h);
    named(
        "tense.inequality-form",
        if ineq == ok {
            Ok(())
        } else {
            Err(format!(
                "inequality formulation {} while the adjunction formulation {}",
                if ineq { "holds" } else { "fails" },
                if ok { "holds" } else { "fails" }
            ))
        },
        &mut ok,
    );
    if !ok {
        return None;
    }
    match ESlata::new(a.clone(), p.to_vec(), g.to_vec(), f.to_vec(), h.to_vec()) {
        Ok(e) => {
            named(
                "tense.derived-identities",
                check_derived_identities(&e),
                &mut ok,
            );
            Some(e)
        }
        Err(err) => {
            checks.push(Check::fail("tense.derived-identities", err.to_string()));
            None
        }
    }
}

fn label_set(labels: &[String], s: SmallSet) -> String {
    let inner: Vec<&str> = s.iter().map(|x| labels[x].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

fn point_set(s: SmallSet) -> String {
    let inner: Vec<String> = s.iter().map(|p| format!("P{p}")).collect();
    format!("{{{}}}", inner.join(","))
}

fn z_set(zs: &BTreeSet<usize>) -> String {
    let inner: Vec<String> = zs.iter().map(|z| format!("Z{z}")).collect();
    format!("{{{}}}", inner.join(","))
}

/// Hasse cover pairs of the algebra's order, ascending.
fn cover_lines(a: &MeetSemilattice) -> Vec<String> {
    let ord = a.order();
    let mut out = Vec::new();
    for x in 0..a.n() {
        for y in 0..a.n() {
            if x == y || !ord.leq(x, y) {
                continue;
            }
            let between = (0..a.n())
                .any(|z| z != x && z != y && ord.leq(x, z) && ord.leq(z, y));
            if !between {
                out.push(format!("{} < {}", a.label(x), a.label(y)));
            }
        }
    }
    out
}

fn op_lines(doc: &AlgebraDocument) -> Vec<String> {
    doc.ops
        .iter()
        .map(|(c, t)| {
            let row: Vec<&str> = t.iter().map(|&v| doc.labels[v].as_str()).collect();
            format!("{c}: {}", row.join(" "))
        })
        .collect()
}

fn dual_artifacts(report: &mut Report, labels: &[String], dual: &DualSpace) {
    report.artifact(
        "spectrum",
        dual.spectrum
            .iter()
            .map(|p| format!("P{} = {}", p.id, label_set(labels, p.filter.members)))
            .collect(),
    );
    report.artifact(
        "subbase",
        dual.space
            .subbase()
            .iter()
            .enumerate()
            .map(|(i, &u)| format!("K{i} = {}", point_set(u)))
            .collect(),
    );
    report.artifact(
        "closed-sets",
        dual.space
            .s_closed()
            .iter()
            .enumerate()
            .map(|(i, &u)| format!("S{i} = {}", point_set(u)))
            .collect(),
    );
    report.artifact(
        "z-family",
        dual.space
            .z_family()
            .iter()
            .enumerate()
            .map(|(i, &z)| format!("Z{i} = {}", point_set(z)))
            .collect(),
    );
}

fn relation_artifact(report: &mut Report, name: &str, r: &Multirelation) {
    report.artifact(
        &format!("relation-{name}"),
        r.at
            .iter()
            .enumerate()
            .map(|(p, zs)| format!("P{p} -> {}", z_set(zs)))
            .collect(),
    );
}

fn gate_carrier(doc: &AlgebraDocument, max_size: usize) -> Result<(), CliError> {
    if doc.n() > max_size {
        return Err(limit(format!(
            "carrier size {} exceeds the gate of {max_size} (raise with --max-size)",
            doc.n()
        )));
    }
    Ok(())
}

fn gate_closed_family(dual: &DualSpace) -> Result<(), CliError> {
    let m = dual.space.s_closed().len();
    if m > MAX_CLOSED_FAMILY {
        return Err(limit(format!(
            "closed-set family has {m} members; the separation scan is capped at {MAX_CLOSED_FAMILY}"
        )));
    }
    Ok(())
}

pub fn cmd_validate(doc: &AlgebraDocument, input_name: &str) -> Result<Report, CliError> {
    let mode = ops_mode(doc)?;
    let mut report = Report::new("validate", input_name, &doc.name);
    let mut checks = Vec::new();
    let alg = build_algebra(doc, &mut checks)?;
    if let Some(a) = &alg {
        match mode {
            OpsMode::Plain => {}
            OpsMode::Pair => {
                build_slata(doc, a, &mut checks);
            }
            OpsMode::Tense => {
                build_eslata(doc, a, &mut checks);
            }
        }
        report.artifact("order", cover_lines(a));
        if !doc.ops.is_empty() {
            report.artifact("operators", op_lines(doc));
        }
    }
    report.checks = checks;
    report.seal();
    Ok(report)
}

/// Builds everything the document describes, failing the report (not the
/// process) on law violations.  Used by the commands that need a valid
/// structure before doing anything else.
struct Built {
    checks: Vec<Check>,
    algebra: Option<MeetSemilattice>,
    slata: Option<Slata>,
    eslata: Option<ESlata>,
}

fn build_all(doc: &AlgebraDocument) -> Result<Built, CliError> {
    let mode = ops_mode(doc)?;
    let mut checks = Vec::new();
    let algebra = build_algebra(doc, &mut checks)?;
    let mut slata = None;
    let mut eslata = None;
    if let Some(a) = &algebra {
        match mode {
            OpsMode::Plain => {}
            OpsMode::Pair => slata = build_slata(doc, a, &mut checks),
            OpsMode::Tense => eslata = build_eslata(doc, a, &mut checks),
        }
    }
    Ok(Built {
        checks,
        algebra,
        slata,
        eslata,
    })
}

pub fn cmd_dualize(
    doc: &AlgebraDocument,
    input_name: &str,
    max_size: usize,
) -> Result<Report, CliError> {
    gate_carrier(doc, max_size)?;
    let built = build_all(doc)?;
    let mut report = Report::new("dualize", input_name, &doc.name);
    report.checks = built.checks;
    let structure_ok = match ops_mode(doc)? {
        OpsMode::Plain => built.algebra.is_some(),
        OpsMode::Pair => built.slata.is_some(),
        OpsMode::Tense => built.eslata.is_some(),
    };
    if !structure_ok {
        report.seal();
        return Ok(report);
    }
    let a = built.algebra.as_ref().unwrap();
    let dual = dual_space(a);
    gate_closed_family(&dual)?;
    dual_artifacts(&mut report, &doc.labels, &dual);
    let space_report = verify_s_space(&dual.space);
    report.verdicts("", space_report.checks());
    if let Some(s) = &built.slata {
        let (_, r_i, r_d) = dualize_slata(s);
        relation_artifact(&mut report, "i", &r_i);
        relation_artifact(&mut report, "d", &r_d);
        report.verdicts("", verify_slata_space(&dual.space, &r_i, &r_d).checks());
    }
    if let Some(e) = &built.eslata {
        let (_, sp) = dualize_eslata(e);
        relation_artifact(&mut report, "P", &sp.i1);
        relation_artifact(&mut report, "G", &sp.d1);
        relation_artifact(&mut report, "F", &sp.i2);
        relation_artifact(&mut report, "H", &sp.d2);
        report.verdicts("", verify_eslata_space(&sp).checks());
    }
    report.seal();
    Ok(report)
}

fn require_pair(doc: &AlgebraDocument) -> Result<(), CliError> {
    match ops_mode(doc)? {
        OpsMode::Pair => Ok(()),
        _ => Err(input(
            "this command needs an adjoint pair: give `op i` and `op d` tables",
        )),
    }
}

fn congruence_lines(labels: &[String], cs: &[Congruence]) -> Vec<String> {
    cs.iter()
        .enumerate()
        .map(|(k, c)| {
            let blocks: Vec<String> = c
                .blocks()
                .iter()
                .map(|b| {
                    let inner: Vec<&str> = b.iter().map(|&x| labels[x].as_str()).collect();
                    format!("{{{}}}", inner.join(","))
                })
                .collect();
            format!("theta{k} = {}", blocks.join("|"))
        })
        .collect()
}

fn family_line(tag: &str, f: &VietorisFamily) -> String {
    let inner: Vec<String> = f.members().iter().map(|&m| point_set(m)).collect();
    format!("{tag} = {{{}}}", inner.join(", "))
}

pub fn cmd_congruences(
    doc: &AlgebraDocument,
    input_name: &str,
    max_size: usize,
) -> Result<Report, CliError> {
    require_pair(doc)?;
    gate_carrier(doc, max_size)?;
    let built = build_all(doc)?;
    let mut report = Report::new("congruences", input_name, &doc.name);
    report.checks = built.checks;
    let Some(s) = built.slata else {
        report.seal();
        return Ok(report);
    };
    let cs = enumerate_congruences(s.algebra(), &[s.i(), s.d()], max_size)
        .map_err(|e| limit(e.to_string()))?;
    report.artifact("congruences", congruence_lines(&doc.labels, &cs));

    let (dual, r_i, r_d) = dualize_slata(&s);
    let mut quotient_lines = Vec::new();
    let mut family_lines = Vec::new();
    let mut quotients_ok: Result<(), String> = Ok(());
    let mut families_ok: Result<(), String> = Ok(());
    let mut trip_ok: Result<(), String> = Ok(());
    for (k, theta) in cs.iter().enumerate() {
        match quotient(&s, theta) {
            Ok((q, map)) => {
                quotient_lines.push(format!("theta{k} -> {} elements", q.algebra().n()));
                if quotients_ok.is_ok() {
                    quotients_ok = is_slata_morphism(&s, &q, &map)
                        .map_err(|e| format!("projection of theta{k}: {e}"));
                }
            }
            Err(e) => {
                quotient_lines.push(format!("theta{k} -> error"));
                if quotients_ok.is_ok() {
                    quotients_ok = Err(format!("theta{k}: {e}"));
                }
            }
        }
        match family_from_congruence(&s, theta) {
            Ok(f) => {
                family_lines.push(family_line(&format!("theta{k}"), &f));
                if families_ok.is_ok() {
                    let rep = is_vietoris_family(&dual.space, &r_i, &r_d, &f);
                    if !rep.all_pass() {
                        let bad = rep
                            .checks()
                            .into_iter()
                            .find(|(_, v)| !v.passed())
                            .map(|(n, v)| format!("{n}: {}", v.witness().unwrap_or("failed")))
                            .unwrap_or_else(|| "failed".to_string());
                        families_ok = Err(format!("family of theta{k}: {bad}"));
                    }
                }
                if trip_ok.is_ok() {
                    trip_ok = match congruence_from_family(&s, &f) {
                        Ok(back) if back == *theta => Ok(()),
                        Ok(back) => Err(format!("theta{k} came back as {back}")),
                        Err(e) => Err(format!("theta{k}: {e}")),
                    };
                }
            }
            Err(e) => {
                family_lines.push(format!("theta{k} = error"));
                if families_ok.is_ok() {
                    families_ok = Err(format!("theta{k}: {e}"));
                }
            }
        }
    }
    report.artifact("quotients", quotient_lines);
    report.artifact("families", family_lines);
    report.check(Check::of("quotients.projections", quotients_ok));
    report.check(Check::of("families.conditions", families_ok));
    report.check(Check::of("roundtrip.congruence", trip_ok));

    let fs = enumerate_vietoris_families(&s, max_size.max(12))
        .map_err(|e| limit(e.to_string()))?;
    let mut back_ok: Result<(), String> = Ok(());
    for (k, f) in fs.iter().enumerate() {
        if back_ok.is_ok() {
            back_ok = match congruence_from_family(&s, f) {
                Ok(theta) => match family_from_congruence(&s, &theta) {
                    Ok(again) if again == *f => Ok(()),
                    Ok(_) => Err(format!("family #{k} did not survive the round trip")),
                    Err(e) => Err(format!("family #{k}: {e}")),
                },
                Err(e) => Err(format!("family #{k}: {e}")),
            };
        }
    }
    report.check(Check::of("roundtrip.family", back_ok));
    report.seal();
    Ok(report)
}

pub fn cmd_vietoris(
    doc: &AlgebraDocument,
    input_name: &str,
    max_size: usize,
) -> Result<Report, CliError> {
    require_pair(doc)?;
    let built = build_all(doc)?;
    let mut report = Report::new("vietoris", input_name, &doc.name);
    report.checks = built.checks;
    let Some(s) = built.slata else {
        report.seal();
        return Ok(report);
    };
    let fs = enumerate_vietoris_families(&s, max_size).map_err(|e| limit(e.to_string()))?;
    let cs = enumerate_congruences(s.algebra(), &[s.i(), s.d()], s.algebra().n())
        .map_err(|e| limit(e.to_string()))?;
    report.artifact(
        "families",
        fs.iter()
            .enumerate()
            .map(|(k, f)| family_line(&format!("F{k}"), f))
            .collect(),
    );
    report.artifact(
        "counts",
        vec![format!("congruences: {}", cs.len()), format!("families: {}", fs.len())],
    );
    report.check(if cs.len() == fs.len() {
        Check::pass("bijection.count")
    } else {
        Check::fail(
            "bijection.count",
            format!("{} congruences vs {} families", cs.len(), fs.len()),
        )
    });
    let mut back_ok: Result<(), String> = Ok(());
    for (k, f) in fs.iter().enumerate() {
        if back_ok.is_ok() {
            back_ok = match congruence_from_family(&s, f) {
                Ok(theta) => match family_from_congruence(&s, &theta) {
                    Ok(again) if again == *f => Ok(()),
                    Ok(_) => Err(format!("family F{k} did not survive the round trip")),
                    Err(e) => Err(format!("family F{k}: {e}")),
                },
                Err(e) => Err(format!("family F{k}: {e}")),
            };
        }
    }
    report.check(Check::of("roundtrip.family", back_ok));
    report.seal();
    Ok(report)
}

pub fn cmd_verify_duality(
    doc: &AlgebraDocument,
    input_name: &str,
    max_size: usize,
) -> Result<Report, CliError> {
    gate_carrier(doc, max_size)?;
    let built = build_all(doc)?;
    let mut report = Report::new("verify-duality", input_name, &doc.name);
    report.checks = built.checks;
    let Some(a) = &built.algebra else {
        report.seal();
        return Ok(report);
    };
    let structure_ok = match ops_mode(doc)? {
        OpsMode::Plain => true,
        OpsMode::Pair => built.slata.is_some(),
        OpsMode::Tense => built.eslata.is_some(),
    };
    if !structure_ok {
        report.seal();
        return Ok(report);
    }
    let dual = dual_space(a);
    gate_closed_family(&dual)?;
    report.verdicts("", verify_s_space(&dual.space).checks());

    let iso: Result<Vec<usize>, String>;
    match (built.slata.as_ref(), built.eslata.as_ref()) {
        (Some(s), _) => {
            let (_, r_i, r_d) = dualize_slata(s);
            report.verdicts("", verify_slata_space(&dual.space, &r_i, &r_d).checks());
            iso = unit_isomorphism(s);
            report.check(Check::of(
                "duality.algebra-roundtrip",
                algebra_of_slata_space(&dual.space, &r_i, &r_d).map(|_| ()),
            ));
            report.check(Check::of(
                "duality.counit",
                verify_counit_slata(&dual.space, &r_i, &r_d),
            ));
        }
        (_, Some(e)) => {
            let (_, sp) = dualize_eslata(e);
            report.verdicts("", verify_eslata_space(&sp).checks());
            iso = eslata_unit_isomorphism(e);
            report.check(Check::of(
                "duality.algebra-roundtrip",
                algebra_of_eslata_space(&sp).map(|_| ()),
            ));
            report.check(Check::of(
                "duality.counit-past",
                verify_counit_slata(&sp.space, &sp.i1, &sp.d1),
            ));
            report.check(Check::of(
                "duality.counit-future",
                verify_counit_slata(&sp.space, &sp.i2, &sp.d2),
            ));
        }
        (None, None) => {
            iso = semilattice_unit_isomorphism(a);
            report.check(Check::of(
                "duality.algebra-roundtrip",
                dual_algebra(&dual.space).map(|_| ()),
            ));
            report.check(Check::of("duality.counit", h_map(&dual.space).map(|_| ())));
        }
    }
    match iso {
        Ok(phi) => {
            report.check(Check::pass("duality.unit-iso"));
            report.artifact(
                "unit-iso",
                phi.iter()
                    .enumerate()
                    .map(|(x, &si)| {
                        format!(
                            "{} -> S{si} = {}",
                            doc.labels[x],
                            point_set(dual.space.s_closed()[si])
                        )
                    })
                    .collect(),
            );
        }
        Err(w) => report.check(Check::fail("duality.unit-iso", w)),
    }
    report.seal();
    Ok(report)
}

const CORPUS_CEILING: usize = 5;
const FROZEN_COUNTS: [usize; 5] = [1, 2, 6, 36, 380];
const RELATION_SAMPLES: usize = 200;

pub fn cmd_corpus(max_size: usize, seed: u64) -> Result<Report, CliError> {
    if max_size == 0 || max_size > CORPUS_CEILING {
        return Err(limit(format!(
            "corpus size must be between 1 and {CORPUS_CEILING}, got {max_size}"
        )));
    }
    let mut report = Report::new("corpus", "-", &format!("corpus-{max_size}"));
    let mut count_lines = Vec::new();
    let mut pool: Vec<MeetSemilattice> = Vec::new();
    for sz in 1..=max_size {
        let algs = meet_semilattices_with_top(sz);
        count_lines.push(format!("size {sz}: {} algebras", algs.len()));
        report.check(if algs.len() == FROZEN_COUNTS[sz - 1] {
            Check::pass(format!("corpus.size-{sz}.count"))
        } else {
            Check::fail(
                format!("corpus.size-{sz}.count"),
                format!("expected {}, generated {}", FROZEN_COUNTS[sz - 1], algs.len()),
            )
        });
        let mut duality_ok: Result<(), String> = Ok(());
        for (k, a) in algs.iter().enumerate() {
            if duality_ok.is_err() {
                break;
            }
            let dual = dual_space(a);
            if !verify_s_space(&dual.space).all_pass() {
                duality_ok = Err(format!("algebra #{k}: dual space axioms fail"));
            } else if let Err(w) = semilattice_unit_isomorphism(a) {
                duality_ok = Err(format!("algebra #{k}: {w}"));
            }
        }
        report.check(Check::of(format!("corpus.size-{sz}.duality"), duality_ok));
        if (2..=4).contains(&sz) {
            pool.extend(algs);
        }
    }
    report.artifact("counts", count_lines);

    // Seeded spot-checks of the relation calculus on random composable
    // homomorphism chains.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut identities_ok: Result<(), String> = Ok(());
    let mut functor_ok: Result<(), String> = Ok(());
    let mut assoc_ok: Result<(), String> = Ok(());
    let mut samples = 0usize;
    if pool.len() >= 2 {
        let duals: Vec<DualSpace> = pool.iter().map(dual_space).collect();
        let pick_hom = |rng: &mut ChaCha8Rng, a: usize, b: usize| -> Vec<usize> {
            let homs = pool[a].homomorphisms(&pool[b]);
            homs[rng.random_range(0..homs.len())].clone()
        };
        let compose = |g: &[usize], h: &[usize]| -> Vec<usize> {
            h.iter().map(|&x| g[x]).collect()
        };
        for _ in 0..RELATION_SAMPLES {
            let a1 = rng.random_range(0..pool.len());
            let a2 = rng.random_range(0..pool.len());
            let a3 = rng.random_range(0..pool.len());
            let a4 = rng.random_range(0..pool.len());
            let h = pick_hom(&mut rng, a1, a2);
            let g = pick_hom(&mut rng, a2, a3);
            let k = pick_hom(&mut rng, a3, a4);
            let r_h = relation_from_hom(&duals[a1], &duals[a2], &h);
            let r_g = relation_from_hom(&duals[a2], &duals[a3], &g);
            let r_k = relation_from_hom(&duals[a3], &duals[a4], &k);
            samples += 1;
            if identities_ok.is_ok() {
                let sp_src = dual_specialization(&r_h.src);
                let sp_tgt = dual_specialization(&r_h.tgt);
                let left = compose_star(&r_h, &sp_src);
                let right = compose_star(&sp_tgt, &r_h);
                if left.at != r_h.at || right.at != r_h.at {
                    identities_ok = Err(format!("identity law fails for h = {h:?}"));
                }
            }
            if functor_ok.is_ok() {
                let direct = relation_from_hom(&duals[a1], &duals[a3], &compose(&g, &h));
                let starred = compose_star(&r_h, &r_g);
                if direct.at != starred.at {
                    functor_ok = Err(format!("composite of h = {h:?} and g = {g:?} disagrees"));
                }
            }
            if assoc_ok.is_ok() {
                let hg = compose_star(&r_h, &r_g);
                let gk = compose_star(&r_g, &r_k);
                let left = compose_star(&hg, &r_k);
                let right = compose_star(&r_h, &gk);
                if left.at != right.at {
                    assoc_ok = Err(format!(
                        "associativity fails for h = {h:?}, g = {g:?}, k = {k:?}"
                    ));
                }
            }
        }
    }
    report.artifact(
        "samples",
        vec![format!("relation chains: {samples} (seed {seed})")],
    );
    report.check(Check::of("corpus.relations.identities", identities_ok));
    report.check(Check::of("corpus.relations.functor", functor_ok));
    report.check(Check::of("corpus.relations.associativity", assoc_ok));
    report.seal();
    Ok(report)
}
