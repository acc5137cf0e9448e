use std::fmt::Write as _;

use regrade::algebra::GradedAlgebra;
use regrade::identities::Codimensions;
use regrade::io::{Encoder, Pairing};
use regrade::pairing::{self, Bicharacter};
use regrade::regularity::{self, fmt_tuple, ConditionIStatus};
use regrade::verify::{self, Suite};
use regrade::GroupSpec;
use serde_json::{json, Value};

use crate::{Failure, Outcome};

fn elements(gs: &[regrade::GroupElement]) -> Value {
    Value::Array(gs.iter().map(|g| json!(g.to_string())).collect())
}

pub fn group_info(g: &GroupSpec) -> Outcome {
    let (sum, _) = g.miller_sum();
    let all = g.enumerate();
    let report = json!({
        "group": g.to_string(),
        "moduli": g.moduli(),
        "order": g.order(),
        "exponent": g.exponent(),
        "elements": elements(&all),
        "sum_of_elements": sum.to_string(),
    });
    let text = format!(
        "group {g}\norder {}\nexponent {}\nsum of elements {sum}\nelements {}",
        g.order(),
        g.exponent(),
        fmt_tuple(&all)
    );
    Outcome { report, text, verdict: true }
}

fn bicharacter_summary(
    enc: &Encoder,
    beta: &Bicharacter,
    report: &mut serde_json::Map<String, Value>,
    text: &mut String,
) -> bool {
    let radical = pairing::radical(beta);
    let (minimal, det) = match pairing::is_minimal(beta) {
        Ok(m) => (m.minimal(), Some(m.det)),
        Err(_) => (false, None),
    };
    report.insert("bicharacter".into(), enc.table(beta.table()));
    report.insert("alternating".into(), json!(beta.is_alternating()));
    report.insert("radical".into(), elements(&radical));
    report.insert("det".into(), det.as_ref().map_or(Value::Null, |d| enc.scalar(d)));
    report.insert("minimal".into(), json!(minimal));
    let _ = writeln!(text, "alternating {}", beta.is_alternating());
    let _ = writeln!(text, "radical {}", fmt_tuple(&radical));
    if let Some(d) = &det {
        let _ = writeln!(text, "det {d}");
    }
    let _ = writeln!(text, "minimal {minimal}");
    minimal
}

pub fn pairing_check(enc: &Encoder, p: &Pairing) -> Outcome {
    let mut map = serde_json::Map::new();
    let mut text = String::new();
    map.insert("valid".into(), json!(true));
    match p {
        Pairing::Bicharacter(beta) => {
            map.insert("kind".into(), json!("bicharacter"));
            map.insert("group".into(), json!(beta.group().to_string()));
            let _ = writeln!(text, "valid bicharacter on {}", beta.group());
            bicharacter_summary(enc, beta, &mut map, &mut text);
        }
        Pairing::Cocycle(tau) => {
            map.insert("kind".into(), json!("cocycle"));
            map.insert("group".into(), json!(tau.group().to_string()));
            let _ = writeln!(text, "valid cocycle on {}", tau.group());
            let q0 = pairing::regular_elements(tau);
            map.insert("regular_elements".into(), elements(&q0));
            let _ = writeln!(text, "regular elements {}", fmt_tuple(&q0));
            let beta = pairing::induced_bicharacter(tau);
            bicharacter_summary(enc, &beta, &mut map, &mut text);
        }
    }
    Outcome { report: Value::Object(map), text, verdict: true }
}

pub fn algebra_validate(a: &GradedAlgebra) -> Outcome {
    let support = a.support();
    let report = json!({
        "valid": true,
        "dim": a.dim(),
        "group": a.group().to_string(),
        "conductor": a.conductor(),
        "commutative": a.is_commutative(),
        "support": elements(&support),
        "full_support": a.has_full_support(),
    });
    let text = format!(
        "valid: {a}\nconductor {}\ncommutative {}\nsupport {}",
        a.conductor(),
        a.is_commutative(),
        fmt_tuple(&support)
    );
    Outcome { report, text, verdict: true }
}

pub fn algebra_radical(enc: &Encoder, a: &GradedAlgebra) -> Result<Outcome, Failure> {
    let j = a.jacobson_radical().map_err(|e| Failure::Input(e.to_string()))?;
    let nil = a.nilpotency_index(&j);
    let rg = a.radical_grading_report().map_err(|e| Failure::Input(e.to_string()))?;
    let basis: Vec<Value> = j.basis().iter().map(|v| Value::Array(v.iter().map(|c| enc.scalar(c)).collect())).collect();
    let report = json!({
        "dim": rg.j_dim,
        "basis": basis,
        "nilpotency_index": nil,
        "graded": rg.is_graded,
        "degree_zero_dim": rg.j0_dim,
        "degree_zero_identity": rg.identity_holds,
    });
    let text = format!(
        "dim J(A) {}\nnilpotency index {}\ngraded {}\ndim J(A_0) {}\nJ(A_0) = J(A) ∩ A_0 {}",
        rg.j_dim,
        nil.map_or("-".into(), |n| n.to_string()),
        rg.is_graded,
        rg.j0_dim,
        rg.identity_holds
    );
    Ok(Outcome { report, text, verdict: true })
}

pub fn regular_check(enc: &Encoder, a: &GradedAlgebra, cap: usize) -> Result<Outcome, Failure> {
    let verdict = regularity::is_regular(a, cap);
    let ci = &verdict.condition_i;
    let (status, tuple) = match &ci.status {
        ConditionIStatus::Verified => ("verified", Value::Null),
        ConditionIStatus::FailsAtTuple(t) => ("fails", elements(t)),
        ConditionIStatus::UndecidedBeyondCap => ("undecided", Value::Null),
    };
    let cii = &verdict.condition_ii;
    let mut text = String::new();
    let _ = writeln!(text, "{a}");
    let _ = write!(text, "condition (i): {status}");
    if let ConditionIStatus::FailsAtTuple(t) = &ci.status {
        let _ = write!(text, " at {}", fmt_tuple(t));
    }
    let _ = writeln!(text, " ({} states)", ci.states_explored);
    let _ = write!(text, "condition (ii): {}", if cii.holds { "holds" } else { "fails" });
    if let Some(w) = &cii.witness {
        let _ = write!(text, " witness {w}");
    }
    if let Some(r) = &cii.reason {
        let _ = write!(text, " ({r})");
    }
    let _ = writeln!(text);

    let decomposition = regularity::decomposition_report(a).ok();
    let structure = if verdict.is_regular() { regularity::verify_structure_theorem(a, cap).ok() } else { None };
    let regular = if verdict.is_undecided() { Value::Null } else { json!(verdict.is_regular()) };
    let _ = writeln!(
        text,
        "regular: {}",
        if verdict.is_undecided() { "undecided".to_string() } else { verdict.is_regular().to_string() }
    );
    if let Some(d) = &decomposition {
        let _ = writeln!(text, "det {}\nminimal {}\nradical {}", d.det, d.minimal, fmt_tuple(&d.radical));
        if let Some(e) = d.exp_prediction.filter(|_| verdict.is_regular()) {
            let _ = writeln!(text, "predicted exponent {e}");
        }
    }
    if let Some(s) = &structure {
        for (c, clause) in &s.clauses {
            let state = if !clause.applicable {
                "n/a"
            } else if clause.holds {
                "holds"
            } else {
                "FAILS"
            };
            let _ = writeln!(text, "({c}) {state}: {}", clause.detail);
        }
    }
    let report = json!({
        "regular": regular,
        "full_support": verdict.full_support,
        "condition_i": { "status": status, "tuple": tuple, "states_explored": ci.states_explored },
        "condition_ii": {
            "holds": cii.holds,
            "witness": cii.witness.as_ref().map(|w| json!([w.left, w.right])),
            "reason": cii.reason,
        },
        "beta": cii.beta.as_ref().map(|b| enc.table(b.table())),
        "det": decomposition.as_ref().map(|d| enc.scalar(&d.det)),
        "minimal": decomposition.as_ref().map(|d| d.minimal),
        "radical": decomposition.as_ref().map(|d| elements(&d.radical)),
        "exp_prediction": decomposition.as_ref().and_then(|d| d.exp_prediction).filter(|_| verdict.is_regular()),
        "structure": structure.as_ref().map(|s| json!({
            "group_order": s.group_order,
            "dim_a": s.dim_a,
            "dim_a0": s.dim_a0,
            "dim_j": s.dim_j,
            "dim_j0": s.dim_j0,
            "k": s.k,
            "a0_local": s.a0_local,
            "all_hold": s.all_hold(),
            "clauses": s.clauses.iter().map(|(c, cl)| json!({
                "clause": c.to_string(),
                "applicable": cl.applicable,
                "holds": cl.holds,
                "detail": cl.detail,
            })).collect::<Vec<_>>(),
        })),
    });
    Ok(Outcome { report, text, verdict: verdict.is_regular() || verdict.is_undecided() })
}

pub fn regular_matrix(enc: &Encoder, a: &GradedAlgebra) -> Outcome {
    match regularity::decomposition_report(a) {
        Ok(d) => {
            let mut text = String::new();
            for row in d.matrix() {
                let _ = writeln!(text, "{}", row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\t"));
            }
            let _ = writeln!(text, "det {}\nminimal {}\nradical {}", d.det, d.minimal, fmt_tuple(&d.radical));
            let report = json!({
                "group": a.group().to_string(),
                "elements": elements(&a.group().enumerate()),
                "matrix": enc.table(d.matrix()),
                "det": enc.scalar(&d.det),
                "minimal": d.minimal,
                "radical": elements(&d.radical),
                "exp_prediction": d.exp_prediction,
            });
            Outcome { report, text, verdict: d.minimal }
        }
        Err(e) => {
            let witness = e.witness().map(|w| json!([w.left, w.right]));
            Outcome {
                report: json!({ "extracted": false, "reason": e.to_string(), "witness": witness }),
                text: format!("no bicharacter: {e}"),
                verdict: false,
            }
        }
    }
}

pub fn codim(a: &GradedAlgebra, max_n: usize, cap: usize, ordinary: bool, nonzero: bool) -> Result<Outcome, Failure> {
    let engine = Codimensions::with_max_n(a, cap);
    let mut rows = Vec::with_capacity(max_n);
    let mut text = String::new();
    for n in 1..=max_n {
        let r = if ordinary { engine.full(n) } else { engine.graded(n) }.map_err(|e| Failure::Input(e.to_string()))?;
        let per_tuple: serde_json::Map<String, Value> = r
            .per_tuple_ranks
            .iter()
            .filter(|(_, rank)| !nonzero || *rank > 0)
            .map(|(t, rank)| (fmt_tuple(t), json!(rank)))
            .collect();
        let _ = write!(text, "n={n} graded={}", r.graded_codim);
        if let Some(c) = r.ordinary_codim {
            let _ = write!(text, " ordinary={c}");
        }
        let _ = writeln!(text);
        rows.push(json!({
            "n": n,
            "graded": r.graded_codim,
            "ordinary": r.ordinary_codim,
            "per_tuple": per_tuple,
        }));
    }
    Ok(Outcome { report: Value::Array(rows), text, verdict: true })
}

pub fn verify(suite: Suite) -> Outcome {
    let results = verify::run_suite(suite);
    let text = results.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    let passed = results.iter().all(|r| r.passed);
    let report = json!({
        "passed": passed,
        "criteria": results.iter().map(|r| json!({
            "id": r.id,
            "title": r.title,
            "passed": r.passed,
            "detail": r.detail,
        })).collect::<Vec<_>>(),
    });
    Outcome { report, text, verdict: passed }
}
