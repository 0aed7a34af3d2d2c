//! Check families, their default parameter ranges, and execution.

use std::collections::BTreeMap;

use qc_core::congruence::{verify_lemma, CongruenceResult, LemmaId};
use qc_core::exactalg::Rational;
use qc_core::numeric::{
    check_divisibility, div1_summand, eval_at_one, evaluate_supercongruence, wang_summand, DivisibilityId,
    DivisibilitySpec, SupercongruenceId, SupercongruenceSpec,
};
use qc_core::wzengine::{
    conjecture61_expression, is_laurent, reindex_identity_check, telescope_difference, theorem_lhs_terms,
    theorem_rhs_terms, theorem_summand, verify_boundary, verify_summand_vanishing, verify_theorem, verify_theorem_sums,
    wz_f, wz_pair_difference, BoundaryId, ReindexId, TheoremId, WZPoint,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::SuiteError;

/// A selectable check family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Lemma(LemmaId),
    WzPair,
    WzTelescope,
    Theorem(TheoremId),
    Boundary(BoundaryId),
    Reindex(ReindexId),
    SummandVanishing,
    Super(SupercongruenceId),
    Divisibility(DivisibilityId),
    Conjecture,
    BridgeWzF,
    BridgeWang,
    /// Deliberately wrong right-hand side; never part of `"all"`.
    FixtureCorrupted,
}

pub const FIXTURE_ID: &str = "fixture.corrupted_thm_1_1";

impl Family {
    /// Every family in suite order, fixtures excluded.
    pub fn all() -> Vec<Family> {
        let mut out: Vec<Family> = LemmaId::ALL.into_iter().map(Family::Lemma).collect();
        out.extend([Family::WzPair, Family::WzTelescope]);
        out.extend(TheoremId::ALL.into_iter().map(Family::Theorem));
        out.extend(BoundaryId::ALL.into_iter().map(Family::Boundary));
        out.extend(ReindexId::ALL.into_iter().map(Family::Reindex));
        out.push(Family::SummandVanishing);
        out.extend(SupercongruenceId::ALL.into_iter().map(Family::Super));
        out.extend(DivisibilityId::ALL.into_iter().map(Family::Divisibility));
        out.extend([Family::Conjecture, Family::BridgeWzF, Family::BridgeWang]);
        out
    }

    pub fn id(&self) -> String {
        match self {
            Family::Lemma(id) => format!("lemma.{id}"),
            Family::WzPair => "wz.pair".into(),
            Family::WzTelescope => "wz.telescope".into(),
            Family::Theorem(id) => format!("theorem.{id}"),
            Family::Boundary(id) => format!("boundary.{id}"),
            Family::Reindex(id) => format!("reindex.{id}"),
            Family::SummandVanishing => "reindex.summand_vanishing".into(),
            Family::Super(id) => format!("super.{id}"),
            Family::Divisibility(id) => format!("divisibility.{id}"),
            Family::Conjecture => "conjecture.laurent".into(),
            Family::BridgeWzF => "bridge.wz_f".into(),
            Family::BridgeWang => "bridge.wang_summand".into(),
            Family::FixtureCorrupted => FIXTURE_ID.into(),
        }
    }

    pub fn parse(s: &str) -> Result<Family, SuiteError> {
        if s == FIXTURE_ID {
            return Ok(Family::FixtureCorrupted);
        }
        Family::all().into_iter().find(|f| f.id() == s).ok_or_else(|| SuiteError::UnknownCheck(s.to_string()))
    }
}

/// Parameter overrides; each applies to the families that use it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Overrides {
    /// `n` values for lemma, theorem and fixture checks.
    pub n_list: Option<Vec<i64>>,
    /// Upper `n` for the WZ pair grid, divisibility, the conjecture and bridges.
    pub n_max: Option<i64>,
    /// `m` values for boundary and reindexing checks.
    pub m_list: Option<Vec<i64>>,
    /// Upper `m` for telescoping.
    pub m_max: Option<i64>,
    pub k_min: Option<i64>,
    pub k_max: Option<i64>,
    pub primes: Option<Vec<u64>>,
    pub r: Option<u32>,
}

/// Ranges accepted without `unsafe_extended`.
mod bounds {
    pub const ODD_N: i64 = 31;
    pub const WZ_N: i64 = 16;
    pub const K_ABS: i64 = 6;
    pub const TELESCOPE_M: i64 = 12;
    pub const M: i64 = 15;
    pub const PRIME_POWER: u64 = 400;
    pub const DIVISIBILITY_N: i64 = 128;
    pub const CONJECTURE_N: i64 = 30;
    pub const BRIDGE_N: i64 = 20;
}

/// One unit of work producing one report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Lemma { id: LemmaId, n: i64 },
    WzPair { n: u32, k: i64 },
    Telescope { m: i64, k: i64 },
    Theorem { id: TheoremId, n: i64 },
    Boundary { id: BoundaryId, m: i64 },
    Reindex { id: ReindexId, m: i64 },
    SummandVanishing { m: i64 },
    Super { spec: SupercongruenceSpec },
    Divisibility { id: DivisibilityId, n_max: i64 },
    Conjecture { n: i64 },
    BridgeWzF { n_max: u32 },
    BridgeWang { k_max: u32 },
    Fixture { n: i64 },
}

fn odd_above(what: &str, v: i64, min_exclusive: i64) -> Result<(), SuiteError> {
    if v % 2 == 0 || v <= min_exclusive {
        return Err(SuiteError::Precondition(format!("{what}: value must be odd and > {min_exclusive}, got {v}")));
    }
    Ok(())
}

fn cap(what: &str, v: i64, max: i64, unsafe_extended: bool) -> Result<(), SuiteError> {
    if !unsafe_extended && v > max {
        return Err(SuiteError::OutOfBounds(format!("{what}: {v} exceeds the suite bound {max}")));
    }
    Ok(())
}

fn default_theorem_ns(id: TheoremId) -> Vec<i64> {
    match id {
        TheoremId::Thm11 | TheoremId::Thm12 => vec![3, 5, 7, 9, 15],
        TheoremId::QDiv => vec![3, 5, 7, 9],
        TheoremId::Thm51 | TheoremId::Thm52 => vec![5, 7, 9],
    }
}

fn default_primes(id: SupercongruenceId) -> Vec<(u64, Option<u32>)> {
    match id {
        SupercongruenceId::Div1Half | SupercongruenceId::Div1Full => [3, 5, 7, 11, 13].map(|p| (p, None)).to_vec(),
        SupercongruenceId::Guo1 | SupercongruenceId::Wang => [5, 7, 11, 13].map(|p| (p, None)).to_vec(),
        SupercongruenceId::Guo1Pr | SupercongruenceId::WangPr => vec![(5, Some(2)), (7, Some(2))],
    }
}

/// Expands a family into validated tasks. Preconditions and suite bounds
/// are checked here, before anything runs.
pub fn expand(family: Family, ov: &Overrides, unsafe_extended: bool) -> Result<Vec<Task>, SuiteError> {
    let id = family.id();
    let k_range = |lo: i64, hi: i64| -> Result<Vec<i64>, SuiteError> {
        let (lo, hi) = (ov.k_min.unwrap_or(lo), ov.k_max.unwrap_or(hi));
        if lo > hi {
            return Err(SuiteError::Precondition(format!("{id}: k_min {lo} > k_max {hi}")));
        }
        cap(&id, lo.abs().max(hi.abs()), bounds::K_ABS, unsafe_extended)?;
        Ok((lo..=hi).collect())
    };
    let odd_list = |default: Vec<i64>, list: &Option<Vec<i64>>, min: i64, max: i64| -> Result<Vec<i64>, SuiteError> {
        let vals = list.clone().unwrap_or(default);
        for &v in &vals {
            odd_above(&id, v, min)?;
            cap(&id, v, max, unsafe_extended)?;
        }
        Ok(vals)
    };
    let tasks = match family {
        Family::Lemma(lid) => {
            let ns = odd_list((3..=21).step_by(2).collect(), &ov.n_list, 1, bounds::ODD_N)?;
            ns.into_iter().map(|n| Task::Lemma { id: lid, n }).collect()
        }
        Family::WzPair => {
            let n_max = ov.n_max.unwrap_or(10);
            if n_max < 0 {
                return Err(SuiteError::Precondition(format!("{id}: n_max must be >= 0")));
            }
            cap(&id, n_max, bounds::WZ_N, unsafe_extended)?;
            let ks = k_range(-3, 3)?;
            let mut out = Vec::new();
            for n in 0..=n_max as u32 {
                out.extend(ks.iter().map(|&k| Task::WzPair { n, k }));
            }
            out
        }
        Family::WzTelescope => {
            let m_max = ov.m_max.unwrap_or(8);
            if m_max < 1 {
                return Err(SuiteError::Precondition(format!("{id}: m_max must be >= 1")));
            }
            cap(&id, m_max, bounds::TELESCOPE_M, unsafe_extended)?;
            let ks = k_range(-2, 2)?;
            let mut out = Vec::new();
            for m in 1..=m_max {
                out.extend(ks.iter().map(|&k| Task::Telescope { m, k }));
            }
            out
        }
        Family::Theorem(tid) => {
            let ns = odd_list(default_theorem_ns(tid), &ov.n_list, tid.min_n_exclusive(), bounds::ODD_N)?;
            ns.into_iter().map(|n| Task::Theorem { id: tid, n }).collect()
        }
        Family::Boundary(bid) => {
            let default = if bid.min_m_exclusive() == 1 { vec![3, 5, 7, 9] } else { vec![5, 7, 9] };
            let ms = odd_list(default, &ov.m_list, bid.min_m_exclusive(), bounds::M)?;
            ms.into_iter().map(|m| Task::Boundary { id: bid, m }).collect()
        }
        Family::Reindex(rid) => {
            let ms = odd_list(vec![3, 5, 7], &ov.m_list, 1, bounds::M)?;
            ms.into_iter().map(|m| Task::Reindex { id: rid, m }).collect()
        }
        Family::SummandVanishing => {
            let ms = odd_list(vec![3, 5, 7], &ov.m_list, 1, bounds::M)?;
            ms.into_iter().map(|m| Task::SummandVanishing { m }).collect()
        }
        Family::Super(sid) => {
            let pairs: Vec<(u64, Option<u32>)> = match &ov.primes {
                Some(ps) => ps.iter().map(|&p| (p, if sid.needs_r() { Some(ov.r.unwrap_or(2)) } else { None })).collect(),
                None => default_primes(sid)
                    .into_iter()
                    .map(|(p, r)| (p, r.map(|r| ov.r.unwrap_or(r))))
                    .collect(),
            };
            let mut out = Vec::new();
            for (p, r) in pairs {
                let spec = SupercongruenceSpec::new(sid, p, r).map_err(|e| SuiteError::Precondition(format!("{id}: {e}")))?;
                let terms = p.checked_pow(r.unwrap_or(1)).unwrap_or(u64::MAX);
                if !unsafe_extended && terms > bounds::PRIME_POWER {
                    return Err(SuiteError::OutOfBounds(format!("{id}: p^r = {p}^{} exceeds the suite bound", r.unwrap_or(1))));
                }
                out.push(Task::Super { spec });
            }
            out
        }
        Family::Divisibility(did) => {
            let n_max = ov.n_max.unwrap_or(64);
            DivisibilitySpec::new(did, n_max).map_err(|e| SuiteError::Precondition(format!("{id}: {e}")))?;
            cap(&id, n_max, bounds::DIVISIBILITY_N, unsafe_extended)?;
            vec![Task::Divisibility { id: did, n_max }]
        }
        Family::Conjecture => {
            let n_max = ov.n_max.unwrap_or(24);
            if n_max < 1 {
                return Err(SuiteError::Precondition(format!("{id}: n_max must be >= 1")));
            }
            cap(&id, n_max, bounds::CONJECTURE_N, unsafe_extended)?;
            (1..=n_max).map(|n| Task::Conjecture { n }).collect()
        }
        Family::BridgeWzF | Family::BridgeWang => {
            let n_max = ov.n_max.unwrap_or(10);
            if n_max < 0 {
                return Err(SuiteError::Precondition(format!("{id}: n_max must be >= 0")));
            }
            cap(&id, n_max, bounds::BRIDGE_N, unsafe_extended)?;
            if family == Family::BridgeWzF {
                vec![Task::BridgeWzF { n_max: n_max as u32 }]
            } else {
                vec![Task::BridgeWang { k_max: n_max as u32 }]
            }
        }
        Family::FixtureCorrupted => {
            let ns = odd_list(vec![5], &ov.n_list, 1, bounds::ODD_N)?;
            ns.into_iter().map(|n| Task::Fixture { n }).collect()
        }
    };
    Ok(tasks)
}

/// Result of running one task, before timing and digesting.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub pass: bool,
    pub witness: Value,
    pub warnings: Vec<String>,
    pub error: Option<String>,
}

impl Outcome {
    fn from_congruence(res: CongruenceResult) -> Outcome {
        let mut warnings = Vec::new();
        if res.denominator_shares_modulus_factor {
            warnings.push("reduced denominator shares a factor with the modulus".into());
        }
        Outcome {
            pass: res.pass,
            witness: json!({ "remainder_or_quotient": res.witness, "modulus": res.modulus }),
            warnings,
            error: None,
        }
    }

    fn error(e: impl ToString) -> Outcome {
        Outcome { pass: false, witness: Value::Null, warnings: Vec::new(), error: Some(e.to_string()) }
    }

    fn flag(pass: bool, witness: Value) -> Outcome {
        Outcome { pass, witness, warnings: Vec::new(), error: None }
    }
}

fn congruence(r: qc_core::Result<CongruenceResult>) -> Outcome {
    r.map(Outcome::from_congruence).unwrap_or_else(Outcome::error)
}

fn rat_json(r: &Rational) -> Value {
    Value::String(qc_core::exactalg::format_rational(r))
}

impl Task {
    pub fn check_id(&self) -> String {
        let family = match self {
            Task::Lemma { id, .. } => Family::Lemma(*id),
            Task::WzPair { .. } => Family::WzPair,
            Task::Telescope { .. } => Family::WzTelescope,
            Task::Theorem { id, .. } => Family::Theorem(*id),
            Task::Boundary { id, .. } => Family::Boundary(*id),
            Task::Reindex { id, .. } => Family::Reindex(*id),
            Task::SummandVanishing { .. } => Family::SummandVanishing,
            Task::Super { spec } => Family::Super(spec.id),
            Task::Divisibility { id, .. } => Family::Divisibility(*id),
            Task::Conjecture { .. } => Family::Conjecture,
            Task::BridgeWzF { .. } => Family::BridgeWzF,
            Task::BridgeWang { .. } => Family::BridgeWang,
            Task::Fixture { .. } => Family::FixtureCorrupted,
        };
        family.id()
    }

    pub fn params(&self) -> BTreeMap<String, Value> {
        let pairs: Vec<(&str, Value)> = match self {
            Task::Lemma { n, .. } | Task::Theorem { n, .. } | Task::Conjecture { n } | Task::Fixture { n } => vec![("n", json!(n))],
            Task::WzPair { n, k } => vec![("n", json!(n)), ("k", json!(k))],
            Task::Telescope { m, k } => vec![("m", json!(m)), ("k", json!(k))],
            Task::Boundary { m, .. } | Task::Reindex { m, .. } | Task::SummandVanishing { m } => vec![("m", json!(m))],
            Task::Super { spec } => {
                let mut v = vec![("p", json!(spec.p))];
                if let Some(r) = spec.r {
                    v.push(("r", json!(r)));
                }
                v
            }
            Task::Divisibility { n_max, .. } => vec![("n_min", json!(2)), ("n_max", json!(n_max))],
            Task::BridgeWzF { n_max } => vec![("n_max", json!(n_max))],
            Task::BridgeWang { k_max } => vec![("k_max", json!(k_max))],
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    pub fn run(&self) -> Outcome {
        match *self {
            Task::Lemma { id, n } => congruence(verify_lemma(id, n)),
            Task::WzPair { n, k } => {
                let d = wz_pair_difference(WZPoint::new(n, k));
                Outcome::flag(d.is_zero(), json!({ "difference": d }))
            }
            Task::Telescope { m, k } => match telescope_difference(m, k) {
                Ok(d) => Outcome::flag(d.is_zero(), json!({ "difference": d })),
                Err(e) => Outcome::error(e),
            },
            Task::Theorem { id, n } => congruence(verify_theorem(id, n)),
            Task::Boundary { id, m } => congruence(verify_boundary(id, m)),
            Task::Reindex { id, m } => match reindex_identity_check(id, m) {
                Ok(holds) => Outcome::flag(holds, json!({ "holds": holds })),
                Err(e) => Outcome::error(e),
            },
            Task::SummandVanishing { m } => congruence(verify_summand_vanishing(m)),
            Task::Super { spec } => match evaluate_supercongruence(&spec) {
                Ok(o) => Outcome::flag(
                    o.pass,
                    json!({
                        "residue": o.residue.to_string(),
                        "target": o.target.to_string(),
                        "modulus": o.modulus.to_string(),
                    }),
                ),
                Err(e) => Outcome::error(e),
            },
            Task::Divisibility { id, n_max } => {
                let failing: Vec<i64> = (2..=n_max)
                    .filter(|&n| !check_divisibility(&DivisibilitySpec::new(id, n).expect("validated range")))
                    .collect();
                Outcome::flag(failing.is_empty(), json!({ "failing_n": failing }))
            }
            Task::Conjecture { n } => match conjecture61_expression(n) {
                Ok(r) => Outcome::flag(is_laurent(&r), json!({ "value": r })),
                Err(e) => Outcome::error(e),
            },
            Task::BridgeWzF { n_max } => bridge(n_max, |n| {
                eval_at_one(&wz_f(WZPoint::new(n, 0))).map(|v| (v, div1_summand(n)))
            }),
            Task::BridgeWang { k_max } => bridge(k_max, |k| {
                eval_at_one(&theorem_summand(TheoremId::Thm12, k).to_ratfunc()).map(|v| (v, wang_summand(k)))
            }),
            Task::Fixture { n } => {
                let run = || -> qc_core::Result<CongruenceResult> {
                    let lhs = theorem_lhs_terms(TheoremId::Thm11, n)?;
                    // right side of the sibling theorem: the (1+q)[n]^3 sign is wrong
                    let rhs = theorem_rhs_terms(TheoremId::Thm12, n)?;
                    verify_theorem_sums(&lhs, &rhs, n as u32)
                };
                congruence(run())
            }
        }
    }
}

/// Compares a symbolic value at `q = 1` with its numeric counterpart for
/// each index up to `max`.
fn bridge(max: u32, pair: impl Fn(u32) -> qc_core::Result<(Rational, Rational)>) -> Outcome {
    let mut mismatches = Vec::new();
    for i in 0..=max {
        match pair(i) {
            Ok((a, b)) if a == b => {}
            Ok((a, b)) => mismatches.push(json!({ "index": i, "symbolic": rat_json(&a), "numeric": rat_json(&b) })),
            Err(e) => return Outcome::error(format!("index {i}: {e}")),
        }
    }
    Outcome::flag(mismatches.is_empty(), json!({ "mismatches": mismatches }))
}
