//! JSON formats: preorders, belief sets and scenarios.
//!
//! A preorder is written as
//! `{"signature": ["a","b"], "ranks": {"a b": 0, "a -b": 1, "-a b": 1, "-a -b": 2}}`
//! with worlds in canonical order. A scenario names a signature, an initial
//! state (a preorder or `{"beliefs": "<formula>"}`), a list of steps and an
//! optional list of conditional queries evaluated after every step.

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::change::{apply_script, ChangeError, ChangeOperator, OpConfig, ScriptError, Step, StepKind};
use crate::conditionals::{state_accepts, Conditional, ConditionalError};
use crate::logic::{formula_from_models, BeliefSet, Formula, LogicError, Signature, WorldSet};
use crate::orders::{state_for_belief_set, EpistemicState, OrderError, TotalPreorder};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("query {query}: {source}")]
    Query {
        query: String,
        #[source]
        source: ConditionalError,
    },
    #[error("{0}")]
    Format(String),
}

impl IoError {
    /// Whether the error stems from inconsistent input rather than from a
    /// malformed file.
    pub fn is_inconsistency(&self) -> bool {
        matches!(
            self,
            IoError::Order(OrderError::InconsistentBeliefs)
                | IoError::Query {
                    source: ConditionalError::Change(ChangeError::InconsistentInput),
                    ..
                }
        )
    }
}

/// `{"signature": [...], "ranks": {...}}`.
pub fn preorder_to_json(sig: &Signature, order: &TotalPreorder) -> Value {
    let mut ranks = Map::new();
    for w in sig.worlds() {
        ranks.insert(sig.world_text(w), json!(order.rank(w)));
    }
    json!({ "signature": sig.atoms(), "ranks": ranks })
}

/// `{"formula": "<canonical DNF>", "models": [...]}`.
pub fn models_to_json(sig: &Signature, ws: WorldSet) -> Value {
    json!({
        "formula": formula_from_models(sig, ws).to_string(),
        "models": sig.world_texts(ws),
    })
}

pub fn beliefs_to_json(beliefs: &BeliefSet) -> Value {
    models_to_json(beliefs.signature(), beliefs.models())
}

fn ranks_from_map(sig: &Signature, ranks: &Map<String, Value>) -> Result<TotalPreorder, IoError> {
    let mut out: Vec<Option<u32>> = vec![None; sig.world_count()];
    for (text, rank) in ranks {
        let w = sig.parse_world(text)?;
        let r = rank
            .as_u64()
            .and_then(|r| u32::try_from(r).ok())
            .ok_or_else(|| IoError::Format(format!("rank of '{text}' must be a non-negative integer")))?;
        if out[w.index()].replace(r).is_some() {
            return Err(IoError::Format(format!("world '{text}' is listed twice")));
        }
    }
    let missing: Vec<String> = sig
        .worlds()
        .filter(|w| out[w.index()].is_none())
        .map(|w| sig.world_text(w))
        .collect();
    if !missing.is_empty() {
        return Err(IoError::Format(format!("missing worlds: {}", missing.join(", "))));
    }
    let ranks: Vec<u32> = out.into_iter().map(|r| r.expect("all worlds present")).collect();
    Ok(TotalPreorder::from_ranks(&ranks)?)
}

fn signature_from(value: &Value) -> Result<Signature, IoError> {
    let atoms: Vec<String> = serde_json::from_value(value.clone())?;
    Ok(Signature::new(atoms)?)
}

/// Reads a preorder document. Ranks are normalized; missing, duplicate or
/// unknown worlds are rejected.
pub fn preorder_from_json(value: &Value) -> Result<(Signature, TotalPreorder), IoError> {
    let obj = value
        .as_object()
        .ok_or_else(|| IoError::Format("preorder must be a JSON object".into()))?;
    let sig = signature_from(obj.get("signature").ok_or_else(|| IoError::Format("missing 'signature'".into()))?)?;
    let ranks = obj
        .get("ranks")
        .and_then(Value::as_object)
        .ok_or_else(|| IoError::Format("missing 'ranks' object".into()))?;
    let order = ranks_from_map(&sig, ranks)?;
    Ok((sig, order))
}

pub fn parse_preorder(text: &str) -> Result<(Signature, TotalPreorder), IoError> {
    preorder_from_json(&serde_json::from_str(text)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StepFile {
    op: String,
    formula: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    signature: Vec<String>,
    initial: Value,
    #[serde(default)]
    steps: Vec<StepFile>,
    #[serde(default)]
    queries: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub signature: Signature,
    pub initial: EpistemicState,
    pub steps: Vec<Step>,
    pub queries: Vec<Conditional>,
}

pub fn parse_scenario(text: &str) -> Result<Scenario, IoError> {
    let file: ScenarioFile = serde_json::from_str(text)?;
    let sig = Signature::new(file.signature)?;
    let init = file
        .initial
        .as_object()
        .ok_or_else(|| IoError::Format("'initial' must be an object".into()))?;
    let initial = if let Some(beliefs) = init.get("beliefs") {
        if init.len() != 1 {
            return Err(IoError::Format("'initial' with 'beliefs' takes no other keys".into()));
        }
        let text = beliefs
            .as_str()
            .ok_or_else(|| IoError::Format("'beliefs' must be a formula string".into()))?;
        let f = Formula::parse(&sig, text)?;
        state_for_belief_set(&sig, &BeliefSet::of(&f))?
    } else {
        if let Some(s) = init.get("signature") {
            if signature_from(s)? != sig {
                return Err(IoError::Format("initial preorder uses a different signature".into()));
            }
        }
        let ranks = init
            .get("ranks")
            .and_then(Value::as_object)
            .ok_or_else(|| IoError::Format("'initial' needs 'ranks' or 'beliefs'".into()))?;
        EpistemicState::new(&sig, ranks_from_map(&sig, ranks)?)?
    };
    let steps = file
        .steps
        .into_iter()
        .map(|s| {
            let kind = match s.op.as_str() {
                "contract" => StepKind::Contract,
                "revise" => StepKind::Revise,
                other => return Err(IoError::Format(format!("unknown step op '{other}'"))),
            };
            Ok(Step {
                kind,
                formula: Formula::parse(&sig, &s.formula)?,
            })
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    let queries = file
        .queries
        .iter()
        .map(|q| {
            Conditional::parse(&sig, q).map_err(|source| IoError::Query {
                query: q.clone(),
                source,
            })
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    Ok(Scenario {
        signature: sig,
        initial,
        steps,
        queries,
    })
}

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Script(#[from] ScriptError),
    #[error(transparent)]
    Io(#[from] IoError),
}

/// Runs a scenario and renders the trace. The output is deterministic.
pub fn run_scenario(scenario: &Scenario, config: &OpConfig) -> Result<Value, EvalError> {
    let trace = apply_script(&scenario.initial, &scenario.steps, config)?;
    let sig = &scenario.signature;
    let mut entries = Vec::with_capacity(trace.len());
    for (i, state) in trace.iter().enumerate() {
        let mut queries = Vec::new();
        for q in &scenario.queries {
            let op: &dyn ChangeOperator = match q {
                Conditional::Ramsey { .. } => &config.revision,
                Conditional::Contractional { .. } => &config.contraction,
            };
            let accepted = state_accepts(op, state, q).map_err(|source| IoError::Query {
                query: q.to_string(),
                source,
            })?;
            queries.push(json!({ "query": q.to_string(), "accepted": accepted }));
        }
        let (op, formula) = match i.checked_sub(1).map(|k| &scenario.steps[k]) {
            None => (Value::Null, Value::Null),
            Some(step) => (
                json!(match step.kind {
                    StepKind::Contract => "contract",
                    StepKind::Revise => "revise",
                }),
                json!(step.formula.to_string()),
            ),
        };
        entries.push(json!({
            "step": i,
            "op": op,
            "formula": formula,
            "beliefs": models_to_json(sig, state.belief_models()),
            "queries": queries,
        }));
    }
    let last = trace.last().expect("trace is nonempty");
    Ok(json!({
        "signature": sig.atoms(),
        "contraction": config.contraction.short_name(),
        "revision": config.revision.short_name(),
        "trace": entries,
        "final": preorder_to_json(sig, last.order()),
    }))
}
