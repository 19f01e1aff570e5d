//! JSON scenario documents, JSON-lines batches and solution output.

use std::collections::BTreeSet;

use rae_core::{ArgSet, Instance, Scenario, Solution};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    /// The document is not valid JSON or does not match the scenario layout.
    #[error("{context}at `{path}`: {message}")]
    Parse { context: String, path: String, message: String },
    /// Well-formed, but required data is missing.
    #[error("{context}schema error at `{path}`: {message}")]
    Schema { context: String, path: String, message: String },
}

fn parse_with_context(bytes: &[u8], context: String) -> Result<Scenario, FormatError> {
    let de = &mut serde_json::Deserializer::from_slice(bytes);
    let scenario: Scenario = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        FormatError::Parse { context: context.clone(), path, message: inner.to_string() }
    })?;
    check_complete(&scenario, &context)?;
    Ok(scenario)
}

/// Reads one scenario document. Structural invariants beyond completeness of
/// the prediction matrix are left to validation.
pub fn parse_scenario(bytes: &[u8]) -> Result<Scenario, FormatError> {
    parse_with_context(bytes, String::new())
}

fn check_complete(s: &Scenario, context: &str) -> Result<(), FormatError> {
    let ids: BTreeSet<&str> = s.models.iter().map(|m| m.id.as_str()).collect();
    for (i, c) in s.counterfactuals.iter().enumerate() {
        if let Some(missing) = ids.iter().find(|id| !c.predictions.contains_key(**id)) {
            return Err(FormatError::Schema {
                context: context.to_owned(),
                path: format!("counterfactuals[{i}].predictions"),
                message: format!("missing prediction of model `{missing}` on `{}`", c.id),
            });
        }
    }
    Ok(())
}

pub fn write_scenario(s: &Scenario) -> String {
    serde_json::to_string_pretty(s).expect("scenarios always serialize")
}

/// One scenario per non-blank line.
pub fn read_batch(text: &str) -> Result<Vec<Scenario>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(n, line)| parse_with_context(line.as_bytes(), format!("line {}: ", n + 1)))
        .collect()
}

pub fn write_batch(batch: &[Scenario]) -> String {
    let mut out = String::new();
    for s in batch {
        out.push_str(&serde_json::to_string(s).expect("scenarios always serialize"));
        out.push('\n');
    }
    out
}

/// Ids of the arguments in `set`, models first.
pub fn extension_ids(inst: &Instance, set: ArgSet) -> Vec<String> {
    let m = inst.len();
    set.iter()
        .map(|p| if p < m { inst.model_id(p) } else { inst.counterfactual_id(p - m) }.to_owned())
        .collect()
}

/// Solution document; `explain` adds the full extension family.
pub fn solution_json(inst: &Instance, sol: &Solution, explain: bool) -> Value {
    let models: Vec<&str> = sol.models.iter().map(|&i| inst.model_id(i)).collect();
    let cfs: Vec<&str> = sol.counterfactuals.iter().map(|&i| inst.counterfactual_id(i)).collect();
    let d = &sol.diagnostics;
    let mut diagnostics = json!({
        "extension_count": d.extension_count,
        "tie_broken": d.tie_broken,
        "seed": d.seed,
    });
    if explain {
        diagnostics["extensions"] = d.extensions.iter().map(|&e| extension_ids(inst, e)).collect();
    }
    json!({
        "method": sol.method.to_string(),
        "models": models,
        "counterfactuals": cfs,
        "label": sol.label,
        "diagnostics": diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = r#"{"label_set":[0,1],"input_id":"x-001","truth_label":0,
        "models":[{"id":"M1","prediction":0,"properties":{"accuracy":0.85}},
                  {"id":"M2","prediction":1,"properties":{"accuracy":0.8}}],
        "counterfactuals":[{"id":"c1","owner":"M1","predictions":{"M1":1,"M2":1}},
                           {"id":"c2","owner":"M2","predictions":{"M1":0,"M2":0}}],
        "preference":{"mode":"priority","priority":[["accuracy"]]}}"#;

    #[test]
    fn parses_document() {
        let s = parse_scenario(DOC.as_bytes()).unwrap();
        assert_eq!(s.models.len(), 2);
        assert_eq!(s.truth_label, Some(0));
        assert_eq!(parse_scenario(write_scenario(&s).as_bytes()).unwrap(), s);
    }

    #[test]
    fn missing_cross_prediction_is_a_schema_error() {
        let doc = DOC.replace(r#""predictions":{"M1":0,"M2":0}"#, r#""predictions":{"M2":0}"#);
        let err = parse_scenario(doc.as_bytes()).unwrap_err();
        assert!(matches!(&err, FormatError::Schema { path, .. } if path == "counterfactuals[1].predictions"), "{err}");
    }

    #[test]
    fn parse_errors_name_the_field() {
        let doc = DOC.replace(r#""prediction":1"#, r#""prediction":"one""#);
        let err = parse_scenario(doc.as_bytes()).unwrap_err();
        assert!(matches!(&err, FormatError::Parse { path, .. } if path == "models[1].prediction"), "{err}");

        let doc = DOC.replace(r#""input_id":"x-001","#, "");
        assert!(parse_scenario(doc.as_bytes()).unwrap_err().to_string().contains("input_id"));
        assert!(parse_scenario(b"{").is_err());
    }

    #[test]
    fn batch_errors_carry_line_numbers() {
        let one = DOC.replace('\n', " ");
        let text = format!("{one}\n\n{{\"label_set\":[]}}\n");
        let err = read_batch(&text).unwrap_err();
        assert!(err.to_string().starts_with("line 3: "), "{err}");
        assert_eq!(read_batch(&format!("{one}\n{one}\n")).unwrap().len(), 2);
    }
}
