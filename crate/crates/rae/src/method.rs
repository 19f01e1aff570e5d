//! Method specifications as written on the command line.
//!
//! `naive`, `augmented`, `robust` or `arg:<semantics>[:<preference>]`, where
//! the preference is `scenario` (the default), `uniform`, or priority groups
//! separated by `/` with equally important properties joined by `+`, as in
//! `arg:s-preferred:accuracy/simplicity`.

use std::fmt;
use std::str::FromStr;

use rae_core::{derive_model_preference, Error, Method, PreferenceRanking, Scenario};

#[derive(Debug, Clone, PartialEq)]
pub enum PreferenceSource {
    /// Whatever the scenario document specifies.
    Scenario,
    Uniform,
    Priority(Vec<Vec<String>>),
}

impl PreferenceSource {
    pub fn resolve(&self, s: &Scenario) -> rae_core::Result<PreferenceRanking> {
        match self {
            PreferenceSource::Scenario => s.preference_ranking(),
            PreferenceSource::Uniform => Ok(PreferenceRanking::uniform(s.models.len())),
            PreferenceSource::Priority(groups) => derive_model_preference(s, groups),
        }
    }

    /// Parses priority groups, e.g. `accuracy,simplicity` with `,` as the
    /// group separator.
    pub fn parse_priority(text: &str, separator: char) -> rae_core::Result<Self> {
        match text {
            "scenario" => return Ok(PreferenceSource::Scenario),
            "uniform" => return Ok(PreferenceSource::Uniform),
            _ => {}
        }
        let groups = text
            .split(separator)
            .map(|g| {
                let names: Vec<String> = g.split('+').map(|p| p.trim().to_owned()).collect();
                if names.iter().any(String::is_empty) {
                    Err(Error::Config(format!("empty property name in preference `{text}`")))
                } else {
                    Ok(names)
                }
            })
            .collect::<rae_core::Result<_>>()?;
        Ok(PreferenceSource::Priority(groups))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodSpec {
    pub method: Method,
    pub preference: PreferenceSource,
    label: String,
}

impl MethodSpec {
    pub fn new(method: Method, preference: PreferenceSource) -> Self {
        let label = match (&method, &preference) {
            (Method::Argumentative(_), PreferenceSource::Uniform) => format!("{method}:uniform"),
            (Method::Argumentative(_), PreferenceSource::Priority(groups)) => {
                let groups: Vec<String> = groups.iter().map(|g| g.join("+")).collect();
                format!("{method}:{}", groups.join("/"))
            }
            _ => method.to_string(),
        };
        MethodSpec { method, preference, label }
    }

    /// Name used in reports.
    pub fn label(&self) -> &str {
        &self.label
    }
}

impl fmt::Display for MethodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl FromStr for MethodSpec {
    type Err = Error;

    fn from_str(s: &str) -> rae_core::Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("arg:") {
            let (sem, pref) = match rest.split_once(':') {
                Some((sem, pref)) => (sem, PreferenceSource::parse_priority(pref, '/')?),
                None => (rest, PreferenceSource::Scenario),
            };
            return Ok(MethodSpec::new(Method::Argumentative(sem.parse()?), pref));
        }
        Ok(MethodSpec::new(s.parse()?, PreferenceSource::Scenario))
    }
}

/// Comma-separated method specs.
pub fn parse_method_list(text: &str) -> rae_core::Result<Vec<MethodSpec>> {
    let specs = text
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect::<rae_core::Result<Vec<_>>>()?;
    if specs.is_empty() {
        return Err(Error::Config("no methods given".into()));
    }
    Ok(specs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rae_core::Semantics;

    #[test]
    fn parses_specs() {
        let spec: MethodSpec = "arg:s-preferred:accuracy+simplicity/size".parse().unwrap();
        assert_eq!(spec.method, Method::Argumentative(Semantics::SPreferred));
        assert_eq!(
            spec.preference,
            PreferenceSource::Priority(vec![vec!["accuracy".into(), "simplicity".into()], vec!["size".into()]])
        );
        assert_eq!(spec.label(), "arg:s-preferred:accuracy+simplicity/size");

        let spec: MethodSpec = "arg:d-preferred".parse().unwrap();
        assert_eq!(spec.preference, PreferenceSource::Scenario);
        assert_eq!(spec.label(), "arg:d-preferred");
        assert_eq!("arg:stable:uniform".parse::<MethodSpec>().unwrap().label(), "arg:stable:uniform");
        assert_eq!("robust".parse::<MethodSpec>().unwrap().method, Method::Robust);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!("arg:grounded".parse::<MethodSpec>().is_err());
        assert!("arg:s-preferred:accuracy/".parse::<MethodSpec>().is_err());
        assert!("vote".parse::<MethodSpec>().is_err());
        assert!(parse_method_list("").is_err());
        assert_eq!(parse_method_list("naive, augmented,arg:s-preferred").unwrap().len(), 3);
    }
}
