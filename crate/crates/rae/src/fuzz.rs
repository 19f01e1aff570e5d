//! Differential fuzzing of the extension enumerator against the exhaustive
//! oracle, together with the equivalences between semantics.

use rae_core::oracle::{brute_force_extensions, brute_force_preferred_aaf, ORACLE_MAX_ARGUMENTS};
use rae_core::{
    build_aaf, build_baf, enumerate_extensions, enumerate_preferred_aaf, generate_random_scenario,
    map_aaf_extension_to_baf, map_baf_extension_to_aaf, Baf, Error, ExtensionSet, GeneratorConfig,
    Limits, Scenario, Semantics,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The enumerator under test.
pub type Enumerator = fn(&Baf, Semantics, &Limits) -> rae_core::Result<ExtensionSet>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzConfig {
    pub cases: usize,
    pub max_models: usize,
    pub seed: u64,
}

/// The first failing case.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub case: usize,
    pub check: String,
    pub scenario: Scenario,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Passed { cases: usize },
    Failed(Mismatch),
}

/// Draws the `case`-th scenario of a run.
pub fn fuzz_scenario(cfg: &FuzzConfig, case: usize) -> Scenario {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(case as u64);
    let gen = GeneratorConfig {
        n_models: rng.random_range(1..=cfg.max_models),
        label_count: rng.random_range(2..=3),
        invalidity_rate: rng.random_range(0.0..=1.0),
        tie_rate: [0.0, 0.5, 1.0][rng.random_range(0..3)],
        with_truth: false,
    };
    let mut s = generate_random_scenario(&gen, rng.random()).expect("fuzz configuration is valid");
    s.input_id = format!("fuzz-{}-{case}", cfg.seed);
    s
}

/// Compares `enumerate` with the oracle on one scenario and checks that
/// stable equals d-preferred, c-preferred equals s-preferred, and that the
/// pair framework's preferred extensions correspond to the s-preferred ones.
/// Returns the name of the first failing check.
pub fn check_scenario(s: &Scenario, enumerate: Enumerator) -> rae_core::Result<Option<String>> {
    let inst = s.instance()?;
    let pref = s.preference_ranking()?;
    let baf = build_baf(&inst, &pref)?;
    let aaf = build_aaf(&inst, &pref)?;
    let limits = Limits::new(ORACLE_MAX_ARGUMENTS)?;
    let m = inst.len();

    let mut fam = Vec::new();
    for sem in Semantics::ALL {
        let got = enumerate(&baf, sem, &limits)?;
        if got != brute_force_extensions(&baf, sem)? {
            return Ok(Some(format!("enumerator differs from oracle under {sem}")));
        }
        fam.push(got);
    }
    let [stable, d, s_pref, c] = fam.try_into().expect("four semantics");
    if stable != d {
        return Ok(Some("stable differs from d-preferred".into()));
    }
    if c != s_pref {
        return Ok(Some("c-preferred differs from s-preferred".into()));
    }
    let preferred = enumerate_preferred_aaf(&aaf, &limits)?;
    if preferred != brute_force_preferred_aaf(&aaf)? {
        return Ok(Some("pair framework enumerator differs from oracle".into()));
    }
    if preferred.map(|e| map_aaf_extension_to_baf(e, m)) != s_pref
        || s_pref.map(|e| map_baf_extension_to_aaf(e, m)) != preferred
    {
        return Ok(Some("pair framework does not correspond to s-preferred".into()));
    }
    Ok(None)
}

pub fn oracle_check(cfg: &FuzzConfig) -> rae_core::Result<Outcome> {
    oracle_check_with(cfg, enumerate_extensions)
}

pub fn oracle_check_with(cfg: &FuzzConfig, enumerate: Enumerator) -> rae_core::Result<Outcome> {
    if cfg.max_models == 0 {
        return Err(Error::Config("max_models must be at least 1".into()));
    }
    if 2 * cfg.max_models > ORACLE_MAX_ARGUMENTS {
        return Err(Error::Capacity { arguments: 2 * cfg.max_models, limit: ORACLE_MAX_ARGUMENTS });
    }
    for case in 0..cfg.cases {
        let scenario = fuzz_scenario(cfg, case);
        if let Some(check) = check_scenario(&scenario, enumerate)? {
            return Ok(Outcome::Failed(Mismatch { case, check, scenario }));
        }
    }
    Ok(Outcome::Passed { cases: cfg.cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn drops_last(f: &Baf, sem: Semantics, limits: &Limits) -> rae_core::Result<ExtensionSet> {
        let e = enumerate_extensions(f, sem, limits)?;
        let mut v: Vec<_> = e.iter().copied().collect();
        if v.len() > 1 {
            v.pop();
        }
        Ok(ExtensionSet::new(v))
    }

    #[test]
    fn passes_on_the_real_enumerator() {
        let cfg = FuzzConfig { cases: 50, max_models: 5, seed: 42 };
        assert_eq!(oracle_check(&cfg).unwrap(), Outcome::Passed { cases: 50 });
    }

    #[test]
    fn reports_a_broken_enumerator() {
        let cfg = FuzzConfig { cases: 200, max_models: 5, seed: 1 };
        let Outcome::Failed(m) = oracle_check_with(&cfg, drops_last).unwrap() else {
            panic!("mismatch not detected");
        };
        assert!(m.check.contains("oracle"));
        assert_eq!(m.scenario, fuzz_scenario(&cfg, m.case));
    }

    #[test]
    fn too_many_models_is_a_capacity_error() {
        let cfg = FuzzConfig { cases: 1, max_models: 20, seed: 0 };
        assert!(matches!(oracle_check(&cfg), Err(Error::Capacity { .. })));
    }
}
