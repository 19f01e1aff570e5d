use proptest::prelude::*;
use rae_core::oracle::{brute_force_extensions, brute_force_preferred_aaf};
use rae_core::*;

fn scenario() -> impl Strategy<Value = Scenario> {
    (1usize..=6, 2usize..=3, 0.0..=1.0f64, prop::sample::select(vec![0.0, 0.5, 1.0]), any::<u64>()).prop_map(
        |(n, k, inv, tie, seed)| {
            let cfg = GeneratorConfig { n_models: n, label_count: k, invalidity_rate: inv, tie_rate: tie, with_truth: false };
            generate_random_scenario(&cfg, seed).unwrap()
        },
    )
}

fn frameworks(s: &Scenario) -> (Baf, Aaf) {
    let inst = s.instance().unwrap();
    let pref = s.preference_ranking().unwrap();
    (build_baf(&inst, &pref).unwrap(), build_aaf(&inst, &pref).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn enumerator_matches_oracle(s in scenario()) {
        let (baf, aaf) = frameworks(&s);
        for sem in Semantics::ALL {
            prop_assert_eq!(
                enumerate_extensions(&baf, sem, &Limits::default()).unwrap(),
                brute_force_extensions(&baf, sem).unwrap(),
                "{}", sem
            );
        }
        prop_assert_eq!(
            enumerate_preferred_aaf(&aaf, &Limits::default()).unwrap(),
            brute_force_preferred_aaf(&aaf).unwrap()
        );
    }

    #[test]
    fn pair_framework_matches_s_preferred_by_brute_force(s in scenario()) {
        let (baf, aaf) = frameworks(&s);
        let m = baf.pairs();
        let mapped = brute_force_preferred_aaf(&aaf).unwrap().map(|e| map_aaf_extension_to_baf(e, m));
        prop_assert_eq!(mapped, brute_force_extensions(&baf, Semantics::SPreferred).unwrap());
    }

    /// Arbitrary attack and support graphs, not only those built from scenarios.
    #[test]
    fn enumerator_matches_oracle_on_arbitrary_graphs(
        pairs in 1usize..=4,
        attack_bits in any::<u64>(),
        support_bits in any::<u64>(),
        support_density in 0u32..4,
    ) {
        let n = 2 * pairs;
        let mut attacks = Vec::new();
        let mut supports = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let k = (a * n + b) as u32;
                if attack_bits.rotate_left(k) & 7 == 0 {
                    attacks.push((a, b));
                }
                if support_bits.rotate_left(k * 3) & 7 < support_density as u64 {
                    supports.push((a, b));
                }
            }
        }
        let baf = Baf::from_relations(pairs, &attacks, &supports).unwrap();
        for sem in Semantics::ALL {
            prop_assert_eq!(
                enumerate_extensions(&baf, sem, &Limits::default()).unwrap(),
                brute_force_extensions(&baf, sem).unwrap(),
                "{}", sem
            );
        }
        let aaf = Aaf::from_relations(n, &attacks).unwrap();
        prop_assert_eq!(
            enumerate_preferred_aaf(&aaf, &Limits::default()).unwrap(),
            brute_force_preferred_aaf(&aaf).unwrap()
        );
    }
}
