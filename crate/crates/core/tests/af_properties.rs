mod common;

use std::collections::BTreeSet;

use argstable::oracle::{
    defeated_arguments, enumerate_admissible, preferred_oracle, stable_oracle,
};
use argstable::{parse_apx, parse_tgf, Argument};
use common::{all_subsets, arb_af, brute_preferred};
use proptest::prelude::*;

proptest! {
    #[test]
    fn apx_round_trip(af in arb_af(7)) {
        prop_assert_eq!(parse_apx(&af.to_apx()).unwrap(), af);
    }

    #[test]
    fn tgf_round_trip(af in arb_af(7)) {
        prop_assert_eq!(parse_tgf(&af.to_tgf()).unwrap(), af);
    }

    #[test]
    fn repeated_facts_are_idempotent(af in arb_af(5)) {
        let text = af.to_apx();
        prop_assert_eq!(parse_apx(&format!("{text}\n{text}")).unwrap(), af);
    }

    #[test]
    fn attacks_stay_within_arguments(af in arb_af(7)) {
        for (from, to) in af.attacks() {
            prop_assert!(af.contains(from) && af.contains(to));
        }
    }

    #[test]
    fn admissible_sets_match_the_predicates(af in arb_af(6)) {
        let by_predicate: Vec<_> = all_subsets(&af)
            .into_iter()
            .filter(|s| af.is_admissible(s.members()).unwrap())
            .collect();
        let mut expected = by_predicate.clone();
        expected.sort();
        prop_assert_eq!(enumerate_admissible(&af).unwrap(), expected);
        for s in &by_predicate {
            prop_assert!(af.is_conflict_free(s.members()).unwrap());
        }
    }

    #[test]
    fn acceptability_definition(af in arb_af(5)) {
        for s in all_subsets(&af) {
            for a in af.arguments() {
                let defended = af.attackers(a).unwrap().iter().all(|b| {
                    s.members().iter().any(|c| af.attacks_pair(c, b))
                });
                prop_assert_eq!(af.is_acceptable(a, s.members()).unwrap(), defended);
            }
        }
    }

    #[test]
    fn preferred_extensions_are_maximal_admissible(af in arb_af(6)) {
        let preferred = preferred_oracle(&af).unwrap();
        prop_assert!(!preferred.is_empty());
        prop_assert_eq!(&preferred, &brute_preferred(&af));
        for e in &preferred {
            prop_assert!(af.is_admissible(e.members()).unwrap());
            for a in af.arguments().iter().filter(|a| !e.contains(a)) {
                let mut bigger = e.members().clone();
                bigger.insert(a.clone());
                prop_assert!(!af.is_admissible(&bigger).unwrap());
            }
        }
    }

    #[test]
    fn stable_extensions_are_preferred(af in arb_af(6)) {
        let preferred = preferred_oracle(&af).unwrap();
        for s in stable_oracle(&af).unwrap() {
            prop_assert!(preferred.contains(&s));
            for a in af.arguments().iter().filter(|a| !s.contains(a)) {
                prop_assert!(s.members().iter().any(|b| af.attacks_pair(b, a)));
            }
        }
    }

    #[test]
    fn defeated_means_in_no_preferred_extension(af in arb_af(6)) {
        let preferred = preferred_oracle(&af).unwrap();
        let expected: BTreeSet<Argument> = af
            .arguments()
            .iter()
            .filter(|a| preferred.iter().all(|e| !e.contains(a)))
            .cloned()
            .collect();
        prop_assert_eq!(defeated_arguments(&af).unwrap(), expected);
    }

    #[test]
    fn parsers_never_panic(text in "\\PC{0,80}") {
        let _ = parse_apx(&text);
        let _ = parse_tgf(&text);
    }

    #[test]
    fn parsers_never_panic_on_near_misses(
        text in "(arg\\([a-c]\\)\\.|att\\([a-c],[a-c]\\)\\.|%[a-z ]*\n|[ (),.\n])*"
    ) {
        if let Ok(af) = parse_apx(&text) {
            prop_assert_eq!(parse_apx(&af.to_apx()).unwrap(), af);
        }
    }
}
