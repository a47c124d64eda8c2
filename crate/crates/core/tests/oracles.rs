mod common;

use std::collections::BTreeSet;

use aqh_core::catalog::{build_type, weyl_group};
use aqh_core::splitting::{dedup_by_weyl, find_splittings, wolf_certificate};
use aqh_core::subalgebra::{enumerate_closed_subsystems, isotropy_weights, wolf_subsystem, ClosedSubsystem};
use common::{brute_force_closed, catalog_types, oracle_splittings, sys};

#[test]
fn closed_subsystems_match_brute_force() {
    let mut names: Vec<String> = catalog_types(3, true).iter().map(|t| t.to_string()).collect();
    names.extend(["B4", "C4", "D4", "A4"].map(String::from));
    for name in names {
        let p = sys(&name);
        let brute = brute_force_closed(&p);
        let fast: BTreeSet<Vec<_>> =
            enumerate_closed_subsystems(&p, false).unwrap().iter().map(|h| h.roots().to_vec()).collect();
        assert_eq!(fast, brute, "{name}");
    }
}

#[test]
fn weyl_classes_match_brute_force() {
    for t in catalog_types(3, true).iter().chain(&["B4".parse().unwrap(), "D4".parse().unwrap()]) {
        let p = build_type(t).unwrap();
        let w = weyl_group(&p).unwrap();
        let classes: BTreeSet<Vec<u16>> = brute_force_closed(&p)
            .into_iter()
            .map(|roots| w.canonical_indices(&ClosedSubsystem::new(&p, roots).unwrap().indices(&p)))
            .collect();
        let fast = enumerate_closed_subsystems(&p, true).unwrap();
        assert_eq!(fast.len(), classes.len(), "{t}");
        for h in fast {
            assert!(classes.contains(&h.indices(&p)), "{t}");
        }
    }
}

#[test]
fn g2_has_six_classes() {
    // the parent, A2 (long), A1+A1, A1 long, A1 short, torus
    assert_eq!(enumerate_closed_subsystems(&sys("G2"), true).unwrap().len(), 6);
}

#[test]
fn splittings_match_oracle_up_to_rank_4() {
    for t in catalog_types(4, true) {
        let p = build_type(&t).unwrap();
        for h in enumerate_closed_subsystems(&p, true).unwrap() {
            let w = isotropy_weights(&p, &h);
            if w.is_empty() || !w.is_eligible() || w.dim_m() > 32 {
                continue;
            }
            let fast: BTreeSet<_> = find_splittings(&w).unwrap().into_iter().collect();
            assert_eq!(fast, oracle_splittings(&w), "{t} / {:?}", h.roots());
        }
    }
}

#[test]
fn wolf_certificate_is_rediscovered() {
    for t in catalog_types(4, false) {
        let p = build_type(&t).unwrap();
        let Ok(c) = wolf_certificate(&p) else {
            assert_eq!(t.to_string(), "A1");
            continue;
        };
        let found = find_splittings(&isotropy_weights(&p, &wolf_subsystem(&p).unwrap())).unwrap();
        assert!(found.contains(&c), "{t}");
        let reps = dedup_by_weyl(&p, &found).unwrap();
        assert!(!reps.is_empty() && reps.len() <= found.len());
    }
}
