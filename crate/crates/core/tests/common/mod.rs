//! Brute-force references shared by the integration targets. Nothing here
//! calls the production enumerator or splitting search.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use aqh_core::catalog::{build_type, CartanLabel, TypeSpec};
use aqh_core::roots::{Rational, RationalVector, RootSystem};
use aqh_core::splitting::SplittingCertificate;
use aqh_core::subalgebra::IsotropyWeights;

pub fn sys(s: &str) -> RootSystem {
    build_type(&s.parse().unwrap()).unwrap()
}

/// Simple catalog types of rank `<= max_rank`, plus direct sums of them
/// when `products` is set.
pub fn catalog_types(max_rank: usize, products: bool) -> Vec<TypeSpec> {
    let simple = CartanLabel::all_up_to(max_rank);
    let mut out: Vec<TypeSpec> = simple.iter().map(|&l| TypeSpec(vec![l])).collect();
    if products {
        for (i, a) in simple.iter().enumerate() {
            for b in &simple[i..] {
                if a.rank() + b.rank() <= max_rank {
                    out.push(TypeSpec(vec![*a, *b]));
                }
                for c in simple.iter().filter(|c| *c >= b) {
                    if a.rank() + b.rank() + c.rank() <= max_rank {
                        out.push(TypeSpec(vec![*a, *b, *c]));
                    }
                }
            }
        }
    }
    out
}

/// Positive roots as "first nonzero coordinate is positive".
pub fn lex_positive(parent: &RootSystem) -> Vec<RationalVector> {
    parent.roots().iter().filter(|r| r.is_lex_positive()).cloned().collect()
}

fn closed(set: &HashSet<RationalVector>, parent: &RootSystem) -> bool {
    set.iter().all(|a| set.iter().all(|b| {
        let s = a + b;
        !parent.contains(&s) || set.contains(&s)
    }))
}

/// Every closed subsystem, found by testing each negation-closed subset.
pub fn brute_force_closed(parent: &RootSystem) -> BTreeSet<Vec<RationalVector>> {
    let pos = lex_positive(parent);
    assert!(pos.len() <= 20, "brute force over 2^{} subsets", pos.len());
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << pos.len()) {
        let mut set = HashSet::new();
        for (i, r) in pos.iter().enumerate() {
            if mask >> i & 1 == 1 {
                set.insert(r.clone());
                set.insert(-r);
            }
        }
        if closed(&set, parent) {
            let mut v: Vec<RationalVector> = set.into_iter().collect();
            v.sort();
            out.insert(v);
        }
    }
    out
}

/// Every splitting of `w`: pick one weight of each `±w` pair to form a half
/// `H`, take its centroid as `beta`, and keep `H` when `H - beta` is
/// symmetric and avoids zero.
pub fn oracle_splittings(w: &IsotropyWeights) -> BTreeSet<SplittingCertificate> {
    let reps: Vec<&RationalVector> = w.weights().iter().filter(|x| x.is_lex_positive()).collect();
    assert!(reps.len() <= 20);
    let mut out = BTreeSet::new();
    let k = Rational::new(1, reps.len() as i64);
    for mask in 0u32..(1 << reps.len()) {
        let half: Vec<RationalVector> = reps
            .iter()
            .enumerate()
            .map(|(i, x)| if mask >> i & 1 == 1 { (*x).clone() } else { -*x })
            .collect();
        let sum = half.iter().skip(1).fold(half[0].clone(), |acc, x| &acc + x);
        let beta = sum.scale(k);
        if beta.is_zero() {
            continue;
        }
        let a: HashSet<RationalVector> = half.iter().map(|h| h - &beta).collect();
        if a.iter().any(|x| x.is_zero() || !a.contains(&-x)) {
            continue;
        }
        let alphas: Vec<RationalVector> = a.into_iter().filter(|x| x.is_lex_positive()).collect();
        let cert = SplittingCertificate::new(beta, alphas).expect("oracle half yields a valid certificate");
        assert_eq!(cert.generated(), w.weights());
        out.insert(cert);
    }
    out
}
