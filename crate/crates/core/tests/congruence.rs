use std::sync::Arc;

use proptest::prelude::*;
use semiunital::algebra::fixtures::{boolean, chain_lattice, truncated_nat, zmod};
use semiunital::algebra::{find_monoid_isomorphism, isomorphic, Semimodule};
use semiunital::congruence::{
    cancellation_witness, cancellative_reflection, check_congruence, congruence_closure, is_cancellative, quotient,
    zero_congruence, Congruence,
};

fn reg(s: &Arc<semiunital::Semiring>) -> Arc<Semimodule> {
    Arc::new(Semimodule::regular(s))
}

/// All set partitions of `0..n` as restricted growth strings.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn go(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            cur[i] = c;
            go(i + 1, max.max(c), cur, out);
        }
    }
    if n > 0 {
        go(1, 0, &mut cur, &mut out);
    }
    out
}

/// The intersection of every congruence containing `pairs`.
fn closure_oracle(m: &Semimodule, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let n = m.size();
    let mut rel = vec![vec![true; n]; n];
    for labels in partitions(n) {
        let c = Congruence::from_labels(&labels);
        if pairs.iter().all(|&(a, b)| c.related(a, b)) && check_congruence(m, &c).passed {
            for (a, row) in rel.iter_mut().enumerate() {
                for (b, cell) in row.iter_mut().enumerate() {
                    *cell &= c.related(a, b);
                }
            }
        }
    }
    rel
}

fn relation(c: &Congruence) -> Vec<Vec<bool>> {
    let n = c.class_of.len();
    (0..n).map(|a| (0..n).map(|b| c.related(a, b)).collect()).collect()
}

#[test]
fn closure_examples() {
    let z4 = reg(&zmod(4).unwrap());
    let c = congruence_closure(&z4, &[(0, 2)]).unwrap();
    assert_eq!(c.class_count, 2);
    assert!(c.related(0, 2) && c.related(1, 3) && !c.related(0, 1));
    assert!(congruence_closure(&z4, &[]).unwrap().is_discrete());
    let b = reg(&boolean());
    assert_eq!(congruence_closure(&b, &[(0, 1)]).unwrap().class_count, 1);
}

#[test]
fn quotient_of_zmod_four_is_zmod_two() {
    let z4 = reg(&zmod(4).unwrap());
    let c = congruence_closure(&z4, &[(0, 2)]).unwrap();
    let (q, p) = quotient(&z4, &c).unwrap();
    assert!(p.check().passed);
    let z2 = Semimodule::regular(&zmod(2).unwrap());
    assert!(find_monoid_isomorphism(q.carrier(), z2.carrier()).is_some());
    let (same, _) = quotient(&z4, &Congruence::discrete(4)).unwrap();
    assert!(isomorphic(&same, &z4));
}

#[test]
fn zero_congruence_examples() {
    assert!(zero_congruence(&reg(&zmod(2).unwrap())).is_discrete());
    assert_eq!(zero_congruence(&reg(&boolean())).class_count, 1);
    assert_eq!(zero_congruence(&reg(&truncated_nat(2).unwrap())).class_count, 1);
}

#[test]
fn reflection_examples() {
    let r = cancellative_reflection(&reg(&zmod(4).unwrap()));
    assert_eq!((r.reflected.size(), r.kernel.clone()), (4, vec![0]));
    let r = cancellative_reflection(&reg(&boolean()));
    assert_eq!((r.reflected.size(), r.kernel.clone()), (1, vec![0, 1]));
    assert_eq!(cancellative_reflection(&reg(&chain_lattice(3).unwrap())).reflected.size(), 1);
}

#[test]
fn cancellation_witnesses() {
    let b = reg(&boolean());
    assert!(!is_cancellative(&b));
    let [m, x, y] = cancellation_witness(b.carrier()).unwrap();
    assert!(b.add(m, x) == b.add(m, y) && x != y);
    assert!(is_cancellative(&reg(&zmod(3).unwrap())));
    assert!(!is_cancellative(&reg(&truncated_nat(2).unwrap())));
}

#[test]
fn partitions_are_counted_by_bell_numbers() {
    let bell: Vec<usize> = (1..=6).map(|n| partitions(n).len()).collect();
    assert_eq!(bell, [1, 2, 5, 15, 52, 203]);
}

proptest! {
    #[test]
    fn closure_is_the_least_congruence(k in 0usize..4, raw in prop::collection::vec((0usize..6, 0usize..6), 0..3)) {
        let s = [zmod(6).unwrap(), truncated_nat(4).unwrap(), chain_lattice(4).unwrap(), zmod(5).unwrap()][k].clone();
        let m = reg(&s);
        let n = m.size();
        let pairs: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
        let c = congruence_closure(&m, &pairs).unwrap();
        prop_assert!(check_congruence(&m, &c).passed);
        prop_assert_eq!(relation(&c), closure_oracle(&m, &pairs));
    }

    #[test]
    fn reflection_is_idempotent_and_cancellative(k in 0usize..5) {
        let s = [zmod(6).unwrap(), truncated_nat(4).unwrap(), chain_lattice(4).unwrap(), boolean(), zmod(3).unwrap()][k].clone();
        let m = reg(&s);
        let r = cancellative_reflection(&m);
        prop_assert!(is_cancellative(&r.reflected));
        prop_assert!(cancellative_reflection(&r.reflected).projection.is_bijective());
        prop_assert_eq!(is_cancellative(&m), r.kernel == vec![0]);
    }
}
