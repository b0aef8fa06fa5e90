use std::sync::Arc;

use proptest::prelude::*;
use semiunital::algebra::fixtures::{boolean, power, restrict, chain_lattice, zmod};
use semiunital::algebra::{hom_set, isomorphic, LinearMap, Semimodule, Sides};
use semiunital::congruence::is_cancellative;
use semiunital::tensor::{
    factor_balanced_map, free_semimodule, induced_map, oracle_tensor, takahashi_tensor, tensor, theta_iso,
    BalancedMap, Side, TakahashiOptions,
};
use semiunital::Error;

fn reg(s: &Arc<semiunital::Semiring>) -> Arc<Semimodule> {
    Arc::new(Semimodule::regular(s))
}

fn plane() -> Arc<Semimodule> {
    Arc::new(power(&zmod(2).unwrap(), 2).unwrap())
}

#[test]
fn free_semimodule_sizes() {
    assert_eq!(free_semimodule(&zmod(2).unwrap(), 2, 4096).unwrap().size(), 4);
    assert_eq!(free_semimodule(&boolean(), 3, 4096).unwrap().size(), 8);
    assert!(matches!(
        free_semimodule(&zmod(2).unwrap(), 12, 2048),
        Err(Error::SizeCapExceeded { .. })
    ));
}

#[test]
fn small_products() {
    let z2 = reg(&zmod(2).unwrap());
    let b = reg(&boolean());
    let opts = TakahashiOptions::default();
    assert!(isomorphic(&takahashi_tensor(&z2, &z2, opts).unwrap().carrier, &z2));
    assert_eq!(takahashi_tensor(&b, &b, opts).unwrap().size(), 1);
    assert_eq!(oracle_tensor(&b, &b, opts).unwrap().size(), 1);
    let p = plane();
    assert!(isomorphic(&takahashi_tensor(&p, &z2, opts).unwrap().carrier, &p));
    assert!(isomorphic(&tensor(&p, &z2).unwrap().carrier, &p));
}

#[test]
fn chain_over_boolean_collapses() {
    let b = boolean();
    let c5 = chain_lattice(5).unwrap();
    let chain = Semimodule::regular(&c5);
    let chain = restrict(&chain, true, Some((&b, &[0, 1]))).unwrap();
    let chain = Arc::new(restrict(&chain, false, Some((&b, &[0, 1]))).unwrap());
    assert_eq!(tensor(&chain, &reg(&b)).unwrap().size(), 1);
}

#[test]
fn factoring_tau_zero_and_multiplication() {
    let z2 = reg(&zmod(2).unwrap());
    let t = tensor(&z2, &z2).unwrap();
    let tau = BalancedMap::from_fn(&z2, &z2, &t.carrier, |m, n| t.tau(m, n));
    let id: Vec<usize> = (0..t.size()).collect();
    assert_eq!(factor_balanced_map(&t, &tau).unwrap().gamma, id);
    let zero = BalancedMap::from_fn(&z2, &z2, &z2, |_, _| 0);
    assert!(factor_balanced_map(&t, &zero).unwrap().gamma.iter().all(|&x| x == 0));
    let mul = BalancedMap::from_fn(&z2, &z2, &z2, |m, n| m * n);
    let theta = theta_iso(&z2, Side::Right).unwrap();
    assert_eq!(factor_balanced_map(&t, &mul).unwrap().gamma, theta.iso.forward.table.to_vec());
}

#[test]
fn theta_examples() {
    let b = reg(&boolean());
    let th = theta_iso(&b, Side::Left).unwrap();
    assert!(th.iso.check().passed);
    assert_eq!(th.reflection.reflected.size(), 1);
    let th = theta_iso(&plane(), Side::Right).unwrap();
    assert!(th.iso.check().passed);
    assert_eq!(th.reflection.reflected.size(), 4);
}

#[test]
fn identity_and_zero_induced_maps() {
    let p = plane();
    let t = tensor(&p, &p).unwrap();
    let id = LinearMap::identity(&p);
    assert!(induced_map(&id, &id, &t, &t).unwrap().is_identity());
    let zero = LinearMap::zero(&p, &p);
    assert!(induced_map(&zero, &id, &t, &t).unwrap().table.iter().all(|&x| x == 0));
}

fn endos() -> Vec<LinearMap> {
    let p = plane();
    hom_set(&p, &p, Sides::BOTH, 1 << 12)
        .unwrap()
        .into_iter()
        .map(|h| LinearMap::new(p.clone(), p.clone(), h).unwrap())
        .collect()
}

#[test]
fn swap_tensor_identity_is_a_permutation() {
    let p = plane();
    let t = tensor(&p, &p).unwrap();
    // (0,1) ↔ (1,0) are indices 2 and 3 of the plane
    let swap = LinearMap::new(p.clone(), p.clone(), vec![0, 1, 3, 2]).unwrap();
    let s = induced_map(&swap, &LinearMap::identity(&p), &t, &t).unwrap();
    assert!(s.is_bijective());
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(s.apply(t.tau(a, b)), t.tau(swap.apply(a), b));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tensor_is_functorial(i in 0usize..16, j in 0usize..16, k in 0usize..16, l in 0usize..16) {
        let e = endos();
        let p = plane();
        let t = tensor(&p, &p).unwrap();
        let (f, g, f2, g2) = (&e[i % e.len()], &e[j % e.len()], &e[k % e.len()], &e[l % e.len()]);
        let lhs = induced_map(f2, g2, &t, &t).unwrap().compose(&induced_map(f, g, &t, &t).unwrap()).unwrap();
        let rhs = induced_map(&f2.compose(f).unwrap(), &g2.compose(g).unwrap(), &t, &t).unwrap();
        prop_assert_eq!(lhs.table, rhs.table);
    }

    #[test]
    fn tensor_carriers_are_cancellative(a in 0usize..4, b in 0usize..4) {
        let z2 = zmod(2).unwrap();
        let mods = [reg(&z2), plane(), Arc::new(Semimodule::zero(&z2)), Arc::new(power(&z2, 3).unwrap())];
        let t = tensor(&mods[a], &mods[b]).unwrap();
        prop_assert!(is_cancellative(&t.carrier));
        let dims = [1u32, 2, 0, 3];
        prop_assert_eq!(t.size(), 1 << (dims[a] * dims[b]));
    }
}
