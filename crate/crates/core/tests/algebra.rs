use std::sync::Arc;

use proptest::prelude::*;
use semiunital::algebra::fixtures::{boolean, builtin_semiring, builtin_structure, chain_lattice, semiring_fixtures, zmod, Fixture};
use semiunital::algebra::{find_isomorphism, isomorphic, relabel_module, validate_semiring, Semimodule, Semiring};
use semiunital::{Error, LawReport};

fn violates(s: &Semiring, r: &LawReport) -> bool {
    let (add, mul) = (|a, b| s.add(a, b), |a, b| s.mul(a, b));
    match (r.law_id.as_str(), r.witness.as_slice()) {
        ("add-identity", &[a]) => add(a, 0) != a || add(0, a) != a,
        ("add-commutative", &[a, b]) => add(a, b) != add(b, a),
        ("add-associative", &[a, b, c]) => add(add(a, b), c) != add(a, add(b, c)),
        ("zero-absorbing", &[a, b]) => mul(a, b) != 0,
        ("mul-identity", &[a]) => mul(1, a) != a || mul(a, 1) != a,
        ("mul-associative", &[a, b, c]) => mul(mul(a, b), c) != mul(a, mul(b, c)),
        ("left-distributive", &[a, b, c]) => mul(a, add(b, c)) != add(mul(a, b), mul(a, c)),
        ("right-distributive", &[a, b, c]) => mul(add(a, b), c) != add(mul(a, c), mul(b, c)),
        _ => false,
    }
}

#[test]
fn every_fixture_validates() {
    for (name, s) in semiring_fixtures() {
        assert!(validate_semiring(&s).passed, "{name}");
    }
}

#[test]
fn chain_lattice_is_join_and_meet() {
    let c = chain_lattice(3).unwrap();
    // 0 < 2 < 1
    assert_eq!(c.add(2, 1), 1);
    assert_eq!(c.mul(2, 1), 2);
    assert_eq!(c.add(2, 2), 2);
}

#[test]
fn builtin_names() {
    assert_eq!(builtin_semiring("zmod(2)").unwrap().size(), 2);
    assert_eq!(builtin_semiring("product(zmod(2),boolean)").unwrap().size(), 4);
    assert!(matches!(builtin_structure("power(zmod(2),3)").unwrap(), Fixture::Module(m) if m.size() == 8));
    assert!(matches!(builtin_semiring("zmod(x)"), Err(Error::UnknownFixture(_))));
    assert!(matches!(builtin_semiring("regular(boolean)"), Err(Error::KindMismatch(_))));
}

#[test]
fn one_element_tables_are_malformed() {
    assert!(matches!(Semiring::new(1, vec![0], vec![0]), Err(Error::MalformedTable(_))));
}

#[test]
fn zmod_four_and_its_doubling() {
    let z4 = Arc::new(Semimodule::regular(&zmod(4).unwrap()));
    let z2 = Semimodule::regular(&zmod(2).unwrap());
    assert!(isomorphic(&z4, &relabel_module(&z4, &[0, 3, 2, 1])));
    assert!(find_isomorphism(&z4, &z2).is_none());
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|rest| {
        let mut p = vec![0];
        p.extend(rest);
        p
    })
}

proptest! {
    #[test]
    fn relabelling_preserves_isomorphism_class(k in 0usize..4, perm in permutation(4)) {
        let s = [zmod(4).unwrap(), boolean(), chain_lattice(4).unwrap(), zmod(2).unwrap()][k].clone();
        let m = Semimodule::regular(&s);
        let perm = if m.size() == 4 { perm } else { (0..m.size()).collect() };
        prop_assert!(isomorphic(&m, &relabel_module(&m, &perm)));
    }

    #[test]
    fn single_entry_faults_report_a_true_witness(k in 0usize..6, mul in any::<bool>(), cell in 0usize..64, v in 0usize..8) {
        let s = semiring_fixtures()[k].1.clone();
        let n = s.size();
        let (mut add, mut mt) = (s.add_table().to_vec(), s.mul_table().to_vec());
        let t = if mul { &mut mt } else { &mut add };
        t[cell % (n * n)] = v % n;
        let bad = Semiring::new(n, add, mt).unwrap();
        let r = validate_semiring(&bad);
        if !r.passed {
            prop_assert!(violates(&bad, &r), "{}", r);
        }
    }
}
