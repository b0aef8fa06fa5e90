use std::sync::Arc;

use semiunital::algebra::fixtures::{boolean, power, product, zmod};
use semiunital::algebra::{LinearMap, Semimodule};
use semiunital::semistructures::{
    check_semicoring_morphism, check_semicounital_semicoring, check_semicounitary_comodule,
    check_semiunital_semiring, check_semiunitary_module, convolution_functors, convolution_monoid,
    enumerate_structures, sweedler_semicoring, SemicounitalSemicoring, SemicounitaryComodule,
    SemiunitalSemiring, SemiunitaryModule, StructureKind,
};
use semiunital::variety::Variety;
use semiunital::{Error, DEFAULT_CAP};

fn z2v() -> Arc<Variety> {
    Arc::new(Variety::new(zmod(2).unwrap()))
}

#[test]
fn boolean_semiring_passes_with_a_collapsed_unit_law() {
    let v = Arc::new(Variety::new(boolean()));
    let s = SemiunitalSemiring::trivial(v.clone()).unwrap();
    assert!(check_semiunital_semiring(&s, false).unwrap().passed);
    assert_eq!(v.obj(v.unit(), v.unit()).unwrap().size(), 1);
}

#[test]
fn corrupted_multiplication_fails_associativity_or_unit() {
    let z2 = zmod(2).unwrap();
    let s = SemiunitalSemiring::from_extension(z2v(), &product(&z2, &z2), &[0, 1]).unwrap();
    let mut t = s.mu.table.to_vec();
    let x = t.iter().position(|&y| y != 0).unwrap();
    t[x] = 0;
    let bad = SemiunitalSemiring { mu: LinearMap::new(s.mu.source.clone(), s.mu.target.clone(), t).unwrap(), ..s };
    let r = check_semiunital_semiring(&bad, false).unwrap();
    assert!(!r.passed);
}

#[test]
fn regular_and_zero_modules_are_semiunitary() {
    let z2 = zmod(2).unwrap();
    let s = SemiunitalSemiring::from_extension(z2v(), &product(&z2, &z2), &[0, 1]).unwrap();
    let m = SemiunitaryModule::regular(s.clone()).unwrap();
    assert!(check_semiunitary_module(&m, true).unwrap().passed);
    let zero = Arc::new(Semimodule::zero(s.base()));
    let m = SemiunitaryModule::from_pairs(s, zero, |_, _| 0).unwrap();
    assert!(check_semiunitary_module(&m, true).unwrap().passed);
}

#[test]
fn right_only_module_is_semiunitary() {
    let z2 = zmod(2).unwrap();
    let s = SemiunitalSemiring::from_extension(z2v(), &product(&z2, &z2), &[0, 1]).unwrap();
    let r = Arc::new(s.carrier.as_ref().clone().with_left(None));
    let prod = product(&z2, &z2);
    let m = SemiunitaryModule::from_pairs(s, r, move |x, y| prod.mul(x, y)).unwrap();
    assert!(check_semiunitary_module(&m, false).unwrap().passed);
}

#[test]
fn corrupted_action_fails_with_witness() {
    let z2 = zmod(2).unwrap();
    let s = SemiunitalSemiring::from_extension(z2v(), &product(&z2, &z2), &[0, 1]).unwrap();
    let m = SemiunitaryModule::regular(s).unwrap();
    let mut t = m.action.table.to_vec();
    t[1] = (t[1] + 1) % m.module().size();
    let bad = SemiunitaryModule {
        action: LinearMap::new(m.action.source.clone(), m.action.target.clone(), t).unwrap(),
        ..m
    };
    let r = check_semiunitary_module(&bad, false).unwrap();
    assert!(!r.passed);
    assert!(!r.witness.is_empty());
}

#[test]
fn trivial_semicoring_and_zero_counit() {
    let c = SemicounitalSemicoring::trivial(z2v()).unwrap();
    assert!(check_semicounital_semicoring(&c, true).unwrap().passed);
    let bad = SemicounitalSemicoring {
        epsilon: LinearMap::zero(&c.epsilon.source, &c.epsilon.target),
        ..c
    };
    assert_eq!(check_semicounital_semicoring(&bad, false).unwrap().law_id, "counit-left");
}

#[test]
fn sweedler_identity_on_z2_is_trivial() {
    let z2 = zmod(2).unwrap();
    let v = z2v();
    let c = sweedler_semicoring(v, &z2, &[0, 1]).unwrap();
    assert_eq!(c.carrier.size(), 2);
    assert!(check_semicounital_semicoring(&c, true).unwrap().passed);
}

#[test]
fn sweedler_of_the_diagonal_has_sixteen_elements() {
    let z2 = zmod(2).unwrap();
    let v = Arc::new(Variety::new(product(&z2, &z2)));
    let c = sweedler_semicoring(v, &z2, &[0, 1]).unwrap();
    assert_eq!(c.carrier.size(), 16);
    assert!(check_semicounital_semicoring(&c, true).unwrap().passed);
    let m = SemicounitaryComodule::regular(c.clone()).unwrap();
    assert!(check_semicounitary_comodule(&m, true).unwrap().passed);
}

#[test]
fn sweedler_over_boolean_collapses() {
    let b = boolean();
    let v = Arc::new(Variety::new(b.clone()));
    let c = sweedler_semicoring(v, &b, &[0, 1]).unwrap();
    assert_eq!(c.carrier.size(), 1);
    assert!(check_semicounital_semicoring(&c, false).unwrap().passed);
}

#[test]
fn comodules_zero_and_corrupted() {
    let c = SemicounitalSemicoring::trivial(z2v()).unwrap();
    let zero = Arc::new(Semimodule::zero(c.base()));
    let m = SemicounitaryComodule::new(c.clone(), zero, vec![0]).unwrap();
    assert!(check_semicounitary_comodule(&m, true).unwrap().passed);
    let m = SemicounitaryComodule::regular(c).unwrap();
    let bad = SemicounitaryComodule {
        coaction: LinearMap::zero(&m.coaction.source, &m.coaction.target),
        ..m
    };
    assert!(!check_semicounitary_comodule(&bad, false).unwrap().passed);
}

#[test]
fn convolution_over_z2_is_multiplicative_monoid() {
    let v = z2v();
    let a = SemiunitalSemiring::trivial(v.clone()).unwrap();
    let c = SemicounitalSemicoring::trivial(v).unwrap();
    let m = convolution_monoid(&c, &a, DEFAULT_CAP).unwrap();
    assert!(m.check().passed);
    assert_eq!(m.maps, vec![vec![0, 0], vec![0, 1]]);
    assert_eq!(m.unit, 1);
    assert_eq!(m.mul, vec![0, 0, 0, 1]);
}

#[test]
fn convolution_needs_a_firm_semiring() {
    let v = Arc::new(Variety::new(boolean()));
    let a = SemiunitalSemiring::trivial(v.clone()).unwrap();
    let c = SemicounitalSemicoring::trivial(v).unwrap();
    assert!(matches!(convolution_monoid(&c, &a, DEFAULT_CAP), Err(Error::NotUnital(_))));
}

#[test]
fn convolution_of_sweedler_with_the_product() {
    let z2 = zmod(2).unwrap();
    let zz = product(&z2, &z2);
    let v = Arc::new(Variety::new(zz.clone()));
    let c = sweedler_semicoring(v.clone(), &z2, &[0, 1]).unwrap();
    let a = SemiunitalSemiring::trivial(v).unwrap();
    let m = convolution_monoid(&c, &a, DEFAULT_CAP).unwrap();
    assert!(m.check().passed);
    let e = a.eta.compose(&c.epsilon).unwrap();
    assert_eq!(m.maps[m.unit], e.table.to_vec());
}

#[test]
fn convolution_functors_identity_and_diagonal() {
    let z2 = zmod(2).unwrap();
    let v = z2v();
    let a = SemiunitalSemiring::trivial(v.clone()).unwrap();
    let c = SemicounitalSemicoring::trivial(v.clone()).unwrap();
    let id_c = LinearMap::identity(&c.carrier);
    let id_a = LinearMap::identity(&a.carrier);
    let f = convolution_functors(&c, &c, &id_c, &a, &a, &id_a, DEFAULT_CAP).unwrap();
    assert!(f.report.passed);
    assert_eq!(f.pre, vec![0, 1]);
    assert_eq!(f.post, vec![0, 1]);

    let b = SemiunitalSemiring::from_extension(v, &product(&z2, &z2), &[0, 1]).unwrap();
    let diag = LinearMap::new(a.carrier.clone(), b.carrier.clone(), vec![0, 1]).unwrap();
    let f = convolution_functors(&c, &c, &id_c, &a, &b, &diag, DEFAULT_CAP).unwrap();
    assert!(f.report.passed);
}

#[test]
fn counit_is_a_semicoring_morphism_to_the_trivial_semicoring() {
    let z2 = zmod(2).unwrap();
    let v = Arc::new(Variety::new(product(&z2, &z2)));
    let d = sweedler_semicoring(v.clone(), &z2, &[0, 1]).unwrap();
    let i = SemicounitalSemicoring::trivial(v.clone()).unwrap();
    let eps = d.epsilon.clone();
    assert!(check_semicoring_morphism(&d, &i, &eps).unwrap().passed);
    let a = SemiunitalSemiring::trivial(v).unwrap();
    let id_a = LinearMap::identity(&a.carrier);
    let f = convolution_functors(&d, &i, &eps, &a, &a, &id_a, DEFAULT_CAP).unwrap();
    assert!(f.report.passed);
}

#[test]
fn enumeration_over_z2() {
    let v = z2v();
    let i = v.unit().clone();
    let s = enumerate_structures(&v, &i, StructureKind::Semiring, DEFAULT_CAP).unwrap();
    let c = enumerate_structures(&v, &i, StructureKind::Semicoring, DEFAULT_CAP).unwrap();
    assert_eq!(s.len(), 1);
    assert_eq!(c.len(), 1);
    let zero = v.zero_object();
    assert_eq!(enumerate_structures(&v, &zero, StructureKind::Semiring, DEFAULT_CAP).unwrap().len(), 1);
}

#[test]
fn twelve_algebras_and_twelve_coalgebras_on_the_plane() {
    let z2 = zmod(2).unwrap();
    let v = z2v();
    let p = Arc::new(power(&z2, 2).unwrap());
    let s = enumerate_structures(&v, &p, StructureKind::Semiring, DEFAULT_CAP).unwrap();
    let c = enumerate_structures(&v, &p, StructureKind::Semicoring, DEFAULT_CAP).unwrap();
    assert_eq!(s.len(), 12);
    assert_eq!(c.len(), 12);
}

#[test]
fn enumeration_refuses_non_cancellative() {
    let v = Arc::new(Variety::new(boolean()));
    let i = v.unit().clone();
    let r = enumerate_structures(&v, &i, StructureKind::Semiring, DEFAULT_CAP);
    assert!(matches!(r, Err(Error::NotCancellative(_))));
}
