use std::sync::Arc;

use semiunital::algebra::fixtures::{boolean, power, product, zmod};
use semiunital::algebra::{LinearMap, Semimodule};
use semiunital::jstructures::{
    check_jact, check_jcomonad, check_jmonad, cofree_jcomodule, free_jmodule, godement,
    induced_monad_from_adjunction, interchange_check, jcomonad_to_semicomonoid, jmonad_to_semimonoid,
    jstructure_universe, roundtrip_jcomonad, roundtrip_jmonad, roundtrip_semicomonoid,
    roundtrip_semimonoid, semicomonoid_to_jcomonad, semimonoid_to_jmonad, ActKind, Functor, JAct,
    JComonad, JMonad, JParent, NatTrans,
};
use semiunital::semistructures::{
    enumerate_structures, sweedler_semicoring, SemicounitalSemicoring, SemiunitalSemiring,
    SemiunitaryModule, StructureKind, Structures,
};
use semiunital::tensor::Side;
use semiunital::variety::{Universe, Variety};
use semiunital::{Error, DEFAULT_CAP};

fn z2v() -> Arc<Variety> {
    Arc::new(Variety::new(zmod(2).unwrap()))
}

fn plane_semiring() -> SemiunitalSemiring {
    let z2 = zmod(2).unwrap();
    SemiunitalSemiring::from_extension(z2v(), &product(&z2, &z2), &[0, 1]).unwrap()
}

fn trivial_monad() -> JMonad {
    let id = Functor::identity();
    JMonad {
        m: id.clone(),
        j: id.clone(),
        mu: NatTrans::identity(&id),
        omega: NatTrans::identity(&id),
        nu: NatTrans::identity(&id),
    }
}

#[test]
fn identity_monad_and_comonad_pass() {
    let v = z2v();
    let mut u = v.default_universe(2).unwrap();
    u.add_homs(2).unwrap();
    assert!(check_jmonad(&trivial_monad(), &u).unwrap().passed);
    let id = Functor::identity();
    let c = JComonad {
        c: id.clone(),
        j: id.clone(),
        delta: NatTrans::identity(&id),
        omega: NatTrans::identity(&id),
        theta: NatTrans::identity(&id),
    };
    assert!(check_jcomonad(&c, &u).unwrap().passed);
}

#[test]
fn godement_of_identities_is_identity() {
    let v = z2v();
    let u = v.default_universe(1).unwrap();
    let id = NatTrans::identity(&Functor::identity());
    let g = godement(&id, &id, &u).unwrap();
    for x in &u.objects {
        assert!(g.at(x).unwrap().is_identity());
    }
}

#[test]
fn godement_of_omega_with_itself() {
    for a in [zmod(2).unwrap(), boolean()] {
        let v = Arc::new(Variety::new(a));
        let u = v.default_universe(1).unwrap();
        let w = v.clone();
        let omega = NatTrans::new("ω", Functor::identity(), Functor::j(&v), move |x| w.omega(x));
        let g = godement(&omega, &omega, &u).unwrap();
        for x in &u.objects {
            let c = g.at(x).unwrap();
            let jj = v.obj(v.unit(), &v.obj(v.unit(), x).unwrap()).unwrap();
            assert!(Arc::ptr_eq(&c.target, &jj) || c.target == jj);
        }
    }
}

#[test]
fn interchange_on_the_plane_monad() {
    let s = plane_semiring();
    let d = semimonoid_to_jmonad(&s, Side::Right).unwrap();
    let v = s.variety.clone();
    let u = Universe::new(vec![v.unit().clone(), v.zero_object()]);
    // ψ = ω: Id → J, δ = ν: J → M, φ = ω, θ = ν.
    let r = interchange_check(&d.nu, &d.omega, &d.nu, &d.omega, &u).unwrap();
    assert!(r.passed, "{r}");
}

#[test]
fn semimonoid_monads_pass_on_both_sides() {
    let s = plane_semiring();
    for side in [Side::Right, Side::Left] {
        let d = semimonoid_to_jmonad(&s, side).unwrap();
        let u = jstructure_universe(&s.variety, &s.carrier, &d.m, 1).unwrap();
        assert_eq!(u.objects.len(), 3);
        assert!(u.excluded[0].starts_with("A•A"), "{:?}", u.excluded);
        let r = check_jmonad(&d, &u).unwrap();
        assert!(r.passed, "{side:?}: {r}");
    }
}

#[test]
fn trivial_semimonoid_over_z2_passes() {
    let s = SemiunitalSemiring::trivial(z2v()).unwrap();
    let d = semimonoid_to_jmonad(&s, Side::Right).unwrap();
    let u = jstructure_universe(&s.variety, &s.carrier, &d.m, 2).unwrap();
    assert!(check_jmonad(&d, &u).unwrap().passed);
}

#[test]
fn zero_multiplication_fails_a_unit_law() {
    let s = plane_semiring();
    let mut d = semimonoid_to_jmonad(&s, Side::Right).unwrap();
    d.mu = NatTrans::zero(&d.mu.source, &d.mu.target);
    let u = Universe::new(vec![s.variety.unit().clone()]);
    let r = check_jmonad(&d, &u).unwrap();
    assert!(!r.passed);
    assert!(r.law_id.contains("unit"), "{r}");
}

#[test]
fn corrupted_semimonoid_is_refused() {
    let mut s = plane_semiring();
    s.eta = LinearMap::zero(&s.eta.source, &s.eta.target);
    assert!(matches!(semimonoid_to_jmonad(&s, Side::Right), Err(Error::InvalidSemimonoid(_))));
}

#[test]
fn semicomonoid_comonads_pass() {
    let c = SemicounitalSemicoring::trivial(z2v()).unwrap();
    for side in [Side::Right, Side::Left] {
        let d = semicomonoid_to_jcomonad(&c, side).unwrap();
        let u = jstructure_universe(&c.variety, &c.carrier, &d.c, 2).unwrap();
        assert!(check_jcomonad(&d, &u).unwrap().passed);
    }
}

#[test]
fn zero_comultiplication_fails_a_counit_law() {
    let c = SemicounitalSemicoring::trivial(z2v()).unwrap();
    let mut d = semicomonoid_to_jcomonad(&c, Side::Right).unwrap();
    d.delta = NatTrans::zero(&d.delta.source, &d.delta.target);
    let u = Universe::new(vec![c.variety.unit().clone()]);
    let r = check_jcomonad(&d, &u).unwrap();
    assert_eq!(r.law_id, "object-0/counit-through-j-of-c");
}

#[test]
fn free_modules_and_cofree_comodules() {
    let s = plane_semiring();
    let d = semimonoid_to_jmonad(&s, Side::Right).unwrap();
    let v = s.variety.clone();
    for x in [v.unit().clone(), v.zero_object(), s.carrier.clone()] {
        let act = free_jmodule(&d, &x).unwrap();
        assert!(check_jact(&act, JParent::Monad(&d)).unwrap().passed);
    }
    let c = SemicounitalSemicoring::trivial(v.clone()).unwrap();
    let e = semicomonoid_to_jcomonad(&c, Side::Right).unwrap();
    for x in [v.unit().clone(), v.zero_object()] {
        let act = cofree_jcomodule(&e, &x).unwrap();
        assert!(check_jact(&act, JParent::Comonad(&e)).unwrap().passed);
    }
}

#[test]
fn free_module_over_boolean() {
    let v = Arc::new(Variety::new(boolean()));
    let s = SemiunitalSemiring::trivial(v.clone()).unwrap();
    let d = semimonoid_to_jmonad(&s, Side::Right).unwrap();
    let act = free_jmodule(&d, v.unit()).unwrap();
    assert_eq!(act.object.size(), 1);
    assert!(check_jact(&act, JParent::Monad(&d)).unwrap().passed);
}

#[test]
fn zero_action_fails() {
    let s = plane_semiring();
    let d = semimonoid_to_jmonad(&s, Side::Right).unwrap();
    let x = s.carrier.clone();
    let mx = d.m.obj(&x).unwrap();
    let act = JAct {
        object: x.clone(),
        kind: ActKind::Module,
        action: LinearMap::zero(&mx, &x),
    };
    assert!(!check_jact(&act, JParent::Monad(&d)).unwrap().passed);
}

#[test]
fn module_kind_must_match_the_parent() {
    let c = SemicounitalSemicoring::trivial(z2v()).unwrap();
    let e = semicomonoid_to_jcomonad(&c, Side::Right).unwrap();
    let s = SemiunitalSemiring::trivial(c.variety.clone()).unwrap();
    let d = semimonoid_to_jmonad(&s, Side::Right).unwrap();
    let act = free_jmodule(&d, c.variety.unit()).unwrap();
    assert!(matches!(check_jact(&act, JParent::Comonad(&e)), Err(Error::ShapeMismatch(_))));
}

#[test]
fn semiunitary_modules_are_jmodules() {
    let s = plane_semiring();
    let d = semimonoid_to_jmonad(&s, Side::Right).unwrap();
    let m = SemiunitaryModule::regular(s.clone()).unwrap();
    let act = JAct {
        object: s.carrier.clone(),
        kind: ActKind::Module,
        action: m.action.clone(),
    };
    assert!(check_jact(&act, JParent::Monad(&d)).unwrap().passed);
}

#[test]
fn roundtrips_over_z2_and_the_plane() {
    for s in [SemiunitalSemiring::trivial(z2v()).unwrap(), plane_semiring()] {
        assert!(roundtrip_semimonoid(&s).unwrap().passed);
        let d = semimonoid_to_jmonad(&s, Side::Right).unwrap();
        let u = jstructure_universe(&s.variety, &s.carrier, &d.m, 1).unwrap();
        assert!(roundtrip_jmonad(&s.variety, &d, &s.carrier, &u).unwrap().passed);
    }
    let c = SemicounitalSemicoring::trivial(z2v()).unwrap();
    assert!(roundtrip_semicomonoid(&c).unwrap().passed);
    let d = semicomonoid_to_jcomonad(&c, Side::Right).unwrap();
    let u = jstructure_universe(&c.variety, &c.carrier, &d.c, 1).unwrap();
    assert!(roundtrip_jcomonad(&c.variety, &d, &c.carrier, &u).unwrap().passed);
}

#[test]
fn sweedler_roundtrip_and_its_universe() {
    let z2 = zmod(2).unwrap();
    let v = Arc::new(Variety::new(product(&z2, &z2)));
    let c = sweedler_semicoring(v.clone(), &z2, &[0, 1]).unwrap();
    assert!(roundtrip_semicomonoid(&c).unwrap().passed);
    let d = semicomonoid_to_jcomonad(&c, Side::Right).unwrap();
    let u = jstructure_universe(&v, &c.carrier, &d.c, 1).unwrap();
    assert_eq!(u.objects.len(), 2);
    assert_eq!(u.excluded.len(), 2);
    assert!(check_jcomonad(&d, &u).unwrap().passed);
}

#[test]
fn extraction_refuses_boolean() {
    let v = Arc::new(Variety::new(boolean()));
    let s = SemiunitalSemiring::trivial(v.clone()).unwrap();
    let d = semimonoid_to_jmonad(&s, Side::Right).unwrap();
    assert!(matches!(jmonad_to_semimonoid(&v, &d, &s.carrier), Err(Error::NotFirm(_))));
    let c = SemicounitalSemicoring::trivial(v.clone()).unwrap();
    let e = semicomonoid_to_jcomonad(&c, Side::Right).unwrap();
    assert!(matches!(jcomonad_to_semicomonoid(&v, &e, &c.carrier), Err(Error::NotFirm(_))));
}

#[test]
fn every_enumerated_structure_on_the_plane_roundtrips() {
    let z2 = zmod(2).unwrap();
    let v = z2v();
    let p = Arc::new(power(&z2, 2).unwrap());
    let Structures::Semirings(rings) = enumerate_structures(&v, &p, StructureKind::Semiring, DEFAULT_CAP).unwrap()
    else {
        unreachable!()
    };
    for s in &rings {
        let d = semimonoid_to_jmonad(s, Side::Right).unwrap();
        let u = jstructure_universe(&v, &p, &d.m, 1).unwrap();
        assert!(check_jmonad(&d, &u).unwrap().passed);
        assert!(roundtrip_semimonoid(s).unwrap().passed);
    }
    let Structures::Semicorings(corings) =
        enumerate_structures(&v, &p, StructureKind::Semicoring, DEFAULT_CAP).unwrap()
    else {
        unreachable!()
    };
    for c in &corings {
        let d = semicomonoid_to_jcomonad(c, Side::Right).unwrap();
        let u = jstructure_universe(&v, &p, &d.c, 1).unwrap();
        assert!(check_jcomonad(&d, &u).unwrap().passed);
        assert!(roundtrip_semicomonoid(c).unwrap().passed);
    }
}

#[test]
fn induced_monad_with_regular_n() {
    let a = zmod(2).unwrap();
    let v = Variety::new(a.clone());
    let u = v.default_universe(2).unwrap();
    let n = Arc::new(Semimodule::regular(&a));
    let m = induced_monad_from_adjunction(&n, &u, DEFAULT_CAP).unwrap();
    assert!(m.report.passed, "{}", m.report);
    for x in &m.universe.objects {
        assert!(m.monad.nu.at(x).unwrap().is_bijective());
    }
}

#[test]
fn induced_monad_with_zero_n() {
    let a = zmod(2).unwrap();
    let v = Variety::new(a.clone());
    let u = v.default_universe(2).unwrap();
    let n = Arc::new(Semimodule::zero(&a));
    let m = induced_monad_from_adjunction(&n, &u, DEFAULT_CAP).unwrap();
    assert!(m.report.passed);
    for x in &m.universe.objects {
        assert_eq!(m.monad.m.obj(x).unwrap().size(), 1);
    }
}

#[test]
fn induced_monad_with_the_plane_exceeds_the_cap() {
    let a = zmod(2).unwrap();
    let v = Variety::new(a.clone());
    let u = Universe::new(vec![v.unit().clone()]);
    let n = Arc::new(power(&a, 2).unwrap());
    let r = induced_monad_from_adjunction(&n, &u, DEFAULT_CAP);
    assert!(matches!(r, Err(Error::SizeCapExceeded { .. })));
}

#[test]
fn induced_monad_with_the_product_ring() {
    let z2 = zmod(2).unwrap();
    let a = product(&z2, &z2);
    let v = Variety::new(a.clone());
    let u = v.default_universe(1).unwrap();
    let n = Arc::new(Semimodule::regular(&a));
    let m = induced_monad_from_adjunction(&n, &u, DEFAULT_CAP).unwrap();
    assert!(m.report.passed, "{}", m.report);
}
