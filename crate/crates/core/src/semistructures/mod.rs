//! Semiunital semirings and semicounital semicorings in the variety of
//! `(A, A)`-bisemimodules, their (co)modules, convolution monoids, Sweedler
//! semicorings and exhaustive enumeration of structures on a carrier.
//!
//! Unit and counit laws hold only after passing to `𝐈 • −`, which is
//! `𝔠(−)` up to `ϑ`. The `strict` flag of the checkers additionally asks for
//! a firm carrier, on which these laws are the classical ones.

mod convolution;
mod enumerate;
mod modules;
mod sweedler;

use std::sync::Arc;

pub use convolution::{convolution_functors, convolution_monoid, ConvolutionFunctors, ConvolutionMonoid};
pub use enumerate::{enumerate_structures, StructureKind, Structures};
pub use modules::{
    check_semicounitary_comodule, check_semiunitary_module, SemicounitaryComodule, SemiunitaryModule,
};
pub use sweedler::sweedler_semicoring;

use crate::algebra::fixtures::restrict;
use crate::algebra::{same_object, LinearMap, Semimodule, Semiring};
use crate::error::{Error, Result};
use crate::report::{first_failure, LawReport};
use crate::tensor::factor_into;
use crate::variety::{chain, equal_maps, Variety};

/// `(𝒜, μ, η)` with `μ: 𝒜 • 𝒜 → 𝒜` defined on the variety's cached tensor.
#[derive(Clone, Debug)]
pub struct SemiunitalSemiring {
    pub variety: Arc<Variety>,
    pub carrier: Arc<Semimodule>,
    pub mu: LinearMap,
    pub eta: LinearMap,
}

/// `(𝒞, Δ, ε)` with `Δ: 𝒞 → 𝒞 • 𝒞` and `ε: 𝒞 → 𝐈`.
#[derive(Clone, Debug)]
pub struct SemicounitalSemicoring {
    pub variety: Arc<Variety>,
    pub carrier: Arc<Semimodule>,
    pub delta: LinearMap,
    pub epsilon: LinearMap,
}

fn shape(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(what.into()))
    }
}

impl SemiunitalSemiring {
    pub fn new(v: Arc<Variety>, carrier: Arc<Semimodule>, mu: LinearMap, eta: LinearMap) -> Result<Self> {
        v.require(&carrier)?;
        let aa = v.obj(&carrier, &carrier)?;
        shape(
            same_object(&mu.source, &aa) && same_object(&mu.target, &carrier),
            "μ must map 𝒜 • 𝒜 to 𝒜",
        )?;
        shape(
            same_object(&eta.source, v.unit()) && same_object(&eta.target, &carrier),
            "η must map 𝐈 to 𝒜",
        )?;
        Ok(SemiunitalSemiring { variety: v, carrier, mu, eta })
    }

    /// `μ` factored from a balanced multiplication on pairs.
    pub fn from_pairs(
        v: Arc<Variety>,
        carrier: Arc<Semimodule>,
        mul: impl Fn(usize, usize) -> usize + Sync + Send,
        eta: Vec<usize>,
    ) -> Result<Self> {
        let t = v.tensor(&carrier, &carrier)?;
        let mu = factor_into(&t, &carrier, mul)?;
        let eta = LinearMap::new(v.unit().clone(), carrier.clone(), eta)?;
        SemiunitalSemiring::new(v, carrier, mu, eta)
    }

    /// `𝒜 = 𝐈` with the multiplication of `A` and `η = id`.
    pub fn trivial(v: Arc<Variety>) -> Result<Self> {
        let a = v.base().clone();
        let i = v.unit().clone();
        let eta = (0..i.size()).collect();
        SemiunitalSemiring::from_pairs(v, i, |x, y| a.mul(x, y), eta)
    }

    /// A semiring `R` with a semiring map `κ: A → R`, viewed as an
    /// `(A, A)`-bisemimodule by restriction of scalars, with `η = κ`.
    pub fn from_extension(v: Arc<Variety>, r: &Arc<Semiring>, kappa: &[usize]) -> Result<Self> {
        let a = v.base().clone();
        check_semiring_map(&a, r, kappa)?;
        let reg = Semimodule::regular(r);
        let carrier = restrict(&reg, true, Some((&a, kappa)))?;
        let carrier = Arc::new(restrict(&carrier, false, Some((&a, kappa)))?);
        SemiunitalSemiring::from_pairs(v, carrier, |x, y| r.mul(x, y), kappa.to_vec())
    }

    pub fn base(&self) -> &Arc<Semiring> {
        self.variety.base()
    }
}

/// Checks that `kappa` preserves `0`, `1`, addition and multiplication.
pub fn check_semiring_map(src: &Semiring, dst: &Semiring, kappa: &[usize]) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidMorphism(msg));
    if kappa.len() != src.size() || kappa.iter().any(|&y| y >= dst.size()) {
        return bad("κ has the wrong shape".into());
    }
    if kappa[0] != 0 || kappa[1] != 1 {
        return bad("κ must send 0 to 0 and 1 to 1".into());
    }
    for a in 0..src.size() {
        for b in 0..src.size() {
            if kappa[src.add(a, b)] != dst.add(kappa[a], kappa[b]) {
                return bad(format!("κ is not additive at ({a}, {b})"));
            }
            if kappa[src.mul(a, b)] != dst.mul(kappa[a], kappa[b]) {
                return bad(format!("κ is not multiplicative at ({a}, {b})"));
            }
        }
    }
    Ok(())
}

impl SemicounitalSemicoring {
    pub fn new(v: Arc<Variety>, carrier: Arc<Semimodule>, delta: LinearMap, epsilon: LinearMap) -> Result<Self> {
        v.require(&carrier)?;
        let cc = v.obj(&carrier, &carrier)?;
        shape(
            same_object(&delta.source, &carrier) && same_object(&delta.target, &cc),
            "Δ must map 𝒞 to 𝒞 • 𝒞",
        )?;
        shape(
            same_object(&epsilon.source, &carrier) && same_object(&epsilon.target, v.unit()),
            "ε must map 𝒞 to 𝐈",
        )?;
        Ok(SemicounitalSemicoring { variety: v, carrier, delta, epsilon })
    }

    /// `𝒞 = 𝐈` with `Δ(a) = τ(a, 1)` and `ε = id`.
    pub fn trivial(v: Arc<Variety>) -> Result<Self> {
        let i = v.unit().clone();
        let t = v.tensor(&i, &i)?;
        let delta = LinearMap::from_fn(i.clone(), t.carrier.clone(), |a| t.tau(a, 1))?;
        let epsilon = LinearMap::identity(&i);
        SemicounitalSemicoring::new(v, i, delta, epsilon)
    }

    pub fn base(&self) -> &Arc<Semiring> {
        self.variety.base()
    }
}

fn strict_report(v: &Variety, x: &Arc<Semimodule>) -> Result<LawReport> {
    Ok(if v.is_firm(x)? {
        LawReport::pass()
    } else {
        LawReport::fail("strict-firm-carrier", vec![], "ω is not bijective on the carrier")
    })
}

/// Associativity `μ ∘ (μ • 𝒜) = μ ∘ (𝒜 • μ) ∘ γ` and the unit laws
/// `ω ∘ μ ∘ (η • 𝒜) = id` and `ω ∘ μ ∘ (𝒜 • η) = ℘`.
pub fn check_semiunital_semiring(s: &SemiunitalSemiring, strict: bool) -> Result<LawReport> {
    let v = &s.variety;
    let a = &s.carrier;
    let i = v.unit();
    let linear = first_failure([s.mu.check().scoped("mu"), s.eta.check().scoped("eta")]);
    if !linear.passed {
        return Ok(linear);
    }
    let components = v.semiunit_components(a)?;
    let omega = &components.omega;
    let lhs = s.mu.compose(&v.map_left(&s.mu, a)?)?;
    let rhs = chain(&[v.associator(a, a, a)?.forward, v.map_right(a, &s.mu)?, s.mu.clone()])?;
    let r = equal_maps("associativity", &lhs, &rhs);
    if !r.passed {
        return Ok(r);
    }
    let lhs = chain(&[v.map_left(&s.eta, a)?, s.mu.clone(), omega.clone()])?;
    let r = equal_maps("unit-left", &lhs, &LinearMap::identity(&v.obj(i, a)?));
    if !r.passed {
        return Ok(r);
    }
    let lhs = chain(&[v.map_right(a, &s.eta)?, s.mu.clone(), omega.clone()])?;
    let r = equal_maps("unit-right", &lhs, components.wp());
    if !r.passed || !strict {
        return Ok(r);
    }
    strict_report(v, a)
}

/// Coassociativity `γ ∘ (Δ • 𝒞) ∘ Δ = (𝒞 • Δ) ∘ Δ` and the counit laws
/// `(ε • 𝒞) ∘ Δ = ω` and `(𝒞 • ε) ∘ Δ = ℓ ∘ ω`.
pub fn check_semicounital_semicoring(c: &SemicounitalSemicoring, strict: bool) -> Result<LawReport> {
    let v = &c.variety;
    let x = &c.carrier;
    let linear = first_failure([c.delta.check().scoped("delta"), c.epsilon.check().scoped("epsilon")]);
    if !linear.passed {
        return Ok(linear);
    }
    let components = v.semiunit_components(x)?;
    let lhs = chain(&[c.delta.clone(), v.map_left(&c.delta, x)?, v.associator(x, x, x)?.forward])?;
    let rhs = v.map_right(x, &c.delta)?.compose(&c.delta)?;
    let r = equal_maps("coassociativity", &lhs, &rhs);
    if !r.passed {
        return Ok(r);
    }
    let lhs = v.map_left(&c.epsilon, x)?.compose(&c.delta)?;
    let r = equal_maps("counit-left", &lhs, &components.omega);
    if !r.passed {
        return Ok(r);
    }
    let lhs = v.map_right(x, &c.epsilon)?.compose(&c.delta)?;
    let rhs = components.ell.forward.compose(&components.omega)?;
    let r = equal_maps("counit-right", &lhs, &rhs);
    if !r.passed || !strict {
        return Ok(r);
    }
    strict_report(v, x)
}

/// `ψ ∘ μ_𝒜 = μ_ℬ ∘ (ψ • ψ)` and `ψ ∘ η_𝒜 = η_ℬ`.
pub fn check_semiring_morphism(
    a: &SemiunitalSemiring,
    b: &SemiunitalSemiring,
    psi: &LinearMap,
) -> Result<LawReport> {
    let v = &a.variety;
    shape(
        Arc::ptr_eq(v, &b.variety) && same_object(&psi.source, &a.carrier) && same_object(&psi.target, &b.carrier),
        "ψ must map 𝒜 to ℬ in one variety",
    )?;
    let r = psi.check().scoped("psi");
    if !r.passed {
        return Ok(r);
    }
    let lhs = psi.compose(&a.mu)?;
    let rhs = b.mu.compose(&v.tensor_maps(psi, psi)?)?;
    let r = equal_maps("morphism-multiplication", &lhs, &rhs);
    if !r.passed {
        return Ok(r);
    }
    Ok(equal_maps("morphism-unit", &psi.compose(&a.eta)?, &b.eta))
}

/// `(φ • φ) ∘ Δ_𝒟 = Δ_𝒞 ∘ φ` and `ε_𝒞 ∘ φ = ε_𝒟`.
pub fn check_semicoring_morphism(
    d: &SemicounitalSemicoring,
    c: &SemicounitalSemicoring,
    phi: &LinearMap,
) -> Result<LawReport> {
    let v = &d.variety;
    shape(
        Arc::ptr_eq(v, &c.variety) && same_object(&phi.source, &d.carrier) && same_object(&phi.target, &c.carrier),
        "φ must map 𝒟 to 𝒞 in one variety",
    )?;
    let r = phi.check().scoped("phi");
    if !r.passed {
        return Ok(r);
    }
    let lhs = v.tensor_maps(phi, phi)?.compose(&d.delta)?;
    let rhs = c.delta.compose(phi)?;
    let r = equal_maps("morphism-comultiplication", &lhs, &rhs);
    if !r.passed {
        return Ok(r);
    }
    Ok(equal_maps("morphism-counit", &c.epsilon.compose(phi)?, &d.epsilon))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{boolean, product, zmod};

    #[test]
    fn trivial_structures_pass() {
        for a in [zmod(2).unwrap(), zmod(3).unwrap(), boolean()] {
            let v = Arc::new(Variety::new(a));
            let s = SemiunitalSemiring::trivial(v.clone()).unwrap();
            assert!(check_semiunital_semiring(&s, false).unwrap().passed);
            let c = SemicounitalSemicoring::trivial(v).unwrap();
            assert!(check_semicounital_semicoring(&c, false).unwrap().passed);
        }
    }

    #[test]
    fn boolean_is_not_strict() {
        let v = Arc::new(Variety::new(boolean()));
        let s = SemiunitalSemiring::trivial(v).unwrap();
        assert_eq!(check_semiunital_semiring(&s, true).unwrap().law_id, "strict-firm-carrier");
        assert!(s.mu.table.iter().all(|&x| x == 0));
    }

    #[test]
    fn diagonal_extension_is_a_semiring() {
        let z2 = zmod(2).unwrap();
        let v = Arc::new(Variety::new(z2.clone()));
        let s = SemiunitalSemiring::from_extension(v, &product(&z2, &z2), &[0, 1]).unwrap();
        assert_eq!(s.carrier.size(), 4);
        assert!(check_semiunital_semiring(&s, true).unwrap().passed);
    }

    #[test]
    fn zero_unit_fails() {
        let v = Arc::new(Variety::new(zmod(2).unwrap()));
        let mut s = SemiunitalSemiring::trivial(v).unwrap();
        s.eta = LinearMap::zero(&s.eta.source, &s.eta.target);
        assert_eq!(check_semiunital_semiring(&s, false).unwrap().law_id, "unit-left");
    }

    #[test]
    fn non_ring_map_is_refused() {
        let z2 = zmod(2).unwrap();
        let v = Arc::new(Variety::new(z2.clone()));
        let r = SemiunitalSemiring::from_extension(v, &product(&z2, &z2), &[0, 3]);
        assert!(matches!(r, Err(Error::InvalidMorphism(_))));
    }
}
