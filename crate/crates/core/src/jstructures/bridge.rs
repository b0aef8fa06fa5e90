use std::sync::Arc;

use super::{Functor, JComonad, JMonad, NatTrans};
use crate::algebra::{same_object, Semimodule};
use crate::error::{Error, Result};
use crate::report::{compare_tables, LawReport};
use crate::semistructures::{
    check_semicounital_semicoring, check_semiunital_semiring, SemicounitalSemicoring, SemiunitalSemiring,
};
use crate::tensor::Side;
use crate::variety::{chain, equal_maps, Universe, Variety};

fn omega(v: &Arc<Variety>) -> NatTrans {
    let w = v.clone();
    NatTrans::new("ω", Functor::identity(), Functor::j(v), move |x| w.omega(x))
}

/// The J-monad `− • 𝒜` (right) or `𝒜 • −` (left) with `J = 𝐈 • −`.
///
/// Right: `μ_X = (X • μ) ∘ γ_{X,𝒜,𝒜}` and `ν_X = (X • η) ∘ ℓ_X`.
/// Left: `μ_X = (μ • X) ∘ γ⁻¹_{𝒜,𝒜,X}` and `ν_X = η • X`.
pub fn semimonoid_to_jmonad(s: &SemiunitalSemiring, side: Side) -> Result<JMonad> {
    let r = check_semiunital_semiring(s, false)?;
    if !r.passed {
        return Err(Error::InvalidSemimonoid(r.to_string()));
    }
    let v = &s.variety;
    let a = &s.carrier;
    let m = Functor::tensor_with(v, a, side, "M");
    let mm = Functor::compose(&m, &m);
    let j = Functor::j(v);
    let (v1, a1, s1) = (v.clone(), a.clone(), s.clone());
    let (v2, s2) = (v.clone(), s.clone());
    let (mu, nu) = match side {
        Side::Right => (
            NatTrans::new("μ", mm, m.clone(), move |x| {
                v1.map_right(x, &s1.mu)?.compose(&v1.associator(x, &a1, &a1)?.forward)
            }),
            NatTrans::new("ν", j.clone(), m.clone(), move |x| {
                v2.map_right(x, &s2.eta)?.compose(&v2.ell(x)?.forward)
            }),
        ),
        Side::Left => (
            NatTrans::new("μ", mm, m.clone(), move |x| {
                v1.map_left(&s1.mu, x)?.compose(&v1.associator(&a1, &a1, x)?.backward)
            }),
            NatTrans::new("ν", j.clone(), m.clone(), move |x| v2.map_left(&s2.eta, x)),
        ),
    };
    Ok(JMonad {
        m,
        j,
        mu,
        omega: omega(v),
        nu,
    })
}

/// The J-comonad `− • 𝒞` (right) or `𝒞 • −` (left) with `J = 𝐈 • −`.
///
/// Right: `Δ_X = γ⁻¹_{X,𝒞,𝒞} ∘ (X • Δ)` and `θ_X = ℘_X ∘ (X • ε)`.
/// Left: `Δ_X = γ_{𝒞,𝒞,X} ∘ (Δ • X)` and `θ_X = ε • X`.
pub fn semicomonoid_to_jcomonad(c: &SemicounitalSemicoring, side: Side) -> Result<JComonad> {
    let r = check_semicounital_semicoring(c, false)?;
    if !r.passed {
        return Err(Error::InvalidSemicomonoid(r.to_string()));
    }
    let v = &c.variety;
    let k = &c.carrier;
    let cf = Functor::tensor_with(v, k, side, "C");
    let cc = Functor::compose(&cf, &cf);
    let j = Functor::j(v);
    let (v1, k1, c1) = (v.clone(), k.clone(), c.clone());
    let (v2, c2) = (v.clone(), c.clone());
    let (delta, theta) = match side {
        Side::Right => (
            NatTrans::new("Δ", cf.clone(), cc, move |x| {
                v1.associator(x, &k1, &k1)?.backward.compose(&v1.map_right(x, &c1.delta)?)
            }),
            NatTrans::new("θ", cf.clone(), j.clone(), move |x| {
                v2.wp(x)?.compose(&v2.map_right(x, &c2.epsilon)?)
            }),
        ),
        Side::Left => (
            NatTrans::new("Δ", cf.clone(), cc, move |x| {
                v1.associator(&k1, &k1, x)?.forward.compose(&v1.map_left(&c1.delta, x)?)
            }),
            NatTrans::new("θ", cf.clone(), j.clone(), move |x| v2.map_left(&c2.epsilon, x)),
        ),
    };
    Ok(JComonad {
        c: cf,
        j,
        delta,
        omega: omega(v),
        theta,
    })
}

fn require_firm(v: &Variety, x: &Arc<Semimodule>, what: &str) -> Result<()> {
    if v.is_firm(x)? {
        Ok(())
    } else {
        Err(Error::NotFirm(format!("{what} is not firm")))
    }
}

fn require_right_tensor(v: &Variety, f: &Functor, carrier: &Arc<Semimodule>) -> Result<()> {
    let i = v.unit();
    if same_object(&f.obj(i)?, &v.obj(i, carrier)?) {
        Ok(())
    } else {
        Err(Error::ShapeMismatch("the functor is not − • carrier on 𝐈".into()))
    }
}

/// `μ = λ_𝒜 ∘ μ_𝐈 ∘ (ω_𝒜 • 𝒜)` and `η = λ_𝒜 ∘ ν_𝐈 ∘ ω_𝐈`, for a J-monad of
/// the form `− • 𝒜` with `𝐈` and `𝒜` firm.
pub fn jmonad_to_semimonoid(
    v: &Arc<Variety>,
    d: &JMonad,
    carrier: &Arc<Semimodule>,
) -> Result<SemiunitalSemiring> {
    let i = v.unit();
    require_firm(v, i, "𝐈")?;
    require_firm(v, carrier, "the carrier")?;
    require_right_tensor(v, &d.m, carrier)?;
    let lambda = v.lambda(carrier)?;
    let mu = chain(&[v.map_left(&v.omega(carrier)?, carrier)?, d.mu.at(i)?, lambda.clone()])?;
    let eta = chain(&[v.omega(i)?, d.nu.at(i)?, lambda])?;
    SemiunitalSemiring::new(v.clone(), carrier.clone(), mu, eta)
}

/// `Δ = (λ_𝒞 • 𝒞) ∘ Δ_𝐈 ∘ ω_𝒞` and `ε = λ_𝐈 ∘ θ_𝐈 ∘ ω_𝒞`, for a J-comonad
/// of the form `− • 𝒞` with `𝐈` and `𝒞` firm.
pub fn jcomonad_to_semicomonoid(
    v: &Arc<Variety>,
    d: &JComonad,
    carrier: &Arc<Semimodule>,
) -> Result<SemicounitalSemicoring> {
    let i = v.unit();
    require_firm(v, i, "𝐈")?;
    require_firm(v, carrier, "the carrier")?;
    require_right_tensor(v, &d.c, carrier)?;
    let w = v.omega(carrier)?;
    let delta = chain(&[w.clone(), d.delta.at(i)?, v.map_left(&v.lambda(carrier)?, carrier)?])?;
    let epsilon = chain(&[w, d.theta.at(i)?, v.lambda(i)?])?;
    SemicounitalSemicoring::new(v.clone(), carrier.clone(), delta, epsilon)
}

/// Extraction after induction gives back `μ` and `η` table for table.
pub fn roundtrip_semimonoid(s: &SemiunitalSemiring) -> Result<LawReport> {
    let d = semimonoid_to_jmonad(s, Side::Right)?;
    let back = jmonad_to_semimonoid(&s.variety, &d, &s.carrier)?;
    Ok(compare_tables("roundtrip-mu", &s.mu.table, &back.mu.table)
        .and_then(|| compare_tables("roundtrip-eta", &s.eta.table, &back.eta.table)))
}

/// Extraction after induction gives back `Δ` and `ε` table for table.
pub fn roundtrip_semicomonoid(c: &SemicounitalSemicoring) -> Result<LawReport> {
    let d = semicomonoid_to_jcomonad(c, Side::Right)?;
    let back = jcomonad_to_semicomonoid(&c.variety, &d, &c.carrier)?;
    Ok(compare_tables("roundtrip-delta", &c.delta.table, &back.delta.table)
        .and_then(|| compare_tables("roundtrip-epsilon", &c.epsilon.table, &back.epsilon.table)))
}

/// Induction after extraction reproduces `μ_X` and `ν_X` on every object.
pub fn roundtrip_jmonad(
    v: &Arc<Variety>,
    d: &JMonad,
    carrier: &Arc<Semimodule>,
    u: &Universe,
) -> Result<LawReport> {
    let s = jmonad_to_semimonoid(v, d, carrier)?;
    let e = semimonoid_to_jmonad(&s, Side::Right)?;
    for (k, x) in u.objects.iter().enumerate() {
        let r = equal_maps("roundtrip-mu", &d.mu.at(x)?, &e.mu.at(x)?);
        if !r.passed {
            return Ok(r.scoped(&format!("object-{k}")));
        }
        let r = equal_maps("roundtrip-nu", &d.nu.at(x)?, &e.nu.at(x)?);
        if !r.passed {
            return Ok(r.scoped(&format!("object-{k}")));
        }
    }
    Ok(LawReport::pass())
}

/// Induction after extraction reproduces `Δ_X` and `θ_X` on every object.
pub fn roundtrip_jcomonad(
    v: &Arc<Variety>,
    d: &JComonad,
    carrier: &Arc<Semimodule>,
    u: &Universe,
) -> Result<LawReport> {
    let c = jcomonad_to_semicomonoid(v, d, carrier)?;
    let e = semicomonoid_to_jcomonad(&c, Side::Right)?;
    for (k, x) in u.objects.iter().enumerate() {
        let r = equal_maps("roundtrip-delta", &d.delta.at(x)?, &e.delta.at(x)?);
        if !r.passed {
            return Ok(r.scoped(&format!("object-{k}")));
        }
        let r = equal_maps("roundtrip-theta", &d.theta.at(x)?, &e.theta.at(x)?);
        if !r.passed {
            return Ok(r.scoped(&format!("object-{k}")));
        }
    }
    Ok(LawReport::pass())
}
