use std::sync::Arc;

use super::{Functor, NatTrans};
use crate::algebra::{same_object, LinearMap, Semimodule};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::variety::{chain, equal_maps, Universe, Variety};

/// `(M, μ, ω, ν; J)` with `μ: MM → M`, `ω: Id → J`, `ν: J → M`.
#[derive(Clone, Debug)]
pub struct JMonad {
    pub m: Functor,
    pub j: Functor,
    pub mu: NatTrans,
    pub omega: NatTrans,
    pub nu: NatTrans,
}

/// `(C, Δ, ω, θ; J)` with `Δ: C → CC`, `ω: Id → J`, `θ: C → J`.
#[derive(Clone, Debug)]
pub struct JComonad {
    pub c: Functor,
    pub j: Functor,
    pub delta: NatTrans,
    pub omega: NatTrans,
    pub theta: NatTrans,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActKind {
    /// `ϱ: M(X) → X`.
    Module,
    /// `ϱ: X → C(X)`.
    Comodule,
}

#[derive(Clone, Debug)]
pub struct JAct {
    pub object: Arc<Semimodule>,
    pub kind: ActKind,
    pub action: LinearMap,
}

#[derive(Clone, Copy, Debug)]
pub enum JParent<'a> {
    Monad(&'a JMonad),
    Comonad(&'a JComonad),
}

fn per_object(
    u: &Universe,
    law: impl Fn(&Arc<Semimodule>) -> Result<LawReport> + Sync + Send,
) -> Result<LawReport> {
    let reports = crate::par::map_slice(&u.objects, |x| law(x));
    for (i, r) in reports.into_iter().enumerate() {
        let r = r?;
        if !r.passed {
            return Ok(r.scoped(&format!("object-{i}")));
        }
    }
    Ok(LawReport::pass())
}

fn structure_checks(u: &Universe, functors: &[&Functor], transformations: &[&NatTrans]) -> Result<LawReport> {
    let r = u.check();
    if !r.passed {
        return Ok(r.scoped("universe"));
    }
    for f in functors {
        let r = f.check(u)?;
        if !r.passed {
            return Ok(r);
        }
    }
    for t in transformations {
        let r = t.check_naturality(u)?;
        if !r.passed {
            return Ok(r);
        }
    }
    Ok(LawReport::pass())
}

/// Functoriality and naturality on the listed morphisms, then on every
/// object: `μ_X ∘ M(μ_X) = μ_X ∘ μ_{M(X)}`,
/// `ω_{M(X)} ∘ μ_X ∘ ν_{M(X)} = id` and `M(ω_X) ∘ μ_X ∘ M(ν_X) = id`.
pub fn check_jmonad(d: &JMonad, u: &Universe) -> Result<LawReport> {
    let r = structure_checks(u, &[&d.m, &d.j], &[&d.mu, &d.omega, &d.nu])?;
    if !r.passed {
        return Ok(r);
    }
    per_object(u, |x| {
        let mx = d.m.obj(x)?;
        let mu = d.mu.at(x)?;
        let lhs = mu.compose(&d.m.mor(&mu)?)?;
        let rhs = mu.compose(&d.mu.at(&mx)?)?;
        let r = equal_maps("associativity", &lhs, &rhs);
        if !r.passed {
            return Ok(r);
        }
        let lhs = chain(&[d.nu.at(&mx)?, mu.clone(), d.omega.at(&mx)?])?;
        let r = equal_maps("unit-through-j-of-m", &lhs, &LinearMap::identity(&d.j.obj(&mx)?));
        if !r.passed {
            return Ok(r);
        }
        let lhs = chain(&[d.m.mor(&d.nu.at(x)?)?, mu, d.m.mor(&d.omega.at(x)?)?])?;
        let mjx = d.m.obj(&d.j.obj(x)?)?;
        Ok(equal_maps("unit-through-m-of-j", &lhs, &LinearMap::identity(&mjx)))
    })
}

/// Functoriality and naturality on the listed morphisms, then on every
/// object: `Δ_{C(X)} ∘ Δ_X = C(Δ_X) ∘ Δ_X`, `θ_{C(X)} ∘ Δ_X = ω_{C(X)}`
/// and `C(θ_X) ∘ Δ_X = C(ω_X)`.
pub fn check_jcomonad(d: &JComonad, u: &Universe) -> Result<LawReport> {
    let r = structure_checks(u, &[&d.c, &d.j], &[&d.delta, &d.omega, &d.theta])?;
    if !r.passed {
        return Ok(r);
    }
    per_object(u, |x| {
        let cx = d.c.obj(x)?;
        let delta = d.delta.at(x)?;
        let lhs = d.delta.at(&cx)?.compose(&delta)?;
        let rhs = d.c.mor(&delta)?.compose(&delta)?;
        let r = equal_maps("coassociativity", &lhs, &rhs);
        if !r.passed {
            return Ok(r);
        }
        let lhs = d.theta.at(&cx)?.compose(&delta)?;
        let r = equal_maps("counit-through-j-of-c", &lhs, &d.omega.at(&cx)?);
        if !r.passed {
            return Ok(r);
        }
        let lhs = d.c.mor(&d.theta.at(x)?)?.compose(&delta)?;
        Ok(equal_maps("counit-through-c-of-j", &lhs, &d.c.mor(&d.omega.at(x)?)?))
    })
}

/// Module: `ϱ ∘ M(ϱ) = ϱ ∘ μ_X` and `ω_X ∘ ϱ ∘ ν_X = id_{J(X)}`.
/// Comodule: `C(ϱ) ∘ ϱ = Δ_X ∘ ϱ` and `θ_X ∘ ϱ = ω_X`.
pub fn check_jact(act: &JAct, parent: JParent<'_>) -> Result<LawReport> {
    let x = &act.object;
    let rho = &act.action;
    let r = rho.check().scoped("action");
    if !r.passed {
        return Ok(r);
    }
    match (act.kind, parent) {
        (ActKind::Module, JParent::Monad(d)) => {
            if !same_object(&rho.source, &d.m.obj(x)?) || !same_object(&rho.target, x) {
                return Err(Error::ShapeMismatch("ϱ must map M(X) to X".into()));
            }
            let lhs = rho.compose(&d.m.mor(rho)?)?;
            let rhs = rho.compose(&d.mu.at(x)?)?;
            let r = equal_maps("act-associativity", &lhs, &rhs);
            if !r.passed {
                return Ok(r);
            }
            let lhs = chain(&[d.nu.at(x)?, rho.clone(), d.omega.at(x)?])?;
            Ok(equal_maps("act-unit", &lhs, &LinearMap::identity(&d.j.obj(x)?)))
        }
        (ActKind::Comodule, JParent::Comonad(d)) => {
            if !same_object(&rho.source, x) || !same_object(&rho.target, &d.c.obj(x)?) {
                return Err(Error::ShapeMismatch("ϱ must map X to C(X)".into()));
            }
            let lhs = d.c.mor(rho)?.compose(rho)?;
            let rhs = d.delta.at(x)?.compose(rho)?;
            let r = equal_maps("coact-coassociativity", &lhs, &rhs);
            if !r.passed {
                return Ok(r);
            }
            Ok(equal_maps("coact-counit", &d.theta.at(x)?.compose(rho)?, &d.omega.at(x)?))
        }
        _ => Err(Error::ShapeMismatch("a module needs a J-monad and a comodule a J-comonad".into())),
    }
}

/// `M(X)` acted on by `μ_X`.
pub fn free_jmodule(d: &JMonad, x: &Arc<Semimodule>) -> Result<JAct> {
    Ok(JAct {
        object: d.m.obj(x)?,
        kind: ActKind::Module,
        action: d.mu.at(x)?,
    })
}

/// `C(X)` coacted on by `Δ_X`.
pub fn cofree_jcomodule(d: &JComonad, x: &Arc<Semimodule>) -> Result<JAct> {
    Ok(JAct {
        object: d.c.obj(x)?,
        kind: ActKind::Comodule,
        action: d.delta.at(x)?,
    })
}

/// `{𝐈, 𝒜, 𝒜 • 𝒜, 0}` with up to `per_pair` maps between each ordered pair.
/// Objects whose third iterate under `f` exceeds the tensor size limit are
/// left out and listed in `excluded`.
pub fn jstructure_universe(
    v: &Arc<Variety>,
    carrier: &Arc<Semimodule>,
    f: &Functor,
    per_pair: usize,
) -> Result<Universe> {
    let candidates = [
        ("I", v.unit().clone()),
        ("A", carrier.clone()),
        ("A•A", v.obj(carrier, carrier)?),
        ("0", v.zero_object()),
    ];
    let mut objects: Vec<Arc<Semimodule>> = Vec::new();
    let mut excluded = Vec::new();
    for (name, x) in candidates {
        if objects.iter().any(|o| Arc::ptr_eq(o, &x)) {
            continue;
        }
        let fits = f.obj(&x).and_then(|y| f.obj(&y)).and_then(|y| f.obj(&y));
        match fits {
            Ok(_) => objects.push(x),
            Err(Error::SizeCapExceeded { needed, cap }) => {
                excluded.push(format!("{name}: third iterate of {} needs {needed} > {cap}", f.name()))
            }
            Err(e) => return Err(e),
        }
    }
    let mut u = Universe::new(objects);
    u.add_homs(per_pair)?;
    u.excluded = excluded;
    Ok(u)
}
