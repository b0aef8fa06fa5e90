use std::sync::Arc;

use super::{shape, SemicounitalSemicoring, SemiunitalSemiring};
use crate::algebra::{same_object, LinearMap, Semimodule};
use crate::congruence::is_cancellative;
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::tensor::{associator_on, factor_into, induced_map, tensor, theta_on, Side, TensorProduct};
use crate::variety::{chain, equal_maps};

/// A right `A`-semimodule `M` with `ϱ: M ⊠ 𝒜 → M`.
#[derive(Clone, Debug)]
pub struct SemiunitaryModule {
    pub parent: SemiunitalSemiring,
    /// `M ⊠ 𝒜`.
    pub tensor: TensorProduct,
    pub action: LinearMap,
}

/// A right `A`-semimodule `M` with `ϱ: M → M ⊠ 𝒞`.
#[derive(Clone, Debug)]
pub struct SemicounitaryComodule {
    pub parent: SemicounitalSemicoring,
    /// `M ⊠ 𝒞`.
    pub tensor: TensorProduct,
    pub coaction: LinearMap,
}

fn right_over(m: &Semimodule, parent_base: &crate::algebra::Semiring) -> Result<()> {
    match m.right_base() {
        Some(b) if **b == *parent_base => Ok(()),
        Some(_) => Err(Error::BaseMismatch("M is a right semimodule over another semiring".into())),
        None => Err(Error::MissingAction("M must be a right semimodule".into())),
    }
}

impl SemiunitaryModule {
    pub fn new(parent: SemiunitalSemiring, m: Arc<Semimodule>, action: Vec<usize>) -> Result<Self> {
        right_over(&m, parent.base())?;
        let t = tensor(&m, &parent.carrier)?;
        let action = LinearMap::new(t.carrier.clone(), m, action)?;
        Ok(SemiunitaryModule { parent, tensor: t, action })
    }

    /// `ϱ` factored from a balanced action on pairs.
    pub fn from_pairs(
        parent: SemiunitalSemiring,
        m: Arc<Semimodule>,
        act: impl Fn(usize, usize) -> usize + Sync + Send,
    ) -> Result<Self> {
        right_over(&m, parent.base())?;
        let t = tensor(&m, &parent.carrier)?;
        let action = factor_into(&t, &m, act)?;
        Ok(SemiunitaryModule { parent, tensor: t, action })
    }

    /// `𝒜` acting on itself by `μ`.
    pub fn regular(parent: SemiunitalSemiring) -> Result<Self> {
        let t = parent.variety.tensor(&parent.carrier, &parent.carrier)?;
        let action = parent.mu.clone();
        Ok(SemiunitaryModule { parent, tensor: t, action })
    }

    pub fn module(&self) -> &Arc<Semimodule> {
        &self.tensor.left
    }
}

impl SemicounitaryComodule {
    pub fn new(parent: SemicounitalSemicoring, m: Arc<Semimodule>, coaction: Vec<usize>) -> Result<Self> {
        right_over(&m, parent.base())?;
        let t = tensor(&m, &parent.carrier)?;
        let coaction = LinearMap::new(m, t.carrier.clone(), coaction)?;
        Ok(SemicounitaryComodule { parent, tensor: t, coaction })
    }

    /// `𝒞` coacting on itself by `Δ`.
    pub fn regular(parent: SemicounitalSemicoring) -> Result<Self> {
        let t = parent.variety.tensor(&parent.carrier, &parent.carrier)?;
        let coaction = parent.delta.clone();
        Ok(SemicounitaryComodule { parent, tensor: t, coaction })
    }

    pub fn module(&self) -> &Arc<Semimodule> {
        &self.tensor.left
    }
}

fn strict_report(m: &Semimodule) -> LawReport {
    if is_cancellative(m) {
        LawReport::pass()
    } else {
        LawReport::fail("strict-firm-carrier", vec![], "M is not cancellative")
    }
}

/// `ϱ ∘ (ϱ ⊠ 𝒜) = ϱ ∘ (M ⊠ μ) ∘ γ` and `𝔠_M ∘ ϱ ∘ (M ⊠ η) = ϑ^r_M`.
pub fn check_semiunitary_module(x: &SemiunitaryModule, strict: bool) -> Result<LawReport> {
    let p = &x.parent;
    let v = &p.variety;
    let a = &p.carrier;
    let m = x.module();
    shape(
        same_object(&x.action.source, &x.tensor.carrier) && same_object(&x.action.target, m),
        "ϱ must map M ⊠ 𝒜 to M",
    )?;
    let r = x.action.check().scoped("action");
    if !r.passed {
        return Ok(r);
    }
    let t1 = &x.tensor;
    let t2 = tensor(&t1.carrier, a)?;
    let aa = v.tensor(a, a)?;
    let t3 = tensor(m, &aa.carrier)?;
    let gamma = associator_on(t1, &t2, &aa, &t3)?.forward;
    let idm = LinearMap::identity(m);
    let lhs = x.action.compose(&induced_map(&x.action, &LinearMap::identity(a), &t2, t1)?)?;
    let rhs = chain(&[gamma, induced_map(&idm, &p.mu, &t3, t1)?, x.action.clone()])?;
    let r = equal_maps("action-associativity", &lhs, &rhs);
    if !r.passed {
        return Ok(r);
    }
    let theta = theta_on(tensor(m, v.unit())?, Side::Right)?;
    let lhs = chain(&[
        induced_map(&idm, &p.eta, &theta.tensor, t1)?,
        x.action.clone(),
        theta.reflection.projection.clone(),
    ])?;
    let r = equal_maps("action-unit", &lhs, &theta.iso.forward);
    if !r.passed || !strict {
        return Ok(r);
    }
    Ok(strict_report(m))
}

/// `(ϱ ⊠ 𝒞) ∘ ϱ = γ⁻¹ ∘ (M ⊠ Δ) ∘ ϱ` and `ϑ^r_M ∘ (M ⊠ ε) ∘ ϱ = 𝔠_M`.
pub fn check_semicounitary_comodule(x: &SemicounitaryComodule, strict: bool) -> Result<LawReport> {
    let p = &x.parent;
    let v = &p.variety;
    let c = &p.carrier;
    let m = x.module();
    shape(
        same_object(&x.coaction.source, m) && same_object(&x.coaction.target, &x.tensor.carrier),
        "ϱ must map M to M ⊠ 𝒞",
    )?;
    let r = x.coaction.check().scoped("coaction");
    if !r.passed {
        return Ok(r);
    }
    let t1 = &x.tensor;
    let t2 = tensor(&t1.carrier, c)?;
    let cc = v.tensor(c, c)?;
    let t3 = tensor(m, &cc.carrier)?;
    let gamma_inv = associator_on(t1, &t2, &cc, &t3)?.backward;
    let idm = LinearMap::identity(m);
    let lhs = induced_map(&x.coaction, &LinearMap::identity(c), t1, &t2)?.compose(&x.coaction)?;
    let rhs = chain(&[x.coaction.clone(), induced_map(&idm, &p.delta, t1, &t3)?, gamma_inv])?;
    let r = equal_maps("coaction-coassociativity", &lhs, &rhs);
    if !r.passed {
        return Ok(r);
    }
    let theta = theta_on(tensor(m, v.unit())?, Side::Right)?;
    let lhs = chain(&[
        x.coaction.clone(),
        induced_map(&idm, &p.epsilon, t1, &theta.tensor)?,
        theta.iso.forward.clone(),
    ])?;
    let r = equal_maps("coaction-counit", &lhs, &theta.reflection.projection);
    if !r.passed || !strict {
        return Ok(r);
    }
    Ok(strict_report(m))
}
