//! The semiunital semimonoidal variety of `(A, A)`-bisemimodules under `⊠_A`
//! with semiunit `𝐈 = A`.
//!
//! Every multi-fold tensor is parenthesized explicitly and all equations are
//! compared as tables after inserting the associators by hand.

mod adjunction;
mod coherence;
mod dual;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use adjunction::{
    naturality_in_first, naturality_in_last, tensor_hom_adjunction, TensorHom,
};
pub use coherence::{pentagon_check, Universe};
pub use dual::DualityCandidate;

use crate::algebra::{same_object, LinearMap, Semimodule, Semiring};
use crate::error::{Error, Result};
use crate::report::{compare_tables, LawReport};
use crate::tensor::{factor_into, induced_map, tensor, theta_on, IsoPair, Side, TensorProduct};

fn key(x: &Arc<Semimodule>) -> usize {
    Arc::as_ptr(x) as *const () as usize
}

type AssociatorCache = HashMap<(usize, usize, usize), (Vec<Arc<Semimodule>>, IsoPair)>;

/// `(A, A)`-bisemimodules over a fixed `A`, with cached tensors and
/// structure maps. Caches are keyed by object identity and keep the keyed
/// objects alive, so repeated calls hand back the same carriers.
#[derive(Debug)]
pub struct Variety {
    base: Arc<Semiring>,
    unit: Arc<Semimodule>,
    tensors: Mutex<HashMap<(usize, usize), TensorProduct>>,
    associators: Mutex<AssociatorCache>,
    ells: Mutex<HashMap<usize, (Arc<Semimodule>, IsoPair)>>,
}

/// `ω_X`, `ℓ_X` and `℘_X = ℓ_X⁻¹` for one object.
#[derive(Clone, Debug)]
pub struct SemiunitComponents {
    pub object: Arc<Semimodule>,
    pub omega: LinearMap,
    pub ell: IsoPair,
}

impl SemiunitComponents {
    pub fn wp(&self) -> &LinearMap {
        &self.ell.backward
    }

    pub fn check(&self) -> LawReport {
        self.omega
            .check()
            .scoped("omega")
            .and_then(|| self.ell.check().scoped("ell"))
    }
}

impl Variety {
    pub fn new(base: Arc<Semiring>) -> Self {
        let unit = Arc::new(Semimodule::regular(&base));
        Variety {
            base,
            unit,
            tensors: Mutex::default(),
            associators: Mutex::default(),
            ells: Mutex::default(),
        }
    }

    pub fn base(&self) -> &Arc<Semiring> {
        &self.base
    }

    /// `𝐈`, the regular bimodule of `A`.
    pub fn unit(&self) -> &Arc<Semimodule> {
        &self.unit
    }

    pub fn zero_object(&self) -> Arc<Semimodule> {
        Arc::new(Semimodule::zero(&self.base))
    }

    pub fn require(&self, x: &Semimodule) -> Result<()> {
        if x.is_bimodule_over(&self.base) {
            Ok(())
        } else {
            Err(Error::BaseMismatch(
                "object is not a bisemimodule over the base of the variety".into(),
            ))
        }
    }

    /// `X ⊠ Y` with its `τ`.
    pub fn tensor(&self, x: &Arc<Semimodule>, y: &Arc<Semimodule>) -> Result<TensorProduct> {
        let k = (key(x), key(y));
        if let Some(t) = self.tensors.lock().unwrap().get(&k) {
            return Ok(t.clone());
        }
        self.require(x)?;
        self.require(y)?;
        let t = tensor(x, y)?;
        Ok(self.tensors.lock().unwrap().entry(k).or_insert(t).clone())
    }

    /// The carrier of `X • Y`.
    pub fn obj(&self, x: &Arc<Semimodule>, y: &Arc<Semimodule>) -> Result<Arc<Semimodule>> {
        Ok(self.tensor(x, y)?.carrier)
    }

    /// `f • g`.
    pub fn tensor_maps(&self, f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
        let src = self.tensor(&f.source, &g.source)?;
        let dst = self.tensor(&f.target, &g.target)?;
        induced_map(f, g, &src, &dst)
    }

    /// `f • Y`.
    pub fn map_left(&self, f: &LinearMap, y: &Arc<Semimodule>) -> Result<LinearMap> {
        self.tensor_maps(f, &LinearMap::identity(y))
    }

    /// `X • g`.
    pub fn map_right(&self, x: &Arc<Semimodule>, g: &LinearMap) -> Result<LinearMap> {
        self.tensor_maps(&LinearMap::identity(x), g)
    }

    /// `γ_{X,Y,Z}: (X • Y) • Z → X • (Y • Z)` with its inverse.
    pub fn associator(
        &self,
        x: &Arc<Semimodule>,
        y: &Arc<Semimodule>,
        z: &Arc<Semimodule>,
    ) -> Result<IsoPair> {
        let k = (key(x), key(y), key(z));
        if let Some((_, iso)) = self.associators.lock().unwrap().get(&k) {
            return Ok(iso.clone());
        }
        let xy = self.tensor(x, y)?;
        let xy_z = self.tensor(&xy.carrier, z)?;
        let yz = self.tensor(y, z)?;
        let x_yz = self.tensor(x, &yz.carrier)?;
        let iso = crate::tensor::associator_on(&xy, &xy_z, &yz, &x_yz)?;
        let keep = vec![x.clone(), y.clone(), z.clone()];
        Ok(self
            .associators
            .lock()
            .unwrap()
            .entry(k)
            .or_insert((keep, iso))
            .1
            .clone())
    }

    /// `ω_X: X → 𝐈 • X`, `x ↦ τ(1, x)`.
    pub fn omega(&self, x: &Arc<Semimodule>) -> Result<LinearMap> {
        let t = self.tensor(&self.unit, x)?;
        LinearMap::from_fn(x.clone(), t.carrier.clone(), |m| t.tau(1, m))
    }

    /// `ℓ_X: 𝐈 • X → X • 𝐈`, `[a ⊠ x] ↦ [ax ⊠ 1]`, with `℘_X` as backward map.
    pub fn ell(&self, x: &Arc<Semimodule>) -> Result<IsoPair> {
        if let Some((_, iso)) = self.ells.lock().unwrap().get(&key(x)) {
            return Ok(iso.clone());
        }
        let ix = self.tensor(&self.unit, x)?;
        let xi = self.tensor(x, &self.unit)?;
        let forward = factor_into(&ix, &xi.carrier, |a, m| xi.tau(x.act_left(a, m), 1))?;
        let backward = factor_into(&xi, &ix.carrier, |m, a| ix.tau(1, x.act_right(m, a)))?;
        let iso = IsoPair { forward, backward };
        Ok(self
            .ells
            .lock()
            .unwrap()
            .entry(key(x))
            .or_insert((x.clone(), iso))
            .1
            .clone())
    }

    /// Replaces the cached `ℓ_X`; later checks use the replacement. Meant
    /// for fault injection.
    pub fn replace_ell(&self, x: &Arc<Semimodule>, iso: IsoPair) {
        self.ells.lock().unwrap().insert(key(x), (x.clone(), iso));
    }

    pub fn wp(&self, x: &Arc<Semimodule>) -> Result<LinearMap> {
        Ok(self.ell(x)?.backward)
    }

    /// Whether `ω_X` is bijective.
    pub fn is_firm(&self, x: &Arc<Semimodule>) -> Result<bool> {
        Ok(self.omega(x)?.is_bijective())
    }

    /// `λ_X = ω_X⁻¹`, defined for firm `X`.
    pub fn lambda(&self, x: &Arc<Semimodule>) -> Result<LinearMap> {
        self.omega(x)?
            .inverse()
            .ok_or_else(|| Error::NotFirm(format!("ω is not bijective on an object of size {}", x.size())))
    }

    /// `ω_X`, `ℓ_X`, `℘_X`, cross-checked against `ϑ`: `ω_X` must equal
    /// `ϑ^l⁻¹ ∘ 𝔠_X` and `ℓ_X` must equal `ϑ^r⁻¹ ∘ ϑ^l`.
    pub fn semiunit_components(&self, x: &Arc<Semimodule>) -> Result<SemiunitComponents> {
        self.require(x)?;
        let omega = self.omega(x)?;
        let ell = self.ell(x)?;
        let tl = theta_on(self.tensor(&self.unit, x)?, Side::Left)?;
        let tr = theta_on(self.tensor(x, &self.unit)?, Side::Right)?;
        let via_theta = tl.iso.backward.compose(&tl.reflection.projection)?;
        if via_theta.table != omega.table {
            return Err(Error::FormulaDisagreement("ω differs from ϑ^l⁻¹ ∘ 𝔠".into()));
        }
        let via_theta = tr.iso.backward.compose(&tl.iso.forward)?;
        if via_theta.table != ell.forward.table {
            return Err(Error::FormulaDisagreement("ℓ differs from ϑ^r⁻¹ ∘ ϑ^l".into()));
        }
        Ok(SemiunitComponents {
            object: x.clone(),
            omega,
            ell,
        })
    }
}

/// Composes a chain of maps, innermost first.
pub(crate) fn chain(maps: &[LinearMap]) -> Result<LinearMap> {
    let (first, rest) = maps.split_first().expect("nonempty chain");
    rest.iter().try_fold(first.clone(), |acc, f| f.compose(&acc))
}

pub(crate) fn equal_maps(law: &str, lhs: &LinearMap, rhs: &LinearMap) -> LawReport {
    if !same_object(&lhs.source, &rhs.source) || !same_object(&lhs.target, &rhs.target) {
        return LawReport::fail(law, vec![], "the two sides have different source or target");
    }
    compare_tables(law, &lhs.table, &rhs.table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{boolean, power, truncated_nat, zmod};
    use crate::congruence::is_cancellative;

    #[test]
    fn omega_on_regular_z2_is_bijective() {
        let v = Variety::new(zmod(2).unwrap());
        let i = v.unit().clone();
        assert!(v.is_firm(&i).unwrap());
        let c = v.semiunit_components(&i).unwrap();
        assert!(c.check().passed);
        assert!(c.omega.is_bijective());
    }

    #[test]
    fn omega_on_boolean_collapses() {
        let v = Variety::new(boolean());
        let i = v.unit().clone();
        let w = v.omega(&i).unwrap();
        assert_eq!(w.target.size(), 1);
        assert!(!v.is_firm(&i).unwrap());
        assert!(v.semiunit_components(&i).unwrap().check().passed);
    }

    #[test]
    fn firmness_matches_cancellativity() {
        for s in [zmod(2).unwrap(), zmod(4).unwrap(), boolean(), truncated_nat(2).unwrap()] {
            let v = Variety::new(s.clone());
            for x in [v.unit().clone(), Arc::new(power(&s, 2).unwrap()), v.zero_object()] {
                assert_eq!(v.is_firm(&x).unwrap(), is_cancellative(&x));
            }
        }
    }

    #[test]
    fn power_of_z2_is_firm() {
        let s = zmod(2).unwrap();
        let v = Variety::new(s.clone());
        let x = Arc::new(power(&s, 2).unwrap());
        assert!(v.omega(&x).unwrap().is_bijective());
        assert!(v.lambda(&x).is_ok());
    }

    #[test]
    fn lambda_refuses_non_firm() {
        let v = Variety::new(truncated_nat(2).unwrap());
        let i = v.unit().clone();
        assert!(matches!(v.lambda(&i), Err(Error::NotFirm(_))));
    }

    #[test]
    fn ell_of_unit_is_self_inverse() {
        for s in [zmod(2).unwrap(), zmod(3).unwrap(), boolean()] {
            let v = Variety::new(s);
            let i = v.unit().clone();
            let e = v.ell(&i).unwrap();
            assert_eq!(e.forward.table, e.backward.table);
        }
    }

    #[test]
    fn tensor_cache_returns_the_same_carrier() {
        let v = Variety::new(zmod(2).unwrap());
        let i = v.unit().clone();
        let a = v.obj(&i, &i).unwrap();
        let b = v.obj(&i, &i).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
