//! Endofunctors and natural transformations on the variety, J-monads and
//! J-comonads with their (co)modules, and the passage between these and
//! semiunital semirings and semicounital semicorings.
//!
//! Functors are closures evaluated on demand, so components at objects such
//! as `M(M(X))` are available without listing them. Naturality and
//! functoriality are checked against the morphisms of a [`Universe`] only.

mod bridge;
mod induced;
mod laws;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use bridge::{
    jcomonad_to_semicomonoid, jmonad_to_semimonoid, roundtrip_jcomonad, roundtrip_jmonad,
    roundtrip_semicomonoid, roundtrip_semimonoid, semicomonoid_to_jcomonad, semimonoid_to_jmonad,
};
pub use induced::{induced_monad_from_adjunction, InducedMonad};
pub use laws::{
    check_jact, check_jcomonad, check_jmonad, cofree_jcomodule, free_jmodule, jstructure_universe,
    ActKind, JAct, JComonad, JMonad, JParent,
};

use crate::algebra::{same_object, LinearMap, Semimodule};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::tensor::Side;
use crate::variety::{equal_maps, Universe, Variety};

type ObjFn = dyn Fn(&Arc<Semimodule>) -> Result<Arc<Semimodule>> + Send + Sync;
type MorFn = dyn Fn(&LinearMap) -> Result<LinearMap> + Send + Sync;
type CompFn = dyn Fn(&Arc<Semimodule>) -> Result<LinearMap> + Send + Sync;
type Memo = Mutex<HashMap<usize, (Arc<Semimodule>, Arc<Semimodule>)>>;

fn key(x: &Arc<Semimodule>) -> usize {
    Arc::as_ptr(x) as *const () as usize
}

/// An endofunctor given by its action on objects and on maps. Object images
/// are memoized by identity, so `F(X)` is the same carrier on every call.
#[derive(Clone)]
pub struct Functor {
    name: String,
    obj: Arc<ObjFn>,
    mor: Arc<MorFn>,
    memo: Arc<Memo>,
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functor({})", self.name)
    }
}

impl Functor {
    pub fn new(
        name: impl Into<String>,
        obj: impl Fn(&Arc<Semimodule>) -> Result<Arc<Semimodule>> + Send + Sync + 'static,
        mor: impl Fn(&LinearMap) -> Result<LinearMap> + Send + Sync + 'static,
    ) -> Self {
        Functor {
            name: name.into(),
            obj: Arc::new(obj),
            mor: Arc::new(mor),
            memo: Arc::default(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn obj(&self, x: &Arc<Semimodule>) -> Result<Arc<Semimodule>> {
        if let Some((_, y)) = self.memo.lock().unwrap().get(&key(x)) {
            return Ok(y.clone());
        }
        let y = (self.obj)(x)?;
        Ok(self
            .memo
            .lock()
            .unwrap()
            .entry(key(x))
            .or_insert((x.clone(), y))
            .1
            .clone())
    }

    /// `F(f): F(X) → F(Y)`.
    pub fn mor(&self, f: &LinearMap) -> Result<LinearMap> {
        let g = (self.mor)(f)?;
        let (fx, fy) = (self.obj(&f.source)?, self.obj(&f.target)?);
        if !same_object(&g.source, &fx) || !same_object(&g.target, &fy) {
            return Err(Error::ShapeMismatch(format!("{} sends a map outside F(X) → F(Y)", self.name)));
        }
        Ok(LinearMap { source: fx, target: fy, table: g.table })
    }

    pub fn identity() -> Self {
        Functor::new("Id", |x| Ok(x.clone()), |f| Ok(f.clone()))
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &Functor, inner: &Functor) -> Self {
        let (o1, i1) = (outer.clone(), inner.clone());
        let (o2, i2) = (outer.clone(), inner.clone());
        Functor::new(
            format!("{}{}", outer.name, inner.name),
            move |x| o1.obj(&i1.obj(x)?),
            move |f| o2.mor(&i2.mor(f)?),
        )
    }

    /// `− • A` or `A • −`.
    pub fn tensor_with(v: &Arc<Variety>, a: &Arc<Semimodule>, side: Side, name: &str) -> Self {
        let (v1, a1, v2, a2) = (v.clone(), a.clone(), v.clone(), a.clone());
        match side {
            Side::Right => Functor::new(name, move |x| v1.obj(x, &a1), move |f| v2.map_left(f, &a2)),
            Side::Left => Functor::new(name, move |x| v1.obj(&a1, x), move |f| v2.map_right(&a2, f)),
        }
    }

    /// `J = 𝐈 • −`.
    pub fn j(v: &Arc<Variety>) -> Self {
        Functor::tensor_with(v, v.unit(), Side::Left, "J")
    }

    /// Identities and the listed composable pairs are preserved.
    pub fn check(&self, u: &Universe) -> Result<LawReport> {
        for (i, x) in u.objects.iter().enumerate() {
            let r = equal_maps("functor-identity", &self.mor(&LinearMap::identity(x))?, &LinearMap::identity(&self.obj(x)?));
            if !r.passed {
                return Ok(r.scoped(&format!("{}/object-{i}", self.name)));
            }
        }
        for (i, f) in u.morphisms.iter().enumerate() {
            let ff = self.mor(f)?;
            for (j, g) in u.morphisms.iter().enumerate() {
                if !same_object(&g.source, &f.target) {
                    continue;
                }
                let lhs = self.mor(&g.compose(f)?)?;
                let rhs = self.mor(g)?.compose(&ff)?;
                let r = equal_maps("functor-composition", &lhs, &rhs);
                if !r.passed {
                    let mut r = r.scoped(&self.name);
                    r.witness = vec![i, j];
                    return Ok(r);
                }
            }
        }
        Ok(LawReport::pass())
    }
}

/// A family of maps `α_X: F(X) → G(X)`.
#[derive(Clone)]
pub struct NatTrans {
    name: String,
    pub source: Functor,
    pub target: Functor,
    component: Arc<CompFn>,
}

impl fmt::Debug for NatTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NatTrans({}: {} → {})", self.name, self.source.name, self.target.name)
    }
}

impl NatTrans {
    pub fn new(
        name: impl Into<String>,
        source: Functor,
        target: Functor,
        component: impl Fn(&Arc<Semimodule>) -> Result<LinearMap> + Send + Sync + 'static,
    ) -> Self {
        NatTrans {
            name: name.into(),
            source,
            target,
            component: Arc::new(component),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `α_X`, checked to run from `F(X)` to `G(X)`.
    pub fn at(&self, x: &Arc<Semimodule>) -> Result<LinearMap> {
        let a = (self.component)(x)?;
        let (fx, gx) = (self.source.obj(x)?, self.target.obj(x)?);
        if !same_object(&a.source, &fx) || !same_object(&a.target, &gx) {
            return Err(Error::ShapeMismatch(format!(
                "{}: component does not run from {}(X) to {}(X)",
                self.name, self.source.name, self.target.name
            )));
        }
        Ok(LinearMap { source: fx, target: gx, table: a.table })
    }

    pub fn identity(f: &Functor) -> Self {
        let g = f.clone();
        NatTrans::new(format!("id_{}", f.name), f.clone(), f.clone(), move |x| {
            Ok(LinearMap::identity(&g.obj(x)?))
        })
    }

    /// All components zero; used for fault injection.
    pub fn zero(source: &Functor, target: &Functor) -> Self {
        let (f, g) = (source.clone(), target.clone());
        NatTrans::new("0", source.clone(), target.clone(), move |x| {
            Ok(LinearMap::zero(&f.obj(x)?, &g.obj(x)?))
        })
    }

    /// `outer ∘ inner`, componentwise.
    pub fn vcompose(outer: &NatTrans, inner: &NatTrans) -> Self {
        let (o, i) = (outer.clone(), inner.clone());
        NatTrans::new(
            format!("{}∘{}", outer.name, inner.name),
            inner.source.clone(),
            outer.target.clone(),
            move |x| o.at(x)?.compose(&i.at(x)?),
        )
    }

    /// `G(f) ∘ α_X = α_Y ∘ F(f)` for every listed `f: X → Y`.
    pub fn check_naturality(&self, u: &Universe) -> Result<LawReport> {
        for (i, f) in u.morphisms.iter().enumerate() {
            let lhs = self.target.mor(f)?.compose(&self.at(&f.source)?)?;
            let rhs = self.at(&f.target)?.compose(&self.source.mor(f)?)?;
            let r = equal_maps("naturality", &lhs, &rhs);
            if !r.passed {
                let mut r = r.scoped(&self.name);
                r.witness.insert(0, i);
                return Ok(r);
            }
        }
        Ok(LawReport::pass())
    }
}

/// `φ_{G(X)} ∘ F′(ψ_X)` and `G′(ψ_X) ∘ φ_{F(X)}` for `φ: F′ → G′`, `ψ: F → G`.
fn godement_both(phi: &NatTrans, psi: &NatTrans, x: &Arc<Semimodule>) -> Result<(LinearMap, LinearMap)> {
    let psi_x = psi.at(x)?;
    let first = phi.at(&psi.target.obj(x)?)?.compose(&phi.source.mor(&psi_x)?)?;
    let second = phi.target.mor(&psi_x)?.compose(&phi.at(&psi.source.obj(x)?)?)?;
    Ok((first, second))
}

/// The Godement product `φψ: F′F → G′G`. Both formulas are evaluated on
/// every object of `u` and must agree; later components recheck this.
pub fn godement(phi: &NatTrans, psi: &NatTrans, u: &Universe) -> Result<NatTrans> {
    let check = |x: &Arc<Semimodule>| -> Result<LinearMap> {
        let (a, b) = godement_both(phi, psi, x)?;
        if a.table != b.table || !same_object(&a.source, &b.source) || !same_object(&a.target, &b.target) {
            return Err(Error::FormulaDisagreement(format!(
                "the two formulas for {}{} differ",
                phi.name, psi.name
            )));
        }
        Ok(a)
    };
    for x in &u.objects {
        check(x)?;
    }
    let (p, q) = (phi.clone(), psi.clone());
    Ok(NatTrans::new(
        format!("{}{}", phi.name, psi.name),
        Functor::compose(&phi.source, &psi.source),
        Functor::compose(&phi.target, &psi.target),
        move |x| {
            let (a, b) = godement_both(&p, &q, x)?;
            if a.table != b.table {
                return Err(Error::FormulaDisagreement(format!("the two formulas for {}{} differ", p.name, q.name)));
            }
            Ok(a)
        },
    ))
}

/// `(θ ∘ φ)(δ ∘ ψ) = (θδ) ∘ (φψ)` on every object of `u`, for
/// `ψ: F → G`, `δ: G → H`, `φ: F′ → G′`, `θ: G′ → H′`.
pub fn interchange_check(
    theta: &NatTrans,
    phi: &NatTrans,
    delta: &NatTrans,
    psi: &NatTrans,
    u: &Universe,
) -> Result<LawReport> {
    let lhs = godement(&NatTrans::vcompose(theta, phi), &NatTrans::vcompose(delta, psi), u)?;
    let rhs = NatTrans::vcompose(&godement(theta, delta, u)?, &godement(phi, psi, u)?);
    for (i, x) in u.objects.iter().enumerate() {
        let r = equal_maps("interchange", &lhs.at(x)?, &rhs.at(x)?);
        if !r.passed {
            return Ok(r.scoped(&format!("object-{i}")));
        }
    }
    Ok(LawReport::pass())
}
