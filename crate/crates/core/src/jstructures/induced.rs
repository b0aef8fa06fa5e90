use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{check_jmonad, Functor, JMonad, NatTrans};
use crate::algebra::{hom_module, HomModule, LinearMap, Semimodule};
use crate::congruence::cancellative_reflection;
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::tensor::{factor_into, induced_map, tensor, TensorProduct};
use crate::variety::Universe;

/// `RL = Hom_T(N, − ⊠_S N)` on cancellative right `S`-semimodules, as a
/// J-monad with `J = Id`, `ω = id` and `ν` the unit of the adjunction, so
/// that [`check_jmonad`] checks the classical monad laws.
#[derive(Clone, Debug)]
pub struct InducedMonad {
    pub n: Arc<Semimodule>,
    /// The cancellative reflections of the given objects and maps.
    pub universe: Universe,
    pub monad: JMonad,
    pub report: LawReport,
}

struct RlData {
    /// `X ⊠ N`.
    t: TensorProduct,
    /// `Hom_T(N, X ⊠ N)`.
    hom: HomModule,
}

type RlCache = HashMap<usize, (Arc<Semimodule>, Arc<RlData>)>;

struct Rl {
    n: Arc<Semimodule>,
    cap: usize,
    cache: Mutex<RlCache>,
}

impl Rl {
    fn data(&self, x: &Arc<Semimodule>) -> Result<Arc<RlData>> {
        let k = Arc::as_ptr(x) as *const () as usize;
        if let Some((_, d)) = self.cache.lock().unwrap().get(&k) {
            return Ok(d.clone());
        }
        let t = tensor(x, &self.n)?;
        let hom = hom_module(&self.n, &t.carrier, self.cap)?;
        let d = Arc::new(RlData { t, hom });
        Ok(self.cache.lock().unwrap().entry(k).or_insert((x.clone(), d)).1.clone())
    }

    fn lookup(d: &RlData, h: Vec<usize>) -> Result<usize> {
        d.hom
            .index_of(&h)
            .ok_or_else(|| Error::FormulaDisagreement("a composite left the hom-set".into()))
    }

    fn obj(&self, x: &Arc<Semimodule>) -> Result<Arc<Semimodule>> {
        Ok(self.data(x)?.hom.module.clone())
    }

    /// `h ↦ (f ⊠ N) ∘ h`.
    fn mor(&self, f: &LinearMap) -> Result<LinearMap> {
        let (src, dst) = (self.data(&f.source)?, self.data(&f.target)?);
        let fn_ = induced_map(f, &LinearMap::identity(&self.n), &src.t, &dst.t)?;
        let table = src
            .hom
            .maps
            .iter()
            .map(|h| Rl::lookup(&dst, h.iter().map(|&y| fn_.apply(y)).collect()))
            .collect::<Result<Vec<_>>>()?;
        LinearMap::new(src.hom.module.clone(), dst.hom.module.clone(), table)
    }

    /// `x ↦ (n ↦ τ(x, n))`.
    fn unit(&self, x: &Arc<Semimodule>) -> Result<LinearMap> {
        let d = self.data(x)?;
        let table = (0..x.size())
            .map(|m| Rl::lookup(&d, (0..self.n.size()).map(|n| d.t.tau(m, n)).collect()))
            .collect::<Result<Vec<_>>>()?;
        LinearMap::new(x.clone(), d.hom.module.clone(), table)
    }

    /// `R(ε_{L(X)})`: `F ↦ ε ∘ F` with `ε(h ⊠ n) = h(n)`.
    fn mu(&self, x: &Arc<Semimodule>) -> Result<LinearMap> {
        let dx = self.data(x)?;
        let dy = self.data(&dx.hom.module)?;
        let eps = factor_into(&dy.t, &dx.t.carrier, |h, n| dx.hom.maps[h][n])?;
        let table = dy
            .hom
            .maps
            .iter()
            .map(|f| Rl::lookup(&dx, f.iter().map(|&y| eps.apply(y)).collect()))
            .collect::<Result<Vec<_>>>()?;
        LinearMap::new(dy.hom.module.clone(), dx.hom.module.clone(), table)
    }
}

/// The right `S`-semimodule underlying `x`, reflected.
fn reflect_right(x: &Arc<Semimodule>) -> (Arc<Semimodule>, crate::congruence::Reflection) {
    let r = Arc::new(x.as_ref().clone().with_left(None));
    let refl = cancellative_reflection(&r);
    (refl.reflected.clone(), refl)
}

/// Builds `RL` for `L = − ⊠ N` and `R = Hom_T(N, −)` on the cancellative
/// reflections of the objects and maps of `u`, and checks the monad laws
/// there. Hom-sets above `cap` are an error.
pub fn induced_monad_from_adjunction(n: &Arc<Semimodule>, u: &Universe, cap: usize) -> Result<InducedMonad> {
    if n.left().is_none() || n.right().is_none() {
        return Err(Error::MissingAction("N must be a bisemimodule".into()));
    }
    let reflected: Vec<_> = u.objects.iter().map(reflect_right).collect();
    let objects: Vec<Arc<Semimodule>> = reflected.iter().map(|(c, _)| c.clone()).collect();
    let mut morphisms = Vec::new();
    for f in &u.morphisms {
        let (Some(i), Some(j)) = (u.index_of(&f.source), u.index_of(&f.target)) else {
            continue;
        };
        let (ref src, ref rs) = reflected[i];
        let (ref dst, ref rd) = reflected[j];
        let table = rs.section.iter().map(|&x| rd.projection.apply(f.apply(x))).collect();
        morphisms.push(LinearMap::new(src.clone(), dst.clone(), table)?);
    }
    let universe = Universe::with_morphisms(objects, morphisms);
    let rl = Arc::new(Rl {
        n: n.clone(),
        cap,
        cache: Mutex::default(),
    });
    let (r1, r2, r3, r4) = (rl.clone(), rl.clone(), rl.clone(), rl.clone());
    let m = Functor::new("RL", move |x| r1.obj(x), move |f| r2.mor(f));
    let id = Functor::identity();
    let monad = JMonad {
        mu: NatTrans::new("μ", Functor::compose(&m, &m), m.clone(), move |x| r3.mu(x)),
        nu: NatTrans::new("η", id.clone(), m.clone(), move |x| r4.unit(x)),
        omega: NatTrans::identity(&id),
        j: id,
        m,
    };
    let report = check_jmonad(&monad, &universe)?;
    Ok(InducedMonad {
        n: n.clone(),
        universe,
        monad,
        report,
    })
}
