use std::sync::Arc;

use super::{chain, equal_maps, Variety};
use crate::algebra::fixtures::power;
use crate::algebra::{hom_sample, same_object, validate_semimodule, LinearMap, Semimodule, Sides};
use crate::error::Result;
use crate::report::{first_failure, LawReport};

/// A finite list of objects and morphisms between them. Naturality is
/// always checked against the listed morphisms only.
#[derive(Clone, Debug, Default)]
pub struct Universe {
    pub objects: Vec<Arc<Semimodule>>,
    pub morphisms: Vec<LinearMap>,
    /// Objects left out and why.
    pub excluded: Vec<String>,
}

impl Universe {
    /// The objects with their identities.
    pub fn new(objects: Vec<Arc<Semimodule>>) -> Self {
        let morphisms = objects.iter().map(LinearMap::identity).collect();
        Universe {
            objects,
            morphisms,
            excluded: Vec::new(),
        }
    }

    pub fn with_morphisms(objects: Vec<Arc<Semimodule>>, morphisms: Vec<LinearMap>) -> Self {
        let mut u = Universe::new(objects);
        for f in morphisms {
            u.push_morphism(f);
        }
        u
    }

    fn push_morphism(&mut self, f: LinearMap) {
        let dup = self.morphisms.iter().any(|g| {
            g.table == f.table && same_object(&g.source, &f.source) && same_object(&g.target, &f.target)
        });
        if !dup {
            self.morphisms.push(f);
        }
    }

    /// Adds, for every ordered pair of objects, up to `per_pair` nonzero
    /// maps preserving the actions the two objects share, taken in
    /// depth-first order.
    pub fn add_homs(&mut self, per_pair: usize) -> Result<()> {
        let objects = self.objects.clone();
        for x in &objects {
            for y in &objects {
                let sides = Sides::common(x, y);
                for t in hom_sample(x, y, sides, per_pair + 1)? {
                    if t.iter().all(|&v| v == 0) {
                        continue;
                    }
                    self.push_morphism(LinearMap::new(x.clone(), y.clone(), t)?);
                }
            }
        }
        Ok(())
    }

    pub fn index_of(&self, x: &Arc<Semimodule>) -> Option<usize> {
        self.objects
            .iter()
            .position(|o| Arc::ptr_eq(o, x))
            .or_else(|| self.objects.iter().position(|o| same_object(o, x)))
    }

    /// Objects validate, morphisms are linear between listed objects, and
    /// every identity is listed.
    pub fn check(&self) -> LawReport {
        for (i, x) in self.objects.iter().enumerate() {
            let r = validate_semimodule(x).scoped(&format!("object-{i}"));
            if !r.passed {
                return r;
            }
            let has_id = self.morphisms.iter().any(|f| f.is_identity() && same_object(&f.source, x));
            if !has_id {
                return LawReport::fail("identity-missing", vec![i], format!("object {i} has no identity"));
            }
        }
        for (k, f) in self.morphisms.iter().enumerate() {
            if self.index_of(&f.source).is_none() || self.index_of(&f.target).is_none() {
                return LawReport::fail("morphism-endpoints", vec![k], format!("morphism {k} leaves the universe"));
            }
            let r = f.check().scoped(&format!("morphism-{k}"));
            if !r.passed {
                return r;
            }
        }
        LawReport::pass()
    }
}

impl Variety {
    /// `{𝐈, 𝐈 • 𝐈, A², 0}` with up to `per_pair` nonzero bimodule maps for
    /// each ordered pair, plus identities.
    pub fn default_universe(&self, per_pair: usize) -> Result<Universe> {
        let i = self.unit().clone();
        let ii = self.obj(&i, &i)?;
        let p = Arc::new(power(self.base(), 2)?);
        let mut u = Universe::new(vec![i, ii, p, self.zero_object()]);
        u.add_homs(per_pair)?;
        Ok(u)
    }

    /// `γ_{X,Y,𝐈} ∘ ℓ_{X•Y} ∘ γ_{𝐈,X,Y} = (X • ℓ_Y) ∘ γ_{X,𝐈,Y} ∘ (ℓ_X • Y)`.
    pub fn hexagon(&self, x: &Arc<Semimodule>, y: &Arc<Semimodule>) -> Result<LawReport> {
        let i = self.unit();
        let xy = self.obj(x, y)?;
        let lhs = chain(&[
            self.associator(i, x, y)?.forward,
            self.ell(&xy)?.forward,
            self.associator(x, y, i)?.forward,
        ])?;
        let rhs = chain(&[
            self.map_left(&self.ell(x)?.forward, y)?,
            self.associator(x, i, y)?.forward,
            self.map_right(x, &self.ell(y)?.forward)?,
        ])?;
        Ok(equal_maps("hexagon", &lhs, &rhs))
    }

    /// `γ_{𝐈,X,Y} ∘ (ω_X • Y) = ω_{X•Y} = γ_{𝐈,X,Y} ∘ (℘_X • Y) ∘ γ⁻¹_{X,𝐈,Y} ∘ (X • ω_Y)`.
    pub fn omega_square(&self, x: &Arc<Semimodule>, y: &Arc<Semimodule>) -> Result<LawReport> {
        let i = self.unit();
        let xy = self.obj(x, y)?;
        let omega_xy = self.omega(&xy)?;
        let gamma = self.associator(i, x, y)?.forward;
        let left = chain(&[self.map_left(&self.omega(x)?, y)?, gamma.clone()])?;
        let right = chain(&[
            self.map_right(x, &self.omega(y)?)?,
            self.associator(x, i, y)?.backward,
            self.map_left(&self.wp(x)?, y)?,
            gamma,
        ])?;
        Ok(equal_maps("omega-square-left", &left, &omega_xy)
            .and_then(|| equal_maps("omega-square-right", &right, &omega_xy)))
    }

    /// `ω_Y ∘ f = (𝐈 • f) ∘ ω_X` and `ℓ_Y ∘ (𝐈 • f) = (f • 𝐈) ∘ ℓ_X`.
    pub fn semiunit_naturality(&self, f: &LinearMap) -> Result<LawReport> {
        let i = self.unit();
        let if_ = self.map_right(i, f)?;
        let fi = self.map_left(f, i)?;
        let lhs = self.omega(&f.target)?.compose(f)?;
        let rhs = if_.compose(&self.omega(&f.source)?)?;
        let r = equal_maps("omega-natural", &lhs, &rhs);
        if !r.passed {
            return Ok(r);
        }
        let lhs = self.ell(&f.target)?.forward.compose(&if_)?;
        let rhs = fi.compose(&self.ell(&f.source)?.forward)?;
        Ok(equal_maps("ell-natural", &lhs, &rhs))
    }

    /// Naturality of `γ` in the argument at `slot` for the morphism `f`,
    /// the other two arguments fixed to `p` and `q` in order.
    pub fn associator_naturality(
        &self,
        f: &LinearMap,
        slot: usize,
        p: &Arc<Semimodule>,
        q: &Arc<Semimodule>,
    ) -> Result<LawReport> {
        let id_p = LinearMap::identity(p);
        let id_q = LinearMap::identity(q);
        let (a, b, c) = match slot {
            0 => (f.clone(), id_p, id_q),
            1 => (id_p, f.clone(), id_q),
            _ => (id_p, id_q, f.clone()),
        };
        let ab_c = self.tensor_maps(&self.tensor_maps(&a, &b)?, &c)?;
        let a_bc = self.tensor_maps(&a, &self.tensor_maps(&b, &c)?)?;
        let src = self.associator(&a.source, &b.source, &c.source)?.forward;
        let dst = self.associator(&a.target, &b.target, &c.target)?.forward;
        let lhs = dst.compose(&ab_c)?;
        let rhs = a_bc.compose(&src)?;
        Ok(equal_maps("associator-natural", &lhs, &rhs))
    }

    /// The semiunit diagrams on all pairs of objects, `ℓ_𝐈 = ℘_𝐈`, the
    /// `IsoPair` laws, naturality of `ω` and `ℓ` against every listed
    /// morphism, naturality of `γ` in each argument against every listed
    /// non-identity morphism, and the pentagon on all quadruples of objects
    /// no larger than `𝐈`.
    pub fn coherence_check(&self, u: &Universe) -> Result<LawReport> {
        let r = u.check().scoped("universe");
        if !r.passed {
            return Ok(r);
        }
        let i = self.unit();
        let n = u.objects.len();
        let e = self.ell(i)?;
        let r = equal_maps("ell-unit", &e.forward, &e.backward);
        if !r.passed {
            return Ok(r);
        }
        for (k, x) in u.objects.iter().enumerate() {
            let r = self.semiunit_components(x)?.check().scoped(&format!("object-{k}"));
            if !r.passed {
                return Ok(r);
            }
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let reports = crate::par::map_slice(&pairs, |&(a, b)| -> Result<LawReport> {
            let (x, y) = (&u.objects[a], &u.objects[b]);
            let r = self.hexagon(x, y)?;
            let r = if r.passed { self.omega_square(x, y)? } else { r };
            Ok(with_objects(r, &[a, b]))
        });
        let r = first_failure(reports.into_iter().collect::<Result<Vec<_>>>()?);
        if !r.passed {
            return Ok(r);
        }
        let reports = crate::par::map_slice(&u.morphisms, |f| self.semiunit_naturality(f));
        for (k, r) in reports.into_iter().enumerate() {
            let r = r?;
            if !r.passed {
                return Ok(r.scoped(&format!("morphism-{k}")));
            }
        }
        let mut jobs = Vec::new();
        for (k, f) in u.morphisms.iter().enumerate() {
            if f.is_identity() {
                continue;
            }
            for slot in 0..3 {
                for &(a, b) in &pairs {
                    jobs.push((k, slot, a, b));
                }
            }
        }
        let reports = crate::par::map_slice(&jobs, |&(k, slot, a, b)| {
            self.associator_naturality(&u.morphisms[k], slot, &u.objects[a], &u.objects[b])
                .map(|r| with_objects(r.scoped(&format!("morphism-{k}/slot-{slot}")), &[a, b]))
        });
        let r = first_failure(reports.into_iter().collect::<Result<Vec<_>>>()?);
        if !r.passed {
            return Ok(r);
        }
        let small: Vec<usize> = (0..n).filter(|&k| u.objects[k].size() <= i.size()).collect();
        let mut quads = Vec::new();
        for &a in &small {
            for &b in &small {
                for &c in &small {
                    for &d in &small {
                        quads.push([a, b, c, d]);
                    }
                }
            }
        }
        let reports = crate::par::map_slice(&quads, |q| {
            let o = |k: usize| &u.objects[q[k]];
            pentagon_check(self, o(0), o(1), o(2), o(3)).map(|r| with_objects(r, q))
        });
        Ok(first_failure(reports.into_iter().collect::<Result<Vec<_>>>()?))
    }
}

fn with_objects(mut r: LawReport, objects: &[usize]) -> LawReport {
    if !r.passed {
        let mut w = objects.to_vec();
        w.extend(&r.witness);
        r.witness = w;
    }
    r
}

/// `γ_{W,X,Y•Z} ∘ γ_{W•X,Y,Z} = (W • γ_{X,Y,Z}) ∘ γ_{W,X•Y,Z} ∘ (γ_{W,X,Y} • Z)`.
pub fn pentagon_check(
    v: &Variety,
    w: &Arc<Semimodule>,
    x: &Arc<Semimodule>,
    y: &Arc<Semimodule>,
    z: &Arc<Semimodule>,
) -> Result<LawReport> {
    let wx = v.obj(w, x)?;
    let yz = v.obj(y, z)?;
    let xy = v.obj(x, y)?;
    let lhs = chain(&[v.associator(&wx, y, z)?.forward, v.associator(w, x, &yz)?.forward])?;
    let rhs = chain(&[
        v.map_left(&v.associator(w, x, y)?.forward, z)?,
        v.associator(w, &xy, z)?.forward,
        v.map_right(w, &v.associator(x, y, z)?.forward)?,
    ])?;
    Ok(equal_maps("pentagon", &lhs, &rhs))
}
