use std::sync::Arc;

use super::{chain, equal_maps, Universe, Variety};
use crate::algebra::fixtures::power;
use crate::algebra::{hom_set, same_object, LinearMap, Semimodule, Sides};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::tensor::factor_into;

/// `V` with a candidate left dual `V⊛`,
/// `υ: 𝐈 → (𝐈 • V) • V⊛` and `ϖ: (𝐈 • V⊛) • V → 𝐈`.
#[derive(Clone, Debug)]
pub struct DualityCandidate {
    pub v: Arc<Semimodule>,
    pub vdual: Arc<Semimodule>,
    pub upsilon: LinearMap,
    pub varpi: LinearMap,
}

impl Variety {
    /// The map `(X • Y) • Z → G` extending `f(x, y, z)`, factored one
    /// argument at a time.
    pub fn factor3(
        &self,
        x: &Arc<Semimodule>,
        y: &Arc<Semimodule>,
        z: &Arc<Semimodule>,
        target: &Arc<Semimodule>,
        f: impl Fn(usize, usize, usize) -> usize + Sync + Send,
    ) -> Result<LinearMap> {
        let xy = self.tensor(x, y)?;
        let xy_z = self.tensor(&xy.carrier, z)?;
        let slices: Vec<LinearMap> = (0..z.size())
            .map(|c| factor_into(&xy, target, |a, b| f(a, b, c)))
            .collect::<Result<_>>()?;
        factor_into(&xy_z, target, |u, c| slices[c].apply(u))
    }

    /// `V = V⊛ = 𝐈` with `υ(a) = (a ⊠ 1) ⊠ 1` and `ϖ((a ⊠ b) ⊠ c) = abc`.
    pub fn unit_dual(&self) -> Result<DualityCandidate> {
        let i = self.unit().clone();
        let a = self.base().clone();
        let inner = self.tensor(&i, &i)?;
        let outer = self.tensor(&inner.carrier, &i)?;
        let upsilon = LinearMap::from_fn(i.clone(), outer.carrier.clone(), |s| {
            outer.tau(inner.tau(s, 1), 1)
        })?;
        let varpi = self.factor3(&i, &i, &i, &i, |x, y, z| a.mul(a.mul(x, y), z))?;
        Ok(DualityCandidate {
            v: i.clone(),
            vdual: i,
            upsilon,
            varpi,
        })
    }

    /// `V = V⊛ = A^k` over commutative `A`, with coevaluation
    /// `υ(a) = Σ (a ⊠ e_i) ⊠ e_i` and evaluation `ϖ((a ⊠ φ) ⊠ v) = a Σ φ_i v_i`.
    pub fn free_dual(&self, rank: usize) -> Result<DualityCandidate> {
        let a = self.base().clone();
        let n = a.size();
        if (0..n).any(|x| (0..n).any(|y| a.mul(x, y) != a.mul(y, x))) {
            return Err(Error::BadParameter("free duality needs a commutative base".into()));
        }
        let i = self.unit().clone();
        let v = Arc::new(power(&a, rank)?);
        let basis: Vec<usize> = (0..rank)
            .map(|k| {
                let mut d = vec![0; rank];
                d[k] = 1;
                v.carrier().from_digits(&d)
            })
            .collect();
        let inner = self.tensor(&i, &v)?;
        let outer = self.tensor(&inner.carrier, &v)?;
        let upsilon = LinearMap::from_fn(i.clone(), outer.carrier.clone(), |s| {
            outer
                .carrier
                .carrier()
                .sum(basis.iter().map(|&e| outer.tau(inner.tau(s, e), e)))
        })?;
        let dot = |p: usize, q: usize| {
            let (dp, dq) = (v.carrier().digits(p), v.carrier().digits(q));
            dp.iter().zip(&dq).fold(0, |acc, (&x, &y)| a.add(acc, a.mul(x, y)))
        };
        let varpi = self.factor3(&i, &v, &v, &i, |s, p, q| a.mul(s, dot(p, q)))?;
        Ok(DualityCandidate {
            v: v.clone(),
            vdual: v,
            upsilon,
            varpi,
        })
    }

    /// `(V • ϖ) ∘ γ_{V,𝐈•V⊛,V} ∘ (γ_{V,𝐈,V⊛} • V) ∘ ((ℓ_V • V⊛) • V) ∘ (υ • V) = ℓ_V`.
    pub fn zigzag_left(&self, c: &DualityCandidate) -> Result<LawReport> {
        let (i, v, d) = (self.unit(), &c.v, &c.vdual);
        let id = self.obj(i, d)?;
        let lhs = chain(&[
            self.map_left(&c.upsilon, v)?,
            self.map_left(&self.map_left(&self.ell(v)?.forward, d)?, v)?,
            self.map_left(&self.associator(v, i, d)?.forward, v)?,
            self.associator(v, &id, v)?.forward,
            self.map_right(v, &c.varpi)?,
        ])?;
        Ok(equal_maps("zigzag-left", &lhs, &self.ell(v)?.forward))
    }

    /// `(ϖ • V⊛) ∘ ((℘_{V⊛} • V) • V⊛) ∘ (γ⁻¹_{V⊛,𝐈,V} • V⊛) ∘ γ⁻¹_{V⊛,𝐈•V,V⊛} ∘ (V⊛ • υ) = ℘_{V⊛}`.
    pub fn zigzag_right(&self, c: &DualityCandidate) -> Result<LawReport> {
        let (i, v, d) = (self.unit(), &c.v, &c.vdual);
        let iv = self.obj(i, v)?;
        let lhs = chain(&[
            self.map_right(d, &c.upsilon)?,
            self.associator(d, &iv, d)?.backward,
            self.map_left(&self.associator(d, i, v)?.backward, d)?,
            self.map_left(&self.map_left(&self.wp(d)?, v)?, d)?,
            self.map_left(&c.varpi, d)?,
        ])?;
        Ok(equal_maps("zigzag-right", &lhs, &self.wp(d)?))
    }

    /// Both zig-zag identities, then for all objects `X`, `Y` of `u` the
    /// bijection `Hom((X • 𝐈) • V, Y • 𝐈) ≅ Hom(X • 𝐈, (Y • 𝐈) • V⊛)`,
    /// `f ↦ (f • V⊛) ∘ (X • υ)` with inverse `g ↦ (Y • ϖ) ∘ (g • V)`,
    /// associators inserted. Hom-sets larger than `cap` are an error.
    pub fn dual_check(&self, c: &DualityCandidate, u: &Universe, cap: usize) -> Result<LawReport> {
        let i = self.unit();
        let (v, d) = (&c.v, &c.vdual);
        self.require(v)?;
        self.require(d)?;
        let iv_d = self.obj(&self.obj(i, v)?, d)?;
        let id_v = self.obj(&self.obj(i, d)?, v)?;
        if !same_object(&c.upsilon.source, i) || !same_object(&c.upsilon.target, &iv_d) {
            return Ok(LawReport::fail("shape", vec![], "υ must map 𝐈 → (𝐈 • V) • V⊛"));
        }
        if !same_object(&c.varpi.source, &id_v) || !same_object(&c.varpi.target, i) {
            return Ok(LawReport::fail("shape", vec![], "ϖ must map (𝐈 • V⊛) • V → 𝐈"));
        }
        let r = c
            .upsilon
            .check()
            .scoped("upsilon")
            .and_then(|| c.varpi.check().scoped("varpi"));
        if !r.passed {
            return Ok(r);
        }
        let r = self.zigzag_left(c)?;
        if !r.passed {
            return Ok(r);
        }
        let r = self.zigzag_right(c)?;
        if !r.passed {
            return Ok(r);
        }
        let iv = self.obj(i, v)?;
        let id = self.obj(i, d)?;
        for (a, x) in u.objects.iter().enumerate() {
            for (b, y) in u.objects.iter().enumerate() {
                let xi = self.obj(x, i)?;
                let yi = self.obj(y, i)?;
                let xi_v = self.obj(&xi, v)?;
                let yi_d = self.obj(&yi, d)?;
                let pre = chain(&[
                    self.map_right(x, &c.upsilon)?,
                    self.associator(x, &iv, d)?.backward,
                    self.map_left(&self.associator(x, i, v)?.backward, d)?,
                ])?;
                let post = chain(&[
                    self.map_left(&self.associator(y, i, d)?.forward, v)?,
                    self.associator(y, &id, v)?.forward,
                    self.map_right(y, &c.varpi)?,
                ])?;
                let phi = |f: &LinearMap| -> Result<LinearMap> { self.map_left(f, d)?.compose(&pre) };
                let psi = |g: &LinearMap| -> Result<LinearMap> { post.compose(&self.map_left(g, v)?) };
                let lhs = hom_set(&xi_v, &yi, Sides::BOTH, cap)?;
                let rhs = hom_set(&xi, &yi_d, Sides::BOTH, cap)?;
                for (k, t) in lhs.into_iter().enumerate() {
                    let f = LinearMap::new(xi_v.clone(), yi.clone(), t)?;
                    let g = phi(&f)?;
                    let r = g.check();
                    if !r.passed {
                        return Ok(LawReport::fail("adjunction-forward-linear", vec![a, b, k], r.to_string()));
                    }
                    if psi(&g)?.table != f.table {
                        return Ok(LawReport::fail(
                            "adjunction-inverse-after-forward",
                            vec![a, b, k],
                            "ψ(φ(f)) ≠ f",
                        ));
                    }
                }
                for (k, t) in rhs.into_iter().enumerate() {
                    let g = LinearMap::new(xi.clone(), yi_d.clone(), t)?;
                    let f = psi(&g)?;
                    let r = f.check();
                    if !r.passed {
                        return Ok(LawReport::fail("adjunction-inverse-linear", vec![a, b, k], r.to_string()));
                    }
                    if phi(&f)?.table != g.table {
                        return Ok(LawReport::fail(
                            "adjunction-forward-after-inverse",
                            vec![a, b, k],
                            "φ(ψ(g)) ≠ g",
                        ));
                    }
                }
            }
        }
        Ok(LawReport::pass())
    }
}
