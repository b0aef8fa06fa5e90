use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{hom_module, hom_set, HomModule, LinearMap, Semimodule, Sides};
use crate::congruence::{cancellative_reflection, Reflection};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::tensor::{factor_into, induced_map, tensor, TensorProduct};

/// The currying bijection
/// `Hom_T(M ⊠_S N, 𝔠(G)) ≅ Hom_S(𝔠(M), Hom_T(N, 𝔠(G)))`
/// computed by full enumeration of both hom-sets.
#[derive(Clone, Debug)]
pub struct TensorHom {
    pub tensor: TensorProduct,
    pub cm: Reflection,
    pub cg: Reflection,
    /// `Hom_T(N, 𝔠(G))` with its right `S`-action.
    pub hom: HomModule,
    /// `Hom_T(M ⊠ N, 𝔠(G))`, sorted.
    pub lhs: Vec<Vec<usize>>,
    /// `Hom_S(𝔠(M), Hom_T(N, 𝔠(G)))`, sorted; entries index `hom`.
    pub rhs: Vec<Vec<usize>>,
    /// Index in `rhs` of the curried form of each element of `lhs`.
    pub forward: Vec<usize>,
    /// Index in `lhs` of the uncurried form of each element of `rhs`.
    pub backward: Vec<usize>,
    pub report: LawReport,
}

impl TensorHom {
    /// `f ↦ (c ↦ (n ↦ f(τ(m_c, n))))` with `m_c` the chosen representative of `c`.
    pub fn curry(&self, f: &[usize]) -> Vec<usize> {
        let nn = self.tensor.right.size();
        self.cm
            .section
            .iter()
            .map(|&m| {
                let h: Vec<usize> = (0..nn).map(|n| f[self.tensor.tau(m, n)]).collect();
                self.hom.index_of(&h).unwrap_or(usize::MAX)
            })
            .collect()
    }

    pub fn uncurry(&self, g: &[usize]) -> Result<Vec<usize>> {
        let cg = &self.cg.reflected;
        let proj = &self.cm.projection;
        let f = factor_into(&self.tensor, cg, |m, n| self.hom.maps[g[proj.apply(m)]][n])?;
        Ok(f.table.to_vec())
    }
}

fn index(list: &[Vec<usize>]) -> HashMap<&[usize], usize> {
    list.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect()
}

/// `M` a right `S`-semimodule, `N` an `(S, T)`-bisemimodule and `G` a right
/// `T`-semimodule. Hom-sets with more than `cap` elements are an error.
pub fn tensor_hom_adjunction(
    m: &Arc<Semimodule>,
    n: &Arc<Semimodule>,
    g: &Arc<Semimodule>,
    cap: usize,
) -> Result<TensorHom> {
    if n.left().is_none() || n.right().is_none() {
        return Err(Error::MissingAction("N must be a bisemimodule".into()));
    }
    let m_right = Arc::new(m.as_ref().clone().with_left(None));
    let t = tensor(&m_right, n)?;
    let cm = cancellative_reflection(&m_right);
    let g_right = Arc::new(g.as_ref().clone().with_left(None));
    let cg = cancellative_reflection(&g_right);
    let hom = hom_module(n, &cg.reflected, cap)?;
    let lhs = hom_set(&t.carrier.as_ref().clone().with_left(None), &cg.reflected, Sides::RIGHT, cap)?;
    let rhs = hom_set(&cm.reflected, &hom.module, Sides::RIGHT, cap)?;
    let mut th = TensorHom {
        tensor: t,
        cm,
        cg,
        hom,
        lhs,
        rhs,
        forward: Vec::new(),
        backward: Vec::new(),
        report: LawReport::pass(),
    };
    let li = index(&th.lhs);
    let ri = index(&th.rhs);
    let mut forward = Vec::with_capacity(th.lhs.len());
    for (k, f) in th.lhs.iter().enumerate() {
        let c = th.curry(f);
        match ri.get(c.as_slice()) {
            Some(&j) => forward.push(j),
            None => {
                th.report = LawReport::fail("curry-lands-in-hom", vec![k], "curried map is not S-linear");
                return Ok(th);
            }
        }
    }
    let mut backward = Vec::with_capacity(th.rhs.len());
    for (k, g) in th.rhs.iter().enumerate() {
        let f = th.uncurry(g)?;
        match li.get(f.as_slice()) {
            Some(&j) => backward.push(j),
            None => {
                th.report = LawReport::fail("uncurry-lands-in-hom", vec![k], "uncurried map is not T-linear");
                return Ok(th);
            }
        }
    }
    for (k, &j) in forward.iter().enumerate() {
        if backward[j] != k {
            th.report = LawReport::fail("uncurry-after-curry", vec![k], format!("{k} returns as {}", backward[j]));
            break;
        }
    }
    if th.report.passed {
        for (k, &j) in backward.iter().enumerate() {
            if forward[j] != k {
                th.report = LawReport::fail("curry-after-uncurry", vec![k], format!("{k} returns as {}", forward[j]));
                break;
            }
        }
    }
    th.forward = forward;
    th.backward = backward;
    Ok(th)
}

/// For `h: M → M'`: currying `f ∘ (h ⊠ N)` gives the curried `f` composed
/// with `𝔠(h)`, for every `f` in `Hom_T(M' ⊠ N, 𝔠(G))`.
pub fn naturality_in_first(
    h: &LinearMap,
    n: &Arc<Semimodule>,
    g: &Arc<Semimodule>,
    cap: usize,
) -> Result<LawReport> {
    let src = tensor_hom_adjunction(&h.source, n, g, cap)?;
    let dst = tensor_hom_adjunction(&h.target, n, g, cap)?;
    let h_right = LinearMap::new(
        src.tensor.left.clone(),
        dst.tensor.left.clone(),
        h.table.to_vec(),
    )?;
    let hn = induced_map(&h_right, &LinearMap::identity(n), &src.tensor, &dst.tensor)?;
    let ch: Vec<usize> = src
        .cm
        .section
        .iter()
        .map(|&m| dst.cm.projection.apply(h.apply(m)))
        .collect();
    for (k, f) in dst.lhs.iter().enumerate() {
        let pulled: Vec<usize> = hn.table.iter().map(|&x| f[x]).collect();
        let lhs = src.curry(&pulled);
        let curried = dst.curry(f);
        let rhs: Vec<usize> = ch.iter().map(|&c| curried[c]).collect();
        if lhs != rhs {
            return Ok(LawReport::fail("natural-in-first", vec![k], "currying does not commute with h"));
        }
    }
    Ok(LawReport::pass())
}

/// For `k: G → G'`: currying `𝔠(k) ∘ f` gives `Hom(N, 𝔠(k))` applied to the
/// curried `f`, for every `f` in `Hom_T(M ⊠ N, 𝔠(G))`.
pub fn naturality_in_last(
    m: &Arc<Semimodule>,
    n: &Arc<Semimodule>,
    k: &LinearMap,
    cap: usize,
) -> Result<LawReport> {
    let src = tensor_hom_adjunction(m, n, &k.source, cap)?;
    let dst = tensor_hom_adjunction(m, n, &k.target, cap)?;
    let ck: Vec<usize> = src
        .cg
        .section
        .iter()
        .map(|&x| dst.cg.projection.apply(k.apply(x)))
        .collect();
    let post: Vec<usize> = src
        .hom
        .maps
        .iter()
        .map(|h| {
            let composed: Vec<usize> = h.iter().map(|&x| ck[x]).collect();
            dst.hom.index_of(&composed).unwrap_or(usize::MAX)
        })
        .collect();
    for (j, f) in src.lhs.iter().enumerate() {
        let pushed: Vec<usize> = f.iter().map(|&x| ck[x]).collect();
        let lhs = dst.curry(&pushed);
        let rhs: Vec<usize> = src.curry(f).iter().map(|&i| post[i]).collect();
        if lhs != rhs {
            return Ok(LawReport::fail("natural-in-last", vec![j], "currying does not commute with k"));
        }
    }
    Ok(LawReport::pass())
}
