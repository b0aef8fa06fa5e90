use std::collections::HashMap;
use std::sync::Arc;

use super::{check_semicoring_morphism, check_semiring_morphism, SemicounitalSemicoring, SemiunitalSemiring};
use crate::algebra::{hom_set, LinearMap, Sides};
use crate::error::{Error, Result};
use crate::report::LawReport;

/// Bilinear maps `𝒞 → 𝒜` under `f ∗ g = μ ∘ (f • g) ∘ Δ` with unit `η ∘ ε`.
#[derive(Clone, Debug)]
pub struct ConvolutionMonoid {
    /// Tables of the maps, sorted.
    pub maps: Vec<Vec<usize>>,
    /// `mul[i * n + j]` is the index of `maps[i] ∗ maps[j]`.
    pub mul: Vec<usize>,
    pub unit: usize,
    index: HashMap<Vec<usize>, usize>,
}

impl ConvolutionMonoid {
    pub fn size(&self) -> usize {
        self.maps.len()
    }

    pub fn index_of(&self, table: &[usize]) -> Option<usize> {
        self.index.get(table).copied()
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.size() + j]
    }

    /// Associativity and two-sided neutrality of the unit, exhaustively.
    pub fn check(&self) -> LawReport {
        let n = self.size();
        for i in 0..n {
            for (law, lhs) in [
                ("unit-left", self.product(self.unit, i)),
                ("unit-right", self.product(i, self.unit)),
            ] {
                if lhs != i {
                    return LawReport::fail(law, vec![i], format!("gives {lhs}"));
                }
            }
        }
        let bad = crate::par::find_first(n * n * n, |t| {
            let (i, j, k) = (t / (n * n), t / n % n, t % n);
            let lhs = self.product(self.product(i, j), k);
            let rhs = self.product(i, self.product(j, k));
            (lhs != rhs).then_some((i, j, k, lhs, rhs))
        });
        match bad {
            None => LawReport::pass(),
            Some((_, (i, j, k, l, r))) => LawReport::fail(
                "associativity",
                vec![i, j, k],
                format!("(f∗g)∗h = {l}, f∗(g∗h) = {r}"),
            ),
        }
    }
}

/// The convolution monoid of `c` with values in `a`. The carrier of `a`
/// must be firm, otherwise `η ∘ ε` need not be neutral.
pub fn convolution_monoid(
    c: &SemicounitalSemicoring,
    a: &SemiunitalSemiring,
    cap: usize,
) -> Result<ConvolutionMonoid> {
    let v = &a.variety;
    if !Arc::ptr_eq(v, &c.variety) {
        return Err(Error::BaseMismatch("the semicoring and the semiring live in different varieties".into()));
    }
    if !v.is_firm(&a.carrier)? {
        return Err(Error::NotUnital("the carrier of the semiring is not firm".into()));
    }
    let maps = hom_set(&c.carrier, &a.carrier, Sides::BOTH, cap)?;
    let n = maps.len();
    let index: HashMap<Vec<usize>, usize> = maps.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
    let lm = |t: &Vec<usize>| LinearMap::new(c.carrier.clone(), a.carrier.clone(), t.clone());
    let linear: Vec<LinearMap> = maps.iter().map(lm).collect::<Result<_>>()?;
    let products: Vec<Result<usize>> = crate::par::map_range(n * n, |t| {
        let (f, g) = (&linear[t / n], &linear[t % n]);
        let h = a.mu.compose(&v.tensor_maps(f, g)?.compose(&c.delta)?)?;
        index
            .get(&h.table[..])
            .copied()
            .ok_or_else(|| Error::FormulaDisagreement("a convolution product is not bilinear".into()))
    });
    let mul = products.into_iter().collect::<Result<Vec<_>>>()?;
    let e = a.eta.compose(&c.epsilon)?;
    let unit = *index
        .get(&e.table[..])
        .ok_or_else(|| Error::FormulaDisagreement("η ∘ ε is not bilinear".into()))?;
    Ok(ConvolutionMonoid { maps, mul, unit, index })
}

/// Precomposition with `φ: 𝒟 → 𝒞` and postcomposition with `ψ: 𝒜 → ℬ`.
#[derive(Clone, Debug)]
pub struct ConvolutionFunctors {
    /// `Conv(𝒞, 𝒜)`.
    pub source: ConvolutionMonoid,
    /// `Conv(𝒟, 𝒜)`.
    pub pre_target: ConvolutionMonoid,
    /// `Conv(𝒞, ℬ)`.
    pub post_target: ConvolutionMonoid,
    /// `f ↦ f ∘ φ`, as indices.
    pub pre: Vec<usize>,
    /// `g ↦ ψ ∘ g`, as indices.
    pub post: Vec<usize>,
    pub report: LawReport,
}

fn monoid_map_report(law: &str, src: &ConvolutionMonoid, dst: &ConvolutionMonoid, h: &[usize]) -> LawReport {
    if h[src.unit] != dst.unit {
        return LawReport::fail(format!("{law}-unit"), vec![src.unit], "the unit is not preserved");
    }
    for i in 0..src.size() {
        for j in 0..src.size() {
            if h[src.product(i, j)] != dst.product(h[i], h[j]) {
                return LawReport::fail(format!("{law}-product"), vec![i, j], "∗ is not preserved");
            }
        }
    }
    LawReport::pass()
}

#[allow(clippy::too_many_arguments)]
pub fn convolution_functors(
    d: &SemicounitalSemicoring,
    c: &SemicounitalSemicoring,
    phi: &LinearMap,
    a: &SemiunitalSemiring,
    b: &SemiunitalSemiring,
    psi: &LinearMap,
    cap: usize,
) -> Result<ConvolutionFunctors> {
    let r = check_semicoring_morphism(d, c, phi)?;
    if !r.passed {
        return Err(Error::InvalidMorphism(format!("φ: {r}")));
    }
    let r = check_semiring_morphism(a, b, psi)?;
    if !r.passed {
        return Err(Error::InvalidMorphism(format!("ψ: {r}")));
    }
    let source = convolution_monoid(c, a, cap)?;
    let pre_target = convolution_monoid(d, a, cap)?;
    let post_target = convolution_monoid(c, b, cap)?;
    let lookup = |m: &ConvolutionMonoid, t: Vec<usize>| {
        m.index_of(&t)
            .ok_or_else(|| Error::FormulaDisagreement("a composite is not bilinear".into()))
    };
    let pre = source
        .maps
        .iter()
        .map(|f| lookup(&pre_target, phi.table.iter().map(|&x| f[x]).collect()))
        .collect::<Result<Vec<_>>>()?;
    let post = source
        .maps
        .iter()
        .map(|g| lookup(&post_target, g.iter().map(|&x| psi.apply(x)).collect()))
        .collect::<Result<Vec<_>>>()?;
    let report = monoid_map_report("precomposition", &source, &pre_target, &pre)
        .and_then(|| monoid_map_report("postcomposition", &source, &post_target, &post));
    Ok(ConvolutionFunctors {
        source,
        pre_target,
        post_target,
        pre,
        post,
        report,
    })
}
