use std::sync::Arc;

use super::{check_balanced, tensor, BalancedMap, Presentation, TensorProduct};
use crate::algebra::{same_object, LinearMap, Semimodule};
use crate::congruence::{cancellative_reflection, Reflection};
use crate::error::{Error, Result};
use crate::report::LawReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// The monoid map `γ: M ⊠ N → 𝔠(G)` with `γ ∘ τ = 𝔠_G ∘ β`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub gamma: Vec<usize>,
    pub reflection: Reflection,
}

/// Extends a balanced map along `τ`. The value on a class is computed from
/// representatives: `γ([f]) = 𝔠_G(Σ β(m·f(m,n), n))` on the literal
/// carrier, and by linear extension over the words spelling each unit
/// vector on the presented carrier. Agreement with `β` on every pair is
/// checked, as is independence of the representative.
pub fn factor_balanced_map(t: &TensorProduct, beta: &BalancedMap) -> Result<Factorization> {
    if !same_object(&beta.left, &t.left) || !same_object(&beta.right, &t.right) {
        return Err(Error::ShapeMismatch("β is not defined on the factors of this tensor".into()));
    }
    let report = check_balanced(beta);
    if !report.passed {
        return Err(Error::NotBalanced(report.to_string()));
    }
    let reflection = cancellative_reflection(&beta.target);
    let g = reflection.reflected.clone();
    let cb = |m: usize, n: usize| reflection.projection.apply(beta.at(m, n));
    let gamma = match &t.presentation {
        Presentation::Words(words) => {
            let carrier = t.carrier.carrier();
            let moduli = carrier.moduli().expect("presented carriers are in coordinates");
            let values: Vec<usize> = words
                .iter()
                .map(|w| g.carrier().sum(w.iter().map(|&(m, n, k)| g.carrier().times(k, cb(m, n)))))
                .collect();
            for (t, (&v, &d)) in values.iter().zip(moduli).enumerate() {
                if g.carrier().times(d, v) != 0 {
                    return Err(Error::IllDefined(format!(
                        "generator {t} has order {d} but its image does not"
                    )));
                }
            }
            carrier.extend_linearly(g.carrier(), &values)
        }
        Presentation::Literal { free, class_of } => {
            let nn = t.right.size();
            let values: Vec<usize> = crate::par::map_range(free.size(), |f| {
                g.carrier().sum(
                    free.carrier()
                        .digits(f)
                        .into_iter()
                        .enumerate()
                        .filter(|&(_, c)| c != 0)
                        .map(|(label, c)| cb(t.left.act_right(label / nn, c), label % nn)),
                )
            });
            let mut gamma = vec![usize::MAX; t.size()];
            for (f, &v) in values.iter().enumerate() {
                let slot = &mut gamma[class_of[f]];
                if *slot == usize::MAX {
                    *slot = v;
                } else if *slot != v {
                    return Err(Error::IllDefined(format!(
                        "representatives of class {} give {} and {v}",
                        class_of[f], *slot
                    )));
                }
            }
            gamma
        }
    };
    for m in 0..t.left.size() {
        for n in 0..t.right.size() {
            if gamma[t.tau(m, n)] != cb(m, n) {
                return Err(Error::IllDefined(format!(
                    "γ(τ({m}, {n})) = {} but 𝔠(β({m}, {n})) = {}",
                    gamma[t.tau(m, n)],
                    cb(m, n)
                )));
            }
        }
    }
    Ok(Factorization { gamma, reflection })
}

/// Lifts `γ` along `𝔠_G` through the units of `G`, taking the least unit in
/// each class. Fails when a class has no unit or the lift is not additive.
pub fn lift_to(fact: &Factorization, target: &Arc<Semimodule>) -> Result<Vec<usize>> {
    let proj = &fact.reflection.projection;
    if proj.is_identity() {
        return Ok(fact.gamma.clone());
    }
    let k = fact.reflection.reflected.size();
    let mut unit_of = vec![usize::MAX; k];
    let g = target.carrier();
    for u in 0..target.size() {
        let c = proj.apply(u);
        if unit_of[c] == usize::MAX && g.negate(u).is_some() {
            unit_of[c] = u;
        }
    }
    let lifted: Vec<usize> = fact.gamma.iter().map(|&c| unit_of[c]).collect();
    if let Some(x) = lifted.iter().position(|&u| u == usize::MAX) {
        return Err(Error::NotLiftable(format!(
            "no unit of the target lies over γ({x}) = {}",
            fact.gamma[x]
        )));
    }
    Ok(lifted)
}

/// The linear map `M ⊠ N → G` extending the balanced `pair`, lifted into
/// `G` through its units.
pub fn factor_into(
    t: &TensorProduct,
    target: &Arc<Semimodule>,
    pair: impl Fn(usize, usize) -> usize + Sync + Send,
) -> Result<LinearMap> {
    let beta = BalancedMap::from_fn(&t.left, &t.right, target, pair);
    let fact = factor_balanced_map(t, &beta)?;
    let table = lift_to(&fact, target)?;
    LinearMap::new(t.carrier.clone(), target.clone(), table)
}

/// `f ⊠ g: M ⊠ N → M′ ⊠ N′`.
pub fn induced_map(
    f: &LinearMap,
    g: &LinearMap,
    src: &TensorProduct,
    dst: &TensorProduct,
) -> Result<LinearMap> {
    if !same_object(&f.source, &src.left)
        || !same_object(&g.source, &src.right)
        || !same_object(&f.target, &dst.left)
        || !same_object(&g.target, &dst.right)
    {
        return Err(Error::ShapeMismatch("f ⊠ g: factors do not match the tensors".into()));
    }
    if src.base() != dst.base() {
        return Err(Error::BaseMismatch("f and g are over different semirings".into()));
    }
    factor_into(src, &dst.carrier, |m, n| dst.tau(f.apply(m), g.apply(n)))
}

/// A pair of maps claimed to be mutually inverse linear isomorphisms.
#[derive(Clone, Debug)]
pub struct IsoPair {
    pub forward: LinearMap,
    pub backward: LinearMap,
}

impl IsoPair {
    pub fn check(&self) -> LawReport {
        let r = self.forward.check().scoped("forward");
        if !r.passed {
            return r;
        }
        let r = self.backward.check().scoped("backward");
        if !r.passed {
            return r;
        }
        for x in 0..self.forward.source.size() {
            let y = self.backward.apply(self.forward.apply(x));
            if y != x {
                return LawReport::fail("backward-forward", vec![x], format!("{x} returns as {y}"));
            }
        }
        for x in 0..self.backward.source.size() {
            let y = self.forward.apply(self.backward.apply(x));
            if y != x {
                return LawReport::fail("forward-backward", vec![x], format!("{x} returns as {y}"));
            }
        }
        LawReport::pass()
    }

    pub fn inverse(&self) -> IsoPair {
        IsoPair {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }
}

/// `ϑ^r: M ⊠_S S ≅ 𝔠(M)` or `ϑ^l: S ⊠_S N ≅ 𝔠(N)`.
#[derive(Clone, Debug)]
pub struct Theta {
    pub tensor: TensorProduct,
    pub reflection: Reflection,
    pub iso: IsoPair,
}

/// Builds `ϑ` for `m` on the given side using the presented tensor.
pub fn theta_iso(m: &Arc<Semimodule>, side: Side) -> Result<Theta> {
    let base = match side {
        Side::Right => m.right_base(),
        Side::Left => m.left_base(),
    }
    .ok_or_else(|| Error::MissingAction(format!("ϑ on the {side:?} side needs that action")))?;
    let reg = Arc::new(Semimodule::regular(base));
    let t = match side {
        Side::Right => tensor(m, &reg)?,
        Side::Left => tensor(&reg, m)?,
    };
    theta_on(t, side)
}

/// `ϑ` on an already constructed `M ⊠ S` (right) or `S ⊠ N` (left).
pub fn theta_on(t: TensorProduct, side: Side) -> Result<Theta> {
    let (m, fact) = match side {
        Side::Right => {
            let m = t.left.clone();
            let beta = BalancedMap::from_fn(&t.left, &t.right, &m, |x, s| m.act_right(x, s));
            let fact = factor_balanced_map(&t, &beta)?;
            (m, fact)
        }
        Side::Left => {
            let m = t.right.clone();
            let beta = BalancedMap::from_fn(&t.left, &t.right, &m, |s, x| m.act_left(s, x));
            let fact = factor_balanced_map(&t, &beta)?;
            (m, fact)
        }
    };
    let _ = m;
    let refl = fact.reflection.clone();
    let forward = LinearMap::new(t.carrier.clone(), refl.reflected.clone(), fact.gamma)?;
    let backward = LinearMap::from_fn(refl.reflected.clone(), t.carrier.clone(), |c| match side {
        Side::Right => t.tau(refl.section[c], 1),
        Side::Left => t.tau(1, refl.section[c]),
    })?;
    Ok(Theta {
        tensor: t,
        reflection: refl,
        iso: IsoPair { forward, backward },
    })
}

/// `γ_{X,Y,Z}: (X ⊠ Y) ⊠ Z ≅ X ⊠ (Y ⊠ Z)` with the tensors involved.
#[derive(Clone, Debug)]
pub struct Associator {
    pub xy: TensorProduct,
    pub xy_z: TensorProduct,
    pub yz: TensorProduct,
    pub x_yz: TensorProduct,
    pub iso: IsoPair,
}

pub fn associator(
    x: &Arc<Semimodule>,
    y: &Arc<Semimodule>,
    z: &Arc<Semimodule>,
) -> Result<Associator> {
    let xy = tensor(x, y)?;
    let xy_z = tensor(&xy.carrier, z)?;
    let yz = tensor(y, z)?;
    let x_yz = tensor(x, &yz.carrier)?;
    let iso = associator_on(&xy, &xy_z, &yz, &x_yz)?;
    Ok(Associator { xy, xy_z, yz, x_yz, iso })
}

/// The associator between given tensors, by two nested factorizations of
/// `(x, y, z) ↦ τ(x, τ(y, z))` and of its mirror image.
pub fn associator_on(
    xy: &TensorProduct,
    xy_z: &TensorProduct,
    yz: &TensorProduct,
    x_yz: &TensorProduct,
) -> Result<IsoPair> {
    if !same_object(&xy_z.left, &xy.carrier)
        || !same_object(&x_yz.right, &yz.carrier)
        || !same_object(&xy.left, &x_yz.left)
        || !same_object(&xy.right, &yz.left)
        || !same_object(&xy_z.right, &yz.right)
    {
        return Err(Error::ShapeMismatch("associator: tensors do not fit together".into()));
    }
    let z_size = xy_z.right.size();
    let slices: Vec<Vec<usize>> = (0..z_size)
        .map(|z| {
            factor_into(xy, &x_yz.carrier, |a, b| x_yz.tau(a, yz.tau(b, z))).map(|f| f.table.to_vec())
        })
        .collect::<Result<_>>()?;
    let forward = factor_into(xy_z, &x_yz.carrier, |u, z| slices[z][u])?;
    let x_size = x_yz.left.size();
    let slices: Vec<Vec<usize>> = (0..x_size)
        .map(|a| {
            factor_into(yz, &xy_z.carrier, |b, c| xy_z.tau(xy.tau(a, b), c)).map(|f| f.table.to_vec())
        })
        .collect::<Result<_>>()?;
    let backward = factor_into(x_yz, &xy_z.carrier, |a, v| slices[a][v])?;
    Ok(IsoPair { forward, backward })
}
