//! Takahashi's tensor-like product `M ⊠_S N`.
//!
//! [`tensor`] computes the product from a presentation: the cancellative
//! reflections of both factors are finite abelian groups, and `M ⊠_S N` is
//! their group tensor product modulo the balance relations. This scales to
//! carriers far beyond what the literal construction on `F = S^(M×N)` can
//! enumerate. [`takahashi_tensor`] builds the literal quotient of `F` and
//! [`oracle_tensor`] reflects the classical tensor; both serve as oracles for
//! the presentation on small inputs.

mod literal;
mod maps;

use std::sync::Arc;

pub use literal::{free_semimodule, oracle_tensor, takahashi_tensor, TakahashiOptions};
pub use maps::{
    associator, associator_on, factor_balanced_map, factor_into, induced_map, lift_to, theta_iso,
    theta_on, Associator,
    Factorization, IsoPair, Side, Theta,
};

use crate::algebra::{
    abelian_quotient, Action, GroupBasis, Monoid, Semimodule, Semiring,
};
use crate::congruence::cancellative_reflection;
use crate::error::{Error, Result};
use crate::report::LawReport;

/// Largest carrier the presentation engine will materialize.
pub const MAX_CARRIER: usize = 1 << 17;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Presentation,
    Takahashi,
    Oracle,
}

#[derive(Clone, Debug)]
pub(crate) enum Presentation {
    /// The carrier is in coordinates and word `t` writes the `t`-th unit
    /// vector as `Σ k · τ(m, n)` over triples `(m, n, k)`.
    Words(Arc<Vec<Vec<(usize, usize, usize)>>>),
    /// The carrier is `F / ≡` with `F = S^(M×N)`; `class_of` sends each
    /// element of `F` to its class.
    Literal {
        free: Arc<Semimodule>,
        class_of: Arc<Vec<usize>>,
    },
}

/// `M ⊠_S N` with its balanced map `τ`.
///
/// The carrier keeps the left action of `M` and the right action of `N`
/// when these exist.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub left: Arc<Semimodule>,
    pub right: Arc<Semimodule>,
    pub carrier: Arc<Semimodule>,
    /// `τ(m, n)` at `m * |N| + n`.
    pub tau: Arc<[usize]>,
    pub construction: Construction,
    pub(crate) presentation: Presentation,
}

impl TensorProduct {
    pub fn tau(&self, m: usize, n: usize) -> usize {
        self.tau[m * self.right.size() + n]
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    /// The middle semiring.
    pub fn base(&self) -> &Arc<Semiring> {
        self.left.right_base().expect("checked on construction")
    }
}

pub(crate) fn middle_base(m: &Semimodule, n: &Semimodule) -> Result<Arc<Semiring>> {
    match (m.right_base(), n.left_base()) {
        (Some(a), Some(b)) if a == b => Ok(a.clone()),
        (Some(_), Some(_)) => Err(Error::BaseMismatch(
            "right action of M and left action of N are over different semirings".into(),
        )),
        (None, _) => Err(Error::MissingAction("M has no right action".into())),
        (_, None) => Err(Error::MissingAction("N has no left action".into())),
    }
}

/// A table `M × N → G`, indexed `m * |N| + n`.
#[derive(Clone, Debug)]
pub struct BalancedMap {
    pub left: Arc<Semimodule>,
    pub right: Arc<Semimodule>,
    pub target: Arc<Semimodule>,
    pub table: Vec<usize>,
}

impl BalancedMap {
    pub fn from_fn(
        left: &Arc<Semimodule>,
        right: &Arc<Semimodule>,
        target: &Arc<Semimodule>,
        f: impl Fn(usize, usize) -> usize + Sync + Send,
    ) -> Self {
        let k = right.size();
        BalancedMap {
            left: left.clone(),
            right: right.clone(),
            target: target.clone(),
            table: crate::par::map_range(left.size() * k, |i| f(i / k, i % k)),
        }
    }

    pub fn at(&self, m: usize, n: usize) -> usize {
        self.table[m * self.right.size() + n]
    }
}

/// Biadditivity (with `β(0, n) = 0 = β(m, 0)`) and `β(ms, n) = β(m, sn)`.
pub fn check_balanced(b: &BalancedMap) -> LawReport {
    let (m, n, g) = (&b.left, &b.right, &b.target);
    if b.table.len() != m.size() * n.size() || b.table.iter().any(|&v| v >= g.size()) {
        return LawReport::fail("malformed-table", vec![], "table does not fit M × N → G");
    }
    let s = match middle_base(m, n) {
        Ok(s) => s,
        Err(e) => return LawReport::fail(e.id(), vec![], e.to_string()),
    };
    for y in 0..n.size() {
        if b.at(0, y) != 0 {
            return LawReport::fail("preserve-zero", vec![0, y], format!("β(0, {y}) = {}", b.at(0, y)));
        }
    }
    for x in 0..m.size() {
        if b.at(x, 0) != 0 {
            return LawReport::fail("preserve-zero", vec![x, 0], format!("β({x}, 0) = {}", b.at(x, 0)));
        }
    }
    let pm = crate::algebra::maps_probes(m.carrier());
    let pn = crate::algebra::maps_probes(n.carrier());
    let found = crate::par::find_first(m.size(), |x| {
        for &x2 in &pm {
            for y in 0..n.size() {
                let l = b.at(m.add(x, x2), y);
                let r = g.add(b.at(x, y), b.at(x2, y));
                if l != r {
                    return Some(("left-additive", vec![x, x2, y], format!(
                        "β({x} + {x2}, {y}) = {l} but β({x}, {y}) + β({x2}, {y}) = {r}"
                    )));
                }
            }
        }
        for y in 0..n.size() {
            for &y2 in &pn {
                let l = b.at(x, n.add(y, y2));
                let r = g.add(b.at(x, y), b.at(x, y2));
                if l != r {
                    return Some(("right-additive", vec![x, y, y2], format!(
                        "β({x}, {y} + {y2}) = {l} but β({x}, {y}) + β({x}, {y2}) = {r}"
                    )));
                }
            }
        }
        for a in 0..s.size() {
            for y in 0..n.size() {
                let l = b.at(m.act_right(x, a), y);
                let r = b.at(x, n.act_left(a, y));
                if l != r {
                    return Some(("balanced", vec![x, a, y], format!(
                        "β({x}·{a}, {y}) = {l} but β({x}, {a}·{y}) = {r}"
                    )));
                }
            }
        }
        None
    });
    match found {
        Some((_, (law, w, d))) => LawReport::fail(law, w, d),
        None => LawReport::pass(),
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `M ⊠_S N` from the presentation `𝔠(M) ⊗_ℤ 𝔠(N) / ⟨ms ⊗ n − m ⊗ sn⟩`.
pub fn tensor(m: &Arc<Semimodule>, n: &Arc<Semimodule>) -> Result<TensorProduct> {
    let s = middle_base(m, n)?;
    let rm = cancellative_reflection(m);
    let rn = cancellative_reflection(n);
    let gm = GroupBasis::of(rm.reflected.carrier())?;
    let gn = GroupBasis::of(rn.reflected.carrier())?;
    let (r1, r2) = (gm.moduli.len(), gn.moduli.len());
    let gen = |i: usize, j: usize| i * r2 + j;

    let mut orders = vec![0; r1 * r2];
    for i in 0..r1 {
        for j in 0..r2 {
            orders[gen(i, j)] = gcd(gm.moduli[i], gn.moduli[j]);
        }
    }
    let mut relations = Vec::new();
    for a in 0..s.size() {
        for i in 0..r1 {
            let c = gm.coords_of(rm.reflected.act_right(gm.basis_element(i), a));
            for j in 0..r2 {
                let d = gn.coords_of(rn.reflected.act_left(a, gn.basis_element(j)));
                let mut rel = vec![0i64; r1 * r2];
                for (k, &ck) in c.iter().enumerate() {
                    rel[gen(k, j)] += ck as i64;
                }
                for (l, &dl) in d.iter().enumerate() {
                    rel[gen(i, l)] -= dl as i64;
                }
                if rel.iter().any(|&x| x != 0) {
                    relations.push(rel);
                }
            }
        }
    }
    let q = abelian_quotient(&orders, &relations);
    if q.order() > MAX_CARRIER as u128 {
        return Err(Error::SizeCapExceeded {
            needed: q.order(),
            cap: MAX_CARRIER,
        });
    }
    let monoid = Monoid::coords(&q.moduli)?;
    let moduli = q.moduli.clone();

    let cm: Vec<Vec<usize>> = (0..m.size())
        .map(|x| gm.coords_of(rm.projection.apply(x)))
        .collect();
    let cn: Vec<Vec<usize>> = (0..n.size())
        .map(|y| gn.coords_of(rn.projection.apply(y)))
        .collect();
    let nn = n.size();
    let tau: Vec<usize> = crate::par::map_range(m.size() * nn, |idx| {
        let (a, b) = (&cm[idx / nn], &cn[idx % nn]);
        let mut out = vec![0u128; moduli.len()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                let k = (ai * bj) as u128;
                if k == 0 {
                    continue;
                }
                for (t, o) in out.iter_mut().enumerate() {
                    *o = (*o + k * q.gen_images[gen(i, j)][t] as u128) % moduli[t] as u128;
                }
            }
        }
        let digits: Vec<usize> = out.into_iter().map(|v| v as usize).collect();
        monoid.from_digits(&digits)
    });

    let words: Vec<Vec<(usize, usize, usize)>> = q
        .lifts
        .iter()
        .map(|lift| {
            let mut w = Vec::new();
            for i in 0..r1 {
                for j in 0..r2 {
                    let k = lift[gen(i, j)];
                    if k != 0 {
                        w.push((
                            rm.section[gm.basis_element(i)],
                            rn.section[gn.basis_element(j)],
                            k,
                        ));
                    }
                }
            }
            w
        })
        .collect();

    let tau_at = |x: usize, y: usize| tau[x * nn + y];
    let outer = |act: &Action, on_left: bool| -> Result<Action> {
        let base = act.base().clone();
        // image of each unit vector under the scalar
        let unit_images: Vec<Vec<usize>> = (0..base.size())
            .map(|a| {
                words
                    .iter()
                    .map(|w| {
                        monoid.sum(w.iter().map(|&(x, y, k)| {
                            let v = if on_left {
                                tau_at(act.act(a, x), y)
                            } else {
                                tau_at(x, act.act(a, y))
                            };
                            monoid.times(k, v)
                        }))
                    })
                    .collect()
            })
            .collect();
        let table: Vec<usize> = crate::par::map_slice(&unit_images, |images| {
            monoid.extend_linearly(&monoid, images)
        })
        .concat();
        let action = Action::new(base.clone(), table, monoid.size())?;
        for a in 0..base.size() {
            for x in 0..m.size() {
                for y in 0..nn {
                    let (lhs, rhs) = if on_left {
                        (action.act(a, tau_at(x, y)), tau_at(act.act(a, x), y))
                    } else {
                        (action.act(a, tau_at(x, y)), tau_at(x, act.act(a, y)))
                    };
                    if lhs != rhs {
                        return Err(Error::IllDefined(format!(
                            "outer action of {a} disagrees with τ at ({x}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(action)
    };
    let left = m.left().map(|a| outer(a, true)).transpose()?;
    let right = n.right().map(|a| outer(a, false)).transpose()?;
    let carrier = Arc::new(Semimodule::new(monoid.clone(), left, right)?);
    Ok(TensorProduct {
        left: m.clone(),
        right: n.clone(),
        carrier,
        tau: tau.into(),
        construction: Construction::Presentation,
        presentation: Presentation::Words(Arc::new(words)),
    })
}
