use std::sync::Arc;

use super::{middle_base, Construction, Presentation, TensorProduct};
use crate::algebra::{Action, Monoid, Semimodule, Semiring};
use crate::congruence::{cancellative_reflection, check_congruence, congruence_closure, quotient, is_cancellative, UnionFind};
use crate::error::{Error, Result};

/// `S^X` for `|X| = labels`, with pointwise actions on both sides.
pub fn free_semimodule(s: &Arc<Semiring>, labels: usize, cap: usize) -> Result<Arc<Semimodule>> {
    let needed = (s.size() as u128).checked_pow(labels as u32).unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(Error::SizeCapExceeded { needed, cap });
    }
    let carrier = Monoid::free(s.clone(), labels)?;
    let n = carrier.size();
    let pointwise = |f: &dyn Fn(usize, usize) -> usize| {
        Action::from_fn(s.clone(), n, |a, x| {
            let d: Vec<usize> = carrier.digits(x).into_iter().map(|v| f(a, v)).collect();
            carrier.from_digits(&d)
        })
    };
    let left = pointwise(&|a, v| s.mul(a, v))?;
    let right = pointwise(&|a, v| s.mul(v, a))?;
    Ok(Arc::new(Semimodule::new(carrier, Some(left), Some(right))?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TakahashiOptions {
    /// Bound on `|F| = |S|^(|M|·|N|)`.
    pub cap: usize,
    /// Also identify `δ_(m,n)·s` with `δ_(ms,n)`. The six generating families
    /// alone do not force this when `S` has elements that are not sums of 1.
    pub scalar_transport: bool,
}

impl Default for TakahashiOptions {
    fn default() -> Self {
        TakahashiOptions {
            cap: crate::DEFAULT_CAP,
            scalar_transport: false,
        }
    }
}

/// `F = S^(M×N)` with the label of `(m, n)` at `m * |N| + n`.
struct Free {
    s: Arc<Semiring>,
    f: Arc<Semimodule>,
    nn: usize,
    /// `|S|^label`, the index of `δ_label`.
    powers: Vec<usize>,
}

impl Free {
    fn new(m: &Semimodule, n: &Semimodule, cap: usize) -> Result<Self> {
        let s = middle_base(m, n)?;
        let labels = m.size() * n.size();
        let f = free_semimodule(&s, labels, cap)?;
        let mut powers = Vec::with_capacity(labels);
        let mut p = 1usize;
        for _ in 0..labels {
            powers.push(p);
            p = p.saturating_mul(s.size());
        }
        Ok(Free { s, f, nn: n.size(), powers })
    }

    fn delta(&self, m: usize, n: usize) -> usize {
        self.powers[m * self.nn + n]
    }

    /// The generating pairs of the six families (and their swaps), closed
    /// under the right action.
    fn generators(&self, m: &Semimodule, n: &Semimodule, transport: bool) -> Vec<(usize, usize)> {
        let f = &self.f;
        let mut seeds = Vec::new();
        for m1 in 0..m.size() {
            for m2 in 0..m.size() {
                for y in 0..n.size() {
                    seeds.push((self.delta(m.add(m1, m2), y), f.add(self.delta(m1, y), self.delta(m2, y))));
                }
            }
        }
        for x in 0..m.size() {
            for n1 in 0..n.size() {
                for n2 in 0..n.size() {
                    seeds.push((self.delta(x, n.add(n1, n2)), f.add(self.delta(x, n1), self.delta(x, n2))));
                }
            }
        }
        for x in 0..m.size() {
            for a in 0..self.s.size() {
                for y in 0..n.size() {
                    seeds.push((self.delta(m.act_right(x, a), y), self.delta(x, n.act_left(a, y))));
                    if transport {
                        seeds.push((f.act_right(self.delta(x, y), a), self.delta(m.act_right(x, a), y)));
                    }
                }
            }
        }
        let mut gens: Vec<(usize, usize)> = Vec::new();
        for &(g, h) in &seeds {
            for a in 0..self.s.size() {
                let (ga, ha) = (f.act_right(g, a), f.act_right(h, a));
                gens.push((ga, ha));
                gens.push((ha, ga));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        gens.retain(|&p| p != (0, 0));
        gens
    }

    /// `a · f = Σ f(m,n) δ_(am,n)` (left) or `f · a = Σ f(m,n) δ_(m,na)` (right).
    fn outer(&self, x: usize, a: usize, act: &Action, on_left: bool) -> usize {
        let digits = self.f.carrier().digits(x);
        let mut out = vec![0usize; digits.len()];
        for (label, &c) in digits.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (mm, nn) = (label / self.nn, label % self.nn);
            let target = if on_left {
                act.act(a, mm) * self.nn + nn
            } else {
                mm * self.nn + act.act(a, nn)
            };
            out[target] = self.s.add(out[target], c);
        }
        self.f.carrier().from_digits(&out)
    }
}

/// Descends the outer actions of `M` (left) and `N` (right) from `F` along
/// `class_of`, checking that they are well defined.
fn descend_outer(
    free: &Free,
    m: &Semimodule,
    n: &Semimodule,
    class_of: &[usize],
    classes: usize,
) -> Result<(Option<Action>, Option<Action>)> {
    let build = |act: &Action, on_left: bool| -> Result<Action> {
        let base = act.base();
        let mut table = vec![usize::MAX; base.size() * classes];
        for a in 0..base.size() {
            for x in 0..free.f.size() {
                let y = class_of[free.outer(x, a, act, on_left)];
                let slot = &mut table[a * classes + class_of[x]];
                if *slot == usize::MAX {
                    *slot = y;
                } else if *slot != y {
                    return Err(Error::IllDefined(format!(
                        "outer action of {a} is not constant on the class of {x}"
                    )));
                }
            }
        }
        Action::new(base.clone(), table, classes)
    };
    let left = m.left().map(|a| build(a, true)).transpose()?;
    let right = n.right().map(|a| build(a, false)).transpose()?;
    Ok((left, right))
}

/// Marks elements of `F × F` in a bitset indexed `a * |F| + b`.
struct PairSet {
    bits: Vec<u64>,
    n: usize,
}

impl PairSet {
    fn new(n: usize) -> Self {
        PairSet { bits: vec![0; (n * n).div_ceil(64)], n }
    }

    fn insert(&mut self, a: usize, b: usize) -> bool {
        let i = a * self.n + b;
        let (w, bit) = (i / 64, 1u64 << (i % 64));
        let fresh = self.bits[w] & bit == 0;
        self.bits[w] |= bit;
        fresh
    }
}

/// The literal construction: `U′` is the symmetric sub-semimodule of `F × F`
/// generated by the six families, `f ≡ f′` iff `f + g = f′ + g′` for some
/// `(g, g′) ∈ U′`, and `M ⊠_S N = F/≡`.
pub fn takahashi_tensor(m: &Arc<Semimodule>, n: &Arc<Semimodule>, opts: TakahashiOptions) -> Result<TensorProduct> {
    let free = Free::new(m, n, opts.cap)?;
    let fsize = free.f.size();
    let add: Vec<u32> = crate::par::map_range(fsize * fsize, |i| free.f.add(i / fsize, i % fsize) as u32);
    let plus = |a: usize, b: usize| add[a * fsize + b] as usize;

    let gens = free.generators(m, n, opts.scalar_transport);
    let mut seen = PairSet::new(fsize);
    seen.insert(0, 0);
    let mut u = vec![(0usize, 0usize)];
    let mut head = 0;
    while head < u.len() {
        let (a, b) = u[head];
        head += 1;
        for &(g, h) in &gens {
            let (x, y) = (plus(a, g), plus(b, h));
            if seen.insert(x, y) {
                u.push((x, y));
            }
        }
    }

    // Adding a diagonal pair of U′ can only enlarge the relation a pair
    // induces, so it suffices to scan U′ + (d, d) for d the sum of all
    // diagonal elements.
    let d = u.iter().filter(|(a, b)| a == b).fold(0, |acc, &(a, _)| plus(acc, a));
    let mut shifted: Vec<(usize, usize)> = u.iter().map(|&(a, b)| (plus(a, d), plus(b, d))).collect();
    shifted.sort_unstable();
    shifted.dedup();

    let mut uf = UnionFind::new(fsize);
    let mut left_hit = vec![usize::MAX; fsize];
    let mut right_rep = vec![(usize::MAX, 0usize); fsize];
    for (stamp, &(g, h)) in shifted.iter().enumerate() {
        for f in 0..fsize {
            left_hit[plus(f, g)] = stamp;
        }
        for f in 0..fsize {
            let k = plus(f, h);
            if left_hit[k] != stamp {
                continue;
            }
            match right_rep[k] {
                (s, r) if s == stamp => {
                    uf.union(f, r);
                }
                _ => right_rep[k] = (stamp, f),
            }
        }
        for f in 0..fsize {
            let k = plus(f, g);
            if right_rep[k].0 == stamp {
                uf.union(f, right_rep[k].1);
            }
        }
    }
    let cong = uf.into_congruence();
    let report = check_congruence(&free.f, &cong);
    if !report.passed {
        return Err(Error::CongruenceVerificationFailed(report.to_string()));
    }
    let (q, _) = quotient(&free.f, &cong).map_err(|e| Error::CongruenceVerificationFailed(e.to_string()))?;
    if !is_cancellative(&q) {
        return Err(Error::CongruenceVerificationFailed("F/≡ is not cancellative".into()));
    }
    finish(m, n, free, cong.class_of, q.carrier().clone(), Construction::Takahashi)
}

fn finish(
    m: &Arc<Semimodule>,
    n: &Arc<Semimodule>,
    free: Free,
    class_of: Vec<usize>,
    carrier: Monoid,
    construction: Construction,
) -> Result<TensorProduct> {
    let classes = carrier.size();
    let (left, right) = descend_outer(&free, m, n, &class_of, classes)?;
    let tau: Vec<usize> = (0..m.size() * n.size()).map(|l| class_of[free.powers[l]]).collect();
    Ok(TensorProduct {
        left: m.clone(),
        right: n.clone(),
        carrier: Arc::new(Semimodule::new(carrier, left, right)?),
        tau: tau.into(),
        construction,
        presentation: Presentation::Literal {
            free: free.f,
            class_of: Arc::new(class_of),
        },
    })
}

/// `𝔠` of the classical tensor product: `F` modulo the congruence generated
/// by the same families, then the cancellative reflection.
pub fn oracle_tensor(m: &Arc<Semimodule>, n: &Arc<Semimodule>, opts: TakahashiOptions) -> Result<TensorProduct> {
    let free = Free::new(m, n, opts.cap)?;
    let pairs: Vec<(usize, usize)> = free
        .generators(m, n, opts.scalar_transport)
        .into_iter()
        .filter(|&(a, b)| a < b)
        .collect();
    let cong = congruence_closure(&free.f, &pairs)?;
    let (q, proj) = quotient(&free.f, &cong)?;
    let refl = cancellative_reflection(&q);
    let class_of: Vec<usize> = (0..free.f.size())
        .map(|x| refl.projection.apply(proj.apply(x)))
        .collect();
    let carrier = refl.reflected.carrier().clone();
    finish(m, n, free, class_of, carrier, Construction::Oracle)
}
