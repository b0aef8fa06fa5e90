//! Congruences on finite semimodules, quotients and the cancellative
//! reflection `𝔠`.

use std::sync::Arc;

use crate::algebra::{Action, LinearMap, Monoid, Semimodule};
use crate::error::{Error, Result};
use crate::report::LawReport;

/// A partition of a semimodule's carrier. Classes are numbered by their
/// least element, so the class of 0 is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub class_of: Vec<usize>,
    pub class_count: usize,
}

impl Congruence {
    pub fn discrete(n: usize) -> Self {
        Congruence {
            class_of: (0..n).collect(),
            class_count: n,
        }
    }

    /// Renumbers an arbitrary labelling so that classes follow their least
    /// elements.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|&l| {
                let next = map.len();
                *map.entry(l).or_insert(next)
            })
            .collect();
        Congruence {
            class_count: map.len(),
            class_of,
        }
    }

    pub fn is_discrete(&self) -> bool {
        self.class_count == self.class_of.len()
    }

    /// Least element of each class.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.class_count];
        for (x, &c) in self.class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = x;
            }
        }
        reps
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn into_congruence(mut self) -> Congruence {
        let labels: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Congruence::from_labels(&labels)
    }
}

fn actions(m: &Semimodule) -> Vec<&Action> {
    m.left().into_iter().chain(m.right()).collect()
}

/// Least congruence containing `pairs`: union-find where every merging pair
/// enqueues its translates by addition and by each scalar.
pub fn congruence_closure(m: &Semimodule, pairs: &[(usize, usize)]) -> Result<Congruence> {
    let n = m.size();
    if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= n || b >= n) {
        return Err(Error::MalformedPair(a, b));
    }
    let acts = actions(m);
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = work.pop() {
        if !uf.union(a, b) {
            continue;
        }
        for c in 0..n {
            work.push((m.add(a, c), m.add(b, c)));
        }
        for act in &acts {
            for s in 0..act.base().size() {
                work.push((act.act(s, a), act.act(s, b)));
            }
        }
    }
    Ok(uf.into_congruence())
}

/// Checks that `c` is compatible with addition and every action.
pub fn check_congruence(m: &Semimodule, c: &Congruence) -> LawReport {
    let n = m.size();
    if c.class_of.len() != n {
        return LawReport::fail("partition-size", vec![], "partition does not cover the carrier");
    }
    let reps = c.representatives();
    let acts = actions(m);
    let found = crate::par::find_first(n, |x| {
        let r = reps[c.class_of[x]];
        if r == x {
            return None;
        }
        for z in 0..n {
            if !c.related(m.add(x, z), m.add(r, z)) {
                return Some((vec![x, r, z], format!("{x} ≡ {r} but {x} + {z} ≢ {r} + {z}")));
            }
        }
        for act in &acts {
            for s in 0..act.base().size() {
                if !c.related(act.act(s, x), act.act(s, r)) {
                    return Some((vec![x, r, s], format!("{x} ≡ {r} but not after acting by {s}")));
                }
            }
        }
        None
    });
    match found {
        Some((_, (w, d))) => LawReport::fail("congruence-compatible", w, d),
        None => LawReport::pass(),
    }
}

/// The quotient semimodule and its projection.
pub fn quotient(m: &Arc<Semimodule>, c: &Congruence) -> Result<(Arc<Semimodule>, LinearMap)> {
    if c.class_of.len() == m.size() && c.class_of.iter().enumerate().all(|(i, &k)| i == k) {
        return Ok((m.clone(), LinearMap::identity(m)));
    }
    let r = check_congruence(m, c);
    if !r.passed {
        return Err(Error::IncompatiblePartition(r.to_string()));
    }
    let k = c.class_count;
    let reps = c.representatives();
    let add = (0..k * k)
        .map(|i| c.class_of[m.add(reps[i / k], reps[i % k])])
        .collect();
    let carrier = Monoid::from_table(k, add)?;
    let descend = |act: &Action| {
        Action::from_fn(act.base().clone(), k, |s, q| c.class_of[act.act(s, reps[q])])
    };
    let left = m.left().map(descend).transpose()?;
    let right = m.right().map(descend).transpose()?;
    let q = Arc::new(Semimodule::new(carrier, left, right)?);
    let proj = LinearMap::new(m.clone(), q.clone(), c.class_of.clone())?;
    Ok((q, proj))
}

/// `Σ_{m ∈ M} m`. For any `z`, this sum is `z + w` for some `w`, so two
/// elements become equal after adding some `z` iff they become equal after
/// adding it.
fn absorbing_sum(m: &Monoid) -> usize {
    m.sum(0..m.size())
}

/// `m ≡₍₀₎ m′` iff `m + m″ = m′ + m″` for some `m″`.
pub fn zero_congruence(m: &Semimodule) -> Congruence {
    if m.carrier().moduli().is_some() {
        return Congruence::discrete(m.size());
    }
    let z = absorbing_sum(m.carrier());
    let labels: Vec<usize> = crate::par::map_range(m.size(), |x| m.add(x, z));
    Congruence::from_labels(&labels)
}

/// `𝔠(M)` together with `𝔠_M` and its kernel.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub reflected: Arc<Semimodule>,
    pub projection: LinearMap,
    pub kernel: Vec<usize>,
    /// Least element of each class.
    pub section: Vec<usize>,
}

pub fn cancellative_reflection(m: &Arc<Semimodule>) -> Reflection {
    let c = zero_congruence(m);
    let (reflected, projection) = quotient(m, &c).expect("the zero congruence is a congruence");
    let kernel = (0..m.size()).filter(|&x| c.class_of[x] == 0).collect();
    Reflection {
        reflected,
        projection,
        kernel,
        section: c.representatives(),
    }
}

/// A triple `(m, m′, m″)` with `m + m′ = m + m″` and `m′ ≠ m″`.
pub fn cancellation_witness(m: &Monoid) -> Option<[usize; 3]> {
    if m.is_group() {
        return None;
    }
    let n = m.size();
    for a in 0..n {
        let mut seen = vec![usize::MAX; n];
        for b in 0..n {
            let s = m.add(a, b);
            if seen[s] != usize::MAX {
                return Some([a, seen[s], b]);
            }
            seen[s] = b;
        }
    }
    None
}

pub fn is_cancellative(m: &Semimodule) -> bool {
    cancellation_witness(m.carrier()).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{boolean, truncated_nat, zmod};

    #[test]
    fn boolean_witness_is_one_zero_one() {
        let b = boolean().additive();
        assert_eq!(cancellation_witness(&b), Some([1, 0, 1]));
        assert!(cancellation_witness(&zmod(3).unwrap().additive()).is_none());
        assert!(cancellation_witness(&truncated_nat(2).unwrap().additive()).is_some());
    }

    #[test]
    fn z4_closure_of_zero_two() {
        let m = Semimodule::regular(&zmod(4).unwrap());
        let c = congruence_closure(&m, &[(0, 2)]).unwrap();
        assert_eq!(c.class_of, vec![0, 1, 0, 1]);
        assert!(congruence_closure(&m, &[]).unwrap().is_discrete());
        assert!(matches!(congruence_closure(&m, &[(0, 9)]), Err(Error::MalformedPair(0, 9))));
    }

    #[test]
    fn incompatible_partition_is_rejected() {
        let m = Arc::new(Semimodule::regular(&zmod(4).unwrap()));
        let c = Congruence::from_labels(&[0, 0, 1, 1]);
        assert!(matches!(quotient(&m, &c), Err(Error::IncompatiblePartition(_))));
    }
}
