use super::maps::check_linear;
use super::ops::{find_hom, OpsView};
use super::{Action, GroupBasis, Monoid, Semimodule, Semiring};

fn group_iso(a: &Monoid, b: &Monoid) -> Option<Vec<usize>> {
    let ga = GroupBasis::of(a).ok()?;
    let gb = GroupBasis::of(b).ok()?;
    if ga.invariants() != gb.invariants() {
        return None;
    }
    let mut ia: Vec<usize> = (0..ga.moduli.len()).collect();
    ia.sort_by_key(|&t| ga.moduli[t]);
    let mut ib: Vec<usize> = (0..gb.moduli.len()).collect();
    ib.sort_by_key(|&t| gb.moduli[t]);
    Some(crate::par::map_range(a.size(), |x| {
        let ca = ga.coords_of(x);
        let mut cb = vec![0; ca.len()];
        for (&s, &t) in ia.iter().zip(&ib) {
            cb[t] = ca[s];
        }
        gb.element_of_coords(&cb)
    }))
}

/// An additive isomorphism, if one exists.
pub fn find_monoid_isomorphism(a: &Monoid, b: &Monoid) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    if a.is_group() != b.is_group() {
        return None;
    }
    if a.is_group() {
        return group_iso(a, b);
    }
    find_hom(&OpsView::monoid(a), &OpsView::monoid(b), true)
}

/// Whether every element of `s` is a sum of ones, so that actions are
/// determined by the additive structure.
fn scalars_are_naturals(s: &Semiring) -> bool {
    let mut seen = vec![false; s.size()];
    let mut x = 0;
    while !seen[x] {
        seen[x] = true;
        x = s.add(x, 1);
    }
    seen.iter().all(|&b| b)
}

/// A linear isomorphism `a → b` respecting every action present on both.
/// Modules with different action signatures are never isomorphic.
pub fn find_isomorphism(a: &Semimodule, b: &Semimodule) -> Option<Vec<usize>> {
    if a.size() != b.size()
        || a.left_base() != b.left_base()
        || a.right_base() != b.right_base()
    {
        return None;
    }
    let (left, right) = (a.left().is_some(), a.right().is_some());
    let determined = a.left_base().is_none_or(|s| scalars_are_naturals(s))
        && a.right_base().is_none_or(|s| scalars_are_naturals(s));
    if a.carrier().is_group() && b.carrier().is_group() && determined {
        let f = group_iso(a.carrier(), b.carrier())?;
        return check_linear(a, b, &f).passed.then_some(f);
    }
    find_hom(&OpsView::module(a, left, right), &OpsView::module(b, left, right), true)
}

pub fn isomorphic(a: &Semimodule, b: &Semimodule) -> bool {
    find_isomorphism(a, b).is_some()
}

pub fn find_semiring_isomorphism(a: &Semiring, b: &Semiring) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    find_hom(&OpsView::semiring(a), &OpsView::semiring(b), true)
}

/// Deterministic renumbering `old → new` by breadth-first search from the
/// constants over all operations; unreached elements are seeded in index
/// order.
pub fn canonical_relabel(view: &OpsView<'_>) -> Vec<usize> {
    let n = view.size;
    let mut new_of = vec![usize::MAX; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let visit = |x: usize, order: &mut Vec<usize>, new_of: &mut Vec<usize>| {
        if new_of[x] == usize::MAX {
            new_of[x] = order.len();
            order.push(x);
        }
    };
    for &c in &view.constants {
        visit(c, &mut order, &mut new_of);
    }
    let mut head = 0;
    let mut next_seed = 0;
    while order.len() < n {
        if head == order.len() {
            while new_of[next_seed] != usize::MAX {
                next_seed += 1;
            }
            visit(next_seed, &mut order, &mut new_of);
        }
        while head < order.len() {
            let x = order[head];
            head += 1;
            for f in &view.unary {
                visit(f(x), &mut order, &mut new_of);
            }
            for f in &view.binary {
                for i in 0..head {
                    let y = order[i];
                    visit(f(x, y), &mut order, &mut new_of);
                    visit(f(y, x), &mut order, &mut new_of);
                }
            }
        }
    }
    new_of
}

/// The module transported along the bijection `perm: old → new`.
pub fn relabel_module(m: &Semimodule, perm: &[usize]) -> Semimodule {
    let n = m.size();
    let mut old_of = vec![0; n];
    for (x, &y) in perm.iter().enumerate() {
        old_of[y] = x;
    }
    let add = (0..n * n)
        .map(|i| perm[m.add(old_of[i / n], old_of[i % n])])
        .collect();
    let carrier = Monoid::from_table(n, add).expect("relabelled table is well formed");
    let relabel = |act: &Action| {
        Action::from_fn(act.base().clone(), n, |s, y| perm[act.act(s, old_of[y])])
            .expect("relabelled action is well formed")
    };
    Semimodule::new(carrier, m.left().map(relabel), m.right().map(relabel))
        .expect("relabelled module is well formed")
}

/// [`relabel_module`] along [`canonical_relabel`].
pub fn canonicalize(m: &Semimodule) -> Semimodule {
    let view = OpsView::module(m, m.left().is_some(), m.right().is_some());
    let perm = canonical_relabel(&view);
    relabel_module(m, &perm)
}

