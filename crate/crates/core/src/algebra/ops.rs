//! A uniform view of finite algebras as operation lists, used for
//! homomorphism enumeration, isomorphism search and canonical relabelling.

use super::{Monoid, Semimodule, Semiring};

type Binary<'a> = Box<dyn Fn(usize, usize) -> usize + Sync + Send + 'a>;
type Unary<'a> = Box<dyn Fn(usize) -> usize + Sync + Send + 'a>;

/// Operations of a finite algebra. Two views are compatible when their
/// operation lists correspond position by position.
pub struct OpsView<'a> {
    pub size: usize,
    pub binary: Vec<Binary<'a>>,
    pub unary: Vec<Unary<'a>>,
    /// Elements every homomorphism must fix, paired by position.
    pub constants: Vec<usize>,
}

impl<'a> OpsView<'a> {
    pub fn monoid(m: &'a Monoid) -> Self {
        OpsView {
            size: m.size(),
            binary: vec![Box::new(move |a, b| m.add(a, b))],
            unary: Vec::new(),
            constants: vec![0],
        }
    }

    pub fn semiring(s: &'a Semiring) -> Self {
        OpsView {
            size: s.size(),
            binary: vec![
                Box::new(move |a, b| s.add(a, b)),
                Box::new(move |a, b| s.mul(a, b)),
            ],
            unary: Vec::new(),
            constants: vec![0, 1],
        }
    }

    /// Addition plus the chosen actions, one unary operation per scalar.
    pub fn module(m: &'a Semimodule, left: bool, right: bool) -> Self {
        let mut unary: Vec<Unary<'a>> = Vec::new();
        if left {
            let act = m.left().expect("left action requested");
            for s in 0..act.base().size() {
                unary.push(Box::new(move |x| act.act(s, x)));
            }
        }
        if right {
            let act = m.right().expect("right action requested");
            for s in 0..act.base().size() {
                unary.push(Box::new(move |x| act.act(s, x)));
            }
        }
        OpsView {
            size: m.size(),
            binary: vec![Box::new(move |a, b| m.add(a, b))],
            unary,
            constants: vec![0],
        }
    }

    /// Least subset-closure containing `seeds` and the constants.
    pub fn closure(&self, seeds: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.size];
        let mut members = Vec::new();
        let mut stack: Vec<usize> = self.constants.iter().chain(seeds).copied().collect();
        while let Some(a) = stack.pop() {
            if inside[a] {
                continue;
            }
            inside[a] = true;
            members.push(a);
            for f in &self.unary {
                stack.push(f(a));
            }
            for f in &self.binary {
                for &c in &members {
                    stack.push(f(a, c));
                    stack.push(f(c, a));
                }
            }
        }
        inside
    }

    /// Greedy generating set: repeatedly adds the least element not yet
    /// generated.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        loop {
            let inside = self.closure(&gens);
            match inside.iter().position(|&b| !b) {
                None => return gens,
                Some(x) => gens.push(x),
            }
        }
    }
}

const UNSET: usize = usize::MAX;

/// Incremental homomorphism builder: assigning `x ↦ y` propagates through
/// every operation and reports conflicts.
pub(crate) struct Extender<'v, 'a> {
    src: &'v OpsView<'a>,
    dst: &'v OpsView<'a>,
    img: Vec<usize>,
    trail: Vec<usize>,
    used: Option<Vec<bool>>,
}

impl<'v, 'a> Extender<'v, 'a> {
    /// Starts from the constants; `None` if they already conflict.
    pub fn new(src: &'v OpsView<'a>, dst: &'v OpsView<'a>, injective: bool) -> Option<Self> {
        let mut e = Extender {
            src,
            dst,
            img: vec![UNSET; src.size],
            trail: Vec::new(),
            used: injective.then(|| vec![false; dst.size]),
        };
        for (&c, &d) in src.constants.iter().zip(&dst.constants) {
            if !e.assign(c, d) {
                return None;
            }
        }
        Some(e)
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            if let Some(used) = &mut self.used {
                used[self.img[a]] = false;
            }
            self.img[a] = UNSET;
        }
    }

    pub fn image(&self, x: usize) -> Option<usize> {
        (self.img[x] != UNSET).then_some(self.img[x])
    }

    pub fn table(&self) -> Vec<usize> {
        self.img.clone()
    }

    /// Propagates `x ↦ y`. On `false` the caller must roll back.
    pub fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut work = vec![(x, y)];
        while let Some((a, b)) = work.pop() {
            if self.img[a] != UNSET {
                if self.img[a] != b {
                    return false;
                }
                continue;
            }
            if let Some(used) = &mut self.used {
                if used[b] {
                    return false;
                }
                used[b] = true;
            }
            self.img[a] = b;
            self.trail.push(a);
            for (f, g) in self.src.unary.iter().zip(&self.dst.unary) {
                work.push((f(a), g(b)));
            }
            for (f, g) in self.src.binary.iter().zip(&self.dst.binary) {
                for &c in &self.trail {
                    let d = self.img[c];
                    work.push((f(a, c), g(b, d)));
                    work.push((f(c, a), g(d, b)));
                }
            }
        }
        true
    }
}

/// All homomorphisms `src → dst` (injective ones only when asked), sorted.
/// Fails once more than `limit` have been found.
pub(crate) fn enumerate_homs(
    src: &OpsView<'_>,
    dst: &OpsView<'_>,
    injective: bool,
    limit: usize,
) -> Option<Vec<Vec<usize>>> {
    let gens = src.generators();
    let Some(base) = Extender::new(src, dst, injective) else {
        return Some(Vec::new());
    };
    if gens.is_empty() {
        return Some(vec![base.table()]);
    }
    let first = gens[0];
    let rest = &gens[1..];
    let branches = crate::par::map_range(dst.size, |y| {
        let mut e = Extender::new(src, dst, injective).expect("constants are consistent");
        let mut out = Vec::new();
        if e.assign(first, y) {
            let ok = recurse(&mut e, rest, &mut out, limit);
            if !ok {
                return None;
            }
        }
        Some(out)
    });
    let mut all = Vec::new();
    for b in branches {
        all.extend(b?);
        if all.len() > limit {
            return None;
        }
    }
    all.sort();
    Some(all)
}

fn recurse(e: &mut Extender<'_, '_>, gens: &[usize], out: &mut Vec<Vec<usize>>, limit: usize) -> bool {
    let Some((&g, rest)) = gens.split_first() else {
        out.push(e.table());
        return out.len() <= limit;
    };
    if e.image(g).is_some() {
        return recurse(e, rest, out, limit);
    }
    for y in 0..e.dst.size {
        let mark = e.mark();
        if e.assign(g, y) && !recurse(e, rest, out, limit) {
            return false;
        }
        e.rollback(mark);
    }
    true
}

/// First homomorphism found by the search, if any.
pub(crate) fn find_hom(src: &OpsView<'_>, dst: &OpsView<'_>, injective: bool) -> Option<Vec<usize>> {
    let gens = src.generators();
    let mut e = Extender::new(src, dst, injective)?;
    fn go(e: &mut Extender<'_, '_>, gens: &[usize]) -> bool {
        let Some((&g, rest)) = gens.split_first() else {
            return true;
        };
        if e.image(g).is_some() {
            return go(e, rest);
        }
        for y in 0..e.dst.size {
            let mark = e.mark();
            if e.assign(g, y) && go(e, rest) {
                return true;
            }
            e.rollback(mark);
        }
        false
    }
    go(&mut e, &gens).then(|| e.table())
}

/// The first `count` homomorphisms in depth-first order. Sequential, so the
/// selection is deterministic.
pub(crate) fn first_homs(src: &OpsView<'_>, dst: &OpsView<'_>, count: usize) -> Vec<Vec<usize>> {
    fn go(e: &mut Extender<'_, '_>, gens: &[usize], out: &mut Vec<Vec<usize>>, count: usize) {
        if out.len() >= count {
            return;
        }
        let Some((&g, rest)) = gens.split_first() else {
            out.push(e.table());
            return;
        };
        if e.image(g).is_some() {
            return go(e, rest, out, count);
        }
        for y in 0..e.dst.size {
            let mark = e.mark();
            if e.assign(g, y) {
                go(e, rest, out, count);
            }
            e.rollback(mark);
            if out.len() >= count {
                return;
            }
        }
    }
    let gens = src.generators();
    let mut out = Vec::new();
    if let Some(mut e) = Extender::new(src, dst, false) {
        go(&mut e, &gens, &mut out, count);
    }
    out
}
