use std::sync::Arc;

use super::{Monoid, Semimodule, Semiring};
use crate::error::{Error, Result};
use crate::report::LawReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Monoid,
    Semiring,
    Linear,
}

/// Source or target of a [`StructureMap`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Monoid(Monoid),
    Semiring(Arc<Semiring>),
    Module(Arc<Semimodule>),
}

impl Structure {
    pub fn size(&self) -> usize {
        match self {
            Structure::Monoid(m) => m.size(),
            Structure::Semiring(s) => s.size(),
            Structure::Module(m) => m.size(),
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match self {
            Structure::Monoid(m) => m.add(a, b),
            Structure::Semiring(s) => s.add(a, b),
            Structure::Module(m) => m.add(a, b),
        }
    }

    /// Elements whose additive span together with any element covers the
    /// carrier, enough to test additivity.
    fn add_probes(&self) -> Vec<usize> {
        match self {
            Structure::Module(m) => probes(m.carrier()),
            Structure::Monoid(m) => probes(m),
            Structure::Semiring(s) => (0..s.size()).collect(),
        }
    }
}

pub(crate) fn probes(m: &Monoid) -> Vec<usize> {
    match m.moduli() {
        Some(moduli) => {
            let mut r = 1;
            moduli
                .iter()
                .map(|&d| {
                    let g = r;
                    r *= d;
                    g
                })
                .collect()
        }
        None => (0..m.size()).collect(),
    }
}

/// A table `source → target` claimed to preserve the structure of `kind`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMap {
    pub kind: MapKind,
    pub source: Structure,
    pub target: Structure,
    pub table: Vec<usize>,
}

fn additive_report(src: &Structure, dst: &Structure, f: &[usize]) -> LawReport {
    additive_check(
        src.size(),
        &src.add_probes(),
        &|a, b| src.add(a, b),
        &|a, b| dst.add(a, b),
        f,
    )
}

type AddFn<'a> = dyn Fn(usize, usize) -> usize + Sync + 'a;

fn additive_check(n: usize, probes: &[usize], sadd: &AddFn<'_>, dadd: &AddFn<'_>, f: &[usize]) -> LawReport {
    if f[0] != 0 {
        return LawReport::fail("preserve-zero", vec![0], format!("f(0) = {}", f[0]));
    }
    let found = crate::par::find_first(n, |a| {
        probes.iter().find_map(|&b| {
            let l = f[sadd(a, b)];
            let r = dadd(f[a], f[b]);
            (l != r).then_some((b, l, r))
        })
    });
    if let Some((a, (b, l, r))) = found {
        return LawReport::fail(
            "preserve-add",
            vec![a, b],
            format!("f({a} + {b}) = {l} but f({a}) + f({b}) = {r}"),
        );
    }
    LawReport::pass()
}

/// Linearity of `f` with respect to the actions present on both sides.
pub fn check_linear(src: &Semimodule, dst: &Semimodule, f: &[usize]) -> LawReport {
    if f.len() != src.size() || f.iter().any(|&y| y >= dst.size()) {
        return LawReport::fail("malformed-table", vec![], "map table does not fit source and target");
    }
    let r = additive_check(
        src.size(),
        &probes(src.carrier()),
        &|a, b| src.add(a, b),
        &|a, b| dst.add(a, b),
        f,
    );
    if !r.passed {
        return r;
    }
    actions_report(src, dst, f)
}

fn actions_report(src: &Semimodule, dst: &Semimodule, f: &[usize]) -> LawReport {
    if let (Some(a), Some(b)) = (src.left(), dst.left()) {
        if a.base() != b.base() {
            return LawReport::fail("base-mismatch", vec![], "left actions over different semirings");
        }
        for s in 0..a.base().size() {
            for x in 0..src.size() {
                let l = f[a.act(s, x)];
                let r = b.act(s, f[x]);
                if l != r {
                    return LawReport::fail(
                        "preserve-left-action",
                        vec![s, x],
                        format!("f({s}·{x}) = {l} but {s}·f({x}) = {r}"),
                    );
                }
            }
        }
    }
    if let (Some(a), Some(b)) = (src.right(), dst.right()) {
        if a.base() != b.base() {
            return LawReport::fail("base-mismatch", vec![], "right actions over different semirings");
        }
        for s in 0..a.base().size() {
            for x in 0..src.size() {
                let l = f[a.act(s, x)];
                let r = b.act(s, f[x]);
                if l != r {
                    return LawReport::fail(
                        "preserve-right-action",
                        vec![x, s],
                        format!("f({x}·{s}) = {l} but f({x})·{s} = {r}"),
                    );
                }
            }
        }
    }
    LawReport::pass()
}

/// Checks every preservation equation of the declared kind.
pub fn validate_map(f: &StructureMap) -> Result<LawReport> {
    match (f.kind, &f.source, &f.target) {
        (MapKind::Monoid, _, _) => {}
        (MapKind::Semiring, Structure::Semiring(_), Structure::Semiring(_)) => {}
        (MapKind::Linear, Structure::Module(_), Structure::Module(_)) => {}
        (kind, _, _) => {
            return Err(Error::KindMismatch(format!(
                "{kind:?} map between incompatible structures"
            )))
        }
    }
    if f.table.len() != f.source.size() {
        return Err(Error::MalformedTable(format!(
            "map table has {} entries, source has {}",
            f.table.len(),
            f.source.size()
        )));
    }
    if let Some(x) = f.table.iter().position(|&y| y >= f.target.size()) {
        return Err(Error::MalformedTable(format!(
            "f({x}) = {} is out of range",
            f.table[x]
        )));
    }
    let t = &f.table;
    let r = additive_report(&f.source, &f.target, t);
    if !r.passed {
        return Ok(r);
    }
    Ok(match (&f.source, &f.target) {
        (Structure::Semiring(s), Structure::Semiring(d)) if f.kind == MapKind::Semiring => {
            if t[1] != 1 {
                return Ok(LawReport::fail(
                    "preserve-one",
                    vec![1],
                    format!("f(1) = {}", t[1]),
                ));
            }
            for a in 0..s.size() {
                for b in 0..s.size() {
                    let l = t[s.mul(a, b)];
                    let r = d.mul(t[a], t[b]);
                    if l != r {
                        return Ok(LawReport::fail(
                            "preserve-mul",
                            vec![a, b],
                            format!("f({a} · {b}) = {l} but f({a}) · f({b}) = {r}"),
                        ));
                    }
                }
            }
            LawReport::pass()
        }
        (Structure::Module(s), Structure::Module(d)) if f.kind == MapKind::Linear => {
            actions_report(s, d, t)
        }
        _ => LawReport::pass(),
    })
}

/// A map between semimodules, stored as a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub source: Arc<Semimodule>,
    pub target: Arc<Semimodule>,
    pub table: Arc<[usize]>,
}

impl LinearMap {
    /// Range-checks the table; linearity is not checked (see [`LinearMap::check`]).
    pub fn new(source: Arc<Semimodule>, target: Arc<Semimodule>, table: Vec<usize>) -> Result<Self> {
        if table.len() != source.size() {
            return Err(Error::MalformedTable(format!(
                "map table has {} entries, source has {}",
                table.len(),
                source.size()
            )));
        }
        if let Some(x) = table.iter().position(|&y| y >= target.size()) {
            return Err(Error::MalformedTable(format!("f({x}) = {} is out of range", table[x])));
        }
        Ok(LinearMap {
            source,
            target,
            table: table.into(),
        })
    }

    pub fn from_fn(
        source: Arc<Semimodule>,
        target: Arc<Semimodule>,
        f: impl Fn(usize) -> usize + Sync + Send,
    ) -> Result<Self> {
        let table = crate::par::map_range(source.size(), f);
        LinearMap::new(source, target, table)
    }

    pub fn identity(x: &Arc<Semimodule>) -> Self {
        LinearMap {
            source: x.clone(),
            target: x.clone(),
            table: (0..x.size()).collect(),
        }
    }

    pub fn zero(source: &Arc<Semimodule>, target: &Arc<Semimodule>) -> Self {
        LinearMap {
            source: source.clone(),
            target: target.clone(),
            table: vec![0; source.size()].into(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if !same_object(&inner.target, &self.source) {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose: inner target has {} elements, outer source {}",
                inner.target.size(),
                self.source.size()
            )));
        }
        Ok(LinearMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            table: inner.table.iter().map(|&x| self.table[x]).collect(),
        })
    }

    pub fn check(&self) -> LawReport {
        check_linear(&self.source, &self.target, &self.table)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.size() != self.target.size() {
            return false;
        }
        let mut seen = vec![false; self.target.size()];
        self.table.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.table.len()];
        for (x, &y) in self.table.iter().enumerate() {
            inv[y] = x;
        }
        Some(LinearMap {
            source: self.target.clone(),
            target: self.source.clone(),
            table: inv.into(),
        })
    }

    pub fn is_identity(&self) -> bool {
        same_object(&self.source, &self.target)
            && self.table.iter().enumerate().all(|(i, &y)| i == y)
    }

    pub fn to_structure_map(&self) -> StructureMap {
        StructureMap {
            kind: MapKind::Linear,
            source: Structure::Module(self.source.clone()),
            target: Structure::Module(self.target.clone()),
            table: self.table.to_vec(),
        }
    }
}

/// Structural equality, short-circuiting on pointer identity.
pub fn same_object(a: &Arc<Semimodule>, b: &Arc<Semimodule>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
