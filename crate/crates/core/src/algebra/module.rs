use std::sync::Arc;

use super::{validate_semiring, Monoid, Semiring};
use crate::error::{Error, Result};
use crate::report::LawReport;

/// An action table of a semiring on a carrier, indexed `s * n + m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Action {
    base: Arc<Semiring>,
    table: Arc<[usize]>,
}

impl Action {
    pub fn new(base: Arc<Semiring>, table: Vec<usize>, carrier: usize) -> Result<Self> {
        let want = base.size() * carrier;
        if table.len() != want {
            return Err(Error::MalformedTable(format!(
                "action table has {} entries, expected {want}",
                table.len()
            )));
        }
        if let Some(i) = table.iter().position(|&v| v >= carrier) {
            return Err(Error::MalformedTable(format!(
                "action of {} on {} gives {}, out of range",
                i / carrier,
                i % carrier,
                table[i]
            )));
        }
        Ok(Action {
            base,
            table: table.into(),
        })
    }

    pub fn from_fn(
        base: Arc<Semiring>,
        carrier: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let table = (0..base.size() * carrier)
            .map(|i| f(i / carrier, i % carrier))
            .collect();
        Action::new(base, table, carrier)
    }

    pub fn base(&self) -> &Arc<Semiring> {
        &self.base
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn act(&self, s: usize, m: usize) -> usize {
        let n = self.table.len() / self.base.size();
        self.table[s * n + m]
    }
}

/// A commutative monoid with optional left and right semiring actions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semimodule {
    carrier: Monoid,
    left: Option<Action>,
    right: Option<Action>,
}

impl Semimodule {
    pub fn new(carrier: Monoid, left: Option<Action>, right: Option<Action>) -> Result<Self> {
        let n = carrier.size();
        for a in left.iter().chain(right.iter()) {
            if a.table.len() != a.base.size() * n {
                return Err(Error::MalformedTable(format!(
                    "action table has {} entries, expected {}",
                    a.table.len(),
                    a.base.size() * n
                )));
            }
        }
        Ok(Semimodule {
            carrier,
            left,
            right,
        })
    }

    /// Builds a semimodule from an addition table and optional action tables.
    pub fn from_tables(
        size: usize,
        add: Vec<usize>,
        left: Option<(Arc<Semiring>, Vec<usize>)>,
        right: Option<(Arc<Semiring>, Vec<usize>)>,
    ) -> Result<Self> {
        let carrier = Monoid::from_table(size, add)?;
        let left = left.map(|(b, t)| Action::new(b, t, size)).transpose()?;
        let right = right.map(|(b, t)| Action::new(b, t, size)).transpose()?;
        Semimodule::new(carrier, left, right)
    }

    /// A semimodule with no actions.
    pub fn bare(carrier: Monoid) -> Self {
        Semimodule {
            carrier,
            left: None,
            right: None,
        }
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn carrier(&self) -> &Monoid {
        &self.carrier
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.carrier.add(a, b)
    }

    pub fn left(&self) -> Option<&Action> {
        self.left.as_ref()
    }

    pub fn right(&self) -> Option<&Action> {
        self.right.as_ref()
    }

    pub fn act_left(&self, s: usize, m: usize) -> usize {
        self.left.as_ref().expect("no left action").act(s, m)
    }

    pub fn act_right(&self, m: usize, s: usize) -> usize {
        self.right.as_ref().expect("no right action").act(s, m)
    }

    pub fn left_base(&self) -> Option<&Arc<Semiring>> {
        self.left.as_ref().map(|a| a.base())
    }

    pub fn right_base(&self) -> Option<&Arc<Semiring>> {
        self.right.as_ref().map(|a| a.base())
    }

    pub fn with_left(mut self, left: Option<Action>) -> Self {
        self.left = left;
        self
    }

    pub fn with_right(mut self, right: Option<Action>) -> Self {
        self.right = right;
        self
    }

    /// Whether both actions are present and over `a`.
    pub fn is_bimodule_over(&self, a: &Semiring) -> bool {
        self.left_base().is_some_and(|b| **b == *a) && self.right_base().is_some_and(|b| **b == *a)
    }

    /// The regular bimodule of a semiring.
    pub fn regular(s: &Arc<Semiring>) -> Semimodule {
        let n = s.size();
        let left = Action::from_fn(s.clone(), n, |a, m| s.mul(a, m)).unwrap();
        let right = Action::from_fn(s.clone(), n, |a, m| s.mul(m, a)).unwrap();
        Semimodule {
            carrier: s.additive(),
            left: Some(left),
            right: Some(right),
        }
    }

    /// The one-point bimodule over `s`.
    pub fn zero(s: &Arc<Semiring>) -> Semimodule {
        let act = Action::new(s.clone(), vec![0; s.size()], 1).unwrap();
        Semimodule {
            carrier: Monoid::trivial(),
            left: Some(act.clone()),
            right: Some(act),
        }
    }
}

fn action_laws(m: &Semimodule, act: &Action, left: bool) -> LawReport {
    let s = act.base();
    let n = m.size();
    let k = s.size();
    let side = if left { "left" } else { "right" };
    let apply = |a: usize, x: usize| act.act(a, x);
    for x in 0..n {
        if apply(1, x) != x {
            return LawReport::fail(
                "unit-action",
                vec![x],
                format!("{side} action of 1 on {x} gives {}", apply(1, x)),
            );
        }
    }
    for x in 0..n {
        if apply(0, x) != 0 {
            return LawReport::fail(
                "zero-annihilates",
                vec![0, x],
                format!("{side} action of 0 on {x} gives {}", apply(0, x)),
            );
        }
    }
    for a in 0..k {
        if apply(a, 0) != 0 {
            return LawReport::fail(
                "zero-annihilates",
                vec![a, 0],
                format!("{side} action of {a} on 0 gives {}", apply(a, 0)),
            );
        }
    }
    for a in 0..k {
        for b in 0..k {
            // left: (ab)x = a(bx); right: x(ab) = (xa)b
            let prod = if left { s.mul(a, b) } else { s.mul(b, a) };
            for x in 0..n {
                let l = apply(prod, x);
                let r = apply(a, apply(b, x));
                if l != r {
                    let (w, d) = if left {
                        (vec![a, b, x], format!("({a}·{b})·{x} = {l} but {a}·({b}·{x}) = {r}"))
                    } else {
                        (vec![x, b, a], format!("{x}·({b}·{a}) = {l} but ({x}·{b})·{a} = {r}"))
                    };
                    return LawReport::fail("action-associative", w, d);
                }
            }
        }
    }
    // Additivity in the module argument; on coordinate carriers it suffices
    // to test against generators.
    let probes: Vec<usize> = match m.carrier().moduli() {
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
        None => (0..n).collect(),
    };
    for a in 0..k {
        for x in 0..n {
            for &y in &probes {
                let l = apply(a, m.add(x, y));
                let r = m.add(apply(a, x), apply(a, y));
                if l != r {
                    return LawReport::fail(
                        "action-additive",
                        vec![a, x, y],
                        format!("{side} action of {a} on {x} + {y} gives {l}, sum of actions {r}"),
                    );
                }
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            let ab = s.add(a, b);
            for x in 0..n {
                let l = apply(ab, x);
                let r = m.add(apply(a, x), apply(b, x));
                if l != r {
                    return LawReport::fail(
                        "scalar-additive",
                        vec![a, b, x],
                        format!("{side} action of {a} + {b} on {x} gives {l}, sum of actions {r}"),
                    );
                }
            }
        }
    }
    LawReport::pass()
}

/// Checks the carrier, every present action and, with two actions, the
/// bimodule compatibility `(s·m)·t = s·(m·t)`.
pub fn validate_semimodule(m: &Semimodule) -> LawReport {
    for a in m.left.iter().chain(m.right.iter()) {
        let r = validate_semiring(a.base());
        if !r.passed {
            return r.scoped("base");
        }
    }
    let r = super::validate_monoid(m.carrier());
    if !r.passed {
        return r;
    }
    if let Some(a) = &m.left {
        let r = action_laws(m, a, true);
        if !r.passed {
            return r;
        }
    }
    if let Some(a) = &m.right {
        let r = action_laws(m, a, false);
        if !r.passed {
            return r;
        }
    }
    if let (Some(l), Some(r)) = (&m.left, &m.right) {
        for s in 0..l.base().size() {
            for t in 0..r.base().size() {
                for x in 0..m.size() {
                    let lhs = r.act(t, l.act(s, x));
                    let rhs = l.act(s, r.act(t, x));
                    if lhs != rhs {
                        return LawReport::fail(
                            "bimodule-compatible",
                            vec![s, x, t],
                            format!("({s}·{x})·{t} = {lhs} but {s}·({x}·{t}) = {rhs}"),
                        );
                    }
                }
            }
        }
    }
    LawReport::pass()
}
