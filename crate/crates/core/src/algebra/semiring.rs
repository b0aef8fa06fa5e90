use std::sync::Arc;

use super::Monoid;
use crate::error::{Error, Result};
use crate::report::LawReport;

/// A finite semiring on `0..size` with zero at 0 and one at 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semiring {
    size: usize,
    add: Arc<[usize]>,
    mul: Arc<[usize]>,
}

fn check_table(name: &str, size: usize, t: &[usize]) -> Result<()> {
    if t.len() != size * size {
        return Err(Error::MalformedTable(format!(
            "{name} table has {} entries, expected {}",
            t.len(),
            size * size
        )));
    }
    if let Some(i) = t.iter().position(|&v| v >= size) {
        return Err(Error::MalformedTable(format!(
            "{name}({}, {}) = {} is out of range",
            i / size,
            i % size,
            t[i]
        )));
    }
    Ok(())
}

impl Semiring {
    /// Builds a semiring from row-major tables. Only shape and range are
    /// checked here; see [`validate_semiring`] for the axioms.
    pub fn new(size: usize, add: Vec<usize>, mul: Vec<usize>) -> Result<Self> {
        if size < 2 {
            return Err(Error::MalformedTable(
                "a semiring needs distinct zero and one".into(),
            ));
        }
        check_table("add", size, &add)?;
        check_table("mul", size, &mul)?;
        Ok(Semiring {
            size,
            add: add.into(),
            mul: mul.into(),
        })
    }

    pub fn from_fns(
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let a = (0..size * size).map(|i| add(i / size, i % size)).collect();
        let m = (0..size * size).map(|i| mul(i / size, i % size)).collect();
        Semiring::new(size, a, m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn additive(&self) -> Monoid {
        Monoid::from_table(self.size, self.add.to_vec()).expect("checked on construction")
    }

    /// `k · 1`.
    pub fn natural(&self, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, 1))
    }
}

/// Checks the additive monoid, absorbing zero, multiplicative monoid and
/// distributivity, in that order.
pub fn validate_semiring(s: &Semiring) -> LawReport {
    let n = s.size();
    let additive = super::validate_monoid(&s.additive());
    if !additive.passed {
        return additive;
    }
    for a in 0..n {
        if s.mul(a, 0) != 0 {
            return LawReport::fail(
                "zero-absorbing",
                vec![a, 0],
                format!("{a} · 0 = {}", s.mul(a, 0)),
            );
        }
        if s.mul(0, a) != 0 {
            return LawReport::fail(
                "zero-absorbing",
                vec![0, a],
                format!("0 · {a} = {}", s.mul(0, a)),
            );
        }
    }
    for a in 0..n {
        if s.mul(1, a) != a || s.mul(a, 1) != a {
            return LawReport::fail(
                "mul-identity",
                vec![a],
                format!("1 · {a} = {}, {a} · 1 = {}", s.mul(1, a), s.mul(a, 1)),
            );
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let l = s.mul(s.mul(a, b), c);
                let r = s.mul(a, s.mul(b, c));
                if l != r {
                    return LawReport::fail(
                        "mul-associative",
                        vec![a, b, c],
                        format!("({a} · {b}) · {c} = {l} but {a} · ({b} · {c}) = {r}"),
                    );
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let l = s.mul(a, s.add(b, c));
                let r = s.add(s.mul(a, b), s.mul(a, c));
                if l != r {
                    return LawReport::fail(
                        "left-distributive",
                        vec![a, b, c],
                        format!("{a} · ({b} + {c}) = {l} but {a}·{b} + {a}·{c} = {r}"),
                    );
                }
                let l = s.mul(s.add(a, b), c);
                let r = s.add(s.mul(a, c), s.mul(b, c));
                if l != r {
                    return LawReport::fail(
                        "right-distributive",
                        vec![a, b, c],
                        format!("({a} + {b}) · {c} = {l} but {a}·{c} + {b}·{c} = {r}"),
                    );
                }
            }
        }
    }
    LawReport::pass()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absorbing_fault_reports_one_zero() {
        // B with mul(1,0) = 1
        let s = Semiring::new(2, vec![0, 1, 1, 1], vec![0, 0, 1, 1]).unwrap();
        let r = validate_semiring(&s);
        assert_eq!(r.law_id, "zero-absorbing");
        assert_eq!(r.witness, vec![1, 0]);
        assert_eq!(s.mul(1, 0), 1);
    }

    #[test]
    fn one_point_semiring_is_malformed() {
        assert!(Semiring::new(1, vec![0], vec![0]).is_err());
    }
}
