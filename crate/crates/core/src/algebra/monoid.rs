use std::sync::Arc;

use super::Semiring;
use crate::error::{Error, Result};
use crate::report::LawReport;

/// How the addition of a [`Monoid`] is evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AddOp {
    /// Explicit `size × size` table, row-major.
    Table(Arc<[usize]>),
    /// The group `⊕ ℤ/d_i`; an element's index is its mixed-radix code with
    /// the first coordinate least significant.
    Coords(Arc<[usize]>),
    /// All functions from `len` labels into a semiring under pointwise
    /// addition; label 0 is the least significant base-`|S|` digit.
    Free { base: Arc<Semiring>, len: usize },
}

/// A finite commutative monoid on `0..size` with zero at index 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monoid {
    size: usize,
    op: AddOp,
}

impl Monoid {
    pub fn from_table(size: usize, table: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if table.len() != size * size {
            return Err(Error::MalformedTable(format!(
                "addition table has {} entries, expected {}",
                table.len(),
                size * size
            )));
        }
        if let Some(i) = table.iter().position(|&v| v >= size) {
            return Err(Error::MalformedTable(format!(
                "add({}, {}) = {} is out of range",
                i / size,
                i % size,
                table[i]
            )));
        }
        Ok(Monoid {
            size,
            op: AddOp::Table(table.into()),
        })
    }

    /// The one-point monoid.
    pub fn trivial() -> Self {
        Monoid {
            size: 1,
            op: AddOp::Table(vec![0].into()),
        }
    }

    /// `⊕ ℤ/d_i`. Factors equal to 1 are dropped.
    pub fn coords(moduli: &[usize]) -> Result<Self> {
        let moduli: Vec<usize> = moduli.iter().copied().filter(|&d| d != 1).collect();
        if moduli.contains(&0) {
            return Err(Error::MalformedTable("zero modulus".into()));
        }
        let size = moduli
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or(Error::SizeCapExceeded {
                needed: moduli.iter().map(|&d| d as u128).product(),
                cap: usize::MAX,
            })?;
        Ok(Monoid {
            size,
            op: AddOp::Coords(moduli.into()),
        })
    }

    /// All functions `0..len → S` with pointwise addition.
    pub fn free(base: Arc<Semiring>, len: usize) -> Result<Self> {
        let q = base.size() as u128;
        let needed = (0..len).try_fold(1u128, |acc, _| acc.checked_mul(q));
        match needed {
            Some(n) if n <= usize::MAX as u128 => Ok(Monoid {
                size: n as usize,
                op: AddOp::Free { base, len },
            }),
            _ => Err(Error::SizeCapExceeded {
                needed: u128::MAX,
                cap: usize::MAX,
            }),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn op(&self) -> &AddOp {
        &self.op
    }

    /// Moduli when the carrier is given in group coordinates.
    pub fn moduli(&self) -> Option<&[usize]> {
        match &self.op {
            AddOp::Coords(m) => Some(m),
            _ => None,
        }
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.op {
            AddOp::Table(t) => t[a * self.size + b],
            AddOp::Coords(moduli) => {
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut radix = 1;
                for &d in moduli.iter() {
                    let s = (a % d + b % d) % d;
                    out += s * radix;
                    radix *= d;
                    a /= d;
                    b /= d;
                }
                out
            }
            AddOp::Free { base, len } => {
                let q = base.size();
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut radix = 1;
                for _ in 0..*len {
                    out += base.add(a % q, b % q) * radix;
                    radix *= q;
                    a /= q;
                    b /= q;
                }
                out
            }
        }
    }

    /// `k · x`, by doubling.
    pub fn times(&self, k: usize, x: usize) -> usize {
        let (mut k, mut base, mut acc) = (k, x, 0);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn sum(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(0, |acc, x| self.add(acc, x))
    }

    /// Digits of `x` for coordinate and free carriers.
    pub fn digits(&self, x: usize) -> Vec<usize> {
        match &self.op {
            AddOp::Table(_) => vec![x],
            AddOp::Coords(moduli) => {
                let mut x = x;
                moduli
                    .iter()
                    .map(|&d| {
                        let c = x % d;
                        x /= d;
                        c
                    })
                    .collect()
            }
            AddOp::Free { base, len } => {
                let q = base.size();
                let mut x = x;
                (0..*len)
                    .map(|_| {
                        let c = x % q;
                        x /= q;
                        c
                    })
                    .collect()
            }
        }
    }

    /// Inverse of [`Monoid::digits`].
    pub fn from_digits(&self, digits: &[usize]) -> usize {
        let radices: Vec<usize> = match &self.op {
            AddOp::Table(_) => return digits[0],
            AddOp::Coords(m) => m.to_vec(),
            AddOp::Free { base, len } => vec![base.size(); *len],
        };
        let mut out = 0;
        let mut r = 1;
        for (d, q) in digits.iter().zip(radices) {
            out += (d % q) * r;
            r *= q;
        }
        out
    }

    /// The additive map from this coordinate carrier into `target` sending
    /// the `t`-th unit vector to `images[t]`. Each value is the value at
    /// one unit vector less plus that unit vector's image.
    pub fn extend_linearly(&self, target: &Monoid, images: &[usize]) -> Vec<usize> {
        let moduli = self.moduli().expect("linear extension needs a coordinate carrier");
        let mut out = vec![0; self.size];
        for x in 1..self.size {
            let (mut rest, mut stride) = (x, 1);
            let mut t = 0;
            while rest % moduli[t] == 0 {
                rest /= moduli[t];
                stride *= moduli[t];
                t += 1;
            }
            out[x] = target.add(out[x - stride], images[t]);
        }
        out
    }

    /// Full addition table.
    pub fn table(&self) -> Vec<usize> {
        match &self.op {
            AddOp::Table(t) => t.to_vec(),
            _ => (0..self.size * self.size)
                .map(|i| self.add(i / self.size, i % self.size))
                .collect(),
        }
    }

    /// Whether every element has an additive inverse.
    pub fn is_group(&self) -> bool {
        match &self.op {
            AddOp::Coords(_) => true,
            _ => (0..self.size).all(|x| (0..self.size).any(|y| self.add(x, y) == 0)),
        }
    }

    /// The additive inverse of `x`, if any.
    pub fn negate(&self, x: usize) -> Option<usize> {
        match &self.op {
            AddOp::Coords(moduli) => {
                let d: Vec<usize> = self
                    .digits(x)
                    .iter()
                    .zip(moduli.iter())
                    .map(|(&c, &m)| (m - c) % m)
                    .collect();
                Some(self.from_digits(&d))
            }
            _ => (0..self.size).find(|&y| self.add(x, y) == 0),
        }
    }

    /// Whether the monoid is correct by construction (coordinates, or a
    /// free carrier over a valid semiring), so that laws need no enumeration.
    pub(crate) fn structurally_valid(&self) -> bool {
        match &self.op {
            AddOp::Table(_) => false,
            AddOp::Coords(_) => true,
            AddOp::Free { base, .. } => validate_monoid(&base.additive()).passed,
        }
    }
}

/// Checks commutativity, associativity and the identity law by enumeration.
pub fn validate_monoid(m: &Monoid) -> LawReport {
    if m.structurally_valid() {
        return LawReport::pass();
    }
    let n = m.size();
    for a in 0..n {
        if m.add(a, 0) != a || m.add(0, a) != a {
            return LawReport::fail(
                "add-identity",
                vec![a],
                format!("{a} + 0 = {}, 0 + {a} = {}", m.add(a, 0), m.add(0, a)),
            );
        }
    }
    for a in 0..n {
        for b in 0..n {
            if m.add(a, b) != m.add(b, a) {
                return LawReport::fail(
                    "add-commutative",
                    vec![a, b],
                    format!("{a} + {b} = {} but {b} + {a} = {}", m.add(a, b), m.add(b, a)),
                );
            }
        }
    }
    let found = crate::par::find_first(n, |a| {
        for b in 0..n {
            let ab = m.add(a, b);
            for c in 0..n {
                let l = m.add(ab, c);
                let r = m.add(a, m.add(b, c));
                if l != r {
                    return Some((b, c, l, r));
                }
            }
        }
        None
    });
    if let Some((a, (b, c, l, r))) = found {
        return LawReport::fail(
            "add-associative",
            vec![a, b, c],
            format!("({a} + {b}) + {c} = {l} but {a} + ({b} + {c}) = {r}"),
        );
    }
    LawReport::pass()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coords_addition_wraps_each_factor() {
        let g = Monoid::coords(&[2, 3]).unwrap();
        assert_eq!(g.size(), 6);
        // (1,2) + (1,2) = (0,1)
        let x = g.from_digits(&[1, 2]);
        assert_eq!(g.digits(g.add(x, x)), vec![0, 1]);
        assert!(validate_monoid(&Monoid::from_table(6, g.table()).unwrap()).passed);
    }

    #[test]
    fn times_matches_repeated_addition() {
        let g = Monoid::coords(&[5]).unwrap();
        for k in 0..12 {
            let mut acc = 0;
            for _ in 0..k {
                acc = g.add(acc, 3);
            }
            assert_eq!(g.times(k, 3), acc);
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(matches!(
            Monoid::from_table(2, vec![0, 1, 1]),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            Monoid::from_table(2, vec![0, 1, 1, 2]),
            Err(Error::MalformedTable(_))
        ));
    }
}
