//! Builtin semirings and semimodules.

use std::sync::Arc;

use super::{Action, Monoid, Semimodule, Semiring};
use crate::error::{Error, Result};

fn at_least_two(name: &str, n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::BadParameter(format!("{name}({n}) needs a parameter of at least 2")))
    } else {
        Ok(())
    }
}

/// `{0, 1}` with `1 + 1 = 1`.
pub fn boolean() -> Arc<Semiring> {
    Arc::new(Semiring::from_fns(2, |a, b| a | b, |a, b| a & b).unwrap())
}

/// Integers modulo `n`.
pub fn zmod(n: usize) -> Result<Arc<Semiring>> {
    at_least_two("zmod", n)?;
    Ok(Arc::new(Semiring::from_fns(n, |a, b| (a + b) % n, |a, b| a * b % n)?))
}

/// `{0, …, k}` with saturating addition and multiplication.
pub fn truncated_nat(k: usize) -> Result<Arc<Semiring>> {
    at_least_two("truncated-nat", k)?;
    Ok(Arc::new(Semiring::from_fns(
        k + 1,
        |a, b| (a + b).min(k),
        |a, b| (a * b).min(k),
    )?))
}

/// A chain of `n` elements with join as addition and meet as product.
/// Index 0 is the bottom, index 1 the top, indices `2..n` run upwards.
pub fn chain_lattice(n: usize) -> Result<Arc<Semiring>> {
    at_least_two("chain-lattice", n)?;
    let rank = |i: usize| match i {
        0 => 0,
        1 => n - 1,
        i => i - 1,
    };
    let index = |r: usize| match r {
        0 => 0,
        r if r == n - 1 => 1,
        r => r + 1,
    };
    Ok(Arc::new(Semiring::from_fns(
        n,
        |a, b| index(rank(a).max(rank(b))),
        |a, b| index(rank(a).min(rank(b))),
    )?))
}

/// Index of each pair `(s, t)` in [`product`]: `(0,0)` first, `(1,1)`
/// second, the remaining pairs in lexicographic order.
pub fn product_index(n: usize, m: usize) -> Vec<(usize, usize)> {
    let mut pairs = vec![(0, 0), (1, 1)];
    for s in 0..n {
        for t in 0..m {
            if (s, t) != (0, 0) && (s, t) != (1, 1) {
                pairs.push((s, t));
            }
        }
    }
    pairs
}

/// Componentwise product semiring.
pub fn product(s: &Semiring, t: &Semiring) -> Arc<Semiring> {
    let pairs = product_index(s.size(), t.size());
    let m = t.size();
    let mut index = vec![0; s.size() * m];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        index[a * m + b] = i;
    }
    let op = |f: &dyn Fn(usize, usize, usize, usize) -> (usize, usize), x: usize, y: usize| {
        let (a, b) = pairs[x];
        let (c, d) = pairs[y];
        let (u, v) = f(a, b, c, d);
        index[u * m + v]
    };
    let n = pairs.len();
    Arc::new(
        Semiring::from_fns(
            n,
            |x, y| op(&|a, b, c, d| (s.add(a, c), t.add(b, d)), x, y),
            |x, y| op(&|a, b, c, d| (s.mul(a, c), t.mul(b, d)), x, y),
        )
        .unwrap(),
    )
}

/// `S^k` with componentwise actions of `S` on both sides; digit `i` of an
/// element's base-`|S|` expansion is its `i`-th coordinate.
pub fn power(s: &Arc<Semiring>, k: usize) -> Result<Semimodule> {
    let carrier = Monoid::free(s.clone(), k)?;
    let n = carrier.size();
    let act = |f: &dyn Fn(usize, usize) -> usize| {
        let c = &carrier;
        Action::from_fn(s.clone(), n, |a, x| {
            let d: Vec<usize> = c.digits(x).into_iter().map(|v| f(a, v)).collect();
            c.from_digits(&d)
        })
    };
    let left = act(&|a, v| s.mul(a, v))?;
    let right = act(&|a, v| s.mul(v, a))?;
    Semimodule::new(carrier, Some(left), Some(right))
}

/// Replaces the action on one side by the restriction of scalars along a
/// semiring map `kappa: base → old base`. With `kappa = None` the action is
/// dropped.
pub fn restrict(
    m: &Semimodule,
    left: bool,
    kappa: Option<(&Arc<Semiring>, &[usize])>,
) -> Result<Semimodule> {
    let old = if left { m.left() } else { m.right() };
    let new = match kappa {
        None => None,
        Some((base, map)) => {
            let old = old.ok_or_else(|| Error::MissingAction("nothing to restrict".into()))?;
            Some(Action::from_fn(base.clone(), m.size(), |s, x| old.act(map[s], x))?)
        }
    };
    Ok(if left {
        m.clone().with_left(new)
    } else {
        m.clone().with_right(new)
    })
}

/// A builtin structure by name.
#[derive(Clone, Debug)]
pub enum Fixture {
    Semiring(Arc<Semiring>),
    Module(Semimodule),
}

/// Parses names such as `boolean`, `zmod(4)`, `product(zmod(2),boolean)`,
/// `regular(truncated-nat(2))`, `power(zmod(2),2)` or `zero(boolean)`.
pub fn builtin_structure(name: &str) -> Result<Fixture> {
    let mut p = Parser { s: name.as_bytes(), pos: 0, src: name };
    let f = p.fixture()?;
    if p.pos != p.s.len() {
        return Err(Error::UnknownFixture(name.to_string()));
    }
    Ok(f)
}

/// A builtin semiring by name.
pub fn builtin_semiring(name: &str) -> Result<Arc<Semiring>> {
    match builtin_structure(name)? {
        Fixture::Semiring(s) => Ok(s),
        Fixture::Module(_) => Err(Error::KindMismatch(format!("`{name}` is a semimodule"))),
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn unknown(&self) -> Error {
        Error::UnknownFixture(self.src.to_string())
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'-')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        while self.pos < self.s.len() && self.s[self.pos] == b' ' {
            self.pos += 1;
        }
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            while self.pos < self.s.len() && self.s[self.pos] == b' ' {
                self.pos += 1;
            }
            Ok(())
        } else {
            Err(self.unknown())
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.ident().parse().map_err(|_| self.unknown())
    }

    fn semiring(&mut self) -> Result<Arc<Semiring>> {
        match self.fixture()? {
            Fixture::Semiring(s) => Ok(s),
            Fixture::Module(_) => Err(self.unknown()),
        }
    }

    fn fixture(&mut self) -> Result<Fixture> {
        let name = self.ident();
        let f = match name.as_str() {
            "boolean" => Fixture::Semiring(boolean()),
            "zmod" | "truncated-nat" | "chain-lattice" => {
                self.expect(b'(')?;
                let n = self.number()?;
                self.expect(b')')?;
                Fixture::Semiring(match name.as_str() {
                    "zmod" => zmod(n)?,
                    "truncated-nat" => truncated_nat(n)?,
                    _ => chain_lattice(n)?,
                })
            }
            "product" => {
                self.expect(b'(')?;
                let a = self.semiring()?;
                self.expect(b',')?;
                let b = self.semiring()?;
                self.expect(b')')?;
                Fixture::Semiring(product(&a, &b))
            }
            "regular" | "zero" => {
                self.expect(b'(')?;
                let a = self.semiring()?;
                self.expect(b')')?;
                Fixture::Module(if name == "regular" {
                    Semimodule::regular(&a)
                } else {
                    Semimodule::zero(&a)
                })
            }
            "power" => {
                self.expect(b'(')?;
                let a = self.semiring()?;
                self.expect(b',')?;
                let k = self.number()?;
                self.expect(b')')?;
                Fixture::Module(power(&a, k)?)
            }
            _ => return Err(self.unknown()),
        };
        Ok(f)
    }
}

/// Semirings used throughout the test suites.
pub fn semiring_fixtures() -> Vec<(String, Arc<Semiring>)> {
    let mut out: Vec<(String, Arc<Semiring>)> = vec![("boolean".into(), boolean())];
    for n in 2..=6 {
        out.push((format!("zmod({n})"), zmod(n).unwrap()));
    }
    for k in 2..=4 {
        out.push((format!("truncated-nat({k})"), truncated_nat(k).unwrap()));
    }
    for n in 2..=4 {
        out.push((format!("chain-lattice({n})"), chain_lattice(n).unwrap()));
    }
    let z2 = zmod(2).unwrap();
    let z3 = zmod(3).unwrap();
    let b = boolean();
    out.push(("product(zmod(2),zmod(2))".into(), product(&z2, &z2)));
    out.push(("product(zmod(2),zmod(3))".into(), product(&z2, &z3)));
    out.push(("product(boolean,zmod(2))".into(), product(&b, &z2)));
    out.push(("product(boolean,boolean)".into(), product(&b, &b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{validate_semimodule, validate_semiring};

    #[test]
    fn named_fixtures_parse() {
        for name in ["boolean", "zmod(4)", "product(zmod(2), boolean)", "power(zmod(3),2)"] {
            builtin_structure(name).unwrap();
        }
        assert!(matches!(builtin_structure("zmod(1)"), Err(Error::BadParameter(_))));
        assert!(matches!(builtin_structure("field(7)"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn chain_lattice_orders_top_at_one() {
        let c = chain_lattice(3).unwrap();
        assert!(validate_semiring(&c).passed);
        assert_eq!(c.add(2, 1), 1);
        assert_eq!(c.mul(2, 1), 2);
        assert_eq!(c.add(2, 0), 2);
    }

    #[test]
    fn power_modules_validate() {
        let m = power(&zmod(2).unwrap(), 2).unwrap();
        assert_eq!(m.size(), 4);
        assert!(validate_semimodule(&m).passed);
        let b = power(&boolean(), 3).unwrap();
        assert_eq!(b.size(), 8);
        assert!(validate_semimodule(&b).passed);
    }
}
