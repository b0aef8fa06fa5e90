//! Finite abelian groups: quotients of `⊕ ℤ/d_i` by relation subgroups and
//! coordinates for groups given by tables.
//!
//! Quotients are computed one prime at a time with a Smith normal form over
//! `ℤ/p^a`, which is a local ring, so a pivot of minimal valuation divides
//! every other entry.

use super::Monoid;
use crate::error::{Error, Result};

/// `(⊕ ℤ/orders[i]) / ⟨relations⟩` in invariant-factor coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianQuotient {
    /// Cyclic prime-power factors, grouped by ascending prime.
    pub moduli: Vec<usize>,
    /// Coordinates of the image of each original generator.
    pub gen_images: Vec<Vec<usize>>,
    /// For each factor, coefficients on the original generators whose
    /// combination maps to that factor's unit vector.
    pub lifts: Vec<Vec<usize>>,
}

impl AbelianQuotient {
    /// Coordinates of `Σ coeffs[i] · e_i`.
    pub fn image(&self, coeffs: &[usize]) -> Vec<usize> {
        let mut out = vec![0usize; self.moduli.len()];
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (t, o) in out.iter_mut().enumerate() {
                let d = self.moduli[t] as u128;
                *o = ((*o as u128 + c as u128 * self.gen_images[i][t] as u128) % d) as usize;
            }
        }
        out
    }

    pub fn order(&self) -> u128 {
        self.moduli.iter().map(|&d| d as u128).product()
    }
}

fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a as u128, b as u128) as usize * b
}

fn mod_inverse(a: u128, m: u128) -> u128 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u128
}

fn valuation(x: u128, p: u128) -> u32 {
    let mut x = x;
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Quotient of `⊕ ℤ/orders[i]` by the subgroup generated by `relations`
/// (integer vectors of length `orders.len()`).
pub fn abelian_quotient(orders: &[usize], relations: &[Vec<i64>]) -> AbelianQuotient {
    let k = orders.len();
    let exponent = orders.iter().fold(1usize, |acc, &d| lcm(acc, d.max(1)));
    let mut moduli = Vec::new();
    let mut gen_images: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut lifts = Vec::new();

    for (p, a) in factorize(exponent) {
        let pu = p as u128;
        let q = pu.pow(a);
        let ppow = |v: u32| pu.pow(v);
        let red = |x: i64| (x as i128).rem_euclid(q as i128) as u128;

        let mut rows: Vec<Vec<u128>> = Vec::new();
        for (i, &d) in orders.iter().enumerate() {
            let v = valuation(d.max(1) as u128, pu).min(a);
            if v < a {
                let mut row = vec![0u128; k];
                row[i] = ppow(v);
                rows.push(row);
            }
        }
        for rel in relations {
            let row: Vec<u128> = rel.iter().map(|&x| red(x)).collect();
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        }

        // Column operations are tracked as x ↦ xV with V·Vinv = 1.
        let mut v = identity(k);
        let mut vinv = identity(k);
        let mut vals = Vec::new();
        let mut t = 0;
        while t < k && t < rows.len() {
            let mut best: Option<(u32, usize, usize)> = None;
            for (i, row) in rows.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 {
                        let val = valuation(x, pu);
                        if best.is_none_or(|(b, _, _)| val < b) {
                            best = Some((val, i, j));
                        }
                    }
                }
            }
            let Some((val, i, j)) = best else { break };
            rows.swap(i, t);
            if j != t {
                for row in rows.iter_mut() {
                    row.swap(j, t);
                }
                for row in v.iter_mut() {
                    row.swap(j, t);
                }
                vinv.swap(j, t);
            }
            let pv = ppow(val);
            let unit = rows[t][t] / pv;
            let uinv = mod_inverse(unit % q, q);
            for x in rows[t].iter_mut() {
                *x = *x * uinv % q;
            }
            let pivot_row = rows[t].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != t && row[t] != 0 {
                    let c = row[t] / pv;
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = (*x + q - c * y % q) % q;
                    }
                }
            }
            for j in t + 1..k {
                let c = rows[t][j] / pv;
                if c == 0 {
                    continue;
                }
                rows[t][j] = 0;
                for row in v.iter_mut() {
                    row[j] = (row[j] + q - c * row[t] % q) % q;
                }
                let src = vinv[j].clone();
                for (x, y) in vinv[t].iter_mut().zip(src) {
                    *x = (*x + c * y) % q;
                }
            }
            vals.push(val);
            t += 1;
        }
        while vals.len() < k {
            vals.push(a);
        }

        let crt = {
            let rest = (exponent as u128) / q;
            if rest == 1 {
                1
            } else {
                rest * mod_inverse(rest % q, q) % exponent as u128
            }
        };
        for (t, &val) in vals.iter().enumerate() {
            if val == 0 {
                continue;
            }
            let d = ppow(val);
            moduli.push(d as usize);
            for i in 0..k {
                gen_images[i].push((v[i][t] % d) as usize);
            }
            lifts.push(
                vinv[t]
                    .iter()
                    .map(|&c| (c * crt % exponent as u128) as usize)
                    .collect(),
            );
        }
    }
    AbelianQuotient {
        moduli,
        gen_images,
        lifts,
    }
}

fn identity(k: usize) -> Vec<Vec<u128>> {
    (0..k)
        .map(|i| (0..k).map(|j| u128::from(i == j)).collect())
        .collect()
}

/// Coordinates identifying a finite group with `⊕ ℤ/moduli[t]`.
#[derive(Clone, Debug)]
pub struct GroupBasis {
    pub moduli: Vec<usize>,
    /// Element for each mixed-radix code, and code for each element.
    /// `None` when the group is already in coordinates.
    tables: Option<(Vec<usize>, Vec<usize>)>,
}

impl GroupBasis {
    /// Decomposes a monoid that is a group.
    pub fn of(m: &Monoid) -> Result<GroupBasis> {
        if let Some(moduli) = m.moduli() {
            return Ok(GroupBasis {
                moduli: moduli.to_vec(),
                tables: None,
            });
        }
        if !m.is_group() {
            return Err(Error::NotCancellative(
                "additive monoid is not a group".into(),
            ));
        }
        let n = m.size();
        // Greedy generators; each element gets a coefficient vector on them.
        let mut gens: Vec<usize> = Vec::new();
        let mut vec_of: Vec<Option<Vec<i64>>> = vec![None; n];
        vec_of[0] = Some(Vec::new());
        let mut order = vec![0usize];
        let mut relations: Vec<Vec<i64>> = Vec::new();
        while let Some(g) = (0..n).find(|&x| vec_of[x].is_none()) {
            gens.push(g);
            let k = gens.len();
            for v in vec_of.iter_mut().flatten() {
                v.resize(k, 0);
            }
            for r in relations.iter_mut() {
                r.resize(k, 0);
            }
            // Re-run the closure from scratch with the enlarged generator set.
            for x in vec_of.iter_mut() {
                *x = None;
            }
            vec_of[0] = Some(vec![0; k]);
            order = vec![0];
            relations.clear();
            let mut head = 0;
            while head < order.len() {
                let x = order[head];
                head += 1;
                let vx = vec_of[x].clone().unwrap();
                for (i, &gi) in gens.iter().enumerate() {
                    let y = m.add(x, gi);
                    let mut vy = vx.clone();
                    vy[i] += 1;
                    match &vec_of[y] {
                        None => {
                            vec_of[y] = Some(vy);
                            order.push(y);
                        }
                        Some(existing) => {
                            let rel: Vec<i64> =
                                vy.iter().zip(existing).map(|(a, b)| a - b).collect();
                            if rel.iter().any(|&c| c != 0) {
                                relations.push(rel);
                            }
                        }
                    }
                }
            }
        }
        let k = gens.len();
        let orders = vec![n; k];
        let quotient = abelian_quotient(&orders, &relations);
        let coords = Monoid::coords(&quotient.moduli)?;
        if coords.size() != n {
            return Err(Error::NotCancellative(format!(
                "group decomposition has {} elements, carrier has {n}",
                coords.size()
            )));
        }
        let mut to_code = vec![0usize; n];
        let mut to_elem = vec![usize::MAX; n];
        for x in 0..n {
            let v: Vec<usize> = vec_of[x]
                .as_ref()
                .unwrap()
                .iter()
                .map(|&c| c.rem_euclid(n as i64) as usize)
                .collect();
            let code = coords.from_digits(&quotient.image(&v));
            if to_elem[code] != usize::MAX {
                return Err(Error::NotCancellative("group decomposition is not injective".into()));
            }
            to_code[x] = code;
            to_elem[code] = x;
        }
        Ok(GroupBasis {
            moduli: quotient.moduli,
            tables: Some((to_elem, to_code)),
        })
    }

    pub fn size(&self) -> usize {
        self.moduli.iter().product()
    }

    pub fn code_of(&self, x: usize) -> usize {
        match &self.tables {
            None => x,
            Some((_, to_code)) => to_code[x],
        }
    }

    pub fn element_of(&self, code: usize) -> usize {
        match &self.tables {
            None => code,
            Some((to_elem, _)) => to_elem[code],
        }
    }

    pub fn coords_of(&self, x: usize) -> Vec<usize> {
        let mut c = self.code_of(x);
        self.moduli
            .iter()
            .map(|&d| {
                let r = c % d;
                c /= d;
                r
            })
            .collect()
    }

    pub fn element_of_coords(&self, coords: &[usize]) -> usize {
        let mut code = 0;
        let mut r = 1;
        for (c, &d) in coords.iter().zip(&self.moduli) {
            code += (c % d) * r;
            r *= d;
        }
        self.element_of(code)
    }

    /// The element with coordinate 1 at `t` and 0 elsewhere.
    pub fn basis_element(&self, t: usize) -> usize {
        let r: usize = self.moduli[..t].iter().product();
        self.element_of(r)
    }

    /// Invariant factors sorted, for isomorphism comparison.
    pub fn invariants(&self) -> Vec<usize> {
        let mut v = self.moduli.clone();
        v.sort_unstable();
        v
    }
}
