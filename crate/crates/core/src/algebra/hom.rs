use std::collections::HashMap;
use std::sync::Arc;

use super::ops::{enumerate_homs, first_homs, OpsView};
use super::{Action, Monoid, Semimodule};
use crate::error::{Error, Result};

/// Which actions a homomorphism must respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sides {
    pub left: bool,
    pub right: bool,
}

impl Sides {
    pub const NONE: Sides = Sides { left: false, right: false };
    pub const LEFT: Sides = Sides { left: true, right: false };
    pub const RIGHT: Sides = Sides { left: false, right: true };
    pub const BOTH: Sides = Sides { left: true, right: true };

    /// The actions present on both modules.
    pub fn common(a: &Semimodule, b: &Semimodule) -> Sides {
        Sides {
            left: a.left().is_some() && b.left().is_some(),
            right: a.right().is_some() && b.right().is_some(),
        }
    }
}

fn check_sides(src: &Semimodule, dst: &Semimodule, sides: Sides) -> Result<()> {
    if sides.left {
        match (src.left_base(), dst.left_base()) {
            (Some(a), Some(b)) if a == b => {}
            (Some(_), Some(_)) => return Err(Error::BaseMismatch("left actions differ in base".into())),
            _ => return Err(Error::MissingAction("left action required on both modules".into())),
        }
    }
    if sides.right {
        match (src.right_base(), dst.right_base()) {
            (Some(a), Some(b)) if a == b => {}
            (Some(_), Some(_)) => return Err(Error::BaseMismatch("right actions differ in base".into())),
            _ => return Err(Error::MissingAction("right action required on both modules".into())),
        }
    }
    Ok(())
}

/// A generating set of `m` under addition and the chosen actions.
pub fn module_generators(m: &Semimodule, sides: Sides) -> Vec<usize> {
    OpsView::module(m, sides.left, sides.right).generators()
}

/// All maps `src → dst` preserving zero, addition and the chosen actions,
/// in lexicographic order of their tables. More than `limit` maps is an error.
pub fn hom_set(src: &Semimodule, dst: &Semimodule, sides: Sides, limit: usize) -> Result<Vec<Vec<usize>>> {
    check_sides(src, dst, sides)?;
    let s = OpsView::module(src, sides.left, sides.right);
    let d = OpsView::module(dst, sides.left, sides.right);
    enumerate_homs(&s, &d, false, limit).ok_or(Error::SizeCapExceeded {
        needed: limit as u128 + 1,
        cap: limit,
    })
}

/// Up to `count` maps `src → dst` preserving the chosen actions, the first
/// ones in depth-first order.
pub fn hom_sample(src: &Semimodule, dst: &Semimodule, sides: Sides, count: usize) -> Result<Vec<Vec<usize>>> {
    check_sides(src, dst, sides)?;
    let s = OpsView::module(src, sides.left, sides.right);
    let d = OpsView::module(dst, sides.left, sides.right);
    Ok(first_homs(&s, &d, count))
}

/// `Hom_T(N, G)` as a commutative monoid of right-linear maps, with the
/// right action `(f·s)(n) = f(s·n)` induced by a left action on `N`.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: Arc<Semimodule>,
    pub maps: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl HomModule {
    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.index.get(map).copied()
    }

    pub fn size(&self) -> usize {
        self.maps.len()
    }
}

pub fn hom_module(n: &Semimodule, g: &Semimodule, limit: usize) -> Result<HomModule> {
    match (n.right_base(), g.right_base()) {
        (Some(a), Some(b)) if a == b => {}
        (Some(_), Some(_)) => return Err(Error::BaseMismatch("N and G are over different semirings".into())),
        _ => return Err(Error::MissingAction("N and G must be right semimodules".into())),
    }
    let maps = hom_set(n, g, Sides::RIGHT, limit)?;
    let index: HashMap<Vec<usize>, usize> =
        maps.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
    let k = maps.len();
    let lookup = |f: Vec<usize>| *index.get(&f).expect("hom-set closed under the operation");
    let add: Vec<usize> = crate::par::map_range(k * k, |i| {
        let (f, h) = (&maps[i / k], &maps[i % k]);
        lookup(f.iter().zip(h).map(|(&x, &y)| g.add(x, y)).collect())
    });
    let carrier = Monoid::from_table(k, add)?;
    let right = match n.left() {
        Some(act) => {
            let base = act.base().clone();
            let table = (0..base.size() * k)
                .map(|i| {
                    let (s, f) = (i / k, &maps[i % k]);
                    lookup((0..n.size()).map(|x| f[act.act(s, x)]).collect())
                })
                .collect();
            Some(Action::new(base, table, k)?)
        }
        None => None,
    };
    let module = Arc::new(Semimodule::new(carrier, None, right)?);
    Ok(HomModule { module, maps, index })
}
