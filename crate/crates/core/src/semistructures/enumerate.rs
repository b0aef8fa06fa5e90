use std::sync::Arc;

use super::{
    check_semicounital_semicoring, check_semiunital_semiring, SemicounitalSemicoring, SemiunitalSemiring,
};
use crate::algebra::{hom_set, LinearMap, Semimodule, Sides};
use crate::congruence::is_cancellative;
use crate::error::{Error, Result};
use crate::variety::Variety;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    Semiring,
    Semicoring,
}

#[derive(Clone, Debug)]
pub enum Structures {
    Semirings(Vec<SemiunitalSemiring>),
    Semicorings(Vec<SemicounitalSemicoring>),
}

impl Structures {
    pub fn len(&self) -> usize {
        match self {
            Structures::Semirings(v) => v.len(),
            Structures::Semicorings(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Every `(μ, η)` or `(Δ, ε)` on `carrier` passing its checker, in
/// lexicographic order of the component tables. Base and carrier must be
/// cancellative; more than `cap` candidate pairs is an error.
pub fn enumerate_structures(
    v: &Arc<Variety>,
    carrier: &Arc<Semimodule>,
    kind: StructureKind,
    cap: usize,
) -> Result<Structures> {
    v.require(carrier)?;
    if !is_cancellative(v.unit()) || !is_cancellative(carrier) {
        return Err(Error::NotCancellative("base and carrier must be cancellative".into()));
    }
    let i = v.unit();
    let cc = v.obj(carrier, carrier)?;
    let (firsts, seconds) = match kind {
        StructureKind::Semiring => (
            hom_set(&cc, carrier, Sides::BOTH, cap)?,
            hom_set(i, carrier, Sides::BOTH, cap)?,
        ),
        StructureKind::Semicoring => (
            hom_set(carrier, &cc, Sides::BOTH, cap)?,
            hom_set(carrier, i, Sides::BOTH, cap)?,
        ),
    };
    let total = firsts.len() as u128 * seconds.len() as u128;
    if total > cap as u128 {
        return Err(Error::SizeCapExceeded { needed: total, cap });
    }
    let k = seconds.len();
    let found = crate::par::map_range(firsts.len() * k, |t| -> Result<Option<Candidate>> {
        let (f, s) = (&firsts[t / k], &seconds[t % k]);
        Ok(match kind {
            StructureKind::Semiring => {
                let mu = LinearMap::new(cc.clone(), carrier.clone(), f.clone())?;
                let eta = LinearMap::new(i.clone(), carrier.clone(), s.clone())?;
                let x = SemiunitalSemiring::new(v.clone(), carrier.clone(), mu, eta)?;
                check_semiunital_semiring(&x, false)?.passed.then_some(Candidate::Ring(x))
            }
            StructureKind::Semicoring => {
                let delta = LinearMap::new(carrier.clone(), cc.clone(), f.clone())?;
                let eps = LinearMap::new(carrier.clone(), i.clone(), s.clone())?;
                let x = SemicounitalSemicoring::new(v.clone(), carrier.clone(), delta, eps)?;
                check_semicounital_semicoring(&x, false)?.passed.then_some(Candidate::Coring(x))
            }
        })
    });
    let found: Vec<Candidate> = found.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    Ok(match kind {
        StructureKind::Semiring => Structures::Semirings(
            found.into_iter().filter_map(|c| if let Candidate::Ring(x) = c { Some(x) } else { None }).collect(),
        ),
        StructureKind::Semicoring => Structures::Semicorings(
            found.into_iter().filter_map(|c| if let Candidate::Coring(x) = c { Some(x) } else { None }).collect(),
        ),
    })
}

enum Candidate {
    Ring(SemiunitalSemiring),
    Coring(SemicounitalSemicoring),
}
