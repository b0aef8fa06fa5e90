use std::sync::Arc;

use super::{check_semiring_map, SemicounitalSemicoring};
use crate::algebra::fixtures::restrict;
use crate::algebra::{Semimodule, Semiring};
use crate::error::Result;
use crate::tensor::{factor_into, tensor};
use crate::variety::Variety;

/// `𝒞 = A ⊠_B A` for a semiring map `κ: B → A`, where `A` is the base of
/// `v`, with `Δ(a ⊠ ã) = (a ⊠ 1) ⊠_A (1 ⊠ ã)` and `ε(a ⊠ ã) = aã`.
pub fn sweedler_semicoring(v: Arc<Variety>, b: &Arc<Semiring>, kappa: &[usize]) -> Result<SemicounitalSemicoring> {
    let a = v.base().clone();
    check_semiring_map(b, &a, kappa)?;
    let reg = Semimodule::regular(&a);
    let left = Arc::new(restrict(&reg, false, Some((b, kappa)))?);
    let right = Arc::new(restrict(&reg, true, Some((b, kappa)))?);
    let t = tensor(&left, &right)?;
    let c = t.carrier.clone();
    let cc = v.tensor(&c, &c)?;
    let delta = factor_into(&t, &cc.carrier, |x, y| cc.tau(t.tau(x, 1), t.tau(1, y)))?;
    let epsilon = factor_into(&t, v.unit(), |x, y| a.mul(x, y))?;
    SemicounitalSemicoring::new(v, c, delta, epsilon)
}
