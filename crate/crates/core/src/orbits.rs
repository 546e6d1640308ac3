//! Closed `K`-orbit counts on `G/P` and on double flag varieties
//! `G/P₁ × G/P₂`.
//!
//! Closed orbits on `G/P_J` are in bijection with `W_K \ W_G^θ / W_J^θ`; for
//! inner (equal-rank) involutions θ acts trivially on `W_G`, so this is the
//! plain double-coset space `W_K \ W_G / W_J`. On the product the count is
//! the product of the two factor counts.

use crate::error::{Error, Result};
use crate::rootsys::RootDatum;
use crate::sympair::{cartan_decomposition, CartanDecomposition, InvolutionKind, InvolutionSpec};
use crate::weyl::{self, DEFAULT_GROUP_GUARD};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCountReport {
    pub j1: Vec<usize>,
    pub j2: Vec<usize>,
    pub count1: usize,
    pub count2: usize,
    pub product: u128,
    pub equal_rank: bool,
}

/// `#(W_K \ W_G / W_J)` with `W_K = W(Δ_k)`.
pub fn count_closed_orbits_single(dec: &CartanDecomposition<'_>, j: &[usize]) -> Result<usize> {
    count_closed_orbits_single_guarded(dec, j, DEFAULT_GROUP_GUARD)
}

pub fn count_closed_orbits_single_guarded(
    dec: &CartanDecomposition<'_>,
    j: &[usize],
    guard: u128,
) -> Result<usize> {
    Ok(weyl::count_double_cosets(dec.base(), dec.compact_simple(), j, guard)?.count)
}

pub fn count_closed_orbits_double(
    dec: &CartanDecomposition<'_>,
    j1: &[usize],
    j2: &[usize],
) -> Result<OrbitCountReport> {
    count_closed_orbits_double_guarded(dec, j1, j2, DEFAULT_GROUP_GUARD)
}

pub fn count_closed_orbits_double_guarded(
    dec: &CartanDecomposition<'_>,
    j1: &[usize],
    j2: &[usize],
    guard: u128,
) -> Result<OrbitCountReport> {
    let j1 = weyl::normalize_subset(dec.base(), j1)?;
    let j2 = weyl::normalize_subset(dec.base(), j2)?;
    let count1 = count_closed_orbits_single_guarded(dec, &j1, guard)?;
    let count2 = if j2 == j1 {
        count1
    } else {
        count_closed_orbits_single_guarded(dec, &j2, guard)?
    };
    Ok(OrbitCountReport {
        j1,
        j2,
        count1,
        count2,
        product: count1 as u128 * count2 as u128,
        equal_rank: true,
    })
}

/// Entry point from a raw involution: refuses outer involutions, whose
/// `W_K` cannot be read off the grading.
pub fn count_closed_orbits_for(
    datum: &RootDatum,
    spec: &InvolutionSpec,
    j1: &[usize],
    j2: &[usize],
) -> Result<OrbitCountReport> {
    if spec.kind == InvolutionKind::Outer {
        spec.validate(datum)?;
        return Err(Error::OuterNotSupported);
    }
    let dec = cartan_decomposition(datum, spec)?;
    count_closed_orbits_double(&dec, j1, j2)
}

/// `J ∩ σ(J)`: the subset defining the largest θ-stable parabolic inside
/// `P_J`.
pub fn theta_stable_reduction(
    datum: &RootDatum,
    j: &[usize],
    sigma: &[usize],
) -> Result<Vec<usize>> {
    weyl::validate_diagram_automorphism(datum, sigma)?;
    let j = weyl::normalize_subset(datum, j)?;
    Ok(j.iter()
        .copied()
        .filter(|&i| j.contains(&sigma[i]))
        .collect())
}
