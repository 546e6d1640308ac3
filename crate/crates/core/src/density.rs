//! Root-level check of the parabolic-pair condition: `Ψ₁ ∪ Ψ₂ = Δ`
//! (`p₁ + p₂ = g`, i.e. `P₁P₂` dense) and `Ψ₁ ∩ Ψ₂` a parabolic subset of
//! `Δ_k`. Includes the two explicit Hermitian constructions and the
//! exhaustive search that checks they are the only solutions.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parabolic::{self, is_parabolic_in_subsystem, ParabolicSubset};
use crate::rootset::RootSet;
use crate::sympair::{CartanDecomposition, Sign};

/// Limits for the exhaustive pair search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Maximum number of parabolic subsets to enumerate.
    pub parabolic_guard: u128,
    /// Maximum number of ordered pairs to test.
    pub pair_guard: u128,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            parabolic_guard: parabolic::DEFAULT_PARABOLIC_GUARD,
            pair_guard: 100_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub sum_is_g: bool,
    pub intersection_in_k: bool,
    pub q_parabolic: bool,
    pub satisfied: bool,
    pub q_roots: RootSet,
}

fn check_same_datum(dec: &CartanDecomposition<'_>, p: &ParabolicSubset) -> Result<()> {
    let ty = dec.base().cartan_type();
    if p.cartan_type() != ty {
        return Err(Error::DatumMismatch {
            left: ty.to_string(),
            right: p.cartan_type().to_string(),
        });
    }
    Ok(())
}

fn evaluate(dec: &CartanDecomposition<'_>, a: &RootSet, b: &RootSet) -> ConditionReport {
    let sum_is_g = a.covers_with(b);
    let q_roots = a.intersection(b);
    let intersection_in_k = q_roots.is_subset(dec.delta_k());
    let q_parabolic =
        intersection_in_k && is_parabolic_in_subsystem(dec.base(), &q_roots, dec.delta_k());
    ConditionReport {
        sum_is_g,
        intersection_in_k,
        q_parabolic,
        satisfied: sum_is_g && intersection_in_k && q_parabolic,
        q_roots,
    }
}

pub fn check_condition(
    dec: &CartanDecomposition<'_>,
    p1: &ParabolicSubset,
    p2: &ParabolicSubset,
) -> Result<ConditionReport> {
    check_same_datum(dec, p1)?;
    check_same_datum(dec, p2)?;
    Ok(evaluate(dec, p1.roots(), p2.roots()))
}

fn require_parabolic_in_k(dec: &CartanDecomposition<'_>, qk: &RootSet) -> Result<()> {
    if qk.universe() != dec.base().num_roots()
        || !is_parabolic_in_subsystem(dec.base(), qk, dec.delta_k())
    {
        return Err(Error::NotParabolicInK);
    }
    Ok(())
}

/// `Ψ₁ = q ∪ s_sign`, `Ψ₂ = Δ_k ∪ s_{−sign}`.
pub fn construct_type1(
    dec: &CartanDecomposition<'_>,
    qk: &RootSet,
    sign: Sign,
) -> Result<(ParabolicSubset, ParabolicSubset)> {
    if !dec.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    require_parabolic_in_k(dec, qk)?;
    let d = dec.base();
    let p1 = ParabolicSubset::from_roots(d, qk.union(dec.s_part(sign)?))?;
    let p2 = ParabolicSubset::from_roots(d, dec.delta_k().union(dec.s_part(sign.flip())?))?;
    Ok((p1, p2))
}

/// Which simple factor of `Δ_k` is cut down to `q` in `Ψ₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Orientation {
    I,
    II,
}

/// Two-factor case: `Ψ₁ = (q ∩ reduced) ∪ other ∪ s_sign`,
/// `Ψ₂ = reduced ∪ (q ∩ other) ∪ s_{−sign}`.
pub fn construct_type2(
    dec: &CartanDecomposition<'_>,
    qk: &RootSet,
    orientation: Orientation,
    sign: Sign,
) -> Result<(ParabolicSubset, ParabolicSubset)> {
    if !dec.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let blocks = dec.factor_partition();
    if blocks.len() != 2 {
        return Err(Error::NotTwoFactor {
            blocks: blocks.len(),
        });
    }
    require_parabolic_in_k(dec, qk)?;
    let (reduced, other) = match orientation {
        Orientation::I => (&blocks[0], &blocks[1]),
        Orientation::II => (&blocks[1], &blocks[0]),
    };
    let d = dec.base();
    let a = qk
        .intersection(reduced)
        .union(other)
        .union(dec.s_part(sign)?);
    let b = reduced
        .union(&qk.intersection(other))
        .union(dec.s_part(sign.flip())?);
    Ok((
        ParabolicSubset::from_roots(d, a)?,
        ParabolicSubset::from_roots(d, b)?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairTag {
    Type1,
    Type2,
    Unmatched,
}

/// How a found pair relates to the constructor output it matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SymmetryNote {
    /// Sign passed to the constructor (`s_sign ⊆ Ψ₁` before any swap).
    pub sign: Option<Sign>,
    /// Type-2 orientation.
    pub orientation: Option<Orientation>,
    /// Pair is the constructor output with its members exchanged.
    pub swapped: bool,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub p1: ParabolicSubset,
    pub p2: ParabolicSubset,
    pub q_roots: RootSet,
    pub tag: PairTag,
    pub note: SymmetryNote,
}

#[derive(Debug, Clone)]
pub struct PairCatalog {
    /// The requested `q`, if the search was filtered.
    pub q: Option<RootSet>,
    pub type1_pairs: Vec<CatalogEntry>,
    pub type2_pairs: Vec<CatalogEntry>,
    pub unmatched: Vec<CatalogEntry>,
    pub parabolic_subsets: usize,
    pub pairs_checked: u128,
}

impl PairCatalog {
    pub fn total(&self) -> usize {
        self.type1_pairs.len() + self.type2_pairs.len() + self.unmatched.len()
    }

    pub fn is_empty(&self) -> bool {
        self.total() == 0
    }

    /// All entries in search order (type 1, then type 2, then unmatched).
    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.type1_pairs
            .iter()
            .chain(&self.type2_pairs)
            .chain(&self.unmatched)
    }
}

type Expected = Vec<(RootSet, RootSet, PairTag, SymmetryNote)>;

/// Every ordered pair the constructors produce for a given `q`, with the
/// order-swapped variants.
pub fn expected_pairs(dec: &CartanDecomposition<'_>, qk: &RootSet) -> Result<Expected> {
    let mut out: Expected = Vec::new();
    if !dec.is_hermitian() {
        return Ok(out);
    }
    for sign in [Sign::Plus, Sign::Minus] {
        let (a, b) = construct_type1(dec, qk, sign)?;
        let note = |swapped| SymmetryNote {
            sign: Some(sign),
            orientation: None,
            swapped,
        };
        out.push((
            a.roots().clone(),
            b.roots().clone(),
            PairTag::Type1,
            note(false),
        ));
        out.push((b.into_roots(), a.into_roots(), PairTag::Type1, note(true)));
    }
    if dec.factor_partition().len() == 2 {
        for orientation in [Orientation::I, Orientation::II] {
            for sign in [Sign::Plus, Sign::Minus] {
                let (a, b) = construct_type2(dec, qk, orientation, sign)?;
                let note = |swapped| SymmetryNote {
                    sign: Some(sign),
                    orientation: Some(orientation),
                    swapped,
                };
                out.push((
                    a.roots().clone(),
                    b.roots().clone(),
                    PairTag::Type2,
                    note(false),
                ));
                out.push((b.into_roots(), a.into_roots(), PairTag::Type2, note(true)));
            }
        }
    }
    Ok(out)
}

/// Exhaustive search over ordered pairs of parabolic subsets.
pub fn search_satisfying_pairs(
    dec: &CartanDecomposition<'_>,
    qk: Option<&RootSet>,
    limits: SearchLimits,
) -> Result<PairCatalog> {
    if let Some(q) = qk {
        require_parabolic_in_k(dec, q)?;
    }
    let d = dec.base();
    let subsets = parabolic::enumerate_parabolic_subsets(d, limits.parabolic_guard)?;
    let pairs = (subsets.len() as u128).pow(2);
    if pairs > limits.pair_guard {
        return Err(Error::SearchSpaceTooLarge {
            size: pairs,
            guard: limits.pair_guard,
        });
    }

    let mut catalog = PairCatalog {
        q: qk.cloned(),
        type1_pairs: Vec::new(),
        type2_pairs: Vec::new(),
        unmatched: Vec::new(),
        parabolic_subsets: subsets.len(),
        pairs_checked: pairs,
    };
    let mut expected_cache: HashMap<RootSet, Expected> = HashMap::new();

    for a in &subsets {
        for b in &subsets {
            if !a.roots().covers_with(b.roots()) {
                continue;
            }
            let report = evaluate(dec, a.roots(), b.roots());
            if !report.satisfied {
                continue;
            }
            if qk.is_some_and(|q| *q != report.q_roots) {
                continue;
            }
            if !expected_cache.contains_key(&report.q_roots) {
                let e = expected_pairs(dec, &report.q_roots)?;
                expected_cache.insert(report.q_roots.clone(), e);
            }
            let matched = expected_cache[&report.q_roots]
                .iter()
                .find(|(x, y, _, _)| x == a.roots() && y == b.roots());
            let (tag, note) = match matched {
                Some((_, _, tag, note)) => (*tag, *note),
                None => (
                    PairTag::Unmatched,
                    SymmetryNote {
                        sign: None,
                        orientation: None,
                        swapped: false,
                    },
                ),
            };
            let entry = CatalogEntry {
                p1: a.clone(),
                p2: b.clone(),
                q_roots: report.q_roots,
                tag,
                note,
            };
            match tag {
                PairTag::Type1 => catalog.type1_pairs.push(entry),
                PairTag::Type2 => catalog.type2_pairs.push(entry),
                PairTag::Unmatched => catalog.unmatched.push(entry),
            }
        }
    }
    Ok(catalog)
}

/// Outcome of the non-Hermitian check.
#[derive(Debug, Clone)]
pub struct NoPairsReport {
    pub no_pairs: bool,
    pub witness: Option<CatalogEntry>,
    pub pairs_checked: u128,
    pub parabolic_subsets: usize,
    pub satisfying_pairs: usize,
}

/// True iff no pair of parabolic subsets satisfies the condition for any `q`.
pub fn verify_no_pairs(
    dec: &CartanDecomposition<'_>,
    limits: SearchLimits,
) -> Result<NoPairsReport> {
    let catalog = search_satisfying_pairs(dec, None, limits)?;
    let witness = catalog.entries().next().cloned();
    Ok(NoPairsReport {
        no_pairs: catalog.is_empty(),
        witness,
        pairs_checked: catalog.pairs_checked,
        parabolic_subsets: catalog.parabolic_subsets,
        satisfying_pairs: catalog.total(),
    })
}
