//! Parabolic subsets `Ψ ⊆ Δ` (closed, `Ψ ∪ −Ψ = Δ`) as stand-ins for
//! parabolic subgroups containing the fixed maximal torus.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{CartanType, RootDatum};
use crate::weyl::{self, WeylElement};

pub const DEFAULT_PARABOLIC_GUARD: u128 = 1_000_000;

/// A witness `Ψ = w(Δ_J ∪ Δ⁺)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub w: WeylElement,
    pub j: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ParabolicSubset {
    cartan_type: CartanType,
    psi: RootSet,
    standard_form: Option<StandardForm>,
}

impl PartialEq for ParabolicSubset {
    fn eq(&self, other: &Self) -> bool {
        self.cartan_type == other.cartan_type && self.psi == other.psi
    }
}

impl Eq for ParabolicSubset {}

impl ParabolicSubset {
    /// Validates `psi` and computes a standard form for it.
    pub fn from_roots(datum: &RootDatum, psi: RootSet) -> Result<Self> {
        if psi.universe() != datum.num_roots() {
            return Err(Error::NotParabolic);
        }
        let standard_form = standard_form_of(datum, &psi).ok_or(Error::NotParabolic)?;
        Ok(Self {
            cartan_type: datum.cartan_type(),
            psi,
            standard_form: Some(standard_form),
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn roots(&self) -> &RootSet {
        &self.psi
    }

    pub fn into_roots(self) -> RootSet {
        self.psi
    }

    pub fn standard_form(&self) -> Option<&StandardForm> {
        self.standard_form.as_ref()
    }

    /// `Ψ ∩ −Ψ`, the roots of the Levi factor.
    pub fn levi(&self, datum: &RootDatum) -> RootSet {
        self.psi.intersection(&datum.negate_set(&self.psi))
    }

    /// Sorted coordinate list, the serialised form.
    pub fn coordinate_list(&self, datum: &RootDatum) -> Vec<Vec<i64>> {
        sorted_coordinates(datum, &self.psi)
    }
}

pub fn sorted_coordinates(datum: &RootDatum, s: &RootSet) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = s.iter().map(|r| datum.root(r).to_vec()).collect();
    v.sort();
    v
}

/// True iff `s` is closed and `s ∪ −s = Δ`.
pub fn is_parabolic_set(datum: &RootDatum, s: &RootSet) -> bool {
    s.covers_with(&datum.negate_set(s)) && datum.is_closed_unchecked(s)
}

/// Reduce `psi` to a standard parabolic by simple reflections: while some
/// `α_i ∉ X`, replace `X` by `s_i(X)`. Each step removes one positive root
/// from `Δ⁺ \ X`, so this terminates; the end point contains `Π`.
fn standard_form_of(datum: &RootDatum, psi: &RootSet) -> Option<StandardForm> {
    if !is_parabolic_set(datum, psi) {
        return None;
    }
    let n = datum.rank();
    let gens: Vec<WeylElement> = (0..n)
        .map(|i| weyl::simple_reflection(datum, i).expect("valid simple index"))
        .collect();
    let mut x = psi.clone();
    let mut word = Vec::new();
    while let Some(i) = (0..n).find(|&i| !x.contains(datum.simple_root(i))) {
        x = gens[i].apply_set(&x);
        word.push(i);
    }
    let j: Vec<usize> = (0..n)
        .filter(|&i| x.contains(datum.negate(datum.simple_root(i))))
        .collect();
    if x != standard_roots(datum, &j) {
        return None;
    }
    // psi = s_{word[0]} ∘ … ∘ s_{word[k]} (x)
    let mut w = WeylElement::identity(datum);
    for &i in &word {
        w = weyl::compose(&w, &gens[i]).expect("same datum");
    }
    Some(StandardForm { w, j })
}

fn standard_roots(datum: &RootDatum, j: &[usize]) -> RootSet {
    datum
        .positive_roots()
        .union(&datum.levi_roots(j).intersection(&datum.negative_roots()))
}

/// `P_J`: `Δ⁺ ∪ (Δ_J ∩ Δ⁻)`.
pub fn standard_parabolic(datum: &RootDatum, j: &[usize]) -> Result<ParabolicSubset> {
    let j = weyl::normalize_subset(datum, j)?;
    Ok(ParabolicSubset {
        cartan_type: datum.cartan_type(),
        psi: standard_roots(datum, &j),
        standard_form: Some(StandardForm {
            w: WeylElement::identity(datum),
            j,
        }),
    })
}

/// `w(Ψ)`, with standard form `(w·w_old, J)`.
pub fn translate(p: &ParabolicSubset, w: &WeylElement) -> Result<ParabolicSubset> {
    if p.cartan_type != w.cartan_type() {
        return Err(Error::DatumMismatch {
            left: p.cartan_type.to_string(),
            right: w.cartan_type().to_string(),
        });
    }
    let standard_form = match &p.standard_form {
        Some(sf) => Some(StandardForm {
            w: weyl::compose(w, &sf.w)?,
            j: sf.j.clone(),
        }),
        None => None,
    };
    Ok(ParabolicSubset {
        cartan_type: p.cartan_type,
        psi: w.apply_set(&p.psi),
        standard_form,
    })
}

fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
}

/// `Σ_J [W : W_J]`, the number of parabolic subsets.
pub fn parabolic_subset_count(datum: &RootDatum) -> u128 {
    let order = datum.cartan_type().weyl_order();
    all_subsets(datum.rank())
        .map(|j| order / datum.parabolic_weyl_order(&j))
        .sum()
}

/// All parabolic subsets of `Δ`, each with a standard form. Ordered by `J`
/// (binary mask order) and then by breadth-first discovery.
pub fn enumerate_parabolic_subsets(datum: &RootDatum, guard: u128) -> Result<Vec<ParabolicSubset>> {
    let size = parabolic_subset_count(datum);
    if size > guard {
        return Err(Error::SearchSpaceTooLarge { size, guard });
    }
    let gens: Vec<WeylElement> = (0..datum.rank())
        .map(|i| weyl::simple_reflection(datum, i))
        .collect::<Result<_>>()?;
    let mut seen: HashSet<RootSet> = HashSet::with_capacity(size as usize);
    let mut out: Vec<ParabolicSubset> = Vec::with_capacity(size as usize);
    for j in all_subsets(datum.rank()) {
        let start = standard_parabolic(datum, &j)?;
        if !seen.insert(start.psi.clone()) {
            continue;
        }
        let first = out.len();
        out.push(start);
        let mut queue = VecDeque::from([first]);
        while let Some(k) = queue.pop_front() {
            for g in &gens {
                let next = translate(&out[k], g)?;
                if seen.insert(next.psi.clone()) {
                    queue.push_back(out.len());
                    out.push(next);
                }
            }
        }
    }
    Ok(out)
}

/// Root-level "parabolic in the subsystem": `s` closed and `s ∪ −s` equal
/// to `subsystem`.
pub fn is_parabolic_in_subsystem(datum: &RootDatum, s: &RootSet, subsystem: &RootSet) -> bool {
    s.is_subset(subsystem)
        && s.union(&datum.negate_set(s)) == *subsystem
        && datum.is_closed_unchecked(s)
}
