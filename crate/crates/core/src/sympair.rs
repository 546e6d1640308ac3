//! Involutions given as gradings of the simple roots, and the root-level
//! Cartan decomposition `Δ = Δ_k ⊔ Δ_s` they induce.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootset::RootSet;
use crate::rootsys::RootDatum;
use crate::unionfind::UnionFind;
use crate::weyl;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionKind {
    Inner,
    Outer,
}

/// An involution `θ`: `eta[i] = true` marks `α_i` as noncompact, and `sigma`
/// is the diagram automorphism part (identity for inner involutions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionSpec {
    pub kind: InvolutionKind,
    pub eta: Vec<bool>,
    pub sigma: Vec<usize>,
}

impl InvolutionSpec {
    pub fn inner(eta: &[bool]) -> Self {
        Self {
            kind: InvolutionKind::Inner,
            eta: eta.to_vec(),
            sigma: (0..eta.len()).collect(),
        }
    }

    /// Convenience constructor from a 0/1 list.
    pub fn from_grading(grading: &[u8]) -> Self {
        Self::inner(&grading.iter().map(|&g| g != 0).collect::<Vec<_>>())
    }

    pub fn outer(eta: &[bool], sigma: &[usize]) -> Self {
        Self {
            kind: InvolutionKind::Outer,
            eta: eta.to_vec(),
            sigma: sigma.to_vec(),
        }
    }

    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        let n = datum.rank();
        if self.eta.len() != n {
            return Err(Error::InvalidGrading {
                got: self.eta.len(),
                rank: n,
            });
        }
        weyl::validate_diagram_automorphism(datum, &self.sigma)?;
        let identity = self.sigma.iter().enumerate().all(|(i, &s)| i == s);
        let involutive = (0..n).all(|i| self.sigma[self.sigma[i]] == i);
        if !involutive {
            return Err(Error::NotDiagramAutomorphism(self.sigma.clone()));
        }
        match self.kind {
            InvolutionKind::Inner => {
                if !identity {
                    return Err(Error::NotDiagramAutomorphism(self.sigma.clone()));
                }
                if self.eta.iter().all(|&e| !e) {
                    return Err(Error::TrivialInvolution);
                }
            }
            InvolutionKind::Outer => {
                if identity {
                    return Err(Error::NotDiagramAutomorphism(self.sigma.clone()));
                }
            }
        }
        Ok(())
    }

    /// `0,1,…` rendering of the grading.
    pub fn grading_string(&self) -> String {
        self.eta
            .iter()
            .map(|&e| if e { "1" } else { "0" })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Every nonzero grading of a rank-`n` system, in binary order.
pub fn all_nontrivial_gradings(rank: usize) -> Vec<InvolutionSpec> {
    (1u32..(1 << rank))
        .map(|mask| {
            let eta: Vec<bool> = (0..rank).map(|i| mask & (1 << i) != 0).collect();
            InvolutionSpec::inner(&eta)
        })
        .collect()
}

/// Root-level Cartan decomposition of an inner involution.
#[derive(Debug, Clone)]
pub struct CartanDecomposition<'a> {
    base: &'a RootDatum,
    spec: InvolutionSpec,
    eps: Vec<i8>,
    delta_k: RootSet,
    delta_s: RootSet,
    center_dim: usize,
    hermitian: bool,
    s_plus: Option<RootSet>,
    s_minus: Option<RootSet>,
    center_functional: Option<Vec<i64>>,
    compact_simple: Vec<usize>,
    factor_partition: Vec<RootSet>,
}

pub fn cartan_decomposition<'a>(
    datum: &'a RootDatum,
    spec: &InvolutionSpec,
) -> Result<CartanDecomposition<'a>> {
    spec.validate(datum)?;
    if spec.kind == InvolutionKind::Outer {
        return Err(Error::OuterNotSupportedHere);
    }
    let n = datum.rank();
    let total = datum.num_roots();
    let eps: Vec<i8> = (0..total)
        .map(|r| {
            let odd: i64 = (0..n)
                .filter(|&i| spec.eta[i])
                .map(|i| datum.root(r)[i])
                .sum();
            if odd.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    let delta_k = RootSet::from_indices(total, (0..total).filter(|&r| eps[r] == 1));
    let delta_s = RootSet::from_indices(total, (0..total).filter(|&r| eps[r] == -1));

    let compact_vectors: Vec<Vec<i64>> = delta_k.iter().map(|r| datum.root(r).to_vec()).collect();
    let center_dim = n - linalg::rank(&compact_vectors, n);
    let hermitian = center_dim == 1;

    let (s_plus, s_minus, center_functional) = if hermitian {
        let mut f = linalg::kernel(&compact_vectors, n).remove(0);
        let eval =
            |f: &[i64], r: usize| -> i64 { datum.root(r).iter().zip(f).map(|(a, b)| a * b).sum() };
        let first_pos = delta_s
            .iter()
            .find(|&r| datum.is_positive(r))
            .expect("nontrivial grading has a noncompact positive root");
        if eval(&f, first_pos) < 0 {
            f.iter_mut().for_each(|x| *x = -*x);
        }
        let plus = RootSet::from_indices(total, delta_s.iter().filter(|&r| eval(&f, r) > 0));
        let minus = RootSet::from_indices(total, delta_s.iter().filter(|&r| eval(&f, r) < 0));
        (Some(plus), Some(minus), Some(f))
    } else {
        (None, None, None)
    };

    let compact_simple = datum.subsystem_simple_roots(&delta_k);

    let members: Vec<usize> = delta_k.iter().collect();
    let mut uf = UnionFind::new(members.len());
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            if datum.inner(members[a], members[b]) != 0 {
                uf.union(a, b);
            }
        }
    }
    let mut blocks: Vec<(usize, RootSet)> = Vec::new();
    for (pos, &r) in members.iter().enumerate() {
        let root = uf.find(pos);
        match blocks.iter_mut().find(|(id, _)| *id == root) {
            Some((_, set)) => set.insert(r),
            None => blocks.push((root, RootSet::from_indices(total, [r]))),
        }
    }
    let mut factor_partition: Vec<RootSet> = blocks.into_iter().map(|(_, s)| s).collect();
    // Blocks are ordered by the first compact simple root they contain.
    factor_partition.sort_by_key(|s| compact_simple.iter().position(|&r| s.contains(r)));

    Ok(CartanDecomposition {
        base: datum,
        spec: spec.clone(),
        eps,
        delta_k,
        delta_s,
        center_dim,
        hermitian,
        s_plus,
        s_minus,
        center_functional,
        compact_simple,
        factor_partition,
    })
}

/// Which of `s₊`, `s₋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl<'a> CartanDecomposition<'a> {
    pub fn base(&self) -> &'a RootDatum {
        self.base
    }

    pub fn spec(&self) -> &InvolutionSpec {
        &self.spec
    }

    /// `ε(α) ∈ {+1, −1}`.
    pub fn eps(&self, root: usize) -> i8 {
        self.eps[root]
    }

    pub fn delta_k(&self) -> &RootSet {
        &self.delta_k
    }

    pub fn delta_s(&self) -> &RootSet {
        &self.delta_s
    }

    pub fn center_dim(&self) -> usize {
        self.center_dim
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn s_plus(&self) -> Option<&RootSet> {
        self.s_plus.as_ref()
    }

    pub fn s_minus(&self) -> Option<&RootSet> {
        self.s_minus.as_ref()
    }

    /// `s₊` or `s₋`; `NotHermitian` when the split is undefined.
    pub fn s_part(&self, sign: Sign) -> Result<&RootSet> {
        match sign {
            Sign::Plus => self.s_plus.as_ref(),
            Sign::Minus => self.s_minus.as_ref(),
        }
        .ok_or(Error::NotHermitian)
    }

    /// Integer functional on root coordinates vanishing on `Δ_k`, positive
    /// on `s₊` (Hermitian case only).
    pub fn center_functional(&self) -> Option<&[i64]> {
        self.center_functional.as_deref()
    }

    /// Simple system of `Δ_k` positive with respect to `Δ⁺`.
    pub fn compact_simple(&self) -> &[usize] {
        &self.compact_simple
    }

    /// `Δ_k ∩ Δ⁺`, the root set of `b_K`.
    pub fn compact_positive(&self) -> RootSet {
        self.delta_k.intersection(&self.base.positive_roots())
    }

    /// Irreducible components of `Δ_k`, ordered by smallest root index.
    pub fn factor_partition(&self) -> &[RootSet] {
        &self.factor_partition
    }

    pub fn delta_k_type(&self) -> String {
        self.base.subsystem_type_label(&self.compact_simple)
    }

    /// Order of `W_K = W(Δ_k)`.
    pub fn compact_weyl_order(&self) -> u128 {
        self.base.subsystem_weyl_order(&self.compact_simple)
    }

    /// Standard parabolic of `Δ_k` for a subset `I` of the compact simple
    /// roots (positions into [`Self::compact_simple`]): `Δ_k⁺ ∪ −(Δ_k⁺ ∩ span I)`.
    /// `I = ∅` gives `b_K`, `I` = everything gives `Δ_k`.
    pub fn standard_compact_parabolic(&self, subset: &[usize]) -> Result<RootSet> {
        let m = self.compact_simple.len();
        for &i in subset {
            if i >= m {
                return Err(Error::IndexOutOfRange { index: i, bound: m });
            }
        }
        let chosen: Vec<usize> = subset.iter().map(|&i| self.compact_simple[i]).collect();
        let mut out = self.compact_positive();
        // A positive compact root lies in span(I) iff it is reachable from I
        // by adding roots of span(I) one simple root at a time.
        let mut levi = RootSet::from_indices(self.base.num_roots(), chosen.iter().copied());
        loop {
            let mut grew = false;
            for a in levi.clone().iter() {
                for &c in &chosen {
                    if let Some(s) = self.base.sum_unchecked(a, c) {
                        if !levi.contains(s) {
                            levi.insert(s);
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        for r in levi.iter() {
            out.insert(self.base.negate(r));
        }
        Ok(out)
    }

    /// Number of irreducible `k`-components of `s`, counted as the
    /// `b_K`-lowest roots: `β ∈ Δ_s` with `β − γ ∉ Δ_s` for every `γ ∈ Δ_k⁺`.
    pub fn s_component_count(&self) -> usize {
        let pos = self.compact_positive();
        self.delta_s
            .iter()
            .filter(|&b| {
                pos.iter().all(|g| {
                    self.base
                        .root_difference(b, g)
                        .is_none_or(|d| !self.delta_s.contains(d))
                })
            })
            .count()
    }
}
