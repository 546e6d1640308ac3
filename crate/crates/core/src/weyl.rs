//! Weyl group elements as permutations of the roots, coset spaces realised
//! as weight orbits, and double-coset counting by orbit partition.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{CartanType, RootDatum};
use crate::unionfind::UnionFind;

/// Default cap on materialised group elements / coset points.
pub const DEFAULT_GROUP_GUARD: u128 = 10_000_000;

/// An element of `W_G`, stored as its action on root indices.
///
/// When a word `[i_1, …, i_k]` is attached it denotes `s_{i_1} ∘ … ∘ s_{i_k}`.
#[derive(Debug, Clone)]
pub struct WeylElement {
    cartan_type: CartanType,
    perm: Vec<u16>,
    word: Option<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.cartan_type == other.cartan_type && self.perm == other.perm
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cartan_type.hash(state);
        self.perm.hash(state);
    }
}

impl WeylElement {
    pub fn identity(datum: &RootDatum) -> Self {
        Self {
            cartan_type: datum.cartan_type(),
            perm: (0..datum.num_roots() as u16).collect(),
            word: Some(Vec::new()),
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    /// Image of root index `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn apply_set(&self, s: &RootSet) -> RootSet {
        RootSet::from_indices(s.universe(), s.iter().map(|i| self.apply(i)))
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        Self {
            cartan_type: self.cartan_type,
            perm: inv,
            word: self
                .word
                .as_ref()
                .map(|w| w.iter().rev().copied().collect()),
        }
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = compose_unchecked(&acc, self);
            k += 1;
        }
        k
    }

    fn check_datum(&self, datum: &RootDatum) -> Result<()> {
        if self.cartan_type == datum.cartan_type() {
            Ok(())
        } else {
            Err(Error::DatumMismatch {
                left: self.cartan_type.to_string(),
                right: datum.cartan_type().to_string(),
            })
        }
    }

    /// Word if known, else the raw permutation; used for serialisation.
    pub fn describe(&self) -> String {
        match &self.word {
            Some(w) => {
                let parts: Vec<String> = w.iter().map(|i| (i + 1).to_string()).collect();
                format!("s[{}]", parts.join(","))
            }
            None => {
                let parts: Vec<String> = self.perm.iter().map(|p| p.to_string()).collect();
                format!("perm[{}]", parts.join(","))
            }
        }
    }
}

/// `a ∘ b` (apply `b` first).
pub fn compose(a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    if a.cartan_type != b.cartan_type {
        return Err(Error::DatumMismatch {
            left: a.cartan_type.to_string(),
            right: b.cartan_type.to_string(),
        });
    }
    Ok(compose_unchecked(a, b))
}

fn compose_unchecked(a: &WeylElement, b: &WeylElement) -> WeylElement {
    let perm = b.perm.iter().map(|&x| a.perm[x as usize]).collect();
    let word = match (&a.word, &b.word) {
        (Some(wa), Some(wb)) => Some(wa.iter().chain(wb).copied().collect()),
        _ => None,
    };
    WeylElement {
        cartan_type: a.cartan_type,
        perm,
        word,
    }
}

/// The simple reflection `s_i: β ↦ β − ⟨β, α_i^∨⟩ α_i`.
pub fn simple_reflection(datum: &RootDatum, i: usize) -> Result<WeylElement> {
    if i >= datum.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: datum.rank(),
        });
    }
    let mut elt = reflection(datum, datum.simple_root(i))?;
    elt.word = Some(vec![i]);
    Ok(elt)
}

/// Reflection in an arbitrary root, computed by the root-permutation formula.
/// The attached word expresses it as a conjugate of a simple reflection.
pub fn reflection(datum: &RootDatum, root: usize) -> Result<WeylElement> {
    datum.check_index(root)?;
    let n = datum.num_roots();
    let gamma = datum.root(root).to_vec();
    let mut perm = Vec::with_capacity(n);
    for b in 0..n {
        let p = datum.pairing(b, root);
        let img: Vec<i64> = datum
            .root(b)
            .iter()
            .zip(&gamma)
            .map(|(x, g)| x - p * g)
            .collect();
        perm.push(datum.index_of(&img).expect("reflection image is a root") as u16);
    }
    let (conj, k) = conjugating_word(datum, root);
    let mut word = conj.clone();
    word.push(k);
    word.extend(conj.iter().rev());
    Ok(WeylElement {
        cartan_type: datum.cartan_type(),
        perm,
        word: Some(word),
    })
}

/// Returns `(u, k)` with `±γ = u(α_k)`, `u` given as a word.
pub(crate) fn conjugating_word(datum: &RootDatum, root: usize) -> (Vec<usize>, usize) {
    let n = datum.rank();
    let mut beta = if datum.is_positive(root) {
        datum.root(root).to_vec()
    } else {
        datum.root(datum.negate(root)).to_vec()
    };
    let cartan = datum.cartan_matrix();
    let mut word = Vec::new();
    loop {
        let idx = datum.index_of(&beta).unwrap();
        if let Some(k) = datum.simple_position(idx) {
            return (word, k);
        }
        let j = (0..n)
            .find(|&j| (0..n).map(|i| beta[i] * cartan[i][j]).sum::<i64>() > 0)
            .expect("non-simple positive root has a positive pairing with some simple coroot");
        let p: i64 = (0..n).map(|i| beta[i] * cartan[i][j]).sum();
        beta[j] -= p;
        word.push(j);
    }
}

/// All elements of `W_G`, each once, with reduced words (BFS over left
/// multiplication by simple reflections).
pub fn enumerate_group(datum: &RootDatum, guard: u128) -> Result<Vec<WeylElement>> {
    let order = datum.cartan_type().weyl_order();
    if order > guard {
        return Err(Error::GroupTooLarge { order, guard });
    }
    let gens: Vec<WeylElement> = (0..datum.rank())
        .map(|i| simple_reflection(datum, i))
        .collect::<Result<_>>()?;
    let simple: Vec<usize> = (0..datum.rank()).map(|k| datum.simple_root(k)).collect();
    let key = |w: &WeylElement| -> Vec<u16> { simple.iter().map(|&s| w.perm[s]).collect() };

    let id = WeylElement::identity(datum);
    let mut seen: HashSet<Vec<u16>> = HashSet::with_capacity(order as usize);
    seen.insert(key(&id));
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        for g in &gens {
            let next = compose_unchecked(g, &out[head]);
            if seen.insert(key(&next)) {
                out.push(next);
            }
        }
        head += 1;
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// `W_G / W_J` realised as the orbit of a weight whose stabiliser is `W_J`.
///
/// Weights are stored by their Dynkin labels `m_i = ⟨λ, α_i^∨⟩`; the base
/// point has `m_i = 1` for `i ∉ J` and `0` for `i ∈ J`, i.e. it is the sum of
/// the fundamental weights outside `J`.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    cartan_type: CartanType,
    j: Vec<usize>,
    rank: usize,
    labels: Vec<i64>,
    edges: Vec<Vec<u32>>,
}

impl CosetSpace {
    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn j(&self) -> &[usize] {
        &self.j
    }

    pub fn len(&self) -> usize {
        self.labels.len() / self.rank
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn point(&self, p: usize) -> &[i64] {
        &self.labels[p * self.rank..(p + 1) * self.rank]
    }

    /// The permutation of points induced by simple reflection `i`.
    pub fn edge_map(&self, i: usize) -> &[u32] {
        &self.edges[i]
    }

    /// Apply the word `s_{w_0} ∘ … ∘ s_{w_k}` to point `p`.
    pub fn act(&self, word: &[usize], mut p: usize) -> usize {
        for &i in word.iter().rev() {
            p = self.edges[i][p] as usize;
        }
        p
    }
}

pub(crate) fn normalize_subset(datum: &RootDatum, j: &[usize]) -> Result<Vec<usize>> {
    let mut out = j.to_vec();
    for &k in &out {
        if k >= datum.rank() {
            return Err(Error::IndexOutOfRange {
                index: k,
                bound: datum.rank(),
            });
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn enumerate_cosets(datum: &RootDatum, j: &[usize], guard: u128) -> Result<CosetSpace> {
    let j = normalize_subset(datum, j)?;
    let n = datum.rank();
    let size = datum.cartan_type().weyl_order() / datum.parabolic_weyl_order(&j);
    if size > guard {
        return Err(Error::CosetSpaceTooLarge { size, guard });
    }
    let cartan = datum.cartan_matrix();
    let base: Vec<i64> = (0..n).map(|i| i64::from(!j.contains(&i))).collect();

    let mut index: HashMap<Vec<i64>, u32> = HashMap::with_capacity(size as usize);
    let mut labels: Vec<i64> = Vec::with_capacity(size as usize * n);
    let mut edges: Vec<Vec<u32>> = vec![Vec::with_capacity(size as usize); n];
    index.insert(base.clone(), 0);
    labels.extend_from_slice(&base);
    let mut queue = VecDeque::from([0usize]);
    while let Some(p) = queue.pop_front() {
        let cur: Vec<i64> = labels[p * n..(p + 1) * n].to_vec();
        for (g, edge) in edges.iter_mut().enumerate() {
            let mut img = cur.clone();
            if cur[g] != 0 {
                for (i, v) in img.iter_mut().enumerate() {
                    *v -= cur[g] * cartan[g][i];
                }
            }
            let next = match index.get(&img) {
                Some(&q) => q,
                None => {
                    let q = (labels.len() / n) as u32;
                    index.insert(img.clone(), q);
                    labels.extend_from_slice(&img);
                    queue.push_back(q as usize);
                    q
                }
            };
            // Points are discovered in BFS order, so edge[p] is filled in order.
            debug_assert_eq!(edge.len(), p);
            edge.push(next);
        }
    }
    Ok(CosetSpace {
        cartan_type: datum.cartan_type(),
        j,
        rank: n,
        labels,
        edges,
    })
}

/// Orbits of the reflection subgroup generated by `left_generators` on
/// `W_G / W_J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetTally {
    pub left_generators: Vec<usize>,
    pub j: Vec<usize>,
    pub count: usize,
    pub orbit_sizes: Vec<usize>,
}

/// `#(W' \ W_G / W_J)` where `W'` is generated by the reflections in
/// `left_generators` (root indices, not necessarily simple).
pub fn count_double_cosets(
    datum: &RootDatum,
    left_generators: &[usize],
    j: &[usize],
    guard: u128,
) -> Result<DoubleCosetTally> {
    for &g in left_generators {
        datum.check_index(g)?;
    }
    let space = enumerate_cosets(datum, j, guard)?;
    let words: Vec<Vec<usize>> = left_generators
        .iter()
        .map(|&g| {
            let (u, k) = conjugating_word(datum, g);
            let mut w = u.clone();
            w.push(k);
            w.extend(u.iter().rev());
            w
        })
        .collect();
    let mut uf = UnionFind::new(space.len());
    for p in 0..space.len() {
        for w in &words {
            uf.union(p, space.act(w, p));
        }
    }
    let orbit_sizes = uf.class_sizes();
    Ok(DoubleCosetTally {
        left_generators: left_generators.to_vec(),
        j: space.j.clone(),
        count: orbit_sizes.len(),
        orbit_sizes,
    })
}

/// Checks that `sigma` permutes the simple roots and preserves the Cartan
/// matrix.
pub fn validate_diagram_automorphism(datum: &RootDatum, sigma: &[usize]) -> Result<()> {
    let n = datum.rank();
    let bad = || Error::NotDiagramAutomorphism(sigma.to_vec());
    if sigma.len() != n {
        return Err(bad());
    }
    let mut hit = vec![false; n];
    for &s in sigma {
        if s >= n || hit[s] {
            return Err(bad());
        }
        hit[s] = true;
    }
    let c = datum.cartan_matrix();
    for i in 0..n {
        for j in 0..n {
            if c[sigma[i]][sigma[j]] != c[i][j] {
                return Err(bad());
            }
        }
    }
    Ok(())
}

/// Extend a diagram automorphism to a permutation of all roots.
pub fn diagram_root_permutation(datum: &RootDatum, sigma: &[usize]) -> Result<Vec<usize>> {
    validate_diagram_automorphism(datum, sigma)?;
    Ok((0..datum.num_roots())
        .map(|r| {
            let c = datum.root(r);
            let mut img = vec![0i64; c.len()];
            for (i, &x) in c.iter().enumerate() {
                img[sigma[i]] = x;
            }
            datum
                .index_of(&img)
                .expect("diagram automorphism maps roots to roots")
        })
        .collect())
}

/// `W_G^σ = { w : σ w σ⁻¹ = w }`.
pub fn sigma_fixed_subgroup(
    datum: &RootDatum,
    sigma: &[usize],
    guard: u128,
) -> Result<Vec<WeylElement>> {
    let sp = diagram_root_permutation(datum, sigma)?;
    let group = enumerate_group(datum, guard)?;
    Ok(group
        .into_iter()
        .filter(|w| (0..sp.len()).all(|r| sp[w.apply(r)] == w.apply(sp[r])))
        .collect())
}

/// Applies `w` after checking it belongs to `datum`.
pub fn apply_checked(datum: &RootDatum, w: &WeylElement, root: usize) -> Result<usize> {
    w.check_datum(datum)?;
    datum.check_index(root)?;
    Ok(w.apply(root))
}
