//! Simple root systems of types A–G in simple-root coordinates.
//!
//! Every root is an integer tuple `c` with `α = Σ c_i α_i`. Pairings are
//! computed through the Cartan matrix `cartan[i][j] = ⟨α_i, α_j^∨⟩`, and the
//! symmetric form through an integral Gram matrix; no floating point is used.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootset::RootSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLabel {
    pub fn as_char(self) -> char {
        match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        }
    }

    pub fn admits(self, rank: usize) -> bool {
        match self {
            TypeLabel::A => rank >= 1,
            TypeLabel::B | TypeLabel::C => rank >= 2,
            TypeLabel::D => rank >= 3,
            TypeLabel::E => (6..=8).contains(&rank),
            TypeLabel::F => rank == 4,
            TypeLabel::G => rank == 2,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(TypeLabel::A),
            "B" | "b" => Ok(TypeLabel::B),
            "C" | "c" => Ok(TypeLabel::C),
            "D" | "d" => Ok(TypeLabel::D),
            "E" | "e" => Ok(TypeLabel::E),
            "F" | "f" => Ok(TypeLabel::F),
            "G" | "g" => Ok(TypeLabel::G),
            other => Err(Error::InvalidTypeLabel(other.to_string())),
        }
    }
}

/// An admissible `(label, rank)` pair, e.g. `C2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub label: TypeLabel,
    pub rank: usize,
}

impl CartanType {
    pub fn new(label: TypeLabel, rank: usize) -> Result<Self> {
        if label.admits(rank) {
            Ok(Self { label, rank })
        } else {
            Err(Error::InvalidRank {
                label: label.as_char(),
                rank,
            })
        }
    }

    /// Order of the Weyl group from its closed form.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.label {
            TypeLabel::A => fact(n + 1),
            TypeLabel::B | TypeLabel::C => (1u128 << n) * fact(n),
            TypeLabel::D => (1u128 << (n - 1)) * fact(n),
            TypeLabel::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            TypeLabel::F => 1152,
            TypeLabel::G => 12,
        }
    }

    /// Number of roots from its closed form.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match self.label {
            TypeLabel::A => n * (n + 1),
            TypeLabel::B | TypeLabel::C => 2 * n * n,
            TypeLabel::D => 2 * n * (n - 1),
            TypeLabel::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            TypeLabel::F => 48,
            TypeLabel::G => 12,
        }
    }

    /// Every admissible type with `rank <= max_rank`, in label then rank order.
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        use TypeLabel::*;
        let mut out = Vec::new();
        for label in [A, B, C, D, E, F, G] {
            for rank in 1..=max_rank {
                if label.admits(rank) {
                    out.push(CartanType { label, rank });
                }
            }
        }
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, self.rank)
    }
}

/// Dynkin edges (0-based) and squared root lengths for a type.
fn dynkin_data(ty: CartanType) -> (Vec<(usize, usize)>, Vec<i64>) {
    let n = ty.rank;
    let path = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
    match ty.label {
        TypeLabel::A => (path(n), vec![2; n]),
        TypeLabel::B => {
            let mut d = vec![4; n];
            d[n - 1] = 2;
            (path(n), d)
        }
        TypeLabel::C => {
            let mut d = vec![2; n];
            d[n - 1] = 4;
            (path(n), d)
        }
        TypeLabel::D => {
            let mut e = path(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![2; n])
        }
        TypeLabel::E => {
            // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
            let all = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
            let e = all
                .iter()
                .copied()
                .filter(|&(a, b)| a < n && b < n)
                .collect();
            (e, vec![2; n])
        }
        TypeLabel::F => (path(4), vec![4, 4, 2, 2]),
        TypeLabel::G => (path(2), vec![2, 6]),
    }
}

/// A reduced irreducible root system with a fixed positive system.
#[derive(Debug, Clone)]
pub struct RootDatum {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    positive_count: usize,
    sum_table: Vec<Option<u32>>,
}

/// Construct the root system of the given type and rank.
pub fn build_root_system(label: TypeLabel, rank: usize) -> Result<RootDatum> {
    RootDatum::new(CartanType::new(label, rank)?)
}

impl RootDatum {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let n = cartan_type.rank;
        let (edges, lengths) = dynkin_data(cartan_type);
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            gram[i][i] = lengths[i];
        }
        for &(a, b) in &edges {
            let v = -lengths[a].max(lengths[b]) / 2;
            gram[a][b] = v;
            gram[b][a] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        // Close the simple roots under simple reflections.
        let unit = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = (0..n).map(unit).collect();
        for r in &queue {
            seen.insert(r.clone(), ());
        }
        while let Some(root) = queue.pop_front() {
            for j in 0..n {
                let p: i64 = (0..n).map(|i| root[i] * cartan[i][j]).sum();
                if p == 0 {
                    continue;
                }
                let mut img = root.clone();
                img[j] -= p;
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    queue.push_back(img);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_keys().collect();
        // Height ascending; within a height, lexicographically descending so
        // that α_1, α_2, … appear in order. This makes −roots[i] = roots[N-1-i].
        roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let total = roots.len();
        let positive_count = roots.iter().filter(|r| r.iter().all(|&c| c >= 0)).count();

        let mut sum_table = vec![None; total * total];
        for i in 0..total {
            for j in i..total {
                let s: Vec<i64> = roots[i].iter().zip(&roots[j]).map(|(a, b)| a + b).collect();
                if let Some(&k) = index.get(&s) {
                    sum_table[i * total + j] = Some(k as u32);
                    sum_table[j * total + i] = Some(k as u32);
                }
            }
        }

        Ok(Self {
            cartan_type,
            cartan,
            gram,
            roots,
            index,
            positive_count,
            sum_table,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn type_label(&self) -> TypeLabel {
        self.cartan_type.label
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    /// `cartan_matrix()[i][j] = ⟨α_i, α_j^∨⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i >= self.roots.len() - self.positive_count
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    /// Index of `−α_i`.
    pub fn negate(&self, i: usize) -> usize {
        self.roots.len() - 1 - i
    }

    /// Index of the simple root `α_k`.
    pub fn simple_root(&self, k: usize) -> usize {
        self.roots.len() - self.positive_count + k
    }

    /// Which simple root, if any, root `i` is.
    pub fn simple_position(&self, i: usize) -> Option<usize> {
        let first = self.roots.len() - self.positive_count;
        (i >= first && i < first + self.rank()).then(|| i - first)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.roots.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                bound: self.roots.len(),
            })
        }
    }

    /// Index of `α_i + α_j` when it is a root.
    pub fn root_sum(&self, i: usize, j: usize) -> Result<Option<usize>> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.sum_unchecked(i, j))
    }

    #[inline]
    pub(crate) fn sum_unchecked(&self, i: usize, j: usize) -> Option<usize> {
        self.sum_table[i * self.roots.len() + j].map(|k| k as usize)
    }

    /// Index of `α_i − α_j` when it is a root.
    pub fn root_difference(&self, i: usize, j: usize) -> Option<usize> {
        self.sum_unchecked(i, self.negate(j))
    }

    /// Symmetric form `(α_i, α_j)` in the integral normalisation
    /// (short roots of B/C/F and all roots of A/D/E have length² 2).
    pub fn inner(&self, i: usize, j: usize) -> i64 {
        self.inner_coords(&self.roots[i], &self.roots[j])
    }

    pub fn inner_coords(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (ap, row) in a.iter().zip(&self.gram) {
            if *ap == 0 {
                continue;
            }
            s += ap * b.iter().zip(row).map(|(bq, g)| bq * g).sum::<i64>();
        }
        s
    }

    /// `⟨β, γ^∨⟩ = 2(β, γ)/(γ, γ)` for root indices.
    pub fn pairing(&self, beta: usize, gamma: usize) -> i64 {
        2 * self.inner(beta, gamma) / self.inner(gamma, gamma)
    }

    /// Squared length of root `i`.
    pub fn length_sq(&self, i: usize) -> i64 {
        self.inner(i, i)
    }

    pub fn simple_length_sq(&self, k: usize) -> i64 {
        self.gram[k][k]
    }

    pub fn positive_roots(&self) -> RootSet {
        let n = self.roots.len();
        RootSet::from_indices(n, n - self.positive_count..n)
    }

    pub fn negative_roots(&self) -> RootSet {
        RootSet::from_indices(self.roots.len(), 0..self.roots.len() - self.positive_count)
    }

    pub fn all_roots(&self) -> RootSet {
        RootSet::full(self.roots.len())
    }

    pub fn empty_set(&self) -> RootSet {
        RootSet::empty(self.roots.len())
    }

    /// `{−α : α ∈ s}`.
    pub fn negate_set(&self, s: &RootSet) -> RootSet {
        RootSet::from_indices(self.roots.len(), s.iter().map(|i| self.negate(i)))
    }

    /// True iff `α + β ∈ s` whenever `α, β ∈ s` and `α + β` is a root.
    pub fn is_closed_subset(&self, s: &RootSet) -> Result<bool> {
        if s.universe() != self.roots.len() {
            return Err(Error::IndexOutOfRange {
                index: s.universe(),
                bound: self.roots.len(),
            });
        }
        Ok(self.is_closed_unchecked(s))
    }

    pub(crate) fn is_closed_unchecked(&self, s: &RootSet) -> bool {
        let members: Vec<usize> = s.iter().collect();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a..] {
                if let Some(k) = self.sum_unchecked(i, j) {
                    if !s.contains(k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Roots whose support lies in the simple-root subset `j`.
    pub fn levi_roots(&self, j: &[usize]) -> RootSet {
        let n = self.rank();
        let mut mask = vec![false; n];
        for &k in j {
            mask[k] = true;
        }
        RootSet::from_indices(
            self.roots.len(),
            (0..self.roots.len()).filter(|&i| (0..n).all(|k| mask[k] || self.roots[i][k] == 0)),
        )
    }

    /// Simple system of a closed negation-stable subsystem, positive with
    /// respect to the ambient positive system. Returned in index order.
    pub fn subsystem_simple_roots(&self, sub: &RootSet) -> Vec<usize> {
        let pos: Vec<usize> = sub.iter().filter(|&i| self.is_positive(i)).collect();
        pos.iter()
            .copied()
            .filter(|&g| {
                !pos.iter().any(|&a| {
                    self.root_difference(g, a)
                        .is_some_and(|d| self.is_positive(d) && sub.contains(d))
                })
            })
            .collect()
    }

    /// Decompose a simple system into irreducible components and identify
    /// each one's Cartan type.
    pub fn classify_simple_system(&self, simple: &[usize]) -> Vec<Component> {
        let m = simple.len();
        let mut comp = vec![usize::MAX; m];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..m {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut k = 0;
            while k < members.len() {
                let a = members[k];
                for b in 0..m {
                    if comp[b] == usize::MAX && self.inner(simple[a], simple[b]) != 0 {
                        comp[b] = id;
                        members.push(b);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
            .into_iter()
            .map(|members| {
                let roots: Vec<usize> = members.iter().map(|&k| simple[k]).collect();
                let ty = self.identify_connected(&roots);
                Component {
                    cartan_type: ty,
                    simple_roots: roots,
                }
            })
            .collect()
    }

    fn identify_connected(&self, simple: &[usize]) -> CartanType {
        let r = simple.len();
        let mk = |label| CartanType { label, rank: r };
        if r == 1 {
            return mk(TypeLabel::A);
        }
        let mut degree = vec![0usize; r];
        let mut max_bond = 1;
        let mut adj = vec![Vec::new(); r];
        for a in 0..r {
            for b in 0..r {
                if a != b && self.inner(simple[a], simple[b]) != 0 {
                    degree[a] += 1;
                    adj[a].push(b);
                    let bond =
                        self.pairing(simple[a], simple[b]) * self.pairing(simple[b], simple[a]);
                    max_bond = max_bond.max(bond);
                }
            }
        }
        match max_bond {
            3 => mk(TypeLabel::G),
            2 => {
                if r == 4 {
                    // F4 has its double bond in the middle; B4/C4 at an end.
                    let lens: Vec<i64> = simple.iter().map(|&s| self.length_sq(s)).collect();
                    let max = *lens.iter().max().unwrap();
                    let long = lens.iter().filter(|&&l| l == max).count();
                    if long == 2 {
                        return mk(TypeLabel::F);
                    }
                }
                let lens: Vec<i64> = simple.iter().map(|&s| self.length_sq(s)).collect();
                let min = *lens.iter().min().unwrap();
                let short = lens.iter().filter(|&&l| l == min).count();
                if short == 1 {
                    mk(TypeLabel::B)
                } else {
                    mk(TypeLabel::C)
                }
            }
            _ => match (0..r).find(|&v| degree[v] == 3) {
                None => mk(TypeLabel::A),
                Some(branch) => {
                    let mut arms: Vec<usize> = adj[branch]
                        .iter()
                        .map(|&start| {
                            let (mut prev, mut cur, mut len) = (branch, start, 1);
                            loop {
                                let next = adj[cur].iter().copied().find(|&x| x != prev);
                                match next {
                                    Some(nx) => {
                                        prev = cur;
                                        cur = nx;
                                        len += 1;
                                    }
                                    None => break len,
                                }
                            }
                        })
                        .collect();
                    arms.sort_unstable();
                    if arms[0] == 1 && arms[1] == 1 {
                        mk(TypeLabel::D)
                    } else {
                        mk(TypeLabel::E)
                    }
                }
            },
        }
    }

    /// Human-readable type of a simple system, e.g. `"A1xA1"`; `"trivial"`
    /// for the empty system.
    pub fn subsystem_type_label(&self, simple: &[usize]) -> String {
        let comps = self.classify_simple_system(simple);
        if comps.is_empty() {
            return "trivial".to_string();
        }
        comps
            .iter()
            .map(|c| c.cartan_type.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Order of the reflection group generated by a simple system.
    pub fn subsystem_weyl_order(&self, simple: &[usize]) -> u128 {
        self.classify_simple_system(simple)
            .iter()
            .map(|c| c.cartan_type.weyl_order())
            .product()
    }

    /// Order of the parabolic subgroup `W_J`.
    pub fn parabolic_weyl_order(&self, j: &[usize]) -> u128 {
        let simple: Vec<usize> = j.iter().map(|&k| self.simple_root(k)).collect();
        self.subsystem_weyl_order(&simple)
    }

    pub fn format_root(&self, i: usize) -> String {
        format_coords(&self.roots[i])
    }
}

/// One irreducible component of a root subsystem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub cartan_type: CartanType,
    pub simple_roots: Vec<usize>,
}

pub fn format_coords(c: &[i64]) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}
