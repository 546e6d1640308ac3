//! Independent oracles shared by the integration tests and the acceptance
//! runner. Nothing here calls into the library's root arithmetic: roots come
//! from explicit Euclidean models, reflections from dot products, and subset
//! and pair searches are brute force over bitmasks.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use flagpair::{RootDatum, TypeLabel};

/// A root system realised in a Euclidean space. Coordinates are doubled
/// where the usual model has half-integers, so everything stays integral.
pub struct Euclid {
    pub simple: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
}

fn unit(m: usize, i: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; m];
    v[i] = s;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(a: &[i64], k: i64) -> Vec<i64> {
    a.iter().map(|x| x * k).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `±k e_i ± k e_j` for `i < j`.
fn pm_pairs(m: usize, k: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for si in [1, -1] {
                for sj in [1, -1] {
                    out.push(add(&unit(m, i, si * k), &unit(m, j, sj * k)));
                }
            }
        }
    }
    out
}

fn type_a(n: usize) -> Euclid {
    let m = n + 1;
    let mut roots = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i != j {
                roots.push(add(&unit(m, i, 1), &unit(m, j, -1)));
            }
        }
    }
    let simple = (0..n)
        .map(|k| add(&unit(m, k, 1), &unit(m, k + 1, -1)))
        .collect();
    Euclid { simple, roots }
}

fn chain(m: usize, len: usize) -> Vec<Vec<i64>> {
    (0..len)
        .map(|k| add(&unit(m, k, 1), &unit(m, k + 1, -1)))
        .collect()
}

fn type_b(n: usize) -> Euclid {
    let mut roots = pm_pairs(n, 1);
    for i in 0..n {
        roots.push(unit(n, i, 1));
        roots.push(unit(n, i, -1));
    }
    let mut simple = chain(n, n - 1);
    simple.push(unit(n, n - 1, 1));
    Euclid { simple, roots }
}

fn type_c(n: usize) -> Euclid {
    let mut roots = pm_pairs(n, 1);
    for i in 0..n {
        roots.push(unit(n, i, 2));
        roots.push(unit(n, i, -2));
    }
    let mut simple = chain(n, n - 1);
    simple.push(unit(n, n - 1, 2));
    Euclid { simple, roots }
}

fn type_d(n: usize) -> Euclid {
    let roots = pm_pairs(n, 1);
    let mut simple = chain(n, n - 1);
    simple.push(add(&unit(n, n - 2, 1), &unit(n, n - 1, 1)));
    Euclid { simple, roots }
}

fn type_e8() -> Euclid {
    let mut roots = pm_pairs(8, 2);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push(
                (0..8)
                    .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
                    .collect(),
            );
        }
    }
    let mut simple = vec![
        vec![1, -1, -1, -1, -1, -1, -1, 1],
        add(&unit(8, 0, 2), &unit(8, 1, 2)),
    ];
    for k in 0..6 {
        simple.push(add(&unit(8, k + 1, 2), &unit(8, k, -2)));
    }
    Euclid { simple, roots }
}

/// `E_6`, `E_7` as the roots of `E_8` in the span of the first simple roots.
fn type_e(n: usize) -> Euclid {
    let e8 = type_e8();
    if n == 8 {
        return e8;
    }
    let simple: Vec<Vec<i64>> = e8.simple[..n].to_vec();
    let roots = e8
        .roots
        .iter()
        .filter(|r| coordinates(&e8.simple, r)[n..].iter().all(|&c| c == 0))
        .cloned()
        .collect();
    Euclid { simple, roots }
}

fn type_f4() -> Euclid {
    let mut roots = pm_pairs(4, 2);
    for i in 0..4 {
        roots.push(unit(4, i, 2));
        roots.push(unit(4, i, -2));
    }
    for mask in 0u32..16 {
        roots.push(
            (0..4)
                .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
                .collect(),
        );
    }
    let simple = vec![
        add(&unit(4, 1, 2), &unit(4, 2, -2)),
        add(&unit(4, 2, 2), &unit(4, 3, -2)),
        unit(4, 3, 2),
        vec![1, -1, -1, -1],
    ];
    Euclid { simple, roots }
}

fn type_g2() -> Euclid {
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                roots.push(add(&unit(3, i, 1), &unit(3, j, -1)));
            }
        }
        let mut long = vec![-1; 3];
        long[i] = 2;
        roots.push(long.clone());
        roots.push(scale(&long, -1));
    }
    let simple = vec![vec![1, -1, 0], vec![-2, 1, 1]];
    Euclid { simple, roots }
}

pub fn euclid(label: TypeLabel, n: usize) -> Euclid {
    match label {
        TypeLabel::A => type_a(n),
        TypeLabel::B => type_b(n),
        TypeLabel::C => type_c(n),
        TypeLabel::D => type_d(n),
        TypeLabel::E => type_e(n),
        TypeLabel::F => type_f4(),
        TypeLabel::G => type_g2(),
    }
}

/// Coordinates of `v` in the basis `simple`, by solving the Gram system in
/// floating point and checking the rounded answer exactly.
pub fn coordinates(simple: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let n = simple.len();
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row: Vec<f64> = (0..n).map(|j| dot(&simple[i], &simple[j]) as f64).collect();
            row.push(dot(&simple[i], v) as f64);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        a.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = a[r][col] / a[col][col];
                let pivot_row = a[col].clone();
                for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= f * p;
                }
            }
        }
    }
    let c: Vec<i64> = (0..n).map(|i| (a[i][n] / a[i][i]).round() as i64).collect();
    let mut back = vec![0; v.len()];
    for (ci, s) in c.iter().zip(simple) {
        back = add(&back, &scale(s, *ci));
    }
    assert_eq!(
        back, v,
        "vector is not an integral combination of the simple roots"
    );
    c
}

/// Euclidean image of a root given in simple-root coordinates.
pub fn realise(e: &Euclid, coords: &[i64]) -> Vec<i64> {
    let mut v = vec![0; e.simple[0].len()];
    for (c, s) in coords.iter().zip(&e.simple) {
        v = add(&v, &scale(s, *c));
    }
    v
}

/// Set of roots in simple-root coordinates.
pub fn oracle_root_coordinates(label: TypeLabel, n: usize) -> HashSet<Vec<i64>> {
    let e = euclid(label, n);
    e.roots.iter().map(|r| coordinates(&e.simple, r)).collect()
}

/// `2(α_i, α_j)/(α_j, α_j)`.
pub fn oracle_cartan(label: TypeLabel, n: usize) -> Vec<Vec<i64>> {
    let e = euclid(label, n);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| 2 * dot(&e.simple[i], &e.simple[j]) / dot(&e.simple[j], &e.simple[j]))
                .collect()
        })
        .collect()
}

/// Root data of the datum re-expressed in Euclidean terms: index maps for
/// negation, sums and reflections, all derived from vectors.
pub struct Model {
    pub n_roots: usize,
    pub rank: usize,
    pub coords: Vec<Vec<i64>>,
    pub vecs: Vec<Vec<i64>>,
    pub neg: Vec<usize>,
    pub sum: Vec<Vec<Option<usize>>>,
    /// `reflect[g]` is the permutation of root indices induced by `s_g`.
    pub reflect: Vec<Vec<u16>>,
    pub simple: Vec<usize>,
}

impl Model {
    pub fn new(datum: &RootDatum) -> Self {
        let e = euclid(datum.type_label(), datum.rank());
        let coords: Vec<Vec<i64>> = datum.roots().to_vec();
        let vecs: Vec<Vec<i64>> = coords.iter().map(|c| realise(&e, c)).collect();
        let lookup: HashMap<Vec<i64>, usize> = vecs
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let n_roots = vecs.len();
        let neg = vecs.iter().map(|v| lookup[&scale(v, -1)]).collect();
        let sum = (0..n_roots)
            .map(|a| {
                (0..n_roots)
                    .map(|b| lookup.get(&add(&vecs[a], &vecs[b])).copied())
                    .collect()
            })
            .collect();
        let reflect = (0..n_roots)
            .map(|g| {
                let gg = dot(&vecs[g], &vecs[g]);
                (0..n_roots)
                    .map(|b| {
                        let k = 2 * dot(&vecs[b], &vecs[g]) / gg;
                        lookup[&add(&vecs[b], &scale(&vecs[g], -k))] as u16
                    })
                    .collect()
            })
            .collect();
        let simple = (0..datum.rank())
            .map(|k| {
                let mut c = vec![0; datum.rank()];
                c[k] = 1;
                lookup[&realise(&e, &c)]
            })
            .collect();
        Self {
            n_roots,
            rank: datum.rank(),
            coords,
            vecs,
            neg,
            sum,
            reflect,
            simple,
        }
    }

    pub fn is_positive(&self, r: usize) -> bool {
        self.coords[r].iter().any(|&c| c > 0)
    }

    pub fn full(&self) -> u64 {
        if self.n_roots == 64 {
            u64::MAX
        } else {
            (1u64 << self.n_roots) - 1
        }
    }

    pub fn negate_mask(&self, m: u64) -> u64 {
        bits(m).fold(0, |acc, r| acc | (1 << self.neg[r]))
    }

    pub fn is_closed(&self, m: u64) -> bool {
        let members: Vec<usize> = bits(m).collect();
        members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| self.sum[a][b].is_none_or(|s| m & (1 << s) != 0))
        })
    }

    /// Compact roots of a grading: even total coefficient on the marked
    /// simple roots.
    pub fn compact_mask(&self, grading: &[u8]) -> u64 {
        (0..self.n_roots)
            .filter(|&r| {
                let odd: i64 = (0..self.rank)
                    .filter(|&i| grading[i] != 0)
                    .map(|i| self.coords[r][i])
                    .sum();
                odd.rem_euclid(2) == 0
            })
            .fold(0, |acc, r| acc | (1 << r))
    }

    /// Every parabolic subset, by choosing for each positive root whether
    /// `β`, `−β` or both belong.
    pub fn parabolic_masks(&self) -> Vec<u64> {
        let pos: Vec<usize> = (0..self.n_roots).filter(|&r| self.is_positive(r)).collect();
        let total = 3usize.pow(pos.len() as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut m = 0u64;
            for &p in &pos {
                match code % 3 {
                    0 => m |= 1 << p,
                    1 => m |= 1 << self.neg[p],
                    _ => m |= (1 << p) | (1 << self.neg[p]),
                }
                code /= 3;
            }
            if self.is_closed(m) {
                out.push(m);
            }
        }
        out.sort_unstable();
        out
    }

    /// Ordered pairs `(Ψ₁, Ψ₂)` with `Ψ₁ ∪ Ψ₂ = Δ` and `Ψ₁ ∩ Ψ₂` a parabolic
    /// subset of the compact roots.
    pub fn satisfying_pairs(&self, grading: &[u8]) -> Vec<(u64, u64)> {
        let k = self.compact_mask(grading);
        let ps = self.parabolic_masks();
        let mut out = Vec::new();
        for &a in &ps {
            for &b in &ps {
                if a | b != self.full() {
                    continue;
                }
                let q = a & b;
                if q & !k == 0 && (q | self.negate_mask(q)) == k && self.is_closed(q) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// `W` as root permutations, closed under the simple reflections.
    pub fn group(&self) -> Vec<Vec<u16>> {
        let id: Vec<u16> = (0..self.n_roots as u16).collect();
        let mut seen: HashSet<Vec<u16>> = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            for &s in &self.simple {
                let next = compose(&self.reflect[s], &out[i]);
                if seen.insert(next.clone()) {
                    out.push(next);
                }
            }
            i += 1;
        }
        out
    }

    /// `#(W_L \ W / W_J)` by partitioning the enumerated group, where `W_L`
    /// is generated by the reflections in `left_roots`.
    pub fn double_cosets(&self, group: &[Vec<u16>], left_roots: &[usize], j: &[usize]) -> usize {
        let index: HashMap<&Vec<u16>, usize> =
            group.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut parent: Vec<usize> = (0..group.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, w) in group.iter().enumerate() {
            let left = left_roots.iter().map(|&g| compose(&self.reflect[g], w));
            let right = j.iter().map(|&k| compose(w, &self.reflect[self.simple[k]]));
            for other in left.chain(right) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, index[&other]));
                parent[a] = b;
            }
        }
        (0..group.len())
            .filter(|&x| find(&mut parent, x) == x)
            .count()
    }
}

/// `a ∘ b`.
pub fn compose(a: &[u16], b: &[u16]) -> Vec<u16> {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn bits(m: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| m & (1 << i) != 0)
}

pub fn mask_of(set: &flagpair::RootSet) -> u64 {
    set.iter().fold(0, |acc, r| acc | (1 << r))
}

/// All 0/1 gradings except the zero one.
pub fn gradings(rank: usize) -> Vec<Vec<u8>> {
    (1u32..(1 << rank))
        .map(|m| (0..rank).map(|i| ((m >> i) & 1) as u8).collect())
        .collect()
}

/// Every subset of `0..n`.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect()
}

/// Every admissible `(label, rank)` whose Weyl group has at most `bound`
/// elements.
pub fn types_with_weyl_order_at_most(bound: u128) -> Vec<(TypeLabel, usize)> {
    flagpair::CartanType::all_up_to(8)
        .into_iter()
        .filter(|t| t.weyl_order() <= bound)
        .map(|t| (t.label, t.rank))
        .collect()
}
