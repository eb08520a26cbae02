//! Oracles shared by the integration suites. None of them touch the Gröbner
//! engine or the normal-form code they are used to check.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use beitoric::{Graph, Monomial, PureBinomial};
use rand::Rng;

/// `x^u - x^v ∈ <generators>` for a homogeneous pure-binomial ideal, decided
/// by breadth-first search over the monomials of degree `deg(u)` connected to
/// `u` by generator moves `m -> m/a·b` and `m -> m/b·a`.
pub fn fiber_connected(u: &Monomial, v: &Monomial, generators: &[PureBinomial]) -> bool {
    if u.degree() != v.degree() {
        return false;
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(u.clone());
    queue.push_back(u.clone());
    while let Some(m) = queue.pop_front() {
        if &m == v {
            return true;
        }
        for g in generators {
            for (from, to) in [(g.lead(), g.trail()), (g.trail(), g.lead())] {
                if from.divides(&m) {
                    let next = m.div(from).checked_mul(to).unwrap();
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    false
}

pub fn brute_member(f: &PureBinomial, generators: &[PureBinomial]) -> bool {
    fiber_connected(f.lead(), f.trail(), generators)
}

/// Every generator of `a` is fiber-connected inside `b` and vice versa.
pub fn brute_equal(a: &[PureBinomial], b: &[PureBinomial]) -> bool {
    a.iter().all(|g| brute_member(g, b)) && b.iter().all(|g| brute_member(g, a))
}

/// All set partitions of `1..=n`, via restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            let blocks = labels.iter().copied().max().map_or(0, |m| m + 1);
            let mut parts = vec![Vec::new(); blocks];
            for (v, &b) in labels.iter().enumerate() {
                parts[b].push(v + 1);
            }
            out.push(parts);
            return;
        }
        let limit = labels.iter().copied().max().map_or(0, |m| m + 1);
        for b in 0..=limit {
            labels.push(b);
            rec(i + 1, n, labels, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

/// Union of cliques on the blocks of a partition.
pub fn clique_union(n: usize, blocks: &[Vec<usize>]) -> Graph {
    let mut edges = Vec::new();
    for b in blocks {
        for (a, &u) in b.iter().enumerate() {
            for &v in &b[a + 1..] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Even cycles by trying every sequence of distinct vertices, reduced to a
/// rotation/reflection-invariant key (the sorted edge set).
pub fn brute_even_cycle_count(g: &Graph, max_len: usize) -> usize {
    let n = g.n();
    let mut found: BTreeSet<BTreeSet<(usize, usize)>> = BTreeSet::new();
    let mut len = 4;
    while len <= max_len.min(n) {
        let mut seq = Vec::new();
        sequences(n, len, &mut seq, &mut |s| {
            let closed = (0..len).all(|i| g.has_edge(s[i], s[(i + 1) % len]));
            if closed {
                let edges = (0..len)
                    .map(|i| {
                        let (a, b) = (s[i], s[(i + 1) % len]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                found.insert(edges);
            }
        });
        len += 2;
    }
    found.len()
}

fn sequences(n: usize, len: usize, seq: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if seq.len() == len {
        visit(seq);
        return;
    }
    for v in 1..=n {
        if !seq.contains(&v) {
            seq.push(v);
            sequences(n, len, seq, visit);
            seq.pop();
        }
    }
}

/// Formal signed sum of monomials; zero entries are dropped.
#[derive(Default, Debug, PartialEq, Eq)]
pub struct FormalSum(BTreeMap<Vec<u32>, i64>);

impl FormalSum {
    pub fn add(&mut self, coeff: i64, m: &Monomial) {
        let e = self.0.entry(m.exponents().to_vec()).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.0.remove(m.exponents());
        }
    }

    /// Adds `coeff · multiplier · (lead - trail)`.
    pub fn add_binomial(&mut self, coeff: i64, multiplier: &Monomial, b: &PureBinomial) {
        for (sign, term) in b.terms() {
            self.add(coeff * sign, &term.checked_mul(multiplier).unwrap());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Clique union with random block sizes summing to `n`, and randomly
/// scattered vertex labels.
pub fn random_clique_union<R: Rng>(rng: &mut R, n: usize) -> (Graph, Vec<usize>) {
    let mut labels: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        labels.swap(i, rng.gen_range(0..=i));
    }
    let mut blocks = Vec::new();
    let mut sizes = Vec::new();
    let mut rest = &labels[..];
    while !rest.is_empty() {
        let k = rng.gen_range(1..=rest.len());
        let mut block = rest[..k].to_vec();
        block.sort_unstable();
        blocks.push(block);
        sizes.push(k);
        rest = &rest[k..];
    }
    (clique_union(n, &blocks), sizes)
}

pub fn all_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n)
        .flat_map(|n| (0..1u64 << Graph::pair_count(n)).map(move |m| Graph::from_edge_mask(n, m)))
}
