//! Shared helpers for the integration and acceptance suites: exhaustive
//! small-graph enumeration, an independent from-scratch validity checker with
//! odometer enumeration (the reference oracle for the search engine), Prüfer
//! tree decoding, and seeded random generators.

#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::rngs::StdRng;
use rand::Rng;

use hcordial::graph::Graph;
use hcordial::labeling::{Labeling, LabelingKind};

/// All labeled connected graphs on exactly `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..1u32 << pairs.len() {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &chosen).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// All labeled connected graphs with 1..=n vertices.
pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_graphs).collect()
}

/// From-scratch validity check of the definitional conditions. Written
/// independently of both the search engine and the production verifier so it
/// can arbitrate either.
pub fn naive_valid(g: &Graph, labels: &[i32], kind: LabelingKind) -> bool {
    let mut induced = vec![0i32; g.vertex_count()];
    for (&(u, v), &l) in g.edges().iter().zip(labels) {
        induced[u] += l;
        induced[v] += l;
    }
    let count_e = |c: i32| labels.iter().filter(|&&l| l == c).count() as i64;
    let count_v = |c: i32| induced.iter().filter(|&&x| x == c).count() as i64;
    match kind {
        LabelingKind::HCordial => {
            let k = induced.first().map(|x| x.abs()).unwrap_or(0);
            k > 0
                && induced.iter().all(|x| x.abs() == k)
                && (count_e(1) - count_e(-1)).abs() <= 1
                && (count_v(k) - count_v(-k)).abs() <= 1
        }
        LabelingKind::SemiHCordial => {
            induced.iter().all(|x| x.abs() <= 1)
                && (count_e(1) - count_e(-1)).abs() <= 1
                && (count_v(1) - count_v(-1)).abs() <= 1
        }
        LabelingKind::ZeroMCordial => induced.iter().all(|&x| x == 0),
        LabelingKind::HkCordial(k) => {
            let k = k as i32;
            induced.iter().all(|x| x.abs() >= 1 && x.abs() <= k)
                && (1..=k).all(|i| {
                    (count_e(i) - count_e(-i)).abs() <= 1
                        && (count_v(i) - count_v(-i)).abs() <= 1
                })
        }
    }
}

/// Runs `f` over every assignment of `m` labels from the alphabet
/// `-k..=-1, 1..=k`, in lexicographic order.
pub fn each_assignment(m: usize, k: u32, mut f: impl FnMut(&[i32])) {
    let values: Vec<i32> = (-(k as i32)..=-1).chain(1..=k as i32).collect();
    let mut idx = vec![0usize; m];
    let mut labels: Vec<i32> = vec![values[0]; m];
    loop {
        f(&labels);
        let mut pos = m;
        while pos > 0 {
            pos -= 1;
            if idx[pos] + 1 < values.len() {
                idx[pos] += 1;
                labels[pos] = values[idx[pos]];
                for p in pos + 1..m {
                    idx[p] = 0;
                    labels[p] = values[0];
                }
                break;
            }
            if pos == 0 {
                return;
            }
        }
        if m == 0 {
            return;
        }
    }
}

/// Whether any assignment satisfies the definition, by plain enumeration.
pub fn naive_exists(g: &Graph, kind: LabelingKind) -> bool {
    let mut found = false;
    each_assignment(g.edge_count(), kind.alphabet_bound(), |labels| {
        if !found && naive_valid(g, labels, kind) {
            found = true;
        }
    });
    found
}

/// Every valid assignment, in lexicographic order.
pub fn naive_witnesses(g: &Graph, kind: LabelingKind) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    each_assignment(g.edge_count(), kind.alphabet_bound(), |labels| {
        if naive_valid(g, labels, kind) {
            out.push(labels.to_vec());
        }
    });
    out
}

/// Decodes a Prüfer sequence over `0..n` into the labeled tree on `n`
/// vertices. The sequence length must be `n - 2` (empty for `n <= 2`).
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    if n <= 1 {
        return Graph::new(n, &[]).unwrap();
    }
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1u32; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&i| degree[i] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let Reverse(u) = leaves.pop().unwrap();
        degree[u] -= 1;
        degree[a] -= 1;
        edges.push((u, a));
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    edges.push((u, v));
    Graph::new(n, &edges).unwrap()
}

/// A uniformly random labeled tree on `n` vertices (uniform Prüfer sequence).
pub fn random_tree(rng: &mut StdRng, n: usize) -> Graph {
    if n <= 2 {
        return prufer_decode(n, &[]);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    prufer_decode(n, &seq)
}

/// A random connected graph on `n` vertices with edge probability `p`,
/// resampled until connected.
pub fn random_connected_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    loop {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    pairs.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &pairs).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// A random labeling of `g` with labels drawn from `-bound..=-1, 1..=bound`.
pub fn random_labeling(rng: &mut StdRng, g: &Graph, bound: u32) -> Labeling {
    let labels: Vec<i32> = (0..g.edge_count())
        .map(|_| {
            let mag = rng.random_range(1..=bound as i32);
            if rng.random_bool(0.5) {
                mag
            } else {
                -mag
            }
        })
        .collect();
    Labeling::new(g.clone(), labels).unwrap()
}
