//! Module-invariant property suites: round trips, walk validity, brute-force
//! agreement for the structural predicates, obstruction and search soundness
//! against the independent enumerator, and constructor closure on random
//! inputs. Everything is seeded and deterministic.

mod common;

use std::collections::HashSet;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hcordial::constructors;
use hcordial::graph::{self, Graph};
use hcordial::labeling::{self, verify, LabelingKind, Tally};
use hcordial::oracle::{self, Decision, Pruning, SearchConfig};

const KINDS: [LabelingKind; 4] = [
    LabelingKind::HCordial,
    LabelingKind::SemiHCordial,
    LabelingKind::ZeroMCordial,
    LabelingKind::HkCordial(2),
];

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, &pairs).unwrap()
}

#[test]
fn text_round_trip_reproduces_random_graphs_exactly() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.random_range(1..=12);
        let g = random_graph(&mut rng, n, 0.4);
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }
}

fn assert_closed_euler_walk(g: &Graph, walk: &[(usize, usize)]) {
    assert_eq!(walk.len(), g.edge_count());
    if walk.is_empty() {
        return;
    }
    for pair in walk.windows(2) {
        assert_eq!(pair[0].1, pair[1].0);
    }
    assert_eq!(walk[0].0, walk[walk.len() - 1].1);
    let mut used = vec![false; g.edge_count()];
    for &(u, v) in walk {
        let idx = g.edge_index(u, v).expect("walk edge exists in the graph");
        assert!(!used[idx], "edge ({u}, {v}) repeated");
        used[idx] = true;
    }
}

#[test]
fn euler_circuits_are_valid_closed_walks_on_all_small_eulerian_graphs() {
    let mut checked = 0;
    for g in connected_graphs_up_to(5) {
        if g.is_eulerian() {
            assert_closed_euler_walk(&g, &g.eulerian_circuit().unwrap());
            checked += 1;
        }
    }
    assert!(checked > 10);
    for g in [Graph::complete(7).unwrap(), Graph::cycle(9).unwrap()] {
        assert_closed_euler_walk(&g, &g.eulerian_circuit().unwrap());
    }
}

fn double_sweep_diameter(t: &Graph) -> usize {
    fn bfs_farthest(adj: &[Vec<usize>], start: usize) -> (usize, usize) {
        let mut dist = vec![usize::MAX; adj.len()];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        let far = (0..adj.len()).max_by_key(|&v| dist[v]).unwrap();
        (far, dist[far])
    }
    let adj = t.adjacency();
    let (u, _) = bfs_farthest(&adj, 0);
    bfs_farthest(&adj, u).1
}

#[test]
fn longest_path_matches_diameter_and_dominates_random_maximal_paths() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..50 {
        let n = rng.random_range(2..=30);
        let t = random_tree(&mut rng, n);
        let best = graph::longest_path(t.edges()).unwrap();
        assert_eq!(best.len(), double_sweep_diameter(&t), "n = {n}");

        let adj = t.adjacency();
        for _ in 0..50 {
            // grow a random maximal path: extend at the back, then the front
            let mut path = vec![rng.random_range(0..n)];
            let mut on_path = vec![false; n];
            on_path[path[0]] = true;
            for end in 0..2 {
                loop {
                    let v = if end == 0 { *path.last().unwrap() } else { path[0] };
                    let options: Vec<usize> =
                        adj[v].iter().copied().filter(|&w| !on_path[w]).collect();
                    if options.is_empty() {
                        break;
                    }
                    let w = options[rng.random_range(0..options.len())];
                    on_path[w] = true;
                    if end == 0 {
                        path.push(w);
                    } else {
                        path.insert(0, w);
                    }
                }
            }
            assert!(path.len() - 1 <= best.len());
        }
    }
}

fn brute_force_hamiltonian(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 3 {
        return false;
    }
    let mut has_edge = vec![false; n * n];
    for &(u, v) in g.edges() {
        has_edge[u * n + v] = true;
        has_edge[v * n + u] = true;
    }
    // all cycles through vertex 0, by permutations of the rest
    let mut order: Vec<usize> = (1..n).collect();
    permute(&mut order, 0, &mut |perm: &[usize]| {
        let mut prev = 0;
        for &v in perm {
            if !has_edge[prev * n + v] {
                return false;
            }
            prev = v;
        }
        has_edge[prev * n]
    })
}

fn permute(items: &mut Vec<usize>, at: usize, accept: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if at == items.len() {
        return accept(items);
    }
    for i in at..items.len() {
        items.swap(at, i);
        if permute(items, at + 1, accept) {
            items.swap(at, i);
            return true;
        }
        items.swap(at, i);
    }
    false
}

#[test]
fn hamiltonicity_agrees_with_permutation_check() {
    // exhaustive over every labeled graph on up to 6 vertices
    for n in 1..=6usize {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        for mask in 0u32..1u32 << pairs.len() {
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &chosen).unwrap();
            assert_eq!(g.is_hamiltonian(), brute_force_hamiltonian(&g), "n={n} mask={mask}");
        }
    }
    // sampled on 7 vertices
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..2000 {
        let g = random_graph(&mut rng, 7, 0.45);
        assert_eq!(g.is_hamiltonian(), brute_force_hamiltonian(&g));
    }
}

#[test]
fn tree_stats_split_covers_all_vertices() {
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..200 {
        let n = rng.random_range(1..=40);
        let t = random_tree(&mut rng, n);
        let stats = t.tree_stats().unwrap();
        assert_eq!(stats.leaves + stats.internal, n);
        assert_eq!(stats.degree_sequence.len(), n);
    }
}

#[test]
fn induced_values_carry_degree_parity_for_unit_labels() {
    let mut rng = StdRng::seed_from_u64(41);
    for _ in 0..300 {
        let n = rng.random_range(1..=10);
        let g = random_graph(&mut rng, n, 0.5);
        let l = random_labeling(&mut rng, &g, 1);
        let induced = l.induced_vertex_labels();
        for (v, &d) in g.degrees().iter().enumerate() {
            assert_eq!(induced[v].rem_euclid(2), (d as i32).rem_euclid(2));
        }
    }
}

#[test]
fn verify_is_pure() {
    let l = constructors::h_cordial_complete(8).unwrap();
    for kind in [LabelingKind::HCordial, LabelingKind::HkCordial(2)] {
        assert_eq!(verify(&l, kind).unwrap(), verify(&l, kind).unwrap());
    }
}

#[test]
fn obstructions_are_sound_on_all_small_connected_graphs() {
    for g in connected_graphs_up_to(5) {
        for kind in KINDS {
            if labeling::obstruction(&g, kind).is_some() {
                assert!(
                    !naive_exists(&g, kind),
                    "obstruction fired but a labeling exists: {:?} {kind:?}",
                    g.edges()
                );
                let out = oracle::decide(&g, &SearchConfig::new(kind));
                assert_eq!(out.decision, Decision::Exhausted);
            }
        }
    }
}

#[test]
fn search_agrees_with_naive_enumerator_on_all_small_connected_graphs() {
    for g in connected_graphs_up_to(5) {
        for kind in KINDS {
            let expected = naive_exists(&g, kind);
            let plain = oracle::decide(&g, &SearchConfig::new(kind));
            assert_eq!(
                matches!(plain.decision, Decision::Found(_)),
                expected,
                "plain search disagrees on {:?} {kind:?}",
                g.edges()
            );
            let pruned =
                oracle::decide(&g, &SearchConfig::new(kind).with_pruning(Pruning::all()));
            assert_eq!(
                matches!(pruned.decision, Decision::Found(_)),
                expected,
                "pruned search disagrees on {:?} {kind:?}",
                g.edges()
            );
        }
    }
}

#[test]
fn first_witnesses_match_the_naive_enumerator() {
    // canonical witness = lexicographically smallest valid assignment
    for g in connected_graphs_up_to(4) {
        for kind in KINDS {
            let naive = naive_witnesses(&g, kind);
            let mut cfg = SearchConfig::new(kind);
            cfg.canonical = true;
            let out = oracle::decide(&g, &cfg);
            match (naive.first(), out.decision) {
                (Some(labels), Decision::Found(w)) => assert_eq!(w.labels(), &labels[..]),
                (None, Decision::Exhausted) => {}
                (expected, got) => panic!("mismatch: naive {expected:?}, search {got:?}"),
            }
        }
    }
}

#[test]
fn symmetry_reduction_preserves_every_decision() {
    let mut rng = StdRng::seed_from_u64(47);
    for trial in 0..100 {
        let kind = KINDS[rng.random_range(0..KINDS.len())];
        let n = match kind {
            LabelingKind::HkCordial(_) => rng.random_range(2..=4),
            _ => rng.random_range(2..=5),
        };
        let g = random_connected_graph(&mut rng, n, 0.55);
        let cfg = SearchConfig::new(kind);
        let plain = oracle::decide(&g, &cfg);
        let reduced = oracle::decide_with_symmetry(&g, &cfg);
        assert_eq!(
            matches!(plain.decision, Decision::Found(_)),
            matches!(reduced.decision, Decision::Found(_)),
            "trial {trial}: {:?} {kind:?}",
            g.edges()
        );
    }
}

#[test]
fn enumerated_zero_m_labelings_balance_edge_tallies() {
    let graphs = [
        Graph::cycle(4).unwrap(),
        Graph::cycle(6).unwrap(),
        Graph::complete(5).unwrap(),
        Graph::new(8, &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)]).unwrap(),
    ];
    for g in graphs {
        let run = oracle::enumerate(&g, &SearchConfig::new(LabelingKind::ZeroMCordial));
        assert!(run.complete);
        assert_eq!(
            run.witnesses.len(),
            naive_witnesses(&g, LabelingKind::ZeroMCordial).len()
        );
        assert!(!run.witnesses.is_empty());
        for w in &run.witnesses {
            let tally = Tally::of(w);
            assert_eq!(tally.edges_labeled(1), tally.edges_labeled(-1));
        }
    }
}

#[test]
fn semi_h_constructor_closure_on_random_odd_trees() {
    let mut rng = StdRng::seed_from_u64(53);
    for _ in 0..50 {
        let n = 2 * rng.random_range(1..=12) + 1;
        let t = random_tree(&mut rng, n);
        let l = constructors::semi_h_tree(&t).unwrap();
        let report = verify(&l, LabelingKind::SemiHCordial).unwrap();
        assert!(report.valid, "{:?}", report.violations);
        assert_eq!(
            report.tally.vertices_labeled(1),
            report.tally.vertices_labeled(-1)
        );
    }
}

#[test]
fn near_semi_constructor_closure_on_random_even_trees() {
    let mut rng = StdRng::seed_from_u64(59);
    for _ in 0..50 {
        let n = 2 * rng.random_range(1..=12);
        let t = random_tree(&mut rng, n);
        let l = constructors::near_semi_h_tree(&t).unwrap();
        let induced = l.induced_vertex_labels();
        assert!(induced.iter().all(|x| x.abs() <= 1));
        let tally = Tally::of(&l);
        assert_eq!(tally.edges_labeled(1).abs_diff(tally.edges_labeled(-1)), 1);
        assert_eq!(
            tally.vertices_labeled(1).abs_diff(tally.vertices_labeled(-1)),
            2
        );
    }
}

#[test]
fn wheel_constructors_cover_all_supported_rims() {
    for n in 3..=12usize {
        if n % 2 == 1 {
            let l = constructors::h_cordial_wheel(n).unwrap();
            assert!(verify(&l, LabelingKind::HCordial).unwrap().valid, "W_{n}");
        } else {
            assert!(constructors::h_cordial_wheel(n).is_err());
        }
        let l = constructors::h2_cordial_wheel(n).unwrap();
        assert!(verify(&l, LabelingKind::HkCordial(2)).unwrap().valid, "W_{n} magnitude 2");
    }
}

#[test]
fn zero_m_constructor_succeeds_exactly_where_characterized() {
    // connected case: all-even degrees plus even size is the whole story
    for g in connected_graphs_up_to(5) {
        let should = g.is_eulerian() && g.edge_count() % 2 == 0;
        match constructors::zero_m(&g) {
            Ok(l) => {
                assert!(should, "constructor succeeded off-spec on {:?}", g.edges());
                assert!(l.induced_vertex_labels().iter().all(|&x| x == 0));
            }
            Err(_) => assert!(!should, "constructor failed on {:?}", g.edges()),
        }
    }
}

#[test]
fn semi_h_trace_accumulator_stays_unit_on_random_trees() {
    let mut rng = StdRng::seed_from_u64(61);
    let mut seen_multi_step = false;
    for _ in 0..40 {
        let n = 2 * rng.random_range(1..=10) + 1;
        let t = random_tree(&mut rng, n);
        let (_, trace) = constructors::semi_h_tree_traced(&t).unwrap();
        seen_multi_step |= trace.steps.len() > 1;
        for step in &trace.steps {
            assert!(step.a_before == 1 || step.a_before == -1);
            assert!(step.a_after == 1 || step.a_after == -1);
            assert!(step.labeled_sum.abs() <= 1);
        }
    }
    assert!(seen_multi_step);
}

#[test]
fn prufer_space_is_deduplicated_cleanly() {
    // the decode is a bijection, so distinct sequences give distinct trees
    let n = 5usize;
    let mut seen = HashSet::new();
    let total = n.pow(n as u32 - 2);
    for code in 0..total {
        let mut seq = Vec::with_capacity(n - 2);
        let mut c = code;
        for _ in 0..n - 2 {
            seq.push(c % n);
            c /= n;
        }
        let t = prufer_decode(n, &seq);
        assert!(t.is_tree());
        seen.insert(t.edges().to_vec());
    }
    assert_eq!(seen.len(), total);
}
