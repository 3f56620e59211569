//! Constructive labelers, one per supported family. Every constructor runs
//! the matching verifier on its own output and returns a construction-bug
//! error rather than an invalid labeling.

use thiserror::Error;

use crate::graph::{self, Graph, GraphError};
use crate::labeling::{verify, Labeling, LabelingError, LabelingKind, Obstruction, Tally};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("not a tree: {n} vertices, {m} edges, connected: {connected}")]
    NotATree { n: usize, m: usize, connected: bool },
    #[error("the tree has {0} vertices (even); no such labeling exists")]
    EvenVertexTree(usize),
    #[error("the tree has {0} vertices (odd); use the direct tree labeler")]
    OddVertexTree(usize),
    #[error("{0}")]
    Obstructed(Obstruction),
    #[error("K_3 admits no uniform-magnitude labeling; all 8 assignments fail")]
    CompleteThree,
    #[error("construction bug: the {kind} check failed on the built labeling: {details}")]
    SelfValidation { kind: LabelingKind, details: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// One step of the tree algorithm: the path chosen from the still-unlabeled
/// edge set, the accumulator before and after the step, and the running sum
/// of all labels assigned so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub path: Vec<usize>,
    pub a_before: i32,
    pub a_after: i32,
    pub labeled_sum: i32,
}

/// Diagnostic record of a tree-labeling run. After every step the
/// accumulator stays in {-1, +1} and every vertex whose incident edges are
/// all labeled has induced magnitude at most 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlgorithmTrace {
    pub steps: Vec<TraceStep>,
}

fn not_a_tree(g: &Graph) -> ConstructError {
    ConstructError::NotATree {
        n: g.vertex_count(),
        m: g.edge_count(),
        connected: g.is_connected(),
    }
}

fn validated(l: Labeling, kind: LabelingKind) -> Result<Labeling, ConstructError> {
    let report = verify(&l, kind)?;
    if report.valid {
        Ok(l)
    } else {
        let details = report
            .violations
            .iter()
            .map(|v| format!("[{}] {}", v.condition, v.detail))
            .collect::<Vec<_>>()
            .join("; ");
        Err(ConstructError::SelfValidation { kind, details })
    }
}

/// Labels an odd-order tree so that every induced value has magnitude at most
/// one and both tallies balance exactly.
///
/// The algorithm repeatedly takes the longest path among the unlabeled edges,
/// labels it alternately starting with `-a`, and resets `a` to the running
/// label sum (or +1 when that sum is 0).
pub fn semi_h_tree(t: &Graph) -> Result<Labeling, ConstructError> {
    semi_h_tree_traced(t).map(|(l, _)| l)
}

/// [`semi_h_tree`] with the per-step diagnostic trace.
pub fn semi_h_tree_traced(t: &Graph) -> Result<(Labeling, AlgorithmTrace), ConstructError> {
    if !t.is_tree() {
        return Err(not_a_tree(t));
    }
    if t.vertex_count().is_multiple_of(2) {
        return Err(ConstructError::EvenVertexTree(t.vertex_count()));
    }

    let mut labels: Vec<Option<i32>> = vec![None; t.edge_count()];
    let mut remaining: Vec<(usize, usize)> = t.edges().to_vec();
    let mut a = 1i32;
    let mut labeled_sum = 0i32;
    let mut trace = AlgorithmTrace::default();

    while !remaining.is_empty() {
        let path = graph::longest_path(&remaining)?;
        let a_before = a;
        for (i, (x, y)) in path.edges().enumerate() {
            // edges along the path are e_1..e_p; e_i takes (-1)^i * a
            let label = if (i + 1) % 2 == 0 { a } else { -a };
            let idx = t.edge_index(x, y).expect("path edge belongs to the tree");
            labels[idx] = Some(label);
            labeled_sum += label;
            let key = if x < y { (x, y) } else { (y, x) };
            remaining.retain(|&e| e != key);
        }
        a = if labeled_sum != 0 { labeled_sum } else { 1 };
        trace.steps.push(TraceStep {
            path: path.vertices().to_vec(),
            a_before,
            a_after: a,
            labeled_sum,
        });
        if a != 1 && a != -1 {
            return Err(ConstructError::SelfValidation {
                kind: LabelingKind::SemiHCordial,
                details: format!("accumulator left {{-1, +1}}: a = {a}"),
            });
        }
    }

    let labels: Vec<i32> = labels.into_iter().map(|l| l.expect("all edges labeled")).collect();
    let labeling = Labeling::new(t.clone(), labels)?;
    let labeling = validated(labeling, LabelingKind::SemiHCordial)?;
    let tally = Tally::of(&labeling);
    if tally.vertices_labeled(1) != tally.vertices_labeled(-1) {
        return Err(ConstructError::SelfValidation {
            kind: LabelingKind::SemiHCordial,
            details: format!(
                "v(1) = {} and v(-1) = {} must be equal on an odd-order tree",
                tally.vertices_labeled(1),
                tally.vertices_labeled(-1)
            ),
        });
    }
    Ok((labeling, trace))
}

/// Labels an even-order tree with |f(v)| <= 1 everywhere, edge tallies off by
/// exactly one, and vertex tallies off by exactly two.
///
/// Built by attaching a phantom edge to the smallest leaf, labeling the
/// augmented odd-order tree, and dropping the phantom label.
pub fn near_semi_h_tree(t: &Graph) -> Result<Labeling, ConstructError> {
    if !t.is_tree() {
        return Err(not_a_tree(t));
    }
    let n = t.vertex_count();
    if !n.is_multiple_of(2) {
        return Err(ConstructError::OddVertexTree(n));
    }

    let leaf = t
        .degrees()
        .iter()
        .position(|&d| d == 1)
        .expect("a tree on >= 2 vertices has a leaf");
    let mut pairs = t.edges().to_vec();
    pairs.push((leaf, n));
    let augmented = Graph::new(n + 1, &pairs)?;
    let (aug, _) = semi_h_tree_traced(&augmented)?;

    let labels: Vec<i32> = t
        .edges()
        .iter()
        .map(|&(u, v)| aug.label_of(u, v).expect("tree edge survives augmentation"))
        .collect();
    let labeling = Labeling::new(t.clone(), labels)?;

    let induced = labeling.induced_vertex_labels();
    let tally = Tally::of(&labeling);
    let e_gap = tally.edges_labeled(1).abs_diff(tally.edges_labeled(-1));
    let v_gap = tally.vertices_labeled(1).abs_diff(tally.vertices_labeled(-1));
    let mut problems = Vec::new();
    if let Some(v) = induced.iter().position(|x| x.abs() > 1) {
        problems.push(format!("vertex {v} has induced value {}", induced[v]));
    }
    if e_gap != 1 {
        problems.push(format!("edge tally gap is {e_gap}, expected exactly 1"));
    }
    if v_gap != 2 {
        problems.push(format!("vertex tally gap is {v_gap}, expected exactly 2"));
    }
    if !problems.is_empty() {
        return Err(ConstructError::SelfValidation {
            kind: LabelingKind::SemiHCordial,
            details: problems.join("; "),
        });
    }
    Ok(labeling)
}

/// Labels every edge so that each induced vertex value is exactly 0, by
/// alternating +1/-1 along an Euler tour of each component. Requires every
/// component to have all degrees even and evenly many edges.
pub fn zero_m(g: &Graph) -> Result<Labeling, ConstructError> {
    let degrees = g.degrees();
    let mut labels = vec![0i32; g.edge_count()];
    for comp in g.components() {
        if let Some(&v) = comp.iter().find(|&&v| !degrees[v].is_multiple_of(2)) {
            return Err(ConstructError::Obstructed(Obstruction::OddDegree { vertex: v }));
        }
        let comp_edges = comp.iter().map(|&v| degrees[v]).sum::<usize>() / 2;
        if comp_edges % 2 != 0 {
            return Err(ConstructError::Obstructed(Obstruction::OddComponentEdges {
                representative: comp[0],
                edges: comp_edges,
            }));
        }
        if comp.len() == 1 {
            continue;
        }
        let local = |v: usize| comp.binary_search(&v).unwrap();
        let sub_pairs: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .filter(|&&(u, _)| comp.binary_search(&u).is_ok())
            .map(|&(u, v)| (local(u), local(v)))
            .collect();
        let sub = Graph::new(comp.len(), &sub_pairs)?;
        for (i, (a, b)) in sub.eulerian_circuit()?.into_iter().enumerate() {
            let idx = g.edge_index(comp[a], comp[b]).expect("tour edge exists");
            labels[idx] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    let labeling = Labeling::new(g.clone(), labels)?;
    validated(labeling, LabelingKind::ZeroMCordial)
}

/// A uniform-magnitude labeling of the complete graph K_n, defined for
/// n = 0 or 3 (mod 4) with n != 3.
///
/// For n = 0 (mod 4), a perfect matching labeled in balanced alternation
/// carries the vertex values and the rest of the graph is an Euler tour
/// labeled to cancel (K = 1). For n = 3 (mod 4), the first four core
/// vertices and the last three vertices take a hard-coded 15-edge pattern,
/// every further block of four core vertices a hard-coded 12-edge pattern,
/// on top of the K_(n-3) labeling (K = 2; degrees are even, so magnitude 1
/// is out of reach).
pub fn h_cordial_complete(n: usize) -> Result<Labeling, ConstructError> {
    match n % 4 {
        1 | 2 => {
            return Err(ConstructError::Obstructed(Obstruction::SizeParity {
                n,
                m: n * (n - 1) / 2,
            }))
        }
        3 if n == 3 => return Err(ConstructError::CompleteThree),
        _ => {}
    }
    let g = Graph::complete(n)?;
    let labels = if n.is_multiple_of(4) {
        complete_even_core(&g)?
    } else {
        let core_n = n - 3;
        let core = Graph::complete(core_n)?;
        let core_labels = complete_even_core(&core)?;
        let mut labels = vec![0i32; g.edge_count()];
        for (&(a, b), &label) in core.edges().iter().zip(&core_labels) {
            labels[g.edge_index(a, b).unwrap()] = label;
        }
        let (u, v, w) = (n - 3, n - 2, n - 1);
        for i in 1..=core_n / 4 {
            let base = 4 * (i - 1);
            let (ai, bi, ci, di) = (base, base + 1, base + 2, base + 3);
            let table: &[((usize, usize), i32)] = if i == 1 {
                &[
                    ((v, w), 1),
                    ((w, bi), 1),
                    ((u, bi), 1),
                    ((u, ai), 1),
                    ((v, ai), 1),
                    ((u, ci), 1),
                    ((u, di), 1),
                    ((u, w), -1),
                    ((w, di), -1),
                    ((w, ci), -1),
                    ((w, ai), -1),
                    ((u, v), -1),
                    ((v, bi), -1),
                    ((v, ci), -1),
                    ((v, di), -1),
                ]
            } else {
                &[
                    ((u, ai), 1),
                    ((u, bi), 1),
                    ((v, ai), 1),
                    ((v, ci), 1),
                    ((w, bi), 1),
                    ((w, di), 1),
                    ((u, ci), -1),
                    ((u, di), -1),
                    ((v, bi), -1),
                    ((v, di), -1),
                    ((w, ai), -1),
                    ((w, ci), -1),
                ]
            };
            for &((a, b), label) in table {
                labels[g.edge_index(a, b).unwrap()] = label;
            }
        }
        labels
    };
    let labeling = Labeling::new(g, labels)?;
    validated(labeling, LabelingKind::HCordial)
}

// K_n for n = 0 (mod 4): 1-factor pairs (2i, 2i+1) labeled by pair parity,
// Euler tour of the complement alternating from +1.
fn complete_even_core(g: &Graph) -> Result<Vec<i32>, ConstructError> {
    let n = g.vertex_count();
    debug_assert!(n.is_multiple_of(4) && n >= 4);
    let mut labels = vec![0i32; g.edge_count()];
    for i in 0..n / 2 {
        let idx = g.edge_index(2 * i, 2 * i + 1).unwrap();
        labels[idx] = if i % 2 == 0 { 1 } else { -1 };
    }
    let rest: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1))
        .collect();
    let tour_graph = Graph::new(n, &rest)?;
    for (i, (a, b)) in tour_graph.eulerian_circuit()?.into_iter().enumerate() {
        let idx = g.edge_index(a, b).unwrap();
        labels[idx] = if i % 2 == 0 { 1 } else { -1 };
    }
    Ok(labels)
}

/// A uniform-magnitude labeling of the wheel with odd rim size n: spokes to
/// even rim vertices and to vertex 1 take +1, rim edges leaving even vertices
/// take +1, everything else -1. Induced values alternate (-1)^i around the
/// rim with +1 at the hub.
pub fn h_cordial_wheel(n: usize) -> Result<Labeling, ConstructError> {
    let g = Graph::wheel(n)?;
    if n.is_multiple_of(2) {
        return Err(ConstructError::Obstructed(Obstruction::SizeParity {
            n: n + 1,
            m: 2 * n,
        }));
    }
    let labeling = wheel_labeling(&g, n, 1)?;
    let labeling = validated(labeling, LabelingKind::HCordial)?;
    let tally = Tally::of(&labeling);
    let induced = labeling.induced_vertex_labels();
    let expected_per_side = n.div_ceil(2);
    let pattern_ok = induced[0] == 1
        && (1..=n).all(|i| induced[i] == if i % 2 == 0 { 1 } else { -1 });
    if tally.edges_labeled(1) != n
        || tally.edges_labeled(-1) != n
        || tally.vertices_labeled(1) != expected_per_side
        || tally.vertices_labeled(-1) != expected_per_side
        || !pattern_ok
    {
        return Err(ConstructError::SelfValidation {
            kind: LabelingKind::HCordial,
            details: format!("wheel tallies or induced pattern off: {tally:?}, {induced:?}"),
        });
    }
    Ok(labeling)
}

/// Spoke label for rim vertex i of the odd-rim wheel labeling.
fn wheel_labeling(g: &Graph, n: usize, spoke_one: i32) -> Result<Labeling, ConstructError> {
    let mut labels = vec![0i32; g.edge_count()];
    for i in 1..=n {
        let spoke = if i == 1 {
            spoke_one
        } else if i % 2 == 0 {
            1
        } else {
            -1
        };
        labels[g.edge_index(0, i).unwrap()] = spoke;
        let j = if i == n { 1 } else { i + 1 };
        labels[g.edge_index(i, j).unwrap()] = if i % 2 == 0 { 1 } else { -1 };
    }
    Ok(Labeling::new(g.clone(), labels)?)
}

/// A magnitude-2 labeling of any wheel. Odd rim sizes delegate to the
/// uniform-magnitude wheel labeling; even rim sizes alternate (-1)^i on both
/// rim and spokes with the one special spoke to vertex 1 labeled -2.
///
/// The +2 variant of the special spoke puts induced value 3 on the hub
/// (the spokes to vertices 2..=n sum to +1), so -2 it is.
pub fn h2_cordial_wheel(n: usize) -> Result<Labeling, ConstructError> {
    let labeling = if n % 2 == 1 {
        h_cordial_wheel(n)?
    } else {
        let g = Graph::wheel(n)?;
        let mut labels = vec![0i32; g.edge_count()];
        labels[g.edge_index(0, 1).unwrap()] = -2;
        for i in 2..=n {
            labels[g.edge_index(0, i).unwrap()] = if i % 2 == 0 { 1 } else { -1 };
        }
        for i in 1..=n {
            let j = if i == n { 1 } else { i + 1 };
            labels[g.edge_index(i, j).unwrap()] = if i % 2 == 0 { 1 } else { -1 };
        }
        Labeling::new(g, labels)?
    };
    validated(labeling, LabelingKind::HkCordial(2))
}

/// A magnitude-2 labeling of K_n for n = 0 or 3 (mod 4), n != 3: the
/// uniform-magnitude labeling re-checked against the magnitude-2 conditions.
/// n = 2 (mod 4) is rejected outright (even order with odd size).
pub fn h2_cordial_complete(n: usize) -> Result<Labeling, ConstructError> {
    if n % 4 == 2 {
        return Err(ConstructError::Obstructed(Obstruction::EvenOrderOddSize {
            n,
            m: n * (n - 1) / 2,
        }));
    }
    let labeling = h_cordial_complete(n)?;
    validated(labeling, LabelingKind::HkCordial(2))
}
