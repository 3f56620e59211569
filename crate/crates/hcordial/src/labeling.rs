//! Edge labelings with induced vertex values, tallies, the four definition
//! verifiers, the necessary-condition (obstruction) predicates, and the
//! label-reversal transform.
//!
//! A labeling assigns a nonzero integer to every edge; the induced value of a
//! vertex is the sum over its incident edges. The verifiers check:
//!
//! * uniform-magnitude (`HCordial`): labels in {-1,+1}, a positive constant K
//!   with |f(v)| = K everywhere, |e(1)-e(-1)| <= 1 and |v(K)-v(-K)| <= 1;
//! * `SemiHCordial`: labels in {-1,+1}, |f(v)| <= 1, both tallies balanced
//!   within 1;
//! * `ZeroMCordial`: labels in {-1,+1}, every induced value exactly 0;
//! * `HkCordial(k)`: labels and induced values with magnitude in 1..=k, and
//!   per-magnitude edge and vertex tallies balanced within 1.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("expected {expected} labels for {expected} edges, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
    #[error("edge ({u}, {v}) has label 0; labels must be nonzero")]
    ZeroLabel { u: usize, v: usize },
    #[error("edge ({u}, {v}) has label {label}, outside the alphabet {alphabet} of {kind}")]
    AlphabetViolation { u: usize, v: usize, label: i32, alphabet: String, kind: LabelingKind },
    #[error("k must be at least 1")]
    InvalidK,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which labeling definition applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelingKind {
    HCordial,
    SemiHCordial,
    ZeroMCordial,
    HkCordial(u32),
}

impl LabelingKind {
    /// Largest label magnitude the kind's alphabet allows.
    pub fn alphabet_bound(self) -> u32 {
        match self {
            LabelingKind::HkCordial(k) => k,
            _ => 1,
        }
    }

    fn validate(self) -> Result<(), LabelingError> {
        match self {
            LabelingKind::HkCordial(0) => Err(LabelingError::InvalidK),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for LabelingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelingKind::HCordial => write!(f, "H-cordial"),
            LabelingKind::SemiHCordial => write!(f, "semi-H-cordial"),
            LabelingKind::ZeroMCordial => write!(f, "zero-M-cordial"),
            LabelingKind::HkCordial(k) => write!(f, "H_{k}-cordial"),
        }
    }
}

/// A graph together with one nonzero integer label per edge, aligned with the
/// graph's normalized edge order. Induced vertex values are always derived,
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLabeling", into = "RawLabeling")]
pub struct Labeling {
    graph: Graph,
    labels: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawLabeling {
    graph: Graph,
    labels: Vec<i32>,
}

impl From<Labeling> for RawLabeling {
    fn from(l: Labeling) -> Self {
        RawLabeling { graph: l.graph, labels: l.labels }
    }
}

impl TryFrom<RawLabeling> for Labeling {
    type Error = LabelingError;

    fn try_from(raw: RawLabeling) -> Result<Self, Self::Error> {
        Labeling::new(raw.graph, raw.labels)
    }
}

impl Labeling {
    pub fn new(graph: Graph, labels: Vec<i32>) -> Result<Self, LabelingError> {
        if labels.len() != graph.edge_count() {
            return Err(LabelingError::LabelCountMismatch {
                expected: graph.edge_count(),
                got: labels.len(),
            });
        }
        if let Some(idx) = labels.iter().position(|&l| l == 0) {
            let (u, v) = graph.edges()[idx];
            return Err(LabelingError::ZeroLabel { u, v });
        }
        Ok(Labeling { graph, labels })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    /// Label of edge `{a, b}`.
    pub fn label_of(&self, a: usize, b: usize) -> Option<i32> {
        self.graph.edge_index(a, b).map(|i| self.labels[i])
    }

    /// The induced vertex values: position v holds the sum of the labels of
    /// the edges incident to v. Isolated vertices get 0.
    pub fn induced_vertex_labels(&self) -> Vec<i32> {
        let mut induced = vec![0i32; self.graph.vertex_count()];
        for (&(u, v), &label) in self.graph.edges().iter().zip(&self.labels) {
            induced[u] += label;
            induced[v] += label;
        }
        induced
    }

    /// Every label sign-flipped.
    pub fn negate(&self) -> Labeling {
        Labeling {
            graph: self.graph.clone(),
            labels: self.labels.iter().map(|&l| -l).collect(),
        }
    }

    /// The label-reversal transform over the alphabet `±1..=±k`: positive `x`
    /// maps to `k + 1 - x` and negative `x` to `-k - 1 - x`, so the magnitude
    /// order inside each sign class is reversed.
    pub fn star_transform(&self, k: u32) -> Result<Labeling, LabelingError> {
        if k == 0 {
            return Err(LabelingError::InvalidK);
        }
        let kind = LabelingKind::HkCordial(k);
        check_alphabet(self, kind)?;
        let k = k as i32;
        let labels = self
            .labels
            .iter()
            .map(|&l| if l > 0 { k + 1 - l } else { -k - 1 - l })
            .collect();
        Ok(Labeling { graph: self.graph.clone(), labels })
    }

    /// Parses the labeled-graph text format: `n m`, then `m` lines `u v L`
    /// with `L` a nonzero integer. Comment and blank lines as in the plain
    /// graph format. Labels are re-sorted into the normalized edge order.
    pub fn parse(text: &str) -> Result<Self, LabelingError> {
        let mut data = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = data.next().ok_or(GraphError::Parse {
            line: 0,
            msg: "missing header line \"n m\"".into(),
        })?;
        let header = crate::graph::parse_fields::<usize>(line, header, 2, "n m")?;
        let (n, m) = (header[0], header[1]);
        let mut rows: Vec<(usize, usize, i32)> = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, text) = data.next().ok_or(GraphError::Parse {
                line: 0,
                msg: format!("expected {m} edge lines, found {}", rows.len()),
            })?;
            let fields = crate::graph::parse_fields::<i64>(line, text, 3, "u v L")?;
            if fields[0] < 0 || fields[1] < 0 {
                return Err(GraphError::Parse { line, msg: "negative vertex id".into() }.into());
            }
            let (a, b) = (fields[0] as usize, fields[1] as usize);
            let label = i32::try_from(fields[2])
                .map_err(|_| GraphError::Parse { line, msg: "label out of range".into() })?;
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            rows.push((u, v, label));
        }
        if let Some((line, _)) = data.next() {
            return Err(GraphError::Parse { line, msg: "trailing data after edge list".into() }.into());
        }
        rows.sort_unstable_by_key(|&(u, v, _)| (u, v));
        let pairs: Vec<_> = rows.iter().map(|&(u, v, _)| (u, v)).collect();
        let labels: Vec<_> = rows.iter().map(|&(_, _, l)| l).collect();
        let graph = Graph::new(n, &pairs)?;
        Labeling::new(graph, labels)
    }

    /// Canonical labeled-graph text form.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.graph.vertex_count(), self.graph.edge_count());
        for (&(u, v), &label) in self.graph.edges().iter().zip(&self.labels) {
            out.push_str(&format!("{u} {v} {label}\n"));
        }
        out
    }
}

/// The handshake identity: the induced values always sum to twice the label
/// sum. Holds for every labeling; exposed as a test oracle.
pub fn check_handshake(l: &Labeling) -> bool {
    let vertex_side: i64 = l.induced_vertex_labels().iter().map(|&x| x as i64).sum();
    let edge_side: i64 = l.labels().iter().map(|&x| x as i64).sum();
    vertex_side == 2 * edge_side
}

/// Edge and vertex tallies keyed by exact label value. Values outside the
/// kind's alphabet still appear, so malformed inputs produce informative
/// reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub edge: BTreeMap<i32, usize>,
    pub vertex: BTreeMap<i32, usize>,
}

impl Tally {
    pub fn of(l: &Labeling) -> Tally {
        let mut edge = BTreeMap::new();
        for &label in l.labels() {
            *edge.entry(label).or_insert(0) += 1;
        }
        let mut vertex = BTreeMap::new();
        for value in l.induced_vertex_labels() {
            *vertex.entry(value).or_insert(0) += 1;
        }
        Tally { edge, vertex }
    }

    /// Number of edges labeled `c`.
    pub fn edges_labeled(&self, c: i32) -> usize {
        self.edge.get(&c).copied().unwrap_or(0)
    }

    /// Number of vertices with induced value `c`.
    pub fn vertices_labeled(&self, c: i32) -> usize {
        self.vertex.get(&c).copied().unwrap_or(0)
    }
}

/// A definitional condition a verifier can report against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Condition {
    /// |f(v)| outside the kind's allowed range.
    VertexMagnitude,
    /// Induced magnitudes are not a uniform positive constant.
    UniformMagnitude,
    /// |e(i) - e(-i)| > 1 for some magnitude i.
    EdgeBalance,
    /// |v(i) - v(-i)| > 1 for some magnitude i.
    VertexBalance,
    /// An induced value is not 0.
    InducedZero,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Condition::VertexMagnitude => "vertex-magnitude",
            Condition::UniformMagnitude => "uniform-magnitude",
            Condition::EdgeBalance => "edge-balance",
            Condition::VertexBalance => "vertex-balance",
            Condition::InducedZero => "induced-zero",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub detail: String,
}

/// Outcome of a verifier run: validity, full tallies, the inferred constant K
/// (uniform-magnitude kind only), and the itemized violations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: LabelingKind,
    pub valid: bool,
    pub tally: Tally,
    pub inferred_k: Option<i32>,
    pub violations: Vec<Violation>,
}

fn check_alphabet(l: &Labeling, kind: LabelingKind) -> Result<(), LabelingError> {
    let bound = kind.alphabet_bound() as i32;
    for (&(u, v), &label) in l.graph().edges().iter().zip(l.labels()) {
        if label.abs() < 1 || label.abs() > bound {
            let alphabet = if bound == 1 {
                "{-1, +1}".to_string()
            } else {
                format!("±1..=±{bound}")
            };
            return Err(LabelingError::AlphabetViolation { u, v, label, alphabet, kind });
        }
    }
    Ok(())
}

/// Runs the verifier for `kind` over `l`. Labels outside the kind's alphabet
/// are rejected before tallying; everything else lands in the report.
pub fn verify(l: &Labeling, kind: LabelingKind) -> Result<VerificationReport, LabelingError> {
    kind.validate()?;
    check_alphabet(l, kind)?;
    let induced = l.induced_vertex_labels();
    let tally = Tally::of(l);
    let mut violations = Vec::new();
    let mut inferred_k = None;

    match kind {
        LabelingKind::HCordial => {
            let k = induced.first().map(|v| v.abs()).unwrap_or(0);
            inferred_k = Some(k);
            for (v, &value) in induced.iter().enumerate() {
                if value == 0 {
                    violations.push(Violation {
                        condition: Condition::UniformMagnitude,
                        detail: format!("vertex {v} has induced value 0; K must be positive"),
                    });
                } else if value.abs() != k {
                    violations.push(Violation {
                        condition: Condition::UniformMagnitude,
                        detail: format!(
                            "vertex {v} has induced magnitude {}, but vertex 0 fixes K = {k}",
                            value.abs()
                        ),
                    });
                }
            }
            check_balance(&tally, 1, &mut violations);
            if k > 0 {
                let (p, m) = (tally.vertices_labeled(k), tally.vertices_labeled(-k));
                if p.abs_diff(m) > 1 {
                    violations.push(Violation {
                        condition: Condition::VertexBalance,
                        detail: format!("v({k}) = {p}, v({}) = {m}", -k),
                    });
                }
            }
        }
        LabelingKind::SemiHCordial => {
            for (v, &value) in induced.iter().enumerate() {
                if value.abs() > 1 {
                    violations.push(Violation {
                        condition: Condition::VertexMagnitude,
                        detail: format!("vertex {v} has induced value {value}, |f(v)| must be <= 1"),
                    });
                }
            }
            check_balance(&tally, 1, &mut violations);
            let (p, m) = (tally.vertices_labeled(1), tally.vertices_labeled(-1));
            if p.abs_diff(m) > 1 {
                violations.push(Violation {
                    condition: Condition::VertexBalance,
                    detail: format!("v(1) = {p}, v(-1) = {m}"),
                });
            }
        }
        LabelingKind::ZeroMCordial => {
            for (v, &value) in induced.iter().enumerate() {
                if value != 0 {
                    violations.push(Violation {
                        condition: Condition::InducedZero,
                        detail: format!("vertex {v} has induced value {value}, expected 0"),
                    });
                }
            }
        }
        LabelingKind::HkCordial(k) => {
            let k = k as i32;
            for (v, &value) in induced.iter().enumerate() {
                if value.abs() < 1 || value.abs() > k {
                    violations.push(Violation {
                        condition: Condition::VertexMagnitude,
                        detail: format!(
                            "vertex {v} has induced value {value}, |f(v)| must be within 1..={k}"
                        ),
                    });
                }
            }
            for i in 1..=k {
                check_balance(&tally, i, &mut violations);
                let (p, m) = (tally.vertices_labeled(i), tally.vertices_labeled(-i));
                if p.abs_diff(m) > 1 {
                    violations.push(Violation {
                        condition: Condition::VertexBalance,
                        detail: format!("v({i}) = {p}, v({}) = {m}", -i),
                    });
                }
            }
        }
    }

    Ok(VerificationReport { kind, valid: violations.is_empty(), tally, inferred_k, violations })
}

fn check_balance(tally: &Tally, i: i32, violations: &mut Vec<Violation>) {
    let (p, m) = (tally.edges_labeled(i), tally.edges_labeled(-i));
    if p.abs_diff(m) > 1 {
        violations.push(Violation {
            condition: Condition::EdgeBalance,
            detail: format!("e({i}) = {p}, e({}) = {m}", -i),
        });
    }
}

/// A necessary condition that rules a labeling out before any search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    /// Trees have m - n = -1, which is odd.
    Tree,
    /// An isolated vertex has induced value 0, never a positive K.
    IsolatedVertex { vertex: usize },
    /// m - n must be even for a uniform-magnitude labeling.
    SizeParity { n: usize, m: usize },
    /// Induced values share the magnitude K but each has its degree's parity,
    /// so all degrees must share a parity.
    MixedDegreeParity,
    /// An even vertex count forces an even edge count for magnitude-2 kinds.
    EvenOrderOddSize { n: usize, m: usize },
    /// Even-order trees admit no balanced |f(v)| <= 1 labeling.
    EvenVertexTree { n: usize },
    /// All-zero induced values need even degrees everywhere.
    OddDegree { vertex: usize },
    /// Each component must have evenly many edges for an all-zero labeling.
    OddComponentEdges { representative: usize, edges: usize },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Tree => write!(
                f,
                "the graph is a tree, so m - n = -1 is odd and no uniform-magnitude labeling exists"
            ),
            Obstruction::IsolatedVertex { vertex } => write!(
                f,
                "vertex {vertex} is isolated; its induced value is 0, never a positive K"
            ),
            Obstruction::SizeParity { n, m } => {
                write!(f, "m - n = {m} - {n} is odd; it must be even")
            }
            Obstruction::MixedDegreeParity => write!(
                f,
                "vertex degrees have mixed parity, but every induced value carries its \
                 degree's parity and a single magnitude K cannot have both"
            ),
            Obstruction::EvenOrderOddSize { n, m } => write!(
                f,
                "{n} vertices (even) with {m} edges (odd); an even order forces an even size"
            ),
            Obstruction::EvenVertexTree { n } => {
                write!(f, "the tree has an even number of vertices ({n})")
            }
            Obstruction::OddDegree { vertex } => {
                write!(f, "vertex {vertex} has odd degree, so its induced value cannot be 0")
            }
            Obstruction::OddComponentEdges { representative, edges } => write!(
                f,
                "the component containing vertex {representative} has {edges} edges (odd); \
                 all-zero induced values force evenly many edges per component"
            ),
        }
    }
}

/// Checks the implemented necessary conditions for `kind` on `g` and returns
/// the first that fails. `None` means no implemented test fires — it does not
/// mean a valid labeling exists.
pub fn obstruction(g: &Graph, kind: LabelingKind) -> Option<Obstruction> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let degrees = g.degrees();
    match kind {
        LabelingKind::HCordial => {
            if g.is_tree() && n >= 2 {
                return Some(Obstruction::Tree);
            }
            if let Some(vertex) = degrees.iter().position(|&d| d == 0) {
                return Some(Obstruction::IsolatedVertex { vertex });
            }
            if (m as i64 - n as i64) % 2 != 0 {
                return Some(Obstruction::SizeParity { n, m });
            }
            if degrees.windows(2).any(|w| w[0] % 2 != w[1] % 2) {
                return Some(Obstruction::MixedDegreeParity);
            }
            None
        }
        LabelingKind::SemiHCordial => {
            if g.is_tree() && n.is_multiple_of(2) {
                return Some(Obstruction::EvenVertexTree { n });
            }
            None
        }
        LabelingKind::ZeroMCordial => {
            if let Some(vertex) = degrees.iter().position(|&d| d % 2 != 0) {
                return Some(Obstruction::OddDegree { vertex });
            }
            for comp in g.components() {
                let edges = comp.iter().map(|&v| degrees[v]).sum::<usize>() / 2;
                if edges % 2 != 0 {
                    return Some(Obstruction::OddComponentEdges {
                        representative: comp[0],
                        edges,
                    });
                }
            }
            None
        }
        LabelingKind::HkCordial(2) => {
            if n.is_multiple_of(2) && !m.is_multiple_of(2) {
                return Some(Obstruction::EvenOrderOddSize { n, m });
            }
            None
        }
        LabelingKind::HkCordial(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labeled(g: Graph, labels: &[i32]) -> Labeling {
        Labeling::new(g, labels.to_vec()).unwrap()
    }

    #[test]
    fn induced_values_k3_all_plus() {
        let l = labeled(Graph::complete(3).unwrap(), &[1, 1, 1]);
        assert_eq!(l.induced_vertex_labels(), vec![2, 2, 2]);
    }

    #[test]
    fn induced_values_single_negative_edge() {
        let l = labeled(Graph::path(2).unwrap(), &[-1]);
        assert_eq!(l.induced_vertex_labels(), vec![-1, -1]);
    }

    #[test]
    fn isolated_vertices_induce_zero() {
        let l = labeled(Graph::new(3, &[(0, 1)]).unwrap(), &[1]);
        assert_eq!(l.induced_vertex_labels(), vec![1, 1, 0]);
    }

    #[test]
    fn handshake_on_alternating_c4() {
        let l = labeled(Graph::cycle(4).unwrap(), &[1, -1, -1, 1]);
        assert!(check_handshake(&l));
        assert_eq!(l.induced_vertex_labels().iter().sum::<i32>(), 0);
    }

    #[test]
    fn rejects_zero_label_and_count_mismatch() {
        let g = Graph::path(3).unwrap();
        assert!(matches!(
            Labeling::new(g.clone(), vec![1, 0]),
            Err(LabelingError::ZeroLabel { .. })
        ));
        assert!(matches!(
            Labeling::new(g, vec![1]),
            Err(LabelingError::LabelCountMismatch { .. })
        ));
    }

    #[test]
    fn verify_rejects_alphabet_violation_naming_edge() {
        let l = labeled(Graph::path(3).unwrap(), &[2, 1]);
        let err = verify(&l, LabelingKind::HCordial).unwrap_err();
        assert_eq!(
            err,
            LabelingError::AlphabetViolation {
                u: 0,
                v: 1,
                label: 2,
                alphabet: "{-1, +1}".into(),
                kind: LabelingKind::HCordial,
            }
        );
        // the same labels are fine for a magnitude-2 alphabet
        assert!(verify(&l, LabelingKind::HkCordial(2)).is_ok());
    }

    #[test]
    fn verify_h_cordial_k3_mixed_is_invalid() {
        // vertex values (2, 0, 0): K cannot be a positive constant
        let l = labeled(Graph::complete(3).unwrap(), &[1, 1, -1]);
        assert_eq!(l.induced_vertex_labels(), vec![2, 0, 0]);
        let report = verify(&l, LabelingKind::HCordial).unwrap();
        assert!(!report.valid);
        assert_eq!(report.inferred_k, Some(2));
        assert!(report
            .violations
            .iter()
            .any(|v| v.condition == Condition::UniformMagnitude));
    }

    #[test]
    fn verify_zero_m_on_alternating_c4() {
        let l = labeled(Graph::cycle(4).unwrap(), &[1, -1, -1, 1]);
        let report = verify(&l, LabelingKind::ZeroMCordial).unwrap();
        assert!(report.valid, "{:?}", report.violations);
        assert_eq!(report.inferred_k, None);
    }

    #[test]
    fn verify_semi_h_single_edge_fails_vertex_balance() {
        let l = labeled(Graph::path(2).unwrap(), &[1]);
        let report = verify(&l, LabelingKind::SemiHCordial).unwrap();
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .any(|v| v.condition == Condition::VertexBalance));
    }

    #[test]
    fn star_transform_value_table() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let l = labeled(g, &[2, 1, -1]);
        let t = l.star_transform(2).unwrap();
        assert_eq!(t.labels(), &[1, 2, -2]);
        let l2 = labeled(Graph::path(2).unwrap(), &[-2]);
        assert_eq!(l2.star_transform(2).unwrap().labels(), &[-1]);
    }

    #[test]
    fn star_transform_is_identity_for_k1() {
        let l = labeled(Graph::cycle(4).unwrap(), &[1, -1, 1, -1]);
        assert_eq!(l.star_transform(1).unwrap(), l);
    }

    #[test]
    fn star_transform_rejects_out_of_alphabet() {
        let l = labeled(Graph::path(2).unwrap(), &[3]);
        assert!(matches!(
            l.star_transform(2),
            Err(LabelingError::AlphabetViolation { .. })
        ));
    }

    #[test]
    fn negate_is_an_involution() {
        let l = labeled(Graph::cycle(4).unwrap(), &[1, 1, -1, 1]);
        assert_eq!(l.negate().negate(), l);
        assert_eq!(l.negate().labels(), &[-1, -1, 1, -1]);
    }

    #[test]
    fn obstruction_k5_h_cordial_size_parity() {
        let g = Graph::complete(5).unwrap();
        assert_eq!(
            obstruction(&g, LabelingKind::HCordial),
            Some(Obstruction::SizeParity { n: 5, m: 10 })
        );
    }

    #[test]
    fn obstruction_k6_h2() {
        let g = Graph::complete(6).unwrap();
        assert_eq!(
            obstruction(&g, LabelingKind::HkCordial(2)),
            Some(Obstruction::EvenOrderOddSize { n: 6, m: 15 })
        );
    }

    #[test]
    fn obstruction_odd_path_semi_h_is_clear() {
        let g = Graph::path(5).unwrap();
        assert_eq!(obstruction(&g, LabelingKind::SemiHCordial), None);
        let g4 = Graph::path(4).unwrap();
        assert_eq!(
            obstruction(&g4, LabelingKind::SemiHCordial),
            Some(Obstruction::EvenVertexTree { n: 4 })
        );
    }

    #[test]
    fn obstruction_trees_and_isolated_vertices_for_h_cordial() {
        let tree = Graph::path(4).unwrap();
        assert_eq!(obstruction(&tree, LabelingKind::HCordial), Some(Obstruction::Tree));
        let mixed = Graph::wheel(4).unwrap();
        assert!(obstruction(&mixed, LabelingKind::HCordial).is_some());
        let isolated = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(
            obstruction(&isolated, LabelingKind::HCordial),
            Some(Obstruction::IsolatedVertex { vertex: 4 })
        );
    }

    #[test]
    fn obstruction_zero_m_per_component() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(
            obstruction(&c3, LabelingKind::ZeroMCordial),
            Some(Obstruction::OddComponentEdges { representative: 0, edges: 3 })
        );
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(
            obstruction(&k4, LabelingKind::ZeroMCordial),
            Some(Obstruction::OddDegree { .. })
        ));
        // two disjoint 4-cycles: clear
        let two_c4 = Graph::new(
            8,
            &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)],
        )
        .unwrap();
        assert_eq!(obstruction(&two_c4, LabelingKind::ZeroMCordial), None);
    }

    #[test]
    fn labeled_format_round_trip() {
        let l = labeled(Graph::wheel(3).unwrap(), &[1, 1, -1, -1, 1, -1]);
        let text = l.to_text();
        assert_eq!(Labeling::parse(&text).unwrap(), l);
    }

    #[test]
    fn labeled_format_reorders_rows() {
        let a = Labeling::parse("3 2\n1 2 -1\n0 1 1\n").unwrap();
        let b = Labeling::parse("3 2\n0 1 1\n1 2 -1\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn labeled_format_rejects_zero_label() {
        assert!(matches!(
            Labeling::parse("2 1\n0 1 0\n"),
            Err(LabelingError::ZeroLabel { .. })
        ));
    }

    #[test]
    fn labeled_format_skips_comments_and_blanks() {
        let l = Labeling::parse("# a labeled path\n\n3 2\n0 1 1\n\n# tail\n1 2 -1\n").unwrap();
        assert_eq!(l.labels(), &[1, -1]);
    }
}
