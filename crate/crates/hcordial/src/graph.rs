//! Simple undirected graphs as normalized edge lists, the generators used by
//! the labeling constructors, and the structural predicates they rely on
//! (tree / Eulerian / Hamiltonian checks, Euler tours, longest paths in
//! forests).

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u}, {v}) is out of range for a graph on {n} vertices")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex count must be at least {min}, got {got}")]
    TooFewVertices { min: usize, got: usize },
    #[error("graph is not Eulerian: {0}")]
    NotEulerian(String),
    #[error("graph is not a tree: {0}")]
    NotATree(String),
    #[error("edge subset is empty")]
    EmptyEdgeSubset,
    #[error("edge subset contains a cycle, so it is not a forest")]
    NotAForest,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A finite simple undirected graph: `n` vertices numbered `0..n`, and a
/// lexicographically sorted, duplicate-free list of edges `(u, v)` with
/// `u < v`.
///
/// Graphs are immutable after construction, so the invariants hold for the
/// lifetime of the value and sharing across threads is safe.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n, edges: g.edges }
    }
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.n, &raw.edges)
    }
}

impl Graph {
    /// Builds a graph from an arbitrary pair list. Pairs are reordered to
    /// `u < v` and sorted; self-loops, duplicates (in either orientation) and
    /// out-of-range endpoints are rejected, naming the offending pair.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { u: a, v: b, n });
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Graph { n, edges })
    }

    /// The complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::TooFewVertices { min: 1, got: 0 });
        }
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Ok(Graph { n, edges })
    }

    /// The wheel with rim size `n >= 3`: hub 0 joined to every vertex of the
    /// rim cycle 1-2-...-n-1. `n + 1` vertices, `2n` edges.
    pub fn wheel(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooFewVertices { min: 3, got: n });
        }
        let mut pairs = Vec::with_capacity(2 * n);
        for i in 1..=n {
            pairs.push((0, i));
        }
        for i in 1..n {
            pairs.push((i, i + 1));
        }
        pairs.push((1, n));
        Graph::new(n + 1, &pairs)
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooFewVertices { min: 3, got: n });
        }
        let mut pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        pairs.push((0, n - 1));
        Graph::new(n, &pairs)
    }

    /// The path on `n >= 1` vertices (vertex 0 through `n - 1` in order).
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::TooFewVertices { min: 1, got: 0 });
        }
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &pairs)
    }

    /// The star with `k >= 1` leaves: center 0 joined to `1..=k`.
    pub fn star(k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::TooFewVertices { min: 1, got: 0 });
        }
        let pairs: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::new(k + 1, &pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The normalized edge list: `u < v`, sorted, no duplicates.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of edge `{a, b}` in the normalized edge list.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Neighbor lists, sorted ascending per vertex.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member. Isolated vertices form their own components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A tree: connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Eulerian: connected with every vertex of even degree. Isolated
    /// vertices disconnect the graph and therefore make it non-Eulerian;
    /// component-wise treatment belongs to the labeling layer.
    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && self.degrees().iter().all(|&d| d % 2 == 0)
    }

    /// A closed walk using every edge exactly once, as an oriented edge
    /// sequence. Deterministic: the tour starts at vertex 0 and always
    /// follows the smallest-indexed neighbor with an unused edge.
    pub fn eulerian_circuit(&self) -> Result<Vec<(usize, usize)>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::NotEulerian("not connected".into()));
        }
        if let Some(v) = self.degrees().iter().position(|&d| d % 2 != 0) {
            return Err(GraphError::NotEulerian(format!("vertex {v} has odd degree")));
        }
        if self.edges.is_empty() {
            return Ok(Vec::new());
        }

        // Sorted incidence lists give the smallest-neighbor-first rule.
        let mut incident = vec![Vec::new(); self.n];
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push((v, idx));
            incident[v].push((u, idx));
        }
        for list in &mut incident {
            list.sort_unstable();
        }

        let mut used = vec![false; self.edges.len()];
        let mut cursor = vec![0usize; self.n];
        let mut stack = vec![0usize];
        let mut walk = Vec::with_capacity(self.edges.len() + 1);
        while let Some(&v) = stack.last() {
            while cursor[v] < incident[v].len() && used[incident[v][cursor[v]].1] {
                cursor[v] += 1;
            }
            if cursor[v] == incident[v].len() {
                walk.push(v);
                stack.pop();
            } else {
                let (w, idx) = incident[v][cursor[v]];
                used[idx] = true;
                stack.push(w);
            }
        }
        walk.reverse();
        debug_assert_eq!(walk.len(), self.edges.len() + 1);
        Ok(walk.windows(2).map(|w| (w[0], w[1])).collect())
    }

    /// Whether a spanning cycle exists, decided by exhaustive backtracking.
    /// Graphs on fewer than 3 vertices have no cycle at all.
    pub fn is_hamiltonian(&self) -> bool {
        let n = self.n;
        if n < 3 {
            return false;
        }
        let deg = self.degrees();
        if deg.iter().any(|&d| d < 2) || !self.is_connected() {
            return false;
        }
        let adj = self.adjacency();
        let mut has_edge = vec![false; n * n];
        for &(u, v) in &self.edges {
            has_edge[u * n + v] = true;
            has_edge[v * n + u] = true;
        }
        let mut visited = vec![false; n];
        visited[0] = true;
        fn extend(
            v: usize,
            placed: usize,
            n: usize,
            adj: &[Vec<usize>],
            has_edge: &[bool],
            visited: &mut [bool],
        ) -> bool {
            if placed == n {
                return has_edge[v * n];
            }
            for &w in &adj[v] {
                if !visited[w] {
                    visited[w] = true;
                    if extend(w, placed + 1, n, adj, has_edge, visited) {
                        return true;
                    }
                    visited[w] = false;
                }
            }
            false
        }
        extend(0, 1, n, &adj, &has_edge, &mut visited)
    }

    /// Leaf/internal split of a tree. Rejects non-trees.
    pub fn tree_stats(&self) -> Result<TreeStats, GraphError> {
        if !self.is_tree() {
            return Err(GraphError::NotATree(format!(
                "{} vertices, {} edges, connected: {}",
                self.n,
                self.edges.len(),
                self.is_connected()
            )));
        }
        let mut degree_sequence = self.degrees();
        let leaves = degree_sequence.iter().filter(|&&d| d == 1).count();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        Ok(TreeStats { leaves, internal: self.n - leaves, degree_sequence })
    }

    /// Parses the text format: first non-comment line `n m`, then `m` lines
    /// `u v`. Lines starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut data = data_lines(text);
        let (line, header) = data.next().ok_or(GraphError::Parse {
            line: 0,
            msg: "missing header line \"n m\"".into(),
        })?;
        let (n, m) = parse_header(line, header)?;
        let mut pairs = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, text) = data.next().ok_or(GraphError::Parse {
                line: 0,
                msg: format!("expected {m} edge lines, found {}", pairs.len()),
            })?;
            let fields = parse_fields::<usize>(line, text, 2, "u v")?;
            pairs.push((fields[0], fields[1]));
        }
        if let Some((line, _)) = data.next() {
            return Err(GraphError::Parse { line, msg: "trailing data after edge list".into() });
        }
        Graph::new(n, &pairs)
    }

    /// Canonical text form: `n m` then the sorted edge list.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Leaf and internal-vertex counts of a tree, plus its degree sequence
/// (sorted descending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats {
    pub leaves: usize,
    pub internal: usize,
    pub degree_sequence: Vec<usize>,
}

/// A simple path, stored as its vertex sequence. At least one edge; all
/// vertices distinct; consecutive vertices are adjacent in the host edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge count.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// A maximum-length path within a forest edge subset.
///
/// Tie-break: among maximum-length paths, the one whose vertex sequence,
/// oriented from the smaller endpoint, is lexicographically smallest. Found
/// by exhaustive search per component; in a forest the path between two
/// vertices is unique, so all paths are endpoint pairs.
pub fn longest_path(edges: &[(usize, usize)]) -> Result<Path, GraphError> {
    if edges.is_empty() {
        return Err(GraphError::EmptyEdgeSubset);
    }
    let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let index_of = |v: usize| vertices.binary_search(&v).unwrap();

    // Union-find cycle check: a forest never unites two connected vertices.
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut adj = vec![Vec::new(); vertices.len()];
    for &(u, v) in edges {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (iu, iv) = (index_of(u), index_of(v));
        let (ru, rv) = (find(&mut parent, iu), find(&mut parent, iv));
        if ru == rv {
            return Err(GraphError::NotAForest);
        }
        parent[ru] = rv;
        adj[iu].push(iv);
        adj[iv].push(iu);
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    // Unique path between two vertices of a tree, recovered from a DFS
    // parent map rooted at `from`.
    let tree_path = |from: usize, to: usize| -> Option<Vec<usize>> {
        let mut par = vec![usize::MAX; vertices.len()];
        par[from] = from;
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if par[w] == usize::MAX {
                    par[w] = v;
                    stack.push(w);
                }
            }
        }
        if par[to] == usize::MAX {
            return None;
        }
        let mut rev = vec![to];
        let mut v = to;
        while v != from {
            v = par[v];
            rev.push(v);
        }
        rev.reverse();
        Some(rev)
    };

    let mut best: Option<Vec<usize>> = None;
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            let Some(seq) = tree_path(a, b) else { continue };
            let seq: Vec<usize> = seq.into_iter().map(|i| vertices[i]).collect();
            let better = match &best {
                None => true,
                Some(cur) => seq.len() > cur.len() || (seq.len() == cur.len() && seq < *cur),
            };
            if better {
                best = Some(seq);
            }
        }
    }
    Ok(Path { vertices: best.expect("nonempty edge set has a path") })
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let fields = parse_fields::<usize>(line, text, 2, "n m")?;
    Ok((fields[0], fields[1]))
}

pub(crate) fn parse_fields<T: std::str::FromStr>(
    line: usize,
    text: &str,
    want: usize,
    shape: &str,
) -> Result<Vec<T>, GraphError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != want {
        return Err(GraphError::Parse {
            line,
            msg: format!("expected \"{shape}\", got {:?}", text),
        });
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<T>().map_err(|_| GraphError::Parse {
                line,
                msg: format!("invalid number {f:?}"),
            })
        })
        .collect()
}
