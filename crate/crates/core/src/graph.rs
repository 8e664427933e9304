//! Simple undirected graphs on `[n]`, spanning forests, tree paths and the
//! component invariant `D_G`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::{Error, Result};

/// An undirected edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// A simple undirected graph on the vertex set `{1, ..., n}`.
///
/// No loops, no duplicate edges.  Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// Builds a graph from an edge list.  Endpoints may come in either order;
    /// loops, out-of-range endpoints and duplicates are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("vertex count must be >= 2, got {n}")));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("loop edge at vertex {a}")));
            }
            if a < 1 || b < 1 || a > n || b > n {
                return Err(Error::invalid(format!(
                    "edge ({a},{b}) out of range for n={n}"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::invalid(format!("duplicate edge ({},{})", e.0, e.1)));
            }
        }
        Ok(Graph { n, edges: set })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (1..=n).tuple_combinations())
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `N_G = |E_G| + n`, the number of surviving matrix variables.
    pub fn n_variables(&self) -> usize {
        self.edges.len() + self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().blocks().len() == 1
    }

    /// Connected components as a partition of `[n]`, blocks sorted by their
    /// smallest element.
    pub fn connected_components(&self) -> Partition {
        let mut seen = vec![false; self.n + 1];
        let mut blocks = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            let mut block = Vec::new();
            let mut queue = std::collections::VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                block.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        Partition { n: self.n, blocks }
    }

    /// `D_G`, the sum of pairwise products of component sizes.
    ///
    /// Zero exactly for connected graphs, `C(n,2)` exactly for edgeless ones.
    pub fn d_invariant(&self) -> usize {
        let sizes: Vec<usize> = self
            .connected_components()
            .blocks()
            .iter()
            .map(|b| b.len())
            .collect();
        let mut d = 0;
        for s in 0..sizes.len() {
            for t in s + 1..sizes.len() {
                d += sizes[s] * sizes[t];
            }
        }
        d
    }

    /// True iff the induced subgraph on every `m`-element vertex subset is
    /// connected.  Brute force over all `C(n,m)` subsets.
    pub fn is_m_connected(&self, m: usize) -> bool {
        assert!(m >= 1 && m <= self.n, "m must satisfy 1 <= m <= n");
        (1..=self.n)
            .combinations(m)
            .all(|subset| self.induced_connected(&subset))
    }

    fn induced_connected(&self, vs: &[usize]) -> bool {
        if vs.is_empty() {
            return true;
        }
        let inside: BTreeSet<usize> = vs.iter().copied().collect();
        let mut seen = BTreeSet::from([vs[0]]);
        let mut queue = std::collections::VecDeque::from([vs[0]]);
        while let Some(v) = queue.pop_front() {
            for &u in &inside {
                if !seen.contains(&u) && self.has_edge(u, v) {
                    seen.insert(u);
                    queue.push_back(u);
                }
            }
        }
        seen.len() == vs.len()
    }

    /// What the minor-primality criteria say about `I_k` for this graph.
    pub fn primality_verdict(&self, k: usize, characteristic: Characteristic) -> PrimalityVerdict {
        assert!(k >= 1 && k <= self.n, "k must satisfy 1 <= k <= n");
        if k == 1 {
            return PrimalityVerdict::Prime;
        }
        if k == self.n {
            return if self.is_connected() {
                PrimalityVerdict::Prime
            } else {
                PrimalityVerdict::NotPrime
            };
        }
        let condition = self.is_m_connected(k);
        if (k == 2 || k == 3) && characteristic == Characteristic::Zero {
            return if condition {
                PrimalityVerdict::Prime
            } else {
                PrimalityVerdict::NotPrime
            };
        }
        if condition {
            PrimalityVerdict::Unknown
        } else {
            PrimalityVerdict::NotPrime
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (idx, (a, b)) in self.edges.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}{b}")?;
        }
        write!(f, "])")
    }
}

/// Field characteristic for the primality criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

/// Outcome of the combinatorial primality criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimalityVerdict {
    Prime,
    NotPrime,
    /// The necessary connectivity condition holds but is not sufficient in
    /// general, so nothing can be concluded at this scale.
    Unknown,
}

/// A partition of `[n]` into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&v))
            .expect("vertex in range")
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_of(a) == self.block_of(b)
    }
}

/// A spanning forest of a parent graph: one spanning tree per connected
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    graph: Graph,
    edges: BTreeSet<Edge>,
    components: Partition,
}

impl Forest {
    /// The canonical spanning forest: BFS from the smallest vertex of each
    /// component, visiting neighbors in increasing order.  Deterministic.
    pub fn spanning(graph: &Graph) -> Self {
        let mut seen = vec![false; graph.n + 1];
        let mut edges = BTreeSet::new();
        for start in 1..=graph.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in graph.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        edges.insert((v.min(u), v.max(u)));
                        queue.push_back(u);
                    }
                }
            }
        }
        let components = graph.connected_components();
        Forest {
            graph: graph.clone(),
            edges,
            components,
        }
    }

    /// Builds a forest from an explicit edge subset, validating that it is
    /// a spanning forest of `graph`: contained in its edge set, acyclic, and
    /// inducing the same component partition.
    pub fn from_edges(graph: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let sub = Graph::new(graph.n, edges)?;
        if !sub.edges.is_subset(&graph.edges) {
            return Err(Error::invalid(
                "forest edges are not a subset of the graph's edges",
            ));
        }
        let components = graph.connected_components();
        let expected = graph.n - components.blocks().len();
        if sub.edge_count() != expected {
            return Err(Error::invalid(format!(
                "forest has {} edges, a spanning forest of this graph has {expected}",
                sub.edge_count()
            )));
        }
        if sub.connected_components().blocks().len() != components.blocks().len() {
            // With the right edge count, an equal component count forces
            // acyclicity and the same partition.
            return Err(Error::invalid("edge subset contains a cycle"));
        }
        Ok(Forest {
            graph: graph.clone(),
            edges: sub.edges,
            components,
        })
    }

    pub fn parent(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// The component partition (shared with the parent graph).
    pub fn components(&self) -> &Partition {
        &self.components
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// The forest viewed as a graph in its own right.
    pub fn as_graph(&self) -> Graph {
        Graph {
            n: self.graph.n,
            edges: self.edges.clone(),
        }
    }

    /// The unique simple path from `k` to `l` in the forest, as the vertex
    /// sequence `k = k_0, k_1, ..., k_r = l`, or `None` if `k` and `l` lie in
    /// different components.
    pub fn tree_path(&self, k: usize, l: usize) -> Result<Option<Vec<usize>>> {
        let n = self.graph.n;
        if k == l {
            return Err(Error::invalid("tree path endpoints must differ"));
        }
        if k < 1 || l < 1 || k > n || l > n {
            return Err(Error::invalid(format!(
                "path endpoints ({k},{l}) out of range for n={n}"
            )));
        }
        let mut parent = vec![0usize; n + 1];
        let mut seen = vec![false; n + 1];
        seen[k] = true;
        let mut queue = std::collections::VecDeque::from([k]);
        while let Some(v) = queue.pop_front() {
            if v == l {
                break;
            }
            for u in 1..=n {
                if !seen[u] && self.has_edge(u, v) {
                    seen[u] = true;
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        if !seen[l] {
            return Ok(None);
        }
        let mut path = vec![l];
        let mut v = l;
        while v != k {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Ok(Some(path))
    }
}
