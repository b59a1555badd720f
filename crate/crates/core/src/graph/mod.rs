//! Undirected simple graphs and the graph families handled by the solvers.
//!
//! Index conventions used throughout the crate:
//!
//! * path on `n` vertices: vertex `i` is the `(i+1)`-th vertex along the
//!   path, edges `{i, i+1}`;
//! * wheel on `n` vertices: cycle vertices are `0..n-1` in cyclic order and
//!   the hub is `n-1`;
//! * complete bipartite `K(a,b)`: part A is `0..a`, part B is `a..a+b`.

mod distance;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

pub use distance::{DistanceMatrix, Metric};
pub use parse::{parse_graph, parse_weights};

use crate::error::{invalid, Error, Result};

/// Which family a graph was built as.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Clique(usize),
    Bipartite(usize, usize),
    Wheel(usize),
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path({n})"),
            Family::Clique(n) => write!(f, "clique({n})"),
            Family::Bipartite(a, b) => write!(f, "bipartite({a},{b})"),
            Family::Wheel(n) => write!(f, "wheel({n})"),
            Family::Custom => write!(f, "custom"),
        }
    }
}

impl Family {
    /// Number of vertices; `None` for custom graphs.
    pub fn order(&self) -> Option<usize> {
        match *self {
            Family::Path(n) | Family::Clique(n) | Family::Wheel(n) => Some(n),
            Family::Bipartite(a, b) => Some(a + b),
            Family::Custom => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: BTreeSet<(usize, usize)>,
    family: Family,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(invalid("a graph needs at least one vertex"));
        }
        let mut g = Graph {
            n,
            adjacency: vec![Vec::new(); n],
            edges: BTreeSet::new(),
            family: Family::Custom,
        };
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(invalid(format!("self-loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(invalid(format!("duplicate edge {{{u}, {v}}}")));
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        Ok(())
    }

    fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("a path needs n >= 2, got {n}")));
        }
        Ok(Self::from_edges(n, (1..n).map(|i| (i - 1, i)))?.with_family(Family::Path(n)))
    }

    pub fn clique(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("a clique needs n >= 2, got {n}")));
        }
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Ok(Self::from_edges(n, edges)?.with_family(Family::Clique(n)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a + b < 3 {
            return Err(invalid(format!(
                "a complete bipartite graph needs a, b >= 1 and a + b >= 3, got a = {a}, b = {b}"
            )));
        }
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Ok(Self::from_edges(a + b, edges)?.with_family(Family::Bipartite(a, b)))
    }

    /// Complete wheel: a cycle on `0..n-1` plus the hub `n-1`.
    pub fn wheel(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(invalid(format!("a wheel needs n >= 4, got {n}")));
        }
        let m = n - 1;
        let hub = n - 1;
        let cycle = (0..m).map(|i| (i, (i + 1) % m));
        let spokes = (0..m).map(|i| (i, hub));
        Ok(Self::from_edges(n, cycle.chain(spokes))?.with_family(Family::Wheel(n)))
    }

    pub fn from_family(family: Family) -> Result<Self> {
        match family {
            Family::Path(n) => Self::path(n),
            Family::Clique(n) => Self::clique(n),
            Family::Bipartite(a, b) => Self::complete_bipartite(a, b),
            Family::Wheel(n) => Self::wheel(n),
            Family::Custom => Err(invalid("a custom graph needs an edge list")),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// True if both graphs have the same vertex count and edge set.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges == other.edges
    }

    /// Rebuilds the family from its parameters and compares edge sets.
    /// Custom graphs always match.
    pub fn matches_family(&self) -> bool {
        let rebuilt = match self.family {
            Family::Path(n) => Graph::path(n),
            Family::Clique(n) => Graph::clique(n),
            Family::Bipartite(a, b) => Graph::complete_bipartite(a, b),
            Family::Wheel(n) => Graph::wheel(n),
            Family::Custom => return true,
        };
        rebuilt.map(|g| self.same_edges(&g)).unwrap_or(false)
    }

    /// All-pairs shortest path distances (breadth-first search from every
    /// vertex).
    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::from_graph(self)
    }
}

/// Reduces a (possibly negative or too large) cycle position of a wheel on
/// `n` vertices into `0..n-1`.
pub fn cyclic_index(i: i64, n: usize) -> usize {
    debug_assert!(n >= 2);
    i.rem_euclid(n as i64 - 1) as usize
}
