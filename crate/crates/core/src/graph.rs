use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

/// Largest vertex count a [`SimpleGraph`] can hold (one `u64` row per vertex).
pub const MAX_VERTICES: usize = 64;

/// Undirected simple graph on vertices `0..n`, stored as adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n > MAX_VERTICES`.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("vertex count exceeds MAX_VERTICES")
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Resource {
                what: "graph",
                n,
                limit: MAX_VERTICES,
            });
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 0..n {
            g.adj[v] = full_mask(n) & !bit(v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `uv`; returns false if it was already present.
    ///
    /// # Panics
    /// On a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge {u}-{v} out of range");
        let fresh = self.adj[u] & bit(v) == 0;
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        fresh
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let present = self.has_edge(u, v);
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        present
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bit mask.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees by vertex position.
    pub fn degrees(&self) -> Vec<u32> {
        self.adj.iter().map(|r| r.count_ones()).collect()
    }

    /// The sorted degree sequence D(G).
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let all = full_mask(self.n);
        SimpleGraph {
            n: self.n,
            adj: (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect(),
        }
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// `G - v`, relabelled consecutively.
    pub fn remove_vertex(&self, v: usize) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
