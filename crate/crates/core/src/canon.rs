//! Canonical labelling for small graphs.
//!
//! Vertices are first split into cells by iterated degree refinement; the
//! canonical form is the lexicographically largest adjacency row sequence
//! over all orderings that respect the cell order. Cost is the product of
//! the cell-size factorials, so this is only meant for graphs of about ten
//! vertices or fewer.

use crate::graph::{bit, bits, SimpleGraph};

/// Isomorphism-invariant encoding; equal forms mean isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    /// Row `p` holds the adjacency of canonical vertex `p` to vertices `< p`.
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for (p, &row) in self.rows.iter().enumerate() {
            for q in bits(row) {
                g.add_edge(q, p);
            }
        }
        g
    }
}

fn refine(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).map(|w| color[w]).collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        color = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a SimpleGraph,
    cell_members: Vec<u64>,
    cell_at: Vec<usize>,
    order: Vec<usize>,
    rows: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    fn go(&mut self, p: usize, used: u64) {
        let n = self.g.n();
        if p == n {
            if self.best.as_ref().map_or(true, |b| self.rows > *b) {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        let cell = self.cell_at[p];
        for v in bits(self.cell_members[cell] & !used) {
            let row = (0..p)
                .filter(|&q| self.g.has_edge(self.order[q], v))
                .fold(0u64, |acc, q| acc | bit(q));
            self.rows[p] = row;
            if let Some(best) = &self.best {
                if self.rows[..=p] < best[..=p] {
                    continue;
                }
            }
            self.order[p] = v;
            self.go(p + 1, used | bit(v));
        }
    }
}

pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    let n = g.n();
    let color = refine(g);
    let cells = color.iter().max().map_or(0, |&c| c + 1);
    let mut cell_members = vec![0u64; cells];
    for (v, &c) in color.iter().enumerate() {
        cell_members[c] |= bit(v);
    }
    let cell_at: Vec<usize> = (0..cells)
        .flat_map(|c| std::iter::repeat(c).take(cell_members[c].count_ones() as usize))
        .collect();
    let mut search = Search {
        g,
        cell_members,
        cell_at,
        order: vec![0; n],
        rows: vec![0; n],
        best: None,
    };
    search.go(0, 0);
    CanonicalForm {
        n,
        rows: search.best.unwrap_or_default(),
    }
}
