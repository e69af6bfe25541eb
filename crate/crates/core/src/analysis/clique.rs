use crate::graph::{bit, bits, full_mask, SimpleGraph};

/// A maximum clique, as a sorted vertex list.
pub fn max_clique(g: &SimpleGraph) -> Vec<usize> {
    let mut best = 0u64;
    expand(g, 0, full_mask(g.n()), &mut best);
    bits(best).collect()
}

/// ω(G).
pub fn clique_number(g: &SimpleGraph) -> usize {
    max_clique(g).len()
}

fn expand(g: &SimpleGraph, chosen: u64, mut cands: u64, best: &mut u64) {
    if cands == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    while cands != 0 {
        if chosen.count_ones() + cands.count_ones() <= best.count_ones() {
            return;
        }
        let v = cands.trailing_zeros() as usize;
        expand(g, chosen | bit(v), cands & g.neighbors_mask(v), best);
        cands &= !bit(v);
    }
    if chosen.count_ones() > best.count_ones() {
        *best = chosen;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(clique_number(&SimpleGraph::cycle(5)), 2);
        assert_eq!(clique_number(&SimpleGraph::cycle(10).complement()), 5);
        assert_eq!(clique_number(&SimpleGraph::complete(4)), 4);
        assert_eq!(clique_number(&SimpleGraph::new(3)), 1);
        assert_eq!(clique_number(&SimpleGraph::new(0)), 0);
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]);
        assert_eq!(max_clique(&g), vec![1, 2, 3]);
    }
}
