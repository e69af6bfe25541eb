use crate::error::Result;
use crate::graph::{bit, bits, SimpleGraph};
use crate::limits::Limits;

use super::clique::clique_number;

/// Exact chromatic number by DSATUR branch and bound, seeded with a greedy
/// DSATUR colouring as upper bound and the clique number as lower bound.
pub fn chromatic_number(g: &SimpleGraph, limits: &Limits) -> Result<usize> {
    Limits::check("chromatic number", g.n(), limits.graph_chi)?;
    Ok(optimal_coloring(g).0)
}

/// `(χ(G), colouring)`; colours are `0..χ`.
pub fn optimal_coloring(g: &SimpleGraph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut best = greedy_dsatur(g);
    let mut best_count = best.iter().max().map_or(0, |&c| c + 1);
    let lower = clique_number(g);
    if lower < best_count {
        let mut colors = vec![usize::MAX; n];
        branch(g, &mut colors, 0, 0, lower, &mut best, &mut best_count);
    }
    (best_count, best)
}

fn saturation(g: &SimpleGraph, colors: &[usize], v: usize) -> u64 {
    g.neighbors(v)
        .filter(|&w| colors[w] != usize::MAX)
        .fold(0u64, |acc, w| acc | bit(colors[w]))
}

fn pick(g: &SimpleGraph, colors: &[usize]) -> usize {
    let uncolored = (0..g.n())
        .filter(|&v| colors[v] == usize::MAX)
        .fold(0u64, |acc, v| acc | bit(v));
    bits(uncolored)
        .max_by_key(|&v| {
            (
                saturation(g, colors, v).count_ones(),
                (g.neighbors_mask(v) & uncolored).count_ones(),
                std::cmp::Reverse(v),
            )
        })
        .expect("an uncoloured vertex remains")
}

fn greedy_dsatur(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    for _ in 0..n {
        let v = pick(g, &colors);
        let sat = saturation(g, &colors, v);
        colors[v] = (!sat).trailing_zeros() as usize;
    }
    colors
}

fn branch(
    g: &SimpleGraph,
    colors: &mut Vec<usize>,
    colored: usize,
    used: usize,
    lower: usize,
    best: &mut Vec<usize>,
    best_count: &mut usize,
) {
    if *best_count <= lower {
        return;
    }
    if colored == g.n() {
        if used < *best_count {
            *best_count = used;
            *best = colors.clone();
        }
        return;
    }
    let v = pick(g, colors);
    let sat = saturation(g, colors, v);
    let limit = (used + 1).min(*best_count - 1);
    for c in 0..limit {
        if sat & bit(c) != 0 {
            continue;
        }
        colors[v] = c;
        branch(
            g,
            colors,
            colored + 1,
            used.max(c + 1),
            lower,
            best,
            best_count,
        );
        colors[v] = usize::MAX;
        if *best_count <= lower {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        SimpleGraph::from_edges(10, &edges)
    }

    fn proper(g: &SimpleGraph, colors: &[usize]) -> bool {
        g.edges().all(|(u, v)| colors[u] != colors[v])
    }

    /// Independent check: is there a proper colouring with `k` colours?
    fn k_colorable(g: &SimpleGraph, k: usize) -> bool {
        let n = g.n();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let colors: Vec<usize> = (0..n)
                .map(|_| {
                    let c = code % k;
                    code /= k;
                    c
                })
                .collect();
            proper(g, &colors)
        })
    }

    #[test]
    fn examples() {
        let lim = Limits::default();
        assert_eq!(chromatic_number(&SimpleGraph::cycle(5), &lim).unwrap(), 3);
        assert_eq!(
            chromatic_number(&SimpleGraph::complete(4), &lim).unwrap(),
            4
        );
        let p = petersen();
        assert_eq!(p.degrees(), vec![3; 10]);
        let (chi, colors) = optimal_coloring(&p);
        assert_eq!(chi, 3);
        assert!(proper(&p, &colors));
        assert!(!k_colorable(&p, 2));
        assert_eq!(chromatic_number(&SimpleGraph::new(0), &lim).unwrap(), 0);
        assert_eq!(chromatic_number(&SimpleGraph::new(3), &lim).unwrap(), 1);
        assert!(chromatic_number(&SimpleGraph::new(13), &lim).is_err());
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
        for _ in 0..150 {
            let n = 1 + (x % 7) as usize;
            let mut g = SimpleGraph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    x ^= x << 13;
                    x ^= x >> 7;
                    x ^= x << 17;
                    if x % 3 != 0 {
                        g.add_edge(u, v);
                    }
                }
            }
            let (chi, colors) = optimal_coloring(&g);
            assert!(proper(&g, &colors));
            assert_eq!(colors.iter().max().map_or(0, |&c| c + 1), chi);
            assert!(k_colorable(&g, chi));
            assert!(chi == 1 || !k_colorable(&g, chi - 1), "{g:?}");
        }
    }
}
