//! Test-side brute force, written without the library's algorithms: graphs
//! are edge bitmasks over the pair list and every invariant is found by
//! plain exhaustion.
#![allow(dead_code)]

use degseq::SimpleGraph;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            out.push((u, v));
        }
    }
    out
}

/// Adjacency matrix of the graph selected by `mask` over `pairs(n)`.
pub fn matrix(n: usize, mask: u64) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for (k, (u, v)) in pairs(n).into_iter().enumerate() {
        if mask >> k & 1 == 1 {
            a[u][v] = true;
            a[v][u] = true;
        }
    }
    a
}

pub fn to_graph(a: &[Vec<bool>]) -> SimpleGraph {
    let n = a.len();
    let edges: Vec<_> = pairs(n).into_iter().filter(|&(u, v)| a[u][v]).collect();
    SimpleGraph::from_edges(n, &edges)
}

pub fn from_graph(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.n();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

pub fn degrees(a: &[Vec<bool>]) -> Vec<u32> {
    a.iter()
        .map(|r| r.iter().filter(|&&x| x).count() as u32)
        .collect()
}

pub fn sorted_desc(mut d: Vec<u32>) -> Vec<u32> {
    d.sort_unstable_by(|x, y| y.cmp(x));
    d
}

/// Calls `f` on every labelled graph on `n` vertices.
pub fn for_all_graphs(n: usize, mut f: impl FnMut(&[Vec<bool>])) {
    let e = n * n.saturating_sub(1) / 2;
    for mask in 0..(1u64 << e) {
        f(&matrix(n, mask));
    }
}

pub fn clique_number(a: &[Vec<bool>]) -> usize {
    let n = a.len();
    let rows: Vec<u32> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| a[u][v] || u == v)
                .fold(0, |acc, v| acc | 1 << v)
        })
        .collect();
    (0u32..(1 << n))
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || rows[v] & s == s))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

pub fn colorable(a: &[Vec<bool>], k: usize) -> bool {
    fn go(a: &[Vec<bool>], k: usize, col: &mut Vec<usize>) -> bool {
        let v = col.len();
        if v == a.len() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|w| !a[v][w] || col[w] != c) {
                col.push(c);
                if go(a, k, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    go(a, k, &mut Vec::new())
}

pub fn chromatic_number(a: &[Vec<bool>]) -> usize {
    (0..=a.len())
        .find(|&k| colorable(a, k))
        .expect("n colours always suffice")
}

/// Is the graph on `edges` a disjoint union of stars (each component is a
/// tree with a vertex meeting all of its edges)?
fn is_star_forest(edges: &[(usize, usize)]) -> bool {
    let mut left = edges.to_vec();
    while let Some(&(start, _)) = left.first() {
        let mut comp = vec![start];
        let mut es = Vec::new();
        loop {
            let before = es.len();
            left.retain(|&(u, v)| {
                if comp.contains(&u) || comp.contains(&v) {
                    es.push((u, v));
                    for x in [u, v] {
                        if !comp.contains(&x) {
                            comp.push(x);
                        }
                    }
                    false
                } else {
                    true
                }
            });
            if es.len() == before {
                break;
            }
        }
        let centred = comp
            .iter()
            .any(|&c| es.iter().all(|&(u, v)| u == c || v == c));
        if es.len() + 1 != comp.len() || !centred {
            return false;
        }
    }
    true
}

/// Tries every assignment of distinct outside midpoints to `missing`.
fn midpoints(
    a: &[Vec<bool>],
    inside: &[bool],
    missing: &[(usize, usize)],
    used: &mut Vec<bool>,
) -> bool {
    let Some((&(u, v), rest)) = missing.split_first() else {
        return true;
    };
    for m in 0..a.len() {
        if !inside[m] && !used[m] && a[u][m] && a[m][v] {
            used[m] = true;
            if midpoints(a, inside, rest, used) {
                return true;
            }
            used[m] = false;
        }
    }
    false
}

pub fn h1(a: &[Vec<bool>]) -> usize {
    let n = a.len();
    let mut best = 0;
    for s in 0u32..(1 << n) {
        let inside: Vec<bool> = (0..n).map(|v| s >> v & 1 == 1).collect();
        let r = s.count_ones() as usize;
        if r <= best {
            continue;
        }
        let missing: Vec<(usize, usize)> = pairs(n)
            .into_iter()
            .filter(|&(u, v)| inside[u] && inside[v] && !a[u][v])
            .collect();
        if is_star_forest(&missing) && midpoints(a, &inside, &missing, &mut vec![false; n]) {
            best = r;
        }
    }
    best
}

/// Graph with a given sorted degree sequence exists among labelled graphs.
pub fn realizable_sequences(n: usize) -> std::collections::BTreeSet<Vec<u32>> {
    let mut out = std::collections::BTreeSet::new();
    for_all_graphs(n, |a| {
        out.insert(sorted_desc(degrees(a)));
    });
    out
}

/// Non-increasing tuples of length `n` with entries in `0..=max`.
pub fn nonincreasing(n: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in 0..=hi {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out
}
