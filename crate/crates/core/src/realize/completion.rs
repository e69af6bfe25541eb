//! Exhaustive search for edge sets meeting exact per-vertex demands inside
//! an allowed host graph. Shared by realization enumeration, clique-forcing
//! completion and the brute-force existence oracle.

use std::ops::ControlFlow;

use crate::graph::{bit, bits};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    /// Lowest-index open vertex first, candidates ascending.
    Fixed,
    /// Largest residual first, candidates by residual descending.
    Greedy,
}

pub(crate) struct Completion {
    residual: Vec<u32>,
    allowed: Vec<u64>,
    open: u64,
    order: Order,
    prune_eg: bool,
    edges: Vec<(usize, usize)>,
}

impl Completion {
    /// `allowed[v]` is the set of admissible partners of `v`.
    pub(crate) fn new(residual: Vec<u32>, allowed: Vec<u64>, order: Order) -> Self {
        let open = residual
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .fold(0u64, |acc, (v, _)| acc | bit(v));
        Completion {
            residual,
            allowed,
            open,
            order,
            prune_eg: true,
            edges: Vec::new(),
        }
    }

    /// Disables the Erdős–Gallai pruning, leaving only local counting bounds.
    pub(crate) fn without_eg_pruning(mut self) -> Self {
        self.prune_eg = false;
        self
    }

    /// Calls `visit` with the edge list of every solution until it breaks.
    pub(crate) fn run(
        &mut self,
        visit: &mut dyn FnMut(&[(usize, usize)]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.residual.iter().map(|&r| u64::from(r)).sum::<u64>() % 2 != 0 || !self.feasible() {
            return ControlFlow::Continue(());
        }
        self.search(visit)
    }

    /// First solution found, if any.
    pub(crate) fn first(&mut self) -> Option<Vec<(usize, usize)>> {
        let mut found = None;
        let _ = self.run(&mut |edges| {
            found = Some(edges.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    fn pick(&self) -> usize {
        match self.order {
            Order::Fixed => self.open.trailing_zeros() as usize,
            Order::Greedy => bits(self.open)
                .max_by(|&a, &b| self.residual[a].cmp(&self.residual[b]).then(b.cmp(&a)))
                .expect("open set is non-empty"),
        }
    }

    fn feasible(&self) -> bool {
        let mut open_res = Vec::new();
        for v in bits(self.open) {
            let room = (self.allowed[v] & self.open & !bit(v)).count_ones();
            if self.residual[v] > room {
                return false;
            }
            open_res.push(self.residual[v]);
        }
        if self.prune_eg {
            open_res.sort_unstable_by(|a, b| b.cmp(a));
            let mut prefix = 0u64;
            for t in 1..=open_res.len() {
                prefix += u64::from(open_res[t - 1]);
                let tt = t as u64;
                let tail: u64 = open_res[t..].iter().map(|&x| u64::from(x).min(tt)).sum();
                if prefix > tt * (tt - 1) + tail {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        &mut self,
        visit: &mut dyn FnMut(&[(usize, usize)]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.open == 0 {
            return visit(&self.edges);
        }
        let v = self.pick();
        let need = self.residual[v] as usize;
        let mut cands: Vec<usize> = bits(self.allowed[v] & self.open & !bit(v)).collect();
        if cands.len() < need {
            return ControlFlow::Continue(());
        }
        if self.order == Order::Greedy {
            cands.sort_by(|&a, &b| self.residual[b].cmp(&self.residual[a]).then(a.cmp(&b)));
        }
        let saved_open = self.open;
        self.residual[v] = 0;
        self.open &= !bit(v);
        let mut chosen = Vec::with_capacity(need);
        let flow = self.choose(v, &cands, 0, need, &mut chosen, visit);
        self.open = saved_open;
        self.residual[v] = need as u32;
        flow
    }

    fn choose(
        &mut self,
        v: usize,
        cands: &[usize],
        from: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[(usize, usize)]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if chosen.len() == need {
            let saved_open = self.open;
            for &w in chosen.iter() {
                self.residual[w] -= 1;
                if self.residual[w] == 0 {
                    self.open &= !bit(w);
                }
                self.edges.push((v.min(w), v.max(w)));
            }
            let flow = if self.feasible() {
                self.search(visit)
            } else {
                ControlFlow::Continue(())
            };
            for &w in chosen.iter() {
                self.residual[w] += 1;
                self.edges.pop();
            }
            self.open = saved_open;
            return flow;
        }
        let remaining = need - chosen.len();
        for i in from..=(cands.len() - remaining) {
            chosen.push(cands[i]);
            let flow = self.choose(v, cands, i + 1, need, chosen, visit);
            chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}
