use serde::Serialize;

use crate::analysis::{
    find_join_decomposition, join_graphs, verify_witness, BasicKind, JoinDecomposition, PairPath,
    StarSubdivisionWitness,
};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::limits::Limits;
use crate::realize::realize_with_clique;
use crate::sequence::omega_of_sequence;

use super::construction::build_basic_witness;

/// Joins the graphs and merges their witnesses: branch sets are united and
/// every cross pair is a direct edge of the join.
pub fn join_witness_realizations(
    parts: &[(SimpleGraph, StarSubdivisionWitness)],
) -> Result<(SimpleGraph, StarSubdivisionWitness)> {
    for (i, (g, w)) in parts.iter().enumerate() {
        verify_witness(g, w)
            .map_err(|e| Error::Argument(format!("witness of part {i} is invalid: {e}")))?;
    }
    let graphs: Vec<SimpleGraph> = parts.iter().map(|(g, _)| g.clone()).collect();
    let (joined, map) = join_graphs(&graphs)?;
    let mut branch_sets: Vec<Vec<usize>> = Vec::new();
    let mut paths = Vec::new();
    for ((_, w), labels) in parts.iter().zip(&map) {
        let moved = w.relabel(labels);
        branch_sets.push(moved.branch_vertices.clone());
        paths.extend(moved.paths);
    }
    for i in 0..branch_sets.len() {
        for j in (i + 1)..branch_sets.len() {
            for &u in &branch_sets[i] {
                for &v in &branch_sets[j] {
                    paths.push(PairPath {
                        u: u.min(v),
                        v: u.max(v),
                        mid: None,
                    });
                }
            }
        }
    }
    paths.sort();
    let mut branch: Vec<usize> = branch_sets.concat();
    branch.sort_unstable();
    let witness = StarSubdivisionWitness {
        order: branch.len(),
        branch_vertices: branch,
        paths,
    };
    Ok((joined, witness))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineResult {
    pub decomposition: JoinDecomposition,
    /// Realization of the degree sequence of the decomposition subgraph.
    #[serde(skip)]
    pub graph: SimpleGraph,
    pub witness: StarSubdivisionWitness,
}

/// Reduces `g` to a join of basic graphs with the same chromatic number,
/// realizes each factor's degree sequence with a witness (a forced clique
/// for trivial factors, the construction for nontrivial ones) and joins
/// the results.
pub fn witness_pipeline(g: &SimpleGraph, limits: &Limits) -> Result<PipelineResult> {
    let decomposition = find_join_decomposition(g, limits)?;
    let mut parts = Vec::with_capacity(decomposition.factors.len());
    for f in &decomposition.factors {
        let seq = f.graph.degree_sequence();
        let part = match f.kind {
            BasicKind::Trivial => {
                let k = omega_of_sequence(&seq)?;
                let h = realize_with_clique(&seq, k)?;
                (
                    h,
                    StarSubdivisionWitness::clique(&(0..k).collect::<Vec<_>>()),
                )
            }
            BasicKind::Nontrivial => {
                let b = build_basic_witness(&seq)?;
                (b.graph, b.witness)
            }
        };
        parts.push(part);
    }
    let (graph, witness) = if parts.is_empty() {
        (SimpleGraph::new(0), StarSubdivisionWitness::clique(&[]))
    } else {
        join_witness_realizations(&parts)?
    };
    if graph.degree_sequence() != decomposition.subgraph.degree_sequence() {
        return Err(Error::Internal(format!(
            "pipeline output does not realize the degree sequence of {:?}",
            decomposition.subgraph
        )));
    }
    verify_witness(&graph, &witness)
        .map_err(|e| Error::Internal(format!("pipeline witness rejected: {e}")))?;
    if witness.order < decomposition.chi {
        return Err(Error::Internal(format!(
            "pipeline witness of order {} is below chi = {}",
            witness.order, decomposition.chi
        )));
    }
    Ok(PipelineResult {
        decomposition,
        graph,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::h1_of_graph;

    fn lim() -> Limits {
        Limits::default()
    }

    fn c5_part() -> (SimpleGraph, StarSubdivisionWitness) {
        let c5 = SimpleGraph::cycle(5);
        let w = h1_of_graph(&c5, &lim()).unwrap().1.unwrap();
        (c5, w)
    }

    #[test]
    fn join_examples() {
        let (g, w) = join_witness_realizations(&[c5_part(), c5_part()]).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(w.order, 6);
        assert_eq!(verify_witness(&g, &w), Ok(()));

        let k1 = (SimpleGraph::new(1), StarSubdivisionWitness::clique(&[0]));
        let (g, w) = join_witness_realizations(&[k1.clone()]).unwrap();
        assert_eq!((g.n(), w.order), (1, 1));
        let (g, w) = join_witness_realizations(&[k1.clone(), k1]).unwrap();
        assert_eq!(g, SimpleGraph::complete(2));
        assert_eq!(w.order, 2);

        let bad = (SimpleGraph::new(2), StarSubdivisionWitness::clique(&[0, 1]));
        assert!(matches!(
            join_witness_realizations(&[bad]),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn pipeline_examples() {
        let r = witness_pipeline(&SimpleGraph::cycle(5), &lim()).unwrap();
        assert_eq!(r.witness.order, 3);
        assert_eq!(r.graph.degrees(), vec![2; 5]);

        let r = witness_pipeline(&SimpleGraph::complete(4), &lim()).unwrap();
        assert_eq!(r.witness.order, 4);
        assert_eq!(r.graph, SimpleGraph::complete(4));

        let (g, _) = join_graphs(&[SimpleGraph::cycle(5), SimpleGraph::complete(4)]).unwrap();
        let r = witness_pipeline(&g, &lim()).unwrap();
        assert_eq!(r.graph.n(), 9);
        assert!(r.witness.order >= 7);

        let r = witness_pipeline(&SimpleGraph::new(0), &lim()).unwrap();
        assert_eq!(r.witness.order, 0);
    }
}
