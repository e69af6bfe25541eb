mod common;

use degseq::analysis::{
    basic_kind, chromatic_number, clique_number, find_join_decomposition, h1_of_graph,
    verify_witness, BasicKind,
};
use degseq::hajos::witness_pipeline;
use degseq::oracle::all_graphs_up_to_iso;
use degseq::{Limits, SimpleGraph};

fn every_graph(max_n: usize) -> impl Iterator<Item = SimpleGraph> {
    (1..=max_n).flat_map(|n| all_graphs_up_to_iso(n).unwrap())
}

#[test]
fn isomorphism_class_counts() {
    let counts: Vec<usize> = (1..=7)
        .map(|n| all_graphs_up_to_iso(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn exact_invariants_match_brute_force() {
    let lim = Limits::default();
    for g in every_graph(6) {
        let a = common::from_graph(&g);
        assert_eq!(
            chromatic_number(&g, &lim).unwrap(),
            common::chromatic_number(&a),
            "{g:?}"
        );
        assert_eq!(clique_number(&g), common::clique_number(&a), "{g:?}");
        let (r, w) = h1_of_graph(&g, &lim).unwrap();
        assert_eq!(r, common::h1(&a), "{g:?}");
        assert_eq!(verify_witness(&g, &w.unwrap()), Ok(()));
    }
}

#[test]
fn h1_matches_brute_force_on_seven_vertices() {
    let lim = Limits::default();
    for g in all_graphs_up_to_iso(7).unwrap().into_iter().step_by(7) {
        let a = common::from_graph(&g);
        assert_eq!(h1_of_graph(&g, &lim).unwrap().0, common::h1(&a), "{g:?}");
    }
}

#[test]
fn decomposition_contract_on_all_small_graphs() {
    let lim = Limits::default();
    for g in every_graph(7) {
        let d = find_join_decomposition(&g, &lim).unwrap();
        let sub = g.induced(&d.vertices);
        assert_eq!(sub, d.subgraph);
        assert_eq!(
            chromatic_number(&sub, &lim).unwrap(),
            chromatic_number(&g, &lim).unwrap()
        );
        for f in &d.factors {
            assert_eq!(basic_kind(&f.graph, &lim).unwrap(), Some(f.kind), "{g:?}");
            assert_eq!(g.induced(&f.vertices), f.graph);
        }
    }
}

#[test]
fn pipeline_witness_dominates_chi() {
    let lim = Limits::default();
    let mut nontrivial = 0;
    for g in every_graph(7) {
        let r = witness_pipeline(&g, &lim).unwrap();
        assert!(r.witness.order >= r.decomposition.chi, "{g:?}");
        assert_eq!(verify_witness(&r.graph, &r.witness), Ok(()));
        assert_eq!(
            r.graph.degree_sequence(),
            r.decomposition.subgraph.degree_sequence()
        );
        nontrivial += r
            .decomposition
            .factors
            .iter()
            .filter(|f| f.kind == BasicKind::Nontrivial)
            .count();
    }
    assert!(nontrivial > 0);
}
