mod common;

use std::collections::BTreeSet;

use chipfas::acyclic::{maximal_rooted_sets, rootify, RootedAcyclicSet};
use chipfas::chipfire::{stabilize, Configuration};
use chipfas::recurrence::{
    beta, burning_sequence, canonical_recurrent, config_from_arcset, enumerate_recurrent,
    equivalent, firing_graph, group_add, group_order, identity, is_minimal_recurrent,
    is_recurrent, pointwise_minimal,
};
use chipfas::Digraph;
use common::*;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;

fn with_sink(seed: u64, max_n: usize) -> (Digraph, usize) {
    let mut r = rng(seed);
    let g = eulerian(&mut r, max_n);
    let s = r.gen_range(0..g.n());
    (g, s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn burning_fires_every_vertex_once(seed: u64) {
        let (g, s) = with_sink(seed, 6);
        let b = beta(&g, s).unwrap();
        for c in enumerate_recurrent(&g, s).unwrap() {
            let start = c.add(&b).unwrap();
            let mut graphs = BTreeSet::new();
            let mut ok = true;
            all_legal_sequences(&g, &start, &mut |seq| {
                let mut sorted = seq.to_vec();
                sorted.sort();
                let expected: Vec<usize> = (0..g.n()).filter(|&v| v != s).collect();
                ok &= sorted == expected;
                let fg = firing_graph(&g, s, &c, seq).unwrap();
                ok &= (0..g.n())
                    .filter(|&v| v != s)
                    .all(|v| c.get(v) + fg.indeg(&g, v) as u64 >= g.outdeg(v) as u64);
                graphs.insert(fg.arcs.indices().collect::<Vec<_>>());
            });
            prop_assert!(ok, "{:?}: some legal sequence is not a burning order", c);
            if is_minimal_recurrent(&g, s, &c).unwrap() {
                prop_assert_eq!(graphs.len(), 1, "{:?} has several firing graphs", c);
            }
        }
    }

    #[test]
    fn minimality_matches_pointwise_filter(seed: u64) {
        let (g, s) = with_sink(seed, 6);
        let rec = enumerate_recurrent(&g, s).unwrap();
        let minimal: BTreeSet<Configuration> = pointwise_minimal(&rec).into_iter().collect();
        for c in &rec {
            prop_assert_eq!(is_minimal_recurrent(&g, s, c).unwrap(), minimal.contains(c));
        }
        prop_assert_eq!(BigUint::from(rec.len()), group_order(&g, s).unwrap());
    }

    #[test]
    fn rooted_sets_give_recurrent_configurations(seed: u64) {
        let (g, s) = with_sink(seed, 6);
        for set in maximal_rooted_sets(&g, s).unwrap() {
            let r = RootedAcyclicSet::new(&g, set, s).unwrap();
            let c = config_from_arcset(&g, s, &r).unwrap();
            prop_assert!(is_minimal_recurrent(&g, s, &c).unwrap());
        }
        let seeded = rootify(&g, &g.empty_arcs(), s).unwrap();
        let c = config_from_arcset(&g, s, &seeded).unwrap();
        prop_assert!(is_recurrent(&g, s, &c).unwrap());
    }

    #[test]
    fn group_laws(seed: u64) {
        let (g, s) = with_sink(seed, 5);
        let rec = enumerate_recurrent(&g, s).unwrap();
        let e = identity(&g, s).unwrap();
        prop_assert!(rec.contains(&e));
        for x in &rec {
            prop_assert_eq!(&group_add(&g, s, x, &e).unwrap(), x);
            prop_assert!(rec.iter().any(|y| group_add(&g, s, x, y).unwrap() == e));
            for y in &rec {
                let xy = group_add(&g, s, x, y).unwrap();
                prop_assert_eq!(&xy, &group_add(&g, s, y, x).unwrap());
                for z in rec.iter().take(4) {
                    prop_assert_eq!(
                        group_add(&g, s, &xy, z).unwrap(),
                        group_add(&g, s, x, &group_add(&g, s, y, z).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn canonical_representatives(seed: u64) {
        let mut r = rng(seed);
        let (g, s) = with_sink(seed, 6);
        let rec: BTreeSet<Configuration> = enumerate_recurrent(&g, s).unwrap().into_iter().collect();
        let c = random_configuration(&mut r, &g, s);
        let canon = canonical_recurrent(&g, s, &c).unwrap();
        prop_assert!(rec.contains(&canon));
        prop_assert_eq!(&canonical_recurrent(&g, s, &canon).unwrap(), &canon);
        let shifted = c.add(&beta(&g, s).unwrap()).unwrap();
        prop_assert!(equivalent(&g, s, &c, &shifted).unwrap());
        let (stable, _) = stabilize(&g, &c).unwrap();
        prop_assert!(equivalent(&g, s, &c, &stable).unwrap());
    }

    #[test]
    fn recurrence_on_general_sink_digraphs(seed: u64) {
        let (g, s) = global_sink(&mut rng(seed), 6);
        let rec: BTreeSet<Configuration> = enumerate_recurrent(&g, s).unwrap().into_iter().collect();
        prop_assert_eq!(&rec, &accessible_closure(&g, s));
        prop_assert_eq!(BigUint::from(rec.len()), group_order(&g, s).unwrap());
    }
}

#[test]
fn burning_rejects_non_recurrent_with_unburnt_set() {
    let (g, s) = with_sink(11, 6);
    let zero = Configuration::zero(g.n(), s).unwrap();
    if !is_recurrent(&g, s, &zero).unwrap() {
        assert!(matches!(
            burning_sequence(&g, s, &zero),
            Err(chipfas::Error::NotRecurrent { .. })
        ));
    }
}
