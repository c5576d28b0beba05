use treeacc::corpus;
use treeacc::oracle::{build_run_graph, classify, membership_from_classification, Cardinality};
use treeacc::Semantics;

use Cardinality::*;

// (automaton, tree, rejecting, accepting, accepting set large)
const EXPECTED: [(&str, &str, Cardinality, Cardinality, bool); 6] = [
    ("AR", "Ta", None, Uncountable, true),
    ("AR", "Tb", Uncountable, None, false),
    ("AR", "TL", Uncountable, CountablyInfinite, false),
    ("ABinf", "TL", CountablyInfinite, Uncountable, true),
    ("Aseen", "TL", Finite, Uncountable, true),
    ("AR", "T00", Uncountable, Uncountable, false),
];

#[test]
fn curated_cardinalities() {
    for (an, tn, rej, acc, large) in EXPECTED {
        let g = build_run_graph(&corpus::automaton(an), &corpus::tree(tn)).unwrap();
        let c = classify(&g);
        assert_eq!((c.rejecting, c.accepting, c.accepting_large), (rej, acc, large), "({an},{tn})");
        assert_eq!(c.offending_bscc.is_some(), !large, "({an},{tn})");
    }
}

#[test]
fn classification_reproduces_the_table() {
    for (an, tn, row) in corpus::TABLE {
        let g = build_run_graph(&corpus::automaton(an), &corpus::tree(tn)).unwrap();
        let c = classify(&g);
        for s in Semantics::ALL {
            assert_eq!(membership_from_classification(&c, s), corpus::expected(&row, s), "({an},{tn}) {s}");
        }
    }
}

#[test]
fn witnesses_point_into_the_run_graph() {
    let g = build_run_graph(&corpus::automaton("AR"), &corpus::tree("TL")).unwrap();
    let c = classify(&g);
    let (s, k) = c.rejecting_witness.branching.expect("uncountably many rejecting branches");
    assert!(s < g.num_vertices());
    assert!(k.is_odd());
    let (w, d) = c.accepting_witness.splitting.expect("infinitely many accepting branches");
    assert!(w < g.num_vertices() && d <= 1);
    assert!(c.accepting_witness.branching.is_none());
}
