use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use treeacc::corpus;
use treeacc::deciders::{membership, Via};
use treeacc::oracle::deterministic_membership;
use treeacc::random::{random_automaton, random_tree, AutomatonParams};
use treeacc::Semantics;

#[test]
fn curated_table_all_paths() {
    for (an, tn, row) in corpus::TABLE {
        let a = corpus::automaton(an);
        let t = corpus::tree(tn);
        for s in Semantics::ALL {
            let want = corpus::expected(&row, s);
            assert_eq!(deterministic_membership(&a, &t, s).unwrap(), want, "oracle {an} {tn} {s}");
            assert_eq!(membership(&a, &t, s, Via::Direct).unwrap(), want, "direct {an} {tn} {s}");
            assert_eq!(membership(&a, &t, s, Via::Transform).unwrap(), want, "transform {an} {tn} {s}");
        }
    }
}

#[test]
fn deterministic_three_way_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let p = AutomatonParams::deterministic(4, 5);
    for i in 0..400 {
        let a = random_automaton(&mut rng, &p);
        let t = random_tree(&mut rng, 5, a.num_symbols());
        for s in Semantics::ALL {
            let o = deterministic_membership(&a, &t, s).unwrap();
            let d = membership(&a, &t, s, Via::Direct).unwrap();
            let x = membership(&a, &t, s, Via::Transform).unwrap();
            assert!(o == d && d == x, "instance {i} {s}: oracle {o} direct {d} transform {x}\n{}\n{}",
                treeacc::serialize_automaton(&a), treeacc::serialize_tree(&t));
        }
    }
}

#[test]
fn nondeterministic_direct_matches_transform() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let p = AutomatonParams::nondeterministic(3, 4);
    for i in 0..400 {
        let a = random_automaton(&mut rng, &p);
        let t = random_tree(&mut rng, 4, a.num_symbols());
        let mut prev = [false; 6];
        for (k, s) in Semantics::ALL.into_iter().enumerate() {
            let d = membership(&a, &t, s, Via::Direct).unwrap();
            let x = membership(&a, &t, s, Via::Transform).unwrap();
            assert_eq!(d, x, "instance {i} {s}\n{}\n{}", treeacc::serialize_automaton(&a), treeacc::serialize_tree(&t));
            prev[k] = d;
        }
        for (lo, hi) in Semantics::IMPLICATIONS {
            let li = Semantics::ALL.iter().position(|&x| x == lo).unwrap();
            let hi_ = Semantics::ALL.iter().position(|&x| x == hi).unwrap();
            assert!(!prev[li] || prev[hi_], "instance {i}: {lo} does not imply {hi}");
        }
    }
}

