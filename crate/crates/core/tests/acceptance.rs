//! Acceptance criteria, one PASS/FAIL line each.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use treeacc::constructions::{bound, transform};
use treeacc::corpus;
use treeacc::deciders::{decide, emptiness, extract_witness_tree, membership, Via};
use treeacc::fuzz::{run_campaign, FuzzConfig};
use treeacc::games::{solve_parity, solve_parity_bruteforce, verify_strategy};
use treeacc::oracle::deterministic_membership;
use treeacc::random::{
    latch_lasso_check, random_automaton, random_automaton_sized, random_game, random_lasso, random_latch_instance,
    random_tree_sized, AutomatonParams,
};
use treeacc::{Player, Semantics};

struct Outcome {
    ok: bool,
    detail: String,
}

fn criterion(n: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let in_time = limit.is_none_or(|l| took < l);
    let ok = out.ok && in_time;
    let limit = limit.map_or(String::new(), |l| format!(" / limit {:.0?}", l));
    println!(
        "{} {n}. {name}: {} [{:.2?}{limit}]",
        if ok { "PASS" } else { "FAIL" },
        out.detail,
        took
    );
    ok
}

fn bounds() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut violations = Vec::new();
    for i in 0..200 {
        let states = rng.gen_range(1..=6);
        let symbols = rng.gen_range(1..=2);
        let branching = rng.gen_range(1..=2);
        let a = random_automaton_sized(&mut rng, states, symbols, 6, branching);
        let d = a.distinct_colours().len();
        for s in Semantics::ALL {
            let (out, rep) = transform(&a, s);
            let (b, _) = bound(s, a.num_states(), d);
            let cols = out.distinct_colours();
            let buchi = !matches!(s, Semantics::AccInf | Semantics::AccUnc) || cols.iter().all(|c| c.0 <= 1);
            if out.num_states() > b.states || cols.len() > b.colours || !buchi || !rep.bound_ok {
                violations.push(format!("#{i} {s}: {rep:?}"));
            }
        }
    }
    Outcome {
        ok: violations.is_empty(),
        detail: format!("200 automata x 6 constructions, {} violations {:?}", violations.len(), violations.first()),
    }
}

fn campaign(cfg: FuzzConfig) -> Outcome {
    let r = run_campaign(&cfg);
    Outcome {
        ok: r.passed() && r.count >= 1000,
        detail: format!(
            "{} instances, {} failures, accepted per semantics {:?}{}",
            r.count,
            r.failures,
            r.accepted,
            r.first_failure.map_or(String::new(), |f| format!(", first: {} at #{}", f.failure, f.index))
        ),
    }
}

fn curated() -> Outcome {
    let mut wrong = Vec::new();
    for (an, tn, row) in corpus::TABLE {
        let a = corpus::automaton(an);
        let t = corpus::tree(tn);
        for s in Semantics::ALL {
            let want = corpus::expected(&row, s);
            let got = [
                deterministic_membership(&a, &t, s).unwrap(),
                membership(&a, &t, s, Via::Direct).unwrap(),
                membership(&a, &t, s, Via::Transform).unwrap(),
            ];
            if got.iter().any(|&g| g != want) {
                wrong.push(format!("({an},{tn}) {s}: want {want}, oracle/direct/transform {got:?}"));
            }
        }
    }
    Outcome {
        ok: wrong.is_empty(),
        detail: format!("6 rows x 6 semantics x 3 deciders, {} wrong cells {:?}", wrong.len(), wrong.first()),
    }
}

fn solvers() -> Outcome {
    let bad: Vec<usize> = (0..500usize)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = ChaCha8Rng::seed_from_u64(5000 + i as u64);
            let g = random_game(&mut rng, 8, 6, 3);
            let sol = solve_parity(&g);
            let brute = solve_parity_bruteforce(&g).unwrap();
            let verified = [Player::Eloise, Player::Abelard]
                .into_iter()
                .all(|p| verify_strategy(&g, sol.strategy(p), p, &sol.region(p)));
            sol.winners() != &brute[..] || !verified
        })
        .collect();
    Outcome {
        ok: bad.is_empty(),
        detail: format!("500 games, {} mismatches {:?}", bad.len(), bad.first()),
    }
}

fn witnesses() -> Outcome {
    let results: Vec<(usize, usize, Option<String>)> = (0..200usize)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(7000 + i as u64);
            let a = random_automaton(&mut rng, &AutomatonParams::nondeterministic(3, 4));
            let mut nonempty = 0;
            for s in Semantics::ALL {
                let empty = emptiness(&a, s);
                let w = extract_witness_tree(&a, s);
                match (empty, w) {
                    (true, None) => {}
                    (false, Some(w)) => {
                        nonempty += 1;
                        let states = transform(&a, s).0.num_states();
                        if !membership(&a, &w.tree, s, Via::Direct).unwrap() {
                            return (i, nonempty, Some(format!("{s}: witness rejected")));
                        }
                        if w.tree.num_nodes() > states {
                            return (i, nonempty, Some(format!("{s}: witness has {} nodes", w.tree.num_nodes())));
                        }
                    }
                    (e, w) => return (i, nonempty, Some(format!("{s}: empty {e}, witness {}", w.is_some()))),
                }
            }
            (i, nonempty, None)
        })
        .collect();
    let checked: usize = results.iter().map(|r| r.1).sum();
    let bad: Vec<_> = results.iter().filter_map(|r| r.2.as_ref().map(|m| format!("#{} {m}", r.0))).collect();
    Outcome {
        ok: bad.is_empty(),
        detail: format!(
            "200 automata x 6 semantics, {checked} non-empty languages, {} failures {:?}",
            bad.len(),
            bad.first()
        ),
    }
}

fn lassos() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut bad = 0;
    for _ in 0..500 {
        let (g, cls) = random_latch_instance(&mut rng, 8);
        let (prefix, cycle) = random_lasso(&mut rng, &g, 16);
        let (expected, actual) = latch_lasso_check(&g, &cls, &prefix, &cycle);
        bad += (expected != actual) as usize;
    }
    Outcome {
        ok: bad == 0,
        detail: format!("500 lassos, {bad} mismatches"),
    }
}

fn scale() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let a = loop {
        let a = random_automaton_sized(&mut rng, 50, 2, 6, 2);
        if a.distinct_colours().len() == 6 {
            break a;
        }
    };
    let t = random_tree_sized(&mut rng, 100, 2);
    let mut slowest = Duration::ZERO;
    let mut parts = Vec::new();
    for s in Semantics::ALL {
        let start = Instant::now();
        let d = decide(&a, &t, s, Via::Transform).unwrap();
        let took = start.elapsed();
        slowest = slowest.max(took);
        parts.push(format!("{s} {:.2?} ({} vertices)", took, d.game.game.num_vertices()));
    }
    Outcome {
        ok: slowest < Duration::from_secs(5),
        detail: format!("|Q| = 50, d = 6, 100 nodes: {}", parts.join(", ")),
    }
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        criterion(1, "construction bounds", Some(secs(10)), bounds),
        criterion(2, "deterministic differential suite", Some(secs(60)), || {
            campaign(FuzzConfig::deterministic(2024, 1000))
        }),
        criterion(3, "nondeterministic suite", Some(secs(120)), || {
            campaign(FuzzConfig::nondeterministic(2025, 1000))
        }),
        criterion(4, "curated classification table", None, curated),
        criterion(5, "solver cross-check", Some(secs(30)), solvers),
        criterion(6, "witness loop", None, witnesses),
        criterion(7, "latch correctness", None, lassos),
        criterion(8, "scale smoke test", None, scale),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
