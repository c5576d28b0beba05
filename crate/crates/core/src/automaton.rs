//! Parity tree automata over binary trees.

use std::collections::{BTreeSet, HashMap};

use crate::colour::{self, Colour};
use crate::error::{Error, Result};

pub type StateId = usize;
pub type SymbolId = usize;

/// A transition `(state, symbol, left, right)`: in `state` reading `symbol`,
/// the automaton sends `left` to the 0-child and `right` to the 1-child.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub state: StateId,
    pub symbol: SymbolId,
    pub left: StateId,
    pub right: StateId,
}

impl Transition {
    pub fn new(state: StateId, symbol: SymbolId, left: StateId, right: StateId) -> Self {
        Transition {
            state,
            symbol,
            left,
            right,
        }
    }

    /// The state sent in direction `dir` (0 or 1).
    #[inline]
    pub fn child(&self, dir: usize) -> StateId {
        if dir == 0 {
            self.left
        } else {
            self.right
        }
    }
}

pub(crate) fn validate_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == ':' || c == '#') {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

fn index_names(kind: &'static str, names: &[String]) -> Result<HashMap<String, usize>> {
    let mut map = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        validate_name(n)?;
        if map.insert(n.clone(), i).is_some() {
            return Err(Error::Duplicate {
                kind,
                name: n.clone(),
            });
        }
    }
    Ok(map)
}

/// Alphabet, states, initial state and transitions, without an acceptance
/// condition. A shell may be incomplete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomatonShell {
    symbols: Vec<String>,
    states: Vec<String>,
    initial: StateId,
    transitions: Vec<Transition>,
}

impl AutomatonShell {
    pub fn new(
        symbols: Vec<String>,
        states: Vec<String>,
        initial: StateId,
        mut transitions: Vec<Transition>,
    ) -> Result<Self> {
        index_names("symbol", &symbols)?;
        index_names("state", &states)?;
        if states.is_empty() {
            return Err(Error::Missing("states"));
        }
        if symbols.is_empty() {
            return Err(Error::Missing("alphabet"));
        }
        if initial >= states.len() {
            return Err(Error::IndexOutOfRange {
                what: "initial state",
                index: initial,
            });
        }
        for t in &transitions {
            for q in [t.state, t.left, t.right] {
                if q >= states.len() {
                    return Err(Error::IndexOutOfRange {
                        what: "state",
                        index: q,
                    });
                }
            }
            if t.symbol >= symbols.len() {
                return Err(Error::IndexOutOfRange {
                    what: "symbol",
                    index: t.symbol,
                });
            }
        }
        transitions.sort_unstable();
        transitions.dedup();
        Ok(AutomatonShell {
            symbols,
            states,
            initial,
            transitions,
        })
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    /// Transitions sorted by `(state, symbol, left, right)`.
    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_symbols(&self) -> usize {
        self.symbols.len()
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name)
    }

    pub fn symbol_id(&self, name: &str) -> Option<SymbolId> {
        self.symbols.iter().position(|s| s == name)
    }

    /// `(state, symbol)` pairs without any transition, in index order.
    pub fn missing_pairs(&self) -> Vec<(StateId, SymbolId)> {
        let mut covered = vec![false; self.states.len() * self.symbols.len()];
        for t in &self.transitions {
            covered[t.state * self.symbols.len() + t.symbol] = true;
        }
        covered
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| (i / self.symbols.len(), i % self.symbols.len()))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.missing_pairs().is_empty()
    }

    fn incomplete_error(&self) -> Option<Error> {
        self.missing_pairs().first().map(|&(q, a)| Error::Incomplete {
            state: self.states[q].clone(),
            symbol: self.symbols[a].clone(),
        })
    }
}

/// A complete parity tree automaton under the min-parity condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityTreeAutomaton {
    shell: AutomatonShell,
    colours: Vec<Colour>,
    /// `offsets[q * |A| + a]..offsets[q * |A| + a + 1]` indexes the
    /// transitions of `(q, a)`.
    offsets: Vec<usize>,
}

impl ParityTreeAutomaton {
    /// Validates completeness and attaches colours to a shell.
    pub fn new(shell: AutomatonShell, colours: Vec<Colour>) -> Result<Self> {
        if colours.len() != shell.num_states() {
            return Err(Error::IndexOutOfRange {
                what: "colour list length",
                index: colours.len(),
            });
        }
        if let Some(e) = shell.incomplete_error() {
            return Err(e);
        }
        let nsym = shell.num_symbols();
        let mut offsets = vec![0usize; shell.num_states() * nsym + 1];
        for t in &shell.transitions {
            offsets[t.state * nsym + t.symbol + 1] += 1;
        }
        for i in 1..offsets.len() {
            offsets[i] += offsets[i - 1];
        }
        Ok(ParityTreeAutomaton {
            shell,
            colours,
            offsets,
        })
    }

    /// Builds an automaton from names; handy in tests and examples.
    pub fn from_names(
        symbols: &[&str],
        states: &[(&str, u32)],
        initial: &str,
        transitions: &[(&str, &str, &str, &str)],
    ) -> Result<Self> {
        let syms: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
        let names: Vec<String> = states.iter().map(|(s, _)| s.to_string()).collect();
        let colours = states.iter().map(|&(_, c)| Colour(c)).collect();
        let sid = |n: &str| -> Result<StateId> {
            names
                .iter()
                .position(|s| s == n)
                .ok_or_else(|| Error::UnknownState {
                    name: n.to_string(),
                    line: 0,
                })
        };
        let aid = |n: &str| -> Result<SymbolId> {
            syms.iter()
                .position(|s| s == n)
                .ok_or_else(|| Error::UnknownSymbol {
                    name: n.to_string(),
                    line: 0,
                })
        };
        let init = sid(initial)?;
        let trans = transitions
            .iter()
            .map(|&(q, a, l, r)| Ok(Transition::new(sid(q)?, aid(a)?, sid(l)?, sid(r)?)))
            .collect::<Result<Vec<_>>>()?;
        let shell = AutomatonShell::new(syms.clone(), names.clone(), init, trans)?;
        ParityTreeAutomaton::new(shell, colours)
    }

    pub fn shell(&self) -> &AutomatonShell {
        &self.shell
    }

    pub fn symbols(&self) -> &[String] {
        &self.shell.symbols
    }

    pub fn states(&self) -> &[String] {
        &self.shell.states
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.shell.states[q]
    }

    pub fn symbol_name(&self, a: SymbolId) -> &str {
        &self.shell.symbols[a]
    }

    pub fn initial(&self) -> StateId {
        self.shell.initial
    }

    pub fn num_states(&self) -> usize {
        self.shell.num_states()
    }

    pub fn num_symbols(&self) -> usize {
        self.shell.num_symbols()
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.shell.transitions
    }

    #[inline]
    pub fn colour(&self, q: StateId) -> Colour {
        self.colours[q]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    #[inline]
    pub fn transitions_from(&self, q: StateId, a: SymbolId) -> &[Transition] {
        let i = q * self.num_symbols() + a;
        &self.shell.transitions[self.offsets[i]..self.offsets[i + 1]]
    }

    /// Sorted distinct colours used by the states.
    pub fn distinct_colours(&self) -> Vec<Colour> {
        colour::distinct(&self.colours)
    }

    pub fn max_colour(&self) -> Colour {
        self.colours.iter().copied().max().unwrap_or_default()
    }

    pub fn is_deterministic(&self) -> bool {
        self.first_nondeterminism().is_none()
    }

    pub(crate) fn first_nondeterminism(&self) -> Option<Error> {
        for q in 0..self.num_states() {
            for a in 0..self.num_symbols() {
                if self.transitions_from(q, a).len() > 1 {
                    return Some(Error::Nondeterministic {
                        state: self.state_name(q).to_string(),
                        symbol: self.symbol_name(a).to_string(),
                    });
                }
            }
        }
        None
    }

    /// The same automaton with symbols, states and transitions in
    /// lexicographic name order. Two automata are equal up to declaration
    /// order iff their canonical forms are equal.
    pub fn canonical(&self) -> ParityTreeAutomaton {
        let perm_sym = sorted_permutation(self.symbols());
        let perm_state = sorted_permutation(self.states());
        let symbols: Vec<String> = perm_sym.order.iter().map(|&i| self.symbols()[i].clone()).collect();
        let states: Vec<String> = perm_state.order.iter().map(|&i| self.states()[i].clone()).collect();
        let colours = perm_state.order.iter().map(|&i| self.colours[i]).collect();
        let transitions = self
            .transitions()
            .iter()
            .map(|t| {
                Transition::new(
                    perm_state.rank[t.state],
                    perm_sym.rank[t.symbol],
                    perm_state.rank[t.left],
                    perm_state.rank[t.right],
                )
            })
            .collect();
        let shell = AutomatonShell::new(symbols, states, perm_state.rank[self.initial()], transitions)
            .expect("permutation of a valid shell is valid");
        ParityTreeAutomaton::new(shell, colours).expect("permutation of a complete automaton is complete")
    }
}

struct Permutation {
    /// `order[k]` is the old index at new position `k`.
    order: Vec<usize>,
    /// `rank[old]` is the new index.
    rank: Vec<usize>,
}

fn sorted_permutation(names: &[String]) -> Permutation {
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by(|&a, &b| names[a].cmp(&names[b]));
    let mut rank = vec![0; names.len()];
    for (k, &i) in order.iter().enumerate() {
        rank[i] = k;
    }
    Permutation { order, rank }
}

/// A complete automaton with a Büchi condition: a branch is accepting iff it
/// visits `final_states` infinitely often.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuchiSpec {
    shell: AutomatonShell,
    final_states: BTreeSet<StateId>,
}

impl BuchiSpec {
    pub fn new(shell: AutomatonShell, final_states: BTreeSet<StateId>) -> Result<Self> {
        check_subset(&shell, &final_states)?;
        if let Some(e) = shell.incomplete_error() {
            return Err(e);
        }
        Ok(BuchiSpec {
            shell,
            final_states,
        })
    }

    pub fn shell(&self) -> &AutomatonShell {
        &self.shell
    }

    pub fn final_states(&self) -> &BTreeSet<StateId> {
        &self.final_states
    }
}

/// A complete automaton with a co-Büchi condition: a branch is accepting iff
/// it visits `forbidden` finitely often.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoBuchiSpec {
    shell: AutomatonShell,
    forbidden: BTreeSet<StateId>,
}

impl CoBuchiSpec {
    pub fn new(shell: AutomatonShell, forbidden: BTreeSet<StateId>) -> Result<Self> {
        check_subset(&shell, &forbidden)?;
        if let Some(e) = shell.incomplete_error() {
            return Err(e);
        }
        Ok(CoBuchiSpec { shell, forbidden })
    }

    pub fn shell(&self) -> &AutomatonShell {
        &self.shell
    }

    pub fn forbidden(&self) -> &BTreeSet<StateId> {
        &self.forbidden
    }
}

fn check_subset(shell: &AutomatonShell, set: &BTreeSet<StateId>) -> Result<()> {
    match set.iter().find(|&&q| q >= shell.num_states()) {
        Some(&q) => Err(Error::IndexOutOfRange {
            what: "state",
            index: q,
        }),
        None => Ok(()),
    }
}

/// Final states get colour 0, all others colour 1.
pub fn buchi_to_parity(b: &BuchiSpec) -> ParityTreeAutomaton {
    let colours = (0..b.shell.num_states())
        .map(|q| if b.final_states.contains(&q) { Colour(0) } else { Colour(1) })
        .collect();
    ParityTreeAutomaton::new(b.shell.clone(), colours).expect("Büchi spec shell is complete")
}

/// Forbidden states get colour 1, all others colour 2.
pub fn cobuchi_to_parity(c: &CoBuchiSpec) -> ParityTreeAutomaton {
    let colours = (0..c.shell.num_states())
        .map(|q| if c.forbidden.contains(&q) { Colour(1) } else { Colour(2) })
        .collect();
    ParityTreeAutomaton::new(c.shell.clone(), colours).expect("co-Büchi spec shell is complete")
}

/// Completes a shell with a rejecting sink.
///
/// If the shell is already complete it is returned unchanged. Otherwise a
/// fresh state of colour 1 is added that loops on every symbol, and every
/// missing `(q, a)` gets the transition `(q, a, sink, sink)`.
///
/// This preserves the language only under classical acceptance: under the
/// counting semantics the new runs through the sink may add accepting side
/// branches. The deciders refuse incomplete automata instead of calling this.
pub fn complete_with_sink(shell: &AutomatonShell, colours: &[Colour]) -> Result<ParityTreeAutomaton> {
    if shell.is_complete() {
        return ParityTreeAutomaton::new(shell.clone(), colours.to_vec());
    }
    let missing = shell.missing_pairs();
    let mut states = shell.states.clone();
    let sink_name = fresh_name("s", &states);
    let sink = states.len();
    states.push(sink_name);
    let mut transitions = shell.transitions.clone();
    for (q, a) in missing {
        transitions.push(Transition::new(q, a, sink, sink));
    }
    for a in 0..shell.num_symbols() {
        transitions.push(Transition::new(sink, a, sink, sink));
    }
    let mut cols = colours.to_vec();
    cols.push(Colour(1));
    let shell = AutomatonShell::new(shell.symbols.clone(), states, shell.initial, transitions)?;
    ParityTreeAutomaton::new(shell, cols)
}

/// `base`, or `base` followed by enough `'` to avoid `taken`.
pub(crate) fn fresh_name(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.iter().any(|t| t == &name) {
        name.push('\'');
    }
    name
}

pub(crate) fn fresh_name_in(base: &str, taken: &std::collections::HashSet<String>) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}
