//! Line-based text formats for automata and regular trees.
//!
//! ```text
//! # automaton
//! alphabet: a b
//! states: p:2 f:1
//! initial: p
//! trans: p a p p
//! trans: p b f f
//! ```
//!
//! A Büchi automaton lists `final: ...` and a co-Büchi automaton lists
//! `forbidden: ...`; both omit the colours in `states:`.
//!
//! ```text
//! # tree
//! nodes: Na:a Nb:b
//! root: Na
//! edges: Na Nb Na
//! edges: Nb Nb Na
//! ```

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::automaton::{
    buchi_to_parity, cobuchi_to_parity, AutomatonShell, BuchiSpec, CoBuchiSpec,
    ParityTreeAutomaton, Transition,
};
use crate::colour::Colour;
use crate::error::{Error, Result};
use crate::tree::RegularTree;

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

struct Line<'a> {
    key: Token<'a>,
    values: Vec<Token<'a>>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn tokens(line: &str, lineno: usize, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    line: lineno,
                    column: offset + line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            line: lineno,
            column: offset + line[..s].chars().count() + 1,
        });
    }
    out
}

fn lines(text: &str) -> Result<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let Some(colon) = body.find(':') else {
            let col = body.len() - body.trim_start().len() + 1;
            return Err(syntax(lineno, col, "expected `key: values`"));
        };
        let keypart = &body[..colon];
        let key_tokens = tokens(keypart, lineno, 0);
        if key_tokens.len() != 1 {
            return Err(syntax(lineno, 1, "expected a single key before `:`"));
        }
        let offset = body[..colon + 1].chars().count();
        out.push(Line {
            key: key_tokens[0],
            values: tokens(&body[colon + 1..], lineno, offset),
        });
    }
    Ok(out)
}

fn split_pair<'a>(tok: Token<'a>, what: &str) -> Result<(Token<'a>, Token<'a>)> {
    match tok.text.split_once(':') {
        Some((a, b)) if !a.is_empty() && !b.is_empty() && !b.contains(':') => Ok((
            Token { text: a, ..tok },
            Token {
                text: b,
                column: tok.column + a.chars().count() + 1,
                ..tok
            },
        )),
        _ => Err(syntax(tok.line, tok.column, format!("expected `{what}`"))),
    }
}

fn expect_count(line: &Line<'_>, n: usize, shape: &str) -> Result<()> {
    if line.values.len() != n {
        let col = line.values.get(n).map_or(line.key.column, |t| t.column);
        return Err(syntax(line.key.line, col, format!("expected `{}: {shape}`", line.key.text)));
    }
    Ok(())
}

/// How the states of a parsed automaton accept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Acceptance {
    Parity(Vec<Colour>),
    Buchi(BTreeSet<usize>),
    CoBuchi(BTreeSet<usize>),
}

/// An automaton file before the completeness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedAutomaton {
    pub shell: AutomatonShell,
    pub acceptance: Acceptance,
}

impl ParsedAutomaton {
    /// Validates completeness and converts Büchi/co-Büchi conditions to
    /// parity colours.
    pub fn into_parity(self) -> Result<ParityTreeAutomaton> {
        match self.acceptance {
            Acceptance::Parity(colours) => ParityTreeAutomaton::new(self.shell, colours),
            Acceptance::Buchi(f) => Ok(buchi_to_parity(&BuchiSpec::new(self.shell, f)?)),
            Acceptance::CoBuchi(f) => Ok(cobuchi_to_parity(&CoBuchiSpec::new(self.shell, f)?)),
        }
    }
}

/// Parses an automaton file without requiring completeness.
pub fn parse_automaton_spec(text: &str) -> Result<ParsedAutomaton> {
    let lines = lines(text)?;
    let mut symbols: Vec<String> = Vec::new();
    let mut state_toks: Vec<(Token<'_>, Option<Token<'_>>)> = Vec::new();
    let mut initial: Option<Token<'_>> = None;
    let mut trans_lines: Vec<&Line<'_>> = Vec::new();
    let mut final_toks: Option<Vec<Token<'_>>> = None;
    let mut forbidden_toks: Option<Vec<Token<'_>>> = None;

    for line in &lines {
        match line.key.text {
            "alphabet" => symbols.extend(line.values.iter().map(|t| t.text.to_string())),
            "states" => {
                for &t in &line.values {
                    if t.text.contains(':') {
                        let (n, c) = split_pair(t, "name:colour")?;
                        state_toks.push((n, Some(c)));
                    } else {
                        state_toks.push((t, None));
                    }
                }
            }
            "initial" => {
                expect_count(line, 1, "state")?;
                if initial.is_some() {
                    return Err(syntax(line.key.line, line.key.column, "repeated `initial:`"));
                }
                initial = Some(line.values[0]);
            }
            "trans" => {
                expect_count(line, 4, "state symbol state state")?;
                trans_lines.push(line);
            }
            "final" => final_toks.get_or_insert_with(Vec::new).extend(&line.values),
            "forbidden" => forbidden_toks.get_or_insert_with(Vec::new).extend(&line.values),
            other => {
                return Err(syntax(
                    line.key.line,
                    line.key.column,
                    format!("unknown key `{other}`"),
                ))
            }
        }
    }

    if symbols.is_empty() {
        return Err(Error::Missing("alphabet"));
    }
    if state_toks.is_empty() {
        return Err(Error::Missing("states"));
    }
    let initial = initial.ok_or(Error::Missing("initial state"))?;
    if final_toks.is_some() && forbidden_toks.is_some() {
        let t = forbidden_toks.as_ref().and_then(|v| v.first()).copied();
        return Err(syntax(
            t.map_or(0, |t| t.line),
            t.map_or(0, |t| t.column),
            "`final:` and `forbidden:` are mutually exclusive",
        ));
    }
    let coloured = final_toks.is_none() && forbidden_toks.is_none();
    let mut colours = Vec::with_capacity(state_toks.len());
    for &(n, c) in &state_toks {
        match (coloured, c) {
            (true, Some(c)) => {
                let v: u32 = c
                    .text
                    .parse()
                    .map_err(|_| syntax(c.line, c.column, "colour must be a non-negative integer"))?;
                colours.push(Colour(v));
            }
            (true, None) => return Err(syntax(n.line, n.column, "expected `name:colour`")),
            (false, Some(c)) => {
                return Err(syntax(
                    c.line,
                    c.column,
                    "Büchi and co-Büchi automata take no colours",
                ))
            }
            (false, None) => {}
        }
    }
    let states: Vec<String> = state_toks.iter().map(|(n, _)| n.text.to_string()).collect();
    let state_index: HashMap<&str, usize> =
        states.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let symbol_index: HashMap<&str, usize> =
        symbols.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let state = |t: Token<'_>| {
        state_index.get(t.text).copied().ok_or_else(|| Error::UnknownState {
            name: t.text.to_string(),
            line: t.line,
        })
    };

    let mut transitions = Vec::with_capacity(trans_lines.len());
    for line in trans_lines {
        let v = &line.values;
        let symbol = symbol_index
            .get(v[1].text)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol {
                name: v[1].text.to_string(),
                line: v[1].line,
            })?;
        transitions.push(Transition::new(state(v[0])?, symbol, state(v[2])?, state(v[3])?));
    }
    let initial = state(initial)?;
    let set = |toks: Vec<Token<'_>>| toks.into_iter().map(state).collect::<Result<BTreeSet<_>>>();
    let acceptance = match (final_toks, forbidden_toks) {
        (Some(f), _) => Acceptance::Buchi(set(f)?),
        (_, Some(f)) => Acceptance::CoBuchi(set(f)?),
        _ => Acceptance::Parity(colours),
    };
    let shell = AutomatonShell::new(symbols, states, initial, transitions)?;
    Ok(ParsedAutomaton { shell, acceptance })
}

/// Parses and validates a complete automaton.
pub fn parse_automaton(text: &str) -> Result<ParityTreeAutomaton> {
    parse_automaton_spec(text)?.into_parity()
}

/// Canonical text of an automaton, with every list in lexicographic order.
pub fn serialize_automaton(a: &ParityTreeAutomaton) -> String {
    let a = a.canonical();
    let mut out = String::new();
    let _ = writeln!(out, "alphabet: {}", a.symbols().join(" "));
    let states: Vec<String> = (0..a.num_states())
        .map(|q| format!("{}:{}", a.state_name(q), a.colour(q)))
        .collect();
    let _ = writeln!(out, "states: {}", states.join(" "));
    let _ = writeln!(out, "initial: {}", a.state_name(a.initial()));
    for t in a.transitions() {
        let _ = writeln!(
            out,
            "trans: {} {} {} {}",
            a.state_name(t.state),
            a.symbol_name(t.symbol),
            a.state_name(t.left),
            a.state_name(t.right)
        );
    }
    out
}

/// Parses a regular tree.
pub fn parse_tree(text: &str) -> Result<RegularTree> {
    let lines = lines(text)?;
    let mut nodes: Vec<(Token<'_>, Token<'_>)> = Vec::new();
    let mut root: Option<Token<'_>> = None;
    let mut edges: Vec<&Line<'_>> = Vec::new();
    for line in &lines {
        match line.key.text {
            "nodes" => {
                for &t in &line.values {
                    nodes.push(split_pair(t, "name:label")?);
                }
            }
            "root" => {
                expect_count(line, 1, "node")?;
                if root.is_some() {
                    return Err(syntax(line.key.line, line.key.column, "repeated `root:`"));
                }
                root = Some(line.values[0]);
            }
            "edges" => {
                expect_count(line, 3, "node succ0 succ1")?;
                edges.push(line);
            }
            other => {
                return Err(syntax(
                    line.key.line,
                    line.key.column,
                    format!("unknown key `{other}`"),
                ))
            }
        }
    }
    if nodes.is_empty() {
        return Err(Error::Missing("nodes"));
    }
    let root = root.ok_or(Error::Missing("root"))?;
    let names: Vec<String> = nodes.iter().map(|(n, _)| n.text.to_string()).collect();
    let labels: Vec<String> = nodes.iter().map(|(_, l)| l.text.to_string()).collect();
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, (n, _)) in nodes.iter().enumerate() {
        if index.insert(n.text, i).is_some() {
            return Err(Error::Duplicate {
                kind: "node",
                name: n.text.to_string(),
            });
        }
    }
    let node = |t: Token<'_>| {
        index.get(t.text).copied().ok_or_else(|| Error::UnknownNode {
            name: t.text.to_string(),
            line: t.line,
        })
    };
    let mut succ: Vec<Option<[usize; 2]>> = vec![None; names.len()];
    for line in edges {
        let v = &line.values;
        let n = node(v[0])?;
        if succ[n].is_some() {
            return Err(Error::Duplicate {
                kind: "edges line for node",
                name: v[0].text.to_string(),
            });
        }
        succ[n] = Some([node(v[1])?, node(v[2])?]);
    }
    let succ = succ
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| Error::MissingEdges(names[i].clone())))
        .collect::<Result<Vec<_>>>()?;
    let root = node(root)?;
    RegularTree::new(names, labels, succ, root)
}

/// Canonical text of a tree, with nodes in lexicographic order.
pub fn serialize_tree(t: &RegularTree) -> String {
    let t = t.canonical();
    let mut out = String::new();
    let nodes: Vec<String> = (0..t.num_nodes())
        .map(|n| format!("{}:{}", t.name(n), t.label(n)))
        .collect();
    let _ = writeln!(out, "nodes: {}", nodes.join(" "));
    let _ = writeln!(out, "root: {}", t.name(t.root()));
    for n in 0..t.num_nodes() {
        let _ = writeln!(
            out,
            "edges: {} {} {}",
            t.name(n),
            t.name(t.succ(n, 0)),
            t.name(t.succ(n, 1))
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const AR: &str = "\
alphabet: a b
states: p:2 f:1   # f is forbidden
initial: p
trans: p a p p
trans: p b f f
trans: f a p p
trans: f b f f
";

    #[test]
    fn parses_smallest_automaton() {
        let a = parse_automaton("alphabet: a\nstates: q0:0\ninitial: q0\ntrans: q0 a q0 q0\n").unwrap();
        assert_eq!(a.num_states(), 1);
        assert_eq!(a.distinct_colours().len(), 1);
    }

    #[test]
    fn parses_ar() {
        let a = parse_automaton(AR).unwrap();
        assert_eq!(a.num_states(), 2);
        assert!(a.is_deterministic());
        assert_eq!(a.colour(a.shell().state_id("f").unwrap()), Colour(1));
    }

    #[test]
    fn reports_missing_transition() {
        let err = parse_automaton("alphabet: a b\nstates: q0:0\ninitial: q0\ntrans: q0 a q0 q0\n")
            .unwrap_err();
        assert_eq!(
            err,
            Error::Incomplete {
                state: "q0".into(),
                symbol: "b".into()
            }
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_automaton("alphabet: a\nstates: q0:x\ninitial: q0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 2,
                column: 12,
                message: "colour must be a non-negative integer".into()
            }
        );
        let err = parse_automaton("alphabet a\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, column: 1, .. }));
        let err = parse_automaton("alphabet: a\nstates: q:0\ninitial: q\ntrans: q a q\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 4, .. }));
    }

    #[test]
    fn unknown_references() {
        let err = parse_automaton("alphabet: a\nstates: q:0\ninitial: q\ntrans: q a q r\n").unwrap_err();
        assert_eq!(
            err,
            Error::UnknownState {
                name: "r".into(),
                line: 4
            }
        );
        let err = parse_automaton("alphabet: a\nstates: q:0\ninitial: q\ntrans: q c q q\n").unwrap_err();
        assert!(matches!(err, Error::UnknownSymbol { .. }));
    }

    #[test]
    fn cobuchi_variant_gives_ar() {
        let text = AR.replace("p:2 f:1", "p f").replace("# f is forbidden", "") + "forbidden: f\n";
        assert_eq!(parse_automaton(&text).unwrap(), parse_automaton(AR).unwrap());
    }

    #[test]
    fn buchi_variant() {
        let text = "alphabet: a b\nstates: w g\ninitial: w\nfinal: g\n\
                    trans: w a w w\ntrans: w b g g\ntrans: g a w w\ntrans: g b g g\n";
        let a = parse_automaton(text).unwrap();
        assert_eq!(a.colours(), &[Colour(1), Colour(0)]);
    }

    #[test]
    fn automaton_round_trip() {
        let a = parse_automaton(AR).unwrap();
        let text = serialize_automaton(&a);
        assert_eq!(parse_automaton(&text).unwrap(), a.canonical());
        assert_eq!(serialize_automaton(&parse_automaton(&text).unwrap()), text);
    }

    #[test]
    fn tree_round_trip_and_errors() {
        let text = "nodes: Na:a Nb:b\nroot: Na\nedges: Na Nb Na\nedges: Nb Nb Na\n";
        let t = parse_tree(text).unwrap();
        assert_eq!(t.num_nodes(), 2);
        assert_eq!(serialize_tree(&t), text);
        assert_eq!(parse_tree(&serialize_tree(&t)).unwrap(), t.canonical());

        let err = parse_tree("nodes: Na:a\nroot: Na\nedges: Na Nx Na\n").unwrap_err();
        assert_eq!(
            err,
            Error::UnknownNode {
                name: "Nx".into(),
                line: 3
            }
        );
        assert_eq!(
            parse_tree("nodes: Na:a\nedges: Na Na Na\n").unwrap_err(),
            Error::Missing("root")
        );
        assert_eq!(
            parse_tree("nodes: Na:a Nb:a\nroot: Na\nedges: Na Na Na\n").unwrap_err(),
            Error::MissingEdges("Nb".into())
        );
    }
}
