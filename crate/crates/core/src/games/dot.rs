use std::fmt::Write as _;

use crate::colour::Player;
use crate::games::ParityGame;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz text for an arena: Eloise vertices are circles, Abelard
/// vertices boxes, and each label shows the colour. `label` may add a
/// description per vertex; the start vertex is drawn with a double border.
pub fn game_to_dot(g: &ParityGame, label: impl Fn(usize) -> Option<String>) -> String {
    let mut out = String::from("digraph arena {\n  node [fontname=\"monospace\"];\n");
    for v in 0..g.num_vertices() {
        let shape = match g.owner(v) {
            Player::Eloise => "circle",
            Player::Abelard => "box",
        };
        let text = match label(v) {
            Some(l) => format!("{}\\n{}", escape(&l), g.colour(v)),
            None => g.colour(v).to_string(),
        };
        let peripheries = if v == g.start() { 2 } else { 1 };
        let _ = writeln!(out, "  v{v} [shape={shape}, peripheries={peripheries}, label=\"{text}\"];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  v{u} -> v{v};");
    }
    out.push_str("}\n");
    out
}
