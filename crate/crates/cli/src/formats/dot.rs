//! DOT export of the bonded Hasse diagram: directed edges lower → upper,
//! each labelled with its bond.

use lsfan_core::StratPoset;

use super::json::EXTENDED_BOTTOM;

pub fn poset_to_dot(p: &StratPoset, extended: bool) -> String {
    let mut out = String::new();
    let lambda: Vec<String> =
        p.lambda().coords().iter().map(|c| c.to_string()).collect();
    out.push_str(&format!(
        "digraph \"{} lambda={} tau={}\" {{\n",
        p.cartan().label(),
        lambda.join(","),
        p.vertex(p.tau_index()).word_string()
    ));
    out.push_str("  rankdir=BT;\n  node [shape=box];\n");
    if extended {
        out.push_str(&format!("  \"{EXTENDED_BOTTOM}\";\n"));
    }
    for v in p.vertices() {
        out.push_str(&format!("  \"{}\";\n", v.word_string()));
    }
    if extended {
        out.push_str(&format!("  \"{EXTENDED_BOTTOM}\" -> \"id\" [label=\"b=1\"];\n"));
    }
    for e in p.edges() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"b={}\"];\n",
            p.vertex(e.lower).word_string(),
            p.vertex(e.upper).word_string(),
            e.bond
        ));
    }
    out.push_str("}\n");
    out
}
