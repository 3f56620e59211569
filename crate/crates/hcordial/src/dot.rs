//! DOT rendering. Positive labels draw bold, negative ones thin; vertices are
//! annotated with their induced values.

use crate::graph::Graph;
use crate::labeling::Labeling;

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn labeling_to_dot(l: &Labeling) -> String {
    let induced = l.induced_vertex_labels();
    let mut out = String::from("graph labeling {\n  node [shape=circle];\n");
    for (v, value) in induced.iter().enumerate() {
        out.push_str(&format!("  {v} [label=\"{v} ({value:+})\"];\n"));
    }
    for (&(u, v), &label) in l.graph().edges().iter().zip(l.labels()) {
        let style = if label > 0 { ", style=bold, penwidth=2" } else { "" };
        out.push_str(&format!("  {u} -- {v} [label=\"{label:+}\"{style}];\n"));
    }
    out.push_str("}\n");
    out
}
