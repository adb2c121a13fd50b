//! DOT emission for Hasse diagrams with deterministic node naming.

/// Renders a Hasse diagram as a DOT digraph. Nodes are given by their
/// canonical names; edges are cover relations oriented bottom to top.
/// Both lists are sorted so the output is byte-identical across runs.
pub fn hasse_dot(name: &str, nodes: &[String], covers: &[(String, String)]) -> String {
    let mut nodes: Vec<&String> = nodes.iter().collect();
    nodes.sort();
    let mut covers: Vec<&(String, String)> = covers.iter().collect();
    covers.sort();
    let mut out = String::new();
    out.push_str(&format!("digraph \"{name}\" {{\n"));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");
    for n in nodes {
        out.push_str(&format!("  \"{n}\";\n"));
    }
    for (a, b) in covers {
        out.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

/// Covers of a finite poset given by a `le` predicate over an element list.
pub fn covers_from_le<T, F>(elems: &[T], le: F) -> Vec<(usize, usize)>
where
    F: Fn(&T, &T) -> bool,
{
    let n = elems.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !le(&elems[i], &elems[j]) || le(&elems[j], &elems[i]) {
                continue;
            }
            let direct = !(0..n).any(|k| {
                k != i
                    && k != j
                    && le(&elems[i], &elems[k])
                    && le(&elems[k], &elems[j])
                    && !le(&elems[k], &elems[i])
                    && !le(&elems[j], &elems[k])
            });
            if direct {
                out.push((i, j));
            }
        }
    }
    out
}
