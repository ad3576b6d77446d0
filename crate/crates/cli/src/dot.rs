//! Graphviz rendering of `Q_n` with a deleted vertex set.

use std::fmt::Write;

use hypercut::{components_after_removal, Cube, Result, Vertex};

const PALETTE: [&str; 8] = [
    "#8dd3c7", "#fdb462", "#bebada", "#fb8072", "#80b1d3", "#b3de69", "#fccde5", "#ffffb3",
];

/// DOT text for `Q_n`: removed vertices are dashed grey boxes, and each
/// component of the rest gets its own fill colour.
pub fn render(n: u32, removed: &[Vertex]) -> Result<String> {
    let cube = Cube::new(n)?;
    let report = components_after_removal(n, removed)?;
    let mut gone = vec![false; cube.vertex_count()];
    for v in removed {
        gone[v.0 as usize] = true;
    }
    // component index of each surviving vertex, by smallest member
    let mut comp = vec![usize::MAX; cube.vertex_count()];
    let mut next = 0;
    for v in cube.vertices() {
        if gone[v.0 as usize] || comp[v.0 as usize] != usize::MAX {
            continue;
        }
        let mut stack = vec![v];
        comp[v.0 as usize] = next;
        while let Some(x) = stack.pop() {
            for y in cube.neighbors(x) {
                if !gone[y.0 as usize] && comp[y.0 as usize] == usize::MAX {
                    comp[y.0 as usize] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    debug_assert_eq!(next, report.component_count);

    let mut out = String::new();
    writeln!(out, "graph Q{n} {{").unwrap();
    writeln!(
        out,
        "  // {} removed, {} components: {:?}",
        removed.len(),
        report.component_count,
        report.component_sizes
    )
    .unwrap();
    writeln!(out, "  node [shape=circle, style=filled, fontname=\"monospace\"];").unwrap();
    for v in cube.vertices() {
        let label = v.render(n);
        if gone[v.0 as usize] {
            writeln!(out, "  \"{label}\" [shape=box, style=\"dashed,filled\", fillcolor=\"#d9d9d9\"];").unwrap();
        } else {
            let color = PALETTE[comp[v.0 as usize] % PALETTE.len()];
            writeln!(out, "  \"{label}\" [fillcolor=\"{color}\", group={}];", comp[v.0 as usize]).unwrap();
        }
    }
    for (u, v) in cube.edges() {
        let style = if gone[u.0 as usize] || gone[v.0 as usize] {
            " [style=dotted, color=\"#bdbdbd\"]"
        } else {
            ""
        };
        writeln!(out, "  \"{}\" -- \"{}\"{style};", u.render(n), v.render(n)).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
