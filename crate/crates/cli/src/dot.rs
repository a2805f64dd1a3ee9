//! Graphviz output. Node order and attribute order are fixed so repeated
//! runs produce identical text.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write;

use homcycle::{orient, CyclicHom, Error, HomSkeleton, LatticeCover, LatticePoint, SimpleGraph};

const PALETTE: [&str; 8] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// The 1-skeleton of the Hom complex, one colour per component.
pub fn skeleton_dot(skeleton: &HomSkeleton) -> String {
    let mut colour = vec![0; skeleton.len()];
    for (c, component) in skeleton.components().iter().enumerate() {
        for &i in component {
            colour[i] = c;
        }
    }
    let mut out = String::from("graph skeleton {\n  node [shape=plaintext];\n");
    for (i, f) in skeleton.homs().iter().enumerate() {
        let _ = writeln!(
            out,
            "  h{i} [label={}, fontcolor={}];",
            quote(&f.label()),
            quote(PALETTE[colour[i] % PALETTE.len()])
        );
    }
    for &(i, j) in skeleton.edges() {
        let _ = writeln!(out, "  h{i} -- h{j};");
    }
    out.push_str("}\n");
    out
}

/// The orientation induced by `f`; vertices on directed cycles are drawn
/// with a double border.
pub fn orientation_dot(graph: &SimpleGraph, labels: &[String], f: &CyclicHom) -> String {
    let orientation = orient(graph, f);
    let frozen = orientation.digraph().vertices_on_directed_cycles();
    let mut out = String::from("digraph orientation {\n");
    for (v, label) in labels.iter().enumerate() {
        let shape = if frozen.contains(&v) {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(
            out,
            "  v{v} [label={}, shape={shape}];",
            quote(&format!("{label}\n{}", f.values()[v]))
        );
    }
    for &(u, v) in orientation.arcs() {
        let _ = writeln!(out, "  v{u} -> v{v};");
    }
    out.push_str("}\n");
    out
}

/// The points of `E_f` with norm at most `limit`, joined by lattice edges
/// and labelled by coordinates and projection. At most `cap` points.
pub fn cover_dot(cover: &LatticeCover<'_>, limit: u64, cap: usize) -> Result<String, Error> {
    let origin = LatticePoint::zero(cover.graph().vertex_count());
    // Norm descent stays inside the ball, so a search from the origin
    // restricted to the ball reaches all of it.
    let mut points = BTreeSet::from([origin.clone()]);
    let mut queue = VecDeque::from([origin]);
    while let Some(a) = queue.pop_front() {
        for b in cover.neighbors(&a)? {
            if b.norm() <= limit && !points.contains(&b) {
                if points.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                points.insert(b.clone());
                queue.push_back(b);
            }
        }
    }
    let points: Vec<LatticePoint> = points.into_iter().collect();
    let mut out = String::from("graph cover {\n  node [shape=plaintext];\n");
    for (i, a) in points.iter().enumerate() {
        let h = cover.project(a)?;
        let _ = writeln!(
            out,
            "  p{i} [label={}];",
            quote(&format!("{a}\n{}", h.label()))
        );
    }
    let mut edges = Vec::new();
    for (i, a) in points.iter().enumerate() {
        for b in cover.neighbors(a)? {
            if let Ok(j) = points.binary_search(&b) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    for (i, j) in edges {
        let _ = writeln!(out, "  p{i} -- p{j};");
    }
    out.push_str("}\n");
    Ok(out)
}
