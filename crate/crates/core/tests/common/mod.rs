#![allow(dead_code)]

use std::collections::BTreeSet;

use homcycle::{CyclicHom, LatticeCover, LatticePoint, SimpleGraph};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

/// Connected graphs with `min_n..=max_n` vertices and at most `max_edges`
/// edges, one per isomorphism class.
pub fn connected_corpus(min_n: usize, max_n: usize, max_edges: usize) -> Vec<SimpleGraph> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let mut seen = BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            if mask.count_ones() as usize > max_edges {
                continue;
            }
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = SimpleGraph::new(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let canonical = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<_> = edges
                        .iter()
                        .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                        .collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .unwrap();
            if seen.insert(canonical) {
                out.push(g);
            }
        }
    }
    out
}

/// The acceptance corpus: connected, 2..=6 vertices, at most 9 edges.
pub fn desk_corpus() -> Vec<SimpleGraph> {
    connected_corpus(2, 6, 9)
}

/// The 11-vertex example graph with its C_5 labelling: an outer 9-cycle,
/// two vertical chords and a middle rung.
pub fn pentagon_graph() -> (SimpleGraph, CyclicHom) {
    let edges = [
        (0, 1),
        (1, 4),
        (4, 7),
        (7, 9),
        (9, 10),
        (10, 8),
        (8, 5),
        (5, 2),
        (2, 0),
        (2, 3),
        (3, 4),
        (5, 6),
        (6, 7),
        (3, 6),
    ];
    let g = SimpleGraph::new(11, &edges).unwrap();
    let f = CyclicHom::new(&g, 5, &[1, 0, 2, 3, 4, 3, 2, 3, 4, 4, 0]).unwrap();
    (g, f)
}

/// Random walk of `steps` unit moves from the origin; stays in `E_f`.
pub fn random_walk<R: Rng>(
    cover: &LatticeCover<'_>,
    steps: usize,
    max_norm: Option<u64>,
    rng: &mut R,
) -> LatticePoint {
    let mut a = LatticePoint::zero(cover.graph().vertex_count());
    for _ in 0..steps {
        let options: Vec<_> = cover
            .neighbors(&a)
            .unwrap()
            .into_iter()
            .filter(|b| max_norm.is_none_or(|m| b.norm() <= m))
            .collect();
        match options.choose(rng) {
            Some(b) => a = b.clone(),
            None => break,
        }
    }
    a
}

/// A point of `D_f` drawn by rejection from the box `[-r, r]^n`, if one is
/// found within a bounded number of tries.
pub fn random_box_point<R: Rng>(
    cover: &LatticeCover<'_>,
    r: i64,
    rng: &mut R,
) -> Option<LatticePoint> {
    let n = cover.graph().vertex_count();
    (0..200).find_map(|_| {
        let a = LatticePoint((0..n).map(|_| rng.gen_range(-r..=r)).collect());
        cover.in_d(&a).then_some(a)
    })
}

/// A point of `D_f`: half the time a walk in the origin component, half the
/// time a box sample that may lie in another component.
pub fn random_d_point<R: Rng>(cover: &LatticeCover<'_>, rng: &mut R) -> LatticePoint {
    if rng.gen_bool(0.5) {
        if let Some(a) = random_box_point(cover, 3, rng) {
            return a;
        }
    }
    let steps = rng.gen_range(0..=16);
    random_walk(cover, steps, None, rng)
}

/// Checks the local covering properties of `p_f` at `a`, returning a
/// description of the first violation.
pub fn check_covering_at(
    cover: &LatticeCover<'_>,
    skeleton: &homcycle::HomSkeleton,
    a: &LatticePoint,
) -> Result<(), String> {
    use homcycle::{in_d, orient, project};

    let graph = cover.graph();
    let f = cover.base();
    let k = f.k();
    let h = cover
        .project(a)
        .map_err(|e| format!("project failed at {a}: {e}"))?;

    // arc formula
    for &(u, v) in cover.orientation().arcs() {
        let diff = (h.values()[v] + k - h.values()[u]) % k;
        let expected = if a.coords()[u] == a.coords()[v] {
            1
        } else {
            k - 1
        };
        if diff != expected {
            return Err(format!("arc formula fails on ({u},{v}) at {a}"));
        }
    }

    // moves agree with sources / sinks of the projected orientation
    let moves = cover.lattice_moves(a).unwrap();
    let projected = orient(graph, &h);
    if moves.up != projected.digraph().sources() || moves.down != projected.digraph().sinks() {
        return Err(format!("moves {moves:?} differ from sources/sinks at {a}"));
    }
    if moves.up.iter().any(|u| moves.down.contains(u)) {
        return Err(format!("a vertex is both up and down at {a}"));
    }

    // unique edge lifting
    let hi = skeleton
        .index_of(&h)
        .ok_or_else(|| format!("projection {h} not a hom"))?;
    let lifts: Vec<(LatticePoint, homcycle::CyclicHom)> = cover
        .neighbors(a)
        .unwrap()
        .into_iter()
        .map(|b| {
            let hb = cover.project(&b).unwrap();
            (b, hb)
        })
        .collect();
    for &j in skeleton.neighbors(hi) {
        let target = &skeleton.homs()[j];
        let count = lifts.iter().filter(|(_, hb)| hb == target).count();
        if count != 1 {
            return Err(format!("{count} lifts of edge {h} -> {target} at {a}"));
        }
    }
    if lifts.len() != skeleton.neighbors(hi).len() {
        return Err(format!("neighbour count mismatch at {a}"));
    }

    // negation transports back to f
    let (g, c) = cover.negate_transport(a).unwrap();
    if !in_d(graph, &g, &c) || project(graph, &g, &c).ok().as_ref() != Some(f) {
        return Err(format!("negate_transport does not round-trip at {a}"));
    }

    // directed-cycle vertex sets coincide
    if projected.digraph().vertices_on_directed_cycles()
        != cover.orientation().digraph().vertices_on_directed_cycles()
    {
        return Err(format!("directed cycles differ at {a}"));
    }
    Ok(())
}
