//! Homomorphisms `G -> C_k` and the 1-skeleton of `Hom(G, C_k)`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};

/// Default bound on the number of homomorphisms an enumeration may produce.
pub const DEFAULT_HOM_CAP: usize = 1_000_000;

/// An element of `Z/kZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicValue {
    modulus: u32,
    residue: u32,
}

impl CyclicValue {
    pub fn new(modulus: u32, value: i64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Self {
            modulus,
            residue: value.rem_euclid(i64::from(modulus)) as u32,
        }
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn residue(self) -> u32 {
        self.residue
    }

    pub fn shifted(self, by: i64) -> Self {
        Self::new(self.modulus, i64::from(self.residue) + by)
    }

    /// `other - self` as a residue in `[0, k)`.
    pub fn difference_to(self, other: Self) -> u32 {
        debug_assert_eq!(self.modulus, other.modulus);
        (other.residue + self.modulus - self.residue) % self.modulus
    }

    /// Adjacency in `C_k`: the values differ by `+1` or `-1`.
    pub fn is_adjacent(self, other: Self) -> bool {
        let d = self.difference_to(other);
        d == 1 || d == self.modulus - 1
    }
}

pub(crate) fn check_k(k: u32) -> Result<()> {
    if k < 3 {
        return Err(Error::BadK(k));
    }
    Ok(())
}

#[inline]
pub(crate) fn residue_diff(k: u32, from: u32, to: u32) -> u32 {
    (to + k - from) % k
}

#[inline]
fn cycle_adjacent(k: u32, x: u32, y: u32) -> bool {
    let d = residue_diff(k, x, y);
    d == 1 || d == k - 1
}

/// A map `V(G) -> Z/kZ` that has been checked to be a homomorphism into
/// the cycle `C_k`. Equality and ordering are on `(k, residues)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicHom {
    k: u32,
    values: Vec<u32>,
}

impl CyclicHom {
    /// Certifies `values` (reduced mod `k`) as a homomorphism `graph -> C_k`.
    pub fn new(graph: &SimpleGraph, k: u32, values: &[i64]) -> Result<Self> {
        check_k(k)?;
        let reduced: Vec<u32> = values
            .iter()
            .map(|&x| x.rem_euclid(i64::from(k)) as u32)
            .collect();
        validate_hom(graph, k, &reduced)
    }

    pub(crate) fn from_residues_unchecked(k: u32, values: Vec<u32>) -> Self {
        Self { k, values }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, u: VertexId) -> CyclicValue {
        CyclicValue {
            modulus: self.k,
            residue: self.values[u],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Restriction to `vertices`, in the given order.
    pub fn restrict(&self, vertices: &[VertexId]) -> CyclicHom {
        Self {
            k: self.k,
            values: vertices.iter().map(|&v| self.values[v]).collect(),
        }
    }

    /// Human-readable label: concatenated residues (`"012"`) when `k <= 10`,
    /// comma-separated otherwise.
    pub fn label(&self) -> String {
        let parts = self.values.iter().map(u32::to_string);
        if self.k <= 10 {
            parts.collect()
        } else {
            parts.collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for CyclicHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Checks that `values` is a homomorphism; reports the first offending edge
/// in the graph's sorted edge order.
pub fn validate_hom(graph: &SimpleGraph, k: u32, values: &[u32]) -> Result<CyclicHom> {
    check_k(k)?;
    if values.len() != graph.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: graph.vertex_count(),
            got: values.len(),
        });
    }
    if let Some(&x) = values.iter().find(|&&x| x >= k) {
        // residues must already be reduced here
        return Err(Error::BadK(x));
    }
    for &(u, v) in graph.edges() {
        if !cycle_adjacent(k, values[u], values[v]) {
            return Err(Error::NotAHomomorphism(u, v));
        }
    }
    Ok(CyclicHom::from_residues_unchecked(k, values.to_vec()))
}

/// DFS preorder of each connected component (rooted at its smallest vertex),
/// with the DFS parent of every non-root vertex.
fn dfs_preorder(graph: &SimpleGraph) -> (Vec<VertexId>, Vec<Option<VertexId>>) {
    let n = graph.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        order.push(root);
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&v) = graph.neighbors(u).get(*next) {
                *next += 1;
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    order.push(v);
                    stack.push((v, 0));
                }
            } else {
                stack.pop();
            }
        }
    }
    (order, parent)
}

/// All homomorphisms `graph -> C_k`, sorted lexicographically, with the
/// default output cap.
pub fn enumerate_homs(graph: &SimpleGraph, k: u32) -> Result<Vec<CyclicHom>> {
    enumerate_homs_capped(graph, k, DEFAULT_HOM_CAP)
}

/// Backtracking enumeration over a DFS preorder. Roots try every residue;
/// every other vertex tries its parent's value `+-1`, pruned against the
/// neighbours assigned earlier.
pub fn enumerate_homs_capped(graph: &SimpleGraph, k: u32, cap: usize) -> Result<Vec<CyclicHom>> {
    check_k(k)?;
    let n = graph.vertex_count();
    let (order, parent) = dfs_preorder(graph);
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let earlier: Vec<Vec<VertexId>> = order
        .iter()
        .map(|&v| {
            graph
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| position[w] < position[v])
                .collect()
        })
        .collect();

    let mut values = vec![0u32; n];
    let mut out = Vec::new();
    if n == 0 {
        out.push(CyclicHom::from_residues_unchecked(k, Vec::new()));
        return Ok(out);
    }

    let candidates = |i: usize, values: &[u32]| -> Vec<u32> {
        let v = order[i];
        let base: Vec<u32> = match parent[v] {
            None => (0..k).collect(),
            Some(p) => {
                let mut c = vec![(values[p] + 1) % k, (values[p] + k - 1) % k];
                c.sort_unstable();
                c
            }
        };
        base.into_iter()
            .filter(|&x| earlier[i].iter().all(|&w| cycle_adjacent(k, values[w], x)))
            .collect()
    };

    let mut frames: Vec<(Vec<u32>, usize)> = vec![(candidates(0, &values), 0)];
    while !frames.is_empty() {
        let depth = frames.len() - 1;
        let (cands, cursor) = &mut frames[depth];
        if *cursor == cands.len() {
            frames.pop();
            continue;
        }
        values[order[depth]] = cands[*cursor];
        *cursor += 1;
        if depth + 1 == n {
            if out.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(CyclicHom::from_residues_unchecked(k, values.clone()));
        } else {
            let next = candidates(depth + 1, &values);
            frames.push((next, 0));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// True iff `f` and `g` differ at exactly one vertex.
pub fn hom_adjacent(f: &CyclicHom, g: &CyclicHom) -> bool {
    differing_vertex(f, g).is_some()
}

/// The unique vertex where `f` and `g` differ, if there is exactly one.
pub fn differing_vertex(f: &CyclicHom, g: &CyclicHom) -> Option<VertexId> {
    if f.k != g.k || f.values.len() != g.values.len() {
        return None;
    }
    let mut diff = f
        .values
        .iter()
        .zip(&g.values)
        .enumerate()
        .filter(|(_, (a, b))| a != b);
    let (u, _) = diff.next()?;
    diff.next().is_none().then_some(u)
}

/// Direction of a single-vertex change between adjacent homomorphisms when
/// `k != 4`: the value at the changed vertex moves by `+2` (all neighbours
/// sitting at `+1`) or by `-2` (all neighbours at `-1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeType {
    Positive,
    Negative,
}

impl EdgeType {
    pub fn sign(self) -> i64 {
        match self {
            EdgeType::Positive => 1,
            EdgeType::Negative => -1,
        }
    }
}

pub fn pair_type(graph: &SimpleGraph, f: &CyclicHom, g: &CyclicHom) -> Result<EdgeType> {
    let k = f.k;
    if k == 4 || graph.has_isolated_vertex() {
        return Err(Error::TypeUndefined);
    }
    let u = differing_vertex(f, g).ok_or(Error::NotAdjacent)?;
    let (fu, gu) = (f.values[u], g.values[u]);
    let clause = |step: u32, down: u32| {
        gu == (fu + step) % k
            && graph
                .neighbors(u)
                .iter()
                .all(|&v| f.values[v] == (fu + down) % k)
    };
    let positive = clause(2, 1);
    let negative = clause(k - 2, k - 1);
    match (positive, negative) {
        (true, false) => Ok(EdgeType::Positive),
        (false, true) => Ok(EdgeType::Negative),
        // only reachable when f, g are not homomorphisms of `graph`
        _ => Err(Error::TypeUndefined),
    }
}

/// Vertices and edges of `Hom(G, C_k)`: homomorphisms sorted
/// lexicographically, joined when they differ at exactly one vertex.
#[derive(Debug, Clone)]
pub struct HomSkeleton {
    k: u32,
    homs: Vec<CyclicHom>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl HomSkeleton {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn homs(&self) -> &[CyclicHom] {
        &self.homs
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    pub fn index_of(&self, hom: &CyclicHom) -> Option<usize> {
        self.homs.binary_search(hom).ok()
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    /// Connected components of the skeleton graph, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.homs.len()];
        let mut parts = Vec::new();
        for root in 0..self.homs.len() {
            if !seen[root] {
                seen[root] = true;
                parts.push(self.bfs_from(root, &mut seen));
            }
        }
        parts
    }

    /// The sorted component containing hom index `start`.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.homs.len()];
        seen[start] = true;
        self.bfs_from(start, &mut seen)
    }

    fn bfs_from(&self, start: usize, seen: &mut [bool]) -> Vec<usize> {
        let mut part = vec![start];
        let mut head = 0;
        while head < part.len() {
            let i = part[head];
            head += 1;
            for &j in &self.adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    part.push(j);
                }
            }
        }
        part.sort_unstable();
        part
    }
}

pub fn build_hom_skeleton(graph: &SimpleGraph, k: u32) -> Result<HomSkeleton> {
    build_hom_skeleton_capped(graph, k, DEFAULT_HOM_CAP)
}

pub fn build_hom_skeleton_capped(graph: &SimpleGraph, k: u32, cap: usize) -> Result<HomSkeleton> {
    let homs = enumerate_homs_capped(graph, k, cap)?;
    let index: HashMap<&[u32], usize> = homs
        .iter()
        .enumerate()
        .map(|(i, h)| (h.values(), i))
        .collect();
    let mut adjacency = vec![Vec::new(); homs.len()];
    let mut edges = Vec::new();
    let mut probe = Vec::new();
    for (i, h) in homs.iter().enumerate() {
        probe.clear();
        probe.extend_from_slice(h.values());
        for u in 0..graph.vertex_count() {
            let original = probe[u];
            for c in 0..k {
                if c == original {
                    continue;
                }
                probe[u] = c;
                if let Some(&j) = index.get(probe.as_slice()) {
                    adjacency[i].push(j);
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
            probe[u] = original;
        }
        adjacency[i].sort_unstable();
    }
    edges.sort_unstable();
    Ok(HomSkeleton {
        k,
        homs,
        edges,
        adjacency,
    })
}

/// Free-function form of [`HomSkeleton::components`].
pub fn skeleton_components(skeleton: &HomSkeleton) -> Vec<Vec<usize>> {
    skeleton.components()
}
