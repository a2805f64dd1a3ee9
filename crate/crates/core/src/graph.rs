//! Finite simple graphs and digraphs on the dense vertex set `0..n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An undirected simple graph. Edges are stored as `(u, v)` with `u < v`,
/// sorted, together with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<VertexId>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut normalized = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !normalized.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        let edges: Vec<_> = normalized.into_iter().collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::new(n, &edges).expect("complete graph edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.iter().any(Vec::is_empty)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count];
        let mut parts = Vec::new();
        for root in 0..self.vertex_count {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut part = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        part.push(v);
                        stack.push(v);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    /// The subgraph induced on `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        SimpleGraph::new(vertices.len(), &edges).expect("induced edges are valid")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.vertex_count;
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        SimpleGraph::new(shift + other.vertex_count, &edges).expect("union edges are valid")
    }
}

/// A digraph without self-loops or repeated arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(VertexId, VertexId)>,
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        let arcs: Vec<_> = set.into_iter().collect();
        let mut out_adj = vec![Vec::new(); vertex_count];
        let mut in_adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in in_adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Self {
            vertex_count,
            arcs,
            out_adj,
            in_adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.out_adj[u]
    }

    pub fn in_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.in_adj[u]
    }

    pub fn is_source(&self, u: VertexId) -> bool {
        self.in_adj[u].is_empty()
    }

    pub fn is_sink(&self, u: VertexId) -> bool {
        self.out_adj[u].is_empty()
    }

    pub fn sources(&self) -> Vec<VertexId> {
        (0..self.vertex_count)
            .filter(|&u| self.is_source(u))
            .collect()
    }

    pub fn sinks(&self) -> Vec<VertexId> {
        (0..self.vertex_count)
            .filter(|&u| self.is_sink(u))
            .collect()
    }

    /// Iterative three-colour DFS; a back edge witnesses a directed cycle.
    pub fn has_directed_cycle(&self) -> bool {
        const WHITE: u8 = 0;
        const GREY: u8 = 1;
        const BLACK: u8 = 2;
        let mut colour = vec![WHITE; self.vertex_count];
        for root in 0..self.vertex_count {
            if colour[root] != WHITE {
                continue;
            }
            colour[root] = GREY;
            let mut stack = vec![(root, 0usize)];
            while let Some(&mut (u, ref mut next)) = stack.last_mut() {
                if let Some(&v) = self.out_adj[u].get(*next) {
                    *next += 1;
                    match colour[v] {
                        GREY => return true,
                        WHITE => {
                            colour[v] = GREY;
                            stack.push((v, 0));
                        }
                        _ => {}
                    }
                } else {
                    colour[u] = BLACK;
                    stack.pop();
                }
            }
        }
        false
    }

    /// Strongly connected components (Tarjan, iterative), in the order
    /// Tarjan emits them (reverse topological), each sorted.
    pub fn strongly_connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count;
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut scc_stack = Vec::new();
        let mut components = Vec::new();
        let mut counter = 0;

        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call_stack = vec![(root, 0usize)];
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            scc_stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (u, ref mut next)) = call_stack.last_mut() {
                if let Some(&v) = self.out_adj[u].get(*next) {
                    *next += 1;
                    if index[v] == usize::MAX {
                        index[v] = counter;
                        low[v] = counter;
                        counter += 1;
                        scc_stack.push(v);
                        on_stack[v] = true;
                        call_stack.push((v, 0));
                    } else if on_stack[v] {
                        low[u] = low[u].min(index[v]);
                    }
                } else {
                    call_stack.pop();
                    if let Some(&(parent, _)) = call_stack.last() {
                        low[parent] = low[parent].min(low[u]);
                    }
                    if low[u] == index[u] {
                        let mut component = Vec::new();
                        loop {
                            let w = scc_stack.pop().expect("tarjan stack underflow");
                            on_stack[w] = false;
                            component.push(w);
                            if w == u {
                                break;
                            }
                        }
                        component.sort_unstable();
                        components.push(component);
                    }
                }
            }
        }
        components
    }

    /// Vertices lying on at least one directed cycle, sorted. Since there are
    /// no self-loops these are exactly the members of non-trivial SCCs.
    pub fn vertices_on_directed_cycles(&self) -> Vec<VertexId> {
        let mut on_cycle: Vec<_> = self
            .strongly_connected_components()
            .into_iter()
            .filter(|c| c.len() > 1)
            .flatten()
            .collect();
        on_cycle.sort_unstable();
        on_cycle
    }
}
