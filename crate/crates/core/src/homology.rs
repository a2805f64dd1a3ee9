//! Brute-force homology of a Hom-complex component from its 2-skeleton.
//!
//! Squares are read off the 1-skeleton as induced 4-cycles, which is valid
//! because the complex is flag and, without triangles, has no simplex
//! cells. `b0` and `b1` come from exact ranks of the boundary maps.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cover::{classify_component, HomotopyType};
use crate::cyclic::{build_hom_skeleton_capped, CyclicHom, HomSkeleton, DEFAULT_HOM_CAP};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const MAX_ORACLE_VERTICES: usize = 50_000;
pub const MAX_ORACLE_SQUARES: usize = 500_000;

/// Vertices, edges and square cells of one skeleton component, all in
/// terms of hom indices of the ambient [`HomSkeleton`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSkeleton {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
    squares: Vec<[usize; 4]>,
}

impl TwoSkeleton {
    /// Builds a complex directly from cells. Squares are canonicalized and
    /// deduplicated; no flagness check is made.
    pub fn from_cells(
        vertices: Vec<usize>,
        edges: Vec<(usize, usize)>,
        squares: Vec<[usize; 4]>,
    ) -> Self {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut squares: Vec<_> = squares.into_iter().map(canonical_square).collect();
        squares.sort_unstable();
        squares.dedup();
        Self {
            vertices,
            edges,
            squares,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Squares `(v0, v1, v2, v3)` in traversal order, `v0` the smallest and
    /// `v1 < v3`.
    pub fn squares(&self) -> &[[usize; 4]] {
        &self.squares
    }

    fn edge_index(&self) -> HashMap<(usize, usize), usize> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect()
    }

    fn vertex_index(&self) -> HashMap<usize, usize> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect()
    }

    /// Columns of the edge boundary map: edge `(a, b)` with `a < b` maps
    /// to `b - a`.
    fn edge_boundaries(&self) -> Vec<Vec<(usize, i64)>> {
        let index = self.vertex_index();
        self.edges
            .iter()
            .map(|&(a, b)| {
                let (ia, ib) = (index[&a], index[&b]);
                let mut col = vec![(ia, -1), (ib, 1)];
                col.sort_unstable();
                col
            })
            .collect()
    }

    /// Columns of the square boundary map:
    /// `+[v0 v1] + [v1 v2] - [v3 v2] - [v0 v3]`, where `[x y]` is the edge
    /// oriented from the lower to the higher index, negated when `x > y`.
    fn square_boundaries(&self) -> Vec<Vec<(usize, i64)>> {
        let index = self.edge_index();
        let oriented = |x: usize, y: usize| -> (usize, i64) {
            let e = index[&(x.min(y), x.max(y))];
            (e, if x < y { 1 } else { -1 })
        };
        self.squares
            .iter()
            .map(|&[v0, v1, v2, v3]| {
                let terms = [
                    oriented(v0, v1),
                    oriented(v1, v2),
                    oriented(v3, v2),
                    oriented(v0, v3),
                ];
                let signs = [1, 1, -1, -1];
                let mut col: Vec<_> = terms
                    .iter()
                    .zip(signs)
                    .map(|(&(e, s), t)| (e, s * t))
                    .collect();
                col.sort_unstable();
                col
            })
            .collect()
    }

    /// `boundary_1 . boundary_2 = 0` over the integers.
    pub fn boundary_composition_vanishes(&self) -> bool {
        let edge_cols = self.edge_boundaries();
        self.square_boundaries().iter().all(|col| {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(e, c) in col {
                for &(v, d) in &edge_cols[e] {
                    *acc.entry(v).or_default() += c * d;
                }
            }
            acc.values().all(|&x| x == 0)
        })
    }

    /// Number of squares having `vertex` as a corner.
    pub fn squares_at(&self, vertex: usize) -> usize {
        self.squares.iter().filter(|s| s.contains(&vertex)).count()
    }
}

/// Rotates/reflects a 4-cycle to start at its smallest vertex and continue
/// towards the smaller of that vertex's two cycle neighbours.
fn canonical_square(s: [usize; 4]) -> [usize; 4] {
    let start = (0..4).min_by_key(|&i| s[i]).expect("four entries");
    let next = s[(start + 1) % 4];
    let prev = s[(start + 3) % 4];
    if next < prev {
        [s[start], next, s[(start + 2) % 4], prev]
    } else {
        [s[start], prev, s[(start + 2) % 4], next]
    }
}

fn sorted_intersects(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// The 2-skeleton of the skeleton component `component` (sorted hom
/// indices). Declines complexes containing triangles.
pub fn build_two_skeleton(skeleton: &HomSkeleton, component: &[usize]) -> Result<TwoSkeleton> {
    if component.len() > MAX_ORACLE_VERTICES {
        return Err(Error::CapExceeded {
            cap: MAX_ORACLE_VERTICES,
        });
    }
    let mut vertices = component.to_vec();
    vertices.sort_unstable();

    let mut edges = Vec::new();
    for &a in &vertices {
        for &b in skeleton.neighbors(a) {
            if a < b {
                if sorted_intersects(skeleton.neighbors(a), skeleton.neighbors(b)) {
                    return Err(Error::SimplexCellsPresent);
                }
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();

    // v0 is the smallest corner and v1 < v3, so each square is met once.
    let mut squares = Vec::new();
    for &v0 in &vertices {
        let around = skeleton.neighbors(v0);
        for (i, &v1) in around.iter().enumerate() {
            if v1 < v0 {
                continue;
            }
            for &v3 in &around[i + 1..] {
                if skeleton.are_adjacent(v1, v3) {
                    continue;
                }
                for &v2 in skeleton.neighbors(v1) {
                    if v2 <= v0 || !skeleton.are_adjacent(v2, v3) || skeleton.are_adjacent(v0, v2) {
                        continue;
                    }
                    squares.push([v0, v1, v2, v3]);
                    if squares.len() > MAX_ORACLE_SQUARES {
                        return Err(Error::CapExceeded {
                            cap: MAX_ORACLE_SQUARES,
                        });
                    }
                }
            }
        }
    }
    squares.sort_unstable();
    Ok(TwoSkeleton {
        vertices,
        edges,
        squares,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BettiPair {
    pub b0: usize,
    pub b1: usize,
}

pub fn betti(t: &TwoSkeleton) -> BettiPair {
    let rank1 = exact_rank(t.edge_boundaries());
    let rank2 = exact_rank(t.square_boundaries());
    BettiPair {
        b0: t.vertices.len() - rank1,
        b1: t.edges.len() - rank1 - rank2,
    }
}

type SparseRow = Vec<(usize, BigInt)>;

/// `a * x - b * y` on sorted sparse vectors, dropping zeros.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (col, val) = if take_x {
            i += 1;
            (x[i - 1].0, a * &x[i - 1].1)
        } else if take_y {
            j += 1;
            (y[j - 1].0, -(b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, a * &x[i - 1].1 - b * &y[j - 1].1)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

fn make_primitive(row: &mut SparseRow) {
    let content = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &content;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
}

/// Rank over the rationals of the matrix whose rows (or columns) are the
/// given sparse vectors. Fraction-free: every vector is reduced against the
/// stored pivot rows by integer cross-multiplication and kept primitive.
pub fn exact_rank(vectors: Vec<Vec<(usize, i64)>>) -> usize {
    let mut pivots: HashMap<usize, SparseRow> = HashMap::new();
    for v in vectors {
        let mut row: SparseRow = v
            .into_iter()
            .filter(|&(_, x)| x != 0)
            .map(|(c, x)| (c, BigInt::from(x)))
            .collect();
        row.sort_by_key(|&(c, _)| c);
        while let Some((lead_col, lead)) = row.first().cloned() {
            match pivots.get(&lead_col) {
                Some(pivot) => {
                    let p_lead = pivot[0].1.clone();
                    row = combine(&p_lead, &row, &lead, pivot);
                    make_primitive(&mut row);
                }
                None => {
                    make_primitive(&mut row);
                    pivots.insert(lead_col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Oracle outcome for one component of `Hom(G, C_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub representative: CyclicHom,
    pub size: usize,
    pub homotopy_type: HomotopyType,
    pub betti: BettiPair,
    pub pass: bool,
}

pub fn expected_betti(t: HomotopyType) -> BettiPair {
    match t {
        HomotopyType::Point => BettiPair { b0: 1, b1: 0 },
        HomotopyType::Circle => BettiPair { b0: 1, b1: 1 },
    }
}

/// Compares the directed-cycle classification of each component against its
/// Betti numbers. Requires a connected graph with at least two vertices.
pub fn verify_classification(graph: &SimpleGraph, k: u32) -> Result<Vec<ComponentVerdict>> {
    verify_classification_capped(graph, k, DEFAULT_HOM_CAP)
}

pub fn verify_classification_capped(
    graph: &SimpleGraph,
    k: u32,
    cap: usize,
) -> Result<Vec<ComponentVerdict>> {
    if graph.vertex_count() < 2 || !graph.is_connected() {
        return Err(Error::NeedsConnectedGraph);
    }
    let skeleton = build_hom_skeleton_capped(graph, k, cap)?;
    skeleton
        .components()
        .into_iter()
        .map(|component| {
            let representative = skeleton.homs()[component[0]].clone();
            let two = build_two_skeleton(&skeleton, &component)?;
            let betti = betti(&two);
            let homotopy_type = classify_component(graph, &representative)?;
            Ok(ComponentVerdict {
                representative,
                size: component.len(),
                homotopy_type,
                betti,
                pass: betti == expected_betti(homotopy_type),
            })
        })
        .collect()
}
