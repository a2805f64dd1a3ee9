//! Lattice model of a Hom-complex component.
//!
//! A homomorphism `f: G -> C_k` orients every edge of `G` towards the
//! endpoint whose value is one larger. Integer points `a` satisfying
//! `a_v <= a_u <= a_v + 1` on every arc `(u, v)` form a cube complex whose
//! origin component covers the component of `f`, via
//! `a |-> (u |-> f(u) + 2 a_u)`. The covering is a quotient by the diagonal
//! shift of period `k'`, and vertices on directed cycles never move.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::cyclic::{build_hom_skeleton_capped, check_k, residue_diff, validate_hom, CyclicHom};
use crate::error::{Error, Result};
use crate::graph::{Digraph, SimpleGraph, VertexId};
use crate::homology::BettiPair;

/// The orientation `G_f`: arc `(u, v)` for each edge with `f(v) - f(u) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    digraph: Digraph,
}

impl Orientation {
    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        self.digraph.arcs()
    }

    pub fn has_directed_cycle(&self) -> bool {
        self.digraph.has_directed_cycle()
    }
}

pub fn orient(graph: &SimpleGraph, f: &CyclicHom) -> Orientation {
    let k = f.k();
    let arcs: Vec<_> = graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            if residue_diff(k, f.values()[u], f.values()[v]) == 1 {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    let digraph = Digraph::new(graph.vertex_count(), &arcs).expect("orientation of a simple graph");
    Orientation { digraph }
}

/// Period of the deck group: `k` for odd `k`, `k / 2` for even `k`.
pub fn k_prime(k: u32) -> Result<u32> {
    check_k(k)?;
    match k {
        4 => Err(Error::BadK(4)),
        k if k % 2 == 1 => Ok(k),
        k => Ok(k / 2),
    }
}

/// A point of `Z^V(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `sum |a_v|`.
    pub fn norm(&self) -> u64 {
        self.0.iter().map(|x| x.unsigned_abs()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `self + delta * e_u`.
    pub fn stepped(&self, u: VertexId, delta: i64) -> Self {
        let mut coords = self.0.clone();
        coords[u] += delta;
        Self(coords)
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }

    /// `self + shift * (1, ..., 1)`.
    pub fn diagonal_shift(&self, shift: i64) -> Self {
        Self(self.0.iter().map(|x| x + shift).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

fn arc_ok(tail: i64, head: i64) -> bool {
    head <= tail && tail <= head + 1
}

/// Membership in `D_f`: `a_v <= a_u <= a_v + 1` on every arc `(u, v)`.
pub fn in_d(graph: &SimpleGraph, f: &CyclicHom, a: &LatticePoint) -> bool {
    a.0.len() == graph.vertex_count()
        && orient(graph, f)
            .arcs()
            .iter()
            .all(|&(u, v)| arc_ok(a.0[u], a.0[v]))
}

/// `u |-> f(u) + 2 a_u`.
pub fn project(graph: &SimpleGraph, f: &CyclicHom, a: &LatticePoint) -> Result<CyclicHom> {
    if !in_d(graph, f, a) {
        return Err(Error::NotInD);
    }
    Ok(project_unchecked(f, a))
}

fn project_unchecked(f: &CyclicHom, a: &LatticePoint) -> CyclicHom {
    let k = i64::from(f.k());
    let values = f
        .values()
        .iter()
        .zip(&a.0)
        .map(|(&x, &c)| (i64::from(x) + 2 * c).rem_euclid(k) as u32)
        .collect();
    CyclicHom::from_residues_unchecked(f.k(), values)
}

/// Vertices on directed cycles of `G_f`; their values are constant on the
/// whole component of `f`.
pub fn frozen_vertices(graph: &SimpleGraph, f: &CyclicHom) -> Vec<VertexId> {
    orient(graph, f).digraph().vertices_on_directed_cycles()
}

/// Unit moves available at a lattice point: `up` holds the `u` with
/// `a + e_u` in `D_f`, `down` those with `a - e_u` in `D_f`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LatticeMoves {
    pub up: Vec<VertexId>,
    pub down: Vec<VertexId>,
}

/// Deduplicated class of `a` under `a ~ a + m k' (1, ..., 1)`. The stored
/// representative has its vertex-0 coordinate in `[0, k')`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientClass {
    representative: LatticePoint,
    k_prime: u32,
}

impl QuotientClass {
    pub fn new(point: &LatticePoint, k_prime: u32) -> Self {
        let period = i64::from(k_prime);
        let base = point.0.first().copied().unwrap_or(0);
        let shift = -base.div_euclid(period) * period;
        Self {
            representative: point.diagonal_shift(shift),
            k_prime,
        }
    }

    pub fn representative(&self) -> &LatticePoint {
        &self.representative
    }

    pub fn k_prime(&self) -> u32 {
        self.k_prime
    }

    pub fn contains(&self, point: &LatticePoint) -> bool {
        QuotientClass::new(point, self.k_prime) == *self
    }
}

/// The lattice cover attached to a base homomorphism `f` of a connected
/// graph with at least two vertices, for `k != 4`.
#[derive(Debug, Clone)]
pub struct LatticeCover<'g> {
    graph: &'g SimpleGraph,
    base: CyclicHom,
    orientation: Orientation,
    frozen: Vec<bool>,
    k_prime: u32,
}

impl<'g> LatticeCover<'g> {
    pub fn new(graph: &'g SimpleGraph, f: &CyclicHom) -> Result<Self> {
        let k_prime = k_prime(f.k())?;
        if graph.vertex_count() < 2 || !graph.is_connected() {
            return Err(Error::NeedsConnectedGraph);
        }
        if f.len() != graph.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: graph.vertex_count(),
                got: f.len(),
            });
        }
        let orientation = orient(graph, f);
        let mut frozen = vec![false; graph.vertex_count()];
        for v in orientation.digraph().vertices_on_directed_cycles() {
            frozen[v] = true;
        }
        Ok(Self {
            graph,
            base: f.clone(),
            orientation,
            frozen,
            k_prime,
        })
    }

    pub fn graph(&self) -> &SimpleGraph {
        self.graph
    }

    pub fn base(&self) -> &CyclicHom {
        &self.base
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn k_prime(&self) -> u32 {
        self.k_prime
    }

    pub fn frozen_vertices(&self) -> Vec<VertexId> {
        (0..self.frozen.len()).filter(|&v| self.frozen[v]).collect()
    }

    pub fn in_d(&self, a: &LatticePoint) -> bool {
        a.0.len() == self.graph.vertex_count()
            && self
                .orientation
                .arcs()
                .iter()
                .all(|&(u, v)| arc_ok(a.0[u], a.0[v]))
    }

    pub fn in_e(&self, a: &LatticePoint) -> bool {
        self.in_d(a)
            && a.0
                .iter()
                .zip(&self.frozen)
                .all(|(&x, &frozen)| !frozen || x == 0)
    }

    pub fn project(&self, a: &LatticePoint) -> Result<CyclicHom> {
        if !self.in_d(a) {
            return Err(Error::NotInD);
        }
        Ok(project_unchecked(&self.base, a))
    }

    /// Whether changing only `a_u` to `value` keeps the inequalities on
    /// the arcs at `u`, assuming `a` itself lies in `D_f`.
    fn locally_admissible(&self, a: &LatticePoint, u: VertexId, value: i64) -> bool {
        let digraph = self.orientation.digraph();
        digraph
            .out_neighbors(u)
            .iter()
            .all(|&v| arc_ok(value, a.0[v]))
            && digraph
                .in_neighbors(u)
                .iter()
                .all(|&w| arc_ok(a.0[w], value))
    }

    pub fn lattice_moves(&self, a: &LatticePoint) -> Result<LatticeMoves> {
        if !self.in_d(a) {
            return Err(Error::NotInD);
        }
        let mut moves = LatticeMoves::default();
        for u in 0..self.graph.vertex_count() {
            if self.locally_admissible(a, u, a.0[u] + 1) {
                moves.up.push(u);
            }
            if self.locally_admissible(a, u, a.0[u] - 1) {
                moves.down.push(u);
            }
        }
        Ok(moves)
    }

    /// Neighbours of `a` in the 1-skeleton of `D_f`, in the order
    /// `a + e_u` for `u` in `up`, then `a - e_u` for `u` in `down`.
    pub fn neighbors(&self, a: &LatticePoint) -> Result<Vec<LatticePoint>> {
        let moves = self.lattice_moves(a)?;
        Ok(moves
            .up
            .iter()
            .map(|&u| a.stepped(u, 1))
            .chain(moves.down.iter().map(|&u| a.stepped(u, -1)))
            .collect())
    }

    /// Transports `b` to the base `g = p_f(b)`: returns `(g, -b)`, where
    /// `-b` lies in `D_g` and projects back to `f`.
    pub fn negate_transport(&self, b: &LatticePoint) -> Result<(CyclicHom, LatticePoint)> {
        let g = self.project(b)?;
        Ok((g, b.negated()))
    }

    /// Breadth-first search over quotient classes of the origin component,
    /// moving from canonical representatives only. Returns every class in
    /// discovery order with its projection; the projections are exactly the
    /// homomorphisms in the component of `f`.
    pub fn enumerate_cover_quotient(&self) -> Vec<(QuotientClass, CyclicHom)> {
        let origin =
            QuotientClass::new(&LatticePoint::zero(self.graph.vertex_count()), self.k_prime);
        let mut seen: HashSet<QuotientClass> = HashSet::new();
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        seen.insert(origin.clone());
        queue.push_back(origin);
        while let Some(class) = queue.pop_front() {
            let rep = class.representative();
            let neighbors = self.neighbors(rep).expect("representatives stay in D_f");
            out.push((class.clone(), project_unchecked(&self.base, rep)));
            for b in neighbors {
                let next = QuotientClass::new(&b, self.k_prime);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out
    }

    /// A path from `a` to the origin inside `E_f` whose norm drops by one at
    /// each step. While some coordinate is positive, the smallest positive
    /// vertex that is a sink of the projected orientation steps down;
    /// otherwise the smallest negative source steps up.
    pub fn descend_to_origin(&self, a: &LatticePoint) -> Result<Vec<LatticePoint>> {
        if !self.in_e(a) {
            return Err(Error::NotInE);
        }
        let mut path = vec![a.clone()];
        let mut current = a.clone();
        while !current.is_zero() {
            let digraph = orient(self.graph, &project_unchecked(&self.base, &current));
            let digraph = digraph.digraph();
            let coords = current.coords();
            let step = if coords.iter().any(|&x| x > 0) {
                (0..coords.len())
                    .find(|&u| coords[u] > 0 && digraph.is_sink(u))
                    .map(|u| (u, -1))
            } else {
                (0..coords.len())
                    .find(|&u| coords[u] < 0 && digraph.is_source(u))
                    .map(|u| (u, 1))
            };
            let (u, delta) =
                step.expect("every nonzero point of E_f has a norm-decreasing neighbour");
            current = current.stepped(u, delta);
            path.push(current.clone());
        }
        Ok(path)
    }
}

/// Homotopy type of one component of `Hom(G, C_k)` for connected `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomotopyType {
    Point,
    Circle,
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomotopyType::Point => "point",
            HomotopyType::Circle => "circle",
        })
    }
}

/// Number of circle factors: a component for arbitrary `G` is homotopy
/// equivalent to a torus `(S^1)^d`, where `d = 0` is a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusDim(pub usize);

impl From<HomotopyType> for TorusDim {
    fn from(t: HomotopyType) -> Self {
        match t {
            HomotopyType::Point => TorusDim(0),
            HomotopyType::Circle => TorusDim(1),
        }
    }
}

impl fmt::Display for TorusDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("point"),
            1 => f.write_str("circle"),
            d => write!(f, "torus T^{d}"),
        }
    }
}

/// Homotopy type of the component of `f` for connected `G`: a point when
/// `G` has at most one vertex, when `k = 4`, or when `G_f` has a directed
/// cycle; a circle otherwise.
pub fn classify_component(graph: &SimpleGraph, f: &CyclicHom) -> Result<HomotopyType> {
    check_k(f.k())?;
    if !graph.is_connected() {
        return Err(Error::NeedsConnectedGraph);
    }
    if graph.vertex_count() <= 1 || f.k() == 4 {
        return Ok(HomotopyType::Point);
    }
    Ok(if orient(graph, f).has_directed_cycle() {
        HomotopyType::Point
    } else {
        HomotopyType::Circle
    })
}

/// Classification for arbitrary `G`: the component is the product of the
/// components of the restrictions to each connected component of `G`.
pub fn classify_full(graph: &SimpleGraph, f: &CyclicHom) -> Result<TorusDim> {
    let mut circles = 0;
    for part in graph.connected_components() {
        let sub = graph.induced_subgraph(&part);
        if classify_component(&sub, &f.restrict(&part))? == HomotopyType::Circle {
            circles += 1;
        }
    }
    Ok(TorusDim(circles))
}

/// Classification record for one component of `Hom(G, C_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub representative: CyclicHom,
    pub homotopy_type: TorusDim,
    /// Vertices on directed cycles of `G_f`; `None` for `k = 4`, where the
    /// lattice model does not apply.
    pub frozen: Option<Vec<VertexId>>,
    pub size: usize,
    pub k_prime: Option<u32>,
    pub betti: Option<BettiPair>,
}

impl ComponentReport {
    /// Point requires `b1 = 0` and circle `b1 = 1`; always true without
    /// Betti numbers. Higher tori are not checked by the 2-skeleton oracle.
    pub fn is_consistent(&self) -> bool {
        match (self.homotopy_type.0, self.betti) {
            (_, None) => true,
            (0, Some(b)) => b.b1 == 0,
            (1, Some(b)) => b.b1 == 1,
            (_, Some(_)) => true,
        }
    }
}

fn frozen_for(graph: &SimpleGraph, f: &CyclicHom) -> Option<Vec<VertexId>> {
    (f.k() != 4).then(|| frozen_vertices(graph, f))
}

/// Report for the component of `f`. The size comes from the lattice cover
/// when it applies (connected `G`, two or more vertices, `k != 4`), so no
/// global enumeration is needed; otherwise from a skeleton search bounded
/// by `cap` homomorphisms.
pub fn report_component(graph: &SimpleGraph, f: &CyclicHom, cap: usize) -> Result<ComponentReport> {
    validate_hom(graph, f.k(), f.values())?;
    let homotopy_type = classify_full(graph, f)?;
    let k_prime = k_prime(f.k()).ok();
    let size = match LatticeCover::new(graph, f) {
        Ok(cover) => cover.enumerate_cover_quotient().len(),
        Err(_) => {
            let skeleton = build_hom_skeleton_capped(graph, f.k(), cap)?;
            let index = skeleton
                .index_of(f)
                .expect("validated homomorphisms are enumerated");
            skeleton.component_of(index).len()
        }
    };
    Ok(ComponentReport {
        representative: f.clone(),
        homotopy_type,
        frozen: frozen_for(graph, f),
        size,
        k_prime,
        betti: None,
    })
}

/// Reports for every component of `Hom(G, C_k)`, ordered by smallest hom;
/// each representative is the smallest hom of its component.
pub fn report_all_components(
    graph: &SimpleGraph,
    k: u32,
    cap: usize,
) -> Result<Vec<ComponentReport>> {
    let skeleton = build_hom_skeleton_capped(graph, k, cap)?;
    let k_prime = k_prime(k).ok();
    skeleton
        .components()
        .into_iter()
        .map(|component| {
            let f = &skeleton.homs()[component[0]];
            Ok(ComponentReport {
                representative: f.clone(),
                homotopy_type: classify_full(graph, f)?,
                frozen: frozen_for(graph, f),
                size: component.len(),
                k_prime,
                betti: None,
            })
        })
        .collect()
}
