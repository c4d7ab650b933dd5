//! Chordality of `ĝ`, which decides supersolvability (and freeness) of the
//! Dirichlet arrangement, with elimination-ordering and chordless-cycle
//! witnesses.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::network::{closure_graph, to_psi_graphical, NetworkInstance, PsiAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingKind {
    Perfect,
    Weighted,
}

/// A vertex ordering in which each vertex is simplicial among its successors.
/// For [`OrderingKind::Weighted`], adjacent `i_r ~ i_s` with `r < s` also have
/// `ψ(i_r) ⊆ ψ(i_s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering {
    /// Vertex indices into the graph the ordering was computed for.
    pub order: Vec<usize>,
    pub kind: OrderingKind,
}

impl EliminationOrdering {
    pub fn labels(&self, graph: &Graph) -> Vec<String> {
        self.order.iter().map(|&v| graph.label(v).to_string()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal(EliminationOrdering),
    /// An induced cycle of length at least 4.
    NotChordal(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Maximum cardinality search; returns the elimination order (reverse of the
/// visit order). Ties go to `preferred` vertices, then to the smallest index.
fn maximum_cardinality_search(graph: &Graph, preferred: &[bool]) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| {
                weight[a]
                    .cmp(&weight[b])
                    .then(preferred[a].cmp(&preferred[b]))
                    .then(b.cmp(&a))
            })
            .expect("unnumbered vertex remains");
        numbered[v] = true;
        visit.push(v);
        for &w in graph.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// Each vertex's later neighbours are pairwise adjacent.
pub fn is_perfect_elimination_ordering(graph: &Graph, order: &[usize]) -> bool {
    let n = graph.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut position = vec![usize::MAX; n];
    for (p, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return false;
        }
        position[v] = p;
    }
    order.iter().enumerate().all(|(p, &v)| {
        let later: Vec<usize> = graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > p)
            .collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| graph.has_edge(a, b)))
    })
}

/// Whether `cycle` is an induced (chordless) cycle of length at least 4.
pub fn is_induced_cycle(graph: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 4 {
        return false;
    }
    let mut seen = vec![false; graph.vertex_count()];
    for &v in cycle {
        if v >= graph.vertex_count() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..len).all(|i| {
        (i + 1..len).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            graph.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Some chordless cycle of length at least 4, if the graph has one.
///
/// For each vertex `v` and pair of non-adjacent neighbours `x, y`, a shortest
/// `x`–`y` path avoiding the rest of `N[v]` closes an induced cycle through
/// `v`; every chordless cycle yields such a triple.
pub fn find_chordless_cycle(graph: &Graph) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    for v in 0..n {
        let nbrs = graph.neighbors(v);
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if graph.has_edge(x, y) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in nbrs {
                    if w != x && w != y {
                        blocked[w] = true;
                    }
                }
                if let Some(path) = shortest_path(graph, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(graph: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; graph.vertex_count()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in graph.neighbors(u) {
            if !blocked[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

fn chordality_with(graph: &Graph, preferred: &[bool]) -> Chordality {
    let order = maximum_cardinality_search(graph, preferred);
    if is_perfect_elimination_ordering(graph, &order) {
        return Chordality::Chordal(EliminationOrdering {
            order,
            kind: OrderingKind::Perfect,
        });
    }
    match find_chordless_cycle(graph) {
        Some(cycle) => Chordality::NotChordal(cycle),
        // MCS orders every chordal graph perfectly
        None => unreachable!("MCS failed on a graph without chordless cycles"),
    }
}

/// A perfect elimination ordering found by maximum cardinality search, or a
/// chordless cycle.
pub fn perfect_elimination_ordering(graph: &Graph) -> Chordality {
    chordality_with(graph, &vec![false; graph.vertex_count()])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersolvabilityReport {
    pub supersolvable: bool,
    /// Freeness coincides with supersolvability for these arrangements.
    pub free: bool,
    /// Witness on `ĝ`; a perfect ordering ends with the boundary nodes.
    pub witness: Chordality,
}

/// Supersolvable (and free) exactly when `ĝ` is chordal.
pub fn is_supersolvable(net: &NetworkInstance) -> SupersolvabilityReport {
    let closure = closure_graph(net);
    let mut preferred = vec![false; closure.vertex_count()];
    for &b in net.boundary() {
        preferred[b] = true;
    }
    // boundary nodes win ties, so MCS visits the clique B first and the
    // elimination order ends with it
    let witness = chordality_with(&closure, &preferred);
    let chordal = witness.is_chordal();
    SupersolvabilityReport {
        supersolvable: chordal,
        free: chordal,
        witness,
    }
}

/// Checks the weighted elimination property on a ψ-graphical assignment.
pub fn is_weighted_elimination_ordering(pa: &PsiAssignment, order: &[usize]) -> bool {
    if !is_perfect_elimination_ordering(&pa.graph, order) {
        return false;
    }
    let mut position = vec![0; order.len()];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    pa.graph.edges().iter().all(|&(a, b)| {
        let (first, second) = if position[a] < position[b] { (a, b) } else { (b, a) };
        pa.psi[first].is_subset(&pa.psi[second])
    })
}

/// A weighted elimination ordering of the interior graph with its ψ sets,
/// taken as the first `n` vertices of a perfect ordering of `ĝ` that ends with
/// the boundary; `None` when `ĝ` is not chordal.
///
/// Indices refer to `to_psi_graphical(net).graph`.
pub fn weighted_elimination_ordering(net: &NetworkInstance) -> Option<EliminationOrdering> {
    let report = is_supersolvable(net);
    let Chordality::Chordal(peo) = report.witness else {
        return None;
    };
    let tail_is_boundary = peo.order[net.n()..].iter().all(|&v| net.is_boundary(v));
    if !tail_is_boundary {
        return None;
    }
    // interior vertices keep their relative order in the induced subgraph
    let order: Vec<usize> = peo.order[..net.n()]
        .iter()
        .map(|&v| net.interior_position(v).expect("interior vertex"))
        .collect();
    let pa = to_psi_graphical(net);
    debug_assert!(is_weighted_elimination_ordering(&pa, &order));
    Some(EliminationOrdering {
        order,
        kind: OrderingKind::Weighted,
    })
}
