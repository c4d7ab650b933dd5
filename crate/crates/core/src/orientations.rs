//! Acyclic, semicompatible and compatible orientations, and the bijection
//! between semicompatible orientations and chambers of the arrangement.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::network::NetworkInstance;

/// A direction for every edge. `forward[e]` means edge `(a, b)` (with `a < b`
/// in vertex order) is directed `a → b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn from_forward(forward: Vec<bool>) -> Self {
        Orientation { forward }
    }

    /// Builds an orientation from `(tail, head)` label pairs covering every
    /// edge exactly once.
    pub fn from_arcs<S: AsRef<str>>(graph: &Graph, arcs: &[(S, S)]) -> Result<Self> {
        let mut forward = vec![None; graph.edge_count()];
        for (t, h) in arcs {
            let (t, h) = (t.as_ref(), h.as_ref());
            let ti = graph
                .index_of(t)
                .ok_or_else(|| Error::UnknownVertex(t.to_string()))?;
            let hi = graph
                .index_of(h)
                .ok_or_else(|| Error::UnknownVertex(h.to_string()))?;
            let e = graph
                .edge_index(ti, hi)
                .ok_or(Error::OrientationMismatch)?;
            if forward[e].replace(ti < hi).is_some() {
                return Err(Error::OrientationMismatch);
            }
        }
        forward
            .into_iter()
            .collect::<Option<Vec<bool>>>()
            .map(Orientation::from_forward)
            .ok_or(Error::OrientationMismatch)
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, graph: &Graph, e: usize) -> (usize, usize) {
        let (a, b) = graph.edges()[e];
        if self.forward[e] {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// The orientation with edge `e` reversed.
    pub fn flipped(&self, e: usize) -> Orientation {
        let mut forward = self.forward.clone();
        forward[e] = !forward[e];
        Orientation { forward }
    }

    /// Edge key → `"tail>head"`.
    pub fn to_key_map(&self, graph: &Graph) -> BTreeMap<String, String> {
        (0..graph.edge_count())
            .map(|e| {
                let (t, h) = self.arc(graph, e);
                (
                    graph.edge_key(e),
                    format!("{}>{}", graph.label(t), graph.label(h)),
                )
            })
            .collect()
    }

    /// Compact key, one character per edge (`>` forward, `<` backward).
    pub fn signature(&self) -> String {
        self.forward
            .iter()
            .map(|&f| if f { '>' } else { '<' })
            .collect()
    }

    fn out_lists(&self, graph: &Graph) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); graph.vertex_count()];
        for e in 0..graph.edge_count() {
            let (t, h) = self.arc(graph, e);
            out[t].push(h);
        }
        out
    }
}

/// Finest class an orientation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrientationClass {
    NotAcyclic,
    Acyclic,
    Semicompatible,
    Compatible,
}

/// Which class [`enumerate_class`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassMode {
    Semicompatible,
    Compatible,
}

fn reaches(out: &[Vec<usize>], from: usize, to: usize) -> bool {
    let mut seen = vec![false; out.len()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(v) = stack.pop() {
        if v == to {
            return true;
        }
        for &w in &out[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

fn check_edge_cap(graph: &Graph, limits: &Limits) -> Result<()> {
    Limits::check(
        "orientation enumeration (edges)",
        graph.edge_count() as u128,
        limits.max_orientation_edges as u128,
    )
}

/// All acyclic orientations, sorted.
///
/// Edges are directed one at a time; a partial assignment is abandoned as soon
/// as it closes a directed cycle. Large instances fan out over the directions
/// of the first few edges in parallel.
pub fn enumerate_acyclic(graph: &Graph, limits: &Limits) -> Result<Vec<Orientation>> {
    check_edge_cap(graph, limits)?;
    let k = graph.edge_count();
    let split = if k >= 12 { 4 } else { 0 };
    let prefixes: Vec<Vec<bool>> = (0..1u32 << split)
        .map(|bitsv| (0..split).map(|i| bitsv >> (split - 1 - i) & 1 == 1).collect())
        .collect();
    let mut all: Vec<Orientation> = prefixes
        .into_par_iter()
        .flat_map_iter(|prefix| extend_acyclic(graph, prefix))
        .collect();
    all.sort();
    Ok(all)
}

fn extend_acyclic(graph: &Graph, prefix: Vec<bool>) -> Vec<Orientation> {
    let mut out = vec![Vec::new(); graph.vertex_count()];
    let mut chosen = Vec::with_capacity(graph.edge_count());
    for (e, &f) in prefix.iter().enumerate() {
        let (a, b) = graph.edges()[e];
        let (t, h) = if f { (a, b) } else { (b, a) };
        if reaches(&out, h, t) {
            return Vec::new();
        }
        out[t].push(h);
        chosen.push(f);
    }
    let mut result = Vec::new();
    fn go(
        graph: &Graph,
        out: &mut Vec<Vec<usize>>,
        chosen: &mut Vec<bool>,
        result: &mut Vec<Orientation>,
    ) {
        let e = chosen.len();
        if e == graph.edge_count() {
            result.push(Orientation::from_forward(chosen.clone()));
            return;
        }
        let (a, b) = graph.edges()[e];
        for f in [false, true] {
            let (t, h) = if f { (a, b) } else { (b, a) };
            if reaches(out, h, t) {
                continue;
            }
            out[t].push(h);
            chosen.push(f);
            go(graph, out, chosen, result);
            chosen.pop();
            out[t].pop();
        }
    }
    go(graph, &mut out, &mut chosen, &mut result);
    result
}

fn is_acyclic(graph: &Graph, out: &[Vec<usize>]) -> bool {
    let mut indegree = vec![0usize; graph.vertex_count()];
    for list in out {
        for &h in list {
            indegree[h] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..graph.vertex_count())
        .filter(|&v| indegree[v] == 0)
        .collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &w in &out[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                stack.push(w);
            }
        }
    }
    seen == graph.vertex_count()
}

/// Classifies `o` as not acyclic, acyclic, semicompatible (acyclic and every
/// directed path between boundary nodes goes from higher to lower value) or
/// compatible (additionally no interior sink or source).
pub fn classify(net: &NetworkInstance, o: &Orientation) -> Result<OrientationClass> {
    let g = net.graph();
    if o.len() != g.edge_count() {
        return Err(Error::OrientationMismatch);
    }
    let out = o.out_lists(g);
    if !is_acyclic(g, &out) {
        return Ok(OrientationClass::NotAcyclic);
    }
    for (pa, &a) in net.boundary().iter().enumerate() {
        for (pb, &b) in net.boundary().iter().enumerate() {
            if pa != pb
                && reaches(&out, a, b)
                && net.boundary_values()[pa] <= net.boundary_values()[pb]
            {
                return Ok(OrientationClass::Acyclic);
            }
        }
    }
    let mut indegree = vec![0usize; g.vertex_count()];
    for list in &out {
        for &h in list {
            indegree[h] += 1;
        }
    }
    let compatible = net
        .interior()
        .iter()
        .all(|&i| indegree[i] > 0 && !out[i].is_empty());
    Ok(if compatible {
        OrientationClass::Compatible
    } else {
        OrientationClass::Semicompatible
    })
}

/// Acyclic orientations filtered by [`classify`].
pub fn enumerate_class(
    net: &NetworkInstance,
    mode: ClassMode,
    limits: &Limits,
) -> Result<Vec<Orientation>> {
    let acyclic = enumerate_acyclic(net.graph(), limits)?;
    let wanted = |c: OrientationClass| match mode {
        ClassMode::Semicompatible => c >= OrientationClass::Semicompatible,
        ClassMode::Compatible => c == OrientationClass::Compatible,
    };
    let mut kept = Vec::new();
    for o in acyclic {
        if wanted(classify(net, &o)?) {
            kept.push(o);
        }
    }
    Ok(kept)
}

/// Exact interior coordinates, in interior order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InteriorPoint {
    pub coordinates: Vec<BigRational>,
}

/// Orders `nodes` consistently with `below` (node → nodes strictly below it)
/// and the pinned values, then assigns values: pinned nodes keep theirs, free
/// nodes between two pinned values are spread evenly, free nodes below the
/// lowest (above the highest) pinned value step down (up) by one.
///
/// Ties are broken by `tie` (smallest first). Returns `None` on a cycle.
fn assign_values(
    below: &[Vec<usize>],
    pinned: &[Option<BigRational>],
    tie: &[usize],
) -> Option<Vec<BigRational>> {
    let count = below.len();
    let mut below: Vec<Vec<usize>> = below.to_vec();
    let mut pinned_nodes: Vec<usize> = (0..count).filter(|&v| pinned[v].is_some()).collect();
    pinned_nodes.sort_by(|&a, &b| pinned[a].cmp(&pinned[b]));
    for w in pinned_nodes.windows(2) {
        below[w[1]].push(w[0]);
    }
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); count];
    let mut pending: Vec<usize> = vec![0; count];
    for (v, list) in below.iter().enumerate() {
        for &w in list {
            above[w].push(v);
            pending[v] += 1;
        }
    }
    let mut ready: BTreeSet<(usize, usize)> = (0..count)
        .filter(|&v| pending[v] == 0)
        .map(|v| (tie[v], v))
        .collect();
    let mut sequence = Vec::with_capacity(count);
    while let Some((t, v)) = ready.iter().next().copied() {
        ready.remove(&(t, v));
        sequence.push(v);
        for &w in &above[v] {
            pending[w] -= 1;
            if pending[w] == 0 {
                ready.insert((tie[w], w));
            }
        }
    }
    if sequence.len() != count {
        return None;
    }

    let anchors: Vec<usize> = (0..count).filter(|&p| pinned[sequence[p]].is_some()).collect();
    let mut values = vec![BigRational::default(); count];
    let Some((&first, &last)) = anchors.first().zip(anchors.last()) else {
        for (p, &v) in sequence.iter().enumerate() {
            values[v] = BigRational::from_integer(BigInt::from(p));
        }
        return Some(values);
    };
    let value_at = |p: usize| pinned[sequence[p]].clone().unwrap_or_default();
    for p in 0..first {
        values[sequence[p]] = value_at(first) - BigRational::from_integer(BigInt::from(first - p));
    }
    for p in last + 1..count {
        values[sequence[p]] = value_at(last) + BigRational::from_integer(BigInt::from(p - last));
    }
    for w in anchors.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let (a, b) = (value_at(lo), value_at(hi));
        let gaps = BigRational::from_integer(BigInt::from(hi - lo));
        for p in lo + 1..hi {
            let k = BigRational::from_integer(BigInt::from(p - lo));
            values[sequence[p]] = &a + (&b - &a) * k / &gaps;
        }
    }
    for &p in &anchors {
        values[sequence[p]] = value_at(p);
    }
    Some(values)
}

/// A rational point in the chamber of a semicompatible orientation.
pub fn chamber_point(net: &NetworkInstance, o: &Orientation) -> Result<InteriorPoint> {
    if classify(net, o)? < OrientationClass::Semicompatible {
        return Err(Error::NotSemicompatible);
    }
    let g = net.graph();
    let mut below = vec![Vec::new(); g.vertex_count()];
    for e in 0..g.edge_count() {
        let (t, h) = o.arc(g, e);
        below[t].push(h);
    }
    let pinned: Vec<Option<BigRational>> = (0..g.vertex_count())
        .map(|v| net.boundary_value(v).cloned())
        .collect();
    let tie: Vec<usize> = (0..g.vertex_count()).collect();
    let values = assign_values(&below, &pinned, &tie).ok_or(Error::NotSemicompatible)?;
    let point = InteriorPoint {
        coordinates: net.interior().iter().map(|&i| values[i].clone()).collect(),
    };
    if orientation_of_point(net, &point)? != *o {
        return Err(Error::Internal("chamber point has the wrong orientation".into()));
    }
    Ok(point)
}

/// Directs edge `{i, j}` as `i → j` when `x_i > x_j`, for a full vertex
/// vector.
pub(crate) fn orientation_from_values<T: PartialOrd>(graph: &Graph, values: &[T]) -> Result<Orientation> {
    let mut forward = Vec::with_capacity(graph.edge_count());
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        match values[a].partial_cmp(&values[b]) {
            Some(std::cmp::Ordering::Greater) => forward.push(true),
            Some(std::cmp::Ordering::Less) => forward.push(false),
            _ => return Err(Error::OnHyperplane(graph.edge_key(e))),
        }
    }
    Ok(Orientation::from_forward(forward))
}

/// The orientation of the chamber containing `y`.
pub fn orientation_of_point(net: &NetworkInstance, y: &InteriorPoint) -> Result<Orientation> {
    if y.coordinates.len() != net.n() {
        return Err(Error::DimensionMismatch {
            expected: net.n(),
            got: y.coordinates.len(),
        });
    }
    let full = net.extend(&y.coordinates, |u| u.clone());
    orientation_from_values(net.graph(), &full)
}

/// Bounded chambers and the pairs of them that share a facet.
#[derive(Debug, Clone)]
pub struct ChamberAdjacency {
    /// Compatible orientations, sorted; vertex `i` of the adjacency graph.
    pub orientations: Vec<Orientation>,
    /// `(i, j, e)`: chambers `i < j` share a facet on the hyperplane of edge `e`.
    pub edges: Vec<(usize, usize, usize)>,
    /// A point in the relative interior of each shared facet, as a full
    /// vertex vector.
    pub witnesses: Vec<Vec<BigRational>>,
}

impl ChamberAdjacency {
    pub fn is_connected(&self) -> bool {
        let count = self.orientations.len();
        if count == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..count).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        let mut components = count;
        for &(a, b, _) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                components -= 1;
            }
        }
        components == 1
    }
}

/// Facet adjacency among bounded chambers.
///
/// Two compatible orientations differing on exactly one edge `e = {a, b}` are
/// adjacent when some point has `x_a = x_b` and strictly satisfies every other
/// sign constraint. Such a point exists exactly when the orientation induced on
/// the graph with `a` and `b` merged is consistent with the boundary order; the
/// point is then built exactly and checked.
pub fn chamber_adjacency_graph(net: &NetworkInstance, limits: &Limits) -> Result<ChamberAdjacency> {
    Limits::check(
        "chamber adjacency (interior vertices)",
        net.n() as u128,
        limits.max_adjacency_interior as u128,
    )?;
    let orientations = enumerate_class(net, ClassMode::Compatible, limits)?;
    let position: HashMap<&Orientation, usize> =
        orientations.iter().enumerate().map(|(i, o)| (o, i)).collect();
    let mut edges = Vec::new();
    let mut witnesses = Vec::new();
    for (i, o) in orientations.iter().enumerate() {
        for e in 0..o.len() {
            let Some(&j) = position.get(&o.flipped(e)) else {
                continue;
            };
            if j <= i {
                continue;
            }
            if let Some(w) = facet_witness(net, o, e)? {
                edges.push((i, j, e));
                witnesses.push(w);
            }
        }
    }
    Ok(ChamberAdjacency {
        orientations,
        edges,
        witnesses,
    })
}

fn facet_witness(net: &NetworkInstance, o: &Orientation, e: usize) -> Result<Option<Vec<BigRational>>> {
    let g = net.graph();
    let (a, b) = g.edges()[e];
    // node of each vertex after merging b into a
    let node = |v: usize| -> usize {
        let v = if v == b { a } else { v };
        if v > b {
            v - 1
        } else {
            v
        }
    };
    let count = g.vertex_count() - 1;
    let mut below = vec![Vec::new(); count];
    for f in 0..g.edge_count() {
        if f == e {
            continue;
        }
        let (t, h) = o.arc(g, f);
        let (t, h) = (node(t), node(h));
        if t == h {
            return Ok(None);
        }
        below[t].push(h);
    }
    let mut pinned = vec![None; count];
    let mut tie = vec![usize::MAX; count];
    for v in 0..g.vertex_count() {
        if let Some(u) = net.boundary_value(v) {
            pinned[node(v)] = Some(u.clone());
        }
        tie[node(v)] = tie[node(v)].min(v);
    }
    let Some(values) = assign_values(&below, &pinned, &tie) else {
        return Ok(None);
    };
    let full: Vec<BigRational> = (0..g.vertex_count()).map(|v| values[node(v)].clone()).collect();
    for f in 0..g.edge_count() {
        let (t, h) = o.arc(g, f);
        let ok = if f == e {
            full[t] == full[h]
        } else {
            full[t] > full[h]
        };
        if !ok {
            return Err(Error::Internal("facet witness violates a sign constraint".into()));
        }
    }
    Ok(Some(full))
}
