//! Electrical-network instances `(g, B, u)` and the auxiliary graphs derived
//! from them.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Boundary(usize),
    Interior(usize),
}

/// A validated network: a connected graph, at least two boundary nodes forming
/// an independent set, and injective rational boundary values.
///
/// Boundary and interior vertices are both kept in lexicographic label order;
/// the interior order indexes every interior vector and reduced matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkInstance {
    graph: Graph,
    boundary: Vec<usize>,
    values: Vec<BigRational>,
    interior: Vec<usize>,
    roles: Vec<Role>,
}

impl NetworkInstance {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Boundary vertex indices, in label order.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    /// Boundary values aligned with [`NetworkInstance::boundary`].
    pub fn boundary_values(&self) -> &[BigRational] {
        &self.values
    }

    /// Interior vertex indices, in label order.
    pub fn interior(&self) -> &[usize] {
        &self.interior
    }

    /// Number of boundary nodes.
    pub fn m(&self) -> usize {
        self.boundary.len()
    }

    /// Number of interior vertices.
    pub fn n(&self) -> usize {
        self.interior.len()
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        matches!(self.roles[v], Role::Boundary(_))
    }

    pub fn boundary_value(&self, v: usize) -> Option<&BigRational> {
        match self.roles[v] {
            Role::Boundary(p) => Some(&self.values[p]),
            Role::Interior(_) => None,
        }
    }

    /// Position of `v` within the boundary order.
    pub fn boundary_position(&self, v: usize) -> Option<usize> {
        match self.roles[v] {
            Role::Boundary(p) => Some(p),
            Role::Interior(_) => None,
        }
    }

    /// Position of `v` within the interior order.
    pub fn interior_position(&self, v: usize) -> Option<usize> {
        match self.roles[v] {
            Role::Interior(p) => Some(p),
            Role::Boundary(_) => None,
        }
    }

    /// Extends interior coordinates by the boundary values, giving one value
    /// per vertex.
    pub fn extend<T: Clone>(&self, interior: &[T], boundary: impl Fn(&BigRational) -> T) -> Vec<T> {
        self.roles
            .iter()
            .map(|role| match *role {
                Role::Boundary(p) => boundary(&self.values[p]),
                Role::Interior(p) => interior[p].clone(),
            })
            .collect()
    }
}

/// Checks the network invariants and builds a [`NetworkInstance`].
///
/// `boundary` and `values` are parallel lists.
pub fn validate_network<S: AsRef<str>>(
    graph: Graph,
    boundary: &[S],
    values: &[BigRational],
) -> Result<NetworkInstance> {
    if boundary.len() != values.len() {
        return Err(Error::BoundaryLengthMismatch(boundary.len(), values.len()));
    }
    let mut pairs: Vec<(usize, BigRational)> = Vec::with_capacity(boundary.len());
    for (label, value) in boundary.iter().zip(values) {
        let label = label.as_ref();
        let v = graph
            .index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))?;
        if pairs.iter().any(|&(w, _)| w == v) {
            return Err(Error::DuplicateBoundary(label.to_string()));
        }
        pairs.push((v, value.clone()));
    }
    if pairs.len() < 2 {
        return Err(Error::TooFewBoundaryNodes(pairs.len()));
    }
    pairs.sort_by_key(|&(v, _)| v);
    for (i, (a, ua)) in pairs.iter().enumerate() {
        for (b, ub) in &pairs[i + 1..] {
            if graph.has_edge(*a, *b) {
                return Err(Error::BoundaryNotIndependent(
                    graph.label(*a).to_string(),
                    graph.label(*b).to_string(),
                ));
            }
            if ua == ub {
                return Err(Error::BoundaryValuesNotInjective(
                    graph.label(*a).to_string(),
                    graph.label(*b).to_string(),
                ));
            }
        }
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut roles = vec![Role::Interior(0); graph.vertex_count()];
    for (p, &(v, _)) in pairs.iter().enumerate() {
        roles[v] = Role::Boundary(p);
    }
    let mut interior = Vec::new();
    for (v, role) in roles.iter_mut().enumerate() {
        if let Role::Interior(p) = role {
            *p = interior.len();
            interior.push(v);
        }
    }
    let (boundary, values) = pairs.into_iter().unzip();
    Ok(NetworkInstance {
        graph,
        boundary,
        values,
        interior,
        roles,
    })
}

/// Repairs repeated boundary values and boundary-boundary edges, then
/// validates.
///
/// Boundary nodes sharing a value are identified into one vertex labelled by
/// their labels joined with `+`; parallel edges created by the identification
/// collapse, and every edge inside the boundary is deleted.
pub fn normalize_network<S: AsRef<str>>(
    graph: Graph,
    boundary: &[S],
    values: &[BigRational],
) -> Result<NetworkInstance> {
    if boundary.len() != values.len() {
        return Err(Error::BoundaryLengthMismatch(boundary.len(), values.len()));
    }
    let mut by_value: BTreeMap<&BigRational, Vec<usize>> = BTreeMap::new();
    let mut in_boundary = vec![false; graph.vertex_count()];
    for (label, value) in boundary.iter().zip(values) {
        let label = label.as_ref();
        let v = graph
            .index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))?;
        if in_boundary[v] {
            return Err(Error::DuplicateBoundary(label.to_string()));
        }
        in_boundary[v] = true;
        by_value.entry(value).or_default().push(v);
    }

    // old vertex -> new vertex
    let mut image = vec![usize::MAX; graph.vertex_count()];
    let mut labels = Vec::new();
    let mut new_boundary = Vec::new();
    let mut new_values = Vec::new();
    for (value, group) in &by_value {
        let label = group
            .iter()
            .map(|&v| graph.label(v))
            .collect::<Vec<_>>()
            .join("+");
        for &v in group {
            image[v] = labels.len();
        }
        new_boundary.push(label.clone());
        new_values.push((*value).clone());
        labels.push(label);
    }
    for v in 0..graph.vertex_count() {
        if image[v] == usize::MAX {
            image[v] = labels.len();
            labels.push(graph.label(v).to_string());
        }
    }
    if labels.iter().collect::<BTreeSet<_>>().len() != labels.len() {
        return Err(Error::InvalidLabel(
            "identified boundary label collides with an existing vertex".into(),
        ));
    }
    let boundary_count = by_value.len();
    let edges: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .map(|&(a, b)| (image[a], image[b]))
        .filter(|&(a, b)| a != b && !(a < boundary_count && b < boundary_count))
        .collect();
    let normalized = Graph::from_indexed(labels, &edges);
    if !normalized.is_connected() {
        return Err(Error::DisconnectedAfterNormalization);
    }
    validate_network(normalized, &new_boundary, &new_values)
}

/// `ĝ`: the graph with every pair of boundary nodes joined.
pub fn closure_graph(net: &NetworkInstance) -> Graph {
    let b = net.boundary();
    net.graph().with_edges(
        b.iter()
            .enumerate()
            .flat_map(|(i, &x)| b[i + 1..].iter().map(move |&y| (x, y))),
    )
}

/// Label used for the merged boundary vertex of [`identified_graph`].
pub fn identified_label(net: &NetworkInstance) -> String {
    let g = net.graph();
    let mut label = net
        .boundary()
        .iter()
        .map(|&v| g.label(v))
        .collect::<Vec<_>>()
        .join("+");
    while g.index_of(&label).is_some() {
        label.push('\'');
    }
    label
}

/// `ḡ`: all boundary nodes identified into one vertex. Parallel edges are
/// kept; each edge carries the key of its source edge in `g`.
pub fn identified_graph(net: &NetworkInstance) -> Multigraph {
    let g = net.graph();
    let merged = identified_label(net);
    let mut labels: Vec<String> = net
        .interior()
        .iter()
        .map(|&v| g.label(v).to_string())
        .collect();
    labels.push(merged.clone());
    labels.sort();
    let merged_index = labels.iter().position(|l| *l == merged).unwrap_or(0);
    let image = |v: usize| -> usize {
        if net.is_boundary(v) {
            merged_index
        } else {
            labels
                .binary_search_by(|l| l.as_str().cmp(g.label(v)))
                .unwrap_or(0)
        }
    };
    let mut edges = Vec::new();
    let mut origins = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let (x, y) = (image(a), image(b));
        if x == y {
            continue;
        }
        edges.push((x.min(y), x.max(y)));
        origins.push(g.edge_key(e));
    }
    Multigraph::from_parts(labels, edges, origins)
}

/// Whether every interior vertex lies on a simple path of `g` joining two
/// distinct boundary nodes. Decided by exhaustive path search.
pub fn every_interior_on_boundary_path(net: &NetworkInstance) -> bool {
    let g = net.graph();
    let mut covered = vec![false; g.vertex_count()];
    let mut remaining = net.n();
    let mut on_path = vec![false; g.vertex_count()];
    let mut path = Vec::new();

    // Paths stop at the first boundary node after the start: any longer path
    // between boundary nodes splits into such segments.
    fn walk(
        net: &NetworkInstance,
        v: usize,
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        covered: &mut [bool],
        remaining: &mut usize,
    ) {
        for &w in net.graph().neighbors(v) {
            if *remaining == 0 {
                return;
            }
            if on_path[w] {
                continue;
            }
            if net.is_boundary(w) {
                for &x in path.iter() {
                    if !covered[x] {
                        covered[x] = true;
                        *remaining -= 1;
                    }
                }
                continue;
            }
            on_path[w] = true;
            path.push(w);
            walk(net, w, on_path, path, covered, remaining);
            path.pop();
            on_path[w] = false;
        }
    }

    for &b in net.boundary() {
        if remaining == 0 {
            break;
        }
        on_path[b] = true;
        walk(net, b, &mut on_path, &mut path, &mut covered, &mut remaining);
        on_path[b] = false;
    }
    remaining == 0
}

/// A graph with a finite set of rational values attached to every vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiAssignment {
    pub graph: Graph,
    /// One set per vertex of `graph`, in its vertex order.
    pub psi: Vec<BTreeSet<BigRational>>,
}

/// The interior-induced subgraph with `ψ(i) = { u(j) : j ∈ B, j ~ i }`.
pub fn to_psi_graphical(net: &NetworkInstance) -> PsiAssignment {
    let g = net.graph();
    let graph = g.induced(net.interior());
    let psi = net
        .interior()
        .iter()
        .map(|&i| {
            g.neighbors(i)
                .iter()
                .filter_map(|&j| net.boundary_value(j).cloned())
                .collect()
        })
        .collect();
    PsiAssignment { graph, psi }
}

/// Inverse of [`to_psi_graphical`]: adds one boundary node per distinct value
/// in the ψ sets, joined to every vertex whose set contains that value.
///
/// Value nodes are labelled `j1, j2, …` in increasing value order, with extra
/// `j` prefixes if those labels are taken.
pub fn from_psi_graphical(pa: &PsiAssignment) -> Result<NetworkInstance> {
    let g = &pa.graph;
    if pa.psi.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: g.vertex_count(),
            got: pa.psi.len(),
        });
    }
    let values: Vec<&BigRational> = pa
        .psi
        .iter()
        .flatten()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if values.len() < 2 {
        return Err(Error::TooFewBoundaryNodes(values.len()));
    }
    let mut prefix = String::from("j");
    let names = loop {
        let names: Vec<String> = (1..=values.len()).map(|k| format!("{prefix}{k}")).collect();
        if names.iter().all(|l| g.index_of(l).is_none()) {
            break names;
        }
        prefix.push('j');
    };
    let mut labels: Vec<String> = g.labels().to_vec();
    labels.extend(names.iter().cloned());
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let offset = g.vertex_count();
    for (i, set) in pa.psi.iter().enumerate() {
        for s in set {
            let k = values.binary_search(&s).unwrap_or(0);
            edges.push((i, offset + k));
        }
    }
    let augmented = Graph::from_indexed(labels, &edges);
    if !augmented.is_connected() {
        return Err(Error::DisconnectedAugmentation);
    }
    let boundary_values: Vec<BigRational> = values.into_iter().cloned().collect();
    validate_network(augmented, &names, &boundary_values)
}
