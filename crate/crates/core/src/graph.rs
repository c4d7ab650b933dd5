//! Simple graphs and multigraphs over string-labelled vertices.
//!
//! Vertices are stored in lexicographic label order and addressed by index;
//! that order is the canonical order used for every vector and matrix in the
//! crate. Edges are stored as `(a, b)` with `a < b`, sorted.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty() || label.contains('-') || label.chars().any(char::is_whitespace) {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

/// The `"v-w"` key of an edge, labels in lexicographic order.
pub fn edge_key(a: &str, b: &str) -> String {
    if a <= b {
        format!("{a}-{b}")
    } else {
        format!("{b}-{a}")
    }
}

impl Graph {
    /// Builds a graph from labels and label pairs.
    ///
    /// Labels must be non-empty, free of whitespace and of `-` (the edge-key
    /// separator).
    pub fn new<V, E, S, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut set = BTreeSet::new();
        for v in vertices {
            let v = v.into();
            check_label(&v)?;
            if !set.insert(v.clone()) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        let labels: Vec<String> = set.into_iter().collect();
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            if ia == ib {
                return Err(Error::Loop(a.to_string()));
            }
            if !edge_set.insert((ia.min(ib), ia.max(ib))) {
                return Err(Error::DuplicateEdge(edge_key(a, b)));
            }
        }
        Ok(Self::from_parts(labels, edge_set.into_iter().collect()))
    }

    /// `labels` must be sorted and unique, `edges` sorted with `a < b`.
    pub(crate) fn from_parts(labels: Vec<String>, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let mut adjacency = vec![Vec::new(); labels.len()];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            labels,
            edges,
            adjacency,
        }
    }

    /// Relabels index-based data; labels need not be sorted, edges need not be
    /// normalized.
    pub(crate) fn from_indexed(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut position = vec![0; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let sorted: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        let set: BTreeSet<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (position[a], position[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        Self::from_parts(sorted, set.into_iter().collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Index of edge `{a, b}` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn edge_key(&self, e: usize) -> String {
        let (a, b) = self.edges[e];
        edge_key(&self.labels[a], &self.labels[b])
    }

    /// Edge index for a `"v-w"` key (either label order is accepted).
    pub fn edge_by_key(&self, key: &str) -> Option<usize> {
        let (a, b) = key.split_once('-')?;
        self.edge_index(self.index_of(a.trim())?, self.index_of(b.trim())?)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Connected and free of cut vertices (with at least 3 vertices), or `K2`.
    pub fn is_biconnected(&self) -> bool {
        let n = self.vertex_count();
        if n < 2 || !self.is_connected() {
            return false;
        }
        if n == 2 {
            return true;
        }
        self.cut_vertices().is_empty()
    }

    /// Articulation points, by iterative depth-first low-link search.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adjacency[v].len() {
                    let w = self.adjacency[v][*pos];
                    *pos += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Subgraph induced on `vertices` (indices into `self`), keeping labels.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| position[a] != usize::MAX && position[b] != usize::MAX)
            .map(|&(a, b)| (position[a], position[b]))
            .collect();
        Graph::from_parts(labels, edges)
    }

    /// Graph with `extra` edges added (existing ones are ignored).
    pub fn with_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut set: BTreeSet<(usize, usize)> = self.edges.iter().copied().collect();
        for (a, b) in extra {
            if a != b {
                set.insert((a.min(b), a.max(b)));
            }
        }
        Graph::from_parts(self.labels.clone(), set.into_iter().collect())
    }

    /// Graph with edge `e` removed.
    pub fn without_edge(&self, e: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Graph::from_parts(self.labels.clone(), edges)
    }

    /// Graph with edge `e = {a, b}` contracted into `a`; parallel edges merge.
    pub fn contract_edge(&self, e: usize) -> Graph {
        let (a, b) = self.edges[e];
        let mut labels = self.labels.clone();
        labels.remove(b);
        let shift = |v: usize| {
            let v = if v == b { a } else { v };
            if v > b {
                v - 1
            } else {
                v
            }
        };
        let set: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(x, y)| (shift(x), shift(y)))
            .filter(|&(x, y)| x != y)
            .map(|(x, y)| (x.min(y), x.max(y)))
            .collect();
        Graph::from_parts(labels, set.into_iter().collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<String> = (0..self.edge_count()).map(|e| self.edge_key(e)).collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &keys)
            .finish()
    }
}

/// Undirected multigraph without loops. Each edge remembers the key of the
/// edge it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    origins: Vec<String>,
}

impl Multigraph {
    pub(crate) fn from_parts(
        labels: Vec<String>,
        edges: Vec<(usize, usize)>,
        origins: Vec<String>,
    ) -> Self {
        debug_assert_eq!(edges.len(), origins.len());
        Multigraph {
            labels,
            edges,
            origins,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Key of the original edge that multigraph edge `e` came from.
    pub fn origin(&self, e: usize) -> &str {
        &self.origins[e]
    }

    /// Number of parallel edges between `a` and `b`.
    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        let key = (a.min(b), a.max(b));
        self.edges.iter().filter(|&&e| e == key).count()
    }
}
