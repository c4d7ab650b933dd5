//! The exhaustive test corpus: every connected graph on up to seven vertices
//! (one per isomorphism class) with every independent boundary set of a given
//! size.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::network::{validate_network, NetworkInstance};
use crate::rational::int;

/// Largest vertex count supported by the bit-packed encoding.
pub const MAX_CORPUS_VERTICES: usize = 8;

/// Upper triangle of the adjacency matrix, row by row, as bits.
type Code = u32;

fn bit(n: usize, i: usize, j: usize) -> usize {
    // pairs (0,1), (0,2), …, (0,n-1), (1,2), …
    let (i, j) = (i.min(j), i.max(j));
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn encode(n: usize, adj: &[u8], perm: &[usize]) -> Code {
    let mut code = 0;
    for p in 0..n {
        for q in p + 1..n {
            if adj[perm[p]] >> perm[q] & 1 == 1 {
                code |= 1 << bit(n, p, q);
            }
        }
    }
    code
}

fn decode(n: usize, code: Code) -> Vec<u8> {
    let mut adj = vec![0u8; n];
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit(n, i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Colour refinement from the uniform colouring; colours are ranks of sorted
/// signatures, so the result is invariant under relabelling.
fn refine(n: usize, adj: &[u8]) -> Vec<usize> {
    let mut colors = vec![0usize; n];
    let mut classes = 1;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            })
            .collect();
        let distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).expect("present"))
            .collect();
        colors = next;
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

/// Smallest code over the relabellings that list colour classes in order.
fn canonical_code(n: usize, adj: &[u8]) -> Code {
    let colors = refine(n, adj);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let max_color = colors.iter().copied().max().unwrap_or(0);
    for c in 0..=max_color {
        cells.push((0..n).filter(|&v| colors[v] == c).collect());
    }
    let mut best = Code::MAX;
    let mut perm = Vec::with_capacity(n);
    fn go(cells: &mut [Vec<usize>], cell: usize, perm: &mut Vec<usize>, n: usize, adj: &[u8], best: &mut Code) {
        if cell == cells.len() {
            *best = (*best).min(encode(n, adj, perm));
            return;
        }
        let size = cells[cell].len();
        // Heap's algorithm over the cell, recursing into the next cell
        let mut c = vec![0usize; size];
        perm.extend_from_slice(&cells[cell]);
        go(cells, cell + 1, perm, n, adj, best);
        perm.truncate(perm.len() - size);
        let mut i = 0;
        while i < size {
            if c[i] < i {
                if i % 2 == 0 {
                    cells[cell].swap(0, i);
                } else {
                    cells[cell].swap(c[i], i);
                }
                perm.extend_from_slice(&cells[cell]);
                go(cells, cell + 1, perm, n, adj, best);
                perm.truncate(perm.len() - size);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
    }
    go(&mut cells, 0, &mut perm, n, adj, &mut best);
    best
}

fn to_graph(n: usize, code: Code) -> Graph {
    let adj = decode(n, code);
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| adj[i] >> j & 1 == 1)
        .collect();
    Graph::from_indexed(labels, &edges)
}

/// One connected graph per isomorphism class on `n` vertices, for every
/// `n ≤ max_vertices`, with labels `v0, v1, …`.
///
/// Built by adding a vertex with a non-empty neighbourhood to each graph of
/// the previous size; every connected graph arises this way by deleting a
/// non-cut vertex.
pub fn connected_graphs(max_vertices: usize) -> Vec<(String, Graph)> {
    assert!(max_vertices <= MAX_CORPUS_VERTICES, "corpus supports at most 8 vertices");
    let mut out = Vec::new();
    if max_vertices == 0 {
        return out;
    }
    let mut level: BTreeSet<Code> = BTreeSet::from([0]);
    for n in 1..=max_vertices {
        if n > 1 {
            let mut next = BTreeSet::new();
            for &code in &level {
                let base = decode(n - 1, code);
                for mask in 1u8..(1u8 << (n - 1)) {
                    let mut adj = base.clone();
                    adj.push(mask);
                    for (v, row) in adj.iter_mut().enumerate().take(n - 1) {
                        if mask >> v & 1 == 1 {
                            *row |= 1 << (n - 1);
                        }
                    }
                    next.insert(canonical_code(n, &adj));
                }
            }
            level = next;
        }
        for (idx, &code) in level.iter().enumerate() {
            out.push((format!("n{n}-{idx:04}"), to_graph(n, code)));
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct CorpusInstance {
    /// Graph id and boundary labels, e.g. `n5-0003:v0,v4`.
    pub id: String,
    pub graph_id: String,
    pub net: NetworkInstance,
}

fn independent_subsets(graph: &Graph, m: usize) -> Vec<Vec<usize>> {
    fn go(graph: &Graph, start: usize, m: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == m {
            out.push(chosen.clone());
            return;
        }
        for v in start..graph.vertex_count() {
            if chosen.iter().all(|&c| !graph.has_edge(c, v)) {
                chosen.push(v);
                go(graph, v + 1, m, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(graph, 0, m, &mut Vec::new(), &mut out);
    out
}

/// Every connected graph on at most `max_vertices` vertices with every
/// independent boundary set whose size is in `boundary_sizes`; boundary values
/// are `0, 1, …` in label order.
pub fn corpus(max_vertices: usize, boundary_sizes: &[usize]) -> Vec<CorpusInstance> {
    let mut out = Vec::new();
    for (graph_id, graph) in connected_graphs(max_vertices) {
        for &m in boundary_sizes {
            if m < 2 {
                continue;
            }
            for subset in independent_subsets(&graph, m) {
                let labels: Vec<&str> = subset.iter().map(|&v| graph.label(v)).collect();
                let values: Vec<_> = (0..m as i64).map(int).collect();
                let Ok(net) = validate_network(graph.clone(), &labels, &values) else {
                    continue;
                };
                out.push(CorpusInstance {
                    id: format!("{graph_id}:{}", labels.join(",")),
                    graph_id: graph_id.clone(),
                    net,
                });
            }
        }
    }
    out
}

/// All connected graphs on at most 7 vertices, boundary sizes 2 and 3.
pub fn standard_corpus() -> Vec<CorpusInstance> {
    corpus(7, &[2, 3])
}
