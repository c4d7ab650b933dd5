use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use super::poly::IntPolynomial;
use crate::graph::Graph;

/// `t (t-1) ⋯ (t-m+1)`; `(t)_0 = 1`.
pub fn falling_factorial(m: usize) -> IntPolynomial {
    (0..m as i64).fold(IntPolynomial::one(), |acc, k| &acc * &IntPolynomial::linear(k))
}

/// Chromatic polynomial by memoized deletion–contraction.
///
/// # Panics
/// If the graph has more than 64 vertices.
pub fn chromatic_polynomial(graph: &Graph) -> IntPolynomial {
    let n = graph.vertex_count();
    assert!(n <= 64, "chromatic_polynomial supports at most 64 vertices");
    let mut adj = vec![0u64; n];
    for &(a, b) in graph.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut memo = HashMap::new();
    chromatic_masks(adj, &mut memo)
}

fn remove_bit(mask: u64, v: usize) -> u64 {
    let low = mask & ((1u64 << v) - 1);
    let high = if v + 1 >= 64 { 0 } else { (mask >> (v + 1)) << v };
    low | high
}

fn remove_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    adj.iter()
        .enumerate()
        .filter(|&(w, _)| w != v)
        .map(|(_, &m)| remove_bit(m, v))
        .collect()
}

/// Relabels vertices by (degree, neighbourhood) so isomorphic-looking
/// subproblems share memo entries. Any relabelling preserves the polynomial.
fn canonical_key(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (adj[v].count_ones(), v));
    let mut position = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    order
        .iter()
        .map(|&old| {
            let mut m = 0u64;
            let mut bits = adj[old];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                m |= 1 << position[w];
            }
            m
        })
        .collect()
}

fn chromatic_masks(adj: Vec<u64>, memo: &mut HashMap<Vec<u64>, IntPolynomial>) -> IntPolynomial {
    let n = adj.len();
    let twice_edges: u32 = adj.iter().map(|m| m.count_ones()).sum();
    if twice_edges == 0 {
        return IntPolynomial::monomial(n);
    }
    if twice_edges as usize == n * (n - 1) {
        return falling_factorial(n);
    }
    // isolated vertices and leaves
    if let Some(v) = (0..n).find(|&v| adj[v].count_ones() <= 1) {
        let factor = if adj[v] == 0 {
            IntPolynomial::monomial(1)
        } else {
            IntPolynomial::linear(1)
        };
        return &factor * &chromatic_masks(remove_vertex(&adj, v), memo);
    }
    let key = canonical_key(&adj);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let adj = key.clone();

    // contract the edge whose merged vertex has the largest degree
    let mut best = (0usize, 0usize, 0u32);
    for u in 0..n {
        let mut bits = adj[u] & !((1u64 << (u + 1)) - 1);
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let merged = ((adj[u] | adj[v]) & !(1 << u) & !(1 << v)).count_ones();
            if merged > best.2 || best == (0, 0, 0) {
                best = (u, v, merged);
            }
        }
    }
    let (u, v, _) = best;

    let mut deleted = adj.clone();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);

    let mut contracted = adj.clone();
    let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
    contracted[u] = merged;
    for w in 0..n {
        if merged & (1 << w) != 0 {
            contracted[w] |= 1 << u;
        }
    }
    let contracted = remove_vertex(&contracted, v);

    let result = &chromatic_masks(deleted, memo) - &chromatic_masks(contracted, memo);
    memo.insert(key, result.clone());
    result
}

/// `|χ'(1)|`; positive exactly for 2-connected graphs.
pub fn beta_invariant(graph: &Graph) -> BigUint {
    magnitude(chromatic_polynomial(graph).derivative().eval_i64(1))
}

/// `|χ(-1)|`, the number of acyclic orientations.
pub fn acyclic_orientation_count(graph: &Graph) -> BigUint {
    magnitude(chromatic_polynomial(graph).eval_i64(-1))
}

pub(crate) fn magnitude(x: BigInt) -> BigUint {
    x.abs().to_biguint().unwrap_or_default()
}
