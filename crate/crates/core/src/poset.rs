//! Connected partitions, the boundary-separating order ideal that realizes the
//! intersection poset of a Dirichlet arrangement, and its Möbius function.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::network::NetworkInstance;
use crate::polynomials::IntPolynomial;

/// A partition of the vertex set whose blocks induce connected subgraphs.
///
/// Blocks hold vertex indices, each block sorted, blocks sorted by their
/// smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectedPartition {
    blocks: Vec<Vec<usize>>,
}

impl ConnectedPartition {
    fn from_masks(masks: &[u64]) -> Self {
        let mut blocks: Vec<Vec<usize>> = masks.iter().map(|&m| bits(m).collect()).collect();
        blocks.sort();
        ConnectedPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &ConnectedPartition) -> bool {
        self.blocks.iter().all(|b| {
            other
                .blocks
                .iter()
                .any(|o| b.iter().all(|v| o.binary_search(v).is_ok()))
        })
    }

    /// Blocks rendered with vertex labels.
    pub fn labelled(&self, graph: &Graph) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&v| graph.label(v).to_string()).collect())
            .collect()
    }

    fn masks(&self) -> Vec<u64> {
        let mut m: Vec<u64> = self
            .blocks
            .iter()
            .map(|b| b.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        m.sort_unstable();
        m
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn adjacency_masks(graph: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; graph.vertex_count()];
    for &(a, b) in graph.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    adj
}

fn is_connected_mask(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = 1u64 << mask.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v] & mask;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == mask
}

/// Memoized enumeration of connected partitions of vertex subsets. Each
/// partition is a sorted list of block masks.
struct PartitionEnumerator<'a> {
    adj: &'a [u64],
    memo: HashMap<u64, Vec<Vec<u64>>>,
}

impl<'a> PartitionEnumerator<'a> {
    fn new(adj: &'a [u64]) -> Self {
        PartitionEnumerator {
            adj,
            memo: HashMap::new(),
        }
    }

    /// Connected subsets of `within` containing `start`, grown one neighbour
    /// at a time.
    fn connected_blocks(&self, start: usize, within: u64) -> Vec<u64> {
        let first = 1u64 << start;
        let mut seen: HashSet<u64> = HashSet::from([first]);
        let mut stack = vec![first];
        while let Some(block) = stack.pop() {
            let mut frontier = 0u64;
            for v in bits(block) {
                frontier |= self.adj[v];
            }
            frontier &= within & !block;
            for w in bits(frontier) {
                let grown = block | 1 << w;
                if seen.insert(grown) {
                    stack.push(grown);
                }
            }
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    fn partitions(&mut self, mask: u64) -> &Vec<Vec<u64>> {
        if !self.memo.contains_key(&mask) {
            let result = if mask == 0 {
                vec![Vec::new()]
            } else {
                let start = mask.trailing_zeros() as usize;
                let mut out = Vec::new();
                for block in self.connected_blocks(start, mask) {
                    let rest = self.partitions(mask & !block).clone();
                    for mut tail in rest {
                        tail.push(block);
                        tail.sort_unstable();
                        out.push(tail);
                    }
                }
                let unique: BTreeSet<Vec<u64>> = out.into_iter().collect();
                unique.into_iter().collect()
            };
            self.memo.insert(mask, result);
        }
        &self.memo[&mask]
    }
}

fn check_partition_cap(graph: &Graph, limits: &Limits) -> Result<()> {
    let cap = limits.max_partition_vertices.min(64);
    Limits::check(
        "connected-partition enumeration (vertices)",
        graph.vertex_count() as u128,
        cap as u128,
    )
}

fn canonical_order(items: &mut [(usize, ConnectedPartition)]) {
    items.sort_by(|(ra, a), (rb, b)| ra.cmp(rb).then_with(|| a.cmp(b)));
}

/// All connected partitions of `graph`, ordered by rank (`|V| - #blocks`) and
/// then lexicographically by blocks.
pub fn connected_partitions(graph: &Graph, limits: &Limits) -> Result<Vec<ConnectedPartition>> {
    check_partition_cap(graph, limits)?;
    let adj = adjacency_masks(graph);
    let full = if graph.vertex_count() == 64 {
        u64::MAX
    } else {
        (1u64 << graph.vertex_count()) - 1
    };
    let mut enumerator = PartitionEnumerator::new(&adj);
    let mut items: Vec<(usize, ConnectedPartition)> = enumerator
        .partitions(full)
        .iter()
        .map(|p| (graph.vertex_count() - p.len(), ConnectedPartition::from_masks(p)))
        .collect();
    canonical_order(&mut items);
    Ok(items.into_iter().map(|(_, p)| p).collect())
}

/// Every block contains at most one boundary node.
pub fn is_boundary_separating(p: &ConnectedPartition, net: &NetworkInstance) -> bool {
    p.blocks
        .iter()
        .all(|b| b.iter().filter(|&&v| net.is_boundary(v)).count() <= 1)
}

/// A finite poset of connected partitions ordered by refinement.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    elements: Vec<ConnectedPartition>,
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
    adj: Vec<u64>,
    index: HashMap<Vec<u64>, usize>,
}

impl FinitePoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ConnectedPartition] {
        &self.elements
    }

    /// `|V| - #blocks`; the all-singletons partition has rank 0.
    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// Cover relations `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a].refines(&self.elements[b])
    }

    pub fn index_of(&self, p: &ConnectedPartition) -> Option<usize> {
        self.index.get(&p.masks()).copied()
    }

    /// `μ(0̂, X)` for every element, by recursive inversion
    /// `μ(0̂, X) = -Σ_{Y < X} μ(0̂, Y)`.
    ///
    /// The elements below `X` are enumerated as products of connected
    /// partitions of the blocks of `X`, which requires the poset to be an order
    /// ideal of the connected-partition lattice.
    pub fn mobius_from_bottom(&self) -> Result<Vec<BigInt>> {
        let mut enumerator = PartitionEnumerator::new(&self.adj);
        let mut mu: Vec<Option<BigInt>> = vec![None; self.len()];
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.ranks[i]);
        for &x in &order {
            let masks = self.elements[x].masks();
            let mut lower: Vec<Vec<u64>> = vec![Vec::new()];
            for &block in &masks {
                let parts = enumerator.partitions(block).clone();
                lower = lower
                    .into_iter()
                    .flat_map(|prefix| {
                        parts.iter().map(move |p| {
                            let mut q = prefix.clone();
                            q.extend_from_slice(p);
                            q
                        })
                    })
                    .collect();
            }
            let mut sum = BigInt::zero();
            let mut below = 0usize;
            for mut y in lower {
                y.sort_unstable();
                if y == masks {
                    continue;
                }
                let yi = *self.index.get(&y).ok_or_else(|| {
                    Error::Internal("poset is not an order ideal of the partition lattice".into())
                })?;
                let value = mu[yi]
                    .as_ref()
                    .ok_or_else(|| Error::Internal("Möbius order violated".into()))?;
                sum += value;
                below += 1;
            }
            mu[x] = Some(if below == 0 { BigInt::one() } else { -sum });
        }
        Ok(mu.into_iter().map(|m| m.unwrap_or_default()).collect())
    }
}

/// The poset of boundary-separating connected partitions, isomorphic to the
/// intersection poset of the Dirichlet arrangement.
pub fn intersection_poset(net: &NetworkInstance, limits: &Limits) -> Result<FinitePoset> {
    let graph = net.graph();
    check_partition_cap(graph, limits)?;
    let adj = adjacency_masks(graph);
    let d = graph.vertex_count();
    let boundary_mask = net.boundary().iter().fold(0u64, |acc, &b| acc | 1 << b);
    let full = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };

    let mut enumerator = PartitionEnumerator::new(&adj);
    let mut items: Vec<(usize, ConnectedPartition)> = enumerator
        .partitions(full)
        .iter()
        .filter(|p| p.iter().all(|&b| (b & boundary_mask).count_ones() <= 1))
        .map(|p| (d - p.len(), ConnectedPartition::from_masks(p)))
        .collect();
    canonical_order(&mut items);
    let (ranks, elements): (Vec<usize>, Vec<ConnectedPartition>) = items.into_iter().unzip();
    let index: HashMap<Vec<u64>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.masks(), i))
        .collect();

    let mut covers = Vec::new();
    for (i, p) in elements.iter().enumerate() {
        let masks = p.masks();
        for a in 0..masks.len() {
            let reach = bits(masks[a]).fold(0u64, |acc, v| acc | adj[v]);
            for b in a + 1..masks.len() {
                let merged = masks[a] | masks[b];
                if reach & masks[b] == 0 || (merged & boundary_mask).count_ones() > 1 {
                    continue;
                }
                let mut upper: Vec<u64> = masks
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != a && k != b)
                    .map(|(_, &m)| m)
                    .collect();
                upper.push(merged);
                upper.sort_unstable();
                let j = *index
                    .get(&upper)
                    .ok_or_else(|| Error::Internal("missing upper cover".into()))?;
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();

    let poset = FinitePoset {
        elements,
        ranks,
        covers,
        adj,
        index,
    };
    if !lower_covers_present(&poset) {
        return Err(Error::Internal(
            "boundary-separating partitions are not downward closed".into(),
        ));
    }
    Ok(poset)
}

/// Every lower cover (one block split into two connected halves) of every
/// element is itself an element.
fn lower_covers_present(poset: &FinitePoset) -> bool {
    let adj = &poset.adj;
    poset.elements.iter().all(|p| {
        let masks = p.masks();
        masks.iter().enumerate().all(|(k, &block)| {
            let low = block & block.wrapping_neg();
            let rest = block & !low;
            // subsets of `rest`, each joined with `low`, give every split once
            let mut sub = rest;
            loop {
                let part = sub | low;
                if part != block
                    && is_connected_mask(adj, part)
                    && is_connected_mask(adj, block & !part)
                {
                    let mut lower: Vec<u64> = masks
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != k)
                        .map(|(_, &m)| m)
                        .collect();
                    lower.push(part);
                    lower.push(block & !part);
                    lower.sort_unstable();
                    if !poset.index.contains_key(&lower) {
                        return false;
                    }
                }
                if sub == 0 {
                    break true;
                }
                sub = (sub - 1) & rest;
            }
        })
    })
}

/// `Σ_X μ(0̂, X) t^{n - rank X}` over the intersection poset.
pub fn mobius_characteristic(net: &NetworkInstance, limits: &Limits) -> Result<IntPolynomial> {
    let poset = intersection_poset(net, limits)?;
    characteristic_from_poset(&poset, net.n())
}

pub fn characteristic_from_poset(poset: &FinitePoset, n: usize) -> Result<IntPolynomial> {
    let mu = poset.mobius_from_bottom()?;
    let mut coefficients = vec![BigInt::zero(); n + 1];
    for (i, value) in mu.into_iter().enumerate() {
        let rank = poset.rank(i);
        let k = n
            .checked_sub(rank)
            .ok_or_else(|| Error::Internal("poset rank exceeds dimension".into()))?;
        coefficients[k] += value;
    }
    Ok(IntPolynomial::new(coefficients))
}
