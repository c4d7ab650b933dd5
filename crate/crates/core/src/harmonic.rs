//! Weighted Laplacians, harmonic extensions of boundary data, the energy map
//! and the matrix-tree identity for the reduced Laplacian.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::limits::Limits;
use crate::linalg::{
    determinant_exact, determinant_float, is_nonsingular_float, solve_exact, solve_float, SquareMatrix,
};
use crate::network::{identified_graph, NetworkInstance};
use crate::rational::to_f64;

/// One weight per edge, in the graph's edge order.
#[derive(Debug, Clone, PartialEq)]
pub enum EdgeWeights {
    Exact(Vec<BigRational>),
    Float(Vec<f64>),
}

impl EdgeWeights {
    pub fn uniform_exact(edges: usize, value: BigRational) -> Self {
        EdgeWeights::Exact(vec![value; edges])
    }

    pub fn uniform_float(edges: usize, value: f64) -> Self {
        EdgeWeights::Float(vec![value; edges])
    }

    pub fn len(&self) -> usize {
        match self {
            EdgeWeights::Exact(v) => v.len(),
            EdgeWeights::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, EdgeWeights::Exact(_))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            EdgeWeights::Exact(v) => v.iter().map(to_f64).collect(),
            EdgeWeights::Float(v) => v.clone(),
        }
    }

    fn check(&self, net: &NetworkInstance) -> Result<()> {
        let expected = net.graph().edge_count();
        if self.len() != expected {
            return Err(Error::WeightMismatch {
                expected,
                got: self.len(),
            });
        }
        Ok(())
    }
}

/// Values on every vertex, in graph vertex order, extending the boundary data.
#[derive(Debug, Clone, PartialEq)]
pub enum HarmonicFunction {
    Exact(Vec<BigRational>),
    Float(Vec<f64>),
}

impl HarmonicFunction {
    /// Extends interior coordinates by the boundary values.
    pub fn from_interior_exact(net: &NetworkInstance, interior: &[BigRational]) -> Self {
        HarmonicFunction::Exact(net.extend(interior, |u| u.clone()))
    }

    pub fn from_interior_float(net: &NetworkInstance, interior: &[f64]) -> Self {
        HarmonicFunction::Float(net.extend(interior, to_f64))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            HarmonicFunction::Exact(v) => v.iter().map(to_f64).collect(),
            HarmonicFunction::Float(v) => v.clone(),
        }
    }

    /// Float values on the interior, in interior order.
    pub fn interior_f64(&self, net: &NetworkInstance) -> Vec<f64> {
        let all = self.to_f64();
        net.interior().iter().map(|&i| all[i]).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Laplacian {
    Exact(SquareMatrix<BigRational>),
    Float(SquareMatrix<f64>),
}

fn laplacian_with<T>(net: &NetworkInstance, gamma: &[T], reduced: bool) -> SquareMatrix<T>
where
    T: Clone + Zero + for<'a> std::ops::AddAssign<&'a T> + for<'a> std::ops::SubAssign<&'a T>,
{
    let g = net.graph();
    let mut l = SquareMatrix::filled(g.vertex_count(), T::zero());
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let w = &gamma[e];
        *l.get_mut(a, a) += w;
        *l.get_mut(b, b) += w;
        *l.get_mut(a, b) -= w;
        *l.get_mut(b, a) -= w;
    }
    if reduced {
        l.principal(net.interior())
    } else {
        l
    }
}

pub fn laplacian_exact(net: &NetworkInstance, gamma: &[BigRational], reduced: bool) -> SquareMatrix<BigRational> {
    laplacian_with(net, gamma, reduced)
}

pub fn laplacian_float(net: &NetworkInstance, gamma: &[f64], reduced: bool) -> SquareMatrix<f64> {
    laplacian_with(net, gamma, reduced)
}

/// The weighted Laplacian `L`, or the interior block `K` when `reduced`.
pub fn laplacian(net: &NetworkInstance, gamma: &EdgeWeights, reduced: bool) -> Result<Laplacian> {
    gamma.check(net)?;
    Ok(match gamma {
        EdgeWeights::Exact(w) => Laplacian::Exact(laplacian_exact(net, w, reduced)),
        EdgeWeights::Float(w) => Laplacian::Float(laplacian_float(net, w, reduced)),
    })
}

/// `det K`, exactly.
pub fn reduced_determinant(net: &NetworkInstance, gamma: &[BigRational]) -> BigRational {
    determinant_exact(&laplacian_exact(net, gamma, true))
}

/// Whether `K` is nonsingular: exact for rational weights, otherwise
/// `|det K| > 1e-12 ×` the Hadamard bound of `K`.
pub fn is_generic(net: &NetworkInstance, gamma: &EdgeWeights) -> Result<bool> {
    Ok(match laplacian(net, gamma, true)? {
        Laplacian::Exact(k) => !determinant_exact(&k).is_zero(),
        Laplacian::Float(k) => is_nonsingular_float(&k),
    })
}

/// Right-hand side `Σ_{j ∈ B, j ~ i} γ_ij u(j)` of the balance equations.
fn boundary_load<T>(net: &NetworkInstance, gamma: &[T], value: impl Fn(&BigRational) -> T) -> Vec<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T>,
{
    let g = net.graph();
    let mut load = vec![T::zero(); net.n()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        for (x, y) in [(a, b), (b, a)] {
            if let (Some(p), Some(u)) = (net.interior_position(x), net.boundary_value(y)) {
                load[p] = load[p].clone() + gamma[e].clone() * value(u);
            }
        }
    }
    load
}

/// The extension of `u` satisfying `Σ_{j~i} γ_ij (x_i - x_j) = 0` at every
/// interior vertex.
pub fn harmonic_solve(net: &NetworkInstance, gamma: &EdgeWeights) -> Result<HarmonicFunction> {
    Ok(match laplacian(net, gamma, true)? {
        Laplacian::Exact(k) => {
            let EdgeWeights::Exact(w) = gamma else { unreachable!() };
            let x = solve_exact(&k, &boundary_load(net, w, |u| u.clone()))?;
            HarmonicFunction::from_interior_exact(net, &x)
        }
        Laplacian::Float(k) => {
            let EdgeWeights::Float(w) = gamma else { unreachable!() };
            let x = solve_float(&k, &boundary_load(net, w, to_f64))?;
            HarmonicFunction::from_interior_float(net, &x)
        }
    })
}

/// `η_ij = γ_ij (h_i - h_j)²` at the harmonic extension.
pub fn energy_map(net: &NetworkInstance, gamma: &EdgeWeights) -> Result<EdgeWeights> {
    let h = harmonic_solve(net, gamma)?;
    let edges = net.graph().edges();
    Ok(match (gamma, h) {
        (EdgeWeights::Exact(w), HarmonicFunction::Exact(h)) => EdgeWeights::Exact(
            edges
                .iter()
                .zip(w)
                .map(|(&(a, b), w)| {
                    let d = &h[a] - &h[b];
                    w * &d * &d
                })
                .collect(),
        ),
        (EdgeWeights::Float(w), HarmonicFunction::Float(h)) => EdgeWeights::Float(
            edges
                .iter()
                .zip(w)
                .map(|(&(a, b), w)| w * (h[a] - h[b]).powi(2))
                .collect(),
        ),
        _ => unreachable!("harmonic_solve keeps the numeric tag"),
    })
}

/// `γ_ij = η_ij / (z_i - z_j)²`; `z` holds values on every vertex.
pub fn conductances_from_point(
    net: &NetworkInstance,
    eta: &EdgeWeights,
    z: &HarmonicFunction,
) -> Result<EdgeWeights> {
    eta.check(net)?;
    let g = net.graph();
    let on_hyperplane = |e: usize| Error::OnHyperplane(g.edge_key(e));
    match (eta, z) {
        (EdgeWeights::Exact(w), HarmonicFunction::Exact(z)) => {
            check_len(z.len(), g.vertex_count())?;
            let mut out = Vec::with_capacity(w.len());
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                let d = &z[a] - &z[b];
                if d.is_zero() {
                    return Err(on_hyperplane(e));
                }
                out.push(&w[e] / (&d * &d));
            }
            Ok(EdgeWeights::Exact(out))
        }
        (EdgeWeights::Float(w), HarmonicFunction::Float(z)) => {
            check_len(z.len(), g.vertex_count())?;
            let mut out = Vec::with_capacity(w.len());
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                let d = z[a] - z[b];
                if d == 0.0 {
                    return Err(on_hyperplane(e));
                }
                out.push(w[e] / (d * d));
            }
            Ok(EdgeWeights::Float(out))
        }
        _ => Err(Error::MixedNumericTags),
    }
}

fn check_len(got: usize, expected: usize) -> Result<()> {
    if got == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

/// `e_d(values)`.
pub fn elementary_symmetric(values: &[BigRational], d: usize) -> BigRational {
    let mut e = vec![BigRational::zero(); d + 1];
    e[0] = BigRational::one();
    for (count, x) in values.iter().enumerate() {
        for j in (1..=d.min(count + 1)).rev() {
            let term = &e[j - 1] * x;
            e[j] += term;
        }
    }
    e[d].clone()
}

/// `[K⁻¹]_rs` for a path whose `k` edges carry `conductances` in order from
/// one boundary end to the other; `1 ≤ r ≤ s ≤ k - 1`.
///
/// Equals `e_{r-1}(γ_1..γ_r) · e_{s-r}(γ_{r+1}..γ_s) · e_{n-s}(γ_{s+1}..γ_k) / e_n(γ)`
/// with `n = k - 1`.
pub fn path_inverse_entry(conductances: &[BigRational], r: usize, s: usize) -> Result<BigRational> {
    let k = conductances.len();
    if k < 2 || r < 1 || r > s || s > k - 1 {
        return Err(Error::IndexOutOfRange(format!(
            "need 1 <= r <= s <= {}, got r = {r}, s = {s}",
            k.saturating_sub(1)
        )));
    }
    let n = k - 1;
    let denominator = elementary_symmetric(conductances, n);
    if denominator.is_zero() {
        return Err(Error::SingularSystem);
    }
    let left = elementary_symmetric(&conductances[..r], r - 1);
    let middle = elementary_symmetric(&conductances[r..s], s - r);
    let right = elementary_symmetric(&conductances[s..], n - s);
    Ok(left * middle * right / denominator)
}

/// Sum over spanning trees of the product of edge weights.
pub fn spanning_tree_sum(graph: &Multigraph, weights: &[BigRational], limits: &Limits) -> Result<BigRational> {
    let k = graph.edge_count();
    Limits::check("spanning-tree enumeration edges", k as u128, limits.max_tree_edges as u128)?;
    let v = graph.vertex_count();
    let need = v.saturating_sub(1);
    let mut total = BigRational::zero();
    for mask in 0u32..(1u32 << k) {
        if mask.count_ones() as usize != need {
            continue;
        }
        let mut parent: Vec<usize> = (0..v).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut acyclic = true;
        let mut product = BigRational::one();
        for (e, &(a, b)) in graph.edges().iter().enumerate() {
            if mask & (1 << e) == 0 {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                acyclic = false;
                break;
            }
            parent[ra] = rb;
            product *= &weights[e];
        }
        if acyclic {
            total += product;
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpanningTreeSample {
    pub weights: Vec<BigRational>,
    pub determinant: BigRational,
    pub tree_sum: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpanningTreeCheck {
    pub samples: Vec<SpanningTreeSample>,
    pub agrees: bool,
}

/// Compares `det K` with the spanning-tree sum of `ḡ` at random positive
/// rational conductances (3 samples from a fixed seed).
pub fn spanning_tree_polynomial_check(net: &NetworkInstance, limits: &Limits) -> Result<SpanningTreeCheck> {
    spanning_tree_polynomial_check_seeded(net, limits, 3, 0x5eed)
}

pub fn spanning_tree_polynomial_check_seeded(
    net: &NetworkInstance,
    limits: &Limits,
    samples: usize,
    seed: u64,
) -> Result<SpanningTreeCheck> {
    let g = net.graph();
    Limits::check(
        "spanning-tree enumeration edges",
        g.edge_count() as u128,
        limits.max_tree_edges as u128,
    )?;
    let bar = identified_graph(net);
    let origin: Vec<usize> = (0..bar.edge_count())
        .map(|e| {
            g.edge_by_key(bar.origin(e))
                .ok_or_else(|| Error::Internal(format!("unknown edge {}", bar.origin(e))))
        })
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let weights: Vec<BigRational> = (0..g.edge_count())
            .map(|_| {
                BigRational::new(
                    BigInt::from(rng.random_range(1..=30i64)),
                    BigInt::from(rng.random_range(1..=9i64)),
                )
            })
            .collect();
        let bar_weights: Vec<BigRational> = origin.iter().map(|&e| weights[e].clone()).collect();
        let determinant = reduced_determinant(net, &weights);
        let tree_sum = spanning_tree_sum(&bar, &bar_weights, limits)?;
        out.push(SpanningTreeSample {
            weights,
            determinant,
            tree_sum,
        });
    }
    let agrees = out.iter().all(|s| s.determinant == s.tree_sum);
    Ok(SpanningTreeCheck { samples: out, agrees })
}

/// Float `det K`, for diagnostics.
pub fn reduced_determinant_float(net: &NetworkInstance, gamma: &[f64]) -> f64 {
    determinant_float(&laplacian_float(net, gamma, true))
}
