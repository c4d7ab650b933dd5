//! The master function `Φ(x) = Σ η_e ln|f_e(x)|` on the real complement, its
//! critical points, and the fixed-energy harmonic functions they encode.

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::harmonic::{
    conductances_from_point, energy_map, harmonic_solve, laplacian_float, EdgeWeights, HarmonicFunction,
};
use crate::limits::Limits;
use crate::linalg::{solve_float, SquareMatrix};
use crate::network::NetworkInstance;
use crate::orientations::{chamber_point, enumerate_class, orientation_from_values, ClassMode, Orientation};
use crate::rational::to_f64;

/// `Φ` for a network and one real energy per edge.
#[derive(Debug, Clone)]
pub struct MasterFunction {
    net: NetworkInstance,
    eta: Vec<f64>,
    /// Boundary values in vertex order; interior slots are overwritten.
    template: Vec<f64>,
}

impl MasterFunction {
    pub fn new(net: NetworkInstance, eta: &EdgeWeights) -> Result<Self> {
        let expected = net.graph().edge_count();
        if eta.len() != expected {
            return Err(Error::WeightMismatch {
                expected,
                got: eta.len(),
            });
        }
        let template = net.extend(&vec![0.0; net.n()], to_f64);
        Ok(MasterFunction {
            eta: eta.to_f64(),
            net,
            template,
        })
    }

    /// All energies equal to one.
    pub fn unit(net: NetworkInstance) -> Self {
        let k = net.graph().edge_count();
        Self::new(net, &EdgeWeights::uniform_float(k, 1.0)).expect("one weight per edge")
    }

    pub fn net(&self) -> &NetworkInstance {
        &self.net
    }

    pub fn eta(&self) -> &[f64] {
        &self.eta
    }

    /// Interior point extended by the boundary values.
    fn full(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.net.n() {
            return Err(Error::DimensionMismatch {
                expected: self.net.n(),
                got: x.len(),
            });
        }
        let mut full = self.template.clone();
        for (p, &i) in self.net.interior().iter().enumerate() {
            full[i] = x[p];
        }
        Ok(full)
    }

    /// Edge differences `f_e(x) = x_a - x_b`, rejecting points on a hyperplane.
    fn differences(&self, x: &[f64]) -> Result<Vec<f64>> {
        let full = self.full(x)?;
        let g = self.net.graph();
        g.edges()
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| {
                let d = full[a] - full[b];
                if d == 0.0 {
                    Err(Error::OnHyperplane(g.edge_key(e)))
                } else {
                    Ok(d)
                }
            })
            .collect()
    }
}

/// `Σ η_e ln|f_e(x)|`, the real branch.
pub fn master_value(mf: &MasterFunction, x: &[f64]) -> Result<f64> {
    let d = mf.differences(x)?;
    Ok(d.iter().zip(&mf.eta).map(|(d, w)| w * d.abs().ln()).sum())
}

/// Component `i` is `Σ_{j~i} η_ij / (x_i - x_j)`.
pub fn master_gradient(mf: &MasterFunction, x: &[f64]) -> Result<Vec<f64>> {
    let d = mf.differences(x)?;
    let net = &mf.net;
    let mut grad = vec![0.0; net.n()];
    for (e, &(a, b)) in net.graph().edges().iter().enumerate() {
        let term = mf.eta[e] / d[e];
        if let Some(p) = net.interior_position(a) {
            grad[p] += term;
        }
        if let Some(p) = net.interior_position(b) {
            grad[p] -= term;
        }
    }
    Ok(grad)
}

/// The gradient in exact arithmetic at an exact interior point.
pub fn master_gradient_exact(
    net: &NetworkInstance,
    eta: &[BigRational],
    x: &[BigRational],
) -> Result<Vec<BigRational>> {
    let g = net.graph();
    if x.len() != net.n() {
        return Err(Error::DimensionMismatch {
            expected: net.n(),
            got: x.len(),
        });
    }
    if eta.len() != g.edge_count() {
        return Err(Error::WeightMismatch {
            expected: g.edge_count(),
            got: eta.len(),
        });
    }
    let full = net.extend(x, |u| u.clone());
    let mut grad = vec![BigRational::zero(); net.n()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let d = &full[a] - &full[b];
        if d.is_zero() {
            return Err(Error::OnHyperplane(g.edge_key(e)));
        }
        let term = &eta[e] / d;
        if let Some(p) = net.interior_position(a) {
            grad[p] += &term;
        }
        if let Some(p) = net.interior_position(b) {
            grad[p] -= &term;
        }
    }
    Ok(grad)
}

/// `γ(x)_e = η_e / f_e(x)²`.
pub fn pointwise_conductances(mf: &MasterFunction, x: &[f64]) -> Result<Vec<f64>> {
    let d = mf.differences(x)?;
    Ok(d.iter().zip(&mf.eta).map(|(d, w)| w / (d * d)).collect())
}

/// Assembled directly from second derivatives of `Φ`.
pub fn master_hessian(mf: &MasterFunction, x: &[f64]) -> Result<SquareMatrix<f64>> {
    let d = mf.differences(x)?;
    let net = &mf.net;
    let mut h = SquareMatrix::filled(net.n(), 0.0);
    for (e, &(a, b)) in net.graph().edges().iter().enumerate() {
        let c = mf.eta[e] / (d[e] * d[e]);
        let (pa, pb) = (net.interior_position(a), net.interior_position(b));
        if let Some(p) = pa {
            *h.get_mut(p, p) -= c;
        }
        if let Some(q) = pb {
            *h.get_mut(q, q) -= c;
        }
        if let (Some(p), Some(q)) = (pa, pb) {
            *h.get_mut(p, q) += c;
            *h.get_mut(q, p) += c;
        }
    }
    Ok(h)
}

/// `-K(γ(x))`, the form the Hessian is checked against.
pub fn negative_reduced_laplacian_at(mf: &MasterFunction, x: &[f64]) -> Result<SquareMatrix<f64>> {
    let gamma = pointwise_conductances(mf, x)?;
    Ok(laplacian_float(&mf.net, &gamma, true).map(|v| -v))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Converged when `‖∇Φ‖∞ ≤ tol · (1 + max η)`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tol: 1e-10,
            max_iter: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPointSolution {
    /// Interior coordinates, in interior order.
    pub point: Vec<f64>,
    pub orientation: Orientation,
    pub gradient_norm: f64,
    /// `η_e / f_e(point)²`.
    pub conductances: EdgeWeights,
    pub iterations: usize,
}

fn sup_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn check_positive(mf: &MasterFunction) -> Result<()> {
    let g = mf.net.graph();
    match mf.eta.iter().position(|&w| !(w > 0.0 && w.is_finite())) {
        Some(e) => Err(Error::NotPositiveWeights(g.edge_key(e))),
        None => Ok(()),
    }
}

fn inside(mf: &MasterFunction, o: &Orientation, x: &[f64]) -> bool {
    mf.full(x)
        .ok()
        .and_then(|full| orientation_from_values(mf.net.graph(), &full).ok())
        .is_some_and(|got| got == *o)
}

/// Damped Newton ascent on `Φ` inside the chamber of `orientation`, from a
/// seed strictly inside it.
///
/// A step is halved until the iterate stays in the chamber and either `Φ`
/// increases or the gradient shrinks.
pub fn solve_chamber(
    mf: &MasterFunction,
    orientation: &Orientation,
    seed: &[f64],
    options: &SolverOptions,
) -> Result<CriticalPointSolution> {
    let not_converged = |iterations| Error::DidNotConverge {
        orientation: orientation.signature(),
        iterations,
    };
    if !inside(mf, orientation, seed) {
        return Err(Error::Internal("seed lies outside its chamber".into()));
    }
    let threshold = options.tol * (1.0 + mf.eta.iter().fold(0.0f64, |m, &w| m.max(w)));
    let mut x = seed.to_vec();
    let mut value = master_value(mf, &x)?;
    let mut grad = master_gradient(mf, &x)?;
    let mut iterations = 0;
    while sup_norm(&grad) > threshold {
        if iterations == options.max_iter {
            return Err(not_converged(iterations));
        }
        iterations += 1;
        // Newton direction: solve K d = ∇Φ, K = -Hessian
        let k = master_hessian(mf, &x)?.map(|v| -v);
        let step = solve_float(&k, &grad).map_err(|_| not_converged(iterations))?;
        let norm = sup_norm(&grad);
        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..60 {
            let candidate: Vec<f64> = x.iter().zip(&step).map(|(xi, si)| xi + t * si).collect();
            if inside(mf, orientation, &candidate) {
                let v = master_value(mf, &candidate)?;
                let g = master_gradient(mf, &candidate)?;
                if v > value || sup_norm(&g) < norm {
                    accepted = Some((candidate, v, g));
                    break;
                }
            }
            t *= 0.5;
        }
        let Some((nx, nv, ng)) = accepted else {
            return Err(not_converged(iterations));
        };
        x = nx;
        value = nv;
        grad = ng;
    }
    let conductances = EdgeWeights::Float(pointwise_conductances(mf, &x)?);
    Ok(CriticalPointSolution {
        gradient_norm: sup_norm(&grad),
        point: x,
        orientation: orientation.clone(),
        conductances,
        iterations,
    })
}

/// Float seeds from the exact chamber points.
pub fn chamber_seeds(net: &NetworkInstance, orientations: &[Orientation]) -> Result<Vec<Vec<f64>>> {
    orientations
        .par_iter()
        .map(|o| Ok(chamber_point(net, o)?.coordinates.iter().map(to_f64).collect()))
        .collect()
}

/// One critical point per bounded chamber, each seeded from its chamber
/// point; sorted by orientation.
pub fn find_critical_points(
    mf: &MasterFunction,
    options: &SolverOptions,
    limits: &Limits,
) -> Result<Vec<CriticalPointSolution>> {
    check_positive(mf)?;
    let orientations = enumerate_class(&mf.net, ClassMode::Compatible, limits)?;
    let seeds = chamber_seeds(&mf.net, &orientations)?;
    find_critical_points_seeded(mf, &orientations, &seeds, options)
}

/// [`find_critical_points`] with the compatible orientations and their seeds
/// supplied, so they can be reused across energies.
pub fn find_critical_points_seeded(
    mf: &MasterFunction,
    orientations: &[Orientation],
    seeds: &[Vec<f64>],
    options: &SolverOptions,
) -> Result<Vec<CriticalPointSolution>> {
    check_positive(mf)?;
    let mut solutions: Vec<CriticalPointSolution> = orientations
        .par_iter()
        .zip(seeds)
        .map(|(o, seed)| solve_chamber(mf, o, seed, options))
        .collect::<Result<_>>()?;
    solutions.sort_by(|a, b| a.orientation.cmp(&b.orientation));
    Ok(solutions)
}

/// Checks that the conductances recovered from a critical point are positive
/// and reproduce both the point and the energies to `1e-8`.
pub fn verify_eta_harmonic(mf: &MasterFunction, solution: &CriticalPointSolution) -> Result<()> {
    let net = &mf.net;
    let g = net.graph();
    let eta = EdgeWeights::Float(mf.eta.clone());
    let z = HarmonicFunction::from_interior_float(net, &solution.point);
    let gamma = conductances_from_point(net, &eta, &z)?;
    let fail = |what: String| Err(Error::RoundtripFailure(what));
    let gamma_values = gamma.to_f64();
    if let Some(e) = gamma_values.iter().position(|&c| !(c > 0.0)) {
        return fail(format!("conductance on `{}` is not positive", g.edge_key(e)));
    }
    let h = harmonic_solve(net, &gamma)?.interior_f64(net);
    for (p, (a, b)) in h.iter().zip(&solution.point).enumerate() {
        if (a - b).abs() > 1e-8 * (1.0 + b.abs()) {
            return fail(format!(
                "harmonic value at `{}` is {a}, expected {b}",
                g.label(net.interior()[p])
            ));
        }
    }
    let back = energy_map(net, &gamma)?.to_f64();
    for (e, (a, b)) in back.iter().zip(&mf.eta).enumerate() {
        if (a - b).abs() > 1e-8 * (1.0 + b.abs()) {
            return fail(format!("energy on `{}` is {a}, expected {b}", g.edge_key(e)));
        }
    }
    Ok(())
}

/// Critical points, each verified as an η-harmonic function.
pub fn eta_harmonic_functions(
    mf: &MasterFunction,
    options: &SolverOptions,
    limits: &Limits,
) -> Result<Vec<CriticalPointSolution>> {
    let solutions = find_critical_points(mf, options, limits)?;
    for s in &solutions {
        verify_eta_harmonic(mf, s)?;
    }
    Ok(solutions)
}

/// Whether the solutions' chambers are exactly `compatible`, each hit once.
pub fn verify_sdr_against(
    solutions: &[CriticalPointSolution],
    net: &NetworkInstance,
    compatible: &[Orientation],
) -> bool {
    let template = net.extend(&vec![0.0; net.n()], to_f64);
    let mut hit: Vec<Orientation> = Vec::with_capacity(solutions.len());
    for s in solutions {
        if s.point.len() != net.n() {
            return false;
        }
        let mut full = template.clone();
        for (p, &i) in net.interior().iter().enumerate() {
            full[i] = s.point[p];
        }
        match orientation_from_values(net.graph(), &full) {
            Ok(o) => hit.push(o),
            Err(_) => return false,
        }
    }
    hit.sort();
    let mut expected = compatible.to_vec();
    expected.sort();
    hit == expected
}

/// Whether the map from solutions to chambers is a bijection onto the
/// bounded chambers.
pub fn verify_sdr(solutions: &[CriticalPointSolution], net: &NetworkInstance, limits: &Limits) -> Result<bool> {
    let compatible = enumerate_class(net, ClassMode::Compatible, limits)?;
    Ok(verify_sdr_against(solutions, net, &compatible))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{path_network, wheatstone, wheel};
    use crate::linalg::symmetric_eigenvalues;
    use crate::rational::{int, ratio};

    fn point_by_label(net: &NetworkInstance, values: &[(&str, f64)]) -> Vec<f64> {
        let mut x = vec![f64::NAN; net.n()];
        for &(label, v) in values {
            let p = net.interior_position(net.graph().index_of(label).unwrap()).unwrap();
            x[p] = v;
        }
        x
    }

    fn exact_point(net: &NetworkInstance, values: &[(String, BigRational)]) -> Vec<BigRational> {
        let mut x = vec![BigRational::zero(); net.n()];
        for (label, v) in values {
            let p = net.interior_position(net.graph().index_of(label).unwrap()).unwrap();
            x[p] = v.clone();
        }
        x
    }

    #[test]
    fn master_values() {
        let w = MasterFunction::unit(wheatstone());
        let x = point_by_label(w.net(), &[("i1", 0.0), ("i2", 0.5)]);
        assert!((master_value(&w, &x).unwrap() - (3.0f64 / 8.0).ln()).abs() < 1e-14);
        let p4 = MasterFunction::unit(path_network(4));
        let x = point_by_label(p4.net(), &[("i1", 1.0 / 3.0), ("i2", 2.0 / 3.0)]);
        assert!((master_value(&p4, &x).unwrap() - (1.0f64 / 27.0).ln()).abs() < 1e-12);
        let zero = MasterFunction::new(wheatstone(), &EdgeWeights::uniform_float(5, 0.0)).unwrap();
        assert_eq!(master_value(&zero, &[0.25, 0.5]).unwrap(), 0.0);
        assert!(matches!(master_value(&w, &[0.0, 0.0]), Err(Error::OnHyperplane(_))));
        assert!(matches!(master_value(&w, &[1.0, 0.5]), Err(Error::OnHyperplane(_))));
    }

    #[test]
    fn gradients() {
        let w = MasterFunction::unit(wheatstone());
        let s = 1.0 / 5f64.sqrt();
        let x = point_by_label(w.net(), &[("i1", s), ("i2", -s)]);
        assert!(sup_norm(&master_gradient(&w, &x).unwrap()) < 1e-12);

        let x = point_by_label(w.net(), &[("i1", 0.0), ("i2", -0.5)]);
        let grad = master_gradient(&w, &x).unwrap();
        assert!(sup_norm(&grad) > 0.1);
        let h = 1e-6;
        for p in 0..2 {
            let (mut up, mut down) = (x.clone(), x.clone());
            up[p] += h;
            down[p] -= h;
            let fd = (master_value(&w, &up).unwrap() - master_value(&w, &down).unwrap()) / (2.0 * h);
            assert!((fd - grad[p]).abs() <= 1e-5 * grad[p].abs().max(1.0));
        }
    }

    #[test]
    fn hessians() {
        let p4 = MasterFunction::unit(path_network(4));
        let x = point_by_label(p4.net(), &[("i1", 1.0 / 3.0), ("i2", 2.0 / 3.0)]);
        let h = master_hessian(&p4, &x).unwrap();
        let expected = [[-18.0, 9.0], [9.0, -18.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((h.get(i, j) - expected[i][j]).abs() < 1e-9);
            }
        }
        let w = MasterFunction::unit(wheatstone());
        let s = 1.0 / 5f64.sqrt();
        let x = [s, -s];
        let h = master_hessian(&w, &x).unwrap();
        let k = negative_reduced_laplacian_at(&w, &x).unwrap();
        assert_eq!(h, k);
        assert!(symmetric_eigenvalues(&h).iter().all(|&l| l < 0.0));
        let zero = MasterFunction::new(wheatstone(), &EdgeWeights::uniform_float(5, 0.0)).unwrap();
        assert_eq!(master_hessian(&zero, &x).unwrap(), SquareMatrix::filled(2, 0.0));
    }

    #[test]
    fn wheatstone_critical_points() {
        let limits = Limits::default();
        let w = MasterFunction::unit(wheatstone());
        let sols = eta_harmonic_functions(&w, &SolverOptions::default(), &limits).unwrap();
        assert_eq!(sols.len(), 2);
        let s = 1.0 / 5f64.sqrt();
        let mut found: Vec<Vec<f64>> = sols.iter().map(|x| x.point.clone()).collect();
        found.sort_by(|a, b| a[0].total_cmp(&b[0]));
        let i1 = w.net().interior_position(w.net().graph().index_of("i1").unwrap()).unwrap();
        for (pt, sign) in found.iter().zip([-1.0, 1.0]) {
            assert!((pt[i1] - sign * s).abs() < 1e-9);
            assert!((pt[1 - i1] + sign * s).abs() < 1e-9);
        }
        let g = w.net().graph();
        let inner = g.edge_index(g.index_of("i1").unwrap(), g.index_of("i2").unwrap()).unwrap();
        let j1i1 = g.edge_index(g.index_of("j1").unwrap(), g.index_of("i1").unwrap()).unwrap();
        let positive = sols.iter().find(|x| x.point[i1] > 0.0).unwrap();
        let gamma = positive.conductances.to_f64();
        assert!((gamma[inner] - 1.25).abs() < 1e-9);
        assert!((gamma[j1i1] - 1.0 / (1.0 - s).powi(2)).abs() < 1e-9);
        assert!(verify_sdr(&sols, w.net(), &limits).unwrap());

        let mut doubled = sols.clone();
        doubled.push(sols[0].clone());
        assert!(!verify_sdr(&doubled, w.net(), &limits).unwrap());
        assert!(!verify_sdr(&sols[..1], w.net(), &limits).unwrap());
    }

    #[test]
    fn path_critical_point() {
        let net = path_network(4);
        let mf = MasterFunction::new(net.clone(), &EdgeWeights::uniform_float(3, 1.0 / 9.0)).unwrap();
        let sols = eta_harmonic_functions(&mf, &SolverOptions::default(), &Limits::default()).unwrap();
        assert_eq!(sols.len(), 1);
        let expected = point_by_label(&net, &[("i1", 1.0 / 3.0), ("i2", 2.0 / 3.0)]);
        for (a, b) in sols[0].point.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-12);
        }
        for c in sols[0].conductances.to_f64() {
            assert!((c - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_nonpositive_energies() {
        let mf = MasterFunction::new(path_network(4), &EdgeWeights::Float(vec![1.0, 0.0, 1.0])).unwrap();
        assert!(matches!(
            find_critical_points(&mf, &SolverOptions::default(), &Limits::default()),
            Err(Error::NotPositiveWeights(_))
        ));
    }

    #[test]
    fn iteration_cap_reports_chamber() {
        let mf = MasterFunction::unit(wheatstone());
        let options = SolverOptions { tol: 1e-10, max_iter: 0 };
        match find_critical_points(&mf, &options, &Limits::default()) {
            Err(Error::DidNotConverge { iterations: 0, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    /// Candidate wheel values with factors `(2k-1)/(2k+1)` for
    /// `k = ℓ, ℓ-2, …`; critical only at `ℓ = 2`.
    fn stepped_values(l: usize) -> Vec<BigRational> {
        let mut f = vec![int(1)];
        for s in 0..l - 1 {
            let k = l as i64 - 2 * s as i64;
            let next = f[s].clone() * ratio(2 * k - 1, 2 * k + 1);
            f.push(next);
        }
        f
    }

    /// Wheel values with factors `(2k-1)/(2k+1)` for `k = 2ℓ-2, 2ℓ-4, …`.
    fn doubled_values(l: usize) -> Vec<BigRational> {
        let mut f = vec![int(1)];
        for s in 0..l - 1 {
            let k = 2 * (l as i64 - 1 - s as i64);
            let next = f[s].clone() * ratio(2 * k - 1, 2 * k + 1);
            f.push(next);
        }
        f
    }

    /// Extends `f(i_0..i_{ℓ-1})` to the whole outer cycle by the two
    /// reflections, with the hub at 0.
    fn wheel_point(l: usize, head: &[BigRational]) -> Vec<(String, BigRational)> {
        let outer = 4 * l - 2;
        let mut f = vec![BigRational::zero(); outer];
        f[..l].clone_from_slice(head);
        for r in l..=2 * l - 2 {
            f[r] = -f[2 * l - r - 1].clone();
        }
        f[2 * l - 1] = int(-1);
        for r in 2 * l..outer {
            f[r] = f[4 * l - r - 2].clone();
        }
        let mut out: Vec<(String, BigRational)> = (1..outer)
            .filter(|&r| r != 2 * l - 1)
            .map(|r| (format!("i{r}"), f[r].clone()))
            .collect();
        out.push(("h".into(), int(0)));
        out
    }

    fn is_critical(l: usize, head: &[BigRational]) -> bool {
        let net = wheel(4 * l - 1);
        let eta = vec![int(1); net.graph().edge_count()];
        let x = exact_point(&net, &wheel_point(l, head));
        master_gradient_exact(&net, &eta, &x).is_ok_and(|g| g.iter().all(Zero::is_zero))
    }

    #[test]
    fn wheel_rational_critical_points() {
        // both candidates give 1, 3/5 at ℓ = 2
        assert_eq!(stepped_values(2), vec![int(1), ratio(3, 5)]);
        assert_eq!(doubled_values(2), stepped_values(2));
        assert!(is_critical(2, &doubled_values(2)));

        // from ℓ = 3 on they differ and only the doubled values are critical
        assert_eq!(stepped_values(4), vec![int(1), ratio(7, 9), ratio(7, 15), ratio(-7, 15)]);
        assert_eq!(doubled_values(4), vec![int(1), ratio(11, 13), ratio(77, 117), ratio(77, 195)]);
        assert!(is_critical(4, &doubled_values(4)));
        assert!(!is_critical(4, &stepped_values(4)));
        for l in 3..=6 {
            assert!(is_critical(l, &doubled_values(l)), "ℓ = {l}");
            assert!(!is_critical(l, &stepped_values(l)), "ℓ = {l}");
        }
    }

    #[test]
    fn wheel7_solutions() {
        let limits = Limits::default();
        let mf = MasterFunction::unit(wheel(7));
        let sols = eta_harmonic_functions(&mf, &SolverOptions::default(), &limits).unwrap();
        assert_eq!(sols.len(), 9);
        assert!(verify_sdr(&sols, mf.net(), &limits).unwrap());
        let rational = point_by_label(
            mf.net(),
            &[("h", 0.0), ("i1", 0.6), ("i2", -0.6), ("i4", -0.6), ("i5", 0.6)],
        );
        let near_rational = |x: &[f64]| {
            x.iter().all(|&v| {
                (1..=100).any(|q| ((v * q as f64).round() - v * q as f64).abs() < 1e-9 * q as f64)
            })
        };
        let hits: Vec<_> = sols.iter().filter(|s| near_rational(&s.point)).collect();
        assert_eq!(hits.len(), 1);
        assert!(hits[0].point.iter().zip(&rational).all(|(a, b)| (a - b).abs() < 1e-9));
        for s in &sols {
            assert!(symmetric_eigenvalues(&master_hessian(&mf, &s.point).unwrap()).iter().all(|&l| l < 0.0));
        }
    }
}
