//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p dirichlet-core --test acceptance`.

use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use dirichlet_core::chordal::{
    is_perfect_elimination_ordering, is_supersolvable, is_weighted_elimination_ordering,
    perfect_elimination_ordering, weighted_elimination_ordering, Chordality,
};
use dirichlet_core::corpus::{standard_corpus, CorpusInstance};
use dirichlet_core::fixtures::{complete_join, path_graph, path_network, wheatstone, wheel};
use dirichlet_core::harmonic::{laplacian_exact, path_inverse_entry, spanning_tree_polynomial_check};
use dirichlet_core::linalg::{inverse_exact, symmetric_eigenvalues};
use dirichlet_core::master::{
    chamber_seeds, eta_harmonic_functions, find_critical_points_seeded, master_gradient, master_hessian,
    master_value, negative_reduced_laplacian_at, verify_sdr, verify_sdr_against, CriticalPointSolution,
    MasterFunction, SolverOptions,
};
use dirichlet_core::network::closure_graph;
use dirichlet_core::orientations::{chamber_point, classify, enumerate_class, orientation_of_point};
use dirichlet_core::polynomials::{
    acyclic_orientation_count, beta_invariant, chamber_counts, is_log_concave, precoloring_interpolated,
    precoloring_polynomial, IntPolynomial,
};
use dirichlet_core::poset::mobius_characteristic;
use dirichlet_core::rational::{int, ratio};
use dirichlet_core::{ClassMode, EdgeWeights, Limits, NetworkInstance, OrientationClass};

type Outcome = Result<String, String>;

fn corpus() -> &'static [CorpusInstance] {
    static CORPUS: OnceLock<Vec<CorpusInstance>> = OnceLock::new();
    CORPUS.get_or_init(standard_corpus)
}

fn limits() -> Limits {
    Limits::default()
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Runs `check` on every corpus instance in parallel; the first failure (by
/// corpus order) is reported.
fn over_corpus(
    instances: &[CorpusInstance],
    check: impl Fn(&CorpusInstance) -> Result<(), String> + Sync,
) -> Result<usize, String> {
    let failures: Vec<String> = instances
        .par_iter()
        .filter_map(|inst| check(inst).err().map(|e| format!("{}: {e}", inst.id)))
        .collect();
    match failures.first() {
        None => Ok(instances.len()),
        Some(first) => Err(format!("{} failures, first {first}", failures.len())),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

/// `(t - a)(t - a - 1)…` with `n` factors.
fn shifted_falling(a: i64, n: usize) -> IntPolynomial {
    (0..n as i64).fold(IntPolynomial::one(), |acc, k| &acc * &IntPolynomial::linear(a + k))
}

/// `(t-1)^d + (-1)^d (t-1)`, the chromatic polynomial of the `d`-cycle.
fn cycle_chromatic(d: usize) -> IntPolynomial {
    let t1 = IntPolynomial::linear(1);
    let power = (0..d).fold(IntPolynomial::one(), |acc, _| &acc * &t1);
    let sign = IntPolynomial::constant(BigInt::from(if d % 2 == 0 { 1 } else { -1 }));
    &power + &(&sign * &t1)
}

fn criterion_1() -> Outcome {
    let w = precoloring_polynomial(&wheatstone()).map_err(err)?;
    ensure(w == poly(&[6, -5, 1]), || format!("pcp(W) = {w}"))?;
    for m in 2..=4 {
        for n in 1..=4 {
            let got = precoloring_polynomial(&complete_join(m, n)).map_err(err)?;
            let want = shifted_falling(m as i64, n);
            ensure(got == want, || format!("pcp(J({m},{n})) = {got}, want {want}"))?;
        }
    }
    let t_t1 = poly(&[0, -1, 1]);
    for d in 3..=8 {
        let got = precoloring_polynomial(&path_network(d)).map_err(err)?;
        let want = cycle_chromatic(d).div_exact(&t_t1).map_err(err)?;
        ensure(got == want, || format!("pcp(path_{d}) = {got}, want {want}"))?;
    }
    Ok("W, J(m,n) for 2<=m<=4, 1<=n<=4, paths d=3..8".into())
}

fn criterion_2() -> Outcome {
    let n = over_corpus(corpus(), |inst| {
        let net = &inst.net;
        let quotient = precoloring_polynomial(net).map_err(err)?;
        let mobius = mobius_characteristic(net, &limits()).map_err(err)?;
        let counts = precoloring_interpolated(net, &limits()).map_err(err)?;
        ensure(quotient == mobius && mobius == counts, || {
            format!("deletion-contraction {quotient}, mobius {mobius}, counting {counts}")
        })
    })?;
    Ok(format!("{n} instances"))
}

fn criterion_3() -> Outcome {
    let n = over_corpus(corpus(), |inst| {
        let net = &inst.net;
        let closure = closure_graph(net);
        let semi = enumerate_class(net, ClassMode::Semicompatible, &limits()).map_err(err)?;
        let compatible = semi
            .iter()
            .filter(|o| classify(net, o) == Ok(OrientationClass::Compatible))
            .count();
        let alpha = acyclic_orientation_count(&closure);
        let beta = beta_invariant(&closure);
        ensure(BigUint::from(semi.len()) * factorial(net.m()) == alpha, || {
            format!("{} semicompatible, alpha {alpha}", semi.len())
        })?;
        ensure(BigUint::from(compatible) * factorial(net.m() - 2) == beta, || {
            format!("{compatible} compatible, beta {beta}")
        })
    })?;
    let wheel7 = enumerate_class(&wheel(7), ClassMode::Compatible, &limits()).map_err(err)?;
    ensure(wheel7.len() == 9, || format!("WHEEL7 has {} compatible orientations", wheel7.len()))?;
    Ok(format!("{n} instances; WHEEL7 compatible = 9"))
}

fn criterion_4() -> Outcome {
    let total = std::sync::atomic::AtomicUsize::new(0);
    let n = over_corpus(corpus(), |inst| {
        let net = &inst.net;
        let semi = enumerate_class(net, ClassMode::Semicompatible, &limits()).map_err(err)?;
        total.fetch_add(semi.len(), std::sync::atomic::Ordering::Relaxed);
        for o in &semi {
            let point = chamber_point(net, o).map_err(err)?;
            let back = orientation_of_point(net, &point).map_err(err)?;
            ensure(back == *o, || format!("orientation {} not recovered", o.signature()))?;
        }
        Ok(())
    })?;
    Ok(format!(
        "{n} instances, {} semicompatible orientations",
        total.into_inner()
    ))
}

fn criterion_5() -> Outcome {
    for m in 2..=4 {
        for n in 1..=4 {
            ensure(is_supersolvable(&complete_join(m, n)).supersolvable, || {
                format!("J({m},{n}) not supersolvable")
            })?;
        }
    }
    for d in 4..=8 {
        ensure(!is_supersolvable(&path_network(d)).supersolvable, || {
            format!("path_{d} supersolvable")
        })?;
    }
    let n = over_corpus(corpus(), |inst| {
        let net = &inst.net;
        let closure = closure_graph(net);
        let chordal = match perfect_elimination_ordering(&closure) {
            Chordality::Chordal(o) => {
                ensure(is_perfect_elimination_ordering(&closure, &o.order), || "bad PEO".into())?;
                true
            }
            Chordality::NotChordal(cycle) => {
                ensure(
                    dirichlet_core::chordal::is_induced_cycle(&closure, &cycle),
                    || "bad cycle witness".into(),
                )?;
                false
            }
        };
        let weighted = weighted_elimination_ordering(net);
        if let Some(o) = &weighted {
            let pa = dirichlet_core::network::to_psi_graphical(net);
            ensure(is_weighted_elimination_ordering(&pa, &o.order), || {
                "weighted ordering fails verification".into()
            })?;
        }
        ensure(weighted.is_some() == chordal, || {
            format!("weighted ordering {} but chordal {chordal}", weighted.is_some())
        })
    })?;
    Ok(format!("examples and {n} instances"))
}

fn criterion_6() -> Outcome {
    for k in 2..=8usize {
        let ones = vec![int(1); k];
        let net = path_network(k + 1);
        // path edges in order j1, i1, …, j2
        let g = net.graph();
        let labels: Vec<String> = std::iter::once("j1".to_string())
            .chain((1..k).map(|i| format!("i{i}")))
            .chain(std::iter::once("j2".to_string()))
            .collect();
        let inv = inverse_exact(&laplacian_exact(&net, &vec![int(1); g.edge_count()], true)).map_err(err)?;
        for r in 1..k {
            for s in r..k {
                let want = ratio((r * (k - s)) as i64, k as i64);
                let closed = path_inverse_entry(&ones, r, s).map_err(err)?;
                let pr = net.interior_position(g.index_of(&labels[r]).unwrap()).unwrap();
                let ps = net.interior_position(g.index_of(&labels[s]).unwrap()).unwrap();
                ensure(closed == want && *inv.get(pr, ps) == want, || {
                    format!("k={k} (r,s)=({r},{s}): closed {closed}, inverse {}", inv.get(pr, ps))
                })?;
            }
        }
    }
    let small: Vec<CorpusInstance> = corpus()
        .iter()
        .filter(|i| i.net.graph().edge_count() <= 12)
        .cloned()
        .collect();
    let n = over_corpus(&small, |inst| {
        let check = spanning_tree_polynomial_check(&inst.net, &limits()).map_err(err)?;
        ensure(check.agrees && check.samples.len() == 3, || {
            let s = &check.samples[0];
            format!("det {} vs trees {}", s.determinant, s.tree_sum)
        })
    })?;
    let _ = path_graph;
    Ok(format!("unit paths k<=8; matrix-tree on {n} instances"))
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

fn interior_vector(net: &NetworkInstance, values: &[(&str, f64)]) -> Vec<f64> {
    let mut x = vec![0.0; net.n()];
    for &(label, v) in values {
        x[net.interior_position(net.graph().index_of(label).unwrap()).unwrap()] = v;
    }
    x
}

fn criterion_7() -> Outcome {
    let options = SolverOptions::default();
    let w = MasterFunction::unit(wheatstone());
    let sols = eta_harmonic_functions(&w, &options, &limits()).map_err(err)?;
    let s = 5f64.sqrt().recip();
    let plus = interior_vector(w.net(), &[("i1", s), ("i2", -s)]);
    let minus = interior_vector(w.net(), &[("i1", -s), ("i2", s)]);
    ensure(sols.len() == 2, || format!("W: {} solutions", sols.len()))?;
    let hits = |target: &[f64]| sols.iter().filter(|x| close(&x.point, target, 1e-9)).count();
    ensure(hits(&plus) == 1 && hits(&minus) == 1, || "W: solutions off ±5^-1/2".into())?;

    let wh = MasterFunction::unit(wheel(7));
    let sols = eta_harmonic_functions(&wh, &options, &limits()).map_err(err)?;
    ensure(sols.len() == 9, || format!("WHEEL7: {} solutions", sols.len()))?;
    let rational = interior_vector(
        wh.net(),
        &[("h", 0.0), ("i1", 0.6), ("i2", -0.6), ("i4", -0.6), ("i5", 0.6)],
    );
    ensure(sols.iter().any(|x| close(&x.point, &rational, 1e-9)), || {
        "WHEEL7: rational pattern missing".into()
    })?;
    // eta_harmonic_functions has already checked roundtrip and positivity
    Ok("W: 2 solutions; WHEEL7: 9 solutions incl. the 3/5 pattern; all roundtrips pass".into())
}

fn random_eta(rng: &mut ChaCha8Rng, k: usize) -> EdgeWeights {
    EdgeWeights::Exact(
        (0..k)
            .map(|_| {
                BigRational::new(
                    BigInt::from(rng.random_range(1..=20i64)),
                    BigInt::from(rng.random_range(1..=5i64)),
                )
            })
            .collect(),
    )
}

/// Solutions from criterion 8, kept for the definiteness check of criterion 9.
static SOLVED: OnceLock<Vec<(usize, Vec<f64>, Vec<CriticalPointSolution>)>> = OnceLock::new();

fn criterion_8() -> Outcome {
    let options = SolverOptions::default();
    let instances: Vec<(usize, &CorpusInstance)> =
        corpus().iter().enumerate().filter(|(_, i)| i.net.n() <= 5).collect();
    let results: Vec<Result<Vec<(usize, Vec<f64>, Vec<CriticalPointSolution>)>, String>> = instances
        .par_iter()
        .map(|&(idx, inst)| {
            let net = &inst.net;
            let tag = |e: String| format!("{}: {e}", inst.id);
            let compatible = enumerate_class(net, ClassMode::Compatible, &limits()).map_err(err).map_err(tag)?;
            let seeds = chamber_seeds(net, &compatible).map_err(err).map_err(tag)?;
            let bounded = chamber_counts(net).map_err(err).map_err(tag)?.bounded;
            let beta = beta_invariant(&closure_graph(net));
            if BigUint::from(compatible.len()) != bounded || bounded.clone() * factorial(net.m() - 2) != beta {
                return Err(tag(format!("compatible {}, bounded {bounded}, beta {beta}", compatible.len())));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(idx as u64);
            let mut kept = Vec::new();
            for round in 0..20 {
                let eta = random_eta(&mut rng, net.graph().edge_count());
                let mf = MasterFunction::new(net.clone(), &eta).map_err(err).map_err(tag)?;
                let sols = find_critical_points_seeded(&mf, &compatible, &seeds, &options)
                    .map_err(err)
                    .map_err(tag)?;
                if sols.len() != compatible.len() || !verify_sdr_against(&sols, net, &compatible) {
                    return Err(tag(format!("round {round}: not an SDR")));
                }
                if round == 0 {
                    kept.push((idx, mf.eta().to_vec(), sols));
                }
            }
            Ok(kept)
        })
        .collect();
    let mut solved = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(k) => solved.extend(k),
            Err(e) => failures.push(e),
        }
    }
    let chambers: usize = solved.iter().map(|(_, _, s)| s.len()).sum();
    let max_iter = solved
        .iter()
        .flat_map(|(_, _, s)| s.iter().map(|x| x.iterations))
        .max()
        .unwrap_or(0);
    let _ = SOLVED.set(solved);
    if let Some(first) = failures.first() {
        return Err(format!("{} failures, first {first}", failures.len()));
    }
    // the full check also runs through the enumerating entry point once
    let w = MasterFunction::unit(wheatstone());
    let sols = dirichlet_core::master::find_critical_points(&w, &options, &limits()).map_err(err)?;
    ensure(verify_sdr(&sols, w.net(), &limits()).map_err(err)?, || "W: not an SDR".into())?;
    Ok(format!(
        "{} instances x 20 energies; {chambers} chambers per round; max {max_iter} Newton iterations",
        instances.len()
    ))
}

fn random_point(rng: &mut ChaCha8Rng, mf: &MasterFunction) -> Vec<f64> {
    let net = mf.net();
    let values: Vec<f64> = net.boundary_values().iter().map(dirichlet_core::rational::to_f64).collect();
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min) - 1.0;
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 1.0;
    loop {
        let x: Vec<f64> = (0..net.n()).map(|_| rng.random_range(lo..hi)).collect();
        let full = net.extend(&x, dirichlet_core::rational::to_f64);
        if net.graph().edges().iter().all(|&(a, b)| (full[a] - full[b]).abs() > 1e-2) {
            return x;
        }
    }
}

fn sup(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn criterion_9() -> Outcome {
    let h = 1e-6;
    let indexed: Vec<(usize, CorpusInstance)> = corpus().iter().cloned().enumerate().collect();
    let failures: Vec<String> = indexed
        .par_iter()
        .filter_map(|(idx, inst)| {
            let mut rng = ChaCha8Rng::seed_from_u64(1_000_000 + *idx as u64);
            let eta = random_eta(&mut rng, inst.net.graph().edge_count());
            let mf = MasterFunction::new(inst.net.clone(), &eta).ok()?;
            for _ in 0..50 {
                let x = random_point(&mut rng, &mf);
                let grad = master_gradient(&mf, &x).ok()?;
                let fd: Vec<f64> = (0..x.len())
                    .map(|p| {
                        let (mut up, mut down) = (x.clone(), x.clone());
                        up[p] += h;
                        down[p] -= h;
                        (master_value(&mf, &up).unwrap() - master_value(&mf, &down).unwrap()) / (2.0 * h)
                    })
                    .collect();
                let diff: Vec<f64> = fd.iter().zip(&grad).map(|(a, b)| a - b).collect();
                if sup(&diff) > 1e-5 * sup(&grad).max(1.0) {
                    return Some(format!("{}: gradient mismatch {} at {x:?}", inst.id, sup(&diff)));
                }
                let hess = master_hessian(&mf, &x).ok()?;
                let k = negative_reduced_laplacian_at(&mf, &x).ok()?;
                let scale = (0..k.dim())
                    .flat_map(|i| (0..k.dim()).map(move |j| (i, j)))
                    .fold(0.0f64, |m, (i, j)| m.max(k.get(i, j).abs()));
                for i in 0..k.dim() {
                    for j in 0..k.dim() {
                        if (hess.get(i, j) - k.get(i, j)).abs() > 1e-12 * scale {
                            return Some(format!("{}: Hessian differs from -K at ({i},{j})", inst.id));
                        }
                    }
                }
            }
            None
        })
        .collect();
    if let Some(first) = failures.first() {
        return Err(format!("{} failures, first {first}", failures.len()));
    }
    let solved = SOLVED.get().ok_or("criterion 8 produced no solutions")?;
    let mut checked = 0;
    for (idx, eta, sols) in solved {
        let net = &corpus()[*idx].net;
        let mf = MasterFunction::new(net.clone(), &EdgeWeights::Float(eta.clone())).map_err(err)?;
        for s in sols {
            let hess = master_hessian(&mf, &s.point).map_err(err)?;
            let scale = (0..hess.dim()).fold(0.0f64, |m, i| m.max(hess.get(i, i).abs()));
            let top = symmetric_eigenvalues(&hess).last().copied().unwrap_or(f64::NEG_INFINITY);
            ensure(top <= -1e-9 * scale, || {
                format!("{}: Hessian eigenvalue {top} at a critical point", corpus()[*idx].id)
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{} instances x 50 points; {checked} critical points negative definite",
        indexed.len()
    ))
}

fn criterion_10() -> Outcome {
    let n = over_corpus(corpus(), |inst| {
        let p = precoloring_polynomial(&inst.net).map_err(err)?;
        ensure(is_log_concave(&p), || format!("{p} is not log-concave"))
    })?;
    ensure(!is_log_concave(&poly(&[2, -1, 1])), || "t^2 - t + 2 accepted".into())?;
    Ok(format!("{n} instances; t^2 - t + 2 rejected"))
}

fn main() {
    let start = Instant::now();
    let size = corpus().len();
    println!("corpus: {size} instances ({:.1}s)", start.elapsed().as_secs_f64());
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("exact polynomial identities", criterion_1),
        ("three-way oracle agreement", criterion_2),
        ("chamber counting formulas", criterion_3),
        ("chamber bijection", criterion_4),
        ("supersolvability and weighted elimination", criterion_5),
        ("harmonic kernel", criterion_6),
        ("fixed-energy solver", criterion_7),
        ("distinct representatives", criterion_8),
        ("numerical calculus checks", criterion_9),
        ("log-concavity", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
