//! Small named networks used throughout the tests, benches and docs.

use num_rational::BigRational;

use crate::graph::Graph;
use crate::network::{validate_network, NetworkInstance};
use crate::rational::int;

/// Wheatstone bridge: boundary `j1, j2` with `u = (1, -1)`, interior `i1, i2`.
pub fn wheatstone() -> NetworkInstance {
    let g = Graph::new(
        ["j1", "j2", "i1", "i2"],
        [
            ("j1", "i1"),
            ("j1", "i2"),
            ("j2", "i1"),
            ("j2", "i2"),
            ("i1", "i2"),
        ],
    )
    .expect("static graph");
    validate_network(g, &["j1", "j2"], &[int(1), int(-1)]).expect("static network")
}

/// Path `j1 - i1 - … - i(d-2) - j2` on `d` vertices.
pub fn path_graph(d: usize) -> Graph {
    assert!(d >= 2);
    let mut labels = vec!["j1".to_string()];
    labels.extend((1..d - 1).map(|i| format!("i{i}")));
    labels.push("j2".to_string());
    let edges: Vec<(String, String)> = labels
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    Graph::new(labels, edges).expect("static graph")
}

/// [`path_graph`] with its ends as boundary, `u(j1) = 0`, `u(j2) = 1`.
pub fn path_network(d: usize) -> NetworkInstance {
    assert!(d >= 3);
    validate_network(path_graph(d), &["j1", "j2"], &[int(0), int(1)]).expect("static network")
}

/// Path network with arbitrary boundary values at the two ends.
pub fn path_network_with(d: usize, left: BigRational, right: BigRational) -> NetworkInstance {
    validate_network(path_graph(d), &["j1", "j2"], &[left, right]).expect("injective values")
}

/// Complete join: an interior clique `i1..in`, every boundary node `j1..jm`
/// adjacent to every interior vertex; `u(jk) = k - 1`.
pub fn complete_join(m: usize, n: usize) -> NetworkInstance {
    assert!(m >= 2 && n >= 1);
    let boundary: Vec<String> = (1..=m).map(|k| format!("j{k}")).collect();
    let interior: Vec<String> = (1..=n).map(|k| format!("i{k}")).collect();
    let mut edges = Vec::new();
    for (a, x) in interior.iter().enumerate() {
        for y in &interior[a + 1..] {
            edges.push((x.clone(), y.clone()));
        }
        for j in &boundary {
            edges.push((j.clone(), x.clone()));
        }
    }
    let g = Graph::new(boundary.iter().chain(&interior).cloned(), edges).expect("static graph");
    let values: Vec<BigRational> = (0..m as i64).map(int).collect();
    validate_network(g, &boundary, &values).expect("static network")
}

/// Wheel on `d` vertices (odd `d >= 5`): hub `h`, outer cycle `i0..i(d-2)`,
/// boundary at the opposite outer vertices `i0` (value 1) and `i((d-1)/2)`
/// (value -1).
pub fn wheel(d: usize) -> NetworkInstance {
    assert!(d >= 5 && d % 2 == 1);
    let outer = d - 1;
    let labels: Vec<String> = (0..outer).map(|r| format!("i{r}")).collect();
    let mut edges = Vec::new();
    for r in 0..outer {
        edges.push((labels[r].clone(), labels[(r + 1) % outer].clone()));
        edges.push(("h".to_string(), labels[r].clone()));
    }
    let g = Graph::new(
        labels.iter().cloned().chain(std::iter::once("h".to_string())),
        edges,
    )
    .expect("static graph");
    let b = [labels[0].clone(), labels[outer / 2].clone()];
    validate_network(g, &b, &[int(1), int(-1)]).expect("static network")
}
