use std::fmt::Write as _;

use rayon::prelude::*;

use dirichlet_core::corpus::{corpus, CorpusInstance, MAX_CORPUS_VERTICES};
use dirichlet_core::network::closure_graph;
use dirichlet_core::orientations::enumerate_class;
use dirichlet_core::polynomials::{chamber_counts, precoloring_polynomial};
use dirichlet_core::{is_supersolvable, perfect_elimination_ordering, ClassMode, Error, Limits};

const HEADER: &str = "instance,graph,m,n,pcp,total,bounded,compatible,chordal,supersolvable";

fn row(inst: &CorpusInstance, limits: &Limits) -> Result<String, Error> {
    let net = &inst.net;
    let pcp = precoloring_polynomial(net)?;
    let counts = chamber_counts(net)?;
    let compatible = enumerate_class(net, ClassMode::Compatible, limits)?.len();
    let chordal = perfect_elimination_ordering(&closure_graph(net)).is_chordal();
    let supersolvable = is_supersolvable(net).supersolvable;
    Ok(format!(
        "\"{}\",{},{},{},{pcp},{},{},{compatible},{chordal},{supersolvable}",
        inst.id,
        inst.graph_id,
        net.m(),
        net.n(),
        counts.total,
        counts.bounded
    ))
}

/// One CSV row per corpus instance, in corpus order.
pub fn census(max_vertices: usize) -> Result<String, Error> {
    if max_vertices > MAX_CORPUS_VERTICES {
        return Err(Error::InstanceTooLarge {
            what: "census (vertices)",
            size: max_vertices as u128,
            cap: MAX_CORPUS_VERTICES as u128,
        });
    }
    let limits = Limits::from_env()?;
    let instances = corpus(max_vertices, &[2, 3]);
    let rows: Vec<String> = instances
        .par_iter()
        .map(|inst| row(inst, &limits))
        .collect::<Result<_, _>>()?;
    let mut out = String::with_capacity(rows.len() * 64);
    let _ = writeln!(out, "{HEADER}");
    for r in rows {
        let _ = writeln!(out, "{r}");
    }
    Ok(out)
}
