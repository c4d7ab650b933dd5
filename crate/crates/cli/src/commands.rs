use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use dirichlet_core::chordal::weighted_elimination_ordering;
use dirichlet_core::harmonic::{energy_map, harmonic_solve, is_generic};
use dirichlet_core::io::{network_to_json, parse_network_json, weights_from_assignments, weights_to_json, NetworkFile};
use dirichlet_core::master::{find_critical_points, verify_eta_harmonic, verify_sdr};
use dirichlet_core::network::to_psi_graphical;
use dirichlet_core::orientations::{chamber_adjacency_graph, chamber_point, enumerate_class};
use dirichlet_core::polynomials::{chamber_counts, precoloring_polynomial};
use dirichlet_core::poset::{characteristic_from_poset, intersection_poset};
use dirichlet_core::rational::{format_rational, int};
use dirichlet_core::{
    is_supersolvable, Chordality, ClassMode, EdgeWeights, Error, Graph, HarmonicFunction, Limits, MasterFunction,
    NetworkInstance, SolverOptions,
};

use crate::Mode;

/// One result in both output formats.
pub struct Report {
    pub json: Value,
    pub text: String,
}

pub fn load(path: &Path) -> Result<NetworkFile, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_network_json(&text)
}

/// Integers that fit in `u64` as JSON numbers, larger ones as strings.
pub fn big_json(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn labels(graph: &Graph, vertices: &[usize]) -> Vec<String> {
    vertices.iter().map(|&v| graph.label(v).to_string()).collect()
}

fn values_json(graph: &Graph, h: &HarmonicFunction) -> Value {
    let map: Map<String, Value> = match h {
        HarmonicFunction::Exact(v) => (0..graph.vertex_count())
            .map(|i| (graph.label(i).to_string(), json!(format_rational(&v[i]))))
            .collect(),
        HarmonicFunction::Float(v) => (0..graph.vertex_count())
            .map(|i| (graph.label(i).to_string(), json!(v[i])))
            .collect(),
    };
    Value::Object(map)
}

fn weights_text(graph: &Graph, w: &EdgeWeights) -> String {
    let mut out = String::new();
    for e in 0..graph.edge_count() {
        let value = match w {
            EdgeWeights::Exact(v) => format_rational(&v[e]),
            EdgeWeights::Float(v) => v[e].to_string(),
        };
        let _ = writeln!(out, "{} {value}", graph.edge_key(e));
    }
    out
}

pub fn validate(file: &NetworkFile) -> Report {
    let net = &file.net;
    let text = format!(
        "valid: {} vertices ({} boundary, {} interior), {} edges\n",
        net.graph().vertex_count(),
        net.m(),
        net.n(),
        net.graph().edge_count()
    );
    Report {
        json: network_to_json(file),
        text,
    }
}

pub fn charpoly(file: &NetworkFile) -> Result<Report, Error> {
    let p = precoloring_polynomial(&file.net)?;
    Ok(Report {
        json: json!({
            "polynomial": p.to_string(),
            "coefficients": p.to_decimal_strings(),
        }),
        text: format!("{p}\n"),
    })
}

pub fn count_chambers(file: &NetworkFile) -> Result<Report, Error> {
    let c = chamber_counts(&file.net)?;
    Ok(Report {
        json: json!({"total": big_json(&c.total), "bounded": big_json(&c.bounded)}),
        text: format!("total {}\nbounded {}\n", c.total, c.bounded),
    })
}

fn point_json(net: &NetworkInstance, coordinates: &[num_rational::BigRational]) -> Value {
    let g = net.graph();
    let map: Map<String, Value> = net
        .interior()
        .iter()
        .zip(coordinates)
        .map(|(&i, x)| (g.label(i).to_string(), json!(format_rational(x))))
        .collect();
    Value::Object(map)
}

pub fn orientations(
    file: &NetworkFile,
    mode: Mode,
    points: bool,
    adjacency: bool,
    limits: &Limits,
) -> Result<Report, Error> {
    let net = &file.net;
    let g = net.graph();
    let class = match mode {
        Mode::Semicompatible => ClassMode::Semicompatible,
        Mode::Compatible => ClassMode::Compatible,
    };
    let list = enumerate_class(net, class, limits)?;
    let mut entries = Vec::with_capacity(list.len());
    let mut text = format!("{} orientations\n", list.len());
    for o in &list {
        let mut entry = json!({"signature": o.signature(), "arcs": o.to_key_map(g)});
        let arcs: Vec<String> = o.to_key_map(g).into_values().collect();
        let _ = write!(text, "{}", arcs.join(" "));
        if points {
            let p = chamber_point(net, o)?;
            entry["point"] = point_json(net, &p.coordinates);
            let coords: Vec<String> = p.coordinates.iter().map(format_rational).collect();
            let _ = write!(text, "  at ({})", coords.join(", "));
        }
        text.push('\n');
        entries.push(entry);
    }
    let mode_name = match mode {
        Mode::Semicompatible => "semicompatible",
        Mode::Compatible => "compatible",
    };
    let mut json = json!({"mode": mode_name, "count": list.len(), "orientations": entries});
    if adjacency {
        let adj = chamber_adjacency_graph(net, limits)?;
        let _ = writeln!(text, "adjacency among {} bounded chambers", adj.orientations.len());
        let edges: Vec<Value> = adj
            .edges
            .iter()
            .zip(&adj.witnesses)
            .map(|(&(a, b, e), w)| {
                let _ = writeln!(
                    text,
                    "{} -- {} across {}",
                    adj.orientations[a].signature(),
                    adj.orientations[b].signature(),
                    g.edge_key(e)
                );
                let witness: Map<String, Value> = (0..g.vertex_count())
                    .map(|v| (g.label(v).to_string(), json!(format_rational(&w[v]))))
                    .collect();
                json!({
                    "from": adj.orientations[a].signature(),
                    "to": adj.orientations[b].signature(),
                    "edge": g.edge_key(e),
                    "witness": witness,
                })
            })
            .collect();
        json["adjacency"] = json!({"connected": adj.is_connected(), "edges": edges});
    }
    Ok(Report { json, text })
}

pub fn poset(file: &NetworkFile, limits: &Limits) -> Result<Report, Error> {
    let net = &file.net;
    let g = net.graph();
    let poset = intersection_poset(net, limits)?;
    let mobius = poset.mobius_from_bottom()?;
    let chi = characteristic_from_poset(&poset, net.n())?;
    let mut text = format!("{} elements\n", poset.len());
    let elements: Vec<Value> = poset
        .elements()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let blocks = p.labelled(g);
            let rendered: Vec<String> = blocks.iter().map(|b| format!("{{{}}}", b.join(","))).collect();
            let _ = writeln!(text, "rank {} mu {:>4}  {}", poset.rank(i), mobius[i], rendered.join(" "));
            json!({"blocks": blocks, "rank": poset.rank(i), "mobius": mobius[i].to_string()})
        })
        .collect();
    let _ = writeln!(text, "characteristic polynomial {chi}");
    Ok(Report {
        json: json!({
            "elements": elements,
            "covers": poset.covers(),
            "characteristic_polynomial": chi.to_string(),
        }),
        text,
    })
}

pub fn supersolvable(file: &NetworkFile) -> Report {
    let net = &file.net;
    let report = is_supersolvable(net);
    let closure = dirichlet_core::network::closure_graph(net);
    let mut json = json!({"supersolvable": report.supersolvable, "free": report.free});
    let mut text = format!(
        "supersolvable {}\nfree {}\n",
        report.supersolvable, report.free
    );
    match &report.witness {
        Chordality::Chordal(o) => {
            let order = labels(&closure, &o.order);
            let _ = writeln!(text, "perfect elimination ordering {}", order.join(" "));
            json["perfect_elimination_ordering"] = json!(order);
        }
        Chordality::NotChordal(cycle) => {
            let cycle = labels(&closure, cycle);
            let _ = writeln!(text, "chordless cycle {}", cycle.join(" "));
            json["chordless_cycle"] = json!(cycle);
        }
    }
    let weighted = weighted_elimination_ordering(net).map(|o| {
        let pa = to_psi_graphical(net);
        labels(&pa.graph, &o.order)
    });
    if let Some(order) = &weighted {
        let _ = writeln!(text, "weighted elimination ordering {}", order.join(" "));
    }
    json["weighted_elimination_ordering"] = json!(weighted);
    Report { json, text }
}

fn weights_or(
    net: &NetworkInstance,
    flag: Option<&str>,
    from_file: &Option<EdgeWeights>,
) -> Result<EdgeWeights, Error> {
    match (flag, from_file) {
        (Some(text), _) => weights_from_assignments(net.graph(), text),
        (None, Some(w)) => Ok(w.clone()),
        (None, None) => Ok(EdgeWeights::uniform_exact(net.graph().edge_count(), int(1))),
    }
}

pub fn harmonic(file: &NetworkFile, gamma: Option<&str>) -> Result<Report, Error> {
    let net = &file.net;
    let g = net.graph();
    let gamma = weights_or(net, gamma, &file.conductances)?;
    let h = harmonic_solve(net, &gamma)?;
    let generic = is_generic(net, &gamma)?;
    let mut text = String::new();
    let values = values_json(g, &h);
    for (label, v) in values.as_object().into_iter().flatten() {
        let shown = v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
        let _ = writeln!(text, "{label} {shown}");
    }
    let _ = writeln!(text, "generic {generic}");
    Ok(Report {
        json: json!({"values": values, "generic": generic}),
        text,
    })
}

pub fn energies(file: &NetworkFile, gamma: Option<&str>) -> Result<Report, Error> {
    let net = &file.net;
    let g = net.graph();
    let gamma = weights_or(net, gamma, &file.conductances)?;
    let eta = energy_map(net, &gamma)?;
    Ok(Report {
        json: json!({"energies": weights_to_json(g, &eta)}),
        text: weights_text(g, &eta),
    })
}

pub fn critical_points(
    file: &NetworkFile,
    eta: Option<&str>,
    tol: f64,
    max_iter: usize,
    limits: &Limits,
) -> Result<Report, Error> {
    let net = &file.net;
    let g = net.graph();
    let eta = weights_or(net, eta, &file.energies)?;
    let mf = MasterFunction::new(net.clone(), &eta)?;
    let options = SolverOptions { tol, max_iter };
    let solutions = find_critical_points(&mf, &options, limits)?;
    for s in &solutions {
        verify_eta_harmonic(&mf, s)?;
    }
    let sdr = verify_sdr(&solutions, net, limits)?;
    let mut text = format!("{} critical points\n", solutions.len());
    let entries: Vec<Value> = solutions
        .iter()
        .map(|s| {
            let point: Map<String, Value> = net
                .interior()
                .iter()
                .zip(&s.point)
                .map(|(&i, x)| (g.label(i).to_string(), json!(x)))
                .collect();
            let coords: Vec<String> = net
                .interior()
                .iter()
                .zip(&s.point)
                .map(|(&i, x)| format!("{}={x:.12}", g.label(i)))
                .collect();
            let _ = writeln!(
                text,
                "{}  {}  ({} iterations)",
                s.orientation.signature(),
                coords.join(" "),
                s.iterations
            );
            json!({
                "orientation": s.orientation.to_key_map(g),
                "point": point,
                "conductances": weights_to_json(g, &s.conductances),
                "gradient_norm": s.gradient_norm,
                "iterations": s.iterations,
            })
        })
        .collect();
    let _ = writeln!(text, "one per bounded chamber {sdr}");
    Ok(Report {
        json: json!({"count": solutions.len(), "sdr": sdr, "solutions": entries}),
        text,
    })
}
