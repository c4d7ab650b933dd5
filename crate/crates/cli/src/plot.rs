use std::fmt::Write as _;

use dirichlet_core::orientations::{chamber_point, enumerate_class};
use dirichlet_core::rational::to_f64;
use dirichlet_core::{ClassMode, Error, Limits, NetworkInstance};

const SIZE: f64 = 400.0;
const MARGIN: f64 = 40.0;

/// `a x + b y = c`.
#[derive(Debug, Clone, Copy)]
struct Line {
    a: f64,
    b: f64,
    c: f64,
}

impl Line {
    fn eval(&self, (x, y): (f64, f64)) -> f64 {
        self.a * x + self.b * y - self.c
    }
}

/// The line of each edge in the `(x, y)` plane of the two interior values.
fn lines(net: &NetworkInstance) -> Vec<Line> {
    let g = net.graph();
    g.edges()
        .iter()
        .map(|&(p, q)| match (net.interior_position(p), net.interior_position(q)) {
            (Some(_), Some(_)) => Line { a: 1.0, b: -1.0, c: 0.0 },
            (Some(i), None) | (None, Some(i)) => {
                let j = if net.is_boundary(p) { p } else { q };
                let u = to_f64(net.boundary_value(j).expect("boundary"));
                if i == 0 {
                    Line { a: 1.0, b: 0.0, c: u }
                } else {
                    Line { a: 0.0, b: 1.0, c: u }
                }
            }
            (None, None) => unreachable!("boundary nodes are independent"),
        })
        .collect()
}

/// Sutherland–Hodgman: the part of `polygon` where `sign · line ≥ 0`.
fn clip(polygon: &[(f64, f64)], line: &Line, sign: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for (k, &p) in polygon.iter().enumerate() {
        let q = polygon[(k + 1) % polygon.len()];
        let (fp, fq) = (sign * line.eval(p), sign * line.eval(q));
        if fp >= 0.0 {
            out.push(p);
        }
        if (fp > 0.0 && fq < 0.0) || (fp < 0.0 && fq > 0.0) {
            let t = fp / (fp - fq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

/// Endpoints of `line` on the square `[lo, hi]²`.
fn segment(line: &Line, lo: f64, hi: f64) -> ((f64, f64), (f64, f64)) {
    if line.b == 0.0 {
        let x = line.c / line.a;
        ((x, lo), (x, hi))
    } else if line.a == 0.0 {
        let y = line.c / line.b;
        ((lo, y), (hi, y))
    } else {
        let y = |x: f64| (line.c - line.a * x) / line.b;
        ((lo, y(lo)), (hi, y(hi)))
    }
}

/// SVG of the arrangement on `[min u - 1, max u + 1]²` with the bounded
/// chambers shaded and each line labelled by its edge.
pub fn plot(net: &NetworkInstance) -> Result<String, Error> {
    if net.n() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: net.n(),
        });
    }
    let g = net.graph();
    let values: Vec<f64> = net.boundary_values().iter().map(to_f64).collect();
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min) - 1.0;
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max) + 1.0;
    let scale = SIZE / (hi - lo);
    let px = |(x, y): (f64, f64)| (MARGIN + (x - lo) * scale, MARGIN + (hi - y) * scale);
    let lines = lines(net);

    let total = SIZE + 2.0 * MARGIN;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total}" height="{total}" viewBox="0 0 {total} {total}">"#
    );
    let _ = writeln!(
        svg,
        r##"<rect class="frame" x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}" fill="none" stroke="#999"/>"##
    );

    let compatible = enumerate_class(net, ClassMode::Compatible, &Limits::default())?;
    for o in &compatible {
        let p = chamber_point(net, o)?;
        let inside = (to_f64(&p.coordinates[0]), to_f64(&p.coordinates[1]));
        let mut polygon = vec![(lo, lo), (hi, lo), (hi, hi), (lo, hi)];
        for line in &lines {
            polygon = clip(&polygon, line, line.eval(inside).signum());
        }
        let points: Vec<String> = polygon
            .iter()
            .map(|&q| {
                let (x, y) = px(q);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            svg,
            r##"<polygon class="bounded" points="{}" fill="#9ecae1" fill-opacity="0.6"><title>{}</title></polygon>"##,
            points.join(" "),
            o.signature()
        );
    }

    for (e, line) in lines.iter().enumerate() {
        let (a, b) = segment(line, lo, hi);
        let ((x1, y1), (x2, y2)) = (px(a), px(b));
        let key = g.edge_key(e);
        let _ = writeln!(
            svg,
            r#"<line class="hyperplane" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black"><title>{key}</title></line>"#
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.3}" y="{:.3}" font-size="12">{key}</text>"#,
            x2 + 3.0,
            y2 - 3.0
        );
    }

    let (xl, yl) = (g.label(net.interior()[0]), g.label(net.interior()[1]));
    let _ = writeln!(
        svg,
        r#"<text x="{:.3}" y="{:.3}" font-size="12" text-anchor="middle">{xl}</text>"#,
        MARGIN + SIZE / 2.0,
        total - 10.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="12" y="{:.3}" font-size="12" text-anchor="middle">{yl}</text>"#,
        MARGIN + SIZE / 2.0
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}
