//! SVG figures: the dimer on a fundamental domain, its quiver, the
//! characteristic polygon and the Hom digraph of a collection.
//!
//! Node positions come from the document when present. Otherwise they are
//! found by relaxing a seeded random start towards the periodic barycentric
//! (Tutte) embedding, so output bytes depend only on the input and seed.

use std::f64::consts::TAU;
use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::collections::VerificationReport;
use crate::dimer::{compute_faces, Color, Dart, DimerModel};
use crate::error::Result;
use crate::lattice::Location;
use crate::matchings::Polygon;
use crate::quiver::Quiver;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Figure {
    /// File stem, e.g. `dimer`.
    pub name: String,
    pub svg: String,
}

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// Node positions in the unit square.
pub fn layout(model: &DimerModel, seed: u64) -> Vec<[f64; 2]> {
    let nodes = model.nodes();
    if nodes.iter().all(|n| n.position.is_some()) {
        return nodes
            .iter()
            .map(|n| {
                let [x, y] = n.position.expect("checked");
                [x.to_f64(), y.to_f64()]
            })
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pos: Vec<[f64; 2]> = nodes.iter().map(|_| [rng.gen(), rng.gen()]).collect();
    // neighbours of every node as (node, translation of its copy)
    let mut nbrs: Vec<Vec<(usize, [f64; 2])>> = vec![Vec::new(); nodes.len()];
    for e in model.edges() {
        let s = [e.shift.x as f64, e.shift.y as f64];
        nbrs[e.black].push((e.white, s));
        nbrs[e.white].push((e.black, [-s[0], -s[1]]));
    }
    for _ in 0..2000 {
        for v in 1..nodes.len() {
            if nbrs[v].is_empty() {
                continue;
            }
            let k = nbrs[v].len() as f64;
            let (mut x, mut y) = (0.0, 0.0);
            for &(u, t) in &nbrs[v] {
                x += pos[u][0] + t[0];
                y += pos[u][1] + t[1];
            }
            pos[v] = [x / k, y / k];
        }
    }
    pos
}

fn to_screen(p: [f64; 2], lo: [f64; 2], scale: f64) -> (f64, f64) {
    (MARGIN + (p[0] - lo[0]) * scale, SIZE - MARGIN - (p[1] - lo[1]) * scale)
}

fn header(out: &mut String) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        out,
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>"#
    );
}

fn footer(out: &mut String) {
    out.push_str("</svg>\n");
}

fn square(out: &mut String, scale: f64) {
    let w = scale;
    let _ = writeln!(
        out,
        r##"<rect x="{MARGIN}" y="{:.2}" width="{w:.2}" height="{w:.2}" fill="none" stroke="#999" stroke-dasharray="4 3"/>"##,
        SIZE - MARGIN - w
    );
}

/// Edges are drawn from the black node to the translated white copy, and
/// once more ending at the white node of the base cell.
pub fn dimer_figure(model: &DimerModel, pos: &[[f64; 2]]) -> Figure {
    let scale = (SIZE - 2.0 * MARGIN) / 2.0;
    let lo = [-0.5, -0.5];
    let mut s = String::new();
    header(&mut s);
    let _ = writeln!(s, r#"<g transform="translate({:.2} {:.2})">"#, 0.5 * scale, -0.5 * scale);
    square(&mut s, scale);
    let _ = writeln!(s, "</g>");
    for e in model.edges() {
        let (b, w) = (pos[e.black], pos[e.white]);
        let (sx, sy) = (e.shift.x as f64, e.shift.y as f64);
        for (p, q) in [(b, [w[0] + sx, w[1] + sy]), ([b[0] - sx, b[1] - sy], w)] {
            let (x1, y1) = to_screen(p, lo, scale);
            let (x2, y2) = to_screen(q, lo, scale);
            let _ = writeln!(
                s,
                r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1.5"><title>{}</title></line>"#,
                e.id
            );
        }
    }
    for (n, node) in model.nodes().iter().enumerate() {
        let (x, y) = to_screen(pos[n], lo, scale);
        let fill = match node.color {
            Color::Black => "black",
            Color::White => "white",
        };
        let _ = writeln!(
            s,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="6" fill="{fill}" stroke="black" stroke-width="1.5"/>"#
        );
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, x + 8.0, y - 8.0, node.id);
    }
    footer(&mut s);
    Figure {
        name: "dimer".into(),
        svg: s,
    }
}

/// Face centroids in the face's own lifted coordinates.
fn face_centroids(model: &DimerModel, pos: &[[f64; 2]]) -> Result<Vec<[f64; 2]>> {
    let faces = compute_faces(model)?;
    Ok(faces
        .faces
        .iter()
        .map(|f| {
            let k = f.darts.len() as f64;
            let (mut x, mut y) = (0.0, 0.0);
            for (d, off) in f.darts.iter().zip(&f.offsets) {
                let p = pos[d.tail(model)];
                x += p[0] + off.x as f64;
                y += p[1] + off.y as f64;
            }
            [x / k, y / k]
        })
        .collect())
}

/// Each arrow is drawn across its dual edge, between the copies of its
/// source and target faces adjacent to that edge.
pub fn quiver_figure(model: &DimerModel, quiver: &Quiver, pos: &[[f64; 2]]) -> Result<Figure> {
    let centroids = face_centroids(model, pos)?;
    let scale = (SIZE - 2.0 * MARGIN) / 2.0;
    let lo = [-0.5, -0.5];
    let mut s = String::new();
    header(&mut s);
    for e in model.edges() {
        let (b, w) = (pos[e.black], pos[e.white]);
        let (x1, y1) = to_screen(b, lo, scale);
        let (x2, y2) = to_screen([w[0] + e.shift.x as f64, w[1] + e.shift.y as f64], lo, scale);
        let _ = writeln!(
            s,
            r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#bbb"/>"##
        );
    }
    for a in &quiver.arrows {
        let e = &model.edges()[a.id];
        let bw = Dart { edge: a.id, forward: true };
        let wb = Dart { edge: a.id, forward: false };
        let (ob, ow) = (quiver.faces.offset_of(bw), quiver.faces.offset_of(wb));
        let src = centroids[a.source];
        let tgt = centroids[a.target];
        let p = [src[0] + (e.shift.x - ow.x) as f64, src[1] + (e.shift.y - ow.y) as f64];
        let q = [tgt[0] - ob.x as f64, tgt[1] - ob.y as f64];
        let (x1, y1) = to_screen(p, lo, scale);
        let (x2, y2) = to_screen(q, lo, scale);
        let _ = writeln!(
            s,
            r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#c33" stroke-width="1.5" marker-end="url(#arrow)"><title>a{} : {} -> {}</title></line>"##,
            a.id, a.source, a.target
        );
    }
    for (f, c) in centroids.iter().enumerate() {
        let (x, y) = to_screen(*c, lo, scale);
        let _ = writeln!(
            s,
            r##"<circle cx="{x:.2}" cy="{y:.2}" r="9" fill="#fee" stroke="#c33"/><text x="{:.2}" y="{:.2}" text-anchor="middle">{f}</text>"##,
            x,
            y + 4.0
        );
    }
    footer(&mut s);
    Ok(Figure {
        name: "quiver".into(),
        svg: s,
    })
}

/// Boundary points are filled circles, interior points hollow squares;
/// labels give multiplicities.
pub fn polygon_figure(polygon: &Polygon) -> Figure {
    let xs = polygon.vertices.iter().map(|v| v.x);
    let ys = polygon.vertices.iter().map(|v| v.y);
    let (x0, x1) = (xs.clone().min().unwrap_or(0) - 1, xs.max().unwrap_or(0) + 1);
    let (y0, y1) = (ys.clone().min().unwrap_or(0) - 1, ys.max().unwrap_or(0) + 1);
    let span = (x1 - x0).max(y1 - y0).max(1) as f64;
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let lo = [x0 as f64, y0 as f64];
    let mut s = String::new();
    header(&mut s);
    for x in x0..=x1 {
        for y in y0..=y1 {
            let (sx, sy) = to_screen([x as f64, y as f64], lo, scale);
            let _ = writeln!(s, r##"<circle cx="{sx:.2}" cy="{sy:.2}" r="1.5" fill="#bbb"/>"##);
        }
    }
    let pts: Vec<String> = polygon
        .vertices
        .iter()
        .map(|v| {
            let (x, y) = to_screen([v.x as f64, v.y as f64], lo, scale);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        s,
        r##"<polygon points="{}" fill="#eef" stroke="black" stroke-width="1.5"/>"##,
        pts.join(" ")
    );
    for (&p, &mult) in &polygon.multiplicities {
        let (x, y) = to_screen([p.x as f64, p.y as f64], lo, scale);
        if polygon.locate(p) == Location::Interior {
            let _ = writeln!(
                s,
                r##"<rect class="interior" x="{:.2}" y="{:.2}" width="12" height="12" fill="white" stroke="#36c" stroke-width="2"/>"##,
                x - 6.0,
                y - 6.0
            );
        } else {
            let _ = writeln!(s, r#"<circle class="boundary" cx="{x:.2}" cy="{y:.2}" r="6" fill="black"/>"#);
        }
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{mult}</text>"#, x + 9.0, y - 9.0);
    }
    footer(&mut s);
    Figure {
        name: "polygon".into(),
        svg: s,
    }
}

/// Bundles on a circle in exceptional order; an arrow `v → w` labelled
/// `dim Hom(E_v, E_w)` for every nonzero off-diagonal entry.
pub fn hom_digraph_figure(report: &VerificationReport) -> Figure {
    let n = report.hom.len();
    let order: Vec<usize> = if report.order.len() == n {
        report.order.clone()
    } else {
        (0..n).collect()
    };
    let mut place = vec![(0.0, 0.0); n];
    let r = SIZE / 2.0 - MARGIN;
    for (k, &v) in order.iter().enumerate() {
        let t = TAU * k as f64 / n.max(1) as f64 - TAU / 4.0;
        place[v] = (SIZE / 2.0 + r * t.cos(), SIZE / 2.0 + r * t.sin());
    }
    let mut s = String::new();
    header(&mut s);
    for v in 0..n {
        for w in 0..n {
            if v == w || report.hom[v][w] == 0 {
                continue;
            }
            let ((x1, y1), (x2, y2)) = (place[v], place[w]);
            let (dx, dy) = (x2 - x1, y2 - y1);
            let len = (dx * dx + dy * dy).sqrt().max(1.0);
            let (ux, uy) = (dx / len, dy / len);
            let _ = writeln!(
                s,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" marker-end="url(#arrow)"/>"#,
                x1 + 14.0 * ux,
                y1 + 14.0 * uy,
                x2 - 14.0 * ux,
                y2 - 14.0 * uy
            );
            let _ = writeln!(
                s,
                r##"<text x="{:.2}" y="{:.2}" fill="#36c">{}</text>"##,
                x1 + 0.5 * dx - 6.0 * uy,
                y1 + 0.5 * dy + 6.0 * ux,
                report.hom[v][w]
            );
        }
    }
    for (k, &v) in order.iter().enumerate() {
        let (x, y) = place[v];
        let _ = writeln!(
            s,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="12" fill="white" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">E{v}</text><text x="{:.2}" y="{:.2}" font-size="10">#{k}</text>"#,
            y + 4.0,
            x + 14.0,
            y + 18.0
        );
    }
    footer(&mut s);
    Figure {
        name: "hom".into(),
        svg: s,
    }
}

/// All figures for a model; the Hom digraph needs a verification report.
pub fn emit_figures(
    model: &DimerModel,
    polygon: &Polygon,
    quiver: &Quiver,
    report: Option<&VerificationReport>,
    seed: u64,
) -> Result<Vec<Figure>> {
    let pos = layout(model, seed);
    let mut out = vec![dimer_figure(model, &pos), quiver_figure(model, quiver, &pos)?, polygon_figure(polygon)];
    if let Some(r) = report {
        out.push(hom_digraph_figure(r));
    }
    Ok(out)
}
