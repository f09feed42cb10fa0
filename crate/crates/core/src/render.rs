//! Presentation-only SVG rendering of constructions. Layout constants are
//! defaults; nothing here feeds back into any count.

use crate::calculus::{Circle, TripartiteSpec};
use crate::error::Result;

/// Stroke colors per circle pair: edges between M and N, N and P, M and P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairColors {
    pub mn: String,
    pub np: String,
    pub mp: String,
}

impl Default for PairColors {
    fn default() -> Self {
        PairColors {
            mn: "red".to_string(),
            np: "green".to_string(),
            mp: "orange".to_string(),
        }
    }
}

impl PairColors {
    fn for_pair(&self, a: Circle, b: Circle) -> &str {
        match (a.min(b), a.max(b)) {
            (Circle::M, Circle::N) => &self.mn,
            (Circle::N, Circle::P) => &self.np,
            (Circle::M, Circle::P) => &self.mp,
            _ => unreachable!("distinct circles"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// Three circles around a common center.
    Cyclic,
    /// Two small circles inside the big one (K_{2,2,n} style).
    Nested,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub layout: Layout,
    pub colors: PairColors,
    pub width: u32,
    pub height: u32,
}

impl RenderSpec {
    pub fn new(layout: Layout) -> Self {
        RenderSpec {
            layout,
            colors: PairColors::default(),
            width: 640,
            height: 640,
        }
    }
}

struct Placed {
    center: (f64, f64),
    radius: f64,
    vertices: Vec<(f64, f64)>,
}

fn place_circle(center: (f64, f64), radius: f64, count: u32, angle0: f64) -> Placed {
    let vertices = (0..count)
        .map(|k| {
            let t = angle0 + std::f64::consts::TAU * k as f64 / count as f64;
            (center.0 + radius * t.cos(), center.1 + radius * t.sin())
        })
        .collect();
    Placed {
        center,
        radius,
        vertices,
    }
}

fn layout_circles(spec: &TripartiteSpec, render: &RenderSpec) -> [Placed; 3] {
    let (w, h) = (render.width as f64, render.height as f64);
    let c = (w / 2.0, h / 2.0);
    match render.layout {
        Layout::Cyclic => {
            let orbit = w.min(h) * 0.30;
            let r = w.min(h) * 0.14;
            let centers = [-90.0f64, 150.0, 30.0].map(|deg| {
                let t = deg.to_radians();
                (c.0 + orbit * t.cos(), c.1 + orbit * t.sin())
            });
            [
                place_circle(centers[0], r, spec.m(), -0.5),
                place_circle(centers[1], r, spec.n(), 0.7),
                place_circle(centers[2], r, spec.p(), 2.0),
            ]
        }
        Layout::Nested => {
            let outer_r = w.min(h) * 0.44;
            let inner_r = outer_r * 0.22;
            let dx = outer_r * 0.45;
            [
                place_circle((c.0 - dx, c.1), inner_r, spec.m(), 0.0),
                place_circle((c.0 + dx, c.1), inner_r, spec.n(), 0.0),
                place_circle(c, outer_r, spec.p(), -1.3),
            ]
        }
    }
}

/// Render a tripartite-circle drawing schematically: one `circle` element
/// per part, one square marker per vertex, and one straight `path` per edge
/// colored by circle pair.
pub fn render_drawing(spec: &TripartiteSpec, render: &RenderSpec) -> String {
    let placed = layout_circles(spec, render);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
        w = render.width,
        h = render.height
    ));
    // edges first so markers draw on top
    for (ca, cb) in [
        (Circle::M, Circle::N),
        (Circle::N, Circle::P),
        (Circle::P, Circle::M),
    ] {
        let color = render.colors.for_pair(ca, cb);
        let pa = &placed[circle_index(ca)];
        let pb = &placed[circle_index(cb)];
        for &(x1, y1) in &pa.vertices {
            for &(x2, y2) in &pb.vertices {
                out.push_str(&format!(
                    "  <path d=\"M {x1:.2} {y1:.2} L {x2:.2} {y2:.2}\" stroke=\"{color}\" stroke-width=\"1\" fill=\"none\" opacity=\"0.8\"/>\n"
                ));
            }
        }
    }
    for (idx, c) in Circle::ALL.into_iter().enumerate() {
        let p = &placed[idx];
        out.push_str(&format!(
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{:.2}\" stroke=\"black\" stroke-width=\"1.5\" fill=\"none\"/>\n",
            p.center.0, p.center.1, p.radius
        ));
        for (k, &(x, y)) in p.vertices.iter().enumerate() {
            out.push_str(&format!(
                "  <rect x=\"{:.2}\" y=\"{:.2}\" width=\"5\" height=\"5\" fill=\"black\"><title>{}{}</title></rect>\n",
                x - 2.5,
                y - 2.5,
                c.name(),
                k + 1
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}

fn circle_index(c: Circle) -> usize {
    match c {
        Circle::M => 0,
        Circle::N => 1,
        Circle::P => 2,
    }
}

/// Cyclic-layout rendering of the linear construction for K_{m,n,p}.
pub fn render_linear(spec: &TripartiteSpec, width: u32, height: u32) -> String {
    let mut rs = RenderSpec::new(Layout::Cyclic);
    rs.width = width;
    rs.height = height;
    render_drawing(spec, &rs)
}

/// Nested-layout rendering of the K_{2,2,n} construction.
pub fn render_k22n(n: u32, width: u32, height: u32) -> Result<String> {
    let spec = TripartiteSpec::new(2, 2, n)?;
    let mut rs = RenderSpec::new(Layout::Nested);
    rs.width = width;
    rs.height = height;
    Ok(render_drawing(&spec, &rs))
}
