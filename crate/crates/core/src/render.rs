//! Static SVG drawings of an instance, its cover and the rays shot.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::hullcover::RayRecord;
use crate::model::{Cover, Instance, Region};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 20.0;
const REGION_FILL: &str = "#3b7dd8";
const RAY_GRAY: &str = "#888888";
const RAY_RED: &str = "#d62728";

/// A shot ray in drawing coordinates, as stored in trace files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrawnRay {
    pub from: [f64; 2],
    pub to: [f64; 2],
    pub merged: bool,
}

impl From<&RayRecord> for DrawnRay {
    fn from(r: &RayRecord) -> Self {
        let (fx, fy) = r.from.to_f64();
        let (tx, ty) = r.to.to_f64();
        DrawnRay { from: [fx, fy], to: [tx, ty], merged: r.merged }
    }
}

/// Trace file contents: rays in the order they were shot.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Trace {
    pub rays: Vec<DrawnRay>,
}

impl Trace {
    pub fn from_records(records: &[RayRecord]) -> Self {
        Trace { rays: records.iter().map(DrawnRay::from).collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}

/// Maps instance coordinates to the canvas, y pointing up.
struct View {
    xmin: f64,
    ymax: f64,
    scale: f64,
    height: f64,
}

impl View {
    fn fit(points: impl Iterator<Item = (f64, f64)>) -> View {
        let (mut xmin, mut ymin, mut xmax, mut ymax) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for (x, y) in points {
            xmin = xmin.min(x);
            ymin = ymin.min(y);
            xmax = xmax.max(x);
            ymax = ymax.max(y);
        }
        if xmin > xmax {
            (xmin, ymin, xmax, ymax) = (0.0, 0.0, 1.0, 1.0);
        }
        let span = (xmax - xmin).max(ymax - ymin).max(1.0);
        let scale = (WIDTH - 2.0 * MARGIN) / span;
        View { xmin, ymax, scale, height: (ymax - ymin) * scale + 2.0 * MARGIN }
    }

    fn x(&self, x: f64) -> f64 {
        MARGIN + (x - self.xmin) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        MARGIN + (self.ymax - y) * self.scale
    }

    fn pt(&self, (x, y): (f64, f64)) -> String {
        format!("{:.2},{:.2}", self.x(x), self.y(y))
    }
}

fn region_points(region: &Region) -> Vec<(f64, f64)> {
    match region {
        Region::Polygon { vertices } => vertices.vertices().iter().map(|p| p.to_f64()).collect(),
        Region::Box { bbox } => bbox.corners().iter().map(|p| p.to_f64()).collect(),
        Region::Circle { circle } => {
            vec![(circle.cx - circle.r, circle.cy - circle.r), (circle.cx + circle.r, circle.cy + circle.r)]
        }
    }
}

/// Trees in black, cover regions as translucent shapes (one element per
/// region), rays as numbered lines: gray, or red when they caused a merge.
pub fn render_svg(instance: &Instance, cover: Option<&Cover>, rays: &[DrawnRay]) -> String {
    let tree_points = instance.trees.iter().flat_map(|t| t.vertices.iter().map(|p| p.to_f64()));
    let region_pts = cover.into_iter().flat_map(|c| c.regions.iter().flat_map(region_points));
    let ray_pts = rays.iter().flat_map(|r| [(r.from[0], r.from[1]), (r.to[0], r.to[1])]);
    let view = View::fit(tree_points.chain(region_pts).chain(ray_pts));

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{:.0}" viewBox="0 0 {WIDTH:.0} {:.0}">"#,
        view.height, view.height
    );
    let _ = writeln!(svg, r#"<rect x="0" y="0" width="100%" height="100%" fill="white"/>"#);

    if let Some(cover) = cover {
        let _ = writeln!(svg, r#"<g id="regions" fill="{REGION_FILL}" fill-opacity="0.2" stroke="{REGION_FILL}">"#);
        for region in &cover.regions {
            match region {
                Region::Circle { circle } => {
                    let _ = writeln!(
                        svg,
                        r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}"/>"#,
                        view.x(circle.cx),
                        view.y(circle.cy),
                        circle.r * view.scale
                    );
                }
                _ => {
                    let pts: Vec<String> = region_points(region).into_iter().map(|p| view.pt(p)).collect();
                    let _ = writeln!(svg, r#"<polygon points="{}"/>"#, pts.join(" "));
                }
            }
        }
        let _ = writeln!(svg, "</g>");
    }

    let _ = writeln!(svg, r#"<g id="trees" stroke="black" fill="black">"#);
    for tree in &instance.trees {
        if tree.edges.is_empty() {
            for &v in &tree.vertices {
                let (x, y) = v.to_f64();
                let _ = writeln!(svg, r#"<circle cx="{:.2}" cy="{:.2}" r="2"/>"#, view.x(x), view.y(y));
            }
            continue;
        }
        let mut d = String::new();
        for &[a, b] in &tree.edges {
            let _ = write!(d, "M{} L{} ", view.pt(tree.vertices[a].to_f64()), view.pt(tree.vertices[b].to_f64()));
        }
        let _ = writeln!(svg, r#"<path d="{}" fill="none"/>"#, d.trim_end());
    }
    let _ = writeln!(svg, "</g>");

    if !rays.is_empty() {
        let _ = writeln!(svg, r#"<g id="rays" font-family="sans-serif" font-size="10">"#);
        for (i, ray) in rays.iter().enumerate() {
            let color = if ray.merged { RAY_RED } else { RAY_GRAY };
            let (x1, y1, x2, y2) = (view.x(ray.from[0]), view.y(ray.from[1]), view.x(ray.to[0]), view.y(ray.to[1]));
            let _ = writeln!(svg, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{color}"/>"#);
            let _ = writeln!(
                svg,
                r#"<text x="{:.2}" y="{:.2}" fill="{color}">{}</text>"#,
                (x1 + x2) / 2.0,
                (y1 + y2) / 2.0,
                i + 1
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    svg.push_str("</svg>\n");
    svg
}
