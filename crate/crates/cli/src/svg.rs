//! Minimal SVG emitter. Geometry stays rational until the final mapping to
//! pixels, which is the only floating-point step.

use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};
use tropnet::{Point, Rational};

pub const PANEL: u32 = 800;
pub const MARGIN: u32 = 20;

const STYLE: &str = "\
.frame{fill:none;stroke:#999;stroke-width:1}
.curve{fill:none;stroke:#1f4e9c;stroke-width:2}
.ray{fill:none;stroke:#1f4e9c;stroke-width:2;stroke-dasharray:6 3}
.vertex{fill:#1f4e9c}
.newton{fill:#eef2f8;stroke:#333;stroke-width:2}
.cell{fill:none;stroke:#333;stroke-width:1.5}
.point{fill:#c0392b}
.hypersurface{fill:none;stroke:#aaa;stroke-width:1.5}
.boundary{fill:none;stroke:#c0392b;stroke-width:2.5}
";

/// Maps the rational box `[lo, hi]` onto a `width × height` pixel box with a
/// margin, y pointing up.
#[derive(Debug, Clone)]
pub struct Viewport {
    pub lo: [Rational; 2],
    pub hi: [Rational; 2],
    pub width: u32,
    pub height: u32,
    pub margin: u32,
}

impl Viewport {
    pub fn new(lo: [Rational; 2], hi: [Rational; 2]) -> Self {
        Viewport { lo, hi, width: PANEL, height: PANEL, margin: MARGIN }
    }

    /// The smallest square box around `points`, padded by `pad` on each side.
    pub fn around(points: &[Point], pad: &Rational) -> Self {
        let mut lo = [points[0][0].clone(), points[0][1].clone()];
        let mut hi = lo.clone();
        for p in points {
            for k in 0..2 {
                if p[k] < lo[k] {
                    lo[k] = p[k].clone();
                }
                if p[k] > hi[k] {
                    hi[k] = p[k].clone();
                }
            }
        }
        let side = (&hi[0] - &lo[0]).max(&hi[1] - &lo[1]) + pad * Rational::from_integer(2.into());
        let two = Rational::from_integer(2.into());
        let centre = [(&lo[0] + &hi[0]) / &two, (&lo[1] + &hi[1]) / &two];
        let half = &side / &two;
        Viewport::new(
            [&centre[0] - &half, &centre[1] - &half],
            [&centre[0] + &half, &centre[1] + &half],
        )
    }

    fn map(&self, p: &[Rational]) -> (f64, f64) {
        let span = |k: usize, pixels: u32| {
            let inner = Rational::from_integer((pixels - 2 * self.margin).into());
            let t = (&p[k] - &self.lo[k]) / (&self.hi[k] - &self.lo[k]);
            (t * inner).to_f64().unwrap_or(f64::NAN)
        };
        let x = self.margin as f64 + span(0, self.width);
        let y = (self.height - self.margin) as f64 - span(1, self.height);
        (x, y)
    }

    /// The box corners, counter-clockwise.
    pub fn frame(&self) -> Vec<Point> {
        vec![
            vec![self.lo[0].clone(), self.lo[1].clone()],
            vec![self.hi[0].clone(), self.lo[1].clone()],
            vec![self.hi[0].clone(), self.hi[1].clone()],
            vec![self.lo[0].clone(), self.hi[1].clone()],
        ]
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        (0..2).all(|k| p[k] >= self.lo[k] && p[k] <= self.hi[k])
    }

    /// The part of `{from + s·dir : s ∈ [s_lo, s_hi]}` inside the box, where a
    /// missing bound is infinite. Exact Liang-Barsky clipping.
    pub fn clip(
        &self,
        from: &[Rational],
        dir: &[Rational],
        s_lo: Option<Rational>,
        s_hi: Option<Rational>,
    ) -> Option<[Point; 2]> {
        let (mut s_lo, mut s_hi) = (s_lo, s_hi);
        for k in 0..2 {
            if dir[k].is_zero() {
                if from[k] < self.lo[k] || from[k] > self.hi[k] {
                    return None;
                }
                continue;
            }
            let a = (&self.lo[k] - &from[k]) / &dir[k];
            let b = (&self.hi[k] - &from[k]) / &dir[k];
            let (enter, leave) = if dir[k].is_positive() { (a, b) } else { (b, a) };
            if s_lo.as_ref().is_none_or(|s| enter > *s) {
                s_lo = Some(enter);
            }
            if s_hi.as_ref().is_none_or(|s| leave < *s) {
                s_hi = Some(leave);
            }
        }
        let (s_lo, s_hi) = (s_lo?, s_hi?);
        if s_lo > s_hi {
            return None;
        }
        let at = |s: &Rational| from.iter().zip(dir).map(|(p, d)| p + d * s).collect::<Point>();
        Some([at(&s_lo), at(&s_hi)])
    }
}

#[derive(Debug, Clone)]
pub enum Shape {
    Polyline(Vec<Point>),
    Polygon(Vec<Point>),
    Dot(Point),
}

/// Shapes drawn with one style class.
#[derive(Debug, Clone)]
pub struct Layer {
    pub class: &'static str,
    pub shapes: Vec<Shape>,
}

#[derive(Debug, Clone)]
pub struct SvgScene {
    pub viewport: Viewport,
    pub layers: Vec<Layer>,
}

impl SvgScene {
    pub fn new(viewport: Viewport) -> Self {
        SvgScene { viewport, layers: Vec::new() }
    }

    pub fn layer(&mut self, class: &'static str, shapes: Vec<Shape>) {
        self.layers.push(Layer { class, shapes });
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

fn points_attr(vp: &Viewport, pts: &[Point], dx: u32) -> String {
    pts.iter()
        .map(|p| {
            let (x, y) = vp.map(p);
            format!("{},{}", num(x + dx as f64), num(y))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders the scenes left to right in one document.
pub fn render(scenes: &[SvgScene]) -> String {
    let width: u32 = scenes.iter().map(|s| s.viewport.width).sum();
    let height = scenes.iter().map(|s| s.viewport.height).max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "<style>\n{STYLE}</style>");
    let mut dx = 0;
    for scene in scenes {
        let vp = &scene.viewport;
        let _ = writeln!(out, "<g>");
        for layer in &scene.layers {
            let _ = writeln!(out, r#"<g class="{}">"#, layer.class);
            for shape in &layer.shapes {
                match shape {
                    Shape::Polyline(pts) => {
                        let _ = writeln!(out, r#"<polyline points="{}"/>"#, points_attr(vp, pts, dx));
                    }
                    Shape::Polygon(pts) => {
                        let _ = writeln!(out, r#"<polygon points="{}"/>"#, points_attr(vp, pts, dx));
                    }
                    Shape::Dot(p) => {
                        let (x, y) = vp.map(p);
                        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="4"/>"#, num(x + dx as f64), num(y));
                    }
                }
            }
            let _ = writeln!(out, "</g>");
        }
        let _ = writeln!(out, "</g>");
        dx += vp.width;
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use tropnet::rational::{int, point};

    fn unit_box() -> Viewport {
        Viewport::new([int(-1), int(-1)], [int(1), int(1)])
    }

    #[test]
    fn corners_map_inside_margin_with_y_flipped() {
        let vp = unit_box();
        assert_eq!(vp.map(&point(&[-1, -1])), (20.0, 780.0));
        assert_eq!(vp.map(&point(&[1, 1])), (780.0, 20.0));
        assert_eq!(vp.map(&point(&[0, 0])), (400.0, 400.0));
    }

    #[test]
    fn clip_rays_and_segments() {
        let vp = unit_box();
        let ray = vp.clip(&point(&[0, 0]), &point(&[1, 1]), Some(int(0)), None).unwrap();
        assert_eq!(ray, [point(&[0, 0]), point(&[1, 1])]);
        let line = vp.clip(&point(&[0, 0]), &point(&[1, 0]), None, None).unwrap();
        assert_eq!(line, [point(&[-1, 0]), point(&[1, 0])]);
        assert!(vp.clip(&point(&[2, 2]), &point(&[1, 0]), Some(int(0)), None).is_none());
        assert!(vp.clip(&point(&[0, 2]), &point(&[1, 0]), None, None).is_none());
        let seg = vp.clip(&point(&[-3, 0]), &point(&[1, 0]), Some(int(0)), Some(int(1)));
        assert!(seg.is_none());
    }

    #[test]
    fn render_is_deterministic() {
        let mut scene = SvgScene::new(unit_box());
        scene.layer("curve", vec![Shape::Polyline(vec![point(&[-1, 0]), point(&[1, 0])])]);
        scene.layer("vertex", vec![Shape::Dot(point(&[0, 0]))]);
        let a = render(&[scene.clone(), scene.clone()]);
        assert_eq!(a, render(&[scene.clone(), scene]));
        assert!(a.contains(r#"<polyline points="20.00,400.00 780.00,400.00"/>"#));
        assert!(a.contains(r#"<circle cx="1200.00" cy="400.00" r="4"/>"#));
        assert!(a.contains(r#"width="1600" height="800""#));
    }
}
