mod svg;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use num_traits::Signed;
use serde_json::json;
use thiserror::Error;
use tropnet::acceptance::{self, CriterionResult};
use tropnet::io::{network_to_json, parse_expression, parse_network_json, Expression};
use tropnet::network::{layer_count_bound, layer_polytopes, network_to_tropical, tropical_to_network, Network};
use tropnet::oracle::{
    exact_region_count, grid_region_count, level_set_segments, GridBox, PlFunction, Schedule,
};
use tropnet::polytope::dual_subdivision;
use tropnet::rational::{format_rational, parse_rational, sub};
use tropnet::regions::{decision_boundary, hypersurface, poly_region_count, region_bound, CurveEdge, RegionReport, TropicalCurve};
use tropnet::{Point, Rational};

use svg::{render, Shape, SvgScene, Viewport};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Tropnet(#[from] tropnet::Error),
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{0} of {1} acceptance criteria failed")]
    Failed(usize, usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Tropical geometry of integer-weight ReLU networks.
#[derive(Debug, Parser)]
#[command(name = "tropnet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the tropical rational map computed by a network.
    Convert {
        network: PathBuf,
        /// Drop monomials that never attain the maximum.
        #[arg(long)]
        canonical: bool,
    },
    /// Build a network computing a tropical rational function.
    Synth {
        #[arg(long)]
        expr: PathBuf,
        /// Write the network here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Upper bound on the number of linear regions of a network.
    Bound {
        network: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Linear region counts and bounds.
    #[command(group(ArgGroup::new("input").required(true).args(["expr", "network"])))]
    Regions {
        #[arg(long)]
        expr: Option<PathBuf>,
        network: Option<PathBuf>,
        /// Also count regions in a box by flood fill and by polygon clipping (two variables only).
        #[arg(long)]
        oracle: bool,
        /// Half-width of the oracle box `[-r, r]²`.
        #[arg(long, default_value = "10", value_parser = rational_arg)]
        radius: Rational,
    },
    /// Draw a plane tropical curve next to its dual subdivision.
    Curve {
        #[arg(long)]
        expr: PathBuf,
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, value_parser = rational_arg)]
        range: Vec<Rational>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw the decision boundary of a network with two inputs.
    Boundary {
        network: PathBuf,
        #[arg(long, allow_negative_numbers = true, value_parser = rational_arg)]
        threshold: Rational,
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, value_parser = rational_arg, default_values = ["-10", "10"])]
        range: Vec<Rational>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Vertex lists of the lifted polytopes of one node, or of every node in a layer.
    Polytopes {
        network: PathBuf,
        /// One-based layer index.
        #[arg(long)]
        layer: usize,
        /// One-based node index.
        #[arg(long)]
        node: Option<usize>,
    },
    /// Run the acceptance suite.
    Verify {
        /// Write a JUnit XML summary here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

fn load_network(path: &Path) -> Result<Network> {
    Ok(parse_network_json(&read(path)?)?)
}

fn load_expression(path: &Path) -> Result<Expression> {
    Ok(parse_expression(&read(path)?, None)?)
}

fn plane_box(range: &[Rational]) -> Result<Viewport> {
    let (a, b) = (&range[0], &range[1]);
    if a >= b {
        return Err(CliError::Usage(format!("empty range {a} .. {b}")));
    }
    Ok(Viewport::new([a.clone(), a.clone()], [b.clone(), b.clone()]))
}

fn json_text(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn convert(path: &Path, canonical: bool) -> Result<()> {
    let net = load_network(path)?;
    let map = network_to_tropical(&net)?;
    println!("input dimension {}, {} output(s)", map.dim(), map.len());
    for (i, r) in map.components().iter().enumerate() {
        let r = if canonical { r.canonicalize()? } else { r.clone() };
        println!("output {}", i + 1);
        println!("  f = {}", r.num());
        println!("  g = {}", r.den());
        println!("  monomials: f {}, g {}", r.num().len(), r.den().len());
    }
    Ok(())
}

fn synth(expr: &Path, out: Option<&Path>) -> Result<()> {
    let r = load_expression(expr)?.into_rational()?;
    let net = tropical_to_network(&r)?;
    let bound = layer_count_bound(r.num().len(), r.den().len());
    let report = format!(
        "monomials: f {}, g {}\nlayers: {} (bound {})\nwidths: {:?}",
        r.num().len(),
        r.den().len(),
        net.depth(),
        bound,
        net.widths()
    );
    match out {
        Some(path) => {
            write(path, &network_to_json(&net))?;
            println!("{report}");
        }
        None => {
            print!("{}", network_to_json(&net));
            eprintln!("{report}");
        }
    }
    Ok(())
}

fn bound(path: &Path, as_json: bool) -> Result<()> {
    let net = load_network(path)?;
    let report = region_bound(&net)?;
    if as_json {
        println!("{}", json_text(&json!(report)));
        return Ok(());
    }
    println!("{:<6} {:>6} {:>10}", "layer", "width", "factor");
    for (l, (term, width)) in report.layer_terms.iter().zip(net.widths()).enumerate() {
        println!("{:<6} {:>6} {:>10}", l + 1, width, term);
    }
    println!("bound {}", report.upper_bound);
    for c in &report.caveats {
        println!("caveat: {c}");
    }
    Ok(())
}

fn regions(expr: Option<&Path>, network: Option<&Path>, oracle: bool, radius: &Rational) -> Result<()> {
    let (function, report) = match (expr, network) {
        (Some(path), _) => match load_expression(path)? {
            Expression::Polynomial(p) => {
                let n = poly_region_count(&p)? as u64;
                let report = RegionReport {
                    exact_count: Some(n),
                    upper_bound: n.into(),
                    layer_terms: Vec::new(),
                    methods: vec!["upper hull vertices of the lifted Newton polytope".to_string()],
                    caveats: Vec::new(),
                };
                (PlFunction::Polynomial(p), report)
            }
            Expression::Rational(r) => {
                let mut report = region_bound(&tropical_to_network(&r)?)?;
                report.methods = vec!["product bound of the synthesized network".to_string()];
                (PlFunction::Quotient(r), report)
            }
        },
        (None, Some(path)) => {
            let net = load_network(path)?;
            let report = region_bound(&net)?;
            (PlFunction::Network(net), report)
        }
        (None, None) => return Err(CliError::Usage("give --expr or a network".to_string())),
    };
    let mut out = json!({ "report": report });
    if oracle {
        if !radius.is_positive() {
            return Err(CliError::Usage("--radius must be positive".to_string()));
        }
        let bbox = GridBox::square(radius.clone())?;
        let grid = grid_region_count(&function, &bbox, Schedule::default())?;
        let polygon = exact_region_count(&function, &bbox)?;
        out["oracle"] = json!({ "grid": grid.report, "polygon_count": polygon });
    }
    println!("{}", json_text(&out));
    Ok(())
}

/// Curve edges clipped to the viewport, split into bounded and unbounded.
fn curve_shapes(curve: &TropicalCurve, vp: &Viewport) -> (Vec<Shape>, Vec<Shape>, Vec<Shape>) {
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    let (mut segments, mut rays) = (Vec::new(), Vec::new());
    for edge in &curve.edges {
        let clipped = match edge {
            CurveEdge::Segment { from, to } => vp.clip(from, &sub(to, from), Some(zero.clone()), Some(one.clone())),
            CurveEdge::Ray { from, direction } => vp.clip(from, direction, Some(zero.clone()), None),
            CurveEdge::Line { through, direction } => vp.clip(through, direction, None, None),
        };
        if let Some([a, b]) = clipped {
            let shape = Shape::Polyline(vec![a, b]);
            match edge {
                CurveEdge::Segment { .. } => segments.push(shape),
                _ => rays.push(shape),
            }
        }
    }
    let vertices = curve.vertices.iter().filter(|v| vp.contains(v)).cloned().map(Shape::Dot).collect();
    (segments, rays, vertices)
}

fn curve(expr: &Path, range: &[Rational], out: &Path) -> Result<()> {
    let f = match load_expression(expr)? {
        Expression::Polynomial(p) => p,
        Expression::Rational(_) => {
            return Err(CliError::Usage("curve needs a tropical polynomial, not a quotient".to_string()))
        }
    };
    let hs = hypersurface(&f)?;
    let curve = hs.curve()?;
    let vp = plane_box(range)?;
    let mut left = SvgScene::new(vp.clone());
    let (segments, rays, vertices) = curve_shapes(curve, &vp);
    left.layer("frame", vec![Shape::Polygon(vp.frame())]);
    left.layer("curve", segments);
    left.layer("ray", rays);
    left.layer("vertex", vertices);

    let sub_div = dual_subdivision(&f)?;
    let points: Vec<Point> = sub_div.cells_of_dim(0).flat_map(|c| c.points.clone()).collect();
    let half = Rational::new(1.into(), 2.into());
    let mut right = SvgScene::new(Viewport::around(&points, &half));
    if let Some(polygon) = newton_outline(sub_div.support().vertices()) {
        right.layer("newton", vec![Shape::Polygon(polygon)]);
    }
    let edges = sub_div
        .cells_of_dim(1)
        .map(|c| Shape::Polyline(vec![c.points[0].clone(), c.points[c.points.len() - 1].clone()]))
        .collect();
    right.layer("cell", edges);
    right.layer("point", points.iter().cloned().map(Shape::Dot).collect());
    write(out, &render(&[left, right]))?;

    println!("curve vertices: {}", curve.vertices.len());
    println!("bounded edges: {}", curve.bounded_edges().count());
    println!("rays: {}", curve.rays().count());
    println!("regions: {}", poly_region_count(&f)?);
    println!("subdivision vertices: {}", sub_div.vertex_count());
    println!("wrote {}", out.display());
    Ok(())
}

/// Vertices of a convex polygon in counter-clockwise order; `None` when the
/// points do not span the plane.
fn newton_outline(vertices: &[Point]) -> Option<Vec<Point>> {
    if vertices.len() < 3 {
        return None;
    }
    let n = vertices.len() as i64;
    let centre: Point = (0..2)
        .map(|k| vertices.iter().map(|v| &v[k]).sum::<Rational>() / Rational::from_integer(n.into()))
        .collect();
    // Sort by angle around the centroid with an exact half-plane comparison.
    let mut out = vertices.to_vec();
    let half = |v: &Point| {
        let d = sub(v, &centre);
        let zero = Rational::from_integer(0.into());
        d[1] < zero || (d[1] == zero && d[0] < zero)
    };
    out.sort_by(|a, b| {
        half(a).cmp(&half(b)).then_with(|| {
            let (da, db) = (sub(a, &centre), sub(b, &centre));
            let cross = &da[0] * &db[1] - &da[1] * &db[0];
            Rational::from_integer(0.into()).cmp(&cross)
        })
    });
    Some(out)
}

fn boundary(path: &Path, threshold: &Rational, range: &[Rational], out: &Path) -> Result<()> {
    let net = load_network(path)?;
    let map = network_to_tropical(&net)?;
    if map.len() != 1 {
        return Err(CliError::Usage(format!("boundary needs a network with one output, found {}", map.len())));
    }
    let r = &map.components()[0];
    let db = decision_boundary(r.num(), r.den(), threshold)?;
    let vp = plane_box(range)?;
    let bbox = GridBox::new(vp.lo.to_vec(), vp.hi.to_vec())?;
    let level = level_set_segments(&PlFunction::Network(net), threshold, &bbox)?;

    let mut scene = SvgScene::new(vp.clone());
    let (segments, rays, _) = curve_shapes(db.hypersurface.curve()?, &vp);
    scene.layer("frame", vec![Shape::Polygon(vp.frame())]);
    scene.layer("hypersurface", segments.into_iter().chain(rays).collect());
    scene.layer("boundary", level.iter().map(|[a, b]| Shape::Polyline(vec![a.clone(), b.clone()])).collect());
    write(out, &render(&[scene]))?;

    println!("threshold: {}", format_rational(threshold));
    println!("containment certified: {}", db.certified);
    println!("positive regions at most: {}", db.positive_bound);
    println!("negative regions at most: {}", db.negative_bound);
    println!("boundary segments in box: {}", level.len());
    println!("wrote {}", out.display());
    Ok(())
}

fn polytopes(path: &Path, layer: usize, node: Option<usize>) -> Result<()> {
    let net = load_network(path)?;
    if layer == 0 || layer > net.depth() {
        return Err(CliError::Usage(format!("layer must be in 1..={}", net.depth())));
    }
    let width = net.layers()[layer - 1].width();
    let nodes: Vec<usize> = match node {
        Some(i) if i == 0 || i > width => {
            return Err(CliError::Usage(format!("node must be in 1..={width}")));
        }
        Some(i) => vec![i],
        None => (1..=width).collect(),
    };
    let all = layer_polytopes(&net)?;
    let entries: Vec<serde_json::Value> = nodes
        .iter()
        .map(|&i| {
            let p = &all[layer - 1][i - 1];
            json!({
                "layer": layer,
                "node": i,
                "f": p.f.to_json(),
                "g": p.g.to_json(),
                "h": p.h.to_json(),
            })
        })
        .collect();
    let value = if node.is_some() { entries[0].clone() } else { json!(entries) };
    println!("{}", json_text(&value));
    Ok(())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn junit(results: &[CriterionResult]) -> String {
    let failures = results.iter().filter(|r| !r.passed).count();
    let total: f64 = results.iter().map(|r| r.elapsed.as_secs_f64()).sum();
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<testsuite name="acceptance" tests="{}" failures="{failures}" time="{total:.3}">"#,
        results.len()
    );
    for r in results {
        let name = escape(&format!("{} {}", r.id, r.name));
        let _ = writeln!(
            out,
            r#"  <testcase classname="acceptance" name="{name}" time="{:.3}">"#,
            r.elapsed.as_secs_f64()
        );
        if !r.passed {
            let _ = writeln!(out, r#"    <failure message="{}"/>"#, escape(&r.detail));
        }
        let _ = writeln!(out, "    <system-out>{}</system-out>", escape(&r.detail));
        out.push_str("  </testcase>\n");
    }
    out.push_str("</testsuite>\n");
    out
}

fn verify(report: Option<&Path>, only: &[u32]) -> Result<()> {
    if let Some(id) = only.iter().find(|id| !acceptance::CRITERIA.iter().any(|c| c.id == **id)) {
        return Err(CliError::Usage(format!("no acceptance criterion {id}")));
    }
    let mut results = Vec::new();
    for c in acceptance::CRITERIA.iter().filter(|c| only.is_empty() || only.contains(&c.id)) {
        let r = c.run();
        println!("{}", r.line());
        results.push(r);
    }
    if let Some(path) = report {
        write(path, &junit(&results))?;
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(CliError::Failed(failed, results.len()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Convert { network, canonical } => convert(&network, canonical),
        Command::Synth { expr, out } => synth(&expr, out.as_deref()),
        Command::Bound { network, json } => bound(&network, json),
        Command::Regions { expr, network, oracle, radius } => {
            regions(expr.as_deref(), network.as_deref(), oracle, &radius)
        }
        Command::Curve { expr, range, out } => curve(&expr, &range, &out),
        Command::Boundary { network, threshold, range, out } => boundary(&network, &threshold, &range, &out),
        Command::Polytopes { network, layer, node } => polytopes(&network, layer, node),
        Command::Verify { report, only } => verify(report.as_deref(), &only),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
