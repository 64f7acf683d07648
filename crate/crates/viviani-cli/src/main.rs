//! Command-line front end for distance-sum and squared-distance-sum loci.
//!
//! Four subcommands cover the analyses: `sum-locus`, `squared-locus`,
//! `min-squares` and `triangle-from-ellipse`. Every run prints a single
//! JSON document to stdout with the keys `input`, `analysis`, `results`
//! and `verification`; `--plot` additionally writes an SVG figure.
//!
//! Exit codes: 0 on success, 2 for invalid scenes or parameters, 3 for
//! malformed flags or level lists.

mod figure;
mod report;
mod scene;

use clap::{Args, Parser, Subcommand};
use figure::Figure;
use report::{point_json, quadratic_equation, Json};
use scene::{RawShape, SceneInput};
use std::path::PathBuf;
use std::process::ExitCode;
use viviani::{
    classify_squared_locus, distance_sum_form, ellipse_geometry, grid_level_points, grid_min,
    is_circle_locus, is_viviani, k_range, level_direction, min_squared_sum, squared_sum_form,
    sum_locus, triangle_from_ellipse, GridSpec, LevelDirection, MinSquaredSum, Minimizer,
    OrientedLine, Point, QuadraticForm, SquaredLocus, SumLocus,
};

/// Application error carrying its exit code.
#[derive(Debug)]
pub enum AppError {
    /// Invalid scene or parameters (exit 2).
    Scene(String),
    /// Malformed flags or level list (exit 3).
    Parse(String),
    /// I/O failure (exit 1).
    Io(String),
}

impl AppError {
    pub fn scene(msg: impl Into<String>) -> Self {
        Self::Scene(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Self::Parse(msg.into())
    }

    fn message(&self) -> &str {
        match self {
            Self::Scene(m) | Self::Parse(m) | Self::Io(m) => m,
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            Self::Io(_) => 1,
            Self::Scene(_) => 2,
            Self::Parse(_) => 3,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "viviani",
    about = "Loci of constant distance sums and squared-distance sums to line sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SceneArgs {
    /// Triangle vertices: "x,y x,y x,y"
    #[arg(long, value_name = "POINTS")]
    triangle: Option<String>,
    /// Convex polygon vertices: "x,y x,y ..."
    #[arg(long, value_name = "POINTS")]
    polygon: Option<String>,
    /// Lines, two points each: "x,y x,y; x,y x,y"
    #[arg(long, value_name = "SEGMENTS")]
    lines: Option<String>,
    /// JSON scene file with one of "triangle", "polygon" or "lines"
    #[arg(long, value_name = "FILE")]
    scene: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write an SVG figure of the scene and loci
    #[arg(long, value_name = "FILE")]
    plot: Option<PathBuf>,
    /// Cross-check the analytic results against the grid oracle
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Level sets of the distance sum over a triangle or convex polygon
    SumLocus {
        #[command(flatten)]
        scene: SceneArgs,
        /// Comma-separated levels, e.g. "2.8,3.2,3.6"
        #[arg(long, value_name = "LIST")]
        k: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Level sets of the squared-distance sum over a scene's lines
    SquaredLocus {
        #[command(flatten)]
        scene: SceneArgs,
        /// Comma-separated levels
        #[arg(long, value_name = "LIST")]
        k: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Minimal squared-distance sum and its minimizer
    MinSquares {
        #[command(flatten)]
        scene: SceneArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Isosceles triangle realizing the canonical ellipse x²/α² + y²/β² = 1
    TriangleFromEllipse {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(report) => {
            println!("{}", report);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<String, AppError> {
    match cli.command {
        Command::SumLocus { scene, k, output } => {
            let input = load_scene(&scene)?;
            let levels = parse_levels(k)?;
            cmd_sum_locus(&input, &levels, &output)
        }
        Command::SquaredLocus { scene, k, output } => {
            let input = load_scene(&scene)?;
            let levels = parse_levels(k)?;
            cmd_squared_locus(&input, &levels, &output)
        }
        Command::MinSquares { scene, output } => {
            let input = load_scene(&scene)?;
            cmd_min_squares(&input, &output)
        }
        Command::TriangleFromEllipse {
            alpha,
            beta,
            output,
        } => cmd_triangle_from_ellipse(alpha, beta, &output),
    }
}

fn load_scene(args: &SceneArgs) -> Result<SceneInput, AppError> {
    if let Some(text) = &args.triangle {
        scene::triangle_from_flag(text)
    } else if let Some(text) = &args.polygon {
        scene::polygon_from_flag(text)
    } else if let Some(text) = &args.lines {
        scene::lines_from_flag(text)
    } else if let Some(path) = &args.scene {
        scene::from_file(path)
    } else {
        unreachable!("clap enforces exactly one scene source")
    }
}

fn parse_levels(flag: Option<String>) -> Result<Vec<f64>, AppError> {
    match flag {
        Some(text) => scene::parse_k_list(&text),
        None => Ok(Vec::new()),
    }
}

fn shape_json(raw: &RawShape) -> Json {
    match raw {
        RawShape::Triangle(points) => Json::Obj(vec![
            ("type", Json::Str("triangle".to_string())),
            (
                "vertices",
                Json::Arr(points.iter().map(|&p| point_json(p)).collect()),
            ),
        ]),
        RawShape::Polygon(points) => Json::Obj(vec![
            ("type", Json::Str("polygon".to_string())),
            (
                "vertices",
                Json::Arr(points.iter().map(|&p| point_json(p)).collect()),
            ),
        ]),
        RawShape::Lines(segments) => Json::Obj(vec![
            ("type", Json::Str("lines".to_string())),
            (
                "segments",
                Json::Arr(
                    segments
                        .iter()
                        .map(|&(p, q)| Json::Arr(vec![point_json(p), point_json(q)]))
                        .collect(),
                ),
            ),
        ]),
    }
}

fn input_json(command: &str, raw: &RawShape, levels: Option<&[f64]>) -> Json {
    let mut entries = vec![
        ("command", Json::Str(command.to_string())),
        ("shape", shape_json(raw)),
    ];
    if let Some(levels) = levels {
        entries.push((
            "k",
            Json::Arr(levels.iter().map(|&k| Json::Num(k)).collect()),
        ));
    }
    Json::Obj(entries)
}

fn document(input: Json, analysis: Json, results: Json, verification: Json) -> String {
    Json::Obj(vec![
        ("input", input),
        ("analysis", analysis),
        ("results", results),
        ("verification", verification),
    ])
    .render()
}

fn minimizer_json(argmin: &Minimizer) -> Json {
    match argmin {
        Minimizer::UniquePoint(p) => Json::Obj(vec![
            ("type", Json::Str("point".to_string())),
            ("point", point_json(*p)),
        ]),
        Minimizer::LineOfMinima(line) => Json::Obj(vec![
            ("type", Json::Str("line".to_string())),
            (
                "line",
                Json::Arr(vec![
                    Json::Num(line.a()),
                    Json::Num(line.b()),
                    Json::Num(line.c()),
                ]),
            ),
        ]),
    }
}

fn quadratic_json(q: &QuadraticForm) -> Json {
    Json::Obj(vec![
        ("a", Json::Num(q.a)),
        ("b", Json::Num(q.b)),
        ("c", Json::Num(q.c)),
        ("d", Json::Num(q.d)),
        ("e", Json::Num(q.e)),
        ("f0", Json::Num(q.f0)),
    ])
}

fn write_figure(figure: &Figure, path: &PathBuf) -> Result<(), AppError> {
    std::fs::write(path, figure.render())
        .map_err(|e| AppError::Io(format!("cannot write figure: {}", e)))
}

fn cmd_sum_locus(
    input: &SceneInput,
    levels: &[f64],
    output: &OutputArgs,
) -> Result<String, AppError> {
    let polygon = input.polygon()?;
    let form = distance_sum_form(&polygon);
    let (k_lo, k_hi) = k_range(&polygon);
    let direction = level_direction(&polygon);

    let loci: Vec<SumLocus> = levels.iter().map(|&k| sum_locus(&polygon, k)).collect();

    let analysis = Json::Obj(vec![
        (
            "linear_form",
            Json::Obj(vec![
                ("a", Json::Num(form.a)),
                ("b", Json::Num(form.b)),
                ("c", Json::Num(form.c)),
            ]),
        ),
        (
            "k_range",
            Json::Arr(vec![Json::Num(k_lo), Json::Num(k_hi)]),
        ),
        (
            "level_direction",
            match direction {
                LevelDirection::Direction(d) => Json::Obj(vec![
                    ("type", Json::Str("direction".to_string())),
                    ("unit", point_json(d)),
                ]),
                LevelDirection::IsotropicConstant => Json::Obj(vec![(
                    "type",
                    Json::Str("isotropic_constant".to_string()),
                )]),
            },
        ),
        ("is_viviani", Json::Bool(is_viviani(&polygon))),
    ]);

    let results = Json::Arr(
        levels
            .iter()
            .zip(&loci)
            .map(|(&k, locus)| {
                let locus_json = match locus {
                    SumLocus::Empty => Json::Obj(vec![("type", Json::Str("empty".to_string()))]),
                    SumLocus::Vertex(p) => Json::Obj(vec![
                        ("type", Json::Str("vertex".to_string())),
                        ("point", point_json(*p)),
                    ]),
                    SumLocus::Segment(a, b) => Json::Obj(vec![
                        ("type", Json::Str("segment".to_string())),
                        ("start", point_json(*a)),
                        ("end", point_json(*b)),
                    ]),
                    SumLocus::WholePolygon => {
                        Json::Obj(vec![("type", Json::Str("whole_polygon".to_string()))])
                    }
                };
                Json::Obj(vec![("k", Json::Num(k)), ("locus", locus_json)])
            })
            .collect(),
    );

    let verification = if output.verify {
        verify_sum_loci(&polygon, levels, &loci)
    } else {
        Json::Null
    };

    let report = document(
        input_json("sum-locus", &input.raw, Some(levels)),
        analysis,
        results,
        verification,
    );

    if let Some(path) = &output.plot {
        let mut figure = Figure::new(&input.extent_points());
        figure.outline(polygon.vertices());
        for (index, locus) in loci.iter().enumerate() {
            match locus {
                SumLocus::Segment(a, b) => figure.segment(*a, *b, index),
                SumLocus::Vertex(p) => figure.dot(*p, index),
                SumLocus::WholePolygon | SumLocus::Empty => {}
            }
        }
        write_figure(&figure, path)?;
    }
    Ok(report)
}

/// Samples the distance sum on a grid and reports the worst distance from
/// an on-level sample to the analytic segment, in scene units.
fn verify_sum_loci(polygon: &viviani::ConvexPolygon, levels: &[f64], loci: &[SumLocus]) -> Json {
    let vertices = polygon.vertices();
    let (mut min, mut max) = (vertices[0], vertices[0]);
    for v in vertices {
        min.x = min.x.min(v.x);
        min.y = min.y.min(v.y);
        max.x = max.x.max(v.x);
        max.y = max.y.max(v.y);
    }
    let grid = match GridSpec::new(min, max, 256) {
        Ok(grid) => grid,
        Err(_) => return Json::Null,
    };
    let cell = grid.cell_size();
    let form = distance_sum_form(polygon);
    let gradient = form.gradient_norm();
    let mut worst: f64 = 0.0;
    let mut checked = 0usize;
    for (k, locus) in levels.iter().zip(loci) {
        if let SumLocus::Segment(a, b) = locus {
            // a one-cell band keeps samples near the chord even where the
            // level direction runs at a shallow angle to an edge
            let tol = cell * gradient.max(1e-12);
            let samples = grid_level_points(|p| direct_distance_sum(polygon, p), *k, &grid, tol);
            // the locus is defined inside the polygon only; the absolute
            // distance sum can hit the same level outside it
            for p in samples.into_iter().filter(|&p| polygon.contains(p)) {
                worst = worst.max(distance_to_segment(*a, *b, p));
            }
            checked += 1;
        }
    }
    Json::Obj(vec![
        ("checked_levels", Json::Num(checked as f64)),
        ("grid_cell", Json::Num(cell)),
        (
            "max_locus_deviation",
            if checked > 0 {
                Json::Num(worst)
            } else {
                Json::Null
            },
        ),
    ])
}

fn cmd_squared_locus(
    input: &SceneInput,
    levels: &[f64],
    output: &OutputArgs,
) -> Result<String, AppError> {
    let lines = input.lines();
    let q = squared_sum_form(&lines).map_err(|e| AppError::scene(e.to_string()))?;
    let min = min_squared_sum(&lines).expect("non-empty line set");

    let loci: Vec<SquaredLocus> = levels
        .iter()
        .map(|&k| classify_squared_locus(&lines, k).expect("non-empty line set"))
        .collect();

    let analysis = Json::Obj(vec![
        ("quadratic_form", quadratic_json(&q)),
        ("discriminant", Json::Num(q.discriminant())),
        ("k_min", Json::Num(min.k_min)),
        ("minimizer", minimizer_json(&min.argmin)),
        (
            "is_circle",
            match input.triangle() {
                Some(t) => Json::Bool(is_circle_locus(t)),
                None => Json::Null,
            },
        ),
    ]);

    let results = Json::Arr(
        levels
            .iter()
            .zip(&loci)
            .map(|(&k, locus)| {
                let locus_json = match locus {
                    SquaredLocus::Empty => {
                        Json::Obj(vec![("type", Json::Str("empty".to_string()))])
                    }
                    SquaredLocus::DegeneratePoint(p) => Json::Obj(vec![
                        ("type", Json::Str("degenerate_point".to_string())),
                        ("point", point_json(*p)),
                    ]),
                    SquaredLocus::Ellipse(g) => Json::Obj(vec![
                        ("type", Json::Str("ellipse".to_string())),
                        ("center", point_json(g.center)),
                        ("semi_major", Json::Num(g.semi_major)),
                        ("semi_minor", Json::Num(g.semi_minor)),
                        ("rotation", Json::Num(g.rotation)),
                    ]),
                    SquaredLocus::DegenerateNonElliptic(kind) => Json::Obj(vec![
                        ("type", Json::Str("degenerate_non_elliptic".to_string())),
                        (
                            "kind",
                            Json::Str(
                                match kind {
                                    viviani::DegenerateKind::ParallelPencil => "parallel_pencil",
                                    viviani::DegenerateKind::Other => "other",
                                }
                                .to_string(),
                            ),
                        ),
                    ]),
                };
                Json::Obj(vec![
                    ("k", Json::Num(k)),
                    ("locus", locus_json),
                    ("equation", Json::Str(quadratic_equation(&q, k))),
                ])
            })
            .collect(),
    );

    let verification = if output.verify {
        verify_squared_loci(&lines, levels, &loci)
    } else {
        Json::Null
    };

    let report = document(
        input_json("squared-locus", &input.raw, Some(levels)),
        analysis,
        results,
        verification,
    );

    if let Some(path) = &output.plot {
        let mut figure = Figure::new(&input.extent_points());
        draw_scene(&mut figure, input);
        for (index, locus) in loci.iter().enumerate() {
            match locus {
                SquaredLocus::Ellipse(g) => figure.ellipse(g, index),
                SquaredLocus::DegeneratePoint(p) => figure.dot(*p, index),
                SquaredLocus::Empty | SquaredLocus::DegenerateNonElliptic(_) => {}
            }
        }
        write_figure(&figure, path)?;
    }
    Ok(report)
}

/// Samples the squared sum on a grid around each elliptical level and
/// reports the worst distance from an on-level sample to the ellipse.
fn verify_squared_loci(lines: &[OrientedLine], levels: &[f64], loci: &[SquaredLocus]) -> Json {
    let mut worst: f64 = 0.0;
    let mut checked = 0usize;
    let mut cell_used = Json::Null;
    for (k, locus) in levels.iter().zip(loci) {
        if let SquaredLocus::Ellipse(g) = locus {
            let reach = 1.25 * g.semi_major;
            let grid = match GridSpec::new(
                Point::new(g.center.x - reach, g.center.y - reach),
                Point::new(g.center.x + reach, g.center.y + reach),
                256,
            ) {
                Ok(grid) => grid,
                Err(_) => continue,
            };
            let cell = grid.cell_size();
            cell_used = Json::Num(cell);
            let q = squared_sum_form(lines).expect("non-empty line set");
            let mut min_gradient = f64::INFINITY;
            for i in 0..256 {
                let angle = std::f64::consts::TAU * (i as f64) / 256.0;
                let p = ellipse_point(g, angle);
                let gx = 2.0 * q.a * p.x + q.b * p.y + q.d;
                let gy = q.b * p.x + 2.0 * q.c * p.y + q.e;
                min_gradient = min_gradient.min(gx.hypot(gy));
            }
            let tol = 1.5 * cell * min_gradient.max(1e-12);
            let samples = grid_level_points(|p| q.eval(p), *k, &grid, tol);
            for sample in samples {
                let mut best = f64::INFINITY;
                for i in 0..1024 {
                    let angle = std::f64::consts::TAU * (i as f64) / 1024.0;
                    best = best.min(ellipse_point(g, angle).distance(sample));
                }
                worst = worst.max(best);
            }
            checked += 1;
        }
    }
    Json::Obj(vec![
        ("checked_levels", Json::Num(checked as f64)),
        ("grid_cell", cell_used),
        (
            "max_locus_deviation",
            if checked > 0 {
                Json::Num(worst)
            } else {
                Json::Null
            },
        ),
    ])
}

fn cmd_min_squares(input: &SceneInput, output: &OutputArgs) -> Result<String, AppError> {
    let lines = input.lines();
    let q = squared_sum_form(&lines).map_err(|e| AppError::scene(e.to_string()))?;
    let min = min_squared_sum(&lines).expect("non-empty line set");

    let analysis = Json::Obj(vec![
        ("quadratic_form", quadratic_json(&q)),
        ("discriminant", Json::Num(q.discriminant())),
    ]);
    let results = Json::Obj(vec![
        ("k_min", Json::Num(min.k_min)),
        ("minimizer", minimizer_json(&min.argmin)),
    ]);
    let verification = if output.verify {
        verify_minimum(input, &q, &min)
    } else {
        Json::Null
    };

    let report = document(
        input_json("min-squares", &input.raw, None),
        analysis,
        results,
        verification,
    );

    if let Some(path) = &output.plot {
        let mut figure = Figure::new(&input.extent_points());
        draw_scene(&mut figure, input);
        match min.argmin {
            Minimizer::UniquePoint(p) => figure.dot(p, 0),
            Minimizer::LineOfMinima(line) => figure.line(&line, 0),
        }
        write_figure(&figure, path)?;
    }
    Ok(report)
}

fn verify_minimum(input: &SceneInput, q: &QuadraticForm, min: &MinSquaredSum) -> Json {
    let points = input.extent_points();
    let (mut lo, mut hi) = (points[0], points[0]);
    for p in &points {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    let reach = (hi - lo).norm().max(1.0) * 1.2;
    let center = (lo + hi) * 0.5;
    let grid = match GridSpec::new(
        Point::new(center.x - reach, center.y - reach),
        Point::new(center.x + reach, center.y + reach),
        128,
    ) {
        Ok(grid) => grid,
        Err(_) => return Json::Null,
    };
    let (grid_value, grid_point) = grid_min(|p| q.eval(p), &grid);
    Json::Obj(vec![
        ("grid_k_min", Json::Num(grid_value)),
        ("grid_argmin", point_json(grid_point)),
        ("delta", Json::Num((grid_value - min.k_min).abs())),
    ])
}

fn cmd_triangle_from_ellipse(
    alpha: f64,
    beta: f64,
    output: &OutputArgs,
) -> Result<String, AppError> {
    let result =
        triangle_from_ellipse(alpha, beta).map_err(|e| AppError::scene(e.to_string()))?;
    let sides = result.triangle.sides();
    let geometry =
        ellipse_geometry(&sides, result.k).map_err(|e| AppError::scene(e.to_string()))?;
    let residual = (geometry.semi_major - alpha)
        .abs()
        .max((geometry.semi_minor - beta).abs());

    let input = Json::Obj(vec![
        ("command", Json::Str("triangle-from-ellipse".to_string())),
        ("alpha", Json::Num(alpha)),
        ("beta", Json::Num(beta)),
    ]);
    let analysis = Json::Obj(vec![
        (
            "params",
            Json::Obj(vec![
                ("a", Json::Num(result.params.a)),
                ("b", Json::Num(result.params.b)),
                ("l", Json::Num(result.params.l)),
            ]),
        ),
        ("k", Json::Num(result.k)),
    ]);
    let vertices = result.triangle.vertices();
    let results = Json::Obj(vec![
        (
            "triangle",
            Json::Arr(vertices.iter().map(|&v| point_json(v)).collect()),
        ),
        ("k", Json::Num(result.k)),
        ("roundtrip_residual", Json::Num(residual)),
    ]);
    let verification = if output.verify {
        let q = squared_sum_form(&sides).expect("triangle has sides");
        let min = min_squared_sum(&sides).expect("triangle has sides");
        let reach = 2.0 * alpha.max(1.0);
        let grid = GridSpec::new(Point::new(-reach, -reach), Point::new(reach, reach), 128)
            .expect("grid over the ellipse span");
        let (grid_value, _) = grid_min(|p| q.eval(p), &grid);
        Json::Obj(vec![
            ("grid_k_min", Json::Num(grid_value)),
            ("delta", Json::Num((grid_value - min.k_min).abs())),
        ])
    } else {
        Json::Null
    };

    let report = document(input, analysis, results, verification);

    if let Some(path) = &output.plot {
        let mut extent: Vec<Point> = vertices.to_vec();
        extent.push(Point::new(-alpha, -alpha.max(beta)));
        extent.push(Point::new(alpha, alpha.max(beta)));
        let mut figure = Figure::new(&extent);
        figure.outline(&vertices);
        figure.ellipse(&geometry, 0);
        write_figure(&figure, path)?;
    }
    Ok(report)
}

fn draw_scene(figure: &mut Figure, input: &SceneInput) {
    match &input.scene {
        scene::Scene::Triangle(t) => figure.outline(&t.vertices()),
        scene::Scene::Polygon(p) => figure.outline(p.vertices()),
        scene::Scene::Lines(lines) => {
            for line in lines {
                figure.line(line, 0);
            }
        }
    }
}

fn direct_distance_sum(polygon: &viviani::ConvexPolygon, p: Point) -> f64 {
    polygon.sides().iter().map(|s| s.signed_eval(p).abs()).sum()
}

fn distance_to_segment(a: Point, b: Point, x: Point) -> f64 {
    let ab = b - a;
    let t = ((x - a).dot(ab) / ab.dot(ab)).clamp(0.0, 1.0);
    (x - (a + ab * t)).norm()
}

fn ellipse_point(g: &viviani::EllipseGeometry, angle: f64) -> Point {
    let (sin, cos) = g.rotation.sin_cos();
    let local = Point::new(g.semi_major * angle.cos(), g.semi_minor * angle.sin());
    Point::new(
        g.center.x + local.x * cos - local.y * sin,
        g.center.y + local.x * sin + local.y * cos,
    )
}
