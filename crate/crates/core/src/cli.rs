//! Command-line front end: one verb per engine operation, JSON in and out.
//!
//! Exit status is 0 on success, 1 when the command line or an input file cannot
//! be parsed, and 2 when the engine rejects the input. In the last case standard
//! error carries `{"error": <name>, "message": <text>}`.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::classify::{
    classify_halfspace, is_tconvex_polyhedron, ConvexityVerdict, HalfspaceCase,
};
use crate::curve::{check_degree_bound, degree, tconv_curve_in_chart, DegreeReport, FanCurve};
use crate::error::Error;
use crate::hull::{
    dim_tconv_segment, segment_hull_simplex, tconv_complex_with, tconv_finite, tconv_polyhedron,
    tconv_ray, HullOptions, PolyhedralComplex,
};
use crate::matrix::{trop_det, trop_rank_with, RankConfig, TropMatrix};
use crate::polyhedron::{dim, Halfspace, Polyhedron};
use crate::rational::{parse_rational, to_f64, RatVector};
use crate::render::{figure_panels, render_complex, render_polyhedron, BBox, RenderOptions};
use crate::tropical::trop_segment;

#[derive(Parser, Debug)]
#[command(name = "tropconv", version, about = "Exact tropical convex hulls of polyhedral sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for randomized search orders.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the result here instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    /// Add decimal approximations of every rational (display only).
    #[arg(long, global = true)]
    pub decimals: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tropical hull of a finite point set: {"points": [[..], ..]}.
    HullPoints {
        input: PathBuf,
        #[arg(long)]
        refine: bool,
    },
    /// Tropical segment and the simplex conv tconv(a, b): {"a": [..], "b": [..]}.
    HullSegment { input: PathBuf },
    /// Tropical hull of a polyhedron.
    HullPolyhedron { input: PathBuf },
    /// Tropical hull of a union of polyhedra: {"cells": [..]}.
    HullComplex {
        input: PathBuf,
        #[arg(long)]
        refine: bool,
    },
    /// Tropical hull of the ray pos(v): {"v": [..]}.
    HullRay { input: PathBuf },
    /// Tropical convexity of a halfspace {"a": [..], "c": ".."}.
    ClassifyHalfspace { input: PathBuf },
    /// Tropical convexity of a polyhedron, with a witness when it fails.
    CheckConvex { input: PathBuf },
    /// Tropical determinant of a square matrix given as rows.
    TropDet { input: PathBuf },
    /// Tropical rank of a matrix given as rows.
    TropRank { input: PathBuf },
    /// Degree of a fan curve {"ambient": n, "rays": [{"v": [..], "m": k}]}.
    CurveDegree { input: PathBuf },
    /// Compare dim tconv of a fan curve with its degree.
    CurveCheck {
        input: PathBuf,
        /// Coordinate zeroed by the chart PT^n -> R^n.
        #[arg(long, default_value_t = 0)]
        chart: usize,
    },
    /// SVG of a planar polyhedron or complex.
    Render {
        input: PathBuf,
        /// Viewport x0,y0,x1,y1; unbounded cells are clipped to it.
        #[arg(long, allow_hyphen_values = true)]
        bbox: Option<String>,
        /// JSON list of points drawn on top.
        #[arg(long)]
        points: Option<PathBuf>,
        /// Write the five sector panels for a polyhedron into this directory.
        #[arg(long)]
        panels: Option<PathBuf>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsInput {
    pub points: Vec<RatVector>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentInput {
    pub a: RatVector,
    pub b: RatVector,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RayInput {
    pub v: RatVector,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentReport {
    pub pseudovertices: Vec<RatVector>,
    pub simplex_hrep: Polyhedron,
    pub dim: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HullPointsReport {
    pub complex: PolyhedralComplex,
    pub conv: Polyhedron,
    pub dim: i64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictReport {
    pub convex: bool,
    pub case: Option<HalfspaceCase>,
    pub witness_sector: Option<usize>,
    pub witness_points: Option<Vec<RatVector>>,
    /// Present when no witness pair was found: the strictly larger tropical hull.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hull: Option<Polyhedron>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DetReport {
    #[serde(with = "crate::rational::serde_rational")]
    pub value: crate::rational::Rational,
    pub unique: bool,
    pub singular: bool,
    pub argmin: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankReport {
    pub rank: usize,
    pub dim_tconv_columns: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeOnly {
    pub deg: u64,
}

/// Render input: a complex when it has "cells", otherwise a polyhedron.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Drawable {
    Complex(PolyhedralComplex),
    Polyhedron(Polyhedron),
}

#[derive(Debug)]
pub enum CliError {
    /// Exit status 1.
    Parse(String),
    /// Exit status 2.
    Domain(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Domain(_) => 2,
        }
    }

    pub fn diagnostic(&self) -> String {
        let (name, message) = match self {
            CliError::Parse(m) => ("Parse", m.clone()),
            CliError::Domain(e) => (e.name(), e.to_string()),
        };
        serde_json::json!({ "error": name, "message": message }).to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => CliError::Parse(m),
            e => CliError::Domain(e),
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Runs one command and returns the text written to the output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let value = match &cli.command {
        Command::HullPoints { input, refine } => {
            let pts: PointsInput = read_json(input)?;
            let mut c = tconv_finite(&pts.points)?;
            if *refine {
                c = tconv_complex_with(&c, &HullOptions { refine: true })?;
            }
            let conv = crate::hull::conv_of_complex(&c)?;
            to_value(&HullPointsReport {
                dim: c.dim(),
                complex: c,
                conv,
            })
        }
        Command::HullSegment { input } => {
            let s: SegmentInput = read_json(input)?;
            to_value(&SegmentReport {
                pseudovertices: trop_segment(&s.a, &s.b)?,
                simplex_hrep: segment_hull_simplex(&s.a, &s.b)?,
                dim: dim_tconv_segment(&s.a, &s.b)?,
            })
        }
        Command::HullPolyhedron { input } => {
            let p: Polyhedron = read_json(input)?;
            if p.is_empty() {
                return Err(CliError::Domain(Error::EmptyInput));
            }
            to_value(&tconv_polyhedron(&p)?)
        }
        Command::HullComplex { input, refine } => {
            let c: PolyhedralComplex = read_json(input)?;
            if c.is_empty() {
                return Err(CliError::Domain(Error::EmptyInput));
            }
            to_value(&tconv_complex_with(&c, &HullOptions { refine: *refine })?)
        }
        Command::HullRay { input } => {
            let r: RayInput = read_json(input)?;
            to_value(&tconv_ray(&r.v)?)
        }
        Command::ClassifyHalfspace { input } => {
            let h: Halfspace = read_json(input)?;
            let v = classify_halfspace(&h.normal, &h.offset)?;
            to_value(&VerdictReport {
                convex: v.convex,
                case: v.case,
                witness_sector: v.witness_sector,
                witness_points: None,
                hull: None,
            })
        }
        Command::CheckConvex { input } => {
            let p: Polyhedron = read_json(input)?;
            let report = match is_tconvex_polyhedron(&p)? {
                ConvexityVerdict::Yes => VerdictReport {
                    convex: true,
                    case: None,
                    witness_sector: None,
                    witness_points: None,
                    hull: None,
                },
                ConvexityVerdict::NoPair { x, y, pseudovertex } => VerdictReport {
                    convex: false,
                    case: None,
                    witness_sector: None,
                    witness_points: Some(vec![x, y, pseudovertex]),
                    hull: None,
                },
                ConvexityVerdict::NoHull { hull } => VerdictReport {
                    convex: false,
                    case: None,
                    witness_sector: None,
                    witness_points: None,
                    hull: Some(hull),
                },
            };
            to_value(&report)
        }
        Command::TropDet { input } => {
            let m: TropMatrix = read_json(input)?;
            let d = trop_det(&m)?;
            to_value(&DetReport {
                value: d.value,
                unique: d.unique_min,
                singular: !d.unique_min,
                argmin: d.argmin,
            })
        }
        Command::TropRank { input } => {
            let m: TropMatrix = read_json(input)?;
            let rank = trop_rank_with(&m, &RankConfig { seed: cli.seed })?;
            to_value(&RankReport {
                rank,
                dim_tconv_columns: rank - 1,
            })
        }
        Command::CurveDegree { input } => {
            let c: FanCurve = read_json(input)?;
            to_value(&DegreeOnly { deg: degree(&c)? })
        }
        Command::CurveCheck { input, chart } => {
            let c: FanCurve = read_json(input)?;
            let mut report: DegreeReport = check_degree_bound(&c)?;
            if *chart != 0 {
                let d = tconv_curve_in_chart(&c, *chart)?.dim().max(0) as usize;
                report.dim = d;
                report.holds = d as u64 <= report.deg;
                report.prop_applicable = d == report.ray_max;
            }
            to_value(&report)
        }
        Command::Render {
            input,
            bbox,
            points,
            panels,
        } => return render(input, bbox.as_deref(), points.as_deref(), panels.as_deref()),
    };
    let value = if cli.decimals { with_decimals(value) } else { value };
    Ok(serde_json::to_string_pretty(&value).expect("json") + "\n")
}

fn render(
    input: &Path,
    bbox: Option<&str>,
    points: Option<&Path>,
    panels: Option<&Path>,
) -> Result<String, CliError> {
    let bbox = bbox.map(BBox::parse).transpose()?;
    let overlay: Vec<RatVector> = match points {
        Some(p) => read_json(p)?,
        None => Vec::new(),
    };
    let drawable: Drawable = read_json(input)?;
    if let Some(dir) = panels {
        let Drawable::Polyhedron(p) = drawable else {
            return Err(CliError::Parse("--panels needs a single polyhedron".to_string()));
        };
        if p.is_empty() {
            return Err(CliError::Domain(Error::EmptyInput));
        }
        let fig = figure_panels(&p, bbox)?;
        fs::create_dir_all(dir).map_err(|e| CliError::Parse(format!("{}: {e}", dir.display())))?;
        let mut names = Vec::new();
        for (i, (name, svg)) in fig.svgs.iter().enumerate() {
            let file = dir.join(format!("panel{}_{name}.svg", i + 1));
            fs::write(&file, svg).map_err(|e| CliError::Parse(format!("{}: {e}", file.display())))?;
            names.push(file.display().to_string());
        }
        let summary = serde_json::json!({
            "panels": names,
            "hull_vertices": fig.hull.vertices().len(),
            "hull_dim": dim(&fig.hull),
        });
        return Ok(serde_json::to_string_pretty(&summary).expect("json") + "\n");
    }
    let opts = RenderOptions {
        bbox,
        overlay,
        outline: None,
    };
    Ok(match drawable {
        Drawable::Complex(c) => render_complex(&c, &opts)?,
        Drawable::Polyhedron(p) => render_polyhedron(&p, &opts)?,
    })
}

/// Wraps a result as `{"result": .., "decimal": ..}` where the second copy has
/// every rational string replaced by a float.
fn with_decimals(v: Value) -> Value {
    fn approx(v: &Value) -> Value {
        match v {
            Value::String(s) => match parse_rational(s) {
                Ok(r) => serde_json::Number::from_f64(to_f64(&r)).map_or(v.clone(), Value::Number),
                Err(_) => v.clone(),
            },
            Value::Array(a) => Value::Array(a.iter().map(approx).collect()),
            Value::Object(o) => Value::Object(o.iter().map(|(k, x)| (k.clone(), approx(x))).collect()),
            other => other.clone(),
        }
    }
    let decimal = approx(&v);
    serde_json::json!({ "result": v, "decimal": decimal })
}

/// Parses `args`, runs the command and writes output; returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            if let Some(path) = &cli.output {
                if let Err(e) = fs::write(path, text) {
                    eprintln!("{}", CliError::Parse(format!("{}: {e}", path.display())).diagnostic());
                    return 1;
                }
            } else {
                print!("{text}");
            }
            0
        }
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            e.exit_code()
        }
    }
}
