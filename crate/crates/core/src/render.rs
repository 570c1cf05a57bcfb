//! SVG pictures of planar polyhedra and complexes.
//!
//! Cells are clipped to a bounding box by exact intersection before any
//! conversion to floating point, so unbounded cells come out as finite polygons.
//! The box is written into the SVG `<metadata>` element.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hull::{tconv_polyhedron, PolyhedralComplex};
use crate::polyhedron::{dim, intersect, minkowski_sum, Halfspace, Polyhedron};
use crate::rational::{format_rational, parse_rational, rat, to_f64, RatVector, Rational};
use crate::tropical::sector;

const SCALE: f64 = 40.0;
const MARGIN: f64 = 12.0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BBox {
    pub x0: Rational,
    pub y0: Rational,
    pub x1: Rational,
    pub y1: Rational,
}

impl BBox {
    pub fn new(x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> Result<Self> {
        if x0 >= x1 || y0 >= y1 {
            return Err(Error::Parse("bounding box must have x0 < x1 and y0 < y1".to_string()));
        }
        Ok(BBox { x0, y0, x1, y1 })
    }

    /// Parses `x0,y0,x1,y1`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<Rational> = s
            .split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<Result<_>>()?;
        let [x0, y0, x1, y1]: [Rational; 4] = parts
            .try_into()
            .map_err(|_| Error::Parse(format!("expected x0,y0,x1,y1, got {s:?}")))?;
        BBox::new(x0, y0, x1, y1)
    }

    /// The box around `points` widened by `pad` on every side; `[-1,1]^2` when empty.
    pub fn around(points: &[RatVector], pad: &Rational) -> Self {
        let Some(first) = points.first() else {
            return BBox::new(rat(-1), rat(-1), rat(1), rat(1)).expect("valid");
        };
        let (mut x0, mut y0) = (first[0].clone(), first[1].clone());
        let (mut x1, mut y1) = (x0.clone(), y0.clone());
        for p in points {
            x0 = x0.min(p[0].clone());
            x1 = x1.max(p[0].clone());
            y0 = y0.min(p[1].clone());
            y1 = y1.max(p[1].clone());
        }
        BBox::new(x0 - pad, y0 - pad, x1 + pad, y1 + pad).expect("padded box is nondegenerate")
    }

    fn polyhedron(&self) -> Polyhedron {
        Polyhedron::from_hrep(
            2,
            vec![
                Halfspace::new(RatVector::from_ints(&[1, 0]), self.x0.clone()),
                Halfspace::new(RatVector::from_ints(&[0, 1]), self.y0.clone()),
                Halfspace::new(RatVector::from_ints(&[-1, 0]), -self.x1.clone()),
                Halfspace::new(RatVector::from_ints(&[0, -1]), -self.y1.clone()),
            ],
            vec![],
        )
        .expect("planar box")
    }

    fn to_screen(&self, p: &RatVector) -> (f64, f64) {
        (
            MARGIN + SCALE * to_f64(&(&p[0] - &self.x0)),
            MARGIN + SCALE * to_f64(&(&self.y1 - &p[1])),
        )
    }

    fn size(&self) -> (f64, f64) {
        (
            2.0 * MARGIN + SCALE * to_f64(&(&self.x1 - &self.x0)),
            2.0 * MARGIN + SCALE * to_f64(&(&self.y1 - &self.y0)),
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct RenderOptions {
    /// Viewport; chosen from the cell vertices and overlay points when absent.
    pub bbox: Option<BBox>,
    /// Points drawn as dots on top of the cells.
    pub overlay: Vec<RatVector>,
    /// A polyhedron drawn dashed on top of the cells, typically the input.
    pub outline: Option<Polyhedron>,
}

pub fn render_polyhedron(p: &Polyhedron, opts: &RenderOptions) -> Result<String> {
    if p.ambient_dim() != 2 {
        return Err(Error::NotTwoDimensional(p.ambient_dim()));
    }
    render_cells(std::slice::from_ref(p), opts)
}

pub fn render_complex(c: &PolyhedralComplex, opts: &RenderOptions) -> Result<String> {
    if c.ambient_dim() != 2 {
        return Err(Error::NotTwoDimensional(c.ambient_dim()));
    }
    render_cells(c.cells(), opts)
}

fn render_cells(cells: &[Polyhedron], opts: &RenderOptions) -> Result<String> {
    for p in &opts.overlay {
        if p.dim() != 2 {
            return Err(Error::NotTwoDimensional(p.dim()));
        }
    }
    if let Some(o) = &opts.outline {
        if o.ambient_dim() != 2 {
            return Err(Error::NotTwoDimensional(o.ambient_dim()));
        }
    }
    let bbox = match &opts.bbox {
        Some(b) => b.clone(),
        None => {
            let mut pts: Vec<RatVector> = cells.iter().flat_map(Polyhedron::vertices).collect();
            pts.extend(opts.overlay.iter().cloned());
            if let Some(o) = &opts.outline {
                pts.extend(o.vertices());
            }
            BBox::around(&pts, &rat(2))
        }
    };
    let clip = bbox.polyhedron();
    let (w, h) = bbox.size();

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.3}\" height=\"{h:.3}\" viewBox=\"0 0 {w:.3} {h:.3}\">"
    );
    let _ = writeln!(
        out,
        "<metadata>{{\"bbox\":[\"{}\",\"{}\",\"{}\",\"{}\"]}}</metadata>",
        format_rational(&bbox.x0),
        format_rational(&bbox.y0),
        format_rational(&bbox.x1),
        format_rational(&bbox.y1)
    );
    let _ = writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{w:.3}\" height=\"{h:.3}\" fill=\"white\"/>");

    out.push_str("<g class=\"cells\" fill=\"#808080\" fill-opacity=\"0.4\" stroke=\"black\" stroke-width=\"1\">\n");
    for cell in cells {
        let clipped = intersect(&[cell.clone(), clip.clone()])?;
        draw_cell(&mut out, &clipped, &bbox);
    }
    out.push_str("</g>\n");

    if let Some(o) = &opts.outline {
        out.push_str("<g class=\"outline\" fill=\"none\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n");
        let clipped = intersect(&[o.clone(), clip.clone()])?;
        draw_cell(&mut out, &clipped, &bbox);
        out.push_str("</g>\n");
    }

    if !opts.overlay.is_empty() {
        out.push_str("<g class=\"points\" fill=\"black\">\n");
        for p in &opts.overlay {
            if clip.contains(p) {
                let (x, y) = bbox.to_screen(p);
                let _ = writeln!(out, "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\"/>");
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn draw_cell(out: &mut String, p: &Polyhedron, bbox: &BBox) {
    let verts = p.vertices();
    match dim(p) {
        2 => {
            let pts: Vec<String> = sort_around_centroid(verts)
                .iter()
                .map(|v| {
                    let (x, y) = bbox.to_screen(v);
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            let _ = writeln!(out, "<polygon points=\"{}\"/>", pts.join(" "));
        }
        1 => {
            let (a, b) = (bbox.to_screen(&verts[0]), bbox.to_screen(&verts[verts.len() - 1]));
            let _ = writeln!(
                out,
                "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\"/>",
                a.0, a.1, b.0, b.1
            );
        }
        0 => {
            let (x, y) = bbox.to_screen(&verts[0]);
            let _ = writeln!(out, "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"2\"/>");
        }
        _ => {}
    }
}

/// Counterclockwise order of the vertices of a convex polygon, starting from the
/// direction of the positive x axis as seen from the centroid. Exact.
fn sort_around_centroid(mut verts: Vec<RatVector>) -> Vec<RatVector> {
    let n = Rational::from_integer(verts.len().into());
    let cx: Rational = verts.iter().map(|v| v[0].clone()).sum::<Rational>() / &n;
    let cy: Rational = verts.iter().map(|v| v[1].clone()).sum::<Rational>() / &n;
    let half = |dx: &Rational, dy: &Rational| -> u8 {
        if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
            0
        } else {
            1
        }
    };
    verts.sort_by(|a, b| {
        let (ax, ay) = (&a[0] - &cx, &a[1] - &cy);
        let (bx, by) = (&b[0] - &cx, &b[1] - &cy);
        half(&ax, &ay).cmp(&half(&bx, &by)).then_with(|| {
            let cross = &ax * &by - &ay * &bx;
            if cross.is_positive() {
                Ordering::Less
            } else if cross.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    });
    verts
}

/// The panels of the sector picture for a planar polyhedron `p`: `p` itself, the
/// three sums `p + S_j` and `tconv p = ⋂_j (p + S_j)`. Each panel overlays the
/// vertices and the dashed outline of `p`. All panels share one viewport.
pub struct FigurePanels {
    pub polytope: Polyhedron,
    pub sums: Vec<Polyhedron>,
    pub hull: Polyhedron,
    pub svgs: Vec<(String, String)>,
}

pub fn figure_panels(p: &Polyhedron, bbox: Option<BBox>) -> Result<FigurePanels> {
    if p.ambient_dim() != 2 {
        return Err(Error::NotTwoDimensional(p.ambient_dim()));
    }
    let p = p.canonical();
    let sums = (0..=2)
        .map(|j| minkowski_sum(&p, &sector(j, 2)?))
        .collect::<Result<Vec<_>>>()?;
    let hull = tconv_polyhedron(&p)?;
    let bbox = bbox.unwrap_or_else(|| BBox::around(&hull.vertices(), &rat(2)));
    let opts = RenderOptions {
        bbox: Some(bbox),
        overlay: p.vertices(),
        outline: Some(p.clone()),
    };
    let mut svgs = vec![("polytope".to_string(), render_polyhedron(&p, &opts)?)];
    for (j, s) in sums.iter().enumerate() {
        svgs.push((format!("sum_s{j}"), render_polyhedron(s, &opts)?));
    }
    svgs.push(("tconv".to_string(), render_polyhedron(&hull, &opts)?));
    Ok(FigurePanels {
        polytope: p,
        sums,
        hull,
        svgs,
    })
}
