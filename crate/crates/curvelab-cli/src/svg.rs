//! Static SVG rendering: the sampled curve, its interpolation sites, an
//! optional control-polygon overlay, and the curvature argmax highlighted in
//! red. Space curves are drawn as two orthographic panels (xy and xz) side
//! by side. Output is deterministic byte-for-byte.

use curvelab_core::{
    fit, max_curvature, solve_periodic, solve_relaxed, SplineKind, Vector,
};

use crate::{emit, load_input, Failure, SvgArgs};

const PANEL_SIDE: f64 = 600.0;
const PANEL_GAP: f64 = 40.0;
const LABEL_STRIP: f64 = 26.0;

/// One orthographic view: which coordinates to draw and its caption.
struct View {
    x_axis: usize,
    y_axis: usize,
    label: &'static str,
}

struct Mapper {
    min_x: f64,
    max_y: f64,
    margin_x: f64,
    margin_y: f64,
    scale: f64,
    width: f64,
    height: f64,
}

impl Mapper {
    fn fit(points: &[(f64, f64)]) -> Mapper {
        let mut min_x = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for &(x, y) in points {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        let span_x = (max_x - min_x).max(1e-9);
        let span_y = (max_y - min_y).max(1e-9);
        let margin_x = 0.05 * span_x;
        let margin_y = 0.05 * span_y;
        let scale = PANEL_SIDE / (span_x + 2.0 * margin_x).max(span_y + 2.0 * margin_y);
        Mapper {
            min_x,
            max_y,
            margin_x,
            margin_y,
            scale,
            width: (span_x + 2.0 * margin_x) * scale,
            height: (span_y + 2.0 * margin_y) * scale,
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            (x - self.min_x + self.margin_x) * self.scale,
            (self.max_y + self.margin_y - y) * self.scale,
        )
    }
}

fn coord(v: f64) -> String {
    format!("{v:.3}")
}

fn project(v: &Vector, view: &View) -> (f64, f64) {
    let c = v.coords();
    (c[view.x_axis], c[view.y_axis])
}

#[allow(clippy::too_many_arguments)]
fn render_panel(
    view: &View,
    path: &[Vector],
    sites: &[Vector],
    polygon: Option<&[Vector]>,
    argmax: &[Vector],
    labeled: bool,
    offset_x: f64,
) -> (String, f64, f64) {
    let mut flat: Vec<(f64, f64)> = path.iter().map(|v| project(v, view)).collect();
    flat.extend(sites.iter().map(|v| project(v, view)));
    if let Some(b) = polygon {
        flat.extend(b.iter().map(|v| project(v, view)));
    }
    flat.extend(argmax.iter().map(|v| project(v, view)));
    let mapper = Mapper::fit(&flat);
    let top = if labeled { LABEL_STRIP } else { 0.0 };

    let place = |v: &Vector| {
        let (x, y) = project(v, view);
        let (px, py) = mapper.map(x, y);
        (px + offset_x, py + top)
    };

    let mut out = String::new();
    if labeled {
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"18\" font-family=\"sans-serif\" font-size=\"14\">{}</text>\n",
            coord(offset_x + 4.0),
            view.label
        ));
    }
    if let Some(b) = polygon {
        let pts: Vec<String> = b
            .iter()
            .map(|v| {
                let (x, y) = place(v);
                format!("{},{}", coord(x), coord(y))
            })
            .collect();
        out.push_str(&format!(
            "  <polyline class=\"ctrl\" points=\"{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n",
            pts.join(" ")
        ));
    }
    let mut d = String::new();
    for (i, v) in path.iter().enumerate() {
        let (x, y) = place(v);
        let op = if i == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{op} {} {} ", coord(x), coord(y)));
    }
    out.push_str(&format!(
        "  <path d=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n",
        d.trim_end()
    ));
    for v in sites {
        let (x, y) = place(v);
        out.push_str(&format!(
            "  <circle class=\"pt\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#1f77b4\"/>\n",
            coord(x),
            coord(y)
        ));
    }
    for v in argmax {
        let (x, y) = place(v);
        out.push_str(&format!(
            "  <circle class=\"argmax\" cx=\"{}\" cy=\"{}\" r=\"5.5\" fill=\"red\"/>\n",
            coord(x),
            coord(y)
        ));
    }
    (out, mapper.width, mapper.height + top)
}

pub fn cmd_svg(args: &SvgArgs) -> Result<(), Failure> {
    if let Some(samples) = args.samples {
        if samples < 2 {
            return Err(Failure::validation(format!(
                "--samples must be at least 2, got {samples}"
            )));
        }
    }
    let (dataset, kind) = load_input(&args.common)?;
    let set = dataset.to_point_set()?;
    let polygon = match kind {
        SplineKind::Relaxed => solve_relaxed(&set)?,
        SplineKind::Periodic => solve_periodic(&set)?,
    };
    let curve = fit(&set, kind)?;
    let report = max_curvature(&curve)?;

    let samples = args
        .samples
        .unwrap_or(curve.segments().len() * 64 + 1)
        .max(2);
    let end = curve.domain_end();
    let path: Vec<Vector> = (0..samples)
        .map(|i| {
            let t = end * (i as f64 / (samples - 1) as f64);
            curve.eval(t, 0).expect("grid stays inside the domain")
        })
        .collect();
    let argmax: Vec<Vector> = report
        .argmax
        .iter()
        .map(|&t| curve.eval(t, 0).expect("argmax stays inside the domain"))
        .collect();
    let overlay = args.show_control_polygon.then(|| polygon.points());

    let views: &[View] = if curve.dim() == 2 {
        &[View {
            x_axis: 0,
            y_axis: 1,
            label: "xy",
        }]
    } else {
        &[
            View {
                x_axis: 0,
                y_axis: 1,
                label: "xy",
            },
            View {
                x_axis: 0,
                y_axis: 2,
                label: "xz",
            },
        ]
    };
    let labeled = views.len() > 1;

    let mut body = String::new();
    let mut offset = 0.0f64;
    let mut total_w = 0.0f64;
    let mut total_h = 0.0f64;
    for (i, view) in views.iter().enumerate() {
        let (panel, w, h) = render_panel(
            view,
            &path,
            set.points(),
            overlay,
            &argmax,
            labeled,
            offset,
        );
        body.push_str(&panel);
        offset += w + PANEL_GAP;
        total_w += w + if i + 1 < views.len() { PANEL_GAP } else { 0.0 };
        total_h = total_h.max(h);
    }
    if report.degenerate {
        total_h += 24.0;
        body.push_str(&format!(
            "  <text x=\"4\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\">degenerate: curvature is constant; no maximum marked</text>\n",
            coord(total_h - 8.0)
        ));
    }

    let text = format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n{body}</svg>\n",
        w = coord(total_w),
        h = coord(total_h),
        body = body
    );
    emit(args.common.output.as_ref(), &text)
}
