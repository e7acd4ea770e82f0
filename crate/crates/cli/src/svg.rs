//! Standalone 800×600 SVG plots: line, scatter, and histogram, with axes,
//! tick labels, and titles. Output is a pure function of the input data.

use zetalab_core::stats::Histogram;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN_LEFT: f64 = 75.0;
const MARGIN_RIGHT: f64 = 25.0;
const MARGIN_TOP: f64 = 45.0;
const MARGIN_BOTTOM: f64 = 55.0;

const SERIES_COLORS: [&str; 3] = ["#1f6fb2", "#c23b22", "#3a7d44"];

/// One named point set.
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

impl Series {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Self {
            label: label.into(),
            points,
        }
    }
}

struct Frame {
    x_lo: f64,
    x_hi: f64,
    y_lo: f64,
    y_hi: f64,
}

impl Frame {
    fn from_points<'a>(points: impl Iterator<Item = &'a (f64, f64)>) -> Self {
        let mut x_lo = f64::INFINITY;
        let mut x_hi = f64::NEG_INFINITY;
        let mut y_lo = f64::INFINITY;
        let mut y_hi = f64::NEG_INFINITY;
        for &(x, y) in points {
            x_lo = x_lo.min(x);
            x_hi = x_hi.max(x);
            y_lo = y_lo.min(y);
            y_hi = y_hi.max(y);
        }
        if !x_lo.is_finite() {
            // no finite points at all; draw an empty unit frame
            return Self {
                x_lo: 0.0,
                x_hi: 1.0,
                y_lo: 0.0,
                y_hi: 1.0,
            };
        }
        Self::padded(x_lo, x_hi, y_lo, y_hi)
    }

    fn padded(mut x_lo: f64, mut x_hi: f64, mut y_lo: f64, mut y_hi: f64) -> Self {
        if x_lo == x_hi {
            x_lo -= 0.5;
            x_hi += 0.5;
        }
        if y_lo == y_hi {
            y_lo -= 0.5;
            y_hi += 0.5;
        }
        let x_pad = 0.04 * (x_hi - x_lo);
        let y_pad = 0.05 * (y_hi - y_lo);
        Self {
            x_lo: x_lo - x_pad,
            x_hi: x_hi + x_pad,
            y_lo: y_lo - y_pad,
            y_hi: y_hi + y_pad,
        }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN_LEFT + (x - self.x_lo) / (self.x_hi - self.x_lo) * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - MARGIN_BOTTOM
            - (y - self.y_lo) / (self.y_hi - self.y_lo) * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    }
}

fn fmt_tick(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && (a >= 1e4 || a < 1e-2) {
        format!("{v:.2e}")
    } else {
        format!("{v:.3}")
    }
}

fn header(title: &str) -> String {
    format!(
        concat!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" ",
            "viewBox=\"0 0 {w} {h}\">\n",
            "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "<text x=\"{tx}\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\" ",
            "font-size=\"17\">{title}</text>\n"
        ),
        w = WIDTH,
        h = HEIGHT,
        tx = WIDTH / 2.0,
        title = escape(title),
    )
}

fn axes(frame: &Frame, x_label: &str, y_label: &str) -> String {
    let mut out = String::new();
    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;
    out.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>\n\
         <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>\n"
    ));
    for i in 0..=5 {
        let fx = frame.x_lo + (frame.x_hi - frame.x_lo) * i as f64 / 5.0;
        let px = frame.px(fx);
        out.push_str(&format!(
            "<line x1=\"{px:.2}\" y1=\"{y0}\" x2=\"{px:.2}\" y2=\"{}\" stroke=\"black\"/>\n\
             <text x=\"{px:.2}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
             font-size=\"11\">{}</text>\n",
            y0 + 5.0,
            y0 + 20.0,
            fmt_tick(fx)
        ));
        let fy = frame.y_lo + (frame.y_hi - frame.y_lo) * i as f64 / 5.0;
        let py = frame.py(fy);
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{py:.2}\" x2=\"{x0}\" y2=\"{py:.2}\" stroke=\"black\"/>\n\
             <text x=\"{}\" y=\"{:.2}\" text-anchor=\"end\" font-family=\"sans-serif\" \
             font-size=\"11\">{}</text>\n",
            x0 - 5.0,
            x0 - 8.0,
            py + 4.0,
            fmt_tick(fy)
        ));
    }
    out.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"13\">{}</text>\n",
        (x0 + x1) / 2.0,
        HEIGHT - 12.0,
        escape(x_label)
    ));
    out.push_str(&format!(
        "<text x=\"18\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"13\" transform=\"rotate(-90 18 {mid:.2})\">{}</text>\n",
        (y0 + y1) / 2.0,
        escape(y_label),
        mid = (y0 + y1) / 2.0,
    ));
    out
}

fn legend(series: &[Series]) -> String {
    if series.len() < 2 {
        return String::new();
    }
    let mut out = String::new();
    for (i, s) in series.iter().enumerate() {
        let y = MARGIN_TOP + 16.0 * i as f64 + 8.0;
        let color = SERIES_COLORS[i % SERIES_COLORS.len()];
        out.push_str(&format!(
            "<rect x=\"{}\" y=\"{:.2}\" width=\"12\" height=\"4\" fill=\"{color}\"/>\n\
             <text x=\"{}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
            WIDTH - 180.0,
            y,
            WIDTH - 162.0,
            y + 5.0,
            escape(&s.label)
        ));
    }
    out
}

fn finite_points(series: &[Series]) -> Vec<(f64, f64)> {
    series
        .iter()
        .flat_map(|s| s.points.iter())
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .copied()
        .collect()
}

/// Multi-series line plot; non-finite points are dropped.
pub fn line_plot(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let finite = finite_points(series);
    let frame = Frame::from_points(finite.iter());
    let mut out = header(title);
    out.push_str(&axes(&frame, x_label, y_label));
    for (i, s) in series.iter().enumerate() {
        let color = SERIES_COLORS[i % SERIES_COLORS.len()];
        let coords: Vec<String> = s
            .points
            .iter()
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .map(|&(x, y)| format!("{:.2},{:.2}", frame.px(x), frame.py(y)))
            .collect();
        if !coords.is_empty() {
            out.push_str(&format!(
                "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                coords.join(" ")
            ));
        }
    }
    out.push_str(&legend(series));
    out.push_str("</svg>\n");
    out
}

/// Multi-series scatter plot; non-finite points are dropped.
pub fn scatter_plot(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let finite = finite_points(series);
    let frame = Frame::from_points(finite.iter());
    let mut out = header(title);
    out.push_str(&axes(&frame, x_label, y_label));
    for (i, s) in series.iter().enumerate() {
        let color = SERIES_COLORS[i % SERIES_COLORS.len()];
        for (x, y) in s.points.iter().filter(|(x, y)| x.is_finite() && y.is_finite()) {
            out.push_str(&format!(
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"1.8\" fill=\"{color}\"/>\n",
                frame.px(*x),
                frame.py(*y)
            ));
        }
    }
    out.push_str(&legend(series));
    out.push_str("</svg>\n");
    out
}

/// Histogram as filled bars.
pub fn histogram_plot(title: &str, x_label: &str, y_label: &str, hist: &Histogram) -> String {
    let max_count = hist.counts.iter().copied().max().unwrap_or(0) as f64;
    let frame = Frame::padded(
        hist.edges[0],
        hist.edges[hist.edges.len() - 1],
        0.0,
        max_count.max(1.0),
    );
    let mut out = header(title);
    out.push_str(&axes(&frame, x_label, y_label));
    let base = frame.py(0.0);
    for (i, &count) in hist.counts.iter().enumerate() {
        let x0 = frame.px(hist.edges[i]);
        let x1 = frame.px(hist.edges[i + 1]);
        let top = frame.py(count as f64);
        out.push_str(&format!(
            "<rect x=\"{x0:.2}\" y=\"{top:.2}\" width=\"{:.2}\" height=\"{:.2}\" \
             fill=\"#1f6fb2\" stroke=\"white\" stroke-width=\"0.5\"/>\n",
            (x1 - x0).max(0.0),
            (base - top).max(0.0)
        ));
    }
    out.push_str("</svg>\n");
    out
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
