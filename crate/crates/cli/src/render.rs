//! SVG sketches of the real affine trace `z = 1`. Floating point is used for
//! drawing only; the marked points come from the exact intersection data.

use std::fmt::Write as _;

use nearfree_core::arrangement::{Arrangement, ConicSpec, LineSpec};
use nearfree_core::exactpoly::{rat, Rational};
use nearfree_core::singular::{pairwise_intersections, ProjPoint};
use num_traits::{ToPrimitive, Zero};

use crate::CliError;

pub const CONIC_SAMPLES: usize = 512;
const WIDTH: f64 = 512.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl std::str::FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let v: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|_| format!("\"{p}\" is not a number")))
            .collect::<Result<_, _>>()?;
        let [x0, y0, x1, y1] = v[..] else {
            return Err(format!("expected x0,y0,x1,y1, found {} values", v.len()));
        };
        Ok(Window { x0, y0, x1, y1 })
    }
}

impl Window {
    pub fn validate(&self) -> Result<(), String> {
        let finite = [self.x0, self.y0, self.x1, self.y1].iter().all(|v| v.is_finite());
        if !finite || self.x1 <= self.x0 || self.y1 <= self.y0 {
            return Err(format!(
                "degenerate window {},{},{},{}: need x0 < x1 and y0 < y1",
                self.x0, self.y0, self.x1, self.y1
            ));
        }
        Ok(())
    }

    fn height(&self) -> f64 {
        WIDTH * (self.y1 - self.y0) / (self.x1 - self.x0)
    }

    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        (
            (x - self.x0) / (self.x1 - self.x0) * WIDTH,
            (self.y1 - y) / (self.y1 - self.y0) * self.height(),
        )
    }

    fn span(&self) -> f64 {
        (self.x1 - self.x0).max(self.y1 - self.y0)
    }
}

impl Default for Window {
    fn default() -> Self {
        Window {
            x0: -10.0,
            y0: -10.0,
            x1: 10.0,
            y1: 10.0,
        }
    }
}

fn f(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Polyline pieces in world coordinates.
type Path = Vec<Vec<(f64, f64)>>;

fn line_path(l: &LineSpec, w: &Window) -> Path {
    let [a, b, c] = l.coeffs.clone().map(|q| f(&q));
    if a == 0.0 && b == 0.0 {
        return Vec::new(); // the line at infinity
    }
    let pad = w.span();
    let piece = if b.abs() >= a.abs() {
        let y = |x: f64| -(a * x + c) / b;
        vec![(w.x0 - pad, y(w.x0 - pad)), (w.x1 + pad, y(w.x1 + pad))]
    } else {
        let x = |y: f64| -(b * y + c) / a;
        vec![(x(w.y0 - pad), w.y0 - pad), (x(w.y1 + pad), w.y1 + pad)]
    };
    vec![piece]
}

fn bilinear(q: &[[f64; 3]; 3], u: &[f64; 3], v: &[f64; 3]) -> f64 {
    (0..3).map(|i| (0..3).map(|j| u[i] * q[i][j] * v[j]).sum::<f64>()).sum()
}

/// A real point of the conic, found on horizontal or vertical lines.
fn real_point(q: &[[f64; 3]; 3], w: &Window) -> Option<[f64; 3]> {
    let (cx, cy) = ((w.x0 + w.x1) / 2.0, (w.y0 + w.y1) / 2.0);
    for scale in [0.0, 0.5, 1.0, 4.0, 64.0, 4096.0] {
        for sign in [1.0, -1.0] {
            for vertical in [false, true] {
                let off = sign * scale * w.span();
                // points p + s e on the line through p with direction e
                let (p, e) = if vertical {
                    ([cx + off, 0.0, 1.0], [0.0, 1.0, 0.0])
                } else {
                    ([0.0, cy + off, 1.0], [1.0, 0.0, 0.0])
                };
                let (qa, qb, qc) = (bilinear(q, &e, &e), bilinear(q, &p, &e), bilinear(q, &p, &p));
                let disc = qb * qb - qa * qc;
                if qa.abs() > 1e-12 && disc >= 0.0 {
                    let s = (-qb + disc.sqrt()) / qa;
                    return Some([p[0] + s * e[0], p[1] + s * e[1], 1.0]);
                }
            }
        }
    }
    None
}

/// Samples the conic through the pencil of lines at a real point `p0`: the
/// line towards `(cos t, sin t, 0)` meets it again at `Q(w) p0 - 2 B(p0, w) w`.
fn conic_path(c: &ConicSpec, w: &Window) -> Path {
    let q = c.matrix().map(|row| row.map(|v| f(&v)));
    let Some(p0) = real_point(&q, w) else {
        return Vec::new();
    };
    let limit = 1e3 * w.span() + w.x0.abs().max(w.x1.abs()).max(w.y0.abs()).max(w.y1.abs());
    let mut pieces: Path = Vec::new();
    let mut current = Vec::new();
    for i in 0..=CONIC_SAMPLES {
        let t = std::f64::consts::PI * i as f64 / CONIC_SAMPLES as f64;
        let dir = [t.cos(), t.sin(), 0.0];
        let (qw, b) = (bilinear(&q, &dir, &dir), bilinear(&q, &p0, &dir));
        let h: [f64; 3] = std::array::from_fn(|k| qw * p0[k] - 2.0 * b * dir[k]);
        let norm = h.iter().map(|v| v * v).sum::<f64>().sqrt();
        let affine = (h[2].abs() > 1e-12 * norm).then(|| (h[0] / h[2], h[1] / h[2]));
        match affine.filter(|(x, y)| x.abs() <= limit && y.abs() <= limit) {
            Some(pt) => current.push(pt),
            None => {
                if current.len() > 1 {
                    pieces.push(std::mem::take(&mut current));
                }
                current.clear();
            }
        }
    }
    if current.len() > 1 {
        pieces.push(current);
    }
    // the sweep covers t in [0, pi]; glue the ends when the curve is closed
    if pieces.len() > 1 {
        let first = pieces.remove(0);
        pieces.last_mut().expect("nonempty").extend(first);
    }
    pieces
}

#[derive(Debug, Clone, PartialEq)]
pub enum Marker {
    /// Real affine point with rational or real quadratic coordinates.
    Drawn { x: f64, y: f64, label: String },
    /// Anything else: complex, at infinity, or of higher degree.
    Listed(String),
}

fn markers(arr: &Arrangement) -> Result<Vec<Marker>, CliError> {
    let pairs = pairwise_intersections(arr).map_err(|e| CliError::Inconsistent(e.to_string()))?;
    let mut points: Vec<ProjPoint> = Vec::new();
    for pi in pairs {
        for rec in pi.records {
            let mut p = rec.point;
            let mut seen = false;
            for q in points.iter_mut() {
                if p.try_eq(q).map_err(|e| CliError::Inconsistent(e.to_string()))? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                points.push(p);
            }
        }
    }
    let mut out = Vec::new();
    for mut p in points {
        let label = p.to_string();
        let real = p.is_real().map_err(|e| CliError::Inconsistent(e.to_string()))?;
        let finite = p.coords[2].as_rational().is_none_or(|z| !z.is_zero());
        let quadratic = p.coords.iter().all(|c| c.degree() <= 2);
        if real && finite && quadratic {
            let eps = rat(1, 1 << 40);
            let eps2 = &eps * &eps;
            for c in p.coords.iter_mut() {
                c.refine_until(&eps2).map_err(|e| CliError::Inconsistent(e.to_string()))?;
            }
            let [x, y, z] = p.coords.each_ref().map(|c| c.approx_re());
            out.push(Marker::Drawn {
                x: x / z,
                y: y / z,
                label,
            });
        } else {
            out.push(Marker::Listed(label));
        }
    }
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub struct Rendered {
    pub svg: String,
    pub markers: Vec<Marker>,
}

pub fn render_svg(arr: &Arrangement, w: &Window) -> Result<Rendered, CliError> {
    w.validate().map_err(CliError::Invalid)?;
    arr.validate().map_err(|e| CliError::Invalid(e.to_string()))?;
    let markers = markers(arr)?;
    let h = w.height();
    let mut svg = String::new();
    let s = &mut svg;
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{h:.2}" viewBox="0 0 {WIDTH} {h:.2}">"#
    );
    let _ = writeln!(s, "<title>{} lines, {} conics</title>", arr.d(), arr.k());
    let listed: Vec<&str> = markers
        .iter()
        .filter_map(|m| match m {
            Marker::Listed(l) => Some(l.as_str()),
            Marker::Drawn { .. } => None,
        })
        .collect();
    if !listed.is_empty() {
        let _ = writeln!(s, "<desc>intersection points not drawn: {}</desc>", escape(&listed.join("; ")));
    }
    let _ = writeln!(
        s,
        r#"<defs><clipPath id="window"><rect x="0" y="0" width="{WIDTH}" height="{h:.2}"/></clipPath></defs>"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{WIDTH}" height="{h:.2}" fill="white" stroke="gray"/>"#);
    let _ = writeln!(s, r#"<g clip-path="url(#window)" fill="none" stroke-width="2">"#);
    let paths = arr
        .lines
        .iter()
        .map(|l| line_path(l, w))
        .chain(arr.conics.iter().map(|c| conic_path(c, w)));
    for (i, path) in paths.enumerate() {
        let color = COLORS[i % COLORS.len()];
        for piece in path {
            let pts: Vec<String> = piece
                .iter()
                .map(|&(x, y)| {
                    let (px, py) = w.px(x, y);
                    format!("{px:.2},{py:.2}")
                })
                .collect();
            let _ = writeln!(
                s,
                r#"<polyline class="{}" stroke="{color}" points="{}"/>"#,
                arr.label(i),
                pts.join(" ")
            );
        }
    }
    for m in &markers {
        if let Marker::Drawn { x, y, label } = m {
            let (px, py) = w.px(*x, *y);
            let _ = writeln!(
                s,
                r#"<circle class="point" cx="{px:.2}" cy="{py:.2}" r="4" fill="black"><title>{}</title></circle>"#,
                escape(label)
            );
        }
    }
    let _ = writeln!(s, "</g>\n</svg>");
    Ok(Rendered { svg, markers })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows_parse_and_validate() {
        let w: Window = "-8,-8,8,8".parse().unwrap();
        assert_eq!(w, Window { x0: -8.0, y0: -8.0, x1: 8.0, y1: 8.0 });
        assert!(w.validate().is_ok());
        assert!("1,2,3".parse::<Window>().is_err());
        assert!("0,0,0,1".parse::<Window>().unwrap().validate().is_err());
    }

    #[test]
    fn circle_samples_lie_on_the_circle() {
        let c = ConicSpec::from_ints([1, 1, -16, 0, 0, 0]);
        let pieces = conic_path(&c, &Window::default());
        assert_eq!(pieces.len(), 1);
        assert!(pieces[0].len() > CONIC_SAMPLES);
        for (x, y) in &pieces[0] {
            assert!((x * x + y * y - 16.0).abs() < 1e-9);
        }
    }

    #[test]
    fn hyperbola_splits_at_infinity() {
        let c = ConicSpec::from_ints([1, -1, -1, 0, 0, 0]);
        let pieces = conic_path(&c, &Window::default());
        assert!(pieces.len() >= 2);
        for (x, y) in pieces.iter().flatten() {
            assert!((x * x - y * y - 1.0).abs() < 1e-6 * (1.0 + x * x));
        }
    }

    #[test]
    fn empty_real_conics_draw_nothing() {
        let c = ConicSpec::from_ints([1, 1, 1, 0, 0, 0]);
        assert!(conic_path(&c, &Window::default()).is_empty());
    }
}
