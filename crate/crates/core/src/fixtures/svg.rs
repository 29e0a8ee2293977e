use std::fmt::Write;

use num_traits::ToPrimitive;

use super::{Fixture, Payload};
use crate::angle_oracle::{sector_of, AngleSector, Dir};
use crate::error::{Error, LawError};

const SIZE: f64 = 512.0;
const CENTER: f64 = 256.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

fn angle(d: &Dir) -> f64 {
    let x = d.x.to_f64().unwrap_or(0.0);
    let y = d.y.to_f64().unwrap_or(0.0);
    y.atan2(x)
}

/// Screen coordinates: y grows downwards.
fn at(t: f64, r: f64) -> (f64, f64) {
    (CENTER + r * t.cos(), CENTER - r * t.sin())
}

/// Counterclockwise arc from `t0` to `t1`, at most half a turn.
fn wedge(t0: f64, t1: f64, r: f64) -> String {
    let (x0, y0) = at(t0, r);
    let (x1, y1) = at(t1, r);
    // math-counterclockwise is clockwise on screen, sweep flag 0
    format!("M {CENTER:.2} {CENTER:.2} L {x0:.2} {y0:.2} A {r:.2} {r:.2} 0 0 0 {x1:.2} {y1:.2} Z")
}

fn ray(t: f64, r: f64) -> String {
    let (x, y) = at(t, r);
    format!("M {CENTER:.2} {CENTER:.2} L {x:.2} {y:.2}")
}

fn shape(s: &AngleSector, r: f64) -> Vec<String> {
    match s {
        AngleSector::Origin => vec![],
        AngleSector::Ray { dir } => vec![ray(angle(dir), r)],
        AngleSector::Line { dir } => {
            let t = angle(dir);
            vec![ray(t, r), ray(t + std::f64::consts::PI, r)]
        }
        AngleSector::Sector { start, end } => {
            let (t0, mut t1) = (angle(start), angle(end));
            if t1 < t0 {
                t1 += 2.0 * std::f64::consts::PI;
            }
            vec![wedge(t0, t1, r)]
        }
        AngleSector::Halfplane { start, .. } => {
            let t0 = angle(start);
            let half = std::f64::consts::FRAC_PI_2;
            vec![wedge(t0, t0 + half, r), wedge(t0 + half, t0 + 2.0 * half, r)]
        }
        AngleSector::Full => vec![format!(
            "M {:.2} {CENTER:.2} A {r:.2} {r:.2} 0 1 0 {:.2} {CENTER:.2} A {r:.2} {r:.2} 0 1 0 {:.2} {CENTER:.2} Z",
            CENTER + r,
            CENTER - r,
            CENTER + r
        )],
    }
}

fn label_angle(s: &AngleSector) -> f64 {
    match s {
        AngleSector::Origin | AngleSector::Full => std::f64::consts::FRAC_PI_4,
        AngleSector::Ray { dir } | AngleSector::Line { dir } => angle(dir),
        AngleSector::Sector { start, end } => {
            let (t0, mut t1) = (angle(start), angle(end));
            if t1 < t0 {
                t1 += 2.0 * std::f64::consts::PI;
            }
            (t0 + t1) / 2.0
        }
        AngleSector::Halfplane { start, .. } => angle(start) + std::f64::consts::FRAC_PI_2,
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Planar picture of a cone fixture: filled cones, dashed polars, points.
pub fn render_svg(f: &Fixture) -> Result<String, Error> {
    let Payload::Cones { cones, points } = &f.payload else {
        return Err(LawError::NotApplicable(format!("{} is not a cone fixture", f.name)).into());
    };
    if cones.iter().any(|(_, c)| c.dim() != 2) {
        return Err(LawError::NotApplicable(format!("{} is not planar", f.name)).into());
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<title>{}</title>"#, escape(f.name));
    let _ = writeln!(out, r##"<rect width="{SIZE}" height="{SIZE}" fill="#ffffff"/>"##);
    let _ = writeln!(
        out,
        r##"<path d="M 16 {CENTER} H 496 M {CENTER} 16 V 496" stroke="#bbbbbb" stroke-width="1"/>"##
    );
    let n = cones.len().max(1) as f64;
    for (i, (name, c)) in cones.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let r = 230.0 - 120.0 * i as f64 / n;
        let s = sector_of(c)?;
        for d in shape(&s, r) {
            let _ = writeln!(
                out,
                r#"<path d="{d}" fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="2"/>"#
            );
        }
        for d in shape(&sector_of(&c.polar())?, r) {
            let _ = writeln!(
                out,
                r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="1" stroke-dasharray="4 3"/>"#
            );
        }
        let (x, y) = at(label_angle(&s), r + 12.0);
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{y:.2}" fill="{color}" font-family="sans-serif" font-size="14">{}</text>"#,
            escape(name)
        );
    }
    let scale = points
        .iter()
        .flat_map(|(_, p)| p.0.iter().map(|q| q.as_rational().to_f64().unwrap_or(0.0).abs()))
        .fold(0.0f64, f64::max);
    for (name, p) in points {
        let coord = |k: usize| p.0[k].as_rational().to_f64().unwrap_or(0.0) / scale.max(1e-9) * 200.0;
        let (x, y) = (CENTER + coord(0), CENTER - coord(1));
        let _ = writeln!(out, r##"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#000000"/>"##);
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" fill="#000000" font-family="sans-serif" font-size="14">{}</text>"##,
            x + 6.0,
            y - 6.0,
            escape(name)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixture;
    use super::*;

    #[test]
    fn planar_fixtures_render() {
        let s = render_svg(&fixture("o6-cones").unwrap()).unwrap();
        assert!(s.starts_with("<svg"));
        assert_eq!(s.matches("<text").count(), 6);
        let s = render_svg(&fixture("aep").unwrap()).unwrap();
        assert_eq!(s.matches("<circle").count(), 2);
    }

    #[test]
    fn non_planar_fixtures_do_not() {
        assert!(render_svg(&fixture("pom-cones-r3").unwrap()).is_err());
        assert!(render_svg(&fixture("mc8-pom").unwrap()).is_err());
    }

    #[test]
    fn quarter_turn_wedge() {
        let w = wedge(0.0, std::f64::consts::FRAC_PI_2, 100.0);
        assert!(w.contains("L 356.00 256.00 A 100.00 100.00 0 0 0 256.00 156.00"));
    }
}
