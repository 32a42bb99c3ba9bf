//! Output helpers: canonical JSON, CSV member tables and SVG plots of the finite chart.

use serde::Serialize;
use serde_json::ser::Formatter;
use std::fmt::Write as _;
use std::io;

use crate::curves::SampledCurve;
use crate::error::{Error, Result};
use crate::orbit::MemberRow;
use crate::sphere::{chordal_distance, SpherePoint};

/// Compact JSON with floats in `{:.16e}` form (17 significant digits).
struct FixedFloats;

impl Formatter for FixedFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Canonical JSON text: object keys sorted, floats at 17 significant digits,
/// non-finite floats as `null`. Equal inputs give identical bytes.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    // going through Value sorts keys, since its map is ordered
    let v = serde_json::to_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloats);
    v.serialize(&mut ser).map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(out).map_err(|e| Error::Parse(e.to_string()))
}

/// One CSV row per family member.
pub fn member_rows_csv(rows: &[MemberRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let wrap = |e: csv::Error| Error::Io(e.to_string());
    w.write_record([
        "index",
        "word",
        "net_index",
        "source_index",
        "chordal_diameter",
        "degenerate",
        "simple",
        "turning_constant",
        "witness_i",
        "witness_j",
    ])
    .map_err(wrap)?;
    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
    for r in rows {
        w.write_record([
            r.index.to_string(),
            r.word.clone(),
            opt(r.net_index),
            opt(r.source_index),
            format!("{:.16e}", r.chordal_diameter),
            r.degenerate.to_string(),
            r.simple.to_string(),
            r.turning_constant.map(|c| format!("{c:.16e}")).unwrap_or_default(),
            opt(r.witness.map(|w| w.0)),
            opt(r.witness.map(|w| w.1)),
        ])
        .map_err(wrap)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Samples closer than this (chordal) to infinity are left out of plots.
pub const SVG_CLIP_CHORDAL: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq)]
pub struct SvgPlot {
    pub svg: String,
    pub clipped_points: usize,
}

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Polylines of the curves in the finite chart. Samples near infinity are
/// dropped, the polyline is broken there, and a notice is drawn.
pub fn curves_svg(curves: &[&SampledCurve]) -> SvgPlot {
    let keep = |p: &SpherePoint| chordal_distance(p, &SpherePoint::Infinity) >= SVG_CLIP_CHORDAL;
    let mut clipped = 0;
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for c in curves {
        for p in c.points() {
            match p.as_complex().filter(|_| keep(p)) {
                Some(z) => {
                    x0 = x0.min(z.re);
                    x1 = x1.max(z.re);
                    y0 = y0.min(z.im);
                    y1 = y1.max(z.im);
                }
                None => clipped += 1,
            }
        }
    }
    if !x0.is_finite() {
        (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-300);
    let pad = 0.05 * span;
    let size = 800.0;
    let scale = size / (span + 2.0 * pad);
    let tx = |x: f64| (x - x0 + pad) * scale;
    let ty = |y: f64| (y1 - y + pad) * scale;
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.3} {h:.3}">"#,
        w = (x1 - x0 + 2.0 * pad) * scale,
        h = (y1 - y0 + 2.0 * pad) * scale
    )
    .unwrap();
    writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (k, c) in curves.iter().enumerate() {
        let colour = PALETTE[k % PALETTE.len()];
        let n = c.len();
        // start the walk at a kept sample so runs wrap around correctly
        let Some(start) = c.points().iter().position(keep) else { continue };
        let mut run: Vec<String> = Vec::new();
        let flush = |run: &mut Vec<String>, svg: &mut String, closed: bool| {
            if run.len() > 1 {
                let tag = if closed { "polygon" } else { "polyline" };
                writeln!(
                    svg,
                    r#"<{tag} fill="none" stroke="{colour}" stroke-width="1" points="{}"/>"#,
                    run.join(" ")
                )
                .unwrap();
            }
            run.clear();
        };
        let mut broken = false;
        for i in 0..=n {
            let p = &c.points()[(start + i) % n];
            match p.as_complex().filter(|_| keep(p)) {
                Some(z) if i < n => run.push(format!("{:.3},{:.3}", tx(z.re), ty(z.im))),
                Some(z) => {
                    if broken {
                        run.push(format!("{:.3},{:.3}", tx(z.re), ty(z.im)));
                    }
                }
                None => {
                    broken = true;
                    flush(&mut run, &mut svg, false);
                }
            }
        }
        let closed = !broken;
        flush(&mut run, &mut svg, closed);
    }
    if clipped > 0 {
        writeln!(
            svg,
            r#"<text x="10" y="20" font-family="monospace" font-size="14">{clipped} sample(s) near infinity clipped</text>"#
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    SvgPlot { svg, clipped_points: clipped }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{cardioid, circle, moebius_image};
    use crate::moebius::MoebiusMap;
    use serde_json::json;

    #[test]
    fn canonical_json_is_sorted_and_fixed() {
        let v = json!({"b": 1.5, "a": [0.1, 2], "c": {"z": null, "y": -3e-20}});
        let s = to_canonical_json(&v).unwrap();
        assert_eq!(
            s,
            r#"{"a":[1.0000000000000001e-1,2],"b":1.5000000000000000e0,"c":{"y":-3.0000000000000003e-20,"z":null}}"#
        );
        let back: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["a"][0].as_f64(), Some(0.1));
        assert_eq!(to_canonical_json(&f64::NAN).unwrap(), "null");
    }

    #[test]
    fn csv_rows() {
        let rows = vec![MemberRow {
            index: 0,
            word: "g0^-2".into(),
            net_index: None,
            source_index: Some(1),
            chordal_diameter: 0.5,
            degenerate: false,
            simple: true,
            turning_constant: Some(2.0),
            witness: Some((1, 7)),
        }];
        let s = member_rows_csv(&rows).unwrap();
        let mut lines = s.lines();
        assert!(lines.next().unwrap().starts_with("index,word"));
        assert_eq!(
            lines.next().unwrap(),
            "0,g0^-2,,1,5.0000000000000000e-1,false,true,2.0000000000000000e0,1,7"
        );
    }

    #[test]
    fn svg_plots_and_clips() {
        let c = circle(0.0.into(), 1.0, 16).unwrap();
        let plot = curves_svg(&[&c]);
        assert_eq!(plot.clipped_points, 0);
        assert!(plot.svg.contains("<polygon"));
        let card = cardioid(64, 1.0).unwrap();
        let inv = MoebiusMap::from_real(0.0, 1.0, -1.0, 0.0).unwrap();
        let img = moebius_image(&card, &inv);
        let plot = curves_svg(&[&img, &c]);
        assert!(plot.clipped_points >= 1);
        assert!(plot.svg.contains("clipped"));
        assert!(plot.svg.contains("<polyline"));
    }
}
