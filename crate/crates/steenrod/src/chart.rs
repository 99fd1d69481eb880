//! Deterministic chart writers: TSV, JSON, SVG (x = t − s, y = s) and a
//! plain-text grid.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};
use steenrod_core::cobar_ss::SSPage;

use crate::header::Header;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
    Svg,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "tsv" => Some(Format::Tsv),
            "json" => Some(Format::Json),
            "svg" => Some(Format::Svg),
            "text" | "txt" => Some(Format::Text),
            _ => None,
        }
    }
}

/// dim by (s, t).
pub type Cells = BTreeMap<(u32, u32), usize>;

pub fn render(header: &Header, cells: &Cells, format: Format) -> String {
    match format {
        Format::Tsv => tsv(header, cells),
        Format::Json => json_chart(header, cells),
        Format::Svg => svg(header, cells),
        Format::Text => text(header, cells),
    }
}

pub fn tsv(header: &Header, cells: &Cells) -> String {
    let mut out = header.comment_block();
    out.push_str("s\tt\tdim\n");
    for (&(s, t), &d) in cells {
        if d > 0 {
            let _ = writeln!(out, "{}\t{}\t{}", s, t, d);
        }
    }
    out
}

pub fn json_chart(header: &Header, cells: &Cells) -> String {
    let rows: Vec<Value> =
        cells.iter().filter(|(_, &d)| d > 0).map(|(&(s, t), &d)| json!({"s": s, "t": t, "dim": d})).collect();
    let doc = json!({"meta": header.to_json(), "cells": rows});
    let mut s = serde_json::to_string_pretty(&doc).expect("json");
    s.push('\n');
    s
}

const CELL: u32 = 28;
const MARGIN: u32 = 36;

/// Adams-style dot chart; several classes in one bidegree are drawn side by side.
pub fn svg(header: &Header, cells: &Cells) -> String {
    let cells: Vec<(i64, u32, usize)> = cells
        .iter()
        .filter(|(_, &d)| d > 0)
        .filter(|(&(s, t), _)| t >= s)
        .map(|(&(s, t), &d)| ((t - s) as i64, s, d))
        .collect();
    let x_max = cells.iter().map(|c| c.0).max().unwrap_or(0) as u32;
    let y_max = cells.iter().map(|c| c.1).max().unwrap_or(0);
    let width = 2 * MARGIN + (x_max + 1) * CELL;
    let height = 2 * MARGIN + (y_max + 1) * CELL;
    let px = |x: u32| MARGIN + x * CELL + CELL / 2;
    let py = |y: u32| height - MARGIN - y * CELL - CELL / 2;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&header.svg_comment());
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = width,
        h = height
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    out.push_str("<g stroke=\"#dddddd\" stroke-width=\"1\">\n");
    for x in 0..=x_max + 1 {
        let gx = MARGIN + x * CELL;
        let _ = writeln!(out, "<line x1=\"{gx}\" y1=\"{}\" x2=\"{gx}\" y2=\"{}\"/>", MARGIN, height - MARGIN);
    }
    for y in 0..=y_max + 1 {
        let gy = MARGIN + y * CELL;
        let _ = writeln!(out, "<line x1=\"{}\" y1=\"{gy}\" x2=\"{}\" y2=\"{gy}\"/>", MARGIN, width - MARGIN);
    }
    out.push_str("</g>\n<g font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">\n");
    for x in 0..=x_max {
        let _ = writeln!(out, "<text x=\"{}\" y=\"{}\">{}</text>", px(x), height - MARGIN + 14, x);
    }
    for y in 0..=y_max {
        let _ = writeln!(out, "<text x=\"{}\" y=\"{}\">{}</text>", MARGIN - 12, py(y) + 4, y);
    }
    out.push_str("</g>\n<g fill=\"black\">\n");
    for &(x, y, d) in &cells {
        let (cx, cy) = (px(x as u32), py(y));
        let shown = d.min(4) as i64;
        for k in 0..shown {
            let off = (2 * k - (shown - 1)) * 4;
            let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"3\"/>", cx as i64 + off, cy);
        }
        if d > 4 {
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"8\">{}</text>",
                cx + 6,
                cy - 6,
                d
            );
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Rows s = s_max..0, columns t − s; `.` for zero.
pub fn text(header: &Header, cells: &Cells) -> String {
    let mut out = header.comment_block();
    let x_max = cells.keys().filter(|(s, t)| t >= s).map(|(s, t)| t - s).max().unwrap_or(0);
    let y_max = cells.keys().map(|k| k.0).max().unwrap_or(0);
    for s in (0..=y_max).rev() {
        let _ = write!(out, "{:>3} |", s);
        for x in 0..=x_max {
            match cells.get(&(s, s + x)) {
                Some(&d) if d > 0 => {
                    let _ = write!(out, "{:>3}", d);
                }
                _ => out.push_str("  ."),
            }
        }
        out.push('\n');
    }
    out.push_str("    +");
    out.push_str(&"---".repeat(x_max as usize + 1));
    out.push_str("\n     ");
    for x in 0..=x_max {
        let _ = write!(out, "{:>3}", x);
    }
    out.push_str("\n       t - s\n");
    out
}

fn matrix_rows(m: &steenrod_core::f2linalg::F2Matrix) -> Vec<String> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| if m.get(i, j) { '1' } else { '0' }).collect()).collect()
}

/// One spectral-sequence page: E_r^{p,q} at internal degree t, plus d_r.
pub fn render_page(header: &Header, page: &SSPage, format: Format) -> String {
    match format {
        Format::Json => {
            let cells: Vec<Value> = page
                .dims
                .iter()
                .map(|(&(p, q, t), &d)| json!({"p": p, "q": q, "t": t, "dim": d}))
                .collect();
            let diffs: Vec<Value> = page
                .differentials
                .iter()
                .map(|d| {
                    json!({
                        "source": [d.source.0, d.source.1, d.source.2],
                        "target": [d.target.0, d.target.1, d.target.2],
                        "rank": d.matrix.rank(),
                        "matrix": matrix_rows(&d.matrix),
                    })
                })
                .collect();
            let doc = json!({"meta": header.to_json(), "page": page.r, "cells": cells, "differentials": diffs});
            let mut s = serde_json::to_string_pretty(&doc).expect("json");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut out = header.comment_block();
            let _ = writeln!(out, "# page: {}", page.r);
            out.push_str("p\tq\tt\tdim\n");
            for (&(p, q, t), &d) in &page.dims {
                let _ = writeln!(out, "{}\t{}\t{}\t{}", p, q, t, d);
            }
            for d in &page.differentials {
                let _ = writeln!(
                    out,
                    "# d{}: ({},{},{}) -> ({},{},{}) rank {}",
                    page.r,
                    d.source.0,
                    d.source.1,
                    d.source.2,
                    d.target.0,
                    d.target.1,
                    d.target.2,
                    d.matrix.rank()
                );
            }
            out
        }
        Format::Svg | Format::Text => {
            // charted by total degree s = p + q
            let mut cells = Cells::new();
            for (&(p, q, t), &d) in &page.dims {
                *cells.entry((p + q, t)).or_insert(0) += d;
            }
            if format == Format::Svg {
                svg(header, &cells)
            } else {
                let mut out = text(header, &cells);
                let _ = writeln!(out, "page {}: {} nonzero d{}", page.r, page.differentials.len(), page.r);
                out
            }
        }
    }
}
