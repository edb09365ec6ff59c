//! Staircase drawings of G-graphs: one cell per monomial `x^i y^j`, with
//! basis cells, twin pairs sharing a marker, and monomials of the ideal.

use std::collections::BTreeMap;
use std::fmt::Write;

use ghilb_core::algebra::{GPolynomial, Monomial};
use ghilb_core::ggraph::{GGraph, GraphBasis};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Ascii,
    Svg,
}

pub const BASIS_GLYPH: char = '#';
pub const IDEAL_GLYPH: char = '.';

fn twin_marker(index: usize) -> char {
    char::from(b'a' + (index % 26) as u8)
}

/// Twin marker of every cell that belongs to a twin pair.
fn twin_markers(basis: &GraphBasis) -> BTreeMap<Monomial, char> {
    basis.twins.iter().enumerate().flat_map(|(i, t)| [(t.first, twin_marker(i)), (t.second, twin_marker(i))]).collect()
}

fn extent(basis: &GraphBasis) -> (u32, u32) {
    let width = basis.monomials.iter().map(|m| m.x).max().unwrap_or(0) + 2;
    let height = basis.monomials.iter().map(|m| m.y).max().unwrap_or(0) + 2;
    (width, height)
}

fn twin_lines(basis: &GraphBasis) -> Vec<String> {
    basis
        .twins
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let rhs = GPolynomial::term(t.ratio.clone(), t.second);
            format!("{}: {} = {}", twin_marker(i), GPolynomial::from(t.first), rhs)
        })
        .collect()
}

fn title(graph: &GGraph) -> String {
    format!("{} {} -> {}", graph.kind, graph.first, graph.second)
}

pub fn render(graph: &GGraph, basis: &GraphBasis, mode: Mode) -> String {
    match mode {
        Mode::Ascii => ascii(graph, basis),
        Mode::Svg => svg(graph, basis),
    }
}

pub fn ascii(graph: &GGraph, basis: &GraphBasis) -> String {
    let markers = twin_markers(basis);
    let (width, height) = extent(basis);
    let label_width = (height - 1).to_string().len();
    let mut out = String::new();
    writeln!(out, "{}", title(graph)).unwrap();
    for j in (0..height).rev() {
        let row: String = (0..width)
            .map(|i| {
                let m = Monomial::new(i, j);
                match markers.get(&m) {
                    Some(&c) => c,
                    None if basis.monomials.contains(&m) => BASIS_GLYPH,
                    None => IDEAL_GLYPH,
                }
            })
            .collect();
        writeln!(out, "{j:>label_width$} |{row}").unwrap();
    }
    writeln!(out, "{:>label_width$} +{}", "", "-".repeat(width as usize)).unwrap();
    writeln!(out, "x^i runs left to right from i = 0, y^j bottom to top").unwrap();
    writeln!(out, "{BASIS_GLYPH} basis, a-z twin pairs, {IDEAL_GLYPH} in the ideal").unwrap();
    for line in twin_lines(basis) {
        writeln!(out, "twin {line}").unwrap();
    }
    for g in &graph.generators {
        writeln!(out, "generator {g}").unwrap();
    }
    out
}

const CELL: u32 = 14;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn svg(graph: &GGraph, basis: &GraphBasis) -> String {
    let markers = twin_markers(basis);
    let (width, height) = extent(basis);
    let legend: Vec<String> = std::iter::once(title(graph))
        .chain(twin_lines(basis).into_iter().map(|l| format!("twin {l}")))
        .chain(graph.generators.iter().map(|g| format!("generator {g}")))
        .collect();
    let grid_w = width * CELL;
    let grid_h = height * CELL;
    let total_w = grid_w.max(480) + 2 * CELL;
    let total_h = grid_h + 2 * CELL + legend.len() as u32 * 16 + CELL;
    let mut out = String::new();
    writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" viewBox="0 0 {total_w} {total_h}" font-family="monospace" font-size="10">"##
    )
    .unwrap();
    for m in &basis.monomials {
        let x = CELL + m.x * CELL;
        let y = CELL + (height - 1 - m.y) * CELL;
        let fill = if markers.contains_key(m) { "#b0b0b0" } else { "#ffffff" };
        writeln!(out, r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#000000"/>"##).unwrap();
        if let Some(c) = markers.get(m) {
            writeln!(out, r##"<text x="{}" y="{}" text-anchor="middle">{c}</text>"##, x + CELL / 2, y + CELL - 3).unwrap();
        }
    }
    for (k, line) in legend.iter().enumerate() {
        let y = grid_h + 2 * CELL + k as u32 * 16;
        writeln!(out, r##"<text x="{CELL}" y="{y}">{}</text>"##, escape(line)).unwrap();
    }
    out.push_str("</svg>\n");
    out
}
