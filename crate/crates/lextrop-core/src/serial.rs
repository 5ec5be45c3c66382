//! Canonical JSON forms for the library's external types.
//!
//! Every writer produces the same bytes for equal values: objects carry
//! lex-sorted keys (the default map is ordered), arrays follow each
//! type's canonical ordering, and all lex values, rationals, and
//! constraints are written in their exact text forms. Pretty-printed
//! output ends in a newline so artifacts diff cleanly.

use std::str::FromStr;

use num::bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hahnseries::parse_hahn_series;
use crate::lexgroup::{parse_lex_value, LexValue, Rat};
use crate::paths::{PLPath, PathSegment};
use crate::polyhedra::{
    parse_halfspace, parse_linear_constraint, EuclideanPiece, LexComplex, LexPolyhedron,
};
use crate::skeleton::{InjectivityReport, MetricGraph};
use crate::tropicalize::ValuatedPolynomial;

/// Renders a JSON value in the canonical artifact form: two-space pretty
/// printing, sorted keys, one trailing newline.
pub fn canonical_json_string(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    text.push('\n');
    text
}

/// Parses JSON text, reporting failures as parse errors.
pub fn parse_json(input: &str) -> Result<Value> {
    serde_json::from_str(input).map_err(|e| Error::parse(0, e.to_string()))
}

fn field<'v>(object: &'v Value, key: &str) -> Result<&'v Value> {
    object
        .get(key)
        .ok_or_else(|| Error::parse(0, format!("missing field `{key}`")))
}

fn usize_field(object: &Value, key: &str) -> Result<usize> {
    field(object, key)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::parse(0, format!("field `{key}` must be a nonnegative integer")))
}

fn str_item(value: &Value, what: &str) -> Result<String> {
    value
        .as_str()
        .map(str::to_owned)
        .ok_or_else(|| Error::parse(0, format!("{what} must be a string")))
}

fn array_field<'v>(object: &'v Value, key: &str) -> Result<&'v Vec<Value>> {
    field(object, key)?
        .as_array()
        .ok_or_else(|| Error::parse(0, format!("field `{key}` must be an array")))
}

/// A point of `(R^(k))^d` as an array of lex-value strings.
pub fn point_to_json(point: &[LexValue]) -> Value {
    Value::Array(point.iter().map(|w| Value::String(w.to_string())).collect())
}

/// Reads a point back, enforcing the expected rank on every coordinate.
pub fn parse_point(value: &Value, rank: usize) -> Result<Vec<LexValue>> {
    let coords = value
        .as_array()
        .ok_or_else(|| Error::parse(0, "a point must be an array of lex values".to_string()))?;
    coords
        .iter()
        .map(|c| parse_lex_value(&str_item(c, "a point coordinate")?, Some(rank)))
        .collect()
}

/// `{"dim", "maximal_cells", "rank"}` with each cell its sorted
/// constraint-string list.
pub fn complex_to_json(complex: &LexComplex) -> Value {
    json!({
        "rank": complex.rank(),
        "dim": complex.dim(),
        "maximal_cells": complex
            .maximal_cells()
            .iter()
            .map(|cell| cell.constraint_strings())
            .collect::<Vec<_>>(),
    })
}

pub fn parse_complex(value: &Value) -> Result<LexComplex> {
    let rank = usize_field(value, "rank")?;
    let dim = usize_field(value, "dim")?;
    let mut cells = Vec::new();
    for cell in array_field(value, "maximal_cells")? {
        let strings = cell
            .as_array()
            .ok_or_else(|| Error::parse(0, "each cell must be an array".to_string()))?;
        let constraints = strings
            .iter()
            .map(|s| parse_halfspace(&str_item(s, "a constraint")?, rank, dim))
            .collect::<Result<Vec<_>>>()?;
        cells.push(LexPolyhedron::new(rank, dim, constraints)?);
    }
    LexComplex::new(rank, dim, cells)
}

/// `{"dim", "pieces", "rank"}` listing each Euclidean piece's sorted
/// constraint strings over the flattened coordinates.
pub fn pieces_to_json(rank: usize, dim: usize, pieces: &[EuclideanPiece]) -> Value {
    json!({
        "rank": rank,
        "dim": dim,
        "pieces": pieces
            .iter()
            .map(|p| p.constraint_strings())
            .collect::<Vec<_>>(),
    })
}

pub fn parse_pieces(value: &Value) -> Result<(usize, usize, Vec<EuclideanPiece>)> {
    let rank = usize_field(value, "rank")?;
    let dim = usize_field(value, "dim")?;
    let mut pieces = Vec::new();
    for piece in array_field(value, "pieces")? {
        let strings = piece
            .as_array()
            .ok_or_else(|| Error::parse(0, "each piece must be an array".to_string()))?;
        let constraints = strings
            .iter()
            .map(|s| parse_linear_constraint(&str_item(s, "a constraint")?, rank * dim))
            .collect::<Result<Vec<_>>>()?;
        pieces.push(EuclideanPiece::new(rank, dim, constraints)?);
    }
    Ok((rank, dim, pieces))
}

/// A path certificate: endpoints plus one record per segment holding the
/// start point, rational speed per variable, parameter bound, and the
/// index of the declared cell.
pub fn path_to_json(path: &PLPath) -> Value {
    json!({
        "rank": path.rank(),
        "dim": path.dim(),
        "start": point_to_json(path.start()),
        "end": point_to_json(path.end()),
        "segments": path
            .segments()
            .iter()
            .map(|seg| {
                json!({
                    "start": point_to_json(seg.start()),
                    "direction": seg
                        .direction()
                        .iter()
                        .map(|v| Value::String(v.to_string()))
                        .collect::<Vec<_>>(),
                    "bound": seg.bound().to_string(),
                    "cell": seg.cell(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn parse_rational(text: &str) -> Result<Rat> {
    Rat::from_str(text).map_err(|e| Error::parse(0, format!("bad rational `{text}`: {e}")))
}

pub fn parse_path(value: &Value) -> Result<PLPath> {
    let rank = usize_field(value, "rank")?;
    let dim = usize_field(value, "dim")?;
    let start = parse_point(field(value, "start")?, rank)?;
    let end = parse_point(field(value, "end")?, rank)?;
    let mut segments = Vec::new();
    for seg in array_field(value, "segments")? {
        let seg_start = parse_point(field(seg, "start")?, rank)?;
        let direction = array_field(seg, "direction")?
            .iter()
            .map(|v| parse_rational(&str_item(v, "a direction entry")?))
            .collect::<Result<Vec<_>>>()?;
        let bound = parse_lex_value(&str_item(field(seg, "bound")?, "a parameter bound")?, Some(rank))?;
        let cell = usize_field(seg, "cell")?;
        if seg_start.len() != dim || direction.len() != dim {
            return Err(Error::DimensionMismatch { left: dim, right: seg_start.len() });
        }
        segments.push(PathSegment::new(seg_start, direction, bound, cell)?);
    }
    Ok(PLPath::new(rank, dim, start, end, segments))
}

fn parse_exponent(key: &str, dim: usize) -> Result<Vec<BigInt>> {
    let parts: Vec<&str> = key.split(',').collect();
    if parts.len() != dim {
        return Err(Error::parse(
            0,
            format!("exponent `{key}` has {} entries, expected {dim}", parts.len()),
        ));
    }
    parts
        .iter()
        .map(|p| {
            BigInt::from_str(p.trim())
                .map_err(|e| Error::parse(0, format!("bad exponent `{key}`: {e}")))
        })
        .collect()
}

/// A polynomial as a map from comma-separated exponent vectors to
/// coefficient valuations in lex-value text form.
pub fn polynomial_to_json(p: &ValuatedPolynomial) -> Value {
    let mut map = Map::new();
    for (exponent, valuation) in p.terms() {
        let key = exponent
            .iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>()
            .join(",");
        map.insert(key, Value::String(valuation.to_string()));
    }
    Value::Object(map)
}

/// Reads a polynomial from the exponent map. Each value is either a lex
/// value (a direct coefficient valuation) or a Hahn series whose monomial
/// valuation is taken; series that are zero drop their term, matching the
/// convention that zero coefficients are absent.
pub fn polynomial_from_json(
    value: &Value,
    rank: usize,
    dim: usize,
) -> Result<ValuatedPolynomial> {
    let map = value
        .as_object()
        .ok_or_else(|| Error::parse(0, "a polynomial must be a JSON object".to_string()))?;
    let mut terms = Vec::new();
    for (key, raw) in map {
        let exponent = parse_exponent(key, dim)?;
        let text = str_item(raw, "a coefficient")?;
        match parse_lex_value(&text, Some(rank)) {
            Ok(valuation) => terms.push((exponent, valuation)),
            Err(_) => {
                let valuation = parse_hahn_series(&text, rank)?.nu_mon();
                // A zero series contributes no term.
                if valuation.is_finite() {
                    terms.push((exponent, valuation));
                }
            }
        }
    }
    ValuatedPolynomial::new(rank, dim, terms)
}

/// Reads a metric graph and its optional per-edge chart collections.
/// Shape: `{"rank", "vertices", "edges": [{"ends": [a, b], "length":
/// "(1,0)"|"inf"}], "functions": [[chart per edge]]}` where each chart is
/// a polynomial map (two variables on finite edges, one on marked edges).
pub fn parse_graph(value: &Value) -> Result<(MetricGraph, Vec<Vec<ValuatedPolynomial>>)> {
    let rank = usize_field(value, "rank")?;
    let vertices = usize_field(value, "vertices")?;
    let mut edges = Vec::new();
    for edge in array_field(value, "edges")? {
        let ends = array_field(edge, "ends")?;
        if ends.len() != 2 {
            return Err(Error::parse(0, "edge `ends` must list two vertices".to_string()));
        }
        let a = ends[0]
            .as_u64()
            .ok_or_else(|| Error::parse(0, "edge endpoints must be vertex indices".to_string()))?;
        let b = ends[1]
            .as_u64()
            .ok_or_else(|| Error::parse(0, "edge endpoints must be vertex indices".to_string()))?;
        let length = parse_lex_value(
            &str_item(field(edge, "length")?, "an edge length")?,
            Some(rank),
        )?;
        edges.push((a as usize, b as usize, length));
    }
    let graph = MetricGraph::new(rank, vertices, edges)?;
    let mut functions = Vec::new();
    if let Some(raw_functions) = value.get("functions") {
        let list = raw_functions
            .as_array()
            .ok_or_else(|| Error::parse(0, "`functions` must be an array".to_string()))?;
        for per_edge in list {
            let charts = per_edge
                .as_array()
                .ok_or_else(|| Error::parse(0, "each function must list one chart per edge".to_string()))?;
            if charts.len() != graph.edges().len() {
                return Err(Error::parse(
                    0,
                    format!(
                        "function has {} charts for {} edges",
                        charts.len(),
                        graph.edges().len()
                    ),
                ));
            }
            let mut parsed = Vec::new();
            for (e, chart) in charts.iter().enumerate() {
                let dim = if graph.edges()[e].is_marked() { 1 } else { 2 };
                parsed.push(polynomial_from_json(chart, rank, dim)?);
            }
            functions.push(parsed);
        }
    }
    Ok((graph, functions))
}

/// `{"injective", "samples_checked", "witness"}`; the witness is `null`
/// or a pair of `{"edge", "parameter"}` records.
pub fn report_to_json(report: &InjectivityReport) -> Value {
    let witness = match &report.witness {
        None => Value::Null,
        Some((a, b)) => json!([
            {"edge": a.edge(), "parameter": a.parameter().to_string()},
            {"edge": b.edge(), "parameter": b.parameter().to_string()},
        ]),
    };
    json!({
        "injective": report.injective,
        "samples_checked": report.samples_checked,
        "witness": witness,
    })
}
