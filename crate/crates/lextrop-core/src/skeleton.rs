//! Metric graphs with lex-valued edge lengths, piecewise-linear charts on
//! their edges, paths along the graph, and a sampling check that a tuple
//! of functions separates points.
//!
//! An edge is an oriented interval `[0, l]` glued to its endpoint
//! vertices, with `l` a nonnegative lex value or the infinite length; an
//! infinite edge models a puncture direction and must dangle: its far
//! endpoint (at parameter infinity) is a marked vertex of degree one,
//! while the branch point sits at parameter `0`. A chart on a finite edge
//! is a two-variable polynomial with term weights
//! `val(a) + j*w + k*(l - w)`; on a marked edge a one-variable polynomial
//! in the parameter. The function value at a point is the minimum weight,
//! the same monomial-valuation rule used for orthant patches.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num::bigint::BigInt;
use num::Zero;

use crate::error::{Error, Result};
use crate::lexgroup::{LexValue, Rat};
use crate::paths::{GeneralizedInterval, OrientedSegment};
use crate::tropicalize::{monomial_valuation, ExtendedPoint, ValuatedPolynomial};

/// One edge of a metric graph: the interval `[0, length]` running from
/// `ends.0` (parameter `0`) to `ends.1`. Infinite length marks the edge;
/// `ends.1` is then the marked endpoint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MetricEdge {
    ends: (usize, usize),
    length: LexValue,
}

impl MetricEdge {
    pub fn ends(&self) -> (usize, usize) {
        self.ends
    }

    pub fn length(&self) -> &LexValue {
        &self.length
    }

    /// Does the edge run off to infinity?
    pub fn is_marked(&self) -> bool {
        self.length.is_infinity()
    }
}

/// A finite graph with positive lex lengths on its edges. Self-loops are
/// rejected; every infinite edge must end in a vertex of degree one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MetricGraph {
    rank: usize,
    vertex_count: usize,
    edges: Vec<MetricEdge>,
}

impl MetricGraph {
    pub fn new(
        rank: usize,
        vertex_count: usize,
        edges: Vec<(usize, usize, LexValue)>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::invalid("rank must be at least 1"));
        }
        let mut degree = vec![0usize; vertex_count];
        let mut built = Vec::with_capacity(edges.len());
        for (a, b, length) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::invalid("edge endpoint out of range"));
            }
            if a == b {
                return Err(Error::invalid("self-loops are not allowed"));
            }
            if let Some(r) = length.rank() {
                if r != rank {
                    return Err(Error::RankMismatch { left: r, right: rank });
                }
                if length.lex_cmp(&LexValue::zero(rank))? != std::cmp::Ordering::Greater {
                    return Err(Error::invalid("edge lengths must be positive"));
                }
            }
            degree[a] += 1;
            degree[b] += 1;
            built.push(MetricEdge { ends: (a, b), length });
        }
        for edge in &built {
            if edge.is_marked() && degree[edge.ends.1] != 1 {
                return Err(Error::invalid(
                    "an infinite edge must end in a vertex of degree one",
                ));
            }
        }
        Ok(MetricGraph { rank, vertex_count, edges: built })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[MetricEdge] {
        &self.edges
    }
}

/// A point of the graph: a parameter on one edge. The parameter ranges
/// over `[0, length]`; on a marked edge it may be infinite, naming the
/// marked endpoint itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkeletonPoint {
    edge: usize,
    parameter: LexValue,
}

impl SkeletonPoint {
    pub fn new(graph: &MetricGraph, edge: usize, parameter: LexValue) -> Result<Self> {
        if edge >= graph.edges.len() {
            return Err(Error::invalid("edge index out of range"));
        }
        check_parameter(graph, &graph.edges[edge], &parameter)?;
        Ok(SkeletonPoint { edge, parameter })
    }

    pub fn edge(&self) -> usize {
        self.edge
    }

    pub fn parameter(&self) -> &LexValue {
        &self.parameter
    }
}

impl fmt::Display for SkeletonPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edge {} at {}", self.edge, self.parameter)
    }
}

fn check_parameter(graph: &MetricGraph, edge: &MetricEdge, parameter: &LexValue) -> Result<()> {
    if parameter.is_infinity() {
        if edge.is_marked() {
            return Ok(());
        }
        return Err(Error::ParameterOutOfRange);
    }
    if parameter.rank() != Some(graph.rank) {
        return Err(Error::RankMismatch {
            left: parameter.rank().unwrap_or(0),
            right: graph.rank,
        });
    }
    let zero = LexValue::zero(graph.rank);
    if parameter.lex_cmp(&zero)? == std::cmp::Ordering::Less
        || parameter.lex_cmp(&edge.length)? == std::cmp::Ordering::Greater
    {
        return Err(Error::ParameterOutOfRange);
    }
    Ok(())
}

/// Where a point actually sits: endpoint parameters collapse to their
/// vertex, so points reached along different edges compare correctly.
#[derive(Clone, PartialEq, Eq, Debug)]
enum Location {
    Vertex(usize),
    Interior { edge: usize, parameter: LexValue },
}

fn locate(graph: &MetricGraph, point: &SkeletonPoint) -> Result<Location> {
    let edge = &graph.edges[point.edge];
    if point.parameter.is_infinity() {
        return Ok(Location::Vertex(edge.ends.1));
    }
    if point.parameter.is_zero() {
        return Ok(Location::Vertex(edge.ends.0));
    }
    if !edge.is_marked() && point.parameter == edge.length {
        return Ok(Location::Vertex(edge.ends.1));
    }
    Ok(Location::Interior { edge: point.edge, parameter: point.parameter.clone() })
}

/// The parameter at which a located point appears on `edge`, if it does.
fn position_on(graph: &MetricGraph, location: &Location, edge_index: usize) -> Option<LexValue> {
    let edge = &graph.edges[edge_index];
    match location {
        Location::Vertex(v) => {
            if *v == edge.ends.0 {
                Some(LexValue::zero(graph.rank))
            } else if *v == edge.ends.1 {
                Some(edge.length.clone())
            } else {
                None
            }
        }
        Location::Interior { edge: e, parameter } => {
            if *e == edge_index {
                Some(parameter.clone())
            } else {
                None
            }
        }
    }
}

/// One leg of a path: a parameter interval traversed on one edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkeletonSegment {
    edge: usize,
    span: OrientedSegment,
}

impl SkeletonSegment {
    pub fn edge(&self) -> usize {
        self.edge
    }

    pub fn span(&self) -> &OrientedSegment {
        &self.span
    }
}

/// A path along the graph: consecutive legs share their junction vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkeletonPath {
    segments: Vec<SkeletonSegment>,
}

impl SkeletonPath {
    pub fn segments(&self) -> &[SkeletonSegment] {
        &self.segments
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// The parameter chain of the path.
    pub fn interval(&self) -> GeneralizedInterval {
        GeneralizedInterval::new(self.segments.iter().map(|s| s.span.clone()).collect())
    }
}

fn segment(edge: usize, a: LexValue, b: LexValue) -> Result<SkeletonSegment> {
    // Traverse from a to b; the span stores the interval plus direction.
    let descending = match (a.is_infinity(), b.is_infinity()) {
        (true, _) => true,
        (_, true) => false,
        (false, false) => a.lex_cmp(&b)? == std::cmp::Ordering::Greater,
    };
    let (lo, hi) = if descending { (b, a) } else { (a, b) };
    Ok(SkeletonSegment { edge, span: OrientedSegment::new(lo, hi, descending)? })
}

/// Connects two points along the graph: a single edge leg when both lie
/// on one edge, otherwise breadth-first search over vertices (lowest edge
/// index first) with partial legs at both ends. At most one leg per
/// vertex of the graph; equal points give the empty path.
pub fn skeleton_path(
    graph: &MetricGraph,
    p: &SkeletonPoint,
    q: &SkeletonPoint,
) -> Result<SkeletonPath> {
    if p.edge >= graph.edges.len() || q.edge >= graph.edges.len() {
        return Err(Error::invalid("edge index out of range"));
    }
    check_parameter(graph, &graph.edges[p.edge], &p.parameter)?;
    check_parameter(graph, &graph.edges[q.edge], &q.parameter)?;

    let lp = locate(graph, p)?;
    let lq = locate(graph, q)?;
    if lp == lq {
        return Ok(SkeletonPath { segments: Vec::new() });
    }
    for e in 0..graph.edges.len() {
        if let (Some(a), Some(b)) = (position_on(graph, &lp, e), position_on(graph, &lq, e)) {
            return Ok(SkeletonPath { segments: vec![segment(e, a, b)?] });
        }
    }

    // Vertex adjacency, neighbors listed by ascending edge index.
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); graph.vertex_count];
    for (i, edge) in graph.edges.iter().enumerate() {
        adjacency[edge.ends.0].push((i, edge.ends.1));
        adjacency[edge.ends.1].push((i, edge.ends.0));
    }

    let sources: Vec<(usize, Option<SkeletonSegment>)> = match &lp {
        Location::Vertex(v) => vec![(*v, None)],
        Location::Interior { edge, parameter } => {
            let e = &graph.edges[*edge];
            vec![
                (e.ends.0, Some(segment(*edge, parameter.clone(), LexValue::zero(graph.rank))?)),
                (e.ends.1, Some(segment(*edge, parameter.clone(), e.length.clone())?)),
            ]
        }
    };
    let targets: BTreeMap<usize, Option<SkeletonSegment>> = match &lq {
        Location::Vertex(v) => BTreeMap::from([(*v, None)]),
        Location::Interior { edge, parameter } => {
            let e = &graph.edges[*edge];
            BTreeMap::from([
                (e.ends.0, Some(segment(*edge, LexValue::zero(graph.rank), parameter.clone())?)),
                (e.ends.1, Some(segment(*edge, e.length.clone(), parameter.clone())?)),
            ])
        }
    };

    let mut parent: Vec<Option<(usize, usize)>> = vec![None; graph.vertex_count];
    let mut root: Vec<Option<usize>> = vec![None; graph.vertex_count];
    let mut queue = VecDeque::new();
    let mut reached: Option<usize> = None;
    for (i, (v, _)) in sources.iter().enumerate() {
        if root[*v].is_some() {
            continue;
        }
        root[*v] = Some(i);
        if targets.contains_key(v) {
            reached = Some(*v);
            break;
        }
        queue.push_back(*v);
    }
    while reached.is_none() {
        let Some(v) = queue.pop_front() else {
            return Err(Error::DisconnectedGraph);
        };
        for &(e, w) in &adjacency[v] {
            if root[w].is_some() {
                continue;
            }
            root[w] = root[v];
            parent[w] = Some((v, e));
            if targets.contains_key(&w) {
                reached = Some(w);
                break;
            }
            queue.push_back(w);
        }
    }

    let goal = reached.expect("loop exits only when reached");
    let mut chain: Vec<(usize, usize)> = Vec::new();
    let mut cursor = goal;
    while let Some((prev, e)) = parent[cursor] {
        chain.push((e, cursor));
        cursor = prev;
    }
    chain.reverse();

    let mut segments = Vec::new();
    let source_index = root[cursor].expect("cursor is a seeded source");
    if let Some(prefix) = &sources[source_index].1 {
        segments.push(prefix.clone());
    }
    let mut at = cursor;
    for (e, next) in chain {
        let edge = &graph.edges[e];
        let (from, to) = if edge.ends.0 == at {
            (LexValue::zero(graph.rank), edge.length.clone())
        } else {
            (edge.length.clone(), LexValue::zero(graph.rank))
        };
        segments.push(segment(e, from, to)?);
        at = next;
    }
    if let Some(suffix) = &targets[&goal] {
        segments.push(suffix.clone());
    }
    Ok(SkeletonPath { segments })
}

/// The value at parameter `omega` of a chart on a finite edge of length
/// `length`: the minimum over terms of `val(a) + j*omega + k*(length -
/// omega)`. Requires `0 <= omega <= length`.
pub fn edge_valuation(
    chart: &ValuatedPolynomial,
    length: &LexValue,
    omega: &LexValue,
) -> Result<LexValue> {
    if chart.dim() != 2 {
        return Err(Error::DimensionMismatch { left: chart.dim(), right: 2 });
    }
    let length_rank = length.rank().ok_or(Error::UnexpectedInfinity)?;
    if length_rank != chart.rank() {
        return Err(Error::RankMismatch { left: length_rank, right: chart.rank() });
    }
    if omega.is_infinity()
        || omega.lex_cmp(&LexValue::zero(chart.rank()))? == std::cmp::Ordering::Less
        || omega.lex_cmp(length)? == std::cmp::Ordering::Greater
    {
        return Err(Error::ParameterOutOfRange);
    }
    let point = ExtendedPoint::new(chart.rank(), vec![omega.clone(), length.lex_sub(omega)?])?;
    monomial_valuation(chart, &point)
}

/// The value at parameter `omega` of a chart on a marked edge: the
/// minimum over terms of `val(a) + j*omega`, where `omega` may be
/// infinite (the marked endpoint itself).
pub fn marked_edge_valuation(chart: &ValuatedPolynomial, omega: &LexValue) -> Result<LexValue> {
    if chart.dim() != 1 {
        return Err(Error::DimensionMismatch { left: chart.dim(), right: 1 });
    }
    if omega.is_finite() {
        if omega.rank() != Some(chart.rank()) {
            return Err(Error::RankMismatch {
                left: omega.rank().unwrap_or(0),
                right: chart.rank(),
            });
        }
        if omega.lex_cmp(&LexValue::zero(chart.rank()))? == std::cmp::Ordering::Less {
            return Err(Error::ParameterOutOfRange);
        }
    }
    let point = ExtendedPoint::new(chart.rank(), vec![omega.clone()])?;
    monomial_valuation(chart, &point)
}

fn chart_value(edge: &MetricEdge, chart: &ValuatedPolynomial, omega: &LexValue) -> Result<LexValue> {
    if edge.is_marked() {
        marked_edge_valuation(chart, omega)
    } else {
        edge_valuation(chart, &edge.length, omega)
    }
}

/// Outcome of the sampling injectivity check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InjectivityReport {
    /// No two distinct sampled points shared an image.
    pub injective: bool,
    /// A colliding pair, when one exists.
    pub witness: Option<(SkeletonPoint, SkeletonPoint)>,
    /// How many distinct points were sampled.
    pub samples_checked: usize,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum LocationKey {
    Vertex(usize),
    Interior(usize, String),
}

fn location_key(location: &Location) -> LocationKey {
    match location {
        Location::Vertex(v) => LocationKey::Vertex(*v),
        Location::Interior { edge, parameter } => {
            LocationKey::Interior(*edge, parameter.to_string())
        }
    }
}

/// Samples every edge on a uniform grid and tests whether the function
/// tuple separates the sampled points. Finite edges take parameters
/// `i*length/n` for `i = 0..=n`; marked edges take the integer parameters
/// `0..n` plus the marked endpoint. Charts are indexed
/// `charts[function][edge]` and must agree where edges meet; disagreement
/// at a shared vertex is reported as an error, not a witness.
pub fn faithful_injectivity_check(
    graph: &MetricGraph,
    charts: &[Vec<ValuatedPolynomial>],
    samples_per_edge: usize,
) -> Result<InjectivityReport> {
    if samples_per_edge == 0 {
        return Err(Error::invalid("samples_per_edge must be at least 1"));
    }
    for (f, per_edge) in charts.iter().enumerate() {
        if per_edge.len() != graph.edges.len() {
            return Err(Error::invalid(format!(
                "function {f} has {} charts for {} edges",
                per_edge.len(),
                graph.edges.len()
            )));
        }
        for (e, chart) in per_edge.iter().enumerate() {
            let expected_dim = if graph.edges[e].is_marked() { 1 } else { 2 };
            if chart.dim() != expected_dim {
                return Err(Error::invalid(format!(
                    "chart of function {f} on edge {e} has dimension {}, expected {expected_dim}",
                    chart.dim()
                )));
            }
            if chart.rank() != graph.rank {
                return Err(Error::RankMismatch { left: chart.rank(), right: graph.rank });
            }
        }
        // Charts must give one well-defined value per vertex.
        let mut at_vertex: Vec<Option<LexValue>> = vec![None; graph.vertex_count];
        for (e, edge) in graph.edges.iter().enumerate() {
            let far = if edge.is_marked() { LexValue::Infinity } else { edge.length.clone() };
            for (v, omega) in [(edge.ends.0, LexValue::zero(graph.rank)), (edge.ends.1, far)] {
                let value = chart_value(edge, &per_edge[e], &omega)?;
                match &at_vertex[v] {
                    None => at_vertex[v] = Some(value),
                    Some(seen) if *seen == value => {}
                    Some(_) => {
                        return Err(Error::invalid(format!(
                            "charts of function {f} disagree at vertex {v}"
                        )))
                    }
                }
            }
        }
    }

    let mut seen_locations = BTreeSet::new();
    let mut images: BTreeMap<String, SkeletonPoint> = BTreeMap::new();
    let mut samples_checked = 0usize;
    for (e, edge) in graph.edges.iter().enumerate() {
        let mut parameters = Vec::new();
        if edge.is_marked() {
            for i in 0..samples_per_edge {
                let mut coords = vec![Rat::zero(); graph.rank];
                coords[0] = Rat::from(BigInt::from(i));
                parameters.push(LexValue::Finite(coords));
            }
            parameters.push(LexValue::Infinity);
        } else {
            let n = BigInt::from(samples_per_edge);
            for i in 0..=samples_per_edge {
                let fraction = Rat::new(BigInt::from(i), n.clone());
                parameters.push(edge.length.rational_scale(&fraction)?);
            }
        }
        for omega in parameters {
            let point = SkeletonPoint { edge: e, parameter: omega.clone() };
            let key = location_key(&locate(graph, &point)?);
            if !seen_locations.insert(key) {
                continue;
            }
            samples_checked += 1;
            let image: Vec<String> = charts
                .iter()
                .map(|per_edge| chart_value(edge, &per_edge[e], &omega).map(|v| v.to_string()))
                .collect::<Result<_>>()?;
            let image_key = image.join(";");
            if let Some(first) = images.get(&image_key) {
                return Ok(InjectivityReport {
                    injective: false,
                    witness: Some((first.clone(), point)),
                    samples_checked,
                });
            }
            images.insert(image_key, point);
        }
    }
    Ok(InjectivityReport { injective: true, witness: None, samples_checked })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(coords: &[i64]) -> LexValue {
        LexValue::from_ints(coords)
    }

    fn triangle() -> MetricGraph {
        MetricGraph::new(
            1,
            3,
            vec![(0, 1, lv(&[1])), (1, 2, lv(&[1])), (0, 2, lv(&[1]))],
        )
        .unwrap()
    }

    /// Two vertices joined by a short and a long edge, rank 2.
    fn two_cycle() -> MetricGraph {
        MetricGraph::new(
            2,
            2,
            vec![(0, 1, lv(&[1, 0])), (1, 0, lv(&[2, 0]))],
        )
        .unwrap()
    }

    #[test]
    fn graph_shape_is_validated() {
        assert!(MetricGraph::new(1, 2, vec![(0, 0, lv(&[1]))]).is_err());
        assert!(MetricGraph::new(1, 2, vec![(0, 3, lv(&[1]))]).is_err());
        assert!(MetricGraph::new(1, 2, vec![(0, 1, lv(&[0]))]).is_err());
        assert!(MetricGraph::new(1, 2, vec![(0, 1, lv(&[-1]))]).is_err());
        // An infinite edge into a vertex of degree two is rejected, into a
        // dangling vertex it is fine.
        assert!(MetricGraph::new(
            1,
            3,
            vec![(0, 1, LexValue::Infinity), (1, 2, lv(&[1]))],
        )
        .is_err());
        assert!(MetricGraph::new(
            1,
            3,
            vec![(0, 1, LexValue::Infinity), (0, 2, lv(&[1]))],
        )
        .is_ok());
    }

    #[test]
    fn skeleton_points_respect_parameter_ranges() {
        let g = triangle();
        assert!(SkeletonPoint::new(&g, 0, lv(&[0])).is_ok());
        assert!(SkeletonPoint::new(&g, 0, lv(&[1])).is_ok());
        assert_eq!(
            SkeletonPoint::new(&g, 0, lv(&[2])).unwrap_err(),
            Error::ParameterOutOfRange
        );
        assert_eq!(
            SkeletonPoint::new(&g, 0, LexValue::Infinity).unwrap_err(),
            Error::ParameterOutOfRange
        );
        let marked = MetricGraph::new(1, 2, vec![(0, 1, LexValue::Infinity)]).unwrap();
        assert!(SkeletonPoint::new(&marked, 0, LexValue::Infinity).is_ok());
        assert!(SkeletonPoint::new(&marked, 0, lv(&[100])).is_ok());
    }

    #[test]
    fn path_from_edge_interior_crosses_one_vertex() {
        let g = triangle();
        let p = SkeletonPoint::new(&g, 0, LexValue::from_ratios(&[(1, 2)])).unwrap();
        let q = SkeletonPoint::new(&g, 1, lv(&[1])).unwrap();
        let path = skeleton_path(&g, &p, &q).unwrap();
        assert!(path.segments().len() <= g.vertex_count());
        assert_eq!(path.segments().len(), 2);
        // First leg: down edge 0 to vertex 0; second leg: edge 2 to vertex 2.
        assert_eq!(path.segments()[0].edge(), 0);
        assert!(path.segments()[0].span().descending());
        assert_eq!(path.segments()[1].edge(), 2);
        assert!(!path.segments()[1].span().descending());
        assert_eq!(*path.segments()[1].span().hi(), lv(&[1]));
    }

    #[test]
    fn identified_endpoints_are_the_same_point() {
        let g = triangle();
        // Vertex 1 reached as the far end of edge 0 and the near end of
        // edge 1.
        let p = SkeletonPoint::new(&g, 0, lv(&[1])).unwrap();
        let q = SkeletonPoint::new(&g, 1, lv(&[0])).unwrap();
        let path = skeleton_path(&g, &p, &q).unwrap();
        assert!(path.is_empty());
        assert!(path.interval().is_empty());
    }

    #[test]
    fn same_edge_points_take_a_single_leg() {
        let g = triangle();
        let p = SkeletonPoint::new(&g, 1, LexValue::from_ratios(&[(3, 4)])).unwrap();
        let q = SkeletonPoint::new(&g, 1, LexValue::from_ratios(&[(1, 4)])).unwrap();
        let path = skeleton_path(&g, &p, &q).unwrap();
        assert_eq!(path.segments().len(), 1);
        let leg = &path.segments()[0];
        assert_eq!(leg.edge(), 1);
        assert!(leg.span().descending());
        assert_eq!(*leg.span().lo(), LexValue::from_ratios(&[(1, 4)]));
        assert_eq!(*leg.span().hi(), LexValue::from_ratios(&[(3, 4)]));
    }

    #[test]
    fn disconnected_graphs_are_reported() {
        let g = MetricGraph::new(1, 4, vec![(0, 1, lv(&[1])), (2, 3, lv(&[1]))]).unwrap();
        let p = SkeletonPoint::new(&g, 0, lv(&[0])).unwrap();
        let q = SkeletonPoint::new(&g, 1, lv(&[1])).unwrap();
        assert_eq!(skeleton_path(&g, &p, &q).unwrap_err(), Error::DisconnectedGraph);
    }

    #[test]
    fn path_to_a_marked_endpoint_runs_to_infinity() {
        let g = MetricGraph::new(1, 3, vec![(0, 1, lv(&[2])), (1, 2, LexValue::Infinity)]).unwrap();
        let p = SkeletonPoint::new(&g, 0, lv(&[1])).unwrap();
        let q = SkeletonPoint::new(&g, 1, LexValue::Infinity).unwrap();
        let path = skeleton_path(&g, &p, &q).unwrap();
        assert_eq!(path.segments().len(), 2);
        assert_eq!(path.segments()[1].edge(), 1);
        assert_eq!(*path.segments()[1].span().hi(), LexValue::Infinity);
        assert!(!path.segments()[1].span().descending());
    }

    #[test]
    fn edge_valuation_is_the_minimum_term_weight() {
        // Terms: w, (length - w), and the constant (3,0).
        let chart = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[1, 0], &[0, 0]), (&[0, 1], &[0, 0]), (&[0, 0], &[3, 0])],
        )
        .unwrap();
        let length = lv(&[4, 0]);
        assert_eq!(edge_valuation(&chart, &length, &lv(&[1, 0])).unwrap(), lv(&[1, 0]));
        assert_eq!(edge_valuation(&chart, &length, &lv(&[3, 0])).unwrap(), lv(&[1, 0]));
        // In the middle the constant term wins the minimum.
        assert_eq!(edge_valuation(&chart, &length, &lv(&[2, 0])).unwrap(), lv(&[2, 0]));
        assert_eq!(
            edge_valuation(&chart, &length, &lv(&[5, 0])).unwrap_err(),
            Error::ParameterOutOfRange
        );
        assert_eq!(
            edge_valuation(&chart, &length, &lv(&[-1, 0])).unwrap_err(),
            Error::ParameterOutOfRange
        );
    }

    #[test]
    fn flipping_an_edge_flips_the_chart() {
        let chart = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[2, 0], &[0, 1]), (&[0, 1], &[1, 0]), (&[1, 1], &[0, 0])],
        )
        .unwrap();
        let flipped = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[0, 2], &[0, 1]), (&[1, 0], &[1, 0]), (&[1, 1], &[0, 0])],
        )
        .unwrap();
        let length = lv(&[3, 1]);
        for omega in [lv(&[0, 0]), lv(&[1, 0]), lv(&[2, 1]), lv(&[3, 1])] {
            let reverse = length.lex_sub(&omega).unwrap();
            assert_eq!(
                edge_valuation(&chart, &length, &omega).unwrap(),
                edge_valuation(&flipped, &length, &reverse).unwrap()
            );
        }
    }

    #[test]
    fn marked_valuation_accepts_the_infinite_parameter() {
        // val = min(w, (1,0)): a slope-one term and a constant.
        let chart = ValuatedPolynomial::from_int_terms(2, 1, &[(&[1], &[0, 0]), (&[0], &[1, 0])])
            .unwrap();
        assert_eq!(marked_edge_valuation(&chart, &lv(&[0, 0])).unwrap(), lv(&[0, 0]));
        assert_eq!(marked_edge_valuation(&chart, &LexValue::Infinity).unwrap(), lv(&[1, 0]));
        // A pure power has infinite value at the marked endpoint.
        let pure = ValuatedPolynomial::from_int_terms(2, 1, &[(&[2], &[0, 0])]).unwrap();
        assert_eq!(marked_edge_valuation(&pure, &LexValue::Infinity).unwrap(), LexValue::Infinity);
        assert_eq!(
            marked_edge_valuation(&chart, &lv(&[-1, 0])).unwrap_err(),
            Error::ParameterOutOfRange
        );
    }

    /// Charts of the planar embedding of the two-cycle: the short edge
    /// maps to the segment from (0,0) to (1,1) recorded by its first
    /// coordinate sum, the long edge walks back along two unit sides.
    fn two_cycle_charts() -> Vec<Vec<ValuatedPolynomial>> {
        let f1_short =
            ValuatedPolynomial::from_int_terms(2, 2, &[(&[1, 0], &[0, 0])]).unwrap();
        let f1_long = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[0, 0], &[1, 0]), (&[0, 1], &[0, 0])],
        )
        .unwrap();
        let f2_short =
            ValuatedPolynomial::from_int_terms(2, 2, &[(&[0, 0], &[0, 0])]).unwrap();
        let f2_long = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[1, 0], &[0, 0]), (&[0, 1], &[0, 0])],
        )
        .unwrap();
        vec![vec![f1_short, f1_long], vec![f2_short, f2_long]]
    }

    #[test]
    fn two_functions_separate_the_two_cycle() {
        let g = two_cycle();
        let report = faithful_injectivity_check(&g, &two_cycle_charts(), 8).unwrap();
        assert!(report.injective, "witness: {:?}", report.witness);
        assert!(report.witness.is_none());
        // 9 grid points per edge, the two shared vertices counted once.
        assert_eq!(report.samples_checked, 16);
    }

    #[test]
    fn one_function_fails_to_separate_it() {
        let g = two_cycle();
        let charts = vec![two_cycle_charts().remove(1)];
        let report = faithful_injectivity_check(&g, &charts, 8).unwrap();
        assert!(!report.injective);
        let (a, b) = report.witness.expect("a collision must be reported");
        // The constant chart on the short edge collides immediately.
        assert_eq!(a.edge(), 0);
        assert_eq!(b.edge(), 0);
        assert_ne!(a.parameter(), b.parameter());
        // The reported pair really does have equal images.
        let value = |pt: &SkeletonPoint| {
            chart_value(&g.edges()[pt.edge()], &charts[0][pt.edge()], pt.parameter()).unwrap()
        };
        assert_eq!(value(&a), value(&b));
    }

    #[test]
    fn marked_edge_chart_separates_the_ray() {
        let g = MetricGraph::new(2, 2, vec![(0, 1, LexValue::Infinity)]).unwrap();
        let chart =
            vec![vec![ValuatedPolynomial::from_int_terms(2, 1, &[(&[1], &[0, 0])]).unwrap()]];
        let report = faithful_injectivity_check(&g, &chart, 5).unwrap();
        assert!(report.injective);
        assert_eq!(report.samples_checked, 6);
    }

    #[test]
    fn incompatible_charts_are_an_error_not_a_witness() {
        // Two edges meeting at vertex 1; the charts disagree there.
        let g = MetricGraph::new(1, 3, vec![(0, 1, lv(&[1])), (1, 2, lv(&[1]))]).unwrap();
        let grows = ValuatedPolynomial::from_int_terms(1, 2, &[(&[1, 0], &[0])]).unwrap();
        let flat = ValuatedPolynomial::from_int_terms(1, 2, &[(&[0, 0], &[0])]).unwrap();
        let err = faithful_injectivity_check(&g, &[vec![grows, flat]], 4).unwrap_err();
        assert!(err.to_string().contains("disagree at vertex 1"), "{err}");
    }

    #[test]
    fn sample_grids_respect_lex_scaling() {
        // A rank-2 length (1,0) divides into quarters (1/4,0), (1/2,0), ...
        let g = two_cycle();
        let report = faithful_injectivity_check(&g, &two_cycle_charts(), 4).unwrap();
        assert!(report.injective);
        assert_eq!(report.samples_checked, 8);
    }
}
