//! Piecewise-linear paths between points of a complex: generalized
//! intervals, cell-adjacency search, constructive connection, and exact
//! certificate verification.
//!
//! A path segment is the affine image `{start + t*v : 0 <= t <= bound}` of
//! a lex interval, with one rational speed `v_i` per variable. Every
//! constraint value `<image(t), u>` is then `<start,u> + (sum u_i v_i)*t`,
//! an affine and lex-monotone function of `t`, so a segment lies in a cell
//! exactly when its two endpoints do. Verification therefore reduces to
//! endpoint and junction checks, all in exact rational arithmetic.

use std::cmp::Ordering;
use std::collections::VecDeque;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::lexgroup::{LexValue, Rat};
use crate::polyhedra::{LexComplex, LexHalfspace, LexPolyhedron};

/// One closed oriented interval `[lo, hi]` in the extended lex line,
/// traversed ascending by default or descending when flagged.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientedSegment {
    lo: LexValue,
    hi: LexValue,
    descending: bool,
}

impl OrientedSegment {
    pub fn new(lo: LexValue, hi: LexValue, descending: bool) -> Result<Self> {
        if lo.is_infinity() {
            return Err(Error::UnexpectedInfinity);
        }
        if hi.is_finite() && lo.lex_cmp(&hi)? == Ordering::Greater {
            return Err(Error::invalid("interval endpoints out of order"));
        }
        Ok(OrientedSegment { lo, hi, descending })
    }

    pub fn lo(&self) -> &LexValue {
        &self.lo
    }

    pub fn hi(&self) -> &LexValue {
        &self.hi
    }

    pub fn descending(&self) -> bool {
        self.descending
    }

    /// The endpoint the traversal starts at.
    pub fn start(&self) -> &LexValue {
        if self.descending {
            &self.hi
        } else {
            &self.lo
        }
    }

    /// The endpoint the traversal arrives at.
    pub fn end(&self) -> &LexValue {
        if self.descending {
            &self.lo
        } else {
            &self.hi
        }
    }
}

/// A finite chain of oriented intervals with consecutive endpoints
/// identified: the arrival point of each segment is glued to the start of
/// the next. The gluing is abstract (the parameter values need not agree);
/// continuity of any map defined on the chain is checked on images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralizedInterval {
    segments: Vec<OrientedSegment>,
}

impl GeneralizedInterval {
    pub fn new(segments: Vec<OrientedSegment>) -> Self {
        GeneralizedInterval { segments }
    }

    pub fn segments(&self) -> &[OrientedSegment] {
        &self.segments
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }
}

/// One affine leg of a path: the image of `[0, bound]` under
/// `t -> start + t*v`, declared to lie in the complex cell `cell`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathSegment {
    start: Vec<LexValue>,
    direction: Vec<Rat>,
    bound: LexValue,
    cell: usize,
}

impl PathSegment {
    pub fn new(start: Vec<LexValue>, direction: Vec<Rat>, bound: LexValue, cell: usize) -> Result<Self> {
        if start.len() != direction.len() {
            return Err(Error::DimensionMismatch { left: start.len(), right: direction.len() });
        }
        if bound.is_infinity() || start.iter().any(LexValue::is_infinity) {
            return Err(Error::UnexpectedInfinity);
        }
        Ok(PathSegment { start, direction, bound, cell })
    }

    pub fn start(&self) -> &[LexValue] {
        &self.start
    }

    pub fn direction(&self) -> &[Rat] {
        &self.direction
    }

    pub fn bound(&self) -> &LexValue {
        &self.bound
    }

    pub fn cell(&self) -> usize {
        self.cell
    }

    /// The arrival point `start + bound*v`.
    pub fn endpoint(&self) -> Result<Vec<LexValue>> {
        self.start
            .iter()
            .zip(&self.direction)
            .map(|(s, v)| s.lex_add(&self.bound.rational_scale(v)?))
            .collect()
    }
}

/// A piecewise-linear path through a complex: segments whose images chain
/// from `start` to `end`, each inside its declared cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PLPath {
    rank: usize,
    dim: usize,
    start: Vec<LexValue>,
    end: Vec<LexValue>,
    segments: Vec<PathSegment>,
}

impl PLPath {
    pub fn new(
        rank: usize,
        dim: usize,
        start: Vec<LexValue>,
        end: Vec<LexValue>,
        segments: Vec<PathSegment>,
    ) -> Self {
        PLPath { rank, dim, start, end, segments }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn start(&self) -> &[LexValue] {
        &self.start
    }

    pub fn end(&self) -> &[LexValue] {
        &self.end
    }

    pub fn segments(&self) -> &[PathSegment] {
        &self.segments
    }

    /// The parameter chain of the path: one ascending interval `[0, bound]`
    /// per segment.
    pub fn interval(&self) -> GeneralizedInterval {
        GeneralizedInterval::new(
            self.segments
                .iter()
                .map(|s| {
                    OrientedSegment::new(
                        LexValue::zero(self.rank),
                        s.bound.clone(),
                        false,
                    )
                    .expect("segment bounds are finite and nonnegative")
                })
                .collect(),
        )
    }
}

/// Adjacency of the maximal cells of a complex: an edge joins two cells
/// exactly when their intersection is nonempty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellAdjacency {
    neighbors: Vec<Vec<usize>>,
}

impl CellAdjacency {
    pub fn node_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, cell: usize) -> &[usize] {
        &self.neighbors[cell]
    }

    /// Is the whole graph one component? The empty graph counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        let n = self.neighbors.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut found = 1;
        while let Some(c) = queue.pop_front() {
            for &nb in &self.neighbors[c] {
                if !seen[nb] {
                    seen[nb] = true;
                    found += 1;
                    queue.push_back(nb);
                }
            }
        }
        found == n
    }
}

/// Builds the cell-adjacency graph by exact pairwise emptiness tests.
pub fn build_adjacency(complex: &LexComplex) -> Result<CellAdjacency> {
    let cells = complex.maximal_cells();
    let mut neighbors = vec![Vec::new(); cells.len()];
    for i in 0..cells.len() {
        for j in (i + 1)..cells.len() {
            if !cells[i].intersect(&cells[j])?.is_empty() {
                neighbors[i].push(j);
                neighbors[j].push(i);
            }
        }
    }
    Ok(CellAdjacency { neighbors })
}

fn heads(point: &[LexValue]) -> Vec<Rat> {
    point
        .iter()
        .map(|w| w.coords().expect("finite point")[0].clone())
        .collect()
}

fn tails(point: &[LexValue]) -> Vec<LexValue> {
    point
        .iter()
        .map(|w| LexValue::Finite(w.coords().expect("finite point")[1..].to_vec()))
        .collect()
}

fn join(heads: &[Rat], tails: &[LexValue]) -> Vec<LexValue> {
    heads
        .iter()
        .zip(tails)
        .map(|(h, t)| {
            let mut coords = vec![h.clone()];
            coords.extend_from_slice(t.coords().expect("finite tail"));
            LexValue::Finite(coords)
        })
        .collect()
}

/// A straight segment from `x` to `y`, when the displacements of all
/// variables are parallel: one common parameter bound scaled by a rational
/// speed per variable. Both endpoints lying in a cell then certifies the
/// whole segment (constraint values are affine and monotone in `t`).
fn straight_segment(x: &[LexValue], y: &[LexValue], cell: usize) -> Result<Option<PathSegment>> {
    let deltas: Vec<Vec<Rat>> = x
        .iter()
        .zip(y)
        .map(|(a, b)| b.lex_sub(a).map(|d| d.coords().expect("finite").to_vec()))
        .collect::<Result<_>>()?;
    let pivot = match deltas.iter().find(|d| d.iter().any(|c| !c.is_zero())) {
        None => return Ok(None),
        Some(p) => p.clone(),
    };
    let lead = pivot
        .iter()
        .find(|c| !c.is_zero())
        .expect("pivot is nonzero")
        .clone();
    let mut speeds = Vec::with_capacity(deltas.len());
    for d in &deltas {
        // d = lambda * pivot componentwise, or the displacements are not
        // parallel and no single segment realises the motion.
        let lead_idx = pivot.iter().position(|c| !c.is_zero()).expect("nonzero");
        let lambda = &d[lead_idx] / &lead;
        let parallel = d
            .iter()
            .zip(&pivot)
            .all(|(di, pi)| *di == pi * &lambda);
        if !parallel {
            return Ok(None);
        }
        speeds.push(lambda);
    }
    // Orient the bound positively: bound = |pivot|, speeds flip with it.
    let pivot_value = LexValue::Finite(pivot);
    let (bound, sign) = match pivot_value.lex_cmp(&LexValue::zero(x[0].rank().expect("finite")))? {
        Ordering::Less => (
            pivot_value.integer_scale(&BigInt::from(-1))?,
            -Rat::one(),
        ),
        _ => (pivot_value, Rat::one()),
    };
    let direction: Vec<Rat> = speeds.into_iter().map(|s| s * &sign).collect();
    Ok(Some(PathSegment::new(x.to_vec(), direction, bound, cell)?))
}

/// Emits segments from `x` to `y` inside `cell`, both endpoints already
/// known to lie in it. Straight when the displacements are parallel;
/// otherwise the head coordinates travel to their midpoint, the tails
/// connect recursively at one rank lower inside the head-tight slice, and
/// the heads finish the journey. At most `2k - 1` segments.
fn connect_in_cell(
    polytope: &LexPolyhedron,
    cell_index: usize,
    x: &[LexValue],
    y: &[LexValue],
    out: &mut Vec<PathSegment>,
) -> Result<()> {
    if x == y {
        return Ok(());
    }
    if let Some(seg) = straight_segment(x, y, cell_index)? {
        out.push(seg);
        return Ok(());
    }
    let rank = polytope.rank();
    debug_assert!(rank >= 2, "rank-1 displacements are always parallel");

    let x1 = heads(x);
    let y1 = heads(y);
    let x2 = tails(x);
    let y2 = tails(y);
    let m1: Vec<Rat> = x1
        .iter()
        .zip(&y1)
        .map(|(a, b)| (a + b) / Rat::from(BigInt::from(2)))
        .collect();

    // Constraints whose head part is tight at the midpoint stay tight on
    // the whole head segment from x1 to y1; the others stay strictly slack
    // away from their tight endpoint, so only the tight ones restrict the
    // tails. Equalities are always head-tight (both endpoints satisfy
    // them exactly).
    let mut tail_constraints: Vec<LexHalfspace> = Vec::new();
    for hs in polytope.constraints() {
        let bound_coords = match hs.bound().coords() {
            Some(c) => c,
            None => return Err(Error::InfiniteBound),
        };
        let head_value: Rat = hs
            .slope()
            .iter()
            .zip(&m1)
            .map(|(u, h)| Rat::from(u.clone()) * h)
            .sum();
        if head_value == bound_coords[0] {
            tail_constraints.push(LexHalfspace::new(
                hs.slope().to_vec(),
                hs.relation(),
                LexValue::Finite(bound_coords[1..].to_vec()),
            ));
        }
    }
    let slice = LexPolyhedron::new(rank - 1, polytope.dim(), tail_constraints)?;

    let mid_in = join(&m1, &x2);
    let mid_out = join(&m1, &y2);
    if x != mid_in.as_slice() {
        // Heads travel x1 -> m1 at fixed tails; a unit head interval.
        let mut bound_coords = vec![Rat::zero(); rank];
        bound_coords[0] = Rat::one();
        let direction: Vec<Rat> = m1.iter().zip(&x1).map(|(m, a)| m - a).collect();
        out.push(PathSegment::new(
            x.to_vec(),
            direction,
            LexValue::Finite(bound_coords),
            cell_index,
        )?);
    }

    let mut inner: Vec<PathSegment> = Vec::new();
    connect_in_cell(&slice, cell_index, &x2, &y2, &mut inner)?;
    for seg in inner {
        let lifted_start = join(&m1, seg.start());
        let mut bound_coords = vec![Rat::zero(); rank];
        bound_coords[1..].clone_from_slice(seg.bound().coords().expect("finite bound"));
        out.push(PathSegment::new(
            lifted_start,
            seg.direction().to_vec(),
            LexValue::Finite(bound_coords),
            cell_index,
        )?);
    }

    if mid_out.as_slice() != y {
        let mut bound_coords = vec![Rat::zero(); rank];
        bound_coords[0] = Rat::one();
        let direction: Vec<Rat> = y1.iter().zip(&m1).map(|(b, m)| b - m).collect();
        out.push(PathSegment::new(
            mid_out,
            direction,
            LexValue::Finite(bound_coords),
            cell_index,
        )?);
    }
    Ok(())
}

/// Connects two points of the complex by a verified piecewise-linear path:
/// BFS over cell adjacency (lowest index first) from the first cell
/// containing `w1` to any cell containing `w2`, routing through the
/// deterministic feasibility witness of each consecutive intersection.
pub fn connect(complex: &LexComplex, w1: &[LexValue], w2: &[LexValue]) -> Result<PLPath> {
    let start_cell = complex.find_cell(w1)?.ok_or(Error::PointNotInComplex)?;
    let targets: Vec<usize> = {
        let mut t = Vec::new();
        for (i, cell) in complex.maximal_cells().iter().enumerate() {
            if cell.contains(w2)? {
                t.push(i);
            }
        }
        t
    };
    if targets.is_empty() {
        return Err(Error::PointNotInComplex);
    }

    let adjacency = build_adjacency(complex)?;
    let mut parent: Vec<Option<usize>> = vec![None; adjacency.node_count()];
    let mut seen = vec![false; adjacency.node_count()];
    let mut queue = VecDeque::from([start_cell]);
    seen[start_cell] = true;
    let mut reached: Option<usize> = None;
    if targets.contains(&start_cell) {
        reached = Some(start_cell);
    }
    while reached.is_none() {
        let Some(cell) = queue.pop_front() else {
            return Err(Error::Disconnected);
        };
        for &nb in adjacency.neighbors(cell) {
            if seen[nb] {
                continue;
            }
            seen[nb] = true;
            parent[nb] = Some(cell);
            if targets.contains(&nb) {
                reached = Some(nb);
                break;
            }
            queue.push_back(nb);
        }
    }

    let mut route = vec![reached.expect("loop exits only when reached")];
    while let Some(p) = parent[*route.last().expect("nonempty")] {
        route.push(p);
    }
    route.reverse();

    // Waypoints: w1, one witness per consecutive cell intersection, w2.
    let cells = complex.maximal_cells();
    let mut waypoints: Vec<Vec<LexValue>> = vec![w1.to_vec()];
    for pair in route.windows(2) {
        let meet = cells[pair[0]].intersect(&cells[pair[1]])?;
        let witness = meet.witness().expect("adjacent cells share a point");
        waypoints.push(witness);
    }
    waypoints.push(w2.to_vec());

    let mut segments = Vec::new();
    for (leg, cell_index) in route.iter().enumerate() {
        connect_in_cell(
            &cells[*cell_index],
            *cell_index,
            &waypoints[leg],
            &waypoints[leg + 1],
            &mut segments,
        )?;
    }
    Ok(PLPath::new(
        complex.rank(),
        complex.dim(),
        w1.to_vec(),
        w2.to_vec(),
        segments,
    ))
}

/// Why a path certificate fails verification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PathDefect {
    /// The declared start does not match the first segment (or the end,
    /// for an empty path).
    StartMismatch,
    /// The declared end does not match the last segment's arrival.
    EndMismatch,
    /// Segment `index` does not begin where segment `index - 1` arrived.
    JunctionJump { index: usize },
    /// A segment references a cell the complex does not have.
    BadCellIndex { segment: usize },
    /// A segment's parameter bound is negative or infinite.
    BadBound { segment: usize },
    /// A segment endpoint violates a constraint of its declared cell.
    ConstraintViolated {
        segment: usize,
        constraint: String,
        at_far_end: bool,
    },
    /// Points or directions are malformed (wrong rank or dimension).
    Malformed { segment: usize },
}

impl std::fmt::Display for PathDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PathDefect::StartMismatch => write!(f, "declared start does not match the path"),
            PathDefect::EndMismatch => write!(f, "declared end does not match the path"),
            PathDefect::JunctionJump { index } => {
                write!(f, "segment {index} does not start where the previous one ended")
            }
            PathDefect::BadCellIndex { segment } => {
                write!(f, "segment {segment} references a cell outside the complex")
            }
            PathDefect::BadBound { segment } => {
                write!(f, "segment {segment} has a negative or infinite parameter bound")
            }
            PathDefect::ConstraintViolated { segment, constraint, at_far_end } => {
                let end = if *at_far_end { "far" } else { "near" };
                write!(
                    f,
                    "segment {segment} leaves its cell: constraint `{constraint}` fails at the {end} endpoint"
                )
            }
            PathDefect::Malformed { segment } => {
                write!(f, "segment {segment} is malformed")
            }
        }
    }
}

/// Full verification with the first defect found, or `Ok` for a valid
/// certificate. Constraint checks are endpoint-only, which suffices: each
/// constraint value is affine and lex-monotone in the segment parameter
/// (the slope pairs to a single rational per segment), so the value range
/// over `[0, bound]` is exactly the interval between the endpoint values.
pub fn verify_path_report(
    path: &PLPath,
    complex: &LexComplex,
) -> std::result::Result<(), PathDefect> {
    let cells = complex.maximal_cells();
    if path.segments.is_empty() {
        if path.start != path.end {
            return Err(PathDefect::StartMismatch);
        }
        return Ok(());
    }
    let mut current = path.start.clone();
    for (i, seg) in path.segments.iter().enumerate() {
        if seg.start() != current.as_slice() {
            return Err(if i == 0 {
                PathDefect::StartMismatch
            } else {
                PathDefect::JunctionJump { index: i }
            });
        }
        if seg.cell >= cells.len() {
            return Err(PathDefect::BadCellIndex { segment: i });
        }
        let nonnegative = seg
            .bound
            .lex_cmp(&LexValue::zero(path.rank))
            .map(|o| o != Ordering::Less)
            .unwrap_or(false);
        if !nonnegative || seg.bound.is_infinity() {
            return Err(PathDefect::BadBound { segment: i });
        }
        let far = match seg.endpoint() {
            Ok(p) => p,
            Err(_) => return Err(PathDefect::Malformed { segment: i }),
        };
        let cell = &cells[seg.cell];
        for (point, at_far_end) in [(&current, false), (&far, true)] {
            for hs in cell.constraints() {
                match hs.holds_at(point, path.rank) {
                    Ok(true) => {}
                    Ok(false) => {
                        return Err(PathDefect::ConstraintViolated {
                            segment: i,
                            constraint: hs.to_string(),
                            at_far_end,
                        })
                    }
                    Err(_) => return Err(PathDefect::Malformed { segment: i }),
                }
            }
        }
        current = far;
    }
    if current != path.end {
        return Err(PathDefect::EndMismatch);
    }
    Ok(())
}

/// Does the certificate check out against the complex?
pub fn verify_path(path: &PLPath, complex: &LexComplex) -> bool {
    verify_path_report(path, complex).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropicalize::{trop_hypersurface, ValuatedPolynomial};

    fn tropical_line_complex() -> LexComplex {
        let p = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[1, 0], &[0, 0]), (&[0, 1], &[0, 0]), (&[0, 0], &[0, 0])],
        )
        .unwrap();
        trop_hypersurface(&p).unwrap()
    }

    fn pt(coords: &[&[i64]]) -> Vec<LexValue> {
        coords.iter().map(|c| LexValue::from_ints(c)).collect()
    }

    #[test]
    fn line_cells_are_pairwise_adjacent() {
        let adjacency = build_adjacency(&tropical_line_complex()).unwrap();
        assert_eq!(adjacency.node_count(), 3);
        assert_eq!(adjacency.edge_count(), 3);
        assert!(adjacency.is_connected());
    }

    #[test]
    fn single_cell_has_no_edges() {
        use crate::polyhedra::{LexHalfspace, Relation};
        let cell = LexPolyhedron::new(
            1,
            1,
            [LexHalfspace::from_ints(&[1], Relation::Ge, LexValue::zero(1))],
        )
        .unwrap();
        let complex = LexComplex::new(1, 1, vec![cell]).unwrap();
        let adjacency = build_adjacency(&complex).unwrap();
        assert_eq!(adjacency.node_count(), 1);
        assert_eq!(adjacency.edge_count(), 0);
        assert!(adjacency.is_connected());
    }

    #[test]
    fn parallel_flats_are_disconnected() {
        use crate::polyhedra::{LexHalfspace, Relation};
        let flat = |level: i64| {
            LexPolyhedron::new(
                1,
                2,
                [LexHalfspace::from_ints(&[1, 0], Relation::Eq, LexValue::from_ints(&[level]))],
            )
            .unwrap()
        };
        let complex = LexComplex::new(1, 2, vec![flat(0), flat(1)]).unwrap();
        let adjacency = build_adjacency(&complex).unwrap();
        assert_eq!(adjacency.node_count(), 2);
        assert_eq!(adjacency.edge_count(), 0);
        assert!(!adjacency.is_connected());
        let path = connect(&complex, &pt(&[&[0], &[5]]), &pt(&[&[1], &[5]]));
        assert_eq!(path.unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn connect_crosses_the_origin_in_two_segments() {
        let complex = tropical_line_complex();
        let w1 = pt(&[&[0, 0], &[3, 2]]);
        let w2 = pt(&[&[-1, 0], &[-1, 0]]);
        let path = connect(&complex, &w1, &w2).unwrap();
        assert_eq!(path.segments().len(), 2);
        assert!(verify_path(&path, &complex));
        assert_eq!(path.start(), w1.as_slice());
        assert_eq!(path.end(), w2.as_slice());
        // The route passes through the origin, where all cells meet.
        let junction = path.segments()[0].endpoint().unwrap();
        assert_eq!(junction, pt(&[&[0, 0], &[0, 0]]));
        // Each segment sits in a declared cell of the complex.
        let cells = complex.maximal_cells();
        for seg in path.segments() {
            assert!(cells[seg.cell()].contains(seg.start()).unwrap());
            assert!(cells[seg.cell()].contains(&seg.endpoint().unwrap()).unwrap());
        }
    }

    #[test]
    fn trivial_path_has_no_segments() {
        let complex = tropical_line_complex();
        let w = pt(&[&[0, 0], &[0, 0]]);
        let path = connect(&complex, &w, &w).unwrap();
        assert!(path.segments().is_empty());
        assert!(path.interval().is_empty());
        assert!(verify_path(&path, &complex));
    }

    #[test]
    fn outside_points_are_rejected() {
        let complex = tropical_line_complex();
        let outside = pt(&[&[1, 0], &[2, 0]]);
        let inside = pt(&[&[0, 0], &[0, 0]]);
        assert_eq!(
            connect(&complex, &outside, &inside).unwrap_err(),
            Error::PointNotInComplex
        );
        assert_eq!(
            connect(&complex, &inside, &outside).unwrap_err(),
            Error::PointNotInComplex
        );
    }

    #[test]
    fn nonparallel_displacements_take_the_midpoint_detour() {
        use crate::polyhedra::LexPolyhedron;
        // The full plane (no constraints) at rank 2, dim 2: moving (0,0)
        // in one variable and (0,1) in the other cannot be one segment.
        let full = LexPolyhedron::full(2, 2).unwrap();
        let complex = LexComplex::new(2, 2, vec![full]).unwrap();
        let x = pt(&[&[0, 0], &[0, 0]]);
        let y = pt(&[&[1, 0], &[0, 1]]);
        let path = connect(&complex, &x, &y).unwrap();
        assert_eq!(path.segments().len(), 3);
        assert!(verify_path(&path, &complex));
    }

    #[test]
    fn verifier_catches_junction_jumps() {
        let complex = tropical_line_complex();
        let w1 = pt(&[&[0, 0], &[3, 2]]);
        let w2 = pt(&[&[-1, 0], &[-1, 0]]);
        let good = connect(&complex, &w1, &w2).unwrap();
        let mut segments = good.segments().to_vec();
        let shifted: Vec<LexValue> = segments[1]
            .start()
            .iter()
            .map(|w| w.lex_add(&LexValue::from_ints(&[0, 1])).unwrap())
            .collect();
        segments[1] = PathSegment::new(
            shifted,
            segments[1].direction().to_vec(),
            segments[1].bound().clone(),
            segments[1].cell(),
        )
        .unwrap();
        let bad = PLPath::new(2, 2, w1, w2, segments);
        assert_eq!(
            verify_path_report(&bad, &complex),
            Err(PathDefect::JunctionJump { index: 1 })
        );
    }

    #[test]
    fn verifier_names_the_escaped_constraint() {
        let complex = tropical_line_complex();
        // A straight segment that starts on the vertical cell but shoots
        // past the origin out of it.
        let start = pt(&[&[0, 0], &[3, 0]]);
        let bad_segment = PathSegment::new(
            start.clone(),
            vec![Rat::zero(), -Rat::one()],
            LexValue::from_ints(&[4, 0]),
            2,
        )
        .unwrap();
        let end = bad_segment.endpoint().unwrap();
        let bad = PLPath::new(2, 2, start, end, vec![bad_segment]);
        match verify_path_report(&bad, &complex) {
            Err(PathDefect::ConstraintViolated { segment: 0, constraint, at_far_end: true }) => {
                assert_eq!(constraint, "0,1 >= (0,0)");
            }
            other => panic!("expected a constraint violation, got {other:?}"),
        }
    }

    #[test]
    fn straight_segments_cover_antiparallel_moves() {
        // Two variables moving along opposite multiples of one vector
        // still fit in a single segment.
        let full = LexPolyhedron::full(2, 2).unwrap();
        let complex = LexComplex::new(2, 2, vec![full]).unwrap();
        let x = pt(&[&[0, 0], &[0, 0]]);
        let y = pt(&[&[2, -1], &[-4, 2]]);
        let path = connect(&complex, &x, &y).unwrap();
        assert_eq!(path.segments().len(), 1);
        assert!(verify_path(&path, &complex));
    }
}
