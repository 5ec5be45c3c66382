//! Polyhedra cut out by lexicographic halfspaces in `(R^k)^d`, their
//! Euclidean flattenings in `R^{k*d}`, and complexes of such polyhedra.
//!
//! A halfspace is `<w,u> rel delta` with integer slope `u`, a lex relation
//! in `{>=, >, =}`, and a rank-`k` bound. The complement of a lex halfspace
//! is again one or two halfspaces (the order is total), which keeps subset
//! and face computations exactly decidable through the shared
//! Fourier-Motzkin engine; flattening a halfspace instead expands it into a
//! disjunction of Euclidean pieces, one per position where the
//! lexicographic comparison can be decided.
//!
//! Flattened coordinates are variable-major: the flattened index `i*k + t`
//! holds coordinate `t` of variable `i`.
//!
//! Text forms: a halfspace prints as `u1,...,ud REL (delta)` (slopes
//! gcd-reduced, equalities with positive leading slope); a flattened
//! constraint prints as `a1,...,akd REL b` with primitive integer data.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

use crate::elim::{self, feasible, LexVec, LinCon, Rel};
use crate::error::{Error, Result};
use crate::lexgroup::{pairing, parse_rat, LexValue, Rat};

/// Relation of a constraint: `>=`, `>`, or `=` (lexicographic on the lex
/// side, ordinary on the flattened side).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Relation {
    Eq,
    Ge,
    Gt,
}

impl Relation {
    fn rel(self) -> Rel {
        match self {
            Relation::Eq => Rel::Eq,
            Relation::Ge => Rel::Ge,
            Relation::Gt => Rel::Gt,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

/// One lexicographic constraint `<w,u> rel bound` on points of `(R^k)^d`.
///
/// Invariants after construction: the slope has length `d` and is not all
/// zero (trivial constraints are resolved away), and an `Infinity` bound
/// occurs only with the `=` relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LexHalfspace {
    slope: Vec<BigInt>,
    rel: Relation,
    bound: LexValue,
}

impl LexHalfspace {
    pub fn new(slope: Vec<BigInt>, rel: Relation, bound: LexValue) -> Self {
        LexHalfspace { slope, rel, bound }
    }

    pub fn from_ints(slope: &[i64], rel: Relation, bound: LexValue) -> Self {
        LexHalfspace::new(slope.iter().map(|&s| BigInt::from(s)).collect(), rel, bound)
    }

    pub fn slope(&self) -> &[BigInt] {
        &self.slope
    }

    pub fn relation(&self) -> Relation {
        self.rel
    }

    pub fn bound(&self) -> &LexValue {
        &self.bound
    }

    /// The boundary `<w,u> = bound` of this halfspace.
    pub fn boundary(&self) -> LexHalfspace {
        LexHalfspace { slope: self.slope.clone(), rel: Relation::Eq, bound: self.bound.clone() }
    }

    /// Does a finite point satisfy the constraint?
    pub fn holds_at(&self, point: &[LexValue], rank: usize) -> Result<bool> {
        let value = pairing(&self.slope, point, rank)?;
        if self.bound.is_infinity() {
            // A finite pairing never reaches the maximum.
            return Ok(false);
        }
        let ord = value.lex_cmp(&self.bound)?;
        Ok(match self.rel {
            Relation::Eq => ord == Ordering::Equal,
            Relation::Ge => ord != Ordering::Less,
            Relation::Gt => ord == Ordering::Greater,
        })
    }

    /// The complement as a union of halfspaces (one for inequalities, two
    /// for equalities). Only called with finite bounds.
    fn negations(&self) -> Vec<LexHalfspace> {
        let neg_slope: Vec<BigInt> = self.slope.iter().map(|s| -s).collect();
        let neg_bound = self
            .bound
            .integer_scale(&BigInt::from(-1))
            .expect("negation requires a finite bound");
        match self.rel {
            // not(>= b): < b, spelled -<w,u> > -b.
            Relation::Ge => vec![LexHalfspace::new(neg_slope, Relation::Gt, neg_bound)],
            // not(> b): <= b.
            Relation::Gt => vec![LexHalfspace::new(neg_slope, Relation::Ge, neg_bound)],
            Relation::Eq => vec![
                LexHalfspace::new(self.slope.clone(), Relation::Gt, self.bound.clone()),
                LexHalfspace::new(neg_slope, Relation::Gt, neg_bound),
            ],
        }
    }

    fn canonical_cmp(&self, other: &LexHalfspace) -> Ordering {
        self.slope
            .cmp(&other.slope)
            .then(self.rel.cmp(&other.rel))
            .then_with(|| {
                self.bound
                    .lex_cmp(&other.bound)
                    .expect("bounds in one system share the rank")
            })
    }
}

impl fmt::Display for LexHalfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, u) in self.slope.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, " {} {}", self.rel.symbol(), self.bound)
    }
}

/// Parses `u1,...,ud REL bound`, e.g. `1,-1 = (0,0)` or `0,1 >= (0,2)`.
pub fn parse_halfspace(input: &str, rank: usize, dim: usize) -> Result<LexHalfspace> {
    let (rel, rel_pos, rel_len) = find_relation(input)?;
    let slope = parse_slope(&input[..rel_pos], dim, 0)?;
    let bound_text = &input[rel_pos + rel_len..];
    let bound_offset = rel_pos + rel_len;
    let bound = crate::lexgroup::parse_lex_value(bound_text, None)
        .map_err(|e| shift_parse_offset(e, bound_offset))?;
    if let Some(r) = bound.rank() {
        if r != rank {
            return Err(Error::RankMismatch { left: rank, right: r });
        }
    }
    Ok(LexHalfspace::new(slope, rel, bound))
}

fn find_relation(input: &str) -> Result<(Relation, usize, usize)> {
    if let Some(p) = input.find(">=") {
        Ok((Relation::Ge, p, 2))
    } else if let Some(p) = input.find('>') {
        Ok((Relation::Gt, p, 1))
    } else if let Some(p) = input.find('=') {
        Ok((Relation::Eq, p, 1))
    } else {
        Err(Error::parse(input.len(), "expected a relation `>=`, `>`, or `=`"))
    }
}

fn parse_slope(text: &str, dim: usize, base: usize) -> Result<Vec<BigInt>> {
    let mut slope = Vec::new();
    let mut offset = base;
    for piece in text.split(',') {
        let token = piece.trim();
        let value: BigInt = token
            .parse()
            .map_err(|_| Error::parse(offset, format!("invalid integer `{token}`")))?;
        slope.push(value);
        offset += piece.len() + 1;
    }
    if slope.len() != dim {
        return Err(Error::DimensionMismatch { left: dim, right: slope.len() });
    }
    Ok(slope)
}

fn shift_parse_offset(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse { offset: offset + by, message },
        other => other,
    }
}

/// A finite intersection of lexicographic halfspaces in `(R^k)^d`.
///
/// Construction normalises each constraint (gcd-reduced slope, positive
/// leading slope for equalities, trivial slopes resolved), removes
/// duplicates, and sorts, so equal constraint systems compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LexPolyhedron {
    rank: usize,
    dim: usize,
    constraints: Vec<LexHalfspace>,
}

impl LexPolyhedron {
    pub fn new(
        rank: usize,
        dim: usize,
        constraints: impl IntoIterator<Item = LexHalfspace>,
    ) -> Result<Self> {
        if rank == 0 || dim == 0 {
            return Err(Error::invalid("polyhedra require rank >= 1 and dim >= 1"));
        }
        let mut normal: Vec<LexHalfspace> = Vec::new();
        for hs in constraints {
            if hs.slope.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: hs.slope.len() });
            }
            match hs.bound.rank() {
                None => {
                    if hs.rel != Relation::Eq {
                        return Err(Error::invalid(
                            "an infinite bound is only meaningful for an equality",
                        ));
                    }
                }
                Some(r) => {
                    if r != rank {
                        return Err(Error::RankMismatch { left: rank, right: r });
                    }
                }
            }
            if hs.slope.iter().all(Zero::is_zero) {
                // <w,0> is the group zero; the constraint is decided now.
                let holds = match &hs.bound {
                    LexValue::Infinity => false,
                    finite => {
                        let ord = LexValue::zero(rank)
                            .lex_cmp(finite)
                            .expect("rank validated above");
                        match hs.rel {
                            Relation::Eq => ord == Ordering::Equal,
                            Relation::Ge => ord != Ordering::Less,
                            Relation::Gt => ord == Ordering::Greater,
                        }
                    }
                };
                if holds {
                    continue;
                }
                // Canonical unsatisfiable marker: 0 > 0.
                normal.clear();
                normal.push(LexHalfspace::new(
                    vec![BigInt::zero(); dim],
                    Relation::Gt,
                    LexValue::zero(rank),
                ));
                let mut p = LexPolyhedron { rank, dim, constraints: normal };
                p.constraints.dedup();
                return Ok(p);
            }
            let mut slope = hs.slope;
            let mut bound = hs.bound;
            let g = slope
                .iter()
                .fold(BigInt::zero(), |acc, s| acc.gcd(s));
            if !g.is_one() {
                slope.iter_mut().for_each(|s| *s /= &g);
                if bound.is_finite() {
                    bound = bound
                        .rational_scale(&Rat::new(BigInt::one(), g))
                        .expect("finite bound scales");
                }
            }
            if hs.rel == Relation::Eq && bound.is_finite() {
                let leading = slope.iter().find(|s| !s.is_zero()).expect("nonzero slope");
                if leading.is_negative() {
                    slope.iter_mut().for_each(|s| *s = -s.clone());
                    bound = bound.integer_scale(&BigInt::from(-1)).expect("finite");
                }
            }
            normal.push(LexHalfspace::new(slope, hs.rel, bound));
        }
        normal.sort_by(LexHalfspace::canonical_cmp);
        normal.dedup();
        Ok(LexPolyhedron { rank, dim, constraints: normal })
    }

    /// The whole space `(R^k)^d` (no constraints).
    pub fn full(rank: usize, dim: usize) -> Result<Self> {
        LexPolyhedron::new(rank, dim, [])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[LexHalfspace] {
        &self.constraints
    }

    pub fn constraint_strings(&self) -> Vec<String> {
        self.constraints.iter().map(|c| c.to_string()).collect()
    }

    fn check_compatible(&self, other: &LexPolyhedron) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    /// Membership of a finite point, decided constraintwise.
    pub fn contains(&self, point: &[LexValue]) -> Result<bool> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: point.len() });
        }
        for w in point {
            match w.rank() {
                None => return Err(Error::UnexpectedInfinity),
                Some(r) if r != self.rank => {
                    return Err(Error::RankMismatch { left: self.rank, right: r })
                }
                _ => {}
            }
        }
        for hs in &self.constraints {
            if !hs.holds_at(point, self.rank)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn intersect(&self, other: &LexPolyhedron) -> Result<LexPolyhedron> {
        self.check_compatible(other)?;
        LexPolyhedron::new(
            self.rank,
            self.dim,
            self.constraints.iter().chain(&other.constraints).cloned(),
        )
    }

    fn to_system(&self, extra: &[LexHalfspace]) -> Option<Vec<LinCon<LexVec>>> {
        let mut cons = Vec::with_capacity(self.constraints.len() + extra.len());
        for hs in self.constraints.iter().chain(extra) {
            if hs.bound.is_infinity() {
                // No finite point satisfies `= Infinity`.
                return None;
            }
            let coeffs: Vec<Rat> = hs.slope.iter().map(|s| Rat::from(s.clone())).collect();
            let neg_bound = hs
                .bound
                .integer_scale(&BigInt::from(-1))
                .expect("finite bound");
            let constant = LexVec(neg_bound.coords().expect("finite").to_vec());
            cons.push(LinCon::new(coeffs, constant, hs.rel.rel()));
        }
        Some(cons)
    }

    fn feasible_with(&self, extra: &[LexHalfspace]) -> Option<Vec<LexValue>> {
        let cons = self.to_system(extra)?;
        let zero = LexVec(vec![Rat::zero(); self.rank]);
        feasible(&cons, self.dim, &zero)
            .map(|w| w.into_iter().map(|v| LexValue::Finite(v.0)).collect())
    }

    /// Exact emptiness, by lex-valued variable elimination.
    pub fn is_empty(&self) -> bool {
        self.feasible_with(&[]).is_none()
    }

    /// A deterministic rational point of the polyhedron, when nonempty.
    /// Coordinates are assigned greedily in variable order, taking the least
    /// admissible value at each step.
    pub fn witness(&self) -> Option<Vec<LexValue>> {
        self.feasible_with(&[])
    }

    /// Exact containment `self <= other` as point sets.
    pub fn subset_of(&self, other: &LexPolyhedron) -> Result<bool> {
        self.check_compatible(other)?;
        if self.is_empty() {
            return Ok(true);
        }
        for hs in &other.constraints {
            if hs.bound.is_infinity() {
                // `other` has no finite points but `self` does.
                return Ok(false);
            }
            for neg in hs.negations() {
                if self.feasible_with(std::slice::from_ref(&neg)).is_some() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn set_eq(&self, other: &LexPolyhedron) -> Result<bool> {
        Ok(self.subset_of(other)? && other.subset_of(self)?)
    }

    /// Is `self` a face of `other`, i.e. the intersection of `other` with
    /// boundaries of some of its halfspaces? Decided via the minimal face:
    /// tighten every constraint of `other` that is tight on `self` and
    /// compare point sets.
    pub fn is_face_of(&self, other: &LexPolyhedron) -> Result<bool> {
        if self.is_empty() {
            return Ok(true);
        }
        if !self.subset_of(other)? {
            return Ok(false);
        }
        let mut tightened = Vec::with_capacity(other.constraints.len());
        for hs in &other.constraints {
            let tight = hs.boundary().negations().iter().all(|neg| {
                // Tight iff the value never leaves the boundary on `self`.
                self.feasible_with(std::slice::from_ref(neg)).is_none()
            });
            if tight {
                tightened.push(hs.boundary());
            } else {
                tightened.push(hs.clone());
            }
        }
        let hull = LexPolyhedron::new(other.rank, other.dim, tightened)?;
        self.set_eq(&hull)
    }

    /// All faces: intersections with boundaries of any subset of the
    /// halfspaces. Empty faces are dropped, duplicates collapse, and the
    /// result is sorted; the polyhedron itself appears (empty subset).
    pub fn faces(&self) -> Result<Vec<LexPolyhedron>> {
        let n = self.constraints.len();
        let mut out: Vec<LexPolyhedron> = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let modified = self.constraints.iter().enumerate().map(|(i, hs)| {
                if mask & (1 << i) != 0 {
                    hs.boundary()
                } else {
                    hs.clone()
                }
            });
            let face = LexPolyhedron::new(self.rank, self.dim, modified)?;
            if !face.is_empty() && !out.contains(&face) {
                out.push(face);
            }
        }
        out.sort_by(cmp_polyhedra);
        Ok(out)
    }

    /// Expands the lexicographic constraints into the disjunction of
    /// Euclidean pieces in `R^{k*d}` they decide to, pruning infeasible
    /// branches exactly. Errors on any `Infinity` bound: extended strata
    /// must be resolved before flattening.
    pub fn flatten(&self) -> Result<Vec<EuclideanPiece>> {
        let k = self.rank;
        let kd = k * self.dim;
        let mut branch_lists: Vec<Vec<Vec<(Vec<Rat>, Relation, Rat)>>> = Vec::new();
        for hs in &self.constraints {
            let delta = match &hs.bound {
                LexValue::Infinity => return Err(Error::InfiniteBound),
                LexValue::Finite(c) => c,
            };
            // Euclidean form of coordinate t of the pairing.
            let form = |t: usize| -> Vec<Rat> {
                let mut coeffs = vec![Rat::zero(); kd];
                for (i, u) in hs.slope.iter().enumerate() {
                    coeffs[i * k + t] = Rat::from(u.clone());
                }
                coeffs
            };
            let mut branches: Vec<Vec<(Vec<Rat>, Relation, Rat)>> = Vec::new();
            if hs.rel != Relation::Eq {
                for j in 0..k {
                    let mut branch: Vec<(Vec<Rat>, Relation, Rat)> = (0..j)
                        .map(|t| (form(t), Relation::Eq, delta[t].clone()))
                        .collect();
                    branch.push((form(j), Relation::Gt, delta[j].clone()));
                    branches.push(branch);
                }
            }
            if hs.rel != Relation::Gt {
                branches.push(
                    (0..k)
                        .map(|t| (form(t), Relation::Eq, delta[t].clone()))
                        .collect(),
                );
            }
            branch_lists.push(branches);
        }

        let mut pieces: Vec<EuclideanPiece> = Vec::new();
        let mut choice = vec![0usize; branch_lists.len()];
        loop {
            let mut raw: Vec<(Vec<Rat>, Relation, Rat)> = Vec::new();
            for (list, &c) in branch_lists.iter().zip(&choice) {
                raw.extend(list[c].iter().cloned());
            }
            if let Some(piece) = EuclideanPiece::from_raw(self.rank, self.dim, raw) {
                if !pieces.contains(&piece) {
                    pieces.push(piece);
                }
            }
            // Odometer over branch choices.
            let mut pos = 0;
            loop {
                if pos == branch_lists.len() {
                    pieces.sort();
                    return Ok(pieces);
                }
                choice[pos] += 1;
                if choice[pos] < branch_lists[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Euclidean closure of the flattening: each nonempty piece has its
    /// strict constraints relaxed (the closure of a nonempty set cut out by
    /// linear constraints), and the union is returned in canonical form.
    pub fn euclidean_closure(&self) -> Result<Vec<EuclideanPiece>> {
        let closed = self.flatten()?.into_iter().map(|p| p.closure()).collect();
        Ok(canonical_union(closed))
    }
}

pub(crate) fn cmp_polyhedra(a: &LexPolyhedron, b: &LexPolyhedron) -> Ordering {
    let mut it_a = a.constraints.iter();
    let mut it_b = b.constraints.iter();
    loop {
        match (it_a.next(), it_b.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => match x.canonical_cmp(y) {
                Ordering::Equal => continue,
                other => return other,
            },
        }
    }
}

/// One linear constraint `coeffs . x REL rhs` over `R^{k*d}` in canonical
/// form: primitive integer data, equalities with positive leading
/// coefficient.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LinearConstraint {
    coeffs: Vec<BigInt>,
    rel: Relation,
    rhs: BigInt,
}

impl LinearConstraint {
    /// Normalises rational data into the canonical integer form.
    pub fn new(coeffs: Vec<Rat>, rel: Relation, rhs: Rat) -> Self {
        let mut all: Vec<Rat> = coeffs;
        all.push(rhs);
        let f = elim::primitive_factor(&all);
        let mut ints: Vec<BigInt> = all
            .iter()
            .map(|c| {
                let scaled = c * &f;
                debug_assert!(scaled.denom().is_one());
                scaled.numer().clone()
            })
            .collect();
        let rhs_int = ints.pop().expect("rhs present");
        let mut con = LinearConstraint { coeffs: ints, rel, rhs: rhs_int };
        if rel == Relation::Eq {
            if let Some(lead) = con.coeffs.iter().find(|c| !c.is_zero()) {
                if lead.is_negative() {
                    con.coeffs.iter_mut().for_each(|c| *c = -c.clone());
                    con.rhs = -con.rhs;
                }
            }
        }
        con
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn relation(&self) -> Relation {
        self.rel
    }

    pub fn rhs(&self) -> &BigInt {
        &self.rhs
    }

    pub fn is_strict(&self) -> bool {
        self.rel == Relation::Gt
    }

    pub fn holds_at(&self, x: &[Rat]) -> bool {
        let mut acc = -Rat::from(self.rhs.clone());
        for (c, v) in self.coeffs.iter().zip(x) {
            if !c.is_zero() {
                acc += Rat::from(c.clone()) * v;
            }
        }
        match self.rel {
            Relation::Eq => acc.is_zero(),
            Relation::Ge => !acc.is_negative(),
            Relation::Gt => acc.is_positive(),
        }
    }

    fn to_lincon(&self) -> LinCon<Rat> {
        LinCon::new(
            self.coeffs.iter().map(|c| Rat::from(c.clone())).collect(),
            -Rat::from(self.rhs.clone()),
            self.rel.rel(),
        )
    }

    /// Complement pieces, mirroring the lex case.
    fn negations(&self) -> Vec<LinearConstraint> {
        let neg: Vec<Rat> = self.coeffs.iter().map(|c| Rat::from(-c.clone())).collect();
        let pos: Vec<Rat> = self.coeffs.iter().map(|c| Rat::from(c.clone())).collect();
        let rhs = Rat::from(self.rhs.clone());
        match self.rel {
            Relation::Ge => vec![LinearConstraint::new(neg, Relation::Gt, -rhs)],
            Relation::Gt => vec![LinearConstraint::new(neg, Relation::Ge, -rhs)],
            Relation::Eq => vec![
                LinearConstraint::new(pos, Relation::Gt, rhs.clone()),
                LinearConstraint::new(neg, Relation::Gt, -rhs),
            ],
        }
    }

    fn relaxed(&self) -> LinearConstraint {
        let rel = if self.rel == Relation::Gt { Relation::Ge } else { self.rel };
        LinearConstraint { coeffs: self.coeffs.clone(), rel, rhs: self.rhs.clone() }
    }
}

impl fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " {} {}", self.rel.symbol(), self.rhs)
    }
}

/// Parses `a1,...,am REL b` with integer or rational entries, normalising
/// to canonical form.
pub fn parse_linear_constraint(input: &str, vars: usize) -> Result<LinearConstraint> {
    let (rel, rel_pos, rel_len) = find_relation(input)?;
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for piece in input[..rel_pos].split(',') {
        coeffs.push(parse_rat(piece, offset)?);
        offset += piece.len() + 1;
    }
    if coeffs.len() != vars {
        return Err(Error::DimensionMismatch { left: vars, right: coeffs.len() });
    }
    let rhs = parse_rat(&input[rel_pos + rel_len..], rel_pos + rel_len)?;
    Ok(LinearConstraint::new(coeffs, rel, rhs))
}

/// A conjunction of linear constraints over the flattened space `R^{k*d}`,
/// tagged with the provenance rank and dimension.
///
/// Construction canonicalises: constraints are normalised, deduplicated,
/// redundant ones removed (when the piece is nonempty), and sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EuclideanPiece {
    rank: usize,
    dim: usize,
    constraints: Vec<LinearConstraint>,
}

impl PartialOrd for EuclideanPiece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EuclideanPiece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.constraints.cmp(&other.constraints)
    }
}

impl EuclideanPiece {
    pub fn new(
        rank: usize,
        dim: usize,
        constraints: impl IntoIterator<Item = LinearConstraint>,
    ) -> Result<Self> {
        let vars = rank * dim;
        let mut list: Vec<LinearConstraint> = Vec::new();
        for c in constraints {
            if c.coeffs.len() != vars {
                return Err(Error::DimensionMismatch { left: vars, right: c.coeffs.len() });
            }
            list.push(c);
        }
        let mut piece = EuclideanPiece { rank, dim, constraints: list };
        piece.canonicalise();
        Ok(piece)
    }

    /// Builds and canonicalises from raw rational data, returning `None`
    /// for an infeasible branch.
    fn from_raw(rank: usize, dim: usize, raw: Vec<(Vec<Rat>, Relation, Rat)>) -> Option<Self> {
        let constraints: Vec<LinearConstraint> = raw
            .into_iter()
            .map(|(coeffs, rel, rhs)| LinearConstraint::new(coeffs, rel, rhs))
            .collect();
        let mut piece = EuclideanPiece { rank, dim, constraints };
        if piece.is_empty() {
            return None;
        }
        piece.canonicalise();
        Some(piece)
    }

    fn canonicalise(&mut self) {
        self.constraints.sort();
        self.constraints.dedup();
        // Drop trivially true constraints (zero coefficient vector).
        self.constraints.retain(|c| {
            !(c.coeffs.iter().all(Zero::is_zero) && c.holds_at(&vec![Rat::zero(); c.coeffs.len()]))
        });
        if self.is_empty() {
            return;
        }
        // Remove redundant constraints: c is implied by the rest iff the
        // rest with any complement branch of c is infeasible.
        let mut idx = 0;
        while idx < self.constraints.len() {
            let candidate = self.constraints[idx].clone();
            let others: Vec<LinCon<Rat>> = self
                .constraints
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != idx)
                .map(|(_, c)| c.to_lincon())
                .collect();
            let redundant = candidate.negations().iter().all(|neg| {
                let mut sys = others.clone();
                sys.push(neg.to_lincon());
                feasible(&sys, self.vars(), &Rat::zero()).is_none()
            });
            if redundant {
                self.constraints.remove(idx);
            } else {
                idx += 1;
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of flattened coordinates (`rank * dim`).
    pub fn vars(&self) -> usize {
        self.rank * self.dim
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn constraint_strings(&self) -> Vec<String> {
        self.constraints.iter().map(|c| c.to_string()).collect()
    }

    fn system(&self, extra: &[LinearConstraint]) -> Vec<LinCon<Rat>> {
        self.constraints
            .iter()
            .chain(extra)
            .map(LinearConstraint::to_lincon)
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        feasible(&self.system(&[]), self.vars(), &Rat::zero()).is_none()
    }

    /// A deterministic rational point, when nonempty.
    pub fn witness(&self) -> Option<Vec<Rat>> {
        feasible(&self.system(&[]), self.vars(), &Rat::zero())
    }

    pub fn witness_with(&self, extra: &[LinearConstraint]) -> Option<Vec<Rat>> {
        feasible(&self.system(extra), self.vars(), &Rat::zero())
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.constraints.iter().all(|c| c.holds_at(x))
    }

    /// Topological closure: strict constraints relaxed. Valid because every
    /// piece produced here is a nonempty set cut out by linear constraints.
    pub fn closure(&self) -> EuclideanPiece {
        let mut piece = EuclideanPiece {
            rank: self.rank,
            dim: self.dim,
            constraints: self.constraints.iter().map(LinearConstraint::relaxed).collect(),
        };
        piece.canonicalise();
        piece
    }

    pub fn subset_of(&self, other: &EuclideanPiece) -> bool {
        if self.is_empty() {
            return true;
        }
        for c in &other.constraints {
            for neg in c.negations() {
                if self.witness_with(std::slice::from_ref(&neg)).is_some() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact shadow of the piece on the coordinates in `keep` (ascending,
    /// in range): the other coordinates are eliminated, and the surviving
    /// constraints (still indexed over all coordinates, with zeros at the
    /// eliminated positions) cut out exactly the projection. `None` when
    /// the piece is empty.
    pub fn project_onto(&self, keep: &[usize]) -> Option<Vec<LinearConstraint>> {
        let drop: Vec<usize> = (0..self.vars()).rev().filter(|v| !keep.contains(v)).collect();
        let shadow = elim::eliminate(&self.system(&[]), self.vars(), &drop)?;
        Some(
            shadow
                .into_iter()
                .map(|c| {
                    let rel = match c.rel {
                        Rel::Eq => Relation::Eq,
                        Rel::Ge => Relation::Ge,
                        Rel::Gt => Relation::Gt,
                    };
                    LinearConstraint::new(c.expr.coeffs, rel, -c.expr.constant)
                })
                .collect(),
        )
    }
}

/// Canonical form of a union of pieces: empties dropped, duplicates and
/// subsumed pieces removed (ties keep the canonically first spelling),
/// result sorted.
pub fn canonical_union(mut pieces: Vec<EuclideanPiece>) -> Vec<EuclideanPiece> {
    pieces.retain(|p| !p.is_empty());
    pieces.sort();
    pieces.dedup();
    let mut removed = vec![false; pieces.len()];
    for i in 0..pieces.len() {
        if removed[i] {
            continue;
        }
        for j in 0..pieces.len() {
            if i == j || removed[j] {
                continue;
            }
            if pieces[i].subset_of(&pieces[j]) {
                // Mutual subsets are distinct spellings of one set; keep j
                // only when it is the earlier spelling.
                if !(pieces[j].subset_of(&pieces[i]) && i < j) {
                    removed[i] = true;
                    break;
                }
            }
        }
    }
    pieces
        .into_iter()
        .zip(removed)
        .filter_map(|(p, r)| (!r).then_some(p))
        .collect()
}

/// A complex of lex polyhedra: stored maximal cells, pairwise intersections
/// required to be faces of both (checked at construction); faces themselves
/// are derived on demand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LexComplex {
    rank: usize,
    dim: usize,
    maximal_cells: Vec<LexPolyhedron>,
}

impl LexComplex {
    pub fn new(rank: usize, dim: usize, cells: Vec<LexPolyhedron>) -> Result<Self> {
        let mut kept: Vec<LexPolyhedron> = Vec::new();
        for cell in cells {
            if cell.rank != rank {
                return Err(Error::RankMismatch { left: rank, right: cell.rank });
            }
            if cell.dim != dim {
                return Err(Error::DimensionMismatch { left: dim, right: cell.dim });
            }
            if cell.is_empty() {
                continue;
            }
            if !kept.contains(&cell) {
                kept.push(cell);
            }
        }
        kept.sort_by(cmp_polyhedra);
        for i in 0..kept.len() {
            for j in (i + 1)..kept.len() {
                let meet = kept[i].intersect(&kept[j])?;
                if meet.is_empty() {
                    continue;
                }
                if !meet.is_face_of(&kept[i])? || !meet.is_face_of(&kept[j])? {
                    return Err(Error::invalid(format!(
                        "cells {i} and {j} intersect in a non-face"
                    )));
                }
            }
        }
        Ok(LexComplex { rank, dim, maximal_cells: kept })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn maximal_cells(&self) -> &[LexPolyhedron] {
        &self.maximal_cells
    }

    /// Index of the first cell containing the point, if any.
    pub fn find_cell(&self, point: &[LexValue]) -> Result<Option<usize>> {
        for (i, cell) in self.maximal_cells.iter().enumerate() {
            if cell.contains(point)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn contains(&self, point: &[LexValue]) -> Result<bool> {
        Ok(self.find_cell(point)?.is_some())
    }

    /// Face closure of all maximal cells, deduplicated and sorted.
    pub fn all_faces(&self) -> Result<Vec<LexPolyhedron>> {
        let mut out: Vec<LexPolyhedron> = Vec::new();
        for cell in &self.maximal_cells {
            for face in cell.faces()? {
                if !out.contains(&face) {
                    out.push(face);
                }
            }
        }
        out.sort_by(cmp_polyhedra);
        Ok(out)
    }
}
