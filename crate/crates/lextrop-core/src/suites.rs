//! Seeded randomized property suites. The CLI `check` command and the
//! acceptance tests both run these, so the check counts and tolerances
//! live here, next to the generators.
//!
//! Every suite is deterministic for a given seed: generation uses a
//! counter-based ChaCha stream and all collections iterate in canonical
//! order. A suite returns how many checks ran and how many failed, with
//! the first failure described for diagnosis; it never panics on a
//! property violation.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hahnseries::HahnSeries;
use crate::lexgroup::{LexValue, Rat};
use crate::paths::{build_adjacency, connect, verify_path_report};
use crate::polyhedra::{
    EuclideanPiece, LexComplex, LexHalfspace, LexPolyhedron, LinearConstraint, Relation,
};
use crate::skeleton::{edge_valuation, faithful_injectivity_check, MetricGraph};
use crate::tropicalize::{trop_hypersurface, trop_membership, ValuatedPolynomial};

/// What one suite did: counts plus the first failure, if any.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome { name, checks: 0, failures: 0, first_failure: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl std::fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {} checks, {} failures", self.name, self.checks, self.failures)?;
        if let Some(first) = &self.first_failure {
            write!(f, " (first: {first})")?;
        }
        Ok(())
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_rat(rng: &mut ChaCha8Rng, span: i64, max_den: i64) -> Rat {
    let num = rng.gen_range(-span..=span);
    let den = rng.gen_range(1..=max_den);
    Rat::new(BigInt::from(num), BigInt::from(den))
}

fn random_lex(rng: &mut ChaCha8Rng, rank: usize, span: i64, max_den: i64) -> LexValue {
    LexValue::Finite((0..rank).map(|_| random_rat(rng, span, max_den)).collect())
}

fn random_point(rng: &mut ChaCha8Rng, rank: usize, dim: usize) -> Vec<LexValue> {
    (0..dim).map(|_| random_lex(rng, rank, 8, 4)).collect()
}

fn random_hahn(rng: &mut ChaCha8Rng, rank: usize) -> HahnSeries {
    let n_terms = rng.gen_range(0..=6);
    let terms: Vec<(LexValue, Rat)> = (0..n_terms)
        .map(|_| {
            let exponent = random_lex(rng, rank, 6, 3);
            let mut coeff = rng.gen_range(-9..=9i64);
            if coeff == 0 {
                coeff = 1;
            }
            (exponent, Rat::from(BigInt::from(coeff)))
        })
        .collect();
    HahnSeries::new(rank, terms).expect("finite exponents at the right rank")
}

fn random_polynomial(
    rng: &mut ChaCha8Rng,
    rank: usize,
    dim: usize,
    min_terms: usize,
    max_terms: usize,
) -> ValuatedPolynomial {
    let target = rng.gen_range(min_terms..=max_terms);
    let mut exponents = std::collections::BTreeSet::new();
    let mut guard = 0;
    while exponents.len() < target && guard < 200 {
        let e: Vec<BigInt> =
            (0..dim).map(|_| BigInt::from(rng.gen_range(-3..=3i64))).collect();
        exponents.insert(e);
        guard += 1;
    }
    let terms: Vec<(Vec<BigInt>, LexValue)> = exponents
        .into_iter()
        .map(|e| (e, random_lex(rng, rank, 5, 2)))
        .collect();
    ValuatedPolynomial::new(rank, dim, terms).expect("nonempty finite term list")
}

fn random_halfspace(rng: &mut ChaCha8Rng, rank: usize, dim: usize) -> LexHalfspace {
    let slope: Vec<BigInt> = (0..dim).map(|_| BigInt::from(rng.gen_range(-2..=2i64))).collect();
    let rel = match rng.gen_range(0..10) {
        0..=5 => Relation::Ge,
        6..=8 => Relation::Gt,
        _ => Relation::Eq,
    };
    let bound = random_lex(rng, rank, 4, 1);
    LexHalfspace::new(slope, rel, bound)
}

/// A deterministic point of a nonempty cell, varied by a random cut.
fn sample_member_point(
    rng: &mut ChaCha8Rng,
    complex: &LexComplex,
) -> Result<Option<Vec<LexValue>>> {
    let cells = complex.maximal_cells();
    if cells.is_empty() {
        return Ok(None);
    }
    let cell = &cells[rng.gen_range(0..cells.len())];
    for _ in 0..4 {
        let mut hs = random_halfspace(rng, complex.rank(), complex.dim());
        if hs.relation() == Relation::Eq {
            hs = LexHalfspace::new(hs.slope().to_vec(), Relation::Ge, hs.bound().clone());
        }
        let cut = cell.intersect(&LexPolyhedron::new(complex.rank(), complex.dim(), [hs])?)?;
        if let Some(w) = cut.witness() {
            return Ok(Some(w));
        }
    }
    Ok(cell.witness())
}

/// Monomial-valuation laws on random Hahn series pairs: the valuation of
/// a product is the sum of valuations, and the valuation of a sum is at
/// least the minimum, exactly the minimum when the two differ.
pub fn hahn_valuation_axioms(seed: u64, pairs: usize) -> Result<SuiteOutcome> {
    let mut rng = rng_for(seed, 1);
    let mut outcome = SuiteOutcome::new("hahn-valuation-axioms");
    for _ in 0..pairs {
        let rank = rng.gen_range(1..=3);
        let f = random_hahn(&mut rng, rank);
        let g = random_hahn(&mut rng, rank);
        let vf = f.nu_mon();
        let vg = g.nu_mon();

        let product = f.hs_mul(&g)?.nu_mon();
        let expected = vf.lex_add(&vg)?;
        outcome.check(product == expected, || {
            format!("nu_mon({f} * {g}) = {product}, expected {expected}")
        });

        let sum = f.hs_add(&g)?.nu_mon();
        let min = match vf.lex_cmp(&vg)? {
            Ordering::Greater => vg.clone(),
            _ => vf.clone(),
        };
        let lower_bounded = sum.lex_cmp(&min)? != Ordering::Less;
        let exact_when_split = vf == vg || sum == min;
        outcome.check(lower_bounded && exact_when_split, || {
            format!("nu_mon({f} + {g}) = {sum} against min {min}")
        });
    }
    Ok(outcome)
}

/// Membership oracle against cell enumeration: a random point is on the
/// tropical hypersurface exactly when some maximal cell contains it.
pub fn oracle_equivalence(seed: u64, polynomials: usize, points_each: usize) -> Result<SuiteOutcome> {
    let mut rng = rng_for(seed, 2);
    let mut outcome = SuiteOutcome::new("oracle-equivalence");
    for _ in 0..polynomials {
        let rank = rng.gen_range(1..=3);
        let dim = rng.gen_range(1..=3);
        let p = random_polynomial(&mut rng, rank, dim, 1, 6);
        let complex = trop_hypersurface(&p)?;
        for _ in 0..points_each {
            // Half the samples come from the cells themselves so the
            // member side of the equivalence is exercised.
            let w = if rng.gen_bool(0.5) {
                match sample_member_point(&mut rng, &complex)? {
                    Some(w) => w,
                    None => random_point(&mut rng, rank, dim),
                }
            } else {
                random_point(&mut rng, rank, dim)
            };
            let direct = trop_membership(&p, &w)?;
            let via_cells = complex.contains(&w)?;
            outcome.check(direct == via_cells, || {
                let coords: Vec<String> = w.iter().map(|c| c.to_string()).collect();
                format!("membership {direct} but cells say {via_cells} at [{}]", coords.join(", "))
            });
        }
    }
    Ok(outcome)
}

fn random_connected_hypersurface(
    rng: &mut ChaCha8Rng,
    max_attempts: usize,
) -> Result<Option<(ValuatedPolynomial, LexComplex)>> {
    for _ in 0..max_attempts {
        let rank = rng.gen_range(1..=3);
        let dim = rng.gen_range(1..=3);
        let p = random_polynomial(rng, rank, dim, 2, 6);
        let complex = trop_hypersurface(&p)?;
        if complex.maximal_cells().is_empty() {
            continue;
        }
        if build_adjacency(&complex)?.is_connected() {
            return Ok(Some((p, complex)));
        }
    }
    Ok(None)
}

/// Paths between random member points of connected hypersurface
/// complexes: `connect` must return a certificate and the verifier must
/// accept it with the endpoints intact.
pub fn path_connectivity(seed: u64, polynomials: usize, pairs_each: usize) -> Result<SuiteOutcome> {
    let mut rng = rng_for(seed, 3);
    let mut outcome = SuiteOutcome::new("path-connectivity");
    for _ in 0..polynomials {
        let Some((_, complex)) = random_connected_hypersurface(&mut rng, 60)? else {
            return Err(Error::invalid("could not generate a connected hypersurface"));
        };
        for _ in 0..pairs_each {
            let w1 = sample_member_point(&mut rng, &complex)?.expect("complex has cells");
            let w2 = sample_member_point(&mut rng, &complex)?.expect("complex has cells");
            match connect(&complex, &w1, &w2) {
                Err(e) => outcome.check(false, || format!("connect failed: {e}")),
                Ok(path) => {
                    let verdict = verify_path_report(&path, &complex);
                    let endpoints_ok = path.start() == w1.as_slice() && path.end() == w2.as_slice();
                    outcome.check(verdict.is_ok() && endpoints_ok, || match verdict {
                        Err(defect) => format!("certificate rejected: {defect}"),
                        Ok(()) => "certificate endpoints drifted".to_string(),
                    });
                }
            }
        }
    }
    Ok(outcome)
}

/// Splits a member point of the rank-`j` truncation into a full rank-`k`
/// member: the terms tying at the truncated minimum keep tying in full
/// rank exactly on the tropical hypersurface of their tail valuations,
/// so any point of that tail hypersurface completes the lift.
pub fn lift_member(
    p: &ValuatedPolynomial,
    j: usize,
    w_low: &[LexValue],
) -> Result<Vec<LexValue>> {
    let k = p.rank();
    if j == 0 || j >= k {
        return Err(Error::ProjectionOutOfRange { j, rank: k });
    }
    // Truncated term weights at w_low; the tying set S is the argmin.
    let mut weights: Vec<(Vec<BigInt>, LexValue, LexValue)> = Vec::new();
    for (exponent, valuation) in p.terms() {
        let truncated = valuation.project(j)?;
        let pairing = crate::lexgroup::pairing(exponent, w_low, j)?;
        weights.push((exponent.clone(), valuation.clone(), truncated.lex_add(&pairing)?));
    }
    let mut min: Option<LexValue> = None;
    for (_, _, w) in &weights {
        min = Some(match min {
            None => w.clone(),
            Some(m) if w.lex_cmp(&m)? == Ordering::Less => w.clone(),
            Some(m) => m,
        });
    }
    let min = min.ok_or(Error::EmptyPolynomial)?;
    let tying: Vec<(Vec<BigInt>, LexValue)> = weights
        .into_iter()
        .filter(|(_, _, w)| *w == min)
        .map(|(e, v, _)| {
            let tail = v.coords().expect("finite valuation")[j..].to_vec();
            (e, LexValue::Finite(tail))
        })
        .collect();
    if tying.len() < 2 {
        return Err(Error::PointNotInComplex);
    }
    let tail_poly = ValuatedPolynomial::new(k - j, p.dim(), tying)?;
    let tail_complex = trop_hypersurface(&tail_poly)?;
    let cells = tail_complex.maximal_cells();
    let tail_point = cells
        .first()
        .and_then(LexPolyhedron::witness)
        .ok_or(Error::PointNotInComplex)?;
    Ok(w_low
        .iter()
        .zip(&tail_point)
        .map(|(low, tail)| {
            let mut coords = low.coords().expect("finite point").to_vec();
            coords.extend_from_slice(tail.coords().expect("finite tail"));
            LexValue::Finite(coords)
        })
        .collect())
}

/// Projection compatibility: rank-`k` member points stay members after
/// truncating both the point and the coefficient valuations; sampled
/// rank-`j` members lift back to rank-`k` members through the tail-tie
/// construction.
pub fn projection_tower(seed: u64, polynomials: usize, lifts: usize) -> Result<SuiteOutcome> {
    let mut rng = rng_for(seed, 4);
    let mut outcome = SuiteOutcome::new("projection-tower");
    let mut corpus = Vec::new();
    for _ in 0..polynomials {
        let rank = rng.gen_range(2..=3);
        let dim = rng.gen_range(1..=3);
        corpus.push(random_polynomial(&mut rng, rank, dim, 2, 6));
    }
    for p in &corpus {
        let complex = trop_hypersurface(p)?;
        let Some(w) = sample_member_point(&mut rng, &complex)? else {
            continue;
        };
        for j in 1..p.rank() {
            let w_low: Vec<LexValue> =
                w.iter().map(|c| c.project(j)).collect::<Result<_>>()?;
            let member = trop_membership(&p.truncated(j)?, &w_low)?;
            outcome.check(member, || {
                format!("projection to rank {j} left the truncated hypersurface")
            });
        }
    }
    let mut produced = 0;
    let mut spins = 0;
    while produced < lifts && spins < lifts * 20 {
        spins += 1;
        let p = &corpus[rng.gen_range(0..corpus.len())];
        let j = rng.gen_range(1..p.rank());
        let low = p.truncated(j)?;
        let low_complex = trop_hypersurface(&low)?;
        let Some(w_low) = sample_member_point(&mut rng, &low_complex)? else {
            continue;
        };
        produced += 1;
        match lift_member(p, j, &w_low) {
            Err(e) => outcome.check(false, || format!("lift construction failed: {e}")),
            Ok(w) => {
                let member = trop_membership(p, &w)?;
                outcome.check(member, || "lifted point missed the hypersurface".to_string());
            }
        }
    }
    if produced < lifts {
        return Err(Error::invalid("could not sample enough rank-j member points"));
    }
    Ok(outcome)
}

fn random_lex_polyhedron(rng: &mut ChaCha8Rng) -> Result<LexPolyhedron> {
    loop {
        let rank = rng.gen_range(1..=2);
        let dim = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=3);
        let constraints: Vec<LexHalfspace> =
            (0..n).map(|_| random_halfspace(rng, rank, dim)).collect();
        let p = LexPolyhedron::new(rank, dim, constraints)?;
        if !p.is_empty() {
            return Ok(p);
        }
    }
}

fn box_around(center: &[Rat], radius: &Rat) -> Vec<LinearConstraint> {
    let vars = center.len();
    let mut out = Vec::with_capacity(2 * vars);
    for (i, c) in center.iter().enumerate() {
        let mut up = vec![Rat::zero(); vars];
        up[i] = Rat::one();
        out.push(LinearConstraint::new(up, Relation::Ge, c - radius));
        let mut down = vec![Rat::zero(); vars];
        down[i] = -Rat::one();
        out.push(LinearConstraint::new(down, Relation::Ge, -(c + radius)));
    }
    out
}

/// Every point of the Euclidean closure is approximated by points of the
/// polyhedron itself: for each sampled closure point and every epsilon
/// down to 2^-10, some flattened piece of the polyhedron meets the box of
/// half-width epsilon/2 around the point (which pins the Euclidean
/// distance below epsilon in at most four variables).
pub fn closure_limit_points(seed: u64, polyhedra: usize, points_each: usize) -> Result<SuiteOutcome> {
    let mut rng = rng_for(seed, 5);
    let mut outcome = SuiteOutcome::new("closure-limit-points");
    for _ in 0..polyhedra {
        let p = random_lex_polyhedron(&mut rng)?;
        let closed = p.euclidean_closure()?;
        let open_pieces = p.flatten()?;
        if closed.is_empty() {
            continue;
        }
        for _ in 0..points_each {
            let piece = &closed[rng.gen_range(0..closed.len())];
            let vars = piece.vars();
            let cut: Vec<Rat> = (0..vars).map(|_| random_rat(&mut rng, 4, 2)).collect();
            let extra = LinearConstraint::new(cut, Relation::Ge, random_rat(&mut rng, 4, 2));
            let w = piece
                .witness_with(std::slice::from_ref(&extra))
                .or_else(|| piece.witness())
                .expect("closure pieces are nonempty");
            let mut radius = Rat::new(BigInt::one(), BigInt::from(2));
            let mut ok = true;
            for _ in 0..=10 {
                // Box half-width eps/2 for eps = 1, 1/2, ..., 2^-10.
                let cage = box_around(&w, &radius);
                ok = open_pieces.iter().any(|q| q.witness_with(&cage).is_some());
                if !ok {
                    break;
                }
                radius /= Rat::from(BigInt::from(2));
            }
            outcome.check(ok, || {
                let coords: Vec<String> = w.iter().map(|c| c.to_string()).collect();
                format!("no polyhedron point near closure point [{}]", coords.join(", "))
            });
        }
    }
    Ok(outcome)
}

fn random_chart(rng: &mut ChaCha8Rng, rank: usize) -> ValuatedPolynomial {
    let n = rng.gen_range(1..=4);
    let mut exponents = std::collections::BTreeSet::new();
    let mut guard = 0;
    while exponents.len() < n && guard < 60 {
        exponents.insert(vec![
            BigInt::from(rng.gen_range(0..=3i64)),
            BigInt::from(rng.gen_range(0..=3i64)),
        ]);
        guard += 1;
    }
    let terms: Vec<(Vec<BigInt>, LexValue)> = exponents
        .into_iter()
        .map(|e| (e, random_lex(rng, rank, 4, 2)))
        .collect();
    ValuatedPolynomial::new(rank, 2, terms).expect("nonempty chart")
}

fn minplus_combine(
    rank: usize,
    dim: usize,
    terms: impl IntoIterator<Item = (Vec<BigInt>, LexValue)>,
) -> Result<ValuatedPolynomial> {
    let mut map: std::collections::BTreeMap<Vec<BigInt>, LexValue> = Default::default();
    for (e, v) in terms {
        match map.get(&e) {
            Some(old) if old.lex_cmp(&v)? != Ordering::Greater => {}
            _ => {
                map.insert(e, v);
            }
        }
    }
    ValuatedPolynomial::new(rank, dim, map)
}

fn minplus_product(g: &ValuatedPolynomial, h: &ValuatedPolynomial) -> Result<ValuatedPolynomial> {
    let mut terms = Vec::new();
    for (e1, v1) in g.terms() {
        for (e2, v2) in h.terms() {
            let e: Vec<BigInt> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
            terms.push((e, v1.lex_add(v2)?));
        }
    }
    minplus_combine(g.rank(), g.dim(), terms)
}

fn minplus_sum(g: &ValuatedPolynomial, h: &ValuatedPolynomial) -> Result<ValuatedPolynomial> {
    let terms = g
        .terms()
        .chain(h.terms())
        .map(|(e, v)| (e.clone(), v.clone()));
    minplus_combine(g.rank(), g.dim(), terms)
}

fn two_cycle_fixture() -> Result<(MetricGraph, Vec<Vec<ValuatedPolynomial>>)> {
    let graph = MetricGraph::new(
        2,
        2,
        vec![
            (0, 1, LexValue::from_ints(&[1, 0])),
            (1, 0, LexValue::from_ints(&[2, 0])),
        ],
    )?;
    let f1_short = ValuatedPolynomial::from_int_terms(2, 2, &[(&[1, 0], &[0, 0])])?;
    let f1_long =
        ValuatedPolynomial::from_int_terms(2, 2, &[(&[0, 0], &[1, 0]), (&[0, 1], &[0, 0])])?;
    let f2_short = ValuatedPolynomial::from_int_terms(2, 2, &[(&[0, 0], &[0, 0])])?;
    let f2_long =
        ValuatedPolynomial::from_int_terms(2, 2, &[(&[1, 0], &[0, 0]), (&[0, 1], &[0, 0])])?;
    Ok((graph, vec![vec![f1_short, f1_long], vec![f2_short, f2_long]]))
}

/// Edge-chart valuation laws on random pairs at random parameters, the
/// node relation `val(x) + val(y) = length`, and the two injectivity
/// fixtures: the embedded two-cycle separates, a single symmetric
/// function does not.
pub fn skeleton_valuation_laws(seed: u64, pairs: usize) -> Result<SuiteOutcome> {
    let mut rng = rng_for(seed, 6);
    let mut outcome = SuiteOutcome::new("skeleton-valuation-laws");
    for _ in 0..pairs {
        let rank = rng.gen_range(1..=3);
        let g = random_chart(&mut rng, rank);
        let h = random_chart(&mut rng, rank);
        let mut length_coords = vec![Rat::zero(); rank];
        length_coords[0] = Rat::from(BigInt::from(rng.gen_range(1..=5i64)));
        for c in length_coords.iter_mut().skip(1) {
            *c = random_rat(&mut rng, 3, 1);
        }
        let length = LexValue::Finite(length_coords);
        let den = rng.gen_range(1..=4i64);
        let num = rng.gen_range(0..=den);
        let omega = length
            .rational_scale(&Rat::new(BigInt::from(num), BigInt::from(den)))
            .expect("finite length");

        let vg = edge_valuation(&g, &length, &omega)?;
        let vh = edge_valuation(&h, &length, &omega)?;

        let product = edge_valuation(&minplus_product(&g, &h)?, &length, &omega)?;
        let expected = vg.lex_add(&vh)?;
        outcome.check(product == expected, || {
            format!("product chart valued {product}, expected {expected}")
        });

        let sum = edge_valuation(&minplus_sum(&g, &h)?, &length, &omega)?;
        let min = match vg.lex_cmp(&vh)? {
            Ordering::Greater => vh.clone(),
            _ => vg.clone(),
        };
        let lower_bounded = sum.lex_cmp(&min)? != Ordering::Less;
        let exact_when_split = vg == vh || sum == min;
        outcome.check(lower_bounded && exact_when_split, || {
            format!("sum chart valued {sum} against min {min}")
        });

        // Node relation: the two branch coordinates of an edge multiply
        // to a function of valuation equal to the length.
        let x = ValuatedPolynomial::from_int_terms(rank, 2, &[(&[1, 0], &vec![0i64; rank])])?;
        let y = ValuatedPolynomial::from_int_terms(rank, 2, &[(&[0, 1], &vec![0i64; rank])])?;
        let relation = edge_valuation(&x, &length, &omega)?
            .lex_add(&edge_valuation(&y, &length, &omega)?)?;
        outcome.check(relation == length, || {
            format!("val(x) + val(y) = {relation}, expected {length}")
        });
    }

    let (graph, charts) = two_cycle_fixture()?;
    let faithful = faithful_injectivity_check(&graph, &charts, 8)?;
    outcome.check(faithful.injective, || "two-cycle fixture not injective".to_string());

    let degenerate = vec![charts[1].clone()];
    let collisions = faithful_injectivity_check(&graph, &degenerate, 8)?;
    outcome.check(!collisions.injective && collisions.witness.is_some(), || {
        "degenerate fixture failed to produce a witness".to_string()
    });
    Ok(outcome)
}

/// All suites at their acceptance check counts.
pub fn run_all(seed: u64) -> Result<Vec<SuiteOutcome>> {
    Ok(vec![
        hahn_valuation_axioms(seed, 1000)?,
        oracle_equivalence(seed, 200, 50)?,
        path_connectivity(seed, 50, 20)?,
        projection_tower(seed, 50, 100)?,
        closure_limit_points(seed, 20, 30)?,
        skeleton_valuation_laws(seed, 200)?,
    ])
}

// StdRng is deliberately unused: suites must not depend on rand's default
// generator, whose stream may change between releases.
#[allow(unused)]
fn _pin_generator(_: Option<StdRng>) {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hahn_axioms_hold_on_a_sample() {
        let outcome = hahn_valuation_axioms(1729, 120).unwrap();
        assert_eq!(outcome.failures, 0, "{outcome}");
        assert_eq!(outcome.checks, 240);
    }

    #[test]
    fn membership_oracles_agree_on_a_sample() {
        let outcome = oracle_equivalence(1729, 12, 10).unwrap();
        assert_eq!(outcome.failures, 0, "{outcome}");
        assert_eq!(outcome.checks, 120);
    }

    #[test]
    fn paths_connect_and_verify_on_a_sample() {
        let outcome = path_connectivity(1729, 6, 4).unwrap();
        assert_eq!(outcome.failures, 0, "{outcome}");
        assert_eq!(outcome.checks, 24);
    }

    #[test]
    fn projections_and_lifts_hold_on_a_sample() {
        let outcome = projection_tower(1729, 10, 12).unwrap();
        assert_eq!(outcome.failures, 0, "{outcome}");
        assert!(outcome.checks >= 12);
    }

    #[test]
    fn closure_points_are_approximated_on_a_sample() {
        let outcome = closure_limit_points(1729, 4, 5).unwrap();
        assert_eq!(outcome.failures, 0, "{outcome}");
    }

    #[test]
    fn skeleton_laws_hold_on_a_sample() {
        let outcome = skeleton_valuation_laws(1729, 30).unwrap();
        assert_eq!(outcome.failures, 0, "{outcome}");
        assert_eq!(outcome.checks, 3 * 30 + 2);
    }

    #[test]
    fn suites_are_deterministic() {
        let a = oracle_equivalence(7, 5, 6).unwrap();
        let b = oracle_equivalence(7, 5, 6).unwrap();
        assert_eq!(a.checks, b.checks);
        assert_eq!(a.failures, b.failures);
        let c = hahn_valuation_axioms(7, 40).unwrap();
        let d = hahn_valuation_axioms(7, 40).unwrap();
        assert_eq!((c.checks, c.failures), (d.checks, d.failures));
    }

    #[test]
    fn lift_rejects_bad_ranks() {
        let p = ValuatedPolynomial::from_int_terms(
            2,
            1,
            &[(&[0], &[0, 0]), (&[1], &[0, 0])],
        )
        .unwrap();
        let w = vec![LexValue::from_ints(&[0])];
        assert!(matches!(
            lift_member(&p, 2, &w),
            Err(Error::ProjectionOutOfRange { .. })
        ));
    }
}
