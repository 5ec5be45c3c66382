//! Tropical hypersurfaces of valuated Laurent polynomials over the rank-`k`
//! lex group: the membership oracle, cell enumeration into a complex, the
//! Banerjee tropicalization (Euclidean closure of the flattening), rank
//! projections, extended membership on orthant strata, and monomial
//! valuations.
//!
//! The term weight of an exponent `u` at a point `w` is
//! `valuation(a_u) + <w,u>`; a point is on the hypersurface when the
//! lexicographic minimum of the weights is attained by at least two terms.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hahnseries::HahnSeries;
use crate::lexgroup::{pairing, LexValue};
use crate::polyhedra::{canonical_union, EuclideanPiece, LexComplex, LexHalfspace, LexPolyhedron, Relation};

/// A Laurent polynomial remembered only through its coefficient valuations:
/// a finite map from integer exponent vectors to finite `LexValue`s.
///
/// Invariants: at least one term, every valuation finite (terms with zero
/// coefficient are simply absent), every exponent of length `dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValuatedPolynomial {
    rank: usize,
    dim: usize,
    terms: BTreeMap<Vec<BigInt>, LexValue>,
}

impl ValuatedPolynomial {
    pub fn new(
        rank: usize,
        dim: usize,
        terms: impl IntoIterator<Item = (Vec<BigInt>, LexValue)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (exponent, valuation) in terms {
            if exponent.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: exponent.len() });
            }
            match valuation.rank() {
                None => return Err(Error::UnexpectedInfinity),
                Some(r) if r != rank => {
                    return Err(Error::RankMismatch { left: rank, right: r })
                }
                _ => {}
            }
            map.insert(exponent, valuation);
        }
        if map.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(ValuatedPolynomial { rank, dim, terms: map })
    }

    pub fn from_int_terms(rank: usize, dim: usize, terms: &[(&[i64], &[i64])]) -> Result<Self> {
        ValuatedPolynomial::new(
            rank,
            dim,
            terms.iter().map(|(exp, val)| {
                (
                    exp.iter().map(|&e| BigInt::from(e)).collect(),
                    LexValue::from_ints(val),
                )
            }),
        )
    }

    /// Derives term valuations from Hahn series coefficients via their
    /// monomial valuation. Zero series valuate to `Infinity` and are
    /// dropped; a polynomial whose coefficients all vanish is rejected.
    pub fn from_hahn_coefficients(
        rank: usize,
        dim: usize,
        coefficients: impl IntoIterator<Item = (Vec<BigInt>, HahnSeries)>,
    ) -> Result<Self> {
        let mut terms = Vec::new();
        for (exponent, series) in coefficients {
            if series.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: series.rank() });
            }
            let valuation = series.nu_mon();
            if valuation.is_finite() {
                terms.push((exponent, valuation));
            }
        }
        ValuatedPolynomial::new(rank, dim, terms)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<BigInt>, &LexValue)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Weight of one term at a finite point: `valuation + <w,u>`.
    fn weight(&self, valuation: &LexValue, exponent: &[BigInt], w: &[LexValue]) -> Result<LexValue> {
        valuation.lex_add(&pairing(exponent, w, self.rank)?)
    }

    /// Truncates every coefficient valuation to rank `j`.
    pub fn truncated(&self, j: usize) -> Result<ValuatedPolynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (exponent, valuation) in &self.terms {
            terms.push((exponent.clone(), valuation.project(j)?));
        }
        ValuatedPolynomial::new(j, self.dim, terms)
    }
}

/// Is `w` on the tropical hypersurface of `p`? True iff the lex-minimum
/// term weight is attained by at least two distinct terms. This is the
/// brute-force oracle the complex-level computations are tested against.
pub fn trop_membership(p: &ValuatedPolynomial, w: &[LexValue]) -> Result<bool> {
    if w.len() != p.dim {
        return Err(Error::DimensionMismatch { left: p.dim, right: w.len() });
    }
    let mut min: Option<LexValue> = None;
    let mut count = 0usize;
    for (exponent, valuation) in &p.terms {
        let weight = p.weight(valuation, exponent, w)?;
        match &min {
            None => {
                min = Some(weight);
                count = 1;
            }
            Some(m) => match weight.lex_cmp(m)? {
                std::cmp::Ordering::Less => {
                    min = Some(weight);
                    count = 1;
                }
                std::cmp::Ordering::Equal => count += 1,
                std::cmp::Ordering::Greater => {}
            },
        }
    }
    Ok(count >= 2)
}

/// The polyhedron where the weights of `u` and `v` agree and weakly
/// minorise every other term weight.
fn pair_cell(
    p: &ValuatedPolynomial,
    u: &[BigInt],
    a_u: &LexValue,
    v: &[BigInt],
    a_v: &LexValue,
) -> Result<LexPolyhedron> {
    let mut constraints = Vec::with_capacity(p.terms.len() - 1);
    // a_u + <w,u> = a_v + <w,v>  <=>  <w, u-v> = a_v - a_u.
    let eq_slope: Vec<BigInt> = u.iter().zip(v).map(|(a, b)| a - b).collect();
    constraints.push(LexHalfspace::new(eq_slope, Relation::Eq, a_v.lex_sub(a_u)?));
    for (m, a_m) in &p.terms {
        if m.as_slice() == u || m.as_slice() == v {
            continue;
        }
        // a_u + <w,u> <= a_m + <w,m>  <=>  <w, m-u> >= a_u - a_m.
        let slope: Vec<BigInt> = m.iter().zip(u).map(|(a, b)| a - b).collect();
        constraints.push(LexHalfspace::new(slope, Relation::Ge, a_u.lex_sub(a_m)?));
    }
    LexPolyhedron::new(p.rank, p.dim, constraints)
}

/// The tropical hypersurface of `p` as a complex of maximal cells, one per
/// unordered term pair whose common-minimum locus is nonempty and not
/// contained in another pair's locus. A single-term polynomial yields the
/// empty complex (its weight minimum is attained once everywhere).
pub fn trop_hypersurface(p: &ValuatedPolynomial) -> Result<LexComplex> {
    let terms: Vec<(&Vec<BigInt>, &LexValue)> = p.terms.iter().collect();
    let mut cells: Vec<LexPolyhedron> = Vec::new();
    for i in 0..terms.len() {
        for j in (i + 1)..terms.len() {
            let cell = pair_cell(p, terms[i].0, terms[i].1, terms[j].0, terms[j].1)?;
            if !cell.is_empty() && !cells.contains(&cell) {
                cells.push(cell);
            }
        }
    }
    // Keep only maximal cells: drop any cell strictly inside another; equal
    // point sets with distinct spellings keep the canonically first one.
    let mut keep = vec![true; cells.len()];
    for i in 0..cells.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..cells.len() {
            if i == j || !keep[j] {
                continue;
            }
            if cells[i].subset_of(&cells[j])? {
                let mutual = cells[j].subset_of(&cells[i])?;
                if !mutual || j < i {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let maximal: Vec<LexPolyhedron> = cells
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect();
    LexComplex::new(p.rank, p.dim, maximal)
}

/// The Banerjee tropicalization: Euclidean closure of the flattened
/// hypersurface in `R^{k*d}`, returned as a canonical union of closed
/// pieces.
pub fn banerjee_trop(p: &ValuatedPolynomial) -> Result<Vec<EuclideanPiece>> {
    let complex = trop_hypersurface(p)?;
    let mut pieces = Vec::new();
    for cell in complex.maximal_cells() {
        pieces.extend(cell.euclidean_closure()?);
    }
    Ok(canonical_union(pieces))
}

/// The hypersurface at full rank together with the hypersurface of the
/// rank-`j` truncation (coefficient valuations projected to their first
/// `j` coordinates). Requires `0 < j <= k`.
pub fn trop_project(p: &ValuatedPolynomial, j: usize) -> Result<(LexComplex, LexComplex)> {
    if j == 0 || j > p.rank {
        return Err(Error::ProjectionOutOfRange { j, rank: p.rank });
    }
    Ok((trop_hypersurface(p)?, trop_hypersurface(&p.truncated(j)?)?))
}

/// A point of the extended orthant space: coordinates in the lex group or
/// at the `Infinity` stratum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtendedPoint {
    coordinates: Vec<LexValue>,
}

impl ExtendedPoint {
    pub fn new(rank: usize, coordinates: Vec<LexValue>) -> Result<Self> {
        for c in &coordinates {
            if let Some(r) = c.rank() {
                if r != rank {
                    return Err(Error::RankMismatch { left: rank, right: r });
                }
            }
        }
        Ok(ExtendedPoint { coordinates })
    }

    pub fn coordinates(&self) -> &[LexValue] {
        &self.coordinates
    }

    pub fn is_finite(&self) -> bool {
        self.coordinates.iter().all(LexValue::is_finite)
    }
}

fn require_orthant(p: &ValuatedPolynomial) -> Result<()> {
    for exponent in p.terms.keys() {
        if exponent.iter().any(Signed::is_negative) {
            return Err(Error::NegativeExponent);
        }
    }
    Ok(())
}

/// Extended membership on the orthant patch. Terms with a positive
/// exponent on an `Infinity` coordinate are dropped (they vanish on the
/// stratum); if nothing remains, the restriction is identically zero and
/// the point belongs. Otherwise the finite tie criterion applies to the
/// surviving terms, whose weights no longer involve `Infinity`.
pub fn extended_trop_membership(p: &ValuatedPolynomial, w: &ExtendedPoint) -> Result<bool> {
    require_orthant(p)?;
    if w.coordinates.len() != p.dim {
        return Err(Error::DimensionMismatch { left: p.dim, right: w.coordinates.len() });
    }
    let infinite: Vec<bool> = w.coordinates.iter().map(LexValue::is_infinity).collect();
    let mut restricted = Vec::new();
    for (exponent, valuation) in &p.terms {
        let vanishes = exponent
            .iter()
            .zip(&infinite)
            .any(|(e, inf)| *inf && e.is_positive());
        if !vanishes {
            restricted.push((exponent.clone(), valuation.clone()));
        }
    }
    if restricted.is_empty() {
        return Ok(true);
    }
    let surviving = ValuatedPolynomial::new(p.rank, p.dim, restricted)?;
    // On the stratum the surviving exponents are zero at every infinite
    // coordinate, so any finite stand-in is arithmetic-neutral there.
    let finite_point: Vec<LexValue> = w
        .coordinates
        .iter()
        .map(|c| if c.is_infinity() { LexValue::zero(p.rank) } else { c.clone() })
        .collect();
    trop_membership(&surviving, &finite_point)
}

/// Minimum term weight `valuation + <u,omega>` over raw term data, with
/// `Infinity`-absorbing arithmetic. The empty term list yields `Infinity`
/// (the valuation of the zero polynomial).
pub fn monomial_valuation_of_terms(
    terms: &[(Vec<BigInt>, LexValue)],
    omega: &ExtendedPoint,
    rank: usize,
) -> Result<LexValue> {
    let mut min: Option<LexValue> = None;
    for (exponent, valuation) in terms {
        if exponent.iter().any(Signed::is_negative) {
            return Err(Error::NegativeExponent);
        }
        if let Some(r) = valuation.rank() {
            if r != rank {
                return Err(Error::RankMismatch { left: rank, right: r });
            }
        }
        if exponent.len() != omega.coordinates.len() {
            return Err(Error::DimensionMismatch {
                left: omega.coordinates.len(),
                right: exponent.len(),
            });
        }
        let mut weight = valuation.clone();
        for (e, c) in exponent.iter().zip(&omega.coordinates) {
            if e.is_zero() {
                continue;
            }
            weight = weight.lex_add(&c.integer_scale(e)?)?;
        }
        min = Some(match min {
            None => weight,
            Some(m) => {
                if weight.lex_cmp(&m)? == std::cmp::Ordering::Less {
                    weight
                } else {
                    m
                }
            }
        });
    }
    Ok(min.unwrap_or(LexValue::Infinity))
}

/// Monomial valuation of an orthant-patch polynomial at an extended point:
/// the section of the tropicalization map evaluated at `p`, restricting on
/// the torus to the weight minimum of `trop_membership`.
pub fn monomial_valuation(p: &ValuatedPolynomial, omega: &ExtendedPoint) -> Result<LexValue> {
    require_orthant(p)?;
    let terms: Vec<(Vec<BigInt>, LexValue)> = p
        .terms
        .iter()
        .map(|(e, v)| (e.clone(), v.clone()))
        .collect();
    monomial_valuation_of_terms(&terms, omega, p.rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// x + y + 1 with all coefficient valuations (0,0): the running
    /// rank-2 example.
    fn tropical_line() -> ValuatedPolynomial {
        ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[1, 0], &[0, 0]), (&[0, 1], &[0, 0]), (&[0, 0], &[0, 0])],
        )
        .unwrap()
    }

    fn pt2(a: &[i64], b: &[i64]) -> Vec<LexValue> {
        vec![LexValue::from_ints(a), LexValue::from_ints(b)]
    }

    #[test]
    fn membership_detects_weight_ties() {
        let p = tropical_line();
        assert!(trop_membership(&p, &pt2(&[0, 0], &[0, 0])).unwrap());
        assert!(!trop_membership(&p, &pt2(&[1, 0], &[2, 0])).unwrap());
        assert!(trop_membership(&p, &pt2(&[0, -3], &[0, -3])).unwrap());
    }

    #[test]
    fn tropical_line_has_three_glued_halfspace_cells() {
        let complex = trop_hypersurface(&tropical_line()).unwrap();
        let strings: Vec<Vec<String>> = complex
            .maximal_cells()
            .iter()
            .map(LexPolyhedron::constraint_strings)
            .collect();
        assert_eq!(
            strings,
            vec![
                vec!["0,-1 >= (0,0)".to_string(), "1,-1 = (0,0)".to_string()],
                vec!["0,1 = (0,0)".to_string(), "1,0 >= (0,0)".to_string()],
                vec!["0,1 >= (0,0)".to_string(), "1,0 = (0,0)".to_string()],
            ]
        );
        // The same three sets spelled the other way round: the diagonal
        // with the first coordinate bounded, and the two axes.
        let respelled = [
            vec![
                LexHalfspace::from_ints(&[1, -1], Relation::Eq, LexValue::zero(2)),
                LexHalfspace::from_ints(&[-1, 0], Relation::Ge, LexValue::zero(2)),
            ],
            vec![
                LexHalfspace::from_ints(&[0, 1], Relation::Eq, LexValue::zero(2)),
                LexHalfspace::from_ints(&[1, -1], Relation::Ge, LexValue::zero(2)),
            ],
            vec![
                LexHalfspace::from_ints(&[1, 0], Relation::Eq, LexValue::zero(2)),
                LexHalfspace::from_ints(&[-1, 1], Relation::Ge, LexValue::zero(2)),
            ],
        ];
        for (cell, spelling) in complex.maximal_cells().iter().zip(respelled) {
            let other = LexPolyhedron::new(2, 2, spelling).unwrap();
            assert!(cell.set_eq(&other).unwrap());
        }
        // All three cells meet at the origin.
        let origin = pt2(&[0, 0], &[0, 0]);
        for cell in complex.maximal_cells() {
            assert!(cell.contains(&origin).unwrap());
        }
    }

    #[test]
    fn single_monomial_has_empty_hypersurface() {
        let p = ValuatedPolynomial::from_int_terms(2, 1, &[(&[3], &[0, 0])]).unwrap();
        let complex = trop_hypersurface(&p).unwrap();
        assert!(complex.maximal_cells().is_empty());
        assert!(!trop_membership(&p, &[LexValue::from_ints(&[1, 1])]).unwrap());
    }

    #[test]
    fn binomial_hypersurface_is_the_diagonal() {
        let p = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[1, 0], &[0, 0]), (&[0, 1], &[0, 0])],
        )
        .unwrap();
        let complex = trop_hypersurface(&p).unwrap();
        assert_eq!(complex.maximal_cells().len(), 1);
        assert_eq!(
            complex.maximal_cells()[0].constraint_strings(),
            vec!["1,-1 = (0,0)"]
        );
    }

    #[test]
    fn banerjee_closure_of_the_line_gives_three_closed_flats() {
        let pieces = banerjee_trop(&tropical_line()).unwrap();
        let strings: Vec<Vec<String>> =
            pieces.iter().map(EuclideanPiece::constraint_strings).collect();
        assert_eq!(
            strings,
            vec![
                vec![
                    "0,0,-1,0 >= 0".to_string(),
                    "0,1,0,-1 = 0".to_string(),
                    "1,0,-1,0 = 0".to_string(),
                ],
                vec![
                    "0,0,0,1 = 0".to_string(),
                    "0,0,1,0 = 0".to_string(),
                    "1,0,0,0 >= 0".to_string(),
                ],
                vec![
                    "0,0,1,0 >= 0".to_string(),
                    "0,1,0,0 = 0".to_string(),
                    "1,0,0,0 = 0".to_string(),
                ],
            ]
        );
        // Each piece is a halfplane inside a 2-flat of R^4 (two equations,
        // one closed inequality), and all three contain the origin.
        let origin = vec![crate::lexgroup::Rat::zero(); 4];
        for piece in &pieces {
            let eqs = piece
                .constraints()
                .iter()
                .filter(|c| c.relation() == Relation::Eq)
                .count();
            assert_eq!(eqs, 2);
            assert_eq!(piece.constraints().len(), 3);
            assert!(piece.constraints().iter().all(|c| !c.is_strict()));
            assert!(piece.contains(&origin));
        }
    }

    #[test]
    fn binomial_closure_is_already_closed() {
        let p = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[1, 0], &[0, 0]), (&[0, 1], &[0, 0])],
        )
        .unwrap();
        let pieces = banerjee_trop(&p).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(
            pieces[0].constraint_strings(),
            vec!["0,1,0,-1 = 0", "1,0,-1,0 = 0"]
        );
        assert!(pieces[0].constraints().iter().all(|c| !c.is_strict()));
    }

    #[test]
    fn rank_one_line_is_its_own_closure() {
        let p = ValuatedPolynomial::from_int_terms(
            1,
            2,
            &[(&[1, 0], &[0]), (&[0, 1], &[0]), (&[0, 0], &[0])],
        )
        .unwrap();
        let complex = trop_hypersurface(&p).unwrap();
        assert_eq!(complex.maximal_cells().len(), 3);
        let closed = banerjee_trop(&p).unwrap();
        // At rank 1 the flattening is the identity and the cells are
        // already closed, so closing adds no points: membership in a
        // closed piece matches the tie criterion on an integer grid.
        assert_eq!(closed.len(), 3);
        let grid: Vec<i64> = vec![-3, -2, -1, 0, 1, 2, 3];
        for a in &grid {
            for b in &grid {
                let w = vec![LexValue::from_ints(&[*a]), LexValue::from_ints(&[*b])];
                let flat = vec![
                    crate::lexgroup::Rat::from(BigInt::from(*a)),
                    crate::lexgroup::Rat::from(BigInt::from(*b)),
                ];
                let on_surface = trop_membership(&p, &w).unwrap();
                let in_closure = closed.iter().any(|piece| piece.contains(&flat));
                assert_eq!(on_surface, in_closure);
            }
        }
    }

    #[test]
    fn projection_truncates_coefficient_valuations() {
        let p = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[1, 0], &[0, 0]), (&[0, 1], &[0, 1]), (&[0, 0], &[0, 0])],
        )
        .unwrap();
        let (full, truncated) = trop_project(&p, 1).unwrap();
        assert_eq!(full.rank(), 2);
        assert_eq!(truncated.rank(), 1);
        // Truncating (0,1) to rank 1 gives (0): the classical line of the
        // all-zero-valuation polynomial.
        let classical = trop_hypersurface(
            &ValuatedPolynomial::from_int_terms(
                1,
                2,
                &[(&[1, 0], &[0]), (&[0, 1], &[0]), (&[0, 0], &[0])],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(truncated, classical);
        assert!(trop_project(&p, 0).is_err());
        assert!(trop_project(&p, 3).is_err());
        let (same_full, same) = trop_project(&p, 2).unwrap();
        assert_eq!(same_full, same);
    }

    #[test]
    fn extended_membership_follows_the_stratum_convention() {
        let p = tropical_line();
        let at = |a: LexValue, b: LexValue| {
            extended_trop_membership(&p, &ExtendedPoint::new(2, vec![a, b]).unwrap()).unwrap()
        };
        // x drops at (inf, *): restriction y + 1.
        assert!(at(LexValue::Infinity, LexValue::zero(2)));
        assert!(!at(LexValue::Infinity, LexValue::from_ints(&[3, 0])));
        // Both variables drop: restriction is the nonvanishing constant 1.
        assert!(!at(LexValue::Infinity, LexValue::Infinity));
    }

    #[test]
    fn extended_membership_rejects_laurent_exponents() {
        let p = ValuatedPolynomial::from_int_terms(
            2,
            1,
            &[(&[-1], &[0, 0]), (&[1], &[0, 0])],
        )
        .unwrap();
        let w = ExtendedPoint::new(2, vec![LexValue::Infinity]).unwrap();
        assert_eq!(extended_trop_membership(&p, &w).unwrap_err(), Error::NegativeExponent);
    }

    #[test]
    fn monomial_valuation_takes_the_weight_minimum() {
        let p = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[1, 0], &[0, 0]), (&[0, 1], &[0, 0])],
        )
        .unwrap();
        let omega = ExtendedPoint::new(
            2,
            vec![LexValue::from_ints(&[1, 0]), LexValue::from_ints(&[0, 1])],
        )
        .unwrap();
        assert_eq!(
            monomial_valuation(&p, &omega).unwrap(),
            LexValue::from_ints(&[0, 1])
        );
        // Infinity absorbs the first term.
        let omega_inf = ExtendedPoint::new(2, vec![LexValue::Infinity, LexValue::zero(2)]).unwrap();
        assert_eq!(monomial_valuation(&p, &omega_inf).unwrap(), LexValue::zero(2));
    }

    #[test]
    fn monomial_valuation_of_zero_is_infinity() {
        let omega = ExtendedPoint::new(2, vec![LexValue::zero(2)]).unwrap();
        assert_eq!(
            monomial_valuation_of_terms(&[], &omega, 2).unwrap(),
            LexValue::Infinity
        );
    }

    #[test]
    fn hahn_coefficients_determine_valuations() {
        use crate::hahnseries::parse_hahn_series;
        let coeffs = vec![
            (
                vec![BigInt::from(1), BigInt::from(0)],
                parse_hahn_series("3*t^(0,1)+5*t^(1,0)", 2).unwrap(),
            ),
            (
                vec![BigInt::from(0), BigInt::from(1)],
                parse_hahn_series("7", 2).unwrap(),
            ),
            (
                vec![BigInt::from(0), BigInt::from(0)],
                parse_hahn_series("t^(0,1)-t^(0,1)", 2).unwrap(),
            ),
        ];
        let p = ValuatedPolynomial::from_hahn_coefficients(2, 2, coeffs).unwrap();
        // The cancelling coefficient dropped; the others keep nu_mon.
        assert_eq!(p.term_count(), 2);
        let vals: Vec<LexValue> = p.terms().map(|(_, v)| v.clone()).collect();
        assert_eq!(vals[0], LexValue::zero(2));
        assert_eq!(vals[1], LexValue::from_ints(&[0, 1]));
    }

    #[test]
    fn cells_are_one_equality_and_few_inequalities() {
        let p = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[
                (&[1, 0], &[0, 0]),
                (&[0, 1], &[0, 1]),
                (&[0, 0], &[0, 0]),
                (&[1, 1], &[1, 0]),
            ],
        )
        .unwrap();
        let complex = trop_hypersurface(&p).unwrap();
        assert!(!complex.maximal_cells().is_empty());
        for cell in complex.maximal_cells() {
            let eq = cell
                .constraints()
                .iter()
                .filter(|c| c.relation() == Relation::Eq)
                .count();
            let ineq = cell.constraints().len() - eq;
            assert_eq!(eq, 1);
            assert!(ineq <= p.term_count() - 2);
        }
    }

    #[test]
    fn membership_agrees_with_cells_on_a_grid() {
        let p = ValuatedPolynomial::from_int_terms(
            2,
            2,
            &[(&[1, 0], &[0, 0]), (&[0, 1], &[0, 1]), (&[0, 0], &[0, 0])],
        )
        .unwrap();
        let complex = trop_hypersurface(&p).unwrap();
        let grid: Vec<i64> = vec![-2, -1, 0, 1, 2];
        for a in &grid {
            for b in &grid {
                for c in &grid {
                    for d in &grid {
                        let w = pt2(&[*a, *b], &[*c, *d]);
                        let direct = trop_membership(&p, &w).unwrap();
                        let via_cells = complex.contains(&w).unwrap();
                        assert_eq!(direct, via_cells, "disagreement at {w:?}");
                    }
                }
            }
        }
    }
}
