//! Finite-support Hahn series: formal sums `sum a_r * t^r` with rational
//! coefficients and exponents `r` in the rank-`k` lexicographic group.
//!
//! Coefficients are trivially valued (every nonzero rational has valuation
//! zero), so the monomial valuation of a nonzero series is the lex-least
//! exponent of its support. Term maps are kept sorted in lex order, which
//! makes that minimum the first key.
//!
//! Text form: `3*t^(0,1)+5*t^(1,0)`. Canonical output lists terms in
//! ascending exponent order, omits unit coefficients (`t^(0,1)`,
//! `-t^(1,0)`), and prints the zero-exponent term as a bare rational.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lexgroup::{parse_rat, LexValue, Rat};

/// A finite-support series over the rank-`k` value group.
///
/// Invariants: every stored coefficient is nonzero and every exponent has
/// length equal to the rank. The zero series has an empty term map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HahnSeries {
    rank: usize,
    terms: BTreeMap<Vec<Rat>, Rat>,
}

impl HahnSeries {
    /// Builds a series from `(exponent, coefficient)` pairs, summing repeats
    /// and discarding zero coefficients.
    pub fn new(rank: usize, terms: impl IntoIterator<Item = (LexValue, Rat)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<Rat>, Rat> = BTreeMap::new();
        for (exponent, coeff) in terms {
            let coords = match exponent {
                LexValue::Finite(c) => c,
                LexValue::Infinity => return Err(Error::UnexpectedInfinity),
            };
            if coords.len() != rank {
                return Err(Error::RankMismatch { left: rank, right: coords.len() });
            }
            let entry = map.entry(coords).or_insert_with(Rat::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HahnSeries { rank, terms: map })
    }

    pub fn zero(rank: usize) -> Self {
        HahnSeries { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(rank, LexValue::zero(rank), Rat::one()).expect("zero exponent has the rank")
    }

    /// The single-term series `coeff * t^exponent`.
    pub fn monomial(rank: usize, exponent: LexValue, coeff: Rat) -> Result<Self> {
        Self::new(rank, [(exponent, coeff)])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order of exponent.
    pub fn terms(&self) -> impl Iterator<Item = (LexValue, Rat)> + '_ {
        self.terms
            .iter()
            .map(|(e, c)| (LexValue::Finite(e.clone()), c.clone()))
    }

    /// Coefficient at `exponent` (zero when absent).
    pub fn coeff(&self, exponent: &LexValue) -> Rat {
        match exponent {
            LexValue::Finite(c) => self.terms.get(c).cloned().unwrap_or_else(Rat::zero),
            LexValue::Infinity => Rat::zero(),
        }
    }

    fn check_rank(&self, other: &HahnSeries) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn hs_add(&self, other: &HahnSeries) -> Result<HahnSeries> {
        self.check_rank(other)?;
        let mut map = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = map.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HahnSeries { rank: self.rank, terms: map })
    }

    pub fn hs_neg(&self) -> HahnSeries {
        HahnSeries {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn hs_sub(&self, other: &HahnSeries) -> Result<HahnSeries> {
        self.hs_add(&other.hs_neg())
    }

    /// Convolution product: exponents add, coefficients multiply.
    pub fn hs_mul(&self, other: &HahnSeries) -> Result<HahnSeries> {
        self.check_rank(other)?;
        let mut map: BTreeMap<Vec<Rat>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exponent: Vec<Rat> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = map.entry(exponent).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HahnSeries { rank: self.rank, terms: map })
    }

    /// Monomial valuation: `Infinity` for the zero series, otherwise the
    /// lex-least exponent of the support.
    pub fn nu_mon(&self) -> LexValue {
        match self.terms.keys().next() {
            None => LexValue::Infinity,
            Some(e) => LexValue::Finite(e.clone()),
        }
    }

    /// Truncates every exponent to its first `j` coordinates and re-collects.
    /// Coefficients of exponents that become equal are summed, so terms can
    /// cancel; the monomial valuation of the result therefore dominates the
    /// truncation of `nu_mon`.
    pub fn truncate(&self, j: usize) -> Result<HahnSeries> {
        if j > self.rank {
            return Err(Error::ProjectionOutOfRange { j, rank: self.rank });
        }
        HahnSeries::new(
            j,
            self.terms
                .iter()
                .map(|(e, c)| (LexValue::Finite(e[..j].to_vec()), c.clone())),
        )
    }
}

impl fmt::Display for HahnSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exponent, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { "-" } else { "+" })?;
            }
            let zero_exponent = exponent.iter().all(Rat::is_zero);
            if zero_exponent {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write!(f, "t^{}", LexValue::Finite(exponent.clone()))?;
            }
        }
        Ok(())
    }
}

/// Parses the text form of a series at the given rank.
///
/// Accepted term shapes: `c`, `c*t^(e)`, `t^(e)`, `-t^(e)`, with rational
/// `c` and a rank-length tuple `e`. Terms are joined by `+` or `-`.
pub fn parse_hahn_series(input: &str, rank: usize) -> Result<HahnSeries> {
    let mut terms: Vec<(LexValue, Rat)> = Vec::new();
    let bytes = input.as_bytes();
    // Split into sign-prefixed term slices at top level (outside parentheses).
    let mut depth = 0usize;
    let mut term_start = 0usize;
    let mut boundaries: Vec<(usize, usize)> = Vec::new(); // (start, end) of each term
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                if depth == 0 {
                    return Err(Error::parse(i, "unbalanced `)`"));
                }
                depth -= 1;
            }
            b'+' | b'-' if depth == 0 && i > term_start => {
                // A sign at the very start of a term is part of the term.
                if input[term_start..i].trim().is_empty() {
                    continue;
                }
                boundaries.push((term_start, i));
                term_start = i;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::parse(input.len(), "unbalanced `(`"));
    }
    boundaries.push((term_start, input.len()));

    for (start, end) in boundaries {
        let raw = &input[start..end];
        let piece = raw.trim();
        if piece.is_empty() {
            return Err(Error::parse(start, "empty term"));
        }
        let pos = start + (raw.len() - raw.trim_start().len());
        let (sign, body) = match piece.strip_prefix('-') {
            Some(rest) => (-Rat::one(), rest.trim_start()),
            None => match piece.strip_prefix('+') {
                Some(rest) => (Rat::one(), rest.trim_start()),
                None => (Rat::one(), piece),
            },
        };
        if body.is_empty() {
            return Err(Error::parse(pos, "dangling sign"));
        }
        let (coeff_str, exp_str) = match body.find('t') {
            None => (body, None),
            Some(t_pos) => {
                let coeff_part = body[..t_pos].trim().trim_end_matches('*').trim();
                let after = &body[t_pos + 1..];
                let after = after.trim_start();
                let Some(tuple) = after.strip_prefix('^') else {
                    return Err(Error::parse(pos, "expected `^` after `t`"));
                };
                (coeff_part, Some(tuple.trim()))
            }
        };
        let coeff = if coeff_str.is_empty() {
            Rat::one()
        } else {
            parse_rat(coeff_str, pos)?
        };
        let exponent = match exp_str {
            None => LexValue::zero(rank),
            Some(tuple) => {
                let v = crate::lexgroup::parse_lex_value(tuple, Some(rank))?;
                if v.is_infinity() {
                    return Err(Error::UnexpectedInfinity);
                }
                v
            }
        };
        terms.push((exponent, &sign * coeff));
    }
    HahnSeries::new(rank, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(text: &str, rank: usize) -> HahnSeries {
        parse_hahn_series(text, rank).unwrap()
    }

    #[test]
    fn valuation_of_zero_is_infinity() {
        assert_eq!(HahnSeries::zero(2).nu_mon(), LexValue::Infinity);
        assert_eq!(HahnSeries::zero(0).nu_mon(), LexValue::Infinity);
    }

    #[test]
    fn valuation_picks_the_lex_least_exponent() {
        let f = series("3*t^(0,1)+5*t^(1,0)", 2);
        assert_eq!(f.nu_mon(), LexValue::from_ints(&[0, 1]));
        let g = series("7", 2);
        assert_eq!(g.nu_mon(), LexValue::from_ints(&[0, 0]));
    }

    #[test]
    fn product_with_cross_cancellation() {
        let f = series("t^(0,1)+t^(1,0)", 2);
        let g = series("t^(0,1)-t^(1,0)", 2);
        let product = f.hs_mul(&g).unwrap();
        assert_eq!(product, series("t^(0,2)-t^(2,0)", 2));
        assert_eq!(product.nu_mon(), LexValue::from_ints(&[0, 2]));
    }

    #[test]
    fn addition_cancels_to_zero() {
        let f = series("2*t^(1,1)-3*t^(0,5)", 2);
        let sum = f.hs_add(&f.hs_neg()).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.nu_mon(), LexValue::Infinity);
    }

    #[test]
    fn valuation_is_multiplicative_on_samples() {
        let f = series("3*t^(0,1)+5*t^(1,0)", 2);
        let g = series("1/2*t^(-1,4)+t^(2,2)", 2);
        let lhs = f.hs_mul(&g).unwrap().nu_mon();
        let rhs = f.nu_mon().lex_add(&g.nu_mon()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ultrametric_equality_when_valuations_differ() {
        let f = series("t^(0,1)", 2);
        let g = series("t^(1,0)", 2);
        let sum = f.hs_add(&g).unwrap();
        assert_eq!(sum.nu_mon(), LexValue::from_ints(&[0, 1]));
    }

    #[test]
    fn truncation_can_raise_the_valuation() {
        // The two lex-least terms cancel after dropping the tail coordinate.
        let f = series("t^(0,5)-t^(0,7)+t^(3,0)", 2);
        let t = f.truncate(1).unwrap();
        assert_eq!(t, series("t^(3)", 1));
        let projected = f.nu_mon().project(1).unwrap();
        assert_eq!(
            projected.lex_cmp(&t.nu_mon()).unwrap(),
            std::cmp::Ordering::Less
        );
    }

    #[test]
    fn rank_mismatch_is_rejected() {
        let f = series("t^(0,1)", 2);
        let g = series("t^(1)", 1);
        assert!(f.hs_add(&g).is_err());
        assert!(f.hs_mul(&g).is_err());
    }

    #[test]
    fn display_round_trips_canonically() {
        for text in [
            "0",
            "7",
            "-1/2",
            "t^(0,1)",
            "-t^(1,0)",
            "3*t^(0,1)+5*t^(1,0)",
            "-2+t^(0,1/2)-4/3*t^(5,-1)",
        ] {
            let f = series(text, 2);
            assert_eq!(f.to_string(), text);
            assert_eq!(parse_hahn_series(&f.to_string(), 2).unwrap(), f);
        }
        // Repeated exponents collect; unsorted input sorts.
        assert_eq!(series("t^(1,0)+t^(0,1)+2*t^(1,0)", 2).to_string(), "t^(0,1)+3*t^(1,0)");
    }

    #[test]
    fn scaling_exponent_arithmetic_stays_exact() {
        let f = series("t^(1/3,0)", 2);
        let cube = f.hs_mul(&f).unwrap().hs_mul(&f).unwrap();
        assert_eq!(cube.nu_mon(), LexValue::from_ints(&[1, 0]));
    }
}
