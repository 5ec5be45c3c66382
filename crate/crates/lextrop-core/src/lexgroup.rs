//! Values in the rank-`k` lexicographic value group: `R^k` ordered
//! lexicographically, extended by a global maximum `Infinity`.
//!
//! Coordinates are exact rationals. Rank 0 is the trivial group; its single
//! finite element prints as `()`. `Infinity` absorbs addition, compares
//! strictly above every finite value, and carries no rank of its own.
//!
//! Text form: `inf`, or a parenthesised tuple of rationals such as
//! `(0,3/2,-7)`. Serialisation is canonical: fractions are reduced,
//! denominators are positive and omitted when equal to 1, and no whitespace
//! is emitted.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the library.
pub type Rat = BigRational;

/// An element of the rank-`k` lexicographic group, or the global maximum.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum LexValue {
    Finite(Vec<Rat>),
    Infinity,
}

impl LexValue {
    /// The zero element of rank `rank`.
    pub fn zero(rank: usize) -> Self {
        LexValue::Finite(vec![Rat::zero(); rank])
    }

    /// Builds a finite value from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        LexValue::Finite(coords.iter().map(|&c| Rat::from(BigInt::from(c))).collect())
    }

    /// Builds a finite value from `(numerator, denominator)` pairs.
    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        LexValue::Finite(
            coords
                .iter()
                .map(|&(p, q)| Rat::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        )
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, LexValue::Infinity)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinity()
    }

    /// Rank of a finite value; `None` for `Infinity`.
    pub fn rank(&self) -> Option<usize> {
        match self {
            LexValue::Finite(c) => Some(c.len()),
            LexValue::Infinity => None,
        }
    }

    /// Coordinates of a finite value; `None` for `Infinity`.
    pub fn coords(&self) -> Option<&[Rat]> {
        match self {
            LexValue::Finite(c) => Some(c),
            LexValue::Infinity => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            LexValue::Finite(c) => c.iter().all(Rat::is_zero),
            LexValue::Infinity => false,
        }
    }

    /// Total lexicographic comparison. `Infinity` is the unique maximum and
    /// compares equal to itself; two finite values must share a rank.
    pub fn lex_cmp(&self, other: &LexValue) -> Result<Ordering> {
        match (self, other) {
            (LexValue::Infinity, LexValue::Infinity) => Ok(Ordering::Equal),
            (LexValue::Infinity, LexValue::Finite(_)) => Ok(Ordering::Greater),
            (LexValue::Finite(_), LexValue::Infinity) => Ok(Ordering::Less),
            (LexValue::Finite(a), LexValue::Finite(b)) => {
                if a.len() != b.len() {
                    return Err(Error::RankMismatch { left: a.len(), right: b.len() });
                }
                Ok(a.cmp(b))
            }
        }
    }

    /// Componentwise addition; `Infinity` absorbs.
    pub fn lex_add(&self, other: &LexValue) -> Result<LexValue> {
        match (self, other) {
            (LexValue::Infinity, _) | (_, LexValue::Infinity) => Ok(LexValue::Infinity),
            (LexValue::Finite(a), LexValue::Finite(b)) => {
                if a.len() != b.len() {
                    return Err(Error::RankMismatch { left: a.len(), right: b.len() });
                }
                Ok(LexValue::Finite(a.iter().zip(b).map(|(x, y)| x + y).collect()))
            }
        }
    }

    /// Subtraction of a finite value; errors when `other` is `Infinity`.
    pub fn lex_sub(&self, other: &LexValue) -> Result<LexValue> {
        self.lex_add(&other.integer_scale(&BigInt::from(-1))?)
    }

    /// `n`-fold sum. Negative `n` negates; `Infinity` scales to itself for
    /// `n >= 0` (absorbing convention) and is an error for negative `n`.
    pub fn integer_scale(&self, n: &BigInt) -> Result<LexValue> {
        match self {
            LexValue::Infinity => {
                if n.is_negative() {
                    Err(Error::NegativeScaleOfInfinity)
                } else {
                    Ok(LexValue::Infinity)
                }
            }
            LexValue::Finite(c) => {
                let f = Rat::from(n.clone());
                Ok(LexValue::Finite(c.iter().map(|x| x * &f).collect()))
            }
        }
    }

    /// Scaling by an exact rational. The group is divisible, so this is total
    /// on finite values; positive factors preserve the order. `Infinity` is
    /// rejected because rational scaling of the maximum is not defined.
    pub fn rational_scale(&self, q: &Rat) -> Result<LexValue> {
        match self {
            LexValue::Infinity => Err(Error::UnexpectedInfinity),
            LexValue::Finite(c) => Ok(LexValue::Finite(c.iter().map(|x| x * q).collect())),
        }
    }

    /// Truncation onto the first `j` coordinates. `Infinity` projects to
    /// `Infinity` at every level; `j` may be 0 (the trivial group) but must
    /// not exceed the rank of a finite value.
    pub fn project(&self, j: usize) -> Result<LexValue> {
        match self {
            LexValue::Infinity => Ok(LexValue::Infinity),
            LexValue::Finite(c) => {
                if j > c.len() {
                    return Err(Error::ProjectionOutOfRange { j, rank: c.len() });
                }
                Ok(LexValue::Finite(c[..j].to_vec()))
            }
        }
    }
}

impl fmt::Display for LexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LexValue::Infinity => write!(f, "inf"),
            LexValue::Finite(c) => {
                write!(f, "(")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Pairing of an integer slope against a point of `(R^k u {inf})^d`:
/// `sum_i slope[i] * point[i]`, taken in the rank-`rank` group.
///
/// Zero slope entries contribute nothing even against an `Infinity`
/// coordinate (the empty-sum convention), positive entries absorb into
/// `Infinity`, and a negative entry against `Infinity` is an error.
pub fn pairing(slope: &[BigInt], point: &[LexValue], rank: usize) -> Result<LexValue> {
    if slope.len() != point.len() {
        return Err(Error::DimensionMismatch { left: slope.len(), right: point.len() });
    }
    let mut acc = LexValue::zero(rank);
    for (u, w) in slope.iter().zip(point) {
        if u.is_zero() {
            continue;
        }
        acc = acc.lex_add(&w.integer_scale(u)?)?;
    }
    Ok(acc)
}

/// Tags how base-field elements are valued when polynomials are built.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoefficientField {
    /// Rational coefficients, trivially valued: every nonzero scalar has
    /// valuation zero.
    TriviallyValuedRationals,
    /// Coefficients are Hahn series; valuations come from their monomial
    /// valuation.
    HahnCoefficients,
}

/// Ambient rank plus the coefficient convention in force.
///
/// Every finite value handled under a context must have exactly the context
/// rank; `Infinity` is always admissible.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RankContext {
    pub rank: usize,
    pub coefficients: CoefficientField,
}

impl RankContext {
    pub fn new(rank: usize, coefficients: CoefficientField) -> Self {
        RankContext { rank, coefficients }
    }

    /// Checks that `v` is `Infinity` or finite of the context rank.
    pub fn check(&self, v: &LexValue) -> Result<()> {
        match v.rank() {
            None => Ok(()),
            Some(r) if r == self.rank => Ok(()),
            Some(r) => Err(Error::RankMismatch { left: self.rank, right: r }),
        }
    }
}

/// Parses a rational written as `p` or `p/q` starting at `offset` within the
/// line being parsed (offsets are reported in errors).
pub(crate) fn parse_rat(token: &str, offset: usize) -> Result<Rat> {
    let token = token.trim();
    if token.is_empty() {
        return Err(Error::parse(offset, "expected a rational number"));
    }
    let (num_str, den_str) = match token.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (token, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| Error::parse(offset, format!("invalid integer `{num_str}`")))?;
    let denom: BigInt = match den_str {
        None => BigInt::one(),
        Some(d) => d
            .parse()
            .map_err(|_| Error::parse(offset, format!("invalid integer `{d}`")))?,
    };
    if denom.is_zero() {
        return Err(Error::parse(offset, "zero denominator"));
    }
    Ok(Rat::new(numer, denom))
}

/// Parses the text form of a [`LexValue`]: `inf` or `(r1,...,rk)`.
///
/// `expected_rank`, when given, is validated against the tuple arity.
pub fn parse_lex_value(input: &str, expected_rank: Option<usize>) -> Result<LexValue> {
    let trimmed = input.trim();
    let base = input.len() - input.trim_start().len();
    if trimmed == "inf" {
        return Ok(LexValue::Infinity);
    }
    if !trimmed.starts_with('(') {
        return Err(Error::parse(base, "expected `inf` or `(`"));
    }
    if !trimmed.ends_with(')') {
        return Err(Error::parse(base + trimmed.len(), "expected closing `)`"));
    }
    let inner = &trimmed[1..trimmed.len() - 1];
    let mut coords = Vec::new();
    if !inner.trim().is_empty() {
        let mut offset = base + 1;
        for piece in inner.split(',') {
            coords.push(parse_rat(piece, offset)?);
            offset += piece.len() + 1;
        }
    }
    if let Some(k) = expected_rank {
        if coords.len() != k {
            return Err(Error::RankMismatch { left: k, right: coords.len() });
        }
    }
    Ok(LexValue::Finite(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(coords: &[i64]) -> LexValue {
        LexValue::from_ints(coords)
    }

    #[test]
    fn comparison_is_lexicographic_with_global_maximum() {
        assert_eq!(lv(&[0, 5]).lex_cmp(&lv(&[1, -100])).unwrap(), Ordering::Less);
        assert_eq!(lv(&[1, -100]).lex_cmp(&lv(&[0, 5])).unwrap(), Ordering::Greater);
        assert_eq!(lv(&[2, 3]).lex_cmp(&lv(&[2, 3])).unwrap(), Ordering::Equal);
        assert_eq!(LexValue::Infinity.lex_cmp(&lv(&[9, 9])).unwrap(), Ordering::Greater);
        assert_eq!(lv(&[9, 9]).lex_cmp(&LexValue::Infinity).unwrap(), Ordering::Less);
        assert_eq!(
            LexValue::Infinity.lex_cmp(&LexValue::Infinity).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn rank_mismatch_is_rejected() {
        let err = lv(&[1, 2]).lex_cmp(&lv(&[1, 2, 3])).unwrap_err();
        assert_eq!(err, Error::RankMismatch { left: 2, right: 3 });
        assert!(lv(&[1]).lex_add(&lv(&[1, 2])).is_err());
    }

    #[test]
    fn addition_absorbs_infinity() {
        assert_eq!(lv(&[1, 2]).lex_add(&lv(&[3, -5])).unwrap(), lv(&[4, -3]));
        assert_eq!(
            LexValue::Infinity.lex_add(&lv(&[3, -5])).unwrap(),
            LexValue::Infinity
        );
        assert_eq!(
            lv(&[0, 0]).lex_add(&LexValue::Infinity).unwrap(),
            LexValue::Infinity
        );
    }

    #[test]
    fn integer_scaling() {
        assert_eq!(lv(&[1, -2]).integer_scale(&BigInt::from(3)).unwrap(), lv(&[3, -6]));
        assert_eq!(lv(&[1, -2]).integer_scale(&BigInt::from(-1)).unwrap(), lv(&[-1, 2]));
        assert_eq!(
            LexValue::Infinity.integer_scale(&BigInt::from(4)).unwrap(),
            LexValue::Infinity
        );
        assert_eq!(
            LexValue::Infinity.integer_scale(&BigInt::from(-1)).unwrap_err(),
            Error::NegativeScaleOfInfinity
        );
    }

    #[test]
    fn projection_truncates_and_fixes_infinity() {
        let v = LexValue::from_ints(&[3, -7]);
        assert_eq!(v.project(1).unwrap(), lv(&[3]));
        assert_eq!(v.project(0).unwrap(), LexValue::Finite(vec![]));
        assert_eq!(v.project(2).unwrap(), v);
        assert_eq!(
            v.project(3).unwrap_err(),
            Error::ProjectionOutOfRange { j: 3, rank: 2 }
        );
        assert_eq!(LexValue::Infinity.project(0).unwrap(), LexValue::Infinity);
    }

    #[test]
    fn projection_preserves_order_weakly() {
        let a = lv(&[0, 1]);
        let b = lv(&[0, 2]);
        assert_eq!(a.lex_cmp(&b).unwrap(), Ordering::Less);
        assert_eq!(
            a.project(1).unwrap().lex_cmp(&b.project(1).unwrap()).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn text_round_trip_is_canonical() {
        for text in ["inf", "()", "(0)", "(0,3/2)", "(-5,7/3,0)"] {
            let v = parse_lex_value(text, None).unwrap();
            assert_eq!(v.to_string(), text);
        }
        // Non-canonical spellings normalise.
        assert_eq!(parse_lex_value("( 2/4 , -3/1 )", Some(2)).unwrap().to_string(), "(1/2,-3)");
        assert_eq!(parse_lex_value("(4/-6)", None).unwrap().to_string(), "(-2/3)");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_lex_value("(1,x)", None).unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 3),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_lex_value("(1/0)", None).is_err());
        assert!(parse_lex_value("oo", None).is_err());
        assert_eq!(
            parse_lex_value("(1,2)", Some(3)).unwrap_err(),
            Error::RankMismatch { left: 3, right: 2 }
        );
    }

    #[test]
    fn rank_context_checks_finite_ranks_only() {
        let ctx = RankContext::new(2, CoefficientField::TriviallyValuedRationals);
        assert!(ctx.check(&lv(&[1, 2])).is_ok());
        assert!(ctx.check(&LexValue::Infinity).is_ok());
        assert!(ctx.check(&lv(&[1])).is_err());
    }
}
