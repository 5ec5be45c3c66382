//! Exact Fourier-Motzkin variable elimination with strict/non-strict
//! bookkeeping, generic over the space the constant terms live in.
//!
//! The same engine decides feasibility of linear constraint systems with
//! rational coefficients over two ordered divisible groups: the rationals
//! themselves (flattened Euclidean pieces) and rank-`k` lex vectors
//! (halfspace systems, where eliminating one group-valued variable at a time
//! keeps the instance at the ambient dimension instead of `k` times it).
//! Elimination is complete over any totally ordered divisible group, and
//! both instances are divisible.
//!
//! Feasible systems yield a deterministic rational witness: variables are
//! eliminated from the highest index down, then assigned back in increasing
//! index order, greedily taking the least admissible value (attained lower
//! bounds are taken exactly; open bounds step inward by a fixed nudge or to
//! the midpoint).

use std::cmp::Ordering;
use std::collections::HashMap;

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

use crate::lexgroup::Rat;

/// Ordered divisible group with rational scaling; constants of the systems
/// the eliminator works on.
pub(crate) trait Space: Clone {
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, factor: &Rat) -> Self;
    /// Sign of the value: comparison against the group zero.
    fn sign(&self) -> Ordering;
    /// A fixed positive element used to step off open bounds.
    fn nudge(&self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }
    fn cmp_to(&self, other: &Self) -> Ordering {
        self.sub(other).sign()
    }
    fn midpoint(&self, other: &Self) -> Self {
        self.add(other).scale(&Rat::new(BigInt::one(), BigInt::from(2)))
    }
}

impl Space for Rat {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, factor: &Rat) -> Self {
        self * factor
    }
    fn sign(&self) -> Ordering {
        self.cmp(&Rat::zero())
    }
    fn nudge(&self) -> Self {
        Rat::one()
    }
}

/// Finite lex-group element. The nudge is the least-significant unit, so
/// witnesses stepping off an open bound move as little as the order allows.
#[derive(Clone, PartialEq, Debug)]
pub(crate) struct LexVec(pub Vec<Rat>);

impl Space for LexVec {
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        LexVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
    fn scale(&self, factor: &Rat) -> Self {
        LexVec(self.0.iter().map(|a| a * factor).collect())
    }
    fn sign(&self) -> Ordering {
        for c in &self.0 {
            match c.cmp(&Rat::zero()) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }
    fn nudge(&self) -> Self {
        assert!(!self.0.is_empty(), "rank-0 group has no positive element");
        let mut v = vec![Rat::zero(); self.0.len()];
        *v.last_mut().expect("nonempty") = Rat::one();
        LexVec(v)
    }
}

/// Relation of an expression against zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Rel {
    Eq,
    Ge,
    Gt,
}

/// `coeffs . x + constant`, with rational coefficients and a group constant.
#[derive(Clone, Debug)]
pub(crate) struct LinExpr<T> {
    pub coeffs: Vec<Rat>,
    pub constant: T,
}

impl<T: Space> LinExpr<T> {
    fn eval(&self, values: &[Option<T>]) -> T {
        let mut acc = self.constant.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = values[i].as_ref().expect("referenced variable already assigned");
            acc = acc.add(&v.scale(c));
        }
        acc
    }

    /// Adds `factor` times `other` (matching variable counts).
    fn add_scaled(&self, other: &LinExpr<T>, factor: &Rat) -> LinExpr<T> {
        LinExpr {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b * factor)
                .collect(),
            constant: self.constant.add(&other.constant.scale(factor)),
        }
    }
}

/// A single constraint `expr rel 0`.
#[derive(Clone, Debug)]
pub(crate) struct LinCon<T> {
    pub expr: LinExpr<T>,
    pub rel: Rel,
}

impl<T: Space> LinCon<T> {
    pub fn new(coeffs: Vec<Rat>, constant: T, rel: Rel) -> Self {
        LinCon { expr: LinExpr { coeffs, constant }, rel }
    }

    fn is_terminal(&self) -> bool {
        self.expr.coeffs.iter().all(Rat::is_zero)
    }

    fn terminal_holds(&self) -> bool {
        let sign = self.expr.constant.sign();
        match self.rel {
            Rel::Eq => sign == Ordering::Equal,
            Rel::Ge => sign != Ordering::Less,
            Rel::Gt => sign == Ordering::Greater,
        }
    }
}

/// Scales a rational vector by a positive factor making it a primitive
/// integer vector; returns the factor. Zero vectors scale by 1.
pub(crate) fn primitive_factor(coeffs: &[Rat]) -> Rat {
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        denom_lcm = denom_lcm.lcm(c.denom());
        numer_gcd = numer_gcd.gcd(c.numer());
    }
    if numer_gcd.is_zero() {
        Rat::one()
    } else {
        Rat::new(denom_lcm, numer_gcd)
    }
}

enum Step<T> {
    /// `x_var = expr`, solved from an equality.
    Subst { var: usize, expr: LinExpr<T> },
    /// Bounds on `x_var` in force when it was eliminated (`bool` = strict).
    Bounds {
        var: usize,
        lowers: Vec<(LinExpr<T>, bool)>,
        uppers: Vec<(LinExpr<T>, bool)>,
    },
}

/// Normalises, deduplicates, and terminal-checks the working set.
/// Returns `false` on a violated terminal constraint.
fn prune<T: Space>(cons: &mut Vec<LinCon<T>>) -> bool {
    // Normalise to primitive integer coefficient vectors (positive factor,
    // so relations are preserved) to make directions comparable.
    for con in cons.iter_mut() {
        let f = primitive_factor(&con.expr.coeffs);
        if !f.is_one() {
            con.expr.coeffs.iter_mut().for_each(|c| *c *= &f);
            con.expr.constant = con.expr.constant.scale(&f);
        }
        if con.rel == Rel::Eq {
            // Sign convention for equalities: first nonzero coefficient
            // positive, so opposite spellings collide in the dedup below.
            if let Some(first) = con.expr.coeffs.iter().find(|c| !c.is_zero()) {
                if first.is_negative() {
                    let m = -Rat::one();
                    con.expr.coeffs.iter_mut().for_each(|c| *c *= &m);
                    con.expr.constant = con.expr.constant.scale(&m);
                }
            }
        }
    }

    let mut kept: Vec<LinCon<T>> = Vec::with_capacity(cons.len());
    // Strongest inequality per direction: larger constant is weaker
    // (a.x >= -c), so keep the smallest constant, strict winning ties.
    let mut best: HashMap<Vec<BigInt>, usize> = HashMap::new();
    for con in cons.drain(..) {
        if con.is_terminal() {
            if !con.terminal_holds() {
                return false;
            }
            continue;
        }
        if con.rel == Rel::Eq {
            let duplicate = kept.iter().any(|k: &LinCon<T>| {
                k.rel == Rel::Eq
                    && k.expr.coeffs == con.expr.coeffs
                    && k.expr.constant.cmp_to(&con.expr.constant) == Ordering::Equal
            });
            if !duplicate {
                kept.push(con);
            }
            continue;
        }
        let dir: Vec<BigInt> = con
            .expr
            .coeffs
            .iter()
            .map(|c| {
                debug_assert!(c.denom().is_one());
                c.numer().clone()
            })
            .collect();
        match best.get(&dir) {
            None => {
                best.insert(dir, kept.len());
                kept.push(con);
            }
            Some(&idx) => {
                let old = &kept[idx];
                let ord = con.expr.constant.cmp_to(&old.expr.constant);
                let stronger = match ord {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => con.rel == Rel::Gt && old.rel == Rel::Ge,
                };
                if stronger {
                    kept[idx] = con;
                }
            }
        }
    }
    *cons = kept;
    true
}

/// Decides feasibility of `cons` over `nvars` variables valued in `T`;
/// returns a witness assignment when feasible. `zero` supplies the shape of
/// the group zero for variables no constraint mentions.
pub(crate) fn feasible<T: Space>(cons: &[LinCon<T>], nvars: usize, zero: &T) -> Option<Vec<T>> {
    let mut active: Vec<LinCon<T>> = cons.to_vec();
    debug_assert!(active.iter().all(|c| c.expr.coeffs.len() == nvars));
    if !prune(&mut active) {
        return None;
    }

    let mut steps: Vec<Step<T>> = Vec::with_capacity(nvars);
    for var in (0..nvars).rev() {
        let eq_idx = active
            .iter()
            .position(|c| c.rel == Rel::Eq && !c.expr.coeffs[var].is_zero());
        if let Some(idx) = eq_idx {
            let eq = active.swap_remove(idx);
            let c = eq.expr.coeffs[var].clone();
            // x_var = -(rest)/c
            let mut solved = LinExpr {
                coeffs: eq.expr.coeffs.iter().map(|a| a / &-c.clone()).collect(),
                constant: eq.expr.constant.scale(&(-c.clone()).recip()),
            };
            solved.coeffs[var] = Rat::zero();
            for con in active.iter_mut() {
                let factor = con.expr.coeffs[var].clone();
                if factor.is_zero() {
                    continue;
                }
                let mut rewritten = con.expr.add_scaled(&solved, &factor);
                rewritten.coeffs[var] = Rat::zero();
                // add_scaled added factor * solved, and solved has zero at
                // var, so the var coefficient must be cleared explicitly.
                con.expr = rewritten;
            }
            steps.push(Step::Subst { var, expr: solved });
        } else {
            let mut lowers: Vec<(LinExpr<T>, bool)> = Vec::new();
            let mut uppers: Vec<(LinExpr<T>, bool)> = Vec::new();
            let mut rest: Vec<LinCon<T>> = Vec::new();
            for con in active.drain(..) {
                let c = con.expr.coeffs[var].clone();
                if c.is_zero() {
                    rest.push(con);
                    continue;
                }
                // c*x + R >= 0  <=>  x >= -R/c (c > 0) or x <= -R/c (c < 0).
                let mut bound = LinExpr {
                    coeffs: con.expr.coeffs.iter().map(|a| a / &-c.clone()).collect(),
                    constant: con.expr.constant.scale(&(-c.clone()).recip()),
                };
                bound.coeffs[var] = Rat::zero();
                let strict = con.rel == Rel::Gt;
                if c.is_positive() {
                    lowers.push((bound, strict));
                } else {
                    uppers.push((bound, strict));
                }
            }
            for (lo, s_lo) in &lowers {
                for (up, s_up) in &uppers {
                    // lo <= x <= up forces up - lo >= 0.
                    let expr = up.add_scaled(lo, &-Rat::one());
                    let rel = if *s_lo || *s_up { Rel::Gt } else { Rel::Ge };
                    rest.push(LinCon { expr, rel });
                }
            }
            active = rest;
            steps.push(Step::Bounds { var, lowers, uppers });
        }
        if !prune(&mut active) {
            return None;
        }
    }
    debug_assert!(active.is_empty());

    let mut values: Vec<Option<T>> = vec![None; nvars];
    for step in steps.iter().rev() {
        match step {
            Step::Subst { var, expr } => {
                values[*var] = Some(expr.eval(&values));
            }
            Step::Bounds { var, lowers, uppers } => {
                let lo = extremum(lowers, &values, Ordering::Greater);
                let up = extremum(uppers, &values, Ordering::Less);
                let value = match (lo, up) {
                    (None, None) => zero.clone(),
                    (Some((lo, strict)), None) => {
                        if strict {
                            lo.add(&lo.nudge())
                        } else {
                            lo
                        }
                    }
                    (None, Some((up, strict))) => {
                        if strict {
                            up.sub(&up.nudge())
                        } else {
                            up
                        }
                    }
                    (Some((lo, lo_strict)), Some((up, _))) => match lo.cmp_to(&up) {
                        Ordering::Less => {
                            if lo_strict {
                                lo.midpoint(&up)
                            } else {
                                lo
                            }
                        }
                        // Equal bounds are closed on both sides here, or the
                        // combined constraint would have failed already.
                        _ => lo,
                    },
                };
                values[*var] = Some(value);
            }
        }
    }
    Some(values.into_iter().map(|v| v.expect("every variable stepped")).collect())
}

/// Projects the system onto the variables not listed in `drop` by
/// eliminating the listed ones (equality substitution when available,
/// bound combination otherwise). Returns `None` when infeasibility is
/// detected; otherwise the surviving constraints, still indexed over all
/// `nvars` variables with zero coefficients at the dropped positions.
/// The satisfiable assignments of the result are exactly the projections
/// of the satisfiable assignments of the input.
pub(crate) fn eliminate<T: Space>(
    cons: &[LinCon<T>],
    nvars: usize,
    drop: &[usize],
) -> Option<Vec<LinCon<T>>> {
    let mut active: Vec<LinCon<T>> = cons.to_vec();
    debug_assert!(active.iter().all(|c| c.expr.coeffs.len() == nvars));
    if !prune(&mut active) {
        return None;
    }
    for &var in drop {
        let eq_idx = active
            .iter()
            .position(|c| c.rel == Rel::Eq && !c.expr.coeffs[var].is_zero());
        if let Some(idx) = eq_idx {
            let eq = active.swap_remove(idx);
            let c = eq.expr.coeffs[var].clone();
            let mut solved = LinExpr {
                coeffs: eq.expr.coeffs.iter().map(|a| a / &-c.clone()).collect(),
                constant: eq.expr.constant.scale(&(-c.clone()).recip()),
            };
            solved.coeffs[var] = Rat::zero();
            for con in active.iter_mut() {
                let factor = con.expr.coeffs[var].clone();
                if factor.is_zero() {
                    continue;
                }
                let mut rewritten = con.expr.add_scaled(&solved, &factor);
                rewritten.coeffs[var] = Rat::zero();
                con.expr = rewritten;
            }
        } else {
            let mut lowers: Vec<(LinExpr<T>, bool)> = Vec::new();
            let mut uppers: Vec<(LinExpr<T>, bool)> = Vec::new();
            let mut rest: Vec<LinCon<T>> = Vec::new();
            for con in active.drain(..) {
                let c = con.expr.coeffs[var].clone();
                if c.is_zero() {
                    rest.push(con);
                    continue;
                }
                let mut bound = LinExpr {
                    coeffs: con.expr.coeffs.iter().map(|a| a / &-c.clone()).collect(),
                    constant: con.expr.constant.scale(&(-c.clone()).recip()),
                };
                bound.coeffs[var] = Rat::zero();
                let strict = con.rel == Rel::Gt;
                if c.is_positive() {
                    lowers.push((bound, strict));
                } else {
                    uppers.push((bound, strict));
                }
            }
            for (lo, s_lo) in &lowers {
                for (up, s_up) in &uppers {
                    let expr = up.add_scaled(lo, &-Rat::one());
                    let rel = if *s_lo || *s_up { Rel::Gt } else { Rel::Ge };
                    rest.push(LinCon { expr, rel });
                }
            }
            active = rest;
        }
        if !prune(&mut active) {
            return None;
        }
    }
    Some(active)
}

/// Max (resp. min) of evaluated bounds, tagged strict when any bound
/// attaining it is strict.
fn extremum<T: Space>(
    bounds: &[(LinExpr<T>, bool)],
    values: &[Option<T>],
    keep: Ordering,
) -> Option<(T, bool)> {
    let mut best: Option<(T, bool)> = None;
    for (expr, strict) in bounds {
        let v = expr.eval(values);
        best = Some(match best {
            None => (v, *strict),
            Some((bv, bs)) => match v.cmp_to(&bv) {
                o if o == keep => (v, *strict),
                Ordering::Equal => (bv, bs || *strict),
                _ => (bv, bs),
            },
        });
    }
    best
}
