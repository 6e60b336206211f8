use std::collections::BTreeSet;
use std::fmt;

use super::TableRow;
use crate::alexander::{second_derivative_at_one, twist_knot_polynomial};
use crate::citations;
use crate::error::{Error, Result};
use crate::slopes::Slope;

/// Hyperbolic alternating knots that admit exceptional surgeries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlternatingKnot {
    /// Twist knot `K[2n, ±2]`, `n ≠ 0`; `clasp` is `+2` or `−2`.
    Twist { n: i64, clasp: i64 },
    /// Two-bridge knot `K[a, b]`, `|a|, |b| > 2`.
    TwoBridge { a: i64, b: i64 },
    /// Pretzel knot `P(a, b, c)`, no parameter in `{0, ±1}`.
    Pretzel { a: i64, b: i64, c: i64 },
}

impl fmt::Display for AlternatingKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AlternatingKnot::Twist { n, clasp } => write!(f, "K[{}, {clasp}]", 2 * n),
            AlternatingKnot::TwoBridge { a, b } => write!(f, "K[{a}, {b}]"),
            AlternatingKnot::Pretzel { a, b, c } => write!(f, "P({a}, {b}, {c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlternatingVerdict {
    /// Twist knots: `Δ''(1) = −2n ≠ 0`.
    ExcludedByAlexander { second_derivative: i64 },
    /// Every exceptional slope is toroidal and none is `±1`.
    AvoidsPlusMinusOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingSlopes {
    pub knot: AlternatingKnot,
    pub slopes: BTreeSet<Slope>,
    pub verdict: AlternatingVerdict,
}

fn even(x: i64) -> bool {
    x % 2 == 0
}

/// Exceptional slopes of a hyperbolic alternating knot per the classification.
///
/// Twist knots are settled by their Alexander polynomial and carry no slope
/// list. Two-bridge knots are taken with `a` odd or both even; `K[even, odd]`
/// should be passed in the reversed order.
pub fn alternating_exceptional_slopes(knot: AlternatingKnot) -> Result<AlternatingSlopes> {
    let fail = |msg: String| Err(Error::Constraint(format!("{knot}: {msg}")));
    let (slopes, verdict) = match knot {
        AlternatingKnot::Twist { n, clasp } => {
            if clasp.abs() != 2 {
                return fail("clasp must be +2 or -2".into());
            }
            let poly = twist_knot_polynomial(n)?;
            let second_derivative = second_derivative_at_one(&poly);
            (
                BTreeSet::new(),
                AlternatingVerdict::ExcludedByAlexander { second_derivative },
            )
        }
        AlternatingKnot::TwoBridge { a, b } => {
            if a.abs() <= 2 || b.abs() <= 2 {
                return fail("need |a|, |b| > 2".into());
            }
            let r = match (even(a), even(b)) {
                (true, true) => 0,
                (false, true) => 2 * b,
                (false, false) => return fail("a and b both odd give a two-component link".into()),
                (true, false) => return fail("a even, b odd: list as K[b, a]".into()),
            };
            (
                BTreeSet::from([Slope::integer(r)]),
                AlternatingVerdict::AvoidsPlusMinusOne,
            )
        }
        AlternatingKnot::Pretzel { a, b, c } => {
            if [a, b, c].iter().any(|x| x.abs() <= 1) {
                return fail("parameters must avoid 0 and +-1".into());
            }
            let evens = [a, b, c].iter().filter(|&&x| even(x)).count();
            let r = match evens {
                0 => 0,
                // P(a, b, c) is invariant under cyclic rotation; move the even entry first
                1 => {
                    let (b, c) = if even(a) {
                        (b, c)
                    } else if even(b) {
                        (c, a)
                    } else {
                        (a, b)
                    };
                    2 * (b + c)
                }
                _ => return fail("two or more even parameters give a link".into()),
            };
            (
                BTreeSet::from([Slope::integer(r)]),
                AlternatingVerdict::AvoidsPlusMinusOne,
            )
        }
    };
    Ok(AlternatingSlopes {
        knot,
        slopes,
        verdict,
    })
}

pub(super) fn rows() -> Vec<TableRow> {
    let c = citations::ICHIHARA_MASAI;
    vec![
        TableRow::new(
            "alternating/twist",
            c,
            "K[2n, +-2], n != 0",
            "excluded: Delta''(1) = -2n != 0",
        ),
        TableRow::new(
            "alternating/two-bridge-even-even",
            c,
            "K[a, b], |a|, |b| > 2, a and b even",
            "r = 0",
        ),
        TableRow::new(
            "alternating/two-bridge-odd-even",
            c,
            "K[a, b], |a|, |b| > 2, a odd, b even",
            "r = 2b",
        ),
        TableRow::new(
            "alternating/pretzel-odd",
            c,
            "P(a, b, c), a, b, c not in {0, +-1}, all odd",
            "r = 0",
        ),
        TableRow::new(
            "alternating/pretzel-even",
            c,
            "P(a, b, c), a, b, c not in {0, +-1}, a even, b and c odd",
            "r = 2(b + c)",
        ),
    ]
}
