//! Toroidal surgeries on Montesinos knots of length 3.
//!
//! Each list entry describes a family `K(t₁, t₂, t₃)` and its toroidal slope.
//! A knot may appear in several entries (possibly mirrored), so the toroidal
//! slopes of a concrete knot are collected by matching it against every entry
//! up to isotopy of Montesinos knots: the tangles may be permuted, integers
//! moved between them, and the mirror image negates both tangles and slopes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

use super::TableRow;
use crate::citations;
use crate::error::{Error, Result};
use crate::slopes::Slope;

type Q = Ratio<i64>;

/// `K(t₁, t₂, t₃)` with rational tangles `tᵢ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MontesinosKnot {
    pub tangles: [Q; 3],
}

impl MontesinosKnot {
    pub fn new(tangles: [Q; 3]) -> Result<Self> {
        for t in tangles {
            if t.is_integer() {
                return Err(Error::Constraint(format!(
                    "tangle {t} is integral; the knot is not length 3"
                )));
            }
        }
        Ok(MontesinosKnot { tangles })
    }

    pub fn mirror(&self) -> Self {
        MontesinosKnot {
            tangles: self.tangles.map(|t| -t),
        }
    }

    /// Sorted fractional parts and the total integer part. Two length-3
    /// Montesinos knots are isotopic iff these agree.
    fn invariant(&self) -> ([Q; 3], i64) {
        let mut e = 0;
        let mut fracs = self.tangles.map(|t| {
            let fl = t.floor();
            e += fl.to_integer();
            t - fl
        });
        fracs.sort();
        (fracs, e)
    }

    pub fn is_isotopic(&self, other: &MontesinosKnot) -> bool {
        self.invariant() == other.invariant()
    }

    fn denominators(&self) -> BTreeSet<i64> {
        self.tangles.iter().map(|t| *t.denom()).collect()
    }

    fn fractional_parts(&self) -> [Q; 3] {
        self.tangles.map(|t| t - t.floor())
    }
}

impl fmt::Display for MontesinosKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.tangles;
        write!(f, "K({a}, {b}, {c})")
    }
}

/// Parses `K(t1, t2, t3)` or a bare `t1, t2, t3`.
impl FromStr for MontesinosKnot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Constraint(format!(
                "cannot parse Montesinos knot {s:?}; expected K(t1, t2, t3)"
            ))
        };
        let mut body = s.trim();
        if let Some(rest) = body.strip_prefix('K').or_else(|| body.strip_prefix('k')) {
            body = rest.trim();
        }
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let parts: Vec<Q> = body
            .split(',')
            .map(|p| {
                let p = p.trim();
                match p.split_once('/') {
                    Some((n, d)) => {
                        let n: i64 = n.trim().parse().map_err(|_| bad())?;
                        let d: i64 = d.trim().parse().map_err(|_| bad())?;
                        if d == 0 {
                            return Err(bad());
                        }
                        Ok(Q::new(n, d))
                    }
                    None => p.parse::<i64>().map(Q::from_integer).map_err(|_| bad()),
                }
            })
            .collect::<Result<_>>()?;
        let tangles: [Q; 3] = parts.try_into().map_err(|_| bad())?;
        MontesinosKnot::new(tangles)
    }
}

#[derive(Debug, Clone, Copy)]
enum Tangle {
    Fixed(i64, i64),
    /// `1/q_k`, the k-th entry of a three-integer parameter.
    Unit(usize),
    /// `sign / (base + 1/n)`.
    Twisted {
        sign: i64,
        base: i64,
    },
}

impl Tangle {
    fn eval(self, params: &Params) -> Q {
        match (self, params) {
            (Tangle::Fixed(p, q), _) => Q::new(p, q),
            (Tangle::Unit(k), Params::Q(q)) => Q::new(1, q[k]),
            (Tangle::Twisted { sign, base }, Params::N(n)) => Q::new(sign * n, base * n + 1),
            _ => unreachable!("parameter shape checked by the caller"),
        }
    }

    fn describe(self) -> String {
        match self {
            Tangle::Fixed(p, q) => format!("{}", Q::new(p, q)),
            Tangle::Unit(k) => format!("1/q{}", k + 1),
            Tangle::Twisted { sign, base } => {
                format!("{}1/({base}+1/n)", if sign < 0 { "-" } else { "" })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Params {
    None,
    N(i64),
    Q([i64; 3]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ParamKind {
    None,
    N,
    Q,
}

/// One item of the Montesinos toroidal-surgery list.
pub struct MontesinosEntry {
    pub id: &'static str,
    pub constraint: &'static str,
    pub formula: &'static str,
    tangles: [Tangle; 3],
    kind: ParamKind,
    admissible: fn(&[i64]) -> bool,
    slope: fn(&[i64]) -> Slope,
}

impl fmt::Debug for MontesinosEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MontesinosEntry")
            .field("id", &self.id)
            .finish_non_exhaustive()
    }
}

fn odd(x: i64) -> bool {
    x.is_odd()
}

fn int(n: i64) -> Slope {
    Slope::integer(n)
}

fn no_params(p: &[i64]) -> bool {
    p.is_empty()
}

static ENTRIES: [MontesinosEntry; 13] = [
    MontesinosEntry {
        id: "montesinos/1",
        constraint: "q_i odd, |q_i| > 1",
        formula: "delta = 0",
        tangles: [Tangle::Unit(0), Tangle::Unit(1), Tangle::Unit(2)],
        kind: ParamKind::Q,
        admissible: |q| q.iter().all(|&x| odd(x) && x.abs() > 1),
        slope: |_| int(0),
    },
    MontesinosEntry {
        id: "montesinos/2",
        constraint: "q_1 even, q_2 and q_3 odd, |q_i| > 1",
        formula: "delta = 2(q_2 + q_3)",
        tangles: [Tangle::Unit(0), Tangle::Unit(1), Tangle::Unit(2)],
        kind: ParamKind::Q,
        admissible: |q| q[0].is_even() && odd(q[1]) && odd(q[2]) && q.iter().all(|x| x.abs() > 1),
        slope: |q| int(2 * (q[1] + q[2])),
    },
    MontesinosEntry {
        id: "montesinos/3",
        constraint: "n != 0, -1",
        formula: "delta = 16 if n odd, 0 if n even",
        tangles: [
            Tangle::Fixed(-1, 2),
            Tangle::Fixed(1, 3),
            Tangle::Twisted { sign: 1, base: 6 },
        ],
        kind: ParamKind::N,
        admissible: |n| n[0] != 0 && n[0] != -1,
        slope: |n| int(if odd(n[0]) { 16 } else { 0 }),
    },
    MontesinosEntry {
        id: "montesinos/4",
        constraint: "n != 0, -1",
        formula: "delta = -12 if n odd, 4 if n even",
        tangles: [
            Tangle::Fixed(-1, 3),
            Tangle::Twisted { sign: -1, base: 3 },
            Tangle::Fixed(2, 3),
        ],
        kind: ParamKind::N,
        admissible: |n| n[0] != 0 && n[0] != -1,
        slope: |n| int(if odd(n[0]) { -12 } else { 4 }),
    },
    MontesinosEntry {
        id: "montesinos/5",
        constraint: "n even, n != 0",
        formula: "delta = 5 - 2n",
        tangles: [
            Tangle::Fixed(-1, 2),
            Tangle::Fixed(1, 5),
            Tangle::Twisted { sign: 1, base: 3 },
        ],
        kind: ParamKind::N,
        admissible: |n| n[0].is_even() && n[0] != 0,
        slope: |n| int(5 - 2 * n[0]),
    },
    MontesinosEntry {
        id: "montesinos/6",
        constraint: "n even, n != 0",
        formula: "delta = 1 - 2n",
        tangles: [
            Tangle::Fixed(-1, 2),
            Tangle::Fixed(1, 3),
            Tangle::Twisted { sign: 1, base: 5 },
        ],
        kind: ParamKind::N,
        admissible: |n| n[0].is_even() && n[0] != 0,
        slope: |n| int(1 - 2 * n[0]),
    },
    MontesinosEntry {
        id: "montesinos/7",
        constraint: "n odd, n != -1",
        formula: "delta = 2n",
        tangles: [
            Tangle::Twisted { sign: -1, base: 2 },
            Tangle::Fixed(1, 3),
            Tangle::Fixed(1, 3),
        ],
        kind: ParamKind::N,
        admissible: |n| odd(n[0]) && n[0] != -1,
        slope: |n| int(2 * n[0]),
    },
    MontesinosEntry {
        id: "montesinos/8",
        constraint: "n even, n != 0",
        formula: "delta = 2 - 2n",
        tangles: [
            Tangle::Fixed(-1, 2),
            Tangle::Fixed(1, 3),
            Tangle::Twisted { sign: 1, base: 3 },
        ],
        kind: ParamKind::N,
        admissible: |n| n[0].is_even() && n[0] != 0,
        slope: |n| int(2 - 2 * n[0]),
    },
    MontesinosEntry {
        id: "montesinos/9",
        constraint: "none",
        formula: "delta = 15",
        tangles: [
            Tangle::Fixed(-1, 2),
            Tangle::Fixed(2, 5),
            Tangle::Fixed(1, 9),
        ],
        kind: ParamKind::None,
        admissible: no_params,
        slope: |_| int(15),
    },
    MontesinosEntry {
        id: "montesinos/10",
        constraint: "none",
        formula: "delta = 12",
        tangles: [
            Tangle::Fixed(-1, 2),
            Tangle::Fixed(2, 5),
            Tangle::Fixed(1, 7),
        ],
        kind: ParamKind::None,
        admissible: no_params,
        slope: |_| int(12),
    },
    MontesinosEntry {
        id: "montesinos/11",
        constraint: "none",
        formula: "delta = 37/2",
        tangles: [
            Tangle::Fixed(-1, 2),
            Tangle::Fixed(1, 3),
            Tangle::Fixed(1, 7),
        ],
        kind: ParamKind::None,
        admissible: no_params,
        slope: |_| Slope::new(37, 2).expect("nonzero"),
    },
    MontesinosEntry {
        id: "montesinos/12",
        constraint: "none",
        formula: "delta = 13",
        tangles: [
            Tangle::Fixed(-2, 3),
            Tangle::Fixed(1, 3),
            Tangle::Fixed(1, 4),
        ],
        kind: ParamKind::None,
        admissible: no_params,
        slope: |_| int(13),
    },
    MontesinosEntry {
        id: "montesinos/13",
        constraint: "none",
        formula: "delta = 1",
        tangles: [
            Tangle::Fixed(-1, 3),
            Tangle::Fixed(1, 3),
            Tangle::Fixed(1, 7),
        ],
        kind: ParamKind::None,
        admissible: no_params,
        slope: |_| int(1),
    },
];

/// `(row id, tangles as (p, q), listed slopes as (p, q))`.
pub type MultiSlopeKnot = (&'static str, [(i64, i64); 3], &'static [(i64, i64)]);

/// Knots with more than one toroidal slope and the slopes the classification
/// names for them. For `K(−1/2, 1/3, 1/7)` only `37/2` is named; its other two
/// slopes come out of [`toroidal_slopes`].
pub static MULTI_SLOPE_KNOTS: [MultiSlopeKnot; 6] = [
    (
        "montesinos-multi/1",
        [(-1, 2), (1, 3), (2, 11)],
        &[(0, 1), (-3, 1)],
    ),
    (
        "montesinos-multi/2",
        [(-1, 3), (1, 3), (1, 3)],
        &[(0, 1), (2, 1)],
    ),
    (
        "montesinos-multi/3",
        [(-1, 3), (1, 3), (1, 7)],
        &[(0, 1), (1, 1)],
    ),
    (
        "montesinos-multi/4",
        [(-2, 3), (1, 3), (1, 4)],
        &[(12, 1), (13, 1)],
    ),
    (
        "montesinos-multi/5",
        [(-1, 3), (-2, 5), (2, 3)],
        &[(4, 1), (6, 1)],
    ),
    ("montesinos-multi/6", [(-1, 2), (1, 3), (1, 7)], &[(37, 2)]),
];

impl MontesinosEntry {
    fn params(&self, raw: &[i64]) -> Result<Params> {
        let shape = match (self.kind, raw) {
            (ParamKind::None, []) => Params::None,
            (ParamKind::N, &[n]) => Params::N(n),
            (ParamKind::Q, &[a, b, c]) => Params::Q([a, b, c]),
            (kind, _) => {
                let want = match kind {
                    ParamKind::None => "no parameters",
                    ParamKind::N => "one parameter n",
                    ParamKind::Q => "three parameters q1 q2 q3",
                };
                return Err(Error::Constraint(format!("{} takes {want}", self.id)));
            }
        };
        if !(self.admissible)(raw) {
            return Err(Error::Constraint(format!(
                "{}: parameters {raw:?} violate {}",
                self.id, self.constraint
            )));
        }
        Ok(shape)
    }

    /// The knot at the given parameters.
    pub fn knot(&self, raw: &[i64]) -> Result<MontesinosKnot> {
        let params = self.params(raw)?;
        MontesinosKnot::new(self.tangles.map(|t| t.eval(&params)))
    }

    /// The toroidal slope this entry records at the given parameters.
    pub fn slope(&self, raw: &[i64]) -> Result<Slope> {
        self.params(raw)?;
        Ok((self.slope)(raw))
    }

    pub fn knot_pattern(&self) -> String {
        let [a, b, c] = self.tangles.map(Tangle::describe);
        format!("K({a}, {b}, {c})")
    }

    /// Parameter values under which this entry could describe `target`.
    fn candidates(&self, target: &MontesinosKnot) -> Vec<Vec<i64>> {
        match self.kind {
            ParamKind::None => vec![vec![]],
            ParamKind::N => {
                // n/(base·n + 1) is reduced, so |base·n + 1| is a tangle denominator
                let base = self
                    .tangles
                    .iter()
                    .find_map(|t| match t {
                        Tangle::Twisted { base, .. } => Some(*base),
                        _ => None,
                    })
                    .expect("N-entries have a twisted tangle");
                let mut out = BTreeSet::new();
                for b in target.denominators() {
                    for shifted in [b - 1, -b - 1] {
                        if shifted % base == 0 {
                            out.insert(shifted / base);
                        }
                    }
                }
                out.into_iter().map(|n| vec![n]).collect()
            }
            ParamKind::Q => {
                // 1/q has fractional part 1/q for q > 0 and (|q| - 1)/|q| for q < 0
                let options = target.fractional_parts().map(|f| {
                    let (a, b) = (*f.numer(), *f.denom());
                    let mut qs = Vec::new();
                    if a == 1 {
                        qs.push(b);
                    }
                    if a == b - 1 {
                        qs.push(-b);
                    }
                    qs
                });
                let mut out = BTreeSet::new();
                for [i, j, k] in [
                    [0, 1, 2],
                    [0, 2, 1],
                    [1, 0, 2],
                    [1, 2, 0],
                    [2, 0, 1],
                    [2, 1, 0],
                ] {
                    for &a in &options[i] {
                        for &b in &options[j] {
                            for &c in &options[k] {
                                out.insert(vec![a, b, c]);
                            }
                        }
                    }
                }
                out.into_iter().collect()
            }
        }
    }
}

pub fn montesinos_entries() -> &'static [MontesinosEntry] {
    &ENTRIES
}

pub fn montesinos_entry(id: &str) -> Result<&'static MontesinosEntry> {
    let want = id.trim();
    ENTRIES
        .iter()
        .find(|e| e.id == want || e.id.rsplit('/').next() == Some(want))
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Every toroidal slope the list assigns to `knot` or to its mirror image
/// (with the slope negated).
pub fn toroidal_slopes(knot: &MontesinosKnot) -> BTreeSet<Slope> {
    let mut out = BTreeSet::new();
    for (target, mirrored) in [(*knot, false), (knot.mirror(), true)] {
        for entry in &ENTRIES {
            for raw in entry.candidates(&target) {
                let Ok(candidate) = entry.knot(&raw) else {
                    continue;
                };
                if candidate.is_isotopic(&target) {
                    let s = (entry.slope)(&raw);
                    out.insert(if mirrored { -s } else { s });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MontesinosSlopes {
    pub knot: MontesinosKnot,
    pub slopes: BTreeSet<Slope>,
}

impl MontesinosSlopes {
    pub fn count(&self) -> usize {
        self.slopes.len()
    }

    /// `"three toroidal surgeries"` and the like.
    pub fn multiplicity_label(&self) -> &'static str {
        match self.slopes.len() {
            0 => "no toroidal surgery",
            1 => "one toroidal surgery",
            2 => "two toroidal surgeries",
            3 => "three toroidal surgeries",
            _ => "more than three toroidal surgeries",
        }
    }
}

/// Toroidal slopes of the knot described by list entry `id` at `params`,
/// including those contributed by any other entry describing the same knot.
pub fn montesinos_toroidal_slopes(id: &str, params: &[i64]) -> Result<MontesinosSlopes> {
    let entry = montesinos_entry(id)?;
    let knot = entry.knot(params)?;
    let slopes = toroidal_slopes(&knot);
    debug_assert!(slopes.contains(&entry.slope(params)?));
    Ok(MontesinosSlopes { knot, slopes })
}

fn fmt_slopes(slopes: &[(i64, i64)]) -> String {
    slopes
        .iter()
        .map(|&(p, q)| {
            Slope::new(p, q)
                .expect("listed slopes are nonzero")
                .to_string()
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub(super) fn rows() -> Vec<TableRow> {
    let c = citations::WU_MONTESINOS;
    let mut rows: Vec<TableRow> = ENTRIES
        .iter()
        .map(|e| {
            TableRow::new(
                e.id,
                c,
                format!("{}; {}", e.knot_pattern(), e.constraint),
                e.formula,
            )
        })
        .collect();
    for (id, tangles, slopes) in &MULTI_SLOPE_KNOTS {
        let knot = MontesinosKnot {
            tangles: tangles.map(|(p, q)| Q::new(p, q)),
        };
        let label = if *id == "montesinos-multi/6" {
            "three toroidal surgeries"
        } else {
            "two toroidal surgeries"
        };
        let all: Vec<String> = toroidal_slopes(&knot)
            .iter()
            .map(Slope::to_string)
            .collect();
        rows.push(TableRow::new(
            *id,
            c,
            format!("{knot}; {label}"),
            format!(
                "listed delta in {{{}}}; all delta in {{{}}}",
                fmt_slopes(slopes),
                all.join(", ")
            ),
        ));
    }
    rows
}
