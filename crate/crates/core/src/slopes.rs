//! Slopes on a boundary torus and the arithmetic used to compare them.
//!
//! A slope `p/q` stands for the primitive class `p·μ + q·λ` up to sign, in a
//! fixed meridian/longitude basis. The canonical representative has `q > 0`,
//! except for the meridian `∞ = 1/0`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A reduced slope `num/den`, with `den > 0` or `(num, den) = (1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i64,
    den: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { num: 1, den: 0 };

    /// Reduces `(p, q)` to canonical form. The sign ends up on the numerator.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroSlope);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope { num: p, den: q })
    }

    pub const fn integer(n: i64) -> Self {
        Slope { num: n, den: 1 }
    }

    pub const fn num(&self) -> i64 {
        self.num
    }

    pub const fn den(&self) -> i64 {
        self.den
    }

    pub const fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub const fn is_integral(&self) -> bool {
        self.den == 1
    }
}

/// Parses `"p/q"`, a bare integer `"p"`, or `"inf"`.
impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Slope::INFINITY);
        }
        let bad = || Error::SlopeSyntax(s.to_string());
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                (p, q)
            }
            None => (t.parse().map_err(|_| bad())?, 1),
        };
        Slope::new(p, q)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Numeric order on `Q ∪ {∞}`, with `∞` above every rational.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let l = self.num as i128 * other.den as i128;
                let r = other.num as i128 * self.den as i128;
                l.cmp(&r)
            }
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `-(p/q) = -p/q`; `∞` is its own negative.
impl std::ops::Neg for Slope {
    type Output = Slope;

    fn neg(self) -> Slope {
        if self.is_infinite() {
            self
        } else {
            Slope {
                num: -self.num,
                den: self.den,
            }
        }
    }
}

/// Minimal geometric intersection number `|p·q' − q·p'|`.
pub fn distance(a: Slope, b: Slope) -> u64 {
    let d = a.num as i128 * b.den as i128 - a.den as i128 * b.num as i128;
    d.unsigned_abs() as u64
}

/// A candidate truly cosmetic pair `(p/q, −p/q)` with `p, q > 0`.
pub type SlopePair = (Slope, Slope);

/// All pairs `(p/q, −p/q)` with `p, q > 0` coprime and `Δ = 2pq ≤ max_delta`.
///
/// Pairs with `r ≠ −s` are outside the contract: they are already ruled out
/// for knots in `S³` before this enumeration is consulted.
pub fn enumerate_candidate_pairs(max_delta: u64) -> BTreeSet<SlopePair> {
    let mut out = BTreeSet::new();
    let mut p: u64 = 1;
    while 2 * p <= max_delta {
        let mut q: u64 = 1;
        while 2 * p * q <= max_delta {
            if p.gcd(&q) == 1 {
                let s = Slope {
                    num: p as i64,
                    den: q as i64,
                };
                out.insert((s, -s));
            }
            q += 1;
        }
        p += 1;
    }
    out
}

/// Orders pairs the way they are usually tabulated: largest positive slope first.
pub fn tabulated(pairs: &BTreeSet<SlopePair>) -> Vec<SlopePair> {
    pairs.iter().rev().copied().collect()
}

/// `q² ≡ −1 (mod p)` for the slope `p/q`.
pub fn niwu_congruence(s: Slope) -> Result<bool> {
    let p = s.num;
    if p <= 0 {
        return Err(Error::NonPositiveModulus(p));
    }
    let (p, q) = (p as i128, s.den as i128);
    Ok((q * q + 1).rem_euclid(p) == 0)
}

fn check_coprime(p: i64, q: i64) -> Result<()> {
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    Ok(())
}

/// Whether the meridian self-linkings `−q/p` and `−q2/p` can be matched by an
/// isomorphism of `Z/p`, i.e. `q ≡ q2·u² (mod p)` for some unit `u`.
///
/// Exhaustive over the units of `Z/p`.
pub fn linking_form_compatible(p: i64, q: i64, q2: i64) -> Result<bool> {
    if p <= 0 {
        return Err(Error::NonPositiveModulus(p));
    }
    check_coprime(p, q)?;
    check_coprime(p, q2)?;
    if p == 1 {
        return Ok(true);
    }
    Ok(unit_witness(p, q, q2).is_some())
}

/// Smallest unit `u` of `Z/p` with `q ≡ q2·u² (mod p)`, if any.
pub fn unit_witness(p: i64, q: i64, q2: i64) -> Option<i64> {
    (1..p.max(2)).filter(|u| u.gcd(&p) == 1).find(|&u| {
        let (p, q, q2, u) = (p as i128, q as i128, q2 as i128, u as i128);
        (q - q2 * u * u).rem_euclid(p) == 0
    })
}

/// Case labels for a pair of homeomorphic exceptional fillings `p/q`, `p/q'`
/// of a one-cusped exterior with `b₁ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairCase {
    /// `p = 1` and `|q − q'| ≤ 8`.
    A,
    /// `p ∈ {5, 7}` and `q' = q + 1`.
    B,
    /// `p ∈ {3, 4}` and `q' ∈ {q + 1, q + 2}`.
    C,
    /// `p = 2` and `q' ∈ {q + 2, q + 4}`.
    D,
    /// Cyclic or reducible fillings: only `p = 1`, `q' = q + 1` is possible.
    CyclicOrReducible,
    /// `Δ = p·|q' − q|` exceeds the bound for this kind of filling.
    ViolatesDistance { distance: u64, bound: u64 },
}

impl fmt::Display for PairCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairCase::A => write!(f, "case (a): p = 1, |q - q'| <= 8"),
            PairCase::B => write!(f, "case (b): p in {{5, 7}}, q' = q + 1"),
            PairCase::C => write!(f, "case (c): p in {{3, 4}}, q' in {{q + 1, q + 2}}"),
            PairCase::D => write!(f, "case (d): p = 2, q' in {{q + 2, q + 4}}"),
            PairCase::CyclicOrReducible => write!(f, "cyclic/reducible: forces p = 1, q' = q + 1"),
            PairCase::ViolatesDistance { distance, bound } => {
                write!(f, "violates distance bound: {distance} > {bound}")
            }
        }
    }
}

/// Sorts `(p/q, p/q')` into the case analysis for cosmetic exceptional pairs.
///
/// With `cyclic_or_reducible` set the distance bound drops from 8 to 1.
pub fn classify_exceptional_pair(
    p: i64,
    q: i64,
    q2: i64,
    cyclic_or_reducible: bool,
) -> Result<PairCase> {
    if p <= 0 {
        return Err(Error::NonPositiveModulus(p));
    }
    if q >= q2 {
        return Err(Error::Constraint(format!(
            "need q < q', got q = {q}, q' = {q2}"
        )));
    }
    check_coprime(p, q)?;
    check_coprime(p, q2)?;
    let gap = (q2 as i128 - q as i128) as u64;
    let distance = p as u64 * gap;
    let bound = if cyclic_or_reducible { 1 } else { 8 };
    if distance > bound {
        return Ok(PairCase::ViolatesDistance { distance, bound });
    }
    if cyclic_or_reducible {
        return Ok(PairCase::CyclicOrReducible);
    }
    // distance ≤ 8 plus coprimality leaves exactly these shapes
    Ok(match p {
        1 => PairCase::A,
        5 | 7 => PairCase::B,
        3 | 4 => PairCase::C,
        2 => PairCase::D,
        _ => unreachable!("p = {p} with q' - q = {gap} cannot be coprime to both"),
    })
}
