//! Classification data for exceptional and toroidal surgeries, compiled in as
//! lookup tables with the predicates the narrowing pipeline needs.

mod alternating;
mod montesinos;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Signed;

use crate::citations::{self, Citation};
use crate::error::{Error, Result};
use crate::homology::{h1_order, FramedLink};
use crate::slopes::Slope;

pub use alternating::{
    alternating_exceptional_slopes, AlternatingKnot, AlternatingSlopes, AlternatingVerdict,
};
pub use montesinos::{
    montesinos_entries, montesinos_entry, montesinos_toroidal_slopes, toroidal_slopes,
    MontesinosEntry, MontesinosKnot, MontesinosSlopes, MultiSlopeKnot, MULTI_SLOPE_KNOTS,
};

/// Version tag of the compiled-in tables; bump when a row changes.
pub const TABLES_VERSION: u32 = 1;

/// Filling types that appear in the exceptional-distance table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SurgeryType {
    Reducible,
    Cyclic,
    Finite,
    Toroidal,
    SmallSeifert,
}

impl SurgeryType {
    pub const ALL: [SurgeryType; 5] = [
        SurgeryType::Reducible,
        SurgeryType::Cyclic,
        SurgeryType::Finite,
        SurgeryType::Toroidal,
        SurgeryType::SmallSeifert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SurgeryType::Reducible => "reducible",
            SurgeryType::Cyclic => "cyclic",
            SurgeryType::Finite => "finite",
            SurgeryType::Toroidal => "toroidal",
            SurgeryType::SmallSeifert => "small-seifert",
        }
    }
}

impl fmt::Display for SurgeryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SurgeryType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        SurgeryType::ALL
            .into_iter()
            .find(|t| t.name() == norm || (norm == "seifert" && *t == SurgeryType::SmallSeifert))
            .ok_or_else(|| Error::UnknownEntry(s.to_string()))
    }
}

// upper triangle, row-major in SurgeryType::ALL order
const DISTANCE_TABLE: [[u64; 5]; 5] = [
    [1, 1, 1, 3, 4],
    [0, 1, 2, 8, 8],
    [0, 0, 3, 8, 8],
    [0, 0, 0, 8, 8],
    [0, 0, 0, 0, 8],
];

/// Maximal distance between two exceptional slopes of the given filling types.
pub fn distance_bound(a: SurgeryType, b: SurgeryType) -> u64 {
    let (i, j) = (a as usize, b as usize);
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    DISTANCE_TABLE[i][j]
}

/// Exceptional slopes of the figure-8 knot exterior.
pub const FIGURE8_EXCEPTIONAL: [Slope; 10] = [
    Slope::INFINITY,
    Slope::integer(0),
    Slope::integer(1),
    Slope::integer(-1),
    Slope::integer(2),
    Slope::integer(-2),
    Slope::integer(3),
    Slope::integer(-3),
    Slope::integer(4),
    Slope::integer(-4),
];

/// `constant + coeff·n`, a slope depending affinely on an integer parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineSlope {
    pub constant: Ratio<i64>,
    pub coeff: i64,
}

impl AffineSlope {
    pub const fn integral(constant: i64, coeff: i64) -> Self {
        AffineSlope {
            constant: Ratio::new_raw(constant, 1),
            coeff,
        }
    }

    pub fn eval(&self, n: i64) -> Result<Slope> {
        let v = self.constant + Ratio::from_integer(self.coeff) * n;
        Slope::new(*v.numer(), *v.denom())
    }

    /// All `n` (possibly non-integral) with `|self(n)| = |other(n)|`, or `None`
    /// when equality holds identically.
    pub fn abs_equal_roots(&self, other: &AffineSlope) -> Option<BTreeSet<Ratio<i64>>> {
        // |f| = |g|  ⇔  (f − g)(f + g) = 0, a product of two affine factors
        let factors = [
            (self.constant - other.constant, self.coeff - other.coeff),
            (self.constant + other.constant, self.coeff + other.coeff),
        ];
        let mut roots = BTreeSet::new();
        for (c, k) in factors {
            match (k, c == Ratio::from_integer(0)) {
                (0, true) => return None,
                (0, false) => {}
                (k, _) => {
                    roots.insert(-c / k);
                }
            }
        }
        Some(roots)
    }
}

impl fmt::Display for AffineSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = Ratio::from_integer(0);
        match (self.constant == zero, self.coeff) {
            (_, 0) => write!(f, "{}", self.constant),
            (true, k) => write!(f, "{k}n"),
            (false, k) if k < 0 => write!(f, "{} - {}n", self.constant, -k),
            (false, k) => write!(f, "{} + {}n", self.constant, k),
        }
    }
}

/// Hyperbolic knots with two toroidal slopes at distance at least 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ToroidalFamily {
    L1,
    L2,
    L3,
    Fig8,
}

impl ToroidalFamily {
    pub const ALL: [ToroidalFamily; 4] = [
        ToroidalFamily::L1,
        ToroidalFamily::L2,
        ToroidalFamily::L3,
        ToroidalFamily::Fig8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ToroidalFamily::L1 => "L1",
            ToroidalFamily::L2 => "L2",
            ToroidalFamily::L3 => "L3",
            ToroidalFamily::Fig8 => "Fig8",
        }
    }

    pub fn formulas(self) -> (AffineSlope, AffineSlope) {
        match self {
            ToroidalFamily::L1 => (AffineSlope::integral(0, 0), AffineSlope::integral(4, 0)),
            ToroidalFamily::L2 => (AffineSlope::integral(2, -9), AffineSlope::integral(-2, -9)),
            ToroidalFamily::L3 => (
                AffineSlope::integral(-9, -25),
                AffineSlope {
                    constant: Ratio::new_raw(-13, 2),
                    coeff: -25,
                },
            ),
            ToroidalFamily::Fig8 => (AffineSlope::integral(4, 0), AffineSlope::integral(-4, 0)),
        }
    }

    /// Parameter values excluded for the family. The figure-8 has no parameter.
    pub fn excluded(self) -> &'static [i64] {
        match self {
            ToroidalFamily::L1 => &[0, 1],
            ToroidalFamily::L2 => &[0, 1, -1],
            ToroidalFamily::L3 => &[0],
            ToroidalFamily::Fig8 => &[],
        }
    }

    pub fn constraint(self) -> String {
        match self.excluded() {
            [] => "none".into(),
            ex => format!(
                "n not in {{{}}}",
                ex.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}

impl fmt::Display for ToroidalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ToroidalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        ToroidalFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(t))
            .or_else(|| {
                ["figure8", "figure-8", "fig-8", "4_1"]
                    .contains(&t.to_ascii_lowercase().as_str())
                    .then_some(ToroidalFamily::Fig8)
            })
            .ok_or_else(|| Error::UnknownEntry(s.to_string()))
    }
}

/// The two toroidal slopes of `family` at parameter `n` (ignored for the figure-8).
pub fn gordon_wu_slopes(family: ToroidalFamily, n: i64) -> Result<(Slope, Slope)> {
    if family.excluded().contains(&n) {
        return Err(Error::Constraint(format!(
            "{family}(n) needs {}, got n = {n}",
            family.constraint()
        )));
    }
    let (r1, r2) = family.formulas();
    Ok((r1.eval(n)?, r2.eval(n)?))
}

/// `|H₁|` of the two distance-4 toroidal fillings differ for every `n ≠ 0`:
/// `|2 − 9n| ≠ |2 + 9n|` on `L2(n)` and `0 ≠ 4` on `L1(n)`.
pub fn h1_discriminates_distance4(n: i64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Constraint("n = 0 is excluded".into()));
    }
    let order = |s: Slope| h1_order(&FramedLink::knot(s));
    let (a, b) = ToroidalFamily::L2.formulas();
    let l2 = order(a.eval(n)?)? != order(b.eval(n)?)?;
    let (c, d) = ToroidalFamily::L1.formulas();
    let l1 = order(c.eval(n)?)? != order(d.eval(n)?)?;
    Ok(l2 && l1)
}

/// Symbolic form of [`h1_discriminates_distance4`]: the L2 orders agree only
/// at `n = 0`, and the L1 orders are constants that differ.
pub fn h1_discriminates_distance4_symbolic() -> bool {
    let (a, b) = ToroidalFamily::L2.formulas();
    let zero_only = a.abs_equal_roots(&b) == Some(BTreeSet::from([Ratio::from_integer(0)]));
    let (c, d) = ToroidalFamily::L1.formulas();
    let l1_constant = c.coeff == 0 && d.coeff == 0 && c.constant.abs() != d.constant.abs();
    zero_only && l1_constant
}

/// A toroidal slope on a hyperbolic knot has denominator at most 2.
pub fn toroidal_denominator_ok(s: Slope) -> bool {
    s.den().abs() <= 2
}

/// Whether a pair of half-integral toroidal slopes survives. It never does:
/// a non-integral toroidal slope is unique to its knot.
pub fn half_integral_unique_rule(pair: (Slope, Slope)) -> Result<bool> {
    if pair.0.den() != 2 || pair.1.den() != 2 {
        return Err(Error::Constraint(format!(
            "({}, {}) is not a pair of half-integral slopes",
            pair.0, pair.1
        )));
    }
    Ok(false)
}

/// `true` unless both `+1` and `−1` are present.
pub fn no_pm1_pair<'a>(slopes: impl IntoIterator<Item = &'a Slope>) -> bool {
    let mut plus = false;
    let mut minus = false;
    for s in slopes {
        plus |= *s == Slope::integer(1);
        minus |= *s == Slope::integer(-1);
    }
    !(plus && minus)
}

/// Opaque ids for the three type II arborescent knots with an exceptional slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeIIKnot {
    K1,
    K2,
    K3,
}

impl fmt::Display for TypeIIKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// `(K₁, 3), (K₂, 0), (K₃, −3)`, each slope toroidal.
pub fn arborescent_type_ii_slopes() -> [(TypeIIKnot, Slope); 3] {
    [
        (TypeIIKnot::K1, Slope::integer(3)),
        (TypeIIKnot::K2, Slope::integer(0)),
        (TypeIIKnot::K3, Slope::integer(-3)),
    ]
}

pub fn arborescent_type_ii_lookup(s: Slope) -> Option<TypeIIKnot> {
    arborescent_type_ii_slopes()
        .into_iter()
        .find(|&(_, t)| t == s)
        .map(|(k, _)| k)
}

/// One row of the table dump.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub id: String,
    pub citation: Citation,
    pub constraint: String,
    pub formula: String,
}

impl TableRow {
    fn new(
        id: impl Into<String>,
        citation: Citation,
        constraint: impl Into<String>,
        formula: impl Into<String>,
    ) -> Self {
        TableRow {
            id: id.into(),
            citation,
            constraint: constraint.into(),
            formula: formula.into(),
        }
    }

    /// `id \t citation \t constraint \t formula`.
    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.id, self.citation.key, self.constraint, self.formula
        )
    }
}

pub fn distance_rows() -> Vec<TableRow> {
    let mut rows = Vec::new();
    for (i, &a) in SurgeryType::ALL.iter().enumerate() {
        for &b in &SurgeryType::ALL[i..] {
            rows.push(TableRow::new(
                format!("distance/{a}/{b}"),
                citations::DISTANCE_TABLE,
                "exceptional slopes on a hyperbolic one-cusped manifold",
                format!("max distance {}", distance_bound(a, b)),
            ));
        }
    }
    rows
}

pub fn gordon_wu_rows() -> Vec<TableRow> {
    ToroidalFamily::ALL
        .iter()
        .map(|&f| {
            let (a, b) = f.formulas();
            TableRow::new(
                format!("gordon-wu/{f}"),
                citations::GORDON_WU,
                f.constraint(),
                format!("r1 = {a}; r2 = {b}"),
            )
        })
        .collect()
}

/// Every compiled-in table, one row per list item.
pub fn dump() -> Vec<TableRow> {
    let mut rows = distance_rows();
    rows.push(TableRow::new(
        "exceptional/figure-8",
        citations::FIGURE8_EXCEPTIONAL,
        "figure-8 exterior",
        FIGURE8_EXCEPTIONAL
            .iter()
            .map(Slope::to_string)
            .collect::<Vec<_>>()
            .join(", "),
    ));
    rows.extend(gordon_wu_rows());
    rows.push(TableRow::new(
        "toroidal/denominator",
        citations::GORDON_LUECKE_DENOMINATOR,
        "hyperbolic knot in S^3",
        "toroidal p/q has |q| <= 2",
    ));
    rows.push(TableRow::new(
        "toroidal/half-integral",
        citations::GORDON_LUECKE_HALF_INTEGRAL,
        "hyperbolic knot in S^3",
        "at most one non-integral toroidal slope, half-integral",
    ));
    rows.extend(alternating::rows());
    rows.extend(montesinos::rows());
    for (k, s) in arborescent_type_ii_slopes() {
        rows.push(TableRow::new(
            format!("arborescent-ii/{k}"),
            citations::WU_ARBORESCENT,
            "type II arborescent knot",
            format!("exceptional (toroidal) slope {s}"),
        ));
    }
    rows
}

/// Text form of [`dump`], with a version header.
pub fn dump_text() -> String {
    let mut out =
        format!("# cosmetic tables v{TABLES_VERSION}\n# id\tcitation\tconstraint\tslope-formula\n");
    for row in dump() {
        out.push_str(&row.to_line());
        out.push('\n');
    }
    out.push_str("# citations\n");
    for c in citations::ALL {
        out.push_str(&format!("# {}\t{}\n", c.key, c.text));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slopes::distance;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn distance_bound_examples() {
        use SurgeryType::*;
        assert_eq!(distance_bound(Reducible, Reducible), 1);
        assert_eq!(distance_bound(Cyclic, Finite), 2);
        assert_eq!(distance_bound(Finite, Cyclic), 2);
        assert_eq!(distance_bound(Toroidal, Toroidal), 8);
        assert_eq!(distance_bound(Toroidal, Reducible), 3);
        assert_eq!(distance_bound(SmallSeifert, Reducible), 4);
        assert_eq!(
            "small seifert".parse::<SurgeryType>().unwrap(),
            SmallSeifert
        );
        assert!("hyperbolic".parse::<SurgeryType>().is_err());
    }

    #[test]
    fn distance_bound_symmetric_with_max_eight() {
        let mut max = 0;
        for a in SurgeryType::ALL {
            for b in SurgeryType::ALL {
                assert_eq!(distance_bound(a, b), distance_bound(b, a));
                max = max.max(distance_bound(a, b));
            }
        }
        assert_eq!(max, 8);
    }

    #[test]
    fn gordon_wu_examples() {
        assert_eq!(
            gordon_wu_slopes(ToroidalFamily::L2, 2).unwrap(),
            (s(-16, 1), s(-20, 1))
        );
        for n in [-7, -1, 2, 3, 40] {
            assert_eq!(
                gordon_wu_slopes(ToroidalFamily::L1, n).unwrap(),
                (s(0, 1), s(4, 1))
            );
        }
        assert_eq!(
            gordon_wu_slopes(ToroidalFamily::Fig8, 0).unwrap(),
            (s(4, 1), s(-4, 1))
        );
        assert_eq!(
            gordon_wu_slopes(ToroidalFamily::L3, 1).unwrap(),
            (s(-34, 1), s(-63, 2))
        );
        assert!(gordon_wu_slopes(ToroidalFamily::L2, 1).is_err());
        assert!(gordon_wu_slopes(ToroidalFamily::L2, -1).is_err());
        assert!(gordon_wu_slopes(ToroidalFamily::L1, 0).is_err());
        assert!(gordon_wu_slopes(ToroidalFamily::L1, 1).is_err());
    }

    #[test]
    fn gordon_wu_distances() {
        for f in ToroidalFamily::ALL {
            for n in -50..=50 {
                let Ok((a, b)) = gordon_wu_slopes(f, n) else {
                    continue;
                };
                let d = distance(a, b);
                assert!(d >= 4, "{f}({n}): distance {d}");
                if matches!(f, ToroidalFamily::L1 | ToroidalFamily::L2) {
                    assert_eq!(d, 4);
                }
            }
        }
    }

    #[test]
    fn h1_discrimination() {
        assert!(h1_discriminates_distance4(1).unwrap());
        assert!(h1_discriminates_distance4(-2).unwrap());
        assert!(h1_discriminates_distance4(0).is_err());
        assert!(h1_discriminates_distance4_symbolic());
    }

    #[test]
    fn affine_roots() {
        let a = AffineSlope::integral(2, -9);
        let b = AffineSlope::integral(-2, -9);
        assert_eq!(
            a.abs_equal_roots(&b),
            Some(BTreeSet::from([Ratio::from_integer(0)]))
        );
        assert_eq!(a.abs_equal_roots(&a), None);
        let c = AffineSlope::integral(1, 2);
        let d = AffineSlope::integral(0, 1);
        // 1 + 2n = ±n → n = -1 or n = -1/3
        assert_eq!(
            c.abs_equal_roots(&d),
            Some(BTreeSet::from([Ratio::new(-1, 1), Ratio::new(-1, 3)]))
        );
        assert_eq!(a.to_string(), "2 - 9n");
        assert_eq!(ToroidalFamily::L3.formulas().1.to_string(), "-13/2 - 25n");
    }

    #[test]
    fn denominator_and_half_integral() {
        assert!(!toroidal_denominator_ok(s(1, 3)));
        assert!(toroidal_denominator_ok(s(1, 2)));
        assert!(toroidal_denominator_ok(s(2, 1)));
        assert_eq!(half_integral_unique_rule((s(1, 2), s(-1, 2))), Ok(false));
        assert_eq!(half_integral_unique_rule((s(3, 2), s(-3, 2))), Ok(false));
        assert!(half_integral_unique_rule((s(1, 1), s(-1, 1))).is_err());
    }

    #[test]
    fn pm1_examples() {
        assert!(no_pm1_pair(&[s(0, 1), s(1, 1)]));
        assert!(!no_pm1_pair(&[s(1, 1), s(-1, 1)]));
        assert!(no_pm1_pair(&[]));
        assert!(!no_pm1_pair(&FIGURE8_EXCEPTIONAL));
    }

    #[test]
    fn arborescent_examples() {
        assert_eq!(
            arborescent_type_ii_slopes(),
            [
                (TypeIIKnot::K1, s(3, 1)),
                (TypeIIKnot::K2, s(0, 1)),
                (TypeIIKnot::K3, s(-3, 1))
            ]
        );
        assert_eq!(arborescent_type_ii_lookup(s(3, 1)), Some(TypeIIKnot::K1));
        assert_eq!(arborescent_type_ii_lookup(s(1, 1)), None);
    }

    #[test]
    fn dump_rows_carry_known_citations() {
        let rows = dump();
        assert!(rows.len() > 30);
        for r in &rows {
            assert_eq!(citations::lookup(r.citation.key), Some(r.citation));
            assert_eq!(r.to_line().matches('\t').count(), 3, "{}", r.id);
        }
        let ids: BTreeSet<_> = rows.iter().map(|r| r.id.clone()).collect();
        assert_eq!(ids.len(), rows.len());
    }
}
