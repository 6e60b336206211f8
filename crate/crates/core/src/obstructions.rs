//! The decision pipeline: run every applicable obstruction on a knot record
//! and collect the verdicts into a report.
//!
//! The pipeline only ever proves non-existence. A report is either
//! `EXCLUDED` (some criterion rules out a truly cosmetic pair of exceptional
//! slopes) or `UNRESOLVED`, optionally with the candidate pairs that survive.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_rational::Ratio;

use crate::alexander::{
    casson_plus_one_surgery, from_seifert_matrix, lspace_form, second_derivative_at_one,
    second_derivative_from_gaps, torsion_invariants, torsion_weight, SeifertMatrix,
    SymmetricLaurent,
};
use crate::citations::{self, Citation};
use crate::error::{Error, Result};
use crate::slopes::{
    distance, enumerate_candidate_pairs, linking_form_compatible, niwu_congruence, tabulated,
    Slope, SlopePair,
};
use crate::tables::{
    distance_bound, h1_discriminates_distance4, h1_discriminates_distance4_symbolic,
    half_integral_unique_rule, toroidal_denominator_ok, SurgeryType,
};

/// Exceptional slopes on a hyperbolic exterior are at distance at most this.
pub const MAX_EXCEPTIONAL_DISTANCE: u64 = 8;

/// Scan window for the distance-4 `H₁` comparison; the symbolic check covers the rest.
pub const H1_SCAN_WINDOW: i64 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tristate {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Tristate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tristate::Yes => "yes",
            Tristate::No => "no",
            Tristate::Unknown => "unknown",
        })
    }
}

impl FromStr for Tristate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "yes" | "true" => Ok(Tristate::Yes),
            "no" | "false" => Ok(Tristate::No),
            "unknown" | "?" => Ok(Tristate::Unknown),
            _ => Err(Error::Constraint(format!(
                "expected yes, no or unknown, got {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnotFlags {
    pub hyperbolic: Tristate,
    pub amphicheiral: Tristate,
    pub nontrivial: bool,
}

impl Default for KnotFlags {
    fn default() -> Self {
        KnotFlags {
            hyperbolic: Tristate::Unknown,
            amphicheiral: Tristate::Unknown,
            nontrivial: true,
        }
    }
}

/// Heegaard Floer data supplied by the caller. Nothing here is computed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FloerData {
    pub tau: Option<i64>,
    /// `rank HF_red(S³_K(r))` keyed by surgery slope.
    pub rank_hfred: Option<BTreeMap<Slope, u64>>,
    /// `d(S³_K(1/n))` for `n = 1, 2, …`.
    pub d_values: Option<Vec<Ratio<i64>>>,
    /// `(d_{+1/2}, d_{−1/2})` of the 0-surgery.
    pub d_half: Option<(Ratio<i64>, Ratio<i64>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotSource {
    Seifert(SeifertMatrix),
    Alexander(SymmetricLaurent),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub source: KnotSource,
    pub flags: KnotFlags,
    pub floer: Option<FloerData>,
    polynomial: SymmetricLaurent,
}

impl KnotRecord {
    /// Derives the Alexander polynomial from a Seifert source at ingestion.
    pub fn new(
        name: impl Into<String>,
        source: KnotSource,
        flags: KnotFlags,
        floer: Option<FloerData>,
    ) -> Result<Self> {
        let polynomial = match &source {
            KnotSource::Seifert(v) => from_seifert_matrix(v)?,
            KnotSource::Alexander(p) => p.clone(),
        };
        if !flags.nontrivial && !polynomial.is_trivial() {
            return Err(Error::Constraint(format!(
                "knot marked trivial but its Alexander polynomial is {polynomial}"
            )));
        }
        Ok(KnotRecord {
            name: name.into(),
            source,
            flags,
            floer,
            polynomial,
        })
    }

    pub fn polynomial(&self) -> &SymmetricLaurent {
        &self.polynomial
    }

    /// Same record with the hyperbolicity flag replaced.
    pub fn with_hyperbolic(mut self, hyperbolic: Tristate) -> Self {
        self.flags.hyperbolic = hyperbolic;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Criterion {
    BoyerLines,
    NiWuTau,
    LspaceGap,
    ExceptionalNarrowing,
    FloerDChain,
    FloerTorsionBound,
    FloerHalfGrading,
}

impl Criterion {
    pub fn id(self) -> &'static str {
        match self {
            Criterion::BoyerLines => "boyer_lines",
            Criterion::NiWuTau => "niwu_tau",
            Criterion::LspaceGap => "lspace_gap",
            Criterion::ExceptionalNarrowing => "exceptional_narrowing",
            Criterion::FloerDChain => "floer_d_chain",
            Criterion::FloerTorsionBound => "floer_torsion_bound",
            Criterion::FloerHalfGrading => "floer_half_grading",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Excludes,
    Passes,
    NotApplicable,
    DataMissing,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Excludes => "EXCLUDES",
            Status::Passes => "PASSES",
            Status::NotApplicable => "NOT-APPLICABLE",
            Status::DataMissing => "DATA-MISSING",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub criterion: Criterion,
    pub status: Status,
    pub citation: Citation,
    pub detail: String,
}

impl Verdict {
    fn new(
        criterion: Criterion,
        status: Status,
        citation: Citation,
        detail: impl Into<String>,
    ) -> Self {
        Verdict {
            criterion,
            status,
            citation,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Overall {
    Excluded,
    Unresolved,
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Overall::Excluded => "EXCLUDED",
            Overall::Unresolved => "UNRESOLVED",
        })
    }
}

fn fmt_pairs(pairs: &[SlopePair]) -> String {
    let inner: Vec<String> = pairs.iter().map(|(a, b)| format!("({a}, {b})")).collect();
    format!("{{{}}}", inner.join(", "))
}

/// Criterion: `Δ''(1) ≠ 0` rules out truly cosmetic surgery outright.
pub fn boyer_lines(p: &SymmetricLaurent) -> Verdict {
    let d2 = second_derivative_at_one(p);
    let casson = casson_plus_one_surgery(p);
    if d2 != 0 {
        Verdict::new(
            Criterion::BoyerLines,
            Status::Excludes,
            citations::BOYER_LINES,
            format!("Delta''(1) = {d2} != 0"),
        )
    } else if p.is_trivial() {
        Verdict::new(
            Criterion::BoyerLines,
            Status::Passes,
            citations::BOYER_LINES,
            "Delta''(1) = 0; trivial polynomial (the unknot is outside the hyperbolic-knot statements)",
        )
    } else {
        Verdict::new(
            Criterion::BoyerLines,
            Status::Passes,
            citations::BOYER_LINES,
            format!("Delta''(1) = 0, so lambda(S^3_K(1)) = {casson}"),
        )
    }
}

/// Criterion: a truly cosmetic pair needs `τ = 0`.
pub fn niwu_tau(f: Option<&FloerData>) -> Verdict {
    let c = citations::NI_WU;
    match f.and_then(|f| f.tau) {
        None => Verdict::new(
            Criterion::NiWuTau,
            Status::DataMissing,
            c,
            "tau not supplied",
        ),
        Some(0) => Verdict::new(Criterion::NiWuTau, Status::Passes, c, "tau = 0"),
        Some(t) => Verdict::new(
            Criterion::NiWuTau,
            Status::Excludes,
            c,
            format!("tau = {t} != 0"),
        ),
    }
}

/// Criterion: a polynomial in L-space form has `Δ''(1) = 2Σ(−1)^{k−j} n_j² ≠ 0`,
/// so a Seifert-fibred cosmetic surgery is impossible and Boyer–Lines applies.
pub fn lspace_gap(p: &SymmetricLaurent) -> Verdict {
    let c = citations::LSPACE_ALEXANDER;
    match lspace_form(p) {
        None => Verdict::new(
            Criterion::LspaceGap,
            Status::NotApplicable,
            c,
            "polynomial not in L-space form",
        ),
        Some(g) if g.is_empty() => Verdict::new(
            Criterion::LspaceGap,
            Status::NotApplicable,
            c,
            "Delta = 1: only the unknot has an L-space surgery with this polynomial",
        ),
        Some(g) => {
            let from_gaps = second_derivative_from_gaps(&g).expect("nonempty gaps");
            let direct = second_derivative_at_one(p);
            let gaps: Vec<String> = g.gaps().iter().map(u64::to_string).collect();
            let agree = if from_gaps == direct {
                "agrees with"
            } else {
                "DISAGREES with"
            };
            Verdict::new(
                Criterion::LspaceGap,
                Status::Excludes,
                c,
                format!(
                    "L-space form with n = ({}); 2*sum (-1)^(k-j) n_j^2 = {from_gaps} != 0 ({agree} Delta''(1) = {direct})",
                    gaps.join(", ")
                ),
            )
        }
    }
}

/// One stage of the exceptional-pair narrowing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NarrowingStep {
    pub stage: usize,
    pub description: String,
    pub citation: Citation,
    pub removed: Vec<SlopePair>,
    pub remaining: Vec<SlopePair>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Narrowing {
    pub survivors: Vec<SlopePair>,
    pub steps: Vec<NarrowingStep>,
    /// Filling type forced on any survivor.
    pub tag: &'static str,
    /// Results establishing `tag`.
    pub tag_citations: Vec<Citation>,
}

/// Narrows exceptional truly cosmetic pairs on a hyperbolic knot in `S³` to
/// `{(1, −1)}`.
///
/// Stage 0 enumerates `(p/q, −p/q)` with `Δ = 2pq ≤ 8` and keeps those whose
/// meridian linking forms match. Stage 1 drops slopes with `|q| > 2`, which
/// cannot be toroidal. Stage 2 drops the half-integral pair. Stage 3 drops the
/// distance-4 pair by comparing `|H₁|` across the Gordon–Wu families, and
/// checks the Ni–Wu congruence on what is left.
pub fn exceptional_narrowing() -> Narrowing {
    let mut steps = Vec::new();

    let all = tabulated(&enumerate_candidate_pairs(MAX_EXCEPTIONAL_DISTANCE));
    // tabulated pairs are (p/q, -p/q) with p > 0
    let (table, unmatched): (Vec<SlopePair>, Vec<SlopePair>) = all
        .into_iter()
        .partition(|(r, _)| linking_form_compatible(r.num(), r.den(), -r.den()).unwrap_or(false));
    steps.push(NarrowingStep {
        stage: 0,
        description: format!(
            "pairs (p/q, -p/q) with 2pq <= {MAX_EXCEPTIONAL_DISTANCE}; linking forms q = -q u^2 mod p fail for {}",
            fmt_pairs(&unmatched)
        ),
        citation: citations::COSMETIC_PAIR_TABLE,
        removed: unmatched,
        remaining: table.clone(),
    });

    // every candidate is at distance >= 2, beyond the reducible bound; the
    // Seifert-fibred case is ruled out by the L-space form argument, so the
    // fillings are toroidal
    let reducible_bound = distance_bound(SurgeryType::Reducible, SurgeryType::Reducible);
    debug_assert!(table.iter().all(|&(r, s)| distance(r, s) > reducible_bound));

    let (kept, dropped): (Vec<_>, Vec<_>) = table
        .into_iter()
        .partition(|&(r, s)| toroidal_denominator_ok(r) && toroidal_denominator_ok(s));
    steps.push(NarrowingStep {
        stage: 1,
        description: format!(
            "fillings are toroidal (distance > {reducible_bound} rules out reducible, L-space form rules out Seifert fibred); toroidal slopes have |q| <= 2"
        ),
        citation: citations::GORDON_LUECKE_DENOMINATOR,
        removed: dropped,
        remaining: kept.clone(),
    });

    let (dropped, kept): (Vec<_>, Vec<_>) = kept
        .into_iter()
        .partition(|&pair| half_integral_unique_rule(pair) == Ok(false));
    steps.push(NarrowingStep {
        stage: 2,
        description: "a non-integral toroidal slope is the unique half-integral slope of an Eudave-Munoz knot".into(),
        citation: citations::GORDON_LUECKE_HALF_INTEGRAL,
        removed: dropped,
        remaining: kept.clone(),
    });

    let discriminated = h1_discriminates_distance4_symbolic()
        && (-H1_SCAN_WINDOW..=H1_SCAN_WINDOW)
            .filter(|&n| n != 0)
            .all(|n| h1_discriminates_distance4(n) == Ok(true));
    let (dropped, kept): (Vec<_>, Vec<_>) = kept
        .into_iter()
        .partition(|&(r, s)| distance(r, s) == 4 && discriminated);
    let congruent = kept.iter().all(|&(r, _)| niwu_congruence(r) == Ok(true));
    let kept: Vec<_> = kept
        .into_iter()
        .filter(|&(r, _)| niwu_congruence(r) == Ok(true))
        .collect();
    steps.push(NarrowingStep {
        stage: 3,
        description: format!(
            "distance-4 toroidal pairs are L1(n) (|H_1| 0 vs 4) or L2(n) (|H_1| |2-9n| vs |2+9n|), never equal for n != 0; survivors satisfy q^2 = -1 mod p: {congruent}"
        ),
        citation: citations::H1_DISCRIMINATION,
        removed: dropped,
        remaining: kept.clone(),
    });

    Narrowing {
        survivors: kept,
        steps,
        tag: "toroidal, not Seifert fibred",
        tag_citations: vec![
            citations::GORDON_LUECKE_REDUCIBLE,
            citations::LSPACE_ALEXANDER,
            citations::BOYER_LINES,
        ],
    }
}

/// Consistency checks on user-supplied Floer data, one verdict each, in
/// [`Criterion`] order.
pub fn floer_consistency(p: &SymmetricLaurent, f: &FloerData) -> Vec<Verdict> {
    vec![d_chain(f), torsion_bound(p, f), half_grading(f)]
}

fn d_chain(f: &FloerData) -> Verdict {
    let crit = Criterion::FloerDChain;
    let d = match f.d_values.as_deref() {
        None | Some([]) => {
            return Verdict::new(
                crit,
                Status::DataMissing,
                citations::OS_FRACTIONAL_D,
                "d(S^3_K(1/n)) not supplied",
            )
        }
        Some(d) => d,
    };
    let zero = Ratio::from_integer(0);
    if d[0] > zero {
        return Verdict::new(
            crit,
            Status::Excludes,
            citations::OS_FRACTIONAL_D,
            format!("d(S^3_K(1/1)) = {} > 0 violates d(S^3_K(1/n)) <= 0", d[0]),
        );
    }
    if let Some(i) = d.windows(2).position(|w| w[1] > w[0]) {
        return Verdict::new(
            crit,
            Status::Excludes,
            citations::OS_FRACTIONAL_D,
            format!(
                "monotonicity violated: d(S^3_K(1/{})) = {} > d(S^3_K(1/{})) = {}",
                i + 2,
                d[i + 1],
                i + 1,
                d[i]
            ),
        );
    }
    if let Some((dp, _)) = f.d_half {
        let floor = dp - Ratio::new(1, 2);
        if let Some(i) = d.iter().position(|&x| x < floor) {
            return Verdict::new(
                crit,
                Status::Excludes,
                citations::OS_FRACTIONAL_D,
                format!(
                    "d(S^3_K(1/{})) = {} below d_1/2(S^3_K(0)) - 1/2 = {floor}",
                    i + 1,
                    d[i]
                ),
            );
        }
    }
    if let Some(i) = d.iter().position(|&x| x != zero) {
        return Verdict::new(
            crit,
            Status::Excludes,
            citations::COSMETIC_D_VANISHES,
            format!("d(S^3_K(1/{})) = {} != 0", i + 1, d[i]),
        );
    }
    Verdict::new(
        crit,
        Status::Passes,
        citations::COSMETIC_D_VANISHES,
        format!("d(S^3_K(1/n)) = 0 for n = 1..{}", d.len()),
    )
}

fn torsion_bound(p: &SymmetricLaurent, f: &FloerData) -> Verdict {
    let crit = Criterion::FloerTorsionBound;
    let c = citations::OS_TORSION_BOUND;
    let weight = torsion_weight(p);
    let t: Vec<String> = torsion_invariants(p).iter().map(i64::to_string).collect();
    let Some(rank) = f
        .rank_hfred
        .as_ref()
        .and_then(|m| m.get(&Slope::integer(1)))
    else {
        return Verdict::new(
            crit,
            Status::DataMissing,
            c,
            "rank HF_red(S^3_K(1)) not supplied",
        );
    };
    let status = if weight <= *rank {
        Status::Passes
    } else {
        Status::Excludes
    };
    let cmp = if weight <= *rank { "<=" } else { ">" };
    Verdict::new(
        crit,
        status,
        c,
        format!(
            "t = ({}); |t_0| + 2 sum |t_i| = {weight} {cmp} rank HF_red(S^3_K(1)) = {rank}",
            t.join(", ")
        ),
    )
}

fn half_grading(f: &FloerData) -> Verdict {
    let crit = Criterion::FloerHalfGrading;
    let c = citations::OS_ZERO_SURGERY_D;
    let d1 = f.d_values.as_ref().and_then(|d| d.first());
    match (f.d_half, d1) {
        (Some((dp, _)), Some(&d1)) => {
            let lhs = dp - Ratio::new(1, 2);
            if lhs == d1 {
                Verdict::new(
                    crit,
                    Status::Passes,
                    c,
                    format!("d_1/2(S^3_K(0)) - 1/2 = {lhs} = d(S^3_K(1))"),
                )
            } else {
                Verdict::new(
                    crit,
                    Status::Excludes,
                    c,
                    format!(
                        "inconsistent data: d_1/2(S^3_K(0)) - 1/2 = {lhs} but d(S^3_K(1)) = {d1}"
                    ),
                )
            }
        }
        _ => Verdict::new(
            crit,
            Status::DataMissing,
            c,
            "needs both d_1/2(S^3_K(0)) and d(S^3_K(1))",
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub knot: String,
    pub polynomial: SymmetricLaurent,
    pub flags: KnotFlags,
    pub assumptions: Vec<&'static str>,
    pub verdicts: Vec<Verdict>,
    pub narrowing: Option<Narrowing>,
    pub surviving_pairs: Vec<SlopePair>,
    pub survivors_note: String,
    pub overall: Overall,
}

const ASSUMPTIONS: [&str; 3] = [
    "the two slopes are assumed exceptional; exceptionality is not certified",
    "obstruction-only: a report never asserts that a cosmetic surgery exists",
    "Floer-theoretic quantities are inputs and are only checked for consistency",
];

/// Runs every criterion on `k` in a fixed order and aggregates the verdicts.
pub fn analyze(k: &KnotRecord) -> ObstructionReport {
    let p = k.polynomial();
    let nontrivial = k.flags.nontrivial;
    let mut verdicts = vec![boyer_lines(p)];

    verdicts.push(if nontrivial {
        niwu_tau(k.floer.as_ref())
    } else {
        Verdict::new(
            Criterion::NiWuTau,
            Status::NotApplicable,
            citations::NI_WU,
            "needs a nontrivial knot",
        )
    });

    verdicts.push(lspace_gap(p));

    let in_scope = match (nontrivial, k.flags.hyperbolic) {
        (false, _) => Err("needs a nontrivial knot"),
        (true, Tristate::No) => Err("knot is not hyperbolic"),
        (true, Tristate::Unknown) => Err("hyperbolicity unknown"),
        (true, Tristate::Yes) => Ok(()),
    };

    let narrowing = in_scope.ok().map(|()| exceptional_narrowing());
    verdicts.push(match (&narrowing, in_scope) {
        (Some(n), _) => Verdict::new(
            Criterion::ExceptionalNarrowing,
            Status::Passes,
            citations::COSMETIC_PAIR_TABLE,
            format!(
                "exceptional candidates narrowed to {} ({})",
                fmt_pairs(&n.survivors),
                n.tag
            ),
        ),
        (None, Err(why)) => Verdict::new(
            Criterion::ExceptionalNarrowing,
            Status::NotApplicable,
            citations::SCOPE,
            why,
        ),
        (None, Ok(())) => unreachable!(),
    });

    match (in_scope, &k.floer) {
        (Err(why), _) => {
            for (crit, c) in [
                (Criterion::FloerDChain, citations::COSMETIC_D_VANISHES),
                (Criterion::FloerTorsionBound, citations::OS_TORSION_BOUND),
                (Criterion::FloerHalfGrading, citations::OS_ZERO_SURGERY_D),
            ] {
                verdicts.push(Verdict::new(crit, Status::NotApplicable, c, why));
            }
        }
        (Ok(()), Some(f)) => verdicts.extend(floer_consistency(p, f)),
        (Ok(()), None) => verdicts.extend(floer_consistency(p, &FloerData::default())),
    }

    let excluded = verdicts.iter().any(|v| v.status == Status::Excludes);
    let (overall, surviving_pairs, survivors_note) = if excluded {
        (Overall::Excluded, Vec::new(), "none".to_string())
    } else if let Some(n) = &narrowing {
        (Overall::Unresolved, n.survivors.clone(), n.tag.to_string())
    } else {
        (
            Overall::Unresolved,
            Vec::new(),
            "not narrowed: exceptional-pair narrowing not applicable".to_string(),
        )
    };

    ObstructionReport {
        knot: k.name.clone(),
        polynomial: p.clone(),
        flags: k.flags,
        assumptions: ASSUMPTIONS.to_vec(),
        verdicts,
        narrowing,
        surviving_pairs,
        survivors_note,
        overall,
    }
}

impl ObstructionReport {
    pub fn first_exclusion(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.status == Status::Excludes)
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let f = &self.flags;
        let _ = writeln!(out, "knot: {}", self.knot);
        let _ = writeln!(out, "alexander: {}", self.polynomial);
        let _ = writeln!(
            out,
            "flags: hyperbolic={} amphicheiral={} nontrivial={}",
            f.hyperbolic,
            f.amphicheiral,
            if f.nontrivial { "yes" } else { "no" }
        );
        for a in &self.assumptions {
            let _ = writeln!(out, "assumes: {a}");
        }
        for (i, v) in self.verdicts.iter().enumerate() {
            let _ = writeln!(
                out,
                "[{}] {:<22} {:<14} {}",
                i + 1,
                v.criterion.id(),
                v.status,
                v.detail
            );
            let _ = writeln!(out, "    cite {}: {}", v.citation.key, v.citation.text);
            if v.criterion == Criterion::ExceptionalNarrowing {
                if let Some(n) = &self.narrowing {
                    for s in &n.steps {
                        let _ = writeln!(
                            out,
                            "    stage {} ({}): removed {} -> {}",
                            s.stage,
                            s.citation.key,
                            fmt_pairs(&s.removed),
                            fmt_pairs(&s.remaining)
                        );
                        let _ = writeln!(out, "      {}", s.description);
                    }
                    let keys: Vec<&str> = n.tag_citations.iter().map(|c| c.key).collect();
                    let _ = writeln!(out, "    tag: {} ({})", n.tag, keys.join(", "));
                }
            }
        }
        let _ = writeln!(
            out,
            "survivors: {} [{}]",
            fmt_pairs(&self.surviving_pairs),
            self.survivors_note
        );
        match self.first_exclusion() {
            Some(v) => {
                let _ = writeln!(out, "overall: {} (first: {})", self.overall, v.criterion);
            }
            None => {
                let _ = writeln!(out, "overall: {}", self.overall);
            }
        }
        out
    }

    /// One `criterion \t status \t citation \t detail` line per verdict, then
    /// an `overall` line.
    pub fn to_machine(&self) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}",
                v.criterion.id(),
                v.status,
                v.citation.key,
                v.detail
            );
        }
        let _ = writeln!(
            out,
            "overall\t{}\t-\tsurvivors={} [{}]",
            self.overall,
            fmt_pairs(&self.surviving_pairs),
            self.survivors_note
        );
        out
    }
}
