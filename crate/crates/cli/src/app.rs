//! Argument parsing and command dispatch.

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cosmetic_core::alexander::{
    lspace_form, second_derivative_at_one, second_derivative_from_gaps, torsion_invariants,
    torsion_weight, SeifertMatrix, SymmetricLaurent,
};
use cosmetic_core::homology::{framing_matrix, h1_group, FramedLink};
use cosmetic_core::obstructions::{analyze, KnotRecord, Overall, Tristate};
use cosmetic_core::slopes::{
    distance, enumerate_candidate_pairs, linking_form_compatible, niwu_congruence, tabulated,
    unit_witness,
};
use cosmetic_core::tables::{
    self, alternating_exceptional_slopes, distance_bound, gordon_wu_slopes,
    montesinos_toroidal_slopes, toroidal_slopes, AlternatingKnot, AlternatingVerdict,
    MontesinosKnot, SurgeryType, ToroidalFamily,
};
use cosmetic_core::{catalog, Slope};

use crate::knotfile::KnotFile;
use crate::linkfile::{parse_framings, LinkFile};

pub const EXIT_UNRESOLVED: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_EXCLUDED: i32 = 10;

#[derive(Debug, Parser)]
#[command(
    name = "cosmetic",
    version,
    about = "Obstructions to truly cosmetic surgery on knots in S^3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every obstruction on one or more knot records.
    Analyze(AnalyzeArgs),
    /// Slope arithmetic.
    #[command(subcommand)]
    Slopes(SlopesCmd),
    /// Order and structure of H_1 of a surgery on a framed link.
    Homology(HomologyArgs),
    /// Alexander polynomial invariants.
    #[command(subcommand)]
    Alex(AlexCmd),
    /// Classification tables.
    #[command(subcommand)]
    Tables(TablesCmd),
    /// List built-in knots, or print one as a knot file.
    Catalog { name: Option<String> },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Assume {
    Yes,
    No,
    Unknown,
}

impl From<Assume> for Tristate {
    fn from(a: Assume) -> Self {
        match a {
            Assume::Yes => Tristate::Yes,
            Assume::No => Tristate::No,
            Assume::Unknown => Tristate::Unknown,
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Knot files (TOML).
    pub files: Vec<PathBuf>,
    /// Built-in knot by name; repeatable. See `cosmetic catalog`.
    #[arg(long = "builtin")]
    pub builtin: Vec<String>,
    /// Analyze the whole built-in catalog.
    #[arg(long)]
    pub all_builtin: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Override the hyperbolicity flag of every record.
    #[arg(long, value_enum)]
    pub assume_hyperbolic: Option<Assume>,
}

#[derive(Debug, Subcommand)]
pub enum SlopesCmd {
    /// Distance |ps - qr| between two slopes.
    Distance {
        #[arg(allow_hyphen_values = true)]
        a: Slope,
        #[arg(allow_hyphen_values = true)]
        b: Slope,
    },
    /// Candidate truly cosmetic pairs (p/q, -p/q) with 2pq <= max-delta.
    Enumerate {
        #[arg(long, default_value_t = 8)]
        max_delta: u64,
        #[arg(long, value_enum)]
        filter: Option<Filter>,
    },
    /// Whether q^2 = -1 mod p.
    Niwu {
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Whether q = q2 u^2 mod p for some unit u.
    Linking {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        #[arg(allow_hyphen_values = true)]
        q2: i64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Filter {
    Linking,
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    /// Framed-link file (TOML).
    pub file: Option<PathBuf>,
    /// Inline framings, comma separated, e.g. `3/1,5/1` or `inf`.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "file"
    )]
    pub framings: Vec<String>,
    /// Inline linking matrix, row major, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "file"
    )]
    pub linking: Vec<i64>,
}

#[derive(Debug, Args)]
pub struct KnotInput {
    /// Knot file (TOML).
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub builtin: Option<String>,
    /// Coefficients a_0, a_1, ..., a_d of a symmetric polynomial.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub coeffs: Vec<i64>,
    /// Square Seifert matrix, row major.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub seifert: Vec<i64>,
}

impl KnotInput {
    fn polynomial(&self) -> Result<SymmetricLaurent> {
        let given = [
            self.file.is_some(),
            self.builtin.is_some(),
            !self.coeffs.is_empty(),
            !self.seifert.is_empty(),
        ];
        if given.iter().filter(|&&g| g).count() != 1 {
            bail!("give exactly one of FILE, --builtin, --coeffs, --seifert");
        }
        if let Some(path) = &self.file {
            return Ok(KnotFile::read(path)?.polynomial().clone());
        }
        if let Some(name) = &self.builtin {
            return Ok(catalog::lookup(name)?.polynomial().clone());
        }
        if !self.coeffs.is_empty() {
            return Ok(SymmetricLaurent::new(self.coeffs.clone())?);
        }
        let n = self.seifert.len();
        let size = (0..=n).find(|k| k * k >= n).filter(|k| k * k == n);
        let size =
            size.ok_or_else(|| anyhow!("--seifert needs a square number of entries, got {n}"))?;
        Ok(cosmetic_core::alexander::from_seifert_matrix(
            &SeifertMatrix::from_row_major(size, &self.seifert)?,
        )?)
    }
}

#[derive(Debug, Subcommand)]
pub enum AlexCmd {
    /// The normalized Alexander polynomial.
    Poly(KnotInput),
    /// Delta''(1).
    D2(KnotInput),
    /// Torsion invariants t_i and the weight |t_0| + 2 sum |t_i|.
    Torsion(KnotInput),
    /// Gap sequence if the polynomial has L-space form.
    Lspace(KnotInput),
}

#[derive(Debug, Subcommand)]
pub enum TablesCmd {
    /// Every table as TSV with citations.
    Dump,
    /// Toroidal slope pairs at distance >= 4.
    GordonWu {
        /// L1, L2, L3 or Fig8; all families when omitted.
        family: Option<ToroidalFamily>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Toroidal slopes of a Montesinos knot `K(t1, t2, t3)`, or one list entry.
    Montesinos {
        #[arg(allow_hyphen_values = true)]
        knot: Option<String>,
        /// List entry id, e.g. `3` or `montesinos/3`.
        #[arg(long, conflicts_with = "knot")]
        entry: Option<String>,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            requires = "entry"
        )]
        params: Vec<i64>,
    },
    /// Exceptional slopes of hyperbolic alternating knots.
    Alternating {
        /// Twist knot K[2n, clasp]: `--twist n,clasp`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        twist: Option<Vec<i64>>,
        /// Two-bridge knot K[a, b]: `--two-bridge a,b`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        two_bridge: Option<Vec<i64>>,
        /// Pretzel knot P(a, b, c): `--pretzel a,b,c`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        pretzel: Option<Vec<i64>>,
    },
    /// Maximal distance between exceptional slopes of two filling types.
    DistanceBounds {
        a: Option<SurgeryType>,
        b: Option<SurgeryType>,
    },
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Runs `cli`, writing results to `out` and per-item errors to `err`.
/// Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Analyze(a) => return cmd_analyze(a, out, err),
        Command::Slopes(c) => cmd_slopes(c, out),
        Command::Homology(h) => cmd_homology(h, out),
        Command::Alex(c) => cmd_alex(c, out),
        Command::Tables(c) => cmd_tables(c, out),
        Command::Catalog { name } => cmd_catalog(name, out),
    };
    match result {
        Ok(()) => EXIT_UNRESOLVED,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn cmd_analyze(a: AnalyzeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut inputs: Vec<Result<KnotRecord>> = a.files.iter().map(|p| KnotFile::read(p)).collect();
    inputs.extend(
        a.builtin
            .iter()
            .map(|n| catalog::lookup(n).map_err(Into::into)),
    );
    if a.all_builtin {
        inputs.extend(catalog::builtin().into_iter().map(Ok));
    }
    if inputs.is_empty() {
        let _ = writeln!(
            err,
            "error: nothing to analyze; pass knot files or --builtin NAME"
        );
        return EXIT_INPUT;
    }
    let (mut failed, mut all_excluded) = (false, true);
    for (i, input) in inputs.into_iter().enumerate() {
        let record = match input {
            Ok(r) => r,
            Err(e) => {
                let _ = writeln!(err, "error: {e:#}");
                failed = true;
                continue;
            }
        };
        let record = match a.assume_hyperbolic {
            Some(h) => record.with_hyperbolic(h.into()),
            None => record,
        };
        let report = analyze(&record);
        all_excluded &= report.overall == Overall::Excluded;
        let text = match a.format {
            Format::Text => report.to_text(),
            Format::Machine => report.to_machine(),
        };
        if i > 0 && matches!(a.format, Format::Text) {
            let _ = writeln!(out);
        }
        if matches!(a.format, Format::Machine) {
            let _ = writeln!(out, "# {}", report.knot);
        }
        let _ = out.write_all(text.as_bytes());
    }
    if failed {
        EXIT_INPUT
    } else if all_excluded {
        EXIT_EXCLUDED
    } else {
        EXIT_UNRESOLVED
    }
}

fn cmd_slopes(c: SlopesCmd, out: &mut dyn Write) -> Result<()> {
    match c {
        SlopesCmd::Distance { a, b } => writeln!(out, "{}", distance(a, b))?,
        SlopesCmd::Enumerate { max_delta, filter } => {
            for (r, s) in tabulated(&enumerate_candidate_pairs(max_delta)) {
                let keep = match filter {
                    None => true,
                    Some(Filter::Linking) => linking_form_compatible(r.num(), r.den(), -r.den())?,
                };
                if keep {
                    writeln!(out, "{r}\t{s}\t{}", distance(r, s))?;
                }
            }
        }
        SlopesCmd::Niwu { slope } => writeln!(out, "{}", niwu_congruence(slope)?)?,
        SlopesCmd::Linking { p, q, q2 } => {
            let ok = linking_form_compatible(p, q, q2)?;
            match unit_witness(p, q, q2) {
                Some(u) if ok => writeln!(out, "true (u = {u})")?,
                _ => writeln!(out, "{ok}")?,
            }
        }
    }
    Ok(())
}

fn cmd_homology(h: HomologyArgs, out: &mut dyn Write) -> Result<()> {
    let link = match &h.file {
        Some(path) => LinkFile::read(path)?,
        None => {
            if h.framings.is_empty() {
                bail!("give a framed-link file or --framings");
            }
            let framings = parse_framings(&h.framings)?;
            let n = framings.len();
            let linking = if h.linking.is_empty() {
                vec![0; n * n]
            } else {
                h.linking.clone()
            };
            FramedLink::from_row_major(n, &linking, framings)?
        }
    };
    let reduced = link.erase_infinite();
    if reduced.components() < link.components() {
        writeln!(
            out,
            "erased {} component(s) with framing inf",
            link.components() - reduced.components()
        )?;
    }
    writeln!(out, "framing matrix:")?;
    for row in framing_matrix(&reduced)? {
        writeln!(
            out,
            "  {}",
            row.iter().map(|x| format!("{x:>4}")).collect::<String>()
        )?;
    }
    let g = h1_group(&link)?;
    match g.order() {
        Some(o) => writeln!(out, "order: {o}")?,
        None => writeln!(out, "order: inf")?,
    }
    writeln!(out, "H_1 = {g}")?;
    writeln!(out, "invariant factors: ({})", join(g.invariant_factors()))?;
    Ok(())
}

fn cmd_alex(c: AlexCmd, out: &mut dyn Write) -> Result<()> {
    match c {
        AlexCmd::Poly(k) => {
            let p = k.polynomial()?;
            writeln!(out, "{p}")?;
            writeln!(out, "coefficients a_0..a_d: {}", join(p.coeffs()))?;
        }
        AlexCmd::D2(k) => writeln!(out, "{}", second_derivative_at_one(&k.polynomial()?))?,
        AlexCmd::Torsion(k) => {
            let p = k.polynomial()?;
            writeln!(out, "t: {}", join(torsion_invariants(&p)))?;
            writeln!(out, "weight: {}", torsion_weight(&p))?;
        }
        AlexCmd::Lspace(k) => match lspace_form(&k.polynomial()?) {
            None => writeln!(out, "not in L-space form")?,
            Some(g) if g.is_empty() => {
                writeln!(out, "L-space form with no gaps (trivial polynomial)")?
            }
            Some(g) => {
                writeln!(out, "gaps: {}", join(g.gaps()))?;
                writeln!(
                    out,
                    "Delta''(1) from gaps: {}",
                    second_derivative_from_gaps(&g)?
                )?;
            }
        },
    }
    Ok(())
}

fn cmd_tables(c: TablesCmd, out: &mut dyn Write) -> Result<()> {
    match c {
        TablesCmd::Dump => out.write_all(tables::dump_text().as_bytes())?,
        TablesCmd::GordonWu { family, n } => {
            let families = match family {
                Some(f) => vec![f],
                None => ToroidalFamily::ALL.to_vec(),
            };
            for f in families {
                match n {
                    Some(n) => {
                        let (r, s) = gordon_wu_slopes(f, n)?;
                        writeln!(out, "{f}({n})\t{r}\t{s}\t{}", distance(r, s))?;
                    }
                    None => {
                        let (r, s) = f.formulas();
                        writeln!(out, "{f}\t{r}\t{s}\t{}", f.constraint())?;
                    }
                }
            }
        }
        TablesCmd::Montesinos {
            knot,
            entry,
            params,
        } => {
            let res = match (knot, entry) {
                (Some(k), _) => {
                    let knot: MontesinosKnot = k.parse()?;
                    let slopes = toroidal_slopes(&knot);
                    cosmetic_core::tables::MontesinosSlopes { knot, slopes }
                }
                (None, Some(id)) => montesinos_toroidal_slopes(&id, &params)?,
                (None, None) => {
                    for row in tables::dump()
                        .iter()
                        .filter(|r| r.id.starts_with("montesinos"))
                    {
                        writeln!(out, "{}", row.to_line())?;
                    }
                    return Ok(());
                }
            };
            writeln!(
                out,
                "{}\t{{{}}}\t{}",
                res.knot,
                join(&res.slopes),
                res.multiplicity_label()
            )?;
        }
        TablesCmd::Alternating {
            twist,
            two_bridge,
            pretzel,
        } => {
            let knot = match (twist.as_deref(), two_bridge.as_deref(), pretzel.as_deref()) {
                (Some(&[n, clasp]), None, None) => AlternatingKnot::Twist { n, clasp },
                (None, Some(&[a, b]), None) => AlternatingKnot::TwoBridge { a, b },
                (None, None, Some(&[a, b, c])) => AlternatingKnot::Pretzel { a, b, c },
                (None, None, None) => {
                    for row in tables::dump()
                        .iter()
                        .filter(|r| r.id.starts_with("alternating"))
                    {
                        writeln!(out, "{}", row.to_line())?;
                    }
                    return Ok(());
                }
                _ => bail!("give one of --twist, --two-bridge, --pretzel"),
            };
            let res = alternating_exceptional_slopes(knot)?;
            match res.verdict {
                AlternatingVerdict::ExcludedByAlexander { second_derivative } => {
                    writeln!(out, "{knot}\texcluded by Delta''(1) = {second_derivative}")?
                }
                AlternatingVerdict::AvoidsPlusMinusOne => {
                    writeln!(out, "{knot}\t{{{}}}\tno (+1, -1) pair", join(&res.slopes))?
                }
            }
        }
        TablesCmd::DistanceBounds { a, b } => match (a, b) {
            (Some(a), Some(b)) => writeln!(out, "{}", distance_bound(a, b))?,
            (None, None) => {
                for row in tables::distance_rows() {
                    writeln!(out, "{}", row.to_line())?;
                }
            }
            _ => bail!("give two filling types, or none for the whole table"),
        },
    }
    Ok(())
}

fn cmd_catalog(name: Option<String>, out: &mut dyn Write) -> Result<()> {
    match name {
        None => {
            for n in catalog::NAMES {
                writeln!(out, "{n}")?;
            }
        }
        Some(n) => {
            let k = catalog::lookup(&n)
                .with_context(|| "see `cosmetic catalog` for names".to_string())?;
            out.write_all(KnotFile::from_record(&k).to_toml().as_bytes())?;
        }
    }
    Ok(())
}
