//! TOML knot records.
//!
//! ```toml
//! name = "trefoil"
//! alexander = [[0, -1], [1, 1]]      # or a [seifert] table, never both
//!
//! [seifert]
//! size = 2
//! entries = [-1, 1, 0, -1]
//!
//! [flags]
//! hyperbolic = "no"                  # yes | no | unknown
//! amphicheiral = "unknown"
//! nontrivial = true
//!
//! [floer]
//! tau = 0
//! d_values = ["0", "0"]
//! d_half = ["1/2", "-1/2"]
//! rank_hfred = { "1" = 1 }
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use cosmetic_core::alexander::{SeifertMatrix, SymmetricLaurent};
use cosmetic_core::obstructions::{FloerData, KnotFlags, KnotRecord, KnotSource, Tristate};
use cosmetic_core::Slope;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<Vec<(i64, i64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seifert: Option<SeifertSection>,
    #[serde(default)]
    pub flags: FlagsSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub floer: Option<FloerSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeifertSection {
    pub size: usize,
    pub entries: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperbolic: Option<FlagValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amphicheiral: Option<FlagValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nontrivial: Option<bool>,
}

/// `true`/`false` or `"yes"`/`"no"`/`"unknown"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FlagValue {
    Bool(bool),
    Text(String),
}

impl FlagValue {
    fn tristate(&self, field: &str) -> Result<Tristate> {
        match self {
            FlagValue::Bool(true) => Ok(Tristate::Yes),
            FlagValue::Bool(false) => Ok(Tristate::No),
            FlagValue::Text(s) => s.parse().with_context(|| format!("flags.{field}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FloerSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_values: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_half: Option<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_hfred: Option<BTreeMap<String, u64>>,
}

fn rational(s: &str, field: &str) -> Result<Ratio<i64>> {
    s.trim()
        .parse()
        .map_err(|_| anyhow!("{field}: expected a rational like \"-1/2\", got {s:?}"))
}

impl KnotFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<KnotRecord> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        KnotFile::parse(&text)
            .and_then(KnotFile::into_record)
            .with_context(|| format!("in {}", path.display()))
    }

    pub fn into_record(self) -> Result<KnotRecord> {
        let source = match (self.alexander, self.seifert) {
            (Some(_), Some(_)) => bail!("give exactly one of `alexander` and `seifert`, not both"),
            (None, None) => bail!("missing `alexander` or `seifert`"),
            (Some(pairs), None) => {
                KnotSource::Alexander(SymmetricLaurent::from_pairs(&pairs).context("alexander")?)
            }
            (None, Some(s)) => KnotSource::Seifert(
                SeifertMatrix::from_row_major(s.size, &s.entries).context("seifert")?,
            ),
        };
        let defaults = KnotFlags::default();
        let flags = KnotFlags {
            hyperbolic: self
                .flags
                .hyperbolic
                .map_or(Ok(defaults.hyperbolic), |v| v.tristate("hyperbolic"))?,
            amphicheiral: self
                .flags
                .amphicheiral
                .map_or(Ok(defaults.amphicheiral), |v| v.tristate("amphicheiral"))?,
            nontrivial: self.flags.nontrivial.unwrap_or(defaults.nontrivial),
        };
        let floer = self.floer.map(floer_data).transpose()?;
        Ok(KnotRecord::new(self.name, source, flags, floer)?)
    }

    /// The file that re-parses to `k`.
    pub fn from_record(k: &KnotRecord) -> Self {
        let (alexander, seifert) = match &k.source {
            KnotSource::Alexander(p) => (Some(p.to_pairs()), None),
            KnotSource::Seifert(v) => (
                None,
                Some(SeifertSection {
                    size: v.size(),
                    entries: v.row_major(),
                }),
            ),
        };
        let flags = FlagsSection {
            hyperbolic: Some(FlagValue::Text(k.flags.hyperbolic.to_string())),
            amphicheiral: Some(FlagValue::Text(k.flags.amphicheiral.to_string())),
            nontrivial: Some(k.flags.nontrivial),
        };
        let floer = k.floer.as_ref().map(|f| FloerSection {
            tau: f.tau,
            d_values: f
                .d_values
                .as_ref()
                .map(|d| d.iter().map(Ratio::to_string).collect()),
            d_half: f.d_half.map(|(a, b)| (a.to_string(), b.to_string())),
            rank_hfred: f
                .rank_hfred
                .as_ref()
                .map(|m| m.iter().map(|(s, r)| (s.to_string(), *r)).collect()),
        });
        KnotFile {
            name: k.name.clone(),
            alexander,
            seifert,
            flags,
            floer,
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("knot files always serialize")
    }
}

fn floer_data(f: FloerSection) -> Result<FloerData> {
    let d_values = f
        .d_values
        .map(|d| {
            d.iter()
                .map(|s| rational(s, "floer.d_values"))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let d_half = f
        .d_half
        .map(|(a, b)| {
            Ok::<_, anyhow::Error>((rational(&a, "floer.d_half")?, rational(&b, "floer.d_half")?))
        })
        .transpose()?;
    let rank_hfred = f
        .rank_hfred
        .map(|m| {
            m.into_iter()
                .map(|(k, v)| {
                    Ok((
                        k.parse::<Slope>()
                            .with_context(|| format!("floer.rank_hfred key {k:?}"))?,
                        v,
                    ))
                })
                .collect::<Result<BTreeMap<_, _>>>()
        })
        .transpose()?;
    Ok(FloerData {
        tau: f.tau,
        rank_hfred,
        d_values,
        d_half,
    })
}
