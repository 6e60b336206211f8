//! TOML framed links for `cosmetic homology`.
//!
//! ```toml
//! components = 2
//! linking = [[0, 2], [2, 0]]
//! framings = ["3/1", "5/1"]
//! ```
//!
//! Diagonal linking entries are ignored; the framing takes their place.

use std::path::Path;

use anyhow::{bail, Context, Result};
use cosmetic_core::homology::FramedLink;
use cosmetic_core::Slope;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkFile {
    pub components: usize,
    pub linking: Vec<Vec<i64>>,
    pub framings: Vec<String>,
}

impl LinkFile {
    pub fn parse(text: &str) -> Result<FramedLink> {
        let f: LinkFile = toml::from_str(text)?;
        f.into_link()
    }

    pub fn read(path: &Path) -> Result<FramedLink> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        LinkFile::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    fn into_link(self) -> Result<FramedLink> {
        if self.linking.len() != self.components || self.framings.len() != self.components {
            bail!(
                "components = {} but linking has {} rows and framings has {} entries",
                self.components,
                self.linking.len(),
                self.framings.len()
            );
        }
        let framings = parse_framings(&self.framings)?;
        Ok(FramedLink::new(self.linking, framings)?)
    }
}

pub fn parse_framings<S: AsRef<str>>(items: &[S]) -> Result<Vec<Slope>> {
    items
        .iter()
        .map(|s| {
            s.as_ref()
                .parse::<Slope>()
                .with_context(|| format!("framing {:?}", s.as_ref()))
        })
        .collect()
}
