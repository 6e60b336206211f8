//! Built-in knot records used by the CLI `--builtin` switch and the golden tests.
//!
//! Floer data is included only where it is standard. `synthetic-flat` is not
//! a known knot: it is the monic degree-2 polynomial with `Δ''(1) = 0`,
//! flagged hyperbolic so the narrowing path is exercised.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::alexander::{twist_knot_polynomial, SeifertMatrix, SymmetricLaurent};
use crate::error::{Error, Result};
use crate::obstructions::{FloerData, KnotFlags, KnotRecord, KnotSource, Tristate};
use crate::slopes::Slope;

pub const NAMES: [&str; 13] = [
    "unknot",
    "trefoil",
    "figure-8",
    "twist(1)",
    "twist(-1)",
    "twist(2)",
    "twist(-2)",
    "T(2,5)",
    "T(3,4)",
    "T(3,5)",
    "kinoshita-terasaka",
    "synthetic-flat",
    "synthetic-flat-3",
];

fn flags(hyperbolic: Tristate, amphicheiral: Tristate) -> KnotFlags {
    KnotFlags {
        hyperbolic,
        amphicheiral,
        nontrivial: true,
    }
}

fn alexander(coeffs: &[i64]) -> KnotSource {
    KnotSource::Alexander(SymmetricLaurent::new(coeffs.to_vec()).expect("catalog polynomial"))
}

fn seifert(size: usize, entries: &[i64]) -> KnotSource {
    KnotSource::Seifert(
        SeifertMatrix::from_row_major(size, entries).expect("catalog Seifert matrix"),
    )
}

fn tau_only(tau: i64) -> Option<FloerData> {
    Some(FloerData {
        tau: Some(tau),
        ..Default::default()
    })
}

/// Looks up one built-in record by name.
pub fn lookup(name: &str) -> Result<KnotRecord> {
    use Tristate::{No, Unknown, Yes};
    let twist = |n: i64| KnotSource::Alexander(twist_knot_polynomial(n).expect("n != 0"));
    let (source, fl, floer) = match name {
        "unknot" => (
            alexander(&[1]),
            KnotFlags {
                hyperbolic: No,
                amphicheiral: Yes,
                nontrivial: false,
            },
            Some(FloerData {
                tau: Some(0),
                d_values: Some(vec![Ratio::from_integer(0); 3]),
                ..Default::default()
            }),
        ),
        "trefoil" => (seifert(2, &[-1, 1, 0, -1]), flags(No, No), None),
        "figure-8" => (
            seifert(2, &[1, 1, 0, -1]),
            flags(Yes, Yes),
            Some(FloerData {
                tau: Some(0),
                rank_hfred: Some(BTreeMap::from([
                    (Slope::integer(1), 1),
                    (Slope::integer(-1), 1),
                ])),
                d_values: Some(vec![Ratio::from_integer(0); 4]),
                d_half: Some((Ratio::new(1, 2), Ratio::new(-1, 2))),
            }),
        ),
        "twist(1)" => (twist(1), flags(Yes, Yes), None),
        "twist(-1)" => (twist(-1), flags(No, No), None),
        "twist(2)" => (twist(2), flags(Yes, No), None),
        "twist(-2)" => (twist(-2), flags(Yes, No), None),
        "T(2,5)" => (alexander(&[1, -1, 1]), flags(No, No), tau_only(2)),
        "T(3,4)" => (alexander(&[1, 0, -1, 1]), flags(No, No), tau_only(3)),
        "T(3,5)" => (alexander(&[-1, 1, 0, -1, 1]), flags(No, No), tau_only(4)),
        "kinoshita-terasaka" => (alexander(&[1]), flags(Yes, No), tau_only(0)),
        "synthetic-flat" => (alexander(&[7, -4, 1]), flags(Yes, Unknown), None),
        "synthetic-flat-3" => (alexander(&[5, -1, -2, 1]), flags(Unknown, Unknown), None),
        _ => return Err(Error::UnknownEntry(name.to_string())),
    };
    KnotRecord::new(name, source, fl, floer)
}

/// Every built-in record, in `NAMES` order.
pub fn builtin() -> Vec<KnotRecord> {
    NAMES
        .iter()
        .map(|n| lookup(n).expect("catalog entries are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::second_derivative_at_one;

    #[test]
    fn every_name_resolves() {
        assert_eq!(builtin().len(), NAMES.len());
        assert!(lookup("nope").is_err());
    }

    #[test]
    fn seifert_sources_match_twist_family() {
        assert_eq!(
            lookup("figure-8").unwrap().polynomial(),
            lookup("twist(1)").unwrap().polynomial()
        );
        assert_eq!(
            lookup("trefoil").unwrap().polynomial(),
            lookup("twist(-1)").unwrap().polynomial()
        );
    }

    #[test]
    fn flat_records_are_flat() {
        for n in [
            "synthetic-flat",
            "synthetic-flat-3",
            "kinoshita-terasaka",
            "unknot",
        ] {
            assert_eq!(
                second_derivative_at_one(lookup(n).unwrap().polynomial()),
                0,
                "{n}"
            );
        }
    }
}
