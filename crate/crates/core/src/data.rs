//! Bundled data: named cocycles, the knot table and expected values.
//!
//! Every file is compiled into the binary. Setting `QUANDLE_LAB_DATA` to a
//! directory with the same layout (`cocycles/`, `knots.tsv`, `expected/`)
//! makes lookups read from there first.

use std::path::{Path, PathBuf};

use crate::cohomology::{is_cocycle, parse_cocycle, Cochain, Ring};
use crate::error::{Error, Result};
use crate::quandle::{quandle_from_spec, Quandle};

pub const DATA_ENV: &str = "QUANDLE_LAB_DATA";

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../data/cocycles/", $name, ".cocycle")))),*]
    };
}

static COCYCLES: &[(&str, &str)] = bundled!(
    "s4-phi", "z3-phi", "theta1", "theta2", "theta3", "theta4", "theta5", "theta6", "theta7",
    "theta8", "theta9", "theta10", "3-2-A", "3-3-A-a", "3-3-A-b", "4-2-A-a", "4-2-A-b", "4-2-B-a",
    "4-2-B-b", "5-2-A", "6-2-A", "6-2-B-a", "6-2-B-b", "6-2-B-c", "eta1", "eta2", "eta11",
);

static KNOTS: &str = include_str!("../data/knots.tsv");

static EXPECTED: &[(&str, &str)] = &[
    ("knots-s4", include_str!("../data/expected/knots-s4.tsv")),
    ("knots-z3", include_str!("../data/expected/knots-z3.tsv")),
    (
        "cohomology",
        include_str!("../data/expected/cohomology.tsv"),
    ),
    ("torus", include_str!("../data/expected/torus.tsv")),
    ("twistspin", include_str!("../data/expected/twistspin.tsv")),
    ("fig8", include_str!("../data/expected/fig8.tsv")),
];

pub fn builtin_cocycle_names() -> Vec<&'static str> {
    COCYCLES.iter().map(|(n, _)| *n).collect()
}

fn override_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_ENV).map(PathBuf::from)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn from_override(rel: &str) -> Result<Option<String>> {
    match override_dir() {
        Some(dir) => {
            let p = dir.join(rel);
            if p.is_file() {
                read(&p).map(Some)
            } else {
                Ok(None)
            }
        }
        None => Ok(None),
    }
}

pub fn knot_table_text() -> Result<String> {
    Ok(from_override("knots.tsv")?.unwrap_or_else(|| KNOTS.to_string()))
}

pub fn expected_text(name: &str) -> Result<String> {
    if let Some(t) = from_override(&format!("expected/{name}.tsv"))? {
        return Ok(t);
    }
    EXPECTED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| t.to_string())
        .ok_or_else(|| Error::InvalidArgument(format!("no expected-values file `{name}`")))
}

/// A validated cocycle together with the quandle it lives on.
#[derive(Clone, Debug)]
pub struct NamedCocycle {
    pub name: String,
    pub quandle_spec: String,
    pub quandle: Quandle,
    pub cochain: Cochain,
}

/// Header fields `# quandle: <spec>` and `# coefficients: <m>` (0 means Z).
pub fn parse_header(text: &str) -> (Option<String>, Option<u64>) {
    let mut spec = None;
    let mut coeff = None;
    for line in text.lines() {
        let Some(rest) = line.trim().strip_prefix('#') else {
            continue;
        };
        if let Some((k, v)) = rest.split_once(':') {
            match k.trim() {
                "quandle" => spec = Some(v.trim().to_string()),
                "coefficients" => coeff = v.trim().parse().ok(),
                _ => {}
            }
        }
    }
    (spec, coeff)
}

fn cocycle_text(name: &str) -> Result<String> {
    if let Some(t) = from_override(&format!("cocycles/{name}.cocycle"))? {
        return Ok(t);
    }
    if let Some((_, t)) = COCYCLES.iter().find(|(n, _)| *n == name) {
        return Ok(t.to_string());
    }
    let p = Path::new(name);
    if p.is_file() {
        return read(p);
    }
    Err(Error::UnknownCocycle(name.to_string()))
}

/// Splits an optional integer multiplier: `2*eta1` → `(2, "eta1")`.
fn split_multiplier(source: &str) -> (i64, &str) {
    if let Some((k, rest)) = source.split_once('*') {
        if let Ok(k) = k.trim().parse::<i64>() {
            return (k, rest.trim());
        }
    }
    (1, source)
}

/// Loads a builtin cocycle by name, or a cocycle file by path.
///
/// `quandle` overrides the file's `# quandle:` header and `modulus`
/// overrides `# coefficients:` (`Some(0)` selects Z). The result is
/// checked to be a cocycle in the chosen ring.
pub fn load_cocycle(
    source: &str,
    quandle: Option<&str>,
    modulus: Option<u64>,
) -> Result<NamedCocycle> {
    let (k, name) = split_multiplier(source);
    let text = cocycle_text(name)?;
    let (hdr_spec, hdr_coeff) = parse_header(&text);
    let spec = quandle
        .map(str::to_string)
        .or(hdr_spec)
        .ok_or_else(|| Error::InvalidArgument(format!("cocycle `{name}` names no quandle")))?;
    let m = modulus
        .or(hdr_coeff)
        .ok_or_else(|| Error::InvalidArgument(format!("cocycle `{name}` names no coefficients")))?;
    let ring = Ring::from_modulus(m)?;
    let q = quandle_from_spec(&spec)?;
    // Parse over Z first so that a multiplier acts before reduction.
    let integral = parse_cocycle(&text, q.order(), Ring::Integers)?;
    let cochain = integral.scale(k).with_ring(ring);
    if !is_cocycle(&q, &cochain)? {
        return Err(Error::NotCocycle(format!(
            "`{source}` over {ring} on {spec}"
        )));
    }
    Ok(NamedCocycle {
        name: source.to_string(),
        quandle_spec: spec,
        quandle: q,
        cochain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_is_a_cocycle() {
        for name in builtin_cocycle_names() {
            let c = load_cocycle(name, None, None).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(!c.cochain.is_zero(), "{name}");
        }
    }

    #[test]
    fn header_fields() {
        let (s, c) = parse_header("# quandle: R:3\n# coefficients: 3\n0,1,2 2\n");
        assert_eq!(s.as_deref(), Some("R:3"));
        assert_eq!(c, Some(3));
    }

    #[test]
    fn multipliers_and_overrides() {
        // eta1 is a Z_2 cocycle only; twice it lifts to Z_4
        assert!(load_cocycle("eta1", None, Some(4)).is_err());
        let two = load_cocycle("2*eta1", None, Some(4)).unwrap();
        let one = load_cocycle("eta1", None, None).unwrap();
        assert_eq!(two.cochain.support().count(), one.cochain.support().count());
        assert!(two.cochain.support().all(|(_, c)| c == 2));
        assert!(load_cocycle("no-such-cocycle", None, None).is_err());
        let phi = load_cocycle("3-2-A", None, None).unwrap();
        assert_eq!(phi.cochain.support().count(), 6);
    }

    #[test]
    fn knot_table_is_complete() {
        let recs = crate::braid::parse_knot_table(&knot_table_text().unwrap()).unwrap();
        assert_eq!(recs.len(), 84);
        assert_eq!(recs[0].name, "3_1");
        assert_eq!(recs.last().unwrap().name, "9_49");
    }
}
