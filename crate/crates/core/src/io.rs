//! Soft-set file format.
//!
//! ```json
//! { "universe": ["a","b","c"], "attributes": ["e1","e2","e3"],
//!   "map": { "e1": ["a","c"], "e3": ["b","c"] } }
//! ```
//!
//! Profile files add a `"name"` field. Keys of `map` keep their file order
//! while parsing so that duplicate keys can be reported.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, SoftSetError};
use crate::softset::{SoftSet, SoftSpace};

#[derive(Debug, Clone, Default, PartialEq)]
struct OrderedMap(Vec<(String, Vec<String>)>);

impl Serialize for OrderedMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for OrderedMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct OrderedVisitor;

        impl<'de> Visitor<'de> for OrderedVisitor {
            type Value = OrderedMap;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object mapping attributes to lists of elements")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<OrderedMap, A::Error> {
                let mut entries = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, Vec<String>>()? {
                    entries.push((k, v));
                }
                Ok(OrderedMap(entries))
            }
        }

        deserializer.deserialize_map(OrderedVisitor)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SoftSetFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    universe: Vec<String>,
    attributes: Vec<String>,
    map: OrderedMap,
}

/// A parsed soft-set file: the soft set plus the optional `name` field.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedSoftSet {
    pub name: Option<String>,
    pub softset: SoftSet,
}

fn build(file: SoftSetFile, space: Option<&Arc<SoftSpace>>) -> Result<NamedSoftSet> {
    let parsed_space = SoftSpace::new(file.universe, file.attributes)?;
    // reuse an existing Arc when the declared space matches it
    let space = match space {
        Some(s) if **s == *parsed_space => Arc::clone(s),
        _ => parsed_space,
    };
    let softset = SoftSet::from_names(
        &space,
        file.map
            .0
            .iter()
            .map(|(k, v)| (k.as_str(), v.iter().map(String::as_str))),
    )?;
    Ok(NamedSoftSet {
        name: file.name,
        softset,
    })
}

/// Parses a soft-set document.
pub fn parse_soft_set(text: &str) -> Result<NamedSoftSet> {
    let file: SoftSetFile =
        serde_json::from_str(text).map_err(|e| SoftSetError::Parse(e.to_string()))?;
    build(file, None)
}

/// Parses a soft-set document, sharing `space` when the file declares the
/// same universe and attributes.
pub fn parse_soft_set_in(text: &str, space: &Arc<SoftSpace>) -> Result<NamedSoftSet> {
    let file: SoftSetFile =
        serde_json::from_str(text).map_err(|e| SoftSetError::Parse(e.to_string()))?;
    build(file, Some(space))
}

pub fn read_soft_set(path: &Path) -> Result<NamedSoftSet> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| SoftSetError::Parse(format!("{}: {e}", path.display())))?;
    parse_soft_set(&text).map_err(|e| match e {
        SoftSetError::Parse(msg) => SoftSetError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn to_file(f: &SoftSet, name: Option<&str>) -> SoftSetFile {
    let space = f.space();
    SoftSetFile {
        name: name.map(str::to_owned),
        universe: space.universe().to_vec(),
        attributes: space.attributes().to_vec(),
        map: OrderedMap(
            f.named_entries()
                .into_iter()
                .map(|(a, vals)| (a.to_owned(), vals.into_iter().map(str::to_owned).collect()))
                .collect(),
        ),
    }
}

/// Serializes `f` on a single line.
pub fn to_json(f: &SoftSet) -> String {
    serde_json::to_string(&to_file(f, None)).expect("soft-set file is always serializable")
}

pub fn to_json_named(f: &SoftSet, name: &str) -> String {
    serde_json::to_string(&to_file(f, Some(name))).expect("soft-set file is always serializable")
}

pub fn to_json_pretty(f: &SoftSet) -> String {
    serde_json::to_string_pretty(&to_file(f, None)).expect("soft-set file is always serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::softset::soft_equal;

    const EXAMPLE: &str = r#"{ "universe": ["a","b","c"], "attributes": ["e1","e2","e3"], "map": { "e1": ["a","c"], "e3": ["b","c"] } }"#;

    #[test]
    fn parses_example() {
        let parsed = parse_soft_set(EXAMPLE).unwrap();
        assert_eq!(parsed.name, None);
        assert_eq!(parsed.softset.to_string(), "{e1={a,c}, e3={b,c}}");
    }

    #[test]
    fn round_trips() {
        let f = parse_soft_set(EXAMPLE).unwrap().softset;
        let back = parse_soft_set(&to_json(&f)).unwrap().softset;
        assert!(soft_equal(&f, &back).unwrap());
        let named = parse_soft_set(&to_json_named(&f, "ABC")).unwrap();
        assert_eq!(named.name.as_deref(), Some("ABC"));
    }

    #[test]
    fn rejects_bad_tokens() {
        let cases = [
            (
                r#"{"universe":["a","a"],"attributes":["e1"],"map":{}}"#,
                SoftSetError::DuplicateElement("a".into()),
            ),
            (
                r#"{"universe":["a"],"attributes":["e1","e1"],"map":{}}"#,
                SoftSetError::DuplicateAttribute("e1".into()),
            ),
            (
                r#"{"universe":["a"],"attributes":["e1"],"map":{"e2":[]}}"#,
                SoftSetError::UnknownAttribute("e2".into()),
            ),
            (
                r#"{"universe":["a"],"attributes":["e1"],"map":{"e1":["q"]}}"#,
                SoftSetError::UnknownElement("q".into()),
            ),
            (
                r#"{"universe":["a"],"attributes":["e1"],"map":{"e1":[],"e1":["a"]}}"#,
                SoftSetError::DuplicateAttribute("e1".into()),
            ),
        ];
        for (text, expected) in cases {
            assert_eq!(parse_soft_set(text).unwrap_err(), expected, "{text}");
        }
        assert!(matches!(parse_soft_set("{"), Err(SoftSetError::Parse(_))));
        assert!(matches!(
            parse_soft_set(r#"{"universe":["a"],"attributes":["e1"],"map":{},"extra":1}"#),
            Err(SoftSetError::Parse(_))
        ));
    }

    #[test]
    fn shares_matching_space() {
        let f = parse_soft_set(EXAMPLE).unwrap().softset;
        let g = parse_soft_set_in(EXAMPLE, f.space()).unwrap().softset;
        assert!(Arc::ptr_eq(f.space(), g.space()));
    }
}
