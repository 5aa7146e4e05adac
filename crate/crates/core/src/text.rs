//! Text shorthands used on the command line.
//!
//! * `kupisch:5,5,6,6,6` or a bare `5,5,6,6,6`: a Kupisch series. A series
//!   ending in 1 is read as linear, anything else as cyclic. `cyclic:` and
//!   `linear:` prefixes force the kind.
//! * `rel:8:3x2,5x2,8x3`: a cyclic relation system, `start x arrows`.
//! * `3,5`: the module `M(3,5)`.

use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::module::UniserialModule;
use crate::relations::{Relation, RelationSystem};

fn number(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a nonnegative integer, got {s:?}")))
}

pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    s.split(',').map(number).collect()
}

pub fn parse_relations(s: &str) -> Result<RelationSystem> {
    let body = s.trim().strip_prefix("rel:").unwrap_or(s.trim());
    let (n, list) = body
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected rel:N:startxarrows,..., got {s:?}")))?;
    let relations = list
        .split(',')
        .map(|item| {
            let (start, arrows) = item
                .split_once('x')
                .ok_or_else(|| Error::Parse(format!("expected startxarrows, got {item:?}")))?;
            Ok(Relation {
                start: number(start)?,
                arrows: number(arrows)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    RelationSystem::new(number(n)?, relations)
}

/// Parses any algebra shorthand.
pub fn parse_algebra(s: &str) -> Result<Algebra> {
    let s = s.trim();
    if s.starts_with("rel:") {
        return parse_relations(s)?.to_algebra();
    }
    let (kind, body) = if let Some(rest) = s.strip_prefix("cyclic:") {
        (Some(Kind::Cyclic), rest)
    } else if let Some(rest) = s.strip_prefix("linear:") {
        (Some(Kind::Linear), rest)
    } else {
        (None, s.strip_prefix("kupisch:").unwrap_or(s))
    };
    let kupisch = parse_list(body)?;
    let kind = kind.unwrap_or(if kupisch.last() == Some(&1) {
        Kind::Linear
    } else {
        Kind::Cyclic
    });
    Algebra::new(kind, kupisch)
}

/// Reads an algebra from a file body: a JSON algebra document, a JSON
/// relation document, or a text shorthand.
pub fn parse_algebra_document(body: &str) -> Result<Algebra> {
    let trimmed = body.trim();
    if trimmed.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        if value.get("relations").is_some() {
            let rels: RelationSystem = serde_json::from_value(value).map_err(json_error)?;
            return rels.to_algebra();
        }
        return serde_json::from_value(value).map_err(json_error);
    }
    parse_algebra(trimmed)
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_module(s: &str) -> Result<UniserialModule> {
    match parse_list(s)?.as_slice() {
        [top, length] => Ok(UniserialModule::new(*top, *length)),
        _ => Err(Error::Parse(format!(
            "expected a module as top,length, got {s:?}"
        ))),
    }
}

pub fn format_list(values: &[usize]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthands() {
        assert_eq!(
            parse_algebra("kupisch:5,5,6,6,6").unwrap().kupisch(),
            &[5, 5, 6, 6, 6]
        );
        assert_eq!(parse_algebra("2,1").unwrap().kind(), Kind::Linear);
        assert_eq!(parse_algebra("cyclic:2,3,3").unwrap().kind(), Kind::Cyclic);
        assert_eq!(
            parse_algebra("rel:8:3x2,5x2,8x3").unwrap().kupisch(),
            &[4, 3, 2, 3, 2, 5, 4, 3]
        );
        assert!(parse_algebra("2,4").is_err());
        assert!(parse_algebra("rel:3:1x2;2x3").is_err());
        assert!(parse_algebra("").is_err());
        assert_eq!(parse_module("3,5").unwrap(), UniserialModule::new(3, 5));
        assert!(parse_module("3").is_err());
    }

    #[test]
    fn documents() {
        let a = parse_algebra_document(r#"{"kind":"linear","kupisch":[2,1]}"#).unwrap();
        assert_eq!(a.kind(), Kind::Linear);
        let b = parse_algebra_document(
            r#"{"vertices":3,"relations":[{"start":1,"arrows":2},{"start":2,"arrows":3}]}"#,
        )
        .unwrap();
        assert_eq!(b.kupisch(), &[2, 3, 3]);
        assert!(parse_algebra_document(r#"{"kind":"cyclic","kupisch":[2,4]}"#).is_err());
        assert_eq!(parse_algebra_document("kupisch:2,2\n").unwrap().n(), 2);
    }
}
