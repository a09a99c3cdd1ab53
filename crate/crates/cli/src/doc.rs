//! TOML surface documents.
//!
//! ```toml
//! name = "degree-13 hypersurface"
//! c1_sq = 1053          # or [num, den] for a fraction
//! c2 = 1599
//!
//! [[singularities]]
//! kind = "A"
//! n = 1
//! count = 732
//! ```
//!
//! Repeated `[[singularities]]` entries with the same type are merged and
//! zero counts are dropped, so re-serializing a parsed document yields a
//! normalized equivalent.

use num::ToPrimitive;
use serde::{Deserialize, Serialize};

use bigcot_core::{frac, rat, AdeSingularity, DuValKind, Rational, SingularityProfile, SurfaceRecord};

use crate::error::CliError;

#[derive(Debug, Serialize, Deserialize)]
pub struct SurfaceDocument {
    pub name: String,
    pub c1_sq: RationalField,
    pub c2: RationalField,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub singularities: Vec<SingularityEntry>,
}

/// Integer, or `[num, den]` pair.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalField {
    Int(i64),
    Pair(i64, i64),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SingularityEntry {
    pub kind: KindField,
    pub n: i64,
    pub count: u64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub enum KindField {
    A,
    D,
    E,
}

impl RationalField {
    pub fn to_rational(&self) -> Result<Rational, CliError> {
        match *self {
            RationalField::Int(n) => Ok(rat(n)),
            RationalField::Pair(_, 0) => Err(CliError::Usage(
                "fraction denominator must be nonzero".to_string(),
            )),
            RationalField::Pair(n, d) => Ok(frac(n, d)),
        }
    }

    pub fn from_rational(r: &Rational) -> Result<Self, CliError> {
        let out_of_range =
            || CliError::Usage("value does not fit the document's integer range".to_string());
        let numer = r.numer().to_i64().ok_or_else(out_of_range)?;
        if r.is_integer() {
            Ok(RationalField::Int(numer))
        } else {
            let denom = r.denom().to_i64().ok_or_else(out_of_range)?;
            Ok(RationalField::Pair(numer, denom))
        }
    }
}

/// Parse a document; syntax and type errors come back with the TOML
/// position.
pub fn parse_document(text: &str) -> Result<SurfaceDocument, CliError> {
    toml::from_str(text).map_err(|e| CliError::Usage(format!("invalid surface document: {e}")))
}

/// Semantic validation: singularity indices must define real ADE types.
pub fn document_to_record(doc: &SurfaceDocument) -> Result<SurfaceRecord, CliError> {
    let mut profile = SingularityProfile::new();
    for entry in &doc.singularities {
        let kind = match entry.kind {
            KindField::A => DuValKind::A,
            KindField::D => DuValKind::D,
            KindField::E => DuValKind::E,
        };
        let s = AdeSingularity::new(kind, entry.n)?;
        profile.add(s, entry.count);
    }
    Ok(SurfaceRecord::new(
        doc.name.clone(),
        doc.c1_sq.to_rational()?,
        doc.c2.to_rational()?,
        profile,
    ))
}

/// Normalized document for a record: profile entries sorted and merged.
pub fn record_to_document(record: &SurfaceRecord) -> Result<SurfaceDocument, CliError> {
    let singularities = record
        .profile
        .iter()
        .map(|(s, count)| SingularityEntry {
            kind: match s.kind() {
                DuValKind::A => KindField::A,
                DuValKind::D => KindField::D,
                DuValKind::E => KindField::E,
            },
            n: s.index() as i64,
            count,
        })
        .collect();
    Ok(SurfaceDocument {
        name: record.name.clone(),
        c1_sq: RationalField::from_rational(&record.c1_sq)?,
        c2: RationalField::from_rational(&record.c2)?,
        singularities,
    })
}

pub fn serialize_document(doc: &SurfaceDocument) -> Result<String, CliError> {
    toml::to_string(doc).map_err(|e| CliError::Usage(format!("cannot serialize document: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    const D13: &str = r#"
name = "degree-13 hypersurface, record nodes"
c1_sq = 1053
c2 = 1599

[[singularities]]
kind = "A"
n = 1
count = 732
"#;

    #[test]
    fn parses_a_plain_document() {
        let doc = parse_document(D13).unwrap();
        let record = document_to_record(&doc).unwrap();
        assert_eq!(record.c1_sq, rat(1053));
        assert_eq!(record.profile.total_count(), 732);
    }

    #[test]
    fn parses_fraction_pairs() {
        let doc = parse_document("name = \"x\"\nc1_sq = [21, 2]\nc2 = [-3, 6]\n").unwrap();
        let record = document_to_record(&doc).unwrap();
        assert_eq!(record.c1_sq, frac(21, 2));
        assert_eq!(record.c2, frac(-1, 2));
    }

    #[test]
    fn rejects_zero_denominators() {
        let doc = parse_document("name = \"x\"\nc1_sq = [1, 0]\nc2 = 5\n").unwrap();
        let err = document_to_record(&doc).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let err = parse_document("name = \"x\"\nc1_sq = oops\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn bad_singularity_index_is_a_domain_error() {
        let text = "name = \"x\"\nc1_sq = 1\nc2 = 1\n\n[[singularities]]\nkind = \"D\"\nn = 3\ncount = 1\n";
        let doc = parse_document(text).unwrap();
        let err = document_to_record(&doc).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("D_n requires n >= 4"));
    }

    #[test]
    fn normalization_merges_and_drops_entries() {
        let text = "name = \"x\"\nc1_sq = 9\nc2 = 4\n\n\
            [[singularities]]\nkind = \"A\"\nn = 2\ncount = 3\n\n\
            [[singularities]]\nkind = \"A\"\nn = 1\ncount = 0\n\n\
            [[singularities]]\nkind = \"A\"\nn = 2\ncount = 4\n";
        let record = document_to_record(&parse_document(text).unwrap()).unwrap();
        let normalized = record_to_document(&record).unwrap();
        assert_eq!(normalized.singularities.len(), 1);
        assert_eq!(normalized.singularities[0].count, 7);

        // serialize -> parse is a fixpoint
        let serialized = serialize_document(&normalized).unwrap();
        let reparsed = document_to_record(&parse_document(&serialized).unwrap()).unwrap();
        assert_eq!(reparsed, record);
        let again = serialize_document(&record_to_document(&reparsed).unwrap()).unwrap();
        assert_eq!(again, serialized);
    }
}
