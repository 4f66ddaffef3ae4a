//! Line-oriented sequence records.
//!
//! A record is either `a1,a2,...,an;b1,b2,...,bn` or a JSON object
//! `{"in":[...],"out":[...]}`. The form is picked by the first non-blank
//! byte: `{` means JSON. Blank lines carry no record.

use std::fmt;
use std::io::BufRead;

use bidegree::{BidegreeSequence, Error as CoreError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceRecord {
    #[serde(rename = "in")]
    pub in_degrees: Vec<i64>,
    #[serde(rename = "out")]
    pub out_degrees: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordFormat {
    Plain,
    Json,
}

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("expected exactly one ';' separating in- and out-degrees")]
    Separator,
    #[error("{side}-degree list is empty")]
    EmptySide { side: &'static str },
    #[error("invalid integer {token:?} in {side}-degree list")]
    Integer { side: &'static str, token: String },
    #[error("invalid JSON record: {0}")]
    Json(String),
}

impl SequenceRecord {
    pub fn from_sequence(seq: &BidegreeSequence) -> Self {
        let widen = |v: &[u64]| v.iter().map(|&x| x as i64).collect();
        Self { in_degrees: widen(seq.in_degrees()), out_degrees: widen(seq.out_degrees()) }
    }

    pub fn to_sequence(&self) -> Result<BidegreeSequence, CoreError> {
        BidegreeSequence::from_signed(&self.in_degrees, &self.out_degrees)
    }

    /// Parses one line; `Ok(None)` for blank lines.
    pub fn parse(line: &str) -> Result<Option<Self>, ParseError> {
        let line = line.trim();
        if line.is_empty() {
            return Ok(None);
        }
        if line.starts_with('{') {
            return serde_json::from_str(line).map(Some).map_err(|e| ParseError::Json(e.to_string()));
        }
        let mut parts = line.split(';');
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(ParseError::Separator);
        };
        Ok(Some(Self { in_degrees: parse_list(a, "in")?, out_degrees: parse_list(b, "out")? }))
    }

    pub fn render(&self, format: RecordFormat) -> String {
        match format {
            RecordFormat::Plain => self.to_string(),
            RecordFormat::Json => serde_json::to_string(self).expect("integer vectors serialize"),
        }
    }
}

fn parse_list(text: &str, side: &'static str) -> Result<Vec<i64>, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseError::EmptySide { side });
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse().map_err(|_| ParseError::Integer { side, token: tok.to_string() })
        })
        .collect()
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for SequenceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", join(&self.in_degrees), join(&self.out_degrees))
    }
}

/// A record after validation. Unequal sums are kept apart from other
/// errors because they are a verdict (not graphic), not bad input.
#[derive(Debug)]
pub enum Loaded {
    Sequence(BidegreeSequence),
    SumMismatch,
    Invalid(String),
}

pub fn load(parsed: Result<SequenceRecord, ParseError>) -> Loaded {
    match parsed.map(|r| r.to_sequence()) {
        Ok(Ok(seq)) => Loaded::Sequence(seq),
        Ok(Err(CoreError::SumMismatch { .. })) => Loaded::SumMismatch,
        Ok(Err(e)) => Loaded::Invalid(e.to_string()),
        Err(e) => Loaded::Invalid(e.to_string()),
    }
}

/// A parsed input line: its 1-based line number and the record or error.
pub type Numbered = (usize, Result<SequenceRecord, ParseError>);

/// Streams the non-blank records of `reader`. I/O errors end the stream
/// and are returned as the final item.
pub fn records<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<Numbered>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(e)),
        Ok(line) => match SequenceRecord::parse(&line) {
            Ok(None) => None,
            Ok(Some(r)) => Some(Ok((i + 1, Ok(r)))),
            Err(e) => Some(Ok((i + 1, Err(e)))),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn plain_and_json_agree() {
        let plain = SequenceRecord::parse("2,2,2,0;4,2,0,0").unwrap().unwrap();
        let json = SequenceRecord::parse(r#" {"in":[2,2,2,0],"out":[4,2,0,0]}"#).unwrap().unwrap();
        assert_eq!(plain, json);
        assert_eq!(plain.render(RecordFormat::Plain), "2,2,2,0;4,2,0,0");
        assert_eq!(plain.render(RecordFormat::Json), r#"{"in":[2,2,2,0],"out":[4,2,0,0]}"#);
    }

    #[test]
    fn whitespace_and_blank_lines() {
        assert_eq!(SequenceRecord::parse("   \t").unwrap(), None);
        let r = SequenceRecord::parse(" 1, 2 ; 2 ,1 ").unwrap().unwrap();
        assert_eq!(r.in_degrees, vec![1, 2]);
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(SequenceRecord::parse("1,2"), Err(ParseError::Separator));
        assert_eq!(SequenceRecord::parse("1;2;3"), Err(ParseError::Separator));
        assert_eq!(SequenceRecord::parse(";1"), Err(ParseError::EmptySide { side: "in" }));
        assert!(matches!(SequenceRecord::parse("1,x;1,1"), Err(ParseError::Integer { .. })));
        assert!(matches!(SequenceRecord::parse(r#"{"in":[1]}"#), Err(ParseError::Json(_))));
        assert!(matches!(SequenceRecord::parse(r#"{"in":[1.5],"out":[1]}"#), Err(ParseError::Json(_))));
    }

    #[test]
    fn negative_entries_parse_but_do_not_validate() {
        let r = SequenceRecord::parse("-1,1;0,0").unwrap().unwrap();
        assert!(r.to_sequence().is_err());
    }

    #[test]
    fn line_numbers_skip_blanks() {
        let input = "1;1\n\n1,x;1\n";
        let got: Vec<_> = records(input.as_bytes()).map(|r| r.unwrap().0).collect();
        assert_eq!(got, vec![1, 3]);
    }

    fn arb_record() -> impl Strategy<Value = SequenceRecord> {
        (1usize..20).prop_flat_map(|n| {
            (
                prop::collection::vec(any::<i64>(), n),
                prop::collection::vec(any::<i64>(), n),
            )
                .prop_map(|(a, b)| SequenceRecord { in_degrees: a, out_degrees: b })
        })
    }

    proptest! {
        #[test]
        fn parse_print_round_trip(r in arb_record(), json in any::<bool>()) {
            let format = if json { RecordFormat::Json } else { RecordFormat::Plain };
            let back = SequenceRecord::parse(&r.render(format)).unwrap().unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
