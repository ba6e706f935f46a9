//! Compact string codec and line-oriented design files.
//!
//! A design whose leave is in canonical position is stored as one character
//! per triple: sort the triples by (first, second) entry and record the third
//! entries. Numbers 0-9 map to characters `0`-`9`, numbers from 10 map to
//! `a`, `b`, ... Decoding walks the lexicographically least uncovered
//! non-leave pair, which for pair-disjoint triples in (first, second) order is
//! always the (first, second) of the next triple.
//!
//! PBD(v,{3,5*}) lines use the same scheme with the pairs inside the (fixed,
//! normalized) quintuple block pre-covered, giving strings of length
//! `(v(v-1)/2 - 10) / 3`.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use thiserror::Error;

use crate::design::{expected_leave_and_blocks, Claim, Design, Pair, Pbd35, PointId, Triple, validate};
use crate::seeds::canonical_leave;

/// Character for a point value: `0`-`9` then `a`, `b`, ...
pub fn point_char(p: u8) -> char {
    if p < 10 {
        (b'0' + p) as char
    } else {
        (b'a' + p - 10) as char
    }
}

/// Inverse of [`point_char`].
pub fn char_point(c: char) -> Option<u8> {
    match c {
        '0'..='9' => Some(c as u8 - b'0'),
        'a'..='z' => Some(c as u8 - b'a' + 10),
        _ => None,
    }
}

/// Prints a pair list as comma-separated two-character tokens, e.g.
/// `01,23,45`.
pub fn pairs_string(pairs: &[Pair]) -> String {
    let mut s = String::new();
    for (i, q) in pairs.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}{}", point_char(q.lo().0), point_char(q.hi().0));
    }
    s
}

pub fn parse_pairs(s: &str) -> Option<Vec<Pair>> {
    if s.is_empty() {
        return Some(Vec::new());
    }
    let mut pairs = Vec::new();
    for tok in s.split(',') {
        let mut it = tok.chars();
        let a = char_point(it.next()?)?;
        let b = char_point(it.next()?)?;
        if it.next().is_some() || a == b {
            return None;
        }
        pairs.push(Pair::of(a, b));
    }
    Some(pairs)
}

#[derive(Debug, Error)]
pub enum CodecError {
    #[error("design leave is not in canonical position")]
    NonCanonicalLeave,
    #[error("payload length {actual} does not match the {expected} blocks of order {v}")]
    LengthMismatch { v: usize, expected: usize, actual: usize },
    #[error("malformed string at character {index}: {reason}")]
    MalformedString { index: usize, reason: String },
    #[error("decoded design fails validation")]
    InvalidDesign,
}

/// Encodes a design whose leave equals `canonical_leave(v)`.
pub fn encode(design: &Design) -> Result<String, CodecError> {
    if design.leave() != canonical_leave(design.v()) {
        return Err(CodecError::NonCanonicalLeave);
    }
    // Triples are stored sorted, which is exactly (first, second) order.
    Ok(design
        .triples()
        .iter()
        .map(|t| point_char(t.c().0))
        .collect())
}

/// Decodes a compact payload against an explicit leave.
pub fn decode_with_leave(s: &str, v: usize, leave: &[Pair]) -> Result<Design, CodecError> {
    let expected = (v * (v - 1) / 2 - leave.len()) / 3;
    decode_raw(s, v, leave, expected).and_then(|triples| {
        let design = Design::new(v, triples).map_err(|_| CodecError::InvalidDesign)?;
        if !validate(&design, Claim::Pts).is_valid() || design.leave() != leave {
            return Err(CodecError::InvalidDesign);
        }
        Ok(design)
    })
}

/// Decodes a compact payload as an MMPTS(v) with the canonical leave.
pub fn decode(s: &str, v: usize) -> Result<Design, CodecError> {
    let leave = canonical_leave(v);
    let (_, blocks) = expected_leave_and_blocks(v);
    let triples = decode_raw(s, v, &leave, blocks)?;
    let design = Design::new(v, triples).map_err(|_| CodecError::InvalidDesign)?;
    if !validate(&design, Claim::Mmpts).is_valid() {
        return Err(CodecError::InvalidDesign);
    }
    Ok(design)
}

fn decode_raw(
    s: &str,
    v: usize,
    precovered: &[Pair],
    expected_len: usize,
) -> Result<Vec<Triple>, CodecError> {
    if s.chars().count() != expected_len {
        return Err(CodecError::LengthMismatch {
            v,
            expected: expected_len,
            actual: s.chars().count(),
        });
    }
    let mut covered = vec![false; v * v];
    for q in precovered {
        covered[q.lo().index() * v + q.hi().index()] = true;
    }
    let mut triples = Vec::with_capacity(expected_len);
    let mut cursor = (0usize, 1usize); // scan resumes here; earlier pairs stay covered
    for (index, ch) in s.chars().enumerate() {
        let k = char_point(ch).ok_or_else(|| CodecError::MalformedString {
            index,
            reason: format!("invalid character {ch:?}"),
        })? as usize;
        // Lexicographically least uncovered non-leave pair.
        let (mut i, mut j) = cursor;
        loop {
            if j >= v {
                i += 1;
                j = i + 1;
                if i >= v - 1 {
                    return Err(CodecError::MalformedString {
                        index,
                        reason: "no uncovered pair remains".into(),
                    });
                }
                continue;
            }
            if !covered[i * v + j] {
                break;
            }
            j += 1;
        }
        cursor = (i, j);
        if k <= j || k >= v {
            return Err(CodecError::MalformedString {
                index,
                reason: format!("third point {k} out of range for pair ({i},{j})"),
            });
        }
        for (x, y) in [(i, j), (i, k), (j, k)] {
            if covered[x * v + y] {
                return Err(CodecError::MalformedString {
                    index,
                    reason: format!("pair ({x},{y}) already covered"),
                });
            }
            covered[x * v + y] = true;
        }
        triples.push(Triple::of(i as u8, j as u8, k as u8));
    }
    Ok(triples)
}

/// Encodes a PBD(v,{3,5*}) whose quintuple block is `{0,1,2,3,4}`.
pub fn encode_pbd(pbd: &Pbd35) -> Result<String, CodecError> {
    if pbd.quintuple() != [PointId(0), PointId(1), PointId(2), PointId(3), PointId(4)] {
        return Err(CodecError::NonCanonicalLeave);
    }
    Ok(pbd
        .triples()
        .iter()
        .map(|t| point_char(t.c().0))
        .collect())
}

/// Decodes a PBD(v,{3,5*}) payload; the quintuple block is `{0,1,2,3,4}`.
pub fn decode_pbd(s: &str, v: usize) -> Result<Pbd35, CodecError> {
    let mut inside = Vec::new();
    for i in 0..5u8 {
        for j in i + 1..5u8 {
            inside.push(Pair::of(i, j));
        }
    }
    let expected = (v * (v - 1) / 2 - 10) / 3;
    let triples = decode_raw(s, v, &inside, expected)?;
    let quintuple = [PointId(0), PointId(1), PointId(2), PointId(3), PointId(4)];
    Pbd35::new(v, triples, quintuple).map_err(|_| CodecError::InvalidDesign)
}

/// A corpus of designs of one order, as stored in an archive file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub v: usize,
    /// `Q`, `N` or `-`; recorded because a `v ≡ 4 (mod 6)` line does not
    /// reveal its type without recomputation.
    pub type_tag: char,
    pub designs: Vec<Design>,
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("bad header: {0}")]
    BadHeader(String),
    #[error("line {line}: {source}")]
    BadLine {
        line: usize,
        #[source]
        source: CodecError,
    },
}

/// Reads a `# mmpts` archive; every line is validated as an MMPTS.
pub fn read_file(path: &Path) -> Result<Corpus, FileError> {
    let reader = BufReader::new(fs::File::open(path)?);
    read_corpus(reader)
}

pub fn read_corpus(reader: impl BufRead) -> Result<Corpus, FileError> {
    let mut lines = reader.lines();
    let header = lines
        .next()
        .ok_or_else(|| FileError::BadHeader("empty file".into()))??;
    let (v, type_tag, leave) = parse_header(&header)?;
    if leave != canonical_leave(v) {
        return Err(FileError::BadHeader(format!(
            "leave {} is not the canonical leave of order {v}",
            pairs_string(&leave)
        )));
    }
    let mut designs = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let design = decode(line, v).map_err(|source| FileError::BadLine {
            line: i + 2,
            source,
        })?;
        designs.push(design);
    }
    Ok(Corpus { v, type_tag, designs })
}

fn parse_header(header: &str) -> Result<(usize, char, Vec<Pair>), FileError> {
    let bad = |msg: &str| FileError::BadHeader(msg.to_string());
    let rest = header
        .strip_prefix("# mmpts ")
        .ok_or_else(|| bad("expected `# mmpts v=<n> type=<Q|N|-> leave=<pairs>`"))?;
    let mut v = None;
    let mut type_tag = None;
    let mut leave = None;
    for field in rest.split_whitespace() {
        if let Some(x) = field.strip_prefix("v=") {
            v = Some(x.parse::<usize>().map_err(|_| bad("bad v field"))?);
        } else if let Some(x) = field.strip_prefix("type=") {
            let mut it = x.chars();
            match (it.next(), it.next()) {
                (Some(c @ ('Q' | 'N' | '-')), None) => type_tag = Some(c),
                _ => return Err(bad("type must be Q, N or -")),
            }
        } else if let Some(x) = field.strip_prefix("leave=") {
            leave = Some(parse_pairs(x).ok_or_else(|| bad("bad leave field"))?);
        } else {
            return Err(bad(&format!("unknown header field {field:?}")));
        }
    }
    match (v, type_tag, leave) {
        (Some(v), Some(t), Some(l)) => Ok((v, t, l)),
        _ => Err(bad("missing header field")),
    }
}

/// Writes a corpus in the archive format; designs must carry the canonical
/// leave of their order.
pub fn write_file(path: &Path, corpus: &Corpus) -> Result<(), FileError> {
    let mut out = io::BufWriter::new(fs::File::create(path)?);
    write_corpus(&mut out, corpus)?;
    out.flush()?;
    Ok(())
}

pub fn write_corpus(out: &mut impl Write, corpus: &Corpus) -> Result<(), FileError> {
    writeln!(
        out,
        "# mmpts v={} type={} leave={}",
        corpus.v,
        corpus.type_tag,
        pairs_string(&canonical_leave(corpus.v))
    )?;
    for d in &corpus.designs {
        let line = encode(d).map_err(|source| FileError::BadLine { line: 0, source })?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Reads a `# pbd35` archive.
pub fn read_pbd_file(path: &Path) -> Result<Vec<Pbd35>, FileError> {
    let reader = BufReader::new(fs::File::open(path)?);
    let mut lines = reader.lines();
    let header = lines
        .next()
        .ok_or_else(|| FileError::BadHeader("empty file".into()))??;
    let rest = header
        .strip_prefix("# pbd35 ")
        .ok_or_else(|| FileError::BadHeader("expected `# pbd35 v=<n> block5=01234`".into()))?;
    let mut v = None;
    for field in rest.split_whitespace() {
        if let Some(x) = field.strip_prefix("v=") {
            v = Some(
                x.parse::<usize>()
                    .map_err(|_| FileError::BadHeader("bad v field".into()))?,
            );
        } else if field != "block5=01234" {
            return Err(FileError::BadHeader(format!("unknown header field {field:?}")));
        }
    }
    let v = v.ok_or_else(|| FileError::BadHeader("missing v field".into()))?;
    let mut out = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(decode_pbd(line, v).map_err(|source| FileError::BadLine {
            line: i + 2,
            source,
        })?);
    }
    Ok(out)
}

pub fn write_pbd_file(path: &Path, v: usize, pbds: &[Pbd35]) -> Result<(), FileError> {
    let mut out = io::BufWriter::new(fs::File::create(path)?);
    writeln!(out, "# pbd35 v={v} block5=01234")?;
    for p in pbds {
        let line = encode_pbd(p).map_err(|source| FileError::BadLine { line: 0, source })?;
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;

    #[test]
    fn decode_order12_first_row() {
        let d = decode("468ab798abb8ab7aa99b", 12).unwrap();
        let first_five: Vec<Triple> = d.triples()[..5].to_vec();
        assert_eq!(
            first_five,
            vec![
                Triple::of(0, 2, 4),
                Triple::of(0, 3, 6),
                Triple::of(0, 5, 8),
                Triple::of(0, 7, 10),
                Triple::of(0, 9, 11),
            ]
        );
        assert_eq!(d.triples().len(), 20);
    }

    #[test]
    fn order12_row1_full_triple_set() {
        let d = decode("468ab798abb8ab7aa99b", 12).unwrap();
        let expected = Design::from_arrays(
            12,
            &[
                [0, 2, 4], [0, 3, 6], [0, 5, 8], [0, 7, 10], [0, 9, 11],
                [1, 2, 7], [1, 3, 9], [1, 4, 8], [1, 5, 10], [1, 6, 11],
                [2, 5, 11], [2, 6, 8], [2, 9, 10], [3, 4, 11], [3, 5, 7],
                [3, 8, 10], [4, 6, 10], [4, 7, 9], [5, 6, 9], [7, 8, 11],
            ],
        )
        .unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn encode_round_trips_order12_rows() {
        for s in known::MMPTS12_STRINGS {
            let d = decode(s, 12).unwrap();
            assert_eq!(encode(&d).unwrap(), *s);
        }
    }

    #[test]
    fn truncated_payload_is_length_mismatch() {
        let err = decode("468ab798abb8ab7aa99", 12).unwrap_err();
        assert!(matches!(err, CodecError::LengthMismatch { expected: 20, actual: 19, .. }));
    }

    #[test]
    fn corrupted_character_is_detected() {
        // Flip one character; either the rule breaks immediately or the
        // decoded design fails MMPTS validation.
        let err = decode("568ab798abb8ab7aa99b", 12);
        assert!(err.is_err());
    }

    #[test]
    fn non_canonical_leave_refuses_encode() {
        // Swap two non-leave labels so the triples change but the leave
        // stays canonical; then swap a leave label to break it.
        let d = decode("468ab798abb8ab7aa99b", 12).unwrap();
        let mut map: Vec<u8> = (0..12).map(|i| i as u8).collect();
        map.swap(0, 2);
        let e = d.relabel(&map);
        assert!(matches!(encode(&e), Err(CodecError::NonCanonicalLeave)));
    }

    #[test]
    fn header_round_trip() {
        let corpus = Corpus {
            v: 12,
            type_tag: '-',
            designs: known::MMPTS12_STRINGS
                .iter()
                .map(|s| decode(s, 12).unwrap())
                .collect(),
        };
        let mut buf = Vec::new();
        write_corpus(&mut buf, &corpus).unwrap();
        let back = read_corpus(io::BufReader::new(&buf[..])).unwrap();
        assert_eq!(back, corpus);
    }

    #[test]
    fn header_mismatch_reports_line() {
        let text = "# mmpts v=12 type=- leave=01,23,45,67,89,ab\n468ab798abb8ab7aa99b\n468ab798abb8ab7aa9\n";
        let err = read_corpus(io::BufReader::new(text.as_bytes())).unwrap_err();
        match err {
            FileError::BadLine { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
