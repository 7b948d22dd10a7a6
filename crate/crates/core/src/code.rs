//! Binary codewords and codes.
//!
//! A codeword of length `n` is stored as its support: an `n`-bit mask where
//! neuron `i` (1-based) occupies bit `i - 1`. Codes are sets of such masks, so
//! duplicate words cannot occur and the word/support correspondence is a
//! bijection by construction.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::error::{Error, ParseError, ParseErrorKind, Result};

/// Longest supported word length.
pub const MAX_LEN: usize = 63;

/// Largest support size for which all subsets may be enumerated.
pub const MAX_ENUM_SUPPORT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    len: usize,
    mask: u64,
}

impl Codeword {
    pub fn new(len: usize, mask: u64) -> Result<Self> {
        check_len(len)?;
        if mask & !bits::full(len) != 0 {
            let index = 64 - mask.leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, n: len });
        }
        Ok(Codeword { len, mask })
    }

    /// Word with the given 1-based support.
    pub fn from_support(len: usize, support: &[usize]) -> Result<Self> {
        check_len(len)?;
        for &i in support {
            if i == 0 || i > len {
                return Err(Error::IndexOutOfRange { index: i, n: len });
            }
        }
        Ok(Codeword {
            len,
            mask: bits::mask_of(support.iter().copied()),
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// `ε_i` for a 1-based index.
    pub fn bit(&self, index: usize) -> bool {
        index >= 1 && index <= self.len && self.mask & bits::bit(index) != 0
    }

    /// Ascending 1-based indices of the firing neurons.
    pub fn support(&self) -> Vec<usize> {
        bits::index_vec(self.mask)
    }

    pub fn weight(&self) -> usize {
        bits::size(self.mask)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_string(self.len, self.mask))
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut mask = 0u64;
        let len = s.chars().count();
        check_len(len)?;
        for (pos, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => mask |= 1u64 << pos,
                other => {
                    return Err(ParseError {
                        line: 1,
                        kind: ParseErrorKind::BadCharacter {
                            column: pos + 1,
                            found: other,
                        },
                    }
                    .into())
                }
            }
        }
        Ok(Codeword { len, mask })
    }
}

pub(crate) fn word_string(len: usize, mask: u64) -> String {
    (0..len)
        .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Key whose numeric order matches the lexicographic order of the `0`/`1` strings.
fn lex_key(len: usize, mask: u64) -> u64 {
    mask.reverse_bits() >> (64 - len)
}

fn check_len(len: usize) -> Result<()> {
    if len == 0 {
        return Err(Error::ZeroLength);
    }
    if len > MAX_LEN {
        return Err(Error::CapacityExceeded {
            what: "word length",
            value: len,
            limit: MAX_LEN,
        });
    }
    Ok(())
}

/// A set of codewords of common length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Code {
    len: usize,
    words: BTreeSet<u64>,
}

impl Code {
    pub fn new<I: IntoIterator<Item = u64>>(len: usize, masks: I) -> Result<Self> {
        check_len(len)?;
        let full = bits::full(len);
        let mut words = BTreeSet::new();
        for m in masks {
            if m & !full != 0 {
                let index = 64 - m.leading_zeros() as usize;
                return Err(Error::IndexOutOfRange { index, n: len });
            }
            words.insert(m);
        }
        Ok(Code { len, words })
    }

    pub fn from_words<I: IntoIterator<Item = Codeword>>(len: usize, words: I) -> Result<Self> {
        check_len(len)?;
        let mut masks = BTreeSet::new();
        for w in words {
            if w.len != len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    found: w.len,
                });
            }
            masks.insert(w.mask);
        }
        Ok(Code { len, words: masks })
    }

    /// Every word of `{0,1}^n`.
    pub fn full_cube(len: usize) -> Result<Self> {
        check_len(len)?;
        if len > MAX_ENUM_SUPPORT {
            return Err(Error::CapacityExceeded {
                what: "word length",
                value: len,
                limit: MAX_ENUM_SUPPORT,
            });
        }
        Ok(Code {
            len,
            words: (0..1u64 << len).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        w.len == self.len && self.words.contains(&w.mask)
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.words.contains(&mask)
    }

    /// Supports as masks, in increasing numeric order.
    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().copied()
    }

    /// Words in canonical (lexicographic string) order.
    pub fn words(&self) -> Vec<Codeword> {
        let mut out: Vec<Codeword> = self
            .words
            .iter()
            .map(|&mask| Codeword {
                len: self.len,
                mask,
            })
            .collect();
        out.sort_by_key(|w| lex_key(w.len, w.mask));
        out
    }

    /// Supports that are not strictly contained in another support.
    pub fn maximal_supports(&self) -> Vec<u64> {
        maximal_sets(self.words.iter().copied())
    }

    /// True iff every subset of every support is again a support.
    ///
    /// Closure under removing a single index implies closure under all subsets.
    pub fn is_simplicial(&self) -> bool {
        self.words
            .iter()
            .all(|&m| bits::indices(m).all(|i| self.words.contains(&(m & !bits::bit(i)))))
    }

    /// The smallest simplicial code containing this one.
    ///
    /// Fails with `CapacityExceeded` when a word has more than
    /// [`MAX_ENUM_SUPPORT`] ones.
    pub fn simplicial_completion(&self) -> Result<Code> {
        let mut words = BTreeSet::new();
        for m in self.maximal_supports() {
            let weight = bits::size(m);
            if weight > MAX_ENUM_SUPPORT {
                return Err(Error::CapacityExceeded {
                    what: "word weight",
                    value: weight,
                    limit: MAX_ENUM_SUPPORT,
                });
            }
            words.extend(bits::submasks(m));
        }
        Ok(Code {
            len: self.len,
            words,
        })
    }

    /// Canonical text: sorted words, one per line, trailing newline.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.words.len() * (self.len + 1));
        for w in self.words() {
            out.push_str(&word_string(w.len, w.mask));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Code {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_code(s)
    }
}

/// Inclusion-maximal members of a family of sets, sorted by (size, lexicographic).
pub(crate) fn maximal_sets<I: IntoIterator<Item = u64>>(sets: I) -> Vec<u64> {
    let mut all: Vec<u64> = sets.into_iter().collect();
    all.sort_unstable_by(|a, b| bits::size(*b).cmp(&bits::size(*a)).then(a.cmp(b)));
    all.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for s in all {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_by(|a, b| bits::size_lex_cmp(*a, *b));
    kept
}

/// Parse the code file format: one `0`/`1` word per line, `#` comments and
/// blank lines ignored, duplicates collapsed.
pub fn parse_code(text: &str) -> Result<Code> {
    let mut len: Option<usize> = None;
    let mut words = BTreeSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let mut mask = 0u64;
        let mut count = 0usize;
        for (pos, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => {
                    if pos < 64 {
                        mask |= 1u64 << pos;
                    }
                }
                found => {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::BadCharacter {
                            column: pos + 1,
                            found,
                        },
                    }
                    .into())
                }
            }
            count += 1;
        }
        match len {
            None => {
                if count > MAX_LEN {
                    return Err(Error::CapacityExceeded {
                        what: "word length",
                        value: count,
                        limit: MAX_LEN,
                    });
                }
                len = Some(count);
            }
            Some(expected) if expected != count => {
                return Err(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::MixedLength {
                        expected,
                        found: count,
                    },
                }
                .into())
            }
            Some(_) => {}
        }
        words.insert(mask);
    }
    match len {
        Some(len) => Ok(Code { len, words }),
        None => Err(ParseError {
            line: last_line.max(1),
            kind: ParseErrorKind::EmptyCode,
        }
        .into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(words: &[&str]) -> Code {
        let text: String = words.iter().map(|w| format!("{w}\n")).collect();
        parse_code(&text).unwrap()
    }

    fn rendered(c: &Code) -> Vec<String> {
        c.words().iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn parses_two_words() {
        let c = parse_code("110\n011\n").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(rendered(&c), ["011", "110"]);
    }

    #[test]
    fn skips_comments_blanks_and_duplicates() {
        let c = parse_code("# header\n\n10\n10\r\n  \n01\n").unwrap();
        assert_eq!(rendered(&c), ["01", "10"]);
    }

    #[test]
    fn mixed_length_reports_line() {
        let err = parse_code("10\n110\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse(ParseError {
                line: 2,
                kind: ParseErrorKind::MixedLength {
                    expected: 2,
                    found: 3
                }
            })
        );
    }

    #[test]
    fn bad_character_reports_line() {
        let err = parse_code("1a0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse(ParseError {
                line: 1,
                kind: ParseErrorKind::BadCharacter {
                    column: 2,
                    found: 'a'
                }
            })
        );
    }

    #[test]
    fn empty_input_is_rejected() {
        for text in ["", "# nothing\n\n"] {
            match parse_code(text) {
                Err(Error::Parse(ParseError {
                    kind: ParseErrorKind::EmptyCode,
                    ..
                })) => {}
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn too_long_words_exceed_capacity() {
        let line = "0".repeat(64);
        assert!(matches!(
            parse_code(&line),
            Err(Error::CapacityExceeded { value: 64, .. })
        ));
    }

    #[test]
    fn support_of_words() {
        let w: Codeword = "0101".parse().unwrap();
        assert_eq!(w.support(), [2, 4]);
        assert!(w.bit(2) && !w.bit(1));
        let z: Codeword = "000".parse().unwrap();
        assert!(z.support().is_empty());
    }

    #[test]
    fn simplicial_examples() {
        assert!(code(&["000", "100"]).is_simplicial());
        assert!(!code(&["110"]).is_simplicial());
        assert!(Code::full_cube(3).unwrap().is_simplicial());
    }

    #[test]
    fn completion_examples() {
        let c = code(&["110", "011"]).simplicial_completion().unwrap();
        assert_eq!(rendered(&c), ["000", "001", "010", "011", "100", "110"]);
        let z = code(&["000"]).simplicial_completion().unwrap();
        assert_eq!(rendered(&z), ["000"]);
        let t = code(&["111"]).simplicial_completion().unwrap();
        assert_eq!(t.word_count(), 8);
    }

    #[test]
    fn canonical_rendering_is_sorted() {
        let c = code(&["11", "01", "10"]);
        assert_eq!(c.render(), "01\n10\n11\n");
    }

    #[test]
    fn maximal_supports_sorted() {
        let c = code(&["100", "010", "001", "110", "101", "011"]);
        let max: Vec<Vec<usize>> = c
            .maximal_supports()
            .into_iter()
            .map(bits::index_vec)
            .collect();
        assert_eq!(max, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
