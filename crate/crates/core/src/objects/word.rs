use super::{Report, Violation};
use crate::error::{Error, ObjectKind};
use std::fmt;
use std::str::FromStr;

/// A letter of the Gog alphabet: an odd-length, strictly increasing tuple of
/// positive integers `(p1, q1, p2, q2, ..., pk)`. The odd positions `p1..pk`
/// are the values a letter introduces and the even positions `q1..q(k-1)` the
/// values it removes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GogTuple {
    entries: Vec<u32>,
}

impl GogTuple {
    /// Validates a standalone tuple; violations are reported as letter 1.
    pub fn new(entries: Vec<u32>) -> Result<Self, Error> {
        let mut report = Report::default();
        check_tuple(&entries, 1, &mut report);
        if report.ok() {
            Ok(Self { entries })
        } else {
            Err(Error::Invalid {
                kind: ObjectKind::GogTuple,
                report,
            })
        }
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<u32>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_singleton(&self) -> bool {
        self.entries.len() == 1
    }

    pub fn first(&self) -> u32 {
        self.entries[0]
    }

    pub fn last(&self) -> u32 {
        *self.entries.last().expect("tuples are nonempty")
    }

    /// Entries in odd positions `p1, p2, ..., pk` (1-based positions 1, 3, ...).
    pub fn odd_entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().step_by(2).copied()
    }

    /// Entries in even positions `q1, ..., q(k-1)`.
    pub fn even_entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().skip(1).step_by(2).copied()
    }

    /// Consecutive pairs `(p1, q1), (p2, q2), ..., (p(k-1), q(k-1))`.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.entries.len() / 2).map(|l| (self.entries[2 * l], self.entries[2 * l + 1]))
    }
}

impl fmt::Display for GogTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singleton() {
            return write!(f, "{}", self.entries[0]);
        }
        f.write_str("(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// A Gog word of size `n`: a sequence of `n` letters with entries at most `n`
/// whose first and last letters are singletons and whose induced sign matrix
/// (+1 at odd positions, -1 at even positions of letter `r` in row `r`) is an
/// alternating sign matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GogWord {
    letters: Vec<GogTuple>,
}

impl GogWord {
    pub fn new(letters: Vec<Vec<u32>>) -> Result<Self, Error> {
        let n = letters.len();
        let report = validate_gog_word(&letters, n);
        if report.ok() {
            Ok(Self {
                letters: letters
                    .into_iter()
                    .map(GogTuple::from_entries_unchecked)
                    .collect(),
            })
        } else {
            Err(Error::Invalid {
                kind: ObjectKind::GogWord,
                report,
            })
        }
    }

    pub(crate) fn from_tuples_unchecked(letters: Vec<GogTuple>) -> Self {
        debug_assert!(
            {
                let raw: Vec<Vec<u32>> = letters.iter().map(|t| t.entries.clone()).collect();
                validate_gog_word(&raw, raw.len()).ok()
            },
            "unchecked letters must form a valid word"
        );
        Self { letters }
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[GogTuple] {
        &self.letters
    }

    /// Letter `x(i)` in 1-based coordinates.
    pub fn get(&self, i: usize) -> &GogTuple {
        &self.letters[i - 1]
    }
}

impl fmt::Display for GogWord {
    /// Singletons are written bare and longer tuples parenthesized. Words of
    /// size at most 9 use juxtaposed digits (`"2(123)2"`); larger words
    /// separate everything with commas (`"1,2,(3,5,10),..."`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for t in &self.letters {
                if t.is_singleton() {
                    write!(f, "{}", t.first())?;
                } else {
                    f.write_str("(")?;
                    for v in t.entries() {
                        write!(f, "{v}")?;
                    }
                    f.write_str(")")?;
                }
            }
            Ok(())
        } else {
            for (i, t) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{t}")?;
            }
            Ok(())
        }
    }
}

impl FromStr for GogWord {
    type Err = Error;

    /// Parses both grammar forms: juxtaposed single digits (`"2(123)2"`) and
    /// the comma form (`"2,(1,2,3),2"`), which is required once any entry
    /// exceeds 9. A string containing a comma is read in the comma form.
    fn from_str(s: &str) -> Result<Self, Error> {
        let letters = if s.contains(',') {
            parse_comma_form(s)?
        } else {
            parse_compact_form(s)?
        };
        GogWord::new(letters)
    }
}

fn parse_compact_form(s: &str) -> Result<Vec<Vec<u32>>, Error> {
    let mut letters = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_ascii_whitespace() {
            continue;
        }
        if let Some(d) = c.to_digit(10) {
            letters.push(vec![d]);
        } else if c == '(' {
            let mut tuple = Vec::new();
            loop {
                match chars.next() {
                    Some(')') => break,
                    Some(d) if d.is_ascii_digit() => tuple.push(d.to_digit(10).unwrap()),
                    Some(w) if w.is_ascii_whitespace() => {}
                    Some(other) => {
                        return Err(Error::Parse(format!("unexpected {other:?} inside tuple")))
                    }
                    None => return Err(Error::Parse("unclosed tuple".into())),
                }
            }
            letters.push(tuple);
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(letters)
}

fn parse_comma_form(s: &str) -> Result<Vec<Vec<u32>>, Error> {
    // Split at top-level commas, honouring parentheses.
    let mut tokens = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (idx, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?
            }
            ',' if depth == 0 => {
                tokens.push(&s[start..idx]);
                start = idx + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    tokens.push(&s[start..]);

    let parse_int = |tok: &str| {
        tok.trim()
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("invalid value {tok:?}")))
    };
    tokens
        .into_iter()
        .map(|tok| {
            let tok = tok.trim();
            if let Some(inner) = tok.strip_prefix('(') {
                let inner = inner
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse("unclosed tuple".into()))?;
                inner.split(',').map(parse_int).collect()
            } else {
                Ok(vec![parse_int(tok)?])
            }
        })
        .collect()
}

fn check_tuple(entries: &[u32], letter: usize, report: &mut Report) {
    if entries.is_empty() || entries.len() % 2 == 0 {
        report.push(Violation::TupleHasEvenLength { letter });
    }
    for window in entries.windows(2) {
        if window[0] >= window[1] {
            report.push(Violation::TupleNotStrictlyIncreasing { letter });
            break;
        }
    }
    if entries.contains(&0) {
        report.push(Violation::TupleEntryZero { letter });
    }
}

/// Builds the sign matrix induced by a word: row `r` has +1 at the
/// odd-position entries of letter `r` and -1 at its even-position entries.
/// All entries must already be within `1..=n`.
pub(crate) fn induced_matrix(letters: &[Vec<u32>], n: usize) -> Vec<Vec<i8>> {
    let mut matrix = vec![vec![0i8; n]; n];
    for (r, letter) in letters.iter().enumerate() {
        for (idx, &v) in letter.iter().enumerate() {
            matrix[r][(v - 1) as usize] = if idx % 2 == 0 { 1 } else { -1 };
        }
    }
    matrix
}

/// Validates a word against size `n`: letter count, tuple-local conditions,
/// entry bounds, singleton endpoints, and finally that the induced sign
/// matrix is an alternating sign matrix. Reports stop at the induced-matrix
/// stage only when the structural conditions already failed.
pub fn validate_gog_word(letters: &[Vec<u32>], n: usize) -> Report {
    let mut report = Report::default();
    if letters.is_empty() {
        report.push(Violation::Empty);
        return report;
    }
    if letters.len() != n {
        report.push(Violation::WrongWordLength {
            expected: n,
            actual: letters.len(),
        });
    }
    for (idx, entries) in letters.iter().enumerate() {
        check_tuple(entries, idx + 1, &mut report);
        for &v in entries {
            if v > n as u32 {
                report.push(Violation::WordEntryExceedsSize {
                    letter: idx + 1,
                    value: v,
                });
            }
        }
    }
    if letters[0].len() != 1 {
        report.push(Violation::EndpointNotSingleton { letter: 1 });
    }
    if letters.len() > 1 && letters[letters.len() - 1].len() != 1 {
        report.push(Violation::EndpointNotSingleton {
            letter: letters.len(),
        });
    }
    if !report.ok() {
        return report;
    }
    let matrix = induced_matrix(letters, n);
    match super::Asm::new(matrix) {
        Ok(_) => {}
        Err(Error::Invalid { report: inner, .. }) => {
            report.violations.extend(inner.violations);
        }
        Err(_) => unreachable!("matrix validation only returns Invalid"),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_validates_compact_words() {
        let w: GogWord = "2(123)2".parse().unwrap();
        assert_eq!(w.size(), 3);
        assert_eq!(w.get(2).entries(), &[1, 2, 3]);
        assert_eq!(w.to_string(), "2(123)2");

        let w: GogWord = "213".parse().unwrap();
        assert_eq!(w.size(), 3);

        let w: GogWord = "25(12456)(345)(234)3".parse().unwrap();
        assert_eq!(w.size(), 6);
        assert_eq!(w.get(3).entries(), &[1, 2, 4, 5, 6]);
        assert_eq!(w.to_string(), "25(12456)(345)(234)3");
    }

    #[test]
    fn comma_form_round_trips_for_large_sizes() {
        let letters: Vec<Vec<u32>> = (1..=10).map(|v| vec![v]).collect();
        let w = GogWord::new(letters).unwrap();
        assert_eq!(w.to_string(), "1,2,3,4,5,6,7,8,9,10");
        let back: GogWord = "1,2,3,4,5,6,7,8,9,10".parse().unwrap();
        assert_eq!(back, w);

        // Small words may also be written in the comma form.
        let w: GogWord = "2,(1,2,3),2".parse().unwrap();
        assert_eq!(w.to_string(), "2(123)2");
    }

    #[test]
    fn rejects_words_with_invalid_induced_matrix() {
        // Both letters place +1 in column 2: column sums are 0 and 2.
        let report = validate_gog_word(&[vec![2], vec![2]], 2);
        assert!(report
            .violations
            .contains(&Violation::ColumnSumNotOne { col: 1, sum: 0 }));
        assert!(report
            .violations
            .contains(&Violation::ColumnSumNotOne { col: 2, sum: 2 }));
        assert!("22".parse::<GogWord>().is_err());
    }

    #[test]
    fn rejects_structural_violations() {
        let report = validate_gog_word(&[vec![1], vec![1, 2]], 2);
        assert!(report
            .violations
            .contains(&Violation::TupleHasEvenLength { letter: 2 }));

        let report = validate_gog_word(&[vec![3], vec![2, 2, 3], vec![1]], 3);
        assert!(report
            .violations
            .contains(&Violation::TupleNotStrictlyIncreasing { letter: 2 }));

        let report = validate_gog_word(&[vec![4], vec![1]], 2);
        assert!(report
            .violations
            .contains(&Violation::WordEntryExceedsSize { letter: 1, value: 4 }));

        let report = validate_gog_word(&[vec![1, 2, 3], vec![2], vec![3]], 3);
        assert!(report
            .violations
            .contains(&Violation::EndpointNotSingleton { letter: 1 }));

        let report = validate_gog_word(&[vec![1]], 2);
        assert!(report
            .violations
            .contains(&Violation::WrongWordLength { expected: 2, actual: 1 }));
    }

    #[test]
    fn tuple_accessors() {
        let t = GogTuple::new(vec![1, 2, 4, 5, 6]).unwrap();
        assert_eq!(t.odd_entries().collect::<Vec<_>>(), vec![1, 4, 6]);
        assert_eq!(t.even_entries().collect::<Vec<_>>(), vec![2, 5]);
        assert_eq!(t.pairs().collect::<Vec<_>>(), vec![(1, 2), (4, 5)]);
        assert_eq!(t.first(), 1);
        assert_eq!(t.last(), 6);
        assert!(!t.is_singleton());
        assert_eq!(t.to_string(), "(1,2,4,5,6)");

        assert!(GogTuple::new(vec![1, 2]).is_err());
        assert!(GogTuple::new(vec![2, 1, 3]).is_err());
        assert!(GogTuple::new(vec![0]).is_err());
    }

    #[test]
    fn word_of_size_one() {
        let w: GogWord = "1".parse().unwrap();
        assert_eq!(w.size(), 1);
        assert!(GogWord::new(vec![vec![1], vec![1]]).is_err());
    }
}
