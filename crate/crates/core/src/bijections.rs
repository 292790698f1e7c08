//! Conversions between the object families: triangle ↔ shape, the Δ map to
//! Magog triangles and its inverse, Gog word ↔ ASM, Gog word ↔ monotone
//! triangle, and the composed ASM ↔ triangle maps.

use crate::error::{Error, ObjectKind};
use crate::growth::{first_incompatibility, ColumnWord};
use crate::objects::{
    find_gaps_magog, find_gaps_monotone, rows_from_json, rows_to_json, Asm, GogTuple, GogWord,
    MagogTriangle, MonotoneTriangle, Report, Violation,
};
use std::fmt;

/// The difference array of a gapless monotone triangle of size `n`: a
/// triangular 0/1 array with `n − 1` rows, `s(i,j) = a(i,j) − a(i+1,j)`.
/// Column `j` of the triangle, read bottom-up, is the column word
/// `f^(n−j)`; consecutive column words must be compatible in the sense of
/// [`crate::growth::columns_compatible`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    rows: Vec<Vec<u8>>,
}

impl Shape {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self, Error> {
        let mut report = Report::default();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                report.push(Violation::NotTriangular {
                    row: i + 1,
                    len: row.len(),
                    expected: i + 1,
                });
            }
        }
        if report.ok() {
            for (i, row) in rows.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v > 1 {
                        report.push(Violation::NotBit {
                            row: i + 1,
                            col: j + 1,
                        });
                    }
                }
            }
        }
        if !report.ok() {
            return Err(Error::Invalid {
                kind: ObjectKind::Shape,
                report,
            });
        }
        let shape = Self { rows };
        let words = shape.column_words();
        for j in 0..words.len().saturating_sub(1) {
            if let Some(index) = first_incompatibility(&words[j], &words[j + 1]) {
                return Err(Error::IncompatibleColumns {
                    left: j + 1,
                    right: j + 2,
                    index,
                });
            }
        }
        Ok(shape)
    }

    /// Number of rows (one less than the size of the associated triangle).
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Size of the monotone triangle this shape describes.
    pub fn triangle_size(&self) -> usize {
        self.rows.len() + 1
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Entry `s(i,j)` in 1-based coordinates.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i - 1][j - 1]
    }

    /// Column words `f^(1), …, f^(m)` where `m` is the number of rows:
    /// `f^(j)` has length `j` and entry `k` equal to `s(m+1−k, m+1−j)`.
    pub fn column_words(&self) -> Vec<ColumnWord> {
        let m = self.rows.len();
        (1..=m)
            .map(|j| {
                let bits: Vec<u8> = (1..=j).map(|k| self.rows[m - k][m - j]).collect();
                ColumnWord::new(&bits).expect("shape entries are bits")
            })
            .collect()
    }

    /// Rebuilds a shape from its column words; word `j` (1-based) must have
    /// length `j` and consecutive words must be compatible.
    pub fn from_column_words(words: &[ColumnWord]) -> Result<Self, Error> {
        for (idx, w) in words.iter().enumerate() {
            if w.len() != idx + 1 {
                return Err(Error::Dimension {
                    what: "column word length",
                    expected: idx + 1,
                    actual: w.len(),
                });
            }
        }
        for j in 0..words.len().saturating_sub(1) {
            if let Some(index) = first_incompatibility(&words[j], &words[j + 1]) {
                return Err(Error::IncompatibleColumns {
                    left: j + 1,
                    right: j + 2,
                    index,
                });
            }
        }
        Ok(Self::from_column_words_unchecked(words))
    }

    pub(crate) fn from_column_words_unchecked(words: &[ColumnWord]) -> Self {
        let m = words.len();
        let mut rows: Vec<Vec<u8>> = (0..m).map(|i| vec![0u8; i + 1]).collect();
        for (idx, w) in words.iter().enumerate() {
            let j = idx + 1;
            for k in 1..=j {
                rows[m - k][m - j] = w.get(k);
            }
        }
        Self { rows }
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Self::new(rows_from_json(text)?)
    }

    pub fn to_json(&self) -> String {
        rows_to_json(&self.rows)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::objects::format_rows(&self.rows, f)
    }
}

/// The shape of a gapless monotone triangle. A triangle with a gap has a
/// column difference exceeding 1 and is rejected with its first gap.
pub fn shape_of(t: &MonotoneTriangle) -> Result<Shape, Error> {
    if let Some(&gap) = find_gaps_monotone(t).first() {
        return Err(Error::GapInDomain(gap));
    }
    let n = t.size();
    let rows: Vec<Vec<u8>> = (1..n)
        .map(|i| (1..=i).map(|j| (t.get(i, j) - t.get(i + 1, j)) as u8).collect())
        .collect();
    Ok(Shape::new(rows)
        .expect("difference array of a gapless monotone triangle is a valid shape"))
}

/// The gapless monotone triangle with the given shape: bottom row `1..n`,
/// and `a(i,j) = a(i+1,j) + s(i,j)` working upward.
pub fn shape_to_triangle(s: &Shape) -> MonotoneTriangle {
    let n = s.triangle_size();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
    rows[n - 1] = (1..=n as u32).collect();
    for i in (0..n - 1).rev() {
        rows[i] = (0..=i)
            .map(|j| rows[i + 1][j] + s.rows()[i][j] as u32)
            .collect();
    }
    MonotoneTriangle::from_rows_unchecked(rows)
}

/// The Δ map: `b(i,j) = a(i,j) + i − j`. Defined exactly on gapless
/// monotone triangles; the result is a gapless Magog triangle.
pub fn delta(t: &MonotoneTriangle) -> Result<MagogTriangle, Error> {
    if let Some(&gap) = find_gaps_monotone(t).first() {
        return Err(Error::GapInDomain(gap));
    }
    let rows: Vec<Vec<u32>> = (1..=t.size())
        .map(|i| {
            (1..=i)
                .map(|j| (t.get(i, j) as i64 + i as i64 - j as i64) as u32)
                .collect()
        })
        .collect();
    Ok(MagogTriangle::from_rows_unchecked(rows))
}

/// The inverse of Δ: `a(i,j) = b(i,j) − i + j` on gapless Magog triangles.
/// A gapped input is rejected with its first gap; a result failing monotone
/// validation would mean the input was outside the image (kept as a
/// defensive check — every valid gapless Magog triangle is in the image).
pub fn delta_inverse(b: &MagogTriangle) -> Result<MonotoneTriangle, Error> {
    if let Some(&gap) = find_gaps_magog(b).first() {
        return Err(Error::GapInDomain(gap));
    }
    let rows: Vec<Vec<u32>> = (1..=b.size())
        .map(|i| {
            (1..=i)
                .map(|j| (b.get(i, j) as i64 - i as i64 + j as i64) as u32)
                .collect()
        })
        .collect();
    let t = MonotoneTriangle::new(rows).map_err(|e| match e {
        Error::Invalid { report, .. } => Error::NotInImage { report },
        other => other,
    })?;
    if let Some(&gap) = find_gaps_monotone(&t).first() {
        let mut report = Report::default();
        report.push(Violation::ColumnStepTooLarge {
            row: gap.row,
            col: gap.col,
        });
        return Err(Error::NotInImage { report });
    }
    Ok(t)
}

/// The sign matrix of a Gog word: row `r` carries +1 at the odd-position
/// entries of letter `r` and −1 at its even-position entries. Total on
/// validated words (validation already checked the matrix is an ASM).
pub fn gog_word_to_asm(w: &GogWord) -> Asm {
    let n = w.size();
    let mut matrix = vec![vec![0i8; n]; n];
    for (r, letter) in w.letters().iter().enumerate() {
        for (idx, &v) in letter.entries().iter().enumerate() {
            matrix[r][(v - 1) as usize] = if idx % 2 == 0 { 1 } else { -1 };
        }
    }
    Asm::from_entries_unchecked(matrix)
}

/// The Gog word of an ASM: letter `r` lists the columns of the nonzero
/// entries of row `r` in increasing order (their signs alternate starting
/// and ending with +1, so each letter is a valid odd-length tuple).
pub fn asm_to_gog_word(a: &Asm) -> GogWord {
    let n = a.size();
    let letters: Vec<GogTuple> = (1..=n)
        .map(|r| {
            let entries: Vec<u32> = (1..=n)
                .filter(|&c| a.get(r, c) != 0)
                .map(|c| c as u32)
                .collect();
            GogTuple::from_entries_unchecked(entries)
        })
        .collect();
    GogWord::from_tuples_unchecked(letters)
}

/// The monotone triangle of a Gog word: row 1 is the first letter; row `i`
/// is row `i − 1` with the even-position entries of letter `i` removed and
/// its odd-position entries inserted, sorted.
pub fn gog_word_to_monotone(w: &GogWord) -> MonotoneTriangle {
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(w.size());
    let mut current: Vec<u32> = Vec::new();
    for letter in w.letters() {
        for v in letter.even_entries() {
            let pos = current
                .iter()
                .position(|&x| x == v)
                .expect("even-position entries of a valid word occur in the previous row");
            current.remove(pos);
        }
        for v in letter.odd_entries() {
            let pos = current.partition_point(|&x| x < v);
            current.insert(pos, v);
        }
        rows.push(current.clone());
    }
    MonotoneTriangle::from_rows_unchecked(rows)
}

/// The Gog word of a monotone triangle: letter `i` is the sorted symmetric
/// difference of rows `i` and `i − 1` (equivalently, interleave the two rows
/// and delete both copies of every repeated value).
pub fn monotone_to_gog_word(t: &MonotoneTriangle) -> GogWord {
    let n = t.size();
    let mut letters: Vec<GogTuple> = Vec::with_capacity(n);
    let empty: Vec<u32> = Vec::new();
    for i in 0..n {
        let prev = if i == 0 { &empty } else { &t.rows()[i - 1] };
        let curr = &t.rows()[i];
        let mut entries = Vec::with_capacity(2 * i + 1);
        let (mut a, mut b) = (0usize, 0usize);
        while a < curr.len() || b < prev.len() {
            if b == prev.len() || (a < curr.len() && curr[a] < prev[b]) {
                entries.push(curr[a]);
                a += 1;
            } else if a == curr.len() || prev[b] < curr[a] {
                entries.push(prev[b]);
                b += 1;
            } else {
                // Present in both rows: drop both copies.
                a += 1;
                b += 1;
            }
        }
        letters.push(GogTuple::from_entries_unchecked(entries));
    }
    GogWord::from_tuples_unchecked(letters)
}

/// ASM → monotone triangle, composed through the Gog word.
pub fn asm_to_monotone(a: &Asm) -> MonotoneTriangle {
    gog_word_to_monotone(&asm_to_gog_word(a))
}

/// Monotone triangle → ASM, composed through the Gog word.
pub fn monotone_to_asm(t: &MonotoneTriangle) -> Asm {
    gog_word_to_asm(&monotone_to_gog_word(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{GapPosition, Permutation};

    fn tri(rows: &[&[u32]]) -> MonotoneTriangle {
        MonotoneTriangle::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn magog(rows: &[&[u32]]) -> MagogTriangle {
        MagogTriangle::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn shape_of_worked_example() {
        let t = tri(&[&[3], &[2, 4], &[2, 3, 4], &[1, 2, 3, 4]]);
        let s = shape_of(&t).unwrap();
        assert_eq!(s.rows(), &[vec![1], vec![0, 1], vec![1, 1, 1]]);
        let words = s.column_words();
        assert_eq!(words[0].to_bits(), vec![1]);
        assert_eq!(words[1].to_bits(), vec![1, 1]);
        assert_eq!(words[2].to_bits(), vec![1, 0, 1]);
        assert_eq!(shape_to_triangle(&s), t);
        assert_eq!(Shape::from_column_words(&words).unwrap(), s);
    }

    #[test]
    fn shape_of_more_examples() {
        let identity = tri(&[&[1], &[1, 2], &[1, 2, 3]]);
        let s = shape_of(&identity).unwrap();
        assert_eq!(s.rows(), &[vec![0], vec![0, 0]]);

        let t = tri(&[&[2], &[2, 3], &[1, 2, 4], &[1, 2, 3, 4]]);
        let s = shape_of(&t).unwrap();
        assert_eq!(s.rows(), &[vec![0], vec![1, 1], vec![0, 0, 1]]);
        assert_eq!(shape_to_triangle(&s), t);

        let single = tri(&[&[1]]);
        let s = shape_of(&single).unwrap();
        assert_eq!(s.size(), 0);
        assert_eq!(shape_to_triangle(&s), single);
    }

    #[test]
    fn shape_of_rejects_gapped_input() {
        let gapped = tri(&[&[4], &[3, 4], &[1, 3, 4], &[1, 2, 3, 4]]);
        assert_eq!(
            shape_of(&gapped),
            Err(Error::GapInDomain(GapPosition { row: 2, col: 1 }))
        );
    }

    #[test]
    fn shape_validation_rejects_incompatible_columns() {
        assert_eq!(
            Shape::new(vec![vec![0], vec![1, 0]]),
            Err(Error::IncompatibleColumns {
                left: 1,
                right: 2,
                index: 1
            })
        );
        assert!(Shape::new(vec![vec![0, 1]]).is_err());
        assert!(Shape::new(vec![vec![2]]).is_err());
        // The empty shape is the unique shape of the size-1 triangle.
        assert_eq!(Shape::new(vec![]).unwrap().triangle_size(), 1);
    }

    #[test]
    fn shape_json_and_display() {
        let s = Shape::new(vec![vec![1], vec![0, 1]]).unwrap();
        let json = s.to_json();
        assert_eq!(json, r#"{"rows":[[1],[0,1]]}"#);
        assert_eq!(Shape::from_json(&json).unwrap(), s);
        assert_eq!(s.to_string(), "1\n0 1");
    }

    #[test]
    fn delta_worked_example() {
        let t = tri(&[&[2], &[2, 3], &[1, 2, 4], &[1, 2, 3, 4]]);
        let b = delta(&t).unwrap();
        assert_eq!(
            b.rows(),
            &[vec![2], vec![3, 3], vec![3, 3, 4], vec![4, 4, 4, 4]]
        );
        assert!(find_gaps_magog(&b).is_empty());
        assert_eq!(delta_inverse(&b).unwrap(), t);

        // Gap/difference duality at every interior position.
        for i in 1..t.size() {
            for j in 1..=i {
                let lhs = t.get(i, j) - t.get(i + 1, j);
                let rhs = b.get(i + 1, j) - b.get(i, j);
                assert_eq!(lhs + rhs, 1, "duality at ({i}, {j})");
            }
        }
    }

    #[test]
    fn delta_identity_triangle() {
        let identity = tri(&[&[1], &[1, 2], &[1, 2, 3]]);
        let b = delta(&identity).unwrap();
        assert_eq!(b.rows(), &[vec![1], vec![2, 2], vec![3, 3, 3]]);
    }

    #[test]
    fn delta_rejects_gapped_input() {
        let gapped = tri(&[&[4], &[3, 4], &[1, 3, 4], &[1, 2, 3, 4]]);
        assert_eq!(
            delta(&gapped),
            Err(Error::GapInDomain(GapPosition { row: 2, col: 1 }))
        );
    }

    #[test]
    fn delta_inverse_rejects_gapped_magog() {
        let gapped = magog(&[&[1], &[3, 3], &[3, 3, 3]]);
        assert_eq!(
            delta_inverse(&gapped),
            Err(Error::GapInDomain(GapPosition { row: 1, col: 1 }))
        );
    }

    #[test]
    fn word_asm_worked_examples() {
        let w: GogWord = "213".parse().unwrap();
        let a = gog_word_to_asm(&w);
        assert_eq!(
            a.entries(),
            &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]
        );
        assert_eq!(asm_to_gog_word(&a), w);

        let w: GogWord = "2(123)2".parse().unwrap();
        let a = gog_word_to_asm(&w);
        assert_eq!(
            a.entries(),
            &[vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]
        );
        assert_eq!(asm_to_gog_word(&a), w);
    }

    #[test]
    fn word_triangle_worked_examples() {
        // The parser accepts parenthesized singletons as written in prose.
        let w: GogWord = "(3)(1)(234)(3)".parse().unwrap();
        assert_eq!(w.to_string(), "31(234)3");
        let t = gog_word_to_monotone(&w);
        assert_eq!(t, tri(&[&[3], &[1, 3], &[1, 2, 4], &[1, 2, 3, 4]]));
        assert_eq!(monotone_to_gog_word(&t), w);

        let identity = tri(&[&[1], &[1, 2], &[1, 2, 3], &[1, 2, 3, 4]]);
        assert_eq!(monotone_to_gog_word(&identity).to_string(), "1234");

        let perm_triangle = tri(&[&[4], &[3, 4], &[1, 3, 4], &[1, 2, 3, 4]]);
        assert_eq!(monotone_to_gog_word(&perm_triangle).to_string(), "4312");

        let w: GogWord = "25(12456)(345)(234)3".parse().unwrap();
        let t = gog_word_to_monotone(&w);
        assert_eq!(monotone_to_gog_word(&t), w);
    }

    #[test]
    fn asm_triangle_composition() {
        let p: Permutation = "4312".parse().unwrap();
        let a = Asm::from_permutation(&p);
        let t = asm_to_monotone(&a);
        assert_eq!(t, tri(&[&[4], &[3, 4], &[1, 3, 4], &[1, 2, 3, 4]]));
        assert_eq!(monotone_to_asm(&t), a);
    }
}
