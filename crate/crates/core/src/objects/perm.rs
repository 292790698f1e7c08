use super::{Report, Violation};
use crate::error::{Error, ObjectKind};
use std::fmt;
use std::str::FromStr;

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self, Error> {
        let n = values.len() as u32;
        let mut report = Report::default();
        if values.is_empty() {
            report.push(Violation::Empty);
        }
        let mut seen = vec![false; values.len()];
        for (pos, &v) in values.iter().enumerate() {
            if v == 0 || v > n {
                report.push(Violation::ValueOutOfRange { pos: pos + 1 });
            } else if seen[(v - 1) as usize] {
                report.push(Violation::DuplicateValue { pos: pos + 1 });
            } else {
                seen[(v - 1) as usize] = true;
            }
        }
        if report.ok() {
            Ok(Self { values })
        } else {
            Err(Error::Invalid {
                kind: ObjectKind::Permutation,
                report,
            })
        }
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Value `p(i)` in 1-based coordinates.
    pub fn get(&self, i: usize) -> u32 {
        self.values[i - 1]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.iter().all(|&v| v <= 9) {
            for v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.values.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts juxtaposed single digits (`"4312"`) or comma-separated values
    /// (`"10,9,...,1"`); the comma form is required once any value exceeds 9.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let values = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("invalid value {tok:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("invalid digit {c:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_parsing() {
        let p: Permutation = "4312".parse().unwrap();
        assert_eq!(p.values(), &[4, 3, 1, 2]);
        assert_eq!(p.to_string(), "4312");

        let p: Permutation = "10,2,3,4,5,6,7,8,9,1".parse().unwrap();
        assert_eq!(p.get(1), 10);
        assert_eq!(p.to_string(), "10,2,3,4,5,6,7,8,9,1");
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(matches!(
            Permutation::new(vec![1, 1]),
            Err(Error::Invalid { kind: ObjectKind::Permutation, ref report })
                if report.violations == vec![Violation::DuplicateValue { pos: 2 }]
        ));
        assert!(Permutation::new(vec![0]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!("4x12".parse::<Permutation>().is_err());
    }
}
